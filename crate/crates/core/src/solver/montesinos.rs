//! Closures `N(T(s/r) + T((u+tm)/t))` of a two-summand Montesinos tangle
//! with integral fillings `T(m)`.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{flat_map_range, Execution};
use crate::fourplat::{closure_sum, EquivalenceMode, TwoBridgeLink};
use crate::rational::gcd;
use crate::tangle::RationalTangle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub m: i64,
    /// Signed `st + ru + rtm`; the closure is `b(|p|, ·)`.
    pub p: i64,
    pub link: TwoBridgeLink,
}

/// The summands `T(s/r)`, `T(u/t)` of the Montesinos tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub u: i64,
}

impl FamilyParams {
    pub fn new(r: i64, s: i64, t: i64, u: i64) -> Result<Self> {
        if gcd(r, s) != 1 || gcd(t, u) != 1 {
            return Err(Error::InvalidSystem(format!("need gcd(r,s) = gcd(t,u) = 1, got r={r} s={s} t={t} u={u}")));
        }
        if r.abs() < 2 || t.abs() < 2 {
            return Err(Error::InvalidSystem(format!("summands must be non-integral, got |r|={} |t|={}", r.abs(), t.abs())));
        }
        Ok(Self { r, s, t, u })
    }

    /// Signed `st + ru + rtm`.
    pub fn p(&self, m: i64) -> Result<i64> {
        let (r, s, t, u, m) = (self.r as i128, self.s as i128, self.t as i128, self.u as i128, m as i128);
        i64::try_from(s * t + r * u + r * t * m).map_err(|_| Error::Overflow)
    }

    pub fn member(&self, m: i64, mode: EquivalenceMode) -> Result<FamilyMember> {
        let shifted = self.u.checked_add(self.t.checked_mul(m).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
        let link = closure_sum(
            &RationalTangle::from_fraction(self.s, self.r)?,
            &RationalTangle::from_fraction(shifted, self.t)?,
            mode,
        )?;
        Ok(FamilyMember { m, p: self.p(m)?, link })
    }

    /// Every `m` with `st + ru + rtm = target`: at most one.
    pub fn solve_signed(&self, target: i64) -> Option<i64> {
        let rest = target as i128 - (self.s as i128 * self.t as i128 + self.r as i128 * self.u as i128);
        let rt = self.r as i128 * self.t as i128;
        (rest % rt == 0).then(|| i64::try_from(rest / rt).ok()).flatten()
    }
}

/// Family members for every `m` in the range, in order of `m`.
pub fn montesinos_distance_one_family(
    params: FamilyParams,
    m_range: RangeInclusive<i64>,
    mode: EquivalenceMode,
    exec: Execution,
) -> Result<Vec<FamilyMember>> {
    family_members_where(params, m_range, mode, exec, |_| true)
}

/// Family members satisfying `keep`, scanned without materializing the rest.
pub fn family_members_where<F>(
    params: FamilyParams,
    m_range: RangeInclusive<i64>,
    mode: EquivalenceMode,
    exec: Execution,
    keep: F,
) -> Result<Vec<FamilyMember>>
where
    F: Fn(&FamilyMember) -> bool + Sync + Send,
{
    let (lo, hi) = (*m_range.start(), *m_range.end());
    if lo > hi {
        return Ok(Vec::new());
    }
    let end = hi.checked_add(1).ok_or(Error::Overflow)?;
    flat_map_range(exec, lo..end, |m| match params.member(m, mode) {
        Ok(x) if keep(&x) => vec![Ok(x)],
        Ok(_) => vec![],
        Err(e) => vec![Err(e)],
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourplat::TwoBridgeLink;
    use EquivalenceMode::*;

    #[test]
    fn substitution_examples() {
        let f = FamilyParams::new(3, 1, 3, 1).unwrap();
        let m0 = f.member(0, MirrorAgnostic).unwrap();
        assert_eq!(m0.p, 6);
        assert_eq!(m0.link, TwoBridgeLink::new(6, 1, MirrorAgnostic).unwrap());
        let g = FamilyParams::new(2, 1, 2, 1).unwrap();
        assert_eq!(g.member(0, MirrorAgnostic).unwrap().p, 4);
        assert_eq!(f.solve_signed(3), None);
        assert_eq!(f.solve_signed(-3), Some(-1));
        assert_eq!(f.solve_signed(15), Some(1));
    }

    #[test]
    fn closure_determinant_is_abs_p() {
        for (r, s, t, u) in [(3, 1, 3, 1), (5, 2, 3, -1), (2, 1, 7, 3), (-4, 1, 5, 2)] {
            let f = FamilyParams::new(r, s, t, u).unwrap();
            for m in -20..=20 {
                let x = f.member(m, Chiral).unwrap();
                assert_eq!(x.link.p(), x.p.abs(), "{r} {s} {t} {u} m={m}");
            }
        }
    }

    #[test]
    fn negative_p_gives_a_trefoil() {
        let f = FamilyParams::new(3, 1, 3, 1).unwrap();
        let x = f.member(-1, MirrorAgnostic).unwrap();
        assert_eq!(x.p, -3);
        assert_eq!(x.link, TwoBridgeLink::new(3, 1, MirrorAgnostic).unwrap());
    }

    #[test]
    fn validation() {
        assert!(FamilyParams::new(3, 3, 3, 1).is_err());
        assert!(FamilyParams::new(1, 0, 3, 1).is_err());
    }

    #[test]
    fn filtered_scan_matches_full_scan() {
        let f = FamilyParams::new(5, 2, 3, 1).unwrap();
        let all = montesinos_distance_one_family(f, -50..=50, MirrorAgnostic, Execution::Sequential).unwrap();
        let some = family_members_where(f, -50..=50, MirrorAgnostic, Execution::Parallel, |x| x.link.is_knot()).unwrap();
        let expected: Vec<_> = all.into_iter().filter(|x| x.link.is_knot()).collect();
        assert_eq!(some, expected);
    }
}
