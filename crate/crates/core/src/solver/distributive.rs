//! Distributive systems `N(Q + P) = K₁`, `N(Q + R) = K₂ # K₃`.

use std::fmt;

use serde::Serialize;

use super::montesinos::FamilyParams;
use super::verdict::{Rule, Verdict};
use crate::error::{Error, Result};
use crate::fourplat::{closure_sum, equivalent, schubert_normalize, CompositeKnot, EquivalenceMode, TwoBridgeLink};
use crate::rational::gcd;
use crate::tangle::{distance, Corner, MontesinosTangle, RationalTangle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributiveSystem {
    k1: TwoBridgeLink,
    product: CompositeKnot,
    p: RationalTangle,
    r: RationalTangle,
    mode: EquivalenceMode,
}

impl DistributiveSystem {
    pub fn new(
        k1: TwoBridgeLink,
        product: CompositeKnot,
        p: RationalTangle,
        r: RationalTangle,
        mode: EquivalenceMode,
    ) -> Result<Self> {
        if product.factors().len() != 2 {
            return Err(Error::InvalidSystem(format!(
                "product must have exactly two factors, got {}",
                product.factors().len()
            )));
        }
        Ok(Self {
            k1: k1.renormalize(mode),
            product: product.renormalize(mode),
            p,
            r,
            mode,
        })
    }

    pub fn k1(&self) -> TwoBridgeLink {
        self.k1
    }

    pub fn product(&self) -> &CompositeKnot {
        &self.product
    }

    pub fn p(&self) -> RationalTangle {
        self.p
    }

    pub fn r(&self) -> RationalTangle {
        self.r
    }

    pub fn mode(&self) -> EquivalenceMode {
        self.mode
    }
}

/// One of the two strings of a rational tangle, named by its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arc(pub Corner, pub Corner);

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}", self.0, self.1)
    }
}

/// The two strings of `T(p/q)`: the parities of `p` and `q` decide which
/// corner `NW` is joined to.
pub fn arcs(t: &RationalTangle) -> [Arc; 2] {
    use Corner::*;
    let x = t.fraction();
    match (x.num().rem_euclid(2), x.den().rem_euclid(2)) {
        (0, _) => [Arc(NW, NE), Arc(SW, SE)],
        (_, 0) => [Arc(NW, SW), Arc(NE, SE)],
        _ => [Arc(NW, SE), Arc(NE, SW)],
    }
}

/// A rational core with a knotted arc tied into one of its strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocallyKnottedSolution {
    pub core: RationalTangle,
    pub insert: TwoBridgeLink,
    pub placement: Arc,
    /// Biological plausibility. No formal criterion exists, so the solver
    /// leaves it unset.
    pub plausible: Option<bool>,
}

impl fmt::Display for LocallyKnottedSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with {} knotted into arc {}", self.core, self.insert, self.placement)
    }
}

/// A Montesinos tangle solving both equations at distance one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MontesinosSolution {
    pub tangle: MontesinosTangle,
    pub k1: TwoBridgeLink,
    pub product: CompositeKnot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bucket<T> {
    pub solutions: Vec<T>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeBucket {
    pub montesinos: Vec<MontesinosSolution>,
    /// Set when prime tangles outside the Montesinos family are not ruled out.
    pub non_montesinos_unresolved: bool,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSet {
    pub rational: Bucket<RationalTangle>,
    pub prime: PrimeBucket,
    pub locally_knotted: Bucket<LocallyKnottedSolution>,
    pub provenance: Vec<Verdict>,
    pub warnings: Vec<String>,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.rational.solutions.is_empty() && self.prime.montesinos.is_empty() && self.locally_knotted.solutions.is_empty()
    }
}

/// `|a·u + b·v| = rhs` printed the way a person would write it.
fn linear_form(a: i64, b: i64) -> String {
    let term = |c: i64, var: &str| match c {
        1 => var.to_owned(),
        -1 => format!("-{var}"),
        c => format!("{c}{var}"),
    };
    match (a, b) {
        (0, 0) => "0".into(),
        (a, 0) => term(a, "u"),
        (0, b) => term(b, "v"),
        (a, b) if b < 0 => format!("{}{}", term(a, "u"), term(b, "v")),
        (a, b) => format!("{}+{}", term(a, "u"), term(b, "v")),
    }
}

/// The reduced equations `N(Q̂ + P) = b(1,1)`, `N(Q̂ + R) = b(p, ·)` for
/// `Q̂ = T(u/v)`, as `|d_P u + c_P v| = 1` and `|d_R u + c_R v| = p`.
pub fn reduced_filter(p: &RationalTangle, r: &RationalTangle, p_other: i64) -> String {
    let (cp, dp) = (p.fraction().num(), p.fraction().den());
    let (cr, dr) = (r.fraction().num(), r.fraction().den());
    format!("|{}| = 1 and |{}| = {p_other}", linear_form(dp, cp), linear_form(dr, cr))
}

/// Rational `Q̂` with `N(Q̂ + P) = b(1,1)` and `N(Q̂ + R) = other`.
fn rational_cores(
    p: &RationalTangle,
    r: &RationalTangle,
    other: &TwoBridgeLink,
    mode: EquivalenceMode,
) -> Result<Vec<RationalTangle>> {
    let (cp, dp) = (p.fraction().num() as i128, p.fraction().den() as i128);
    let (cr, dr) = (r.fraction().num() as i128, r.fraction().den() as i128);
    let det = dp * cr - cp * dr;
    if det == 0 {
        return Ok(Vec::new());
    }
    let target = other.p() as i128;
    let mut out: Vec<RationalTangle> = Vec::new();
    for e1 in [1i128, -1] {
        for e2 in [target, -target] {
            let u_num = e1 * cr - cp * e2;
            let v_num = dp * e2 - dr * e1;
            if u_num % det != 0 || v_num % det != 0 {
                continue;
            }
            let (u, v) = (u_num / det, v_num / det);
            let (Ok(u), Ok(v)) = (i64::try_from(u), i64::try_from(v)) else {
                return Err(Error::Overflow);
            };
            if gcd(u, v) != 1 {
                continue;
            }
            let core = RationalTangle::from_fraction(u, v)?;
            if out.contains(&core) {
                continue;
            }
            let first = closure_sum(&core, p, mode)?;
            let second = closure_sum(&core, r, mode)?;
            if first.is_unknot() && equivalent(&second, other, mode) {
                out.push(core);
            }
        }
    }
    out.sort_by_key(|t| (t.fraction().den(), -t.fraction().num()));
    Ok(out)
}

/// Montesinos `Q` with `N(Q + T(m)) = K₁` and `N(Q + T(∞)) = product`.
fn montesinos_solutions(sys: &DistributiveSystem, m: i64) -> Result<Vec<MontesinosSolution>> {
    let mode = sys.mode;
    let residues = |k: &TwoBridgeLink| -> Vec<i64> {
        // s with D(T(s/p)) = b(p, -s) in the class of k
        (0..k.p())
            .filter(|&s| gcd(s, k.p()) == 1)
            .filter(|&s| schubert_normalize(k.p(), -s, mode).map(|x| x == *k).unwrap_or(false))
            .collect()
    };
    let [f1, f2] = [sys.product.factors()[0], sys.product.factors()[1]];
    let mut out: Vec<MontesinosSolution> = Vec::new();
    for (a, b) in [(f1, f2), (f2, f1)] {
        for s in residues(&a) {
            for u in residues(&b) {
                let params = FamilyParams::new(a.p(), s, b.p(), u)?;
                for target in [sys.k1.p(), -sys.k1.p()] {
                    let Some(mm) = params.solve_signed(target) else { continue };
                    let member = params.member(mm, mode)?;
                    if !equivalent(&member.link, &sys.k1, mode) {
                        continue;
                    }
                    let shifted = u + b.p() * (mm - m);
                    let tangle = MontesinosTangle::new(vec![
                        RationalTangle::from_fraction(s, a.p())?,
                        RationalTangle::from_fraction(shifted, b.p())?,
                    ])?;
                    if !out.iter().any(|x| x.tangle == tangle) {
                        out.push(MontesinosSolution { tangle, k1: member.link, product: sys.product.clone() });
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn solve_distributive(sys: &DistributiveSystem) -> Result<SolutionSet> {
    let mode = sys.mode;
    let d = distance(&sys.p, &sys.r);
    let mut provenance = Vec::new();
    let mut warnings = Vec::new();

    let rational = Bucket {
        solutions: Vec::new(),
        verdict: Verdict::new(Rule::RationalSumIsFourPlat, "the sum of two rational tangles gives a 4-plat"),
    };
    provenance.push(rational.verdict.clone());

    let prime = match d {
        0 => PrimeBucket {
            montesinos: Vec::new(),
            non_montesinos_unresolved: false,
            verdict: Verdict::new(Rule::DistanceZero, format!("d(P,R) = 0: {} cannot equal {}", sys.k1, sys.product)),
        },
        1 => {
            let (montesinos, note) = if sys.r.is_infinity() {
                let m = sys.p.as_integer().expect("distance 1 from T(inf) is integral");
                let found = montesinos_solutions(sys, m)?;
                let note = format!("R = T(inf), P = T({m}): {} Montesinos tangle(s)", found.len());
                (found, note)
            } else {
                (
                    Vec::new(),
                    "R is not T(inf): a Montesinos Q would give a three-branch Montesinos link, which is prime".to_owned(),
                )
            };
            provenance.push(Verdict::new(Rule::MontesinosFamily, note));
            warnings.push("prime non-Montesinos solutions at distance 1 are not classified".to_owned());
            PrimeBucket {
                montesinos,
                non_montesinos_unresolved: true,
                verdict: Verdict::new(Rule::DistanceOneUnresolved, "d(P,R) = 1: non-Montesinos prime tangles unresolved"),
            }
        }
        d => PrimeBucket {
            montesinos: Vec::new(),
            non_montesinos_unresolved: false,
            verdict: Verdict::new(
                Rule::DistanceExclusion,
                format!("d(P,R) = {d} > 1: there are no prime tangle solutions"),
            ),
        },
    };
    provenance.push(prime.verdict.clone());

    let factors = sys.product.factors();
    let matched: Vec<usize> = (0..2).filter(|&i| equivalent(&factors[i], &sys.k1, mode)).collect();
    let locally_knotted = if d == 0 {
        Bucket {
            solutions: Vec::new(),
            verdict: Verdict::new(Rule::DistanceZero, "d(P,R) = 0 admits no solution"),
        }
    } else if matched.is_empty() {
        Bucket {
            solutions: Vec::new(),
            verdict: Verdict::new(Rule::FactorMatch, format!("{} is not a factor of {}", sys.k1, sys.product)),
        }
    } else {
        let mut solutions = Vec::new();
        let mut notes = Vec::new();
        let mut seen_other: Vec<TwoBridgeLink> = Vec::new();
        for &i in &matched {
            let insert = factors[i];
            let other = factors[1 - i];
            if seen_other.contains(&other) {
                continue;
            }
            seen_other.push(other);
            let cores = rational_cores(&sys.p, &sys.r, &other, mode)?;
            notes.push(format!(
                "excise {insert}: {} gives Q^ in {{{}}}",
                reduced_filter(&sys.p, &sys.r, other.p()),
                cores.iter().map(|c| c.fraction().to_string()).collect::<Vec<_>>().join(", ")
            ));
            for core in cores {
                for placement in arcs(&core) {
                    solutions.push(LocallyKnottedSolution { core, insert, placement, plausible: None });
                }
            }
        }
        provenance.push(Verdict::new(Rule::CoreRationality, "Q^ restricted to rational tangles"));
        Bucket { solutions, verdict: Verdict::new(Rule::FactorMatch, notes.join("; ")) }
    };
    provenance.push(locally_knotted.verdict.clone());

    Ok(SolutionSet { rational, prime, locally_knotted, provenance, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourplat::infinity_closure_montesinos;
    use EquivalenceMode::*;

    fn b(p: i64, q: i64) -> TwoBridgeLink {
        TwoBridgeLink::new(p, q, MirrorAgnostic).unwrap()
    }

    fn t(p: i64, q: i64) -> RationalTangle {
        RationalTangle::from_fraction(p, q).unwrap()
    }

    fn hin(k1: TwoBridgeLink) -> DistributiveSystem {
        let product = CompositeKnot::new(vec![b(3, 1), b(3, 1)]).unwrap();
        DistributiveSystem::new(k1, product, RationalTangle::ZERO, RationalTangle::integral(2), MirrorAgnostic).unwrap()
    }

    #[test]
    fn hin_distributive() {
        let set = solve_distributive(&hin(b(3, 1))).unwrap();
        assert!(set.rational.solutions.is_empty());
        assert!(set.prime.montesinos.is_empty());
        assert_eq!(set.prime.verdict.rule, Rule::DistanceExclusion);
        assert_eq!(set.locally_knotted.solutions.len(), 4);
        let cores: Vec<_> = set.locally_knotted.solutions.iter().map(|s| s.core).collect();
        assert_eq!(cores, vec![t(1, 1), t(1, 1), t(-1, 2), t(-1, 2)]);
        assert!(set.locally_knotted.verdict.note.contains("|u| = 1 and |u+2v| = 3"));
        for s in &set.locally_knotted.solutions {
            assert!(equivalent(&s.insert, &b(3, 1), MirrorAgnostic));
            assert!(closure_sum(&s.core, &RationalTangle::ZERO, MirrorAgnostic).unwrap().is_unknot());
            assert_eq!(closure_sum(&s.core, &RationalTangle::integral(2), MirrorAgnostic).unwrap(), b(3, 1));
        }
    }

    #[test]
    fn unmatched_factor() {
        let set = solve_distributive(&hin(b(5, 1))).unwrap();
        assert!(set.is_empty());
        assert_eq!(set.locally_knotted.verdict.rule, Rule::FactorMatch);
    }

    #[test]
    fn arcs_by_parity() {
        use Corner::*;
        assert_eq!(arcs(&RationalTangle::ZERO)[0], Arc(NW, NE));
        assert_eq!(arcs(&RationalTangle::INFINITY)[0], Arc(NW, SW));
        assert_eq!(arcs(&t(1, 1))[0], Arc(NW, SE));
        assert_eq!(arcs(&t(-1, 2))[0], Arc(NW, SW));
        assert_eq!(arcs(&t(3, 2))[0], Arc(NW, SW));
        assert_eq!(arcs(&t(2, 3))[0], Arc(NW, NE));
    }

    #[test]
    fn linear_forms() {
        assert_eq!(linear_form(1, 0), "u");
        assert_eq!(linear_form(1, 2), "u+2v");
        assert_eq!(linear_form(3, -1), "3u-v");
        assert_eq!(linear_form(0, -2), "-2v");
    }

    #[test]
    fn distance_one_montesinos_family() {
        // trefoil # trefoil from the T(inf) filling, trefoil from T(0)
        let product = CompositeKnot::new(vec![b(3, 1), b(3, 1)]).unwrap();
        let sys = DistributiveSystem::new(b(3, 1), product, RationalTangle::ZERO, RationalTangle::INFINITY, MirrorAgnostic)
            .unwrap();
        let set = solve_distributive(&sys).unwrap();
        assert!(set.prime.non_montesinos_unresolved);
        assert!(!set.prime.montesinos.is_empty());
        for s in &set.prime.montesinos {
            let q = &s.tangle;
            let [x, y] = [q.summands()[0], q.summands()[1]];
            let k1 = closure_sum(&x, &y, MirrorAgnostic).unwrap();
            assert_eq!(k1, b(3, 1), "{q}");
            let composite = infinity_closure_montesinos(q, MirrorAgnostic).unwrap();
            assert!(composite.equivalent(sys.product(), MirrorAgnostic), "{q}");
        }
    }

    #[test]
    fn distance_zero() {
        let product = CompositeKnot::new(vec![b(3, 1), b(3, 1)]).unwrap();
        let sys =
            DistributiveSystem::new(b(3, 1), product, RationalTangle::ZERO, RationalTangle::ZERO, MirrorAgnostic).unwrap();
        let set = solve_distributive(&sys).unwrap();
        assert!(set.is_empty());
        assert_eq!(set.prime.verdict.rule, Rule::DistanceZero);
    }
}
