//! Rational and Montesinos tangle values, the twist moves `h`, `v`, `r`,
//! tangle sum, mirror image and the distance between rational tangles.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{cf_expand, ExtendedRational, TwistCoefficients};

/// The rational tangle `T(p/q)`. Two rational tangles are isomorphic exactly
/// when their fractions agree, so the fraction is the whole value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub struct RationalTangle(ExtendedRational);

impl RationalTangle {
    pub const ZERO: Self = Self(ExtendedRational::ZERO);
    pub const INFINITY: Self = Self(ExtendedRational::INFINITY);

    pub fn new(fraction: ExtendedRational) -> Self {
        Self(fraction)
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Self> {
        ExtendedRational::new(num, den).map(Self)
    }

    pub const fn integral(m: i64) -> Self {
        Self(ExtendedRational::integer(m))
    }

    pub fn fraction(&self) -> ExtendedRational {
        self.0
    }

    /// `T(m/1)`: a horizontal row of `m` half-twists.
    pub fn is_integral(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer `m` of an integral tangle `T(m)`.
    pub fn as_integer(&self) -> Option<i64> {
        self.is_integral().then_some(self.0.num())
    }

    pub fn is_infinity(&self) -> bool {
        self.0.is_infinite()
    }

    pub fn mirror(&self) -> Self {
        Self(-self.0)
    }
}

/// Mirror image, `T(p/q) ↦ T(-p/q)`.
pub fn mirror(t: &RationalTangle) -> RationalTangle {
    t.mirror()
}

impl fmt::Display for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({})", self.0)
    }
}

impl fmt::Debug for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<RationalTangle> for String {
    fn from(t: RationalTangle) -> String {
        t.to_string()
    }
}

/// `M(r₁, …, rₙ) = T(r₁) + … + T(rₙ)` with `n ≥ 2` and no integral summand.
///
/// Integral summands are absorbed into their left neighbour, so two values
/// built from the same sum compare equal. Summand order is kept. `T(∞)` is a
/// legal summand and is carried symbolically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub struct MontesinosTangle {
    summands: Vec<RationalTangle>,
}

impl MontesinosTangle {
    pub fn new(summands: Vec<RationalTangle>) -> Result<Self> {
        if summands.len() < 2 || summands.iter().any(RationalTangle::is_integral) {
            return Err(Error::DegenerateMontesinos);
        }
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[RationalTangle] {
        &self.summands
    }

    pub fn mirror(&self) -> Self {
        Self {
            summands: self.summands.iter().map(RationalTangle::mirror).collect(),
        }
    }
}

impl fmt::Display for MontesinosTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("M(")?;
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s.fraction())?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MontesinosTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<MontesinosTangle> for String {
    fn from(t: MontesinosTangle) -> String {
        t.to_string()
    }
}

/// The four boundary points of a tangle ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

/// A tangle value closed under adding rational tangles on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Tangle {
    Rational(RationalTangle),
    Montesinos(MontesinosTangle),
}

impl Tangle {
    pub fn as_rational(&self) -> Option<RationalTangle> {
        match self {
            Tangle::Rational(t) => Some(*t),
            Tangle::Montesinos(_) => None,
        }
    }

    pub fn mirror(&self) -> Self {
        match self {
            Tangle::Rational(t) => Tangle::Rational(t.mirror()),
            Tangle::Montesinos(m) => Tangle::Montesinos(m.mirror()),
        }
    }
}

impl From<RationalTangle> for Tangle {
    fn from(t: RationalTangle) -> Self {
        Tangle::Rational(t)
    }
}

impl From<MontesinosTangle> for Tangle {
    fn from(t: MontesinosTangle) -> Self {
        Tangle::Montesinos(t)
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tangle::Rational(t) => t.fmt(f),
            Tangle::Montesinos(m) => m.fmt(f),
        }
    }
}

/// Tangle sum `t1 + t2`.
///
/// Adding an integral tangle stays rational, `T(u/t) + T(m) = T((u+tm)/t)`,
/// and likewise `T(m) + T(x) = T(m+x)`. Two non-integral rational summands
/// form a Montesinos tangle. Only `T(∞) + T(∞)` is rejected.
pub fn add(t1: &Tangle, t2: &RationalTangle) -> Result<Tangle> {
    match t1 {
        Tangle::Rational(a) => {
            if a.is_infinity() && t2.is_infinity() {
                return Err(Error::InfinitePlusInfinite);
            }
            if a.is_integral() || t2.is_integral() {
                let sum = a.fraction().checked_add(t2.fraction())?;
                Ok(Tangle::Rational(RationalTangle(sum)))
            } else {
                Ok(Tangle::Montesinos(MontesinosTangle {
                    summands: vec![*a, *t2],
                }))
            }
        }
        Tangle::Montesinos(m) => {
            let mut summands = m.summands.clone();
            if let Some(k) = t2.as_integer() {
                let last = summands.last_mut().expect("Montesinos tangle is never empty");
                *last = RationalTangle(last.fraction().checked_add_integer(k)?);
            } else {
                summands.push(*t2);
            }
            Ok(Tangle::Montesinos(MontesinosTangle { summands }))
        }
    }
}

/// `t + m·r` for an integral `r = T(k)`: `T(u/v) ↦ T((u + m·k·v)/v)`.
pub fn repeated_add(t: &RationalTangle, r: &RationalTangle, m: u32) -> Result<RationalTangle> {
    let k = r
        .as_integer()
        .ok_or_else(|| Error::NotIntegral(r.fraction().to_string()))?;
    let step = k.checked_mul(m as i64).ok_or(Error::Overflow)?;
    Ok(RationalTangle(t.fraction().checked_add_integer(step)?))
}

/// `d(P, R) = |ps - rq|` for `P = T(p/q)`, `R = T(r/s)`.
pub fn distance(p: &RationalTangle, r: &RationalTangle) -> u64 {
    let (a, b) = (p.fraction().num() as i128, p.fraction().den() as i128);
    let (c, d) = (r.fraction().num() as i128, r.fraction().den() as i128);
    (a * d - c * b).unsigned_abs() as u64
}

/// One letter of a twist word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Move {
    /// `h^k`: `k` horizontal half-twists, `f ↦ f + k`.
    H(i64),
    /// `v^k`: `k` vertical half-twists, `f ↦ f / (k·f + 1)`.
    V(i64),
    /// Reflection, `f ↦ 1/f`.
    R,
}

impl Move {
    pub fn apply(&self, f: ExtendedRational) -> Result<ExtendedRational> {
        match *self {
            Move::H(k) => f.checked_add_integer(k),
            Move::V(k) => Ok(f.recip().checked_add_integer(k)?.recip()),
            Move::R => Ok(f.recip()),
        }
    }
}

/// A word in `h`, `v`, `r`, applied to `T(∞)` from the rightmost letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct TwistWord(pub Vec<Move>);

impl TwistWord {
    /// The Conway word `h^{a₁} r h^{a₂} r … h^{aₙ} r`.
    pub fn from_coefficients(c: &TwistCoefficients) -> Self {
        TwistWord(c.0.iter().flat_map(|&a| [Move::H(a), Move::R]).collect())
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    /// Total number of half-twists in the word.
    pub fn crossings(&self) -> u64 {
        self.0
            .iter()
            .map(|m| match m {
                Move::H(k) | Move::V(k) => k.unsigned_abs(),
                Move::R => 0,
            })
            .sum()
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match m {
                Move::H(k) => write!(f, "h^{k}")?,
                Move::V(k) => write!(f, "v^{k}")?,
                Move::R => f.write_str("r")?,
            }
        }
        Ok(())
    }
}

pub fn word_to_tangle(w: &TwistWord) -> Result<RationalTangle> {
    w.0.iter()
        .rev()
        .try_fold(ExtendedRational::INFINITY, |f, m| m.apply(f))
        .map(RationalTangle)
}

pub fn tangle_to_word(t: &RationalTangle) -> TwistWord {
    TwistWord::from_coefficients(&cf_expand(t.fraction()))
}
