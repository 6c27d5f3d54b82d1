//! Exact arithmetic on the extended rationals `Q ∪ {∞}` and the continued
//! fractions that label rational tangles.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A reduced fraction `num/den`, or `∞` (stored as `1/0`).
///
/// The denominator is never negative and `gcd(|num|, den) = 1`, so every
/// value has exactly one representation and derived equality is value
/// equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub struct ExtendedRational {
    num: i64,
    den: i64,
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Inverse of `a` modulo `modulus`, in `(0, modulus)`; `0` when `modulus = 1`.
pub fn mod_inverse(a: i64, modulus: i64) -> Result<i64> {
    if modulus <= 0 {
        return Err(Error::BadModulus(modulus));
    }
    let (g, x, _) = extended_gcd(a.rem_euclid(modulus), modulus);
    if g != 1 {
        return Err(Error::NotInvertible { a, modulus });
    }
    Ok(x.rem_euclid(modulus))
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

impl ExtendedRational {
    pub const INFINITY: Self = Self { num: 1, den: 0 };
    pub const ZERO: Self = Self { num: 0, den: 1 };
    pub const ONE: Self = Self { num: 1, den: 1 };

    /// Reduces `num/den` to canonical form. `k/0` collapses to `∞` for any `k ≠ 0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_wide(num as i128, den as i128)
    }

    fn from_wide(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return if num == 0 {
                Err(Error::UndefinedFraction)
            } else {
                Ok(Self::INFINITY)
            };
        }
        let g = {
            let (mut a, mut b) = (num.unsigned_abs(), den.unsigned_abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a as i128
        };
        let sign = if den < 0 { -1 } else { 1 };
        Ok(Self {
            num: narrow(sign * num / g)?,
            den: narrow(sign * den / g)?,
        })
    }

    pub const fn integer(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// `∞ + x = ∞` for finite `x`; `∞ + ∞` is an error.
    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        match (self.is_infinite(), rhs.is_infinite()) {
            (true, true) => Err(Error::InfinitePlusInfinite),
            (true, false) | (false, true) => Ok(Self::INFINITY),
            (false, false) => {
                let (a, b) = (self.num as i128, self.den as i128);
                let (c, d) = (rhs.num as i128, rhs.den as i128);
                Self::from_wide(a * d + b * c, b * d)
            }
        }
    }

    pub fn checked_add_integer(self, k: i64) -> Result<Self> {
        self.checked_add(Self::integer(k))
    }

    /// `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> Self {
        match self.num.cmp(&0) {
            Ordering::Equal => Self::INFINITY,
            Ordering::Greater => Self { num: self.den, den: self.num },
            Ordering::Less => Self { num: -self.den, den: -self.num },
        }
    }
}

impl std::ops::Neg for ExtendedRational {
    type Output = Self;

    /// `-∞ = ∞`: the projective line has a single point at infinity.
    fn neg(self) -> Self {
        if self.is_infinite() {
            self
        } else {
            Self { num: -self.num, den: self.den }
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => f.write_str("inf"),
            1 => write!(f, "{}", self.num),
            d => write!(f, "{}/{}", self.num, d),
        }
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<ExtendedRational> for String {
    fn from(x: ExtendedRational) -> String {
        x.to_string()
    }
}

/// Normalizes `num/den`; thin wrapper around [`ExtendedRational::new`].
pub fn normalize(num: i64, den: i64) -> Result<ExtendedRational> {
    ExtendedRational::new(num, den)
}

/// Coefficients `(a₁, …, aₙ)` of `a₁ + 1/(a₂ + … + 1/aₙ)`. The empty list is `∞`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct TwistCoefficients(pub Vec<i64>);

impl TwistCoefficients {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Number of half-twists, `Σ|aᵢ|`.
    pub fn crossings(&self) -> u64 {
        self.0.iter().map(|a| a.unsigned_abs()).sum()
    }
}

/// Evaluates the continued fraction from the innermost term outwards.
///
/// Panics if an intermediate value leaves the `i64` range.
pub fn cf_evaluate(c: &TwistCoefficients) -> ExtendedRational {
    c.0.iter()
        .rev()
        .fold(ExtendedRational::INFINITY, |acc, &a| {
            acc.recip()
                .checked_add_integer(a)
                .expect("continued fraction overflows i64")
        })
}

/// Expands `x` as a continued fraction.
///
/// Non-negative values use the floor-based Euclidean expansion, so every
/// coefficient after the first is positive. Negative values expand `-x` and
/// negate every coefficient, which keeps the expansion alternating-sign free
/// and its twist count minimal.
pub fn cf_expand(x: ExtendedRational) -> TwistCoefficients {
    if x.is_infinite() {
        return TwistCoefficients(Vec::new());
    }
    if x.num() < 0 {
        let mut c = cf_expand(-x);
        c.0.iter_mut().for_each(|a| *a = -*a);
        return c;
    }
    let (mut p, mut q) = (x.num(), x.den());
    let mut out = Vec::new();
    loop {
        let a = p.div_euclid(q);
        out.push(a);
        let r = p - a * q;
        if r == 0 {
            break;
        }
        (p, q) = (q, r);
    }
    TwistCoefficients(out)
}
