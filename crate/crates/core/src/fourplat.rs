//! 2-bridge (4-plat) links `b(p,q)`, Schubert's classification, numerator
//! closures of rational and Montesinos tangles, and connected sums.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{cf_expand, extended_gcd, gcd, mod_inverse, ExtendedRational};
use crate::tangle::{MontesinosTangle, RationalTangle};

/// Whether a link and its mirror image count as the same class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquivalenceMode {
    Chiral,
    #[default]
    MirrorAgnostic,
}

impl EquivalenceMode {
    pub fn is_mirror_agnostic(self) -> bool {
        self == EquivalenceMode::MirrorAgnostic
    }
}

impl fmt::Display for EquivalenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceMode::Chiral => "chiral",
            EquivalenceMode::MirrorAgnostic => "mirror-agnostic",
        })
    }
}

/// The 2-bridge link `b(p,q)` in Schubert notation.
///
/// Values are always held in the canonical representative produced by
/// [`schubert_normalize`] for the mode they were built under. `b(1,1)` is the
/// unknot and `b(0,1)` the two-component unlink.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "String")]
pub struct TwoBridgeLink {
    p: i64,
    q: i64,
}

pub const UNKNOT: TwoBridgeLink = TwoBridgeLink { p: 1, q: 1 };
pub const UNLINK: TwoBridgeLink = TwoBridgeLink { p: 0, q: 1 };

/// Canonical Schubert pair.
///
/// `b(p,q) = b(p,q')` iff `q' ≡ q^{±1} (mod p)`; in mirror-agnostic mode
/// `q' ≡ -q^{±1}` is identified as well. The representative is the smallest
/// odd member of that orbit inside `(0, p)`, or the smallest member when the
/// orbit has no odd element, which reproduces Schubert's odd normal form
/// (`b(3,1)`, `b(7,3)`, `b(11,5)`).
pub fn schubert_normalize(p: i64, q: i64, mode: EquivalenceMode) -> Result<TwoBridgeLink> {
    if p < 0 {
        return Err(Error::InvalidSchubertPair { p, q, reason: "p must be non-negative" });
    }
    if gcd(p, q) != 1 {
        return Err(Error::InvalidSchubertPair { p, q, reason: "p and q are not coprime" });
    }
    if p <= 1 {
        return Ok(TwoBridgeLink { p, q: 1 });
    }
    let q0 = q.rem_euclid(p);
    let inv = mod_inverse(q0, p)?;
    let mut orbit = vec![q0, inv];
    if mode.is_mirror_agnostic() {
        orbit.extend([p - q0, p - inv]);
    }
    let best_odd = orbit.iter().copied().filter(|x| x % 2 == 1).min();
    let q = best_odd.unwrap_or_else(|| *orbit.iter().min().expect("orbit is non-empty"));
    Ok(TwoBridgeLink { p, q })
}

impl TwoBridgeLink {
    pub fn new(p: i64, q: i64, mode: EquivalenceMode) -> Result<Self> {
        schubert_normalize(p, q, mode)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_knot(&self) -> bool {
        self.p % 2 == 1
    }

    pub fn components(&self) -> u32 {
        if self.is_knot() {
            1
        } else {
            2
        }
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }

    /// True for the unknot and the unlink, which cannot be connected-sum factors.
    pub fn is_degenerate(&self) -> bool {
        self.p < 2
    }

    pub fn renormalize(&self, mode: EquivalenceMode) -> Self {
        schubert_normalize(self.p, self.q, mode).expect("stored pair is valid")
    }

    /// `b(p,-q)`, canonical in chiral mode.
    pub fn mirror(&self) -> Self {
        schubert_normalize(self.p, -self.q, EquivalenceMode::Chiral).expect("stored pair is valid")
    }

    /// Class of a 2-bridge link is amphichiral iff `q² ≡ -1` or `q ≡ -q`, i.e. it
    /// equals its mirror.
    pub fn is_amphichiral(&self) -> bool {
        equivalent(self, &self.mirror(), EquivalenceMode::Chiral)
    }

    pub fn determinant(&self) -> u64 {
        self.p as u64
    }

    /// Crossing number, read off the all-positive continued fraction of `p/q'`
    /// minimized over the class.
    pub fn crossing_number(&self) -> u64 {
        if self.p <= 1 {
            return 0;
        }
        let p = self.p;
        let q0 = self.q.rem_euclid(p);
        let inv = mod_inverse(q0, p).expect("stored pair is valid");
        [q0, inv, p - q0, p - inv]
            .into_iter()
            .map(|q| {
                let x = ExtendedRational::new(p, q).expect("p > 1");
                cf_expand(x).crossings()
            })
            .min()
            .expect("orbit is non-empty")
    }

    /// Knot-table name of the mirror-agnostic class, when it has one.
    pub fn name(&self) -> Option<&'static str> {
        let key = self.renormalize(EquivalenceMode::MirrorAgnostic);
        NAME_TABLE.iter().find_map(|&(p, q, name)| {
            let entry = schubert_normalize(p, q, EquivalenceMode::MirrorAgnostic).ok()?;
            (entry == key).then_some(name)
        })
    }

    /// Looks up a knot-table name such as `"trefoil"`, `"7_2"` or
    /// `"figure-eight"`. Case, spaces and hyphens are ignored.
    pub fn from_name(name: &str) -> Option<TwoBridgeLink> {
        let key = |s: &str| -> String {
            s.chars().filter(|c| c.is_ascii_alphanumeric() || *c == '_').flat_map(char::to_lowercase).collect()
        };
        let wanted = key(name);
        if wanted.is_empty() {
            return None;
        }
        NAME_TABLE.iter().find_map(|&(p, q, entry)| {
            let full = key(entry);
            let short = key(entry.split(" (").next().unwrap_or(entry));
            let inner = entry
                .split_once('(')
                .map(|(_, rest)| key(rest.trim_end_matches(')')))
                .unwrap_or_default();
            let head = key(entry.split_whitespace().next().unwrap_or(entry));
            let hit = wanted == full || wanted == short || wanted == inner || (entry.contains(' ') && wanted == head);
            hit.then(|| schubert_normalize(p, q, EquivalenceMode::MirrorAgnostic).expect("table entries are valid"))
        })
    }

    /// Short human description, e.g. `"7-crossing 2-bridge knot"`.
    pub fn description(&self) -> String {
        match self.p {
            0 => "2-component unlink".to_owned(),
            1 => "unknot".to_owned(),
            _ => format!(
                "{}-crossing 2-bridge {}",
                self.crossing_number(),
                if self.is_knot() { "knot" } else { "link" }
            ),
        }
    }
}

/// `(p, q, name)` with the pair given as the Conway fraction `p/q`.
const NAME_TABLE: &[(i64, i64, &str)] = &[
    (0, 1, "unlink"),
    (1, 1, "unknot"),
    (2, 1, "Hopf link"),
    (3, 1, "trefoil"),
    (4, 1, "(2,4) torus link"),
    (5, 2, "figure-eight knot"),
    (5, 1, "5_1"),
    (7, 2, "5_2"),
    (8, 3, "Whitehead link"),
    (9, 2, "6_1 (Stevedore's knot)"),
    (11, 3, "6_2"),
    (13, 5, "6_3"),
    (7, 1, "7_1"),
    (11, 2, "7_2"),
    (13, 3, "7_3"),
    (15, 4, "7_4"),
    (17, 5, "7_5"),
    (19, 8, "7_6"),
    (21, 8, "7_7"),
];

impl fmt::Display for TwoBridgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

impl fmt::Debug for TwoBridgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<TwoBridgeLink> for String {
    fn from(k: TwoBridgeLink) -> String {
        k.to_string()
    }
}

pub fn equivalent(a: &TwoBridgeLink, b: &TwoBridgeLink, mode: EquivalenceMode) -> bool {
    a.renormalize(mode) == b.renormalize(mode)
}

/// Left or right handedness of a chiral torus-type class `b(p,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Left,
    Right,
}

/// The chiral representative of a `(2,p)` torus knot or link with the given
/// handedness.
///
/// Right-handed is `b(p,1) = N(T(p))`, whose diagram has only positive
/// crossings under the twist convention used throughout; left-handed is its
/// mirror `b(p,-1)`. With this convention `N(T(-1/2)+T(2)) = b(3,2)` is the
/// left-handed trefoil. Other classes carry no handedness name.
pub fn handed(class: &TwoBridgeLink, handedness: Handedness) -> Result<TwoBridgeLink> {
    let base = class.renormalize(EquivalenceMode::MirrorAgnostic);
    if base.p < 3 || base.q != 1 {
        return Err(Error::NoHandedness(base.to_string()));
    }
    let q = match handedness {
        Handedness::Right => 1,
        Handedness::Left => -1,
    };
    schubert_normalize(base.p, q, EquivalenceMode::Chiral)
}

/// `N(T(p/q)) = b(|p|, sign(p)·q)`. `N(T(∞))` is the unknot, `N(T(0))` the unlink.
pub fn closure_rational(t: &RationalTangle, mode: EquivalenceMode) -> TwoBridgeLink {
    let x = t.fraction();
    let (p, q) = if x.num() < 0 { (-x.num(), -x.den()) } else { (x.num(), x.den()) };
    schubert_normalize(p, q, mode).expect("reduced fraction gives a coprime pair")
}

/// `D(T(c/d)) = b(d, -c)`: the denominator closure is the numerator closure
/// of the rotated tangle `T(-d/c)`.
pub fn closure_denominator(t: &RationalTangle, mode: EquivalenceMode) -> TwoBridgeLink {
    let x = t.fraction();
    let rotated = RationalTangle::new(-x.recip());
    closure_rational(&rotated, mode)
}

/// `N(T(a/b) + T(c/d)) = b(ad + bc, ad' + bc')` where `c'd - cd' = 1`.
pub fn closure_sum(t1: &RationalTangle, t2: &RationalTangle, mode: EquivalenceMode) -> Result<TwoBridgeLink> {
    if t1.is_infinity() && t2.is_infinity() {
        return Err(Error::InfinitePlusInfinite);
    }
    let (a, b) = (t1.fraction().num() as i128, t1.fraction().den() as i128);
    let (c, d) = (t2.fraction().num(), t2.fraction().den());
    let (_, x, y) = extended_gcd(d, c);
    let (c_prime, d_prime) = (x as i128, -(y as i128));
    let (c, d) = (c as i128, d as i128);
    let mut p = a * d + b * c;
    let mut q = a * d_prime + b * c_prime;
    if p < 0 {
        (p, q) = (-p, -q);
    }
    let p = i64::try_from(p).map_err(|_| Error::Overflow)?;
    let q = i64::try_from(q.rem_euclid(p.max(1) as i128)).map_err(|_| Error::Overflow)?;
    let q = if p == 0 { 1 } else { q };
    schubert_normalize(p, q, mode)
}

/// A connected sum of at least two nontrivial 2-bridge links, as a multiset.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub struct CompositeKnot {
    factors: Vec<TwoBridgeLink>,
}

impl CompositeKnot {
    pub fn new(mut factors: Vec<TwoBridgeLink>) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::TooFewFactors(factors.len()));
        }
        if let Some(bad) = factors.iter().find(|f| f.is_degenerate()) {
            return Err(Error::TrivialFactor(bad.to_string()));
        }
        factors.sort();
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[TwoBridgeLink] {
        &self.factors
    }

    pub fn renormalize(&self, mode: EquivalenceMode) -> Self {
        let mut factors: Vec<_> = self.factors.iter().map(|f| f.renormalize(mode)).collect();
        factors.sort();
        Self { factors }
    }

    pub fn equivalent(&self, other: &Self, mode: EquivalenceMode) -> bool {
        self.renormalize(mode) == other.renormalize(mode)
    }

    pub fn determinant(&self) -> u64 {
        self.factors.iter().map(TwoBridgeLink::determinant).product()
    }
}

impl fmt::Display for CompositeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("#")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CompositeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<CompositeKnot> for String {
    fn from(k: CompositeKnot) -> String {
        k.to_string()
    }
}

/// `N(T(x₁) + … + T(xₙ) + T(∞))`: the connected sum of the denominator
/// closures of the summands. For `xᵢ = qᵢ/pᵢ` the factor is `b(pᵢ, -qᵢ)`.
pub fn infinity_closure_montesinos(m: &MontesinosTangle, mode: EquivalenceMode) -> Result<CompositeKnot> {
    let factors = m
        .summands()
        .iter()
        .map(|s| {
            let x = s.fraction();
            if x.is_infinite() {
                return Err(Error::TrivialFactor("N(T(0))".to_owned()));
            }
            schubert_normalize(x.den(), -x.num(), mode)
        })
        .collect::<Result<Vec<_>>>()?;
    CompositeKnot::new(factors)
}

/// A knot or link value: prime 2-bridge or a connected sum of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum KnotValue {
    TwoBridge(TwoBridgeLink),
    Composite(CompositeKnot),
}

impl KnotValue {
    pub fn determinant(&self) -> u64 {
        match self {
            KnotValue::TwoBridge(k) => k.determinant(),
            KnotValue::Composite(k) => k.determinant(),
        }
    }

    pub fn equivalent(&self, other: &Self, mode: EquivalenceMode) -> bool {
        match (self, other) {
            (KnotValue::TwoBridge(a), KnotValue::TwoBridge(b)) => equivalent(a, b, mode),
            (KnotValue::Composite(a), KnotValue::Composite(b)) => a.equivalent(b, mode),
            _ => false,
        }
    }
}

impl fmt::Display for KnotValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotValue::TwoBridge(k) => k.fmt(f),
            KnotValue::Composite(k) => k.fmt(f),
        }
    }
}

/// Determinant of a 2-bridge link or connected sum: `p`, multiplied over factors.
pub fn determinant(k: &KnotValue) -> u64 {
    k.determinant()
}
