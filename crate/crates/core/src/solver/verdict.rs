//! Named rules that justify what a solver keeps or discards.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A reason a solver applied. Each rule names the mathematical result it
/// rests on; rules are recorded, never re-derived at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `P = T(0)` is fixed by convention; the parental tangle is not solved for.
    ParentalConvention,
    /// Closure of a rational sum is a 4-plat, so `|u + i·r·v| = pᵢ`.
    FourPlatReduction,
    /// A ≥7-crossing 4-plat product forces the recombinant tangle to be integral.
    RecombinantIntegrality,
    /// A candidate's closure does not match a product.
    ProductMismatch,
    /// Sum of two rational tangles closes to a 4-plat, never a connected sum.
    RationalSumIsFourPlat,
    /// A lens-space and a reducible filling of a simple manifold are at distance ≤ 1.
    DistanceExclusion,
    /// At distance 1 only Montesinos tangles are classified.
    DistanceOneUnresolved,
    /// Montesinos tangles: only the `T(∞)` filling gives a connected sum.
    MontesinosFamily,
    /// Equal parental and recombinant tangles cannot give a prime and a composite closure.
    DistanceZero,
    /// A locally knotted solution carries its knotted arc into both closures.
    FactorMatch,
    /// The reduced core is rational.
    CoreRationality,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::ParentalConvention => "parental tangle convention",
            Rule::FourPlatReduction => "4-plat closure reduction",
            Rule::RecombinantIntegrality => "recombinant tangle is integral",
            Rule::ProductMismatch => "product mismatch",
            Rule::RationalSumIsFourPlat => "rational sum is a 4-plat",
            Rule::DistanceExclusion => "distance>1 prime exclusion",
            Rule::DistanceOneUnresolved => "distance-1 non-Montesinos prime tangles unresolved",
            Rule::MontesinosFamily => "distance-1 Montesinos family",
            Rule::DistanceZero => "distance-0 contradiction",
            Rule::FactorMatch => "locally knotted factor match",
            Rule::CoreRationality => "reduced core is rational",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::ParentalConvention => {
                "N(O+P) alone admits infinitely many (O,P); P=T(0) is the customary normalization"
            }
            Rule::FourPlatReduction => "N(T(a/b)+T(c/d)) = b(ad+bc, ad'+bc') with c'd-cd'=1 (Ernst-Sumners)",
            Rule::RecombinantIntegrality => {
                "prime 7-crossing knots are 4-plats; a lens space is Seifert fibred with at most two exceptional fibres"
            }
            Rule::ProductMismatch => "Schubert classification of 2-bridge links",
            Rule::RationalSumIsFourPlat => "N(A+B) of rational A, B is a 4-plat, hence prime",
            Rule::DistanceExclusion => {
                "exceptional Dehn fillings at maximal distance (Boyer-Zhang): lens space and reducible fillings satisfy Δ ≤ 1"
            }
            Rule::DistanceOneUnresolved => "reducible and cyclic fillings occur at distance one; no general classification",
            Rule::MontesinosFamily => {
                "N(T(s/r)+T(u/t)+T(m)) = b(st+ru+rtm, ·); only the T(∞) filling of a Montesinos tangle is composite"
            }
            Rule::DistanceZero => "P = R forces N(Q+P) = N(Q+R)",
            Rule::FactorMatch => "unique prime factorization of knots: the excised arc is a factor of every closure",
            Rule::CoreRationality => {
                "Cyclic Surgery Theorem (Culler-Gordon-Luecke-Shalen) and Moser's torus-knot surgeries: the core is unknotted"
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rule", 2)?;
        st.serialize_field("rule", self.name())?;
        st.serialize_field("citation", self.citation())?;
        st.end()
    }
}

/// A rule together with what it decided in this instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub rule: Rule,
    pub note: String,
}

impl Verdict {
    pub fn new(rule: Rule, note: impl Into<String>) -> Self {
        Self { rule, note: note.into() }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.note)
    }
}
