//! Rational tangles, 2-bridge links and tangle equations.
//!
//! A rational tangle is identified with its extended rational fraction;
//! closures of rational tangles and their sums are 2-bridge links `b(p,q)`.
//! The [`solver`] module finds all tangle solutions to systems of
//! closure equations, and [`oracle`] recomputes link invariants from
//! explicit diagrams as an independent check.
//!
//! ```
//! use tangles::{closure_sum, EquivalenceMode, RationalTangle};
//!
//! let o = RationalTangle::from_fraction(-1, 2)?;
//! let r = RationalTangle::from_fraction(2, 1)?;
//! let k = closure_sum(&o, &r, EquivalenceMode::Chiral)?;
//! assert_eq!(k.to_string(), "b(3,2)");
//! # Ok::<(), tangles::Error>(())
//! ```

pub mod error;
pub mod exec;
pub mod fourplat;
pub mod oracle;
pub mod rational;
pub mod solver;
pub mod tangle;

pub use error::{Error, Result};
pub use exec::Execution;
pub use fourplat::{
    closure_denominator, closure_rational, closure_sum, equivalent, handed, infinity_closure_montesinos, schubert_normalize, CompositeKnot,
    EquivalenceMode, Handedness, KnotValue, TwoBridgeLink,
};
pub use rational::{cf_evaluate, cf_expand, ExtendedRational, TwistCoefficients};
pub use tangle::{add, Corner, distance, mirror, repeated_add, tangle_to_word, word_to_tangle, Move, MontesinosTangle, RationalTangle, Tangle, TwistWord};
