//! Independent diagrammatic checks: diagrams built from twist words, the
//! Kauffman bracket and Jones polynomial, and the Goeritz determinant.

pub mod bracket;
pub mod diagram;
pub mod goeritz;
pub mod poly;
pub mod render;

pub use bracket::{equal_up_to_framing, jones, kauffman_bracket, kauffman_bracket_with, Jones};
pub use diagram::{diagram_from_twist_word, fourplat_diagram, Closure, PlanarDiagram, TangleDiagram, DEFAULT_CROSSING_CAP};
pub use goeritz::goeritz_determinant;
pub use poly::LaurentPolynomial;
pub use render::fourplat_svg;
