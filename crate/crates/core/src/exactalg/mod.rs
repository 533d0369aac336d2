//! Exact arithmetic: integer polynomials in `L`, integer matrices, lattice
//! normal forms and characteristic polynomials.

mod lpoly;
mod matrix;
mod qpoly;

pub use lpoly::LPoly;
pub use matrix::{
    quotient_lattice_action, restricted_action, saturated_span, split_action, IntMatrix,
    SplitAction, SublatticeBasis,
};
pub use qpoly::QPoly;
