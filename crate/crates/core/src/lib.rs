//! Exact computation of the stringy E-polynomial of the relative symmetric
//! product `Z^(n)` of a local semistable surface degeneration without triple
//! points, together with the toric fans behind it and an independent
//! Burnside-style oracle for the quotient E-polynomials.
//!
//! All arithmetic is exact. Polynomials are in `L`, the class of the affine
//! line.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod oracle;
pub mod report;
pub mod sectors;
pub mod stringy;
pub mod symfun;
pub mod toric;

pub use error::{Error, Result};
