//! Exact computational invariant theory: quadratic-field scalars, polynomials,
//! binary and ternary forms, Pfaffians and Molien series.

pub mod binform;
pub mod exactnum;
pub mod hilbpow;
pub mod linalg;
pub mod molien;
pub mod mpoly;
pub mod projgeo;
pub mod skewpf;
pub mod ternary;

pub use exactnum::{QuadElem, RatFunc, Rational, Ring, UniPoly};
pub use mpoly::{BinaryForm, MPoly};
