//! Invariants and covariants of binary forms.

mod invariants;
mod klein;
mod sylvester;
mod transvectant;

use thiserror::Error;

pub use invariants::{
    catalecticant, classify_quartic, discriminant4, i_as_pfaffian, invariant_i, invariant_j, j_ratio, orbit_degree,
    quartic_i, quartic_j, QuarticClass,
};
pub use klein::{
    icosahedral_f, klein_regularity_check, klein_relation_check, octahedral_t, tetrahedral_phi, tetrahedral_psi,
    KleinCheck, KleinFamily,
};
pub use sylvester::{sylvester_decompose, Sylvester};
pub use transvectant::{covariant_t, transvectant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BinformError {
    #[error("expected a form of degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("transvectant order {n} exceeds a form degree")]
    OrderTooHigh { n: usize },
    #[error("quartic is not harmonic (J ≠ 0)")]
    NotHarmonic,
    #[error("square root of {0} needs a field extension beyond the active field")]
    FieldExtensionNeeded(String),
    #[error("zero form")]
    ZeroForm,
    #[error("quartic lies in the nullcone")]
    NullconeForm,
    #[error("no normalizing scalar found for {0}")]
    NoScalarFound(&'static str),
}

pub(crate) fn need_degree(f: &crate::mpoly::BinaryForm, d: usize) -> Result<(), BinformError> {
    if f.degree() == d {
        Ok(())
    } else {
        Err(BinformError::WrongDegree { expected: d, got: f.degree() })
    }
}
