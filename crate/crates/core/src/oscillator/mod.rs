//! The three-dimensional Wigner quantum oscillator inside `V(p)`.
//!
//! Ladder operators `a_k^±` are built from the parastatistics generators,
//! position and momentum are recovered from them linearly, and every claim
//! about the system (compatibility conditions, spectrum, vector
//! transformation, anticommuting coordinates) is checked on the exact action.

mod checks;
mod observables;
mod oracle;
mod params;
mod spectrum;

pub use checks::{
    angular_form_difference, c1_form_so3_residual, compatibility_residual, energy_conservation_residual,
    heisenberg_residuals, hermiticity_residual, interior_norm, noncommutativity_report, number_sum_residual,
    vector_transform_residual, NoncommutativityReport, PairNorms, VectorKind,
};
pub use observables::{build_ladder, build_observables, levi_civita, Ladder, ObservableSet};
pub use oracle::{p1_oracle_equivalence, OracleReport};
pub use params::OscillatorParams;
pub use spectrum::{m3_eigenvalue_table, spectrum, EnergyLevel, M3Audit, M3Row, SpectrumReport};
