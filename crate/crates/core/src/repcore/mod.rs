//! Exact construction of the Fock space `V(p)`.
//!
//! States are finite combinations of basis labels `|mu12, mu22; mu11)`, and
//! every generator acts lazily on them with coefficients computed on demand,
//! so nothing here is truncated.

mod action;
mod coeff;
mod label;
mod state;

pub use action::{CoefficientScheme, FockSpace, Pair, Sign, Symbol};
pub use coeff::{coeff_g1, coeff_g2, parity_indicators};
pub use label::{enumerate_basis, validate_label, BasisLabel, FockBasis, LabelCheck};
pub use state::{inner_product, StateVector};
