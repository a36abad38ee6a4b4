//! Parastatistics Fock spaces `V(p)` of the Lie superalgebra osp(3|2) and
//! the three-dimensional Wigner quantum oscillator realized inside them.
//!
//! The crate is split into three layers:
//!
//! * [`repcore`] builds the orthonormal basis of `V(p)` and applies the
//!   generators `c_1^±`, `c_2^±`, `h_1`, `h_2` exactly, term by term.
//! * [`superlin`] holds the graded operator algebra: super-brackets, sparse
//!   matrices over a truncated basis, the 5×5 defining realization and the
//!   triple-relation verifier.
//! * [`oscillator`] constructs the oscillator ladder operators and
//!   observables and checks the Wigner conditions, the spectrum and the
//!   (non)commutativity claims.
//!
//! [`verify`] bundles these checks into named suites with machine-readable
//! reports, and [`export`] writes operator matrices and spectra.

pub mod error;
pub mod export;
pub mod oscillator;
pub mod repcore;
pub mod superlin;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
