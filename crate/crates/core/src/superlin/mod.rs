//! Graded operator algebra over both realizations of osp(3|2).
//!
//! Operators are expression trees over the six generators. The same tree is
//! evaluated lazily on Fock states, column by column into a sparse matrix
//! over a truncated basis, or as a 5×5 matrix in the defining realization.

mod defining;
mod operator;
mod sparse;
mod triple;

pub use defining::{elementary, super_bracket5, DefiningRealization, Matrix5c};
pub use operator::{GradedOperator, Grade};
pub use sparse::{adjointness_residual, interior_adjoint_residual, matrix_of, SparseComplexMatrix};
pub use triple::{triple_relation_residual, Realization, TripleInstance, TripleReport};
