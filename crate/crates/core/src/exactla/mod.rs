//! Exact scalar arithmetic and the dense kernel every other module
//! contracts against.

mod dense;
mod lincomb;
mod scalar;

pub use dense::{contract_mul, flat2, kron, split2, Matrix, Tensor3, Vector};
pub use lincomb::{BasisKey, LinComb};
pub use scalar::{field_ops, FieldDesc, FieldOp, Scalar, MAX_PRIME};
