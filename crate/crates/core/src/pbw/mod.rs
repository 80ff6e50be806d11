//! Skew PBW extensions: the defining data, validation, and arithmetic in
//! the standard monomial basis.
//!
//! Elements are kept in normal form `sum c_alpha x^alpha` with coefficients
//! on the left. Products are normalized by the two rewrite rules
//!
//! * `x_i r = sigma_i(r) x_i + delta_i(r)` (a variable passes a coefficient),
//! * `x_j x_i = c_ij x_i x_j + r_0 + sum_k r_k x_k` for `i < j`,
//!
//! applied right to left, with normal forms of `x_i * x^beta` cached per
//! algebra.

mod algebra;
mod element;
mod exponent;
mod order;
mod spec;

use thiserror::Error;

pub use algebra::Algebra;
pub use element::{Element, LeadingTerm};
pub use exponent::{Degree, Exponent};
pub use order::{MonomialOrder, OrderKind};
pub use spec::{
    validate_spec, AlgebraSpec, Condition, PairRelation, ValidationFailure, ValidationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("exponent vectors of different lengths")]
    LengthMismatch,
    #[error("precedence is not a permutation of the variables")]
    BadPrecedence,
    #[error("invalid algebra: {0}")]
    Invalid(ValidationReport),
}
