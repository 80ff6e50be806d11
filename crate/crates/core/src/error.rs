use thiserror::Error;

/// Failures of the centralizer and annihilator solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("elements belong to different algebras")]
    DifferentAlgebras,
    #[error("the elements do not commute")]
    NotCommuting,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("input must not be a constant")]
    ConstantInput,
    #[error("no annihilating polynomial with s-degree <= {max_s} and t-degree <= {t_bound}")]
    CapExhausted { max_s: u32, t_bound: u32 },
}
