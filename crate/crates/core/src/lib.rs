//! Exact arithmetic in skew PBW extensions over Q, Q[y1..ym] and Q(y),
//! with centralizer computations and annihilating polynomials for
//! commuting pairs.
//!
//! ```
//! use skewpbw::dsl::{parse_element, preset};
//!
//! let alg = preset("q-weyl").unwrap();
//! let f = parse_element(&alg, "x*y").unwrap();
//! assert_eq!(f.to_string(), "2*y*x + 1");
//! ```

pub mod burchnall;
pub mod centralizer;
pub mod coeff;
pub mod dsl;
mod error;
mod linalg;
pub mod pbw;
pub mod random;

pub use burchnall::{Annihilator, BivariatePoly, BoundsConfig};
pub use centralizer::CentralizerBasis;
pub use coeff::{Coeff, CoeffError, CoeffRing};
pub use error::SolveError;
pub use pbw::{
    Algebra, AlgebraSpec, Degree, Element, Exponent, LeadingTerm, MonomialOrder, OrderKind,
    PairRelation, PbwError,
};
