//! Exact algebra for polynomial vector fields on projective space.
//!
//! The crate decides whether a vector field leaves a subvariety invariant,
//! computes Castelnuovo–Mumford regularity of arithmetically Cohen–Macaulay
//! ideals through a generic Artinian reduction, and builds the projected
//! vector field of a generic central projection together with a certificate
//! that can be re-verified by exact ideal membership.

pub mod acm;
pub mod bounds;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod polymatrix;
pub mod project;
pub mod random;
pub mod scalar;
pub mod vfield;

pub use error::{AlgebraError, Result};
pub use groebner::{GroebnerBasis, HilbertData, Ideal, MembershipWitness};
pub use linalg::Matrix;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring};
pub use parse::{parse_polynomial, ParseError};
pub use polymatrix::PolyMatrix;
pub use scalar::Scalar;
pub use vfield::VectorField;
