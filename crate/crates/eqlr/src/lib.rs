//! Exact computation of equivariant Littlewood-Richardson structure constants.
//!
//! Three independent routes are implemented and cross-checked:
//!
//! * the barred-tableau rule (sums of binomial weights over skew barred
//!   tableaux with Yamanouchi unbarred column word),
//! * the Knutson-Tao puzzle rule (sums of weights over triangle tilings,
//!   including the trapezoid extension), and
//! * a product-expansion oracle that multiplies factorial Schur functions
//!   and expands the product back into the factorial Schur basis by greedy
//!   leading-term elimination.
//!
//! All arithmetic is exact: polynomials are sparse with arbitrary-precision
//! integer coefficients. The `suites` module packages the identity,
//! involution, and bijection checks that tie the routes together.

pub mod error;
pub mod hatted;
pub mod partition;
pub mod phi;
pub mod poly;
pub mod puzzle;
pub mod schur;
pub mod suites;
pub mod tableaux;
pub mod weights;

pub use error::{Error, Result};
pub use partition::{BoundaryWord, Composition, Partition};
pub use poly::MPoly;
