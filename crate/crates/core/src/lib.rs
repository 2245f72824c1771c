//! Exact computations for diagonalisable group actions on embedded varieties:
//! graded polynomial rings, Gröbner bases, fixed loci, tangent weights and the
//! mod-p fixed-point congruences built on them.

pub mod cone;
pub mod error;
pub mod exec;
pub mod field;
pub mod fixed;
pub mod groebner;
pub mod group;
pub mod linalg;
pub mod localgeom;
pub mod poly;
pub mod quotient;
pub mod rost;
pub mod variety;

pub use error::{Error, Result};
pub use exec::Execution;
pub use field::{Field, Scalar};
pub use groebner::{GradedIdeal, GroebnerConfig};
pub use group::{AbelianGroup, CyclicQuotient, GroupElement};
pub use poly::{Monomial, MonomialOrder, Poly, Ring, WeightVector};
pub use variety::ActionModel;
