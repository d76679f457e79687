//! Exact finite-dimensional models of equivariant algebra constructions:
//! group actions and gradings, matrix stabilization, polynomial homotopies,
//! truncated classifying maps, crossed and smash products, and induction
//! from subgroups.

pub mod algebra;
pub mod check;
pub mod classify;
pub mod construct;
pub mod crossed;
pub mod equivariance;
pub mod error;
pub mod group;
pub mod homotopy;
pub mod induction;
pub mod linalg;
pub mod map;
pub mod scalar;

pub use algebra::{Algebra, AlgebraRef, Element, Filtration};
pub use check::{CheckBudget, Verdict, Violation};
pub use error::{Error, Result};
pub use group::{CosetSpace, FiniteGroup, GroupRef, Subgroup};
pub use linalg::{Echelon, Matrix, SparseVec};
pub use map::LinearMap;
pub use scalar::{Scalar, ScalarRing};
