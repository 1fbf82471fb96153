//! Finite permutation groups and subnormality criteria.
//!
//! Points are written 1-based in cycle notation and stored 0-based. Products
//! act on the right: `(p * q)(i) = q(p(i))`, and `x^g = g⁻¹ x g`.

pub mod arith;
pub mod config;
pub mod conjugacy;
pub mod error;
mod par;
pub mod catalog;
pub mod criteria;
pub mod group;
pub mod harness;
pub mod oracle;
pub mod perm;
pub mod structure;

pub use conjugacy::{ClassInfo, ClassSummary, ClassTable};
pub use error::{Error, Result};
pub use group::{PermGroup, SubgroupHandle};
pub use par::is_parallel;
pub use perm::Permutation;
