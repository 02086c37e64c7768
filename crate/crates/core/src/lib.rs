//! Finite permutation groups, their subgroup lattices, modular and
//! submodular subgroups, and the group classes defined through them.
//!
//! The usual entry point is a [`GroupSpec`] (from the [`catalog`] or parsed
//! from text), closed into a [`Group`] and wrapped in a [`SubgroupLattice`]:
//!
//! ```
//! use std::sync::Arc;
//! use submodular::{catalog, classes, SubgroupLattice};
//!
//! let group = catalog::symmetric(3).close(100_000).unwrap();
//! let lattice = SubgroupLattice::new(Arc::new(group)).unwrap();
//! assert_eq!(lattice.len(), 6);
//! assert!(classes::is_strongly_supersoluble(&lattice).unwrap());
//! ```

pub mod catalog;
pub mod classes;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod lattice;
pub mod modularity;
pub mod perm;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use group::{ElementId, Epimorphism, Group};
pub use groupspec::GroupSpec;
pub use lattice::{Limits, SubgroupId, SubgroupLattice};
pub use perm::Permutation;
