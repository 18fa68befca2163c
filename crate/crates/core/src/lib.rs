//! Exact arithmetic for moduli spaces of polarized hyperkähler manifolds of
//! K3^[n]-type and Kum^n-type.
//!
//! The crate answers, for a polarization type `(family, n, d, t)` (square
//! `2d`, divisibility `t`):
//!
//! - whether the moduli space is non-empty, with an explicit class
//!   `t·L + b·δ` realizing it ([`moduli::witness`]);
//! - how many connected components it has ([`moduli::component_count`]);
//! - whether the general member of some component is base point free or very
//!   ample ([`moduli::thresholds`]).
//!
//! [`oracle`] re-derives non-emptiness by brute force from the lattice
//! definitions in [`lattice`]. No floating point is used anywhere.

pub mod arith;
pub mod bundles;
pub mod error;
pub mod lattice;
pub mod moduli;
pub mod oracle;

pub use bundles::{BundleSpec, BundleStatus, SurfaceKind};
pub use error::{Error, Result};
pub use lattice::{Family, GramLattice, LatticeClass};
pub use moduli::{ModuliQuery, ModuliReport, Witness};
pub use oracle::SearchBounds;
