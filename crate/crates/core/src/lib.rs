//! Exact arithmetic for π-systems of symmetrizable Kac-Moody algebras.
//!
//! Roots are integer coefficient vectors over the simple roots of an
//! ambient generalized Cartan matrix. On top of the root engine sit the
//! π-system checks and reductions, the recognition of "Ext" diagrams, and
//! the counting of orbit classes.

pub mod counting;
pub mod error;
pub mod gcm;
pub mod linalg;
pub mod overext;
pub mod pisystem;
pub mod roots;

pub use counting::{
    canonicalize, enumerate_pi_systems, finite_mult, mult, mult_a1pp, mult_ext, CountOptions, MultReport, MultValue,
    OrbitClass,
};
pub use error::{Error, Result};
pub use gcm::{named_diagram, Classification, Gcm, GcmClass};
pub use overext::{ext_decompose, ext_subdiagrams, ExtDecomposition};
pub use pisystem::{check_pi_system, PiSystem, Sign};
pub use roots::{RootClass, RootSystem, WeylWord};
