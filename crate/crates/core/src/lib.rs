//! Exact counts of finite-index subgroups and conjugacy classes — hence
//! of `n`-fold coverings — for the orientable flat 3-manifolds G1 (the
//! 3-torus), G2 (dicosm) and G4 (tetracosm).
//!
//! Three independent routes to the same numbers:
//!
//! * [`closed_forms`] — closed formulas in divisor-sum functions;
//! * [`plets`] — direct enumeration of subgroups as 3-plets `(a, H, nu)`
//!   with conjugacy classes by orbit closure;
//! * [`lowindex`] — low-index coset-table search on the presentations,
//!   with no use of the structure theory at all.
//!
//! [`dirichlet`] additionally verifies the generating-function identities
//! coefficientwise, and [`numtheory`] / [`lattice`] / [`group_model`]
//! supply the arithmetic everything else is built on.

pub mod closed_forms;
pub mod dirichlet;
pub mod group_model;
pub mod lattice;
pub mod lowindex;
pub mod numtheory;
pub mod plets;

pub use closed_forms::{AmbientManifold, CountKind, CountQuery};
pub use group_model::{Ambient, GroupElement};
pub use lattice::{CosetRep, Sublattice2, Sublattice3};
pub use plets::{IsoType, Plet, SubgroupRecord};
