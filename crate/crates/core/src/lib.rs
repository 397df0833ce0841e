//! Exact computation of the G-Hilbert scheme fan for the cyclic group action
//! `1/r(1, a, r-a)` on `C^3`.
//!
//! Everything is integer or rational arithmetic; nothing is approximated.
//! Actions are canonicalized so that `a < r - a` (see [`GroupAction`]).

pub mod cones;
pub mod error;
pub mod euclid;
pub mod fan;
pub mod geometry;
pub mod gigsaw;
pub mod gset;
pub mod lattice;

pub use cones::{sigma, Cone, ConeKind};
pub use error::{Error, Result};
pub use euclid::{predicted_count, primitive_sequence, EuclidTrace, PrimitiveSequence};
pub use fan::{build_fan, rho_chain, validate_fan, Check, Fan, FanCone, FanReport, Region, Triangle};
pub use gigsaw::{transform, Direction};
pub use gset::{enumerate_all, gamma_x, gamma_yz, GSet, GSetViolation};
pub use lattice::{ExponentTriple, GroupAction, NVector};
