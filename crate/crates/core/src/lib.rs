//! Spatial stiffness of compound flexure mechanisms.
//!
//! Units are N, mm and rad throughout. Wrenches are ordered
//! `(Fx, Fy, Fz, Mx, My, Mz)` and twists `(dx, dy, dz, θx, θy, θz)`.

pub mod analysis;
pub mod commands;
pub mod elements;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod materials;
pub mod mechanism;
pub mod quadrature;
pub mod spatial;

pub use error::{Error, Result};
pub use spatial::{FramePlacement, MatrixKind, SpatialMatrix6, Vec3};
