//! Compliance of the primitive flexure elements.

mod beam;
mod hinge;
pub mod torsion;

pub use beam::{beam_compliance, BeamGeometry};
pub use hinge::{
    hinge_compliance, hinge_kernels, notch_thickness, torsion_case_boundaries,
    torsion_compliance_hinge, HingeGeometry, HingeKernels,
};
pub use torsion::{torsion_beta, torsion_constant, TorsionProfile};

use crate::error::{Error, Result};

/// Timoshenko shear coefficient of a rectangular section.
pub const SHEAR_COEFFICIENT: f64 = 6.0 / 5.0;

fn check_dimension(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidGeometry(format!("{name} must be positive, got {v}")))
    }
}
