use nalgebra::Matrix6;

use crate::error::{Error, Result};
use crate::spatial::{invert, MatrixKind, SpatialMatrix6};

/// A lockable vertical spring in series with the mechanism, acting on z only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalComplianceDatum {
    /// N/mm.
    pub stiffness_z: f64,
    pub lockable: bool,
}

impl VerticalComplianceDatum {
    pub fn new(stiffness_z: f64, lockable: bool) -> Result<Self> {
        if !(stiffness_z.is_finite() && stiffness_z > 0.0) {
            return Err(Error::InvalidGeometry(format!(
                "vertical stiffness must be positive, got {stiffness_z}"
            )));
        }
        Ok(Self { stiffness_z, lockable })
    }

    /// Stiffness of the mechanism carried on this spring. A locked stage
    /// leaves `k` unchanged.
    pub fn in_series(&self, k: &SpatialMatrix6, locked: bool) -> Result<SpatialMatrix6> {
        if k.kind() != MatrixKind::Stiffness {
            return Err(Error::KindMismatch {
                expected: MatrixKind::Stiffness,
                found: k.kind(),
            });
        }
        if locked {
            if !self.lockable {
                return Err(Error::InvalidGeometry("vertical stage is not lockable".into()));
            }
            return Ok(*k);
        }
        let mut spring = Matrix6::zeros();
        spring[(2, 2)] = 1.0 / self.stiffness_z;
        let c = invert(k)?;
        invert(&SpatialMatrix6::compliance(c.matrix() + spring))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn series_spring_adds_vertical_compliance() {
        let k = SpatialMatrix6::from_diagonal([160.0, 30.0, 2.4, 4700.0, 21900.0, 8600.0], MatrixKind::Stiffness);
        let v = VerticalComplianceDatum::new(2.4, true).unwrap();
        let soft = v.in_series(&k, false).unwrap();
        assert_relative_eq!(soft.at(3, 3), 1.2, max_relative = 1e-12);
        assert_relative_eq!(soft.at(1, 1), 160.0, max_relative = 1e-12);
        assert_eq!(v.in_series(&k, true).unwrap(), k);
        let fixed = VerticalComplianceDatum::new(2.4, false).unwrap();
        assert!(fixed.in_series(&k, true).is_err());
        assert!(VerticalComplianceDatum::new(0.0, true).is_err());
    }
}
