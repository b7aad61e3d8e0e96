//! Isotropic material constants and the measured single-joint catalog.

use crate::error::{Error, Result};

/// Caveat attached to every isotropic material built from printed parts.
pub const ISOTROPY_CAVEAT: &str =
    "isotropy assumed; fused-deposition parts are layered and anisotropic in practice";

#[derive(Debug, Clone, PartialEq)]
pub struct Material {
    pub name: String,
    /// Young's modulus, N/mm².
    pub e: f64,
    /// Poisson's ratio.
    pub nu: f64,
    /// Shear modulus, N/mm².
    pub g: f64,
    /// Whether `g` was derived from `e` and `nu`.
    pub g_derived: bool,
    pub caveat: String,
}

impl Material {
    /// Isotropic material with `G = E / (2(1 + ν))`.
    pub fn isotropic(name: impl Into<String>, e: f64, nu: f64) -> Result<Self> {
        let g = derive_shear_modulus(e, nu)?;
        Ok(Self {
            name: name.into(),
            e,
            nu,
            g,
            g_derived: true,
            caveat: ISOTROPY_CAVEAT.to_string(),
        })
    }

    /// Material with an explicitly measured shear modulus.
    pub fn with_shear_modulus(name: impl Into<String>, e: f64, nu: f64, g: f64) -> Result<Self> {
        check_modulus(e)?;
        check_poisson(nu)?;
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::InvalidMaterial(format!("shear modulus must be positive, got {g}")));
        }
        Ok(Self {
            name: name.into(),
            e,
            nu,
            g,
            g_derived: false,
            caveat: ISOTROPY_CAVEAT.to_string(),
        })
    }

    /// Same material with both moduli multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::InvalidMaterial(format!("scale factor must be positive, got {factor}")));
        }
        Ok(Self {
            e: self.e * factor,
            g: self.g * factor,
            ..self.clone()
        })
    }
}

fn check_modulus(e: f64) -> Result<()> {
    if e.is_finite() && e > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidMaterial(format!("Young's modulus must be positive, got {e}")))
    }
}

fn check_poisson(nu: f64) -> Result<()> {
    if nu > -1.0 && nu < 0.5 {
        Ok(())
    } else {
        Err(Error::InvalidMaterial(format!(
            "Poisson's ratio must lie in (-1, 0.5), got {nu}"
        )))
    }
}

pub fn derive_shear_modulus(e: f64, nu: f64) -> Result<f64> {
    check_modulus(e)?;
    check_poisson(nu)?;
    Ok(e / (2.0 * (1.0 + nu)))
}

/// One row of the two-joint hinge measurements. Stiffnesses in Nm/rad, load in Nm.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasuredJointRecord {
    pub variant: String,
    pub cross_stiffness: Option<f64>,
    pub joint_stiffness: f64,
    pub max_joint_load: f64,
}

impl MeasuredJointRecord {
    pub fn new(
        variant: impl Into<String>,
        cross_stiffness: Option<f64>,
        joint_stiffness: f64,
        max_joint_load: f64,
    ) -> Result<Self> {
        let variant = variant.into();
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(joint_stiffness)
            || !positive(max_joint_load)
            || cross_stiffness.is_some_and(|c| !positive(c))
        {
            return Err(Error::InvalidMaterial(format!(
                "measured values for `{variant}` must be positive"
            )));
        }
        Ok(Self {
            variant,
            cross_stiffness,
            joint_stiffness,
            max_joint_load,
        })
    }
}

/// Cross-direction over joint-direction stiffness.
pub fn stiffness_ratio(record: &MeasuredJointRecord) -> Result<f64> {
    match record.cross_stiffness {
        Some(cross) => Ok(cross / record.joint_stiffness),
        None => Err(Error::Unavailable(format!(
            "no cross stiffness recorded for `{}`",
            record.variant
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn shear_modulus_values() {
        assert_relative_eq!(derive_shear_modulus(100.0, 0.48).unwrap(), 33.783_783_783_783_78, epsilon = 1e-12);
        assert_relative_eq!(derive_shear_modulus(296.0, 0.48).unwrap(), 100.0, epsilon = 1e-12);
        assert_eq!(derive_shear_modulus(80.0, 0.0).unwrap(), 40.0);
    }

    #[test]
    fn shear_modulus_rejects_unphysical_input() {
        assert!(derive_shear_modulus(100.0, 0.5).is_err());
        assert!(derive_shear_modulus(100.0, -1.0).is_err());
        assert!(derive_shear_modulus(0.0, 0.3).is_err());
        assert!(derive_shear_modulus(f64::NAN, 0.3).is_err());
    }

    #[test]
    fn derived_g_is_exact() {
        let m = Material::isotropic("arnitel", 48.0, 0.48).unwrap();
        assert!(m.g_derived);
        assert_eq!(m.g, 48.0 / (2.0 * 1.48));
        assert!(m.caveat.contains("isotropy"));
    }

    #[test]
    fn ratio_of_catalog_rows() {
        let abs = MeasuredJointRecord::new("ABS narrow 6mm", Some(604.963), 75.0225, 8.625).unwrap();
        let tpla = MeasuredJointRecord::new("TPLA narrow 6mm", Some(564.9776), 74.635, 10.5).unwrap();
        let wide = MeasuredJointRecord::new("TPLA wide 7mm", Some(974.969), 280.129, 22.95).unwrap();
        assert_eq!(format!("{:.1}", stiffness_ratio(&abs).unwrap()), "8.1");
        assert_eq!(format!("{:.1}", stiffness_ratio(&tpla).unwrap()), "7.6");
        assert_eq!(format!("{:.2}", stiffness_ratio(&wide).unwrap()), "3.48");
    }

    #[test]
    fn missing_cross_stiffness_is_unavailable() {
        let pla = MeasuredJointRecord::new("PLA narrow 6mm", None, 66.412, 6.25).unwrap();
        assert!(matches!(stiffness_ratio(&pla), Err(Error::Unavailable(_))));
    }

    #[test]
    fn records_reject_nonpositive_values() {
        assert!(MeasuredJointRecord::new("x", Some(-1.0), 1.0, 1.0).is_err());
        assert!(MeasuredJointRecord::new("x", None, 0.0, 1.0).is_err());
    }
}
