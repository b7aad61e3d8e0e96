use nalgebra::{Matrix6, Vector3};

use super::{check_dimension, torsion::torsion_constant, SHEAR_COEFFICIENT};
use crate::error::{Error, Result};
use crate::materials::Material;
use crate::quadrature::{integrate_with_breakpoints, QuadOptions};
use crate::spatial::{transform_compliance, FramePlacement, SpatialMatrix6};

/// Circular double-notch hinge. The notch spans `x ∈ [0, 2r]` along local x.
#[derive(Debug, Clone, PartialEq)]
pub struct HingeGeometry {
    /// Notch radius, mm.
    pub r: f64,
    /// Minimum thickness at the neck, mm.
    pub t: f64,
    /// Out-of-plane width, mm.
    pub w: f64,
    /// Extra lever from the notch edge to the distal frame, mm. The distal
    /// frame sits `r + h1` from the notch mid-plane.
    pub h1: f64,
    pub material: Material,
}

impl HingeGeometry {
    pub fn new(r: f64, t: f64, w: f64, h1: f64, material: Material) -> Result<Self> {
        let g = Self { r, t, w, h1, material };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        check_dimension("hinge r", self.r)?;
        check_dimension("hinge t", self.t)?;
        check_dimension("hinge w", self.w)?;
        if !self.h1.is_finite() || self.h1 < -self.r {
            return Err(Error::InvalidGeometry(format!(
                "hinge h1 must be finite and at least -r, got {}",
                self.h1
            )));
        }
        Ok(())
    }

    /// Section depth at the notch edge, `2r + t`.
    pub fn edge_thickness(&self) -> f64 {
        2.0 * self.r + self.t
    }

    fn h(&self, x: f64) -> f64 {
        let u = x - self.r;
        self.t + 2.0 * self.r - 2.0 * (self.r * self.r - u * u).max(0.0).sqrt()
    }
}

/// Profile thickness `h(x) = t + 2r − 2√(r² − (x − r)²)`.
pub fn notch_thickness(g: &HingeGeometry, x: f64) -> Result<f64> {
    if !(0.0..=2.0 * g.r).contains(&x) {
        return Err(Error::OutOfDomain(
            "notch position",
            format!("x = {x} not in [0, {}]", 2.0 * g.r),
        ));
    }
    Ok(g.h(x))
}

/// Positions inside the notch where `h(x) = w`, i.e. where the long and short
/// sides of the torsion section swap.
pub fn torsion_case_boundaries(g: &HingeGeometry) -> Vec<f64> {
    let q = (g.t + 2.0 * g.r - g.w) / 2.0;
    if !(q >= 0.0 && q <= g.r) {
        return Vec::new();
    }
    let d = (g.r * g.r - q * q).sqrt();
    let mut xs = vec![g.r - d];
    if d > 0.0 {
        xs.push(g.r + d);
    }
    xs.retain(|&x| x > 0.0 && x < 2.0 * g.r);
    xs
}

/// Strip integrals over the notch, with lever `v = r − x` from the mid-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HingeKernels {
    /// `∫ 1/h`
    pub inv_h: f64,
    /// `∫ v/h`
    pub v_inv_h: f64,
    /// `∫ v²/h`
    pub v2_inv_h: f64,
    /// `∫ 1/h³`
    pub inv_h3: f64,
    /// `∫ v/h³`
    pub v_inv_h3: f64,
    /// `∫ v²/h³`
    pub v2_inv_h3: f64,
    /// `∫ 1/I_t`, mm⁻³
    pub inv_it: f64,
}

pub fn hinge_kernels(g: &HingeGeometry) -> Result<HingeKernels> {
    g.validate()?;
    let opts = QuadOptions::default();
    let span = [0.0, g.r, 2.0 * g.r];
    let r = g.r;
    let int = |f: &dyn Fn(f64) -> f64| integrate_with_breakpoints(f, &span, &opts).map(|q| q.value);

    let mut torsion_points = vec![0.0];
    torsion_points.extend(torsion_case_boundaries(g));
    torsion_points.push(2.0 * g.r);
    torsion_points.sort_by(f64::total_cmp);
    let inv_it = integrate_with_breakpoints(
        |x| {
            // sides are positive by construction
            1.0 / torsion_constant(g.w, g.h(x)).expect("positive section")
        },
        &torsion_points,
        &opts,
    )?
    .value;

    Ok(HingeKernels {
        inv_h: int(&|x| 1.0 / g.h(x))?,
        v_inv_h: int(&|x| (r - x) / g.h(x))?,
        v2_inv_h: int(&|x| (r - x).powi(2) / g.h(x))?,
        inv_h3: int(&|x| g.h(x).powi(-3))?,
        v_inv_h3: int(&|x| (r - x) * g.h(x).powi(-3))?,
        v2_inv_h3: int(&|x| (r - x).powi(2) * g.h(x).powi(-3))?,
        inv_it,
    })
}

/// Torsional compliance `∫ dx / (G I_t(x))`, rad/Nmm.
pub fn torsion_compliance_hinge(g: &HingeGeometry) -> Result<f64> {
    Ok(hinge_kernels(g)?.inv_it / g.material.g)
}

/// Compliance at the notch mid-plane, from the kernels.
fn midplane_compliance(g: &HingeGeometry, k: &HingeKernels) -> Matrix6<f64> {
    let (e, gm, w) = (g.material.e, g.material.g, g.w);
    let shear = SHEAR_COEFFICIENT / (gm * w) * k.inv_h;
    let mut c = Matrix6::zeros();
    c[(0, 0)] = k.inv_h / (e * w);
    c[(1, 1)] = 12.0 / (e * w) * k.v2_inv_h3 + shear;
    c[(2, 2)] = 12.0 / (e * w.powi(3)) * k.v2_inv_h + shear;
    c[(3, 3)] = k.inv_it / gm;
    c[(4, 4)] = 12.0 / (e * w.powi(3)) * k.inv_h;
    c[(5, 5)] = 12.0 / (e * w) * k.inv_h3;
    c[(1, 5)] = 12.0 / (e * w) * k.v_inv_h3;
    c[(5, 1)] = c[(1, 5)];
    c[(2, 4)] = -12.0 / (e * w.powi(3)) * k.v_inv_h;
    c[(4, 2)] = c[(2, 4)];
    c
}

/// Hinge compliance at the distal frame, `r + h1` beyond the notch mid-plane.
pub fn hinge_compliance(g: &HingeGeometry) -> Result<SpatialMatrix6> {
    let k = hinge_kernels(g)?;
    let mid = SpatialMatrix6::compliance(midplane_compliance(g, &k));
    let lever = FramePlacement::translation(Vector3::new(g.r + g.h1, 0.0, 0.0))?;
    transform_compliance(&mid, &lever)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::{beam_compliance, BeamGeometry};
    use approx::assert_relative_eq;

    fn material() -> Material {
        Material::isotropic("test", 48.0, 0.48).unwrap()
    }

    fn bundled_hinge() -> HingeGeometry {
        HingeGeometry::new(1.25, 2.82, 5.0, 0.0, material()).unwrap()
    }

    #[test]
    fn notch_profile_values() {
        let g = bundled_hinge();
        assert_relative_eq!(notch_thickness(&g, 1.25).unwrap(), 2.82, epsilon = 1e-15);
        assert_relative_eq!(notch_thickness(&g, 0.0).unwrap(), 5.32, epsilon = 1e-15);
        assert_relative_eq!(notch_thickness(&g, 2.5).unwrap(), 5.32, epsilon = 1e-15);
        let expected = 2.82 + 2.5 - 2.0 * (1.25f64.powi(2) - 0.625f64.powi(2)).sqrt();
        assert_relative_eq!(notch_thickness(&g, 0.625).unwrap(), expected, epsilon = 1e-15);
        assert_relative_eq!(expected, 3.155, epsilon = 5e-4);
        assert!(notch_thickness(&g, -0.01).is_err());
        assert!(notch_thickness(&g, 2.51).is_err());
    }

    #[test]
    fn case_boundaries_solve_h_equals_w() {
        let g = bundled_hinge();
        let xs = torsion_case_boundaries(&g);
        assert_eq!(xs.len(), 2);
        for x in xs {
            assert_relative_eq!(notch_thickness(&g, x).unwrap(), 5.0, epsilon = 1e-12);
        }
        let wide = HingeGeometry { w: 9.0, ..bundled_hinge() };
        assert!(torsion_case_boundaries(&wide).is_empty());
    }

    #[test]
    fn sparsity_symmetry_psd() {
        let c = hinge_compliance(&bundled_hinge()).unwrap();
        let couplings = [(2, 6), (6, 2), (3, 5), (5, 3)];
        let scale = c.max_abs();
        for i in 1..=6 {
            for j in 1..=6 {
                if i != j && !couplings.contains(&(i, j)) {
                    assert!(c.at(i, j).abs() <= 1e-14 * scale, "entry ({i},{j})");
                }
            }
        }
        assert!(c.symmetry_error() < 1e-12);
        assert!(c.is_psd(1e-12));
        assert!(c.at(2, 6) > 0.0 && c.at(3, 5) < 0.0);
    }

    #[test]
    fn in_plane_bending_dominates() {
        let c = hinge_compliance(&bundled_hinge()).unwrap();
        assert!(c.at(6, 6) > c.at(5, 5));
    }

    #[test]
    fn distal_frame_lever_arm() {
        let g = bundled_hinge();
        let k = hinge_kernels(&g).unwrap();
        let c = hinge_compliance(&g).unwrap();
        let d = g.r + g.h1;
        let c66 = 12.0 / (g.material.e * g.w) * k.inv_h3;
        assert_relative_eq!(c.at(6, 6), c66, max_relative = 1e-14);
        assert_relative_eq!(c.at(2, 6), d * c66, max_relative = 1e-9);
    }

    #[test]
    fn thick_neck_approaches_straight_bar() {
        let t = 4000.0;
        let g = HingeGeometry::new(1.25, t, 5.0, 0.0, material()).unwrap();
        let hinge = hinge_compliance(&g).unwrap();
        let bar = beam_compliance(&BeamGeometry::new(2.5, 5.0, t, material()).unwrap()).unwrap();
        for i in 1..=6 {
            assert_relative_eq!(hinge.at(i, i), bar.at(i, i), max_relative = 2e-3);
        }
        assert_relative_eq!(hinge.at(2, 6), bar.at(2, 6), max_relative = 2e-3);
        assert_relative_eq!(hinge.at(3, 5), bar.at(3, 5), max_relative = 2e-3);
    }

    #[test]
    fn torsion_is_linear_in_inverse_shear_modulus() {
        let g = bundled_hinge();
        let soft = Material::with_shear_modulus("soft", 48.0, 0.48, g.material.g / 2.0).unwrap();
        let g2 = HingeGeometry { material: soft, ..g.clone() };
        assert_relative_eq!(
            torsion_compliance_hinge(&g2).unwrap(),
            2.0 * torsion_compliance_hinge(&g).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn symmetric_profile_kills_midplane_moments() {
        let k = hinge_kernels(&bundled_hinge()).unwrap();
        assert!(k.v_inv_h.abs() < 1e-9);
        assert!(k.v_inv_h3.abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_geometry() {
        assert!(HingeGeometry::new(0.0, 2.0, 5.0, 0.0, material()).is_err());
        assert!(HingeGeometry::new(1.0, 2.0, 5.0, -1.5, material()).is_err());
        assert!(HingeGeometry::new(1.0, f64::INFINITY, 5.0, 0.0, material()).is_err());
    }
}
