use nalgebra::Matrix6;

use super::{check_dimension, torsion::torsion_constant, SHEAR_COEFFICIENT};
use crate::error::Result;
use crate::materials::Material;
use crate::spatial::SpatialMatrix6;

/// Prismatic beam along local x; the compliance is expressed at the distal end.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamGeometry {
    /// Length, mm.
    pub l: f64,
    /// Out-of-plane width, mm.
    pub w: f64,
    /// In-plane section depth, mm.
    pub s: f64,
    /// Section height used for the torsion constant; `None` means `s`.
    pub torsion_height: Option<f64>,
    pub material: Material,
}

impl BeamGeometry {
    pub fn new(l: f64, w: f64, s: f64, material: Material) -> Result<Self> {
        let g = Self {
            l,
            w,
            s,
            torsion_height: None,
            material,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn with_torsion_height(mut self, h: f64) -> Result<Self> {
        self.torsion_height = Some(h);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        check_dimension("beam l", self.l)?;
        check_dimension("beam w", self.w)?;
        check_dimension("beam s", self.s)?;
        if let Some(h) = self.torsion_height {
            check_dimension("beam torsion height", h)?;
        }
        Ok(())
    }

    /// `I_t` in mm⁴.
    pub fn torsion_constant(&self) -> Result<f64> {
        torsion_constant(self.w, self.torsion_height.unwrap_or(self.s))
    }
}

pub fn beam_compliance(g: &BeamGeometry) -> Result<SpatialMatrix6> {
    g.validate()?;
    let BeamGeometry { l, w, s, .. } = *g;
    let (e, gm) = (g.material.e, g.material.g);
    let alpha = SHEAR_COEFFICIENT;
    let it = g.torsion_constant()?;

    let mut c = Matrix6::zeros();
    c[(0, 0)] = l / (e * w * s);
    c[(1, 1)] = alpha * l / (gm * w * s) + 4.0 * l.powi(3) / (e * w * s.powi(3));
    c[(2, 2)] = alpha * l / (gm * w * s) + 4.0 * l.powi(3) / (e * w.powi(3) * s);
    c[(3, 3)] = l / (gm * it);
    c[(4, 4)] = 12.0 * l / (e * w.powi(3) * s);
    c[(5, 5)] = 12.0 * l / (e * w * s.powi(3));
    c[(1, 5)] = 6.0 * l * l / (e * w * s.powi(3));
    c[(5, 1)] = c[(1, 5)];
    c[(2, 4)] = -6.0 * l * l / (e * w.powi(3) * s);
    c[(4, 2)] = c[(2, 4)];
    Ok(SpatialMatrix6::compliance(c))
}
