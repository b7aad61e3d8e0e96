//! Saint-Venant torsion of solid rectangular sections.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `Σ_{n odd} n⁻⁵ = (31/32) ζ(5)`.
const ODD_ZETA5: f64 = 31.0 / 32.0 * 1.036_927_755_143_37;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorsionProfile {
    /// Long side over short side, ≥ 1.
    pub aspect: f64,
    pub beta: f64,
}

impl TorsionProfile {
    /// Orients the two side lengths and evaluates the shape coefficient.
    pub fn from_sides(side_a: f64, side_b: f64) -> Result<Self> {
        if !(side_a.is_finite() && side_b.is_finite() && side_a > 0.0 && side_b > 0.0) {
            return Err(Error::InvalidGeometry(format!(
                "section sides must be positive, got {side_a} x {side_b}"
            )));
        }
        let aspect = side_a.max(side_b) / side_a.min(side_b);
        Ok(Self {
            aspect,
            beta: torsion_beta(aspect)?,
        })
    }
}

/// Shape coefficient `β` with `I_t = β a b³` for long side `a`, short side `b`.
pub fn torsion_beta(aspect: f64) -> Result<f64> {
    if aspect.is_nan() || aspect < 1.0 {
        return Err(Error::OutOfDomain(
            "aspect ratio",
            format!("{aspect} < 1; orient the section so the long side comes first"),
        ));
    }
    if aspect.is_infinite() {
        return Ok(1.0 / 3.0);
    }
    // Σ n⁻⁵ tanh(nπk/2) = Σ n⁻⁵ − Σ n⁻⁵ (1 − tanh); the correction decays like e^{−nπk}.
    let mut correction = 0.0;
    let mut n = 1.0_f64;
    loop {
        let y = n * PI * aspect;
        let term = n.powi(-5) * 2.0 / (y.exp() + 1.0);
        correction += term;
        if term < 1e-20 {
            break;
        }
        n += 2.0;
    }
    let series = ODD_ZETA5 - correction;
    Ok((1.0 - 192.0 / PI.powi(5) / aspect * series) / 3.0)
}

/// Torsion constant `I_t` (mm⁴) of a solid `side_a × side_b` rectangle.
pub fn torsion_constant(side_a: f64, side_b: f64) -> Result<f64> {
    let profile = TorsionProfile::from_sides(side_a, side_b)?;
    let (a, b) = (side_a.max(side_b), side_a.min(side_b));
    Ok(profile.beta * a * b.powi(3))
}
