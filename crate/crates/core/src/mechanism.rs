//! Serial limbs, parallel mechanisms and the quantities extracted from them.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Vector2, Vector6};

use crate::elements::{beam_compliance, hinge_compliance, BeamGeometry, HingeGeometry};
use crate::error::{Error, Result};
use crate::spatial::{
    invert, transform_compliance, transform_stiffness, FramePlacement, MatrixKind,
    SpatialMatrix6, MAX_CONDITION,
};

/// Where a member's compliance comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum ElementSpec {
    Hinge(HingeGeometry),
    Beam(BeamGeometry),
    /// A precomputed compliance in the member frame.
    Matrix(SpatialMatrix6),
}

impl ElementSpec {
    pub fn compliance(&self) -> Result<SpatialMatrix6> {
        match self {
            ElementSpec::Hinge(g) => hinge_compliance(g),
            ElementSpec::Beam(g) => beam_compliance(g),
            ElementSpec::Matrix(c) => {
                if c.kind() != MatrixKind::Compliance {
                    return Err(Error::KindMismatch {
                        expected: MatrixKind::Compliance,
                        found: c.kind(),
                    });
                }
                Ok(*c)
            }
        }
    }
}

/// One element of a limb with its placement to the limb tip.
#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub name: String,
    pub element: ElementSpec,
    pub placement: FramePlacement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Limb {
    name: String,
    members: Vec<Member>,
}

impl Limb {
    /// Members must lie in the tip's x-y plane (`r_z = 0`).
    pub fn new(name: impl Into<String>, members: Vec<Member>) -> Result<Self> {
        let name = name.into();
        if members.is_empty() {
            return Err(Error::InvalidMechanism(format!("limb `{name}` has no members")));
        }
        if let Some(m) = members.iter().find(|m| m.placement.r().z != 0.0) {
            return Err(Error::InvalidMechanism(format!(
                "member `{}` of limb `{name}` is out of the tip plane (r_z = {})",
                m.name,
                m.placement.r().z
            )));
        }
        Ok(Self { name, members })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    /// Rotation of the first beam member, if any.
    pub fn leg_angle(&self) -> Option<f64> {
        self.members
            .iter()
            .find(|m| matches!(m.element, ElementSpec::Beam(_)))
            .map(|m| m.placement.theta())
    }
}

/// A limb together with its tip-to-reference placement.
#[derive(Debug, Clone, PartialEq)]
pub struct MountedLimb {
    pub name: String,
    pub limb: Limb,
    pub placement: FramePlacement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mechanism {
    reference: String,
    limbs: Vec<MountedLimb>,
}

impl Mechanism {
    pub fn new(reference: impl Into<String>, limbs: Vec<MountedLimb>) -> Result<Self> {
        if limbs.len() < 2 {
            return Err(Error::InvalidMechanism(format!(
                "mechanism requires ≥2 limbs, got {}",
                limbs.len()
            )));
        }
        Ok(Self {
            reference: reference.into(),
            limbs,
        })
    }

    pub fn reference(&self) -> &str {
        &self.reference
    }

    pub fn limbs(&self) -> &[MountedLimb] {
        &self.limbs
    }

    pub fn element_count(&self) -> usize {
        self.limbs.iter().map(|l| l.limb.members.len()).sum()
    }
}

/// Tip compliance `Σ J_i C_i J_iᵀ`.
pub fn limb_compliance(limb: &Limb) -> Result<SpatialMatrix6> {
    let mut total = SpatialMatrix6::zeros(MatrixKind::Compliance);
    for m in &limb.members {
        total = total + transform_compliance(&m.element.compliance()?, &m.placement)?;
    }
    Ok(total)
}

/// Stiffness at the reference point, `Σ J_F K_limb J_Fᵀ`.
pub fn mechanism_stiffness(m: &Mechanism) -> Result<SpatialMatrix6> {
    let mut total = SpatialMatrix6::zeros(MatrixKind::Stiffness);
    for mounted in &m.limbs {
        let k_limb = invert(&limb_compliance(&mounted.limb)?)?;
        total = total + transform_stiffness(&k_limb, &mounted.placement)?;
    }
    Ok(total)
}

/// Signed height `C33 / C53` of the z-rotation center above the reference.
pub fn center_of_compliance(c: &SpatialMatrix6) -> Result<f64> {
    if c.kind() != MatrixKind::Compliance {
        return Err(Error::KindMismatch {
            expected: MatrixKind::Compliance,
            found: c.kind(),
        });
    }
    let (c33, c53, c55) = (c.at(3, 3), c.at(5, 3), c.at(5, 5));
    // below this the coupling is round-off from an inversion
    let floor = 1e-12 * (c33 * c55).abs().sqrt();
    if c53.is_nan() || c53.abs() <= floor {
        return Err(Error::NoRotationCenter);
    }
    Ok(c33 / c53)
}

/// Intersection height of the two leg axes in the x-y plane of the reference.
///
/// Each leg axis crosses the line `x = 0` at the limb tip's lateral offset and
/// is inclined by the tip rotation plus the limb's first beam angle. The tip's
/// x offset is not included.
pub fn ideal_fourbar_center(m: &Mechanism) -> Result<f64> {
    let mut legs: Vec<(Vector2<f64>, f64)> = Vec::new();
    for mounted in &m.limbs {
        let beam_angle = mounted.limb.leg_angle().ok_or_else(|| {
            Error::InvalidMechanism(format!("limb `{}` has no beam to define a leg axis", mounted.name))
        })?;
        let tip = -mounted.placement.r();
        let phi = mounted.placement.theta() + beam_angle;
        let leg = (Vector2::new(0.0, tip.y), phi);
        let same = |a: &(Vector2<f64>, f64)| {
            (a.0 - leg.0).norm() < 1e-9 && (a.1 - leg.1).sin().abs() < 1e-12
        };
        if !legs.iter().any(same) {
            legs.push(leg);
        }
    }
    if legs.len() != 2 {
        return Err(Error::InvalidMechanism(format!(
            "ideal four-bar center needs exactly two distinct leg axes, found {}",
            legs.len()
        )));
    }
    let (p1, d1) = (legs[0].0, Vector2::new(legs[0].1.cos(), legs[0].1.sin()));
    let (p2, d2) = (legs[1].0, Vector2::new(legs[1].1.cos(), legs[1].1.sin()));
    let cross = d1.x * d2.y - d1.y * d2.x;
    if cross.abs() < 1e-12 {
        return Err(Error::CenterAtInfinity);
    }
    let dp = p2 - p1;
    let s = (dp.x * d2.y - dp.y * d2.x) / cross;
    Ok(p1.x + s * d1.x)
}

/// Distance between the computed and the ideal center.
pub fn rotational_precision(rcc_height: f64, ideal_center: f64) -> f64 {
    (rcc_height - ideal_center).abs()
}

/// Twist `K⁻¹ F` under a wrench.
pub fn static_deflection(k: &SpatialMatrix6, wrench: &Vector6<f64>) -> Result<Vector6<f64>> {
    if k.kind() != MatrixKind::Stiffness {
        return Err(Error::KindMismatch {
            expected: MatrixKind::Stiffness,
            found: k.kind(),
        });
    }
    let condition = k.condition_number();
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::Singular { condition });
    }
    k.matrix()
        .lu()
        .solve(wrench)
        .ok_or(Error::Singular { condition })
}

/// Diagonal stiffness directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    X,
    Y,
    Z,
    Rx,
    Ry,
    Rz,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::X,
        Direction::Y,
        Direction::Z,
        Direction::Rx,
        Direction::Ry,
        Direction::Rz,
    ];

    /// 0-based diagonal index.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::X => "x",
            Direction::Y => "y",
            Direction::Z => "z",
            Direction::Rx => "rx",
            Direction::Ry => "ry",
            Direction::Rz => "rz",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Direction::ALL
            .into_iter()
            .find(|d| d.as_str() == s)
            .ok_or_else(|| Error::NoAnalyticCounterpart(s.to_string()))
    }
}

/// A measured directional stiffness, possibly a range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasuredStiffness {
    pub direction: Direction,
    pub low: f64,
    pub high: f64,
}

impl MeasuredStiffness {
    pub fn new(direction: Direction, a: f64, b: f64) -> Self {
        Self {
            direction,
            low: a.min(b),
            high: a.max(b),
        }
    }

    pub fn single(direction: Direction, value: f64) -> Self {
        Self::new(direction, value, value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub measured: MeasuredStiffness,
    pub analytic: f64,
    /// Smallest and largest `|analytic − measured| / analytic` over the range.
    pub relative: (f64, f64),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DeviationReport {
    pub entries: Vec<Deviation>,
}

pub fn deviation_report(analytic: &SpatialMatrix6, measured: &[MeasuredStiffness]) -> Result<DeviationReport> {
    if analytic.kind() != MatrixKind::Stiffness {
        return Err(Error::KindMismatch {
            expected: MatrixKind::Stiffness,
            found: analytic.kind(),
        });
    }
    let mut entries = Vec::with_capacity(measured.len());
    for m in measured {
        let i = m.direction.index();
        let a = analytic.matrix()[(i, i)];
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::NoAnalyticCounterpart(format!(
                "{} (analytic stiffness {a})",
                m.direction
            )));
        }
        let dev = |v: f64| (a - v).abs() / a;
        let (d1, d2) = (dev(m.low), dev(m.high));
        // |a − v| is not monotone across v = a
        let lo = if (m.low..=m.high).contains(&a) { 0.0 } else { d1.min(d2) };
        entries.push(Deviation {
            measured: *m,
            analytic: a,
            relative: (lo, d1.max(d2)),
        });
    }
    Ok(DeviationReport { entries })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RccResult {
    pub stiffness: SpatialMatrix6,
    pub compliance: SpatialMatrix6,
    pub rcc_height: f64,
    pub ideal_center: f64,
    pub rotational_precision: f64,
}

/// Stiffness, compliance and both rotation centers of a mechanism.
pub fn analyze_rcc(m: &Mechanism) -> Result<RccResult> {
    let stiffness = mechanism_stiffness(m)?;
    let compliance = invert(&stiffness)?;
    let rcc_height = center_of_compliance(&compliance)?;
    let ideal_center = ideal_fourbar_center(m)?;
    Ok(RccResult {
        stiffness,
        compliance,
        rcc_height,
        ideal_center,
        rotational_precision: rotational_precision(rcc_height, ideal_center),
    })
}
