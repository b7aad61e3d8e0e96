//! Grid sweeps over hinge and leg parameters.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mechanism::{center_of_compliance, mechanism_stiffness, Direction, Mechanism};
use crate::spatial::invert;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepParameter {
    /// Neck thickness of every hinge, mm.
    HingeT,
    /// Notch radius of every hinge, mm.
    HingeR,
    /// Width of every hinge, mm.
    HingeW,
    /// Magnitude of every beam member's rotation, degrees.
    LegAngle,
    /// Magnitude of every limb tip's lateral offset, mm.
    LegY,
    /// Magnitude of every limb tip's vertical offset, mm.
    LegZ,
}

impl SweepParameter {
    pub const ALL: [SweepParameter; 6] = [
        SweepParameter::HingeT,
        SweepParameter::HingeR,
        SweepParameter::HingeW,
        SweepParameter::LegAngle,
        SweepParameter::LegY,
        SweepParameter::LegZ,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SweepParameter::HingeT => "hinge.t",
            SweepParameter::HingeR => "hinge.r",
            SweepParameter::HingeW => "hinge.w",
            SweepParameter::LegAngle => "leg_angle",
            SweepParameter::LegY => "leg_y",
            SweepParameter::LegZ => "leg_z",
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepParameter::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::InvalidSweep(format!("unknown parameter `{s}`")))
    }
}

/// `n` evenly spaced values from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterRange {
    pub parameter: SweepParameter,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl ParameterRange {
    pub fn new(parameter: SweepParameter, min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) || min > max {
            return Err(Error::InvalidSweep(format!("{parameter}: need finite min ≤ max, got {min}..{max}")));
        }
        if n == 0 || (n == 1 && min != max) {
            return Err(Error::InvalidSweep(format!(
                "{parameter}: {n} points cannot span {min}..{max}"
            )));
        }
        Ok(Self { parameter, min, max, n })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| if i + 1 == self.n { self.max } else { self.min + step * i as f64 })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Objective {
    /// `|h − target| / |target|` on the center of compliance.
    RccHeightTarget(f64),
    /// Rewards a large `K_aa / K_bb` by adding `K_bb / K_aa`.
    StiffnessRatioMax { stiff: Direction, soft: Direction },
    /// `|K_ii − value| / value`.
    DiagTarget { direction: Direction, value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedObjective {
    pub objective: Objective,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub ranges: Vec<ParameterRange>,
    pub objectives: Vec<WeightedObjective>,
}

impl SweepSpec {
    pub fn new(ranges: Vec<ParameterRange>, objectives: Vec<WeightedObjective>) -> Result<Self> {
        if ranges.is_empty() {
            return Err(Error::InvalidSweep("no parameter ranges".into()));
        }
        for (i, r) in ranges.iter().enumerate() {
            if ranges[..i].iter().any(|o| o.parameter == r.parameter) {
                return Err(Error::InvalidSweep(format!("parameter `{}` listed twice", r.parameter)));
            }
        }
        if objectives.is_empty() {
            return Err(Error::InvalidSweep("no objective".into()));
        }
        for o in &objectives {
            if !(o.weight.is_finite() && o.weight >= 0.0) {
                return Err(Error::InvalidSweep(format!("objective weight must be ≥ 0, got {}", o.weight)));
            }
            match o.objective {
                Objective::RccHeightTarget(t) if !(t.is_finite() && t != 0.0) => {
                    return Err(Error::InvalidSweep(format!("rcc height target must be nonzero, got {t}")));
                }
                Objective::DiagTarget { value, .. } if !(value.is_finite() && value > 0.0) => {
                    return Err(Error::InvalidSweep(format!("diagonal target must be positive, got {value}")));
                }
                Objective::StiffnessRatioMax { stiff, soft } if stiff == soft => {
                    return Err(Error::InvalidSweep("stiffness ratio needs two directions".into()));
                }
                _ => {}
            }
        }
        Ok(Self { ranges, objectives })
    }

    /// Grid points in row-major order, the last range varying fastest.
    pub fn grid(&self) -> Vec<Vec<(SweepParameter, f64)>> {
        let axes: Vec<Vec<f64>> = self.ranges.iter().map(ParameterRange::values).collect();
        let total: usize = axes.iter().map(Vec::len).product();
        (0..total)
            .map(|mut flat| {
                let mut point = vec![(SweepParameter::HingeT, 0.0); axes.len()];
                for (k, axis) in axes.iter().enumerate().rev() {
                    point[k] = (self.ranges[k].parameter, axis[flat % axis.len()]);
                    flat /= axis.len();
                }
                point
            })
            .collect()
    }
}

/// A mechanism description that can be rebuilt with sweep parameters applied.
pub trait MechanismTemplate {
    fn instantiate(&self, values: &[(SweepParameter, f64)]) -> Result<Mechanism>;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepEvaluation {
    pub score: f64,
    pub rcc_height: Option<f64>,
    pub diagonal: [f64; 6],
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub values: Vec<(SweepParameter, f64)>,
    /// `Err` holds the reason a point is infeasible.
    pub outcome: std::result::Result<SweepEvaluation, String>,
}

impl SweepPoint {
    pub fn is_feasible(&self) -> bool {
        self.outcome.is_ok()
    }
}

fn evaluate<T: MechanismTemplate + ?Sized>(
    spec: &SweepSpec,
    template: &T,
    values: Vec<(SweepParameter, f64)>,
) -> SweepPoint {
    let outcome = (|| -> Result<SweepEvaluation> {
        let m = template.instantiate(&values)?;
        let k = mechanism_stiffness(&m)?;
        let rcc_height = invert(&k).and_then(|c| center_of_compliance(&c)).ok();
        let diagonal = k.diagonal();
        let mut score = 0.0;
        for o in &spec.objectives {
            let term = match o.objective {
                Objective::RccHeightTarget(target) => {
                    let h = rcc_height.ok_or(Error::NoRotationCenter)?;
                    (h - target).abs() / target.abs()
                }
                Objective::StiffnessRatioMax { stiff, soft } => {
                    diagonal[soft.index()] / diagonal[stiff.index()]
                }
                Objective::DiagTarget { direction, value } => {
                    (diagonal[direction.index()] - value).abs() / value
                }
            };
            score += o.weight * term;
        }
        if !score.is_finite() {
            return Err(Error::InvalidSweep(format!("objective is not finite ({score})")));
        }
        Ok(SweepEvaluation {
            score,
            rcc_height,
            diagonal,
        })
    })()
    .map_err(|e| e.to_string());
    SweepPoint { values, outcome }
}

fn tuple_cmp(a: &[(SweepParameter, f64)], b: &[(SweepParameter, f64)]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.1.total_cmp(&y.1))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn rank(points: &mut [SweepPoint]) {
    points.sort_by(|a, b| match (&a.outcome, &b.outcome) {
        (Ok(x), Ok(y)) => x.score.total_cmp(&y.score).then_with(|| tuple_cmp(&a.values, &b.values)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => tuple_cmp(&a.values, &b.values),
    });
}

/// Evaluates every grid point on the worker pool and ranks by score.
/// Infeasible points are kept and sorted last.
pub fn run_sweep<T: MechanismTemplate + Sync + ?Sized>(spec: &SweepSpec, template: &T) -> Vec<SweepPoint> {
    let mut points: Vec<SweepPoint> = spec
        .grid()
        .into_par_iter()
        .map(|values| evaluate(spec, template, values))
        .collect();
    rank(&mut points);
    points
}

/// Same as [`run_sweep`] on the calling thread.
pub fn run_sweep_serial<T: MechanismTemplate + ?Sized>(spec: &SweepSpec, template: &T) -> Vec<SweepPoint> {
    let mut points: Vec<SweepPoint> = spec
        .grid()
        .into_iter()
        .map(|values| evaluate(spec, template, values))
        .collect();
    rank(&mut points);
    points
}
