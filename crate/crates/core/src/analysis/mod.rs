//! Creep, the vertical-compliance datum and design sweeps.

pub mod creep;
pub mod sweep;
mod vertical;

pub use creep::{creep_force, fit_creep, CreepFit, CreepModel};
pub use sweep::{
    run_sweep, run_sweep_serial, MechanismTemplate, Objective, ParameterRange, SweepEvaluation,
    SweepParameter, SweepPoint, SweepSpec, WeightedObjective,
};
pub use vertical::VerticalComplianceDatum;
