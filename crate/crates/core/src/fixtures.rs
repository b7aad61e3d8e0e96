//! Data files bundled with the crate.

use crate::error::{Error, Result};
use crate::io::{
    parse_catalog, parse_materials, parse_matrix, parse_measured, parse_mechanism_str, parse_samples,
    MaterialDef, MechanismDoc,
};
use crate::materials::MeasuredJointRecord;
use crate::mechanism::MeasuredStiffness;
use crate::spatial::SpatialMatrix6;

pub const SMALL_RCC: &str = include_str!("../data/small_rcc.mech");
pub const MATERIALS: &str = include_str!("../data/materials.txt");
pub const REFERENCE_STIFFNESS: &str = include_str!("../data/reference_stiffness.txt");
pub const JOINT_CATALOG: &str = include_str!("../data/joint_catalog.txt");
pub const CREEP_SYNTHETIC: &str = include_str!("../data/creep_synthetic.csv");
pub const MEASURED_SMALL_RCC: &str = include_str!("../data/measured_small_rcc.txt");

/// Resolves includes against the bundled files only.
pub fn bundled_resolver(name: &str) -> Result<(String, String)> {
    match name {
        "materials.txt" => Ok((MATERIALS.to_string(), "data/materials.txt".into())),
        other => Err(Error::InvalidMechanism(format!("no bundled file `{other}`"))),
    }
}

pub fn small_rcc() -> Result<MechanismDoc> {
    parse_mechanism_str(SMALL_RCC, "data/small_rcc.mech", &bundled_resolver)
}

pub fn materials() -> Result<Vec<MaterialDef>> {
    parse_materials(MATERIALS, "data/materials.txt")
}

/// The reference total stiffness of the small stage.
pub fn reference_stiffness() -> Result<SpatialMatrix6> {
    parse_matrix(REFERENCE_STIFFNESS, "data/reference_stiffness.txt")
}

pub fn joint_catalog() -> Result<Vec<MeasuredJointRecord>> {
    parse_catalog(JOINT_CATALOG, "data/joint_catalog.txt")
}

pub fn creep_synthetic() -> Result<Vec<(f64, f64)>> {
    parse_samples(CREEP_SYNTHETIC, "data/creep_synthetic.csv")
}

pub fn measured_small_rcc() -> Result<Vec<MeasuredStiffness>> {
    parse_measured(MEASURED_SMALL_RCC, "data/measured_small_rcc.txt")
}
