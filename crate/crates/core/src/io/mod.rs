//! File formats and reports.

pub mod fmt;
pub mod kv;
mod materials_file;
mod matrix_file;
mod measured_file;
mod mechanism_file;
pub mod report;
mod samples;

pub use materials_file::{parse_catalog, parse_materials, MaterialDef, CATALOG_FORMAT, MATERIALS_FORMAT};
pub use matrix_file::{parse_matrix, MATRIX_FORMAT};
pub use measured_file::{parse_measured, MEASURED_FORMAT};
pub use mechanism_file::{
    parse_mechanism, parse_mechanism_str, BeamDef, HingeDef, IncludeResolver, LimbDef, MechanismDoc,
    MemberDef, MountDef, PlacementDef, MECHANISM_FORMAT, UNITS,
};
pub use samples::parse_samples;

pub(crate) use mechanism_file::read_file;
