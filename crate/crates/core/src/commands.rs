//! The operations behind the command-line tool.

use std::path::Path;

use crate::analysis::{fit_creep, run_sweep, CreepFit, SweepPoint};
use crate::error::{Error, Result};
use crate::io::report::AnalysisReport;
use crate::io::{parse_measured, parse_mechanism, parse_samples, read_file, MechanismDoc};
use crate::mechanism::{
    center_of_compliance, deviation_report, ideal_fourbar_center, mechanism_stiffness, MeasuredStiffness,
};
use crate::spatial::invert;

/// Full analysis of a parsed document. `measured` replaces the document's
/// own `[measured]` section when given.
pub fn analyze_doc(doc: &MechanismDoc, source: &str, measured: Option<&[MeasuredStiffness]>) -> Result<AnalysisReport> {
    let m = doc.build()?;
    let stiffness = mechanism_stiffness(&m)?;
    let compliance = invert(&stiffness)?;
    let measured = measured.unwrap_or(&doc.measured);
    let deviations = deviation_report(&stiffness, measured)?;
    let vertical = match &doc.vertical {
        Some(v) => Some((v.stiffness_z, v.in_series(&stiffness, false)?.at(3, 3))),
        None => None,
    };
    let mut material_notes: Vec<String> = Vec::new();
    for name in doc.hinges.iter().map(|h| &h.material).chain(doc.beams.iter().map(|b| &b.material)) {
        if let Some(def) = doc.material(name) {
            let note = format!("material {}: {}", def.name, def.to_material()?.caveat);
            if !material_notes.contains(&note) {
                material_notes.push(note);
            }
        }
    }
    Ok(AnalysisReport {
        source: source.to_string(),
        reference: doc.reference.clone(),
        limbs: m.limbs().len(),
        elements: m.element_count(),
        stiffness,
        compliance,
        rcc_height: center_of_compliance(&compliance).map_err(|e| e.to_string()),
        ideal_center: ideal_fourbar_center(&m).map_err(|e| e.to_string()),
        deviations,
        vertical,
        material_notes,
    })
}

pub fn analyze_file(path: &Path, measured: Option<&Path>) -> Result<AnalysisReport> {
    let doc = parse_mechanism(path)?;
    let measured = match measured {
        Some(p) => Some(parse_measured(&read_file(p)?, &p.display().to_string())?),
        None => None,
    };
    analyze_doc(&doc, &path.display().to_string(), measured.as_deref())
}

pub fn sweep_doc(doc: &MechanismDoc) -> Result<Vec<SweepPoint>> {
    let spec = doc
        .sweep
        .as_ref()
        .ok_or_else(|| Error::InvalidSweep("missing [sweep] section".into()))?;
    Ok(run_sweep(spec, doc))
}

pub fn sweep_file(path: &Path) -> Result<Vec<SweepPoint>> {
    sweep_doc(&parse_mechanism(path)?)
}

/// Returns the sample count and the fit.
pub fn creep_file(path: &Path) -> Result<(usize, CreepFit)> {
    let samples = parse_samples(&read_file(path)?, &path.display().to_string())?;
    Ok((samples.len(), fit_creep(&samples)?))
}

/// Parses and assembles without solving; returns a one-line summary.
pub fn validate_file(path: &Path) -> Result<String> {
    let doc = parse_mechanism(path)?;
    let m = doc.build()?;
    Ok(format!(
        "{}: ok, {} limbs, {} elements",
        path.display(),
        m.limbs().len(),
        m.element_count()
    ))
}
