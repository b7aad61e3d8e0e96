//! Human-readable and key/value reports.

use std::fmt::Write;

use super::fmt::sig6;
use crate::analysis::{CreepFit, SweepPoint};
use crate::mechanism::DeviationReport;
use crate::spatial::{block_unit, MatrixKind, SpatialMatrix6};

pub const REPORT_FORMAT: &str = "flexrcc-report";

/// Modeling assumptions printed with every analysis.
pub const ASSUMPTIONS: [&str; 3] = [
    "isotropy: printed material treated as homogeneous and isotropic",
    "rigid platform: the part joining the limb tips does not deform",
    "small deflection: linear elasticity about the undeformed geometry",
];

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub source: String,
    pub reference: String,
    pub limbs: usize,
    pub elements: usize,
    pub stiffness: SpatialMatrix6,
    pub compliance: SpatialMatrix6,
    /// Center of compliance, or the reason it does not exist.
    pub rcc_height: Result<f64, String>,
    pub ideal_center: Result<f64, String>,
    pub deviations: DeviationReport,
    /// `(stiffness_z, K33 with the spring in series)`.
    pub vertical: Option<(f64, f64)>,
    pub material_notes: Vec<String>,
}

impl AnalysisReport {
    pub fn rotational_precision(&self) -> Option<f64> {
        match (&self.rcc_height, &self.ideal_center) {
            (Ok(h), Ok(i)) => Some(crate::mechanism::rotational_precision(*h, *i)),
            _ => None,
        }
    }

    pub fn render_human(&self, show_rcc: bool) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "flexrcc analysis of {}", self.source);
        let _ = writeln!(o, "reference point: {}", self.reference);
        let _ = writeln!(o, "limbs: {}, elements: {}", self.limbs, self.elements);
        let _ = writeln!(o);
        write_matrix(&mut o, "stiffness K", &self.stiffness);
        let _ = writeln!(o);
        write_matrix(&mut o, "compliance C", &self.compliance);
        if show_rcc {
            let _ = writeln!(o);
            let _ = writeln!(o, "remote center of compliance");
            let line = |v: &Result<f64, String>| match v {
                Ok(h) => format!("{} mm", sig6(*h)),
                Err(e) => format!("unavailable ({e})"),
            };
            let _ = writeln!(o, "  center of compliance (C33/C53): {}", line(&self.rcc_height));
            let _ = writeln!(o, "  ideal four-bar center:          {}", line(&self.ideal_center));
            match self.rotational_precision() {
                Some(p) => {
                    let _ = writeln!(o, "  rotational precision:           {} mm", sig6(p));
                }
                None => {
                    let _ = writeln!(o, "  rotational precision:           unavailable");
                }
            }
        }
        if !self.deviations.entries.is_empty() {
            let _ = writeln!(o);
            let _ = writeln!(o, "deviation from measurement");
            let _ = writeln!(o, "  {:<4} {:>12} {:>22} {:>20}", "dir", "analytic", "measured", "deviation %");
            for d in &self.deviations.entries {
                let unit = block_unit(MatrixKind::Stiffness, d.measured.direction.index(), d.measured.direction.index());
                let _ = writeln!(
                    o,
                    "  {:<4} {:>12} {:>22} {:>20}   [{unit}]",
                    d.measured.direction.as_str(),
                    sig6(d.analytic),
                    range(d.measured.low, d.measured.high),
                    range(100.0 * d.relative.0, 100.0 * d.relative.1),
                );
            }
        }
        if let Some((kz, k33)) = self.vertical {
            let _ = writeln!(o);
            let _ = writeln!(
                o,
                "vertical stage {} N/mm in series: K33 = {} N/mm",
                sig6(kz),
                sig6(k33)
            );
        }
        let _ = writeln!(o);
        let _ = writeln!(o, "assumptions");
        for a in ASSUMPTIONS {
            let _ = writeln!(o, "  - {a}");
        }
        for n in &self.material_notes {
            let _ = writeln!(o, "  - {n}");
        }
        o
    }

    pub fn render_machine(&self) -> String {
        let mut o = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(o, "{k} = {v}");
        };
        kv("format", format!("{REPORT_FORMAT} 1"));
        kv("source", self.source.clone());
        kv("reference", self.reference.clone());
        kv("limbs", self.limbs.to_string());
        kv("elements", self.elements.to_string());
        for (prefix, m) in [("stiffness.k", &self.stiffness), ("compliance.c", &self.compliance)] {
            for i in 1..=6 {
                for j in 1..=6 {
                    kv(&format!("{prefix}{i}{j}"), sig6(m.at(i, j)));
                }
            }
        }
        for (key, v) in [("rcc.height", &self.rcc_height), ("rcc.ideal_center", &self.ideal_center)] {
            match v {
                Ok(h) => kv(key, sig6(*h)),
                Err(e) => kv(&format!("{key}.error"), e.clone()),
            }
        }
        if let Some(p) = self.rotational_precision() {
            kv("rcc.rotational_precision", sig6(p));
        }
        for d in &self.deviations.entries {
            let p = format!("deviation.{}", d.measured.direction);
            kv(&format!("{p}.analytic"), sig6(d.analytic));
            kv(&format!("{p}.measured_low"), sig6(d.measured.low));
            kv(&format!("{p}.measured_high"), sig6(d.measured.high));
            kv(&format!("{p}.relative_low"), sig6(d.relative.0));
            kv(&format!("{p}.relative_high"), sig6(d.relative.1));
        }
        if let Some((kz, k33)) = self.vertical {
            kv("vertical.stiffness_z", sig6(kz));
            kv("vertical.k33_in_series", sig6(k33));
        }
        for (i, a) in ASSUMPTIONS.iter().enumerate() {
            kv(&format!("assumption.{}", i + 1), a.to_string());
        }
        o
    }
}

fn range(lo: f64, hi: f64) -> String {
    if lo == hi {
        sig6(lo)
    } else {
        format!("{} .. {}", sig6(lo), sig6(hi))
    }
}

fn write_matrix(o: &mut String, title: &str, m: &SpatialMatrix6) {
    let kind = m.kind();
    let _ = writeln!(
        o,
        "{title} (blocks: {} | {} / {} | {})",
        block_unit(kind, 0, 0),
        block_unit(kind, 0, 3),
        block_unit(kind, 3, 0),
        block_unit(kind, 3, 3)
    );
    for i in 1..=6 {
        let mut row = String::from(" ");
        for j in 1..=6 {
            if j == 4 {
                row.push_str(" |");
            }
            let _ = write!(row, " {:>12}", sig6(m.at(i, j)));
        }
        let _ = writeln!(o, "{row}");
        if i == 3 {
            let _ = writeln!(o, "  {}", "-".repeat(80));
        }
    }
}

pub fn render_creep_human(source: &str, samples: usize, fit: &CreepFit) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "creep fit of {source} ({samples} samples)");
    let _ = writeln!(o, "  F0   = {} N", sig6(fit.model.f0));
    let _ = writeln!(o, "  F_ss = {} N", sig6(fit.model.f_ss));
    if fit.tau_identifiable {
        let _ = writeln!(o, "  tau  = {} s", sig6(fit.model.tau));
    } else {
        let _ = writeln!(o, "  tau  = unidentifiable (no decay in the samples)");
    }
    let _ = writeln!(o, "  residual norm = {} N", sig6(fit.residual_norm));
    if fit.tau_identifiable && !fit.spans_time_constant {
        let _ = writeln!(o, "  warning: samples span less than one time constant");
    }
    o
}

pub fn render_creep_machine(source: &str, samples: usize, fit: &CreepFit) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "format = flexrcc-creep 1");
    let _ = writeln!(o, "source = {source}");
    let _ = writeln!(o, "samples = {samples}");
    let _ = writeln!(o, "f0 = {}", sig6(fit.model.f0));
    let _ = writeln!(o, "f_ss = {}", sig6(fit.model.f_ss));
    let _ = writeln!(o, "tau = {}", sig6(fit.model.tau));
    let _ = writeln!(o, "tau_identifiable = {}", fit.tau_identifiable);
    let _ = writeln!(o, "spans_time_constant = {}", fit.spans_time_constant);
    let _ = writeln!(o, "residual_norm = {}", sig6(fit.residual_norm));
    o
}

/// Comma-separated ranked table, one row per grid point.
pub fn render_sweep_table(points: &[SweepPoint]) -> String {
    let mut o = String::from("rank");
    if let Some(first) = points.first() {
        for (p, _) in &first.values {
            let _ = write!(o, ",{p}");
        }
    }
    o.push_str(",status,score,rcc_height,k11,k22,k33,k44,k55,k66,note\n");
    for (rank, pt) in points.iter().enumerate() {
        let _ = write!(o, "{}", rank + 1);
        for (_, v) in &pt.values {
            let _ = write!(o, ",{}", sig6(*v));
        }
        match &pt.outcome {
            Ok(e) => {
                let h = e.rcc_height.map(sig6).unwrap_or_default();
                let _ = write!(o, ",ok,{},{h}", sig6(e.score));
                for d in e.diagonal {
                    let _ = write!(o, ",{}", sig6(d));
                }
                o.push_str(",\n");
            }
            Err(reason) => {
                let note: String = reason.chars().map(|c| if c == ',' || c == '\n' { ';' } else { c }).collect();
                let _ = writeln!(o, ",infeasible,,,,,,,,,{note}");
            }
        }
    }
    o
}
