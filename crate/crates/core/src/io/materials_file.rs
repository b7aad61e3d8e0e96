//! Material library and measured-joint catalog files.

use super::kv::{Document, Section};
use crate::error::Result;
use crate::materials::{Material, MeasuredJointRecord};

pub const MATERIALS_FORMAT: &str = "flexrcc-materials";
pub const CATALOG_FORMAT: &str = "flexrcc-catalog";

/// A `[material name]` section as written.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialDef {
    pub name: String,
    /// N/mm².
    pub e: f64,
    pub nu: f64,
    /// N/mm²; derived from `e` and `nu` when absent.
    pub g: Option<f64>,
    pub note: Option<String>,
}

impl MaterialDef {
    pub fn to_material(&self) -> Result<Material> {
        let mut m = match self.g {
            Some(g) => Material::with_shear_modulus(&self.name, self.e, self.nu, g)?,
            None => Material::isotropic(&self.name, self.e, self.nu)?,
        };
        if let Some(note) = &self.note {
            m.caveat = format!("{}; {note}", m.caveat);
        }
        Ok(m)
    }

    pub(crate) fn from_section(doc: &Document, s: &Section) -> Result<Self> {
        doc.check_keys(s, &["e", "nu", "g", "note"], &[])?;
        let name = s
            .name
            .clone()
            .ok_or_else(|| doc.err(s.line, "material", "section needs a name"))?;
        let def = Self {
            name,
            e: doc.number_req(s, "e")?,
            nu: doc.number_req(s, "nu")?,
            g: doc.number_opt(s, "g")?,
            note: s.get("note").map(|e| e.value.clone()),
        };
        def.to_material()
            .map_err(|err| doc.err(s.line, s.label(), err.to_string()))?;
        Ok(def)
    }

    pub(crate) fn write(&self, out: &mut String) {
        out.push_str(&format!("[material {}]\n", self.name));
        out.push_str(&format!("e = {}\n", self.e));
        out.push_str(&format!("nu = {}\n", self.nu));
        if let Some(g) = self.g {
            out.push_str(&format!("g = {g}\n"));
        }
        if let Some(n) = &self.note {
            out.push_str(&format!("note = {n}\n"));
        }
    }
}

pub fn parse_materials(text: &str, origin: &str) -> Result<Vec<MaterialDef>> {
    let doc = Document::parse(text, origin)?;
    doc.expect_format(MATERIALS_FORMAT, 1)?;
    let mut defs: Vec<MaterialDef> = Vec::new();
    for s in &doc.sections {
        if s.kind != "material" {
            return Err(doc.err(s.line, &s.kind, "expected a [material name] section"));
        }
        let def = MaterialDef::from_section(&doc, s)?;
        if defs.iter().any(|d| d.name == def.name) {
            return Err(doc.err(s.line, s.label(), "material defined twice"));
        }
        defs.push(def);
    }
    Ok(defs)
}

/// Reads `[joint <variant>]` sections. `cross_stiffness = absent` marks a
/// missing measurement.
pub fn parse_catalog(text: &str, origin: &str) -> Result<Vec<MeasuredJointRecord>> {
    let doc = Document::parse(text, origin)?;
    doc.expect_format(CATALOG_FORMAT, 1)?;
    let mut out = Vec::new();
    for s in &doc.sections {
        if s.kind != "joint" {
            return Err(doc.err(s.line, &s.kind, "expected a [joint variant] section"));
        }
        doc.check_keys(s, &["cross_stiffness", "joint_stiffness", "max_joint_load"], &[])?;
        let variant = s
            .name
            .clone()
            .ok_or_else(|| doc.err(s.line, "joint", "section needs a variant name"))?;
        let cross = doc.require(s, "cross_stiffness")?;
        let cross = if cross.value == "absent" {
            None
        } else {
            Some(doc.number(cross)?)
        };
        let rec = MeasuredJointRecord::new(
            variant,
            cross,
            doc.number_req(s, "joint_stiffness")?,
            doc.number_req(s, "max_joint_load")?,
        )
        .map_err(|e| doc.err(s.line, s.label(), e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}
