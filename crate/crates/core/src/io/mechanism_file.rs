//! The mechanism description file.
//!
//! ```text
//! format = flexrcc-mechanism 1
//! units = mm deg N
//!
//! [materials]
//! include = materials.txt
//!
//! [hinge hinge_a]
//! material = arnitel_eco
//! r = 1.25
//! t = 2.82
//! w = 5
//! h1 = 0
//!
//! [beam leg]
//! material = arnitel_eco
//! l = 10.4
//! w = 5
//! s = 5.32
//!
//! [limb left]
//! member = hinge_a x=42.85 y=14.765 z=0 theta=0
//! member = leg x=10.4 y=0 z=0 theta=20
//!
//! [mechanism]
//! reference = middle of the upper platform
//! limb = left name=left_back x=-2.5 y=10.325 z=-8.65 theta=0
//! ```

use std::path::{Path, PathBuf};

use super::kv::{parse_number, split_args, Document, Entry, Section};
use super::materials_file::{parse_materials, MaterialDef};
use crate::analysis::sweep::{
    MechanismTemplate, Objective, ParameterRange, SweepParameter, SweepSpec, WeightedObjective,
};
use crate::analysis::VerticalComplianceDatum;
use crate::elements::{BeamGeometry, HingeGeometry};
use crate::error::{Error, Result};
use crate::materials::Material;
use crate::mechanism::{
    Direction, ElementSpec, Limb, Mechanism, Member, MeasuredStiffness, MountedLimb,
};
use crate::spatial::{FramePlacement, Vec3};

pub const MECHANISM_FORMAT: &str = "flexrcc-mechanism";
pub const UNITS: &str = "mm deg N";

/// Placement as written: millimetres and degrees.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlacementDef {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub theta_deg: f64,
}

impl PlacementDef {
    pub fn to_placement(&self) -> Result<FramePlacement> {
        FramePlacement::from_degrees(self.theta_deg, Vec3::new(self.x, self.y, self.z))
    }

    fn write(&self) -> String {
        format!("x={} y={} z={} theta={}", self.x, self.y, self.z, self.theta_deg)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HingeDef {
    pub name: String,
    pub material: String,
    pub r: f64,
    pub t: f64,
    pub w: f64,
    pub h1: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeamDef {
    pub name: String,
    pub material: String,
    pub l: f64,
    pub w: f64,
    pub s: f64,
    /// Section height for the torsion constant.
    pub torsion_h: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MemberDef {
    pub element: String,
    pub placement: PlacementDef,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimbDef {
    pub name: String,
    pub members: Vec<MemberDef>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MountDef {
    pub name: String,
    pub limb: String,
    pub placement: PlacementDef,
}

/// The file's object graph. Angles stay in degrees until [`MechanismDoc::build`].
#[derive(Debug, Clone, PartialEq)]
pub struct MechanismDoc {
    pub includes: Vec<String>,
    /// Materials loaded from `includes`; not written back.
    pub library: Vec<MaterialDef>,
    pub materials: Vec<MaterialDef>,
    pub hinges: Vec<HingeDef>,
    pub beams: Vec<BeamDef>,
    pub limbs: Vec<LimbDef>,
    pub reference: String,
    pub mounts: Vec<MountDef>,
    pub sweep: Option<SweepSpec>,
    pub measured: Vec<MeasuredStiffness>,
    pub vertical: Option<VerticalComplianceDatum>,
}

/// Loads an included file by the name written in the document. Returns the
/// text and an origin label for diagnostics.
pub type IncludeResolver<'a> = dyn Fn(&str) -> Result<(String, String)> + 'a;

pub fn parse_mechanism(path: &Path) -> Result<MechanismDoc> {
    let text = read_file(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = |name: &str| {
        let p: PathBuf = dir.join(name);
        Ok((read_file(&p)?, p.display().to_string()))
    };
    parse_mechanism_str(&text, &path.display().to_string(), &resolve)
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

const SECTION_KINDS: [&str; 9] = [
    "materials", "material", "hinge", "beam", "limb", "mechanism", "sweep", "measured", "vertical",
];

pub fn parse_mechanism_str(text: &str, origin: &str, resolve: &IncludeResolver<'_>) -> Result<MechanismDoc> {
    let doc = Document::parse(text, origin)?;
    parse_header(&doc)?;

    let mut out = MechanismDoc {
        includes: Vec::new(),
        library: Vec::new(),
        materials: Vec::new(),
        hinges: Vec::new(),
        beams: Vec::new(),
        limbs: Vec::new(),
        reference: String::new(),
        mounts: Vec::new(),
        sweep: None,
        measured: Vec::new(),
        vertical: None,
    };
    let mut mechanism_section: Option<&Section> = None;
    let mut seen_once: Vec<&str> = Vec::new();

    for s in &doc.sections {
        if !SECTION_KINDS.contains(&s.kind.as_str()) {
            return Err(doc.err(s.line, &s.kind, "unknown section"));
        }
        if ["materials", "mechanism", "sweep", "measured", "vertical"].contains(&s.kind.as_str()) {
            if seen_once.contains(&s.kind.as_str()) {
                return Err(doc.err(s.line, s.label(), "section given twice"));
            }
            seen_once.push(&s.kind);
            if s.name.is_some() {
                return Err(doc.err(s.line, s.label(), "section takes no name"));
            }
        } else if s.name.is_none() {
            return Err(doc.err(s.line, &s.kind, "section needs a name"));
        }
        match s.kind.as_str() {
            "materials" => {
                doc.check_keys(s, &["include"], &["include"])?;
                for e in s.all("include") {
                    let (text, inc_origin) = resolve(&e.value)
                        .map_err(|err| doc.err(e.line, "include", err.to_string()))?;
                    for def in parse_materials(&text, &inc_origin)? {
                        if out.library.iter().any(|d| d.name == def.name) {
                            return Err(doc.err(e.line, "include", format!("material `{}` defined twice", def.name)));
                        }
                        out.library.push(def);
                    }
                    out.includes.push(e.value.clone());
                }
            }
            "material" => out.materials.push(MaterialDef::from_section(&doc, s)?),
            "hinge" => {
                doc.check_keys(s, &["material", "r", "t", "w", "h1"], &[])?;
                out.hinges.push(HingeDef {
                    name: s.name.clone().unwrap_or_default(),
                    material: doc.require(s, "material")?.value.clone(),
                    r: doc.number_req(s, "r")?,
                    t: doc.number_req(s, "t")?,
                    w: doc.number_req(s, "w")?,
                    h1: doc.number_opt(s, "h1")?.unwrap_or(0.0),
                });
            }
            "beam" => {
                doc.check_keys(s, &["material", "l", "w", "s", "torsion_h"], &[])?;
                out.beams.push(BeamDef {
                    name: s.name.clone().unwrap_or_default(),
                    material: doc.require(s, "material")?.value.clone(),
                    l: doc.number_req(s, "l")?,
                    w: doc.number_req(s, "w")?,
                    s: doc.number_req(s, "s")?,
                    torsion_h: doc.number_opt(s, "torsion_h")?,
                });
            }
            "limb" => {
                doc.check_keys(s, &["member"], &["member"])?;
                let mut members = Vec::new();
                for e in s.all("member") {
                    let (element, placement) = parse_placed(&doc, e, &[])?;
                    members.push(MemberDef { element, placement });
                }
                if members.is_empty() {
                    return Err(doc.err(s.line, "member", format!("{} has no members", s.label())));
                }
                out.limbs.push(LimbDef {
                    name: s.name.clone().unwrap_or_default(),
                    members,
                });
            }
            "mechanism" => mechanism_section = Some(s),
            "sweep" => out.sweep = Some(parse_sweep(&doc, s)?),
            "measured" => out.measured = parse_measured_section(&doc, s)?,
            "vertical" => {
                doc.check_keys(s, &["stiffness_z", "lockable"], &[])?;
                let lockable = match s.get("lockable") {
                    None => false,
                    Some(e) => parse_bool(&doc, e)?,
                };
                let k = doc.number_req(s, "stiffness_z")?;
                out.vertical = Some(
                    VerticalComplianceDatum::new(k, lockable)
                        .map_err(|err| doc.err(doc.require(s, "stiffness_z").map(|e| e.line).unwrap_or(s.line), "stiffness_z", err.to_string()))?,
                );
            }
            _ => unreachable!(),
        }
    }

    let ms = mechanism_section
        .ok_or_else(|| doc.err(doc.sections.last().map_or(1, |s| s.line), "mechanism", "missing [mechanism] section"))?;
    doc.check_keys(ms, &["reference", "limb"], &["limb"])?;
    out.reference = doc.require(ms, "reference")?.value.clone();
    for (i, e) in ms.all("limb").enumerate() {
        let (limb, placement) = parse_placed(&doc, e, &["name"])?;
        let (_, named) = split_args(&doc.origin, e)?;
        let name = named
            .iter()
            .find(|(k, _)| *k == "name")
            .map(|(_, v)| v.to_string())
            .unwrap_or_else(|| format!("{limb}_{}", i + 1));
        out.mounts.push(MountDef { name, limb, placement });
    }
    if out.mounts.len() < 2 {
        return Err(doc.err(
            ms.line,
            "limb",
            format!("mechanism requires ≥2 limbs, got {}", out.mounts.len()),
        ));
    }

    resolve_references(&doc, &out)?;
    out.build()?;
    Ok(out)
}

fn parse_header(doc: &Document) -> Result<()> {
    for e in &doc.header {
        if e.key != "format" && e.key != "units" {
            return Err(doc.err(e.line, &e.key, "unknown header key"));
        }
    }
    doc.expect_format(MECHANISM_FORMAT, 1)?;
    let first = doc.sections.first().map_or(1, |s| s.line);
    let units = doc
        .header_value("units")
        .ok_or_else(|| doc.err(first, "units", format!("missing `units = {UNITS}` header")))?;
    if units.value.split_whitespace().collect::<Vec<_>>().join(" ") != UNITS {
        return Err(doc.err(units.line, "units", format!("expected `{UNITS}`, found `{}`", units.value)));
    }
    Ok(())
}

fn parse_bool(doc: &Document, e: &Entry) -> Result<bool> {
    match e.value.as_str() {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        other => Err(doc.err(e.line, &e.key, format!("expected true or false, found `{other}`"))),
    }
}

/// `target x=.. y=.. z=.. theta=..`; omitted coordinates are zero.
fn parse_placed(doc: &Document, e: &Entry, extra: &[&str]) -> Result<(String, PlacementDef)> {
    let (target, named) = split_args(&doc.origin, e)?;
    let target = target.ok_or_else(|| doc.err(e.line, &e.key, "missing element or limb name"))?;
    let mut p = PlacementDef::default();
    for (k, v) in named {
        let field = format!("{}.{k}", e.key);
        let slot = match k {
            "x" => &mut p.x,
            "y" => &mut p.y,
            "z" => &mut p.z,
            "theta" => &mut p.theta_deg,
            _ if extra.contains(&k) => continue,
            _ => return Err(doc.err(e.line, field, "unknown argument")),
        };
        *slot = parse_number(&doc.origin, e.line, &field, v)?;
    }
    Ok((target.to_string(), p))
}

fn parse_sweep(doc: &Document, s: &Section) -> Result<SweepSpec> {
    let mut ranges = Vec::new();
    let mut objectives = Vec::new();
    for e in &s.entries {
        let fail = |msg: String| doc.err(e.line, &e.key, msg);
        if s.entries.iter().take_while(|o| !std::ptr::eq(*o, e)).any(|o| o.key == e.key) {
            return Err(fail("duplicate key in [sweep]".into()));
        }
        let mut tokens: Vec<&str> = e.value.split_whitespace().collect();
        if let Some(name) = e.key.strip_prefix("param.") {
            let parameter: SweepParameter = name.parse().map_err(|err: Error| fail(err.to_string()))?;
            if tokens.len() != 3 {
                return Err(fail("expected `min max n`".into()));
            }
            let min = parse_number(&doc.origin, e.line, &e.key, tokens[0])?;
            let max = parse_number(&doc.origin, e.line, &e.key, tokens[1])?;
            let n: usize = tokens[2]
                .parse()
                .map_err(|_| fail(format!("expected a point count, found `{}`", tokens[2])))?;
            ranges.push(ParameterRange::new(parameter, min, max, n).map_err(|err| fail(err.to_string()))?);
        } else if let Some(kind) = e.key.strip_prefix("objective.") {
            let mut weight = 1.0;
            if let Some(last) = tokens.last().and_then(|t| t.strip_prefix("weight=")) {
                weight = parse_number(&doc.origin, e.line, &format!("{}.weight", e.key), last)?;
                tokens.pop();
            }
            if tokens.len() != 1 {
                return Err(fail("expected one value and an optional `weight=`".into()));
            }
            let value = tokens[0];
            let objective = if kind == "rcc_height_target" {
                Objective::RccHeightTarget(parse_number(&doc.origin, e.line, &e.key, value)?)
            } else if kind == "stiffness_ratio_max" {
                let (a, b) = value
                    .split_once('/')
                    .ok_or_else(|| fail(format!("expected `<stiff>/<soft>`, found `{value}`")))?;
                let dir = |d: &str| d.parse::<Direction>().map_err(|err| fail(err.to_string()));
                Objective::StiffnessRatioMax {
                    stiff: dir(a)?,
                    soft: dir(b)?,
                }
            } else if let Some(axis) = kind.strip_prefix("diag_target.") {
                Objective::DiagTarget {
                    direction: axis.parse().map_err(|err: Error| fail(err.to_string()))?,
                    value: parse_number(&doc.origin, e.line, &e.key, value)?,
                }
            } else {
                return Err(fail("unknown objective".into()));
            };
            objectives.push(WeightedObjective { objective, weight });
        } else {
            return Err(fail("unknown key in [sweep]".into()));
        }
    }
    SweepSpec::new(ranges, objectives).map_err(|err| doc.err(s.line, "sweep", err.to_string()))
}

pub(crate) fn parse_measured_section(doc: &Document, s: &Section) -> Result<Vec<MeasuredStiffness>> {
    let mut out: Vec<MeasuredStiffness> = Vec::new();
    for e in &s.entries {
        let direction: Direction = e
            .key
            .parse()
            .map_err(|err: Error| doc.err(e.line, &e.key, err.to_string()))?;
        if out.iter().any(|m| m.direction == direction) {
            return Err(doc.err(e.line, &e.key, "direction given twice"));
        }
        let values = e
            .value
            .split_whitespace()
            .map(|t| parse_number(&doc.origin, e.line, &e.key, t))
            .collect::<Result<Vec<f64>>>()?;
        let m = match values[..] {
            [v] => MeasuredStiffness::single(direction, v),
            [a, b] => MeasuredStiffness::new(direction, a, b),
            _ => return Err(doc.err(e.line, &e.key, "expected one value or a `low high` range")),
        };
        if m.low.is_nan() || m.low <= 0.0 {
            return Err(doc.err(e.line, &e.key, "measured stiffness must be positive"));
        }
        out.push(m);
    }
    Ok(out)
}

/// Name resolution and geometry checks, reported against the defining line.
fn resolve_references(doc: &Document, out: &MechanismDoc) -> Result<()> {
    let section = |kind: &str, name: &str| {
        doc.sections
            .iter()
            .find(|s| s.kind == kind && s.name.as_deref() == Some(name))
            .expect("section exists")
    };
    for d in &out.materials {
        if out.materials.iter().filter(|o| o.name == d.name).count() > 1 || out.library.iter().any(|o| o.name == d.name) {
            let s = section("material", &d.name);
            return Err(doc.err(s.line, s.label(), "material defined twice"));
        }
    }
    let mut element_names: Vec<&str> = Vec::new();
    for (kind, name, material) in out
        .hinges
        .iter()
        .map(|h| ("hinge", &h.name, &h.material))
        .chain(out.beams.iter().map(|b| ("beam", &b.name, &b.material)))
    {
        let s = section(kind, name);
        if element_names.contains(&name.as_str()) {
            return Err(doc.err(s.line, s.label(), "element name defined twice"));
        }
        element_names.push(name);
        let entry = s.get("material").expect("required above");
        if out.material(material).is_none() {
            return Err(doc.err(entry.line, "material", format!("unknown material `{material}`")));
        }
        let check = match kind {
            "hinge" => out.hinge_geometry(out.hinges.iter().find(|h| &h.name == name).unwrap()).map(|_| ()),
            _ => out.beam_geometry(out.beams.iter().find(|b| &b.name == name).unwrap()).map(|_| ()),
        };
        check.map_err(|err| doc.err(s.line, s.label(), err.to_string()))?;
    }
    for l in &out.limbs {
        let s = section("limb", &l.name);
        if out.limbs.iter().filter(|o| o.name == l.name).count() > 1 {
            return Err(doc.err(s.line, s.label(), "limb defined twice"));
        }
        for (m, e) in l.members.iter().zip(s.all("member")) {
            if !element_names.contains(&m.element.as_str()) {
                return Err(doc.err(e.line, "member", format!("unknown element `{}`", m.element)));
            }
            if m.placement.z != 0.0 {
                return Err(doc.err(e.line, "member.z", "members must lie in the tip plane (z = 0)"));
            }
        }
    }
    let ms = doc.sections.iter().find(|s| s.kind == "mechanism").expect("checked");
    for (i, (m, e)) in out.mounts.iter().zip(ms.all("limb")).enumerate() {
        if !out.limbs.iter().any(|l| l.name == m.limb) {
            return Err(doc.err(e.line, "limb", format!("unknown limb `{}`", m.limb)));
        }
        if out.mounts[..i].iter().any(|o| o.name == m.name) {
            return Err(doc.err(e.line, "limb.name", format!("mounted limb `{}` given twice", m.name)));
        }
    }
    Ok(())
}

impl MechanismDoc {
    pub fn material(&self, name: &str) -> Option<&MaterialDef> {
        self.materials
            .iter()
            .chain(self.library.iter())
            .find(|m| m.name == name)
    }

    fn resolved_material(&self, name: &str) -> Result<Material> {
        self.material(name)
            .ok_or_else(|| Error::InvalidMechanism(format!("unknown material `{name}`")))?
            .to_material()
    }

    pub fn hinge_geometry(&self, h: &HingeDef) -> Result<HingeGeometry> {
        HingeGeometry::new(h.r, h.t, h.w, h.h1, self.resolved_material(&h.material)?)
    }

    pub fn beam_geometry(&self, b: &BeamDef) -> Result<BeamGeometry> {
        let g = BeamGeometry::new(b.l, b.w, b.s, self.resolved_material(&b.material)?)?;
        match b.torsion_h {
            Some(h) => g.with_torsion_height(h),
            None => Ok(g),
        }
    }

    fn element(&self, name: &str) -> Result<ElementSpec> {
        if let Some(h) = self.hinges.iter().find(|h| h.name == name) {
            return Ok(ElementSpec::Hinge(self.hinge_geometry(h)?));
        }
        if let Some(b) = self.beams.iter().find(|b| b.name == name) {
            return Ok(ElementSpec::Beam(self.beam_geometry(b)?));
        }
        Err(Error::InvalidMechanism(format!("unknown element `{name}`")))
    }

    /// Converts to the analysis model; degrees become radians here.
    pub fn build(&self) -> Result<Mechanism> {
        let mut limbs = Vec::with_capacity(self.limbs.len());
        for l in &self.limbs {
            let members = l
                .members
                .iter()
                .map(|m| {
                    Ok(Member {
                        name: m.element.clone(),
                        element: self.element(&m.element)?,
                        placement: m.placement.to_placement()?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            limbs.push(Limb::new(&l.name, members)?);
        }
        let mounted = self
            .mounts
            .iter()
            .map(|m| {
                let limb = self
                    .limbs
                    .iter()
                    .position(|l| l.name == m.limb)
                    .ok_or_else(|| Error::InvalidMechanism(format!("unknown limb `{}`", m.limb)))?;
                Ok(MountedLimb {
                    name: m.name.clone(),
                    limb: limbs[limb].clone(),
                    placement: m.placement.to_placement()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Mechanism::new(&self.reference, mounted)
    }

    /// Copy with sweep parameters applied. Signs of angles and offsets are kept.
    pub fn with_parameters(&self, values: &[(SweepParameter, f64)]) -> Result<Self> {
        let mut d = self.clone();
        let keep_sign = |old: f64, v: f64| if old < 0.0 { -v } else { v };
        for &(p, v) in values {
            match p {
                SweepParameter::HingeT => d.hinges.iter_mut().for_each(|h| h.t = v),
                SweepParameter::HingeR => d.hinges.iter_mut().for_each(|h| h.r = v),
                SweepParameter::HingeW => d.hinges.iter_mut().for_each(|h| h.w = v),
                SweepParameter::LegAngle => {
                    if !(v > 0.0 && v < 90.0) {
                        return Err(Error::InvalidGeometry(format!("leg angle must lie in (0°, 90°), got {v}°")));
                    }
                    let beams: Vec<String> = d.beams.iter().map(|b| b.name.clone()).collect();
                    for l in &mut d.limbs {
                        for m in &mut l.members {
                            if beams.contains(&m.element) {
                                m.placement.theta_deg = keep_sign(m.placement.theta_deg, v);
                            }
                        }
                    }
                }
                SweepParameter::LegY => d
                    .mounts
                    .iter_mut()
                    .for_each(|m| m.placement.y = keep_sign(m.placement.y, v)),
                SweepParameter::LegZ => d
                    .mounts
                    .iter_mut()
                    .for_each(|m| m.placement.z = keep_sign(m.placement.z, v)),
            }
        }
        Ok(d)
    }

    pub fn element_count(&self) -> usize {
        self.mounts
            .iter()
            .filter_map(|m| self.limbs.iter().find(|l| l.name == m.limb))
            .map(|l| l.members.len())
            .sum()
    }

    /// Writes the document back in canonical form.
    pub fn to_text(&self) -> String {
        let mut out = format!("format = {MECHANISM_FORMAT} 1\nunits = {UNITS}\n");
        if !self.includes.is_empty() {
            out.push_str("\n[materials]\n");
            for i in &self.includes {
                out.push_str(&format!("include = {i}\n"));
            }
        }
        for m in &self.materials {
            out.push('\n');
            m.write(&mut out);
        }
        for h in &self.hinges {
            out.push_str(&format!(
                "\n[hinge {}]\nmaterial = {}\nr = {}\nt = {}\nw = {}\nh1 = {}\n",
                h.name, h.material, h.r, h.t, h.w, h.h1
            ));
        }
        for b in &self.beams {
            out.push_str(&format!(
                "\n[beam {}]\nmaterial = {}\nl = {}\nw = {}\ns = {}\n",
                b.name, b.material, b.l, b.w, b.s
            ));
            if let Some(h) = b.torsion_h {
                out.push_str(&format!("torsion_h = {h}\n"));
            }
        }
        for l in &self.limbs {
            out.push_str(&format!("\n[limb {}]\n", l.name));
            for m in &l.members {
                out.push_str(&format!("member = {} {}\n", m.element, m.placement.write()));
            }
        }
        out.push_str(&format!("\n[mechanism]\nreference = {}\n", self.reference));
        for m in &self.mounts {
            out.push_str(&format!("limb = {} name={} {}\n", m.limb, m.name, m.placement.write()));
        }
        if let Some(s) = &self.sweep {
            out.push_str("\n[sweep]\n");
            for r in &s.ranges {
                out.push_str(&format!("param.{} = {} {} {}\n", r.parameter, r.min, r.max, r.n));
            }
            for o in &s.objectives {
                let (key, value) = match o.objective {
                    Objective::RccHeightTarget(t) => ("rcc_height_target".to_string(), t.to_string()),
                    Objective::StiffnessRatioMax { stiff, soft } => {
                        ("stiffness_ratio_max".to_string(), format!("{stiff}/{soft}"))
                    }
                    Objective::DiagTarget { direction, value } => {
                        (format!("diag_target.{direction}"), value.to_string())
                    }
                };
                out.push_str(&format!("objective.{key} = {value} weight={}\n", o.weight));
            }
        }
        if !self.measured.is_empty() {
            out.push_str("\n[measured]\n");
            for m in &self.measured {
                if m.low == m.high {
                    out.push_str(&format!("{} = {}\n", m.direction, m.low));
                } else {
                    out.push_str(&format!("{} = {} {}\n", m.direction, m.low, m.high));
                }
            }
        }
        if let Some(v) = &self.vertical {
            out.push_str(&format!(
                "\n[vertical]\nstiffness_z = {}\nlockable = {}\n",
                v.stiffness_z, v.lockable
            ));
        }
        out
    }
}

impl MechanismTemplate for MechanismDoc {
    fn instantiate(&self, values: &[(SweepParameter, f64)]) -> Result<Mechanism> {
        self.with_parameters(values)?.build()
    }
}
