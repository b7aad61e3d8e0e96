#![allow(dead_code)]

use flexrcc::elements::{notch_thickness, torsion_constant, BeamGeometry, HingeGeometry, HingeKernels};
use flexrcc::materials::Material;
use flexrcc::mechanism::{ElementSpec, Limb, Mechanism, Member, MountedLimb};
use flexrcc::{FramePlacement, SpatialMatrix6, Vec3};
use rand::Rng;

pub fn material<R: Rng>(rng: &mut R) -> Material {
    Material::isotropic("random", rng.gen_range(20.0..4000.0), rng.gen_range(0.2..0.49)).unwrap()
}

pub fn hinge<R: Rng>(rng: &mut R, m: &Material) -> HingeGeometry {
    HingeGeometry::new(
        rng.gen_range(0.3..4.0),
        rng.gen_range(0.3..4.0),
        rng.gen_range(1.0..12.0),
        rng.gen_range(0.0..3.0),
        m.clone(),
    )
    .unwrap()
}

pub fn beam<R: Rng>(rng: &mut R, m: &Material) -> BeamGeometry {
    BeamGeometry::new(
        rng.gen_range(2.0..30.0),
        rng.gen_range(1.0..12.0),
        rng.gen_range(1.0..12.0),
        m.clone(),
    )
    .unwrap()
}

pub fn placement<R: Rng>(rng: &mut R, planar: bool) -> FramePlacement {
    let z = if planar { 0.0 } else { rng.gen_range(-20.0..20.0) };
    FramePlacement::new(
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
        Vec3::new(rng.gen_range(-40.0..40.0), rng.gen_range(-40.0..40.0), z),
    )
    .unwrap()
}

pub fn member<R: Rng>(rng: &mut R, m: &Material) -> Member {
    let element = if rng.gen_bool(0.6) {
        ElementSpec::Hinge(hinge(rng, m))
    } else {
        ElementSpec::Beam(beam(rng, m))
    };
    Member {
        name: "m".into(),
        element,
        placement: placement(rng, true),
    }
}

pub fn limb<R: Rng>(rng: &mut R, m: &Material) -> Limb {
    let n = rng.gen_range(1..=4);
    Limb::new("limb", (0..n).map(|_| member(rng, m)).collect()).unwrap()
}

pub fn mounted<R: Rng>(rng: &mut R, m: &Material) -> MountedLimb {
    MountedLimb {
        name: "mount".into(),
        limb: limb(rng, m),
        placement: placement(rng, false),
    }
}

/// Two to five limbs of one random material.
pub fn mechanism<R: Rng>(rng: &mut R) -> Mechanism {
    let m = material(rng);
    let n = rng.gen_range(2..=5);
    Mechanism::new("origin", (0..n).map(|_| mounted(rng, &m)).collect()).unwrap()
}

fn scale_element(e: &ElementSpec, c: f64) -> ElementSpec {
    match e {
        ElementSpec::Hinge(g) => ElementSpec::Hinge(HingeGeometry {
            material: g.material.scaled(c).unwrap(),
            ..g.clone()
        }),
        ElementSpec::Beam(g) => ElementSpec::Beam(BeamGeometry {
            material: g.material.scaled(c).unwrap(),
            ..g.clone()
        }),
        ElementSpec::Matrix(m) => ElementSpec::Matrix(SpatialMatrix6::new(m.matrix() / c, m.kind())),
    }
}

/// Same geometry with every modulus multiplied by `c`.
pub fn scale_moduli(m: &Mechanism, c: f64) -> Mechanism {
    let limbs = m
        .limbs()
        .iter()
        .map(|ml| {
            let members = ml
                .limb
                .members()
                .iter()
                .map(|mm| Member {
                    name: mm.name.clone(),
                    element: scale_element(&mm.element, c),
                    placement: mm.placement,
                })
                .collect();
            MountedLimb {
                name: ml.name.clone(),
                limb: Limb::new(ml.limb.name(), members).unwrap(),
                placement: ml.placement,
            }
        })
        .collect();
    Mechanism::new(m.reference(), limbs).unwrap()
}

/// Largest entry-wise difference relative to the largest entry of `b`.
pub fn rel_diff(a: &SpatialMatrix6, b: &SpatialMatrix6) -> f64 {
    (a.matrix() - b.matrix()).abs().max() / b.max_abs()
}

/// Midpoint strip sums for the hinge kernels.
pub fn strip_kernels(g: &HingeGeometry, strips: usize) -> HingeKernels {
    let dx = 2.0 * g.r / strips as f64;
    let mut k = HingeKernels {
        inv_h: 0.0,
        v_inv_h: 0.0,
        v2_inv_h: 0.0,
        inv_h3: 0.0,
        v_inv_h3: 0.0,
        v2_inv_h3: 0.0,
        inv_it: 0.0,
    };
    for i in 0..strips {
        let x = (i as f64 + 0.5) * dx;
        let h = notch_thickness(g, x).unwrap();
        let v = g.r - x;
        let (a, b) = (1.0 / h, h.powi(-3));
        k.inv_h += a * dx;
        k.v_inv_h += v * a * dx;
        k.v2_inv_h += v * v * a * dx;
        k.inv_h3 += b * dx;
        k.v_inv_h3 += v * b * dx;
        k.v2_inv_h3 += v * v * b * dx;
        k.inv_it += dx / torsion_constant(g.w, h).unwrap();
    }
    k
}
