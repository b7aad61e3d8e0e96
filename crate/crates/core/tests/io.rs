use std::path::PathBuf;

use flexrcc::fixtures;
use flexrcc::io::{parse_mechanism, parse_mechanism_str, MechanismDoc};
use proptest::prelude::*;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn reparse(doc: &MechanismDoc) -> MechanismDoc {
    parse_mechanism_str(&doc.to_text(), "round-trip", &fixtures::bundled_resolver).unwrap()
}

#[test]
fn bundled_file_from_disk() {
    let doc = parse_mechanism(&data_dir().join("small_rcc.mech")).unwrap();
    assert_eq!(doc, fixtures::small_rcc().unwrap());
    let m = doc.build().unwrap();
    assert_eq!(m.limbs().len(), 4);
    assert_eq!(m.element_count(), 12);
    let tips: Vec<(f64, f64, f64)> = doc.mounts.iter().map(|p| (p.placement.x, p.placement.y, p.placement.z)).collect();
    assert_eq!(
        tips,
        vec![(-2.5, 10.325, -8.65), (-2.5, -10.325, -8.65), (-2.5, 10.325, 8.65), (-2.5, -10.325, 8.65)]
    );
    let left = &doc.limbs[0];
    assert_eq!(left.members[0].placement.x, 42.85);
    assert_eq!(left.members[0].placement.y, 14.765);
    assert_eq!(left.members[1].placement.theta_deg, 20.0);
    assert_eq!(left.members[2].placement.x, 9.15);
}

#[test]
fn include_is_resolved_next_to_the_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("materials.txt"), fixtures::MATERIALS).unwrap();
    let path = dir.path().join("copy.mech");
    std::fs::write(&path, fixtures::SMALL_RCC).unwrap();
    assert_eq!(parse_mechanism(&path).unwrap(), fixtures::small_rcc().unwrap());

    std::fs::remove_file(dir.path().join("materials.txt")).unwrap();
    let e = parse_mechanism(&path).unwrap_err().to_string();
    assert!(e.contains("materials.txt"), "{e}");
}

#[test]
fn missing_file_names_the_path() {
    let e = parse_mechanism(&data_dir().join("no_such.mech")).unwrap_err().to_string();
    assert!(e.contains("no_such.mech"), "{e}");
}

#[test]
fn bundled_round_trip_is_exact() {
    let doc = fixtures::small_rcc().unwrap();
    let again = reparse(&doc);
    assert_eq!(again, doc);
    assert_eq!(again.to_text(), doc.to_text());
}

fn positive() -> impl Strategy<Value = f64> {
    prop_oneof![0.01f64..100.0, 1e-6f64..1e-3, (1u32..1000).prop_map(|n| n as f64 / 7.0)]
}

fn coordinate() -> impl Strategy<Value = f64> {
    prop_oneof![-1e3f64..1e3, Just(0.0), (-500i32..500).prop_map(|n| n as f64 * 0.1)]
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn edited_documents_round_trip(
        hinge in (positive(), positive(), positive(), 0.0f64..5.0),
        beam in (positive(), positive(), positive(), proptest::option::of(positive())),
        members in proptest::collection::vec((coordinate(), coordinate(), -180.0f64..180.0), 3),
        mounts in proptest::collection::vec((coordinate(), coordinate(), coordinate(), -180.0f64..180.0), 4),
    ) {
        let mut doc = fixtures::small_rcc().unwrap();
        let h = &mut doc.hinges[0];
        (h.r, h.t, h.w, h.h1) = hinge;
        let b = &mut doc.beams[0];
        (b.l, b.w, b.s, b.torsion_h) = beam;
        for (m, (x, y, th)) in doc.limbs[0].members.iter_mut().zip(members) {
            m.placement.x = x;
            m.placement.y = y;
            m.placement.theta_deg = th;
        }
        for (m, (x, y, z, th)) in doc.mounts.iter_mut().zip(mounts) {
            m.placement.x = x;
            m.placement.y = y;
            m.placement.z = z;
            m.placement.theta_deg = th;
        }
        let again = reparse(&doc);
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_text(), doc.to_text());
    }
}
