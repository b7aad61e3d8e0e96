use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flexrcc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// The bundled mechanism and its materials copied into `dir`.
fn copy_bundled(dir: &Path, edit: impl Fn(String) -> String) -> PathBuf {
    std::fs::copy(data("materials.txt"), dir.join("materials.txt")).unwrap();
    let path = dir.join("edited.mech");
    std::fs::write(&path, edit(std::fs::read_to_string(data("small_rcc.mech")).unwrap())).unwrap();
    path
}

#[test]
fn analyze_prints_matrix_and_assumptions() {
    let o = run(&["analyze", s(&data("small_rcc.mech")), "--rcc"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    for needle in ["isotrop", "rigid platform", "small deflection", "186.551", "rcc"] {
        assert!(text.to_lowercase().contains(needle), "missing `{needle}`:\n{text}");
    }
}

#[test]
fn machine_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    let mech = data("small_rcc.mech");
    let measured = data("measured_small_rcc.txt");
    for out in [&a, &b] {
        let o = run(&["analyze", s(&mech), "--measured", s(&measured), "--out", s(out)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("format = "));
    assert!(text.contains("stiffness.k11 = 186.551"), "{text}");
    assert!(text.contains("deviation."), "{text}");

    let (c, d) = (dir.path().join("c.csv"), dir.path().join("d.csv"));
    for out in [&c, &d] {
        assert_eq!(run(&["sweep", s(&mech), "--out", s(out)]).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&c).unwrap(), std::fs::read(&d).unwrap());
}

#[test]
fn sweep_prints_ranked_table() {
    let o = run(&["sweep", s(&data("small_rcc.mech"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("rank,leg_angle,status,score,rcc_height,k11"));
    assert_eq!(lines.count(), 1);
}

#[test]
fn creep_reports_time_constant() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("creep.txt");
    let o = run(&["creep", s(&data("creep_synthetic.csv")), "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("200"), "{}", stdout(&o));
    assert!(std::fs::read_to_string(&out).unwrap().contains("tau"));
}

#[test]
fn constant_creep_data_is_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.csv");
    let rows: String = (0..10).map(|i| format!("{},19\n", i * 10)).collect();
    std::fs::write(&path, format!("t,f\n{rows}")).unwrap();
    let o = run(&["creep", s(&path)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).to_lowercase().contains("unidentifiable"), "{}", stdout(&o));
}

#[test]
fn validate_summarizes() {
    let o = run(&["validate", s(&data("small_rcc.mech"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains('4') && text.contains("12"), "{text}");
}

#[test]
fn missing_file_exits_one_and_names_path() {
    for cmd in ["analyze", "sweep", "creep", "validate"] {
        let o = run(&[cmd, "/nonexistent/input.file"]);
        assert_eq!(o.status.code(), Some(1), "{cmd}");
        assert!(stderr(&o).contains("/nonexistent/input.file"), "{cmd}: {}", stderr(&o));
    }
}

#[test]
fn malformed_number_exits_one_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = copy_bundled(dir.path(), |t| t.replace("theta=20", "theta=20deg"));
    let o = run(&["analyze", s(&path)]);
    assert_eq!(o.status.code(), Some(1));
    let e = stderr(&o);
    assert!(e.contains(":27:") && e.contains("20deg"), "{e}");
}

#[test]
fn parallel_legs_exit_two_with_rcc() {
    let dir = tempfile::tempdir().unwrap();
    let path = copy_bundled(dir.path(), |t| t.replace("theta=20", "theta=0").replace("theta=-20", "theta=0"));
    assert_eq!(run(&["analyze", s(&path)]).status.code(), Some(0));
    let o = run(&["analyze", s(&path), "--rcc"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}
