use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const DOCTOR: &str = "a doctor gives medicines to the patient";

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/corpus")
}

fn dcb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcb"))
        .args(args)
        .output()
        .expect("running dcb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn doctor_file(dir: &Path) -> PathBuf {
    let path = dir.join("doctor.txt");
    fs::write(&path, DOCTOR).unwrap();
    path
}

#[test]
fn extract_writes_xml_and_plantuml() {
    let dir = tempfile::tempdir().unwrap();
    let input = doctor_file(dir.path());
    let out = dir.path().join("out");
    let o = dcb(&[
        "extract",
        input.to_str().unwrap(),
        "--format",
        "both",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    let xml = fs::read_to_string(out.join("doctor.xml")).unwrap();
    let model = dcb_core::from_xml(&xml).unwrap();
    let names: Vec<&str> = model.classes.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["Doctor", "Medicine", "Patient"]);
    assert_eq!(model.relationships.len(), 1);

    let puml = fs::read_to_string(out.join("doctor.puml")).unwrap();
    assert!(puml.starts_with("@startuml\n"));
    assert!(puml.contains("Doctor --> Medicine : give\n"));
    assert!(puml.ends_with("@enduml\n"));
}

#[test]
fn extract_plantuml_only() {
    let dir = tempfile::tempdir().unwrap();
    let input = doctor_file(dir.path());
    let o = dcb(&[
        "extract",
        input.to_str().unwrap(),
        "--format",
        "plantuml",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(dir.path().join("doctor.puml").is_file());
    assert!(!dir.path().join("doctor.xml").exists());
}

#[test]
fn missing_input_fails() {
    let dir = tempfile::tempdir().unwrap();
    let o = dcb(&[
        "extract",
        dir.path().join("nope.txt").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).starts_with("error:"));
    assert!(o.stdout.is_empty());
}

#[test]
fn unsupported_format_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reqs.doc");
    fs::write(&path, DOCTOR).unwrap();
    let o = dcb(&["extract", path.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("(.txt)"), "{}", stderr(&o));
}

#[test]
fn strict_mode_drops_unknown_classes() {
    let dir = tempfile::tempdir().unwrap();
    let input = doctor_file(dir.path());
    let ont = dir.path().join("clinic.ont");
    fs::write(&ont, "concept doctor\nconcept patient\n").unwrap();
    let o = dcb(&[
        "extract",
        input.to_str().unwrap(),
        "--ontology",
        ont.to_str().unwrap(),
        "--mode",
        "strict",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let model =
        dcb_core::from_xml(&fs::read_to_string(dir.path().join("doctor.xml")).unwrap()).unwrap();
    let names: Vec<&str> = model.classes.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["Doctor", "Patient"]);
    assert!(model.relationships.is_empty());
    assert_eq!(model.mode.as_deref(), Some("strict"));
}

#[test]
fn trace_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let input = doctor_file(dir.path());
    let o = dcb(&[
        "extract",
        input.to_str().unwrap(),
        "--trace",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let err = stderr(&o);
    let rules: Vec<&str> = err.lines().filter(|l| l.starts_with("RULE\t")).collect();
    assert_eq!(rules.len(), 4);
    assert!(rules.contains(&"RULE\tR10\t0\ta doctor gives medicines\tassociation doctor medicine give"));
    assert!(err.contains("ELEMENT\tclass\tDoctor\tR1:s0\n"));
}

#[test]
fn tag_lists_tokens() {
    let dir = tempfile::tempdir().unwrap();
    let input = doctor_file(dir.path());
    let o = dcb(&["tag", input.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    let tags: Vec<&str> = text.lines().map(|l| l.rsplit('\t').next().unwrap()).collect();
    assert_eq!(tags, ["DT", "NN", "VBZ", "NNS", "TO", "DT", "NN"]);
    assert_eq!(text.lines().nth(2), Some("0\t2\tgives\tgive\tVBZ"));
}

#[test]
fn chunk_lists_phrases_then_clause() {
    let dir = tempfile::tempdir().unwrap();
    let input = doctor_file(dir.path());
    let o = dcb(&["chunk", input.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    let kinds: Vec<&str> = text
        .lines()
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            if f[0] == "PHRASE" {
                f[2].split('[').next().unwrap()
            } else {
                f[0]
            }
        })
        .collect();
    assert_eq!(kinds, ["NP", "VG", "NP", "PP", "CLAUSE"]);
}

#[test]
fn empty_file_prints_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    fs::write(&path, "").unwrap();
    for cmd in ["tag", "chunk"] {
        let o = dcb(&[cmd, path.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty() && o.stderr.is_empty());
    }
}

#[test]
fn eval_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.txt");
    let c = corpus();
    let o = dcb(&[
        "eval",
        "--docs",
        c.join("docs").to_str().unwrap(),
        "--gold",
        c.join("gold").to_str().unwrap(),
        "--ontology",
        c.join("ontology").to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("aggregate (2 documents)"));
    let report = fs::read_to_string(report).unwrap();
    assert_eq!(report.lines().count(), 32);
    assert!(report.lines().any(|l| l.starts_with("combined.recall=")));
}

#[test]
fn eval_without_gold_fails() {
    let dir = tempfile::tempdir().unwrap();
    let docs = dir.path().join("docs");
    let gold = dir.path().join("gold");
    fs::create_dir_all(&docs).unwrap();
    fs::create_dir_all(&gold).unwrap();
    doctor_file(&docs);
    let o = dcb(&[
        "eval",
        "--docs",
        docs.to_str().unwrap(),
        "--gold",
        gold.to_str().unwrap(),
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("missing gold model for `doctor`"), "{}", stderr(&o));
}

#[test]
fn version_flag() {
    let o = dcb(&["--version"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), format!("dcb {}", dcb_core::VERSION));
}
