use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use polydeza::graph::codec::{decode_graph6, decode_planar_code};
use polydeza::{canonical_code, fixtures};

fn polydeza(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polydeza"))
        .args(args)
        .env_remove("POLYDEZA_THREADS")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(format!("{name}.pc"))
        .display()
        .to_string()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_quartic_contains_the_small_exceptional_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "q.pc");
    let res = polydeza(&["gen", "--class", "quartic", "--max-n", "9", "--out", &out]);
    assert_eq!(res.status.code(), Some(0));
    let codes: Vec<_> = decode_planar_code(&std::fs::read(&out).unwrap())
        .unwrap()
        .iter()
        .map(|g| canonical_code(g).unwrap())
        .collect();
    assert!(codes.contains(&canonical_code(&fixtures::octahedron()).unwrap()));
    assert!(codes.contains(&canonical_code(&fixtures::antiprism(4)).unwrap()));
    assert_eq!(json(&res)["counts"]["9"], 1);
}

#[test]
fn gen_small_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "c.pc");
    let res = polydeza(&["gen", "--class", "cubic", "--max-n", "4", "--out", &out]);
    assert_eq!(res.status.code(), Some(0));
    assert_eq!(
        decode_planar_code(&std::fs::read(&out).unwrap())
            .unwrap()
            .len(),
        1
    );

    let res = polydeza(&[
        "gen", "--class", "quad", "--max-n", "8", "--no-b", "--out", &out,
    ]);
    assert_eq!(res.status.code(), Some(0));
    let cube = canonical_code(&fixtures::cube()).unwrap();
    let graphs = decode_planar_code(&std::fs::read(&out).unwrap()).unwrap();
    assert!(graphs.iter().any(|g| canonical_code(g).unwrap() == cube));
}

#[test]
fn deterministic_gen_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for i in 0..2 {
        let out = path(dir.path(), &format!("t{i}.pc"));
        let summary = path(dir.path(), &format!("s{i}.json"));
        let res = polydeza(&[
            "--deterministic",
            "gen",
            "--class",
            "tri",
            "--max-n",
            "9",
            "--out",
            &out,
            "--summary",
            &summary,
        ]);
        assert_eq!(res.status.code(), Some(0));
        files.push((
            std::fs::read(&out).unwrap(),
            std::fs::read(&summary).unwrap(),
        ));
    }
    assert_eq!(files[0], files[1]);
}

#[test]
fn classify_dodecahedron_and_its_medial() {
    let dir = tempfile::tempdir().unwrap();
    let res = polydeza(&["classify", "--input", &fixture("dodecahedron")]);
    assert_eq!(res.status.code(), Some(0));
    let rec = &json(&res)["records"][0];
    assert_eq!(rec["class"]["kind"]["row"], "cubic-no-quadrangular-faces");
    assert_eq!(rec["class"]["lambda_mu"], serde_json::json!([0, 1]));

    let medial = path(dir.path(), "m.pc");
    let res = polydeza(&[
        "transform",
        "--op",
        "medial",
        "--input",
        &fixture("dodecahedron"),
        "--output",
        &medial,
    ]);
    assert_eq!(res.status.code(), Some(0));
    let res = polydeza(&["classify", "--input", &medial]);
    assert_eq!(
        json(&res)["records"][0]["type_profile"],
        serde_json::json!([0, 1])
    );
}

#[test]
fn classify_writes_a_census() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "census.csv");
    let out = path(dir.path(), "records.json");
    let res = polydeza(&[
        "classify",
        "--population",
        "table2",
        "--out",
        &out,
        "--census",
        &csv,
    ]);
    assert_eq!(res.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("order,row,count\n"));
    assert!(text.contains("table2:matching"));
}

#[test]
fn convert_refuses_to_drop_embeddings() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = path(dir.path(), "cube.g6");
    let res = polydeza(&[
        "convert",
        "--input",
        &fixture("cube"),
        "--output",
        &g6,
        "--to",
        "graph6",
    ]);
    assert_eq!(res.status.code(), Some(2));
    let res = polydeza(&[
        "convert",
        "--input",
        &fixture("cube"),
        "--output",
        &g6,
        "--to",
        "graph6",
        "--allow-loss",
    ]);
    assert_eq!(res.status.code(), Some(0));
    let back = decode_graph6(std::fs::read_to_string(&g6).unwrap().trim()).unwrap();
    let file = decode_planar_code(&std::fs::read(fixture("cube")).unwrap()).unwrap();
    assert_eq!(back, file[0].to_abstract());

    let pc = path(dir.path(), "cube.pc");
    let res = polydeza(&[
        "convert",
        "--input",
        &g6,
        "--output",
        &pc,
        "--to",
        "planar_code",
    ]);
    assert_eq!(res.status.code(), Some(0));
    let g = &decode_planar_code(&std::fs::read(&pc).unwrap()).unwrap()[0];
    assert_eq!(
        canonical_code(g).unwrap(),
        canonical_code(&fixtures::cube()).unwrap()
    );
}

#[test]
fn transforms_pair_and_glue() {
    let dir = tempfile::tempdir().unwrap();
    let pre = path(dir.path(), "pre.pc");
    let res = polydeza(&[
        "transform",
        "--op",
        "medial-preimage",
        "--input",
        &fixture("icosidodecahedron"),
        "--output",
        &pre,
    ]);
    assert_eq!(res.status.code(), Some(0));
    let pair = decode_planar_code(&std::fs::read(&pre).unwrap()).unwrap();
    let mut orders: Vec<usize> = pair.iter().map(|g| g.n()).collect();
    orders.sort();
    assert_eq!(orders, vec![12, 20]);

    let hosts = path(dir.path(), "hosts.pc");
    let mut bytes = std::fs::read(fixture("nine-vertex-quartic")).unwrap();
    let second = std::fs::read(fixture("square-antiprism")).unwrap();
    bytes.extend_from_slice(&second[polydeza::graph::codec::PLANAR_CODE_HEADER.len()..]);
    std::fs::write(&hosts, bytes).unwrap();
    let glued = path(dir.path(), "glued.pc");
    let res = polydeza(&[
        "transform",
        "--op",
        "t-construct",
        "--input",
        &hosts,
        "--output",
        &glued,
    ]);
    assert_eq!(
        res.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let res = polydeza(&["classify", "--input", &glued]);
    let rec = &json(&res)["records"][0];
    assert_eq!(rec["order"], 20);
    assert_eq!(rec["type_profile"], serde_json::json!([0, 1, 2, 3]));

    let split = path(dir.path(), "split.pc");
    let res = polydeza(&[
        "transform",
        "--op",
        "t-decompose",
        "--input",
        &glued,
        "--output",
        &split,
    ]);
    assert_eq!(res.status.code(), Some(0));
    assert_eq!(
        decode_planar_code(&std::fs::read(&split).unwrap())
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = path(dir.path(), "r.json");
    let res = polydeza(&[
        "verify",
        "--suite",
        "prop30",
        "--population",
        "fixtures:5regular",
        "--report",
        &report,
    ]);
    assert_eq!(res.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert!(value["notes"]
        .to_string()
        .contains("icosahedron: both bounds attained"));

    let res = polydeza(&["verify", "--suite", "thm35r", "--population", "quartic:11"]);
    assert_eq!(res.status.code(), Some(0));
    let res = polydeza(&["verify", "--suite", "nope", "--population", "fixtures:all"]);
    assert_eq!(res.status.code(), Some(2));
    let res = polydeza(&["verify", "--suite", "thm35r", "--population", "bogus:3"]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn verify_checks_graphs_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let res = polydeza(&[
        "verify",
        "--suite",
        "lemma_sc",
        "--input",
        &fixture("snub-cube"),
    ]);
    assert_eq!(res.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&res.stdout).contains("checked 1"));
    // K(3,3) is outside the planar hypothesis and is skipped
    let g6 = path(dir.path(), "k33.g6");
    std::fs::write(&g6, "EFz_\n").unwrap();
    let res = polydeza(&["verify", "--suite", "lemma2a", "--input", &g6]);
    assert_eq!(res.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&res.stdout).contains("skipped 1"));
}

#[test]
fn io_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let res = polydeza(&["classify", "--input", &path(dir.path(), "missing.pc")]);
    assert_eq!(res.status.code(), Some(3));
    let res = polydeza(&["gen", "--class", "quad", "--max-n", "300", "--out", "x"]);
    assert_eq!(res.status.code(), Some(2));
    let res = polydeza(&[
        "gen",
        "--class",
        "tri",
        "--max-n",
        "6",
        "--out",
        &path(dir.path(), "no/such/dir.pc"),
    ]);
    assert_eq!(res.status.code(), Some(3));
    let bad = path(dir.path(), "bad.pc");
    std::fs::write(&bad, b">>planar_code<<\x04\x02\x00").unwrap();
    let res = polydeza(&["classify", "--input", &bad]);
    assert_eq!(res.status.code(), Some(3));
}

#[test]
fn fixtures_command_reproduces_the_checked_in_files() {
    let dir = tempfile::tempdir().unwrap();
    let res = polydeza(&["fixtures", "--out", &dir.path().display().to_string()]);
    assert_eq!(res.status.code(), Some(0));
    let shipped = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    for entry in std::fs::read_dir(&shipped).unwrap() {
        let name = entry.unwrap().file_name();
        assert_eq!(
            std::fs::read(shipped.join(&name)).unwrap(),
            std::fs::read(dir.path().join(&name)).unwrap(),
            "{name:?}"
        );
    }
}
