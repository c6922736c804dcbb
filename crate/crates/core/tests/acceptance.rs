//! Acceptance criteria, one test each. Every test writes a single
//! `criterion N: PASS|FAIL ...` line to stderr (bypassing output capture)
//! before asserting.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use polydeza::analysis::{face_stats, has_four_cycle, prop1223_report, type_profile};
use polydeza::classify::{
    is_deza, run_suite, run_suite_on, run_suite_on_codes, Population, SuiteReport,
};
use polydeza::fixtures::{self, FixtureManifest};
use polydeza::generate::{
    cubic_levels, dual_levels, oracle_regular_planar, quartic_levels, triangulation_levels, Levels,
};
use polydeza::graph::codec::{
    decode_graph6, decode_planar_code, encode_graph6, encode_planar_code,
};
use polydeza::transforms::{
    medial, medial_preimage, t_construct, t_decompose, valid_sites, TDecomposition,
};
use polydeza::{canonical_code, CanonicalCode};

fn verdict(n: usize, what: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "criterion {n}: {status} {what} ({detail})"
    );
}

/// Triangulations up to 14 vertices, shared by the criteria that need
/// cubic polyhedra up to order 24.
fn triangulations() -> &'static Levels {
    static CELL: OnceLock<Levels> = OnceLock::new();
    CELL.get_or_init(|| triangulation_levels(14))
}

fn summary(r: &SuiteReport) -> String {
    format!(
        "{} on {}: checked {}, skipped {}, violations {}",
        r.suite,
        r.population,
        r.checked,
        r.skipped,
        r.violations.len()
    )
}

#[test]
fn criterion_01_platonic_type_profiles() {
    let start = Instant::now();
    let cases = [
        ("tetrahedron", fixtures::tetrahedron(), vec![2]),
        ("cube", fixtures::cube(), vec![0, 2]),
        ("octahedron", fixtures::octahedron(), vec![2, 4]),
        ("icosahedron", fixtures::icosahedron(), vec![0, 2]),
        ("dodecahedron", fixtures::dodecahedron(), vec![0, 1]),
    ];
    let mut bad = Vec::new();
    for (name, g, want) in &cases {
        let got = type_profile(&g.to_abstract()).unwrap().as_vec();
        if &got != want {
            bad.push(format!("{name}: {got:?}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(1);
    verdict(
        1,
        "Platonic type profiles",
        ok,
        &format!("{elapsed:?}, mismatches {bad:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_02_generator_gate() {
    let quartic = quartic_levels(13);
    let cubic = cubic_levels(14);
    let mut bad = Vec::new();
    for n in 6..=13 {
        let oracle = oracle_regular_planar(4, n).unwrap().len();
        if quartic.count(n) != oracle {
            bad.push(format!("quartic {n}: {} vs {oracle}", quartic.count(n)));
        }
    }
    for n in (4..=14).step_by(2) {
        let oracle = oracle_regular_planar(3, n).unwrap().len();
        if cubic.count(n) != oracle {
            bad.push(format!("cubic {n}: {} vs {oracle}", cubic.count(n)));
        }
    }
    let ok = bad.is_empty();
    verdict(
        2,
        "generated counts equal oracle counts",
        ok,
        &format!(
            "quartic {:?}, cubic {:?}, mismatches {bad:?}",
            quartic.counts(),
            cubic.counts()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_03_type_prediction_census() {
    let start = Instant::now();
    let smoke = run_suite("thm35r", "quartic:13").unwrap();
    let smoke_time = start.elapsed();
    let start = Instant::now();
    let full = run_suite("thm35r", "quartic:17").unwrap();
    let full_time = start.elapsed();
    let ok = smoke.passes()
        && full.passes()
        && full.checked > 0
        && smoke_time <= Duration::from_secs(120)
        && full_time <= Duration::from_secs(30 * 60);
    verdict(
        3,
        "predicted type equals computed type for quartic polyhedra up to 17",
        ok,
        &format!(
            "{} in {smoke_time:?}; {} in {full_time:?}",
            summary(&smoke),
            summary(&full)
        ),
    );
    assert!(ok, "{:?}", full.violations);
}

#[test]
fn criterion_04_exceptional_census() {
    let levels = quartic_levels(17);
    let deza: Vec<(usize, Option<&'static str>)> = levels
        .codes()
        .filter(|c| is_deza(&c.decode().unwrap().to_abstract()).is_some())
        .map(|c| (c.order(), fixtures::exceptional_name(c)))
        .collect();
    let want = vec![
        (6, Some("octahedron")),
        (8, Some("square-antiprism")),
        (9, Some("nine-vertex-quartic")),
    ];
    let ok = deza == want;
    verdict(
        4,
        "exactly three quartic Deza polyhedra up to order 17",
        ok,
        &format!("{} polyhedra scanned, Deza: {deza:?}", levels.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_05_extremal_equalities() {
    let g = medial(&fixtures::dodecahedron()).unwrap();
    let s = face_stats(&g);
    let rep = prop1223_report(&g).unwrap();
    let got = (s.p, s.q, s.f, s.faces_of_len(3), s.faces_of_len(5), s.q1);
    let ok = got == (30, 60, 32, 20, 12, 60)
        && s.q1 == s.q
        && rep.holds()
        && rep.lower_tight
        && rep.upper_tight;
    verdict(
        5,
        "medial of the dodecahedron attains both triangle bounds",
        ok,
        &format!("(p, q, f, f3, f5, q1) = {got:?}, {rep:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_06_girth_five_line_graphs() {
    let cubic = dual_levels(triangulations());
    let rep = run_suite_on_codes("thm4max", "cubic:24", cubic.codes()).unwrap();
    let max_order = cubic.levels.keys().max().copied().unwrap_or(0);
    let ok = rep.passes() && rep.checked > 0 && max_order == 24;
    verdict(
        6,
        "line graphs of cubic girth-5 polyhedra up to 24 are extremal quartic Deza graphs",
        ok,
        &format!("{} ({} cubic polyhedra)", summary(&rep), cubic.len()),
    );
    assert!(ok, "{:?}", rep.violations);
}

#[test]
fn criterion_07_medial_round_trip() {
    let own = [
        quartic_levels(14),
        cubic_levels(14),
        polydeza::generate::quadrangulation_levels(14, true),
    ];
    let codes: BTreeSet<&CanonicalCode> = own
        .iter()
        .chain(std::iter::once(triangulations()))
        .flat_map(|l| l.codes())
        .collect();
    let rep = run_suite_on_codes("thm4r", "polyhedra:14", codes.iter().copied()).unwrap();
    let ok = rep.passes() && rep.checked > 0;
    verdict(
        7,
        "medials of qualifying polyhedra up to 14 have no 4-cycle and invert",
        ok,
        &format!("{} over {} distinct polyhedra", summary(&rep), codes.len()),
    );
    assert!(ok, "{:?}", rep.violations);
}

#[test]
fn criterion_08_gluing_round_trip() {
    let g1 = fixtures::nine_vertex_quartic();
    let g2 = fixtures::antiprism(4);
    let s1 = valid_sites(&g1)[0];
    let s2 = valid_sites(&g2)[0];
    let glue = t_construct(&g1, s1, &g2, s2).unwrap();
    let g = &glue.graph;
    let a = type_profile(&g.to_abstract()).unwrap().as_vec();
    let hosts: BTreeSet<CanonicalCode> =
        [canonical_code(&g1).unwrap(), canonical_code(&g2).unwrap()].into();
    let recovered = match t_decompose(g).unwrap() {
        TDecomposition::Split { g1, g2, .. } => {
            Some([canonical_code(&g1).unwrap(), canonical_code(&g2).unwrap()].into())
        }
        TDecomposition::Pyramid { .. } => None,
    };
    let no_preimage = medial_preimage(g).unwrap().is_none();
    let ok = g.n() == 20
        && g.to_abstract().regularity() == Some(4)
        && polydeza::analysis::is_three_connected(&g.to_abstract())
        && a == vec![0, 1, 2, 3]
        && recovered.as_ref() == Some(&hosts)
        && no_preimage;
    verdict(
        8,
        "gluing the nine-vertex graph and the square antiprism",
        ok,
        &format!(
            "sites {s1:?} {s2:?}, order {}, type {a:?}, hosts recovered {}, no preimage {no_preimage}",
            g.n(),
            recovered.as_ref() == Some(&hosts)
        ),
    );
    assert!(ok);
}

/// `q2 >= 15 + q/2 + q0 >= 30`, doubled to stay in integers.
fn two_sided_bound(g: &polydeza::PlaneGraph) -> (bool, bool, String) {
    let s = face_stats(g);
    let middle = 30 + s.q + 2 * s.q0;
    (
        2 * s.q2 >= middle && middle >= 60,
        2 * s.q2 == middle && middle == 60,
        format!("q={} q0={} q2={} f4={}", s.q, s.q0, s.q2, s.faces_of_len(4)),
    )
}

#[test]
fn criterion_09_five_regular_bounds() {
    let (ico_holds, ico_tight, ico) = two_sided_bound(&fixtures::icosahedron());
    let ico_report = polydeza::analysis::prop30_report(&fixtures::icosahedron()).unwrap();
    let ico_ok = ico_holds
        && ico_tight
        && ico_report.q2 == 30
        && ico_report.q0 == 0
        && ico_report.first_tight
        && ico_report.second_tight;
    let mut detail = vec![format!("icosahedron {ico}")];
    let mut snubs_ok = true;
    for (name, g) in [
        ("snub-cube", fixtures::snub_cube()),
        ("snub-dodecahedron", fixtures::snub_dodecahedron()),
    ] {
        let (holds, _, d) = two_sided_bound(&g);
        let four = has_four_cycle(&g.to_abstract());
        snubs_ok &= holds && four;
        detail.push(format!("{name} {d} bound {holds} 4-cycle {four}"));
    }
    let ok = ico_ok && snubs_ok;
    verdict(
        9,
        "two-sided bound on edges between triangles",
        ok,
        &detail.join("; "),
    );
    assert!(ok, "{}", detail.join("; "));
}

#[test]
fn criterion_10_property_suites() {
    let mut lines = Vec::new();
    let mut ok = true;
    let fixture_members = Population::Fixtures.members();
    let population = Population::Polyhedra(13);
    let streams = population.generated().unwrap();
    let codes: BTreeSet<&CanonicalCode> = streams.iter().flat_map(|l| l.codes()).collect();
    for suite in ["lemma2a", "lemma0a", "lemma0123", "prop1a", "cor1"] {
        let generated =
            run_suite_on_codes(suite, &population.to_string(), codes.iter().copied()).unwrap();
        let fixed = run_suite_on(suite, "fixtures:all", &fixture_members).unwrap();
        ok &= generated.passes() && fixed.passes() && generated.checked > 0 && fixed.checked > 0;
        lines.push(summary(&generated));
        lines.push(summary(&fixed));
    }
    verdict(
        10,
        "property suites on polyhedra up to 13 and fixtures",
        ok,
        &lines.join("; "),
    );
    assert!(ok);
}

#[test]
fn criterion_11_codec_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let manifest: FixtureManifest =
        serde_json::from_slice(&std::fs::read(dir.join("manifest.json")).unwrap()).unwrap();
    let built: Vec<(String, CanonicalCode)> = fixtures::all()
        .into_iter()
        .map(|(n, g)| (n.to_string(), canonical_code(&g).unwrap()))
        .collect();
    let mut bad = Vec::new();
    if manifest.fixtures.len() != built.len() {
        bad.push(format!(
            "{} records for {} fixtures",
            manifest.fixtures.len(),
            built.len()
        ));
    }
    for rec in &manifest.fixtures {
        let bytes = std::fs::read(dir.join(&rec.file)).unwrap();
        let graphs = decode_planar_code(&bytes).unwrap();
        if graphs.len() != 1 || encode_planar_code(&graphs).unwrap() != bytes {
            bad.push(format!("{}: planar_code round trip", rec.name));
            continue;
        }
        let g = &graphs[0];
        let g6_file = std::fs::read_to_string(dir.join(format!("{}.g6", rec.name))).unwrap();
        let g6 = decode_graph6(g6_file.trim_end()).unwrap();
        if encode_graph6(&g6) != rec.graph6 || g6_file != format!("{}\n", rec.graph6) {
            bad.push(format!("{}: graph6 round trip", rec.name));
        }
        if g6 != g.to_abstract() || encode_graph6(&g.to_abstract()) != rec.graph6 {
            bad.push(format!("{}: graph6 disagrees with planar_code", rec.name));
        }
        let code = canonical_code(g).unwrap().to_hex();
        let from_construction = built
            .iter()
            .find(|(n, _)| n == &rec.name)
            .map(|(_, c)| c.to_hex());
        if code != rec.canonical_code
            || from_construction.as_deref() != Some(rec.canonical_code.as_str())
        {
            bad.push(format!("{}: canonical code", rec.name));
        }
        if (g.n(), g.q()) != (rec.order, rec.edges) {
            bad.push(format!("{}: order or size", rec.name));
        }
    }
    let ok = bad.is_empty();
    verdict(
        11,
        "fixture files round-trip and match the manifest",
        ok,
        &format!("{} fixtures, problems {bad:?}", manifest.fixtures.len()),
    );
    assert!(ok);
}
