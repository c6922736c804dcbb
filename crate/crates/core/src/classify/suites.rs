use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::population::{Member, Population};
use super::{classify_planar_regular, is_deza, predict_type_regular, DezaKind};
use crate::analysis::{
    cycle_attachments, face_stats, four_cycles, girth, has_four_cycle, has_separating_four_cycle,
    is_polyhedron, is_three_connected, k2r_witness, prop1223_report, prop30_report,
    square_pyramid_witness, type_profile,
};
use crate::generate::{
    cubic_levels, oracle_regular_planar, quadrangulation_levels, quartic_levels,
};
use crate::graph::{embed_with_cap, DEFAULT_EMBED_CAP};
use crate::transforms::{
    line_graph, medial, medial_preimage, t_construct, t_decompose, TDecomposition,
};
use crate::{canonical_code, dual, CanonicalCode, Error, PlaneGraph, Result};

pub const SCHEMA_VERSION: u32 = 1;

pub const SUITES: &[&str] = &[
    "thm35r",
    "thm4r",
    "thm4max",
    "prop4min",
    "prop0123",
    "prop1",
    "lemma2a",
    "lemma0a",
    "lemma0123",
    "prop1a",
    "prop30",
    "cor1",
    "lemma_tec",
    "prop1223",
    "lemma_sc",
    "generators",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub population: String,
    /// Members inside the statement's hypotheses.
    pub checked: usize,
    /// Members outside them.
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-member outcome: `None` when the member is outside the hypotheses,
/// otherwise the violations found plus optional notes.
type Check = Option<(Vec<Violation>, Vec<String>)>;

fn violation(m: &Member, expected: impl ToString, observed: impl ToString) -> Violation {
    Violation {
        code: m.id(),
        expected: expected.to_string(),
        observed: observed.to_string(),
    }
}

fn pass() -> Check {
    Some((Vec::new(), Vec::new()))
}

fn fail_if(m: &Member, bad: bool, expected: impl ToString, observed: impl ToString) -> Check {
    if bad {
        Some((vec![violation(m, expected, observed)], Vec::new()))
    } else {
        pass()
    }
}

/// The member's embedding when it is a polyhedron.
fn polyhedron(m: &Member) -> Option<&PlaneGraph> {
    let p = m.plane.as_ref()?;
    (p.n() >= 4 && is_three_connected(&m.graph)).then_some(p)
}

fn regular_polyhedron(m: &Member) -> Option<(&PlaneGraph, usize)> {
    let r = m.graph.regularity()?;
    polyhedron(m).map(|p| (p, r))
}

fn type_of(m: &Member) -> Vec<usize> {
    type_profile(&m.graph)
        .map(|t| t.as_vec())
        .unwrap_or_default()
}

fn is_exceptional(p: &PlaneGraph) -> bool {
    crate::fixtures::exceptional_name(&canonical_code(p).expect("connected")).is_some()
}

fn code_of(p: &PlaneGraph) -> String {
    canonical_code(p).map(|c| c.to_hex()).unwrap_or_default()
}

/// No degree-4 vertices, no quadrangular faces, no degree-3 vertex on a
/// triangular face.
fn medial_deza_conditions(h: &PlaneGraph) -> bool {
    (0..h.n()).all(|v| h.degree(v) != 4)
        && h.faces().iter().all(|f| f.len() != 4)
        && (0..h.num_darts())
            .all(|d| h.degree(h.tail(d)) != 3 || h.faces()[h.face_of(d)].len() != 3)
}

/// Degrees and face lengths in `{3, 5}`, `p3 + f3 = q/2 + 5`, and every
/// degree-3 vertex on three pentagons.
fn min_triangle_conditions(h: &PlaneGraph) -> bool {
    let s = face_stats(h);
    let p3 = s.vertices_of_degree(3);
    let f3 = s.faces_of_len(3);
    p3 + s.vertices_of_degree(5) == s.p
        && f3 + s.faces_of_len(5) == s.f
        && 2 * (p3 + f3) == s.q + 10
        && (0..h.num_darts())
            .all(|d| h.degree(h.tail(d)) != 3 || h.faces()[h.face_of(d)].len() == 5)
}

fn quartic_deza_nonexceptional(m: &Member) -> Option<&PlaneGraph> {
    let (p, r) = regular_polyhedron(m)?;
    (r == 4 && is_deza(&m.graph).is_some() && !is_exceptional(p)).then_some(p)
}

fn preimage_codes(g: &PlaneGraph) -> Option<BTreeSet<String>> {
    medial_preimage(g)
        .ok()
        .flatten()
        .map(|(a, b)| [code_of(&a), code_of(&b)].into_iter().collect())
}

fn check_thm35r(m: &Member) -> Check {
    let (p, r) = regular_polyhedron(m)?;
    let predicted = match predict_type_regular(p, r) {
        Ok(x) => x,
        Err(Error::ExceptionalInput(_)) => return None,
        Err(e) => return Some((vec![violation(m, "a prediction", e)], Vec::new())),
    };
    let a = type_of(m);
    fail_if(
        m,
        !predicted.admits(&a),
        format!("{predicted:?}"),
        format!("{a:?}"),
    )
}

fn check_thm4r(m: &Member) -> Check {
    let mut out = Vec::new();
    let mut applied = false;
    if let Some(h) = polyhedron(m) {
        if medial_deza_conditions(h) {
            applied = true;
            let g = medial(h).expect("polyhedron");
            let ga = g.to_abstract();
            if has_four_cycle(&ga) {
                out.push(violation(m, "medial without 4-cycles", "4-cycle"));
            }
            if is_deza(&ga).is_none() {
                out.push(violation(
                    m,
                    "medial is Deza",
                    format!("{:?}", type_of(&Member::plane("", g.clone()))),
                ));
            }
            let want: BTreeSet<String> = [code_of(h), code_of(&dual(h).expect("polyhedron"))]
                .into_iter()
                .collect();
            let got = preimage_codes(&g);
            if got.as_ref() != Some(&want) {
                out.push(violation(
                    m,
                    format!("preimage {want:?}"),
                    format!("{got:?}"),
                ));
            }
        }
    }
    if let Some(g) = quartic_deza_nonexceptional(m) {
        applied = true;
        match medial_preimage(g).ok().flatten() {
            Some((h1, _)) if medial_deza_conditions(&h1) => {}
            Some(_) => out.push(violation(m, "preimage meets the conditions", "it does not")),
            None => out.push(violation(m, "a medial graph", "no preimage")),
        }
    }
    applied.then_some((out, Vec::new()))
}

fn check_thm4max(m: &Member) -> Check {
    let mut out = Vec::new();
    let mut applied = false;
    if let Some((_, 3)) = regular_polyhedron(m) {
        if girth(&m.graph) == Some(5) {
            applied = true;
            let l = line_graph(&m.graph);
            match is_polyhedron(&l) {
                Ok(Some(lp)) => {
                    let s = face_stats(&lp);
                    let f3 = s.faces_of_len(3);
                    if l.regularity() != Some(4) || is_deza(&l).is_none() {
                        out.push(violation(
                            m,
                            "quartic Deza line graph",
                            format!("{:?}", l.degree_counts()),
                        ));
                    }
                    if 3 * f3 + 4 != 2 * s.f {
                        out.push(violation(m, "3 f3 = 2 f - 4", format!("f3={f3} f={}", s.f)));
                    }
                }
                other => out.push(violation(m, "polyhedral line graph", format!("{other:?}"))),
            }
        }
    }
    if let Some(g) = quartic_deza_nonexceptional(m) {
        let s = face_stats(g);
        if 3 * s.faces_of_len(3) + 4 == 2 * s.f {
            applied = true;
            let ok = medial_preimage(g).ok().flatten().is_some_and(|(a, b)| {
                [a, b].iter().any(|h| {
                    let ha = h.to_abstract();
                    ha.regularity() == Some(3) && girth(&ha) == Some(5)
                })
            });
            if !ok {
                out.push(violation(
                    m,
                    "line graph of a cubic girth-5 polyhedron",
                    "not one",
                ));
            }
        }
    }
    applied.then_some((out, Vec::new()))
}

fn check_prop4min(m: &Member) -> Check {
    let mut out = Vec::new();
    let mut notes = Vec::new();
    let h = polyhedron(m)?;
    let g = medial(h).expect("polyhedron");
    let s = face_stats(&g);
    let minimal = is_deza(&g.to_abstract()).is_some()
        && !is_exceptional(&g)
        && 2 * s.faces_of_len(3) == s.f + 8;
    let cond = min_triangle_conditions(h);
    if cond {
        notes.push(format!(
            "{} (order {}) meets the conditions",
            m.label,
            h.n()
        ));
    }
    if minimal != cond {
        out.push(violation(
            m,
            format!("medial minimal = {cond}"),
            format!("{minimal}"),
        ));
    }
    if let Some(g) = quartic_deza_nonexceptional(m) {
        let s = face_stats(g);
        if 2 * s.faces_of_len(3) == s.f + 8 {
            let ok = medial_preimage(g)
                .ok()
                .flatten()
                .is_some_and(|(a, _)| min_triangle_conditions(&a));
            if !ok {
                out.push(violation(m, "preimage meets the conditions", "it does not"));
            }
        }
    }
    Some((out, notes))
}

fn check_prop0123(m: &Member) -> Check {
    let (g, r) = regular_polyhedron(m)?;
    if r != 4 || type_of(m) != vec![0, 1, 2, 3] {
        return None;
    }
    let mut out = Vec::new();
    let pyramid = square_pyramid_witness(&m.graph);
    match t_decompose(g) {
        Ok(TDecomposition::Split {
            g1,
            site1,
            g2,
            site2,
            ..
        }) => match t_construct(&g1, site1, &g2, site2) {
            Ok(glue) if code_of(&glue.graph) == code_of(g) => {}
            other => out.push(violation(
                m,
                "gluing the hosts reproduces the graph",
                format!("{:?}", other.map(|x| code_of(&x.graph))),
            )),
        },
        Ok(TDecomposition::Pyramid { .. }) if pyramid.is_some() => {}
        other => out.push(violation(m, "a decomposition", format!("{other:?}"))),
    }
    if medial_preimage(g).ok().flatten().is_some() {
        out.push(violation(m, "not a medial graph", "has a medial preimage"));
    }
    Some((out, Vec::new()))
}

fn check_prop1(m: &Member) -> Check {
    m.graph.regularity()?;
    let class = match classify_planar_regular(&m.graph) {
        Ok(c) => c,
        Err(e) => return Some((vec![violation(m, "a classification", e)], Vec::new())),
    };
    let observed = is_deza(&m.graph);
    let bad =
        (class.kind != DezaKind::NotDeza) != observed.is_some() || class.lambda_mu != observed;
    let mut out = fail_if(
        m,
        bad,
        format!("{:?} {:?}", class.kind, class.lambda_mu),
        format!("{observed:?}"),
    );
    // small quartic census, for comparison with the drawn exceptional graphs
    if let (Some((_, 4)), Some(out)) = (regular_polyhedron(m), out.as_mut()) {
        if m.graph.n() <= 9 {
            out.1.push(format!(
                "quartic polyhedron of order {}: type {:?}, {:?}",
                m.graph.n(),
                type_of(m),
                class.kind
            ));
        }
    }
    out
}

fn check_lemma2a(m: &Member) -> Check {
    if m.graph.n() < 2 {
        return None;
    }
    if m.plane.is_none() {
        // planar graphs only
        embed_with_cap(&m.graph, m.graph.n().max(DEFAULT_EMBED_CAP)).ok()??;
    }
    let two = type_of(m).contains(&2);
    let four = !four_cycles(&m.graph).is_empty();
    fail_if(m, two != four, format!("2 in A = {four}"), format!("{two}"))
}

fn check_lemma0a(m: &Member) -> Check {
    let r = m.graph.regularity()?;
    if m.graph.n() <= r * r + 1 {
        return None;
    }
    fail_if(
        m,
        !type_of(m).contains(&0),
        "0 in A",
        format!("{:?}", type_of(m)),
    )
}

fn check_lemma0123(m: &Member) -> Check {
    let (p, r) = regular_polyhedron(m)?;
    if crate::fixtures::exceptional_name(&canonical_code(p).ok()?) == Some("octahedron") {
        return None;
    }
    let a = type_of(m);
    fail_if(
        m,
        a.iter().any(|&i| i >= r),
        format!("max A <= {}", r - 1),
        format!("{a:?}"),
    )
}

fn check_prop1a(m: &Member) -> Check {
    let (p, _) = regular_polyhedron(m)?;
    let code = canonical_code(p).ok()?;
    if &code == crate::fixtures::tetrahedron_code()
        || matches!(
            crate::fixtures::exceptional_name(&code),
            Some("cube" | "octahedron" | "icosahedron")
        )
    {
        return None;
    }
    fail_if(
        m,
        !type_of(m).contains(&1),
        "1 in A",
        format!("{:?}", type_of(m)),
    )
}

fn check_prop30(m: &Member) -> Check {
    if m.graph.regularity() != Some(5) {
        return None;
    }
    let mut out = Vec::new();
    let mut notes = Vec::new();
    if !has_four_cycle(&m.graph) {
        out.push(violation(m, "a 4-cycle", "none"));
    }
    if let Some(p) = &m.plane {
        match prop30_report(p) {
            Ok(rep) => {
                if !rep.holds() {
                    out.push(violation(
                        m,
                        "2 q2 >= 30 + q + 2 q0 >= 60",
                        format!("q2={} q={} q0={}", rep.q2, rep.q, rep.q0),
                    ));
                }
                if rep.first_tight && rep.second_tight {
                    notes.push(format!("{}: both bounds attained", m.label));
                }
            }
            Err(e) => notes.push(format!("{}: bounds not applicable ({e})", m.label)),
        }
    }
    Some((out, notes))
}

fn check_cor1(m: &Member) -> Check {
    let mut out = Vec::new();
    let mut applied = false;
    if let Some((p, r)) = regular_polyhedron(m) {
        let octa =
            crate::fixtures::exceptional_name(&canonical_code(p).ok()?) == Some("octahedron");
        if (3..=5).contains(&r) && !octa {
            applied = true;
            if let Some(w) = k2r_witness(&m.graph, r) {
                out.push(violation(m, format!("no K(2,{r})"), format!("{w:?}")));
            }
        }
        if r == 4 && !octa && medial_preimage(p).ok().flatten().is_some() {
            applied = true;
            if let Some(w) = k2r_witness(&m.graph, 3) {
                out.push(violation(
                    m,
                    "medial graph without K(2,3)",
                    format!("{w:?}"),
                ));
            }
        }
    }
    if m.graph.regularity() == Some(5) {
        applied = true;
        if !has_four_cycle(&m.graph) {
            out.push(violation(m, "a 4-cycle", "none"));
        }
    }
    applied.then_some((out, Vec::new()))
}

fn check_lemma_tec(m: &Member) -> Check {
    let (_, r) = regular_polyhedron(m)?;
    if r != 5 {
        return None;
    }
    fail_if(
        m,
        !type_of(m).contains(&0),
        "0 in A",
        format!("{:?}", type_of(m)),
    )
}

fn check_prop1223(m: &Member) -> Check {
    let (p, r) = regular_polyhedron(m)?;
    if r != 4 {
        return None;
    }
    let mut out = Vec::new();
    let s = face_stats(p);
    if 2 * s.faces_of_len(3) < s.f + 8 {
        out.push(violation(
            m,
            "f3 >= f/2 + 4",
            format!("f3={} f={}", s.faces_of_len(3), s.f),
        ));
    }
    if quartic_deza_nonexceptional(m).is_some() {
        match prop1223_report(p) {
            Ok(rep) if rep.holds() => {}
            other => out.push(violation(m, "both bounds", format!("{other:?}"))),
        }
    }
    Some((out, Vec::new()))
}

fn check_lemma_sc(m: &Member) -> Check {
    let p = polyhedron(m)?;
    let mut out = Vec::new();
    for c in four_cycles(&m.graph) {
        for side in cycle_attachments(p, &c) {
            if (1..=2).contains(&side.len()) {
                out.push(violation(
                    m,
                    "|S| = 0 or |S| >= 3",
                    format!("cycle {c:?} S {side:?}"),
                ));
            }
        }
    }
    Some((out, Vec::new()))
}

fn per_member(name: &str) -> Option<fn(&Member) -> Check> {
    Some(match name {
        "thm35r" => check_thm35r,
        "thm4r" => check_thm4r,
        "thm4max" => check_thm4max,
        "prop4min" => check_prop4min,
        "prop0123" => check_prop0123,
        "prop1" => check_prop1,
        "lemma2a" => check_lemma2a,
        "lemma0a" => check_lemma0a,
        "lemma0123" => check_lemma0123,
        "prop1a" => check_prop1a,
        "prop30" => check_prop30,
        "cor1" => check_cor1,
        "lemma_tec" => check_lemma_tec,
        "prop1223" => check_prop1223,
        "lemma_sc" => check_lemma_sc,
        _ => return None,
    })
}

fn empty_report(name: &str, population: &str) -> SuiteReport {
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: name.to_string(),
        population: population.to_string(),
        checked: 0,
        skipped: 0,
        violations: Vec::new(),
        notes: Vec::new(),
    }
}

fn tally(report: &mut SuiteReport, check: fn(&Member) -> Check, members: &[Member]) {
    let results: Vec<Check> = members.par_iter().map(check).collect();
    for r in results {
        match r {
            None => report.skipped += 1,
            Some((v, n)) => {
                report.checked += 1;
                report.violations.extend(v);
                report.notes.extend(n);
            }
        }
    }
}

/// Runs a suite over members already materialised.
pub fn run_suite_on(name: &str, population: &str, members: &[Member]) -> Result<SuiteReport> {
    let check = per_member(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let mut report = empty_report(name, population);
    tally(&mut report, check, members);
    report.violations.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(report)
}

/// Runs a suite over stored plane graphs, decoding them a chunk at a time
/// so large populations never sit in memory as graphs.
pub fn run_suite_on_codes<'a>(
    name: &str,
    population: &str,
    codes: impl IntoIterator<Item = &'a CanonicalCode>,
) -> Result<SuiteReport> {
    const CHUNK: usize = 4096;
    let check = per_member(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let mut report = empty_report(name, population);
    let mut chunk: Vec<&CanonicalCode> = Vec::with_capacity(CHUNK);
    let flush = |chunk: &mut Vec<&CanonicalCode>, report: &mut SuiteReport| {
        let members: Vec<Member> = chunk
            .par_iter()
            .map(|c| Member::plane(c.to_hex(), c.decode().expect("stored codes decode")))
            .collect();
        tally(report, check, &members);
        chunk.clear();
    };
    for c in codes {
        chunk.push(c);
        if chunk.len() == CHUNK {
            flush(&mut chunk, &mut report);
        }
    }
    flush(&mut chunk, &mut report);
    report.violations.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(report)
}

/// Runs the named suite over a population descriptor.
pub fn run_suite(name: &str, population: &str) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    let pop: Population = population.parse()?;
    if name == "generators" {
        let Population::Order(n) = pop else {
            return Err(Error::UnknownPopulation(format!(
                "{population} (generators needs n:N)"
            )));
        };
        return generator_gate(n);
    }
    match pop.generated() {
        Some(streams) => {
            let codes: BTreeSet<&CanonicalCode> = streams.iter().flat_map(|l| l.codes()).collect();
            run_suite_on_codes(name, &pop.to_string(), codes)
        }
        None => run_suite_on(name, &pop.to_string(), &pop.members()),
    }
}

/// Compares generated counts with the brute-force oracle: quartic
/// polyhedra at orders `6..=min(n, 13)`, cubic polyhedra at even orders
/// `4..=min(n, 14)`, and the A-only quadrangulation closure against the
/// full class filtered for separating 4-cycles up to order `n + 2`.
pub fn generator_gate(n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: "generators".into(),
        population: format!("n:{n}"),
        checked: 0,
        skipped: 0,
        violations: Vec::new(),
        notes: Vec::new(),
    };
    let mut compare = |what: String, generated: usize, expected: usize| {
        report.checked += 1;
        report.notes.push(format!("{what}: {generated}"));
        if generated != expected {
            report.violations.push(Violation {
                code: what,
                expected: expected.to_string(),
                observed: generated.to_string(),
            });
        }
    };
    let qmax = n.min(13);
    let quartic = quartic_levels(qmax);
    for k in 6..=qmax {
        compare(
            format!("quartic:{k}"),
            quartic.count(k),
            oracle_regular_planar(4, k)?.len(),
        );
    }
    let cmax = n.min(14);
    let cubic = cubic_levels(cmax);
    for k in (4..=cmax).step_by(2) {
        compare(
            format!("cubic:{k}"),
            cubic.count(k),
            oracle_regular_planar(3, k)?.len(),
        );
    }
    let full = quadrangulation_levels(n + 2, true);
    let only_a = quadrangulation_levels(n + 2, false);
    for k in 8..=n + 2 {
        let filtered = full
            .levels
            .get(&k)
            .into_iter()
            .flatten()
            .filter(|c| !has_separating_four_cycle(&c.decode().expect("stored codes decode")))
            .count();
        compare(format!("quad-no-separating:{k}"), only_a.count(k), filtered);
    }
    Ok(report)
}

/// Members per (order, classification row), for regular members only.
pub fn table_census(members: &[Member]) -> BTreeMap<(usize, String), usize> {
    let rows: Vec<Option<(usize, String)>> = members
        .par_iter()
        .map(|m| {
            m.graph.regularity()?;
            let c = classify_planar_regular(&m.graph).ok()?;
            let row = serde_json::to_value(c.kind).ok()?;
            let label = match (row.get("table"), row.get("row")) {
                (Some(t), Some(r)) => format!("{}:{}", t.as_str()?, r.as_str()?),
                (Some(t), None) => t.as_str()?.to_string(),
                _ => return None,
            };
            Some((m.graph.n(), label))
        })
        .collect();
    let mut out = BTreeMap::new();
    for key in rows.into_iter().flatten() {
        *out.entry(key).or_insert(0) += 1;
    }
    out
}
