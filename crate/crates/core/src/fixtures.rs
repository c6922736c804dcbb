//! Named test graphs: Platonic solids, prisms, antiprisms, snub polyhedra,
//! the small exceptional Deza graphs, and low-connectivity families.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::analysis::type_profile;
use crate::graph::codec::{encode_graph6, encode_planar_code};
use crate::graph::named;
use crate::{canonical_code, AbstractGraph, CanonicalCode, PlaneGraph};

/// The embedding of a graph known to be a polyhedron.
fn poly(g: &AbstractGraph) -> PlaneGraph {
    crate::graph::embed_with_cap(g, g.n().max(crate::graph::DEFAULT_EMBED_CAP))
        .expect("within cap")
        .expect("fixture is planar")
}

pub fn tetrahedron() -> PlaneGraph {
    poly(&named::complete(4))
}

pub fn cube() -> PlaneGraph {
    poly(&named::cube())
}

pub fn octahedron() -> PlaneGraph {
    poly(&named::octahedron())
}

pub fn icosahedron() -> PlaneGraph {
    poly(&named::icosahedron())
}

pub fn dodecahedron() -> PlaneGraph {
    poly(&named::dodecahedron())
}

pub fn prism(k: usize) -> PlaneGraph {
    poly(&named::prism(k))
}

pub fn antiprism(k: usize) -> PlaneGraph {
    poly(&named::antiprism(k))
}

/// Snub of a polyhedron: one vertex per dart, joined to the next dart on
/// its face, to the next dart around its tail, and to its reverse.
pub fn snub(g: &PlaneGraph) -> PlaneGraph {
    let mut edges = Vec::new();
    for d in 0..g.num_darts() {
        edges.push((d, g.face_next(d)));
        edges.push((d, g.succ(d)));
        if d < g.rev(d) {
            edges.push((d, g.rev(d)));
        }
    }
    poly(&AbstractGraph::from_edges(g.num_darts(), &edges).expect("snub is simple"))
}

pub fn snub_cube() -> PlaneGraph {
    snub(&cube())
}

pub fn snub_dodecahedron() -> PlaneGraph {
    snub(&dodecahedron())
}

pub fn icosidodecahedron() -> PlaneGraph {
    crate::transforms::medial(&dodecahedron()).expect("dodecahedron is a polyhedron")
}

/// The quartic polyhedron on nine vertices of type `{1,2}`, found by
/// searching the generated quartic polyhedra of that order.
pub fn nine_vertex_quartic() -> PlaneGraph {
    static CELL: OnceLock<PlaneGraph> = OnceLock::new();
    CELL.get_or_init(|| {
        let levels = crate::generate::quartic_levels(9);
        let found: Vec<PlaneGraph> = levels
            .levels
            .get(&9)
            .into_iter()
            .flatten()
            .map(|c| c.decode().expect("stored codes decode"))
            .filter(|g| type_profile(&g.to_abstract()).map(|t| t.as_vec()) == Ok(vec![1, 2]))
            .collect();
        assert_eq!(
            found.len(),
            1,
            "expected one nine-vertex quartic Deza graph"
        );
        found.into_iter().next().unwrap()
    })
    .clone()
}

/// Every named fixture, in a fixed order.
pub fn all() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        ("tetrahedron", tetrahedron()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("dodecahedron", dodecahedron()),
        ("icosahedron", icosahedron()),
        ("triangular-prism", prism(3)),
        ("pentagonal-prism", prism(5)),
        ("hexagonal-prism", prism(6)),
        ("square-antiprism", antiprism(4)),
        ("pentagonal-antiprism", antiprism(5)),
        ("hexagonal-antiprism", antiprism(6)),
        ("nine-vertex-quartic", nine_vertex_quartic()),
        ("icosidodecahedron", icosidodecahedron()),
        ("snub-cube", snub_cube()),
        ("snub-dodecahedron", snub_dodecahedron()),
    ]
}

pub fn five_regular() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        ("icosahedron", icosahedron()),
        ("snub-cube", snub_cube()),
        ("snub-dodecahedron", snub_dodecahedron()),
    ]
}

pub fn by_name(name: &str) -> Option<PlaneGraph> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

fn exceptional_codes() -> &'static [(&'static str, CanonicalCode)] {
    static CELL: OnceLock<Vec<(&'static str, CanonicalCode)>> = OnceLock::new();
    CELL.get_or_init(|| {
        [
            ("cube", cube()),
            ("octahedron", octahedron()),
            ("square-antiprism", antiprism(4)),
            ("nine-vertex-quartic", nine_vertex_quartic()),
            ("icosahedron", icosahedron()),
        ]
        .into_iter()
        .map(|(n, g)| (n, canonical_code(&g).expect("fixtures are connected")))
        .collect()
    })
}

/// Name of the exceptional polyhedral Deza graph with this code, if any.
pub fn exceptional_name(code: &CanonicalCode) -> Option<&'static str> {
    exceptional_codes()
        .iter()
        .find(|(_, c)| c == code)
        .map(|(n, _)| *n)
}

/// Code of the tetrahedron.
pub fn tetrahedron_code() -> &'static CanonicalCode {
    static CELL: OnceLock<CanonicalCode> = OnceLock::new();
    CELL.get_or_init(|| canonical_code(&tetrahedron()).expect("connected"))
}

/// One entry of the fixture manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub name: String,
    pub order: usize,
    pub edges: usize,
    pub canonical_code: String,
    pub graph6: String,
    /// planar_code file, relative to the manifest.
    pub file: String,
}

/// Contents of `manifest.json` in a fixture directory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureManifest {
    pub schema_version: u32,
    pub fixtures: Vec<FixtureRecord>,
}

/// A fixture in its canonical numbering, so the files do not depend on
/// how the fixture was built.
pub fn canonical_form(g: &PlaneGraph) -> PlaneGraph {
    canonical_code(g)
        .and_then(|c| c.decode())
        .expect("fixtures are connected")
}

/// Manifest records and planar_code bytes for every named fixture.
pub fn manifest() -> Vec<(FixtureRecord, Vec<u8>)> {
    all()
        .into_iter()
        .map(|(name, g)| {
            let g = canonical_form(&g);
            let record = FixtureRecord {
                name: name.to_string(),
                order: g.n(),
                edges: g.q(),
                canonical_code: canonical_code(&g).expect("connected").to_hex(),
                graph6: encode_graph6(&g.to_abstract()),
                file: format!("{name}.pc"),
            };
            let bytes = encode_planar_code(&[g]).expect("fixtures have fewer than 256 vertices");
            (record, bytes)
        })
        .collect()
}

/// Joins two copies of `g` by deleting edge `a b` in each and adding
/// `a a'` and `b b'`; `{a, b}` separates the result.
pub fn two_copies_crossed(g: &AbstractGraph, a: usize, b: usize) -> AbstractGraph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (u, v) in g.edges() {
        if (u, v) != (a.min(b), a.max(b)) {
            edges.push((u, v));
            edges.push((u + n, v + n));
        }
    }
    edges.push((a, a + n));
    edges.push((b, b + n));
    AbstractGraph::from_edges(2 * n, &edges).expect("simple")
}

/// Subdivides edge `a b` in two copies of a cubic graph and joins the two
/// subdivision vertices by a bridge.
pub fn two_copies_bridged(g: &AbstractGraph, a: usize, b: usize) -> AbstractGraph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let (s1, s2) = (2 * n, 2 * n + 1);
    for (u, v) in g.edges() {
        if (u, v) != (a.min(b), a.max(b)) {
            edges.push((u, v));
            edges.push((u + n, v + n));
        }
    }
    edges.extend([(a, s1), (b, s1), (a + n, s2), (b + n, s2), (s1, s2)]);
    AbstractGraph::from_edges(2 * n + 2, &edges).expect("simple")
}

fn union(parts: &[AbstractGraph]) -> AbstractGraph {
    parts
        .iter()
        .fold(AbstractGraph::empty(0), |acc, g| acc.disjoint_union(g))
}

/// Regular planar graphs of connectivity at most 2, one or more per row
/// of the low-connectivity table, plus a few that are not Deza graphs.
pub fn table2_families() -> Vec<(String, AbstractGraph)> {
    let k2 = named::complete(2);
    let dodeca = named::dodecahedron();
    let icosidodeca = icosidodecahedron().to_abstract();
    let (a, b) = dodeca.edges()[0];
    let (c, d) = icosidodeca.edges()[0];
    vec![
        ("K1".into(), AbstractGraph::empty(1)),
        ("3K1".into(), AbstractGraph::empty(3)),
        ("K2".into(), k2.clone()),
        ("3K2".into(), union(&[k2.clone(), k2.clone(), k2])),
        ("K3".into(), named::complete(3)),
        ("C5".into(), named::cycle(5)),
        ("C3+C6".into(), union(&[named::cycle(3), named::cycle(6)])),
        ("C4".into(), named::cycle(4)),
        ("C4+C4".into(), union(&[named::cycle(4), named::cycle(4)])),
        ("C4+C5".into(), union(&[named::cycle(4), named::cycle(5)])),
        (
            "K4+cube".into(),
            union(&[named::complete(4), named::cube()]),
        ),
        ("cube+cube".into(), union(&[named::cube(), named::cube()])),
        (
            "K4+prism3".into(),
            union(&[named::complete(4), named::prism(3)]),
        ),
        (
            "icosa+icosa".into(),
            union(&[named::icosahedron(), named::icosahedron()]),
        ),
        (
            "dodeca+dodeca".into(),
            union(&[dodeca.clone(), dodeca.clone()]),
        ),
        ("dodeca-bridged".into(), two_copies_bridged(&dodeca, a, b)),
        ("dodeca-crossed".into(), two_copies_crossed(&dodeca, a, b)),
        (
            "cube-crossed".into(),
            two_copies_crossed(&named::cube(), 0, 1),
        ),
        (
            "icosidodeca+icosidodeca".into(),
            union(&[icosidodeca.clone(), icosidodeca.clone()]),
        ),
        (
            "icosidodeca-crossed".into(),
            two_copies_crossed(&icosidodeca, c, d),
        ),
        (
            "octa+octa".into(),
            union(&[named::octahedron(), named::octahedron()]),
        ),
    ]
}
