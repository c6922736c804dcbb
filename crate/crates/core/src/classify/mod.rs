//! Deza classification of regular planar graphs, type prediction for
//! regular polyhedra, and the verification suites.

mod population;
mod suites;

use serde::Serialize;

use crate::analysis::{
    has_four_cycle, is_three_connected, k2r_witness, type_profile, vertex_connectivity,
};
use crate::graph::{embed_with_cap, DEFAULT_EMBED_CAP};
use crate::{canonical_code, AbstractGraph, Error, PlaneGraph, Result};

pub use population::{population, Member, Population};
pub use suites::{
    generator_gate, run_suite, run_suite_on, run_suite_on_codes, table_census, SuiteReport,
    Violation, SCHEMA_VERSION, SUITES,
};

/// Rows for graphs of connectivity at least 3 that are not exceptional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Table1Row {
    Tetrahedron,
    CubicNoQuadrangularFaces,
    QuarticNoFourCycles,
}

/// Rows for graphs of connectivity at most 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Table2Row {
    IsolatedVertices,
    Matching,
    Triangle,
    CyclesWithoutC4,
    UnionOfC4,
    TetrahedraAndCubes,
    Icosahedra,
    CubicNoFourCycles,
    QuarticNoFourCycles,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exceptional {
    Cube,
    Octahedron,
    SquareAntiprism,
    NineVertexQuartic,
    Icosahedron,
}

impl Exceptional {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "cube" => Exceptional::Cube,
            "octahedron" => Exceptional::Octahedron,
            "square-antiprism" => Exceptional::SquareAntiprism,
            "nine-vertex-quartic" => Exceptional::NineVertexQuartic,
            "icosahedron" => Exceptional::Icosahedron,
            _ => return None,
        })
    }

    fn lambda_mu(self) -> (usize, usize) {
        match self {
            Exceptional::Cube | Exceptional::Icosahedron => (0, 2),
            Exceptional::Octahedron => (2, 4),
            Exceptional::SquareAntiprism | Exceptional::NineVertexQuartic => (1, 2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "table", content = "row", rename_all = "kebab-case")]
pub enum DezaKind {
    Table1(Table1Row),
    Table2(Table2Row),
    Exceptional(Exceptional),
    NotDeza,
}

/// Classification outcome; `lambda_mu` is the type the matched row assigns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DezaClass {
    pub kind: DezaKind,
    pub lambda_mu: Option<(usize, usize)>,
}

impl DezaClass {
    fn row(kind: DezaKind, lambda_mu: (usize, usize)) -> Self {
        DezaClass {
            kind,
            lambda_mu: Some(lambda_mu),
        }
    }

    fn not_deza() -> Self {
        DezaClass {
            kind: DezaKind::NotDeza,
            lambda_mu: None,
        }
    }
}

/// `{λ, μ}` when `g` is regular with at most two common-neighbour counts.
/// Graphs with fewer than two vertices have no pairs and count as type `{0}`.
pub fn is_deza(g: &AbstractGraph) -> Option<(usize, usize)> {
    g.regularity()?;
    if g.n() < 2 {
        return Some((0, 0));
    }
    let a = type_profile(g).ok()?.as_vec();
    match a.as_slice() {
        [x] => Some((*x, *x)),
        [x, y] => Some((*x, *y)),
        _ => None,
    }
}

fn is_planar(g: &AbstractGraph) -> Result<bool> {
    Ok(embed_with_cap(g, g.n().max(DEFAULT_EMBED_CAP))?.is_some())
}

fn polyhedron_embedding(g: &AbstractGraph) -> PlaneGraph {
    embed_with_cap(g, g.n().max(DEFAULT_EMBED_CAP))
        .expect("cap covers the graph")
        .expect("caller checked planarity")
}

/// Matches a regular planar graph against the classification tables using
/// structural tests only: connectivity, components, quadrangular faces,
/// 4-cycles and exceptional-graph codes.
pub fn classify_planar_regular(g: &AbstractGraph) -> Result<DezaClass> {
    let r = g.regularity().ok_or(Error::NotRegular)?;
    if !is_planar(g)? {
        return Err(Error::NotPlanar);
    }
    if g.n() >= 4 && vertex_connectivity(g) >= 3 {
        return Ok(classify_polyhedron(&polyhedron_embedding(g), r));
    }
    let comps: Vec<AbstractGraph> = g.components().iter().map(|c| g.induced(c)).collect();
    let all = |pred: &dyn Fn(&AbstractGraph) -> bool| comps.iter().all(pred);
    let code_of = |c: &AbstractGraph| canonical_code(&polyhedron_embedding(c)).ok();
    Ok(match r {
        0 => DezaClass::row(DezaKind::Table2(Table2Row::IsolatedVertices), (0, 0)),
        1 => DezaClass::row(DezaKind::Table2(Table2Row::Matching), (0, 0)),
        2 => {
            if comps.len() == 1 && g.n() == 3 {
                DezaClass::row(DezaKind::Table2(Table2Row::Triangle), (1, 1))
            } else if all(&|c| c.n() == 4) {
                DezaClass::row(DezaKind::Table2(Table2Row::UnionOfC4), (0, 2))
            } else if all(&|c| c.n() != 4) {
                DezaClass::row(DezaKind::Table2(Table2Row::CyclesWithoutC4), (0, 1))
            } else {
                DezaClass::not_deza()
            }
        }
        3 => {
            let tetra = crate::fixtures::tetrahedron_code();
            let cube = canonical_code(&crate::fixtures::cube()).expect("connected");
            if all(&|c| {
                is_three_connected(c) && code_of(c).is_some_and(|k| &k == tetra || k == cube)
            }) {
                DezaClass::row(DezaKind::Table2(Table2Row::TetrahedraAndCubes), (0, 2))
            } else if !has_four_cycle(g) {
                DezaClass::row(DezaKind::Table2(Table2Row::CubicNoFourCycles), (0, 1))
            } else {
                DezaClass::not_deza()
            }
        }
        4 if !has_four_cycle(g) => {
            DezaClass::row(DezaKind::Table2(Table2Row::QuarticNoFourCycles), (0, 1))
        }
        5 => {
            let ico = canonical_code(&crate::fixtures::icosahedron()).expect("connected");
            if all(&|c| is_three_connected(c) && code_of(c).is_some_and(|k| k == ico)) {
                DezaClass::row(DezaKind::Table2(Table2Row::Icosahedra), (0, 2))
            } else {
                DezaClass::not_deza()
            }
        }
        _ => DezaClass::not_deza(),
    })
}

fn classify_polyhedron(g: &PlaneGraph, r: usize) -> DezaClass {
    let code = canonical_code(g).expect("polyhedra are connected");
    if let Some(e) = crate::fixtures::exceptional_name(&code).and_then(Exceptional::from_name) {
        return DezaClass::row(DezaKind::Exceptional(e), e.lambda_mu());
    }
    match r {
        3 if &code == crate::fixtures::tetrahedron_code() => {
            DezaClass::row(DezaKind::Table1(Table1Row::Tetrahedron), (2, 2))
        }
        3 if g.faces().iter().all(|f| f.len() != 4) => DezaClass::row(
            DezaKind::Table1(Table1Row::CubicNoQuadrangularFaces),
            (0, 1),
        ),
        4 if !has_four_cycle(&g.to_abstract()) => {
            DezaClass::row(DezaKind::Table1(Table1Row::QuarticNoFourCycles), (0, 1))
        }
        _ => DezaClass::not_deza(),
    }
}

/// Predicted type of a regular polyhedron: exact for degrees 3 and 4, a
/// list of admissible sets for degree 5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TypePrediction {
    Exact(Vec<usize>),
    OneOf(Vec<Vec<usize>>),
}

impl TypePrediction {
    pub fn admits(&self, a: &[usize]) -> bool {
        match self {
            TypePrediction::Exact(x) => x == a,
            TypePrediction::OneOf(xs) => xs.iter().any(|x| x == a),
        }
    }
}

/// Type predicted from quadrangular faces (`r = 3`), 4-cycles and `K(2,3)`
/// subgraphs (`r = 4`), or the four admissible sets (`r = 5`).
pub fn predict_type_regular(g: &PlaneGraph, r: usize) -> Result<TypePrediction> {
    let ag = g.to_abstract();
    if !(3..=5).contains(&r) || ag.regularity() != Some(r) || !is_three_connected(&ag) {
        return Err(Error::NotRegularPolyhedron(format!(
            "expected a {r}-regular polyhedron with r in 3..=5"
        )));
    }
    let code = canonical_code(g)?;
    if let Some(name) = crate::fixtures::exceptional_name(&code) {
        return Err(Error::ExceptionalInput(name.into()));
    }
    if &code == crate::fixtures::tetrahedron_code() {
        return Err(Error::ExceptionalInput("tetrahedron".into()));
    }
    Ok(match r {
        3 if g.faces().iter().any(|f| f.len() == 4) => TypePrediction::Exact(vec![0, 1, 2]),
        3 => TypePrediction::Exact(vec![0, 1]),
        4 if !has_four_cycle(&ag) => TypePrediction::Exact(vec![0, 1]),
        4 if k2r_witness(&ag, 3).is_none() => TypePrediction::Exact(vec![0, 1, 2]),
        4 => TypePrediction::Exact(vec![0, 1, 2, 3]),
        _ => TypePrediction::OneOf(vec![
            vec![0, 1, 2],
            vec![0, 1, 2, 3],
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3, 4],
        ]),
    })
}
