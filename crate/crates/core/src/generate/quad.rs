use crate::analysis::is_three_connected;
use crate::{build_plane, embed, AbstractGraph, Error, PlaneGraph, Result};

/// `2k`-cycle plus two hubs, one joined to the even cycle positions and one
/// to the odd ones. Cycle vertices are `0..2k`, hubs `2k` and `2k + 1`.
pub fn pseudo_double_wheel(k: usize) -> Result<PlaneGraph> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let m = 2 * k;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((i, m + i % 2));
    }
    let g = AbstractGraph::from_edges(m + 2, &edges)?;
    Ok(embed(&g)?.expect("pseudo-double-wheels are planar"))
}

/// Expansion A site: vertex `v` and rotation positions `i < j` with
/// `2 <= j - i <= deg(v) - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadSiteA {
    pub v: usize,
    pub i: usize,
    pub j: usize,
}

pub fn sites_a(g: &PlaneGraph) -> Vec<QuadSiteA> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v);
        for i in 0..d {
            for j in i + 2..d {
                if j - i <= d - 2 {
                    out.push(QuadSiteA { v, i, j });
                }
            }
        }
    }
    out
}

/// Splits `v` into `v` and a new vertex `v'`: with `w_0..w_{d-1}` the
/// rotation at `v`, `v'` takes `w_i..w_j` and `v` keeps `w_j..w_i`, so both
/// stay adjacent to `w_i` and `w_j` and a new face `v, w_i, v', w_j` appears.
/// The result must be 3-connected.
pub fn expand_a(g: &PlaneGraph, site: QuadSiteA) -> Result<PlaneGraph> {
    let QuadSiteA { v, i, j } = site;
    let illegal = |m: &str| Error::IllegalSite(format!("A at ({v},{i},{j}): {m}"));
    if v >= g.n() {
        return Err(illegal("no such vertex"));
    }
    let d = g.degree(v);
    if !(i < j && j < d && j - i >= 2 && j - i <= d - 2) {
        return Err(illegal("positions out of range"));
    }
    if g.faces().iter().any(|f| f.len() != 4) {
        return Err(illegal("not a quadrangulation"));
    }
    let w = g.rotation(v);
    let vp = g.n();
    let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
    rot[v] = (0..=d - (j - i)).map(|k| w[(j + k) % d]).collect();
    rot.push(w[i..=j].to_vec());
    for &x in &w[i + 1..j] {
        for y in rot[x].iter_mut() {
            if *y == v {
                *y = vp;
            }
        }
    }
    insert_next_to(&mut rot[w[i]], v, vp, false);
    insert_next_to(&mut rot[w[j]], v, vp, true);
    let h = build_plane(rot).map_err(|e| illegal(&e.to_string()))?;
    if !is_three_connected(&h.to_abstract()) {
        return Err(illegal("result is not 3-connected"));
    }
    Ok(h)
}

/// Inserts `new` immediately after (or before) `anchor` in a rotation list.
pub(crate) fn insert_next_to(list: &mut Vec<usize>, anchor: usize, new: usize, after: bool) {
    let p = list
        .iter()
        .position(|&x| x == anchor)
        .expect("anchor present");
    list.insert(if after { p + 1 } else { p }, new);
}

/// Expansion B sites: one dart per face (the face's first dart).
pub fn sites_b(g: &PlaneGraph) -> Vec<usize> {
    g.faces().iter().map(|f| f.darts[0]).collect()
}

/// Places a new 4-cycle `a'b'c'd'` inside the face of dart `face_dart` and
/// joins each face corner `x` to its copy `x'`.
pub fn expand_b(g: &PlaneGraph, face_dart: usize) -> Result<PlaneGraph> {
    let illegal = |m: &str| Error::IllegalSite(format!("B at dart {face_dart}: {m}"));
    if face_dart >= g.num_darts() {
        return Err(illegal("no such dart"));
    }
    let corners = g.face_vertices(g.face_of(face_dart));
    if corners.len() != 4 {
        return Err(illegal("face is not a quadrangle"));
    }
    let n = g.n();
    let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
    for k in 0..4 {
        // the face runs p -> x -> s, so s follows p at x; x' goes between
        let (p, x) = (corners[(k + 3) % 4], corners[k]);
        insert_next_to(&mut rot[x], p, n + k, true);
    }
    for k in 0..4 {
        rot.push(vec![corners[k], n + (k + 3) % 4, n + (k + 1) % 4]);
    }
    let h = build_plane(rot).map_err(|e| illegal(&e.to_string()))?;
    if !is_three_connected(&h.to_abstract()) {
        return Err(illegal("result is not 3-connected"));
    }
    Ok(h)
}
