use super::quad::insert_next_to;
use crate::{build_plane, Error, PlaneGraph, Result};

/// Vertex `v` and rotation positions `i < j` of the two neighbours that end
/// up adjacent to both halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriSite {
    pub v: usize,
    pub i: usize,
    pub j: usize,
}

pub fn split_sites(g: &PlaneGraph) -> Vec<TriSite> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v);
        for i in 0..d {
            for j in i + 1..d {
                out.push(TriSite { v, i, j });
            }
        }
    }
    out
}

/// Splits `v` along the edge to a new vertex `v'`: with `w_0..w_{d-1}` the
/// rotation at `v`, `v'` takes `w_i..w_j`, `v` keeps `w_j..w_i`, and the new
/// edge `v v'` lies on the two new triangles `v w_i v'` and `v v' w_j`.
pub fn split_vertex(g: &PlaneGraph, site: TriSite) -> Result<PlaneGraph> {
    let TriSite { v, i, j } = site;
    let illegal = |m: &str| Error::IllegalSite(format!("split at ({v},{i},{j}): {m}"));
    if v >= g.n() {
        return Err(illegal("no such vertex"));
    }
    let d = g.degree(v);
    if !(i < j && j < d) {
        return Err(illegal("positions out of range"));
    }
    if g.faces().iter().any(|f| f.len() != 3) {
        return Err(illegal("not a triangulation"));
    }
    let w = g.rotation(v).to_vec();
    let vp = g.n();
    let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
    let mut keep: Vec<usize> = (0..=d - (j - i)).map(|k| w[(j + k) % d]).collect();
    keep.push(vp);
    rot[v] = keep;
    let mut moved = w[i..=j].to_vec();
    moved.push(v);
    rot.push(moved);
    for &x in &w[i + 1..j] {
        for y in rot[x].iter_mut() {
            if *y == v {
                *y = vp;
            }
        }
    }
    insert_next_to(&mut rot[w[i]], v, vp, false);
    insert_next_to(&mut rot[w[j]], v, vp, true);
    build_plane(rot).map_err(|e| illegal(&e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical_code;
    use crate::embed;
    use crate::graph::named::complete;

    #[test]
    fn every_split_of_k4_gives_the_same_triangulation() {
        let k4 = embed(&complete(4)).unwrap().unwrap();
        let codes: std::collections::BTreeSet<_> = split_sites(&k4)
            .into_iter()
            .map(|s| {
                let t = split_vertex(&k4, s).unwrap();
                assert_eq!((t.n(), t.q()), (5, 9));
                assert!(t.faces().iter().all(|f| f.len() == 3));
                canonical_code(&t).unwrap()
            })
            .collect();
        assert_eq!(codes.len(), 1);
    }
}
