//! Medial, radial and line graphs, recovery of a dual pair from a medial
//! graph, and the three-vertex gluing of two quartic polyhedra.

mod tconstruct;

use crate::analysis::is_three_connected;
use crate::{build_plane, canonical_code, dual, AbstractGraph, Error, PlaneGraph, Result};

pub use tconstruct::{t_construct, t_decompose, valid_sites, TDecomposition, TGlue, TSite};

fn require_polyhedron(g: &PlaneGraph, what: &str) -> Result<()> {
    if g.n() < 4 || !is_three_connected(&g.to_abstract()) {
        return Err(Error::NotPolyhedral(format!("{what} needs a polyhedron")));
    }
    Ok(())
}

/// Builds from a rotation system that may be globally mirrored relative to
/// the convention; whichever orientation is spherical is returned.
fn build_either(rot: Vec<Vec<usize>>, flip: impl Fn(&mut Vec<Vec<usize>>)) -> Result<PlaneGraph> {
    match build_plane(rot.clone()) {
        Err(Error::NonSpherical { .. }) => {
            let mut rot = rot;
            flip(&mut rot);
            build_plane(rot)
        }
        other => other,
    }
}

/// Medial graph: one vertex per edge (numbered as in `g.edges()`), joined
/// when the edges are consecutive on a face.
///
/// Around the edge `u -> v` the four neighbours are, in order: the edge
/// before it at `u` and the edge after it at `v` on the face left of the
/// dart, then the same two on the face of the reverse dart.
pub fn medial(g: &PlaneGraph) -> Result<PlaneGraph> {
    require_polyhedron(g, "medial")?;
    let eidx = g.edge_index();
    let mut rot = vec![Vec::new(); g.q()];
    for d in 0..g.num_darts() {
        if g.tail(d) > g.head(d) {
            continue;
        }
        let r = g.rev(d);
        rot[eidx[d]] = vec![
            eidx[g.pred(d)],
            eidx[g.succ(r)],
            eidx[g.pred(r)],
            eidx[g.succ(d)],
        ];
    }
    build_either(rot, |rot| rot.iter_mut().for_each(|l| l.reverse()))
}

/// Radial (vertex-face) graph: vertices `0..p` of `g`, then one vertex per
/// face at `p + face index`, joined by incidence.
pub fn radial(g: &PlaneGraph) -> Result<PlaneGraph> {
    require_polyhedron(g, "radial")?;
    let p = g.n();
    let mut rot: Vec<Vec<usize>> = (0..p)
        .map(|v| g.darts_of(v).map(|d| p + g.face_of(d)).collect())
        .collect();
    for fi in 0..g.f() {
        rot.push(g.face_vertices(fi));
    }
    build_either(rot, |rot| rot[p..].iter_mut().for_each(|l| l.reverse()))
}

/// Line graph on the edges of `g` (numbered as in `g.edges()`).
pub fn line_graph(g: &AbstractGraph) -> AbstractGraph {
    let edges = g.edges();
    let mut lg = AbstractGraph::empty(edges.len());
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        at[u].push(i);
        at[v].push(i);
    }
    for list in &at {
        for (k, &a) in list.iter().enumerate() {
            for &b in &list[k + 1..] {
                lg.add_edge(a, b);
            }
        }
    }
    lg
}

/// Recovers the pair `(H, H*)` with `medial(H) = g`, if there is one.
///
/// Faces of `g` that share a vertex but no edge are joined; a medial graph of
/// a polyhedron splits this into exactly two components, the dual pair. The
/// pair is returned larger order first.
pub fn medial_preimage(g: &PlaneGraph) -> Result<Option<(PlaneGraph, PlaneGraph)>> {
    if (0..g.n()).any(|v| g.degree(v) != 4) {
        return Err(Error::Not4Regular);
    }
    require_polyhedron(g, "medial_preimage")?;
    let nf = g.f();
    // at a degree-4 vertex the face opposite the one left of dart d is the
    // face left of the dart two steps further round
    let opposite = |d: usize| g.face_of(g.succ(g.succ(d)));
    let mut aux = AbstractGraph::empty(nf);
    for d in 0..g.num_darts() {
        let (a, b) = (g.face_of(d), opposite(d));
        if a != b {
            aux.add_edge(a, b);
        }
    }
    let comps = aux.components();
    if comps.len() != 2 {
        return Ok(None);
    }
    let mut pair = Vec::new();
    for comp in &comps {
        let mut index = vec![usize::MAX; nf];
        for (i, &fi) in comp.iter().enumerate() {
            index[fi] = i;
        }
        let rot: Vec<Vec<usize>> = comp
            .iter()
            .map(|&fi| {
                g.faces()[fi]
                    .darts
                    .iter()
                    .map(|&d| index[opposite(d)])
                    .collect()
            })
            .collect();
        let h = match build_either(rot, |rot| rot.iter_mut().for_each(|l| l.reverse())) {
            Ok(h) => h,
            Err(_) => return Ok(None),
        };
        if h.n() < 4 || !is_three_connected(&h.to_abstract()) {
            return Ok(None);
        }
        pair.push(h);
    }
    let h2 = pair.pop().unwrap();
    let h1 = pair.pop().unwrap();
    if canonical_code(&dual(&h1)?)? != canonical_code(&h2)? {
        return Ok(None);
    }
    if canonical_code(&medial(&h1)?)? != canonical_code(g)? {
        return Ok(None);
    }
    let key = |h: &PlaneGraph| (std::cmp::Reverse(h.n()), canonical_code(h).unwrap());
    if key(&h1) <= key(&h2) {
        Ok(Some((h1, h2)))
    } else {
        Ok(Some((h2, h1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed;
    use crate::graph::named::*;

    fn plane(g: &AbstractGraph) -> PlaneGraph {
        embed(g).unwrap().unwrap()
    }

    fn code(g: &PlaneGraph) -> crate::CanonicalCode {
        canonical_code(g).unwrap()
    }

    #[test]
    fn medial_of_tetrahedron_is_octahedron() {
        let m = medial(&plane(&complete(4))).unwrap();
        assert_eq!(code(&m), code(&plane(&octahedron())));
    }

    #[test]
    fn medial_counts() {
        let d = plane(&dodecahedron());
        let m = medial(&d).unwrap();
        assert_eq!((m.n(), m.q(), m.f()), (30, 60, 32));
        assert_eq!(m.to_abstract().regularity(), Some(4));
        let c = plane(&cube());
        assert_eq!(
            code(&medial(&c).unwrap()),
            code(&medial(&dual(&c).unwrap()).unwrap())
        );
    }

    #[test]
    fn radial_of_tetrahedron_is_cube() {
        let r = radial(&plane(&complete(4))).unwrap();
        assert_eq!(code(&r), code(&plane(&cube())));
        let r = radial(&plane(&octahedron())).unwrap();
        assert!(r.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn radial_is_dual_of_medial() {
        for g in [cube(), prism(5), icosahedron()] {
            let g = plane(&g);
            assert_eq!(
                code(&dual(&radial(&g).unwrap()).unwrap()),
                code(&medial(&g).unwrap())
            );
        }
    }

    #[test]
    fn line_graphs() {
        let lk4 = line_graph(&complete(4));
        assert_eq!(code(&plane(&lk4)), code(&plane(&octahedron())));
        let lc5 = line_graph(&cycle(5));
        assert_eq!(lc5.regularity(), Some(2));
        assert!(lc5.is_connected());
        let d = plane(&dodecahedron());
        assert_eq!(
            line_graph(&d.to_abstract()),
            medial(&d).unwrap().to_abstract()
        );
    }

    #[test]
    fn preimage_of_octahedron() {
        let (a, b) = medial_preimage(&plane(&octahedron())).unwrap().unwrap();
        let t = code(&plane(&complete(4)));
        assert_eq!((code(&a), code(&b)), (t.clone(), t));
    }

    #[test]
    fn preimage_of_icosidodecahedron() {
        let d = plane(&dodecahedron());
        let (a, b) = medial_preimage(&medial(&d).unwrap()).unwrap().unwrap();
        assert_eq!(code(&a), code(&d));
        assert_eq!(code(&b), code(&plane(&icosahedron())));
    }

    #[test]
    fn preimage_rejects_non_quartic() {
        assert_eq!(medial_preimage(&plane(&cube())), Err(Error::Not4Regular));
        // the square antiprism is the medial graph of the (self-dual) square pyramid
        let (a, b) = medial_preimage(&plane(&antiprism(4))).unwrap().unwrap();
        assert_eq!((a.n(), a.q(), b.n()), (5, 8, 5));
    }
}
