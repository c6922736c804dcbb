use serde::Serialize;

use crate::analysis::{is_three_connected, square_pyramid_witness, type_profile, SquarePyramid};
use crate::{embed, AbstractGraph, Error, PlaneGraph, Result};

/// Three vertices `v, u, w` met consecutively, in this order, on a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TSite {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl TSite {
    pub fn new(v: usize, u: usize, w: usize) -> Self {
        TSite { u, v, w }
    }

    fn on_face(&self, g: &PlaneGraph) -> bool {
        let walk = |a: usize, b: usize, c: usize| {
            g.dart(a, b)
                .map(|d| g.head(g.face_next(d)) == c)
                .unwrap_or(false)
        };
        self.v != self.w && (walk(self.v, self.u, self.w) || walk(self.w, self.u, self.v))
    }
}

/// Every legal site of `g`, sorted.
pub fn valid_sites(g: &PlaneGraph) -> Vec<TSite> {
    let mut out = Vec::new();
    for d in 0..g.num_darts() {
        let (v, u) = (g.tail(d), g.head(d));
        let w = g.head(g.face_next(d));
        if v != w {
            out.push(TSite::new(v, u, w));
            out.push(TSite::new(w, u, v));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Result of gluing two hosts. Vertices of the first host keep their ids,
/// those of the second are shifted by its order, and the three shared
/// vertices come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGlue {
    pub graph: PlaneGraph,
    /// `x` of the first host, identified with `z` of the second.
    pub x: usize,
    pub y: usize,
    /// `z` of the first host, identified with `x` of the second.
    pub z: usize,
    pub site1: TSite,
    /// Site of the second host in the glued numbering.
    pub site2: TSite,
}

fn check_quartic_polyhedron(g: &PlaneGraph, which: &str) -> Result<()> {
    if (0..g.n()).any(|v| g.degree(v) != 4) {
        return Err(Error::NotQuartic(format!("{which} host is not 4-regular")));
    }
    if !is_three_connected(&g.to_abstract()) {
        return Err(Error::NotPolyhedral(format!(
            "{which} host is not 3-connected"
        )));
    }
    Ok(())
}

/// Adds `x, y, z` to each host with edges `xu, yz, zu, xy, xv, yw`, deletes
/// `uv, uw`, then identifies `x1 = z2`, `y1 = y2`, `z1 = x2`. Edges that
/// arise twice through the identification are kept once.
pub fn t_construct(g1: &PlaneGraph, s1: TSite, g2: &PlaneGraph, s2: TSite) -> Result<TGlue> {
    check_quartic_polyhedron(g1, "first")?;
    check_quartic_polyhedron(g2, "second")?;
    for (g, s) in [(g1, s1), (g2, s2)] {
        if !s.on_face(g) {
            return Err(Error::SiteNotOnFace {
                u: s.u,
                v: s.v,
                w: s.w,
            });
        }
    }
    let (n1, n2) = (g1.n(), g2.n());
    let (x, y, z) = (n1 + n2, n1 + n2 + 1, n1 + n2 + 2);
    let mut h = AbstractGraph::empty(n1 + n2 + 3);
    let removed = |s: TSite, a: usize, b: usize| {
        (a == s.u && (b == s.v || b == s.w)) || (b == s.u && (a == s.v || a == s.w))
    };
    for (a, b) in g1.edges() {
        if !removed(s1, a, b) {
            h.add_edge(a, b);
        }
    }
    for (a, b) in g2.edges() {
        if !removed(s2, a, b) {
            h.add_edge(a + n1, b + n1);
        }
    }
    let t2 = TSite::new(s2.v + n1, s2.u + n1, s2.w + n1);
    // (host site, its x, its y, its z)
    for (s, hx, hy, hz) in [(s1, x, y, z), (t2, z, y, x)] {
        for (a, b) in [
            (hx, s.u),
            (hy, hz),
            (hz, s.u),
            (hx, hy),
            (hx, s.v),
            (hy, s.w),
        ] {
            h.add_edge(a, b);
        }
    }
    if h.regularity() != Some(4) {
        return Err(Error::NotQuartic("glued graph is not 4-regular".into()));
    }
    let graph = embed(&h)?.ok_or(Error::NotPlanar)?;
    if !is_three_connected(&h) {
        return Err(Error::NotPolyhedral(
            "glued graph is not 3-connected".into(),
        ));
    }
    Ok(TGlue {
        graph,
        x,
        y,
        z,
        site1: s1,
        site2: t2,
    })
}

/// Outcome of splitting a quartic polyhedron with a pair having three common
/// neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TDecomposition {
    /// Two of the three common neighbours are adjacent, giving a square pyramid.
    Pyramid {
        pair: (usize, usize),
        pyramid: SquarePyramid,
    },
    /// The graph is the gluing of the two hosts at the given sites.
    Split {
        pair: (usize, usize),
        g1: PlaneGraph,
        site1: TSite,
        g2: PlaneGraph,
        site2: TSite,
        /// A square pyramid elsewhere in the graph, if one exists.
        pyramid: Option<SquarePyramid>,
    },
}

/// Finds the first pair `(a, b)` with `N(a, b) = {c, d, e}` and undoes the
/// gluing around it.
pub fn t_decompose(g: &PlaneGraph) -> Result<TDecomposition> {
    let ag = g.to_abstract();
    let profile = type_profile(&ag)?;
    if !profile.contains(3) {
        return Err(Error::TypeMismatch(format!(
            "3 is not in the type {:?}",
            profile.as_vec()
        )));
    }
    let (a, b) = profile.witnesses[&3];
    let common: Vec<usize> = crate::analysis::common_neighbors(&ag, a, b)?;
    let adjacent = |p: usize, q: usize| ag.has_edge(p, q);

    let any_adjacent = (0..3).any(|i| adjacent(common[i], common[(i + 1) % 3]));
    if any_adjacent {
        for i in 0..3 {
            let (apex, p, q) = (common[i], common[(i + 1) % 3], common[(i + 2) % 3]);
            if adjacent(apex, p) && adjacent(apex, q) {
                return Ok(TDecomposition::Pyramid {
                    pair: (a, b),
                    pyramid: SquarePyramid {
                        apex,
                        cycle: [a, p, b, q],
                    },
                });
            }
        }
        let pyramid = square_pyramid_witness(&ag).ok_or_else(|| {
            Error::PreconditionViolated("adjacent common neighbours but no square pyramid".into())
        })?;
        return Ok(TDecomposition::Pyramid {
            pair: (a, b),
            pyramid,
        });
    }

    let facial = |p: usize, q: usize| {
        [g.dart(a, p), g.dart(a, q)].into_iter().flatten().any(|d| {
            let fv = g.face_vertices(g.face_of(d));
            fv.len() == 4 && [a, p, b, q].iter().all(|x| fv.contains(x))
        })
    };
    let (d, c, e) = (0..3)
        .map(|i| (common[i], common[(i + 1) % 3], common[(i + 2) % 3]))
        .find(|&(_, p, q)| facial(p, q))
        .ok_or_else(|| {
            Error::PreconditionViolated(format!("no facial 4-cycle through {a} and {b}"))
        })?;

    let mut removed = std::collections::BTreeSet::new();
    removed.extend([a, b, d]);
    let rest: Vec<usize> = (0..ag.n()).filter(|v| !removed.contains(v)).collect();
    let comps = ag.without_vertices(&removed).components();
    let comp_of = |x: usize| {
        let local = rest.binary_search(&x).unwrap();
        comps
            .iter()
            .find(|c| c.contains(&local))
            .unwrap()
            .iter()
            .map(|&i| rest[i])
            .collect::<Vec<_>>()
    };
    let v1s = comp_of(c);
    let v2s = comp_of(e);
    if v1s.contains(&e) || v1s.len() + v2s.len() + 3 != ag.n() {
        return Err(Error::PreconditionViolated(
            "the pair does not split the graph into two sides".into(),
        ));
    }
    let inside = |side: &[usize], x: usize| -> Vec<usize> {
        ag.neighbors(x)
            .iter()
            .copied()
            .filter(|w| side.contains(w))
            .collect()
    };
    let (x1, x2) = if inside(&v1s, a).len() == 2 {
        (a, b)
    } else {
        (b, a)
    };

    let host = |side: &[usize], u: usize, x: usize| -> Result<(PlaneGraph, TSite)> {
        let v = *inside(side, x)
            .iter()
            .find(|&&w| w != u)
            .ok_or_else(|| Error::PreconditionViolated("missing v neighbour".into()))?;
        let dn = inside(side, d);
        if dn.len() != 1 {
            return Err(Error::PreconditionViolated(
                "middle vertex must have one neighbour on each side".into(),
            ));
        }
        let w = dn[0];
        let mut sub = ag.induced(side);
        let idx = |t: usize| side.iter().position(|&s| s == t).unwrap();
        sub.add_edge(idx(u), idx(v));
        sub.add_edge(idx(u), idx(w));
        let plane = embed(&sub)?.ok_or(Error::NotPlanar)?;
        check_quartic_polyhedron(&plane, "recovered")?;
        Ok((plane, TSite::new(idx(v), idx(u), idx(w))))
    };
    let (g1, site1) = host(&v1s, c, x1)?;
    let (g2, site2) = host(&v2s, e, x2)?;
    Ok(TDecomposition::Split {
        pair: (a, b),
        g1,
        site1,
        g2,
        site2,
        pyramid: square_pyramid_witness(&ag),
    })
}
