//! Isomorph-free generation of 3-connected quadrangulations and sphere
//! triangulations, their duals, and a brute-force oracle for small regular
//! planar graphs.
//!
//! Generation runs level by level: every graph of order `n` is known before
//! any graph of order `n` is expanded. Each level is a set of canonical codes,
//! filled concurrently and sorted once complete, so output order does not
//! depend on thread scheduling.

mod oracle;
mod quad;
mod tri;

use std::collections::BTreeMap;

use dashmap::DashSet;
use rayon::prelude::*;

use crate::{canonical_code, dual, CanonicalCode, PlaneGraph};

pub use oracle::{oracle_regular_planar, OracleGraph};
pub use quad::{expand_a, expand_b, pseudo_double_wheel, sites_a, sites_b, QuadSiteA};
pub use tri::{split_sites, split_vertex, TriSite};

/// Canonical codes per order, each level sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Levels {
    pub levels: BTreeMap<usize, Vec<CanonicalCode>>,
}

impl Levels {
    pub fn count(&self, n: usize) -> usize {
        self.levels.get(&n).map(Vec::len).unwrap_or(0)
    }

    pub fn counts(&self) -> BTreeMap<usize, usize> {
        self.levels.iter().map(|(&n, v)| (n, v.len())).collect()
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.levels.values().flatten()
    }

    /// Decodes every stored graph, by order then code.
    pub fn graphs(&self) -> impl Iterator<Item = PlaneGraph> + '_ {
        self.codes()
            .map(|c| c.decode().expect("stored codes decode"))
    }

    pub fn len(&self) -> usize {
        self.levels.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Runs the level-by-level closure. `expand` maps a parent to its children,
/// each of which must be larger; children above `max_n` are dropped.
fn closure<F>(seeds: Vec<PlaneGraph>, max_n: usize, expand: F) -> Levels
where
    F: Fn(&PlaneGraph, &mut dyn FnMut(PlaneGraph)) + Sync,
{
    let mut pending: BTreeMap<usize, DashSet<CanonicalCode>> = BTreeMap::new();
    for s in seeds {
        if s.n() <= max_n {
            pending
                .entry(s.n())
                .or_default()
                .insert(canonical_code(&s).expect("seeds are connected"));
        }
    }
    for n in 0..=max_n {
        pending.entry(n).or_default();
    }
    let mut out = Levels::default();
    for n in 0..=max_n {
        let set = pending.remove(&n).unwrap_or_default();
        let mut level: Vec<CanonicalCode> = set.into_iter().collect();
        level.sort_unstable();
        if level.is_empty() {
            continue;
        }
        if n == max_n {
            out.levels.insert(n, level);
            break;
        }
        let targets = &pending;
        level.par_iter().for_each(|code| {
            let g = code.decode().expect("stored codes decode");
            expand(&g, &mut |child: PlaneGraph| {
                if let Some(slot) = targets.get(&child.n()) {
                    slot.insert(canonical_code(&child).expect("children are connected"));
                }
            });
        });
        out.levels.insert(n, level);
    }
    out
}

/// 3-connected quadrangulations with at most `max_n` vertices.
///
/// With `use_b` the closure uses both expansions and yields the whole class;
/// without it only expansion A is used and children with a separating
/// 4-cycle are discarded, yielding those without separating 4-cycles.
pub fn quadrangulation_levels(max_n: usize, use_b: bool) -> Levels {
    let seeds = (3..)
        .map(|k| 2 * k + 2)
        .take_while(|&n| n <= max_n)
        .map(|n| pseudo_double_wheel((n - 2) / 2).expect("k >= 3"))
        .collect();
    closure(seeds, max_n, |g, emit| {
        for site in sites_a(g) {
            if let Ok(h) = expand_a(g, site) {
                if use_b || !crate::analysis::has_separating_four_cycle(&h) {
                    emit(h);
                }
            }
        }
        if use_b {
            for face in sites_b(g) {
                if let Ok(h) = expand_b(g, face) {
                    emit(h);
                }
            }
        }
    })
}

/// One representative per class, ordered by order then canonical code.
pub fn gen_quadrangulations(max_n: usize, use_b: bool) -> Vec<PlaneGraph> {
    quadrangulation_levels(max_n, use_b).graphs().collect()
}

/// Quartic polyhedra of order at most `max_n`, as duals of quadrangulations.
pub fn gen_quartic_polyhedra(max_n: usize) -> Vec<PlaneGraph> {
    quartic_levels(max_n).graphs().collect()
}

/// Canonical codes of the quartic polyhedra of each order up to `max_n`.
pub fn quartic_levels(max_n: usize) -> Levels {
    dual_levels(&quadrangulation_levels(max_n + 2, true))
}

/// Sphere triangulations with at most `max_n` vertices, from `K4` by
/// vertex splitting.
pub fn triangulation_levels(max_n: usize) -> Levels {
    let k4 = crate::embed(&crate::graph::named::complete(4))
        .expect("K4 is small")
        .expect("K4 is planar");
    closure(vec![k4], max_n, |g, emit| {
        for site in split_sites(g) {
            emit(split_vertex(g, site).expect("enumerated sites are legal"));
        }
    })
}

pub fn gen_triangulations(max_n: usize) -> Vec<PlaneGraph> {
    triangulation_levels(max_n).graphs().collect()
}

/// Cubic polyhedra of order at most `max_n`, as duals of triangulations.
pub fn cubic_levels(max_n: usize) -> Levels {
    dual_levels(&triangulation_levels((max_n + 4) / 2))
}

pub fn gen_cubic_polyhedra(max_n: usize) -> Vec<PlaneGraph> {
    cubic_levels(max_n).graphs().collect()
}

/// Replaces every graph by its dual and regroups by order.
pub fn dual_levels(levels: &Levels) -> Levels {
    let all: Vec<&CanonicalCode> = levels.codes().collect();
    let duals: Vec<CanonicalCode> = all
        .par_iter()
        .map(|c| {
            let g = c.decode().expect("stored codes decode");
            canonical_code(&dual(&g).expect("generated graphs are polyhedra"))
                .expect("duals are connected")
        })
        .collect();
    let mut out = Levels::default();
    for c in duals {
        out.levels.entry(c.order()).or_default().push(c);
    }
    for v in out.levels.values_mut() {
        v.sort_unstable();
    }
    out
}
