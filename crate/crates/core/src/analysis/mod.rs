//! Common-neighbour profiles, connectivity, girth, subgraph witnesses and
//! face statistics.

mod cycles;
mod faces;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::graph::embed;
use crate::{AbstractGraph, Error, PlaneGraph, Result};

pub use cycles::{
    cycle_attachments, four_cycles, has_separating_four_cycle, is_separating_four_cycle,
};
pub use faces::{
    face_stats, prop1223_report, prop30_report, FaceStats, Prop1223Report, Prop30Report,
};

/// Row-per-vertex adjacency bitsets for fast intersections.
pub(crate) struct BitAdj {
    words: usize,
    bits: Vec<u64>,
}

impl BitAdj {
    pub(crate) fn new(g: &AbstractGraph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for v in 0..n {
            for &w in g.neighbors(v) {
                bits[v * words + w / 64] |= 1 << (w % 64);
            }
        }
        BitAdj { words, bits }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn common_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

/// `N(u) ∩ N(v)` in increasing order.
pub fn common_neighbors(g: &AbstractGraph, u: usize, v: usize) -> Result<Vec<usize>> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::UnknownVertex(x));
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(g.neighbors(u)
        .iter()
        .copied()
        .filter(|w| g.has_edge(v, *w))
        .collect())
}

/// The set of common-neighbour counts over all unordered pairs of distinct
/// vertices, with the lexicographically smallest pair attaining each count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeProfile {
    pub a_set: BTreeSet<usize>,
    pub witnesses: BTreeMap<usize, (usize, usize)>,
    pub max_common: usize,
}

impl TypeProfile {
    pub fn contains(&self, i: usize) -> bool {
        self.a_set.contains(&i)
    }

    pub fn as_vec(&self) -> Vec<usize> {
        self.a_set.iter().copied().collect()
    }
}

pub fn type_profile(g: &AbstractGraph) -> Result<TypeProfile> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let adj = BitAdj::new(g);
    let mut witnesses = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            witnesses.entry(adj.common_count(u, v)).or_insert((u, v));
        }
    }
    let a_set: BTreeSet<usize> = witnesses.keys().copied().collect();
    let max_common = *a_set.iter().next_back().expect("n >= 2 gives a pair");
    Ok(TypeProfile {
        a_set,
        witnesses,
        max_common,
    })
}

fn connected_without(g: &AbstractGraph, removed: &[bool]) -> bool {
    let n = g.n();
    let Some(s) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&x| x)
}

/// Exact vertex connectivity by removing every vertex subset of increasing
/// size. Complete graphs give `n - 1`, disconnected graphs 0.
pub fn vertex_connectivity(g: &AbstractGraph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let complete = (0..n).all(|v| g.degree(v) == n - 1);
    if complete {
        return n - 1;
    }
    let min_deg = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut removed = vec![false; n];
    for k in 0..min_deg {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            for &v in &subset {
                removed[v] = true;
            }
            let ok = connected_without(g, &removed);
            for &v in &subset {
                removed[v] = false;
            }
            if !ok {
                return k;
            }
            if !next_subset(&mut subset, n) {
                break;
            }
        }
    }
    min_deg
}

/// Advances `s` to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Biconnectivity of the graph with `removed` deleted.
/// True when the remainder is connected and has no cut vertex.
fn biconnected_without(g: &AbstractGraph, removed: Option<usize>) -> bool {
    let n = g.n();
    let alive = |v: usize| Some(v) != removed;
    let Some(root) = (0..n).find(|&v| alive(v)) else {
        return true;
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    disc[root] = 0;
    time += 1;
    let mut root_children = 0;
    let mut frames = vec![(root, usize::MAX, 0usize)];
    while let Some(&mut (v, parent, ref mut i)) = frames.last_mut() {
        if *i < g.degree(v) {
            let w = g.neighbors(v)[*i];
            *i += 1;
            if !alive(w) {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                frames.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    return false;
                }
            }
        }
    }
    let alive_count = n - removed.is_some() as usize;
    time == alive_count && root_children <= 1
}

/// 3-connectivity test: at least four vertices, and no vertex whose removal
/// leaves a graph with a cut vertex.
pub fn is_three_connected(g: &AbstractGraph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    if !biconnected_without(g, None) {
        return false;
    }
    (0..n).all(|v| biconnected_without(g, Some(v)))
}

/// Polyhedron test: planar, 3-connected, at least four vertices. The
/// embedding is returned when the answer is yes.
pub fn is_polyhedron(g: &AbstractGraph) -> Result<Option<PlaneGraph>> {
    let cap = crate::graph::DEFAULT_EMBED_CAP;
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    if g.n() < 4 || !is_three_connected(g) {
        return Ok(None);
    }
    embed(g)
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &AbstractGraph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// First pair (lexicographically) with at least `r` common neighbours, i.e. a
/// witness for a `K(2, r)` subgraph.
pub fn k2r_witness(g: &AbstractGraph, r: usize) -> Option<(usize, usize)> {
    let adj = BitAdj::new(g);
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if adj.common_count(u, v) >= r {
                return Some((u, v));
            }
        }
    }
    None
}

/// An apex adjacent to all four vertices of a 4-cycle (a wheel `W4`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquarePyramid {
    pub apex: usize,
    pub cycle: [usize; 4],
}

/// Finds a square pyramid, scanning apexes in increasing order.
pub fn square_pyramid_witness(g: &AbstractGraph) -> Option<SquarePyramid> {
    for apex in 0..g.n() {
        let nb = g.neighbors(apex);
        let sub = g.induced(nb);
        if let Some(c) = four_cycles(&sub).into_iter().next() {
            return Some(SquarePyramid {
                apex,
                cycle: c.map(|i| nb[i]),
            });
        }
    }
    None
}

/// True when some pair has at least two common neighbours.
pub fn has_four_cycle(g: &AbstractGraph) -> bool {
    k2r_witness(g, 2).is_some()
}
