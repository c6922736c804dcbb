//! Brute-force enumeration of connected regular planar 3-connected graphs,
//! independent of the embedding-based generators.
//!
//! Graphs are grown one vertex at a time; the new vertex picks its whole
//! neighbourhood among earlier vertices, so every prefix is an induced
//! connected subgraph. Prefixes are deduplicated per size by a canonical form
//! computed with partition refinement and individualisation.

use std::collections::HashSet;

use crate::analysis::is_three_connected;
use crate::graph::embed;
use crate::{AbstractGraph, Error, PlaneGraph, Result};

const MAX_ORDER: usize = 16;

/// An oracle result: the abstract graph and one of its sphere embeddings.
#[derive(Clone, Debug)]
pub struct OracleGraph {
    pub graph: AbstractGraph,
    pub embedding: PlaneGraph,
}

/// Small graph as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Masks(Vec<u16>);

impl Masks {
    fn n(&self) -> usize {
        self.0.len()
    }

    fn deg(&self, v: usize) -> usize {
        self.0[v].count_ones() as usize
    }

    fn edges(&self) -> usize {
        self.0
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn to_graph(&self) -> AbstractGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.0[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        AbstractGraph::from_edges(n, &edges).expect("masks are simple")
    }

    #[cfg(test)]
    /// Relabelled copy where vertex `order[i]` becomes `i`.
    fn permuted(&self, order: &[usize]) -> Masks {
        let n = self.n();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = vec![0u16; n];
        for (i, &v) in order.iter().enumerate() {
            let mut m = self.0[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                out[i] |= 1 << pos[w];
            }
        }
        Masks(out)
    }

    /// Upper-triangle bits in row order; at most 120 bits for 16 vertices.
    fn certificate(&self, order: &[usize]) -> u128 {
        let n = self.n();
        let mut c = 0u128;
        for i in 0..n {
            for j in i + 1..n {
                c = (c << 1) | (self.0[order[i]] >> order[j] & 1) as u128;
            }
        }
        c
    }
}

/// Splits cells until each vertex in a cell has the same number of
/// neighbours in every cell. Fragments are ordered by neighbour count.
fn refine(g: &Masks, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mut mask = 0u16;
            for &v in &cells[s] {
                mask |= 1 << v;
            }
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.0[v] & mask).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        let mut part: Vec<usize> = keyed[start..k].iter().map(|x| x.1).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = k;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
                *cells = next;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn search(g: &Masks, cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = g.certificate(&order);
        if best.is_none_or(|b| cert < b) {
            *best = Some(cert);
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&x| x != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Isomorphism-invariant form of a small graph.
fn canonical_form(g: &Masks) -> u128 {
    let mut cells = vec![(0..g.n()).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut best = None;
    search(g, cells, &mut best);
    best.unwrap_or(0)
}

/// Whether a prefix of size `k` can still grow into a connected `r`-regular
/// planar graph on `n` vertices.
fn feasible(g: &Masks, r: usize, n: usize) -> bool {
    let k = g.n();
    let m = n - k;
    let mut deficit = 0;
    for v in 0..k {
        let d = r - g.deg(v);
        if d > m {
            return false;
        }
        deficit += d;
    }
    if deficit > r * m
        || !(r * m - deficit).is_multiple_of(2)
        || r * m - deficit > m * m.saturating_sub(1)
    {
        return false;
    }
    if m > 0 && deficit == 0 {
        // a finished component could never be joined to the rest
        return false;
    }
    k < 3 || g.edges() <= 3 * k - 6
}

/// Every connected `r`-regular planar 3-connected graph on `n` vertices, one
/// per isomorphism class, with an embedding. Supported for `r` in 3..=5 and
/// `n <= 16`.
pub fn oracle_regular_planar(r: usize, n: usize) -> Result<Vec<OracleGraph>> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, cap: MAX_ORDER });
    }
    if !(3..=5).contains(&r) || !(r * n).is_multiple_of(2) {
        return Err(Error::PreconditionViolated(format!(
            "no {r}-regular graph on {n} vertices is supported"
        )));
    }
    if n <= r {
        return Ok(Vec::new());
    }
    let mut level: Vec<Masks> = vec![Masks(vec![0])];
    for k in 1..n {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let open: Vec<usize> = (0..k).filter(|&v| g.deg(v) < r).collect();
            for sel in 1u32..(1 << open.len()) {
                let size = sel.count_ones() as usize;
                if size > r {
                    continue;
                }
                let mut h = g.clone();
                let mut mask = 0u16;
                for (b, &v) in open.iter().enumerate() {
                    if sel >> b & 1 == 1 {
                        mask |= 1 << v;
                        h.0[v] |= 1 << k;
                    }
                }
                h.0.push(mask);
                if !feasible(&h, r, n) {
                    continue;
                }
                if k + 1 >= 5 && embed(&h.to_graph())?.is_none() {
                    continue;
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    let mut out = Vec::new();
    let mut forms: Vec<(u128, Masks)> =
        level.into_iter().map(|g| (canonical_form(&g), g)).collect();
    forms.sort_unstable_by_key(|x| x.0);
    for (form, g) in forms {
        let _ = form;
        let ag = g.to_graph();
        if ag.regularity() != Some(r) || !is_three_connected(&ag) {
            continue;
        }
        if let Some(embedding) = embed(&ag)? {
            out.push(OracleGraph {
                graph: ag,
                embedding,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_relabel_invariant() {
        let g = Masks::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]);
        let perm = [3, 5, 0, 2, 1, 4];
        assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
        let h = Masks::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5)]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let k = Masks::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]);
        assert_ne!(canonical_form(&g), canonical_form(&k));
    }

    #[test]
    fn smallest_cases() {
        assert_eq!(oracle_regular_planar(4, 6).unwrap().len(), 1);
        assert_eq!(oracle_regular_planar(3, 4).unwrap().len(), 1);
        assert_eq!(oracle_regular_planar(4, 7).unwrap().len(), 0);
        assert_eq!(oracle_regular_planar(3, 6).unwrap().len(), 1);
        assert!(oracle_regular_planar(3, 7).is_err());
        assert!(oracle_regular_planar(4, 20).is_err());
    }

    impl Masks {
        fn from_edges(n: usize, edges: &[(usize, usize)]) -> Masks {
            let mut m = vec![0u16; n];
            for &(u, v) in edges {
                m[u] |= 1 << v;
                m[v] |= 1 << u;
            }
            Masks(m)
        }
    }
}
