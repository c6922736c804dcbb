use std::collections::BTreeSet;

use crate::Error;

/// Adjacency-only simple graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted, so iteration order is deterministic by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    adj: Vec<Vec<usize>>,
}

impl AbstractGraph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        AbstractGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph from an edge list, rejecting loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateNeighbour {
                    vertex: v,
                    neighbour: w[0],
                });
            }
        }
        Ok(AbstractGraph { adj })
    }

    /// Builds a graph from neighbour lists; the lists must be symmetric.
    pub fn from_adjacency(lists: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = lists.len();
        let mut edges = Vec::new();
        for (u, list) in lists.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(Error::UnknownVertex(v));
                }
                if !lists[v].contains(&u) {
                    return Err(Error::AsymmetricDart { tail: u, head: v });
                }
                if u < v {
                    edges.push((u, v));
                } else if u == v {
                    return Err(Error::Loop(u));
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .map(|l| l.binary_search(&v).is_ok())
            .unwrap_or(false)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.q());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `Some(r)` when every vertex has degree `r`. The empty graph is 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.adj.first().map(Vec::len).unwrap_or(0);
        self.adj.iter().all(|l| l.len() == r).then_some(r)
    }

    pub fn degree_counts(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut out = std::collections::BTreeMap::new();
        for l in &self.adj {
            *out.entry(l.len()).or_insert(0) += 1;
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> AbstractGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
        }
        AbstractGraph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &AbstractGraph) -> AbstractGraph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect::<Vec<_>>()),
        );
        AbstractGraph { adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> AbstractGraph {
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
            adj[perm[v]].sort_unstable();
        }
        AbstractGraph { adj }
    }

    /// Same graph with `removed` (and their edges) deleted and the remaining
    /// vertices renumbered in order.
    pub fn without_vertices(&self, removed: &BTreeSet<usize>) -> AbstractGraph {
        let keep: Vec<usize> = (0..self.n()).filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// Adds an edge, keeping lists sorted. Returns false if it already existed.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }
}

/// Common named graphs used throughout tests and fixtures.
pub mod named {
    use super::AbstractGraph;

    pub fn complete(n: usize) -> AbstractGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        AbstractGraph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> AbstractGraph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        AbstractGraph::from_edges(n, &edges).expect("cycle is simple")
    }

    pub fn path(n: usize) -> AbstractGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        AbstractGraph::from_edges(n, &edges).expect("path is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> AbstractGraph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        AbstractGraph::from_edges(a + b, &edges).expect("complete bipartite graph is simple")
    }

    /// Prism over a `k`-cycle: outer `0..k`, inner `k..2k`.
    pub fn prism(k: usize) -> AbstractGraph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
            edges.push((k + i, k + (i + 1) % k));
            edges.push((i, k + i));
        }
        AbstractGraph::from_edges(2 * k, &edges).expect("prism is simple")
    }

    /// Antiprism over a `k`-cycle: `i` joined to `k+i` and `k+(i+1) mod k`.
    pub fn antiprism(k: usize) -> AbstractGraph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
            edges.push((k + i, k + (i + 1) % k));
            edges.push((i, k + i));
            edges.push((i, k + (i + 1) % k));
        }
        AbstractGraph::from_edges(2 * k, &edges).expect("antiprism is simple")
    }

    pub fn cube() -> AbstractGraph {
        prism(4)
    }

    /// Complement of a perfect matching on six vertices.
    pub fn octahedron() -> AbstractGraph {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        AbstractGraph::from_edges(6, &edges).expect("octahedron is simple")
    }

    /// Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
    pub fn icosahedron() -> AbstractGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            let up = 1 + i;
            let up_next = 1 + (i + 1) % 5;
            let lo = 6 + i;
            let lo_next = 6 + (i + 1) % 5;
            edges.push((0, up));
            edges.push((up, up_next));
            edges.push((up, lo));
            edges.push((up, lo_next));
            edges.push((lo, lo_next));
            edges.push((lo, 11));
        }
        AbstractGraph::from_edges(12, &edges).expect("icosahedron is simple")
    }

    /// Pentagon 0..5, inner ring 5..10 of a 10-cycle, pentagon 15..20.
    pub fn dodecahedron() -> AbstractGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, 5 + 2 * i));
            edges.push((15 + i, 15 + (i + 1) % 5));
            edges.push((15 + i, 5 + 2 * i + 1));
        }
        for i in 0..10 {
            edges.push((5 + i, 5 + (i + 1) % 10));
        }
        AbstractGraph::from_edges(20, &edges).expect("dodecahedron is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(AbstractGraph::from_edges(3, &[(0, 0)]), Err(Error::Loop(0)));
        assert!(matches!(
            AbstractGraph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateNeighbour { .. })
        ));
        assert_eq!(
            AbstractGraph::from_edges(3, &[(0, 5)]),
            Err(Error::UnknownVertex(5))
        );
    }

    #[test]
    fn named_graphs_have_expected_sizes() {
        assert_eq!((cube().n(), cube().q()), (8, 12));
        assert_eq!(cube().regularity(), Some(3));
        assert_eq!(octahedron().regularity(), Some(4));
        assert_eq!((icosahedron().n(), icosahedron().q()), (12, 30));
        assert_eq!(icosahedron().regularity(), Some(5));
        assert_eq!((dodecahedron().n(), dodecahedron().q()), (20, 30));
        assert_eq!(dodecahedron().regularity(), Some(3));
        assert_eq!(antiprism(4).regularity(), Some(4));
    }

    #[test]
    fn components_and_union() {
        let g = cycle(4).disjoint_union(&complete(3));
        assert_eq!(g.components(), vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);
        assert!(!g.is_connected());
        assert_eq!(g.regularity(), Some(2));
    }
}
