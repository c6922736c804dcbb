use crate::{AbstractGraph, Error, Result};

/// A face: the closed walk of darts bounding one region, in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub darts: Vec<usize>,
}

impl Face {
    /// Number of edges on the boundary walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Simple graph with a rotation system of genus 0.
///
/// Darts are numbered `offset[v] + i` for the `i`-th entry of `v`'s rotation.
/// Walking a face goes from dart `d` to `succ(rev(d))`, so a face visits
/// `a -> b -> c` exactly when `c` follows `a` in the rotation at `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    offset: Vec<usize>,
    tail: Vec<usize>,
    head: Vec<usize>,
    rev: Vec<usize>,
    face_of: Vec<usize>,
    faces: Vec<Face>,
}

/// Validates a rotation system and traces its faces.
///
/// Disconnected graphs are accepted as long as every component is spherical.
pub fn build_plane(rotation: Vec<Vec<usize>>) -> Result<PlaneGraph> {
    let n = rotation.len();
    for (v, list) in rotation.iter().enumerate() {
        for (i, &w) in list.iter().enumerate() {
            if w >= n {
                return Err(Error::UnknownVertex(w));
            }
            if w == v {
                return Err(Error::Loop(v));
            }
            if list[..i].contains(&w) {
                return Err(Error::DuplicateNeighbour {
                    vertex: v,
                    neighbour: w,
                });
            }
        }
    }
    let mut offset = Vec::with_capacity(n + 1);
    let mut total = 0;
    for list in &rotation {
        offset.push(total);
        total += list.len();
    }
    offset.push(total);

    let mut tail = Vec::with_capacity(total);
    let mut head = Vec::with_capacity(total);
    for (v, list) in rotation.iter().enumerate() {
        for &w in list {
            tail.push(v);
            head.push(w);
        }
    }
    let mut rev = vec![0; total];
    for d in 0..total {
        let (u, v) = (tail[d], head[d]);
        match rotation[v].iter().position(|&x| x == u) {
            Some(i) => rev[d] = offset[v] + i,
            None => return Err(Error::AsymmetricDart { tail: u, head: v }),
        }
    }

    let mut g = PlaneGraph {
        rotation,
        offset,
        tail,
        head,
        rev,
        face_of: vec![usize::MAX; total],
        faces: Vec::new(),
    };
    for start in 0..total {
        if g.face_of[start] != usize::MAX {
            continue;
        }
        let id = g.faces.len();
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            g.face_of[d] = id;
            darts.push(d);
            d = g.face_next(d);
            if d == start {
                break;
            }
        }
        g.faces.push(Face { darts });
    }

    let genus = g.genus();
    if genus != 0 {
        return Err(Error::NonSpherical { genus });
    }
    Ok(g)
}

impl PlaneGraph {
    /// Sum over components with at least one edge of `(2 - n + q - f) / 2`.
    fn genus(&self) -> usize {
        let n = self.n();
        let mut comp_of = vec![usize::MAX; n];
        let mut sizes: Vec<(i64, i64)> = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            comp_of[s] = id;
            stack.push(s);
            let (mut verts, mut darts) = (0i64, 0i64);
            while let Some(v) = stack.pop() {
                verts += 1;
                darts += self.rotation[v].len() as i64;
                for &w in &self.rotation[v] {
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        stack.push(w);
                    }
                }
            }
            sizes.push((verts, darts / 2));
        }
        let mut faces_in = vec![0i64; sizes.len()];
        for f in &self.faces {
            faces_in[comp_of[self.tail[f.darts[0]]]] += 1;
        }
        let mut genus = 0;
        for (i, &(p, q)) in sizes.iter().enumerate() {
            if q == 0 {
                continue;
            }
            let chi = p - q + faces_in[i];
            genus += ((2 - chi) / 2) as usize;
        }
        genus
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.head.len() / 2
    }

    /// Number of faces.
    pub fn f(&self) -> usize {
        self.faces.len()
    }

    pub fn num_darts(&self) -> usize {
        self.head.len()
    }

    /// Neighbours of `v` in cyclic rotation order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn tail(&self, d: usize) -> usize {
        self.tail[d]
    }

    pub fn head(&self, d: usize) -> usize {
        self.head[d]
    }

    pub fn rev(&self, d: usize) -> usize {
        self.rev[d]
    }

    /// First dart of `v`'s rotation.
    pub fn first_dart(&self, v: usize) -> usize {
        self.offset[v]
    }

    /// Next dart around the tail of `d`.
    pub fn succ(&self, d: usize) -> usize {
        let v = self.tail[d];
        if d + 1 == self.offset[v + 1] {
            self.offset[v]
        } else {
            d + 1
        }
    }

    /// Previous dart around the tail of `d`.
    pub fn pred(&self, d: usize) -> usize {
        let v = self.tail[d];
        if d == self.offset[v] {
            self.offset[v + 1] - 1
        } else {
            d - 1
        }
    }

    /// Dart following `d` along its face.
    pub fn face_next(&self, d: usize) -> usize {
        self.succ(self.rev[d])
    }

    /// Dart preceding `d` along its face.
    pub fn face_prev(&self, d: usize) -> usize {
        self.rev[self.pred(d)]
    }

    /// The dart `u -> v`, if that edge exists.
    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        self.rotation
            .get(u)?
            .iter()
            .position(|&w| w == v)
            .map(|i| self.offset[u] + i)
    }

    /// Darts leaving `v`, in rotation order.
    pub fn darts_of(&self, v: usize) -> std::ops::Range<usize> {
        self.offset[v]..self.offset[v + 1]
    }

    /// Faces in discovery order (by smallest dart id).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    /// Vertices met along face `f`, starting at the tail of its first dart.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].darts.iter().map(|&d| self.tail[d]).collect()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.num_darts())
            .filter(|&d| self.tail[d] < self.head[d])
            .map(|d| (self.tail[d], self.head[d]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Index of the undirected edge carrying dart `d`, matching `edges()`.
    pub fn edge_index(&self) -> Vec<usize> {
        let edges = self.edges();
        (0..self.num_darts())
            .map(|d| {
                let (a, b) = (self.tail[d], self.head[d]);
                let key = (a.min(b), a.max(b));
                edges.binary_search(&key).expect("dart edge is listed")
            })
            .collect()
    }

    pub fn to_abstract(&self) -> AbstractGraph {
        let mut lists = self.rotation.clone();
        for l in &mut lists {
            l.sort_unstable();
        }
        AbstractGraph::from_adjacency(lists).expect("plane graph is simple")
    }

    /// Same graph with every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = self
            .rotation
            .iter()
            .map(|l| l.iter().rev().copied().collect())
            .collect();
        build_plane(rot).expect("mirror of a plane graph is plane")
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> PlaneGraph {
        let mut rot = vec![Vec::new(); self.n()];
        for (v, l) in self.rotation.iter().enumerate() {
            rot[perm[v]] = l.iter().map(|&w| perm[w]).collect();
        }
        build_plane(rot).expect("relabelling preserves planarity")
    }

    /// Same embedding with each rotation list started at position `shift[v] % deg`.
    pub fn rotate_lists(&self, shift: &[usize]) -> PlaneGraph {
        let rot = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, l)| {
                let mut l = l.clone();
                if !l.is_empty() {
                    let k = shift[v] % l.len();
                    l.rotate_left(k);
                }
                l
            })
            .collect();
        build_plane(rot).expect("rotating lists keeps the embedding")
    }

    /// Face length counts indexed by length.
    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Face::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.to_abstract().is_connected()
    }
}

/// The dual plane graph: one vertex per face, adjacent across each edge.
///
/// Only polyhedra are accepted; other inputs can have non-simple duals.
pub fn dual(g: &PlaneGraph) -> Result<PlaneGraph> {
    if g.n() < 4 || !crate::analysis::is_three_connected(&g.to_abstract()) {
        return Err(Error::NotPolyhedral(
            "dual needs a 3-connected plane graph".into(),
        ));
    }
    let rot: Vec<Vec<usize>> = g
        .faces()
        .iter()
        .map(|f| f.darts.iter().map(|&d| g.face_of(g.rev(d))).collect())
        .collect();
    match build_plane(rot.clone()) {
        Ok(h) => Ok(h),
        Err(Error::NonSpherical { .. }) => {
            let rot = rot
                .into_iter()
                .map(|l| l.into_iter().rev().collect())
                .collect();
            build_plane(rot).map_err(|e| Error::NotPolyhedral(e.to_string()))
        }
        Err(e) => Err(Error::NotPolyhedral(e.to_string())),
    }
}
