use std::collections::HashMap;

use crate::{build_plane, AbstractGraph, Error, PlaneGraph, Result};

/// Largest order `embed` accepts unless a cap is given explicitly.
pub const DEFAULT_EMBED_CAP: usize = 64;

/// Finds a genus-0 rotation system for `g`, or `None` if `g` is not planar.
pub fn embed(g: &AbstractGraph) -> Result<Option<PlaneGraph>> {
    embed_with_cap(g, DEFAULT_EMBED_CAP)
}

/// As [`embed`], refusing graphs with more than `cap` vertices.
///
/// Each biconnected block is embedded by path addition (Demoucron, Malgrange
/// and Pertuiset); block rotations are then concatenated at cut vertices.
pub fn embed_with_cap(g: &AbstractGraph, cap: usize) -> Result<Option<PlaneGraph>> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if n >= 3 && g.q() > 3 * n - 6 {
        return Ok(None);
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        match embed_block(&block) {
            Some(local) => {
                for (v, list) in local {
                    rot[v].extend(list);
                }
            }
            None => return Ok(None),
        }
    }
    build_plane(rot).map(Some)
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn blocks(g: &AbstractGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent, next neighbour index)
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut i)) = frames.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Embeds one biconnected block with at least two edges. Returns per-vertex
/// cyclic neighbour lists, or `None` if the block is not planar.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    // local numbering
    let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let m = ids.len();
    let local = |x: usize| ids.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); m];
    for &(u, v) in edges {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    if edges.len() > 3 * m - 6 {
        return None;
    }

    let mut placed_v = vec![false; m];
    let mut placed_e = vec![vec![false; m]; m];
    let mut faces: Vec<Vec<usize>> = Vec::new();

    // initial cycle: edge 0-adj[0][0] closed by a shortest path avoiding it
    let a = 0;
    let b = adj[0][0];
    let path = bfs_path(
        &adj,
        b,
        |x| x == a,
        |x, y| !((x == a && y == b) || (x == b && y == a)),
        |_| true,
    )?;
    let cycle = path; // b ... a
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_v[x] = true;
        placed_e[x][y] = true;
        placed_e[y][x] = true;
    }
    faces.push(cycle.clone());
    faces.push(cycle.iter().rev().copied().collect());
    let mut remaining = edges.len() - cycle.len();

    while remaining > 0 {
        let frags = fragments(&adj, &placed_v, &placed_e);
        let mut choice: Option<(usize, usize)> = None;
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attach.iter().all(|x| faces[k].contains(x)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.or(fallback).expect("some fragment remains");
        let frag = &frags[fi];
        let path = fragment_path(&adj, frag, &placed_v);
        for w in path.windows(2) {
            placed_e[w[0]][w[1]] = true;
            placed_e[w[1]][w[0]] = true;
        }
        for &x in &path {
            placed_v[x] = true;
        }
        remaining -= path.len() - 1;
        split_face(&mut faces, face, &path);
    }

    // rotation at b: c follows a whenever a -> b -> c on a face
    let mut next: Vec<HashMap<usize, usize>> = vec![HashMap::new(); m];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (x, y, z) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            next[y].insert(x, z);
        }
    }
    let mut out = Vec::with_capacity(m);
    for v in 0..m {
        let start = adj[v][0];
        let mut list = vec![ids[start]];
        let mut cur = next[v][&start];
        while cur != start {
            list.push(ids[cur]);
            cur = next[v][&cur];
        }
        out.push((ids[v], list));
    }
    Some(out)
}

struct Fragment {
    /// Unplaced vertices (empty for a chord).
    inner: Vec<usize>,
    /// Placed vertices it attaches to, sorted.
    attach: Vec<usize>,
    /// For a chord, its endpoints.
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[Vec<usize>], placed_v: &[bool], placed_e: &[Vec<bool>]) -> Vec<Fragment> {
    let m = adj.len();
    let mut out = Vec::new();
    for u in 0..m {
        if !placed_v[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && placed_v[v] && !placed_e[u][v] {
                out.push(Fragment {
                    inner: Vec::new(),
                    attach: vec![u, v],
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen = vec![false; m];
    for s in 0..m {
        if placed_v[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut attach = Vec::new();
        let mut i = 0;
        while i < inner.len() {
            let x = inner[i];
            i += 1;
            for &y in &adj[x] {
                if placed_v[y] {
                    attach.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    inner.push(y);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        out.push(Fragment {
            inner,
            attach,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, placed_v: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attach[0];
    let start = *frag
        .inner
        .iter()
        .find(|&&x| adj[x].contains(&a))
        .expect("attachment touches the fragment");
    let mut in_frag = vec![false; adj.len()];
    for &x in &frag.inner {
        in_frag[x] = true;
    }
    let mut path = bfs_path(
        adj,
        start,
        |x| in_frag[x] && adj[x].iter().any(|&y| placed_v[y] && y != a),
        |_, _| true,
        |y| in_frag[y],
    )
    .expect("a biconnected fragment has two attachments");
    let end = *path.last().unwrap();
    let b = *adj[end].iter().find(|&&y| placed_v[y] && y != a).unwrap();
    path.insert(0, a);
    path.push(b);
    path
}

/// Shortest path from `s` to the first vertex satisfying `goal`, moving only
/// along allowed edges into allowed vertices.
fn bfs_path(
    adj: &[Vec<usize>],
    s: usize,
    goal: impl Fn(usize) -> bool,
    edge_ok: impl Fn(usize, usize) -> bool,
    vertex_ok: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[s] = s;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if goal(x) {
            let mut path = vec![x];
            let mut cur = x;
            while cur != s {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX && edge_ok(x, y) && (vertex_ok(y) || goal(y)) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Replaces face `k` by the two faces obtained by drawing `path` inside it.
fn split_face(faces: &mut Vec<Vec<usize>>, k: usize, path: &[usize]) {
    let face = faces.swap_remove(k);
    let len = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    // along the face from a to b, then back over the path
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % len;
    }
    f1.extend(inner.iter().rev());
    // along the face from b to a, then forward over the path
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % len;
    }
    f2.extend(inner.iter());
    faces.push(f1);
    faces.push(f2);
}
