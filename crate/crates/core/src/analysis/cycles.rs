use crate::{AbstractGraph, PlaneGraph};

/// Every 4-cycle once, as `[a, b, c, d]` with `a` the smallest vertex and
/// `b < d`. Sorted lexicographically.
pub fn four_cycles(g: &AbstractGraph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let na = g.neighbors(a);
        for (i, &b) in na.iter().enumerate() {
            if b < a {
                continue;
            }
            for &d in &na[i + 1..] {
                if d < a {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c > a && c != d && g.has_edge(c, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Cycle vertices with an off-cycle neighbour on each side of the cycle `c`
/// (given in cyclic order).
///
/// At `c[i]`, the neighbours met strictly between `c[i-1]` and `c[i+1]` in
/// rotation order lie on one side, the rest on the other. Chords are
/// ignored.
pub fn cycle_attachments(g: &PlaneGraph, c: &[usize]) -> [Vec<usize>; 2] {
    let mut out = [Vec::new(), Vec::new()];
    let k = c.len();
    for i in 0..k {
        let v = c[i];
        let prev = c[(i + k - 1) % k];
        let next = c[(i + 1) % k];
        let rot = g.rotation(v);
        let d = rot.len();
        let Some(start) = rot.iter().position(|&w| w == prev) else {
            continue;
        };
        let mut which = 0;
        let mut hit = [false; 2];
        for step in 1..d {
            let w = rot[(start + step) % d];
            if w == next {
                which = 1;
                continue;
            }
            if !c.contains(&w) {
                hit[which] = true;
            }
        }
        for s in 0..2 {
            if hit[s] {
                out[s].push(v);
            }
        }
    }
    out
}

/// Whether both open sides of the 4-cycle `c` contain a vertex.
pub fn is_separating_four_cycle(g: &PlaneGraph, c: &[usize; 4]) -> bool {
    let [a, b] = cycle_attachments(g, c);
    !a.is_empty() && !b.is_empty()
}

pub fn has_separating_four_cycle(g: &PlaneGraph) -> bool {
    four_cycles(&g.to_abstract())
        .iter()
        .any(|c| is_separating_four_cycle(g, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::embed;
    use crate::graph::named::*;

    #[test]
    fn counts() {
        assert_eq!(four_cycles(&cube()).len(), 6);
        assert_eq!(four_cycles(&complete(4)).len(), 3);
        assert_eq!(four_cycles(&octahedron()).len(), 3 + 12);
        assert!(four_cycles(&dodecahedron()).is_empty());
    }

    #[test]
    fn cube_faces_do_not_separate() {
        let g = embed(&cube()).unwrap().unwrap();
        assert!(!has_separating_four_cycle(&g));
    }

    #[test]
    fn octahedron_equators_separate() {
        // the three equators of the octahedron separate two apexes
        let g = embed(&octahedron()).unwrap().unwrap();
        let seps = four_cycles(&g.to_abstract())
            .into_iter()
            .filter(|c| is_separating_four_cycle(&g, c))
            .count();
        assert_eq!(seps, 3);
    }
}
