use std::fmt;

use crate::{build_plane, Error, PlaneGraph, Result};

/// Byte string identifying a connected plane graph up to sphere
/// homeomorphism, including reflections.
///
/// Layout: the vertex count as a big-endian `u32`, then the breadth-first
/// code entries (one byte each when `n < 255`, else two bytes big-endian).
/// Each vertex contributes its neighbours' labels in rotation order followed
/// by a zero; labels are 1-based in order of discovery.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(CanonicalCode)
    }

    /// Vertex count stored in the header.
    pub fn order(&self) -> usize {
        let b = &self.0;
        u32::from_be_bytes([b[0], b[1], b[2], b[3]]) as usize
    }

    /// Rebuilds a plane graph whose canonical code is `self`.
    pub fn decode(&self) -> Result<PlaneGraph> {
        let bad = |m: &str| Error::MalformedPlanarCode(format!("canonical code: {m}"));
        if self.0.len() < 4 {
            return Err(bad("missing header"));
        }
        let n = self.order();
        let wide = n >= 255;
        let body = &self.0[4..];
        let entries: Vec<usize> = if wide {
            if !body.len().is_multiple_of(2) {
                return Err(bad("odd body length"));
            }
            body.chunks(2)
                .map(|c| u16::from_be_bytes([c[0], c[1]]) as usize)
                .collect()
        } else {
            body.iter().map(|&b| b as usize).collect()
        };
        let mut rot = vec![Vec::new(); n];
        let mut v = 0;
        for e in entries {
            if v >= n {
                return Err(bad("too many entries"));
            }
            if e == 0 {
                v += 1;
            } else if e > n {
                return Err(bad("label out of range"));
            } else {
                rot[v].push(e - 1);
            }
        }
        if v != n {
            return Err(bad("truncated"));
        }
        build_plane(rot)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Minimal breadth-first code over all root darts and both orientations.
///
/// Only darts whose (degree, neighbour degree sum) signature at both ends is
/// maximal are tried as roots; the signature is invariant under
/// homeomorphism, so the minimum is unchanged.
pub fn canonical_code(g: &PlaneGraph) -> Result<CanonicalCode> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + 2 * (g.num_darts() + n));
    out.extend_from_slice(&(n as u32).to_be_bytes());
    if n == 0 {
        return Ok(CanonicalCode(out));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let len = g.num_darts() + n;
    let mut best: Vec<u16> = Vec::new();
    if n == 1 {
        best.push(0);
    } else {
        let roots = root_candidates(g);
        let mut scratch = Scratch::new(n, len);
        for &root in &roots {
            for forward in [true, false] {
                if scratch.run(g, root, forward, &best) {
                    std::mem::swap(&mut best, &mut scratch.code);
                }
            }
        }
    }
    if n < 255 {
        out.extend(best.iter().map(|&x| x as u8));
    } else {
        for x in best {
            out.extend_from_slice(&x.to_be_bytes());
        }
    }
    Ok(CanonicalCode(out))
}

fn root_candidates(g: &PlaneGraph) -> Vec<usize> {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let sdeg: Vec<usize> = (0..n)
        .map(|v| g.rotation(v).iter().map(|&w| deg[w]).sum())
        .collect();
    let key = |d: usize| {
        let (t, h) = (g.tail(d), g.head(d));
        (deg[t], sdeg[t], deg[h], sdeg[h])
    };
    let best = (0..g.num_darts()).map(key).max().expect("graph has darts");
    (0..g.num_darts()).filter(|&d| key(d) == best).collect()
}

struct Scratch {
    label: Vec<u16>,
    first: Vec<usize>,
    order: Vec<usize>,
    code: Vec<u16>,
}

impl Scratch {
    fn new(n: usize, len: usize) -> Self {
        Scratch {
            label: vec![0; n],
            first: vec![0; n],
            order: Vec::with_capacity(n),
            code: Vec::with_capacity(len),
        }
    }

    /// Writes the code for `root` into `self.code`. Returns true if it is
    /// smaller than `best` (or `best` is empty); stops early once larger.
    fn run(&mut self, g: &PlaneGraph, root: usize, forward: bool, best: &[u16]) -> bool {
        self.label.fill(0);
        self.order.clear();
        self.code.clear();
        let mut smaller = best.is_empty();
        let r = g.tail(root);
        self.label[r] = 1;
        self.first[r] = root;
        self.order.push(r);
        let mut next = 2u16;
        let mut idx = 0;
        while idx < self.order.len() {
            let v = self.order[idx];
            idx += 1;
            let d0 = self.first[v];
            let mut d = d0;
            loop {
                let w = g.head(d);
                if self.label[w] == 0 {
                    self.label[w] = next;
                    next += 1;
                    self.first[w] = g.rev(d);
                    self.order.push(w);
                }
                let x = self.label[w];
                if !smaller {
                    let b = best[self.code.len()];
                    if x > b {
                        return false;
                    }
                    if x < b {
                        smaller = true;
                    }
                }
                self.code.push(x);
                d = if forward { g.succ(d) } else { g.pred(d) };
                if d == d0 {
                    break;
                }
            }
            if !smaller {
                // a separator is the smallest entry, so any nonzero best wins here
                if best[self.code.len()] != 0 {
                    smaller = true;
                }
            }
            self.code.push(0);
        }
        smaller
    }
}
