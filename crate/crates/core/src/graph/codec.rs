//! graph6 text and planar_code binary encoders/decoders.

use crate::{build_plane, AbstractGraph, Error, PlaneGraph, Result};

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

fn encode_n(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// One graph6 line, without header or newline.
pub fn encode_graph6(g: &AbstractGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 line; a leading `>>graph6<<` and trailing whitespace
/// are ignored.
pub fn decode_graph6(line: &str) -> Result<AbstractGraph> {
    let bad = |m: &str| Error::MalformedGraph6(m.to_string());
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line).trim_end();
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("character outside 63..=126"));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes {
        [] => return Err(bad("empty line")),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(bad("truncated order"));
            }
            let n = r[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(bad("truncated order"));
            }
            let n = r[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &r[3..])
        }
        [b, r @ ..] => (six(*b), r),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for n={n}, found {}",
            nbits.div_ceil(6),
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(rest[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    AbstractGraph::from_edges(n, &edges)
}

/// Appends one graph (order byte, then 0-terminated 1-based rotation lists).
pub fn write_planar_code_graph(g: &PlaneGraph, out: &mut Vec<u8>) -> Result<()> {
    let n = g.n();
    if n > 255 || n == 0 {
        return Err(Error::OrderOverflow(n));
    }
    out.push(n as u8);
    for v in 0..n {
        out.extend(g.rotation(v).iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(())
}

/// Header followed by every graph in order.
pub fn encode_planar_code(graphs: &[PlaneGraph]) -> Result<Vec<u8>> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        write_planar_code_graph(g, &mut out)?;
    }
    Ok(out)
}

/// Decodes a planar_code stream; the header is optional.
pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>> {
    let bad = |m: String| Error::MalformedPlanarCode(m);
    let mut rest = bytes.strip_prefix(PLANAR_CODE_HEADER).unwrap_or(bytes);
    let mut out = Vec::new();
    while let Some((&n, tail)) = rest.split_first() {
        let n = n as usize;
        if n == 0 {
            return Err(bad(format!(
                "graph {}: two-byte order format is not supported",
                out.len()
            )));
        }
        rest = tail;
        let mut rot = Vec::with_capacity(n);
        for v in 0..n {
            let end = rest.iter().position(|&b| b == 0).ok_or_else(|| {
                bad(format!(
                    "graph {}: truncated at vertex {}",
                    out.len(),
                    v + 1
                ))
            })?;
            let mut list = Vec::with_capacity(end);
            for &b in &rest[..end] {
                if b as usize > n {
                    return Err(bad(format!(
                        "graph {}: neighbour {b} exceeds order {n}",
                        out.len()
                    )));
                }
                list.push(b as usize - 1);
            }
            rot.push(list);
            rest = &rest[end + 1..];
        }
        out.push(build_plane(rot)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::embed;
    use crate::graph::named::*;

    #[test]
    fn graph6_known_strings() {
        // K4 and the empty graph as produced by nauty's geng
        assert_eq!(encode_graph6(&complete(4)), "C~");
        assert_eq!(encode_graph6(&AbstractGraph::empty(0)), "?");
        assert_eq!(encode_graph6(&path(2)), "A_");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [
            cube(),
            icosahedron(),
            dodecahedron(),
            AbstractGraph::empty(0),
            cycle(70),
        ] {
            let s = encode_graph6(&g);
            assert_eq!(decode_graph6(&s).unwrap(), g);
            let with_header = format!("{GRAPH6_HEADER}{s}\n");
            assert_eq!(decode_graph6(&with_header).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_bad_length() {
        let mut s = encode_graph6(&cube());
        s.pop();
        assert!(matches!(decode_graph6(&s), Err(Error::MalformedGraph6(_))));
        assert!(matches!(
            decode_graph6("C~~"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(matches!(
            decode_graph6("C\x01"),
            Err(Error::MalformedGraph6(_))
        ));
    }

    #[test]
    fn planar_code_sizes_and_round_trip() {
        let t = embed(&complete(4)).unwrap().unwrap();
        let bytes = encode_planar_code(std::slice::from_ref(&t)).unwrap();
        assert_eq!(bytes.len() - PLANAR_CODE_HEADER.len(), 17);
        let d = embed(&dodecahedron()).unwrap().unwrap();
        let bytes = encode_planar_code(&[t.clone(), d.clone()]).unwrap();
        let back = decode_planar_code(&bytes).unwrap();
        assert_eq!(back, vec![t, d]);
        assert_eq!(encode_planar_code(&back).unwrap(), bytes);
    }

    #[test]
    fn planar_code_errors() {
        let t = embed(&complete(4)).unwrap().unwrap();
        let bytes = encode_planar_code(&[t]).unwrap();
        assert!(matches!(
            decode_planar_code(&bytes[..bytes.len() - 3]),
            Err(Error::MalformedPlanarCode(_))
        ));
        let n = 256;
        let ring =
            build_plane((0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()).unwrap();
        assert_eq!(encode_planar_code(&[ring]), Err(Error::OrderOverflow(256)));
    }
}
