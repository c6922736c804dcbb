use std::sync::OnceLock;

use polydeza::analysis::{face_stats, has_four_cycle, is_three_connected, type_profile};
use polydeza::generate::{quadrangulation_levels, split_sites, split_vertex, triangulation_levels};
use polydeza::graph::codec::{
    decode_graph6, decode_planar_code, encode_graph6, encode_planar_code,
};
use polydeza::transforms::{medial, medial_preimage, radial};
use polydeza::{canonical_code, dual, PlaneGraph};
use proptest::prelude::*;

/// Small polyhedra of mixed kinds: triangulations, their cubic duals,
/// quadrangulations and the named fixtures.
fn pool() -> &'static [PlaneGraph] {
    static CELL: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<PlaneGraph> = triangulation_levels(9).graphs().collect();
        let duals: Vec<PlaneGraph> = out.iter().map(|g| dual(g).unwrap()).collect();
        out.extend(duals);
        out.extend(quadrangulation_levels(12, true).graphs());
        out.extend(polydeza::fixtures::all().into_iter().map(|(_, g)| g));
        out
    })
}

fn graph_and_perm() -> impl Strategy<Value = (PlaneGraph, Vec<usize>, Vec<usize>)> {
    (0..pool().len()).prop_flat_map(|i| {
        let g = pool()[i].clone();
        let n = g.n();
        (
            Just(g),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0usize..8, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_code_ignores_labels_rotation_starts_and_mirroring(
        (g, perm, shift) in graph_and_perm()
    ) {
        let c = canonical_code(&g).unwrap();
        let h = g.relabel(&perm).rotate_lists(&shift);
        prop_assert_eq!(&canonical_code(&h).unwrap(), &c);
        prop_assert_eq!(&canonical_code(&h.mirror()).unwrap(), &c);
        prop_assert_eq!(canonical_code(&c.decode().unwrap()).unwrap(), c);
    }

    #[test]
    fn codecs_round_trip((g, perm, _) in graph_and_perm()) {
        let h = g.relabel(&perm);
        let bytes = encode_planar_code(std::slice::from_ref(&h)).unwrap();
        let back = decode_planar_code(&bytes).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back[0].rotations(), h.rotations());
        prop_assert_eq!(encode_planar_code(&back).unwrap(), bytes);
        let a = h.to_abstract();
        let line = encode_graph6(&a);
        let b = decode_graph6(&line).unwrap();
        prop_assert_eq!(&b, &a);
        prop_assert_eq!(encode_graph6(&b), line);
    }

    #[test]
    fn type_profile_ignores_labels((g, perm, _) in graph_and_perm()) {
        let a = type_profile(&g.to_abstract()).unwrap();
        let b = type_profile(&g.relabel(&perm).to_abstract()).unwrap();
        prop_assert_eq!(a.as_vec(), b.as_vec());
    }

    #[test]
    fn dual_is_an_involution_swapping_counts((g, _, _) in graph_and_perm()) {
        let d = dual(&g).unwrap();
        prop_assert_eq!((d.n(), d.q(), d.f()), (g.f(), g.q(), g.n()));
        prop_assert_eq!(canonical_code(&dual(&d).unwrap()).unwrap(), canonical_code(&g).unwrap());
    }

    #[test]
    fn medial_and_radial_are_dual((g, _, _) in graph_and_perm()) {
        let m = medial(&g).unwrap();
        let r = radial(&g).unwrap();
        prop_assert_eq!(m.to_abstract().regularity(), Some(4));
        prop_assert_eq!(m.n(), g.q());
        prop_assert_eq!(r.n(), g.n() + g.f());
        prop_assert!(r.faces().iter().all(|f| f.len() == 4));
        prop_assert_eq!(canonical_code(&dual(&m).unwrap()).unwrap(), canonical_code(&r).unwrap());
        prop_assert!(is_three_connected(&m.to_abstract()));
    }

    #[test]
    fn medial_preimage_recovers_the_pair((g, _, _) in graph_and_perm()) {
        let m = medial(&g).unwrap();
        let (a, b) = medial_preimage(&m).unwrap().expect("medial graphs have a preimage");
        let mut got = [canonical_code(&a).unwrap(), canonical_code(&b).unwrap()];
        let mut want = [canonical_code(&g).unwrap(), canonical_code(&dual(&g).unwrap()).unwrap()];
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn face_counts_satisfy_euler((g, _, _) in graph_and_perm()) {
        let s = face_stats(&g);
        prop_assert_eq!(s.p + s.f, s.q + 2);
        prop_assert_eq!(s.q0 + s.q1 + s.q2, s.q);
        let t: usize = (0..g.num_darts()).filter(|&d| g.faces()[g.face_of(d)].len() == 3).count();
        prop_assert_eq!(s.q1 + 2 * s.q2, t);
    }

    #[test]
    fn vertex_splits_stay_triangulations(i in 0usize..500, k in 0usize..64) {
        let tris: Vec<&PlaneGraph> = pool().iter().filter(|g| g.faces().iter().all(|f| f.len() == 3)).collect();
        let g = tris[i % tris.len()];
        let sites = split_sites(g);
        let h = split_vertex(g, sites[k % sites.len()]).unwrap();
        prop_assert_eq!(h.n(), g.n() + 1);
        prop_assert!(h.faces().iter().all(|f| f.len() == 3));
        prop_assert!(is_three_connected(&h.to_abstract()));
    }
}

#[test]
fn quadrangulations_are_bipartite_with_four_cycles() {
    for g in quadrangulation_levels(12, true).graphs() {
        assert!(has_four_cycle(&g.to_abstract()));
        let mut side = vec![usize::MAX; g.n()];
        side[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in g.rotation(v) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                }
                assert_ne!(side[w], side[v]);
            }
        }
    }
}
