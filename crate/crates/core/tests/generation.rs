use std::collections::BTreeSet;

use polydeza::analysis::{has_separating_four_cycle, is_three_connected};
use polydeza::canonical_code;
use polydeza::generate::{
    cubic_levels, gen_quartic_polyhedra, oracle_regular_planar, quadrangulation_levels,
    quartic_levels, triangulation_levels,
};

#[test]
fn quartic_counts_match_the_oracle_on_small_orders() {
    let levels = quartic_levels(11);
    for n in 6..=11 {
        let oracle = oracle_regular_planar(4, n).unwrap();
        assert_eq!(levels.count(n), oracle.len(), "order {n}");
        let generated: BTreeSet<_> = levels
            .levels
            .get(&n)
            .into_iter()
            .flatten()
            .cloned()
            .collect();
        let found: BTreeSet<_> = oracle
            .iter()
            .map(|o| canonical_code(&o.embedding).unwrap())
            .collect();
        assert_eq!(generated, found, "order {n}");
    }
}

#[test]
fn cubic_counts_match_the_oracle_on_small_orders() {
    let levels = cubic_levels(12);
    for n in (4..=12).step_by(2) {
        let oracle = oracle_regular_planar(3, n).unwrap();
        let found: BTreeSet<_> = oracle
            .iter()
            .map(|o| canonical_code(&o.embedding).unwrap())
            .collect();
        let generated: BTreeSet<_> = levels
            .levels
            .get(&n)
            .into_iter()
            .flatten()
            .cloned()
            .collect();
        assert_eq!(generated, found, "order {n}");
    }
}

#[test]
fn triangulation_counts() {
    let l = triangulation_levels(11);
    let counts: Vec<usize> = (4..=11).map(|n| l.count(n)).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 14, 50, 233, 1249]);
}

#[test]
fn expansion_a_alone_yields_the_quadrangulations_without_separating_four_cycles() {
    let full = quadrangulation_levels(16, true);
    let only_a = quadrangulation_levels(16, false);
    for n in 8..=16 {
        let filtered: Vec<_> = full
            .levels
            .get(&n)
            .into_iter()
            .flatten()
            .filter(|c| !has_separating_four_cycle(&c.decode().unwrap()))
            .cloned()
            .collect();
        assert_eq!(
            only_a.levels.get(&n).cloned().unwrap_or_default(),
            filtered,
            "order {n}"
        );
    }
}

#[test]
fn generated_quartic_polyhedra_are_polyhedra_and_distinct() {
    let all = gen_quartic_polyhedra(13);
    let codes: BTreeSet<_> = all.iter().map(|g| canonical_code(g).unwrap()).collect();
    assert_eq!(codes.len(), all.len());
    for g in &all {
        let a = g.to_abstract();
        assert_eq!(a.regularity(), Some(4));
        assert!(is_three_connected(&a));
    }
}

#[test]
fn generation_is_repeatable() {
    assert_eq!(quartic_levels(12), quartic_levels(12));
    assert_eq!(cubic_levels(14), cubic_levels(14));
}
