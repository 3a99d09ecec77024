mod support;

use std::collections::BTreeSet;

use qtopo_core::{
    count_topologies, decode_family, encode_family, enumerate_topologies, family_codes,
    find_definite_questions, parent_questions, Constraints, GroundSet, QuestionType, Topology,
};

fn ground(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| format!("p{i}"))).unwrap()
}

fn all(n: usize) -> Vec<Topology> {
    enumerate_topologies(&ground(n)).unwrap().collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=4 {
        let oracle = support::brute_force_topologies(n);
        let found: Vec<u32> = family_codes(n, Constraints::default()).unwrap().collect();
        let mut sorted_oracle: Vec<Vec<u32>> = oracle
            .iter()
            .map(|&c| decode_family(c).iter().map(|s| s.bits()).collect())
            .collect();
        sorted_oracle.sort();
        let listed: Vec<Vec<u32>> = found
            .iter()
            .map(|&c| decode_family(c).iter().map(|s| s.bits()).collect())
            .collect();
        // same set, and the search emits it in ascending canonical order
        assert_eq!(listed, sorted_oracle, "n = {n}");
    }
}

#[test]
fn five_points_match_preorders() {
    let oracle: BTreeSet<u32> = support::preorder_topologies(5).into_iter().collect();
    let found: BTreeSet<u32> = family_codes(5, Constraints::default()).unwrap().collect();
    assert_eq!(oracle.len(), 6942);
    assert_eq!(found, oracle);
}

#[test]
fn preorders_agree_with_brute_force() {
    for n in 0..=3 {
        let a: BTreeSet<u32> = support::preorder_topologies(n).into_iter().collect();
        let b: BTreeSet<u32> = support::brute_force_topologies(n).into_iter().collect();
        assert_eq!(a, b);
    }
}

#[test]
fn counts_without_materializing() {
    let expected = [1, 1, 4, 29, 355, 6942];
    for (n, &c) in expected.iter().enumerate() {
        assert_eq!(count_topologies(n).unwrap(), c);
    }
}

#[test]
fn negation_is_an_involution_on_the_question_space() {
    for n in 0..=4 {
        let space = all(n);
        let codes: BTreeSet<u32> = space
            .iter()
            .map(|t| encode_family(t.family()).unwrap())
            .collect();
        for t in &space {
            let neg = t.negation_question();
            assert!(codes.contains(&encode_family(neg.family()).unwrap()));
            assert_eq!(&neg.negation_question(), t);
        }
    }
}

#[test]
fn in_space_points_are_never_irrelevant() {
    for n in 0..=4 {
        let g = ground(n);
        for t in all(n) {
            for label in g.labels() {
                assert_ne!(t.classify_question(label).kind(), QuestionType::TypeIII);
            }
        }
    }
}

#[test]
fn definite_questions_equal_filtered_enumeration() {
    for n in 1..=5 {
        let g = ground(n);
        let space = all(n);
        for label in g.labels() {
            let filtered: Vec<&Topology> = space
                .iter()
                .filter(|t| t.classify_question(label).kind() == QuestionType::TypeII)
                .collect();
            let found: Vec<Topology> = find_definite_questions(&g, label).unwrap().collect();
            assert_eq!(
                found.iter().collect::<Vec<_>>(),
                filtered,
                "n = {n}, x = {label}"
            );
            for t in &found {
                assert_eq!(
                    t.resolve_issue(label).members(),
                    &[qtopo_core::Subset::EMPTY]
                );
            }
        }
    }
}

#[test]
fn mass_spin_charge_definite_questions_for_charge() {
    let g = GroundSet::new(["m", "s", "e"]).unwrap();
    let found: Vec<Topology> = find_definite_questions(&g, "e").unwrap().collect();
    let filtered: Vec<Topology> = enumerate_topologies(&g)
        .unwrap()
        .filter(|t| t.classify_question("e").kind() == QuestionType::TypeII)
        .collect();
    assert_eq!(found, filtered);
    // every non-empty open contains e; {φ,{e},{m,e},X} is one of them
    let t = Topology::new(
        [0b000, 0b100, 0b101, 0b111]
            .into_iter()
            .map(qtopo_core::Subset::from_bits)
            .collect(),
        g,
    )
    .unwrap();
    assert!(found.contains(&t));
}

/// Subsets of the 4-point ground set, sub-ground sets taken in label order.
fn sub_grounds(big: &GroundSet) -> Vec<GroundSet> {
    (0u32..1 << big.len())
        .map(|mask| {
            let s = qtopo_core::Subset::from_bits(mask);
            big.restrict(s)
        })
        .collect()
}

#[test]
fn parents_equal_filtered_enumeration() {
    for m in 0..=4 {
        let big = ground(m);
        let candidates = all(m);
        for small in sub_grounds(&big) {
            for t in enumerate_topologies(&small).unwrap() {
                let embedded: Vec<_> = t
                    .family()
                    .iter()
                    .map(|u| small.embed(u, &big).unwrap())
                    .collect();
                let filtered: Vec<&Topology> = candidates
                    .iter()
                    .filter(|p| embedded.iter().all(|&u| p.is_open(u)))
                    .collect();
                let found: Vec<Topology> = parent_questions(&t, &big, None).unwrap().collect();
                assert_eq!(found.iter().collect::<Vec<_>>(), filtered);
                if t.is_discrete() {
                    assert!(!found.is_empty());
                }
            }
        }
    }
}

/// Self-dual questions are the σ-fields, one per partition of the points, so
/// their number is the Bell number (computed here with the Bell triangle).
#[test]
fn self_dual_questions_are_counted_by_bell_numbers() {
    let mut bell = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..5 {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        bell.push(next[0]);
        row = next;
    }
    for (n, &expected) in bell.iter().enumerate() {
        let self_dual = enumerate_topologies(&ground(n))
            .unwrap()
            .filter(Topology::machines_agree)
            .count() as u64;
        assert_eq!(self_dual, expected, "n = {n}");
    }
}
