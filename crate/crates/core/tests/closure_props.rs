mod support;

use proptest::prelude::*;
use qtopo_core::{
    check_topology, encode_family, enumerate_topologies, generated_topology, is_topology,
    GroundSet, Subset, SubsetFamily,
};

fn ground(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| format!("p{i}"))).unwrap()
}

fn family_on(n: usize) -> impl Strategy<Value = SubsetFamily> {
    let top = 1u32 << n;
    proptest::collection::vec(0..top, 0..12)
        .prop_map(|v| v.into_iter().map(Subset::from_bits).collect())
}

fn sized_family() -> impl Strategy<Value = (usize, SubsetFamily)> {
    (0usize..=4).prop_flat_map(|n| (Just(n), family_on(n)))
}

proptest! {
    #[test]
    fn families_stay_canonical(bits in proptest::collection::vec(0u32..256, 0..40)) {
        let f: SubsetFamily = bits.iter().copied().map(Subset::from_bits).collect();
        prop_assert!(f.members().windows(2).all(|w| w[0] < w[1]));
        let again: SubsetFamily = f.iter().collect();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn checker_agrees_with_brute_force((n, f) in sized_family()) {
        let code = encode_family(&f).unwrap() as u64;
        prop_assert_eq!(is_topology(&f, &ground(n)), support::brute_is_topology(code, n));
    }

    #[test]
    fn generated_topology_is_the_least_containing_one((n, f) in sized_family()) {
        let g = ground(n);
        let t = generated_topology(&f, &g);
        prop_assert!(f.is_subfamily_of(t.family()));
        prop_assert_eq!(check_topology(t.family(), &g), Ok(()));
        for other in enumerate_topologies(&g).unwrap() {
            if f.is_subfamily_of(other.family()) {
                prop_assert!(t.family().is_subfamily_of(other.family()));
            }
        }
    }

    #[test]
    fn complement_is_an_involution(n in 0usize..=16, bits in any::<u32>()) {
        let s = Subset::from_bits(bits).intersection(Subset::full(n));
        let g = ground(n);
        prop_assert_eq!(g.complement(g.complement(s)), s);
        prop_assert!(g.complement(s).intersection(s).is_empty());
    }
}

#[test]
fn checker_matches_brute_force_exhaustively_on_three_points() {
    let g = ground(3);
    for code in 0u64..256 {
        let f: SubsetFamily = (0..8u32)
            .filter(|s| code >> s & 1 == 1)
            .map(Subset::from_bits)
            .collect();
        assert_eq!(is_topology(&f, &g), support::brute_is_topology(code, 3));
    }
}

#[test]
fn closure_is_idempotent_on_topologies() {
    for n in 0..=4 {
        let g = ground(n);
        for t in enumerate_topologies(&g).unwrap() {
            assert_eq!(generated_topology(t.family(), &g), t);
        }
    }
}
