mod common;

use common::{all_labeled, random_graph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use trifree_core::graph6::{decode, encode};
use trifree_core::Graph;

#[test]
fn round_trip_every_graph_up_to_seven_vertices() {
    for n in 1..=7 {
        for g in all_labeled(n) {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}

#[test]
fn round_trip_random_graphs() {
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=30);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let line = encode(&g);
        assert!(line.bytes().all(|b| (63..=126).contains(&b)));
        assert_eq!(decode(&line).unwrap(), g);
        assert_eq!(decode(&format!(">>graph6<<{line}\n")).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn decode_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        if let Ok(s) = String::from_utf8(bytes) {
            if let Ok(g) = decode(&s) {
                prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn encoding_is_injective(n in 2usize..12, a in any::<u64>(), b in any::<u64>()) {
        let len = n * (n - 1) / 2;
        let mask = (1u128 << len) - 1;
        let (ga, gb) = (
            Graph::from_column_bits(n, a as u128 & mask).unwrap(),
            Graph::from_column_bits(n, b as u128 & mask).unwrap(),
        );
        prop_assert_eq!(encode(&ga) == encode(&gb), ga == gb);
    }
}
