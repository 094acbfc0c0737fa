mod common;

use common::{all_labeled, random_graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use trifree_core::enumerate::{enumerate_all, GenFilter};
use trifree_core::matching::{
    find_augmenting_path, has_perfect_matching, maximum_matching, maximum_matching_oracle,
};
use trifree_core::Graph;

fn audit(g: &Graph) {
    let m = maximum_matching(g);
    assert!(m.validate(g), "{g:?}: invalid {m:?}");
    assert_eq!(m.size(), maximum_matching_oracle(g).unwrap(), "{g:?}");
    assert_eq!(maximum_matching(g), m, "non-deterministic on {g:?}");
    assert_eq!(find_augmenting_path(g, &m).unwrap(), None, "{g:?}");
    if g.order() % 2 == 1 {
        assert!(!has_perfect_matching(g));
    }
}

#[test]
fn blossom_agrees_with_subset_dp_on_all_seven_vertex_graphs() {
    let graphs = enumerate_all(7, GenFilter::default()).unwrap();
    assert_eq!(graphs.len(), 1044);
    graphs.iter().for_each(audit);
}

#[test]
fn no_augmenting_path_remains() {
    for n in 1..=6 {
        for g in all_labeled(n) {
            let m = maximum_matching(&g);
            assert_eq!(find_augmenting_path(&g, &m).unwrap(), None, "{g:?}");
        }
    }
    for g in enumerate_all(7, GenFilter::default()).unwrap() {
        let m = maximum_matching(&g);
        assert_eq!(find_augmenting_path(&g, &m).unwrap(), None, "{g:?}");
    }
}

#[test]
fn augmenting_search_detects_non_maximum_matchings() {
    // Dropping any edge from a maximum matching must expose an augmenting path.
    for g in enumerate_all(6, GenFilter::default()).unwrap() {
        let m = maximum_matching(&g);
        for skip in 0..m.size() {
            let smaller = trifree_core::matching::Matching::from_pairs(
                m.pairs().iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &e)| e),
            );
            assert!(find_augmenting_path(&g, &smaller).unwrap().is_some());
        }
    }
}

#[test]
fn blossom_agrees_with_subset_dp_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0xb105_50f1);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.05..0.6);
        audit(&random_graph(&mut rng, n, p));
    }
}
