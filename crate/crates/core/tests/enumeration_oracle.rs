mod common;

use std::collections::BTreeSet;

use common::{all_labeled, brute_canonical_bits, random_graph, shuffled};
use rand::rngs::StdRng;
use rand::SeedableRng;
use trifree_core::enumerate::{
    canonical_form, enumerate_all, enumerate_labeled_oracle, for_each_in_unit, form_of_generated,
    is_canonical, split_work, CanonicalForm, GenFilter,
};
use trifree_core::families::isomorphic_small;
use trifree_core::properties::{is_connected, is_triangle_free};

fn forms(graphs: &[trifree_core::Graph]) -> Vec<CanonicalForm> {
    graphs.iter().map(form_of_generated).collect()
}

#[test]
fn generator_matches_labeled_oracle() {
    for n in 1..=7 {
        let generated = forms(&enumerate_all(n, GenFilter::default()).unwrap());
        let oracle = enumerate_labeled_oracle(n).unwrap();
        assert_eq!(generated.len(), oracle.len(), "class count at n={n}");
        assert_eq!(generated, oracle, "canonical forms at n={n}");
    }
}

#[test]
fn canonical_form_matches_brute_force() {
    for n in 1..=5 {
        for g in all_labeled(n) {
            let f = canonical_form(&g).unwrap();
            assert_eq!(f.bits(), brute_canonical_bits(&g), "{g:?}");
            assert_eq!(is_canonical(&g).unwrap(), f.bits() == g.column_bits().unwrap());
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let n = 6 + (rand::Rng::gen_range(&mut rng, 0..3));
        let g = random_graph(&mut rng, n, 0.45);
        let f = canonical_form(&g).unwrap();
        assert_eq!(f.bits(), brute_canonical_bits(&g), "{g:?}");
        assert_eq!(canonical_form(&shuffled(&g, &mut rng)).unwrap(), f);
    }
}

#[test]
fn filters_are_sound() {
    for n in 1..=6 {
        let all = enumerate_all(n, GenFilter::default()).unwrap();
        let tf = enumerate_all(n, GenFilter::triangle_free()).unwrap();
        let expected: Vec<_> = all.iter().copied().filter(is_triangle_free).collect();
        assert_eq!(tf, expected, "triangle-free at n={n}");

        for t in 0..n {
            let got = enumerate_all(n, GenFilter::default().with_min_degree(t)).unwrap();
            let expected: Vec<_> = all.iter().copied().filter(|g| g.min_degree() >= t).collect();
            assert_eq!(got, expected, "min degree {t} at n={n}");
            let got = enumerate_all(n, GenFilter::triangle_free().with_min_degree(t)).unwrap();
            let expected: Vec<_> = all
                .iter()
                .copied()
                .filter(|g| g.min_degree() >= t && is_triangle_free(g))
                .collect();
            assert_eq!(got, expected, "triangle-free, min degree {t} at n={n}");
        }

        let conn = enumerate_all(n, GenFilter::default().connected()).unwrap();
        let expected: Vec<_> = all.iter().copied().filter(is_connected).collect();
        assert_eq!(conn, expected, "connected at n={n}");
    }
    // min-degree prune at n = 7 against the unfiltered list
    let all = enumerate_all(7, GenFilter::default()).unwrap();
    for t in [2, 3, 4] {
        let got = enumerate_all(7, GenFilter::default().with_min_degree(t)).unwrap();
        assert_eq!(got.len(), all.iter().filter(|g| g.min_degree() >= t).count());
    }
}

#[test]
fn classes_are_pairwise_non_isomorphic() {
    for n in 1..=6 {
        let graphs = enumerate_all(n, GenFilter::default()).unwrap();
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(!isomorphic_small(a, b).unwrap(), "{a:?} ~ {b:?}");
            }
        }
    }
}

#[test]
fn every_labeled_graph_is_represented() {
    for n in 1..=6 {
        let classes: BTreeSet<_> = forms(&enumerate_all(n, GenFilter::default()).unwrap()).into_iter().collect();
        for g in all_labeled(n) {
            assert!(classes.contains(&canonical_form(&g).unwrap()));
        }
    }
}

#[test]
fn split_work_partitions_output() {
    let filters = [
        GenFilter::default(),
        GenFilter::triangle_free(),
        GenFilter::default().with_min_degree(2),
        GenFilter::triangle_free().with_min_degree(2).connected(),
    ];
    for filter in filters {
        let whole = forms(&enumerate_all(6, filter).unwrap());
        for depth in 1..=6 {
            let mut joined = Vec::new();
            for unit in split_work(6, filter, depth).unwrap() {
                assert_eq!(unit.prefix.order(), depth);
                for_each_in_unit(6, filter, &unit, |g| joined.push(form_of_generated(g))).unwrap();
            }
            let total = joined.len();
            joined.sort();
            joined.dedup();
            assert_eq!(joined.len(), total, "duplicate across units, depth {depth}");
            assert_eq!(joined, whole, "depth {depth}, {filter:?}");
        }
    }
}
