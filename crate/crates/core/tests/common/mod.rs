#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use trifree_core::Graph;

/// Every labelled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let len = n * (n - 1) / 2;
    (0..1u128 << len).map(move |bits| Graph::from_column_bits(n, bits).unwrap())
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn shuffled<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Minimum column bitstring over all relabelings, by brute force.
pub fn brute_canonical_bits(g: &Graph) -> u128 {
    let mut best = u128::MAX;
    for_each_permutation(g.order(), |p| {
        best = best.min(g.relabel(p).unwrap().column_bits().unwrap());
    });
    best
}
