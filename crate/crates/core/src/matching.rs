//! Maximum matching in general graphs.
//!
//! [`maximum_matching`] is Edmonds' blossom algorithm. Two independent
//! checks back it up: an exact DP over vertex subsets
//! ([`maximum_matching_oracle`]) and an exhaustive search for augmenting
//! paths ([`find_augmenting_path`]).

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{low_mask, ones};
use crate::{Error, Graph};

/// A set of pairwise disjoint edges, stored as `(u, v)` with `u < v` in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Matching {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Matching { pairs }
    }

    /// Builds a matching from arbitrary pairs, normalising their order.
    /// Validity against a graph is checked separately by [`Matching::validate`].
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Matching {
        let mut pairs: Vec<_> = pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Bitset of matched vertices.
    pub fn covered(&self) -> u64 {
        self.pairs.iter().fold(0, |acc, &(u, v)| acc | 1 << u | 1 << v)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut used = 0u64;
        for &(u, v) in &self.pairs {
            if !g.has_edge(u, v) || used >> u & 1 == 1 || used >> v & 1 == 1 {
                return false;
            }
            used |= 1 << u | 1 << v;
        }
        true
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.size() == g.order()
    }
}

const NONE: usize = usize::MAX;

/// Search state for one blossom-algorithm phase.
struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Grows an alternating tree from `root`; returns the free endpoint of
    /// an augmenting path, if one exists.
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in ones(self.g.neighbors(v)) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract it onto its base
                    let stem = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, stem, to);
                    self.mark_path(to, stem, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum matching by Edmonds' blossom algorithm. Free vertices are
/// tried in ascending order and neighbours scanned in bitset order, so the
/// result is a deterministic function of the labelled graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut state = Blossom::new(g);
    for root in 0..g.order() {
        if state.mate[root] == NONE && g.neighbors(root) != 0 {
            if let Some(end) = state.search(root) {
                state.augment(end);
            }
        }
    }
    Matching::from_mates(&state.mate)
}

/// Parity short-circuit for odd orders, blossom otherwise.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && maximum_matching(g).is_perfect(g)
}

/// Largest order accepted by [`maximum_matching_oracle`].
pub const ORACLE_CAP: usize = 16;

/// Maximum matching size by DP over vertex subsets: the lowest vertex of a
/// subset is either left unmatched or matched to one of its neighbours.
pub fn maximum_matching_oracle(g: &Graph) -> Result<usize, Error> {
    let n = g.order();
    if n > ORACLE_CAP {
        return Err(Error::Capacity { what: "matching oracle", n, cap: ORACLE_CAP });
    }
    let full = low_mask(n) as usize;
    let mut best = vec![0u8; full + 1];
    for set in 1..=full {
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut b = best[rest];
        for u in ones(g.neighbors(v) & rest as u64) {
            b = b.max(1 + best[rest & !(1 << u)]);
        }
        best[set] = b;
    }
    Ok(best[full] as usize)
}

/// Largest order accepted by [`find_augmenting_path`].
pub const AUGMENTING_SEARCH_CAP: usize = 16;

/// Exhaustive search over simple alternating paths between two free
/// vertices. Returns the first augmenting path found, as a vertex sequence.
/// Each matched pair is used at most once per path, so the search is
/// bounded by about `k! 2^k` for `k` matched pairs.
pub fn find_augmenting_path(g: &Graph, m: &Matching) -> Result<Option<Vec<usize>>, Error> {
    let n = g.order();
    if n > AUGMENTING_SEARCH_CAP {
        return Err(Error::Capacity {
            what: "augmenting path search",
            n,
            cap: AUGMENTING_SEARCH_CAP,
        });
    }
    let mut mate = vec![NONE; n];
    for &(u, v) in m.pairs() {
        mate[u] = v;
        mate[v] = u;
    }
    let mut path = Vec::with_capacity(n);
    for start in (0..n).filter(|&v| mate[v] == NONE) {
        path.clear();
        path.push(start);
        if alternate(g, &mate, 1 << start, &mut path) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Extends `path` (ending at an even position) by a non-matching edge, then
/// by the matching edge out of the reached vertex.
fn alternate(g: &Graph, mate: &[usize], visited: u64, path: &mut Vec<usize>) -> bool {
    let x = *path.last().expect("path starts non-empty");
    for y in ones(g.neighbors(x) & !visited) {
        if mate[x] == y {
            continue;
        }
        path.push(y);
        if mate[y] == NONE {
            return true;
        }
        let z = mate[y];
        if visited >> z & 1 == 0 {
            path.push(z);
            if alternate(g, mate, visited | 1 << y | 1 << z, path) {
                return true;
            }
            path.pop();
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete_bipartite, make_cycle, make_path};

    #[test]
    fn blossom_examples() {
        let c5 = make_cycle(5).unwrap();
        let m = maximum_matching(&c5);
        assert_eq!(m.size(), 2);
        assert!(m.validate(&c5));
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert_eq!(maximum_matching(&k33).size(), 3);
        assert_eq!(maximum_matching(&Graph::empty(4).unwrap()).size(), 0);
    }

    #[test]
    fn perfect_matching_examples() {
        for n in [3, 5, 7, 9] {
            assert!(!has_perfect_matching(&make_cycle(n).unwrap()));
        }
        assert!(!has_perfect_matching(&make_complete_bipartite(4, 5).unwrap()));
        assert!(has_perfect_matching(&make_cycle(6).unwrap()));
        assert!(!has_perfect_matching(&make_complete_bipartite(1, 3).unwrap()));
        assert!(has_perfect_matching(&make_path(2).unwrap()));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(maximum_matching_oracle(&make_cycle(5).unwrap()), Ok(2));
        assert_eq!(maximum_matching_oracle(&make_cycle(7).unwrap()), Ok(3));
        assert_eq!(maximum_matching_oracle(&make_complete_bipartite(2, 3).unwrap()), Ok(2));
        assert!(maximum_matching_oracle(&make_path(17).unwrap()).is_err());
    }

    #[test]
    fn blossom_needs_contraction() {
        // Triangle 0-1-2 with pendant 3 on 2 and a tail 0-4-5: greedy
        // orderings that skip the odd cycle get stuck at 2.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), 3);
        // Two 5-cycles joined by an edge, plus pendants.
        let g = Graph::new(
            12,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),
                (0, 5), (2, 10), (7, 11),
            ],
        )
        .unwrap();
        assert_eq!(maximum_matching(&g).size(), 6);
        assert_eq!(maximum_matching_oracle(&g), Ok(6));
    }

    #[test]
    fn augmenting_search() {
        let p4 = make_path(4).unwrap();
        let middle = Matching::from_pairs([(1, 2)]);
        assert_eq!(find_augmenting_path(&p4, &middle), Ok(Some(vec![0, 1, 2, 3])));
        let full = Matching::from_pairs([(0, 1), (2, 3)]);
        assert_eq!(find_augmenting_path(&p4, &full), Ok(None));
        assert!(find_augmenting_path(&make_path(17).unwrap(), &full).is_err());
    }

    #[test]
    fn invalid_matchings_rejected() {
        let p4 = make_path(4).unwrap();
        assert!(!Matching::from_pairs([(0, 2)]).validate(&p4));
        assert!(!Matching::from_pairs([(0, 1), (1, 2)]).validate(&p4));
        assert!(Matching::from_pairs([(1, 0), (3, 2)]).validate(&p4));
        assert_eq!(Matching::from_pairs([(3, 2)]).mate(2), Some(3));
        assert_eq!(Matching::from_pairs([(3, 2)]).covered(), 0b1100);
    }
}
