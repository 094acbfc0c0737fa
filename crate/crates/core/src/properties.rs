//! Structural predicates: triangles, bipartiteness, distances, Hamiltonian
//! paths and degree multiplicities.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{low_mask, ones};
use crate::graph::Diameter;
use crate::{Error, Graph};

/// Three pairwise adjacent vertices with `u < v < w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl TriangleWitness {
    pub fn validate(&self, g: &Graph) -> bool {
        let TriangleWitness { u, v, w } = *self;
        u != v && v != w && u != w && g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)
    }
}

/// Returns the lexicographically least triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<TriangleWitness> {
    for u in 0..g.order() {
        let above_u = g.neighbors(u) & !low_mask(u + 1);
        for v in ones(above_u) {
            let common = g.neighbors(u) & g.neighbors(v) & !low_mask(v + 1);
            if common != 0 {
                let w = common.trailing_zeros() as usize;
                return Some(TriangleWitness { u, v, w });
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Proof of bipartiteness or of its absence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BipartitenessCertificate {
    /// Bit `v` of `side` is the colour of vertex `v`.
    TwoColoring { side: u64 },
    /// Distinct vertices of an odd cycle in order; the last is adjacent to
    /// the first.
    OddCycle(Vec<usize>),
}

impl BipartitenessCertificate {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartitenessCertificate::TwoColoring { .. })
    }

    /// Checks the certificate edge by edge against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            BipartitenessCertificate::TwoColoring { side } => {
                side & !low_mask(g.order()) == 0
                    && g.edges().all(|(u, v)| (side >> u & 1) != (side >> v & 1))
            }
            BipartitenessCertificate::OddCycle(cycle) => {
                let len = cycle.len();
                let mut seen = 0u64;
                for &v in cycle {
                    if v >= g.order() || seen >> v & 1 == 1 {
                        return false;
                    }
                    seen |= 1 << v;
                }
                len >= 3
                    && len % 2 == 1
                    && (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]))
            }
        }
    }

    /// Sizes of the two colour classes, smaller first.
    pub fn part_sizes(&self, n: usize) -> Option<(usize, usize)> {
        match self {
            BipartitenessCertificate::TwoColoring { side } => {
                let a = side.count_ones() as usize;
                Some((a.min(n - a), a.max(n - a)))
            }
            BipartitenessCertificate::OddCycle(_) => None,
        }
    }
}

/// BFS two-colouring; each component's lowest vertex gets colour 0.
pub fn is_bipartite(g: &Graph) -> BipartitenessCertificate {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut depth = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut side = 0u64;
    let mut queue = Vec::with_capacity(n);

    for root in 0..n {
        if depth[root] != UNSEEN {
            continue;
        }
        depth[root] = 0;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for y in g.neighbor_list(x) {
                if depth[y] == UNSEEN {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    side |= ((side >> x & 1) ^ 1) << y;
                    queue.push(y);
                } else if (side >> x & 1) == (side >> y & 1) {
                    return BipartitenessCertificate::OddCycle(tree_cycle(x, y, &depth, &parent));
                }
            }
        }
    }
    BipartitenessCertificate::TwoColoring { side }
}

/// Closes the tree paths from `x` and `y` up to their common ancestor.
fn tree_cycle(x: usize, y: usize, depth: &[usize], parent: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Hop distances from `source`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        let mut next = 0u64;
        for v in ones(frontier) {
            dist[v] = d;
            next |= g.neighbors(v);
        }
        frontier = next & !seen;
        seen |= next;
        d += 1;
    }
    dist
}

/// Largest eccentricity over BFS layers from `source`, or `None` when some
/// vertex is unreachable.
fn eccentricity(g: &Graph, source: usize) -> Option<usize> {
    let all = low_mask(g.order());
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut ecc = 0;
    loop {
        let mut next = 0u64;
        for v in ones(frontier) {
            next |= g.neighbors(v);
        }
        frontier = next & !seen;
        if frontier == 0 {
            break;
        }
        seen |= frontier;
        ecc += 1;
    }
    (seen == all).then_some(ecc)
}

pub fn diameter(g: &Graph) -> Diameter {
    let mut best = 0;
    for v in 0..g.order() {
        match eccentricity(g, v) {
            Some(e) => best = best.max(e),
            None => return Diameter::Disconnected,
        }
    }
    Diameter::Finite(best)
}

pub fn is_connected(g: &Graph) -> bool {
    eccentricity(g, 0).is_some()
}

/// Default vertex cap for [`has_hamiltonian_path`].
pub const HAM_PATH_DEFAULT_CAP: usize = 20;
/// Hard ceiling for any configured cap; the DP table has `2^n` words.
pub const HAM_PATH_MAX_CAP: usize = 26;

/// Hamiltonian path existence with the default cap.
pub fn has_hamiltonian_path(g: &Graph) -> Result<bool, Error> {
    has_hamiltonian_path_capped(g, HAM_PATH_DEFAULT_CAP)
}

/// Exact DP over (visited set, endpoint) states. `reach[S]` holds the
/// endpoints of paths that visit exactly `S`.
pub fn has_hamiltonian_path_capped(g: &Graph, cap: usize) -> Result<bool, Error> {
    let n = g.order();
    let cap = cap.min(HAM_PATH_MAX_CAP);
    if n > cap {
        return Err(Error::Capacity { what: "Hamiltonian path search", n, cap });
    }
    if n == 1 {
        return Ok(true);
    }
    let full = low_mask(n) as usize;
    let mut reach = vec![0u32; full + 1];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for set in 1..full {
        let ends = reach[set];
        if ends == 0 {
            continue;
        }
        let mut extend = 0u64;
        for v in ones(ends as u64) {
            extend |= g.neighbors(v);
        }
        for u in ones(extend & !(set as u64)) {
            if ends as u64 & g.neighbors(u) != 0 {
                reach[set | 1 << u] |= 1 << u;
            }
        }
    }
    Ok(reach[full] != 0)
}

/// True iff some degree value is shared by three or more vertices.
pub fn has_three_equal_degrees(g: &Graph) -> bool {
    let mut count = [0u8; crate::MAX_VERTICES];
    for v in 0..g.order() {
        let d = g.degree(v);
        count[d] += 1;
        if count[d] >= 3 {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete_bipartite, make_cycle, make_path};

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        make_complete_bipartite(1, leaves).unwrap()
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(find_triangle(&k3()), Some(TriangleWitness { u: 0, v: 1, w: 2 }));
        assert_eq!(find_triangle(&make_cycle(5).unwrap()), None);
        assert_eq!(find_triangle(&make_complete_bipartite(2, 3).unwrap()), None);
        // least triple wins over later ones
        let g = Graph::new(6, [(3, 4), (4, 5), (3, 5), (1, 2), (2, 5), (1, 5)]).unwrap();
        assert_eq!(find_triangle(&g), Some(TriangleWitness { u: 1, v: 2, w: 5 }));
    }

    #[test]
    fn bipartite_examples() {
        let k23 = make_complete_bipartite(2, 3).unwrap();
        let cert = is_bipartite(&k23);
        assert!(cert.validate(&k23));
        assert_eq!(cert.part_sizes(5), Some((2, 3)));

        let c5 = make_cycle(5).unwrap();
        match is_bipartite(&c5) {
            BipartitenessCertificate::OddCycle(c) => {
                assert_eq!(c.len(), 5);
                assert!(BipartitenessCertificate::OddCycle(c).validate(&c5));
            }
            other => panic!("C5 coloured: {other:?}"),
        }

        let k1 = make_path(1).unwrap();
        assert_eq!(is_bipartite(&k1), BipartitenessCertificate::TwoColoring { side: 0 });
        assert!(is_bipartite(&Graph::new(2, []).unwrap()).validate(&Graph::new(2, []).unwrap()));
    }

    #[test]
    fn odd_cycle_in_later_component() {
        let g = Graph::new(8, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 2)]).unwrap();
        assert!(is_bipartite(&g).is_bipartite());
        let g = Graph::new(8, [(0, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]).unwrap();
        let cert = is_bipartite(&g);
        assert!(!cert.is_bipartite());
        assert!(cert.validate(&g));
    }

    #[test]
    fn bad_certificates_rejected() {
        let c5 = make_cycle(5).unwrap();
        assert!(!BipartitenessCertificate::TwoColoring { side: 0b00101 }.validate(&c5));
        assert!(!BipartitenessCertificate::OddCycle(vec![0, 1, 2]).validate(&c5));
        assert!(!BipartitenessCertificate::OddCycle(vec![0, 1, 2, 3]).validate(&c5));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&make_cycle(5).unwrap()), Diameter::Finite(2));
        assert_eq!(diameter(&make_cycle(6).unwrap()), Diameter::Finite(3));
        assert_eq!(diameter(&Graph::new(2, []).unwrap()), Diameter::Disconnected);
        assert_eq!(diameter(&make_path(1).unwrap()), Diameter::Finite(0));
        for n in 3..=20 {
            assert_eq!(diameter(&make_cycle(n).unwrap()), Diameter::Finite(n / 2), "C{n}");
        }
        let d = bfs_distances(&make_path(4).unwrap(), 0);
        assert_eq!(d, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hamiltonian_path_examples() {
        assert_eq!(has_hamiltonian_path(&make_cycle(5).unwrap()), Ok(true));
        assert_eq!(has_hamiltonian_path(&make_complete_bipartite(2, 3).unwrap()), Ok(true));
        assert_eq!(has_hamiltonian_path(&star(3)), Ok(false));
        assert_eq!(has_hamiltonian_path(&make_complete_bipartite(2, 4).unwrap()), Ok(false));
        assert_eq!(has_hamiltonian_path(&make_path(1).unwrap()), Ok(true));
        assert_eq!(has_hamiltonian_path(&make_path(2).unwrap()), Ok(true));
        assert_eq!(has_hamiltonian_path(&Graph::new(2, []).unwrap()), Ok(false));
    }

    #[test]
    fn hamiltonian_path_capacity() {
        let big = make_path(21).unwrap();
        assert_eq!(
            has_hamiltonian_path(&big),
            Err(Error::Capacity { what: "Hamiltonian path search", n: 21, cap: 20 })
        );
        assert_eq!(has_hamiltonian_path_capped(&big, 22), Ok(true));
        assert!(has_hamiltonian_path_capped(&make_path(30).unwrap(), 40).is_err());
        assert_eq!(has_hamiltonian_path(&make_cycle(20).unwrap()), Ok(true));
    }

    #[test]
    fn degree_multiplicity_examples() {
        assert!(has_three_equal_degrees(&make_cycle(5).unwrap()));
        assert!(!has_three_equal_degrees(&make_path(3).unwrap()));
        assert!(has_three_equal_degrees(&make_complete_bipartite(2, 3).unwrap()));
        assert!(!has_three_equal_degrees(&make_complete_bipartite(2, 2).unwrap().induced(0b111).unwrap()));
    }
}
