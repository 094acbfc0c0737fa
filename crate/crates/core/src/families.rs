//! Named graph families: constructors, exact recognizers, and a small
//! isomorphism oracle.
//!
//! Recognition is structural (degrees, bipartition, edge count) rather than
//! a general isomorphism test, so it is exact at any order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::ones;
use crate::properties::{is_bipartite, is_connected};
use crate::{Error, Graph, MAX_VERTICES};

/// A recognised family member. `CompleteBipartite` stores `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    Cycle(usize),
    CompleteBipartite(usize, usize),
    C5Blowup(usize),
    Path(usize),
    Unrecognized,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Cycle(n) => write!(f, "Cycle({n})"),
            FamilyTag::CompleteBipartite(a, b) => write!(f, "CompleteBipartite({a},{b})"),
            FamilyTag::C5Blowup(k) => write!(f, "C5Blowup({k})"),
            FamilyTag::Path(n) => write!(f, "Path({n})"),
            FamilyTag::Unrecognized => f.write_str("Unrecognized"),
        }
    }
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn make_cycle(n: usize) -> Result<Graph, Error> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::Parameter("cycle length must be in 3..=62"));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Graph, Error> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::Parameter("path length must be in 1..=62"));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// `K_{a,b}` with part A = `0..a` and part B = `a..a+b`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph, Error> {
    if a == 0 || b == 0 || a + b > MAX_VERTICES {
        return Err(Error::Parameter("complete bipartite parts must be >= 1 with a + b <= 62"));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Replaces each vertex `i` of C5 by the independent set `i*k .. (i+1)*k`;
/// blocks `i` and `i+1 mod 5` are completely joined.
pub fn make_c5_blowup(k: usize) -> Result<Graph, Error> {
    if k == 0 || 5 * k > MAX_VERTICES {
        return Err(Error::Parameter("blowup multiplicity must satisfy 1 <= k and 5k <= 62"));
    }
    let edges = (0..5).flat_map(move |i| {
        let j = (i + 1) % 5;
        (0..k).flat_map(move |x| (0..k).map(move |y| (i * k + x, j * k + y)))
    });
    Graph::new(5 * k, edges)
}

/// Length of the cycle when `g` is connected and 2-regular on `n >= 3` vertices.
pub fn recognize_cycle(g: &Graph) -> Option<usize> {
    let n = g.order();
    let two_regular = (0..n).all(|v| g.degree(v) == 2);
    (n >= 3 && two_regular && is_connected(g)).then_some(n)
}

/// Part sizes `(a, b)`, `a <= b`, when `g` is a connected complete bipartite graph.
pub fn recognize_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 2 || !is_connected(g) {
        return None;
    }
    let (a, b) = is_bipartite(g).part_sizes(n)?;
    (g.edge_count() == a * b).then_some((a, b))
}

/// Length of the path when `g` is a path on `n >= 1` vertices.
pub fn recognize_path(g: &Graph) -> Option<usize> {
    let n = g.order();
    (g.edge_count() == n - 1 && g.max_degree() <= 2 && is_connected(g)).then_some(n)
}

/// Multiplicity `k` when `g` is isomorphic to `make_c5_blowup(k)`.
pub fn recognize_c5_blowup(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n % 5 != 0 {
        return None;
    }
    let k = n / 5;
    if (0..n).any(|v| g.degree(v) != 2 * k) {
        return None;
    }
    // Twin classes: vertices with identical neighbourhoods.
    let mut classes: Vec<(u64, u64)> = Vec::new(); // (neighbourhood, members)
    for v in 0..n {
        match classes.iter_mut().find(|(nb, _)| *nb == g.neighbors(v)) {
            Some((_, members)) => *members |= 1 << v,
            None => classes.push((g.neighbors(v), 1 << v)),
        }
    }
    if classes.len() != 5 || classes.iter().any(|(_, m)| m.count_ones() as usize != k) {
        return None;
    }
    let mut quotient = Vec::new();
    for (i, &(nb, _)) in classes.iter().enumerate() {
        let touching: Vec<usize> = (0..5).filter(|&j| classes[j].1 & nb != 0).collect();
        let covered = touching.iter().fold(0u64, |acc, &j| acc | classes[j].1);
        if touching.len() != 2 || covered != nb {
            return None;
        }
        quotient.extend(touching.into_iter().map(|j| (i, j)));
    }
    let quotient = Graph::new(5, quotient).ok()?;
    (recognize_cycle(&quotient) == Some(5)).then_some(k)
}

/// Most specific family tag. Cycles win over complete bipartite graphs
/// (`C4 = K_{2,2}`) and both win over paths (`P3 = K_{1,2}`).
pub fn identify(g: &Graph) -> FamilyTag {
    if let Some(len) = recognize_cycle(g) {
        return FamilyTag::Cycle(len);
    }
    if let Some(k) = recognize_c5_blowup(g) {
        return FamilyTag::C5Blowup(k);
    }
    if let Some((a, b)) = recognize_complete_bipartite(g) {
        return FamilyTag::CompleteBipartite(a, b);
    }
    if let Some(len) = recognize_path(g) {
        return FamilyTag::Path(len);
    }
    FamilyTag::Unrecognized
}

/// Largest order accepted by [`isomorphic_small`].
pub const ISOMORPHISM_CAP: usize = 10;

/// Exact isomorphism test by backtracking over degree-preserving maps.
pub fn isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool, Error> {
    for g in [g1, g2] {
        if g.order() > ISOMORPHISM_CAP {
            return Err(Error::Capacity {
                what: "isomorphism oracle",
                n: g.order(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    let n = g1.order();
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let (mut d1, mut d2) = (g1.degrees(), g2.degrees());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; n];
    Ok(extend_map(g1, g2, 0, 0, &mut image))
}

fn extend_map(g1: &Graph, g2: &Graph, v: usize, used: u64, image: &mut [usize]) -> bool {
    let n = g1.order();
    if v == n {
        return true;
    }
    for w in ones(!used & crate::bits::low_mask(n)) {
        if g1.degree(v) != g2.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(image[u], w));
        if consistent {
            image[v] = w;
            if extend_map(g1, g2, v + 1, used | 1 << w, image) {
                return true;
            }
        }
    }
    false
}
