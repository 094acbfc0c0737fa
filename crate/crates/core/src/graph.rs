//! Simple undirected graphs on at most 62 vertices, one `u64` neighbour
//! bitset per vertex.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{low_mask, ones};
use crate::properties;
use crate::Error;

/// Largest supported vertex count; matches the single-byte graph6 size field.
pub const MAX_VERTICES: usize = 62;

/// Largest order whose upper triangle fits in a `u128`.
pub const COLUMN_BITS_MAX: usize = 16;

/// An immutable simple graph. Vertices are `0..n`.
///
/// Adjacency is symmetric, loop-free, and never has bits at or above `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Repeated edges
    /// collapse; `(u, v)` and `(v, u)` are the same edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, Error> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from neighbour bitsets, checking every invariant.
    pub fn from_adjacency(rows: &[u64]) -> Result<Graph, Error> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let vertex = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            for u in ones(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Parameter("adjacency rows are not symmetric"));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    /// Builds a graph on `n <= 16` vertices from its upper-triangle bitstring
    /// in column order. The first pair, `x(0,1)`, is the most significant of
    /// the `n(n-1)/2` low bits of `bits`.
    pub fn from_column_bits(n: usize, bits: u128) -> Result<Graph, Error> {
        if n > COLUMN_BITS_MAX {
            return Err(Error::Capacity { what: "column bitstring", n, cap: COLUMN_BITS_MAX });
        }
        let mut g = Graph::empty(n)?;
        let len = n * (n - 1) / 2;
        let mut t = len;
        for j in 1..n {
            for i in 0..j {
                t -= 1;
                if bits >> t & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_column_bits`].
    pub fn column_bits(&self) -> Result<u128, Error> {
        let n = self.order();
        if n > COLUMN_BITS_MAX {
            return Err(Error::Capacity { what: "column bitstring", n, cap: COLUMN_BITS_MAX });
        }
        let mut bits = 0u128;
        for j in 1..n {
            for i in 0..j {
                bits = bits << 1 | (self.adj[i] >> j & 1) as u128;
            }
        }
        Ok(bits)
    }

    /// Caller guarantees symmetry, no loops and `rows.len()` in range.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Graph {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_VERTICES);
        let mut adj = [0; MAX_VERTICES];
        adj[..rows.len()].copy_from_slice(rows);
        let g = Graph {
            n: rows.len() as u8,
            adj,
        };
        debug_assert!(g.invariants_hold());
        g
    }

    /// Returns this graph with one extra vertex `n` adjacent to `nbrs`.
    pub(crate) fn with_vertex(&self, nbrs: u64) -> Graph {
        let n = self.order();
        debug_assert!(n < MAX_VERTICES && nbrs & !low_mask(n) == 0);
        let mut g = *self;
        g.adj[n] = nbrs;
        for u in ones(nbrs) {
            g.adj[u] |= 1 << n;
        }
        g.n += 1;
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbour bitsets, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows()[v]
    }

    pub fn neighbor_list(&self, v: usize) -> impl Iterator<Item = usize> {
        ones(self.neighbors(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// A vertex of minimum degree, the lowest-numbered one on ties.
    pub fn min_degree_vertex(&self) -> usize {
        (0..self.order()).min_by_key(|&v| self.degree(v)).unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| ones(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, Error> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Parameter("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            seen |= 1 << p;
        }
        if seen != low_mask(n) {
            return Err(Error::Parameter("relabeling is not a permutation"));
        }
        let mut rows = [0u64; MAX_VERTICES];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph::from_rows_unchecked(&rows[..n]))
    }

    /// Subgraph induced by the vertices in `keep`, renumbered in ascending order.
    pub fn induced(&self, keep: u64) -> Result<Graph, Error> {
        let keep = keep & low_mask(self.order());
        let verts: Vec<usize> = ones(keep).collect();
        if verts.is_empty() {
            return Err(Error::VertexCount(0));
        }
        let mut rows = [0u64; MAX_VERTICES];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Ok(Graph::from_rows_unchecked(&rows[..verts.len()]))
    }

    fn invariants_hold(&self) -> bool {
        let n = self.order();
        let all = low_mask(n);
        self.adj[n..].iter().all(|&r| r == 0)
            && self.rows().iter().enumerate().all(|(v, &row)| {
                row & !all == 0 && row >> v & 1 == 0 && ones(row).all(|u| self.adj[u] >> v & 1 == 1)
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Distance bound between all vertex pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

/// Scalar invariants of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: Diameter,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
}

pub fn stats(g: &Graph) -> GraphStats {
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    GraphStats {
        n: g.order(),
        m: g.edge_count(),
        min_degree,
        max_degree,
        diameter: properties::diameter(g),
        regular_degree: (min_degree == max_degree).then_some(min_degree),
    }
}
