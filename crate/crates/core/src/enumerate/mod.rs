//! Orderly generation of non-isomorphic graphs.
//!
//! Graphs are grown one vertex at a time and every intermediate graph is
//! kept in canonical labelling. A child (parent plus a new last vertex) is
//! accepted iff its own labelling is canonical. Deleting the last vertex
//! of a canonical graph leaves a canonical graph, so each class on `k + 1`
//! vertices is produced exactly once, from the parent it was grown from.
//!
//! Hereditary filters prune prefixes early: triangle-freeness directly, and
//! a minimum-degree target `t` by requiring `deg(v) + (n - k) >= t` for
//! every vertex of a `k`-vertex prefix.

mod canon;
mod oracle;

use alloc::vec::Vec;

pub use canon::{canonical_form, is_canonical, CanonicalForm, CANON_CAP};
pub use oracle::{enumerate_labeled_oracle, LABELED_ORACLE_CAP};

use crate::bits::{low_mask, ones};
use crate::properties::is_connected;
use crate::{Error, Graph};

/// Largest order accepted by the generator.
pub const ENUMERATION_CAP: usize = 12;

/// Restrictions applied during generation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenFilter {
    pub triangle_free: bool,
    pub min_degree: Option<usize>,
    pub connected_only: bool,
}

impl GenFilter {
    pub fn triangle_free() -> Self {
        GenFilter { triangle_free: true, ..GenFilter::default() }
    }

    pub fn with_min_degree(self, t: usize) -> Self {
        GenFilter { min_degree: Some(t), ..self }
    }

    pub fn connected(self) -> Self {
        GenFilter { connected_only: true, ..self }
    }
}

/// A canonical prefix graph on `depth` vertices; its subtree is one
/// independent slice of the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WorkUnit {
    pub prefix: Graph,
    pub depth: usize,
}

/// Generation parameters for one target order.
#[derive(Clone, Copy, Debug)]
struct Plan {
    n: usize,
    filter: GenFilter,
}

impl Plan {
    fn new(n: usize, filter: GenFilter) -> Result<Plan, Error> {
        if n == 0 {
            return Err(Error::VertexCount(0));
        }
        if n > ENUMERATION_CAP {
            return Err(Error::Capacity { what: "graph enumeration", n, cap: ENUMERATION_CAP });
        }
        if filter.min_degree.is_some_and(|t| t > n - 1) {
            return Err(Error::Parameter("minimum degree target exceeds n - 1"));
        }
        Ok(Plan { n, filter })
    }

    fn target(&self) -> usize {
        self.filter.min_degree.unwrap_or(0)
    }

    fn root(&self) -> Option<Graph> {
        let g = Graph::empty(1).expect("one vertex is in range");
        (self.n > self.target()).then_some(g)
    }

    /// Visits every accepted child of `parent` in ascending order of the
    /// new vertex's neighbourhood bitset.
    fn children(&self, parent: &Graph, mut visit: impl FnMut(Graph)) {
        let k = parent.order();
        let rows = parent.rows();
        let slack = self.n - k - 1; // vertices still to come after the child
        let t = self.target();
        // Vertices that must gain their edge from the new vertex.
        let forced = ones(low_mask(k))
            .filter(|&v| parent.degree(v) + slack < t)
            .fold(0u64, |acc, v| acc | 1 << v);
        let free = low_mask(k) & !forced;
        let mut sub = 0u64;
        loop {
            let nbrs = forced | sub;
            if self.admissible(rows, nbrs, slack, t) {
                let child = parent.with_vertex(nbrs);
                if canon::is_canonical_rows(child.rows()) {
                    visit(child);
                }
            }
            // next subset of `free` in increasing order
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
    }

    fn admissible(&self, rows: &[u64], nbrs: u64, slack: usize, t: usize) -> bool {
        if nbrs.count_ones() as usize + slack < t {
            return false;
        }
        if self.filter.triangle_free && ones(nbrs).any(|v| rows[v] & nbrs != 0) {
            return false;
        }
        // forced covers the min-degree prune for old vertices
        true
    }

    fn accept_leaf(&self, g: &Graph) -> bool {
        !self.filter.connected_only || is_connected(g)
    }

    fn walk(&self, g: &Graph, visit: &mut dyn FnMut(&Graph)) {
        if g.order() == self.n {
            if self.accept_leaf(g) {
                visit(g);
            }
            return;
        }
        self.children(g, |child| self.walk(&child, visit));
    }

    fn prefixes(&self, g: &Graph, depth: usize, out: &mut Vec<WorkUnit>) {
        if g.order() == depth {
            out.push(WorkUnit { prefix: *g, depth });
            return;
        }
        self.children(g, |child| self.prefixes(&child, depth, out));
    }
}

/// Calls `visit` once per isomorphism class on `n` vertices passing
/// `filter`, in generation order. Every graph passed is canonically labelled.
pub fn for_each_graph(n: usize, filter: GenFilter, mut visit: impl FnMut(&Graph)) -> Result<(), Error> {
    let plan = Plan::new(n, filter)?;
    if let Some(root) = plan.root() {
        plan.walk(&root, &mut visit);
    }
    Ok(())
}

/// All classes on `n` vertices passing `filter`, sorted by canonical form.
pub fn enumerate_all(n: usize, filter: GenFilter) -> Result<Vec<Graph>, Error> {
    let mut out = Vec::new();
    for_each_graph(n, filter, |g| out.push(*g))?;
    sort_canonical(&mut out);
    Ok(out)
}

/// Sorts canonically labelled graphs by ascending canonical bitstring.
pub fn sort_canonical(graphs: &mut [Graph]) {
    graphs.sort_unstable_by_key(CanonicalForm::of_canonical);
}

/// Canonical form of a graph produced by the generator, without searching.
pub fn form_of_generated(g: &Graph) -> CanonicalForm {
    debug_assert!(canon::is_canonical_rows(g.rows()));
    CanonicalForm::of_canonical(g)
}

/// Canonical prefixes on `depth` vertices whose subtrees partition the
/// enumeration of order `n`. Units are ordered by prefix canonical form.
pub fn split_work(n: usize, filter: GenFilter, depth: usize) -> Result<Vec<WorkUnit>, Error> {
    let plan = Plan::new(n, filter)?;
    if depth == 0 || depth > n {
        return Err(Error::Parameter("split depth must be in 1..=n"));
    }
    let mut units = Vec::new();
    if let Some(root) = plan.root() {
        plan.prefixes(&root, depth, &mut units);
    }
    units.sort_unstable_by_key(|u| CanonicalForm::of_canonical(&u.prefix));
    Ok(units)
}

/// Runs the enumeration below one work unit.
pub fn for_each_in_unit(
    n: usize,
    filter: GenFilter,
    unit: &WorkUnit,
    mut visit: impl FnMut(&Graph),
) -> Result<(), Error> {
    let plan = Plan::new(n, filter)?;
    if unit.depth != unit.prefix.order() || unit.depth > n {
        return Err(Error::Parameter("work unit does not match the target order"));
    }
    plan.walk(&unit.prefix, &mut visit);
    Ok(())
}
