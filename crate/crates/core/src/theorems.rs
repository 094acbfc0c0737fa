//! Executable checkers for the triangle-free graph theorems, per-graph
//! checks of each step in the proof of the main classification, and scan
//! drivers that run a checker over an exhaustive enumeration.
//!
//! All bounds use integer arithmetic only: `m <= floor(n^2/4)` is `4m <= n^2`,
//! `delta > 2n/5` is `5 delta > 2n`, and `ceil(x/y)` is `(x + y - 1) / y`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::enumerate::{for_each_graph, for_each_in_unit, GenFilter, WorkUnit};
use crate::families::{identify, recognize_complete_bipartite, recognize_cycle, FamilyTag};
use crate::graph6;
use crate::matching::{maximum_matching, Matching};
use crate::properties::{
    diameter, find_triangle, has_hamiltonian_path, has_three_equal_degrees, is_bipartite,
    is_connected, TriangleWitness,
};
use crate::{Error, Graph};

/// `ceil(x / y)` for `y > 0`.
#[inline]
pub fn ceil_div(x: usize, y: usize) -> usize {
    x.div_ceil(y)
}

/// Smallest integer `d` with `2d >= n - 1`.
#[inline]
pub fn half_floor_degree(n: usize) -> usize {
    ceil_div(n.saturating_sub(1), 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `m <= floor(n^2/4)` for triangle-free graphs, with the balanced
    /// complete bipartite graph as the unique extremal graph.
    Mantel,
    /// Triangle-free with `delta > 2n/5` implies bipartite.
    Aes,
    /// Triangle-free with no degree shared by three vertices implies bipartite.
    Efs,
    /// The diameter bound `ceil((n - delta - 1) / (2 delta))`, exactly as printed.
    Eppt,
    /// `2 delta >= n - 1` implies a Hamiltonian path.
    Ore,
    /// The main classification: C5 or `K_{(n-1)/2,(n+1)/2}`.
    Main,
    /// The individual steps of the main classification's proof.
    ProofSteps,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Mantel,
        TheoremId::Aes,
        TheoremId::Efs,
        TheoremId::Eppt,
        TheoremId::Ore,
        TheoremId::Main,
        TheoremId::ProofSteps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Mantel => "mantel",
            TheoremId::Aes => "aes",
            TheoremId::Efs => "efs",
            TheoremId::Eppt => "eppt",
            TheoremId::Ore => "ore",
            TheoremId::Main => "main",
            TheoremId::ProofSteps => "proof-steps",
        }
    }

    /// Generation filter implied by this theorem's hypotheses at order `n`.
    /// Only hereditary or provably safe restrictions are pushed down.
    pub fn default_filter(self, n: usize) -> GenFilter {
        match self {
            TheoremId::Mantel | TheoremId::Aes | TheoremId::Efs | TheoremId::Eppt => {
                GenFilter::triangle_free()
            }
            TheoremId::Ore => GenFilter::default().with_min_degree(half_floor_degree(n)),
            TheoremId::Main | TheoremId::ProofSteps => {
                GenFilter::triangle_free().with_min_degree(half_floor_degree(n))
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or(Error::Parameter("unknown theorem id"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MantelVerdict {
    pub triangle_free: bool,
    pub edges: usize,
    /// `floor(n^2 / 4)`.
    pub bound: usize,
    pub bound_holds: bool,
    pub is_extremal: bool,
    /// When extremal: whether the graph is `K_{floor(n/2), ceil(n/2)}`.
    pub extremal_is_balanced_bipartite: bool,
}

impl MantelVerdict {
    pub fn violated(&self) -> bool {
        self.triangle_free && (!self.bound_holds || (self.is_extremal && !self.extremal_is_balanced_bipartite))
    }
}

pub fn mantel_check(g: &Graph) -> MantelVerdict {
    let n = g.order();
    let m = g.edge_count();
    let is_extremal = m == n * n / 4;
    let balanced = if n == 1 {
        // K_{0,1}
        true
    } else {
        recognize_complete_bipartite(g) == Some((n / 2, n - n / 2))
    };
    MantelVerdict {
        triangle_free: find_triangle(g).is_none(),
        edges: m,
        bound: n * n / 4,
        bound_holds: 4 * m <= n * n,
        is_extremal,
        extremal_is_balanced_bipartite: is_extremal && balanced,
    }
}

/// Hypothesis / conclusion pair for the bipartiteness theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteVerdict {
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
}

impl BipartiteVerdict {
    pub fn violated(&self) -> bool {
        self.hypothesis_met && !self.conclusion_holds
    }
}

pub fn aes_check(g: &Graph) -> BipartiteVerdict {
    let hypothesis_met = 5 * g.min_degree() > 2 * g.order() && find_triangle(g).is_none();
    BipartiteVerdict {
        hypothesis_met,
        conclusion_holds: is_bipartite(g).is_bipartite(),
    }
}

pub fn efs_check(g: &Graph) -> BipartiteVerdict {
    let hypothesis_met = !has_three_equal_degrees(g) && find_triangle(g).is_none();
    BipartiteVerdict {
        hypothesis_met,
        conclusion_holds: is_bipartite(g).is_bipartite(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiameterVerdict {
    pub hypothesis_met: bool,
    /// `None` when disconnected.
    pub diameter: Option<usize>,
    /// `ceil((n - delta - 1) / (2 delta))`, present when `delta >= 1`.
    pub bound: Option<usize>,
}

impl DiameterVerdict {
    pub fn violated(&self) -> bool {
        match (self.hypothesis_met, self.diameter, self.bound) {
            (true, Some(d), Some(b)) => d > b,
            _ => false,
        }
    }
}

/// The diameter bound exactly as printed; small cycles violate it, and a
/// violation here is a finding about the formula, not a checker failure.
pub fn eppt_check(g: &Graph) -> DiameterVerdict {
    let n = g.order();
    let delta = g.min_degree();
    let diam = diameter(g).finite();
    let bound = (delta >= 1).then(|| ceil_div(n - delta - 1, 2 * delta));
    let hypothesis_met =
        n >= 3 && delta >= 2 && diam.is_some() && is_connected(g) && find_triangle(g).is_none();
    DiameterVerdict { hypothesis_met, diameter: diam, bound }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathVerdict {
    pub hypothesis_met: bool,
    pub has_path: bool,
}

impl PathVerdict {
    pub fn violated(&self) -> bool {
        self.hypothesis_met && !self.has_path
    }
}

pub fn ore_path_check(g: &Graph) -> Result<PathVerdict, Error> {
    Ok(PathVerdict {
        hypothesis_met: 2 * g.min_degree() + 1 >= g.order(),
        has_path: has_hamiltonian_path(g)?,
    })
}

/// Which hypothesis of the main classification fails, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisFailure {
    /// Outside the stated range `n >= 3`.
    TooSmall { n: usize },
    /// (a): `vertex` has `2 degree < n - 1`.
    MinDegree { vertex: usize, degree: usize },
    /// (b): a perfect matching exists.
    PerfectMatching(Matching),
    /// (c): a triangle exists.
    Triangle(TriangleWitness),
}

impl HypothesisFailure {
    pub fn label(&self) -> &'static str {
        match self {
            HypothesisFailure::TooSmall { .. } => "n<3",
            HypothesisFailure::MinDegree { .. } => "a",
            HypothesisFailure::PerfectMatching(_) => "b",
            HypothesisFailure::Triangle(_) => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    HypothesisFail(HypothesisFailure),
    ConcludedC5,
    ConcludedBalancedBipartite { a: usize, b: usize },
    Counterexample,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::HypothesisFail(_) => "hypothesis-fail",
            Classification::ConcludedC5 => "C5",
            Classification::ConcludedBalancedBipartite { .. } => "balanced-bipartite",
            Classification::Counterexample => "counterexample",
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        !matches!(self, Classification::HypothesisFail(_))
    }
}

/// Checks the hypotheses (a), (b), (c) in order and reports the first
/// failure; otherwise reports which conclusion graph `g` is, if any.
/// The blossom algorithm runs even for odd `n`, where parity alone already
/// rules out a perfect matching.
pub fn main_classify(g: &Graph) -> Classification {
    let n = g.order();
    if n < 3 {
        return Classification::HypothesisFail(HypothesisFailure::TooSmall { n });
    }
    let v = g.min_degree_vertex();
    if 2 * g.degree(v) + 1 < n {
        return Classification::HypothesisFail(HypothesisFailure::MinDegree { vertex: v, degree: g.degree(v) });
    }
    let matching = maximum_matching(g);
    if matching.is_perfect(g) {
        debug_assert!(n % 2 == 0);
        return Classification::HypothesisFail(HypothesisFailure::PerfectMatching(matching));
    }
    if let Some(t) = find_triangle(g) {
        return Classification::HypothesisFail(HypothesisFailure::Triangle(t));
    }
    if recognize_cycle(g) == Some(5) {
        return Classification::ConcludedC5;
    }
    let (a, b) = ((n - 1) / 2, (n + 1) / 2);
    if n % 2 == 1 && recognize_complete_bipartite(g) == Some((a, b)) {
        return Classification::ConcludedBalancedBipartite { a, b };
    }
    Classification::Counterexample
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepOutcome {
    Pass,
    Fail,
    NotApplicable,
}

impl StepOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            StepOutcome::Pass
        } else {
            StepOutcome::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            StepOutcome::Pass => "pass",
            StepOutcome::Fail => "fail",
            StepOutcome::NotApplicable => "n/a",
        }
    }
}

/// Per-graph outcome of each proof step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProofSteps {
    /// All three hypotheses hold; otherwise every step is `NotApplicable`.
    pub applicable: bool,
    /// A perfect matching is impossible, so `n` is odd.
    pub odd_order: StepOutcome,
    /// (i) `2 Delta <= n + 1`.
    pub max_degree_bound: StepOutcome,
    /// (ii) `2 Delta = n + 1` implies `K_{(n-1)/2,(n+1)/2}`.
    pub high_degree_case: StepOutcome,
    /// (iii) `2 Delta = n - 1` implies regular of even degree 2, and C5.
    pub regular_case: StepOutcome,
}

impl ProofSteps {
    pub fn steps(&self) -> [(&'static str, StepOutcome); 4] {
        [
            ("odd-order", self.odd_order),
            ("i:max-degree-bound", self.max_degree_bound),
            ("ii:high-degree-case", self.high_degree_case),
            ("iii:regular-case", self.regular_case),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.steps().iter().all(|(_, s)| *s != StepOutcome::Fail)
    }
}

pub fn proof_step_checks(g: &Graph) -> ProofSteps {
    let n = g.order();
    if !main_classify(g).hypotheses_hold() {
        return ProofSteps {
            applicable: false,
            odd_order: StepOutcome::NotApplicable,
            max_degree_bound: StepOutcome::NotApplicable,
            high_degree_case: StepOutcome::NotApplicable,
            regular_case: StepOutcome::NotApplicable,
        };
    }
    let max_deg = g.max_degree();
    let high_degree_case = if 2 * max_deg == n + 1 {
        StepOutcome::from_bool(recognize_complete_bipartite(g) == Some(((n - 1) / 2, (n + 1) / 2)))
    } else {
        StepOutcome::NotApplicable
    };
    let regular_case = if 2 * max_deg + 1 == n {
        let r = max_deg;
        let regular = g.min_degree() == r;
        StepOutcome::from_bool(regular && r % 2 == 0 && r == 2 && recognize_cycle(g) == Some(5))
    } else {
        StepOutcome::NotApplicable
    };
    ProofSteps {
        applicable: true,
        odd_order: StepOutcome::from_bool(n % 2 == 1),
        max_degree_bound: StepOutcome::from_bool(2 * max_deg <= n + 1),
        high_degree_case,
        regular_case,
    }
}

/// A violating graph with the quantities needed to re-check it by hand.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Finding {
    pub graph6: String,
    pub kind: &'static str,
    pub quantities: Vec<(&'static str, usize)>,
}

/// A hypothesis-satisfying (or extremal) graph and its recognised family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub graph6: String,
    pub family: FamilyTag,
}

/// Result of one checker over one graph, in scan-neutral form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub hypothesis_met: bool,
    pub finding: Option<Finding>,
    /// Set for graphs a report should list even without a violation.
    pub witness: Option<FamilyTag>,
}

pub fn check(theorem: TheoremId, g: &Graph) -> Result<CheckOutcome, Error> {
    let finding = |kind: &'static str, quantities: Vec<(&'static str, usize)>| Finding {
        graph6: graph6::encode(g),
        kind,
        quantities,
    };
    let n = g.order();
    let outcome = match theorem {
        TheoremId::Mantel => {
            let v = mantel_check(g);
            let bad = v.violated().then(|| {
                let kind = if v.bound_holds { "extremal-not-balanced" } else { "bound-violated" };
                finding(kind, alloc::vec![("n", n), ("m", v.edges), ("bound", v.bound)])
            });
            CheckOutcome {
                hypothesis_met: v.triangle_free,
                finding: bad,
                // K_{2,2} is also C4; report the bipartite reading.
                witness: (v.triangle_free && v.is_extremal).then(|| match recognize_complete_bipartite(g) {
                    Some((a, b)) => FamilyTag::CompleteBipartite(a, b),
                    None => identify(g),
                }),
            }
        }
        TheoremId::Aes | TheoremId::Efs => {
            let v = if theorem == TheoremId::Aes { aes_check(g) } else { efs_check(g) };
            CheckOutcome {
                hypothesis_met: v.hypothesis_met,
                finding: v.violated().then(|| {
                    finding("not-bipartite", alloc::vec![("n", n), ("min_degree", g.min_degree())])
                }),
                witness: None,
            }
        }
        TheoremId::Eppt => {
            let v = eppt_check(g);
            CheckOutcome {
                hypothesis_met: v.hypothesis_met,
                finding: v.violated().then(|| {
                    finding(
                        "diameter-exceeds-bound",
                        alloc::vec![
                            ("n", n),
                            ("min_degree", g.min_degree()),
                            ("diameter", v.diameter.unwrap_or(0)),
                            ("bound", v.bound.unwrap_or(0)),
                        ],
                    )
                }),
                witness: None,
            }
        }
        TheoremId::Ore => {
            let v = ore_path_check(g)?;
            CheckOutcome {
                hypothesis_met: v.hypothesis_met,
                finding: v.violated().then(|| {
                    finding("no-hamiltonian-path", alloc::vec![("n", n), ("min_degree", g.min_degree())])
                }),
                witness: None,
            }
        }
        TheoremId::Main => {
            let c = main_classify(g);
            CheckOutcome {
                hypothesis_met: c.hypotheses_hold(),
                finding: (c == Classification::Counterexample).then(|| {
                    finding(
                        "counterexample",
                        alloc::vec![("n", n), ("min_degree", g.min_degree()), ("max_degree", g.max_degree())],
                    )
                }),
                witness: c.hypotheses_hold().then(|| identify(g)),
            }
        }
        TheoremId::ProofSteps => {
            let steps = proof_step_checks(g);
            let failed = steps.steps().into_iter().find(|(_, s)| *s == StepOutcome::Fail);
            CheckOutcome {
                hypothesis_met: steps.applicable,
                finding: failed.map(|(name, _)| {
                    finding(name, alloc::vec![("n", n), ("max_degree", g.max_degree())])
                }),
                witness: steps.applicable.then(|| identify(g)),
            }
        }
    };
    Ok(outcome)
}

/// Counts and findings for one theorem at one order. Merging is
/// associative and order-independent once [`ScanTally::finish`] sorts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanTally {
    pub theorem: TheoremId,
    pub n: usize,
    pub graphs_scanned: u64,
    pub hypothesis_satisfied: u64,
    pub counterexamples: Vec<Finding>,
    pub witnesses: Vec<Witness>,
}

impl ScanTally {
    pub fn new(theorem: TheoremId, n: usize) -> Self {
        ScanTally {
            theorem,
            n,
            graphs_scanned: 0,
            hypothesis_satisfied: 0,
            counterexamples: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn record(&mut self, g: &Graph) -> Result<(), Error> {
        let outcome = check(self.theorem, g)?;
        self.graphs_scanned += 1;
        self.hypothesis_satisfied += outcome.hypothesis_met as u64;
        if let Some(f) = outcome.finding {
            self.counterexamples.push(f);
        }
        if let Some(family) = outcome.witness {
            self.witnesses.push(Witness { graph6: graph6::encode(g), family });
        }
        Ok(())
    }

    pub fn merge(&mut self, other: ScanTally) {
        debug_assert!(self.theorem == other.theorem && self.n == other.n);
        self.graphs_scanned += other.graphs_scanned;
        self.hypothesis_satisfied += other.hypothesis_satisfied;
        self.counterexamples.extend(other.counterexamples);
        self.witnesses.extend(other.witnesses);
    }

    /// Sorts findings and witnesses by graph6 string.
    pub fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self.witnesses.sort();
        self
    }

    /// For Mantel scans: whether exactly one extremal class was seen.
    pub fn extremal_unique(&self) -> Option<bool> {
        (self.theorem == TheoremId::Mantel).then_some(self.witnesses.len() == 1)
    }

    /// Per-graph findings plus a failed Mantel uniqueness count.
    pub fn violation_count(&self) -> usize {
        self.counterexamples.len() + (self.extremal_unique() == Some(false)) as usize
    }
}

/// Sequential scan of every class on `n` vertices passing `filter`.
pub fn scan_with_filter(theorem: TheoremId, n: usize, filter: GenFilter) -> Result<ScanTally, Error> {
    let mut tally = ScanTally::new(theorem, n);
    let mut failure = None;
    for_each_graph(n, filter, |g| {
        if failure.is_none() {
            if let Err(e) = tally.record(g) {
                failure = Some(e);
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(tally.finish()),
    }
}

/// Sequential scan with the theorem's default hypothesis pushdown.
pub fn scan(theorem: TheoremId, n: usize) -> Result<ScanTally, Error> {
    scan_with_filter(theorem, n, theorem.default_filter(n))
}

/// Scan restricted to one work unit; the caller merges and finishes.
pub fn scan_unit(theorem: TheoremId, n: usize, filter: GenFilter, unit: &WorkUnit) -> Result<ScanTally, Error> {
    let mut tally = ScanTally::new(theorem, n);
    let mut failure = None;
    for_each_in_unit(n, filter, unit, |g| {
        if failure.is_none() {
            if let Err(e) = tally.record(g) {
                failure = Some(e);
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}
