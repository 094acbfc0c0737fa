//! Canonical form: the lexicographically smallest upper-triangle bitstring
//! in column order over all relabelings.
//!
//! A labelling is built one label at a time. Placing vertex `v` at label `j`
//! fixes column `j` of the bitstring, i.e. the adjacency of `v` to the
//! vertices already holding labels `0..j`. Columns have fixed widths, so the
//! minimum string has the minimum column at every level and the search only
//! follows candidates that tie the best column. Twins (vertices whose
//! transposition is an automorphism) yield identical subtrees and only the
//! lowest unplaced one of each twin class is expanded.

use core::cmp::Ordering;

use crate::bits::{low_mask, ones};
use crate::{Error, Graph};

/// Largest order handled by the canonical-form search.
pub const CANON_CAP: usize = 16;

/// Canonical representative of an isomorphism class: order plus the
/// column-order bitstring, `x(0,1)` most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_column_bits(self.order(), self.bits).expect("canonical forms have valid orders")
    }

    /// The form of a graph already known to be canonically labelled.
    pub(crate) fn of_canonical(g: &Graph) -> CanonicalForm {
        CanonicalForm {
            n: g.order() as u8,
            bits: g.column_bits().expect("order checked by caller"),
        }
    }

    pub(crate) fn from_parts(n: usize, bits: u128) -> CanonicalForm {
        CanonicalForm { n: n as u8, bits }
    }
}

type Codes = [u16; CANON_CAP];

fn check_cap(g: &Graph) -> Result<(), Error> {
    if g.order() > CANON_CAP {
        return Err(Error::Capacity { what: "canonical form", n: g.order(), cap: CANON_CAP });
    }
    Ok(())
}

/// `class[v]` is the lowest vertex twin to `v`.
fn twin_classes(rows: &[u64]) -> [u8; CANON_CAP] {
    let mut class = [0u8; CANON_CAP];
    for v in 0..rows.len() {
        class[v] = v as u8;
        for u in 0..v {
            let mask = !(1u64 << u | 1u64 << v);
            if rows[u] & mask == rows[v] & mask {
                class[v] = class[u];
                break;
            }
        }
    }
    class
}

/// Pushes vertex `v` onto every unplaced vertex's column code.
#[inline]
fn place(rows: &[u64], codes: &Codes, unplaced: u64, v: usize) -> Codes {
    let mut next = *codes;
    for u in ones(unplaced) {
        next[u] = codes[u] << 1 | (rows[v] >> u & 1) as u16;
    }
    next
}

/// Candidates at this level whose code equals `target`, one per twin class.
#[inline]
fn expand(class: &[u8; CANON_CAP], codes: &Codes, unplaced: u64, target: u16) -> u64 {
    let mut chosen = 0u64;
    let mut seen_classes = 0u32;
    for v in ones(unplaced) {
        let c = class[v];
        if codes[v] == target && seen_classes >> c & 1 == 0 {
            seen_classes |= 1 << c;
            chosen |= 1 << v;
        }
    }
    chosen
}

struct Minimizer<'a> {
    rows: &'a [u64],
    class: [u8; CANON_CAP],
    best: Codes,
    valid: usize,
}

impl Minimizer<'_> {
    fn descend(&mut self, level: usize, unplaced: u64, codes: &Codes) {
        if unplaced == 0 {
            return;
        }
        let m = ones(unplaced).map(|v| codes[v]).min().expect("unplaced is non-empty");
        if level < self.valid {
            match m.cmp(&self.best[level]) {
                Ordering::Greater => return,
                Ordering::Less => {
                    self.best[level] = m;
                    self.valid = level + 1;
                }
                Ordering::Equal => {}
            }
        } else {
            self.best[level] = m;
            self.valid = level + 1;
        }
        for v in ones(expand(&self.class, codes, unplaced, m)) {
            let rest = unplaced & !(1 << v);
            let next = place(self.rows, codes, rest, v);
            self.descend(level + 1, rest, &next);
        }
    }
}

/// Canonical form of `g` (order at most [`CANON_CAP`]).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, Error> {
    check_cap(g)?;
    let rows = g.rows();
    let n = rows.len();
    let mut search = Minimizer {
        rows,
        class: twin_classes(rows),
        best: [0; CANON_CAP],
        valid: 0,
    };
    search.descend(0, low_mask(n), &[0; CANON_CAP]);
    let mut bits = 0u128;
    for j in 1..n {
        bits = bits << j | search.best[j] as u128;
    }
    Ok(CanonicalForm::from_parts(n, bits))
}

/// Column `j` of the labelled graph: adjacency of `j` to `0..j`, vertex 0 first.
fn columns(rows: &[u64]) -> Codes {
    let mut cols = [0u16; CANON_CAP];
    for (j, col) in cols.iter_mut().enumerate().take(rows.len()) {
        for i in 0..j {
            *col = *col << 1 | (rows[i] >> j & 1) as u16;
        }
    }
    cols
}

struct Challenger<'a> {
    rows: &'a [u64],
    class: [u8; CANON_CAP],
    target: Codes,
}

impl Challenger<'_> {
    /// True when some labelling extending the current prefix beats the target.
    fn beats(&self, level: usize, unplaced: u64, codes: &Codes) -> bool {
        if unplaced == 0 {
            return false;
        }
        let t = self.target[level];
        if ones(unplaced).any(|v| codes[v] < t) {
            return true;
        }
        ones(expand(&self.class, codes, unplaced, t)).any(|v| {
            let rest = unplaced & !(1 << v);
            let next = place(self.rows, codes, rest, v);
            self.beats(level + 1, rest, &next)
        })
    }
}

/// True iff `g`'s own labelling is its canonical form.
pub fn is_canonical(g: &Graph) -> Result<bool, Error> {
    check_cap(g)?;
    Ok(is_canonical_rows(g.rows()))
}

pub(crate) fn is_canonical_rows(rows: &[u64]) -> bool {
    let search = Challenger {
        rows,
        class: twin_classes(rows),
        target: columns(rows),
    };
    !search.beats(0, low_mask(rows.len()), &[0; CANON_CAP])
}
