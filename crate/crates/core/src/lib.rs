//! Exact, integer-only checkers for a family of extremal results on
//! triangle-free graphs, together with the machinery needed to verify them
//! exhaustively: bitset graphs, graph6, maximum matching, named families
//! and orderly enumeration of non-isomorphic graphs.
//!
//! The crate is `no_std` and only needs `alloc`. Threading, IO and report
//! formats live in the `trifree` companion crate.

#![no_std]

extern crate alloc;

mod bits;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod properties;
pub mod theorems;

pub use error::{Error, Graph6Error};
pub use graph::{stats, Diameter, Graph, GraphStats, COLUMN_BITS_MAX, MAX_VERTICES};
