//! Threaded scans, report formats, graph6 line input and the command-line
//! front end built on [`trifree_core`].

pub mod cli;
pub mod input;
pub mod parallel;
pub mod report;

pub use trifree_core as core;
