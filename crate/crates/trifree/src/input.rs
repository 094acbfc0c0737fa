use std::io::BufRead;

use trifree_core::graph6::{self, HEADER};
use trifree_core::{Error, Graph};

/// One non-blank input line and its decoding.
#[derive(Debug)]
pub struct InputLine {
    /// 1-based line number in the source.
    pub number: usize,
    pub text: String,
    pub graph: Result<Graph, LineError>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub message: String,
    /// Byte offset within the raw line, header included.
    pub offset: Option<usize>,
}

impl LineError {
    fn from_decode(text: &str, err: Error) -> Self {
        let header = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
        let offset = match &err {
            Error::Graph6(e) => Some(header + e.offset()),
            _ => None,
        };
        LineError { message: err.to_string(), offset }
    }
}

/// Decodes graph6 lines, skipping blank ones. IO errors end the stream.
pub fn graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<InputLine>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e)),
        Ok(raw) => {
            let text = raw.trim_end_matches('\r').to_string();
            if text.trim().is_empty() {
                return None;
            }
            let graph = graph6::decode(&text).map_err(|e| LineError::from_decode(&text, e));
            Some(Ok(InputLine { number: i + 1, text, graph }))
        }
    })
}
