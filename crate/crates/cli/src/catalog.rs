//! Graph catalogs: streams of connected graphs with provenance strings.

use genpos::{enumerate_connected_graphs, is_connected, Graph};

use crate::io::{emit_graph6, parse_graph6, FormatError};

/// A named list of connected graphs. Disconnected inputs are dropped on
/// load and counted.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub source: String,
    pub graphs: Vec<(String, Graph)>,
    pub rejected_disconnected: usize,
}

impl Catalog {
    /// All connected graphs of order 1..=max_n, one per isomorphism class,
    /// tagged by their graph6 encoding.
    pub fn builtin_connected(max_n: usize) -> Catalog {
        let mut graphs = Vec::new();
        for n in 1..=max_n {
            for g in enumerate_connected_graphs(n).expect("max_n <= 6") {
                let tag = emit_graph6(&g).expect("small graph");
                graphs.push((tag, g));
            }
        }
        Catalog {
            source: format!("builtin:connected<={max_n}"),
            graphs,
            rejected_disconnected: 0,
        }
    }

    /// Parses one graph6 line per row.
    pub fn from_graph6_text(source: &str, text: &str) -> Result<Catalog, FormatError> {
        let mut graphs = Vec::new();
        let mut rejected = 0;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let g = parse_graph6(line)?;
            if is_connected(&g) && g.n() > 0 {
                graphs.push((line.to_string(), g));
            } else {
                rejected += 1;
            }
        }
        Ok(Catalog {
            source: source.to_string(),
            graphs,
            rejected_disconnected: rejected,
        })
    }

    pub fn from_graph6_file(path: &str) -> Result<Catalog, anyhow::Error> {
        let text = std::fs::read_to_string(path)?;
        Ok(Self::from_graph6_text(path, &text)?)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}
