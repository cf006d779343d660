//! The versioned JSON report envelope shared by the CLI and the browser demo.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::{BipartiteGraph, Graph};
use crate::io::write_graph6;

pub const SCHEMA_VERSION: &str = "spectraham/1";

/// How the report was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandRecord {
    pub name: String,
    pub args: Vec<String>,
}

/// A report carries no timestamp, so identical invocations give identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub input_digest: Option<String>,
    pub command: CommandRecord,
    pub results: Vec<serde_json::Value>,
    pub seed: Option<u64>,
}

impl ReportDocument {
    pub fn new(command: CommandRecord) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            input_digest: None,
            command,
            results: Vec::new(),
            seed: None,
        }
    }

    pub fn push(&mut self, result: impl Serialize) {
        self.results
            .push(serde_json::to_value(result).expect("report values serialize to JSON"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 of the graph's graph6 encoding, with `+x=<|X|>` appended for bipartite graphs.
pub fn graph_digest(g: &Graph, x_size: Option<usize>) -> String {
    let mut text = write_graph6(g);
    if let Some(x) = x_size {
        text.push_str(&format!("+x={x}"));
    }
    format!("sha256:{}", hex(&Sha256::digest(text.as_bytes())))
}

pub fn bipartite_digest(b: &BipartiteGraph) -> String {
    graph_digest(&b.to_graph(), Some(b.x_size()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_k3() {
        assert_eq!(
            graph_digest(&Graph::complete(3), None),
            "sha256:4a469b3ce3caaad469f8c97e9176aacbe84216672889aa70c62b37f62e7aa427"
        );
        assert_ne!(
            bipartite_digest(&BipartiteGraph::complete(1, 2)),
            graph_digest(&BipartiteGraph::complete(1, 2).to_graph(), None)
        );
    }

    #[test]
    fn document_round_trip() {
        let mut doc = ReportDocument::new(CommandRecord {
            name: "mu".into(),
            args: vec!["--in".into(), "-".into()],
        });
        doc.push(serde_json::json!({"mu": 2.0}));
        doc.seed = Some(7);
        let back: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert!(!doc.to_json().contains("timestamp"));
    }
}
