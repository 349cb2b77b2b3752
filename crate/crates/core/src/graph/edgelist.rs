use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// A graph together with the external identifiers of its vertices.
///
/// External labels are compacted to dense ids in ascending label order, so
/// `labels[v]` is the label of vertex `v` and the mapping is stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl LabelledGraph {
    /// Identity labels `0..n`.
    pub fn unlabelled(graph: Graph) -> Self {
        let labels = (0..graph.n() as u64).collect();
        LabelledGraph { graph, labels }
    }

    pub fn from_edge_list(pairs: &[(u64, u64)]) -> Result<Self> {
        if let Some(&(u, _)) = pairs.iter().find(|(u, v)| u == v) {
            return Err(Error::Loop(u));
        }
        let mut labels: Vec<u64> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let id = |l: u64| labels.binary_search(&l).unwrap();
        let edges: Vec<(Vertex, Vertex)> = pairs.iter().map(|&(u, v)| (id(u), id(v))).collect();
        let graph = Graph::new(labels.len(), edges)?;
        Ok(LabelledGraph { graph, labels })
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated non-negative integers; `#` comments and blank
    /// lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = i + 1;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("expected two vertex ids, found {}", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<u64>().map_err(|_| Error::Format {
                    line: lineno,
                    message: format!("`{s}` is not a non-negative integer"),
                })
            };
            let (u, v) = (parse(fields[0])?, parse(fields[1])?);
            if u == v {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("self-loop on vertex {u}"),
                });
            }
            pairs.push((u, v));
        }
        Self::from_edge_list(&pairs)
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn vertex(&self, label: u64) -> Option<Vertex> {
        self.labels.binary_search(&label).ok()
    }

    pub fn edge_by_labels(&self, a: u64, b: u64) -> Option<Edge> {
        let (u, v) = (self.vertex(a)?, self.vertex(b)?);
        self.graph.has_edge(u, v).then(|| Edge::new(u, v))
    }

    pub fn to_edge_list_text(&self, header: &str) -> String {
        let mut out = String::new();
        for line in header.lines() {
            let _ = writeln!(out, "# {line}");
        }
        for e in self.graph.edges() {
            let _ = writeln!(out, "{} {}", self.label(e.u()), self.label(e.v()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_duplicate() {
        let p3 = LabelledGraph::from_edge_list(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.graph, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(p3.labels, vec![0, 1, 2]);

        let k2 = LabelledGraph::from_edge_list(&[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.graph.n(), 2);
        assert_eq!(k2.graph.m(), 1);
    }

    #[test]
    fn sparse_labels_are_compacted() {
        let g = LabelledGraph::from_edge_list(&[(10, 30), (30, 20)]).unwrap();
        assert_eq!(g.labels, vec![10, 20, 30]);
        assert!(g.graph.has_edge(0, 2));
        assert!(g.graph.has_edge(1, 2));
        assert_eq!(g.vertex(20), Some(1));
        assert_eq!(g.vertex(25), None);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let text = "# header\n\n1 2\n2 x\n";
        assert_eq!(
            LabelledGraph::parse(text),
            Err(Error::Format {
                line: 4,
                message: "`x` is not a non-negative integer".into()
            })
        );
        assert!(matches!(
            LabelledGraph::parse("1 2 3\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(
            LabelledGraph::parse("0 1\n5 5\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert_eq!(
            LabelledGraph::from_edge_list(&[(3, 3)]),
            Err(Error::Loop(3))
        );
    }

    #[test]
    fn text_round_trip() {
        let g = LabelledGraph::parse("# c4\n5 6\n6 7\n7 8\n8 5\n").unwrap();
        let again = LabelledGraph::parse(&g.to_edge_list_text("again")).unwrap();
        assert_eq!(g, again);
    }
}
