//! K_{2,2}-replacement, girth blow-up, and graph-family generators.

mod generate;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{contains_induced, girth, Edge, Graph, PatternGraph};

pub use generate::{generate, Family};

/// A transformed graph with, for every output edge, the input edge it stems
/// from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transformed {
    #[serde(skip)]
    pub graph: Graph,
    /// `(output edge, input edge)`, sorted by output edge.
    pub provenance: Vec<(Edge, Edge)>,
}

impl Transformed {
    /// The input edge that `e` was derived from.
    pub fn origin(&self, e: Edge) -> Option<Edge> {
        self.provenance
            .binary_search_by_key(&e, |&(out, _)| out)
            .ok()
            .map(|i| self.provenance[i].1)
    }
}

/// Replaces edge `uv` by two new vertices `w1 = n`, `w2 = n + 1` adjacent to
/// both `u` and `v`.
pub fn k22_replace(g: &Graph, e: Edge) -> Result<Transformed> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(Error::NotAnEdge(e));
    }
    Ok(replace_all(g, &[e]))
}

/// Replaces every edge in `targets` (ascending) as [`k22_replace`] would one
/// after another; the `i`-th target gets vertices `n + 2i` and `n + 2i + 1`.
fn replace_all(g: &Graph, targets: &[Edge]) -> Transformed {
    let n = g.n();
    let mut provenance: Vec<(Edge, Edge)> = g
        .edges()
        .filter(|e| targets.binary_search(e).is_err())
        .map(|e| (e, e))
        .collect();
    for (i, &e) in targets.iter().enumerate() {
        let (w1, w2) = (n + 2 * i, n + 2 * i + 1);
        for (a, b) in [(e.u(), w1), (e.u(), w2), (e.v(), w1), (e.v(), w2)] {
            provenance.push((Edge::new(a, b), e));
        }
    }
    provenance.sort_unstable();
    let graph = Graph::new(
        n + 2 * targets.len(),
        provenance.iter().map(|(out, _)| (out.u(), out.v())),
    )
    .expect("replacement keeps the graph simple");
    Transformed { graph, provenance }
}

/// Result of [`girth_blowup`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Blowup {
    #[serde(flatten)]
    pub transformed: Transformed,
    /// Number of rounds, each replacing every edge of the previous round.
    pub rounds: usize,
}

/// Shortest cycle that is not a gadget 4-cycle after `rounds` rounds.
fn shortest_long_cycle(input_girth: Option<usize>, rounds: usize) -> Option<usize> {
    let lengthened = input_girth.map(|c| c << rounds);
    if rounds < 2 {
        return lengthened;
    }
    // Gadget 4-cycles from the second-to-last round are doubled once.
    Some(lengthened.map_or(8, |l| l.min(8)))
}

/// Replaces every edge by a K_{2,2} gadget, round after round, until every
/// cycle other than a gadget 4-cycle is longer than the shortest cycle of
/// `h`; the output therefore has no induced `h` and has a matching cut
/// exactly when `g` does.
///
/// `h` must contain a cycle and no induced C4. Uniform rounds always leave
/// 8-cycles once two rounds are needed, so `h` with girth 8 or more is
/// rejected.
pub fn girth_blowup(g: &Graph, h: &PatternGraph) -> Result<Blowup> {
    let Some(target) = girth(&h.graph) else {
        return Err(Error::Unsupported(format!("{} has no cycle", h.name)));
    };
    if contains_induced(&h.graph, &PatternGraph::cycle(4)).is_some() {
        return Err(Error::Unsupported(format!(
            "{} contains an induced C4",
            h.name
        )));
    }
    if target >= 8 {
        return Err(Error::Unsupported(format!(
            "{} has girth {target}; uniform replacement cannot exceed 8",
            h.name
        )));
    }
    let input_girth = girth(g);
    let rounds = (1..)
        .find(|&r| shortest_long_cycle(input_girth, r).is_none_or(|l| l > target))
        .unwrap();

    let mut current = Transformed {
        graph: g.clone(),
        provenance: g.edges().map(|e| (e, e)).collect(),
    };
    for _ in 0..rounds {
        let targets: Vec<Edge> = current.graph.edges().collect();
        let next = replace_all(&current.graph, &targets);
        let provenance = next
            .provenance
            .iter()
            .map(|&(out, mid)| (out, current.origin(mid).unwrap()))
            .collect();
        current = Transformed {
            graph: next.graph,
            provenance,
        };
    }
    if let Some(w) = contains_induced(&current.graph, h) {
        return Err(Error::Invariant(format!(
            "blow-up after {rounds} rounds still contains {} on {w:?}",
            h.name
        )));
    }
    Ok(Blowup {
        transformed: current,
        rounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{backtracking_search, has_matching_cut_bruteforce};

    #[test]
    fn k22_examples() {
        let k2 = PatternGraph::complete(2).graph;
        let t = k22_replace(&k2, Edge::new(0, 1)).unwrap();
        assert_eq!((t.graph.n(), t.graph.m()), (4, 4));
        assert!(contains_induced(&t.graph, &PatternGraph::cycle(4)).is_some());

        let c3 = PatternGraph::cycle(3).graph;
        let t = k22_replace(&c3, Edge::new(0, 1)).unwrap();
        assert_eq!((t.graph.n(), t.graph.m()), (5, 6));
        assert_eq!(t.origin(Edge::new(0, 3)), Some(Edge::new(0, 1)));
        assert_eq!(t.origin(Edge::new(1, 2)), Some(Edge::new(1, 2)));
        assert!(!t.graph.has_edge(0, 1));

        assert_eq!(
            k22_replace(&c3, Edge::new(0, 5)).unwrap_err(),
            Error::NotAnEdge(Edge::new(0, 5))
        );
    }

    #[test]
    fn rounds_match_sequential_replacement() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let mut seq = g.clone();
        for e in g.edges() {
            seq = k22_replace(&seq, e).unwrap().graph;
        }
        let edges: Vec<Edge> = g.edges().collect();
        assert_eq!(replace_all(&g, &edges).graph, seq);
    }

    #[test]
    fn blowup_examples() {
        let c3 = PatternGraph::cycle(3).graph;
        let b = girth_blowup(&c3, &PatternGraph::cycle(5)).unwrap();
        assert_eq!(b.rounds, 1);
        assert_eq!(
            has_matching_cut_bruteforce(&b.transformed.graph, 22).unwrap(),
            None
        );

        let c5 = PatternGraph::cycle(5).graph;
        let b = girth_blowup(&c5, &PatternGraph::cycle(6)).unwrap();
        assert_eq!(b.rounds, 1);
        assert!(backtracking_search(&b.transformed.graph, 1000)
            .unwrap()
            .is_some());

        let b = girth_blowup(&c3, &PatternGraph::cycle(6)).unwrap();
        assert_eq!(b.rounds, 2);
        assert_eq!(
            backtracking_search(&b.transformed.graph, 1000).unwrap(),
            None
        );

        let tree = PatternGraph::path(4).graph;
        let b = girth_blowup(&tree, &PatternGraph::cycle(5)).unwrap();
        assert_eq!(b.rounds, 1);
        assert_eq!(b.transformed.graph.n(), 4 + 2 * 3);

        assert!(girth_blowup(&c3, &PatternGraph::path(5)).is_err());
        assert!(girth_blowup(&c3, &PatternGraph::cycle(4)).is_err());
        assert!(girth_blowup(&c3, &PatternGraph::cycle(8)).is_err());
    }
}
