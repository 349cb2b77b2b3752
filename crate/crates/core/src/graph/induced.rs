use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A forbidden or target pattern with a catalog name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    pub graph: Graph,
    pub name: String,
}

impl PatternGraph {
    pub fn new(graph: Graph, name: impl Into<String>) -> Self {
        PatternGraph {
            graph,
            name: name.into(),
        }
    }

    /// `P_r`, the path on `r` vertices.
    pub fn path(r: usize) -> Self {
        let g = Graph::new(r, (1..r).map(|i| (i - 1, i))).unwrap();
        Self::new(g, format!("P{r}"))
    }

    /// `C_s`, the cycle on `s >= 3` vertices.
    pub fn cycle(s: usize) -> Self {
        assert!(s >= 3, "cycles need at least three vertices");
        let g = Graph::new(s, (0..s).map(|i| (i, (i + 1) % s))).unwrap();
        Self::new(g, format!("C{s}"))
    }

    pub fn complete(n: usize) -> Self {
        let g = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap();
        Self::new(g, format!("K{n}"))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let g = Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap();
        Self::new(g, format!("K{a},{b}"))
    }

    /// The star `K_{1,t}`; vertex 0 is the hub.
    pub fn star(t: usize) -> Self {
        Self::complete_bipartite(1, t)
    }

    pub fn claw() -> Self {
        Self::star(3)
    }

    /// Disjoint union `self + other`, offsetting the ids of `other`.
    pub fn plus(&self, other: &PatternGraph) -> Self {
        Self::new(
            self.graph.disjoint_union(&other.graph),
            format!("{}+{}", self.name, other.name),
        )
    }

    /// `sP3 + h`; for `s = 0` this is `h` itself.
    pub fn sp3_plus(s: usize, h: &PatternGraph) -> Self {
        if s == 0 {
            return h.clone();
        }
        let mut g = Graph::empty(0);
        for _ in 0..s {
            g = g.disjoint_union(&Self::path(3).graph);
        }
        let g = g.disjoint_union(&h.graph);
        let prefix = if s == 1 { String::new() } else { s.to_string() };
        Self::new(g, format!("{prefix}P3+{}", h.name))
    }

    pub fn has_cycle(&self) -> bool {
        super::girth(&self.graph).is_some()
    }

    /// Parses catalog names: `P6`, `C5`, `K4`, `K2,3`, `claw`, and `+`-joined
    /// unions with optional multiplicities such as `2P3+P6`.
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownPattern(name.to_string());
        let mut acc: Option<PatternGraph> = None;
        for term in name.split('+') {
            let term = term.trim();
            let digits = term.chars().take_while(char::is_ascii_digit).count();
            let (count, base) = if digits > 0 {
                (
                    term[..digits].parse::<usize>().map_err(|_| unknown())?,
                    &term[digits..],
                )
            } else {
                (1, term)
            };
            let part = parse_base(base).ok_or_else(unknown)?;
            for _ in 0..count {
                acc = Some(match acc {
                    None => part.clone(),
                    Some(a) => a.plus(&part),
                });
            }
        }
        let mut pattern = acc.ok_or_else(unknown)?;
        pattern.name = name.trim().to_string();
        Ok(pattern)
    }
}

fn parse_base(base: &str) -> Option<PatternGraph> {
    if base.eq_ignore_ascii_case("claw") {
        return Some(PatternGraph::claw());
    }
    let mut chars = base.chars();
    let kind = chars.next()?.to_ascii_uppercase();
    let rest = chars.as_str();
    let num = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 1);
    match kind {
        'P' => num(rest).map(PatternGraph::path),
        'C' => num(rest).filter(|&s| s >= 3).map(PatternGraph::cycle),
        'K' => match rest.split_once(',') {
            Some((a, b)) => Some(PatternGraph::complete_bipartite(num(a)?, num(b)?)),
            None => num(rest).map(PatternGraph::complete),
        },
        _ => None,
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// First induced embedding of `pattern` in `host`, if any.
///
/// The witness maps pattern vertex `i` to `witness[i]`. Pattern vertices are
/// placed component by component in breadth-first order, and host candidates
/// are tried in ascending id order, so the witness is deterministic.
pub fn contains_induced(host: &Graph, pattern: &PatternGraph) -> Option<Vec<Vertex>> {
    find_induced(host, &pattern.graph)
}

pub(crate) fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let order = placement_order(pattern);
    let mut position = vec![usize::MAX; k];
    for (i, &p) in order.iter().enumerate() {
        position[p] = i;
    }
    // anchor[i]: an earlier-placed pattern neighbour of order[i], if any.
    let anchor: Vec<Option<Vertex>> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            pattern
                .neighbours(p)
                .iter()
                .copied()
                .find(|&q| position[q] < i)
        })
        .collect();

    let mut state = Search {
        host,
        pattern,
        order: &order,
        anchor: &anchor,
        image: vec![usize::MAX; k],
        used: vec![false; host.n()],
    };
    state.place(0).then_some(state.image)
}

fn placement_order(pattern: &Graph) -> Vec<Vertex> {
    let mut seen = vec![false; pattern.n()];
    let mut order = Vec::with_capacity(pattern.n());
    for root in pattern.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in pattern.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [Vertex],
    anchor: &'a [Option<Vertex>],
    image: Vec<Vertex>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let p = self.order[i];
        let candidates: Vec<Vertex> = match self.anchor[i] {
            Some(q) => self.host.neighbours(self.image[q]).to_vec(),
            None => self.host.vertices().collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < self.pattern.degree(p) {
                continue;
            }
            let consistent = self.order[..i]
                .iter()
                .all(|&q| self.pattern.has_edge(p, q) == self.host.has_edge(h, self.image[q]));
            if !consistent {
                continue;
            }
            self.image[p] = h;
            self.used[h] = true;
            if self.place(i + 1) {
                return true;
            }
            self.used[h] = false;
            self.image[p] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_induced_embedding(host: &Graph, pattern: &Graph, image: &[Vertex]) -> bool {
        let mut seen = image.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == image.len()
            && pattern.vertices().all(|a| {
                pattern
                    .vertices()
                    .filter(|&b| b != a)
                    .all(|b| pattern.has_edge(a, b) == host.has_edge(image[a], image[b]))
            })
    }

    #[test]
    fn catalog_examples() {
        let c6 = PatternGraph::cycle(6).graph;
        assert!(contains_induced(&c6, &PatternGraph::path(6)).is_none());
        assert!(contains_induced(&c6, &PatternGraph::path(5)).is_some());

        let p6 = PatternGraph::path(6);
        let w = contains_induced(&p6.graph, &p6).unwrap();
        assert!(is_induced_embedding(&p6.graph, &p6.graph, &w));

        let k23 = PatternGraph::complete_bipartite(2, 3).graph;
        let c4 = PatternGraph::cycle(4);
        let w = contains_induced(&k23, &c4).unwrap();
        assert!(is_induced_embedding(&k23, &c4.graph, &w));
    }

    #[test]
    fn disjoint_patterns() {
        let p3p6 = PatternGraph::sp3_plus(1, &PatternGraph::path(6));
        assert_eq!(p3p6.name, "P3+P6");
        assert_eq!((p3p6.graph.n(), p3p6.graph.m()), (9, 7));
        let host = PatternGraph::path(10).graph;
        // P10 contains P3 + P6 induced: 0-1-2, gap at 3, then 4..=9.
        let w = contains_induced(&host, &p3p6).unwrap();
        assert!(is_induced_embedding(&host, &p3p6.graph, &w));
        assert!(contains_induced(&PatternGraph::path(9).graph, &p3p6).is_none());
    }

    #[test]
    fn parse_names() {
        assert_eq!(
            PatternGraph::parse("P6").unwrap().graph,
            PatternGraph::path(6).graph
        );
        assert_eq!(PatternGraph::parse("K2,3").unwrap().graph.m(), 6);
        assert_eq!(
            PatternGraph::parse("claw").unwrap().graph,
            PatternGraph::star(3).graph
        );
        let g = PatternGraph::parse("2P3+P6").unwrap();
        assert_eq!(
            g.graph,
            PatternGraph::sp3_plus(2, &PatternGraph::path(6)).graph
        );
        assert!(PatternGraph::parse("Q4").is_err());
        assert!(PatternGraph::parse("C2").is_err());
        assert!(PatternGraph::parse("").is_err());
    }
}
