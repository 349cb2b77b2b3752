use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{contains_induced, is_dominating, Graph, PatternGraph, Vertex};

use super::domination::{solve_monochromatic_dominating, solve_with_dominating_set};
use super::radius::solve_radius_le2;
use super::{require_connected, Search, SolveOutcome, SolverConfig};

/// A dominating subgraph guaranteed to exist in connected P6-free graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DominatingStructure {
    /// An induced six-cycle, listed in cycle order.
    InducedC6 { cycle: Vec<Vertex> },
    /// A complete bipartite subgraph (not necessarily induced) with
    /// `|a| <= |b|`.
    Biclique { a: Vec<Vertex>, b: Vec<Vertex> },
}

impl DominatingStructure {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs = match self {
            DominatingStructure::InducedC6 { cycle } => cycle.clone(),
            DominatingStructure::Biclique { a, b } => a.iter().chain(b).copied().collect(),
        };
        vs.sort_unstable();
        vs
    }
}

/// Finds a dominating induced C6 or a dominating complete bipartite graph.
///
/// Searches induced six-cycles first, then a greedily grown biclique around
/// each edge, then every vertex subset `A` paired with its common
/// neighbourhood. The last stage is exhaustive, so failure on a connected
/// P6-free graph is reported as an invariant violation.
pub fn find_dominating_structure_p6free(
    g: &Graph,
    config: &SolverConfig,
) -> Result<DominatingStructure> {
    require_connected(g)?;
    if contains_induced(g, &PatternGraph::path(6)).is_some() {
        return Err(Error::Contract("graph contains an induced P6".into()));
    }
    if g.n() < 2 {
        return Err(Error::Contract(
            "a single vertex has no dominating biclique".into(),
        ));
    }
    let mut search = Search::new(config);
    if let Some(cycle) = dominating_induced_c6(g) {
        return Ok(DominatingStructure::InducedC6 { cycle });
    }
    for e in g.edges() {
        search.tick()?;
        let (a, b) = greedy_biclique(g, e.u(), e.v());
        if is_dominating(g, &[a.as_slice(), b.as_slice()].concat()) {
            return Ok(biclique(a, b));
        }
    }
    if let Some((a, b)) = exhaustive_biclique(g, &mut search)? {
        return Ok(biclique(a, b));
    }
    Err(Error::Invariant(
        "connected P6-free graph without a dominating C6 or complete bipartite subgraph".into(),
    ))
}

fn biclique(a: Vec<Vertex>, b: Vec<Vertex>) -> DominatingStructure {
    if a.len() <= b.len() {
        DominatingStructure::Biclique { a, b }
    } else {
        DominatingStructure::Biclique { a: b, b: a }
    }
}

/// First dominating induced C6, enumerated as induced paths from their
/// smallest vertex with the second vertex below the last.
fn dominating_induced_c6(g: &Graph) -> Option<Vec<Vertex>> {
    fn extend(g: &Graph, path: &mut Vec<Vertex>) -> Option<Vec<Vertex>> {
        let (first, last) = (path[0], *path.last().unwrap());
        if path.len() == 6 {
            let closes = g.has_edge(first, last) && path[1] < path[5];
            return (closes && is_dominating(g, path)).then(|| path.clone());
        }
        for &w in g.neighbours(last) {
            if w <= first || path.contains(&w) {
                continue;
            }
            // Only the predecessor may be adjacent, except that the sixth
            // vertex closes the cycle through the first.
            let chord = path[..path.len() - 1]
                .iter()
                .enumerate()
                .any(|(i, &p)| g.has_edge(p, w) && !(i == 0 && path.len() == 5));
            if chord {
                continue;
            }
            path.push(w);
            if let Some(found) = extend(g, path) {
                return Some(found);
            }
            path.pop();
        }
        None
    }
    g.vertices().find_map(|v| extend(g, &mut vec![v]))
}

fn greedy_biclique(g: &Graph, u: Vertex, v: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut a = vec![u];
    let mut b = vec![v];
    loop {
        let mut grew = false;
        for w in g.vertices() {
            if a.contains(&w) || b.contains(&w) {
                continue;
            }
            if b.iter().all(|&x| g.has_edge(w, x)) {
                a.push(w);
                grew = true;
            } else if a.iter().all(|&x| g.has_edge(w, x)) {
                b.push(w);
                grew = true;
            }
        }
        if !grew {
            a.sort_unstable();
            b.sort_unstable();
            return (a, b);
        }
    }
}

/// Every non-empty `A` by increasing size, with `B` its full common
/// neighbourhood; domination is monotone, so a larger `B` never hurts.
fn exhaustive_biclique(
    g: &Graph,
    search: &mut Search,
) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>> {
    fn subsets(
        g: &Graph,
        k: usize,
        from: Vertex,
        a: &mut Vec<Vertex>,
        search: &mut Search,
    ) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>> {
        if a.len() == k {
            search.tick()?;
            let b: Vec<Vertex> = g
                .vertices()
                .filter(|w| !a.contains(w) && a.iter().all(|&x| g.has_edge(x, *w)))
                .collect();
            let both = [a.as_slice(), b.as_slice()].concat();
            return Ok((!b.is_empty() && is_dominating(g, &both)).then(|| (a.clone(), b)));
        }
        for v in from..g.n() {
            a.push(v);
            if let Some(found) = subsets(g, k, v + 1, a, search)? {
                return Ok(Some(found));
            }
            a.pop();
        }
        Ok(None)
    }
    for k in 1..g.n() {
        if let Some(found) = subsets(g, k, 0, &mut Vec::new(), search)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Exact on connected P6-free graphs; inapplicable otherwise.
///
/// A dominating C6 bounds the domination number by 6; a dominating `K_{r,s}`
/// with `r >= 2` and `s >= 3` is monochromatic in every valid colouring; a
/// dominating star means radius at most 2; the remaining bicliques have at
/// most four vertices.
pub fn solve_p6_free(g: &Graph, config: &SolverConfig) -> Result<SolveOutcome> {
    const LABEL: &str = "p6-free";
    require_connected(g)?;
    if let Some(w) = contains_induced(g, &PatternGraph::path(6)) {
        return Ok(Search::new(config).inapplicable(LABEL, format!("induced P6 on {w:?}")));
    }
    if g.n() < 2 {
        return Ok(Search::new(config).no(LABEL));
    }
    let structure = find_dominating_structure_p6free(g, config)?;
    let (out, case) = match &structure {
        DominatingStructure::InducedC6 { cycle } => {
            (solve_with_dominating_set(g, cycle, config)?, "c6")
        }
        DominatingStructure::Biclique { a, b } if a.len() >= 2 && b.len() >= 3 => (
            solve_monochromatic_dominating(g, &structure.vertices(), config)?,
            "biclique",
        ),
        DominatingStructure::Biclique { a, .. } if a.len() == 1 => {
            (solve_radius_le2(g, config)?, "star")
        }
        DominatingStructure::Biclique { .. } => (
            solve_with_dominating_set(g, &structure.vertices(), config)?,
            "small-biclique",
        ),
    };
    let mut search = Search::new(config);
    search.absorb(out.trace);
    let label = format!("{LABEL}/{case}");
    match out.colouring() {
        Some(c) => search.yes(g, c.clone(), &label),
        None if out.is_no() => Ok(search.no(&label)),
        None => Err(Error::Invariant(format!(
            "{} was inapplicable inside the P6-free case split",
            out.strategy
        ))),
    }
}
