use crate::error::{Error, Result};
use crate::graph::{connected_components, is_dominating, Graph, Vertex};
use crate::redblue::{is_valid_colouring, Colour, RedBlueColouring};

use super::partial::{branch_colours, branch_interfaces, Partial};
use super::{require_connected, Search, SolveOutcome, SolverConfig};

fn require_dominating(g: &Graph, d: &[Vertex]) -> Result<Vec<Vertex>> {
    if let Some(&v) = d.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if !is_dominating(g, d) {
        return Err(Error::Contract(format!(
            "{d:?} does not dominate the graph"
        )));
    }
    let mut d = d.to_vec();
    d.sort_unstable();
    d.dedup();
    Ok(d)
}

/// Decides Matching Cut given a dominating set `d`.
///
/// Colours `d` in every way, then for each vertex of `d` picks at most one
/// neighbour of the other colour and gives all other neighbours its own
/// colour. Domination makes every such branch a total colouring, which is
/// then checked for validity. The first vertex of `d` is fixed Red, since
/// swapping colours preserves validity.
pub fn solve_with_dominating_set(
    g: &Graph,
    d: &[Vertex],
    config: &SolverConfig,
) -> Result<SolveOutcome> {
    const LABEL: &str = "dominating-set";
    require_connected(g)?;
    let d = require_dominating(g, d)?;
    let mut search = Search::new(config);
    if g.n() < 2 {
        return Ok(search.no(LABEL));
    }
    let mut p = Partial::new(g);
    p.set(d[0], Colour::Red);
    let found = branch_colours(&mut p, &d[1..], &mut search, &mut |p, search| {
        branch_interfaces(p, &d, search, &mut |p, _| {
            Ok(p.total().filter(|c| is_valid_colouring(g, c)))
        })
    })?;
    match found {
        Some(c) => search.yes(g, c, LABEL),
        None => Ok(search.no(LABEL)),
    }
}

/// Decides whether a valid colouring exists in which `d` is monochromatic.
///
/// With `d` Red, every component of `G - d` must be monochromatic, and one
/// Blue component suffices whenever any colouring exists, so each component
/// is tried as the Blue side in turn. A No answer refers only to this
/// restricted question.
pub fn solve_monochromatic_dominating(
    g: &Graph,
    d: &[Vertex],
    config: &SolverConfig,
) -> Result<SolveOutcome> {
    const LABEL: &str = "monochromatic-dominating";
    require_connected(g)?;
    let d = require_dominating(g, d)?;
    let mut search = Search::new(config);
    for part in connected_components(g, &d, &[]) {
        search.tick()?;
        let red: Vec<Vertex> = g
            .vertices()
            .filter(|v| part.binary_search(v).is_err())
            .collect();
        let c = RedBlueColouring::from_red_set(g.n(), &red);
        if is_valid_colouring(g, &c) {
            return search.yes(g, c, LABEL);
        }
    }
    Ok(search.no(LABEL))
}
