use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finisher::decide_monochromatic_extension;
use crate::graph::{contains_induced, Graph, PatternGraph, Vertex};
use crate::propagation::{make_pair, propagate};
use crate::redblue::{Colour, RedBlueColouring};

use super::p6free::solve_p6_free;
use super::partial::{branch_colours, branch_interfaces, Partial};
use super::small::small_matching_cut;
use super::{require_connected, sp3_p6, Search, SolveOutcome, SolverConfig};

/// Lifts an exact solver for `h`-free graphs to `(h + P3)`-free graphs.
///
/// After ruling out matching cuts of size at most 2, either the graph is
/// `h`-free and goes to `subsolver`, or one induced copy `G'` of `h` is fixed
/// and the search branches over a cut edge `uv` (u Red, v Blue), every
/// colouring of `G'`, and the opposite-coloured neighbour (if any) of each
/// vertex of `G'`. The coloured region seeds a generalized starting pair,
/// which is propagated and finished by 2-SAT.
pub fn lift_h_plus_p3(
    g: &Graph,
    h: &PatternGraph,
    subsolver: &dyn Fn(&Graph) -> Result<SolveOutcome>,
    config: &SolverConfig,
) -> Result<SolveOutcome> {
    require_connected(g)?;
    let lifted = PatternGraph::path(3).plus(h);
    let label = format!("lift({})", lifted.name);
    let mut search = Search::new(config);
    if let Some(w) = contains_induced(g, &lifted) {
        return Ok(search.inapplicable(&label, format!("induced {} on {w:?}", lifted.name)));
    }
    if g.n() < 2 {
        return Ok(search.no(&label));
    }
    if let Some(cut) = small_matching_cut(g, 2)? {
        let c = crate::redblue::colouring_from_cut(g, &cut)?;
        return search.yes(g, c, &format!("{label}/small-cut"));
    }
    let Some(copy) = contains_induced(g, h) else {
        let out = subsolver(g)?;
        search.absorb(out.trace);
        let inner = format!("{label}>{}", out.strategy);
        return match out.answer {
            super::Answer::Yes { colouring, .. } => search.yes(g, colouring, &inner),
            super::Answer::No => Ok(search.no(&inner)),
            super::Answer::Inapplicable(reason) => Ok(search.inapplicable(&inner, reason)),
        };
    };
    let mut region = copy.clone();
    region.sort_unstable();

    let mut seen: HashSet<(Vec<Vertex>, Vec<Vertex>)> = HashSet::new();
    let mut leaf = |p: &mut Partial<'_>, search: &mut Search| -> Result<Option<RedBlueColouring>> {
        let key = (p.coloured(Colour::Red), p.coloured(Colour::Blue));
        if !seen.insert(key.clone()) {
            return Ok(None);
        }
        let pair = match make_pair(g, &key.0, &key.1) {
            Ok(pair) => pair,
            Err(Error::NotStartingPair(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        search.trace.propagations += 1;
        let Some(tuple) = propagate(g, &pair).tuple().cloned() else {
            return Ok(None);
        };
        search.trace.finisher_calls += 1;
        decide_monochromatic_extension(g, &tuple)
    };

    let mut p = Partial::new(g);
    for e in g.edges() {
        let mark = p.mark();
        if p.set(e.u(), Colour::Red) && p.set(e.v(), Colour::Blue) {
            let found = branch_colours(&mut p, &region, &mut search, &mut |p, search| {
                branch_interfaces(p, &region, search, &mut leaf)
            })?;
            if let Some(c) = found {
                return search.yes(g, c, &label);
            }
        }
        p.undo_to(mark);
    }
    Ok(search.no(&label))
}

/// Exact on `(sP3 + P6)`-free graphs by `s` nested lifts over the P6-free
/// solver; inapplicable when the graph contains an induced `sP3 + P6`.
pub fn solve_sp3_p6(g: &Graph, s: usize, config: &SolverConfig) -> Result<SolveOutcome> {
    require_connected(g)?;
    if s == 0 {
        return solve_p6_free(g, config);
    }
    let h = sp3_p6(s - 1);
    let subsolver = |sub: &Graph| solve_sp3_p6(sub, s - 1, config);
    lift_h_plus_p3(g, &h, &subsolver, config)
}
