use crate::error::Result;
use crate::finisher::decide_monochromatic_extension;
use crate::graph::{distance_profile, Graph, Vertex};
use crate::propagation::{make_pair, propagate};

use super::domination::solve_monochromatic_dominating;
use super::small::degree_one_cut;
use super::{require_connected, Search, SolveOutcome, SolverConfig};

/// Exact on graphs of radius at most 2; inapplicable otherwise.
///
/// Radius 1: a matching cut exists iff some vertex has degree 1.
/// Radius 2: the center `u` and its neighbours form a dominating star. Either
/// the star is monochromatic, or `u` has a unique neighbour of the other
/// colour, in which case that edge seeds propagation and the residual
/// components are coloured by the finisher.
pub fn solve_radius_le2(g: &Graph, config: &SolverConfig) -> Result<SolveOutcome> {
    const LABEL: &str = "radius-2";
    require_connected(g)?;
    let mut search = Search::new(config);
    if g.n() < 2 {
        return Ok(search.no(LABEL));
    }
    let profile = distance_profile(g)?;
    match profile.radius {
        1 => {
            return match degree_one_cut(g) {
                Some(c) => search.yes(g, c, "radius-1"),
                None => Ok(search.no("radius-1")),
            }
        }
        2 => {}
        r => return Ok(search.inapplicable(LABEL, format!("radius is {r}"))),
    }
    let u = profile.center[0];
    let star: Vec<Vertex> = std::iter::once(u)
        .chain(g.neighbours(u).iter().copied())
        .collect();
    let mono = solve_monochromatic_dominating(g, &star, config)?;
    search.absorb(mono.trace);
    if let Some(c) = mono.colouring() {
        return search.yes(g, c.clone(), LABEL);
    }
    for &v in g.neighbours(u) {
        search.tick()?;
        let pair = make_pair(g, &[u], &[v])?;
        search.trace.propagations += 1;
        let Some(tuple) = propagate(g, &pair).tuple().cloned() else {
            continue;
        };
        search.trace.finisher_calls += 1;
        if let Some(c) = decide_monochromatic_extension(g, &tuple)? {
            return search.yes(g, c, LABEL);
        }
    }
    Ok(search.no(LABEL))
}
