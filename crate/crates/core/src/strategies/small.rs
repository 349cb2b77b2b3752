use crate::error::{Error, Result};
use crate::graph::{connected_components, Edge, Graph};
use crate::redblue::{MatchingCut, RedBlueColouring};

use super::require_connected;

/// Colours the lowest degree-1 vertex Blue and everything else Red.
pub fn degree_one_cut(g: &Graph) -> Option<RedBlueColouring> {
    if g.n() < 2 {
        return None;
    }
    let leaf = g.vertices().find(|&v| g.degree(v) == 1)?;
    let mut red: Vec<_> = g.vertices().collect();
    red.remove(leaf);
    Some(RedBlueColouring::from_red_set(g.n(), &red))
}

/// A matching cut with at most `k <= 2` edges: single edges first, then
/// disjoint pairs, both in ascending edge order.
pub fn small_matching_cut(g: &Graph, k: usize) -> Result<Option<MatchingCut>> {
    if k > 2 {
        return Err(Error::Unsupported(format!(
            "exhaustive small cuts only go up to size 2, asked for {k}"
        )));
    }
    require_connected(g)?;
    let edges: Vec<Edge> = g.edges().collect();
    let disconnects = |m: &[Edge]| connected_components(g, &[], m).len() >= 2;
    if k >= 1 {
        if let Some(&e) = edges.iter().find(|e| disconnects(&[**e])) {
            return Ok(Some(MatchingCut::new(vec![e])));
        }
    }
    if k == 2 {
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let shared = [f.u(), f.v()].iter().any(|&w| e.touches(w));
                if !shared && disconnects(&[e, f]) {
                    return Ok(Some(MatchingCut::new(vec![e, f])));
                }
            }
        }
    }
    Ok(None)
}
