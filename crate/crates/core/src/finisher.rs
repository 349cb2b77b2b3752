//! Completes a fixpoint 4-tuple to a valid colouring in which every
//! component of `G - (X ∪ Y)` is monochromatic, by reduction to 2-SAT.
//!
//! One variable per residual component `F`, true meaning `F` is Blue.
//! A vertex of `X \ S` is Red with no Blue neighbour yet, so it tolerates at
//! most one Blue neighbour among the residual components; symmetrically for
//! `Y \ T`. Vertices of `S ∪ T` have no residual neighbours at a fixpoint, and
//! residual vertices see at most one placed vertex of each colour, so they are
//! valid under either colour of their component.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, Vertex};
use crate::propagation::{FourTuple, Slot};
use crate::redblue::{check_colouring, Colour, RedBlueColouring};
use crate::twosat::{solve_2sat, Lit, TwoSatInstance};

/// The 2-SAT encoding of a tuple together with the component map.
#[derive(Debug, Clone)]
pub struct Encoding {
    pub instance: TwoSatInstance,
    /// Residual components, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<Vertex>>,
    /// `component_of[v]` for residual `v`, `None` for placed vertices.
    pub component_of: Vec<Option<usize>>,
}

pub fn encode(g: &Graph, tuple: &FourTuple) -> Result<Encoding> {
    if tuple.n() != g.n() {
        return Err(Error::Contract("tuple size differs from graph".into()));
    }
    if let Err(v) = tuple.check_consistency(g) {
        return Err(Error::Contract(format!("tuple inconsistent at vertex {v}")));
    }
    if let Err(v) = tuple.check_residual(g) {
        return Err(Error::Contract(format!(
            "residual vertex {v} violates the fixpoint conditions"
        )));
    }
    let mut placed = tuple.x();
    placed.extend(tuple.y());
    let components = connected_components(g, &placed, &[]);
    let mut component_of = vec![None; g.n()];
    for (i, part) in components.iter().enumerate() {
        for &v in part {
            component_of[v] = Some(i);
        }
    }

    let mut instance = TwoSatInstance::new(components.len());
    for v in g.vertices() {
        let forbid_blue = match tuple.slot(v) {
            Slot::XRest => true,
            Slot::YRest => false,
            Slot::S | Slot::T => {
                if g.neighbours(v).iter().any(|&w| component_of[w].is_some()) {
                    return Err(Error::Invariant(format!(
                        "interface vertex {v} touches the residual graph"
                    )));
                }
                continue;
            }
            Slot::Free => continue,
        };
        // Edges from v into each residual component.
        let mut touching: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in g.neighbours(v) {
            if let Some(f) = component_of[w] {
                *touching.entry(f).or_default() += 1;
            }
        }
        // "F has the colour of v", as a literal.
        let same = |f: usize| {
            if forbid_blue {
                Lit::neg(f)
            } else {
                Lit::pos(f)
            }
        };
        let faces: Vec<(usize, usize)> = touching.into_iter().collect();
        for (i, &(f, edges)) in faces.iter().enumerate() {
            if edges >= 2 {
                instance.add_unit(same(f));
            }
            for &(h, _) in &faces[i + 1..] {
                instance.add_clause(same(f), same(h));
            }
        }
    }
    Ok(Encoding {
        instance,
        components,
        component_of,
    })
}

/// A valid colouring with `X` Red, `Y` Blue and every residual component
/// monochromatic, or `None` if no such colouring exists.
pub fn decide_monochromatic_extension(
    g: &Graph,
    tuple: &FourTuple,
) -> Result<Option<RedBlueColouring>> {
    let enc = encode(g, tuple)?;
    let Some(assignment) = solve_2sat(&enc.instance) else {
        return Ok(None);
    };
    let colours: Vec<Colour> = g
        .vertices()
        .map(|v| match (tuple.slot(v), enc.component_of[v]) {
            (s, _) if s.is_red() => Colour::Red,
            (s, _) if s.is_blue() => Colour::Blue,
            (_, Some(f)) if assignment[f] => Colour::Blue,
            _ => Colour::Red,
        })
        .collect();
    let colouring = RedBlueColouring::new(colours);
    if let Err(v) = check_colouring(g, &colouring) {
        return Err(Error::Invariant(format!(
            "2-SAT witness is not a valid colouring: {v}"
        )));
    }
    Ok(Some(colouring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_valid_colourings;
    use crate::propagation::{make_pair, propagate};
    use crate::redblue::is_valid_colouring;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Pair edge 0-1, x = 2 hangs off 0, y = 3 hangs off 1, and the residual
    /// triangle {4, 5, 6} is joined twice to x (via 5, 6) and twice to y (via
    /// 4, 5).
    fn doubly_attached_triangle() -> Graph {
        Graph::new(
            7,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 5),
                (2, 6),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
                (4, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn p6_bipartition() {
        let g = path(6);
        let pair = make_pair(&g, &[2], &[3]).unwrap();
        let tuple = propagate(&g, &pair).tuple().cloned().unwrap();
        // The end vertices see only one vertex of X \ S or Y \ T and stay free.
        assert_eq!(
            (tuple.x(), tuple.y(), tuple.z()),
            (vec![1, 2], vec![3, 4], vec![0, 5])
        );
        let c = decide_monochromatic_extension(&g, &tuple).unwrap().unwrap();
        assert!(is_valid_colouring(&g, &c));
        assert!(tuple.x().iter().all(|&v| c.colour(v) == Colour::Red));
        assert!(tuple.y().iter().all(|&v| c.colour(v) == Colour::Blue));
        let all = enumerate_valid_colourings(&g, Some(&tuple), 22).unwrap();
        assert!(all.contains(&c));
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn component_forced_both_ways_has_no_extension() {
        let g = doubly_attached_triangle();
        let pair = make_pair(&g, &[0], &[1]).unwrap();
        let tuple = propagate(&g, &pair).tuple().cloned().unwrap();
        assert_eq!(tuple.z(), vec![4, 5, 6]);
        assert_eq!((tuple.x(), tuple.y()), (vec![0, 2], vec![1, 3]));
        assert_eq!(decide_monochromatic_extension(&g, &tuple), Ok(None));
        assert!(enumerate_valid_colourings(&g, Some(&tuple), 22)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn component_with_free_choice() {
        // Pair 0-1, x = 2 off 0, residual edge 3-4 with 3 adjacent to x.
        // Red residual or Blue residual are both locally fine.
        let g = Graph::new(5, [(0, 1), (0, 2), (2, 3), (3, 4)]).unwrap();
        let pair = make_pair(&g, &[0], &[1]).unwrap();
        let tuple = propagate(&g, &pair).tuple().cloned().unwrap();
        assert_eq!(tuple.z(), vec![3, 4]);
        let enc = encode(&g, &tuple).unwrap();
        assert_eq!(enc.components, vec![vec![3, 4]]);
        assert!(enc.instance.clauses().is_empty());
        let c = decide_monochromatic_extension(&g, &tuple).unwrap().unwrap();
        assert!(is_valid_colouring(&g, &c));
    }

    #[test]
    fn rejects_non_fixpoint_tuples() {
        let g = path(4);
        // 0 is residual but adjacent to S vertex 1.
        let tuple = FourTuple::from_sets(4, &[1], &[2], &[1], &[2, 3]).unwrap();
        assert!(matches!(
            decide_monochromatic_extension(&g, &tuple),
            Err(Error::Contract(_))
        ));
    }
}
