//! Exponential-time exact procedures used as ground truth.
//!
//! [`has_matching_cut_bruteforce`] and [`enumerate_valid_colourings`] walk the
//! full bipartition space and check validity directly from the definition.
//! [`backtracking_search`] explores the same space depth-first with
//! definition-level pruning and unit forcing, for graphs too large to enumerate.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::propagation::{FourTuple, Slot};
use crate::redblue::{cut_from_colouring, Colour, MatchingCut, RedBlueColouring};

pub const DEFAULT_BOUND: usize = 22;
/// Hard ceiling for bitmask enumeration.
const MASK_LIMIT: usize = 63;

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    let bound = bound.min(MASK_LIMIT);
    if g.n() > bound {
        return Err(Error::OracleBound { n: g.n(), bound });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Blue-set bitmask validity: every vertex has at most one neighbour on the
/// other side and both sides are non-empty.
fn mask_is_valid(adj: &[u64], full: u64, blue: u64) -> bool {
    if blue == 0 || blue == full {
        return false;
    }
    adj.iter().enumerate().all(|(v, &nb)| {
        let opposite = if blue >> v & 1 == 1 {
            !blue & full
        } else {
            blue
        };
        (nb & opposite).count_ones() <= 1
    })
}

fn colouring_of_mask(n: usize, blue: u64) -> RedBlueColouring {
    RedBlueColouring::new(
        (0..n)
            .map(|v| {
                if blue >> v & 1 == 1 {
                    Colour::Blue
                } else {
                    Colour::Red
                }
            })
            .collect(),
    )
}

/// Decides Matching Cut by enumerating all `2^(n-1)` bipartitions with vertex
/// 0 Red. Bipartitions are visited in increasing order of the blue-set
/// bitmask, and the cut of the first valid colouring is returned.
pub fn has_matching_cut_bruteforce(g: &Graph, bound: usize) -> Result<Option<MatchingCut>> {
    check_bound(g, bound)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    if n < 2 {
        return Ok(None);
    }
    let adj = adjacency_masks(g);
    let full = (1u64 << n) - 1;
    for half in 1u64..(1u64 << (n - 1)) {
        let blue = half << 1;
        if mask_is_valid(&adj, full, blue) {
            let c = colouring_of_mask(n, blue);
            return cut_from_colouring(g, &c).map(Some);
        }
    }
    Ok(None)
}

/// All valid colourings (both orientations), in increasing blue-mask order.
///
/// With `constraints`, keeps only colourings with `X ⊆ R`, `Y ⊆ B`, `S` in the
/// red interface and `T` in the blue interface.
pub fn enumerate_valid_colourings(
    g: &Graph,
    constraints: Option<&FourTuple>,
    bound: usize,
) -> Result<Vec<RedBlueColouring>> {
    check_bound(g, bound)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut must_red = 0u64;
    let mut must_blue = 0u64;
    let mut interface = 0u64;
    if let Some(t) = constraints {
        if t.n() != n {
            return Err(Error::Contract("tuple size differs from graph".into()));
        }
        for (v, slot) in t.slots().iter().enumerate() {
            if slot.is_red() {
                must_red |= 1 << v;
            }
            if slot.is_blue() {
                must_blue |= 1 << v;
            }
            if matches!(slot, Slot::S | Slot::T) {
                interface |= 1 << v;
            }
        }
    }
    let mut out = Vec::new();
    for blue in 0..=full {
        if blue & must_red != 0 || !blue & must_blue != 0 || !mask_is_valid(&adj, full, blue) {
            continue;
        }
        let on_interface = (0..n).filter(|v| interface >> v & 1 == 1).all(|v| {
            let opposite = if blue >> v & 1 == 1 {
                !blue & full
            } else {
                blue
            };
            (adj[v] & opposite).count_ones() == 1
        });
        if on_interface {
            out.push(colouring_of_mask(n, blue));
        }
    }
    Ok(out)
}

/// Exact depth-first search for a valid colouring with vertex 0 Red.
///
/// Vertices are branched in breadth-first order from vertex 0, Red before
/// Blue. Partial colourings are pruned as soon as some vertex has two
/// neighbours of the other colour, and colours implied by the definition are
/// forced: a coloured vertex that already has its opposite neighbour fixes its
/// remaining neighbours, and an uncoloured vertex with two neighbours of one
/// colour must take that colour.
pub fn backtracking_search(g: &Graph, bound: usize) -> Result<Option<RedBlueColouring>> {
    if g.n() > bound {
        return Err(Error::OracleBound { n: g.n(), bound });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.n() < 2 {
        return Ok(None);
    }
    let mut search = Backtrack::new(g);
    let found = search.assign(0, Colour::Red) && search.descend(0);
    Ok(found.then(|| RedBlueColouring::new(search.colour.iter().map(|c| c.unwrap()).collect())))
}

struct Backtrack<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    colour: Vec<Option<Colour>>,
    red_nbrs: Vec<u32>,
    blue_nbrs: Vec<u32>,
    trail: Vec<Vertex>,
}

impl<'a> Backtrack<'a> {
    fn new(g: &'a Graph) -> Self {
        let dist = crate::graph::bfs_distances(g, 0);
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (dist[v], v));
        Backtrack {
            g,
            order,
            colour: vec![None; g.n()],
            red_nbrs: vec![0; g.n()],
            blue_nbrs: vec![0; g.n()],
            trail: Vec::new(),
        }
    }

    fn count(&self, v: Vertex, c: Colour) -> u32 {
        match c {
            Colour::Red => self.red_nbrs[v],
            Colour::Blue => self.blue_nbrs[v],
        }
    }

    fn set(&mut self, v: Vertex, c: Colour) {
        self.colour[v] = Some(c);
        self.trail.push(v);
        for &w in self.g.neighbours(v) {
            match c {
                Colour::Red => self.red_nbrs[w] += 1,
                Colour::Blue => self.blue_nbrs[w] += 1,
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let c = self.colour[v].take().unwrap();
            for &w in self.g.neighbours(v) {
                match c {
                    Colour::Red => self.red_nbrs[w] -= 1,
                    Colour::Blue => self.blue_nbrs[w] -= 1,
                }
            }
        }
    }

    /// Colours `v` and closes under forcing; false on contradiction.
    fn assign(&mut self, v: Vertex, c: Colour) -> bool {
        let mut queue = VecDeque::from([(v, c)]);
        while let Some((u, c)) = queue.pop_front() {
            match self.colour[u] {
                Some(existing) if existing == c => continue,
                Some(_) => return false,
                None => {}
            }
            if self.count(u, c.opposite()) > 1 {
                return false;
            }
            self.set(u, c);
            // u itself, and every coloured neighbour, may now be saturated.
            for w in std::iter::once(u).chain(self.g.neighbours(u).iter().copied()) {
                let Some(cw) = self.colour[w] else {
                    let (r, b) = (self.red_nbrs[w], self.blue_nbrs[w]);
                    if r >= 2 && b >= 2 {
                        return false;
                    }
                    if r >= 2 {
                        queue.push_back((w, Colour::Red));
                    } else if b >= 2 {
                        queue.push_back((w, Colour::Blue));
                    }
                    continue;
                };
                match self.count(w, cw.opposite()) {
                    0 => {}
                    1 => {
                        for &x in self.g.neighbours(w) {
                            if self.colour[x].is_none() {
                                queue.push_back((x, cw));
                            }
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    fn descend(&mut self, from: usize) -> bool {
        let Some(i) = (from..self.order.len()).find(|&i| self.colour[self.order[i]].is_none())
        else {
            return self.colour.contains(&Some(Colour::Blue));
        };
        let v = self.order[i];
        for c in [Colour::Red, Colour::Blue] {
            let mark = self.trail.len();
            if self.assign(v, c) && self.descend(i + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::{make_pair, propagate};
    use crate::redblue::{is_matching_cut, is_valid_colouring};

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn k23() -> Graph {
        Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn complete_graphs_have_no_cut() {
        assert_eq!(
            has_matching_cut_bruteforce(&complete(3), DEFAULT_BOUND),
            Ok(None)
        );
        assert_eq!(
            has_matching_cut_bruteforce(&complete(4), DEFAULT_BOUND),
            Ok(None)
        );
        assert_eq!(backtracking_search(&complete(4), 100), Ok(None));
        let cut = has_matching_cut_bruteforce(&complete(2), DEFAULT_BOUND)
            .unwrap()
            .unwrap();
        assert!(is_matching_cut(&complete(2), cut.edges()));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_valid_colourings(&complete(2), None, 22)
                .unwrap()
                .len(),
            2
        );
        assert!(enumerate_valid_colourings(&complete(3), None, 22)
            .unwrap()
            .is_empty());

        let g = k23();
        let pair = make_pair(&g, &[0], &[2]).unwrap();
        assert!(propagate(&g, &pair).is_no());
        // No colouring puts 0 in the red interface and 2 in the blue one.
        let tuple = FourTuple::from_sets(5, &[0], &[2], &[0], &[2]).unwrap();
        assert!(enumerate_valid_colourings(&g, Some(&tuple), 22)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn refuses_over_bound() {
        let g = complete(5);
        assert_eq!(
            has_matching_cut_bruteforce(&g, 4),
            Err(Error::OracleBound { n: 5, bound: 4 })
        );
        assert!(enumerate_valid_colourings(&g, None, 4).is_err());
        assert!(backtracking_search(&g, 4).is_err());
    }

    #[test]
    fn pendant_vertex_always_cuts() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        assert!(has_matching_cut_bruteforce(&g, 22).unwrap().is_some());
        let c = backtracking_search(&g, 22).unwrap().unwrap();
        assert!(is_valid_colouring(&g, &c));
    }

    #[test]
    fn first_witness_is_lowest_blue_mask() {
        // P3 0-1-2: lowest valid blue mask is {2}.
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let cut = has_matching_cut_bruteforce(&g, 22).unwrap().unwrap();
        assert_eq!(cut.edges(), &[crate::graph::Edge::new(1, 2)]);
    }
}
