//! Partial colourings with undo, and the interface-choice branching shared by
//! the dominating-set and lift strategies.

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::redblue::{Colour, RedBlueColouring};

use super::Search;

pub(crate) struct Partial<'g> {
    g: &'g Graph,
    colour: Vec<Option<Colour>>,
    red_nbrs: Vec<u32>,
    blue_nbrs: Vec<u32>,
    trail: Vec<Vertex>,
}

impl<'g> Partial<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        Partial {
            g,
            colour: vec![None; g.n()],
            red_nbrs: vec![0; g.n()],
            blue_nbrs: vec![0; g.n()],
            trail: Vec::new(),
        }
    }

    pub(crate) fn colour(&self, v: Vertex) -> Option<Colour> {
        self.colour[v]
    }

    pub(crate) fn mark(&self) -> usize {
        self.trail.len()
    }

    fn opposite(&self, v: Vertex, c: Colour) -> u32 {
        match c {
            Colour::Red => self.blue_nbrs[v],
            Colour::Blue => self.red_nbrs[v],
        }
    }

    /// Coloured neighbours of `v` whose colour differs from `v`'s.
    pub(crate) fn opposite_count(&self, v: Vertex) -> u32 {
        self.colour[v].map_or(0, |c| self.opposite(v, c))
    }

    /// Colours `v`; false if `v` already has the other colour or some
    /// coloured vertex ends up with two opposite neighbours. On false the
    /// caller must roll back with [`Partial::undo_to`].
    pub(crate) fn set(&mut self, v: Vertex, c: Colour) -> bool {
        if let Some(existing) = self.colour[v] {
            return existing == c;
        }
        self.colour[v] = Some(c);
        self.trail.push(v);
        for &w in self.g.neighbours(v) {
            match c {
                Colour::Red => self.red_nbrs[w] += 1,
                Colour::Blue => self.blue_nbrs[w] += 1,
            }
        }
        if self.opposite(v, c) > 1 {
            return false;
        }
        self.g
            .neighbours(v)
            .iter()
            .all(|&w| self.colour[w].is_none_or(|cw| self.opposite(w, cw) <= 1))
    }

    pub(crate) fn undo_to(&mut self, mark: usize) {
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

    pub(crate) fn coloured(&self, c: Colour) -> Vec<Vertex> {
        (0..self.colour.len())
            .filter(|&v| self.colour[v] == Some(c))
            .collect()
    }

    pub(crate) fn total(&self) -> Option<RedBlueColouring> {
        self.colour
            .iter()
            .copied()
            .collect::<Option<Vec<_>>>()
            .map(RedBlueColouring::new)
    }
}

/// Colours `order` in every way, Red before Blue and vertices ascending in
/// the given order, skipping assignments that clash with the partial state.
pub(crate) fn branch_colours<T>(
    p: &mut Partial<'_>,
    order: &[Vertex],
    search: &mut Search,
    leaf: &mut dyn FnMut(&mut Partial<'_>, &mut Search) -> Result<Option<T>>,
) -> Result<Option<T>> {
    let Some((&v, rest)) = order.split_first() else {
        return leaf(p, search);
    };
    for c in [Colour::Red, Colour::Blue] {
        let mark = p.mark();
        if p.set(v, c) {
            if let Some(found) = branch_colours(p, rest, search, leaf)? {
                return Ok(Some(found));
            }
        }
        p.undo_to(mark);
    }
    Ok(None)
}

/// For each vertex of `order` (already coloured), chooses which neighbour, if
/// any, carries the other colour and colours all remaining neighbours alike.
/// A vertex that already has its opposite neighbour only gets the forcing.
/// Options are tried as "none" first, then neighbours ascending.
pub(crate) fn branch_interfaces<T>(
    p: &mut Partial<'_>,
    order: &[Vertex],
    search: &mut Search,
    leaf: &mut dyn FnMut(&mut Partial<'_>, &mut Search) -> Result<Option<T>>,
) -> Result<Option<T>> {
    let Some((&x, rest)) = order.split_first() else {
        search.tick()?;
        return leaf(p, search);
    };
    let c = p.colour(x).expect("branch vertices are coloured first");
    let g = p.g;
    let free: Vec<Vertex> = g
        .neighbours(x)
        .iter()
        .copied()
        .filter(|&w| p.colour(w).is_none())
        .collect();
    let mut options = vec![None];
    if p.opposite_count(x) == 0 {
        options.extend(free.iter().copied().map(Some));
    }
    for choice in options {
        let mark = p.mark();
        let ok = free.iter().all(|&w| {
            let cw = if Some(w) == choice { c.opposite() } else { c };
            p.set(w, cw)
        });
        if ok {
            if let Some(found) = branch_interfaces(p, rest, search, leaf)? {
                return Ok(Some(found));
            }
        }
        p.undo_to(mark);
    }
    Ok(None)
}
