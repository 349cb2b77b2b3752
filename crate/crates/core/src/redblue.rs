//! Red-blue colourings and their correspondence with matching cuts.
//!
//! A colouring is valid when every vertex has at most one neighbour of the
//! other colour and both colours occur. The bichromatic edges of a valid
//! colouring form a matching cut, and colouring one component of `G - M`
//! red turns a matching cut `M` back into a valid colouring.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Edge, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn opposite(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

/// Total assignment of a colour to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RedBlueColouring(Vec<Colour>);

impl RedBlueColouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        RedBlueColouring(colours)
    }

    /// Colours the vertices in `red` Red and everything else Blue.
    pub fn from_red_set(n: usize, red: &[Vertex]) -> Self {
        let mut colours = vec![Colour::Blue; n];
        for &v in red {
            colours[v] = Colour::Red;
        }
        RedBlueColouring(colours)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colour(&self, v: Vertex) -> Colour {
        self.0[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.0
    }

    pub fn red(&self) -> Vec<Vertex> {
        self.class(Colour::Red)
    }

    pub fn blue(&self) -> Vec<Vertex> {
        self.class(Colour::Blue)
    }

    pub fn class(&self, c: Colour) -> Vec<Vertex> {
        (0..self.0.len()).filter(|&v| self.0[v] == c).collect()
    }

    /// Vertices of colour `c` with exactly one neighbour of the other colour.
    pub fn interface(&self, g: &Graph, c: Colour) -> Vec<Vertex> {
        self.class(c)
            .into_iter()
            .filter(|&v| self.opposite_neighbours(g, v) == 1)
            .collect()
    }

    pub fn red_interface(&self, g: &Graph) -> Vec<Vertex> {
        self.interface(g, Colour::Red)
    }

    pub fn blue_interface(&self, g: &Graph) -> Vec<Vertex> {
        self.interface(g, Colour::Blue)
    }

    pub fn opposite_neighbours(&self, g: &Graph, v: Vertex) -> usize {
        g.neighbours(v)
            .iter()
            .filter(|&&w| self.0[w] != self.0[v])
            .count()
    }

    pub fn swapped(&self) -> Self {
        RedBlueColouring(self.0.iter().map(|c| c.opposite()).collect())
    }
}

/// Why a colouring is not valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The colouring does not cover exactly the vertices of the graph.
    WrongLength { expected: usize, found: usize },
    /// Only one colour occurs; `missing` is the unused one.
    MissingColour { missing: Colour },
    /// The first vertex with two or more neighbours of the other colour.
    TooManyOpposite { vertex: Vertex, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, found } => {
                write!(f, "colouring covers {found} vertices, graph has {expected}")
            }
            Violation::MissingColour { missing } => write!(f, "no vertex is {missing:?}"),
            Violation::TooManyOpposite { vertex, count } => {
                write!(
                    f,
                    "vertex {vertex} has {count} neighbours of the other colour"
                )
            }
        }
    }
}

/// Validity check reporting the lexicographically first offending vertex.
pub fn check_colouring(g: &Graph, c: &RedBlueColouring) -> Result<(), Violation> {
    if c.len() != g.n() {
        return Err(Violation::WrongLength {
            expected: g.n(),
            found: c.len(),
        });
    }
    for v in g.vertices() {
        let count = c.opposite_neighbours(g, v);
        if count > 1 {
            return Err(Violation::TooManyOpposite { vertex: v, count });
        }
    }
    for colour in [Colour::Red, Colour::Blue] {
        if !c.colours().contains(&colour) {
            return Err(Violation::MissingColour { missing: colour });
        }
    }
    Ok(())
}

pub fn is_valid_colouring(g: &Graph, c: &RedBlueColouring) -> bool {
    check_colouring(g, c).is_ok()
}

/// A set of edges claimed to be a matching cut, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MatchingCut {
    edges: Vec<Edge>,
}

impl MatchingCut {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        MatchingCut { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// True iff `m` is a set of edges of `g`, pairwise vertex-disjoint, whose
/// removal disconnects `g`.
pub fn is_matching_cut(g: &Graph, m: &[Edge]) -> bool {
    if m.iter().any(|e| !g.has_edge(e.u(), e.v())) {
        return false;
    }
    if !is_matching(g.n(), m) {
        return false;
    }
    connected_components(g, &[], m).len() >= 2
}

fn is_matching(n: usize, m: &[Edge]) -> bool {
    let mut hit = vec![false; n];
    for e in m {
        for w in [e.u(), e.v()] {
            if std::mem::replace(&mut hit[w], true) {
                return false;
            }
        }
    }
    true
}

/// The bichromatic edges of a valid colouring.
pub fn cut_from_colouring(g: &Graph, c: &RedBlueColouring) -> Result<MatchingCut> {
    check_colouring(g, c).map_err(|v| Error::Contract(format!("invalid colouring: {v}")))?;
    let edges = g
        .edges()
        .filter(|e| c.colour(e.u()) != c.colour(e.v()))
        .collect();
    Ok(MatchingCut::new(edges))
}

/// Colours the component of `G - m` containing the smallest vertex Red and
/// every other vertex Blue.
pub fn colouring_from_cut(g: &Graph, m: &MatchingCut) -> Result<RedBlueColouring> {
    if let Some(e) = m.edges().iter().find(|e| !g.has_edge(e.u(), e.v())) {
        return Err(Error::NotAnEdge(*e));
    }
    if !is_matching(g.n(), m.edges()) {
        return Err(Error::Contract("cut edges share an endpoint".into()));
    }
    let parts = connected_components(g, &[], m.edges());
    if parts.len() < 2 {
        return Err(Error::Contract(
            "removing the cut leaves the graph connected".into(),
        ));
    }
    Ok(RedBlueColouring::from_red_set(g.n(), &parts[0]))
}
