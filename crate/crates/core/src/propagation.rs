//! Starting pairs and the R1–R3 propagation engine.
//!
//! Propagation grows a red side `X` and a blue side `Y` from a starting pair,
//! tracking the interface vertices `S ⊆ X` and `T ⊆ Y` whose unique
//! opposite-coloured neighbour is already known. It either refutes the pair
//! or stops at a fixpoint 4-tuple `(S, T, X, Y)` where every undecided vertex
//! has no neighbour in `S ∪ T`, at most one in `X \ S` and at most one in
//! `Y \ T`.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A (generalized) starting pair `(S', T')` and its core `(S'', T'')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartingPair {
    s_prime: Vec<Vertex>,
    t_prime: Vec<Vertex>,
    s_core: Vec<Vertex>,
    t_core: Vec<Vertex>,
}

impl StartingPair {
    pub fn s_prime(&self) -> &[Vertex] {
        &self.s_prime
    }

    pub fn t_prime(&self) -> &[Vertex] {
        &self.t_prime
    }

    pub fn s_core(&self) -> &[Vertex] {
        &self.s_core
    }

    pub fn t_core(&self) -> &[Vertex] {
        &self.t_core
    }
}

/// Validates `(s_prime, t_prime)` and computes its core.
///
/// Both sets must be non-empty and disjoint, every vertex may have at most one
/// neighbour on the other side, and at least one cross edge must exist.
pub fn make_pair(g: &Graph, s_prime: &[Vertex], t_prime: &[Vertex]) -> Result<StartingPair> {
    let not_pair = |msg: String| Err(Error::NotStartingPair(msg));
    let (s_prime, t_prime) = (sorted(s_prime), sorted(t_prime));
    if s_prime.is_empty() || t_prime.is_empty() {
        return not_pair("both sides must be non-empty".into());
    }
    if let Some(&v) = s_prime.iter().chain(&t_prime).find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if let Some(v) = s_prime.iter().find(|v| t_prime.binary_search(v).is_ok()) {
        return not_pair(format!("vertex {v} lies on both sides"));
    }
    let cross = |v: Vertex, other: &[Vertex]| {
        g.neighbours(v)
            .iter()
            .filter(|w| other.binary_search(w).is_ok())
            .count()
    };
    let mut s_core = Vec::new();
    for &v in &s_prime {
        match cross(v, &t_prime) {
            0 => {}
            1 => s_core.push(v),
            k => return not_pair(format!("vertex {v} has {k} neighbours on the blue side")),
        }
    }
    let mut t_core = Vec::new();
    for &v in &t_prime {
        match cross(v, &s_prime) {
            0 => {}
            1 => t_core.push(v),
            k => return not_pair(format!("vertex {v} has {k} neighbours on the red side")),
        }
    }
    if s_core.is_empty() {
        return not_pair("no edge joins the two sides".into());
    }
    debug_assert_eq!(s_core.len(), t_core.len());
    Ok(StartingPair {
        s_prime,
        t_prime,
        s_core,
        t_core,
    })
}

fn sorted(vs: &[Vertex]) -> Vec<Vertex> {
    let mut v = vs.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Placement of one vertex in a 4-tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    /// Undecided: in `Z = V \ (X ∪ Y)`.
    Free,
    /// Red interface vertex: in `S`.
    S,
    /// Red, in `X \ S`.
    XRest,
    /// Blue interface vertex: in `T`.
    T,
    /// Blue, in `Y \ T`.
    YRest,
}

impl Slot {
    pub fn is_red(self) -> bool {
        matches!(self, Slot::S | Slot::XRest)
    }

    pub fn is_blue(self) -> bool {
        matches!(self, Slot::T | Slot::YRest)
    }
}

/// The propagation state `(S, T, X, Y)`; `S ⊆ X`, `T ⊆ Y` and `X ∩ Y = ∅`
/// hold by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourTuple {
    slots: Vec<Slot>,
}

impl FourTuple {
    pub fn from_sets(
        n: usize,
        s: &[Vertex],
        t: &[Vertex],
        x: &[Vertex],
        y: &[Vertex],
    ) -> Result<Self> {
        let mut slots = vec![Slot::Free; n];
        for &v in s.iter().chain(t).chain(x).chain(y) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        for &v in x {
            slots[v] = Slot::XRest;
        }
        for &v in y {
            if slots[v] != Slot::Free {
                return Err(Error::Contract(format!("vertex {v} is in both X and Y")));
            }
            slots[v] = Slot::YRest;
        }
        for &v in s {
            if slots[v] != Slot::XRest {
                return Err(Error::Contract(format!("S vertex {v} is not in X")));
            }
            slots[v] = Slot::S;
        }
        for &v in t {
            if slots[v] != Slot::YRest {
                return Err(Error::Contract(format!("T vertex {v} is not in Y")));
            }
            slots[v] = Slot::T;
        }
        Ok(FourTuple { slots })
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, v: Vertex) -> Slot {
        self.slots[v]
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    fn collect(&self, keep: impl Fn(Slot) -> bool) -> Vec<Vertex> {
        (0..self.slots.len())
            .filter(|&v| keep(self.slots[v]))
            .collect()
    }

    pub fn s(&self) -> Vec<Vertex> {
        self.collect(|s| s == Slot::S)
    }

    pub fn t(&self) -> Vec<Vertex> {
        self.collect(|s| s == Slot::T)
    }

    pub fn x(&self) -> Vec<Vertex> {
        self.collect(Slot::is_red)
    }

    pub fn y(&self) -> Vec<Vertex> {
        self.collect(Slot::is_blue)
    }

    /// The residual set `Z = V \ (X ∪ Y)`.
    pub fn z(&self) -> Vec<Vertex> {
        self.collect(|s| s == Slot::Free)
    }

    /// Checks that `S`/`T` vertices have exactly one neighbour across (their
    /// partner, itself in `T`/`S`) and `X \ S`, `Y \ T` have none.
    pub fn check_consistency(&self, g: &Graph) -> Result<(), Vertex> {
        for v in g.vertices() {
            let slot = self.slots[v];
            let across: Vec<Slot> = g
                .neighbours(v)
                .iter()
                .map(|&w| self.slots[w])
                .filter(|&w| (slot.is_red() && w.is_blue()) || (slot.is_blue() && w.is_red()))
                .collect();
            let ok = match slot {
                Slot::Free => true,
                Slot::S => across == [Slot::T],
                Slot::T => across == [Slot::S],
                Slot::XRest | Slot::YRest => across.is_empty(),
            };
            if !ok {
                return Err(v);
            }
        }
        Ok(())
    }

    /// Checks the fixpoint condition on residual vertices: no neighbour in
    /// `S ∪ T`, at most one in `X \ S` and at most one in `Y \ T`.
    pub fn check_residual(&self, g: &Graph) -> Result<(), Vertex> {
        for v in g.vertices().filter(|&v| self.slots[v] == Slot::Free) {
            let c = Counts::of(g, &self.slots, v);
            if c.s > 0 || c.t > 0 || c.x_rest > 1 || c.y_rest > 1 {
                return Err(v);
            }
        }
        Ok(())
    }
}

impl fmt::Display for FourTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S={:?} T={:?} X={:?} Y={:?}",
            self.s(),
            self.t(),
            self.x(),
            self.y()
        )
    }
}

/// Why propagation answered no.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Refutation {
    /// R1 fired on `vertex`; `bullet` is the 1-based condition that matched.
    Rule1 { vertex: Vertex, bullet: u8 },
    /// The fixpoint violates the tuple consistency invariant at `vertex`.
    Inconsistent { vertex: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    Tuple(FourTuple),
    No(Refutation),
}

impl Propagation {
    pub fn tuple(&self) -> Option<&FourTuple> {
        match self {
            Propagation::Tuple(t) => Some(t),
            Propagation::No(_) => None,
        }
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Propagation::No(_))
    }
}

/// Order in which pending residual vertices are examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// FIFO work-queue seeded with `Z` in ascending order.
    Ascending,
    /// Uniformly random pending vertex at each step.
    Shuffled(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationRun {
    pub outcome: Propagation,
    /// Number of vertices moved out of `Z`; never exceeds `n`.
    pub moves: usize,
}

pub fn propagate(g: &Graph, pair: &StartingPair) -> Propagation {
    propagate_with(g, pair, Schedule::Ascending).outcome
}

pub fn propagate_with(g: &Graph, pair: &StartingPair, schedule: Schedule) -> PropagationRun {
    let mut slots = vec![Slot::Free; g.n()];
    for &v in &pair.s_prime {
        slots[v] = Slot::XRest;
    }
    for &v in &pair.t_prime {
        slots[v] = Slot::YRest;
    }
    for &v in &pair.s_core {
        slots[v] = Slot::S;
    }
    for &v in &pair.t_core {
        slots[v] = Slot::T;
    }

    let mut queue = WorkQueue::new(g.n(), schedule);
    for v in g.vertices().filter(|&v| slots[v] == Slot::Free) {
        queue.push(v);
    }

    let mut moves = 0;
    while let Some(v) = queue.pop() {
        if slots[v] != Slot::Free {
            continue;
        }
        let c = Counts::of(g, &slots, v);
        if let Some(bullet) = c.rule1() {
            return PropagationRun {
                outcome: Propagation::No(Refutation::Rule1 { vertex: v, bullet }),
                moves,
            };
        }
        let (side, interface, partner_rest, partner_iface) = if c.s > 0 || c.x_rest >= 2 {
            (Slot::XRest, Slot::S, Slot::YRest, Slot::T)
        } else if c.t > 0 || c.y_rest >= 2 {
            (Slot::YRest, Slot::T, Slot::XRest, Slot::S)
        } else {
            continue;
        };
        slots[v] = side;
        moves += 1;
        let across: Vec<Vertex> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&w| slots[w] == partner_rest || slots[w] == partner_iface)
            .collect();
        if let [w] = across[..] {
            slots[v] = interface;
            if slots[w] == partner_rest {
                slots[w] = partner_iface;
                queue.push_free_neighbours(g, &slots, w);
            }
        }
        queue.push_free_neighbours(g, &slots, v);
    }

    let tuple = FourTuple { slots };
    let outcome = match tuple.check_consistency(g) {
        Ok(()) => {
            debug_assert!(tuple.check_residual(g).is_ok());
            Propagation::Tuple(tuple)
        }
        Err(vertex) => Propagation::No(Refutation::Inconsistent { vertex }),
    };
    PropagationRun { outcome, moves }
}

/// Neighbour counts of a vertex per slot class.
#[derive(Debug, Default)]
struct Counts {
    s: usize,
    t: usize,
    x_rest: usize,
    y_rest: usize,
}

impl Counts {
    fn of(g: &Graph, slots: &[Slot], v: Vertex) -> Self {
        let mut c = Counts::default();
        for &w in g.neighbours(v) {
            match slots[w] {
                Slot::S => c.s += 1,
                Slot::T => c.t += 1,
                Slot::XRest => c.x_rest += 1,
                Slot::YRest => c.y_rest += 1,
                Slot::Free => {}
            }
        }
        c
    }

    fn rule1(&self) -> Option<u8> {
        if self.s > 0 && self.t > 0 {
            Some(1)
        } else if self.s > 0 && self.y_rest >= 2 {
            Some(2)
        } else if self.t > 0 && self.x_rest >= 2 {
            Some(3)
        } else if self.x_rest >= 2 && self.y_rest >= 2 {
            Some(4)
        } else {
            None
        }
    }
}

struct WorkQueue {
    fifo: VecDeque<Vertex>,
    pending: Vec<Vertex>,
    queued: Vec<bool>,
    rng: Option<ChaCha8Rng>,
}

impl WorkQueue {
    fn new(n: usize, schedule: Schedule) -> Self {
        WorkQueue {
            fifo: VecDeque::new(),
            pending: Vec::new(),
            queued: vec![false; n],
            rng: match schedule {
                Schedule::Ascending => None,
                Schedule::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            },
        }
    }

    fn push(&mut self, v: Vertex) {
        if std::mem::replace(&mut self.queued[v], true) {
            return;
        }
        match self.rng {
            None => self.fifo.push_back(v),
            Some(_) => self.pending.push(v),
        }
    }

    fn push_free_neighbours(&mut self, g: &Graph, slots: &[Slot], v: Vertex) {
        for &w in g.neighbours(v) {
            if slots[w] == Slot::Free {
                self.push(w);
            }
        }
    }

    fn pop(&mut self) -> Option<Vertex> {
        let v = match &mut self.rng {
            None => self.fifo.pop_front()?,
            Some(rng) => {
                if self.pending.is_empty() {
                    return None;
                }
                let i = rng.gen_range(0..self.pending.len());
                self.pending.swap_remove(i)
            }
        };
        self.queued[v] = false;
        Some(v)
    }
}
