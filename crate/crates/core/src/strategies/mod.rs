//! Exact decision strategies for Matching Cut and the dispatcher that picks
//! among them.
//!
//! Every strategy either answers Yes with a verified certificate, answers No
//! after checking its own preconditions, or reports itself inapplicable.

mod domination;
mod lift;
mod p6free;
mod partial;
mod radius;
mod small;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{find_dominating_set, Graph, PatternGraph};
use crate::oracle;
use crate::redblue::{
    check_colouring, cut_from_colouring, is_matching_cut, MatchingCut, RedBlueColouring,
};

pub use domination::{solve_monochromatic_dominating, solve_with_dominating_set};
pub use lift::{lift_h_plus_p3, solve_sp3_p6};
pub use p6free::{find_dominating_structure_p6free, solve_p6_free, DominatingStructure};
pub use radius::solve_radius_le2;
pub use small::{degree_one_cut, small_matching_cut};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolverConfig {
    /// Largest graph handed to the brute-force oracle.
    pub oracle_bound: usize,
    /// Largest dominating set tried by the bounded-domination strategy.
    pub domination_bound: usize,
    /// Maximum number of complete branches explored by one strategy call.
    pub branch_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            oracle_bound: oracle::DEFAULT_BOUND,
            domination_bound: 4,
            branch_budget: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Yes {
        cut: MatchingCut,
        colouring: RedBlueColouring,
    },
    No,
    Inapplicable(String),
}

/// Diagnostic counters accumulated while solving.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub branches: u64,
    pub propagations: u64,
    pub finisher_calls: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub answer: Answer,
    pub strategy: String,
    pub trace: Trace,
}

impl SolveOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self.answer, Answer::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        self.answer == Answer::No
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self.answer, Answer::Inapplicable(_))
    }

    /// `Some(true)` for Yes, `Some(false)` for No.
    pub fn decision(&self) -> Option<bool> {
        match self.answer {
            Answer::Yes { .. } => Some(true),
            Answer::No => Some(false),
            Answer::Inapplicable(_) => None,
        }
    }

    pub fn colouring(&self) -> Option<&RedBlueColouring> {
        match &self.answer {
            Answer::Yes { colouring, .. } => Some(colouring),
            _ => None,
        }
    }

    pub fn cut(&self) -> Option<&MatchingCut> {
        match &self.answer {
            Answer::Yes { cut, .. } => Some(cut),
            _ => None,
        }
    }
}

/// Per-call bookkeeping: trace counters and the branch budget.
pub(crate) struct Search {
    trace: Trace,
    budget: u64,
}

impl Search {
    pub(crate) fn new(config: &SolverConfig) -> Self {
        Search {
            trace: Trace::default(),
            budget: config.branch_budget,
        }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.trace.branches += 1;
        if self.trace.branches > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        Ok(())
    }

    pub(crate) fn absorb(&mut self, other: Trace) {
        self.trace.branches += other.branches;
        self.trace.propagations += other.propagations;
        self.trace.finisher_calls += other.finisher_calls;
    }

    fn finish(self, answer: Answer, strategy: impl Into<String>) -> SolveOutcome {
        SolveOutcome {
            answer,
            strategy: strategy.into(),
            trace: self.trace,
        }
    }

    pub(crate) fn no(self, strategy: &str) -> SolveOutcome {
        self.finish(Answer::No, strategy)
    }

    pub(crate) fn inapplicable(self, strategy: &str, reason: impl Into<String>) -> SolveOutcome {
        self.finish(Answer::Inapplicable(reason.into()), strategy)
    }

    /// Wraps a colouring as a Yes answer after re-verifying the certificate.
    pub(crate) fn yes(
        self,
        g: &Graph,
        colouring: RedBlueColouring,
        strategy: &str,
    ) -> Result<SolveOutcome> {
        if let Err(v) = check_colouring(g, &colouring) {
            return Err(Error::Invariant(format!(
                "{strategy} produced an invalid colouring: {v}"
            )));
        }
        let cut = cut_from_colouring(g, &colouring)?;
        if !is_matching_cut(g, cut.edges()) {
            return Err(Error::Invariant(format!(
                "{strategy} produced a cut that does not verify"
            )));
        }
        Ok(self.finish(Answer::Yes { cut, colouring }, strategy))
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// A strategy the caller may force instead of the dispatcher's order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyChoice {
    Auto,
    DegreeOne,
    SmallCut,
    RadiusTwo,
    P6Free,
    /// The `(sP3 + P6)`-free recursion with the given `s`.
    Sp3P6(usize),
    Domination,
    Oracle,
}

/// Runs one strategy, or the dispatcher for [`StrategyChoice::Auto`].
pub fn solve_with(
    g: &Graph,
    choice: StrategyChoice,
    config: &SolverConfig,
) -> Result<SolveOutcome> {
    require_connected(g)?;
    match choice {
        StrategyChoice::Auto => solve(g, config),
        StrategyChoice::DegreeOne => degree_one_strategy(g),
        StrategyChoice::SmallCut => small_cut_strategy(g),
        StrategyChoice::RadiusTwo => solve_radius_le2(g, config),
        StrategyChoice::P6Free => solve_p6_free(g, config),
        StrategyChoice::Sp3P6(s) => solve_sp3_p6(g, s, config),
        StrategyChoice::Domination => bounded_domination(g, config),
        StrategyChoice::Oracle => oracle_strategy(g, config),
    }
}

/// Tries, in order: a degree-1 vertex, a matching cut of size at most 2,
/// radius at most 2, P6-freeness, the `(P3 + P6)`-free lift, a small
/// dominating set and finally the oracle. Never guesses: when nothing
/// applies the answer is [`Answer::Inapplicable`].
pub fn solve(g: &Graph, config: &SolverConfig) -> Result<SolveOutcome> {
    require_connected(g)?;
    if g.n() < 2 {
        return Ok(Search::new(config).no("trivial"));
    }
    let mut total = Trace::default();
    let mut reasons = Vec::new();
    let attempts: [&dyn Fn() -> Result<SolveOutcome>; 7] = [
        &|| degree_one_strategy(g),
        &|| small_cut_strategy(g),
        &|| solve_radius_le2(g, config),
        &|| solve_p6_free(g, config),
        &|| solve_sp3_p6(g, 1, config),
        &|| bounded_domination(g, config),
        &|| oracle_strategy(g, config),
    ];
    for attempt in attempts {
        match attempt() {
            Ok(mut out) => {
                total.branches += out.trace.branches;
                total.propagations += out.trace.propagations;
                total.finisher_calls += out.trace.finisher_calls;
                match &out.answer {
                    Answer::Inapplicable(reason) => {
                        reasons.push(format!("{}: {reason}", out.strategy))
                    }
                    _ => {
                        out.trace = total;
                        return Ok(out);
                    }
                }
            }
            Err(Error::BudgetExhausted(b)) => {
                reasons.push(format!("branch budget of {b} exhausted"))
            }
            Err(e) => return Err(e),
        }
    }
    let mut search = Search::new(config);
    search.absorb(total);
    Ok(search.inapplicable(
        "dispatcher",
        format!("no exact strategy applies ({})", reasons.join("; ")),
    ))
}

fn degree_one_strategy(g: &Graph) -> Result<SolveOutcome> {
    let search = Search::new(&SolverConfig::default());
    match degree_one_cut(g) {
        Some(c) => search.yes(g, c, "degree-one"),
        None => Ok(search.inapplicable("degree-one", "minimum degree at least 2")),
    }
}

fn small_cut_strategy(g: &Graph) -> Result<SolveOutcome> {
    let search = Search::new(&SolverConfig::default());
    match small_matching_cut(g, 2)? {
        Some(cut) => {
            let c = crate::redblue::colouring_from_cut(g, &cut)?;
            search.yes(g, c, "small-cut")
        }
        None => Ok(search.inapplicable("small-cut", "no matching cut of size at most 2")),
    }
}

fn bounded_domination(g: &Graph, config: &SolverConfig) -> Result<SolveOutcome> {
    match find_dominating_set(g, config.domination_bound) {
        Some(d) => solve_with_dominating_set(g, &d, config),
        None => Ok(Search::new(config).inapplicable(
            "dominating-set",
            format!("domination number exceeds {}", config.domination_bound),
        )),
    }
}

fn oracle_strategy(g: &Graph, config: &SolverConfig) -> Result<SolveOutcome> {
    let search = Search::new(config);
    match oracle::has_matching_cut_bruteforce(g, config.oracle_bound) {
        Ok(Some(cut)) => {
            let c = crate::redblue::colouring_from_cut(g, &cut)?;
            search.yes(g, c, "oracle")
        }
        Ok(None) => Ok(search.no("oracle")),
        Err(Error::OracleBound { n, bound }) => Ok(search.inapplicable(
            "oracle",
            format!("{n} vertices exceeds the oracle bound of {bound}"),
        )),
        Err(e) => Err(e),
    }
}

/// The pattern `sP3 + P6`.
pub fn sp3_p6(s: usize) -> PatternGraph {
    PatternGraph::sp3_plus(s, &PatternGraph::path(6))
}
