use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{contains_induced, Graph, PatternGraph, Vertex};

/// Attempts allowed to the rejection samplers.
const MAX_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    /// Connected `G(n, p)`, by rejection.
    Gnp {
        n: usize,
        p: f64,
    },
    /// `G(n, p)` with a random dominating star added, so radius is at most 2.
    RadiusTwo {
        n: usize,
        p: f64,
    },
    /// Connected graphs without an induced `pattern`, drawn from `G(n, p)`
    /// with `p` itself uniform in `[0.15, 0.9)` for every attempt.
    HFree {
        pattern: PatternGraph,
        n: usize,
    },
}

impl FromStr for Family {
    type Err = Error;

    /// `path:6`, `cycle:6`, `complete:4`, `biclique:2,3`, `star:4`,
    /// `gnp:9,0.4`, `radius2:9,0.3`, `hfree:P6,9`.
    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::Family(format!("cannot parse family `{spec}`"));
        let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let prob =
            |i: usize| -> Result<f64> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        Ok(match kind {
            "path" => arity(1).and(int(0)).map(Family::Path)?,
            "cycle" => arity(1).and(int(0)).map(Family::Cycle)?,
            "complete" => arity(1).and(int(0)).map(Family::Complete)?,
            "star" => arity(1).and(int(0)).map(Family::Star)?,
            "biclique" => {
                arity(2)?;
                Family::CompleteBipartite(int(0)?, int(1)?)
            }
            "gnp" => {
                arity(2)?;
                Family::Gnp {
                    n: int(0)?,
                    p: prob(1)?,
                }
            }
            "radius2" => {
                arity(2)?;
                Family::RadiusTwo {
                    n: int(0)?,
                    p: prob(1)?,
                }
            }
            "hfree" => {
                arity(2)?;
                Family::HFree {
                    pattern: PatternGraph::parse(args[0])?,
                    n: int(1)?,
                }
            }
            _ => return Err(bad()),
        })
    }
}

/// Builds a member of `family`; random families are a pure function of
/// `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::Path(r) => Ok(PatternGraph::path(r).graph),
        Family::Cycle(s) if s >= 3 => Ok(PatternGraph::cycle(s).graph),
        Family::Cycle(s) => Err(Error::Family(format!(
            "a cycle needs at least 3 vertices, got {s}"
        ))),
        Family::Complete(n) => Ok(PatternGraph::complete(n).graph),
        Family::CompleteBipartite(a, b) => Ok(PatternGraph::complete_bipartite(a, b).graph),
        Family::Star(t) => Ok(PatternGraph::star(t).graph),
        Family::Gnp { n, p } => {
            check_p(p)?;
            if n == 0 || (p == 0.0 && n > 1) {
                return Err(Error::Family(format!("G({n}, {p}) is never connected")));
            }
            connected_gnp(&mut rng, n, p).ok_or_else(|| {
                Error::Family(format!(
                    "no connected G({n}, {p}) within {MAX_ATTEMPTS} draws"
                ))
            })
        }
        Family::RadiusTwo { n, p } => {
            check_p(p)?;
            if n < 2 {
                return Err(Error::Family(
                    "a radius-2 family needs at least 2 vertices".into(),
                ));
            }
            Ok(with_dominating_star(&mut rng, n, p))
        }
        Family::HFree { ref pattern, n } => {
            if n == 0 {
                return Err(Error::Family("empty graphs are not connected".into()));
            }
            for _ in 0..MAX_ATTEMPTS {
                let p = rng.gen_range(0.15..0.9);
                if let Some(g) = connected_gnp(&mut rng, n, p) {
                    if contains_induced(&g, pattern).is_none() {
                        return Ok(g);
                    }
                }
            }
            Err(Error::Family(format!(
                "no connected {}-free graph on {n} vertices within {MAX_ATTEMPTS} draws",
                pattern.name
            )))
        }
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Family(format!(
            "edge probability {p} outside [0, 1]"
        )))
    }
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn connected_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Option<Graph> {
    (0..MAX_ATTEMPTS).find_map(|_| {
        let g = Graph::new(n, gnp(rng, n, p)).unwrap();
        g.is_connected().then_some(g)
    })
}

fn with_dominating_star(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = gnp(rng, n, p);
    let hub = rng.gen_range(0..n);
    let mut others: Vec<Vertex> = (0..n).filter(|&v| v != hub).collect();
    others.shuffle(rng);
    let leaves = rng.gen_range(1..=others.len());
    let (star, rest) = others.split_at(leaves);
    edges.extend(star.iter().map(|&l| (hub, l)));
    for &v in rest {
        let leaf = *star.choose(rng).unwrap();
        edges.push((v, leaf));
    }
    Graph::new(n, edges).unwrap()
}
