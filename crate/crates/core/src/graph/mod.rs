//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod edgelist;
mod induced;

pub use edgelist::LabelledGraph;
pub use induced::{contains_induced, PatternGraph};

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(&self) -> Vertex {
        self.0
    }

    pub fn v(&self) -> Vertex {
        self.1
    }

    pub fn touches(&self, w: Vertex) -> bool {
        self.0 == w || self.1 == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Immutable simple undirected graph. Adjacency lists are sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds the graph on `n` vertices with the given edges. Duplicate edges
    /// are collapsed; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u as u64));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| Edge(u, v))
        })
    }

    /// The subgraph induced by `vs`, relabelled so that `vs[i]` becomes `i`.
    pub fn induced(&self, vs: &[Vertex]) -> Graph {
        let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = index.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Graph::new(vs.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let edges = self
            .edges()
            .map(|e| (e.0, e.1))
            .chain(other.edges().map(|e| (e.0 + offset, e.1 + offset)));
        Graph::new(offset + other.n(), edges).expect("union of simple graphs is simple")
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || bfs_distances(self, 0).iter().all(Option::is_some)
    }
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbours(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    pub eccentricity: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// Vertices of minimum eccentricity, ascending.
    pub center: Vec<Vertex>,
}

pub fn distance_profile(g: &Graph) -> Result<DistanceProfile> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let eccentricity: Vec<usize> = g
        .vertices()
        .map(|v| {
            bfs_distances(g, v)
                .into_iter()
                .map(Option::unwrap)
                .max()
                .unwrap()
        })
        .collect();
    let radius = *eccentricity.iter().min().unwrap();
    let diameter = *eccentricity.iter().max().unwrap();
    let center = g
        .vertices()
        .filter(|&v| eccentricity[v] == radius)
        .collect();
    Ok(DistanceProfile {
        eccentricity,
        radius,
        diameter,
        center,
    })
}

/// Components of `g` after deleting `removed_vertices` and `removed_edges`.
/// Each part is sorted; parts are ordered by their smallest vertex.
pub fn connected_components(
    g: &Graph,
    removed_vertices: &[Vertex],
    removed_edges: &[Edge],
) -> Vec<Vec<Vertex>> {
    let mut gone = vec![false; g.n()];
    for &v in removed_vertices {
        gone[v] = true;
    }
    let mut label = vec![usize::MAX; g.n()];
    let mut parts = Vec::new();
    for root in g.vertices() {
        if gone[root] || label[root] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut part = vec![root];
        label[root] = id;
        let mut i = 0;
        while i < part.len() {
            let u = part[i];
            i += 1;
            for &w in g.neighbours(u) {
                if gone[w] || label[w] != usize::MAX || removed_edges.contains(&Edge::new(u, w)) {
                    continue;
                }
                label[w] = id;
                part.push(w);
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

pub fn is_dominating(g: &Graph, d: &[Vertex]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in d {
        covered[v] = true;
        for &w in g.neighbours(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Smallest dominating set of size at most `g_max`, searching sizes in
/// increasing order and subsets of each size lexicographically.
pub fn find_dominating_set(g: &Graph, g_max: usize) -> Option<Vec<Vertex>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let mut cover = vec![0u32; g.n()];
    let mut chosen = Vec::new();
    (1..=g_max.min(g.n())).find_map(|k| {
        let mut covered = 0;
        domset_dfs(g, k, 0, &mut chosen, &mut cover, &mut covered).then(|| chosen.clone())
    })
}

fn domset_dfs(
    g: &Graph,
    k: usize,
    from: Vertex,
    chosen: &mut Vec<Vertex>,
    cover: &mut [u32],
    covered: &mut usize,
) -> bool {
    if chosen.len() == k {
        return *covered == g.n();
    }
    let n = g.n();
    for v in from..=n - (k - chosen.len()) {
        for w in std::iter::once(v).chain(g.neighbours(v).iter().copied()) {
            if cover[w] == 0 {
                *covered += 1;
            }
            cover[w] += 1;
        }
        chosen.push(v);
        if domset_dfs(g, k, v + 1, chosen, cover, covered) {
            return true;
        }
        chosen.pop();
        for w in std::iter::once(v).chain(g.neighbours(v).iter().copied()) {
            cover[w] -= 1;
            if cover[w] == 0 {
                *covered -= 1;
            }
        }
    }
    false
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
