#![allow(dead_code)]

use std::path::PathBuf;

use matchcut::{Graph, LabelledGraph};
use proptest::prelude::*;

pub fn fixture(name: &str) -> LabelledGraph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    LabelledGraph::parse(&text).unwrap()
}

/// Connected graphs on `min..=max` vertices: a random spanning tree plus a
/// random subset of the remaining pairs.
pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        let pairs = n * n.saturating_sub(1) / 2;
        (parents, prop::collection::vec(0u8..100, pairs), 0u8..=100).prop_map(
            move |(parents, extra, density)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, i + 1))
                    .collect();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if extra[k] < density {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            },
        )
    })
}

/// Every labelled graph on `n` vertices, as edge bitmasks over the pairs in
/// lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Naive induced-subgraph test: all injective maps.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for v in host.vertices() {
            if map.contains(&v) {
                continue;
            }
            let ok = (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(v, map[j]));
            if ok {
                map.push(v);
                if go(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(host, pattern, &mut Vec::new())
}
