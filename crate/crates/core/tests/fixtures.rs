mod common;

use common::fixture;
use matchcut::graph::{connected_components, distance_profile, find_dominating_set, Edge};
use matchcut::oracle::has_matching_cut_bruteforce;
use matchcut::propagation::{make_pair, propagate};
use matchcut::redblue::{
    colouring_from_cut, cut_from_colouring, is_matching_cut, is_valid_colouring,
};
use matchcut::strategies::{solve, SolverConfig};
use matchcut::transforms::k22_replace;
use matchcut::{LabelledGraph, MatchingCut, RedBlueColouring};

fn labels(lg: &LabelledGraph, vs: &[usize]) -> Vec<u64> {
    vs.iter().map(|&v| lg.label(v)).collect()
}

fn vertices(lg: &LabelledGraph, ls: &[u64]) -> Vec<usize> {
    ls.iter().map(|&l| lg.vertex(l).unwrap()).collect()
}

fn published_cut(lg: &LabelledGraph) -> MatchingCut {
    MatchingCut::new(
        [(3, 7), (4, 8), (5, 10), (6, 9)]
            .iter()
            .map(|&(a, b)| lg.edge_by_labels(a, b).unwrap())
            .collect(),
    )
}

#[test]
fn fig1_shape() {
    let lg = fixture("fig1.edges");
    assert_eq!((lg.graph.n(), lg.graph.m()), (14, 21));
    assert!(lg.graph.is_connected());
    let d = find_dominating_set(&lg.graph, 6).unwrap();
    assert!(d.len() <= 6);
}

#[test]
fn fig1_published_colouring() {
    let lg = fixture("fig1.edges");
    let g = &lg.graph;
    let red = vertices(&lg, &[1, 2, 3, 4, 5, 6]);
    let c = RedBlueColouring::from_red_set(g.n(), &red);
    assert!(is_valid_colouring(g, &c));
    let cut = cut_from_colouring(g, &c).unwrap();
    assert_eq!(cut, published_cut(&lg));

    let parts = connected_components(g, &[], cut.edges());
    assert!(parts.len() >= 2);
    assert!(parts.iter().any(|p| red.iter().all(|v| p.contains(v))));

    let back = colouring_from_cut(g, &cut).unwrap();
    assert!(is_valid_colouring(g, &back));
    assert_eq!(labels(&lg, &back.red()), vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn fig1_solves_yes() {
    let lg = fixture("fig1.edges");
    let g = &lg.graph;
    let out = solve(g, &SolverConfig::default()).unwrap();
    let cut = out.cut().expect("figure graph has a matching cut");
    assert!(!cut.is_empty());
    assert!(is_matching_cut(g, cut.edges()));
    assert!(has_matching_cut_bruteforce(g, 22).unwrap().is_some());
    assert!(distance_profile(g).unwrap().radius >= 1);
}

#[test]
fn fig2_replacement() {
    let left = fixture("fig2_left.edges");
    let right = fixture("fig2_right.edges");
    let uv = left.edge_by_labels(1, 2).unwrap();
    let t = k22_replace(&left.graph, uv).unwrap();
    // Labels 1..9 map to 0..8 and the new vertices take 9 and 10 on both sides.
    assert_eq!(t.graph, right.graph);
    assert_eq!(t.origin(Edge::new(0, 9)), Some(uv));
}

#[test]
fn fig3_classic_pair_leaves_a_residual() {
    let lg = fixture("fig1.edges");
    let g = &lg.graph;
    let pair = make_pair(g, &vertices(&lg, &[4]), &vertices(&lg, &[8])).unwrap();
    let t = propagate(g, &pair).tuple().cloned().unwrap();
    assert_eq!(labels(&lg, &t.s()), vec![4, 6]);
    assert_eq!(labels(&lg, &t.t()), vec![8, 9]);
    assert_eq!(labels(&lg, &t.x()), vec![1, 2, 3, 4, 6]);
    assert_eq!(labels(&lg, &t.y()), vec![8, 9, 10, 13, 14]);
    // a5 and a6 each see one vertex of X \ S and at most one of Y \ T, so
    // no rule places them; a9 and a10 hang off a6.
    assert_eq!(labels(&lg, &t.z()), vec![5, 7, 11, 12]);
}

#[test]
fn fig3_with_precoloured_a5_and_a6_leaves_nothing() {
    let lg = fixture("fig1.edges");
    let g = &lg.graph;
    let pair = make_pair(g, &vertices(&lg, &[4, 5]), &vertices(&lg, &[7, 8])).unwrap();
    assert_eq!(labels(&lg, pair.s_core()), vec![4]);
    assert_eq!(labels(&lg, pair.t_core()), vec![8]);
    let t = propagate(g, &pair).tuple().cloned().unwrap();
    assert!(t.z().is_empty());
    assert_eq!(labels(&lg, &t.x()), vec![1, 2, 3, 4, 5, 6]);
    assert!(t.slot(lg.vertex(5).unwrap()).is_red());
}

#[test]
fn fig4_generalized_pair_completes() {
    let lg = fixture("fig4_path.edges");
    let g = &lg.graph;
    let pair = make_pair(g, &vertices(&lg, &[1, 2]), &vertices(&lg, &[3, 4])).unwrap();
    assert_eq!(labels(&lg, pair.s_core()), vec![2]);
    assert_eq!(labels(&lg, pair.t_core()), vec![3]);
    let t = propagate(g, &pair).tuple().cloned().unwrap();
    assert!(t.z().is_empty());
}
