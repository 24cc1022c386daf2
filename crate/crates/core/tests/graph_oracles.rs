//! Exact graph invariants against brute-force oracles on small random graphs.

use proptest::prelude::*;
use zdg_core::graph::{Extended, SimpleGraph};
use zdg_core::Limits;

fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let len = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), len)).prop_map(move |(n, pick)| {
            let edges = pairs.iter().zip(pick).filter(|(_, p)| *p).map(|(e, _)| *e).collect();
            (n, edges)
        })
    })
}

fn build(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for &(a, b) in edges {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

fn naive_clique(n: usize, adj: &[Vec<bool>]) -> usize {
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|a| (0..n).all(|b| a == b || s >> a & 1 == 0 || s >> b & 1 == 0 || adj[a][b]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest number of blocks over all set partitions into independent sets.
fn naive_chromatic(n: usize, adj: &[Vec<bool>]) -> usize {
    fn go(v: usize, n: usize, adj: &[Vec<bool>], blocks: &mut Vec<Vec<usize>>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == n {
            *best = blocks.len();
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].iter().all(|&u| !adj[u][v]) {
                blocks[i].push(v);
                go(v + 1, n, adj, blocks, best);
                blocks[i].pop();
            }
        }
        blocks.push(vec![v]);
        go(v + 1, n, adj, blocks, best);
        blocks.pop();
    }
    let mut best = n + 1;
    go(0, n, adj, &mut Vec::new(), &mut best);
    best.min(n)
}

fn floyd(n: usize, adj: &[Vec<bool>]) -> Vec<Vec<Option<usize>>> {
    let mut d = vec![vec![None; n]; n];
    for a in 0..n {
        d[a][a] = Some(0);
        for b in 0..n {
            if adj[a][b] {
                d[a][b] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |z| x + y < z) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

fn naive_diameter(n: usize, adj: &[Vec<bool>]) -> Extended {
    let d = floyd(n, adj);
    let mut best = 0;
    for row in &d {
        for x in row {
            match x {
                None => return Extended::Infinite,
                Some(v) => best = best.max(*v),
            }
        }
    }
    Extended::Finite(best)
}

/// Shortest cycle through each edge: drop it and find the shortest detour.
fn naive_girth(n: usize, edges: &[(usize, usize)]) -> Extended {
    let mut best: Option<usize> = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        let rest: Vec<(usize, usize)> = edges.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| *e).collect();
        let d = floyd(n, &adjacency(n, &rest));
        if let Some(x) = d[a][b] {
            best = Some(best.map_or(x + 1, |y: usize| y.min(x + 1)));
        }
    }
    best.map_or(Extended::Infinite, Extended::Finite)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_matches_subset_enumeration((n, edges) in arb_graph(12)) {
        let g = build(n, &edges);
        let adj = adjacency(n, &edges);
        prop_assert_eq!(g.clique_number(&Limits::default()).unwrap(), naive_clique(n, &adj));
        let c = g.max_clique(&Limits::default()).unwrap();
        prop_assert!(c.iter().all(|&a| c.iter().all(|&b| a == b || g.adjacent(a, b))));
    }

    #[test]
    fn chromatic_matches_partition_enumeration((n, edges) in arb_graph(10)) {
        let g = build(n, &edges);
        let adj = adjacency(n, &edges);
        prop_assert_eq!(g.chromatic_number(&Limits::default()).unwrap(), naive_chromatic(n, &adj));
        let col = g.optimal_coloring(&Limits::default()).unwrap();
        prop_assert!(g.is_proper_coloring(&col));
    }

    #[test]
    fn distances_match_floyd((n, edges) in arb_graph(12)) {
        let g = build(n, &edges);
        let adj = adjacency(n, &edges);
        prop_assert_eq!(g.diameter(), naive_diameter(n, &adj));
        prop_assert_eq!(g.girth(), naive_girth(n, &edges));
        if let Some(cycle) = g.shortest_cycle() {
            prop_assert_eq!(Extended::Finite(cycle.len()), g.girth());
        }
    }

    #[test]
    fn json_round_trip((n, edges) in arb_graph(9)) {
        let g = build(n, &edges);
        let back = SimpleGraph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.labels(), g.labels());
    }
}

#[test]
fn guards_name_themselves() {
    let g = SimpleGraph::with_vertices(70);
    let err = g.chromatic_number(&Limits::default()).unwrap_err().to_string();
    assert!(err.contains("chromatic"), "{err}");
}

#[test]
fn empty_graph_conventions() {
    let g = SimpleGraph::with_vertices(0);
    let inv = g.invariants(&Limits::default()).unwrap();
    assert_eq!(inv.diameter, Extended::Finite(0));
    assert_eq!(inv.girth, Extended::Infinite);
}
