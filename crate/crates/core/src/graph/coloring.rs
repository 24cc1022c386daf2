//! Exact vertex coloring: DSATUR backtracking with iterative deepening on
//! the number of colors, starting from the clique lower bound.

use super::SimpleGraph;

const UNCOLORED: usize = usize::MAX;

pub(super) fn optimal_coloring(g: &SimpleGraph, clique: &[usize]) -> Vec<usize> {
    let n = g.len();
    if n == 0 {
        return Vec::new();
    }
    let upper = greedy_dsatur(g);
    let upper_k = upper.iter().max().map_or(0, |&c| c + 1);
    for k in clique.len().max(1)..upper_k {
        let mut colors = vec![UNCOLORED; n];
        // The clique's vertices need pairwise distinct colors; fixing them
        // removes the symmetric permutations of those colors.
        for (c, &v) in clique.iter().enumerate() {
            colors[v] = c;
        }
        if backtrack(g, k, &mut colors, n - clique.len()) {
            return colors;
        }
    }
    upper
}

fn saturation(g: &SimpleGraph, colors: &[usize], v: usize) -> usize {
    let mut seen: u128 = 0;
    let mut extra = Vec::new();
    for w in g.neighbors(v) {
        let c = colors[w];
        if c == UNCOLORED {
            continue;
        }
        if c < 128 {
            seen |= 1 << c;
        } else if !extra.contains(&c) {
            extra.push(c);
        }
    }
    seen.count_ones() as usize + extra.len()
}

/// Uncolored vertex of maximum saturation, ties broken by uncolored degree.
fn pick(g: &SimpleGraph, colors: &[usize]) -> Option<usize> {
    (0..g.len())
        .filter(|&v| colors[v] == UNCOLORED)
        .max_by_key(|&v| {
            let free_deg = g.neighbors(v).filter(|&w| colors[w] == UNCOLORED).count();
            (saturation(g, colors, v), free_deg, std::cmp::Reverse(v))
        })
}

fn greedy_dsatur(g: &SimpleGraph) -> Vec<usize> {
    let mut colors = vec![UNCOLORED; g.len()];
    while let Some(v) = pick(g, &colors) {
        let c = (0..)
            .find(|&c| g.neighbors(v).all(|w| colors[w] != c))
            .unwrap_or(0);
        colors[v] = c;
    }
    colors
}

fn backtrack(g: &SimpleGraph, k: usize, colors: &mut [usize], remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    let Some(v) = pick(g, colors) else {
        return true;
    };
    let used = colors
        .iter()
        .filter(|&&c| c != UNCOLORED)
        .max()
        .map_or(0, |&c| c + 1);
    // A fresh color is interchangeable with any other fresh color.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|w| colors[w] != c) {
            colors[v] = c;
            if backtrack(g, k, colors, remaining - 1) {
                return true;
            }
            colors[v] = UNCOLORED;
        }
    }
    false
}
