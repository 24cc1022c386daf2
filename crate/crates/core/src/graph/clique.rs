//! Maximum clique by branch and bound, pruning with greedy coloring bounds.

use crate::bits::BitSet;

use super::SimpleGraph;

pub(super) fn maximum_clique(g: &SimpleGraph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let candidates = BitSet::full(g.len());
    expand(g, candidates, &mut current, &mut best);
    best.sort_unstable();
    best
}

/// Greedy sequential coloring of `cand`. Returns vertices ordered by color
/// class together with the color number of each, which bounds the size of
/// any clique inside the prefix ending there.
fn color_sort(g: &SimpleGraph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count());
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.first() {
            available.remove(v);
            available.difference_with(g.neighbor_set(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand(g: &SimpleGraph, mut cand: BitSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = cand.intersection(g.neighbor_set(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, next, current, best);
        }
        current.pop();
        cand.remove(v);
    }
}
