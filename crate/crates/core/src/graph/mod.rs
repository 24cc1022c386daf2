//! Simple undirected graphs and the four exact invariants: diameter, girth,
//! clique number and chromatic number.

mod clique;
mod coloring;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::FiniteRing;
use crate::semigroup::SemigroupTable;

/// A natural number or ∞, used for diameters and girths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(n) => write!(f, "{n}"),
            Extended::Infinite => f.write_str("∞"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(n) => s.serialize_u64(*n as u64),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A finite cardinal or ℵ₀. Clique and chromatic numbers of the symbolic
/// infinite lattices are countably infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Finite(usize),
    CountablyInfinite,
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::CountablyInfinite => f.write_str("ℵ₀"),
        }
    }
}

impl Serialize for Cardinal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cardinal::Finite(n) => s.serialize_u64(*n as u64),
            Cardinal::CountablyInfinite => s.serialize_str("countably-infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub diameter: Extended,
    pub girth: Extended,
    pub clique: Cardinal,
    pub chromatic: Cardinal,
}

impl fmt::Display for InvariantBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "diam {}, gir {}, clq {}, χ {}",
            self.diameter, self.girth, self.clique, self.chromatic
        )
    }
}

/// JSON graph format: `{ "vertices": [...], "edges": [[i, j], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

/// Undirected simple graph with labelled vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            adj: vec![BitSet::new(n); n],
        }
    }

    /// Graph on `0..n` labelled by index.
    pub fn with_vertices(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(labels);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.len();
        if a >= n || b >= n {
            return Err(Error::UnknownElement {
                index: a.max(b),
                size: n,
            });
        }
        if a == b {
            return Err(Error::Invalid(format!("self-loop at vertex {a}")));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub(crate) fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    /// Breadth-first distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Extended {
        match self.distances_from(a)[b] {
            Some(d) => Extended::Finite(d),
            None => Extended::Infinite,
        }
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Supremum of pairwise distances: 0 for the empty graph, ∞ if disconnected.
    pub fn diameter(&self) -> Extended {
        let mut best = 0;
        for v in 0..self.len() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Extended::Infinite,
                }
            }
        }
        Extended::Finite(best)
    }

    /// A shortest cycle as a vertex sequence, or `None` if the graph is a forest.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some((len, ..)) = &best {
                    // Any cycle closed from here has length ≥ 2·dist[u] + 1.
                    if 2 * dist[u] + 1 >= *len {
                        break;
                    }
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.0) {
                            best = Some((len, u, w, parent.clone()));
                        }
                    }
                }
            }
        }
        let (_, u, w, parent) = best?;
        let path_to_root = |mut x: usize| {
            let mut p = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                p.push(x);
            }
            p
        };
        let mut pu = path_to_root(u);
        let mut pw = path_to_root(w);
        // Trim the shared tail down to the lowest common ancestor.
        while pu.len() >= 2 && pw.len() >= 2 && pu[pu.len() - 2] == pw[pw.len() - 2] {
            pu.pop();
            pw.pop();
        }
        pw.pop();
        pu.reverse();
        // pu: lca .. u; then w .. (child of lca)
        let mut cycle = pu;
        cycle.extend(pw);
        Some(cycle)
    }

    /// Length of a shortest cycle; ∞ for forests.
    pub fn girth(&self) -> Extended {
        match self.shortest_cycle() {
            Some(c) => Extended::Finite(c.len()),
            None => Extended::Infinite,
        }
    }

    /// A triangle `(a, b, c)` with `a < b < c`, if any.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (a, b) in self.edges() {
            if let Some(c) = self.adj[a].intersection(&self.adj[b]).iter().find(|&c| c > b) {
                return Some((a, b, c));
            }
        }
        None
    }

    /// A maximum clique (exact branch and bound).
    pub fn max_clique(&self, limits: &Limits) -> Result<Vec<usize>> {
        Limits::check("clique-vertices", limits.clique_vertices, self.len())?;
        Ok(clique::maximum_clique(self))
    }

    pub fn clique_number(&self, limits: &Limits) -> Result<usize> {
        self.max_clique(limits).map(|c| c.len())
    }

    /// A proper coloring with the minimum number of colors.
    pub fn optimal_coloring(&self, limits: &Limits) -> Result<Vec<usize>> {
        Limits::check("chromatic-vertices", limits.chromatic_vertices, self.len())?;
        let clique = self.max_clique(limits)?;
        Ok(coloring::optimal_coloring(self, &clique))
    }

    pub fn chromatic_number(&self, limits: &Limits) -> Result<usize> {
        let colors = self.optimal_coloring(limits)?;
        Ok(colors.iter().map(|&c| c + 1).max().unwrap_or(0))
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.len() && self.edges().iter().all(|&(a, b)| colors[a] != colors[b])
    }

    pub fn invariants(&self, limits: &Limits) -> Result<InvariantBundle> {
        Ok(InvariantBundle {
            diameter: self.diameter(),
            girth: self.girth(),
            clique: Cardinal::Finite(self.clique_number(limits)?),
            chromatic: Cardinal::Finite(self.chromatic_number(limits)?),
        })
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let edges: Vec<_> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(json.vertices.clone(), &edges)
    }

    /// Graphviz export; output depends only on vertex order and labels.
    pub fn to_dot(&self, name: &str) -> String {
        let quote = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = format!("graph \"{}\" {{\n", quote(name));
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{}\"];\n", quote(l)));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Γ(S): nonzero zero-divisors in index order, adjacent when their product is zero.
pub fn zero_divisor_graph(s: &SemigroupTable) -> SimpleGraph {
    let zd = s.zero_divisors();
    let mut g = SimpleGraph::new(zd.iter().map(|&x| s.label(x).to_string()).collect());
    for (i, &a) in zd.iter().enumerate() {
        for (j, &b) in zd.iter().enumerate().skip(i + 1) {
            if s.mul(a, b) == s.zero() {
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
    }
    g
}

/// Beck's graph Γ₀(R): every element is a vertex, `a—b` when `a ≠ b` and `ab = 0`.
pub fn beck_gamma0(r: &FiniteRing) -> SimpleGraph {
    let n = r.order();
    let mut g = SimpleGraph::new(r.labels().to_vec());
    for a in 0..n {
        for b in a + 1..n {
            if r.mul(a, b) == r.zero() {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
    }
    g
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    pub(crate) fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(n);
        for a in 0..n {
            g.add_edge(a, (a + 1) % n).unwrap();
        }
        g
    }

    fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(n);
        for a in 1..n {
            g.add_edge(a - 1, a).unwrap();
        }
        g
    }

    fn zn(n: usize) -> SemigroupTable {
        SemigroupTable::from_fn((0..n).map(|i| i.to_string()).collect(), 0, |a, b| a * b % n)
            .unwrap()
    }

    #[test]
    fn rejects_self_loops() {
        let mut g = SimpleGraph::with_vertices(2);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 2).is_err());
    }

    #[test]
    fn diameters() {
        assert_eq!(complete(3).diameter(), Extended::Finite(1));
        assert_eq!(path(3).diameter(), Extended::Finite(2));
        assert_eq!(SimpleGraph::with_vertices(0).diameter(), Extended::Finite(0));
        assert_eq!(SimpleGraph::with_vertices(1).diameter(), Extended::Finite(0));
        let two_edges = SimpleGraph::from_edges(
            (0..4).map(|i| i.to_string()).collect(),
            &[(0, 1), (2, 3)],
        )
        .unwrap();
        assert_eq!(two_edges.diameter(), Extended::Infinite);
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn girths() {
        assert_eq!(complete(3).girth(), Extended::Finite(3));
        assert_eq!(path(5).girth(), Extended::Infinite);
        assert_eq!(cycle(4).girth(), Extended::Finite(4));
        assert_eq!(cycle(7).girth(), Extended::Finite(7));
        let c = cycle(6).shortest_cycle().unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        // Two triangles sharing a vertex plus a long tail.
        let g = SimpleGraph::from_edges(
            (0..7).map(|i| i.to_string()).collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6)],
        )
        .unwrap();
        let c = g.shortest_cycle().unwrap();
        assert_eq!(c.len(), 3);
        for i in 0..c.len() {
            assert!(g.adjacent(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::with_vertices(0).is_connected());
        assert!(SimpleGraph::with_vertices(1).is_connected());
        assert!(zero_divisor_graph(&zn(6)).is_connected());
    }

    #[test]
    fn gamma_z6() {
        let g = zero_divisor_graph(&zn(6));
        assert_eq!(g.labels(), ["2", "3", "4"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let inv = g.invariants(&Limits::default()).unwrap();
        assert_eq!(inv.diameter, Extended::Finite(2));
        assert_eq!(inv.girth, Extended::Infinite);
        assert_eq!(inv.clique, Cardinal::Finite(2));
        assert_eq!(inv.chromatic, Cardinal::Finite(2));
    }

    #[test]
    fn gamma_of_field_is_empty() {
        let g = zero_divisor_graph(&zn(7));
        assert!(g.is_empty());
        assert_eq!(g.clique_number(&Limits::default()).unwrap(), 0);
        assert_eq!(g.chromatic_number(&Limits::default()).unwrap(), 0);
    }

    #[test]
    fn guards_fire() {
        let limits = Limits {
            clique_vertices: 2,
            ..Limits::default()
        };
        assert!(matches!(
            complete(3).clique_number(&limits),
            Err(Error::GuardExceeded { guard: "clique-vertices", .. })
        ));
    }

    #[test]
    fn dot_and_json() {
        let g = zero_divisor_graph(&zn(6));
        let dot = g.to_dot("Γ(Z_6)");
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot, g.to_dot("Γ(Z_6)"));
        let empty = SimpleGraph::with_vertices(0).to_dot("empty");
        assert_eq!(empty, "graph \"empty\" {\n}\n");
        let back = SimpleGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        let quoted = SimpleGraph::new(vec!["a\"b".into()]).to_dot("q");
        assert!(quoted.contains("label=\"a\\\"b\""));
    }
}
