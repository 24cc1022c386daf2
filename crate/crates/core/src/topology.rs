//! Finite topological spaces given by their closed sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::{SemigroupMap, SemigroupTable};

/// JSON space format: `{ "points": [...], "closed": [[i, ...], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub closed: Vec<Vec<usize>>,
}

/// A finite space. Closed sets are bit masks over the points, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: Vec<String>,
    closed: Vec<u64>,
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.closed.iter().map(|&m| self.set_label(m)).collect();
        write!(f, "FiniteSpace({})", sets.join(" "))
    }
}

pub(crate) fn mask_iter(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl FiniteSpace {
    pub fn new(points: Vec<String>, closed: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::with_limits(points, closed, &Limits::default())
    }

    pub fn with_limits(
        points: Vec<String>,
        closed: impl IntoIterator<Item = u64>,
        limits: &Limits,
    ) -> Result<Self> {
        let n = points.len();
        Limits::check("points", limits.points.min(64), n)?;
        let full = full_mask(n);
        let set: BTreeSet<u64> = closed.into_iter().collect();
        if let Some(&m) = set.iter().find(|&&m| m & !full != 0) {
            return Err(Error::Invalid(format!("closed set {m:#b} names a missing point")));
        }
        if !set.contains(&0) || !set.contains(&full) {
            return Err(Error::Invalid("closed sets must include ∅ and the whole space".into()));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&(a | b)) || !set.contains(&(a & b)) {
                    return Err(Error::Invalid(
                        "closed sets are not closed under union and intersection".into(),
                    ));
                }
            }
        }
        Ok(FiniteSpace {
            points,
            closed: set.into_iter().collect(),
        })
    }

    /// Builds a space from its open sets.
    pub fn from_open_sets(points: Vec<String>, open: impl IntoIterator<Item = u64>) -> Result<Self> {
        let full = full_mask(points.len());
        let closed: Vec<u64> = open.into_iter().map(|o| full & !o).collect();
        Self::new(points, closed)
    }

    pub fn from_json(json: &SpaceJson, limits: &Limits) -> Result<Self> {
        let n = json.points.len();
        let mut masks = Vec::new();
        for c in &json.closed {
            let mut m = 0u64;
            for &i in c {
                if i >= n {
                    return Err(Error::UnknownElement { index: i, size: n });
                }
                m |= 1 << i;
            }
            masks.push(m);
        }
        Self::with_limits(json.points.clone(), masks, limits)
    }

    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            points: self.points.clone(),
            closed: self.closed.iter().map(|&m| mask_iter(m).collect()).collect(),
        }
    }

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn discrete(n: usize) -> Self {
        let closed = 0..=full_mask(n);
        Self::new(Self::numbered(n), closed).expect("power set is a topology")
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::new(Self::numbered(n), [0, full_mask(n)]).expect("indiscrete topology")
    }

    /// Points `open`, `closed`; closed sets ∅, {closed}, X.
    pub fn sierpinski() -> Self {
        Self::new(vec!["open".into(), "closed".into()], [0b00, 0b10, 0b11]).expect("valid")
    }

    /// Points a, b, c with closed sets ∅, {c}, X: pearled but not T0.
    pub fn pearled_not_t0() -> Self {
        Self::new(vec!["a".into(), "b".into(), "c".into()], [0b000, 0b100, 0b111]).expect("valid")
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn closed_sets(&self) -> &[u64] {
        &self.closed
    }

    pub fn full(&self) -> u64 {
        full_mask(self.len())
    }

    pub fn is_closed(&self, m: u64) -> bool {
        self.closed.binary_search(&m).is_ok()
    }

    pub fn is_open(&self, m: u64) -> bool {
        self.is_closed(self.full() & !m)
    }

    /// Smallest closed superset of `m`.
    pub fn closure(&self, m: u64) -> u64 {
        self.closed
            .iter()
            .copied()
            .filter(|&c| c & m == m)
            .fold(self.full(), |acc, c| acc & c)
    }

    /// Mask of the points whose singleton is closed.
    pub fn closed_points(&self) -> u64 {
        (0..self.len())
            .filter(|&i| self.is_closed(1 << i))
            .fold(0, |acc, i| acc | 1 << i)
    }

    pub fn set_label(&self, m: u64) -> String {
        if m == 0 {
            return "∅".into();
        }
        let names: Vec<&str> = mask_iter(m).map(|i| self.points[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn is_t0(&self) -> bool {
        let cl: Vec<u64> = (0..self.len()).map(|i| self.closure(1 << i)).collect();
        let distinct: BTreeSet<u64> = cl.iter().copied().collect();
        distinct.len() == cl.len()
    }

    pub fn is_t1(&self) -> bool {
        self.closed_points() == self.full()
    }

    /// Every singleton is open or closed.
    pub fn is_t_half(&self) -> bool {
        (0..self.len()).all(|i| self.is_closed(1 << i) || self.is_open(1 << i))
    }

    /// Every nonempty closed set contains a closed point.
    pub fn is_pearled(&self) -> bool {
        let cp = self.closed_points();
        self.closed.iter().all(|&c| c == 0 || c & cp != 0)
    }

    /// Length of the longest strictly descending chain of closed sets.
    pub fn longest_descending_chain(&self) -> usize {
        // closed is sorted numerically, so every proper subset precedes its superset.
        let mut best = vec![1usize; self.closed.len()];
        for i in 0..self.closed.len() {
            for j in 0..i {
                let (a, b) = (self.closed[j], self.closed[i]);
                if a & b == a && a != b {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    pub fn axiom_suite(&self) -> AxiomFlags {
        let t0 = self.is_t0();
        let t1 = self.is_t1();
        let t_half = self.is_t_half();
        let pearled = self.is_pearled();
        let chain = self.longest_descending_chain();
        let noetherian = chain <= self.closed.len();
        let mut violations = Vec::new();
        let mut arrow = |holds: bool, name: &str| {
            if !holds {
                violations.push(name.to_string());
            }
        };
        arrow(!t1 || t_half, "T1 ⇒ T½");
        arrow(!t_half || t0, "T½ ⇒ T0");
        arrow(!t_half || pearled, "T½ ⇒ pearled");
        arrow(!(noetherian && t0) || pearled, "Noetherian ∧ T0 ⇒ pearled");
        AxiomFlags {
            t0,
            t1,
            t_half,
            pearled,
            noetherian,
            longest_chain: chain,
            violations,
        }
    }

    /// Subspace on the closed points. Requires a pearled space.
    pub fn prl(&self) -> Result<FiniteSpace> {
        self.require_pearled()?;
        let y = self.closed_points();
        let keep: Vec<usize> = mask_iter(y).collect();
        let squeeze = |m: u64| {
            keep.iter()
                .enumerate()
                .filter(|(_, &p)| m >> p & 1 == 1)
                .fold(0u64, |acc, (k, _)| acc | 1 << k)
        };
        let points = keep.iter().map(|&p| self.points[p].clone()).collect();
        let sub = FiniteSpace::new(points, self.closed.iter().map(|&c| squeeze(c & y)))?;
        if !sub.is_t1() {
            return Err(Error::NotT1 {
                point: sub.set_label(sub.full() & !sub.closed_points()),
            });
        }
        Ok(sub)
    }

    fn require_pearled(&self) -> Result<()> {
        let cp = self.closed_points();
        match self.closed.iter().find(|&&c| c != 0 && c & cp == 0) {
            Some(&c) => Err(Error::NotPearled {
                closed_set: self.set_label(c),
            }),
            None => Ok(()),
        }
    }

    /// `(σ(X), ∩)`, elements in the order of [`Self::closed_sets`].
    pub fn closure_lattice(&self) -> SemigroupTable {
        let labels = self.closed.iter().map(|&m| self.set_label(m)).collect();
        let pos = |m: u64| self.closed.binary_search(&m).expect("closed under ∩");
        SemigroupTable::from_fn_trusted(labels, 0, |a, b| pos(self.closed[a] & self.closed[b]))
    }

    /// `α: σ(X) → σ(Prl X)`, `C ↦ C ∩ Prl X`.
    pub fn alpha_map(&self) -> Result<SemigroupMap> {
        let y = self.prl()?;
        let keep: Vec<usize> = mask_iter(self.closed_points()).collect();
        let assignment = self
            .closed
            .iter()
            .map(|&c| {
                let m = keep
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| c >> p & 1 == 1)
                    .fold(0u64, |acc, (k, _)| acc | 1 << k);
                y.closed.binary_search(&m).expect("image is closed")
            })
            .collect();
        SemigroupMap::new(self.closure_lattice(), y.closure_lattice(), assignment)
    }

    /// Every topology on `n` points, each as a closed-set family. Feasible for `n ≤ 4`.
    pub fn all_topologies(n: usize) -> Vec<FiniteSpace> {
        assert!(n <= 4, "2^(2^n - 2) candidate families");
        let full = full_mask(n);
        let middle: Vec<u64> = (1..full).collect();
        let mut out = Vec::new();
        for pick in 0u64..1 << middle.len() {
            let mut fam: Vec<u64> = vec![0, full];
            fam.extend(mask_iter(pick).map(|i| middle[i]));
            let set: BTreeSet<u64> = fam.iter().copied().collect();
            let closed = set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&(a | b)) && set.contains(&(a & b))));
            if closed {
                out.push(FiniteSpace {
                    points: Self::numbered(n),
                    closed: set.into_iter().collect(),
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFlags {
    pub t0: bool,
    pub t1: bool,
    pub t_half: bool,
    pub pearled: bool,
    pub noetherian: bool,
    pub longest_chain: usize,
    /// Implication arrows that failed; always empty for a correct evaluation.
    pub violations: Vec<String>,
}

/// A closed set of the ℕ₀ space: `∅` or `[n, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum N0Closed {
    Empty,
    From(u64),
}

impl N0Closed {
    pub fn contains(self, k: u64) -> bool {
        matches!(self, N0Closed::From(n) if k >= n)
    }
}

impl fmt::Display for N0Closed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            N0Closed::Empty => f.write_str("∅"),
            N0Closed::From(n) => write!(f, "[{n}, ∞)"),
        }
    }
}

/// The space ℕ₀ whose nonempty closed sets are the rays `[n, ∞)`.
#[derive(Debug, Clone, Copy)]
pub struct N0Space;

impl N0Space {
    pub fn closure_of_point(self, n: u64) -> N0Closed {
        N0Closed::From(n)
    }

    /// `[n, ∞)` properly contains the nonempty closed set `[n+1, ∞)`, so no
    /// nonempty closed set is minimal and no singleton is closed.
    pub fn strictly_smaller(self, c: N0Closed) -> Option<N0Closed> {
        match c {
            N0Closed::Empty => None,
            N0Closed::From(n) => Some(N0Closed::From(n + 1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct N0Report {
    pub n_max: u64,
    pub t0_on_window: bool,
    pub closed_points_in_window: Vec<u64>,
    pub pearled: bool,
    pub certificate: String,
}

/// Checks T0 on `{0, …, n_max}` and certifies that no point is closed.
pub fn n0_space_window(n_max: u64) -> N0Report {
    let x = N0Space;
    let window = 0..=n_max;
    let t0_on_window = window.clone().all(|m| {
        (m + 1..=n_max).all(|n| {
            // m ∉ cl{n} separates m from n.
            !x.closure_of_point(n).contains(m) && x.closure_of_point(m) != x.closure_of_point(n)
        })
    });
    let mut closed_points_in_window = Vec::new();
    let mut certified = true;
    for n in window {
        let c = x.closure_of_point(n);
        match x.strictly_smaller(c) {
            Some(d) if c.contains(n) && !d.contains(n) && d.contains(n + 1) => {}
            _ => {
                certified = false;
                closed_points_in_window.push(n);
            }
        }
    }
    N0Report {
        n_max,
        t0_on_window,
        closed_points_in_window,
        pearled: !certified,
        certificate: "every nonempty closed [n, ∞) properly contains the nonempty closed [n+1, ∞); \
                      hence no closed point exists and the space is not pearled"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{zero_divisor_graph, Extended};
    use crate::semigroup::{armendariz_invariant_suite, check_armendariz, check_homomorphism};

    #[test]
    fn rejects_non_topologies() {
        let pts = || vec!["a".to_string(), "b".to_string()];
        assert!(FiniteSpace::new(pts(), [0b01, 0b11]).is_err());
        assert!(FiniteSpace::new(pts(), [0b00, 0b01, 0b10]).is_err());
        assert!(FiniteSpace::new(pts(), [0b00, 0b01, 0b10, 0b11]).is_ok());
        assert!(FiniteSpace::new(pts(), [0, 0b100, 0b11]).is_err());
    }

    #[test]
    fn counterexamples() {
        let s = FiniteSpace::sierpinski().axiom_suite();
        assert!(s.t_half && !s.t1 && s.t0 && s.pearled);
        let p = FiniteSpace::pearled_not_t0().axiom_suite();
        assert!(p.pearled && !p.t0);
        let d = FiniteSpace::discrete(3).axiom_suite();
        assert!(d.t0 && d.t1 && d.t_half && d.pearled && d.noetherian);
        for f in [s, p, d] {
            assert!(f.violations.is_empty());
        }
    }

    #[test]
    fn n0_window() {
        for n in [1, 5, 40] {
            let r = n0_space_window(n);
            assert!(r.t0_on_window && !r.pearled);
            assert!(r.closed_points_in_window.is_empty());
        }
        assert_eq!(N0Space.closure_of_point(3).to_string(), "[3, ∞)");
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| FiniteSpace::all_topologies(n).len()).collect();
        assert_eq!(counts, [1, 1, 4, 29, 355]);
    }

    #[test]
    fn prl_examples() {
        let x = FiniteSpace::pearled_not_t0();
        let y = x.prl().unwrap();
        assert_eq!(y.points(), ["c"]);
        assert_eq!(FiniteSpace::discrete(3).prl().unwrap(), FiniteSpace::discrete(3));
        assert_eq!(FiniteSpace::sierpinski().prl().unwrap().points(), ["closed"]);
        let ind = FiniteSpace::indiscrete(2);
        assert!(!ind.is_pearled());
        assert!(ind.prl().is_err());
    }

    #[test]
    fn closure_lattices() {
        let g = zero_divisor_graph(&FiniteSpace::discrete(2).closure_lattice());
        assert_eq!((g.len(), g.edge_count()), (2, 1));
        let g = zero_divisor_graph(&FiniteSpace::indiscrete(3).closure_lattice());
        assert!(g.is_empty());
        let g = zero_divisor_graph(&FiniteSpace::discrete(3).closure_lattice());
        assert_eq!(g.len(), 6);
        assert_eq!(g.diameter(), Extended::Finite(3));
        assert_eq!(g.girth(), Extended::Finite(3));
        assert!(FiniteSpace::discrete(3).closure_lattice().is_nilpotent_free());
    }

    #[test]
    fn alpha_maps() {
        let x = FiniteSpace::pearled_not_t0();
        let a = x.alpha_map().unwrap();
        assert!(check_armendariz(&a).is_armendariz());
        assert!(check_homomorphism(&a).holds);
        assert_eq!(a.target().len(), 2);
        let s = FiniteSpace::sierpinski().alpha_map().unwrap();
        assert_eq!((s.source().len(), s.target().len()), (3, 2));
        let d = FiniteSpace::discrete(3).alpha_map().unwrap();
        assert!(d.assignment().iter().enumerate().all(|(i, &j)| i == j));
        for x in FiniteSpace::all_topologies(4).into_iter().filter(FiniteSpace::is_pearled) {
            let a = x.alpha_map().unwrap();
            assert!(check_armendariz(&a).is_armendariz(), "{x:?}");
            assert!(armendariz_invariant_suite(&a, &Limits::default()).unwrap().passed());
        }
    }

    #[test]
    fn non_pearled_rejected() {
        // closed sets ∅, {0,1}, X on three points: {0,1} has no closed point.
        let x = FiniteSpace::new(vec!["0".into(), "1".into(), "2".into()], [0, 0b011, 0b111]).unwrap();
        assert!(!x.is_pearled());
        assert!(matches!(x.prl(), Err(Error::NotPearled { .. })));
        assert!(x.alpha_map().is_err());
    }

    #[test]
    fn open_set_converter() {
        let x = FiniteSpace::from_open_sets(vec!["open".into(), "closed".into()], [0b00, 0b01, 0b11])
            .unwrap();
        assert_eq!(x, FiniteSpace::sierpinski());
        let j = x.to_json();
        assert_eq!(FiniteSpace::from_json(&j, &Limits::default()).unwrap(), x);
    }
}
