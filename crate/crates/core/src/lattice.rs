//! Subset lattices: finite families closed under ∪ and ∩, and the symbolic
//! lattice of finite subsets of ℕ together with ℕ itself.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{zero_divisor_graph, Cardinal, Extended, InvariantBundle, SimpleGraph};
use crate::limits::Limits;
use crate::semigroup::SemigroupTable;
use crate::topology::{mask_iter, FiniteSpace};

/// A member of the symbolic lattice: a finite subset of ℕ, or ℕ itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LatticeElement {
    Finite(BTreeSet<u64>),
    Whole,
}

impl LatticeElement {
    pub fn finite(items: impl IntoIterator<Item = u64>) -> Self {
        LatticeElement::Finite(items.into_iter().collect())
    }

    pub fn meet(&self, other: &Self) -> Self {
        match (self, other) {
            (LatticeElement::Whole, x) | (x, LatticeElement::Whole) => x.clone(),
            (LatticeElement::Finite(a), LatticeElement::Finite(b)) => {
                LatticeElement::Finite(a.intersection(b).copied().collect())
            }
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        match (self, other) {
            (LatticeElement::Whole, _) | (_, LatticeElement::Whole) => LatticeElement::Whole,
            (LatticeElement::Finite(a), LatticeElement::Finite(b)) => {
                LatticeElement::Finite(a.union(b).copied().collect())
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, LatticeElement::Finite(a) if a.is_empty())
    }

    /// A vertex of Γ: nonempty and not the whole ground set.
    pub fn is_vertex(&self) -> bool {
        matches!(self, LatticeElement::Finite(a) if !a.is_empty())
    }

    /// The canonical element used by the choice coloring: the minimum.
    pub fn choice(&self) -> Option<u64> {
        match self {
            LatticeElement::Finite(a) => a.first().copied(),
            LatticeElement::Whole => Some(0),
        }
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeElement::Whole => f.write_str("ℕ"),
            LatticeElement::Finite(a) if a.is_empty() => f.write_str("∅"),
            LatticeElement::Finite(a) => {
                let parts: Vec<String> = a.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// Adjacency in Γ of the symbolic lattice.
pub fn symbolic_adjacent(a: &LatticeElement, b: &LatticeElement) -> bool {
    a != b && a.is_vertex() && b.is_vertex() && a.meet(b).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetLattice {
    /// An explicit family over a finite ground set.
    Finite(FiniteSpace),
    /// Finite subsets of ℕ plus ℕ: the closed sets of the cofinite topology.
    SymbolicCofinite,
}

impl SubsetLattice {
    pub fn power_set(n: usize) -> Self {
        SubsetLattice::Finite(FiniteSpace::discrete(n))
    }

    pub fn from_family(ground: Vec<String>, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        FiniteSpace::new(ground, members).map(SubsetLattice::Finite)
    }

    pub fn ground_size(&self) -> Cardinal {
        match self {
            SubsetLattice::Finite(x) => Cardinal::Finite(x.len()),
            SubsetLattice::SymbolicCofinite => Cardinal::CountablyInfinite,
        }
    }

    /// Every singleton is a member. Automatic in the symbolic lattice.
    pub fn is_t1(&self) -> bool {
        match self {
            SubsetLattice::Finite(x) => x.is_t1(),
            SubsetLattice::SymbolicCofinite => true,
        }
    }

    fn require_t1(&self) -> Result<()> {
        match self {
            SubsetLattice::Finite(x) if !x.is_t1() => {
                let missing = mask_iter(x.full() & !x.closed_points()).next().expect("not T1");
                Err(Error::NotT1 {
                    point: x.points()[missing].clone(),
                })
            }
            _ => Ok(()),
        }
    }

    /// Members `A, B ≠ Y` with `A ∪ B = Y`, if any.
    pub fn reducibility_witness(&self) -> Option<(u64, u64)> {
        let SubsetLattice::Finite(x) = self else {
            return None;
        };
        let full = x.full();
        let sets = x.closed_sets();
        sets.iter()
            .filter(|&&a| a != full)
            .flat_map(|&a| sets.iter().filter(|&&b| b != full).map(move |&b| (a, b)))
            .find(|&(a, b)| a | b == full)
    }

    /// For all `A, B ≠ Y`, `A ∪ B ≠ Y`. In the symbolic lattice a union of
    /// two finite sets is finite, so this holds structurally.
    pub fn is_irreducible(&self) -> bool {
        self.reducibility_witness().is_none()
    }

    /// Members `A, B ∉ {∅, Y}` with `A ∩ B = ∅` and `A ∪ B = Y`, if any.
    pub fn disconnection(&self) -> Option<(u64, u64)> {
        let SubsetLattice::Finite(x) = self else {
            return None;
        };
        let full = x.full();
        let inner: Vec<u64> = x.closed_sets().iter().copied().filter(|&a| a != 0 && a != full).collect();
        inner
            .iter()
            .flat_map(|&a| inner.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| a & b == 0 && a | b == full)
    }

    pub fn is_connected(&self) -> bool {
        self.disconnection().is_none()
    }

    /// `(L, ∩)` for a finite lattice.
    pub fn semigroup(&self) -> Option<SemigroupTable> {
        match self {
            SubsetLattice::Finite(x) => Some(x.closure_lattice()),
            SubsetLattice::SymbolicCofinite => None,
        }
    }

    pub fn graph(&self) -> Option<SimpleGraph> {
        self.semigroup().map(|s| zero_divisor_graph(&s))
    }
}

/// Searches random pairs of finite sets for `A ∪ B = ℕ`. There are none: the
/// union of two finite sets is finite.
pub fn symbolic_irreducibility_search(rng: &mut impl Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let a = random_finite(rng, 8, 40);
        let b = random_finite(rng, 8, 40);
        a.join(&b) != LatticeElement::Whole
    })
}

pub(crate) fn random_finite(rng: &mut impl Rng, max_len: usize, range: u64) -> LatticeElement {
    let len = rng.gen_range(0..=max_len);
    LatticeElement::finite((0..len).map(|_| rng.gen_range(0..range)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharReport {
    /// `ver Γ(L) = L \ {∅, Y}`.
    pub vertex_set_ok: bool,
    pub irreducible: bool,
    pub all_pairs_path_two: bool,
    pub connected: bool,
    pub all_edges_in_triangle: bool,
    pub passed: bool,
}

/// Checks both graph characterizations of irreducible and connected lattices.
pub fn char_check_irr_conn(l: &SubsetLattice) -> Result<CharReport> {
    l.require_t1()?;
    let SubsetLattice::Finite(x) = l else {
        return Err(Error::Invalid("characterization check needs a finite lattice".into()));
    };
    let s = x.closure_lattice();
    let g = zero_divisor_graph(&s);
    let full = x.full();
    let expected: Vec<String> = x
        .closed_sets()
        .iter()
        .filter(|&&a| a != 0 && a != full)
        .map(|&a| x.set_label(a))
        .collect();
    let vertex_set_ok = g.labels() == expected.as_slice();
    let n = g.len();
    let common_neighbor = |a: usize, b: usize| {
        g.neighbor_set(a).intersects(g.neighbor_set(b))
    };
    let all_pairs_path_two = (0..n).all(|a| (a + 1..n).all(|b| common_neighbor(a, b)));
    let all_edges_in_triangle = g.edges().iter().all(|&(a, b)| common_neighbor(a, b));
    let irreducible = l.is_irreducible();
    let connected = l.is_connected();
    let passed = vertex_set_ok
        && irreducible == all_pairs_path_two
        && connected == all_edges_in_triangle;
    Ok(CharReport {
        vertex_set_ok,
        irreducible,
        all_pairs_path_two,
        connected,
        all_edges_in_triangle,
        passed,
    })
}

/// Constructive evidence for the symbolic lattice's invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicWitnesses {
    /// `{y}` and `{y, z}` meet, and `{w}` is adjacent to both.
    pub distance_two: (LatticeElement, LatticeElement, LatticeElement),
    pub triangle: [LatticeElement; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T1Report {
    pub ground: Cardinal,
    pub case: &'static str,
    pub invariants: InvariantBundle,
    pub expected_diameter: Option<Extended>,
    pub expected_girth: Option<Extended>,
    pub empty_expected: bool,
    pub witnesses: Option<SymbolicWitnesses>,
    pub passed: bool,
}

/// `{0}`, `{0,1}` at distance two through `{2}`.
pub fn distance_two_witness() -> (LatticeElement, LatticeElement, LatticeElement) {
    (
        LatticeElement::finite([0]),
        LatticeElement::finite([0, 1]),
        LatticeElement::finite([2]),
    )
}

/// `n` pairwise disjoint singletons.
pub fn clique_witness(n: u64) -> Vec<LatticeElement> {
    (0..n).map(|i| LatticeElement::finite([i])).collect()
}

/// A pairwise-adjacent check for a candidate clique.
pub fn is_symbolic_clique(vs: &[LatticeElement]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, a)| vs[i + 1..].iter().all(|b| symbolic_adjacent(a, b)))
}

/// The choice coloring `c(A) = min A` is proper on every adjacent pair among `sample`.
pub fn choice_coloring_is_proper(sample: &[LatticeElement]) -> bool {
    sample.iter().all(|a| {
        sample
            .iter()
            .filter(|b| symbolic_adjacent(a, b))
            .all(|b| a.choice() != b.choice())
    })
}

/// Graph invariants of a T1 lattice together with the expected case.
pub fn t1_invariants(l: &SubsetLattice, limits: &Limits) -> Result<T1Report> {
    l.require_t1()?;
    match l {
        SubsetLattice::SymbolicCofinite => {
            let (a, b, c) = distance_two_witness();
            let d2 = !symbolic_adjacent(&a, &b)
                && a != b
                && symbolic_adjacent(&a, &c)
                && symbolic_adjacent(&c, &b);
            let triangle = clique_witness(3);
            let tri_ok = is_symbolic_clique(&triangle);
            let triangle: [LatticeElement; 3] = triangle.try_into().expect("three singletons");
            Ok(T1Report {
                ground: Cardinal::CountablyInfinite,
                case: "infinite, irreducible",
                invariants: InvariantBundle {
                    diameter: Extended::Finite(2),
                    girth: Extended::Finite(3),
                    clique: Cardinal::CountablyInfinite,
                    chromatic: Cardinal::CountablyInfinite,
                },
                expected_diameter: Some(Extended::Finite(2)),
                expected_girth: Some(Extended::Finite(3)),
                empty_expected: false,
                witnesses: Some(SymbolicWitnesses {
                    distance_two: (a, b, c),
                    triangle,
                }),
                passed: d2 && tri_ok,
            })
        }
        SubsetLattice::Finite(x) => {
            let g = l.graph().expect("finite");
            let inv = g.invariants(limits)?;
            let y = x.len();
            let irreducible = l.is_irreducible();
            let (case, diam, gir, empty) = match y {
                0 | 1 => ("|Y| ≤ 1", None, None, true),
                2 => ("|Y| = 2", Some(Extended::Finite(1)), Some(Extended::Infinite), false),
                _ if irreducible => ("|Y| ≥ 3, irreducible", None, None, false),
                _ => ("|Y| ≥ 3, not irreducible", Some(Extended::Finite(3)), Some(Extended::Finite(3)), false),
            };
            let size_ok = x.closed_sets().len() == 1 << y;
            let case_ok = match y {
                0 | 1 => g.is_empty(),
                2 => g.len() == 2 && g.edge_count() == 1 && Some(inv.diameter) == diam && Some(inv.girth) == gir,
                // A finite irreducible T1 lattice on ≥ 3 points cannot exist.
                _ if irreducible => false,
                _ => Some(inv.diameter) == diam && Some(inv.girth) == gir,
            };
            let colors_ok = inv.clique == Cardinal::Finite(y) && inv.chromatic == Cardinal::Finite(y);
            Ok(T1Report {
                ground: Cardinal::Finite(y),
                case,
                invariants: inv,
                expected_diameter: diam,
                expected_girth: gir,
                empty_expected: empty,
                witnesses: None,
                passed: size_ok && case_ok && colors_ok,
            })
        }
    }
}

/// Every family of subsets of an `n`-point set that contains ∅, the whole set
/// and all singletons, and is closed under ∪ and ∩.
pub fn all_t1_families(n: usize) -> Vec<SubsetLattice> {
    FiniteSpace::all_topologies(n)
        .into_iter()
        .filter(FiniteSpace::is_t1)
        .map(SubsetLattice::Finite)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn power_set_table() {
        let r = t1_invariants(&SubsetLattice::power_set(3), &lim()).unwrap();
        assert!(r.passed);
        assert_eq!(r.invariants.diameter, Extended::Finite(3));
        assert_eq!(r.invariants.clique, Cardinal::Finite(3));
        let r = t1_invariants(&SubsetLattice::power_set(2), &lim()).unwrap();
        assert!(r.passed);
        assert_eq!(r.invariants.girth, Extended::Infinite);
        let r = t1_invariants(&SubsetLattice::power_set(0), &lim()).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn single_point_lattice_has_empty_graph() {
        // Γ is empty, so its clique number is 0 rather than |Y| = 1.
        let r = t1_invariants(&SubsetLattice::power_set(1), &lim()).unwrap();
        assert_eq!(r.invariants.clique, Cardinal::Finite(0));
        assert!(!r.passed);
    }

    #[test]
    fn non_t1_rejected() {
        let l = SubsetLattice::Finite(FiniteSpace::sierpinski());
        assert!(matches!(t1_invariants(&l, &lim()), Err(Error::NotT1 { .. })));
    }

    #[test]
    fn irreducible_and_connected() {
        assert!(!SubsetLattice::power_set(3).is_irreducible());
        assert!(SubsetLattice::SymbolicCofinite.is_irreducible());
        let l = SubsetLattice::from_family(vec!["a".into(), "b".into(), "c".into()], [0, 0b001, 0b110, 0b111])
            .unwrap();
        assert!(!l.is_connected());
        assert!(SubsetLattice::power_set(1).is_connected());
    }

    #[test]
    fn characterization() {
        for n in 0..=4 {
            let r = char_check_irr_conn(&SubsetLattice::power_set(n)).unwrap();
            assert!(r.passed, "{n}: {r:?}");
        }
        let r = char_check_irr_conn(&SubsetLattice::power_set(2)).unwrap();
        assert!(!r.connected && !r.all_edges_in_triangle);
    }

    #[test]
    fn t1_families_are_power_sets() {
        for n in 0..=4 {
            let fams = all_t1_families(n);
            assert_eq!(fams.len(), 1);
            assert_eq!(fams[0], SubsetLattice::power_set(n));
        }
    }

    #[test]
    fn symbolic() {
        let r = t1_invariants(&SubsetLattice::SymbolicCofinite, &lim()).unwrap();
        assert!(r.passed);
        assert!(is_symbolic_clique(&clique_witness(100)));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(symbolic_irreducibility_search(&mut rng, 500));
        let sample: Vec<_> = (0..200).map(|_| random_finite(&mut rng, 5, 30)).collect();
        assert!(choice_coloring_is_proper(&sample));
        assert_eq!(LatticeElement::finite([3, 1]).to_string(), "{1,3}");
        assert_eq!(LatticeElement::Whole.meet(&LatticeElement::finite([2])), LatticeElement::finite([2]));
    }

    #[test]
    fn symbolic_matches_finite_window() {
        // Proper nonempty subsets of a window adjoin exactly when they do in 2^window.
        let w = 4;
        let fin = SubsetLattice::power_set(w).graph().unwrap();
        let x = FiniteSpace::discrete(w);
        let inner: Vec<u64> = x.closed_sets().iter().copied().filter(|&m| m != 0 && m != x.full()).collect();
        let as_elem = |m: u64| LatticeElement::finite(mask_iter(m).map(|i| i as u64));
        for (i, &a) in inner.iter().enumerate() {
            for (j, &b) in inner.iter().enumerate() {
                assert_eq!(fin.adjacent(i, j), symbolic_adjacent(&as_elem(a), &as_elem(b)));
            }
        }
    }
}
