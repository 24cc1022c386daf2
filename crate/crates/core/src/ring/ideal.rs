use std::collections::{HashMap, HashSet};

use serde::{Serialize, Serializer};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{zero_divisor_graph, Extended, InvariantBundle, SimpleGraph};
use crate::limits::Limits;
use crate::semigroup::{SemigroupTable, SuitePart};

use super::FiniteRing;

/// An ideal, stored as its member set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal(BitSet);

impl Ideal {
    pub fn members(&self) -> Vec<usize> {
        self.0.iter().collect()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn bits(&self) -> &BitSet {
        &self.0
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

impl FiniteRing {
    /// `Ra`.
    pub fn principal_ideal(&self, a: usize) -> Ideal {
        let n = self.order();
        Ideal(BitSet::from_indices(n, (0..n).map(|r| self.mul(r, a))))
    }

    /// Additive closure of two additive subgroups.
    fn subgroup_sum(&self, a: &BitSet, b: &BitSet) -> BitSet {
        if a.is_subset(b) {
            return b.clone();
        }
        if b.is_subset(a) {
            return a.clone();
        }
        let mut out = BitSet::new(self.order());
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// The smallest ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[usize]) -> Ideal {
        let mut acc = BitSet::from_indices(self.order(), [self.zero()]);
        for &g in gens {
            if !acc.contains(g) {
                acc = self.subgroup_sum(&acc, &self.principal_ideal(g).0);
            }
        }
        Ideal(acc)
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Ideal {
        Ideal(self.subgroup_sum(&i.0, &j.0))
    }

    /// `IJ`, the ideal generated by all products `ij`.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Ideal {
        let gi = self.greedy_generators(i);
        let gj = self.greedy_generators(j);
        let prods: Vec<usize> = gi
            .iter()
            .flat_map(|&a| gj.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .collect();
        self.ideal_generated(&prods)
    }

    /// Whether `set` contains 0 and is closed under `+` and under `R·`.
    pub fn is_ideal(&self, set: &BitSet) -> bool {
        set.contains(self.zero())
            && set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(self.add(a, b))))
            && set
                .iter()
                .all(|a| (0..self.order()).all(|r| set.contains(self.mul(r, a))))
    }

    /// Generators picked greedily in index order.
    pub fn greedy_generators(&self, i: &Ideal) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut acc = BitSet::from_indices(self.order(), [self.zero()]);
        for a in i.0.iter() {
            if !acc.contains(a) {
                acc = self.subgroup_sum(&acc, &self.principal_ideal(a).0);
                gens.push(a);
            }
        }
        gens
    }

    pub fn ideals(&self, limits: &Limits) -> Result<RingIdeals<'_>> {
        RingIdeals::new(self, limits)
    }

    /// Whether `I` is prime, tested over all pairs.
    pub fn is_ideal_prime(&self, i: &Ideal) -> bool {
        let n = self.order();
        if i.len() == n {
            return false;
        }
        (0..n).all(|a| i.contains(a) || (0..n).all(|b| i.contains(b) || !i.contains(self.mul(a, b))))
    }
}

/// Which ideal operation a semigroup of ideals uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealOp {
    Mult,
    Add,
}

#[derive(Debug, Clone)]
pub struct IdealSemigroup {
    pub ideals: Vec<Ideal>,
    pub op: IdealOp,
    pub table: SemigroupTable,
}

/// All ideals of a ring, in canonical order: by size, then by members.
#[derive(Debug, Clone)]
pub struct RingIdeals<'r> {
    ring: &'r FiniteRing,
    ideals: Vec<Ideal>,
    index: HashMap<BitSet, usize>,
}

impl<'r> RingIdeals<'r> {
    /// Principal ideals, then pairwise sums until nothing new appears.
    pub fn new(ring: &'r FiniteRing, limits: &Limits) -> Result<Self> {
        Limits::check("ring-order", limits.ring_order, ring.order())?;
        let mut seen: HashSet<BitSet> = HashSet::new();
        let mut list: Vec<BitSet> = Vec::new();
        for a in 0..ring.order() {
            let p = ring.principal_ideal(a).0;
            if seen.insert(p.clone()) {
                list.push(p);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..i {
                let s = ring.subgroup_sum(&list[i], &list[j]);
                if seen.insert(s.clone()) {
                    list.push(s);
                    Limits::check("ideals", limits.ideals, list.len())?;
                }
            }
            i += 1;
        }
        Limits::check("ideals", limits.ideals, list.len())?;
        list.sort_by_cached_key(|b| (b.count(), b.iter().collect::<Vec<_>>()));
        let index = list.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Ok(RingIdeals {
            ring,
            ideals: list.into_iter().map(Ideal).collect(),
            index,
        })
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn index_of(&self, i: &Ideal) -> Option<usize> {
        self.index.get(&i.0).copied()
    }

    fn lookup(&self, i: &Ideal) -> usize {
        self.index_of(i).expect("ideal list is complete")
    }

    pub fn zero_ideal(&self) -> usize {
        0
    }

    pub fn unit_ideal(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn sum(&self, i: usize, j: usize) -> usize {
        self.lookup(&self.ring.ideal_sum(&self.ideals[i], &self.ideals[j]))
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.lookup(&self.ring.ideal_product(&self.ideals[i], &self.ideals[j]))
    }

    /// `(0)`, `(1)`, or the greedy generators, e.g. `(2, 3)`.
    pub fn label(&self, i: usize) -> String {
        if i == self.zero_ideal() {
            return "(0)".into();
        }
        if i == self.unit_ideal() {
            return "(1)".into();
        }
        let gens: Vec<&str> = self
            .ring
            .greedy_generators(&self.ideals[i])
            .into_iter()
            .map(|g| self.ring.label(g))
            .collect();
        format!("({})", gens.join(", "))
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.label(i)).collect()
    }

    /// `(Id R, ·)` with absorbing `(0)`, or `(Id R, +)` with absorbing `R`.
    pub fn semigroup(&self, op: IdealOp) -> IdealSemigroup {
        let n = self.len();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = match op {
                    IdealOp::Mult => self.product(i, j),
                    IdealOp::Add => self.sum(i, j),
                };
                table[i * n + j] = v;
                table[j * n + i] = v;
            }
        }
        let zero = match op {
            IdealOp::Mult => self.zero_ideal(),
            IdealOp::Add => self.unit_ideal(),
        };
        IdealSemigroup {
            ideals: self.ideals.clone(),
            op,
            table: SemigroupTable::from_fn_trusted(self.labels(), zero, |a, b| table[a * n + b]),
        }
    }

    pub fn is_prime(&self, i: usize) -> bool {
        self.ring.is_ideal_prime(&self.ideals[i])
    }

    pub fn primes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_prime(i)).collect()
    }

    /// Proper ideals not strictly contained in another proper ideal.
    pub fn maximal(&self) -> Vec<usize> {
        let unit = self.unit_ideal();
        (0..unit)
            .filter(|&i| {
                (0..unit).all(|j| j == i || !self.ideals[i].is_subset(&self.ideals[j]))
            })
            .collect()
    }

    pub fn minimal_primes(&self) -> Vec<usize> {
        let primes = self.primes();
        primes
            .iter()
            .copied()
            .filter(|&p| {
                primes
                    .iter()
                    .all(|&q| q == p || !self.ideals[q].is_subset(&self.ideals[p]))
            })
            .collect()
    }

    /// Intersection of the maximal ideals (`R` for the zero ring).
    pub fn jacobson(&self) -> usize {
        let mut acc = BitSet::full(self.ring.order());
        for m in self.maximal() {
            acc.intersect_with(&self.ideals[m].0);
        }
        self.lookup(&Ideal(acc))
    }

    /// `V(I)`: the prime ideals containing `I`, as a set of positions in [`Self::primes`].
    pub fn v_of(&self, i: usize) -> BitSet {
        let primes = self.primes();
        BitSet::from_indices(
            primes.len(),
            primes
                .iter()
                .enumerate()
                .filter(|(_, &p)| self.ideals[i].is_subset(&self.ideals[p]))
                .map(|(k, _)| k),
        )
    }
}

/// Outcome of checking that the annihilating-ideal graph has girth 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgVerdict {
    pub reduced: bool,
    pub minimal_primes: usize,
    pub hypothesis_met: bool,
    pub girth: Extended,
    /// Labels of a 3-cycle of ideals, when one exists.
    pub witness: Option<[String; 3]>,
    pub passed: bool,
}

/// For reduced `R` with more than two minimal primes, `gir AG(R) = 3`.
pub fn ag_conjecture_check(r: &FiniteRing, limits: &Limits) -> Result<AgVerdict> {
    let ideals = r.ideals(limits)?;
    let sg = ideals.semigroup(IdealOp::Mult);
    let g = zero_divisor_graph(&sg.table);
    let reduced = r.is_reduced();
    let minimal_primes = ideals.minimal_primes().len();
    let hypothesis_met = reduced && minimal_primes > 2;
    let girth = g.girth();
    let witness = g
        .find_triangle()
        .map(|(a, b, c)| [a, b, c].map(|v| g.label(v).to_string()));
    let passed = !hypothesis_met || (girth == Extended::Finite(3) && witness.is_some());
    Ok(AgVerdict {
        reduced,
        minimal_primes,
        hypothesis_met,
        girth,
        witness,
        passed,
    })
}

/// The comaximal graph `Γ(Id R, +)` checked against the case split on `|Max R|`.
#[derive(Debug, Clone, Serialize)]
pub struct ComaximalReport {
    pub max_ideals: Vec<String>,
    pub jacobson: String,
    pub jacobson_prime: bool,
    pub invariants: InvariantBundle,
    pub parts: Vec<SuitePart>,
}

impl ComaximalReport {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(|p| p.passed)
    }
}

pub fn comaximal_suite(r: &FiniteRing, limits: &Limits) -> Result<ComaximalReport> {
    if r.order() < 2 {
        return Err(Error::Invalid("the zero ring has no maximal ideals".into()));
    }
    let ideals = r.ideals(limits)?;
    let sg = ideals.semigroup(IdealOp::Add);
    let g: SimpleGraph = zero_divisor_graph(&sg.table);
    let inv = g.invariants(limits)?;
    let max = ideals.maximal();
    let jac = ideals.jacobson();
    let jac_prime = ideals.is_prime(jac);
    let k = max.len();
    let fin = Extended::Finite;
    let card = crate::graph::Cardinal::Finite;
    let mut parts = Vec::new();

    parts.push(SuitePart {
        part: 1,
        claim: "χ(G″) = clq G″ = |Max R| (|Max R| ≥ 2)",
        applicable: k >= 2,
        passed: k < 2 || (inv.chromatic == card(k) && inv.clique == card(k)),
        detail: format!("χ {}, clq {}, |Max| {k}", inv.chromatic, inv.clique),
    });
    parts.push(SuitePart {
        part: 2,
        claim: "R local ⇒ G″ = ∅",
        applicable: k == 1,
        passed: k != 1 || g.is_empty(),
        detail: format!("{} vertices", g.len()),
    });

    let proper_nonmax: Vec<usize> = (0..ideals.unit_ideal()).filter(|i| !max.contains(i)).collect();
    let (diam_expected, gir_expected, detail3) = if k == 2 {
        let (m1, m2) = (ideals.ideal(max[0]), ideals.ideal(max[1]));
        let meet = Ideal(m1.bits().intersection(m2.bits()));
        let below_both = proper_nonmax.iter().all(|&i| ideals.ideal(i).is_subset(&meet));
        let crossing = |a: &Ideal, b: &Ideal| {
            proper_nonmax
                .iter()
                .map(|&i| ideals.ideal(i))
                .find(|j| j.is_subset(a) && !j.is_subset(b))
                .is_some()
        };
        let gir4 = crossing(m1, m2) && crossing(m2, m1);
        (
            fin(if below_both { 1 } else { 2 }),
            if gir4 { fin(4) } else { Extended::Infinite },
            format!("nonmaximal below m₁ ∩ m₂: {below_both}; crossing pair: {gir4}"),
        )
    } else {
        (fin(0), Extended::Infinite, String::new())
    };
    parts.push(SuitePart {
        part: 3,
        claim: "|Max R| = 2: diam G″ = 1 iff nonmaximal ideals lie in m₁ ∩ m₂, else 2",
        applicable: k == 2,
        passed: k != 2 || inv.diameter == diam_expected,
        detail: format!("diam {}; {detail3}", inv.diameter),
    });
    parts.push(SuitePart {
        part: 3,
        claim: "|Max R| = 2: gir G″ = 4 iff a crossing pair J₁, J₂ exists, else ∞",
        applicable: k == 2,
        passed: k != 2 || inv.girth == gir_expected,
        detail: format!("gir {}", inv.girth),
    });
    parts.push(SuitePart {
        part: 4,
        claim: "|Max R| ≥ 3 ⇒ gir G″ = 3",
        applicable: k >= 3,
        passed: k < 3 || inv.girth == fin(3),
        detail: format!("gir {}", inv.girth),
    });
    parts.push(SuitePart {
        part: 5,
        claim: "|Max R| ≥ 3 and Jac R prime ⇒ diam G″ = 2",
        applicable: k >= 3 && jac_prime,
        passed: !(k >= 3 && jac_prime) || inv.diameter == fin(2),
        detail: format!("diam {}", inv.diameter),
    });
    parts.push(SuitePart {
        part: 6,
        claim: "|Max R| ≥ 3 and Jac R not prime ⇒ diam G″ = 3",
        applicable: k >= 3 && !jac_prime,
        passed: !(k >= 3 && !jac_prime) || inv.diameter == fin(3),
        detail: format!("diam {}", inv.diameter),
    });

    Ok(ComaximalReport {
        max_ideals: max.iter().map(|&m| ideals.label(m)).collect(),
        jacobson: ideals.label(jac),
        jacobson_prime: jac_prime,
        invariants: inv,
        parts,
    })
}

/// Breadth-first additive closure; used as an independent oracle in tests.
#[cfg(test)]
fn additive_closure(r: &FiniteRing, gens: &[usize]) -> BitSet {
    let mut seen = BitSet::from_indices(r.order(), [r.zero()]);
    let mut queue = std::collections::VecDeque::from([r.zero()]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = r.add(x, g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}
