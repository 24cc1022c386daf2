//! Spectral posets: Spec and USpec as posets of primes whose closed sets are
//! unions of up-sets `V(p)`, the restriction to the maximal points, and the
//! case analysis on `|Max|`.

mod fan;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{zero_divisor_graph, Cardinal, Extended, InvariantBundle};
use crate::limits::Limits;
use crate::ring::FiniteRing;
use crate::semigroup::{armendariz_invariant_suite, check_armendariz, SemigroupMap, SuitePart};
use crate::topology::{mask_iter, FiniteSpace};

pub use fan::{verify_window, FanClosed, FanModel, MaxPart, SigmaHandle, SigmaMode, WindowReport};

/// JSON poset format: `{ "points": [...], "leq": [[i, j], ...] }` meaning `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub points: Vec<String>,
    pub leq: Vec<[usize; 2]>,
}

/// A finite poset of primes. `up[p]` is the mask of `V(p) = {q : p ≤ q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    points: Vec<String>,
    up: Vec<u64>,
}

impl FinitePoset {
    /// Takes the reflexive-transitive closure of `leq` and rejects cycles.
    pub fn new(points: Vec<String>, leq: &[[usize; 2]], limits: &Limits) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::Invalid("a spectrum has at least one point".into()));
        }
        Limits::check("points", limits.points.min(64), n)?;
        let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        for &[a, b] in leq {
            if a >= n || b >= n {
                return Err(Error::UnknownElement {
                    index: a.max(b),
                    size: n,
                });
            }
            up[a] |= 1 << b;
        }
        // Warshall on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1 {
                    return Err(Error::Invalid(format!(
                        "order is not antisymmetric: {} and {}",
                        points[i], points[j]
                    )));
                }
            }
        }
        Ok(FinitePoset { points, up })
    }

    pub fn from_json(json: &PosetJson, limits: &Limits) -> Result<Self> {
        Self::new(json.points.clone(), &json.leq, limits)
    }

    pub fn to_json(&self) -> PosetJson {
        let mut leq = Vec::new();
        for (i, &u) in self.up.iter().enumerate() {
            for j in mask_iter(u).filter(|&j| j != i) {
                leq.push([i, j]);
            }
        }
        PosetJson {
            points: self.points.clone(),
            leq,
        }
    }

    /// Prime ideals under inclusion.
    pub fn from_ring(r: &FiniteRing, limits: &Limits) -> Result<Self> {
        let ideals = r.ideals(limits)?;
        let primes = ideals.primes();
        let points = primes.iter().map(|&p| ideals.label(p)).collect();
        let mut leq = Vec::new();
        for (i, &p) in primes.iter().enumerate() {
            for (j, &q) in primes.iter().enumerate() {
                if i != j && ideals.ideal(p).is_subset(ideals.ideal(q)) {
                    leq.push([i, j]);
                }
            }
        }
        Self::new(points, &leq, limits)
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

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    pub fn v(&self, p: usize) -> u64 {
        self.up[p]
    }

    /// Minimal generators of an up-closed set: its minimal points.
    pub fn generators(&self, c: u64) -> Vec<usize> {
        mask_iter(c)
            .filter(|&p| !mask_iter(c).any(|q| q != p && self.leq(q, p)))
            .collect()
    }

    /// Mask of maximal points.
    pub fn maximal(&self) -> u64 {
        (0..self.len())
            .filter(|&p| self.up[p] == 1 << p)
            .fold(0, |acc, p| acc | 1 << p)
    }

    pub fn is_antichain(&self) -> bool {
        self.maximal().count_ones() as usize == self.len()
    }


    /// σ(Spec): all finite unions of the sets `V(p)`, generated by adjoining one `V(p)` at a time.
    pub fn spec_space(&self, limits: &Limits) -> Result<FiniteSpace> {
        let mut sets: BTreeSet<u64> = BTreeSet::from([0]);
        for p in 0..self.len() {
            let more: Vec<u64> = sets.iter().map(|&c| c | self.up[p]).collect();
            sets.extend(more);
            Limits::check("table", limits.table, sets.len())?;
        }
        FiniteSpace::with_limits(self.points.clone(), sets, limits)
    }

    /// σ(USpec): every union of sets `V(p)`, i.e. every up-closed subset,
    /// found by testing each subset directly.
    pub fn uspec_space(&self, limits: &Limits) -> Result<FiniteSpace> {
        let n = self.len();
        Limits::check("points", 24, n)?;
        let sets: Vec<u64> = (0..1u64 << n)
            .filter(|&c| mask_iter(c).all(|p| self.up[p] & c == self.up[p]))
            .collect();
        Limits::check("table", limits.table, sets.len())?;
        FiniteSpace::with_limits(self.points.clone(), sets, limits)
    }

    /// The subspace `Max` with closed sets `C ∩ Max`.
    pub fn max_space(&self, limits: &Limits) -> Result<FiniteSpace> {
        let max: Vec<usize> = mask_iter(self.maximal()).collect();
        let spec = self.spec_space(limits)?;
        let closed = spec.closed_sets().iter().map(|&c| squeeze(c, &max));
        FiniteSpace::with_limits(max.iter().map(|&m| self.points[m].clone()).collect(), closed, limits)
    }

    /// `C ↦ C ∩ Max` from σ(Spec) to σ(Max).
    pub fn restrict_to_max(&self, limits: &Limits) -> Result<SemigroupMap> {
        let spec = self.spec_space(limits)?;
        let max_sp = self.max_space(limits)?;
        let max: Vec<usize> = mask_iter(self.maximal()).collect();
        let assignment = spec
            .closed_sets()
            .iter()
            .map(|&c| {
                max_sp
                    .closed_sets()
                    .binary_search(&squeeze(c, &max))
                    .expect("image is closed")
            })
            .collect();
        SemigroupMap::new(spec.closure_lattice(), max_sp.closure_lattice(), assignment)
    }

    /// Whether `Max` is irreducible: no two proper closed subsets cover it.
    pub fn is_max_irreducible(&self, limits: &Limits) -> Result<bool> {
        let m = self.max_space(limits)?;
        let full = m.full();
        let proper: Vec<u64> = m.closed_sets().iter().copied().filter(|&c| c != full).collect();
        Ok(!proper.iter().any(|&a| proper.iter().any(|&b| a | b == full)))
    }
}

fn squeeze(c: u64, keep: &[usize]) -> u64 {
    keep.iter()
        .enumerate()
        .filter(|(_, &p)| c >> p & 1 == 1)
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

/// A spectral poset: finite, or a symbolic fan with infinitely many maximal points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralPoset {
    Finite(FinitePoset),
    Fan(FanModel),
}

impl SpectralPoset {
    /// Parses `fan:…` strings; anything else is rejected.
    pub fn parse_fan(spec: &str) -> Result<Self> {
        FanModel::parse(spec).map(SpectralPoset::Fan)
    }

    pub fn from_ring(r: &FiniteRing, limits: &Limits) -> Result<Self> {
        FinitePoset::from_ring(r, limits).map(SpectralPoset::Finite)
    }

    pub fn max_count(&self) -> Cardinal {
        match self {
            SpectralPoset::Finite(p) => Cardinal::Finite(p.maximal().count_ones() as usize),
            SpectralPoset::Fan(_) => Cardinal::CountablyInfinite,
        }
    }

    pub fn is_max_irreducible(&self, limits: &Limits) -> Result<bool> {
        match self {
            SpectralPoset::Finite(p) => p.is_max_irreducible(limits),
            SpectralPoset::Fan(f) => Ok(f.reducibility_witness().is_none()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecsReport {
    pub mode: &'static str,
    pub max_count: Cardinal,
    pub max_irreducible: bool,
    pub g: InvariantBundle,
    pub h: InvariantBundle,
    pub parts: Vec<SuitePart>,
    /// Human-readable witnesses (paths, cliques, covering pairs).
    pub witnesses: Vec<String>,
}

impl SpecsReport {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(|p| p.passed)
    }
}

fn part(part: u8, claim: &'static str, applicable: bool, holds: bool, detail: String) -> SuitePart {
    SuitePart {
        part,
        claim,
        applicable,
        passed: !applicable || holds,
        detail,
    }
}

/// Runs every part of the case analysis that applies to `p`.
pub fn specs_theorem_suite(p: &SpectralPoset, limits: &Limits) -> Result<SpecsReport> {
    match p {
        SpectralPoset::Finite(fp) => finite_suite(fp, limits),
        SpectralPoset::Fan(f) => fan::fan_suite(f, 8, limits),
    }
}

/// The fan case analysis with an explicit window of maximal points.
pub fn fan_suite_with_window(f: &FanModel, window: usize, limits: &Limits) -> Result<SpecsReport> {
    if !(3..=12).contains(&window) {
        return Err(Error::Invalid(format!("fan window must hold 3..=12 maximal points, got {window}")));
    }
    fan::fan_suite(f, window, limits)
}

fn finite_suite(p: &FinitePoset, limits: &Limits) -> Result<SpecsReport> {
    let spec = p.spec_space(limits)?;
    let uspec = p.uspec_space(limits)?;
    let g = zero_divisor_graph(&spec.closure_lattice());
    let h = zero_divisor_graph(&uspec.closure_lattice());
    let gi = g.invariants(limits)?;
    let hi = h.invariants(limits)?;
    let maxm = p.maximal();
    let k = maxm.count_ones() as usize;
    let irreducible = p.is_max_irreducible(limits)?;
    let fin = Extended::Finite;
    let mut parts = Vec::new();
    let mut witnesses = Vec::new();

    parts.push(part(
        0,
        "σ(Spec) = σ(USpec) for a finite poset",
        true,
        spec.closed_sets() == uspec.closed_sets(),
        format!("{} vs {} closed sets", spec.closed_sets().len(), uspec.closed_sets().len()),
    ));
    let restriction = p.restrict_to_max(limits)?;
    let arm = check_armendariz(&restriction).is_armendariz();
    let arm_suite = arm && armendariz_invariant_suite(&restriction, limits)?.passed();
    parts.push(part(
        0,
        "C ↦ C ∩ Max is Armendariz and its invariant suite passes",
        true,
        arm_suite,
        format!("Armendariz: {arm}"),
    ));

    let kc = Cardinal::Finite(k);
    parts.push(part(
        1,
        "χ(G) = χ(H) = clq G = clq H = |Max| (|Max| ≥ 2)",
        k >= 2,
        gi.chromatic == kc && hi.chromatic == kc && gi.clique == kc && hi.clique == kc,
        format!("G: {gi}; H: {hi}; |Max| = {k}"),
    ));
    parts.push(part(
        2,
        "|Max| = 1 ⇒ G = H = ∅",
        k == 1,
        g.is_empty() && h.is_empty(),
        format!("{} and {} vertices", g.len(), h.len()),
    ));

    let (mut diam_exp, mut gir_exp) = (fin(0), Extended::Infinite);
    if k == 2 {
        let ms: Vec<usize> = mask_iter(maxm).collect();
        let (m1, m2) = (ms[0], ms[1]);
        let nonmax: Vec<usize> = (0..p.len()).filter(|&q| maxm >> q & 1 == 0).collect();
        let below_both = nonmax.iter().all(|&q| p.leq(q, m1) && p.leq(q, m2));
        let p1 = nonmax.iter().find(|&&q| p.leq(q, m1) && !p.leq(q, m2));
        let p2 = nonmax.iter().find(|&&q| p.leq(q, m2) && !p.leq(q, m1));
        diam_exp = fin(if below_both { 1 } else { 2 });
        if let (Some(&a), Some(&b)) = (p1, p2) {
            gir_exp = fin(4);
            witnesses.push(format!(
                "4-cycle V({}) — V({}) — {{{}}} — {{{}}}",
                p.points[a], p.points[b], p.points[m1], p.points[m2]
            ));
        }
    }
    parts.push(part(
        3,
        "|Max| = 2: diam G = diam H = 1 iff nonmaximal primes lie below both, else 2",
        k == 2,
        gi.diameter == diam_exp && hi.diameter == diam_exp,
        format!("diam G {}, diam H {}", gi.diameter, hi.diameter),
    ));
    parts.push(part(
        3,
        "|Max| = 2: gir G = gir H = 4 iff crossing primes p₁, p₂ exist, else ∞",
        k == 2,
        gi.girth == gir_exp && hi.girth == gir_exp,
        format!("gir G {}, gir H {}", gi.girth, hi.girth),
    ));
    parts.push(part(
        4,
        "|Max| ≥ 3 ⇒ diam H = gir H = gir G = 3",
        k >= 3,
        hi.diameter == fin(3) && hi.girth == fin(3) && gi.girth == fin(3),
        format!("diam H {}, gir H {}, gir G {}", hi.diameter, hi.girth, gi.girth),
    ));
    parts.push(part(
        5,
        "|Max| ≥ 3 and Max irreducible ⇒ diam G = 2",
        k >= 3 && irreducible,
        gi.diameter == fin(2),
        format!("diam G {}", gi.diameter),
    ));
    parts.push(part(
        6,
        "|Max| ≥ 3 and Max reducible ⇒ diam G = 3",
        k >= 3 && !irreducible,
        gi.diameter == fin(3),
        format!("diam G {}", gi.diameter),
    ));
    if k >= 3 {
        witnesses.push("a finite Max with ≥ 3 points is always reducible".into());
    }

    Ok(SpecsReport {
        mode: "finite",
        max_count: Cardinal::Finite(k),
        max_irreducible: irreducible,
        g: gi,
        h: hi,
        parts,
        witnesses,
    })
}

/// Every partial order on `n ≤ 5` labeled points, up to isomorphism.
pub fn all_posets(n: usize) -> Vec<FinitePoset> {
    assert!(n <= 5, "3^(n choose 2) candidate relations");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => up[i] |= 1 << j,
                2 => up[j] |= 1 << i,
                _ => {}
            }
            c /= 3;
        }
        // Keep only relations that are already transitive.
        let transitive = (0..n).all(|i| mask_iter(up[i]).all(|j| up[j] & up[i] == up[j]));
        if !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|perm| {
                let mut rel = vec![0u64; n];
                for i in 0..n {
                    rel[perm[i]] = mask_iter(up[i]).fold(0, |acc, j| acc | 1 << perm[j]);
                }
                rel
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canon.clone()) {
            out.push(FinitePoset {
                points: (0..n).map(|i| format!("p{i}")).collect(),
                up: canon,
            });
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn poset(n: usize, leq: &[[usize; 2]]) -> FinitePoset {
        FinitePoset::new((0..n).map(|i| format!("p{i}")).collect(), leq, &lim()).unwrap()
    }

    #[test]
    fn closure_and_antisymmetry() {
        let p = poset(3, &[[0, 1], [1, 2]]);
        assert!(p.leq(0, 2));
        assert_eq!(p.generators(0b110), vec![1]);
        assert_eq!(p.maximal(), 0b100);
        assert!(FinitePoset::new(vec!["a".into(), "b".into()], &[[0, 1], [1, 0]], &lim()).is_err());
        let j = p.to_json();
        assert_eq!(FinitePoset::from_json(&j, &lim()).unwrap(), p);
    }

    #[test]
    fn ring_spectra() {
        let r = FiniteRing::zn(30).unwrap();
        let p = FinitePoset::from_ring(&r, &lim()).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.is_antichain());
        assert_eq!(p.spec_space(&lim()).unwrap().closed_sets().len(), 8);
        let r = FiniteRing::zn(4).unwrap();
        assert_eq!(FinitePoset::from_ring(&r, &lim()).unwrap().len(), 1);
        let r = FiniteRing::parse("mvq:p=2;vars=x,y;rel=x2,xy,y2", &lim()).unwrap();
        assert_eq!(FinitePoset::from_ring(&r, &lim()).unwrap().len(), 1);
    }

    #[test]
    fn chain_is_local() {
        let p = poset(2, &[[0, 1]]);
        let spec = p.spec_space(&lim()).unwrap();
        assert_eq!(spec.closed_sets(), &[0, 0b10, 0b11]);
        let rep = specs_theorem_suite(&SpectralPoset::Finite(p), &lim()).unwrap();
        assert!(rep.passed(), "{:?}", rep.parts);
        assert_eq!(rep.max_count, Cardinal::Finite(1));
    }

    #[test]
    fn two_maximal_cases() {
        // p0 below both maximals: diam 1
        let rep = specs_theorem_suite(&SpectralPoset::Finite(poset(3, &[[0, 1], [0, 2]])), &lim()).unwrap();
        assert!(rep.passed(), "{:?}", rep.parts);
        assert_eq!(rep.g.diameter, Extended::Finite(1));
        // p0 < m1 and p1 < m2 only: 4-cycle
        let rep = specs_theorem_suite(&SpectralPoset::Finite(poset(4, &[[0, 2], [1, 3]])), &lim()).unwrap();
        assert!(rep.passed(), "{:?}", rep.parts);
        assert_eq!(rep.g.girth, Extended::Finite(4));
        assert_eq!(rep.h.girth, Extended::Finite(4));
        // one-sided: star
        let rep = specs_theorem_suite(&SpectralPoset::Finite(poset(3, &[[0, 1]])), &lim()).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.g.girth, Extended::Infinite);
        assert_eq!(rep.g.diameter, Extended::Finite(2));
    }

    #[test]
    fn antichain_of_three() {
        let p = poset(3, &[]);
        assert!(!p.is_max_irreducible(&lim()).unwrap());
        let rep = specs_theorem_suite(&SpectralPoset::Finite(p), &lim()).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.g.diameter, Extended::Finite(3));
    }

    #[test]
    fn poset_counts() {
        // unlabeled posets on 0..=5 points
        let counts: Vec<usize> = (0..=5).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn restriction_is_armendariz() {
        for p in all_posets(4) {
            let g = p.restrict_to_max(&lim()).unwrap();
            assert!(check_armendariz(&g).is_armendariz());
        }
    }
}
