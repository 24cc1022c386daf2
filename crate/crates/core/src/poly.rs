//! Truncated polynomials over a finite ring and the content map.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{zero_divisor_graph, Cardinal, SimpleGraph};
use crate::limits::Limits;
use crate::ring::{FiniteRing, IdealOp, RingIdeals};

/// A polynomial with coefficients in a finite ring. Trailing zeros are dropped,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncPoly<'r> {
    ring: &'r FiniteRing,
    coeffs: Vec<usize>,
}

impl<'r> TruncPoly<'r> {
    pub fn new(ring: &'r FiniteRing, mut coeffs: Vec<usize>) -> Result<Self> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= ring.order()) {
            return Err(Error::UnknownElement {
                index: c,
                size: ring.order(),
            });
        }
        while coeffs.last() == Some(&ring.zero()) {
            coeffs.pop();
        }
        Ok(TruncPoly { ring, coeffs })
    }

    pub fn zero(ring: &'r FiniteRing) -> Self {
        TruncPoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: &'r FiniteRing, c: usize) -> Result<Self> {
        Self::new(ring, vec![c])
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &TruncPoly<'r>) -> Result<TruncPoly<'r>> {
        if !std::ptr::eq(self.ring, other.ring) && self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let coeffs = convolve(self.ring, &self.coeffs, &other.coeffs);
        TruncPoly::new(self.ring, coeffs)
    }
}

impl fmt::Display for TruncPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str(self.ring.label(self.ring.zero()));
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == self.ring.zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let l = self.ring.label(c);
            let l = if l.contains('+') { format!("({l})") } else { l.to_string() };
            match k {
                0 => write!(f, "{l}")?,
                1 => write!(f, "{l}X")?,
                _ => write!(f, "{l}X^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncPoly({self})")
    }
}

/// Coefficient convolution; the result is not normalized.
fn convolve(r: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == r.zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = r.add(out[i + j], r.mul(x, y));
        }
    }
    out
}

pub fn poly_mul<'r>(f: &TruncPoly<'r>, g: &TruncPoly<'r>) -> Result<TruncPoly<'r>> {
    f.mul(g)
}

/// The ideal generated by the coefficients of `f`, as an index into `ideals`.
pub fn content(ideals: &RingIdeals<'_>, f: &TruncPoly<'_>) -> usize {
    let ideal = ideals.ring().ideal_generated(f.coeffs());
    ideals.index_of(&ideal).expect("ideal list is complete")
}

/// Precomputed data for exhaustive pair checks at a fixed degree bound.
struct PairContext<'a, 'r> {
    ring: &'r FiniteRing,
    ideals: &'a RingIdeals<'r>,
    /// Every polynomial of degree ≤ d, as full-length coefficient vectors.
    polys: Vec<Vec<usize>>,
    /// Principal ideal index of each element.
    principal: Vec<usize>,
    sum: Vec<usize>,
    prod: Vec<usize>,
}

impl<'a, 'r> PairContext<'a, 'r> {
    fn new(ideals: &'a RingIdeals<'r>, d: usize, limits: &Limits) -> Result<Self> {
        let ring = ideals.ring();
        let n = ring.order();
        let count = (0..=d).try_fold(1usize, |acc, _| acc.checked_mul(n));
        let count = count.unwrap_or(usize::MAX);
        Limits::check("polynomials", limits.polynomials, count)?;
        let polys = (0..count)
            .map(|mut k| {
                (0..=d)
                    .map(|_| {
                        let c = k % n;
                        k /= n;
                        c
                    })
                    .collect()
            })
            .collect();
        let principal = (0..n)
            .map(|a| ideals.index_of(&ring.principal_ideal(a)).expect("complete"))
            .collect();
        let m = ideals.len();
        let add = ideals.semigroup(IdealOp::Add).table;
        let mul = ideals.semigroup(IdealOp::Mult).table;
        let sum = (0..m * m).map(|i| add.mul(i / m, i % m)).collect();
        let prod = (0..m * m).map(|i| mul.mul(i / m, i % m)).collect();
        Ok(PairContext {
            ring,
            ideals,
            polys,
            principal,
            sum,
            prod,
        })
    }

    fn content(&self, coeffs: &[usize]) -> usize {
        let m = self.ideals.len();
        coeffs
            .iter()
            .fold(self.ideals.zero_ideal(), |acc, &c| self.sum[acc * m + self.principal[c]])
    }

    fn ideal_prod(&self, i: usize, j: usize) -> usize {
        self.prod[i * self.ideals.len() + j]
    }

    fn is_zero(&self, coeffs: &[usize]) -> bool {
        coeffs.iter().all(|&c| c == self.ring.zero())
    }

    fn poly(&self, k: usize) -> TruncPoly<'r> {
        TruncPoly::new(self.ring, self.polys[k].clone()).expect("in range")
    }
}

/// A failing pair, reported as the first in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyWitness {
    pub f: String,
    pub g: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyVerdict {
    pub ring: String,
    pub degree: usize,
    pub pairs_checked: usize,
    pub passed: bool,
    pub witness: Option<PolyWitness>,
}

fn run_pairs(
    r: &FiniteRing,
    d: usize,
    limits: &Limits,
    mut check: impl FnMut(&PairContext<'_, '_>, usize, usize, &[usize]) -> Option<String>,
) -> Result<PolyVerdict> {
    let ideals = r.ideals(limits)?;
    let ctx = PairContext::new(&ideals, d, limits)?;
    let count = ctx.polys.len();
    let mut pairs_checked = 0;
    for i in 0..count {
        for j in 0..count {
            pairs_checked += 1;
            let fg = convolve(r, &ctx.polys[i], &ctx.polys[j]);
            if let Some(detail) = check(&ctx, i, j, &fg) {
                return Ok(PolyVerdict {
                    ring: r.to_string(),
                    degree: d,
                    pairs_checked,
                    passed: false,
                    witness: Some(PolyWitness {
                        f: ctx.poly(i).to_string(),
                        g: ctx.poly(j).to_string(),
                        detail,
                    }),
                });
            }
        }
    }
    Ok(PolyVerdict {
        ring: r.to_string(),
        degree: d,
        pairs_checked,
        passed: true,
        witness: None,
    })
}

/// `fg = 0 ⟺ c(f)c(g) = (0)` for all `f, g` of degree ≤ `d`.
pub fn check_armendariz_ring(r: &FiniteRing, d: usize, limits: &Limits) -> Result<PolyVerdict> {
    run_pairs(r, d, limits, |ctx, i, j, fg| {
        let (cf, cg) = (ctx.content(&ctx.polys[i]), ctx.content(&ctx.polys[j]));
        let lhs = ctx.is_zero(fg);
        let rhs = ctx.ideal_prod(cf, cg) == ctx.ideals.zero_ideal();
        (lhs != rhs).then(|| format!("fg = 0: {lhs}, c(f)c(g) = (0): {rhs}"))
    })
}

/// `c(fg) = c(f)c(g)` for all `f, g` of degree ≤ `d`.
pub fn check_gaussian(r: &FiniteRing, d: usize, limits: &Limits) -> Result<PolyVerdict> {
    run_pairs(r, d, limits, |ctx, i, j, fg| {
        let cfg = ctx.content(fg);
        let cc = ctx.ideal_prod(ctx.content(&ctx.polys[i]), ctx.content(&ctx.polys[j]));
        (cfg != cc).then(|| {
            format!(
                "c(fg) = {}, c(f)c(g) = {}",
                ctx.ideals.label(cfg),
                ctx.ideals.label(cc)
            )
        })
    })
}

/// `c(fg) ⊆ c(f)c(g)` for all `f, g` of degree ≤ `d`.
pub fn check_content_containment(r: &FiniteRing, d: usize, limits: &Limits) -> Result<PolyVerdict> {
    run_pairs(r, d, limits, |ctx, i, j, fg| {
        let cfg = ctx.content(fg);
        let cc = ctx.ideal_prod(ctx.content(&ctx.polys[i]), ctx.content(&ctx.polys[j]));
        (!ctx.ideals.ideal(cfg).is_subset(ctx.ideals.ideal(cc))).then(|| {
            format!(
                "c(fg) = {} ⊄ c(f)c(g) = {}",
                ctx.ideals.label(cfg),
                ctx.ideals.label(cc)
            )
        })
    })
}

/// Whether every ideal is the content of some polynomial of degree ≤ `d`.
pub fn content_is_surjective(r: &FiniteRing, d: usize, limits: &Limits) -> Result<bool> {
    let ideals = r.ideals(limits)?;
    let ctx = PairContext::new(&ideals, d, limits)?;
    let mut hit = vec![false; ideals.len()];
    for p in &ctx.polys {
        hit[ctx.content(p)] = true;
    }
    Ok(hit.into_iter().all(|h| h))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationRow {
    pub degree: usize,
    pub vertices: usize,
    pub edges: usize,
    pub clique: Cardinal,
    pub chromatic: Cardinal,
    /// The vertex set found by searching for an annihilating polynomial of
    /// degree ≤ d equals the set of polynomials killed by a nonzero constant.
    pub mccoy_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub ring: String,
    pub base_clique: Cardinal,
    pub base_chromatic: Cardinal,
    pub rows: Vec<StabilizationRow>,
    pub passed: bool,
}

/// The zero-divisor graph on nonzero polynomials of degree ≤ `d`, plus whether
/// the direct vertex search agrees with the constant-annihilator criterion.
pub fn truncated_polynomial_graph(r: &FiniteRing, d: usize, limits: &Limits) -> Result<(SimpleGraph, bool)> {
    let n = r.order();
    let count = (0..=d).try_fold(1usize, |acc, _| acc.checked_mul(n));
    let count = count.unwrap_or(usize::MAX);
    Limits::check("polynomials", limits.polynomials, count)?;
    let polys: Vec<Vec<usize>> = (0..count)
        .map(|mut k| {
            (0..=d)
                .map(|_| {
                    let c = k % n;
                    k /= n;
                    c
                })
                .collect()
        })
        .collect();
    let is_zero = |c: &[usize]| c.iter().all(|&x| x == r.zero());
    let nonzero: Vec<usize> = (0..count).filter(|&k| !is_zero(&polys[k])).collect();
    let killed_by_constant = |k: usize| {
        (0..n)
            .filter(|&c| c != r.zero())
            .any(|c| polys[k].iter().all(|&x| r.mul(c, x) == r.zero()))
    };
    let mccoy: Vec<usize> = nonzero.iter().copied().filter(|&k| killed_by_constant(k)).collect();
    Limits::check("table", limits.table, mccoy.len())?;
    let mut searched = Vec::new();
    for &a in &nonzero {
        if nonzero.iter().any(|&b| is_zero(&convolve(r, &polys[a], &polys[b]))) {
            searched.push(a);
        }
    }
    let labels = mccoy
        .iter()
        .map(|&k| TruncPoly::new(r, polys[k].clone()).expect("in range").to_string())
        .collect();
    let mut g = SimpleGraph::new(labels);
    for (i, &a) in mccoy.iter().enumerate() {
        for (j, &b) in mccoy.iter().enumerate().skip(i + 1) {
            if is_zero(&convolve(r, &polys[a], &polys[b])) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok((g, searched == mccoy))
}

/// Clique and chromatic numbers of the truncated polynomial graphs against Γ(R).
pub fn clique_stabilization(r: &FiniteRing, d_max: usize, limits: &Limits) -> Result<StabilizationReport> {
    if let Some(w) = r.nilpotent_witness() {
        return Err(Error::NotNilpotentFree { element: w });
    }
    let base = zero_divisor_graph(&r.multiplicative_semigroup());
    let base_clique = Cardinal::Finite(base.clique_number(limits)?);
    let base_chromatic = Cardinal::Finite(base.chromatic_number(limits)?);
    let mut rows = Vec::new();
    for d in 0..=d_max {
        let (g, mccoy_agrees) = truncated_polynomial_graph(r, d, limits)?;
        rows.push(StabilizationRow {
            degree: d,
            vertices: g.len(),
            edges: g.edge_count(),
            clique: Cardinal::Finite(g.clique_number(limits)?),
            chromatic: Cardinal::Finite(g.chromatic_number(limits)?),
            mccoy_agrees,
        });
    }
    let passed = rows
        .iter()
        .all(|row| row.mccoy_agrees && row.clique == base_clique && row.chromatic == base_chromatic);
    Ok(StabilizationReport {
        ring: r.to_string(),
        base_clique,
        base_chromatic,
        rows,
        passed,
    })
}

/// Whether `R` is quasi-local, reduced and not a domain. No finite ring is:
/// a finite reduced local ring is a field.
pub fn is_reduced_local_non_domain(r: &FiniteRing, limits: &Limits) -> Result<bool> {
    let ideals = r.ideals(limits)?;
    Ok(ideals.maximal().len() == 1 && r.is_reduced() && !r.is_domain())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::parse(s, &lim()).unwrap()
    }

    #[test]
    fn products() {
        let z4 = ring("Zn:4");
        let f = TruncPoly::new(&z4, vec![2, 2]).unwrap();
        assert!(f.mul(&f).unwrap().is_zero());
        let one = TruncPoly::constant(&z4, 1).unwrap();
        assert_eq!(f.mul(&one).unwrap(), f);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(TruncPoly::zero(&z4).degree(), None);
        assert_eq!(TruncPoly::new(&z4, vec![1, 0, 0]).unwrap().coeffs(), &[1]);
        assert!(TruncPoly::new(&z4, vec![4]).is_err());
    }

    #[test]
    fn cross_term_identity() {
        // (aX + b)(bX + a) = abX² + (a² + b²)X + ab
        let r = ring("prod:Zn:3,Zn:3");
        for a in 0..r.order() {
            for b in 0..r.order() {
                let f = TruncPoly::new(&r, vec![b, a]).unwrap();
                let g = TruncPoly::new(&r, vec![a, b]).unwrap();
                let ab = r.mul(a, b);
                let mid = r.add(r.mul(a, a), r.mul(b, b));
                let expected = TruncPoly::new(&r, vec![ab, mid, ab]).unwrap();
                assert_eq!(f.mul(&g).unwrap(), expected);
            }
        }
    }

    #[test]
    fn ring_mismatch() {
        let (a, b) = (ring("Zn:4"), ring("Zn:6"));
        let f = TruncPoly::constant(&a, 1).unwrap();
        let g = TruncPoly::constant(&b, 1).unwrap();
        assert_eq!(f.mul(&g).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn content_examples() {
        let r = ring("Zn:6");
        let ids = r.ideals(&lim()).unwrap();
        let f = TruncPoly::new(&r, vec![2, 0, 3]).unwrap();
        assert_eq!(content(&ids, &f), ids.unit_ideal());
        assert_eq!(content(&ids, &TruncPoly::zero(&r)), ids.zero_ideal());
        let f = TruncPoly::new(&r, vec![4, 2]).unwrap();
        assert_eq!(ids.label(content(&ids, &f)), "(2)");
    }

    #[test]
    fn display() {
        let r = ring("Zn:6");
        assert_eq!(TruncPoly::new(&r, vec![2, 0, 3]).unwrap().to_string(), "3X^2 + 2");
        assert_eq!(TruncPoly::zero(&r).to_string(), "0");
    }

    #[test]
    fn armendariz_and_gaussian() {
        for s in ["Zn:6", "prod:Zn:2,Zn:2", "Zn:4"] {
            let v = check_armendariz_ring(&ring(s), 2, &lim()).unwrap();
            assert!(v.passed, "{s}: {v:?}");
        }
        for (s, d) in [("Zn:6", 2), ("Zn:2", 3), ("prod:Zn:2,Zn:2", 2)] {
            let v = check_gaussian(&ring(s), d, &lim()).unwrap();
            assert!(v.passed, "{s}: {v:?}");
        }
    }

    #[test]
    fn non_armendariz_ring_has_witness() {
        // (x + yX)² = 2xyX = 0 in characteristic 2, yet x·y ≠ 0.
        let r = ring("mvq:p=2;vars=x,y;rel=x2,y2");
        let v = check_armendariz_ring(&r, 1, &lim()).unwrap();
        assert!(!v.passed);
        assert!(v.witness.is_some());
    }

    #[test]
    fn non_gaussian_ring_has_witness() {
        let r = ring("mvq:p=2;vars=x,y;rel=x2,y2");
        let v = check_gaussian(&r, 1, &lim()).unwrap();
        assert!(!v.passed);
        assert!(check_content_containment(&r, 1, &lim()).unwrap().passed);
    }

    #[test]
    fn stabilization() {
        for s in ["Zn:6", "prod:Zn:2,Zn:2"] {
            let rep = clique_stabilization(&ring(s), 1, &lim()).unwrap();
            assert!(rep.passed, "{rep:?}");
            assert_eq!(rep.base_clique, Cardinal::Finite(2));
            assert!(rep.rows.iter().all(|r| r.clique == Cardinal::Finite(2)));
        }
        let r = ring("Zn:6");
        let (g0, _) = truncated_polynomial_graph(&r, 0, &lim()).unwrap();
        let base = zero_divisor_graph(&r.multiplicative_semigroup());
        assert_eq!(g0.labels(), base.labels());
        assert_eq!(g0.edges(), base.edges());
        assert!(clique_stabilization(&ring("Zn:4"), 1, &lim()).is_err());
    }

    #[test]
    fn content_surjectivity() {
        assert!(content_is_surjective(&ring("Zn:12"), 0, &lim()).unwrap());
        let r = ring("mvq:p=2;vars=x,y;rel=x2,xy,y2");
        assert!(!content_is_surjective(&r, 0, &lim()).unwrap());
        assert!(content_is_surjective(&r, 1, &lim()).unwrap());
    }

    #[test]
    fn guard() {
        let limits = Limits {
            polynomials: 100,
            ..lim()
        };
        assert!(matches!(
            check_gaussian(&ring("Zn:6"), 2, &limits),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
