use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{zero_divisor_graph, Extended, InvariantBundle};
use crate::limits::Limits;

use super::{eq_quotient, EqQuotient, QuotientMode, SemigroupTable};

/// A total set map between two semigroup tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupMap {
    source: SemigroupTable,
    target: SemigroupTable,
    assignment: Vec<usize>,
}

impl SemigroupMap {
    pub fn new(
        source: SemigroupTable,
        target: SemigroupTable,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::Invalid(format!(
                "assignment covers {} of {} source elements",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&t| t >= target.len()) {
            return Err(Error::UnknownElement {
                index: bad,
                size: target.len(),
            });
        }
        Ok(SemigroupMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(s: &SemigroupTable) -> Self {
        SemigroupMap {
            source: s.clone(),
            target: s.clone(),
            assignment: (0..s.len()).collect(),
        }
    }

    pub fn source(&self) -> &SemigroupTable {
        &self.source
    }

    pub fn target(&self) -> &SemigroupTable {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    #[inline]
    pub fn apply(&self, s: usize) -> usize {
        self.assignment[s]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SemigroupMap) -> Result<SemigroupMap> {
        if self.target != next.source {
            return Err(Error::Invalid("composition of incompatible maps".into()));
        }
        SemigroupMap::new(
            self.source.clone(),
            next.target.clone(),
            self.assignment.iter().map(|&t| next.apply(t)).collect(),
        )
    }
}

/// The three Armendariz conditions, each with a counterexample when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArmendarizReport {
    pub surjective: bool,
    pub zero_preserving_reflecting: bool,
    pub product_zero_equiv: bool,
    /// A target element with no preimage.
    pub unhit_target: Option<usize>,
    /// A source element with `s = 0` not equivalent to `g(s) = 0`.
    pub zero_witness: Option<usize>,
    /// A pair with `ss' = 0` not equivalent to `g(s)g(s') = 0`.
    pub product_witness: Option<(usize, usize)>,
}

impl ArmendarizReport {
    pub fn is_armendariz(&self) -> bool {
        self.surjective && self.zero_preserving_reflecting && self.product_zero_equiv
    }
}

/// Evaluates the Armendariz conditions by exhaustive enumeration.
pub fn check_armendariz(g: &SemigroupMap) -> ArmendarizReport {
    let (s, t) = (&g.source, &g.target);
    let mut hit = vec![false; t.len()];
    for &x in &g.assignment {
        hit[x] = true;
    }
    let unhit_target = hit.iter().position(|&h| !h);
    let zero_witness =
        (0..s.len()).find(|&x| (x == s.zero()) != (g.apply(x) == t.zero()));
    let mut product_witness = None;
    'outer: for a in 0..s.len() {
        for b in a..s.len() {
            let lhs = s.mul(a, b) == s.zero();
            let rhs = t.mul(g.apply(a), g.apply(b)) == t.zero();
            if lhs != rhs {
                product_witness = Some((a, b));
                break 'outer;
            }
        }
    }
    ArmendarizReport {
        surjective: unhit_target.is_none(),
        zero_preserving_reflecting: zero_witness.is_none(),
        product_zero_equiv: product_witness.is_none(),
        unhit_target,
        zero_witness,
        product_witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomomorphismCheck {
    pub holds: bool,
    /// First pair with `g(st) != g(s)g(t)`.
    pub witness: Option<(usize, usize)>,
}

pub fn check_homomorphism(g: &SemigroupMap) -> HomomorphismCheck {
    let (s, t) = (&g.source, &g.target);
    for a in 0..s.len() {
        for b in a..s.len() {
            if g.apply(s.mul(a, b)) != t.mul(g.apply(a), g.apply(b)) {
                return HomomorphismCheck {
                    holds: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    HomomorphismCheck {
        holds: true,
        witness: None,
    }
}

fn require_armendariz(g: &SemigroupMap) -> Result<()> {
    let report = check_armendariz(g);
    if report.is_armendariz() {
        Ok(())
    } else {
        Err(Error::NotArmendariz(
            serde_json::to_string(&report).unwrap_or_default(),
        ))
    }
}

/// The unique Armendariz map `h: T → E(S)` with `h ∘ g = e_S`.
///
/// Returns the quotient of the source together with `h`. Since `g` is onto,
/// `h(t)` is forced to be the class of any preimage of `t`; the function
/// checks that all preimages agree and that `h ∘ g = e_S` pointwise.
pub fn induced_final_map(
    g: &SemigroupMap,
    limits: &Limits,
) -> Result<(EqQuotient, SemigroupMap)> {
    require_armendariz(g)?;
    let quotient = eq_quotient(&g.source, QuotientMode::Strict, limits)?;
    let mut h = vec![usize::MAX; g.target.len()];
    for s in 0..g.source.len() {
        let t = g.apply(s);
        let class = quotient.class_of[s];
        if h[t] == usize::MAX {
            h[t] = class;
        } else if h[t] != class {
            return Err(Error::NotArmendariz(format!(
                "preimages of target {t} lie in different annihilator classes"
            )));
        }
    }
    let h = SemigroupMap::new(g.target.clone(), quotient.quotient.clone(), h)?;
    let composite = g.then(&h)?;
    if composite.assignment != quotient.projection.assignment {
        return Err(Error::Invalid("h ∘ g differs from the projection".into()));
    }
    Ok((quotient, h))
}

/// One part of the invariant-preservation theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuitePart {
    pub part: u8,
    pub claim: &'static str,
    /// False when the hypothesis of the part does not hold; such parts pass vacuously.
    pub applicable: bool,
    pub passed: bool,
    pub detail: String,
}

/// The two configurations that produce a 4-cycle in the source when the
/// target graph is acyclic. Indices are target elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GirthPatterns {
    /// An edge `t—t'` neither of whose vertex fibers is a singleton.
    pub shared_edge: Option<(usize, usize)>,
    /// A vertex of degree at least two whose fiber is not a singleton.
    pub heavy_vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSuiteReport {
    pub source: InvariantBundle,
    pub target: InvariantBundle,
    /// Whether the induced vertex map `Γ(S) → Γ(T)` is a bijection.
    pub induced_bijective: bool,
    pub parts: Vec<SuitePart>,
    pub girth_patterns: GirthPatterns,
}

impl InvariantSuiteReport {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(|p| p.passed)
    }
}

/// Computes both zero-divisor graphs and checks the six preservation claims.
pub fn armendariz_invariant_suite(
    g: &SemigroupMap,
    limits: &Limits,
) -> Result<InvariantSuiteReport> {
    g.source.require_nilpotent_free()?;
    g.target.require_nilpotent_free()?;
    require_armendariz(g)?;

    let gs = zero_divisor_graph(&g.source);
    let gt = zero_divisor_graph(&g.target);
    let source = gs.invariants(limits)?;
    let target = gt.invariants(limits)?;

    let zs = g.source.zero_divisors();
    let zt = g.target.zero_divisors();
    let mut fiber = vec![0usize; g.target.len()];
    for &s in &zs {
        fiber[g.apply(s)] += 1;
    }
    let induced_bijective = zs.len() == zt.len() && zt.iter().all(|&t| fiber[t] == 1);

    let mut parts = Vec::with_capacity(6);
    let diam_t = target.diameter;
    let diam_s = source.diameter;
    parts.push(SuitePart {
        part: 1,
        claim: "diam Γ(T) ≠ 1 ⇒ diam Γ(S) = diam Γ(T)",
        applicable: diam_t != Extended::Finite(1),
        passed: diam_t == Extended::Finite(1) || diam_s == diam_t,
        detail: format!("diam Γ(S) = {diam_s}, diam Γ(T) = {diam_t}"),
    });
    let expected = if induced_bijective { 1 } else { 2 };
    parts.push(SuitePart {
        part: 2,
        claim: "diam Γ(T) = 1 ⇒ diam Γ(S) = 1 if the induced map is bijective, else 2",
        applicable: diam_t == Extended::Finite(1),
        passed: diam_t != Extended::Finite(1) || diam_s == Extended::Finite(expected),
        detail: format!(
            "induced map bijective: {induced_bijective}; diam Γ(S) = {diam_s}"
        ),
    });
    let (gir_s, gir_t) = (source.girth, target.girth);
    parts.push(SuitePart {
        part: 3,
        claim: "gir Γ(T) < ∞ ⇒ gir Γ(S) = gir Γ(T)",
        applicable: gir_t.is_finite(),
        passed: !gir_t.is_finite() || gir_s == gir_t,
        detail: format!("gir Γ(S) = {gir_s}, gir Γ(T) = {gir_t}"),
    });
    parts.push(SuitePart {
        part: 4,
        claim: "gir Γ(T) = ∞ ⇒ gir Γ(S) ∈ {4, ∞}",
        applicable: !gir_t.is_finite(),
        passed: gir_t.is_finite() || matches!(gir_s, Extended::Finite(4) | Extended::Infinite),
        detail: format!("gir Γ(S) = {gir_s}"),
    });
    parts.push(SuitePart {
        part: 5,
        claim: "clq Γ(S) = clq Γ(T)",
        applicable: true,
        passed: source.clique == target.clique,
        detail: format!("{} vs {}", source.clique, target.clique),
    });
    parts.push(SuitePart {
        part: 6,
        claim: "χ(Γ(S)) = χ(Γ(T))",
        applicable: true,
        passed: source.chromatic == target.chromatic,
        detail: format!("{} vs {}", source.chromatic, target.chromatic),
    });

    let mut girth_patterns = GirthPatterns::default();
    for (i, &t) in zt.iter().enumerate() {
        if fiber[t] >= 2 && gt.degree(i) >= 2 && girth_patterns.heavy_vertex.is_none() {
            girth_patterns.heavy_vertex = Some(t);
        }
    }
    girth_patterns.shared_edge = gt
        .edges()
        .into_iter()
        .map(|(i, j)| (zt[i], zt[j]))
        .find(|&(a, b)| fiber[a] >= 2 && fiber[b] >= 2);

    Ok(InvariantSuiteReport {
        source,
        target,
        induced_bijective,
        parts,
        girth_patterns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> SemigroupTable {
        SemigroupTable::from_fn((0..n).map(|i| i.to_string()).collect(), 0, |a, b| a * b % n)
            .unwrap()
    }

    #[test]
    fn reduction_mod_3_is_not_kernel_free() {
        let g = SemigroupMap::new(zn(6), zn(3), (0..6).map(|x| x % 3).collect()).unwrap();
        let r = check_armendariz(&g);
        assert!(r.surjective);
        assert!(!r.zero_preserving_reflecting);
        assert_eq!(r.zero_witness, Some(3));
        assert!(!r.is_armendariz());
        // Ring reduction is multiplicative.
        assert!(check_homomorphism(&g).holds);
    }

    #[test]
    fn identity_is_armendariz() {
        for n in [1, 2, 6, 10] {
            let id = SemigroupMap::identity(&zn(n));
            let r = check_armendariz(&id);
            assert!(r.is_armendariz());
            assert_eq!((r.unhit_target, r.zero_witness, r.product_witness), (None, None, None));
        }
    }

    #[test]
    fn non_multiplicative_map_has_witness() {
        // Swap 2 and 4 in Z_6: preserves zero products but not products.
        let g = SemigroupMap::new(zn(6), zn(6), vec![0, 1, 4, 3, 2, 5]).unwrap();
        assert!(check_armendariz(&g).is_armendariz());
        let h = check_homomorphism(&g);
        assert!(!h.holds);
        let (a, b) = h.witness.unwrap();
        assert_ne!(g.apply(zn(6).mul(a, b)), zn(6).mul(g.apply(a), g.apply(b)));
    }

    #[test]
    fn zero_semigroup_constant_map() {
        let z = zn(1);
        let g = SemigroupMap::new(z.clone(), z, vec![0]).unwrap();
        assert!(check_homomorphism(&g).holds);
    }

    #[test]
    fn map_constructor_rejects_partial_or_out_of_range() {
        assert!(SemigroupMap::new(zn(3), zn(2), vec![0, 1]).is_err());
        assert!(SemigroupMap::new(zn(3), zn(2), vec![0, 1, 2]).is_err());
    }

    #[test]
    fn final_map_of_projection_is_identity() {
        let q = eq_quotient(&zn(6), QuotientMode::Strict, &Limits::default()).unwrap();
        let (_, h) = induced_final_map(&q.projection, &Limits::default()).unwrap();
        assert_eq!(h.assignment(), (0..q.quotient.len()).collect::<Vec<_>>().as_slice());
        let composite = q.projection.then(&h).unwrap();
        assert_eq!(composite.assignment(), q.projection.assignment());
    }

    #[test]
    fn final_map_through_isomorphism() {
        let s = zn(6);
        let perm = [0, 5, 2, 4, 1, 3];
        let t = s.permuted(&perm).unwrap();
        let g = SemigroupMap::new(s.clone(), t, perm.to_vec()).unwrap();
        let (q, h) = induced_final_map(&g, &Limits::default()).unwrap();
        // h = e_S ∘ g⁻¹
        for (x, &px) in perm.iter().enumerate() {
            assert_eq!(h.apply(px), q.class_of[x]);
        }
    }

    #[test]
    fn final_map_rejects_non_armendariz() {
        let g = SemigroupMap::new(zn(6), zn(3), (0..6).map(|x| x % 3).collect()).unwrap();
        assert!(matches!(
            induced_final_map(&g, &Limits::default()),
            Err(Error::NotArmendariz(_))
        ));
    }

    #[test]
    fn suite_on_z6_projection() {
        let q = eq_quotient(&zn(6), QuotientMode::Strict, &Limits::default()).unwrap();
        let r = armendariz_invariant_suite(&q.projection, &Limits::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.target.diameter, Extended::Finite(1));
        assert_eq!(r.source.diameter, Extended::Finite(2));
        assert!(!r.induced_bijective);
        assert!(r.parts[1].applicable && r.parts[1].passed);
        // Γ(Z_6) is the path 2-3-4; Γ(E) the edge [2]-[3]: heavy fiber over [2], degree 1.
        assert_eq!(r.girth_patterns, GirthPatterns::default());
    }

    #[test]
    fn suite_rejects_nilpotent_inputs() {
        let id = SemigroupMap::identity(&zn(4));
        assert!(matches!(
            armendariz_invariant_suite(&id, &Limits::default()),
            Err(Error::NotNilpotentFree { .. })
        ));
    }
}
