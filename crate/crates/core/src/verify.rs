//! Named verification suites. Each runs a corpus through one family of checks
//! and returns per-item verdicts sorted by item name.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{armendariz_corpus, reduced_ring, reduced_ring_specs, CorpusConfig};
use crate::error::{Error, Result};
use crate::graph::{zero_divisor_graph, Cardinal};
use crate::lattice::{
    char_check_irr_conn, choice_coloring_is_proper, clique_witness, is_symbolic_clique, random_finite,
    symbolic_irreducibility_search, t1_invariants, all_t1_families, SubsetLattice,
};
use crate::limits::Limits;
use crate::poly::{check_armendariz_ring, check_content_containment, clique_stabilization, is_reduced_local_non_domain};
use crate::ring::{ag_conjecture_check, comaximal_suite, FiniteRing};
use crate::semigroup::{
    armendariz_invariant_suite, check_armendariz, eq_quotient, induced_final_map, QuotientMode,
};
use crate::spectral::{all_posets, specs_theorem_suite, FinitePoset, SpectralPoset};
use crate::topology::{n0_space_window, FiniteSpace};

pub const SUITES: [&str; 10] = [
    "ag-conjecture",
    "armendariz",
    "charirrconn",
    "comaximal",
    "content",
    "nonreduced",
    "pearled",
    "specs",
    "symbolic",
    "t1-lattice",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Largest number of field factors for the annihilating-ideal suite.
    pub max_fields: usize,
    /// Largest ground set for the T1 lattice table.
    pub max_ground: usize,
    pub max_ring_order: usize,
    /// Maximal points in each fan window.
    pub window: usize,
    pub content_max_order: usize,
    pub content_degree: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 7,
            max_fields: 4,
            max_ground: 5,
            max_ring_order: 32,
            window: 8,
            content_max_order: 9,
            content_degree: 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Machine-readable evidence; always present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl SuiteItem {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>, witness: Option<Value>) -> Self {
        SuiteItem {
            name: name.into(),
            passed,
            detail: detail.into(),
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

pub fn run_suite(name: &str, opts: &VerifyOptions, limits: &Limits) -> Result<SuiteReport> {
    let mut items = match name {
        "armendariz" => armendariz(opts, limits)?,
        "ag-conjecture" => ag(opts, limits)?,
        "t1-lattice" => t1(opts, limits)?,
        "charirrconn" => charirrconn()?,
        "symbolic" => symbolic(opts)?,
        "specs" => specs(opts, limits)?,
        "content" => content(opts, limits)?,
        "comaximal" => comaximal(opts, limits)?,
        "pearled" => pearled(limits)?,
        "nonreduced" => nonreduced(limits)?,
        other => return Err(Error::Invalid(format!("unknown suite {other}; known: {}", SUITES.join(", ")))),
    };
    items.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(SuiteReport {
        suite: name.to_string(),
        seed: opts.seed,
        items,
    })
}

fn armendariz(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<SuiteItem>> {
    let cfg = CorpusConfig {
        seed: opts.seed,
        max_ring_order: opts.max_ring_order,
        ..CorpusConfig::default()
    };
    let corpus = armendariz_corpus(&cfg, limits)?;
    let mut out = Vec::with_capacity(corpus.len());
    for (i, item) in corpus.iter().enumerate() {
        let name = format!("{:04} {}: {}", i, item.family, item.name);
        let arm = check_armendariz(&item.map);
        if !arm.is_armendariz() {
            out.push(SuiteItem::new(name, false, "not an Armendariz map", Some(to_value(&arm))));
            continue;
        }
        let suite = armendariz_invariant_suite(&item.map, limits)?;
        let factors = induced_final_map(&item.map, limits).is_ok();
        let passed = suite.passed() && factors;
        let detail = format!("{} → {}", suite.source, suite.target);
        let witness = (!passed).then(|| json!({ "suite": to_value(&suite), "factors_through_quotient": factors }));
        out.push(SuiteItem::new(name, passed, detail, witness));
    }
    Ok(out)
}

/// Products of `k` fields of orders 2 through 5, `3 ≤ k ≤ max_fields`, order at most 200.
pub fn ag_products(max_fields: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if cur.iter().product::<usize>() <= 200 {
                out.push(cur.clone());
            }
            return;
        }
        for (i, &q) in [2usize, 3, 4, 5].iter().enumerate().skip(start) {
            cur.push(q);
            go(i, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in 3..=max_fields {
        go(0, k, &mut Vec::new(), &mut out);
    }
    out
}

fn ag(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    for factors in ag_products(opts.max_fields) {
        let r = reduced_ring(&factors, limits)?;
        let v = ag_conjecture_check(&r, limits)?;
        let passed = v.hypothesis_met && v.passed;
        let detail = match &v.witness {
            Some(w) => format!("girth {}; 3-cycle {} — {} — {}", v.girth, w[0], w[1], w[2]),
            None => format!("girth {}", v.girth),
        };
        out.push(SuiteItem::new(r.to_string(), passed, detail, Some(to_value(&v))));
    }
    Ok(out)
}

fn t1(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    for y in 1..=opts.max_ground {
        let rep = t1_invariants(&SubsetLattice::power_set(y), limits)?;
        let detail = format!("|Y| = {y} ({}): {}", rep.case, rep.invariants);
        out.push(SuiteItem::new(format!("|Y| = {y}"), rep.passed, detail, Some(to_value(&rep))));
    }
    Ok(out)
}

fn charirrconn() -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for (i, l) in all_t1_families(n).iter().enumerate() {
            let rep = char_check_irr_conn(l)?;
            let detail = format!("irreducible {}, connected {}", rep.irreducible, rep.connected);
            out.push(SuiteItem::new(format!("|Y| = {n} #{i}"), rep.passed, detail, (!rep.passed).then(|| to_value(&rep))));
        }
    }
    Ok(out)
}

fn symbolic(opts: &VerifyOptions) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    let rep = t1_invariants(&SubsetLattice::SymbolicCofinite, &Limits::default())?;
    out.push(SuiteItem::new("distance-2 pair and 3-cycle", rep.passed, rep.invariants.to_string(), Some(to_value(&rep.witnesses))));
    let cliques = (1..=100).all(|n| is_symbolic_clique(&clique_witness(n)));
    out.push(SuiteItem::new("clique witnesses n ≤ 100", cliques, "pairwise disjoint singletons", None));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sample: Vec<_> = (0..1000).map(|_| random_finite(&mut rng, 6, 60)).collect();
    out.push(SuiteItem::new(
        "choice coloring on 1000 samples",
        choice_coloring_is_proper(&sample),
        "c(A) = min A",
        None,
    ));
    out.push(SuiteItem::new(
        "irreducibility search",
        symbolic_irreducibility_search(&mut rng, 10_000),
        "no two finite sets cover the ground set",
        None,
    ));
    Ok(out)
}

/// The closed sets `V(I)` read directly off the ideals, as masks over the primes.
fn direct_spec_closed(r: &FiniteRing, limits: &Limits) -> Result<Vec<u64>> {
    let ideals = r.ideals(limits)?;
    let mut v: Vec<u64> = (0..ideals.len())
        .map(|i| ideals.v_of(i).iter().fold(0u64, |acc, p| acc | 1 << p))
        .collect();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn specs(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    let mut push_report = |name: String, rep: crate::spectral::SpecsReport, extra: bool| {
        let passed = rep.passed() && extra;
        let detail = format!("|Max| = {}; G: {}; H: {}", rep.max_count, rep.g, rep.h);
        let witness = json!({ "parts": to_value(&rep.parts), "witnesses": rep.witnesses });
        out.push(SuiteItem::new(name, passed, detail, Some(witness)));
    };
    for n in 1..=5 {
        for (i, p) in all_posets(n).into_iter().enumerate() {
            let rep = specs_theorem_suite(&SpectralPoset::Finite(p), limits)?;
            push_report(format!("poset {n}.{i:02}"), rep, true);
        }
    }
    for spec in ["fan:generics=1", "fan:generics=2;sharing=all", "fan:disjoint=2", "fan:disjoint=3"] {
        let fan = SpectralPoset::parse_fan(spec)?;
        let rep = match &fan {
            SpectralPoset::Fan(f) => crate::spectral::fan_suite_with_window(f, opts.window, limits)?,
            SpectralPoset::Finite(_) => unreachable!("parsed a fan"),
        };
        push_report(spec.to_string(), rep, true);
    }
    let mut rings: Vec<FiniteRing> = (2..=opts.max_ring_order.min(32))
        .map(|n| FiniteRing::zn_with(n, limits))
        .collect::<Result<_>>()?;
    for f in reduced_ring_specs(opts.max_ring_order.min(32)) {
        if f.len() > 1 {
            rings.push(reduced_ring(&f, limits)?);
        }
    }
    for r in &rings {
        let p = FinitePoset::from_ring(r, limits)?;
        let space = p.spec_space(limits)?;
        let direct = direct_spec_closed(r, limits)?;
        let agree = space.closed_sets() == direct.as_slice();
        let rep = specs_theorem_suite(&SpectralPoset::Finite(p), limits)?;
        push_report(format!("ring {r}"), rep, agree);
    }
    Ok(out)
}

fn content(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    let d = opts.content_degree;
    for f in reduced_ring_specs(opts.content_max_order) {
        let r = reduced_ring(&f, limits)?;
        let arm = check_armendariz_ring(&r, d, limits)?;
        out.push(SuiteItem::new(
            format!("armendariz-ring {r}"),
            arm.passed,
            format!("{} pairs at degree ≤ {d}", arm.pairs_checked),
            arm.witness.as_ref().map(to_value),
        ));
        let cont = check_content_containment(&r, d, limits)?;
        out.push(SuiteItem::new(
            format!("containment {r}"),
            cont.passed,
            format!("{} pairs at degree ≤ {d}", cont.pairs_checked),
            cont.witness.as_ref().map(to_value),
        ));
    }
    for spec in ["Zn:6", "prod:Zn:2,Zn:2"] {
        let r = FiniteRing::parse(spec, limits)?;
        let rep = clique_stabilization(&r, 1, limits)?;
        let two = Cardinal::Finite(2);
        let passed = rep.passed && rep.base_clique == two && rep.base_chromatic == two;
        out.push(SuiteItem::new(format!("stabilization {r}"), passed, format!("{} rows", rep.rows.len()), Some(to_value(&rep))));
    }
    let mut offenders = Vec::new();
    for f in reduced_ring_specs(opts.max_ring_order.min(32)) {
        let r = reduced_ring(&f, limits)?;
        if is_reduced_local_non_domain(&r, limits)? {
            offenders.push(r.to_string());
        }
    }
    out.push(SuiteItem::new(
        "no finite reduced local non-domain",
        offenders.is_empty(),
        offenders.join(", "),
        (!offenders.is_empty()).then(|| to_value(&offenders)),
    ));
    Ok(out)
}

fn comaximal(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    let mut rings: Vec<FiniteRing> = (2..=opts.max_ring_order.min(32))
        .map(|n| FiniteRing::zn_with(n, limits))
        .collect::<Result<_>>()?;
    for f in reduced_ring_specs(opts.max_ring_order.min(32)) {
        if f.len() > 1 {
            rings.push(reduced_ring(&f, limits)?);
        }
    }
    for s in ["prod:Zn:2,Zn:4", "prod:Zn:4,Zn:4", "prod:Zn:3,Zn:9", "polyquot:p=2;mod=0,0,1"] {
        rings.push(FiniteRing::parse(s, limits)?);
    }
    for r in &rings {
        let rep = comaximal_suite(r, limits)?;
        let detail = format!("|Max| = {}; {}", rep.max_ideals.len(), rep.invariants);
        out.push(SuiteItem::new(format!("ring {r}"), rep.passed(), detail, Some(to_value(&rep))));
    }
    Ok(out)
}

fn pearled(limits: &Limits) -> Result<Vec<SuiteItem>> {
    let mut out = Vec::new();
    let expected = [1usize, 1, 4, 29, 355];
    for (n, &want) in expected.iter().enumerate() {
        let all = FiniteSpace::all_topologies(n);
        let bad: Vec<Value> = all
            .iter()
            .filter(|sp| !sp.axiom_suite().violations.is_empty())
            .map(|sp| json!({ "closed": sp.to_json().closed, "violations": sp.axiom_suite().violations }))
            .collect();
        let mut alpha_bad = 0;
        for sp in all.iter().filter(|sp| sp.is_pearled()) {
            let g = sp.alpha_map()?;
            if !check_armendariz(&g).is_armendariz() || !armendariz_invariant_suite(&g, limits)?.passed() {
                alpha_bad += 1;
            }
        }
        let passed = all.len() == want && bad.is_empty() && alpha_bad == 0;
        let detail = format!("{} topologies, {} arrow violations, {} bad α maps", all.len(), bad.len(), alpha_bad);
        out.push(SuiteItem::new(format!("all topologies on {n} points"), passed, detail, (!passed).then(|| json!(bad))));
    }
    let s = FiniteSpace::sierpinski().axiom_suite();
    out.push(SuiteItem::new("sierpinski", s.t_half && !s.t1, "T½ and not T1", Some(to_value(&s))));
    let s = FiniteSpace::pearled_not_t0().axiom_suite();
    out.push(SuiteItem::new("three-point", s.pearled && !s.t0, "pearled and not T0", Some(to_value(&s))));
    let w = n0_space_window(64);
    out.push(SuiteItem::new("n0 window", w.t0_on_window && !w.pearled, "T0 and not pearled", Some(to_value(&w))));
    Ok(out)
}

fn nonreduced(limits: &Limits) -> Result<Vec<SuiteItem>> {
    let r = FiniteRing::parse("mvq:p=2;vars=x,y;rel=x2,xy,y2", limits)?;
    let s = r.multiplicative_semigroup();
    let g = zero_divisor_graph(&s).invariants(limits)?;
    let q = eq_quotient(&s, QuotientMode::Permissive, limits)?;
    let e = zero_divisor_graph(&q.quotient).invariants(limits)?;
    let strict_refuses = eq_quotient(&s, QuotientMode::Strict, limits).is_err();
    let fin = crate::graph::Extended::Finite;
    let g_ok = g.diameter == fin(1) && g.girth == fin(3) && g.clique == Cardinal::Finite(3) && g.chromatic == Cardinal::Finite(3);
    let e_ok = e.diameter == fin(0)
        && g.girth.is_finite()
        && e.girth == crate::graph::Extended::Infinite
        && e.clique == Cardinal::Finite(1)
        && e.chromatic == Cardinal::Finite(1);
    Ok(vec![
        SuiteItem::new(format!("Γ({r})"), g_ok, g.to_string(), Some(to_value(&g))),
        SuiteItem::new(format!("Γ_E({r})"), e_ok, e.to_string(), Some(to_value(&e))),
        SuiteItem::new("strict quotient refuses nilpotents", strict_refuses, "", None),
    ])
}
