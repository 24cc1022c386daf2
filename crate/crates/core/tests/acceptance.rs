//! Acceptance gate. One test per criterion; each prints a single PASS/FAIL line
//! with its wall time and fails if the check or the time limit is missed.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zdg_core::corpus::{armendariz_corpus, reduced_ring, reduced_ring_specs, CorpusConfig};
use zdg_core::graph::{zero_divisor_graph, Cardinal, Extended, InvariantBundle};
use zdg_core::lattice::{
    all_t1_families, char_check_irr_conn, choice_coloring_is_proper, clique_witness, distance_two_witness,
    is_symbolic_clique, symbolic_adjacent, LatticeElement, SubsetLattice,
};
use zdg_core::poly::{check_armendariz_ring, check_content_containment, clique_stabilization};
use zdg_core::ring::{ag_conjecture_check, comaximal_suite, FiniteRing, IdealOp};
use zdg_core::semigroup::{armendariz_invariant_suite, check_armendariz, eq_quotient, QuotientMode};
use zdg_core::spectral::{all_posets, fan_suite_with_window, specs_theorem_suite, FanModel, SpectralPoset};
use zdg_core::topology::{n0_space_window, FiniteSpace};
use zdg_core::verify::ag_products;
use zdg_core::Limits;

const FIN: fn(usize) -> Extended = Extended::Finite;
const INF: Extended = Extended::Infinite;

fn card(n: usize) -> Cardinal {
    Cardinal::Finite(n)
}

fn bundle(diameter: Extended, girth: Extended, clique: usize, chromatic: usize) -> InvariantBundle {
    InvariantBundle {
        diameter,
        girth,
        clique: card(clique),
        chromatic: card(chromatic),
    }
}

/// Runs `check`, prints the verdict line and asserts both outcome and time limit.
fn criterion(n: u8, name: &str, limit_s: u64, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(limit_s);
    let verdict = if outcome.is_ok() && in_time { "PASS" } else { "FAIL" };
    let note = match (&outcome, in_time) {
        (Err(e), _) => format!(" ({e})"),
        (Ok(()), false) => format!(" (over the {limit_s} s limit)"),
        _ => String::new(),
    };
    println!(
        "criterion {n:>2} {name:<28} {verdict}  {:.2} s / {limit_s} s{note}",
        elapsed.as_secs_f64()
    );
    assert!(outcome.is_ok(), "criterion {n}: {}", outcome.unwrap_err());
    assert!(in_time, "criterion {n}: took {elapsed:?}, limit {limit_s} s");
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn c01_triangle_versus_point() {
    criterion(1, "triangle vs point", 1, || {
        let lim = Limits::default();
        let r = FiniteRing::parse("mvq:p=2;vars=x,y;rel=x2,xy,y2", &lim).map_err(|e| e.to_string())?;
        let s = r.multiplicative_semigroup();
        let g = zero_divisor_graph(&s).invariants(&lim).map_err(|e| e.to_string())?;
        ensure(g == bundle(FIN(1), FIN(3), 3, 3), || format!("Γ(R) = {g}"))?;
        let q = eq_quotient(&s, QuotientMode::Permissive, &lim).map_err(|e| e.to_string())?;
        let e = zero_divisor_graph(&q.quotient).invariants(&lim).map_err(|e| e.to_string())?;
        ensure(e == bundle(FIN(0), INF, 1, 1), || format!("Γ_E(R) = {e}"))
    });
}

#[test]
fn c02_armendariz_suite() {
    criterion(2, "Armendariz corpus", 60, || {
        let lim = Limits::default();
        let corpus = armendariz_corpus(&CorpusConfig::default(), &lim).map_err(|e| e.to_string())?;
        ensure(corpus.len() >= 500, || format!("only {} pairs", corpus.len()))?;
        for fam in ["ring-eq", "alpha", "poset-max"] {
            ensure(corpus.iter().any(|c| c.family == fam), || format!("no {fam} pairs"))?;
        }
        ensure(corpus.iter().filter(|c| c.family == "alpha").count() >= 250, || "too few α maps".into())?;
        for item in &corpus {
            ensure(check_armendariz(&item.map).is_armendariz(), || format!("{} {} not Armendariz", item.family, item.name))?;
            let rep = armendariz_invariant_suite(&item.map, &lim).map_err(|e| e.to_string())?;
            ensure(rep.parts.len() == 6, || "suite must report six parts".into())?;
            if let Some(p) = rep.parts.iter().find(|p| !p.passed) {
                return Err(format!("{} {}: part {} {}", item.family, item.name, p.part, p.detail));
            }
        }
        Ok(())
    });
}

#[test]
fn c03_annihilating_ideal_girth() {
    criterion(3, "AG girth", 30, || {
        let lim = Limits::default();
        let products = ag_products(4);
        ensure(products.iter().all(|f| (3..=4).contains(&f.len())), || "wrong factor counts".into())?;
        ensure(products.len() == 45, || format!("{} products", products.len()))?;
        for f in products {
            let r = reduced_ring(&f, &lim).map_err(|e| e.to_string())?;
            ensure(r.order() <= 200, || "order".into())?;
            let v = ag_conjecture_check(&r, &lim).map_err(|e| e.to_string())?;
            ensure(v.girth == FIN(3), || format!("{r}: girth {}", v.girth))?;
            let w = v.witness.ok_or_else(|| format!("{r}: no 3-cycle"))?;
            // The labeled ideals must be distinct, nonzero and pairwise annihilating.
            let ideals = r.ideals(&lim).map_err(|e| e.to_string())?;
            let idx: Vec<usize> = w
                .iter()
                .map(|l| (0..ideals.len()).find(|&i| &ideals.label(i) == l).ok_or_else(|| format!("label {l}")))
                .collect::<Result<_, _>>()?;
            let table = ideals.semigroup(IdealOp::Mult).table;
            let zero = ideals.zero_ideal();
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                ensure(idx[a] != idx[b] && idx[a] != zero, || format!("{r}: degenerate witness"))?;
                ensure(table.mul(idx[a], idx[b]) == zero, || format!("{r}: {} · {} ≠ 0", w[a], w[b]))?;
            }
        }
        Ok(())
    });
}

#[test]
fn c04_t1_lattice_table() {
    criterion(4, "T1 lattice table", 30, || {
        let lim = Limits::default();
        let mut failures = Vec::new();
        for y in 1..=5usize {
            let l = SubsetLattice::power_set(y);
            let g = l.graph().ok_or("finite lattice")?;
            ensure(g.len() == (1 << y) - 2, || format!("|Y| = {y}: {} vertices", g.len()))?;
            let inv = g.invariants(&lim).map_err(|e| e.to_string())?;
            if inv.chromatic != card(y) || inv.clique != card(y) {
                failures.push(format!("|Y| = {y}: (χ, clq) = ({}, {}), expected ({y}, {y})", inv.chromatic, inv.clique));
            }
            let case_ok = match y {
                0 | 1 => g.is_empty(),
                2 => (inv.diameter, inv.girth) == (FIN(1), INF),
                _ => (inv.diameter, inv.girth) == (FIN(3), FIN(3)),
            };
            if !case_ok {
                failures.push(format!("|Y| = {y}: (diam, gir) = ({}, {})", inv.diameter, inv.girth));
            }
        }
        ensure(failures.is_empty(), || failures.join("; "))
    });
}

#[test]
fn c05_irreducible_connected_characterization() {
    criterion(5, "irreducible/connected", 60, || {
        for n in 0..=4 {
            let fams = all_t1_families(n);
            ensure(fams.len() == 1, || format!("{} T1 families on {n} points", fams.len()))?;
            for l in &fams {
                let rep = char_check_irr_conn(l).map_err(|e| e.to_string())?;
                ensure(rep.passed, || format!("|Y| = {n}: {rep:?}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn c06_symbolic_irreducible_lattice() {
    criterion(6, "symbolic lattice", 10, || {
        let (a, b, c) = distance_two_witness();
        ensure(!symbolic_adjacent(&a, &b) && a != b, || "witness pair is adjacent".into())?;
        ensure(symbolic_adjacent(&a, &c) && symbolic_adjacent(&c, &b), || "no common neighbor".into())?;
        ensure(is_symbolic_clique(&clique_witness(3)), || "no 3-cycle".into())?;
        for n in 1..=100 {
            let w = clique_witness(n);
            ensure(w.len() == n as usize && is_symbolic_clique(&w), || format!("clique of size {n}"))?;
        }
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let samples: Vec<LatticeElement> = (0..1000)
            .map(|_| {
                let len = rng.gen_range(1..=6);
                LatticeElement::finite((0..len).map(|_| rng.gen_range(0..50u64)))
            })
            .collect();
        ensure(choice_coloring_is_proper(&samples), || "choice coloring clashes".into())
    });
}

#[test]
fn c07_spectral_case_analysis() {
    criterion(7, "spectral case analysis", 60, || {
        let lim = Limits::default();
        let mut seen_parts = [false; 7];
        for n in 1..=5 {
            for p in all_posets(n) {
                let rep = specs_theorem_suite(&SpectralPoset::Finite(p.clone()), &lim).map_err(|e| e.to_string())?;
                if let Some(bad) = rep.parts.iter().find(|x| !x.passed) {
                    return Err(format!("poset {:?}: part {} {}", p.to_json(), bad.part, bad.detail));
                }
                for x in rep.parts.iter().filter(|x| x.applicable) {
                    seen_parts[x.part as usize] = true;
                }
            }
        }
        ensure(seen_parts[1..=4].iter().all(|&s| s) && seen_parts[6], || format!("finite parts exercised: {seen_parts:?}"))?;
        for (spec, part, diam) in [("fan:generics=1;sharing=all", 5u8, 2usize), ("fan:disjoint=2", 6, 3)] {
            let fan = FanModel::parse(spec).map_err(|e| e.to_string())?;
            for window in 3..=8 {
                let rep = fan_suite_with_window(&fan, window, &lim).map_err(|e| e.to_string())?;
                if let Some(bad) = rep.parts.iter().find(|x| !x.passed) {
                    return Err(format!("{spec} window {window}: part {} {}", bad.part, bad.detail));
                }
                ensure(rep.parts.iter().any(|x| x.part == part && x.applicable), || format!("{spec}: part {part} not applied"))?;
                ensure(rep.g.diameter == FIN(diam), || format!("{spec}: diam G {}", rep.g.diameter))?;
                ensure((rep.h.diameter, rep.h.girth, rep.g.girth) == (FIN(3), FIN(3), FIN(3)), || format!("{spec}: H {}", rep.h))?;
            }
        }
        Ok(())
    });
}

#[test]
fn c08_content_checks() {
    criterion(8, "content checks", 120, || {
        let lim = Limits::default();
        let specs = reduced_ring_specs(9);
        ensure(specs.len() == 12, || format!("{} reduced rings of order ≤ 9", specs.len()))?;
        for f in specs {
            let r = reduced_ring(&f, &lim).map_err(|e| e.to_string())?;
            let a = check_armendariz_ring(&r, 2, &lim).map_err(|e| e.to_string())?;
            ensure(a.passed, || format!("{r}: {:?}", a.witness))?;
            let c = check_content_containment(&r, 2, &lim).map_err(|e| e.to_string())?;
            ensure(c.passed, || format!("{r}: {:?}", c.witness))?;
        }
        for spec in ["Zn:6", "prod:Zn:2,Zn:2"] {
            let r = FiniteRing::parse(spec, &lim).map_err(|e| e.to_string())?;
            let rep = clique_stabilization(&r, 1, &lim).map_err(|e| e.to_string())?;
            ensure(rep.rows.len() == 2, || "degrees 0 and 1".into())?;
            for row in &rep.rows {
                ensure(row.clique == card(2) && row.chromatic == card(2) && row.mccoy_agrees, || format!("{spec}: {row:?}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn c09_comaximal() {
    criterion(9, "comaximal graph", 5, || {
        let lim = Limits::default();
        let run = |n: usize| -> Result<_, String> {
            let r = FiniteRing::zn(n).map_err(|e| e.to_string())?;
            let ideals = r.ideals(&lim).map_err(|e| e.to_string())?;
            let g = zero_divisor_graph(&ideals.semigroup(IdealOp::Add).table);
            let rep = comaximal_suite(&r, &lim).map_err(|e| e.to_string())?;
            ensure(rep.passed(), || format!("Z{n}: {:?}", rep.parts))?;
            Ok((g, rep))
        };
        let (g6, r6) = run(6)?;
        ensure(g6.len() == 2 && g6.edge_count() == 1 && r6.invariants.diameter == FIN(1), || format!("Z6: {}", r6.invariants))?;
        let (g4, _) = run(4)?;
        ensure(g4.is_empty(), || "Z4 graph is not empty".into())?;
        let (_, r30) = run(30)?;
        let i = r30.invariants;
        ensure((i.chromatic, i.clique, i.girth, i.diameter) == (card(3), card(3), FIN(3), FIN(3)), || format!("Z30: {i}"))?;
        ensure(!r30.jacobson_prime && r30.max_ideals.len() == 3, || "Z30: Jac should be (0), not prime".into())
    });
}

#[test]
fn c10_pearled_diagram() {
    criterion(10, "separation axioms", 60, || {
        let s = FiniteSpace::sierpinski().axiom_suite();
        ensure(s.t_half && !s.t1, || format!("Sierpiński: {s:?}"))?;
        let p = FiniteSpace::pearled_not_t0().axiom_suite();
        ensure(p.pearled && !p.t0, || format!("three-point space: {p:?}"))?;
        let w = n0_space_window(100);
        ensure(w.t0_on_window && !w.pearled && w.closed_points_in_window.is_empty(), || format!("ℕ₀: {w:?}"))?;
        for (n, want) in [1usize, 1, 4, 29, 355].into_iter().enumerate() {
            let all = FiniteSpace::all_topologies(n);
            ensure(all.len() == want, || format!("{} topologies on {n} points", all.len()))?;
            if let Some(bad) = all.iter().find(|sp| !sp.axiom_suite().violations.is_empty()) {
                return Err(format!("{:?}: {:?}", bad.to_json(), bad.axiom_suite().violations));
            }
        }
        Ok(())
    });
}
