use serde::Serialize;
use serde_json::{json, Value};
use zdg_core::graph::{zero_divisor_graph, SimpleGraph};
use zdg_core::lattice::{char_check_irr_conn, t1_invariants, SubsetLattice};
use zdg_core::ring::{ag_conjecture_check, comaximal_suite, FiniteRing};
use zdg_core::semigroup::{
    armendariz_invariant_suite, check_armendariz, eq_quotient, QuotientMode, SemigroupMap, SemigroupTable, SuitePart,
};
use zdg_core::spectral::{specs_theorem_suite, SpectralPoset};
use zdg_core::topology::FiniteSpace;
use zdg_core::Limits;

use crate::object::Object;
use crate::report::{TaskOutput, Verdict};
use crate::Failure;

pub const TASKS: [&str; 10] = [
    "invariants",
    "eq-quotient",
    "armendariz",
    "ideals",
    "ag",
    "comaximal",
    "axioms",
    "alpha",
    "t1",
    "charirrconn",
];

/// `specs-suite` is accepted alongside [`TASKS`].
pub const SPECS_SUITE: &str = "specs-suite";

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

fn graph_entry(title: &str, g: &SimpleGraph, limits: &Limits) -> Result<(String, Value), Failure> {
    let inv = g.invariants(limits)?;
    let count = |n: usize, one: &str, many: &str| format!("{n} {}", if n == 1 { one } else { many });
    let line = format!(
        "{title}: {}, {}; {inv}",
        count(g.len(), "vertex", "vertices"),
        count(g.edge_count(), "edge", "edges")
    );
    let data = json!({
        "graph": title,
        "vertices": g.labels(),
        "edges": g.edges(),
        "invariants": inv,
    });
    Ok((line, data))
}

fn part_verdicts(task: &str, parts: &[SuitePart], witness: &Value) -> Vec<Verdict> {
    parts
        .iter()
        .map(|p| Verdict {
            name: format!("{task} part {}: {}", p.part, p.claim),
            applicable: p.applicable,
            passed: p.passed,
            detail: p.detail.clone(),
            witness: (!p.passed).then(|| witness.clone()),
        })
        .collect()
}

fn unsupported(task: &str, obj: &Object) -> Failure {
    Failure::Input(format!("task `{task}` does not apply to a {}", obj.kind()))
}

fn semigroup_of(obj: &Object) -> Option<SemigroupTable> {
    match obj {
        Object::Ring(r) => Some(r.multiplicative_semigroup()),
        Object::Semigroup(s) => Some(s.clone()),
        Object::Space(x) => Some(x.closure_lattice()),
        Object::Lattice(l) => l.semigroup(),
        Object::Poset(SpectralPoset::Finite(_)) | Object::Poset(SpectralPoset::Fan(_)) => None,
    }
}

pub fn run_task(task: &str, obj: &Object, name: &str, limits: &Limits) -> Result<TaskOutput, Failure> {
    let mut out = TaskOutput::new(task);
    match task {
        "invariants" => invariants(&mut out, obj, name, limits)?,
        "eq-quotient" => {
            let s = match obj {
                Object::Ring(_) | Object::Semigroup(_) => semigroup_of(obj).expect("algebraic object"),
                _ => return Err(unsupported(task, obj)),
            };
            eq_quotient_task(&mut out, &s, name, limits)?;
        }
        "armendariz" => {
            let s = match obj {
                Object::Ring(_) | Object::Semigroup(_) => semigroup_of(obj).expect("algebraic object"),
                _ => return Err(unsupported(task, obj)),
            };
            let q = eq_quotient(&s, QuotientMode::Strict, limits)?;
            suite_task(&mut out, "armendariz", &q.projection, limits)?;
        }
        "ideals" => ideals_task(&mut out, ring(obj, task)?, limits)?,
        "ag" => {
            let r = ring(obj, task)?;
            let v = ag_conjecture_check(r, limits)?;
            let ideals = r.ideals(limits)?;
            let g = zero_divisor_graph(&ideals.semigroup(zdg_core::ring::IdealOp::Mult).table);
            let (line, data) = graph_entry(&format!("AG({name})"), &g, limits)?;
            out.lines.push(line);
            out.lines.push(match &v.witness {
                Some(w) => format!("3-cycle: {}, {}, {}", w[0], w[1], w[2]),
                None => "no 3-cycle".into(),
            });
            let witness = value(&v);
            out.verdicts.push(Verdict {
                name: "ag: reduced with more than two minimal primes implies girth 3".into(),
                applicable: v.hypothesis_met,
                passed: v.passed,
                detail: format!("minimal primes {}, girth {}", v.minimal_primes, v.girth),
                witness: (!v.passed).then_some(witness.clone()),
            });
            out.data = json!({ "graph": data, "verdict": witness });
        }
        "comaximal" => {
            let r = ring(obj, task)?;
            let rep = comaximal_suite(r, limits)?;
            out.lines.push(format!(
                "comaximal graph of {name}: {}; maximal ideals {}; Jacobson radical {} ({})",
                rep.invariants,
                rep.max_ideals.join(", "),
                rep.jacobson,
                if rep.jacobson_prime { "prime" } else { "not prime" }
            ));
            let data = value(&rep);
            out.verdicts = part_verdicts(task, &rep.parts, &data);
            out.data = data;
        }
        "axioms" => {
            let x = space(obj, task)?;
            let f = x.axiom_suite();
            out.lines.push(format!(
                "T0 {}, T1 {}, T½ {}, pearled {}, noetherian {} (longest chain {})",
                f.t0, f.t1, f.t_half, f.pearled, f.noetherian, f.longest_chain
            ));
            let data = value(&f);
            out.verdicts.push(Verdict {
                name: "axioms: implication arrows".into(),
                applicable: true,
                passed: f.violations.is_empty(),
                detail: f.violations.join("; "),
                witness: (!f.violations.is_empty()).then(|| data.clone()),
            });
            out.data = data;
        }
        "alpha" => {
            let x = space(obj, task)?;
            let g = x.alpha_map()?;
            suite_task(&mut out, "alpha", &g, limits)?;
        }
        "t1" => {
            let l = lattice(obj, task)?;
            let rep = t1_invariants(&l, limits)?;
            out.lines.push(format!("|Y| = {} ({}): {}", rep.ground, rep.case, rep.invariants));
            let data = value(&rep);
            out.verdicts.push(Verdict {
                name: "t1: case table".into(),
                applicable: true,
                passed: rep.passed,
                detail: format!(
                    "expected diameter {}, girth {}, clq = χ = |Y|{}",
                    opt(rep.expected_diameter),
                    opt(rep.expected_girth),
                    if rep.empty_expected { ", empty graph" } else { "" }
                ),
                witness: (!rep.passed).then(|| data.clone()),
            });
            out.data = data;
        }
        "charirrconn" => {
            let l = lattice(obj, task)?;
            let rep = char_check_irr_conn(&l)?;
            out.lines.push(format!(
                "irreducible {} / all pairs within distance 2 {}; connected {} / every edge in a triangle {}",
                rep.irreducible, rep.all_pairs_path_two, rep.connected, rep.all_edges_in_triangle
            ));
            let data = value(&rep);
            out.verdicts.push(Verdict {
                name: "charirrconn: graph characterizations".into(),
                applicable: true,
                passed: rep.passed,
                detail: format!("vertex set ok {}", rep.vertex_set_ok),
                witness: (!rep.passed).then(|| data.clone()),
            });
            out.data = data;
        }
        SPECS_SUITE => {
            let p = match obj {
                Object::Poset(p) => p.clone(),
                Object::Ring(r) => SpectralPoset::from_ring(r, limits)?,
                _ => return Err(unsupported(task, obj)),
            };
            let rep = specs_theorem_suite(&p, limits)?;
            out.lines.push(format!(
                "{} mode, |Max| = {}, Max {}",
                rep.mode,
                rep.max_count,
                if rep.max_irreducible { "irreducible" } else { "reducible" }
            ));
            out.lines.push(format!("G = Γ(σ(Spec)): {}", rep.g));
            out.lines.push(format!("H = Γ(σ(Max)): {}", rep.h));
            out.lines.extend(rep.witnesses.iter().map(|w| format!("witness: {w}")));
            let data = value(&rep);
            out.verdicts = part_verdicts(task, &rep.parts, &data);
            out.data = data;
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown task `{other}`; known: {}, {SPECS_SUITE}",
                TASKS.join(", ")
            )))
        }
    }
    Ok(out)
}

fn opt(x: Option<zdg_core::graph::Extended>) -> String {
    x.map_or("-".into(), |e| e.to_string())
}

fn ring<'a>(obj: &'a Object, task: &str) -> Result<&'a FiniteRing, Failure> {
    match obj {
        Object::Ring(r) => Ok(r),
        _ => Err(unsupported(task, obj)),
    }
}

fn space<'a>(obj: &'a Object, task: &str) -> Result<&'a FiniteSpace, Failure> {
    match obj {
        Object::Space(x) => Ok(x),
        _ => Err(unsupported(task, obj)),
    }
}

fn lattice(obj: &Object, task: &str) -> Result<SubsetLattice, Failure> {
    match obj {
        Object::Lattice(l) => Ok(l.clone()),
        Object::Space(x) => Ok(SubsetLattice::Finite(x.clone())),
        _ => Err(unsupported(task, obj)),
    }
}

fn invariants(out: &mut TaskOutput, obj: &Object, name: &str, limits: &Limits) -> Result<(), Failure> {
    let mut graphs = Vec::new();
    match obj {
        Object::Poset(SpectralPoset::Finite(p)) => {
            let g = zero_divisor_graph(&p.spec_space(limits)?.closure_lattice());
            let h = zero_divisor_graph(&p.max_space(limits)?.closure_lattice());
            graphs.push(graph_entry(&format!("Γ(σ(Spec {name}))"), &g, limits)?);
            graphs.push(graph_entry(&format!("Γ(σ(Max {name}))"), &h, limits)?);
        }
        Object::Poset(p @ SpectralPoset::Fan(_)) => {
            let rep = specs_theorem_suite(p, limits)?;
            out.lines.push(format!("Γ(σ(Spec {name})): {}", rep.g));
            out.lines.push(format!("Γ(σ(Max {name})): {}", rep.h));
            out.data = json!({ "g": rep.g, "h": rep.h });
            return Ok(());
        }
        Object::Lattice(l @ SubsetLattice::SymbolicCofinite) => {
            let rep = t1_invariants(l, limits)?;
            out.lines.push(format!("Γ(cofinite ℕ): {}", rep.invariants));
            out.data = json!({ "invariants": rep.invariants });
            return Ok(());
        }
        _ => {
            let s = semigroup_of(obj).expect("finite object");
            graphs.push(graph_entry(&format!("Γ({name})"), &zero_divisor_graph(&s), limits)?);
        }
    }
    let (lines, data): (Vec<String>, Vec<Value>) = graphs.into_iter().unzip();
    out.lines = lines;
    out.data = Value::Array(data);
    Ok(())
}

fn eq_quotient_task(out: &mut TaskOutput, s: &SemigroupTable, name: &str, limits: &Limits) -> Result<(), Failure> {
    let strict = s.is_nilpotent_free();
    let mode = if strict { QuotientMode::Strict } else { QuotientMode::Permissive };
    let q = eq_quotient(s, mode, limits)?;
    let classes: Vec<Vec<&str>> = q
        .classes
        .iter()
        .map(|c| c.iter().map(|&i| s.label(i)).collect())
        .collect();
    out.lines.push(format!(
        "{} classes ({} mode)",
        q.classes.len(),
        if strict { "strict" } else { "permissive" }
    ));
    let (line, graph) = graph_entry(&format!("Γ_E({name})"), &zero_divisor_graph(&q.quotient), limits)?;
    out.lines.push(line);
    if strict {
        let rep = check_armendariz(&q.projection);
        let w = value(&rep);
        out.verdicts.push(Verdict {
            name: "eq-quotient: projection is Armendariz".into(),
            applicable: true,
            passed: rep.is_armendariz(),
            detail: String::new(),
            witness: (!rep.is_armendariz()).then_some(w),
        });
    } else {
        out.lines.push("not nilpotent-free: no Armendariz claim for the projection".into());
    }
    out.data = json!({
        "mode": if strict { "strict" } else { "permissive" },
        "classes": classes,
        "graph": graph,
    });
    Ok(())
}

fn suite_task(out: &mut TaskOutput, task: &str, g: &SemigroupMap, limits: &Limits) -> Result<(), Failure> {
    let rep = armendariz_invariant_suite(g, limits)?;
    out.lines.push(format!("source Γ: {}", rep.source));
    out.lines.push(format!("target Γ: {}", rep.target));
    out.lines.push(format!("induced vertex map bijective: {}", rep.induced_bijective));
    let data = value(&rep);
    out.verdicts = part_verdicts(task, &rep.parts, &data);
    out.data = data;
    Ok(())
}

fn ideals_task(out: &mut TaskOutput, r: &FiniteRing, limits: &Limits) -> Result<(), Failure> {
    let ideals = r.ideals(limits)?;
    let max = ideals.maximal();
    let list: Vec<Value> = (0..ideals.len())
        .map(|i| {
            let members = ideals.ideal(i).members();
            json!({
                "label": ideals.label(i),
                "members": members,
                "prime": ideals.is_prime(i),
                "maximal": max.contains(&i),
            })
        })
        .collect();
    out.lines.push(format!(
        "{} ideals; primes {}; maximal {}; Jacobson radical {}",
        ideals.len(),
        ideals.primes().iter().map(|&i| ideals.label(i)).collect::<Vec<_>>().join(", "),
        max.iter().map(|&i| ideals.label(i)).collect::<Vec<_>>().join(", "),
        ideals.label(ideals.jacobson())
    ));
    for i in 0..ideals.len() {
        let members: Vec<&str> = ideals.ideal(i).members().into_iter().map(|a| r.label(a)).collect();
        out.lines.push(format!("  {} = {{{}}}", ideals.label(i), members.join(", ")));
    }
    out.data = json!({
        "elements": r.labels(),
        "ideals": list,
        "jacobson": ideals.label(ideals.jacobson()),
    });
    Ok(())
}
