use clap::ValueEnum;
use zdg_core::graph::{zero_divisor_graph, SimpleGraph};
use zdg_core::ring::IdealOp;
use zdg_core::semigroup::{eq_quotient, QuotientMode};
use zdg_core::spectral::{FinitePoset, SpectralPoset};
use zdg_core::Limits;

use crate::object::Object;
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    /// Γ of the object's semigroup (σ(Spec) for a poset).
    Gamma,
    /// Γ of the annihilator quotient.
    Eq,
    /// Annihilating-ideal graph of a ring.
    Ag,
    /// Comaximal graph of a ring.
    Comaximal,
    /// Γ(σ(Spec)) of a poset or ring.
    Spec,
    /// Γ(σ(Max)) of a poset or ring.
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

fn finite_poset(obj: &Object, limits: &Limits) -> Result<Option<FinitePoset>, Failure> {
    Ok(match obj {
        Object::Poset(SpectralPoset::Finite(p)) => Some(p.clone()),
        Object::Ring(r) => Some(FinitePoset::from_ring(r, limits)?),
        _ => None,
    })
}

/// The requested graph and its title.
pub fn graph(obj: &Object, kind: GraphKind, name: &str, limits: &Limits) -> Result<(SimpleGraph, String), Failure> {
    let nope = || {
        Failure::Input(format!(
            "no finite `{}` graph for a {}",
            kind.to_possible_value().expect("named").get_name(),
            obj.kind()
        ))
    };
    let semigroup = || match obj {
        Object::Ring(r) => Some(r.multiplicative_semigroup()),
        Object::Semigroup(s) => Some(s.clone()),
        Object::Space(x) => Some(x.closure_lattice()),
        Object::Lattice(l) => l.semigroup(),
        Object::Poset(_) => None,
    };
    Ok(match kind {
        GraphKind::Gamma if matches!(obj, Object::Poset(_)) => return graph(obj, GraphKind::Spec, name, limits),
        GraphKind::Gamma => (zero_divisor_graph(&semigroup().ok_or_else(nope)?), format!("Γ({name})")),
        GraphKind::Eq => {
            let s = match obj {
                Object::Ring(_) | Object::Semigroup(_) => semigroup().expect("algebraic"),
                _ => return Err(nope()),
            };
            let q = eq_quotient(&s, QuotientMode::Permissive, limits)?;
            (zero_divisor_graph(&q.quotient), format!("Γ_E({name})"))
        }
        GraphKind::Ag | GraphKind::Comaximal => {
            let Object::Ring(r) = obj else { return Err(nope()) };
            let ideals = r.ideals(limits)?;
            if kind == GraphKind::Ag {
                (zero_divisor_graph(&ideals.semigroup(IdealOp::Mult).table), format!("AG({name})"))
            } else {
                (zero_divisor_graph(&ideals.semigroup(IdealOp::Add).table), format!("Γ(Id {name}, +)"))
            }
        }
        GraphKind::Spec => {
            let p = finite_poset(obj, limits)?.ok_or_else(nope)?;
            (zero_divisor_graph(&p.spec_space(limits)?.closure_lattice()), format!("Γ(σ(Spec {name}))"))
        }
        GraphKind::Max => {
            let p = finite_poset(obj, limits)?.ok_or_else(nope)?;
            (zero_divisor_graph(&p.max_space(limits)?.closure_lattice()), format!("Γ(σ(Max {name}))"))
        }
    })
}

pub fn render(g: &SimpleGraph, title: &str, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => g.to_dot(title),
        ExportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&g.to_json()).expect("graph json");
            s.push('\n');
            s
        }
    }
}
