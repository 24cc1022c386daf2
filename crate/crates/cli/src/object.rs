use std::fs;
use std::path::Path;

use clap::Args;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use zdg_core::lattice::SubsetLattice;
use zdg_core::ring::FiniteRing;
use zdg_core::semigroup::{SemigroupTable, TableJson};
use zdg_core::spectral::{FinitePoset, PosetJson, SpectralPoset};
use zdg_core::topology::{FiniteSpace, SpaceJson};
use zdg_core::Limits;

use crate::Failure;

/// Exactly one object per request.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ObjectArgs {
    /// Ring spec, e.g. `Zn:6`, `gf:4`, `prod:Zn:2,Zn:3`, `polyquot:p=2;mod=0,0,1`.
    #[arg(long)]
    pub ring: Option<String>,
    /// Semigroup table as JSON.
    #[arg(long, value_name = "FILE")]
    pub semigroup: Option<String>,
    /// Finite space as JSON (`points`, `closed`).
    #[arg(long, value_name = "FILE")]
    pub space: Option<String>,
    /// Poset JSON file (`points`, `leq`) or a fan model such as `fan:generics=2;sharing=all`.
    #[arg(long, value_name = "FILE|fan:...")]
    pub poset: Option<String>,
    /// `symbolic-cofinite` or `power:N`.
    #[arg(long)]
    pub lattice: Option<String>,
}

pub enum Object {
    Ring(FiniteRing),
    Semigroup(SemigroupTable),
    Space(FiniteSpace),
    Poset(SpectralPoset),
    Lattice(SubsetLattice),
}

fn read_json<T: DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let text = fs::read_to_string(Path::new(path)).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Ring(_) => "ring",
            Object::Semigroup(_) => "semigroup",
            Object::Space(_) => "space",
            Object::Poset(_) => "poset",
            Object::Lattice(_) => "lattice",
        }
    }

    /// Short name used in graph titles.
    pub fn name(&self, args: &ObjectArgs) -> String {
        match self {
            Object::Ring(r) => r.to_string(),
            _ => args.source().to_string(),
        }
    }
}

impl ObjectArgs {
    pub fn source(&self) -> &str {
        [&self.ring, &self.semigroup, &self.space, &self.poset, &self.lattice]
            .into_iter()
            .find_map(|o| o.as_deref())
            .unwrap_or("")
    }

    pub fn load(&self, limits: &Limits) -> Result<Object, Failure> {
        if let Some(spec) = &self.ring {
            return Ok(Object::Ring(FiniteRing::parse(spec, limits)?));
        }
        if let Some(path) = &self.semigroup {
            let raw: TableJson = read_json(path)?;
            let t = SemigroupTable::try_from(raw)?;
            if t.len() > limits.table {
                return Err(zdg_core::Error::GuardExceeded {
                    guard: "table",
                    limit: limits.table,
                    actual: t.len(),
                }
                .into());
            }
            return Ok(Object::Semigroup(t));
        }
        if let Some(path) = &self.space {
            let raw: SpaceJson = read_json(path)?;
            return Ok(Object::Space(FiniteSpace::from_json(&raw, limits)?));
        }
        if let Some(src) = &self.poset {
            if src.starts_with("fan:") {
                return Ok(Object::Poset(SpectralPoset::parse_fan(src)?));
            }
            let raw: PosetJson = read_json(src)?;
            return Ok(Object::Poset(SpectralPoset::Finite(FinitePoset::from_json(&raw, limits)?)));
        }
        if let Some(sel) = &self.lattice {
            if sel == "symbolic-cofinite" {
                return Ok(Object::Lattice(SubsetLattice::SymbolicCofinite));
            }
            if let Some(n) = sel.strip_prefix("power:") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Failure::Input(format!("lattice `{sel}`: expected power:N")))?;
                if n > limits.points.min(12) {
                    return Err(zdg_core::Error::GuardExceeded {
                        guard: "points",
                        limit: limits.points.min(12),
                        actual: n,
                    }
                    .into());
                }
                return Ok(Object::Lattice(SubsetLattice::power_set(n)));
            }
            return Err(Failure::Input(format!(
                "unknown lattice `{sel}`; expected symbolic-cofinite or power:N"
            )));
        }
        Err(Failure::Input("no object given".into()))
    }

    pub fn echo(&self, obj: &Object) -> Value {
        let mut v = json!({ "kind": obj.kind(), "source": self.source() });
        let extra = match obj {
            Object::Ring(r) => json!({ "ring": r.to_string(), "order": r.order() }),
            Object::Semigroup(s) => json!({ "elements": s.len() }),
            Object::Space(x) => json!({ "points": x.len(), "closed_sets": x.closed_sets().len() }),
            Object::Poset(SpectralPoset::Finite(p)) => json!({ "points": p.len() }),
            Object::Poset(SpectralPoset::Fan(f)) => json!({ "blocks": f.blocks(), "generics": f.generics() }),
            Object::Lattice(l) => json!({ "ground": l.ground_size() }),
        };
        if let (Value::Object(a), Value::Object(b)) = (&mut v, extra) {
            a.extend(b);
        }
        v
    }
}
