use clap::Args;
use serde_json::{json, Value};
use zdg_core::Limits;

pub const ENV_VAR: &str = "ZDG_GUARDS";

const NAMES: [&str; 8] = [
    "table",
    "clique-vertices",
    "chromatic-vertices",
    "ring-order",
    "ideals",
    "polynomials",
    "monomials",
    "points",
];

/// Per-run guard overrides. Precedence: defaults, then `ZDG_GUARDS`, then flags.
#[derive(Debug, Clone, Default, Args)]
pub struct GuardArgs {
    /// Largest semigroup table for exhaustive operations.
    #[arg(long, value_name = "N", global = true)]
    pub guard_table: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_clique_vertices: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_chromatic_vertices: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_ring_order: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_ideals: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_polynomials: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_monomials: Option<usize>,
    #[arg(long, value_name = "N", global = true)]
    pub guard_points: Option<usize>,
}

fn slot<'a>(l: &'a mut Limits, name: &str) -> Option<&'a mut usize> {
    Some(match name {
        "table" => &mut l.table,
        "clique-vertices" => &mut l.clique_vertices,
        "chromatic-vertices" => &mut l.chromatic_vertices,
        "ring-order" => &mut l.ring_order,
        "ideals" => &mut l.ideals,
        "polynomials" => &mut l.polynomials,
        "monomials" => &mut l.monomials,
        "points" => &mut l.points,
        _ => return None,
    })
}

/// Parses `name=value[,name=value...]`.
pub fn apply_env(l: &mut Limits, raw: &str) -> Result<(), String> {
    for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("{ENV_VAR}: expected name=value, got `{item}`"))?;
        let name = name.trim().replace('_', "-");
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("{ENV_VAR}: `{value}` is not a number"))?;
        let s = slot(l, &name)
            .ok_or_else(|| format!("{ENV_VAR}: unknown guard `{name}`; known: {}", NAMES.join(", ")))?;
        *s = value;
    }
    Ok(())
}

impl GuardArgs {
    pub fn resolve(&self, env: Option<&str>) -> Result<Limits, String> {
        let mut l = Limits::default();
        if let Some(raw) = env {
            apply_env(&mut l, raw)?;
        }
        let flags = [
            ("table", self.guard_table),
            ("clique-vertices", self.guard_clique_vertices),
            ("chromatic-vertices", self.guard_chromatic_vertices),
            ("ring-order", self.guard_ring_order),
            ("ideals", self.guard_ideals),
            ("polynomials", self.guard_polynomials),
            ("monomials", self.guard_monomials),
            ("points", self.guard_points),
        ];
        for (name, v) in flags {
            if let Some(v) = v {
                *slot(&mut l, name).expect("known guard") = v;
            }
        }
        Ok(l)
    }
}

pub fn to_json(l: &Limits) -> Value {
    json!({
        "table": l.table,
        "clique-vertices": l.clique_vertices,
        "chromatic-vertices": l.chromatic_vertices,
        "ring-order": l.ring_order,
        "ideals": l.ideals,
        "polynomials": l.polynomials,
        "monomials": l.monomials,
        "points": l.points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let args = GuardArgs {
            guard_ideals: Some(7),
            ..GuardArgs::default()
        };
        let l = args.resolve(Some("ideals=3, table=99,chromatic_vertices=5")).unwrap();
        assert_eq!((l.ideals, l.table, l.chromatic_vertices), (7, 99, 5));
        assert!(args.resolve(Some("bogus=1")).unwrap_err().contains("bogus"));
        assert!(args.resolve(Some("table")).is_err());
    }
}
