//! Ring spec strings: `Zn:6`, `gf:4`, `prod:Zn:2,gf:4`,
//! `polyquot:p=2;mod=1,1,1`, `mvq:p=2;vars=x,y;rel=x2,xy,y2`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::Limits;

use super::FiniteRing;

const TAGS: [&str; 5] = ["Zn:", "gf:", "prod:", "polyquot:", "mvq:"];

fn bad(spec: &str, why: &str) -> Error {
    Error::Parse(format!("ring spec `{spec}`: {why}"))
}

fn number(spec: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| bad(spec, &format!("expected a number, got `{s}`")))
}

fn key_values<'a>(spec: &str, body: &'a str) -> Result<HashMap<&'a str, &'a str>> {
    body.split(';')
        .filter(|kv| !kv.trim().is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| bad(spec, &format!("expected key=value, got `{kv}`")))
        })
        .collect()
}

fn require<'a>(spec: &str, kv: &HashMap<&str, &'a str>, key: &str) -> Result<&'a str> {
    kv.get(key)
        .copied()
        .ok_or_else(|| bad(spec, &format!("missing `{key}=`")))
}

pub(super) fn parse_ring(spec: &str, limits: &Limits) -> Result<FiniteRing> {
    let spec = spec.trim();
    if let Some(n) = spec.strip_prefix("Zn:") {
        return FiniteRing::zn_with(number(spec, n)?, limits);
    }
    if let Some(q) = spec.strip_prefix("gf:") {
        return FiniteRing::gf(number(spec, q)?, limits);
    }
    if let Some(body) = spec.strip_prefix("prod:") {
        // A comma starts a new factor only when followed by a known tag;
        // otherwise it belongs to the current factor (e.g. `mod=1,1,1`).
        let mut factors: Vec<String> = Vec::new();
        for tok in body.split(',') {
            match factors.last_mut() {
                Some(cur) if !TAGS.iter().any(|t| tok.trim_start().starts_with(t)) => {
                    cur.push(',');
                    cur.push_str(tok);
                }
                _ => factors.push(tok.to_string()),
            }
        }
        if factors.is_empty() || factors[0].trim().is_empty() {
            return Err(bad(spec, "empty product"));
        }
        let rings = factors
            .iter()
            .map(|f| parse_ring(f, limits))
            .collect::<Result<Vec<_>>>()?;
        return FiniteRing::product(&rings, limits);
    }
    if let Some(body) = spec.strip_prefix("polyquot:") {
        let kv = key_values(spec, body)?;
        let p = number(spec, require(spec, &kv, "p")?)?;
        let modulus = require(spec, &kv, "mod")?
            .split(',')
            .map(|c| number(spec, c))
            .collect::<Result<Vec<_>>>()?;
        return FiniteRing::polyquot(p, &modulus, limits);
    }
    if let Some(body) = spec.strip_prefix("mvq:") {
        let kv = key_values(spec, body)?;
        let p = number(spec, require(spec, &kv, "p")?)?;
        let vars: Vec<&str> = require(spec, &kv, "vars")?.split(',').map(str::trim).collect();
        let rels: Vec<&str> = kv
            .get("rel")
            .map(|r| r.split(',').map(str::trim).filter(|s| !s.is_empty()).collect())
            .unwrap_or_default();
        return FiniteRing::multivariate_quot(p, &vars, &rels, limits);
    }
    Err(bad(spec, "unknown ring kind"))
}

/// Parses a monomial like `x2y`, `x^2y`, `xy` into an exponent vector.
pub(super) fn parse_monomial(s: &str, vars: &[&str]) -> Result<Vec<u32>> {
    let err = || Error::Parse(format!("cannot parse monomial `{s}` over {vars:?}"));
    let mut by_len: Vec<(usize, &str)> = vars.iter().copied().enumerate().collect();
    by_len.sort_by_key(|(_, v)| std::cmp::Reverse(v.len()));
    let mut exps = vec![0u32; vars.len()];
    let mut rest = s.trim();
    if rest.is_empty() || vars.iter().any(|v| v.is_empty() || v.chars().any(|c| c.is_ascii_digit())) {
        return Err(err());
    }
    while !rest.is_empty() {
        let (i, v) = by_len
            .iter()
            .find(|(_, v)| rest.starts_with(v))
            .copied()
            .ok_or_else(err)?;
        rest = rest[v.len()..].trim_start_matches('^');
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let e = if digits == 0 {
            1
        } else {
            rest[..digits].parse().map_err(|_| err())?
        };
        rest = &rest[digits..];
        exps[i] += e;
    }
    Ok(exps)
}
