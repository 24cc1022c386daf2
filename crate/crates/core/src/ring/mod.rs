//! Finite commutative rings with unity, stored as explicit tables.

mod ideal;
mod spec;

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::SemigroupTable;

pub use ideal::{
    ag_conjecture_check, comaximal_suite, AgVerdict, ComaximalReport, Ideal, IdealOp, IdealSemigroup, RingIdeals,
};

/// How a ring was constructed. Used for display and as its canonical spec string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    Zn(usize),
    Gf(usize),
    Product(Vec<RingKind>),
    /// `F_p[x]/(modulus)`, coefficients lowest degree first.
    PolyQuot { p: usize, modulus: Vec<usize> },
    /// `F_p[vars]/(monomial relations)`.
    MultiQuot {
        p: usize,
        vars: Vec<String>,
        relations: Vec<String>,
    },
    Raw,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            RingKind::Zn(n) => write!(f, "Zn:{n}"),
            RingKind::Gf(q) => write!(f, "gf:{q}"),
            RingKind::Product(fs) => {
                let parts: Vec<_> = fs.iter().map(ToString::to_string).collect();
                write!(f, "prod:{}", parts.join(","))
            }
            RingKind::PolyQuot { p, modulus } => write!(f, "polyquot:p={p};mod={}", join(modulus)),
            RingKind::MultiQuot { p, vars, relations } => write!(
                f,
                "mvq:p={p};vars={};rel={}",
                vars.join(","),
                relations.join(",")
            ),
            RingKind::Raw => f.write_str("raw"),
        }
    }
}

/// A validated finite commutative ring with unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    kind: RingKind,
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `q = p^k` with `p` prime, if it is a prime power.
pub(crate) fn prime_power(q: usize) -> Option<(usize, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn inverse_mod(a: usize, p: usize) -> usize {
    (1..p).find(|&x| a * x % p == 1).unwrap_or(0)
}

/// `x^k` style label for a univariate coefficient vector (lowest degree first).
fn poly_label(coeffs: &[usize], var: &str) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        terms.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (c, false) => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = index % base;
            index /= base;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], base: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * base + d)
}

impl FiniteRing {
    /// Builds a ring from explicit tables and checks every axiom.
    pub fn from_tables(
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        limits: &Limits,
    ) -> Result<Self> {
        Self::build(RingKind::Raw, labels, add, mul, zero, one, limits)
    }

    fn build(
        kind: RingKind,
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        limits: &Limits,
    ) -> Result<Self> {
        let n = labels.len();
        Limits::check("ring-order", limits.ring_order, n)?;
        if n == 0 || add.len() != n * n || mul.len() != n * n || zero >= n || one >= n {
            return Err(Error::Invalid("malformed ring tables".into()));
        }
        if add.iter().chain(&mul).any(|&x| x >= n) {
            return Err(Error::Invalid("ring table entry out of range".into()));
        }
        let r = FiniteRing {
            kind,
            labels,
            add,
            mul,
            zero,
            one,
        };
        r.check_axioms()?;
        Ok(r)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        let fail = |axiom: &'static str, w: String| Err(Error::RingAxiom { axiom, witness: w });
        for a in 0..n {
            if self.add(self.zero, a) != a {
                return fail("additive identity", format!("{a}"));
            }
            if self.mul(self.one, a) != a {
                return fail("multiplicative identity", format!("{a}"));
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return fail("additive inverse", format!("{a}"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", format!("({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", format!("({a},{b})"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let (ab_add, ab_mul) = (self.add(a, b), self.mul(a, b));
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", format!("({a},{b},{c})"));
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", format!("({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_mul, self.mul(a, c)) {
                        return fail("distributivity", format!("({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// The integers modulo `n`, `n ≥ 1`.
    pub fn zn(n: usize) -> Result<Self> {
        Self::zn_with(n, &Limits::default())
    }

    pub fn zn_with(n: usize, limits: &Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("Z_0 is infinite".into()));
        }
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        let one = 1 % n;
        Self::build(
            RingKind::Zn(n),
            (0..n).map(|i| i.to_string()).collect(),
            add,
            mul,
            0,
            one,
            limits,
        )
    }

    /// Direct product; elements are tuples in lexicographic order.
    pub fn product(factors: &[FiniteRing], limits: &Limits) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("empty product".into()));
        }
        let sizes: Vec<usize> = factors.iter().map(FiniteRing::order).collect();
        let n = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s));
        let n = n.ok_or_else(|| Error::Invalid("product too large".into()))?;
        Limits::check("ring-order", limits.ring_order, n)?;
        let split = |mut i: usize| {
            let mut parts = vec![0; factors.len()];
            for k in (0..factors.len()).rev() {
                parts[k] = i % sizes[k];
                i /= sizes[k];
            }
            parts
        };
        let join = |parts: &[usize]| parts.iter().zip(&sizes).fold(0, |acc, (&p, &s)| acc * s + p);
        let tuples: Vec<Vec<usize>> = (0..n).map(split).collect();
        let table = |op: &dyn Fn(&FiniteRing, usize, usize) -> usize| {
            let mut t = Vec::with_capacity(n * n);
            for a in &tuples {
                for b in &tuples {
                    let c: Vec<usize> = factors
                        .iter()
                        .enumerate()
                        .map(|(k, r)| op(r, a[k], b[k]))
                        .collect();
                    t.push(join(&c));
                }
            }
            t
        };
        let add = table(&|r, x, y| r.add(x, y));
        let mul = table(&|r, x, y| r.mul(x, y));
        let labels = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().zip(factors).map(|(&x, r)| r.label(x)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let zero = join(&factors.iter().map(|r| r.zero).collect::<Vec<_>>());
        let one = join(&factors.iter().map(|r| r.one).collect::<Vec<_>>());
        Self::build(
            RingKind::Product(factors.iter().map(|r| r.kind.clone()).collect()),
            labels,
            add,
            mul,
            zero,
            one,
            limits,
        )
    }

    /// `F_p[x]/(modulus)`; `modulus` lists coefficients from the constant term up.
    pub fn polyquot(p: usize, modulus: &[usize], limits: &Limits) -> Result<Self> {
        let kind = RingKind::PolyQuot {
            p,
            modulus: modulus.to_vec(),
        };
        Self::polyquot_kind(p, modulus, kind, limits)
    }

    fn polyquot_kind(p: usize, modulus: &[usize], kind: RingKind, limits: &Limits) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        let mut m: Vec<usize> = modulus.iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.is_empty() {
            return Err(Error::Invalid("zero modulus gives an infinite ring".into()));
        }
        let k = m.len() - 1;
        let inv = inverse_mod(m[k], p);
        let monic: Vec<usize> = m.iter().map(|c| c * inv % p).collect();
        let n = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p));
        let n = n.ok_or_else(|| Error::Invalid("quotient too large".into()))?;
        Limits::check("ring-order", limits.ring_order, n)?;
        let elems: Vec<Vec<usize>> = (0..n).map(|i| digits(i, p, k)).collect();
        let reduce = |mut c: Vec<usize>| {
            // Eliminate degrees ≥ k using x^k = -(lower terms of monic).
            for d in (k..c.len()).rev() {
                let lead = c[d];
                if lead == 0 {
                    continue;
                }
                for (j, &mj) in monic.iter().enumerate().take(k) {
                    let pos = d - k + j;
                    c[pos] = (c[pos] + p * p - lead * mj % p) % p;
                }
                c[d] = 0;
            }
            c.truncate(k);
            c.resize(k, 0);
            c
        };
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(undigits(&s, p));
                let mut prod = vec![0; (2 * k).max(1)];
                for (i, &x) in a.iter().enumerate() {
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                mul.push(undigits(&reduce(prod), p));
            }
        }
        let labels = elems.iter().map(|c| poly_label(c, "x")).collect();
        let one = if n == 1 { 0 } else { 1 };
        Self::build(kind, labels, add, mul, 0, one, limits)
    }

    /// The field with `q` elements, built as `F_p[x]/(f)` for the first
    /// irreducible monic `f` of degree `k` in index order.
    pub fn gf(q: usize, limits: &Limits) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?;
        if k == 1 {
            let mut r = Self::zn_with(p, limits)?;
            r.kind = RingKind::Gf(q);
            return Ok(r);
        }
        let k = k as usize;
        for tail in 0..q {
            let mut modulus = digits(tail, p, k);
            modulus.push(1);
            let r = Self::polyquot_kind(p, &modulus, RingKind::Gf(q), limits)?;
            if r.is_field() {
                return Ok(r);
            }
        }
        Err(Error::Invalid(format!("no irreducible polynomial found for gf:{q}")))
    }

    /// `F_p[vars]/(relations)` for monomial relations such as `x2`, `xy`, `y^3`.
    pub fn multivariate_quot(
        p: usize,
        vars: &[&str],
        relations: &[&str],
        limits: &Limits,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if vars.is_empty() {
            return Err(Error::Invalid("no variables".into()));
        }
        let rels: Vec<Vec<u32>> = relations
            .iter()
            .map(|r| spec::parse_monomial(r, vars))
            .collect::<Result<_>>()?;
        let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
        let standard = |m: &[u32]| !rels.iter().any(|r| divides(r, m));
        // Standard monomials, grown from 1 by multiplying by single variables.
        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut frontier = vec![vec![0u32; vars.len()]];
        while let Some(m) = frontier.pop() {
            if !standard(&m) || basis.contains(&m) {
                continue;
            }
            basis.push(m.clone());
            if basis.len() > limits.monomials {
                return Err(Error::InfiniteQuotient {
                    bound: limits.monomials,
                });
            }
            for v in 0..vars.len() {
                let mut next = m.clone();
                next[v] += 1;
                frontier.push(next);
            }
        }
        basis.sort_by_key(|m| (m.iter().sum::<u32>(), std::cmp::Reverse(m.clone())));
        let k = basis.len();
        let n = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p));
        let n = n.ok_or_else(|| Error::Invalid("quotient too large".into()))?;
        Limits::check("ring-order", limits.ring_order, n)?;
        let times: Vec<Vec<Option<usize>>> = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        let m: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        basis.iter().position(|c| *c == m)
                    })
                    .collect()
            })
            .collect();
        let elems: Vec<Vec<usize>> = (0..n).map(|i| digits(i, p, k)).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(undigits(&s, p));
                let mut prod = vec![0; k];
                for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
                    for (j, &y) in b.iter().enumerate().filter(|(_, &y)| y != 0) {
                        if let Some(t) = times[i][j] {
                            prod[t] = (prod[t] + x * y) % p;
                        }
                    }
                }
                mul.push(undigits(&prod, p));
            }
        }
        let mono_label = |m: &[u32]| -> String {
            m.iter()
                .zip(vars)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect()
        };
        let labels = elems
            .iter()
            .map(|c| {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        let mono = mono_label(&basis[i]);
                        match (x, mono.is_empty()) {
                            (_, true) => x.to_string(),
                            (1, false) => mono,
                            (x, false) => format!("{x}{mono}"),
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        let one = if n == 1 { 0 } else { 1 };
        let kind = RingKind::MultiQuot {
            p,
            vars: vars.iter().map(|v| v.to_string()).collect(),
            relations: relations.iter().map(|r| r.to_string()).collect(),
        };
        Self::build(kind, labels, add, mul, 0, one, limits)
    }

    /// Parses a ring spec string such as `Zn:6` or `prod:Zn:2,gf:4`.
    pub fn parse(spec: &str, limits: &Limits) -> Result<Self> {
        spec::parse_ring(spec, limits)
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.add(a, b) == self.zero)
            .expect("additive inverses exist")
    }

    /// A nonzero nilpotent element, if any.
    pub fn nilpotent_witness(&self) -> Option<usize> {
        self.multiplicative_semigroup().nilpotent_witness()
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotent_witness().is_none()
    }

    pub fn is_field(&self) -> bool {
        self.order() > 1
            && (0..self.order())
                .filter(|&a| a != self.zero)
                .all(|a| (0..self.order()).any(|b| self.mul(a, b) == self.one))
    }

    pub fn is_domain(&self) -> bool {
        self.order() > 1 && self.multiplicative_semigroup().zero_divisors().is_empty()
    }

    /// `(R, ·)` with absorbing element 0.
    pub fn multiplicative_semigroup(&self) -> SemigroupTable {
        SemigroupTable::from_fn_trusted(self.labels.clone(), self.zero, |a, b| self.mul(a, b))
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}
