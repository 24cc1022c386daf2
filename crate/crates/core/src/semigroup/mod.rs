//! Finite commutative semigroups with zero.
//!
//! A [`SemigroupTable`] is always valid: commutative, associative, and with an
//! absorbing zero. Elements are addressed by index; labels exist only for
//! display.

mod armendariz;
mod quotient;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

pub use armendariz::{
    armendariz_invariant_suite, check_armendariz, check_homomorphism, induced_final_map,
    ArmendarizReport, GirthPatterns, HomomorphismCheck, InvariantSuiteReport, SemigroupMap,
    SuitePart,
};
pub use quotient::{eq_quotient, EqQuotient, QuotientMode};

/// First violated semigroup law, with the offending indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum LawViolation {
    Shape { reason: String },
    NonCommutative { a: usize, b: usize },
    NonAssociative { a: usize, b: usize, c: usize },
    NonAbsorbing { a: usize },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::Shape { reason } => write!(f, "malformed table: {reason}"),
            LawViolation::NonCommutative { a, b } => {
                write!(f, "not commutative: {a}*{b} != {b}*{a}")
            }
            LawViolation::NonAssociative { a, b, c } => {
                write!(f, "not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
            }
            LawViolation::NonAbsorbing { a } => write!(f, "zero does not absorb {a}"),
        }
    }
}

impl std::error::Error for LawViolation {}

/// Wire format: `{ "elements": [...], "zero": i, "product": [[...], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub elements: Vec<String>,
    pub zero: usize,
    pub product: Vec<Vec<usize>>,
}

/// Checks a raw table against the axioms of a commutative semigroup with zero.
///
/// Laws are tried in the order commutativity, associativity, absorption, and
/// the first failure is returned.
pub fn validate_semigroup(table: &TableJson) -> Result<(), LawViolation> {
    let n = table.elements.len();
    let shape = |reason: String| Err(LawViolation::Shape { reason });
    if n == 0 {
        return shape("no elements".into());
    }
    if table.zero >= n {
        return shape(format!("zero index {} out of range", table.zero));
    }
    if table.product.len() != n {
        return shape(format!("{} rows for {} elements", table.product.len(), n));
    }
    for (i, row) in table.product.iter().enumerate() {
        if row.len() != n {
            return shape(format!("row {i} has {} entries", row.len()));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return shape(format!("row {i} contains out-of-range entry {bad}"));
        }
    }
    let p = &table.product;
    for a in 0..n {
        for b in a + 1..n {
            if p[a][b] != p[b][a] {
                return Err(LawViolation::NonCommutative { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = p[a][b];
            for c in 0..n {
                if p[ab][c] != p[a][p[b][c]] {
                    return Err(LawViolation::NonAssociative { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        if p[table.zero][a] != table.zero {
            return Err(LawViolation::NonAbsorbing { a });
        }
    }
    Ok(())
}

/// A validated finite commutative semigroup with an absorbing zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableJson", into = "TableJson")]
pub struct SemigroupTable {
    labels: Vec<String>,
    zero: usize,
    product: Vec<usize>,
}

impl TryFrom<TableJson> for SemigroupTable {
    type Error = Error;

    fn try_from(json: TableJson) -> Result<Self> {
        validate_semigroup(&json)?;
        let product = json.product.into_iter().flatten().collect();
        Ok(SemigroupTable {
            labels: json.elements,
            zero: json.zero,
            product,
        })
    }
}

impl From<SemigroupTable> for TableJson {
    fn from(t: SemigroupTable) -> Self {
        let n = t.len();
        TableJson {
            product: t.product.chunks(n).map(<[usize]>::to_vec).collect(),
            elements: t.labels,
            zero: t.zero,
        }
    }
}

impl SemigroupTable {
    /// Builds and validates a table from a product function.
    pub fn from_fn(
        labels: Vec<String>,
        zero: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        let json = TableJson {
            product: (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect(),
            elements: labels,
            zero,
        };
        SemigroupTable::try_from(json)
    }

    /// Builds a table whose laws are guaranteed by construction (ring
    /// multiplication, set intersection, ideal arithmetic).
    pub(crate) fn from_fn_trusted(
        labels: Vec<String>,
        zero: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let n = labels.len();
        let mut product = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                product.push(f(a, b));
            }
        }
        let t = SemigroupTable {
            labels,
            zero,
            product,
        };
        debug_assert!(n > 64 || validate_semigroup(&t.to_json()).is_ok());
        t
    }

    pub fn to_json(&self) -> TableJson {
        self.clone().into()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a table has at least its zero.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.labels.len() + b]
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement {
                index: i,
                size: self.len(),
            })
        }
    }

    /// `{ t | s t = 0 }`; always contains the zero.
    pub fn annihilator(&self, s: usize) -> Result<BitSet> {
        self.check_index(s)?;
        Ok(self.annihilator_unchecked(s))
    }

    pub(crate) fn annihilator_unchecked(&self, s: usize) -> BitSet {
        let n = self.len();
        BitSet::from_indices(n, (0..n).filter(|&t| self.mul(s, t) == self.zero))
    }

    /// Nonzero elements killed by some nonzero element (possibly themselves),
    /// in index order.
    pub fn zero_divisors(&self) -> Vec<usize> {
        let z = self.zero;
        (0..self.len())
            .filter(|&s| s != z && (0..self.len()).any(|t| t != z && self.mul(s, t) == z))
            .collect()
    }

    /// A nonzero element some power of which is zero, if one exists.
    pub fn nilpotent_witness(&self) -> Option<usize> {
        let n = self.len();
        let mut seen = vec![usize::MAX; n];
        for s in 0..n {
            if s == self.zero {
                continue;
            }
            // Powers enter a cycle after at most n steps.
            let mut x = s;
            for _ in 0..n {
                if x == self.zero {
                    return Some(s);
                }
                if seen[x] == s {
                    break;
                }
                seen[x] = s;
                x = self.mul(x, s);
            }
            if x == self.zero {
                return Some(s);
            }
        }
        None
    }

    pub fn is_nilpotent_free(&self) -> bool {
        self.nilpotent_witness().is_none()
    }

    pub(crate) fn require_nilpotent_free(&self) -> Result<()> {
        match self.nilpotent_witness() {
            Some(element) => Err(Error::NotNilpotentFree { element }),
            None => Ok(()),
        }
    }

    /// Direct product with zero `(0, 0)`; elements ordered lexicographically.
    pub fn direct_product(&self, other: &SemigroupTable) -> SemigroupTable {
        let m = other.len();
        let labels = (0..self.len() * m)
            .map(|i| format!("({},{})", self.label(i / m), other.label(i % m)))
            .collect();
        SemigroupTable::from_fn_trusted(labels, self.zero * m + other.zero, |a, b| {
            self.mul(a / m, b / m) * m + other.mul(a % m, b % m)
        })
    }

    /// Isomorphic copy in which old element `i` is moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SemigroupTable> {
        let n = self.len();
        let mut inverse = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inverse[p] != usize::MAX {
                return Err(Error::Invalid("not a permutation".into()));
            }
            inverse[p] = i;
        }
        let labels = inverse.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(SemigroupTable::from_fn_trusted(
            labels,
            perm[self.zero],
            |a, b| perm[self.mul(inverse[a], inverse[b])],
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn zn_mul(n: usize) -> SemigroupTable {
        SemigroupTable::from_fn((0..n).map(|i| i.to_string()).collect(), 0, |a, b| a * b % n)
            .unwrap()
    }

    #[test]
    fn zn_tables_validate() {
        assert!(validate_semigroup(&zn_mul(6).to_json()).is_ok());
        assert!(validate_semigroup(&zn_mul(1).to_json()).is_ok());
    }

    #[test]
    fn commutativity_witness() {
        let mut json = zn_mul(6).to_json();
        json.product[1][2] = 3;
        json.product[2][1] = 4;
        assert_eq!(
            validate_semigroup(&json),
            Err(LawViolation::NonCommutative { a: 1, b: 2 })
        );
        assert!(SemigroupTable::try_from(json).is_err());
    }

    #[test]
    fn associativity_and_absorption_witnesses() {
        // Commutative but not associative: a*a = b, everything else 0 except b*a = a.
        let json = TableJson {
            elements: vec!["0".into(), "a".into(), "b".into()],
            zero: 0,
            product: vec![vec![0, 0, 0], vec![0, 2, 1], vec![0, 1, 0]],
        };
        assert!(matches!(
            validate_semigroup(&json),
            Err(LawViolation::NonAssociative { .. })
        ));
        let json = TableJson {
            elements: vec!["0".into(), "1".into()],
            zero: 0,
            product: vec![vec![1, 1], vec![1, 1]],
        };
        assert_eq!(
            validate_semigroup(&json),
            Err(LawViolation::NonAbsorbing { a: 0 })
        );
    }

    #[test]
    fn malformed_shapes() {
        let json = TableJson {
            elements: vec!["0".into()],
            zero: 3,
            product: vec![vec![0]],
        };
        assert!(matches!(validate_semigroup(&json), Err(LawViolation::Shape { .. })));
        let json = TableJson {
            elements: vec!["0".into(), "1".into()],
            zero: 0,
            product: vec![vec![0, 0]],
        };
        assert!(matches!(validate_semigroup(&json), Err(LawViolation::Shape { .. })));
    }

    #[test]
    fn nilpotency() {
        assert!(zn_mul(6).is_nilpotent_free());
        assert_eq!(zn_mul(4).nilpotent_witness(), Some(2));
        assert!(!zn_mul(8).is_nilpotent_free());
        assert!(zn_mul(1).is_nilpotent_free());
    }

    #[test]
    fn annihilators() {
        let z6 = zn_mul(6);
        assert_eq!(z6.annihilator(2).unwrap().iter().collect::<Vec<_>>(), vec![0, 3]);
        assert_eq!(z6.annihilator(5).unwrap().iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(z6.annihilator(0).unwrap().count(), 6);
        assert!(matches!(z6.annihilator(6), Err(Error::UnknownElement { .. })));
    }

    #[test]
    fn zero_divisor_sets() {
        assert_eq!(zn_mul(6).zero_divisors(), vec![2, 3, 4]);
        assert_eq!(zn_mul(4).zero_divisors(), vec![2]);
        assert!(zn_mul(7).zero_divisors().is_empty());
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let z6 = zn_mul(6);
        let s = serde_json::to_string(&z6).unwrap();
        let back: SemigroupTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z6);
        let bad = r#"{"elements":["0","a"],"zero":0,"product":[[0,0],[1,1]]}"#;
        assert!(serde_json::from_str::<SemigroupTable>(bad).is_err());
    }

    #[test]
    fn permuted_copy_is_isomorphic() {
        let z6 = zn_mul(6);
        let perm = [3, 0, 5, 1, 4, 2];
        let p = z6.permuted(&perm).unwrap();
        assert!(validate_semigroup(&p.to_json()).is_ok());
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p.mul(perm[a], perm[b]), perm[z6.mul(a, b)]);
            }
        }
    }
}
