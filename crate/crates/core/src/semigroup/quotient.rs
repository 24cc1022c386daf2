use std::collections::HashMap;

use crate::bits::BitSet;
use crate::error::Result;
use crate::limits::Limits;

use super::{SemigroupMap, SemigroupTable};

/// Whether [`eq_quotient`] insists on a nilpotent-free input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientMode {
    /// Reject inputs with nilpotents; the projection is then Armendariz.
    Strict,
    /// Build the quotient anyway. No Armendariz guarantee is claimed.
    Permissive,
}

/// The quotient of a semigroup by equality of annihilators.
#[derive(Debug, Clone)]
pub struct EqQuotient {
    /// Classes in order of their smallest member.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[s]` is the index of the class of `s`.
    pub class_of: Vec<usize>,
    pub quotient: SemigroupTable,
    /// The projection `s ↦ [s]`.
    pub projection: SemigroupMap,
}

/// Partitions `s` by annihilator and multiplies classes through representatives.
///
/// `ann(s) = ann(s')` and `ann(t) = ann(t')` imply `ann(st) = ann(s't')` for
/// any commutative semigroup, so the product is well defined in both modes.
pub fn eq_quotient(s: &SemigroupTable, mode: QuotientMode, limits: &Limits) -> Result<EqQuotient> {
    Limits::check("table", limits.table, s.len())?;
    if mode == QuotientMode::Strict {
        s.require_nilpotent_free()?;
    }
    let n = s.len();
    let mut by_ann: HashMap<BitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for x in 0..n {
        let ann = s.annihilator_unchecked(x);
        let next = classes.len();
        let c = *by_ann.entry(ann).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(x);
        class_of[x] = c;
    }
    let labels = classes
        .iter()
        .map(|c| format!("[{}]", s.label(c[0])))
        .collect();
    let quotient = SemigroupTable::from_fn_trusted(labels, class_of[s.zero()], |a, b| {
        class_of[s.mul(classes[a][0], classes[b][0])]
    });
    let projection = SemigroupMap::new(s.clone(), quotient.clone(), class_of.clone())?;
    Ok(EqQuotient {
        classes,
        class_of,
        quotient,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::semigroup::{check_armendariz, check_homomorphism, validate_semigroup};

    fn zn(n: usize) -> SemigroupTable {
        SemigroupTable::from_fn((0..n).map(|i| i.to_string()).collect(), 0, |a, b| a * b % n)
            .unwrap()
    }

    #[test]
    fn z6_classes() {
        let q = eq_quotient(&zn(6), QuotientMode::Strict, &Limits::default()).unwrap();
        assert_eq!(q.classes, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert!(validate_semigroup(&q.quotient.to_json()).is_ok());
        assert!(q.quotient.is_nilpotent_free());
        assert!(check_armendariz(&q.projection).is_armendariz());
        assert!(check_homomorphism(&q.projection).holds);
        // E-graph: single edge [2]--[3].
        let zd = q.quotient.zero_divisors();
        assert_eq!(zd, vec![2, 3]);
        assert_eq!(q.quotient.mul(2, 3), q.quotient.zero());
    }

    #[test]
    fn strict_rejects_nilpotents() {
        let err = eq_quotient(&zn(4), QuotientMode::Strict, &Limits::default()).unwrap_err();
        assert_eq!(err, Error::NotNilpotentFree { element: 2 });
        assert!(eq_quotient(&zn(4), QuotientMode::Permissive, &Limits::default()).is_ok());
    }

    #[test]
    fn distinct_annihilators_give_singletons() {
        // Z_2 x Z_2 x Z_2 idempotents: every annihilator distinct on zero-divisors.
        let t = SemigroupTable::from_fn((0..8).map(|i| i.to_string()).collect(), 0, |a, b| a & b)
            .unwrap();
        let q = eq_quotient(&t, QuotientMode::Strict, &Limits::default()).unwrap();
        assert!(q.classes.iter().all(|c| c.len() == 1));
    }
}
