//! Seeded corpora of Armendariz maps, rings, spaces and posets.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::limits::Limits;
use crate::ring::{FiniteRing, IdealOp};
use crate::semigroup::{eq_quotient, QuotientMode, SemigroupMap, SemigroupTable};
use crate::spectral::FinitePoset;
use crate::topology::FiniteSpace;

/// Orders of the finite fields used to build reduced rings.
pub const FIELD_ORDERS: [usize; 18] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub seed: u64,
    pub max_ring_order: usize,
    pub spaces: usize,
    pub posets: usize,
    pub max_points: usize,
    /// Exhaustive enumeration of semigroups with zero up to this size.
    pub semigroup_size: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: 7,
            max_ring_order: 32,
            spaces: 250,
            posets: 250,
            max_points: 6,
            semigroup_size: 4,
        }
    }
}

/// One Armendariz map together with where it came from.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub family: &'static str,
    pub name: String,
    pub map: SemigroupMap,
}

/// Products of finite fields of total order at most `max_order`, factors nondecreasing.
pub fn reduced_ring_specs(max_order: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for (i, &q) in FIELD_ORDERS.iter().enumerate().skip(start) {
            if q > left {
                break;
            }
            cur.push(q);
            go(i, left / q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, max_order, &mut Vec::new(), &mut out);
    out.sort_by_key(|f| (f.iter().product::<usize>(), f.clone()));
    out
}

pub fn reduced_ring(factors: &[usize], limits: &Limits) -> Result<FiniteRing> {
    let fields = factors
        .iter()
        .map(|&q| FiniteRing::gf(q, limits))
        .collect::<Result<Vec<_>>>()?;
    if fields.len() == 1 {
        Ok(fields.into_iter().next().expect("one factor"))
    } else {
        FiniteRing::product(&fields, limits)
    }
}

/// Every reduced ring of order at most `max_order`, up to isomorphism.
pub fn reduced_rings(max_order: usize, limits: &Limits) -> Result<Vec<FiniteRing>> {
    reduced_ring_specs(max_order)
        .iter()
        .map(|f| reduced_ring(f, limits))
        .collect()
}

/// `C ↦ V(C)` from `(Id R, +)` onto σ(Spec R).
pub fn v_map(r: &FiniteRing, limits: &Limits) -> Result<SemigroupMap> {
    let ideals = r.ideals(limits)?;
    let spec = FinitePoset::from_ring(r, limits)?.spec_space(limits)?;
    let add = ideals.semigroup(IdealOp::Add).table;
    let assignment = (0..ideals.len())
        .map(|i| {
            let m = ideals.v_of(i).iter().fold(0u64, |acc, p| acc | 1 << p);
            spec.closed_sets().binary_search(&m).expect("V(I) is closed")
        })
        .collect();
    SemigroupMap::new(add, spec.closure_lattice(), assignment)
}

pub fn random_isomorphism(s: &SemigroupTable, rng: &mut impl Rng) -> Result<SemigroupMap> {
    let mut perm: Vec<usize> = (0..s.len()).collect();
    perm.shuffle(rng);
    SemigroupMap::new(s.clone(), s.permuted(&perm)?, perm)
}

fn close_family(sets: &mut BTreeSet<u64>) {
    loop {
        let cur: Vec<u64> = sets.iter().copied().collect();
        let before = sets.len();
        for &a in &cur {
            for &b in &cur {
                sets.insert(a | b);
                sets.insert(a & b);
            }
        }
        if sets.len() == before {
            return;
        }
    }
}

/// A random pearled space on `1..=max_points` points.
pub fn random_pearled_space(rng: &mut impl Rng, max_points: usize) -> FiniteSpace {
    loop {
        let n = rng.gen_range(1..=max_points);
        let full = (1u64 << n) - 1;
        let closed_points: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if closed_points.is_empty() {
            continue;
        }
        let mut sets: BTreeSet<u64> = BTreeSet::from([0, full]);
        sets.extend(closed_points.iter().map(|&p| 1u64 << p));
        for _ in 0..rng.gen_range(0..=n) {
            let anchor = closed_points[rng.gen_range(0..closed_points.len())];
            sets.insert((rng.gen::<u64>() & full) | 1 << anchor);
        }
        close_family(&mut sets);
        let points = (0..n).map(|i| format!("x{i}")).collect();
        if let Ok(sp) = FiniteSpace::new(points, sets) {
            if sp.is_pearled() {
                return sp;
            }
        }
    }
}

/// A random poset on `1..=max_points` points, relabeled at random.
pub fn random_poset(rng: &mut impl Rng, max_points: usize) -> FinitePoset {
    let n = rng.gen_range(1..=max_points);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let density = rng.gen_range(0.1..0.6);
    let mut leq = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                leq.push([label[i], label[j]]);
            }
        }
    }
    let points = (0..n).map(|i| format!("p{i}")).collect();
    FinitePoset::new(points, &leq, &Limits::default()).expect("acyclic by construction")
}

/// Every commutative semigroup on `{0, …, n-1}` with zero `0`, labeled.
pub fn all_semigroups_with_zero(n: usize) -> Vec<SemigroupTable> {
    assert!((1..=4).contains(&n), "n^(n(n-1)/2) candidate tables");
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let total = n.pow(pairs.len() as u32);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    for code in 0..total {
        let mut prod = vec![vec![0; n]; n];
        let mut c = code;
        for &(a, b) in &pairs {
            prod[a][b] = c % n;
            prod[b][a] = c % n;
            c /= n;
        }
        if let Ok(t) = SemigroupTable::from_fn(labels.clone(), 0, |a, b| prod[a][b]) {
            out.push(t);
        }
    }
    out
}

/// The Armendariz-map corpus.
pub fn armendariz_corpus(cfg: &CorpusConfig, limits: &Limits) -> Result<Vec<CorpusItem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let mut push = |family, name: String, map| out.push(CorpusItem { family, name, map });

    for factors in reduced_ring_specs(cfg.max_ring_order) {
        let r = reduced_ring(&factors, limits)?;
        let name = r.kind().to_string();
        let s = r.multiplicative_semigroup();
        push("ring-eq", name.clone(), eq_quotient(&s, QuotientMode::Strict, limits)?.projection);
        push("ring-iso", name.clone(), random_isomorphism(&s, &mut rng)?);
        let ideals = r.ideals(limits)?;
        for (op, fam) in [(IdealOp::Mult, "ideal-mult-eq"), (IdealOp::Add, "ideal-add-eq")] {
            let t = ideals.semigroup(op).table;
            push(fam, name.clone(), eq_quotient(&t, QuotientMode::Strict, limits)?.projection);
        }
    }
    for n in 2..=cfg.max_ring_order {
        let r = FiniteRing::zn_with(n, limits)?;
        push("ideal-v-map", r.kind().to_string(), v_map(&r, limits)?);
    }
    for i in 0..cfg.spaces {
        let sp = random_pearled_space(&mut rng, cfg.max_points);
        push("alpha", format!("space #{i} on {} points", sp.len()), sp.alpha_map()?);
    }
    for i in 0..cfg.posets {
        let p = random_poset(&mut rng, cfg.max_points);
        push("poset-max", format!("poset #{i} on {} points", p.len()), p.restrict_to_max(limits)?);
    }
    for n in 1..=cfg.semigroup_size {
        for (i, s) in all_semigroups_with_zero(n)
            .into_iter()
            .filter(SemigroupTable::is_nilpotent_free)
            .enumerate()
        {
            push(
                "semigroup-eq",
                format!("size {n} #{i}"),
                eq_quotient(&s, QuotientMode::Strict, limits)?.projection,
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_specs() {
        let specs = reduced_ring_specs(8);
        let expected: Vec<Vec<usize>> = vec![
            vec![2],
            vec![3],
            vec![2, 2],
            vec![4],
            vec![5],
            vec![2, 3],
            vec![7],
            vec![2, 2, 2],
            vec![2, 4],
            vec![8],
        ];
        assert_eq!(specs, expected);
    }

    #[test]
    fn semigroup_counts() {
        // commutative semigroups with a fixed zero, labeled
        assert_eq!(all_semigroups_with_zero(1).len(), 1);
        assert_eq!(all_semigroups_with_zero(2).len(), 2);
        // brute-force associativity oracle for n = 3
        let mut count = 0;
        for code in 0..27 {
            let v = [code % 3, code / 3 % 3, code / 9];
            let m = |a: usize, b: usize| -> usize {
                match (a.min(b), a.max(b)) {
                    (0, _) => 0,
                    (1, 1) => v[0],
                    (1, 2) => v[1],
                    _ => v[2],
                }
            };
            let assoc = (0..3).all(|a| (0..3).all(|b| (0..3).all(|c| m(m(a, b), c) == m(a, m(b, c)))));
            count += assoc as usize;
        }
        assert_eq!(all_semigroups_with_zero(3).len(), count);
    }

    #[test]
    fn random_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(random_pearled_space(&mut rng, 6).is_pearled());
            let p = random_poset(&mut rng, 6);
            assert!(p.len() <= 6);
        }
    }

    #[test]
    fn v_map_on_z12() {
        let r = FiniteRing::zn(12).unwrap();
        let g = v_map(&r, &Limits::default()).unwrap();
        assert!(crate::semigroup::check_armendariz(&g).is_armendariz());
        assert!(crate::semigroup::check_homomorphism(&g).holds);
    }
}
