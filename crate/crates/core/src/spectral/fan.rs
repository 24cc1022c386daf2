//! Fans: a few generic points, each lying below whole blocks of countably
//! many maximal points `m{b}_{i}`. Closed sets are stored as descriptors and
//! every claim is checked structurally, then re-checked on a finite window.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{part, FinitePoset, SpecsReport};
use crate::error::{Error, Result};
use crate::graph::{Cardinal, Extended, InvariantBundle};
use crate::limits::Limits;
use crate::topology::mask_iter;

const MAX_GENERICS: usize = 8;
const MAX_BLOCKS: usize = 4;

/// The maximal points of one block inside a closed set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaxPart {
    Finite(BTreeSet<u64>),
    /// Everything except the listed indices. `Cofinite(∅)` is the whole block.
    Cofinite(BTreeSet<u64>),
}

impl MaxPart {
    pub fn full() -> Self {
        MaxPart::Cofinite(BTreeSet::new())
    }

    pub fn empty() -> Self {
        MaxPart::Finite(BTreeSet::new())
    }

    pub fn is_full(&self) -> bool {
        matches!(self, MaxPart::Cofinite(e) if e.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, MaxPart::Finite(s) if s.is_empty())
    }

    pub fn contains(&self, i: u64) -> bool {
        match self {
            MaxPart::Finite(s) => s.contains(&i),
            MaxPart::Cofinite(e) => !e.contains(&i),
        }
    }

    pub fn meet(&self, other: &MaxPart) -> MaxPart {
        use MaxPart::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => Finite(a - e),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
        }
    }

    pub fn join(&self, other: &MaxPart) -> MaxPart {
        use MaxPart::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => Cofinite(e - a),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
        }
    }

    /// Smallest index in the part.
    pub fn first(&self) -> Option<u64> {
        match self {
            MaxPart::Finite(s) => s.first().copied(),
            MaxPart::Cofinite(e) => (0..).find(|i| !e.contains(i)),
        }
    }

    /// Smallest index missing from the part.
    pub fn first_missing(&self) -> Option<u64> {
        match self {
            MaxPart::Finite(s) => (0..).find(|i| !s.contains(i)),
            MaxPart::Cofinite(e) => e.first().copied(),
        }
    }
}

/// A closed set of a fan.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FanClosed {
    pub generics: BTreeSet<usize>,
    pub blocks: Vec<MaxPart>,
}

impl FanClosed {
    pub fn empty(blocks: usize) -> Self {
        FanClosed {
            generics: BTreeSet::new(),
            blocks: vec![MaxPart::empty(); blocks],
        }
    }

    pub fn maximal(blocks: usize, b: usize, i: u64) -> Self {
        let mut c = Self::empty(blocks);
        c.blocks[b] = MaxPart::Finite(BTreeSet::from([i]));
        c
    }

    pub fn is_empty(&self) -> bool {
        self.generics.is_empty() && self.blocks.iter().all(MaxPart::is_empty)
    }

    pub fn meet(&self, other: &FanClosed) -> FanClosed {
        FanClosed {
            generics: &self.generics & &other.generics,
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.meet(b)).collect(),
        }
    }

    pub fn join(&self, other: &FanClosed) -> FanClosed {
        FanClosed {
            generics: &self.generics | &other.generics,
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.join(b)).collect(),
        }
    }

    /// `C ∩ Max`.
    pub fn restrict_max(&self) -> FanClosed {
        FanClosed {
            generics: BTreeSet::new(),
            blocks: self.blocks.clone(),
        }
    }

    pub fn covers_max(&self) -> bool {
        self.blocks.iter().all(MaxPart::is_full)
    }

    /// Smallest maximal point `(block, index)` in the set.
    pub fn first_maximal(&self) -> Option<(usize, u64)> {
        self.blocks
            .iter()
            .enumerate()
            .find_map(|(b, p)| p.first().map(|i| (b, i)))
    }

    /// Smallest maximal point outside the set.
    pub fn first_missing_maximal(&self) -> Option<(usize, u64)> {
        self.blocks
            .iter()
            .enumerate()
            .find_map(|(b, p)| p.first_missing().map(|i| (b, i)))
    }
}

impl fmt::Display for FanClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.generics.iter().map(|g| format!("g{g}")).collect();
        for (b, p) in self.blocks.iter().enumerate() {
            match p {
                MaxPart::Finite(s) => parts.extend(s.iter().map(|i| format!("m{b}_{i}"))),
                MaxPart::Cofinite(e) if e.is_empty() => parts.push(format!("M{b}")),
                MaxPart::Cofinite(e) => {
                    let ex: Vec<String> = e.iter().map(|i| format!("m{b}_{i}")).collect();
                    parts.push(format!("M{b}∖{{{}}}", ex.join(",")));
                }
            }
        }
        if parts.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "{{{}}}", parts.join(", "))
        }
    }
}

/// Which closed-set family of the fan: Zariski-style or all up-sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaMode {
    Spec,
    USpec,
}

/// A fan: `covers[j]` is the set of blocks lying above generic `g{j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanModel {
    blocks: usize,
    covers: Vec<BTreeSet<usize>>,
    spec: String,
}

impl FanModel {
    pub fn new(blocks: usize, covers: Vec<BTreeSet<usize>>) -> Result<Self> {
        if blocks == 0 || blocks > MAX_BLOCKS {
            return Err(Error::Invalid(format!("a fan needs 1..={MAX_BLOCKS} blocks")));
        }
        if covers.is_empty() || covers.len() > MAX_GENERICS {
            return Err(Error::Invalid(format!("a fan needs 1..={MAX_GENERICS} generic points")));
        }
        if covers.iter().any(|c| c.is_empty() || c.iter().any(|&b| b >= blocks)) {
            return Err(Error::Invalid("every generic point must lie below a block".into()));
        }
        let covered: BTreeSet<usize> = covers.iter().flatten().copied().collect();
        if covered.len() != blocks {
            return Err(Error::Invalid("every block must lie above a generic point".into()));
        }
        let spec = format!(
            "fan:{}",
            covers
                .iter()
                .map(|c| c.iter().map(|b| b.to_string()).collect::<Vec<_>>().join("+"))
                .collect::<Vec<_>>()
                .join("|")
        );
        Ok(FanModel { blocks, covers, spec })
    }

    /// `fan:generics=k[;sharing=all|none]` or `fan:disjoint=k`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("fan:")
            .ok_or_else(|| Error::Parse(format!("not a fan: {s}")))?;
        let mut generics = None;
        let mut sharing_all = true;
        for field in body.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {field}")))?;
            let num = || {
                value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad count {value}")))
            };
            match key.trim() {
                "generics" => generics = Some(num()?),
                "disjoint" => {
                    generics = Some(num()?);
                    sharing_all = false;
                }
                "sharing" => match value.trim() {
                    "all" => sharing_all = true,
                    "none" => sharing_all = false,
                    v => return Err(Error::Parse(format!("sharing must be all or none, got {v}"))),
                },
                k => return Err(Error::Parse(format!("unknown fan field {k}"))),
            }
        }
        let k = generics.ok_or_else(|| Error::Parse("fan needs generics= or disjoint=".into()))?;
        let mut model = if sharing_all {
            Self::new(1, vec![BTreeSet::from([0]); k])?
        } else {
            Self::new(k, (0..k).map(|j| BTreeSet::from([j])).collect())?
        };
        model.spec = s.trim().to_string();
        Ok(model)
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn generics(&self) -> usize {
        self.covers.len()
    }

    pub fn covers(&self) -> &[BTreeSet<usize>] {
        &self.covers
    }

    fn cov(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        gens.iter().flat_map(|&j| self.covers[j].iter().copied()).collect()
    }

    /// `V(g{j})`: the generic and every block above it.
    pub fn v_generic(&self, j: usize) -> FanClosed {
        let mut c = FanClosed::empty(self.blocks);
        c.generics.insert(j);
        for &b in &self.covers[j] {
            c.blocks[b] = MaxPart::full();
        }
        c
    }

    /// `V(J)` for a set of generics: a union of `V(g)`.
    pub fn v_generics(&self, gens: &BTreeSet<usize>) -> FanClosed {
        gens.iter()
            .map(|&j| self.v_generic(j))
            .fold(FanClosed::empty(self.blocks), |a, b| a.join(&b))
    }

    /// Two proper closed subsets of Max covering it, as block sets, if Max is reducible.
    /// Closed subsets of Max are finite sets plus unions of blocks carried by generics;
    /// finitely many points never fill a block, so only the block patterns matter.
    pub fn reducibility_witness(&self) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        let all: BTreeSet<usize> = (0..self.blocks).collect();
        let k = self.generics();
        let patterns: BTreeSet<BTreeSet<usize>> = (0u64..1 << k)
            .map(|m| self.cov(&mask_iter(m).collect()))
            .filter(|u| *u != all)
            .collect();
        for a in &patterns {
            for b in &patterns {
                if (a | b) == all {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn sigma(&self, mode: SigmaMode) -> SigmaHandle<'_> {
        SigmaHandle { model: self, mode }
    }
}

impl fmt::Display for FanModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec)
    }
}

/// σ(Spec) or σ(USpec) of a fan, as a semigroup under `∩` with zero `∅`.
#[derive(Debug, Clone, Copy)]
pub struct SigmaHandle<'a> {
    model: &'a FanModel,
    mode: SigmaMode,
}

impl<'a> SigmaHandle<'a> {
    pub fn mode(&self) -> SigmaMode {
        self.mode
    }

    pub fn model(&self) -> &'a FanModel {
        self.model
    }

    fn up_closed(&self, c: &FanClosed) -> bool {
        c.generics.iter().all(|&j| self.model.covers[j].iter().all(|&b| c.blocks[b].is_full()))
    }

    /// Smallest Zariski-closed set containing `c` (for `c` with finite or full blocks):
    /// the intersection of every `V(J ∪ K) ∪ finite part` that contains it.
    fn zariski_hull(&self, c: &FanClosed) -> FanClosed {
        let k = self.model.generics();
        let full: BTreeSet<usize> = (0..self.model.blocks).filter(|&b| c.blocks[b].is_full()).collect();
        let finite = FanClosed {
            generics: BTreeSet::new(),
            blocks: c
                .blocks
                .iter()
                .map(|p| if p.is_full() { MaxPart::empty() } else { p.clone() })
                .collect(),
        };
        let mut hull: Option<FanClosed> = None;
        for m in 0u64..1 << k {
            let gens: BTreeSet<usize> = c.generics.iter().copied().chain(mask_iter(m)).collect();
            if !full.is_subset(&self.model.cov(&gens)) {
                continue;
            }
            let u = self.model.v_generics(&gens).join(&finite);
            hull = Some(match hull {
                None => u,
                Some(h) => h.meet(&u),
            });
        }
        hull.unwrap_or_else(|| self.whole())
    }

    pub fn contains(&self, c: &FanClosed) -> bool {
        if c.blocks.len() != self.model.blocks || c.generics.iter().any(|&j| j >= self.model.generics()) {
            return false;
        }
        if !self.up_closed(c) {
            return false;
        }
        match self.mode {
            SigmaMode::USpec => true,
            SigmaMode::Spec => {
                c.blocks.iter().all(|p| matches!(p, MaxPart::Finite(_)) || p.is_full())
                    && self.zariski_hull(c) == *c
            }
        }
    }

    pub fn whole(&self) -> FanClosed {
        self.model.v_generics(&(0..self.model.generics()).collect())
    }

    pub fn meet(&self, a: &FanClosed, b: &FanClosed) -> FanClosed {
        a.meet(b)
    }

    /// A zero-divisor: some nonempty closed set misses it. Singletons of maximal
    /// points are closed and every nonempty closed set holds a maximal point, so
    /// this is exactly `C ≠ ∅` with `C ∩ Max ≠ Max`.
    pub fn is_vertex(&self, c: &FanClosed) -> bool {
        !c.is_empty() && !c.covers_max()
    }

    /// A closed neighbor of a vertex: a maximal point it misses.
    pub fn neighbor(&self, c: &FanClosed) -> Option<FanClosed> {
        if c.is_empty() {
            return None;
        }
        c.first_missing_maximal()
            .map(|(b, i)| FanClosed::maximal(self.model.blocks, b, i))
    }

    pub fn adjacent(&self, a: &FanClosed, b: &FanClosed) -> bool {
        a != b && a.meet(b).is_empty()
    }

    /// Distance between two vertices with an explicit shortest path.
    pub fn path(&self, a: &FanClosed, b: &FanClosed) -> (usize, Vec<FanClosed>) {
        if a == b {
            return (0, vec![a.clone()]);
        }
        if self.adjacent(a, b) {
            return (1, vec![a.clone(), b.clone()]);
        }
        let u = a.join(b);
        if let Some((blk, i)) = u.first_missing_maximal() {
            let c = FanClosed::maximal(self.model.blocks, blk, i);
            return (2, vec![a.clone(), c, b.clone()]);
        }
        let (ba, ia) = a.first_missing_maximal().expect("a is a vertex");
        let pb = &b.blocks;
        let (bb, ib) = pb
            .iter()
            .enumerate()
            .flat_map(|(blk, p)| {
                let mut missing = Vec::new();
                if let MaxPart::Cofinite(e) = p {
                    missing.extend(e.iter().map(|&i| (blk, i)));
                } else if let MaxPart::Finite(s) = p {
                    // two candidates are enough to avoid (ba, ia)
                    missing.extend((0..).filter(|i| !s.contains(i)).take(2).map(|i| (blk, i)));
                }
                missing
            })
            .find(|&m| m != (ba, ia))
            .expect("b misses a maximal point other than a's");
        let c = FanClosed::maximal(self.model.blocks, ba, ia);
        let d = FanClosed::maximal(self.model.blocks, bb, ib);
        (3, vec![a.clone(), c, d, b.clone()])
    }

    /// Checks that consecutive path entries are adjacent vertices. Endpoints are
    /// assumed closed; interior entries are checked for membership.
    pub fn is_valid_path(&self, p: &[FanClosed]) -> bool {
        p.iter().all(|c| self.is_vertex(c))
            && p.iter().skip(1).take(p.len().saturating_sub(2)).all(|c| self.contains(c))
            && p.windows(2).all(|w| self.adjacent(&w[0], &w[1]))
    }

    /// Every closed set whose maximal part, outside full blocks, only names indices
    /// below `width[b]`; for USpec the excluded indices of cofinite blocks as well.
    pub fn window(&self, width: &[u64]) -> Vec<FanClosed> {
        let m = self.model;
        let mut out = BTreeSet::new();
        for g in 0u64..1 << m.generics() {
            let gens: BTreeSet<usize> = mask_iter(g).collect();
            let forced = m.cov(&gens);
            let mut acc = vec![FanClosed {
                generics: gens.clone(),
                blocks: Vec::new(),
            }];
            for b in 0..m.blocks {
                let subsets: Vec<BTreeSet<u64>> = (0u64..1 << width[b])
                    .map(|s| mask_iter(s).map(|i| i as u64).collect())
                    .collect();
                let options: Vec<MaxPart> = if forced.contains(&b) {
                    vec![MaxPart::full()]
                } else {
                    let mut o: Vec<MaxPart> = subsets.iter().cloned().map(MaxPart::Finite).collect();
                    match self.mode {
                        SigmaMode::Spec => o.push(MaxPart::full()),
                        SigmaMode::USpec => o.extend(subsets.iter().cloned().map(MaxPart::Cofinite)),
                    }
                    o
                };
                acc = acc
                    .into_iter()
                    .flat_map(|c| {
                        options.iter().map(move |p| {
                            let mut c = c.clone();
                            c.blocks.push(p.clone());
                            c
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().filter(|c| self.contains(c)));
        }
        out.into_iter().collect()
    }
}

/// Results of the windowed re-check of one family.
#[derive(Debug, Clone, Serialize)]
pub struct WindowReport {
    pub mode: SigmaMode,
    pub width: Vec<u64>,
    pub descriptors: usize,
    pub vertices: usize,
    pub pairs_checked: usize,
    /// Largest distance between two window vertices.
    pub max_distance: usize,
    /// Every distance came with a valid path, and no distance-3 pair had a common
    /// neighbor among window sets or fresh maximal points.
    pub paths_ok: bool,
    /// Closed under `∩` and `∪`; `C ↦ C ∩ Max` has trivial kernel and preserves `∩`.
    pub semigroup_ok: bool,
    /// Choosing the smallest maximal point colors the window graph properly.
    pub coloring_ok: bool,
    /// Emptiness of intersections matches the finite truncation (Spec only).
    pub truncation_ok: bool,
}

impl WindowReport {
    pub fn passed(&self) -> bool {
        self.paths_ok && self.semigroup_ok && self.coloring_ok && self.truncation_ok
    }
}

fn widths(model: &FanModel, total: usize) -> Vec<u64> {
    let per = (total / model.blocks).max(2) as u64;
    vec![per; model.blocks]
}

/// Re-checks the structural rules on all closed sets inside a window of
/// `total` maximal points.
pub fn verify_window(model: &FanModel, mode: SigmaMode, total: usize) -> WindowReport {
    let sigma = model.sigma(mode);
    let width = widths(model, total);
    let sets = sigma.window(&width);
    let verts: Vec<&FanClosed> = sets.iter().filter(|c| sigma.is_vertex(c)).collect();

    let family: std::collections::HashSet<&FanClosed> = sets.iter().collect();
    let mut semigroup_ok = true;
    for (x, a) in sets.iter().enumerate() {
        if !a.is_empty() && a.restrict_max().is_empty() {
            semigroup_ok = false;
        }
        for b in &sets[x..] {
            let m = a.meet(b);
            if !family.contains(&m) || !family.contains(&a.join(b)) {
                semigroup_ok = false;
            }
            if m.restrict_max() != a.restrict_max().meet(&b.restrict_max()) {
                semigroup_ok = false;
            }
        }
    }
    for v in &verts {
        match sigma.neighbor(v) {
            Some(n) if sigma.contains(&n) && sigma.adjacent(v, &n) => {}
            _ => semigroup_ok = false,
        }
    }

    // fresh maximal points just past the window
    let probes: Vec<FanClosed> = (0..model.blocks)
        .flat_map(|b| (width[b]..width[b] + 2).map(move |i| FanClosed::maximal(model.blocks, b, i)))
        .collect();
    // Bit layout per block: window indices, the two probes, then one bit for everything beyond.
    let k = model.generics();
    let encode = |c: &FanClosed| -> u64 {
        let mut m = c.generics.iter().fold(0u64, |acc, &j| acc | 1 << j);
        let mut off = k;
        for (b, p) in c.blocks.iter().enumerate() {
            for i in 0..width[b] + 2 {
                if p.contains(i) {
                    m |= 1 << (off + i as usize);
                }
            }
            if matches!(p, MaxPart::Cofinite(_)) {
                m |= 1 << (off + width[b] as usize + 2);
            }
            off += width[b] as usize + 3;
        }
        m
    };
    let codes: Vec<u64> = verts.iter().copied().chain(probes.iter()).map(encode).collect();
    let mut paths_ok = true;
    let mut coloring_ok = true;
    let mut max_distance = 0;
    let mut pairs = 0;
    for (x, a) in verts.iter().enumerate() {
        for b in &verts[x + 1..] {
            pairs += 1;
            let (d, path) = sigma.path(a, b);
            max_distance = max_distance.max(d);
            if path.len() != d + 1 || !sigma.is_valid_path(&path) {
                paths_ok = false;
            }
            if d == 1 && a.first_maximal() == b.first_maximal() {
                coloring_ok = false;
            }
            if d == 3 {
                let u = encode(&a.join(b));
                let common = codes.iter().any(|&c| c & u == 0);
                if common {
                    paths_ok = false;
                }
            }
        }
    }

    let truncation_ok = mode == SigmaMode::USpec || truncation_agrees(model, &width, &sets);
    WindowReport {
        mode,
        width,
        descriptors: sets.len(),
        vertices: verts.len(),
        pairs_checked: pairs,
        max_distance,
        paths_ok,
        semigroup_ok,
        coloring_ok,
        truncation_ok,
    }
}

/// The finite poset with the window's maximal points, and the mask of each set in it.
fn truncation_agrees(model: &FanModel, width: &[u64], sets: &[FanClosed]) -> bool {
    let k = model.generics();
    let mut points: Vec<String> = (0..k).map(|j| format!("g{j}")).collect();
    let mut offset = Vec::new();
    for (b, &w) in width.iter().enumerate() {
        offset.push(points.len());
        points.extend((0..w).map(|i| format!("m{b}_{i}")));
    }
    let mut leq = Vec::new();
    for (j, cov) in model.covers.iter().enumerate() {
        for &b in cov {
            leq.extend((0..width[b] as usize).map(|i| [j, offset[b] + i]));
        }
    }
    let Ok(poset) = FinitePoset::new(points, &leq, &Limits::default()) else {
        return false;
    };
    let Ok(space) = poset.spec_space(&Limits::default()) else {
        return false;
    };
    let mask = |c: &FanClosed| -> u64 {
        let mut m = c.generics.iter().fold(0u64, |acc, &j| acc | 1 << j);
        for (b, p) in c.blocks.iter().enumerate() {
            for i in 0..width[b] {
                if p.contains(i) {
                    m |= 1 << (offset[b] + i as usize);
                }
            }
        }
        m
    };
    let masks: Vec<u64> = sets.iter().map(mask).collect();
    if !masks.iter().all(|&m| space.is_closed(m)) {
        return false;
    }
    for (a, &ma) in sets.iter().zip(&masks) {
        if a.is_empty() != (ma == 0) {
            return false;
        }
        for (b, &mb) in sets.iter().zip(&masks) {
            if a.meet(b).is_empty() != (ma & mb == 0) {
                return false;
            }
        }
    }
    true
}

pub(super) fn fan_suite(model: &FanModel, total: usize, _limits: &Limits) -> Result<SpecsReport> {
    let n = model.blocks;
    let g_sigma = model.sigma(SigmaMode::Spec);
    let h_sigma = model.sigma(SigmaMode::USpec);
    let gw = verify_window(model, SigmaMode::Spec, total);
    let hw = verify_window(model, SigmaMode::USpec, total);
    let reducible = model.reducibility_witness();
    let mut parts = Vec::new();
    let mut witnesses = Vec::new();

    parts.push(part(
        0,
        "windowed re-check of σ(Spec)",
        true,
        gw.passed(),
        format!("{} sets, {} vertex pairs", gw.descriptors, gw.pairs_checked),
    ));
    parts.push(part(
        0,
        "windowed re-check of σ(USpec)",
        true,
        hw.passed(),
        format!("{} sets, {} vertex pairs", hw.descriptors, hw.pairs_checked),
    ));

    // Clique of maximal singletons, of every size up to the window.
    let singles: Vec<FanClosed> = (0..total as u64).map(|i| FanClosed::maximal(n, 0, i)).collect();
    let clique_ok = singles.iter().enumerate().all(|(x, a)| {
        singles[x + 1..]
            .iter()
            .all(|b| g_sigma.adjacent(a, b) && h_sigma.adjacent(a, b) && g_sigma.contains(a))
    });
    witnesses.push(format!("clique {{m0_0}}, …, {{m0_{}}} extends without bound", total - 1));
    parts.push(part(
        1,
        "χ(G) = χ(H) = clq G = clq H = |Max| = ℵ₀",
        true,
        clique_ok && gw.coloring_ok && hw.coloring_ok,
        "coloring by smallest maximal point".into(),
    ));
    parts.push(part(2, "|Max| = 1 ⇒ G = H = ∅", false, true, "Max is infinite".into()));
    parts.push(part(3, "|Max| = 2 cases", false, true, "Max is infinite".into()));

    let triangle_ok = singles.len() >= 3
        && g_sigma.is_valid_path(&[singles[0].clone(), singles[1].clone(), singles[2].clone(), singles[0].clone()]);
    let mut h_a = FanClosed::empty(n);
    for b in 0..n {
        h_a.blocks[b] = MaxPart::full();
    }
    h_a.blocks[0] = MaxPart::Cofinite(BTreeSet::from([0]));
    let h_c = FanClosed {
        generics: BTreeSet::new(),
        blocks: {
            let mut v = vec![MaxPart::empty(); n];
            v[0] = MaxPart::Finite(BTreeSet::from([0, 1]));
            v
        },
    };
    let (hd, hpath) = h_sigma.path(&h_a, &h_c);
    let h_ok = hd == 3 && h_sigma.is_valid_path(&hpath) && hw.max_distance == 3;
    witnesses.push(format!("H: d({h_a}, {h_c}) = {hd}"));
    parts.push(part(
        4,
        "|Max| ≥ 3 ⇒ diam H = gir H = gir G = 3",
        true,
        h_ok && triangle_ok,
        format!("window diam H {}", hw.max_distance),
    ));

    let g_diam;
    match &reducible {
        None => {
            let a = FanClosed::maximal(n, 0, 0);
            let c = a.join(&FanClosed::maximal(n, 0, 1));
            let (d, path) = g_sigma.path(&a, &c);
            g_diam = gw.max_distance.max(d);
            witnesses.push(format!("G: d({a}, {c}) = {d}"));
            parts.push(part(
                5,
                "|Max| ≥ 3 and Max irreducible ⇒ diam G = 2",
                true,
                d == 2 && g_sigma.is_valid_path(&path) && gw.max_distance == 2,
                format!("window diam G {}", gw.max_distance),
            ));
            parts.push(part(6, "|Max| ≥ 3 and Max reducible ⇒ diam G = 3", false, true, "Max is irreducible".into()));
        }
        Some((u1, u2)) => {
            let gens_for = |u: &BTreeSet<usize>| -> BTreeSet<usize> {
                (0..model.generics()).filter(|&j| model.covers[j].is_subset(u)).collect()
            };
            let a = model.v_generics(&gens_for(u1));
            let b = *u1.difference(u2).next().expect("u2 is proper");
            let c = model.v_generics(&gens_for(u2)).join(&FanClosed::maximal(n, b, 0));
            let (d, path) = g_sigma.path(&a, &c);
            g_diam = gw.max_distance.max(d);
            witnesses.push(format!("Max = {:?} ∪ {:?} as blocks", u1, u2));
            witnesses.push(format!("G: d({a}, {c}) = {d}"));
            parts.push(part(5, "|Max| ≥ 3 and Max irreducible ⇒ diam G = 2", false, true, "Max is reducible".into()));
            parts.push(part(
                6,
                "|Max| ≥ 3 and Max reducible ⇒ diam G = 3",
                true,
                d == 3 && g_sigma.contains(&a) && g_sigma.contains(&c) && g_sigma.is_valid_path(&path),
                format!("window diam G {}", gw.max_distance),
            ));
        }
    }

    let inf = Cardinal::CountablyInfinite;
    Ok(SpecsReport {
        mode: "fan",
        max_count: inf,
        max_irreducible: reducible.is_none(),
        g: InvariantBundle {
            diameter: Extended::Finite(g_diam),
            girth: Extended::Finite(3),
            clique: inf,
            chromatic: inf,
        },
        h: InvariantBundle {
            diameter: Extended::Finite(3),
            girth: Extended::Finite(3),
            clique: inf,
            chromatic: inf,
        },
        parts,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let f = FanModel::parse("fan:generics=1").unwrap();
        assert_eq!((f.blocks(), f.generics()), (1, 1));
        let f = FanModel::parse("fan:generics=3;sharing=all").unwrap();
        assert_eq!((f.blocks(), f.generics()), (1, 3));
        let f = FanModel::parse("fan:disjoint=2").unwrap();
        assert_eq!((f.blocks(), f.generics()), (2, 2));
        assert_eq!(f.to_string(), "fan:disjoint=2");
        assert!(FanModel::parse("fan:generics=0").is_err());
        assert!(FanModel::parse("fan:sharing=all").is_err());
        assert!(FanModel::parse("Z6").is_err());
    }

    #[test]
    fn part_algebra() {
        let a = MaxPart::Finite(BTreeSet::from([0, 1]));
        let e = MaxPart::Cofinite(BTreeSet::from([1, 2]));
        assert_eq!(a.meet(&e), MaxPart::Finite(BTreeSet::from([0])));
        assert_eq!(a.join(&e), MaxPart::Cofinite(BTreeSet::from([2])));
        assert_eq!(e.first_missing(), Some(1));
        assert_eq!(e.first(), Some(0));
    }

    #[test]
    fn shared_generics_meet_to_bare_block() {
        let f = FanModel::parse("fan:generics=2").unwrap();
        let s = f.sigma(SigmaMode::Spec);
        let m = f.v_generic(0).meet(&f.v_generic(1));
        assert!(m.generics.is_empty() && m.covers_max());
        assert!(s.contains(&m));
        // one generic: the bare block is not Zariski closed
        let f = FanModel::parse("fan:generics=1").unwrap();
        let bare = f.v_generic(0).restrict_max();
        assert!(!f.sigma(SigmaMode::Spec).contains(&bare));
        assert!(f.sigma(SigmaMode::USpec).contains(&bare));
    }

    #[test]
    fn reducibility() {
        assert!(FanModel::parse("fan:generics=1").unwrap().reducibility_witness().is_none());
        assert!(FanModel::parse("fan:generics=3").unwrap().reducibility_witness().is_none());
        assert!(FanModel::parse("fan:disjoint=2").unwrap().reducibility_witness().is_some());
    }

    #[test]
    fn suites() {
        for (s, diam) in [("fan:generics=1", 2), ("fan:generics=2;sharing=all", 2), ("fan:disjoint=2", 3), ("fan:disjoint=3", 3)] {
            let f = FanModel::parse(s).unwrap();
            let rep = fan_suite(&f, 6, &Limits::default()).unwrap();
            assert!(rep.passed(), "{s}: {:#?}", rep.parts);
            assert_eq!(rep.g.diameter, Extended::Finite(diam), "{s}");
        }
    }

    #[test]
    fn windows_pass() {
        let f = FanModel::parse("fan:disjoint=2").unwrap();
        for mode in [SigmaMode::Spec, SigmaMode::USpec] {
            let w = verify_window(&f, mode, 6);
            assert!(w.passed(), "{w:?}");
            assert_eq!(w.max_distance, 3);
        }
        let w = verify_window(&FanModel::parse("fan:generics=1").unwrap(), SigmaMode::Spec, 6);
        assert!(w.passed());
        assert_eq!(w.max_distance, 2);
    }
}
