//! Levels of the Čech nerve of a cover and its simplicial structure functors.
//!
//! Level `n` of the nerve is the disjoint union of the intersections
//! `D_{a0…an}` over index tuples of length `n + 1`. The three variants differ
//! only in which tuples are allowed: any tuple (ordinary), weakly increasing
//! tuples (ordered) or strictly increasing tuples (reduced). An order
//! preserving map `φ : [m] → [n]` acts on a tuple by `b_j = a_{φ(j)}` and
//! induces the inclusion `D_{a0…an} ⊂ D_{b0…bm}`.

use std::fmt;
use std::sync::Arc;

use crate::cover::{intersect, Cover, Subcategory};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FunctorMap, ValidationReport};
use crate::par::{self, Parallelism};

/// Default bound on the ordinary levels that [`level`] will enumerate.
pub const DEFAULT_ORDINARY_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Ordinary,
    Ordered,
    Reduced,
}

impl Variant {
    fn admits(self, positions: &[usize]) -> bool {
        match self {
            Variant::Ordinary => true,
            Variant::Ordered => positions.windows(2).all(|w| w[0] <= w[1]),
            Variant::Reduced => positions.windows(2).all(|w| w[0] < w[1]),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(Variant::Ordinary),
            "ordered" => Ok(Variant::Ordered),
            "reduced" => Ok(Variant::Reduced),
            other => Err(Error::InvalidTuple(format!("unknown variant `{other}`"))),
        }
    }
}

/// A tuple `(a0, …, an)` of cover labels, stored as positions in the cover's
/// index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    positions: Vec<usize>,
    variant: Variant,
}

impl IndexTuple {
    pub fn from_positions(positions: Vec<usize>, variant: Variant) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::InvalidTuple("empty tuple".into()));
        }
        if !variant.admits(&positions) {
            return Err(Error::InvalidTuple(format!(
                "{positions:?} violates the {variant:?} constraint"
            )));
        }
        Ok(IndexTuple { positions, variant })
    }

    pub fn from_labels(cover: &Cover, labels: &[&str], variant: Variant) -> Result<Self> {
        let positions = labels
            .iter()
            .map(|l| cover.position(l))
            .collect::<Result<Vec<_>>>()?;
        Self::from_positions(positions, variant)
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Simplicial degree `n` of a tuple of length `n + 1`.
    pub fn degree(&self) -> usize {
        self.positions.len() - 1
    }

    pub fn labels<'a>(&self, cover: &'a Cover) -> Vec<&'a str> {
        self.positions.iter().map(|&p| cover.labels()[p].as_str()).collect()
    }

    /// Labels joined by commas, e.g. `1,2`.
    pub fn render(&self, cover: &Cover) -> String {
        self.labels(cover).join(",")
    }

    fn check_against(&self, cover: &Cover) -> Result<()> {
        match self.positions.iter().find(|&&p| p >= cover.len()) {
            Some(p) => Err(Error::UnknownLabel(format!("position {p}"))),
            None => Ok(()),
        }
    }
}

/// An order preserving map `[m] → [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaMap {
    values: Vec<usize>,
    cod: usize,
}

impl DeltaMap {
    /// `values[j]` is the image of `j`; the domain is `[values.len() - 1]`.
    pub fn new(values: Vec<usize>, cod: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidDeltaMap("empty domain".into()));
        }
        if values.iter().any(|&v| v > cod) {
            return Err(Error::InvalidDeltaMap(format!("{values:?} leaves [{cod}]")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDeltaMap(format!("{values:?} is not monotone")));
        }
        Ok(DeltaMap { values, cod })
    }

    pub fn identity(n: usize) -> Self {
        DeltaMap {
            values: (0..=n).collect(),
            cod: n,
        }
    }

    /// Coface `δ_i : [n-1] → [n]` skipping `i`.
    pub fn coface(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::InvalidDeltaMap(format!("no coface δ_{i} into [{n}]")));
        }
        Ok(DeltaMap {
            values: (0..=n).filter(|&v| v != i).collect(),
            cod: n,
        })
    }

    /// Codegeneracy `σ_j : [n+1] → [n]` hitting `j` twice.
    pub fn codegeneracy(j: usize, n: usize) -> Result<Self> {
        if j > n {
            return Err(Error::InvalidDeltaMap(format!("no codegeneracy σ_{j} onto [{n}]")));
        }
        Ok(DeltaMap {
            values: (0..=n + 1).map(|v| if v <= j { v } else { v - 1 }).collect(),
            cod: n,
        })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `m` for a map `[m] → [n]`.
    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &DeltaMap) -> Result<DeltaMap> {
        if inner.cod != self.dom() {
            return Err(Error::InvalidDeltaMap(format!(
                "cannot compose [{}]→[{}] after [{}]→[{}]",
                self.dom(),
                self.cod,
                inner.dom(),
                inner.cod
            )));
        }
        Ok(DeltaMap {
            values: inner.values.iter().map(|&j| self.values[j]).collect(),
            cod: self.cod,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.cod
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `b_j = a_{φ(j)}`.
    pub fn act<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        self.values.iter().map(|&i| tuple[i].clone()).collect()
    }
}

impl fmt::Display for DeltaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", vals.join(","))
    }
}

/// One summand `D_{a0…an}` of a nerve level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveLevelPiece {
    pub tuple: IndexTuple,
    pub category: Subcategory,
}

pub fn level_piece(cover: &Cover, tuple: &IndexTuple) -> Result<NerveLevelPiece> {
    tuple.check_against(cover)?;
    let parts: Vec<&Subcategory> = tuple.positions.iter().map(|&p| cover.part(p)).collect();
    Ok(NerveLevelPiece {
        tuple: tuple.clone(),
        category: intersect(&parts)?,
    })
}

/// Tuples of length `n + 1` over `k` labels admitted by `variant`, in
/// lexicographic order.
pub fn tuples(k: usize, n: usize, variant: Variant) -> Vec<Vec<usize>> {
    let len = n + 1;
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(len);
    fn rec(k: usize, len: usize, variant: Variant, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = match (variant, cur.last()) {
            (Variant::Ordinary, _) | (_, None) => 0,
            (Variant::Ordered, Some(&l)) => l,
            (Variant::Reduced, Some(&l)) => l + 1,
        };
        for p in start..k {
            cur.push(p);
            rec(k, len, variant, cur, out);
            cur.pop();
        }
    }
    rec(k, len, variant, &mut cur, &mut out);
    out
}

/// Pieces of level `n`, one per admissible tuple, empty intersections
/// included.
pub fn level(cover: &Cover, n: usize, variant: Variant) -> Result<Vec<NerveLevelPiece>> {
    level_with(cover, n, variant, DEFAULT_ORDINARY_CAP, Parallelism::default())
}

pub fn level_with(
    cover: &Cover,
    n: usize,
    variant: Variant,
    ordinary_cap: usize,
    par: Parallelism,
) -> Result<Vec<NerveLevelPiece>> {
    if variant == Variant::Ordinary && n > ordinary_cap {
        return Err(Error::LevelCapExceeded {
            level: n,
            cap: ordinary_cap,
        });
    }
    let ts = tuples(cover.len(), n, variant);
    par::map(par, &ts, |t| {
        level_piece(cover, &IndexTuple {
            positions: t.clone(),
            variant,
        })
    })
    .into_iter()
    .collect()
}

/// A structure functor of the nerve between two labelled pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveMap {
    pub source: IndexTuple,
    pub target: IndexTuple,
    pub functor: FunctorMap,
}

impl NerveMap {
    /// `next ∘ self`.
    pub fn then(&self, next: &NerveMap) -> Result<NerveMap> {
        if self.target != next.source {
            return Err(Error::InvalidFunctor(format!(
                "cannot compose nerve maps: {:?} ≠ {:?}",
                self.target.positions, next.source.positions
            )));
        }
        Ok(NerveMap {
            source: self.source.clone(),
            target: next.target.clone(),
            functor: self.functor.then(&next.functor)?,
        })
    }

    pub fn same_as(&self, other: &NerveMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.functor.same_maps(&other.functor)
    }
}

/// The inclusion of `a` into `b` as a functor between the two categories.
pub(crate) fn inclusion_functor(a: &Subcategory, b: &Subcategory) -> Result<FunctorMap> {
    if !crate::cover::is_subcategory_of(a, b) {
        return Err(Error::InvalidFunctor("not an inclusion of subcategories".into()));
    }
    let source = Arc::new(a.to_category());
    let target = Arc::new(b.to_category());
    let local = |set: &std::collections::BTreeSet<usize>, x: usize| {
        set.range(..x).count()
    };
    let object_map = a.objects().iter().map(|&x| local(b.objects(), x)).collect();
    let morphism_map = a.morphisms().iter().map(|&m| local(b.morphisms(), m)).collect();
    FunctorMap::new(source, target, object_map, morphism_map)
}

/// The functor `φ_* : D_{a0…an} → D_{b0…bm}` with `b_j = a_{φ(j)}`.
pub fn induced_functor(cover: &Cover, phi: &DeltaMap, tuple: &IndexTuple) -> Result<NerveMap> {
    if phi.cod() != tuple.degree() {
        return Err(Error::InvalidDeltaMap(format!(
            "map into [{}] applied to a tuple of degree {}",
            phi.cod(),
            tuple.degree()
        )));
    }
    if tuple.variant == Variant::Reduced && !phi.is_injective() {
        return Err(Error::InvalidDeltaMap(format!(
            "{phi} is not injective; the reduced nerve only has face maps"
        )));
    }
    let target = IndexTuple::from_positions(phi.act(&tuple.positions), tuple.variant)?;
    let a = level_piece(cover, tuple)?;
    let b = level_piece(cover, &target)?;
    Ok(NerveMap {
        source: tuple.clone(),
        target,
        functor: inclusion_functor(&a.category, &b.category)?,
    })
}

/// Face and degeneracy functors, abstracted so a check can be run against a
/// deliberately altered structure.
pub trait NerveOps: Sync {
    fn face(&self, cover: &Cover, i: usize, tuple: &IndexTuple) -> Result<NerveMap>;
    fn degeneracy(&self, cover: &Cover, j: usize, tuple: &IndexTuple) -> Result<NerveMap>;
}

/// The face and degeneracy functors of the Čech nerve.
#[derive(Debug, Clone, Copy, Default)]
pub struct CechOps;

impl NerveOps for CechOps {
    fn face(&self, cover: &Cover, i: usize, tuple: &IndexTuple) -> Result<NerveMap> {
        induced_functor(cover, &DeltaMap::coface(i, tuple.degree())?, tuple)
    }

    fn degeneracy(&self, cover: &Cover, j: usize, tuple: &IndexTuple) -> Result<NerveMap> {
        induced_functor(cover, &DeltaMap::codegeneracy(j, tuple.degree())?, tuple)
    }
}

/// Verifies the simplicial identities on every ordinary tuple of degree at
/// most `up_to_n`.
pub fn check_simplicial_identities(cover: &Cover, up_to_n: usize) -> ValidationReport {
    check_simplicial_identities_with(cover, up_to_n, &CechOps, Parallelism::default())
}

pub fn check_simplicial_identities_with(
    cover: &Cover,
    up_to_n: usize,
    ops: &dyn NerveOps,
    par: Parallelism,
) -> ValidationReport {
    let all: Vec<Vec<usize>> = (0..=up_to_n)
        .flat_map(|n| tuples(cover.len(), n, Variant::Ordinary))
        .collect();
    let failures = par::flat_map(par, &all, |t| {
        let tuple = IndexTuple {
            positions: t.clone(),
            variant: Variant::Ordinary,
        };
        identities_at(cover, &tuple, ops)
    });
    let mut report = ValidationReport::default();
    for (ids, message) in failures {
        report.push("simplicial-identity", ids, message);
    }
    report
}

fn identities_at(cover: &Cover, tuple: &IndexTuple, ops: &dyn NerveOps) -> Vec<(Vec<String>, String)> {
    let n = tuple.degree();
    let label = tuple.render(cover);
    let mut out = Vec::new();
    let mut expect = |name: String, lhs: Result<NerveMap>, rhs: Result<NerveMap>| {
        let ok = match (&lhs, &rhs) {
            (Ok(l), Ok(r)) => l.same_as(r),
            _ => false,
        };
        if !ok {
            let detail = match (lhs, rhs) {
                (Err(e), _) | (_, Err(e)) => format!(": {e}"),
                _ => String::new(),
            };
            out.push((vec![label.clone(), name.clone()], format!("{name} fails at ({label}){detail}")));
        }
    };
    let d = |i: usize, t: &IndexTuple| ops.face(cover, i, t);
    let s = |j: usize, t: &IndexTuple| ops.degeneracy(cover, j, t);
    let chain = |first: Result<NerveMap>, second: &dyn Fn(&IndexTuple) -> Result<NerveMap>| {
        let first = first?;
        let next = second(&first.target)?;
        first.then(&next)
    };
    let identity = || -> Result<NerveMap> {
        let piece = level_piece(cover, tuple)?;
        Ok(NerveMap {
            source: tuple.clone(),
            target: tuple.clone(),
            functor: FunctorMap::identity(Arc::new(piece.category.to_category())),
        })
    };

    // d_i d_j = d_{j-1} d_i, i < j
    for j in 0..=n {
        for i in 0..j {
            if n < 2 {
                continue;
            }
            expect(
                format!("d{i} d{j} = d{} d{i}", j - 1),
                chain(d(j, tuple), &|t| d(i, t)),
                chain(d(i, tuple), &|t| d(j - 1, t)),
            );
        }
    }
    for j in 0..=n {
        // d_i s_j = s_{j-1} d_i, i < j
        for i in 0..j {
            expect(
                format!("d{i} s{j} = s{} d{i}", j - 1),
                chain(s(j, tuple), &|t| d(i, t)),
                chain(d(i, tuple), &|t| s(j - 1, t)),
            );
        }
        // d_j s_j = id = d_{j+1} s_j
        expect(format!("d{j} s{j} = id"), chain(s(j, tuple), &|t| d(j, t)), identity());
        expect(
            format!("d{} s{j} = id", j + 1),
            chain(s(j, tuple), &|t| d(j + 1, t)),
            identity(),
        );
        // d_i s_j = s_j d_{i-1}, i > j + 1
        for i in (j + 2)..=(n + 1) {
            expect(
                format!("d{i} s{j} = s{j} d{}", i - 1),
                chain(s(j, tuple), &|t| d(i, t)),
                chain(d(i - 1, tuple), &|t| s(j, t)),
            );
        }
        // s_i s_j = s_{j+1} s_i, i <= j
        for i in 0..=j {
            expect(
                format!("s{i} s{j} = s{} s{i}", j + 1),
                chain(s(j, tuple), &|t| s(i, t)),
                chain(s(i, tuple), &|t| s(j + 1, t)),
            );
        }
    }
    out
}

/// The piece categories of a level as standalone categories.
pub fn level_categories(pieces: &[NerveLevelPiece]) -> Vec<FinCategory> {
    pieces.iter().map(|p| p.category.to_category()).collect()
}
