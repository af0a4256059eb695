//! Explicit finite categories and functors between them.
//!
//! A [`CategoryData`] is the unchecked, string-keyed description of a category
//! as it appears in a file or a builder chain. [`validate_category`] checks
//! every axiom instance and reports all failures; [`FinCategory::new`] turns a
//! valid description into the indexed form used by the rest of the crate.
//!
//! Compositions with identities are implicit: a missing entry `(id, f)` or
//! `(f, id)` is read as `f`. Every other composable pair must be listed.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::par::{self, Parallelism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismDecl {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// Unchecked description of a finite category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryData {
    pub name: String,
    pub objects: Vec<String>,
    /// All morphisms, identities included, in declaration order.
    pub morphisms: Vec<MorphismDecl>,
    /// `(object, identity morphism id)`.
    pub identities: Vec<(String, String)>,
    /// `(g, f, g∘f)`.
    pub compositions: Vec<(String, String, String)>,
}

impl CategoryData {
    pub fn new(name: impl Into<String>) -> Self {
        CategoryData {
            name: name.into(),
            ..Default::default()
        }
    }

    /// Adds an object together with its identity `id_<object>`.
    pub fn object(mut self, id: impl Into<String>) -> Self {
        let id = id.into();
        let ident = format!("id_{id}");
        self.morphisms.push(MorphismDecl {
            id: ident.clone(),
            dom: id.clone(),
            cod: id.clone(),
        });
        self.identities.push((id.clone(), ident));
        self.objects.push(id);
        self
    }

    pub fn objects<I, S>(self, ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ids.into_iter().fold(self, |data, id| data.object(id))
    }

    pub fn morphism(
        mut self,
        id: impl Into<String>,
        dom: impl Into<String>,
        cod: impl Into<String>,
    ) -> Self {
        self.morphisms.push(MorphismDecl {
            id: id.into(),
            dom: dom.into(),
            cod: cod.into(),
        });
        self
    }

    /// Records `g ∘ f = h`.
    pub fn compose(
        mut self,
        g: impl Into<String>,
        f: impl Into<String>,
        h: impl Into<String>,
    ) -> Self {
        self.compositions.push((g.into(), f.into(), h.into()));
        self
    }

    /// Removes the composition entry for `(g, f)`, if present.
    pub fn without_composition(mut self, g: &str, f: &str) -> Self {
        self.compositions.retain(|(gg, ff, _)| !(gg == g && ff == f));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub ids: Vec<String>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}

/// Outcome of an exhaustive check. Valid iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, rule: &'static str, ids: Vec<String>, message: impl Into<String>) {
        self.violations.push(Violation {
            rule,
            ids,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub id: String,
    pub dom: usize,
    pub cod: usize,
}

/// A validated finite category with a total composition table.
///
/// Objects and morphisms are addressed by their position in declaration
/// order; that order is the canonical order for matrices and output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
    obj_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
    homs: Vec<Vec<usize>>,
}

struct Indexed {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
}

impl FinCategory {
    pub fn new(data: &CategoryData) -> Result<Self> {
        Self::new_with(data, Parallelism::default())
    }

    pub fn new_with(data: &CategoryData, par: Parallelism) -> Result<Self> {
        let (report, indexed) = check(data, par);
        match indexed {
            Some(ix) if report.ok() => Ok(Self::assemble(data.name.clone(), ix)),
            _ => Err(Error::InvalidCategory(report)),
        }
    }

    /// The category with no objects.
    pub fn empty(name: impl Into<String>) -> Self {
        Self::assemble(
            name.into(),
            Indexed {
                objects: vec![],
                morphisms: vec![],
                identity: vec![],
                comp: HashMap::new(),
            },
        )
    }

    fn assemble(name: String, ix: Indexed) -> Self {
        let n = ix.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (m, mor) in ix.morphisms.iter().enumerate() {
            homs[mor.dom * n + mor.cod].push(m);
        }
        let obj_index = ix
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), i))
            .collect();
        let mor_index = ix
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id.clone(), i))
            .collect();
        FinCategory {
            name,
            objects: ix.objects,
            morphisms: ix.morphisms,
            identity: ix.identity,
            comp: ix.comp,
            obj_index,
            mor_index,
            homs,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_id(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn morphism_id(&self, m: usize) -> &str {
        &self.morphisms[m].id
    }

    pub fn object_index(&self, id: &str) -> Result<usize> {
        self.obj_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownObject(id.to_string()))
    }

    pub fn morphism_index(&self, id: &str) -> Result<usize> {
        self.mor_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(id.to_string()))
    }

    pub fn dom(&self, m: usize) -> usize {
        self.morphisms[m].dom
    }

    pub fn cod(&self, m: usize) -> usize {
        self.morphisms[m].cod
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        let mor = &self.morphisms[m];
        mor.dom == mor.cod && self.identity[mor.dom] == m
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        self.comp.get(&(g, f)).copied()
    }

    /// Morphisms `x → y` in declaration order.
    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x * self.objects.len() + y]
    }

    /// Morphism ids `x → y` in declaration order.
    pub fn hom_set(&self, x: &str, y: &str) -> Result<Vec<&str>> {
        let (xi, yi) = (self.object_index(x)?, self.object_index(y)?);
        Ok(self.hom(xi, yi).iter().map(|&m| self.morphism_id(m)).collect())
    }

    /// Converts back to the unchecked description. Identity compositions are
    /// left implicit.
    pub fn to_data(&self) -> CategoryData {
        let mut data = CategoryData::new(self.name.clone());
        data.objects = self.objects.clone();
        data.morphisms = self
            .morphisms
            .iter()
            .map(|m| MorphismDecl {
                id: m.id.clone(),
                dom: self.objects[m.dom].clone(),
                cod: self.objects[m.cod].clone(),
            })
            .collect();
        data.identities = self
            .identity
            .iter()
            .enumerate()
            .map(|(x, &m)| (self.objects[x].clone(), self.morphisms[m].id.clone()))
            .collect();
        data.compositions = self
            .composable_non_identity_pairs()
            .into_iter()
            .map(|(g, f)| {
                let h = self.comp[&(g, f)];
                (
                    self.morphisms[g].id.clone(),
                    self.morphisms[f].id.clone(),
                    self.morphisms[h].id.clone(),
                )
            })
            .collect();
        data
    }

    /// Composable pairs `(g, f)` of non-identities, ordered by `g` then `f`.
    pub fn composable_non_identity_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for g in 0..self.morphisms.len() {
            if self.is_identity(g) {
                continue;
            }
            let d = self.dom(g);
            for x in 0..self.objects.len() {
                for &f in self.hom(x, d) {
                    if !self.is_identity(f) {
                        out.push((g, f));
                    }
                }
            }
        }
        out
    }

    /// Re-runs the full axiom check on this category.
    pub fn validate(&self) -> ValidationReport {
        validate_category(&self.to_data())
    }

    /// Dual category: same ids, endpoints swapped, composition reversed.
    pub fn opposite(&self) -> FinCategory {
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                id: m.id.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        let comp = self.comp.iter().map(|(&(g, f), &h)| ((f, g), h)).collect();
        Self::assemble(
            name,
            Indexed {
                objects: self.objects.clone(),
                morphisms,
                identity: self.identity.clone(),
                comp,
            },
        )
    }

    /// No non-identity endomorphisms and no pair of distinct objects with
    /// morphisms in both directions.
    pub fn is_acyclic(&self) -> bool {
        let n = self.objects.len();
        for x in 0..n {
            if self.hom(x, x).len() != 1 {
                return false;
            }
            for y in (x + 1)..n {
                if !self.hom(x, y).is_empty() && !self.hom(y, x).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components of the underlying graph.
    pub fn component_count(&self) -> usize {
        let n = self.objects.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for m in &self.morphisms {
            let (a, b) = (find(&mut parent, m.dom), find(&mut parent, m.cod));
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Restriction to the given objects and morphisms, which must form a
    /// subcategory. Sets are given as sorted parent indices.
    pub(crate) fn restrict(&self, name: String, objects: &[usize], morphisms: &[usize]) -> Self {
        let mut obj_new = vec![usize::MAX; self.objects.len()];
        for (i, &x) in objects.iter().enumerate() {
            obj_new[x] = i;
        }
        let mut mor_new = vec![usize::MAX; self.morphisms.len()];
        for (i, &m) in morphisms.iter().enumerate() {
            mor_new[m] = i;
        }
        let mut comp = HashMap::new();
        for &g in morphisms {
            for &f in morphisms {
                if let Some(h) = self.compose(g, f) {
                    comp.insert((mor_new[g], mor_new[f]), mor_new[h]);
                }
            }
        }
        Self::assemble(
            name,
            Indexed {
                objects: objects.iter().map(|&x| self.objects[x].clone()).collect(),
                morphisms: morphisms
                    .iter()
                    .map(|&m| Morphism {
                        id: self.morphisms[m].id.clone(),
                        dom: obj_new[self.dom(m)],
                        cod: obj_new[self.cod(m)],
                    })
                    .collect(),
                identity: objects.iter().map(|&x| mor_new[self.identity[x]]).collect(),
                comp,
            },
        )
    }
}

/// Checks every category axiom instance of `data`.
pub fn validate_category(data: &CategoryData) -> ValidationReport {
    check(data, Parallelism::default()).0
}

pub fn validate_category_with(data: &CategoryData, par: Parallelism) -> ValidationReport {
    check(data, par).0
}

fn check(data: &CategoryData, par: Parallelism) -> (ValidationReport, Option<Indexed>) {
    let mut report = ValidationReport::default();

    let mut obj_index: HashMap<&str, usize> = HashMap::new();
    for (i, o) in data.objects.iter().enumerate() {
        if obj_index.insert(o.as_str(), i).is_some() {
            report.push(
                "duplicate-object",
                vec![o.clone()],
                format!("object `{o}` declared twice"),
            );
        }
    }

    let mut mor_index: HashMap<&str, usize> = HashMap::new();
    let mut morphisms = Vec::with_capacity(data.morphisms.len());
    let mut structural = true;
    for (i, m) in data.morphisms.iter().enumerate() {
        if mor_index.insert(m.id.as_str(), i).is_some() {
            report.push(
                "duplicate-morphism",
                vec![m.id.clone()],
                format!("morphism `{}` declared twice", m.id),
            );
            structural = false;
        }
        let dom = obj_index.get(m.dom.as_str()).copied();
        let cod = obj_index.get(m.cod.as_str()).copied();
        for (end, found) in [(&m.dom, dom), (&m.cod, cod)] {
            if found.is_none() {
                report.push(
                    "dangling-reference",
                    vec![m.id.clone(), end.clone()],
                    format!("morphism `{}` refers to unknown object `{end}`", m.id),
                );
                structural = false;
            }
        }
        morphisms.push(Morphism {
            id: m.id.clone(),
            dom: dom.unwrap_or(usize::MAX),
            cod: cod.unwrap_or(usize::MAX),
        });
    }

    let mut identity = vec![usize::MAX; data.objects.len()];
    for (o, m) in &data.identities {
        let Some(&x) = obj_index.get(o.as_str()) else {
            report.push(
                "dangling-reference",
                vec![o.clone()],
                format!("identity declared for unknown object `{o}`"),
            );
            continue;
        };
        let Some(&mi) = mor_index.get(m.as_str()) else {
            report.push(
                "dangling-reference",
                vec![m.clone()],
                format!("identity of `{o}` is unknown morphism `{m}`"),
            );
            continue;
        };
        if identity[x] != usize::MAX {
            report.push(
                "identity",
                vec![o.clone()],
                format!("object `{o}` has more than one identity"),
            );
        }
        if morphisms[mi].dom != x || morphisms[mi].cod != x {
            report.push(
                "identity",
                vec![o.clone(), m.clone()],
                format!("identity `{m}` of `{o}` is not an endomorphism of `{o}`"),
            );
            structural = false;
        }
        identity[x] = mi;
    }
    for (x, &m) in identity.iter().enumerate() {
        if m == usize::MAX {
            let o = &data.objects[x];
            report.push(
                "identity",
                vec![o.clone()],
                format!("object `{o}` has no identity"),
            );
            structural = false;
        }
    }
    if !structural {
        return (report, None);
    }
    let is_id = |m: usize| {
        let mor = &morphisms[m];
        mor.dom == mor.cod && identity[mor.dom] == m
    };

    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    for (g, f, h) in &data.compositions {
        let resolved: Vec<Option<usize>> = [g, f, h]
            .iter()
            .map(|id| mor_index.get(id.as_str()).copied())
            .collect();
        let (Some(gi), Some(fi), Some(hi)) = (resolved[0], resolved[1], resolved[2]) else {
            for (id, r) in [g, f, h].iter().zip(&resolved) {
                if r.is_none() {
                    report.push(
                        "dangling-reference",
                        vec![(*id).clone()],
                        format!("composition `{g} {f} = {h}` refers to unknown morphism `{id}`"),
                    );
                }
            }
            continue;
        };
        if morphisms[fi].cod != morphisms[gi].dom {
            report.push(
                "composability",
                vec![g.clone(), f.clone()],
                format!("composition given for non-composable pair ({g},{f})"),
            );
            continue;
        }
        if morphisms[hi].dom != morphisms[fi].dom || morphisms[hi].cod != morphisms[gi].cod {
            report.push(
                "composite-type",
                vec![g.clone(), f.clone(), h.clone()],
                format!("composite `{h}` of ({g},{f}) has the wrong domain or codomain"),
            );
            continue;
        }
        if let Some(&prev) = comp.get(&(gi, fi)) {
            if prev != hi {
                report.push(
                    "composition-conflict",
                    vec![g.clone(), f.clone()],
                    format!("composition at ({g},{f}) defined twice with different values"),
                );
            }
            continue;
        }
        if is_id(gi) && hi != fi {
            report.push(
                "identity-law",
                vec![g.clone(), f.clone(), h.clone()],
                format!("{g} ∘ {f} must be {f}, got {h}"),
            );
            continue;
        }
        if is_id(fi) && hi != gi {
            report.push(
                "identity-law",
                vec![g.clone(), f.clone(), h.clone()],
                format!("{g} ∘ {f} must be {g}, got {h}"),
            );
            continue;
        }
        comp.insert((gi, fi), hi);
    }

    // Complete identity compositions and check totality.
    let n = data.objects.len();
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (m, mor) in morphisms.iter().enumerate() {
        into[mor.cod].push(m);
    }
    let mut total = true;
    for g in 0..morphisms.len() {
        for &f in &into[morphisms[g].dom] {
            if comp.contains_key(&(g, f)) {
                continue;
            }
            if is_id(g) {
                comp.insert((g, f), f);
            } else if is_id(f) {
                comp.insert((g, f), g);
            } else {
                let (gid, fid) = (&morphisms[g].id, &morphisms[f].id);
                report.push(
                    "totality",
                    vec![gid.clone(), fid.clone()],
                    format!("composition not total at ({gid},{fid})"),
                );
                total = false;
            }
        }
    }

    if total {
        let mut from: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (m, mor) in morphisms.iter().enumerate() {
            from[mor.dom].push(m);
        }
        let assoc = par::flat_map_range(par, morphisms.len(), |f| {
            let mut bad = Vec::new();
            for &g in &from[morphisms[f].cod] {
                let gf = comp[&(g, f)];
                for &h in &from[morphisms[g].cod] {
                    if comp[&(h, gf)] != comp[&(comp[&(h, g)], f)] {
                        bad.push((h, g, f));
                    }
                }
            }
            bad
        });
        for (h, g, f) in assoc {
            let ids: Vec<String> = [h, g, f].iter().map(|&m| morphisms[m].id.clone()).collect();
            report.push(
                "associativity",
                ids.clone(),
                format!("associativity fails at ({}, {}, {})", ids[0], ids[1], ids[2]),
            );
        }
    }

    let indexed = Indexed {
        objects: data.objects.clone(),
        morphisms,
        identity,
        comp,
    };
    (report, Some(indexed))
}

/// A functor between finite categories, given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorMap {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

/// Result of [`validate_functor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorCheck {
    pub report: ValidationReport,
    /// Both maps are bijections (and the functor is valid).
    pub isomorphism: bool,
}

impl FunctorMap {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() {
            return Err(Error::InvalidFunctor(format!(
                "object map has {} entries, source has {} objects",
                object_map.len(),
                source.object_count()
            )));
        }
        if morphism_map.len() != source.morphism_count() {
            return Err(Error::InvalidFunctor(format!(
                "morphism map has {} entries, source has {} morphisms",
                morphism_map.len(),
                source.morphism_count()
            )));
        }
        if let Some(&x) = object_map.iter().find(|&&x| x >= target.object_count()) {
            return Err(Error::InvalidFunctor(format!("dangling target object {x}")));
        }
        if let Some(&m) = morphism_map.iter().find(|&&m| m >= target.morphism_count()) {
            return Err(Error::InvalidFunctor(format!("dangling target morphism {m}")));
        }
        Ok(FunctorMap {
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    /// Builds a functor from id-to-id maps; every source id must be mapped.
    pub fn from_names<'a>(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: impl IntoIterator<Item = (&'a str, &'a str)>,
        morphisms: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut object_map = vec![usize::MAX; source.object_count()];
        for (a, b) in objects {
            object_map[source.object_index(a)?] = target.object_index(b)?;
        }
        let mut morphism_map = vec![usize::MAX; source.morphism_count()];
        for (a, b) in morphisms {
            morphism_map[source.morphism_index(a)?] = target.morphism_index(b)?;
        }
        if let Some(x) = object_map.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidFunctor(format!(
                "object `{}` is not mapped",
                source.object_id(x)
            )));
        }
        if let Some(m) = morphism_map.iter().position(|&m| m == usize::MAX) {
            return Err(Error::InvalidFunctor(format!(
                "morphism `{}` is not mapped",
                source.morphism_id(m)
            )));
        }
        Self::new(source, target, object_map, morphism_map)
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        FunctorMap {
            object_map: (0..cat.object_count()).collect(),
            morphism_map: (0..cat.morphism_count()).collect(),
            source: cat.clone(),
            target: cat,
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    pub fn on_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn on_morphism(&self, m: usize) -> usize {
        self.morphism_map[m]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FunctorMap) -> Result<FunctorMap> {
        if *self.target != *next.source {
            return Err(Error::InvalidFunctor(format!(
                "cannot compose: target `{}` differs from source `{}`",
                self.target.name(),
                next.source.name()
            )));
        }
        Ok(FunctorMap {
            source: self.source.clone(),
            target: next.target.clone(),
            object_map: self.object_map.iter().map(|&x| next.object_map[x]).collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|&m| next.morphism_map[m])
                .collect(),
        })
    }

    /// Whether the object and morphism maps agree with `other` (same
    /// source and target categories up to equality).
    pub fn same_maps(&self, other: &FunctorMap) -> bool {
        self.object_map == other.object_map
            && self.morphism_map == other.morphism_map
            && *self.source == *other.source
            && *self.target == *other.target
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target
            && self.object_map.iter().enumerate().all(|(i, &x)| i == x)
            && self.morphism_map.iter().enumerate().all(|(i, &m)| i == m)
    }
}

/// Checks endpoint, identity and composition preservation exhaustively.
pub fn validate_functor(functor: &FunctorMap) -> FunctorCheck {
    let (s, t) = (&*functor.source, &*functor.target);
    let mut report = ValidationReport::default();
    for m in 0..s.morphism_count() {
        let fm = functor.on_morphism(m);
        if t.dom(fm) != functor.on_object(s.dom(m)) || t.cod(fm) != functor.on_object(s.cod(m)) {
            report.push(
                "functor-endpoints",
                vec![s.morphism_id(m).to_string()],
                format!(
                    "image of `{}` does not connect the images of its endpoints",
                    s.morphism_id(m)
                ),
            );
        }
    }
    for x in 0..s.object_count() {
        if functor.on_morphism(s.identity(x)) != t.identity(functor.on_object(x)) {
            report.push(
                "functor-identity",
                vec![s.object_id(x).to_string()],
                format!("identity of `{}` is not preserved", s.object_id(x)),
            );
        }
    }
    if report.ok() {
        for g in 0..s.morphism_count() {
            for &f in (0..s.object_count()).flat_map(|x| s.hom(x, s.dom(g))) {
                let gf = s.compose(g, f).expect("composable");
                let lhs = functor.on_morphism(gf);
                let rhs = t.compose(functor.on_morphism(g), functor.on_morphism(f));
                if rhs != Some(lhs) {
                    report.push(
                        "functor-composition",
                        vec![s.morphism_id(g).to_string(), s.morphism_id(f).to_string()],
                        format!(
                            "composition at ({},{}) is not preserved",
                            s.morphism_id(g),
                            s.morphism_id(f)
                        ),
                    );
                }
            }
        }
    }
    let bijective = |map: &[usize], n: usize| {
        map.len() == n && map.iter().collect::<HashSet<_>>().len() == n
    };
    let isomorphism = report.ok()
        && bijective(&functor.object_map, t.object_count())
        && bijective(&functor.morphism_map, t.morphism_count());
    FunctorCheck {
        report,
        isomorphism,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn point() -> CategoryData {
        CategoryData::new("T").object("p")
    }

    #[test]
    fn identity_only_category_is_valid() {
        assert!(validate_category(&point()).ok());
        let empty = CategoryData::new("E");
        assert!(validate_category(&empty).ok());
        assert_eq!(FinCategory::new(&empty).unwrap().object_count(), 0);
    }

    #[test]
    fn counterexample_is_valid() {
        let report = validate_category(&fixtures::counterexample_data());
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn missing_composite_is_the_unique_failure() {
        let data = fixtures::counterexample_data().without_composition("h", "f");
        let report = validate_category(&data);
        assert_eq!(report.violations.len(), 1, "{report}");
        assert_eq!(report.violations[0].rule, "totality");
        assert_eq!(report.violations[0].message, "composition not total at (h,f)");
        assert!(matches!(FinCategory::new(&data), Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn structural_failures_are_reported() {
        let data = point().morphism("e", "p", "q");
        let report = validate_category(&data);
        assert!(report.has_rule("dangling-reference"));

        let data = point().morphism("id_p", "p", "p");
        assert!(validate_category(&data).has_rule("duplicate-morphism"));

        let data = point().morphism("e", "p", "p").compose("id_p", "e", "id_p").compose("e", "e", "e");
        assert!(validate_category(&data).has_rule("identity-law"));

        let data = CategoryData::new("X")
            .objects(["a", "b"])
            .morphism("u", "a", "b")
            .compose("u", "u", "u");
        assert!(validate_category(&data).has_rule("composability"));
    }

    #[test]
    fn associativity_failure_is_detected() {
        // e∘(e∘n) = e∘e = n but (e∘e)∘n = n∘n = e.
        let data = CategoryData::new("M")
            .object("p")
            .morphism("e", "p", "p")
            .morphism("n", "p", "p")
            .compose("e", "e", "n")
            .compose("e", "n", "e")
            .compose("n", "e", "e")
            .compose("n", "n", "e");
        let report = validate_category(&data);
        assert!(report.has_rule("associativity"), "{report}");
    }

    #[test]
    fn hom_sets_of_counterexample() {
        let c = fixtures::counterexample();
        assert_eq!(c.hom_set("x", "y").unwrap(), vec!["f", "g"]);
        assert!(c.hom_set("z", "x").unwrap().is_empty());
        assert_eq!(c.hom_set("x", "z").unwrap(), vec!["k"]);
        assert!(matches!(c.hom_set("w", "x"), Err(Error::UnknownObject(_))));
    }

    #[test]
    fn hom_x_z_matches_exhaustive_composition() {
        // Every composite x → y → z lands in hom(x, z), which therefore holds
        // exactly the distinct composites h∘f and h∘g.
        let c = fixtures::counterexample();
        let (x, y, z) = (0, 1, 2);
        let mut composites: Vec<usize> = Vec::new();
        for &g in c.hom(y, z) {
            for &f in c.hom(x, y) {
                composites.push(c.compose(g, f).unwrap());
            }
        }
        composites.sort();
        composites.dedup();
        assert_eq!(composites, c.hom(x, z).to_vec());
    }

    #[test]
    fn opposite_examples() {
        let p = FinCategory::new(&point()).unwrap();
        let pop = p.opposite();
        assert_eq!(pop.objects(), p.objects());
        assert_eq!(pop.morphisms(), p.morphisms());

        let c = fixtures::counterexample();
        let cop = c.opposite();
        assert_eq!(cop.hom_set("y", "x").unwrap().len(), 2);
        assert!(cop.hom_set("x", "y").unwrap().is_empty());
        assert_eq!(cop.opposite(), c);
        assert!(cop.validate().ok());
    }

    #[test]
    fn acyclicity() {
        assert!(fixtures::counterexample().is_acyclic());
        let idem = CategoryData::new("I")
            .object("p")
            .morphism("e", "p", "p")
            .compose("e", "e", "e");
        assert!(!FinCategory::new(&idem).unwrap().is_acyclic());
        for k in 1..=5 {
            assert!(fixtures::simplex_category(k).is_acyclic());
        }
    }

    #[test]
    fn functor_checks() {
        let c = Arc::new(fixtures::counterexample());
        let id = FunctorMap::identity(c.clone());
        let check = validate_functor(&id);
        assert!(check.report.ok() && check.isomorphism);

        let pt = Arc::new(FinCategory::new(&point()).unwrap());
        let constant = FunctorMap::new(
            c.clone(),
            pt,
            vec![0; c.object_count()],
            vec![0; c.morphism_count()],
        )
        .unwrap();
        let check = validate_functor(&constant);
        assert!(check.report.ok());
        assert!(!check.isomorphism);

        // f ↦ f, g ↦ f, everything else fixed: h∘g = k ↦ h∘f = k still holds.
        let mut mors: Vec<(&str, &str)> = c
            .morphisms()
            .iter()
            .map(|m| (m.id.as_str(), m.id.as_str()))
            .collect();
        for pair in mors.iter_mut() {
            if pair.0 == "g" {
                pair.1 = "f";
            }
        }
        let objs: Vec<(&str, &str)> = c.objects().iter().map(|o| (o.as_str(), o.as_str())).collect();
        let collapse = FunctorMap::from_names(c.clone(), c.clone(), objs, mors).unwrap();
        let check = validate_functor(&collapse);
        assert!(check.report.ok(), "{}", check.report);
        assert!(!check.isomorphism);

        assert!(FunctorMap::new(c.clone(), c.clone(), vec![0, 1, 7], vec![0; 7]).is_err());
    }
}
