//! Subcategories, ideals and filters, and covers by subcategories.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{CategoryData, FinCategory, FunctorMap};

/// A subcategory of a fixed parent, as sets of parent indices.
#[derive(Debug, Clone)]
pub struct Subcategory {
    parent: Arc<FinCategory>,
    objects: BTreeSet<usize>,
    morphisms: BTreeSet<usize>,
    full: bool,
}

impl PartialEq for Subcategory {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.parent, &other.parent)
            && self.objects == other.objects
            && self.morphisms == other.morphisms
    }
}

impl Eq for Subcategory {}

fn same_parent(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Subcategory {
    /// Checks identities, endpoints and closure under composition.
    pub fn new(
        parent: Arc<FinCategory>,
        objects: BTreeSet<usize>,
        morphisms: BTreeSet<usize>,
    ) -> Result<Self> {
        if let Some(&x) = objects.iter().find(|&&x| x >= parent.object_count()) {
            return Err(Error::InvalidSubcategory(format!("object index {x} out of range")));
        }
        if let Some(&m) = morphisms.iter().find(|&&m| m >= parent.morphism_count()) {
            return Err(Error::InvalidSubcategory(format!("morphism index {m} out of range")));
        }
        for &x in &objects {
            if !morphisms.contains(&parent.identity(x)) {
                return Err(Error::InvalidSubcategory(format!(
                    "identity of `{}` missing",
                    parent.object_id(x)
                )));
            }
        }
        for &m in &morphisms {
            if !objects.contains(&parent.dom(m)) || !objects.contains(&parent.cod(m)) {
                return Err(Error::InvalidSubcategory(format!(
                    "endpoint of `{}` missing",
                    parent.morphism_id(m)
                )));
            }
        }
        for &g in &morphisms {
            for &f in &morphisms {
                if let Some(h) = parent.compose(g, f) {
                    if !morphisms.contains(&h) {
                        return Err(Error::InvalidSubcategory(format!(
                            "not closed: {} ∘ {} = {} missing",
                            parent.morphism_id(g),
                            parent.morphism_id(f),
                            parent.morphism_id(h)
                        )));
                    }
                }
            }
        }
        Ok(Self::assemble(parent, objects, morphisms))
    }

    fn assemble(
        parent: Arc<FinCategory>,
        objects: BTreeSet<usize>,
        morphisms: BTreeSet<usize>,
    ) -> Self {
        let full = objects.iter().all(|&x| {
            objects
                .iter()
                .all(|&y| parent.hom(x, y).iter().all(|m| morphisms.contains(m)))
        });
        Subcategory {
            parent,
            objects,
            morphisms,
            full,
        }
    }

    /// Subcategory on the given object and morphism ids; identities of the
    /// listed objects are added automatically.
    pub fn from_ids(parent: &Arc<FinCategory>, objects: &[&str], morphisms: &[&str]) -> Result<Self> {
        let objs = objects
            .iter()
            .map(|o| parent.object_index(o))
            .collect::<Result<BTreeSet<_>>>()?;
        let mut mors = morphisms
            .iter()
            .map(|m| parent.morphism_index(m))
            .collect::<Result<BTreeSet<_>>>()?;
        mors.extend(objs.iter().map(|&x| parent.identity(x)));
        Self::new(parent.clone(), objs, mors)
    }

    pub fn whole(parent: &Arc<FinCategory>) -> Self {
        Self::assemble(
            parent.clone(),
            (0..parent.object_count()).collect(),
            (0..parent.morphism_count()).collect(),
        )
    }

    pub fn empty(parent: &Arc<FinCategory>) -> Self {
        Self::assemble(parent.clone(), BTreeSet::new(), BTreeSet::new())
    }

    /// Full subcategory on object indices.
    pub fn full_on(parent: &Arc<FinCategory>, objects: BTreeSet<usize>) -> Self {
        let morphisms = objects
            .iter()
            .flat_map(|&x| objects.iter().flat_map(move |&y| parent.hom(x, y).iter().copied()))
            .collect();
        Self::assemble(parent.clone(), objects, morphisms)
    }

    pub fn parent(&self) -> &Arc<FinCategory> {
        &self.parent
    }

    pub fn objects(&self) -> &BTreeSet<usize> {
        &self.objects
    }

    pub fn morphisms(&self) -> &BTreeSet<usize> {
        &self.morphisms
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn contains_object(&self, x: usize) -> bool {
        self.objects.contains(&x)
    }

    pub fn contains_morphism(&self, m: usize) -> bool {
        self.morphisms.contains(&m)
    }

    pub fn object_ids(&self) -> Vec<&str> {
        self.objects.iter().map(|&x| self.parent.object_id(x)).collect()
    }

    pub fn morphism_ids(&self) -> Vec<&str> {
        self.morphisms.iter().map(|&m| self.parent.morphism_id(m)).collect()
    }

    /// Morphisms `x → y` of the subcategory, as parent indices.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        if !self.contains_object(x) || !self.contains_object(y) {
            return Vec::new();
        }
        self.parent
            .hom(x, y)
            .iter()
            .copied()
            .filter(|m| self.morphisms.contains(m))
            .collect()
    }

    /// The subcategory as a category in its own right, keeping parent ids
    /// and parent order.
    pub fn to_category(&self) -> FinCategory {
        let objs: Vec<usize> = self.objects.iter().copied().collect();
        let mors: Vec<usize> = self.morphisms.iter().copied().collect();
        let name = format!("{}|{{{}}}", self.parent.name(), self.object_ids().join(","));
        self.parent.restrict(name, &objs, &mors)
    }

    /// The same subcategory seen inside the opposite of the parent.
    pub fn opposite_in(&self, parent_op: &Arc<FinCategory>) -> Subcategory {
        Self::assemble(parent_op.clone(), self.objects.clone(), self.morphisms.clone())
    }

    fn is_subset_of(&self, other: &Subcategory) -> bool {
        self.objects.is_subset(&other.objects) && self.morphisms.is_subset(&other.morphisms)
    }
}

fn common_parent(parts: &[&Subcategory]) -> Result<Arc<FinCategory>> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidSubcategory("empty list of subcategories".into()))?;
    if parts.iter().any(|p| !same_parent(&p.parent, &first.parent)) {
        return Err(Error::ParentMismatch);
    }
    Ok(first.parent.clone())
}

/// Full subcategory on the named objects.
pub fn full_subcategory(cat: &Arc<FinCategory>, objects: &[&str]) -> Result<Subcategory> {
    let objs = objects
        .iter()
        .map(|o| cat.object_index(o))
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(Subcategory::full_on(cat, objs))
}

/// Objects and morphisms common to every part.
pub fn intersect(parts: &[&Subcategory]) -> Result<Subcategory> {
    let parent = common_parent(parts)?;
    let mut objects = parts[0].objects.clone();
    let mut morphisms = parts[0].morphisms.clone();
    for p in &parts[1..] {
        objects.retain(|x| p.objects.contains(x));
        morphisms.retain(|m| p.morphisms.contains(m));
    }
    Ok(Subcategory::assemble(parent, objects, morphisms))
}

/// Least subcategory containing every part.
pub fn union_closure(parts: &[&Subcategory]) -> Result<Subcategory> {
    let parent = common_parent(parts)?;
    let objects: BTreeSet<usize> = parts.iter().flat_map(|p| p.objects.iter().copied()).collect();
    let mut morphisms: BTreeSet<usize> =
        parts.iter().flat_map(|p| p.morphisms.iter().copied()).collect();
    morphisms.extend(objects.iter().map(|&x| parent.identity(x)));
    loop {
        let mut new = Vec::new();
        for &g in &morphisms {
            for &f in &morphisms {
                if let Some(h) = parent.compose(g, f) {
                    if !morphisms.contains(&h) {
                        new.push(h);
                    }
                }
            }
        }
        if new.is_empty() {
            break;
        }
        morphisms.extend(new);
    }
    Ok(Subcategory::assemble(parent, objects, morphisms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_ideal: bool,
    pub is_filter: bool,
}

/// Ideal: full and closed under incoming morphisms. Filter: full and closed
/// under outgoing morphisms.
pub fn classify_subcategory(sub: &Subcategory) -> Classification {
    if !sub.full {
        return Classification {
            is_ideal: false,
            is_filter: false,
        };
    }
    let parent = &sub.parent;
    let n = parent.object_count();
    let mut is_ideal = true;
    let mut is_filter = true;
    for &x in &sub.objects {
        for y in 0..n {
            if sub.contains_object(y) {
                continue;
            }
            if !parent.hom(y, x).is_empty() {
                is_ideal = false;
            }
            if !parent.hom(x, y).is_empty() {
                is_filter = false;
            }
        }
    }
    Classification {
        is_ideal,
        is_filter,
    }
}

/// Full subcategory on the objects not in `sub`.
pub fn complement(sub: &Subcategory) -> Result<Subcategory> {
    if !sub.full {
        return Err(Error::NotFull);
    }
    let rest = (0..sub.parent.object_count())
        .filter(|x| !sub.contains_object(*x))
        .collect();
    Ok(Subcategory::full_on(&sub.parent, rest))
}

/// The poset `0 < 1` as a category, with morphism ids `id_0`, `id_1`, `lt`.
pub fn two_point_poset() -> FinCategory {
    let data = CategoryData::new("P").objects(["0", "1"]).morphism("lt", "0", "1");
    FinCategory::new(&data).expect("two-point poset is a category")
}

/// The functor classifying an ideal: its objects go to 0, the rest to 1.
pub fn to_two_point_poset(sub: &Subcategory) -> Result<FunctorMap> {
    if !classify_subcategory(sub).is_ideal {
        return Err(Error::NotIdeal);
    }
    let parent = &sub.parent;
    let poset = Arc::new(two_point_poset());
    let level = |x: usize| if sub.contains_object(x) { 0 } else { 1 };
    let object_map = (0..parent.object_count()).map(level).collect();
    let lt = poset.morphism_index("lt")?;
    let morphism_map = parent
        .morphisms()
        .iter()
        .map(|m| match (level(m.dom), level(m.cod)) {
            (0, 0) => poset.identity(0),
            (1, 1) => poset.identity(1),
            _ => lt,
        })
        .collect();
    FunctorMap::new(parent.clone(), poset, object_map, morphism_map)
}

fn closure_under(cat: &Arc<FinCategory>, seed: BTreeSet<usize>, incoming: bool) -> Subcategory {
    let n = cat.object_count();
    let mut objs = seed;
    let mut stack: Vec<usize> = objs.iter().copied().collect();
    while let Some(x) = stack.pop() {
        for y in 0..n {
            let connected = if incoming {
                !cat.hom(y, x).is_empty()
            } else {
                !cat.hom(x, y).is_empty()
            };
            if connected && objs.insert(y) {
                stack.push(y);
            }
        }
    }
    Subcategory::full_on(cat, objs)
}

/// Smallest ideal containing the given objects.
pub fn ideal_closure(cat: &Arc<FinCategory>, objects: &BTreeSet<usize>) -> Subcategory {
    closure_under(cat, objects.clone(), true)
}

/// Smallest filter containing the given objects.
pub fn filter_closure(cat: &Arc<FinCategory>, objects: &BTreeSet<usize>) -> Subcategory {
    closure_under(cat, objects.clone(), false)
}

/// An indexed family of subcategories with a total order on the labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    parent: Arc<FinCategory>,
    labels: Vec<String>,
    parts: Vec<Subcategory>,
}

impl Cover {
    /// `order` lists every label exactly once; when absent the labels are
    /// sorted lexicographically.
    pub fn new(
        parent: Arc<FinCategory>,
        parts: Vec<(String, Subcategory)>,
        order: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (label, part) in &parts {
            if !seen.insert(label.clone()) {
                return Err(Error::InvalidCover(format!("label `{label}` used twice")));
            }
            if !same_parent(&part.parent, &parent) {
                return Err(Error::ParentMismatch);
            }
        }
        let order = match order {
            Some(order) => {
                let given: BTreeSet<String> = order.iter().cloned().collect();
                if given.len() != order.len() || given != seen {
                    return Err(Error::InvalidOrder(format!(
                        "order `{}` is not a permutation of the labels `{}`",
                        order.join(" "),
                        seen.iter().cloned().collect::<Vec<_>>().join(" ")
                    )));
                }
                order
            }
            None => seen.into_iter().collect(),
        };
        let mut parts = parts;
        let mut ordered = Vec::with_capacity(parts.len());
        for label in &order {
            let pos = parts.iter().position(|(l, _)| l == label).expect("label present");
            ordered.push(parts.swap_remove(pos).1);
        }
        Ok(Cover {
            parent,
            labels: order,
            parts: ordered,
        })
    }

    /// Cover by full subcategories, given as `(label, objects)`.
    pub fn full(parent: &Arc<FinCategory>, parts: &[(&str, &[&str])]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|(l, objs)| Ok((l.to_string(), full_subcategory(parent, objs)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parent.clone(), parts, None)
    }

    pub fn parent(&self) -> &Arc<FinCategory> {
        &self.parent
    }

    /// Labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Parts aligned with [`Cover::labels`].
    pub fn parts(&self) -> &[Subcategory] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn part(&self, position: usize) -> &Subcategory {
        &self.parts[position]
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The same parts under another total order of the labels.
    pub fn with_order(&self, order: &[String]) -> Result<Cover> {
        let parts = self
            .labels
            .iter()
            .cloned()
            .zip(self.parts.iter().cloned())
            .collect();
        Cover::new(self.parent.clone(), parts, Some(order.to_vec()))
    }

    /// The opposite family `{D_a^op}` covering the opposite parent.
    pub fn opposite(&self) -> Cover {
        let parent = Arc::new(self.parent.opposite());
        Cover {
            parts: self.parts.iter().map(|p| p.opposite_in(&parent)).collect(),
            labels: self.labels.clone(),
            parent,
        }
    }

    pub fn is_ideal_cover(&self) -> bool {
        self.parts.iter().all(|p| classify_subcategory(p).is_ideal)
    }

    pub fn is_filter_cover(&self) -> bool {
        self.parts.iter().all(|p| classify_subcategory(p).is_filter)
    }
}

/// Whether the union of the parts, closed under composition, is the parent.
pub fn is_cover(cover: &Cover) -> bool {
    if cover.is_empty() {
        return cover.parent.object_count() == 0;
    }
    let parts: Vec<&Subcategory> = cover.parts.iter().collect();
    let union = union_closure(&parts).expect("cover parts share the parent");
    union == Subcategory::whole(&cover.parent)
}

/// Number of parts containing each parent object.
pub fn membership_counts(cover: &Cover) -> Vec<usize> {
    (0..cover.parent.object_count())
        .map(|x| cover.parts.iter().filter(|p| p.contains_object(x)).count())
        .collect()
}

/// Every object lies in finitely many parts; always true for a finite
/// label set, checked through the membership counts.
pub fn is_locally_finite(cover: &Cover) -> bool {
    membership_counts(cover).iter().all(|&c| c <= cover.len())
}

pub(crate) fn is_subcategory_of(a: &Subcategory, b: &Subcategory) -> bool {
    a.is_subset_of(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_functor;
    use crate::fixtures;

    fn c() -> Arc<FinCategory> {
        Arc::new(fixtures::counterexample())
    }

    #[test]
    fn full_subcategories_of_counterexample() {
        let c = c();
        let d1 = full_subcategory(&c, &["x", "y"]).unwrap();
        assert_eq!(d1.morphism_ids(), vec!["id_x", "id_y", "f", "g"]);
        assert!(d1.is_full());
        let d2 = full_subcategory(&c, &["y", "z"]).unwrap();
        assert_eq!(d2.morphism_ids(), vec!["id_y", "id_z", "h"]);
        let e = full_subcategory(&c, &[]).unwrap();
        assert!(e.is_empty() && e.morphisms().is_empty());
        assert!(matches!(full_subcategory(&c, &["q"]), Err(Error::UnknownObject(_))));
    }

    #[test]
    fn intersections() {
        let c = c();
        let d1 = full_subcategory(&c, &["x", "y"]).unwrap();
        let d2 = full_subcategory(&c, &["y", "z"]).unwrap();
        let d12 = intersect(&[&d1, &d2]).unwrap();
        assert_eq!(d12, full_subcategory(&c, &["y"]).unwrap());
        assert_eq!(intersect(&[&d1, &d1]).unwrap(), d1);
        let z = full_subcategory(&c, &["z"]).unwrap();
        assert!(intersect(&[&d1, &z]).unwrap().is_empty());

        let other = Arc::new(fixtures::v_poset());
        let w = Subcategory::whole(&other);
        assert!(matches!(intersect(&[&d1, &w]), Err(Error::ParentMismatch)));
    }

    #[test]
    fn unions() {
        let c = c();
        let d1 = full_subcategory(&c, &["x", "y"]).unwrap();
        let d2 = full_subcategory(&c, &["y", "z"]).unwrap();
        assert_eq!(union_closure(&[&d1, &d2]).unwrap(), Subcategory::whole(&c));
        assert_eq!(union_closure(&[&d1]).unwrap(), d1);

        let v = Arc::new(fixtures::v_poset());
        let ca = full_subcategory(&v, &["c", "a"]).unwrap();
        let cb = full_subcategory(&v, &["c", "b"]).unwrap();
        assert_eq!(union_closure(&[&ca, &cb]).unwrap(), Subcategory::whole(&v));
    }

    #[test]
    fn cover_checks() {
        let c = c();
        let cex = Cover::full(&c, &[("1", &["x", "y"]), ("2", &["y", "z"])]).unwrap();
        assert!(is_cover(&cex));
        let only = Cover::full(&c, &[("1", &["x", "y"])]).unwrap();
        assert!(!is_cover(&only));
        let points = Cover::full(&c, &[("1", &["x"]), ("2", &["y"]), ("3", &["z"])]).unwrap();
        assert!(!is_cover(&points));
    }

    #[test]
    fn classification() {
        let c = c();
        let d1 = full_subcategory(&c, &["x", "y"]).unwrap();
        let d2 = full_subcategory(&c, &["y", "z"]).unwrap();
        assert_eq!(
            classify_subcategory(&d1),
            Classification { is_ideal: true, is_filter: false }
        );
        assert_eq!(
            classify_subcategory(&d2),
            Classification { is_ideal: false, is_filter: true }
        );
        assert_eq!(
            classify_subcategory(&Subcategory::whole(&c)),
            Classification { is_ideal: true, is_filter: true }
        );
        let cop = Arc::new(c.opposite());
        let flipped = classify_subcategory(&d1.opposite_in(&cop));
        assert!(flipped.is_filter && !flipped.is_ideal);
    }

    #[test]
    fn non_full_subcategory_is_neither() {
        let c = c();
        let s = Subcategory::from_ids(&c, &["x", "y"], &["f"]).unwrap();
        assert!(!s.is_full());
        let cl = classify_subcategory(&s);
        assert!(!cl.is_ideal && !cl.is_filter);
        assert!(matches!(complement(&s), Err(Error::NotFull)));
        assert!(Subcategory::from_ids(&c, &["x", "y", "z"], &["f", "h"]).is_err());
    }

    #[test]
    fn complements() {
        let c = c();
        let d1 = full_subcategory(&c, &["x", "y"]).unwrap();
        let rest = complement(&d1).unwrap();
        assert_eq!(rest, full_subcategory(&c, &["z"]).unwrap());
        assert!(classify_subcategory(&rest).is_filter);
        assert!(complement(&Subcategory::whole(&c)).unwrap().is_empty());
        assert_eq!(complement(&rest).unwrap(), d1);
    }

    #[test]
    fn two_point_classifier() {
        let c = c();
        let d1 = full_subcategory(&c, &["x", "y"]).unwrap();
        let chi = to_two_point_poset(&d1).unwrap();
        assert!(validate_functor(&chi).report.ok());
        assert_eq!(chi.object_map(), &[0, 0, 1]);
        let p = chi.target().clone();
        let lt = p.morphism_index("lt").unwrap();
        for (id, expected) in [("f", p.identity(0)), ("g", p.identity(0)), ("h", lt), ("k", lt)] {
            assert_eq!(chi.on_morphism(c.morphism_index(id).unwrap()), expected, "{id}");
        }
        let whole = to_two_point_poset(&Subcategory::whole(&c)).unwrap();
        assert!(whole.object_map().iter().all(|&x| x == 0));
        let empty = to_two_point_poset(&Subcategory::empty(&c)).unwrap();
        assert!(empty.object_map().iter().all(|&x| x == 1));
        let d2 = full_subcategory(&c, &["y", "z"]).unwrap();
        assert!(matches!(to_two_point_poset(&d2), Err(Error::NotIdeal)));
    }

    #[test]
    fn local_finiteness() {
        let c = c();
        let cex = Cover::full(&c, &[("1", &["x", "y"]), ("2", &["y", "z"])]).unwrap();
        assert!(is_locally_finite(&cex));
        assert_eq!(membership_counts(&cex), vec![1, 2, 1]);
    }

    #[test]
    fn ideal_closures() {
        let c = c();
        let y: BTreeSet<usize> = [1].into();
        assert_eq!(ideal_closure(&c, &y), full_subcategory(&c, &["x", "y"]).unwrap());
        let z: BTreeSet<usize> = [2].into();
        assert_eq!(ideal_closure(&c, &z), Subcategory::whole(&c));
        assert!(ideal_closure(&c, &BTreeSet::new()).is_empty());
        assert!(classify_subcategory(&ideal_closure(&c, &y)).is_ideal);
        assert!(classify_subcategory(&filter_closure(&c, &y)).is_filter);
    }

    #[test]
    fn orders() {
        let c = c();
        let parts = vec![
            ("2".to_string(), full_subcategory(&c, &["y", "z"]).unwrap()),
            ("1".to_string(), full_subcategory(&c, &["x", "y"]).unwrap()),
        ];
        let lex = Cover::new(c.clone(), parts.clone(), None).unwrap();
        assert_eq!(lex.labels(), &["1", "2"]);
        let rev = lex.with_order(&["2".into(), "1".into()]).unwrap();
        assert_eq!(rev.labels(), &["2", "1"]);
        assert_eq!(rev.part(0), lex.part(1));
        assert!(matches!(
            Cover::new(c.clone(), parts.clone(), Some(vec!["1".into()])),
            Err(Error::InvalidOrder(_))
        ));
        let mut dup = parts;
        dup[1].0 = "2".into();
        assert!(matches!(Cover::new(c, dup, None), Err(Error::InvalidCover(_))));
    }
}
