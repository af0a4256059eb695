//! The Grothendieck construction of the reduced Čech nerve.
//!
//! Objects are pairs `x_{a0…an}` of a strictly increasing label tuple and an
//! object of `D_{a0…an}`. A morphism `x_{a0…an} → y_{b0…bm}` is a pair
//! `(φ, f)` where `φ : [m] → [n]` is an injective order preserving map with
//! `b_j = a_{φ(j)}` and `f : x → y` lies in `D_{b0…bm}`. Structure maps are
//! inclusions, so morphisms run from longer tuples to shorter ones and the
//! composite of `(φ1, f1)` followed by `(φ2, f2)` is `(φ1 ∘ φ2, f2 ∘ f1)`.
//!
//! Since strictly increasing tuples have distinct labels, `φ` is determined
//! by the two tuples; a morphism is therefore identified by its source,
//! target and parent morphism.
//!
//! The ordered nerve has infinitely many objects, so its Grothendieck
//! construction is only queried hom-set by hom-set via [`ordered_gr_hom`].

use std::collections::HashMap;
use std::sync::Arc;

use crate::cech::{tuples, DeltaMap, Variant};
use crate::cover::{classify_subcategory, intersect, is_cover, Cover, Subcategory};
use crate::error::{Error, Result};
use crate::fincat::{
    validate_functor, CategoryData, FinCategory, FunctorMap, ValidationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrObject {
    /// Strictly increasing label positions.
    pub tuple: Vec<usize>,
    /// Parent object index.
    pub obj: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrMorphism {
    pub phi: DeltaMap,
    /// Parent morphism index.
    pub f: usize,
    pub source: usize,
    pub target: usize,
}

/// The Grothendieck construction of the reduced Čech nerve, materialised.
#[derive(Debug, Clone)]
pub struct GrReduced {
    cover: Cover,
    category: Arc<FinCategory>,
    objects: Vec<GrObject>,
    morphisms: Vec<GrMorphism>,
    object_lookup: HashMap<GrObject, usize>,
    morphism_lookup: HashMap<(usize, usize, usize), usize>,
}

fn render_tuple(cover: &Cover, tuple: &[usize]) -> String {
    tuple
        .iter()
        .map(|&p| cover.labels()[p].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

/// Positions of `b` inside `a` when `b` is a subsequence of the strictly
/// increasing `a`.
fn embedding(a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    b.iter().map(|x| a.iter().position(|y| y == x)).collect()
}

fn piece(cover: &Cover, tuple: &[usize]) -> Subcategory {
    let parts: Vec<&Subcategory> = tuple.iter().map(|&p| cover.part(p)).collect();
    intersect(&parts).expect("parts share the parent")
}

/// Builds the Grothendieck construction of the reduced nerve of a cover.
pub fn gr_reduced(cover: &Cover) -> Result<GrReduced> {
    if !is_cover(cover) {
        return Err(Error::NotACover(
            "the parts do not generate the parent category".into(),
        ));
    }
    let parent = cover.parent().clone();
    let k = cover.len();
    let all_tuples: Vec<Vec<usize>> = (0..k).flat_map(|n| tuples(k, n, Variant::Reduced)).collect();
    let pieces: Vec<Subcategory> = all_tuples.iter().map(|t| piece(cover, t)).collect();

    let mut objects = Vec::new();
    let mut object_piece = Vec::new();
    for (ti, t) in all_tuples.iter().enumerate() {
        for &x in pieces[ti].objects() {
            objects.push(GrObject {
                tuple: t.clone(),
                obj: x,
            });
            object_piece.push(ti);
        }
    }
    let object_lookup: HashMap<GrObject, usize> =
        objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();

    let mut morphisms = Vec::new();
    for (s, src) in objects.iter().enumerate() {
        for (t, tgt) in objects.iter().enumerate() {
            let Some(values) = embedding(&src.tuple, &tgt.tuple) else {
                continue;
            };
            let phi = DeltaMap::new(values, src.tuple.len() - 1)?;
            for f in pieces[object_piece[t]].hom(src.obj, tgt.obj) {
                morphisms.push(GrMorphism {
                    phi: phi.clone(),
                    f,
                    source: s,
                    target: t,
                });
            }
        }
    }
    let morphism_lookup: HashMap<(usize, usize, usize), usize> = morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| ((m.source, m.target, m.f), i))
        .collect();

    let object_name = |i: usize| {
        let o = &objects[i];
        format!("{}@{}", parent.object_id(o.obj), render_tuple(cover, &o.tuple))
    };
    let is_identity = |m: &GrMorphism| m.source == m.target && parent.is_identity(m.f);
    let morphism_name = |m: &GrMorphism| {
        if is_identity(m) {
            format!("id_{}", object_name(m.source))
        } else {
            format!(
                "{}@{}:{}",
                parent.morphism_id(m.f),
                render_tuple(cover, &objects[m.source].tuple),
                render_tuple(cover, &objects[m.target].tuple)
            )
        }
    };

    let mut data = CategoryData::new(format!("gr({})", parent.name()));
    data.objects = (0..objects.len()).map(object_name).collect();
    for (i, m) in morphisms.iter().enumerate() {
        let name = morphism_name(m);
        if is_identity(m) {
            data.identities.push((object_name(m.source), name.clone()));
        }
        data.morphisms.push(crate::fincat::MorphismDecl {
            id: name,
            dom: object_name(m.source),
            cod: object_name(m.target),
        });
        debug_assert_eq!(data.morphisms.len(), i + 1);
    }
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); objects.len()];
    for (i, m) in morphisms.iter().enumerate() {
        outgoing[m.source].push(i);
    }
    for (fi, first) in morphisms.iter().enumerate() {
        if is_identity(first) {
            continue;
        }
        for &si in &outgoing[first.target] {
            let second = &morphisms[si];
            if is_identity(second) {
                continue;
            }
            let f = parent
                .compose(second.f, first.f)
                .expect("components are composable");
            let ci = *morphism_lookup
                .get(&(first.source, second.target, f))
                .ok_or_else(|| Error::InvalidFunctor("composite missing from gr".into()))?;
            debug_assert_eq!(morphisms[ci].phi, first.phi.after(&second.phi)?);
            data.compositions.push((
                morphism_name(second),
                morphism_name(&morphisms[fi]),
                morphism_name(&morphisms[ci]),
            ));
        }
    }
    let category = Arc::new(FinCategory::new(&data)?);

    Ok(GrReduced {
        cover: cover.clone(),
        category,
        objects,
        morphisms,
        object_lookup,
        morphism_lookup,
    })
}

impl GrReduced {
    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    pub fn objects(&self) -> &[GrObject] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[GrMorphism] {
        &self.morphisms
    }

    pub fn object_index(&self, object: &GrObject) -> Option<usize> {
        self.object_lookup.get(object).copied()
    }

    /// Index of `x_{labels}` given by object id and label list.
    pub fn find_object(&self, obj: &str, labels: &[&str]) -> Result<usize> {
        let obj = self.cover.parent().object_index(obj)?;
        let tuple = labels
            .iter()
            .map(|l| self.cover.position(l))
            .collect::<Result<Vec<_>>>()?;
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        self.object_index(&GrObject { tuple: sorted, obj }).ok_or_else(|| {
            Error::InvalidDescriptor(format!("no object {}@{}", self.cover.parent().object_id(obj), labels.join(",")))
        })
    }

    /// The morphism with the given endpoints and parent component.
    pub fn morphism_index(&self, source: usize, target: usize, f: usize) -> Option<usize> {
        self.morphism_lookup.get(&(source, target, f)).copied()
    }

    pub fn object_name(&self, i: usize) -> &str {
        self.category.object_id(i)
    }
}

/// The index-erasing functor `x_{a0…an} ↦ x`, `(φ, f) ↦ f`.
pub fn rho_tilde(gr: &GrReduced) -> FunctorMap {
    FunctorMap::new(
        gr.category.clone(),
        gr.cover.parent().clone(),
        gr.objects.iter().map(|o| o.obj).collect(),
        gr.morphisms.iter().map(|m| m.f).collect(),
    )
    .expect("components are parent indices")
}

/// All labels whose part contains `x`, in index order.
fn containing(cover: &Cover, x: usize) -> Vec<usize> {
    (0..cover.len()).filter(|&p| cover.part(p).contains_object(x)).collect()
}

/// `π(x) = x_{a0…an}` over every part containing `x`.
fn pi_objects(gr: &GrReduced) -> Vec<usize> {
    let parent = gr.cover.parent();
    (0..parent.object_count())
        .map(|x| {
            gr.object_index(&GrObject {
                tuple: containing(&gr.cover, x),
                obj: x,
            })
            .expect("every object lies in some part of a cover")
        })
        .collect()
}

fn require_ideal_cover(cover: &Cover) -> Result<()> {
    let bad: Vec<&str> = cover
        .labels()
        .iter()
        .zip(cover.parts())
        .filter(|(_, p)| !classify_subcategory(p).is_ideal)
        .map(|(l, _)| l.as_str())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::NotIdealCover(format!("not ideals: {}", bad.join(", "))))
    }
}

/// The left adjoint `π` of `ρ̃` for an ideal cover.
pub fn pi_left_adjoint(gr: &GrReduced) -> Result<FunctorMap> {
    require_ideal_cover(&gr.cover)?;
    let parent = gr.cover.parent();
    let object_map = pi_objects(gr);
    let morphism_map = parent
        .morphisms()
        .iter()
        .enumerate()
        .map(|(f, m)| {
            gr.morphism_index(object_map[m.dom], object_map[m.cod], f)
                .ok_or_else(|| Error::NotIdealCover(format!("no image for `{}`", m.id)))
        })
        .collect::<Result<Vec<_>>>()?;
    FunctorMap::new(parent.clone(), gr.category.clone(), object_map, morphism_map)
}

/// Hom-set bijection `C(x, ρ̃ Y) ≅ gr(π x, Y)` for an ideal cover.
pub fn adjunction_check_pi(gr: &GrReduced) -> Result<ValidationReport> {
    require_ideal_cover(&gr.cover)?;
    Ok(adjunction_diagnostic(gr))
}

/// The same hom-set comparison for an arbitrary cover, with `π` forced on
/// objects. Failures show where the ideal hypothesis is needed.
pub fn adjunction_diagnostic(gr: &GrReduced) -> ValidationReport {
    let parent = gr.cover.parent();
    let pi = pi_objects(gr);
    let mut report = ValidationReport::default();
    for x in 0..parent.object_count() {
        for (yi, y) in gr.objects.iter().enumerate() {
            let lhs = parent.hom(x, y.obj);
            let rhs = gr.category.hom(pi[x], yi);
            let mapped: Vec<Option<usize>> =
                lhs.iter().map(|&f| gr.morphism_index(pi[x], yi, f)).collect();
            let bijective = lhs.len() == rhs.len() && mapped.iter().all(Option::is_some);
            if !bijective {
                report.push(
                    "adjunction-pi",
                    vec![parent.object_id(x).to_string(), gr.object_name(yi).to_string()],
                    format!(
                        "|C({}, {})| = {} but |gr({}, {})| = {}",
                        parent.object_id(x),
                        parent.object_id(y.obj),
                        lhs.len(),
                        gr.object_name(pi[x]),
                        gr.object_name(yi),
                        rhs.len()
                    ),
                );
            }
        }
    }
    report
}

/// An object of the Grothendieck construction of the ordered nerve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedGrObjectDescriptor {
    /// Weakly increasing label positions.
    pub tuple: Vec<usize>,
    pub obj: usize,
}

impl OrderedGrObjectDescriptor {
    pub fn new(cover: &Cover, tuple: Vec<usize>, obj: usize) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::InvalidDescriptor("empty tuple".into()));
        }
        if tuple.iter().any(|&p| p >= cover.len()) {
            return Err(Error::InvalidDescriptor(format!("{tuple:?} uses unknown labels")));
        }
        if tuple.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDescriptor(format!("{tuple:?} is not weakly increasing")));
        }
        if !piece(cover, &tuple).contains_object(obj) {
            return Err(Error::InvalidDescriptor(format!(
                "object `{}` is not in the intersection",
                cover.parent().object_id(obj)
            )));
        }
        Ok(OrderedGrObjectDescriptor { tuple, obj })
    }

    pub fn from_labels(cover: &Cover, obj: &str, labels: &[&str]) -> Result<Self> {
        let tuple = labels
            .iter()
            .map(|l| cover.position(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(cover, tuple, cover.parent().object_index(obj)?)
    }
}

/// Order preserving maps `φ : [m] → [n]` with `b_j = a_{φ(j)}`.
fn matching_maps(a: &[usize], b: &[usize]) -> Vec<DeltaMap> {
    let n = a.len() - 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(b.len());
    fn rec(a: &[usize], b: &[usize], n: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMap>) {
        let j = cur.len();
        if j == b.len() {
            out.push(DeltaMap::new(cur.clone(), n).expect("monotone by construction"));
            return;
        }
        let start = cur.last().copied().unwrap_or(0);
        for i in start..=n {
            if a[i] == b[j] {
                cur.push(i);
                rec(a, b, n, cur, out);
                cur.pop();
            }
        }
    }
    rec(a, b, n, &mut cur, &mut out);
    out
}

/// Every morphism `X → Y` of the Grothendieck construction of the ordered
/// nerve, as `(φ, f)` pairs.
pub fn ordered_gr_hom(
    cover: &Cover,
    source: &OrderedGrObjectDescriptor,
    target: &OrderedGrObjectDescriptor,
) -> Result<Vec<(DeltaMap, usize)>> {
    for d in [source, target] {
        OrderedGrObjectDescriptor::new(cover, d.tuple.clone(), d.obj)?;
    }
    let fibre = piece(cover, &target.tuple);
    let fs = fibre.hom(source.obj, target.obj);
    Ok(matching_maps(&source.tuple, &target.tuple)
        .into_iter()
        .flat_map(|phi| fs.iter().map(move |&f| (phi.clone(), f)))
        .collect())
}

/// Drops repeated labels. Returns the reduced descriptor and the surjection
/// `ψ` with `a_j = α_{ψ(j)}`.
pub fn reduce_object(x: &OrderedGrObjectDescriptor) -> (OrderedGrObjectDescriptor, DeltaMap) {
    let mut reduced: Vec<usize> = Vec::with_capacity(x.tuple.len());
    let mut psi = Vec::with_capacity(x.tuple.len());
    for &a in &x.tuple {
        if reduced.last() != Some(&a) {
            reduced.push(a);
        }
        psi.push(reduced.len() - 1);
    }
    let cod = reduced.len() - 1;
    (
        OrderedGrObjectDescriptor {
            tuple: reduced,
            obj: x.obj,
        },
        DeltaMap::new(psi, cod).expect("monotone surjection"),
    )
}

/// Checks `gr̃(Z, R Y) ≅ gr°(L Z, Y)` for every reduced object `Z` and every
/// ordered descriptor `Y` of length at most `max_len`, through the map
/// `(φ', f) ↦ (φ' ∘ ψ, f)`.
pub fn adjunction_check_r(gr: &GrReduced, max_len: usize) -> ValidationReport {
    let cover = &gr.cover;
    let k = cover.len();
    let mut report = ValidationReport::default();
    let descriptors: Vec<OrderedGrObjectDescriptor> = (0..max_len)
        .flat_map(|n| tuples(k, n, Variant::Ordered))
        .flat_map(|t| {
            let objs: Vec<usize> = piece(cover, &t).objects().iter().copied().collect();
            objs.into_iter().map(move |obj| OrderedGrObjectDescriptor {
                tuple: t.clone(),
                obj,
            })
        })
        .collect();
    for (zi, z) in gr.objects.iter().enumerate() {
        let lz = OrderedGrObjectDescriptor {
            tuple: z.tuple.clone(),
            obj: z.obj,
        };
        for y in &descriptors {
            let (ry, psi) = reduce_object(y);
            let ryi = gr
                .object_index(&GrObject {
                    tuple: ry.tuple.clone(),
                    obj: ry.obj,
                })
                .expect("reduced descriptor is an object of gr");
            let reduced_side = gr.category.hom(zi, ryi);
            let ordered_side = ordered_gr_hom(cover, &lz, y).expect("valid descriptors");
            let images: Vec<(DeltaMap, usize)> = reduced_side
                .iter()
                .map(|&m| {
                    let mor = &gr.morphisms[m];
                    (mor.phi.after(&psi).expect("composable"), mor.f)
                })
                .collect();
            let mut distinct = images.clone();
            distinct.sort_by(|a, b| (a.0.values(), a.1).cmp(&(b.0.values(), b.1)));
            distinct.dedup();
            let bijective = reduced_side.len() == ordered_side.len()
                && distinct.len() == images.len()
                && images.iter().all(|p| ordered_side.contains(p));
            if !bijective {
                report.push(
                    "adjunction-r",
                    vec![gr.object_name(zi).to_string(), render_tuple(cover, &y.tuple)],
                    format!(
                        "|gr~({}, R Y)| = {} but |gr°(L Z, Y)| = {} for Y = {}@{}",
                        gr.object_name(zi),
                        reduced_side.len(),
                        ordered_side.len(),
                        cover.parent().object_id(y.obj),
                        render_tuple(cover, &y.tuple)
                    ),
                );
            }
        }
    }
    report
}

/// The isomorphism between the constructions for two orders on the labels.
#[derive(Debug, Clone)]
pub struct ReorderIso {
    pub target: GrReduced,
    pub forward: FunctorMap,
    pub backward: FunctorMap,
}

impl ReorderIso {
    /// Functoriality of both maps and both round trips being identities.
    pub fn verify(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (name, f) in [("forward", &self.forward), ("backward", &self.backward)] {
            let check = validate_functor(f);
            report.extend(check.report);
            if !check.isomorphism {
                report.push("reorder", vec![name.into()], format!("{name} map is not bijective"));
            }
        }
        match self.forward.then(&self.backward) {
            Ok(gf) if gf.is_identity() => {}
            _ => report.push("reorder", vec![], "G ∘ F is not the identity"),
        }
        match self.backward.then(&self.forward) {
            Ok(fg) if fg.is_identity() => {}
            _ => report.push("reorder", vec![], "F ∘ G is not the identity"),
        }
        report
    }
}

/// Relabels objects `x_{a0…an}` by sorting each tuple under `order`.
fn relabel(from: &GrReduced, to: &GrReduced) -> Result<FunctorMap> {
    let (c1, c2) = (&from.cover, &to.cover);
    let translate: Vec<usize> = c1
        .labels()
        .iter()
        .map(|l| c2.position(l))
        .collect::<Result<_>>()?;
    let object_map: Vec<usize> = from
        .objects
        .iter()
        .map(|o| {
            let mut t: Vec<usize> = o.tuple.iter().map(|&p| translate[p]).collect();
            t.sort_unstable();
            to.object_index(&GrObject { tuple: t, obj: o.obj })
                .ok_or_else(|| Error::InvalidOrder("object has no counterpart".into()))
        })
        .collect::<Result<_>>()?;
    let morphism_map: Vec<usize> = from
        .morphisms
        .iter()
        .map(|m| {
            let (s, t) = (object_map[m.source], object_map[m.target]);
            let image = to
                .morphism_index(s, t, m.f)
                .ok_or_else(|| Error::InvalidOrder("morphism has no counterpart".into()))?;
            // σ⁻¹ φ τ: the slot of each target label inside the source tuple.
            let src = &to.objects[s].tuple;
            let tgt = &to.objects[t].tuple;
            let expected = DeltaMap::new(embedding(src, tgt).expect("labels kept"), src.len() - 1)?;
            debug_assert_eq!(to.morphisms[image].phi, expected);
            Ok(image)
        })
        .collect::<Result<_>>()?;
    FunctorMap::new(from.category.clone(), to.category.clone(), object_map, morphism_map)
}

/// The constructions for the cover's order and for `order` are isomorphic.
pub fn reorder_iso(gr: &GrReduced, order: &[String]) -> Result<ReorderIso> {
    let target = gr_reduced(&gr.cover.with_order(order)?)?;
    let forward = relabel(gr, &target)?;
    let backward = relabel(&target, gr)?;
    Ok(ReorderIso {
        target,
        forward,
        backward,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn counterexample_construction() {
        let gr = gr_reduced(&fixtures::counterexample_cover()).unwrap();
        let cat = gr.category();
        assert_eq!(cat.objects(), &["x@1", "y@1", "y@2", "z@2", "y@1,2"]);
        let non_id: Vec<(&str, &str, &str)> = cat
            .morphisms()
            .iter()
            .enumerate()
            .filter(|(i, _)| !cat.is_identity(*i))
            .map(|(_, m)| (m.id.as_str(), cat.object_id(m.dom), cat.object_id(m.cod)))
            .collect();
        assert_eq!(
            non_id,
            vec![
                ("f@1:1", "x@1", "y@1"),
                ("g@1:1", "x@1", "y@1"),
                ("h@2:2", "y@2", "z@2"),
                ("id_y@1,2:1", "y@1,2", "y@1"),
                ("id_y@1,2:2", "y@1,2", "y@2"),
                ("h@1,2:2", "y@1,2", "z@2"),
            ]
        );
        assert!(cat.validate().ok());
        assert!(cat.is_acyclic());
    }

    #[test]
    fn enumeration_oracle_agrees() {
        // Brute force over all (φ, f) with φ any injective monotone map.
        let cover = fixtures::counterexample_cover();
        let gr = gr_reduced(&cover).unwrap();
        let mut count = 0;
        for src in gr.objects() {
            for tgt in gr.objects() {
                let n = src.tuple.len() - 1;
                for phi in matching_maps(&src.tuple, &tgt.tuple) {
                    assert!(phi.is_injective());
                    assert_eq!(phi.cod(), n);
                    count += piece(&cover, &tgt.tuple).hom(src.obj, tgt.obj).len();
                }
            }
        }
        assert_eq!(count, gr.category().morphism_count());
        assert_eq!(count, 11);
    }

    #[test]
    fn not_a_cover_is_rejected() {
        let c = Arc::new(fixtures::counterexample());
        let only = Cover::full(&c, &[("1", &["x", "y"])]).unwrap();
        assert!(matches!(gr_reduced(&only), Err(Error::NotACover(_))));
    }

    #[test]
    fn single_part_cover_reproduces_parent() {
        let c = Arc::new(fixtures::counterexample());
        let cover = Cover::new(c.clone(), vec![("A".into(), Subcategory::whole(&c))], None).unwrap();
        let gr = gr_reduced(&cover).unwrap();
        let rho = rho_tilde(&gr);
        let check = validate_functor(&rho);
        assert!(check.report.ok() && check.isomorphism);
        let pi = pi_left_adjoint(&gr).unwrap();
        assert!(pi.then(&rho).unwrap().is_identity());
        assert!(rho.then(&pi).unwrap().is_identity());
    }

    #[test]
    fn rho_tilde_on_counterexample() {
        let cover = fixtures::counterexample_cover();
        let gr = gr_reduced(&cover).unwrap();
        let rho = rho_tilde(&gr);
        assert!(validate_functor(&rho).report.ok());
        let c = cover.parent();
        assert_eq!(rho.on_object(gr.find_object("x", &["1"]).unwrap()), c.object_index("x").unwrap());
        assert_eq!(rho.on_object(gr.find_object("y", &["1", "2"]).unwrap()), c.object_index("y").unwrap());
        let m = gr.category().morphism_index("h@1,2:2").unwrap();
        assert_eq!(rho.on_morphism(m), c.morphism_index("h").unwrap());
    }

    #[test]
    fn pi_on_v() {
        let cover = fixtures::v_cover();
        let gr = gr_reduced(&cover).unwrap();
        let pi = pi_left_adjoint(&gr).unwrap();
        let v = cover.parent();
        let name = |x: &str| gr.object_name(pi.on_object(v.object_index(x).unwrap())).to_string();
        assert_eq!(name("c"), "c@1,2");
        assert_eq!(name("a"), "a@1");
        assert_eq!(name("b"), "b@2");
        let ca = v.morphism_index("ca").unwrap();
        let image = &gr.morphisms()[pi.on_morphism(ca)];
        assert_eq!(image.phi.values(), &[0]);
        assert_eq!(image.f, ca);
        assert!(validate_functor(&pi).report.ok());
        assert!(pi.then(&rho_tilde(&gr)).unwrap().is_identity());
        assert!(adjunction_check_pi(&gr).unwrap().ok());
    }

    #[test]
    fn pi_requires_ideals() {
        let gr = gr_reduced(&fixtures::counterexample_cover()).unwrap();
        assert!(matches!(pi_left_adjoint(&gr), Err(Error::NotIdealCover(_))));
        assert!(adjunction_check_pi(&gr).is_err());
        let diag = adjunction_diagnostic(&gr);
        assert!(diag
            .violations
            .iter()
            .any(|v| v.ids == vec!["x".to_string(), "z@2".to_string()]));
    }

    #[test]
    fn ordered_hom_sets() {
        let cover = fixtures::counterexample_cover();
        let y12 = OrderedGrObjectDescriptor::from_labels(&cover, "y", &["1", "2"]).unwrap();
        let y1 = OrderedGrObjectDescriptor::from_labels(&cover, "y", &["1"]).unwrap();
        let homs = ordered_gr_hom(&cover, &y12, &y1).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].0.values(), &[0]);

        let x11 = OrderedGrObjectDescriptor::from_labels(&cover, "x", &["1", "1"]).unwrap();
        let x1 = OrderedGrObjectDescriptor::from_labels(&cover, "x", &["1"]).unwrap();
        let homs = ordered_gr_hom(&cover, &x11, &x1).unwrap();
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[0].1, homs[1].1);
        assert_ne!(homs[0].0, homs[1].0);

        assert!(OrderedGrObjectDescriptor::from_labels(&cover, "x", &["2", "1"]).is_err());
        assert!(OrderedGrObjectDescriptor::from_labels(&cover, "x", &["2"]).is_err());
    }

    #[test]
    fn reduction() {
        let cover = fixtures::counterexample_cover();
        let x = OrderedGrObjectDescriptor::from_labels(&cover, "y", &["1", "1", "2"]).unwrap();
        let (r, psi) = reduce_object(&x);
        assert_eq!(r.tuple, vec![0, 1]);
        assert_eq!(psi.values(), &[0, 0, 1]);
        let (r2, psi2) = reduce_object(&r);
        assert_eq!(r2, r);
        assert_eq!(psi2, DeltaMap::identity(1));
        let gr = gr_reduced(&cover).unwrap();
        assert!(adjunction_check_r(&gr, 3).ok());
    }

    #[test]
    fn reorder() {
        let cover = fixtures::counterexample_cover();
        let gr = gr_reduced(&cover).unwrap();
        let iso = reorder_iso(&gr, &["2".into(), "1".into()]).unwrap();
        assert!(iso.verify().ok());
        let y12 = gr.find_object("y", &["1", "2"]).unwrap();
        assert_eq!(iso.target.object_name(iso.forward.on_object(y12)), "y@2,1");
        let same = reorder_iso(&gr, &["1".into(), "2".into()]).unwrap();
        assert!(same.forward.is_identity() && same.backward.is_identity());
        assert!(reorder_iso(&gr, &["1".into()]).is_err());
    }
}
