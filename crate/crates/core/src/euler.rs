//! Weightings, coweightings and Euler characteristics of finite categories.
//!
//! `ζ(a, b) = |hom(a, b)|`; a weighting solves `ζ w = u`, a coweighting
//! solves `v ζ = u*`. When both exist the sums agree and give `χ`.

use crate::cech::{tuples, Variant};
use crate::cover::{classify_subcategory, intersect, union_closure, Cover, Subcategory};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, ValidationReport};
use crate::linalg::{rank, solve, FreePolicy, QMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Weight,
    Coweight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerResult {
    pub chi: Option<Rational>,
    pub weighting: Option<Vec<Rational>>,
    pub coweighting: Option<Vec<Rational>>,
    pub reason: Option<String>,
}

/// Hom-set cardinalities in canonical object order.
pub fn zeta_matrix(cat: &FinCategory) -> QMatrix {
    let n = cat.object_count();
    QMatrix::from_fn(n, n, |a, b| Rational::from(cat.hom(a, b).len()))
}

pub fn solve_weighting(cat: &FinCategory, side: Side) -> Option<Vec<Rational>> {
    solve_weighting_with(cat, side, FreePolicy::Zero)
}

/// Exact solution with free variables set by `policy`; `None` when no
/// (co)weighting exists.
pub fn solve_weighting_with(cat: &FinCategory, side: Side, policy: FreePolicy) -> Option<Vec<Rational>> {
    let zeta = zeta_matrix(cat);
    let a = match side {
        Side::Weight => zeta,
        Side::Coweight => zeta.transpose(),
    };
    let u = vec![Rational::one(); cat.object_count()];
    solve(&a, &u, policy).expect("square system")
}

/// True when `ζ` is invertible, so the (co)weighting is unique.
pub fn has_unique_weighting(cat: &FinCategory) -> bool {
    rank(&zeta_matrix(cat)) == cat.object_count()
}

pub fn euler_characteristic(cat: &FinCategory) -> EulerResult {
    let weighting = solve_weighting(cat, Side::Weight);
    let coweighting = solve_weighting(cat, Side::Coweight);
    let (chi, reason) = match (&weighting, &coweighting) {
        (Some(w), Some(v)) => {
            let sw: Rational = w.iter().sum();
            let sv: Rational = v.iter().sum();
            if sw == sv {
                (Some(sw), None)
            } else {
                (None, Some(format!("weighting sum {sw} differs from coweighting sum {sv}")))
            }
        }
        (None, Some(_)) => (None, Some("no weighting".to_string())),
        (Some(_), None) => (None, Some("no coweighting".to_string())),
        (None, None) => (None, Some("neither a weighting nor a coweighting".to_string())),
    };
    EulerResult {
        chi,
        weighting,
        coweighting,
        reason,
    }
}

/// `χ` of every strictly increasing intersection, in canonical tuple order.
pub fn inclusion_exclusion_terms(cover: &Cover) -> Vec<(Vec<usize>, Option<Rational>)> {
    (0..cover.len())
        .flat_map(|n| tuples(cover.len(), n, Variant::Reduced))
        .map(|t| {
            let parts: Vec<&Subcategory> = t.iter().map(|&p| cover.part(p)).collect();
            let piece = intersect(&parts).expect("parts share the parent");
            let chi = euler_characteristic(&piece.to_category()).chi;
            (t, chi)
        })
        .collect()
}

/// `Σ_i Σ_{a0<…<ai} (−1)^i χ(D_{a0…ai})`, or `None` if some piece has no
/// Euler characteristic.
pub fn inclusion_exclusion_sum(cover: &Cover) -> Option<Rational> {
    inclusion_exclusion_terms(cover)
        .into_iter()
        .map(|(t, chi)| chi.map(|c| Rational::sign(t.len() - 1) * c))
        .sum()
}

#[derive(Debug, Clone)]
pub struct TwoSetReport {
    /// `χ(A ∪ B)`, `χ(A)`, `χ(B)`, `χ(A ∩ B)`.
    pub values: [Option<Rational>; 4],
    pub report: ValidationReport,
}

/// Checks `χ(A ∪ B) = χ(A) + χ(B) − χ(A ∩ B)`; hypothesis failures are
/// reported rather than raised.
pub fn two_set_formula(a: &Subcategory, b: &Subcategory) -> Result<TwoSetReport> {
    let mut report = ValidationReport::default();
    let (ca, cb) = (classify_subcategory(a), classify_subcategory(b));
    if !(ca.is_ideal && cb.is_ideal) && !(ca.is_filter && cb.is_filter) {
        report.push(
            "hypothesis",
            vec![],
            "A and B are not both ideals or both filters; inclusion-exclusion may fail",
        );
    }
    let union = union_closure(&[a, b])?;
    let meet = intersect(&[a, b])?;
    let values = [&union, a, b, &meet].map(|s| euler_characteristic(&s.to_category()).chi);
    match &values {
        [Some(u), Some(x), Some(y), Some(m)] => {
            let rhs = &(x + y) - m;
            if *u != rhs {
                report.push(
                    "two-set",
                    vec![],
                    format!("χ(A∪B) = {u} but χ(A) + χ(B) − χ(A∩B) = {x} + {y} − {m} = {rhs}"),
                );
            }
        }
        _ => report.push("hypothesis", vec![], "some Euler characteristic does not exist"),
    }
    Ok(TwoSetReport { values, report })
}

/// `Σ_{x ≤ y} μ(x, y)` by the recursive Möbius function.
pub fn mobius_oracle(cat: &FinCategory) -> Result<Rational> {
    let n = cat.object_count();
    let le = |x: usize, y: usize| !cat.hom(x, y).is_empty();
    for x in 0..n {
        for y in 0..n {
            let h = cat.hom(x, y).len();
            if h > 1 || (x != y && h == 1 && le(y, x)) {
                return Err(Error::NotAPoset(format!(
                    "`{}` and `{}` violate the poset conditions",
                    cat.object_id(x),
                    cat.object_id(y)
                )));
            }
        }
    }
    // A linear extension: strictly smaller elements have strictly smaller
    // down-sets.
    let down: Vec<usize> = (0..n).map(|y| (0..n).filter(|&x| le(x, y)).count()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&y| down[y]);
    let mut total = 0i64;
    for x in 0..n {
        let mut mu = vec![0i64; n];
        for &y in &order {
            if !le(x, y) {
                continue;
            }
            mu[y] = if y == x {
                1
            } else {
                -(0..n).filter(|&z| z != y && le(x, z) && le(z, y)).map(|z| mu[z]).sum::<i64>()
            };
            total += mu[y];
        }
    }
    Ok(Rational::from(total))
}
