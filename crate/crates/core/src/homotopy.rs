//! Chain complexes of nerves and rational Betti numbers.
//!
//! A non-degenerate `k`-simplex of the nerve is a chain of `k` composable
//! non-identity morphisms. Acyclic categories have finite-dimensional
//! nerves; other categories are only handled up to an explicit dimension,
//! and the resulting reports are flagged as truncated.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::euler::euler_characteristic;
use crate::fincat::{FinCategory, ValidationReport};
use crate::grothendieck::gr_reduced;
use crate::linalg::{sparse_rank, QMatrix};
use crate::par::{self, Parallelism};
use crate::rational::Rational;

/// `start → … ` along `morphisms`; a bare object when `morphisms` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplexChain {
    pub start: usize,
    pub morphisms: Vec<usize>,
}

impl SimplexChain {
    pub fn dim(&self) -> usize {
        self.morphisms.len()
    }

    pub fn render(&self, cat: &FinCategory) -> String {
        if self.morphisms.is_empty() {
            return cat.object_id(self.start).to_string();
        }
        let ids: Vec<&str> = self.morphisms.iter().map(|&m| cat.morphism_id(m)).collect();
        format!("({})", ids.join(", "))
    }
}

type SparseColumn = Vec<(usize, Rational)>;

/// Nerve chains in dimensions `0..=top + 1`; the extra dimension carries the
/// boundary needed for `b_top`.
#[derive(Debug, Clone)]
pub struct ChainComplexQ {
    max_dim: usize,
    basis: Vec<Vec<SimplexChain>>,
    /// `boundaries[k]` lists `∂_k` column by column, one sparse column per
    /// `k`-chain; `boundaries[0]` is empty.
    boundaries: Vec<Vec<SparseColumn>>,
    truncated: bool,
}

impl ChainComplexQ {
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Bases in dimensions `0..=max_dim`.
    pub fn basis(&self) -> &[Vec<SimplexChain>] {
        &self.basis[..=self.max_dim]
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// `∂_k` as a dense `|C_{k-1}| × |C_k|` matrix.
    pub fn boundary_matrix(&self, k: usize) -> QMatrix {
        assert!(k >= 1 && k <= self.max_dim + 1, "no boundary in dimension {k}");
        let mut m = QMatrix::zeros(self.basis[k - 1].len(), self.basis[k].len());
        for (j, col) in self.boundaries[k].iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }
}

/// Builds the nerve complex. Non-acyclic input needs `max_dim`.
pub fn nerve_chains(cat: &FinCategory, max_dim: Option<usize>) -> Result<ChainComplexQ> {
    nerve_chains_with(cat, max_dim, Parallelism::default())
}

pub fn nerve_chains_with(
    cat: &FinCategory,
    max_dim: Option<usize>,
    par: Parallelism,
) -> Result<ChainComplexQ> {
    let acyclic = cat.is_acyclic();
    if !acyclic && max_dim.is_none() {
        return Err(Error::NotAcyclic(format!(
            "`{}` has an infinite-dimensional nerve; give a maximal dimension",
            cat.name()
        )));
    }
    // Non-identity morphisms leaving each object.
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); cat.object_count()];
    for (m, mor) in cat.morphisms().iter().enumerate() {
        if !cat.is_identity(m) {
            out[mor.dom].push(m);
        }
    }
    let mut basis: Vec<Vec<SimplexChain>> = vec![(0..cat.object_count())
        .map(|x| SimplexChain {
            start: x,
            morphisms: vec![],
        })
        .collect()];
    let limit = max_dim.map(|d| d + 1);
    loop {
        let k = basis.len();
        if limit.is_some_and(|l| k > l) {
            break;
        }
        let prev = &basis[k - 1];
        let next: Vec<SimplexChain> = par::flat_map(par, prev, |c| {
            let end = match c.morphisms.last() {
                Some(&m) => cat.cod(m),
                None => c.start,
            };
            out[end]
                .iter()
                .map(|&m| {
                    let mut morphisms = c.morphisms.clone();
                    morphisms.push(m);
                    SimplexChain {
                        start: c.start,
                        morphisms,
                    }
                })
                .collect()
        });
        if next.is_empty() && limit.is_none() {
            break;
        }
        basis.push(next);
    }
    // Without a cap the last dimension holds chains, and an empty one is
    // appended for the top boundary.
    if limit.is_none() {
        basis.push(Vec::new());
    }
    let top = basis.len() - 2;
    let truncated = max_dim.is_some() && !basis[top + 1].is_empty();

    let index: Vec<HashMap<&SimplexChain, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, c)| (c, i)).collect())
        .collect();
    let mut boundaries = vec![Vec::new()];
    for k in 1..basis.len() {
        let column = |c: &SimplexChain| -> SparseColumn {
            let mut acc: HashMap<usize, Rational> = HashMap::new();
            for (i, face) in faces(cat, c).into_iter().enumerate() {
                let Some(face) = face else { continue };
                let row = index[k - 1][&face];
                let v = acc.remove(&row).unwrap_or_else(Rational::zero) + Rational::sign(i);
                if !v.is_zero() {
                    acc.insert(row, v);
                }
            }
            let mut col: SparseColumn = acc.into_iter().collect();
            col.sort_by_key(|e| e.0);
            col
        };
        boundaries.push(par::map(par, &basis[k], column));
    }
    Ok(ChainComplexQ {
        max_dim: top,
        basis,
        boundaries,
        truncated: truncated || !acyclic,
    })
}

/// `d_0, …, d_k` of a chain; `None` for a degenerate face.
fn faces(cat: &FinCategory, c: &SimplexChain) -> Vec<Option<SimplexChain>> {
    let ms = &c.morphisms;
    let k = ms.len();
    if k == 1 {
        let m = ms[0];
        return vec![
            Some(SimplexChain {
                start: cat.cod(m),
                morphisms: vec![],
            }),
            Some(SimplexChain {
                start: cat.dom(m),
                morphisms: vec![],
            }),
        ];
    }
    let mut out = Vec::with_capacity(k + 1);
    out.push(Some(SimplexChain {
        start: cat.dom(ms[1]),
        morphisms: ms[1..].to_vec(),
    }));
    for i in 1..k {
        let composite = cat.compose(ms[i], ms[i - 1]).expect("chain is composable");
        out.push(if cat.is_identity(composite) {
            None
        } else {
            let mut morphisms = ms[..i - 1].to_vec();
            morphisms.push(composite);
            morphisms.extend_from_slice(&ms[i + 1..]);
            Some(SimplexChain {
                start: c.start,
                morphisms,
            })
        });
    }
    out.push(Some(SimplexChain {
        start: c.start,
        morphisms: ms[..k - 1].to_vec(),
    }));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub betti: Vec<usize>,
    pub basis: Vec<usize>,
    pub euler_top: i64,
    pub truncated: bool,
}

impl HomologyReport {
    /// `dim<TAB>basis<TAB>betti`, one line per dimension.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("dim\tbasis\tbetti\n");
        for (k, (b, n)) in self.betti.iter().zip(&self.basis).enumerate() {
            writeln!(s, "{k}\t{n}\t{b}").expect("write to string");
        }
        s
    }

    /// Betti numbers with trailing zeros added up to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut b = self.betti.clone();
        if b.len() < len {
            b.resize(len, 0);
        }
        b
    }
}

/// `∂_{k-1} ∂_k = 0`, checked column by column.
fn check_square_zero(complex: &ChainComplexQ) -> Result<()> {
    for k in 2..complex.boundaries.len() {
        for (j, col) in complex.boundaries[k].iter().enumerate() {
            let mut acc: HashMap<usize, Rational> = HashMap::new();
            for (i, v) in col {
                for (r, w) in &complex.boundaries[k - 1][*i] {
                    let e = acc.entry(*r).or_insert_with(Rational::zero);
                    *e = &*e + &(v * w);
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return Err(Error::Dimension(format!(
                    "boundary of the boundary of {k}-chain {j} is nonzero"
                )));
            }
        }
    }
    Ok(())
}

pub fn betti_numbers(complex: &ChainComplexQ) -> Result<HomologyReport> {
    check_square_zero(complex)?;
    let ranks: Vec<usize> = complex
        .boundaries
        .iter()
        .enumerate()
        .map(|(k, cols)| {
            if k == 0 {
                0
            } else {
                sparse_rank(cols.clone(), complex.basis[k - 1].len())
            }
        })
        .collect();
    let top = complex.max_dim;
    let basis: Vec<usize> = complex.basis[..=top].iter().map(Vec::len).collect();
    let betti = (0..=top)
        .map(|k| basis[k] - ranks[k] - ranks[k + 1])
        .collect();
    let euler_top = basis
        .iter()
        .enumerate()
        .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum();
    Ok(HomologyReport {
        betti,
        basis,
        euler_top,
        truncated: complex.truncated,
    })
}

pub fn homology(cat: &FinCategory, max_dim: Option<usize>) -> Result<HomologyReport> {
    betti_numbers(&nerve_chains(cat, max_dim)?)
}

#[derive(Debug, Clone)]
pub struct HomologyComparison {
    pub parent: Option<HomologyReport>,
    pub gr: Option<HomologyReport>,
    pub report: ValidationReport,
}

impl HomologyComparison {
    /// Both Betti vectors padded to a common length.
    pub fn betti_pair(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (p, g) = (self.parent.as_ref()?, self.gr.as_ref()?);
        let len = p.betti.len().max(g.betti.len());
        Some((p.padded(len), g.padded(len)))
    }
}

/// Betti numbers of the parent against those of the Grothendieck
/// construction of the reduced nerve, degree by degree.
pub fn compare_homology(cover: &Cover, max_dim: Option<usize>) -> HomologyComparison {
    let mut report = ValidationReport::default();
    let parent = match homology(cover.parent(), max_dim) {
        Ok(h) => Some(h),
        Err(e) => {
            report.push("homology", vec![cover.parent().name().into()], e.to_string());
            None
        }
    };
    let gr = match gr_reduced(cover).and_then(|g| homology(g.category(), max_dim)) {
        Ok(h) => Some(h),
        Err(e) => {
            report.push("homology", vec!["gr".into()], e.to_string());
            None
        }
    };
    let mut out = HomologyComparison {
        parent,
        gr,
        report,
    };
    for (side, h) in [("parent", &out.parent), ("gr", &out.gr)] {
        if h.as_ref().is_some_and(|h| h.truncated) {
            out.report.push(
                "truncated",
                vec![side.into()],
                "truncated homology is not evidence of equivalence",
            );
        }
    }
    if let Some((p, g)) = out.betti_pair() {
        for (k, (a, b)) in p.iter().zip(&g).enumerate() {
            if a != b {
                out.report.push(
                    "betti",
                    vec![k.to_string()],
                    format!("b_{k}: parent {a}, gr {b}"),
                );
            }
        }
    }
    out
}

/// `χ(cat)` against the alternating count of nerve simplices.
pub fn euler_consistency(cat: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::default();
    if !cat.is_acyclic() {
        report.push("hypothesis", vec![cat.name().into()], "category is not acyclic");
        return report;
    }
    let Some(chi) = euler_characteristic(cat).chi else {
        report.push("hypothesis", vec![cat.name().into()], "no Euler characteristic");
        return report;
    };
    match homology(cat, None) {
        Ok(h) => {
            if chi != Rational::from(h.euler_top) {
                report.push(
                    "euler",
                    vec![cat.name().into()],
                    format!("χ = {chi} but the nerve gives {}", h.euler_top),
                );
            }
        }
        Err(e) => report.push("homology", vec![cat.name().into()], e.to_string()),
    }
    report
}
