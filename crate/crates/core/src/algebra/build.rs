use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use super::dsl::print_presentation;
use super::quiver::{PathWord, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};

/// Sparse vector over the path basis of an algebra.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    /// Longest path length examined before giving up; `None` picks a default
    /// from the presentation.
    pub max_len: Option<usize>,
    /// Seed for every randomised routine run over this algebra.
    pub seed: u64,
}

/// The data of one side (Λ or Λ^op) of a built algebra.
#[derive(Debug)]
pub struct AlgebraData {
    presentation: Presentation,
    basis: Vec<PathWord>,
    lookup: HashMap<PathWord, usize>,
    reductions: HashMap<PathWord, Sparse>,
    truncation: usize,
    mult: Vec<Sparse>,
    stationary: Vec<usize>,
    arrow_basis: Vec<usize>,
    endpoints: Vec<Vec<Vec<usize>>>,
    fingerprint: u64,
}

struct AlgebraPair {
    sides: [AlgebraData; 2],
    seed: u64,
}

/// A finite-dimensional bound quiver algebra `kQ/I`, together with its
/// opposite algebra. Cloning is cheap; the opposite of the opposite is the
/// original handle.
#[derive(Clone)]
pub struct BoundQuiverAlgebra {
    pair: Arc<AlgebraPair>,
    side: usize,
}

impl Deref for BoundQuiverAlgebra {
    type Target = AlgebraData;
    fn deref(&self) -> &AlgebraData {
        &self.pair.sides[self.side]
    }
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.pair, &other.pair) && self.side == other.side)
            || (self.fingerprint == other.fingerprint
                && self.presentation == other.presentation
                && self.basis == other.basis)
    }
}

impl Eq for BoundQuiverAlgebra {}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("dim", &self.dim())
            .field("presentation", &print_presentation(&self.presentation))
            .finish()
    }
}

impl BoundQuiverAlgebra {
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra {
            pair: self.pair.clone(),
            side: 1 - self.side,
        }
    }

    pub fn is_opposite_side(&self) -> bool {
        self.side == 1
    }

    pub fn seed(&self) -> u64 {
        self.pair.seed
    }
}

pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn default_max_len(p: &Presentation) -> usize {
    let longest: usize = p
        .relations
        .iter()
        .map(|r| r.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0))
        .sum();
    p.quiver.arrows().len() + longest + 1
}

/// Standard paths, reductions of the remaining paths (sparse over column
/// indices) and the column ordering used.
struct Truncated {
    standard: Vec<PathWord>,
    reductions: HashMap<PathWord, Sparse>,
    columns: Vec<PathWord>,
}

/// Quotient of the span of paths shorter than `trunc` by the ideal generated
/// by the relations.
fn truncated_quotient(p: &Presentation, trunc: usize) -> Truncated {
    let q = &p.quiver;
    let field = p.field;
    let mut layers: Vec<Vec<PathWord>> = Vec::new();
    for len in 0..trunc {
        let mut layer = q.paths_of_length(len);
        layer.sort();
        layers.push(layer);
    }
    // longest paths first so that pivots land on leading terms
    let columns: Vec<PathWord> = layers.iter().rev().flat_map(|l| l.iter().rev().cloned()).collect();
    let col_of: HashMap<&PathWord, usize> = columns.iter().enumerate().map(|(i, w)| (w, i)).collect();

    let mut rows: Vec<Sparse> = Vec::new();
    for rel in &p.relations {
        let min_len = rel.terms.iter().map(|(_, w)| w.len()).min().unwrap_or(0);
        if min_len >= trunc {
            continue;
        }
        let budget = trunc - 1 - min_len;
        for lp in 0..=budget {
            for left in layers[lp].iter().filter(|w| w.target == rel.source()) {
                for lq in 0..=(budget - lp) {
                    for right in layers[lq].iter().filter(|w| w.source == rel.target()) {
                        let row: Sparse = rel
                            .terms
                            .iter()
                            .filter_map(|(c, w)| {
                                let full = left.concat(w)?.concat(right)?;
                                col_of.get(&full).map(|&col| (col, c.clone()))
                            })
                            .collect();
                        if !row.is_empty() {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }

    let mut m = Matrix::zeros(field, rows.len(), columns.len());
    for (i, row) in rows.iter().enumerate() {
        for (c, v) in row {
            let cur = m.get(i, *c);
            m.set(i, *c, &field.add(&cur, v));
        }
    }
    let (r, pivots) = m.rref();
    let standard = (0..columns.len())
        .filter(|c| !pivots.contains(c))
        .map(|c| columns[c].clone())
        .collect();
    let mut reductions = HashMap::new();
    for (i, &pc) in pivots.iter().enumerate() {
        let red: Sparse = ((pc + 1)..columns.len())
            .filter_map(|c| {
                let v = r.get(i, c);
                (!v.is_zero()).then(|| (c, field.neg(&v)))
            })
            .collect();
        reductions.insert(columns[pc].clone(), red);
    }
    Truncated {
        standard,
        reductions,
        columns,
    }
}

fn basis_order(a: &PathWord, b: &PathWord) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.arrows.cmp(&b.arrows))
        .then_with(|| a.source.cmp(&b.source))
}

impl AlgebraData {
    fn assemble(
        presentation: Presentation,
        mut basis: Vec<PathWord>,
        column_reductions: HashMap<PathWord, Sparse>,
        columns: &[PathWord],
        truncation: usize,
    ) -> AlgebraData {
        basis.sort_by(basis_order);
        let lookup: HashMap<PathWord, usize> =
            basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let reductions: HashMap<PathWord, Sparse> = column_reductions
            .into_iter()
            .map(|(k, v)| {
                let mut v: Sparse = v
                    .into_iter()
                    .map(|(c, s)| (lookup[&columns[c]], s))
                    .collect();
                v.sort_by_key(|(i, _)| *i);
                (k, v)
            })
            .collect();
        let mut data = AlgebraData {
            presentation,
            basis,
            lookup,
            reductions,
            truncation,
            mult: Vec::new(),
            stationary: Vec::new(),
            arrow_basis: Vec::new(),
            endpoints: Vec::new(),
            fingerprint: 0,
        };
        data.index();
        let n = data.basis.len();
        let mut mult = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(w) = data.basis[i].concat(&data.basis[j]) {
                    mult[i * n + j] = data.reduce_path(&w);
                }
            }
        }
        data.mult = mult;
        data
    }

    fn index(&mut self) {
        let nv = self.presentation.quiver.vertex_count();
        self.stationary = (0..nv).map(|v| self.lookup[&PathWord::stationary(v)]).collect();
        self.arrow_basis = (0..self.presentation.quiver.arrows().len())
            .map(|a| self.lookup[&PathWord::arrow(&self.presentation.quiver, a)])
            .collect();
        let mut endpoints = vec![vec![Vec::new(); nv]; nv];
        for (i, w) in self.basis.iter().enumerate() {
            endpoints[w.source][w.target].push(i);
        }
        self.endpoints = endpoints;
        let mut text = print_presentation(&self.presentation).into_bytes();
        text.extend(self.basis.len().to_le_bytes());
        self.fingerprint = fnv1a(&text);
    }

    fn opposite_data(&self) -> AlgebraData {
        let n = self.basis.len();
        let basis: Vec<PathWord> = self.basis.iter().map(PathWord::reversed).collect();
        let lookup = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let reductions = self
            .reductions
            .iter()
            .map(|(k, v)| (k.reversed(), v.clone()))
            .collect();
        let mut mult = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = self.mult[j * n + i].clone();
            }
        }
        let mut data = AlgebraData {
            presentation: self.presentation.opposite(),
            basis,
            lookup,
            reductions,
            truncation: self.truncation,
            mult,
            stationary: Vec::new(),
            arrow_basis: Vec::new(),
            endpoints: Vec::new(),
            fingerprint: 0,
        };
        data.index();
        data
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.presentation.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.quiver.vertex_count()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    /// Basis paths grouped by length; entry `l` holds the paths of length `l`.
    pub fn graded_basis(&self) -> Vec<Vec<&PathWord>> {
        let mut out: Vec<Vec<&PathWord>> = Vec::new();
        for w in &self.basis {
            if out.len() <= w.len() {
                out.resize_with(w.len() + 1, Vec::new);
            }
            out[w.len()].push(w);
        }
        out
    }

    /// Least length `m` such that every path of length `m` lies in the ideal.
    pub fn nilpotency_degree(&self) -> usize {
        self.basis.iter().map(PathWord::len).max().map_or(0, |l| l + 1)
    }

    pub fn basis_index(&self, w: &PathWord) -> Option<usize> {
        self.lookup.get(w).copied()
    }

    pub fn stationary_index(&self, v: usize) -> usize {
        self.stationary[v]
    }

    pub fn arrow_index(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    /// Basis indices of paths from `source` to `target`, i.e. a basis of
    /// `e_source A e_target`.
    pub fn paths_between(&self, source: usize, target: usize) -> &[usize] {
        &self.endpoints[source][target]
    }

    /// Basis indices of paths starting at `v` (a basis of `e_v A`).
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source == v).collect()
    }

    /// Basis indices of paths ending at `v` (a basis of `A e_v`).
    pub fn paths_to(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].target == v).collect()
    }

    /// Normal form of a path.
    pub fn reduce_path(&self, w: &PathWord) -> Sparse {
        if w.len() >= self.truncation {
            return Vec::new();
        }
        if let Some(&i) = self.lookup.get(w) {
            return vec![(i, self.field().one())];
        }
        self.reductions.get(w).cloned().unwrap_or_default()
    }

    /// Product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.basis.len() + j]
    }

    /// Coefficient vector of a path in the basis.
    pub fn path_element(&self, w: &PathWord) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![f.zero(); self.dim()];
        for (i, c) in self.reduce_path(w) {
            out[i] = c;
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![f.zero(); self.dim()];
        out[i] = f.one();
        out
    }

    /// Bilinear extension of the path product.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let n = self.dim();
        assert!(a.len() == n && b.len() == n, "element length");
        let mut out = vec![f.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    pub fn display_basis(&self, i: usize) -> String {
        self.basis[i].display(self.quiver())
    }
}

/// Builds `kQ/I` by quotienting the span of paths of bounded length by the
/// ideal generated by the relations, increasing the bound until the quotient
/// stops growing.
pub fn build_algebra(p: &Presentation, options: &BuildOptions) -> Result<BoundQuiverAlgebra> {
    for r in &p.relations {
        r.validate(&p.quiver)?;
    }
    let max_len = options.max_len.unwrap_or_else(|| default_max_len(p));
    let mut previous: Option<usize> = None;
    for trunc in 1..=(max_len + 1) {
        let t = truncated_quotient(p, trunc);
        if previous == Some(t.standard.len()) {
            let forward = AlgebraData::assemble(p.clone(), t.standard, t.reductions, &t.columns, trunc);
            let backward = forward.opposite_data();
            return Ok(BoundQuiverAlgebra {
                pair: Arc::new(AlgebraPair {
                    sides: [forward, backward],
                    seed: options.seed,
                }),
                side: 0,
            });
        }
        previous = Some(t.standard.len());
    }
    Err(Error::NotTerminating { max_len })
}

/// The opposite algebra: arrows and relation words reversed, same basis.
pub fn opposite_algebra(a: &BoundQuiverAlgebra) -> BoundQuiverAlgebra {
    a.opposite()
}
