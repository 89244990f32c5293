//! Minimal projective covers and injective envelopes, resolutions, and the
//! homological dimensions built from them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Serialize, Serializer};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::module::{hom_basis, hom_dim, projective, regular, simple, Morphism, Representation};

#[cfg(test)]
mod tests;

/// A projective or injective dimension; `Infinite` also covers "no finite
/// value found within the iteration cap".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomDim {
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            HomDim::Infinite => None,
        }
    }

    pub fn is_at_most(self, n: usize) -> bool {
        matches!(self, HomDim::Finite(k) if k <= n)
    }

    pub fn is_at_least(self, n: usize) -> bool {
        !matches!(self, HomDim::Finite(k) if k < n)
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for HomDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(n) => s.serialize_u64(*n as u64),
            HomDim::Infinite => s.serialize_str("inf"),
        }
    }
}

/// One step `0 -> ΩM -> P -> M -> 0` of a minimal projective resolution.
#[derive(Clone, Debug)]
pub struct CoverStep {
    /// Number of copies of `P(i)` in the cover, per vertex.
    pub multiplicities: Vec<usize>,
    pub cover: Morphism,
    pub syzygy: Representation,
    pub inclusion: Morphism,
}

const CACHE_LIMIT: usize = 4096;

fn cache() -> &'static RwLock<HashMap<Representation, Arc<CoverStep>>> {
    static CACHE: OnceLock<RwLock<HashMap<Representation, Arc<CoverStep>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Sum of `P(i)^{m_i}` in vertex order.
pub fn projective_sum(a: &BoundQuiverAlgebra, multiplicities: &[usize]) -> Representation {
    let parts: Vec<Representation> = multiplicities
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(projective(a, i), m))
        .collect();
    Representation::direct_sum(a, &parts)
}

/// Sum of `I(i)^{m_i}` in vertex order.
pub fn injective_sum(a: &BoundQuiverAlgebra, multiplicities: &[usize]) -> Representation {
    let parts: Vec<Representation> = multiplicities
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(crate::module::injective(a, i), m))
        .collect();
    Representation::direct_sum(a, &parts)
}

/// Minimal projective cover, its kernel and the kernel inclusion.
pub fn cover_step(m: &Representation) -> Arc<CoverStep> {
    if let Some(hit) = cache().read().expect("cache lock").get(m) {
        return hit.clone();
    }
    let step = Arc::new(build_cover_step(m));
    let mut w = cache().write().expect("cache lock");
    if w.len() >= CACHE_LIMIT {
        w.clear();
    }
    w.insert(m.clone(), step.clone());
    step
}

fn build_cover_step(m: &Representation) -> CoverStep {
    let a = m.algebra();
    let f = m.field();
    let n = a.vertex_count();
    let rad = m.radical_rows();
    // generators: a complement of rad M at each vertex
    let mut gens: Vec<(usize, Matrix)> = Vec::new();
    let mut multiplicities = vec![0; n];
    for i in 0..n {
        let r = if rad[i].rows() == 0 {
            Matrix::zeros(f, 0, m.dim_at(i))
        } else {
            rad[i].clone()
        };
        let c = r.complement_rows();
        multiplicities[i] = c.rows();
        for k in 0..c.rows() {
            gens.push((i, c.row(k)));
        }
    }
    let p = projective_sum(a, &multiplicities);
    let actions = m.basis_actions();
    let maps = (0..n)
        .map(|j| {
            let blocks: Vec<Matrix> = gens
                .iter()
                .map(|(i, v)| {
                    let paths = a.paths_between(*i, j);
                    let rows: Vec<Matrix> = paths.iter().map(|&b| v.mul(&actions[b])).collect();
                    let refs: Vec<&Matrix> = rows.iter().collect();
                    Matrix::vstack(f, m.dim_at(j), &refs)
                })
                .collect();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            Matrix::vstack(f, m.dim_at(j), &refs)
        })
        .collect();
    let cover = Morphism::from_parts(&p, m, maps);
    debug_assert!(cover.is_epi());
    let (syzygy, inclusion) = cover.kernel();
    CoverStep {
        multiplicities,
        cover,
        syzygy,
        inclusion,
    }
}

/// Minimal projective cover `P -> M`.
pub fn projective_cover(m: &Representation) -> Morphism {
    cover_step(m).cover.clone()
}

/// Minimal injective envelope `M -> I`, the dual of the projective cover of
/// `DM` over the opposite algebra.
pub fn injective_envelope(m: &Representation) -> Morphism {
    projective_cover(&m.dual()).dual()
}

/// Multiplicities of the `I(i)` in the injective envelope: the socle vector.
pub fn envelope_multiplicities(m: &Representation) -> Vec<usize> {
    m.socle_vector()
}

pub fn syzygy(m: &Representation, k: usize) -> Representation {
    let mut cur = m.clone();
    for _ in 0..k {
        cur = cover_step(&cur).syzygy.clone();
    }
    cur
}

pub fn cosyzygy(m: &Representation, k: usize) -> Representation {
    syzygy(&m.dual(), k).dual()
}

/// The top of `M` is its whole space exactly when `M` is a sum of
/// projectives.
pub fn is_projective(m: &Representation) -> bool {
    cover_step(m).syzygy.is_zero()
}

pub fn is_injective(m: &Representation) -> bool {
    is_projective(&m.dual())
}

/// Iteration cap for resolutions: `dim A + 1` steps.
pub fn resolution_cap(a: &BoundQuiverAlgebra) -> usize {
    a.dim() + 1
}

pub fn projective_dimension(m: &Representation) -> HomDim {
    let cap = resolution_cap(m.algebra());
    let mut cur = m.clone();
    for n in 0..=cap {
        let step = cover_step(&cur);
        if step.syzygy.is_zero() {
            return HomDim::Finite(n);
        }
        cur = step.syzygy.clone();
    }
    HomDim::Infinite
}

pub fn injective_dimension(m: &Representation) -> HomDim {
    projective_dimension(&m.dual())
}

/// Maximum of `pd S(i)` over the simples.
pub fn global_dimension(a: &BoundQuiverAlgebra) -> HomDim {
    (0..a.vertex_count())
        .map(|i| projective_dimension(&simple(a, i)))
        .max()
        .unwrap_or(HomDim::Finite(0))
}

/// Terms of a minimal resolution, described by multiplicities of the
/// indecomposable projectives (resp. injectives).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    Projective,
    Injective,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub direction: Direction,
    /// `terms[k][i]` is the multiplicity of `P(i)` (resp. `I(i)`) in degree `k`.
    pub terms: Vec<Vec<usize>>,
    /// `true` when the resolution reached zero within the cap.
    pub finite: bool,
}

pub fn projective_resolution(m: &Representation) -> Resolution {
    let cap = resolution_cap(m.algebra());
    let mut terms = Vec::new();
    let mut cur = m.clone();
    for _ in 0..=cap {
        if cur.is_zero() {
            return Resolution {
                direction: Direction::Projective,
                terms,
                finite: true,
            };
        }
        let step = cover_step(&cur);
        terms.push(step.multiplicities.clone());
        cur = step.syzygy.clone();
    }
    Resolution {
        direction: Direction::Projective,
        finite: cur.is_zero(),
        terms,
    }
}

pub fn injective_resolution(m: &Representation) -> Resolution {
    let mut r = projective_resolution(&m.dual());
    r.direction = Direction::Injective;
    r
}

/// Vertices `i` with `I(i)` projective.
pub fn projective_injective_vertices(a: &BoundQuiverAlgebra) -> Vec<usize> {
    (0..a.vertex_count())
        .filter(|&i| is_projective(&crate::module::injective(a, i)))
        .collect()
}

/// Number of leading projective terms in the minimal injective resolution
/// of `A_A`; `Infinite` when every term computed is projective.
pub fn dominant_dimension(a: &BoundQuiverAlgebra) -> HomDim {
    let pi = projective_injective_vertices(a);
    let res = injective_resolution(&regular(a));
    for (k, term) in res.terms.iter().enumerate() {
        let all_projective = term.iter().enumerate().all(|(i, &m)| m == 0 || pi.contains(&i));
        if !all_projective {
            return HomDim::Finite(k);
        }
    }
    HomDim::Infinite
}

/// `dim Ext^k(M, N)`: the cokernel of `Hom(P_{k-1}, N) -> Hom(Ω^k M, N)`.
pub fn ext_dim(m: &Representation, n: &Representation, k: usize) -> Result<usize> {
    m.ensure_same_algebra(n)?;
    if k == 0 {
        return hom_dim(m, n);
    }
    let prev = syzygy(m, k - 1);
    let step = cover_step(&prev);
    let total = hom_dim(&step.syzygy, n)?;
    if total == 0 {
        return Ok(0);
    }
    let restricted: Vec<Vec<_>> = hom_basis(step.cover.source(), n)?
        .iter()
        .map(|h| step.inclusion.then(h).to_vector())
        .collect();
    let rank = rank_of(m.field(), &restricted);
    Ok(total - rank)
}

pub(crate) fn rank_of(f: crate::linalg::FieldSpec, rows: &[Vec<crate::linalg::Scalar>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    if width == 0 {
        return 0;
    }
    Matrix::from_fn(f, rows.len(), width, |i, j| rows[i][j].clone()).rank()
}
