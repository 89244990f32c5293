use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::endo::{endomorphism_algebra, total_matrix};
use crate::error::{Error, Result};
use crate::linalg::poly::{minimal_polynomial, roots};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::module::{hom_basis, injective, projective, simple, Morphism, Representation};

/// Random combinations tried by [`is_isomorphic`] before the deterministic
/// fallback.
pub const ISO_SAMPLES: usize = 40;

const SPLIT_ATTEMPTS: usize = 64;

/// Indecomposable summands with multiplicities, one entry per isomorphism
/// class, ordered by dimension vector.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<(Representation, usize)>,
}

impl Decomposition {
    pub fn count(&self) -> usize {
        self.summands.iter().map(|(_, k)| k).sum()
    }

    /// Number of pairwise non-isomorphic summands.
    pub fn distinct(&self) -> usize {
        self.summands.len()
    }

    pub fn modules(&self) -> impl Iterator<Item = &Representation> {
        self.summands.iter().map(|(m, _)| m)
    }

    /// Every summand with repetition.
    pub fn flat(&self) -> Vec<Representation> {
        self.summands
            .iter()
            .flat_map(|(m, k)| std::iter::repeat_n(m.clone(), *k))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

/// A summand as reported: standard name where one applies, dimension vector
/// and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandInfo {
    pub label: Option<String>,
    pub dim_vector: Vec<usize>,
    pub multiplicity: usize,
}

pub(crate) fn rng_for(seed: u64, parts: &[&Representation]) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    for p in parts {
        p.hash(&mut h);
    }
    ChaCha8Rng::seed_from_u64(h.finish())
}

pub(crate) fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Prime(p) => Scalar::Mod(rng.gen_range(0..p)),
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-97..=97)),
    }
}

fn random_combination(basis: &[Morphism], field: FieldSpec, rng: &mut ChaCha8Rng) -> Option<Morphism> {
    let (first, rest) = basis.split_first()?;
    let mut out = first.scale(&random_scalar(field, rng));
    for b in rest {
        out = out.add(&b.scale(&random_scalar(field, rng)));
    }
    Some(out)
}

/// Local modules (simple top or simple socle) are indecomposable.
fn obviously_indecomposable(m: &Representation) -> bool {
    m.total_dim() == 1 || m.top_vector().iter().sum::<usize>() == 1 || m.socle_vector().iter().sum::<usize>() == 1
}

/// Splits `M = ker g^n ⊕ im g^n` for `g = f - λ` with `λ` an eigenvalue of
/// `f` in the field and `g` not nilpotent.
fn fitting_split(m: &Representation, f: &Morphism) -> Option<(Representation, Representation)> {
    let field = m.field();
    let n = m.total_dim();
    let total = total_matrix(f);
    for lambda in roots(field, &minimal_polynomial(&total)) {
        let shift = Matrix::identity(field, n).scale(&lambda);
        if total.sub(&shift).pow(n as u64).is_zero() {
            continue;
        }
        let powers: Vec<Matrix> = f
            .maps()
            .iter()
            .map(|x| {
                let id = Matrix::identity(field, x.rows()).scale(&lambda);
                x.sub(&id).pow(n as u64)
            })
            .collect();
        let ker = powers.iter().map(Matrix::left_kernel_basis).collect();
        let im = powers.iter().map(Matrix::row_basis).collect();
        let (a, _) = m.submodule(ker).ok()?;
        let (b, _) = m.submodule(im).ok()?;
        return Some((a, b));
    }
    None
}

fn split_once(m: &Representation) -> Result<Option<(Representation, Representation)>> {
    if m.is_zero() || obviously_indecomposable(m) {
        return Ok(None);
    }
    let endo = endomorphism_algebra(m)?;
    if endo.top_dim() <= 1 {
        return Ok(None);
    }
    // basis elements first: they are sparse and often split directly
    for b in &endo.basis {
        if let Some(s) = fitting_split(m, b) {
            return Ok(Some(s));
        }
    }
    let mut rng = rng_for(m.algebra().seed(), &[m]);
    for _ in 0..SPLIT_ATTEMPTS {
        let f = random_combination(&endo.basis, m.field(), &mut rng).expect("nonzero End");
        if let Some(s) = fitting_split(m, &f) {
            return Ok(Some(s));
        }
    }
    Err(Error::FieldObstruction {
        quotient_dim: endo.top_dim(),
    })
}

/// Indecomposable summands with repetition, in no particular order.
pub fn indecomposable_summands(m: &Representation) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x)? {
            Some((a, b)) => {
                stack.push(a);
                stack.push(b);
            }
            None => out.push(x),
        }
    }
    Ok(out)
}

/// Groups summands into isomorphism classes.
pub fn group_summands(parts: Vec<Representation>) -> Decomposition {
    let mut groups: Vec<(Representation, usize)> = Vec::new();
    for x in parts {
        match groups.iter_mut().find(|(y, _)| is_isomorphic(y, &x)) {
            Some(g) => g.1 += 1,
            None => groups.push((x, 1)),
        }
    }
    groups.sort_by(|a, b| a.0.dim_vector().cmp(b.0.dim_vector()));
    Decomposition { summands: groups }
}

pub fn decompose(m: &Representation) -> Result<Decomposition> {
    Ok(group_summands(indecomposable_summands(m)?))
}

pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    if obviously_indecomposable(m) {
        return Ok(true);
    }
    Ok(endomorphism_algebra(m)?.top_dim() == 1 || split_once(m)?.is_none())
}

/// Some homomorphism `M -> N` invertible at every vertex exists.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> bool {
    if !m.same_algebra(n) || m.dim_vector() != n.dim_vector() {
        return false;
    }
    if m == n {
        return true;
    }
    let Ok(basis) = hom_basis(m, n) else {
        return false;
    };
    if basis.is_empty() {
        return m.is_zero();
    }
    let mut rng = rng_for(m.algebra().seed(), &[m, n]);
    for _ in 0..ISO_SAMPLES {
        let f = random_combination(&basis, m.field(), &mut rng).expect("nonempty basis");
        if f.is_iso() {
            return true;
        }
    }
    // deterministic fallback: single basis elements and prefix sums
    let mut acc = Morphism::zero(m, n);
    for b in &basis {
        if b.is_iso() {
            return true;
        }
        acc = acc.add(b);
        if acc.is_iso() {
            return true;
        }
    }
    false
}

/// Names under which `M` matches a standard module, in the order S, P, I:
/// for example `S(3)=P(3)`.
pub fn standard_label(m: &Representation) -> Option<String> {
    let a = m.algebra();
    let q = a.quiver();
    let mut names = Vec::new();
    for (tag, make) in [
        ("S", simple as fn(&_, usize) -> Representation),
        ("P", projective),
        ("I", injective),
    ] {
        for i in 0..a.vertex_count() {
            let x = make(a, i);
            if x.dim_vector() == m.dim_vector() && is_isomorphic(&x, m) {
                names.push(format!("{tag}({})", q.vertex_name(i)));
            }
        }
    }
    if names.is_empty() {
        None
    } else {
        Some(names.join("="))
    }
}

pub fn summary(d: &Decomposition) -> Vec<SummandInfo> {
    d.summands
        .iter()
        .map(|(m, k)| SummandInfo {
            label: standard_label(m),
            dim_vector: m.dim_vector().to_vec(),
            multiplicity: *k,
        })
        .collect()
}

/// Standard name of `M` if it has one, otherwise `M(d_1,...,d_n)` with its
/// dimension vector.
pub fn module_name(m: &Representation) -> String {
    standard_label(m).unwrap_or_else(|| dims_name(m.dim_vector()))
}

fn dims_name(d: &[usize]) -> String {
    format!("M({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

/// Human-readable sum such as `P(5) + S(3)` or `S(2)^2`.
pub fn describe(d: &Decomposition) -> String {
    if d.is_zero() {
        return "0".into();
    }
    summary(d)
        .iter()
        .map(|s| {
            let name = s.label.clone().unwrap_or_else(|| dims_name(&s.dim_vector));
            if s.multiplicity > 1 {
                format!("{name}^{}", s.multiplicity)
            } else {
                name
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
