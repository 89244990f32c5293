//! The Nakayama functor on maps between projectives, the translates τ and
//! τ⁻¹, and stable hom spaces.

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homological::{cover_step, injective_envelope, injective_sum, projective_cover, rank_of};
use crate::linalg::{Matrix, Scalar};
use crate::module::{hom_basis, hom_dim, Morphism, Representation};

#[cfg(test)]
mod tests;

/// A sum of indecomposable projectives `P(v_1) ⊕ ... ⊕ P(v_r)`, in the
/// summand order of its direct-sum realisation.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    pub summands: Vec<usize>,
    pub module: Representation,
}

impl ProjectiveSum {
    /// The vertex-ordered sum with the given multiplicities.
    pub fn from_multiplicities(a: &BoundQuiverAlgebra, m: &[usize]) -> Self {
        let summands = m
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k))
            .collect();
        ProjectiveSum {
            summands,
            module: crate::homological::projective_sum(a, m),
        }
    }

    /// Row offset of summand `s` inside the vertex-`v` space.
    fn offset(&self, a: &BoundQuiverAlgebra, s: usize, v: usize) -> usize {
        self.summands[..s].iter().map(|&i| a.paths_between(i, v).len()).sum()
    }
}

/// `P₁ -> P₀ -> M -> 0` with both covers minimal.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    pub map: Morphism,
}

pub fn minimal_presentation(m: &Representation) -> ProjectivePresentation {
    let a = m.algebra();
    let s0 = cover_step(m);
    let s1 = cover_step(&s0.syzygy);
    let p0 = ProjectiveSum::from_multiplicities(a, &s0.multiplicities);
    let p1 = ProjectiveSum::from_multiplicities(a, &s1.multiplicities);
    let map = s1.cover.then(&s0.inclusion);
    ProjectivePresentation { p1, p0, map }
}

/// Entry `(s, t)` is the element `x ∈ e_i A e_j` (coefficients over the
/// basis of `A`) of the component `P(j) -> P(i)`, `p ↦ x p`, from source
/// summand `s` (vertex `j`) to target summand `t` (vertex `i`).
fn components(f: &Morphism, src: &ProjectiveSum, tgt: &ProjectiveSum) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let a = f.source().algebra();
    let fs = a.field();
    if src.module.dim_vector() != f.source().dim_vector() || tgt.module.dim_vector() != f.target().dim_vector() {
        return Err(Error::NotProjective("map endpoints do not match the given projective sums".into()));
    }
    let mut out = Vec::new();
    for (s, &j) in src.summands.iter().enumerate() {
        // e_j sits at the first row of summand s at vertex j
        let row = src.offset(a, s, j) + a.paths_between(j, j).iter().position(|&b| b == a.stationary_index(j)).expect("stationary path");
        let mut per_target = Vec::new();
        for (t, &i) in tgt.summands.iter().enumerate() {
            let c0 = tgt.offset(a, t, j);
            let mut x = vec![fs.zero(); a.dim()];
            for (k, &b) in a.paths_between(i, j).iter().enumerate() {
                x[b] = f.map_at(j).get(row, c0 + k);
            }
            per_target.push(x);
        }
        out.push(per_target);
    }
    Ok(out)
}

/// `ν f : ν P₁ -> ν P₀` for a map between projective sums, with
/// `ν P(i) = I(i)`.
pub fn nakayama_on_projectives(f: &Morphism, src: &ProjectiveSum, tgt: &ProjectiveSum) -> Result<Morphism> {
    let a = f.source().algebra();
    let fs = a.field();
    let comps = components(f, src, tgt)?;
    let count = |s: &[usize]| {
        let mut m = vec![0; a.vertex_count()];
        for &i in s {
            m[i] += 1;
        }
        m
    };
    if !is_vertex_ordered(&src.summands) || !is_vertex_ordered(&tgt.summands) {
        return Err(Error::NotProjective("summands must be listed in vertex order".into()));
    }
    let isrc = injective_sum(a, &count(&src.summands));
    let itgt = injective_sum(a, &count(&tgt.summands));
    let maps = (0..a.vertex_count())
        .map(|v| {
            let mut m = Matrix::zeros(fs, isrc.dim_at(v), itgt.dim_at(v));
            let mut r0 = 0;
            for (s, &j) in src.summands.iter().enumerate() {
                let rows = a.paths_between(v, j);
                let mut c0 = 0;
                for (t, &i) in tgt.summands.iter().enumerate() {
                    let cols = a.paths_between(v, i);
                    let x = &comps[s][t];
                    // entry (b*, c*) is the coefficient of b in c x
                    for (ci, &c) in cols.iter().enumerate() {
                        for (k, xk) in x.iter().enumerate() {
                            if xk.is_zero() {
                                continue;
                            }
                            for (b, coeff) in a.basis_product(c, k) {
                                let ri = rows.iter().position(|p| p == b).expect("path ends at j");
                                let cur = m.get(r0 + ri, c0 + ci);
                                m.set(r0 + ri, c0 + ci, &fs.add(&cur, &fs.mul(coeff, xk)));
                            }
                        }
                    }
                    c0 += cols.len();
                }
                r0 += rows.len();
            }
            m
        })
        .collect();
    Ok(Morphism::from_parts(&isrc, &itgt, maps))
}

fn is_vertex_ordered(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[0] <= w[1])
}

/// `τM = ker(νP₁ -> νP₀)` for a minimal presentation of `M`. Projective
/// summands contribute nothing since their presentations have `P₁ = 0`.
pub fn ar_translate(m: &Representation) -> Representation {
    let pres = minimal_presentation(m);
    let nu = nakayama_on_projectives(&pres.map, &pres.p1, &pres.p0).expect("minimal presentation is vertex ordered");
    nu.kernel().0
}

/// `τ⁻¹M = D τ D M`, the translate computed over the opposite algebra.
pub fn ar_inverse_translate(m: &Representation) -> Representation {
    ar_translate(&m.dual()).dual()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableMode {
    ModuloProjectives,
    ModuloInjectives,
}

/// Dimension of `Hom(M, N)` modulo the maps factoring through a projective
/// (through the cover of `N`) or an injective (through the envelope of `M`).
pub fn stable_hom_dim(m: &Representation, n: &Representation, mode: StableMode) -> Result<usize> {
    m.ensure_same_algebra(n)?;
    let total = hom_dim(m, n)?;
    if total == 0 {
        return Ok(0);
    }
    let factoring: Vec<Vec<Scalar>> = match mode {
        StableMode::ModuloProjectives => {
            let pi = projective_cover(n);
            hom_basis(m, pi.source())?
                .iter()
                .map(|g| g.then(&pi).to_vector())
                .collect()
        }
        StableMode::ModuloInjectives => {
            let iota = injective_envelope(m);
            hom_basis(iota.target(), n)?
                .iter()
                .map(|h| iota.then(h).to_vector())
                .collect()
        }
    };
    Ok(total - rank_of(m.field(), &factoring))
}
