use super::rep::{Morphism, Representation};
use crate::error::Result;
use crate::linalg::Matrix;

/// Rows of the returned matrix are the vectorised basis homomorphisms
/// `M -> N` (see [`Morphism::to_vector`]).
pub fn hom_matrix(m: &Representation, n: &Representation) -> Result<Matrix> {
    m.ensure_same_algebra(n)?;
    let f = m.field();
    let q = m.algebra().quiver();
    let nv = q.vertex_count();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + m.dim_at(v) * n.dim_at(v);
    }
    let unknowns = off[nv];
    let eq_count: usize = q
        .arrows()
        .iter()
        .map(|a| m.dim_at(a.source) * n.dim_at(a.target))
        .sum();
    if unknowns == 0 {
        return Ok(Matrix::zeros(f, 0, 0));
    }
    // M_a f_j - f_i N_a = 0 for a: i -> j
    let mut sys = Matrix::zeros(f, eq_count, unknowns);
    let mut row = 0;
    for (x, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, ni, nj) = (m.dim_at(i), n.dim_at(i), n.dim_at(j));
        let ma = m.arrow_map(x);
        let na = n.arrow_map(x);
        for r in 0..mi {
            for c in 0..nj {
                let e = row + r * nj + c;
                for k in 0..m.dim_at(j) {
                    let v = ma.get(r, k);
                    if !v.is_zero() {
                        let col = off[j] + k * nj + c;
                        let cur = sys.get(e, col);
                        sys.set(e, col, &f.add(&cur, &v));
                    }
                }
                for k in 0..ni {
                    let v = na.get(k, c);
                    if !v.is_zero() {
                        let col = off[i] + r * ni + k;
                        let cur = sys.get(e, col);
                        sys.set(e, col, &f.sub(&cur, &v));
                    }
                }
            }
        }
        row += mi * nj;
    }
    Ok(sys.kernel_basis().transpose())
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    let h = hom_matrix(m, n)?;
    Ok((0..h.rows())
        .map(|r| {
            let v: Vec<_> = (0..h.cols()).map(|c| h.get(r, c)).collect();
            Morphism::from_vector(m, n, &v)
        })
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_matrix(m, n)?.rows())
}

/// Row spaces of the trace of `M` in `X`: the sum of the images of all
/// homomorphisms `M -> X`.
pub fn trace_rows(x: &Representation, m: &Representation) -> Result<Vec<Matrix>> {
    let f = x.field();
    let homs = hom_basis(m, x)?;
    Ok((0..x.dim_vector().len())
        .map(|v| {
            let parts: Vec<&Matrix> = homs.iter().map(|h| h.map_at(v)).collect();
            Matrix::vstack(f, x.dim_at(v), &parts).row_basis()
        })
        .collect())
}

/// Row spaces of the reject of `M` in `X`: the intersection of the kernels
/// of all homomorphisms `X -> M`.
pub fn reject_rows(x: &Representation, m: &Representation) -> Result<Vec<Matrix>> {
    let f = x.field();
    let homs = hom_basis(x, m)?;
    Ok((0..x.dim_vector().len())
        .map(|v| {
            let parts: Vec<&Matrix> = homs.iter().map(|h| h.map_at(v)).collect();
            if parts.is_empty() {
                Matrix::identity(f, x.dim_at(v))
            } else {
                Matrix::hstack(f, x.dim_at(v), &parts).left_kernel_basis()
            }
        })
        .collect())
}

/// `X` lies in `Gen M`: some `M^d` maps onto `X`.
pub fn gen_membership(x: &Representation, m: &Representation) -> Result<bool> {
    let t = trace_rows(x, m)?;
    Ok(t.iter().enumerate().all(|(v, r)| r.rows() == x.dim_at(v)))
}

/// `X` lies in `Cogen M`: `X` embeds in some `M^d`.
pub fn cogen_membership(x: &Representation, m: &Representation) -> Result<bool> {
    Ok(reject_rows(x, m)?.iter().all(|r| r.rows() == 0))
}
