use std::collections::HashMap;

use super::decompose::is_isomorphic;
use super::endo::endomorphism_algebra;
use super::library::IndecomposableLibrary;
use crate::algebra::{build_algebra, BoundQuiverAlgebra, BuildOptions, PathWord, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::module::{hom_basis, Morphism};

/// Flattened morphisms `X_k -> X_l`, with a fixed basis per pair.
struct HomBlocks {
    /// `basis[k][l]` is a basis of `Hom(X_k, X_l)`.
    basis: Vec<Vec<Vec<Morphism>>>,
}

impl HomBlocks {
    /// Coordinates of `f: X_k -> X_l` in the chosen basis.
    fn coords(&self, k: usize, l: usize, f: &Morphism) -> Vec<Scalar> {
        let field = f.source().field();
        let b = &self.basis[k][l];
        if b.is_empty() {
            return Vec::new();
        }
        let cols: Vec<Vec<Scalar>> = b.iter().map(Morphism::to_vector).collect();
        let target = f.to_vector();
        let sys = Matrix::from_fn(field, target.len(), cols.len(), |i, j| cols[j][i].clone());
        let rhs = Matrix::from_fn(field, target.len(), 1, |i, _| target[i].clone());
        let x = sys
            .solve(&rhs)
            .expect("shapes agree")
            .expect("morphism lies in the hom space");
        (0..b.len()).map(|j| x.get(j, 0)).collect()
    }

    fn combine(&self, k: usize, l: usize, coords: &Matrix, row: usize) -> Morphism {
        let b = &self.basis[k][l];
        let mut out = Morphism::zero(b[0].source(), b[0].target());
        for (j, m) in b.iter().enumerate() {
            let c = coords.get(row, j);
            if !c.is_zero() {
                out = out.add(&m.scale(&c));
            }
        }
        out
    }
}

fn rows_of(field: FieldSpec, width: usize, rows: &[Vec<Scalar>]) -> Matrix {
    Matrix::from_fn(field, rows.len(), width, |i, j| rows[i][j].clone())
}

/// Presentation of `End(X_1 ⊕ ... ⊕ X_n)` for a basic library: one vertex
/// per member, arrows from a basis of `rad / rad²` between each pair, and
/// relations generating the kernel of the map from the path algebra. Paths
/// compose like maps: the path `x y` is `x` followed by `y`.
pub fn auslander_algebra(lib: &IndecomposableLibrary, options: &BuildOptions) -> Result<BoundQuiverAlgebra> {
    let mods = &lib.modules;
    let n = mods.len();
    let field = lib.algebra.field();
    for i in 0..n {
        for j in i + 1..n {
            if is_isomorphic(&mods[i], &mods[j]) {
                return Err(Error::NonBasic(i, j));
            }
        }
    }
    let mut basis = vec![vec![Vec::new(); n]; n];
    for k in 0..n {
        for l in 0..n {
            basis[k][l] = hom_basis(&mods[k], &mods[l])?;
        }
    }
    let blocks = HomBlocks { basis };
    let dim_e: usize = blocks.basis.iter().flatten().map(Vec::len).sum();

    // radical: everything off the diagonal, the trace-form radical on it
    let mut rad: Vec<Vec<Matrix>> = vec![vec![Matrix::zeros(field, 0, 0); n]; n];
    for k in 0..n {
        for l in 0..n {
            let d = blocks.basis[k][l].len();
            rad[k][l] = if k == l {
                let endo = endomorphism_algebra(&mods[k])?;
                if endo.top_dim() != 1 {
                    return Err(Error::Decomposable(format!("library entry {k} is not local")));
                }
                endo.radical
            } else {
                Matrix::identity(field, d)
            };
        }
    }
    // rad² and a complement of it inside rad, giving the arrows
    let mut arrows: Vec<(usize, usize, Morphism)> = Vec::new();
    for k in 0..n {
        for l in 0..n {
            let d = blocks.basis[k][l].len();
            if d == 0 || rad[k][l].rows() == 0 {
                continue;
            }
            let mut products: Vec<Vec<Scalar>> = Vec::new();
            for m in 0..n {
                if rad[k][m].rows() == 0 || rad[m][l].rows() == 0 {
                    continue;
                }
                for r1 in 0..rad[k][m].rows() {
                    let f = blocks.combine(k, m, &rad[k][m], r1);
                    for r2 in 0..rad[m][l].rows() {
                        let g = blocks.combine(m, l, &rad[m][l], r2);
                        products.push(blocks.coords(k, l, &f.then(&g)));
                    }
                }
            }
            let rad2 = rows_of(field, d, &products).row_basis();
            let mut span = rad2.clone();
            for r in 0..rad[k][l].rows() {
                let cand = rad[k][l].row(r);
                let grown = Matrix::vstack(field, d, &[&span, &cand]);
                if grown.rank() > span.rank() {
                    span = grown;
                    arrows.push((k, l, blocks.combine(k, l, &cand, 0)));
                }
            }
        }
    }

    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrow_specs: Vec<(String, String, String)> = arrows
        .iter()
        .enumerate()
        .map(|(i, (k, l, _))| (format!("x{}", i + 1), vertices[*k].clone(), vertices[*l].clone()))
        .collect();
    let quiver = Quiver::new(vertices.clone(), arrow_specs)?;

    let relations = kernel_generators(&quiver, field, mods, &arrows, &blocks)?;
    let presentation = Presentation::new(quiver, relations, field)?;
    let built = build_algebra(&presentation, options)?;
    if built.dim() != dim_e {
        return Err(Error::Inconsistent(format!(
            "presented algebra has dimension {} but the endomorphism algebra has {dim_e}",
            built.dim()
        )));
    }
    Ok(built)
}

/// Generators of the kernel `K` of `kQ -> E`: a lift of a basis of
/// `K / (JK + KJ)`, computed in the span of paths up to the first length at
/// which every path vanishes.
fn kernel_generators(
    quiver: &Quiver,
    field: FieldSpec,
    mods: &[crate::module::Representation],
    arrows: &[(usize, usize, Morphism)],
    blocks: &HomBlocks,
) -> Result<Vec<Relation>> {
    let n = mods.len();
    let mut paths: Vec<PathWord> = Vec::new();
    let mut layer: Vec<(PathWord, Option<Morphism>)> = (0..arrows.len())
        .map(|a| (PathWord::arrow(quiver, a), Some(arrows[a].2.clone())))
        .collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (p, img) in &layer {
            for a in quiver.outgoing(p.target) {
                let g = img.as_ref().map(|g| g.then(&arrows[a].2)).filter(|h| !h.is_zero());
                next.push((p.then_arrow(quiver, a), g));
            }
        }
        let all_zero = next.iter().all(|(_, g)| g.is_none());
        paths.extend(next.iter().map(|(p, _)| p.clone()));
        if all_zero {
            break;
        }
        layer = next;
    }
    paths.sort();
    paths.sort_by_key(PathWord::len);
    let image_of = |p: &PathWord| -> Morphism {
        let mut g = mods[p.source].identity();
        for &a in &p.arrows {
            g = g.then(&arrows[a].2);
        }
        g
    };
    let width = paths.len();
    let lookup: HashMap<&PathWord, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let index = |w: &PathWord| lookup.get(w).copied();

    // K, one vertex pair at a time, as rows over all paths
    let mut kernel_rows: Vec<Vec<Scalar>> = Vec::new();
    for k in 0..n {
        for l in 0..n {
            let cols: Vec<usize> = (0..width)
                .filter(|&i| paths[i].source == k && paths[i].target == l)
                .collect();
            if cols.is_empty() {
                continue;
            }
            let d = blocks.basis[k][l].len();
            let kernel = if d == 0 {
                Matrix::identity(field, cols.len())
            } else {
                let coords: Vec<Vec<Scalar>> =
                    cols.iter().map(|&i| blocks.coords(k, l, &image_of(&paths[i]))).collect();
                rows_of(field, d, &coords).left_kernel_basis().row_basis()
            };
            for r in 0..kernel.rows() {
                let mut v = vec![field.zero(); width];
                for (j, &i) in cols.iter().enumerate() {
                    v[i] = kernel.get(r, j);
                }
                kernel_rows.push(v);
            }
        }
    }

    // JK + KJ, dropping paths beyond the window (they vanish in E)
    let mut products: Vec<Vec<Scalar>> = Vec::new();
    for v in &kernel_rows {
        let terms: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let (s, t) = (paths[terms[0].0].source, paths[terms[0].0].target);
        let mut push = |wrap: &dyn Fn(&PathWord) -> PathWord| {
            let mut row = vec![field.zero(); width];
            for (i, c) in &terms {
                if let Some(j) = index(&wrap(&paths[*i])) {
                    row[j] = field.add(&row[j], c);
                }
            }
            products.push(row);
        };
        for a in quiver.incoming(s) {
            push(&|w: &PathWord| PathWord::arrow(quiver, a).concat(w).expect("composable"));
        }
        for a in quiver.outgoing(t) {
            push(&|w: &PathWord| w.then_arrow(quiver, a));
        }
    }
    let mut span = rows_of(field, width, &products).row_basis();
    let mut relations = Vec::new();
    for v in kernel_rows {
        let cand = rows_of(field, width, std::slice::from_ref(&v));
        let grown = Matrix::vstack(field, width, &[&span, &cand]);
        if grown.rank() > span.rows() {
            span = grown.row_basis();
            let terms = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), paths[i].clone()))
                .collect();
            relations.push(Relation { terms });
        }
    }
    Ok(relations)
}

/// Isomorphism of bound quiver presentations up to renaming vertices and
/// arrows: some bijection carries the quiver to the quiver and each
/// relation into the ideal of the other side.
pub fn presentations_isomorphic(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra) -> bool {
    let (qa, qb) = (a.quiver(), b.quiver());
    let n = qa.vertex_count();
    if n != qb.vertex_count() || qa.arrows().len() != qb.arrows().len() || a.dim() != b.dim() || a.field() != b.field() {
        return false;
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search_vertices(a, b, 0, &mut perm, &mut used)
}

fn arrow_count(q: &Quiver, s: usize, t: usize) -> usize {
    q.arrows().iter().filter(|x| x.source == s && x.target == t).count()
}

fn search_vertices(
    a: &BoundQuiverAlgebra,
    b: &BoundQuiverAlgebra,
    v: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let (qa, qb) = (a.quiver(), b.quiver());
    let n = qa.vertex_count();
    if v == n {
        return search_arrows(a, b, perm);
    }
    for w in 0..n {
        if used[w] {
            continue;
        }
        perm[v] = w;
        let consistent = (0..=v).all(|u| {
            arrow_count(qa, u, v) == arrow_count(qb, perm[u], w)
                && arrow_count(qa, v, u) == arrow_count(qb, w, perm[u])
                && a.paths_between(u, v).len() == b.paths_between(perm[u], w).len()
                && a.paths_between(v, u).len() == b.paths_between(w, perm[u]).len()
        });
        if consistent {
            used[w] = true;
            if search_vertices(a, b, v + 1, perm, used) {
                return true;
            }
            used[w] = false;
        }
    }
    perm[v] = usize::MAX;
    false
}

fn search_arrows(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra, perm: &[usize]) -> bool {
    let (qa, qb) = (a.quiver(), b.quiver());
    let m = qa.arrows().len();
    let mut amap = vec![usize::MAX; m];
    let mut used = vec![false; m];
    fn rec(
        a: &BoundQuiverAlgebra,
        b: &BoundQuiverAlgebra,
        perm: &[usize],
        i: usize,
        amap: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let (qa, qb) = (a.quiver(), b.quiver());
        if i == qa.arrows().len() {
            return relations_match(a, b, perm, amap);
        }
        let x = qa.arrow(i);
        for j in 0..qb.arrows().len() {
            let y = qb.arrow(j);
            if used[j] || y.source != perm[x.source] || y.target != perm[x.target] {
                continue;
            }
            amap[i] = j;
            used[j] = true;
            if rec(a, b, perm, i + 1, amap, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    let _ = qb;
    rec(a, b, perm, 0, &mut amap, &mut used)
}

/// Every relation of `a`, renamed, vanishes in `b`; with equal dimensions
/// the induced surjection is then an isomorphism.
fn relations_match(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra, perm: &[usize], amap: &[usize]) -> bool {
    let f = b.field();
    a.presentation().relations.iter().all(|r| {
        let mut sum = vec![f.zero(); b.dim()];
        for (c, w) in &r.terms {
            let mapped = PathWord {
                source: perm[w.source],
                target: perm[w.target],
                arrows: w.arrows.iter().map(|&x| amap[x]).collect(),
            };
            for (i, v) in b.path_element(&mapped).iter().enumerate() {
                sum[i] = f.add(&sum[i], &f.mul(c, v));
            }
        }
        sum.iter().all(Scalar::is_zero)
    })
}
