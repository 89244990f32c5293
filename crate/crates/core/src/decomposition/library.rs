use serde::{Deserialize, Serialize};

use super::decompose::{indecomposable_summands, is_indecomposable, is_isomorphic};
use crate::algebra::BoundQuiverAlgebra;
use crate::auslander_reiten::{ar_inverse_translate, ar_translate};
use crate::error::{Error, Result};
use crate::homological::{cover_step, is_projective};
use crate::linalg::{FieldSpec, Matrix};
use crate::module::{hom_basis, injective, projective, simple, Morphism, Representation};

/// Default total-dimension bound for [`Strategy::BoundedExhaustive`].
pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    NakayamaClosedForm,
    BoundedExhaustive,
    UserSupplied,
}

#[derive(Clone, Debug)]
pub enum Strategy {
    NakayamaClosedForm,
    BoundedExhaustive { max_total_dim: usize },
    UserSupplied(Vec<Representation>),
}

/// Pairwise non-isomorphic indecomposables of one algebra.
#[derive(Clone, Debug)]
pub struct IndecomposableLibrary {
    pub algebra: BoundQuiverAlgebra,
    pub modules: Vec<Representation>,
    pub provenance: Provenance,
    /// Problems met while enumerating, such as modules beyond the bound.
    pub warnings: Vec<String>,
}

impl IndecomposableLibrary {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Index of the member isomorphic to `m`.
    pub fn position(&self, m: &Representation) -> Option<usize> {
        self.modules.iter().position(|x| is_isomorphic(x, m))
    }
}

/// Linear or cyclic quiver with monomial relations.
pub fn is_nakayama(a: &BoundQuiverAlgebra) -> bool {
    let q = a.quiver();
    (0..q.vertex_count()).all(|v| q.outgoing(v).count() <= 1 && q.incoming(v).count() <= 1)
        && a.presentation().relations.iter().all(|r| r.is_monomial())
}

pub fn enumerate_indecomposables(a: &BoundQuiverAlgebra, strategy: &Strategy) -> Result<IndecomposableLibrary> {
    match strategy {
        Strategy::NakayamaClosedForm => nakayama_closed_form(a),
        Strategy::BoundedExhaustive { max_total_dim } => ar_closure(a, *max_total_dim),
        Strategy::UserSupplied(list) => user_supplied(a, list),
    }
}

/// The uniserial quotients `P(i) / rad^l P(i)`, `1 ≤ l ≤ length P(i)`.
fn nakayama_closed_form(a: &BoundQuiverAlgebra) -> Result<IndecomposableLibrary> {
    if !is_nakayama(a) {
        return Err(Error::Unsupported(
            "the closed form needs a linear or cyclic quiver with monomial relations".into(),
        ));
    }
    let mut modules = Vec::new();
    for i in 0..a.vertex_count() {
        let p = projective(a, i);
        for l in 1.. {
            let rows = power_radical_rows(&p, l - 1);
            if rows.iter().all(|r| r.rows() == 0) {
                break;
            }
            modules.push(p.quotient(&power_radical_rows(&p, l))?.0);
        }
    }
    Ok(IndecomposableLibrary {
        algebra: a.clone(),
        modules,
        provenance: Provenance::NakayamaClosedForm,
        warnings: Vec::new(),
    })
}

/// Row spaces of `rad^l M`.
fn power_radical_rows(m: &Representation, l: usize) -> Vec<Matrix> {
    let f = m.field();
    let q = m.algebra().quiver();
    let mut layer: Vec<Matrix> = m.dim_vector().iter().map(|&d| Matrix::identity(f, d)).collect();
    for _ in 0..l {
        layer = (0..q.vertex_count())
            .map(|v| {
                let parts: Vec<Matrix> = q
                    .incoming(v)
                    .map(|x| layer[q.arrow(x).source].mul(m.arrow_map(x)))
                    .collect();
                let refs: Vec<&Matrix> = parts.iter().collect();
                Matrix::vstack(f, m.dim_at(v), &refs).row_basis()
            })
            .collect();
    }
    layer
}

/// Middle term `E` of the almost split sequence `0 -> τX -> E -> X -> 0`
/// for an indecomposable non-projective `X`.
pub fn almost_split_middle(x: &Representation) -> Result<Representation> {
    let field = x.field();
    let tx = ar_translate(x);
    let step = cover_step(x);
    let omega = &step.syzygy;
    let incl = &step.inclusion;
    let h_basis = hom_basis(omega, &tx)?;
    if h_basis.is_empty() {
        return Err(Error::Inconsistent("Ext^1(X, τX) vanishes for a non-projective X".into()));
    }
    let width = h_basis[0].to_vector().len();
    let h_rows = vectors_to_matrix(field, width, h_basis.iter().map(Morphism::to_vector));
    // boundaries: restrictions of maps P0 -> τX
    let b_rows = vectors_to_matrix(
        field,
        width,
        hom_basis(step.cover.source(), &tx)?.iter().map(|g| incl.then(g).to_vector()),
    );
    // v lies in the span of the boundaries iff v . K = 0
    let k = if b_rows.rows() == 0 {
        Matrix::identity(field, width)
    } else {
        b_rows.kernel_basis()
    };
    // socle of Ext^1 over End(X): classes killed by the radical of End(X)
    let endo = super::endo::endomorphism_algebra(x)?;
    let mut conditions: Vec<Matrix> = Vec::new();
    for r in endo.radical_elements() {
        let omega_r = lift_to_syzygy(&step.cover, incl, &r)?;
        let t = vectors_to_matrix(field, width, h_basis.iter().map(|h| omega_r.then(h).to_vector()));
        conditions.push(t.mul(&k));
    }
    let solutions = if conditions.is_empty() {
        Matrix::identity(field, h_basis.len())
    } else {
        let refs: Vec<&Matrix> = conditions.iter().collect();
        Matrix::hstack(field, h_basis.len(), &refs).left_kernel_basis()
    };
    let hk = h_rows.mul(&k);
    let chosen = (0..solutions.rows())
        .map(|r| solutions.row(r))
        .find(|c| !c.mul(&hk).is_zero())
        .ok_or_else(|| Error::Inconsistent("no nonzero socle element in Ext^1(X, τX)".into()))?;
    let mut h = Morphism::zero(omega, &tx);
    for (j, b) in h_basis.iter().enumerate() {
        let c = chosen.get(0, j);
        if !c.is_zero() {
            h = h.add(&b.scale(&c));
        }
    }
    // pushout: E = coker(ΩX -> τX ⊕ P0)
    let p0 = step.cover.source();
    let sum = Representation::direct_sum(x.algebra(), &[tx.clone(), p0.clone()]);
    let (inj, _) = Representation::sum_maps(&sum, &[tx.clone(), p0.clone()]);
    let to_sum = h.then(&inj[0]).add(&incl.then(&inj[1]));
    Ok(to_sum.cokernel().0)
}

fn vectors_to_matrix(
    field: FieldSpec,
    width: usize,
    rows: impl Iterator<Item = Vec<crate::linalg::Scalar>>,
) -> Matrix {
    let rows: Vec<_> = rows.collect();
    Matrix::from_fn(field, rows.len(), width, |i, j| rows[i][j].clone())
}

/// Solves `h.then(g) = f` for `h`.
pub(crate) fn factor_through(f: &Morphism, g: &Morphism) -> Result<Option<Morphism>> {
    let field = f.source().field();
    let basis = hom_basis(f.source(), g.source())?;
    let target = f.to_vector();
    if basis.is_empty() {
        return Ok(f.is_zero().then(|| Morphism::zero(f.source(), g.source())));
    }
    let cols: Vec<Vec<_>> = basis.iter().map(|b| b.then(g).to_vector()).collect();
    let sys = Matrix::from_fn(field, target.len(), cols.len(), |i, j| cols[j][i].clone());
    let rhs = Matrix::from_fn(field, target.len(), 1, |i, _| target[i].clone());
    let Some(c) = sys.solve(&rhs)? else {
        return Ok(None);
    };
    let mut h = Morphism::zero(f.source(), g.source());
    for (j, b) in basis.iter().enumerate() {
        let s = c.get(j, 0);
        if !s.is_zero() {
            h = h.add(&b.scale(&s));
        }
    }
    Ok(Some(h))
}

/// `Ωr : ΩX -> ΩX` induced by `r : X -> X` through the cover `π : P0 -> X`.
fn lift_to_syzygy(cover: &Morphism, incl: &Morphism, r: &Morphism) -> Result<Morphism> {
    let psi = factor_through(&cover.then(r), cover)?
        .ok_or_else(|| Error::Inconsistent("endomorphism does not lift to the cover".into()))?;
    factor_through(&incl.then(&psi), incl)?
        .ok_or_else(|| Error::Inconsistent("lift does not restrict to the syzygy".into()))
}

/// Closure of the projectives, injectives and simples under τ, τ⁻¹ and
/// middle terms of almost split sequences, keeping modules of total
/// dimension at most `max_dim`.
fn ar_closure(a: &BoundQuiverAlgebra, max_dim: usize) -> Result<IndecomposableLibrary> {
    if a.field() == FieldSpec::Rationals {
        return Err(Error::Unsupported(
            "bounded exhaustive enumeration runs over a prime field only".into(),
        ));
    }
    let n = a.vertex_count();
    let mut found = Found {
        max_dim,
        modules: Vec::new(),
        warnings: Vec::new(),
    };
    for i in 0..n {
        for m in [projective(a, i), injective(a, i), simple(a, i)] {
            found.offer(m);
        }
    }
    let mut head = 0;
    while head < found.modules.len() {
        let x = found.modules[head].clone();
        head += 1;
        let mut next = vec![ar_inverse_translate(&x)];
        if !is_projective(&x) {
            next.push(ar_translate(&x));
            next.extend(indecomposable_summands(&almost_split_middle(&x)?)?);
        }
        for m in next {
            for part in indecomposable_summands(&m)? {
                found.offer(part);
            }
        }
    }
    let Found {
        mut modules,
        warnings,
        ..
    } = found;
    modules.sort_by(|x, y| x.total_dim().cmp(&y.total_dim()).then(x.dim_vector().cmp(y.dim_vector())));
    Ok(IndecomposableLibrary {
        algebra: a.clone(),
        modules,
        provenance: Provenance::BoundedExhaustive,
        warnings,
    })
}

struct Found {
    max_dim: usize,
    modules: Vec<Representation>,
    warnings: Vec<String>,
}

impl Found {
    fn offer(&mut self, m: Representation) {
        if m.is_zero() || self.modules.iter().any(|x| is_isomorphic(x, &m)) {
            return;
        }
        if m.total_dim() > self.max_dim {
            let w = format!(
                "skipped an indecomposable with dimension vector {:?} above the bound {}",
                m.dim_vector(),
                self.max_dim
            );
            if !self.warnings.contains(&w) {
                self.warnings.push(w);
            }
            return;
        }
        self.modules.push(m);
    }
}

fn user_supplied(a: &BoundQuiverAlgebra, list: &[Representation]) -> Result<IndecomposableLibrary> {
    let mut modules: Vec<Representation> = Vec::new();
    for (k, m) in list.iter().enumerate() {
        if m.algebra() != a {
            return Err(Error::AlgebraMismatch);
        }
        if !is_indecomposable(m)? {
            return Err(Error::Decomposable(format!("library entry {k}")));
        }
        if !modules.iter().any(|x| is_isomorphic(x, m)) {
            modules.push(m.clone());
        }
    }
    Ok(IndecomposableLibrary {
        algebra: a.clone(),
        modules,
        provenance: Provenance::UserSupplied,
        warnings: Vec::new(),
    })
}

#[derive(Serialize, Deserialize)]
struct ModuleDoc {
    dims: Vec<usize>,
    maps: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct LibraryDoc {
    schema: u32,
    algebra_hash: String,
    field: String,
    provenance: Provenance,
    seed: u64,
    modules: Vec<ModuleDoc>,
}

/// JSON document with the algebra hash, the modules as dimension vectors
/// and arrow matrices, the provenance and the seed.
pub fn library_to_json(lib: &IndecomposableLibrary) -> String {
    let doc = LibraryDoc {
        schema: 1,
        algebra_hash: format!("{:016x}", lib.algebra.fingerprint()),
        field: lib.algebra.field().to_string(),
        provenance: lib.provenance,
        seed: lib.algebra.seed(),
        modules: lib
            .modules
            .iter()
            .map(|m| ModuleDoc {
                dims: m.dim_vector().to_vec(),
                maps: m.arrow_maps().iter().map(Matrix::to_strings).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("library serialises")
}

/// Reads a library document; entries are validated as indecomposable
/// modules over `a` and deduplicated.
pub fn library_from_json(a: &BoundQuiverAlgebra, text: &str) -> Result<IndecomposableLibrary> {
    let doc: LibraryDoc = serde_json::from_str(text)?;
    let expected = format!("{:016x}", a.fingerprint());
    if doc.algebra_hash != expected {
        return Err(Error::Library(format!(
            "document belongs to algebra {}, not {expected}",
            doc.algebra_hash
        )));
    }
    let q = a.quiver();
    let mut modules = Vec::new();
    for (k, m) in doc.modules.iter().enumerate() {
        if m.maps.len() != q.arrows().len() || m.dims.len() != q.vertex_count() {
            return Err(Error::Library(format!("entry {k} does not match the quiver")));
        }
        let maps = q
            .arrows()
            .iter()
            .zip(&m.maps)
            .map(|(x, s)| Matrix::from_strings(a.field(), m.dims[x.source], m.dims[x.target], s))
            .collect::<Result<Vec<_>>>()?;
        modules.push(Representation::new(a, m.dims.clone(), maps)?);
    }
    let mut lib = user_supplied(a, &modules)?;
    lib.provenance = doc.provenance;
    Ok(lib)
}
