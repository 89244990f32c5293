use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};

struct RepData {
    algebra: BoundQuiverAlgebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    actions: OnceLock<Vec<Matrix>>,
}

/// A finite-dimensional right module given as a quiver representation.
///
/// Vectors at a vertex are row vectors; the matrix of an arrow `a: i -> j`
/// is `dim_i x dim_j` and a path acts by the product of its arrow matrices
/// in order. Cloning shares the underlying data.
#[derive(Clone)]
pub struct Representation(Arc<RepData>);

impl Representation {
    /// Checks shapes, the relations and nilpotency of the arrow action.
    pub fn new(algebra: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} arrow matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.source],
                    dims[a.target],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidField(format!(
                    "matrix over {} for an algebra over {}",
                    m.field(),
                    algebra.field()
                )));
            }
        }
        let rep = Self::raw(algebra, dims, maps);
        rep.check_relations()?;
        Ok(rep)
    }

    fn raw(algebra: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation(Arc::new(RepData {
            algebra: algebra.clone(),
            dims,
            maps,
            actions: OnceLock::new(),
        }))
    }

    pub(crate) fn from_parts(algebra: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Self::raw(algebra, dims, maps);
        debug_assert!(rep.check_relations().is_ok(), "constructed module violates the relations");
        rep
    }

    fn check_relations(&self) -> Result<()> {
        let a = self.algebra();
        let f = a.field();
        for r in &a.presentation().relations {
            let (s, t) = (r.source(), r.target());
            let mut sum = Matrix::zeros(f, self.dim_at(s), self.dim_at(t));
            for (c, w) in &r.terms {
                sum = sum.add(&self.word_action(&w.arrows, s).scale(c));
            }
            if !sum.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "relation `{}` does not act as zero",
                    crate::algebra::print_relation(f, a.quiver(), r)
                )));
            }
        }
        // M J^m = 0 for the Loewy bound m of the algebra
        let q = a.quiver();
        let mut layer: Vec<Matrix> = self.0.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        for _ in 0..a.nilpotency_degree() {
            layer = (0..q.vertex_count())
                .map(|v| {
                    let parts: Vec<Matrix> = q
                        .incoming(v)
                        .map(|x| layer[q.arrow(x).source].mul(&self.0.maps[x]))
                        .collect();
                    let refs: Vec<&Matrix> = parts.iter().collect();
                    Matrix::vstack(f, self.dim_at(v), &refs).row_basis()
                })
                .collect();
        }
        if layer.iter().any(|m| m.rows() > 0) {
            return Err(Error::Inconsistent("arrow action is not nilpotent".into()));
        }
        Ok(())
    }

    pub fn zero(algebra: &BoundQuiverAlgebra) -> Self {
        let q = algebra.quiver();
        let f = algebra.field();
        Self::from_parts(
            algebra,
            vec![0; q.vertex_count()],
            q.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect(),
        )
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra {
        &self.0.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.0.algebra.field()
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.0.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    /// Offset of vertex `v` in the concatenation of all vertex spaces.
    pub fn offset(&self, v: usize) -> usize {
        self.0.dims[..v].iter().sum()
    }

    fn word_action(&self, arrows: &[usize], start: usize) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dim_at(start));
        for &a in arrows {
            m = m.mul(&self.0.maps[a]);
        }
        m
    }

    /// Action matrices of the basis paths of the algebra, indexed like the
    /// basis.
    pub fn basis_actions(&self) -> &[Matrix] {
        self.0.actions.get_or_init(|| {
            self.algebra()
                .basis()
                .iter()
                .map(|w| self.word_action(&w.arrows, w.source))
                .collect()
        })
    }

    /// Matrix of right multiplication by an algebra element, on the whole
    /// module (block matrix over all vertices).
    pub fn element_action(&self, x: &[Scalar]) -> Matrix {
        let f = self.field();
        let n = self.total_dim();
        let mut out = Matrix::zeros(f, n, n);
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = &self.algebra().basis()[b];
            let m = self.basis_actions()[b].scale(c);
            let (r0, c0) = (self.offset(w.source), self.offset(w.target));
            let cur = out.submatrix(r0, c0, m.rows(), m.cols());
            out.paste(r0, c0, &cur.add(&m));
        }
        out
    }

    /// Direct sum; with no summands, the zero module.
    pub fn direct_sum(algebra: &BoundQuiverAlgebra, parts: &[Representation]) -> Representation {
        let q = algebra.quiver();
        let f = algebra.field();
        let dims = (0..q.vertex_count())
            .map(|v| parts.iter().map(|p| p.dim_at(v)).sum())
            .collect();
        let maps = (0..q.arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| p.arrow_map(a)).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Self::from_parts(algebra, dims, maps)
    }

    pub fn power(&self, n: usize) -> Representation {
        Self::direct_sum(self.algebra(), &vec![self.clone(); n])
    }

    /// Coordinate injections and projections of a direct sum.
    pub fn sum_maps(sum: &Representation, parts: &[Representation]) -> (Vec<Morphism>, Vec<Morphism>) {
        let f = sum.field();
        let nv = sum.dim_vector().len();
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut offsets = vec![0usize; nv];
        for p in parts {
            let mut fi = Vec::new();
            let mut pi = Vec::new();
            for v in 0..nv {
                let mut m = Matrix::zeros(f, p.dim_at(v), sum.dim_at(v));
                m.paste(0, offsets[v], &Matrix::identity(f, p.dim_at(v)));
                pi.push(m.transpose());
                fi.push(m);
                offsets[v] += p.dim_at(v);
            }
            inj.push(Morphism::from_parts(p, sum, fi));
            proj.push(Morphism::from_parts(sum, p, pi));
        }
        (inj, proj)
    }

    /// Induced submodule on the row spaces `rows[v]`, with its inclusion.
    /// The rows at each vertex must be linearly independent and closed under
    /// the arrow action.
    pub fn submodule(&self, rows: Vec<Matrix>) -> Result<(Representation, Morphism)> {
        let q = self.algebra().quiver();
        let mut maps = Vec::new();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let image = rows[arrow.source].mul(&self.0.maps[a]);
            let x = rows[arrow.target]
                .solve_left(&image)?
                .ok_or_else(|| Error::Inconsistent(format!("subspace not closed under `{}`", arrow.name)))?;
            maps.push(x);
        }
        let dims = rows.iter().map(Matrix::rows).collect();
        let sub = Self::from_parts(self.algebra(), dims, maps);
        let incl = Morphism::from_parts(&sub, self, rows);
        Ok((sub, incl))
    }

    /// Quotient by the submodule spanned by `rows[v]`, with the projection.
    pub fn quotient(&self, rows: &[Matrix]) -> Result<(Representation, Morphism)> {
        let f = self.field();
        let q = self.algebra().quiver();
        let mut lifts = Vec::new();
        let mut projs = Vec::new();
        for (v, u) in rows.iter().enumerate() {
            let n = self.dim_at(v);
            let u = if u.rows() == 0 { Matrix::zeros(f, 0, n) } else { u.row_basis() };
            let c = u.complement_rows();
            let full = Matrix::vstack(f, n, &[&u, &c]);
            let inv = full.inverse().ok_or_else(|| Error::Inconsistent("singular change of basis".into()))?;
            projs.push(inv.submatrix(0, u.rows(), n, c.rows()));
            lifts.push(c);
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| lifts[arrow.source].mul(&self.0.maps[a]).mul(&projs[arrow.target]))
            .collect();
        let dims = lifts.iter().map(Matrix::rows).collect();
        let quot = Self::from_parts(self.algebra(), dims, maps);
        let proj = Morphism::from_parts(self, &quot, projs);
        Ok((quot, proj))
    }

    /// Row spaces of `rad M = M J`.
    pub fn radical_rows(&self) -> Vec<Matrix> {
        let f = self.field();
        let q = self.algebra().quiver();
        (0..q.vertex_count())
            .map(|v| {
                let parts: Vec<&Matrix> = q.incoming(v).map(|a| &self.0.maps[a]).collect();
                if parts.is_empty() {
                    Matrix::zeros(f, 0, self.dim_at(v))
                } else {
                    Matrix::vstack(f, self.dim_at(v), &parts).row_basis()
                }
            })
            .collect()
    }

    /// Row spaces of the socle: vectors killed by every arrow.
    pub fn socle_rows(&self) -> Vec<Matrix> {
        let f = self.field();
        let q = self.algebra().quiver();
        (0..q.vertex_count())
            .map(|v| {
                let parts: Vec<&Matrix> = q.outgoing(v).map(|a| &self.0.maps[a]).collect();
                if parts.is_empty() {
                    Matrix::identity(f, self.dim_at(v))
                } else {
                    Matrix::hstack(f, self.dim_at(v), &parts).left_kernel_basis()
                }
            })
            .collect()
    }

    pub fn radical(&self) -> Representation {
        self.submodule(self.radical_rows()).expect("radical is a submodule").0
    }

    pub fn top(&self) -> Representation {
        self.quotient(&self.radical_rows()).expect("radical is a submodule").0
    }

    pub fn socle(&self) -> Representation {
        self.submodule(self.socle_rows()).expect("socle is a submodule").0
    }

    /// Dimension vector of the top.
    pub fn top_vector(&self) -> Vec<usize> {
        self.radical_rows()
            .iter()
            .enumerate()
            .map(|(v, r)| self.dim_at(v) - r.rows())
            .collect()
    }

    /// Dimension vector of the socle.
    pub fn socle_vector(&self) -> Vec<usize> {
        self.socle_rows().iter().map(Matrix::rows).collect()
    }

    /// Representation over the opposite algebra on the dual spaces.
    pub fn dual(&self) -> Representation {
        let op = self.algebra().opposite();
        let maps = self.0.maps.iter().map(Matrix::transpose).collect();
        Self::from_parts(&op, self.0.dims.clone(), maps)
    }

    pub fn identity(&self) -> Morphism {
        let f = self.field();
        let maps = self.0.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism::from_parts(self, self, maps)
    }

    /// Same algebra handle (up to equality of algebras).
    pub fn same_algebra(&self, other: &Representation) -> bool {
        self.algebra() == other.algebra()
    }

    pub(crate) fn ensure_same_algebra(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dims == other.0.dims
                && self.0.maps == other.0.maps
                && self.algebra() == other.algebra())
    }
}

impl Eq for Representation {}

impl Hash for Representation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.algebra().fingerprint().hash(state);
        self.algebra().is_opposite_side().hash(state);
        self.0.dims.hash(state);
        self.0.maps.hash(state);
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.0.dims)
            .finish_non_exhaustive()
    }
}

/// A module homomorphism, one matrix per vertex. Composition "`f` then `g`"
/// is the vertexwise product `f_v g_v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl Morphism {
    /// Checks shapes and the intertwining law `M_a f_j = f_i N_a`.
    pub fn new(source: &Representation, target: &Representation, maps: Vec<Matrix>) -> Result<Self> {
        source.ensure_same_algebra(target)?;
        let nv = source.dim_vector().len();
        if maps.len() != nv {
            return Err(Error::DimensionMismatch(format!("{} vertex maps for {nv} vertices", maps.len())));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.rows() != source.dim_at(v) || m.cols() != target.dim_at(v) {
                return Err(Error::DimensionMismatch(format!("map at vertex {} has the wrong shape", v + 1)));
            }
        }
        let f = Morphism {
            source: source.clone(),
            target: target.clone(),
            maps,
        };
        if !f.intertwines() {
            return Err(Error::Inconsistent("vertex maps do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: &Representation, target: &Representation, maps: Vec<Matrix>) -> Self {
        let f = Morphism {
            source: source.clone(),
            target: target.clone(),
            maps,
        };
        debug_assert!(f.intertwines(), "constructed map is not a homomorphism");
        f
    }

    fn intertwines(&self) -> bool {
        let q = self.source.algebra().quiver();
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            self.source.arrow_map(a).mul(&self.maps[arrow.target])
                == self.maps[arrow.source].mul(self.target.arrow_map(a))
        })
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let maps = (0..source.dim_vector().len())
            .map(|v| Matrix::zeros(f, source.dim_at(v), target.dim_at(v)))
            .collect();
        Morphism::from_parts(source, target, maps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn map_at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        assert_eq!(self.target.dim_vector(), g.source.dim_vector(), "composable maps");
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.mul(b)).collect();
        Morphism::from_parts(&self.source, &g.target, maps)
    }

    pub fn add(&self, g: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.add(b)).collect();
        Morphism::from_parts(&self.source, &self.target, maps)
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let maps = self.maps.iter().map(|a| a.scale(c)).collect();
        Morphism::from_parts(&self.source, &self.target, maps)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn rank_vector(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }

    /// Concatenated row-major entries of the vertex maps.
    pub fn to_vector(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.maps {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out.push(m.get(i, j));
                }
            }
        }
        out
    }

    /// Inverse of [`Morphism::to_vector`]; the caller guarantees the
    /// entries describe a homomorphism.
    pub(crate) fn from_vector(source: &Representation, target: &Representation, v: &[Scalar]) -> Morphism {
        let f = source.field();
        let mut k = 0;
        let maps = (0..source.dim_vector().len())
            .map(|x| {
                let (r, c) = (source.dim_at(x), target.dim_at(x));
                let m = Matrix::from_fn(f, r, c, |i, j| v[k + i * c + j].clone());
                k += r * c;
                m
            })
            .collect();
        Morphism::from_parts(source, target, maps)
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, Morphism) {
        let rows = self.maps.iter().map(Matrix::left_kernel_basis).collect();
        self.source.submodule(rows).expect("kernel is a submodule")
    }

    /// Image as a submodule of the target, the corestriction onto it and the
    /// inclusion.
    pub fn image(&self) -> (Representation, Morphism, Morphism) {
        let rows: Vec<Matrix> = self.maps.iter().map(Matrix::row_basis).collect();
        let (im, incl) = self.target.submodule(rows.clone()).expect("image is a submodule");
        let onto = self
            .maps
            .iter()
            .zip(&rows)
            .map(|(m, r)| r.solve_left(m).expect("shapes").expect("row space"))
            .collect();
        (im.clone(), Morphism::from_parts(&self.source, &im, onto), incl)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Representation, Morphism) {
        let rows: Vec<Matrix> = self.maps.iter().map(Matrix::row_basis).collect();
        self.target.quotient(&rows).expect("image is a submodule")
    }

    /// The dual map `D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> Morphism {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Morphism::from_parts(&self.target.dual(), &self.source.dual(), maps)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism")
            .field("source", &self.source.dim_vector())
            .field("target", &self.target.dim_vector())
            .field("ranks", &self.rank_vector())
            .finish()
    }
}
