use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::module::{hom_basis, Morphism, Representation};

/// `End(M)` with a basis of endomorphisms and its Jacobson radical.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    pub module: Representation,
    pub basis: Vec<Morphism>,
    /// Rows are coordinates (over `basis`) of a basis of the radical.
    pub radical: Matrix,
}

impl EndoAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.rows()
    }

    /// Dimension of `End(M) / rad End(M)`.
    pub fn top_dim(&self) -> usize {
        self.dim() - self.radical_dim()
    }

    /// Endomorphism with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Morphism {
        let mut out = Morphism::zero(&self.module, &self.module);
        for (b, c) in self.basis.iter().zip(coords) {
            if !c.is_zero() {
                out = out.add(&b.scale(c));
            }
        }
        out
    }

    pub fn radical_elements(&self) -> Vec<Morphism> {
        (0..self.radical.rows())
            .map(|r| {
                let coords: Vec<Scalar> = (0..self.radical.cols()).map(|c| self.radical.get(r, c)).collect();
                self.element(&coords)
            })
            .collect()
    }
}

/// Whole-module matrix of an endomorphism (block diagonal over vertices).
pub fn total_matrix(f: &Morphism) -> Matrix {
    let refs: Vec<&Matrix> = f.maps().iter().collect();
    Matrix::block_diag(f.source().field(), &refs)
}

pub(crate) fn check_characteristic(field: FieldSpec, dim: usize) -> Result<()> {
    if let FieldSpec::Prime(p) = field {
        if p as usize <= dim {
            return Err(Error::FieldTooSmall { prime: p, dim });
        }
    }
    Ok(())
}

/// Radical as the kernel of the trace form `(x, y) ↦ tr_M(xy)`, valid when
/// the characteristic is zero or exceeds `dim M`.
pub fn endomorphism_algebra(m: &Representation) -> Result<EndoAlgebra> {
    let field = m.field();
    let n = m.total_dim();
    check_characteristic(field, n)?;
    let basis = hom_basis(m, m)?;
    let d = basis.len();
    if d == 0 {
        return Ok(EndoAlgebra {
            module: m.clone(),
            basis,
            radical: Matrix::zeros(field, 0, 0),
        });
    }
    // tr(XY) = vec(X) . vec(Y^T)
    let flat: usize = m.dim_vector().iter().map(|x| x * x).sum();
    let mut u = Matrix::zeros(field, d, flat);
    let mut w = Matrix::zeros(field, flat, d);
    for (i, b) in basis.iter().enumerate() {
        let mut k = 0;
        for x in b.maps() {
            for r in 0..x.rows() {
                for c in 0..x.cols() {
                    u.set(i, k + r * x.cols() + c, &x.get(r, c));
                    w.set(k + c * x.cols() + r, i, &x.get(r, c));
                }
            }
            k += x.rows() * x.cols();
        }
    }
    let gram = u.mul(&w);
    let radical = gram.left_kernel_basis();
    let endo = EndoAlgebra {
        module: m.clone(),
        basis,
        radical,
    };
    for x in endo.radical_elements() {
        if !total_matrix(&x).pow(n as u64).is_zero() {
            return Err(Error::Inconsistent("trace-form radical contains a non-nilpotent element".into()));
        }
    }
    Ok(endo)
}
