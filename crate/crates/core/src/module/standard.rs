use super::rep::Representation;
use crate::algebra::BoundQuiverAlgebra;
use crate::linalg::Matrix;

/// Simple module at vertex `i`.
pub fn simple(a: &BoundQuiverAlgebra, i: usize) -> Representation {
    let f = a.field();
    let q = a.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(v == i)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|x| Matrix::zeros(f, dims[x.source], dims[x.target]))
        .collect();
    Representation::from_parts(a, dims, maps)
}

/// Indecomposable projective `e_i A`; the basis at vertex `j` is the basis
/// paths from `i` to `j`.
pub fn projective(a: &BoundQuiverAlgebra, i: usize) -> Representation {
    let f = a.field();
    let q = a.quiver();
    let dims = (0..q.vertex_count()).map(|j| a.paths_between(i, j).len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(x, arrow)| {
            let rows = a.paths_between(i, arrow.source);
            let cols = a.paths_between(i, arrow.target);
            let ax = a.arrow_index(x);
            let mut m = Matrix::zeros(f, rows.len(), cols.len());
            for (r, &b) in rows.iter().enumerate() {
                for (k, c) in a.basis_product(b, ax) {
                    let col = cols.iter().position(|p| p == k).expect("product ends at target");
                    m.set(r, col, c);
                }
            }
            m
        })
        .collect();
    Representation::from_parts(a, dims, maps)
}

/// Indecomposable injective `D(A e_i)`; the basis at vertex `j` is dual to
/// the basis paths from `j` to `i`.
pub fn injective(a: &BoundQuiverAlgebra, i: usize) -> Representation {
    let f = a.field();
    let q = a.quiver();
    let dims = (0..q.vertex_count()).map(|j| a.paths_between(j, i).len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(x, arrow)| {
            let rows = a.paths_between(arrow.source, i);
            let cols = a.paths_between(arrow.target, i);
            let ax = a.arrow_index(x);
            // (b* . x)(c) = b*(x c)
            let mut m = Matrix::zeros(f, rows.len(), cols.len());
            for (col, &c) in cols.iter().enumerate() {
                for (k, coeff) in a.basis_product(ax, c) {
                    let r = rows.iter().position(|p| p == k).expect("product starts at source");
                    m.set(r, col, coeff);
                }
            }
            m
        })
        .collect();
    Representation::from_parts(a, dims, maps)
}

/// The regular module `A_A`, as the sum of the `P(i)` in vertex order.
pub fn regular(a: &BoundQuiverAlgebra) -> Representation {
    let parts: Vec<_> = (0..a.vertex_count()).map(|i| projective(a, i)).collect();
    Representation::direct_sum(a, &parts)
}

/// `DA`, the sum of the `I(i)` in vertex order.
pub fn dual_regular(a: &BoundQuiverAlgebra) -> Representation {
    let parts: Vec<_> = (0..a.vertex_count()).map(|i| injective(a, i)).collect();
    Representation::direct_sum(a, &parts)
}

/// All simple, projective and injective modules of an algebra.
#[derive(Clone, Debug)]
pub struct StandardModules {
    pub simples: Vec<Representation>,
    pub projectives: Vec<Representation>,
    pub injectives: Vec<Representation>,
}

pub fn standard_modules(a: &BoundQuiverAlgebra) -> StandardModules {
    let n = a.vertex_count();
    StandardModules {
        simples: (0..n).map(|i| simple(a, i)).collect(),
        projectives: (0..n).map(|i| projective(a, i)).collect(),
        injectives: (0..n).map(|i| injective(a, i)).collect(),
    }
}
