use super::*;
use crate::algebra::tests::build;
use crate::algebra::BoundQuiverAlgebra;

const EX1: &str = "vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;";
const EX2: &str =
    "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, c*d;";

fn ex1() -> BoundQuiverAlgebra {
    build(EX1)
}

#[test]
fn standard_dimension_vectors() {
    let a = ex1();
    let s = standard_modules(&a);
    let p: Vec<_> = s.projectives.iter().map(|m| m.dim_vector().to_vec()).collect();
    assert_eq!(p, vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
    let i: Vec<_> = s.injectives.iter().map(|m| m.dim_vector().to_vec()).collect();
    assert_eq!(i, vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]);
    let b = build(EX2);
    assert_eq!(projective(&b, 4), simple(&b, 4));
    assert_eq!(projective(&b, 4).dim_vector(), &[0, 0, 0, 0, 1]);
}

#[test]
fn hom_dimensions() {
    let a = ex1();
    let s = standard_modules(&a);
    assert_eq!(hom_dim(&s.simples[0], &s.simples[1]).unwrap(), 0);
    assert_eq!(hom_dim(&s.projectives[1], &s.projectives[0]).unwrap(), 1);
    let mut all = s.simples.clone();
    all.extend(s.projectives.iter().cloned());
    all.extend(s.injectives.iter().cloned());
    for m in &all {
        for (i, p) in s.projectives.iter().enumerate() {
            assert_eq!(hom_dim(p, m).unwrap(), m.dim_at(i));
        }
    }
}

#[test]
fn kernels_and_cokernels() {
    let a = ex1();
    let s = standard_modules(&a);
    let p1 = &s.projectives[0];
    let onto = hom_basis(p1, &s.simples[0]).unwrap().remove(0);
    assert!(onto.is_epi());
    let (k, _) = onto.kernel();
    assert_eq!(k, s.simples[1]);

    let into = hom_basis(&s.projectives[2], &s.injectives[2]).unwrap().remove(0);
    assert!(into.is_mono());
    let (c, _) = into.cokernel();
    assert_eq!(c.dim_vector(), s.simples[1].dim_vector());

    let id = p1.identity();
    assert!(id.kernel().0.is_zero());
    for v in 0..3 {
        let (k, _) = into.kernel();
        let (im, _, _) = into.image();
        assert_eq!(k.dim_at(v) + im.dim_at(v), into.source().dim_at(v));
    }
}

#[test]
fn top_socle_radical() {
    let a = ex1();
    let s = standard_modules(&a);
    assert_eq!(s.projectives[0].top(), s.simples[0]);
    assert_eq!(s.injectives[2].socle(), s.simples[2]);
    let b = build(EX2);
    assert_eq!(projective(&b, 1).radical().dim_vector(), &[0, 0, 1, 1, 0]);
}

#[test]
fn duality() {
    let a = ex1();
    let op = a.opposite();
    for i in 0..3 {
        assert_eq!(projective(&a, i).dual(), injective(&op, i));
        assert_eq!(injective(&a, i).dual(), projective(&op, i));
        assert_eq!(simple(&a, i).dual(), simple(&op, i));
        let m = injective(&a, i);
        assert_eq!(m.dual().dual(), m);
    }
    assert_eq!(dual_regular(&a).dual(), regular(&op));
}

#[test]
fn gen_and_cogen() {
    let a = ex1();
    let s = standard_modules(&a);
    assert!(gen_membership(&s.simples[0], &s.projectives[0]).unwrap());
    let reg = regular(&a);
    for m in s.simples.iter().chain(&s.injectives) {
        assert!(gen_membership(m, &reg).unwrap());
    }
    let qt = Representation::direct_sum(&a, &[s.projectives[0].clone(), s.projectives[1].clone()]);
    assert!(cogen_membership(&s.simples[2], &qt).unwrap());
    assert!(!cogen_membership(&s.simples[0], &qt).unwrap());
    assert!(!gen_membership(&s.simples[2], &s.projectives[0]).unwrap());
}

#[test]
fn relations_are_enforced() {
    let a = ex1();
    let f = a.field();
    let one = crate::Matrix::identity(f, 1);
    let err = Representation::new(&a, vec![1, 1, 1], vec![one.clone(), one]).unwrap_err();
    assert!(matches!(err, crate::Error::Inconsistent(_)));
    let looped = build("vertices 1; arrows x:1->1; relations x*x*x;");
    let m = crate::Matrix::from_i64(looped.field(), 2, 2, &[0, 1, 0, 0]);
    assert!(Representation::new(&looped, vec![2], vec![m]).is_ok());
}
