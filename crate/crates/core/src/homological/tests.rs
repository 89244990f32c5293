use super::*;
use crate::algebra::tests::build;
use crate::module::{dual_regular, injective, standard_modules};

const EX1: &str = "vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;";
const EX2: &str =
    "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, c*d;";
const A2: &str = "vertices 1 2; arrows a:1->2;";
const LOOP: &str = "vertices 1; arrows x:1->1; relations x*x;";

#[test]
fn covers() {
    let a = build(EX1);
    let s = standard_modules(&a);
    let c = projective_cover(&s.simples[0]);
    assert_eq!(c.source(), &s.projectives[0]);
    for p in &s.projectives {
        let c = projective_cover(p);
        assert_eq!(c.source(), p);
        assert!(c.is_iso());
    }
    let b = build(EX2);
    let c = projective_cover(&injective(&b, 2));
    assert_eq!(cover_step(c.target()).multiplicities, vec![0, 1, 0, 0, 0]);
    assert!(c.is_epi());
    assert_eq!(c.source().dim_vector(), &[0, 1, 1, 1, 0]);
}

#[test]
fn syzygies() {
    let a = build(EX1);
    let s = standard_modules(&a);
    assert_eq!(syzygy(&s.injectives[0], 1), s.simples[1]);
    assert_eq!(cosyzygy(&s.projectives[2], 1).dim_vector(), &[0, 1, 0]);
    assert!(syzygy(&s.projectives[1], 1).is_zero());
    assert!(cosyzygy(&s.injectives[1], 1).is_zero());

    let b = build(EX2);
    let om = syzygy(&dual_regular(&b), 1);
    assert_eq!(om.dim_vector(), &[0, 1, 0, 1, 0]);
    assert_eq!(om.top_vector(), vec![0, 1, 0, 1, 0]);
}

#[test]
fn dimensions() {
    let a = build(EX1);
    let b = build(EX2);
    assert_eq!(projective_dimension(&simple(&a, 2)), HomDim::Finite(0));
    assert_eq!(projective_dimension(&simple(&b, 2)), HomDim::Finite(2));
    assert_eq!(injective_dimension(&simple(&a, 1)), HomDim::Finite(1));
    assert_eq!(global_dimension(&a), HomDim::Finite(2));
    assert_eq!(global_dimension(&build(A2)), HomDim::Finite(1));
    assert_eq!(global_dimension(&build(LOOP)), HomDim::Infinite);
}

#[test]
fn dominant_dimensions() {
    let a = build(EX1);
    let res = injective_resolution(&regular(&a));
    assert_eq!(res.terms, vec![vec![0, 1, 2], vec![0, 1, 0], vec![1, 0, 0]]);
    assert_eq!(dominant_dimension(&a), HomDim::Finite(2));
    assert_eq!(dominant_dimension(&build(A2)), HomDim::Finite(1));
    assert_eq!(dominant_dimension(&build(LOOP)), HomDim::Infinite);
}

#[test]
fn ext_groups() {
    let a = build(EX1);
    let s = standard_modules(&a);
    let all: Vec<_> = s.simples.iter().chain(&s.projectives).chain(&s.injectives).cloned().collect();
    for p in &s.projectives {
        for n in &all {
            assert_eq!(ext_dim(p, n, 1).unwrap(), 0);
        }
    }
    assert_eq!(ext_dim(&s.simples[0], &s.simples[1], 1).unwrap(), 1);
    assert_eq!(ext_dim(&s.simples[0], &s.simples[2], 2).unwrap(), 1);
    let t = Representation::direct_sum(
        &a,
        &[s.projectives[0].clone(), s.projectives[1].clone(), s.simples[1].clone()],
    );
    assert_eq!(ext_dim(&t, &t, 1).unwrap(), 0);
    assert_eq!(ext_dim(&s.simples[0], &s.simples[0], 0).unwrap(), 1);
}

#[test]
fn ext_counts_quiver_arrows_between_simples() {
    let b = build(EX2);
    let q = b.quiver();
    for i in 0..5 {
        for j in 0..5 {
            let arrows = q.arrows().iter().filter(|x| x.source == i && x.target == j).count();
            assert_eq!(ext_dim(&simple(&b, i), &simple(&b, j), 1).unwrap(), arrows);
        }
    }
}
