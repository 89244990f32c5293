use super::*;
use crate::algebra::tests::build;
use crate::decomposition::{describe, enumerate_indecomposables, Strategy};
use crate::module::{dual_regular, regular, simple};

const EX1: &str = "vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;";
const EX2: &str =
    "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, c*d;";
const A2: &str = "vertices 1 2; arrows a:1->2;";

fn library(a: &BoundQuiverAlgebra) -> IndecomposableLibrary {
    enumerate_indecomposables(a, &Strategy::NakayamaClosedForm).unwrap()
}

/// Isomorphism classes as a sorted list of standard names.
fn names(d: &Decomposition) -> Vec<String> {
    let mut v: Vec<String> = describe(d).split(" + ").map(str::to_string).collect();
    v.sort();
    v
}

#[test]
fn projective_injective_summands() {
    let a = build(EX1);
    let q = projective_injectives(&a);
    assert_eq!(q.count(), 2);
    assert!(q.modules().all(|m| is_injective(m) && is_projective(m)));
    assert!(is_isomorphic(&q.summands[0].0, &injective(&a, 1)) || is_isomorphic(&q.summands[1].0, &injective(&a, 1)));

    let b = build(EX2);
    let q = projective_injectives(&b);
    let expected = [0, 1, 3].map(|i| projective(&b, i));
    assert_eq!(q.count(), 3);
    assert!(expected.iter().all(|p| q.modules().any(|m| is_isomorphic(m, p))));

    let k = build("vertices 1;");
    let q = projective_injectives(&k);
    assert_eq!(q.count(), 1);
    assert!(is_isomorphic(&q.summands[0].0, &simple(&k, 0)));
}

#[test]
fn c_lambda() {
    let a = build(EX1);
    let q = Representation::direct_sum(&a, &projective_injectives(&a).flat());
    assert!(c_lambda_membership(&a, &q).unwrap().in_c());
    assert!(c_lambda_membership(&a, &simple(&a, 1)).unwrap().in_c());
    let w = c_lambda_membership(&a, &simple(&a, 0)).unwrap();
    assert!(w.generated);
    assert!(!w.cogenerated);
}

#[test]
fn canonical_tilting_example_one() {
    let a = build(EX1);
    let t = canonical_tilting_in_c(&a).unwrap().expect("domdim 2");
    let want = [projective(&a, 0), projective(&a, 1), simple(&a, 1)];
    assert_eq!(t.decomposition().count(), 3);
    assert!(want.iter().all(|w| t.decomposition().modules().any(|m| is_isomorphic(m, w))));
    assert!(t.certificate.certified());
    assert_eq!(t.certificate.max_dimension, HomDim::Finite(1));
    assert!(t.all_in_c());

    let c = canonical_cotilting_in_c(&a).unwrap().expect("domdim 2");
    assert!(c.certificate.certified());
    assert!(same_summands(t.decomposition(), c.decomposition()));
}

#[test]
fn canonical_modules_example_two() {
    let b = build(EX2);
    let t = canonical_tilting_in_c(&b).unwrap().expect("domdim 2");
    assert_eq!(t.decomposition().distinct(), 5);
    assert!(t.certificate.certified());
    assert!(t.all_in_c());
    // Ω⁻¹P(3) and Ω⁻¹P(5) are the cokernels of the envelopes
    for i in [2, 4] {
        let x = cosyzygy(&projective(&b, i), 1);
        assert!(t.decomposition().modules().any(|m| is_isomorphic(m, &x)));
    }

    let c = canonical_cotilting_in_c(&b).unwrap().expect("domdim 2");
    assert!(c.certificate.certified());
    assert!(c.all_in_c());
    for i in [1, 3] {
        assert!(c.decomposition().modules().any(|m| is_isomorphic(m, &simple(&b, i))));
    }
    assert!(same_summands(t.decomposition(), c.decomposition()));
}

#[test]
fn no_canonical_modules_for_a2() {
    let a = build(A2);
    assert_eq!(dominant_dimension(&a), HomDim::Finite(1));
    assert!(canonical_tilting_in_c(&a).unwrap().is_none());
    assert!(canonical_cotilting_in_c(&a).unwrap().is_none());
}

#[test]
fn verification() {
    let a = build(EX1);
    let reg = decompose(&regular(&a)).unwrap();
    assert!(verify_tilting(&a, &reg).unwrap().certified());
    let s2 = decompose(&simple(&a, 1)).unwrap();
    let cert = verify_tilting(&a, &s2).unwrap();
    assert!(!cert.certified());
    assert_eq!((cert.summand_count, cert.vertex_count), (1, 3));
    let b = build(EX2);
    let s3 = decompose(&simple(&b, 2)).unwrap();
    assert!(!verify_tilting(&b, &s3).unwrap().dimension_ok);
}

#[test]
fn torsion_classes() {
    let a = build(EX1);
    let t = canonical_tilting_in_c(&a).unwrap().unwrap().module;
    let pair = TorsionPair::new(&t);
    assert!(is_isomorphic(&pair.tau, &simple(&a, 2)));
    for i in 0..3 {
        assert_eq!(pair.assign(&injective(&a, i)).unwrap(), TorsionClass::Torsion);
    }
    assert_eq!(pair.assign(&simple(&a, 2)).unwrap(), TorsionClass::Free);
    assert_eq!(pair.assign(&projective(&a, 0)).unwrap(), TorsionClass::Torsion);
    assert_eq!(pair.assign(&Representation::zero(&a)).unwrap(), TorsionClass::BothZero);
    assert!(matches!(torsion_assignment(&t, &dual_regular(&a)), Err(Error::Decomposable(_))));
}

#[test]
fn splitting() {
    let a = build(EX1);
    let lib = library(&a);
    let t = canonical_tilting_in_c(&a).unwrap().unwrap().module;
    let (split, part) = is_splitting(&t, &lib).unwrap();
    assert!(split);
    assert_eq!(part.torsion.len() + part.free.len(), lib.len());
    assert_eq!(part.free.len(), 1);
    assert!(is_isomorphic(&lib.modules[part.free[0]], &simple(&a, 2)));

    let b = build(EX2);
    let lib = library(&b);
    let t = canonical_tilting_in_c(&b).unwrap().unwrap().module;
    let (split, part) = is_splitting(&t, &lib).unwrap();
    assert!(!split);
    assert!(!part.neither.is_empty());
    let s3 = lib.position(&simple(&b, 2)).unwrap();
    assert!(part.free.contains(&s3));

    let (split, part) = is_splitting(&regular(&b), &lib).unwrap();
    assert!(split);
    assert!(part.free.is_empty());
}

#[test]
fn splitting_criterion() {
    let a = build(EX1);
    let t = canonical_tilting_in_c(&a).unwrap().unwrap().module;
    let c = check_splitting_criterion(&t, &library(&a)).unwrap();
    assert_eq!(c, SplittingCriterion { splitting: true, max_pd_on_f: HomDim::Finite(0), consistent: true });

    let b = build(EX2);
    let t = canonical_tilting_in_c(&b).unwrap().unwrap().module;
    let c = check_splitting_criterion(&t, &library(&b)).unwrap();
    assert_eq!(c, SplittingCriterion { splitting: false, max_pd_on_f: HomDim::Finite(2), consistent: true });

    let h = build(A2);
    let c = check_splitting_criterion(&regular(&h), &library(&h)).unwrap();
    assert_eq!(c, SplittingCriterion { splitting: true, max_pd_on_f: HomDim::Finite(0), consistent: true });
}

#[test]
fn auslander_detection() {
    let a = auslander_check(&build(EX1)).unwrap();
    assert!(a.is_auslander);
    assert_eq!(a.tilting_cotilting, Some(true));
    assert!(is_auslander(&build(EX2)).unwrap());
    let h = auslander_check(&build(A2)).unwrap();
    assert!(!h.is_auslander);
    assert_eq!(h.dom_dim, HomDim::Finite(1));
}

#[test]
fn verdicts() {
    let a = build(EX1);
    let v = tilted_verdict(&a).unwrap();
    assert_eq!(v.verdict, Verdict::Tilted);
    assert_eq!(names(&v.omega_da), ["S(2)"]);
    assert_eq!(names(&v.tau_omega_da), ["S(3)=P(3)"]);
    assert_eq!(v.pd_of_tau_omega_da, HomDim::Finite(0));

    let b = build(EX2);
    let v = tilted_verdict(&b).unwrap();
    assert_eq!(v.verdict, Verdict::NotTilted);
    assert_eq!(names(&v.omega_da), ["S(2)", "S(4)"]);
    assert_eq!(names(&v.tau_omega_da), ["S(3)", "S(5)=P(5)"]);
    assert_eq!(v.pd_of_tau_omega_da, HomDim::Finite(2));

    assert_eq!(tilted_verdict(&build(A2)).unwrap().verdict, Verdict::NotApplicable);

    let k = tilted_verdict(&build("vertices 1;")).unwrap();
    assert_eq!(k.verdict, Verdict::Tilted);
    assert_eq!(k.note.as_deref(), Some("hereditary"));
}

#[test]
fn summands_of_tau_omega_da_have_injective_dimension_two() {
    for text in [EX1, EX2] {
        let v = tilted_verdict(&build(text)).unwrap();
        for m in v.tau_omega_da.modules().filter(|m| !is_injective(m)) {
            assert_eq!(injective_dimension(m), HomDim::Finite(2));
        }
    }
}

#[test]
fn quasi_tilted() {
    assert!(is_quasi_tilted(&library(&build(EX1))).quasi_tilted);
    let b = build(EX2);
    let lib = library(&b);
    let q = is_quasi_tilted(&lib);
    assert!(!q.quasi_tilted);
    assert!(q.offenders.contains(&lib.position(&simple(&b, 2)).unwrap()));
    assert!(is_quasi_tilted(&library(&build(A2))).quasi_tilted);
}
