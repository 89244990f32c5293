use super::*;
use crate::algebra::tests::build;
use crate::algebra::BuildOptions;
use crate::homological::syzygy;
use crate::module::{dual_regular, injective, projective, simple, Representation};

const EX1: &str = "vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;";
const EX2: &str =
    "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, c*d;";
const A2: &str = "vertices 1 2; arrows a:1->2;";
const LOOP: &str = "vertices 1; arrows x:1->1; relations x*x;";

#[test]
fn endomorphism_dimensions() {
    let a = build(EX1);
    assert_eq!(endomorphism_algebra(&simple(&a, 0)).unwrap().dim(), 1);
    let p = projective(&a, 0);
    let e = endomorphism_algebra(&p.power(2)).unwrap();
    assert_eq!(e.dim(), 4);
    assert_eq!(e.top_dim(), 4);
    let l = build(LOOP);
    let m = Representation::direct_sum(&l, &[simple(&l, 0), projective(&l, 0)]);
    let e = endomorphism_algebra(&m).unwrap();
    assert_eq!(e.dim(), 5);
    assert_eq!(e.top_dim(), 2);
}

#[test]
fn small_characteristic_is_rejected() {
    let a = build("field gf(3); vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;");
    let err = endomorphism_algebra(&dual_regular(&a)).unwrap_err();
    assert!(matches!(err, crate::Error::FieldTooSmall { prime: 3, dim: 5 }));
}

#[test]
fn decompositions() {
    let a = build(EX1);
    let m = Representation::direct_sum(&a, &[projective(&a, 0), projective(&a, 0), simple(&a, 1)]);
    let d = decompose(&m).unwrap();
    assert_eq!(d.count(), 3);
    assert_eq!(describe(&d), "S(2)^1".replace("^1", "") + " + P(1)=I(2)^2");
    let d = decompose(&dual_regular(&a)).unwrap();
    assert_eq!(d.count(), 3);
    assert_eq!(d.distinct(), 3);
    let b = build(EX2);
    let d = decompose(&projective(&b, 1).radical()).unwrap();
    assert_eq!(d.count(), 1);
    assert!(is_isomorphic(&d.summands[0].0, &projective(&b, 2)));
    let om = decompose(&syzygy(&dual_regular(&b), 1)).unwrap();
    assert_eq!(describe(&om), "S(4) + S(2)");
}

#[test]
fn isomorphism_tests() {
    let a = build(EX1);
    let p1 = projective(&a, 0);
    assert!(is_isomorphic(&p1, &p1));
    assert!(is_isomorphic(&p1, &injective(&a, 1)));
    let ss = Representation::direct_sum(&a, &[simple(&a, 0), simple(&a, 1)]);
    assert!(!is_isomorphic(&ss, &p1));
    assert_eq!(standard_label(&simple(&a, 2)).as_deref(), Some("S(3)=P(3)"));
}

fn lib_sizes(text: &str) -> (usize, usize) {
    let a = build(text);
    let closed = enumerate_indecomposables(&a, &Strategy::NakayamaClosedForm).unwrap();
    let ar = enumerate_indecomposables(&a, &Strategy::BoundedExhaustive { max_total_dim: DEFAULT_MAX_DIM }).unwrap();
    for m in &closed.modules {
        assert!(ar.position(m).is_some());
    }
    (closed.len(), ar.len())
}

#[test]
fn enumeration() {
    assert_eq!(lib_sizes(EX1), (5, 5));
    assert_eq!(lib_sizes(A2), (3, 3));
    assert_eq!(lib_sizes(LOOP), (2, 2));
    assert_eq!(lib_sizes(EX2), (10, 10));
    let q = build("field rationals; vertices 1 2; arrows a:1->2;");
    assert!(matches!(
        enumerate_indecomposables(&q, &Strategy::BoundedExhaustive { max_total_dim: 12 }),
        Err(crate::Error::Unsupported(_))
    ));
}

#[test]
fn non_nakayama_enumeration() {
    // D4 with one sink: 12 indecomposables (positive roots)
    let a = build("vertices 1 2 3 4; arrows a:1->4 b:2->4 c:3->4;");
    let lib = enumerate_indecomposables(&a, &Strategy::BoundedExhaustive { max_total_dim: 12 }).unwrap();
    assert_eq!(lib.len(), 12);
    assert!(lib.warnings.is_empty());
}

#[test]
fn auslander_tower() {
    let a2 = build(A2);
    let lib = enumerate_indecomposables(&a2, &Strategy::NakayamaClosedForm).unwrap();
    let aus = auslander_algebra(&lib, &BuildOptions::default()).unwrap();
    assert_eq!(aus.dim(), 5);
    assert!(presentations_isomorphic(&aus, &build(EX1)));

    let ex1 = build(EX1);
    let lib = enumerate_indecomposables(&ex1, &Strategy::NakayamaClosedForm).unwrap();
    let aus = auslander_algebra(&lib, &BuildOptions::default()).unwrap();
    assert_eq!(aus.dim(), 10);
    assert!(presentations_isomorphic(&aus, &build(EX2)));
    assert!(!presentations_isomorphic(&aus, &build("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, b*c;")));

    let l = build(LOOP);
    let lib = enumerate_indecomposables(&l, &Strategy::NakayamaClosedForm).unwrap();
    let aus = auslander_algebra(&lib, &BuildOptions::default()).unwrap();
    assert_eq!((aus.vertex_count(), aus.quiver().arrows().len(), aus.dim()), (2, 2, 5));

    let k = build("vertices 1;");
    let lib = enumerate_indecomposables(&k, &Strategy::NakayamaClosedForm).unwrap();
    let aus = auslander_algebra(&lib, &BuildOptions::default()).unwrap();
    assert_eq!((aus.vertex_count(), aus.dim()), (1, 1));
}

#[test]
fn non_basic_library_is_rejected() {
    let a = build(A2);
    let lib = IndecomposableLibrary {
        algebra: a.clone(),
        modules: vec![projective(&a, 0), injective(&a, 0).dual().dual(), projective(&a, 0)],
        provenance: Provenance::UserSupplied,
        warnings: Vec::new(),
    };
    assert!(matches!(
        auslander_algebra(&lib, &BuildOptions::default()),
        Err(crate::Error::NonBasic(0, 2))
    ));
}

#[test]
fn library_json_round_trip() {
    let a = build(EX1);
    let lib = enumerate_indecomposables(&a, &Strategy::NakayamaClosedForm).unwrap();
    let text = library_to_json(&lib);
    let back = library_from_json(&a, &text).unwrap();
    assert_eq!(back.modules, lib.modules);
    assert_eq!(back.provenance, Provenance::NakayamaClosedForm);
    let other = build(EX2);
    assert!(matches!(library_from_json(&other, &text), Err(crate::Error::Library(_))));
}
