use super::*;
use crate::algebra::tests::build;
use crate::homological::{is_injective, is_projective, syzygy, ext_dim};
use crate::module::{dual_regular, hom_basis, injective, projective, simple, standard_modules};

const EX1: &str = "vertices 1 2 3; arrows a:1->2 b:2->3; relations a*b;";
const EX2: &str =
    "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5; relations a*b, c*d;";

#[test]
fn nakayama_functor() {
    let a = build(EX1);
    let p2 = ProjectiveSum::from_multiplicities(&a, &[0, 1, 0]);
    let p3 = ProjectiveSum::from_multiplicities(&a, &[0, 0, 1]);
    let incl = hom_basis(&p3.module, &p2.module).unwrap().remove(0);
    let nu = nakayama_on_projectives(&incl, &p3, &p2).unwrap();
    assert_eq!(nu.source(), &injective(&a, 2));
    assert_eq!(nu.target(), &injective(&a, 1));
    assert!(!nu.is_zero());
    let id = nakayama_on_projectives(&p2.module.identity(), &p2, &p2).unwrap();
    assert!(id.is_iso() && id.source() == &injective(&a, 1));
    let zero = Morphism::zero(&p3.module, &p2.module);
    assert!(nakayama_on_projectives(&zero, &p3, &p2).unwrap().is_zero());
}

#[test]
fn translates() {
    let a = build(EX1);
    assert_eq!(ar_translate(&simple(&a, 1)), simple(&a, 2));
    assert!(ar_translate(&projective(&a, 0)).is_zero());
    assert_eq!(ar_inverse_translate(&simple(&a, 2)), simple(&a, 1));
    assert!(ar_inverse_translate(&injective(&a, 0)).is_zero());

    let b = build(EX2);
    let om = syzygy(&dual_regular(&b), 1);
    let t = ar_translate(&om);
    assert_eq!(t.dim_vector(), &[0, 0, 1, 0, 1]);
    assert_eq!(t.socle_vector(), vec![0, 0, 1, 0, 1]);
}

#[test]
fn translates_vanish_on_projectives_and_injectives() {
    for text in [EX1, EX2] {
        let a = build(text);
        let s = standard_modules(&a);
        for p in &s.projectives {
            assert!(ar_translate(p).is_zero());
        }
        for i in &s.injectives {
            assert!(ar_inverse_translate(i).is_zero());
        }
        for x in &s.simples {
            if !is_projective(x) {
                assert_eq!(ar_inverse_translate(&ar_translate(x)).dim_vector(), x.dim_vector());
            }
            if !is_injective(x) {
                assert_eq!(ar_translate(&ar_inverse_translate(x)).dim_vector(), x.dim_vector());
            }
        }
    }
}

#[test]
fn stable_homs() {
    let a = build(EX1);
    let s = standard_modules(&a);
    let all: Vec<_> = s.simples.iter().chain(&s.projectives).chain(&s.injectives).cloned().collect();
    for n in &all {
        for p in &s.projectives {
            assert_eq!(stable_hom_dim(p, n, StableMode::ModuloProjectives).unwrap(), 0);
        }
        assert_eq!(stable_hom_dim(&s.injectives[0], n, StableMode::ModuloInjectives).unwrap(), 0);
    }
    let s2 = &s.simples[1];
    assert_eq!(
        stable_hom_dim(s2, &ar_translate(s2), StableMode::ModuloInjectives).unwrap(),
        ext_dim(s2, s2, 1).unwrap()
    );
}
