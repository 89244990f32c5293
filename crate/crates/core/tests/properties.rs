use proptest::prelude::*;

use tiltcheck::algebra::print_presentation;
use tiltcheck::auslander_reiten::{ar_inverse_translate, ar_translate, stable_hom_dim, StableMode};
use tiltcheck::corpus::Kupisch;
use tiltcheck::decomposition::{
    auslander_algebra, decompose, enumerate_indecomposables, is_isomorphic, IndecomposableLibrary, Strategy as Enumeration,
};
use tiltcheck::homological::{
    dominant_dimension, ext_dim, global_dimension, injective_dimension, is_projective, projective_dimension,
};
use tiltcheck::report::{analyze, default_library, to_json};
use tiltcheck::tilting::{canonical_tilting_in_c, is_auslander, tilted_verdict};
use tiltcheck::{build_algebra, parse_algebra, BoundQuiverAlgebra, BuildOptions, FieldSpec, Representation};

/// Linear Kupisch series with `n` vertices and lengths at most `cap`.
fn linear_kupisch(max_n: usize, cap: usize) -> impl Strategy<Value = Kupisch> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(2..=cap, n.saturating_sub(1))))
        .prop_map(|(n, raw)| {
            let mut c = vec![1; n];
            for i in (0..n - 1).rev() {
                c[i] = raw[i].min(c[i + 1] + 1);
            }
            Kupisch { cyclic: false, lengths: c }
        })
}

fn cyclic_kupisch(max_n: usize, cap: usize) -> impl Strategy<Value = Kupisch> {
    prop::collection::vec(2..=cap, 2..=max_n)
        .prop_map(|c| Kupisch { cyclic: true, lengths: c })
        .prop_filter("Kupisch condition", Kupisch::is_valid)
}

fn nakayama(max_n: usize, cap: usize) -> impl Strategy<Value = Kupisch> {
    prop_oneof![3 => linear_kupisch(max_n, cap), 1 => cyclic_kupisch(max_n, cap)]
}

fn algebra(k: &Kupisch, field: FieldSpec) -> BoundQuiverAlgebra {
    build_algebra(&k.presentation(field).unwrap(), &BuildOptions::default()).unwrap()
}

fn library(a: &BoundQuiverAlgebra) -> IndecomposableLibrary {
    enumerate_indecomposables(a, &Enumeration::NakayamaClosedForm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kupisch_dimension(k in nakayama(7, 4)) {
        let a = algebra(&k, FieldSpec::default());
        prop_assert_eq!(a.dim(), k.lengths.iter().sum::<usize>());
        prop_assert_eq!(library(&a).len(), a.dim());
    }

    #[test]
    fn dsl_round_trip(k in nakayama(6, 4)) {
        let p = k.presentation(FieldSpec::default()).unwrap();
        let text = print_presentation(&p);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(print_presentation(&back), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn ar_formula(k in nakayama(5, 4)) {
        let a = algebra(&k, FieldSpec::default());
        let lib = library(&a);
        for x in &lib.modules {
            let tx = ar_translate(x);
            for y in &lib.modules {
                let ext = ext_dim(x, y, 1).unwrap();
                prop_assert_eq!(ext, stable_hom_dim(y, &tx, StableMode::ModuloInjectives).unwrap());
            }
        }
    }

    #[test]
    fn translates_are_inverse_on_non_projectives(k in nakayama(6, 4)) {
        let a = algebra(&k, FieldSpec::default());
        for x in library(&a).modules.iter().filter(|x| !is_projective(x)) {
            let t = ar_translate(x);
            prop_assert!(!t.is_zero());
            prop_assert!(is_isomorphic(&ar_inverse_translate(&t), x));
        }
    }

    #[test]
    fn dimensions_bounded_by_global_dimension(k in linear_kupisch(7, 4)) {
        let a = algebra(&k, FieldSpec::default());
        let gl = global_dimension(&a);
        prop_assert!(gl.finite().is_some());
        for x in &library(&a).modules {
            prop_assert!(projective_dimension(x) <= gl);
            prop_assert!(injective_dimension(x) <= gl);
        }
    }

    #[test]
    fn canonical_tilting_exists_iff_dominant_dimension_two(k in nakayama(7, 4)) {
        let a = algebra(&k, FieldSpec::default());
        let t = canonical_tilting_in_c(&a).unwrap();
        prop_assert_eq!(t.is_some(), dominant_dimension(&a).is_at_least(2));
        if let Some(t) = t {
            prop_assert!(t.certificate.certified());
            prop_assert!(t.all_in_c());
        }
    }

    #[test]
    fn random_sums_decompose_exactly(k in linear_kupisch(5, 3), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let a = algebra(&k, FieldSpec::default());
        let lib = library(&a);
        let mut want = vec![0usize; lib.len()];
        let parts: Vec<Representation> = picks
            .iter()
            .map(|p| {
                let i = p.index(lib.len());
                want[i] += 1;
                lib.modules[i].clone()
            })
            .collect();
        let d = decompose(&Representation::direct_sum(&a, &parts)).unwrap();
        let mut got = vec![0usize; lib.len()];
        for (x, n) in &d.summands {
            got[lib.position(x).unwrap()] += n;
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn reports_are_deterministic(k in nakayama(5, 3)) {
        let a = algebra(&k, FieldSpec::default());
        let lib = default_library(&a).unwrap();
        let first = to_json(&analyze(&a, lib.as_ref(), false).unwrap());
        let second = to_json(&analyze(&a, lib.as_ref(), false).unwrap());
        prop_assert_eq!(first, second);
    }

    #[test]
    fn verdict_is_field_independent(k in linear_kupisch(5, 3)) {
        let p = tilted_verdict(&algebra(&k, FieldSpec::default())).unwrap();
        let q = tilted_verdict(&algebra(&k, FieldSpec::Rationals)).unwrap();
        prop_assert_eq!(p.verdict, q.verdict);
        prop_assert_eq!(p.pd_of_tau_omega_da, q.pd_of_tau_omega_da);
        let dims = |d: &tiltcheck::decomposition::Decomposition| {
            let mut v: Vec<Vec<usize>> = d.flat().iter().map(|m| m.dim_vector().to_vec()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(dims(&p.tau_omega_da), dims(&q.tau_omega_da));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn auslander_algebras_are_auslander(k in linear_kupisch(4, 3)) {
        let a = algebra(&k, FieldSpec::default());
        let lib = library(&a);
        let aus = auslander_algebra(&lib, &BuildOptions::default()).unwrap();
        prop_assert_eq!(aus.vertex_count(), lib.len());
        prop_assert!(global_dimension(&aus).is_at_most(2));
        prop_assert!(dominant_dimension(&aus).is_at_least(2));
        prop_assert!(is_auslander(&aus).unwrap());
        let text = print_presentation(aus.presentation());
        let again = build_algebra(&parse_algebra(&text).unwrap(), &BuildOptions::default()).unwrap();
        prop_assert_eq!(again.dim(), aus.dim());
    }

    #[test]
    fn enumeration_strategies_agree(k in linear_kupisch(4, 3)) {
        let a = algebra(&k, FieldSpec::default());
        let closed = library(&a);
        let ar = enumerate_indecomposables(&a, &Enumeration::BoundedExhaustive { max_total_dim: 12 }).unwrap();
        prop_assert_eq!(closed.len(), ar.len());
        for m in &closed.modules {
            prop_assert!(ar.position(m).is_some());
        }
    }
}
