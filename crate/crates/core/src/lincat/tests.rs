use super::*;
use crate::exactfield::{Field, PrimeField, Rationals};
use crate::hhcomplex::{quotient_complex, QuotientMode, DEFAULT_SIZE_CAP};
use crate::hopfcore::{cyclic_table, group_algebra, sweedler4, trivial_k};
use crate::modact::*;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn sw_dual() -> ModuleAlgebra<PrimeField> {
    let k = fp();
    sweedler_on_dual_numbers(&k, sweedler4(&k)).unwrap()
}

#[test]
fn one_object_from_regular_bimodule_validates() {
    let ma = sw_dual();
    let (bc, hf) = one_object(&ma, &EquivariantBimodule::regular(&ma));
    assert!(validate_bcategory(&bc).passed());
    let r = validate_bifunctor(&bc, &hf);
    assert!(r.passed(), "{:?}", r.failures().next());
}

#[test]
fn module_category_rank_one_is_the_algebra() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1]).unwrap();
    let (bc, _) = one_object(&ma, &EquivariantBimodule::regular(&ma));
    let k = fp();
    for x in 0..2 {
        for y in 0..2 {
            assert_eq!(mc.bcat.cat.compose_basis(0, 0, 0, x, y), bc.cat.compose_basis(0, 0, 0, x, y));
            for b in 0..4 {
                let e = vec![(y, k.one())];
                assert_eq!(mc.bcat.act(0, 0, &[(b, k.one())], &e), bc.act(0, 0, &[(b, k.one())], &e));
            }
        }
    }
}

#[test]
fn module_category_validates() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    assert_eq!(mc.bcat.cat.hom_dim(0, 1), 4);
    let r = validate_bcategory(&mc.bcat);
    assert!(r.passed(), "{:?}", r.failures().next());
    let r = validate_bifunctor(&mc.bcat, &mc.hom);
    assert!(r.passed(), "{:?}", r.failures().next());
    assert!(check_conjugation(&ma, &mc).unwrap().finish().passed);
}

#[test]
fn mutated_composition_fails() {
    let k = Rationals;
    let ma = ModuleAlgebra::trivial_action(trivial_k(&k), dual_numbers(&k));
    let mc = build_module_category(&ma, &[1]).unwrap();
    let cat = &mc.bcat.cat;
    let mut compose: Vec<Vec<_>> = vec![(0..4).map(|p| cat.compose_basis(0, 0, 0, p / 2, p % 2).clone()).collect()];
    // x∘1 = 1 instead of x: (x∘1)∘x = x but x∘(1∘x) = 0
    compose[0][2] = vec![(0, k.one())];
    let bad = FiniteLinearCategory::new(&k, vec!["A".into()], vec![vec![2]], compose, vec![cat.identity(0).clone()]).unwrap();
    let r = bad.validate();
    assert!(!r.passed());
    assert!(r.check("composition associative").unwrap().witness.is_some());
}

#[test]
fn one_object_collapse_matches_algebra_pipeline() {
    let ma = sw_dual();
    let v = EquivariantBimodule::regular(&ma);
    for mode in [QuotientMode::Qch, QuotientMode::CoinvariantQch] {
        let r = compare_one_object(&ma, &v, 3, mode, DEFAULT_SIZE_CAP).unwrap();
        assert!(r.passed, "{:?}", r.first_failure());
    }
    // dual numbers are commutative, and the quotient tables match the
    // direct pipeline on (A, A)
    let (bc, hf) = one_object(&ma, &v);
    let cat = cat_quotient(&bc, &hf, 3, QuotientMode::Qch, DEFAULT_SIZE_CAP).unwrap();
    let direct = quotient_complex(&ma, &v, 3, QuotientMode::Qch, DEFAULT_SIZE_CAP).unwrap();
    let k = fp();
    assert_eq!(
        cat.quotient.homology_dims(&k, 3).unwrap().dims(),
        direct.quotient.homology_dims(&k, 3).unwrap().dims()
    );
}

#[test]
fn category_complex_dimensions_and_d_squared() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    let cc = build_cat_ch(&mc.bcat, &mc.hom, 3, DEFAULT_SIZE_CAP).unwrap();
    let dims = cc.complex.dims().to_vec();
    // Σ_{X₀,X₁} dim ℋ(X₀,X₁)·dim Hom(X₁,X₀) with dims 2,4,4,8
    assert_eq!(dims[1], 2 * 2 + 4 * 4 + 4 * 4 + 8 * 8);
    assert_eq!(dims, vec![10, 100, 1000, 10000]);
    let k = fp();
    assert!(cc.complex.check_d_squared(&k).finish().passed);
    assert!(cc.complex.check_presimplicial(&k).finish().passed);
}

#[test]
fn cocommutative_category_has_no_obstruction() {
    let k = Rationals;
    let ma = group_z2_on_dual_numbers(&k, group_algebra(&k, &cyclic_table(2)).unwrap()).unwrap();
    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    let q = cat_quotient(&mc.bcat, &mc.hom, 1, QuotientMode::Qch, DEFAULT_SIZE_CAP).unwrap();
    assert!(q.quotient.obstruction_dims().iter().all(|&d| d == 0));
}

#[test]
fn invariant_subcategory_is_closed() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    let inv = invariant_subcategory(&mc.bcat);
    assert!(inv.check_closed(&mc.bcat).finish().passed);
    // invariants of A under sweedler4 on dual numbers: span{1}
    assert_eq!(inv.bases[0].len(), 1);
}

#[test]
fn cofinality_into_largest_object() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    let retr = mc.retraction_to_largest();
    let r = cofinality_oracle(&mc.bcat, &mc.hom, &[1], &retr, 2, QuotientMode::CoinvariantQch, DEFAULT_SIZE_CAP).unwrap();
    assert!(r.passed, "{:?}", r.first_failure());
    assert!(r.notes.is_empty());
}

#[test]
fn cofinality_degenerate_and_rejected() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1]).unwrap();
    let retr = mc.retraction_to(0);
    let r = cofinality_oracle(&mc.bcat, &mc.hom, &[0], &retr, 2, QuotientMode::Qch, DEFAULT_SIZE_CAP).unwrap();
    assert!(r.passed, "{:?}", r.first_failure());

    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    // retracting A² onto A cannot split
    let bad = mc.retraction_to(0);
    let err = cofinality_oracle(&mc.bcat, &mc.hom, &[0], &bad, 1, QuotientMode::Qch, DEFAULT_SIZE_CAP).unwrap_err();
    assert!(matches!(err, crate::Error::Precondition(_)));
}

#[test]
fn free_generation_by_rank_one() {
    let ma = sw_dual();
    let mc = build_module_category(&ma, &[1, 2]).unwrap();
    let dec = mc.decomposition_into_rank_one().unwrap();
    let r = free_generation_oracle(&mc.bcat, &mc.hom, &[0], &dec, 2, QuotientMode::CoinvariantQch, DEFAULT_SIZE_CAP).unwrap();
    assert!(r.passed, "{:?}", r.first_failure());
    assert_eq!(r.tables[0].dims(), r.tables[1].dims());
}
