use super::*;
use crate::exactfield::{Field, PrimeField, Rationals};
use crate::hhcomplex::DEFAULT_SIZE_CAP;
use crate::hopfcore::{cyclic_table, group_algebra, sweedler4, trivial_k};
use crate::modact::{dual_numbers, group_z2_on_dual_numbers, sweedler_on_dual_numbers};

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn sw_dual() -> ModuleAlgebra<PrimeField> {
    let k = fp();
    sweedler_on_dual_numbers(&k, sweedler4(&k)).unwrap()
}

#[test]
fn trivial_and_adjoint_modules_are_yd() {
    let k = fp();
    for h in [sweedler4(&k), group_algebra(&k, &cyclic_table(3)).unwrap()] {
        let r = validate_yd(&h, &YDModule::trivial(&h)).unwrap();
        assert!(r.passed(), "{:?}", r.failures().next());
        let r = validate_yd(&h, &YDModule::adjoint_regular(&h).unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.failures().next());
    }
}

#[test]
fn grouplike_coaction_with_trivial_action_is_not_yd_for_sweedler() {
    let k = fp();
    let h = sweedler4(&k);
    let g = h.alg().names().iter().position(|n| n == "g").unwrap();
    let triv = YDModule::trivial(&h);
    let m = YDModule::new(&h, vec!["1".into()], triv.action_table().to_vec(), vec![vec![(k.one(), g, 0)]]).unwrap();
    let r = validate_yd(&h, &m).unwrap();
    assert!(!r.passed());
    assert!(r.failures().any(|f| f.name.starts_with("(bm)")));
    let ma = sw_dual();
    let (bc, hom) = one_object(&ma, &EquivariantBimodule::regular(&ma));
    assert!(matches!(twist_bifunctor(&bc, &m, &hom), Err(Error::ValidationFailure(_))));
}

#[test]
fn twisted_bifunctor_passes_the_bifunctor_suite() {
    let ma = sw_dual();
    let (bc, hom) = one_object(&ma, &EquivariantBimodule::regular(&ma));
    let m = YDModule::adjoint_regular(ma.hopf()).unwrap();
    let tw = twist_bifunctor(&bc, &m, &hom).unwrap();
    assert!(tw.report.passed());
    assert_eq!(tw.bifunctor.dim(0, 0), 8);
}

#[test]
fn trivial_twist_is_identity() {
    let c = check_trivial_twist(&sw_dual(), 3, DEFAULT_SIZE_CAP).unwrap().finish();
    assert!(c.passed, "{:?}", c.witness);
    let k = fp();
    let z2 = group_z2_on_dual_numbers(&k, group_algebra(&k, &cyclic_table(2)).unwrap()).unwrap();
    assert!(check_trivial_twist(&z2, 3, DEFAULT_SIZE_CAP).unwrap().finish().passed);
}

#[test]
fn trivial_twist_table_matches_untwisted_quotient() {
    let ma = sw_dual();
    let t = twisted_table(&ma, &YDModule::trivial(ma.hopf()), 3).unwrap();
    let k = fp();
    let v = EquivariantBimodule::regular(&ma);
    let q = crate::hhcomplex::quotient_complex(&ma, &v, 3, QuotientMode::CoinvariantQch, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(t.dims(), q.quotient.homology_dims(&k, 3).unwrap().dims());
}

#[test]
fn twisted_morita_rank_two() {
    let ma = sw_dual();
    let m = YDModule::adjoint_regular(ma.hopf()).unwrap();
    let r = twisted_morita(&ma, &m, 2, 2, DEFAULT_SIZE_CAP).unwrap();
    assert!(r.passed, "{:?}", r.first_failure());
}

#[test]
fn golden_adjoint_twist_on_dual_numbers() {
    let ma = sw_dual();
    let m = YDModule::adjoint_regular(ma.hopf()).unwrap();
    let t = twisted_complex(&ma, &m, 3, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(t.data.complex.complex.dims(), &[8, 16, 32, 64, 128]);
    assert_eq!(t.table.dims(), vec![0, 0, 0, 0]);
    let q = Rationals;
    let ma_q = sweedler_on_dual_numbers(&q, sweedler4(&q)).unwrap();
    let m_q = YDModule::adjoint_regular(ma_q.hopf()).unwrap();
    assert_eq!(twisted_table(&ma_q, &m_q, 3).unwrap().dims(), vec![0, 0, 0, 0]);
}

#[test]
fn regular_yd_over_trivial_bialgebra_is_ordinary_hochschild() {
    let k = Rationals;
    let ma = ModuleAlgebra::trivial_action(trivial_k(&k), dual_numbers(&k));
    let m = YDModule::adjoint_regular(ma.hopf()).unwrap();
    assert_eq!(m.dim(), 1);
    assert_eq!(twisted_table(&ma, &m, 3).unwrap().dims(), vec![2, 1, 1, 1]);
}


#[test]
fn twisted_morita_group_z2() {
    let k = fp();
    let ma = group_z2_on_dual_numbers(&k, group_algebra(&k, &cyclic_table(2)).unwrap()).unwrap();
    let m = YDModule::adjoint_regular(ma.hopf()).unwrap();
    let r = twisted_morita(&ma, &m, 2, 2, DEFAULT_SIZE_CAP).unwrap();
    assert!(r.passed, "{:?}", r.first_failure());
    assert_eq!(r.tables.last().unwrap().dims(), vec![2, 1, 1]);
}
