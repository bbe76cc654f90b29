use hhcalc_core::exactfield::{
    format_ratio, kernel_basis, parse_ratio, quotient_data, rank, span_reduce, Field, LinearMap, Matrix, PrimeField,
    Rationals,
};
use hhcalc_core::hhcomplex::{
    build_ch, ch_action, complex_homology, ordinary_coinvariant_homology, quotient_complex, QuotientMode,
    DEFAULT_SIZE_CAP,
};
use hhcalc_core::hopfcore::{cyclic_table, group_algebra, trivial_k, StructureAlgebra};
use hhcalc_core::lincat::{build_module_category, validate_bcategory, validate_bifunctor};
use hhcalc_core::modact::{crossed_product, sweedler_on_dual_numbers, EquivariantBimodule, ModuleAlgebra};
use hhcalc_core::ydtwist::{twist_bifunctor, validate_yd, YDModule};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn q_matrix(rows: &[Vec<i64>], cols: usize) -> Matrix<BigRational> {
    let k = Rationals;
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect(), cols)
}

/// `k[y]/(y^m)` on the monomial basis.
fn truncated<K: Field>(k: &K, m: usize) -> StructureAlgebra<K> {
    let names = (0..m).map(|i| format!("y^{i}")).collect();
    let mult = (0..m * m).map(|p| if p / m + p % m < m { vec![(p / m + p % m, k.one())] } else { vec![] }).collect();
    StructureAlgebra::new(k, names, mult, vec![(0, k.one())]).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (prop::collection::vec(prop::collection::vec(-3i64..4, c), r), Just(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..30) {
        let k = Rationals;
        let (a, b) = (k.from_i64(a), k.from_i64(b));
        let c = k.inv(&k.from_i64(c)).unwrap();
        prop_assert_eq!(k.mul(&k.add(&a, &b), &c), k.add(&k.mul(&a, &c), &k.mul(&b, &c)));
        prop_assert_eq!(k.sub(&k.add(&a, &b), &b), a.clone());
        if !k.is_zero(&a) {
            prop_assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
        }
    }

    #[test]
    fn prime_field_inverse_and_reduction(x in 1i64..100_000, y in -100_000i64..100_000) {
        let k = fp();
        let a = k.from_i64(x);
        if !k.is_zero(&a) {
            prop_assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
        }
        let r = BigRational::new(BigInt::from(y), BigInt::from(x));
        let e = k.from_ratio(&r);
        if x % 32003 != 0 {
            let e = e.unwrap();
            prop_assert_eq!(k.mul(&e, &a), k.from_i64(y));
        }
    }

    #[test]
    fn ratio_text_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let r = BigRational::new(BigInt::from(n), BigInt::from(d));
        prop_assert_eq!(parse_ratio(&format_ratio(&r)).unwrap(), r);
    }

    #[test]
    fn rank_nullity((rows, cols) in matrix_strategy()) {
        let k = Rationals;
        let m = q_matrix(&rows, cols);
        let ker = kernel_basis(&k, &m);
        prop_assert_eq!(rank(&k, &m) + ker.dim(), cols);
        for v in &ker.basis {
            prop_assert!(m.mul_vec(&k, v).iter().all(|x| k.is_zero(x)));
        }
        // the same integer matrix has no larger rank modulo p
        let p = fp();
        let mp = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| p.from_i64(x)).collect()).collect(), cols);
        prop_assert!(rank(&p, &mp) <= rank(&k, &m));
    }

    #[test]
    fn span_reduce_is_idempotent_and_quotient_kills_span((rows, cols) in matrix_strategy()) {
        let k = Rationals;
        let m = q_matrix(&rows, cols);
        let sub = span_reduce(&k, &(0..m.rows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>(), cols);
        let again = span_reduce(&k, &sub.basis, cols);
        prop_assert_eq!(&again, &sub);
        let (complement, proj) = quotient_data(&k, &sub);
        prop_assert_eq!(complement.len() + sub.dim(), cols);
        for i in 0..m.rows() {
            prop_assert!(proj.mul_vec(&k, m.row(i)).iter().all(|x| k.is_zero(x)));
        }
    }

    #[test]
    fn sparse_and_dense_composition_agree((rows, cols) in matrix_strategy(), seed in 0i64..7) {
        let k = Rationals;
        let a = q_matrix(&rows, cols);
        let b = Matrix::from_rows(
            (0..cols).map(|i| (0..rows.len()).map(|j| k.from_i64((i as i64 * 3 + j as i64 + seed) % 5 - 2)).collect()).collect(),
            rows.len(),
        );
        let sa = LinearMap::from_dense(&k, &a);
        let sb = LinearMap::from_dense(&k, &b);
        prop_assert_eq!(sa.compose(&k, &sb).to_dense(&k), a.mul(&k, &b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_group_algebras_validate(n in 1usize..7) {
        let k = Rationals;
        let h = group_algebra(&k, &cyclic_table(n)).unwrap();
        prop_assert!(h.validate().passed());
        prop_assert!(h.is_cocommutative());
        let cop = h.iterated_coproduct(3);
        prop_assert!(cop.terms.iter().all(|t| t.len() == 1));
    }

    #[test]
    fn yd_modules_over_cyclic_groups(n in 1usize..5) {
        let k = fp();
        let h = group_algebra(&k, &cyclic_table(n)).unwrap();
        prop_assert!(validate_yd(&h, &YDModule::trivial(&h)).unwrap().passed());
        prop_assert!(validate_yd(&h, &YDModule::adjoint_regular(&h).unwrap()).unwrap().passed());
    }

    #[test]
    fn truncated_polynomials_have_classical_hochschild_homology(m in 1usize..5) {
        // characteristic zero: HH_0 = A and HH_n has dimension m − 1 for n ≥ 1
        let k = Rationals;
        let ma = ModuleAlgebra::trivial_action(trivial_k(&k), truncated(&k, m));
        let v = EquivariantBimodule::regular(&ma);
        let h = quotient_complex(&ma, &v, 3, QuotientMode::CoinvariantQch, DEFAULT_SIZE_CAP).unwrap();
        let mut expect = vec![m; 4];
        for e in expect.iter_mut().skip(1) {
            *e = m - 1;
        }
        prop_assert_eq!(h.quotient.homology_dims(&k, 3).unwrap().dims(), expect);
        prop_assert!(h.complex.check_d_squared(&k).finish().passed);
        prop_assert!(h.complex.check_presimplicial(&k).finish().passed);
    }

    #[test]
    fn trivial_group_actions_match_brute_force(m in 1usize..4, n in 1usize..4) {
        let k = fp();
        let ma = ModuleAlgebra::trivial_action(group_algebra(&k, &cyclic_table(n)).unwrap(), truncated(&k, m));
        let v = EquivariantBimodule::regular(&ma);
        let h = quotient_complex(&ma, &v, 2, QuotientMode::CoinvariantQch, DEFAULT_SIZE_CAP).unwrap();
        prop_assert!(h.quotient.obstruction_dims().iter().all(|&d| d == 0));
        prop_assert_eq!(h.quotient.homology_dims(&k, 2).unwrap().dims(), ordinary_coinvariant_homology(&ma, &v, 2).dims());
    }

    #[test]
    fn diagonal_action_commutes_with_inner_faces(b in 0usize..4, n in 1usize..4) {
        let k = fp();
        let ma = sweedler_on_dual_numbers(&k, hhcalc_core::hopfcore::sweedler4(&k)).unwrap();
        let v = EquivariantBimodule::regular(&ma);
        let cx = build_ch(&ma, &v, n, DEFAULT_SIZE_CAP).unwrap();
        let act = ch_action(&ma, &v, n);
        for j in 0..n {
            let lhs = cx.face(n, j).compose(&k, &act.maps[n][b]);
            let rhs = act.maps[n - 1][b].compose(&k, cx.face(n, j));
            prop_assert_eq!(lhs, rhs);
        }
        // homology is reported below the top realized degree
        prop_assert!(cx.check_d_squared(&k).finish().passed);
        prop_assert_eq!(complex_homology(&k, &cx).dims().len(), n);
    }

    #[test]
    fn crossed_products_are_associative(n in 1usize..4, m in 1usize..4) {
        let k = Rationals;
        let ma = ModuleAlgebra::trivial_action(group_algebra(&k, &cyclic_table(n)).unwrap(), truncated(&k, m));
        prop_assert!(crossed_product(&ma).alg().validate().passed());
    }

    #[test]
    fn module_categories_validate(ranks in prop::sample::subsequence(vec![1usize, 2], 1..=2)) {
        let k = fp();
        let ma = sweedler_on_dual_numbers(&k, hhcalc_core::hopfcore::sweedler4(&k)).unwrap();
        let mc = build_module_category(&ma, &ranks).unwrap();
        prop_assert!(validate_bcategory(&mc.bcat).passed());
        prop_assert!(validate_bifunctor(&mc.bcat, &mc.hom).passed());
        let tw = twist_bifunctor(&mc.bcat, &YDModule::adjoint_regular(ma.hopf()).unwrap(), &mc.hom).unwrap();
        prop_assert!(tw.report.passed());
    }
}
