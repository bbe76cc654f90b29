//! Module algebras, equivariant bimodules, the crossed product `A^e ⋊ B`,
//! the opposite module `V^op` and `Ω(A)`.

mod bimodule;
mod builtins;
mod crossed;
mod module_algebra;

pub use bimodule::EquivariantBimodule;
pub use builtins::{
    dual_numbers, exterior2, group_z2_on_dual_numbers, sweedler_on_dual_numbers, sweedler_on_exterior2,
};
pub use crossed::{
    crossed_product, decompose_e_module, e_action_on_pairs, e_module_table, omega_basis, validate_e_module,
    vop_right_action, CrossedProduct, OmegaModule,
};
pub use module_algebra::{adjoint_action, adjoint_regular, ModuleAlgebra};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Field, Rationals};
    use crate::hopfcore::{cyclic_table, group_algebra, sweedler4, trivial_k};

    fn z2_dual() -> ModuleAlgebra<Rationals> {
        let k = Rationals;
        group_z2_on_dual_numbers(&k, group_algebra(&k, &cyclic_table(2)).unwrap()).unwrap()
    }

    fn sw_dual() -> ModuleAlgebra<Rationals> {
        let k = Rationals;
        sweedler_on_dual_numbers(&k, sweedler4(&k)).unwrap()
    }

    #[test]
    fn module_algebra_examples() {
        assert!(z2_dual().validate().passed());
        assert!(sw_dual().validate().passed());
        let k = Rationals;
        assert!(sweedler_on_exterior2(&k, sweedler4(&k)).unwrap().validate().passed());
    }

    #[test]
    fn nonzero_x_on_unit_fails_unitality() {
        let k = Rationals;
        let ma = sw_dual();
        let mut t = ma.action_table().to_vec();
        t[2 * 2] = vec![(0, k.one())];
        let bad = ModuleAlgebra::new(ma.hopf().clone(), ma.alg().clone(), t).unwrap();
        let r = bad.validate();
        let c = r.check("unit preserved").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("(x,1)"));
    }

    #[test]
    fn adjoint_examples() {
        let k = Rationals;
        let z2 = group_algebra(&k, &cyclic_table(2)).unwrap();
        let ad = adjoint_regular(&z2).unwrap();
        for b in 0..2 {
            for a in 0..2 {
                assert_eq!(*ad.act_basis(b, a), vec![(a, k.one())]);
            }
        }
        let ad = adjoint_regular(&sweedler4(&k)).unwrap();
        assert!(ad.validate().passed());
        for a in 0..4 {
            assert_eq!(*ad.act_basis(0, a), vec![(a, k.one())]);
        }
    }

    #[test]
    fn regular_and_trivial_bimodules() {
        let k = Rationals;
        let ma = sw_dual();
        assert!(EquivariantBimodule::regular(&ma).validate(&ma).passed());
        let aug = vec![k.one(), k.zero()];
        let z2 = z2_dual();
        assert!(EquivariantBimodule::trivial(&z2, &aug).unwrap().validate(&z2).passed());
        // x·y = 1 is not compatible with the augmentation y ↦ 0
        assert!(!EquivariantBimodule::trivial(&ma, &aug).unwrap().validate(&ma).passed());
    }

    #[test]
    fn flipped_b_action_fails_equivariance() {
        let k = Rationals;
        let ma = sw_dual();
        let v = EquivariantBimodule::regular(&ma);
        let mut lb = v.left_b_table().to_vec();
        // x acts by y ↦ 1 on A; flip it to 1 ↦ y
        lb[2 * 2 + 1] = vec![];
        lb[2 * 2] = vec![(1, k.one())];
        let bad = EquivariantBimodule::new(&ma, v.names().to_vec(), v.left_a_table().to_vec(), v.right_a_table().to_vec(), lb)
            .unwrap();
        assert!(!bad.validate(&ma).passed());
    }

    #[test]
    fn crossed_product_is_an_algebra() {
        let ma = sw_dual();
        let e = crossed_product(&ma);
        assert_eq!(e.dim(), 16);
        assert!(e.alg().validate().passed());
    }

    #[test]
    fn crossed_product_over_trivial_b_is_a_tensor_a_op() {
        let k = Rationals;
        let a = dual_numbers(&k);
        let ma = ModuleAlgebra::trivial_action(trivial_k(&k), a.clone());
        let e = crossed_product(&ma);
        let op = a.opposite();
        for x in 0..4 {
            for y in 0..4 {
                let expect = crate::tensor::tensor_vectors(
                    &k,
                    &[a.mul_basis(x / 2, y / 2), op.mul_basis(x % 2, y % 2)],
                    &[2, 2],
                );
                assert_eq!(*e.alg().mul_basis(x, y), expect);
            }
        }
    }

    #[test]
    fn e_module_roundtrip() {
        let ma = sw_dual();
        let v = EquivariantBimodule::regular(&ma);
        let e = crossed_product(&ma);
        let t = e_module_table(&ma, &e, &v);
        assert!(validate_e_module(&e, &t, v.dim()).passed());
        let back = decompose_e_module(&ma, &e, &t, v.names().to_vec()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn vop_over_group_algebra() {
        let k = Rationals;
        let ma = z2_dual();
        let v = EquivariantBimodule::regular(&ma);
        let e = crossed_product(&ma);
        let (t, report) = vop_right_action(&ma, &e, &v).unwrap();
        assert!(report.passed());
        // y · (1⊗1⊗g) = −y
        let eg = e.index(0, 0, 1);
        assert_eq!(t[e.dim() + eg], vec![(1, k.neg(&k.one()))]);
    }

    #[test]
    fn omega_of_dual_numbers() {
        let om = omega_basis(&sw_dual());
        assert_eq!(om.basis.dim(), 2);
        assert!(om.e_stable);
        let k = Rationals;
        let kk = ModuleAlgebra::trivial_action(trivial_k(&k), trivial_k(&k).alg().clone());
        assert_eq!(omega_basis(&kk).basis.dim(), 0);
    }
}
