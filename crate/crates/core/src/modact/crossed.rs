use super::{EquivariantBimodule, ModuleAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{kernel_basis, normalize, Field, Matrix, SparseVec, SubspaceBasis};
use crate::hopfcore::StructureAlgebra;
use crate::report::{Checker, ValidationReport};
use crate::tensor::tensor_vectors;

/// The crossed product `A^e ⋊ B` on `A ⊗ A ⊗ B`, basis row-major in
/// `(a, a′, b)` with the `B` index fastest.
#[derive(Clone, Debug)]
pub struct CrossedProduct<K: Field> {
    alg: StructureAlgebra<K>,
    da: usize,
    db: usize,
}

impl<K: Field> CrossedProduct<K> {
    pub fn alg(&self) -> &StructureAlgebra<K> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn index(&self, a: usize, a2: usize, b: usize) -> usize {
        (a * self.da + a2) * self.db + b
    }
    pub fn split(&self, e: usize) -> (usize, usize, usize) {
        (e / (self.da * self.db), (e / self.db) % self.da, e % self.db)
    }
    /// `a ⊗ a′ ⊗ b` for arbitrary vectors.
    pub fn element(
        &self,
        k: &K,
        a: &SparseVec<K::Elem>,
        a2: &SparseVec<K::Elem>,
        b: &SparseVec<K::Elem>,
    ) -> SparseVec<K::Elem> {
        tensor_vectors(k, &[a, a2, b], &[self.da, self.da, self.db])
    }
}

/// `(a₁⊗a₁′⊗b¹)(a₂⊗a₂′⊗b²) = a₁b¹₍₁₎(a₂) ⊗ b¹₍₃₎(a₂′)a₁′ ⊗ b¹₍₂₎b²`.
pub fn crossed_product<K: Field>(ma: &ModuleAlgebra<K>) -> CrossedProduct<K> {
    let k = ma.field();
    let (a, b) = (ma.alg(), ma.hopf());
    let (da, db) = (a.dim(), b.dim());
    let de = da * da * db;
    let idx = |x: usize, y: usize, z: usize| (x * da + y) * db + z;
    let d3 = b.iterated_coproduct(3);
    let mut mult = Vec::with_capacity(de * de);
    for e1 in 0..de {
        let (a1, a1p, b1) = (e1 / (da * db), (e1 / db) % da, e1 % db);
        for e2 in 0..de {
            let (a2, a2p, b2) = (e2 / (da * db), (e2 / db) % da, e2 % db);
            let mut acc = Vec::new();
            for (c, t) in &d3.terms[b1] {
                let left = a.mul(&a.basis_vec(a1), ma.act_basis(t[0], a2));
                if left.is_empty() {
                    continue;
                }
                let right = a.mul(ma.act_basis(t[2], a2p), &a.basis_vec(a1p));
                let mid = b.alg().mul_basis(t[1], b2);
                for (x, u) in &left {
                    let cu = k.mul(c, u);
                    for (y, v) in &right {
                        let cuv = k.mul(&cu, v);
                        for (z, w) in mid {
                            acc.push((idx(*x, *y, *z), k.mul(&cuv, w)));
                        }
                    }
                }
            }
            mult.push(normalize(k, acc));
        }
    }
    let names = (0..de)
        .map(|e| format!("({},{},{})", a.name(e / (da * db)), a.name((e / db) % da), b.alg().name(e % db)))
        .collect();
    let unit = tensor_vectors(k, &[a.unit(), a.unit(), b.alg().unit()], &[da, da, db]);
    let alg = StructureAlgebra::new(k, names, mult, unit).expect("crossed product shape");
    CrossedProduct { alg, da, db }
}

/// Left `E`-action `(a⊗a′⊗b)(v) = a·b(v)·a′`, table `[e * dim V + v]`.
pub fn e_module_table<K: Field>(
    ma: &ModuleAlgebra<K>,
    e: &CrossedProduct<K>,
    v: &EquivariantBimodule<K>,
) -> Vec<SparseVec<K::Elem>> {
    let k = ma.field();
    let da = ma.alg().dim();
    let dv = v.dim();
    let mut out = Vec::with_capacity(e.dim() * dv);
    for ei in 0..e.dim() {
        let (a, a2, b) = e.split(ei);
        for x in 0..dv {
            let bv = v.lb(b, x);
            let abv = v.left_mul(k, &[(a, k.one())], bv);
            out.push(v.right_mul(k, &abv, &[(a2, k.one())], da));
        }
    }
    out
}

/// Left-module axioms for an `E`-action table.
pub fn validate_e_module<K: Field>(e: &CrossedProduct<K>, table: &[SparseVec<K::Elem>], dv: usize) -> ValidationReport {
    let k = e.alg().field();
    let act = |x: &[(usize, K::Elem)], v: &[(usize, K::Elem)]| {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in v {
                let ab = k.mul(a, b);
                for (t, z) in &table[i * dv + j] {
                    acc.push((*t, k.mul(&ab, z)));
                }
            }
        }
        normalize(k, acc)
    };
    let mut report = ValidationReport::new("E-module");
    let mut c = Checker::new("E-module associative");
    for e1 in 0..e.dim() {
        for e2 in 0..e.dim() {
            for v in 0..dv {
                let lhs = act(&[(e1, k.one())], &table[e2 * dv + v]);
                let rhs = act(e.alg().mul_basis(e1, e2), &[(v, k.one())]);
                c.case(lhs == rhs, || format!("({},{},{v})", e.alg().name(e1), e.alg().name(e2)));
            }
        }
    }
    report.push(c);
    let mut c = Checker::new("E-module unital");
    for v in 0..dv {
        c.case(act(e.alg().unit(), &[(v, k.one())]) == vec![(v, k.one())], || v.to_string());
    }
    report.push(c);
    report
}

/// Recovers `(left_A, right_A, left_B)` from an `E`-module table by acting
/// with `a⊗1⊗1`, `1⊗a⊗1` and `1⊗1⊗b`.
pub fn decompose_e_module<K: Field>(
    ma: &ModuleAlgebra<K>,
    e: &CrossedProduct<K>,
    table: &[SparseVec<K::Elem>],
    names: Vec<String>,
) -> Result<EquivariantBimodule<K>> {
    let k = ma.field();
    let (a, b) = (ma.alg(), ma.hopf());
    let dv = names.len();
    let act = |x: &SparseVec<K::Elem>, v: usize| {
        let mut acc = Vec::new();
        for (i, c) in x {
            for (t, z) in &table[i * dv + v] {
                acc.push((*t, k.mul(c, z)));
            }
        }
        normalize(k, acc)
    };
    let (ua, ub) = (a.unit(), b.alg().unit());
    let mut left_a = Vec::new();
    for x in 0..a.dim() {
        let el = e.element(k, &a.basis_vec(x), ua, ub);
        left_a.extend((0..dv).map(|v| act(&el, v)));
    }
    let mut right_a = vec![Vec::new(); dv * a.dim()];
    for x in 0..a.dim() {
        let el = e.element(k, ua, &a.basis_vec(x), ub);
        for v in 0..dv {
            right_a[v * a.dim() + x] = act(&el, v);
        }
    }
    let mut left_b = Vec::new();
    for y in 0..b.dim() {
        let el = e.element(k, ua, ua, &b.alg().basis_vec(y));
        left_b.extend((0..dv).map(|v| act(&el, v)));
    }
    EquivariantBimodule::new(ma, names, left_a, right_a, left_b)
}

/// Right action `v·(a⊗a′⊗b) = S(b)(a′ v a)` defining `V^op`, table
/// `[v * dim E + e]`, together with the right-module axiom check.
pub fn vop_right_action<K: Field>(
    ma: &ModuleAlgebra<K>,
    e: &CrossedProduct<K>,
    v: &EquivariantBimodule<K>,
) -> Result<(Vec<SparseVec<K::Elem>>, ValidationReport)> {
    let k = ma.field();
    let b = ma.hopf();
    if !b.has_antipode() {
        return Err(Error::AntipodeRequired("opposite module"));
    }
    if !b.has_antipode_inv() {
        return Err(Error::AntipodeInverseRequired("opposite module"));
    }
    let da = ma.alg().dim();
    let (dv, de) = (v.dim(), e.dim());
    let mut table = Vec::with_capacity(dv * de);
    for x in 0..dv {
        for ei in 0..de {
            let (a, a2, bi) = e.split(ei);
            let avx = v.left_mul(k, &[(a2, k.one())], &[(x, k.one())]);
            let w = v.right_mul(k, &avx, &[(a, k.one())], da);
            let s = b.s(&[(bi, k.one())], "opposite module")?;
            table.push(v.b_act(k, &s, &w));
        }
    }
    let act = |u: &[(usize, K::Elem)], y: &[(usize, K::Elem)]| {
        let mut acc = Vec::new();
        for (i, c) in u {
            for (j, d) in y {
                let cd = k.mul(c, d);
                for (t, z) in &table[i * de + j] {
                    acc.push((*t, k.mul(&cd, z)));
                }
            }
        }
        normalize(k, acc)
    };
    let mut report = ValidationReport::new("opposite module");
    let mut c = Checker::new("right E-module associative");
    for x in 0..dv {
        for e1 in 0..de {
            for e2 in 0..de {
                let lhs = act(&table[x * de + e1], &[(e2, k.one())]);
                let rhs = act(&[(x, k.one())], e.alg().mul_basis(e1, e2));
                c.case(lhs == rhs, || format!("({},{},{})", v.names()[x], e.alg().name(e1), e.alg().name(e2)));
            }
        }
    }
    report.push(c);
    let mut c = Checker::new("right E-module unital");
    for x in 0..dv {
        c.case(act(&[(x, k.one())], e.alg().unit()) == vec![(x, k.one())], || v.names()[x].clone());
    }
    report.push(c);
    Ok((table, report))
}

/// `Ω(A) = ker(μ: A⊗A → A)` with its `E`-stability flag.
#[derive(Clone, Debug)]
pub struct OmegaModule<K: Field> {
    pub basis: SubspaceBasis<K::Elem>,
    pub e_stable: bool,
}

/// `E` acting on `A⊗A` by `(a⊗a′⊗b)(x⊗y) = a·b₍₁₎(x) ⊗ b₍₂₎(y)·a′`.
pub fn e_action_on_pairs<K: Field>(
    ma: &ModuleAlgebra<K>,
    e: &CrossedProduct<K>,
    ei: usize,
    w: &[(usize, K::Elem)],
) -> SparseVec<K::Elem> {
    let k = ma.field();
    let a = ma.alg();
    let da = a.dim();
    let (x0, x1, bi) = e.split(ei);
    let mut acc = Vec::new();
    for (p, c) in w {
        let (x, y) = (p / da, p % da);
        for (cc, s, t) in &ma.hopf().comult()[bi] {
            let l = a.mul(&a.basis_vec(x0), ma.act_basis(*s, x));
            let r = a.mul(ma.act_basis(*t, y), &a.basis_vec(x1));
            let coef = k.mul(c, cc);
            for (i, u) in &l {
                let cu = k.mul(&coef, u);
                for (j, v) in &r {
                    acc.push((i * da + j, k.mul(&cu, v)));
                }
            }
        }
    }
    normalize(k, acc)
}

pub fn omega_basis<K: Field>(ma: &ModuleAlgebra<K>) -> OmegaModule<K> {
    let k = ma.field();
    let a = ma.alg();
    let da = a.dim();
    let mut mu = Matrix::zeros(k, da, da * da);
    for x in 0..da {
        for y in 0..da {
            for (t, c) in a.mul_basis(x, y) {
                mu.set(*t, x * da + y, c.clone());
            }
        }
    }
    let basis = kernel_basis(k, &mu);
    let e = crossed_product(ma);
    let mut e_stable = true;
    'outer: for w in &basis.basis {
        let sw: SparseVec<K::Elem> = w.iter().cloned().enumerate().filter(|(_, x)| !k.is_zero(x)).collect();
        for ei in 0..e.dim() {
            let img = e_action_on_pairs(ma, &e, ei, &sw);
            let mut dense = vec![k.zero(); da * da];
            for (i, x) in img {
                dense[i] = x;
            }
            if !basis.contains(k, &dense) {
                e_stable = false;
                break 'outer;
            }
        }
    }
    OmegaModule { basis, e_stable }
}
