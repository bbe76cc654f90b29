use super::ModuleAlgebra;
use crate::error::{Error, Result};
use crate::exactfield::{normalize, Field, SparseVec};
use crate::report::{Checker, ValidationReport};

/// A `B`-equivariant `A`-bimodule `V`.
///
/// Tables are indexed `left_a[a * dim V + v] = a·v`,
/// `right_a[v * dim A + a] = v·a`, `left_b[b * dim V + v] = b(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantBimodule<K: Field> {
    names: Vec<String>,
    left_a: Vec<SparseVec<K::Elem>>,
    right_a: Vec<SparseVec<K::Elem>>,
    left_b: Vec<SparseVec<K::Elem>>,
}

impl<K: Field> EquivariantBimodule<K> {
    pub fn new(
        ma: &ModuleAlgebra<K>,
        names: Vec<String>,
        left_a: Vec<SparseVec<K::Elem>>,
        right_a: Vec<SparseVec<K::Elem>>,
        left_b: Vec<SparseVec<K::Elem>>,
    ) -> Result<Self> {
        let k = ma.field();
        let dv = names.len();
        let (da, db) = (ma.alg().dim(), ma.hopf().dim());
        let check = |name: &str, t: Vec<SparseVec<K::Elem>>, n: usize| -> Result<Vec<SparseVec<K::Elem>>> {
            if t.len() != n {
                return Err(Error::shape(name, format!("expected {n} entries, got {}", t.len())));
            }
            if t.iter().any(|v| v.iter().any(|(i, _)| *i >= dv)) {
                return Err(Error::shape(name, "index out of range"));
            }
            Ok(t.into_iter().map(|v| normalize(k, v)).collect())
        };
        Ok(EquivariantBimodule {
            left_a: check("left_A", left_a, da * dv)?,
            right_a: check("right_A", right_a, dv * da)?,
            left_b: check("left_B", left_b, db * dv)?,
            names,
        })
    }

    /// `V = A` with multiplication on both sides and the module-algebra action.
    pub fn regular(ma: &ModuleAlgebra<K>) -> Self {
        let a = ma.alg();
        let d = a.dim();
        EquivariantBimodule {
            names: a.names().to_vec(),
            left_a: (0..d * d).map(|p| a.mul_basis(p / d, p % d).clone()).collect(),
            right_a: (0..d * d).map(|p| a.mul_basis(p / d, p % d).clone()).collect(),
            left_b: ma.action_table().to_vec(),
        }
    }

    /// One-dimensional `V = k` through an augmentation `A → k`.
    pub fn trivial(ma: &ModuleAlgebra<K>, augmentation: &[K::Elem]) -> Result<Self> {
        let k = ma.field();
        if augmentation.len() != ma.alg().dim() {
            return Err(Error::shape("augmentation", "expected one scalar per basis element of A"));
        }
        let scalar = |c: &K::Elem| if k.is_zero(c) { Vec::new() } else { vec![(0, c.clone())] };
        Ok(EquivariantBimodule {
            names: vec!["v".into()],
            left_a: augmentation.iter().map(scalar).collect(),
            right_a: augmentation.iter().map(scalar).collect(),
            left_b: ma.hopf().counit().iter().map(scalar).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn left_a_table(&self) -> &[SparseVec<K::Elem>] {
        &self.left_a
    }
    pub fn right_a_table(&self) -> &[SparseVec<K::Elem>] {
        &self.right_a
    }
    pub fn left_b_table(&self) -> &[SparseVec<K::Elem>] {
        &self.left_b
    }

    pub fn la(&self, a: usize, v: usize) -> &SparseVec<K::Elem> {
        &self.left_a[a * self.dim() + v]
    }
    pub fn ra(&self, v: usize, a: usize, da: usize) -> &SparseVec<K::Elem> {
        &self.right_a[v * da + a]
    }
    pub fn lb(&self, b: usize, v: usize) -> &SparseVec<K::Elem> {
        &self.left_b[b * self.dim() + v]
    }

    /// Bilinear extension of a basis-level table lookup.
    fn bilinear(
        k: &K,
        x: &[(usize, K::Elem)],
        y: &[(usize, K::Elem)],
        f: impl Fn(usize, usize) -> SparseVec<K::Elem>,
    ) -> SparseVec<K::Elem> {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = k.mul(a, b);
                for (t, z) in f(*i, *j) {
                    acc.push((t, k.mul(&ab, &z)));
                }
            }
        }
        normalize(k, acc)
    }

    pub fn left_mul(&self, k: &K, a: &[(usize, K::Elem)], v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        Self::bilinear(k, a, v, |i, j| self.la(i, j).clone())
    }
    pub fn right_mul(&self, k: &K, v: &[(usize, K::Elem)], a: &[(usize, K::Elem)], da: usize) -> SparseVec<K::Elem> {
        Self::bilinear(k, v, a, |i, j| self.ra(i, j, da).clone())
    }
    pub fn b_act(&self, k: &K, b: &[(usize, K::Elem)], v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        Self::bilinear(k, b, v, |i, j| self.lb(i, j).clone())
    }

    /// Bimodule axioms and both equivariance identities on basis triples.
    pub fn validate(&self, ma: &ModuleAlgebra<K>) -> ValidationReport {
        let k = ma.field();
        let (a, b) = (ma.alg(), ma.hopf());
        let (da, db, dv) = (a.dim(), b.dim(), self.dim());
        let e = |i: usize| vec![(i, k.one())];
        let an = |i: usize| a.name(i).to_string();
        let bn = |i: usize| b.alg().name(i).to_string();
        let vn = |i: usize| self.names[i].clone();
        let mut report = ValidationReport::new("equivariant bimodule");

        let mut c = Checker::new("left A-module");
        for x in 0..da {
            for y in 0..da {
                for v in 0..dv {
                    let lhs = self.left_mul(k, &e(x), self.la(y, v));
                    let rhs = self.left_mul(k, a.mul_basis(x, y), &e(v));
                    c.case(lhs == rhs, || format!("({},{},{})", an(x), an(y), vn(v)));
                }
            }
        }
        for v in 0..dv {
            c.case(self.left_mul(k, a.unit(), &e(v)) == e(v), || format!("(1,{})", vn(v)));
        }
        report.push(c);

        let mut c = Checker::new("right A-module");
        for v in 0..dv {
            for x in 0..da {
                for y in 0..da {
                    let lhs = self.right_mul(k, self.ra(v, x, da), &e(y), da);
                    let rhs = self.right_mul(k, &e(v), a.mul_basis(x, y), da);
                    c.case(lhs == rhs, || format!("({},{},{})", vn(v), an(x), an(y)));
                }
            }
            c.case(self.right_mul(k, &e(v), a.unit(), da) == e(v), || format!("({},1)", vn(v)));
        }
        report.push(c);

        let mut c = Checker::new("bimodule compatibility");
        for x in 0..da {
            for v in 0..dv {
                for y in 0..da {
                    let lhs = self.right_mul(k, self.la(x, v), &e(y), da);
                    let rhs = self.left_mul(k, &e(x), self.ra(v, y, da));
                    c.case(lhs == rhs, || format!("({},{},{})", an(x), vn(v), an(y)));
                }
            }
        }
        report.push(c);

        let mut c = Checker::new("B-module");
        for i in 0..db {
            for j in 0..db {
                for v in 0..dv {
                    let lhs = self.b_act(k, &e(i), self.lb(j, v));
                    let rhs = self.b_act(k, b.alg().mul_basis(i, j), &e(v));
                    c.case(lhs == rhs, || format!("({},{},{})", bn(i), bn(j), vn(v)));
                }
            }
        }
        for v in 0..dv {
            c.case(self.b_act(k, b.alg().unit(), &e(v)) == e(v), || format!("(1,{})", vn(v)));
        }
        report.push(c);

        let mut l = Checker::new("left equivariance");
        let mut r = Checker::new("right equivariance");
        for i in 0..db {
            for x in 0..da {
                for v in 0..dv {
                    let lhs = self.b_act(k, &e(i), self.la(x, v));
                    let rl = self.b_act(k, &e(i), self.ra(v, x, da));
                    let mut acc_l = Vec::new();
                    let mut acc_r = Vec::new();
                    for (coef, p, q) in &b.comult()[i] {
                        for (t, z) in self.left_mul(k, ma.act_basis(*p, x), self.lb(*q, v)) {
                            acc_l.push((t, k.mul(coef, &z)));
                        }
                        for (t, z) in self.right_mul(k, self.lb(*p, v), ma.act_basis(*q, x), da) {
                            acc_r.push((t, k.mul(coef, &z)));
                        }
                    }
                    l.case(lhs == normalize(k, acc_l), || format!("({},{},{})", bn(i), an(x), vn(v)));
                    r.case(rl == normalize(k, acc_r), || format!("({},{},{})", bn(i), vn(v), an(x)));
                }
            }
        }
        report.push(l);
        report.push(r);
        report
    }

    /// The same space viewed as an `A^op`-bimodule (sides swapped).
    pub fn opposite(&self, da: usize) -> Self {
        let dv = self.dim();
        let left_a = (0..da * dv).map(|p| self.right_a[(p % dv) * da + p / dv].clone()).collect();
        let right_a = (0..dv * da).map(|p| self.left_a[(p % da) * dv + p / da].clone()).collect();
        EquivariantBimodule { names: self.names.clone(), left_a, right_a, left_b: self.left_b.clone() }
    }
}
