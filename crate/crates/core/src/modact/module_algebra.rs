use crate::error::{Error, Result};
use crate::exactfield::{normalize, Field, LinearMap, SparseVec};
use crate::hopfcore::{HopfData, StructureAlgebra};
use crate::report::{Checker, ValidationReport};

/// An algebra `A` with a left `B`-action, `action[b * dim A + a] = b(a)`.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra<K: Field> {
    b: HopfData<K>,
    a: StructureAlgebra<K>,
    action: Vec<SparseVec<K::Elem>>,
}

impl<K: Field> ModuleAlgebra<K> {
    pub fn new(b: HopfData<K>, a: StructureAlgebra<K>, action: Vec<SparseVec<K::Elem>>) -> Result<Self> {
        let (db, da) = (b.dim(), a.dim());
        if action.len() != db * da {
            return Err(Error::shape("action", format!("expected {} entries, got {}", db * da, action.len())));
        }
        if action.iter().any(|v| v.iter().any(|(i, _)| *i >= da)) {
            return Err(Error::shape("action", "index out of range"));
        }
        let k = a.field().clone();
        let action = action.into_iter().map(|v| normalize(&k, v)).collect();
        Ok(ModuleAlgebra { b, a, action })
    }

    /// `b` acting through the counit.
    pub fn trivial_action(b: HopfData<K>, a: StructureAlgebra<K>) -> Self {
        let k = a.field().clone();
        let (db, da) = (b.dim(), a.dim());
        let action = (0..db * da)
            .map(|p| {
                let c = b.counit()[p / da].clone();
                if k.is_zero(&c) {
                    Vec::new()
                } else {
                    vec![(p % da, c)]
                }
            })
            .collect();
        ModuleAlgebra { b, a, action }
    }

    pub fn field(&self) -> &K {
        self.a.field()
    }
    pub fn hopf(&self) -> &HopfData<K> {
        &self.b
    }
    pub fn alg(&self) -> &StructureAlgebra<K> {
        &self.a
    }
    pub fn action_table(&self) -> &[SparseVec<K::Elem>] {
        &self.action
    }

    pub fn act_basis(&self, b: usize, a: usize) -> &SparseVec<K::Elem> {
        &self.action[b * self.a.dim() + a]
    }

    /// Matrix of `a ↦ b(a)` for a basis element `b`.
    pub fn action_map(&self, b: usize) -> LinearMap<K::Elem> {
        let da = self.a.dim();
        LinearMap::from_columns(da, (0..da).map(|a| self.act_basis(b, a).clone()).collect())
    }

    pub fn act(&self, b: &[(usize, K::Elem)], a: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let k = self.field();
        let mut acc = Vec::new();
        for (i, x) in b {
            for (j, y) in a {
                let xy = k.mul(x, y);
                for (l, z) in self.act_basis(*i, *j) {
                    acc.push((*l, k.mul(&xy, z)));
                }
            }
        }
        normalize(k, acc)
    }

    /// Module axioms, Leibniz compatibility and unitality.
    pub fn validate(&self) -> ValidationReport {
        let k = self.field();
        let (b, a) = (&self.b, &self.a);
        let (db, da) = (b.dim(), a.dim());
        let mut report = ValidationReport::new("module algebra");
        let mut c = Checker::new("action associative");
        for i in 0..db {
            for j in 0..db {
                for l in 0..da {
                    let lhs = self.act(&b.alg().basis_vec(i), self.act_basis(j, l));
                    let rhs = self.act(b.alg().mul_basis(i, j), &a.basis_vec(l));
                    c.case(lhs == rhs, || format!("({},{},{})", b.alg().name(i), b.alg().name(j), a.name(l)));
                }
            }
        }
        report.push(c);
        let mut c = Checker::new("action unital");
        for l in 0..da {
            let e = a.basis_vec(l);
            c.case(self.act(b.alg().unit(), &e) == e, || a.name(l).to_string());
        }
        report.push(c);
        let mut c = Checker::new("leibniz");
        for i in 0..db {
            for x in 0..da {
                for y in 0..da {
                    let lhs = self.act(&b.alg().basis_vec(i), a.mul_basis(x, y));
                    let mut acc = Vec::new();
                    for (coef, p, q) in &b.comult()[i] {
                        for (t, z) in a.mul(self.act_basis(*p, x), self.act_basis(*q, y)) {
                            acc.push((t, k.mul(coef, &z)));
                        }
                    }
                    c.case(lhs == normalize(k, acc), || {
                        format!("({},{},{})", b.alg().name(i), a.name(x), a.name(y))
                    });
                }
            }
        }
        report.push(c);
        let mut c = Checker::new("unit preserved");
        for i in 0..db {
            let lhs = self.act(&b.alg().basis_vec(i), a.unit());
            let eps = &b.counit()[i];
            let rhs: SparseVec<_> = a.unit().iter().map(|(j, u)| (*j, k.mul(eps, u))).filter(|(_, x)| !k.is_zero(x)).collect();
            c.case(lhs == rhs, || {
                let u = a.unit_index().map_or("1", |u| a.name(u));
                format!("({},{u})", b.alg().name(i))
            });
        }
        report.push(c);
        report
    }

    /// `A^op` as a module algebra over `B^cop`.
    pub fn op_cop(&self) -> Self {
        ModuleAlgebra { b: self.b.cop(), a: self.a.opposite(), action: self.action.clone() }
    }
}

/// Adjoint module algebra `ad_b(a) = φ(b₍₁₎) a φ(S(b₍₂₎))` for an algebra map
/// `φ: B → A`.
pub fn adjoint_action<K: Field>(
    b: &HopfData<K>,
    a: &StructureAlgebra<K>,
    phi: &LinearMap<K::Elem>,
) -> Result<ModuleAlgebra<K>> {
    let k = a.field();
    if !b.has_antipode() {
        return Err(Error::AntipodeRequired("adjoint action"));
    }
    if phi.src_dim() != b.dim() || phi.dst_dim() != a.dim() {
        return Err(Error::shape("phi", "expected a map B -> A"));
    }
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            let lhs = phi.apply(k, b.alg().mul_basis(i, j));
            let rhs = a.mul(phi.column(i), phi.column(j));
            if lhs != rhs {
                return Err(Error::Precondition(format!(
                    "phi is not multiplicative at ({},{})",
                    b.alg().name(i),
                    b.alg().name(j)
                )));
            }
        }
    }
    if phi.apply(k, b.alg().unit()) != *a.unit() {
        return Err(Error::Precondition("phi does not preserve the unit".into()));
    }
    let da = a.dim();
    let mut action = Vec::with_capacity(b.dim() * da);
    for i in 0..b.dim() {
        for x in 0..da {
            let mut acc = Vec::new();
            for (c, p, q) in &b.comult()[i] {
                let s = b.s(&[(*q, k.one())], "adjoint action")?;
                let left = a.mul(phi.column(*p), &a.basis_vec(x));
                for (t, z) in a.mul(&left, &phi.apply(k, &s)) {
                    acc.push((t, k.mul(c, &z)));
                }
            }
            action.push(normalize(k, acc));
        }
    }
    ModuleAlgebra::new(b.clone(), a.clone(), action)
}

/// `B` acting on itself by the adjoint action.
pub fn adjoint_regular<K: Field>(b: &HopfData<K>) -> Result<ModuleAlgebra<K>> {
    adjoint_action(b, b.alg(), &LinearMap::identity(b.field(), b.dim()))
}
