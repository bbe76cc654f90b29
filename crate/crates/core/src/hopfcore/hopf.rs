use std::collections::BTreeMap;

use super::algebra::{format_vec, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{normalize, span_reduce, Field, LinearMap, Matrix, SparseVec, SubspaceBasis};
use crate::report::{Checker, ValidationReport};

/// One Sweedler term `coeff · b_j ⊗ b_k`.
pub type CoproductTerm<E> = (E, usize, usize);

/// Bialgebra or Hopf algebra data over a [`StructureAlgebra`].
#[derive(Clone, Debug)]
pub struct HopfData<K: Field> {
    alg: StructureAlgebra<K>,
    comult: Vec<Vec<CoproductTerm<K::Elem>>>,
    counit: Vec<K::Elem>,
    antipode: Option<LinearMap<K::Elem>>,
    antipode_inv: Option<LinearMap<K::Elem>>,
    /// `comult` flattened into `B⊗B` coordinates `j * dim + k`.
    delta: Vec<SparseVec<K::Elem>>,
}

/// `Δ^{(n)}(b_i)` for every basis index, as `(coeff, [j₁..jₙ])` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedCoproduct<E> {
    pub arity: usize,
    pub terms: Vec<Vec<(E, Vec<usize>)>>,
}

impl<K: Field> HopfData<K> {
    /// Shape-checked constructor. Antipode matrices act on columns:
    /// column `j` holds the image of `b_j`.
    pub fn new(
        alg: StructureAlgebra<K>,
        comult: Vec<Vec<CoproductTerm<K::Elem>>>,
        counit: Vec<K::Elem>,
        antipode: Option<Matrix<K::Elem>>,
        antipode_inv: Option<Matrix<K::Elem>>,
    ) -> Result<Self> {
        let d = alg.dim();
        let k = alg.field().clone();
        if comult.len() != d {
            return Err(Error::shape("comult", format!("expected {d} entries, got {}", comult.len())));
        }
        for (i, terms) in comult.iter().enumerate() {
            if terms.iter().any(|(_, a, b)| *a >= d || *b >= d) {
                return Err(Error::shape(format!("comult[{i}]"), "index out of range"));
            }
        }
        if counit.len() != d {
            return Err(Error::shape("counit", format!("expected length {d}")));
        }
        let square = |name: &str, m: Option<Matrix<K::Elem>>| -> Result<Option<LinearMap<K::Elem>>> {
            match m {
                None => Ok(None),
                Some(m) if m.rows() == d && m.cols() == d => Ok(Some(LinearMap::from_dense(&k, &m))),
                Some(m) => Err(Error::shape(name, format!("expected {d}x{d}, got {}x{}", m.rows(), m.cols()))),
            }
        };
        let antipode = square("antipode", antipode)?;
        let antipode_inv = square("antipode_inv", antipode_inv)?;
        let delta = comult
            .iter()
            .map(|t| normalize(&k, t.iter().map(|(c, a, b)| (a * d + b, c.clone())).collect()))
            .collect();
        Ok(HopfData { alg, comult, counit, antipode, antipode_inv, delta })
    }

    pub fn field(&self) -> &K {
        self.alg.field()
    }
    pub fn alg(&self) -> &StructureAlgebra<K> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn comult(&self) -> &[Vec<CoproductTerm<K::Elem>>] {
        &self.comult
    }
    /// `Δ(b_i)` in `B⊗B` coordinates.
    pub fn delta(&self, i: usize) -> &SparseVec<K::Elem> {
        &self.delta[i]
    }
    pub fn counit(&self) -> &[K::Elem] {
        &self.counit
    }
    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }
    pub fn has_antipode_inv(&self) -> bool {
        self.antipode_inv.is_some()
    }
    pub fn antipode_map(&self) -> Option<&LinearMap<K::Elem>> {
        self.antipode.as_ref()
    }
    pub fn antipode_inv_map(&self) -> Option<&LinearMap<K::Elem>> {
        self.antipode_inv.as_ref()
    }

    pub fn antipode_matrix(&self) -> Option<Matrix<K::Elem>> {
        self.antipode.as_ref().map(|m| m.to_dense(self.field()))
    }
    pub fn antipode_inv_matrix(&self) -> Option<Matrix<K::Elem>> {
        self.antipode_inv.as_ref().map(|m| m.to_dense(self.field()))
    }

    pub fn eps(&self, x: &[(usize, K::Elem)]) -> K::Elem {
        let k = self.field();
        let mut acc = k.zero();
        for (i, c) in x {
            k.mul_add_assign(&mut acc, c, &self.counit[*i]);
        }
        acc
    }

    pub fn s(&self, x: &[(usize, K::Elem)], why: &'static str) -> Result<SparseVec<K::Elem>> {
        let s = self.antipode.as_ref().ok_or(Error::AntipodeRequired(why))?;
        Ok(s.apply(self.field(), x))
    }

    pub fn s_inv(&self, x: &[(usize, K::Elem)], why: &'static str) -> Result<SparseVec<K::Elem>> {
        let s = self.antipode_inv.as_ref().ok_or(Error::AntipodeInverseRequired(why))?;
        Ok(s.apply(self.field(), x))
    }

    /// `Δ` extended linearly, in `B⊗B` coordinates.
    pub fn delta_of(&self, x: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let k = self.field();
        let mut acc = Vec::new();
        for (i, c) in x {
            acc.extend(self.delta[*i].iter().map(|(p, y)| (*p, k.mul(c, y))));
        }
        normalize(k, acc)
    }

    /// Left-nested `(Δ⊗id^{⊗n−2})∘…∘Δ`, with equal tuples merged.
    pub fn iterated_coproduct(&self, n: usize) -> IteratedCoproduct<K::Elem> {
        self.nested_coproduct(n, true)
    }

    /// Right-nested `(id^{⊗n−2}⊗Δ)∘…∘Δ`; equals the left-nested one for
    /// coassociative data.
    pub fn right_nested_coproduct(&self, n: usize) -> IteratedCoproduct<K::Elem> {
        self.nested_coproduct(n, false)
    }

    fn nested_coproduct(&self, n: usize, left: bool) -> IteratedCoproduct<K::Elem> {
        assert!(n >= 1, "coproduct arity must be at least 1");
        let k = self.field();
        let terms = (0..self.dim())
            .map(|i| {
                let mut cur: Vec<(K::Elem, Vec<usize>)> = vec![(k.one(), vec![i])];
                for _ in 1..n {
                    let mut next: BTreeMap<Vec<usize>, K::Elem> = BTreeMap::new();
                    for (c, t) in &cur {
                        let pos = if left { 0 } else { t.len() - 1 };
                        for (x, a, b) in &self.comult[t[pos]] {
                            let mut nt = Vec::with_capacity(t.len() + 1);
                            nt.extend_from_slice(&t[..pos]);
                            nt.push(*a);
                            nt.push(*b);
                            nt.extend_from_slice(&t[pos + 1..]);
                            let e = next.entry(nt).or_insert_with(|| k.zero());
                            k.mul_add_assign(e, c, x);
                        }
                    }
                    cur = next.into_iter().filter(|(_, c)| !k.is_zero(c)).map(|(t, c)| (c, t)).collect();
                }
                cur
            })
            .collect();
        IteratedCoproduct { arity: n, terms }
    }

    /// Image of `δ = (id − τ)Δ` inside `B⊗B`.
    pub fn cocommutativity_defect(&self) -> SubspaceBasis<K::Elem> {
        let k = self.field();
        let d = self.dim();
        let vecs: Vec<Vec<K::Elem>> = (0..d)
            .map(|i| {
                let mut v = vec![k.zero(); d * d];
                for (c, a, b) in &self.comult[i] {
                    k.add_assign(&mut v[a * d + b], c);
                    v[b * d + a] = k.sub(&v[b * d + a], c);
                }
                v
            })
            .collect();
        span_reduce(k, &vecs, d * d)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutativity_defect().dim() == 0
    }

    /// Co-opposite bialgebra: `Δ^cop = τΔ`, antipode `S⁻¹`, inverse `S`.
    pub fn cop(&self) -> Self {
        let comult: Vec<_> = self
            .comult
            .iter()
            .map(|t| t.iter().map(|(c, a, b)| (c.clone(), *b, *a)).collect())
            .collect();
        let k = self.field();
        HopfData::new(
            self.alg.clone(),
            comult,
            self.counit.clone(),
            self.antipode_inv.as_ref().map(|m| m.to_dense(k)),
            self.antipode.as_ref().map(|m| m.to_dense(k)),
        )
        .expect("co-opposite keeps shapes")
    }

    fn tensor_mul(&self, x: &SparseVec<K::Elem>, y: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let k = self.field();
        let d = self.dim();
        let mut acc = Vec::new();
        for (p, a) in x {
            for (q, b) in y {
                let ab = k.mul(a, b);
                let l = self.alg.mul_basis(p / d, q / d);
                let r = self.alg.mul_basis(p % d, q % d);
                for (i, u) in l {
                    let abu = k.mul(&ab, u);
                    for (j, v) in r {
                        acc.push((i * d + j, k.mul(&abu, v)));
                    }
                }
            }
        }
        normalize(k, acc)
    }

    /// `μ(S⊗id)Δ` or `μ(id⊗S)Δ` on a basis element.
    fn antipode_convolution(&self, s: &LinearMap<K::Elem>, i: usize, left: bool) -> SparseVec<K::Elem> {
        let k = self.field();
        let mut acc = Vec::new();
        for (c, a, b) in &self.comult[i] {
            let (x, y) = if left {
                (s.apply(k, &[(*a, k.one())]), self.alg.basis_vec(*b))
            } else {
                (self.alg.basis_vec(*a), s.apply(k, &[(*b, k.one())]))
            };
            for (j, z) in self.alg.mul(&x, &y) {
                acc.push((j, k.mul(c, &z)));
            }
        }
        normalize(k, acc)
    }

    fn name(&self, i: usize) -> &str {
        self.alg.name(i)
    }

    /// Every coalgebra, bialgebra and antipode axiom on basis elements.
    pub fn validate(&self) -> ValidationReport {
        let k = self.field();
        let d = self.dim();
        let mut report = ValidationReport::new("hopf");
        report.absorb("", self.alg.validate());

        let l3 = self.iterated_coproduct(3);
        let r3 = self.right_nested_coproduct(3);
        let mut c = Checker::new("coassociativity");
        for i in 0..d {
            c.case(l3.terms[i] == r3.terms[i], || self.name(i).to_string());
        }
        report.push(c);

        let mut c = Checker::new("counit");
        for i in 0..d {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (x, a, b) in &self.comult[i] {
                left.push((*b, k.mul(x, &self.counit[*a])));
                right.push((*a, k.mul(x, &self.counit[*b])));
            }
            let e = self.alg.basis_vec(i);
            c.case(normalize(k, left) == e && normalize(k, right) == e, || self.name(i).to_string());
        }
        report.push(c);

        let mut c = Checker::new("comultiplication multiplicative");
        let unit = self.alg.unit().clone();
        let unit2 = crate::tensor::tensor_vectors(k, &[&unit, &unit], &[d, d]);
        c.case(self.delta_of(&unit) == unit2, || "unit".to_string());
        for i in 0..d {
            for j in 0..d {
                let lhs = self.delta_of(self.alg.mul_basis(i, j));
                let rhs = self.tensor_mul(&self.delta[i], &self.delta[j]);
                c.case(lhs == rhs, || format!("({},{})", self.name(i), self.name(j)));
            }
        }
        report.push(c);

        let mut c = Checker::new("counit multiplicative");
        c.case(k.is_one(&self.eps(&unit)), || "unit".to_string());
        for i in 0..d {
            for j in 0..d {
                let lhs = self.eps(self.alg.mul_basis(i, j));
                let rhs = k.mul(&self.counit[i], &self.counit[j]);
                c.case(lhs == rhs, || format!("({},{})", self.name(i), self.name(j)));
            }
        }
        report.push(c);

        if let Some(s) = &self.antipode {
            let mut c = Checker::new("antipode");
            for i in 0..d {
                let target: SparseVec<_> =
                    unit.iter().map(|(j, u)| (*j, k.mul(u, &self.counit[i]))).filter(|(_, x)| !k.is_zero(x)).collect();
                let ok = self.antipode_convolution(s, i, true) == target
                    && self.antipode_convolution(s, i, false) == target;
                c.case(ok, || self.name(i).to_string());
            }
            report.push(c);
        }
        if let (Some(s), Some(t)) = (&self.antipode, &self.antipode_inv) {
            let mut c = Checker::new("antipode inverse");
            for i in 0..d {
                let e = self.alg.basis_vec(i);
                let ok = s.apply(k, &t.apply(k, &e)) == e && t.apply(k, &s.apply(k, &e)) == e;
                c.case(ok, || self.name(i).to_string());
            }
            report.push(c);
        }
        report
    }

    /// Left adjoint action `ad_b(c) = b₍₁₎ c S(b₍₂₎)` on basis elements.
    pub fn adjoint(&self, b: usize, c: usize) -> Result<SparseVec<K::Elem>> {
        let k = self.field();
        let mut acc = Vec::new();
        for (x, a, bb) in &self.comult[b] {
            let sb = self.s(&[(*bb, k.one())], "adjoint action")?;
            let left = self.alg.mul(&self.alg.basis_vec(*a), &self.alg.basis_vec(c));
            for (j, y) in self.alg.mul(&left, &sb) {
                acc.push((j, k.mul(x, &y)));
            }
        }
        Ok(normalize(k, acc))
    }

    pub fn format_vec(&self, v: &[(usize, K::Elem)]) -> String {
        format_vec(self.field(), v, |i| self.name(i).to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::super::builtins::{group_algebra, sweedler4, trivial_k};
    use crate::exactfield::{Field, LinearMap, Rationals};

    #[test]
    fn coproduct_examples() {
        let k = Rationals;
        let z2 = group_algebra(&k, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.iterated_coproduct(3).terms[1], vec![(k.one(), vec![1, 1, 1])]);
        let sw = sweedler4(&k);
        let d2 = sw.iterated_coproduct(2).terms[2].clone();
        assert_eq!(d2, vec![(k.one(), vec![1, 2]), (k.one(), vec![2, 0])]);
        let id = sw.iterated_coproduct(1);
        for i in 0..4 {
            assert_eq!(id.terms[i], vec![(k.one(), vec![i])]);
        }
    }

    #[test]
    fn defect_examples() {
        let k = Rationals;
        assert_eq!(trivial_k(&k).cocommutativity_defect().dim(), 0);
        assert_eq!(group_algebra(&k, &[vec![0, 1], vec![1, 0]]).unwrap().cocommutativity_defect().dim(), 0);
        assert!(sweedler4(&k).cocommutativity_defect().dim() > 0);
    }

    #[test]
    fn sweedler_antipode_squares_to_conjugation() {
        let k = Rationals;
        let sw = sweedler4(&k);
        let s = sw.antipode_map().unwrap();
        let s2 = s.compose(&k, s);
        let g = sw.alg().basis_vec(1);
        let conj = LinearMap::from_columns(
            4,
            (0..4).map(|i| sw.alg().mul(&sw.alg().mul(&g, &sw.alg().basis_vec(i)), &g)).collect(),
        );
        assert_eq!(s2, conj);
        assert_ne!(s2, LinearMap::identity(&k, 4));
        assert_eq!(s.compose(&k, sw.antipode_inv_map().unwrap()), LinearMap::identity(&k, 4));
    }

    #[test]
    fn cop_is_valid() {
        let k = Rationals;
        assert!(sweedler4(&k).cop().validate().passed());
    }
}
