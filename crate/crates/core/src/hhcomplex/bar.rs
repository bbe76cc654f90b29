use super::chain::ChainComplexRealization;
use super::hochschild::{check_size, diagonal_on_tensor, map_from_tensor};
use crate::error::Result;
use crate::exactfield::{Field, LinearMap, SparseVec};
use crate::modact::{crossed_product, CrossedProduct, ModuleAlgebra};
use crate::report::Checker;
use crate::tensor::{tensor_vectors, TensorShape};

/// `CB_n(A) = A^{⊗n+2}` with the left `A^e⋊B`-action
/// `(a⊗a′⊗b)(c₀⊗…⊗c_{n+1}) = a·b₍₁₎(c₀) ⊗ b₍₂₎(c₁) ⊗ … ⊗ b₍ₙ₊₂₎(c_{n+1})·a′`.
#[derive(Clone, Debug)]
pub struct BarComplex<K: Field> {
    pub complex: ChainComplexRealization<K>,
    pub crossed: CrossedProduct<K>,
    ma: ModuleAlgebra<K>,
    /// `left[a][b * dA + x] = a·b(x)`.
    left: Vec<Vec<SparseVec<K::Elem>>>,
    /// `right[a′][b * dA + x] = b(x)·a′`.
    right: Vec<Vec<SparseVec<K::Elem>>>,
}

/// Realizes `CB_n` for `0 ≤ n ≤ top`; faces `∂_j`, `0 ≤ j ≤ n`, multiply
/// tensor positions `j` and `j+1`, and `d₀ = 0`.
pub fn build_cb<K: Field>(ma: &ModuleAlgebra<K>, top: usize, cap: usize) -> Result<BarComplex<K>> {
    let k = ma.field();
    let a = ma.alg();
    let da = a.dim();
    let db = ma.hopf().dim();
    let mut dims = Vec::new();
    for n in 0..=top {
        let d = da.checked_pow(n as u32 + 2).unwrap_or(usize::MAX);
        check_size(n, d, cap)?;
        dims.push(d);
    }
    let mut faces = vec![Vec::new()];
    for n in 1..=top {
        let src = TensorShape::new(vec![da; n + 2]);
        let dst = TensorShape::new(vec![da; n + 1]);
        let fs = (0..=n)
            .map(|j| {
                map_from_tensor(k, &src, dst.size(), |t, acc| {
                    let mut out: Vec<usize> = t[..j].iter().chain(std::iter::once(&0)).chain(&t[j + 2..]).cloned().collect();
                    for (m, c) in a.mul_basis(t[j], t[j + 1]) {
                        out[j] = *m;
                        acc.push((dst.encode(&out), c.clone()));
                    }
                })
            })
            .collect();
        faces.push(fs);
    }
    let complex = ChainComplexRealization::from_faces(k, "CB(A)", "(a0,…,a_{n+1}) row-major", dims, faces);
    let left = (0..da)
        .map(|x| (0..db * da).map(|p| a.mul(&a.basis_vec(x), ma.act_basis(p / da, p % da))).collect())
        .collect();
    let right = (0..da)
        .map(|x| (0..db * da).map(|p| a.mul(ma.act_basis(p / da, p % da), &a.basis_vec(x))).collect())
        .collect();
    Ok(BarComplex { complex, crossed: crossed_product(ma), ma: ma.clone(), left, right })
}

impl<K: Field> BarComplex<K> {
    pub fn module_algebra(&self) -> &ModuleAlgebra<K> {
        &self.ma
    }

    /// Action of the `E`-basis element `e` on `CB_n`.
    pub fn e_action_basis(&self, n: usize, e: usize) -> LinearMap<K::Elem> {
        let (a, a2, b) = self.crossed.split(e);
        let da = self.ma.alg().dim();
        let shape = TensorShape::new(vec![da; n + 2]);
        let mut legs: Vec<&[SparseVec<K::Elem>]> = vec![self.ma.action_table(); n + 2];
        legs[0] = &self.left[a];
        legs[n + 1] = &self.right[a2];
        diagonal_on_tensor(self.ma.field(), self.ma.hopf(), &shape, b, &legs)
    }

    /// Action of an arbitrary element of `E` on `CB_n`.
    pub fn e_action(&self, n: usize, e: &[(usize, K::Elem)]) -> LinearMap<K::Elem> {
        let k = self.ma.field();
        let d = self.complex.dim(n);
        e.iter().fold(LinearMap::zero(d, d), |acc, (i, c)| acc.axpy(k, c, &self.e_action_basis(n, *i)))
    }

    /// Generators `a⊗1⊗1`, `1⊗a′⊗1`, `1⊗1⊗b` of `E`, with labels.
    pub fn e_generators(&self) -> Vec<(String, SparseVec<K::Elem>)> {
        let k = self.ma.field();
        let (a, b) = (self.ma.alg(), self.ma.hopf().alg());
        let (ua, ub) = (a.unit(), b.unit());
        let mut out = Vec::new();
        for x in 0..a.dim() {
            out.push((format!("{}⊗1⊗1", a.name(x)), self.crossed.element(k, &a.basis_vec(x), ua, ub)));
        }
        for x in 0..a.dim() {
            out.push((format!("1⊗{}⊗1", a.name(x)), self.crossed.element(k, ua, &a.basis_vec(x), ub)));
        }
        for y in 0..b.dim() {
            out.push((format!("1⊗1⊗{}", b.name(y)), self.crossed.element(k, ua, ua, &b.basis_vec(y))));
        }
        out
    }

    /// Every face map commutes with every generator of `E`.
    pub fn check_e_linearity(&self) -> Checker {
        let k = self.ma.field();
        let mut c = Checker::new("CB faces are E-linear");
        let gens = self.e_generators();
        let top = self.complex.top_degree();
        let mut acts: Vec<Vec<LinearMap<K::Elem>>> = Vec::new();
        for n in 0..=top {
            acts.push(gens.iter().map(|(_, g)| self.e_action(n, g)).collect());
        }
        for n in 1..=top {
            for (j, f) in self.complex.faces(n).iter().enumerate() {
                for (g, (name, _)) in gens.iter().enumerate() {
                    let lhs = f.compose(k, &acts[n][g]);
                    let rhs = acts[n - 1][g].compose(k, f);
                    c.case(lhs == rhs, || format!("degree {n}, face {j}, generator {name}"));
                }
            }
        }
        c
    }

    /// The action on `CB_n` is a left `E`-module structure (all basis pairs).
    pub fn check_e_module(&self, n: usize) -> Checker {
        let k = self.ma.field();
        let e = self.crossed.alg();
        let mut c = Checker::new(format!("CB_{n} is an E-module"));
        let acts: Vec<LinearMap<K::Elem>> = (0..e.dim()).map(|i| self.e_action_basis(n, i)).collect();
        let d = self.complex.dim(n);
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                let lhs = acts[i].compose(k, &acts[j]);
                let rhs = e.mul_basis(i, j).iter().fold(LinearMap::zero(d, d), |acc, (t, x)| acc.axpy(k, x, &acts[*t]));
                c.case(lhs == rhs, || format!("({},{})", e.name(i), e.name(j)));
            }
        }
        c
    }

    /// `1 ⊗ x ⊗ 1 ∈ CB_n` for a basis index `x` of `A^{⊗n}`.
    pub fn embed_unit_ends(&self, n: usize, x: usize) -> SparseVec<K::Elem> {
        let k = self.ma.field();
        let a = self.ma.alg();
        let da = a.dim();
        let mid = vec![(x, k.one())];
        tensor_vectors(k, &[a.unit(), &mid, a.unit()], &[da, da.pow(n as u32), da])
    }
}
