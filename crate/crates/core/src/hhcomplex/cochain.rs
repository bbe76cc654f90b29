use super::bar::BarComplex;
use super::hochschild::{check_size, diagonal_on_tensor, map_from_tensor};
use crate::error::{Error, Result};
use crate::exactfield::{normalize, null_space, Echelon, Field, LinearMap, SparseVec};
use crate::modact::{e_module_table, EquivariantBimodule, ModuleAlgebra};
use crate::report::{BettiTable, Checker};
use crate::tensor::TensorShape;

/// A cochain complex of subspaces `C^n ⊆ Hom(X_n, V)`.
///
/// A linear map `f: X_n → V` has coordinate `x * dim V + w` for the
/// coefficient of `e_w` in `f(e_x)`. Coboundaries are given on the ambient
/// `Hom` spaces and must carry `C^n` into `C^{n+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplexRealization<K: Field> {
    pub label: String,
    ambient_dims: Vec<usize>,
    bases: Vec<Vec<SparseVec<K::Elem>>>,
    coboundaries: Vec<LinearMap<K::Elem>>,
}

impl<K: Field> CochainComplexRealization<K> {
    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }
    /// `dim C^n` per realized degree.
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }
    pub fn ambient_dims(&self) -> &[usize] {
        &self.ambient_dims
    }
    pub fn basis(&self, n: usize) -> &[SparseVec<K::Elem>] {
        &self.bases[n]
    }
    /// Ambient `δ^n : Hom(X_n,V) → Hom(X_{n+1},V)`, for `n < top`.
    pub fn coboundary(&self, n: usize) -> &LinearMap<K::Elem> {
        &self.coboundaries[n]
    }

    pub fn check_d_squared(&self, k: &K) -> Checker {
        let mut c = Checker::new(format!("{}: δ∘δ = 0", self.label));
        for n in 0..self.top_degree().saturating_sub(1) {
            let dd = self.coboundaries[n + 1].compose(k, &self.coboundaries[n]);
            c.case(dd.is_zero(), || format!("degree {n}"));
        }
        c
    }

    /// `δ(C^n) ⊆ C^{n+1}`.
    pub fn check_stable(&self, k: &K) -> Checker {
        let mut c = Checker::new(format!("{}: δ preserves the cochain subspaces", self.label));
        for n in 0..self.top_degree() {
            let mut target = Echelon::new(k, self.ambient_dims[n + 1]);
            target.extend(&self.bases[n + 1]);
            for (i, x) in self.bases[n].iter().enumerate() {
                c.case(target.contains(&self.coboundaries[n].apply(k, x)), || format!("degree {n}, basis vector {i}"));
            }
        }
        c
    }

    fn restricted_rank(&self, k: &K, n: usize) -> usize {
        let mut e = Echelon::new(k, self.ambient_dims[n + 1]);
        for x in &self.bases[n] {
            e.insert(&self.coboundaries[n].apply(k, x));
        }
        e.dim()
    }

    /// Cohomology dimensions in degrees `0..=up_to`; requires `up_to < top`.
    pub fn cohomology_dims(&self, k: &K, up_to: usize) -> Result<BettiTable> {
        if up_to >= self.top_degree() {
            return Err(Error::Precondition(format!(
                "cohomology up to degree {up_to} needs cochains realized to degree {}",
                up_to + 1
            )));
        }
        let ranks: Vec<usize> = (0..=up_to).map(|n| self.restricted_rank(k, n)).collect();
        let dims: Vec<usize> = (0..=up_to)
            .map(|n| self.bases[n].len() - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
            .collect();
        Ok(BettiTable::new(self.label.clone(), k.spec().label(), &dims))
    }
}

/// `f ↦ f∘m` from `Hom(Y,V)` to `Hom(X,V)` for `m: X → Y`.
pub(crate) fn precompose<E: Clone + PartialEq>(m: &LinearMap<E>, dv: usize) -> LinearMap<E> {
    let rows = m.transpose();
    let mut cols = Vec::with_capacity(m.dst_dim() * dv);
    for y in 0..m.dst_dim() {
        for w in 0..dv {
            cols.push(rows.column(y).iter().map(|(x, c)| (x * dv + w, c.clone())).collect());
        }
    }
    LinearMap::from_columns(m.src_dim() * dv, cols)
}

/// Rows of `f(g·x) − g·f(x) = 0` for each `(g, x, w′)`, where `g` runs over
/// pairs (action on `X`, action on `V` given by image columns).
fn equivariance_rows<K: Field>(
    k: &K,
    actions: &[(LinearMap<K::Elem>, Vec<SparseVec<K::Elem>>)],
    dv: usize,
) -> Vec<SparseVec<K::Elem>> {
    let mut rows = Vec::new();
    for (on_x, on_v) in actions {
        // transposed V-action: for each w′ the pairs (w, coefficient of w′ in g·e_w)
        let mut tv: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); dv];
        for (w, img) in on_v.iter().enumerate() {
            for (w2, c) in img {
                tv[*w2].push((w, c.clone()));
            }
        }
        for x in 0..on_x.src_dim() {
            for (w2, tvw) in tv.iter().enumerate() {
                let mut row: Vec<(usize, K::Elem)> =
                    on_x.column(x).iter().map(|(y, c)| (y * dv + w2, c.clone())).collect();
                row.extend(tvw.iter().map(|(w, c)| (x * dv + w, k.neg(c))));
                let row = normalize(k, row);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

fn a_tensor_shape(da: usize, n: usize) -> TensorShape {
    TensorShape::new(vec![da; n])
}

/// `L_b` on `A^{⊗n}` (the scalar `ε(b)` when `n = 0`).
fn action_on_a_tensor<K: Field>(ma: &ModuleAlgebra<K>, n: usize, b: usize) -> LinearMap<K::Elem> {
    let legs = vec![ma.action_table(); n];
    diagonal_on_tensor(ma.field(), ma.hopf(), &a_tensor_shape(ma.alg().dim(), n), b, &legs)
}

/// Hochschild coboundary on `Hom(A^{⊗n}, V)`:
/// `(δf)(a₁,…,a_{n+1}) = a₁f(a₂,…) + Σⱼ(−1)ʲ f(…,aⱼaⱼ₊₁,…) + (−1)^{n+1} f(a₁,…,aₙ)a_{n+1}`.
pub(crate) fn hochschild_coboundary<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    n: usize,
) -> LinearMap<K::Elem> {
    let k = ma.field();
    let a = ma.alg();
    let (da, dv) = (a.dim(), v.dim());
    let src_n = da.pow(n as u32);
    let mut total = {
        let mut cols = Vec::with_capacity(src_n * dv);
        for x in 0..src_n {
            for w in 0..dv {
                let mut acc = Vec::new();
                for a1 in 0..da {
                    let y = a1 * src_n + x;
                    acc.extend(v.la(a1, w).iter().map(|(w2, c)| (y * dv + w2, c.clone())));
                }
                let sign = if (n + 1) % 2 == 0 { k.one() } else { k.neg(&k.one()) };
                for an in 0..da {
                    let y = x * da + an;
                    acc.extend(v.ra(w, an, da).iter().map(|(w2, c)| (y * dv + w2, k.mul(&sign, c))));
                }
                cols.push(normalize(k, acc));
            }
        }
        LinearMap::from_columns(src_n * da * dv, cols)
    };
    let src = a_tensor_shape(da, n + 1);
    let dst = a_tensor_shape(da, n);
    for j in 1..=n {
        let p = j - 1;
        let m = map_from_tensor(k, &src, dst.size(), |t, acc| {
            let mut out: Vec<usize> = t[..p].iter().chain(std::iter::once(&0)).chain(&t[p + 2..]).cloned().collect();
            for (z, c) in a.mul_basis(t[p], t[p + 1]) {
                out[p] = *z;
                acc.push((dst.encode(&out), c.clone()));
            }
        });
        let sign = if j % 2 == 0 { k.one() } else { k.neg(&k.one()) };
        total = total.axpy(k, &sign, &precompose(&m, dv));
    }
    total
}

/// Reduced model: `C^n = Hom_B(A^{⊗n}, V)` for `0 ≤ n ≤ top` with the
/// Hochschild coboundary.
pub fn cochain_complex<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    top: usize,
    cap: usize,
) -> Result<CochainComplexRealization<K>> {
    let k = ma.field();
    let (da, dv, db) = (ma.alg().dim(), v.dim(), ma.hopf().dim());
    let mut ambient_dims = Vec::new();
    let mut bases = Vec::new();
    for n in 0..=top {
        let d = da.checked_pow(n as u32).and_then(|x| x.checked_mul(dv)).unwrap_or(usize::MAX);
        check_size(n, d, cap)?;
        ambient_dims.push(d);
        let actions: Vec<_> = (0..db)
            .map(|b| (action_on_a_tensor(ma, n, b), (0..dv).map(|w| v.lb(b, w).clone()).collect()))
            .collect();
        bases.push(null_space(k, d, &equivariance_rows(k, &actions, dv)));
    }
    let coboundaries = (0..top).map(|n| hochschild_coboundary(ma, v, n)).collect();
    Ok(CochainComplexRealization { label: "Hom_B(A^n,V)".into(), ambient_dims, bases, coboundaries })
}

/// Full model: `C^n = Hom_E(CB_n(A), V)` with `δf = f∘d_{n+1}`; `bar` must be
/// realized to degree `top + 1`.
pub fn full_cochain_complex<K: Field>(
    bar: &BarComplex<K>,
    v: &EquivariantBimodule<K>,
    top: usize,
    cap: usize,
) -> Result<CochainComplexRealization<K>> {
    let ma = bar.module_algebra();
    let k = ma.field();
    let dv = v.dim();
    if bar.complex.top_degree() < top + 1 {
        return Err(Error::Precondition(format!("CB must be realized to degree {}", top + 1)));
    }
    let vt = e_module_table(ma, &bar.crossed, v);
    let gens = bar.e_generators();
    let mut ambient_dims = Vec::new();
    let mut bases = Vec::new();
    for n in 0..=top {
        let d = bar.complex.dim(n) * dv;
        check_size(n, d, cap)?;
        ambient_dims.push(d);
        let actions: Vec<_> = gens
            .iter()
            .map(|(_, g)| {
                let on_v = (0..dv)
                    .map(|w| {
                        let acc = g.iter().flat_map(|(e, c)| vt[e * dv + w].iter().map(move |(t, x)| (*t, k.mul(c, x))));
                        normalize(k, acc.collect())
                    })
                    .collect();
                (bar.e_action(n, g), on_v)
            })
            .collect();
        bases.push(null_space(k, d, &equivariance_rows(k, &actions, dv)));
    }
    let coboundaries = (0..top).map(|n| precompose(bar.complex.differential(n + 1), dv)).collect();
    Ok(CochainComplexRealization { label: "Hom_E(CB_n,V)".into(), ambient_dims, bases, coboundaries })
}

/// `ρ_n : Hom(CB_n, V) → Hom(A^{⊗n}, V)`, `ρ(f)(x) = f(1⊗x⊗1)`.
pub fn restriction<K: Field>(bar: &BarComplex<K>, n: usize, dv: usize) -> LinearMap<K::Elem> {
    let da = bar.module_algebra().alg().dim();
    let src_n = da.pow(n as u32);
    let mut cols = Vec::with_capacity(src_n * dv);
    for x in 0..src_n {
        let u = bar.embed_unit_ends(n, x);
        for w in 0..dv {
            cols.push(u.iter().map(|(c, z)| (c * dv + w, z.clone())).collect());
        }
    }
    LinearMap::from_columns(bar.complex.dim(n) * dv, cols).transpose()
}

/// Equal dimensions, injective restriction and `ρ∘δ_full = δ_red∘ρ` in
/// degrees `0..=up_to`.
pub fn compare_cochain_models<K: Field>(
    k: &K,
    reduced: &CochainComplexRealization<K>,
    full: &CochainComplexRealization<K>,
    bar: &BarComplex<K>,
    dv: usize,
    up_to: usize,
) -> Vec<Checker> {
    let mut dims = Checker::new("reduced and full cochain models have equal dimensions");
    let mut inj = Checker::new("restriction is an isomorphism onto the reduced model");
    let mut comm = Checker::new("restriction commutes with coboundaries");
    for n in 0..=up_to.min(reduced.top_degree()).min(full.top_degree()) {
        dims.case(reduced.dims()[n] == full.dims()[n], || {
            format!("degree {n}: {} vs {}", reduced.dims()[n], full.dims()[n])
        });
        let rho = restriction(bar, n, dv);
        let mut target = Echelon::new(k, reduced.ambient_dims()[n]);
        target.extend(reduced.basis(n));
        let mut img = Echelon::new(k, reduced.ambient_dims()[n]);
        let mut inside = true;
        for f in full.basis(n) {
            let g = rho.apply(k, f);
            inside &= target.contains(&g);
            img.insert(&g);
        }
        inj.case(inside && img.dim() == full.basis(n).len() && img.dim() == target.dim(), || format!("degree {n}"));
        if n < up_to && n < reduced.top_degree() && n < full.top_degree() {
            let rho1 = restriction(bar, n + 1, dv);
            for (i, f) in full.basis(n).iter().enumerate() {
                let lhs = rho1.apply(k, &full.coboundary(n).apply(k, f));
                let rhs = reduced.coboundary(n).apply(k, &rho.apply(k, f));
                comm.case(lhs == rhs, || format!("degree {n}, basis cochain {i}"));
            }
        }
    }
    vec![dims, inj, comm]
}

/// `(dim HH⁰, dim HH¹)` from `(ᴮV)^{Lie(A)}` and `Der_B(A,V)/[A, ᴮV]`.
pub fn hh01_closed_forms<K: Field>(ma: &ModuleAlgebra<K>, v: &EquivariantBimodule<K>) -> (usize, usize) {
    let k = ma.field();
    let a = ma.alg();
    let b = ma.hopf();
    let (da, dv, db) = (a.dim(), v.dim(), b.dim());

    // ᴮV: rows indexed by (b, w′)
    let mut inv_rows = Vec::new();
    for bi in 0..db {
        let mut rows: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); dv];
        for w in 0..dv {
            for (w2, c) in v.lb(bi, w) {
                rows[*w2].push((w, c.clone()));
            }
            rows[w].push((w, k.neg(&b.counit()[bi])));
        }
        inv_rows.extend(rows.into_iter().map(|r| normalize(k, r)));
    }
    let bv = null_space(k, dv, &inv_rows);
    let mut center_rows = inv_rows;
    for x in 0..da {
        let mut rows: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); dv];
        for w in 0..dv {
            for (w2, c) in v.la(x, w) {
                rows[*w2].push((w, c.clone()));
            }
            for (w2, c) in v.ra(w, x, da) {
                rows[*w2].push((w, k.neg(c)));
            }
        }
        center_rows.extend(rows.into_iter().map(|r| normalize(k, r)));
    }
    let hh0 = null_space(k, dv, &center_rows).len();

    // Der_B(A,V) inside Hom(A,V), coordinate x * dv + w
    let mut der_rows = Vec::new();
    for x in 0..da {
        for y in 0..da {
            let mut rows: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); dv];
            for (t, c) in a.mul_basis(x, y) {
                for (w2, row) in rows.iter_mut().enumerate() {
                    row.push((t * dv + w2, c.clone()));
                }
            }
            for w in 0..dv {
                for (w2, c) in v.la(x, w) {
                    rows[*w2].push((y * dv + w, k.neg(c)));
                }
                for (w2, c) in v.ra(w, y, da) {
                    rows[*w2].push((x * dv + w, k.neg(c)));
                }
            }
            der_rows.extend(rows.into_iter().map(|r| normalize(k, r)));
        }
    }
    for bi in 0..db {
        for x in 0..da {
            let mut rows: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); dv];
            for (t, c) in ma.act_basis(bi, x) {
                for (w2, row) in rows.iter_mut().enumerate() {
                    row.push((t * dv + w2, c.clone()));
                }
            }
            for w in 0..dv {
                for (w2, c) in v.lb(bi, w) {
                    rows[*w2].push((x * dv + w, k.neg(c)));
                }
            }
            der_rows.extend(rows.into_iter().map(|r| normalize(k, r)));
        }
    }
    let der = null_space(k, da * dv, &der_rows).len();
    let mut inner = Echelon::new(k, da * dv);
    for u in &bv {
        let mut d = Vec::new();
        for x in 0..da {
            let xa = [(x, k.one())];
            let l = v.left_mul(k, &xa, u);
            let r = v.right_mul(k, u, &xa, da);
            d.extend(l.into_iter().map(|(w, c)| (x * dv + w, c)));
            d.extend(r.into_iter().map(|(w, c)| (x * dv + w, k.neg(&c))));
        }
        inner.insert(&normalize(k, d));
    }
    (hh0, der - inner.dim())
}
