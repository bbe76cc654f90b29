use super::hochschild::quotient_complex;
use super::quotient::QuotientMode;
use crate::error::Result;
use crate::exactfield::{rank, Field, Matrix};
use crate::modact::{EquivariantBimodule, ModuleAlgebra};
use crate::report::{BettiTable, OracleReport};
use crate::tensor::TensorShape;

/// Standard Hochschild complex `V ⊗ A^{⊗n}` with
/// `b(v⊗a₁…aₙ) = va₁⊗a₂… + Σ(−1)ⁱ v⊗…aᵢaᵢ₊₁… + (−1)ⁿ aₙv⊗a₁…a_{n−1}`,
/// built densely.
fn standard_differential<K: Field>(ma: &ModuleAlgebra<K>, v: &EquivariantBimodule<K>, n: usize) -> Matrix<K::Elem> {
    let k = ma.field();
    let a = ma.alg();
    let (da, dv) = (a.dim(), v.dim());
    let shape = |n: usize| {
        let mut d = vec![dv];
        d.extend(std::iter::repeat(da).take(n));
        TensorShape::new(d)
    };
    let (src, dst) = (shape(n), shape(n - 1));
    let mut m = Matrix::zeros(k, dst.size(), src.size());
    let add = |m: &mut Matrix<K::Elem>, row: usize, col: usize, c: K::Elem| {
        let cur = m.get(row, col).clone();
        m.set(row, col, k.add(&cur, &c));
    };
    for col in 0..src.size() {
        let t = src.decode_vec(col);
        for (w, c) in v.ra(t[0], t[1], da) {
            let mut out = vec![*w];
            out.extend_from_slice(&t[2..]);
            add(&mut m, dst.encode(&out), col, c.clone());
        }
        for i in 1..n {
            let sign = if i % 2 == 0 { k.one() } else { k.neg(&k.one()) };
            for (z, c) in a.mul_basis(t[i], t[i + 1]) {
                let mut out = t[..i].to_vec();
                out.push(*z);
                out.extend_from_slice(&t[i + 2..]);
                add(&mut m, dst.encode(&out), col, k.mul(&sign, c));
            }
        }
        let sign = if n % 2 == 0 { k.one() } else { k.neg(&k.one()) };
        for (w, c) in v.la(t[n], t[0]) {
            let mut out = vec![*w];
            out.extend_from_slice(&t[1..n]);
            add(&mut m, dst.encode(&out), col, k.mul(&sign, c));
        }
    }
    m
}

/// Columns spanning `{b·x − ε(b)x}` on `V ⊗ A^{⊗n}` with the diagonal action.
fn coinvariance_relations<K: Field>(ma: &ModuleAlgebra<K>, v: &EquivariantBimodule<K>, n: usize) -> Vec<Vec<K::Elem>> {
    let k = ma.field();
    let (da, dv) = (ma.alg().dim(), v.dim());
    let b = ma.hopf();
    let mut dims = vec![dv];
    dims.extend(std::iter::repeat(da).take(n));
    let shape = TensorShape::new(dims);
    let cop = b.iterated_coproduct(n + 1);
    let mut out = Vec::new();
    for bi in 0..b.dim() {
        for col in 0..shape.size() {
            let t = shape.decode_vec(col);
            let mut vec = vec![k.zero(); shape.size()];
            vec[col] = k.neg(&b.counit()[bi]);
            for (c, legs) in &cop.terms[bi] {
                // expand the product of per-leg images
                let mut partial: Vec<(Vec<usize>, K::Elem)> = vec![(Vec::new(), c.clone())];
                for (i, &x) in t.iter().enumerate() {
                    let img = if i == 0 { v.lb(legs[0], x) } else { ma.act_basis(legs[i], x) };
                    let mut next = Vec::new();
                    for (idx, coef) in &partial {
                        for (y, z) in img {
                            let mut j = idx.clone();
                            j.push(*y);
                            next.push((j, k.mul(coef, z)));
                        }
                    }
                    partial = next;
                }
                for (idx, coef) in partial {
                    let p = shape.encode(&idx);
                    vec[p] = k.add(&vec[p], &coef);
                }
            }
            out.push(vec);
        }
    }
    out
}

fn stacked_rank<K: Field>(k: &K, rows: usize, cols: Vec<Vec<K::Elem>>) -> usize {
    if cols.is_empty() {
        return 0;
    }
    // columns as rows of the transpose; rank is unchanged
    let m = Matrix::from_rows(cols, rows);
    rank(k, &m)
}

/// Homology of the coinvariants of the standard Hochschild complex under the
/// diagonal action, by dense ranks: `rank d̄ₙ = dim(im dₙ + Rₙ₋₁) − dim Rₙ₋₁`.
pub fn ordinary_coinvariant_homology<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    up_to: usize,
) -> BettiTable {
    let k = ma.field();
    let (da, dv) = (ma.alg().dim(), v.dim());
    let dim = |n: usize| dv * da.pow(n as u32);
    let rels: Vec<Vec<Vec<K::Elem>>> = (0..=up_to + 1).map(|n| coinvariance_relations(ma, v, n)).collect();
    let rel_rank: Vec<usize> = (0..=up_to + 1).map(|n| stacked_rank(k, dim(n), rels[n].clone())).collect();
    let dbar_rank = |n: usize| {
        let d = standard_differential(ma, v, n);
        let mut cols: Vec<Vec<K::Elem>> = (0..d.cols()).map(|j| (0..d.rows()).map(|i| d.get(i, j).clone()).collect()).collect();
        cols.extend(rels[n - 1].iter().cloned());
        stacked_rank(k, dim(n - 1), cols) - rel_rank[n - 1]
    };
    let ranks: Vec<usize> = (0..=up_to + 1).map(|n| if n == 0 { 0 } else { dbar_rank(n) }).collect();
    let dims: Vec<usize> = (0..=up_to).map(|n| dim(n) - rel_rank[n] - ranks[n] - ranks[n + 1]).collect();
    BettiTable::new("ordinary Hochschild coinvariants", k.spec().label(), &dims)
}

/// For cocommutative `B`: `J_* = 0` and the Hopf–Hochschild table equals the
/// coinvariant ordinary Hochschild table.
pub fn compare_with_ordinary<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    max_degree: usize,
    cap: usize,
) -> Result<OracleReport> {
    let k = ma.field();
    let mut report = OracleReport::new("compare-ordinary");
    report.assert("B is cocommutative", ma.hopf().is_cocommutative(), || "δ = (id − τ)Δ is nonzero".into());
    let h = quotient_complex(ma, v, max_degree, QuotientMode::CoinvariantQch, cap)?;
    let j = h.quotient.obstruction_dims().to_vec();
    report.assert("J_n = 0", j.iter().all(|&d| d == 0), || format!("dim J = {j:?}"));
    let ours = h.quotient.homology_dims(k, max_degree)?;
    let theirs = ordinary_coinvariant_homology(ma, v, max_degree);
    report.assert("tables agree", ours.dims() == theirs.dims(), || format!("{:?} vs {:?}", ours.dims(), theirs.dims()));
    report.tables.push(ours);
    report.tables.push(theirs);
    Ok(report)
}
