use serde::Serialize;

use super::Field;

/// Dense row-major matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<K: Field<Elem = E>>(k: &K, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![k.zero(); rows * cols] }
    }

    pub fn identity<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    /// Panics unless `entries.len() == rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<E>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix entry count");
        Matrix { rows, cols, entries }
    }

    /// All rows must share one length; `cols` disambiguates the empty case.
    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r);
        }
        Matrix { rows: n, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[E] {
        &self.entries
    }
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.entries[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul<K: Field<Elem = E>>(&self, k: &K, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(k, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    k.mul_add_assign(&mut out.entries[idx], a, rhs.get(l, j));
                }
            }
        }
        out
    }

    pub fn mul_vec<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    k.mul_add_assign(&mut acc, a, x);
                }
                acc
            })
            .collect()
    }

    pub fn is_zero<K: Field<Elem = E>>(&self, k: &K) -> bool {
        self.entries.iter().all(|e| k.is_zero(e))
    }
}

/// Reduced row echelon form together with its pivot columns.
pub(crate) struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

/// Leftmost-pivot, first-nonzero-row Gauss–Jordan elimination.
pub(crate) fn rref<K: Field + ?Sized>(k: &K, m: &Matrix<K::Elem>) -> Rref<K::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !k.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.entries.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(a.get(r, c)).expect("nonzero pivot");
        for j in c..cols {
            let v = k.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || k.is_zero(a.get(i, c)) {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                let v = k.sub(a.get(i, j), &k.mul(&f, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

/// A subspace of `k^ambient_dim` in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceBasis<E> {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<E>>,
    pub pivot_cols: Vec<usize>,
}

impl<E: Clone + PartialEq> SubspaceBasis<E> {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, basis: Vec::new(), pivot_cols: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; the result vanishes at every pivot.
    pub fn residual<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivot_cols) {
            if k.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !k.is_zero(y) {
                    *x = k.sub(x, &k.mul(&c, y));
                }
            }
        }
        r
    }

    pub fn contains<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> bool {
        self.residual(k, v).iter().all(|x| k.is_zero(x))
    }
}

pub fn rank<K: Field>(k: &K, m: &Matrix<K::Elem>) -> usize {
    k.dense_rank(m)
}

/// Basis of the null space `{x : m·x = 0}`, returned in reduced echelon form.
pub fn kernel_basis<K: Field>(k: &K, m: &Matrix<K::Elem>) -> SubspaceBasis<K::Elem> {
    let Rref { matrix: r, pivots } = rref(k, m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vec<K::Elem>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![k.zero(); n];
            x[f] = k.one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = k.neg(r.get(i, f));
            }
            x
        })
        .collect();
    span_reduce(k, &vecs, n)
}

/// Reduced echelon basis of the span of `vectors`.
pub fn span_reduce<K: Field>(
    k: &K,
    vectors: &[Vec<K::Elem>],
    ambient_dim: usize,
) -> SubspaceBasis<K::Elem> {
    let m = Matrix::from_rows(vectors.to_vec(), ambient_dim);
    let Rref { matrix, pivots } = rref(k, &m);
    let basis = (0..pivots.len()).map(|i| matrix.row(i).to_vec()).collect();
    SubspaceBasis { ambient_dim, basis, pivot_cols: pivots }
}

/// Complement coordinates of `sub` and the projection onto them.
///
/// The projection sends `x` to the non-pivot coordinates of its residual
/// modulo `sub`; it annihilates `sub` and is the identity on the
/// complement coordinates.
pub fn quotient_data<K: Field>(
    k: &K,
    sub: &SubspaceBasis<K::Elem>,
) -> (Vec<usize>, Matrix<K::Elem>) {
    let n = sub.ambient_dim;
    let mut slot = vec![None; n];
    for (i, &p) in sub.pivot_cols.iter().enumerate() {
        slot[p] = Some(i);
    }
    let complement: Vec<usize> = (0..n).filter(|&j| slot[j].is_none()).collect();
    let mut proj = Matrix::zeros(k, complement.len(), n);
    for (qi, &c) in complement.iter().enumerate() {
        proj.set(qi, c, k.one());
        for (row, &p) in sub.basis.iter().zip(&sub.pivot_cols) {
            if !k.is_zero(&row[c]) {
                proj.set(qi, p, k.neg(&row[c]));
            }
        }
    }
    (complement, proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<num_rational::BigRational> {
        let k = Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Rationals, &q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&Rationals, &q(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])), 0);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank(&f2, &Matrix::from_rows(vec![vec![1, 1], vec![1, 1]], 2)), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = Rationals;
        assert_eq!(kernel_basis(&k, &Matrix::identity(&k, 2)).dim(), 0);
        assert_eq!(kernel_basis(&k, &Matrix::zeros(&k, 2, 2)).dim(), 2);
        let ker = kernel_basis(&k, &q(&[&[1, 1]]));
        assert_eq!(ker.basis, vec![vec![k.from_i64(1), k.from_i64(-1)]]);
    }

    #[test]
    fn span_examples() {
        let k = Rationals;
        let v = |a: i64, b: i64| vec![k.from_i64(a), k.from_i64(b)];
        assert_eq!(span_reduce(&k, &[v(1, 0), v(1, 0)], 2).dim(), 1);
        assert_eq!(span_reduce(&k, &[], 2).dim(), 0);
        assert_eq!(span_reduce(&k, &[v(1, 2), v(2, 4), v(0, 1)], 2).dim(), 2);
    }

    #[test]
    fn quotient_examples() {
        let k = Rationals;
        let v = |a: i64, b: i64| vec![k.from_i64(a), k.from_i64(b)];
        let (c, p) = quotient_data(&k, &span_reduce(&k, &[v(1, 0)], 2));
        assert_eq!(c, vec![1]);
        assert_eq!(p, q(&[&[0, 1]]));
        let (_, p) = quotient_data(&k, &SubspaceBasis::zero(2));
        assert_eq!(p, Matrix::identity(&k, 2));
        let (_, p) = quotient_data(&k, &span_reduce(&k, &[v(1, 1)], 2));
        assert!(p.mul_vec(&k, &v(1, 1)).iter().all(|x| k.is_zero(x)));
        assert_eq!(rank(&k, &p), 1);
    }

    #[test]
    fn bareiss_agrees_with_gauss_jordan() {
        let m = q(&[&[2, 4, 1, 0], &[1, 2, 3, 5], &[3, 6, 4, 5], &[0, 0, 7, 1]]);
        assert_eq!(rank(&Rationals, &m), rref(&Rationals, &m).pivots.len());
        assert_eq!(rank(&Rationals, &m), 3);
    }
}
