use super::{Field, Matrix};

/// Sorted `(index, coefficient)` pairs without zero coefficients.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Sorts by index, merges duplicates and drops zeros.
pub fn normalize<K: Field>(k: &K, mut v: Vec<(usize, K::Elem)>) -> SparseVec<K::Elem> {
    if v.is_empty() {
        return v;
    }
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<K::Elem> = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => k.add_assign(acc, &c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !k.is_zero(c));
    out
}

pub(crate) fn scale<K: Field>(k: &K, c: &K::Elem, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
    if k.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, k.mul(c, x))).collect()
}

/// `a + c·b` for normalized inputs.
pub(crate) fn axpy<K: Field>(
    k: &K,
    a: &[(usize, K::Elem)],
    c: &K::Elem,
    b: &[(usize, K::Elem)],
) -> SparseVec<K::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, k.mul(c, &b[j].1)));
            j += 1;
        } else {
            let mut s = a[i].1.clone();
            k.mul_add_assign(&mut s, c, &b[j].1);
            if !k.is_zero(&s) {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A linear map stored column by column: `cols[j]` is the image of the
/// `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<E> {
    src: usize,
    dst: usize,
    cols: Vec<SparseVec<E>>,
}

impl<E: Clone> LinearMap<E> {
    pub fn zero(src: usize, dst: usize) -> Self {
        LinearMap { src, dst, cols: vec![Vec::new(); src] }
    }

    /// Columns must already be normalized and in range.
    pub fn from_columns(dst: usize, cols: Vec<SparseVec<E>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.iter().all(|(i, _)| *i < dst)));
        LinearMap { src: cols.len(), dst, cols }
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }
    pub fn dst_dim(&self) -> usize {
        self.dst
    }
    pub fn column(&self, j: usize) -> &SparseVec<E> {
        &self.cols[j]
    }
    pub fn columns(&self) -> &[SparseVec<E>] {
        &self.cols
    }
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }
}

impl<E: Clone + PartialEq> LinearMap<E> {
    pub fn identity<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        LinearMap { src: n, dst: n, cols: (0..n).map(|i| vec![(i, k.one())]).collect() }
    }

    pub fn from_dense<K: Field<Elem = E>>(k: &K, m: &Matrix<E>) -> Self {
        let cols = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !k.is_zero(m.get(i, j)))
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        LinearMap { src: m.cols(), dst: m.rows(), cols }
    }

    pub fn to_dense<K: Field<Elem = E>>(&self, k: &K) -> Matrix<E> {
        let mut m = Matrix::zeros(k, self.dst, self.src);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn apply<K: Field<Elem = E>>(&self, k: &K, v: &[(usize, E)]) -> SparseVec<E> {
        let mut acc = Vec::new();
        for (j, c) in v {
            for (i, x) in &self.cols[*j] {
                acc.push((*i, k.mul(c, x)));
            }
        }
        normalize(k, acc)
    }

    /// `self ∘ rhs`
    pub fn compose<K: Field<Elem = E>>(&self, k: &K, rhs: &LinearMap<E>) -> LinearMap<E> {
        assert_eq!(rhs.dst, self.src, "dimension mismatch in composition");
        let cols = rhs.cols.iter().map(|c| self.apply(k, c)).collect();
        LinearMap { src: rhs.src, dst: self.dst, cols }
    }

    pub fn add<K: Field<Elem = E>>(&self, k: &K, rhs: &LinearMap<E>) -> LinearMap<E> {
        self.axpy(k, &k.one(), rhs)
    }

    pub fn sub<K: Field<Elem = E>>(&self, k: &K, rhs: &LinearMap<E>) -> LinearMap<E> {
        self.axpy(k, &k.neg(&k.one()), rhs)
    }

    /// `self + c·rhs`
    pub fn axpy<K: Field<Elem = E>>(&self, k: &K, c: &E, rhs: &LinearMap<E>) -> LinearMap<E> {
        assert_eq!((self.src, self.dst), (rhs.src, rhs.dst), "shape mismatch");
        let cols = self.cols.iter().zip(&rhs.cols).map(|(a, b)| axpy(k, a, c, b)).collect();
        LinearMap { src: self.src, dst: self.dst, cols }
    }

    pub fn scaled<K: Field<Elem = E>>(&self, k: &K, c: &E) -> LinearMap<E> {
        let cols = self.cols.iter().map(|v| scale(k, c, v)).collect();
        LinearMap { src: self.src, dst: self.dst, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// First source index whose column is nonzero.
    pub fn first_nonzero_column(&self) -> Option<usize> {
        self.cols.iter().position(|c| !c.is_empty())
    }

    pub fn transpose(&self) -> LinearMap<E> {
        let mut cols: Vec<SparseVec<E>> = vec![Vec::new(); self.dst];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                cols[*i].push((j, c.clone()));
            }
        }
        LinearMap { src: self.dst, dst: self.src, cols }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::PrimeField;

    #[test]
    fn normalize_merges_and_drops() {
        let k = PrimeField::new(5).unwrap();
        let v = normalize(&k, vec![(3, 2), (1, 1), (3, 3), (0, 0)]);
        assert_eq!(v, vec![(1, 1)]);
    }

    #[test]
    fn compose_matches_dense_product() {
        let k = PrimeField::new(7).unwrap();
        let a = LinearMap::from_columns(2, vec![vec![(0, 1)], vec![(0, 2), (1, 3)]]);
        let b = LinearMap::from_columns(2, vec![vec![(1, 1)], vec![(0, 1), (1, 1)]]);
        let ab = a.compose(&k, &b);
        let dense = a.to_dense(&k).mul(&k, &b.to_dense(&k));
        assert_eq!(ab.to_dense(&k), dense);
    }
}
