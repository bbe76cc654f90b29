//! Row-major multi-index bookkeeping for tensor-product bases.

use crate::exactfield::{normalize, Field, SparseVec};

/// Mixed-radix shape; the rightmost factor varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    dims: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl TensorShape {
    pub fn new(dims: Vec<usize>) -> Self {
        let mut strides = vec![1; dims.len()];
        let mut size = 1usize;
        for i in (0..dims.len()).rev() {
            strides[i] = size;
            size = size.checked_mul(dims[i]).expect("tensor size overflow");
        }
        TensorShape { dims, strides, size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    pub fn decode(&self, mut flat: usize, out: &mut Vec<usize>) {
        out.clear();
        for &s in &self.strides {
            out.push(flat / s);
            flat %= s;
        }
    }

    pub fn decode_vec(&self, flat: usize) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.dims.len());
        self.decode(flat, &mut v);
        v
    }
}

/// Tensor product of vectors: each factor is a sparse vector in its own
/// space; the result lives in the row-major product space.
pub fn tensor_vectors<K: Field>(k: &K, factors: &[&SparseVec<K::Elem>], dims: &[usize]) -> SparseVec<K::Elem> {
    let mut acc: Vec<(usize, K::Elem)> = vec![(0, k.one())];
    for (f, &d) in factors.iter().zip(dims) {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (i, c) in &acc {
            for (j, x) in f.iter() {
                next.push((i * d + j, k.mul(c, x)));
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    normalize(k, acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_roundtrip() {
        let s = TensorShape::new(vec![2, 3, 4]);
        assert_eq!(s.size(), 24);
        for f in 0..24 {
            assert_eq!(s.encode(&s.decode_vec(f)), f);
        }
        assert_eq!(s.encode(&[1, 0, 0]), 12);
    }
}
