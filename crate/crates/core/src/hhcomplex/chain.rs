use crate::exactfield::{Field, LinearMap};
use crate::report::Checker;

/// Default hard cap on the ambient dimension of any realized degree.
pub const DEFAULT_SIZE_CAP: usize = 200_000;

/// A pre-simplicial module realized in degrees `0..=top`, with face maps
/// and alternating-sum differentials as sparse matrices.
#[derive(Clone, Debug)]
pub struct ChainComplexRealization<K: Field> {
    pub label: String,
    pub basis_order: String,
    dims: Vec<usize>,
    /// `faces[n][j]`: `C_n → C_{n−1}`; empty in degree 0.
    faces: Vec<Vec<LinearMap<K::Elem>>>,
    /// `diffs[n]`: `C_n → C_{n−1}`; `diffs[0]` maps to the zero space.
    diffs: Vec<LinearMap<K::Elem>>,
}

impl<K: Field> ChainComplexRealization<K> {
    pub fn from_faces(
        k: &K,
        label: impl Into<String>,
        basis_order: impl Into<String>,
        dims: Vec<usize>,
        faces: Vec<Vec<LinearMap<K::Elem>>>,
    ) -> Self {
        assert_eq!(dims.len(), faces.len());
        let diffs = dims
            .iter()
            .enumerate()
            .map(|(n, &d)| {
                if n == 0 {
                    return LinearMap::zero(d, 0);
                }
                let mut acc = LinearMap::zero(d, dims[n - 1]);
                let minus = k.neg(&k.one());
                for (j, f) in faces[n].iter().enumerate() {
                    let sign = if j % 2 == 0 { k.one() } else { minus.clone() };
                    acc = acc.axpy(k, &sign, f);
                }
                acc
            })
            .collect();
        ChainComplexRealization { label: label.into(), basis_order: basis_order.into(), dims, faces, diffs }
    }

    /// A complex known only through its differentials.
    pub fn from_differentials(
        label: impl Into<String>,
        basis_order: impl Into<String>,
        dims: Vec<usize>,
        diffs: Vec<LinearMap<K::Elem>>,
    ) -> Self {
        let faces = vec![Vec::new(); dims.len()];
        ChainComplexRealization { label: label.into(), basis_order: basis_order.into(), dims, faces, diffs }
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }
    pub fn faces(&self, n: usize) -> &[LinearMap<K::Elem>] {
        &self.faces[n]
    }
    pub fn face(&self, n: usize, j: usize) -> &LinearMap<K::Elem> {
        &self.faces[n][j]
    }
    pub fn differential(&self, n: usize) -> &LinearMap<K::Elem> {
        &self.diffs[n]
    }

    /// `d_{n−1} ∘ d_n = 0` for every realized `n ≥ 2`.
    pub fn check_d_squared(&self, k: &K) -> Checker {
        let mut c = Checker::new(format!("{}: d∘d = 0", self.label));
        for n in 2..=self.top_degree() {
            let dd = self.diffs[n - 1].compose(k, &self.diffs[n]);
            c.case(dd.is_zero(), || format!("degree {n}, column {:?}", dd.first_nonzero_column()));
        }
        c
    }

    /// `∂_i ∂_j = ∂_{j−1} ∂_i` for `i < j` in every realized degree.
    pub fn check_presimplicial(&self, k: &K) -> Checker {
        let mut c = Checker::new(format!("{}: presimplicial identities", self.label));
        for n in 2..=self.top_degree() {
            if self.faces[n].is_empty() {
                continue;
            }
            for j in 1..=n {
                for i in 0..j {
                    let lhs = self.faces[n - 1][i].compose(k, &self.faces[n][j]);
                    let rhs = self.faces[n - 1][j - 1].compose(k, &self.faces[n][i]);
                    c.case(lhs == rhs, || format!("degree {n}, i={i}, j={j}"));
                }
            }
        }
        c
    }
}

/// A `B`-action on each degree: `maps[n][b]` is `L_b` on `C_n`.
#[derive(Clone, Debug)]
pub struct GradedAction<E> {
    pub maps: Vec<Vec<LinearMap<E>>>,
}

impl<E: Clone + PartialEq> GradedAction<E> {
    pub fn degree(&self, n: usize) -> &[LinearMap<E>] {
        &self.maps[n]
    }
}
