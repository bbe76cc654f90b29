use std::collections::BTreeMap;

use super::dense::SubspaceBasis;
use super::sparse::{normalize, SparseVec};
use super::Field;

const NONE: u32 = u32::MAX;

/// Incremental row-echelon basis of a subspace of `k^ambient`.
///
/// Rows have a leading 1 at their pivot and zeros at every pivot column
/// that existed when they were inserted; older rows are not back-reduced,
/// which keeps them sparse. Reducing a vector processes columns in
/// increasing order, so the residual vanishes at all pivots and is the
/// canonical representative of the vector's class in the quotient. The
/// reduced echelon form (unique for the subspace) is available on demand.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    k: K,
    ambient: usize,
    rows: Vec<SparseVec<K::Elem>>,
    pivot_row: Vec<u32>,
}

impl<K: Field> Echelon<K> {
    pub fn new(k: &K, ambient: usize) -> Self {
        Echelon { k: k.clone(), ambient, rows: Vec::new(), pivot_row: vec![NONE; ambient] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Spanning rows in insertion order.
    pub fn rows(&self) -> &[SparseVec<K::Elem>] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NONE
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Residual of `v` modulo the subspace; zero at every pivot column.
    pub fn reduce(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let k = &self.k;
        let mut work: BTreeMap<usize, K::Elem> = v.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, x)) = work.pop_first() {
            if k.is_zero(&x) {
                continue;
            }
            let r = self.pivot_row[c];
            if r == NONE {
                out.push((c, x));
                continue;
            }
            for (j, y) in &self.rows[r as usize][1..] {
                let e = work.entry(*j).or_insert_with(|| k.zero());
                *e = k.sub(e, &k.mul(&x, y));
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, K::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, K::Elem)]) -> bool {
        let mut r = self.reduce(v);
        let Some((lead, c)) = r.first().cloned() else {
            return false;
        };
        let k = &self.k;
        if !k.is_one(&c) {
            let inv = k.inv(&c).expect("nonzero leading coefficient");
            for (_, x) in r.iter_mut() {
                *x = k.mul(x, &inv);
            }
        }
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(r);
        true
    }

    pub fn extend<'a, I>(&mut self, vs: I)
    where
        I: IntoIterator<Item = &'a SparseVec<K::Elem>>,
    {
        for v in vs {
            self.insert(v);
            if self.rows.len() == self.ambient {
                break;
            }
        }
    }

    /// Rows of the reduced echelon form, ordered by pivot.
    pub fn reduced_rows(&self) -> Vec<SparseVec<K::Elem>> {
        let k = &self.k;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0].0));
        let mut reduced: Vec<Option<SparseVec<K::Elem>>> = vec![None; self.rows.len()];
        for &i in &order {
            let row = &self.rows[i];
            let mut acc: Vec<(usize, K::Elem)> = Vec::new();
            for (j, y) in row {
                let r = self.pivot_row[*j];
                if r == NONE || r as usize == i {
                    acc.push((*j, y.clone()));
                } else {
                    let other = reduced[r as usize].as_ref().expect("later pivot reduced first");
                    let m = k.neg(y);
                    acc.extend(other.iter().map(|(t, z)| (*t, k.mul(&m, z))));
                    acc.push((*j, y.clone()));
                }
            }
            reduced[i] = Some(normalize(k, acc));
        }
        let mut out: Vec<SparseVec<K::Elem>> = reduced.into_iter().map(Option::unwrap).collect();
        out.sort_by_key(|r| r[0].0);
        out
    }

    /// Dense reduced echelon basis.
    pub fn to_subspace_basis(&self) -> SubspaceBasis<K::Elem> {
        let rows = self.reduced_rows();
        let pivot_cols = rows.iter().map(|r| r[0].0).collect();
        let basis = rows
            .iter()
            .map(|r| {
                let mut d = vec![self.k.zero(); self.ambient];
                for (j, x) in r {
                    d[*j] = x.clone();
                }
                d
            })
            .collect();
        SubspaceBasis { ambient_dim: self.ambient, basis, pivot_cols }
    }

    pub fn into_quotient(self) -> QuotientSpace<K> {
        QuotientSpace::new(self)
    }
}

/// Basis of `{x : r·x = 0 for every row r}`, one vector per free column in
/// increasing order, each with a 1 at its free column.
pub fn null_space<'a, K, I>(k: &K, ncols: usize, rows: I) -> Vec<SparseVec<K::Elem>>
where
    K: Field,
    I: IntoIterator<Item = &'a SparseVec<K::Elem>>,
    K::Elem: 'a,
{
    let mut e = Echelon::new(k, ncols);
    e.extend(rows);
    let mut out: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); ncols];
    for r in e.reduced_rows() {
        let p = r[0].0;
        for (j, x) in &r[1..] {
            out[*j].push((p, k.neg(x)));
        }
    }
    (0..ncols)
        .filter(|&f| !e.is_pivot(f))
        .map(|f| {
            let mut v = std::mem::take(&mut out[f]);
            v.push((f, k.one()));
            normalize(k, v)
        })
        .collect()
}

/// `k^ambient / U` with coordinates on the non-pivot columns of `U`.
#[derive(Clone, Debug)]
pub struct QuotientSpace<K: Field> {
    sub: Echelon<K>,
    complement: Vec<usize>,
    slot: Vec<u32>,
}

impl<K: Field> QuotientSpace<K> {
    pub fn new(sub: Echelon<K>) -> Self {
        let mut slot = vec![NONE; sub.ambient];
        let mut complement = Vec::new();
        for c in 0..sub.ambient {
            if !sub.is_pivot(c) {
                slot[c] = complement.len() as u32;
                complement.push(c);
            }
        }
        QuotientSpace { sub, complement, slot }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn subspace(&self) -> &Echelon<K> {
        &self.sub
    }

    /// Ambient columns forming the quotient basis, increasing.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        self.sub
            .reduce(v)
            .into_iter()
            .map(|(c, x)| (self.slot[c] as usize, x))
            .collect()
    }

    /// Ambient vector representing quotient coordinate `q`.
    pub fn lift(&self, q: usize) -> usize {
        self.complement[q]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{span_reduce, PrimeField, Rationals};

    #[test]
    fn reduced_rows_match_dense_rref() {
        let k = Rationals;
        let raw: Vec<Vec<i64>> = vec![vec![0, 2, 4, 1, 0], vec![1, 1, 0, 0, 3], vec![1, 3, 4, 1, 3], vec![0, 0, 1, 1, 1]];
        let dense: Vec<Vec<_>> = raw.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect();
        let mut e = Echelon::new(&k, 5);
        for r in &dense {
            let sv: SparseVec<_> = r.iter().cloned().enumerate().filter(|(_, x)| !k.is_zero(x)).collect();
            e.insert(&sv);
        }
        assert_eq!(e.to_subspace_basis(), span_reduce(&k, &dense, 5));
    }

    #[test]
    fn projection_kills_subspace() {
        let k = PrimeField::new(11).unwrap();
        let mut e = Echelon::new(&k, 4);
        e.insert(&vec![(1, 3), (3, 2)]);
        e.insert(&vec![(0, 1), (1, 1)]);
        let q = e.into_quotient();
        assert_eq!(q.dim(), 2);
        assert!(q.project(&[(1, 3), (3, 2)]).is_empty());
        assert!(q.project(&[(0, 1), (1, 1)]).is_empty());
        assert_eq!(q.project(&[(2, 5)]), vec![(0, 5)]);
    }

    #[test]
    fn null_space_matches_dense_kernel() {
        let k = Rationals;
        let rows: Vec<SparseVec<_>> = vec![
            vec![(0, k.from_i64(1)), (2, k.from_i64(2))],
            vec![(1, k.from_i64(1)), (2, k.from_i64(-1)), (3, k.from_i64(4))],
            vec![(0, k.from_i64(2)), (1, k.from_i64(1)), (2, k.from_i64(3)), (3, k.from_i64(4))],
        ];
        let ns = null_space(&k, 4, &rows);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                let mut s = k.zero();
                for (i, c) in r {
                    if let Some((_, y)) = x.iter().find(|(j, _)| j == i) {
                        k.mul_add_assign(&mut s, c, y);
                    }
                }
                assert!(k.is_zero(&s));
            }
        }
    }
}
