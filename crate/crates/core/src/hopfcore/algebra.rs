use crate::error::{Error, Result};
use crate::exactfield::{normalize, Field, SparseVec};
use crate::report::{Checker, ValidationReport};

/// Finite-dimensional unital algebra given by structure constants.
///
/// `mult[i * dim + j]` is the product of basis elements `i` and `j`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra<K: Field> {
    k: K,
    names: Vec<String>,
    mult: Vec<SparseVec<K::Elem>>,
    unit: SparseVec<K::Elem>,
}

impl<K: Field> StructureAlgebra<K> {
    /// Builds from sparse products; shape-checked but not axiom-checked.
    pub fn new(
        k: &K,
        names: Vec<String>,
        mult: Vec<SparseVec<K::Elem>>,
        unit: SparseVec<K::Elem>,
    ) -> Result<Self> {
        let d = names.len();
        if mult.len() != d * d {
            return Err(Error::shape("mult", format!("expected {} products, got {}", d * d, mult.len())));
        }
        for (p, v) in mult.iter().enumerate() {
            if let Some((i, _)) = v.iter().find(|(i, _)| *i >= d) {
                return Err(Error::shape(format!("mult[{}][{}]", p / d, p % d), format!("index {i} out of range")));
            }
        }
        if unit.iter().any(|(i, _)| *i >= d) {
            return Err(Error::shape("unit", "index out of range"));
        }
        let mult = mult.into_iter().map(|v| normalize(k, v)).collect();
        let unit = normalize(k, unit);
        Ok(StructureAlgebra { k: k.clone(), names, mult, unit })
    }

    /// Builds from dense coefficient vectors, `mult[i][j]` of length `dim`.
    pub fn from_dense(k: &K, names: Vec<String>, mult: Vec<Vec<Vec<K::Elem>>>, unit: Vec<K::Elem>) -> Result<Self> {
        let d = names.len();
        if mult.len() != d {
            return Err(Error::shape("mult", format!("expected {d} rows")));
        }
        let dense = |path: String, v: Vec<K::Elem>| -> Result<SparseVec<K::Elem>> {
            if v.len() != d {
                return Err(Error::shape(path, format!("expected length {d}")));
            }
            Ok(v.into_iter().enumerate().filter(|(_, x)| !k.is_zero(x)).collect())
        };
        let mut sparse = Vec::with_capacity(d * d);
        for (i, row) in mult.into_iter().enumerate() {
            if row.len() != d {
                return Err(Error::shape(format!("mult[{i}]"), format!("expected {d} entries")));
            }
            for (j, v) in row.into_iter().enumerate() {
                sparse.push(dense(format!("mult[{i}][{j}]"), v)?);
            }
        }
        let unit = dense("unit".into(), unit)?;
        Self::new(k, names, sparse, unit)
    }

    pub fn field(&self) -> &K {
        &self.k
    }
    pub fn dim(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
    pub fn unit(&self) -> &SparseVec<K::Elem> {
        &self.unit
    }
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<K::Elem> {
        &self.mult[i * self.dim() + j]
    }
    pub fn products(&self) -> &[SparseVec<K::Elem>] {
        &self.mult
    }

    pub fn mul(&self, x: &[(usize, K::Elem)], y: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let k = &self.k;
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = k.mul(a, b);
                for (l, c) in self.mul_basis(*i, *j) {
                    acc.push((*l, k.mul(&ab, c)));
                }
            }
        }
        normalize(k, acc)
    }

    pub fn basis_vec(&self, i: usize) -> SparseVec<K::Elem> {
        vec![(i, self.k.one())]
    }

    /// Index `i` such that the unit equals the `i`-th basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.as_slice() {
            [(i, c)] if self.k.is_one(c) => Some(*i),
            _ => None,
        }
    }

    pub fn format_vec(&self, v: &[(usize, K::Elem)]) -> String {
        format_vec(&self.k, v, |i| self.names[i].clone())
    }

    /// Same basis, reversed multiplication.
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        let mult = (0..d * d).map(|p| self.mult[(p % d) * d + p / d].clone()).collect();
        StructureAlgebra { k: self.k.clone(), names: self.names.clone(), mult, unit: self.unit.clone() }
    }

    /// Associativity and two-sided unit over all basis tuples.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut report = ValidationReport::new("algebra");
        let mut assoc = Checker::new("associativity");
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for l in 0..d {
                    let left = self.mul(ij, &self.basis_vec(l));
                    let right = self.mul(&self.basis_vec(i), self.mul_basis(j, l));
                    assoc.case(left == right, || {
                        format!("({},{},{})", self.names[i], self.names[j], self.names[l])
                    });
                }
            }
        }
        report.push(assoc);
        let mut unit = Checker::new("unit");
        for i in 0..d {
            let e = self.basis_vec(i);
            let ok = self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e;
            let uname = self.unit_index().map_or_else(|| "1".to_string(), |u| self.names[u].clone());
            unit.case(ok, || format!("({uname},{})", self.names[i]));
        }
        report.push(unit);
        report
    }

    /// Structure-constant equality with another algebra on the same basis.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.mult == other.mult && self.unit == other.unit
    }
}

pub(crate) fn format_vec<K: Field>(k: &K, v: &[(usize, K::Elem)], name: impl Fn(usize) -> String) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    v.iter()
        .map(|(i, c)| {
            if k.is_one(c) {
                name(*i)
            } else {
                format!("{}*{}", k.format(c), name(*i))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
