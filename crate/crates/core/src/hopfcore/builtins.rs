use super::{HopfData, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Matrix, SparseVec};

/// Named builtin bialgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    TrivialK,
    /// Group algebra of a finite group given by its Cayley table.
    GroupAlgebra(Vec<Vec<usize>>),
    Sweedler4,
}

pub fn make_builtin<K: Field>(k: &K, b: &Builtin) -> Result<HopfData<K>> {
    match b {
        Builtin::TrivialK => Ok(trivial_k(k)),
        Builtin::GroupAlgebra(t) => group_algebra(k, t),
        Builtin::Sweedler4 => Ok(sweedler4(k)),
    }
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn trivial_k<K: Field>(k: &K) -> HopfData<K> {
    let one = k.one();
    let alg = StructureAlgebra::new(k, vec!["1".into()], vec![vec![(0, one.clone())]], vec![(0, one.clone())])
        .expect("shape");
    let id = Matrix::identity(k, 1);
    HopfData::new(alg, vec![vec![(one.clone(), 0, 0)]], vec![one], Some(id.clone()), Some(id)).expect("shape")
}

/// Cayley table of `Z/n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Checks closure, associativity, identity and inverses; returns the
/// identity index.
pub fn check_group_table(t: &[Vec<usize>]) -> Result<usize> {
    let n = t.len();
    if n == 0 {
        return Err(Error::InvalidGroupTable("empty table".into()));
    }
    for (i, row) in t.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidGroupTable(format!("row {i} has length {}", row.len())));
        }
        if let Some(x) = row.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidGroupTable(format!("entry {x} in row {i} out of range")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return Err(Error::InvalidGroupTable(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x))
        .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
    for a in 0..n {
        if !(0..n).any(|b| t[a][b] == e && t[b][a] == e) {
            return Err(Error::InvalidGroupTable(format!("element {a} has no inverse")));
        }
    }
    Ok(e)
}

/// `k[G]` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra<K: Field>(k: &K, table: &[Vec<usize>]) -> Result<HopfData<K>> {
    let e = check_group_table(table)?;
    let n = table.len();
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            _ if i == e => "e".to_string(),
            _ if n == 2 || is_cyclic(table) => power_name(table, e, i),
            _ => format!("g{i}"),
        })
        .collect();
    let one = k.one();
    let mult: Vec<SparseVec<K::Elem>> =
        (0..n * n).map(|p| vec![(table[p / n][p % n], one.clone())]).collect();
    let alg = StructureAlgebra::new(k, names, mult, vec![(e, one.clone())])?;
    let comult = (0..n).map(|g| vec![(one.clone(), g, g)]).collect();
    let mut s = Matrix::zeros(k, n, n);
    for g in 0..n {
        let inv = (0..n).find(|&h| table[g][h] == e).expect("checked");
        s.set(inv, g, one.clone());
    }
    HopfData::new(alg, comult, vec![one; n], Some(s.clone()), Some(s))
}

fn is_cyclic(t: &[Vec<usize>]) -> bool {
    *t == cyclic_table(t.len())
}

fn power_name(t: &[Vec<usize>], e: usize, i: usize) -> String {
    let n = t.len();
    let g = if n == 2 { (0..n).find(|&x| x != e).unwrap() } else { 1 };
    let mut x = e;
    for p in 0..n {
        if x == i {
            return match p {
                0 => "e".into(),
                1 => "g".into(),
                _ => format!("g^{p}"),
            };
        }
        x = t[x][g];
    }
    format!("g{i}")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`.
pub fn sweedler4<K: Field>(k: &K) -> HopfData<K> {
    let one = k.one();
    let m1 = k.neg(&one);
    let v = |i: usize, c: &K::Elem| vec![(i, c.clone())];
    let z: SparseVec<K::Elem> = Vec::new();
    let (e, g, x, gx) = (0, 1, 2, 3);
    let mult = vec![
        // 1·_
        v(e, &one), v(g, &one), v(x, &one), v(gx, &one),
        // g·_
        v(g, &one), v(e, &one), v(gx, &one), v(x, &one),
        // x·_
        v(x, &one), v(gx, &m1), z.clone(), z.clone(),
        // gx·_
        v(gx, &one), v(x, &m1), z.clone(), z,
    ];
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let alg = StructureAlgebra::new(k, names, mult, v(e, &one)).expect("shape");
    let comult = vec![
        vec![(one.clone(), e, e)],
        vec![(one.clone(), g, g)],
        vec![(one.clone(), x, e), (one.clone(), g, x)],
        vec![(one.clone(), gx, g), (one.clone(), e, gx)],
    ];
    let counit = vec![one.clone(), one.clone(), k.zero(), k.zero()];
    let mut s = Matrix::zeros(k, 4, 4);
    s.set(e, e, one.clone());
    s.set(g, g, one.clone());
    s.set(gx, x, m1.clone());
    s.set(x, gx, one.clone());
    let mut si = Matrix::zeros(k, 4, 4);
    si.set(e, e, one.clone());
    si.set(g, g, one.clone());
    si.set(gx, x, one.clone());
    si.set(x, gx, m1);
    HopfData::new(alg, comult, counit, Some(s), Some(si)).expect("shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, Rationals};

    #[test]
    fn builtins_validate() {
        let k = Rationals;
        assert!(trivial_k(&k).validate().passed());
        assert!(group_algebra(&k, &cyclic_table(2)).unwrap().validate().passed());
        assert!(group_algebra(&k, &cyclic_table(3)).unwrap().validate().passed());
        assert!(sweedler4(&k).validate().passed());
        assert!(sweedler4(&PrimeField::new(32003).unwrap()).validate().passed());
    }

    #[test]
    fn z3_antipode_is_inversion() {
        let k = Rationals;
        let h = group_algebra(&k, &cyclic_table(3)).unwrap();
        let s = h.antipode_matrix().unwrap();
        assert_eq!(*s.get(2, 1), k.one());
        assert_eq!(*s.get(1, 2), k.one());
        assert_eq!(*s.get(0, 0), k.one());
        assert_eq!(h.alg().names(), &["e", "g", "g^2"]);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(check_group_table(&[vec![0, 1], vec![1, 1]]).is_err());
        assert!(check_group_table(&[]).is_err());
        assert!(check_group_table(&[vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn broken_counit_is_caught() {
        let k = Rationals;
        let h = group_algebra(&k, &cyclic_table(2)).unwrap();
        let mut comult = h.comult().to_vec();
        comult[1] = vec![(k.one(), 1, 0)];
        let bad = HopfData::new(h.alg().clone(), comult, h.counit().to_vec(), h.antipode_matrix(), h.antipode_inv_matrix())
            .unwrap();
        let r = bad.validate();
        let c = r.check("counit").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("g"));
    }
}
