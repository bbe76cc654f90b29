use super::ModuleAlgebra;
use crate::error::{Error, Result};
use crate::exactfield::{Field, SparseVec};
use crate::hopfcore::{HopfData, StructureAlgebra};

/// `k[y]/(y²)` on the basis `1, y`.
pub fn dual_numbers<K: Field>(k: &K) -> StructureAlgebra<K> {
    let one = k.one();
    let mult = vec![vec![(0, one.clone())], vec![(1, one.clone())], vec![(1, one.clone())], vec![]];
    StructureAlgebra::new(k, vec!["1".into(), "y".into()], mult, vec![(0, one)]).expect("shape")
}

/// Exterior algebra on two generators, basis `1, y1, y2, y1y2`.
pub fn exterior2<K: Field>(k: &K) -> StructureAlgebra<K> {
    let one = k.one();
    let m1 = k.neg(&one);
    let v = |i: usize, c: &K::Elem| vec![(i, c.clone())];
    let z: SparseVec<K::Elem> = Vec::new();
    let mult = vec![
        v(0, &one), v(1, &one), v(2, &one), v(3, &one),
        v(1, &one), z.clone(), v(3, &one), z.clone(),
        v(2, &one), v(3, &m1), z.clone(), z.clone(),
        v(3, &one), z.clone(), z.clone(), z,
    ];
    let names = ["1", "y1", "y2", "y1y2"].iter().map(|s| s.to_string()).collect();
    StructureAlgebra::new(k, names, mult, v(0, &one)).expect("shape")
}

/// Builds an action table from per-basis images given as closures over
/// `(b, a)`.
fn table<K: Field>(db: usize, da: usize, f: impl Fn(usize, usize) -> SparseVec<K::Elem>) -> Vec<SparseVec<K::Elem>> {
    (0..db * da).map(|p| f(p / da, p % da)).collect()
}

/// `k[Z/2]` acting on the dual numbers by `g·y = −y`.
pub fn group_z2_on_dual_numbers<K: Field>(k: &K, b: HopfData<K>) -> Result<ModuleAlgebra<K>> {
    if b.dim() != 2 {
        return Err(Error::Precondition("expected a two-dimensional group algebra".into()));
    }
    let g = (0..2).find(|&i| b.alg().unit_index() != Some(i)).expect("two elements");
    let (one, m1) = (k.one(), k.neg(&k.one()));
    let action = table::<K>(2, 2, |bi, a| match (bi == g, a) {
        (true, 1) => vec![(1, m1.clone())],
        (_, a) => vec![(a, one.clone())],
    });
    ModuleAlgebra::new(b, dual_numbers(k), action)
}

/// Sweedler's algebra acting on the dual numbers: `g·y = −y`, `x·y = 1`,
/// `x·1 = 0`.
pub fn sweedler_on_dual_numbers<K: Field>(k: &K, b: HopfData<K>) -> Result<ModuleAlgebra<K>> {
    if b.dim() != 4 {
        return Err(Error::Precondition("expected the four-dimensional Sweedler algebra".into()));
    }
    let (one, m1) = (k.one(), k.neg(&k.one()));
    let action = table::<K>(4, 2, |bi, a| match (bi, a) {
        (0, a) => vec![(a, one.clone())],
        (1, 0) => vec![(0, one.clone())],
        (1, 1) => vec![(1, m1.clone())],
        (2, 1) | (3, 1) => vec![(0, one.clone())],
        _ => vec![],
    });
    ModuleAlgebra::new(b, dual_numbers(k), action)
}

/// Sweedler's algebra acting on `Λ(y1, y2)`: `g` negates generators,
/// `x·y1 = 1`, `x·y2 = 0`, extended by the twisted Leibniz rule.
pub fn sweedler_on_exterior2<K: Field>(k: &K, b: HopfData<K>) -> Result<ModuleAlgebra<K>> {
    if b.dim() != 4 {
        return Err(Error::Precondition("expected the four-dimensional Sweedler algebra".into()));
    }
    let (one, m1) = (k.one(), k.neg(&k.one()));
    let action = table::<K>(4, 4, |bi, a| match (bi, a) {
        (0, a) => vec![(a, one.clone())],
        (1, 0) | (1, 3) => vec![(a, one.clone())],
        (1, _) => vec![(a, m1.clone())],
        (2, 1) | (3, 1) => vec![(0, one.clone())],
        (2, 3) => vec![(2, one.clone())],
        (3, 3) => vec![(2, m1.clone())],
        _ => vec![],
    });
    ModuleAlgebra::new(b, exterior2(k), action)
}
