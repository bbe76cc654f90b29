use serde::Serialize;

use super::chain::{ChainComplexRealization, GradedAction};
use crate::error::{Error, Result};
use crate::exactfield::{Echelon, Field, LinearMap, QuotientSpace};
use crate::report::{BettiTable, Checker};

/// Which subspace is divided out of the chain complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientMode {
    /// Nothing: the complex itself.
    Plain,
    /// The obstruction `J_*`.
    Qch,
    /// `J_*` together with the coinvariance relations `L_b x − ε(b)x`.
    CoinvariantQch,
    /// An explicitly supplied relation subspace.
    Relations,
}

impl QuotientMode {
    pub fn label(self) -> &'static str {
        match self {
            QuotientMode::Plain => "ch",
            QuotientMode::Qch => "qch",
            QuotientMode::CoinvariantQch => "coinvariant_qch",
            QuotientMode::Relations => "relations",
        }
    }
}

/// A quotient `C_*/U_*` in quotient coordinates.
///
/// `J_n` needs `∂_{n+1}`, so it is only known below the top realized degree;
/// at the top degree `U` holds the coinvariance relations alone. Homology is
/// reported up to `top − 1`, where this does not matter: the rank of `d̄_top`
/// depends only on `U_{top−1}`.
#[derive(Clone, Debug)]
pub struct QuotientComplex<K: Field> {
    pub label: String,
    pub mode: QuotientMode,
    spaces: Vec<QuotientSpace<K>>,
    obstruction_dims: Vec<usize>,
    diffs: Vec<LinearMap<K::Elem>>,
}

impl<K: Field> QuotientComplex<K> {
    pub fn top_degree(&self) -> usize {
        self.spaces.len() - 1
    }
    pub fn space(&self, n: usize) -> &QuotientSpace<K> {
        &self.spaces[n]
    }
    /// `dim C_n/U_n` for every realized degree.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|q| q.dim()).collect()
    }
    /// `dim U_n`.
    pub fn subspace_dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|q| q.subspace().dim()).collect()
    }
    /// `dim J_n` for `n < top` (zero-length in plain mode).
    pub fn obstruction_dims(&self) -> &[usize] {
        &self.obstruction_dims
    }
    /// Induced `d̄_n` on quotient coordinates.
    pub fn differential(&self, n: usize) -> &LinearMap<K::Elem> {
        &self.diffs[n]
    }

    pub fn check_d_squared(&self, k: &K) -> Checker {
        let mut c = Checker::new(format!("{} ({}): d̄∘d̄ = 0", self.label, self.mode.label()));
        for n in 2..=self.top_degree() {
            let dd = self.diffs[n - 1].compose(k, &self.diffs[n]);
            c.case(dd.is_zero(), || format!("degree {n}"));
        }
        c
    }

    /// Homology dimensions in degrees `0..=up_to`; requires `up_to < top`.
    pub fn homology_dims(&self, k: &K, up_to: usize) -> Result<BettiTable> {
        if up_to >= self.top_degree() {
            return Err(Error::Precondition(format!(
                "homology up to degree {up_to} needs the complex realized to degree {}",
                up_to + 1
            )));
        }
        let ranks: Vec<usize> = (0..=up_to + 1).map(|n| if n == 0 { 0 } else { map_rank(k, &self.diffs[n]) }).collect();
        let q = self.quotient_dims();
        let dims: Vec<usize> = (0..=up_to).map(|n| q[n] - ranks[n] - ranks[n + 1]).collect();
        Ok(BettiTable::new(format!("{} ({})", self.label, self.mode.label()), k.spec().label(), &dims))
    }
}

/// Rank of a sparse map, by incremental elimination on its columns.
pub fn map_rank<K: Field>(k: &K, m: &LinearMap<K::Elem>) -> usize {
    let mut e = Echelon::new(k, m.dst_dim());
    e.extend(m.columns());
    e.dim()
}

/// Homology of a realized complex in degrees `0..top`.
pub fn complex_homology<K: Field>(k: &K, cx: &ChainComplexRealization<K>) -> BettiTable {
    let top = cx.top_degree();
    let ranks: Vec<usize> = (0..=top).map(|n| if n == 0 { 0 } else { map_rank(k, cx.differential(n)) }).collect();
    let dims: Vec<usize> = (0..top).map(|n| cx.dim(n) - ranks[n] - ranks[n + 1]).collect();
    BettiTable::new(format!("{} (ch)", cx.label), k.spec().label(), &dims)
}

/// Columns of `[L_b, ∂_{n+1}] = L_b∂_{n+1} − ∂_{n+1}L_b : C_{n+1} → C_n`.
pub fn last_face_commutator<K: Field>(
    k: &K,
    cx: &ChainComplexRealization<K>,
    action: &GradedAction<K::Elem>,
    n: usize,
    b: usize,
) -> LinearMap<K::Elem> {
    let last = cx.face(n + 1, n + 1);
    let lhs = action.maps[n][b].compose(k, last);
    let rhs = last.compose(k, &action.maps[n + 1][b]);
    lhs.sub(k, &rhs)
}

/// `J_n = Σ_b im [L_b, ∂_{n+1}]`.
pub fn obstruction_subspace<K: Field>(
    k: &K,
    cx: &ChainComplexRealization<K>,
    action: &GradedAction<K::Elem>,
    n: usize,
) -> Echelon<K> {
    let mut e = Echelon::new(k, cx.dim(n));
    for b in 0..action.maps[n].len() {
        let c = last_face_commutator(k, cx, action, n, b);
        e.extend(c.columns());
    }
    e
}

/// Divides `cx` by `U_*` as selected by `mode`, verifying `d(U_n) ⊆ U_{n−1}`.
pub fn quotient_pipeline<K: Field>(
    k: &K,
    cx: &ChainComplexRealization<K>,
    action: &GradedAction<K::Elem>,
    counit: &[K::Elem],
    mode: QuotientMode,
) -> Result<QuotientComplex<K>> {
    let top = cx.top_degree();
    let mut spaces = Vec::with_capacity(top + 1);
    let mut obstruction_dims = Vec::new();
    for n in 0..=top {
        let mut u = if mode != QuotientMode::Plain && n < top {
            let j = obstruction_subspace(k, cx, action, n);
            obstruction_dims.push(j.dim());
            j
        } else {
            Echelon::new(k, cx.dim(n))
        };
        if mode == QuotientMode::CoinvariantQch {
            for (b, lb) in action.maps[n].iter().enumerate() {
                if u.dim() == cx.dim(n) {
                    break;
                }
                let shift = lb.sub(k, &LinearMap::identity(k, cx.dim(n)).scaled(k, &counit[b]));
                u.extend(shift.columns());
            }
        }
        spaces.push(u.into_quotient());
    }
    let mut qc = quotient_by(k, cx, spaces, mode)?;
    qc.obstruction_dims = obstruction_dims;
    Ok(qc)
}

/// Divides `cx` by given subspaces, one per realized degree, verifying
/// `d(U_n) ⊆ U_{n−1}`.
pub fn quotient_by<K: Field>(
    k: &K,
    cx: &ChainComplexRealization<K>,
    spaces: Vec<QuotientSpace<K>>,
    mode: QuotientMode,
) -> Result<QuotientComplex<K>> {
    let top = cx.top_degree();
    assert_eq!(spaces.len(), top + 1);
    let mut diffs = vec![LinearMap::zero(spaces[0].dim(), 0)];
    for n in 1..=top {
        let d = cx.differential(n);
        let below = &spaces[n - 1];
        for row in spaces[n].subspace().rows() {
            if !below.project(&d.apply(k, row)).is_empty() {
                return Err(Error::StabilityViolation { degree: n, what: format!("d maps U_{n} outside U_{}", n - 1) });
            }
        }
        let cols = spaces[n].complement().iter().map(|&c| below.project(d.column(c))).collect();
        diffs.push(LinearMap::from_columns(below.dim(), cols));
    }
    Ok(QuotientComplex { label: cx.label.clone(), mode, spaces, obstruction_dims: Vec::new(), diffs })
}

/// `L_b(U_n) ⊆ U_n` for every basis `b` and every degree.
pub fn check_action_stable<K: Field>(k: &K, qc: &QuotientComplex<K>, action: &GradedAction<K::Elem>) -> Checker {
    let mut c = Checker::new(format!("{} ({}): U_* is B-stable", qc.label, qc.mode.label()));
    for n in 0..qc.top_degree() {
        let q = qc.space(n);
        for (b, lb) in action.maps[n].iter().enumerate() {
            let ok = q.subspace().rows().iter().all(|r| q.project(&lb.apply(k, r)).is_empty());
            c.case(ok, || format!("degree {n}, b = basis {b}"));
        }
    }
    c
}
