use super::chain::{ChainComplexRealization, GradedAction};
use super::quotient::{last_face_commutator, quotient_pipeline, QuotientComplex, QuotientMode};
use crate::error::{Error, Result};
use crate::exactfield::{normalize, Field, LinearMap, SparseVec};
use crate::hopfcore::HopfData;
use crate::modact::{EquivariantBimodule, ModuleAlgebra};
use crate::report::{Checker, OracleReport};
use crate::tensor::{tensor_vectors, TensorShape};

/// Builds a map column by column from decoded source multi-indices.
pub(crate) fn map_from_tensor<K: Field>(
    k: &K,
    src: &TensorShape,
    dst_dim: usize,
    mut column: impl FnMut(&[usize], &mut Vec<(usize, K::Elem)>),
) -> LinearMap<K::Elem> {
    let mut idx = Vec::new();
    let mut cols = Vec::with_capacity(src.size());
    for flat in 0..src.size() {
        src.decode(flat, &mut idx);
        let mut acc = Vec::new();
        column(&idx, &mut acc);
        cols.push(normalize(k, acc));
    }
    LinearMap::from_columns(dst_dim, cols)
}

/// `L_b` on a tensor product whose `i`-th leg is acted on through the table
/// `legs[i][b_i * dim_i + x]`, using the left-nested coproduct of matching
/// arity.
pub(crate) fn diagonal_on_tensor<K: Field>(
    k: &K,
    hopf: &HopfData<K>,
    shape: &TensorShape,
    b: usize,
    legs: &[&[SparseVec<K::Elem>]],
) -> LinearMap<K::Elem> {
    let dims = shape.dims();
    let arity = dims.len();
    if arity == 0 {
        return LinearMap::identity(k, 1).scaled(k, &hopf.counit()[b]);
    }
    let cop = hopf.iterated_coproduct(arity);
    let terms = &cop.terms[b];
    map_from_tensor(k, shape, shape.size(), |idx, acc| {
        for (c, tuple) in terms {
            let factors: Vec<&SparseVec<K::Elem>> = (0..arity).map(|i| &legs[i][tuple[i] * dims[i] + idx[i]]).collect();
            acc.extend(tensor_vectors(k, &factors, dims).into_iter().map(|(t, x)| (t, k.mul(c, &x))));
        }
    })
}

pub(crate) fn check_size(degree: usize, dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(Error::SizeLimit { degree, dim, cap });
    }
    Ok(())
}

/// `CH_n(A,V) = A^{⊗n} ⊗ V` realized for `0 ≤ n ≤ top`.
///
/// Faces on `(a₁,…,aₙ,v)`: `∂₀ = (a₁,…,a_{n−1}, aₙv)`, `∂_j` multiplies
/// `a_{n−j}a_{n−j+1}` for `0 < j < n`, and `∂ₙ = (a₂,…,aₙ, va₁)`. With this
/// ordering `∂_j` commutes with the diagonal action for `j < n`.
pub fn build_ch<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    top: usize,
    cap: usize,
) -> Result<ChainComplexRealization<K>> {
    let k = ma.field();
    let a = ma.alg();
    let (da, dv) = (a.dim(), v.dim());
    let mut dims = Vec::new();
    for n in 0..=top {
        let d = da.checked_pow(n as u32).and_then(|x| x.checked_mul(dv)).unwrap_or(usize::MAX);
        check_size(n, d, cap)?;
        dims.push(d);
    }
    let mut faces = vec![Vec::new()];
    for n in 1..=top {
        let src = shape_ch(da, dv, n);
        let dst = shape_ch(da, dv, n - 1);
        let mut fs = Vec::with_capacity(n + 1);
        fs.push(map_from_tensor(k, &src, dst.size(), |t, acc| {
            let mut out = t[..n].to_vec();
            for (w, c) in v.la(t[n - 1], t[n]) {
                out[n - 1] = *w;
                acc.push((dst.encode(&out), c.clone()));
            }
        }));
        for j in 1..n {
            let p = n - j - 1;
            fs.push(map_from_tensor(k, &src, dst.size(), |t, acc| {
                let mut out: Vec<usize> = t[..p].iter().chain(std::iter::once(&0)).chain(&t[p + 2..]).cloned().collect();
                for (m, c) in a.mul_basis(t[p], t[p + 1]) {
                    out[p] = *m;
                    acc.push((dst.encode(&out), c.clone()));
                }
            }));
        }
        fs.push(map_from_tensor(k, &src, dst.size(), |t, acc| {
            let mut out = t[1..].to_vec();
            for (w, c) in v.ra(t[n], t[0], da) {
                out[n - 1] = *w;
                acc.push((dst.encode(&out), c.clone()));
            }
        }));
        faces.push(fs);
    }
    Ok(ChainComplexRealization::from_faces(
        k,
        "CH(A,V)",
        "(a1,…,an,v) row-major, v fastest",
        dims,
        faces,
    ))
}

fn shape_ch(da: usize, dv: usize, n: usize) -> TensorShape {
    let mut dims = vec![da; n];
    dims.push(dv);
    TensorShape::new(dims)
}

/// `L_b(a₁⊗…⊗aₙ⊗v) = b₍₁₎(a₁)⊗…⊗b₍ₙ₎(aₙ)⊗b₍ₙ₊₁₎(v)` on `CH_n`.
pub fn diagonal_action<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    n: usize,
    b: usize,
) -> LinearMap<K::Elem> {
    let shape = shape_ch(ma.alg().dim(), v.dim(), n);
    let mut legs = vec![ma.action_table(); n];
    legs.push(v.left_b_table());
    diagonal_on_tensor(ma.field(), ma.hopf(), &shape, b, &legs)
}

/// The diagonal action on every realized degree of `CH_*(A,V)`.
pub fn ch_action<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    top: usize,
) -> GradedAction<K::Elem> {
    let maps = (0..=top)
        .map(|n| (0..ma.hopf().dim()).map(|b| diagonal_action(ma, v, n, b)).collect())
        .collect();
    GradedAction { maps }
}

/// The algebra-level pipeline: `CH_*(A,V)` realized to degree `top` and the
/// quotient selected by `mode`.
#[derive(Clone, Debug)]
pub struct HochschildData<K: Field> {
    pub complex: ChainComplexRealization<K>,
    pub action: GradedAction<K::Elem>,
    pub quotient: QuotientComplex<K>,
}

/// Realizes `CH_*` to degree `max_degree + 1` and divides by `U_*`.
pub fn quotient_complex<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    max_degree: usize,
    mode: QuotientMode,
    cap: usize,
) -> Result<HochschildData<K>> {
    let complex = build_ch(ma, v, max_degree + 1, cap)?;
    let action = ch_action(ma, v, max_degree + 1);
    let quotient = quotient_pipeline(ma.field(), &complex, &action, ma.hopf().counit(), mode)?;
    Ok(HochschildData { complex, action, quotient })
}

/// `L_b L_{b′} = L_{bb′}` and `L_1 = id` on every realized degree.
pub fn check_action_module<K: Field>(k: &K, hopf: &HopfData<K>, action: &GradedAction<K::Elem>) -> Checker {
    let mut c = Checker::new("diagonal action is a B-module");
    let db = hopf.dim();
    for (n, maps) in action.maps.iter().enumerate() {
        let dim = maps.first().map(|m| m.src_dim()).unwrap_or(0);
        for i in 0..db {
            for j in 0..db {
                let lhs = maps[i].compose(k, &maps[j]);
                let mut rhs = LinearMap::zero(dim, dim);
                for (t, x) in hopf.alg().mul_basis(i, j) {
                    rhs = rhs.axpy(k, x, &maps[*t]);
                }
                c.case(lhs == rhs, || format!("degree {n}, ({},{})", hopf.alg().name(i), hopf.alg().name(j)));
            }
        }
        let mut unit = LinearMap::zero(dim, dim);
        for (t, x) in hopf.alg().unit() {
            unit = unit.axpy(k, x, &maps[*t]);
        }
        c.case(unit == LinearMap::identity(k, dim), || format!("degree {n}, unit"));
    }
    c
}

/// Lemma-level checks on the diagonal action: only the last face fails to
/// commute with `L_b`; `F = [L_b, ∂_{*+1}]` is a chain map; and `F` is
/// null-homotopic through `sₙ = (−1)^{n−1}L_b`, under whichever of the two
/// sign conventions `dS + Sd` or `dS − Sd` holds.
pub fn dgm_oracle<K: Field>(
    k: &K,
    hopf: &HopfData<K>,
    cx: &ChainComplexRealization<K>,
    action: &GradedAction<K::Elem>,
) -> OracleReport {
    let mut report = OracleReport::new("dgm-homotopy");
    let top = cx.top_degree();
    let db = hopf.dim();
    let bname = |b: usize| hopf.alg().name(b).to_string();

    let mut inner = Checker::new("[L_b, ∂_j] = 0 for j < n");
    for n in 1..=top {
        for j in 0..n {
            for b in 0..db {
                let f = cx.face(n, j);
                let comm = action.maps[n - 1][b].compose(k, f).sub(k, &f.compose(k, &action.maps[n][b]));
                inner.case(comm.is_zero(), || format!("degree {n}, j={j}, b={}", bname(b)));
            }
        }
    }
    report.push(inner);

    // F_m : C_{m+1} → C_m for 0 ≤ m < top
    let fs: Vec<Vec<LinearMap<K::Elem>>> =
        (0..top).map(|m| (0..db).map(|b| last_face_commutator(k, cx, action, m, b)).collect()).collect();

    let mut chain = Checker::new("[L_b, ∂_{*+1}] is a chain map");
    for m in 1..top {
        for b in 0..db {
            let lhs = cx.differential(m).compose(k, &fs[m][b]);
            let rhs = fs[m - 1][b].compose(k, cx.differential(m + 1));
            chain.case(lhs == rhs, || format!("degree {m}, b={}", bname(b)));
        }
    }
    report.push(chain);

    let sign = |n: usize| if n % 2 == 1 { k.one() } else { k.neg(&k.one()) };
    let s = |n: usize, b: usize| action.maps[n][b].scaled(k, &sign(n));
    let mut plus = Checker::new("F = dS + Sd");
    let mut minus = Checker::new("F = dS − Sd");
    for m in 0..top {
        for b in 0..db {
            let ds = cx.differential(m + 1).compose(k, &s(m + 1, b));
            let sd = s(m, b).compose(k, cx.differential(m + 1));
            plus.case(ds.add(k, &sd) == fs[m][b], || format!("degree {m}, b={}", bname(b)));
            minus.case(ds.sub(k, &sd) == fs[m][b], || format!("degree {m}, b={}", bname(b)));
        }
    }
    let (plus, minus) = (plus.finish(), minus.finish());
    let holds = match (plus.passed, minus.passed) {
        (true, true) => "both conventions hold",
        (true, false) => "the convention F = dS + Sd holds",
        (false, true) => "the convention F = dS − Sd holds",
        (false, false) => "neither convention holds",
    };
    report.note(format!("null-homotopy with s_n = (−1)^(n−1) L_b: {holds}"));
    let mut either = Checker::new("null-homotopy (some sign convention)");
    either.case(plus.passed || minus.passed, || {
        plus.witness.clone().or(minus.witness.clone()).unwrap_or_default()
    });
    report.checks.push(plus);
    report.checks.push(minus);
    report.push(either);
    report
}
