use super::bar::{build_cb, BarComplex};
use super::chain::ChainComplexRealization;
use super::cochain::{cochain_complex, full_cochain_complex};
use super::hochschild::quotient_complex;
use super::quotient::{map_rank, quotient_by, QuotientComplex, QuotientMode};
use crate::error::{Error, Result};
use crate::exactfield::{normalize, Echelon, Field, LinearMap, SparseVec};
use crate::modact::{vop_right_action, EquivariantBimodule, ModuleAlgebra};
use crate::report::{BettiTable, Checker, OracleReport};

/// `V^op ⊗_E CB_*`: `V ⊗ CB_n` (V index slow) modulo
/// `v·e ⊗ c − v ⊗ e·c` over all basis elements `e` of `E`, with `id ⊗ d`.
#[derive(Clone, Debug)]
pub struct TensorSide<K: Field> {
    pub bar: BarComplex<K>,
    pub complex: ChainComplexRealization<K>,
    pub quotient: QuotientComplex<K>,
    /// Whether `v·e` is a right module structure (it need not be when `S² ≠ id`).
    pub vop_report: crate::report::ValidationReport,
}

/// Builds the tensor side realized to degree `top`.
pub fn tensor_side<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    top: usize,
    cap: usize,
) -> Result<TensorSide<K>> {
    let k = ma.field();
    let bar = build_cb(ma, top, cap)?;
    let (vop, vop_report) = vop_right_action(ma, &bar.crossed, v)?;
    let dv = v.dim();
    let de = bar.crossed.dim();
    let mut dims = Vec::new();
    let mut diffs = Vec::new();
    let mut spaces = Vec::new();
    for n in 0..=top {
        let dc = bar.complex.dim(n);
        super::hochschild::check_size(n, dv * dc, cap)?;
        dims.push(dv * dc);
        if n == 0 {
            diffs.push(LinearMap::zero(dv * dc, 0));
        } else {
            let d = bar.complex.differential(n);
            let below = bar.complex.dim(n - 1);
            let cols = (0..dv * dc)
                .map(|p| d.column(p % dc).iter().map(|(t, x)| ((p / dc) * below + t, x.clone())).collect())
                .collect();
            diffs.push(LinearMap::from_columns(dv * below, cols));
        }
        let mut rel = Echelon::new(k, dv * dc);
        'fill: for e in 0..de {
            let act = bar.e_action_basis(n, e);
            for w in 0..dv {
                for c in 0..dc {
                    if rel.dim() == dv * dc {
                        break 'fill;
                    }
                    let mut r: Vec<(usize, K::Elem)> =
                        vop[w * de + e].iter().map(|(w2, x)| (w2 * dc + c, x.clone())).collect();
                    r.extend(act.column(c).iter().map(|(c2, x)| (w * dc + c2, k.neg(x))));
                    rel.insert(&normalize(k, r));
                }
            }
        }
        spaces.push(rel.into_quotient());
    }
    let complex = ChainComplexRealization::from_differentials("V^op⊗_E CB(A)", "(v, a0,…,a_{n+1}) row-major", dims, diffs);
    let quotient = quotient_by(k, &complex, spaces, QuotientMode::Relations)?;
    Ok(TensorSide { bar, complex, quotient, vop_report })
}

fn sigma<K: Field>(k: &K, n: usize) -> K::Elem {
    if (n * (n + 1) / 2) % 2 == 0 {
        k.one()
    } else {
        k.neg(&k.one())
    }
}

/// `φₙ(a₁⊗…⊗aₙ⊗v) = v ⊗ (1⊗a₁⊗…⊗aₙ⊗1)` on ambient spaces, scaled by `c`.
fn phi_ambient<K: Field>(bar: &BarComplex<K>, dv: usize, n: usize, c: &K::Elem) -> LinearMap<K::Elem> {
    let k = bar.module_algebra().field();
    let dx = bar.module_algebra().alg().dim().pow(n as u32);
    let dc = bar.complex.dim(n);
    let mut cols = Vec::with_capacity(dx * dv);
    for x in 0..dx {
        let u = bar.embed_unit_ends(n, x);
        for w in 0..dv {
            cols.push(u.iter().map(|(t, z)| (w * dc + t, k.mul(c, z))).collect());
        }
    }
    LinearMap::from_columns(dv * dc, cols)
}

/// `sₙ(v ⊗ (a⊗a₁⊗…⊗aₙ⊗a′)) = a₁⊗…⊗aₙ⊗a′va` on ambient spaces, scaled by `c`.
fn s_ambient<K: Field>(
    bar: &BarComplex<K>,
    v: &EquivariantBimodule<K>,
    n: usize,
    c: &K::Elem,
) -> LinearMap<K::Elem> {
    let k = bar.module_algebra().field();
    let da = bar.module_algebra().alg().dim();
    let dv = v.dim();
    let dc = bar.complex.dim(n);
    let dx = da.pow(n as u32);
    let mut cols = Vec::with_capacity(dv * dc);
    for w in 0..dv {
        for t in 0..dc {
            let (a0, mid, a1) = (t / (dx * da), (t / da) % dx, t % da);
            let left = v.left_mul(k, &[(a1, k.one())], &[(w, k.one())]);
            let img = v.right_mul(k, &left, &[(a0, k.one())], da);
            cols.push(img.into_iter().map(|(w2, z)| (mid * dv + w2, k.mul(c, &z))).collect());
        }
    }
    LinearMap::from_columns(dx * dv, cols)
}

/// A map between quotients induced by an ambient map; `None` when the
/// ambient map does not carry `U` into `U′` (the first offending row index).
fn induced<K: Field>(
    k: &K,
    f: &LinearMap<K::Elem>,
    src: &crate::exactfield::QuotientSpace<K>,
    dst: &crate::exactfield::QuotientSpace<K>,
) -> std::result::Result<LinearMap<K::Elem>, usize> {
    for (i, r) in src.subspace().rows().iter().enumerate() {
        if !dst.project(&f.apply(k, r)).is_empty() {
            return Err(i);
        }
    }
    let cols = src.complement().iter().map(|&c| dst.project(f.column(c))).collect();
    Ok(LinearMap::from_columns(dst.dim(), cols))
}

fn format_sparse<E: std::fmt::Debug>(v: &SparseVec<E>) -> String {
    format!("{v:?}")
}

/// The isomorphism `_B QCH_*(A,B,V) ≅ V^op ⊗_E CB_*(A)` through `φ″` and `s`,
/// in degrees `0..=max_degree`.
pub fn main_iso_oracle<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    max_degree: usize,
    cap: usize,
) -> Result<OracleReport> {
    let k = ma.field();
    let b = ma.hopf();
    if !b.has_antipode() {
        return Err(Error::AntipodeRequired("main isomorphism"));
    }
    if !b.has_antipode_inv() {
        return Err(Error::AntipodeInverseRequired("main isomorphism"));
    }
    let n_top = max_degree;
    let ch = quotient_complex(ma, v, n_top, QuotientMode::CoinvariantQch, cap)?;
    let ts = tensor_side(ma, v, n_top + 1, cap)?;
    let (q, t) = (&ch.quotient, &ts.quotient);
    let dv = v.dim();
    let mut report = OracleReport::new("main-iso");
    if ts.vop_report.passed() {
        report.note("v·(a⊗a′⊗b) = S(b)(a′va) is a right E-module structure on this instance");
    } else {
        let f = ts.vop_report.failures().next().map(|c| c.name.clone()).unwrap_or_default();
        report.note(format!(
            "v·(a⊗a′⊗b) = S(b)(a′va) fails \"{f}\" on this instance; the tensor product is taken modulo relations for every basis element of E"
        ));
    }
    report.note("φ″ₙ and sₙ carry the sign (−1)^(n(n+1)/2) so that they intertwine the differentials");

    let mut well = Checker::new("φ″ and s are well defined on the quotients");
    let mut chain_phi = Checker::new("φ″ is a chain map");
    let mut chain_s = Checker::new("s is a chain map");
    let mut left_inv = Checker::new("φ″∘s = id");
    let mut right_inv = Checker::new("s∘φ″ = id");
    let mut dims = Checker::new("degreewise dimensions agree");
    let mut phis = Vec::new();
    let mut ss = Vec::new();
    for n in 0..=n_top {
        let sg = sigma(k, n);
        let phi = induced(k, &phi_ambient(&ts.bar, dv, n, &sg), q.space(n), t.space(n));
        let s = induced(k, &s_ambient(&ts.bar, v, n, &sg), t.space(n), q.space(n));
        dims.case(q.space(n).dim() == t.space(n).dim(), || {
            format!("degree {n}: {} vs {}", q.space(n).dim(), t.space(n).dim())
        });
        match (phi, s) {
            (Ok(phi), Ok(s)) => {
                well.case(true, String::new);
                let qi = LinearMap::identity(k, q.space(n).dim());
                let ti = LinearMap::identity(k, t.space(n).dim());
                let ps = phi.compose(k, &s);
                let sp = s.compose(k, &phi);
                left_inv.case(ps == ti, || {
                    let c = ps.sub(k, &ti).first_nonzero_column().unwrap_or(0);
                    format!("degree {n}, column {c}: {}", format_sparse(ps.column(c)))
                });
                right_inv.case(sp == qi, || {
                    let c = sp.sub(k, &qi).first_nonzero_column().unwrap_or(0);
                    format!("degree {n}, column {c}: {}", format_sparse(sp.column(c)))
                });
                phis.push(Some(phi));
                ss.push(Some(s));
            }
            (phi, s) => {
                well.case(false, || match (&phi, &s) {
                    (Err(i), _) => format!("degree {n}: φ″ sends relation row {i} outside the relations"),
                    (_, Err(i)) => format!("degree {n}: s sends relation row {i} outside U"),
                    _ => unreachable!(),
                });
                phis.push(phi.ok());
                ss.push(s.ok());
            }
        }
    }
    for n in 1..=n_top {
        if let (Some(p1), Some(p0)) = (&phis[n], &phis[n - 1]) {
            let lhs = t.differential(n).compose(k, p1);
            let rhs = p0.compose(k, q.differential(n));
            chain_phi.case(lhs == rhs, || format!("degree {n}, column {:?}", lhs.sub(k, &rhs).first_nonzero_column()));
        }
        if let (Some(s1), Some(s0)) = (&ss[n], &ss[n - 1]) {
            let lhs = q.differential(n).compose(k, s1);
            let rhs = s0.compose(k, t.differential(n));
            chain_s.case(lhs == rhs, || format!("degree {n}, column {:?}", lhs.sub(k, &rhs).first_nonzero_column()));
        }
    }
    for c in [well, chain_phi, chain_s, left_inv, right_inv, dims] {
        report.push(c);
    }
    let hq = q.homology_dims(k, n_top)?;
    let ht = t.homology_dims(k, n_top)?;
    report.assert("homology tables agree", hq.dims() == ht.dims(), || format!("{:?} vs {:?}", hq.dims(), ht.dims()));
    report.tables.push(hq);
    report.tables.push(ht);
    Ok(report)
}

/// Homology of the truncation `Y_m = X_{m+1}` (dropping degree 0) of a
/// quotient complex, in degrees `0..=up_to`.
fn truncated_homology<K: Field>(k: &K, qc: &QuotientComplex<K>, up_to: usize) -> Vec<usize> {
    let q = qc.quotient_dims();
    let rank = |n: usize| if n <= 1 { 0 } else { map_rank(k, qc.differential(n)) };
    (0..=up_to).map(|m| q[m + 1] - rank(m + 1) - rank(m + 2)).collect()
}

/// Cross-checks the Tor and Ext readings of Hopf–Hochschild (co)homology
/// against the truncated bar complex in degrees `1..max_degree`, and the
/// degree-0 formula `_BV/[A, _BV]`.
pub fn tor_ext_crosscheck<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    max_degree: usize,
    cap: usize,
) -> Result<OracleReport> {
    let k = ma.field();
    let a = ma.alg();
    let b = ma.hopf();
    let (da, dv) = (a.dim(), v.dim());
    let n = max_degree.max(1);
    let mut report = OracleReport::new("tor-ext");

    let ch = quotient_complex(ma, v, n, QuotientMode::CoinvariantQch, cap)?;
    let hh = ch.quotient.homology_dims(k, n)?;

    // degree 0: V / (span{bv − ε(b)v} + [A, V])
    let mut rel = Echelon::new(k, dv);
    for w in 0..dv {
        for bi in 0..b.dim() {
            let mut r = v.lb(bi, w).clone();
            r.push((w, k.neg(&b.counit()[bi])));
            rel.insert(&normalize(k, r));
        }
        for x in 0..da {
            let mut r = v.la(x, w).clone();
            r.extend(v.ra(w, x, da).iter().map(|(t, c)| (*t, k.neg(c))));
            rel.insert(&normalize(k, r));
        }
    }
    let deg0 = dv - rel.dim();
    report.assert("_BV/[A,_BV] = HH_0", deg0 == hh.dims()[0], || format!("{deg0} vs {}", hh.dims()[0]));

    // Tor side: homology of V^op ⊗_E CB_{*>0}
    let ts = tensor_side(ma, v, n + 1, cap)?;
    let tor = truncated_homology(k, &ts.quotient, n - 1);
    let mut c = Checker::new("Tor_n(Ω(A),V^op) = HH_{n+1}");
    for m in 1..n {
        c.case(tor[m] == hh.dims()[m + 1], || format!("n = {m}: {} vs {}", tor[m], hh.dims()[m + 1]));
    }
    report.push(c);

    // Ext side: cohomology of Hom_E(CB_{*>0}, V)
    let red = cochain_complex(ma, v, n + 1, cap)?;
    let hc = red.cohomology_dims(k, n)?;
    let full_bar = if ts.bar.complex.top_degree() >= n + 2 { ts.bar.clone() } else { build_cb(ma, n + 2, cap)? };
    let full = full_cochain_complex(&full_bar, v, n + 1, cap)?;
    let full_h = full.cohomology_dims(k, n)?;
    let mut c = Checker::new("Ext^n(Ω(A),V) = HH^{n+1}");
    for m in 1..n {
        // H^m of the truncation equals H^{m+1} of the full complex for m ≥ 1
        c.case(full_h.dims()[m + 1] == hc.dims()[m + 1], || {
            format!("n = {m}: {} vs {}", full_h.dims()[m + 1], hc.dims()[m + 1])
        });
    }
    report.push(c);
    report.tables.push(hh);
    report.tables.push(BettiTable::new("Tor(Ω(A),V^op)", k.spec().label(), &tor));
    report.tables.push(hc);
    report.tables.push(full_h);
    Ok(report)
}
