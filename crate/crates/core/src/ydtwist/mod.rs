//! Yetter–Drinfeld modules, the twisted bifunctor `M⋉ℋ` and twisted
//! Hopf–Hochschild complexes.

#[cfg(test)]
mod tests;

use crate::error::{Error, Result};
use crate::exactfield::{normalize, Field, SparseVec};
use crate::hhcomplex::{QuotientMode, DEFAULT_SIZE_CAP};
use crate::hopfcore::HopfData;
use crate::lincat::{
    build_module_category, cat_quotient, check_module_table, free_generation_oracle, one_object, validate_bifunctor,
    BCategoryData, BifunctorData, CatHochschildData,
};
use crate::modact::{EquivariantBimodule, ModuleAlgebra};
use crate::report::{BettiTable, Checker, OracleReport, ValidationReport};

/// One coaction term `coeff · b_j ⊗ m_k` of `m ↦ m₍₋₁₎ ⊗ m₍₀₎`.
pub type CoactionTerm<E> = (E, usize, usize);

/// A left `B`-module and left `B`-comodule.
///
/// `action[b * dim + m] = b·m`; `coaction[m]` lists the terms of `ρ(m)`.
#[derive(Clone, Debug)]
pub struct YDModule<K: Field> {
    names: Vec<String>,
    action: Vec<SparseVec<K::Elem>>,
    coaction: Vec<Vec<CoactionTerm<K::Elem>>>,
}

impl<K: Field> YDModule<K> {
    pub fn new(
        hopf: &HopfData<K>,
        names: Vec<String>,
        action: Vec<SparseVec<K::Elem>>,
        coaction: Vec<Vec<CoactionTerm<K::Elem>>>,
    ) -> Result<Self> {
        let (db, dm) = (hopf.dim(), names.len());
        if action.len() != db * dm || action.iter().flatten().any(|(i, _)| *i >= dm) {
            return Err(Error::shape("yd.action", format!("expected {db}x{dm} images in range")));
        }
        if coaction.len() != dm || coaction.iter().flatten().any(|(_, b, m)| *b >= db || *m >= dm) {
            return Err(Error::shape("yd.coaction", format!("expected {dm} entries in range")));
        }
        Ok(YDModule { names, action, coaction })
    }

    /// `M = k` with `b·1 = ε(b)` and `1 ↦ 1_B ⊗ 1`.
    pub fn trivial(hopf: &HopfData<K>) -> Self {
        let k = hopf.field();
        let action = hopf.counit().iter().map(|c| normalize(k, vec![(0, c.clone())])).collect();
        let coaction = vec![hopf.alg().unit().iter().map(|(b, c)| (c.clone(), *b, 0)).collect()];
        YDModule { names: vec!["1".into()], action, coaction }
    }

    /// `M = B` with the adjoint action and the coaction `Δ`.
    pub fn adjoint_regular(hopf: &HopfData<K>) -> Result<Self> {
        let d = hopf.dim();
        let mut action = Vec::with_capacity(d * d);
        for b in 0..d {
            for c in 0..d {
                action.push(hopf.adjoint(b, c)?);
            }
        }
        let coaction = hopf.comult().to_vec();
        Ok(YDModule { names: hopf.alg().names().to_vec(), action, coaction })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn action_table(&self) -> &[SparseVec<K::Elem>] {
        &self.action
    }
    pub fn coaction(&self, m: usize) -> &[CoactionTerm<K::Elem>] {
        &self.coaction[m]
    }

    /// `ρ` extended linearly, in `B⊗M` coordinates `b * dim M + m`.
    fn rho(&self, k: &K, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let dm = self.dim();
        let mut acc = Vec::new();
        for (m, c) in v {
            acc.extend(self.coaction[*m].iter().map(|(x, b, m2)| (b * dm + m2, k.mul(c, x))));
        }
        normalize(k, acc)
    }

    fn act(&self, k: &K, b: usize, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let dm = self.dim();
        let mut acc = Vec::new();
        for (m, c) in v {
            acc.extend(self.action[b * dm + m].iter().map(|(i, x)| (*i, k.mul(c, x))));
        }
        normalize(k, acc)
    }
}

/// Module and comodule axioms and the Yetter–Drinfeld condition
/// `(bm)₍₋₁₎⊗(bm)₍₀₎ = b₍₁₎m₍₋₁₎S(b₍₃₎) ⊗ b₍₂₎m₍₀₎` on all basis pairs.
pub fn validate_yd<K: Field>(hopf: &HopfData<K>, m: &YDModule<K>) -> Result<ValidationReport> {
    if !hopf.has_antipode() {
        return Err(Error::AntipodeRequired("Yetter–Drinfeld condition"));
    }
    let k = hopf.field();
    let (db, dm) = (hopf.dim(), m.dim());
    let b = hopf.alg();
    let mut report = ValidationReport::new("yd");
    let mut module = Checker::new("M is a B-module");
    check_module_table(&mut module, k, hopf, &m.action, dm, "M");
    report.push(module);

    let mut coassoc = Checker::new("(Δ⊗id)ρ = (id⊗ρ)ρ");
    let mut counit = Checker::new("(ε⊗id)ρ = id");
    for x in 0..dm {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let mut eps = Vec::new();
        for (c, bi, m2) in &m.coaction[x] {
            for (d, b1, b2) in &hopf.comult()[*bi] {
                lhs.push(((b1 * db + b2) * dm + m2, k.mul(c, d)));
            }
            for (d, b2, m3) in &m.coaction[*m2] {
                rhs.push(((bi * db + b2) * dm + m3, k.mul(c, d)));
            }
            eps.push((*m2, k.mul(c, &hopf.counit()[*bi])));
        }
        coassoc.case(normalize(k, lhs) == normalize(k, rhs), || format!("m = {}", m.names[x]));
        counit.case(normalize(k, eps) == vec![(x, k.one())], || format!("m = {}", m.names[x]));
    }
    report.push(coassoc);
    report.push(counit);

    let cop = hopf.iterated_coproduct(3);
    let mut yd = Checker::new("(bm)₍₋₁₎⊗(bm)₍₀₎ = b₍₁₎m₍₋₁₎S(b₍₃₎)⊗b₍₂₎m₍₀₎");
    for bi in 0..db {
        for x in 0..dm {
            let lhs = m.rho(k, &m.action[bi * dm + x]);
            let mut acc = Vec::new();
            for (c, legs) in &cop.terms[bi] {
                let s3 = hopf.s(&[(legs[2], k.one())], "Yetter–Drinfeld condition")?;
                for (d, beta, m0) in &m.coaction[x] {
                    let left = b.mul(&b.mul(&b.basis_vec(legs[0]), &b.basis_vec(*beta)), &s3);
                    let right = m.act(k, legs[1], &[(*m0, k.one())]);
                    let cd = k.mul(c, d);
                    for (p, y) in &left {
                        for (q, z) in &right {
                            acc.push((p * dm + q, k.mul(&cd, &k.mul(y, z))));
                        }
                    }
                }
            }
            yd.case(lhs == normalize(k, acc), || format!("b = {}, m = {}", b.name(bi), m.names[x]));
        }
    }
    report.push(yd);
    Ok(report)
}

/// `M⋉ℋ` with its validation report.
#[derive(Clone, Debug)]
pub struct TwistedBifunctor<K: Field> {
    pub bifunctor: BifunctorData<K>,
    pub report: ValidationReport,
}

/// The twisted bifunctor on `M ⊗ ℋ(X,Y)` (index `m * dim ℋ(X,Y) + h`):
/// precomposition is untwisted, `ℋ(u,id)(m⊗h) = m ⊗ ℋ(u,id)(h)`;
/// postcomposition is `ℋ(id,v)(m⊗h) = m₍₀₎ ⊗ ℋ(id, S⁻¹(m₍₋₁₎)·v)(h)`; and
/// `b(m⊗h) = b₍₁₎m ⊗ b₍₂₎h`. The full bifunctor suite, including
/// equivariance, is asserted on the result.
pub fn twist_bifunctor<K: Field>(
    bc: &BCategoryData<K>,
    m: &YDModule<K>,
    hf: &BifunctorData<K>,
) -> Result<TwistedBifunctor<K>> {
    let hopf = &bc.hopf;
    let k = bc.field();
    if !hopf.has_antipode_inv() {
        return Err(Error::AntipodeInverseRequired("twisted bifunctor"));
    }
    let yd = validate_yd(hopf, m)?;
    if let Some(f) = yd.failures().next() {
        return Err(Error::ValidationFailure(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    let hv = validate_bifunctor(bc, hf);
    if let Some(f) = hv.failures().next() {
        return Err(Error::ValidationFailure(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    let n = bc.num_objects();
    let dm = m.dim();
    let cat = &bc.cat;
    let dims: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| dm * hf.dim(x, y)).collect()).collect();
    let sinv: Vec<SparseVec<K::Elem>> =
        (0..hopf.dim()).map(|b| hopf.s_inv(&[(b, k.one())], "twisted bifunctor")).collect::<Result<_>>()?;
    let mut pre = Vec::with_capacity(n * n * n);
    let mut post = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // u: a→b, m⊗h ∈ M⊗ℋ(b,c) ↦ m⊗ℋ(u,id)h ∈ M⊗ℋ(a,c)
                let (dh, dout) = (hf.dim(b, c), hf.dim(a, c));
                let mut t = Vec::with_capacity(cat.hom_dim(a, b) * dm * dh);
                for u in 0..cat.hom_dim(a, b) {
                    for x in 0..dm {
                        for h in 0..dh {
                            let img = &hf.pre_table(a, b, c)[u * dh + h];
                            t.push(img.iter().map(|(i, z)| (x * dout + i, z.clone())).collect());
                        }
                    }
                }
                pre.push(t);
                // m⊗h ∈ M⊗ℋ(a,b), v: b→c ↦ m₀ ⊗ ℋ(id, S⁻¹(m₋₁)v)h ∈ M⊗ℋ(a,c)
                let (dh, dv) = (hf.dim(a, b), cat.hom_dim(b, c));
                let mut t = Vec::with_capacity(dm * dh * dv);
                for x in 0..dm {
                    for h in 0..dh {
                        for v in 0..dv {
                            let mut acc = Vec::new();
                            for (coef, beta, m0) in m.coaction(x) {
                                let twisted_v = bc.act(b, c, &sinv[*beta], &[(v, k.one())]);
                                let img = hf.post(k, cat, a, b, c, &[(h, k.one())], &twisted_v);
                                acc.extend(img.into_iter().map(|(i, z)| (m0 * dout + i, k.mul(coef, &z))));
                            }
                            t.push(normalize(k, acc));
                        }
                    }
                }
                post.push(t);
            }
        }
    }
    let cop = hopf.iterated_coproduct(2);
    let mut action = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let dh = hf.dim(x, y);
            let mut t = Vec::with_capacity(hopf.dim() * dm * dh);
            for b in 0..hopf.dim() {
                for mi in 0..dm {
                    for h in 0..dh {
                        let mut acc = Vec::new();
                        for (c, legs) in &cop.terms[b] {
                            let bm = &m.action[legs[0] * dm + mi];
                            let bh = &hf.action_table(x, y)[legs[1] * dh + h];
                            for (p, y1) in bm {
                                for (q, z1) in bh {
                                    acc.push((p * dh + q, k.mul(c, &k.mul(y1, z1))));
                                }
                            }
                        }
                        t.push(normalize(k, acc));
                    }
                }
            }
            action.push(t);
        }
    }
    let bifunctor = BifunctorData::new(bc, dims, pre, post, action)?;
    let mut report = validate_bifunctor(bc, &bifunctor);
    report.subject = "twisted bifunctor".into();
    if let Some(f) = report.failures().next() {
        return Err(Error::ValidationFailure(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    Ok(TwistedBifunctor { bifunctor, report })
}

/// `QCH_*(A,B,A;M)`: the coinvariant quotient of the category complex of
/// `*_B^A` with coefficients `M⋉Hom`.
#[derive(Clone, Debug)]
pub struct TwistedComplex<K: Field> {
    pub data: CatHochschildData<K>,
    pub table: BettiTable,
}

/// Twisted Hopf–Hochschild homology in degrees `0..=max_degree`.
pub fn twisted_complex<K: Field>(
    ma: &ModuleAlgebra<K>,
    m: &YDModule<K>,
    max_degree: usize,
    cap: usize,
) -> Result<TwistedComplex<K>> {
    let (bc, hom) = one_object(ma, &EquivariantBimodule::regular(ma));
    let tw = twist_bifunctor(&bc, m, &hom)?;
    let data = cat_quotient(&bc, &tw.bifunctor, max_degree, QuotientMode::CoinvariantQch, cap)?;
    let mut table = data.quotient.homology_dims(ma.field(), max_degree)?;
    table.complex = "QCH(A,B,A;M)".into();
    Ok(TwistedComplex { data, table })
}

/// Twisting by `M = k` changes nothing: faces and actions of the twisted
/// and untwisted category complexes agree matrix-for-matrix.
pub fn check_trivial_twist<K: Field>(ma: &ModuleAlgebra<K>, top: usize, cap: usize) -> Result<Checker> {
    let k = ma.field();
    let (bc, hom) = one_object(ma, &EquivariantBimodule::regular(ma));
    let tw = twist_bifunctor(&bc, &YDModule::trivial(ma.hopf()), &hom)?;
    let plain = crate::lincat::build_cat_ch(&bc, &hom, top, cap)?;
    let twisted = crate::lincat::build_cat_ch(&bc, &tw.bifunctor, top, cap)?;
    let mut c = Checker::new("M = k twist leaves the complex unchanged");
    for n in 0..=top {
        c.case(plain.complex.dim(n) == twisted.complex.dim(n), || format!("dimension in degree {n}"));
        if n > 0 {
            for j in 0..=n {
                c.case(plain.complex.face(n, j) == twisted.complex.face(n, j), || format!("degree {n}, face {j}"));
            }
        }
        for b in 0..ma.hopf().dim() {
            c.case(plain.action.maps[n][b] == twisted.action.maps[n][b], || format!("degree {n}, action of b{b}"));
        }
    }
    let _ = k;
    Ok(c)
}

/// Desk-scale twisted Morita invariance: `M⋉Hom` over the module category
/// on ranks `[1, r]` against the one-object category, through the
/// free-generation oracle, plus agreement with [`twisted_complex`].
pub fn twisted_morita<K: Field>(
    ma: &ModuleAlgebra<K>,
    m: &YDModule<K>,
    rank: usize,
    max_degree: usize,
    cap: usize,
) -> Result<OracleReport> {
    let mc = build_module_category(ma, &[1, rank])?;
    let tw = twist_bifunctor(&mc.bcat, m, &mc.hom)?;
    let dec = mc.decomposition_into_rank_one().expect("rank one object present");
    let mut report =
        free_generation_oracle(&mc.bcat, &tw.bifunctor, &[0], &dec, max_degree, QuotientMode::CoinvariantQch, cap)?;
    report.oracle = "twisted-morita".into();
    let one = twisted_complex(ma, m, max_degree, cap)?;
    let big = report.tables[0].dims();
    report.assert("table equals the one-object twisted table", big == one.table.dims(), || {
        format!("{big:?} vs {:?}", one.table.dims())
    });
    report.tables.push(one.table);
    Ok(report)
}

/// Convenience wrapper with the default size cap.
pub fn twisted_table<K: Field>(ma: &ModuleAlgebra<K>, m: &YDModule<K>, max_degree: usize) -> Result<BettiTable> {
    Ok(twisted_complex(ma, m, max_degree, DEFAULT_SIZE_CAP)?.table)
}
