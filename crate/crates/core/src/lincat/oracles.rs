use super::category::{BCategoryData, BifunctorData, Decomposition, Retraction};
use super::complex::{cat_quotient, tuple_map, unit_vec, CatHochschildData, DegreeLayout};
use crate::error::{Error, Result};
use crate::exactfield::{Field, LinearMap, SparseVec};
use crate::hhcomplex::{complex_homology, QuotientComplex, QuotientMode};
use crate::report::{Checker, OracleReport};

/// Realized comparison data between `CH(𝒟)` and `CH(𝒞)`.
struct Comparison<E> {
    /// `i_n: CH_n(𝒟) → CH_n(𝒞)`.
    incl: Vec<LinearMap<E>>,
    /// `M_n: CH_n(𝒞) → CH_n(𝒟)`.
    back: Vec<LinearMap<E>>,
    /// `h[n][i]: CH_n(𝒞) → CH_{n+1}(𝒞)`, for `n < top`.
    homotopy: Vec<Vec<LinearMap<E>>>,
}

/// Which composite the paper's assignment `∂₀h₀ = i∘M`, `∂_{n+1}hₙ = id`
/// actually takes.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Ends {
    AsStated,
    Swapped,
    Neither,
}

fn inclusion<K: Field>(k: &K, small: &DegreeLayout, big: &DegreeLayout, objs: &[usize]) -> LinearMap<K::Elem> {
    tuple_map(k, small, big, |o, t, out| {
        out.push((o.iter().map(|&x| objs[x]).collect(), t.iter().map(|&x| unit_vec(k, x)).collect()));
    })
}

fn position(objs: &[usize], x: usize) -> Result<usize> {
    objs.iter().position(|&y| y == x).ok_or_else(|| Error::Precondition(format!("object {x} is not in the subcategory")))
}

/// Checks `r∘s = id_C` and trivial choices on objects of `𝒟`.
fn check_retraction<K: Field>(bc: &BCategoryData<K>, objs: &[usize], retr: &Retraction<K::Elem>) -> Result<()> {
    let cat = &bc.cat;
    let m = bc.num_objects();
    if retr.delta.len() != m || retr.r.len() != m || retr.s.len() != m {
        return Err(Error::shape("retraction", format!("expected data for {m} objects")));
    }
    for c in 0..m {
        let d = retr.delta[c];
        position(objs, d)?;
        let rs = cat.compose(c, d, c, &retr.r[c], &retr.s[c]);
        if &rs != cat.identity(c) {
            return Err(Error::Precondition(format!("r∘s ≠ id at object {}", cat.objects()[c])));
        }
        if objs.contains(&c) && (d != c || &retr.r[c] != cat.identity(c) || &retr.s[c] != cat.identity(c)) {
            return Err(Error::Precondition(format!("object {} of the subcategory must retract onto itself", cat.objects()[c])));
        }
    }
    Ok(())
}

/// Checks `Σ vᵢuᵢ = id_E` and trivial decompositions on objects of `𝒟`.
fn check_decomposition<K: Field>(bc: &BCategoryData<K>, objs: &[usize], dec: &Decomposition<K::Elem>) -> Result<()> {
    let k = bc.field();
    let cat = &bc.cat;
    let m = bc.num_objects();
    if dec.components.len() != m {
        return Err(Error::shape("decomposition", format!("expected data for {m} objects")));
    }
    for e in 0..m {
        let comps = &dec.components[e];
        if comps.is_empty() {
            return Err(Error::Precondition(format!("object {} has no components", cat.objects()[e])));
        }
        let mut sum = Vec::new();
        for c in comps {
            position(objs, c.object)?;
            sum.extend(cat.compose(e, c.object, e, &c.v, &c.u));
        }
        if crate::exactfield::normalize(k, sum) != *cat.identity(e) {
            return Err(Error::Precondition(format!("Σ vᵢuᵢ ≠ id at object {}", cat.objects()[e])));
        }
        if objs.contains(&e) {
            let trivial = comps.len() == 1
                && comps[0].object == e
                && &comps[0].u == cat.identity(e)
                && &comps[0].v == cat.identity(e);
            if !trivial {
                return Err(Error::Precondition(format!(
                    "object {} of the subcategory must be its own single component",
                    cat.objects()[e]
                )));
            }
        }
    }
    Ok(())
}

/// `ℋ(a, c)(h)` for `a: w → x`, `h ∈ ℋ(x,y)`, `c: y → z`.
fn both_sides<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    (w, x, y, z): (usize, usize, usize, usize),
    a: &[(usize, K::Elem)],
    h: &[(usize, K::Elem)],
    c: &[(usize, K::Elem)],
) -> SparseVec<K::Elem> {
    let k = bc.field();
    let ah = hf.pre(k, w, x, y, a, h);
    hf.post(k, &bc.cat, w, y, z, &ah, c)
}

/// `c∘b∘a` for `a: w → x`, `b: x → y`, `c: y → z`.
fn sandwich<K: Field>(
    bc: &BCategoryData<K>,
    (w, x, y, z): (usize, usize, usize, usize),
    c: &[(usize, K::Elem)],
    b: &[(usize, K::Elem)],
    a: &[(usize, K::Elem)],
) -> SparseVec<K::Elem> {
    let ba = bc.cat.compose(w, x, y, b, a);
    bc.cat.compose(w, y, z, c, &ba)
}

fn cofinal_maps<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    objs: &[usize],
    retr: &Retraction<K::Elem>,
    big: &CatHochschildData<K>,
    small: &CatHochschildData<K>,
) -> Comparison<K::Elem> {
    let k = bc.field();
    let top = big.complex.complex.top_degree();
    let delta = &retr.delta;
    let local = |x: usize| objs.iter().position(|&y| y == x).expect("checked");
    let incl = (0..=top).map(|n| inclusion(k, small.complex.layout(n), big.complex.layout(n), objs)).collect();
    let back = (0..=top)
        .map(|n| {
            tuple_map(k, big.complex.layout(n), small.complex.layout(n), |o, t, out| {
                let d: Vec<usize> = o.iter().map(|&x| delta[x]).collect();
                let coef = both_sides(bc, hf, (d[0], o[0], o[n], d[n]), &retr.r[o[0]], &unit_vec(k, t[0]), &retr.s[o[n]]);
                let mut factors = vec![coef];
                for i in 1..=n {
                    factors.push(sandwich(
                        bc,
                        (d[i], o[i], o[i - 1], d[i - 1]),
                        &retr.s[o[i - 1]],
                        &unit_vec(k, t[i]),
                        &retr.r[o[i]],
                    ));
                }
                out.push((d.iter().map(|&x| local(x)).collect(), factors));
            })
        })
        .collect();
    let homotopy = (0..top)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    tuple_map(k, big.complex.layout(n), big.complex.layout(n + 1), |o, t, out| {
                        let d: Vec<usize> = o.iter().map(|&x| delta[x]).collect();
                        let coef = hf.post(k, &bc.cat, o[0], o[n], d[n], &unit_vec(k, t[0]), &retr.s[o[n]]);
                        let mut objs2: Vec<usize> = o[..=i].to_vec();
                        objs2.extend_from_slice(&d[i..]);
                        let mut factors = vec![coef];
                        factors.extend(t[1..=i].iter().map(|&u| unit_vec(k, u)));
                        factors.push(retr.r[o[i]].clone());
                        for j in i + 1..=n {
                            factors.push(sandwich(
                                bc,
                                (d[j], o[j], o[j - 1], d[j - 1]),
                                &retr.s[o[j - 1]],
                                &unit_vec(k, t[j]),
                                &retr.r[o[j]],
                            ));
                        }
                        out.push((objs2, factors));
                    })
                })
                .collect()
        })
        .collect();
    Comparison { incl, back, homotopy }
}

/// All choices of one component per position.
fn choices(counts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &c in counts {
        out = out.into_iter().flat_map(|p| (0..c).map(move |i| [p.clone(), vec![i]].concat())).collect();
    }
    out
}

fn free_maps<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    objs: &[usize],
    dec: &Decomposition<K::Elem>,
    big: &CatHochschildData<K>,
    small: &CatHochschildData<K>,
) -> Comparison<K::Elem> {
    let k = bc.field();
    let top = big.complex.complex.top_degree();
    let comps = &dec.components;
    let local = |x: usize| objs.iter().position(|&y| y == x).expect("checked");
    let incl = (0..=top).map(|n| inclusion(k, small.complex.layout(n), big.complex.layout(n), objs)).collect();
    let back = (0..=top)
        .map(|n| {
            tuple_map(k, big.complex.layout(n), small.complex.layout(n), |o, t, out| {
                let counts: Vec<usize> = o.iter().map(|&x| comps[x].len()).collect();
                for ch in choices(&counts) {
                    let c: Vec<_> = (0..=n).map(|i| &comps[o[i]][ch[i]]).collect();
                    let d: Vec<usize> = c.iter().map(|x| x.object).collect();
                    let coef = both_sides(bc, hf, (d[0], o[0], o[n], d[n]), &c[0].v, &unit_vec(k, t[0]), &c[n].u);
                    let mut factors = vec![coef];
                    for i in 1..=n {
                        factors.push(sandwich(bc, (d[i], o[i], o[i - 1], d[i - 1]), &c[i - 1].u, &unit_vec(k, t[i]), &c[i].v));
                    }
                    out.push((d.iter().map(|&x| local(x)).collect(), factors));
                }
            })
        })
        .collect();
    // h_s(h⊗f₁…fₙ) = Σ ℋ(v⁰,id)(h) ⊗ u⁰f₁v¹ ⊗ … ⊗ u^{s−1}f_s v^s ⊗ u^s ⊗ f_{s+1} ⊗ … ⊗ fₙ
    let homotopy = (0..top)
        .map(|n| {
            (0..=n)
                .map(|s| {
                    tuple_map(k, big.complex.layout(n), big.complex.layout(n + 1), |o, t, out| {
                        let counts: Vec<usize> = o[..=s].iter().map(|&x| comps[x].len()).collect();
                        for ch in choices(&counts) {
                            let c: Vec<_> = (0..=s).map(|i| &comps[o[i]][ch[i]]).collect();
                            let d: Vec<usize> = c.iter().map(|x| x.object).collect();
                            let coef = hf.pre(k, d[0], o[0], o[n], &c[0].v, &unit_vec(k, t[0]));
                            let mut factors = vec![coef];
                            for i in 1..=s {
                                factors.push(sandwich(bc, (d[i], o[i], o[i - 1], d[i - 1]), &c[i - 1].u, &unit_vec(k, t[i]), &c[i].v));
                            }
                            factors.push(c[s].u.clone());
                            factors.extend(t[s + 1..].iter().map(|&f| unit_vec(k, f)));
                            let mut objs2 = d.clone();
                            objs2.extend_from_slice(&o[s..]);
                            out.push((objs2, factors));
                        }
                    })
                })
                .collect()
        })
        .collect();
    Comparison { incl, back, homotopy }
}

fn subspace_maps_into<K: Field>(
    k: &K,
    c: &mut Checker,
    f: &LinearMap<K::Elem>,
    from: &QuotientComplex<K>,
    to: &QuotientComplex<K>,
    n: usize,
    m: usize,
    what: &str,
) {
    for (i, row) in from.space(n).subspace().rows().iter().enumerate() {
        let ok = to.space(m).project(&f.apply(k, row)).is_empty();
        c.case(ok, || format!("{what}: degree {n}, subspace vector {i}"));
    }
}

/// Assertion suite shared by both oracles.
fn run_suite<K: Field>(
    report: &mut OracleReport,
    bc: &BCategoryData<K>,
    big: &CatHochschildData<K>,
    small: &CatHochschildData<K>,
    cmp: &Comparison<K::Elem>,
    max_degree: usize,
) -> Result<Ends> {
    let k = bc.field();
    let (cb, cs) = (&big.complex.complex, &small.complex.complex);
    let top = cb.top_degree();
    let id = |n: usize| LinearMap::identity(k, cb.dim(n));

    let mut simplicial = Checker::new("M is pre-simplicial");
    let mut chain = Checker::new("M is a chain map");
    let mut incl_chain = Checker::new("i is a chain map");
    for n in 1..=top {
        for j in 0..=n {
            let lhs = cs.face(n, j).compose(k, &cmp.back[n]);
            let rhs = cmp.back[n - 1].compose(k, cb.face(n, j));
            simplicial.case(lhs == rhs, || format!("degree {n}, face {j}"));
        }
        let lhs = cs.differential(n).compose(k, &cmp.back[n]);
        chain.case(lhs == cmp.back[n - 1].compose(k, cb.differential(n)), || format!("degree {n}"));
        let lhs = cb.differential(n).compose(k, &cmp.incl[n]);
        incl_chain.case(lhs == cmp.incl[n - 1].compose(k, cs.differential(n)), || format!("degree {n}"));
    }
    report.push(simplicial);
    report.push(chain);
    report.push(incl_chain);

    let mut mi = Checker::new("M∘i = id");
    for n in 0..=top {
        let ok = cmp.back[n].compose(k, &cmp.incl[n]) == LinearMap::identity(k, cs.dim(n));
        mi.case(ok, || format!("degree {n}"));
    }
    report.push(mi);

    // h lives on CH_n for n < top; identities on CH_n use h on CH_{n−1} and CH_n
    let h = &cmp.homotopy;
    let mut below = Checker::new("hᵢ∂ⱼ = ∂ⱼhᵢ₊₁ for j ≤ i");
    let mut above = Checker::new("hᵢ∂ⱼ = ∂ⱼ₊₁hᵢ for j ≥ i+1");
    let mut diag = Checker::new("∂ᵢhᵢ = ∂ᵢhᵢ₋₁");
    for n in 1..top {
        for i in 0..n {
            for j in 0..=n {
                let lhs = h[n - 1][i].compose(k, cb.face(n, j));
                if j <= i {
                    let rhs = cb.face(n + 1, j).compose(k, &h[n][i + 1]);
                    below.case(lhs == rhs, || format!("degree {n}, i={i}, j={j}"));
                } else {
                    let rhs = cb.face(n + 1, j + 1).compose(k, &h[n][i]);
                    above.case(lhs == rhs, || format!("degree {n}, i={i}, j={j}"));
                }
            }
        }
    }
    for n in 0..top {
        for i in 1..=n {
            let lhs = cb.face(n + 1, i).compose(k, &h[n][i]);
            let rhs = cb.face(n + 1, i).compose(k, &h[n][i - 1]);
            diag.case(lhs == rhs, || format!("degree {n}, i={i}"));
        }
    }
    report.push(below);
    report.push(above);
    report.push(diag);

    let im: Vec<LinearMap<K::Elem>> = (0..=top).map(|n| cmp.incl[n].compose(k, &cmp.back[n])).collect();
    let mut stated = Checker::new("∂₀h₀ = i∘M and ∂_{n+1}hₙ = id");
    let mut swapped = Checker::new("∂₀h₀ = id and ∂_{n+1}hₙ = i∘M");
    for n in 0..top {
        let first = cb.face(n + 1, 0).compose(k, &h[n][0]);
        let last = cb.face(n + 1, n + 1).compose(k, &h[n][n]);
        stated.case(first == im[n] && last == id(n), || format!("degree {n}"));
        swapped.case(first == id(n) && last == im[n], || format!("degree {n}"));
    }
    let (stated, swapped) = (stated.finish(), swapped.finish());
    let ends = match (stated.passed, swapped.passed) {
        (true, _) => Ends::AsStated,
        (false, true) => Ends::Swapped,
        _ => Ends::Neither,
    };
    let mut either = Checker::new("end faces of the homotopy are i∘M and id");
    either.case(ends != Ends::Neither, || stated.witness.clone().unwrap_or_default());
    report.checks.push(stated);
    report.checks.push(swapped);
    report.push(either);
    if ends == Ends::Swapped {
        report.note("homotopy end faces are swapped relative to the stated assignment: ∂₀h₀ = id, ∂_{n+1}hₙ = i∘M");
    }

    // H = Σ(−1)ⁱhᵢ gives dH + Hd = ∂₀h₀ − ∂_{n+1}hₙ
    let hsum: Vec<LinearMap<K::Elem>> = (0..top)
        .map(|n| {
            let mut acc = LinearMap::zero(cb.dim(n), cb.dim(n + 1));
            for (i, hi) in h[n].iter().enumerate() {
                let sign = if i % 2 == 0 { k.one() } else { k.neg(&k.one()) };
                acc = acc.axpy(k, &sign, hi);
            }
            acc
        })
        .collect();
    let mut homotopic = Checker::new("dH + Hd = ±(i∘M − id)");
    for n in 0..top {
        let mut lhs = cb.differential(n + 1).compose(k, &hsum[n]);
        if n > 0 {
            lhs = lhs.add(k, &hsum[n - 1].compose(k, cb.differential(n)));
        }
        let diff = im[n].sub(k, &id(n));
        let expected = if ends == Ends::Swapped { diff.scaled(k, &k.neg(&k.one())) } else { diff };
        homotopic.case(lhs == expected, || format!("degree {n}"));
    }
    report.push(homotopic);

    let mut equi = Checker::new("i, M and hᵢ commute with the B-action");
    let (ab, asm) = (&big.complex.action, &small.complex.action);
    for n in 0..=top {
        for b in 0..bc.hopf.dim() {
            let ok = ab.maps[n][b].compose(k, &cmp.incl[n]) == cmp.incl[n].compose(k, &asm.maps[n][b]);
            equi.case(ok, || format!("i, degree {n}, b = {b}"));
            let ok = asm.maps[n][b].compose(k, &cmp.back[n]) == cmp.back[n].compose(k, &ab.maps[n][b]);
            equi.case(ok, || format!("M, degree {n}, b = {b}"));
            if n < top {
                for (i, hi) in h[n].iter().enumerate() {
                    let ok = ab.maps[n + 1][b].compose(k, hi) == hi.compose(k, &ab.maps[n][b]);
                    equi.case(ok, || format!("h{i}, degree {n}, b = {b}"));
                }
            }
        }
    }
    report.push(equi);

    let (qb, qs) = (&big.quotient, &small.quotient);
    let mut stable = Checker::new("i, M and H preserve U_*");
    for n in 0..=top {
        subspace_maps_into(k, &mut stable, &cmp.back[n], qb, qs, n, n, "M");
        subspace_maps_into(k, &mut stable, &cmp.incl[n], qs, qb, n, n, "i");
        if n + 1 < top {
            subspace_maps_into(k, &mut stable, &hsum[n], qb, qb, n, n + 1, "H");
        }
    }
    report.push(stable);

    let (pb, ps) = (complex_homology(k, cb), complex_homology(k, cs));
    let trim = |v: Vec<usize>| v.into_iter().take(max_degree + 1).collect::<Vec<_>>();
    report.assert("CH tables agree", trim(pb.dims()) == trim(ps.dims()), || format!("{:?} vs {:?}", pb.dims(), ps.dims()));
    let (tb, ts) = (qb.homology_dims(k, max_degree)?, qs.homology_dims(k, max_degree)?);
    report.assert("quotient tables agree", tb.dims() == ts.dims(), || format!("{:?} vs {:?}", tb.dims(), ts.dims()));
    report.tables.push(tb);
    report.tables.push(ts);
    Ok(ends)
}

fn subcategory_data<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    objs: &[usize],
) -> Result<(BCategoryData<K>, BifunctorData<K>)> {
    let m = bc.num_objects();
    if objs.is_empty() || objs.iter().any(|&x| x >= m) {
        return Err(Error::Precondition("subcategory objects out of range".into()));
    }
    Ok((bc.full_subcategory(objs), hf.full_subcategory(objs)))
}

/// Cofinal subcategory `𝒟` (the full subcategory on `small`) of `𝒞`:
/// realizes `i`, `M` and the homotopy `hᵢ` and checks the homotopy
/// equivalence and its descent to the quotient complexes.
pub fn cofinality_oracle<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    small: &[usize],
    retr: &Retraction<K::Elem>,
    max_degree: usize,
    mode: QuotientMode,
    cap: usize,
) -> Result<OracleReport> {
    check_retraction(bc, small, retr)?;
    let (sbc, shf) = subcategory_data(bc, hf, small)?;
    let big = cat_quotient(bc, hf, max_degree, mode, cap)?;
    let sm = cat_quotient(&sbc, &shf, max_degree, mode, cap)?;
    let cmp = cofinal_maps(bc, hf, small, retr, &big, &sm);
    let mut report = OracleReport::new("cofinal");
    run_suite(&mut report, bc, &big, &sm, &cmp, max_degree)?;
    Ok(report)
}

/// `𝒟` (the full subcategory on `small`) generates every object of `𝒞` by
/// finite direct sums: realizes `i`, `M` and the homotopy `h_s` and checks
/// the homotopy equivalence and its descent to the quotient complexes.
pub fn free_generation_oracle<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    small: &[usize],
    dec: &Decomposition<K::Elem>,
    max_degree: usize,
    mode: QuotientMode,
    cap: usize,
) -> Result<OracleReport> {
    check_decomposition(bc, small, dec)?;
    let (sbc, shf) = subcategory_data(bc, hf, small)?;
    let big = cat_quotient(bc, hf, max_degree, mode, cap)?;
    let sm = cat_quotient(&sbc, &shf, max_degree, mode, cap)?;
    let cmp = free_maps(bc, hf, small, dec, &big, &sm);
    let mut report = OracleReport::new("free-gen");
    run_suite(&mut report, bc, &big, &sm, &cmp, max_degree)?;
    Ok(report)
}
