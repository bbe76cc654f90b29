use std::collections::HashMap;

use super::category::{one_object, BCategoryData, BifunctorData};
use crate::error::Result;
use crate::exactfield::{normalize, Field, LinearMap, SparseVec};
use crate::hhcomplex::{
    build_ch, ch_action, check_size, diagonal_on_tensor, quotient_pipeline, ChainComplexRealization, GradedAction,
    QuotientComplex, QuotientMode,
};
use crate::modact::{EquivariantBimodule, ModuleAlgebra};
use crate::report::{Checker, OracleReport};
use crate::tensor::{tensor_vectors, TensorShape};

/// One summand `ℋ(X₀,Xₙ) ⊗ Hom(X₁,X₀) ⊗ … ⊗ Hom(Xₙ,Xₙ₋₁)` of `CH_n`.
#[derive(Clone, Debug)]
pub struct TupleBlock {
    pub objects: Vec<usize>,
    pub shape: TensorShape,
    pub offset: usize,
}

/// The summands of one degree, in lexicographic order of object tuples;
/// empty summands are omitted.
#[derive(Clone, Debug)]
pub struct DegreeLayout {
    blocks: Vec<TupleBlock>,
    index: HashMap<Vec<usize>, usize>,
    dim: usize,
}

impl DegreeLayout {
    fn new<K: Field>(bc: &BCategoryData<K>, hf: &BifunctorData<K>, n: usize) -> Self {
        let m = bc.num_objects();
        let mut blocks = Vec::new();
        let mut index = HashMap::new();
        let mut offset = 0;
        let count = m.pow(n as u32 + 1);
        for flat in 0..count {
            let mut objs = vec![0; n + 1];
            let mut rest = flat;
            for slot in (0..=n).rev() {
                objs[slot] = rest % m;
                rest /= m;
            }
            let mut dims = vec![hf.dim(objs[0], objs[n])];
            dims.extend((1..=n).map(|i| bc.cat.hom_dim(objs[i], objs[i - 1])));
            let shape = TensorShape::new(dims);
            if shape.size() == 0 {
                continue;
            }
            index.insert(objs.clone(), blocks.len());
            let size = shape.size();
            blocks.push(TupleBlock { objects: objs, shape, offset });
            offset += size;
        }
        DegreeLayout { blocks, index, dim: offset }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn blocks(&self) -> &[TupleBlock] {
        &self.blocks
    }
    pub fn block(&self, objects: &[usize]) -> Option<&TupleBlock> {
        self.index.get(objects).map(|&i| &self.blocks[i])
    }
}

fn predicted_dim<K: Field>(bc: &BCategoryData<K>, hf: &BifunctorData<K>, n: usize) -> usize {
    // Σ over tuples by dynamic programming on (X₀, current object)
    let m = bc.num_objects();
    let mut acc = vec![vec![0usize; m]; m];
    for x in 0..m {
        acc[x][x] = 1;
    }
    for _ in 0..n {
        let mut next = vec![vec![0usize; m]; m];
        for x0 in 0..m {
            for prev in 0..m {
                if acc[x0][prev] == 0 {
                    continue;
                }
                for cur in 0..m {
                    let d = bc.cat.hom_dim(cur, prev);
                    next[x0][cur] = next[x0][cur].saturating_add(acc[x0][prev].saturating_mul(d));
                }
            }
        }
        acc = next;
    }
    let mut total = 0usize;
    for x0 in 0..m {
        for xn in 0..m {
            total = total.saturating_add(acc[x0][xn].saturating_mul(hf.dim(x0, xn)));
        }
    }
    total
}

/// A pure tensor in some summand: object tuple and one vector per factor.
pub(crate) type Term<E> = (Vec<usize>, Vec<SparseVec<E>>);

/// Builds a map between two layouts from per-basis-element images given as
/// sums of pure tensors.
pub(crate) fn tuple_map<K: Field>(
    k: &K,
    src: &DegreeLayout,
    dst: &DegreeLayout,
    mut image: impl FnMut(&[usize], &[usize], &mut Vec<Term<K::Elem>>),
) -> LinearMap<K::Elem> {
    let mut cols = Vec::with_capacity(src.dim());
    let mut idx = Vec::new();
    let mut terms = Vec::new();
    for block in src.blocks() {
        for flat in 0..block.shape.size() {
            block.shape.decode(flat, &mut idx);
            terms.clear();
            image(&block.objects, &idx, &mut terms);
            let mut acc = Vec::new();
            for (objs, factors) in terms.iter() {
                if factors.iter().any(|f| f.is_empty()) {
                    continue;
                }
                let target = dst.block(objs).expect("image lands in a realized summand");
                let refs: Vec<&SparseVec<K::Elem>> = factors.iter().collect();
                let v = tensor_vectors(k, &refs, target.shape.dims());
                acc.extend(v.into_iter().map(|(i, c)| (target.offset + i, c)));
            }
            cols.push(normalize(k, acc));
        }
    }
    LinearMap::from_columns(dst.dim(), cols)
}

pub(crate) fn unit_vec<K: Field>(k: &K, i: usize) -> SparseVec<K::Elem> {
    vec![(i, k.one())]
}

/// `CH_*(𝒞,ℋ)` with its diagonal `B`-action and layouts.
#[derive(Clone, Debug)]
pub struct CategoryComplex<K: Field> {
    pub complex: ChainComplexRealization<K>,
    pub action: GradedAction<K::Elem>,
    layouts: Vec<DegreeLayout>,
}

impl<K: Field> CategoryComplex<K> {
    pub fn layout(&self, n: usize) -> &DegreeLayout {
        &self.layouts[n]
    }
}

/// Realizes `CH_n(𝒞,ℋ)` for `0 ≤ n ≤ top` with faces
/// `∂₀ = ℋ(u₁,id)(h)⊗u₂⊗…`, `∂ᵢ = …⊗uᵢuᵢ₊₁⊗…` and `∂ₙ = ℋ(id,uₙ)(h)⊗…⊗uₙ₋₁`,
/// and the diagonal action `b₍₁₎h ⊗ b₍₂₎u₁ ⊗ … ⊗ b₍ₙ₊₁₎uₙ`.
pub fn build_cat_ch<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    top: usize,
    cap: usize,
) -> Result<CategoryComplex<K>> {
    let k = bc.field();
    let cat = &bc.cat;
    for n in 0..=top {
        check_size(n, predicted_dim(bc, hf, n), cap)?;
    }
    let layouts: Vec<DegreeLayout> = (0..=top).map(|n| DegreeLayout::new(bc, hf, n)).collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=top {
        let (src, dst) = (&layouts[n], &layouts[n - 1]);
        let mut fs = Vec::with_capacity(n + 1);
        fs.push(tuple_map(k, src, dst, |o, t, out| {
            let h = hf.pre(k, o[1], o[0], o[n], &unit_vec(k, t[1]), &unit_vec(k, t[0]));
            let mut factors = vec![h];
            factors.extend(t[2..].iter().map(|&u| unit_vec(k, u)));
            out.push((o[1..].to_vec(), factors));
        }));
        for j in 1..n {
            fs.push(tuple_map(k, src, dst, |o, t, out| {
                let uu = cat.compose_basis(o[j + 1], o[j], o[j - 1], t[j], t[j + 1]).clone();
                let mut factors: Vec<SparseVec<K::Elem>> = t[..j].iter().map(|&x| unit_vec(k, x)).collect();
                factors.push(uu);
                factors.extend(t[j + 2..].iter().map(|&x| unit_vec(k, x)));
                let mut objs = o.to_vec();
                objs.remove(j);
                out.push((objs, factors));
            }));
        }
        fs.push(tuple_map(k, src, dst, |o, t, out| {
            let h = hf.post(k, cat, o[0], o[n], o[n - 1], &unit_vec(k, t[0]), &unit_vec(k, t[n]));
            let mut factors = vec![h];
            factors.extend(t[1..n].iter().map(|&u| unit_vec(k, u)));
            out.push((o[..n].to_vec(), factors));
        }));
        faces.push(fs);
    }
    let dims = layouts.iter().map(DegreeLayout::dim).collect();
    let complex = ChainComplexRealization::from_faces(
        k,
        "CH(C,H)",
        "object tuples lexicographic; (h,u1,…,un) row-major within a tuple",
        dims,
        faces,
    );
    let action = category_action(bc, hf, &layouts);
    Ok(CategoryComplex { complex, action, layouts })
}

fn category_action<K: Field>(bc: &BCategoryData<K>, hf: &BifunctorData<K>, layouts: &[DegreeLayout]) -> GradedAction<K::Elem> {
    let k = bc.field();
    let maps = layouts
        .iter()
        .map(|layout| {
            (0..bc.hopf.dim())
                .map(|b| {
                    let mut cols = Vec::with_capacity(layout.dim());
                    for block in layout.blocks() {
                        let o = &block.objects;
                        let n = o.len() - 1;
                        let mut legs: Vec<&[SparseVec<K::Elem>]> = vec![hf.action_table(o[0], o[n])];
                        legs.extend((1..=n).map(|i| bc.action_table(o[i], o[i - 1])));
                        let local = diagonal_on_tensor(k, &bc.hopf, &block.shape, b, &legs);
                        for c in local.columns() {
                            cols.push(c.iter().map(|(i, x)| (block.offset + i, x.clone())).collect());
                        }
                    }
                    LinearMap::from_columns(layout.dim(), cols)
                })
                .collect()
        })
        .collect();
    GradedAction { maps }
}

/// `CH_*(𝒞,ℋ)` realized to `max_degree + 1` and its quotient by `U_*`.
#[derive(Clone, Debug)]
pub struct CatHochschildData<K: Field> {
    pub complex: CategoryComplex<K>,
    pub quotient: QuotientComplex<K>,
}

/// The category-level quotient pipeline (`QCH_*(𝒞,B,ℋ)` and variants),
/// sharing the algebra-level implementation.
pub fn cat_quotient<K: Field>(
    bc: &BCategoryData<K>,
    hf: &BifunctorData<K>,
    max_degree: usize,
    mode: QuotientMode,
    cap: usize,
) -> Result<CatHochschildData<K>> {
    let complex = build_cat_ch(bc, hf, max_degree + 1, cap)?;
    let quotient =
        quotient_pipeline(bc.field(), &complex.complex, &complex.action, bc.hopf.counit(), mode)?;
    Ok(CatHochschildData { complex, quotient })
}

/// Permutation `CH_n(*_B^A, V) → CH_n(A^op, V^op)` sending
/// `h⊗u₁⊗…⊗uₙ` to `uₙ⊗…⊗u₁⊗h`.
fn reversal<K: Field>(k: &K, da: usize, dv: usize, n: usize) -> LinearMap<K::Elem> {
    let mut cat_dims = vec![dv];
    cat_dims.extend(std::iter::repeat(da).take(n));
    let src = TensorShape::new(cat_dims);
    let mut hh_dims = vec![da; n];
    hh_dims.push(dv);
    let dst = TensorShape::new(hh_dims);
    let cols = (0..src.size())
        .map(|flat| {
            let t = src.decode_vec(flat);
            let mut r: Vec<usize> = t[1..].iter().rev().cloned().collect();
            r.push(t[0]);
            vec![(dst.encode(&r), k.one())]
        })
        .collect();
    LinearMap::from_columns(dst.size(), cols)
}

/// The one-object category `*_B^A` with coefficients `V` against the
/// algebra-level pipeline on `(A^op, V^op)` over `B^cop`: faces and
/// actions agree matrix-for-matrix under the reversal of tensor factors,
/// and so do obstruction dimensions and homology tables.
pub fn compare_one_object<K: Field>(
    ma: &ModuleAlgebra<K>,
    v: &EquivariantBimodule<K>,
    max_degree: usize,
    mode: QuotientMode,
    cap: usize,
) -> Result<OracleReport> {
    let k = ma.field();
    let da = ma.alg().dim();
    let mut report = OracleReport::new("one-object");
    let (bc, hf) = one_object(ma, v);
    let cat = cat_quotient(&bc, &hf, max_degree, mode, cap)?;
    let ma_op = ma.op_cop();
    let v_op = v.opposite(da);
    let top = max_degree + 1;
    let hh = build_ch(&ma_op, &v_op, top, cap)?;
    let hh_action = ch_action(&ma_op, &v_op, top);
    let hh_q = quotient_pipeline(k, &hh, &hh_action, ma_op.hopf().counit(), mode)?;

    let perms: Vec<LinearMap<K::Elem>> = (0..=top).map(|n| reversal(k, da, v.dim(), n)).collect();
    let mut faces = Checker::new("faces agree under the reversal");
    for n in 1..=top {
        for j in 0..=n {
            let lhs = perms[n - 1].compose(k, cat.complex.complex.face(n, j));
            let rhs = hh.face(n, j).compose(k, &perms[n]);
            faces.case(lhs == rhs, || format!("degree {n}, face {j}"));
        }
    }
    report.push(faces);
    let mut act = Checker::new("diagonal actions agree under the reversal");
    for n in 0..=top {
        for b in 0..ma.hopf().dim() {
            let lhs = perms[n].compose(k, &cat.complex.action.maps[n][b]);
            let rhs = hh_action.maps[n][b].compose(k, &perms[n]);
            act.case(lhs == rhs, || format!("degree {n}, b = {}", ma.hopf().alg().name(b)));
        }
    }
    report.push(act);
    let (jc, jh) = (cat.quotient.obstruction_dims(), hh_q.obstruction_dims());
    report.assert("obstruction dimensions agree", jc == jh, || format!("{jc:?} vs {jh:?}"));
    let tc = cat.quotient.homology_dims(k, max_degree)?;
    let th = hh_q.homology_dims(k, max_degree)?;
    report.assert("homology tables agree", tc.dims() == th.dims(), || format!("{:?} vs {:?}", tc.dims(), th.dims()));
    report.note("Hom(A,A) ≅ A as algebras (composition = product); the algebra-level side is A^op over B^cop");
    report.tables.push(tc);
    report.tables.push(th);
    Ok(report)
}
