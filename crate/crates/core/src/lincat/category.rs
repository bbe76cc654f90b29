use crate::error::{Error, Result};
use crate::exactfield::{normalize, null_space, Field, LinearMap, SparseVec};
use crate::hopfcore::HopfData;
use crate::modact::{EquivariantBimodule, ModuleAlgebra};
use crate::report::{Checker, ValidationReport};

/// `Σ xᵢ yⱼ table[i * dim_y + j]`.
pub(crate) fn bilinear<K: Field>(
    k: &K,
    table: &[SparseVec<K::Elem>],
    dim_y: usize,
    x: &[(usize, K::Elem)],
    y: &[(usize, K::Elem)],
) -> SparseVec<K::Elem> {
    let mut acc = Vec::new();
    for (i, a) in x {
        for (j, b) in y {
            let ab = k.mul(a, b);
            acc.extend(table[i * dim_y + j].iter().map(|(t, c)| (*t, k.mul(&ab, c))));
        }
    }
    normalize(k, acc)
}

fn basis<K: Field>(k: &K, i: usize) -> SparseVec<K::Elem> {
    vec![(i, k.one())]
}

/// A k-linear category with finitely many objects and finite-dimensional
/// hom-spaces, given by structure constants.
///
/// Composition `Hom(y,z) ⊗ Hom(x,y) → Hom(x,z)` is stored per object triple
/// as `compose[(x*m + y)*m + z][g * dim Hom(x,y) + f]`.
#[derive(Clone, Debug)]
pub struct FiniteLinearCategory<K: Field> {
    field: K,
    objects: Vec<String>,
    hom_dims: Vec<usize>,
    compose: Vec<Vec<SparseVec<K::Elem>>>,
    identities: Vec<SparseVec<K::Elem>>,
}

impl<K: Field> FiniteLinearCategory<K> {
    /// `hom_dims[x][y] = dim Hom(x, y)`.
    pub fn new(
        k: &K,
        objects: Vec<String>,
        hom_dims: Vec<Vec<usize>>,
        compose: Vec<Vec<SparseVec<K::Elem>>>,
        identities: Vec<SparseVec<K::Elem>>,
    ) -> Result<Self> {
        let m = objects.len();
        if m == 0 {
            return Err(Error::shape("objects", "at least one object is required"));
        }
        if hom_dims.len() != m || hom_dims.iter().any(|r| r.len() != m) {
            return Err(Error::shape("hom_dims", format!("expected {m}x{m}")));
        }
        let hom_dims: Vec<usize> = hom_dims.into_iter().flatten().collect();
        if compose.len() != m * m * m {
            return Err(Error::shape("compose", format!("expected {} object triples", m * m * m)));
        }
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    let t = &compose[(x * m + y) * m + z];
                    let path = || format!("compose[{x}][{y}][{z}]");
                    if t.len() != hom_dims[y * m + z] * hom_dims[x * m + y] {
                        return Err(Error::shape(path(), "wrong number of basis pairs"));
                    }
                    if t.iter().flatten().any(|(i, _)| *i >= hom_dims[x * m + z]) {
                        return Err(Error::shape(path(), "index out of range"));
                    }
                }
            }
        }
        if identities.len() != m {
            return Err(Error::shape("identities", format!("expected {m} entries")));
        }
        for (x, id) in identities.iter().enumerate() {
            if id.iter().any(|(i, _)| *i >= hom_dims[x * m + x]) {
                return Err(Error::shape(format!("identities[{x}]"), "index out of range"));
            }
        }
        Ok(FiniteLinearCategory { field: k.clone(), objects, hom_dims, compose, identities })
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom_dims[x * self.num_objects() + y]
    }
    pub fn identity(&self, x: usize) -> &SparseVec<K::Elem> {
        &self.identities[x]
    }
    /// `g∘f` for basis indices `f ∈ Hom(x,y)`, `g ∈ Hom(y,z)`.
    pub fn compose_basis(&self, x: usize, y: usize, z: usize, g: usize, f: usize) -> &SparseVec<K::Elem> {
        let m = self.num_objects();
        &self.compose[(x * m + y) * m + z][g * self.hom_dim(x, y) + f]
    }
    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[(usize, K::Elem)], f: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let m = self.num_objects();
        bilinear(&self.field, &self.compose[(x * m + y) * m + z], self.hom_dim(x, y), g, f)
    }

    /// Associativity on all composable basis triples and neutrality of the
    /// identities.
    pub fn validate(&self) -> ValidationReport {
        let k = &self.field;
        let m = self.num_objects();
        let mut report = ValidationReport::new("category");
        let mut assoc = Checker::new("composition associative");
        for w in 0..m {
            for x in 0..m {
                for y in 0..m {
                    for z in 0..m {
                        for f in 0..self.hom_dim(w, x) {
                            for g in 0..self.hom_dim(x, y) {
                                let gf = self.compose_basis(w, x, y, g, f);
                                for h in 0..self.hom_dim(y, z) {
                                    let lhs = self.compose(w, y, z, &basis(k, h), gf);
                                    let hg = self.compose_basis(x, y, z, h, g);
                                    let rhs = self.compose(w, x, z, hg, &basis(k, f));
                                    assoc.case(lhs == rhs, || {
                                        format!("objects ({w},{x},{y},{z}), basis (f{f},g{g},h{h})")
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        report.push(assoc);
        let mut ident = Checker::new("identities neutral");
        for x in 0..m {
            for y in 0..m {
                for f in 0..self.hom_dim(x, y) {
                    let e = basis(k, f);
                    ident.case(self.compose(x, y, y, &self.identities[y], &e) == e, || format!("id_{y}∘f{f}, f: {x}→{y}"));
                    ident.case(self.compose(x, x, y, &e, &self.identities[x]) == e, || format!("f{f}∘id_{x}, f: {x}→{y}"));
                }
            }
        }
        report.push(ident);
        report
    }

    /// The full subcategory on `objs`, re-indexed in the given order.
    pub fn full_subcategory(&self, objs: &[usize]) -> Self {
        let m = self.num_objects();
        let mut compose = Vec::new();
        for &x in objs {
            for &y in objs {
                for &z in objs {
                    compose.push(self.compose[(x * m + y) * m + z].clone());
                }
            }
        }
        FiniteLinearCategory {
            field: self.field.clone(),
            objects: objs.iter().map(|&x| self.objects[x].clone()).collect(),
            hom_dims: objs.iter().flat_map(|&x| objs.iter().map(move |&y| (x, y))).map(|(x, y)| self.hom_dim(x, y)).collect(),
            compose,
            identities: objs.iter().map(|&x| self.identities[x].clone()).collect(),
        }
    }
}

/// A category whose hom-spaces are left `B`-modules with composition
/// `B`-linear for the diagonal action: `b(g∘f) = b₍₁₎(g)∘b₍₂₎(f)`.
///
/// `action[x*m + y][b * dim Hom(x,y) + f]` is `b·f`.
#[derive(Clone, Debug)]
pub struct BCategoryData<K: Field> {
    pub cat: FiniteLinearCategory<K>,
    pub hopf: HopfData<K>,
    action: Vec<Vec<SparseVec<K::Elem>>>,
}

impl<K: Field> BCategoryData<K> {
    pub fn new(cat: FiniteLinearCategory<K>, hopf: HopfData<K>, action: Vec<Vec<SparseVec<K::Elem>>>) -> Result<Self> {
        let m = cat.num_objects();
        if action.len() != m * m {
            return Err(Error::shape("action", format!("expected {} hom-spaces", m * m)));
        }
        for x in 0..m {
            for y in 0..m {
                let d = cat.hom_dim(x, y);
                let t = &action[x * m + y];
                if t.len() != hopf.dim() * d || t.iter().flatten().any(|(i, _)| *i >= d) {
                    return Err(Error::shape(format!("action[{x}][{y}]"), "wrong shape"));
                }
            }
        }
        Ok(BCategoryData { cat, hopf, action })
    }

    pub fn field(&self) -> &K {
        self.cat.field()
    }
    pub fn num_objects(&self) -> usize {
        self.cat.num_objects()
    }
    /// Action table of `Hom(x,y)`, indexed `b * dim + f`.
    pub fn action_table(&self, x: usize, y: usize) -> &[SparseVec<K::Elem>] {
        &self.action[x * self.num_objects() + y]
    }
    /// `b·f` for `f ∈ Hom(x,y)`.
    pub fn act(&self, x: usize, y: usize, b: &[(usize, K::Elem)], f: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        bilinear(self.field(), self.action_table(x, y), self.cat.hom_dim(x, y), b, f)
    }

    pub fn full_subcategory(&self, objs: &[usize]) -> Self {
        let m = self.num_objects();
        let action = objs.iter().flat_map(|&x| objs.iter().map(move |&y| x * m + y)).map(|p| self.action[p].clone()).collect();
        BCategoryData { cat: self.cat.full_subcategory(objs), hopf: self.hopf.clone(), action }
    }

    /// Solution space `{f : b(f) = ε(b)f for all b}` of `Hom(x,y)`.
    pub fn invariants(&self, x: usize, y: usize) -> Vec<SparseVec<K::Elem>> {
        invariant_space(self.field(), &self.hopf, self.action_table(x, y), self.cat.hom_dim(x, y))
    }
}

/// `{v : b·v = ε(b)v}` for an action table indexed `b * dim + v`.
pub(crate) fn invariant_space<K: Field>(
    k: &K,
    hopf: &HopfData<K>,
    table: &[SparseVec<K::Elem>],
    dim: usize,
) -> Vec<SparseVec<K::Elem>> {
    let mut rows = Vec::new();
    for b in 0..hopf.dim() {
        let cols = (0..dim).map(|v| table[b * dim + v].clone()).collect();
        let shift = LinearMap::from_columns(dim, cols).sub(k, &LinearMap::identity(k, dim).scaled(k, &hopf.counit()[b]));
        rows.extend(shift.transpose().columns().iter().filter(|r| !r.is_empty()).cloned());
    }
    null_space(k, dim, &rows)
}

/// Module axioms of an action table: `1·v = v` and `(bb′)·v = b·(b′·v)`.
pub(crate) fn check_module_table<K: Field>(
    c: &mut Checker,
    k: &K,
    hopf: &HopfData<K>,
    table: &[SparseVec<K::Elem>],
    dim: usize,
    place: &str,
) {
    let b = hopf.alg();
    for v in 0..dim {
        let e = basis(k, v);
        c.case(bilinear(k, table, dim, b.unit(), &e) == e, || format!("{place}: 1·v{v}"));
        for i in 0..b.dim() {
            let inner = &table[i * dim + v];
            for j in 0..b.dim() {
                let lhs = bilinear(k, table, dim, &basis(k, j), inner);
                let rhs = bilinear(k, table, dim, b.mul_basis(j, i), &e);
                c.case(lhs == rhs, || format!("{place}: ({}·{})·v{v}", b.name(j), b.name(i)));
            }
        }
    }
}

/// Module axioms per hom-space, `B`-linearity of composition and
/// invariance of the identities.
pub fn validate_bcategory<K: Field>(bc: &BCategoryData<K>) -> ValidationReport {
    let k = bc.field();
    let cat = &bc.cat;
    let hopf = &bc.hopf;
    let m = cat.num_objects();
    let mut report = ValidationReport::new("b-category");
    report.absorb("", cat.validate());
    let mut module = Checker::new("hom-spaces are B-modules");
    for x in 0..m {
        for y in 0..m {
            check_module_table(&mut module, k, hopf, bc.action_table(x, y), cat.hom_dim(x, y), &format!("Hom({x},{y})"));
        }
    }
    report.push(module);
    let cop = hopf.iterated_coproduct(2);
    let mut comp = Checker::new("b(g∘f) = b₍₁₎(g)∘b₍₂₎(f)");
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                for f in 0..cat.hom_dim(x, y) {
                    for g in 0..cat.hom_dim(y, z) {
                        let gf = cat.compose_basis(x, y, z, g, f);
                        for b in 0..hopf.dim() {
                            let lhs = bc.act(x, z, &basis(k, b), gf);
                            let mut acc = Vec::new();
                            for (c, legs) in &cop.terms[b] {
                                let bg = bc.act(y, z, &basis(k, legs[0]), &basis(k, g));
                                let bf = bc.act(x, y, &basis(k, legs[1]), &basis(k, f));
                                acc.extend(cat.compose(x, y, z, &bg, &bf).into_iter().map(|(t, v)| (t, k.mul(c, &v))));
                            }
                            comp.case(lhs == normalize(k, acc), || {
                                format!("objects ({x},{y},{z}), f{f}, g{g}, b = {}", hopf.alg().name(b))
                            });
                        }
                    }
                }
            }
        }
    }
    report.push(comp);
    let mut ids = Checker::new("identities are invariant");
    for x in 0..m {
        for b in 0..hopf.dim() {
            let lhs = bc.act(x, x, &basis(k, b), cat.identity(x));
            let rhs = normalize(k, cat.identity(x).iter().map(|(i, c)| (*i, k.mul(c, &hopf.counit()[b]))).collect());
            ids.case(lhs == rhs, || format!("object {x}, b = {}", hopf.alg().name(b)));
        }
    }
    report.push(ids);
    report
}

/// A bifunctor `ℋ: 𝒞^op × 𝒞 → Vect` with a `B`-action on every value.
///
/// For `u: w → x`, `pre[(w*m + x)*m + y][u * dim ℋ(x,y) + h] = ℋ(u, id)(h) ∈
/// ℋ(w,y)`; for `v: y → z`, `post[(x*m + y)*m + z][h * dim Hom(y,z) + v] =
/// ℋ(id, v)(h) ∈ ℋ(x,z)`. For `ℋ = Hom` these are `h∘u` and `v∘h`.
#[derive(Clone, Debug)]
pub struct BifunctorData<K: Field> {
    m: usize,
    dims: Vec<usize>,
    pre: Vec<Vec<SparseVec<K::Elem>>>,
    post: Vec<Vec<SparseVec<K::Elem>>>,
    action: Vec<Vec<SparseVec<K::Elem>>>,
}

impl<K: Field> BifunctorData<K> {
    pub fn new(
        bc: &BCategoryData<K>,
        dims: Vec<Vec<usize>>,
        pre: Vec<Vec<SparseVec<K::Elem>>>,
        post: Vec<Vec<SparseVec<K::Elem>>>,
        action: Vec<Vec<SparseVec<K::Elem>>>,
    ) -> Result<Self> {
        let m = bc.num_objects();
        let cat = &bc.cat;
        if dims.len() != m || dims.iter().any(|r| r.len() != m) {
            return Err(Error::shape("bifunctor.dims", format!("expected {m}x{m}")));
        }
        let dims: Vec<usize> = dims.into_iter().flatten().collect();
        let d = |x: usize, y: usize| dims[x * m + y];
        if pre.len() != m * m * m || post.len() != m * m * m || action.len() != m * m {
            return Err(Error::shape("bifunctor", "wrong number of structure tables"));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let t = &pre[(a * m + b) * m + c];
                    if t.len() != cat.hom_dim(a, b) * d(b, c) || t.iter().flatten().any(|(i, _)| *i >= d(a, c)) {
                        return Err(Error::shape(format!("bifunctor.pre[{a}][{b}][{c}]"), "wrong shape"));
                    }
                    let t = &post[(a * m + b) * m + c];
                    if t.len() != d(a, b) * cat.hom_dim(b, c) || t.iter().flatten().any(|(i, _)| *i >= d(a, c)) {
                        return Err(Error::shape(format!("bifunctor.post[{a}][{b}][{c}]"), "wrong shape"));
                    }
                }
                let t = &action[a * m + b];
                if t.len() != bc.hopf.dim() * d(a, b) || t.iter().flatten().any(|(i, _)| *i >= d(a, b)) {
                    return Err(Error::shape(format!("bifunctor.action[{a}][{b}]"), "wrong shape"));
                }
            }
        }
        Ok(BifunctorData { m, dims, pre, post, action })
    }

    /// `ℋ = Hom_𝒞(−,−)`.
    pub fn hom(bc: &BCategoryData<K>) -> Self {
        let m = bc.num_objects();
        let cat = &bc.cat;
        let mut pre = Vec::with_capacity(m * m * m);
        let mut post = Vec::with_capacity(m * m * m);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    // pre: u: a→b, h: b→c ↦ h∘u
                    let mut t = Vec::new();
                    for u in 0..cat.hom_dim(a, b) {
                        for h in 0..cat.hom_dim(b, c) {
                            t.push(cat.compose_basis(a, b, c, h, u).clone());
                        }
                    }
                    pre.push(t);
                    // post: h: a→b, v: b→c ↦ v∘h
                    let mut t = Vec::new();
                    for h in 0..cat.hom_dim(a, b) {
                        for v in 0..cat.hom_dim(b, c) {
                            t.push(cat.compose_basis(a, b, c, v, h).clone());
                        }
                    }
                    post.push(t);
                }
            }
        }
        BifunctorData {
            m,
            dims: (0..m * m).map(|p| cat.hom_dim(p / m, p % m)).collect(),
            pre,
            post,
            action: (0..m * m).map(|p| bc.action_table(p / m, p % m).to_vec()).collect(),
        }
    }

    pub fn num_objects(&self) -> usize {
        self.m
    }
    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.m + y]
    }
    pub fn action_table(&self, x: usize, y: usize) -> &[SparseVec<K::Elem>] {
        &self.action[x * self.m + y]
    }
    pub fn pre_table(&self, w: usize, x: usize, y: usize) -> &[SparseVec<K::Elem>] {
        &self.pre[(w * self.m + x) * self.m + y]
    }
    pub fn post_table(&self, x: usize, y: usize, z: usize) -> &[SparseVec<K::Elem>] {
        &self.post[(x * self.m + y) * self.m + z]
    }

    /// `ℋ(u, id)(h) ∈ ℋ(w,y)` for `u: w → x`, `h ∈ ℋ(x,y)`.
    pub fn pre(&self, k: &K, w: usize, x: usize, y: usize, u: &[(usize, K::Elem)], h: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        bilinear(k, self.pre_table(w, x, y), self.dim(x, y), u, h)
    }
    /// `ℋ(id, v)(h) ∈ ℋ(x,z)` for `h ∈ ℋ(x,y)`, `v: y → z`.
    pub fn post(
        &self,
        k: &K,
        cat: &FiniteLinearCategory<K>,
        x: usize,
        y: usize,
        z: usize,
        h: &[(usize, K::Elem)],
        v: &[(usize, K::Elem)],
    ) -> SparseVec<K::Elem> {
        bilinear(k, self.post_table(x, y, z), cat.hom_dim(y, z), h, v)
    }
    pub fn act(&self, k: &K, x: usize, y: usize, b: &[(usize, K::Elem)], h: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        bilinear(k, self.action_table(x, y), self.dim(x, y), b, h)
    }

    /// Restriction to the full subcategory on `objs`.
    pub fn full_subcategory(&self, objs: &[usize]) -> Self {
        let m = self.m;
        let pairs: Vec<usize> = objs.iter().flat_map(|&x| objs.iter().map(move |&y| x * m + y)).collect();
        let triples: Vec<usize> = objs
            .iter()
            .flat_map(|&x| objs.iter().flat_map(move |&y| objs.iter().map(move |&z| (x * m + y) * m + z)))
            .collect();
        BifunctorData {
            m: objs.len(),
            dims: pairs.iter().map(|&p| self.dims[p]).collect(),
            pre: triples.iter().map(|&t| self.pre[t].clone()).collect(),
            post: triples.iter().map(|&t| self.post[t].clone()).collect(),
            action: pairs.iter().map(|&p| self.action[p].clone()).collect(),
        }
    }
}

/// Bifunctoriality and `B`-equivariance of `ℋ` over `bc`.
///
/// Equivariance is checked as `b(ℋ(u,v)h) = ℋ(b₍₃₎u, b₍₁₎v)(b₍₂₎h)`: with
/// functional composition `ℋ(u,v)h = v∘h∘u` for `ℋ = Hom`, and the
/// `B`-category axiom distributes `b` over `v∘h∘u` from left to right.
pub fn validate_bifunctor<K: Field>(bc: &BCategoryData<K>, hf: &BifunctorData<K>) -> ValidationReport {
    let k = bc.field();
    let cat = &bc.cat;
    let hopf = &bc.hopf;
    let m = bc.num_objects();
    let mut report = ValidationReport::new("bifunctor");
    if hf.num_objects() != m {
        let mut c = Checker::new("object count");
        c.case(false, || format!("bifunctor has {} objects, category {m}", hf.num_objects()));
        report.push(c);
        return report;
    }
    let e = |i: usize| basis(k, i);

    let mut pre_assoc = Checker::new("ℋ(u′,id)ℋ(u,id) = ℋ(u∘u′,id)");
    let mut post_assoc = Checker::new("ℋ(id,v′)ℋ(id,v) = ℋ(id,v′∘v)");
    let mut commute = Checker::new("ℋ(id,v)ℋ(u,id) = ℋ(u,id)ℋ(id,v)");
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    // u′: a→b, u: b→c, h ∈ ℋ(c,d)
                    for u2 in 0..cat.hom_dim(a, b) {
                        for u in 0..cat.hom_dim(b, c) {
                            let uu = cat.compose_basis(a, b, c, u, u2);
                            for h in 0..hf.dim(c, d) {
                                let lhs = hf.pre(k, a, b, d, &e(u2), &hf.pre(k, b, c, d, &e(u), &e(h)));
                                let rhs = hf.pre(k, a, c, d, uu, &e(h));
                                pre_assoc.case(lhs == rhs, || format!("objects ({a},{b},{c},{d}), u′{u2}, u{u}, h{h}"));
                            }
                        }
                    }
                    // h ∈ ℋ(a,b), v: b→c, v′: c→d
                    for h in 0..hf.dim(a, b) {
                        for v in 0..cat.hom_dim(b, c) {
                            let hv = hf.post(k, cat, a, b, c, &e(h), &e(v));
                            for v2 in 0..cat.hom_dim(c, d) {
                                let lhs = hf.post(k, cat, a, c, d, &hv, &e(v2));
                                let vv = cat.compose_basis(b, c, d, v2, v);
                                let rhs = hf.post(k, cat, a, b, d, &e(h), vv);
                                post_assoc.case(lhs == rhs, || format!("objects ({a},{b},{c},{d}), h{h}, v{v}, v′{v2}"));
                            }
                        }
                    }
                    // u: a→b, h ∈ ℋ(b,c), v: c→d
                    for u in 0..cat.hom_dim(a, b) {
                        for h in 0..hf.dim(b, c) {
                            let uh = hf.pre(k, a, b, c, &e(u), &e(h));
                            for v in 0..cat.hom_dim(c, d) {
                                let lhs = hf.post(k, cat, a, c, d, &uh, &e(v));
                                let rhs = hf.pre(k, a, b, d, &e(u), &hf.post(k, cat, b, c, d, &e(h), &e(v)));
                                commute.case(lhs == rhs, || format!("objects ({a},{b},{c},{d}), u{u}, h{h}, v{v}"));
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(pre_assoc);
    report.push(post_assoc);
    report.push(commute);

    let mut ids = Checker::new("identities act trivially");
    for x in 0..m {
        for y in 0..m {
            for h in 0..hf.dim(x, y) {
                ids.case(hf.pre(k, x, x, y, cat.identity(x), &e(h)) == e(h), || format!("ℋ(id,−) on h{h} ∈ ℋ({x},{y})"));
                ids.case(hf.post(k, cat, x, y, y, &e(h), cat.identity(y)) == e(h), || format!("ℋ(−,id) on h{h} ∈ ℋ({x},{y})"));
            }
        }
    }
    report.push(ids);

    let mut module = Checker::new("values are B-modules");
    for x in 0..m {
        for y in 0..m {
            check_module_table(&mut module, k, hopf, hf.action_table(x, y), hf.dim(x, y), &format!("ℋ({x},{y})"));
        }
    }
    report.push(module);

    let cop = hopf.iterated_coproduct(3);
    let mut equi = Checker::new("b(ℋ(u,v)h) = ℋ(b₍₃₎u, b₍₁₎v)(b₍₂₎h)");
    for w in 0..m {
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    for u in 0..cat.hom_dim(w, x) {
                        for h in 0..hf.dim(x, y) {
                            let uh = hf.pre(k, w, x, y, &e(u), &e(h));
                            for v in 0..cat.hom_dim(y, z) {
                                let huv = hf.post(k, cat, w, y, z, &uh, &e(v));
                                for b in 0..hopf.dim() {
                                    let lhs = hf.act(k, w, z, &e(b), &huv);
                                    let mut acc = Vec::new();
                                    for (c, legs) in &cop.terms[b] {
                                        let bv = bc.act(y, z, &e(legs[0]), &e(v));
                                        let bh = hf.act(k, x, y, &e(legs[1]), &e(h));
                                        let bu = bc.act(w, x, &e(legs[2]), &e(u));
                                        let t = hf.post(k, cat, w, y, z, &hf.pre(k, w, x, y, &bu, &bh), &bv);
                                        acc.extend(t.into_iter().map(|(i, z)| (i, k.mul(c, &z))));
                                    }
                                    equi.case(lhs == normalize(k, acc), || {
                                        format!("objects ({w},{x},{y},{z}), u{u}, h{h}, v{v}, b = {}", hopf.alg().name(b))
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(equi);
    report
}

/// The one-object category `*_B^A` (`Hom = A`, composition the product of
/// `A`) with the bifunctor given by an equivariant bimodule `V`:
/// `ℋ(u,v)h = v·h·u`.
pub fn one_object<K: Field>(ma: &ModuleAlgebra<K>, v: &EquivariantBimodule<K>) -> (BCategoryData<K>, BifunctorData<K>) {
    let k = ma.field();
    let a = ma.alg();
    let da = a.dim();
    let cat = FiniteLinearCategory {
        field: k.clone(),
        objects: vec!["*".into()],
        hom_dims: vec![da],
        compose: vec![a.products().to_vec()],
        identities: vec![a.unit().clone()],
    };
    let bc = BCategoryData { cat, hopf: ma.hopf().clone(), action: vec![ma.action_table().to_vec()] };
    let dv = v.dim();
    // pre: u ⊗ h ↦ h·u ; post: h ⊗ w ↦ w·h
    let pre = (0..da * dv).map(|p| v.ra(p % dv, p / dv, da).clone()).collect();
    let post = (0..dv * da).map(|p| v.la(p % da, p / da).clone()).collect();
    let hf = BifunctorData { m: 1, dims: vec![dv], pre: vec![pre], post: vec![post], action: vec![v.left_b_table().to_vec()] };
    (bc, hf)
}

/// Objects `A^{⊕r}` of the category of `B`-equivariant right `A`-modules,
/// with all right `A`-linear maps, and the hom bifunctor.
#[derive(Clone, Debug)]
pub struct ModuleCategory<K: Field> {
    pub bcat: BCategoryData<K>,
    pub hom: BifunctorData<K>,
    pub ranks: Vec<usize>,
    da: usize,
    a_unit: SparseVec<K::Elem>,
}

/// Builds the module category on free modules of the given ranks.
///
/// `Hom(A^r, A^s)` is the space of `s×r` matrices over `A` acting by left
/// multiplication, with basis index `(i*r + j) * dim A + a` for entry `(i,j)`
/// equal to `e_a`. The `B`-action is the conjugation
/// `(bf)(x) = b₍₁₎ f(S(b₍₂₎)x)`, read off on the generators `e_j`.
pub fn build_module_category<K: Field>(ma: &ModuleAlgebra<K>, ranks: &[usize]) -> Result<ModuleCategory<K>> {
    let k = ma.field();
    let hopf = ma.hopf();
    if !hopf.has_antipode() {
        return Err(Error::AntipodeRequired("module category"));
    }
    if ranks.is_empty() || ranks.contains(&0) {
        return Err(Error::Precondition("ranks must be nonempty and positive".into()));
    }
    let a = ma.alg();
    let da = a.dim();
    let m = ranks.len();
    let hd = |x: usize, y: usize| ranks[y] * ranks[x] * da;
    let mut compose = Vec::with_capacity(m * m * m);
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let (rx, ry) = (ranks[x], ranks[y]);
                let mut t = Vec::with_capacity(hd(y, z) * hd(x, y));
                for g in 0..hd(y, z) {
                    let (gi, gj, ga) = ((g / da) / ry, (g / da) % ry, g % da);
                    for f in 0..hd(x, y) {
                        let (fi, fj, fa) = ((f / da) / rx, (f / da) % rx, f % da);
                        if gj != fi {
                            t.push(Vec::new());
                            continue;
                        }
                        let off = (gi * rx + fj) * da;
                        t.push(a.mul_basis(ga, fa).iter().map(|(c, z)| (off + c, z.clone())).collect());
                    }
                }
                compose.push(t);
            }
        }
    }
    let identities = (0..m)
        .map(|x| {
            let r = ranks[x];
            let mut id = Vec::new();
            for i in 0..r {
                id.extend(a.unit().iter().map(|(c, z)| ((i * r + i) * da + c, z.clone())));
            }
            normalize(k, id)
        })
        .collect();
    let objects = ranks.iter().map(|&r| if r == 1 { "A".to_string() } else { format!("A^{r}") }).collect();
    let cat = FiniteLinearCategory::new(
        k,
        objects,
        (0..m).map(|x| (0..m).map(|y| hd(x, y)).collect()).collect(),
        compose,
        identities,
    )?;
    let mut action = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let (r, s) = (ranks[x], ranks[y]);
            let mut t = Vec::with_capacity(hopf.dim() * hd(x, y));
            for b in 0..hopf.dim() {
                for f in 0..hd(x, y) {
                    let mut out = Vec::new();
                    for j in 0..r {
                        let image = conjugate_on_generator(ma, (r, s), f, b, j, a.unit())?;
                        for (i, col) in image.iter().enumerate() {
                            out.extend(col.iter().map(|(c, z)| ((i * r + j) * da + c, z.clone())));
                        }
                    }
                    t.push(normalize(k, out));
                }
            }
            action.push(t);
        }
    }
    let bcat = BCategoryData::new(cat, hopf.clone(), action)?;
    let hom = BifunctorData::hom(&bcat);
    Ok(ModuleCategory { bcat, hom, ranks: ranks.to_vec(), da, a_unit: a.unit().clone() })
}

/// `(b·f)(e_j·x)` as a column of `s` elements of `A`, for the basis map
/// `f: A^r → A^s` and `x ∈ A`, computed as `b₍₁₎ f(S(b₍₂₎)(e_j·x))`.
fn conjugate_on_generator<K: Field>(
    ma: &ModuleAlgebra<K>,
    (r, s): (usize, usize),
    f: usize,
    b: usize,
    j: usize,
    x: &[(usize, K::Elem)],
) -> Result<Vec<SparseVec<K::Elem>>> {
    let k = ma.field();
    let a = ma.alg();
    let da = a.dim();
    let (fi, fj, fa) = ((f / da) / r, (f / da) % r, f % da);
    let mut out = vec![Vec::new(); s];
    for (c, b1, b2) in &ma.hopf().comult()[b] {
        let sb2 = ma.hopf().s(&[(*b2, k.one())], "module category")?;
        // S(b₂) acts on e_j·x coordinatewise; f picks coordinate fj into row fi
        if fj != j {
            continue;
        }
        let moved = ma.act(&sb2, x);
        let fx = a.mul(&a.basis_vec(fa), &moved);
        let img = ma.act(&[(*b1, c.clone())], &fx);
        out[fi].extend(img);
    }
    Ok(out.into_iter().map(|v| normalize(k, v)).collect())
}

/// `(b·f)(e_j·x) = (b·f)(e_j)·x` for all basis maps, `b`, `j` and `x`:
/// the conjugated maps are again right `A`-linear, and reading them off on
/// generators is faithful.
pub fn check_conjugation<K: Field>(ma: &ModuleAlgebra<K>, mc: &ModuleCategory<K>) -> Result<Checker> {
    let a = ma.alg();
    let da = a.dim();
    let ranks = &mc.ranks;
    let mut c = Checker::new("conjugation action is right A-linear");
    for x in 0..ranks.len() {
        for y in 0..ranks.len() {
            let (r, s) = (ranks[x], ranks[y]);
            for f in 0..r * s * da {
                for b in 0..ma.hopf().dim() {
                    for j in 0..r {
                        let on_gen = conjugate_on_generator(ma, (r, s), f, b, j, a.unit())?;
                        for t in 0..da {
                            let direct = conjugate_on_generator(ma, (r, s), f, b, j, &a.basis_vec(t))?;
                            let via: Vec<SparseVec<K::Elem>> = on_gen.iter().map(|col| a.mul(col, &a.basis_vec(t))).collect();
                            c.case(direct == via, || format!("f{f}: A^{r}→A^{s}, b = {}, e_{j}·{}", ma.hopf().alg().name(b), a.name(t)));
                        }
                    }
                }
            }
        }
    }
    Ok(c)
}

impl<K: Field> ModuleCategory<K> {
    pub fn object_of_rank(&self, r: usize) -> Option<usize> {
        self.ranks.iter().position(|&x| x == r)
    }

    /// Coordinate map `A^{r_x} → A^{r_y}` with unit entries at
    /// `(off_y + i, off_x + i)` for `i < n`.
    pub fn coordinate_map(&self, x: usize, off_x: usize, off_y: usize, n: usize) -> SparseVec<K::Elem> {
        let k = self.bcat.field();
        let r = self.ranks[x];
        let mut out = Vec::new();
        for i in 0..n {
            let (row, col) = (off_y + i, off_x + i);
            out.extend(self.a_unit.iter().map(|(c, z)| ((row * r + col) * self.da + c, z.clone())));
        }
        normalize(k, out)
    }

    /// Retraction of every object onto the object of largest rank:
    /// `s` includes the first coordinates, `r` projects onto them.
    pub fn retraction_to_largest(&self) -> Retraction<K::Elem> {
        let top = (0..self.ranks.len()).max_by_key(|&x| (self.ranks[x], std::cmp::Reverse(x))).unwrap();
        self.retraction_to(top)
    }

    /// Retraction of every object of rank at most `ranks[target]` onto it.
    pub fn retraction_to(&self, target: usize) -> Retraction<K::Elem> {
        let m = self.ranks.len();
        let mut r = Vec::with_capacity(m);
        let mut s = Vec::with_capacity(m);
        for x in 0..m {
            let n = self.ranks[x].min(self.ranks[target]);
            r.push(self.coordinate_map(target, 0, 0, n));
            s.push(self.coordinate_map(x, 0, 0, n));
        }
        Retraction { delta: vec![target; m], r, s }
    }

    /// Decomposition of every object into copies of the rank-one object via
    /// coordinate projections `u_i` and inclusions `v_i`.
    pub fn decomposition_into_rank_one(&self) -> Option<Decomposition<K::Elem>> {
        let one = self.object_of_rank(1)?;
        let components = (0..self.ranks.len())
            .map(|x| {
                (0..self.ranks[x])
                    .map(|i| Component {
                        object: one,
                        u: self.coordinate_map(x, i, 0, 1),
                        v: self.coordinate_map(one, 0, i, 1),
                    })
                    .collect()
            })
            .collect();
        Some(Decomposition { components })
    }
}

/// Retraction data for a cofinal subcategory: for each object `C`,
/// `r(C): δ(C) → C` and `s(C): C → δ(C)` with `r∘s = id_C`.
#[derive(Clone, Debug)]
pub struct Retraction<E> {
    pub delta: Vec<usize>,
    pub r: Vec<SparseVec<E>>,
    pub s: Vec<SparseVec<E>>,
}

/// One summand `D` of an object `E`: `u: E → D`, `v: D → E`.
#[derive(Clone, Debug)]
pub struct Component<E> {
    pub object: usize,
    pub u: SparseVec<E>,
    pub v: SparseVec<E>,
}

/// Free-generation data: components of every object with `Σ vᵢuᵢ = id`.
#[derive(Clone, Debug)]
pub struct Decomposition<E> {
    pub components: Vec<Vec<Component<E>>>,
}

/// The invariant subcategory `ᴮ𝒞`: `{f : b(f) = ε(b)f}` per hom-pair.
#[derive(Clone, Debug)]
pub struct InvariantSubcategory<E> {
    /// `bases[x*m + y]` spans the invariants of `Hom(x,y)`.
    pub bases: Vec<Vec<SparseVec<E>>>,
}

pub fn invariant_subcategory<K: Field>(bc: &BCategoryData<K>) -> InvariantSubcategory<K::Elem> {
    let m = bc.num_objects();
    InvariantSubcategory { bases: (0..m * m).map(|p| bc.invariants(p / m, p % m)).collect() }
}

impl<E: Clone + PartialEq> InvariantSubcategory<E> {
    /// Composites of invariant basis maps are invariant, and identities are.
    pub fn check_closed<K: Field<Elem = E>>(&self, bc: &BCategoryData<K>) -> Checker {
        let k = bc.field();
        let m = bc.num_objects();
        let cat = &bc.cat;
        let mut c = Checker::new("invariant subcategory closed under composition");
        let inside = |x: usize, y: usize, f: &SparseVec<E>| {
            let mut e = crate::exactfield::Echelon::new(k, cat.hom_dim(x, y));
            e.extend(&self.bases[x * m + y]);
            e.contains(f)
        };
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    for (i, f) in self.bases[x * m + y].iter().enumerate() {
                        for (j, g) in self.bases[y * m + z].iter().enumerate() {
                            let gf = cat.compose(x, y, z, g, f);
                            c.case(inside(x, z, &gf), || format!("objects ({x},{y},{z}), invariants f{i}, g{j}"));
                        }
                    }
                }
            }
            c.case(inside(x, x, cat.identity(x)), || format!("id of object {x}"));
        }
        c
    }
}
