//! The JSON input document and its resolution into core structures.

use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer};

use hhcalc_core::exactfield::{parse_ratio, Field, FieldSpec, Matrix, SparseVec};
use hhcalc_core::hhcomplex::{QuotientMode, DEFAULT_SIZE_CAP};
use hhcalc_core::hopfcore::{cyclic_table, group_algebra, sweedler4, trivial_k, HopfData, StructureAlgebra};
use hhcalc_core::modact::{
    adjoint_regular, dual_numbers, exterior2, group_z2_on_dual_numbers, sweedler_on_dual_numbers,
    sweedler_on_exterior2, EquivariantBimodule, ModuleAlgebra,
};
use hhcalc_core::ydtwist::YDModule;

use crate::error::CliError;

pub const DEFAULT_MAX_DEGREE: usize = 4;

/// An integer or a `"num/den"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Str(String),
}

/// Deserializes `T` from an already-parsed value, naming the inner path of
/// any error.
fn inner<'de, D: Deserializer<'de>, T: DeserializeOwned>(v: serde_json::Value, what: &str) -> Result<T, D::Error> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        let msg = e.into_inner().to_string();
        if path == "." {
            D::Error::custom(format!("{what}: {msg}"))
        } else {
            D::Error::custom(format!("{what} at {path}: {msg}"))
        }
    })
}

/// Implements `Deserialize` for an enum whose string form names a builtin
/// and whose object form is an explicit block.
macro_rules! named_or_block {
    ($ty:ident, $named:ident, |$v:ident| $block:expr) => {
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let $v = serde_json::Value::deserialize(d)?;
                match $v {
                    serde_json::Value::String(s) => Ok($ty::$named(s)),
                    $v => $block,
                }
            }
        }
    };
}

/// A table of vectors indexed by `(i, j)`: nested dense arrays
/// `t[i][j][k]`, or `{"sparse": [[i, j, k, c], ...]}`.
#[derive(Clone, Debug)]
pub enum Table {
    Dense(Vec<Vec<Vec<Scalar>>>),
    Sparse(Vec<(usize, usize, usize, Scalar)>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SparseTable {
    sparse: Vec<(usize, usize, usize, Scalar)>,
}

impl<'de> Deserialize<'de> for Table {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        if v.is_object() {
            Ok(Table::Sparse(inner::<D, SparseTable>(v, "sparse table")?.sparse))
        } else {
            Ok(Table::Dense(inner::<D, _>(v, "dense table [i][j][k]")?))
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldEntry {
    Prime(u64),
    Name(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub names: Vec<String>,
    pub mult: Table,
    pub unit: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub enum AlgebraEntry {
    Builtin(String),
    Explicit(AlgebraBlock),
}

named_or_block!(AlgebraEntry, Builtin, |v| Ok(AlgebraEntry::Explicit(inner::<D, _>(v, "algebra block")?)));

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfBlock {
    pub algebra: AlgebraBlock,
    /// `comult[i][j][k]`: coefficient of `b_j ⊗ b_k` in `Δ(b_i)`.
    pub comult: Table,
    pub counit: Vec<Scalar>,
    /// `antipode[j]` is the image of `b_j`.
    #[serde(default)]
    pub antipode: Option<Vec<Vec<Scalar>>>,
    #[serde(default)]
    pub antipode_inv: Option<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug)]
pub enum BialgebraEntry {
    Builtin(String),
    Group(Vec<Vec<usize>>),
    Explicit(Box<HopfBlock>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupBlock {
    group_table: Vec<Vec<usize>>,
}

named_or_block!(BialgebraEntry, Builtin, |v| {
    if v.get("group_table").is_some() {
        Ok(BialgebraEntry::Group(inner::<D, GroupBlock>(v, "group block")?.group_table))
    } else {
        Ok(BialgebraEntry::Explicit(Box::new(inner::<D, _>(v, "bialgebra block")?)))
    }
});

#[derive(Clone, Debug)]
pub enum ActionEntry {
    Named(String),
    Table(Table),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionBlock {
    table: Table,
}

named_or_block!(ActionEntry, Named, |v| Ok(ActionEntry::Table(inner::<D, ActionBlock>(v, "action block")?.table)));

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleBlock {
    pub names: Vec<String>,
    pub left_a: Table,
    pub right_a: Table,
    pub left_b: Table,
}

#[derive(Clone, Debug)]
pub enum BimoduleEntry {
    Named(String),
    Trivial(Vec<Scalar>),
    Explicit(BimoduleBlock),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AugmentationBlock {
    augmentation: Vec<Scalar>,
}

named_or_block!(BimoduleEntry, Named, |v| {
    if v.get("augmentation").is_some() {
        Ok(BimoduleEntry::Trivial(inner::<D, AugmentationBlock>(v, "trivial bimodule")?.augmentation))
    } else {
        Ok(BimoduleEntry::Explicit(inner::<D, _>(v, "bimodule block")?))
    }
});

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdBlock {
    pub names: Vec<String>,
    pub action: Table,
    /// Per basis element, terms `[coeff, b, m]` of `m ↦ m₍₋₁₎ ⊗ m₍₀₎`.
    pub coaction: Vec<Vec<(Scalar, usize, usize)>>,
}

#[derive(Clone, Debug)]
pub enum YdEntry {
    Named(String),
    Explicit(YdBlock),
}

named_or_block!(YdEntry, Named, |v| Ok(YdEntry::Explicit(inner::<D, _>(v, "yd block")?)));

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryBlock {
    pub ranks: Vec<usize>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub max_degree: Option<usize>,
    pub size_cap: Option<usize>,
    pub mode: Option<String>,
}

/// The document as written, before any field is chosen.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub field: Option<FieldEntry>,
    pub bialgebra: BialgebraEntry,
    #[serde(default)]
    pub algebra: Option<AlgebraEntry>,
    #[serde(default)]
    pub action: Option<ActionEntry>,
    #[serde(default)]
    pub bimodule: Option<BimoduleEntry>,
    #[serde(default)]
    pub yd: Option<YdEntry>,
    #[serde(default)]
    pub category: Option<CategoryBlock>,
    #[serde(default)]
    pub options: Options,
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        CliError::Shape { path, message: e.into_inner().to_string() }
    })
}

/// `"rational"`, `"Q"`, a prime, or `"p:<prime>"`.
pub fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("rational") || s == "Q" {
        return Ok(FieldSpec::Rational);
    }
    let digits = s.strip_prefix("p:").or_else(|| s.strip_prefix("F_")).unwrap_or(s);
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::Invalid(format!("unknown field {s:?}")))?;
    field_of_prime(p)
}

fn field_of_prime(p: u64) -> Result<FieldSpec, CliError> {
    FieldSpec::prime(p).map_err(|e| CliError::Invalid(e.to_string()))
}

impl InputDocument {
    pub fn field_spec(&self) -> Result<FieldSpec, CliError> {
        match &self.field {
            None => Ok(FieldSpec::Rational),
            Some(FieldEntry::Prime(p)) => field_of_prime(*p),
            Some(FieldEntry::Name(s)) => parse_field(s),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.options.max_degree.unwrap_or(DEFAULT_MAX_DEGREE)
    }

    pub fn size_cap(&self) -> usize {
        self.options.size_cap.unwrap_or(DEFAULT_SIZE_CAP)
    }

    pub fn mode(&self) -> Result<QuotientMode, CliError> {
        match self.options.mode.as_deref() {
            None | Some("coinvariant") | Some("coinvariant_qch") => Ok(QuotientMode::CoinvariantQch),
            Some("qch") => Ok(QuotientMode::Qch),
            Some("plain") | Some("ch") => Ok(QuotientMode::Plain),
            Some(m) => Err(shape("options.mode", format!("unknown mode {m:?}"))),
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.category.as_ref().map(|c| c.ranks.clone()).unwrap_or_else(|| vec![1, 2])
    }
}

fn shape(path: &str, message: impl Into<String>) -> CliError {
    CliError::Shape { path: path.into(), message: message.into() }
}

fn scalar<K: Field>(k: &K, s: &Scalar, path: &str) -> Result<K::Elem, CliError> {
    let r = match s {
        Scalar::Int(n) => return Ok(k.from_i64(*n)),
        Scalar::Str(t) => parse_ratio(t),
    };
    r.and_then(|r| k.from_ratio(&r)).map_err(|e| shape(path, e.to_string()))
}

fn vector<K: Field>(k: &K, v: &[Scalar], dim: usize, path: &str) -> Result<SparseVec<K::Elem>, CliError> {
    if v.len() != dim {
        return Err(shape(path, format!("expected {dim} entries, got {}", v.len())));
    }
    let mut out = Vec::new();
    for (i, s) in v.iter().enumerate() {
        let x = scalar(k, s, &format!("{path}[{i}]"))?;
        if !k.is_zero(&x) {
            out.push((i, x));
        }
    }
    Ok(out)
}

/// Resolves a table of shape `n1 × n2 → k^dim`, flattened as `i * n2 + j`.
fn table<K: Field>(
    k: &K,
    t: &Table,
    n1: usize,
    n2: usize,
    dim: usize,
    path: &str,
) -> Result<Vec<SparseVec<K::Elem>>, CliError> {
    match t {
        Table::Dense(rows) => {
            if rows.len() != n1 {
                return Err(shape(path, format!("expected {n1} rows, got {}", rows.len())));
            }
            let mut out = Vec::with_capacity(n1 * n2);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n2 {
                    return Err(shape(&format!("{path}[{i}]"), format!("expected {n2} entries, got {}", row.len())));
                }
                for (j, v) in row.iter().enumerate() {
                    out.push(vector(k, v, dim, &format!("{path}[{i}][{j}]"))?);
                }
            }
            Ok(out)
        }
        Table::Sparse(sparse) => {
            let mut out: Vec<SparseVec<K::Elem>> = vec![Vec::new(); n1 * n2];
            for (e, (i, j, l, c)) in sparse.iter().enumerate() {
                let p = format!("{path}.sparse[{e}]");
                if *i >= n1 || *j >= n2 || *l >= dim {
                    return Err(shape(&p, format!("index out of range for shape {n1}x{n2}x{dim}")));
                }
                out[i * n2 + j].push((*l, scalar(k, c, &p)?));
            }
            Ok(out.into_iter().map(|v| hhcalc_core::exactfield::normalize(k, v)).collect())
        }
    }
}

fn core<T>(path: &str, r: hhcalc_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        hhcalc_core::Error::Shape { path: p, message } => shape(&format!("{path}.{p}"), message),
        hhcalc_core::Error::InvalidGroupTable(m) => shape(path, m),
        other => CliError::Core(other),
    })
}

fn algebra_block<K: Field>(k: &K, a: &AlgebraBlock, path: &str) -> Result<StructureAlgebra<K>, CliError> {
    let d = a.names.len();
    let mult = table(k, &a.mult, d, d, d, &format!("{path}.mult"))?;
    let unit = vector(k, &a.unit, d, &format!("{path}.unit"))?;
    core(path, StructureAlgebra::new(k, a.names.clone(), mult, unit))
}

fn matrix<K: Field>(k: &K, cols: &[Vec<Scalar>], d: usize, path: &str) -> Result<Matrix<K::Elem>, CliError> {
    if cols.len() != d {
        return Err(shape(path, format!("expected {d} columns, got {}", cols.len())));
    }
    let mut m = Matrix::zeros(k, d, d);
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in vector(k, col, d, &format!("{path}[{j}]"))? {
            m.set(i, j, x);
        }
    }
    Ok(m)
}

/// Which builtin a bialgebra entry names, for choosing builtin actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HopfKind {
    Trivial,
    Sweedler,
    Cyclic(usize),
    Other,
}

fn bialgebra<K: Field>(k: &K, b: &BialgebraEntry) -> Result<(HopfData<K>, HopfKind), CliError> {
    let named = |name: &str| -> Result<(HopfData<K>, HopfKind), CliError> {
        let path = "bialgebra";
        match name {
            "trivial" | "trivial_k" | "k" => Ok((trivial_k(k), HopfKind::Trivial)),
            "sweedler4" => Ok((sweedler4(k), HopfKind::Sweedler)),
            _ => {
                let n = name
                    .strip_prefix("group:Z/")
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| shape(path, format!("unknown builtin {name:?}")))?;
                Ok((core(path, group_algebra(k, &cyclic_table(n)))?, HopfKind::Cyclic(n)))
            }
        }
    };
    match b {
        BialgebraEntry::Builtin(name) => named(name),
        BialgebraEntry::Group(group_table) => {
            Ok((core("bialgebra.group_table", group_algebra(k, group_table))?, HopfKind::Other))
        }
        BialgebraEntry::Explicit(h) => {
            let alg = algebra_block(k, &h.algebra, "bialgebra.algebra")?;
            let d = alg.dim();
            let comult = table(k, &h.comult, d, d, d, "bialgebra.comult")?;
            let comult = comult
                .chunks(d)
                .map(|row| row.iter().enumerate().flat_map(|(j, v)| v.iter().map(move |(l, c)| (c.clone(), j, *l))).collect())
                .collect();
            let counit = (0..d)
                .map(|i| match h.counit.get(i) {
                    Some(s) => scalar(k, s, &format!("bialgebra.counit[{i}]")),
                    None => Err(shape("bialgebra.counit", format!("expected {d} entries"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if h.counit.len() != d {
                return Err(shape("bialgebra.counit", format!("expected {d} entries, got {}", h.counit.len())));
            }
            let s = h.antipode.as_ref().map(|m| matrix(k, m, d, "bialgebra.antipode")).transpose()?;
            let si = h.antipode_inv.as_ref().map(|m| matrix(k, m, d, "bialgebra.antipode_inv")).transpose()?;
            Ok((core("bialgebra", HopfData::new(alg, comult, counit, s, si))?, HopfKind::Other))
        }
    }
}

/// The resolved inputs over a chosen field.
pub struct Resolved<K: Field> {
    pub ma: ModuleAlgebra<K>,
    pub v: EquivariantBimodule<K>,
    pub yd: Option<YDModule<K>>,
}

pub fn resolve<K: Field>(k: &K, doc: &InputDocument) -> Result<Resolved<K>, CliError> {
    let (hopf, kind) = bialgebra(k, &doc.bialgebra)?;
    let action = doc.action.clone().unwrap_or(ActionEntry::Named("builtin".into()));
    let ma = if matches!(&action, ActionEntry::Named(n) if n == "adjoint") {
        if doc.algebra.is_some() {
            return Err(shape("algebra", "the adjoint action acts on the bialgebra itself; omit the algebra"));
        }
        core("action", adjoint_regular(&hopf))?
    } else {
        let (a, a_name) = match &doc.algebra {
            None => return Err(shape("algebra", "missing algebra")),
            Some(AlgebraEntry::Builtin(name)) => {
                let a = match name.as_str() {
                    "dual_numbers" => dual_numbers(k),
                    "exterior2" => exterior2(k),
                    "trivial" | "k" => trivial_k(k).alg().clone(),
                    _ => return Err(shape("algebra", format!("unknown builtin {name:?}"))),
                };
                (a, Some(name.as_str()))
            }
            Some(AlgebraEntry::Explicit(block)) => (algebra_block(k, block, "algebra")?, None),
        };
        match &action {
            ActionEntry::Named(n) if n == "trivial" => ModuleAlgebra::trivial_action(hopf, a),
            ActionEntry::Named(n) if n == "builtin" => match (kind, a_name) {
                (HopfKind::Trivial, _) => ModuleAlgebra::trivial_action(hopf, a),
                (HopfKind::Sweedler, Some("dual_numbers")) => core("action", sweedler_on_dual_numbers(k, hopf))?,
                (HopfKind::Sweedler, Some("exterior2")) => core("action", sweedler_on_exterior2(k, hopf))?,
                (HopfKind::Cyclic(2), Some("dual_numbers")) => core("action", group_z2_on_dual_numbers(k, hopf))?,
                _ => return Err(shape("action", "no builtin action for this bialgebra and algebra")),
            },
            ActionEntry::Named(n) => return Err(shape("action", format!("unknown action {n:?}"))),
            ActionEntry::Table(t) => {
                let (db, da) = (hopf.dim(), a.dim());
                let t = table(k, t, db, da, da, "action.table")?;
                core("action", ModuleAlgebra::new(hopf, a, t))?
            }
        }
    };
    let v = match &doc.bimodule {
        None => EquivariantBimodule::regular(&ma),
        Some(BimoduleEntry::Named(n)) if n == "regular" => EquivariantBimodule::regular(&ma),
        Some(BimoduleEntry::Named(n)) => return Err(shape("bimodule", format!("unknown bimodule {n:?}"))),
        Some(BimoduleEntry::Trivial(augmentation)) => {
            let aug = vector(k, augmentation, ma.alg().dim(), "bimodule.augmentation")?;
            let mut dense = vec![k.zero(); ma.alg().dim()];
            for (i, x) in aug {
                dense[i] = x;
            }
            core("bimodule", EquivariantBimodule::trivial(&ma, &dense))?
        }
        Some(BimoduleEntry::Explicit(b)) => {
            let (da, db, dv) = (ma.alg().dim(), ma.hopf().dim(), b.names.len());
            let la = table(k, &b.left_a, da, dv, dv, "bimodule.left_a")?;
            let ra = table(k, &b.right_a, dv, da, dv, "bimodule.right_a")?;
            let lb = table(k, &b.left_b, db, dv, dv, "bimodule.left_b")?;
            core("bimodule", EquivariantBimodule::new(&ma, b.names.clone(), la, ra, lb))?
        }
    };
    let yd = match &doc.yd {
        None => None,
        Some(YdEntry::Named(n)) if n == "trivial" => Some(YDModule::trivial(ma.hopf())),
        Some(YdEntry::Named(n)) if n == "adjoint" => Some(core("yd", YDModule::adjoint_regular(ma.hopf()))?),
        Some(YdEntry::Named(n)) => return Err(shape("yd", format!("unknown module {n:?}"))),
        Some(YdEntry::Explicit(y)) => {
            let (db, dm) = (ma.hopf().dim(), y.names.len());
            let action = table(k, &y.action, db, dm, dm, "yd.action")?;
            let mut coaction = Vec::with_capacity(y.coaction.len());
            for (m, terms) in y.coaction.iter().enumerate() {
                let mut row = Vec::with_capacity(terms.len());
                for (t, (c, b, m2)) in terms.iter().enumerate() {
                    row.push((scalar(k, c, &format!("yd.coaction[{m}][{t}]"))?, *b, *m2));
                }
                coaction.push(row);
            }
            Some(core("yd", YDModule::new(ma.hopf(), y.names.clone(), action, coaction))?)
        }
    };
    Ok(Resolved { ma, v, yd })
}
