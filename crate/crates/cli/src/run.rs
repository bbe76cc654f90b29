//! Command dispatch over a resolved document.

use serde::Serialize;

use hhcalc_core::exactfield::Field;
use hhcalc_core::hhcomplex::{
    build_ch, ch_action, cochain_complex, compare_with_ordinary, dgm_oracle, hh01_closed_forms, main_iso_oracle,
    quotient_complex, tor_ext_crosscheck,
};
use hhcalc_core::lincat::{
    build_module_category, cofinality_oracle, free_generation_oracle, validate_bcategory, validate_bifunctor,
};
use hhcalc_core::modact::crossed_product;
use hhcalc_core::report::{BettiTable, OracleReport, ValidationReport};
use hhcalc_core::ydtwist::{twisted_complex, validate_yd, YDModule};

use crate::doc::{resolve, InputDocument};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    MainIso,
    TorExt,
    Cofinal,
    FreeGen,
    DgmHomotopy,
}

impl OracleKind {
    pub fn label(self) -> &'static str {
        match self {
            OracleKind::MainIso => "main-iso",
            OracleKind::TorExt => "tor-ext",
            OracleKind::Cofinal => "cofinal",
            OracleKind::FreeGen => "free-gen",
            OracleKind::DgmHomotopy => "dgm-homotopy",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Homology,
    Cohomology,
    CrossedProduct,
    Oracle(OracleKind),
    Twist,
    CompareOrdinary,
}

impl Command {
    pub fn label(self) -> String {
        match self {
            Command::Validate => "validate".into(),
            Command::Homology => "homology".into(),
            Command::Cohomology => "cohomology".into(),
            Command::CrossedProduct => "crossed-product".into(),
            Command::Oracle(o) => format!("oracle {}", o.label()),
            Command::Twist => "twist".into(),
            Command::CompareOrdinary => "compare --against ordinary".into(),
        }
    }
}

/// An algebra block in the input schema, with scalars as strings.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraOut {
    pub names: Vec<String>,
    pub mult: SparseOut,
    pub unit: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SparseOut {
    pub sparse: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub max_degree: usize,
    pub passed: bool,
    pub validation: Vec<ValidationReport>,
    pub tables: Vec<BettiTable>,
    pub oracles: Vec<OracleReport>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraOut>,
}

impl Report {
    fn new(cmd: Command, field: String, max_degree: usize) -> Self {
        Report {
            command: cmd.label(),
            field,
            max_degree,
            passed: true,
            validation: Vec::new(),
            tables: Vec::new(),
            oracles: Vec::new(),
            notes: Vec::new(),
            algebra: None,
        }
    }

    fn validation(&mut self, r: ValidationReport) {
        self.passed &= r.passed();
        self.validation.push(r);
    }

    fn oracle(&mut self, r: OracleReport) {
        self.passed &= r.passed;
        self.oracles.push(r);
    }

    /// Every Betti table in the report, oracle tables included.
    pub fn all_tables(&self) -> impl Iterator<Item = &BettiTable> {
        self.tables.iter().chain(self.oracles.iter().flat_map(|o| o.tables.iter()))
    }
}

pub fn run<K: Field>(k: &K, cmd: Command, doc: &InputDocument) -> Result<Report, CliError> {
    let res = resolve(k, doc)?;
    let (ma, v) = (&res.ma, &res.v);
    let n = doc.max_degree();
    let cap = doc.size_cap();
    let mode = doc.mode()?;
    let mut report = Report::new(cmd, k.spec().label(), n);
    match cmd {
        Command::Validate => {
            let mut alg = ma.alg().validate();
            alg.subject = "algebra".into();
            report.validation(alg);
            let mut hopf = ma.hopf().validate();
            hopf.subject = "bialgebra".into();
            report.validation(hopf);
            let mut mod_alg = ma.validate();
            mod_alg.subject = "module algebra".into();
            report.validation(mod_alg);
            let mut bimod = v.validate(ma);
            bimod.subject = "bimodule".into();
            report.validation(bimod);
            if let Some(m) = &res.yd {
                report.validation(validate_yd(ma.hopf(), m)?);
            }
            if doc.category.is_some() {
                let mc = build_module_category(ma, &doc.ranks())?;
                report.validation(validate_bcategory(&mc.bcat));
                report.validation(validate_bifunctor(&mc.bcat, &mc.hom));
            }
        }
        Command::Homology => {
            let h = quotient_complex(ma, v, n, mode, cap)?;
            report.tables.push(h.quotient.homology_dims(k, n)?);
            report.notes.push(format!("quotient mode: {}", mode.label()));
        }
        Command::Cohomology => {
            let cc = cochain_complex(ma, v, n + 1, cap)?;
            report.tables.push(cc.cohomology_dims(k, n)?);
            let (h0, h1) = hh01_closed_forms(ma, v);
            report.notes.push(format!("closed forms: dim HH^0 = {h0}, dim HH^1 = {h1}"));
        }
        Command::CrossedProduct => {
            let e = crossed_product(ma);
            let a = e.alg();
            let mut alg = a.validate();
            alg.subject = "crossed product".into();
            report.validation(alg);
            let d = a.dim();
            let mut sparse = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    sparse.extend(a.mul_basis(i, j).iter().map(|(l, c)| (i, j, *l, k.format(c))));
                }
            }
            let mut unit = vec![k.format(&k.zero()); d];
            for (i, c) in a.unit() {
                unit[*i] = k.format(c);
            }
            report.algebra = Some(AlgebraOut { names: a.names().to_vec(), mult: SparseOut { sparse }, unit });
        }
        Command::Oracle(kind) => {
            let r = match kind {
                OracleKind::MainIso => main_iso_oracle(ma, v, n, cap)?,
                OracleKind::TorExt => tor_ext_crosscheck(ma, v, n, cap)?,
                OracleKind::DgmHomotopy => {
                    let cx = build_ch(ma, v, n + 1, cap)?;
                    dgm_oracle(k, ma.hopf(), &cx, &ch_action(ma, v, n + 1))
                }
                OracleKind::Cofinal | OracleKind::FreeGen => {
                    let ranks = doc.ranks();
                    let mc = build_module_category(ma, &ranks)?;
                    if kind == OracleKind::Cofinal {
                        let retr = mc.retraction_to_largest();
                        let top = (0..ranks.len()).max_by_key(|&x| (ranks[x], std::cmp::Reverse(x))).unwrap();
                        cofinality_oracle(&mc.bcat, &mc.hom, &[top], &retr, n, mode, cap)?
                    } else {
                        let dec = mc.decomposition_into_rank_one().ok_or_else(|| CliError::Shape {
                            path: "category.ranks".into(),
                            message: "free generation needs an object of rank one".into(),
                        })?;
                        let one = mc.object_of_rank(1).unwrap();
                        free_generation_oracle(&mc.bcat, &mc.hom, &[one], &dec, n, mode, cap)?
                    }
                }
            };
            report.oracle(r);
        }
        Command::Twist => {
            let m = match &res.yd {
                Some(m) => m.clone(),
                None => {
                    report.notes.push("no yd block: twisting by the trivial module".into());
                    YDModule::trivial(ma.hopf())
                }
            };
            report.validation(validate_yd(ma.hopf(), &m)?);
            report.tables.push(twisted_complex(ma, &m, n, cap)?.table);
        }
        Command::CompareOrdinary => report.oracle(compare_with_ordinary(ma, v, n, cap)?),
    }
    Ok(report)
}
