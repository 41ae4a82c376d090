//! The verification-suite driver behind the CLI and the C ABI: parses a
//! suite configuration, runs the selected checks, and renders a report.
//!
//! Reports are byte-identical across runs with the same configuration and
//! seed: they echo the configuration, never embed wall-clock data, and every
//! collection is emitted in canonical order. Timing belongs on stderr, not
//! in the report.

use crate::burnside::{artin_solve, burnside_green_functor, order_torsion_over_burnside, table_of_marks, zero_mark_at_top};
use crate::checks::{
    choice_independence, regular_identity, run_axiom, run_axiom_suite, run_frobenius_suite,
    CheckRecord, Outcome, SampleCfg,
};
use crate::classify::{classify_subgroup, subgroup_family, Family, FamilyTag};
use crate::error::{Error, Result};
use crate::fgab::{CoefficientMode, FgAbelianGroup};
use crate::group::{load_group, Group};
use crate::intmat::IntMat;
use crate::mackey::{
    swan_vanishing_check, unit_in_induction_image, verify_induction_iso, GreenModule,
    InductionVerdict, MackeyFunctor,
};
use crate::sampling::Sampler;
use crate::twisted::{compose, verify_inverse_pair, TGMorphism, TwistedCtx};
use crate::zalgebra::{load_ring, RMatrix};
use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const TOOL_NAME: &str = "indukt";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteCommand {
    Group,
    Families,
    Axioms,
    Frobenius,
    Dress,
    Artin,
    Twisted,
}

impl SuiteCommand {
    pub fn label(&self) -> &'static str {
        match self {
            SuiteCommand::Group => "group",
            SuiteCommand::Families => "families",
            SuiteCommand::Axioms => "axioms",
            SuiteCommand::Frobenius => "frobenius",
            SuiteCommand::Dress => "dress",
            SuiteCommand::Artin => "artin",
            SuiteCommand::Twisted => "twisted",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Text,
    Structured,
}

fn default_ring() -> String {
    "Z".into()
}
fn default_seed() -> u64 {
    7
}
fn default_samples() -> usize {
    4
}
fn default_max_rank() -> usize {
    2
}
fn default_coeff() -> String {
    "Z".into()
}

/// One run of the workbench: what to check and with which inputs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub command: SuiteCommand,
    /// Builtin name or path of a group spec file.
    pub group: String,
    #[serde(default = "default_ring")]
    pub ring: String,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_max_rank")]
    pub max_rank: usize,
    /// Restrict axiom tuples to these canonical subgroup ids.
    #[serde(default)]
    pub subgroup_filter: Option<Vec<usize>>,
    /// Family tag: H | Hp:<p> | E | Ep:<p> | FC.
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default = "default_coeff")]
    pub coeff: String,
    /// Run a single axiom instead of all seven.
    #[serde(default)]
    pub axiom: Option<u8>,
    /// Mackey fixture: fixed-point | burnside | zmod | path to a fixture file.
    #[serde(default)]
    pub fixture: Option<String>,
    /// Also run the vanishing check (dress subcommand).
    #[serde(default)]
    pub swan: bool,
    /// Morphism literal fixtures for the twisted subcommand.
    #[serde(default)]
    pub morphisms: Option<String>,
}

impl SuiteConfig {
    pub fn new(command: SuiteCommand, group: &str) -> SuiteConfig {
        SuiteConfig {
            command,
            group: group.to_string(),
            ring: default_ring(),
            seed: default_seed(),
            samples: default_samples(),
            max_rank: default_max_rank(),
            subgroup_filter: None,
            family: None,
            coeff: default_coeff(),
            axiom: None,
            fixture: None,
            swan: false,
            morphisms: None,
        }
    }

    pub fn from_config_file(path: &str) -> Result<SuiteConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InputError(format!("cannot read config {path:?}: {e}")))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::InputError(format!("malformed config {path:?}: {e}")))
    }

    fn sample_cfg(&self) -> SampleCfg {
        SampleCfg {
            seed: self.seed,
            samples: self.samples,
            max_rank: self.max_rank,
        }
    }
}

/// The rendered result of a run, stable under re-runs with the same config.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: SuiteConfig,
    pub info: Vec<(String, String)>,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub hypothesis_failures: usize,
}

impl Report {
    fn new(config: &SuiteConfig) -> Report {
        Report {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            command: config.command.label().into(),
            config: config.clone(),
            info: Vec::new(),
            checks: Vec::new(),
            passed: 0,
            failed: 0,
            hypothesis_failures: 0,
        }
    }

    fn add_info(&mut self, key: &str, value: impl Into<String>) {
        self.info.push((key.to_string(), value.into()));
    }

    fn add_checks(&mut self, checks: Vec<CheckRecord>) {
        for c in checks {
            match &c.outcome {
                Outcome::Pass { .. } => self.passed += 1,
                Outcome::Fail { .. } => self.failed += 1,
                Outcome::HypothesisFailure { .. } => self.hypothesis_failures += 1,
            }
            self.checks.push(c);
        }
    }

    /// 0 = all pass, 1 = at least one check failed.
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 && self.hypothesis_failures == 0 {
            0
        } else {
            1
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.tool, self.version));
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "group: {}  ring: {}  seed: {}  samples: {}  coeff: {}\n",
            self.config.group, self.config.ring, self.config.seed, self.config.samples,
            self.config.coeff
        ));
        for (k, v) in &self.info {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass { samples } => {
                    out.push_str(&format!("pass  {} ({} samples)\n", c.name, samples));
                }
                Outcome::Fail { description } => {
                    out.push_str(&format!("FAIL  {}: {}\n", c.name, description));
                }
                Outcome::HypothesisFailure { description } => {
                    out.push_str(&format!("hypothesis-failure  {}: {}\n", c.name, description));
                }
            }
        }
        out.push_str(&format!(
            "summary: {} checks, {} passed, {} failed, {} hypothesis failures\n",
            self.checks.len(),
            self.passed,
            self.failed,
            self.hypothesis_failures
        ));
        out
    }

    pub fn render_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.render_text(),
            ReportFormat::Structured => self.render_structured(),
        }
    }
}

/// On-disk Mackey-functor fixture, keyed by canonical subgroup ids.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MackeyFixture {
    pub group: String,
    pub values: Vec<FixtureValue>,
    pub res: Vec<FixtureMap>,
    pub ind: Vec<FixtureMap>,
    pub conj: Vec<FixtureConj>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureValue {
    pub sub: usize,
    pub gens: usize,
    /// Relation column vectors, each of length `gens`.
    pub rels: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureMap {
    pub sub: usize,
    pub sup: usize,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureConj {
    pub f: usize,
    pub sub: usize,
    pub matrix: Vec<Vec<i64>>,
}

fn mat_from_rows(rows: &[Vec<i64>], expect_rows: usize, expect_cols: usize) -> Result<IntMat> {
    if rows.len() != expect_rows || rows.iter().any(|r| r.len() != expect_cols) {
        return Err(Error::InputError(format!(
            "fixture matrix has wrong shape (want {expect_rows}x{expect_cols})"
        )));
    }
    Ok(IntMat::from_i64_rows(rows))
}

impl MackeyFixture {
    pub fn build(&self, g: &Group) -> Result<MackeyFunctor> {
        let subs = g.subgroups();
        let mut values: Vec<Option<FgAbelianGroup>> = vec![None; subs.len()];
        for v in &self.values {
            if v.sub >= subs.len() {
                return Err(Error::InputError(format!(
                    "fixture value references subgroup id {} out of range",
                    v.sub
                )));
            }
            let rels = IntMat::from_fn(v.gens, v.rels.len(), |r, c| {
                BigInt::from(*v.rels[c].get(r).unwrap_or(&0))
            });
            values[v.sub] = Some(FgAbelianGroup::new(v.gens, rels));
        }
        let values: Vec<FgAbelianGroup> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::InputError(format!("missing value for subgroup {i}"))))
            .collect::<Result<_>>()?;
        let mut res_mats = BTreeMap::new();
        for m in &self.res {
            res_mats.insert(
                (m.sub, m.sup),
                mat_from_rows(&m.matrix, values[m.sub].gens(), values[m.sup].gens())?,
            );
        }
        let mut ind_mats = BTreeMap::new();
        for m in &self.ind {
            ind_mats.insert(
                (m.sub, m.sup),
                mat_from_rows(&m.matrix, values[m.sup].gens(), values[m.sub].gens())?,
            );
        }
        let mut conj_mats = BTreeMap::new();
        for m in &self.conj {
            let target = g
                .subgroup_id(&subs[m.sub].conjugate(m.f))
                .expect("conjugate subgroup");
            conj_mats.insert(
                (m.f, m.sub),
                mat_from_rows(&m.matrix, values[target].gens(), values[m.sub].gens())?,
            );
        }
        MackeyFunctor::new(g.clone(), values, res_mats, ind_mats, conj_mats)
    }

    /// Serializes a functor into the fixture format (used to produce files
    /// that can then be edited and re-run).
    pub fn from_functor(group_name: &str, m: &MackeyFunctor) -> MackeyFixture {
        let g = m.group();
        let to_rows = |mat: &IntMat| -> Vec<Vec<i64>> {
            (0..mat.rows())
                .map(|r| {
                    (0..mat.cols())
                        .map(|c| {
                            let s = mat.get(r, c).to_string();
                            s.parse().expect("fixture entries fit i64")
                        })
                        .collect()
                })
                .collect()
        };
        let values = (0..g.subgroups().len())
            .map(|sid| {
                let v = m.value(sid);
                FixtureValue {
                    sub: sid,
                    gens: v.gens(),
                    rels: (0..v.rels().cols())
                        .map(|c| {
                            v.rels()
                                .col_vec(c)
                                .iter()
                                .map(|x| x.to_string().parse().expect("fits i64"))
                                .collect()
                        })
                        .collect(),
                }
            })
            .collect();
        let mut res = Vec::new();
        let mut ind = Vec::new();
        for (j_id, j) in g.subgroups().iter().enumerate() {
            for (i_id, i) in g.subgroups().iter().enumerate() {
                if !i.is_subgroup_of(j) {
                    continue;
                }
                res.push(FixtureMap {
                    sub: i_id,
                    sup: j_id,
                    matrix: to_rows(&m.res_hom(i_id, j_id).matrix),
                });
                ind.push(FixtureMap {
                    sub: i_id,
                    sup: j_id,
                    matrix: to_rows(&m.ind_hom(i_id, j_id).matrix),
                });
            }
        }
        let mut conj = Vec::new();
        for f in g.elements() {
            for i_id in 0..g.subgroups().len() {
                conj.push(FixtureConj {
                    f,
                    sub: i_id,
                    matrix: to_rows(&m.conj_hom(f, i_id).matrix),
                });
            }
        }
        MackeyFixture {
            group: group_name.to_string(),
            values,
            res,
            ind,
            conj,
        }
    }
}

/// Morphism-literal fixtures for the twisted subcommand: each component is a
/// generator word plus a matrix of coefficient vectors.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismFixture {
    pub dom: usize,
    pub cod: usize,
    pub components: Vec<MorphismComponent>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismComponent {
    pub word: Vec<usize>,
    pub matrix: Vec<Vec<Vec<i64>>>,
}

impl MorphismFixture {
    pub fn build(&self, ctx: &TwistedCtx) -> Result<TGMorphism> {
        let d = ctx.ring().rank();
        let mut components = BTreeMap::new();
        for comp in &self.components {
            let g = ctx.group().word(&comp.word)?;
            if comp.matrix.len() != self.cod
                || comp.matrix.iter().any(|row| row.len() != self.dom)
                || comp
                    .matrix
                    .iter()
                    .flatten()
                    .any(|entry| entry.len() != d)
            {
                return Err(Error::InputError(
                    "morphism fixture entry has wrong shape".into(),
                ));
            }
            let m = RMatrix::from_fn(self.cod, self.dom, |r, c| {
                comp.matrix[r][c].iter().map(|&x| BigInt::from(x)).collect()
            });
            let entry = components.entry(g).or_insert_with(|| {
                RMatrix::zeros(self.cod, self.dom, ctx.ring())
            });
            *entry = entry.add(&m);
        }
        TGMorphism::from_components(ctx, self.dom, self.cod, components)
    }
}

fn load_family(g: &Group, spec: &Option<String>) -> Result<Family> {
    match spec {
        None => Ok(Family {
            tag: FamilyTag::Custom("all".into()),
            members: g.subgroups().to_vec(),
        }),
        Some(s) => subgroup_family(g, FamilyTag::parse(s)?),
    }
}

fn outcome_of_verdict(v: &InductionVerdict) -> Outcome {
    match v {
        InductionVerdict::Pass { .. } => Outcome::Pass { samples: 1 },
        InductionVerdict::HypothesisFailure { reason, .. } => Outcome::HypothesisFailure {
            description: reason.clone(),
        },
        InductionVerdict::Counterexample { reason } => Outcome::Fail {
            description: reason.clone(),
        },
    }
}

/// Runs one suite; input errors surface as `Err` (exit code 2 at the CLI).
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new(config);
    let g = load_group(&config.group)?;
    report.add_info("order", g.order().to_string());
    report.add_info("degree", g.degree().to_string());
    match config.command {
        SuiteCommand::Group => {
            report.add_info("subgroups", g.subgroups().len().to_string());
            report.add_info(
                "conjugacy-classes",
                g.conjugacy_classes().len().to_string(),
            );
            for (id, h) in g.subgroups().iter().enumerate() {
                let c = classify_subgroup(&g, h)?;
                let tags = {
                    let mut t = Vec::new();
                    if c.is_cyclic {
                        t.push("cyclic".to_string());
                    }
                    if let Some(p) = c.p_group_prime {
                        t.push(format!("{p}-group"));
                    }
                    for p in &c.hyperelementary_primes {
                        if c.elementary_primes.contains(p) {
                            t.push(format!("{p}-elementary"));
                        } else {
                            t.push(format!("{p}-hyperelementary"));
                        }
                    }
                    t.join(", ")
                };
                report.add_info(
                    &format!("subgroup #{id}"),
                    format!("order {}: {}", h.order(), tags),
                );
            }
            report.add_checks(vec![CheckRecord {
                name: "group-closure".into(),
                outcome: Outcome::Pass {
                    samples: g.order() * g.order(),
                },
            }]);
        }
        SuiteCommand::Families => {
            let fam = load_family(&g, &config.family)?;
            report.add_info("family", fam.tag.label());
            report.add_info("members", fam.members.len().to_string());
            for h in &fam.members {
                let id = g.subgroup_id(h).unwrap();
                report.add_info(&format!("member #{id}"), format!("order {}", h.order()));
            }
            let closed = fam.validate_closed(&g);
            report.add_checks(vec![CheckRecord {
                name: "family-closure".into(),
                outcome: match closed {
                    Ok(()) => Outcome::Pass {
                        samples: fam.members.len(),
                    },
                    Err(e) => Outcome::Fail {
                        description: e.to_string(),
                    },
                },
            }]);
        }
        SuiteCommand::Axioms => {
            let (_, action) = load_ring(&config.ring, &g)?;
            let cfg = config.sample_cfg();
            let filter = config.subgroup_filter.as_deref();
            let checks = match config.axiom {
                Some(k) => run_axiom(&action, k, &cfg, filter)?,
                None => run_axiom_suite(&action, &cfg, filter)?,
            };
            report.add_checks(checks);
        }
        SuiteCommand::Frobenius => {
            let (_, action) = load_ring(&config.ring, &g)?;
            let cfg = config.sample_cfg();
            let filter = config.subgroup_filter.as_deref();
            report.add_checks(run_frobenius_suite(&action, &cfg, filter)?);
            // representative-choice independence over all nested pairs
            let mut xi_checks = Vec::new();
            for j in g.subgroups() {
                for i in g.subgroups().iter().filter(|i| i.is_subgroup_of(j)) {
                    if let Some(ids) = filter {
                        let i_id = g.subgroup_id(i).unwrap();
                        let j_id = g.subgroup_id(j).unwrap();
                        if !ids.contains(&i_id) || !ids.contains(&j_id) {
                            continue;
                        }
                    }
                    xi_checks.push(CheckRecord {
                        name: format!(
                            "choice-independence[I=#{},J=#{}]",
                            g.subgroup_id(i).unwrap(),
                            g.subgroup_id(j).unwrap()
                        ),
                        outcome: choice_independence(&action, i, j, 3, &cfg)?,
                    });
                }
            }
            report.add_checks(xi_checks);
            report.add_checks(vec![CheckRecord {
                name: "regular-representation-identity".into(),
                outcome: regular_identity(&action, &cfg)?,
            }]);
        }
        SuiteCommand::Dress => {
            let coeff = CoefficientMode::parse(&config.coeff)?;
            let fam = load_family(&g, &config.family)?;
            report.add_info("family", fam.tag.label());
            report.add_info("coeff", coeff.label());
            let fixture = config.fixture.as_deref().unwrap_or("fixed-point");
            report.add_info("fixture", fixture);
            let module: Option<GreenModule> = match fixture {
                "fixed-point" => Some(GreenModule::fixed_point(&g)),
                "burnside" => Some(GreenModule::over_self(burnside_green_functor(&g)?)),
                "zmod" => Some(order_torsion_over_burnside(&g)?),
                path => {
                    // explicit Mackey fixture file: validate the axioms only
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::InputError(format!("cannot read fixture {path:?}: {e}"))
                    })?;
                    let fixture: MackeyFixture = serde_json::from_str(&text).map_err(|e| {
                        Error::InputError(format!("malformed fixture {path:?}: {e}"))
                    })?;
                    let m = fixture.build(&g)?;
                    report.add_checks(m.validate());
                    None
                }
            };
            if let Some(module) = module {
                report.add_checks(module.green.mackey.validate());
                report.add_checks(module.green.validate());
                report.add_checks(module.validate());
                let (_, cert) = unit_in_induction_image(&module.green, &fam, coeff);
                if let Some(cert) = &cert {
                    report.add_info("unit-denominator", cert.denominator.to_string());
                    let mut indices: Vec<usize> = fam
                        .members
                        .iter()
                        .filter(|h| h.order() < g.order())
                        .map(|h| g.order() / h.order())
                        .collect();
                    indices.sort_unstable();
                    indices.dedup();
                    let gcd = indices
                        .iter()
                        .fold(0usize, |acc, &x| num::integer::gcd(acc, x));
                    report.add_info(
                        "proper-member-indices",
                        format!("{indices:?} (gcd {gcd})"),
                    );
                    for (h, a, c) in &cert.coefficients {
                        report.add_info(
                            &format!("unit-coefficient[#{h},gen{a}]"),
                            c.to_string(),
                        );
                    }
                }
                let verdict = verify_induction_iso(&module, &fam, coeff)?;
                if let InductionVerdict::Pass {
                    colim_description,
                    lim_description,
                    ..
                } = &verdict
                {
                    report.add_info("colim", colim_description);
                    report.add_info("lim", lim_description);
                }
                report.add_checks(vec![CheckRecord {
                    name: "induction-isomorphism".into(),
                    outcome: outcome_of_verdict(&verdict),
                }]);
                if config.swan {
                    let full_id = g.subgroup_id(&g.full_subgroup()).unwrap();
                    let triv_id = g.subgroup_id(&g.trivial_subgroup()).unwrap();
                    let regular_class = module
                        .green
                        .mackey
                        .ind_hom(triv_id, full_id)
                        .apply(module.green.unit_at(triv_id));
                    let outcome = match swan_vanishing_check(&module, &regular_class) {
                        Ok(o) => o,
                        Err(Error::PreconditionViolated(msg)) => Outcome::HypothesisFailure {
                            description: format!("precondition: {msg}"),
                        },
                        Err(e) => return Err(e),
                    };
                    report.add_checks(vec![CheckRecord {
                        name: "vanishing-at-regular-class".into(),
                        outcome,
                    }]);
                }
            }
        }
        SuiteCommand::Artin => {
            let t = table_of_marks(&g);
            for (row, class) in t.classes.iter().enumerate() {
                let rep = &g.subgroups()[class[0]];
                let marks: Vec<String> = (0..t.class_count())
                    .map(|c| t.marks.get(row, c).to_string())
                    .collect();
                report.add_info(
                    &format!("marks[class {row}, order {}]", rep.order()),
                    marks.join(" "),
                );
            }
            report.add_checks(vec![CheckRecord {
                name: "marks-triangular".into(),
                outcome: match t.verify_triangular() {
                    Ok(()) => Outcome::Pass {
                        samples: t.class_count() * t.class_count(),
                    },
                    Err(e) => Outcome::Fail {
                        description: e.to_string(),
                    },
                },
            }]);
            report.add_checks(vec![CheckRecord {
                name: "zero-mark-at-top".into(),
                outcome: if zero_mark_at_top(&g, &t) {
                    Outcome::Pass {
                        samples: t.class_count(),
                    }
                } else {
                    Outcome::Fail {
                        description: "a properly induced element has nonzero top mark".into(),
                    }
                },
            }]);
            let cert = artin_solve(&g)?;
            report.add_info("artin-n", cert.n.to_string());
            for (sid, c) in &cert.coefficients {
                report.add_info(
                    &format!("artin-coefficient[#{sid}]"),
                    format!("{c} (cyclic subgroup of order {})", g.subgroups()[*sid].order()),
                );
            }
            report.add_checks(vec![CheckRecord {
                name: "artin-bound".into(),
                outcome: Outcome::Pass { samples: 1 },
            }]);
        }
        SuiteCommand::Twisted => {
            let (ring, action) = load_ring(&config.ring, &g)?;
            let ctx = TwistedCtx::full(action.clone());
            let mut s = Sampler::new(config.seed);
            let mut assoc_ok = true;
            let mut id_ok = true;
            let mut support_ok = true;
            for _ in 0..config.samples.max(1) {
                let a = s.rank(config.max_rank);
                let b = s.nonzero_rank(config.max_rank.max(1));
                let c = s.nonzero_rank(config.max_rank.max(1));
                let d = s.rank(config.max_rank);
                let phi = s.morphism(&ctx, a, b);
                let psi = s.morphism(&ctx, b, c);
                let chi = s.morphism(&ctx, c, d);
                let lhs = compose(&ctx, &chi, &compose(&ctx, &psi, &phi)?)?;
                let rhs = compose(&ctx, &compose(&ctx, &chi, &psi)?, &phi)?;
                if lhs != rhs {
                    assoc_ok = false;
                }
                let id_dom = TGMorphism::identity(&ctx, a);
                let id_cod = TGMorphism::identity(&ctx, b);
                if compose(&ctx, &phi, &id_dom)? != phi || compose(&ctx, &id_cod, &phi)? != phi {
                    id_ok = false;
                }
                let comp = compose(&ctx, &psi, &phi)?;
                for gx in comp.support_elems() {
                    let reachable = psi.support_elems().iter().any(|&h| {
                        phi.support_elems()
                            .iter()
                            .any(|&k| action.group().mul(h, k) == gx)
                    });
                    if !reachable {
                        support_ok = false;
                    }
                }
            }
            let outcomes = [
                ("compose-associative", assoc_ok),
                ("compose-identity", id_ok),
                ("compose-support", support_ok),
            ];
            report.add_checks(
                outcomes
                    .into_iter()
                    .map(|(name, ok)| CheckRecord {
                        name: name.into(),
                        outcome: if ok {
                            Outcome::Pass {
                                samples: config.samples,
                            }
                        } else {
                            Outcome::Fail {
                                description: "sampled composition law failed".into(),
                            }
                        },
                    })
                    .collect(),
            );
            if let Some(path) = &config.morphisms {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InputError(format!("cannot read morphism fixtures {path:?}: {e}"))
                })?;
                let fixtures: Vec<MorphismFixture> = serde_json::from_str(&text)
                    .map_err(|e| Error::InputError(format!("malformed fixtures {path:?}: {e}")))?;
                for (idx, f) in fixtures.iter().enumerate() {
                    let phi = f.build(&ctx)?;
                    let id_dom = TGMorphism::identity(&ctx, phi.dom());
                    let ok = compose(&ctx, &phi, &id_dom)? == phi;
                    let square_invertible = if phi.dom() == phi.cod() {
                        verify_inverse_pair(&ctx, &phi, &phi)?
                    } else {
                        false
                    };
                    report.add_info(
                        &format!("fixture[{idx}]"),
                        format!(
                            "dom {} cod {} support {:?} self-inverse {}",
                            phi.dom(),
                            phi.cod(),
                            phi.support_elems(),
                            square_invertible
                        ),
                    );
                    report.add_checks(vec![CheckRecord {
                        name: format!("fixture-identity[{idx}]"),
                        outcome: if ok {
                            Outcome::Pass { samples: 1 }
                        } else {
                            Outcome::Fail {
                                description: "identity law fails on fixture".into(),
                            }
                        },
                    }]);
                }
            }
            let _ = ring;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_suite_runs_and_passes_on_s3() {
        let mut config = SuiteConfig::new(SuiteCommand::Axioms, "S3");
        config.ring = "Z[i]".into();
        config.samples = 2;
        let report = run_suite(&config).unwrap();
        assert_eq!(report.exit_code(), 0, "{}", report.render_text());
    }

    #[test]
    fn reports_are_byte_identical_for_same_seed() {
        let mut config = SuiteConfig::new(SuiteCommand::Frobenius, "C2");
        config.ring = "Z[i]".into();
        config.samples = 2;
        let a = run_suite(&config).unwrap().render_structured();
        let b = run_suite(&config).unwrap().render_structured();
        assert_eq!(a, b);
        let t1 = run_suite(&config).unwrap().render_text();
        let t2 = run_suite(&config).unwrap().render_text();
        assert_eq!(t1, t2);
    }

    #[test]
    fn dress_positive_and_negative() {
        let mut config = SuiteConfig::new(SuiteCommand::Dress, "A4");
        config.family = Some("H".into());
        config.fixture = Some("fixed-point".into());
        let report = run_suite(&config).unwrap();
        assert_eq!(report.exit_code(), 0, "{}", report.render_text());
        assert!(report
            .info
            .iter()
            .any(|(k, v)| k == "proper-member-indices" && v.contains("gcd 1")));

        let mut config = SuiteConfig::new(SuiteCommand::Dress, "A4");
        config.family = Some("H".into());
        config.fixture = Some("burnside".into());
        let report = run_suite(&config).unwrap();
        // proper-subgroup family fails the unit hypothesis for the Burnside module
        assert_eq!(report.exit_code(), 1);
        assert_eq!(report.hypothesis_failures, 1);
    }

    #[test]
    fn artin_report_s3() {
        let config = SuiteConfig::new(SuiteCommand::Artin, "S3");
        let report = run_suite(&config).unwrap();
        assert_eq!(report.exit_code(), 0);
        assert!(report.info.iter().any(|(k, _)| k == "artin-n"));
    }

    #[test]
    fn malformed_group_file_is_input_error() {
        let dir = std::env::temp_dir().join("indukt-test-bad-group");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.json");
        std::fs::write(&path, "{\"degree\": 3}").unwrap();
        let config = SuiteConfig::new(SuiteCommand::Group, path.to_str().unwrap());
        match run_suite(&config) {
            Err(Error::InputError(_)) => {}
            other => panic!("expected input error, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_fixture_reports_counterexample() {
        let g = Group::builtin("S3").unwrap();
        let m = MackeyFunctor::fixed_point(&g);
        let mut fixture = MackeyFixture::from_functor("S3", &m);
        // break one induction entry
        for entry in &mut fixture.ind {
            if entry.sub == 0 && entry.sup == g.subgroups().len() - 1 {
                entry.matrix = vec![vec![5]];
            }
        }
        let dir = std::env::temp_dir().join("indukt-test-fixture");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("broken.json");
        std::fs::write(&path, serde_json::to_string(&fixture).unwrap()).unwrap();
        let mut config = SuiteConfig::new(SuiteCommand::Dress, "S3");
        config.fixture = Some(path.to_str().unwrap().to_string());
        let report = run_suite(&config).unwrap();
        assert_eq!(report.exit_code(), 1);
        assert!(report
            .checks
            .iter()
            .any(|c| c.name.starts_with("mackey7") && c.outcome.failed()));
    }

    #[test]
    fn twisted_subcommand_passes() {
        let mut config = SuiteConfig::new(SuiteCommand::Twisted, "S3");
        config.ring = "Z[C3]".into();
        config.samples = 6;
        let report = run_suite(&config).unwrap();
        assert_eq!(report.exit_code(), 0, "{}", report.render_text());
    }

    #[test]
    fn config_file_roundtrip() {
        let mut config = SuiteConfig::new(SuiteCommand::Axioms, "S3");
        config.axiom = Some(4);
        let dir = std::env::temp_dir().join("indukt-test-config");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.json");
        std::fs::write(&path, serde_json::to_string(&config).unwrap()).unwrap();
        let loaded = SuiteConfig::from_config_file(path.to_str().unwrap()).unwrap();
        assert_eq!(loaded.axiom, Some(4));
        let report = run_suite(&loaded).unwrap();
        assert_eq!(report.exit_code(), 0);
    }
}
