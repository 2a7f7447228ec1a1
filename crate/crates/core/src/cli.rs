//! Command-line front end. Every invocation prints one JSON document and
//! exits with 0 when all checks pass, 1 when a law fails and 2 on usage or
//! capability errors.
//!
//! Grammar: `bimon <verb> <subverb> [--category KEY] [--max-size N]
//! [--max-n N] [--q N] [--n N] [--i N] [--samples N] [--seed N]
//! [--matrix JSON] [--chain JSON] [--simplex PATH] [--json PATH]
//! [--sequential]`.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bar::{
    block_sum, build_from_chain, chain_simplex, check_bar_suite, check_classical_involution, check_pi0_naturality,
    check_tau_simplicial, compare_classical_involution, degeneracy, face, project_pi0, tau, validate_simplex,
    BarSimplex, Simplex,
};
use crate::braided::{check_braided_laws, check_eq_e, check_yang_baxter, check_yang_baxter_exhaustive, induced_anti_involution};
use crate::category::{Bimonoidal, BimonoidalExt};
use crate::check::{CheckConfig, CheckReport, LawResult};
use crate::error::{Error, Result};
use crate::exec::{configure_threads_from_env, Exec};
use crate::instances::functors::{conjugation_action, functor_f, inversion_action, projection_pi};
use crate::instances::{make_instance, Instance, BUNDLED};
use crate::involution::{
    check_anti_involution, check_antiinv_morphism, check_closure, check_functor, check_group_action,
    check_mu_self_inverse, fixed_category,
};
use crate::laws::check_bimonoidal_laws;
use crate::matrices::{check_matrix_lemmas, check_pentagon, gl_diagnostic, gl_member, pi0_matrix, sample_gl, Matrix};
use crate::mutate::run_mutations;
use crate::sample::{SampleSpec, Sampler};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verb {
    Check,
    Bar,
    Gl,
    Pi0,
    Export,
}

#[derive(Debug, Parser)]
#[command(name = "bimon", version, about = "Law checker for strict bimonoidal categories with anti-involution")]
pub struct Command {
    pub verb: Verb,
    pub subverb: String,
    #[arg(long, default_value = "finite-sets")]
    pub category: String,
    #[arg(long = "max-size", default_value_t = 3)]
    pub max_size: usize,
    #[arg(long = "max-n", default_value_t = 2)]
    pub max_n: usize,
    /// Simplex degree; must match the length of `--chain` when both are given.
    #[arg(long)]
    pub q: Option<usize>,
    /// Matrix size for sampled matrices; defaults to `--max-n`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Face or degeneracy index.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// A matrix of objects as JSON rows, e.g. `[[1,1],[0,1]]`.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Comma-separated matrices, e.g. `[[2]],[[3]]`.
    #[arg(long)]
    pub chain: Option<String>,
    /// A simplex JSON file, as printed by `bar build`.
    #[arg(long)]
    pub simplex: Option<PathBuf>,
    /// Also write the report to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Evaluate samples on one thread.
    #[arg(long)]
    pub sequential: bool,
}

impl Command {
    fn spec(&self) -> SampleSpec {
        SampleSpec::new(self.max_size, self.max_n, self.samples, self.seed)
    }

    fn config(&self) -> CheckConfig {
        let exec = if self.sequential { Exec::Sequential } else { Exec::default() };
        CheckConfig::new(self.spec()).with_exec(exec)
    }
}

/// What a run produced: the exit code and the text for standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Parses `argv` (without the program name) and runs it.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let command_line = argv.join(" ");
    let cmd = match Command::try_parse_from(std::iter::once("bimon".to_string()).chain(argv.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string() };
            }
            let doc = json!({
                "tool_version": TOOL_VERSION,
                "command": command_line,
                "error": { "kind": "usage", "message": e.to_string() },
            });
            return Outcome { code: 2, stdout: pretty(&doc) };
        }
    };
    configure_threads_from_env();
    let (code, doc) = match execute(&cmd) {
        Ok((code, body)) => {
            let mut doc = json!({
                "tool_version": TOOL_VERSION,
                "command": command_line,
                "instance": cmd.category,
            });
            merge(&mut doc, body);
            (code, doc)
        }
        Err(e) => (
            2,
            json!({
                "tool_version": TOOL_VERSION,
                "command": command_line,
                "instance": cmd.category,
                "error": { "kind": e.kind(), "message": e.to_string() },
            }),
        ),
    };
    let stdout = pretty(&doc);
    if let Some(path) = &cmd.json {
        if let Err(e) = std::fs::write(path, format!("{}\n", stdout)) {
            let doc = json!({
                "tool_version": TOOL_VERSION,
                "command": command_line,
                "error": { "kind": "io", "message": format!("cannot write {}: {}", path.display(), e) },
            });
            return Outcome { code: 2, stdout: pretty(&doc) };
        }
    }
    Outcome { code, stdout }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn merge(doc: &mut Value, body: Value) {
    if let (Value::Object(d), Value::Object(b)) = (doc, body) {
        d.extend(b);
    }
}

fn execute(cmd: &Command) -> Result<(i32, Value)> {
    cmd.spec().validate()?;
    match cmd.verb {
        Verb::Check => run_check(cmd),
        Verb::Bar => {
            let inst = make_instance(&cmd.category)?;
            crate::with_instance!(&inst, c => run_bar(c, cmd))
        }
        Verb::Gl => {
            let inst = make_instance(&cmd.category)?;
            crate::with_instance!(&inst, c => run_gl(c, cmd))
        }
        Verb::Pi0 => {
            let inst = make_instance(&cmd.category)?;
            crate::with_instance!(&inst, c => run_pi0(c, cmd))
        }
        Verb::Export => run_export(cmd),
    }
}

fn suites_body(cmd: &Command, reports: Vec<CheckReport>) -> (i32, Value) {
    let passed = reports.iter().all(|r| r.passed());
    let body = json!({
        "spec": cmd.spec(),
        "passed": passed,
        "suites": reports,
    });
    (if passed { 0 } else { 1 }, body)
}

const CHECK_SUBVERBS: &str = "bimonoidal, anti-involution, mu-self-inverse, matrices, pentagon, braided, \
yang-baxter, induced, bar, tau-simplicial, pi0, classical, functor, action, mutations, all";

fn run_check(cmd: &Command) -> Result<(i32, Value)> {
    let cfg = cmd.config();
    let sub = cmd.subverb.as_str();
    if sub == "mutations" {
        let laws = run_mutations(&cfg)
            .into_iter()
            .map(|o| {
                let anchor = match &o.law {
                    Some(l) => format!("rejected by {} via {}", o.suite, l),
                    None => format!("must be rejected by {}", o.suite),
                };
                let witness = o.witness.into_iter().collect();
                let mut law = LawResult::from_witnesses(&o.mutation, &anchor, 1, witness);
                law.passed = o.detected;
                law.failures = usize::from(!o.detected);
                law
            })
            .collect();
        let report = CheckReport { suite: "mutations".into(), instance: "catalogue".into(), laws };
        return Ok(suites_body(cmd, vec![report]));
    }
    let inst = make_instance(&cmd.category)?;
    let reports = match (sub, &inst) {
        ("functor", Instance::Monomial(v)) => {
            let k = v.k;
            vec![
                check_functor(&functor_f(k)?, &cfg),
                check_antiinv_morphism(&functor_f(k)?, &cfg),
                check_antiinv_morphism(&projection_pi(k)?, &cfg),
            ]
        }
        ("functor", _) => return Err(Error::capability("functor checks run on monomial:k")),
        ("action", Instance::Monomial(v)) => {
            let act = conjugation_action();
            let fixed = fixed_category(act.clone(), v.clone());
            vec![check_group_action(&act, v, &cfg), check_closure(&fixed, &cfg), check_anti_involution(&fixed, &cfg)]
        }
        ("action", Instance::Discrete(d)) => {
            let act = inversion_action(d)?;
            let fixed = fixed_category(act.clone(), d.clone());
            vec![check_group_action(&act, d, &cfg), check_closure(&fixed, &cfg)]
        }
        ("action", _) => return Err(Error::capability("action checks run on monomial:k and discrete:Z[G]")),
        _ => crate::with_instance!(&inst, c => check_generic(c, sub, &cfg)?),
    };
    Ok(suites_body(cmd, reports))
}

fn require_anti_involution<C: Bimonoidal>(cat: &C) -> Result<()> {
    if cat.has_anti_involution() {
        Ok(())
    } else {
        Err(Error::capability(format!("{} has no anti-involution", cat.name())))
    }
}

fn require_braiding<C: Bimonoidal>(cat: &C) -> Result<()> {
    if cat.has_braiding() {
        Ok(())
    } else {
        Err(Error::capability(format!("{} has no braiding", cat.name())))
    }
}

fn check_generic<C: Bimonoidal + Clone + 'static>(cat: &C, sub: &str, cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    Ok(match sub {
        "bimonoidal" => vec![check_bimonoidal_laws(cat, cfg)],
        "anti-involution" => {
            require_anti_involution(cat)?;
            vec![check_anti_involution(cat, cfg)]
        }
        "mu-self-inverse" => {
            require_anti_involution(cat)?;
            vec![check_mu_self_inverse(cat, cfg)]
        }
        "matrices" => {
            require_anti_involution(cat)?;
            vec![check_matrix_lemmas(cat, cfg), check_pentagon(cat, cfg)]
        }
        "pentagon" => vec![check_pentagon(cat, cfg)],
        "braided" => {
            require_braiding(cat)?;
            vec![check_braided_laws(cat, cfg), check_eq_e(cat, cfg), check_yang_baxter(cat, cfg)]
        }
        "yang-baxter" => {
            require_braiding(cat)?;
            vec![check_yang_baxter_exhaustive(cat, 2, cfg), check_yang_baxter(cat, cfg)]
        }
        "induced" => {
            require_braiding(cat)?;
            match induced_anti_involution(cat.clone(), cfg) {
                Ok(view) => vec![check_anti_involution(&view, cfg)],
                Err(report) => vec![*report],
            }
        }
        "bar" => {
            require_anti_involution(cat)?;
            vec![check_bar_suite(cat, cfg)]
        }
        "tau-simplicial" => {
            require_anti_involution(cat)?;
            vec![check_tau_simplicial(cat, cfg)]
        }
        "pi0" => {
            require_anti_involution(cat)?;
            cat.component_rig_req()?;
            vec![check_pi0_naturality(cat, cfg)]
        }
        "classical" => {
            require_anti_involution(cat)?;
            if !cat.is_discrete() {
                return Err(Error::capability(format!("{} is not a discrete rig category", cat.name())));
            }
            vec![check_classical_involution(cat, cfg)]
        }
        "all" => {
            let mut out = vec![check_bimonoidal_laws(cat, cfg), check_pentagon(cat, cfg)];
            if cat.has_anti_involution() {
                out.push(check_anti_involution(cat, cfg));
                out.push(check_matrix_lemmas(cat, cfg));
                out.push(check_bar_suite(cat, cfg));
                if cat.component_rig().is_some() {
                    out.push(check_pi0_naturality(cat, cfg));
                }
                if cat.is_discrete() {
                    out.push(check_classical_involution(cat, cfg));
                }
            }
            if cat.has_braiding() {
                out.push(check_braided_laws(cat, cfg));
                out.push(check_eq_e(cat, cfg));
                out.push(check_yang_baxter(cat, cfg));
            }
            out
        }
        other => return Err(Error::Invalid(format!("unknown check `{}`; expected one of: {}", other, CHECK_SUBVERBS))),
    })
}

/// Reads `[[…],[…]]` as a square matrix of instance objects.
pub fn parse_matrix<C: Bimonoidal>(cat: &C, v: &Value) -> Result<Matrix<C::Obj>> {
    let rows = v.as_array().ok_or_else(|| Error::Parse(format!("{} is not a list of rows", v)))?;
    let m = Matrix(
        rows.iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Parse(format!("{} is not a row", r)))?
                    .iter()
                    .map(|x| cat.parse_obj(x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?,
    );
    m.check_square()?;
    Ok(m)
}

fn parse_json(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{} `{}`: {}", what, text, e)))
}

/// Reads a comma-separated list of matrices.
pub fn parse_chain<C: Bimonoidal>(cat: &C, text: &str) -> Result<Vec<Matrix<C::Obj>>> {
    let v = parse_json(&format!("[{}]", text), "chain")?;
    v.as_array().expect("bracketed").iter().map(|m| parse_matrix(cat, m)).collect()
}

/// Reads a simplex file written by `bar build`.
pub fn parse_simplex<C: Bimonoidal>(cat: &C, v: &Value) -> Result<Simplex<C>> {
    let raw: BarSimplex<Value, Value> = crate::category::from_json(v)?;
    let s = BarSimplex {
        q: raw.q,
        n: raw.n,
        objects: raw
            .objects
            .into_iter()
            .map(|c| Ok(crate::bar::ObjCell { i: c.i, j: c.j, matrix: c.matrix.try_map(|x| cat.parse_obj(x))? }))
            .collect::<Result<_>>()?,
        phi: raw
            .phi
            .into_iter()
            .map(|c| Ok(crate::bar::PhiCell { i: c.i, j: c.j, k: c.k, matrix: c.matrix.try_map(|x| cat.parse_mor(x))? }))
            .collect::<Result<_>>()?,
    };
    s.check_shape()?;
    Ok(s)
}

fn matrix_arg<C: Bimonoidal>(cat: &C, cmd: &Command) -> Result<Matrix<C::Obj>> {
    let text = cmd.matrix.as_deref().ok_or_else(|| Error::Invalid("--matrix is required".into()))?;
    parse_matrix(cat, &parse_json(text, "matrix")?)
}

fn chain_arg<C: Bimonoidal>(cat: &C, cmd: &Command) -> Result<Vec<Matrix<C::Obj>>> {
    let text = cmd.chain.as_deref().ok_or_else(|| Error::Invalid("--chain is required".into()))?;
    let chain = parse_chain(cat, text)?;
    if let Some(q) = cmd.q {
        if q != chain.len() {
            return Err(Error::Invalid(format!("--q {} but the chain has {} matrices", q, chain.len())));
        }
    }
    if let Some(n) = cmd.n {
        if chain.iter().any(|m| m.n() != n) {
            return Err(Error::Size(format!("--n {} does not match the chain", n)));
        }
    }
    Ok(chain)
}

/// The simplex named by `--simplex`, or the chain simplex of `--chain`.
fn simplex_arg<C: Bimonoidal>(cat: &C, cmd: &Command, check_gl: bool) -> Result<Simplex<C>> {
    if let Some(path) = &cmd.simplex {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {}", path.display(), e)))?;
        let v = parse_json(&text, "simplex")?;
        // accept a bare simplex or a `bar build` report
        return parse_simplex(cat, v.get("simplex").unwrap_or(&v));
    }
    let chain = chain_arg(cat, cmd)?;
    if check_gl {
        build_from_chain(cat, &chain)
    } else {
        chain_simplex(cat, &chain)
    }
}

fn index_arg(cmd: &Command) -> Result<usize> {
    cmd.i.ok_or_else(|| Error::Invalid("--i is required".into()))
}

fn gl_flags<C: Bimonoidal>(cat: &C, s: &Simplex<C>) -> Result<Vec<bool>> {
    s.chain()?.iter().map(|m| gl_member(cat, m)).collect()
}

fn run_bar<C: Bimonoidal>(cat: &C, cmd: &Command) -> Result<(i32, Value)> {
    let value = |x: &dyn erased::Ser| x.to_value();
    match cmd.subverb.as_str() {
        "build" => {
            let s = simplex_arg(cat, cmd, true)?;
            Ok((0, json!({ "simplex": value(&s) })))
        }
        "tau" => {
            let s = simplex_arg(cat, cmd, false)?;
            let t = tau(cat, &s)?;
            Ok((0, json!({ "diagonal": value(&t.chain()?), "gl": gl_flags(cat, &s).ok(), "simplex": value(&t) })))
        }
        "validate" => {
            let s = simplex_arg(cat, cmd, false)?;
            let report = validate_simplex(cat, &s);
            Ok(suites_body(cmd, vec![report]))
        }
        "face" => {
            let s = simplex_arg(cat, cmd, false)?;
            let f = face(cat, &s, index_arg(cmd)?)?;
            Ok((0, json!({ "simplex": value(&f) })))
        }
        "degeneracy" => {
            let s = simplex_arg(cat, cmd, false)?;
            let d = degeneracy(cat, &s, index_arg(cmd)?)?;
            Ok((0, json!({ "simplex": value(&d) })))
        }
        "sum" => {
            let s = simplex_arg(cat, cmd, false)?;
            let d = block_sum(cat, &s, &s)?;
            Ok((0, json!({ "simplex": value(&d) })))
        }
        "classical" => {
            let report = compare_classical_involution(cat, &chain_arg(cat, cmd)?)?;
            Ok(suites_body(cmd, vec![report]))
        }
        "pi0" => {
            let s = simplex_arg(cat, cmd, false)?;
            let (target, p) = project_pi0(cat, &s)?;
            Ok((0, json!({ "target": target.name(), "simplex": value(&p) })))
        }
        other => Err(Error::Invalid(format!(
            "unknown bar command `{}`; expected build, tau, validate, face, degeneracy, sum, classical or pi0",
            other
        ))),
    }
}

fn run_gl<C: Bimonoidal>(cat: &C, cmd: &Command) -> Result<(i32, Value)> {
    match cmd.subverb.as_str() {
        "member" => {
            let m = matrix_arg(cat, cmd)?;
            let member = gl_member(cat, &m)?;
            let mut body = json!({ "member": member });
            merge(&mut body, gl_diagnostic(cat, &m)?);
            Ok((0, body))
        }
        "sample" => {
            let n = cmd.n.unwrap_or(cmd.max_n);
            let mut s = Sampler::new(cat, &cmd.spec(), "cli.gl.sample");
            let m = sample_gl(cat, &mut s, n)?;
            Ok((0, json!({ "matrix": erased::Ser::to_value(&m) })))
        }
        other => Err(Error::Invalid(format!("unknown gl command `{}`; expected member or sample", other))),
    }
}

fn run_pi0<C: Bimonoidal>(cat: &C, cmd: &Command) -> Result<(i32, Value)> {
    match cmd.subverb.as_str() {
        "classes" => {
            let rig = cat.component_rig_req()?;
            let rows = cat
                .objects_upto(cmd.max_size)
                .iter()
                .map(|a| Ok(json!({ "object": erased::Ser::to_value(a), "label": erased::Ser::to_value(&cat.component_req(a)?) })))
                .collect::<Result<Vec<_>>>()?;
            Ok((0, json!({ "rig": rig.kind_name(), "objects": rows })))
        }
        "matrix" => {
            let m = matrix_arg(cat, cmd)?;
            Ok((0, json!({ "pi0": erased::Ser::to_value(&pi0_matrix(cat, &m)?) })))
        }
        other => Err(Error::Invalid(format!("unknown pi0 command `{}`; expected classes or matrix", other))),
    }
}

fn run_export(cmd: &Command) -> Result<(i32, Value)> {
    match cmd.subverb.as_str() {
        "instances" => Ok((0, json!({ "bundled": BUNDLED }))),
        "instance" => {
            let inst = make_instance(&cmd.category)?;
            crate::with_instance!(&inst, c => Ok((0, describe(c, cmd.max_size))))
        }
        "simplex" => {
            let inst = make_instance(&cmd.category)?;
            crate::with_instance!(&inst, c => {
                let s = simplex_arg(c, cmd, true)?;
                Ok((0, json!({ "simplex": erased::Ser::to_value(&s) })))
            })
        }
        other => Err(Error::Invalid(format!("unknown export command `{}`; expected instances, instance or simplex", other))),
    }
}

fn describe<C: Bimonoidal>(cat: &C, size: usize) -> Value {
    json!({
        "name": cat.name(),
        "anti_involution": cat.has_anti_involution(),
        "braiding": cat.has_braiding(),
        "bipermutative": cat.is_bipermutative(),
        "discrete": cat.is_discrete(),
        "pi0_rig": cat.component_rig().map(|r| r.kind_name()),
        "objects": erased::Ser::to_value(&cat.objects_upto(size)),
    })
}

mod erased {
    use serde::Serialize;
    use serde_json::Value;

    /// `serde_json::to_value` behind a trait object, so closures can take
    /// values of any serializable type.
    pub trait Ser {
        fn to_value(&self) -> Value;
    }

    impl<T: Serialize> Ser for T {
        fn to_value(&self) -> Value {
            serde_json::to_value(self).unwrap_or_else(|e| Value::String(format!("<unserializable: {}>", e)))
        }
    }
}
