//! Command-line front end. [`run`] does all the work and returns the exit code
//! so it can be driven from tests.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input,
//! 3 a work bound was hit and nothing failed.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::codes::{HammingCode, PrimalMethod, DEFAULT_ENUMERATION_GUARD};
use crate::cyclo::CyclotomicInt;
use crate::error::{Error, Result};
use crate::expsums::{CharacterContext, DEFAULT_WORK_BOUND};
use crate::gf::{gcd, FieldTower};
use crate::report::IdentityReport;
use crate::verify::{applicable_suites, run_suites, Suite, Tally, VerifyConfig};
use crate::weightdist::{
    corollary_poly, hamming_length, macwilliams_transform, weights_binary_recurrence, weights_recursive_with,
    RecursionOptions, WeightDistribution, DEFAULT_MAX_N,
};

/// The desk-scale parameter matrix run by `--seed-set`.
pub const SEED_SET: [(u64, u32); 8] = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (4, 2), (5, 3), (8, 2)];

#[derive(Parser, Debug, Clone)]
#[command(name = "hamweight", version, about = "Exact weight distributions of q-ary Hamming codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Largest number of summands any single exponential sum may enumerate.
    #[arg(long, global = true, env = "HAMWEIGHT_WORK_BOUND", default_value_t = DEFAULT_WORK_BOUND)]
    pub work_bound: u128,

    /// Largest number of codewords any single enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_GUARD)]
    pub enumeration_guard: u128,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Weight distribution of H(m, q) by one or more methods.
    Weights(WeightsArgs),
    /// Run identity-verification suites.
    Verify(VerifyArgs),
    /// Tabulate Kloosterman sums over F_q.
    Sums(SumsArgs),
    /// Describe the code: parity-check matrix, cyclic presentation, dual.
    CodeInfo(CodeParams),
}

#[derive(Args, Debug, Clone)]
pub struct CodeParams {
    #[arg(long, required_unless_present = "seed_set")]
    pub q: Option<u64>,

    #[arg(long, required_unless_present = "seed_set")]
    pub m: Option<u32>,

    /// Run every pair in the desk-scale test matrix.
    #[arg(long, conflicts_with_all = ["q", "m"])]
    pub seed_set: bool,
}

impl CodeParams {
    fn pairs(&self) -> Vec<(u64, u32)> {
        match (self.q, self.m) {
            (Some(q), Some(m)) if !self.seed_set => vec![(q, m)],
            _ => SEED_SET.to_vec(),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct WeightsArgs {
    #[command(flatten)]
    pub params: CodeParams,

    #[arg(long, value_enum, default_value_t = Method::Recursion)]
    pub method: Method,

    /// Largest code length the recursion accepts.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: u64,

    /// Run the recursion even when gcd(m, q-1) != 1. Output is marked unverified.
    #[arg(long)]
    pub unsafe_ignore_gcd: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: CodeParams,

    /// Suite to run, or `all`. Repeatable.
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    pub suite: Vec<SuiteChoice>,

    /// Highest moment order for the moment and Pless suites.
    #[arg(long, default_value_t = 6)]
    pub hmax: u32,

    /// Values of s for the Kloosterman totals. Repeatable.
    #[arg(long)]
    pub s: Vec<u32>,

    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: u64,
}

#[derive(Args, Debug, Clone)]
pub struct SumsArgs {
    #[arg(long)]
    pub q: u64,

    /// Extension degree of the tower the subfield is embedded in.
    #[arg(long, default_value_t = 2)]
    pub m: u32,

    /// Number of variables in K_s.
    #[arg(long, default_value_t = 1)]
    pub s: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursion,
    Binary,
    Macwilliams,
    Direct,
    Corollary,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Recursion => "recursion",
            Method::Binary => "binary",
            Method::Macwilliams => "macwilliams",
            Method::Direct => "direct",
            Method::Corollary => "corollary",
            Method::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteChoice {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> std::result::Result<SuiteChoice, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(SuiteChoice::All);
    }
    Suite::from_name(s).map(SuiteChoice::One).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}`; expected all, {}", names.join(", "))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Ok,
    Refused,
    Failed,
    Invalid,
}

impl Status {
    fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Invalid => 2,
            Status::Refused => 3,
        }
    }

    fn of_error(e: &Error) -> Self {
        if e.is_refusal() {
            Status::Refused
        } else if e.is_invalid_input() {
            Status::Invalid
        } else {
            Status::Failed
        }
    }
}

/// One command run on one `(q, m)`.
struct Outcome {
    doc: Value,
    text: String,
    /// CSV header and rows.
    table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    status: Status,
}

impl Outcome {
    fn error(command: &str, params: Value, e: &Error) -> Self {
        Outcome {
            doc: json!({
                "command": command,
                "params": params,
                "error": { "kind": e.kind(), "message": e.to_string() },
                "pass": false,
            }),
            text: format!("error [{}]: {e}\n", e.kind()),
            table: None,
            status: Status::of_error(e),
        }
    }
}

fn params_json(q: u64, m: u32) -> Value {
    match hamming_length(q, m) {
        Ok(n) => json!({ "q": q, "m": m, "n": n, "k": n - m as u64 }),
        Err(_) => json!({ "q": q, "m": m }),
    }
}

fn field_json(t: &FieldTower) -> Value {
    json!({
        "p": t.p(),
        "r": t.r(),
        "modulus": t.modulus(),
        "gamma": t.coeffs(t.gamma()),
    })
}

fn counts_json(d: &WeightDistribution) -> Vec<String> {
    d.counts().iter().map(|c| c.to_string()).collect()
}

fn join_counts(d: &WeightDistribution) -> String {
    counts_json(d).join(" ")
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcomes: Vec<Outcome> = match &cli.command {
        Command::Weights(a) => a.params.pairs().into_iter().map(|(q, m)| weights(cli, a, q, m)).collect(),
        Command::Verify(a) => a.params.pairs().into_iter().map(|(q, m)| verify(cli, a, q, m)).collect(),
        Command::Sums(a) => vec![sums(cli, a)],
        Command::CodeInfo(a) => a.pairs().into_iter().map(|(q, m)| code_info(cli, q, m)).collect(),
    };
    let status = outcomes.iter().map(|o| o.status).max().unwrap_or(Status::Ok);

    let mut file;
    let sink: &mut dyn Write = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = f;
                &mut file
            }
            Err(e) => {
                let _ = writeln!(err, "{}", json!({ "error": { "kind": "io", "message": e.to_string() } }));
                return Status::Invalid.code();
            }
        },
        None => out,
    };
    if let Err(e) = render(cli.format, &outcomes, sink, err) {
        let _ = writeln!(err, "{}", json!({ "error": { "kind": "io", "message": e.to_string() } }));
        return Status::Invalid.code();
    }
    status.code()
}

fn render(format: Format, outcomes: &[Outcome], sink: &mut dyn Write, err: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let doc = match outcomes {
                [one] => one.doc.clone(),
                many => Value::Array(many.iter().map(|o| o.doc.clone()).collect()),
            };
            serde_json::to_writer_pretty(&mut *sink, &doc)?;
            writeln!(sink)?;
        }
        Format::Text => {
            for o in outcomes {
                if o.doc.get("error").is_some() {
                    err.write_all(o.text.as_bytes())?;
                } else {
                    sink.write_all(o.text.as_bytes())?;
                }
            }
        }
        Format::Csv => {
            for o in outcomes {
                match &o.table {
                    Some((header, rows)) if o.doc.get("error").is_none() => {
                        let mut w = csv::Writer::from_writer(&mut *sink);
                        w.write_record(header)?;
                        for row in rows {
                            w.write_record(row)?;
                        }
                        w.flush()?;
                    }
                    _ => err.write_all(o.text.as_bytes())?,
                }
            }
        }
    }
    sink.flush()
}

enum MethodResult {
    Full(WeightDistribution),
    /// `C_3 … C_top` from the closed forms.
    Partial(Vec<BigInt>),
}

fn weights(cli: &Cli, a: &WeightsArgs, q: u64, m: u32) -> Outcome {
    let params = params_json(q, m);
    if let Err(e) = hamming_length(q, m) {
        return Outcome::error("weights", params, &e);
    }
    let g = gcd(m as u64, q - 1);
    let unverified = g != 1 && a.unsafe_ignore_gcd;
    let opts = RecursionOptions { max_n: a.max_n, ignore_gcd: a.unsafe_ignore_gcd };
    let guard = cli.enumeration_guard;
    let code = HammingCode::new(q, m);

    let methods: Vec<Method> = match a.method {
        Method::All => {
            let mut v = vec![Method::Recursion];
            if q == 2 {
                v.push(Method::Binary);
            }
            v.extend([Method::Macwilliams, Method::Direct, Method::Corollary]);
            v
        }
        Method::Binary if q != 2 => {
            let e = Error::InvalidParameter(format!("the binary recurrence needs q = 2, got q = {q}"));
            return Outcome::error("weights", params, &e);
        }
        one => vec![one],
    };
    let explicit = methods.len() == 1;

    let compute = |method: Method| -> Result<MethodResult> {
        let code = || code.as_ref().map_err(Clone::clone);
        Ok(match method {
            Method::Recursion => MethodResult::Full(weights_recursive_with(q, m, &opts)?),
            Method::Binary => MethodResult::Full(weights_binary_recurrence(m)?),
            Method::Macwilliams => {
                let code = code()?;
                let dual = if code.is_cyclic() {
                    code.enumerate_dual_distribution(guard)?
                } else {
                    code.parity_rowspace_distribution(guard)?
                };
                MethodResult::Full(macwilliams_transform(&dual)?)
            }
            Method::Direct => MethodResult::Full(code()?.enumerate_primal_distribution(PrimalMethod::Direct, guard)?),
            Method::Corollary => {
                if g != 1 && !a.unsafe_ignore_gcd {
                    return Err(Error::GcdPrecondition { q, m, gcd: g });
                }
                let n = hamming_length(q, m)? as u32;
                MethodResult::Partial((3..=n.min(10)).map(|h| corollary_poly(h, q, m)).collect::<Result<_>>()?)
            }
            Method::All => unreachable!(),
        })
    };

    let mut computed: Vec<(Method, std::result::Result<MethodResult, Error>)> = Vec::new();
    for method in methods {
        let r = compute(method);
        if let Err(e) = &r {
            if explicit || !e.is_refusal() {
                return Outcome::error("weights", params, e);
            }
        }
        computed.push((method, r));
    }

    let reference: Option<&WeightDistribution> = computed.iter().find_map(|(_, r)| match r {
        Ok(MethodResult::Full(d)) => Some(d),
        _ => None,
    });
    let mut results = Vec::new();
    let mut text = format!("H({m}, {q}): ");
    if let Some(d) = reference {
        text += &format!("[{}, {}] over F_{q}\n", d.n(), d.k());
    } else {
        text += "\n";
    }
    let mut pass = true;
    let mut refused = false;
    for (method, r) in &computed {
        let name = method.name();
        match r {
            Ok(MethodResult::Full(d)) => {
                let total_ok = d.check_total().is_ok();
                let divergence = reference.and_then(|base| d.first_difference(base));
                pass &= total_ok && divergence.is_none();
                let mut entry = json!({
                    "method": name,
                    "counts": counts_json(d),
                    "total": d.total().to_string(),
                    "total_matches": total_ok,
                    "agrees": divergence.is_none(),
                });
                if let Some(div) = &divergence {
                    entry["first_difference"] = json!(div.to_string());
                }
                if unverified && matches!(method, Method::Recursion) {
                    entry["unverified"] = json!(true);
                }
                text += &format!("  {name:<12} {}\n", join_counts(d));
                if let Some(div) = divergence {
                    text += &format!("  {:<12} {div}\n", "");
                }
                results.push(entry);
            }
            Ok(MethodResult::Partial(values)) => {
                let mismatch = reference.and_then(|base| {
                    values.iter().enumerate().find_map(|(i, v)| {
                        let want = BigInt::from(base.count(i + 3).clone());
                        (v != &want).then(|| format!("first difference at weight {}: {v} vs {want}", i + 3))
                    })
                });
                pass &= mismatch.is_none();
                let mut entry = json!({
                    "method": name,
                    "first_weight": 3,
                    "counts": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "agrees": mismatch.is_none(),
                });
                if let Some(d) = &mismatch {
                    entry["first_difference"] = json!(d);
                }
                let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                text += &format!("  {name:<12} C_3.. {}\n", shown.join(" "));
                results.push(entry);
            }
            Err(e) => {
                refused = true;
                results.push(json!({ "method": name, "skipped": e.to_string() }));
                text += &format!("  {name:<12} skipped: {e}\n");
            }
        }
    }
    if unverified {
        text += "  note: gcd(m, q-1) != 1, recursion output is unverified\n";
    }
    if computed.len() > 1 {
        text += &format!("  verdict: {}\n", if pass { "pass" } else { "fail" });
    }

    let table = reference.map(|d| {
        let rows = d.counts().iter().enumerate().map(|(w, c)| vec![w.to_string(), c.to_string()]).collect();
        (vec!["weight", "count"], rows)
    });
    let field = code.as_ref().map(|c| field_json(c.tower())).unwrap_or(Value::Null);
    Outcome {
        doc: json!({ "command": "weights", "params": params, "field": field, "results": results, "pass": pass }),
        text,
        table,
        status: if !pass {
            Status::Failed
        } else if refused {
            Status::Refused
        } else {
            Status::Ok
        },
    }
}

fn report_text(r: &IdentityReport) -> String {
    let params: Vec<String> = r
        .parameters
        .iter()
        .filter(|(k, _)| !matches!(k.as_str(), "suite" | "q" | "m"))
        .map(|(k, v)| format!("{k}={}", v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string())))
        .collect();
    let status = match (&r.skipped, r.pass) {
        (Some(_), _) => "skip",
        (None, true) => "pass",
        (None, false) => "FAIL",
    };
    let mut line = format!("  [{status}] {} {}", r.identity, params.join(" "));
    match &r.skipped {
        Some(why) => line += &format!(": {why}"),
        None if !r.pass => line += &format!(": {} != {}", r.lhs, r.rhs),
        None => {}
    }
    line.trim_end().to_owned() + "\n"
}

fn verify(cli: &Cli, a: &VerifyArgs, q: u64, m: u32) -> Outcome {
    let params = params_json(q, m);
    let code = match HammingCode::new(q, m) {
        Ok(c) => c,
        Err(e) => return Outcome::error("verify", params, &e),
    };
    let suites: Vec<Suite> = if a.suite.contains(&SuiteChoice::All) {
        applicable_suites(&code)
    } else {
        a.suite
            .iter()
            .filter_map(|c| match c {
                SuiteChoice::One(s) => Some(*s),
                SuiteChoice::All => None,
            })
            .collect()
    };
    let cfg = VerifyConfig {
        work_bound: cli.work_bound,
        enumeration_guard: cli.enumeration_guard,
        hmax: a.hmax,
        kloosterman_s: if a.s.is_empty() { VerifyConfig::default().kloosterman_s } else { a.s.clone() },
        recursion: RecursionOptions { max_n: a.max_n, ignore_gcd: false },
    };
    let reports = match run_suites(&code, &suites, &cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::error("verify", params, &e),
    };
    let tally = Tally::of(&reports);
    let mut text = format!("H({m}, {q}): ");
    text += &format!("{} passed, {} failed, {} skipped\n", tally.passed, tally.failed, tally.skipped);
    let mut current = None;
    for r in &reports {
        let suite = r.parameters.get("suite").and_then(Value::as_str);
        if suite != current {
            text += &format!(" {}\n", suite.unwrap_or(""));
            current = suite;
        }
        text += &report_text(r);
    }
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.parameters.get("suite").and_then(Value::as_str).unwrap_or("").to_owned(),
                r.identity.clone(),
                Value::Object(r.parameters.clone()).to_string(),
                r.lhs.clone(),
                r.rhs.clone(),
                if r.is_skipped() { "skipped".into() } else { r.pass.to_string() },
            ]
        })
        .collect();
    let status = if tally.failed > 0 {
        Status::Failed
    } else if tally.skipped > 0 {
        Status::Refused
    } else {
        Status::Ok
    };
    Outcome {
        doc: json!({
            "command": "verify",
            "params": params,
            "field": field_json(code.tower()),
            "results": reports,
            "pass": tally.all_pass(),
        }),
        text,
        table: Some((vec!["suite", "identity", "parameters", "lhs", "rhs", "pass"], rows)),
        status,
    }
}

fn sums(cli: &Cli, a: &SumsArgs) -> Outcome {
    let (q, m, s) = (a.q, a.m, a.s);
    let mut params = params_json(q, m);
    params["s"] = json!(s);
    let tower = match FieldTower::for_code(q, m) {
        Ok(t) => t,
        Err(e) => return Outcome::error("sums", params, &e),
    };
    let ctx = CharacterContext::with_work_bound(&tower, cli.work_bound);
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut text = format!("K_{s} over F_{q}, alpha = g^j with g = gamma^{}\n", tower.n());
    let mut total = CyclotomicInt::zero(tower.p());
    for (j, alpha) in tower.subfield_units().into_iter().enumerate() {
        let k = match ctx.kloosterman_multi(s, alpha) {
            Ok(k) => k,
            Err(e) => return Outcome::error("sums", params, &e),
        };
        total = &total + &k;
        let integer = k.to_integer().ok().map(|v| v.to_string());
        results.push(json!({
            "alpha_log": j,
            "coords": k.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "value": k.to_string(),
            "integer": integer,
        }));
        text += &format!("  K_{s}(g^{j}) = {k}\n");
        rows.push(vec![j.to_string(), k.to_string(), integer.unwrap_or_default()]);
    }
    // Σ_α K_s(α) = (-1)^(s+1)
    let expected = CyclotomicInt::from_integer(tower.p(), if s % 2 == 1 { 1 } else { -1 });
    let pass = total == expected;
    text += &format!("  total = {total}\n");
    Outcome {
        doc: json!({
            "command": "sums",
            "params": params,
            "field": field_json(&tower),
            "results": results,
            "total": total.to_string(),
            "pass": pass,
        }),
        text,
        table: Some((vec!["alpha_log", "value", "integer"], rows)),
        status: if pass { Status::Ok } else { Status::Failed },
    }
}

fn code_info(cli: &Cli, q: u64, m: u32) -> Outcome {
    let params = params_json(q, m);
    let code = match HammingCode::new(q, m) {
        Ok(c) => c,
        Err(e) => return Outcome::error("code-info", params, &e),
    };
    let t = code.tower();
    let (n, k) = (code.n(), code.k());
    let d = code.minimum_distance();
    let columns: Vec<Vec<Vec<u32>>> =
        code.parity_check().iter().map(|col| col.iter().map(|&x| t.coeffs(x)).collect()).collect();
    let mut pass = d == 3;
    let mut info = json!({
        "n": n,
        "k": k,
        "d": d,
        "cyclic": code.is_cyclic(),
        "subfield_generator": t.coeffs(t.subfield_generator()),
        "parity_check_columns": columns,
    });
    let mut text = format!("[{n},{k},{d}] over F_{q}");
    if code.is_cyclic() {
        let e = code.defining_zero_exponent();
        let cyclic = code.generator_polynomial().and_then(|g| Ok((g, code.cyclic_hamming_roots()?, code.cyclic_dimension()?)));
        match cyclic {
            Ok((g, roots, dim)) => {
                pass &= dim == k;
                info["defining_zero_exponent"] = json!(e);
                info["defining_zero"] = json!(t.coeffs(t.gamma_pow(e)));
                info["root_exponents"] = json!(roots);
                info["generator_polynomial"] = json!(g.iter().map(|&c| t.coeffs(c)).collect::<Vec<_>>());
                info["cyclic_dimension"] = json!(dim);
                text += &format!(", cyclic, defining zero γ^{e}\n");
            }
            Err(e) => return Outcome::error("code-info", params, &e),
        }
        let mut dual = json!({
            "construction": "trace",
            "length": n,
            "dimension": m,
            "codeword": format!("c(a)_i = Tr(a·γ^({e}·i)), i = 0..{}", n - 1),
        });
        match code.enumerate_dual_distribution(cli.enumeration_guard) {
            Ok(dd) => {
                let weights: Vec<usize> = (1..=n).filter(|&w| !dd.count(w).is_zero()).collect();
                text += &format!("  dual: [{n},{m}] trace code, nonzero weights {weights:?}\n");
                dual["nonzero_weights"] = json!(weights);
            }
            Err(e) => {
                text += &format!("  dual: [{n},{m}] trace code\n");
                dual["nonzero_weights"] = json!({ "skipped": e.to_string() });
            }
        }
        info["dual"] = dual;
    } else {
        let g = gcd(m as u64, q - 1);
        text += &format!(", not cyclic (gcd(m, q-1) = {g})\n");
        info["dual"] = json!({ "construction": "parity-check row space", "length": n, "dimension": m });
    }
    text += &format!("  modulus {:?}, gamma {:?}\n", t.modulus(), t.coeffs(t.gamma()));
    let mut rows = Vec::new();
    for (i, col) in code.parity_check().iter().enumerate() {
        let syms: Vec<u32> = col.iter().map(|&x| code.symbol(x).expect("subfield entry")).collect();
        text += &format!("  h_{i} = {syms:?}\n");
        let joined: Vec<String> = syms.iter().map(u32::to_string).collect();
        rows.push(vec![i.to_string(), joined.join(" ")]);
    }
    Outcome {
        doc: json!({
            "command": "code-info",
            "params": params,
            "field": field_json(t),
            "results": [info],
            "pass": pass,
        }),
        text,
        table: Some((vec!["column", "symbols"], rows)),
        status: if pass { Status::Ok } else { Status::Failed },
    }
}
