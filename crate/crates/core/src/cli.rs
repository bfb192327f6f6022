//! Command-line front end. `main` only forwards to [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::analysis::{
    decide_connectedness, explore, strata, Check, ComponentReport, Connectedness, ExploreConfig, Limits, QSequence,
};
use crate::cartan::{cover_label, CartanData, RootIndex, Weight, WeylIndex};
use crate::dot;
use crate::error::Error;
use crate::json::{parse_record, PathRecord};
use crate::lspath::{shape_orbit, LSPath, Op};
use crate::numeric::{self, format_fraction, fraction_to_json, parse_fraction};
use crate::oracle;
use crate::orbit::{classify, OrbitKind, StarOrbit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_CARTAN: i32 = 2;
pub const EXIT_WEIGHT: i32 = 3;
pub const EXIT_PATH: i32 = 4;
pub const EXIT_CONFIG: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "lscrystal",
    version,
    about = "LS path crystals for rank-2 hyperbolic Kac-Moody algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Print progress to stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Classify the Weyl orbit of λ = kΛ1 + lΛ2.
    #[command(allow_negative_numbers = true)]
    Classify(PosWeight),
    /// Decide whether B(λ) is connected.
    #[command(allow_negative_numbers = true)]
    Decide(PosWeight),
    /// List x_m λ for m in a range.
    #[command(allow_negative_numbers = true)]
    Orbit {
        #[command(flatten)]
        w: PosWeight,
        #[arg(long, default_value_t = -3)]
        from: i64,
        #[arg(long, default_value_t = 3)]
        to: i64,
    },
    /// Work with single LS paths.
    Path {
        #[command(subcommand)]
        cmd: PathCmd,
    },
    /// Breadth-first exploration of a component.
    #[command(allow_negative_numbers = true)]
    Explore(ExploreArgs),
    /// Run a verification suite.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct PosWeight {
    pub a: i64,
    pub b: i64,
    pub k: BigInt,
    pub l: BigInt,
}

#[derive(Args, Debug, Default, Clone)]
pub struct ShapeFlags {
    #[arg(long)]
    pub a: Option<i64>,
    #[arg(long)]
    pub b: Option<i64>,
    #[arg(long)]
    pub k: Option<BigInt>,
    #[arg(long)]
    pub l: Option<BigInt>,
}

#[derive(Args, Debug)]
pub struct PathInput {
    /// Path JSON: a file name, `-` for stdin, or a literal object.
    #[arg(long)]
    pub path: Option<String>,
    #[command(flatten)]
    pub shape: ShapeFlags,
}

#[derive(Subcommand, Debug)]
pub enum PathCmd {
    /// Check a path and print its canonical form.
    #[command(allow_negative_numbers = true)]
    Validate(PathInput),
    /// Apply operators left to right, e.g. `--ops e2,f1,f1`.
    #[command(allow_negative_numbers = true)]
    Apply {
        #[command(flatten)]
        input: PathInput,
        #[arg(long)]
        ops: String,
    },
    /// Evaluate π(t) for `--t p/q`.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[command(flatten)]
        input: PathInput,
        #[arg(long)]
        t: String,
    },
    /// The endpoint π(1).
    #[command(allow_negative_numbers = true)]
    Weight(PathInput),
}

#[derive(Args, Debug)]
pub struct ExploreArgs {
    #[command(flatten)]
    pub shape: ShapeFlags,
    /// `pi_lambda`, `pi_n:N`, `gap:R`, or a path JSON file.
    #[arg(long, default_value = "pi_lambda")]
    pub seed: String,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, default_value_t = 100_000, value_parser = positive::<usize>)]
    pub nodes: usize,
    /// Checks to run (repeatable); defaults depend on the seed.
    #[arg(long = "check")]
    pub checks: Vec<String>,
    /// Also write the explored graph as DOT.
    #[arg(long)]
    pub dot_out: Option<PathBuf>,
    #[arg(long, value_parser = positive::<usize>)]
    pub threads: Option<usize>,
}

fn positive<T>(s: &str) -> std::result::Result<T, String>
where
    T: std::str::FromStr + PartialOrd + From<u8>,
{
    match s.parse::<T>() {
        Ok(v) if v >= T::from(1) => Ok(v),
        _ => Err(format!("expected a positive integer, got `{s}`")),
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Orbit,
    Crystal,
    Cmn,
    Br,
    Connect,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub shape: ShapeFlags,
    #[arg(long, default_value_t = 1, value_parser = positive::<u32>)]
    pub n: u32,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, default_value_t = 100_000, value_parser = positive::<usize>)]
    pub nodes: usize,
    /// Largest gap class seeded by `br`.
    #[arg(long, default_value_t = 2)]
    pub r_max: u64,
    /// Half-width of the index window used by `orbit`.
    #[arg(long, default_value_t = 12, value_parser = positive::<i64>)]
    pub window: i64,
    #[arg(long, value_parser = positive::<usize>)]
    pub threads: Option<usize>,
    /// Write offending paths here as JSON files.
    #[arg(long)]
    pub artifacts: Option<PathBuf>,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    fn config(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CONFIG,
            msg: msg.into(),
        }
    }

    fn path(e: Error) -> Self {
        let code = match e {
            Error::InvalidCartan { .. } => EXIT_CARTAN,
            Error::BitLimit(_) => EXIT_CONFIG,
            Error::ZeroWeight | Error::NotStarOrbit(_) | Error::NegativeOrbit => EXIT_WEIGHT,
            _ => EXIT_PATH,
        };
        CliError {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError {
            code: exit_code(&e),
            msg: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidCartan { .. } => EXIT_CARTAN,
        Error::ZeroWeight
        | Error::NotStarOrbit(_)
        | Error::NegativeOrbit
        | Error::ShapeMismatch
        | Error::NotDivisible(_)
        | Error::FormViolation(_)
        | Error::NotApplicableForm(_)
        | Error::NotD2Shape => EXIT_WEIGHT,
        Error::NotDecreasing | Error::BadSigmas(_) | Error::ChainViolation(_) => EXIT_PATH,
        Error::BadOrder { .. } | Error::OutOfRange(_) | Error::BitLimit(_) | Error::Parse(_) => EXIT_CONFIG,
        Error::InternalNonIntegral
        | Error::NonTermination(_)
        | Error::MultipleGaps
        | Error::InternalBound(_)
        | Error::InternalInvariant(_) => EXIT_VIOLATION,
    }
}

type CliResult = std::result::Result<i32, CliError>;

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    if let Err(e) = numeric::max_bits() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_CONFIG;
    }
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.msg);
            e.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match &cli.cmd {
        Cmd::Classify(w) => cmd_classify(cli.format, w, out),
        Cmd::Decide(w) => cmd_decide(cli.format, w, out),
        Cmd::Orbit { w, from, to } => cmd_orbit(cli.format, w, *from, *to, out),
        Cmd::Path { cmd } => cmd_path(cli.format, cmd, out),
        Cmd::Explore(args) => cmd_explore(cli, args, out, err),
        Cmd::Verify(args) => cmd_verify(cli, args, out, err),
    }
}

fn emit(out: &mut dyn Write, s: &str) -> std::result::Result<(), CliError> {
    out.write_all(s.as_bytes())
        .and_then(|_| {
            if s.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| CliError::config(format!("write failed: {e}")))
}

fn to_json_string(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn cartan(a: i64, b: i64) -> std::result::Result<CartanData, CliError> {
    Ok(CartanData::new(a, b)?)
}

fn weight(k: &BigInt, l: &BigInt) -> Weight {
    Weight::new(k.clone(), l.clone())
}

fn cmd_classify(format: Format, w: &PosWeight, out: &mut dyn Write) -> CliResult {
    let c = cartan(w.a, w.b)?;
    let lambda = weight(&w.k, &w.l);
    let cls = classify(c, &lambda)?;
    let conn = decide_connectedness(c, &lambda);
    if format == Format::Json {
        let v = json!({
            "cartan": [w.a, w.b],
            "lambda": lambda,
            "classification": cls,
            "connectedness": conn,
        });
        emit(out, &to_json_string(&v))?;
        return Ok(EXIT_OK);
    }
    let mut s = String::new();
    writeln!(s, "cartan: a={} b={}", w.a, w.b).unwrap();
    writeln!(s, "lambda: {}", lambda.fundamental_notation()).unwrap();
    let kind = match cls.kind {
        OrbitKind::Star => "Star",
        OrbitKind::MeetsDominant => "MeetsDominant",
        OrbitKind::MeetsAntidominant => "MeetsAntidominant",
    };
    writeln!(s, "kind: {kind}").unwrap();
    if let (Some(can), Some(idx), Some(tag)) = (&cls.canonical, cls.canonical_index, cls.form_tag) {
        writeln!(s, "form: ({}) [{tag}]", tag.form()).unwrap();
        writeln!(s, "canonical: x_{idx} λ ~ {}", can.fundamental_notation()).unwrap();
        writeln!(s, "valley: m = {}", cls.witness_m).unwrap();
        if cls.reversed {
            writeln!(s, "reversed: p_m < 0 in this indexing").unwrap();
        }
        let eligible = if conn == Connectedness::Connected {
            ", connected-eligible"
        } else {
            ""
        };
        writeln!(s, "crystal: {conn}{eligible}").unwrap();
    } else {
        writeln!(s, "witness: x_{} λ", cls.witness_m).unwrap();
    }
    emit(out, &s)?;
    Ok(EXIT_OK)
}

fn cmd_decide(format: Format, w: &PosWeight, out: &mut dyn Write) -> CliResult {
    let c = cartan(w.a, w.b)?;
    let lambda = weight(&w.k, &w.l);
    if lambda.is_zero() {
        return Err(Error::ZeroWeight.into());
    }
    let conn = decide_connectedness(c, &lambda);
    if format == Format::Json {
        emit(out, &to_json_string(&json!({ "connectedness": conn })))?;
    } else {
        emit(out, &conn.to_string())?;
    }
    Ok(EXIT_OK)
}

fn cmd_orbit(format: Format, w: &PosWeight, from: i64, to: i64, out: &mut dyn Write) -> CliResult {
    if from > to {
        return Err(Error::BadOrder { m: to, n: from }.into());
    }
    let c = cartan(w.a, w.b)?;
    let lambda = weight(&w.k, &w.l);
    if lambda.is_zero() {
        return Err(Error::ZeroWeight.into());
    }
    let star = StarOrbit::new(c, lambda.clone());
    match format {
        Format::Dot => {
            let orbit = star?;
            let s = dot::hasse_dot(&orbit, from, to);
            orbit.check_bits()?;
            emit(out, &s)?;
        }
        Format::Json => {
            let seq = crate::orbit::PSequence::for_weight(c, &lambda);
            let rows: Vec<Value> = (from..=to)
                .map(|m| {
                    json!({
                        "m": m,
                        "p": numeric::to_json(&seq.p(m)),
                        "weight": seq.xm_lambda(m),
                        "cover_label": cover_label(m).as_u8(),
                    })
                })
                .collect();
            seq.check_bits()?;
            emit(out, &to_json_string(&rows))?;
        }
        Format::Text => {
            let seq = crate::orbit::PSequence::for_weight(c, &lambda);
            let mut s = String::from("m\tp_m\tx_m λ\tcover\n");
            for m in from..=to {
                let w = seq.xm_lambda(m);
                writeln!(s, "{m}\t{}\t{w}\ta{}", seq.p(m), cover_label(m)).unwrap();
            }
            seq.check_bits()?;
            emit(out, &s)?;
        }
    }
    Ok(EXIT_OK)
}

fn read_source(src: &str) -> std::result::Result<String, CliError> {
    if src.trim_start().starts_with('{') {
        return Ok(src.to_string());
    }
    let mut s = String::new();
    if src == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::config(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(src).map_err(|e| CliError::config(format!("{src}: {e}")))?;
    }
    Ok(s)
}

fn load_record(src: &str) -> std::result::Result<LSPath, CliError> {
    let text = read_source(src)?;
    let rec = parse_record(&text).map_err(|e| CliError {
        code: EXIT_PATH,
        msg: e.to_string(),
    })?;
    rec.to_path().map_err(CliError::path)
}

fn shape(flags: &ShapeFlags) -> std::result::Result<(CartanData, Weight), CliError> {
    match (flags.a, flags.b, &flags.k, &flags.l) {
        (Some(a), Some(b), Some(k), Some(l)) => {
            let c = cartan(a, b)?;
            let w = weight(k, l);
            if w.is_zero() {
                return Err(Error::ZeroWeight.into());
            }
            Ok((c, w))
        }
        _ => Err(CliError::config("need --a, --b, --k and --l")),
    }
}

fn shape_pi_lambda(flags: &ShapeFlags) -> std::result::Result<LSPath, CliError> {
    let (c, w) = shape(flags)?;
    Ok(LSPath::pi_lambda(shape_orbit(c, w)?)?)
}

fn load_path(input: &PathInput) -> std::result::Result<LSPath, CliError> {
    match &input.path {
        Some(src) => load_record(src),
        None => shape_pi_lambda(&input.shape),
    }
}

pub fn parse_ops(s: &str) -> std::result::Result<Vec<(Op, RootIndex)>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let bad = || CliError::config(format!("bad operator `{t}`; expected e1, e2, f1 or f2"));
            let mut ch = t.chars();
            let op = match ch.next() {
                Some('e') => Op::E,
                Some('f') => Op::F,
                _ => return Err(bad()),
            };
            let i = match ch.as_str() {
                "1" => RootIndex::One,
                "2" => RootIndex::Two,
                _ => return Err(bad()),
            };
            Ok((op, i))
        })
        .collect()
}

fn op_name(op: Op, i: RootIndex) -> String {
    match op {
        Op::E => format!("e{i}"),
        Op::F => format!("f{i}"),
    }
}

fn record_json(p: &LSPath) -> Value {
    serde_json::to_value(PathRecord::from(p)).expect("path records serialize")
}

fn rational_pair(c1: &BigRational, c2: &BigRational) -> Value {
    Value::Array(vec![fraction_to_json(c1), fraction_to_json(c2)])
}

fn cmd_path(format: Format, cmd: &PathCmd, out: &mut dyn Write) -> CliResult {
    match cmd {
        PathCmd::Validate(input) => {
            let p = load_path(input)?;
            if format == Format::Text {
                emit(out, &crate::json::path_to_json(&p))?;
            } else {
                emit(out, &to_json_string(&PathRecord::from(&p)))?;
            }
        }
        PathCmd::Apply { input, ops } => {
            let ops = parse_ops(ops)?;
            let mut cur = Some(load_path(input)?);
            let mut steps = vec![json!({ "op": null, "path": record_json(cur.as_ref().expect("loaded")) })];
            let mut text = format!("start\t{}\n", cur.as_ref().expect("loaded").compact());
            for (op, i) in ops {
                let Some(p) = cur.take() else { break };
                let next = p.try_apply(op, i).map_err(CliError::from)?;
                let name = op_name(op, i);
                match &next {
                    Some(q) => {
                        steps.push(json!({ "op": name, "path": record_json(q) }));
                        writeln!(text, "{name}\t{}", q.compact()).unwrap();
                    }
                    None => {
                        steps.push(json!({ "op": name, "path": null }));
                        writeln!(text, "{name}\tnull").unwrap();
                    }
                }
                cur = next;
            }
            if format == Format::Json {
                emit(out, &to_json_string(&steps))?;
            } else {
                emit(out, &text)?;
            }
        }
        PathCmd::Eval { input, t } => {
            let p = load_path(input)?;
            let t = parse_fraction(t)?;
            let v = p.evaluate(&t)?;
            if format == Format::Json {
                let j = json!({ "t": fraction_to_json(&t), "value": rational_pair(&v.c1, &v.c2) });
                emit(out, &to_json_string(&j))?;
            } else {
                emit(
                    out,
                    &format!("({}, {})", format_fraction(&v.c1), format_fraction(&v.c2)),
                )?;
            }
        }
        PathCmd::Weight(input) => {
            let p = load_path(input)?;
            let w = p.weight()?;
            if format == Format::Json {
                emit(out, &serde_json::to_string(&w).expect("weights serialize"))?;
            } else {
                emit(out, &w.to_string())?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// A seed for exploration, and the checks it calls for beyond the defaults.
fn resolve_seed(arg: &str, flags: &ShapeFlags) -> std::result::Result<(LSPath, Vec<Check>), CliError> {
    if arg == "pi_lambda" {
        return Ok((shape_pi_lambda(flags)?, Vec::new()));
    }
    if let Some(n) = arg.strip_prefix("pi_n:") {
        let n: u32 = n
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::config(format!("bad seed `{arg}`")))?;
        let pi = shape_pi_lambda(flags)?;
        let qs = QSequence::new(pi.orbit().clone())?;
        return Ok((
            qs.pi_n(n)?,
            vec![Check::Cmn(n), Check::Bracket(n), Check::LengthBound(n)],
        ));
    }
    if let Some(r) = arg.strip_prefix("gap:") {
        let r: u64 = r.parse().map_err(|_| CliError::config(format!("bad seed `{arg}`")))?;
        let pi = shape_pi_lambda(flags)?;
        return Ok((strata::gap_seed(&pi, r)?, Vec::new()));
    }
    Ok((load_record(arg)?, Vec::new()))
}

fn checks_for(seed: &LSPath, requested: &[String], extra: Vec<Check>) -> std::result::Result<Vec<Check>, CliError> {
    if requested.is_empty() {
        let mut c = Check::defaults_for(seed);
        c.extend(extra);
        return Ok(c);
    }
    requested
        .iter()
        .map(|s| s.parse::<Check>().map_err(|e| CliError::config(e.to_string())))
        .collect()
}

fn cmd_explore(cli: &Cli, args: &ExploreArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (seed, extra) = resolve_seed(&args.seed, &args.shape)?;
    let checks = checks_for(&seed, &args.checks, extra)?;
    if cli.verbose > 0 {
        let names: Vec<String> = checks.iter().map(Check::to_string).collect();
        let _ = writeln!(err, "exploring from {} with checks {}", seed.compact(), names.join(","));
    }
    let cfg = ExploreConfig {
        limits: Limits {
            max_depth: args.depth,
            max_nodes: args.nodes,
        },
        checks,
        threads: args.threads,
    };
    let ex = explore(&seed, &cfg)?;
    seed.orbit().check_bits()?;
    if let Some(file) = &args.dot_out {
        std::fs::write(file, dot::exploration_dot(&ex))
            .map_err(|e| CliError::config(format!("{}: {e}", file.display())))?;
    }
    if cli.format == Format::Dot {
        emit(out, &dot::exploration_dot(&ex))?;
    } else {
        emit(out, &to_json_string(&ex.report))?;
    }
    Ok(if ex.report.passed() { EXIT_OK } else { EXIT_VIOLATION })
}

#[derive(Debug, Clone, serde::Serialize)]
struct NamedCheck {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Default)]
struct Suiterun {
    checks: Vec<NamedCheck>,
    reports: Vec<ComponentReport>,
}

impl Suiterun {
    fn check(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(NamedCheck {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure,
        });
    }

    fn component(&mut self, name: String, report: ComponentReport) {
        let failure = (!report.passed()).then(|| {
            let first = report
                .invariant_violations
                .first()
                .map(|v| format!("; first: [{}] {}", v.check, v.detail))
                .unwrap_or_default();
            format!("{} violation(s){first}", report.violation_count)
        });
        self.check(name, failure);
        self.reports.push(report);
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn limits(args: &VerifyArgs) -> Limits {
    Limits {
        max_depth: args.depth,
        max_nodes: args.nodes,
    }
}

fn run_explore(
    run: &mut Suiterun,
    name: String,
    seed: &LSPath,
    checks: Vec<Check>,
    args: &VerifyArgs,
) -> std::result::Result<Vec<LSPath>, CliError> {
    let cfg = ExploreConfig {
        limits: limits(args),
        checks,
        threads: args.threads,
    };
    let ex = explore(seed, &cfg)?;
    run.component(name, ex.report);
    Ok(ex.nodes)
}

fn crystal_checks(seed: &LSPath) -> Vec<Check> {
    let mut c = vec![Check::CrystalAxioms, Check::Revalidate, Check::IotaKappa];
    if seed.orbit().content() == BigInt::from(1) {
        c.push(Check::Consecutive);
    }
    c
}

fn disjointness(run: &mut Suiterun, sets: &[(String, Vec<LSPath>)]) {
    for x in 0..sets.len() {
        for y in (x + 1)..sets.len() {
            let a: std::collections::HashSet<&LSPath> = sets[x].1.iter().collect();
            let shared = sets[y].1.iter().find(|p| a.contains(p));
            run.check(
                format!("disjoint {} / {}", sets[x].0, sets[y].0),
                shared.map(|p| format!("both contain {}", p.compact())),
            );
        }
    }
}

fn verify_orbit(run: &mut Suiterun, c: CartanData, lambda: &Weight, w: i64) -> std::result::Result<(), CliError> {
    let seq = crate::orbit::PSequence::for_weight(c, lambda);
    let bad = (-w..=w).find(|&m| seq.xm_lambda(m) != c.act_xm_oracle(WeylIndex(m), lambda));
    run.check("closed form of x_m λ", bad.map(|m| format!("mismatch at m = {m}")));

    let base = classify(c, lambda)?;
    let conn = decide_connectedness(c, lambda);
    let bad = (-w..=w).find(|&m| {
        let mu = seq.xm_lambda(m);
        match classify(c, &mu) {
            Ok(cl) => cl.kind != base.kind || cl.canonical != base.canonical || decide_connectedness(c, &mu) != conn,
            Err(_) => true,
        }
    });
    run.check(
        "orbit invariance",
        bad.map(|m| format!("x_{m} λ classifies differently")),
    );

    match base.kind {
        OrbitKind::Star => {
            let hit = oracle::meets_chamber(c, lambda, 2 * w);
            run.check(
                "star criterion",
                hit.then(|| "brute force finds a chamber weight".to_string()),
            );
        }
        kind => {
            let mu = c.act_xm_oracle(WeylIndex(base.witness_m), lambda);
            let ok = match kind {
                OrbitKind::MeetsDominant => !mu.c1.is_negative() && !mu.c2.is_negative(),
                _ => !mu.c1.is_positive() && !mu.c2.is_positive(),
            };
            run.check(
                "chamber witness",
                (!ok).then(|| format!("x_{} λ = {mu}", base.witness_m)),
            );
            return Ok(());
        }
    }

    let unit = oracle::has_unit_coordinate(c, lambda, 2 * w);
    run.check(
        "connectedness criterion",
        ((conn == Connectedness::Connected) != unit).then(|| format!("{conn} but unit scan says {unit}")),
    );

    let orbit = StarOrbit::new(c, lambda.clone())?;
    let bad = (-w..=w).find(|&m| {
        let (prev, i) = orbit.hasse_cover(m);
        c.reflect(i, &orbit.xm_lambda(m)) != orbit.xm_lambda(prev)
    });
    run.check("hasse covers", bad.map(|m| format!("cover of x_{m} λ")));

    if !orbit.is_positive() {
        return Ok(());
    }
    let r = w.min(4);
    let mut dist_bad = None;
    let mut sigma_bad = None;
    for m in -r..=r {
        for n in (m - 3).max(-r)..=m {
            let fast = orbit.dist(m, n)?;
            let slow = oracle::chain_dist(c, lambda, m, n, 2)?;
            if fast != slow && dist_bad.is_none() {
                dist_bad = Some(format!("dist({m}, {n}) = {fast}, brute force {slow}"));
            }
            if n == m {
                continue;
            }
            for d in 2..=12i64 {
                for j in 1..d {
                    let s = BigRational::new(j.into(), d.into());
                    if orbit.sigma_chain_exists(m, n, &s)? != oracle::sigma_chain_brute(c, lambda, m, n, &s)
                        && sigma_bad.is_none()
                    {
                        sigma_bad = Some(format!("σ = {j}/{d} on ({m}, {n})"));
                    }
                }
            }
        }
    }
    run.check("chain distances", dist_bad);
    run.check("σ-chains", sigma_bad);
    Ok(())
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (c, lambda) = shape(&args.shape)?;
    let mut run = Suiterun::default();
    match args.suite {
        Suite::Orbit => verify_orbit(&mut run, c, &lambda, args.window)?,
        Suite::Crystal => {
            let pi = LSPath::pi_lambda(shape_orbit(c, lambda.clone())?)?;
            run_explore(&mut run, "crystal from π_λ".into(), &pi, crystal_checks(&pi), args)?;
            if let Ok(qs) = QSequence::new(pi.orbit().clone()) {
                for n in 1..=2 {
                    let seed = qs.pi_n(n)?;
                    run_explore(
                        &mut run,
                        format!("crystal from π^({n})"),
                        &seed,
                        crystal_checks(&seed),
                        args,
                    )?;
                }
            }
        }
        Suite::Cmn => {
            let orbit = shape_orbit(c, lambda.clone())?;
            let qs = QSequence::new(orbit)?;
            let bad = (-10..=10).find(|&m| {
                let (q0, p0, q1, p1) = (qs.q(m), qs.p(m), qs.q(m + 1), qs.p(m + 1));
                !(q0.is_positive() && q0 < p0 && &(&q0 * &p1 - &q1 * &p0) == qs.det() && qs.ratio(m + 1) < qs.ratio(m))
            });
            run.check(
                "q-sequence identities on [-10, 10]",
                bad.map(|m| format!("fails at m = {m}")),
            );
            let mut sets = Vec::new();
            for n in 1..=args.n {
                let seed = qs.pi_n(n)?;
                let mut checks = crystal_checks(&seed);
                checks.extend([Check::Cmn(n), Check::Bracket(n), Check::LengthBound(n)]);
                let nodes = run_explore(&mut run, format!("component of π^({n})"), &seed, checks, args)?;
                sets.push((format!("π^({n})"), nodes));
            }
            disjointness(&mut run, &sets);
        }
        Suite::Br => {
            let pi = LSPath::pi_lambda(shape_orbit(c, lambda.clone())?)?;
            let mut sets = Vec::new();
            for r in 0..=args.r_max {
                let seed = strata::gap_seed(&pi, r)?;
                let mut checks = crystal_checks(&seed);
                checks.push(Check::GapClass);
                let nodes = run_explore(&mut run, format!("stratum r = {r}"), &seed, checks, args)?;
                sets.push((format!("r = {r}"), nodes));
            }
            disjointness(&mut run, &sets);
        }
        Suite::Connect => {
            let conn = decide_connectedness(c, &lambda);
            run.check(
                "decision",
                (conn != Connectedness::Connected).then(|| format!("decide_connectedness gives {conn}")),
            );
            if conn == Connectedness::Connected {
                let pi = LSPath::pi_lambda(shape_orbit(c, lambda.clone())?)?;
                let mut checks = crystal_checks(&pi);
                checks.extend([Check::Reach, Check::UnitBarrier]);
                run_explore(&mut run, "single component from π_λ".into(), &pi, checks, args)?;
            }
        }
    }
    let passed = run.passed();
    if let Some(dir) = &args.artifacts {
        write_artifacts(dir, &run.reports)?;
    }
    let suite = format!("{:?}", args.suite).to_lowercase();
    if cli.format == Format::Json {
        let v = json!({
            "suite": suite,
            "cartan": [c.a(), c.b()],
            "lambda": lambda,
            "passed": passed,
            "checks": run.checks,
            "reports": run.reports,
        });
        emit(out, &to_json_string(&v))?;
    } else {
        let mut s = String::new();
        for ch in &run.checks {
            match &ch.detail {
                None => writeln!(s, "pass  {}", ch.name).unwrap(),
                Some(d) => writeln!(s, "FAIL  {}: {d}", ch.name).unwrap(),
            }
        }
        for r in &run.reports {
            writeln!(
                s,
                "      {} nodes, {} edges, depth {}, min length {}",
                r.visited_count, r.edge_count, r.depth_reached, r.min_length
            )
            .unwrap();
        }
        writeln!(s, "verify {suite}: {}", if passed { "pass" } else { "FAIL" }).unwrap();
        emit(out, &s)?;
    }
    if cli.verbose > 0 {
        let _ = writeln!(err, "{} checks, {} explorations", run.checks.len(), run.reports.len());
    }
    Ok(if passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn write_artifacts(dir: &std::path::Path, reports: &[ComponentReport]) -> std::result::Result<(), CliError> {
    let io = |e: std::io::Error| CliError::config(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut k = 0;
    for r in reports {
        for v in &r.invariant_violations {
            let body = json!({ "check": v.check, "detail": v.detail, "path": v.path });
            std::fs::write(dir.join(format!("violation-{k:04}.json")), to_json_string(&body)).map_err(io)?;
            k += 1;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<&str> = std::iter::once("lscrystal").chain(args.iter().copied()).collect();
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ops_parse() {
        let ops = parse_ops("e2, f1,f1").unwrap();
        assert_eq!(
            ops,
            vec![
                (Op::E, RootIndex::Two),
                (Op::F, RootIndex::One),
                (Op::F, RootIndex::One)
            ]
        );
        assert_eq!(parse_ops("g1").unwrap_err().code, EXIT_CONFIG);
        assert_eq!(parse_ops("e3").unwrap_err().code, EXIT_CONFIG);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["classify", "2", "2", "1", "-1"]).0, EXIT_CARTAN);
        assert_eq!(run_str(&["classify", "3", "3", "0", "0"]).0, EXIT_WEIGHT);
        assert_eq!(run_str(&["classify"]).0, EXIT_CONFIG);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        let bad = r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0,-1],"sigmas":[[0,1],[1,3],[1,1]]}"#;
        let (code, _, err) = run_str(&["path", "validate", "--path", bad]);
        assert_eq!(code, EXIT_PATH);
        assert!(err.contains("junction 1"));
    }

    #[test]
    fn classify_text() {
        let (code, out, _) = run_str(&["classify", "2", "3", "1", "-1"]);
        assert_eq!(code, 0);
        assert!(out.contains("kind: Star"));
        assert!(out.contains("connected-eligible"));
        let (_, out, _) = run_str(&["classify", "3", "3", "1", "1"]);
        assert!(out.contains("MeetsDominant"));
    }
}
