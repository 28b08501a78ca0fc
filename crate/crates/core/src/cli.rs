//! Command-line front end.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::checks::{self, CheckConfig, SuiteReport};
use crate::error::{Error, Result};
use crate::indecomposables::{berezin_charge, block_of, IndecompLabel};
use crate::oracle::{decompose_tensor, module_of_label};
use crate::quotient::{
    normalize_parity, omega, omega_labels, rho, tensor_direct, tensor_quotient, FormalObject, QuotientObject,
    Sl21Zigzag,
};
use crate::weights::{build_diagram, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Gl,
    Sl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Rho,
    Oracle,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "superq", version, about = "Tensor products in Rep(Gl(m|1))/N and Rep(Sl(m|1))/N")]
pub struct Cli {
    /// Rank m of Gl(m|1).
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "gl")]
    pub group: Group,
    /// Shift every summand to positive superdimension.
    #[arg(long, global = true)]
    pub normalize_parity: bool,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub output: Output,
    #[arg(long, global = true, default_value_t = 4000)]
    pub oracle_dim_bound: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight diagram of a highest weight `a1,...,am/b`.
    Diagram {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Tensor product of two labels (`irr@v/block=c1,...` etc. or a weight).
    Tensor {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Run a named verification suite, or `all`.
    Check {
        suite: String,
        /// Where the calibration report is written if it does not exist yet.
        #[arg(long, default_value = "superq-calibration.json")]
        calibration_out: PathBuf,
    },
}

/// Exit status: success, verified disagreement, usage error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn seed() -> u64 {
    std::env::var("SUPERQ_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(checks::DEFAULT_SEED)
}

fn exit_code_of(e: &Error) -> i32 {
    match e {
        Error::Oracle(_) | Error::Identification(_) => EXIT_DISAGREE,
        _ => EXIT_USAGE,
    }
}

/// A label, or a weight standing for its simple module.
pub fn parse_label(s: &str, m: Option<usize>) -> Result<IndecompLabel> {
    let x = if s.contains('@') {
        s.parse::<IndecompLabel>()?
    } else {
        IndecompLabel::irr(&s.parse::<Weight>()?)?
    };
    match m {
        Some(m) if m != x.m() => Err(Error::RankMismatch(x.m(), m)),
        _ => Ok(x),
    }
}

fn quotient_json(q: &QuotientObject, group: Group) -> Value {
    let items: Vec<Value> = q
        .summands
        .iter()
        .map(|(x, &n)| {
            let mut v = json!({ "label": x, "text": x.to_string(), "mult": n });
            if let Ok(t) = rho(x) {
                v["sdim"] = json!(crate::indecomposables::superdimension(x).to_string());
                match group {
                    Group::Gl => v["triple"] = json!(t),
                    Group::Sl => v["sl_triple"] = json!(t.to_sl()),
                }
                if group == Group::Sl && x.m() == 2 {
                    if let Ok(z) = Sl21Zigzag::of_label(x) {
                        v["zigzag"] = json!(z.canonical().to_string());
                    }
                }
            }
            v
        })
        .collect();
    Value::Array(items)
}

fn quotient_table(q: &QuotientObject, group: Group) -> String {
    if q.is_zero() {
        return "  0\n".into();
    }
    let mut s = String::new();
    for (x, &n) in &q.summands {
        let image = match (rho(x), group) {
            (Ok(t), Group::Gl) => t.to_string(),
            (Ok(t), Group::Sl) => {
                let z = if x.m() == 2 {
                    Sl21Zigzag::of_label(x).map(|z| format!("  {}", z.canonical())).unwrap_or_default()
                } else {
                    String::new()
                };
                format!("t^{} ⊗ L{}{z}", t.d, t.core)
            }
            (Err(_), _) => "negligible".into(),
        };
        s.push_str(&format!("  {n} x {x}    ->  {image}\n"));
    }
    s
}

/// In the Sl quotient the Berezinian is trivial; summands are merged by
/// their Sl image.
fn to_group(q: QuotientObject, group: Group, normalize: bool) -> QuotientObject {
    let mut out = QuotientObject::zero();
    let mut seen: BTreeMap<crate::quotient::SlTriple, IndecompLabel> = BTreeMap::new();
    for (x, n) in q.summands {
        let x = if normalize { normalize_parity(&x) } else { x };
        let x = match (group, rho(&x)) {
            (Group::Sl, Ok(t)) => seen.entry(t.to_sl()).or_insert(x).clone(),
            _ => x,
        };
        out.add(x, n);
    }
    out
}

fn formal_json(f: &FormalObject) -> Value {
    Value::Array(
        f.summands
            .iter()
            .map(|(s, &n)| json!({ "summand": s, "text": s.to_string(), "mult": n }))
            .collect(),
    )
}

fn cmd_diagram(cli: &Cli, weight: &str, out: &mut dyn Write) -> Result<i32> {
    let w: Weight = weight.parse()?;
    if let Some(m) = cli.m {
        if m != w.m {
            return Err(Error::RankMismatch(w.m, m));
        }
    }
    let d = build_diagram(&w);
    let (lo, hi) = d.window();
    let vee = w.vee();
    match cli.output {
        Output::Json => {
            let mut v = json!({
                "schema": 1,
                "weight": w,
                "diagram": d,
                "atypicality": w.atypicality(),
                "vee": vee,
                "crosses": w.crosses(),
            });
            if w.is_atypical() {
                let (block, _) = block_of(&w)?;
                v["block"] = json!(block.crosses);
                v["berezin_charge"] = json!(berezin_charge(&w)?);
                v["core"] = json!(w.core()?);
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).ok();
        }
        Output::Table => {
            writeln!(out, "weight {w}").ok();
            writeln!(out, "{}", d.render(lo, hi)).ok();
            match vee {
                Some(v) => writeln!(
                    out,
                    "atypical, vee at {v}, crosses {:?}, Berezin charge {}",
                    w.crosses(),
                    berezin_charge(&w)?
                ),
                None => writeln!(out, "typical"),
            }
            .ok();
        }
    }
    Ok(EXIT_OK)
}

fn cmd_tensor(cli: &Cli, xs: &str, ys: &str, method: Method, out: &mut dyn Write) -> Result<i32> {
    let x = parse_label(xs, cli.m)?;
    let y = parse_label(ys, cli.m)?;
    if x.m() != y.m() {
        return Err(Error::RankMismatch(x.m(), y.m()));
    }
    let qx = omega_labels([(&x, &1)]);
    let qy = omega_labels([(&y, &1)]);
    let mut results: Vec<(&str, QuotientObject)> = Vec::new();
    let mut full = None;
    let mut oracle_note = None;
    if matches!(method, Method::Direct | Method::All) {
        results.push(("direct", tensor_direct(&qx, &qy)?));
    }
    if matches!(method, Method::Rho | Method::All) {
        results.push(("rho", tensor_quotient(&qx, &qy)?));
    }
    if matches!(method, Method::Oracle | Method::All) {
        let run = || -> Result<FormalObject> {
            let a = module_of_label(&x)?;
            let b = module_of_label(&y)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed());
            decompose_tensor(&a, &b, cli.oracle_dim_bound, &mut rng)
        };
        match run() {
            Ok(f) => {
                results.push(("oracle", omega(&f)));
                full = Some(f);
            }
            Err(e) if method == Method::Oracle => return Err(e),
            Err(e) => oracle_note = Some(e.to_string()),
        }
    }
    let results: Vec<(&str, QuotientObject)> = results
        .into_iter()
        .map(|(k, q)| (k, to_group(q, cli.group, cli.normalize_parity)))
        .collect();
    let agree = results.windows(2).all(|p| p[0].1 == p[1].1);
    match cli.output {
        Output::Json => {
            let mut v = json!({
                "schema": 1,
                "x": x,
                "y": y,
                "group": format!("{:?}", cli.group).to_lowercase(),
                "agree": agree,
            });
            for (k, q) in &results {
                v["methods"][*k] = quotient_json(q, cli.group);
            }
            if let Some(f) = &full {
                v["oracle_summands"] = formal_json(f);
            }
            if let Some(n) = &oracle_note {
                v["oracle_skipped"] = json!(n);
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).ok();
        }
        Output::Table => {
            writeln!(out, "{x} ⊗ {y}").ok();
            for (k, q) in &results {
                writeln!(out, "[{k}]\n{}", quotient_table(q, cli.group)).ok();
            }
            if let Some(f) = &full {
                writeln!(out, "[oracle, all summands]").ok();
                for (s, n) in &f.summands {
                    writeln!(out, "  {n} x {s}").ok();
                }
            }
            if let Some(n) = &oracle_note {
                writeln!(out, "[oracle skipped: {n}]").ok();
            }
            if results.len() > 1 {
                writeln!(out, "{}", if agree { "all methods agree" } else { "DISAGREEMENT" }).ok();
            }
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_DISAGREE })
}

fn report_table(r: &SuiteReport, out: &mut dyn Write) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{status} {} ({} cases, {} ms)", r.suite, r.cases(), r.elapsed_ms).ok();
    for p in &r.properties {
        let s = if p.failures.is_empty() && p.cases > 0 { "ok" } else { "FAILED" };
        writeln!(out, "  {s:6} {} [{}]", p.name, p.cases).ok();
        for f in &p.failures {
            writeln!(out, "         {f}").ok();
        }
    }
}

fn cmd_check(cli: &Cli, suite: &str, calibration_out: &PathBuf, out: &mut dyn Write) -> Result<i32> {
    let names: Vec<&str> = if suite == "all" {
        checks::SUITES.to_vec()
    } else if checks::SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Error::Parse(format!(
            "unknown suite '{suite}', expected one of: all, {}",
            checks::SUITES.join(", ")
        )));
    };
    if !calibration_out.exists() {
        let report = checks::calibrate()?;
        let text = serde_json::to_string_pretty(&report).expect("json");
        std::fs::write(calibration_out, text + "\n")
            .map_err(|e| Error::Parse(format!("{}: {e}", calibration_out.display())))?;
    }
    let cfg = CheckConfig {
        seed: seed(),
        oracle_dim_bound: cli.oracle_dim_bound,
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(checks::run_suite(name, &cfg)?);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    match cli.output {
        Output::Json => {
            let v = json!({ "schema": 1, "passed": passed, "seed": cfg.seed, "suites": reports });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).ok();
        }
        Output::Table => reports.iter().for_each(|r| report_table(r, out)),
    }
    Ok(if passed { EXIT_OK } else { EXIT_DISAGREE })
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    if cli.m.is_some_and(|m| m < 2) {
        writeln!(err, "error: {}", Error::UnsupportedRank(cli.m.unwrap_or(0))).ok();
        return EXIT_USAGE;
    }
    let r = match &cli.command {
        Command::Diagram { weight } => cmd_diagram(&cli, weight, out),
        Command::Tensor { x, y, method } => cmd_tensor(&cli, x, y, *method, out),
        Command::Check { suite, calibration_out } => cmd_check(&cli, suite, calibration_out, out),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            exit_code_of(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["superq"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn diagram_json() {
        let (code, s) = call(&["diagram", "--m", "2", "--weight", "0,0/0", "--output", "json"]);
        assert_eq!(code, 0, "{s}");
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["vee"], -1);
        assert_eq!(v["crosses"], json!([0]));
        let (_, s) = call(&["diagram", "--weight", "1,1/-1", "--output", "json"]);
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!((v["vee"].clone(), v["crosses"].clone()), (json!(0), json!([1])));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["diagram", "--weight", "0,x/0"]).0, EXIT_USAGE);
        assert_eq!(call(&["diagram", "--m", "3", "--weight", "0,0/0"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "no-such-suite"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["tensor", "0,0/0", "0,0,0/0"]).0, EXIT_USAGE);
    }

    #[test]
    fn unit_tensor_unit() {
        let (code, s) = call(&["tensor", "0,0/0", "0,0/0", "--method", "all", "--output", "json"]);
        assert_eq!(code, 0, "{s}");
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["agree"], true);
        let direct = &v["methods"]["direct"];
        assert_eq!(direct.as_array().unwrap().len(), 1);
        assert_eq!(direct[0]["text"], "irr@-1 block=0");
    }

    #[test]
    fn three_way_sl21_rule() {
        let x = Sl21Zigzag::z(1, 0).representative().to_string();
        let y = Sl21Zigzag::z(1, 1).representative().to_string();
        let (code, s) = call(&["tensor", &x, &y, "--method", "all", "--group", "sl"]);
        assert_eq!(code, 0, "{s}");
        assert!(s.contains("Z^5(1)"), "{s}");
        assert!(s.contains("all methods agree"), "{s}");
    }
}
