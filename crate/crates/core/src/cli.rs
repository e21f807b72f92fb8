//! Command-line surface: argument parsing, verb dispatch and rendering.
//!
//! `run` never prints; it returns the exit code with the rendered output so
//! the binary stays a two-line wrapper and tests can call it directly.

use std::fmt::Write as _;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::independence::{self, InjectivityCertificate, DEFAULT_TUPLE_LIMIT};
use crate::natural::{self, embed};
use crate::parse::{parse, Parsed};
use crate::racah::{self, casimir_element, g, normalize, CasimirKind, RacahGen};
use crate::rep::{self, build_irrep, random_points, Evaluator, Matrix};
use crate::report::{Status, VerificationReport};
use crate::scalar;
use crate::tensor::{self, evaluate_expr, TensorElement};
use crate::usl2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Rewrite a Racah-algebra expression into its basis normal form.
    Normalize,
    /// Map an expression into F[a,b,c] ⊗ U(sl2).
    Embed,
    /// Split the image of an expression into homogeneous components.
    Grade,
    /// Run verification suites (all of them when no suite is given).
    Verify,
    /// Compute the bounded-degree injectivity certificate.
    Certify,
    /// Evaluate an expression in finite-dimensional representations.
    Eval,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
    Latex,
}

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_CAPS: [u32; 7] = [1; 7];

/// Every suite name accepted by `verify --suite`, in run order.
pub const SUITES: [&str; 14] = [
    "commutators",
    "casimir-usl2",
    "pbw",
    "structural",
    "homomorphism",
    "rewrite-rules",
    "components",
    "casimir-images",
    "normal-form",
    "centrality",
    "independence",
    "injectivity",
    "representations",
    "zero-divisors",
];

#[derive(Parser, Debug)]
#[command(name = "racah", about = "Exact computations in the Racah algebra and its embedding into F[a,b,c] ⊗ U(sl2)")]
struct Args {
    #[arg(value_enum)]
    verb: Verb,
    /// Expression for normalize, embed, grade and eval.
    expr: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Degree caps i,j,k,l,r,s,t for certify and the injectivity suite.
    #[arg(long)]
    caps: Option<String>,
    /// Representation dimensions, comma separated.
    #[arg(long)]
    dims: Option<String>,
    /// Number of seeded evaluation points.
    #[arg(long)]
    points: Option<usize>,
    /// Suite for verify; one of the names listed in the README.
    #[arg(long)]
    suite: Option<String>,
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub expr: Option<String>,
    pub format: Format,
    pub seed: u64,
    pub caps: [u32; 7],
    pub dims: Vec<usize>,
    pub points: usize,
    pub suite: Option<String>,
}

impl Command {
    pub fn new(verb: Verb) -> Self {
        Command {
            verb,
            expr: None,
            format: Format::Text,
            seed: DEFAULT_SEED,
            caps: DEFAULT_CAPS,
            dims: vec![1, 2, 3, 4, 5],
            points: 5,
            suite: None,
        }
    }

    pub fn with_expr(verb: Verb, expr: &str) -> Self {
        Command {
            expr: Some(expr.to_string()),
            ..Command::new(verb)
        }
    }

    /// Parses command-line arguments (including the program name).
    pub fn from_args<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let a = Args::try_parse_from(args)?;
        let invalid = |e: Error| clap::Error::raw(ErrorKind::ValueValidation, format!("{e}\n"));
        let mut cmd = Command::new(a.verb);
        cmd.format = a.format;
        cmd.seed = a.seed;
        cmd.expr = a.expr;
        cmd.suite = a.suite;
        if let Some(c) = a.caps {
            cmd.caps = parse_caps(&c).map_err(invalid)?;
        }
        if let Some(d) = a.dims {
            cmd.dims = parse_dims(&d).map_err(invalid)?;
        } else if cmd.verb == Verb::Eval {
            cmd.dims = vec![2];
        }
        match a.points {
            Some(n) => cmd.points = n,
            None if cmd.verb == Verb::Eval => cmd.points = 1,
            None => {}
        }
        cmd.validate().map_err(invalid)?;
        Ok(cmd)
    }

    fn validate(&self) -> Result<(), Error> {
        let needs_expr = matches!(self.verb, Verb::Normalize | Verb::Embed | Verb::Grade | Verb::Eval);
        if needs_expr && self.expr.is_none() {
            return Err(Error::InvalidOption(format!("{:?} needs an expression", self.verb).to_lowercase()));
        }
        if !needs_expr && self.expr.is_some() {
            return Err(Error::InvalidOption(format!("{:?} takes no expression", self.verb).to_lowercase()));
        }
        if self.suite.is_some() && self.verb != Verb::Verify {
            return Err(Error::InvalidOption("--suite only applies to verify".into()));
        }
        if let Some(s) = &self.suite {
            if !SUITES.contains(&s.as_str()) {
                return Err(Error::InvalidOption(format!(
                    "unknown suite `{s}`; expected one of {}",
                    SUITES.join(", ")
                )));
            }
        }
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(Error::ZeroDimension);
        }
        Ok(())
    }
}

/// Parses `i,j,k,l,r,s,t` degree caps.
pub fn parse_caps(text: &str) -> Result<[u32; 7], Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 7 {
        return Err(Error::InvalidOption(format!("--caps needs seven values, got `{text}`")));
    }
    let mut caps = [0u32; 7];
    for (slot, p) in caps.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| Error::InvalidOption(format!("bad cap `{p}`")))?;
    }
    Ok(caps)
}

/// Parses a comma separated list of positive dimensions.
pub fn parse_dims(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(str::trim)
        .map(|p| match p.parse::<usize>() {
            Ok(0) => Err(Error::ZeroDimension),
            Ok(d) => Ok(d),
            Err(_) => Err(Error::InvalidOption(format!("bad dimension `{p}`"))),
        })
        .collect()
}

/// Exit code and rendered output.
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: 0, output }
    }

    fn usage(err: Error) -> Self {
        Outcome {
            code: 2,
            output: format!("error: {err}\n"),
        }
    }
}

/// Runs a command. Exit code 0 on success, 1 when a verification check
/// fails and 2 for usage errors (bad expressions, options or caps).
pub fn run(cmd: &Command) -> Outcome {
    if let Err(e) = cmd.validate() {
        return Outcome::usage(e);
    }
    let result = match cmd.verb {
        Verb::Normalize => run_normalize(cmd),
        Verb::Embed => run_embed(cmd),
        Verb::Grade => run_grade(cmd),
        Verb::Eval => run_eval(cmd),
        Verb::Verify => return run_verify(cmd),
        Verb::Certify => return run_certify(cmd),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::usage(e),
    }
}

fn expression(cmd: &Command) -> &str {
    cmd.expr.as_deref().unwrap_or_default()
}

fn structured(cmd: &Command, result: serde_json::Value) -> String {
    let doc = json!({
        "verb": format!("{:?}", cmd.verb).to_lowercase(),
        "input": cmd.expr,
        "result": result,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("json renders"))
}

fn run_normalize(cmd: &Command) -> Result<String, Error> {
    let u = match parse(expression(cmd))? {
        Parsed::Racah(u) => u,
        Parsed::Tensor(_) => {
            return Err(Error::InvalidOption(
                "normalize takes a Racah-algebra expression; use embed for tensor expressions".into(),
            ))
        }
    };
    let nf = normalize(&u);
    Ok(match cmd.format {
        Format::Text => format!("{}\n", nf.to_text()),
        Format::Latex => format!("{}\n", nf.to_latex()),
        Format::Structured => structured(cmd, nf.to_structured()),
    })
}

/// The tensor-algebra image of either kind of expression.
fn image(input: &str) -> Result<TensorElement, Error> {
    Ok(match parse(input)? {
        Parsed::Racah(u) => embed(&u),
        Parsed::Tensor(t) => evaluate_expr(&t),
    })
}

fn run_embed(cmd: &Command) -> Result<String, Error> {
    let v = image(expression(cmd))?;
    Ok(match cmd.format {
        Format::Text => format!("{}\n", v.to_text()),
        Format::Latex => format!("{}\n", v.to_latex()),
        Format::Structured => structured(cmd, v.to_structured()),
    })
}

fn run_grade(cmd: &Command) -> Result<String, Error> {
    let v = image(expression(cmd))?;
    let parts = v.components();
    Ok(match cmd.format {
        Format::Text => {
            let mut out = String::new();
            if parts.is_empty() {
                out.push_str("0\n");
            }
            for (n, part) in &parts {
                let _ = writeln!(out, "degree {n}: {}", part.to_text());
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            let rows: Vec<String> = parts
                .iter()
                .map(|(n, part)| format!("\\tilde\\pi_{{{n}}} &= {}", part.to_latex()))
                .collect();
            out.push_str(&rows.join(" \\\\\n"));
            out.push_str("\n\\end{align*}\n");
            out
        }
        Format::Structured => {
            let comps: Vec<serde_json::Value> = parts
                .iter()
                .map(|(n, part)| json!({"degree": n, "component": part.to_structured()}))
                .collect();
            structured(cmd, json!(comps))
        }
    })
}

fn matrix_latex(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.dim())
        .map(|i| {
            (0..m.dim())
                .map(|j| scalar::render_latex(m.get(i, j)))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| scalar::render(m.get(i, j))).collect())
        .collect();
    json!(rows)
}

fn run_eval(cmd: &Command) -> Result<String, Error> {
    let v = image(expression(cmd))?;
    let points = random_points(cmd.seed, cmd.points);
    let mut text = String::new();
    let mut records = Vec::new();
    for &d in &cmd.dims {
        let irrep = build_irrep(d)?;
        for p in &points {
            let m = Evaluator::new(&irrep, p).eval(&v);
            match cmd.format {
                Format::Text => {
                    let _ = writeln!(text, "d = {d}, (a, b, c) = {p}:");
                    for line in m.to_text().lines() {
                        let _ = writeln!(text, "  {line}");
                    }
                }
                Format::Latex => {
                    let _ = writeln!(text, "% d = {d}, (a, b, c) = {p}\n{}", matrix_latex(&m));
                }
                Format::Structured => records.push(json!({
                    "dimension": d,
                    "point": [scalar::render(&p.a), scalar::render(&p.b), scalar::render(&p.c)],
                    "matrix": matrix_json(&m),
                })),
            }
        }
    }
    Ok(match cmd.format {
        Format::Structured => structured(cmd, json!(records)),
        _ => text,
    })
}

/// Runs one named suite with the command's options.
pub fn run_suite(name: &str, cmd: &Command) -> Result<VerificationReport, Error> {
    Ok(match name {
        "commutators" => usl2::verify_commutator_lemmas(),
        "casimir-usl2" => usl2::verify_casimir_properties(),
        "pbw" => usl2::verify_pbw_bases(3, 6),
        "structural" => tensor::verify_structural_laws(),
        "homomorphism" => natural::verify_homomorphism(),
        "rewrite-rules" => natural::verify_rewrite_rules(),
        "components" => natural::verify_homogeneous_tables(),
        "casimir-images" => natural::verify_casimir_images(),
        "normal-form" => natural::verify_normal_form_oracle(cmd.seed, 1000, 6, 6),
        "centrality" => centrality_suite(),
        "independence" => {
            let mut rep = VerificationReport::new("independence");
            rep.extend(independence::verify_leading_monomial_law(2));
            rep.extend(independence::verify_theta_independence(2));
            rep
        }
        "injectivity" => {
            let cert = independence::injectivity_certificate(cmd.caps, DEFAULT_TUPLE_LIMIT)?;
            certificate_report(&cert)
        }
        "representations" => {
            rep::oracle_check_relations(&cmd.dims, &random_points(cmd.seed, cmd.points))?
        }
        "zero-divisors" => natural::verify_no_zero_divisors(cmd.seed, 200, 2),
        other => return Err(Error::InvalidOption(format!("unknown suite `{other}`"))),
    })
}

/// Centrality of `α, β, γ, δ` and the three Casimir elements after
/// normalization, and of their images in the tensor algebra.
pub fn centrality_suite() -> VerificationReport {
    use RacahGen::*;
    let mut rep = VerificationReport::new("centrality");
    for gen in [Alpha, Beta, Gamma, Delta] {
        rep.extend(racah::check_centrality(gen.to_string().as_str(), &g(gen)));
    }
    for which in CasimirKind::ALL {
        let label = which.generator().to_string();
        rep.extend(racah::check_centrality(&label, &casimir_element(which)));
    }
    rep.extend(natural::verify_image_centrality());
    rep
}

fn certificate_report(cert: &InjectivityCertificate) -> VerificationReport {
    let mut rep = VerificationReport::new("injectivity");
    rep.record(
        "rank",
        format!(
            "images of the {} capped basis monomials are linearly independent",
            cert.dimension
        ),
        cert.passed(),
        || format!("rank {} < {}", cert.rank, cert.dimension),
    );
    rep.note(format!("caps {:?}", cert.caps));
    rep
}

fn render_reports(cmd: &Command, reports: &[(VerificationReport, f64)]) -> String {
    match cmd.format {
        Format::Text => {
            let mut out = String::new();
            for (r, secs) in reports {
                out.push_str(&r.to_string());
                let _ = writeln!(out, "  time: {secs:.2} s");
            }
            let failed: usize = reports.iter().map(|(r, _)| r.failures().count()).sum();
            let total: usize = reports.iter().map(|(r, _)| r.checks.len()).sum();
            let _ = writeln!(out, "{} of {total} checks passed, {failed} failed", total - failed);
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{lll}\nsuite & check & status \\\\\n\\hline\n");
            for (r, _) in reports {
                for c in &r.checks {
                    let status = if c.status == Status::Pass { "pass" } else { "fail" };
                    let _ = writeln!(
                        out,
                        "\\texttt{{{}}} & \\texttt{{{}}} & {status} \\\\",
                        escape_tt(&r.suite),
                        escape_tt(&c.id)
                    );
                }
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        Format::Structured => {
            let suites: Vec<serde_json::Value> = reports
                .iter()
                .map(|(r, secs)| {
                    let mut v = r.to_json();
                    v["seconds"] = json!(secs);
                    v["passed"] = json!(r.passed());
                    v
                })
                .collect();
            let passed = reports.iter().all(|(r, _)| r.passed());
            let doc = json!({"verb": "verify", "seed": cmd.seed, "passed": passed, "suites": suites});
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json renders"))
        }
    }
}

fn escape_tt(s: &str) -> String {
    s.replace('_', "\\_").replace('{', "\\{").replace('}', "\\}")
}

fn run_verify(cmd: &Command) -> Outcome {
    let names: Vec<&str> = match &cmd.suite {
        Some(s) => vec![s.as_str()],
        None => SUITES.to_vec(),
    };
    let mut reports = Vec::new();
    for name in names {
        let start = Instant::now();
        match run_suite(name, cmd) {
            Ok(r) => reports.push((r, start.elapsed().as_secs_f64())),
            Err(e) => return Outcome::usage(e),
        }
    }
    let passed = reports.iter().all(|(r, _)| r.passed());
    Outcome {
        code: if passed { 0 } else { 1 },
        output: render_reports(cmd, &reports),
    }
}

fn run_certify(cmd: &Command) -> Outcome {
    let cert = match independence::injectivity_certificate(cmd.caps, DEFAULT_TUPLE_LIMIT) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let output = match cmd.format {
        Format::Text => format!("{cert}\n"),
        Format::Structured => format!(
            "{}\n",
            serde_json::to_string_pretty(&cert.to_json()).expect("json renders")
        ),
        Format::Latex => format!(
            "\\text{{caps }}({}):\\quad \\operatorname{{rank}} = {} = {}\n",
            cert.caps.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            cert.rank,
            cert.dimension
        ),
    };
    Outcome {
        code: if cert.passed() { 0 } else { 1 },
        output,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_and_dims() {
        assert_eq!(parse_caps("1,0,1,0,0,0,1").unwrap(), [1, 0, 1, 0, 0, 0, 1]);
        assert!(parse_caps("1,2").is_err());
        assert!(parse_caps("1,1,1,1,1,1,x").is_err());
        assert_eq!(parse_dims("1, 3,5").unwrap(), vec![1, 3, 5]);
        assert_eq!(parse_dims("2,0"), Err(Error::ZeroDimension));
    }

    #[test]
    fn normalize_verb() {
        let out = run(&Command::with_expr(Verb::Normalize, "B*A"));
        assert_eq!(out.code, 0);
        assert_eq!(out.output, "-2 D + A B\n");
        let out = run(&Command::with_expr(Verb::Normalize, "[A,B] - 2*D"));
        assert_eq!(out.output, "0\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&Command::with_expr(Verb::Normalize, "A +")).code, 2);
        assert_eq!(run(&Command::with_expr(Verb::Normalize, "e f")).code, 2);
        assert_eq!(run(&Command::new(Verb::Normalize)).code, 2);
        let mut cmd = Command::new(Verb::Verify);
        cmd.suite = Some("nope".into());
        assert_eq!(run(&cmd).code, 2);
        let mut cmd = Command::new(Verb::Certify);
        cmd.caps = [9; 7];
        assert_eq!(run(&cmd).code, 2);
    }

    #[test]
    fn argument_parsing() {
        let cmd = Command::from_args(["racah", "verify", "--suite", "homomorphism", "--format", "structured"]).unwrap();
        assert_eq!(cmd.verb, Verb::Verify);
        assert_eq!(cmd.format, Format::Structured);
        assert_eq!(cmd.suite.as_deref(), Some("homomorphism"));
        let cmd = Command::from_args(["racah", "eval", "1 ox Lambda", "--dims", "3"]).unwrap();
        assert_eq!(cmd.dims, vec![3]);
        assert_eq!(cmd.points, 1);
        assert!(Command::from_args(["racah", "frobnicate"]).is_err());
        assert!(Command::from_args(["racah", "certify", "A"]).is_err());
    }

    #[test]
    fn eval_of_lambda_is_scalar() {
        let mut cmd = Command::with_expr(Verb::Eval, "Lambda");
        cmd.dims = vec![3];
        cmd.points = 1;
        let out = run(&cmd);
        assert_eq!(out.code, 0);
        assert!(out.output.contains("2 0 0"), "{}", out.output);
    }

    #[test]
    fn structured_output_is_one_document() {
        let mut cmd = Command::with_expr(Verb::Grade, "A");
        cmd.format = Format::Structured;
        let out = run(&cmd);
        let doc: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(doc["verb"], "grade");
        assert!(doc["result"].as_array().unwrap().len() >= 2);
    }
}
