//! The `exunits` command line. [`run`] is pure: it takes the argument list
//! and returns the exit code and both output streams, which keeps the binary
//! a one-liner and lets tests drive every subcommand in-process.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check or a
//! mathematical error, 2 on a usage or parse error.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bigpoly::{discriminant, IntPoly};
use crate::error::Error;
use crate::families::{
    evertse_bound, make_family, verify, Claim, FamilyId, FamilySpec, VerificationReport,
};
use crate::galois4::{classify_by_frobenius, classify_quartic, frobenius_profile};
use crate::monodisc::{disc_in_t, konig_check, reduced_disc};
use crate::numberfield::NFContext;
use crate::quadsub::{appendix_scan, embed_quadratic, tower_step};
use crate::realroots::signature;
use crate::report::ReportDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Longest parameter sweep accepted by `verify`.
const MAX_SWEEP: i64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "exunits", version, about = "Exceptional units and the number fields they generate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a family's claim checklist over a parameter range.
    Verify(VerifyArgs),
    /// Find the member f(x;t) whose field contains Q(sqrt d).
    Embed {
        #[arg(long, allow_hyphen_values = true)]
        d: BigInt,
    },
    /// Iterate t -> t^2 - 2, which preserves the quadratic subfield.
    Tower {
        #[arg(long, allow_hyphen_values = true)]
        t: BigInt,
        #[arg(long, default_value_t = 1)]
        steps: u32,
    },
    /// List t in [3, bound] with (t^2-4)(4t^2+9) a perfect square.
    Scan {
        #[arg(long)]
        bound: u64,
    },
    /// Galois group of an irreducible quartic.
    Galois(PolyArgs),
    /// Minimal polynomial of an element of a family's number field.
    Minpoly {
        #[command(flatten)]
        family: FamilyArgs,
        /// Polynomial in the generator, e.g. "x^2" or "1-x".
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Count real roots with a Sturm sequence.
    Sturm(PolyArgs),
    /// Print a family member.
    FamilyGen(FamilyArgs),
    /// Discriminant of a polynomial, or of a family as a polynomial in t.
    Disc {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Check the two König conditions on a reduced discriminant.
    Konig {
        /// Family whose reduced discriminant to use.
        #[arg(long, conflicts_with = "dred")]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<BigInt>,
        /// Reduced discriminant given directly, as a polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        dred: Option<String>,
        /// Semicolon-separated factorization supporting condition (i).
        #[arg(long, allow_hyphen_values = true)]
        candidates: Option<String>,
        #[arg(long, default_value_t = 3)]
        range: i64,
    },
    /// Evaluate 3 * 7^(n + 2r + 2).
    EvertseBound {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    family: String,
    /// Range `a:b` (or a single value) for the free parameter.
    #[arg(long, visible_alias = "k", visible_alias = "a", allow_hyphen_values = true)]
    t: Option<String>,
    /// Degree of g_n.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<BigInt>,
    /// Comma-separated parameters of a single instance, e.g. for F.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Comma-separated claims to keep in the output.
    #[arg(long)]
    checks: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long, visible_alias = "k", visible_alias = "a", allow_hyphen_values = true)]
    t: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PolyArgs {
    /// Polynomial expression, e.g. "x^4+8x+12".
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Comma-separated coefficients, highest degree first.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownFamily(_) | Error::Arity { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

struct Output {
    doc: String,
    ok: bool,
    notes: Vec<String>,
}

type CmdResult = std::result::Result<Output, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            let mut stderr = out.notes.join("\n");
            if !stderr.is_empty() {
                stderr.push('\n');
            }
            Outcome {
                code: if out.ok { EXIT_OK } else { EXIT_FAILURE },
                stdout: out.doc,
                stderr,
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Math(msg)) => Outcome {
            code: EXIT_FAILURE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn document(invocation: &[(&str, String)], results: Vec<Value>) -> String {
    let inv: BTreeMap<String, String> = invocation
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    let mut s = ReportDocument::new(inv, results).to_json();
    s.push('\n');
    s
}

fn single(command: &str, extra: &[(&str, String)], payload: Value) -> Output {
    let mut inv = vec![("command", command.to_string())];
    inv.extend(extra.iter().cloned());
    Output {
        doc: document(&inv, vec![payload]),
        ok: true,
        notes: vec![],
    }
}

fn parse_bigint(s: &str) -> std::result::Result<BigInt, Failure> {
    s.trim().parse().map_err(|_| usage(format!("`{s}` is not an integer")))
}

fn parse_list(s: &str) -> std::result::Result<Vec<BigInt>, Failure> {
    s.split(',').map(parse_bigint).collect()
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), Failure> {
    let bad = || usage(format!("`{s}` is not a range a:b"));
    let (a, b) = match s.split_once(':') {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(usage(format!("empty range {s}")));
    }
    if b - a >= MAX_SWEEP {
        return Err(usage(format!("range {s} exceeds {MAX_SWEEP} values")));
    }
    Ok((a, b))
}

fn parse_poly(s: &str) -> std::result::Result<IntPoly, Failure> {
    Ok(s.parse::<IntPoly>()?)
}

fn poly_from(args: &PolyArgs) -> std::result::Result<IntPoly, Failure> {
    match (&args.poly, &args.coeffs) {
        (Some(p), _) => parse_poly(p),
        (None, Some(c)) => {
            let mut coeffs = parse_list(c)?;
            coeffs.reverse();
            Ok(IntPoly::new(coeffs))
        }
        (None, None) => Err(usage("one of --poly or --coeffs is required")),
    }
}

/// Builds the parameter list from `--n`, `--t` and `--params`.
fn family_spec(family: &str, n: Option<&BigInt>, t: Option<&BigInt>, params: Option<&str>) -> std::result::Result<FamilySpec, Failure> {
    let id: FamilyId = family.parse()?;
    let params = match (params, t) {
        (Some(p), None) => parse_list(p)?,
        (None, Some(t)) => {
            let mut v = vec![];
            if id == FamilyId::G {
                v.push(n.cloned().unwrap_or_else(|| BigInt::from(4)));
            }
            v.push(t.clone());
            v
        }
        (Some(_), Some(_)) => return Err(usage("--params and --t are mutually exclusive")),
        (None, None) => return Err(usage("a parameter is required (--t or --params)")),
    };
    Ok(FamilySpec::new(id, params)?)
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Verify(args) => cmd_verify(args),
        Command::Embed { d } => {
            let e = embed_quadratic(&d)?;
            let payload = json!({
                "t": e.solution.t.to_string(),
                "s": e.solution.s.to_string(),
                "d": e.solution.d.to_string(),
            });
            let mut out = single("embed", &[("d", d.to_string())], payload);
            if !e.in_range {
                out.notes.push(format!(
                    "note: t = {} is below 4; the D4 and subfield claims for f(x;t) need separate checking there",
                    e.solution.t
                ));
            }
            Ok(out)
        }
        Command::Tower { t, steps } => {
            let mut current = t.clone();
            let mut rows = vec![];
            for _ in 0..steps {
                let step = tower_step(&current)?;
                rows.push(json!({
                    "t": step.t.to_string(),
                    "next": step.next.to_string(),
                    "d": step.d.to_string(),
                }));
                current = step.next;
            }
            let inv = [
                ("command", "tower".to_string()),
                ("t", t.to_string()),
                ("steps", steps.to_string()),
            ];
            Ok(Output { doc: document(&inv, rows), ok: true, notes: vec![] })
        }
        Command::Scan { bound } => {
            let scan = appendix_scan(bound)?;
            let hits: Vec<String> = scan.hits.iter().map(|h| h.t.to_string()).collect();
            let mut out = single("scan", &[("bound", bound.to_string())], json!({ "hits": hits }));
            for h in scan.hits.iter().chain(&scan.small_hits) {
                out.notes.push(format!("t = {}: {} = {}^2", h.t, h.value, h.root));
            }
            Ok(out)
        }
        Command::Galois(args) => {
            let p = poly_from(&args)?;
            let g = classify_quartic(&p)?;
            let profile = frobenius_profile(&p, crate::galois4::DEFAULT_PRIME_BOUND)?;
            let consistent = profile.consistent_with(g.class);
            let observed: BTreeMap<String, usize> =
                profile.observed.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            let smallest = classify_by_frobenius(&profile)?.map(|c| c.to_string());
            let payload = json!({
                "polynomial": p.to_string(),
                "class": g.class.to_string(),
                "discriminant": g.discriminant.to_string(),
                "discriminant_is_square": g.discriminant_is_square,
                "resolvent": g.resolvent.to_string(),
                "resolvent_root": g.resolvent_root.map(|r| r.to_string()),
                "frobenius": {
                    "observed": observed,
                    "primes_used": profile.primes_used.len().to_string(),
                    "consistent": consistent,
                    "smallest_consistent_group": smallest,
                },
            });
            let mut out = single("galois", &[("poly", p.to_string())], payload);
            out.ok = consistent;
            if !consistent {
                out.notes.push("Frobenius cycle types contradict the classification".into());
            }
            Ok(out)
        }
        Command::Minpoly { family, element } => {
            let spec = family_spec(&family.family, family.n.as_ref(), family.t.as_ref(), family.params.as_deref())?;
            let expr = parse_poly(&element)?;
            let ctx = NFContext::new(make_family(&spec)?)?;
            let mp = ctx.minpoly(&ctx.from_poly(&expr))?;
            let text = match &mp.integral {
                Some(p) => p.to_string(),
                None => mp.rational.to_string(),
            };
            Ok(single(
                "minpoly",
                &[("family", spec.label()), ("element", element)],
                Value::String(text),
            ))
        }
        Command::Sturm(args) => {
            let p = poly_from(&args)?;
            let sig = signature(&p)?;
            let payload = json!({
                "polynomial": p.to_string(),
                "real_roots": sig.r1.to_string(),
                "complex_pairs": sig.r2.to_string(),
                "multiple_roots": sig.multiple_roots,
            });
            Ok(single("sturm", &[("poly", p.to_string())], payload))
        }
        Command::FamilyGen(args) => {
            let spec = family_spec(&args.family, args.n.as_ref(), args.t.as_ref(), args.params.as_deref())?;
            let p = make_family(&spec)?;
            let payload = json!({
                "family": spec.id.to_string(),
                "params": spec.params.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "polynomial": p.to_string(),
                "in_range": spec.in_range(),
            });
            Ok(single("family-gen", &[("family", spec.label())], payload))
        }
        Command::Disc { family, n, poly } => match (family, poly) {
            (Some(f), None) => {
                let spec = family_spec(&f, n.as_ref(), Some(&BigInt::from(0)), None)?;
                let dt = disc_in_t(&spec)?;
                let red = reduced_disc(&dt)?;
                let payload = json!({
                    "family": spec.id.to_string(),
                    "discriminant": dt.poly.display_var("t"),
                    "reduced": red.display_var("t"),
                    "degree_bound_used": dt.degree_bound_used.to_string(),
                    "verification_points": dt.verification_points.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                });
                Ok(single("disc", &[("family", f)], payload))
            }
            (None, Some(p)) => {
                let poly = parse_poly(&p)?;
                let d = discriminant(&poly)?;
                Ok(single("disc", &[("poly", p)], json!({ "discriminant": d.to_string() })))
            }
            _ => Err(usage("exactly one of --family or --poly is required")),
        },
        Command::Konig { family, n, dred, candidates, range } => {
            let (label, dred) = match (family, dred) {
                (Some(f), None) => {
                    let spec = family_spec(&f, n.as_ref(), Some(&BigInt::from(0)), None)?;
                    (f, reduced_disc(&disc_in_t(&spec)?)?)
                }
                (None, Some(d)) => (d.clone(), parse_poly(&d)?),
                _ => return Err(usage("exactly one of --family or --dred is required")),
            };
            let cands = match &candidates {
                Some(c) => c.split(';').map(parse_poly).collect::<std::result::Result<Vec<_>, _>>()?,
                None => vec![],
            };
            let report = konig_check(&dred, &cands, range)?;
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            if let Value::Object(map) = &mut value {
                map.insert("reduced_disc".into(), Value::String(report.reduced_disc.display_var("t")));
                if let Some(Value::Array(notes)) = map.get_mut("factors") {
                    for (note, f) in notes.iter_mut().zip(&report.factors) {
                        note["factor"] = Value::String(f.factor.display_var("t"));
                    }
                }
            }
            let mut out = single("konig", &[("input", label), ("range", range.to_string())], value);
            out.ok = report.passes();
            Ok(out)
        }
        Command::EvertseBound { n, r } => {
            let b = evertse_bound(n, r)?;
            Ok(single(
                "evertse-bound",
                &[("n", n.to_string()), ("r", r.to_string())],
                json!({ "bound": b.to_string() }),
            ))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let id: FamilyId = args.family.parse()?;
    let keep: Option<Vec<Claim>> = match &args.checks {
        Some(c) => Some(c.split(',').map(|s| s.trim().parse()).collect::<crate::Result<_>>()?),
        None => None,
    };
    let specs: Vec<FamilySpec> = match (&args.params, &args.t) {
        (Some(p), None) => vec![FamilySpec::new(id, parse_list(p)?)?],
        (None, Some(range)) => {
            let (a, b) = parse_range(range)?;
            let n = match id {
                FamilyId::G => Some(args.n.clone().unwrap_or_else(|| BigInt::from(4))),
                _ if args.n.is_some() => return Err(usage("--n only applies to family g")),
                _ => None,
            };
            (a..=b)
                .map(|t| FamilySpec::new(id, n.iter().cloned().chain([BigInt::from(t)]).collect()))
                .collect::<crate::Result<_>>()?
        }
        (Some(_), Some(_)) => return Err(usage("--params and --t are mutually exclusive")),
        (None, None) => return Err(usage("a parameter range is required (--t or --params)")),
    };

    use rayon::prelude::*;
    let reports: Vec<VerificationReport> = specs
        .par_iter()
        .map(|s| {
            let r = verify(s);
            match &keep {
                Some(k) => r.filtered(k),
                None => r,
            }
        })
        .collect();

    let mut notes = vec![];
    for r in &reports {
        if !r.in_range {
            notes.push(format!("{}: outside the documented parameter range", r.spec.label()));
        }
        for c in r.failures() {
            notes.push(format!("{}: {} failed ({})", r.spec.label(), c.claim, c.detail));
        }
    }
    let ok = reports.iter().all(VerificationReport::all_pass);

    let mut inv = vec![("command", "verify".to_string()), ("family", args.family.clone())];
    if let Some(t) = &args.t {
        inv.push(("t", t.clone()));
    }
    if let Some(n) = &args.n {
        inv.push(("n", n.to_string()));
    }
    if let Some(p) = &args.params {
        inv.push(("params", p.clone()));
    }
    if let Some(c) = &args.checks {
        inv.push(("checks", c.clone()));
    }

    let doc = match args.format {
        Format::Json => {
            let results = reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("reports serialize"))
                .collect();
            document(&inv, results)
        }
        Format::Csv => to_csv(&reports).map_err(|e| Failure::Math(e.to_string()))?,
    };
    Ok(Output { doc, ok, notes })
}

/// One row per instance, one column per claim that appears in any report.
fn to_csv(reports: &[VerificationReport]) -> std::result::Result<String, csv::Error> {
    let claims: Vec<Claim> = Claim::ALL
        .into_iter()
        .filter(|c| reports.iter().any(|r| r.status(*c).is_some()))
        .collect();
    let mut w = csv::Writer::from_writer(vec![]);
    let mut header = vec!["family".to_string(), "params".into(), "polynomial".into(), "in_range".into()];
    header.extend(claims.iter().map(|c| c.to_string()));
    w.write_record(&header)?;
    for r in reports {
        let params: Vec<String> = r.spec.params.iter().map(|p| p.to_string()).collect();
        let mut row = vec![
            r.spec.id.to_string(),
            params.join(" "),
            r.polynomial.to_string(),
            r.in_range.to_string(),
        ];
        row.extend(claims.iter().map(|c| r.status(*c).map(|s| s.to_string()).unwrap_or_default()));
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
