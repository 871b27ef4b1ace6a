//! Batch command-line interface: parse problem files, dispatch analyses,
//! emit one deterministic report on standard output.
//!
//! Exit codes: 0 success, 2 parse/validation errors (message on stderr,
//! nothing on stdout), 3 indeterminate verdict under `--strict`.

use crate::groebner::Ideal;
use crate::jdual::{analyze, AnalysisOptions};
use crate::problem::{resolve, ProblemFile, ResolvedProblem};
use crate::ratmap::{compose, equivalent, image, restrict, validate_datum, RationalDatum};
use crate::rees::{rees_ideal, sgd};
use crate::report::{printed_forms, printed_ideal, Report, SecondInputJson, SgdJson, TimingJson};
use crate::text::parse_poly;
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(
    name = "cremona",
    version,
    about = "Decide whether a rational map between reduced projective varieties is birational onto its image, and extract the inverse"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Field characteristic (0 = rationals, else a prime < 2^31); overrides the file
    #[arg(long, global = true)]
    field: Option<u64>,
    /// Monomial order of the source ring
    #[arg(long, global = true, value_parser = ["grevlex", "lex"])]
    order: Option<String>,
    /// Exit with code 3 on an indeterminate verdict
    #[arg(long, global = true)]
    strict: bool,
    /// Degree cap for the inverse null-space fallback
    #[arg(long = "degree-cap", global = true)]
    degree_cap: Option<u32>,
    /// Report format
    #[arg(long, global = true, value_parser = ["json", "text"], default_value = "json")]
    format: String,
    /// File of minimal primes of the source ideal ([prime] blocks or a JSON list of lists)
    #[arg(long, global = true)]
    primes: Option<PathBuf>,
    /// Include wall-clock phase timings (JSON reports are then no longer byte-reproducible)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Image ideal of the map and its dimension
    Image { file: PathBuf },
    /// Jacobian dual rank fields only
    Jdrank { file: PathBuf },
    /// Full birationality decision with inverse extraction and sufficient tests
    CheckBirational { file: PathBuf },
    /// Alias of check-birational focused on the inverse
    Inverse { file: PathBuf },
    /// Maximal-linear-rank sufficient test
    LinearRank { file: PathBuf },
    /// Semilinear generation degree
    Sgd { file: PathBuf },
    /// Composite g(f): FILE defines f, SECOND defines g over the image of f
    Compose { file: PathBuf, second: PathBuf },
    /// Check that SECOND represents the inverse of FILE
    VerifyInverse { file: PathBuf, second: PathBuf },
    /// Restrict the map to a supplied prime (exactly one prime expected)
    Restrict { file: PathBuf },
}

struct Failure {
    message: String,
    code: i32,
}

fn fail(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version print to stdout with success
            return if e.use_stderr() {
                eprint!("{}", e);
                2
            } else {
                print!("{}", e);
                0
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            if cli.strict && report.verdict.as_deref() == Some("indeterminate") {
                eprintln!("indeterminate verdict (strict mode): no report written");
                return 3;
            }
            let rendered = match cli.format.as_str() {
                "text" => report.to_text(),
                _ => report.to_json(),
            };
            print!("{}", rendered);
            0
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(format!("cannot read {}: {}", path.display(), e)))
}

fn load_problem(cli: &Cli, path: &Path) -> Result<(ResolvedProblem, RationalDatum), Failure> {
    let text = read_file(path)?;
    let pf = ProblemFile::parse(&text)
        .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
    let mut resolved = resolve(&pf, cli.field, cli.order.as_deref())
        .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
    if let Some(primes_path) = &cli.primes {
        let primes_text = read_file(primes_path)?;
        let extra = parse_primes(&primes_text, &resolved)
            .map_err(|e| fail(format!("{}: {}", primes_path.display(), e)))?;
        resolved.primes.extend(extra);
    }
    if cli.degree_cap.is_some() {
        resolved.degree_cap = cli.degree_cap;
    }
    let datum = validate_datum(
        resolved.source.clone(),
        resolved.forms.clone(),
        &resolved.primes,
    )
    .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
    Ok((resolved, datum))
}

/// A primes file is either repeated `[prime]` blocks or a JSON list of
/// generator lists, parsed in the main problem's ring.
fn parse_primes(text: &str, resolved: &ResolvedProblem) -> Result<Vec<Ideal>, String> {
    let lists: Vec<Vec<String>> = if text.trim_start().starts_with('[')
        && !text.trim_start().starts_with("[prime]")
    {
        serde_json::from_str(text).map_err(|e| format!("invalid JSON primes file: {}", e))?
    } else {
        let mut lists: Vec<Vec<String>> = Vec::new();
        for raw in text.lines() {
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if line == "[prime]" {
                lists.push(Vec::new());
                continue;
            }
            match lists.last_mut() {
                Some(cur) => cur.push(line.to_string()),
                None => return Err("primes file must start with a [prime] block".to_string()),
            }
        }
        lists
    };
    lists
        .iter()
        .map(|gens| {
            let polys = gens
                .iter()
                .map(|s| {
                    parse_poly(s, &resolved.ring)
                        .map_err(|e| format!("in prime generator '{}': {}", s, e))
                })
                .collect::<Result<Vec<_>, String>>()?;
            Ok(Ideal::new(resolved.ring.clone(), polys))
        })
        .collect()
}

fn base_report(command: &str, resolved: &ResolvedProblem, datum: &RationalDatum) -> Report {
    Report {
        command: command.to_string(),
        characteristic: resolved.characteristic,
        vars: resolved.ring.vars().to_vec(),
        ideal: printed_ideal(datum.source()),
        map: printed_forms(datum),
        ..Default::default()
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Image { file } => {
            let (resolved, datum) = load_problem(cli, file)?;
            let mut report = base_report("image", &resolved, &datum);
            report.note_condition_i(datum.condition_i());
            let t0 = Instant::now();
            let img = image(&datum);
            report.image_ideal = Some(printed_ideal(&img.ideal));
            report.image_dim = Some((&img.dimension).into());
            if cli.timings {
                report.timings = Some(vec![TimingJson {
                    phase: "image".into(),
                    seconds: t0.elapsed().as_secs_f64(),
                }]);
            }
            Ok(report)
        }
        Command::Jdrank { file } => {
            let (resolved, datum) = load_problem(cli, file)?;
            let options = AnalysisOptions {
                primes: resolved.primes.clone(),
                ..Default::default()
            };
            let analysis = analyze(&datum, &options);
            let mut report = base_report("jdrank", &resolved, &datum);
            report.absorb(&analysis, cli.timings);
            Ok(report)
        }
        Command::CheckBirational { file } | Command::Inverse { file } => {
            let name = match &cli.command {
                Command::Inverse { .. } => "inverse",
                _ => "check-birational",
            };
            let (resolved, datum) = load_problem(cli, file)?;
            let options = AnalysisOptions {
                extract_inverse: true,
                sufficient_tests: true,
                degree_cap: resolved.degree_cap,
                primes: resolved.primes.clone(),
            };
            let analysis = analyze(&datum, &options);
            let mut report = base_report(name, &resolved, &datum);
            report.absorb(&analysis, cli.timings);
            Ok(report)
        }
        Command::LinearRank { file } => {
            let (resolved, datum) = load_problem(cli, file)?;
            let mut report = base_report("linear-rank", &resolved, &datum);
            report.note_condition_i(datum.condition_i());
            let t = crate::jdual::linear_rank_test(&datum);
            report.linear_rank_test = Some(crate::report::LinearRankJson {
                applicable: t.applicable,
                fires: t.fires,
                phi1_rank: t.phi1_rank.map(|v| v as u64),
                image_dim: t.image_dim.map(|v| v as u64),
            });
            if !t.applicable {
                report
                    .warnings
                    .push("linear-rank test requires a zero source ideal".to_string());
            }
            Ok(report)
        }
        Command::Sgd { file } => {
            let (resolved, datum) = load_problem(cli, file)?;
            let mut report = base_report("sgd", &resolved, &datum);
            report.note_condition_i(datum.condition_i());
            let rees = rees_ideal(&datum);
            let s = sgd(&rees);
            report.sgd = Some(SgdJson {
                value: s.value.map(|v| v as u64),
                ambient: s.ambient.map(|v| v as u64),
            });
            if s.value.is_none() {
                report
                    .warnings
                    .push("degree-1 slice is empty: sgd undefined".to_string());
            }
            Ok(report)
        }
        Command::Compose { file, second } => {
            let (resolved, f) = load_problem(cli, file)?;
            let (resolved2, g) = load_second(cli, second, &resolved)?;
            let composite =
                compose(&g, &f).map_err(|e| fail(format!("composition failed: {}", e)))?;
            let mut report = base_report("compose", &resolved, &f);
            report.second_input = Some(SecondInputJson {
                vars: resolved2.ring.vars().to_vec(),
                ideal: printed_ideal(g.source()),
                map: printed_forms(&g),
            });
            report.note_condition_i(f.condition_i());
            report.composite = Some(printed_forms(&composite));
            report.composite_degree = Some(composite.degree() as u64);
            Ok(report)
        }
        Command::VerifyInverse { file, second } => {
            let (resolved, f) = load_problem(cli, file)?;
            let (resolved2, g) = load_second(cli, second, &resolved)?;
            let verified = crate::jdual::verify_inverse(&f, &g)
                .map_err(|e| fail(format!("verification failed: {}", e)))?;
            let mut report = base_report("verify-inverse", &resolved, &f);
            report.second_input = Some(SecondInputJson {
                vars: resolved2.ring.vars().to_vec(),
                ideal: printed_ideal(g.source()),
                map: printed_forms(&g),
            });
            report.note_condition_i(f.condition_i());
            report.equivalent = Some(verified);
            report.inverse_verified = Some(Some(verified));
            Ok(report)
        }
        Command::Restrict { file } => {
            let (resolved, datum) = load_problem(cli, file)?;
            if resolved.primes.len() != 1 {
                return Err(fail(format!(
                    "restrict expects exactly one prime (got {}); supply a [prime] block or --primes",
                    resolved.primes.len()
                )));
            }
            let restricted = restrict(&datum, &resolved.primes[0])
                .map_err(|e| fail(format!("restriction failed: {}", e)))?;
            let mut report = base_report("restrict", &resolved, &datum);
            report.note_condition_i(datum.condition_i());
            report
                .warnings
                .push("primality of the supplied ideal is assumed, not verified".to_string());
            report.restricted_ideal = Some(printed_ideal(restricted.source()));
            report.restricted_map = Some(printed_forms(&restricted));
            Ok(report)
        }
    }
}

/// Second problem file of the two-file commands: over the target of the
/// first map, matched by position; its characteristic must agree.
fn load_second(
    cli: &Cli,
    path: &Path,
    first: &ResolvedProblem,
) -> Result<(ResolvedProblem, RationalDatum), Failure> {
    let text = read_file(path)?;
    let pf = ProblemFile::parse(&text)
        .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
    let resolved = resolve(&pf, Some(first.characteristic), cli.order.as_deref())
        .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
    if let Some(chr) = pf.characteristic {
        if chr != first.characteristic && cli.field.is_none() {
            return Err(fail(format!(
                "{}: characteristic {} differs from the first file's {}",
                path.display(),
                chr,
                first.characteristic
            )));
        }
    }
    let datum = validate_datum(resolved.source.clone(), resolved.forms.clone(), &[])
        .map_err(|e| fail(format!("{}: {}", path.display(), e)))?;
    Ok((resolved, datum))
}

/// Composite-vs-identity check shared with the acceptance suite.
pub fn verify_pair(f: &RationalDatum, g: &RationalDatum) -> Result<bool, String> {
    let composite = compose(g, f).map_err(|e| e.to_string())?;
    let id = crate::ratmap::identity_datum(f.source()).map_err(|e| e.to_string())?;
    equivalent(&composite, &id).map_err(|e| e.to_string())
}
