use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gaha::enveloping::{default_nus, verify_oda};
use gaha::exact_kernel::{parse_rational, Rational};
use gaha::hecke_algebra::{verify_relations, verify_star_random, HeckeAlgebra};
use gaha::lie_models::LieModel;
use gaha::principal_series::{scan_line, unitarity_scan, PrincipalSeriesFamily, ScanRecord};
use gaha::report::{all_passed, CheckResult};
use gaha::root_data::{table_one, GroupDescriptor, GroupFamily};
use gaha::tensor_model::verify_all;

const MODULE_RANK: usize = 4;
const TENSOR_RANK: usize = 3;

#[derive(Parser)]
#[command(name = "gaha", about = "Graded affine Hecke algebras of classical real groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system, parameters and Hecke algebra of a group.
    Info {
        group: String,
        #[arg(long, value_enum, default_value_t = InfoFormat::Text)]
        format: InfoFormat,
    },
    /// Run a verification suite and write a JSON report.
    Verify {
        group: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Truncation degree for the oda suite.
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the rank guards. Cost grows like |W|² for modules and
        /// dim(V)^(2k) for tensor suites.
        #[arg(long)]
        force: bool,
    },
    /// Hermitian forms and unitarity along a line or at listed points.
    Scan {
        group: String,
        /// `a..b/n`: n+1 equally spaced multiples t·ρ_c, t from a to b.
        #[arg(long, conflicts_with_all = ["grid", "nu"])]
        line: Option<String>,
        /// File with one point per line, coordinates separated by commas,
        /// semicolons or spaces.
        #[arg(long, conflicts_with = "nu")]
        grid: Option<PathBuf>,
        /// A single point, e.g. `1/2,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InfoFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Suite {
    Relations,
    Tensor,
    Oda,
    All,
}

enum Failure {
    Usage(anyhow::Error),
    Verification(String),
    Other(anyhow::Error),
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn other(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Other(e.into())
}

fn parse_group(s: &str) -> Result<GroupDescriptor, Failure> {
    s.parse().map_err(|e| usage(anyhow!("{e}; expected GL(n,R), U(p,q), Sp(2n,R) or O(p,q)")))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())).map_err(other),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(other),
    }
}

fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

#[derive(Serialize)]
struct Info<'a> {
    #[serde(flatten)]
    row: &'a gaha::root_data::TableOneRow,
    algebra: String,
    weyl_order: usize,
}

fn cmd_info(group: &str, format: InfoFormat) -> Result<(), Failure> {
    let g = parse_group(group)?;
    let row = table_one(&g);
    let alg = HeckeAlgebra::from_group(&g).map_err(other)?;
    let info = Info { row: &row, algebra: row.hecke.to_string(), weyl_order: alg.weyl().len() };
    let text = match format {
        InfoFormat::Json => serde_json::to_string_pretty(&info).map_err(other)? + "\n",
        InfoFormat::Text => {
            let mults: Vec<String> = row.multiplicities.iter().map(|m| format!("{}:{}", m.class, m.dim)).collect();
            let mut s = format!(
                "group: {g}\nPhi: {}\nPhi0: {}\nk: {}\nmultiplicities: {}\nc_short: {}\nc_long: {}\nalgebra: {}\n|W|: {}\n",
                row.phi,
                row.phi0,
                row.k,
                mults.join(" "),
                opt(&row.c_short_table),
                opt(&row.c_long_table),
                info.algebra,
                info.weyl_order,
            );
            if let Some(note) = &row.note {
                s.push_str(&format!("note: {note}\n"));
            }
            s
        }
    };
    emit(None, &text)
}

fn guard(ok: bool, force: bool, what: &str) -> Result<(), Failure> {
    if ok || force {
        Ok(())
    } else {
        Err(usage(anyhow!("{what} is outside the default rank bounds; pass --force to run it anyway")))
    }
}

fn oda_allowed(g: &GroupDescriptor) -> bool {
    g.real_rank() == 1 || (g.family == GroupFamily::GL && g.p <= 3)
}

fn run_suites(g: &GroupDescriptor, suite: Suite, d: usize, force: bool) -> Result<Vec<CheckResult>, Failure> {
    let k = g.real_rank();
    let mut out = Vec::new();
    if matches!(suite, Suite::Relations | Suite::All) {
        guard(k <= MODULE_RANK, force, "the relations suite")?;
        let alg = HeckeAlgebra::from_group(g).map_err(other)?;
        out.extend(verify_relations(&alg));
        out.extend(verify_star_random(&alg, 100, 7));
        let fam = PrincipalSeriesFamily::new(&alg).map_err(other)?;
        for nu in default_nus(k) {
            out.extend(fam.at(&nu).verify());
        }
    }
    if matches!(suite, Suite::Tensor | Suite::All) {
        guard(k <= TENSOR_RANK, force, "the tensor suite")?;
        let model = LieModel::build(g).map_err(other)?;
        out.extend(verify_all(&model));
    }
    let oda = suite == Suite::Oda || (suite == Suite::All && oda_allowed(g));
    if oda {
        guard(oda_allowed(g), force, "the oda suite")?;
        let model = LieModel::build(g).map_err(other)?;
        out.extend(verify_oda(&model, d, &default_nus(k)));
    }
    Ok(out)
}

fn cmd_verify(group: &str, suite: Suite, d: usize, out: Option<&Path>, force: bool) -> Result<(), Failure> {
    let g = parse_group(group)?;
    let results = run_suites(&g, suite, d, force)?;
    emit(out, &(serde_json::to_string_pretty(&results).map_err(other)? + "\n"))?;
    if all_passed(&results) {
        Ok(())
    } else {
        let first = results.iter().find(|r| !r.passed()).expect("a failure");
        Err(Failure::Verification(format!(
            "{} failed for {} ({}): {}",
            first.check,
            first.group,
            first.parameters,
            first.witness.as_deref().unwrap_or("")
        )))
    }
}

fn parse_point(s: &str, k: usize) -> anyhow::Result<Vec<Rational>> {
    let nu: Vec<Rational> = s
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    if nu.len() != k {
        bail!("point {s:?} has {} coordinates, expected {k}", nu.len());
    }
    Ok(nu)
}

fn parse_line(s: &str) -> anyhow::Result<Vec<Rational>> {
    let bad = || anyhow!("line {s:?} is not of the form a..b/n");
    let (range, n) = s.rsplit_once('/').ok_or_else(bad)?;
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        bail!("line {s:?} needs at least one step");
    }
    let (a, b) = (parse_rational(a)?, parse_rational(b)?);
    let step = (&b - &a) / Rational::from_integer((n as i64).into());
    Ok((0..=n).map(|i| &a + &step * Rational::from_integer((i as i64).into())).collect())
}

fn records_csv(rows: &[ScanRecord]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

struct ScanArgs<'a> {
    line: Option<&'a str>,
    grid: Option<&'a Path>,
    nu: Option<&'a str>,
    out: Option<&'a Path>,
    format: Format,
    force: bool,
}

fn cmd_scan(group: &str, a: ScanArgs) -> Result<(), Failure> {
    let g = parse_group(group)?;
    let k = g.real_rank();
    guard(k <= MODULE_RANK, a.force, "the scan")?;
    let alg = HeckeAlgebra::from_group(&g).map_err(other)?;
    let fam = PrincipalSeriesFamily::new(&alg).map_err(other)?;
    let points = match (a.line, a.grid, a.nu) {
        (Some(l), _, _) => scan_line(&fam, &parse_line(l).map_err(usage)?),
        (_, Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(other)?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_point(l, k))
                .collect::<anyhow::Result<_>>()
                .map_err(usage)?
        }
        (_, _, Some(nu)) => vec![parse_point(nu, k).map_err(usage)?],
        _ => return Err(usage(anyhow!("one of --line, --grid or --nu is required"))),
    };
    let rows = unitarity_scan(&fam, &points);
    let text = match a.format {
        Format::Csv => records_csv(&rows).map_err(other)?,
        Format::Json => serde_json::to_string_pretty(&rows).map_err(other)? + "\n",
    };
    emit(a.out, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Info { group, format } => cmd_info(group, *format),
        Command::Verify { group, suite, degree, out, force } => {
            cmd_verify(group, *suite, *degree, out.as_deref(), *force)
        }
        Command::Scan { group, line, grid, nu, out, format, force } => cmd_scan(
            group,
            ScanArgs {
                line: line.as_deref(),
                grid: grid.as_deref(),
                nu: nu.as_deref(),
                out: out.as_deref(),
                format: *format,
                force: *force,
            },
        ),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            eprintln!("usage: gaha info <group> | verify <group> [--suite S] [--degree d] | scan <group> --line a..b/n | --grid file");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
