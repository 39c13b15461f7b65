//! Command-line surface: single-model tables, full verification sweeps, and
//! the spin dimension identity, with JSON/CSV/table output.
//!
//! Exit codes: 0 when every brute/closed pair matches, 1 on a mismatch
//! (a falsified identity), 2 on invalid parameters.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use diracmult_core::error::Error;
use diracmult_core::solver::{
    cross_check, sp_prime_specs, sp_specs, u_specs, Candidate, ModelSpec, MultiplicityReport,
};
use diracmult_core::sp_models::{SpXPrimeSpec, SpXSpec};
use diracmult_core::spin::spin_dimension_check;
use diracmult_core::u_models::validate_u;
use diracmult_core::weights::FamilyKind;

#[derive(Parser)]
#[command(
    name = "diracmult",
    version,
    about = "Exact Dirac-cohomology multiplicities for unipotent representations of Sp(2n,R) and U(p,q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cross-check one X(p,q,eps,eta) model of Sp(2n,R)
    SpTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        eps: u8,
        #[arg(long)]
        eta: u8,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Cross-check one X'(p,q,eps,eta) model (n odd, p + q = n + 1)
    SpPrimeTable {
        #[arg(long)]
        n: usize,
        /// Optional; must equal (n + 1) / 2 when given
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        eps: u8,
        #[arg(long)]
        eta: u8,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Cross-check one X(p1,q1,xi) model of U(p1+p2, q1+q2)
    UTable {
        #[arg(long)]
        p1: usize,
        #[arg(long)]
        q1: usize,
        #[arg(long)]
        p2: usize,
        #[arg(long)]
        q2: usize,
        #[arg(long)]
        xi: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Cross-check every model of a family up to a rank bound
    Verify {
        #[arg(long, value_enum)]
        family: SweepFamily,
        /// Rank bound for the sp / sp-prime families
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Bound on p + q for the u family
        #[arg(long, default_value_t = 6)]
        max_pq: usize,
        /// Worker threads; output is identical for any value
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the spin module dimension identity over a family range
    SpinDim {
        #[arg(long, value_enum)]
        family: SpinFamily,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_pq: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFamily {
    Sp,
    SpPrime,
    U,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpinFamily {
    Sp,
    U,
}

/// One emitted record, in the exact field order of the wire format.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct Record {
    family: String,
    params: serde_json::Value,
    #[serde(rename = "xLambda")]
    x_lambda: Vec<String>,
    tau: Vec<String>,
    special: bool,
    stats: serde_json::Value,
    brute: u64,
    closed: u64,
    #[serde(rename = "match")]
    matched: bool,
}

/// Record fields plus the flattened key=value orderings used by csv/table.
struct Row {
    record: Record,
    params_flat: String,
    stats_flat: String,
}

fn rows_of_report(report: &MultiplicityReport) -> Vec<Row> {
    let (family, params): (&str, Vec<(&str, i64)>) = match &report.model {
        ModelSpec::SpX(s) => (
            "sp",
            vec![
                ("n", s.n as i64),
                ("k", s.k as i64),
                ("p", s.p as i64),
                ("q", s.q as i64),
                ("eps", s.eps as i64),
                ("eta", s.eta as i64),
            ],
        ),
        ModelSpec::SpXPrime(s) => (
            "sp-prime",
            vec![
                ("n", s.n as i64),
                ("k", s.k as i64),
                ("p", s.p as i64),
                ("q", s.q as i64),
                ("eps", s.eps as i64),
                ("eta", s.eta as i64),
            ],
        ),
        ModelSpec::Upq(s) => (
            "u",
            vec![
                ("p1", s.p1 as i64),
                ("q1", s.q1 as i64),
                ("p2", s.p2 as i64),
                ("q2", s.q2 as i64),
                ("xi", s.xi),
            ],
        ),
    };

    report
        .entries
        .iter()
        .map(|e| {
            let (special, stats): (bool, Vec<(&str, i64)>) = match &e.candidate {
                Candidate::Sp(c) => (
                    c.special,
                    vec![("u", c.u as i64), ("v", c.v as i64)],
                ),
                Candidate::U(c) => (
                    true,
                    vec![
                        ("r", c.r as i64),
                        ("s", c.s as i64),
                        ("t", c.t as i64),
                        ("u", c.u as i64),
                    ],
                ),
            };
            let record = Record {
                family: family.to_string(),
                params: json_object(&params),
                x_lambda: e.candidate.x_lambda().coord_strings(),
                tau: e.candidate.tau().coord_strings(),
                special,
                stats: json_object(&stats),
                brute: e.brute,
                closed: e.closed,
                matched: e.matches,
            };
            Row {
                record,
                params_flat: flatten(&params),
                stats_flat: flatten(&stats),
            }
        })
        .collect()
}

fn json_object(pairs: &[(&str, i64)]) -> serde_json::Value {
    serde_json::Value::Object(
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
            .collect(),
    )
}

fn flatten(pairs: &[(&str, i64)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn render(rows: &[Row], format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(&row.record).expect("record serializes"));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("family,params,xLambda,tau,special,stats,brute,closed,match\n");
            for row in rows {
                let r = &row.record;
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    r.family,
                    csv_quote(&row.params_flat),
                    csv_quote(&r.x_lambda.join(";")),
                    csv_quote(&r.tau.join(";")),
                    r.special,
                    csv_quote(&row.stats_flat),
                    r.brute,
                    r.closed,
                    r.matched
                ));
            }
            out
        }
        Format::Table => {
            let header = [
                "family", "params", "xLambda", "tau", "special", "stats", "brute", "closed",
                "match",
            ];
            let cells: Vec<[String; 9]> = rows
                .iter()
                .map(|row| {
                    let r = &row.record;
                    [
                        r.family.clone(),
                        row.params_flat.clone(),
                        r.x_lambda.join(";"),
                        r.tau.join(";"),
                        r.special.to_string(),
                        row.stats_flat.clone(),
                        r.brute.to_string(),
                        r.closed.to_string(),
                        r.matched.to_string(),
                    ]
                })
                .collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &cells {
                for (i, c) in row.iter().enumerate() {
                    widths[i] = widths[i].max(c.len());
                }
            }
            let fmt_row = |items: &[&str]| -> String {
                items
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let mut out = fmt_row(&header.map(|h| h)) + "\n";
            for row in &cells {
                let refs: Vec<&str> = row.iter().map(String::as_str).collect();
                out.push_str(&fmt_row(&refs));
                out.push('\n');
            }
            out
        }
    }
}

fn csv_quote(cell: &str) -> String {
    format!("\"{}\"", cell.replace('"', "\"\""))
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Param(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn table_command(model: ModelSpec, output: &OutputOpts) -> Result<ExitCode, Error> {
    let report = cross_check(&model)?;
    let rows = rows_of_report(&report);
    let mut text = render(&rows, output.format);
    if let (Format::Table, ModelSpec::SpXPrime(s)) = (output.format, &model) {
        if (s.eps, s.eta) == (0, 0) && s.p > 0 && s.q > 0 {
            text.push_str(
                "note: K-types are the union of the two (eps,eta)=(0,0) branches; overlaps counted once\n",
            );
        }
    }
    emit(&text, &output.out)?;
    Ok(if report.all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify_command(
    family: SweepFamily,
    max_n: usize,
    max_pq: usize,
    workers: usize,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Error> {
    if workers == 0 {
        return Err(Error::Param("workers must be positive".into()));
    }
    let models: Vec<ModelSpec> = match family {
        SweepFamily::Sp => sp_specs(max_n).into_iter().map(ModelSpec::SpX).collect(),
        SweepFamily::SpPrime => sp_prime_specs(max_n)
            .into_iter()
            .map(ModelSpec::SpXPrime)
            .collect(),
        SweepFamily::U => u_specs(max_pq).into_iter().map(ModelSpec::Upq).collect(),
    };
    if models.is_empty() {
        return Err(Error::Param(format!("no models in the requested range ({})", {
            match family {
                SweepFamily::Sp | SweepFamily::SpPrime => format!("max-n = {max_n}"),
                SweepFamily::U => format!("max-pq = {max_pq}"),
            }
        })));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Param(format!("cannot build worker pool: {e}")))?;
    // items are independent pure computations; collect preserves model order
    let reports: Vec<MultiplicityReport> = pool.install(|| {
        models
            .par_iter()
            .map(cross_check)
            .collect::<Result<Vec<_>, _>>()
    })?;

    let candidates: usize = reports.iter().map(|r| r.entries.len()).sum();
    let mismatches: usize = reports
        .iter()
        .flat_map(|r| &r.entries)
        .filter(|e| !e.matches)
        .count();
    let range = match family {
        SweepFamily::Sp | SweepFamily::SpPrime => format!("max-n={max_n}"),
        SweepFamily::U => format!("max-pq={max_pq}"),
    };
    let mut text = format!(
        "models={} candidates={candidates} matches={} mismatches={mismatches} ({range})\n",
        reports.len(),
        candidates - mismatches,
    );
    if let Some((report, entry)) = reports
        .iter()
        .flat_map(|r| r.entries.iter().map(move |e| (r, e)))
        .find(|(_, e)| !e.matches)
    {
        text.push_str(&format!(
            "first mismatch:\n  model: {}\n  xLambda: {}\n  tau: {}\n  brute: {} closed: {} witnesses: {}\n",
            report.model,
            entry.candidate.x_lambda(),
            entry.candidate.tau(),
            entry.brute,
            entry.closed,
            entry.witnesses.len()
        ));
    }
    emit(&text, out)?;
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn spin_command(
    family: SpinFamily,
    max_n: usize,
    max_pq: usize,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let families: Vec<FamilyKind> = match family {
        SpinFamily::Sp => (1..=max_n).map(|n| FamilyKind::sp(n).expect("n >= 1")).collect(),
        SpinFamily::U => {
            let mut v = Vec::new();
            for p in 0..=max_pq {
                for q in 0..=max_pq - p {
                    if p + q >= 1 {
                        v.push(FamilyKind::u(p, q).expect("p + q >= 1"));
                    }
                }
            }
            v
        }
    };
    let mut text = String::new();
    let mut all_ok = true;
    for fam in families {
        let c = spin_dimension_check(&fam)?;
        all_ok &= c.ok;
        text.push_str(&format!(
            "{fam}: total={} expected={} {}\n",
            c.total,
            c.expected,
            if c.ok { "ok" } else { "MISMATCH" }
        ));
    }
    text.push_str(if all_ok { "all ok\n" } else { "FAILED\n" });
    emit(&text, out)?;
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::SpTable { n, k, p, q, eps, eta, output } => {
            let spec = SpXSpec::new(n, k, p, q, eps, eta)?;
            table_command(ModelSpec::SpX(spec), &output)
        }
        Command::SpPrimeTable { n, k, p, q, eps, eta, output } => {
            let spec = SpXPrimeSpec::new(n, p, q, eps, eta)?;
            if let Some(k) = k {
                if k != spec.k {
                    return Err(Error::Param(format!(
                        "k = {k} inconsistent with (n + 1) / 2 = {}",
                        spec.k
                    )));
                }
            }
            table_command(ModelSpec::SpXPrime(spec), &output)
        }
        Command::UTable { p1, q1, p2, q2, xi, output } => {
            let spec = validate_u(p1, q1, p2, q2, xi)?;
            table_command(ModelSpec::Upq(spec), &output)
        }
        Command::Verify { family, max_n, max_pq, workers, out } => {
            verify_command(family, max_n, max_pq, workers, &out)
        }
        Command::SpinDim { family, max_n, max_pq, out } => {
            spin_command(family, max_n, max_pq, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
