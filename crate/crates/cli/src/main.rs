//! `spinq`: generating series, spin character tables, Q-function expansions
//! and the identity verification suites.
//!
//! Exit status is 0 when everything checked passes, 1 when a verified
//! identity fails and 2 for usage, file or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use spinq_core::fock::{dim_series, euler_s_series, euler_series, SectorModel};
use spinq_core::partitions::{GroupData, Partition};
use spinq_core::series::PowerSeries;
use spinq_core::spinchar::{char_table, dim_series_point};
use spinq_core::symfunc::{omega_dim_series, p_in_Q, q_in_p, OmegaElem, Q_in_p};
use spinq_core::verify::{run_suite, suites, Report, VerifyConfig};
use spinq_core::Error;

#[derive(Parser, Debug)]
#[command(name = "spinq", version, about = "Exact spin characters, Schur Q-functions and twisted Fock spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Config {
    /// Group description (JSON). Defaults to the model's group, else the trivial group.
    #[arg(long, value_name = "FILE")]
    group: Option<PathBuf>,
    /// Sector model (JSON).
    #[arg(long, value_name = "FILE")]
    model: Option<PathBuf>,
    /// Truncation degree.
    #[arg(long = "N", value_name = "INT")]
    n: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every random draw.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeriesKind {
    Omega,
    PointDim,
    FockDim,
    Euler,
    EulerS,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generating series up to t^N.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        /// Exponent for euler and euler-s; defaults to d0 - d1 of the model, else 1.
        #[arg(long, allow_negative_numbers = true)]
        e: Option<i64>,
        #[command(flatten)]
        cfg: Config,
    },
    /// Character table in degree n against the even split classes.
    Chartable {
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        cfg: Config,
    },
    /// Graded dimensions of the Fock space of a sector model.
    FockDim {
        #[command(flatten)]
        cfg: Config,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Degree bound for Fock space operator identities.
        #[arg(long = "D", value_name = "INT")]
        d: Option<u32>,
        /// Random samples per randomized check.
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        cfg: Config,
    },
    /// Q-lambda operations.
    Qlambda {
        #[command(subcommand)]
        command: QlambdaCommand,
    },
    /// Expand q_n or Q_lambda in power sums, or p_mu in the Q basis.
    Expand {
        /// `q`, `Q` or `p`.
        #[arg(value_parser = ["p", "q", "Q"])]
        basis: String,
        /// A degree for `q`, a partition such as `3,1` otherwise.
        index: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum QlambdaCommand {
    /// Run the Q-lambda identity suite and print a JSON report.
    Verify {
        #[arg(long, default_value_t = 4)]
        lines: usize,
        #[arg(long, default_value_t = 2)]
        neg: usize,
        /// Number of splitting variables.
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long = "N", default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// What a command produced: text for stdout and whether its checks passed.
struct Outcome {
    stdout: String,
    passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, passed: true }
    }
}

impl Config {
    fn load_model(&self) -> Result<Option<SectorModel>, Failure> {
        Ok(match &self.model {
            Some(p) => Some(SectorModel::load(p)?),
            None => None,
        })
    }

    fn load_group(&self, model: Option<&SectorModel>) -> Result<Arc<GroupData>, Failure> {
        Ok(match (&self.group, model) {
            (Some(p), _) => Arc::new(GroupData::load(p)?),
            (None, Some(m)) => m.group().clone(),
            (None, None) => Arc::new(GroupData::trivial()),
        })
    }

    fn require_model(&self) -> Result<SectorModel, Failure> {
        self.load_model()?
            .ok_or_else(|| Failure::Usage("this command needs --model FILE".into()))
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn render_series(kind: &str, formula: &str, s: &PowerSeries, format: Format) -> String {
    let coeffs: Vec<String> = s.integer_coeffs().iter().map(|c| c.to_string()).collect();
    match format {
        Format::Json => pretty(&json!({
            "kind": kind,
            "formula": formula,
            "N": s.truncation(),
            "coefficients": coeffs,
        })),
        Format::Csv => format!("n,coefficient\n{}", {
            let mut out = String::new();
            for (i, c) in coeffs.iter().enumerate() {
                out += &format!("{},{}\n", i, c);
            }
            out
        }),
        Format::Text => format!("# {}\n{}\n", formula, coeffs.join(" ")),
    }
}

fn cmd_series(kind: SeriesKind, e: Option<i64>, cfg: &Config) -> Result<Outcome, Failure> {
    let n = cfg.n.unwrap_or(10) as usize;
    let model = cfg.load_model()?;
    let exponent = || {
        e.or_else(|| model.as_ref().map(|m| {
            let (d0, d1) = m.total_dims();
            d0 as i64 - d1 as i64
        }))
        .unwrap_or(1)
    };
    let (name, formula, s) = match kind {
        SeriesKind::Omega => ("omega", "prod_{r>=1} (1 - t^(2r-1))^-1".to_string(), omega_dim_series(n)),
        SeriesKind::PointDim => {
            let g = cfg.load_group(model.as_ref())?;
            let k = g.num_classes();
            (
                "point-dim",
                format!("prod_{{r>=1}} (1 - t^(2r-1))^-{}", k),
                dim_series_point(&g, n),
            )
        }
        SeriesKind::FockDim => {
            let m = cfg.require_model()?;
            let (d0, d1) = m.total_dims();
            (
                "fock-dim",
                format!("prod_{{r>=1}} (1 + t^(2r-1))^{} / (1 - t^(2r-1))^{}", d1, d0),
                dim_series(&m, n),
            )
        }
        SeriesKind::Euler => {
            let e = exponent();
            ("euler", format!("prod_{{r>=1}} (1 - t^(2r-1))^-({})", e), euler_series(e, n))
        }
        SeriesKind::EulerS => {
            let e = exponent();
            (
                "euler-s",
                format!(
                    "prod_{{r>=1}} (1 - t^(2r-1))^-({e}) + prod_{{r>=1}} (1 + t^(2r-1))^({e}) * (prod_{{r>=1}} (1 + t^(2r))^({e}) - prod_{{r>=1}} (1 - t^(2r))^({e})) / 2"
                ),
                euler_s_series(e, n),
            )
        }
    };
    Ok(Outcome::ok(render_series(name, &formula, &s, cfg.format)))
}

fn cmd_chartable(degree: u32, cfg: &Config) -> Result<Outcome, Failure> {
    let model = cfg.load_model()?;
    let group = cfg.load_group(model.as_ref())?;
    let labels = group.labels();
    let table = char_table(group.clone(), degree)?;
    for w in &table.warnings {
        eprintln!("warning: {}", w);
    }
    let column = |c: &spinq_core::partitions::LabeledPartitionFn| {
        if c.num_labels() == 1 {
            c.to_string()
        } else {
            c.display_with(&labels)
        }
    };
    let out = match cfg.format {
        Format::Json => pretty(&json!({
            "group": group.name,
            "degree": degree,
            "columns": table.columns.iter().zip(&table.centralizers).map(|(c, z)| json!({
                "class": column(c),
                "Z": z.to_string(),
            })).collect::<Vec<_>>(),
            "rows": table.rows.iter().map(|r| json!({
                "name": r.name,
                "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "warnings": table.warnings,
        })),
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Usage(format!("csv: {}", e));
            let mut header = vec!["character".to_string()];
            header.extend(table.columns.iter().map(column));
            w.write_record(&header).map_err(io)?;
            let mut zs = vec!["Z".to_string()];
            zs.extend(table.centralizers.iter().map(|z| z.to_string()));
            w.write_record(&zs).map_err(io)?;
            for r in &table.rows {
                let mut rec = vec![r.name.clone()];
                rec.extend(r.values.iter().map(|v| v.to_string()));
                w.write_record(&rec).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(format!("csv: {}", e)))?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
    };
    Ok(Outcome::ok(out))
}

fn cmd_fock_dim(cfg: &Config) -> Result<Outcome, Failure> {
    cmd_series(SeriesKind::FockDim, None, cfg)
}

fn render_report(report: &Report, format: Format) -> Outcome {
    let stdout = match format {
        Format::Json => pretty(&report.to_json()),
        _ => report.to_text(),
    };
    if let Some(f) = report.first_failure() {
        eprintln!("first counterexample: {}.{}: {}", f.suite, f.id, f.detail);
    }
    Outcome {
        stdout,
        passed: report.passed(),
    }
}

fn cmd_verify(suite: &str, d: Option<u32>, samples: Option<usize>, cfg: &Config) -> Result<Outcome, Failure> {
    let model = cfg.load_model()?;
    let group = cfg.load_group(model.as_ref())?;
    let defaults = VerifyConfig::default();
    let vc = VerifyConfig {
        group,
        model: model.unwrap_or(defaults.model.clone()),
        n: cfg.n.unwrap_or(defaults.n),
        degree: d.unwrap_or(defaults.degree),
        seed: cfg.seed,
        samples: samples.unwrap_or(defaults.samples),
        ..defaults
    };
    let report = run_suite(suite, &vc)?.ok_or_else(|| {
        Failure::Usage(format!("unknown suite `{}`; expected all or one of {}", suite, suites().join(", ")))
    })?;
    Ok(render_report(&report, cfg.format))
}

fn cmd_qlambda(lines: usize, neg: usize, vars: usize, n: u32, seed: u64) -> Result<Outcome, Failure> {
    let vc = VerifyConfig {
        n,
        seed,
        lines,
        neg,
        vars,
        ..VerifyConfig::default()
    };
    let report = run_suite("qlambda", &vc)?.expect("qlambda is a registered suite");
    Ok(render_report(&report, Format::Json))
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>()
        .map_err(|_| Failure::Usage(format!("`{}` is not a partition; write parts as 3,1,1", s)))
}

fn render_omega(name: &str, e: &OmegaElem, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({ "name": name, "p": e.to_json(None) })),
        _ => format!("{} = {}\n", name, e),
    }
}

fn cmd_expand(basis: &str, index: &str, format: Format) -> Result<Outcome, Failure> {
    let out = match basis {
        "q" => {
            let n: u32 = index
                .parse()
                .map_err(|_| Failure::Usage(format!("`{}` is not a degree", index)))?;
            render_omega(&format!("q_{}", n), &q_in_p(n), format)
        }
        "Q" => {
            let lambda = parse_partition(index)?;
            render_omega(&format!("Q_{}", lambda), &Q_in_p(&lambda)?, format)
        }
        _ => {
            let mu = parse_partition(index)?;
            let terms = p_in_Q(&mu)?;
            match format {
                Format::Json => pretty(&json!({
                    "name": format!("p_{}", mu),
                    "Q": terms.iter().map(|(l, c)| json!({
                        "lambda": l.parts(),
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    let items: Vec<String> = terms.iter().map(|(l, c)| format!("{}*Q{}", c, l)).collect();
                    format!("p_{} = {}\n", mu, items.join(" + ").replace("+ -", "- "))
                }
            }
        }
    };
    Ok(Outcome::ok(out))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Series { kind, e, cfg } => cmd_series(kind, e, &cfg),
        Command::Chartable { degree, cfg } => cmd_chartable(degree, &cfg),
        Command::FockDim { cfg } => cmd_fock_dim(&cfg),
        Command::Verify { suite, d, samples, cfg } => cmd_verify(&suite, d, samples, &cfg),
        Command::Qlambda {
            command: QlambdaCommand::Verify { lines, neg, vars, n, seed },
        } => cmd_qlambda(lines, neg, vars, n, seed),
        Command::Expand { basis, index, format } => cmd_expand(&basis, &index, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
