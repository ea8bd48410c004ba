//! Command-line front end: single evaluations, ladder constructions, law
//! verifications, decade sweeps, and checkpoint-store management.
//!
//! Output is one CSV or JSON document on stdout with the run configuration
//! echoed in the header; identical configuration plus identical cache file
//! gives byte-identical output. Exit status is nonzero only on computation
//! failure, never on large residuals.

use std::fmt::Write as _;
use std::os::fd::AsRawFd;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zeta_ladder::constants::LN_2PI;
use zeta_ladder::ladder::{phi1, reverse_sequence};
use zeta_ladder::laws::{estimate_euler_constant, euler_reference_dirichlet, hli_residual, verify_law};
use zeta_ladder::quadrature::integrate_z2;
use zeta_ladder::zeta::{z, Method};
use zeta_ladder::{CheckpointStore, Constants, LawId};

#[derive(Parser)]
#[command(name = "zeta-ladder", version, about = "Ladder of heights over the second moment of zeta")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Absolute quadrature tolerance per unit of height.
    #[arg(long, global = true, default_value_t = 1e-3)]
    tol: f64,

    /// Additive constant in the defining equation of phi1.
    #[arg(long, global = true, default_value_t = 0.0)]
    c0: f64,

    /// Error-term exponent for residual diagnostics, in [1/4, 1/3].
    #[arg(long = "a-exp", global = true, default_value_t = 1.0 / 3.0)]
    a_exp: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Csv)]
    out: OutFormat,

    /// Checkpoint file for J values; created if absent.
    #[arg(long, global = true, env = "ZETA_LADDER_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Grid {
    Log,
    Linear,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Riemann-Siegel function Z(t).
    Z {
        #[arg(long = "T")]
        t: f64,
    },
    /// Integrate Z(t)^2 over [from, to] without touching the cache.
    Integral {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
    },
    /// J(T), phi1(T), and the reverse chain T < T1 < ... < Tk.
    Ladder {
        #[arg(long = "T")]
        t: f64,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Verify one asymptotic law at (T, k, r).
    Verify {
        #[arg(long)]
        law: LawArg,
        #[arg(long = "T")]
        t: f64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Verify one law over a grid of T values.
    Sweep {
        #[arg(long)]
        law: LawArg,
        #[arg(long = "T-start")]
        t_start: f64,
        #[arg(long = "T-end")]
        t_end: f64,
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Grid::Log)]
        grid: Grid,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Residual R(T) of the Hardy-Littlewood-Ingham formula with its
    /// normalized ratios, plus the one-rung Euler-constant estimate.
    Residual {
        #[arg(long = "T")]
        t: f64,
    },
    /// Print the constant bundle in use.
    Constants,
}

/// clap-friendly wrapper: LawId's FromStr error is a plain String.
#[derive(Clone, Copy)]
struct LawArg(LawId);

impl std::str::FromStr for LawArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(LawArg)
    }
}

enum Cell {
    Text(String),
    Real(f64),
    Int(u64),
}

struct Table {
    columns: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

fn real(x: f64) -> Cell {
    Cell::Real(x)
}

fn text(s: impl Into<String>) -> Cell {
    Cell::Text(s.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<String, Box<dyn std::error::Error>> {
    let consts = Constants::new(cli.c0, cli.a_exp, 0.05)?;
    if !(cli.tol > 0.0) {
        return Err(format!("--tol must be > 0, got {}", cli.tol).into());
    }

    // Exclusive advisory lock on the cache for the whole run (single-writer).
    let (mut store, lock) = match &cli.cache {
        Some(path) => {
            let file = std::fs::OpenOptions::new()
                .read(true)
                .write(true)
                .create(true)
                .truncate(false)
                .open(path)?;
            if unsafe { libc::flock(file.as_raw_fd(), libc::LOCK_EX | libc::LOCK_NB) } != 0 {
                return Err(format!("cache file {} is locked by another process", path.display()).into());
            }
            let store = if file.metadata()?.len() == 0 {
                CheckpointStore::new()
            } else {
                CheckpointStore::load(path)?
            };
            (store, Some((file, path.clone())))
        }
        None => (CheckpointStore::new(), None),
    };
    let loaded_len = store.len();

    let table = dispatch(cli, &consts, &mut store)?;

    if let Some((_file, path)) = &lock {
        if store.len() != loaded_len {
            store.save(path)?;
        }
    }

    Ok(match cli.out {
        OutFormat::Csv => render_csv(cli, &table),
        OutFormat::Json => render_json(cli, &table),
    })
}

fn dispatch(
    cli: &Cli,
    consts: &Constants,
    store: &mut CheckpointStore,
) -> Result<Table, Box<dyn std::error::Error>> {
    Ok(match &cli.command {
        Command::Z { t } => {
            let s = z(*t)?;
            Table {
                columns: &["t", "z", "terms_used", "method"],
                rows: vec![vec![
                    real(s.t),
                    real(s.z),
                    Cell::Int(s.terms_used as u64),
                    text(match s.method {
                        Method::RiemannSiegel => "riemann_siegel",
                        Method::EulerMaclaurin => "euler_maclaurin",
                    }),
                ]],
            }
        }
        Command::Integral { from, to } => {
            let tol = cli.tol * (to - from).abs().max(1.0);
            let r = integrate_z2(*from, *to, tol)?;
            Table {
                columns: &["a", "b", "value", "err_estimate", "panels"],
                rows: vec![vec![
                    real(r.a),
                    real(r.b),
                    real(r.value),
                    real(r.err_estimate),
                    Cell::Int(r.panels as u64),
                ]],
            }
        }
        Command::Ladder { t, k } => {
            let seq = reverse_sequence(*t, (*k).max(1), consts, store)?;
            let mut rows = Vec::new();
            for (r, &tr) in seq.points.iter().enumerate() {
                let p = phi1(tr, consts, store)?;
                rows.push(vec![
                    Cell::Int(r as u64),
                    real(tr),
                    real(p.j),
                    real(p.phi1),
                    real(p.residual),
                ]);
            }
            Table {
                columns: &["r", "t_r", "j", "phi1", "root_residual"],
                rows,
            }
        }
        Command::Verify { law, t, k, r } => Table {
            columns: LAW_COLUMNS,
            rows: vec![law_row(verify_law(law.0, *t, *k, *r, consts, store)?)],
        },
        Command::Sweep {
            law,
            t_start,
            t_end,
            points,
            grid,
            k,
            r,
        } => {
            if *points < 1 || t_end < t_start || *t_start <= 0.0 {
                return Err("sweep needs points >= 1 and 0 < T-start <= T-end".into());
            }
            let mut rows = Vec::new();
            for i in 0..*points {
                let frac = if *points == 1 {
                    0.0
                } else {
                    i as f64 / (*points - 1) as f64
                };
                let t = match grid {
                    Grid::Log => t_start * (t_end / t_start).powf(frac),
                    Grid::Linear => t_start + (t_end - t_start) * frac,
                };
                rows.push(law_row(verify_law(law.0, t, *k, *r, consts, store)?));
            }
            Table {
                columns: LAW_COLUMNS,
                rows,
            }
        }
        Command::Residual { t } => {
            let d = hli_residual(*t, consts, store)?;
            let c_hat = estimate_euler_constant(*t, 1, consts, store)?;
            Table {
                columns: &["t", "r_t", "ratio_quarter", "ratio_third", "c_hat"],
                rows: vec![vec![
                    real(d.t),
                    real(d.r_t),
                    real(d.ratio_quarter),
                    real(d.ratio_third),
                    real(c_hat),
                ]],
            }
        }
        Command::Constants => {
            let dirichlet = euler_reference_dirichlet(1e-10)?;
            let pairs: [(&str, f64); 8] = [
                ("c", consts.c),
                ("c_bar", consts.c_bar()),
                ("c0", consts.c0),
                ("a_exp", consts.a_exp),
                ("delta", consts.delta),
                ("lambda1", consts.lambda1()),
                ("lambda2", consts.lambda2()),
                ("ln_2pi", LN_2PI),
            ];
            let mut rows: Vec<Vec<Cell>> = pairs
                .iter()
                .map(|(n, v)| vec![text(*n), real(*v)])
                .collect();
            rows.push(vec![text("c_dirichlet_reference"), real(dirichlet)]);
            Table {
                columns: &["name", "value"],
                rows,
            }
        }
    })
}

const LAW_COLUMNS: &[&str] = &[
    "law_id",
    "T",
    "k",
    "r",
    "lhs",
    "rhs",
    "abs_residual",
    "rel_residual",
    "notes",
];

fn law_row(rep: zeta_ladder::LawReport) -> Vec<Cell> {
    vec![
        text(rep.law_id.to_string()),
        real(rep.t),
        Cell::Int(rep.k as u64),
        Cell::Int(rep.r as u64),
        real(rep.lhs),
        real(rep.rhs),
        real(rep.abs_residual),
        real(rep.rel_residual),
        text(rep.notes),
    ]
}

fn config_pairs(cli: &Cli) -> Vec<(&'static str, String)> {
    let mut pairs = vec![("command", command_name(cli).to_string())];
    match &cli.command {
        Command::Z { t } | Command::Residual { t } => pairs.push(("T", fmt_real(*t))),
        Command::Integral { from, to } => {
            pairs.push(("from", fmt_real(*from)));
            pairs.push(("to", fmt_real(*to)));
        }
        Command::Ladder { t, k } => {
            pairs.push(("T", fmt_real(*t)));
            pairs.push(("k", k.to_string()));
        }
        Command::Verify { law, t, k, r } => {
            pairs.push(("law", law.0.to_string()));
            pairs.push(("T", fmt_real(*t)));
            pairs.push(("k", k.to_string()));
            pairs.push(("r", r.to_string()));
        }
        Command::Sweep {
            law,
            t_start,
            t_end,
            points,
            grid,
            k,
            r,
        } => {
            pairs.push(("law", law.0.to_string()));
            pairs.push(("T-start", fmt_real(*t_start)));
            pairs.push(("T-end", fmt_real(*t_end)));
            pairs.push(("points", points.to_string()));
            pairs.push((
                "grid",
                match grid {
                    Grid::Log => "log".to_string(),
                    Grid::Linear => "linear".to_string(),
                },
            ));
            pairs.push(("k", k.to_string()));
            pairs.push(("r", r.to_string()));
        }
        Command::Constants => {}
    }
    pairs.push(("tol", fmt_real(cli.tol)));
    pairs.push(("c0", fmt_real(cli.c0)));
    pairs.push(("a-exp", fmt_real(cli.a_exp)));
    pairs.push((
        "out",
        match cli.out {
            OutFormat::Csv => "csv".to_string(),
            OutFormat::Json => "json".to_string(),
        },
    ));
    pairs.push((
        "cache",
        cli.cache
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_default(),
    ));
    pairs
}

fn command_name(cli: &Cli) -> &'static str {
    match cli.command {
        Command::Z { .. } => "z",
        Command::Integral { .. } => "integral",
        Command::Ladder { .. } => "ladder",
        Command::Verify { .. } => "verify",
        Command::Sweep { .. } => "sweep",
        Command::Residual { .. } => "residual",
        Command::Constants => "constants",
    }
}

fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn render_csv(cli: &Cli, table: &Table) -> String {
    let mut out = String::new();
    for (key, value) in config_pairs(cli) {
        writeln!(out, "# {key} = {value}").unwrap();
    }
    writeln!(out, "{}", table.columns.join(",")).unwrap();
    for row in &table.rows {
        let fields: Vec<String> = row
            .iter()
            .map(|cell| match cell {
                Cell::Text(s) => {
                    if s.contains(',') || s.contains('"') || s.contains('\n') {
                        format!("\"{}\"", s.replace('"', "\"\""))
                    } else {
                        s.clone()
                    }
                }
                Cell::Real(x) => fmt_real(*x),
                Cell::Int(n) => n.to_string(),
            })
            .collect();
        writeln!(out, "{}", fields.join(",")).unwrap();
    }
    out
}

fn render_json(cli: &Cli, table: &Table) -> String {
    let config: serde_json::Map<String, serde_json::Value> = config_pairs(cli)
        .into_iter()
        .map(|(k, v)| (k.to_string(), serde_json::Value::String(v)))
        .collect();
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: serde_json::Map<String, serde_json::Value> = table
                .columns
                .iter()
                .zip(row)
                .map(|(col, cell)| {
                    let v = match cell {
                        Cell::Text(s) => serde_json::Value::String(s.clone()),
                        Cell::Real(x) => serde_json::json!(x),
                        Cell::Int(n) => serde_json::json!(n),
                    };
                    (col.to_string(), v)
                })
                .collect();
            serde_json::Value::Object(obj)
        })
        .collect();
    let doc = serde_json::json!({ "config": config, "rows": rows });
    let mut s = serde_json::to_string_pretty(&doc).expect("serialization cannot fail");
    s.push('\n');
    s
}
