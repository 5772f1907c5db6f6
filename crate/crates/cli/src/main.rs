use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use noma_outage::analytic::{OutageModel, Snr};
use noma_outage::harness::{
    emit_csv, emit_svg, emit_table, fit_diversity, load_config, run_analytic_sweep, run_sweep, table_string,
    validate, Config,
};
use noma_outage::sim::estimate_outage_with;

/// Outage analysis of NOMA in underlay cognitive radio networks.
#[derive(Debug, Parser)]
#[command(name = "noma-outage", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Evaluate at this single ρ_s instead of the configured sweep.
    #[arg(long, allow_negative_numbers = true)]
    rho_s_db: Option<f64>,
    /// Monte Carlo trials (sweep and validation).
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for emitted artifacts.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form NOMA and OMA outage per user.
    Outage(Common),
    /// Monte Carlo outage per user.
    Simulate(Common),
    /// Full sweep; writes the artifacts selected by `emit`.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Skip the Monte Carlo columns.
        #[arg(long)]
        analytic_only: bool,
    },
    /// Cross-validation report; exit status 2 when a check fails.
    Validate(Common),
    /// Fitted diversity order per user over a dB window.
    Diversity {
        #[command(flatten)]
        common: Common,
        /// Window lower edge, dB (default: first sweep point).
        #[arg(long, allow_negative_numbers = true)]
        from_db: Option<f64>,
        /// Window upper edge, dB (default: last sweep point).
        #[arg(long, allow_negative_numbers = true)]
        to_db: Option<f64>,
    },
}

fn load(common: &Common) -> noma_outage::Result<Config> {
    let mut config = load_config(&common.config)?;
    if let Some(db) = common.rho_s_db {
        config = config.with_single_point(db)?;
    }
    if let Some(t) = common.trials {
        if t == 0 {
            return Err(noma_outage::Error::InvalidParameter("--trials must be at least 1".into()));
        }
        config.sweep.trials = t;
        config.validation.trials = t.max(2);
    }
    if let Some(s) = common.seed {
        config.sweep.seed = s;
    }
    Ok(config)
}

fn stem(common: &Common) -> String {
    common
        .config
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "run".into())
}

fn outage(common: &Common) -> noma_outage::Result<()> {
    let config = load(common)?;
    let model = OutageModel::new(&config.system, &config.quadrature)?;
    println!("{:>8} {:>4} {:>14} {:>14}", "rho_s_dB", "user", "noma", "oma");
    for &db in &config.sweep.rho_s_db {
        let at = model.at_rho_s(Snr::from_db(db))?;
        for m in 1..=config.system.users() {
            let noma = at.outage(m, &config.allocation)?;
            let oma = at.oma_outage(m, &config.allocation)?;
            let flag = if noma.out_of_range() { " (clamped)" } else { "" };
            println!("{db:>8} {m:>4} {:>14.6e} {:>14.6e}{flag}", noma.probability, oma.probability);
        }
    }
    Ok(())
}

fn simulate(common: &Common) -> noma_outage::Result<()> {
    let config = load(common)?;
    let opts = config.sweep.sim_options();
    println!("# trials = {}, seed = {}", opts.trials, opts.seed);
    println!("{:>8} {:>4} {:>14} {:>12} {:>14} {:>12}", "rho_s_dB", "user", "noma", "stderr", "oma", "stderr");
    for &db in &config.sweep.rho_s_db {
        let est = estimate_outage_with(&config.system_at(db)?, &config.allocation, &opts)?;
        for m in 0..config.system.users() {
            println!(
                "{db:>8} {:>4} {:>14.6e} {:>12.3e} {:>14.6e} {:>12.3e}",
                m + 1,
                est.per_user_outage[m],
                est.std_err[m],
                est.oma_outage[m],
                est.oma_std_err[m]
            );
        }
    }
    Ok(())
}

fn sweep(common: &Common, analytic_only: bool) -> noma_outage::Result<()> {
    let config = load(common)?;
    let curve = if analytic_only {
        run_analytic_sweep(&config)?
    } else {
        run_sweep(&config)?
    };
    print!("{}", table_string(&curve));
    let out = &common.out;
    std::fs::create_dir_all(out).map_err(|e| noma_outage::Error::Io {
        path: out.clone(),
        source: e,
    })?;
    let base = stem(common);
    let path = |ext: &str| -> PathBuf { Path::new(out).join(format!("{base}.{ext}")) };
    let emit = config.sweep.emit;
    if emit.csv {
        emit_csv(&curve, path("csv"))?;
        eprintln!("wrote {}", path("csv").display());
    }
    if emit.svg {
        emit_svg(&curve, path("svg"))?;
        eprintln!("wrote {}", path("svg").display());
    }
    if emit.report {
        emit_table(&curve, path("txt"))?;
        eprintln!("wrote {}", path("txt").display());
    }
    Ok(())
}

fn run_validate(common: &Common) -> noma_outage::Result<bool> {
    let config = load(common)?;
    let report = validate(&config)?;
    print!("{report}");
    Ok(report.passed())
}

fn diversity(common: &Common, from_db: Option<f64>, to_db: Option<f64>) -> noma_outage::Result<()> {
    let config = load(common)?;
    let grid = &config.sweep.rho_s_db;
    let lo = from_db.unwrap_or(grid[0]);
    let hi = to_db.unwrap_or(grid[grid.len() - 1]);
    let curve = run_analytic_sweep(&config)?;
    let slopes = fit_diversity(&curve, (lo, hi))?;
    println!("# window {lo} to {hi} dB");
    for (m, s) in slopes.iter().enumerate() {
        println!("user {}: {s:.4}", m + 1);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Outage(c) => outage(c).map(|_| true),
        Command::Simulate(c) => simulate(c).map(|_| true),
        Command::Sweep { common, analytic_only } => sweep(common, *analytic_only).map(|_| true),
        Command::Validate(c) => run_validate(c),
        Command::Diversity { common, from_db, to_db } => diversity(common, *from_db, *to_db).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
