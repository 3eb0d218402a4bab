//! `qtm`: command-line front end for the quantum-thermal-machine toolkit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qtm_core::config::{ConstantsOverride, SweepConfig};
use qtm_core::designs::efficiency_limit;
use qtm_core::output::{emit, emit_curves, OutputFormat};
use qtm_core::sweep::BoundaryReport;
use qtm_core::{
    admissible_designs, alpha_bounds, alpha_squared, carnot_efficiency, classify_region,
    efficiency, efficiency_curves, run_sweep, ExchangeTriple, QtmDesign, QtmError,
    DEFAULT_TOLERANCE,
};

#[derive(Parser)]
#[command(name = "qtm", version, about = "Operational regions, efficiencies and Otto-cycle sweeps for quantum thermal machines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an energy exchange into its operational region
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        e_high: f64,
        #[arg(long, allow_hyphen_values = true)]
        e_low: f64,
        #[arg(long)]
        theta_sq: f64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Efficiency of one design, and its Carnot limit when theta_sq is given
    Efficiency {
        #[arg(long)]
        design: QtmDesign,
        #[arg(long)]
        alpha_sq: f64,
        #[arg(long)]
        theta_sq: Option<f64>,
    },
    /// Alpha-squared windows, efficiency ranges and Carnot values of every design
    Bounds {
        #[arg(long)]
        theta_sq: f64,
    },
    /// Run a compression-ratio sweep described by a JSON config
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Records destination; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Efficiency-curve destination; defaults to <out stem>_curves.<ext>
        #[arg(long)]
        curves: Option<PathBuf>,
    },
    /// Region boundaries in rho and alpha_sq, with designs and Carnot values
    Table2 {
        #[arg(long)]
        theta_sq: f64,
        /// Two decimals instead of six
        #[arg(long)]
        rounded: bool,
    },
}

fn fmt_num(x: f64) -> String {
    if x.is_infinite() {
        "inf".into()
    } else {
        format!("{x}")
    }
}

fn classify(e_high: f64, e_low: f64, theta_sq: f64, tol: f64) -> Result<(), QtmError> {
    let ex = ExchangeTriple::new(e_high, e_low)?;
    let region = classify_region(&ex, theta_sq, tol)?;
    println!("region: {region}");
    println!("alpha_sq: {}", alpha_squared(&ex).value());
    println!("e_out: {}", ex.e_out());
    match admissible_designs(region) {
        Ok(ds) => println!("designs: {}", ds.map(|d| d.name()).join(",")),
        Err(_) => println!("designs: none (boundary)"),
    }
    Ok(())
}

fn efficiency_cmd(design: QtmDesign, alpha_sq: f64, theta_sq: Option<f64>) -> Result<(), QtmError> {
    println!("design: {design}");
    println!("efficiency: {}", efficiency(design, alpha_sq)?);
    if let Some(t) = theta_sq {
        println!("carnot_efficiency: {}", carnot_efficiency(design, t)?);
        let b = alpha_bounds(design, t)?;
        if !b.admits(alpha_sq) {
            eprintln!(
                "warning: alpha_sq={alpha_sq} is outside the admissible window ({}, {}) of {design}",
                fmt_num(b.alpha_sq_min),
                fmt_num(b.alpha_sq_max)
            );
        }
    }
    Ok(())
}

fn bounds(theta_sq: f64) -> Result<(), QtmError> {
    println!(
        "{:<6} {:<18} {:>12} {:>12} {:>14} {:>14} {:>12} {:>8}",
        "design", "region", "alpha_sq_min", "alpha_sq_max", "eff@min", "eff@max", "carnot", "limit"
    );
    for d in QtmDesign::ALL {
        let b = alpha_bounds(d, theta_sq)?;
        println!(
            "{:<6} {:<18} {:>12.6} {:>12} {:>14} {:>14} {:>12.6} {:>8}",
            d.name(),
            d.region().name(),
            b.alpha_sq_min,
            if b.alpha_sq_max.is_infinite() { "inf".into() } else { format!("{:.6}", b.alpha_sq_max) },
            fmt_eff(efficiency_limit(d, b.alpha_sq_min)?),
            fmt_eff(efficiency_limit(d, b.alpha_sq_max)?),
            carnot_efficiency(d, theta_sq)?,
            b.carnot_limit_kind,
        );
    }
    Ok(())
}

fn fmt_eff(x: f64) -> String {
    if x.is_infinite() {
        "inf".into()
    } else {
        format!("{x:.6}")
    }
}

fn curves_path(out: &Path, format: OutputFormat) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("sweep");
    let ext = match format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    };
    out.with_file_name(format!("{stem}_curves.{ext}"))
}

fn sweep(config: &Path, out: Option<&Path>, format: OutputFormat, curves: Option<&Path>) -> Result<(), QtmError> {
    let cfg = SweepConfig::load(config)?;
    let env = ConstantsOverride::from_env()?;
    let spec = cfg.sweep_spec()?;
    let constants = cfg.constants(env.as_ref())?;
    let result = run_sweep(&spec, &constants)?;
    let series = efficiency_curves(&spec)?;
    emit(&result.records, format, out)?;
    let curves_dest = curves.map(Path::to_path_buf).or_else(|| out.map(|o| curves_path(o, format)));
    if let Some(dest) = curves_dest {
        emit_curves(&series, format, Some(&dest))?;
        eprintln!("curves written to {}", dest.display());
    }
    let b = result.boundaries;
    eprintln!(
        "{} records; boundaries at rho = {:.6}, {:.6}, {:.6}",
        result.records.len(),
        b.rho_subregion,
        b.rho_2acq_outt,
        b.rho_outt_pump
    );
    Ok(())
}

fn table2(theta_sq: f64, rounded: bool) -> Result<(), QtmError> {
    let b = BoundaryReport::new(theta_sq)?;
    let p = if rounded { 2 } else { 6 };
    println!("theta_sq: {theta_sq}");
    println!("# boundary values are computed in closed form from theta_sq (rho = alpha)");
    println!("{:<24} {:>12} {:>12}", "boundary", "rho", "alpha_sq");
    for (name, rho, a) in [
        ("2Acq_out|2Acq_h", b.rho_subregion, b.alpha_sq_subregion),
        ("2Acquirers|OutTransfers", b.rho_2acq_outt, b.alpha_sq_2acq_outt),
        ("OutTransfers|Pumpers", b.rho_outt_pump, b.alpha_sq_outt_pump),
    ] {
        println!("{name:<24} {rho:>12.p$} {a:>12.p$}");
    }
    println!();
    println!("{:<18} {:<22} {:<8} {:>12} {:>8}", "region", "rho interval", "design", "carnot", "limit");
    let edges = [0.0, b.rho_subregion, b.rho_2acq_outt, b.rho_outt_pump, f64::INFINITY];
    for (i, region) in [
        qtm_core::OperationalRegion::TwoAcquirersOut,
        qtm_core::OperationalRegion::TwoAcquirersHigh,
        qtm_core::OperationalRegion::OutTransfers,
        qtm_core::OperationalRegion::Pumpers,
    ]
    .into_iter()
    .enumerate()
    {
        let interval = format!(
            "({:.p$}, {})",
            edges[i],
            if edges[i + 1].is_infinite() { "inf".to_string() } else { format!("{:.p$}", edges[i + 1]) }
        );
        for d in admissible_designs(region)? {
            println!(
                "{:<18} {:<22} {:<8} {:>12.p$} {:>8}",
                region.name(),
                interval,
                d.name(),
                carnot_efficiency(d, theta_sq)?,
                alpha_bounds(d, theta_sq)?.carnot_limit_kind
            );
        }
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
    let result = match cli.command {
        Command::Classify {
            e_high,
            e_low,
            theta_sq,
            tol,
        } => classify(e_high, e_low, theta_sq, tol),
        Command::Efficiency {
            design,
            alpha_sq,
            theta_sq,
        } => efficiency_cmd(design, alpha_sq, theta_sq),
        Command::Bounds { theta_sq } => bounds(theta_sq),
        Command::Sweep {
            config,
            out,
            format,
            curves,
        } => sweep(&config, out.as_deref(), format, curves.as_deref()),
        Command::Table2 {
            theta_sq,
            rounded,
        } => table2(theta_sq, rounded),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 2 } else { 1 })
        }
    }
}
