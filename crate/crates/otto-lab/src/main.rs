use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use otto_core::{Device, Regime};
use otto_lab::figure::{figure_table, FigureId, DEFAULT_STEPS};
use otto_lab::point::{error_json, point_json};
use otto_lab::quantity::Quantity;
use otto_lab::sweep::{device_from_tag, Axis, SweepSpec, Table};
use otto_lab::verify::{self, Tolerances};

const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "otto-lab", version, about = "Optimal performance of asymmetric quantum Otto cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate quantities over a grid of eta_c (engine) or zeta_c (fridge)
    Sweep(SweepArgs),
    /// Write the table behind fig2, fig4 or fig6
    Figure(FigureArgs),
    /// Check every closed form against the numerical oracle
    Verify(VerifyArgs),
    /// Report one operating point as JSON
    Point(PointArgs),
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_device)]
    device: Device,
    /// sc, se, adi or ss; repeatable, defaults to all four
    #[arg(long = "regime", value_parser = parse_regime)]
    regimes: Vec<Regime>,
    /// eta_c or zeta_c; defaults to the device's axis
    #[arg(long, value_parser = parse_axis)]
    axis: Option<Axis>,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long)]
    steps: usize,
    /// eta_omega, eta_mw, eta_max, r_omega, r_mw, delta, cop_omega or cop_max;
    /// repeatable, defaults to every quantity of the device
    #[arg(long = "quantity", value_parser = parse_quantity)]
    quantities: Vec<Quantity>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(long, value_parser = parse_figure)]
    id: FigureId,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Tolerance for Omega-optimum agreement with the oracle
    #[arg(long)]
    tol_omega: Option<f64>,
    /// Tolerance for max-work agreement with the oracle
    #[arg(long)]
    tol_mw: Option<f64>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, value_parser = parse_device)]
    device: Device,
    #[arg(long, value_parser = parse_regime)]
    regime: Regime,
    /// Carnot efficiency (engine) or Carnot COP (fridge)
    #[arg(long)]
    value: f64,
    /// Also report the cycle at this compression ratio
    #[arg(long)]
    z: Option<f64>,
}

fn parse_device(s: &str) -> Result<Device, String> {
    device_from_tag(s).ok_or_else(|| format!("unknown device '{s}' (engine, fridge)"))
}

fn parse_regime(s: &str) -> Result<Regime, String> {
    Regime::from_tag(s).ok_or_else(|| format!("unknown regime '{s}' (sc, se, adi, ss)"))
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    Axis::from_tag(s).ok_or_else(|| format!("unknown axis '{s}' (eta_c, zeta_c)"))
}

fn parse_quantity(s: &str) -> Result<Quantity, String> {
    Quantity::from_tag(s).ok_or_else(|| format!("unknown quantity '{s}'"))
}

fn parse_figure(s: &str) -> Result<FigureId, String> {
    FigureId::from_tag(s).ok_or_else(|| format!("unknown figure '{s}' (fig2, fig4, fig6)"))
}

fn write_table(table: &Table, out: Option<&PathBuf>) -> otto_lab::Result<()> {
    match out {
        Some(path) => table.write_csv(BufWriter::new(File::create(path)?)),
        None => table.write_csv(io::stdout().lock()),
    }
}

fn sweep(args: SweepArgs) -> otto_lab::Result<()> {
    let spec = SweepSpec {
        device: args.device,
        regimes: args.regimes,
        axis: args.axis.unwrap_or(Axis::for_device(args.device)),
        start: args.start,
        stop: args.stop,
        steps: args.steps,
        quantities: args.quantities,
    };
    let (table, notes) = spec.run()?;
    for note in notes {
        eprintln!("otto-lab: {note}");
    }
    write_table(&table, args.out.as_ref())
}

fn figure(args: FigureArgs) -> otto_lab::Result<()> {
    let table = figure_table(args.id, args.steps)?;
    write_table(&table, args.out.as_ref())
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let defaults = Tolerances::default();
    let tol = Tolerances {
        omega: args.tol_omega.unwrap_or(defaults.omega),
        mw: args.tol_mw.unwrap_or(defaults.mw),
        ..defaults
    };
    let started = Instant::now();
    let checks = verify::run(&tol);
    let mut stdout = io::stdout().lock();
    for check in &checks {
        let _ = writeln!(stdout, "{check}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(
        stdout,
        "{} checks, {} passed, {} failed in {:.2} s",
        checks.len(),
        checks.len() - failed,
        failed,
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn point(args: PointArgs) -> ExitCode {
    let (json, code) = match point_json(args.device, args.regime, args.value, args.z) {
        Ok(obj) => (obj, ExitCode::SUCCESS),
        Err(e) => {
            eprintln!("otto-lab: {e}");
            (error_json(e.kind(), &e.to_string()), ExitCode::from(2))
        }
    };
    println!("{}", serde_json::Value::Object(json));
    code
}

fn report(result: otto_lab::Result<()>) -> ExitCode {
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("otto-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Sweep(args) => report(sweep(args)),
        Command::Figure(args) => report(figure(args)),
        Command::Verify(args) => run_verify(args),
        Command::Point(args) => point(args),
    }
}
