//! `lozenge`: count rhombus tilings of punctured hexagons, verify the identities
//! behind the counts, and render tilings as SVG.
//!
//! Every command prints one JSON report line on stdout. Exit status is 0 on
//! success, 1 when a verification fails, 2 on usage errors.

mod report;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lozenge::boxcount::{macmahon_box, theorem1_count, theorem4_count, BoxDims};
use lozenge::tiling::{count_via_path_determinants, enumerate_tilings, nth_family, render_tiling_svg, PuncturedHexagon};
use lozenge::Error;
use serde_json::Value;

use report::Report;
use verify::{Outcome, Sweep};

#[derive(Debug, Parser)]
#[command(name = "lozenge", version, about = "Rhombus tilings of punctured hexagons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count tilings or plane partitions
    #[command(subcommand)]
    Count(CountCommand),
    /// Check an identity at seeded exact evaluation points
    Verify(VerifyArgs),
    /// Write one tiling, by enumeration index, as SVG
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct Sides {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    c: usize,
}

#[derive(Debug, Subcommand)]
enum CountCommand {
    /// Product formula for the punctured hexagon
    Closed {
        #[command(flatten)]
        sides: Sides,
        /// 1 for the central puncture, 4 for the off-centre one; chosen by parity if omitted
        #[arg(long, value_parser = ["1", "4"])]
        theorem: Option<String>,
    },
    /// Plane partitions in an x by y by z box
    Box {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        z: usize,
    },
    /// Exhaustive enumeration of path families
    Brute {
        #[command(flatten)]
        sides: Sides,
        /// Move the puncture by (DX, DY) from its default position
        #[arg(long, num_args = 2, value_names = ["DX", "DY"], allow_negative_numbers = true)]
        puncture: Option<Vec<i64>>,
    },
    /// Sum of products of path-count determinants
    Lgv {
        #[command(flatten)]
        sides: Sides,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Identity {
    Theorem3,
    Conjecture5,
    MinorSummation,
    Lemma9,
    Lemma10,
    Chain53,
    Lemma8,
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::Theorem3 => "theorem3",
            Identity::Conjecture5 => "conjecture5",
            Identity::MinorSummation => "minor-summation",
            Identity::Lemma9 => "lemma9",
            Identity::Lemma10 => "lemma10",
            Identity::Chain53 => "chain53",
            Identity::Lemma8 => "lemma8",
        }
    }

    fn default_trials(self) -> usize {
        match self {
            Identity::MinorSummation | Identity::Lemma9 => 50,
            Identity::Lemma10 | Identity::Chain53 => 2,
            Identity::Theorem3 | Identity::Conjecture5 => 3,
            Identity::Lemma8 => 1,
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    identity: Identity,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    sides: Sides,
    #[arg(long)]
    index: u128,
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    output: std::path::PathBuf,
    #[arg(long, num_args = 2, value_names = ["DX", "DY"], allow_negative_numbers = true)]
    puncture: Option<Vec<i64>>,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn sides_report(command: &str, result: Value, s: &Sides) -> Report {
    Report::new(command, result).param("a", s.a).param("b", s.b).param("c", s.c)
}

fn hexagon(s: &Sides, puncture: &Option<Vec<i64>>) -> Result<PuncturedHexagon, Error> {
    let (dx, dy) = puncture.as_ref().map_or((0, 0), |p| (p[0], p[1]));
    PuncturedHexagon::with_offset(s.a, s.b, s.c, dx, dy)
}

fn count(cmd: CountCommand) -> Result<Report, Failure> {
    Ok(match cmd {
        CountCommand::Closed { sides, theorem } => {
            let which = theorem.unwrap_or_else(|| {
                if sides.a % 2 == sides.b % 2 && sides.b % 2 != sides.c % 2 { "4" } else { "1" }.to_string()
            });
            let n = if which == "4" {
                theorem4_count(sides.a, sides.b, sides.c)?
            } else {
                theorem1_count(sides.a, sides.b, sides.c)?
            };
            sides_report("count closed", n.to_string().into(), &sides).param("theorem", which.parse::<u8>().unwrap())
        }
        CountCommand::Box { x, y, z } => Report::new("count box", macmahon_box(BoxDims::new(x, y, z)).to_string().into())
            .param("x", x)
            .param("y", y)
            .param("z", z),
        CountCommand::Brute { sides, puncture } => {
            let h = hexagon(&sides, &puncture)?;
            let n = enumerate_tilings(&h)?;
            let (dx, dy) = h.puncture_offset();
            sides_report("count brute", n.to_string().into(), &sides).param("puncture", vec![dx, dy])
        }
        CountCommand::Lgv { sides } => {
            let h = PuncturedHexagon::new(sides.a, sides.b, sides.c)?;
            let n = count_via_path_determinants(&h)?;
            sides_report("count lgv", n.to_string().into(), &sides)
        }
    })
}

fn run_verify(args: VerifyArgs) -> Result<Report, Failure> {
    let trials = args.trials.unwrap_or(args.identity.default_trials());
    let sweep = Sweep { a: args.a, b: args.b, n: args.n, seed: args.seed, trials };
    let outcome: Outcome = match args.identity {
        Identity::Theorem3 => verify::theorem3(&sweep)?,
        Identity::Conjecture5 => verify::conjecture5(&sweep)?,
        Identity::MinorSummation => verify::minor_summation_sweep(&sweep)?,
        Identity::Lemma9 => verify::lemma9(&sweep)?,
        Identity::Lemma10 => verify::lemma10(&sweep)?,
        Identity::Chain53 => verify::chain53(&sweep)?,
        Identity::Lemma8 => verify::lemma8(&sweep)?,
    };
    let mut report = Report::new(&format!("verify {}", args.identity.name()), outcome.holds.into())
        .param("trials", trials)
        .param("cases", outcome.cases);
    for (key, value) in [("a", args.a), ("b", args.b), ("n", args.n)] {
        if let Some(v) = value {
            report = report.param(key, v);
        }
    }
    report.seed = Some(args.seed);
    report.counterexample = outcome.counterexample;
    if !outcome.holds && matches!(args.identity, Identity::Conjecture5) {
        report.finding = Some(true);
    }
    Ok(report)
}

fn render(args: RenderArgs) -> Result<Report, Failure> {
    let h = hexagon(&args.sides, &args.puncture)?;
    let family = nth_family(&h, args.index)?;
    let svg = render_tiling_svg(&h, &family)?;
    std::fs::write(&args.output, svg).map_err(|e| Failure::Io(format!("{}: {e}", args.output.display())))?;
    let (dx, dy) = h.puncture_offset();
    Ok(sides_report("render", true.into(), &args.sides)
        .param("index", args.index.to_string())
        .param("output", args.output.display().to_string())
        .param("puncture", vec![dx, dy]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = match cli.command {
        Command::Count(cmd) => count(cmd),
        Command::Verify(args) => run_verify(args),
        Command::Render(args) => render(args),
    };
    match outcome {
        Ok(mut report) => {
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            println!("{}", report.to_line());
            if report.result == Value::Bool(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
