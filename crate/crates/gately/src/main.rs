use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gately::document::{
    emit_report, parse_game, parse_point, serialise_game, Analysis, Method, ParsedGame, Report,
    ReportFormat,
};
use gately::generator::{example_fixtures, Xorshift64Star};
use gately::numeric::format_sig12;
use gately::values::{alpha_gately_value, Alpha};
use gately::{aggregate_min_oracle, beta_propensity_profile, is_imputation, minimax_oracle};
use gately::{Allocation, Game};

/// Exact solver for transferable-utility cooperative games.
#[derive(Parser)]
#[command(name = "gately", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl FormatArg {
    fn into_format(self) -> ReportFormat {
        match self {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Game document to analyse.
    file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Classification report for a game file.
    Info(CommonArgs),
    /// Compute a value map.
    Value {
        #[command(flatten)]
        common: CommonArgs,
        /// Which value to compute.
        #[arg(long)]
        method: String,
        /// Exponent parameter; integers run exactly, decimals in floats.
        #[arg(long, default_value = "1")]
        alpha: String,
    },
    /// Check Core membership of a point (default: the weighted value).
    CheckCore {
        #[command(flatten)]
        common: CommonArgs,
        /// Explicit payoff vector, e.g. 7/3,2/3,0.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value = "1")]
        alpha: String,
    },
    /// Exponent intervals whose weighted value lies in the Core.
    AlphaRange {
        #[command(flatten)]
        common: CommonArgs,
        /// Bisection width for interval endpoints.
        #[arg(long, default_value = "1e-4")]
        tol: f64,
        /// Number of log-spaced probe points.
        #[arg(long, default_value = "241")]
        grid: usize,
    },
    /// Harsanyi dividend decomposition.
    Dividends(CommonArgs),
    /// Write the dual game to a new document.
    Dual {
        file: PathBuf,
        /// Output path for the dual game document.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Emit the named example corpus as game documents.
    Fixtures {
        /// Directory to write the documents into.
        #[arg(long)]
        emit: PathBuf,
    },
    /// Cross-check the closed-form weighted value against the grid oracle.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "1")]
        alpha: String,
        /// Seed for the random-imputation dominance sweep.
        #[arg(long, default_value = "1")]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
        Err(CliError::Analysis(message)) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
    }
}

enum CliError {
    /// Bad input: malformed file, unknown labels, malformed flags. Exit 2.
    Usage(String),
    /// Well-formed input on which the requested computation is undefined. Exit 1.
    Analysis(String),
}

fn load(path: &Path) -> Result<ParsedGame, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_game(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parse_alpha(text: &str) -> Result<Alpha, CliError> {
    text.parse::<Alpha>()
        .map_err(|_| CliError::Usage(format!("invalid --alpha {text:?}: must be a positive number")))
}

fn finish(report: Report) -> ExitCode {
    print!("{}", report.body);
    if report.errors.is_empty() {
        ExitCode::SUCCESS
    } else {
        for e in &report.errors {
            eprintln!("{e}");
        }
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Info(common) => {
            let parsed = load(&common.file)?;
            Ok(finish(emit_report(
                &parsed,
                &[Analysis::Classify],
                common.format.into_format(),
            )))
        }
        Command::Value {
            common,
            method,
            alpha,
        } => {
            let parsed = load(&common.file)?;
            let method = Method::parse(&method).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown --method {method:?}: expected gately|shapley|nucleolus|equal|dual-gately"
                ))
            })?;
            let alpha = parse_alpha(&alpha)?;
            if method == Method::DualGately && alpha.as_int().is_none() {
                return Err(CliError::Usage(
                    "--method dual-gately needs an integer --alpha".to_string(),
                ));
            }
            Ok(finish(emit_report(
                &parsed,
                &[Analysis::Value { method, alpha }],
                common.format.into_format(),
            )))
        }
        Command::CheckCore {
            common,
            point,
            alpha,
        } => {
            let parsed = load(&common.file)?;
            let alpha = parse_alpha(&alpha)?;
            let point = point
                .map(|p| {
                    parse_point(&p, parsed.game.n())
                        .map_err(|e| CliError::Usage(format!("invalid --point: {e}")))
                })
                .transpose()?;
            Ok(finish(emit_report(
                &parsed,
                &[Analysis::CoreCheck { point, alpha }],
                common.format.into_format(),
            )))
        }
        Command::AlphaRange { common, tol, grid } => {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Usage(format!("invalid --tol {tol}")));
            }
            let parsed = load(&common.file)?;
            Ok(finish(emit_report(
                &parsed,
                &[Analysis::AlphaRange { tol, grid }],
                common.format.into_format(),
            )))
        }
        Command::Dividends(common) => {
            let parsed = load(&common.file)?;
            Ok(finish(emit_report(
                &parsed,
                &[Analysis::Dividends],
                common.format.into_format(),
            )))
        }
        Command::Dual { file, output } => {
            let parsed = load(&file)?;
            let dual = parsed.game.dual();
            let name = parsed.name.map(|n| format!("{n} (dual)"));
            let doc = serialise_game(&dual, &parsed.labels, name.as_deref(), None);
            std::fs::write(&output, doc)
                .map_err(|e| CliError::Usage(format!("{}: {e}", output.display())))?;
            println!("wrote dual game to {}", output.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { emit } => {
            std::fs::create_dir_all(&emit)
                .map_err(|e| CliError::Usage(format!("{}: {e}", emit.display())))?;
            for fx in example_fixtures() {
                let doc = serialise_game(&fx.game, &fx.labels, Some(fx.name), Some(fx.description));
                let path = emit.join(format!("{}.json", fx.name));
                std::fs::write(&path, doc)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, alpha, seed } => {
            let parsed = load(&file)?;
            let alpha = parse_alpha(&alpha)?;
            verify(&parsed, alpha, seed)
        }
    }
}

/// Confirms the closed form against the independent grid oracle and, for
/// exponents below one, against the aggregate-propensity minimiser plus a
/// seeded sweep of random imputations.
fn verify(parsed: &ParsedGame, alpha: Alpha, seed: u64) -> Result<ExitCode, CliError> {
    const TOLERANCE: f64 = 1e-5;
    let game = &parsed.game;
    let a = alpha.value();
    let closed = alpha_gately_value(game, alpha)
        .map_err(|e| CliError::Analysis(e.to_string()))?;
    let oracle = minimax_oracle(game, 1.0 / a).map_err(|e| CliError::Analysis(e.to_string()))?;
    let distance = closed.max_component_distance(&oracle);
    println!(
        "minimax oracle (beta = {}): max deviation {}",
        format_sig12(1.0 / a),
        format_sig12(distance)
    );
    let mut ok = distance <= TOLERANCE;

    if a < 1.0 {
        let aggregate = aggregate_min_oracle(game, a).map_err(|e| CliError::Analysis(e.to_string()))?;
        let distance = closed.max_component_distance(&aggregate);
        println!(
            "aggregate oracle (beta = {}): max deviation {}",
            format_sig12((1.0 - a) / a),
            format_sig12(distance)
        );
        ok &= distance <= TOLERANCE;
        ok &= dominance_sweep(game, &closed, a, seed);
    }

    if ok {
        println!("verify: PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        Err(CliError::Analysis("verify: FAIL".to_string()))
    }
}

/// The closed form must not lose the aggregate-propensity comparison against
/// any sampled imputation.
fn dominance_sweep(game: &Game, closed: &Allocation, alpha: f64, seed: u64) -> bool {
    const SAMPLES: usize = 1000;
    let beta = (1.0 - alpha) / alpha;
    let total = |x: &Allocation| -> f64 {
        beta_propensity_profile(game, x, beta)
            .map(|p| p.entries.iter().map(|e| e.to_f64()).sum())
            .unwrap_or(f64::INFINITY)
    };
    let baseline = total(closed);
    let singles: Vec<f64> = game
        .individual_worths()
        .iter()
        .map(gately::numeric::to_f64)
        .collect();
    let surplus: f64 =
        gately::numeric::to_f64(game.grand_worth()) - singles.iter().sum::<f64>();
    let mut rng = Xorshift64Star::new(seed);
    let mut losses = 0usize;
    for _ in 0..SAMPLES {
        let weights: Vec<f64> = (0..game.n())
            .map(|_| 1e-9 + rng.below(1 << 20) as f64)
            .collect();
        let scale: f64 = weights.iter().sum();
        let x: Vec<f64> = (0..game.n())
            .map(|i| singles[i] + surplus * weights[i] / scale)
            .collect();
        let x = Allocation::Float(x);
        if !is_imputation(game, &x) {
            continue;
        }
        if total(&x) < baseline - 1e-9 {
            losses += 1;
        }
    }
    println!(
        "dominance sweep: {SAMPLES} random imputations, {losses} beat the closed form"
    );
    losses == 0
}
