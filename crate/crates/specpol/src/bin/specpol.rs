use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use specpol::analysis::{
    condition_h_residuals, convergence_table_multi, galerkin_spectrum, limiting_set_scan,
    pollution_report, szego_stats, PollutionOptions,
};
use specpol::config::{ExperimentConfig, OutputFormat};
use specpol::engine::{enclosures, second_order_spectrum, sigma_grid};
use specpol::error::Error;
use specpol::operators::{
    assemble_multiplication, assemble_rank_one, discrete_eigenvalues_rank_one, MomentMatrices,
    PiecewiseSymbol, RankOneTerm,
};
use specpol::report::{self, Formatter};

/// Second-order spectra of self-adjoint model operators: pollution-free
/// eigenvalue enclosures from truncated moment matrices.
#[derive(Parser)]
#[command(name = "specpol", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Experiment configuration (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Override the output format from the config.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Replace the configured n_list with a single window.
    #[arg(long, global = true)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Second-order spectrum point cloud per window (columns: re,im).
    Spec2,
    /// Enclosure intervals (columns: lo,hi,re,im).
    Enclose,
    /// Convergence table toward each discrete eigenvalue
    /// (columns: n,lo,hi,re_minus_lambda).
    Table,
    /// Joukowski clustering statistics
    /// (columns: n,epsilon,frac_near_minus1,frac_near_plus1,expected_minus,expected_plus,mean).
    Szego,
    /// Galerkin eigenvalues with pollution flags
    /// (columns: n,eigenvalue,in_gap,polluting).
    Galerkin,
    /// Sigma sampled on the configured grid (columns: re,im,sigma).
    #[command(name = "sigma-grid")]
    SigmaGrid,
    /// Limiting-set scan summary
    /// (columns: n,circle_distance[,dist_lambda...][,off_axis]).
    Limits,
    /// Compression residuals of the discrete eigenpairs
    /// (columns: lambda,n,r1,r2,sigma).
    #[command(name = "check-h")]
    CheckH,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("specpol: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                use std::io::Write;
                let mut stdout = std::io::stdout().lock();
                match stdout.write_all(output.as_bytes()).and_then(|_| stdout.flush()) {
                    Ok(()) => {}
                    // downstream consumer (e.g. `head`) closed the pipe
                    Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                    Err(e) => {
                        eprintln!("specpol: cannot write to stdout: {e}");
                        return ExitCode::from(1);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Config(msg)) => {
            eprintln!("specpol: config error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("specpol: numerical failure: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("specpol: {msg}");
            ExitCode::from(1)
        }
    }
}

enum CliError {
    Config(String),
    Numerical(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match &e {
            Error::EigenSolver { .. } | Error::ConjugatePairing { .. } | Error::NoZeroFound { .. } => {
                CliError::Numerical(e.to_string())
            }
            _ => CliError::Config(e.to_string()),
        }
    }
}

struct Experiment {
    cfg: ExperimentConfig,
    symbol: PiecewiseSymbol,
    pert: Option<RankOneTerm>,
    n_list: Vec<usize>,
    format: OutputFormat,
}

impl Experiment {
    fn assemble(&self, n: usize) -> Result<MomentMatrices, Error> {
        match &self.pert {
            None => Ok(assemble_multiplication(&self.symbol, n, self.cfg.label.clone())),
            Some(p) => assemble_rank_one(&self.symbol, p, n, self.cfg.label.clone()),
        }
    }

    fn discrete_eigenvalues(&self) -> Result<Vec<f64>, CliError> {
        let pert = self.pert.as_ref().ok_or_else(|| {
            CliError::Config("this subcommand needs [operator.rank_one]".into())
        })?;
        if !self.symbol.is_plus_minus_one() {
            return Err(CliError::Config(
                "discrete eigenvalues are defined for the ±1 symbol model".into(),
            ));
        }
        let lambdas = discrete_eigenvalues_rank_one(&self.symbol.max_region(), pert);
        if lambdas.is_empty() {
            return Err(CliError::Config(
                "this configuration has no discrete eigenvalues".into(),
            ));
        }
        Ok(lambdas)
    }

    fn formatter(&self) -> Formatter {
        Formatter::new(self.cfg.output.precision)
    }
}

fn load(cli: &Cli) -> Result<Experiment, CliError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::Config("--config <path> is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let cfg = ExperimentConfig::from_toml(&text).map_err(|e| CliError::Config(e.to_string()))?;
    let symbol = cfg.symbol().map_err(|e| CliError::Config(e.to_string()))?;
    let pert = cfg.rank_one_term().map_err(|e| CliError::Config(e.to_string()))?;
    let n_list = match cli.n {
        Some(n) => vec![n],
        None => cfg.n_list.clone(),
    };
    let format = match cli.format {
        Some(FormatArg::Csv) => OutputFormat::Csv,
        Some(FormatArg::Json) => OutputFormat::Json,
        None => cfg.output.format,
    };
    Ok(Experiment { cfg, symbol, pert, n_list, format })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let exp = load(cli)?;
    let fmt = exp.formatter();
    match cli.command {
        Command::Spec2 => {
            let mut blocks = Vec::new();
            for &n in &exp.n_list {
                let m = exp.assemble(n)?;
                blocks.push((n, second_order_spectrum(&m)?));
            }
            Ok(match exp.format {
                OutputFormat::Csv => report::spec2_csv(&blocks, fmt),
                OutputFormat::Json => report::render_json(&report::spec2_json(&blocks)),
            })
        }
        Command::Enclose => {
            let mut blocks = Vec::new();
            for &n in &exp.n_list {
                let m = exp.assemble(n)?;
                let s = second_order_spectrum(&m)?;
                blocks.push((n, enclosures(&s, exp.cfg.max_half_width)));
            }
            Ok(match exp.format {
                OutputFormat::Csv => report::enclose_csv(&blocks, fmt),
                OutputFormat::Json => report::render_json(&report::enclose_json(&blocks)),
            })
        }
        Command::Table => {
            let lambdas = exp.discrete_eigenvalues()?;
            let pert = exp.pert.as_ref().expect("checked by discrete_eigenvalues");
            let groups = convergence_table_multi(&exp.symbol, pert, &lambdas, &exp.n_list)?;
            Ok(match exp.format {
                OutputFormat::Csv => report::table_csv(&groups, fmt),
                OutputFormat::Json => report::render_json(&report::table_json(&groups)),
            })
        }
        Command::Szego => {
            let mut stats = Vec::new();
            for &n in &exp.n_list {
                stats.push(szego_stats(&exp.symbol, n, exp.cfg.epsilon)?);
            }
            Ok(match exp.format {
                OutputFormat::Csv => report::szego_csv(&stats, fmt),
                OutputFormat::Json => report::render_json(&report::szego_json(&stats)),
            })
        }
        Command::Galerkin => {
            let opts = PollutionOptions {
                gap_delta: exp.cfg.gap_delta,
                match_tol: exp.cfg.match_tol,
            };
            let rep = pollution_report(&exp.symbol, exp.pert.as_ref(), &exp.n_list, &opts)?;
            let mut per_n = Vec::new();
            for &n in &exp.n_list {
                let m = exp.assemble(n)?;
                per_n.push((n, galerkin_spectrum(&m)?));
            }
            Ok(match exp.format {
                OutputFormat::Csv => report::galerkin_csv(&per_n, &rep, fmt),
                OutputFormat::Json => report::render_json(&report::galerkin_json(&per_n, &rep)),
            })
        }
        Command::SigmaGrid => {
            let (rect, nx, ny) = exp.cfg.grid_rect().map_err(|e| CliError::Config(e.to_string()))?;
            let n = *exp.n_list.last().expect("validated nonempty");
            let m = exp.assemble(n)?;
            let grid = sigma_grid(&m, rect, nx, ny)?;
            Ok(match exp.format {
                OutputFormat::Csv => report::grid_csv(&grid, fmt),
                OutputFormat::Json => report::render_json(&report::grid_json(&grid)),
            })
        }
        Command::Limits => {
            let sample = limiting_set_scan(&exp.symbol, exp.pert.as_ref(), &exp.n_list)?;
            Ok(match exp.format {
                OutputFormat::Csv => report::limits_csv(&sample, fmt),
                OutputFormat::Json => report::render_json(&report::limits_json(&sample)),
            })
        }
        Command::CheckH => {
            let lambdas = exp.discrete_eigenvalues()?;
            let pert = exp.pert.as_ref().expect("checked by discrete_eigenvalues");
            let mut groups = Vec::new();
            for &lambda in &lambdas {
                groups.push((lambda, condition_h_residuals(&exp.symbol, pert, lambda, &exp.n_list)?));
            }
            Ok(match exp.format {
                OutputFormat::Csv => report::check_h_csv(&groups, fmt),
                OutputFormat::Json => report::render_json(&report::check_h_json(&groups)),
            })
        }
    }
}
