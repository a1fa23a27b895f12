//! Thin command-line front end; all logic lives in the library.

use clap::{Parser, Subcommand};
use hardy_smirnov::cli::{
    cmd_adjoint, cmd_classify, cmd_iterate, cmd_kernel, cmd_symmetry, cmd_verify, render_report,
    CliError, OutputFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "hardy-smirnov",
    about = "Numerical workbench for composition operators on Hardy-Smirnov spaces",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Truncation order N (8..=512)
    #[arg(long, global = true, default_value_t = 64)]
    order: usize,

    /// Matrix-certificate tolerance override
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Quadrature-oracle circle radius (0, 1)
    #[arg(long, global = true)]
    radius: Option<f64>,

    /// Quadrature-oracle sample count (at least 8N)
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format: json or table
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a symbol: adjoint, Hermitian/unitary/normal, J_Omega
    /// symmetry, boundedness and the complex-symmetry obstruction
    Classify {
        /// Riemann map quadruple a,b,c,d (complex literals)
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// Affine symbol lambda,r (lambda = 0 for a constant symbol)
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        /// Free lambda for the middle adjoint case
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Reproducing kernel value with the two-route diagnostic
    Kernel {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Adjoint symbol and its matrix certificate
    Adjoint {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Conjugation axioms and C-symmetry residuals
    Symmetry {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        /// Unitary-inducing symbol for J_Omega_Psi
        #[arg(long, allow_hyphen_values = true)]
        psi: Option<String>,
    },
    /// Denjoy-Wolff iteration of the disc conjugate of the symbol
    Iterate {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        /// Starting point in the disc
        #[arg(long, allow_hyphen_values = true)]
        z0: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        /// Successive-iterate stopping tolerance
        #[arg(long, default_value_t = 1e-12)]
        step_tol: f64,
    },
    /// Run a randomized verification suite
    Verify {
        /// kernels | adjoints | symmetry | oracle | obstruction
        suite: String,
    },
}

fn run(args: Args) -> Result<i32, CliError> {
    let format = match args.format.as_str() {
        "json" => OutputFormat::Json,
        "table" => OutputFormat::Table,
        other => return Err(CliError::Parse(format!("unknown format '{other}'"))),
    };
    let config = RunConfig::new(
        args.order,
        args.tol,
        args.radius,
        args.samples,
        args.seed,
        format,
    )?;
    match &args.command {
        Command::Classify { tau, symbol, lambda } => {
            let report = cmd_classify(tau, symbol, lambda.as_deref(), &config)?;
            println!("{}", render_report(&report));
            Ok(0)
        }
        Command::Kernel { tau, u, w } => {
            let report = cmd_kernel(tau, u, w, &config)?;
            println!("{}", render_report(&report));
            Ok(0)
        }
        Command::Adjoint { tau, symbol, lambda } => {
            let report = cmd_adjoint(tau, symbol, lambda.as_deref(), &config)?;
            println!("{}", render_report(&report));
            Ok(0)
        }
        Command::Symmetry { tau, symbol, psi } => {
            let report = cmd_symmetry(tau, symbol, psi.as_deref(), &config)?;
            println!("{}", render_report(&report));
            Ok(0)
        }
        Command::Iterate {
            tau,
            symbol,
            z0,
            max_iter,
            step_tol,
        } => {
            let report = cmd_iterate(tau, symbol, z0.as_deref(), *max_iter, *step_tol, &config)?;
            println!("{}", render_report(&report));
            Ok(0)
        }
        Command::Verify { suite } => {
            let reports = cmd_verify(suite, &config)?;
            println!("{}", serde_json::to_string(&reports).expect("suite reports serialize"));
            let all_passed = reports.iter().all(|r| r.passed());
            for r in &reports {
                eprintln!(
                    "suite {}: {}/{} cases, max residual {:.3e} (tol {:.1e})",
                    r.suite, r.passes, r.cases, r.max_residual, r.tolerance
                );
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn main() {
    let args = Args::parse();
    match run(args) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
