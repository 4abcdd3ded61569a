use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfcheck::runner::{self, AlgebraSource, RunConfig, RunReport};
use hopfcheck::verify::SquarePower;

#[derive(Parser)]
#[command(name = "hopfcheck", version, about = "Exact verification of antipode identities in graded Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct AlgebraArgs {
    /// Built-in algebra: abc, tensor, shuffle, fqsym, taft.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    algebra: Option<String>,
    /// Algebra-spec file.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Coefficient ring: Z, Q, Z/<m>, Z[q]/(c0,...,1), optionally `:field`.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long)]
    maxdeg: Option<usize>,
    /// Alphabet size of tensor and shuffle.
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Order of the Taft algebra.
    #[arg(long, default_value_t = 3)]
    n: usize,
}

impl AlgebraArgs {
    fn config(&self) -> RunConfig {
        let mut cfg = match (&self.algebra, &self.spec) {
            (_, Some(path)) => RunConfig { source: AlgebraSource::Spec(path.clone()), ..RunConfig::zoo("") },
            (Some(name), None) => RunConfig::zoo(name),
            (None, None) => unreachable!("clap requires one of --algebra and --spec"),
        };
        cfg.ring = self.ring.clone();
        cfg.max_degree = self.maxdeg;
        cfg.rank = self.rank;
        cfg.n = self.n;
        cfg
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Suite id (repeatable); see `list-suites`.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        p: Option<usize>,
        /// `e` of the theorem instance: id, S2, S4, ...
        #[arg(long, default_value = "id")]
        e: SquarePower,
        /// `f` of the theorem instance.
        #[arg(long, default_value = "S2")]
        f: SquarePower,
        /// Largest power for binomial-identity and taft.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print suite ids with their anchors.
    ListSuites,
    /// Print an algebra in the spec-file format.
    Export {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::ListSuites => {
            for (id, anchor) in runner::SUITES {
                println!("{id:<18} {anchor}");
            }
            Ok(0)
        }
        Command::Export { algebra, out } => {
            let h = runner::load_algebra(&algebra.config()).map_err(|e| e.to_string())?;
            emit(&hopfcheck::format::export(&h), out.as_ref())?;
            Ok(0)
        }
        Command::Verify { algebra, suites, p, e, f, k, seed, format, out } => {
            let mut cfg = algebra.config();
            cfg.suites = suites;
            cfg.p = p;
            cfg.e = e;
            cfg.f = f;
            cfg.max_k = k;
            cfg.seed = seed;
            let (h, reports) = runner::run(&cfg).map_err(|e| e.to_string())?;
            let code = runner::exit_code(&reports);
            let report = RunReport::new(&h, &cfg, reports);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(&text, out.as_ref())?;
            Ok(code as u8)
        }
    }
}
