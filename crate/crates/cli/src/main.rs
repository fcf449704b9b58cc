//! `orispec`: exact spectral computations on partially oriented graphs.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 a result that
//! contradicts a theorem (always a bug).

mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orispec_core::family::SumMethod;
use orispec_core::Limits;

use commands::Ctx;
use input::Format;
use report::Display;

#[derive(Parser)]
#[command(name = "orispec", version, about = "Hermitian spectra, matching polynomials and switching for mixed graphs")]
struct Cli {
    /// Input graph: a file path, `-` for stdin, or inline text with `;` between lines.
    #[arg(short = 'g', long, global = true)]
    graph: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Edgelist, global = true)]
    format: Format,

    /// `bfs:<root>`, `all`, or explicit tree edges such as `0-1,1-2,2-3`.
    #[arg(long, default_value = "bfs:0", global = true)]
    tree: String,

    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Precision of decimal displays; exact values are unaffected.
    #[arg(long, default_value_t = 1e-4, global = true)]
    eps: f64,

    /// Lift the size guards on exponential searches.
    #[arg(long, global = true)]
    unsafe_no_guards: bool,

    /// Worker threads for the parallel searches.
    #[arg(long, env = "ORISPEC_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Matching,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Matching polynomial, matching counts and its largest root.
    Matching,
    /// Characteristic polynomial of the Hermitian adjacency matrix.
    Charpoly {
        /// Cotree signs (`+-`) for a partial orientation of the input w.r.t. --tree.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
    /// Eigenvalues, numeric and exact.
    Eigen {
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
    /// Greedy partial orientation with lambda_max at most the matching radius.
    FindOrientation {
        #[arg(long, value_enum, default_value_t = Method::Matching)]
        method: Method,
    },
    /// Checks that the average charpoly over all partial orientations is the matching polynomial.
    VerifyExpectation,
    /// Checks real-rootedness and interlacing at every node of the sign tree.
    AuditFamily,
    /// Switching equivalence of the input and a second mixed graph.
    Switching {
        /// The second graph, read like --graph.
        #[arg(long)]
        other: String,
    },
    /// Switching classes of the partial orientations w.r.t. --tree.
    Classify,
    /// Whether the partial orientations are switching equivalent to the
    /// undirected graph and to an oriented graph.
    Lemma4,
    /// Sweeps all connected graphs up to --max-n vertices (or only --graph).
    Explore {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        // ignore failure: the pool may already exist
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let ctx = Ctx {
        graph: cli.graph,
        format: cli.format,
        tree: cli.tree,
        limits: if cli.unsafe_no_guards { Limits::unbounded() } else { Limits::default() },
        display: Display::from_eps(cli.eps),
        eps: cli.eps,
    };
    let result = match &cli.command {
        Command::Matching => commands::matching(&ctx),
        Command::Charpoly { signs } => commands::charpoly_cmd(&ctx, signs.as_deref()),
        Command::Eigen { signs } => commands::eigen(&ctx, signs.as_deref()),
        Command::FindOrientation { method } => commands::find_orientation(
            &ctx,
            match method {
                Method::Matching => SumMethod::Matching,
                Method::Brute => SumMethod::BruteForce,
            },
        ),
        Command::VerifyExpectation => commands::verify_expectation(&ctx),
        Command::AuditFamily => commands::audit_family(&ctx),
        Command::Switching { other } => commands::switching(&ctx, other),
        Command::Classify => commands::classify(&ctx),
        Command::Lemma4 => commands::lemma4(&ctx),
        Command::Explore { max_n } => commands::explore(&ctx, *max_n),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = if cli.json {
                out.json.iter().try_for_each(|v| writeln!(stdout, "{v}"))
            } else {
                stdout.write_all(out.text.as_bytes())
            };
            if written.is_err() {
                return ExitCode::from(1);
            }
            if out.defect {
                eprintln!("orispec: defect: a result contradicts a theorem");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("orispec: {e:#}");
            match e.downcast_ref::<orispec_core::Error>() {
                Some(orispec_core::Error::Defect(_)) => ExitCode::from(2),
                Some(orispec_core::Error::Guard { .. }) => {
                    eprintln!("orispec: pass --unsafe-no-guards to run anyway");
                    ExitCode::from(1)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}
