use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use forcing_lab::cli::{self, CliError, FamilyArgs, RuleChoice, MAX_ORDER_ENV};
use forcing_lab::from_graph6;

#[derive(Parser)]
#[command(
    name = "forcing-lab",
    version,
    about = "Zero forcing and PSD forcing on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// standard, psd or both
    #[arg(long, default_value = "both")]
    rule: RuleChoice,
    /// Largest order for exhaustive computations (default 16, at most 20).
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Args)]
struct Family {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
}

impl Family {
    fn args(&self) -> Option<FamilyArgs> {
        self.family.as_ref().map(|f| FamilyArgs {
            family: f.clone(),
            n: self.n,
            m: self.m,
            k: self.k,
            order: self.order,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph and print a JSON report.
    Analyze {
        #[arg(long)]
        graph6: Option<String>,
        #[command(flatten)]
        family: Family,
        #[command(flatten)]
        common: Common,
    },
    /// Analyze a graph6 stream from stdin, one JSON line per graph.
    Batch {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Hunt for counterexamples to the fast-join conjectures on stdin.
    Conjecture {
        #[arg(long, default_value = "both")]
        which: RuleChoice,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print graph6 lines for a family.
    Generate {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn cap(flag: Option<usize>) -> Result<forcing_lab::Cap, CliError> {
    cli::resolve_cap(flag, std::env::var(MAX_ORDER_ENV).ok().as_deref())
}

fn run(command: Command) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Analyze {
            graph6,
            family,
            common,
        } => {
            let g = match (graph6, family.args()) {
                (Some(s), None) => from_graph6(&s)?,
                (None, Some(f)) => f
                    .graphs(1, 0)?
                    .pop()
                    .ok_or_else(|| CliError::Usage("family produced no graph".into()))?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --graph6 or --family".into(),
                    ))
                }
            };
            writeln!(
                out,
                "{}",
                cli::cmd_analyze_json(&g, &common.rule.rules(), cap(common.max_order)?)?
            )?;
            Ok(0)
        }
        Command::Batch { common, jobs } => {
            let failed = cli::cmd_batch(
                io::stdin().lock(),
                &mut out,
                &common.rule.rules(),
                cap(common.max_order)?,
                jobs,
            )?;
            Ok(u8::from(failed > 0))
        }
        Command::Conjecture {
            which,
            max_order,
            jobs,
        } => {
            let summary =
                cli::cmd_conjecture(io::stdin().lock(), &mut out, which, cap(max_order)?, jobs)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&summary).expect("summary serializes")
            )?;
            Ok(u8::from(summary.errors > 0))
        }
        Command::Generate {
            family,
            count,
            seed,
        } => {
            let f = family
                .args()
                .ok_or_else(|| CliError::Usage("generate needs --family".into()))?;
            for line in cli::cmd_generate(&f, count, seed)? {
                writeln!(out, "{line}")?;
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let parsed = Cli::parse();
    match run(parsed.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("forcing-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
