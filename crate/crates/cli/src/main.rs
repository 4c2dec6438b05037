//! `cuntz`: command-line access to the Cuntz inverse-system engine.
//!
//! Exit codes: 0 verified / success, 1 refuted (a counterexample is
//! printed), 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuntz_core::families::{f, f_inf_checked, q};
use cuntz_core::graph::{as_divisibility, embeddability_graph};
use cuntz_core::hom::DEFAULT_INFINITE_BOUND;
use cuntz_core::parse::parse;
use cuntz_core::partition::partition_picture;
use cuntz_core::poset::Chain;
use cuntz_core::report::discontinuity_report;
use cuntz_core::verify::{decomposition_suite, inverse_system, psi_suite, state_suite, uhf_suite, SuiteResult};
use cuntz_core::{equals, AlgebraTag, ExactHom};

#[derive(Parser)]
#[command(name = "cuntz", version, about = "Exact computation in Cuntz algebras and their inverse system")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Normalize {
        #[arg(long)]
        algebra: AlgebraTag,
        expr: String,
    },
    /// Decide whether two expressions are equal in the algebra.
    Equals {
        #[arg(long)]
        algebra: AlgebraTag,
        left: String,
        right: String,
    },
    /// Homomorphisms of the inverse system.
    Hom {
        #[command(subcommand)]
        command: HomCommand,
    },
    /// Verification suites.
    Verify {
        /// Corrupt the hom under test; the suite must then refute it.
        #[arg(long, global = true, hide = true)]
        inject_fault: bool,
        #[command(subcommand)]
        suite: VerifyCommand,
    },
    /// The divisibility poset.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Profinite integers and K0.
    Profinite {
        #[command(subcommand)]
        command: ProfiniteCommand,
    },
    /// Draw a chain of embeddings as refinements of a partition of [0, 1).
    Partition {
        #[arg(long)]
        chain: Chain,
        #[arg(long, default_value_t = 64)]
        width: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// f(n, m): O_(m+1) -> O_(n+1)
    F,
    /// f_inf(n): O_inf -> O_(n+1)
    Finf,
    /// q(r, n): O_(r_(n+1)) -> O_(r_n)
    Q,
}

#[derive(Subcommand)]
enum HomCommand {
    /// Apply a family member to an expression over its domain.
    Apply {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated parameters, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        args: Vec<u32>,
        #[command(flatten)]
        bound: InfBound,
        expr: String,
    },
}

#[derive(Args)]
struct InfBound {
    /// Generators checked when validating a hom out of O_inf.
    #[arg(long = "inf-bound", env = "CUNTZ_INF_BOUND", default_value_t = DEFAULT_INFINITE_BOUND)]
    value: u32,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// f(n,m) o f(m,l) = f(n,l) for all n | m | l <= max.
    InverseSystem {
        #[arg(long)]
        max: u32,
    },
    /// Coherence of psi over a chain and f(n,m) o f_inf(m) = f_inf(n).
    Psi {
        #[arg(long)]
        chain: Chain,
        /// An element of O_inf.
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        bound: InfBound,
    },
    /// Q_n = Q_inf + V_n + V_n* on monomials over L_n.
    Decomposition {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_len: usize,
    },
    /// The UHF chain q(r, 1), ..., q(r, depth).
    Uhf {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        depth: u32,
    },
    /// omega_n o f(n,m) = omega_m for all n | m <= max.
    State {
        #[arg(long)]
        max: u32,
        /// Largest |J| + |K| of the checked monomials.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Write the embeddability graph of O_2..O_max as DOT.
    Graph {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        out: PathBuf,
        /// Keep every embedding instead of the covering relations only.
        #[arg(long)]
        full: bool,
        /// Emit the reversed graph relabeled O_(n+1) -> n instead.
        #[arg(long)]
        divisibility: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum ProfiniteCommand {
    /// K0 of the limit versus the limit of K0.
    Report {
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 8)]
        precision: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

/// Failure of a command: input problems exit 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn suite(result: SuiteResult) -> ExitCode {
    println!("{result}");
    verdict(result.passed())
}

fn family_hom(family: Family, args: &[u32], bound: u32) -> Result<ExactHom, Usage> {
    let want = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(Usage(format!("this family takes {k} argument(s), got {}", args.len())))
        }
    };
    Ok(match family {
        Family::F => {
            want(2)?;
            f(args[0], args[1])?
        }
        Family::Finf => {
            want(1)?;
            f_inf_checked(args[0], bound)?
        }
        Family::Q => {
            want(2)?;
            q(args[0], args[1])?
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    match cli.command {
        Command::Normalize { algebra, expr } => {
            println!("{}", parse(algebra, &expr)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Equals { algebra, left, right } => {
            let (a, b) = (parse(algebra, &left)?, parse(algebra, &right)?);
            let same = equals(&a, &b)?;
            println!("{same}");
            if !same {
                println!("difference: {}", a.sub(&b)?);
            }
            Ok(verdict(same))
        }
        Command::Hom { command: HomCommand::Apply { family, args, bound, expr } } => {
            let h = family_hom(family, &args, bound.value)?;
            println!("{}", h.apply(&parse(h.domain(), &expr)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { inject_fault, suite: which } => Ok(match which {
            VerifyCommand::InverseSystem { max } => suite(inverse_system(max, inject_fault)?),
            VerifyCommand::Psi { chain, expr, bound } => {
                let x = parse(AlgebraTag::Infinite, &expr)?;
                suite(psi_suite(&chain, &x, bound.value, inject_fault)?)
            }
            VerifyCommand::Decomposition { n, max_len } => suite(decomposition_suite(n, max_len, inject_fault)?),
            VerifyCommand::Uhf { r, depth } => {
                let (result, report) = uhf_suite(r, depth, inject_fault)?;
                print!("{}", report.to_text());
                suite(result)
            }
            VerifyCommand::State { max, max_size } => suite(state_suite(max, max_size, inject_fault)?),
        }),
        Command::Poset { command: PosetCommand::Graph { max, out, full, divisibility } } => {
            if max < 2 {
                return Err(Usage("--max must be at least 2".into()));
            }
            let mut g = embeddability_graph(max);
            if !full {
                g = g.transitive_reduction();
            }
            if divisibility {
                g = as_divisibility(&g);
            }
            std::fs::write(&out, g.to_dot())?;
            println!("wrote {} vertices and {} edges to {}", g.vertices.len(), g.edges.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Profinite { command: ProfiniteCommand::Report { depth, bound, p, precision, format } } => {
            if p < 2 {
                return Err(Usage("--p must be at least 2".into()));
            }
            let report = discontinuity_report(depth, bound, p, precision);
            match format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Kv => print!("{}", report.to_kv()),
            }
            Ok(verdict(report.passed()))
        }
        Command::Partition { chain, width } => {
            if width < 2 {
                return Err(Usage("--width must be at least 2".into()));
            }
            let picture = partition_picture(&chain)?;
            print!("{}", picture.render(width));
            match picture.refinement_failure() {
                None => Ok(ExitCode::SUCCESS),
                Some((n, m, cut)) => {
                    println!("row O{} does not refine row O{}: cut {cut} missing", m + 1, n + 1);
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
