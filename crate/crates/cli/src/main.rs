//! `dqalg`: generate and certify primitive idempotents of dihedral and
//! generalized quaternion group algebras.
//!
//! Exit status is 0 when every embedded check passes, 1 when one fails and
//! 2 on invalid input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Bundle;

#[derive(Parser)]
#[command(name = "dqalg", version, about = "Exact idempotents of C[D_2n] and C[Q_4m]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Character table, complete idempotent set and its certificate for D_2n.
    Dihedral {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// The same for Q_4m.
    Quaternion {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
    },
    /// A two-dimensional representation rho_k.
    Rep {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        k: u32,
    },
    /// The isomorphism C[Q_8] -> C[D_8] and its checks.
    Iso,
    /// Trigonometric identities.
    Trig(TrigArgs),
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        ranges: Ranges,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArg {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Identity {
    /// Alternating cosine sum.
    Alt,
    /// Partial cosine sum at the angle p*pi/q.
    Partial,
    /// Orthogonality sums of D_2n (--n) or Q_4m (--m).
    Ortho,
}

#[derive(Args)]
struct TrigArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: Option<u32>,
    /// Omitted: every admissible k.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Idempotents,
    Orthogonality,
    Oracle,
    Trig,
    Iso,
}

#[derive(Args, Clone, Copy)]
pub struct Ranges {
    /// Largest n for dihedral sweeps.
    #[arg(long)]
    dihedral_max: Option<u32>,
    /// Largest m for quaternion sweeps.
    #[arg(long)]
    quaternion_max: Option<u32>,
    /// Shorthand: quaternion m <= MAX and dihedral n <= 2*MAX.
    #[arg(long)]
    max: Option<u32>,
}

fn run(cli: &Cli) -> dqalg::Result<Bundle> {
    match &cli.command {
        Command::Dihedral { n } => commands::generate(dqalg::GroupKind::dihedral(*n)?),
        Command::Quaternion { m } => commands::generate(dqalg::GroupKind::quaternion(*m)?),
        Command::Rep { group, k } => {
            let kind = match (group.n, group.m) {
                (Some(n), _) => dqalg::GroupKind::dihedral(n)?,
                (_, Some(m)) => dqalg::GroupKind::quaternion(m)?,
                _ => unreachable!("clap enforces one of --n/--m"),
            };
            commands::rep(kind, *k)
        }
        Command::Iso => commands::iso(),
        Command::Trig(t) => commands::trig(t.identity, t.n, t.m, t.k, t.p, t.q),
        Command::Verify { suite, ranges } => commands::verify(*suite, *ranges),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bundle = match run(&cli) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = bundle.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if bundle.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
