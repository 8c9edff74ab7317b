//! Command-line frontend for Calogero-Moser and Lusztig families, cuspidal families,
//! symplectic leaves, rigid modules and the verification suites.

mod query;
mod render;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cuspfam::cuspidal::RigidMode;
use cuspfam::verify::{Suite, VerifyConfig};

use query::GroupArgs;

#[derive(Parser, Debug)]
#[command(name = "cuspfam", version)]
#[command(about = "Families, cuspidal families, leaves and rigid modules of rational Cherednik algebras")]
#[command(after_help = "EXAMPLES:
    cuspfam families --type B --n 6 --c1 1 --kappa 1 --method both
    cuspfam rigid --type I2 --m 8 --a 1 --b 1 --mode oracle
    cuspfam leaves --type D --n 4 --kappa 1 --format text
    cuspfam verify --suite all --max-n 6")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for parallel sections (defaults to the number of cores)
    #[arg(long, env = "CUSPFAM_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    #[value(name = "CM", alias = "cm")]
    Cm,
    #[value(name = "Lusztig", alias = "lusztig")]
    Lusztig,
    #[value(name = "both")]
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition the irreducible characters into families
    Families(FamiliesArgs),
    /// List the cuspidal families
    Cuspidal(MethodArgs),
    /// List the rigid irreducible labels
    Rigid(RigidArgs),
    /// Describe the symplectic leaves and their order (types B and D)
    Leaves(GroupArgs),
    /// Print the symbols of type B bipartitions
    Symbols(SymbolsArgs),
    /// Run the verification suites and report one line per criterion
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct FamiliesArgs {
    #[command(flatten)]
    method: MethodArgs,

    /// Treat the type B parameter as irrational: every family is a singleton
    #[arg(long, conflicts_with_all = ["c1", "kappa"])]
    generic: bool,
}

#[derive(Args, Debug)]
struct MethodArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// Which family notion to compute
    #[arg(long, value_enum, default_value_t = MethodArg::Cm)]
    method: MethodArg,
}

#[derive(Args, Debug)]
struct RigidArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// Closed-form classification or the rigidity equation on explicit matrices
    #[arg(long, default_value_t = RigidMode::Closed)]
    mode: RigidMode,
}

#[derive(Args, Debug)]
struct SymbolsArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// Number of entries in the second row (defaults to n)
    #[arg(long = "rows")]
    big_n: Option<usize>,

    /// Restrict to one bipartition, written as "[2,1|1]"
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// "all", a criterion number 1-9, or a suite name
    #[arg(long, default_value = "all")]
    suite: Suite,

    /// Largest rank used for types A, B and D
    #[arg(long, default_value_t = VerifyConfig::default().max_n)]
    max_n: usize,

    /// Include wall-clock timings (makes the output run-dependent)
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: could not configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((output, code)) => match writeln!(std::io::stdout().lock(), "{output}") {
            Ok(()) => ExitCode::from(code),
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: could not write output: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8)> {
    let format = cli.format;
    Ok(match &cli.command {
        Command::Families(args) => {
            let (group, param) = if args.generic {
                args.method.group.resolve_generic()?
            } else {
                args.method.group.resolve()?
            };
            let out = query::families(&group, &param, args.method.method, args.generic)?;
            (render::families(&out, format), 0)
        }
        Command::Cuspidal(args) => {
            let (group, param) = args.group.resolve()?;
            let out = query::cuspidal(&group, &param, args.method)?;
            (render::cuspidal(&out, &group, &param, format), 0)
        }
        Command::Rigid(args) => {
            let (group, param) = args.group.resolve()?;
            let labels = cuspfam::cuspidal::rigid_modules(&group, &param, args.mode)?;
            (render::rigid(&group, &param, args.mode, &labels, format), 0)
        }
        Command::Leaves(args) => {
            let (group, param) = args.resolve()?;
            let poset = cuspfam::cuspidal::leaf_poset(&group, &param)?
                .with_context(|| format!("no leaf description for {group} at {param}: supported are type B and type D with kappa != 0"))?;
            (render::leaves(&poset, format), 0)
        }
        Command::Symbols(args) => {
            let (group, param) = args.group.resolve()?;
            let rows = query::symbols(&group, &param, args.big_n, args.label.as_deref())?;
            (render::symbols(&rows, format), 0)
        }
        Command::Verify(args) => {
            let reports = cuspfam::verify::run(args.suite, VerifyConfig { max_n: args.max_n });
            let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
            (render::verify(&reports, args.timings, format), code)
        }
    })
}
