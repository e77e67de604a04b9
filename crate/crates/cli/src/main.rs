//! `hfsplit`: correction terms and splitting obstructions from the command line.
//!
//! Exit status: 0 on success, 2 for usage errors and rejected inputs, 1 when
//! the computation itself produced inconsistent data.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hfsplit_core::error::Error;
use hfsplit_core::staircase::tensor_all;
use hfsplit_core::{
    consecutive_torus_staircase, d_table, metabolizer_obstruction, reproduce_paper, split_obstruction,
    surgery_complex, tensor, torus_14_15, unit_staircase, whitehead_sum_22, Convention, DTable, GeneratorSet,
    Staircase,
};

#[derive(Parser, Debug)]
#[command(name = "hfsplit", version, about = "Exact d-invariants and primary-splitting obstructions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Md)]
    format: Format,

    /// Orientation convention for d-invariants.
    #[arg(long, value_enum, global = true, default_value_t = ConventionArg::Table1)]
    convention: ConventionArg,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Table1,
    Appendix,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Table1 => Convention::Table1,
            ConventionArg::Appendix => Convention::Appendix,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander and cyclotomic polynomials.
    Alexander(AlexanderArgs),
    /// Staircase generator lists and their tensor products.
    Staircase(StaircaseArgs),
    /// Correction terms for every Spin^c label.
    Dtable(ComplexArgs),
    /// Second-difference splitting obstruction over the p- and q-parts.
    ObstructSplit(ComplexArgs),
    /// Metabolizer (slice) obstruction.
    ObstructMetabolizer(ComplexArgs),
    /// Regenerate the K_15 tables and verdicts.
    ReproducePaper,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true).args(["torus", "pretzel", "cyclotomic", "split"])))]
struct AlexanderArgs {
    /// Delta of T(2, N).
    #[arg(long, value_name = "N")]
    torus: Option<u32>,
    /// Delta of K_N, ((t^N + 1)/(t + 1))^2.
    #[arg(long, value_name = "N", alias = "n")]
    pretzel: Option<u32>,
    /// The N-th cyclotomic polynomial.
    #[arg(long, value_name = "N")]
    cyclotomic: Option<u32>,
    /// phi_{2p}, phi_{2q}, phi_{2pq}; needs --p and --q.
    #[arg(long, requires_all = ["p", "q"])]
    split: bool,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum StaircaseKind {
    #[value(name = "torus-14-15")]
    Torus1415,
    #[value(name = "whitehead-22")]
    Whitehead22,
    Consecutive,
    Unit,
    /// Tensor product of torus-14-15 and whitehead-22.
    PaperTensor,
}

#[derive(Args, Debug)]
struct StaircaseArgs {
    #[arg(long, value_enum, conflicts_with = "staircase_file")]
    kind: Option<StaircaseKind>,
    /// Parameter of the consecutive torus staircase.
    #[arg(long)]
    n: Option<u32>,
    /// Parameter of the unit staircase.
    #[arg(long)]
    k: Option<u32>,
    /// Validate and print a staircase file (JSON list of [alpha, beta]).
    #[arg(long)]
    staircase_file: Vec<PathBuf>,
    /// Keep only the Pareto-minimal levels.
    #[arg(long)]
    pareto: bool,
}

#[derive(Args, Debug)]
struct ComplexArgs {
    /// Knot parameter n; the surgery coefficient is N = n^2.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    /// Staircase files whose tensor product replaces the built-in complex.
    #[arg(long)]
    staircase_file: Vec<PathBuf>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

impl ComplexArgs {
    fn knot_parameter(&self) -> Result<u32, Error> {
        let pq = match (self.p, self.q) {
            (Some(p), Some(q)) => {
                Some(p.checked_mul(q).ok_or_else(|| usage(format!("p * q overflows for p = {p}, q = {q}")))?)
            }
            (None, None) => None,
            _ => return Err(usage("--p and --q must be given together")),
        };
        match (self.n, pq) {
            (Some(n), Some(pq)) if n != pq => Err(usage(format!("--n {n} differs from p * q = {pq}"))),
            (Some(n), _) => Ok(n),
            (None, Some(pq)) => Ok(pq),
            (None, None) => Err(usage("give --n, or --p and --q")),
        }
    }

    fn primes(&self) -> Result<(u32, u32), Error> {
        match (self.p, self.q) {
            (Some(p), Some(q)) => Ok((p, q)),
            _ => Err(usage("--p and --q are required")),
        }
    }

    fn table(&self, convention: Convention) -> Result<DTable, Error> {
        let n = self.knot_parameter()?;
        let modulus = u64::from(n) * u64::from(n);
        let (gens, source) = if self.staircase_file.is_empty() {
            let c = surgery_complex(n)?;
            (c.generators, c.source)
        } else {
            load_files(&self.staircase_file)?
        };
        Ok(d_table(&gens, modulus, convention)?.with_source(source))
    }
}

fn load_files(paths: &[PathBuf]) -> Result<(GeneratorSet, String), Error> {
    let staircases = paths.iter().map(Staircase::load).collect::<Result<Vec<_>, _>>()?;
    let source = paths.iter().map(|p| format!("file:{}", p.display())).collect::<Vec<_>>().join(" # ");
    Ok((tensor_all(&staircases)?, source))
}

fn run(cli: &Cli) -> Result<String, Error> {
    let convention = Convention::from(cli.convention);
    let format = cli.format;
    match &cli.command {
        Command::Alexander(a) => render::alexander(a, format),
        Command::Staircase(s) => {
            let (gens, pairs) = staircase_levels(s)?;
            Ok(render::levels(&gens, pairs, format))
        }
        Command::Dtable(c) => {
            let table = c.table(convention)?;
            Ok(match format {
                Format::Md => render::dtable_markdown(&table),
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json() + "\n",
            })
        }
        Command::ObstructSplit(c) => {
            let (p, q) = c.primes()?;
            let table = c.table(convention)?;
            let grid = split_obstruction(&table, p, q)?;
            Ok(match format {
                Format::Md => format!("{}\nobstructed: {}\n", grid.to_markdown(), grid.is_obstructed()),
                Format::Csv => render::split_csv(&grid),
                Format::Json => grid.to_json() + "\n",
            })
        }
        Command::ObstructMetabolizer(c) => {
            let table = c.table(convention)?;
            let cands = metabolizer_obstruction(&table)?;
            Ok(render::metabolizers(&table, &cands, format))
        }
        Command::ReproducePaper => {
            let rep = reproduce_paper(convention)?;
            Ok(match format {
                Format::Md => rep.to_markdown(),
                Format::Csv => rep.to_csv(),
                Format::Json => rep.to_json() + "\n",
            })
        }
    }
}

fn staircase_levels(s: &StaircaseArgs) -> Result<(Vec<hfsplit_core::BifiltGen>, u64), Error> {
    let set = if !s.staircase_file.is_empty() {
        load_files(&s.staircase_file)?.0
    } else {
        let kind = s.kind.ok_or_else(|| usage("give --kind or --staircase-file"))?;
        match kind {
            StaircaseKind::Torus1415 => GeneratorSet::from(&torus_14_15()),
            StaircaseKind::Whitehead22 => GeneratorSet::from(&whitehead_sum_22()),
            StaircaseKind::Consecutive => {
                let n = s.n.ok_or_else(|| usage("--kind consecutive needs --n"))?;
                GeneratorSet::from(&consecutive_torus_staircase(n)?)
            }
            StaircaseKind::Unit => {
                let k = s.k.ok_or_else(|| usage("--kind unit needs --k"))?;
                GeneratorSet::from(&unit_staircase(k))
            }
            StaircaseKind::PaperTensor => tensor(&torus_14_15(), &whitehead_sum_22())?,
        }
    };
    let pairs = set.pair_count();
    let levels = if s.pareto { hfsplit_core::pareto_min(&set) } else { set.iter().copied().collect() };
    Ok((levels, pairs))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal_inconsistency() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
