//! Command-line surface: scenarios, suites, probes, certificates.
//!
//! Exit status: 0 when every assertion holds, 1 on a violated assertion, 2 on
//! usage or parse errors, 3 when a cap stopped the run.

pub mod catalog;
pub mod certificate;
pub mod probes;
pub mod scenarios;
pub mod spec;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{GroupError, Limits, Result};
use crate::hall::PrimeSet;

pub use catalog::{Catalog, CatalogEntry, DEFAULT_MAX_ORDER};
pub use certificate::{verify, Certificate, CertificateKind, Claim, GroupRecord, Replay};
pub use probes::run_probe;
pub use scenarios::{analyze, example1, example2, theorem3, ScenarioReport};
pub use spec::GroupSpec;
pub use suites::{run_suite, Suite, SuiteSummary};

#[derive(Debug, Parser)]
#[command(
    name = "hallgroup",
    version,
    about = "Hall subgroups and pronormality in finite permutation groups"
)]
pub struct Cli {
    /// Largest catalog member order for suites and probes.
    #[arg(long, global = true, env = "HALLGROUP_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u128,
    /// Largest group enumerated element by element.
    #[arg(long, global = true, env = "HALLGROUP_ENUM_CAP", default_value_t = 2_000_000)]
    pub enum_cap: u128,
    /// Largest group whose subgroup lattice is enumerated.
    #[arg(long, global = true, env = "HALLGROUP_SUBGROUP_CAP", default_value_t = 10_000)]
    pub subgroup_cap: u128,
    /// Largest index for coset actions.
    #[arg(long, global = true, env = "HALLGROUP_INDEX_CAP", default_value_t = 10_000)]
    pub index_cap: u128,
    /// Directory receiving certificates.
    #[arg(long, global = true, env = "HALLGROUP_OUT", default_value = "certificates")]
    pub out: PathBuf,
    /// Worker threads for suites and probes; 0 uses every core.
    #[arg(long, global = true, env = "HALLGROUP_JOBS", default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// E/C/D verdicts, Hall classes and pronormality for one group.
    Analyze {
        /// Group spec, e.g. `psl2:7` or `product(sym:3,cyc:5)`.
        spec: Option<String>,
        #[arg(long = "group", conflicts_with = "spec")]
        group: Option<String>,
        /// Comma-separated primes.
        #[arg(long, default_value = "")]
        pi: String,
    },
    /// SL2(16) against its subgroup SL2(4) for π = {3,5}.
    Example1,
    /// The pointwise stabilizer Sym(m) in Sym(n).
    Example2 {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// A non-pronormal Hall subgroup in a regular wreath product.
    Theorem3 {
        #[arg(long, default_value = "psl2:7")]
        base: String,
        #[arg(long, default_value = "2,3")]
        pi: String,
        #[arg(long, default_value_t = 5)]
        p: u64,
    },
    /// Run a property suite over the catalog.
    Suite {
        /// theorem1, theorem2, lemmas, classical-pronormal or towers.
        name: String,
    },
    /// Search the catalog for counterexamples to the two open questions, numbered 9 and 11.
    Probe { conjecture: u32 },
    /// Replay certificate files.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// List the catalog.
    Catalog,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            enum_cap: self.enum_cap,
            subgroup_cap: self.subgroup_cap,
            index_cap: self.index_cap,
        }
    }
}

pub fn exit_code_for(e: &GroupError) -> i32 {
    match e {
        GroupError::CapExceeded { .. } => 3,
        GroupError::Parse(_)
        | GroupError::Io(_)
        | GroupError::Precondition(_)
        | GroupError::NotPrime(_)
        | GroupError::DegreeMismatch(..)
        | GroupError::NotAPermutation(_) => 2,
        _ => 1,
    }
}

/// `println!` that keeps going when stdout is a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn write_certificates(cli: &Cli, certs: &[Certificate]) -> Result<()> {
    for c in certs {
        let path = c.write_to(&cli.out)?;
        out!("certificate: {}", path.display());
    }
    Ok(())
}

fn print_scenario(cli: &Cli, r: &ScenarioReport) -> Result<i32> {
    for line in &r.lines {
        out!("{line}");
    }
    write_certificates(cli, &r.certificates)?;
    let status = if r.informational {
        "informational"
    } else if r.passed {
        "pass"
    } else {
        "FAIL"
    };
    out!("result: {status}");
    Ok(r.exit_code())
}

fn print_summary(cli: &Cli, s: &SuiteSummary) -> Result<i32> {
    out!("{}", s.report());
    write_certificates(cli, &s.certificates)?;
    Ok(s.exit_code())
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| GroupError::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn execute(cli: &Cli) -> Result<i32> {
    let limits = cli.limits();
    match &cli.command {
        Command::Analyze { spec, group, pi } => {
            let text = spec
                .as_ref()
                .or(group.as_ref())
                .ok_or_else(|| GroupError::Parse("a group spec is required".into()))?;
            let spec: GroupSpec = text.parse()?;
            print_scenario(cli, &analyze(&spec, &pi.parse::<PrimeSet>()?, &limits)?)
        }
        Command::Example1 => print_scenario(cli, &example1(&limits)?),
        Command::Example2 { n, m } => print_scenario(cli, &example2(*n, *m, &limits)?),
        Command::Theorem3 { base, pi, p } => {
            let base: GroupSpec = base.parse()?;
            print_scenario(cli, &theorem3(&base, &pi.parse()?, *p, &limits)?)
        }
        Command::Suite { name } => {
            let suite: Suite = name.parse()?;
            let catalog = Catalog::build(cli.max_order)?;
            let s = with_pool(cli.jobs, || run_suite(suite, &catalog, &limits))?;
            print_summary(cli, &s)
        }
        Command::Probe { conjecture } => {
            let catalog = Catalog::build(cli.max_order)?;
            let s = with_pool(cli.jobs, || run_probe(*conjecture, &catalog, &limits))??;
            print_summary(cli, &s)?;
            Ok(0)
        }
        Command::Verify { files } => {
            let mut code = 0;
            for f in files {
                let replay = Certificate::read_from(f).and_then(|c| verify(&c));
                let r = match replay {
                    Ok(r) => r,
                    Err(e) => {
                        out!("{}: unreadable: {e}", f.display());
                        code = code.max(exit_code_for(&e));
                        continue;
                    }
                };
                for c in &r.confirmed {
                    out!("  ok: {c}");
                }
                for c in &r.failures {
                    out!("  FAILED: {c}");
                }
                out!("{}: {}", f.display(), if r.ok() { "verified" } else { "REJECTED" });
                if !r.ok() {
                    code = code.max(1);
                }
            }
            Ok(code)
        }
        Command::Catalog => {
            let catalog = Catalog::build(cli.max_order)?;
            for e in &catalog.entries {
                out!("{}\torder {}\tdegree {}", e.name, e.group.order(), e.group.degree());
            }
            out!("{} groups of order at most {}", catalog.len(), catalog.max_order);
            Ok(0)
        }
    }
}

/// Parses arguments, runs the command and returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
