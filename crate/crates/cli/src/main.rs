//! `edgewise`: edgewise subdivisions, local h-polynomials, Smirnov words and
//! the property-check suites from the command line.
//!
//! Exit status is 0 on success, 1 when a check fails, and 2 on usage errors
//! (including parameters outside the allowed range).

mod commands;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use esd_core::check::Suite;
use esd_core::{Error, SmirnovWord};

use render::{Format, Style};

#[derive(Parser)]
#[command(
    name = "edgewise",
    version,
    about = "Edgewise subdivisions of simplices and their local h-polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Seed for randomized execution order; output order never changes.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Lift the caps n <= 7, r <= 6 on commands that build the face lattice,
    /// and the cap on word enumeration.
    #[arg(long, global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Nr {
    /// Number of vertices of the simplex.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Subdivision factor.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
}

impl Nr {
    fn get(self) -> (usize, usize) {
        (self.n as usize, self.r as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LocalMethod {
    /// Inclusion-exclusion over restrictions of the triangulation.
    Definitional,
    /// `E_r (x + ... + x^{r-1})^n`.
    Operator,
    /// Ascents of Smirnov words.
    Words,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GammaMethod {
    /// Count canonical words by ascents.
    Words,
    /// Expand the local h-polynomial in the gamma basis.
    Expand,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build esd_r of the simplex on n vertices and report its face data.
    Esd(Nr),
    /// Local h-polynomial of esd_r by one or all routes.
    LocalH {
        #[command(flatten)]
        nr: Nr,
        #[arg(long, value_enum, default_value_t = LocalMethod::All)]
        method: LocalMethod,
    },
    /// Gamma-coefficients of the local h-polynomial.
    Gamma {
        #[command(flatten)]
        nr: Nr,
        #[arg(long, value_enum, default_value_t = GammaMethod::Both)]
        method: GammaMethod,
    },
    /// List the Smirnov words (w_0, ..., w_n) with w_0 = w_n = 0.
    Words {
        #[command(flatten)]
        nr: Nr,
        #[arg(long)]
        canonical_only: bool,
        /// Add double ascents, double descents, match counts and canonicity.
        #[arg(long)]
        stats: bool,
    },
    /// Valley-hopping class of a word such as 0,2,1,2,1,0.
    HopClass {
        #[arg(long)]
        word: String,
    },
    /// Cone esd_r over a new vertex and subdivide the edge to an interior
    /// vertex; compare the local h-polynomial with x h(link).
    #[command(visible_alias = "lemma41")]
    Lift {
        #[command(flatten)]
        nr: Nr,
        /// Interior vertex as a composition, e.g. 1,1,1; all when omitted.
        #[arg(long)]
        p: Option<String>,
    },
    /// Run property-check suites.
    Check {
        /// local-h, h-polynomial, complexes, gamma, hopping, binomial-series,
        /// lift, structure, roots, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: Option<u32>,
    },
    /// Real-rootedness of the local h-polynomial of esd_r, or of a given
    /// polynomial.
    Roots {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), requires = "r")]
        n: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), requires = "n")]
        r: Option<u32>,
        /// Coefficients in ascending degree, e.g. 1,1,1.
        #[arg(long, conflicts_with_all = ["n", "r"], required_unless_present = "n", allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// f-vector, h, local h, gamma-vector and real-rootedness over a grid.
    Table {
        /// Values of n: `2..4`, `2..=4`, `2,3,5` or `3`.
        #[arg(long)]
        n: String,
        /// Values of r, same syntax.
        #[arg(long)]
        r: String,
        /// Largest number of (n, r) cells allowed.
        #[arg(long, default_value_t = 64)]
        max_cells: usize,
    },
    /// Stream table rows for 1 <= n <= n-max, 1 <= r <= r-max from closed
    /// forms, without building any complex.
    EsdStats {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
    },
}

pub struct Ctx {
    pub seed: Option<u64>,
    pub unsafe_large: bool,
    pub style: Style,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                Error::InvalidParameter(_)
                | Error::InvalidWord(_)
                | Error::Parse(_)
                | Error::NotInterior(_)
                | Error::DegreeExceeds { .. }
                | Error::NotPalindromic { .. },
            ) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

/// `2..4`, `2..=4`, `2,3,5` or `3`; every value must be positive.
fn parse_values(name: &str, s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "cannot read --{name} {s:?}; expected e.g. 2..4, 2..=4, 2,3,5 or 3"
        ))
    };
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let values: Vec<usize> = if let Some((lo, hi)) = s.split_once("..") {
        let (hi, inclusive) = match hi.strip_prefix('=') {
            Some(h) => (h, true),
            None => (hi, false),
        };
        let (lo, hi) = (num(lo)?, num(hi)?);
        if inclusive {
            (lo..=hi).collect()
        } else {
            (lo..hi).collect()
        }
    } else {
        s.split(',').map(num).collect::<Result<_, _>>()?
    };
    if values.is_empty() {
        return Err(CliError::Usage(format!("--{name} {s:?} selects no values")));
    }
    if values.contains(&0) {
        return Err(CliError::Usage(format!(
            "--{name} values must be at least 1"
        )));
    }
    Ok(values)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, CliError> {
    let ctx = Ctx {
        seed: cli.seed,
        unsafe_large: cli.unsafe_large,
        style: Style::detect(cli.format),
    };
    let rendered = match cli.command {
        Command::Esd(nr) => {
            let (n, r) = nr.get();
            commands::esd(&ctx, n, r)?
        }
        Command::LocalH { nr, method } => {
            let (n, r) = nr.get();
            commands::local_h(&ctx, n, r, method)?
        }
        Command::Gamma { nr, method } => {
            let (n, r) = nr.get();
            commands::gamma(&ctx, n, r, method)?
        }
        Command::Words {
            nr,
            canonical_only,
            stats,
        } => {
            let (n, r) = nr.get();
            commands::words(&ctx, n, r, canonical_only, stats)?
        }
        Command::HopClass { word } => {
            let w: SmirnovWord = word.parse()?;
            commands::hop(&ctx, &w)?
        }
        Command::Lift { nr, p } => {
            let (n, r) = nr.get();
            commands::interior_lifts(&ctx, n, r, p.as_deref())?
        }
        Command::Check {
            suite,
            n_max,
            r_max,
        } => {
            let suite = match suite.as_str() {
                "all" => None,
                s => Some(s.parse::<Suite>().map_err(|_| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    CliError::Usage(format!(
                        "unknown suite {s:?}; choose all, {}",
                        names.join(", ")
                    ))
                })?),
            };
            commands::check(
                &ctx,
                suite,
                n_max.map(|v| v as usize),
                r_max.map(|v| v as usize),
            )?
        }
        Command::Roots { n, r, poly } => {
            let p = match (poly, n, r) {
                (Some(text), _, _) => commands::parse_polynomial(&text)?,
                (None, Some(n), Some(r)) => {
                    esd_core::smirnov::local_h_via_operator(n as usize, r as usize)?
                }
                _ => return Err(CliError::Usage("give --poly or both --n and --r".into())),
            };
            commands::roots(&ctx, p)?
        }
        Command::Table { n, r, max_cells } => {
            let ns = parse_values("n", &n)?;
            let rs = parse_values("r", &r)?;
            commands::table(&ctx, &ns, &rs, max_cells)?
        }
        Command::EsdStats { n_max, r_max } => {
            commands::esd_stats(cli.format, out, n_max as usize, r_max as usize)?;
            return Ok(true);
        }
    };
    render::emit(out, cli.format, &rendered)?;
    Ok(rendered.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(true) => match flushed {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("edgewise: {e}");
                ExitCode::from(1)
            }
        },
        Ok(false) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let code = e.exit_code();
            match &e {
                CliError::Usage(m) => eprintln!("edgewise: {m}"),
                CliError::Core(c) => eprintln!("edgewise: {c}"),
                CliError::Io(io) => eprintln!("edgewise: {io}"),
            }
            ExitCode::from(code)
        }
    }
}
