//! `steinberg`: command-line front end for the steinberg-core library.
//!
//! Exit codes: 0 success, 2 malformed input, 3 violated precondition
//! (e.g. a coweight outside the open chamber), 4 infeasible homology
//! constraints.

mod render;

use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use steinberg_core::root_datum::{parse_rational_list, recenter_gln};
use steinberg_core::{coweight_from_gln, CartanType, Coweight, Error, RootDatum, SimpleSubset, WeylGroup};

#[derive(Parser)]
#[command(name = "steinberg", version, about = "Jordan–Hölder and period-domain combinatorics for reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jordan–Hölder factors of V^G_B(w) with multiplicities.
    Factors {
        #[command(flatten)]
        group: GroupArgs,
        /// Weyl group element, e.g. `s1*s2` (`e` or `1` for the identity).
        #[arg(long = "w")]
        w: String,
        /// Print only the number of factors.
        #[arg(long)]
        count: bool,
    },
    /// The set Omega_I for a strictly dominant coweight.
    Omega {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[command(flatten)]
        subset: SubsetArgs,
    },
    /// Schubert cells of Y_I and the layout of its local cohomology complex.
    Yspace {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[command(flatten)]
        subset: SubsetArgs,
    },
    /// Levels and degrees of the complex C_*.
    Complex {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        mu: MuArgs,
        /// List the elements of every level.
        #[arg(long)]
        detail: bool,
    },
    /// Interval bounds on the composition factors of H_*(C_*).
    Homology {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        mu: MuArgs,
        /// Print the solver trace of every factor.
        #[arg(long)]
        trace: bool,
    },
    /// Kazhdan–Lusztig polynomial P_{x,w}.
    Kl {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "x")]
        x: String,
        #[arg(long = "w")]
        w: String,
        /// Print the Verma multiplicity m(x, w) instead.
        #[arg(long)]
        verma: bool,
    },
    /// Entries of the second-quadrant double complex.
    DoubleLayout {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        mu: MuArgs,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SystemArgs {
    /// Cartan type label (`A3`, `B2`, `A1xA2`, ...) or path to a matrix file.
    #[arg(long)]
    cartan: Option<String>,
    /// Use GL_n; `--mu` is then read as n coordinates summing to zero.
    #[arg(long)]
    gln: Option<usize>,
}

#[derive(Args)]
struct MuArgs {
    /// Coweight: coroot coordinates, or GL_n coordinates with `--gln`.
    /// Integers or fractions `p/q`, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// With `--gln`, subtract the mean instead of rejecting a nonzero sum.
    #[arg(long)]
    recenter: bool,
}

#[derive(Args)]
struct SubsetArgs {
    /// Simple roots, 1-based: `1,3` or `s1,s3`.
    #[arg(long, default_value = "")]
    subset: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Infeasible(_) => 4,
            e if e.is_parse() => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

pub(crate) struct Session {
    pub group: Arc<WeylGroup>,
    pub format: Format,
    gln: bool,
}

impl Session {
    fn new(args: &GroupArgs) -> Result<Self, Failure> {
        let format = if args.json { Format::Json } else { args.format };
        let cartan = match (&args.system.cartan, args.system.gln) {
            (Some(c), None) => load_cartan(c)?,
            (None, Some(n)) if n >= 2 => CartanType::from_label(&format!("A{}", n - 1))?,
            (None, Some(n)) => return Err(Error::GlnTooSmall(n).into()),
            _ => unreachable!("clap enforces exactly one of --cartan and --gln"),
        };
        let datum = Arc::new(RootDatum::new(cartan)?);
        let group = Arc::new(WeylGroup::new(datum)?);
        Ok(Session { group, format, gln: args.system.gln.is_some() })
    }

    fn mu(&self, args: &MuArgs) -> Result<Coweight, Failure> {
        let values = parse_rational_list(&args.mu)?;
        if self.gln {
            let n = self.group.rank() + 1;
            if values.len() != n {
                return Err(Error::RankMismatch { expected: n, actual: values.len() }.into());
            }
            let values = if args.recenter { recenter_gln(&values) } else { values };
            Ok(coweight_from_gln(&values)?)
        } else {
            let mu = Coweight(values);
            self.group.datum().check_rank(mu.rank())?;
            Ok(mu)
        }
    }

    fn subset(&self, args: &SubsetArgs) -> Result<SimpleSubset, Failure> {
        Ok(SimpleSubset::parse(&args.subset, self.group.rank())?)
    }
}

fn load_cartan(spec: &str) -> Result<CartanType, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure { code: 2, message: format!("cannot read {spec}: {e}") })?;
        Ok(CartanType::parse_matrix_text(&text)?)
    } else {
        Ok(CartanType::from_label(spec)?)
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let out = match cli.command {
        Command::Factors { group, w, count } => {
            let s = Session::new(&group)?;
            render::factors(&s, &w, count)?
        }
        Command::Omega { group, mu, subset } => {
            let s = Session::new(&group)?;
            render::omega(&s, &s.mu(&mu)?, s.subset(&subset)?)?
        }
        Command::Yspace { group, mu, subset } => {
            let s = Session::new(&group)?;
            render::yspace(&s, &s.mu(&mu)?, s.subset(&subset)?)?
        }
        Command::Complex { group, mu, detail } => {
            let s = Session::new(&group)?;
            render::complex(&s, &s.mu(&mu)?, detail)?
        }
        Command::Homology { group, mu, trace } => {
            let s = Session::new(&group)?;
            render::homology(&s, &s.mu(&mu)?, trace)?
        }
        Command::Kl { group, x, w, verma } => {
            let s = Session::new(&group)?;
            render::kl(&s, &x, &w, verma)?
        }
        Command::DoubleLayout { group, mu } => {
            let s = Session::new(&group)?;
            render::double_layout(&s, &s.mu(&mu)?)?
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
