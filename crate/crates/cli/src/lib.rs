//! Command-line front end. [`run`] takes the full argument list and writers
//! for standard output and error and returns the process exit code:
//! 0 on success, 1 for bad input or usage, 2 when a property check fails.

#![allow(clippy::result_large_err)]

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use erodist::landscape::{invert_by_degree, invert_by_peeling, validate};
use erodist::metrics::{bottleneck, embed_finite_metric, erosion_path_length, gap_example, Metric};
use erodist::text::{self, ParseError};
use erodist::verify::run_all;
use erodist::{Execution, LandscapeSequence, PersistenceDiagram, Scalar};

mod svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "erodist", version, about = "Exact distances between persistence diagrams")]
struct Cli {
    /// Print numbers as decimals rounded to N places instead of exact fractions.
    #[arg(long, global = true, value_name = "N")]
    decimal: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance between two diagrams.
    Dist {
        #[arg(long, value_enum)]
        metric: MetricArg,
        a: PathBuf,
        b: PathBuf,
        /// Also print an optimal matching (bottleneck only).
        #[arg(long)]
        witness: bool,
    },
    /// Build the landscape of a diagram.
    LandscapeBuild {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover the diagram of a landscape.
    LandscapeInvert {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "degree")]
        method: Method,
    },
    /// Check that a file describes a landscape sequence.
    LandscapeValidate { input: PathBuf },
    /// Local radius of a diagram.
    Radius { input: PathBuf },
    /// Embed a finite metric as birth-zero diagrams, one file per point.
    Embed {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Erosion length of the straight path between two diagrams.
    PathLength {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 64)]
        segments: usize,
    },
    /// Print a pair with erosion distance strictly below bottleneck distance.
    GapDemo,
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Run cases one after another.
        #[arg(long)]
        sequential: bool,
    },
    /// Render a landscape as SVG.
    Plot {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricArg {
    Bottleneck,
    Erosion,
    Landscape,
    Birthzero,
    Dv,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Bottleneck => Metric::Bottleneck,
            MetricArg::Erosion => Metric::Erosion,
            MetricArg::Landscape => Metric::Landscape,
            MetricArg::Birthzero => Metric::BirthZero,
            MetricArg::Dv => Metric::DeathVector,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Degree,
    Peeling,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Compute(#[from] erodist::Error),
    #[error("{0}")]
    Usage(String),
}

/// What a command produced: text for stdout and whether a check failed.
struct Outcome {
    text: String,
    violation: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, violation: false }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parsed<T>(path: &Path, f: impl Fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    f(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn load_diagram(path: &Path) -> Result<PersistenceDiagram, CliError> {
    parsed(path, text::parse_diagram)
}

struct Fmt {
    decimal: Option<usize>,
}

impl Fmt {
    fn num(&self, x: &Scalar) -> String {
        match self.decimal {
            Some(n) => x.to_decimal(n),
            None => x.to_string(),
        }
    }
}

fn dist(fmt: &Fmt, metric: Metric, a: &Path, b: &Path, witness: bool) -> Result<Outcome, CliError> {
    if witness && metric != Metric::Bottleneck {
        return Err(CliError::Usage("--witness is only available with --metric bottleneck".into()));
    }
    let (ya, yb) = (load_diagram(a)?, load_diagram(b)?);
    if !witness {
        return Ok(Outcome::ok(format!("{}\n", fmt.num(&metric.distance(&ya, &yb)?))));
    }
    let (d, m) = bottleneck(&ya, &yb);
    let (pa, pb) = (ya.points(), yb.points());
    let mut out = format!("{}\n", fmt.num(&d));
    for &(i, j) in m.matched() {
        let (p, q) = (&pa[i], &pb[j]);
        let _ = writeln!(
            out,
            "{} {} -> {} {}  cost {}",
            p.birth(),
            p.death(),
            q.birth(),
            q.death(),
            fmt.num(&p.linf(q))
        );
    }
    for &i in m.unmatched_left() {
        let p = &pa[i];
        let _ = writeln!(out, "{} {} -> diagonal  cost {}", p.birth(), p.death(), fmt.num(&p.diagonal_cost()));
    }
    for &j in m.unmatched_right() {
        let q = &pb[j];
        let _ = writeln!(out, "diagonal -> {} {}  cost {}", q.birth(), q.death(), fmt.num(&q.diagonal_cost()));
    }
    Ok(Outcome::ok(out))
}

fn landscape_build(input: &Path, output: Option<&Path>) -> Result<Outcome, CliError> {
    let lam = LandscapeSequence::from_diagram(&load_diagram(input)?);
    let body = text::format_landscape(&lam);
    match output {
        Some(path) => {
            write_file(path, &body)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(body)),
    }
}

fn landscape_invert(input: &Path, method: Method) -> Result<Outcome, CliError> {
    let lam = parsed(input, text::parse_landscape)?;
    let y = match method {
        Method::Degree => invert_by_degree(&lam),
        Method::Peeling => invert_by_peeling(&lam)?,
    };
    Ok(Outcome::ok(text::format_diagram(&y)))
}

fn landscape_validate(input: &Path) -> Result<Outcome, CliError> {
    let raw = parsed(input, text::parse_landscape_curves)?;
    let report = validate(&raw);
    Ok(Outcome {
        text: report.to_string(),
        violation: !report.is_ok(),
    })
}

fn embed(input: &Path, dir: &Path) -> Result<Outcome, CliError> {
    let metric = parsed(input, text::parse_metric)?;
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    let mut listing = String::new();
    for (i, y) in embed_finite_metric(&metric).iter().enumerate() {
        let path = dir.join(format!("point{i}.dgm"));
        write_file(&path, &text::format_diagram(y))?;
        let _ = writeln!(listing, "{}", path.display());
    }
    Ok(Outcome::ok(listing))
}

fn gap_demo(fmt: &Fmt) -> Outcome {
    let g = gap_example();
    Outcome::ok(format!(
        "# Y\n{}# Y'\n{}bottleneck {}\nerosion {}\n",
        g.left,
        g.right,
        fmt.num(&g.bottleneck),
        fmt.num(&g.erosion)
    ))
}

fn verify(seed: u64, cases: usize, sequential: bool) -> Outcome {
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let outcomes = run_all(seed, cases, exec);
    let mut out = String::new();
    for o in &outcomes {
        let _ = writeln!(out, "{o}");
    }
    for o in &outcomes {
        if let Some((case, example)) = &o.counterexample {
            let _ = write!(out, "\n{} counterexample (case {case}):\n{example}", o.name);
        }
    }
    Outcome {
        text: out,
        violation: outcomes.iter().any(|o| !o.passed()),
    }
}

fn plot(input: &Path, output: &Path) -> Result<Outcome, CliError> {
    let lam = parsed(input, text::parse_landscape)?;
    write_file(output, &svg::render(&lam))?;
    Ok(Outcome::ok(String::new()))
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    let fmt = Fmt { decimal: cli.decimal };
    match cli.command {
        Command::Dist { metric, a, b, witness } => dist(&fmt, metric.into(), &a, &b, witness),
        Command::LandscapeBuild { input, output } => landscape_build(&input, output.as_deref()),
        Command::LandscapeInvert { input, method } => landscape_invert(&input, method),
        Command::LandscapeValidate { input } => landscape_validate(&input),
        Command::Radius { input } => {
            let r = load_diagram(&input)?.local_radius()?;
            Ok(Outcome::ok(format!("{}\n", fmt.num(&r))))
        }
        Command::Embed { input, output } => embed(&input, &output),
        Command::PathLength { a, b, segments } => {
            let len = erosion_path_length(&load_diagram(&a)?, &load_diagram(&b)?, segments)?;
            Ok(Outcome::ok(format!("{}\n", fmt.num(&len))))
        }
        Command::GapDemo => Ok(gap_demo(&fmt)),
        Command::Verify { seed, cases, sequential } => Ok(verify(seed, cases, sequential)),
        Command::Plot { input, output } => plot(&input, &output),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli) {
        Ok(outcome) => {
            let _ = write!(out, "{}", outcome.text);
            if outcome.violation {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
