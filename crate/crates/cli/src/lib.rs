//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use oddpower_core::engine::partials;
use oddpower_core::io::report_json;
use oddpower_core::{
    build_f, check_theorem, derivative_combination, eval_derivative_at, odd_power,
    odd_power_derivative_at, render, solve_coeffs, verify_identity, Rational, RenderFormat,
    TheoremReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Orders above this need `--allow-large`.
pub const SOFT_MAX_Y: u32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "oddpower",
    version,
    about = "Exact checks of the odd-power partial-derivative identity"
)]
struct Cli {
    /// Lift the guard on orders above 64.
    #[arg(long, global = true)]
    allow_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficient row A_{m,0..m}.
    Coeffs {
        m: u32,
        #[arg(long, value_enum, default_value_t = CoeffFormat::Plain)]
        format: CoeffFormat,
    },
    /// Print f_y(x, z).
    Poly {
        y: u32,
        #[arg(long, value_enum, default_value_t = PolyFormat::Plain)]
        format: PolyFormat,
    },
    /// Print a partial derivative of f_y, or the sum of both.
    Diff {
        y: u32,
        #[arg(long, value_enum)]
        var: DiffVar,
        #[arg(long, value_enum, default_value_t = PolyFormat::Plain)]
        format: PolyFormat,
    },
    /// Evaluate the sum of partials at (u, u) and compare with (2y+1) u^(2y).
    Eval {
        y: u32,
        /// Integer or `a/b`.
        #[arg(long, allow_hyphen_values = true)]
        at: Rational,
    },
    /// Check the derivative and diagonal identities for y = 0..=N.
    Verify {
        #[arg(long, default_value_t = 25)]
        max_y: u32,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Plain)]
        format: VerifyFormat,
    },
    /// Check the odd-power identity by literal integer summation.
    Oracle {
        m: u32,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoeffFormat {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolyFormat {
    Plain,
    Latex,
    Json,
}

impl From<PolyFormat> for RenderFormat {
    fn from(f: PolyFormat) -> Self {
        match f {
            PolyFormat::Plain => RenderFormat::Plain,
            PolyFormat::Latex => RenderFormat::Latex,
            PolyFormat::Json => RenderFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DiffVar {
    X,
    Z,
    Both,
}

impl Command {
    /// The order the command will build, for the soft guard.
    fn order(&self) -> u32 {
        match *self {
            Command::Coeffs { m, .. } | Command::Oracle { m, .. } => m,
            Command::Poly { y, .. } | Command::Diff { y, .. } | Command::Eval { y, .. } => y,
            Command::Verify { max_y, .. } => max_y,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    let order = cli.command.order();
    if order > SOFT_MAX_Y && !cli.allow_large {
        let _ = writeln!(
            err,
            "error: order {order} exceeds the soft limit of {SOFT_MAX_Y}; pass --allow-large to proceed"
        );
        return EXIT_USAGE;
    }
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn execute(command: &Command, out: &mut impl Write) -> std::io::Result<i32> {
    match *command {
        Command::Coeffs { m, format } => match solve_coeffs(m) {
            Ok(row) => {
                let text = match format {
                    CoeffFormat::Plain => row.to_plain(),
                    CoeffFormat::Json => row.to_json(),
                };
                writeln!(out, "{text}")?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(out, "FAIL: {e}")?;
                Ok(EXIT_FAILED)
            }
        },
        Command::Poly { y, format } => {
            writeln!(out, "{}", render(&build_f(y), format.into()))?;
            Ok(EXIT_OK)
        }
        Command::Diff { y, var, format } => {
            let p = match var {
                DiffVar::X => partials(y).0,
                DiffVar::Z => partials(y).1,
                DiffVar::Both => derivative_combination(y),
            };
            writeln!(out, "{}", render(&p, format.into()))?;
            Ok(EXIT_OK)
        }
        Command::Eval { y, ref at } => {
            let got = eval_derivative_at(y, at);
            let want = odd_power_derivative_at(y, at);
            let ok = got == want;
            writeln!(out, "[(f_{y})'_x + (f_{y})'_z]({at}, {at}) = {got}")?;
            writeln!(out, "{}*({at})^{} = {want}", 2 * y + 1, 2 * y)?;
            writeln!(
                out,
                "{got} = {want}: {}",
                if ok { "PASS" } else { "FAIL (mismatch)" }
            )?;
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Verify { max_y, format } => verify(max_y, format, out),
        Command::Oracle { m, max_n } => {
            let ok = verify_identity(m, max_n);
            writeln!(out, "m={m} n=1..{max_n}: {}", pass_fail(ok))?;
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify(max_y: u32, format: VerifyFormat, out: &mut impl Write) -> std::io::Result<i32> {
    let rows: Vec<_> = (0..=max_y)
        .map(|y| {
            let report = check_theorem(y);
            let diagonal = report.f_poly.substitute_diagonal() == odd_power(y);
            (report, diagonal)
        })
        .collect();
    write_verify_table(&rows, format, out)
}

fn write_verify_table(
    rows: &[(TheoremReport, bool)],
    format: VerifyFormat,
    out: &mut impl Write,
) -> std::io::Result<i32> {
    let mut failures = 0;
    if let VerifyFormat::Plain = format {
        writeln!(out, "{:>4}  {:<8}  diagonal", "y", "theorem")?;
    }
    for (report, diagonal) in rows {
        if !(report.holds && *diagonal) {
            failures += 1;
        }
        match format {
            VerifyFormat::Plain => writeln!(
                out,
                "{:>4}  {:<8}  {}",
                report.y,
                pass_fail(report.holds),
                pass_fail(*diagonal)
            )?,
            VerifyFormat::Json => writeln!(
                out,
                r#"{{"y":{},"diagonal":{},"report":{}}}"#,
                report.y,
                diagonal,
                report_json(report)
            )?,
        }
    }
    if let VerifyFormat::Plain = format {
        let total = rows.len();
        if failures == 0 {
            writeln!(out, "all {total} orders PASS")?;
        } else {
            writeln!(out, "{failures} of {total} orders FAIL")?;
        }
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAILED })
}
