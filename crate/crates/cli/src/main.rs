mod emit;
mod sweep;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qcong::cyclofactor::{d_set, divisors, s_set, verify_qbinom_factorization, CycloTable};
use qcong::families::{Check, Family, Lemma};

use sweep::{Ranges, Span};

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const TOOL_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "qcong", version, about = "Exact verification of q-series congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep families or lemmas over parameter ranges.
    Verify {
        /// Check ids, comma separated (see `qcong list`).
        #[arg(long, value_delimiter = ',', required = true)]
        family: Vec<String>,
        #[command(flatten)]
        ranges: RangeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the cyclotomic decomposition of [n][2n-1, n-1] in q^base.
    Factor {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        base: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check a single lemma cell.
    Lemma {
        /// Lemma id.
        id: String,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        sidx: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        base: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check that consecutive partial sums bracket 2/pi.
    Ramanujan {
        /// Partial-sum index N, or a range.
        #[arg(long)]
        n: Span,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List every check id with the parameters it reads.
    List,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long)]
    n: Option<Span>,
    #[arg(long)]
    r: Option<Span>,
    #[arg(long)]
    s: Option<Span>,
    #[arg(long)]
    d: Option<Span>,
    #[arg(long)]
    t: Option<Span>,
    #[arg(long)]
    k: Option<Span>,
    #[arg(long)]
    sidx: Option<Span>,
    #[arg(long)]
    p: Option<Span>,
    #[arg(long)]
    base: Option<Span>,
}

impl From<RangeArgs> for Ranges {
    fn from(a: RangeArgs) -> Self {
        Ranges { n: a.n, r: a.r, s: a.s, d: a.d, t: a.t, k: a.k, sidx: a.sidx, p: a.p, base: a.base }
    }
}

#[derive(Args, Clone, Copy)]
struct OutputArgs {
    /// Newline-delimited JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Worker threads.
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
    /// Print witnesses in full.
    #[arg(long)]
    verbose: bool,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("qcong: {msg}");
    ExitCode::from(TOOL_ERROR)
}

fn sweep(checks: &[Check], ranges: &Ranges, out: OutputArgs) -> ExitCode {
    let cells = match sweep::cells(checks, ranges) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let stdout = io::stdout();
    let mut w = stdout.lock();
    if !out.json {
        let _ = writeln!(w, "{}", emit::TABLE_HEADER);
    }
    let mut status = HOLDS;
    sweep::run(cells.clone(), out.jobs, |i, result| match result {
        Ok(r) => {
            if !r.holds && status == HOLDS {
                status = FAILS;
            }
            let line = if out.json { emit::json_line(r, out.verbose) } else { emit::table_row(r) };
            let _ = writeln!(w, "{line}");
        }
        Err(e) => {
            let (check, params) = cells[i];
            eprintln!("qcong: {check} {params}: {e}");
            status = TOOL_ERROR;
        }
    });
    ExitCode::from(status)
}

fn factor(n: u64, base: u64, as_json: bool) -> ExitCode {
    if n < 2 || !(1..=2).contains(&base) {
        return usage_error("factor needs n >= 2 and base 1 or 2");
    }
    let a = s_set(n).members;
    let (even_div, odd_div): (Vec<u64>, Vec<u64>) =
        divisors(n).into_iter().filter(|&d| d > 1).partition(|d| d % 2 == 0);
    let even_d: Vec<u64> = d_set(2 * n - 1, n - 1).members.into_iter().filter(|d| d % 2 == 0).collect();
    let report = verify_qbinom_factorization(n, base, &CycloTable::new());
    if as_json {
        let v = json!({
            "n": n,
            "base": base,
            "a": a,
            "c": odd_div,
            "even_divisors": even_div,
            "even_d": even_d,
            "holds": report.holds,
        });
        println!("{v}");
    } else {
        let list = |v: &[u64]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|d| format!("Phi{d}")).collect::<Vec<_>>().join(" ")
            }
        };
        println!("[{n}][{}, {}] in q^{base}", 2 * n - 1, n - 1);
        println!("A_n           {}", list(&a));
        println!("C_n           {}", list(&odd_div));
        println!("even d | n    {}", list(&even_div));
        println!("even d in D   {}", list(&even_d));
        println!("identity      {}", if report.holds { "holds" } else { "FAILS" });
    }
    ExitCode::from(if report.holds { HOLDS } else { FAILS })
}

fn list() -> ExitCode {
    for c in Check::all() {
        let kind = if matches!(c, Check::Family(_)) { "family" } else { "lemma" };
        println!("{:<15} {kind:<7} {}", c.id(), c.params().join(" "));
    }
    ExitCode::from(HOLDS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { family, ranges, out } => {
            let checks: Result<Vec<Check>, _> = family.iter().map(|f| f.parse::<Check>()).collect();
            match checks {
                Ok(checks) => sweep(&checks, &ranges.into(), out),
                Err(e) => usage_error(e),
            }
        }
        Command::Factor { n, base, json } => factor(n, base, json),
        Command::Lemma { id, d, t, k, sidx, r, s, n, base, out } => {
            let lemma = match id.parse::<Lemma>() {
                Ok(l) => l,
                Err(e) => return usage_error(e),
            };
            let one = |v: Option<u64>| v.map(|v| Span(v..=v));
            let ranges = Ranges {
                n: one(n),
                r: one(r),
                s: one(s),
                d: one(d),
                t: one(t),
                k: one(k),
                sidx: one(sidx),
                p: None,
                base: one(base),
            };
            sweep(&[Check::Lemma(lemma)], &ranges, out)
        }
        Command::Ramanujan { n, out } => {
            let ranges = Ranges { n: Some(n), ..Ranges::default() };
            sweep(&[Check::Family(Family::Series4k1)], &ranges, out)
        }
        Command::List => list(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
