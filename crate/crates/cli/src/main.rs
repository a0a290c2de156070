//! `congruum` command-line front end.
//!
//! Exit codes: 0 success or verified, 1 domain outcome (counterexample,
//! mismatch, or violated precondition), 2 usage error.

mod output;
mod records;

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use congruum::apsquares::{self, AbdForm};
use congruum::constructions::{self, QuadParams, QuadSumWitness, Triangle};
use congruum::intcore::is_perfect_square;
use congruum::{descent, triples, Natural};

use output::{Format, Kind, Record, RecordWriter};

#[derive(Parser)]
#[command(
    name = "congruum",
    version,
    about = "Exact arithmetic on arithmetic progressions of three squares"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "jsonl", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate Pythagorean triples with hypotenuse up to --max-c
    Triples {
        #[arg(long = "max-c", value_parser = parse_positive)]
        max_c: Natural,
        /// Also emit every scaling k*(a, b, c) with k*c <= --max-c
        #[arg(long)]
        include_scaled: bool,
    },
    /// List progressions of three squares with congruum up to --max
    Congruums {
        #[arg(long, value_parser = parse_positive)]
        max: Natural,
        #[arg(long, value_enum, default_value = "formula")]
        mode: Mode,
        #[arg(long, default_value_t = 1, value_parser = parse_jobs)]
        jobs: usize,
    },
    /// Run a bounded exhaustive sweep
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, value_parser = parse_positive)]
        bound: Natural,
        #[arg(long, default_value_t = 1, value_parser = parse_jobs)]
        jobs: usize,
    },
    /// Build a single object from its parameters
    #[command(subcommand)]
    Construct(Construct),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Formula,
    Oracle,
    CrossCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    NoSquareCongruum,
    NoSquareArea,
    Descent,
    FourthPowers,
}

#[derive(Subcommand)]
enum Construct {
    /// Pythagorean quadruple from (m, n, p, q) with m + n + p + q odd
    Quadruple(Mnpq),
    /// 16*A^2 (and A when integral) of a triangle
    Heron {
        #[arg(long, value_parser = parse_sides)]
        sides: [Natural; 3],
    },
    /// Triangle (u^2 - m^2, u^2 - n^2, u^2 - v^2) from u^2 = m^2 + n^2 + v^2
    Proof3Triangle(Mnvu),
    /// Coprime split of m*n = u*v into (w, x, y, z)
    Split(Mnvu),
    /// Solution of a^2 + 2b^2 = d^2
    Abd {
        #[arg(long, value_parser = parse_natural)]
        m: Natural,
        #[arg(long, value_parser = parse_natural)]
        n: Natural,
        #[arg(long, value_parser = parse_form, default_value = "sol1")]
        form: AbdForm,
    },
    /// Progression of three squares from generator (m, n, s)
    Congruum {
        #[arg(long, value_parser = parse_natural)]
        m: Natural,
        #[arg(long, value_parser = parse_natural)]
        n: Natural,
        #[arg(long, value_parser = parse_natural, default_value = "1")]
        s: Natural,
    },
}

#[derive(Args)]
struct Mnpq {
    #[arg(long, value_parser = parse_natural)]
    m: Natural,
    #[arg(long, value_parser = parse_natural)]
    n: Natural,
    #[arg(long, value_parser = parse_natural)]
    p: Natural,
    #[arg(long, value_parser = parse_natural)]
    q: Natural,
}

#[derive(Args)]
struct Mnvu {
    #[arg(long, value_parser = parse_natural)]
    m: Natural,
    #[arg(long, value_parser = parse_natural)]
    n: Natural,
    #[arg(long, value_parser = parse_natural)]
    u: Natural,
    #[arg(long, value_parser = parse_natural)]
    v: Natural,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a non-negative decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_positive(s: &str) -> Result<Natural, String> {
    let n = parse_natural(s)?;
    if n == Natural::from(0u32) {
        return Err("must be at least 1".into());
    }
    Ok(n)
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(j) if j >= 1 => Ok(j),
        _ => Err(format!("`{s}` is not a positive worker count")),
    }
}

fn parse_sides(s: &str) -> Result<[Natural; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y, z] = parts.as_slice() else {
        return Err("expected three comma-separated sides".into());
    };
    Ok([parse_natural(x)?, parse_natural(y)?, parse_natural(z)?])
}

fn parse_form(s: &str) -> Result<AbdForm, String> {
    s.parse().map_err(|e: congruum::Error| e.to_string())
}

/// Outcome of a command before it becomes an exit code.
enum Outcome {
    Ok,
    /// Counterexample, mismatch, or precondition violation.
    Domain,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = RecordWriter::new(io::BufWriter::new(stdout.lock()), cli.format);
    let result = run(cli.command, &mut out).and_then(|o| out.flush().map(|_| o));
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Domain) => ExitCode::from(1),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("congruum: {e}");
            ExitCode::from(1)
        }
    }
}

fn run<W: Write>(command: Command, out: &mut RecordWriter<W>) -> io::Result<Outcome> {
    match command {
        Command::Triples {
            max_c,
            include_scaled,
        } => {
            if include_scaled {
                for (params, t) in triples::enumerate_scaled_triples(&max_c) {
                    out.write(&records::scaled_triple(&params, &t))?;
                }
            } else {
                for (params, t) in triples::enumerate_primitive_triples(&max_c) {
                    out.write(&records::triple(&params, &t))?;
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Congruums { max, mode, jobs } => congruums(&max, mode, jobs, out),
        Command::Verify {
            target,
            bound,
            jobs,
        } => verify(target, &bound, jobs, out),
        Command::Construct(c) => construct(c, out),
    }
}

fn congruums<W: Write>(
    max: &Natural,
    mode: Mode,
    jobs: usize,
    out: &mut RecordWriter<W>,
) -> io::Result<Outcome> {
    match mode {
        Mode::Formula => {
            for w in apsquares::enumerate_congruums_sharded(max, jobs) {
                out.write(&records::witness(&w))?;
            }
            Ok(Outcome::Ok)
        }
        Mode::Oracle => {
            let mut found: Vec<_> = apsquares::brute_force_congruums_sharded(max, jobs)
                .into_iter()
                .collect();
            found.sort_by(|x, y| (&x.r, &x.a).cmp(&(&y.r, &y.a)));
            for p in &found {
                out.write(&records::progression(p))?;
            }
            Ok(Outcome::Ok)
        }
        Mode::CrossCheck => {
            let started = Instant::now();
            let formula: BTreeSet<_> = apsquares::enumerate_congruums_sharded(max, jobs)
                .iter()
                .map(|w| w.progression())
                .collect();
            let oracle = apsquares::brute_force_congruums_sharded(max, jobs);
            let formula_values: BTreeSet<_> = formula.iter().map(|p| p.r.clone()).collect();
            let oracle_values: BTreeSet<_> = oracle.iter().map(|p| p.r.clone()).collect();
            let only_formula = formula.difference(&oracle).count();
            let only_oracle = oracle.difference(&formula).count();
            let squares = oracle
                .iter()
                .chain(formula.iter())
                .filter(|p| is_perfect_square(&p.r))
                .count();
            let agree = only_formula == 0 && only_oracle == 0 && formula_values == oracle_values;
            let ok = agree && squares == 0;
            eprintln!(
                "cross-check up to {max}: {} formula / {} oracle progressions, {}",
                formula.len(),
                oracle.len(),
                if ok { "identical" } else { "MISMATCH" }
            );
            let rec = Record::new(Kind::Report)
                .field("target", "cross-check")
                .field("bound", max)
                .field("formula_count", formula.len())
                .field("oracle_count", oracle.len())
                .field("distinct_values", oracle_values.len())
                .field("only_formula", only_formula)
                .field("only_oracle", only_oracle)
                .field("square_congruums", squares)
                .field("status", if ok { "verified" } else { "falsified" })
                .field("elapsed_ms", started.elapsed().as_millis());
            out.write(&rec)?;
            Ok(if ok { Outcome::Ok } else { Outcome::Domain })
        }
    }
}

fn verify<W: Write>(
    target: Target,
    bound: &Natural,
    jobs: usize,
    out: &mut RecordWriter<W>,
) -> io::Result<Outcome> {
    let rec = match target {
        Target::NoSquareCongruum => records::report(
            &apsquares::verify_no_square_congruum(bound, jobs),
            records::progression_brief,
        ),
        Target::NoSquareArea => records::report(
            &descent::verify_no_square_area(bound, jobs),
            records::square_area_brief,
        ),
        Target::Descent => records::report(
            &descent::verify_descent_bound(bound, jobs),
            records::candidate_brief,
        ),
        Target::FourthPowers => records::report(
            &apsquares::check_fourth_power_equations(bound, jobs),
            records::fourth_power_brief,
        ),
    };
    let passed = rec
        .fields
        .iter()
        .any(|(k, v)| *k == "status" && v == "verified");
    eprintln!(
        "{}: {}",
        rec.fields[0].1,
        if passed {
            "0 counterexamples"
        } else {
            "COUNTEREXAMPLES FOUND"
        }
    );
    out.write(&rec)?;
    Ok(if passed { Outcome::Ok } else { Outcome::Domain })
}

fn construct<W: Write>(c: Construct, out: &mut RecordWriter<W>) -> io::Result<Outcome> {
    let result = match c {
        Construct::Quadruple(Mnpq { m, n, p, q }) => {
            QuadParams::new(m, n, p, q).and_then(|params| {
                constructions::quadruple_from_params(&params)
                    .map(|quad| records::quadruple(&params, &quad))
            })
        }
        Construct::Heron { sides: [x, y, z] } => Triangle::new(x, y, z).and_then(|t| {
            let sixteen = constructions::heron_area_squared_16(&t)?;
            let area = constructions::heron_area(&t)?;
            Ok(records::heron(&t, &sixteen, area.as_ref()))
        }),
        Construct::Proof3Triangle(Mnvu { m, n, u, v }) => {
            QuadSumWitness::new(m, n, v, u).and_then(|w| {
                constructions::proof3_triangle(&w).map(|(t, area)| records::proof3(&w, &t, &area))
            })
        }
        Construct::Split(Mnvu { m, n, u, v }) => {
            descent::four_split(&m, &n, &u, &v).map(|s| records::split(&s))
        }
        Construct::Abd { m, n, form } => {
            apsquares::abd_from_params(&m, &n, form).map(|s| records::abd(&s))
        }
        Construct::Congruum { m, n, s } => {
            apsquares::congruum_from_params(&m, &n, &s).map(|w| records::witness(&w))
        }
    };
    match result {
        Ok(rec) => {
            out.write(&rec)?;
            Ok(Outcome::Ok)
        }
        Err(e) => {
            eprintln!("congruum: {e}");
            out.write(&records::violation(&e))?;
            Ok(Outcome::Domain)
        }
    }
}
