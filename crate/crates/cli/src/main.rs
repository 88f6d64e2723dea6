//! `dromedary` command line.
//!
//! Exit codes: 0 success, 2 domain or input error, 3 validation mismatch or
//! illegal itinerary, 4 oracle budget exceeded.

mod table;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dromedary::oracle::{optimal, GridConfig};
use dromedary::sim::{assert_monotone, format_itinerary, parse_itinerary, potential_trace, run};
use dromedary::strategies::*;
use dromedary::{Accounting, Error, ProblemSpec, Rational, Variant};
use serde::Serialize;

const BUDGET_ENV: &str = "DROMEDARY_STATE_BUDGET";

#[derive(Parser)]
#[command(
    name = "dromedary",
    version,
    about = "Exact desert-crossing bounds, strategies and search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    OneWay,
    RoundTrip,
    Delivery,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    /// Stomach holds two bananas.
    Camel2,
    /// Stomach and back hold one banana each.
    Original,
    /// Continuous-fuel jeep with tank `F`.
    Jeep,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AccountingArg {
    CountAll,
    CreditFinalStomach,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    B1OneWay,
    B1Delivery,
    B1RoundTrip,
    B2RoundTrip,
    B2Credit,
    Original,
}

#[derive(Subcommand)]
enum Command {
    /// Every closed form that applies to one instance, as JSON.
    Bounds {
        #[arg(long = "B", default_value_t = 1)]
        back: u32,
        #[arg(long = "N")]
        bananas: Rational,
        #[arg(long, value_enum, default_value = "one-way")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "camel2")]
        problem: Problem,
        /// Jeep tank size.
        #[arg(long = "F")]
        tank: Option<Rational>,
    },
    /// Build a strategy, validate it in the simulator and print its distance.
    Strategy {
        #[arg(value_enum)]
        generator: Generator,
        #[arg(long = "N")]
        bananas: Option<Rational>,
        /// Delivery exponent: the target is `j` miles out, with `3^j` bananas.
        #[arg(long)]
        j: Option<u32>,
        /// Original problem: `N = 2^k + f`.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        f: Option<Rational>,
        /// Write the itinerary here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an itinerary file and print the report as JSON.
    Simulate {
        file: PathBuf,
        #[arg(long = "B", default_value_t = 1)]
        back: u32,
        #[arg(long = "S", default_value_t = 2)]
        stomach: u32,
        #[arg(long = "N")]
        bananas: Rational,
        #[arg(long, value_enum, default_value = "one-way")]
        variant: VariantArg,
        /// Delivery target.
        #[arg(long)]
        target: Option<Rational>,
        #[arg(long, value_enum, default_value = "count-all")]
        accounting: AccountingArg,
        /// Also print the potential trace and whether it is monotone.
        #[arg(long)]
        check_potential: bool,
    },
    /// Exhaustive grid search for the best reachable distance.
    Oracle {
        #[arg(long = "B", default_value_t = 1)]
        back: u32,
        #[arg(long = "S", default_value_t = 2)]
        stomach: u32,
        #[arg(long = "N")]
        bananas: Rational,
        #[arg(long, value_enum, default_value = "one-way")]
        variant: VariantArg,
        /// Grid denominator: positions are multiples of `1/q`.
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Farthest position searched; defaults to `N`.
        #[arg(long)]
        max_position: Option<Rational>,
    },
    /// CSV table of closed forms over a range of `N`.
    Sweep {
        #[arg(long)]
        from: Rational,
        #[arg(long)]
        to: Rational,
        #[arg(long)]
        step: Rational,
        #[arg(long = "B", default_value_t = 1)]
        back: u32,
        #[arg(long, value_enum, default_value = "one-way")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "camel2")]
        problem: Problem,
        #[arg(long = "F")]
        tank: Option<Rational>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => 4,
            Error::IllegalEvent { .. } | Error::NotSuccessful(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type CmdResult = Result<String, Failure>;

fn decimal(x: &Rational) -> String {
    format!("{:.6}", x.to_f64())
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn variant_of(arg: VariantArg, target: Option<Rational>) -> Result<Variant, Failure> {
    Ok(match arg {
        VariantArg::OneWay => Variant::OneWay,
        VariantArg::RoundTrip => Variant::RoundTrip,
        VariantArg::Delivery => Variant::Delivery {
            target: target.ok_or_else(|| fail(2, "the delivery variant needs --target"))?,
        },
    })
}

#[derive(Serialize)]
struct BoundEntry {
    name: &'static str,
    value: Rational,
    decimal: String,
    source: &'static str,
}

#[derive(Serialize)]
struct BoundsReport {
    problem: &'static str,
    variant: &'static str,
    #[serde(rename = "N")]
    bananas: Rational,
    entries: Vec<BoundEntry>,
}

fn cmd_bounds(
    back: u32,
    bananas: Rational,
    variant: VariantArg,
    problem: Problem,
    tank: Option<Rational>,
) -> CmdResult {
    let mut entries = Vec::new();
    let mut domain_errors = Vec::new();
    for col in table::columns(problem, back, variant, tank)? {
        match col.eval(&bananas) {
            Ok(Some(value)) => entries.push(BoundEntry {
                name: col.name,
                decimal: decimal(&value),
                value,
                source: col.source,
            }),
            Ok(None) => {}
            Err(e) if !domain_errors.contains(&e.to_string()) => domain_errors.push(e.to_string()),
            Err(_) => {}
        }
    }
    if entries.is_empty() {
        let why = if domain_errors.is_empty() {
            "no closed form applies".to_string()
        } else {
            domain_errors.join("; ")
        };
        return Err(fail(2, why));
    }
    let report = BoundsReport {
        problem: problem.name(),
        variant: variant.name(),
        bananas,
        entries,
    };
    Ok(to_json(&report))
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::Camel2 => "camel2",
            Problem::Original => "original",
            Problem::Jeep => "jeep",
        }
    }
}

impl VariantArg {
    fn name(self) -> &'static str {
        match self {
            VariantArg::OneWay => "one-way",
            VariantArg::RoundTrip => "round-trip",
            VariantArg::Delivery => "delivery",
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| fail(2, format!("this generator needs {flag}")))
}

fn cmd_strategy(
    generator: Generator,
    bananas: Option<Rational>,
    j: Option<u32>,
    k: Option<u32>,
    f: Option<Rational>,
    out: Option<PathBuf>,
) -> CmdResult {
    let outcome = match generator {
        Generator::B1OneWay => b1_one_way_strategy(&need(bananas, "--N")?)?,
        Generator::B1Delivery => b1_delivery_strategy(need(j, "--j")?)?,
        Generator::B1RoundTrip => b1_round_trip_strategy(&need(bananas, "--N")?)?,
        Generator::B2RoundTrip => b2_round_trip_strategy(&need(bananas, "--N")?)?,
        Generator::B2Credit => b2_stomach_credit_strategy(&need(bananas, "--N")?)?,
        Generator::Original => original_one_way_strategy(need(k, "--k")?, &need(f, "--f")?)?,
    };
    let report = outcome.validate().map_err(|e| fail(3, e.to_string()))?;
    if outcome.spec.stomach_capacity == 2 {
        let trace = potential_trace(&outcome.spec, &outcome.itinerary)
            .map_err(|e| fail(3, e.to_string()))?;
        if !assert_monotone(&trace) {
            return Err(fail(3, "the potential increased along the itinerary"));
        }
    }
    if let Some(path) = out {
        let spec = &outcome.spec;
        let mut text = String::new();
        let _ = writeln!(
            text,
            "# B {} S {} N {} variant {}",
            spec.back_capacity,
            spec.stomach_capacity,
            spec.bananas,
            spec.variant.name()
        );
        if let Variant::Delivery { target } = &spec.variant {
            let _ = writeln!(text, "# target {target}");
        }
        if spec.accounting == Accounting::CreditFinalStomach {
            let _ = writeln!(text, "# accounting credit-final-stomach");
        }
        let _ = writeln!(text, "# distance {}", outcome.claimed_distance);
        text.push_str(&format_itinerary(&outcome.itinerary));
        std::fs::write(&path, text)
            .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))?;
    }
    let returned = if report.returned && outcome.spec.variant != Variant::OneWay {
        "returned, "
    } else {
        ""
    };
    Ok(format!(
        "distance {}, {returned}validated",
        outcome.claimed_distance
    ))
}

#[derive(Serialize)]
struct SimulateReport {
    report: dromedary::SimReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    potential: Option<dromedary::sim::PotentialTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    monotone: Option<bool>,
}

fn cmd_simulate(file: PathBuf, spec: ProblemSpec, check_potential: bool) -> CmdResult {
    let text = std::fs::read_to_string(&file)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", file.display())))?;
    let events = parse_itinerary(&text)?;
    let report = run(&spec, &events)?;
    let (potential, monotone) = if check_potential {
        let trace = potential_trace(&spec, &events)?;
        let ok = assert_monotone(&trace);
        (Some(trace), Some(ok))
    } else {
        (None, None)
    };
    Ok(to_json(&SimulateReport {
        report,
        potential,
        monotone,
    }))
}

#[derive(Serialize)]
struct OracleReport {
    best_distance: Rational,
    decimal: String,
    states_explored: usize,
    grid: GridConfig,
    witness: String,
}

fn cmd_oracle(spec: ProblemSpec, q: u32, max_position: Option<Rational>) -> CmdResult {
    let mut grid = GridConfig::for_spec(&spec, q);
    if let Some(m) = max_position {
        grid.max_position = m;
    }
    if let Ok(raw) = std::env::var(BUDGET_ENV) {
        grid.state_budget = raw.trim().parse().map_err(|_| {
            fail(
                2,
                format!("{BUDGET_ENV} must be a whole number, got {raw:?}"),
            )
        })?;
    }
    let res = optimal(&spec, &grid)?;
    Ok(to_json(&OracleReport {
        decimal: decimal(&res.best_distance),
        best_distance: res.best_distance,
        states_explored: res.states_explored,
        grid,
        witness: format_itinerary(&res.witness),
    }))
}

fn cmd_sweep(
    from: Rational,
    to: Rational,
    step: Rational,
    columns: Vec<table::Column>,
) -> CmdResult {
    if !step.is_positive() {
        return Err(fail(2, "--step must be positive"));
    }
    if from > to {
        return Err(fail(2, format!("empty range: {from} > {to}")));
    }
    let mut csv = String::from("N,N_dec");
    for col in &columns {
        let _ = write!(csv, ",{0},{0}_dec", col.name);
    }
    csv.push('\n');
    let mut n = from;
    while n <= to {
        let _ = write!(csv, "{n},{}", decimal(&n));
        for col in &columns {
            match col.eval(&n) {
                Ok(Some(v)) => {
                    let _ = write!(csv, ",{v},{}", decimal(&v));
                }
                _ => csv.push_str(",,"),
            }
        }
        csv.push('\n');
        n += &step;
    }
    // Keep the trailing newline off so `println!` ends the table cleanly.
    csv.pop();
    Ok(csv)
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Bounds {
            back,
            bananas,
            variant,
            problem,
            tank,
        } => cmd_bounds(back, bananas, variant, problem, tank),
        Command::Strategy {
            generator,
            bananas,
            j,
            k,
            f,
            out,
        } => cmd_strategy(generator, bananas, j, k, f, out),
        Command::Simulate {
            file,
            back,
            stomach,
            bananas,
            variant,
            target,
            accounting,
            check_potential,
        } => {
            let accounting = match accounting {
                AccountingArg::CountAll => Accounting::CountAll,
                AccountingArg::CreditFinalStomach => Accounting::CreditFinalStomach,
            };
            let spec = ProblemSpec::new(
                back,
                stomach,
                bananas,
                variant_of(variant, target)?,
                accounting,
            )?;
            cmd_simulate(file, spec, check_potential)
        }
        Command::Oracle {
            back,
            stomach,
            bananas,
            variant,
            q,
            max_position,
        } => {
            let spec = ProblemSpec::new(
                back,
                stomach,
                bananas,
                variant_of(variant, None)?,
                Accounting::CountAll,
            )?;
            cmd_oracle(spec, q, max_position)
        }
        Command::Sweep {
            from,
            to,
            step,
            back,
            variant,
            problem,
            tank,
        } => cmd_sweep(
            from,
            to,
            step,
            table::columns(problem, back, variant, tank)?,
        ),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(out) => {
            // A closed pipe (`| head`) is not an error worth a panic.
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
