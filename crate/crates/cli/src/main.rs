//! Command-line surface: codes and shifted codes, graded operator actions,
//! Littlewood-Richardson products and walks, Pieri rules, and the oracle
//! verification sweeps.
//!
//! Exit codes: 0 on success, 1 on a validation error, 2 when a verification
//! sweep fails.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::json;

use schur_codes::bernstein::b_series_on_schur;
use schur_codes::json::{walk_to_codes, ExpansionDoc, GradedActionDoc};
use schur_codes::lr_pieri::{lr_coefficient, lr_walks, pieri_col, pieri_row, schur_product};
use schur_codes::qvertex::y_series_on_q;
use schur_codes::verify::{
    verify_all, verify_bernstein, verify_codes, verify_lr, verify_qvertex, SuiteReport,
};
use schur_codes::{Partition, StrictPartition};

#[derive(Parser)]
#[command(
    name = "schur-codes",
    version,
    about = "Partition codes, vertex operator actions on Schur and Q-functions, and the code-walk Littlewood-Richardson rule",
    after_help = "Partitions are comma-separated parts; the empty partition is written '-'."
)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap the upper end of default degree windows.
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<i64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical code of a partition (or shifted code of a strict one).
    Code {
        /// The partition, e.g. 4,2,1 or - for the empty partition.
        partition: String,
        /// Use the shifted code; requires a strict partition.
        #[arg(long)]
        shifted: bool,
        /// Print the partition with the i-th right step turned up instead.
        #[arg(long, value_name = "I")]
        variant: Option<usize>,
    },
    /// Tabulate the graded action of the B or Y series on a basis element.
    Act {
        /// The operator series: B (Schur basis) or Y (Q basis).
        operator: String,
        /// The indexing partition; strict for Y.
        partition: String,
        /// Degree window lo:hi. Defaults to -(len+1):(weight+2) for B and
        /// 1:(weight+3) for Y.
        #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Expand s_mu * s_nu, or report one coefficient, or list the walks.
    Lr {
        mu: String,
        nu: String,
        /// Report the coefficient of this endpoint only.
        lambda: Option<String>,
        /// Print the walks as code sequences.
        #[arg(long)]
        walks: bool,
    },
    /// Multiply by a one-row (--row) or one-column (--col) Schur function.
    Pieri {
        mu: String,
        n: u32,
        #[arg(long, conflicts_with = "col")]
        row: bool,
        #[arg(long)]
        col: bool,
    },
    /// Expand the product s_mu * s_nu.
    Product { mu: String, nu: String },
    /// Replay the implemented identities against the brute-force oracle.
    Verify {
        /// One of: codes, bernstein, qvertex, lr, all.
        suite: String,
        #[arg(long, default_value_t = 7, value_name = "W")]
        max_weight: u32,
    },
}

enum Failure {
    Validation(String),
    Verification,
}

impl From<schur_codes::Error> for Failure {
    fn from(err: schur_codes::Error) -> Self {
        Failure::Validation(err.to_string())
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Partition::from_str(text).map_err(Into::into)
}

fn parse_strict(text: &str) -> Result<StrictPartition, Failure> {
    StrictPartition::from_str(text)
        .map_err(|err| Failure::Validation(format!("need a strict partition: {err}")))
}

const WINDOW_CAP: i64 = 100_000;

fn parse_window(text: &str) -> Result<(i64, i64), Failure> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| Failure::Validation(format!("window must be lo:hi, got {text:?}")))?;
    let lo = lo
        .trim()
        .parse::<i64>()
        .map_err(|_| Failure::Validation(format!("bad window bound {lo:?}")))?;
    let hi = hi
        .trim()
        .parse::<i64>()
        .map_err(|_| Failure::Validation(format!("bad window bound {hi:?}")))?;
    if hi > WINDOW_CAP {
        return Err(Failure::Validation(format!(
            "window top {hi} exceeds the supported cap {WINDOW_CAP}"
        )));
    }
    Ok((lo, hi))
}

fn print_document(command: &str, input: serde_json::Value, result: serde_json::Value) {
    let document = json!({
        "command": command,
        "input": input,
        "result": result,
    });
    println!("{document}");
}

fn run_code(
    as_json: bool,
    partition: &str,
    shifted: bool,
    variant: Option<usize>,
) -> Result<(), Failure> {
    if variant == Some(0) {
        return Err(Failure::Validation("--variant is 1-based".into()));
    }
    let (input, result) = if shifted {
        let lambda = parse_strict(partition)?;
        match variant {
            None => (lambda.to_string(), lambda.shifted_code().to_string()),
            Some(i) => (lambda.to_string(), lambda.insert_nth(i).to_string()),
        }
    } else {
        let lambda = parse_partition(partition)?;
        match variant {
            None => (lambda.to_string(), lambda.code().to_string()),
            Some(i) => (lambda.to_string(), lambda.turn_nth_r(i).to_string()),
        }
    };
    if as_json {
        print_document(
            "code",
            json!({"partition": input, "shifted": shifted, "variant": variant}),
            json!(result),
        );
    } else {
        println!("{result}");
    }
    Ok(())
}

fn run_act(
    as_json: bool,
    operator: &str,
    partition: &str,
    window: Option<&str>,
    max_degree: Option<i64>,
) -> Result<(), Failure> {
    match operator {
        "B" => {
            let lambda = parse_partition(partition)?;
            let (lo, hi) = match window {
                Some(text) => parse_window(text)?,
                None => {
                    let hi = lambda.weight() as i64 + 2;
                    (
                        -(lambda.len() as i64) - 1,
                        max_degree.map_or(hi, |cap| hi.min(cap)),
                    )
                }
            };
            let action = b_series_on_schur(&lambda, lo, hi)?;
            if as_json {
                let doc = GradedActionDoc::from(&action);
                print_document(
                    "act",
                    json!({
                        "operator": "B",
                        "partition": lambda.to_string(),
                        "window": format!("{lo}:{hi}"),
                    }),
                    serde_json::to_value(&doc).expect("serializable"),
                );
            } else {
                for (degree, term) in action.iter() {
                    println!("{degree:>5}  {}  {}", term.sign, term.partition);
                }
            }
        }
        "Y" => {
            let lambda = parse_strict(partition)?;
            let (lo, hi) = match window {
                Some(text) => parse_window(text)?,
                None => {
                    let hi = lambda.weight() as i64 + 3;
                    (1, max_degree.map_or(hi, |cap| hi.min(cap)))
                }
            };
            if lo < 1 {
                return Err(Failure::Validation(format!(
                    "the Y series carries positive degrees only; window starts at {lo}"
                )));
            }
            if lo > hi {
                return Err(schur_codes::Error::InvalidWindow { lo, hi }.into());
            }
            let mut action = schur_codes::QGradedAction::new();
            for (degree, term) in y_series_on_q(&lambda, hi as u32).iter() {
                if (degree as i64) >= lo {
                    action.insert(degree, term.clone());
                }
            }
            if as_json {
                let doc = GradedActionDoc::from(&action);
                print_document(
                    "act",
                    json!({
                        "operator": "Y",
                        "partition": lambda.to_string(),
                        "window": format!("{lo}:{hi}"),
                    }),
                    serde_json::to_value(&doc).expect("serializable"),
                );
            } else {
                for (degree, term) in action.iter() {
                    println!("{degree:>5}  {}  {}", term.sign, term.partition);
                }
            }
        }
        other => {
            return Err(Failure::Validation(format!(
                "unknown operator {other:?}; expected B or Y"
            )))
        }
    }
    Ok(())
}

fn run_lr(
    as_json: bool,
    mu: &str,
    nu: &str,
    lambda: Option<&str>,
    walks: bool,
) -> Result<(), Failure> {
    let mu = parse_partition(mu)?;
    let nu = parse_partition(nu)?;
    let input = |lambda: &Option<Partition>| {
        json!({
            "mu": mu.to_string(),
            "nu": nu.to_string(),
            "lambda": lambda.as_ref().map(|l| l.to_string()),
            "walks": walks,
        })
    };
    if walks {
        let filter = lambda.map(parse_partition).transpose()?;
        let all = lr_walks(&mu, &nu);
        let selected: Vec<_> = all
            .iter()
            .filter(|walk| filter.as_ref().is_none_or(|l| walk.endpoint() == *l))
            .collect();
        if as_json {
            let codes: Vec<Vec<String>> = selected.iter().map(|w| walk_to_codes(w)).collect();
            print_document("lr", input(&filter), json!(codes));
        } else {
            for walk in selected {
                println!("{}", walk_to_codes(walk).join(" -> "));
            }
        }
        return Ok(());
    }
    match lambda {
        Some(text) => {
            let lambda = parse_partition(text)?;
            let coefficient = lr_coefficient(&mu, &nu, &lambda);
            if as_json {
                print_document("lr", input(&Some(lambda)), json!(coefficient));
            } else {
                println!("{coefficient}");
            }
        }
        None => {
            let expansion = schur_product(&mu, &nu);
            if as_json {
                let doc = ExpansionDoc::from(&expansion);
                print_document(
                    "lr",
                    input(&None),
                    serde_json::to_value(&doc).expect("serializable"),
                );
            } else {
                println!("{expansion}");
            }
        }
    }
    Ok(())
}

fn run_pieri(as_json: bool, mu: &str, n: u32, row: bool, col: bool) -> Result<(), Failure> {
    if row == col {
        return Err(Failure::Validation(
            "exactly one of --row or --col is required".into(),
        ));
    }
    if n == 0 {
        return Err(Failure::Validation(
            "the strip size must be positive".into(),
        ));
    }
    let mu = parse_partition(mu)?;
    let result = if row {
        pieri_row(&mu, n)
    } else {
        pieri_col(&mu, n)
    };
    if as_json {
        let parts: Vec<Vec<u32>> = result.iter().map(|p| p.parts().to_vec()).collect();
        print_document(
            "pieri",
            json!({"mu": mu.to_string(), "n": n, "kind": if row { "row" } else { "col" }}),
            json!(parts),
        );
    } else {
        let line = result
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        println!("{line}");
    }
    Ok(())
}

fn run_product(as_json: bool, mu: &str, nu: &str) -> Result<(), Failure> {
    let mu = parse_partition(mu)?;
    let nu = parse_partition(nu)?;
    let expansion = schur_product(&mu, &nu);
    if as_json {
        let doc = ExpansionDoc::from(&expansion);
        print_document(
            "product",
            json!({"mu": mu.to_string(), "nu": nu.to_string()}),
            serde_json::to_value(&doc).expect("serializable"),
        );
    } else {
        println!("{expansion}");
    }
    Ok(())
}

fn run_verify(as_json: bool, suite: &str, max_weight: u32) -> Result<(), Failure> {
    if max_weight < 1 {
        return Err(Failure::Validation(
            "--max-weight must be at least 1".into(),
        ));
    }
    let reports: Vec<SuiteReport> = match suite {
        "codes" => vec![verify_codes(max_weight)],
        "bernstein" => vec![verify_bernstein(max_weight.min(7))],
        "qvertex" => vec![verify_qvertex(max_weight.min(8))],
        "lr" => vec![verify_lr(max_weight)],
        "all" => verify_all(max_weight),
        other => {
            return Err(Failure::Validation(format!(
                "unknown suite {other:?}; expected codes, bernstein, qvertex, lr, or all"
            )))
        }
    };
    if as_json {
        let docs: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "checks": r.checks,
                    "passed": r.passed(),
                    "failures": r.failures,
                })
            })
            .collect();
        print_document(
            "verify",
            json!({"suite": suite, "max_weight": max_weight}),
            json!(docs),
        );
    } else {
        for report in &reports {
            if report.passed() {
                println!("{}: PASS ({} checks)", report.name, report.checks);
            } else {
                println!(
                    "{}: FAIL ({} checks, {} failures)",
                    report.name,
                    report.checks,
                    report.failures.len()
                );
                for failure in &report.failures {
                    println!("  counterexample: {failure}");
                }
            }
        }
    }
    if reports.iter().any(|r| !r.passed()) {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Code {
            partition,
            shifted,
            variant,
        } => run_code(cli.json, partition, *shifted, *variant),
        Command::Act {
            operator,
            partition,
            window,
        } => run_act(
            cli.json,
            operator,
            partition,
            window.as_deref(),
            cli.max_degree,
        ),
        Command::Lr {
            mu,
            nu,
            lambda,
            walks,
        } => run_lr(cli.json, mu, nu, lambda.as_deref(), *walks),
        Command::Pieri { mu, n, row, col } => run_pieri(cli.json, mu, *n, *row, *col),
        Command::Product { mu, nu } => run_product(cli.json, mu, nu),
        Command::Verify { suite, max_weight } => run_verify(cli.json, suite, *max_weight),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}
