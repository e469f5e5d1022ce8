//! Subcommand implementations.
//!
//! Exit-code contract: 0 on success, 1 when a verification or inequality
//! check fails, 2 on invalid input.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use schublines_core::spectral::{
    a2_bound_integrals, default_nodes, f_eval, kostka_integral, lambda_eval,
};
use schublines_core::tableau::{enumerate_for_content, DEFAULT_ENUMERATION_CAP};
use schublines_core::{
    a2_difference, validate_certificate, verify_at_least_alternating, AlternatingCertificate,
    Error, SchubertProblem,
};
use serde_json::json;

use crate::cache::SharedMemo;
use crate::certjson::certificate_to_json;
use crate::output::{float17, Format};
use crate::sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser)]
#[command(
    name = "schublines",
    version,
    about = "Exact Schubert calculus of lines: counts, certificates, sweeps, and spectral cross-checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFunction {
    /// F(theta) = 2 cos 4theta - cos 6theta - 1
    F,
    /// lambda(theta) = 1 + 2 cos 2theta
    Lambda,
    /// lambda(theta)^m F(theta)
    Product,
}

#[derive(Subcommand)]
pub enum Command {
    /// Exact solution count of a Schubert problem of lines
    Kostka {
        /// Condition codimensions
        #[arg(required = true)]
        conditions: Vec<i64>,
        /// Also list the witnessing tableaux (content in the given order)
        #[arg(long)]
        tableaux: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certify that the problem's Galois group is at least alternating
    Verify {
        #[arg(required = true)]
        conditions: Vec<i64>,
        /// Write the certificate JSON to this path
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certify every problem for lines in projective n-space, n = 2..=max-n
    Sweep {
        #[arg(long = "max-n")]
        max_n: u64,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The K(2^m,4) / K(2^m,1,1) comparison table
    Table1 {
        #[arg(long = "max-m", default_value_t = 16)]
        max_m: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Numeric count integral next to the exact value
    Integral {
        #[arg(required = true)]
        conditions: Vec<i64>,
        /// Quadrature nodes (default: 4 * sum + 64)
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Both sides of the decisive integral bound for the all-2s family
    BoundsA2 {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sampled curves of F, lambda, or lambda^m F on [0, pi/2]
    Plotdata {
        #[arg(long, value_enum)]
        function: PlotFunction,
        /// Power for the product curve
        #[arg(long, default_value_t = 8)]
        m: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Kostka {
            conditions,
            tableaux,
            format,
        } => cmd_kostka(&conditions, tableaux, format),
        Command::Verify {
            conditions,
            cert,
            format,
        } => cmd_verify(&conditions, cert.as_deref(), format),
        Command::Sweep { max_n, jobs, format } => cmd_sweep(max_n, jobs, format),
        Command::Table1 { max_m, format } => cmd_table1(max_m, format),
        Command::Integral {
            conditions,
            nodes,
            format,
        } => cmd_integral(&conditions, nodes, format),
        Command::BoundsA2 { m, format } => cmd_bounds_a2(m, format),
        Command::Plotdata {
            function,
            m,
            samples,
            format,
        } => cmd_plotdata(function, m, samples, format),
    }
}

fn parse_conditions(raw: &[i64]) -> Result<Vec<u32>, String> {
    raw.iter()
        .map(|&c| {
            if c <= 0 {
                Err("non-positive entry in condition list".to_string())
            } else {
                u32::try_from(c).map_err(|_| format!("condition {c} is too large"))
            }
        })
        .collect()
}

fn parse_problem(raw: &[i64]) -> Result<(Vec<u32>, SchubertProblem), String> {
    let given = parse_conditions(raw)?;
    let problem = SchubertProblem::new(&given).map_err(|e| e.to_string())?;
    Ok((given, problem))
}

fn invalid(msg: &str) -> i32 {
    eprintln!("schublines: {msg}");
    EXIT_INVALID
}

fn cmd_kostka(raw: &[i64], tableaux: bool, format: Format) -> i32 {
    let (given, problem) = match parse_problem(raw) {
        Ok(x) => x,
        Err(msg) => return invalid(&msg),
    };
    let memo = SharedMemo::from_env();
    let count = memo.count(&problem);
    memo.persist();

    let listed = if tableaux {
        match enumerate_for_content(&given, DEFAULT_ENUMERATION_CAP) {
            Ok(ts) => Some(ts),
            Err(err) => {
                eprintln!("schublines: {err}");
                return EXIT_FAILED;
            }
        }
    } else {
        None
    };

    match format {
        Format::Text => {
            println!("{count}");
            if let Some(ts) = &listed {
                for t in ts {
                    println!("{t}");
                }
            }
        }
        Format::Json => {
            let mut doc = json!({
                "problem": given,
                "kostka": count.to_string(),
            });
            if let Some(ts) = &listed {
                doc["tableaux"] = json!(ts
                    .iter()
                    .map(|t| json!({ "row1": t.row1(), "row2": t.row2() }))
                    .collect::<Vec<_>>());
            }
            println!("{doc}");
        }
        Format::Csv => match &listed {
            None => println!("kostka\n{count}"),
            Some(ts) => {
                println!("row1,row2");
                for t in ts {
                    println!("{},{}", join(t.row1()), join(t.row2()));
                }
            }
        },
    }
    EXIT_OK
}

fn join(xs: &[u32]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_verify(raw: &[i64], cert_path: Option<&std::path::Path>, format: Format) -> i32 {
    let (_, problem) = match parse_problem(raw) {
        Ok(x) => x,
        Err(msg) => return invalid(&msg),
    };
    let cert = match verify_at_least_alternating(&problem) {
        Ok(cert) => cert,
        Err(Error::InvalidProblem) => return invalid("invalid problem: some condition exceeds n - 1"),
        Err(err) => {
            eprintln!("schublines: verification failed: {err}");
            return EXIT_FAILED;
        }
    };
    if let Err(err) = validate_certificate(&cert) {
        eprintln!("schublines: certificate failed re-validation: {err}");
        return EXIT_FAILED;
    }
    let doc = certificate_to_json(&cert);
    if let Some(path) = cert_path {
        if let Err(err) = std::fs::write(path, format!("{doc:#}\n")) {
            eprintln!("schublines: cannot write certificate: {err}");
            return EXIT_FAILED;
        }
    }
    match format {
        Format::Text => {
            println!("problem   {}", problem);
            println!("reduced   {}", cert.reduced);
            println!("kostka    {}", cert.kostka_value);
            println!("clause    {} ({})", cert.clause, cert.clause.justification());
            if let (Some(m), Some(d)) = (&cert.merged_child, &cert.decremented_child) {
                println!("branches  {} and {}", m.kostka_value, d.kostka_value);
            }
            println!("certified: the Galois group is at least alternating");
        }
        Format::Json => println!("{doc}"),
        Format::Csv => {
            println!("problem,reduced,kostka,clause,pair");
            print_cert_rows(&cert);
        }
    }
    EXIT_OK
}

fn print_cert_rows(cert: &AlternatingCertificate) {
    let pair = cert
        .rearrangement
        .as_ref()
        .map(|r| join(&r[r.len() - 2..]))
        .unwrap_or_default();
    println!(
        "{},{},{},{},{}",
        join(cert.problem.conditions()),
        join(cert.reduced.conditions()),
        cert.kostka_value,
        cert.clause,
        pair
    );
    if let Some(child) = &cert.merged_child {
        print_cert_rows(child);
    }
    if let Some(child) = &cert.decremented_child {
        print_cert_rows(child);
    }
}

fn cmd_sweep(max_n: u64, jobs: Option<usize>, format: Format) -> i32 {
    if max_n < 2 {
        return invalid("sweep needs --max-n of at least 2");
    }
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|v| v.get())
            .unwrap_or(1)
    });
    if jobs == 0 {
        return invalid("--jobs must be positive");
    }
    let memo = SharedMemo::from_env();
    let reports = sweep::sweep(max_n, jobs, &memo);
    memo.persist();
    let all = reports.iter().all(|r| r.all_certified);
    match format {
        Format::Text => {
            println!("{:>4} {:>10} {:>9} {:>10}", "n", "problems", "certified", "seconds");
            for r in &reports {
                println!(
                    "{:>4} {:>10} {:>9} {:>10.3}",
                    r.n, r.problems, r.all_certified, r.seconds
                );
            }
            println!(
                "{}",
                if all {
                    "all problems certified"
                } else {
                    "CERTIFICATION FAILED for some problems"
                }
            );
        }
        Format::Json => println!("{}", serde_json::to_string(&reports).unwrap()),
        Format::Csv => {
            println!("n,problems,certified,seconds");
            for r in &reports {
                println!("{},{},{},{}", r.n, r.problems, r.all_certified, float17(r.seconds));
            }
        }
    }
    for r in &reports {
        for f in &r.failures {
            eprintln!("schublines: not certified: {f:?}");
        }
    }
    if all {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn cmd_table1(max_m: u32, format: Format) -> i32 {
    let memo = SharedMemo::from_env();
    let mut rows = Vec::new();
    for m in 0..=max_m {
        let mut with_four = vec![2u32; m as usize];
        with_four.push(4);
        let mut with_ones = vec![2u32; m as usize];
        with_ones.extend_from_slice(&[1, 1]);
        let k4 = memo.count(&SchubertProblem::new(with_four).unwrap());
        let k11 = memo.count(&SchubertProblem::new(with_ones).unwrap());
        let diff = BigInt::from(k4.clone()) - BigInt::from(k11.clone());
        rows.push((m, k4, k11, diff));
    }
    memo.persist();
    match format {
        Format::Csv => {
            println!("m,kostka_2m_4,kostka_2m_1_1,difference");
            for (m, k4, k11, diff) in &rows {
                println!("{m},{k4},{k11},{diff}");
            }
        }
        Format::Text => {
            println!("{:>4} {:>16} {:>16} {:>12}", "m", "K(2^m,4)", "K(2^m,1,1)", "difference");
            for (m, k4, k11, diff) in &rows {
                println!("{m:>4} {k4:>16} {k11:>16} {diff:>12}");
            }
        }
        Format::Json => {
            let doc: Vec<_> = rows
                .iter()
                .map(|(m, k4, k11, diff)| {
                    json!({
                        "m": m,
                        "kostka_2m_4": k4.to_string(),
                        "kostka_2m_1_1": k11.to_string(),
                        "difference": diff.to_string(),
                    })
                })
                .collect();
            println!("{}", json!(doc));
        }
    }
    debug_assert_eq!(rows.last().map(|r| r.3.clone()), Some(a2_difference(max_m)));
    EXIT_OK
}

fn cmd_integral(raw: &[i64], nodes: Option<usize>, format: Format) -> i32 {
    let (given, problem) = match parse_problem(raw) {
        Ok(x) => x,
        Err(msg) => return invalid(&msg),
    };
    let nodes = nodes.unwrap_or_else(|| default_nodes(&problem));
    let result = match kostka_integral(&problem, nodes) {
        Ok(r) => r,
        Err(err) => return invalid(&err.to_string()),
    };
    let exact = result.exact.clone().expect("exact count is attached");
    let residual = result.abs_residual.expect("residual is attached");
    match format {
        Format::Text => {
            println!("estimate     {:.9}", result.value);
            println!("exact        {exact}");
            println!("abs residual {residual:.3e}");
            println!("nodes        {nodes}");
        }
        Format::Json => println!(
            "{}",
            json!({
                "problem": given,
                "nodes": nodes,
                "estimate": result.value,
                "exact": exact.to_string(),
                "abs_residual": residual,
            })
        ),
        Format::Csv => {
            println!("estimate,exact,abs_residual,nodes");
            println!("{},{},{},{}", float17(result.value), exact, float17(residual), nodes);
        }
    }
    EXIT_OK
}

fn cmd_bounds_a2(m: u32, format: Format) -> i32 {
    if m < 1 {
        return invalid("--m must be at least 1");
    }
    let b = a2_bound_integrals(m);
    match format {
        Format::Text => {
            println!("lhs  = {:.6}  (integral of lambda^m F over [0, pi/12])", b.lhs);
            println!(
                "rhs  = {:.6}  (integral of |lambda^m F| over [pi/12, pi/3] + 2 pi / 3)",
                b.rhs
            );
            println!("holds: {}", b.holds);
        }
        Format::Json => println!(
            "{}",
            json!({
                "m": m,
                "lhs": b.lhs,
                "rhs_integral": b.rhs_integral,
                "rhs": b.rhs,
                "holds": b.holds,
            })
        ),
        Format::Csv => {
            println!("m,lhs,rhs_integral,rhs,holds");
            println!(
                "{m},{},{},{},{}",
                float17(b.lhs),
                float17(b.rhs_integral),
                float17(b.rhs),
                b.holds
            );
        }
    }
    if b.holds {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn cmd_plotdata(function: PlotFunction, m: u32, samples: usize, format: Format) -> i32 {
    if samples < 2 {
        return invalid("--samples must be at least 2");
    }
    let eval = |theta: f64| -> f64 {
        match function {
            PlotFunction::F => f_eval(theta),
            PlotFunction::Lambda => lambda_eval(2, theta).expect("grid stays in domain"),
            PlotFunction::Product => {
                let l = lambda_eval(2, theta).expect("grid stays in domain");
                l.powi(m as i32) * f_eval(theta)
            }
        }
    };
    let grid: Vec<(f64, f64)> = (0..samples)
        .map(|i| {
            let theta = PI / 2.0 * i as f64 / (samples - 1) as f64;
            (theta, eval(theta))
        })
        .collect();
    match format {
        Format::Csv => {
            println!("theta,value");
            for (theta, value) in &grid {
                println!("{},{}", float17(*theta), float17(*value));
            }
        }
        Format::Text => {
            for (theta, value) in &grid {
                println!("{theta:.6} {value:.6}");
            }
        }
        Format::Json => {
            let doc: Vec<_> = grid.iter().map(|(t, v)| json!([t, v])).collect();
            println!("{}", json!(doc));
        }
    }
    EXIT_OK
}
