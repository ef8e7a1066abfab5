//! Command-line front end: character queries, Stanley evaluations, map
//! censuses, and identity verification runs. All numeric output is exact
//! (decimal integers or a/b rational strings), never floating point.

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use spinchar::combinat::{Partition, StrictPartition};
use spinchar::verify::{self, Mutation, VerifyConfig};
use spinchar::{characters, maps, stanley};

#[derive(Parser)]
#[command(name = "spinchar", version, about = "Exact linear and spin characters of symmetric groups")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Linear,
    Spin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Linear,
    Spin,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized linear character Ch_π(λ)
    Char {
        /// Young diagram, e.g. "3,1"
        #[arg(long)]
        lambda: String,
        /// Conjugacy-class partition, e.g. "2,1"
        #[arg(long)]
        pi: String,
    },
    /// Normalized spin character Ch^spin_π(ξ); π must have odd parts
    Spinchar {
        /// Strict partition, e.g. "4,1"
        #[arg(long)]
        xi: String,
        #[arg(long)]
        pi: String,
    },
    /// Double D(ξ) of a strict partition (or the overlap double)
    Double {
        #[arg(long)]
        xi: String,
        /// Emit D_over(ξ) instead of D(ξ)
        #[arg(long)]
        overlap: bool,
    },
    /// Evaluate a Stanley character sum over all factorizations
    StanleyEval {
        #[arg(long)]
        pi: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Strict partition (spin mode)
        #[arg(long)]
        xi: Option<String>,
        /// Young diagram (linear mode)
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Stanley polynomial in 2l multirectangular variables
    StanleyPoly {
        #[arg(long)]
        pi: String,
        /// Number of rectangle blocks
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Enumerate all gluings of the face-type-π polygon collection
    MapsCensus {
        #[arg(long)]
        pi: String,
    },
    /// Check identities over configurable ranges; exits 1 on any failure
    Verify {
        /// Identity name (omit to run the whole suite)
        identity: Option<String>,
        /// First range parameter of the identity (k, weight, l, or m)
        #[arg(long)]
        max_k: Option<usize>,
        /// Second range parameter (usually the size bound n)
        #[arg(long)]
        max_n: Option<usize>,
        /// Run with a seeded formula mutation; healthy verifiers must fail
        #[arg(long)]
        negative_control: bool,
    },
    /// Character table of size n
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: TableKind,
    },
}

fn main() {
    // SPINREP_THREADS caps the worker pool used by verification sweeps
    if let Ok(threads) = std::env::var("SPINREP_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_strict(s: &str) -> Result<StrictPartition, String> {
    s.parse::<StrictPartition>().map_err(|e| e.to_string())
}

fn print_scalar(format: Format, value: &str) {
    match format {
        Format::Json => println!("{}", serde_json::json!({ "value": value })),
        Format::Csv | Format::Plain => println!("{value}"),
    }
}

fn rational_string(v: &BigRational) -> String {
    v.to_string()
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Char { lambda, pi } => {
            let lambda = parse_partition(&lambda)?;
            let pi = parse_partition(&pi)?;
            let value = characters::ch_normalized(&pi, &lambda);
            print_scalar(cli.format, &value.to_string());
            Ok(0)
        }
        Command::Spinchar { xi, pi } => {
            let xi = parse_strict(&xi)?;
            let pi = parse_partition(&pi)?;
            let value = characters::ch_spin_normalized(&pi, &xi).map_err(|e| e.to_string())?;
            print_scalar(cli.format, &rational_string(&value));
            Ok(0)
        }
        Command::Double { xi, overlap } => {
            let xi = parse_strict(&xi)?;
            let d = if overlap {
                xi.overlap_double()
            } else {
                xi.double()
            };
            print_scalar(cli.format, &d.to_string());
            Ok(0)
        }
        Command::StanleyEval {
            pi,
            mode,
            xi,
            lambda,
        } => {
            let pi = parse_partition(&pi)?;
            let value = match mode {
                Mode::Linear => {
                    let lambda = lambda.ok_or("linear mode needs --lambda")?;
                    let lambda = parse_partition(&lambda)?;
                    stanley::ch_stanley_linear(&pi, &lambda).to_string()
                }
                Mode::Spin => {
                    let xi = xi.ok_or("spin mode needs --xi")?;
                    let xi = parse_strict(&xi)?;
                    rational_string(&stanley::ch_stanley_spin(&pi, &xi).map_err(|e| e.to_string())?)
                }
            };
            print_scalar(cli.format, &value);
            Ok(0)
        }
        Command::StanleyPoly { pi, l, mode } => {
            if l == 0 {
                return Err("--l must be at least 1".into());
            }
            let pi = parse_partition(&pi)?;
            let poly = match mode {
                Mode::Linear => stanley::stanley_polynomial_linear(&pi, l),
                Mode::Spin => stanley::stanley_polynomial_spin(&pi, l).map_err(|e| e.to_string())?,
            };
            match cli.format {
                Format::Json => println!("{}", poly.to_json()),
                Format::Csv => {
                    println!("exponents,coeff");
                    for (exps, coeff) in poly.terms() {
                        let e: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
                        println!("{},{}", e.join(";"), coeff);
                    }
                }
                Format::Plain => println!("{poly:?}"),
            }
            Ok(0)
        }
        Command::MapsCensus { pi } => {
            let pi = parse_partition(&pi)?;
            let pc = maps::PolygonCollection::new(&pi);
            if cli.format == Format::Csv {
                println!("matching_id,components,white_vertices,orientable,euler_per_component");
            }
            for (id, map) in pc.gluings().enumerate() {
                match cli.format {
                    Format::Json => {
                        println!(
                            "{}",
                            serde_json::json!({
                                "matching_id": id,
                                "components": map.components,
                                "white_vertices": map.white_vertices,
                                "orientable": map.orientable,
                                "euler_per_component": map.euler_per_component,
                            })
                        );
                    }
                    Format::Csv => {
                        let euler: Vec<String> = map
                            .euler_per_component
                            .iter()
                            .map(|e| e.to_string())
                            .collect();
                        println!(
                            "{},{},{},{},{}",
                            id,
                            map.components,
                            map.white_vertices,
                            map.orientable,
                            euler.join(";")
                        );
                    }
                    Format::Plain => {
                        println!(
                            "matching {}: components={} white={} orientable={} euler={:?}",
                            id,
                            map.components,
                            map.white_vertices,
                            map.orientable,
                            map.euler_per_component
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            identity,
            max_k,
            max_n,
            negative_control,
        } => {
            let mut config = VerifyConfig::default();
            if negative_control {
                config.mutation = Mutation::Seeded;
            }
            if let Some(name) = &identity {
                apply_ranges(&mut config, name, max_k, max_n)?;
            }
            let reports = match &identity {
                Some(name) => {
                    let report = verify::verify_one(name, &config).ok_or_else(|| {
                        format!(
                            "unknown identity {name:?}; expected one of {}",
                            verify::IDENTITIES.join(", ")
                        )
                    })?;
                    vec![report]
                }
                None => verify::verify_all(&config),
            };
            let mut all_pass = true;
            let mut all_detected = true;
            for report in &reports {
                all_pass &= report.pass();
                all_detected &= !report.pass();
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string(report).unwrap()),
                    Format::Csv => println!(
                        "{},{},{},{}",
                        report.identity,
                        report.cases,
                        report.failures.len(),
                        report.ms
                    ),
                    Format::Plain => {
                        println!(
                            "{}: {} ({} cases, {} ms) [{}]",
                            report.identity,
                            if report.pass() { "PASS" } else { "FAIL" },
                            report.cases,
                            report.ms,
                            report.ranges
                        );
                        for f in &report.failures {
                            println!("  counterexample {}: lhs = {}, rhs = {}", f.inputs, f.lhs, f.rhs);
                        }
                    }
                }
            }
            // under a negative control every seeded mutation must be caught
            let ok = if negative_control { all_detected } else { all_pass };
            Ok(if ok { 0 } else { 1 })
        }
        Command::Table { n, kind } => {
            let value = match kind {
                TableKind::Linear => {
                    let parts = spinchar::combinat::partitions_of(n);
                    let rows: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    let values: Vec<Vec<String>> = parts
                        .iter()
                        .map(|lam| {
                            parts
                                .iter()
                                .map(|pi| characters::chi(lam, pi).unwrap().to_string())
                                .collect()
                        })
                        .collect();
                    serde_json::json!({
                        "n": n, "kind": "linear", "rows": rows, "cols": rows, "values": values,
                    })
                }
                TableKind::Spin => {
                    let table = characters::spin_table(n);
                    let rows: Vec<String> = table.strict.iter().map(|x| x.to_string()).collect();
                    let cols: Vec<String> = table.odd.iter().map(|p| p.to_string()).collect();
                    let values: Vec<Vec<String>> = table
                        .strict
                        .iter()
                        .map(|xi| {
                            table
                                .odd
                                .iter()
                                .map(|pi| table.value(xi, pi).unwrap().to_string())
                                .collect()
                        })
                        .collect();
                    serde_json::json!({
                        "n": n, "kind": "spin", "rows": rows, "cols": cols, "values": values,
                    })
                }
            };
            match cli.format {
                Format::Json | Format::Plain => println!("{value}"),
                Format::Csv => {
                    let rows = value["rows"].as_array().unwrap();
                    let cols = value["cols"].as_array().unwrap();
                    let header: Vec<String> = std::iter::once(String::new())
                        .chain(cols.iter().map(|c| c.as_str().unwrap().to_string()))
                        .collect();
                    println!("{}", header.join(","));
                    for (i, row) in rows.iter().enumerate() {
                        let vals: Vec<String> = value["values"][i]
                            .as_array()
                            .unwrap()
                            .iter()
                            .map(|v| v.as_str().unwrap().to_string())
                            .collect();
                        println!("{},{}", row.as_str().unwrap(), vals.join(","));
                    }
                }
            }
            Ok(0)
        }
    }
}

/// Maps the generic --max-k/--max-n overrides onto the identity's ranges.
fn apply_ranges(
    config: &mut VerifyConfig,
    name: &str,
    max_k: Option<usize>,
    max_n: Option<usize>,
) -> Result<(), String> {
    let pair = |t: &mut (usize, usize)| {
        if let Some(k) = max_k {
            t.0 = k;
        }
        if let Some(n) = max_n {
            t.1 = n;
        }
    };
    match name {
        "main-special" => pair(&mut config.main_special),
        "spin-vs-linear" => pair(&mut config.spin_vs_linear),
        "spin-in-linear" => pair(&mut config.spin_in_linear),
        "dimension" => {
            if let Some(n) = max_n {
                config.dimension_max_n = n;
            }
        }
        "filtration" => pair(&mut config.filtration),
        "stanley-linear" => pair(&mut config.stanley_linear),
        "stanley-spin" => pair(&mut config.stanley_spin),
        "maps" => pair(&mut config.maps),
        "schur-schurq" => {
            if let Some(n) = max_n {
                config.schur_q_max = n;
            }
        }
        "double-coordinates" => pair(&mut config.double_coordinates),
        "degrees" => {
            if let Some(k) = max_k {
                config.degrees_max = k;
            }
        }
        "stirling" => {
            if let Some(n) = max_n.or(max_k) {
                config.stirling_max = n;
            }
        }
        "reductions" => pair(&mut config.reductions),
        other => {
            return Err(format!(
                "unknown identity {other:?}; expected one of {}",
                verify::IDENTITIES.join(", ")
            ))
        }
    }
    Ok(())
}
