//! `mvlc`: build, simulate, verify and cost-compare small multi-valued
//! logic circuits from the builtin cell catalog.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or validation
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mvlc_core::catalog::Catalog;
use mvlc_core::config::{AdderChoice, Config};
use mvlc_core::generate::{self, GeneratorKind};
use mvlc_core::json;
use mvlc_core::logic::{CodeKind, LogicLevel};
use mvlc_core::netlist::Netlist;
use mvlc_core::report::{self, Format, TableKind};
use mvlc_core::sim::{self, Oracle, VerifyReport};

#[derive(Parser)]
#[command(name = "mvlc", version, about = "Multi-valued logic circuit kit")]
struct Cli {
    /// Config file with `key = value` lines (qmul_tc_choice, code_map,
    /// max_fanout, adder_variant, half_adder_tc, detector/adder overrides).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the builtin cell library.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Generate a circuit and write it as JSON.
    Build {
        /// One of: binary_rca, quaternary_rca, v1_adder, wallace_binary,
        /// wallace_quaternary, v1_multiplier, qfa_decomposed.
        generator: String,
        /// Operand width in digits/bits (generator-specific default).
        #[arg(long = "n")]
        n: Option<usize>,
        /// Quaternary adder pick, e.g. qfa_v2 or qfa_v3/roosta_3ps.
        #[arg(long)]
        variant: Option<String>,
        /// Code map for decoder/encoder-wrapped circuits.
        #[arg(long)]
        code: Option<String>,
        /// Run the buffer-insertion pass at this fan-out limit.
        #[arg(long)]
        max_fanout: Option<u32>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate one input assignment.
    Simulate {
        #[arg(short = 'c', long)]
        circuit: PathBuf,
        /// Comma-separated port assignments, e.g. a00=3,b00=1,ci=0.
        #[arg(long)]
        inputs: String,
    },
    /// Check a circuit against an integer oracle.
    Verify {
        #[arg(short = 'c', long)]
        circuit: PathBuf,
        /// add (sum of operand groups) or mul (their product).
        #[arg(long)]
        oracle: String,
        /// Enumerate the full input space (the default).
        #[arg(long)]
        exhaustive: bool,
        /// Sampled mode: this many random vectors plus the corner set.
        #[arg(long, conflicts_with = "exhaustive")]
        samples: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Exhaustively compare two circuits.
    Equiv {
        #[arg(short)]
        a: PathBuf,
        #[arg(short)]
        b: PathBuf,
        /// Code map relating quaternary digits to bit pairs.
        #[arg(long)]
        code: Option<String>,
    },
    /// Emit a comparison table or a circuit cost report.
    Report {
        /// nand, adders or multipliers.
        #[arg(long, conflicts_with = "circuit")]
        table: Option<String>,
        /// Cost report for a circuit file instead.
        #[arg(long)]
        circuit: Option<PathBuf>,
        /// Optional baseline circuit for the ratio columns.
        #[arg(long, requires = "circuit")]
        baseline: Option<PathBuf>,
        #[arg(long, default_value = "md")]
        format: String,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// One row per primitive cell.
    List {
        #[arg(long, default_value = "md")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, String> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
            Config::parse(&text).map_err(|e| e.to_string())
        }
    }
}

fn load_netlist(path: &Path) -> Result<Netlist, String> {
    json::load(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn print_witnesses(report: &VerifyReport) {
    for m in report.mismatches.iter().take(5) {
        let fmt = |map: &std::collections::BTreeMap<String, u64>| {
            map.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let inputs = m
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        eprintln!(
            "mismatch at [{inputs}]: expected {{{}}}, got {{{}}}",
            fmt(&m.expected),
            fmt(&m.actual)
        );
    }
    if report.mismatches.len() > 5 {
        eprintln!("… and {} more", report.mismatches.len() - 5);
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut cfg = load_config(&cli.config)?;
    match cli.command {
        Command::Catalog(CatalogCmd::List { format }) => {
            let format = parse_format(&format)?;
            let catalog = Catalog::builtin(&cfg);
            print!("{}", report::render_catalog(&catalog, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Build {
            generator,
            n,
            variant,
            code,
            max_fanout,
            output,
        } => {
            let kind: GeneratorKind = generator.parse()?;
            if let Some(v) = variant {
                cfg.adder_variant = AdderChoice::parse(&v);
            }
            if let Some(c) = code {
                cfg.code_map = c.parse::<CodeKind>()?;
            }
            if let Some(k) = max_fanout {
                cfg.max_fanout = Some(k);
            }
            let catalog = Catalog::builtin(&cfg);
            let n = n.unwrap_or_else(|| kind.default_width());
            let netlist =
                generate::build_circuit(kind, n, &catalog, &cfg).map_err(|e| e.to_string())?;
            match output {
                Some(path) => {
                    json::save(&netlist, &path).map_err(|e| e.to_string())?;
                    eprintln!(
                        "wrote {} ({}: {} instances, {} nets)",
                        path.display(),
                        netlist.name,
                        netlist.instances.len(),
                        netlist.nets.len()
                    );
                }
                None => print!("{}", json::to_json(&netlist)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate { circuit, inputs } => {
            let netlist = load_netlist(&circuit)?;
            let catalog = Catalog::builtin(&cfg);
            let mut assignment = sim::Assignment::new();
            for pair in inputs.split(',').filter(|s| !s.trim().is_empty()) {
                let (name, value) = pair.split_once('=').ok_or_else(|| {
                    format!("bad input assignment '{pair}' (expected port=value)")
                })?;
                let name = name.trim();
                let value: u8 = value
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad value in '{pair}': {e}"))?;
                let port = netlist
                    .port(name)
                    .ok_or_else(|| format!("circuit has no port '{name}'"))?;
                let level = LogicLevel::new(port.radix, value).map_err(|e| e.to_string())?;
                assignment.insert(name.to_string(), level);
            }
            let outputs =
                sim::evaluate(&netlist, &catalog, &assignment).map_err(|e| e.to_string())?;
            for port in netlist.output_ports() {
                println!("{} = {}", port.name, outputs[&port.name]);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            circuit,
            oracle,
            exhaustive: _,
            samples,
            seed,
        } => {
            let netlist = load_netlist(&circuit)?;
            let catalog = Catalog::builtin(&cfg);
            let oracle: Oracle = oracle.parse()?;
            let report = match samples {
                Some(count) => sim::verify_sampled(&netlist, &catalog, oracle, count, seed)
                    .map_err(|e| e.to_string())?,
                None => sim::verify_exhaustive(&netlist, &catalog, oracle, None)
                    .map_err(|e| e.to_string())?,
            };
            println!("{}", report.summary());
            if report.is_ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                print_witnesses(&report);
                Ok(ExitCode::from(1))
            }
        }
        Command::Equiv { a, b, code } => {
            let na = load_netlist(&a)?;
            let nb = load_netlist(&b)?;
            let catalog = Catalog::builtin(&cfg);
            let code = match code {
                Some(c) => Some(c.parse::<CodeKind>()?),
                None => None,
            };
            let report =
                sim::equiv_check(&na, &nb, &catalog, code, None).map_err(|e| e.to_string())?;
            println!("{}", report.summary());
            if report.is_ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                print_witnesses(&report);
                Ok(ExitCode::from(1))
            }
        }
        Command::Report {
            table,
            circuit,
            baseline,
            format,
        } => {
            let format = parse_format(&format)?;
            let catalog = Catalog::builtin(&cfg);
            match (table, circuit) {
                (Some(t), None) => {
                    let kind: TableKind = t.parse()?;
                    let table = report::comparison_table(&catalog, kind);
                    print!("{}", report::render_table(&table, format));
                    Ok(ExitCode::SUCCESS)
                }
                (None, Some(path)) => {
                    let netlist = load_netlist(&path)?;
                    let cost = report::metrics(&netlist, &catalog).map_err(|e| e.to_string())?;
                    let comparison = match baseline {
                        Some(bpath) => {
                            let bnl = load_netlist(&bpath)?;
                            let bcost =
                                report::metrics(&bnl, &catalog).map_err(|e| e.to_string())?;
                            let s_radix = dominant_radix(&netlist);
                            let b_radix = dominant_radix(&bnl);
                            Some(
                                report::compare(&cost, &bcost, s_radix, b_radix)
                                    .map_err(|e| e.to_string())?,
                            )
                        }
                        None => None,
                    };
                    print!(
                        "{}",
                        report::render_cost_report(&cost, comparison.as_ref(), format)
                    );
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err("report needs exactly one of --table or --circuit".to_string()),
            }
        }
    }
}

/// Radix used for the information-ratio column: the widest output radix.
fn dominant_radix(netlist: &Netlist) -> mvlc_core::logic::Radix {
    netlist
        .output_ports()
        .map(|p| p.radix)
        .max_by_key(|r| r.levels())
        .unwrap_or(mvlc_core::logic::Radix::Binary)
}
