//! `symdepth`: symbolic powers, homology, depth tables, bipartite connectivity
//! and the verification suites from the command line.
//!
//! Exit status: 0 on success (for reports: every non-skipped row passed),
//! 1 when a report has failing rows, 2 on usage or computation errors.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symdepth_core::betti::{betti_table_with, depth_row, BettiOptions, PowerKind, DEFAULT_LATTICE_CAP};
use symdepth_core::bipartite::{bc, bc_prime, maximal_induced_bipartite, with_bouquets, BipartiteWitness};
use symdepth_core::io::{graph_from_json, ideal_to_json, load_complex, load_graph, load_ideal};
use symdepth_core::symbolic::{symbolic_power_within, SymbolicMethod, SymbolicPowerRequest};
use symdepth_core::verify::{
    default_scan_suite, parse_graph_list, run_conjecture_scan, verify_cycle, verify_example_w, verify_lemma,
    verify_whisker, Lemma, VerificationReport, VerifyOptions, VERIFY_LATTICE_CAP,
};
use symdepth_core::{Budget, Error, Field, Graph};

#[derive(Parser)]
#[command(name = "symdepth", version, about = "Depth of symbolic powers of edge ideals")]
struct Cli {
    /// Coefficient field: gf:<p> or qq.
    #[arg(long, global = true, env = "SYMDEPTH_FIELD", default_value = "gf:32003")]
    field: Field,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of I(G)^(s).
    Symbolic {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value = "intersection")]
        method: SymbolicMethod,
        /// Write the ideal as JSON instead of printing it.
        #[arg(long)]
        out: Option<String>,
    },
    /// Reduced homology of a simplicial complex given as JSON.
    Homology {
        #[arg(long)]
        complex: String,
    },
    /// Depth and projective dimension of S/I for an ideal given as JSON.
    Depth {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
        /// Also print the nonzero multigraded Betti numbers.
        #[arg(long)]
        betti: bool,
    },
    /// Depth of S/I(G)^s or S/I(G)^(s) for a range of s.
    Table {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "symbolic")]
        kind: PowerKind,
        #[arg(long, default_value_t = 1)]
        smin: u32,
        #[arg(long)]
        smax: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
        /// Per-row time limit in seconds.
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// bc(G) and bc'(G) with minimizing witnesses.
    Bc {
        #[arg(long)]
        graph: String,
        /// List every maximal induced bipartite subgraph.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Compare the smallest computed symbolic depth with bc'(G).
    Conjecture {
        /// Directory of graph JSON files, or shorthands/files separated by spaces or `;`.
        #[arg(long)]
        graphs: Option<String>,
        /// Largest exponent; defaults to the proven window where known.
        #[arg(long)]
        smax: Option<u32>,
        #[command(flatten)]
        opts: ReportOpts,
    },
}

#[derive(Args)]
struct ReportOpts {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    /// Per-row time limit in seconds.
    #[arg(long, default_value_t = 600, global = true)]
    timeout: u64,
    #[arg(long, default_value_t = VERIFY_LATTICE_CAP, global = true)]
    lattice_cap: usize,
}

#[derive(Subcommand)]
enum Suite {
    /// Odd cycle C_n (even n: ordinary powers only).
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        smax: u32,
        /// Also check ordinary powers.
        #[arg(long)]
        ordinary: bool,
    },
    /// Whisker graph W_a, e.g. --a 2,1,1.
    Whisker {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long)]
        smax: u32,
    },
    /// The triangle with two whiskers at each vertex.
    ExampleW {
        #[arg(long)]
        smax: u32,
        #[arg(long)]
        allow_large: bool,
    },
    /// One ideal identity.
    Lemma {
        #[arg(long)]
        name: Lemma,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let field = cli.field;
    match cli.command {
        Command::Symbolic { graph, s, method, out } => {
            let g = load_graph(&graph)?;
            let ideal = symbolic_power_within(&SymbolicPowerRequest::new(g, s).with_method(method), &Budget::UNLIMITED)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, ideal_to_json(&ideal) + "\n").map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                    println!("{} generators written to {path}", ideal.len());
                }
                None => println!("{ideal}"),
            }
        }
        Command::Homology { complex } => {
            let c = load_complex(&complex)?;
            let h = c.reduced_homology(field);
            println!("field {field}");
            for (k, d) in h.dims().iter().enumerate() {
                println!("H~_{} = {d}", k as isize - 1);
            }
        }
        Command::Depth { ideal, lattice_cap, betti } => {
            let i = load_ideal(&ideal)?;
            let opts = BettiOptions { field, lattice_cap, budget: Budget::UNLIMITED };
            let table = betti_table_with(&i, &opts)?;
            println!("depth {}", table.depth());
            println!("pd {}", table.pd());
            println!("field {field}");
            if betti {
                for (k, b, v) in table.entries() {
                    println!("beta_{k},{b} = {v}");
                }
            }
        }
        Command::Table { graph, kind, smin, smax, format, lattice_cap, timeout } => {
            let g = load_graph(&graph)?;
            if smin == 0 || smin > smax {
                return Err(Error::InvalidParameter(format!("need 1 <= smin <= smax, got {smin}..{smax}")));
            }
            let method = match kind {
                PowerKind::Ordinary => "power".to_string(),
                PowerKind::Symbolic => SymbolicMethod::Intersection.to_string(),
            };
            let mut rows = Vec::new();
            for s in smin..=smax {
                let budget = timeout.map_or(Budget::UNLIMITED, |t| Budget::with_timeout(Duration::from_secs(t)));
                rows.push(depth_row(&g, kind, s, &BettiOptions { field, lattice_cap, budget })?);
            }
            match format {
                Format::Csv => {
                    println!("s,depth,pd,field,method,seconds");
                    for r in &rows {
                        println!("{},{},{},{field},{method},{:.3}", r.s, r.depth, r.pd, r.seconds);
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({"s": r.s, "depth": r.depth, "pd": r.pd, "field": field.to_string(), "method": method, "seconds": r.seconds}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&json!({"graph": graph, "kind": kind.to_string(), "rows": rows})).expect("json"));
                }
                Format::Table => {
                    println!("{graph} {kind} powers over {field}");
                    println!("{:>3}  {:>5}  {:>3}  {:>10}  {:>8}", "s", "depth", "pd", "generators", "seconds");
                    for r in &rows {
                        println!("{:>3}  {:>5}  {:>3}  {:>10}  {:>8.3}", r.s, r.depth, r.pd, r.generators, r.seconds);
                    }
                }
            }
        }
        Command::Bc { graph, witnesses, format } => {
            let g = load_graph(&graph)?;
            let start = Instant::now();
            let (b, bw) = bc(&g)?;
            let bcp = bc_prime(&g);
            let all = if witnesses {
                maximal_induced_bipartite(&g)?.into_iter().map(|w| with_bouquets(&g, w.clone()).or(Ok::<_, Error>(w))).collect::<Result<Vec<_>, _>>()?
            } else {
                Vec::new()
            };
            let seconds = start.elapsed().as_secs_f64();
            match format {
                Format::Json => {
                    let mut out = json!({"graph": graph, "bc": b, "bc_witness": witness_json(&bw), "seconds": seconds});
                    match &bcp {
                        Ok((v, w)) => {
                            out["bc_prime"] = json!(v);
                            out["bc_prime_witness"] = witness_json(w);
                        }
                        Err(e) => out["bc_prime_error"] = json!(e.to_string()),
                    }
                    if witnesses {
                        out["witnesses"] = json!(all.iter().map(witness_json).collect::<Vec<_>>());
                    }
                    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
                }
                Format::Table | Format::Csv => {
                    println!("bc  = {b}   witness {:?}", bw.vertices);
                    match &bcp {
                        Ok((v, w)) => println!("bc' = {v}   witness {:?}", w.vertices),
                        Err(e) => println!("bc' undefined: {e}"),
                    }
                    for w in &all {
                        println!(
                            "  {:?}  c={} t={} c(H)={} c'(H)={}",
                            w.vertices,
                            w.components_with_edge,
                            w.isolated.len(),
                            w.c_h,
                            w.c_prime.map_or("-".into(), |c| c.to_string())
                        );
                    }
                }
            }
        }
        Command::Verify { suite, opts } => {
            let vo = verify_options(field, &opts);
            let report = match suite {
                Suite::Cycle { n, smax, ordinary } => verify_cycle(n, smax, &VerifyOptions { ordinary, ..vo })?,
                Suite::Whisker { a, smax } => verify_whisker(&a, smax, &vo)?,
                Suite::ExampleW { smax, allow_large } => verify_example_w(smax, &VerifyOptions { allow_large, ..vo })?,
                Suite::Lemma { name, graph, s } => verify_lemma(name, &graph, s, &vo)?,
            };
            return Ok(emit(&report, opts.format));
        }
        Command::Conjecture { graphs, smax, opts } => {
            let vo = verify_options(field, &opts);
            let list = match graphs {
                None => default_scan_suite(),
                Some(g) if Path::new(&g).is_dir() => graphs_in_dir(&g)?,
                Some(g) => parse_graph_list(&g)?,
            };
            let report = run_conjecture_scan(&list, smax, &vo)?;
            return Ok(emit(&report, opts.format));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_options(field: Field, opts: &ReportOpts) -> VerifyOptions {
    VerifyOptions {
        field,
        lattice_cap: opts.lattice_cap,
        row_timeout: Some(Duration::from_secs(opts.timeout)),
        ..Default::default()
    }
}

fn emit(report: &VerificationReport, format: Format) -> ExitCode {
    match format {
        Format::Table => print!("{}", report.to_table()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json")),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn witness_json(w: &BipartiteWitness) -> serde_json::Value {
    json!({
        "vertices": w.vertices.labels(),
        "components_with_edge": w.components_with_edge,
        "isolated": w.isolated.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "c_h": w.c_h,
        "bouquet_count": w.bouquet_count,
        "c_prime": w.c_prime,
    })
}

fn graphs_in_dir(dir: &str) -> Result<Vec<(String, Graph)>, Error> {
    let io_err = |e: std::io::Error| Error::Parse(format!("{dir}: {e}"));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io_err)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(io_err)?;
            Ok((p.display().to_string(), graph_from_json(&text)?))
        })
        .collect()
}
