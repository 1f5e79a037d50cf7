//! Command-line surface over the cyclemax library: exact cycle counting,
//! closed-form and permanent bounds, table regeneration, and the search
//! pipelines.  Exit codes: 0 success, 1 golden-table mismatch, 2 usage or
//! domain error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclemax::bounds::{edge_bound_with_form, hmorph_bound, EdgeBoundForm};
use cyclemax::cycles::{count_cycles, count_cycles_by_length, turan_cycle_count};
use cyclemax::graph::make_blowup;
use cyclemax::io::{parse_auto, parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use cyclemax::permanent::{block_permanent, cycle_bound_blowup, ryser_permanent, DenseMatrix01};
use cyclemax::search::{self, CandidateRecord};
use cyclemax::tables;
use cyclemax::{BlockMatrixSpec, BlowupSpec, Error, Graph};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclemax", version, about = "Cycle counting and bounds for triangle-free graphs")]
struct Cli {
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Worker threads for parallel screens (default: all cores).
    #[arg(long, global = true, env = "CYCLEMAX_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Count the cycles of a graph read from a file (or stdin with "-").
    Count {
        /// Input file; "-" reads stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input_format: InputFormat,
        /// Also print the per-length breakdown.
        #[arg(long)]
        by_length: bool,
    },
    /// Evaluate a cycle-count bound.
    Bound {
        #[command(subcommand)]
        kind: BoundKind,
    },
    /// Compute a matrix permanent.
    Perm(PermArgs),
    /// Emit a circulant base graph (optionally uniformly blown up).
    Gamma {
        /// Family index; the graph has 3i-1 vertices and is i-regular.
        #[arg(long)]
        i: usize,
        /// Uniform blowup factor.
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Emit graph6 instead of an edge list.
        #[arg(long)]
        graph6: bool,
    },
    /// Emit the blowup of a circulant base with the given part sizes.
    Blowup {
        #[arg(long)]
        base: usize,
        /// Comma-separated part sizes, one per base vertex.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long)]
        graph6: bool,
        /// Print the exact cycle count instead of the graph.
        #[arg(long)]
        count: bool,
    },
    /// Regenerate the reference table and diff against golden values.
    Tables,
    /// Run an elimination screen or the exhaustive verifier.
    Search {
        #[command(subcommand)]
        which: SearchKind,
    },
}

#[derive(Subcommand)]
enum BoundKind {
    /// Successor-product bound from the edge count.
    Edge {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        g: usize,
        /// Use the larger whole-graph product instead of the per-vertex
        /// reduced form.
        #[arg(long)]
        full: bool,
    },
    /// Factorial bound for graphs homomorphic to a q-regular base on p
    /// vertices.
    Hmorph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 4)]
        g: usize,
    },
    /// Half the block permanent of a circulant blowup's adjacency-plus-
    /// identity matrix.
    Perm {
        #[arg(long)]
        gamma: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Explicit part sizes (overrides --t).
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Exact cycle count of the balanced complete bipartite graph.
    TuranExact {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct PermArgs {
    /// Circulant family index for a block permanent.
    #[arg(long)]
    gamma: Option<usize>,
    /// Uniform blowup factor.
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Explicit part sizes for the block permanent.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Dense 0-1 matrix file (one row per line of 0/1 characters).
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SearchKind {
    /// Staged screen of the uniform circulant blowups.
    RegularGamma,
    /// Screen of all (n, degree) pairs below the 3-colourable threshold.
    RegularDegree,
    /// Maximum order feasible for a near-regular candidate.
    NearRegular {
        /// Extra degree cap as a fraction "a/b" of n.
        #[arg(long)]
        cap: Option<String>,
        /// Report the closed-form estimate crossing instead.
        #[arg(long)]
        precursor: bool,
    },
    /// Screen of the near-regular pentagon blowups.
    Gtwo,
    /// Exhaustively verify the conjecture for small orders.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// At n = 8, only examine maximal triangle-free graphs.
        #[arg(long)]
        fast: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> cyclemax::Result<ExitCode> {
    match cli.command {
        Command::Count {
            input,
            input_format,
            by_length,
        } => {
            let g = read_graph(&input, input_format)?;
            if by_length {
                let by_len = count_cycles_by_length(&g);
                let mut total = num_bigint::BigUint::from(0u32);
                let mut lens: Vec<_> = by_len.keys().copied().collect();
                lens.sort();
                for len in lens {
                    println!("{}: {}", len, by_len[&len]);
                    total += &by_len[&len];
                }
                println!("total: {total}");
            } else {
                println!("{}", count_cycles(&g));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { kind } => {
            cmd_bound(kind)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Perm(args) => {
            cmd_perm(args)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { i, t, graph6 } => {
            let base = cyclemax::graph::make_gamma(i)?;
            let g = if t == 1 {
                base.graph().clone()
            } else {
                let p = base.p();
                make_blowup(&BlowupSpec::new(base, vec![t; p])?)
            };
            emit_graph(&g, graph6);
            Ok(ExitCode::SUCCESS)
        }
        Command::Blowup {
            base,
            sizes,
            graph6,
            count,
        } => {
            let base = cyclemax::graph::make_gamma(base)?;
            let g = make_blowup(&BlowupSpec::new(base, sizes)?);
            if count {
                println!("{}", count_cycles(&g));
            } else {
                emit_graph(&g, graph6);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables => cmd_tables(cli.format),
        Command::Search { which } => {
            cmd_search(which, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_graph(path: &PathBuf, format: InputFormat) -> cyclemax::Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    match format {
        InputFormat::Auto => parse_auto(&text),
        InputFormat::EdgeList => parse_edge_list(&text),
        InputFormat::Graph6 => parse_graph6(text.trim()),
    }
}

fn emit_graph(g: &Graph, graph6: bool) {
    if graph6 {
        println!("{}", write_graph6(g));
    } else {
        print!("{}", write_edge_list(g));
    }
}

fn cmd_bound(kind: BoundKind) -> cyclemax::Result<()> {
    match kind {
        BoundKind::Edge { n, m, g, full } => {
            let form = if full {
                EdgeBoundForm::Full
            } else {
                EdgeBoundForm::Reduced
            };
            println!("{}", edge_bound_with_form(n, m, g, form)?);
            eprintln!("note: successor-product bound from the edge count (girth {g})");
        }
        BoundKind::Hmorph { n, p, q, g } => {
            println!("{}", hmorph_bound(n, p, q, g)?);
            eprintln!(
                "note: factorial bound for graphs homomorphic to a {q}-regular base on {p} vertices"
            );
        }
        BoundKind::Perm { gamma, t, sizes } => {
            let base = cyclemax::graph::make_gamma(gamma)?;
            let sizes = sizes.unwrap_or_else(|| vec![t; base.p()]);
            let spec = BlockMatrixSpec::from_base(&base, sizes)?;
            println!("{}", cycle_bound_blowup(&spec));
            eprintln!("note: half the block permanent of adjacency-plus-identity");
        }
        BoundKind::TuranExact { n } => {
            println!("{}", turan_cycle_count(n)?);
            eprintln!("note: exact cycle count of the balanced complete bipartite graph");
        }
    }
    Ok(())
}

fn cmd_perm(args: PermArgs) -> cyclemax::Result<()> {
    if let Some(path) = args.matrix {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let rows: Vec<Vec<u8>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.trim()
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        _ => Err(Error::Parse(format!("matrix entries must be 0/1, got {c:?}"))),
                    })
                    .collect()
            })
            .collect::<cyclemax::Result<_>>()?;
        let matrix = DenseMatrix01::from_rows(rows)?;
        println!("{}", ryser_permanent(&matrix)?);
        return Ok(());
    }
    let gamma = args.gamma.ok_or_else(|| {
        Error::InvalidArgument("perm needs either --matrix or --gamma".into())
    })?;
    let base = cyclemax::graph::make_gamma(gamma)?;
    let sizes = args.sizes.unwrap_or_else(|| vec![args.t; base.p()]);
    let spec = BlockMatrixSpec::from_base(&base, sizes)?;
    println!("{}", block_permanent(&spec));
    Ok(())
}

fn cmd_tables(format: OutputFormat) -> cyclemax::Result<ExitCode> {
    let rows = tables::reference_rows();
    match format {
        OutputFormat::Json => {
            for row in &rows {
                println!(
                    "{}",
                    serde_json::json!({
                        "label": row.label,
                        "n": row.n,
                        "value": row.golden,
                    })
                );
            }
        }
        OutputFormat::Csv => {
            println!("label,n,value");
            for row in &rows {
                println!("{},{},{}", row.label, row.n, row.golden);
            }
        }
        OutputFormat::Table => {
            for row in &rows {
                let marker = match row.kind {
                    tables::RowKind::Bipartite { .. } => "",
                    tables::RowKind::GammaBound { i, t } if (i, t) == (2, 1) => "",
                    tables::RowKind::GammaBound { .. } => "<=",
                };
                println!("{:<14} n={:<3} {}{}", row.label, row.n, marker, row.golden);
            }
        }
    }
    let diffs = tables::diff_all();
    if diffs.is_empty() {
        eprintln!("all {} rows regenerate exactly", rows.len());
        Ok(ExitCode::SUCCESS)
    } else {
        for d in &diffs {
            eprintln!(
                "mismatch: {} golden={} computed={}",
                d.label, d.golden, d.computed
            );
        }
        Ok(ExitCode::from(1))
    }
}

fn parse_fraction(s: &str) -> cyclemax::Result<(u64, u64)> {
    let (a, b) = s
        .split_once('/')
        .ok_or_else(|| Error::InvalidArgument(format!("expected a fraction a/b, got {s:?}")))?;
    let num = a
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad numerator in {s:?}")))?;
    let den: u64 = b
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad denominator in {s:?}")))?;
    if den == 0 {
        return Err(Error::InvalidArgument("denominator must be nonzero".into()));
    }
    Ok((num, den))
}

fn emit_records(records: &[CandidateRecord], format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            for r in records {
                println!("{}", serde_json::to_string(r).unwrap());
            }
        }
        OutputFormat::Csv => {
            println!("family,n,i,t,delta,m,sizes,turan,verdict,comparison,bounds");
            for r in records {
                let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
                let sizes = r
                    .sizes
                    .as_ref()
                    .map(|s| {
                        s.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join("|")
                    })
                    .unwrap_or_default();
                let bounds = r
                    .bounds
                    .iter()
                    .map(|b| format!("{}={}", b.name, b.value))
                    .collect::<Vec<_>>()
                    .join(";");
                println!(
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.family,
                    r.n,
                    opt(r.i),
                    opt(r.t),
                    opt(r.delta),
                    opt(r.m),
                    sizes,
                    r.turan,
                    r.verdict,
                    r.comparison.clone().unwrap_or_default(),
                    bounds
                );
            }
        }
        OutputFormat::Table => {
            for r in records {
                let mut params = Vec::new();
                if let Some(i) = r.i {
                    params.push(format!("i={i}"));
                }
                if let Some(t) = r.t {
                    params.push(format!("t={t}"));
                }
                if let Some(d) = r.delta {
                    params.push(format!("delta={d}"));
                }
                if let Some(m) = r.m {
                    params.push(format!("m={m}"));
                }
                if let Some(s) = &r.sizes {
                    params.push(format!(
                        "sizes=({})",
                        s.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                }
                println!(
                    "{:<18} n={:<3} {:<28} {} {}",
                    r.family,
                    r.n,
                    params.join(" "),
                    r.verdict,
                    r.comparison.clone().unwrap_or_default()
                );
            }
        }
    }
}

fn summarize(records: &[CandidateRecord]) -> String {
    let survivors = records.iter().filter(|r| r.verdict == "survivor").count();
    format!(
        "{} candidates, {} eliminated, {} survivors",
        records.len(),
        records.len() - survivors,
        survivors
    )
}

fn cmd_search(which: SearchKind, format: OutputFormat) -> cyclemax::Result<()> {
    match which {
        SearchKind::RegularGamma => {
            let records = search::regular_gamma_screen();
            emit_records(&records, format);
            println!("{}", summarize(&records));
        }
        SearchKind::RegularDegree => {
            let records = search::regular_degree_screen();
            emit_records(&records, format);
            println!("{}", summarize(&records));
        }
        SearchKind::NearRegular { cap, precursor } => {
            if precursor {
                println!(
                    "closed-form estimate crossing: max n = {}",
                    search::near_regular_precursor_max_n()
                );
            } else {
                let cap = cap.as_deref().map(parse_fraction).transpose()?;
                println!("max feasible n = {}", search::near_regular_bound(cap));
            }
        }
        SearchKind::Gtwo => {
            let records = search::gtwo_blowup_screen();
            emit_records(&records, format);
            println!("{}", summarize(&records));
        }
        SearchKind::Verify { max_n, fast } => {
            let reports = search::verify_conjecture(max_n, fast)?;
            for r in &reports {
                if format == OutputFormat::Json {
                    println!("{}", serde_json::to_string(r).unwrap());
                } else {
                    println!(
                        "n={}: examined={} max={} turan={} maximizers={} {}, unique = {}",
                        r.n,
                        r.graphs_examined,
                        r.max_cycles,
                        r.turan,
                        r.maximizer_count,
                        if r.matches_turan {
                            "max = turan"
                        } else {
                            "max != turan"
                        },
                        if r.all_maximizers_balanced { "yes" } else { "no" }
                    );
                }
            }
            if reports
                .iter()
                .any(|r| !r.matches_turan || !r.all_maximizers_balanced)
            {
                return Err(Error::BoundSense(
                    "exhaustive verification found a counterexample".into(),
                ));
            }
        }
    }
    Ok(())
}
