use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use plantw::io::{read_gr, read_rotation, read_td, write_gr, write_td};
use plantw::latching::{build_latching, LatchingGraph};
use plantw::minsep::minimal_separators;
use plantw::oracle::{corpus, minseps_bruteforce, pmcs_bruteforce, treewidth_bruteforce};
use plantw::planar::{embed, is_triconnected, PlaneGraph};
use plantw::pmc::{pmcs, pmcs_plane, PmcStats, Pmcs};
use plantw::treewidth::treewidth_planar;
use plantw::{chordless, Error, Graph, VertexSet};
use rand::Rng;

#[derive(Parser, Debug)]
#[command(name = "plantw", version, about = "Potential maximal cliques and exact treewidth of planar graphs")]
struct Cli {
    /// Input graph in `.gr` format; `-` reads stdin.
    #[arg(long, short, global = true, default_value = "-")]
    input: String,
    /// Rotation system to use instead of computing an embedding.
    #[arg(long, global = true)]
    embedding: Option<PathBuf>,
    /// Output file (`tw`: the decomposition; `corpus`: a directory).
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Stop after this many items.
    #[arg(long, global = true)]
    max_count: Option<usize>,
    /// Print counters to stderr.
    #[arg(long, global = true)]
    stats: bool,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Reproducible output: fixed default seed, no timings.
    #[arg(long, global = true, action = ArgAction::Set, default_value_t = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact treewidth; prints the width, writes the decomposition to --output.
    Tw,
    /// Potential maximal cliques of a triconnected planar graph.
    Pmcs,
    /// Minimal separators of a triconnected planar graph.
    Minseps,
    /// Edges of the latching graph with their origin.
    Latching,
    /// Chordless cycles of the input graph.
    ChordlessCycles,
    /// Chordless paths between two vertices.
    ChordlessPaths {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Validates a decomposition against the input graph.
    CheckTd {
        #[arg(long)]
        td: PathBuf,
    },
    /// Brute-force reference answers.
    Oracle {
        #[arg(value_enum)]
        query: OracleQuery,
    },
    /// Lists the test corpus; with --output writes one `.gr` per graph.
    Corpus {
        /// Largest vertex count to include.
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleQuery {
    Pmcs,
    Minseps,
    Tw,
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::Parse { .. } | Error::InvalidEmbedding(_)) => 2,
            Some(
                Error::NotPlanar
                | Error::NotTriconnected
                | Error::NotBiconnected
                | Error::Disconnected
                | Error::MultiEdge(..),
            ) => 3,
            _ => 1,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

type Outcome = std::result::Result<(), Failure>;

const INVALID_TD: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    match &cli.command {
        Command::Tw => tw(cli, out),
        Command::Pmcs => pmc_stream(cli, out),
        Command::Minseps => minseps(cli, out),
        Command::Latching => latching(cli, out),
        Command::ChordlessCycles => {
            let g = load_graph(cli)?;
            let it = chordless::chordless_cycles(&g);
            for c in it.take(limit(cli)) {
                line(out, c.iter().copied())?;
            }
            Ok(())
        }
        Command::ChordlessPaths { from, to } => {
            let g = load_graph(cli)?;
            let (s, t) = (vertex_arg(&g, *from)?, vertex_arg(&g, *to)?);
            for p in chordless::chordless_paths(&g, s, t).take(limit(cli)) {
                line(out, p.iter().copied())?;
            }
            Ok(())
        }
        Command::CheckTd { td } => check_td(cli, td, out),
        Command::Oracle { query } => oracle(cli, *query, out),
        Command::Corpus { max_n } => corpus_cmd(cli, *max_n, out),
    }
}

fn limit(cli: &Cli) -> usize {
    cli.max_count.unwrap_or(usize::MAX)
}

fn read_source(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_graph(cli: &Cli) -> Result<Graph, Failure> {
    let text = read_source(&cli.input)?;
    Ok(read_gr(&text).with_context(|| format!("in {}", cli.input))?)
}

fn load_plane(cli: &Cli, g: &Graph) -> Result<PlaneGraph, Failure> {
    match &cli.embedding {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(read_rotation(g, &text).with_context(|| format!("in {}", p.display()))?)
        }
        None => Ok(embed(g)?),
    }
}

fn load_latching(cli: &Cli) -> Result<LatchingGraph, Failure> {
    let g = load_graph(cli)?;
    if !is_triconnected(&g) {
        return Err(Error::NotTriconnected.into());
    }
    let pg = load_plane(cli, &g)?;
    Ok(build_latching(&pg)?)
}

fn vertex_arg(g: &Graph, v: usize) -> Result<usize, Failure> {
    if v == 0 || v > g.n() {
        return Err(Failure {
            code: 1,
            error: anyhow!("vertex {v} outside 1..={}", g.n()),
        });
    }
    Ok(v - 1)
}

fn io_err(e: io::Error) -> Failure {
    anyhow::Error::from(e).into()
}

/// Writes 0-based ids as one 1-based line.
fn line(out: &mut impl Write, ids: impl IntoIterator<Item = usize>) -> Outcome {
    let text: Vec<String> = ids.into_iter().map(|v| (v + 1).to_string()).collect();
    writeln!(out, "{}", text.join(" ")).map_err(io_err)
}

fn set_line(out: &mut impl Write, s: &VertexSet) -> Outcome {
    line(out, s.iter())
}

fn tw(cli: &Cli, out: &mut impl Write) -> Outcome {
    let g = load_graph(cli)?;
    let start = Instant::now();
    let res = treewidth_planar(&g)?;
    writeln!(out, "{}", res.width).map_err(io_err)?;
    if let Some(path) = &cli.output {
        fs::write(path, write_td(&res.td, g.n()))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.stats {
        eprintln!("bags {}", res.td.len());
        eprintln!("splits {}", res.stats.splits.len());
        eprintln!("split_mismatches {}", res.stats.split_mismatches);
        for p in &res.stats.pieces {
            eprintln!("piece n={} pmcs={} width={}", p.n, p.pmcs, p.width);
        }
        if !cli.deterministic {
            eprintln!("seconds {:.3}", start.elapsed().as_secs_f64());
        }
    }
    Ok(())
}

fn pmc_stream(cli: &Cli, out: &mut impl Write) -> Outcome {
    let g = load_graph(cli)?;
    let start = Instant::now();
    let mut it: Pmcs = match &cli.embedding {
        Some(_) => pmcs_plane(&load_plane(cli, &g)?)?,
        None => pmcs(&g)?,
    };
    if cli.stats {
        it = it.track_invariant();
    }
    for p in it.by_ref().take(limit(cli)) {
        set_line(out, &p.vertices)?;
    }
    if cli.stats {
        report_pmc_stats(&it.stats(), it.meter().get());
        if !cli.deterministic {
            eprintln!("seconds {:.3}", start.elapsed().as_secs_f64());
        }
    }
    Ok(())
}

fn report_pmc_stats(st: &PmcStats, work: u64) {
    let [k4, wheel, path, hinge] = st.by_category;
    eprintln!("emitted {}", st.emitted);
    eprintln!("by_category k4={k4} wheel={wheel} path={path} hinge={hinge}");
    eprintln!("work {work}");
    eprintln!("max_delay {}", st.max_work_gap());
    let mut buckets = [0u64; 64];
    for &gap in &st.work_gaps {
        buckets[(64 - gap.leading_zeros()) as usize] += 1;
    }
    for (b, &c) in buckets.iter().enumerate().filter(|(_, &c)| c > 0) {
        let lo = if b == 0 { 0 } else { 1u64 << (b - 1) };
        eprintln!("delay_histogram >={lo} {c}");
    }
    eprintln!("components {} empty={}", st.components_processed, st.empty_components);
    eprintln!("safety_rejections {}", st.safety_rejections);
    eprintln!("component_suppressions {}", st.component_suppressions);
    eprintln!(
        "top_scheduler events={} suppressed={} max_events_between_emissions={}",
        st.top.events,
        st.top.suppressed.iter().sum::<u64>(),
        st.top.max_events_between_emissions
    );
    eprintln!(
        "invariant_violations {} missing_live_successor {} delay_bound_violations {}",
        st.top.invariant_violations + st.component_invariant_violations,
        st.top.missing_live_successor + st.component_missing_successor,
        st.top.delay_bound_violations
    );
}

fn minseps(cli: &Cli, out: &mut impl Write) -> Outcome {
    let l = load_latching(cli)?;
    let mut it = minimal_separators(&l);
    for s in it.by_ref().take(limit(cli)) {
        set_line(out, &s.vertices)?;
    }
    if cli.stats {
        eprintln!("rejected_cycles {}", it.rejected());
    }
    Ok(())
}

fn latching(cli: &Cli, out: &mut impl Write) -> Outcome {
    let l = load_latching(cli)?;
    let mut edges = l.edges().to_vec();
    edges.sort();
    for e in edges.iter().take(limit(cli)) {
        writeln!(out, "{} {} {}", e.u + 1, e.v + 1, e.origin).map_err(io_err)?;
    }
    if cli.stats {
        eprintln!("edges {} chords {}", l.edges().len(), l.chord_count());
    }
    Ok(())
}

fn check_td(cli: &Cli, path: &Path, out: &mut impl Write) -> Outcome {
    let g = load_graph(cli)?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (td, n) = read_td(&text).with_context(|| format!("in {}", path.display()))?;
    if n != g.n() {
        return Err(Failure {
            code: INVALID_TD,
            error: anyhow!("decomposition is for {n} vertices, graph has {}", g.n()),
        });
    }
    match td.check(&g) {
        Ok(()) => writeln!(out, "valid width {}", td.width()).map_err(io_err),
        Err(v) => Err(Failure {
            code: INVALID_TD,
            error: anyhow!("invalid decomposition: {v}"),
        }),
    }
}

fn oracle(cli: &Cli, query: OracleQuery, out: &mut impl Write) -> Outcome {
    let g = load_graph(cli)?;
    match query {
        OracleQuery::Pmcs => {
            for s in pmcs_bruteforce(&g)?.iter().take(limit(cli)) {
                set_line(out, s)?;
            }
        }
        OracleQuery::Minseps => {
            for s in minseps_bruteforce(&g)?.iter().take(limit(cli)) {
                set_line(out, s)?;
            }
        }
        OracleQuery::Tw => writeln!(out, "{}", treewidth_bruteforce(&g)?).map_err(io_err)?,
    }
    Ok(())
}

fn corpus_cmd(cli: &Cli, max_n: usize, out: &mut impl Write) -> Outcome {
    let seed = match (cli.seed, cli.deterministic) {
        (Some(s), _) => s,
        (None, true) => 0,
        (None, false) => rand::thread_rng().gen(),
    };
    if let Some(dir) = &cli.output {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    for cg in corpus(seed, max_n).into_iter().take(limit(cli)) {
        let g = &cg.graph;
        writeln!(
            out,
            "{} n={} m={} planar={} connected={} biconnected={} triconnected={}",
            cg.name,
            g.n(),
            g.m(),
            cg.planar,
            cg.connected,
            cg.biconnected,
            cg.triconnected
        )
        .map_err(io_err)?;
        if let Some(dir) = &cli.output {
            let path = dir.join(format!("{}.gr", cg.name));
            let text = format!("c {}\n{}", cg.name, write_gr(g));
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    if cli.stats {
        eprintln!("seed {seed}");
    }
    Ok(())
}
