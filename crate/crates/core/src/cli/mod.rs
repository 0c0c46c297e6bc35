//! Command-line front end: `construct`, `verify`, `game`, `exact`,
//! `steiner` and `bounds`.
//!
//! Exit codes: 0 when clean, 1 when a witness or a violation was found,
//! 2 for usage, format and capacity errors.

pub mod file;

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::coloring::{
    greedy_partial_steiner, random_base, BaseTwoColoring, RankColoring, Regime, StepUpColoring,
    StepUpRule,
};
use crate::delta::{universe, BitVertex};
use crate::error::{Error, Result};
use crate::game::{
    replay, run_game, ConstantPainter, MinimaxPainter, Painter, RandomPainter, ResourceBounds,
    Transcript,
};
use crate::hypergraph::{
    binomial, find_blue_clique, find_red_configuration, Color, ColoringOracle, ConfigurationWitness,
    TableColoring, Vertex,
};
use crate::verifier::bounds::bound_report;
use crate::verifier::exact::{self, exact_ramsey, RamseyQuery};
use crate::verifier::stepping::SCAN_GUARD;
pub use file::{Body, ColoringFile, FileMode};

#[derive(Debug, Parser)]
#[command(name = "hyperramsey", version, about = "Ramsey colorings of (k+1)-sets: construct, verify, play, compute")]
pub struct Cli {
    /// Worker threads for the parallel scans (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a coloring file.
    Construct {
        #[arg(long)]
        mode: FileMode,
        #[arg(long)]
        k: usize,
        /// Number of base vertices (bit length for the stepping-up modes).
        #[arg(long = "N")]
        n_vertices: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// One color everywhere instead of random colors (explicit and stepup modes).
        #[arg(long, value_parser = parse_color)]
        fill: Option<Color>,
        /// Target red count; checked against the stepping-up rule.
        #[arg(long)]
        t: Option<usize>,
        /// Export another coloring file as an explicit table.
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan a coloring file for red (k+1)-sets and blue cliques.
    Verify {
        file: PathBuf,
        /// Report (k+1)-sets with at least this many red edges.
        #[arg(long)]
        t: Option<usize>,
        /// Report blue cliques of this size.
        #[arg(long)]
        n: Option<usize>,
        /// Print the color of one edge, vertices separated by spaces or commas.
        #[arg(long)]
        edge: Option<String>,
    },
    /// Play builder's strategy against a painter.
    Game {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// red, blue, random[:SEED] or minimax[:DEPTH].
        #[arg(long, default_value = "random")]
        painter: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Where to write the transcript.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replay a transcript instead of playing.
        #[arg(long, conflicts_with = "out")]
        replay: Option<PathBuf>,
    },
    /// Least N with no good coloring, by exhaustive search.
    Exact {
        #[arg(long, required_unless_present = "fixtures")]
        k: Option<usize>,
        #[arg(long, required_unless_present = "fixtures")]
        t: Option<usize>,
        #[arg(long, required_unless_present = "fixtures")]
        n: Option<usize>,
        /// Largest N to try (default: as far as the search guard allows).
        #[arg(long = "N")]
        n_max: Option<usize>,
        /// Print the regenerated fixture table instead.
        #[arg(long)]
        fixtures: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy partial Steiner packing of k-sets of [n].
    Steiner {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the lower and upper bound formulas.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: u64,
        /// Constant in the lower bound.
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        /// Constant in the upper bound.
        #[arg(long = "c-prime", default_value_t = 1.0)]
        c_prime: f64,
    },
}

fn parse_color(s: &str) -> std::result::Result<Color, String> {
    match s.to_ascii_lowercase().as_str() {
        "r" | "red" => Ok(Color::Red),
        "b" | "blue" => Ok(Color::Blue),
        _ => Err(format!("{s:?} is not red or blue")),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    match pool.install(|| dispatch(cli.command, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Contract(_) => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut (dyn Write + Send)) -> Result<i32> {
    match cmd {
        Command::Construct {
            mode,
            k,
            n_vertices,
            seed,
            fill,
            t,
            from,
            out: path,
        } => {
            let file = construct(mode, k, n_vertices, seed, fill, t, from)?;
            emit(out, path, &file.render())?;
            Ok(0)
        }
        Command::Verify { file, t, n, edge } => {
            let text = fs::read_to_string(&file)?;
            let parsed = ColoringFile::parse(&text)?;
            verify(&parsed, t, n, edge.as_deref(), out)
        }
        Command::Game {
            k,
            n,
            painter,
            seed,
            out: path,
            replay: from,
        } => game(k, n, &painter, seed, path, from, out),
        Command::Exact {
            k,
            t,
            n,
            n_max,
            fixtures,
            out: path,
        } => {
            if fixtures {
                let rows = exact::generate_fixtures()?;
                emit(out, path, &exact::render_fixtures(&rows))?;
                return Ok(0);
            }
            let (k, t, n) = (k.unwrap(), t.unwrap(), n.unwrap());
            let n_max = n_max.unwrap_or_else(|| exact::max_searchable(k, exact::EDGE_GUARD));
            let r = exact_ramsey(RamseyQuery { k, t, n, n_max })?;
            emit(out, path, &format!("{}\n", r.value))?;
            Ok(0)
        }
        Command::Steiner { k, n, out: path } => {
            let fam = greedy_partial_steiner(n, k)?;
            let mut text = String::new();
            for b in &fam.blocks {
                text.push_str(&join(b));
                text.push('\n');
            }
            emit(out, path, &text)?;
            writeln!(
                out,
                "# blocks {} counting-bound {:.2} max-intersection {}",
                fam.blocks.len(),
                crate::coloring::SteinerFamily::counting_bound(n, k),
                fam.max_pairwise_intersection()
            )?;
            Ok(0)
        }
        Command::Bounds { k, t, n, c, c_prime } => {
            writeln!(out, "{}", bound_report(k, t, n, c, c_prime)?)?;
            Ok(0)
        }
    }
}

/// Writes to `path` if given, else to `out`.
fn emit(out: &mut (dyn Write + Send), path: Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn join<V: Display>(vs: &[V]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn construct(
    mode: FileMode,
    k: usize,
    nv: usize,
    seed: Option<u64>,
    fill: Option<Color>,
    t: Option<usize>,
    from: Option<PathBuf>,
) -> Result<ColoringFile> {
    if let Some(path) = from {
        if mode != FileMode::Explicit {
            return Err(Error::Usage("--from only exports to --mode explicit".into()));
        }
        let src = ColoringFile::parse(&fs::read_to_string(path)?)?;
        let table = match &src.body {
            Body::Explicit(t) => t.clone(),
            Body::Rank(phi) => {
                let oracle = RankColoring::new(phi.clone())?;
                TableColoring::from_fn(src.n_vertices, src.k, |e| oracle.color(e))?
            }
            Body::StepUp(phi) => step_oracle(phi, src.k, src.mode)?.to_table()?,
        };
        return Ok(ColoringFile::explicit(table, src.k, src.seed));
    }
    let seed_or_zero = seed.unwrap_or(0);
    match mode {
        FileMode::Explicit => {
            if let Some(c) = fill {
                return Ok(ColoringFile::explicit(TableColoring::filled(nv, k, c)?, k, None));
            }
            let table = BaseTwoColoring::random(nv, k, seed_or_zero)?.table().clone();
            Ok(ColoringFile::explicit(table, k, Some(seed_or_zero)))
        }
        FileMode::Rank => Ok(ColoringFile::rank(random_base(nv, k, seed_or_zero)?, Some(seed_or_zero))),
        FileMode::StepUp | FileMode::StepUpStrong => {
            if k < 3 {
                return Err(Error::Usage(format!("stepping up needs k >= 3, got {k}")));
            }
            let (phi, seed) = match fill {
                Some(c) => (BaseTwoColoring::constant(nv, k - 1, c)?, None),
                None => (BaseTwoColoring::random(nv, k - 1, seed_or_zero)?, Some(seed_or_zero)),
            };
            let strong = mode == FileMode::StepUpStrong;
            match (strong, t) {
                (false, Some(t)) => drop(StepUpColoring::standard(phi.clone(), k, t, Regime::Unverified)?),
                _ => drop(step_oracle(&phi, k, mode)?),
            }
            Ok(ColoringFile::stepup(phi, strong, seed))
        }
    }
}

fn step_oracle(phi: &BaseTwoColoring, k: usize, mode: FileMode) -> Result<StepUpColoring> {
    let rule = if mode == FileMode::StepUpStrong {
        StepUpRule::Strong
    } else {
        StepUpRule::Standard
    };
    StepUpColoring::new(phi.clone(), k, rule, Regime::Unverified)
}

fn verify(
    file: &ColoringFile,
    t: Option<usize>,
    n: Option<usize>,
    edge: Option<&str>,
    out: &mut (dyn Write + Send),
) -> Result<i32> {
    if t.is_none() && n.is_none() && edge.is_none() {
        return Err(Error::Usage("give --t, --n or --edge".into()));
    }
    writeln!(out, "mode {} k {} N {}", file.mode, file.k, file.n_vertices)?;
    match &file.body {
        Body::Explicit(table) => scan(table, &table.vertices(), t, n, edge, parse_int_edge, out),
        Body::Rank(phi) => {
            let oracle = RankColoring::new(phi.clone())?;
            scan(&oracle, &oracle.vertices(), t, n, edge, parse_int_edge, out)
        }
        Body::StepUp(phi) => {
            let oracle = step_oracle(phi, file.k, file.mode)?;
            let bits = file.n_vertices;
            let size = 1u64 << bits;
            if t.is_some() && binomial(size, file.k as u64 + 1) > SCAN_GUARD {
                return Err(Error::Capacity(format!(
                    "scanning the ({}+1)-subsets of {{0,1}}^{bits} exceeds the scan guard",
                    file.k
                )));
            }
            let cube = universe(bits)?;
            let parse = |s: &str| -> Result<Vec<BitVertex>> {
                s.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        let v: BitVertex = x.parse()?;
                        if v.len() != bits {
                            return Err(Error::Usage(format!("vertex {x} is not a bit string of length {bits}")));
                        }
                        Ok(v)
                    })
                    .collect()
            };
            // The blue side has nothing to find when the clique exceeds the cube.
            let blue = match n {
                Some(n) if n as u64 > size => {
                    writeln!(out, "blue: vacuous (n = {n} exceeds 2^{bits} = {size} vertices)")?;
                    None
                }
                other => other,
            };
            scan(&oracle, &cube, t, blue, edge, parse, out)
        }
    }
}

fn parse_int_edge(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<u32>().map_err(|_| Error::Usage(format!("bad vertex {x:?}"))))
        .collect()
}

fn describe<V: Vertex>(w: &ConfigurationWitness<V>) -> String {
    let mut s = join(&w.vertices);
    if !w.red_edges.is_empty() {
        let edges: Vec<String> = w.red_edges.iter().map(|e| join(e)).collect();
        s.push_str(&format!(" (red edges: {})", edges.join(" | ")));
    }
    s
}

fn scan<V: Vertex, O: ColoringOracle<V>>(
    oracle: &O,
    domain: &[V],
    t: Option<usize>,
    n: Option<usize>,
    edge: Option<&str>,
    parse_edge: impl Fn(&str) -> Result<Vec<V>>,
    out: &mut (dyn Write + Send),
) -> Result<i32> {
    let mut code = 0;
    if let Some(e) = edge {
        let e = parse_edge(e)?;
        crate::hypergraph::check_edge(&e, oracle.uniformity())?;
        if e.iter().any(|v| domain.binary_search(v).is_err()) {
            return Err(Error::Usage(format!("edge {} leaves the vertex set", join(&e))));
        }
        writeln!(out, "edge {}: {}", join(&e), oracle.color(&e))?;
    }
    if let Some(t) = t {
        match find_red_configuration(oracle, t, domain)? {
            Some(w) => {
                writeln!(out, "red: {}", describe(&w))?;
                code = 1;
            }
            None => writeln!(out, "red: none")?,
        }
    }
    if let Some(n) = n {
        match find_blue_clique(oracle, n, domain)? {
            Some(w) => {
                writeln!(out, "blue: {}", describe(&w))?;
                code = 1;
            }
            None => writeln!(out, "blue: none")?,
        }
    }
    Ok(code)
}

fn painter_from(spec: &str, seed: Option<u64>) -> Result<Box<dyn Painter>> {
    let (name, arg) = match spec.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (spec, None),
    };
    let num = |x: &str| x.parse::<u64>().map_err(|_| Error::Usage(format!("bad painter argument {x:?}")));
    Ok(match (name, arg) {
        ("red", None) => Box::new(ConstantPainter(Color::Red)),
        ("blue", None) => Box::new(ConstantPainter(Color::Blue)),
        ("random", a) => Box::new(RandomPainter::new(match a {
            Some(s) => num(s)?,
            None => seed.unwrap_or(0),
        })),
        ("minimax", a) => Box::new(MinimaxPainter {
            depth: a.map(num).transpose()?.unwrap_or(2) as usize,
        }),
        _ => {
            return Err(Error::Usage(format!(
                "unknown painter {spec:?} (red, blue, random[:SEED], minimax[:DEPTH])"
            )))
        }
    })
}

fn game(
    k: usize,
    n: usize,
    painter: &str,
    seed: Option<u64>,
    path: Option<PathBuf>,
    from: Option<PathBuf>,
    out: &mut (dyn Write + Send),
) -> Result<i32> {
    let record = match from {
        Some(p) => {
            let tr = Transcript::parse(&fs::read_to_string(p)?)?;
            if (tr.k, tr.n) != (k, n) {
                return Err(Error::Usage(format!(
                    "transcript is for k={} n={}, not k={k} n={n}",
                    tr.k, tr.n
                )));
            }
            replay(&tr)?
        }
        None => {
            let mut p = painter_from(painter, seed)?;
            if k < 3 || n == 0 {
                return Err(Error::Usage(format!("the game needs k >= 3 and n >= 1 (k={k}, n={n})")));
            }
            run_game(k, n, p.as_mut(), None)?
        }
    };
    let o = &record.outcome;
    let bounds = ResourceBounds::for_game(k, n);
    writeln!(out, "outcome: {:?}", o.kind)?;
    writeln!(out, "witness: {}", describe(&o.witness))?;
    writeln!(out, "stats\ts={}\tr={}\tm={}", o.stats.vertices, o.stats.red, o.stats.edges)?;
    writeln!(
        out,
        "bounds\ts<={}\tr<={}\tm<={}",
        bounds.vertices,
        bounds.red,
        o.stats.vertices * bounds.edges_per_vertex
    )?;
    if let Some(p) = path {
        fs::write(p, record.transcript.to_string())?;
    }
    if !bounds.admits(&o.stats) {
        writeln!(out, "violation: resource bounds exceeded")?;
        return Ok(1);
    }
    Ok(0)
}
