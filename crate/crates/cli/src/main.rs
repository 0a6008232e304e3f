use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use freeknot::bracket::{self, FuzzConfig};
use freeknot::construct::{self, TrivalentGraph};
use freeknot::diagram::{all_diagrams_up_to, parse_dow, ChordDiagram};
use freeknot::dot::export_dot;
use freeknot::framed::{chord_diagram_to_framed, component_count, FramedFourGraph};
use freeknot::moves::{self, MoveSite};
use freeknot::parity::{self, interlacement};
use freeknot::planarity::{self, BoundKind, CrossingBound, Graph, PathCheck, Witness};
use freeknot::report::{self, Source};
use freeknot::Error;

#[derive(Parser)]
#[command(name = "freeknot", version, about = "Parity invariants and crossing bounds for free knots")]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search budget: planarity tests per crossing search, smoothing
    /// assignments for smoothing searches, even-vertex cap for `bracket`.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

/// Diagrams are given as a quoted word such as "A B A B", or as `@path`
/// to read the word from a file.
#[derive(Subcommand)]
enum Command {
    /// Parity and interlacement degree of every chord.
    Parity { word: String },
    /// Applicable move sites.
    Moves {
        word: String,
        /// Only decreasing moves and third moves.
        #[arg(long)]
        reducing: bool,
    },
    /// Applies a move given as a site spec (e.g. `r2-:A,B`).
    Apply { word: String, site: String },
    /// Minimal representative under decreasing second moves.
    Reduce {
        word: Option<String>,
        /// Follow every removal order and require a single terminal.
        #[arg(long)]
        all_orders: bool,
        /// Check confluence on every diagram with at most this many chords.
        #[arg(long, value_name = "N")]
        exhaustive: Option<usize>,
    },
    /// The parity bracket.
    Bracket {
        word: Option<String>,
        #[arg(long, value_name = "FILE")]
        fg: Option<PathBuf>,
    },
    /// Minimality certificate for an irreducibly odd diagram.
    Certify { word: String },
    /// Random moves, checking the bracket after each.
    Fuzz {
        word: String,
        #[arg(long, default_value_t = 100)]
        moves: usize,
    },
    /// Quadratic-residue diagram for a prime p >= 7.
    Qr { p: u64 },
    /// Irreducibly odd diagram from a trivalent graph.
    Realize {
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, value_name = "NAME")]
        named: Option<String>,
    },
    /// Free knot of a signed Gauss code such as "O1+ U2+ O3+ U1+ O2+ U3+".
    ImportVirtual { code: String },
    /// Framed planarity of a framed 4-graph file.
    Planar { fg: PathBuf },
    /// Least genus of a framed 4-graph file.
    Genus { fg: PathBuf },
    /// Exact crossing number of a framed (`fg`) or ordinary (`tg`/`g`)
    /// graph file, or of a named graph.
    Crossing {
        file: Option<PathBuf>,
        #[arg(long, value_name = "NAME")]
        named: Option<String>,
    },
    /// Lower bound on the crossings of any diagram of gamma's free knot.
    Vibound {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        gamma_prime: Option<String>,
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        /// Framed graph of the diagram to bound; defaults to gamma's.
        #[arg(long, value_name = "FILE")]
        delta: Option<PathBuf>,
    },
    /// Certified report over a family.
    Pipeline {
        #[arg(long = "graph", value_name = "FILE")]
        graphs: Vec<PathBuf>,
        /// Comma-separated names: k4, prism, petersen, k33.
        #[arg(long)]
        named: Option<String>,
        /// Comma-separated primes.
        #[arg(long)]
        qr: Option<String>,
        /// Comma-separated even sizes of random cubic graphs.
        #[arg(long)]
        random: Option<String>,
    },
    /// Graphviz text for a diagram, its interlacement graph, or an fg file.
    ExportDot {
        word: Option<String>,
        #[arg(long, value_name = "FILE")]
        fg: Option<PathBuf>,
        #[arg(long)]
        interlacement: bool,
    },
}

enum Failure {
    Error(Error),
    /// Output already written; exit with this code.
    Exit(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Run = Result<String, Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => 3,
        Error::Inconsistency(_) => 4,
        _ => 2,
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn diagram(arg: &str) -> Result<ChordDiagram, Error> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let list = freeknot::diagram::parse_dow_file(&read(&PathBuf::from(path))?)?;
            match list.as_slice() {
                [one] => Ok(one.clone()),
                _ => Err(Error::InvalidInput(format!("{path}: expected one diagram, found {}", list.len()))),
            }
        }
        None => parse_dow(arg),
    }
}

fn framed_from(word: Option<&str>, fg: Option<&PathBuf>) -> Result<FramedFourGraph, Error> {
    match (word, fg) {
        (Some(w), None) => Ok(chord_diagram_to_framed(&diagram(w)?)),
        (None, Some(p)) => FramedFourGraph::parse_fg(&read(p)?),
        _ => Err(Error::InvalidInput("give either a word or --fg".into())),
    }
}

fn list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Error::InvalidInput(format!("bad list item `{x}`"))))
        .collect()
}

fn bound_text(b: &CrossingBound) -> String {
    let mut s = b.to_string();
    match &b.witness {
        Some(Witness::Insertion(w)) => {
            let _ = write!(s, "\nwitness: {w}");
        }
        Some(Witness::Chain { links, path }) => {
            for c in links {
                let _ = write!(s, "\n  {} {}  ({})", c.link, c.bound, c.reason);
            }
            match path {
                PathCheck::Verified { smoothed, r2_steps, realized } => {
                    let _ = write!(
                        s,
                        "\n  path: {smoothed} smoothings, {r2_steps} second moves, {realized} redone as smoothings"
                    );
                }
                PathCheck::Exhausted => s.push_str("\n  path: search budget exhausted"),
            }
        }
        None => {}
    }
    let _ = write!(s, "\nplanarity tests: {}", b.tests);
    s
}

fn bound_record(b: &CrossingBound) -> String {
    format!("kind={} value={} tests={}", format!("{:?}", b.kind).to_lowercase(), b.value, b.tests)
}

fn emit_bound(b: CrossingBound, format: Format) -> Run {
    let out = match format {
        Format::Text => bound_text(&b),
        Format::Records => bound_record(&b),
    } + "\n";
    if b.kind == BoundKind::Exhausted {
        print!("{out}");
        return Err(Failure::Exit(3));
    }
    Ok(out)
}

fn run(cli: Cli) -> Run {
    let format = cli.format;
    let seed = cli.seed;
    let budget = cli.budget;
    let mut out = String::new();
    match cli.command {
        Command::Parity { word } => {
            let d = diagram(&word)?;
            let ig = interlacement(&d);
            let par = parity::parities(&d);
            for c in 0..d.chord_count() as u32 {
                let deg = ig.degree(c);
                match format {
                    Format::Text => writeln!(out, "{} {} (linked with {deg})", d.label(c), par[c as usize]),
                    Format::Records => writeln!(out, "chord label={} parity={} degree={deg}", d.label(c), par[c as usize]),
                }
                .unwrap();
            }
            let status = match parity::irreducibility_failure(&d) {
                None => "irreducibly odd".to_string(),
                Some(r) => r,
            };
            writeln!(out, "{status}").unwrap();
        }
        Command::Moves { word, reducing } => {
            let d = diagram(&word)?;
            let sites = if reducing { moves::removal_and_r3_sites(&d) } else { moves::find_moves(&d) };
            for s in sites {
                writeln!(out, "{}", s.spec(&d)).unwrap();
            }
        }
        Command::Apply { word, site } => {
            let d = diagram(&word)?;
            let site = MoveSite::parse(&site, &d)?;
            writeln!(out, "{}", moves::apply_move(&d, &site)?).unwrap();
        }
        Command::Reduce { word, all_orders, exhaustive } => match (word, exhaustive) {
            (Some(w), None) => {
                let d = diagram(&w)?;
                let r = if all_orders { moves::reduce_r2_checked(&d)? } else { moves::reduce_r2(&d) };
                writeln!(out, "{}", if r.is_empty() { "-".to_string() } else { r.to_string() }).unwrap();
            }
            (None, Some(n)) => {
                let all = all_diagrams_up_to(n);
                for d in &all {
                    moves::reduce_r2_checked(d)?;
                }
                writeln!(out, "confluent on all {} diagrams with at most {n} chords", all.len()).unwrap();
            }
            _ => return Err(Error::InvalidInput("give a word or --exhaustive N".into()).into()),
        },
        Command::Bracket { word, fg } => {
            let g = framed_from(word.as_deref(), fg.as_ref())?;
            let b = bracket::bracket_with_budget(&g, budget.unwrap_or(bracket::DEFAULT_MAX_EVEN))?;
            match format {
                Format::Text => writeln!(out, "{b}\nsummands: {}", b.summands),
                Format::Records => {
                    let classes: Vec<String> = b.classes.iter().map(|c| format!("[{c}]")).collect();
                    writeln!(out, "bracket classes={} summands={} value={}", b.classes.len(), b.summands, classes.join(""))
                }
            }
            .unwrap();
        }
        Command::Certify { word } => {
            let c = bracket::certify_minimal(&diagram(&word)?)?;
            write!(out, "{c}").unwrap();
        }
        Command::Fuzz { word, moves } => {
            let d = diagram(&word)?;
            let r = bracket::fuzz_invariance(&d, &FuzzConfig::new(&d, moves, seed))?;
            writeln!(out, "initial bracket: {}", r.initial).unwrap();
            for (k, n) in &r.kinds {
                writeln!(out, "{k:?}: {n}").unwrap();
            }
            if let Some(m) = &r.mismatch {
                writeln!(out, "MISMATCH at step {} applying {} to {}: {} != {}", m.step, m.site, m.before, m.found, m.expected).unwrap();
                print!("{out}");
                return Err(Failure::Exit(4));
            }
            writeln!(out, "invariant over {} moves; final diagram {}", r.steps, r.final_diagram).unwrap();
        }
        Command::Qr { p } => {
            let d = construct::qr_diagram(p)?;
            writeln!(out, "{d}").unwrap();
        }
        Command::Realize { graph, random, named } => {
            let l = match (graph, random, named) {
                (Some(p), None, None) => TrivalentGraph::parse(&read(&p)?)?,
                (None, Some(n), None) => construct::random_cubic(n, seed)?,
                (None, None, Some(name)) => TrivalentGraph::named(&name)?,
                _ => return Err(Error::InvalidInput("give exactly one of --graph, --random, --named".into()).into()),
            };
            let o = construct::realize(&l, seed)?;
            match format {
                Format::Text => {
                    writeln!(out, "gamma_prime: {}", o.gamma_prime).unwrap();
                    writeln!(out, "gamma: {}", o.gamma).unwrap();
                    writeln!(out, "pairing: {:?}", o.pairing).unwrap();
                    writeln!(out, "euler circuit: {:?}", o.euler_circuit).unwrap();
                    for (h, s) in &o.small_chords {
                        writeln!(out, "small chords on {h}: {}", s.join(" ")).unwrap();
                    }
                    writeln!(
                        out,
                        "v(L) = {}, chords: {} -> {}, attempts: {}",
                        o.stats.v_l, o.stats.chords_gamma_prime, o.stats.chords_gamma, o.stats.attempts
                    )
                    .unwrap();
                }
                Format::Records => {
                    writeln!(
                        out,
                        "realize v_l={} chords_gamma_prime={} chords_gamma={} attempts={} seed={}",
                        o.stats.v_l, o.stats.chords_gamma_prime, o.stats.chords_gamma, o.stats.attempts, o.stats.seed
                    )
                    .unwrap();
                    writeln!(out, "gamma_prime {}", o.gamma_prime).unwrap();
                    writeln!(out, "gamma {}", o.gamma).unwrap();
                }
            }
        }
        Command::ImportVirtual { code } => {
            let d = construct::virtual_to_free(&code)?;
            writeln!(out, "{}", if d.is_empty() { "-".to_string() } else { d.to_string() }).unwrap();
        }
        Command::Planar { fg } => {
            let g = FramedFourGraph::parse_fg(&read(&fg)?)?;
            writeln!(out, "{}", planarity::is_planar_framed(&g)).unwrap();
        }
        Command::Genus { fg } => {
            let g = FramedFourGraph::parse_fg(&read(&fg)?)?;
            writeln!(out, "{}", planarity::genus_min(&g)?).unwrap();
        }
        Command::Crossing { file, named } => {
            let budget = budget.unwrap_or(planarity::DEFAULT_BUDGET);
            let b = match (file, named) {
                (Some(p), None) => {
                    let text = read(&p)?;
                    let header = text
                        .lines()
                        .map(|l| l.split('#').next().unwrap().trim())
                        .find(|l| !l.is_empty())
                        .and_then(|l| l.split_whitespace().next())
                        .unwrap_or("");
                    if header == "fg" {
                        planarity::cr_framed_exact(&FramedFourGraph::parse_fg(&text)?, budget)
                    } else {
                        planarity::cr_graph_exact(&Graph::parse(&text)?, budget)
                    }
                }
                (None, Some(name)) => planarity::cr_graph_exact(&Graph::named(&name)?, budget),
                _ => return Err(Error::InvalidInput("give a file or --named".into()).into()),
            };
            return emit_bound(b, format);
        }
        Command::Vibound { gamma, gamma_prime, graph, delta } => {
            let g = diagram(&gamma)?;
            let gp = gamma_prime.as_deref().map(diagram).transpose()?;
            let l = graph.map(|p| read(&p).and_then(|t| Graph::parse(&t))).transpose()?;
            let delta = match delta {
                Some(p) => FramedFourGraph::parse_fg(&read(&p)?)?,
                None => chord_diagram_to_framed(&g),
            };
            if component_count(&delta) != 1 {
                return Err(Error::ComponentCount(component_count(&delta)).into());
            }
            let b = planarity::vi_lower_bound(&delta, &g, gp.as_ref(), l.as_ref(), budget.unwrap_or(planarity::DEFAULT_BUDGET))?;
            return emit_bound(b, format);
        }
        Command::Pipeline { graphs, named, qr, random } => {
            let source = match (graphs.is_empty(), named, qr, random) {
                (_, None, None, None) => {
                    let mut gs = Vec::new();
                    for p in &graphs {
                        gs.push((p.display().to_string(), TrivalentGraph::parse(&read(p)?)?));
                    }
                    Source::Graphs(gs)
                }
                (true, Some(n), None, None) => Source::Graphs(report::named_graphs(&n)?),
                (true, None, Some(q), None) => Source::Qr(list(&q)?),
                (true, None, None, Some(r)) => Source::Random(list(&r)?),
                (false, Some(n), None, None) => {
                    let mut gs = Vec::new();
                    for p in &graphs {
                        gs.push((p.display().to_string(), TrivalentGraph::parse(&read(p)?)?));
                    }
                    gs.extend(report::named_graphs(&n)?);
                    Source::Graphs(gs)
                }
                _ => return Err(Error::InvalidInput("combine --graph and --named only; --qr and --random stand alone".into()).into()),
            };
            let r = report::run_pipeline(&source, seed, budget.unwrap_or(report::PIPELINE_BUDGET));
            out = match format {
                Format::Text => r.to_text(),
                Format::Records => r.to_records(),
            };
        }
        Command::ExportDot { word, fg, interlacement: ig } => {
            out = match (word, fg, ig) {
                (Some(w), None, false) => export_dot(&diagram(&w)?),
                (Some(w), None, true) => export_dot(&interlacement(&diagram(&w)?)),
                (None, Some(p), false) => export_dot(&FramedFourGraph::parse_fg(&read(&p)?)?),
                _ => return Err(Error::InvalidInput("give a word (optionally --interlacement) or --fg".into()).into()),
            };
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Exit(code)) => ExitCode::from(code),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
