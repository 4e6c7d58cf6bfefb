use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use planar_turan::blocks::{charge_report, find_sparse_set, membership, Decomposition};
use planar_turan::catalog;
use planar_turan::constructor::{glued_k4_chain, substitute, validate_host, ConstructionResult};
use planar_turan::cycle_search::find_cycle_of_length;
use planar_turan::lemma_lab::Lemma;
use planar_turan::oracle::{ex_planar_with, Cache, CorpusOptions, SearchOptions};
use planar_turan::plane_graph::{parse_rot_single, to_rot};
use planar_turan::{PlaneGraph, Rational};

#[derive(Parser, Debug)]
#[command(name = "planar-turan", version, about = "Triangular-block accounting and exhaustive checks for 7-cycle-free plane graphs")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// A `.rot` file holding one plane graph.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// A built-in graph: c<k>, k4, octahedron, glued-k4-<k>, b4a ... b7b.
    #[arg(short, long)]
    graph: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the triangular-blocks and their classes.
    Decompose(Input),
    /// Per-block charges and the partition ledger; exit 1 if some group is positive.
    Charge(Input),
    /// Search for a cycle of one length.
    CheckCycle {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        length: usize,
    },
    /// Smallest vertex set with at most alpha|S| incident edges.
    Sparse {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "18/7")]
        alpha: String,
        #[arg(long = "max", default_value_t = 4)]
        max_order: usize,
    },
    /// Membership in the restricted class; exit 1 if not a member.
    Membership(Input),
    /// Build and certify a construction.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 18)]
        copies: usize,
        #[arg(long, default_value = "c8")]
        host: String,
        #[arg(long, default_value = "octahedron")]
        block: String,
        /// Also write the graph to this `.rot` file.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exact planar Turan number of a cycle by enumeration.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        ell: usize,
        /// Continue from cached levels.
        #[arg(long)]
        resume: bool,
        /// Cache directory; defaults to $PLANAR_TURAN_CACHE.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run an exhaustive check; exit 1 on any violation.
    Verify {
        #[arg(long)]
        lemma: String,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Use one embedding per graph instead of all of them.
        #[arg(long)]
        one_embedding: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    GluedK4,
    Substitution,
}

/// Input problems; reported on stderr with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Run = Result<bool, UsageError>;

fn load(input: &Input) -> Result<PlaneGraph, UsageError> {
    match (&input.input, &input.graph) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(parse_rot_single(&text)?)
        }
        (None, Some(name)) => catalog::named(name).ok_or_else(|| UsageError(format!("unknown graph `{name}`"))),
        (None, None) => Err(UsageError("no input graph".into())),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        print!("{}", text());
    }
}

fn set_jobs(jobs: Option<usize>) -> Result<(), UsageError> {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    Ok(())
}

#[derive(Serialize)]
struct BlockEntry {
    id: usize,
    class: String,
    order: usize,
    has_chord: bool,
    trivial: bool,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    junctions: Vec<usize>,
    holes: usize,
}

#[derive(Serialize)]
struct DecomposeReport {
    n: usize,
    e: usize,
    blocks: Vec<BlockEntry>,
}

fn decompose(json: bool, input: &Input) -> Run {
    let g = load(input)?;
    let d = Decomposition::new(&g)?;
    let blocks = (0..d.blocks().len())
        .map(|b| {
            let blk = d.block(b);
            let class = d.classify(b);
            BlockEntry {
                id: b,
                class: class.label.to_string(),
                order: blk.order(),
                has_chord: class.has_chord,
                trivial: blk.trivial,
                vertices: blk.vertices.clone(),
                edges: blk.edges.iter().map(|&e| g.edge_endpoints(e)).collect(),
                junctions: d.junctions(b),
                holes: d.holes(b).len(),
            }
        })
        .collect();
    let report = DecomposeReport {
        n: g.vertex_count(),
        e: g.edge_count(),
        blocks,
    };
    emit(json, &report, || {
        let mut s = format!("n={} e={} blocks={}\n", report.n, report.e, report.blocks.len());
        for b in &report.blocks {
            s += &format!(
                "block {}: {} order={} vertices={:?} junctions={:?} holes={}\n",
                b.id, b.class, b.order, b.vertices, b.junctions, b.holes
            );
        }
        s
    });
    Ok(true)
}

fn charge(json: bool, input: &Input) -> Run {
    let g = load(input)?;
    let ledger = charge_report(&g)?;
    emit(json, &ledger, || {
        let mut s = format!("n={} e={} f={}\n", ledger.n, ledger.e, ledger.f);
        for r in &ledger.blocks {
            s += &format!(
                "block {}: {} e={} n={} f={} g={}{}\n",
                r.id,
                r.class,
                r.e,
                r.n,
                r.f,
                r.g,
                if r.exceptional { " exceptional" } else { "" }
            );
        }
        for (grp, sum) in ledger.groups.iter().zip(&ledger.group_sums) {
            s += &format!("group {grp:?}: {sum}\n");
        }
        s + &format!("total g={} verdict={}\n", ledger.total_g, ledger.verdict)
    });
    Ok(ledger.verdict)
}

#[derive(Serialize)]
struct CycleReport {
    length: usize,
    found: bool,
    witness: Option<Vec<usize>>,
}

fn check_cycle(json: bool, input: &Input, length: usize) -> Run {
    let g = load(input)?;
    if length < 3 {
        return Err(UsageError("cycle length must be at least 3".into()));
    }
    let witness = find_cycle_of_length(&g, length);
    let report = CycleReport {
        length,
        found: witness.is_some(),
        witness,
    };
    emit(json, &report, || match &report.witness {
        Some(c) => format!("true {c:?}\n"),
        None => "false\n".into(),
    });
    Ok(true)
}

#[derive(Serialize)]
struct SparseReport {
    alpha: Rational,
    max_order: usize,
    set: Option<Vec<usize>>,
}

fn sparse(json: bool, input: &Input, alpha: &str, max_order: usize) -> Run {
    let g = load(input)?;
    let alpha: Rational = alpha.parse()?;
    let set = find_sparse_set(&g, &alpha, max_order)?;
    let report = SparseReport { alpha, max_order, set };
    emit(json, &report, || match &report.set {
        Some(s) => format!("{s:?}\n"),
        None => "none\n".into(),
    });
    Ok(true)
}

fn member(json: bool, input: &Input) -> Run {
    let g = load(input)?;
    let m = membership(&g);
    emit(json, &m, || {
        let mut s = format!("member={}\n", m.member);
        if !m.two_connected {
            s += "not 2-connected\n";
        }
        if let Some(c) = &m.seven_cycle {
            s += &format!("7-cycle {c:?}\n");
        }
        if let Some(set) = &m.sparse_set {
            s += &format!("sparse set {set:?}\n");
        }
        s
    });
    Ok(m.member)
}

fn construct(json: bool, family: Family, copies: usize, host: &str, block: &str, out: Option<&PathBuf>) -> Run {
    let r: ConstructionResult = match family {
        Family::GluedK4 => glued_k4_chain(copies)?,
        Family::Substitution => {
            let h = catalog::named(host).ok_or_else(|| UsageError(format!("unknown graph `{host}`")))?;
            let b = catalog::named(block).ok_or_else(|| UsageError(format!("unknown graph `{block}`")))?;
            substitute(&validate_host(&h)?, &b)?
        }
    };
    if let Some(path) = out {
        std::fs::write(path, to_rot(&r.graph))?;
    }
    let c = &r.certified;
    emit(json, &r, || {
        format!(
            "family={} n={} e={} planar={} c7_free={} bound={} excess={}\n",
            r.family, c.vertex_count, c.edge_count, c.planar, c.c7_free, c.bound_value, c.excess
        )
    });
    Ok(c.planar && c.c7_free)
}

fn oracle(json: bool, n: usize, ell: usize, resume: bool, cache: Option<PathBuf>, jobs: Option<usize>) -> Run {
    set_jobs(jobs)?;
    let opts = SearchOptions {
        cache: cache.map(Cache::new).or_else(Cache::from_env),
        resume,
    };
    let r = ex_planar_with(n, ell, &opts)?;
    emit(json, &r, || {
        format!(
            "ex(n={}, C{}) = {} ({} graphs, {} extremal)\n",
            r.n,
            r.ell,
            r.max_edges,
            r.graphs_examined,
            r.witnesses.len()
        )
    });
    Ok(true)
}

fn verify(json: bool, lemma: &str, max_n: usize, one_embedding: bool, jobs: Option<usize>) -> Run {
    set_jobs(jobs)?;
    let lemma: Lemma = lemma.parse().map_err(UsageError)?;
    let opts = CorpusOptions {
        all_embeddings: !one_embedding,
    };
    let r = lemma.run(max_n, opts)?;
    emit(json, &r, || {
        let mut s = format!("{}: {} instances, {} violations\n", r.lemma, r.instances, r.violations.len());
        for (k, v) in &r.census {
            s += &format!("  {k}: {v}\n");
        }
        for v in &r.violations {
            s += &format!("violation: {}\n{}\n", v.detail, v.rot);
        }
        s
    });
    Ok(r.passed())
}

fn run(cli: Cli) -> Run {
    let json = cli.json;
    match cli.command {
        Command::Decompose(input) => decompose(json, &input),
        Command::Charge(input) => charge(json, &input),
        Command::CheckCycle { input, length } => check_cycle(json, &input, length),
        Command::Sparse {
            input,
            alpha,
            max_order,
        } => sparse(json, &input, &alpha, max_order),
        Command::Membership(input) => member(json, &input),
        Command::Construct {
            family,
            copies,
            host,
            block,
            out,
        } => construct(json, family, copies, &host, &block, out.as_ref()),
        Command::Oracle {
            n,
            ell,
            resume,
            cache,
            jobs,
        } => oracle(json, n, ell, resume, cache, jobs),
        Command::Verify {
            lemma,
            max_n,
            one_embedding,
            jobs,
        } => verify(json, &lemma, max_n, one_embedding, jobs),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
