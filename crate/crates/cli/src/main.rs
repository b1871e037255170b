//! `kdmv`: exact k-distance mutual-visibility invariants from the command line.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kdmv::chromatic::{chi_mu_k_exact, clique_cover_theta, verify_kdmv_coloring};
use kdmv::constructions as cons;
use kdmv::domination::{
    efficient_open_dominating_set, gamma_exact, gamma_k_exact, gamma_t_exact, neighborhood_i2dmv_partition, rho2_exact,
    total_dom_partition,
};
use kdmv::graph::{generate, to_graph6, FamilySpec};
use kdmv::harness::{counterexample_search, load_corpus, parse_checks, run_suite, CheckId, CheckSpec, Report};
use kdmv::visibility::max_kdmv;
use kdmv::{Coloring, Graph, KdmvError, SolveResult, Status, DEFAULT_BUDGET};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INEXACT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kdmv",
    version,
    about = "Exact k-distance mutual-visibility colourings and related invariants"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Search-node budget per exact solve.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Exit with status 3 if any solve ran out of budget.
    #[arg(long, global = true)]
    exact_required: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Verb {
    /// chi_mu_k: fewest kDMV classes.
    Chi(GraphK),
    /// mu_k: largest kDMV set.
    Mu(GraphK),
    /// Domination number.
    Gamma(GraphArg),
    /// Total domination number.
    Gammat(GraphArg),
    /// Distance-k domination number.
    Gammak(GraphK),
    /// 2-packing number.
    Rho2(GraphArg),
    /// Clique cover number.
    Theta(GraphArg),
    /// Efficient open dominating set, if any.
    Eod(GraphArg),
    /// Build and verify a colouring from one of the explicit schemes.
    Construct(Construct),
    /// Run the inequality checks over a corpus.
    Suite(Suite),
    /// Search small instances for counterexamples to an open problem.
    Probe(Probe),
    /// Print graph6 strings for a graph spec or corpus.
    Gen {
        /// Graph spec or corpus (geng:n<=N, trees:..., file:<path>, ...).
        source: String,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Graph spec, e.g. cycle:7, cartesian(path:4,cycle:4), g6:Bw, file:<path>.
    graph: String,
}

#[derive(Args)]
struct GraphK {
    graph: String,
    #[arg(long, default_value_t = 2)]
    k: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scheme {
    Path,
    Cycle,
    StrongPathComplete,
    Torus,
    Hypercube,
    TreeHalf,
    Block,
    CoronaC4,
    TotalDom,
    I2dmv,
    Lex2dmv,
    LexI2dmv,
    StrongProduct,
}

#[derive(Args)]
struct Construct {
    #[arg(long, value_enum)]
    scheme: Scheme,
    /// Input graph for the graph-based schemes.
    graph: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Second factor for the product schemes.
    #[arg(long)]
    h: Option<String>,
}

#[derive(Args)]
struct Suite {
    #[arg(long)]
    corpus: String,
    /// Comma-separated check ids, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Largest k for the k-dependent checks.
    #[arg(long, default_value_t = 4)]
    k: u32,
}

#[derive(Args)]
struct Probe {
    /// OpenQnEquality, OpenCartesianGamma or OpenBlockTheta.
    problem: String,
    /// Size limit: cube dimension, product order or block-graph order.
    #[arg(long, default_value_t = 9)]
    limit: usize,
}

/// Error plus the exit status it maps to.
struct Failure(u8, String);

impl From<KdmvError> for Failure {
    fn from(e: KdmvError) -> Self {
        let code = match e {
            KdmvError::Spec(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("kdmv: {msg}");
            ExitCode::from(code)
        }
    }
}

fn load_graph(spec: &str) -> Result<(Graph, FamilySpec), Failure> {
    if spec.starts_with("file:") {
        let mut items = load_corpus(spec)?;
        if items.len() != 1 {
            return Err(Failure(
                EXIT_USAGE,
                format!("{spec}: expected one graph, found {}", items.len()),
            ));
        }
        let item = items.remove(0);
        return Ok((item.graph, item.spec));
    }
    let family: FamilySpec = spec.parse()?;
    Ok((generate(&family)?, family))
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(EXIT_FAILED, format!("{path}: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn solved<W>(common: &Common, r: &SolveResult<W>, witness: Value) -> Result<u8, Failure> {
    let mut out = json!({ "value": r.value, "status": "Exact", "witness": witness, "nodes": r.nodes });
    if let Status::BoundsOnly { lower, upper } = r.status {
        out["status"] = json!("BoundsOnly");
        out["lower"] = json!(lower);
        out["upper"] = json!(upper);
    }
    emit(common, &out.to_string())?;
    Ok(if common.exact_required && !r.is_exact() {
        EXIT_INEXACT
    } else {
        0
    })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let c = &cli.common;
    let report_verb = matches!(cli.verb, Verb::Suite(_) | Verb::Probe(_));
    if c.format == Format::Csv && !report_verb {
        return Err(Failure(
            EXIT_USAGE,
            "--format csv applies to suite and probe reports".into(),
        ));
    }
    match &cli.verb {
        Verb::Chi(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = chi_mu_k_exact(&g, a.k, c.budget)?;
            solved(c, &r, json!(r.witness))
        }
        Verb::Mu(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = max_kdmv(&g, a.k, c.budget);
            solved(c, &r, json!(r.witness))
        }
        Verb::Gamma(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = gamma_exact(&g, c.budget);
            solved(c, &r, json!(r.witness))
        }
        Verb::Gammat(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = gamma_t_exact(&g, c.budget)?;
            solved(c, &r, json!(r.witness))
        }
        Verb::Gammak(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = gamma_k_exact(&g, a.k, c.budget)?;
            solved(c, &r, json!(r.witness))
        }
        Verb::Rho2(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = rho2_exact(&g, c.budget);
            solved(c, &r, json!(r.witness))
        }
        Verb::Theta(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let r = clique_cover_theta(&g, c.budget)?;
            solved(c, &r, json!(r.witness))
        }
        Verb::Eod(a) => {
            let (g, _) = load_graph(&a.graph)?;
            let set = efficient_open_dominating_set(&g);
            emit(c, &json!({ "exists": set.is_some(), "set": set }).to_string())?;
            Ok(0)
        }
        Verb::Construct(a) => construct(c, a),
        Verb::Suite(a) => {
            let corpus = load_corpus(&a.corpus)?;
            let checks: Vec<CheckSpec> = parse_checks(&a.checks)?
                .into_iter()
                .map(|id| CheckSpec::new(id).with_budget(c.budget).with_k_max(a.k))
                .collect();
            report(c, &run_suite(&a.corpus, &corpus, &checks))
        }
        Verb::Probe(a) => {
            let id: CheckId = a.problem.parse()?;
            if !id.is_open() {
                return Err(Failure(EXIT_USAGE, format!("{id} is not an open problem")));
            }
            report(c, &counterexample_search(id, a.limit, c.budget)?)
        }
        Verb::Gen { source } => {
            let lines: Vec<String> = match load_graph(source) {
                Ok((g, _)) => vec![to_graph6(&g)],
                Err(_) => load_corpus(source)?.iter().map(|i| to_graph6(&i.graph)).collect(),
            };
            emit(c, &lines.join("\n"))?;
            Ok(0)
        }
    }
}

fn report(c: &Common, r: &Report) -> Result<u8, Failure> {
    let text = match c.format {
        Format::Json => r.to_json(),
        Format::Csv => r.to_csv()?,
    };
    emit(c, text.trim_end())?;
    Ok(if !r.passed() {
        EXIT_FAILED
    } else if c.exact_required && r.summary.skipped_budget > 0 {
        EXIT_INEXACT
    } else {
        0
    })
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure(EXIT_USAGE, format!("this scheme needs --{flag}")))
}

fn exact_witness<W>(r: SolveResult<W>, what: &str) -> Result<W, Failure> {
    if r.is_exact() {
        Ok(r.witness)
    } else {
        Err(Failure(
            EXIT_INEXACT,
            format!("{what} not solved exactly within budget"),
        ))
    }
}

fn construct(c: &Common, a: &Construct) -> Result<u8, Failure> {
    let graph = || -> Result<(Graph, FamilySpec), Failure> {
        let spec = a
            .graph
            .as_deref()
            .ok_or_else(|| Failure(EXIT_USAGE, "this scheme needs a graph".into()))?;
        load_graph(spec)
    };
    let factor = || -> Result<Graph, Failure> {
        let spec =
            a.h.as_deref()
                .ok_or_else(|| Failure(EXIT_USAGE, "this scheme needs --h".into()))?;
        Ok(load_graph(spec)?.0)
    };
    let built = |spec: FamilySpec| -> Result<Graph, Failure> { Ok(generate(&spec)?) };
    // (graph the colouring lives on, colouring, k it is claimed for)
    let (g, col, k): (Graph, Coloring, u32) = match a.scheme {
        Scheme::Path => {
            let n = need(a.n, "n")?;
            (built(FamilySpec::Path(n))?, cons::color_path(n, a.k)?, a.k)
        }
        Scheme::Cycle => {
            let n = need(a.n, "n")?;
            (built(FamilySpec::Cycle(n))?, cons::color_cycle(n, a.k)?, a.k)
        }
        Scheme::StrongPathComplete => {
            let (n, m) = (need(a.n, "n")?, need(a.m, "m")?);
            let g = built(FamilySpec::strong(FamilySpec::Path(n), FamilySpec::Complete(m)))?;
            (g, cons::color_strong_path_complete(n, m, a.k)?, a.k)
        }
        Scheme::Torus => {
            let (m, n) = (need(a.m, "m")?, need(a.n, "n")?);
            let g = built(FamilySpec::cartesian(FamilySpec::Cycle(m), FamilySpec::Cycle(n)))?;
            (g, cons::torus_eod_coloring(m, n)?, 2)
        }
        Scheme::Hypercube => {
            let d = need(a.n, "n")?;
            let g = built(FamilySpec::Hypercube(d))?;
            let dom = exact_witness(gamma_exact(&g, c.budget), "gamma")?;
            let col = cons::hypercube_neighborhood_coloring(d, &dom.to_vec())?;
            (g, col, 2)
        }
        Scheme::TreeHalf => {
            let (g, _) = graph()?;
            let col = cons::tree_half_coloring(&g)?;
            (g, col, 2)
        }
        Scheme::Block => {
            let (g, _) = graph()?;
            let col = cons::block_graph_coloring(&g)?;
            let d = kdmv::graph::metrics(&g)?.diameter;
            (g, col, d - 1)
        }
        Scheme::CoronaC4 => {
            let (base, _) = graph()?;
            let g = kdmv::graph::product(
                kdmv::graph::ProductKind::Cartesian,
                &corona_of(&base)?,
                &built(FamilySpec::Cycle(4))?,
            )?;
            (g, cons::cartesian_corona_c4_coloring(&base)?, 2)
        }
        Scheme::TotalDom => {
            let (g, _) = graph()?;
            let d = exact_witness(gamma_t_exact(&g, c.budget)?, "gamma_t")?;
            let col = total_dom_partition(&g, &d.to_vec())?;
            (g, col, 2)
        }
        Scheme::I2dmv => {
            let (g, _) = graph()?;
            let d = exact_witness(gamma_t_exact(&g, c.budget)?, "gamma_t")?;
            let col = neighborhood_i2dmv_partition(&g, &d.to_vec())?;
            (g, col, 2)
        }
        Scheme::Lex2dmv | Scheme::LexI2dmv => {
            let (g, _) = graph()?;
            let h = factor()?;
            let col = if a.scheme == Scheme::Lex2dmv {
                let cg = exact_witness(chi_mu_k_exact(&g, 2, c.budget)?, "chi_mu2")?;
                cons::lex_coloring_from_2dmv(&g, &cg, &h)?
            } else {
                let sq = kdmv::graph::exact_distance_graph(&g, 2);
                let cover = exact_witness(clique_cover_theta(&sq, c.budget)?, "theta")?;
                cons::lex_coloring_from_i2dmv(&g, &cover, &h)?
            };
            (kdmv::graph::product(kdmv::graph::ProductKind::Lex, &g, &h)?, col, 2)
        }
        Scheme::StrongProduct => {
            let (g, _) = graph()?;
            let h = factor()?;
            let cg = exact_witness(chi_mu_k_exact(&g, a.k, c.budget)?, "chi_mu_k(G)")?;
            let ch = exact_witness(chi_mu_k_exact(&h, a.k, c.budget)?, "chi_mu_k(H)")?;
            let col = cons::product_coloring_strong(&g, &cg, &h, &ch, a.k)?;
            (
                kdmv::graph::product(kdmv::graph::ProductKind::Strong, &g, &h)?,
                col,
                a.k,
            )
        }
    };
    let verified = verify_kdmv_coloring(&g, k, &col).is_ok();
    let out = json!({
        "n": g.n(),
        "k": k,
        "classes": col.num_classes(),
        "coloring": col,
        "verified": verified,
    });
    emit(c, &out.to_string())?;
    Ok(if verified { 0 } else { EXIT_FAILED })
}

fn corona_of(g: &Graph) -> Result<Graph, Failure> {
    Ok(generate(&FamilySpec::corona(FamilySpec::Graph6(to_graph6(g))))?)
}
