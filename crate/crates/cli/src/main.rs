//! `trd`: verify, solve, bound, generate and reduce from the command line.
//!
//! Exit codes: 0 success, 1 labeling invalid, 2 I/O or format error,
//! 3 size guard exceeded.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use report::{InputDigest, RunReport};
use triple_roman::bounds::{best_bounds_with, BoundOptions, DEFAULT_TRIALS};
use triple_roman::exact::{
    gamma_3r_bnb_with, gamma_kr_bruteforce, inequality_chain_report, BnbOptions,
    ComponentResult, Method as SolveMethod, SolveResult,
};
use triple_roman::families::{self, FamilySpec};
use triple_roman::graph::{generators, Graph};
use triple_roman::labeling::{verify_krdf, Verdict};
use triple_roman::reduction::{build_gadget, Variant, X3CInstance};
use triple_roman::rng::DEFAULT_SEED;
use triple_roman::tree_dp::gamma_3r_tree;
use triple_roman::{Error, Labeling};

/// Largest component for which `bound` also computes the exact value.
const BOUND_EXACT_LIMIT: usize = 20;

#[derive(Parser)]
#[command(name = "trd", version, about = "Triple Roman domination toolkit")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for the branch-and-bound search and random trials.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a labeling against a graph.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: u8,
    },
    /// Compute the exact optimum with a witness.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Domination order; only the brute-force method accepts k != 3.
        #[arg(long, default_value_t = 3)]
        k: u8,
    },
    /// Evaluate every bound.
    Bound {
        graph: PathBuf,
        /// Show inapplicable entries too.
        #[arg(long)]
        list: bool,
        /// Skip the exact value used to flag tight entries.
        #[arg(long)]
        no_exact: bool,
    },
    /// Generate a graph and write it as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Build the gadget graph of an exact 3-cover instance.
    Reduce {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = VariantArg::Bipartite)]
        variant: VariantArg,
        /// Edge list destination; the role map goes next to it as
        /// `<out>.map.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Domination, Roman, double Roman and triple Roman numbers side by side.
    Chain { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Bruteforce,
    Bnb,
    Treedp,
    Closedform,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Bipartite,
    Chordal,
}

#[derive(Subcommand)]
enum GenKind {
    Path { p: usize },
    Cycle { p: usize },
    Star { p: usize },
    DoubleStar { r: usize, s: usize },
    Complete { p: usize },
    CompleteBipartite { m: usize, n: usize },
    /// Spider with the given leg lengths.
    Spider { legs: Vec<usize> },
    Gnp { p: usize, prob: f64 },
    RandomTree { p: usize },
    /// F member; without `--attach` the block tree is drawn from the seed.
    FamilyF {
        k: usize,
        /// Block pairs such as `0-1,1-2`.
        #[arg(long)]
        attach: Option<String>,
    },
    /// H member; without `--hubs` the hub graph is drawn from the seed.
    FamilyH {
        l: usize,
        #[arg(long)]
        hubs: Option<String>,
    },
}

struct Outcome {
    command: &'static str,
    inputs: Vec<InputDigest>,
    result: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(command: &'static str, inputs: Vec<InputDigest>, result: Value, text: String) -> Self {
        Outcome {
            command,
            inputs,
            result,
            text,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let started = Instant::now();
    match run(&cli) {
        Ok(out) => {
            let elapsed = started.elapsed().as_secs_f64() * 1e3;
            if cli.json {
                let report = RunReport::new(out.command, args, out.inputs, cli.seed, out.result, elapsed);
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::SizeGuard { .. }) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify { graph, labeling, k } => verify(graph, labeling, *k),
        Command::Solve { graph, method, k } => solve(cli, graph, *method, *k),
        Command::Bound {
            graph,
            list,
            no_exact,
        } => bound(cli, graph, *list, !*no_exact),
        Command::Gen { kind, out } => gen(cli, kind, out.as_deref()),
        Command::Reduce {
            instance,
            variant,
            out,
        } => reduce(instance, *variant, out.as_deref()),
        Command::Chain { graph } => chain(graph),
    }
}

fn read(path: &Path) -> Result<(String, InputDigest)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let digest = InputDigest::of(&path.display().to_string(), &bytes);
    let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    Ok((text, digest))
}

fn read_graph(path: &Path) -> Result<(Graph, InputDigest)> {
    let (text, digest) = read(path)?;
    let g = Graph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((g, digest))
}

fn verify(graph: &Path, labeling: &Path, k: u8) -> Result<Outcome> {
    let (g, gd) = read_graph(graph)?;
    let (text, ld) = read(labeling)?;
    let l = Labeling::parse(&text, k).with_context(|| format!("parsing {}", labeling.display()))?;
    let verdict = verify_krdf(&g, &l, k)?;
    let mut out = String::new();
    match &verdict {
        Verdict::Valid => out.push_str(&format!("valid [{k}]-RDF, weight {}\n", l.weight())),
        Verdict::Invalid(vs) => {
            out.push_str(&format!("invalid: {} violation(s)\n", vs.len()));
            for v in vs {
                out.push_str(&format!(
                    "  vertex {}: needs {}, has {}\n",
                    v.vertex, v.required, v.achieved
                ));
            }
        }
    }
    let result = json!({
        "k": k,
        "weight": l.weight(),
        "valid": verdict.is_valid(),
        "violations": verdict.violations(),
    });
    Ok(Outcome {
        code: if verdict.is_valid() { 0 } else { 1 },
        ..Outcome::ok("verify", vec![gd, ld], result, out)
    })
}

fn closed_form(g: &Graph) -> Result<SolveResult> {
    let Some((spec, cert)) = families::recognize(g) else {
        bail!("closed form needs a path, cycle, star or double star");
    };
    let verdict = verify_krdf(g, &cert.labeling, 3)?;
    if !verdict.is_valid() {
        bail!("closed-form labeling for {spec:?} failed verification");
    }
    Ok(SolveResult {
        weight: cert.value,
        witness: cert.labeling,
        method: SolveMethod::Closedform,
        nodes_explored: 0,
        per_component: vec![ComponentResult {
            vertices: (0..g.order()).collect(),
            weight: cert.value,
            nodes_explored: 0,
        }],
    })
}

fn solve_with(g: &Graph, method: Method, k: u8, threads: usize) -> Result<SolveResult> {
    if k != 3 && !matches!(method, Method::Bruteforce) {
        bail!("only the bruteforce method accepts k = {k}");
    }
    let bnb = || gamma_3r_bnb_with(g, &BnbOptions { threads });
    Ok(match method {
        Method::Bruteforce => gamma_kr_bruteforce(g, k, false)?,
        Method::Bnb => bnb()?,
        Method::Treedp => gamma_3r_tree(g)?,
        Method::Closedform => closed_form(g)?,
        Method::Auto => {
            if families::recognize(g).is_some() {
                closed_form(g)?
            } else if g.is_tree() {
                gamma_3r_tree(g)?
            } else {
                bnb()?
            }
        }
    })
}

fn solve(cli: &Cli, graph: &Path, method: Method, k: u8) -> Result<Outcome> {
    let (g, gd) = read_graph(graph)?;
    let r = solve_with(&g, method, k, cli.threads)?;
    let text = format!(
        "gamma[{k}R] = {} via {}\nwitness: {}\n",
        r.weight,
        r.method,
        r.witness.to_line()
    );
    Ok(Outcome::ok("solve", vec![gd], serde_json::to_value(&r)?, text))
}

fn bound(cli: &Cli, graph: &Path, list: bool, with_exact: bool) -> Result<Outcome> {
    let (g, gd) = read_graph(graph)?;
    let opts = BoundOptions {
        seed: cli.seed,
        trials: DEFAULT_TRIALS,
        gamma: None,
    };
    let pool = rayon_pool(cli.threads)?;
    let mut report = pool.install(|| best_bounds_with(&g, &opts));
    let small = g.components().iter().all(|c| c.len() <= BOUND_EXACT_LIMIT);
    if with_exact && (small || g.is_tree() || families::recognize(&g).is_some()) {
        report = report.with_exact(solve_with(&g, Method::Auto, 3, cli.threads)?.weight);
    }
    let mut text = String::new();
    for e in report.entries.iter().filter(|e| list || e.applicable) {
        let value = e.value.map_or("-".to_string(), |v| v.to_string());
        let tight = if e.tight == Some(true) { " (tight)" } else { "" };
        let cert = if e.certificate.is_some() { " [certificate]" } else { "" };
        text.push_str(&format!(
            "{:<20} {:<6} {:>6}{tight}{cert}  {}\n",
            e.name,
            format!("{:?}", e.kind).to_lowercase(),
            value,
            e.reason
        ));
    }
    let show = |x: Option<u32>| x.map_or("-".to_string(), |v| v.to_string());
    text.push_str(&format!(
        "best lower {}, best upper {}, exact {}\n",
        show(report.best_lower),
        show(report.best_upper),
        show(report.exact)
    ));
    Ok(Outcome::ok("bound", vec![gd], serde_json::to_value(&report)?, text))
}

fn rayon_pool(threads: usize) -> Result<rayon::ThreadPool> {
    if threads == 0 {
        bail!("thread count must be positive");
    }
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads).build()?)
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair
                .trim()
                .split_once('-')
                .with_context(|| format!("expected `a-b`, got {pair:?}"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

fn gen(cli: &Cli, kind: &GenKind, out: Option<&Path>) -> Result<Outcome> {
    let seed = cli.seed;
    let (g, spec): (Graph, Value) = match kind {
        GenKind::Path { p } => (generators::path(*p)?, json!({"kind": "path", "p": p})),
        GenKind::Cycle { p } => (generators::cycle(*p)?, json!({"kind": "cycle", "p": p})),
        GenKind::Star { p } => (generators::star(*p)?, json!({"kind": "star", "p": p})),
        GenKind::DoubleStar { r, s } => (
            generators::double_star(*r, *s)?,
            json!({"kind": "double_star", "r": r, "s": s}),
        ),
        GenKind::Complete { p } => (generators::complete(*p)?, json!({"kind": "complete", "p": p})),
        GenKind::CompleteBipartite { m, n } => (
            generators::complete_bipartite(*m, *n)?,
            json!({"kind": "complete_bipartite", "m": m, "n": n}),
        ),
        GenKind::Spider { legs } => (generators::spider(legs)?, json!({"kind": "spider", "legs": legs})),
        GenKind::Gnp { p, prob } => (
            generators::gnp(*p, *prob, seed)?,
            json!({"kind": "gnp", "p": p, "prob": prob, "seed": seed}),
        ),
        GenKind::RandomTree { p } => (
            generators::random_tree(*p, seed)?,
            json!({"kind": "random_tree", "p": p, "seed": seed}),
        ),
        GenKind::FamilyF { k, attach } => {
            let attachment = match attach {
                Some(text) => parse_pairs(text)?,
                None => families::gen_family_f_seeded(*k, seed)?.1,
            };
            let spec = FamilySpec::FamilyF {
                k: *k,
                attachment,
            };
            (spec.generate()?, serde_json::to_value(&spec)?)
        }
        GenKind::FamilyH { l, hubs } => {
            let hub_edges = match hubs {
                Some(text) => parse_pairs(text)?,
                None => families::gen_family_h_seeded(*l, seed)?.1,
            };
            let spec = FamilySpec::FamilyH { l: *l, hub_edges };
            (spec.generate()?, serde_json::to_value(&spec)?)
        }
    };
    let edge_list = g.to_edge_list();
    let text = match out {
        Some(path) => {
            std::fs::write(path, &edge_list).with_context(|| format!("writing {}", path.display()))?;
            format!("wrote {} ({} vertices, {} edges)\n", path.display(), g.order(), g.size())
        }
        None => edge_list.clone(),
    };
    let result = json!({
        "spec": spec,
        "order": g.order(),
        "size": g.size(),
        "edge_list": edge_list,
    });
    Ok(Outcome::ok("gen", vec![], result, text))
}

fn reduce(instance: &Path, variant: VariantArg, out: Option<&Path>) -> Result<Outcome> {
    let (text, digest) = read(instance)?;
    let inst = X3CInstance::parse(&text).with_context(|| format!("parsing {}", instance.display()))?;
    let variant = match variant {
        VariantArg::Bipartite => Variant::Bipartite,
        VariantArg::Chordal => Variant::Chordal,
    };
    let (g, map) = build_gadget(&inst, variant);
    let edge_list = g.to_edge_list();
    let map_json = serde_json::to_string_pretty(&map)?;
    let human = match out {
        Some(path) => {
            let sidecar = sidecar_path(path);
            std::fs::write(path, &edge_list).with_context(|| format!("writing {}", path.display()))?;
            std::fs::write(&sidecar, &map_json)
                .with_context(|| format!("writing {}", sidecar.display()))?;
            format!(
                "wrote {} ({} vertices, {} edges) and {}; threshold k = {}\n",
                path.display(),
                g.order(),
                g.size(),
                sidecar.display(),
                map.threshold
            )
        }
        None => edge_list.clone(),
    };
    let result = json!({
        "order": g.order(),
        "size": g.size(),
        "threshold": map.threshold,
        "map": map,
        "edge_list": edge_list,
    });
    Ok(Outcome::ok("reduce", vec![digest], result, human))
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".map.json");
    PathBuf::from(name)
}

fn chain(graph: &Path) -> Result<Outcome> {
    let (g, gd) = read_graph(graph)?;
    let r = inequality_chain_report(&g)?;
    let text = format!(
        "gamma = {}, gamma_R = {}, gamma_dR = {}, gamma_[3R] = {}\nchain holds: {}\n",
        r.gamma, r.gamma_r, r.gamma_dr, r.gamma_3r, r.chain_holds
    );
    Ok(Outcome::ok("chain", vec![gd], serde_json::to_value(&r)?, text))
}
