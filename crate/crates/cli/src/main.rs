//! `vnumber`: invariants, power sequences, verification suites and corpora
//! for monomial ideals and graphs.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use vnumber_core::combinatorics::Graph;
use vnumber_core::decomposition::{associated_primes, c_constant, minimal_primes};
use vnumber_core::harness::corpus::{
    family, graph_name, graphs_on, random_ideals, squarefree_ideals, GraphFilter, Instance,
};
use vnumber_core::harness::report::{
    graph_ideal, ideal_report, run_suite, sequence_csv, sequence_rows, IdealKind, Suite,
    SuiteReport,
};
use vnumber_core::harness::Status;
use vnumber_core::monomial::MonomialIdeal;
use vnumber_core::regularity::{betti_numbers, is_cohen_macaulay, polarize, regularity};
use vnumber_core::symbolic::{delta_invariant, waldschmidt_constant, PowerKind};
use vnumber_core::vnumber::v_number_capped;
use vnumber_core::Caps;

#[derive(Parser)]
#[command(
    name = "vnumber",
    version,
    about = "v-numbers, regularity and powers of monomial ideals"
)]
struct Cli {
    /// Worker threads for corpus runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for random corpora.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Size caps, e.g. `homology-vars=18,vertex-dim=10,witness-budget=100000`.
    #[arg(long, global = true)]
    caps: Option<String>,
    /// Coefficient field characteristic; only 0 is supported.
    #[arg(long, global = true, default_value_t = 0)]
    field_char: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one member of a power filtration.
    Invariants(InvariantsArgs),
    /// α, v and reg along a power filtration.
    Sequence(SequenceArgs),
    /// Run verification suites over corpora, or every check on one input.
    Verify(VerifyArgs),
    /// Print a corpus in the input text formats.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct Input {
    /// Ideal file (`ring n` header, one generator per line); `-` for stdin.
    #[arg(long, conflicts_with = "graph")]
    ideal: Option<PathBuf>,
    /// Graph file (`graph n` header, one 1-based edge per line); `-` for stdin.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Ideal attached to a graph input.
    #[arg(long, value_enum, default_value_t = Kind::Cover)]
    ideal_kind: Kind,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cover,
    Edge,
}

impl From<Kind> for IdealKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cover => IdealKind::Cover,
            Kind::Edge => IdealKind::Edge,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: Input,
    /// `ordinary`, `symbolic-min` or `symbolic-ass`.
    #[arg(long, default_value = "ordinary")]
    power: PowerKind,
    /// Which member of the filtration.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Comma-separated: alpha, maxdeg, gens, v, local, ass, min, c, waldschmidt, delta, reg, betti, cm.
    #[arg(long, default_value = "alpha,v,reg", value_delimiter = ',')]
    show: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SequenceArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value = "symbolic-min")]
    power: PowerKind,
    #[arg(long, default_value_t = 4)]
    max_k: u32,
    /// Comma-separated columns among alpha, v, reg.
    #[arg(long, default_value = "alpha,v,reg", value_delimiter = ',')]
    show: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    /// Suite name or `all`: cover, cmvwc, slope, bounds, criteria, polymatroidal,
    /// persistence, polarization, there-exist, variants, oracles.
    #[arg(long)]
    suite: Option<String>,
    /// Power filtration for a single input.
    #[arg(long, default_value = "symbolic-min")]
    power: PowerKind,
    #[arg(long)]
    max_k: Option<u32>,
    /// Largest graph vertex count in graph corpora.
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest variable count of square-free corpora.
    #[arg(long)]
    vars: Option<usize>,
    /// Largest generator count of square-free corpora.
    #[arg(long)]
    gens: Option<usize>,
    /// Number of random ideals.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CorpusArgs {
    /// cycle, complete, path, whisker, graphs, squarefree or random.
    #[arg(long)]
    family: String,
    /// Vertex count (graph families).
    #[arg(long)]
    n: Option<usize>,
    /// Keep only connected graphs (`graphs` family).
    #[arg(long)]
    connected: bool,
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 6)]
    gens: usize,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    max_exp: u32,
}

/// Failure of the requested computation itself, reported with exit code 2.
struct UsageError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> std::result::Result<bool, UsageError> {
    if cli.field_char != 0 {
        return Err(anyhow::anyhow!("only characteristic 0 is supported").into());
    }
    let caps = match &cli.caps {
        Some(s) => Some(Caps::parse(s).context("--caps")?),
        None => None,
    };
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()?;
    }
    let base_caps = caps.unwrap_or_default();
    match cli.command {
        Command::Invariants(a) => invariants(a, &base_caps).map(|()| true).map_err(Into::into),
        Command::Sequence(a) => sequence(a, &base_caps).map(|()| true).map_err(Into::into),
        Command::Verify(a) => verify(a, caps, cli.seed),
        Command::Corpus(a) => corpus(a, cli.seed.unwrap_or(0))
            .map(|()| true)
            .map_err(Into::into),
    }
}

fn read_source(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// The ideal named by the input flags, with its graph if one was given.
fn load(input: &Input) -> Result<(MonomialIdeal, Option<Graph>)> {
    match (&input.ideal, &input.graph) {
        (Some(p), None) => Ok((MonomialIdeal::parse(&read_source(p)?)?, None)),
        (None, Some(p)) => {
            let g = Graph::parse(&read_source(p)?)?;
            Ok((graph_ideal(&g, input.ideal_kind.into())?, Some(g)))
        }
        _ => bail!("exactly one of --ideal or --graph is required"),
    }
}

fn invariants(a: InvariantsArgs, caps: &Caps) -> Result<()> {
    let (base, _) = load(&a.input)?;
    let i = a.power.nth(&base, a.k)?;
    let mut fields: Vec<(String, Value, String)> = Vec::new();
    for name in &a.show {
        let (value, text) = match name.as_str() {
            "alpha" => num(i.alpha()?),
            "maxdeg" => num(i.max_gen_degree()?),
            "gens" => (json!(i.to_string()), i.to_string()),
            "v" => num(v_number_capped(&i, caps)?.v),
            "local" => {
                let r = v_number_capped(&i, caps)?;
                let arr: Vec<Value> = r
                    .local
                    .iter()
                    .map(|(p, l)| json!({"prime": p.to_string(), "v": l.v, "witness": l.witness.to_string()}))
                    .collect();
                let text = r
                    .local
                    .iter()
                    .map(|(p, l)| format!("{p} {} {}", l.v, l.witness))
                    .collect::<Vec<_>>()
                    .join("; ");
                (Value::Array(arr), text)
            }
            "ass" | "min" => {
                let primes = if name == "ass" {
                    associated_primes(&i)?
                } else {
                    minimal_primes(&i)?
                };
                let list: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                (json!(list), list.join("; "))
            }
            "c" => num(c_constant(&i)?),
            "waldschmidt" => {
                let r = waldschmidt_constant(&i)?;
                (json!(r.to_string()), r.to_string())
            }
            "delta" => {
                let r = delta_invariant(&i, caps.vertex_dim)?;
                (json!(r.to_string()), r.to_string())
            }
            "reg" => num(regularity(&i, caps)?),
            "betti" => {
                let table = betti_numbers(&polarize(&i)?.ideal, caps)?;
                let arr: Vec<Value> = table
                    .entries()
                    .map(|((i, j), b)| json!({"i": i, "j": j, "beta": b}))
                    .collect();
                (
                    Value::Array(arr),
                    table.to_csv().trim_end().replace('\n', "; "),
                )
            }
            "cm" => {
                let cm = is_cohen_macaulay(&polarize(&i)?.ideal)?;
                (json!(cm), cm.to_string())
            }
            other => bail!("unknown invariant `{other}`"),
        };
        fields.push((name.clone(), value, text));
    }
    match a.format {
        Format::Text if fields.len() == 1 => println!("{}", fields[0].2),
        Format::Text => {
            for (n, _, t) in &fields {
                println!("{n}: {t}");
            }
        }
        Format::Json => {
            let mut m = Map::new();
            for (n, v, _) in fields {
                m.insert(n, v);
            }
            println!("{}", serde_json::to_string_pretty(&Value::Object(m))?);
        }
        Format::Csv => {
            println!("name,value");
            for (n, _, t) in &fields {
                println!("{n},{}", csv_field(t));
            }
        }
    }
    Ok(())
}

fn num(x: u64) -> (Value, String) {
    (json!(x), x.to_string())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn sequence(a: SequenceArgs, caps: &Caps) -> Result<()> {
    let (i, _) = load(&a.input)?;
    for c in &a.show {
        if !matches!(c.as_str(), "alpha" | "v" | "reg") {
            bail!("unknown column `{c}` (expected alpha, v or reg)");
        }
    }
    let with_reg = a.show.iter().any(|c| c == "reg");
    let rows = sequence_rows(&i, a.power, a.max_k, with_reg, caps)?;
    match a.format {
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut m = Map::new();
                    m.insert("k".into(), json!(r.k));
                    for c in &a.show {
                        let v = match c.as_str() {
                            "alpha" => json!(r.alpha),
                            "v" => json!(r.v),
                            _ => json!(r.reg),
                        };
                        m.insert(c.clone(), v);
                    }
                    Value::Object(m)
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(
                    &json!({"instance": i.to_string(), "power": a.power.to_string(), "sequences": arr})
                )?
            );
        }
        Format::Csv | Format::Text => {
            let cols: Vec<&str> = a.show.iter().map(String::as_str).collect();
            print!("{}", sequence_csv(&rows, &cols));
        }
    }
    Ok(())
}

fn verify(
    a: VerifyArgs,
    caps: Option<Caps>,
    seed: Option<u64>,
) -> std::result::Result<bool, UsageError> {
    if a.input.ideal.is_some() || a.input.graph.is_some() {
        if a.suite.is_some() {
            return Err(anyhow::anyhow!("--suite cannot be combined with a single input").into());
        }
        let (i, g) = load(&a.input)?;
        let caps = caps.unwrap_or_default();
        let kind = a.input.ideal_kind.into();
        let report = ideal_report(
            &i,
            g.as_ref().map(|g| (g, kind)),
            a.power,
            a.max_k.unwrap_or(3),
            &caps,
        )?;
        match a.format {
            Format::Json => println!("{}", report.to_json()),
            Format::Csv => print!("{}", report.to_csv()),
            Format::Text => {
                println!("{} [{}]", report.instance, report.power);
                print!("{}", report.to_csv());
                if let Some(f) = &report.fit {
                    println!(
                        "fit: slope {} period {} from k = {}",
                        f.slope, f.period, f.k_min
                    );
                }
                for c in &report.checks {
                    println!("{c}");
                }
            }
        }
        return Ok(!report.has_fail());
    }
    let name = a.suite.as_deref().unwrap_or("all");
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        let mut o = s.defaults();
        if let Some(c) = caps {
            o.caps = c;
        }
        if let Some(x) = seed {
            o.seed = x;
        }
        o.max_k = a.max_k.unwrap_or(o.max_k);
        o.n_max = a.n_max.unwrap_or(o.n_max);
        o.vars = a.vars.unwrap_or(o.vars);
        o.gens = a.gens.unwrap_or(o.gens);
        o.count = a.count.unwrap_or(o.count);
        reports.push(run_suite(s, &o)?);
    }
    match a.format {
        Format::Json => {
            let value: Vec<Value> = reports
                .iter()
                .map(serde_json::to_value)
                .collect::<std::result::Result<_, _>>()?;
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => {
            println!("suite,instance,check,status,witness,detail");
            for r in &reports {
                for line in r.to_csv().lines().skip(1) {
                    println!("{},{line}", r.suite);
                }
            }
        }
        Format::Text => {
            for r in &reports {
                let t = &r.summary;
                println!(
                    "{}: {} instances, pass {}, trend-pass {}, skip {}, inconclusive {}, fail {}",
                    r.suite,
                    r.instances.len(),
                    t.pass,
                    t.trend_pass,
                    t.skip,
                    t.inconclusive,
                    t.fail
                );
                for inst in &r.instances {
                    for c in inst
                        .checks
                        .iter()
                        .filter(|c| matches!(c.status, Status::Fail | Status::Inconclusive))
                    {
                        println!("  {}: {c}", inst.instance);
                    }
                }
            }
        }
    }
    Ok(reports.iter().all(|r| !r.has_fail()))
}

fn corpus(a: CorpusArgs, seed: u64) -> Result<()> {
    let need_n = || a.n.context("--n is required for this family");
    let instances: Vec<Instance> = match a.family.as_str() {
        "cycle" | "complete" | "path" | "whisker" => family(&a.family, need_n()?)?
            .into_iter()
            .map(|(name, g)| Instance::graph(name, g))
            .collect(),
        "graphs" => {
            let filter = if a.connected {
                GraphFilter::Connected
            } else {
                GraphFilter::AnyWithEdge
            };
            let mut out = Vec::new();
            for n in 2..=need_n()? {
                out.extend(
                    graphs_on(n, filter)?
                        .into_iter()
                        .map(|g| Instance::graph(graph_name(&g), g)),
                );
            }
            out
        }
        "squarefree" => squarefree_ideals(a.vars, a.gens)?
            .into_iter()
            .map(Instance::ideal)
            .collect(),
        "random" => random_ideals(seed, a.count, a.vars, a.max_exp, a.gens)?
            .into_iter()
            .map(Instance::ideal)
            .collect(),
        other => bail!("unknown family `{other}`"),
    };
    let texts: Vec<String> = instances.iter().map(Instance::to_text).collect();
    print!("{}", texts.join("\n"));
    Ok(())
}
