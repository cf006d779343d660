//! The `spectraham` command line: every subcommand writes one JSON report
//! (schema `spectraham/1`) except `convert`, which writes a bare graph.
//!
//! Exit codes: 0 completed, 1 property refuted or exceptional verdict, 2 usage
//! or input error, 3 internal failure.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spectraham::closure::{bipartite_closure, k_closure};
use spectraham::families::{build_family, sample_family_members, FamilySpec, GraphRef};
use spectraham::io::{parse_graph6, write_dot, write_graph6, GraphJson, PartSidecar};
use spectraham::oracle::{check_property, HamProperty, OracleConfig};
use spectraham::report::{bipartite_digest, graph_digest, CommandRecord, ReportDocument};
use spectraham::spectral::{bounds_report, spectral_radius, SpectralKind, SpectralOptions};
use spectraham::survey::{default_theorems, run_survey, Generation, Regime, SurveyConfig, SurveyReport};
use spectraham::theorems::{
    check_remark_3_11, check_theorem, cross_validate, verify_sharpness, CrossValidation, SharpnessId, TheoremId,
    TheoremOptions, TheoremVerdict, Thm211Variant,
};
use spectraham::{BipartiteGraph, Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "spectraham", version, about = "Spectral conditions for Hamiltonian properties of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input graph file (graph6 or JSON), '-' for stdin.
    #[arg(long = "in", global = true, default_value = "-")]
    input: String,
    /// Output file, '-' for stdout.
    #[arg(long, global = true, default_value = "-")]
    out: String,
    /// Encoding for graphs written by gen, closure and convert.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Size of the part X for a bipartite graph6 input (vertices 0..x_size).
    #[arg(long, global = true)]
    x_size: Option<usize>,
    /// JSON part sidecar `{"x_size": …}` for a graph6 input.
    #[arg(long, global = true)]
    parts: Option<String>,
    /// Eigensolver tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Slack below which a spectral comparison is a boundary case.
    #[arg(long, global = true, default_value_t = 1e-6)]
    epsilon: f64,
    /// Largest order the exact oracle accepts.
    #[arg(long, global = true, default_value_t = 24)]
    oracle_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::Statement)]
    thm211_variant: VariantArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct a family graph (or sample members of a set-valued family).
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Number of members to sample from a set-valued family.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Adjacency spectral radius.
    Mu,
    /// Signless-Laplacian spectral radius.
    Q,
    /// Degree and edge bounds on the spectral radii.
    Bounds,
    /// The k-closure, or the bipartite closure of a balanced bipartite input.
    Closure {
        #[arg(long, required_unless_present = "bipartite")]
        k: Option<usize>,
        #[arg(long)]
        bipartite: bool,
    },
    /// Exact Hamiltonicity oracle.
    Oracle {
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Start vertex for `traceable-from`.
        #[arg(long)]
        from: Option<usize>,
    },
    /// Evaluate a theorem (or a comma-separated list, or `all`).
    Check {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        k: usize,
        /// Skip cross-validation against the oracle.
        #[arg(long)]
        no_validate: bool,
    },
    /// Single-edge deletions of a sharpness lemma's extremal graph.
    Sharpness {
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The sign claim about the exceptional set of the signless-Laplacian theorem.
    Remark {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Seeded random sweep with oracle confirmation of every conclusion.
    Survey {
        /// Fixes the order (or larger part size); overrides --n-min/--n-max.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = RegimeArg::Simple)]
        regime: RegimeArg,
        #[arg(long, default_value_t = 0.3)]
        p_min: f64,
        #[arg(long, default_value_t = 1.0)]
        p_max: f64,
        #[arg(long, value_enum, default_value_t = GenerationArg::Repair)]
        generation: GenerationArg,
        /// Comma-separated theorem list; defaults to those suited to the regime.
        #[arg(long)]
        theorem: Option<String>,
        /// Worker threads (default: SPECTRAHAM_THREADS, else all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Re-encode the input graph in --format.
    Convert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Statement,
    Proof,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    Hamiltonian,
    Traceable,
    HamiltonConnected,
    TraceableFromEveryVertex,
    TraceableFrom,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RegimeArg {
    Simple,
    Balanced,
    NearlyBalanced,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenerationArg {
    Filter,
    Repair,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ConvergenceFailure { .. } | Error::UnavailableFamily(_) | Error::OracleMismatch(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

struct Input {
    graph: Graph,
    bipartite: Option<BipartiteGraph>,
}

impl Input {
    fn as_ref(&self) -> GraphRef<'_> {
        match &self.bipartite {
            Some(b) => GraphRef::Bipartite(b),
            None => GraphRef::Simple(&self.graph),
        }
    }

    fn digest(&self) -> String {
        match &self.bipartite {
            Some(b) => bipartite_digest(b),
            None => graph_digest(&self.graph, None),
        }
    }

    fn part_mask(&self) -> Option<Vec<bool>> {
        self.bipartite.as_ref().map(|b| b.part_mask())
    }
}

struct Context<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn spectral(&self) -> SpectralOptions {
        SpectralOptions {
            tol: self.cli.tol,
            ..SpectralOptions::default()
        }
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            cap: self.cli.oracle_cap,
        }
    }

    fn theorem_options(&self) -> TheoremOptions {
        TheoremOptions {
            spectral: self.spectral(),
            epsilon: self.cli.epsilon,
            thm211_variant: match self.cli.thm211_variant {
                VariantArg::Statement => Thm211Variant::Statement,
                VariantArg::Proof => Thm211Variant::Proof,
            },
            ..TheoremOptions::default()
        }
    }

    fn read_input(&mut self) -> Outcome<Input> {
        let text = if self.cli.input == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(&self.cli.input)
                .map_err(|e| Failure::Usage(format!("reading {}: {e}", self.cli.input)))?
        };
        let trimmed = text.trim_start();
        let (graph, mut x_size) = if trimmed.starts_with('{') {
            let j: GraphJson =
                serde_json::from_str(trimmed).map_err(|e| Failure::Usage(format!("invalid graph JSON: {e}")))?;
            (j.to_graph()?, j.x_size)
        } else {
            let line = trimmed.lines().next().unwrap_or("");
            (parse_graph6(line)?, None)
        };
        if let Some(path) = &self.cli.parts {
            let side = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?;
            let side: PartSidecar =
                serde_json::from_str(&side).map_err(|e| Failure::Usage(format!("invalid part sidecar: {e}")))?;
            x_size = Some(side.x_size);
        }
        if self.cli.x_size.is_some() {
            x_size = self.cli.x_size;
        }
        let bipartite = match x_size {
            Some(x) => Some(BipartiteGraph::from_graph(&graph, x)?),
            None => None,
        };
        Ok(Input { graph, bipartite })
    }
}

fn render(g: &Graph, x_size: Option<usize>, format: Format) -> serde_json::Value {
    match format {
        Format::Graph6 => serde_json::Value::String(write_graph6(g)),
        Format::Dot => serde_json::Value::String(write_dot(g, x_size)),
        Format::Json => serde_json::to_value(GraphJson {
            x_size,
            ..GraphJson::from_graph(g)
        })
        .expect("graph JSON"),
    }
}

fn mask_string(mask: &[bool]) -> String {
    mask.iter().map(|&x| if x { 'X' } else { 'Y' }).collect()
}

#[derive(Serialize)]
struct GeneratedGraph {
    family: FamilySpec,
    order: usize,
    edges: usize,
    graph6: String,
    x_size: Option<usize>,
    part_mask: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rendered: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct SpectralValue {
    quantity: &'static str,
    value: f64,
    residual: f64,
    iterations: usize,
    method: spectraham::spectral::Method,
}

#[derive(Serialize)]
struct CheckResult {
    verdict: TheoremVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_validation: Option<CrossValidation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_mismatch: Option<String>,
}

fn parse_theorems(list: &str) -> Outcome<Vec<TheoremId>> {
    if list.eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    list.split(',').map(|s| s.trim().parse::<TheoremId>().map_err(Failure::from)).collect()
}

fn survey_table(r: &SurveyReport) -> String {
    let mut out = format!(
        "{:<7} {:>10} {:>9} {:>10} {:>10} {:>10} {:>10}\n",
        "theorem", "hyp. met", "boundary", "certified", "exception", "confirmed", "mismatch"
    );
    for t in &r.tallies {
        out.push_str(&format!(
            "{:<7} {:>10} {:>9} {:>10} {:>10} {:>10} {:>10}\n",
            t.theorem.map(|t| t.to_string()).unwrap_or_default(),
            t.hypothesis_met,
            t.boundary,
            t.certified,
            t.exceptions,
            t.oracle_confirmed,
            t.mismatches
        ));
    }
    out.push_str(&format!("{} graphs generated, {} rejected\n", r.generated, r.rejected));
    out
}

enum Output {
    Report(ReportDocument),
    Raw(String, Option<PartSidecar>),
}

fn execute(ctx: &mut Context<'_>, record: CommandRecord, stderr: &mut dyn Write) -> Outcome<(i32, Output)> {
    let mut doc = ReportDocument::new(record);
    let mut code = EXIT_OK;
    let cli = ctx.cli;
    match &cli.command {
        Command::Gen {
            family,
            n,
            k,
            count,
            seed,
        } => {
            let spec = FamilySpec::from_name(family, *n, *k)?;
            let graphs = match count {
                Some(c) => {
                    doc.seed = Some(seed.unwrap_or(0));
                    sample_family_members(&spec, *c, seed.unwrap_or(0))?
                }
                None => vec![build_family(&spec)?],
            };
            for fg in &graphs {
                let g = fg.graph();
                let x_size = fg.as_bipartite().map(|b| b.x_size());
                if doc.input_digest.is_none() {
                    doc.input_digest = Some(graph_digest(&g, x_size));
                }
                doc.push(GeneratedGraph {
                    family: spec,
                    order: g.order(),
                    edges: g.edge_count(),
                    graph6: write_graph6(&g),
                    x_size,
                    part_mask: fg.as_bipartite().map(|b| mask_string(&b.part_mask())),
                    rendered: (cli.format != Format::Graph6).then(|| render(&g, x_size, cli.format)),
                });
            }
        }
        Command::Mu | Command::Q => {
            let input = ctx.read_input()?;
            doc.input_digest = Some(input.digest());
            let (kind, quantity) = match cli.command {
                Command::Mu => (SpectralKind::Adjacency, "mu"),
                _ => (SpectralKind::SignlessLaplacian, "q"),
            };
            if input.graph.order() == 0 {
                return Err(Error::EmptyGraph.into());
            }
            let r = spectral_radius(&input.graph, kind, &ctx.spectral())?;
            doc.push(SpectralValue {
                quantity,
                value: r.value,
                residual: r.residual,
                iterations: r.iterations,
                method: r.method,
            });
        }
        Command::Bounds => {
            let input = ctx.read_input()?;
            doc.input_digest = Some(input.digest());
            let mask = input.part_mask();
            let mut report = bounds_report(&input.graph, mask.as_deref())?;
            let opts = ctx.spectral();
            let mu = spectral_radius(&input.graph, SpectralKind::Adjacency, &opts)?.value;
            let q = spectral_radius(&input.graph, SpectralKind::SignlessLaplacian, &opts)?.value;
            if input.graph.order() >= 2 {
                report = report.with_cone_lower(mu, input.graph.order());
            }
            doc.push(serde_json::json!({ "mu": mu, "q": q, "bounds": report }));
        }
        Command::Closure { k, bipartite } => {
            let input = ctx.read_input()?;
            doc.input_digest = Some(input.digest());
            if *bipartite {
                let b = input
                    .bipartite
                    .as_ref()
                    .ok_or_else(|| Failure::Usage("--bipartite needs --x-size, --parts or a JSON x_size".into()))?;
                let r = bipartite_closure(b)?;
                let closed = r.closed.to_graph();
                doc.push(serde_json::json!({
                    "closure": "bipartite",
                    "threshold": r.threshold,
                    "added_edges": r.added_edges,
                    "closed": render(&closed, Some(b.x_size()), cli.format),
                    "closed_edges": closed.edge_count(),
                }));
            } else {
                let k = k.expect("clap enforces --k");
                let r = k_closure(&input.graph, k);
                doc.push(serde_json::json!({
                    "closure": "k",
                    "threshold": r.threshold,
                    "added_edges": r.added_edges,
                    "closed": render(&r.closed, None, cli.format),
                    "closed_edges": r.closed.edge_count(),
                }));
            }
        }
        Command::Oracle { property, from } => {
            let input = ctx.read_input()?;
            doc.input_digest = Some(input.digest());
            let p = match property {
                PropertyArg::Hamiltonian => HamProperty::Hamiltonian,
                PropertyArg::Traceable => HamProperty::Traceable,
                PropertyArg::HamiltonConnected => HamProperty::HamiltonConnected,
                PropertyArg::TraceableFromEveryVertex => HamProperty::TraceableFromEveryVertex,
                PropertyArg::TraceableFrom => HamProperty::TraceableFrom(
                    from.ok_or_else(|| Failure::Usage("traceable-from needs --from".into()))?,
                ),
            };
            let answer = check_property(&input.graph, p, &ctx.oracle())?;
            if !answer.holds {
                code = EXIT_REFUTED;
            }
            doc.push(serde_json::json!({ "property": p, "answer": answer }));
        }
        Command::Check { theorem, k, no_validate } => {
            let ids = parse_theorems(theorem)?;
            let input = ctx.read_input()?;
            doc.input_digest = Some(input.digest());
            let opts = ctx.theorem_options();
            for id in ids {
                let verdict = check_theorem(id, input.as_ref(), *k, &opts)?;
                if verdict.is_exception() {
                    code = EXIT_REFUTED;
                }
                let mut result = CheckResult {
                    verdict,
                    cross_validation: None,
                    oracle_mismatch: None,
                };
                if !no_validate {
                    match cross_validate(&result.verdict, input.as_ref(), &ctx.oracle()) {
                        Ok(cv) => result.cross_validation = Some(cv),
                        Err(Error::OracleMismatch(detail)) => {
                            code = EXIT_REFUTED;
                            result.oracle_mismatch = Some(detail);
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                doc.push(result);
            }
        }
        Command::Sharpness { lemma, n, k } => {
            let id: SharpnessId = lemma.parse()?;
            let r = verify_sharpness(id, *n, *k, &ctx.spectral())?;
            if !r.all_strict {
                code = EXIT_REFUTED;
            }
            doc.push(r);
        }
        Command::Remark { n, k } => {
            let r = check_remark_3_11(*n, *k, &ctx.spectral())?;
            if !r.holds {
                code = EXIT_REFUTED;
            }
            doc.push(r);
        }
        Command::Survey {
            n,
            n_min,
            n_max,
            k,
            samples,
            seed,
            regime,
            p_min,
            p_max,
            generation,
            theorem,
            threads,
        } => {
            let regime = match regime {
                RegimeArg::Simple => Regime::Simple,
                RegimeArg::Balanced => Regime::Balanced,
                RegimeArg::NearlyBalanced => Regime::NearlyBalanced,
            };
            let mut cfg = SurveyConfig::new(regime, n.unwrap_or(*n_max), *k, *samples, *seed);
            cfg.n_min = n.unwrap_or(*n_min);
            cfg.p_min = *p_min;
            cfg.p_max = *p_max;
            cfg.generation = match generation {
                GenerationArg::Filter => Generation::Filter,
                GenerationArg::Repair => Generation::Repair,
            };
            cfg.theorems = match theorem {
                Some(list) => parse_theorems(list)?,
                None => default_theorems(regime),
            };
            cfg.theorem_options = ctx.theorem_options();
            cfg.oracle = ctx.oracle();
            cfg.threads = *threads;
            let report = run_survey(&cfg)?;
            // The worker count does not affect results, so keep it out of the report.
            let mut recorded = report.clone();
            recorded.config.threads = None;
            let _ = stderr.write_all(survey_table(&report).as_bytes());
            if report.total_mismatches() > 0 {
                code = EXIT_REFUTED;
            }
            doc.seed = Some(*seed);
            doc.push(recorded);
        }
        Command::Convert => {
            let input = ctx.read_input()?;
            let x_size = input.bipartite.as_ref().map(|b| b.x_size());
            let text = match render(&input.graph, x_size, cli.format) {
                serde_json::Value::String(s) if cli.format == Format::Graph6 => format!("{s}\n"),
                serde_json::Value::String(s) => s,
                other => format!("{}\n", serde_json::to_string_pretty(&other).expect("json")),
            };
            let sidecar = (cli.format == Format::Graph6).then_some(x_size).flatten().map(|x| PartSidecar { x_size: x });
            return Ok((EXIT_OK, Output::Raw(text, sidecar)));
        }
    }
    Ok((code, Output::Report(doc)))
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let name = argv
        .iter()
        .skip(1)
        .find(|a| !a.starts_with('-'))
        .cloned()
        .unwrap_or_default();
    let record = CommandRecord {
        name,
        args: argv.iter().skip(1).cloned().collect(),
    };
    let out_path = cli.out.clone();
    let mut ctx = Context { cli: &cli, stdin };
    let (code, output) = match execute(&mut ctx, record, stderr) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            return EXIT_INTERNAL;
        }
    };
    let (text, sidecar) = match output {
        Output::Report(doc) => (format!("{}\n", doc.to_json()), None),
        Output::Raw(text, sidecar) => (text, sidecar),
    };
    let written = if out_path == "-" {
        stdout.write_all(text.as_bytes())
    } else {
        fs::write(&out_path, &text).and_then(|_| match sidecar {
            Some(s) => fs::write(
                format!("{out_path}.parts.json"),
                serde_json::to_string(&s).expect("sidecar JSON"),
            ),
            None => Ok(()),
        })
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "internal error: writing output: {e}");
        return EXIT_INTERNAL;
    }
    code
}
