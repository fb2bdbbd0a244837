//! The `svcfc` command-line driver. [`run`] does all the work so that tests
//! can call it without spawning a process.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use svcfc_core::generate::{generate_instance, GeneratorSpec};
use svcfc_core::io::{edges_json, kernel_report_json, parse_instance, write_instance, Format, Instance};
use svcfc_core::kernel::{kernelize_with_exact_cover, AnnotatedInstance};
use svcfc_core::{
    approx_twin_cover, chi_via_twin_cover, chromatic_number_exact, decompose_twin_cliques, exact_twin_cover,
    is_strong_cfvc_coloring, kernelize, kernelize_annotated, svcfc_decide, svcfc_exact, svcfc_upper_coloring,
    Coloring, Error, Graph, TwinCover, DEFAULT_PATH_CAP,
};

#[derive(Parser, Debug)]
#[command(name = "svcfc", version, about = "Twin-cover kernels and strong conflict-free vertex colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Graph encoding of the instance file
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist, global = true)]
    format: FormatArg,
    /// Maximum number of shortest paths enumerated per vertex pair
    #[arg(long, default_value_t = DEFAULT_PATH_CAP, global = true)]
    cap: usize,
    /// Give up after this many search nodes
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Override the seed of a generator spec
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Compute a minimum twin cover instead of the 2-approximation
    #[arg(long, global = true)]
    exact_tc: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Args, Debug)]
struct Input {
    /// Instance file; standard input when absent or `-`
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct WithK {
    #[command(flatten)]
    input: Input,
    /// Number of colors; overrides a `k:` line in the file
    #[arg(short, long)]
    k: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an instance to a kernel; uses the file's `X:` cover when present
    Kernelize(WithK),
    /// Decide whether k colors suffice for a strong CFVC coloring
    Decide(WithK),
    /// Compute the strong CFVC number exactly
    Svcfc(Input),
    /// Chromatic number; through the twin cover when the file names one
    Chi(Input),
    /// Compute a twin cover and its twin-cliques
    Twincover(Input),
    /// Build a strong CFVC coloring with at most chi + |Y| colors
    Color {
        #[command(flatten)]
        input: Input,
        /// Vertices receiving fresh colors, comma-separated; defaults to the twin cover
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<usize>>,
    },
    /// Check whether a coloring is a strong CFVC coloring
    Verify {
        #[command(flatten)]
        input: Input,
        /// Colors of vertices 0..n, comma-separated
        #[arg(long, value_delimiter = ',', required = true)]
        coloring: Vec<usize>,
    },
    /// Generate an instance from a JSON generator spec
    Gen(Input),
}

/// What a subcommand produced: a JSON document and whether it means "no".
struct Outcome {
    doc: Value,
    negative: bool,
}

impl From<Value> for Outcome {
    fn from(doc: Value) -> Self {
        Outcome { doc, negative: false }
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String, Error> {
    let mut text = String::new();
    match &input.file {
        Some(path) if path.as_os_str() != "-" => {
            text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut text).map_err(|e| Error::Input(format!("standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn load(input: &Input, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Instance, Error> {
    let format = match opts.format {
        FormatArg::Edgelist => Format::EdgeList,
        FormatArg::Graph6 => Format::Graph6,
    };
    parse_instance(&read_input(input, stdin)?, format)
}

fn require_connected(g: &Graph) -> Result<(), Error> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Validity("the graph is not connected".into()))
    }
}

fn require_k(flag: Option<usize>, inst: &Instance) -> Result<usize, Error> {
    flag.or(inst.k).ok_or_else(|| Error::Input("no k given: pass --k or add a `k:` line".into()))
}

/// The file's cover if it names one, otherwise a computed one.
fn cover_for(inst: &Instance, opts: &GlobalOpts) -> Result<TwinCover, Error> {
    match &inst.cover {
        Some(x) => TwinCover::new(&inst.graph, x.clone()),
        None if opts.exact_tc => exact_twin_cover(&inst.graph, opts.budget),
        None => Ok(approx_twin_cover(&inst.graph)),
    }
}

fn kernelize_cmd(args: &WithK, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(&args.input, opts, stdin)?;
    let k = require_k(args.k, &inst)?;
    let report = match inst.cover {
        Some(x) => kernelize_annotated(&AnnotatedInstance::new(inst.graph, k, x)?)?,
        None if opts.exact_tc => kernelize_with_exact_cover(&inst.graph, k, opts.budget)?,
        None => kernelize(&inst.graph, k)?,
    };
    Ok(kernel_report_json(&report).into())
}

fn decide_cmd(args: &WithK, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(&args.input, opts, stdin)?;
    let k = require_k(args.k, &inst)?;
    require_connected(&inst.graph)?;
    let d = svcfc_decide(&inst.graph, k, opts.cap, opts.budget)?;
    let mut doc = json!({ "answer": d.answer });
    if let Some(w) = &d.witness {
        doc["witness"] = json!(w);
    }
    if d.paths_overflowed {
        doc["paths_overflowed"] = json!(true);
    }
    Ok(Outcome { doc, negative: !d.answer })
}

fn svcfc_cmd(input: &Input, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(input, opts, stdin)?;
    require_connected(&inst.graph)?;
    let opt = svcfc_exact(&inst.graph, opts.cap, opts.budget)?;
    let mut doc = json!({ "svcfc": opt.svcfc, "witness": opt.witness });
    if opt.paths_overflowed {
        doc["paths_overflowed"] = json!(true);
    }
    Ok(doc.into())
}

fn chi_cmd(input: &Input, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(input, opts, stdin)?;
    let Some(x) = &inst.cover else {
        let (chi, coloring) = chromatic_number_exact(&inst.graph, opts.budget)?;
        return Ok(json!({ "chi": chi, "coloring": coloring }).into());
    };
    let cover = TwinCover::new(&inst.graph, x.clone())?;
    let (chi, rep) = chi_via_twin_cover(&inst.graph, &cover, opts.budget)?;
    Ok(json!({
        "chi": chi,
        "coloring": rep.extension,
        "phi": rep.phi,
        "S": rep.witness_s,
    })
    .into())
}

fn twincover_cmd(input: &Input, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(input, opts, stdin)?;
    let cover = cover_for(&inst, opts)?;
    let d = decompose_twin_cliques(&inst.graph, &cover)?;
    let cliques: Vec<Value> = d
        .cliques()
        .iter()
        .map(|c| json!({ "S": c.neighborhood, "vertices": c.vertices }))
        .collect();
    Ok(json!({
        "cover": cover,
        "size": cover.len(),
        "exact": inst.cover.is_none() && opts.exact_tc,
        "cliques": cliques,
    })
    .into())
}

fn color_cmd(input: &Input, y: Option<&[usize]>, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(input, opts, stdin)?;
    require_connected(&inst.graph)?;
    let cover = cover_for(&inst, opts)?;
    let y = y.unwrap_or(cover.vertices());
    let coloring = svcfc_upper_coloring(&inst.graph, &cover, y, opts.budget)?;
    let verdict = is_strong_cfvc_coloring(&inst.graph, &coloring, opts.cap)?;
    Ok(json!({
        "coloring": coloring,
        "colors": coloring.num_colors(),
        "y": y,
        "strong": verdict.is_strong,
    })
    .into())
}

fn verify_cmd(input: &Input, colors: &[usize], opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let inst = load(input, opts, stdin)?;
    require_connected(&inst.graph)?;
    let coloring = Coloring::new(colors.to_vec())?;
    let verdict = is_strong_cfvc_coloring(&inst.graph, &coloring, opts.cap)?;
    let mut doc = json!({
        "is_strong": verdict.is_strong,
        "colors": coloring.num_colors(),
        "violating_pair": verdict.violating_pair,
    });
    if verdict.paths_overflowed {
        doc["paths_overflowed"] = json!(true);
    }
    if let Some(k) = inst.k {
        doc["within_k"] = json!(coloring.num_colors() <= k);
    }
    Ok(doc.into())
}

fn gen_cmd(input: &Input, opts: &GlobalOpts, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let text = read_input(input, stdin)?;
    let mut spec: GeneratorSpec =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("generator spec: {e}")))?;
    if let Some(seed) = opts.seed {
        spec.seed = seed;
    }
    let (graph, cover) = generate_instance(&spec)?;
    let file = write_instance(&Instance { graph: graph.clone(), cover: Some(cover.vertices().to_vec()), k: None });
    Ok(json!({
        "n": graph.n(),
        "m": graph.m(),
        "X": cover,
        "edges": edges_json(&graph),
        "instance": file,
    })
    .into())
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Kernelize(args) => kernelize_cmd(args, opts, stdin),
        Command::Decide(args) => decide_cmd(args, opts, stdin),
        Command::Svcfc(input) => svcfc_cmd(input, opts, stdin),
        Command::Chi(input) => chi_cmd(input, opts, stdin),
        Command::Twincover(input) => twincover_cmd(input, opts, stdin),
        Command::Color { input, y } => color_cmd(input, y.as_deref(), opts, stdin),
        Command::Verify { input, coloring } => verify_cmd(input, coloring, opts, stdin),
        Command::Gen(input) => gen_cmd(input, opts, stdin),
    }
}

fn error_doc(kind: &str, message: String) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string()
}

/// Runs the driver on `argv` (including the program name) and returns the
/// exit code with everything meant for standard output.
///
/// Exit codes: 0 computed, 1 `decide` answered no, 2 usage, parse, input or
/// validity error, 3 search budget exhausted.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return (0, e.to_string()),
        Err(e) => {
            let text = e.to_string();
            return (2, error_doc("usage", text.trim().trim_start_matches("error: ").to_string()));
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => (i32::from(out.negative), out.doc.to_string()),
        Err(e) => {
            let code = if matches!(e, Error::Budget(_)) { 3 } else { 2 };
            (code, error_doc(e.kind(), e.to_string()))
        }
    }
}
