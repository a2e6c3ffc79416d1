use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use tnet_core::apps::{check_turan_identity, rainbow_pair_coloring, verify_rainbow};
use tnet_core::error::Error;
use tnet_core::geometry::{
    self, canonical_ranges, compile, GeometricInstance, PointSet, RangeKind,
};
use tnet_core::hypergraph::{parse_hg, write_hg, Hypergraph};
use tnet_core::nets::{
    det_eps_net, direct_eps_t_net, lc_eps_t_net, min_net_exact, parse_net, random_net,
    trivial_eps_t_net, vc1_eps_t_net, verify_net, write_net, NetReport, TSubsetFamily,
};
use tnet_core::vcdim::{dual_shatter_fit, t_vc_dimension, vc_dimension, DimensionReport};

/// Construct, verify and measure epsilon-t-nets for finite hypergraphs.
#[derive(Parser)]
#[command(name = "tnet", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// RNG seed for the randomized stages
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Exit 0 from `construct` even when the result fails verification
    #[arg(long, global = true)]
    allow_invalid: bool,
    /// Suppress informational output
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance (.pts and/or .hg files)
    Gen(GenArgs),
    /// Run a net construction and verify the result
    Construct(ConstructArgs),
    /// Verify a .net family against a hypergraph
    Verify(VerifyArgs),
    /// Dimension diagnostics for a hypergraph
    Dims(DimsArgs),
    /// Turán number and the minimum-net identity
    Turan(TuranArgs),
    /// Rainbow pair-coloring
    Color(ColorArgs),
    /// Cross-product sweep writing one CSV
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    /// grid | random-uniform | staircase | interval | file
    kind: String,
    /// Point/vertex count (staircase, random-uniform, interval)
    #[arg(long)]
    n: Option<usize>,
    /// Grid side length
    #[arg(long)]
    side: Option<usize>,
    /// Coordinate extent for random-uniform
    #[arg(long, default_value_t = 100)]
    extent: i64,
    /// Range family to compile: halfplane|disk|rect|frame|segment
    #[arg(long)]
    family: Option<String>,
    /// Input .pts file (kind = file)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output base path (writes BASE.pts / BASE.hg)
    #[arg(long, short, default_value = "instance")]
    output: PathBuf,
}

#[derive(Args)]
struct ConstructArgs {
    /// Input .hg hypergraph or .pts point set
    input: PathBuf,
    /// random | det | direct | trivial | lc | vc1 | exact | frames | rects
    #[arg(long)]
    method: String,
    #[arg(long)]
    eps: f64,
    #[arg(long, short = 't', default_value_t = 1)]
    t: usize,
    /// Dimension parameter (VC for det, t-VC for direct, tuple VC for lc)
    #[arg(long, short = 'd')]
    dim: Option<usize>,
    /// Oversampling factor for the random method
    #[arg(long, default_value_t = 1.0)]
    oversample: f64,
    /// Range family when the input is a .pts file
    #[arg(long)]
    family: Option<String>,
    /// Output base path for the .net file (default: input stem + method)
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Append the report row to this CSV (header written when new)
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    hypergraph: PathBuf,
    net: PathBuf,
    /// Override the eps recorded in the .net file
    #[arg(long)]
    eps: Option<f64>,
    /// Override the tuple size recorded in the .net file
    #[arg(long, short = 't')]
    t: Option<usize>,
}

#[derive(Args)]
struct DimsArgs {
    hypergraph: PathBuf,
    /// Compute t-VC-dimension for these t values
    #[arg(long, value_delimiter = ',', default_value = "2")]
    t_vc: Vec<usize>,
    /// Fit the dual shatter function up to this m
    #[arg(long)]
    dual_fit: Option<usize>,
}

#[derive(Args)]
struct TuranArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
    #[arg(short)]
    t: usize,
}

#[derive(Args)]
struct ColorArgs {
    hypergraph: PathBuf,
    #[arg(long)]
    eps: f64,
    /// Write `pair <u> <v> <color>` lines here
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Input .hg file
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_delimiter = ',')]
    methods: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    eps: Vec<f64>,
    #[arg(long, short = 't', value_delimiter = ',')]
    t: Vec<usize>,
    /// Dimension hint passed to det/direct/lc
    #[arg(long, short = 'd')]
    dim: Option<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Construction(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(AppError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum AppError {
    Usage(String),
    Construction(Error),
    Io(std::io::Error),
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

/// Parse failures exit 2; everything else from the library exits 3.
fn lib_parse(e: Error) -> AppError {
    match e {
        Error::Parse(_) | Error::BadInput(_) => AppError::Usage(e.to_string()),
        other => AppError::Construction(other),
    }
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args, cli.seed, cli.quiet),
        Command::Construct(args) => cmd_construct(args, cli.seed, cli.allow_invalid, cli.quiet),
        Command::Verify(args) => cmd_verify(args, cli.quiet),
        Command::Dims(args) => cmd_dims(args),
        Command::Turan(args) => cmd_turan(args),
        Command::Color(args) => cmd_color(args, cli.seed, cli.quiet),
        Command::Experiment(args) => cmd_experiment(args, cli.seed, cli.quiet),
    }
}

fn parse_kind(s: &str) -> Result<RangeKind, AppError> {
    RangeKind::from_str(s).map_err(|e| AppError::Usage(e.to_string()))
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, AppError> {
    let text = fs::read_to_string(path)?;
    let (h, _) = parse_hg(&text).map_err(lib_parse)?;
    Ok(h)
}

fn load_points(path: &Path) -> Result<PointSet, AppError> {
    let text = fs::read_to_string(path)?;
    geometry::parse_pts(&text).map_err(lib_parse)
}

fn cmd_gen(args: GenArgs, seed: u64, quiet: bool) -> Result<ExitCode, AppError> {
    let need_n = || {
        args.n
            .ok_or_else(|| AppError::Usage("this generator needs --n".into()))
    };
    let mut pts: Option<PointSet> = None;
    let mut hyper: Option<Hypergraph> = None;
    match args.kind.as_str() {
        "grid" => {
            let side = args
                .side
                .ok_or_else(|| AppError::Usage("grid needs --side".into()))?;
            pts = Some(geometry::grid_points(side).map_err(lib_parse)?);
        }
        "random-uniform" => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            pts = Some(
                geometry::random_points(&mut rng, need_n()?, args.extent).map_err(lib_parse)?,
            );
        }
        "staircase" => {
            pts = Some(geometry::staircase(need_n()?).map_err(lib_parse)?);
        }
        "interval" => {
            hyper = Some(tnet_core::gen::interval_hypergraph(need_n()?).map_err(lib_parse)?);
        }
        "file" => {
            let input = args
                .input
                .as_ref()
                .ok_or_else(|| AppError::Usage("file kind needs --input".into()))?;
            pts = Some(load_points(input)?);
        }
        other => return Err(AppError::Usage(format!("unknown generator '{other}'"))),
    }
    if let Some(p) = &pts {
        let path = args.output.with_extension("pts");
        fs::write(&path, geometry::write_pts(p))?;
        if !quiet {
            println!("wrote {} ({} points)", path.display(), p.len());
        }
        if let Some(famname) = &args.family {
            let kind = parse_kind(famname)?;
            let inst = geometry::compile_kind(p, kind).map_err(AppError::Construction)?;
            hyper = Some(inst.hyper);
        }
    }
    if let Some(h) = &hyper {
        let path = args.output.with_extension("hg");
        fs::write(&path, write_hg(h, None))?;
        if !quiet {
            println!(
                "wrote {} (n={} edges={} dedup={})",
                path.display(),
                h.n(),
                h.num_edges(),
                h.is_dedup()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Try the stabbing constructions over a ladder of dimensions when none was
/// supplied, retrying on NoProgress/BadDimension.
fn dim_ladder(
    supplied: Option<usize>,
    start: usize,
    mut attempt: impl FnMut(usize) -> Result<TSubsetFamily, Error>,
) -> Result<TSubsetFamily, Error> {
    if let Some(d) = supplied {
        return attempt(d);
    }
    let mut last = Error::BadDimension("no dimension attempt ran".into());
    for d in start..=8 {
        match attempt(d) {
            Ok(f) => return Ok(f),
            Err(e @ (Error::NoProgress { .. } | Error::BadDimension(_))) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

struct LoadedInstance {
    hyper: Hypergraph,
    points: Option<PointSet>,
    name: String,
}

fn load_instance(input: &Path, family: Option<&str>) -> Result<LoadedInstance, AppError> {
    let name = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into());
    if input.extension().is_some_and(|e| e == "pts") {
        let pts = load_points(input)?;
        let kind = parse_kind(family.unwrap_or("rect"))?;
        let inst: GeometricInstance =
            geometry::compile_kind(&pts, kind).map_err(AppError::Construction)?;
        Ok(LoadedInstance {
            hyper: inst.hyper,
            points: Some(pts),
            name,
        })
    } else {
        Ok(LoadedInstance {
            hyper: load_hypergraph(input)?,
            points: None,
            name,
        })
    }
}

fn run_method(
    method: &str,
    inst: &LoadedInstance,
    eps: f64,
    t: usize,
    dim: Option<usize>,
    seed: u64,
    oversample: f64,
) -> Result<TSubsetFamily, Error> {
    let h = &inst.hyper;
    match method {
        "random" => random_net(h, eps, t, seed, oversample, dim).map(|(f, _)| f),
        "det" => {
            if t != 1 {
                return Err(Error::Domain(
                    "det builds plain epsilon-nets; use t=1".into(),
                ));
            }
            dim_ladder(dim, 1, |d| det_eps_net(h, eps, d).map(|r| r.family))
        }
        "direct" => dim_ladder(dim, t.max(2), |d| {
            direct_eps_t_net(h, eps, t, d).map(|r| r.family)
        }),
        "trivial" => trivial_eps_t_net(h, eps, t).map(|r| r.family),
        "lc" => lc_eps_t_net(h, eps, t, seed, dim).map(|r| r.family),
        "vc1" => vc1_eps_t_net(h, eps, t),
        "exact" => min_net_exact(h, eps, t),
        "frames" => {
            let pts = inst
                .points
                .as_ref()
                .ok_or_else(|| Error::BadInput("frames needs a .pts input".into()))?;
            if t != 2 {
                return Err(Error::Domain("frames builds epsilon-2-nets".into()));
            }
            geometry::frames_eps2net(pts, eps)
        }
        "rects" => {
            let pts = inst
                .points
                .as_ref()
                .ok_or_else(|| Error::BadInput("rects needs a .pts input".into()))?;
            if t != 2 {
                return Err(Error::Domain("rects builds epsilon-2-nets".into()));
            }
            geometry::rectangles_eps2net(pts, eps, seed)
        }
        other => Err(Error::BadInput(format!("unknown method '{other}'"))),
    }
}

/// Verification target: frames/rects verify against their own canonical
/// family, everything else against the loaded hypergraph.
fn verification_hypergraph(method: &str, inst: &LoadedInstance) -> Result<Hypergraph, Error> {
    match (method, &inst.points) {
        ("frames", Some(pts)) => {
            let fam = canonical_ranges(pts, RangeKind::Frame)?;
            Ok(compile(pts, &fam)?.hyper)
        }
        ("rects", Some(pts)) => {
            let fam = canonical_ranges(pts, RangeKind::AxisRect)?;
            Ok(compile(pts, &fam)?.hyper)
        }
        _ => Ok(inst.hyper.clone()),
    }
}

fn cmd_construct(
    args: ConstructArgs,
    seed: u64,
    allow_invalid: bool,
    quiet: bool,
) -> Result<ExitCode, AppError> {
    let inst = load_instance(&args.input, args.family.as_deref())?;
    let start = std::time::Instant::now();
    let family = run_method(
        &args.method,
        &inst,
        args.eps,
        args.t,
        args.dim,
        seed,
        args.oversample,
    )
    .map_err(AppError::Construction)?;
    let verify_against =
        verification_hypergraph(&args.method, &inst).map_err(AppError::Construction)?;
    let mut report = verify_net(&verify_against, args.eps, args.t, &family);
    report.runtime_ms = start.elapsed().as_millis();
    let out = args
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}-{}", inst.name, args.method)));
    let net_path = out.with_extension("net");
    fs::write(&net_path, write_net(&family, args.eps))?;
    let row = report.to_csv_row(&inst.name, &args.method);
    if let Some(csv) = &args.csv {
        append_csv(csv, &row)?;
    }
    if !quiet {
        println!("{}", NetReport::csv_header());
        println!("{row}");
        println!("wrote {}", net_path.display());
    }
    if report.valid || allow_invalid {
        Ok(ExitCode::SUCCESS)
    } else {
        if !quiet {
            if let Some(w) = report.witness {
                println!("invalid: witness edge {w}");
            }
        }
        Ok(ExitCode::from(1))
    }
}

fn append_csv(path: &Path, row: &str) -> Result<(), AppError> {
    let mut text = if path.exists() {
        fs::read_to_string(path)?
    } else {
        format!("{}\n", NetReport::csv_header())
    };
    text.push_str(row);
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn cmd_verify(args: VerifyArgs, quiet: bool) -> Result<ExitCode, AppError> {
    let h = load_hypergraph(&args.hypergraph)?;
    let text = fs::read_to_string(&args.net)?;
    let (family, file_eps) =
        parse_net(&text, h.n()).map_err(|e| AppError::Usage(e.to_string()))?;
    let eps = args.eps.unwrap_or(file_eps);
    let t = args.t.unwrap_or(family.t);
    let report = verify_net(&h, eps, t, &family);
    if report.valid {
        if !quiet {
            println!("valid (size {})", report.size);
        }
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "invalid: witness edge {}",
            report.witness.expect("invalid reports carry a witness")
        );
        Ok(ExitCode::from(1))
    }
}

fn cmd_dims(args: DimsArgs) -> Result<ExitCode, AppError> {
    let h = load_hypergraph(&args.hypergraph)?;
    let vc = vc_dimension(&h).map_err(AppError::Construction)?;
    let mut report = DimensionReport {
        vc,
        dual_vc_bound: 1u64 << (vc + 1),
        t_vc: Default::default(),
        dual_shatter_fit: None,
    };
    for &t in &args.t_vc {
        let v = t_vc_dimension(&h, t).map_err(AppError::Construction)?;
        report.t_vc.insert(t, v);
    }
    if let Some(m) = args.dual_fit {
        report.dual_shatter_fit = Some(dual_shatter_fit(&h, m).map_err(AppError::Construction)?);
    }
    println!("vc {}", report.vc);
    println!("dual_vc_bound {}", report.dual_vc_bound);
    for (t, v) in &report.t_vc {
        println!("t_vc {t} {v}");
    }
    if let Some((c, d_star)) = report.dual_shatter_fit {
        println!("dual_fit_c {c:.6}");
        println!("dual_fit_dstar {d_star:.6}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_turan(args: TuranArgs) -> Result<ExitCode, AppError> {
    let r = check_turan_identity(args.n, args.k, args.t).map_err(AppError::Construction)?;
    println!("n,k,t,turan,min_net,identity");
    println!(
        "{},{},{},{},{},{}",
        r.n, r.k, r.t, r.turan_number, r.min_net_size, r.identity_holds
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_color(args: ColorArgs, seed: u64, quiet: bool) -> Result<ExitCode, AppError> {
    let h = load_hypergraph(&args.hypergraph)?;
    let coloring = rainbow_pair_coloring(&h, args.eps, seed).map_err(AppError::Construction)?;
    let ok = verify_rainbow(&h, args.eps, &coloring);
    if let Some(path) = &args.output {
        let mut text = String::new();
        for (&(u, v), &c) in &coloring.colors {
            let _ = writeln!(text, "pair {u} {v} {c}");
        }
        fs::write(path, text)?;
    }
    if !quiet {
        println!("num_colors {}", coloring.num_colors);
        println!("valid {ok}");
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_experiment(args: ExperimentArgs, seed: u64, quiet: bool) -> Result<ExitCode, AppError> {
    if args.methods.is_empty() || args.eps.is_empty() || args.t.is_empty() {
        return Err(AppError::Usage(
            "experiment needs nonempty --methods, --eps and --t lists".into(),
        ));
    }
    let inst = load_instance(&args.input, None)?;
    // runtime_ms is omitted: a fixed spec and seed must give identical bytes
    let mut csv = String::from("instance,method,eps,t,size,valid\n");
    let mut cell = 0u64;
    for method in &args.methods {
        for &eps in &args.eps {
            for &t in &args.t {
                cell += 1;
                let cell_seed = seed.wrapping_add(cell);
                let outcome = run_method(method, &inst, eps, t, args.dim, cell_seed, 1.0);
                let line = match outcome {
                    Ok(family) => {
                        let rep = verify_net(&inst.hyper, eps, t, &family);
                        format!("{},{method},{eps},{t},{},{}", inst.name, rep.size, rep.valid)
                    }
                    Err(e) => format!("{},{method},{eps},{t},0,error:{}", inst.name, e.name()),
                };
                csv.push_str(&line);
                csv.push('\n');
            }
        }
    }
    match &args.output {
        Some(path) => fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    if !quiet {
        if let Some(path) = &args.output {
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}
