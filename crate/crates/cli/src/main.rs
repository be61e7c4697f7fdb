//! command line front end: loads module files, runs the analyses, and
//! emits human-readable or JSON reports with deterministic bytes and
//! scripting-friendly exit codes.
//!
//! exit codes: 0 success (for verdict subcommands: property holds /
//! constant), 1 property fails / not constant, 2 inconclusive, 64 usage,
//! 65 input parse error, 66 missing input or validation failure, 70
//! resource limit without a fallback verdict.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use superjordan::format::{
    parse_point, rational_to_string, read_module_file, write_module_file, FormatError, ModuleFile,
};
use superjordan::jordan::{free_rank, CERT_SEED, FALLBACK_SAMPLES};
use superjordan::recipe::{parse_recipe, RecipeError};
use superjordan::sample::PointSampler;
use superjordan::theta::MAX_WINDOW_DEGREE;
use superjordan::{
    certify_bundle, check_cjt, fiber_functors, graded_window_dims, indecomposability,
    is_endotrivial, is_projective, jordan_type_at, strata, AlgebraSpec, BundleVerdict, CjtReport,
    CjtVerdict, Cone, FiberReport, IndecompVerdict, JordanType, Limits, Method, ModuleError,
    OddPoint, ResourceError, Supermodule,
};

const SCHEMA: &str = "superjordan-report/1";
const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
const DEFAULT_SAMPLES: usize = 200;
/// ideals larger than this are reported by size only.
const MAX_IDEAL_LISTING: usize = 32;

#[derive(Parser)]
#[command(
    name = "superjordan",
    version,
    about = "super Jordan types, constancy certificates, projectivity and endotriviality \
             tests, module constructions, and bundle fibers for supermodules over sl(1|1)^r \
             and exterior superalgebras",
    max_term_width = 100
)]
struct Cli {
    /// cap on the number of minors enumerated per certificate step
    #[arg(long, global = true, value_name = "N")]
    max_minors: Option<usize>,

    /// cap on Groebner S-pair reductions (also scales the symbolic
    /// elimination budget)
    #[arg(long, global = true, value_name = "N")]
    max_spairs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// check the superalgebra relations of a module file
    Validate {
        file: PathBuf,
    },
    /// Jordan type of the module at one point
    JordanType {
        file: PathBuf,
        /// point expression, e.g. "x1 + 2*y1" or "z1 - 1/2*z2"
        #[arg(long, value_name = "EXPR")]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// decide whether the Jordan type is constant across the cone
    CheckCjt {
        file: PathBuf,
        #[arg(long, value_enum)]
        cone: ConeArg,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// points per chart for --method sample
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// decide projectivity (freeness)
    Projective {
        file: PathBuf,
    },
    /// decide endotriviality by two independent routes
    Endotrivial {
        file: PathBuf,
    },
    /// decide indecomposability via the even endomorphism algebra
    Indecomposable {
        file: PathBuf,
    },
    /// build a module from a recipe and write it to a file
    Construct {
        /// e.g. "tensor(kac0, dual(kac0))", "omega(trivial(ev), 2)", "w(3)"
        recipe: String,
        #[arg(short, long, value_name = "OUT")]
        output: PathBuf,
        /// algebra context for leaves that need one (sl11, f_r, exterior(s))
        #[arg(long, value_name = "ALG")]
        algebra: Option<String>,
    },
    /// restrict a module to a subalgebra and write it to a file
    Restrict {
        file: PathBuf,
        /// comma-separated generator names, e.g. "z1,z2" or "t1,x1,y1"
        #[arg(long, value_name = "LIST")]
        generators: String,
        #[arg(short, long, value_name = "OUT")]
        output: PathBuf,
    },
    /// certify the constant-fiber-rank (vector bundle) criterion
    Bundle {
        file: PathBuf,
        /// also report fibers at N seeded points
        #[arg(long, value_name = "N")]
        fibers: Option<usize>,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// inclusive degree window A..B (within 0..8) of graded
        /// kernel/image dimensions
        #[arg(long, value_name = "A..B")]
        window: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ConeArg {
    Weak,
    Strong,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Certify,
    Sample,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Format(FormatError),
    Module(ModuleError),
    Recipe(RecipeError),
    Resource(ResourceError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Format(e) => write!(f, "{e}"),
            CliError::Module(e) => write!(f, "{e}"),
            CliError::Recipe(e) => write!(f, "{e}"),
            CliError::Resource(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Format(FormatError::Io { .. }) => 66,
            CliError::Format(_) => 65,
            CliError::Module(ModuleError::RangeTooLarge(_)) => 64,
            CliError::Module(_) => 66,
            CliError::Recipe(RecipeError::Parse { .. }) => 65,
            CliError::Recipe(RecipeError::File(FormatError::Io { .. })) => 66,
            CliError::Recipe(RecipeError::File(_)) => 65,
            CliError::Recipe(RecipeError::Module(_)) => 66,
            CliError::Resource(_) => 70,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        CliError::Module(e)
    }
}

impl From<RecipeError> for CliError {
    fn from(e: RecipeError) -> Self {
        CliError::Recipe(e)
    }
}

impl From<ResourceError> for CliError {
    fn from(e: ResourceError) -> Self {
        CliError::Resource(e)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let defaults = Limits::default();
    let limits = Limits {
        max_minors: cli.max_minors.unwrap_or(defaults.max_minors),
        max_spairs: cli.max_spairs.unwrap_or(defaults.max_spairs),
    };
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::JordanType { file, point, json } => cmd_jordan_type(&file, &point, json),
        Command::CheckCjt { file, cone, method, samples, seed, json } => {
            cmd_check_cjt(&file, cone, method, samples, seed, json, &limits)
        }
        Command::Projective { file } => cmd_projective(&file),
        Command::Endotrivial { file } => cmd_endotrivial(&file, &limits),
        Command::Indecomposable { file } => cmd_indecomposable(&file),
        Command::Construct { recipe, output, algebra } => {
            cmd_construct(&recipe, &output, algebra.as_deref())
        }
        Command::Restrict { file, generators, output } => {
            cmd_restrict(&file, &generators, &output)
        }
        Command::Bundle { file, fibers, seed, window, json } => {
            cmd_bundle(&file, fibers, seed, window.as_deref(), json, &limits)
        }
    }
}

fn load(path: &Path) -> Result<ModuleFile, CliError> {
    Ok(read_module_file(path)?)
}

fn load_valid(path: &Path) -> Result<Supermodule, CliError> {
    let mf = load(path)?;
    mf.module.ensure_valid()?;
    Ok(mf.module)
}

fn print_json(mut map: Map<String, Value>) {
    map.insert("schema".to_string(), json!(SCHEMA));
    map.insert("tool_version".to_string(), json!(TOOL_VERSION));
    let text = serde_json::to_string_pretty(&Value::Object(map))
        .expect("report serialization cannot fail");
    println!("{text}");
}

fn module_summary(m: &Supermodule) -> String {
    format!("{} module, dim {} {}", m.algebra(), m.dim(), m.superdim())
}

fn module_json(path: &Path, m: &Supermodule) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("file".to_string(), json!(path.display().to_string()));
    map.insert("algebra".to_string(), json!(m.algebra().to_string()));
    map.insert("dim".to_string(), json!(m.dim()));
    map.insert(
        "superdim".to_string(),
        json!({"even": m.superdim().even, "odd": m.superdim().odd}),
    );
    map
}

fn type_json(t: &JordanType) -> Value {
    json!({
        "a_ev": t.a_ev,
        "a_od": t.a_od,
        "a2": t.a2,
        "display": t.to_string(),
    })
}

fn point_json(p: &OddPoint) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(rational_to_string).collect();
    json!({
        "display": p.to_string(),
        "coeffs": coeffs,
        "in_weak_cone": p.in_weak_cone(),
    })
}

fn fiber_json(r: &FiberReport) -> Value {
    json!({
        "point": point_json(&r.point),
        "f1": {"even": r.f1_dims.even, "odd": r.f1_dims.odd},
        "f2": r.f2_dim,
    })
}

/// per-chart certificate records, with the minors listed when few enough.
fn strata_json(algebra: &AlgebraSpec, report: &CjtReport) -> Value {
    let charts = strata(algebra, report.cone);
    let names = algebra.coeff_var_names();
    let rows: Vec<Value> = report
        .strata
        .iter()
        .zip(&charts)
        .map(|(cert, chart)| {
            debug_assert_eq!(cert.label, chart.label);
            let vars: Vec<&str> =
                chart.gen_indices.iter().map(|&i| names[i].as_str()).collect();
            let mut row = Map::new();
            row.insert("label".to_string(), json!(cert.label));
            row.insert("generic_rank".to_string(), json!(cert.generic_rank));
            row.insert("ideal_size".to_string(), json!(cert.minors.len()));
            if cert.minors.len() <= MAX_IDEAL_LISTING {
                let gens: Vec<String> =
                    cert.minors.iter().map(|p| p.display_with(&vars)).collect();
                row.insert("ideal".to_string(), Value::Array(gens.into_iter().map(Value::String).collect()));
            }
            row.insert(
                "vanishes_only_at_origin".to_string(),
                json!(cert.vanishes_only_at_origin),
            );
            Value::Object(row)
        })
        .collect();
    Value::Array(rows)
}

fn print_strata(algebra: &AlgebraSpec, report: &CjtReport) {
    let charts = strata(algebra, report.cone);
    let names = algebra.coeff_var_names();
    for (cert, chart) in report.strata.iter().zip(&charts) {
        let vars: Vec<&str> = chart.gen_indices.iter().map(|&i| names[i].as_str()).collect();
        let ideal = if cert.minors.is_empty() {
            "zero ideal".to_string()
        } else if cert.minors.len() <= 6 {
            let gens: Vec<String> = cert.minors.iter().map(|p| p.display_with(&vars)).collect();
            format!("ideal <{}>", gens.join(", "))
        } else {
            format!("ideal with {} generators", cert.minors.len())
        };
        println!(
            "  chart {}: generic rank {}, {}, vanishes only at origin: {}",
            cert.label,
            cert.generic_rank,
            ideal,
            if cert.vanishes_only_at_origin { "yes" } else { "no" }
        );
    }
}

fn cmd_validate(file: &Path) -> Result<i32, CliError> {
    let mf = load(file)?;
    let violations = mf.module.validate();
    println!("{}", module_summary(&mf.module));
    if violations.is_empty() {
        println!("valid: all superalgebra relations hold");
    } else {
        println!("invalid: {} violation(s)", violations.len());
        for v in &violations {
            println!("  {v}");
        }
    }
    if let Some(stated) = mf.stated_valid {
        if stated != violations.is_empty() {
            println!(
                "note: the file claims valid: {stated}, which disagrees with the check"
            );
        }
    }
    Ok(if violations.is_empty() { 0 } else { 66 })
}

fn cmd_jordan_type(file: &Path, point_text: &str, json: bool) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let p = parse_point(point_text, m.algebra())?;
    let t = jordan_type_at(&m, &p)?;
    if json {
        let mut map = module_json(file, &m);
        map.insert("command".to_string(), json!("jordan-type"));
        map.insert("point".to_string(), point_json(&p));
        map.insert("jordan_type".to_string(), type_json(&t));
        map.insert(
            "fiber".to_string(),
            json!({"even": t.fiber().even, "odd": t.fiber().odd}),
        );
        print_json(map);
    } else {
        println!("{t}");
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check_cjt(
    file: &Path,
    cone: ConeArg,
    method: MethodArg,
    samples: usize,
    seed: u64,
    json: bool,
    limits: &Limits,
) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let cone = match cone {
        ConeArg::Weak => Cone::Weak,
        ConeArg::Strong => Cone::Strong,
    };
    let method = match method {
        MethodArg::Certify => Method::Certified,
        MethodArg::Sample => Method::Sampled { samples, seed },
    };
    let report = check_cjt(&m, cone, method, limits)?;
    let exit = match &report.verdict {
        CjtVerdict::Constant(_) => 0,
        CjtVerdict::NotConstant { .. } => 1,
        CjtVerdict::Inconclusive { .. } => 2,
    };
    if json {
        let mut map = module_json(file, &m);
        map.insert("command".to_string(), json!("check-cjt"));
        map.insert("cone".to_string(), json!(report.cone.to_string()));
        let (method_name, samples_v, seed_v) = match &report.method {
            Method::Certified => ("certified", Value::Null, Value::Null),
            Method::Sampled { samples, seed } => ("sampled", json!(samples), json!(seed)),
        };
        map.insert("method".to_string(), json!(method_name));
        map.insert("samples".to_string(), samples_v);
        map.insert("seed".to_string(), seed_v);
        match &report.verdict {
            CjtVerdict::Constant(t) => {
                map.insert("verdict".to_string(), json!("constant"));
                map.insert("jordan_type".to_string(), type_json(t));
            }
            CjtVerdict::NotConstant { witness1, type1, witness2, type2 } => {
                map.insert("verdict".to_string(), json!("not_constant"));
                map.insert(
                    "witnesses".to_string(),
                    json!([
                        {"point": point_json(witness1), "jordan_type": type_json(type1)},
                        {"point": point_json(witness2), "jordan_type": type_json(type2)},
                    ]),
                );
            }
            CjtVerdict::Inconclusive { reason } => {
                map.insert("verdict".to_string(), json!("inconclusive"));
                map.insert("reason".to_string(), json!(reason));
            }
        }
        map.insert(
            "generic_rank".to_string(),
            report.generic_rank.map(|g| json!(g)).unwrap_or(Value::Null),
        );
        map.insert("strata".to_string(), strata_json(m.algebra(), &report));
        print_json(map);
    } else {
        println!("{}", module_summary(&m));
        println!("cone: {}  method: {}", report.cone, report.method);
        match &report.verdict {
            CjtVerdict::Constant(t) => println!("verdict: constant Jordan type {t}"),
            CjtVerdict::NotConstant { witness1, type1, witness2, type2 } => {
                println!("verdict: not constant");
                println!("  witness {witness1}: type {type1}");
                println!("  witness {witness2}: type {type2}");
            }
            CjtVerdict::Inconclusive { reason } => {
                println!("verdict: inconclusive ({reason})");
            }
        }
        print_strata(m.algebra(), &report);
    }
    Ok(exit)
}

fn cmd_projective(file: &Path) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let projective = is_projective(&m)?;
    let rank = free_rank(&m)?;
    let scale = 1usize << m.algebra().num_odd();
    println!("{}", module_summary(&m));
    if projective {
        println!("projective: true");
        println!("  dim {} = {scale} x free rank {rank}", m.dim());
    } else {
        println!("projective: false");
        println!(
            "  free part accounts for {} of dim {} ({scale} x free rank {rank})",
            scale * rank,
            m.dim()
        );
    }
    Ok(if projective { 0 } else { 1 })
}

fn cmd_endotrivial(file: &Path, limits: &Limits) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let r = is_endotrivial(&m, limits)?;
    println!("{}", module_summary(&m));
    println!("endotrivial: {}", r.endotrivial);
    let route1 = match (&r.cjt_report.verdict, r.probabilistic) {
        (CjtVerdict::Constant(t), false) => {
            format!("certified constant type {t}, stable part {}", t.a1())
        }
        (CjtVerdict::Constant(t), true) => format!(
            "sampled constant type {t} over {FALLBACK_SAMPLES} points (seed {CERT_SEED}), \
             probabilistic"
        ),
        (CjtVerdict::NotConstant { .. }, _) => "not of constant type".to_string(),
        (CjtVerdict::Inconclusive { reason }, _) => format!("inconclusive ({reason})"),
    };
    println!("  constant-type route: {} -> {}", route1, verdict_word(r.cjt_route));
    println!(
        "  hom route (Hom(M, M) = k + projective): {}",
        verdict_word(r.hom_route)
    );
    if r.cjt_route != r.hom_route {
        println!("  warning: the two routes disagree");
    }
    if !r.sdim_squares {
        println!("  warning: superdim of Hom(M, M) is not superdim(M)^2");
    }
    Ok(if r.endotrivial { 0 } else { 1 })
}

fn verdict_word(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_indecomposable(file: &Path) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let r = indecomposability(&m)?;
    println!("{}", module_summary(&m));
    println!(
        "even endomorphism algebra: dim {}, trace-form radical {}, semisimple quotient {}",
        r.end_dim,
        r.radical_dim,
        r.end_dim - r.radical_dim
    );
    match &r.verdict {
        IndecompVerdict::Indecomposable => {
            println!("indecomposable: true");
            Ok(0)
        }
        IndecompVerdict::Decomposable { idempotent } => {
            println!("indecomposable: false");
            let entries: Vec<String> = idempotent
                .entries()
                .map(|(i, j, v)| format!("[{i}, {j}, {}]", rational_to_string(v)))
                .collect();
            println!("  splitting idempotent: {}", entries.join(" "));
            Ok(1)
        }
        IndecompVerdict::Inconclusive { reason } => {
            println!("indecomposable: inconclusive ({reason})");
            Ok(2)
        }
    }
}

fn cmd_construct(
    recipe_text: &str,
    output: &Path,
    algebra_text: Option<&str>,
) -> Result<i32, CliError> {
    let recipe = parse_recipe(recipe_text)?;
    let algebra = match algebra_text {
        None => None,
        Some(t) => Some(AlgebraSpec::parse(t).ok_or_else(|| {
            CliError::Usage(format!(
                "--algebra must be sl11, f_r, or exterior(s); got `{t}`"
            ))
        })?),
    };
    let m = recipe.eval(Path::new("."), algebra.as_ref())?;
    let valid = m.validate().is_empty();
    write_module_file(output, &m, Some(valid))?;
    println!("wrote {}: {}", output.display(), module_summary(&m));
    Ok(0)
}

fn cmd_restrict(file: &Path, generators: &str, output: &Path) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let gens: Vec<String> = generators
        .split(',')
        .map(|g| g.trim().to_string())
        .filter(|g| !g.is_empty())
        .collect();
    if gens.is_empty() {
        return Err(CliError::Usage(
            "--generators needs a comma-separated list of generator names".to_string(),
        ));
    }
    let restricted = superjordan::restrict_to_subalgebra(&m, &gens)?;
    let valid = restricted.validate().is_empty();
    write_module_file(output, &restricted, Some(valid))?;
    println!(
        "wrote {}: restricted to [{}], {}",
        output.display(),
        gens.join(", "),
        module_summary(&restricted)
    );
    Ok(0)
}

fn parse_window(text: &str) -> Result<(usize, usize), CliError> {
    let err = || {
        CliError::Usage(format!(
            "--window must be an inclusive range A..B within 0..{MAX_WINDOW_DEGREE}; got `{text}`"
        ))
    };
    let (lo, hi) = text.split_once("..").ok_or_else(err)?;
    let lo: usize = lo.trim().parse().map_err(|_| err())?;
    let hi: usize = hi.trim().parse().map_err(|_| err())?;
    Ok((lo, hi))
}

fn cmd_bundle(
    file: &Path,
    fibers: Option<usize>,
    seed: u64,
    window: Option<&str>,
    json: bool,
    limits: &Limits,
) -> Result<i32, CliError> {
    let m = load_valid(file)?;
    let report = certify_bundle(&m, limits)?;
    let fiber_rows: Option<Vec<FiberReport>> = match fibers {
        None => None,
        Some(n) => {
            let mut sampler = PointSampler::new(seed);
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                let p = sampler.strong_point(m.algebra());
                rows.push(fiber_functors(&m, &p)?);
            }
            Some(rows)
        }
    };
    let window_rows = match window {
        None => None,
        Some(text) => {
            let (lo, hi) = parse_window(text)?;
            Some(graded_window_dims(&m, lo, hi)?)
        }
    };
    let exit = match &report.verdict {
        BundleVerdict::Bundle { .. } => 0,
        BundleVerdict::NotBundle { .. } => 1,
        BundleVerdict::Inconclusive { .. } => 2,
    };
    if json {
        let mut map = module_json(file, &m);
        map.insert("command".to_string(), json!("bundle"));
        map.insert("seed".to_string(), json!(seed));
        match &report.verdict {
            BundleVerdict::Bundle { f1, f2 } => {
                map.insert("verdict".to_string(), json!("bundle"));
                map.insert(
                    "f1".to_string(),
                    json!({"even": f1.even, "odd": f1.odd}),
                );
                map.insert("f2".to_string(), json!(f2));
            }
            BundleVerdict::NotBundle { witness1, witness2 } => {
                map.insert("verdict".to_string(), json!("not_bundle"));
                map.insert(
                    "witnesses".to_string(),
                    json!([fiber_json(witness1), fiber_json(witness2)]),
                );
            }
            BundleVerdict::Inconclusive { reason } => {
                map.insert("verdict".to_string(), json!("inconclusive"));
                map.insert("reason".to_string(), json!(reason));
            }
        }
        map.insert(
            "generic_rank".to_string(),
            report.cjt.generic_rank.map(|g| json!(g)).unwrap_or(Value::Null),
        );
        map.insert("strata".to_string(), strata_json(m.algebra(), &report.cjt));
        if let Some(rows) = &fiber_rows {
            map.insert(
                "fibers".to_string(),
                Value::Array(rows.iter().map(fiber_json).collect()),
            );
        }
        if let Some(rows) = &window_rows {
            let table: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "degree": r.degree,
                        "ker": r.ker_dim,
                        "im": r.im_dim,
                        "f1": r.f1_dim,
                    })
                })
                .collect();
            map.insert("window".to_string(), Value::Array(table));
        }
        print_json(map);
    } else {
        println!("{}", module_summary(&m));
        match &report.verdict {
            BundleVerdict::Bundle { f1, f2 } => {
                println!("verdict: bundle with f1 = {f1}, f2 rank {f2}");
            }
            BundleVerdict::NotBundle { witness1, witness2 } => {
                println!("verdict: not a bundle");
                println!(
                    "  witness {}: f1 {}, f2 {}",
                    witness1.point, witness1.f1_dims, witness1.f2_dim
                );
                println!(
                    "  witness {}: f1 {}, f2 {}",
                    witness2.point, witness2.f1_dims, witness2.f2_dim
                );
            }
            BundleVerdict::Inconclusive { reason } => {
                println!("verdict: inconclusive ({reason})");
            }
        }
        print_strata(m.algebra(), &report.cjt);
        if let Some(rows) = &fiber_rows {
            println!("fibers at {} seeded points (seed {seed}):", rows.len());
            for r in rows {
                println!("  point {}: f1 {}, f2 {}", r.point, r.f1_dims, r.f2_dim);
            }
        }
        if let Some(rows) = &window_rows {
            println!("graded window (degree: ker, im, f1):");
            for r in rows {
                println!(
                    "  {}: ker {}, im {}, f1 {}",
                    r.degree, r.ker_dim, r.im_dim, r.f1_dim
                );
            }
        }
    }
    Ok(exit)
}
