use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use quandle_cli::acceptance;
use quandle_core::algebra::{classify, from_spec, FiniteQuandle};
use quandle_core::chains::{ComplexSpec, Limits, Theory};
use quandle_core::coloring::{
    coloring_orbits, enumerate_colorings_with, enumerate_shadow_colorings, fundamental_presentation, shadow_orbits, ColoringOptions,
};
use quandle_core::corpus;
use quandle_core::diagram::OrientedDiagram;
use quandle_core::homology::{cocycle_basis, homology, twisted_cocycle_basis, twisted_homology_dimension, Cochain};
use quandle_core::invariants::{
    build_generic_chain, state_sum, states, verify_move_invariance, ChainMode, CycleClassifier, InvariantValue, MoveCheckInputs, StateSumOptions,
};
use quandle_core::json::{parse_cocycle, parse_crossing_data, parse_ring, parse_twisted_cocycle};
use quandle_core::ring::{IntegersMod, LaurentQuotient, Ring};
use quandle_core::Error;

const SPEC_HELP: &str = "\
Quandle specs (--quandle):
  trivial:K            a*b = a on K elements
  dihedral:K           a*b = 2b - a mod K
  takasaki:K           same table as dihedral:K
  alexander:M:T        a*b = T*a + (1-T)*b mod M, T a unit
  conjugation:S3       a*b = b^-1 a b in S3 (also conjugation:ZN)
  file:PATH            JSON {\"name\", \"order\", \"table\"}

Diagrams (--diagram) are JSON files {\"pd\": [[a,b,c,d], ...], \"unbounded_face\": [edge ids]}
or corpus:NAME for a bundled diagram (see `quandle diagram list`).

Exit codes: 0 success, 1 domain error, 2 usage error.
QUANDLE_MAX_BASIS overrides the basis-size guard.";

#[derive(Parser)]
#[command(name = "quandle", version, about = "Rack and quandle homology, knot colorings and cocycle invariants", after_help = SPEC_HELP)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest chain basis to build (overrides QUANDLE_MAX_BASIS).
    #[arg(long, global = true)]
    max_basis: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a quandle file; exit 0 iff it is a quandle.
    Validate { file: PathBuf },
    /// Rack, degenerate or quandle homology.
    Homology(HomologyArgs),
    /// Diagram inspection.
    #[command(subcommand)]
    Diagram(DiagramCommand),
    /// Count (shadow) colorings and their orbits.
    Color(ColorArgs),
    /// Cocycle state sums, cycle classes and chains from crossing data.
    Invariant(InvariantArgs),
    /// Check invariance across Reidemeister move pairs.
    VerifyMoves(VerifyArgs),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(long)]
    quandle: String,
    /// R, D or Q.
    #[arg(long, default_value = "Q")]
    theory: String,
    #[arg(long)]
    degree: usize,
    /// Ring file for the twisted complex; must be a field.
    #[arg(long)]
    twisted: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DiagramCommand {
    /// Crossings, arcs, faces, signs and Alexander numbering.
    Info { diagram: String },
    /// Names of the bundled diagrams.
    List,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    quandle: String,
    /// Also color the regions.
    #[arg(long)]
    shadow: bool,
    /// Print the orbit sizes.
    #[arg(long)]
    orbits: bool,
    /// List every coloring.
    #[arg(long)]
    list: bool,
    /// Ignore orientations (the quandle must be a kei).
    #[arg(long)]
    unoriented: bool,
    /// Print the fundamental quandle presentation.
    #[arg(long)]
    presentation: bool,
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(long, required_unless_present = "crossing_data")]
    diagram: Option<String>,
    /// Abstract crossing data instead of a diagram.
    #[arg(long, conflicts_with = "diagram")]
    crossing_data: Option<PathBuf>,
    #[arg(long)]
    quandle: String,
    #[arg(long)]
    cocycle: Option<PathBuf>,
    #[arg(long)]
    shadow: bool,
    #[arg(long)]
    reduced: bool,
    /// Ring file; the cocycle takes values in it.
    #[arg(long)]
    twisted: Option<PathBuf>,
    /// Only crossings whose under strand lies on this component.
    #[arg(long)]
    component: Option<usize>,
    /// Report the set of values instead of the multiset.
    #[arg(long)]
    set: bool,
    /// Print the homology class of each state's cycle.
    #[arg(long)]
    classes: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Quandles to test (repeatable). Defaults to dihedral:3, dihedral:5, alexander:4:3 and trivial:2.
    #[arg(long)]
    quandle: Vec<String>,
    /// Restrict to pairs whose name contains this string.
    #[arg(long)]
    filter: Option<String>,
    /// Prime for the cocycle bases; defaults to the smallest prime dividing the quandle order.
    #[arg(long)]
    prime: Option<u64>,
    /// Also check twisted cycles and state sums over Z_3[t]/(1+t+t^2).
    #[arg(long)]
    twisted: bool,
    /// Seed for the random cocycle combinations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run only these criteria (repeatable).
    #[arg(long)]
    criterion: Vec<usize>,
    /// Seed for randomized cocycle choices.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Output already printed; exit 1.
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::from_env();
    if let Some(m) = cli.max_basis {
        limits.max_basis = m;
    }
    let ctx = Ctx { json: cli.json, limits };
    let result = match cli.command {
        Command::Validate { file } => validate(&ctx, &file),
        Command::Homology(a) => homology_cmd(&ctx, &a),
        Command::Diagram(DiagramCommand::Info { diagram }) => diagram_info(&ctx, &diagram),
        Command::Diagram(DiagramCommand::List) => diagram_list(&ctx),
        Command::Color(a) => color(&ctx, &a),
        Command::Invariant(a) => invariant(&ctx, &a),
        Command::VerifyMoves(a) => verify_moves(&ctx, &a),
        Command::Selftest(a) => selftest(&ctx, &a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    json: bool,
    limits: Limits,
}

impl Ctx {
    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_quandle(spec: &str) -> std::result::Result<FiniteQuandle, Failure> {
    match spec.strip_prefix("file:") {
        Some(path) => Ok(FiniteQuandle::from_json(&read(Path::new(path))?)?),
        None => from_spec(spec).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn load_diagram(arg: &str) -> std::result::Result<OrientedDiagram, Failure> {
    match arg.strip_prefix("corpus:") {
        Some(name) => corpus::diagram(name).map_err(|e| Failure::Usage(e.to_string())),
        None => Ok(OrientedDiagram::from_json_str(&read(Path::new(arg))?)?),
    }
}

fn parse_theory(s: &str) -> std::result::Result<Theory, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn validate(ctx: &Ctx, file: &Path) -> Outcome {
    let text = read(file)?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Error::format(format!("quandle file: {e}")))?;
    let table: Vec<Vec<usize>> = serde_json::from_value(doc.get("table").cloned().unwrap_or(Value::Null))
        .map_err(|e| Error::format(format!("quandle file needs an integer \"table\": {e}")))?;
    let flags = classify(&table)?;
    let why = if flags.quandle { None } else { FiniteQuandle::from_json(&text).and_then(|q| q.require_quandle()).err() };
    ctx.emit(json!({"order": table.len(), "classification": flags, "reason": why.as_ref().map(ToString::to_string)}), || {
        let mut s = format!("order {}: {flags}", table.len());
        if let Some(e) = &why {
            s.push_str(&format!("\n{e}"));
        }
        s
    });
    if flags.quandle {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn homology_cmd(ctx: &Ctx, a: &HomologyArgs) -> Outcome {
    let theory = parse_theory(&a.theory)?;
    let q = load_quandle(&a.quandle)?;
    if let Some(path) = &a.twisted {
        let ring = parse_ring(&read(path)?)?;
        let spec = ComplexSpec::new(&q, theory, true, ring.clone())?;
        let dim = twisted_homology_dimension(&spec, a.degree, &ctx.limits)?;
        ctx.emit(json!({"degree": a.degree, "theory": theory.to_string(), "ring": ring.tag(), "dimension": dim}), || {
            format!("dim H_{}^T{theory} over {} = {dim}", a.degree, ring.tag())
        });
        return Ok(());
    }
    let spec = ComplexSpec::untwisted(&q, theory, quandle_core::ring::Integers)?;
    let h = homology(&spec, a.degree, &ctx.limits)?;
    ctx.emit(h.to_json(), || h.to_string());
    Ok(())
}

fn diagram_info(ctx: &Ctx, arg: &str) -> Outcome {
    let d = load_diagram(arg)?;
    let s = d.summary();
    ctx.emit(serde_json::to_value(&s).expect("serializable"), || s.to_string().trim_end().to_string());
    Ok(())
}

fn diagram_list(ctx: &Ctx) -> Outcome {
    let all = corpus::diagrams()?;
    let value = all.iter().map(|d| json!({"name": d.name, "description": d.description, "crossings": d.diagram.crossing_count()})).collect();
    ctx.emit(Value::Array(value), || {
        all.iter().map(|d| format!("{:<14} {:>2} crossings  {}", d.name, d.diagram.crossing_count(), d.description)).collect::<Vec<_>>().join("\n")
    });
    Ok(())
}

fn sizes(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut s: Vec<usize> = orbits.iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

fn color(ctx: &Ctx, a: &ColorArgs) -> Outcome {
    let d = load_diagram(&a.diagram)?;
    let q = load_quandle(&a.quandle)?;
    let colorings = enumerate_colorings_with(&d, &q, ColoringOptions { unoriented: a.unoriented })?;
    let orbits = coloring_orbits(&colorings, &q)?;
    let mut value = json!({"colorings": colorings.len(), "orbits": orbits.len()});
    let mut text = format!("colorings: {}, orbits: {}", colorings.len(), orbits.len());
    if a.orbits {
        value["orbit_sizes"] = json!(sizes(&orbits));
        text.push_str(&format!("\norbit sizes: {:?}", sizes(&orbits)));
    }
    if a.list {
        value["list"] = json!(colorings.iter().map(|c| c.arcs().to_vec()).collect::<Vec<_>>());
        for c in &colorings {
            text.push_str(&format!("\n  {c}"));
        }
    }
    if a.shadow {
        if a.unoriented {
            return Err(Failure::Usage("--shadow and --unoriented cannot be combined".into()));
        }
        let shadows = enumerate_shadow_colorings(&d, &q, None)?;
        let sorbits = shadow_orbits(&shadows, &q, None)?;
        value["shadow_colorings"] = json!(shadows.len());
        value["shadow_orbits"] = json!(sorbits.len());
        text.push_str(&format!("\nshadow colorings: {}, orbits: {}", shadows.len(), sorbits.len()));
        if a.orbits {
            value["shadow_orbit_sizes"] = json!(sizes(&sorbits));
            text.push_str(&format!("\nshadow orbit sizes: {:?}", sizes(&sorbits)));
        }
        if a.list {
            value["shadow_list"] = json!(shadows.iter().map(|s| json!({"arcs": s.coloring.arcs(), "faces": s.faces})).collect::<Vec<_>>());
            for s in &shadows {
                text.push_str(&format!("\n  {s}"));
            }
        }
    }
    if a.presentation {
        let p = fundamental_presentation(&d);
        value["presentation"] = serde_json::to_value(&p).expect("serializable");
        text.push_str(&format!("\n{p}"));
    }
    ctx.emit(value, || text);
    Ok(())
}

fn print_value<R: Ring>(ctx: &Ctx, v: &InvariantValue<R>) {
    for w in &v.warnings {
        eprintln!("warning: {w}");
    }
    ctx.emit(v.to_json(), || v.to_string());
}

fn invariant(ctx: &Ctx, a: &InvariantArgs) -> Outcome {
    let q = load_quandle(&a.quandle)?;
    if let Some(path) = &a.crossing_data {
        return crossing_data(ctx, a, &q, path);
    }
    let d = load_diagram(a.diagram.as_deref().expect("clap requires --diagram"))?;
    if a.classes {
        if a.twisted.is_some() || a.component.is_some() {
            return Err(Failure::Usage("--classes works for plain and shadow cycles only".into()));
        }
        let classifier = CycleClassifier::new(&q, a.shadow, &ctx.limits)?;
        let mut rows = Vec::new();
        for s in states(&d, &q, a.shadow)? {
            rows.push((s.to_string(), classifier.classify(&d, &s)?));
        }
        let value = json!({
            "group": classifier.group.to_json(),
            "classes": rows.iter().map(|(s, c)| json!({"state": s, "class": c.to_string(), "zero": c.is_zero()})).collect::<Vec<_>>(),
        });
        ctx.emit(value, || {
            let mut t = classifier.group.to_string();
            for (s, c) in &rows {
                t.push_str(&format!("\n  {s}: {c}"));
            }
            t
        });
        if a.cocycle.is_none() {
            return Ok(());
        }
    }
    let path = a.cocycle.as_ref().ok_or_else(|| Failure::Usage("--cocycle is required (or use --classes)".into()))?;
    let opts = StateSumOptions { shadow: a.shadow, reduced: a.reduced, component: a.component, twisted: a.twisted.is_some(), set_valued: a.set };
    let text = read(path)?;
    match &a.twisted {
        Some(ring_path) => {
            let ring = parse_ring(&read(ring_path)?)?;
            let f = parse_twisted_cocycle(&text, &ring, q.order())?;
            print_value(ctx, &state_sum(&d, &q, &f, &opts)?);
        }
        None => {
            let f = parse_cocycle(&text, q.order())?;
            print_value(ctx, &state_sum(&d, &q, &f, &opts)?);
        }
    }
    Ok(())
}

fn crossing_data(ctx: &Ctx, a: &InvariantArgs, q: &FiniteQuandle, path: &Path) -> Outcome {
    let data = parse_crossing_data(&read(path)?)?;
    let mode = ChainMode { shadow: a.shadow, twisted: false, component: a.component };
    let n = data.first().map(|d| d.colors.len()).ok_or_else(|| Error::parameter("crossing data is empty"))?;
    if a.twisted.is_some() {
        return Err(Failure::Usage("twisted chains from crossing data are not supported on the command line".into()));
    }
    let report = build_generic_chain(n, q, &data, mode)?;
    let mut value = json!({"chain": report.chain.to_json(), "boundary": report.boundary.to_json(), "is_cycle": report.is_cycle});
    let mut text = format!("chain: {}\nboundary: {}\ncycle: {}", report.chain, report.boundary, report.is_cycle);
    if let Some(p) = &a.cocycle {
        let f = parse_cocycle(&read(p)?, q.order())?;
        let v = f.evaluate_integral(&report.chain)?;
        value["value"] = json!(f.ring.format(&v));
        text.push_str(&format!("\nvalue: {}", f.ring.format(&v)));
    }
    ctx.emit(value, || text);
    Ok(())
}

fn smallest_prime_factor(n: usize) -> u64 {
    (2..=n.max(2)).find(|p| n % p == 0).unwrap_or(2) as u64
}

fn verify_moves(ctx: &Ctx, a: &VerifyArgs) -> Outcome {
    use rand::{Rng as _, SeedableRng};
    let specs: Vec<String> = if a.quandle.is_empty() {
        ["dihedral:3", "dihedral:5", "alexander:4:3", "trivial:2"].iter().map(|s| s.to_string()).collect()
    } else {
        a.quandle.clone()
    };
    let pairs: Vec<_> = corpus::move_pairs()?.into_iter().filter(|p| a.filter.as_ref().map_or(true, |f| p.name.contains(f.as_str()))).collect();
    if pairs.is_empty() {
        return Err(Failure::Usage("no move pair matches the filter".into()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
    let mut combine = |basis: Vec<Cochain<IntegersMod>>, p: u64| -> Option<Cochain<IntegersMod>> {
        let first = basis.first()?.clone();
        let mut out = Cochain::zero(first.ring.clone(), first.order, first.degree);
        for f in &basis {
            let c = rng.gen_range(1..p);
            for (x, y) in out.values.iter_mut().zip(&f.values) {
                *x = (*x + c * y) % p;
            }
        }
        Some(if out.is_zero() { first } else { out })
    };
    let mut all_ok = true;
    let mut reports = Vec::new();
    let mut text = Vec::new();
    for spec in &specs {
        let q = load_quandle(spec)?;
        let p = a.prime.unwrap_or_else(|| smallest_prime_factor(q.order()));
        let mut inputs: MoveCheckInputs<IntegersMod, LaurentQuotient> = MoveCheckInputs {
            plain: combine(cocycle_basis(&q, Theory::Q, 2, p, &ctx.limits)?.cocycles, p),
            shadow: combine(cocycle_basis(&q, Theory::Q, 3, p, &ctx.limits)?.cocycles, p),
            ..Default::default()
        };
        if a.twisted {
            let ring = LaurentQuotient::z3_cyclotomic();
            let tw = ComplexSpec::new(&q, Theory::Q, true, ring.clone())?;
            let tws = ComplexSpec::twisted_shadow(&q, Theory::Q, ring)?;
            inputs.twisted = Cochain::sum(&twisted_cocycle_basis(&tw, 2, &ctx.limits)?);
            inputs.twisted_shadow = Cochain::sum(&twisted_cocycle_basis(&tws, 3, &ctx.limits)?);
        }
        for pair in &pairs {
            let report = verify_move_invariance(&pair.before, &pair.result, &q, &inputs, &ctx.limits)?;
            all_ok &= report.passed();
            let bad: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            text.push(format!(
                "{} {:<26} {:<14} {} checks{}",
                if report.passed() { "ok  " } else { "FAIL" },
                pair.name,
                spec,
                report.checks.len(),
                if bad.is_empty() { String::new() } else { format!(", failed: {}", bad.join("; ")) }
            ));
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["pair"] = json!(pair.name);
            reports.push(v);
        }
    }
    ctx.emit(json!({"passed": all_ok, "reports": reports}), || text.join("\n"));
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn selftest(ctx: &Ctx, a: &SelftestArgs) -> Outcome {
    let ids: Vec<usize> = if a.criterion.is_empty() { (1..=10).collect() } else { a.criterion.clone() };
    if let Some(bad) = ids.iter().find(|&&i| !(1..=10).contains(&i)) {
        return Err(Failure::Usage(format!("criterion {bad} is not in 1..10")));
    }
    let mut outcomes = Vec::new();
    for id in ids {
        let o = acceptance::run_criterion(id, a.seed);
        if !ctx.json {
            println!("{o}");
        }
        outcomes.push(o);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&Value::Array(outcomes.iter().map(|o| o.to_json()).collect())).expect("serializable"));
    } else {
        println!("{passed}/{} criteria passed", outcomes.len());
    }
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}
