//! `coletter`: resolutions, Betti tables, shift ideals, powers and the
//! sphere/ball classification for instance files.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a guard tripped.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coletter::instance::{Instance, InstanceFile};
use coletter::letterplace::ideal_of;
use coletter::linalg::Field;
use coletter::oracle::{koszul_betti, taylor_betti};
use coletter::powers::{
    bounded_power, check_n_lemma, equivalence_report, lift, polarization_mismatch, regular_sequence_certificate,
    verify_power_resolution,
};
use coletter::random::{random_instance, RandomParams};
use coletter::resolution::{build_by_mapping_cone, build_resolution, verify_exact};
use coletter::shift::{hs_linearity_report, shift_family, Verdict};
use coletter::simplicial::{certify_homology_type, classify, delta_of};
use coletter::sweep::{sweep, Outcome, SweepOptions};
use coletter::Error;

#[derive(Parser)]
#[command(
    name = "coletter",
    version,
    about = "Explicit resolutions of generalized co-letterplace ideals"
)]
struct Cli {
    /// Coefficient field for rank computations: rat, gfp or gfp:<p>.
    #[arg(long, global = true, default_value = "rat")]
    field: String,
    /// Override a size guard, e.g. --guard taylor-generators=18.
    #[arg(long = "guard", global = true, value_name = "NAME=VALUE")]
    guards: Vec<String>,
    /// Directory for JSON and text artifacts.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify the explicit resolution.
    Resolution {
        instance: PathBuf,
        /// Also rebuild by iterated mapping cones and compare.
        #[arg(long)]
        mapping_cone: bool,
    },
    /// Betti table from the construction and from an independent oracle.
    Betti {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleChoice::Auto)]
        oracle: OracleChoice,
    },
    /// Homological shift ideals.
    Hs {
        instance: PathBuf,
        #[arg(long, conflicts_with = "all")]
        t: Option<usize>,
        #[arg(long)]
        all: bool,
    },
    /// Powers: bounded power, lift, regularity and resolution certificates.
    Power(PowerArgs),
    /// The simplicial complex of the ideal.
    Complex {
        #[arg(value_enum)]
        action: ComplexAction,
        instance: PathBuf,
    },
    /// Run every check on one instance, or on a batch of random instances.
    VerifyAll {
        instance: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Print a random instance.
    Random {
        #[command(flatten)]
        bounds: Bounds,
    },
}

#[derive(Args)]
struct PowerArgs {
    instance: PathBuf,
    #[arg(long)]
    k: usize,
    /// Print the generators of L(𝔄; k).
    #[arg(long)]
    bounded: bool,
    /// Print the generators of L(𝔄)^k and compare.
    #[arg(long)]
    true_power: bool,
    #[arg(long)]
    certify_regular: bool,
    #[arg(long)]
    verify_resolution: bool,
    #[arg(long)]
    polarization_check: bool,
}

#[derive(Args, Clone, Copy)]
struct Bounds {
    #[arg(long, default_value_t = 4)]
    m: usize,
    #[arg(long, default_value_t = 5)]
    n: u32,
    #[arg(long, default_value_t = 200)]
    max_ideal: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleChoice {
    Auto,
    Taylor,
    Koszul,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexAction {
    Classify,
    Boundary,
    Homology,
}

/// A check whose outcome is "no"; maps to exit code 1.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

struct Ctx {
    field: Field,
    overrides: BTreeMap<String, usize>,
    out: Option<PathBuf>,
    seed: u64,
}

impl Ctx {
    fn load(&self, path: &Path) -> anyhow::Result<Instance> {
        Instance::load(path, &self.overrides).with_context(|| format!("reading {}", path.display()))
    }

    /// Writes an artifact when `--out` is set and echoes its path.
    fn emit(&self, name: &str, contents: &str) -> anyhow::Result<()> {
        if let Some(dir) = &self.out {
            fs::create_dir_all(dir)?;
            let path = dir.join(name);
            fs::write(&path, contents)?;
            println!("wrote {}", path.display());
        }
        Ok(())
    }

    fn emit_json(&self, name: &str, value: &Value) -> anyhow::Result<()> {
        self.emit(name, &(serde_json::to_string_pretty(value)? + "\n"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Failed>().is_some() {
        return 1;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Guard { .. }) => 3,
        Some(Error::Verification(_)) => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let field: Field = cli.field.parse()?;
    let mut overrides = BTreeMap::new();
    for g in &cli.guards {
        let (k, v) = g
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("guard `{g}` is not NAME=VALUE")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::InvalidInput(format!("guard value `{v}` is not a number")))?;
        coletter::Guards::default().with(k, v)?;
        overrides.insert(k.to_string(), v);
    }
    let ctx = Ctx {
        field,
        overrides,
        out: cli.out,
        seed: cli.seed,
    };
    match cli.command {
        Command::Resolution { instance, mapping_cone } => resolution(&ctx, &instance, mapping_cone),
        Command::Betti { instance, oracle } => betti(&ctx, &instance, oracle),
        Command::Hs { instance, t, all } => hs(&ctx, &instance, t, all),
        Command::Power(args) => power(&ctx, &args),
        Command::Complex { action, instance } => complex(&ctx, &instance, action),
        Command::VerifyAll {
            instance,
            count,
            bounds,
        } => verify_all(&ctx, instance.as_deref(), count, bounds),
        Command::Random { bounds } => random(&ctx, bounds),
    }
}

fn resolution(ctx: &Ctx, path: &Path, mapping_cone: bool) -> anyhow::Result<()> {
    let inst = ctx.load(path)?;
    let rz = build_resolution(&inst.ideal, &inst.guards)?;
    let (_, l) = ideal_of(&inst.ideal);
    let exact = verify_exact(&rz, &l, ctx.field, &inst.guards)?;
    println!("ranks {:?}", rz.ranks());
    println!(
        "verified: complex, single-variable entries, exact in {} strands over {}",
        exact.strands.len(),
        ctx.field
    );
    if mapping_cone {
        if build_by_mapping_cone(&inst.ideal, &inst.guards)? != rz {
            bail!(Failed(
                "mapping-cone build differs from the explicit construction".into()
            ));
        }
        println!("mapping-cone build identical");
    }
    ctx.emit_json("resolution.json", &rz.to_json())?;
    ctx.emit("resolution.m2", &rz.to_matrix_text())
}

fn betti(ctx: &Ctx, path: &Path, oracle: OracleChoice) -> anyhow::Result<()> {
    let inst = ctx.load(path)?;
    let (ring, l) = ideal_of(&inst.ideal);
    let table = build_resolution(&inst.ideal, &inst.guards)?.betti_table();
    let (other, name) = match oracle {
        OracleChoice::Taylor => (taylor_betti(&l, ctx.field, &inst.guards)?, "taylor"),
        OracleChoice::Koszul => (koszul_betti(&l, ctx.field, &inst.guards)?, "koszul"),
        OracleChoice::Auto => match taylor_betti(&l, ctx.field, &inst.guards) {
            Ok(t) => (t, "taylor"),
            Err(e) if e.is_guard() => (koszul_betti(&l, ctx.field, &inst.guards)?, "koszul"),
            Err(e) => return Err(e.into()),
        },
    };
    let diff = table.diff(&other);
    println!("construction:\n{}", table.to_text());
    println!("{name} oracle:\n{}", other.to_text());
    let diffs: Vec<Value> = diff
        .iter()
        .map(|(i, b, x, y)| json!({"i": i, "degree": b.display(&ring), "construction": x, "oracle": y}))
        .collect();
    ctx.emit_json(
        "betti.json",
        &json!({"construction": table.to_json(&ring), "oracle": name, "oracle_table": other.to_json(&ring), "differences": diffs}),
    )?;
    if !diff.is_empty() {
        bail!(Failed(format!(
            "{} Betti numbers differ from the {name} oracle",
            diff.len()
        )));
    }
    println!("tables agree");
    Ok(())
}

fn hs(ctx: &Ctx, path: &Path, t: Option<usize>, all: bool) -> anyhow::Result<()> {
    if t.is_none() && !all {
        return Err(Error::InvalidInput("pass --t T or --all".into()).into());
    }
    let inst = ctx.load(path)?;
    let fam = shift_family(&inst.ideal, None, &inst.guards)?;
    let report = hs_linearity_report(&fam, ctx.field, &inst.guards)?;
    let wanted: Vec<_> = report.iter().filter(|r| t.is_none_or(|t| r.t == t)).collect();
    let verdict = |v: Verdict| match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Undecided => "undecided",
    };
    println!(
        "{:>3} {:>6} {:>10} {:>13}  witness",
        "t", "gens", "linear", "quasi-linear"
    );
    let mut rows = Vec::new();
    for r in &wanted {
        let witness = r
            .witnesses
            .first()
            .map(|w| {
                format!(
                    "{} : {}",
                    w.generator.display(&fam.ring),
                    w.non_linear.first().map(|m| m.display(&fam.ring)).unwrap_or_default()
                )
            })
            .unwrap_or_default();
        println!(
            "{:>3} {:>6} {:>10} {:>13}  {witness}",
            r.t,
            r.generators,
            verdict(r.linear_resolution),
            if r.quasi_linear { "yes" } else { "no" }
        );
        rows.push(json!({
            "t": r.t,
            "generators": fam.get(r.t).gens().iter().map(|g| g.display(&fam.ring)).collect::<Vec<_>>(),
            "linear_resolution": verdict(r.linear_resolution),
            "oracle": r.oracle,
            "quasi_linear": r.quasi_linear,
            "witness": witness,
        }));
    }
    if let Some(t) = t {
        if wanted.is_empty() {
            println!("HS_{t} is zero");
        }
    }
    ctx.emit_json("hs.json", &Value::Array(rows))
}

fn power(ctx: &Ctx, args: &PowerArgs) -> anyhow::Result<()> {
    let inst = ctx.load(&args.instance)?;
    let (ring, l) = ideal_of(&inst.ideal);
    let k = args.k;
    if k == 0 {
        return Err(Error::InvalidInput("--k must be positive".into()).into());
    }
    let mut out = serde_json::Map::new();
    let bp = bounded_power(&inst.ideal, k, &inst.guards)?;
    let true_power = l.power(k);
    println!(
        "L(𝔄;{k}) has {} generators; L(𝔄)^{k} has {}",
        bp.len(),
        true_power.len()
    );
    println!("equal: {}", bp == true_power);
    if args.bounded {
        println!("L(𝔄;{k}) = {}", bp.display(&ring));
    }
    if args.true_power {
        println!("L(𝔄)^{k} = {}", true_power.display(&ring));
    }
    out.insert(
        "bounded".into(),
        json!(bp.gens().iter().map(|g| g.display(&ring)).collect::<Vec<_>>()),
    );
    out.insert("true_power_equal".into(), json!(bp == true_power));
    if k >= 2 {
        let eq = equivalence_report(&inst.ideal, k, &inst.guards)?;
        out.insert("equivalences".into(), serde_json::to_value(&eq)?);
    }
    let mut failed = Vec::new();
    if args.certify_regular || args.polarization_check {
        let lifted = lift(&inst.ideal, k, &inst.guards)?;
        if args.certify_regular {
            let cert = regular_sequence_certificate(&lifted, &inst.guards)?;
            println!(
                "regular sequence of {} differences: {} (N_T = {}, N_R = {})",
                cert.c,
                if cert.passed { "certified" } else { "FAILED" },
                cert.numerator_t,
                cert.numerator_r
            );
            if !cert.passed {
                failed.push("regularity certificate");
            }
            out.insert("regularity".into(), serde_json::to_value(&cert)?);
        }
        if args.polarization_check {
            let pol = polarization_mismatch(&lifted, &inst.guards)?;
            match &pol.witness {
                Some(_) => println!("lifted ideal is the polarization up to relabelling"),
                None => println!(
                    "no variable bijection onto the polarization ({} search nodes)",
                    pol.nodes
                ),
            }
            out.insert("polarization".into(), serde_json::to_value(&pol)?);
        }
    }
    if args.verify_resolution {
        let rep = verify_power_resolution(inst.ideal.space(), k, ctx.field, &inst.guards)?;
        println!(
            "ranks {:?}; exact in {} strands; agrees with the {} oracle",
            rep.ranks, rep.strands_checked, rep.oracle
        );
        out.insert("resolution".into(), rep.resolution.to_json());
        out.insert("ranks".into(), json!(rep.ranks));
    }
    ctx.emit_json("power.json", &Value::Object(out))?;
    if !failed.is_empty() {
        bail!(Failed(format!("failed: {}", failed.join(", "))));
    }
    Ok(())
}

fn complex(ctx: &Ctx, path: &Path, action: ComplexAction) -> anyhow::Result<()> {
    let inst = ctx.load(path)?;
    let delta = delta_of(&inst.ideal, &inst.guards)?;
    match action {
        ComplexAction::Classify => {
            let r = classify(&inst.ideal, &inst.guards)?;
            let shape = serde_json::to_value(r.verdict)?;
            let shape = shape.as_str().unwrap_or_default();
            let boundary = r.boundary_facets.len();
            if boundary == 0 {
                println!("{shape}, dimension {}", r.dim);
            } else {
                let unit = if r.boundary_facets.iter().all(|f| f.len() == 1) {
                    "vertices"
                } else {
                    "facets"
                };
                println!("{shape}, dimension {}, boundary = {boundary} {unit}", r.dim);
            }
            println!("pd = {}, sum |B_i| - m = {}", r.pd, r.pd_bound);
            ctx.emit_json("classify.json", &serde_json::to_value(&r)?)?;
        }
        ComplexAction::Boundary => {
            let b = delta.complex.boundary()?;
            print!("{}", b.to_text());
            ctx.emit_json("boundary.json", &b.to_json())?;
            ctx.emit("boundary.txt", &b.to_text())?;
        }
        ComplexAction::Homology => {
            let cert = certify_homology_type(&delta.complex, ctx.field, &inst.guards)?;
            let kind = serde_json::to_value(cert.kind)?;
            println!(
                "homology {} of dimension {}; reduced homology {:?}; {} links checked",
                kind.as_str().unwrap_or_default(),
                cert.dim,
                cert.homology,
                cert.faces_checked
            );
            ctx.emit_json("homology.json", &serde_json::to_value(&cert)?)?;
        }
    }
    ctx.emit_json("complex.json", &delta.complex.to_json())?;
    ctx.emit("facets.txt", &delta.complex.to_text())
}

fn params(bounds: Bounds) -> RandomParams {
    RandomParams {
        m: bounds.m,
        n: bounds.n,
        max_ideal: bounds.max_ideal,
        ..RandomParams::default()
    }
}

fn verify_all(ctx: &Ctx, path: Option<&Path>, count: usize, bounds: Bounds) -> anyhow::Result<()> {
    let mut runs: Vec<(String, Instance)> = Vec::new();
    match path {
        Some(p) => runs.push((p.display().to_string(), ctx.load(p)?)),
        None => {
            for i in 0..count as u64 {
                let seed = ctx.seed.wrapping_add(i);
                let file = random_instance(seed, params(bounds))?;
                runs.push((format!("seed {seed}"), Instance::new(file, &ctx.overrides)?));
            }
        }
    }
    let mut results = Vec::new();
    let mut failures = 0;
    for (label, inst) in &runs {
        let report = sweep(&inst.ideal, ctx.field, &inst.guards, SweepOptions::default());
        let skipped = report
            .checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Skipped { .. }))
            .count();
        let failed: Vec<_> = report.failures().collect();
        failures += failed.len();
        println!(
            "{label}: {} checks, {} failed, {skipped} skipped",
            report.checks.len(),
            failed.len()
        );
        for f in &failed {
            println!("  FAIL {}: {:?}", f.name, f.outcome);
        }
        results.push(json!({"instance": label, "checks": report.checks}));
    }
    let lemma = if path.is_none() {
        let r = check_n_lemma(4, 3, 6)?;
        println!(
            "N_l lemma over {{[4]}}_3: {} dominated pairs, {} bijections, {}",
            r.dominated_pairs,
            r.bijections_checked,
            if r.counterexample.is_none() {
                "no counterexample"
            } else {
                "COUNTEREXAMPLE"
            }
        );
        if r.counterexample.is_some() {
            failures += 1;
        }
        serde_json::to_value(&r)?
    } else {
        Value::Null
    };
    ctx.emit_json(
        "verify.json",
        &json!({"field": ctx.field.to_string(), "instances": results, "n_lemma": lemma}),
    )?;
    if failures > 0 {
        bail!(Failed(format!("{failures} checks failed")));
    }
    println!("all checks passed");
    Ok(())
}

fn random(ctx: &Ctx, bounds: Bounds) -> anyhow::Result<()> {
    let file: InstanceFile = random_instance(ctx.seed, params(bounds))?;
    let text = file.to_json() + "\n";
    if ctx.out.is_some() {
        ctx.emit(&format!("instance-{}.json", ctx.seed), &text)
    } else {
        print!("{text}");
        Ok(())
    }
}
