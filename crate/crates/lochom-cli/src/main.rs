//! Batch job runner for the exact homological-algebra engine: reads a JSON
//! job describing a ring/ideal/module/box and a task list, runs the
//! requested computations, and writes a deterministic JSON report with
//! pass/fail certificates.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::Deserialize;
use serde_json::{json, Value};

use lochom::findim::{
    cyclic_group, dihedral_group, exterior_algebra, ext_algebra, ext_k_a, frobenius_check,
    group_algebra, hilbert_symmetry_check, monomial_algebra, product_group, quaternion_group,
    socle_dim, FinDimAlgebra,
};
use lochom::koszul::{
    build_cech_with, cech_cohomology, euler_conservation_check, koszul_colimit_cohomology,
    les_check, local_cohomology, radical_invariance_check, vanishing_report,
};
use lochom::taylor::stable_ext_table;
use lochom::zp::{functor_laws_check, gamma_p, lambda_p, Atom, PLocalObject, ALL_ATOMS};
use lochom::{DegreeBox, DegreeTable, FieldSpec, Monomial, MonomialIdeal, RingSpec};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "lochom", version, about = "exact local cohomology batch runner")]
struct Cli {
    /// run a single job file
    #[arg(long, env = "LOCHOM_JOB", conflicts_with = "suite")]
    job: Option<PathBuf>,
    /// run every *.json job in a directory
    #[arg(long, env = "LOCHOM_SUITE")]
    suite: Option<PathBuf>,
    /// write the JSON report here (single-job mode)
    #[arg(long, env = "LOCHOM_OUT")]
    out: Option<PathBuf>,
    /// also export degree tables as CSV alongside the report
    #[arg(long, env = "LOCHOM_CSV")]
    csv: bool,
    /// worker threads for degree-parallel computation
    #[arg(long, env = "LOCHOM_THREADS")]
    threads: Option<usize>,
    /// RNG seed for sampled property checks
    #[arg(long, env = "LOCHOM_SEED", default_value_t = 0)]
    seed: u64,
}

// --- job schema --------------------------------------------------------------

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct JobSpec {
    schema: u32,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    field: Option<String>,
    #[serde(default)]
    ring: Option<RingSection>,
    #[serde(default)]
    module: Option<ModuleSection>,
    #[serde(default)]
    ideal: Option<Vec<Vec<i64>>>,
    /// second generator set, for radical-check
    #[serde(default)]
    ideal2: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    r#box: Option<BoxSection>,
    #[serde(default)]
    p: Option<u64>,
    /// atoms of the p-local input object, e.g. ["Z", "Z/p^2"]
    #[serde(default)]
    atoms: Option<Vec<String>>,
    #[serde(default)]
    algebra: Option<AlgebraSection>,
    #[serde(default)]
    params: Params,
    tasks: Vec<String>,
    /// table-cell assertions checked after the tasks run
    #[serde(default)]
    assertions: Vec<Assertion>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct RingSection {
    variables: usize,
    #[serde(default)]
    quotient: Vec<Vec<i64>>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ModuleSection {
    /// monomial relations presenting M = R/(relations); empty means M = R
    #[serde(default)]
    relations: Vec<Vec<i64>>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct BoxSection {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
enum AlgebraSection {
    /// group named like "C4", "C2xC8", "D4" (order 8), "Q8"
    #[serde(rename = "group")]
    Group(String),
    /// Artinian monomial quotient
    #[serde(rename = "monomial")]
    Monomial { variables: usize, ideal: Vec<Vec<i64>> },
    /// exterior algebra on one generator of the given degree
    #[serde(rename = "exterior")]
    Exterior(i64),
}

#[derive(Deserialize, Debug)]
struct Params {
    #[serde(default = "default_s_max")]
    s_max: u32,
    #[serde(default = "default_r_max")]
    r_max: u32,
    #[serde(default = "default_n")]
    n: usize,
}

fn default_s_max() -> u32 {
    6
}
fn default_r_max() -> u32 {
    6
}
fn default_n() -> usize {
    6
}

impl Default for Params {
    fn default() -> Self {
        Params {
            s_max: default_s_max(),
            r_max: default_r_max(),
            n: default_n(),
        }
    }
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct Assertion {
    task: String,
    index: i64,
    degree: Vec<i64>,
    dim: usize,
}

// --- error plumbing ----------------------------------------------------------

enum RunError {
    Schema(String),
    Computation(String),
}

impl From<lochom::Error> for RunError {
    fn from(e: lochom::Error) -> Self {
        RunError::Computation(e.to_string())
    }
}

fn schema_err<T>(msg: impl Into<String>) -> Result<T, RunError> {
    Err(RunError::Schema(msg.into()))
}

// --- input assembly ----------------------------------------------------------

fn parse_field(s: Option<&str>) -> Result<FieldSpec, RunError> {
    match s.unwrap_or("Q") {
        "Q" | "QQ" => Ok(FieldSpec::Rationals),
        other => {
            let p: u64 = other
                .strip_prefix('F')
                .and_then(|t| t.parse().ok())
                .ok_or(RunError::Schema(format!("unknown field {other:?}")))?;
            FieldSpec::prime(p).map_err(|e| RunError::Schema(e.to_string()))
        }
    }
}

fn monomials(rows: &[Vec<i64>], vars: usize) -> Result<Vec<Monomial>, RunError> {
    rows.iter()
        .map(|r| {
            if r.len() != vars {
                return schema_err(format!("exponent vector {r:?} has wrong length"));
            }
            Ok(Monomial(r.clone()))
        })
        .collect()
}

struct RingContext {
    ring: RingSpec,
    ideal: MonomialIdeal,
    ideal2: Option<MonomialIdeal>,
    module_rel: MonomialIdeal,
    window: DegreeBox,
}

fn ring_context(job: &JobSpec) -> Result<RingContext, RunError> {
    let field = parse_field(job.field.as_deref())?;
    let rs = job
        .ring
        .as_ref()
        .ok_or(RunError::Schema("task needs a \"ring\" section".into()))?;
    let quotient = if rs.quotient.is_empty() {
        MonomialIdeal::zero()
    } else {
        MonomialIdeal::new(monomials(&rs.quotient, rs.variables)?)
            .map_err(|e| RunError::Schema(e.to_string()))?
    };
    let ring = RingSpec::quotient_ring(field, rs.variables, quotient);
    let gens = monomials(
        job.ideal
            .as_deref()
            .ok_or(RunError::Schema("task needs an \"ideal\" section".into()))?,
        rs.variables,
    )?;
    let ideal = if gens.is_empty() {
        MonomialIdeal::zero()
    } else {
        MonomialIdeal::new(gens).map_err(|e| RunError::Schema(e.to_string()))?
    };
    let ideal2 = match &job.ideal2 {
        None => None,
        Some(rows) => {
            let g = monomials(rows, rs.variables)?;
            Some(MonomialIdeal::new(g).map_err(|e| RunError::Schema(e.to_string()))?)
        }
    };
    let module_rel = match &job.module {
        Some(m) if !m.relations.is_empty() => {
            MonomialIdeal::new(monomials(&m.relations, rs.variables)?)
                .map_err(|e| RunError::Schema(e.to_string()))?
        }
        _ => MonomialIdeal::zero(),
    };
    let bx = job
        .r#box
        .as_ref()
        .ok_or(RunError::Schema("task needs a \"box\" section".into()))?;
    if bx.lo.len() != rs.variables || bx.hi.len() != rs.variables {
        return schema_err("box dimensions do not match the ring");
    }
    let window = DegreeBox::new(bx.lo.clone(), bx.hi.clone())
        .map_err(|e| RunError::Schema(e.to_string()))?;
    Ok(RingContext {
        ring,
        ideal,
        ideal2,
        module_rel,
        window,
    })
}

fn parse_group(name: &str) -> Result<Vec<Vec<usize>>, RunError> {
    let factor = |part: &str| -> Result<Vec<Vec<usize>>, RunError> {
        if part == "Q8" {
            return Ok(quaternion_group());
        }
        if let Some(n) = part.strip_prefix('C').and_then(|t| t.parse::<usize>().ok()) {
            return Ok(cyclic_group(n));
        }
        if let Some(n) = part.strip_prefix('D').and_then(|t| t.parse::<usize>().ok()) {
            return Ok(dihedral_group(n));
        }
        schema_err(format!("unknown group {part:?}"))
    };
    let mut parts = name.split('x');
    let mut table = factor(parts.next().unwrap())?;
    for p in parts {
        table = product_group(&table, &factor(p)?);
    }
    Ok(table)
}

fn build_algebra(job: &JobSpec) -> Result<FinDimAlgebra, RunError> {
    let field = parse_field(job.field.as_deref())?;
    let section = job
        .algebra
        .as_ref()
        .ok_or(RunError::Schema("task needs an \"algebra\" section".into()))?;
    match section {
        AlgebraSection::Group(name) => {
            let table = parse_group(name)?;
            Ok(group_algebra(&table, field)?)
        }
        AlgebraSection::Monomial { variables, ideal } => {
            let gens = monomials(ideal, *variables)?;
            let i = MonomialIdeal::new(gens).map_err(|e| RunError::Schema(e.to_string()))?;
            Ok(monomial_algebra(field, *variables, &i)?)
        }
        AlgebraSection::Exterior(d) => Ok(exterior_algebra(field, *d)),
    }
}

fn parse_atoms(job: &JobSpec) -> Result<(u64, PLocalObject), RunError> {
    let p = job
        .p
        .ok_or(RunError::Schema("task needs a prime \"p\"".into()))?;
    let names = job
        .atoms
        .as_ref()
        .ok_or(RunError::Schema("task needs an \"atoms\" list".into()))?;
    let atoms: Result<Vec<Atom>, _> = names.iter().map(|s| Atom::parse(s)).collect();
    let atoms = atoms.map_err(|e| RunError::Schema(e.to_string()))?;
    Ok((p, PLocalObject::new(p, atoms)))
}

// --- task execution ----------------------------------------------------------

struct TaskOutcome {
    result: Value,
    /// None for pure computations, Some(pass) for certificate tasks
    pass: Option<bool>,
    table: Option<DegreeTable>,
}

fn table_outcome(table: DegreeTable) -> TaskOutcome {
    TaskOutcome {
        result: table.to_json(),
        pass: None,
        table: Some(table),
    }
}

fn run_task(task: &str, job: &JobSpec, seed: u64) -> Result<TaskOutcome, RunError> {
    match task {
        "local-cohomology" => {
            let c = ring_context(job)?;
            let t = local_cohomology(&c.ring, &c.ideal, &c.module_rel, &c.window)?;
            Ok(table_outcome(t))
        }
        "cech" => {
            let c = ring_context(job)?;
            let t = cech_cohomology(&c.ring, &c.ideal, &c.module_rel, &c.window)?;
            Ok(table_outcome(t))
        }
        "koszul-colimit" => {
            let c = ring_context(job)?;
            let t = koszul_colimit_cohomology(
                &c.ring,
                &c.ideal,
                &c.module_rel,
                &c.window,
                job.params.s_max,
            )?;
            Ok(table_outcome(t))
        }
        "ext-oracle" => {
            let c = ring_context(job)?;
            let t = stable_ext_table(&c.ring, &c.ideal, &c.module_rel, &c.window, job.params.r_max)?;
            Ok(table_outcome(t))
        }
        "oracle-compare" => {
            let c = ring_context(job)?;
            let direct = local_cohomology(&c.ring, &c.ideal, &c.module_rel, &c.window)?;
            let koszul = koszul_colimit_cohomology(
                &c.ring,
                &c.ideal,
                &c.module_rel,
                &c.window,
                job.params.s_max,
            )?;
            let ext = stable_ext_table(&c.ring, &c.ideal, &c.module_rel, &c.window, job.params.r_max)?;
            let w1 = direct.first_difference(&koszul);
            let w2 = direct.first_difference(&ext);
            let pass = w1.is_none() && w2.is_none();
            Ok(TaskOutcome {
                result: json!({
                    "koszul_agrees": w1.is_none(),
                    "ext_agrees": w2.is_none(),
                    "witness": w1.or(w2),
                    "table": direct.to_json(),
                }),
                pass: Some(pass),
                table: Some(direct),
            })
        }
        "les-check" => {
            let c = ring_context(job)?;
            let rep = les_check(&c.ring, &c.ideal, &c.module_rel, &c.window)?;
            let euler_witness = if c.ideal.is_zero() {
                None
            } else {
                let cech = build_cech_with(&c.ring, c.ideal.generators(), &c.module_rel)?;
                euler_conservation_check(&cech, &c.window)?
            };
            let pass = rep.pass && euler_witness.is_none();
            Ok(TaskOutcome {
                result: json!({
                    "sequence_pass": rep.pass,
                    "sequence_witness": rep.witness,
                    "euler_pass": euler_witness.is_none(),
                    "euler_witness": euler_witness,
                }),
                pass: Some(pass),
                table: None,
            })
        }
        "radical-check" => {
            let c = ring_context(job)?;
            let other = c
                .ideal2
                .ok_or(RunError::Schema("radical-check needs \"ideal2\"".into()))?;
            let rep = radical_invariance_check(
                &c.ring,
                c.ideal.generators(),
                other.generators(),
                &c.module_rel,
                &c.window,
            )?;
            Ok(TaskOutcome {
                result: json!({"pass": rep.pass, "witness": rep.witness}),
                pass: Some(rep.pass),
                table: None,
            })
        }
        "vanishing" => {
            let c = ring_context(job)?;
            let rep = vanishing_report(&c.ring, &c.ideal, &c.module_rel, &c.window)?;
            let pass = rep.upper_bound_ok && (rep.computed_depth.is_none() || rep.lower_witnessed);
            Ok(TaskOutcome {
                result: json!({
                    "computed_depth": rep.computed_depth,
                    "krull_dim": rep.krull_dim,
                    "upper_bound_ok": rep.upper_bound_ok,
                    "lower_witnessed": rep.lower_witnessed,
                    "witness": rep.witness,
                }),
                pass: Some(pass),
                table: None,
            })
        }
        "zp-gamma" => {
            let (_, m) = parse_atoms(job)?;
            let g = gamma_p(&m);
            Ok(TaskOutcome {
                result: json!({"H0": g.zero.to_strings(), "H1": g.one.to_strings()}),
                pass: None,
                table: None,
            })
        }
        "zp-lambda" => {
            let (_, m) = parse_atoms(job)?;
            let l = lambda_p(&m);
            Ok(TaskOutcome {
                result: json!({"L0": l.zero.to_strings(), "L1": l.one.to_strings()}),
                pass: None,
                table: None,
            })
        }
        "zp-laws" => {
            let p = job
                .p
                .ok_or(RunError::Schema("zp-laws needs a prime \"p\"".into()))?;
            let samples = law_samples(p, seed);
            let rep = functor_laws_check(&samples)?;
            Ok(TaskOutcome {
                result: json!({
                    "pass": rep.pass,
                    "samples": samples.len(),
                    "failures": rep.failures,
                }),
                pass: Some(rep.pass),
                table: None,
            })
        }
        "gorenstein" => {
            let a = build_algebra(job)?;
            let dims = ext_k_a(&a, job.params.n)?;
            let socle = socle_dim(&a);
            let rigid = dims[0] == 1 && dims[1..].iter().all(|&d| d == 0);
            // simple socle iff Ext(k, A) is one copy of k in degree 0
            let pass = rigid == (socle == 1);
            Ok(TaskOutcome {
                result: json!({
                    "ext_k_A": dims,
                    "socle_dim": socle,
                    "gorenstein": rigid,
                }),
                pass: Some(pass),
                table: None,
            })
        }
        "frobenius" => {
            let a = build_algebra(job)?;
            let rep = frobenius_check(&a, None)?;
            Ok(TaskOutcome {
                result: json!({"frobenius": rep.frobenius, "degenerate": rep.witness.is_some()}),
                pass: Some(rep.frobenius),
                table: None,
            })
        }
        "ext-algebra" => {
            let a = build_algebra(job)?;
            let ext = ext_algebra(&a, job.params.n)?;
            // polynomial certificate: in the one-dimensional case, repeated
            // multiplication by the degree-1 class stays nonzero
            let polynomial = ext.dims.iter().all(|&d| d == 1)
                && (1..job.params.n).all(|m| {
                    ext.products
                        .get(&(m, 0, 1, 0))
                        .is_some_and(|v| v.iter().any(|c| !c.is_zero()))
                });
            Ok(TaskOutcome {
                result: json!({"dims": ext.dims, "polynomial_certificate": polynomial}),
                pass: Some(polynomial),
                table: None,
            })
        }
        "hilbert-symmetry" => {
            let a = build_algebra(job)?;
            let rep = hilbert_symmetry_check(&a);
            let pass = rep.symmetric != Some(false);
            Ok(TaskOutcome {
                result: json!({
                    "socle_dim": rep.socle_dim,
                    "socle_degree": rep.socle_degree,
                    "symmetric": rep.symmetric,
                    "dims_by_degree": rep.dims_by_degree,
                }),
                pass: Some(pass),
                table: None,
            })
        }
        other => schema_err(format!("unknown task {other:?}")),
    }
}

/// Singletons of every atom plus seeded random sums for the law check.
fn law_samples(p: u64, seed: u64) -> Vec<PLocalObject> {
    use rand::{Rng, SeedableRng};
    let mut out: Vec<PLocalObject> = ALL_ATOMS
        .iter()
        .map(|a| PLocalObject::new(p, vec![a.clone()]))
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let len = rng.gen_range(1..=4);
        let atoms = (0..len)
            .map(|_| match &ALL_ATOMS[rng.gen_range(0..ALL_ATOMS.len())] {
                Atom::ZModPk(_) => Atom::ZModPk(rng.gen_range(1..=4)),
                a => a.clone(),
            })
            .collect();
        out.push(PLocalObject::new(p, atoms));
    }
    out
}

// --- job & suite runners -----------------------------------------------------

struct JobResult {
    report: Value,
    tables: BTreeMap<String, DegreeTable>,
    /// worst exit code over the tasks
    exit: u8,
}

fn run_job(path: &Path, seed: u64) -> Result<JobResult, (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (2, format!("cannot read {}: {e}", path.display())))?;
    let job: JobSpec =
        serde_json::from_str(&text).map_err(|e| (2, format!("invalid job file: {e}")))?;
    if job.schema != SCHEMA_VERSION {
        return Err((2, format!("unsupported schema version {}", job.schema)));
    }
    if job.tasks.is_empty() {
        return Err((2, "job has no tasks".into()));
    }

    let mut task_reports = Vec::new();
    let mut tables = BTreeMap::new();
    let mut all_pass = true;
    for task in &job.tasks {
        let start = Instant::now();
        let outcome = match run_task(task, &job, seed) {
            Ok(o) => o,
            Err(RunError::Schema(msg)) => return Err((2, format!("task {task}: {msg}"))),
            Err(RunError::Computation(msg)) => return Err((3, format!("task {task}: {msg}"))),
        };
        if outcome.pass == Some(false) {
            all_pass = false;
        }
        if let Some(t) = outcome.table {
            tables.insert(task.clone(), t);
        }
        task_reports.push(json!({
            "task": task,
            "params": {"s_max": job.params.s_max, "r_max": job.params.r_max, "N": job.params.n},
            "box": job.r#box.as_ref().map(|b| json!({"lo": b.lo, "hi": b.hi})),
            "wall_ms": start.elapsed().as_millis() as u64,
            "result": outcome.result,
            "pass": outcome.pass,
        }));
    }

    let mut assertion_reports = Vec::new();
    for a in &job.assertions {
        let table = tables.get(&a.task).ok_or((
            2,
            format!("assertion references task {:?} with no table", a.task),
        ))?;
        let got = table.get(a.index, &a.degree);
        let ok = got == a.dim;
        if !ok {
            all_pass = false;
        }
        assertion_reports.push(json!({
            "task": a.task,
            "index": a.index,
            "degree": a.degree,
            "expected": a.dim,
            "got": got,
            "pass": ok,
        }));
    }

    let report = json!({
        "schema": SCHEMA_VERSION,
        "job": job.name.clone().unwrap_or_else(|| {
            path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
        }),
        "timestamp": chrono_free_timestamp(),
        "seed": seed,
        "tasks": task_reports,
        "assertions": assertion_reports,
        "pass": all_pass,
    });
    Ok(JobResult {
        report,
        tables,
        exit: if all_pass { 0 } else { 1 },
    })
}

/// Seconds since the epoch; the only nondeterministic report field.
fn chrono_free_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn emit(result: &JobResult, out: Option<&Path>, csv: bool) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(&result.report).expect("report serializes");
    match out {
        Some(p) => {
            std::fs::write(p, &text)?;
            if csv {
                for (task, table) in &result.tables {
                    let mut csv_path = p.to_path_buf();
                    csv_path.set_extension(format!("{task}.csv"));
                    std::fs::write(csv_path, table.to_csv())?;
                }
            }
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn run_suite(dir: &Path, seed: u64, out: Option<&Path>, csv: bool) -> u8 {
    let mut jobs: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(e) => {
            eprintln!("cannot read suite directory {}: {e}", dir.display());
            return 2;
        }
    };
    jobs.sort();
    if jobs.is_empty() {
        eprintln!("warning: no job files in {}", dir.display());
        return 0;
    }
    let mut rows = Vec::new();
    let mut worst = 0u8;
    for path in &jobs {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        match run_job(path, seed) {
            Ok(res) => {
                let status = if res.exit == 0 { "pass" } else { "FAIL" };
                println!("{name}: {status}");
                rows.push(json!({"job": name, "status": status, "report": res.report}));
                worst = worst.max(res.exit);
            }
            Err((code, msg)) => {
                println!("{name}: ERROR ({msg})");
                rows.push(json!({"job": name, "status": "error", "message": msg}));
                worst = worst.max(code);
            }
        }
    }
    let summary = json!({
        "schema": SCHEMA_VERSION,
        "suite": dir.display().to_string(),
        "timestamp": chrono_free_timestamp(),
        "jobs": rows,
        "pass": worst == 0,
    });
    if let Some(p) = out {
        if let Err(e) = std::fs::write(p, serde_json::to_string_pretty(&summary).unwrap()) {
            eprintln!("cannot write summary: {e}");
            return 3;
        }
    }
    let _ = csv;
    println!("suite: {}", if worst == 0 { "pass" } else { "FAIL" });
    worst
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    if let Some(dir) = &cli.suite {
        return ExitCode::from(run_suite(dir, cli.seed, cli.out.as_deref(), cli.csv));
    }
    let Some(job) = &cli.job else {
        eprintln!("nothing to do: pass --job FILE or --suite DIR");
        return ExitCode::from(2);
    };
    match run_job(job, cli.seed) {
        Ok(res) => {
            if let Err(e) = emit(&res, cli.out.as_deref(), cli.csv) {
                eprintln!("cannot write report: {e}");
                return ExitCode::from(3);
            }
            ExitCode::from(res.exit)
        }
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
