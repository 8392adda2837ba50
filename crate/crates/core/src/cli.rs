//! The `multifan` command line: every command reads a fan document and prints
//! one JSON report with exact numbers.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
//! or computation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::arith::{rat_int, Int, Rat};
use crate::cyclotomic::Laurent;
use crate::document::{parse_support_list, rat_json, support_json, FanDocument};
use crate::equivariant::{is_t_cartier, EquivariantClass, SupportClass};
use crate::fan::MultiFan;
use crate::lattice::LatticeVector;
use crate::morelli::{cohomology_residual, decomposition_residual, mu, spanning_family, GenericPlane};
use crate::polytope::{count_bruteforce, count_formula, volume, volume_by_power, MultiPolytope};
use crate::todd::{ehrhart_coefficients, ehrhart_value, face_todd_count, td_t, verify_additivity};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "multifan", version, about = "Exact computations on simplicial multi-fans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate a fan; report face counts, completeness and degree.
    Validate { file: PathBuf },
    /// Ehrhart coefficients a_0..a_n of a support class.
    Ehrhart {
        file: PathBuf,
        /// Support name from the document, or a list like `1,1,1/2`. Defaults to all ones.
        #[arg(long)]
        xi: Option<String>,
        /// Compare with brute-force counts for ν = 1..N.
        #[arg(long, value_name = "N")]
        nu_check: Option<u32>,
    },
    /// Lattice points of P(ξ) or of a face, by formula and by enumeration.
    Count {
        file: PathBuf,
        #[arg(long)]
        xi: Option<String>,
        /// Face as comma-separated ray indices.
        #[arg(long)]
        face: Option<String>,
    },
    /// Volume of P(ξ) or of a face.
    Volume {
        file: PathBuf,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        face: Option<String>,
    },
    /// Todd genus with the rigidity check at several generic directions.
    Todd {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        directions: usize,
    },
    /// Morelli coefficients and the face decomposition residuals at random planes.
    Morelli {
        file: PathBuf,
        /// Degree k; all k in 1..=n when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 10)]
        planes: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Extra support classes (names or lists); all ones and every document support are always used.
        #[arg(long, visible_alias = "xs")]
        xi: Vec<String>,
        /// Check the decomposition in ordinary cohomology instead.
        #[arg(long)]
        cohomology: bool,
        /// Include the table of μ values.
        #[arg(long)]
        table: bool,
    },
    /// Star-subdivide a cone and compare Todd series.
    SubdivideCheck {
        /// Fan document supplying the cone; omit when using --edges.
        file: Option<PathBuf>,
        /// Top cone index in the document.
        #[arg(long, default_value_t = 0)]
        cone: usize,
        /// Edge vectors such as `1,0;0,1`.
        #[arg(long)]
        edges: Option<String>,
        /// New ray such as `2,1`; no subdivision when omitted.
        #[arg(long)]
        ray: Option<String>,
        /// Highest power of t compared; defaults to n.
        #[arg(long)]
        orders: Option<i64>,
        #[arg(long, default_value_t = 5)]
        directions: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// A JSON report under construction.
#[derive(Debug)]
pub struct Report {
    command: String,
    digest: String,
    seed: Option<u64>,
    results: Map<String, Value>,
    checks: Vec<Value>,
    warnings: Vec<String>,
    passed: bool,
}

impl Report {
    fn new(command: &str, input: &[u8]) -> Self {
        Report {
            command: command.to_string(),
            digest: hex::encode(Sha256::digest(input)),
            seed: None,
            results: Map::new(),
            checks: Vec::new(),
            warnings: Vec::new(),
            passed: true,
        }
    }

    fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: Value) {
        self.passed &= passed;
        self.checks.push(json!({"name": name.into(), "passed": passed, "detail": detail}));
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn to_json(&self) -> String {
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("input_sha256".into(), json!(self.digest));
        if let Some(s) = self.seed {
            out.insert("seed".into(), json!(s));
        }
        out.insert("results".into(), Value::Object(self.results.clone()));
        out.insert("checks".into(), Value::Array(self.checks.clone()));
        if !self.warnings.is_empty() {
            out.insert("warnings".into(), json!(self.warnings));
        }
        out.insert("passed".into(), json!(self.passed));
        serde_json::to_string_pretty(&Value::Object(out)).expect("report serializes")
    }
}

fn r(q: &Rat) -> Value {
    rat_json(q)
}

fn int_json(i: &Int) -> Value {
    i.to_i64().map_or_else(|| json!(i.to_string()), Value::from)
}

fn vector_json(v: &LatticeVector) -> Value {
    Value::Array(v.0.iter().map(int_json).collect())
}

fn series_json(s: &Laurent) -> Result<Value> {
    Ok(Value::Array(s.rational_coefficients()?.into_iter().map(|(k, q)| json!({"power": k, "value": r(&q)})).collect()))
}

struct Input {
    bytes: Vec<u8>,
    doc: FanDocument,
    fan: MultiFan,
}

fn load(path: &PathBuf) -> Result<Input> {
    let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc = FanDocument::parse(&text)?;
    let fan = doc.fan()?;
    Ok(Input { bytes, doc, fan })
}

fn support(input: &Input, arg: Option<&str>) -> Result<(String, SupportClass)> {
    let m = input.fan.ray_count();
    let Some(arg) = arg else {
        return Ok(("ones".into(), SupportClass::ones(m)));
    };
    if let Some(xi) = input.doc.support(arg) {
        return Ok((arg.to_string(), xi.clone()));
    }
    let xi = parse_support_list(arg).map_err(Error::Parse)?;
    if xi.len() != m {
        return Err(Error::Parse(format!("--xi has {} entries for {m} rays", xi.len())));
    }
    Ok((arg.to_string(), xi))
}

fn parse_face(arg: Option<&str>) -> Result<Vec<usize>> {
    match arg {
        None => Ok(Vec::new()),
        Some(s) if s.trim().is_empty() => Ok(Vec::new()),
        Some(s) => s.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("--face {s:?}: {e}")))).collect(),
    }
}

fn parse_vector(s: &str) -> Result<LatticeVector> {
    let coords =
        s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")))).collect::<Result<Vec<_>>>()?;
    Ok(LatticeVector::from_i64(&coords))
}

/// Parses the arguments and runs the command; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", report.to_json());
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Validate { file } => validate(file),
        Command::Ehrhart { file, xi, nu_check } => ehrhart(file, xi.as_deref(), *nu_check),
        Command::Count { file, xi, face } => count(file, xi.as_deref(), face.as_deref()),
        Command::Volume { file, xi, face } => volume_cmd(file, xi.as_deref(), face.as_deref()),
        Command::Todd { file, seed, directions } => todd(file, *seed, *directions),
        Command::Morelli { file, k, planes, seed, xi, cohomology, table } => morelli(file, *k, *planes, *seed, xi, *cohomology, *table),
        Command::SubdivideCheck { file, cone, edges, ray, orders, directions, seed } => {
            subdivide_check(file.as_ref(), *cone, edges.as_deref(), ray.as_deref(), *orders, *directions, *seed)
        }
    }
}

fn validate(file: &PathBuf) -> Result<Report> {
    let input = load(file)?;
    let fan = &input.fan;
    let mut report = Report::new("validate", &input.bytes);
    report.result("rank", json!(fan.rank()));
    report.result("face_counts", json!((0..=fan.rank()).map(|k| fan.faces(k).len()).collect::<Vec<_>>()));
    let completeness = fan.completeness();
    let pre = &completeness.precompleteness;
    report.result("pre_complete", json!(pre.is_precomplete()));
    report.result("pre_completeness_exact", json!(pre.exact));
    report.result("chambers_sampled", json!(pre.samples));
    if pre.is_precomplete() {
        report.result("degree", json!(pre.degree));
        report.result("complete", json!(completeness.is_complete()));
        if !completeness.failing_faces.is_empty() {
            report.result("failing_faces", json!(completeness.failing_faces));
        }
    } else {
        report.result("complete", json!(false));
        report.warnings.push("not pre-complete".into());
        report.result("degree_values", json!(pre.values));
    }
    report.result("smooth", json!(fan.is_smooth()));
    Ok(report)
}

fn ehrhart(file: &PathBuf, xi: Option<&str>, nu_check: Option<u32>) -> Result<Report> {
    let input = load(file)?;
    let fan = &input.fan;
    let (name, xi) = support(&input, xi)?;
    let mut report = Report::new("ehrhart", &input.bytes);
    report.result("support", json!({"name": name, "d": support_json(&xi)}));
    if is_t_cartier(fan, &xi) {
        let a = ehrhart_coefficients(fan, &xi)?;
        report.result("coefficients", Value::Array(a.iter().map(r).collect()));
        let counts = nu_range(nu_check.unwrap_or(0))
            .into_par_iter()
            .map(|nu| Ok(rat_int(&count_bruteforce(&MultiPolytope::new(fan, xi.scaled(&Rat::from_integer(nu.into())))?)?)))
            .collect::<Result<Vec<_>>>()?;
        for (nu, counted) in (1..).zip(counts) {
            let predicted = ehrhart_value(&a, nu);
            report.check(format!("nu={nu}"), predicted == counted, json!({"polynomial": r(&predicted), "bruteforce": r(&counted)}));
        }
    } else {
        report.warnings.push("support class is not T-Cartier; reporting per-ν counts from the general character-sum formula".into());
        let counts = nu_range(nu_check.unwrap_or(1).max(1))
            .into_par_iter()
            .map(|nu| {
                let p = MultiPolytope::new(fan, xi.scaled(&Rat::from_integer(nu.into())))?;
                Ok((count_formula(&p)?, count_bruteforce(&p)?))
            })
            .collect::<Result<Vec<_>>>()?;
        for (nu, (a, b)) in (1..).zip(counts) {
            report.check(format!("nu={nu}"), a == b, json!({"formula": int_json(&a), "bruteforce": int_json(&b)}));
        }
    }
    Ok(report)
}

fn nu_range(n: u32) -> Vec<i64> {
    (1..=i64::from(n)).collect()
}

fn count(file: &PathBuf, xi: Option<&str>, face: Option<&str>) -> Result<Report> {
    let input = load(file)?;
    let fan = &input.fan;
    let (name, xi) = support(&input, xi)?;
    let face = parse_face(face)?;
    let p = MultiPolytope::face_of(fan, xi.clone(), &face)?;
    let mut report = Report::new("count", &input.bytes);
    report.result("support", json!({"name": name, "d": support_json(&xi)}));
    report.result("face", json!(p.face()));
    let formula = count_formula(&p)?;
    let brute = count_bruteforce(&p)?;
    report.result("formula", int_json(&formula));
    report.result("bruteforce", int_json(&brute));
    report.check("formula = bruteforce", formula == brute, json!(format!("{formula} = {brute}")));
    if is_t_cartier(fan, &xi) {
        let todd = face_todd_count(fan, p.face(), &xi)?;
        report.result("todd_pushforward", int_json(&todd));
        report.check("formula = todd push-forward", todd == formula, json!(format!("{formula} = {todd}")));
    }
    Ok(report)
}

fn volume_cmd(file: &PathBuf, xi: Option<&str>, face: Option<&str>) -> Result<Report> {
    let input = load(file)?;
    let (name, xi) = support(&input, xi)?;
    let face = parse_face(face)?;
    let p = MultiPolytope::face_of(&input.fan, xi.clone(), &face)?;
    let mut report = Report::new("volume", &input.bytes);
    report.result("support", json!({"name": name, "d": support_json(&xi)}));
    report.result("face", json!(p.face()));
    report.result("face_group_order", json!(p.face_group_order()));
    let a = volume(&p)?;
    let b = volume_by_power(&p)?;
    report.result("volume", r(&a));
    report.check("p_*(e^ξ x_K) = p_*(ξ^(n-k)/(n-k)! x_K)", a == b, json!({"exponential": r(&a), "power": r(&b)}));
    Ok(report)
}

fn todd(file: &PathBuf, seed: u64, directions: usize) -> Result<Report> {
    let input = load(file)?;
    let fan = &input.fan;
    let n = fan.rank() as i64;
    let mut report = Report::new("todd", &input.bytes);
    report.seed = Some(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut genus: Option<Rat> = None;
    let mut samples = Vec::new();
    for _ in 0..directions.max(1) {
        let v = fan.sample_generic(&mut rng);
        let s = td_t(fan, &v, n)?;
        let coefficients = s.rational_coefficients()?;
        let off: Vec<i64> = coefficients.iter().filter(|(k, q)| *k != 0 && !q.is_zero()).map(|(k, _)| *k).collect();
        let constant = s.coefficient(0).to_rational().expect("rational coefficients");
        let degree = fan.degree(&v)?;
        report.check(format!("rigidity at {:?}", v), off.is_empty(), json!({"nonzero_powers": off, "series": series_json(&s)?}));
        report.check(
            format!("t^0 = degree at {:?}", v),
            constant == Rat::from_integer(degree.into()),
            json!({"t0": r(&constant), "degree": degree}),
        );
        if genus.as_ref().is_some_and(|g| *g != constant) {
            report.check("direction independence", false, json!(null));
        }
        genus = Some(constant);
        samples.push(vector_json(&v));
    }
    report.result("todd_genus", r(&genus.expect("at least one direction")));
    report.result("directions", Value::Array(samples));
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn morelli(file: &PathBuf, k: Option<usize>, planes: usize, seed: u64, extra: &[String], cohomology: bool, table: bool) -> Result<Report> {
    let input = load(file)?;
    let fan = &input.fan;
    let n = fan.rank();
    let mut report = Report::new(if cohomology { "morelli --cohomology" } else { "morelli" }, &input.bytes);
    report.seed = Some(seed);
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let mut xis: Vec<(String, SupportClass)> = vec![("ones".into(), SupportClass::ones(fan.ray_count()))];
    let named = input.doc.supports.iter().cloned().map(Ok);
    for entry in named.chain(extra.iter().map(|arg| support(&input, Some(arg)))) {
        let entry = entry?;
        if !xis.iter().any(|(_, xi)| *xi == entry.1) {
            xis.push(entry);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_k = Vec::new();
    for &k in &ks {
        let family = spanning_family(fan, k);
        // Planes are drawn in order from one stream so the report does not depend on scheduling.
        let sampled = (0..planes).map(|_| GenericPlane::sample(fan, k, &mut rng)).collect::<Result<Vec<_>>>()?;
        let entries =
            sampled.par_iter().map(|plane| plane_entry(fan, k, &family, &xis, plane, cohomology, table)).collect::<Result<Vec<_>>>()?;
        let evaluated: usize = entries.iter().map(|e| e.1).sum();
        let nonzero: usize = entries.iter().map(|e| e.2).sum();
        report.check(format!("k={k}: all residuals zero"), nonzero == 0, json!({"evaluated": evaluated, "nonzero": nonzero}));
        let classes: Vec<Value> = family.iter().map(|(k1, x)| json!({"weights": k1, "terms": class_json(x)})).collect();
        let plane_reports: Vec<Value> = entries.into_iter().map(|e| e.0).collect();
        per_k.push(json!({"k": k, "classes": classes, "planes": plane_reports}));
    }
    report.result("supports", Value::Array(xis.iter().map(|(n, xi)| json!({"name": n, "d": support_json(xi)})).collect()));
    report.result("degrees", Value::Array(per_k));
    Ok(report)
}

/// One plane's report entry, with the number of residuals evaluated and how many were nonzero.
fn plane_entry(
    fan: &MultiFan,
    k: usize,
    family: &[(usize, EquivariantClass)],
    xis: &[(String, SupportClass)],
    plane: &GenericPlane,
    cohomology: bool,
    table: bool,
) -> Result<(Value, usize, usize)> {
    let mut entry = Map::new();
    entry.insert("basis".into(), Value::Array(plane.basis.iter().map(vector_json).collect()));
    entry.insert(
        "certificate".into(),
        json!({
            "line_conditions": plane.certificate.line_conditions,
            "surjectivity_conditions": plane.certificate.surjectivity_conditions,
            "rejected_candidates": plane.certificate.rejected,
        }),
    );
    let mut residuals = Vec::new();
    let (mut evaluated, mut nonzero) = (0, 0);
    for (_, x) in family {
        if cohomology {
            let residual = cohomology_residual(fan, x, plane)?;
            evaluated += 1;
            nonzero += usize::from(residual.iter().any(|q| !q.is_zero()));
            residuals.push(Value::Array(residual.iter().map(r).collect()));
        } else {
            let mut row = Vec::new();
            for (_, xi) in xis {
                let residual = decomposition_residual(fan, x, xi, plane)?;
                evaluated += 1;
                nonzero += usize::from(!residual.is_zero());
                row.push(r(&residual));
            }
            residuals.push(Value::Array(row));
        }
    }
    entry.insert("residuals".into(), Value::Array(residuals));
    if table {
        let mut rows = Vec::new();
        for (index, (_, x)) in family.iter().enumerate() {
            for face in fan.faces(k) {
                rows.push(json!({"class": index, "face": face, "mu": r(&mu(fan, x, face, plane)?)}));
            }
        }
        entry.insert("mu".into(), Value::Array(rows));
    }
    Ok((Value::Object(entry), evaluated, nonzero))
}

fn class_json(x: &EquivariantClass) -> Value {
    Value::Array(x.terms().map(|(e, c)| json!({"exponents": e, "coefficient": rat_json(c)})).collect())
}

#[allow(clippy::too_many_arguments)]
fn subdivide_check(
    file: Option<&PathBuf>,
    cone: usize,
    edges: Option<&str>,
    ray: Option<&str>,
    orders: Option<i64>,
    directions: usize,
    seed: u64,
) -> Result<Report> {
    let (bytes, edge_vectors) = match (edges, file) {
        (Some(arg), _) => (arg.as_bytes().to_vec(), arg.split(';').map(parse_vector).collect::<Result<Vec<_>>>()?),
        (None, Some(path)) => {
            let input = load(path)?;
            let top = input.fan.top_cones().get(cone).ok_or_else(|| Error::InvalidInput(format!("no top cone {cone}")))?;
            (input.bytes.clone(), top.rays.iter().map(|&i| input.fan.edges()[i].clone()).collect())
        }
        (None, None) => return Err(Error::InvalidInput("give a fan document or --edges".into())),
    };
    let base = MultiFan::single_cone(&edge_vectors)?;
    let n = base.rank();
    let subdivision = match ray {
        Some(arg) => base.star_subdivide(0, &parse_vector(arg)?)?,
        None => base.clone(),
    };
    let high = orders.unwrap_or(n as i64);
    let mut report = Report::new("subdivide-check", &bytes);
    report.seed = Some(seed);
    report.result("edges", Value::Array(edge_vectors.iter().map(vector_json).collect()));
    report.result(
        "cones",
        json!(subdivision.top_cones().iter().map(|c| json!({"rays": c.rays, "group_order": c.group.order()})).collect::<Vec<_>>()),
    );
    report.result("window", json!([-(n as i64), high]));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..directions.max(1) {
        let v = loop {
            let v = subdivision.sample_generic(&mut rng);
            if base.is_generic(&v) {
                break v;
            }
        };
        let residual = verify_additivity(&edge_vectors, &subdivision, &v, high)?;
        report.check(format!("residual at {:?}", v), residual.is_zero(), series_json(&residual)?);
    }
    Ok(report)
}
