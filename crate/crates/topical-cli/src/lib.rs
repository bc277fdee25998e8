//! IO layer for the topical calculus: JSON encodings of scalars, vectors,
//! functions and sets, seeded sampling for rational-mode probe sets, and
//! the operation runners behind the `topical` binary.
//!
//! Everything here is a pure function of (parsed input, configuration,
//! seed), so command output is byte-identical across runs.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use topical_core::{
    bar_polar_membership, biconjugate_phi, bipolar_membership, boolean_cube, conjugate_phi,
    conjugate_psi, conjugate_reflected, default_lambda_sample, dual_polar_membership,
    lower_conjugate_phi, lower_conjugate_psi, phi_subdiff_membership, polar_membership,
    supp_at_point_x, supp_at_point_xk, supp_membership, supp_reconstruct, support_function,
    ConjugateValue, Error as CoreError, Exactness, ExtendedScalar, FinGenTopicalFn, FiniteSet,
    FnHandle, ProbeSet, Rational, SemifieldKind, TabulatedFn, TheoremId, Vector,
    VerificationResult, MAX_EXHAUSTIVE_DIM,
};

pub mod sampling;

/// Failures surfaced to the shell, each with its contractual exit code:
/// 2 parse, 3 dimension mismatch, 4 precondition violation.  A verification
/// counterexample is not an error — `run_verify` reports it in-band and the
/// binary exits 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Dimension(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Dimension(_) => 3,
            CliError::Precondition(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Dimension(m) | CliError::Precondition(m) => m,
        }
    }
}

/// Core errors raised while interpreting user input are the user's fault:
/// they all map to the parse exit code.
fn parse_err(e: CoreError) -> CliError {
    CliError::Parse(e.to_string())
}

/// Core errors raised during execution keep their own exit codes.
fn exec_err(e: CoreError) -> CliError {
    match e {
        CoreError::DimensionMismatch { .. } => CliError::Dimension(e.to_string()),
        CoreError::Parse(_) => CliError::Parse(e.to_string()),
        _ => CliError::Precondition(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// JSON encodings
// ---------------------------------------------------------------------------

/// A scalar on the wire: "eps" | "top" | "e" | {"q": "p/r"}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Tag(String),
    Q { q: String },
}

/// One generator of a finitely generated topical function.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub y: Vec<ScalarJson>,
    pub c: ScalarJson,
}

/// A tabulated Boolean-cube function: parallel point and value lists
/// covering the cube exactly once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub points: Vec<Vec<ScalarJson>>,
    pub values: Vec<ScalarJson>,
}

/// A function on the wire, externally tagged by representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionJson {
    Fingen(Vec<GeneratorJson>),
    Table(TableJson),
    InverseOf(Box<FunctionJson>),
    Const(ScalarJson),
}

/// A finite point set on the wire.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetJson {
    pub points: Vec<Vec<ScalarJson>>,
}

pub fn parse_scalar(kind: SemifieldKind, s: &ScalarJson) -> Result<ExtendedScalar, CliError> {
    let value = match s {
        ScalarJson::Tag(t) => match t.as_str() {
            "eps" => ExtendedScalar::Eps,
            "top" => ExtendedScalar::Top,
            "e" => ExtendedScalar::unit(),
            other => return Err(CliError::Parse(format!("unknown scalar tag {other:?}"))),
        },
        ScalarJson::Q { q } => {
            let r = Rational::from_str(q)
                .map_err(|_| CliError::Parse(format!("malformed rational {q:?}")))?;
            ExtendedScalar::Finite(r)
        }
    };
    kind.validate_scalar(&value).map_err(parse_err)?;
    Ok(value)
}

pub fn render_scalar(kind: SemifieldKind, s: &ExtendedScalar) -> ScalarJson {
    match s {
        ExtendedScalar::Eps => ScalarJson::Tag("eps".into()),
        ExtendedScalar::Top => ScalarJson::Tag("top".into()),
        ExtendedScalar::Finite(q) => {
            if kind == SemifieldKind::Boolean {
                ScalarJson::Tag("e".into())
            } else {
                ScalarJson::Q { q: q.to_string() }
            }
        }
    }
}

pub fn parse_vector(kind: SemifieldKind, coords: &[ScalarJson]) -> Result<Vector, CliError> {
    let parsed: Vec<ExtendedScalar> =
        coords.iter().map(|c| parse_scalar(kind, c)).collect::<Result<_, _>>()?;
    Vector::new(parsed).map_err(parse_err)
}

pub fn render_vector(kind: SemifieldKind, v: &Vector) -> Vec<ScalarJson> {
    v.coords().iter().map(|c| render_scalar(kind, c)).collect()
}

pub fn parse_set(kind: SemifieldKind, s: &SetJson) -> Result<FiniteSet, CliError> {
    if s.points.is_empty() {
        return Err(CliError::Parse("a set needs at least one point; dimension is otherwise unknown".into()));
    }
    let pts: Vec<Vector> =
        s.points.iter().map(|p| parse_vector(kind, p)).collect::<Result<_, _>>()?;
    let dim = pts[0].dim();
    FiniteSet::new(dim, pts).map_err(parse_err)
}

pub fn parse_function(kind: SemifieldKind, f: &FunctionJson) -> Result<FnHandle, CliError> {
    match f {
        FunctionJson::Fingen(gens) => {
            if gens.is_empty() {
                return Err(CliError::Parse("fingen needs at least one generator".into()));
            }
            let parsed: Vec<(Vector, ExtendedScalar)> = gens
                .iter()
                .map(|g| Ok((parse_vector(kind, &g.y)?, parse_scalar(kind, &g.c)?)))
                .collect::<Result<_, CliError>>()?;
            let dim = parsed[0].0.dim();
            Ok(FnHandle::FinGen(FinGenTopicalFn::new(dim, parsed).map_err(parse_err)?))
        }
        FunctionJson::Table(table) => {
            if kind != SemifieldKind::Boolean {
                return Err(CliError::Parse(
                    "table functions require --semifield boolean".into(),
                ));
            }
            parse_table(table)
        }
        FunctionJson::InverseOf(inner) => {
            Ok(FnHandle::inverse(parse_function(kind, inner)?))
        }
        FunctionJson::Const(c) => Ok(FnHandle::constant(parse_scalar(kind, c)?)),
    }
}

fn parse_table(table: &TableJson) -> Result<FnHandle, CliError> {
    if table.points.is_empty() || table.points.len() != table.values.len() {
        return Err(CliError::Parse(
            "a table needs equally many points and values, covering the whole cube".into(),
        ));
    }
    let dim = table.points[0].len();
    let size = 1usize
        .checked_shl(dim as u32)
        .filter(|s| *s == table.points.len())
        .ok_or_else(|| CliError::Parse("table does not cover the cube exactly once".into()))?;
    let cube = boolean_cube(dim);
    let mut values = vec![None; size];
    for (point, value) in table.points.iter().zip(&table.values) {
        let v = parse_vector(SemifieldKind::Boolean, point)?;
        let idx = cube
            .iter()
            .position(|p| *p == v)
            .ok_or_else(|| CliError::Parse("table point is not a cube point".into()))?;
        if values[idx].is_some() {
            return Err(CliError::Parse("table lists a cube point twice".into()));
        }
        values[idx] = Some(parse_scalar(SemifieldKind::Boolean, value)?);
    }
    let values: Vec<ExtendedScalar> = values
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::Parse("table misses a cube point".into()))?;
    Ok(FnHandle::Table(TabulatedFn::new(dim, values).map_err(parse_err)?))
}

// ---------------------------------------------------------------------------
// Input envelopes and result shapes
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
pub struct EvalInput {
    pub function: FunctionJson,
    pub x: Vec<ScalarJson>,
}

#[derive(Debug, Deserialize)]
pub struct ConjugateInput {
    pub function: FunctionJson,
    pub coupling: String,
    pub y: Vec<ScalarJson>,
    #[serde(default)]
    pub d: Option<ScalarJson>,
}

#[derive(Debug, Deserialize)]
pub struct PolarInput {
    pub set: SetJson,
    pub query: String,
    pub x: Vec<ScalarJson>,
}

#[derive(Debug, Deserialize)]
pub struct SupportInput {
    pub function: FunctionJson,
    pub query: String,
    #[serde(default)]
    pub x: Option<Vec<ScalarJson>>,
    #[serde(default)]
    pub x0: Option<Vec<ScalarJson>>,
    #[serde(default)]
    pub y: Option<Vec<ScalarJson>>,
    #[serde(default)]
    pub d: Option<ScalarJson>,
}

#[derive(Debug, Serialize)]
pub struct ValueOutput {
    pub value: ScalarJson,
    pub exactness: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ScalarJson>>,
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub y: Vec<ScalarJson>,
    pub sigma: ScalarJson,
    pub x_over_y: ScalarJson,
}

#[derive(Debug, Serialize)]
pub struct MemberOutput {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Serialize)]
pub struct ReportLine {
    pub theorem: &'static str,
    pub checked: u64,
    pub result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CensusOutput {
    pub functions: u64,
    pub topical: u64,
    pub anti_topical: u64,
    pub biconjugate_fixed: u64,
}

fn exactness_tag(e: Exactness) -> &'static str {
    match e {
        Exactness::Exact => "exact",
        Exactness::LowerBound => "lower_bound",
        Exactness::UpperBound => "upper_bound",
    }
}

fn value_output(kind: SemifieldKind, cv: ConjugateValue) -> ValueOutput {
    ValueOutput {
        value: render_scalar(kind, &cv.value),
        exactness: exactness_tag(cv.exactness),
        witness: cv.witness.map(|w| render_vector(kind, &w)),
    }
}

fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output shapes serialize infallibly")
}

fn check_dim_flag(dim_flag: Option<usize>, found: usize) -> Result<(), CliError> {
    match dim_flag {
        Some(d) if d != found => Err(CliError::Dimension(format!(
            "dimension mismatch: expected {d}, found {found}"
        ))),
        _ => Ok(()),
    }
}

// ---------------------------------------------------------------------------
// Probe assembly
// ---------------------------------------------------------------------------

/// The probe set behind sampled queries: exhaustive in Boolean mode (the
/// whole cube), otherwise the structural points of the handle plus seeded
/// random vectors plus any user-supplied points.
pub fn assemble_probes(
    kind: SemifieldKind,
    f: &FnHandle,
    dim: usize,
    seed: u64,
    user: &[Vector],
) -> Result<ProbeSet, CliError> {
    if kind == SemifieldKind::Boolean {
        if dim > MAX_EXHAUSTIVE_DIM {
            return Err(CliError::Precondition(format!(
                "boolean mode sweeps exhaustively and is limited to dimension {MAX_EXHAUSTIVE_DIM}"
            )));
        }
        return ProbeSet::boolean_exhaustive(dim).map_err(exec_err);
    }
    let mut rng = sampling::rng(seed);
    let mut pts: Vec<Vector> = user.to_vec();
    for _ in 0..24 {
        pts.push(sampling::vector(&mut rng, dim, true));
    }
    ProbeSet::for_function(f, dim, &pts, &default_lambda_sample()).map_err(exec_err)
}

pub fn parse_probe_file(kind: SemifieldKind, text: &str) -> Result<Vec<Vector>, CliError> {
    let raw: Vec<Vec<ScalarJson>> = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("probes file: {e}")))?;
    raw.iter().map(|p| parse_vector(kind, p)).collect()
}

// ---------------------------------------------------------------------------
// Operation runners
// ---------------------------------------------------------------------------

pub fn run_eval(
    kind: SemifieldKind,
    dim_flag: Option<usize>,
    input: &str,
) -> Result<String, CliError> {
    let parsed: EvalInput =
        serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))?;
    let f = parse_function(kind, &parsed.function)?;
    let x = parse_vector(kind, &parsed.x)?;
    check_dim_flag(dim_flag, x.dim())?;
    let value = f.eval(&x).map_err(exec_err)?;
    Ok(to_line(&ValueOutput {
        value: render_scalar(kind, &value),
        exactness: "exact",
        witness: None,
    }))
}

pub fn run_conjugate(
    kind: SemifieldKind,
    dim_flag: Option<usize>,
    seed: u64,
    input: &str,
    probe_points: &[Vector],
) -> Result<String, CliError> {
    let parsed: ConjugateInput =
        serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))?;
    let f = parse_function(kind, &parsed.function)?;
    let y = parse_vector(kind, &parsed.y)?;
    check_dim_flag(dim_flag, y.dim())?;
    let d = parsed.d.as_ref().map(|d| parse_scalar(kind, d)).transpose()?;
    let need_d = || {
        d.clone().ok_or_else(|| {
            CliError::Parse("this coupling takes the truncation scalar d".into())
        })
    };
    let probes = assemble_probes(kind, &f, y.dim(), seed, probe_points)?;
    let cv = match parsed.coupling.as_str() {
        "phi" => conjugate_phi(&f, &y, &probes).map_err(exec_err)?,
        "psi" => conjugate_psi(&f, &y, &need_d()?, &probes).map_err(exec_err)?,
        "theta_phi" => lower_conjugate_phi(&f, &y, &probes).map_err(exec_err)?,
        "theta_psi" => lower_conjugate_psi(&f, &y, &need_d()?, &probes).map_err(exec_err)?,
        "phi_reflected" => conjugate_reflected(&f, &y, &probes).map_err(exec_err)?,
        "biconjugate_phi" => biconjugate_phi(&f, &y, &probes).map_err(exec_err)?,
        other => {
            return Err(CliError::Parse(format!("unknown coupling {other:?}")));
        }
    };
    Ok(to_line(&value_output(kind, cv)))
}

pub fn run_polar(
    kind: SemifieldKind,
    dim_flag: Option<usize>,
    input: &str,
) -> Result<String, CliError> {
    let parsed: PolarInput =
        serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))?;
    let set = parse_set(kind, &parsed.set)?;
    let x = parse_vector(kind, &parsed.x)?;
    check_dim_flag(dim_flag, x.dim())?;
    let out = match parsed.query.as_str() {
        "polar" => MemberOutput { member: polar_membership(&x, &set).map_err(exec_err)?, witness: None },
        "bar_polar" => {
            MemberOutput { member: bar_polar_membership(&x, &set).map_err(exec_err)?, witness: None }
        }
        "dual_polar" => {
            MemberOutput { member: dual_polar_membership(&x, &set).map_err(exec_err)?, witness: None }
        }
        "bipolar" => {
            let res = bipolar_membership(&x, &set).map_err(exec_err)?;
            MemberOutput {
                member: res.member,
                witness: res.witness.map(|w| WitnessJson {
                    y: render_vector(kind, &w.y),
                    sigma: render_scalar(kind, &w.sigma_value),
                    x_over_y: render_scalar(kind, &w.x_over_y),
                }),
            }
        }
        "support" => {
            let value = support_function(&set, &x).map_err(exec_err)?;
            return Ok(to_line(&ValueOutput {
                value: render_scalar(kind, &value),
                exactness: "exact",
                witness: None,
            }));
        }
        other => return Err(CliError::Parse(format!("unknown polar query {other:?}"))),
    };
    Ok(to_line(&out))
}

pub fn run_support(
    kind: SemifieldKind,
    dim_flag: Option<usize>,
    seed: u64,
    input: &str,
    probe_points: &[Vector],
) -> Result<String, CliError> {
    let parsed: SupportInput =
        serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))?;
    let f = parse_function(kind, &parsed.function)?;
    let dim = f
        .dim()
        .or(dim_flag)
        .ok_or_else(|| CliError::Parse("cannot infer the dimension; pass --dim".into()))?;
    check_dim_flag(dim_flag, dim)?;
    let field = |name: &str, v: &Option<Vec<ScalarJson>>| -> Result<Vector, CliError> {
        let coords = v
            .as_ref()
            .ok_or_else(|| CliError::Parse(format!("query {:?} needs {name}", parsed.query)))?;
        let vec = parse_vector(kind, coords)?;
        check_dim_flag(Some(dim), vec.dim())?;
        Ok(vec)
    };
    let probes = assemble_probes(kind, &f, dim, seed, probe_points)?;
    let out = match parsed.query.as_str() {
        "membership" => {
            let y = field("y", &parsed.y)?;
            to_line(&MemberOutput {
                member: supp_membership(&f, &y, &probes).map_err(exec_err)?,
                witness: None,
            })
        }
        "at_point" => {
            let x0 = field("x0", &parsed.x0)?;
            let y = field("y", &parsed.y)?;
            to_line(&MemberOutput {
                member: supp_at_point_x(&f, &x0, &y, &probes).map_err(exec_err)?,
                witness: None,
            })
        }
        "at_point_truncated" => {
            let x0 = field("x0", &parsed.x0)?;
            let y = field("y", &parsed.y)?;
            let d = parsed
                .d
                .as_ref()
                .ok_or_else(|| CliError::Parse("query \"at_point_truncated\" needs d".into()))?;
            let d = parse_scalar(kind, d)?;
            to_line(&MemberOutput {
                member: supp_at_point_xk(&f, &x0, &y, &d, &probes).map_err(exec_err)?,
                witness: None,
            })
        }
        "reconstruct" => {
            let x = field("x", &parsed.x)?;
            let value = supp_reconstruct(&f, &x, &probes).map_err(exec_err)?;
            to_line(&ValueOutput {
                value: render_scalar(kind, &value),
                exactness: "exact",
                witness: None,
            })
        }
        "subdifferential" => {
            let x0 = field("x0", &parsed.x0)?;
            let y = field("y", &parsed.y)?;
            to_line(&MemberOutput {
                member: phi_subdiff_membership(&f, &x0, &y, &probes).map_err(exec_err)?,
                witness: None,
            })
        }
        other => return Err(CliError::Parse(format!("unknown support query {other:?}"))),
    };
    Ok(out)
}

/// Runs the exhaustive verifier.  Returns the JSON-lines report and whether
/// every law passed; the binary turns a failure into exit code 1.
pub fn run_verify(
    kind: SemifieldKind,
    dim: usize,
    theorem: Option<&str>,
) -> Result<(String, bool), CliError> {
    if kind != SemifieldKind::Boolean {
        return Err(CliError::Precondition(
            "verification sweeps the Boolean model; pass --semifield boolean".into(),
        ));
    }
    let reports = match theorem {
        None | Some("all") => topical_core::verify_all(dim).map_err(exec_err)?,
        Some(name) => {
            let id = TheoremId::from_name(name)
                .ok_or_else(|| CliError::Parse(format!("unknown theorem id {name:?}")))?;
            vec![topical_core::verify(id, dim).map_err(exec_err)?]
        }
    };
    let mut all_passed = true;
    let mut lines = String::new();
    for report in &reports {
        let line = match &report.result {
            VerificationResult::Pass => ReportLine {
                theorem: report.theorem.name(),
                checked: report.instances_checked,
                result: "pass",
                instance: None,
            },
            VerificationResult::Counterexample(instance) => {
                all_passed = false;
                ReportLine {
                    theorem: report.theorem.name(),
                    checked: report.instances_checked,
                    result: "counterexample",
                    instance: Some(instance.clone()),
                }
            }
        };
        lines.push_str(&to_line(&line));
        lines.push('\n');
    }
    lines.pop();
    Ok((lines, all_passed))
}

pub fn run_census(kind: SemifieldKind, dim: usize) -> Result<String, CliError> {
    if kind != SemifieldKind::Boolean {
        return Err(CliError::Precondition(
            "the census enumerates the Boolean model; pass --semifield boolean".into(),
        ));
    }
    let c = topical_core::census(dim).map_err(exec_err)?;
    Ok(to_line(&CensusOutput {
        functions: c.functions,
        topical: c.topical,
        anti_topical: c.anti_topical,
        biconjugate_fixed: c.biconjugate_fixed,
    }))
}
