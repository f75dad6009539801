//! Verification suites, deterministic parameter sampling and the JSON report
//! (schema `hecke-fusion/1`) shared by the command-line tool.

mod listing;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::scalar::{sample_generic, Field, GroundField, HeckeParams, Rational};

pub use listing::{idempotent_report, tableaux_listing, IdempotentReport};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "hecke-fusion/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Generic,
    SymbolicQ,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Mode::Generic),
            "symbolic-q" => Ok(Mode::SymbolicQ),
            _ => Err(Error::Parse(format!("unknown mode {s:?} (expected generic or symbolic-q)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Generic => "generic",
            Mode::SymbolicQ => "symbolic-q",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    Fusion,
    Scalar,
    Baxter,
    Classical,
    All,
}

impl Suite {
    const EACH: [Suite; 5] = [Suite::Algebra, Suite::Fusion, Suite::Scalar, Suite::Baxter, Suite::Classical];

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Fusion => "fusion",
            Suite::Scalar => "scalar",
            Suite::Baxter => "baxter",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything that determines a run. The same config always yields the same
/// report (wall times excepted, and those are only emitted on request).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` runs the default ladder of sizes for each suite.
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub mode: Mode,
    pub seed: u64,
    pub q: Option<Rational>,
    pub v: Option<Vec<Rational>>,
    pub suite: Suite,
    pub jobs: usize,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { m: None, n: None, mode: Mode::Generic, seed: 0, q: None, v: None, suite: Suite::All, jobs: 1, timings: false }
    }
}

impl RunConfig {
    /// The rational ground field for `(m, n)`: sampled from the seed, with
    /// any explicit `q` or `v` taking precedence, and checked for genericity.
    pub fn generic_ground(&self, m: usize, n: usize) -> Result<GroundField> {
        let sampled = sample_generic(m, n, self.seed).generic_params().expect("sampled ground is rational");
        let q = self.q.clone().unwrap_or(sampled.q);
        let v = self.v.clone().unwrap_or(sampled.v);
        if v.len() != m {
            return Err(Error::InvalidParameter(format!("--v lists {} values but m = {m}", v.len())));
        }
        GroundField::generic(q, v, n)
    }

    fn check_overrides(&self) -> Result<()> {
        if self.mode == Mode::SymbolicQ && (self.q.is_some() || self.v.is_some()) {
            return Err(Error::InvalidParameter("--q and --v only apply in generic mode".into()));
        }
        if self.m.is_some() != self.n.is_some() {
            return Err(Error::InvalidParameter("--m and --n must be given together".into()));
        }
        if self.m.is_none() && (self.q.is_some() || self.v.is_some()) {
            return Err(Error::InvalidParameter("--q and --v need an explicit --m and --n".into()));
        }
        if self.m == Some(0) {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        Ok(())
    }

    fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed.to_string(),
            "q": self.q.as_ref().map(|x| x.to_string()),
            "v": self.v.as_ref().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            "suite": self.suite,
        })
    }
}

/// One verified property.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: Value,
    pub passed: bool,
    /// Number of instances checked.
    pub checked: usize,
    /// Failing instances, each with enough data to replay it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

/// Failing instances kept per record.
const MAX_WITNESSES: usize = 5;

impl CheckRecord {
    pub fn new(name: impl Into<String>, parameters: &Value, checked: usize, failures: Vec<Value>) -> Self {
        let passed = failures.is_empty();
        let witness = (!passed).then(|| {
            json!({
                "failures": failures.len(),
                "instances": failures.into_iter().take(MAX_WITNESSES).collect::<Vec<_>>(),
            })
        });
        CheckRecord { name: name.into(), parameters: parameters.clone(), passed, checked, witness, wall_ms: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub config: Value,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug)]
struct Task {
    suite: Suite,
    m: usize,
    n: usize,
    symbolic: bool,
}

fn default_sizes(suite: Suite, mode: Mode) -> Vec<(usize, usize)> {
    match (suite, mode) {
        // the classical suite always works over Q(zeta_m)(q)
        (Suite::Classical, _) => vec![(1, 3), (2, 2), (2, 3), (3, 3), (4, 3)],
        (_, Mode::SymbolicQ) => vec![(1, 3), (2, 2), (2, 3)],
        (Suite::Algebra, Mode::Generic) => vec![(1, 4), (2, 3), (3, 3), (2, 4)],
        (Suite::Fusion, Mode::Generic) => vec![(1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)],
        (Suite::Scalar, Mode::Generic) => vec![(1, 4), (2, 4), (3, 4)],
        (Suite::Baxter, Mode::Generic) => vec![(1, 3), (2, 3), (3, 3)],
        (Suite::All, _) => unreachable!("expanded before use"),
    }
}

fn plan(config: &RunConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for suite in config.suite.expand() {
        let sizes = match (config.m, config.n) {
            (Some(m), Some(n)) => vec![(m, n)],
            _ => default_sizes(suite, config.mode),
        };
        for (m, n) in sizes {
            let symbolic = suite == Suite::Classical || config.mode == Mode::SymbolicQ;
            tasks.push(Task { suite, m, n, symbolic });
        }
    }
    tasks
}

fn run_task<F: Field>(config: &RunConfig, task: Task, params: HeckeParams<F>, ground: Value) -> Result<Vec<CheckRecord>> {
    let p = json!({ "m": task.m, "n": task.n, "mode": if task.symbolic { Mode::SymbolicQ } else { config.mode }, "ground": ground });
    let timed = |f: &dyn Fn() -> Result<Vec<CheckRecord>>| -> Result<Vec<CheckRecord>> {
        let start = Instant::now();
        let mut records = f()?;
        if config.timings {
            let ms = start.elapsed().as_millis() as u64;
            for r in &mut records {
                r.wall_ms = Some(ms);
            }
        }
        Ok(records)
    };
    match task.suite {
        Suite::Algebra => timed(&|| {
            let alg = HeckeAlgebra::new(params.clone(), task.n)?;
            Ok(suites::algebra_checks(&alg, config.seed, &p))
        }),
        Suite::Fusion => timed(&|| {
            let alg = HeckeAlgebra::new(params.clone(), task.n)?;
            suites::fusion_checks(&alg, &p)
        }),
        Suite::Scalar => timed(&|| suites::scalar_checks(&params, task.n, &p)),
        Suite::Baxter => timed(&|| {
            let alg = HeckeAlgebra::new(params.clone(), task.n)?;
            suites::baxter_checks(&alg, config.seed, &p)
        }),
        Suite::Classical => {
            // symbolic fusion gets expensive quickly; the default ladder
            // specializes idempotents only up to dimension 48
            let explicit = config.m.is_some();
            let dim: usize = (1..=task.n).map(|k| task.m * k).product();
            let with_fusion = explicit || dim <= 48;
            timed(&|| suites::classical_checks(task.m, task.n, with_fusion, &p))
        }
        Suite::All => unreachable!("expanded before use"),
    }
}

fn dispatch(config: &RunConfig, task: Task) -> Result<Vec<CheckRecord>> {
    if task.symbolic {
        let ground = json!({ "q": "q", "v": format!("zeta_{}^(k-1)", task.m) });
        run_task(config, task, HeckeParams::symbolic_q(task.m), ground)
    } else {
        let g = config.generic_ground(task.m, task.n)?;
        let params = g.generic_params().expect("generic ground");
        let ground = json!({
            "q": params.q.to_string(),
            "v": params.v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        });
        run_task(config, task, params, ground)
    }
}

/// Runs the selected suites. Configuration problems (bad overrides,
/// non-generic parameters) are errors; failed checks are reported in the
/// records.
pub fn run_verification(config: &RunConfig) -> Result<VerificationReport> {
    config.check_overrides()?;
    let tasks = plan(config);
    for t in tasks.iter().filter(|t| !t.symbolic) {
        config.generic_ground(t.m, t.n)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let results: Vec<Result<Vec<CheckRecord>>> = pool.install(|| tasks.par_iter().map(|t| dispatch(config, *t)).collect());
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    records.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = records.iter().filter(|r| r.passed).count();
    let summary = Summary { total: records.len(), passed, failed: records.len() - passed };
    Ok(VerificationReport { schema: SCHEMA, config: config.to_json(), records, summary })
}
