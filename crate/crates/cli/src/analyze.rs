use std::collections::BTreeMap;
use std::time::Instant;

use code_factory::{Boundary, ChangeOfBoundary, Family, StabilizerCode};
use gauge_core::{Distance, F2GaugeStructure, GaugeError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checks::{self, CheckResult};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 20_180_705;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeIdentity {
    pub name: String,
    #[serde(rename = "L")]
    pub l: usize,
    pub d: usize,
    pub qubits_per_site: usize,
    pub boundary: Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DistanceReport {
    Exact { value: usize },
    AboveBound { bound: usize },
    NoLogicals,
}

impl From<Distance> for DistanceReport {
    fn from(d: Distance) -> Self {
        match d {
            Distance::Exact(value) => DistanceReport::Exact { value },
            Distance::Unknown { bound } => DistanceReport::AboveBound { bound },
            Distance::NoLogicals => DistanceReport::NoLogicals,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub code: CodeIdentity,
    #[serde(rename = "N")]
    pub num_qubits: usize,
    pub num_stabilizers: usize,
    pub dim_ker_phi: usize,
    pub dim_trivial: Option<usize>,
    pub dim_topological: Option<usize>,
    pub k: usize,
    pub distance: Option<DistanceReport>,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub timings_us: BTreeMap<String, u64>,
}

impl AnalysisReport {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    #[must_use]
    pub fn to_text(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_owned(), |v| v.to_string());
        let mut lines = vec![
            format!("code            {} L={} ({})", self.code.name, self.code.l, boundary_name(&self.code.boundary)),
            format!("N               {}", self.num_qubits),
            format!("|S|             {}", self.num_stabilizers),
            format!("dim ker phi     {}", self.dim_ker_phi),
            format!("dim trivial     {}", opt(self.dim_trivial)),
            format!("dim topological {}", opt(self.dim_topological)),
            format!("k               {}", self.k),
        ];
        if let Some(d) = self.distance {
            lines.push(match d {
                DistanceReport::Exact { value } => format!("distance        {value}"),
                DistanceReport::AboveBound { bound } => format!("distance        > {bound}"),
                DistanceReport::NoLogicals => "distance        none (k = 0)".to_owned(),
            });
        }
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            let mut line = format!("check {:<22} {status}", c.name);
            if let Some(w) = &c.witness {
                line.push_str(&format!(": {w}"));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

fn boundary_name(b: &Boundary) -> String {
    match b {
        Boundary::Periodic => "periodic".into(),
        Boundary::Open { cuts, .. } => {
            let axes: Vec<String> = cuts.iter().map(ToString::to_string).collect();
            format!("open, cut along {}", axes.join(","))
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub trials: usize,
    pub distance_max_weight: Option<usize>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            seed: DEFAULT_SEED,
            trials: 100,
            distance_max_weight: None,
        }
    }
}

/// The built-in change of boundary when `code` is exactly a periodic family
/// code that has one.
#[must_use]
pub fn builtin_boundary(code: &StabilizerCode) -> Option<ChangeOfBoundary> {
    let family: Family = code.name.parse().ok()?;
    if family == Family::Haah || !code.boundary.is_periodic() {
        return None;
    }
    let beta = ChangeOfBoundary::builtin(family, code.layout.l).ok()?;
    (beta.source == *code).then_some(beta)
}

fn timed<T>(timings: &mut BTreeMap<String, u64>, name: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(name.into(), u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX));
    out
}

pub fn analyze(
    code: StabilizerCode,
    beta: Option<&ChangeOfBoundary>,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport, GaugeError> {
    let mut timings = BTreeMap::new();
    let identity = CodeIdentity {
        name: code.name.clone(),
        l: code.layout.l,
        d: code.layout.d,
        qubits_per_site: code.layout.n,
        boundary: code.boundary.clone(),
    };
    let gs = F2GaugeStructure::new(code);
    let mut checks = vec![
        timed(&mut timings, "duality", || checks::duality(&gs)),
        timed(&mut timings, "symplectic", || checks::commutation(&gs)),
    ];

    let (space, dims) = match beta {
        Some(b) => {
            let space = timed(&mut timings, "constraints", || gs.trivial_and_topological(b))?;
            let triv = space.trivial_basis.as_ref().map(Vec::len);
            let top = space.topological_basis.as_ref().map(Vec::len);
            (space, (triv, top))
        }
        None => (timed(&mut timings, "constraints", || gs.constraint_space()), (None, None)),
    };
    let dim_ker_phi = space.dim();
    let k = timed(&mut timings, "logicals", || gs.logical_space())?.k;
    checks.push(checks::counting(&gs, dim_ker_phi, k));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    checks.push(timed(&mut timings, "brule", || {
        checks::brule_syndromes(&gs, &space.basis, &mut rng, opts.trials)
    }));
    checks.push(checks::brule_realizability(&gs, &space.basis, &mut rng, opts.trials));

    if let (Some(b), Some(top)) = (beta, dims.1) {
        checks.push(checks::topological_equals_k(top, k));
        checks.push(timed(&mut timings, "topological_logicals", || {
            checks::topological_logicals(&gs, b, &space)
        }));
    }

    let distance = opts
        .distance_max_weight
        .map(|w| timed(&mut timings, "distance", || gs.code_distance(w)).into());

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        code: identity,
        num_qubits: gs.num_qubits(),
        num_stabilizers: gs.num_stabilizers(),
        dim_ker_phi,
        dim_trivial: dims.0,
        dim_topological: dims.1,
        k,
        distance,
        seed: opts.seed,
        checks,
        timings_us: timings,
    })
}
