//! Front end for the `gauge` binary. [`run`] parses arguments, runs one
//! command and returns the exit status and output, so the commands can be
//! driven in-process by tests.
//!
//! Exit status: 0 when everything checked holds, 1 when a check fails (the
//! output names a witness), 2 for usage errors.

pub mod analyze;
pub mod checks;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use code_factory::{Boundary, CodeDescription, Family, StabilizerCode};
use continuum::{builtin_continuum, bulmash_perturbed, render_maxwell, ContinuumFamily};
use coupled_nm::{count_solutions, enumerate_solutions, lift_to_haah, Sector};
use f2_linalg::BitVec;
use gauge_core::{F2GaugeStructure, SyndromeCheck};
use serde_json::json;

use crate::analyze::{analyze, builtin_boundary, AnalyzeOptions, DEFAULT_SEED, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gauge", version, about = "Linear gauge structures of stabilizer codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constraint, logical and boundary analysis of a code.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random operators and subsets per syndrome check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Search for the code distance up to this operator weight.
        #[arg(long)]
        distance_max_weight: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a set of stabilizers is the syndrome of some operator.
    Syndrome {
        #[command(flatten)]
        code: CodeArgs,
        /// Stabilizer indices, separated by commas or spaces.
        #[arg(long = "J", default_value = "", allow_hyphen_values = true)]
        j: String,
        #[arg(long)]
        json: bool,
    },
    /// Differential-operator versions of the codes.
    Continuum {
        family: ContinuumFamily,
        action: ContinuumAction,
        #[arg(long)]
        perturb: Option<Perturbation>,
        #[arg(long)]
        json: bool,
    },
    /// The coupled layer system of constraints constant along [111].
    Nm {
        action: NmAction,
        #[arg(long = "L")]
        l: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long, required_unless_present = "file")]
    pub code: Option<Family>,
    #[arg(long = "L", required_unless_present = "file")]
    pub l: Option<usize>,
    #[arg(long, value_enum, default_value_t = BoundaryArg::Periodic)]
    pub boundary: BoundaryArg,
    /// Code description in JSON; overrides the other code flags.
    #[arg(long, conflicts_with_all = ["code", "l"])]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Periodic,
    /// A single cut normal to the first axis.
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ContinuumAction {
    Phi,
    Maxwell,
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Perturbation {
    Bulmash,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NmAction {
    Count,
    Enumerate,
    Lift,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn checked(passed: bool, stdout: String) -> Self {
        Output {
            status: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Output {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::usage(text)
            } else {
                Output::ok(text)
            };
        }
    };
    match cli.command {
        Command::Analyze {
            code,
            seed,
            trials,
            distance_max_weight,
            json,
        } => cmd_analyze(&code, seed, trials, distance_max_weight, json),
        Command::Syndrome { code, j, json } => cmd_syndrome(&code, &j, json),
        Command::Continuum {
            family,
            action,
            perturb,
            json,
        } => cmd_continuum(family, action, perturb, json),
        Command::Nm { action, l, json } => cmd_nm(action, l, json),
    }
}

fn load_code(args: &CodeArgs) -> Result<StabilizerCode, String> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let desc = CodeDescription::from_json(&text).map_err(|e| e.to_string())?;
        return desc.load().map_err(|e| e.to_string());
    }
    let family = args.code.ok_or("--code is required")?;
    let l = args.l.ok_or("--L is required")?;
    let boundary = match args.boundary {
        BoundaryArg::Periodic => Boundary::Periodic,
        BoundaryArg::Open => Boundary::cut(&[0]),
    };
    family.build(l, &boundary).map_err(|e| e.to_string())
}

fn cmd_analyze(args: &CodeArgs, seed: u64, trials: usize, distance_max_weight: Option<usize>, json: bool) -> Output {
    let code = match load_code(args) {
        Ok(c) => c,
        Err(e) => return Output::usage(e),
    };
    let beta = builtin_boundary(&code);
    let opts = AnalyzeOptions {
        seed,
        trials,
        distance_max_weight,
    };
    match analyze(code, beta.as_ref(), &opts) {
        Ok(report) => {
            let text = if json { report.to_json() } else { report.to_text() };
            Output::checked(report.passed(), with_newline(text))
        }
        Err(e) => Output::checked(false, format!("analysis failed: {e}\n")),
    }
}

fn parse_subset(text: &str, len: usize) -> Result<BitVec, String> {
    let mut out = BitVec::zeros(len);
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| format!("`{tok}` is not a stabilizer index"))?;
        if i >= len {
            return Err(format!("stabilizer index {i} out of range, the code has {len}"));
        }
        out.flip(i);
    }
    Ok(out)
}

fn describe_members(code: &StabilizerCode, set: &BitVec) -> Vec<String> {
    set.iter_ones()
        .map(|i| {
            let s = &code.stabilizers[i];
            let at: Vec<String> = s.anchor.iter().map(ToString::to_string).collect();
            format!("{i}:{}@({})", s.label, at.join(","))
        })
        .collect()
}

fn cmd_syndrome(args: &CodeArgs, j: &str, json: bool) -> Output {
    let code = match load_code(args) {
        Ok(c) => c,
        Err(e) => return Output::usage(e),
    };
    let gs = F2GaugeStructure::new(code);
    let j = match parse_subset(j, gs.num_stabilizers()) {
        Ok(j) => j,
        Err(e) => return Output::usage(e),
    };
    let code = gs.code();
    match gs.is_syndrome(&j).expect("subset has the stabilizer count") {
        SyndromeCheck::Realizable(f) => {
            let text = f.to_text(&code.layout);
            let out = if json {
                json!({"schema_version": SCHEMA_VERSION, "realizable": true, "operator": text}).to_string()
            } else {
                format!("realizable by {text}")
            };
            Output::ok(with_newline(out))
        }
        SyndromeCheck::Violation(c) => {
            let members = describe_members(code, &c);
            let meets = c.and(&j).count_ones();
            let mut labels: Vec<&str> = c.iter_ones().map(|i| code.stabilizers[i].label.as_str()).collect();
            labels.dedup();
            let out = if json {
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "realizable": false,
                    "constraint": c.iter_ones().collect::<Vec<_>>(),
                    "members": members,
                    "overlap": meets,
                })
                .to_string()
            } else {
                let mut s = format!(
                    "not a syndrome: a constraint of {} stabilizers meets J {meets} times\n",
                    c.count_ones()
                );
                let _ = writeln!(s, "constraint {}", members.join(" "));
                s
            };
            Output::checked(false, with_newline(out))
        }
    }
}

fn cmd_continuum(family: ContinuumFamily, action: ContinuumAction, perturb: Option<Perturbation>, json: bool) -> Output {
    let gs = match perturb {
        None => builtin_continuum(family),
        Some(Perturbation::Bulmash) if family == ContinuumFamily::Haah => bulmash_perturbed(),
        Some(Perturbation::Bulmash) => return Output::usage("--perturb bulmash applies to haah only"),
    };
    match action {
        ContinuumAction::Phi if json => Output::ok(with_newline(gs.phi.to_json().to_string())),
        ContinuumAction::Phi => Output::ok(with_newline(gs.phi.to_string())),
        ContinuumAction::Maxwell if json => Output::ok(with_newline(gs.maxwell().to_json().to_string())),
        ContinuumAction::Maxwell => Output::ok(with_newline(render_maxwell(&gs.maxwell()))),
        ContinuumAction::Check => {
            let symplectic = gs.symplectic_residual().ok();
            let identities = gs.conservation_identities();
            let passed = symplectic.as_ref().is_none_or(|r| r.is_zero()) && identities.iter().all(|c| c.passed());
            let out = if json {
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "name": gs.name,
                    "symplectic": symplectic.as_ref().map(|r| r.is_zero()),
                    "identities": identities
                        .iter()
                        .map(|c| json!({"name": c.name, "passed": c.passed(), "residual": c.residual}))
                        .collect::<Vec<_>>(),
                    "passed": passed,
                })
                .to_string()
            } else {
                let mut s = String::new();
                match &symplectic {
                    None => s.push_str("symplectic: n/a (no sector pairing)\n"),
                    Some(r) if r.is_zero() => s.push_str("symplectic: ok\n"),
                    Some(r) => {
                        let _ = writeln!(s, "symplectic: FAILED, residual\n{r}");
                    }
                }
                for c in &identities {
                    match &c.residual {
                        None => {
                            let _ = writeln!(s, "{}: ok", c.name);
                        }
                        Some(r) => {
                            let _ = writeln!(s, "{}: FAILED, residual {r}", c.name);
                        }
                    }
                }
                s
            };
            Output::checked(passed, with_newline(out))
        }
    }
}

fn cmd_nm(action: NmAction, l: usize, json: bool) -> Output {
    let patterns = match action {
        NmAction::Count => {
            return match count_solutions(l) {
                Ok(n) if json => Output::ok(json!({"schema_version": SCHEMA_VERSION, "L": l, "count": n}).to_string() + "\n"),
                Ok(n) => Output::ok(format!("{n}\n")),
                Err(e) => Output::usage(e.to_string()),
            };
        }
        NmAction::Enumerate | NmAction::Lift => match enumerate_solutions(l) {
            Ok(p) => p,
            Err(e) => return Output::usage(e.to_string()),
        },
    };
    if action == NmAction::Enumerate {
        if json {
            let list: Vec<_> = patterns.iter().map(coupled_nm::Pattern::to_json).collect();
            let v = json!({"schema_version": SCHEMA_VERSION, "L": l, "patterns": list});
            return Output::ok(with_newline(serde_json::to_string_pretty(&v).expect("json value")));
        }
        let mut s = format!("{} basis patterns at L = {l}\n", patterns.len());
        for (i, p) in patterns.iter().enumerate() {
            let _ = write!(s, "\npattern {i}\n{p}");
        }
        return Output::ok(s);
    }
    let code = match code_factory::build_haah(l) {
        Ok(c) => c,
        Err(e) => return Output::usage(e.to_string()),
    };
    let gs = F2GaugeStructure::new(code);
    let mut rows = Vec::new();
    for (i, p) in patterns.iter().enumerate() {
        for sector in [Sector::X, Sector::Z] {
            let (verified, size) = match lift_to_haah(p, sector, &gs) {
                Ok(lift) => (lift.verified, lift.constraint.count_ones()),
                Err(_) => (false, 0),
            };
            rows.push((i, sector, verified, size));
        }
    }
    let verified = rows.iter().filter(|r| r.2).count();
    let all = verified == rows.len();
    let out = if json {
        let list: Vec<_> = rows
            .iter()
            .map(|&(i, s, v, n)| json!({"pattern": i, "sector": format!("{s:?}").to_lowercase(), "verified": v, "size": n}))
            .collect();
        json!({"schema_version": SCHEMA_VERSION, "L": l, "lifts": list, "passed": all}).to_string()
    } else {
        let mut s = String::new();
        for &(i, sector, v, n) in &rows {
            let status = if v { "constraint" } else { "NOT a constraint" };
            let _ = writeln!(s, "pattern {i} {:?}-sector: {n} stabilizers, {status}", sector);
        }
        let _ = writeln!(s, "{verified} of {} lifts verified", 2 * patterns.len());
        if all {
            if let Ok(gap) = coupled_nm::ansatz_gap(l) {
                let _ = write!(s, "lifted constraints span {} of dim ker phi = {}", gap.lifted, gap.dim_ker_phi);
            }
        }
        s
    };
    Output::checked(all, with_newline(out))
}
