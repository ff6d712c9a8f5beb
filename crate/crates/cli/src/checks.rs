//! Checks shared by `analyze` and the test suites. Each returns a
//! [`CheckResult`] carrying a witness when it fails.

use code_factory::ChangeOfBoundary;
use f2_linalg::{BitVec, Subspace};
use gauge_core::{ConstraintSpace, F2GaugeStructure, SyndromeCheck};
use pauli_space::PauliOperator;
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    fn pass(name: &str) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &str, witness: String) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }

    fn from_result(name: &str, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => CheckResult::pass(name),
            Err(w) => CheckResult::fail(name, w),
        }
    }
}

fn indices(v: &BitVec) -> String {
    let list: Vec<String> = v.iter_ones().map(|i| i.to_string()).collect();
    format!("{{{}}}", list.join(","))
}

pub fn random_bits<R: Rng>(rng: &mut R, len: usize) -> BitVec {
    BitVec::from_indices(len, (0..len).filter(|_| rng.gen_bool(0.5)))
}

pub fn duality(gs: &F2GaugeStructure) -> CheckResult {
    CheckResult::from_result(
        "duality",
        gs.duality_check()
            .map_err(|w| format!("stabilizer {} disagrees at bit {}", w.stabilizer, w.bit)),
    )
}

pub fn commutation(gs: &F2GaugeStructure) -> CheckResult {
    CheckResult::from_result(
        "symplectic",
        gs.symplectic_check()
            .map_err(|(i, j)| format!("stabilizers {i} and {j} anticommute")),
    )
}

/// `k = N - |S| + dim ker phi`, from rank-nullity on `Phi`.
pub fn counting(gs: &F2GaugeStructure, dim_ker_phi: usize, k: usize) -> CheckResult {
    let lhs = k + gs.num_stabilizers();
    let rhs = gs.num_qubits() + dim_ker_phi;
    if lhs == rhs {
        CheckResult::pass("counting")
    } else {
        CheckResult::fail("counting", format!("k + |S| = {lhs} but N + dim ker phi = {rhs}"))
    }
}

/// Syndromes of random operators meet every constraint evenly.
pub fn brule_syndromes<R: Rng>(gs: &F2GaugeStructure, constraints: &[BitVec], rng: &mut R, trials: usize) -> CheckResult {
    let n = gs.num_qubits();
    let lay = &gs.code().layout;
    for _ in 0..trials {
        let f = PauliOperator::from_bits(n, &random_bits(rng, 2 * n)).expect("length 2N");
        let syn = gs.psi(&f).expect("operator on the code's qubits");
        if let Some(c) = constraints.iter().find(|c| c.dot(&syn)) {
            return CheckResult::fail(
                "brule_syndromes",
                format!("psi({}) meets constraint {} oddly", f.to_text(lay), indices(c)),
            );
        }
    }
    CheckResult::pass("brule_syndromes")
}

/// The syndrome test on random subsets agrees with orthogonality to the
/// constraint basis, and every witness it returns is re-verified.
pub fn brule_realizability<R: Rng>(
    gs: &F2GaugeStructure,
    constraints: &[BitVec],
    rng: &mut R,
    trials: usize,
) -> CheckResult {
    const NAME: &str = "brule_realizability";
    for _ in 0..trials {
        let j = random_bits(rng, gs.num_stabilizers());
        let orthogonal = constraints.iter().all(|c| !c.dot(&j));
        let verdict = gs.is_syndrome(&j).expect("subset length");
        let problem = match &verdict {
            SyndromeCheck::Realizable(_) if !orthogonal => Some("realized although a constraint meets it oddly"),
            SyndromeCheck::Realizable(f) if gs.psi(f).expect("same code") != j => Some("witness has another syndrome"),
            SyndromeCheck::Violation(_) if orthogonal => Some("rejected although orthogonal to all constraints"),
            SyndromeCheck::Violation(c) if !gs.is_constraint(c) || !c.dot(&j) => Some("certificate is not an odd constraint"),
            _ => None,
        };
        if let Some(why) = problem {
            return CheckResult::fail(NAME, format!("J = {}: {why}", indices(&j)));
        }
    }
    CheckResult::pass(NAME)
}

/// Logical operators from topological constraints: each commutes with every
/// stabilizer and with the others, none is a stabilizer, and the classes
/// are independent.
pub fn topological_logicals(gs: &F2GaugeStructure, beta: &ChangeOfBoundary, space: &ConstraintSpace) -> CheckResult {
    const NAME: &str = "topological_logicals";
    let top = space.topological_basis.as_deref().unwrap_or_default();
    let mut logicals = Vec::with_capacity(top.len());
    for c in top {
        match gs.logical_from_constraint(beta, c) {
            Ok(p) => logicals.push(p),
            Err(e) => return CheckResult::fail(NAME, format!("constraint {}: {e}", indices(c))),
        }
    }
    let lay = &gs.code().layout;
    let n2 = 2 * gs.num_qubits();
    let mut span = Subspace::spanned_by(n2, gs.code().bit_rows().row_vecs()).expect("length 2N");
    for (i, p) in logicals.iter().enumerate() {
        if !gs.psi(p).expect("same code").is_zero() {
            return CheckResult::fail(NAME, format!("p_C for {} has a syndrome", indices(&top[i])));
        }
        if gs.in_stabilizer_group(p) {
            return CheckResult::fail(NAME, format!("p_C = {} is a stabilizer", p.to_text(lay)));
        }
        if let Some(j) = logicals.iter().position(|q| !p.commutes_with(q).expect("same code")) {
            return CheckResult::fail(NAME, format!("p_C {i} and {j} anticommute"));
        }
        if !span.insert(&p.to_bits()) {
            return CheckResult::fail(NAME, format!("p_C {i} depends on the others modulo stabilizers"));
        }
    }
    CheckResult::pass(NAME)
}

pub fn topological_equals_k(dim_topological: usize, k: usize) -> CheckResult {
    if dim_topological == k {
        CheckResult::pass("topological_equals_k")
    } else {
        CheckResult::fail("topological_equals_k", format!("dim T = {dim_topological}, k = {k}"))
    }
}
