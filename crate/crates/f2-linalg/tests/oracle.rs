//! Agreement with a dense enumeration oracle on small matrices, plus
//! algebraic invariants on larger random ones.

use std::collections::BTreeSet;

use f2_linalg::{orthogonal_complement, quotient_basis, BitVec, F2Matrix, Solution};
use proptest::prelude::*;

fn vec_of(len: usize, bits: u64) -> BitVec {
    BitVec::from_indices(len, (0..len).filter(|i| bits >> (i % 64) & 1 == 1))
}

fn mat_of(rows: usize, cols: usize, bits: u64) -> F2Matrix {
    let rs = (0..rows).map(|r| vec_of(cols, bits >> (r * cols))).collect();
    F2Matrix::from_rows(cols, rs).unwrap()
}

fn span(len: usize, vs: &[BitVec]) -> BTreeSet<BitVec> {
    (0..1u64 << vs.len())
        .map(|mask| {
            let mut acc = BitVec::zeros(len);
            for (i, v) in vs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(v);
                }
            }
            acc
        })
        .collect()
}

fn all_vectors(len: usize) -> impl Iterator<Item = BitVec> {
    (0..1u64 << len).map(move |b| vec_of(len, b))
}

fn check_against_oracle(m: &F2Matrix) {
    let (r, c) = (m.rows(), m.cols());
    let row_space = span(c, m.row_vecs());
    let rank = m.rank();
    assert_eq!(1usize << rank, row_space.len());

    let kernel: BTreeSet<BitVec> = all_vectors(c).filter(|x| m.mul_vec(x).is_zero()).collect();
    let kb = m.kernel_basis();
    assert_eq!(kb.len() + rank, c);
    assert_eq!(span(c, &kb), kernel);

    for b in all_vectors(r) {
        let solvable = all_vectors(c).any(|x| m.mul_vec(&x) == b);
        match m.solve(&b).unwrap() {
            Solution::Solved(x) => {
                assert!(solvable);
                assert_eq!(m.mul_vec(&x), b);
            }
            Solution::Inconsistent { certificate } => {
                assert!(!solvable);
                assert!(m.left_mul(&certificate).is_zero());
                assert!(certificate.dot(&b));
            }
        }
    }

    if r == c {
        let basis = m.row_vecs().to_vec();
        for g in [F2Matrix::identity(c), m.clone()] {
            let comp: BTreeSet<BitVec> = all_vectors(c)
                .filter(|v| basis.iter().all(|b| !g.left_mul(b).dot(v)))
                .collect();
            let got = orthogonal_complement(&basis, &g).unwrap();
            assert_eq!(span(c, &got), comp);
            assert_eq!(got.len(), comp.len().trailing_zeros() as usize);
        }
    }

    // Quotient of the full space by the row space.
    let full: Vec<BitVec> = (0..c).map(|i| BitVec::unit(c, i)).collect();
    let reps = quotient_basis(&full, m.row_vecs()).unwrap();
    assert_eq!(reps.len(), c - rank);
    let mut together = reps.clone();
    together.extend(m.row_vecs().iter().cloned());
    assert_eq!(span(c, &together).len(), 1 << c);
    for v in span(c, &reps) {
        assert!(v.is_zero() || !row_space.contains(&v));
    }
}

#[test]
fn exhaustive_up_to_three_by_three() {
    for rows in 1..=3 {
        for cols in 1..=3 {
            for bits in 0..1u64 << (rows * cols) {
                check_against_oracle(&mat_of(rows, cols, bits));
            }
        }
    }
}

#[test]
fn quotient_rejects_non_subspace() {
    let u = vec!["1100".parse::<BitVec>().unwrap()];
    let w = vec!["0011".parse::<BitVec>().unwrap()];
    let err = quotient_basis(&u, &w).unwrap_err();
    assert!(err.to_string().contains("0011"));
}

#[test]
fn complement_in_symplectic_form() {
    // Block form [[0, I], [I, 0]] on 2 qubits; x1 is orthogonal to all but z1.
    let g: F2Matrix = "0010 0001 1000 0100".parse().unwrap();
    let comp = orthogonal_complement(&["1000".parse().unwrap()], &g).unwrap();
    let s = span(4, &comp);
    assert!(!s.contains(&"0010".parse().unwrap()));
    for single in ["1000", "0100", "0001"] {
        assert!(s.contains(&single.parse().unwrap()));
    }
    assert_eq!(
        orthogonal_complement(&[], &g).unwrap().len(),
        4,
        "empty basis gives the whole space"
    );
}

fn arb_matrix(max: usize) -> impl Strategy<Value = F2Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), c), r).prop_map(move |rows| {
            F2Matrix::from_rows(c, rows.iter().map(|b| BitVec::from_bools(b)).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn oracle_agreement_small(m in arb_matrix(6)) {
        check_against_oracle(&m);
    }

    #[test]
    fn rank_nullity(m in arb_matrix(130)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn solve_round_trip(m in arb_matrix(90), seed in any::<u64>()) {
        let x = vec_of(m.cols(), seed);
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap().ok().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn rref_idempotent(m in arb_matrix(80)) {
        let r = m.rref().matrix;
        prop_assert_eq!(r.rref().matrix, r);
    }

    #[test]
    fn double_complement_dimension(m in arb_matrix(12)) {
        let n = m.cols();
        // A random non-degenerate form: identity plus a strictly upper part.
        let mut g = F2Matrix::identity(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if m.rows() > 0 && m.get(i % m.rows(), j) {
                    g.set(i, j, true);
                }
            }
        }
        let basis = m.row_vecs().to_vec();
        let once = orthogonal_complement(&basis, &g).unwrap();
        let twice = orthogonal_complement(&once, &g.transpose()).unwrap();
        prop_assert_eq!(twice.len(), m.rank());
    }
}
