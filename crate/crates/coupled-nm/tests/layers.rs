use code_factory::build_haah;
use coupled_nm::{
    ansatz_gap, build_system, count_solutions, enumerate_solutions, fractal_conditions, lift_to_haah, Color, NmError,
    Pattern, Recurrence, Sector,
};
use f2_linalg::BitVec;
use gauge_core::F2GaugeStructure;
use proptest::prelude::*;

/// Brute force over all 2^(3L^2) patterns, straight from the stencils.
fn brute_force_count(l: usize) -> usize {
    let n = 3 * l * l;
    let system = build_system(l).unwrap();
    let mut count = 0usize;
    for mask in 0u64..(1 << n) {
        let bits = BitVec::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if system.is_solution(&Pattern::from_bits(l, bits)) {
            count += 1;
        }
    }
    count
}

/// Direct check of both conditions on Haah's lattice for an `a` given as a
/// function of the site.
fn haah_conditions_hold(l: usize, a: impl Fn(i64, i64, i64) -> bool) -> bool {
    let l = l as i64;
    let mut ok = true;
    for x in 0..l {
        for y in 0..l {
            for z in 0..l {
                let s1 = a(x, y, z) ^ a(x - 1, y, z) ^ a(x, y - 1, z) ^ a(x, y, z - 1);
                let s2 = a(x, y, z) ^ a(x - 1, y - 1, z) ^ a(x, y - 1, z - 1) ^ a(x - 1, y, z - 1);
                ok &= !s1 && !s2;
            }
        }
    }
    ok
}

#[test]
fn solution_counts() {
    let expected = [3, 1, 6, 1, 3, 1, 6, 1];
    for (l, &want) in (2..=9).zip(&expected) {
        assert_eq!(count_solutions(l).unwrap(), want, "L = {l}");
    }
}

#[test]
fn counts_match_brute_force_at_l2() {
    assert_eq!(brute_force_count(2), 1 << count_solutions(2).unwrap());
}

#[test]
fn small_sizes_rejected() {
    assert_eq!(count_solutions(1), Err(NmError::SizeTooSmall(1)));
}

#[test]
fn all_ones_is_always_a_solution() {
    for l in 2..6 {
        assert!(build_system(l).unwrap().is_solution(&Pattern::all_ones(l)));
    }
}

#[test]
fn solution_space_is_closed_under_translation() {
    for l in [3, 4, 5] {
        let system = build_system(l).unwrap();
        for p in enumerate_solutions(l).unwrap() {
            for du in [(1, 0), (0, 1), (-1, -1)] {
                assert!(system.is_solution(&p.translate(du)));
            }
        }
    }
}

#[test]
fn layer_solutions_satisfy_the_three_dimensional_conditions() {
    for l in [2, 3, 4] {
        for p in enumerate_solutions(l).unwrap() {
            assert!(haah_conditions_hold(l, |x, y, z| p.at((x - z, y - z))));
        }
    }
}

#[test]
fn every_solution_lifts_in_both_sectors() {
    for l in [2, 3, 4] {
        let gs = F2GaugeStructure::new(build_haah(l).unwrap());
        for p in enumerate_solutions(l).unwrap() {
            for sector in [Sector::X, Sector::Z] {
                let lift = lift_to_haah(&p, sector, &gs).unwrap();
                assert!(lift.verified, "L = {l}, {sector:?}");
                assert!(!lift.constraint.is_zero());
                // each point of Z^2/LZ^2 appears three times in the layers
                assert_eq!(3 * lift.constraint.count_ones(), l * p.bits().count_ones());
            }
        }
    }
}

#[test]
fn empty_pattern_lifts_to_empty_constraint() {
    let gs = F2GaugeStructure::new(build_haah(2).unwrap());
    let lift = lift_to_haah(&Pattern::empty(2), Sector::X, &gs).unwrap();
    assert!(lift.verified);
    assert!(lift.constraint.is_zero());
}

#[test]
fn all_ones_lifts_to_every_gx() {
    let gs = F2GaugeStructure::new(build_haah(3).unwrap());
    let lift = lift_to_haah(&Pattern::all_ones(3), Sector::X, &gs).unwrap();
    assert_eq!(lift.constraint, gs.subset(0..27));
}

#[test]
fn lift_rejects_the_wrong_code() {
    let gs = F2GaugeStructure::new(build_haah(3).unwrap());
    let p = enumerate_solutions(2).unwrap().remove(0);
    assert_eq!(lift_to_haah(&p, Sector::X, &gs), Err(NmError::WrongCode(2)));
}

#[test]
fn ansatz_covers_part_of_the_constraint_space() {
    let gap = ansatz_gap(2).unwrap();
    assert_eq!(gap.layer_solutions, 3);
    assert_eq!(gap.lifted, 6);
    assert!(gap.dim_ker_phi >= gap.lifted);
}

#[test]
fn fractal_sets_meet_constraints_evenly() {
    let gs = F2GaugeStructure::new(build_haah(8).unwrap());
    let kernel = gs.constraint_space().basis;
    for k in 0..3 {
        for rec in Recurrence::ALL {
            for sector in [Sector::X, Sector::Z] {
                let conds = fractal_conditions(rec, k, 8, sector).unwrap();
                assert_eq!(conds.len(), 512);
                for cond in &conds {
                    assert_eq!(cond.stabilizers.count_ones(), 4);
                    for c in &kernel {
                        assert!(!cond.stabilizers.dot(c), "k = {k}, {rec:?}, {sector:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn fractal_scale_must_fit() {
    assert_eq!(
        fractal_conditions(Recurrence::A, 3, 8, Sector::X).unwrap_err(),
        NmError::ScaleTooLarge { k: 3, l: 8 }
    );
}

#[test]
fn layer_accessors_agree_with_points() {
    let p = enumerate_solutions(3).unwrap().remove(0);
    for c in Color::ALL {
        let (o1, o2) = c.offset();
        assert_eq!(p.get(c, 0, 0), p.at((o1, o2)));
        assert_eq!(p.get(c, 1, 0), p.at((o1 + 1, o2 - 1)));
        assert_eq!(p.get(c, 0, 1), p.at((o1 + 1, o2 + 2)));
    }
}

fn solution_and_shift() -> impl Strategy<Value = (usize, Vec<bool>, (i64, i64))> {
    (2usize..7).prop_flat_map(|l| {
        let dim = count_solutions(l).unwrap();
        (Just(l), prop::collection::vec(any::<bool>(), dim), (-10i64..10, -10i64..10))
    })
}

proptest! {
    #[test]
    fn translated_combinations_stay_solutions((l, coeffs, du) in solution_and_shift()) {
        let basis = enumerate_solutions(l).unwrap();
        let mut bits = BitVec::zeros(3 * l * l);
        for (b, &on) in basis.iter().zip(&coeffs) {
            if on {
                bits.xor_assign(b.bits());
            }
        }
        let p = Pattern::from_bits(l, bits).translate(du);
        prop_assert!(build_system(l).unwrap().is_solution(&p));
    }
}
