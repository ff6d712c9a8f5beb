//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout; exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cli::analyze::{AnalysisReport, DEFAULT_SEED};
use cli::checks;
use code_factory::{Boundary, ChangeOfBoundary, Family};
use continuum::{builtin_continuum, bulmash_perturbed, parse_equations, ContinuumFamily, DiffOpMatrixZ, DiffPolyZ};
use f2_linalg::{orthogonal_complement, quotient_basis, BitVec, F2Matrix, Solution, Subspace};
use gauge_core::F2GaugeStructure;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || {
        format!("{what} took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

fn gauge(args: &[&str]) -> cli::Output {
    cli::run(std::iter::once("gauge").chain(args.iter().copied()))
}

fn analyze(code: &str, l: usize) -> Result<(AnalysisReport, Duration), String> {
    let start = Instant::now();
    let out = gauge(&["analyze", "--code", code, "--L", &l.to_string(), "--json"]);
    let elapsed = start.elapsed();
    ensure(out.status == 0, || format!("{code} L={l} exited {}: {}", out.status, out.stdout))?;
    let report = AnalysisReport::from_json(&out.stdout).map_err(|e| e.to_string())?;
    Ok((report, elapsed))
}

// ---------------------------------------------------------------------------
// Naive GF(2) oracles on bool rows.

fn naive_rank(rows: &[Vec<bool>]) -> usize {
    let mut rows = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn bools(v: &BitVec) -> Vec<bool> {
    (0..v.len()).map(|i| v.get(i)).collect()
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for l in [2, 3, 4] {
        let (r, t) = analyze("toric2", l)?;
        ensure(r.k == 2 && r.dim_ker_phi == 2 && r.dim_topological == Some(2), || {
            format!("toric2 L={l}: k={} ker={} T={:?}", r.k, r.dim_ker_phi, r.dim_topological)
        })?;
        within(t, 1.0, &format!("toric2 L={l}"))?;
        notes.push(format!("toric2 L={l} {:.0}ms", t.as_secs_f64() * 1e3));
    }
    for l in [2, 3] {
        let (r, t) = analyze("toric3", l)?;
        ensure(r.dim_topological == Some(3) && r.k == 3, || {
            format!("toric3 L={l}: k={} T={:?}", r.k, r.dim_topological)
        })?;
        within(t, 1.0, &format!("toric3 L={l}"))?;
        notes.push(format!("toric3 L={l} {:.0}ms", t.as_secs_f64() * 1e3));
    }
    Ok(notes.join(", "))
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for l in [2, 3, 4, 5] {
        let (r, t) = analyze("xcube", l)?;
        let want = 6 * l - 3;
        ensure(r.dim_topological == Some(want) && r.k == want, || {
            format!("xcube L={l}: k={} T={:?}, want {want}", r.k, r.dim_topological)
        })?;
        if l == 5 {
            within(t, 10.0, "xcube L=5")?;
        }
        notes.push(format!("L={l}: {want} ({:.0}ms)", t.as_secs_f64() * 1e3));
    }
    Ok(notes.join(", "))
}

fn criterion_3() -> Outcome {
    let golden: BTreeMap<String, usize> =
        serde_json::from_str(include_str!("golden/haah_k.json")).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for l in [2, 3, 4] {
        let (r, t) = analyze("haah", l)?;
        let n = 2 * l * l * l;
        ensure(r.num_qubits == n && r.num_stabilizers == n, || {
            format!("L={l}: N={} |S|={}", r.num_qubits, r.num_stabilizers)
        })?;
        ensure(r.k == r.dim_ker_phi, || format!("L={l}: k={} ker={}", r.k, r.dim_ker_phi))?;
        ensure(golden.get(&l.to_string()) == Some(&r.k), || format!("L={l}: k={} differs from golden", r.k))?;
        if l == 4 {
            within(t, 30.0, "haah L=4")?;
        }

        // independent rank of the stabilizer rows
        let code = Family::Haah.build(l, &Boundary::Periodic).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<bool>> = code.ops().map(|p| bools(&p.to_bits())).collect();
        let rank = naive_rank(&rows);
        ensure(n - rank == r.dim_ker_phi && n - rank == r.k, || {
            format!("L={l}: oracle rank {rank} disagrees")
        })?;

        if l == 2 {
            // every subset of the 16 stabilizers, Gray-code order
            let words: Vec<u64> = code.ops().map(|p| p.to_bits().words()[0]).collect();
            let mut acc = 0u64;
            let mut zeros = 1usize;
            for i in 1u32..(1 << words.len()) {
                acc ^= words[i.trailing_zeros() as usize];
                zeros += usize::from(acc == 0);
            }
            ensure(zeros == 1 << r.dim_ker_phi, || format!("brute force found {zeros} constraints"))?;
            notes.push(format!("L=2 exhaustive over {} subsets", 1u32 << words.len()));
        }
        notes.push(format!("L={l}: k={}", r.k));
    }
    Ok(notes.join(", "))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut notes = Vec::new();
    for (f, l) in [(Family::Toric2, 3), (Family::Toric3, 2), (Family::Xcube, 2), (Family::Haah, 2), (Family::Haah, 3)] {
        let gs = F2GaugeStructure::new(f.build(l, &Boundary::Periodic).map_err(|e| e.to_string())?);
        let basis = gs.constraint_space().basis;
        for c in [
            checks::brule_syndromes(&gs, &basis, &mut rng, 100),
            checks::brule_realizability(&gs, &basis, &mut rng, 100),
        ] {
            ensure(c.passed, || format!("{f} L={l} {}: {:?}", c.name, c.witness))?;
        }
        notes.push(format!("{f} L={l}"));
    }
    Ok(format!("200 trials each on {}", notes.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for (f, sizes) in [(Family::Toric2, &[2, 3, 4][..]), (Family::Toric3, &[2, 3]), (Family::Xcube, &[2, 3])] {
        for &l in sizes {
            let beta = ChangeOfBoundary::builtin(f, l).map_err(|e| e.to_string())?;
            let gs = F2GaugeStructure::new(beta.source.clone());
            let space = gs.trivial_and_topological(&beta).map_err(|e| e.to_string())?;
            let top = space.topological_basis.as_ref().map_or(0, Vec::len);
            let c = checks::topological_logicals(&gs, &beta, &space);
            ensure(c.passed, || format!("{f} L={l}: {:?}", c.witness))?;
            let k = gs.logical_space().map_err(|e| e.to_string())?.k;
            ensure(top == k, || format!("{f} L={l}: dim T {top} != k {k}"))?;
            notes.push(format!("{f} L={l} ({top})"));
        }
    }
    Ok(notes.join(", "))
}

/// Rewrites the LaTeX of a display equation into the plain-text equation
/// syntax.
fn latex_to_ascii(tex: &str) -> String {
    let mut s = tex.to_owned();
    for (from, to) in [
        (r"\left(\partial_{\text{mix}}^2\right)", "(dmix)"),
        (r"\partial_{\text{mix}}^2", "dmix"),
        (r"\partial^2_{\text{mix}}", "dmix"),
        (r"\partial_{[111]}", "d111"),
        (r"\left(", "("),
        (r"\right)", ")"),
        ("=&", "="),
        (r"\\", ""),
    ] {
        s = s.replace(from, to);
    }
    for i in 0..4 {
        s = s.replace(&format!(r"\partial^2_{i}"), &format!("d{i}^2"));
        s = s.replace(&format!(r"\partial_{i}"), &format!("d{i}"));
        s = s.replace(&format!("A_{i}"), &format!("A{i}"));
        s = s.replace(&format!("j_{i}"), &format!("j{i}"));
    }
    while let Some(start) = s.find(r"\label{") {
        let end = s[start..].find('}').map_or(s.len(), |e| start + e + 1);
        s.replace_range(start..end, "");
    }
    s.lines()
        .map(|l| l.trim().trim_end_matches(',').trim())
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}

const XCUBE_TEX: &str = r"
j_0 =& (\partial_1^2 \partial_2^2 + \partial_2^2 \partial_3^2 + \partial_3^2  \partial_1^2) A_0, \label{eq:XC0}\\
j_1 =& \partial_2^2(A_3-A_1) - \partial^2_3(A_1-A_2), \label{eq:XC1}\\
j_2 =& \partial_3^2(A_1- A_2) - \partial_1^2(A_2-A_3),\label{eq:XC2} \\
j_3=& \partial_1^2(A_2-A_3) -\partial_2^2(A_3-A_1),\label{eq:XC3}
";

const HAAH_TEX: &str = r"
j_0 =& \left(\left(\partial_{\text{mix}}^2\right)^2 - \partial_{[111]}^2\right) A_0, \\
j_1 =&  \left(\left(\partial_{\text{mix}}^2\right)^2 - \partial_{[111]}^2\right) A_1,
";

fn to_ascii_render(s: &str) -> String {
    s.replace('∂', "d")
        .replace('−', "-")
        .replace('²', "^2")
        .chars()
        .map(|c| match c {
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).expect("digit"),
            _ => c,
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let cases = [
        ("xcube", XCUBE_TEX, include_str!("../../continuum/tests/golden/xcube_maxwell.txt"), 4),
        ("haah", HAAH_TEX, include_str!("../../continuum/tests/golden/haah_maxwell.txt"), 2),
    ];
    for (name, tex, golden, cols) in cases {
        let out = gauge(&["continuum", name, "maxwell"]);
        ensure(out.status == 0 && out.stdout == golden, || format!("{name}: output differs from golden"))?;
        let published = parse_equations(&latex_to_ascii(tex), 3, cols).map_err(|e| format!("{name}: {e}"))?;
        let family: ContinuumFamily = name.parse().map_err(|e| format!("{e}"))?;
        ensure(builtin_continuum(family).maxwell() == published, || {
            format!("{name}: operator differs from the published equations")
        })?;
        // the printed equations read back as the same operator, token for token
        let reread = parse_equations(&to_ascii_render(&out.stdout), 3, cols);
        ensure(reread.as_ref().ok() == Some(&published), || format!("{name}: printed form does not read back"))?;
    }
    for f in [ContinuumFamily::U1Static, ContinuumFamily::U1Spacetime, ContinuumFamily::Xcube, ContinuumFamily::Haah] {
        ensure(builtin_continuum(f).is_symplectic() == Ok(true), || format!("{f} is not symplectic"))?;
    }
    ensure(bulmash_perturbed().is_symplectic() == Ok(false), || "perturbed Haah map is symplectic".into())?;
    let out = gauge(&["continuum", "haah", "check", "--perturb", "bulmash"]);
    ensure(out.status == 1, || "perturbed check did not fail".into())?;
    Ok("xcube 4 rows, haah 2 rows; symplectic for u1_static, u1_4d, xcube, haah; not for the perturbed map".into())
}

fn d(i: usize) -> DiffPolyZ {
    DiffPolyZ::partial(3, i)
}

fn criterion_7() -> Outcome {
    // divergence of the vector current j1..j3 of static U(1)
    let u1 = builtin_continuum(ContinuumFamily::U1Static).maxwell();
    let div = DiffOpMatrixZ::from_rows(3, vec![vec![DiffPolyZ::zero(3), d(0), d(1), d(2)]]).map_err(|e| e.to_string())?;
    ensure(div.mul(&u1).map_err(|e| e.to_string())?.is_zero(), || "U(1) divergence is not zero".into())?;

    let xc = builtin_continuum(ContinuumFamily::Xcube).maxwell();
    let sum = DiffOpMatrixZ::from_rows(
        3,
        vec![vec![DiffPolyZ::zero(3), DiffPolyZ::constant(3, 1), DiffPolyZ::constant(3, 1), DiffPolyZ::constant(3, 1)]],
    )
    .map_err(|e| e.to_string())?;
    ensure(sum.mul(&xc).map_err(|e| e.to_string())?.is_zero(), || "j1 + j2 + j3 is not zero".into())?;

    // a term integrates to zero over the x_a x_b plane when it is a total
    // derivative in x_a or in x_b
    let transverse = [(0, 0, 1), (0, 0, 2), (0, 1, 2), (1, 1, 2), (2, 2, 0), (3, 0, 1)];
    for (row, a, b) in transverse {
        for col in 0..4 {
            for (orders, _) in xc.get(row, col).terms() {
                ensure(orders[a] > 0 || orders[b] > 0, || {
                    format!("j{row} term {orders:?} survives integration over x{} x{}", a + 1, b + 1)
                })?;
            }
        }
    }
    let names: BTreeSet<String> = builtin_continuum(ContinuumFamily::Xcube)
        .conservation_identities()
        .into_iter()
        .filter(|c| c.passed())
        .map(|c| c.name)
        .collect();
    ensure(names.len() >= 4, || "library identity checks failed".into())?;
    for f in ContinuumFamily::ALL {
        let out = gauge(&["continuum", f.name(), "check"]);
        ensure(out.status == 0, || format!("{f} check: {}", out.stdout))?;
    }
    Ok("divergence, row sum and three transverse pairs hold exactly".into())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let want = [(2, 3), (3, 1), (4, 6), (5, 1), (6, 3), (7, 1), (8, 6), (9, 1)];
    for (l, n) in want {
        let out = gauge(&["nm", "count", "--L", &l.to_string()]);
        ensure(out.stdout.trim() == n.to_string(), || format!("L={l}: got {}", out.stdout.trim()))?;
    }
    for l in [2, 4] {
        let out = gauge(&["nm", "lift", "--L", &l.to_string()]);
        ensure(out.status == 0, || format!("L={l}: {}", out.stdout))?;
    }
    // the L = 2 count again, by enumerating all 2^12 layer patterns
    let system = coupled_nm::build_system(2).map_err(|e| e.to_string())?;
    let solutions = (0u32..1 << 12)
        .filter(|m| {
            let bits = BitVec::from_indices(12, (0..12).filter(|i| m >> i & 1 == 1));
            system.is_solution(&coupled_nm::Pattern::from_bits(2, bits))
        })
        .count();
    ensure(solutions == 8, || format!("L=2 brute force found {solutions} solutions"))?;
    within(start.elapsed(), 5.0, "layer counts and lifts")?;
    Ok(format!("counts 3,1,6,1,3,1,6,1 for L=2..9; lifts at L=2,4 ({:.0}ms)", start.elapsed().as_secs_f64() * 1e3))
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    for f in Family::ALL {
        for l in [2, 3] {
            let direct = f.build(l, &Boundary::Periodic).map_err(|e| e.to_string())?;
            let via_map = poly_form::builtin_map(f).instantiate(l).map_err(|e| e.to_string())?;
            ensure(direct.len() == via_map.len(), || format!("{f} L={l}: stabilizer counts differ"))?;
            for (i, (a, b)) in direct.stabilizers.iter().zip(&via_map.stabilizers).enumerate() {
                ensure(a.op == b.op && a.anchor == b.anchor && a.kind == b.kind, || {
                    format!("{f} L={l}: stabilizer {i} differs")
                })?;
            }
            total += direct.len();
        }
    }
    Ok(format!("{total} stabilizers compared"))
}

struct Small {
    rows: usize,
    cols: usize,
    masks: Vec<u32>,
}

impl Small {
    fn matrix(&self) -> F2Matrix {
        F2Matrix::from_rows(self.cols, self.masks.iter().map(|&m| mask_vec(self.cols, m)).collect())
            .expect("row lengths")
    }

    fn apply(&self, x: u32) -> u32 {
        self.masks
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &r)| acc | (((r & x).count_ones() & 1) << i))
    }

    fn row_space(&self) -> BTreeSet<u32> {
        span_masks(&self.masks)
    }
}

fn mask_vec(len: usize, m: u32) -> BitVec {
    BitVec::from_indices(len, (0..len).filter(|i| m >> i & 1 == 1))
}

fn vec_mask(v: &BitVec) -> u32 {
    v.iter_ones().fold(0, |acc, i| acc | 1 << i)
}

fn span_masks(gens: &[u32]) -> BTreeSet<u32> {
    (0u32..1 << gens.len())
        .map(|s| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .fold(0, |acc, (_, &g)| acc ^ g)
        })
        .collect()
}

fn check_small(s: &Small) -> Result<(), String> {
    let m = s.matrix();
    let (r, c) = (s.rows, s.cols);
    let tag = || format!("{r}x{c} {:?}", s.masks);
    let row_space = s.row_space();
    let rank = row_space.len().trailing_zeros() as usize;
    ensure(m.rank() == rank, || format!("{}: rank", tag()))?;

    let kernel: BTreeSet<u32> = (0u32..1 << c).filter(|&x| s.apply(x) == 0).collect();
    let kb: Vec<u32> = m.kernel_basis().iter().map(vec_mask).collect();
    ensure(kb.len() == c - rank && span_masks(&kb) == kernel, || format!("{}: kernel", tag()))?;

    let rref = m.rref();
    let basis: Vec<u32> = rref.clone().into_basis().iter().map(vec_mask).collect();
    ensure(span_masks(&basis) == row_space && basis.len() == rank, || format!("{}: rref span", tag()))?;
    for (i, &p) in rref.pivots.iter().enumerate() {
        let leading = basis[i].trailing_zeros() as usize;
        let column_clean = basis.iter().enumerate().all(|(j, &b)| (b >> p & 1 == 1) == (i == j));
        ensure(leading == p && column_clean, || format!("{}: rref shape", tag()))?;
    }

    let t = m.transpose();
    for i in 0..r {
        for j in 0..c {
            ensure(t.get(j, i) == (s.masks[i] >> j & 1 == 1), || format!("{}: transpose", tag()))?;
        }
    }
    for x in 0u32..1 << c {
        ensure(vec_mask(&m.mul_vec(&mask_vec(c, x))) == s.apply(x), || format!("{}: mul_vec", tag()))?;
    }
    for y in 0u32..1 << r {
        let want = (0..r).filter(|i| y >> i & 1 == 1).fold(0, |acc, i| acc ^ s.masks[i]);
        ensure(vec_mask(&m.left_mul(&mask_vec(r, y))) == want, || format!("{}: left_mul", tag()))?;
    }
    // M M^T against the entrywise definition
    let g = m.mul(&t);
    for i in 0..r {
        for j in 0..r {
            let want = (s.masks[i] & s.masks[j]).count_ones() & 1 == 1;
            ensure(g.get(i, j) == want, || format!("{}: mul", tag()))?;
        }
    }

    let image: BTreeSet<u32> = (0u32..1 << c).map(|x| s.apply(x)).collect();
    for b in 0u32..1 << r {
        match m.solve(&mask_vec(r, b)).map_err(|e| e.to_string())? {
            Solution::Solved(x) => ensure(s.apply(vec_mask(&x)) == b, || format!("{}: solve", tag()))?,
            Solution::Inconsistent { certificate } => {
                let cm = vec_mask(&certificate);
                let combo = (0..r).filter(|i| cm >> i & 1 == 1).fold(0, |acc, i| acc ^ s.masks[i]);
                let valid = !image.contains(&b) && combo == 0 && (cm & b).count_ones() & 1 == 1;
                ensure(valid, || format!("{}: certificate", tag()))?;
            }
        }
    }

    let rows: Vec<BitVec> = s.masks.iter().map(|&x| mask_vec(c, x)).collect();
    let sub = Subspace::spanned_by(c, &rows).map_err(|e| e.to_string())?;
    ensure(sub.dim() == rank, || format!("{}: subspace dim", tag()))?;
    for v in 0u32..1 << c {
        let inside = row_space.contains(&v);
        let vv = mask_vec(c, v);
        ensure(sub.contains(&vv) == inside && sub.reduce(&vv).is_zero() == inside, || {
            format!("{}: subspace membership", tag())
        })?;
    }

    let perp = orthogonal_complement(&rows, &F2Matrix::identity(c)).map_err(|e| e.to_string())?;
    let perp: Vec<u32> = perp.iter().map(vec_mask).collect();
    ensure(span_masks(&perp) == kernel, || format!("{}: orthogonal complement", tag()))?;

    let w = [s.masks[0]];
    let reps = quotient_basis(&rows, &[mask_vec(c, w[0])]).map_err(|e| e.to_string())?;
    let mut gens: Vec<u32> = reps.iter().map(vec_mask).collect();
    let w_dim = usize::from(w[0] != 0);
    ensure(gens.len() + w_dim == rank, || format!("{}: quotient size", tag()))?;
    gens.push(w[0]);
    ensure(span_masks(&gens) == row_space, || format!("{}: quotient span", tag()))?;
    Ok(())
}

fn criterion_10() -> Outcome {
    let mut exhaustive = 0usize;
    for r in 1..=3 {
        for c in 1..=3 {
            for all in 0u32..1 << (r * c) {
                let masks = (0..r).map(|i| (all >> (i * c)) & ((1 << c) - 1)).collect();
                check_small(&Small { rows: r, cols: c, masks })?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..10_000 {
        let masks = (0..4).map(|_| rng.gen_range(0u32..16)).collect();
        check_small(&Small { rows: 4, cols: 4, masks })?;
    }
    Ok(format!("{exhaustive} matrices up to 3x3 exhaustively, 10000 random 4x4"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("toric code dimensions", criterion_1),
        ("X-cube scaling 6L-3", criterion_2),
        ("Haah counting and k goldens", criterion_3),
        ("syndrome rules round-trip", criterion_4),
        ("logicals from topological constraints", criterion_5),
        ("continuum Maxwell equations and symplecticity", criterion_6),
        ("continuum conservation identities", criterion_7),
        ("coupled layer counts and lifts", criterion_8),
        ("stabilizer maps match direct constructors", criterion_9),
        ("GF(2) routines against enumeration", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| (*s).to_owned()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} [{secs:.2}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} [{secs:.2}s] {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
