mod common;

use gc_fibers::spectral::{
    assemble_matrix, eigenvalues, eigh, gc_map, minor_spectra, random_unitary, sample_fiber,
    solve_fiber_system, trivial_choice, verify_face, FiberSampler, HermitianMatrix,
    InterlacingPair, ROUNDTRIP_TOL,
};
use gc_fibers::{interior_point, Scalar};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Strictly interlacing `a` (length k+1) and `b` (length k) built from positive gaps.
fn strict_pair(max_k: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1..=max_k).prop_flat_map(|k| {
        (-3.0f64..3.0, prop::collection::vec(0.05f64..2.0, 2 * k + 1)).prop_map(
            move |(top, gaps)| {
                let mut seq = vec![top];
                for g in &gaps[..2 * k] {
                    seq.push(seq[seq.len() - 1] - g);
                }
                let a = seq.iter().step_by(2).copied().collect();
                let b = seq.iter().skip(1).step_by(2).copied().collect();
                (a, b)
            },
        )
    })
}

fn closed_form(a: &[f64], b: &[f64], j: usize) -> f64 {
    let num: f64 = a.iter().map(|am| b[j] - am).product();
    let den: f64 = (0..b.len())
        .filter(|&i| i != j)
        .map(|i| b[j] - b[i])
        .product();
    -num / den
}

fn random_hermitian(n: usize, seed: u64) -> HermitianMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    use rand::Rng;
    let mut m = HermitianMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            m.set(
                i,
                j,
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            );
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn radii_match_the_closed_form((a, b) in strict_pair(6)) {
        let sol = solve_fiber_system(&InterlacingPair::from_f64(&a, &b).unwrap()).unwrap();
        prop_assert!(sol.zero_indices.is_empty() && sol.sphere_groups.is_empty());
        for &(j, d) in &sol.fixed_radii {
            let want = closed_form(&a, &b, j);
            prop_assert!(want > 0.0);
            prop_assert!((d - want).abs() <= 1e-10 * want.abs().max(1.0), "{} vs {}", d, want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn strictly_interlacing_spectra_are_reproduced((a, b) in strict_pair(7), seed in any::<u64>()) {
        let pair = InterlacingPair::from_f64(&a, &b).unwrap();
        let sol = solve_fiber_system(&pair).unwrap();
        prop_assert_eq!(sol.fixed_radii.len(), b.len());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = gc_fibers::spectral::sample_choice(&sol, b.len(), &mut rng);
        let ev = eigenvalues(&assemble_matrix(&pair, &sol, &z).unwrap());
        let scale = a.iter().map(|x| x.abs()).fold(1.0, f64::max);
        for (x, y) in ev.iter().zip(&a) {
            prop_assert!((x - y).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn jacobi_reconstructs_and_sorts(n in 1usize..9, seed in any::<u64>()) {
        let a = random_hermitian(n, seed);
        let e = eigh(&a);
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(e.vectors.unitarity_defect() < 1e-10);
        // Frobenius norm and trace are spectral invariants.
        let fro2: f64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a.get(i, j).norm_sqr()).sum();
        let ev2: f64 = e.values.iter().map(|x| x * x).sum();
        prop_assert!((fro2 - ev2).abs() < 1e-9 * fro2.max(1.0));
        prop_assert!((a.trace() - e.values.iter().sum::<f64>()).abs() < 1e-10 * fro2.sqrt().max(1.0));
        for col in 0..n {
            for row in 0..n {
                let av: Complex64 = (0..n).map(|l| a.get(row, l) * e.vectors.get(l, col)).sum();
                let lv = e.vectors.get(row, col) * e.values[col];
                prop_assert!((av - lv).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn cauchy_interlacing_of_conjugates(seed in any::<u64>()) {
        let spec: gc_fibers::LambdaSpec = "4,2,2,-1,-3".parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = gc_fibers::random_conjugate(&spec, &mut rng);
        let u = gc_map(&x, &spec, 1e-9).unwrap();
        prop_assert!(gc_fibers::min_slack(&u, &spec) >= -1e-9);
        let minors = minor_spectra(&x);
        for m in 1..minors.len() {
            for i in 0..m {
                prop_assert!(minors[m][i] >= minors[m - 1][i] - 1e-9);
                prop_assert!(minors[m - 1][i] >= minors[m][i + 1] - 1e-9);
            }
        }
    }
}

#[test]
fn two_by_two_eigenvalues_closed_form() {
    // [[p, w], [w*, q]] has eigenvalues (p + q)/2 ± sqrt(((p − q)/2)² + |w|²).
    for seed in 0..200 {
        let m = random_hermitian(2, seed);
        let (p, q, w) = (m.get(0, 0).re, m.get(1, 1).re, m.get(0, 1).norm());
        let mid = (p + q) / 2.0;
        let rad = (((p - q) / 2.0).powi(2) + w * w).sqrt();
        let ev = eigenvalues(&m);
        assert!((ev[0] - (mid + rad)).abs() < 1e-13);
        assert!((ev[1] - (mid - rad)).abs() < 1e-13);
    }
}

#[test]
fn arrow_examples() {
    let ints = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>();
    let pair = InterlacingPair::new(ints(&[1, 0, -1]), ints(&[0, 0])).unwrap();
    let sol = solve_fiber_system(&pair).unwrap();
    let m = assemble_matrix(&pair, &sol, &trivial_choice(&sol, 2)).unwrap();
    let ev = eigenvalues(&m);
    assert!((ev[0] - 1.0).abs() < 1e-12 && ev[1].abs() < 1e-12 && (ev[2] + 1.0).abs() < 1e-12);
}

#[test]
fn three_sphere_samples_differ_but_share_coordinates() {
    let face = common::f3_v3();
    let spec = face.diagram().spec();
    let point = interior_point(&face).unwrap();
    let x1 = sample_fiber(spec, &point, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
    let x2 = sample_fiber(spec, &point, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
    assert_ne!(x1, x2);
    let u1 = gc_map(&x1, spec, ROUNDTRIP_TOL).unwrap();
    let u2 = gc_map(&x2, spec, ROUNDTRIP_TOL).unwrap();
    assert!(u1.max_abs_diff(&point) < 1e-10 && u2.max_abs_diff(&point) < 1e-10);
}

#[test]
fn sampler_is_deterministic() {
    let face = common::gr24_gamma();
    let spec = face.diagram().spec();
    let sampler = FiberSampler::new(spec, &interior_point(&face).unwrap()).unwrap();
    let draw = |s| sampler.sample(&mut ChaCha8Rng::seed_from_u64(s)).unwrap();
    let (a, b) = (draw(9), draw(9));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn verify_reports_expected_stages() {
    let r = verify_face(&common::f3_v3(), 10, 3, ROUNDTRIP_TOL).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    assert_eq!(r.stages[1].observed.sphere_sizes, vec![2]);
    assert_eq!((r.expected_dim, r.empirical_dim), (3, 3));

    let r = verify_face(&common::gr24_gamma(), 10, 3, ROUNDTRIP_TOL).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    let dims: Vec<usize> = r.stages.iter().map(|s| s.observed_dim).collect();
    assert_eq!(dims, vec![0, 3, 1]);
}

#[test]
fn verify_fixture_faces_in_six_and_seven() {
    for face in [
        common::gr36_gamma2(),
        common::f6_gamma1(),
        common::gamma_2_5_7(),
    ] {
        let r = verify_face(&face, 5, 1, ROUNDTRIP_TOL).unwrap();
        assert!(r.passed, "{:?}", r.failures);
    }
}

#[test]
fn haar_unitaries_are_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 1..10 {
        assert!(random_unitary(n, &mut rng).unitarity_defect() < 1e-12);
    }
}
