//! One line per acceptance criterion; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gc_fibers::spectral::ROUNDTRIP_TOL;
use gc_fibers::{
    build_ladder, complex_dimension, compositions, eigenvalues, enumerate_faces,
    face_affine_dimension, fiber_descriptor, lagrangian_classification, nonconstant_indices, psi,
    random_conjugate, rigid_l_blocks, torus_factorization, verify_face, w_decomposition, Face,
    LBlock, LambdaSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 20240611;
const SLACK_TOL: f64 = 1e-9;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    Outcome { ok, detail }
}

fn faces_of(lambda: &str) -> Vec<Face> {
    enumerate_faces(&common::diagram(lambda)).unwrap()
}

fn ac1_f3_table() -> Outcome {
    let faces = faces_of(common::F3);
    let mut problems = Vec::new();
    let vertices: Vec<&Face> = faces.iter().filter(|f| f.dim() == 0).collect();
    let bundles: Vec<String> = vertices
        .iter()
        .map(|f| fiber_descriptor(f).bundle)
        .collect();
    let spheres = bundles.iter().filter(|b| *b == "S^3").count();
    let points = bundles.iter().filter(|b| *b == "pt").count();
    if vertices.len() != 7 || spheres != 1 || points != 6 {
        problems.push(format!("vertex fibers {bundles:?}"));
    }
    for f in &faces {
        let d = fiber_descriptor(f);
        let dim = f.dim();
        if dim == 0 {
            continue;
        }
        let torus = d.total_dim == dim
            && d.circle_count == dim
            && d.stages
                .iter()
                .all(|s| s.sphere_sizes().iter().all(|&l| l == 1));
        if !torus {
            problems.push(format!(
                "face {} of dim {dim} has fiber {}",
                d.face_id, d.bundle
            ));
        }
        if f.is_improper() && torus_factorization(&d).r != 3 {
            problems.push("interior fiber does not split off T^3".into());
        }
    }
    let by_dim: Vec<usize> = (0..=3)
        .map(|k| faces.iter().filter(|f| f.dim() == k).count())
        .collect();
    if problems.is_empty() {
        pass(format!(
            "f-vector {by_dim:?}, one S^3 vertex, tori elsewhere, r=3"
        ))
    } else {
        fail(problems.join("; "))
    }
}

fn proper_lagrangian(lambda: &str) -> usize {
    faces_of(lambda)
        .par_iter()
        .filter(|f| !f.is_improper() && lagrangian_classification(f).unwrap().is_lagrangian)
        .count()
}

fn ac2_lagrangian_counts() -> Outcome {
    let gr26 = proper_lagrangian("1,1,0,0,0,0");
    let f4 = proper_lagrangian("3,2,1,0");
    let projective: Vec<usize> = (2..=6)
        .map(|n| {
            let mut v = vec!["0"; n];
            v[0] = "1";
            proper_lagrangian(&v.join(","))
        })
        .collect();
    check(
        gr26 == 4 && f4 == 3 && projective.iter().all(|&c| c == 0),
        format!("Gr(2,6) {gr26} (want 4), F(4) {f4} (want 3), CP^1..CP^5 {projective:?} (want 0)"),
    )
}

fn ac3_rigid_blocks() -> Outcome {
    let face = common::gamma_2_5_7();
    let found: BTreeSet<LBlock> = rigid_l_blocks(&face).into_iter().collect();
    let want: BTreeSet<LBlock> = [
        LBlock::new(3, 1, 1),
        LBlock::new(1, 4, 1),
        LBlock::new(1, 5, 1),
        LBlock::new(1, 5, 2),
    ]
    .into_iter()
    .collect();
    let report = lagrangian_classification(&face).unwrap();
    check(
        found == want && report.fiber_dim == 8 && report.l_sum == 8,
        format!(
            "blocks {:?}, fiber dim {}, sum of (2k-1) {}",
            found
                .iter()
                .map(|b| format!("L{}({},{})", b.k, b.p, b.q))
                .collect::<Vec<_>>(),
            report.fiber_dim,
            report.l_sum
        ),
    )
}

fn ac4_exhaustive() -> Outcome {
    let specs: Vec<LambdaSpec> = (1..=5)
        .flat_map(compositions)
        .map(|c| LambdaSpec::unit_gap(&c).unwrap())
        .collect();
    let results: Vec<(usize, Vec<String>)> = specs
        .par_iter()
        .map(|spec| {
            let d = build_ladder(spec).unwrap();
            let faces = enumerate_faces(&d).unwrap();
            let mut bad = Vec::new();
            for f in &faces {
                let desc = fiber_descriptor(f);
                let blocks: usize = rigid_l_blocks(f).iter().map(|b| 2 * b.k - 1).sum();
                let graph_dim = f.edges().len() + 1 - f.vertices().len();
                let m1_bottom: usize = (1..spec.n())
                    .map(|k| {
                        let w = w_decomposition(f, k).unwrap();
                        w.regions
                            .iter()
                            .filter(|r| r.len() == 1 && w.has_bottom_vertex(r))
                            .count()
                    })
                    .sum();
                let affine = face_affine_dimension(&psi(f), spec).unwrap();
                if desc.total_dim != blocks {
                    bad.push(format!(
                        "{:?} {}: fiber {} vs blocks {blocks}",
                        spec.values(),
                        desc.face_id,
                        desc.total_dim
                    ));
                }
                if desc.circle_count != graph_dim || m1_bottom != graph_dim {
                    bad.push(format!(
                        "{:?} {}: circles {} vs |E|-|V|+1 {graph_dim} vs M1 regions {m1_bottom}",
                        spec.values(),
                        desc.face_id,
                        desc.circle_count
                    ));
                }
                if affine != graph_dim {
                    bad.push(format!(
                        "{:?} {}: affine {affine} vs graph {graph_dim}",
                        spec.values(),
                        desc.face_id
                    ));
                }
            }
            (faces.len(), bad)
        })
        .collect();
    let total: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    check(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} specs, {total} faces, 0 failures", specs.len())
        } else {
            format!("{} failures, first: {}", bad.len(), bad[0])
        },
    )
}

fn ac5_round_trip() -> Outcome {
    let faces: Vec<Face> = (1..=5)
        .flat_map(compositions)
        .flat_map(|c| {
            let d = build_ladder(&LambdaSpec::unit_gap(&c).unwrap()).unwrap();
            enumerate_faces(&d).unwrap()
        })
        .collect();
    let reports: Vec<Result<gc_fibers::VerifyReport, String>> = faces
        .par_iter()
        .map(|f| verify_face(f, 20, SEED, ROUNDTRIP_TOL).map_err(|e| format!("{}: {e}", f.id())))
        .collect();
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for r in &reports {
        match r {
            Ok(rep) => {
                worst = worst.max(rep.max_roundtrip_err).max(rep.max_spectrum_err);
                if !rep.passed {
                    failures.push(format!("{}: {}", rep.face_id, rep.failures.join(" | ")));
                }
            }
            Err(e) => failures.push(e.clone()),
        }
    }
    check(
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{} faces x 20 samples, worst error {worst:.2e}",
                faces.len()
            )
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        },
    )
}

fn random_spec(rng: &mut ChaCha8Rng) -> LambdaSpec {
    let n = rng.random_range(2..=6);
    let comps: Vec<Vec<usize>> = compositions(n)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let comp = &comps[rng.random_range(0..comps.len())];
    let mut value = rng.random_range(-5..=5i64);
    let mut values = Vec::new();
    for &k in comp {
        values.extend(std::iter::repeat_n(value, k));
        value -= rng.random_range(1..=4);
    }
    LambdaSpec::from_ints(&values).unwrap()
}

fn ac6_interlacing_fuzz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = f64::INFINITY;
    let mut names = Vec::new();
    for _ in 0..5 {
        let spec = random_spec(&mut rng);
        names.push(format!(
            "{:?}",
            spec.values()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        ));
        let idx = nonconstant_indices(&spec);
        for _ in 0..1000 {
            let x = random_conjugate(&spec, &mut rng);
            let minors: Vec<Vec<f64>> =
                (1..=spec.n()).map(|m| eigenvalues(&x.leading(m))).collect();
            let u = |(i, j): (usize, usize)| minors[i + j - 2][i - 1];
            for (big, small) in idx.pattern_relations() {
                worst = worst.min(u(big) - u(small));
            }
            for (&c, &m) in &idx.constant {
                worst = worst.min(-(u(c) - spec.value(m).to_f64()).abs());
            }
        }
    }
    check(
        worst >= -SLACK_TOL,
        format!(
            "5 specs {} x 1000 samples, min slack {worst:.2e}",
            names.join(" ")
        ),
    )
}

fn ac7_bundle_fixtures() -> Outcome {
    let mut problems = Vec::new();

    let origin = common::origin(common::SU3);
    let d = fiber_descriptor(&origin);
    let t = torus_factorization(&d);
    let lag = lagrangian_classification(&origin).unwrap();
    let n5 = complex_dimension(origin.diagram().spec());
    if d.bundle != "S^3-bundle over S^5"
        || d.total_dim != 8
        || n5 != 8
        || !lag.is_lagrangian
        || t.r != 0
    {
        problems.push(format!(
            "SU(3) origin: {} dim {} lagrangian {} r {}",
            d.bundle, d.total_dim, lag.is_lagrangian, t.r
        ));
    }

    let t36 = torus_factorization(&fiber_descriptor(&common::gr36_gamma2()));
    if t36.r != 3 || t36.y_bundle != "S^3-bundle over S^3" {
        problems.push(format!("Gr(3,6) gamma_2: r {} Y {}", t36.r, t36.y_bundle));
    }

    let t6 = torus_factorization(&fiber_descriptor(&common::f6_gamma1()));
    if t6.r != 7 {
        problems.push(format!("F(6) gamma_1: r {} Y {}", t6.r, t6.y_bundle));
    }

    if problems.is_empty() {
        pass(format!(
            "origin \"{}\" dim 8 r=0; Gr(3,6) r={} Y \"{}\"; F(6) r={} Y \"{}\"",
            d.bundle, t36.r, t36.y_bundle, t6.r, t6.y_bundle
        ))
    } else {
        fail(problems.join("; "))
    }
}

/// Label, title, time limit and check.
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "AC1",
            "F(3) fiber table",
            Duration::from_secs(1),
            ac1_f3_table,
        ),
        (
            "AC2",
            "Lagrangian face counts",
            Duration::from_secs(10),
            ac2_lagrangian_counts,
        ),
        (
            "AC3",
            "rigid blocks of the Gamma(2,5;7) face",
            Duration::from_secs(1),
            ac3_rigid_blocks,
        ),
        (
            "AC4",
            "exhaustive consistency n <= 5",
            Duration::from_secs(60),
            ac4_exhaustive,
        ),
        (
            "AC5",
            "spectral round trip n <= 5",
            Duration::from_secs(120),
            ac5_round_trip,
        ),
        (
            "AC6",
            "interlacing fuzz",
            Duration::from_secs(10),
            ac6_interlacing_fuzz,
        ),
        (
            "AC7",
            "bundle fixtures",
            Duration::from_secs(1),
            ac7_bundle_fixtures,
        ),
    ];
    let mut all = true;
    for (tag, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.ok && elapsed <= limit;
        all &= ok;
        println!(
            "[{}] {tag} {name}: {} ({:.3}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
