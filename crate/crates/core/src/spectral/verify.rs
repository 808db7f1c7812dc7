//! Cross-checks the combinatorial fiber of a face against explicit sampled matrices.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::arrow::SolutionStructure;
use super::sample::{gc_map, minor_spectra, FiberSampler};
use crate::blocks::{fiber_descriptor, StageFiber};
use crate::error::{Error, Result};
use crate::flag_core::nonconstant_indices;
use crate::ladder::Face;
use crate::polytope::interior_point;

/// Comparison of one stage's solved structure with its W-block classification.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageCheck {
    pub k: usize,
    pub expected: SolutionStructure,
    pub observed: SolutionStructure,
    pub expected_dim: usize,
    pub observed_dim: usize,
    pub pass: bool,
}

/// Outcome of [`verify_face`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub face_id: String,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub expected_dim: usize,
    pub empirical_dim: usize,
    pub max_spectrum_err: f64,
    pub max_roundtrip_err: f64,
    pub tolerance: f64,
    pub stages: Vec<StageCheck>,
    pub failures: Vec<String>,
}

/// Seed for one face, derived from a run seed and the face id so faces can be checked in
/// any order or in parallel.
pub fn face_seed(seed: u64, face_id: &str) -> u64 {
    let digest = Sha256::new()
        .chain_update(seed.to_le_bytes())
        .chain_update(face_id.as_bytes())
        .finalize();
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(bytes)
}

/// The structure a stage should solve to: zeros for points, a fixed radius per `S^1` and a
/// group of size `ℓ` per `S^{2ℓ−1}` with `ℓ ≥ 2`.
fn expected_structure(stage: &StageFiber) -> SolutionStructure {
    let mut sphere_sizes: Vec<usize> = stage
        .sphere_sizes()
        .into_iter()
        .filter(|&l| l >= 2)
        .collect();
    sphere_sizes.sort_unstable_by(|x, y| y.cmp(x));
    let fixed = stage.circle_count();
    let used = fixed + sphere_sizes.iter().sum::<usize>();
    SolutionStructure {
        zeros: stage.k.saturating_sub(used),
        fixed,
        sphere_sizes,
    }
}

/// Samples `samples` matrices over an interior point of `face` and checks the round trip,
/// the per-stage structure and the fiber dimension. `tol` is relative to the scale of λ.
pub fn verify_face(face: &Face, samples: usize, seed: u64, tol: f64) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::Domain("at least one sample is required".into()));
    }
    let spec = face.diagram().spec();
    let scale = spec.scale().max(1.0);
    let desc = fiber_descriptor(face);
    let point = interior_point(face)?;
    let sampler = FiberSampler::new(spec, &point)?;
    let solutions = sampler.stages();
    let mut failures = Vec::new();

    let stages: Vec<StageCheck> = desc
        .stages
        .iter()
        .zip(solutions)
        .map(|(stage, (_, sol))| {
            let expected = expected_structure(stage);
            let observed = sol.structure();
            let observed_dim = sol.continuous_dim();
            let pass = expected == observed && observed_dim == stage.total_dim;
            if !pass {
                failures.push(format!(
                    "stage {}: W-block regions give {:?} (dim {}), the solution has {:?} (dim {})",
                    stage.k, expected, stage.total_dim, observed, observed_dim
                ));
            }
            StageCheck {
                k: stage.k,
                expected,
                observed,
                expected_dim: stage.total_dim,
                observed_dim,
                pass,
            }
        })
        .collect();

    let empirical_dim: usize = solutions.iter().map(|(_, s)| s.continuous_dim()).sum();
    if empirical_dim != desc.total_dim {
        failures.push(format!(
            "fiber dimension {} from the solutions, {} from the diagram",
            empirical_dim, desc.total_dim
        ));
    }

    let nonconstant = nonconstant_indices(spec).nonconstant;
    let mut rng = ChaCha8Rng::seed_from_u64(face_seed(seed, &desc.face_id));
    let mut max_spectrum_err: f64 = 0.0;
    let mut max_roundtrip_err: f64 = 0.0;
    for i in 0..samples {
        let x = sampler.sample(&mut rng)?;
        let minors = minor_spectra(&x);
        let spectrum = &minors[minors.len() - 1];
        for (e, l) in spectrum.iter().zip(spec.values()) {
            max_spectrum_err = max_spectrum_err.max((e - l.to_f64()).abs());
        }
        for &(i, j) in &nonconstant {
            let err = (minors[i + j - 2][i - 1] - point.get((i, j)).to_f64()).abs();
            max_roundtrip_err = max_roundtrip_err.max(err);
        }
        if i == 0 {
            // The public map is exercised once per face; the loop reads the same minors.
            if let Err(e) = gc_map(&x, spec, tol) {
                failures.push(format!("sample {i}: {e}"));
            }
        }
    }
    if max_spectrum_err > tol * scale {
        failures.push(format!("spectrum error {max_spectrum_err:.3e}"));
    }
    if max_roundtrip_err > tol * scale {
        failures.push(format!("round-trip error {max_roundtrip_err:.3e}"));
    }

    Ok(VerifyReport {
        face_id: desc.face_id,
        seed,
        samples,
        passed: failures.is_empty(),
        expected_dim: desc.total_dim,
        empirical_dim,
        max_spectrum_err,
        max_roundtrip_err,
        tolerance: tol,
        stages,
        failures,
    })
}
