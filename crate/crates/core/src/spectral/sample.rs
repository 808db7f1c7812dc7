use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::arrow::{
    assemble_matrix, sample_choice, solve_fiber_system, FiberSolution, InterlacingPair,
};
use super::jacobi::{eigenvalues, eigh};
use super::matrix::{CMatrix, HermitianMatrix};
use crate::error::{Error, Result};
use crate::flag_core::{nonconstant_indices, LambdaSpec};
use crate::polytope::{contains, GCPoint, DEFAULT_TOL};
use crate::scalar::Scalar;

/// Default round-trip tolerance, relative to the scale of λ.
pub const ROUNDTRIP_TOL: f64 = 1e-8;

/// Largest `|μ_i − λ_i|` between the sorted spectrum of `x` and λ.
pub fn spectrum_error(x: &HermitianMatrix, spec: &LambdaSpec) -> f64 {
    max_deviation(&eigenvalues(x), spec)
}

fn max_deviation(spectrum: &[f64], spec: &LambdaSpec) -> f64 {
    spectrum
        .iter()
        .zip(spec.values())
        .map(|(e, l)| (e - l.to_f64()).abs())
        .fold(0.0, f64::max)
}

/// Spectra of the leading principal submatrices of sizes `1..=n`, each non-increasing.
pub fn minor_spectra(x: &HermitianMatrix) -> Vec<Vec<f64>> {
    (1..=x.n()).map(|m| eigenvalues(&x.leading(m))).collect()
}

/// The Gelfand-Cetlin coordinates of `x`: `u[i][j]` is the i-th largest eigenvalue of the
/// leading principal submatrix of size `i + j − 1`.
///
/// Constant cells are reported as their exact λ values once the spectrum of `x` is checked to
/// be λ within `tol · scale`.
pub fn gc_map(x: &HermitianMatrix, spec: &LambdaSpec, tol: f64) -> Result<GCPoint> {
    let n = spec.n();
    if x.n() != n {
        return Err(Error::Spectrum(format!(
            "matrix has size {}, λ has {n} entries",
            x.n()
        )));
    }
    let minors = minor_spectra(x);
    let err = max_deviation(&minors[n - 1], spec);
    if err > tol * spec.scale() {
        return Err(Error::Spectrum(format!(
            "spectrum differs from λ by {err:.3e}"
        )));
    }
    let idx = nonconstant_indices(spec);
    Ok(GCPoint::from_fn(n, |(i, j)| {
        match idx.constant_index((i, j)) {
            Some(m) => spec.value(m),
            None => Scalar::Float(minors[i + j - 2][i - 1]),
        }
    }))
}

/// A Haar-random unitary matrix from the QR factorization of a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect()
        })
        .collect();
    // Modified Gram-Schmidt; the resulting diagonal of R is real positive, which makes the
    // distribution Haar.
    for j in 0..n {
        for p in 0..j {
            let dot: Complex64 = (0..n).map(|r| cols[p][r].conj() * cols[j][r]).sum();
            let (done, rest) = cols.split_at_mut(j);
            for (z, &q) in rest[0].iter_mut().zip(&done[p]) {
                *z -= dot * q;
            }
        }
        let norm = cols[j].iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    let mut u = CMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            u.set(r, j, v);
        }
    }
    u
}

/// `U diag(λ) U*` for a random unitary `U`.
pub fn random_conjugate<R: Rng + ?Sized>(spec: &LambdaSpec, rng: &mut R) -> HermitianMatrix {
    let d: Vec<f64> = spec.values().iter().map(Scalar::to_f64).collect();
    HermitianMatrix::from_real_diagonal(&d).conjugated(&random_unitary(spec.n(), rng))
}

/// The interlacing pair of stage `k` (`1 ≤ k < n`): `b` holds the spectrum of the size `k`
/// minor and `a` that of the size `k + 1` minor.
pub fn stage_pair(point: &GCPoint, k: usize) -> Result<InterlacingPair> {
    let b = (1..=k).map(|i| point.get((i, k + 1 - i))).collect();
    let a = (1..=k + 1).map(|i| point.get((i, k + 2 - i))).collect();
    InterlacingPair::new(a, b)
}

/// The interlacing pair and solved fiber of every stage `1..n`.
pub fn stage_solutions(point: &GCPoint) -> Result<Vec<(InterlacingPair, FiberSolution)>> {
    (1..point.n())
        .map(|k| {
            let pair = stage_pair(point, k)?;
            let sol = solve_fiber_system(&pair)?;
            Ok((pair, sol))
        })
        .collect()
}

/// Draws random Hermitian matrices in the fiber over one point.
///
/// Starting from the 1×1 matrix `(u₁₁)`, stage `k` diagonalizes the current matrix
/// `y = V diag(b) V*`, draws an arrow matrix `Z` over the stage pair and replaces `y` by
/// `diag(V, 1) · Z · diag(V*, 1)`. The stage systems are solved once, up front.
#[derive(Clone, Debug)]
pub struct FiberSampler {
    start: f64,
    stages: Vec<(InterlacingPair, FiberSolution)>,
}

impl FiberSampler {
    pub fn new(spec: &LambdaSpec, point: &GCPoint) -> Result<Self> {
        if !contains(point, spec, DEFAULT_TOL * spec.scale().max(1.0)) {
            return Err(Error::Domain(
                "point lies outside the Gelfand-Cetlin polytope".into(),
            ));
        }
        Ok(FiberSampler {
            start: point.get((1, 1)).to_f64(),
            stages: stage_solutions(point)?,
        })
    }

    pub fn stages(&self) -> &[(InterlacingPair, FiberSolution)] {
        &self.stages
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<HermitianMatrix> {
        let mut y = HermitianMatrix::from_real_diagonal(&[self.start]);
        for (k, (pair, sol)) in (1..).zip(&self.stages) {
            let z = sample_choice(sol, k, rng);
            let arrow = assemble_matrix(pair, sol, &z)?;
            let v = eigh(&y).vectors.extend_by_one();
            y = arrow.conjugated(&v);
        }
        Ok(y)
    }
}

/// A random Hermitian matrix in the fiber over `point`; see [`FiberSampler`].
pub fn sample_fiber<R: Rng + ?Sized>(
    spec: &LambdaSpec,
    point: &GCPoint,
    rng: &mut R,
) -> Result<HermitianMatrix> {
    FiberSampler::new(spec, point)?.sample(rng)
}
