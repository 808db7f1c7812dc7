//! The arrow matrices `Z(a, b)` with diagonal `b`, last column `z` and spectrum `a`.
//!
//! `det(xI − Z) = (x − c)·∏(x − b_i) − Σ_i |z_i|²·∏_{m≠i}(x − b_m)` with corner
//! `c = Σa − Σb`. Equal `b` values either force the matching `z_i` to zero or tie them to a
//! sphere, and the strictly interlacing remainder fixes each `|z_i|²`.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::matrix::HermitianMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default tolerance for deciding `a = b` ties between float values.
pub const DEFAULT_TIE_EPS: f64 = 1e-9;

/// Residual bound of the characteristic equations, in units of `scale^(k+1)`.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Spectra `a` (length `k+1`) and `b` (length `k`) with `a₁ ≥ b₁ ≥ a₂ ≥ … ≥ b_k ≥ a_{k+1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InterlacingPair {
    a: Vec<Scalar>,
    b: Vec<Scalar>,
    #[serde(skip)]
    tie_eps: f64,
}

impl InterlacingPair {
    pub fn new(a: Vec<Scalar>, b: Vec<Scalar>) -> Result<Self> {
        Self::with_tie_eps(a, b, DEFAULT_TIE_EPS)
    }

    /// Exact values are compared exactly; any comparison involving a float uses `tie_eps`
    /// relative to the largest absolute entry.
    pub fn with_tie_eps(a: Vec<Scalar>, b: Vec<Scalar>, tie_eps: f64) -> Result<Self> {
        if a.len() != b.len() + 1 {
            return Err(Error::Domain(format!(
                "need |a| = |b| + 1, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        let pair = InterlacingPair { a, b, tie_eps };
        for i in 0..pair.b.len() {
            let ok = pair.geq(pair.a[i], pair.b[i]) && pair.geq(pair.b[i], pair.a[i + 1]);
            if !ok {
                return Err(Error::Domain(format!(
                    "a and b do not interlace at position {}",
                    i + 1
                )));
            }
        }
        Ok(pair)
    }

    pub fn from_f64(a: &[f64], b: &[f64]) -> Result<Self> {
        Self::new(
            a.iter().map(|&x| Scalar::Float(x)).collect(),
            b.iter().map(|&x| Scalar::Float(x)).collect(),
        )
    }

    pub fn a(&self) -> &[Scalar] {
        &self.a
    }

    pub fn b(&self) -> &[Scalar] {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn tie_eps(&self) -> f64 {
        self.tie_eps
    }

    /// Largest absolute entry, at least 1e-300 so it can divide.
    pub fn scale(&self) -> f64 {
        self.a
            .iter()
            .chain(&self.b)
            .map(|x| x.to_f64().abs())
            .fold(0.0, f64::max)
            .max(1e-300)
    }

    /// Whether two entries count as equal.
    pub fn ties(&self, x: Scalar, y: Scalar) -> bool {
        if x.is_exact() && y.is_exact() {
            x == y
        } else {
            (x.to_f64() - y.to_f64()).abs() <= self.tie_eps * self.scale().max(1.0)
        }
    }

    fn geq(&self, x: Scalar, y: Scalar) -> bool {
        x >= y || self.ties(x, y)
    }

    /// `Σa − Σb`.
    pub fn corner(&self) -> f64 {
        self.a.iter().map(Scalar::to_f64).sum::<f64>()
            - self.b.iter().map(Scalar::to_f64).sum::<f64>()
    }
}

/// A set of `z` indices whose squared norms sum to `radius_sq`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereGroup {
    pub indices: Vec<usize>,
    pub radius_sq: f64,
}

/// The solution set of the arrow equations. Indices are zero-based positions in `b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberSolution {
    pub zero_indices: Vec<usize>,
    /// `(i, δ_i)` with `|z_i|² = δ_i > 0`.
    pub fixed_radii: Vec<(usize, f64)>,
    pub sphere_groups: Vec<SphereGroup>,
    pub corner: f64,
}

/// Counts of the three kinds of indices in a [`FiberSolution`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionStructure {
    pub zeros: usize,
    pub fixed: usize,
    /// Group sizes in non-increasing order.
    pub sphere_sizes: Vec<usize>,
}

impl FiberSolution {
    pub fn structure(&self) -> SolutionStructure {
        let mut sphere_sizes: Vec<usize> =
            self.sphere_groups.iter().map(|g| g.indices.len()).collect();
        sphere_sizes.sort_unstable_by(|x, y| y.cmp(x));
        SolutionStructure {
            zeros: self.zero_indices.len(),
            fixed: self.fixed_radii.len(),
            sphere_sizes,
        }
    }

    /// Real dimension of the solution set: one phase per fixed radius and `2μ − 1` per
    /// sphere group of size `μ`.
    pub fn continuous_dim(&self) -> usize {
        self.fixed_radii.len()
            + self
                .sphere_groups
                .iter()
                .map(|g| 2 * g.indices.len() - 1)
                .sum::<usize>()
    }

    /// `|z_i|²` for every index, splitting each sphere group evenly.
    pub fn squared_norms(&self, k: usize) -> Vec<f64> {
        let mut w = vec![0.0; k];
        for &(i, d) in &self.fixed_radii {
            w[i] = d;
        }
        for g in &self.sphere_groups {
            for &i in &g.indices {
                w[i] = g.radius_sq / g.indices.len() as f64;
            }
        }
        w
    }
}

enum Reduced {
    Fixed(usize),
    Sphere(Vec<usize>),
}

/// Solves the arrow equations for `|z_i|²`.
pub fn solve_fiber_system(pair: &InterlacingPair) -> Result<FiberSolution> {
    let k = pair.k();
    let (a, b) = (pair.a(), pair.b());
    let mut a_used = vec![false; k + 1];
    let mut zero_indices = Vec::new();
    let mut unknowns: Vec<(f64, Reduced)> = Vec::new();
    let mut fuzzy = false;

    let mut start = 0;
    while start < k {
        let beta = b[start];
        let mut end = start + 1;
        while end < k && pair.ties(b[end - 1], b[end]) {
            end += 1;
        }
        let mu = end - start;
        // Only a_start ..= a_end can tie with this cluster.
        let tied: Vec<usize> = (start..=end).filter(|&m| pair.ties(a[m], beta)).collect();
        fuzzy |= !beta.is_exact() || tied.iter().any(|&m| !a[m].is_exact());
        let alpha = tied.len();
        for &m in tied.iter().take(alpha.min(mu)) {
            a_used[m] = true;
        }
        let members: Vec<usize> = (start..end).collect();
        if alpha >= mu {
            zero_indices.extend(members);
        } else if mu == 1 {
            unknowns.push((beta.to_f64(), Reduced::Fixed(start)));
        } else {
            unknowns.push((beta.to_f64(), Reduced::Sphere(members)));
        }
        start = end;
    }

    let corner = pair.corner();
    let s = pair.scale().max(f64::MIN_POSITIVE);
    let a_red: Vec<f64> = (0..=k)
        .filter(|&m| !a_used[m])
        .map(|m| a[m].to_f64() / s)
        .collect();
    let b_red: Vec<f64> = unknowns.iter().map(|(x, _)| x / s).collect();
    if a_red.len() != b_red.len() + 1 {
        return Err(Error::Numerical(format!(
            "reduction left {} a-values for {} unknowns",
            a_red.len(),
            b_red.len()
        )));
    }
    let c = corner / s;
    let d = b_red.len();
    let rows: Vec<Vec<f64>> = a_red
        .iter()
        .map(|&ae| {
            (0..d)
                .map(|i| (0..d).filter(|&m| m != i).map(|m| ae - b_red[m]).product())
                .collect()
        })
        .collect();
    let rhs: Vec<f64> = a_red
        .iter()
        .map(|&ae| (ae - c) * b_red.iter().map(|&bm| ae - bm).product::<f64>())
        .collect();
    let w = least_squares(rows, rhs);

    let mut fixed_radii = Vec::new();
    let mut sphere_groups = Vec::new();
    for ((_, kind), wi) in unknowns.into_iter().zip(w) {
        if wi < -1e-9 {
            return Err(Error::Numerical(format!(
                "solved squared radius {wi:.3e} is negative"
            )));
        }
        let radius_sq = wi.max(0.0) * s * s;
        match kind {
            Reduced::Fixed(i) => fixed_radii.push((i, radius_sq)),
            Reduced::Sphere(indices) => sphere_groups.push(SphereGroup { indices, radius_sq }),
        }
    }
    let solution = FiberSolution {
        zero_indices,
        fixed_radii,
        sphere_groups,
        corner,
    };

    let tol = RESIDUAL_TOL + if fuzzy { 10.0 * pair.tie_eps() } else { 0.0 };
    let worst = max_residual(pair, &solution);
    if worst > tol {
        return Err(Error::Numerical(format!(
            "characteristic equations violated by {worst:.3e}"
        )));
    }
    Ok(solution)
}

/// Largest `|det(a_e I − Z)|` over the entries `a_e`, divided by `scale^(k+1)`.
pub fn max_residual(pair: &InterlacingPair, solution: &FiberSolution) -> f64 {
    let k = pair.k();
    let s = pair.scale();
    let b: Vec<f64> = pair.b().iter().map(|x| x.to_f64() / s).collect();
    let w: Vec<f64> = solution
        .squared_norms(k)
        .iter()
        .map(|x| x / (s * s))
        .collect();
    let c = solution.corner / s;
    pair.a()
        .iter()
        .map(|ae| {
            let x = ae.to_f64() / s;
            let lead = (x - c) * b.iter().map(|bm| x - bm).product::<f64>();
            let sum: f64 = (0..k)
                .map(|i| {
                    w[i] * (0..k)
                        .filter(|&m| m != i)
                        .map(|m| x - b[m])
                        .product::<f64>()
                })
                .sum();
            (lead - sum).abs()
        })
        .fold(0.0, f64::max)
}

/// Householder least squares for a tall system `rows · w ≈ rhs`.
fn least_squares(mut rows: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Vec<f64> {
    let m = rows.len();
    let d = rows.first().map_or(0, Vec::len);
    for col in 0..d {
        let norm = (col..m).map(|r| rows[r][col].powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if rows[col][col] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (col..m).map(|r| rows[r][col]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in col..d {
            let dot: f64 = (col..m).map(|r| v[r - col] * rows[r][j]).sum();
            let f = 2.0 * dot / vnorm2;
            for (row, &vr) in rows[col..m].iter_mut().zip(&v) {
                row[j] -= f * vr;
            }
        }
        let dot: f64 = (col..m).map(|r| v[r - col] * rhs[r]).sum();
        let f = 2.0 * dot / vnorm2;
        for r in col..m {
            rhs[r] -= f * v[r - col];
        }
    }
    let mut w = vec![0.0; d];
    for i in (0..d).rev() {
        let tail: f64 = (i + 1..d).map(|j| rows[i][j] * w[j]).sum();
        w[i] = if rows[i][i] == 0.0 {
            0.0
        } else {
            (rhs[i] - tail) / rows[i][i]
        };
    }
    w
}

/// The arrow matrix for the choice `z`, after checking it respects the solution.
pub fn assemble_matrix(
    pair: &InterlacingPair,
    solution: &FiberSolution,
    z: &[Complex64],
) -> Result<HermitianMatrix> {
    let k = pair.k();
    if z.len() != k {
        return Err(Error::Domain(format!(
            "expected {k} entries, got {}",
            z.len()
        )));
    }
    let s2 = pair.scale().powi(2);
    let tol = 1e-9 * s2;
    for &i in &solution.zero_indices {
        if z[i].norm_sqr() > tol {
            return Err(Error::Domain(format!("z_{} must vanish", i + 1)));
        }
    }
    for &(i, d) in &solution.fixed_radii {
        if (z[i].norm_sqr() - d).abs() > tol {
            return Err(Error::Domain(format!("|z_{}|² must equal {d}", i + 1)));
        }
    }
    for g in &solution.sphere_groups {
        let total: f64 = g.indices.iter().map(|&i| z[i].norm_sqr()).sum();
        if (total - g.radius_sq).abs() > tol {
            return Err(Error::Domain(format!(
                "group {:?} must have squared norm {}",
                g.indices, g.radius_sq
            )));
        }
    }
    let mut m = HermitianMatrix::zeros(k + 1);
    for (i, bi) in pair.b().iter().enumerate() {
        m.set(i, i, Complex64::new(bi.to_f64(), 0.0));
        m.set(i, k, z[i].conj());
    }
    m.set(k, k, Complex64::new(solution.corner, 0.0));
    Ok(m)
}

/// A uniformly random choice: independent uniform phases on the fixed radii and a
/// normalized Gaussian vector on each sphere group.
pub fn sample_choice<R: Rng + ?Sized>(
    solution: &FiberSolution,
    k: usize,
    rng: &mut R,
) -> Vec<Complex64> {
    let mut z = vec![Complex64::new(0.0, 0.0); k];
    for &(i, d) in &solution.fixed_radii {
        let theta = rng.random::<f64>() * std::f64::consts::TAU;
        z[i] = Complex64::from_polar(d.sqrt(), theta);
    }
    for g in &solution.sphere_groups {
        loop {
            let v: Vec<Complex64> = g
                .indices
                .iter()
                .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect();
            let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
            if norm > 1e-12 {
                let r = g.radius_sq.sqrt() / norm;
                for (&i, vi) in g.indices.iter().zip(v) {
                    z[i] = vi * r;
                }
                break;
            }
        }
    }
    z
}

/// The choice with every phase trivial and each sphere group concentrated on its first index.
pub fn trivial_choice(solution: &FiberSolution, k: usize) -> Vec<Complex64> {
    let mut z = vec![Complex64::new(0.0, 0.0); k];
    for &(i, d) in &solution.fixed_radii {
        z[i] = Complex64::new(d.sqrt(), 0.0);
    }
    for g in &solution.sphere_groups {
        z[g.indices[0]] = Complex64::new(g.radius_sq.sqrt(), 0.0);
    }
    z
}
