use num_complex::Complex64;

use super::matrix::{CMatrix, HermitianMatrix};

/// Off-diagonal Frobenius norm at which the sweeps stop, relative to `max(1, ‖A‖_F)`.
pub const JACOBI_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `A = V diag(values) V*` with `values` in non-increasing order.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn frobenius(a: &CMatrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += a.get(i, j).norm_sqr();
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi rotations.
///
/// Each pivot `(p, q)` first removes the phase of `a_pq` with `diag(1, e^{-iφ})` and then
/// zeroes the now real entry with a plane rotation.
pub fn eigh(a: &HermitianMatrix) -> Eigen {
    let (values, vectors) = jacobi(a, true);
    Eigen { values, vectors }
}

/// Eigenvalues in non-increasing order.
pub fn eigenvalues(a: &HermitianMatrix) -> Vec<f64> {
    jacobi(a, false).0
}

fn jacobi(a: &HermitianMatrix, with_vectors: bool) -> (Vec<f64>, CMatrix) {
    let n = a.n();
    let mut m = a.to_dense();
    let mut v = CMatrix::identity(n);
    let threshold = JACOBI_TOL * frobenius(&m).max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                let beta = apq.norm();
                if beta == 0.0 {
                    continue;
                }
                let phase = apq / beta;
                let alpha = m.get(p, p).re;
                let gamma = m.get(q, q).re;
                let theta = 0.5 * (2.0 * beta).atan2(gamma - alpha);
                let (s, c) = theta.sin_cos();
                let up_p = Complex64::new(c, 0.0);
                let up_q = Complex64::new(s, 0.0);
                let uq_p = -phase.conj() * s;
                let uq_q = phase.conj() * c;

                // M <- M U (columns p and q).
                for r in 0..n {
                    let mp = m.get(r, p);
                    let mq = m.get(r, q);
                    m.set(r, p, mp * up_p + mq * uq_p);
                    m.set(r, q, mp * up_q + mq * uq_q);
                    if !with_vectors {
                        continue;
                    }
                    let vp = v.get(r, p);
                    let vq = v.get(r, q);
                    v.set(r, p, vp * up_p + vq * uq_p);
                    v.set(r, q, vp * up_q + vq * uq_q);
                }
                // M <- U* M (rows p and q).
                for col in 0..n {
                    let mp = m.get(p, col);
                    let mq = m.get(q, col);
                    m.set(p, col, up_p.conj() * mp + uq_p.conj() * mq);
                    m.set(q, col, up_q.conj() * mp + uq_q.conj() * mq);
                }
                m.set(p, q, Complex64::new(0.0, 0.0));
                m.set(q, p, Complex64::new(0.0, 0.0));
                let dp = m.get(p, p).re;
                let dq = m.get(q, q).re;
                m.set(p, p, Complex64::new(dp, 0.0));
                m.set(q, q, Complex64::new(dq, 0.0));
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(j, j).re.total_cmp(&m.get(i, i).re));
    let values = order.iter().map(|&i| m.get(i, i).re).collect();
    if !with_vectors {
        return (values, v);
    }
    let mut vectors = CMatrix::zeros(n);
    for (new, &old) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, new, v.get(r, old));
        }
    }
    (values, vectors)
}
