use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Dense square complex matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(l, j);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// `diag(self, 1)`.
    pub fn extend_by_one(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n + 1);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j));
            }
        }
        out.set(n, n, Complex64::new(1.0, 0.0));
        out
    }

    /// Largest entry of `|self* self − I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.adjoint().mul(self);
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p.get(i, j) - target).norm());
            }
        }
        worst
    }
}

/// A Hermitian matrix stored by its upper triangle, so `A = A*` holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    upper: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            n,
            upper: vec![Complex64::new(0.0, 0.0); n * (n + 1) / 2],
        }
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, Complex64::new(x, 0.0));
        }
        m
    }

    /// Reads the upper triangle of a dense matrix; the diagonal keeps only its real part.
    pub fn from_upper(m: &CMatrix) -> Self {
        let mut out = Self::zeros(m.n());
        for i in 0..m.n() {
            for j in i..m.n() {
                out.set(i, j, m.get(i, j));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < self.n);
        // Row i starts after the rows 0..i of lengths n, n-1, ...
        i * self.n - i * (i + 1) / 2 + j
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if i <= j {
            self.upper[self.slot(i, j)]
        } else {
            self.upper[self.slot(j, i)].conj()
        }
    }

    /// Sets entry `(i, j)` and implicitly `(j, i)`; diagonal entries keep their real part.
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let (i, j, v) = if i <= j { (i, j, v) } else { (j, i, v.conj()) };
        let v = if i == j { Complex64::new(v.re, 0.0) } else { v };
        let s = self.slot(i, j);
        self.upper[s] = v;
    }

    /// The leading `k × k` principal submatrix.
    pub fn leading(&self, k: usize) -> HermitianMatrix {
        let mut out = Self::zeros(k);
        for i in 0..k {
            for j in i..k {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    pub fn to_dense(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    /// `U A U*`.
    pub fn conjugated(&self, u: &CMatrix) -> HermitianMatrix {
        HermitianMatrix::from_upper(&u.mul(&self.to_dense()).mul(&u.adjoint()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.upper.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Serialize for HermitianMatrix {
    /// Rows of `[re, im]` pairs.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rows = s.serialize_seq(Some(self.n))?;
        for i in 0..self.n {
            let row: Vec<[f64; 2]> = (0..self.n)
                .map(|j| {
                    let z = self.get(i, j);
                    [z.re, z.im]
                })
                .collect();
            rows.serialize_element(&row)?;
        }
        rows.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_storage_is_hermitian() {
        let mut m = HermitianMatrix::zeros(4);
        let mut count = 0.0;
        for i in 0..4 {
            for j in i..4 {
                count += 1.0;
                m.set(
                    i,
                    j,
                    Complex64::new(count, if i == j { 5.0 } else { -count }),
                );
            }
        }
        for i in 0..4 {
            assert_eq!(m.get(i, i).im, 0.0);
            for j in 0..4 {
                assert_eq!(m.get(i, j), m.get(j, i).conj());
            }
        }
        let distinct: std::collections::BTreeSet<u64> =
            m.upper.iter().map(|z| z.re.to_bits()).collect();
        assert_eq!(distinct.len(), 10);
    }

    #[test]
    fn lower_writes_store_the_conjugate() {
        let mut m = HermitianMatrix::zeros(2);
        m.set(1, 0, Complex64::new(1.0, 2.0));
        assert_eq!(m.get(0, 1), Complex64::new(1.0, -2.0));
    }

    #[test]
    fn serializes_as_pairs() {
        let m = HermitianMatrix::from_real_diagonal(&[1.0, -1.0]);
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v[1][1], serde_json::json!([-1.0, 0.0]));
        assert_eq!(v[0][0], serde_json::json!([1.0, 0.0]));
        assert_eq!(v.as_array().unwrap().len(), 2);
    }
}
