//! The spectrum λ, its block structure and the index set of the Gelfand-Cetlin pattern.
//!
//! Cells are pairs `(i, j)` with `i, j ≥ 1` and `i + j ≤ n + 1`. The value `u[i][j]` of a
//! pattern is the `i`-th largest eigenvalue of the leading principal submatrix of size
//! `i + j - 1`, so the anti-diagonal `i + j = n + 1` carries λ itself.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A cell `(i, j)` of the triangular index set.
pub type Cell = (usize, usize);

/// A non-increasing spectrum together with its multiplicity structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LambdaJson")]
pub struct LambdaSpec {
    values: Vec<Scalar>,
    n: usize,
    breakpoints: Vec<usize>,
    multiplicities: Vec<usize>,
}

#[derive(Deserialize)]
struct LambdaJson {
    values: Vec<Scalar>,
}

impl TryFrom<LambdaJson> for LambdaSpec {
    type Error = Error;
    fn try_from(raw: LambdaJson) -> Result<Self> {
        parse_lambda(&raw.values)
    }
}

impl LambdaSpec {
    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strict-drop positions `n_1 < … < n_r`.
    pub fn breakpoints(&self) -> &[usize] {
        &self.breakpoints
    }

    /// Block sizes `k_1, …, k_{r+1}`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of strict drops.
    pub fn r(&self) -> usize {
        self.breakpoints.len()
    }

    /// `λ_m`, 1-based.
    pub fn value(&self, m: usize) -> Scalar {
        self.values[m - 1]
    }

    /// `n_0 = 0, n_1, …, n_r, n_{r+1} = n`.
    pub fn extended_breakpoints(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.breakpoints.len() + 2);
        out.push(0);
        out.extend_from_slice(&self.breakpoints);
        out.push(self.n);
        out
    }

    /// True when every entry is an exact rational.
    pub fn is_exact(&self) -> bool {
        self.values.iter().all(Scalar::is_exact)
    }

    /// Largest absolute entry, at least 1; used to scale tolerances.
    pub fn scale(&self) -> f64 {
        self.values
            .iter()
            .map(|v| v.to_f64().abs())
            .fold(1.0, f64::max)
    }

    /// Spectrum with unit gaps between consecutive blocks of the given sizes,
    /// e.g. `[2, 1, 2]` gives `(2, 2, 1, 0, 0)`.
    pub fn unit_gap(multiplicities: &[usize]) -> Result<Self> {
        let blocks = multiplicities.len() as i64;
        let values: Vec<Scalar> = multiplicities
            .iter()
            .enumerate()
            .flat_map(|(p, &k)| std::iter::repeat_n(Scalar::int(blocks - 1 - p as i64), k))
            .collect();
        parse_lambda(&values)
    }

    /// Convenience constructor from integers.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        parse_lambda(&values.iter().map(|&v| Scalar::int(v)).collect::<Vec<_>>())
    }
}

impl std::str::FromStr for LambdaSpec {
    type Err = Error;

    /// Parses a comma-separated list such as `3,2,1,0` or `7/2,7/2,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Scalar>>>()?;
        parse_lambda(&values)
    }
}

/// Validates a non-increasing list and extracts its blocks.
pub fn parse_lambda(values: &[Scalar]) -> Result<LambdaSpec> {
    if values.is_empty() {
        return Err(Error::InvalidLambda("empty spectrum".into()));
    }
    let n = values.len();
    let mut breakpoints = Vec::new();
    for i in 1..n {
        match values[i - 1].cmp(&values[i]) {
            std::cmp::Ordering::Less => {
                return Err(Error::InvalidLambda(format!(
                    "entries must be non-increasing, but λ_{} = {} < λ_{} = {}",
                    i,
                    values[i - 1],
                    i + 1,
                    values[i]
                )))
            }
            std::cmp::Ordering::Greater => breakpoints.push(i),
            std::cmp::Ordering::Equal => {}
        }
    }
    let mut multiplicities = Vec::with_capacity(breakpoints.len() + 1);
    let mut prev = 0;
    for &b in breakpoints.iter().chain(std::iter::once(&n)) {
        multiplicities.push(b - prev);
        prev = b;
    }
    Ok(LambdaSpec {
        values: values.to_vec(),
        n,
        breakpoints,
        multiplicities,
    })
}

/// Complex dimension `(n² − Σ k_i²) / 2` of the orbit.
pub fn complex_dimension(spec: &LambdaSpec) -> usize {
    let sq: usize = spec.multiplicities.iter().map(|k| k * k).sum();
    (spec.n * spec.n - sq) / 2
}

/// All cells of the pattern with the constant ones marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    pub n: usize,
    /// Every cell with `i + j ≤ n + 1`, ordered by `(i, j)`.
    pub all: Vec<Cell>,
    /// Cells whose coordinate function is not constant, ordered by `(i, j)`.
    pub nonconstant: Vec<Cell>,
    /// Constant cells mapped to the 1-based index `m` with `u[i][j] ≡ λ_m`.
    pub constant: BTreeMap<Cell, usize>,
}

impl IndexSet {
    pub fn contains(&self, cell: Cell) -> bool {
        cell.0 >= 1 && cell.1 >= 1 && cell.0 + cell.1 <= self.n + 1
    }

    pub fn constant_index(&self, cell: Cell) -> Option<usize> {
        self.constant.get(&cell).copied()
    }

    pub fn is_nonconstant(&self, cell: Cell) -> bool {
        self.contains(cell) && !self.constant.contains_key(&cell)
    }

    /// Position of a cell in `all`.
    pub fn position(&self, cell: Cell) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        // Cells with first coordinate i' < i number Σ_{i'<i} (n + 1 − i').
        let (i, j) = cell;
        let before: usize = (1..i).map(|ip| self.n + 1 - ip).sum();
        Some(before + j - 1)
    }

    /// Adjacent pairs `(larger, smaller)` of the min-max pattern:
    /// `u[i][j+1] ≥ u[i][j]` and `u[i][j] ≥ u[i+1][j]`.
    pub fn pattern_relations(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for &(i, j) in &self.all {
            if self.contains((i, j + 1)) {
                out.push(((i, j + 1), (i, j)));
            }
            if self.contains((i + 1, j)) {
                out.push(((i, j), (i + 1, j)));
            }
        }
        out
    }
}

/// Splits the cells into constant and nonconstant ones.
///
/// Within block `p` (positions `n_{p−1}+1 ..= n_p`) the cells `(j, n+1−k)` with
/// `j ≤ k ≤ n_p` are forced to equal `λ_{n_p}`; this includes the anti-diagonal.
pub fn nonconstant_indices(spec: &LambdaSpec) -> IndexSet {
    let n = spec.n;
    let ext = spec.extended_breakpoints();
    let mut constant = BTreeMap::new();
    for p in 1..ext.len() {
        let (lo, hi) = (ext[p - 1], ext[p]);
        for j in lo + 1..=hi {
            for k in j..=hi {
                constant.insert((j, n + 1 - k), hi);
            }
        }
    }
    let all: Vec<Cell> = (1..=n)
        .flat_map(|i| (1..=n + 1 - i).map(move |j| (i, j)))
        .collect();
    let nonconstant = all
        .iter()
        .copied()
        .filter(|c| !constant.contains_key(c))
        .collect();
    IndexSet {
        n,
        all,
        nonconstant,
        constant,
    }
}

/// The spectrum with blocks `n − n_{i−1} − n_i` (multiplicity `k_i`), shifted by `m`.
pub fn monotone_lambda(breakpoints: &[usize], n: usize, m: Scalar) -> Result<LambdaSpec> {
    if n == 0 {
        return Err(Error::InvalidLambda("n must be positive".into()));
    }
    if breakpoints.windows(2).any(|w| w[0] >= w[1]) || breakpoints.iter().any(|&b| b == 0 || b >= n)
    {
        return Err(Error::InvalidLambda(format!(
            "breakpoints {breakpoints:?} must be strictly increasing inside 1..{n}"
        )));
    }
    let mut ext = vec![0];
    ext.extend_from_slice(breakpoints);
    ext.push(n);
    let mut values = Vec::with_capacity(n);
    for p in 1..ext.len() {
        let block = n as i64 - ext[p - 1] as i64 - ext[p] as i64;
        for _ in ext[p - 1]..ext[p] {
            values.push(Scalar::int(block) + m);
        }
    }
    parse_lambda(&values)
}

/// All compositions of `n` (ordered tuples of positive integers summing to `n`).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
