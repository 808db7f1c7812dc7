//! The Gelfand-Cetlin polytope, the face correspondence Ψ and points of faces.
//!
//! Every cell of the staircase `i + j ≤ n + 1` is a variable; constant cells are pinned to
//! their λ value. Two cells sharing a grid edge that is missing from a face must be equal on
//! the corresponding polytope face. The polytope side never looks at positive paths, so
//! [`face_affine_dimension`] is an independent check of the graph dimension.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flag_core::{nonconstant_indices, Cell, IndexSet, LambdaSpec};
use crate::ladder::{Edge, EdgeSet, Face, LadderDiagram};
use crate::scalar::Scalar;
use crate::unionfind::UnionFind;

/// Default absolute tolerance for float points.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Short display name of a cell: `u12`, or `u[10][2]` when an index exceeds 9.
pub fn cell_name(c: Cell) -> String {
    if c.0 < 10 && c.1 < 10 {
        format!("u{}{}", c.0, c.1)
    } else {
        format!("u[{}][{}]", c.0, c.1)
    }
}

/// Parses `u12`, `u1_2` or `u[1][2]`.
pub fn parse_cell(s: &str) -> Option<Cell> {
    let rest = s.trim().strip_prefix('u')?;
    if let Some(inner) = rest.strip_prefix('[') {
        let (i, tail) = inner.split_once("][")?;
        let j = tail.strip_suffix(']')?;
        return Some((i.parse().ok()?, j.parse().ok()?));
    }
    if let Some((i, j)) = rest.split_once('_') {
        return Some((i.parse().ok()?, j.parse().ok()?));
    }
    let digits: Vec<char> = rest.chars().collect();
    if digits.len() == 2 && digits.iter().all(char::is_ascii_digit) {
        let d = |c: char| c.to_digit(10).unwrap() as usize;
        return Some((d(digits[0]), d(digits[1])));
    }
    None
}

fn cell_position(n: usize, (i, j): Cell) -> usize {
    let before: usize = (1..i).map(|ip| n + 1 - ip).sum();
    before + j - 1
}

/// A filling of every cell of the staircase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCPoint {
    n: usize,
    values: Vec<Scalar>,
}

impl GCPoint {
    /// Builds a point from a function on cells.
    pub fn from_fn(n: usize, mut f: impl FnMut(Cell) -> Scalar) -> Self {
        let values = (1..=n)
            .flat_map(|i| (1..=n + 1 - i).map(move |j| (i, j)))
            .map(&mut f)
            .collect();
        GCPoint { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: Cell) -> Scalar {
        self.values[cell_position(self.n, c)]
    }

    pub fn set(&mut self, c: Cell, v: Scalar) {
        let p = cell_position(self.n, c);
        self.values[p] = v;
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(Scalar::is_exact)
    }

    /// `(cell, value)` pairs ordered by `(i, j)`.
    pub fn entries(&self) -> Vec<(Cell, Scalar)> {
        let n = self.n;
        (1..=n)
            .flat_map(|i| (1..=n + 1 - i).map(move |j| (i, j)))
            .zip(self.values.iter().copied())
            .collect()
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &GCPoint) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max)
    }
}

impl Serialize for GCPoint {
    /// A JSON object keyed `"u[i][j]"`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for ((i, j), v) in self.entries() {
            map.serialize_entry(&format!("u[{i}][{j}]"), &v)?;
        }
        map.end()
    }
}

/// One linear inequality `coeffs · u ≤ rhs` over the nonconstant coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub rhs: Scalar,
    /// Human-readable form, e.g. `u12 >= u11` or `1 >= u12`.
    #[serde(skip)]
    pub text: String,
}

/// The polytope as an intersection of half-spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HRepresentation {
    /// Variable names in coefficient order.
    pub variables: Vec<String>,
    pub sense: &'static str,
    pub inequalities: Vec<Inequality>,
}

/// The min-max pattern `u[i][j+1] ≥ u[i][j] ≥ u[i+1][j]`, with constants moved to the
/// right-hand side and constant-only relations dropped.
pub fn gc_inequalities(spec: &LambdaSpec) -> HRepresentation {
    let idx = nonconstant_indices(spec);
    let vars = &idx.nonconstant;
    let var_pos = |c: Cell| vars.iter().position(|&v| v == c);
    let label = |c: Cell| match idx.constant_index(c) {
        Some(m) => spec.value(m).to_string(),
        None => cell_name(c),
    };
    let mut inequalities = Vec::new();
    for (big, small) in idx.pattern_relations() {
        let (pb, ps) = (var_pos(big), var_pos(small));
        if pb.is_none() && ps.is_none() {
            continue;
        }
        let mut coeffs = vec![0; vars.len()];
        let mut rhs = Scalar::zero();
        match pb {
            Some(p) => coeffs[p] -= 1,
            None => rhs = rhs + spec.value(idx.constant_index(big).unwrap()),
        }
        match ps {
            Some(p) => coeffs[p] += 1,
            None => rhs = rhs - spec.value(idx.constant_index(small).unwrap()),
        }
        inequalities.push(Inequality {
            coeffs,
            rhs,
            text: format!("{} >= {}", label(big), label(small)),
        });
    }
    HRepresentation {
        variables: vars
            .iter()
            .map(|&c| format!("u[{}][{}]", c.0, c.1))
            .collect(),
        sense: "coeffs . u <= rhs",
        inequalities,
    }
}

/// An equality between two adjacent cells, or a cell pinned to a value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Equality {
    Cells {
        a: Cell,
        b: Cell,
    },
    Pin {
        cell: Cell,
        value: Scalar,
        /// `m` when the value is `λ_m` of a constant cell.
        lambda_index: Option<usize>,
    },
}

impl fmt::Display for Equality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equality::Cells { a, b } => write!(f, "{}={}", cell_name(*a), cell_name(*b)),
            Equality::Pin { cell, value, .. } => write!(f, "{}={}", cell_name(*cell), value),
        }
    }
}

/// The equalities cutting out the polytope face of a ladder face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualitySet {
    pub face_id: Option<String>,
    pub items: Vec<Equality>,
}

impl fmt::Display for EqualitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.items.iter().map(Equality::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Staircase cell pairs `(c, c')` sharing a grid edge, with that edge.
fn interior_grid_edges(idx: &IndexSet) -> Vec<(Cell, Cell, Edge)> {
    let mut out = Vec::new();
    for &(i, j) in &idx.all {
        if idx.contains((i, j + 1)) {
            out.push(((i, j), (i, j + 1), Edge::top_of_box(i, j)));
        }
        if idx.contains((i + 1, j)) {
            out.push(((i, j), (i + 1, j), Edge::right_of_box(i, j)));
        }
    }
    out
}

/// Ψ: one equality for every interior grid edge of the staircase that is not in the face.
///
/// Edges outside the diagram separate two constant cells holding the same λ value and are
/// skipped.
pub fn psi(face: &Face) -> EqualitySet {
    let spec = face.diagram().spec();
    let idx = nonconstant_indices(spec);
    let mut items = Vec::new();
    for (c, d, edge) in interior_grid_edges(&idx) {
        if face.has_edge(edge) {
            continue;
        }
        match (idx.constant_index(c), idx.constant_index(d)) {
            (None, None) => items.push(Equality::Cells { a: c, b: d }),
            (Some(m), None) => items.push(Equality::Pin {
                cell: d,
                value: spec.value(m),
                lambda_index: Some(m),
            }),
            (None, Some(m)) => items.push(Equality::Pin {
                cell: c,
                value: spec.value(m),
                lambda_index: Some(m),
            }),
            (Some(_), Some(_)) => {}
        }
    }
    EqualitySet {
        face_id: Some(face.id()),
        items,
    }
}

/// Equivalence classes of cells under a set of equalities, ordered by the pattern.
#[derive(Clone, Debug)]
pub struct EqualityClasses {
    n: usize,
    /// Class of each cell, indexed by cell position.
    class_of: Vec<usize>,
    /// Pinned value, if any (given, from a constant cell, or forced by `lo = hi`).
    value: Vec<Option<Scalar>>,
    /// Largest pinned value below and smallest above, for unpinned classes.
    lo: Vec<Scalar>,
    hi: Vec<Scalar>,
    /// Class relations `(larger, smaller)` between distinct classes.
    relations: Vec<(usize, usize)>,
}

impl EqualityClasses {
    /// Merges cells, collapses order cycles and computes the value range of every class.
    ///
    /// Fails when two different values end up in one class or when the order relations
    /// leave no room for a class.
    pub fn new(spec: &LambdaSpec, items: &[Equality]) -> Result<Self> {
        let idx = nonconstant_indices(spec);
        let n = spec.n();
        let cells = idx.all.len();
        let pos = |c: Cell| -> Result<usize> {
            idx.position(c)
                .ok_or_else(|| Error::InvalidFace(format!("{} is not a cell", cell_name(c))))
        };
        let mut uf = UnionFind::new(cells);
        let mut pins: Vec<(usize, Scalar)> = idx
            .constant
            .iter()
            .map(|(&c, &m)| (idx.position(c).unwrap(), spec.value(m)))
            .collect();
        for item in items {
            match item {
                Equality::Cells { a, b } => {
                    uf.union(pos(*a)?, pos(*b)?);
                }
                Equality::Pin { cell, value, .. } => pins.push((pos(*cell)?, *value)),
            }
        }
        let cell_relations: Vec<(usize, usize)> = idx
            .pattern_relations()
            .into_iter()
            .map(|(b, s)| (idx.position(b).unwrap(), idx.position(s).unwrap()))
            .collect();

        loop {
            let (labels, count) = uf.labels();
            let mut value: Vec<Option<Scalar>> = vec![None; count];
            for &(p, v) in &pins {
                let c = labels[p];
                match value[c] {
                    Some(w) if w != v => {
                        return Err(Error::InvalidFace(format!(
                            "a class is pinned to both {w} and {v}"
                        )))
                    }
                    _ => value[c] = Some(v),
                }
            }
            let mut relations: Vec<(usize, usize)> = cell_relations
                .iter()
                .map(|&(b, s)| (labels[b], labels[s]))
                .filter(|(b, s)| b != s)
                .collect();
            relations.sort();
            relations.dedup();

            let comps = strongly_connected(count, &relations);
            let mut merged = false;
            for comp in comps.iter().filter(|c| c.len() > 1) {
                let first = labels.iter().position(|&l| l == comp[0]).unwrap();
                for &other in &comp[1..] {
                    let q = labels.iter().position(|&l| l == other).unwrap();
                    uf.union(first, q);
                }
                merged = true;
            }
            if merged {
                continue;
            }

            let order = topological_order(count, &relations);
            let mut lo: Vec<Option<Scalar>> = value.clone();
            for &c in &order {
                // `order` lists smaller classes first.
                if value[c].is_some() {
                    continue;
                }
                lo[c] = relations
                    .iter()
                    .filter(|(b, _)| *b == c)
                    .filter_map(|&(_, s)| lo[s])
                    .max();
            }
            let mut hi: Vec<Option<Scalar>> = value.clone();
            for &c in order.iter().rev() {
                if value[c].is_some() {
                    continue;
                }
                hi[c] = relations
                    .iter()
                    .filter(|(_, s)| *s == c)
                    .filter_map(|&(b, _)| hi[b])
                    .min();
            }
            for &(b, s) in &relations {
                if let (Some(vb), Some(vs)) = (value[b], value[s]) {
                    if vb < vs {
                        return Err(Error::InvalidFace(format!(
                            "pinned values {vb} < {vs} violate the pattern"
                        )));
                    }
                }
            }
            for c in 0..count {
                if value[c].is_some() {
                    continue;
                }
                let (l, h) = match (lo[c], hi[c]) {
                    (Some(l), Some(h)) => (l, h),
                    _ => return Err(Error::InvalidFace("an unbounded class".into())),
                };
                if l > h {
                    return Err(Error::InvalidFace(format!(
                        "no room for a class between {l} and {h}"
                    )));
                }
                if l == h {
                    value[c] = Some(l);
                }
            }
            let lo = lo.into_iter().map(|v| v.unwrap()).collect();
            let hi = hi.into_iter().map(|v| v.unwrap()).collect();
            return Ok(EqualityClasses {
                n,
                class_of: labels,
                value,
                lo,
                hi,
                relations,
            });
        }
    }

    pub fn class_count(&self) -> usize {
        self.value.len()
    }

    /// Classes that are not pinned; their number is the dimension of the solution set.
    pub fn free_classes(&self) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&c| self.value[c].is_none())
            .collect()
    }

    fn point_from_class_values(&self, vals: &[Scalar]) -> GCPoint {
        let mut p = 0;
        GCPoint::from_fn(self.n, |_| {
            let v = vals[self.class_of[p]];
            p += 1;
            v
        })
    }

    fn strictly_separated(&self, vals: &[Scalar]) -> bool {
        self.relations.iter().all(|&(b, s)| {
            (self.value[b].is_some() && self.value[s].is_some()) || vals[b] > vals[s]
        })
    }

    /// Classes reachable from `start` along `(from, to)` pairs, including `start`.
    fn reachable(&self, start: usize, upward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.class_count()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(c) = stack.pop() {
            for &(b, s) in &self.relations {
                let (from, to) = if upward { (s, b) } else { (b, s) };
                if from == c && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }

    /// A point where every class takes one value and every relation between distinct
    /// classes is strict unless both classes are pinned.
    ///
    /// Free classes sit at the midpoint of their range when that already separates
    /// everything. Otherwise the point is the average of two extreme points per free class
    /// `X`: one pushing the up-set of `X` to its upper bounds and one pushing the down-set
    /// of `X` to its lower bounds. Each relation is strict at one of them.
    pub fn relative_interior_point(&self) -> GCPoint {
        let count = self.class_count();
        let mid: Vec<Scalar> = (0..count)
            .map(|c| self.value[c].unwrap_or_else(|| self.lo[c].midpoint(&self.hi[c])))
            .collect();
        if self.strictly_separated(&mid) {
            return self.point_from_class_values(&mid);
        }
        let free = self.free_classes();
        let mut sum: Vec<Scalar> = (0..count)
            .map(|c| {
                self.value[c].map_or(Scalar::zero(), |v| v * Scalar::int(2 * free.len() as i64))
            })
            .collect();
        for &x in &free {
            let up = self.reachable(x, true);
            let down = self.reachable(x, false);
            for &y in &free {
                let a = if up[y] { self.hi[y] } else { self.lo[y] };
                let b = if down[y] { self.lo[y] } else { self.hi[y] };
                sum[y] = sum[y] + a + b;
            }
        }
        let denom = Scalar::int(2 * free.len() as i64);
        let vals: Vec<Scalar> = sum.into_iter().map(|s| s / denom).collect();
        debug_assert!(self.strictly_separated(&vals));
        self.point_from_class_values(&vals)
    }
}

/// Strongly connected components of a small directed graph (Kosaraju).
fn strongly_connected(count: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut fwd = vec![Vec::new(); count];
    let mut bwd = vec![Vec::new(); count];
    for &(a, b) in edges {
        fwd[a].push(b);
        bwd[b].push(a);
    }
    let mut visited = vec![false; count];
    let mut finish = Vec::with_capacity(count);
    for s in 0..count {
        if visited[s] {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        visited[s] = true;
        while let Some((v, i)) = stack.pop() {
            if i < fwd[v].len() {
                stack.push((v, i + 1));
                let w = fwd[v][i];
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish.push(v);
            }
        }
    }
    let mut comp = vec![usize::MAX; count];
    let mut out = Vec::new();
    for &s in finish.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &bwd[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort();
        out.push(members);
    }
    out
}

/// Classes ordered so that the smaller side of every relation comes first.
fn topological_order(count: usize, relations: &[(usize, usize)]) -> Vec<usize> {
    let mut indeg = vec![0; count];
    for &(b, _) in relations {
        indeg[b] += 1;
    }
    let mut ready: Vec<usize> = (0..count).filter(|&c| indeg[c] == 0).collect();
    let mut out = Vec::with_capacity(count);
    while let Some(c) = ready.pop() {
        out.push(c);
        for &(b, s) in relations {
            if s == c {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    out
}

/// Dimension of the set of pattern points satisfying the equalities: the number of classes
/// left free after merging, collapsing order cycles and fixing classes with no room.
pub fn face_affine_dimension(eqset: &EqualitySet, spec: &LambdaSpec) -> Result<usize> {
    Ok(EqualityClasses::new(spec, &eqset.items)?
        .free_classes()
        .len())
}

/// A point in the relative interior of the polytope face of `face`.
pub fn interior_point(face: &Face) -> Result<GCPoint> {
    let spec = face.diagram().spec();
    Ok(EqualityClasses::new(spec, &psi(face).items)?.relative_interior_point())
}

/// A point in the relative interior of the set cut out by arbitrary equalities.
pub fn point_from_equalities(spec: &LambdaSpec, items: &[Equality]) -> Result<GCPoint> {
    Ok(EqualityClasses::new(spec, items)?.relative_interior_point())
}

/// Smallest value of `u[big] − u[small]` over the pattern relations, and of `−|u − λ|` over
/// the constant cells.
pub fn min_slack(point: &GCPoint, spec: &LambdaSpec) -> f64 {
    let idx = nonconstant_indices(spec);
    let rel = idx
        .pattern_relations()
        .into_iter()
        .map(|(b, s)| (point.get(b) - point.get(s)).to_f64());
    let pins = idx
        .constant
        .iter()
        .map(|(&c, &m)| -(point.get(c) - spec.value(m)).abs().to_f64());
    rel.chain(pins).fold(f64::INFINITY, f64::min)
}

/// Membership in the polytope: exact when point and λ are exact, else within `tol`.
pub fn contains(point: &GCPoint, spec: &LambdaSpec, tol: f64) -> bool {
    if point.n() != spec.n() {
        return false;
    }
    if point.is_exact() && spec.is_exact() {
        let idx = nonconstant_indices(spec);
        return idx
            .pattern_relations()
            .into_iter()
            .all(|(b, s)| point.get(b) >= point.get(s))
            && idx
                .constant
                .iter()
                .all(|(&c, &m)| point.get(c) == spec.value(m));
    }
    min_slack(point, spec) >= -tol
}

/// The face whose relative interior contains the point: every diagram edge separating two
/// equal cells is dropped, then edges off every positive path are pruned.
pub fn locate_face(point: &GCPoint, diagram: &Arc<LadderDiagram>, tol: f64) -> Result<Face> {
    let spec = diagram.spec();
    if !contains(point, spec, tol) {
        return Err(Error::Domain(
            "point lies outside the Gelfand-Cetlin polytope".into(),
        ));
    }
    let exact = point.is_exact() && spec.is_exact();
    let idx = nonconstant_indices(spec);
    let mut keep = diagram.all_edges();
    for (c, d, edge) in interior_grid_edges(&idx) {
        let Some(e) = diagram.edge_id(edge) else {
            continue;
        };
        let (u, v) = (point.get(c), point.get(d));
        let tight = if exact {
            u == v
        } else {
            (u.to_f64() - v.to_f64()).abs() <= tol
        };
        if tight {
            keep.remove(e);
        }
    }
    let pruned = prune_to_paths(diagram, keep);
    // Only axis edges may be pruned; losing an interior edge means the point is inconsistent.
    let lost: EdgeSet = keep.difference(&pruned);
    if lost.iter().any(|e| !is_axis(diagram.edge(e))) {
        return Err(Error::InvalidFace(
            "the tight set of the point does not come from a face".into(),
        ));
    }
    Face::from_edge_set(diagram, pruned)
}

fn is_axis(e: Edge) -> bool {
    (e.from.0 == 0 && e.to.0 == 0) || (e.from.1 == 0 && e.to.1 == 0)
}

/// Largest union of positive paths inside an edge set.
fn prune_to_paths(diagram: &LadderDiagram, edges: EdgeSet) -> EdgeSet {
    let side = diagram.n() + 1;
    let at = |p: (usize, usize)| p.0 * side + p.1;
    let mut forward = vec![false; side * side];
    forward[0] = true;
    let succ = |p: (usize, usize)| {
        [(p.0 + 1, p.1), (p.0, p.1 + 1)]
            .into_iter()
            .filter_map(move |q| diagram.edge_id(Edge::new(p, q)).map(|e| (q, e)))
    };
    for &p in diagram.vertices() {
        if forward[at(p)] {
            for (q, e) in succ(p) {
                if edges.contains(e) {
                    forward[at(q)] = true;
                }
            }
        }
    }
    let mut backward = vec![false; side * side];
    for &t in diagram.top_vertices() {
        backward[at(t)] = true;
    }
    for &p in diagram.vertices().iter().rev() {
        for (q, e) in succ(p) {
            if edges.contains(e) && backward[at(q)] {
                backward[at(p)] = true;
            }
        }
    }
    edges
        .iter()
        .filter(|&e| {
            let edge = diagram.edge(e);
            forward[at(edge.from)] && backward[at(edge.to)]
        })
        .collect()
}

/// Parses a comma-separated list of equalities such as `u11=u12,u31=4` or `u11=u12=u21`.
pub fn parse_equalities(text: &str) -> Result<Vec<Equality>> {
    enum Term {
        Cell(Cell),
        Value(Scalar),
    }
    let parse_term = |t: &str| -> Result<Term> {
        let t = t.trim();
        if t.starts_with('u') {
            parse_cell(t)
                .map(Term::Cell)
                .ok_or_else(|| Error::InvalidFace(format!("cannot parse cell {t:?}")))
        } else {
            t.parse::<Scalar>()
                .map(Term::Value)
                .map_err(|_| Error::InvalidFace(format!("cannot parse term {t:?}")))
        }
    };
    let mut out = Vec::new();
    for clause in text.split(',').filter(|c| !c.trim().is_empty()) {
        let terms = clause
            .split('=')
            .map(parse_term)
            .collect::<Result<Vec<_>>>()?;
        if terms.len() < 2 {
            return Err(Error::InvalidFace(format!("{clause:?} is not an equality")));
        }
        for pair in terms.windows(2) {
            match (&pair[0], &pair[1]) {
                (Term::Cell(a), Term::Cell(b)) => out.push(Equality::Cells { a: *a, b: *b }),
                (Term::Cell(c), Term::Value(v)) | (Term::Value(v), Term::Cell(c)) => {
                    out.push(Equality::Pin {
                        cell: *c,
                        value: *v,
                        lambda_index: None,
                    })
                }
                (Term::Value(a), Term::Value(b)) if a == b => {}
                (Term::Value(a), Term::Value(b)) => {
                    return Err(Error::InvalidFace(format!("{a} = {b} is false")))
                }
            }
        }
    }
    Ok(out)
}

/// The face whose relative interior is cut out by the given equalities.
pub fn face_from_equalities(diagram: &Arc<LadderDiagram>, text: &str) -> Result<Face> {
    let items = parse_equalities(text)?;
    let point = point_from_equalities(diagram.spec(), &items)?;
    locate_face(&point, diagram, DEFAULT_TOL)
}
