//! Ladder diagrams, positive paths and faces.
//!
//! Lattice points are `(a, b)` with `a` horizontal and `b` vertical. The unit box with
//! top-right corner `(a, b)` is called box `(a, b)`; it corresponds to the pattern cell
//! `u[a][b]`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::flag_core::LambdaSpec;
use crate::unionfind::UnionFind;

/// A lattice point `(a, b)`.
pub type Point = (usize, usize);

/// Environment variable overriding the exhaustive enumeration bound.
pub const MAX_BOXES_ENV: &str = "GC_FIBERS_MAX_BOXES";

/// Default bound on the number of boxes for exhaustive face enumeration.
pub const DEFAULT_MAX_BOXES: usize = 12;

/// A unit segment of the integer grid, stored with `from < to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: Point,
    pub to: Point,
}

impl Edge {
    /// Builds the segment between two points at distance one, in either order.
    pub fn new(p: Point, q: Point) -> Self {
        debug_assert_eq!(p.0.abs_diff(q.0) + p.1.abs_diff(q.1), 1);
        if p < q {
            Edge { from: p, to: q }
        } else {
            Edge { from: q, to: p }
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.from.1 == self.to.1
    }

    /// `[x0, y0, x1, y1]`.
    pub fn coords(&self) -> [usize; 4] {
        [self.from.0, self.from.1, self.to.0, self.to.1]
    }

    /// Edge shared by box `(a, b)` and the box above it.
    pub fn top_of_box(a: usize, b: usize) -> Self {
        Edge::new((a - 1, b), (a, b))
    }

    /// Edge shared by box `(a, b)` and the box to its right.
    pub fn right_of_box(a: usize, b: usize) -> Self {
        Edge::new((a, b - 1), (a, b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})-({},{})",
            self.from.0, self.from.1, self.to.0, self.to.1
        )
    }
}

/// Number of edges an [`EdgeSet`] can address.
pub const MAX_EDGES: usize = 256;

/// A set of diagram edge indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSet([u64; 4]);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, …, len-1}`.
    pub fn full(len: usize) -> Self {
        let mut s = Self::new();
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a |= b;
        }
        EdgeSet(w)
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a &= !b;
        }
        EdgeSet(w)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// The ladder diagram of a spectrum: a staircase-shaped induced subgraph of the grid.
#[derive(Clone, Debug)]
pub struct LadderDiagram {
    spec: LambdaSpec,
    vertices: Vec<Point>,
    vertex_grid: Vec<bool>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    top_vertices: Vec<Point>,
    region_boxes: Vec<Point>,
}

/// Builds the diagram as the union of rectangles `[n_j, n_{j+1}] × [0, n − n_{j+1}]`.
///
/// When λ has at least one strict drop, the last rectangle `[n_r, n] × {0}` is a bare
/// horizontal segment with no box above it; it is left out, so the top vertices are
/// exactly the outer corners `(n_j, n − n_j)`. A constant λ keeps the single row
/// `[0, n] × {0}`.
pub fn build_ladder(spec: &LambdaSpec) -> Result<Arc<LadderDiagram>> {
    let n = spec.n();
    let ext = spec.extended_breakpoints();
    let rects = if spec.r() == 0 { 1 } else { ext.len() - 2 };
    let side = n + 1;
    let mut vertex_grid = vec![false; side * side];
    for j in 0..rects {
        for a in ext[j]..=ext[j + 1] {
            for b in 0..=n - ext[j + 1] {
                vertex_grid[a * side + b] = true;
            }
        }
    }
    let has = |a: usize, b: usize| a <= n && b <= n && vertex_grid[a * side + b];
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            if !has(a, b) {
                continue;
            }
            vertices.push((a, b));
            if has(a, b + 1) {
                edges.push(Edge::new((a, b), (a, b + 1)));
            }
            if has(a + 1, b) {
                edges.push(Edge::new((a, b), (a + 1, b)));
            }
        }
    }
    edges.sort();
    if edges.len() > MAX_EDGES {
        return Err(Error::Domain(format!(
            "diagram has {} edges, at most {MAX_EDGES} are supported",
            edges.len()
        )));
    }
    let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let top_vertices = vertices
        .iter()
        .copied()
        .filter(|&(a, b)| a + b == n)
        .collect();
    let mut region_boxes = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if has(a, b) && has(a - 1, b) && has(a, b - 1) && has(a - 1, b - 1) {
                region_boxes.push((a, b));
            }
        }
    }
    Ok(Arc::new(LadderDiagram {
        spec: spec.clone(),
        vertices,
        vertex_grid,
        edges,
        edge_index,
        top_vertices,
        region_boxes,
    }))
}

impl LadderDiagram {
    pub fn spec(&self) -> &LambdaSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn origin(&self) -> Point {
        (0, 0)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn top_vertices(&self) -> &[Point] {
        &self.top_vertices
    }

    /// Boxes enclosed by the diagram, ordered by `(a, b)`.
    pub fn region_boxes(&self) -> &[Point] {
        &self.region_boxes
    }

    pub fn has_vertex(&self, p: Point) -> bool {
        let side = self.n() + 1;
        p.0 < side && p.1 < side && self.vertex_grid[p.0 * side + p.1]
    }

    pub fn has_box(&self, b: Point) -> bool {
        b.0 >= 1
            && b.1 >= 1
            && self.has_vertex(b)
            && self.has_vertex((b.0 - 1, b.1))
            && self.has_vertex((b.0, b.1 - 1))
            && self.has_vertex((b.0 - 1, b.1 - 1))
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edge_index.get(&e).copied()
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Edges leaving `p` upward or rightward.
    fn successors(&self, p: Point) -> impl Iterator<Item = (Point, usize)> + '_ {
        [(p.0 + 1, p.1), (p.0, p.1 + 1)]
            .into_iter()
            .filter_map(move |q| self.edge_id(Edge::new(p, q)).map(|e| (q, e)))
    }
}

/// A monotone path from the origin to a top vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivePath {
    pub vertices: Vec<Point>,
    pub edges: EdgeSet,
}

/// Every up/right lattice path inside the diagram from the origin to a top vertex.
pub fn positive_paths(diagram: &LadderDiagram) -> Vec<PositivePath> {
    fn walk(
        d: &LadderDiagram,
        stack: &mut Vec<Point>,
        edges: EdgeSet,
        out: &mut Vec<PositivePath>,
    ) {
        let p = *stack.last().unwrap();
        if p.0 + p.1 == d.n() {
            out.push(PositivePath {
                vertices: stack.clone(),
                edges,
            });
            return;
        }
        let next: Vec<(Point, usize)> = d.successors(p).collect();
        for (q, e) in next {
            let mut with = edges;
            with.insert(e);
            stack.push(q);
            walk(d, stack, with, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    walk(diagram, &mut vec![(0, 0)], EdgeSet::new(), &mut out);
    out
}

/// A face of the ladder diagram: a union of positive paths containing every top vertex.
#[derive(Clone)]
pub struct Face {
    diagram: Arc<LadderDiagram>,
    edges: EdgeSet,
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Face")
            .field("id", &self.id())
            .field("dim", &self.dim())
            .field(
                "edges",
                &self.edges().iter().map(Edge::to_string).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.diagram.spec() == other.diagram.spec()
    }
}

impl Eq for Face {}

impl Face {
    /// Validates an edge set against the face predicate.
    pub fn from_edge_set(diagram: &Arc<LadderDiagram>, edges: EdgeSet) -> Result<Face> {
        if !is_face(diagram, edges) {
            return Err(Error::InvalidFace(
                "edge set is not a union of positive paths covering every top vertex".into(),
            ));
        }
        Ok(Face {
            diagram: Arc::clone(diagram),
            edges,
        })
    }

    /// Validates a list of grid edges against the face predicate.
    pub fn from_edges(diagram: &Arc<LadderDiagram>, edges: &[Edge]) -> Result<Face> {
        let mut set = EdgeSet::new();
        for &e in edges {
            let id = diagram
                .edge_id(e)
                .ok_or_else(|| Error::InvalidFace(format!("{e} is not an edge of the diagram")))?;
            set.insert(id);
        }
        Face::from_edge_set(diagram, set)
    }

    /// The whole diagram.
    pub fn improper(diagram: &Arc<LadderDiagram>) -> Face {
        Face {
            diagram: Arc::clone(diagram),
            edges: diagram.all_edges(),
        }
    }

    pub fn diagram(&self) -> &Arc<LadderDiagram> {
        &self.diagram
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges
    }

    /// Edges in canonical (sorted) order.
    pub fn edges(&self) -> Vec<Edge> {
        self.edges.iter().map(|i| self.diagram.edge(i)).collect()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.diagram
            .edge_id(e)
            .is_some_and(|i| self.edges.contains(i))
    }

    /// Endpoints of the face edges, sorted.
    pub fn vertices(&self) -> Vec<Point> {
        let mut v: Vec<Point> = self.edges().iter().flat_map(|e| [e.from, e.to]).collect();
        v.sort();
        v.dedup();
        v
    }

    /// First Betti number `|E| − |V| + 1`.
    pub fn dim(&self) -> usize {
        (self.edges.len() + 1)
            .checked_sub(self.vertices().len())
            .expect("faces are connected")
    }

    pub fn is_improper(&self) -> bool {
        self.edges == self.diagram.all_edges()
    }

    /// Stable content hash of λ's block structure and the sorted edge list.
    pub fn id(&self) -> String {
        let spec = self.diagram.spec();
        let mut text = format!("n={};breaks={:?};", spec.n(), spec.breakpoints());
        for e in self.edges() {
            let [x0, y0, x1, y1] = e.coords();
            text.push_str(&format!("{x0},{y0},{x1},{y1};"));
        }
        let digest = Sha256::digest(text.as_bytes());
        hex::encode(&digest[..6])
    }

    /// The smallest face containing both.
    pub fn union(&self, other: &Face) -> Face {
        Face {
            diagram: Arc::clone(&self.diagram),
            edges: self.edges.union(&other.edges),
        }
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.edges.is_subset(&other.edges)
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.dim(), self.edges.iter().collect())
    }
}

/// Face predicate: covers all top vertices and every edge lies on a positive path inside
/// the set.
pub fn is_face(diagram: &LadderDiagram, edges: EdgeSet) -> bool {
    let side = diagram.n() + 1;
    let idx = |p: Point| p.0 * side + p.1;
    let mut incident = vec![false; side * side];
    for i in edges.iter() {
        let e = diagram.edge(i);
        incident[idx(e.from)] = true;
        incident[idx(e.to)] = true;
    }
    if diagram.top_vertices().iter().any(|&t| !incident[idx(t)]) {
        return false;
    }
    // Vertices sorted lexicographically are a topological order for up/right moves.
    let mut forward = vec![false; side * side];
    forward[0] = true;
    for &p in diagram.vertices() {
        if !forward[idx(p)] {
            continue;
        }
        for (q, e) in diagram.successors(p) {
            if edges.contains(e) {
                forward[idx(q)] = true;
            }
        }
    }
    let mut backward = vec![false; side * side];
    for &t in diagram.top_vertices() {
        backward[idx(t)] = true;
    }
    for &p in diagram.vertices().iter().rev() {
        for (q, e) in diagram.successors(p) {
            if edges.contains(e) && backward[idx(q)] {
                backward[idx(p)] = true;
            }
        }
    }
    edges.iter().all(|i| {
        let e = diagram.edge(i);
        forward[idx(e.from)] && backward[idx(e.to)]
    })
}

/// The enumeration bound: `GC_FIBERS_MAX_BOXES` if set to an integer, else the default.
pub fn max_boxes_from_env() -> usize {
    std::env::var(MAX_BOXES_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_BOXES)
}

/// All faces, sorted by dimension and then by edge list, using the environment bound.
pub fn enumerate_faces(diagram: &Arc<LadderDiagram>) -> Result<Vec<Face>> {
    enumerate_faces_with_limit(diagram, max_boxes_from_env())
}

/// All faces, refusing diagrams with more than `max_boxes` boxes.
///
/// Closes the set of positive paths under pairwise union, then keeps the unions that
/// reach every top vertex.
pub fn enumerate_faces_with_limit(
    diagram: &Arc<LadderDiagram>,
    max_boxes: usize,
) -> Result<Vec<Face>> {
    let boxes = diagram.region_boxes().len();
    if boxes > max_boxes {
        return Err(Error::SizeGuard {
            boxes,
            max: max_boxes,
        });
    }
    let mut seen: HashSet<EdgeSet> = HashSet::new();
    let mut closure: Vec<EdgeSet> = Vec::new();
    for path in positive_paths(diagram) {
        let p = path.edges;
        let fresh: Vec<EdgeSet> = closure
            .par_iter()
            .map(|c| c.union(&p))
            .filter(|u| !seen.contains(u))
            .collect();
        for u in std::iter::once(p).chain(fresh) {
            if seen.insert(u) {
                closure.push(u);
            }
        }
    }
    let side = diagram.n() + 1;
    let tops: Vec<Point> = diagram.top_vertices().to_vec();
    let mut faces: Vec<Face> = closure
        .into_iter()
        .filter(|set| {
            let mut hit = vec![false; side * side];
            for i in set.iter() {
                let e = diagram.edge(i);
                hit[e.from.0 * side + e.from.1] = true;
                hit[e.to.0 * side + e.to.1] = true;
            }
            tops.iter().all(|t| hit[t.0 * side + t.1])
        })
        .map(|edges| Face {
            diagram: Arc::clone(diagram),
            edges,
        })
        .collect();
    faces.sort_by_cached_key(Face::sort_key);
    Ok(faces)
}

/// Alias of [`Face::dim`].
pub fn face_dimension(face: &Face) -> usize {
    face.dim()
}

/// A bounded region of the complement of a face, with its top-right box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalCycle {
    /// Boxes enclosed by the cycle, sorted.
    pub boxes: Vec<Point>,
    /// Top-right corner of the region: the corner of its box maximizing `(a + b, a)`.
    pub v_sigma: Point,
}

/// The bounded regions cut out by the face edges, one per independent cycle.
pub fn minimal_cycles(face: &Face) -> Vec<MinimalCycle> {
    let n = face.diagram.n();
    let cell = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let exterior = n * n;
    let mut uf = UnionFind::new(n * n + 1);
    for a in 1..=n {
        for b in 1..=n {
            let right = if a == n { exterior } else { cell(a + 1, b) };
            if !face.has_edge(Edge::right_of_box(a, b)) {
                uf.union(cell(a, b), right);
            }
            let up = if b == n { exterior } else { cell(a, b + 1) };
            if !face.has_edge(Edge::top_of_box(a, b)) {
                uf.union(cell(a, b), up);
            }
            if a == 1 && !face.has_edge(Edge::new((0, b - 1), (0, b))) {
                uf.union(cell(a, b), exterior);
            }
            if b == 1 && !face.has_edge(Edge::new((a - 1, 0), (a, 0))) {
                uf.union(cell(a, b), exterior);
            }
        }
    }
    let outside = uf.find(exterior);
    let mut regions: HashMap<usize, Vec<Point>> = HashMap::new();
    for a in 1..=n {
        for b in 1..=n {
            let r = uf.find(cell(a, b));
            if r != outside {
                regions.entry(r).or_default().push((a, b));
            }
        }
    }
    let mut out: Vec<MinimalCycle> = regions
        .into_values()
        .map(|mut boxes| {
            boxes.sort();
            let v_sigma = *boxes
                .iter()
                .max_by_key(|&&(a, b)| (a + b, a))
                .expect("regions are non-empty");
            MinimalCycle { boxes, v_sigma }
        })
        .collect();
    out.sort_by_key(|c| c.v_sigma);
    out
}

/// Containment order on a list of faces.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    index: HashMap<EdgeSet, usize>,
}

/// Wraps a face list (normally the output of [`enumerate_faces`]) with order queries.
pub fn face_lattice(faces: Vec<Face>) -> FaceLattice {
    let index = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.edge_set(), i))
        .collect();
    FaceLattice { faces, index }
}

impl FaceLattice {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// `faces[i] ⊆ faces[j]` as edge sets.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.faces[i].is_subface_of(&self.faces[j])
    }

    /// Index of the union of two faces, if it is in the list.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let u = self.faces[i].edge_set().union(&self.faces[j].edge_set());
        self.index.get(&u).copied()
    }

    pub fn position(&self, face: &Face) -> Option<usize> {
        self.index.get(&face.edge_set()).copied()
    }

    /// Number of faces of each dimension `0..=max`.
    pub fn f_vector(&self) -> Vec<usize> {
        let max = self.faces.iter().map(Face::dim).max().unwrap_or(0);
        let mut f = vec![0; max + 1];
        for face in &self.faces {
            f[face.dim()] += 1;
        }
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> Arc<LadderDiagram> {
        build_ladder(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn full_flag_three() {
        let d = diagram("1,0,-1");
        assert_eq!(d.vertices().len(), 8);
        assert_eq!(d.top_vertices(), &[(1, 2), (2, 1)]);
        assert_eq!(d.region_boxes(), &[(1, 1), (1, 2), (2, 1)]);
        assert_eq!(d.edges().len(), 10);
    }

    #[test]
    fn grassmannian_rectangle() {
        let d = diagram("1,1,0,0,0,0");
        assert_eq!(d.top_vertices(), &[(2, 4)]);
        assert_eq!(d.region_boxes().len(), 8);
        assert!(d.vertices().iter().all(|&(a, b)| a <= 2 && b <= 4));
    }

    #[test]
    fn point_orbit() {
        let d = diagram("2,2,2");
        assert!(d.region_boxes().is_empty());
        let faces = enumerate_faces_with_limit(&d, 12).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].dim(), 0);
    }

    #[test]
    fn path_counts() {
        assert_eq!(positive_paths(&diagram("1,0,-1")).len(), 6);
        assert_eq!(positive_paths(&diagram("1,0")).len(), 2);
        assert_eq!(positive_paths(&diagram("1,1,0,0")).len(), 6);
    }

    #[test]
    fn interval_has_three_faces() {
        let d = diagram("1,0");
        let faces = enumerate_faces_with_limit(&d, 12).unwrap();
        assert_eq!(
            faces.iter().map(Face::dim).collect::<Vec<_>>(),
            vec![0, 0, 1]
        );
    }

    #[test]
    fn full_flag_three_faces() {
        let d = diagram("1,0,-1");
        let faces = enumerate_faces_with_limit(&d, 12).unwrap();
        let lattice = face_lattice(faces);
        let f = lattice.f_vector();
        assert_eq!(f[0], 7);
        assert_eq!(f[3], 1);
        assert!(lattice.faces().last().unwrap().is_improper());
    }

    #[test]
    fn size_guard_refuses() {
        let d = diagram("3,2,1,0");
        assert_eq!(
            enumerate_faces_with_limit(&d, 5),
            Err(Error::SizeGuard { boxes: 6, max: 5 })
        );
    }

    #[test]
    fn improper_cycles_are_boxes() {
        let d = diagram("1,0,-1");
        let cycles = minimal_cycles(&Face::improper(&d));
        let vs: Vec<Point> = cycles.iter().map(|c| c.v_sigma).collect();
        assert_eq!(vs, vec![(1, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn rejects_non_faces() {
        let d = diagram("1,0,-1");
        // A lone edge from the origin reaches no top vertex.
        assert!(Face::from_edges(&d, &[Edge::new((0, 0), (1, 0))]).is_err());
        // An edge not on the diagram.
        assert!(Face::from_edges(&d, &[Edge::new((2, 1), (3, 1))]).is_err());
    }

    #[test]
    fn ids_are_stable_and_distinct() {
        let d = diagram("1,0,-1");
        let faces = enumerate_faces_with_limit(&d, 12).unwrap();
        let ids: HashSet<String> = faces.iter().map(Face::id).collect();
        assert_eq!(ids.len(), faces.len());
        assert_eq!(faces[0].id(), faces[0].clone().id());
        assert_eq!(faces[0].id().len(), 12);
    }

    #[test]
    fn edge_set_ops() {
        let a: EdgeSet = [1, 70, 200].into_iter().collect();
        let b: EdgeSet = [70].into_iter().collect();
        assert!(b.is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 200]);
        assert_eq!(a.union(&b), a);
    }
}
