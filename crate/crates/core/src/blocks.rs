//! W, M and L blocks: per-stage fibers, the iterated-bundle descriptor and Lagrangian faces.
//!
//! The W_k block is the zigzag chain of boxes `(a, b)` with `a, b ≥ 1` and
//! `k + 1 ≤ a + b ≤ k + 2`. Boxes on the lower diagonal `a + b = k + 1` hold the eigenvalues
//! of the `k × k` leading block and boxes on the upper diagonal hold those of the
//! `(k+1) × (k+1)` block. Edges of a face that separate two boxes of the chain act as walls.
//!
//! The chain is taken over the whole staircase, including boxes outside the ladder diagram.
//! Such boxes carry constant pattern entries and are never separated by a face edge, so they
//! merge with their neighbours exactly as equal eigenvalues do.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flag_core::complex_dimension;
use crate::ladder::{Edge, Face, Point};
use crate::unionfind::UnionFind;

/// Boxes of W_k in chain order `(1,k+1), (1,k), (2,k), (2,k−1), …, (k,1), (k+1,1)`.
pub fn w_block_boxes(k: usize) -> Vec<Point> {
    let mut out = Vec::with_capacity(2 * k + 1);
    for i in 1..=k {
        out.push((i, k + 2 - i));
        out.push((i, k + 1 - i));
    }
    out.push((k + 1, 1));
    out
}

/// The M_ℓ block: W_ℓ without its two end boxes, normalized to start at `(0, 0)`.
pub fn m_block_shape(l: usize) -> Vec<Point> {
    let boxes: Vec<Point> = w_block_boxes(l)
        .into_iter()
        .filter(|&b| b != (l + 1, 1) && b != (1, l + 1))
        .collect();
    normalize(&boxes)
}

fn normalize(boxes: &[Point]) -> Vec<Point> {
    let min_a = boxes.iter().map(|b| b.0).min().unwrap_or(0);
    let min_b = boxes.iter().map(|b| b.1).min().unwrap_or(0);
    let mut out: Vec<Point> = boxes.iter().map(|&(a, b)| (a - min_a, b - min_b)).collect();
    out.sort();
    out
}

/// `Some(ℓ)` if the box set is a translate of M_ℓ.
pub fn m_block_size(boxes: &[Point]) -> Option<usize> {
    if boxes.len().is_multiple_of(2) {
        return None;
    }
    let l = boxes.len().div_ceil(2);
    (normalize(boxes) == m_block_shape(l)).then_some(l)
}

/// W_k cut along the walls of a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WBlockDecomposition {
    pub k: usize,
    /// Boxes in chain order.
    pub boxes: Vec<Point>,
    /// Face edges shared by two boxes of W_k.
    pub walls: Vec<Edge>,
    /// Connected box sets, each in chain order, listed by first box.
    pub regions: Vec<Vec<Point>>,
    /// Vertices `(a, b)` of W_k with `a + b = k − 1`.
    pub bottom_vertices: Vec<Point>,
}

impl WBlockDecomposition {
    /// Whether some box of the region has a bottom vertex as a corner.
    pub fn has_bottom_vertex(&self, region: &[Point]) -> bool {
        region.iter().any(|&(a, b)| {
            [(a - 1, b - 1), (a, b - 1), (a - 1, b), (a, b)]
                .iter()
                .any(|v| self.bottom_vertices.contains(v))
        })
    }
}

fn check_stage(face: &Face, k: usize) -> Result<()> {
    let max = face.diagram().n().saturating_sub(1);
    if k == 0 || k > max {
        return Err(Error::StageOutOfRange { k, max });
    }
    Ok(())
}

/// Splits W_k into regions separated by face edges interior to the block.
pub fn w_decomposition(face: &Face, k: usize) -> Result<WBlockDecomposition> {
    check_stage(face, k)?;
    let boxes = w_block_boxes(k);
    let pos = |b: Point| boxes.iter().position(|&x| x == b);
    let mut uf = UnionFind::new(boxes.len());
    let mut walls = Vec::new();
    for (i, &(a, b)) in boxes.iter().enumerate() {
        for (nb, edge) in [
            ((a + 1, b), Edge::right_of_box(a, b)),
            ((a, b + 1), Edge::top_of_box(a, b)),
        ] {
            if let Some(j) = pos(nb) {
                if face.has_edge(edge) {
                    walls.push(edge);
                } else {
                    uf.union(i, j);
                }
            }
        }
    }
    walls.sort();
    let (labels, count) = uf.labels();
    let mut regions = vec![Vec::new(); count];
    for (i, &b) in boxes.iter().enumerate() {
        regions[labels[i]].push(b);
    }
    let bottom_vertices = (0..k).map(|a| (a, k - 1 - a)).collect();
    Ok(WBlockDecomposition {
        k,
        boxes,
        walls,
        regions,
        bottom_vertices,
    })
}

/// A factor of a stage fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Point,
    /// An odd-dimensional sphere; the payload is its dimension.
    Sphere(usize),
}

impl Factor {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Point => 0,
            Factor::Sphere(d) => *d,
        }
    }

    /// Short label `"pt"`, `"S1"`, `"S3"`, ...
    pub fn label(&self) -> String {
        match self {
            Factor::Point => "pt".into(),
            Factor::Sphere(d) => format!("S{d}"),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Point => write!(f, "pt"),
            Factor::Sphere(d) => write!(f, "S^{d}"),
        }
    }
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// The fiber contributed by one stage: one factor per region of W_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageFiber {
    pub k: usize,
    pub factors: Vec<Factor>,
    pub total_dim: usize,
}

impl StageFiber {
    fn new(k: usize, factors: Vec<Factor>) -> Self {
        let total_dim = factors.iter().map(Factor::dim).sum();
        StageFiber {
            k,
            factors,
            total_dim,
        }
    }

    pub fn spheres(&self) -> Vec<Factor> {
        self.factors
            .iter()
            .copied()
            .filter(|f| *f != Factor::Point)
            .collect()
    }

    pub fn circle_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| **f == Factor::Sphere(1))
            .count()
    }

    /// Sphere sizes `ℓ` (a factor `S^{2ℓ−1}`), sorted.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.spheres().iter().map(|f| f.dim().div_ceil(2)).collect();
        v.sort();
        v
    }

    /// Product of the non-trivial factors, `"pt"` if there are none.
    pub fn product_string(&self) -> String {
        let s = self.spheres();
        if s.is_empty() {
            "pt".into()
        } else {
            s.iter()
                .map(Factor::to_string)
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }
}

/// Classifies every region of W_k: a translate of M_ℓ touching a bottom vertex gives
/// `S^{2ℓ−1}`, anything else a point.
pub fn stage_fiber(face: &Face, k: usize) -> Result<StageFiber> {
    let w = w_decomposition(face, k)?;
    let factors = w
        .regions
        .iter()
        .map(|region| match m_block_size(region) {
            Some(l) if w.has_bottom_vertex(region) => Factor::Sphere(2 * l - 1),
            _ => Factor::Point,
        })
        .collect();
    Ok(StageFiber::new(k, factors))
}

/// Renders an iterated bundle, top stage first: `"S^3-bundle over S^5"`.
pub fn bundle_string(stages: &[StageFiber]) -> String {
    let parts: Vec<&StageFiber> = stages.iter().rev().filter(|s| s.total_dim > 0).collect();
    if parts.is_empty() {
        return "pt".into();
    }
    let last = parts.len() - 1;
    parts
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let p = s.product_string();
            if i == last {
                p
            } else if s.spheres().len() > 1 {
                format!("({p})-bundle over ")
            } else {
                format!("{p}-bundle over ")
            }
        })
        .collect()
}

/// The full fiber over the relative interior of a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberDescriptor {
    pub face_id: String,
    pub stages: Vec<StageFiber>,
    pub total_dim: usize,
    /// Number of `S^1` factors over all stages.
    pub circle_count: usize,
    /// Stages with every `S^1` factor removed.
    pub reduced_stages: Vec<StageFiber>,
    pub is_lagrangian: bool,
    pub pi1_rank: usize,
    pub pi2_trivial: bool,
    pub bundle: String,
}

/// Stages `k = 1..n−1` and everything derived from them.
pub fn fiber_descriptor(face: &Face) -> FiberDescriptor {
    let spec = face.diagram().spec();
    let stages: Vec<StageFiber> = (1..spec.n())
        .map(|k| stage_fiber(face, k).expect("k is in range"))
        .collect();
    let total_dim = stages.iter().map(|s| s.total_dim).sum();
    let circle_count = stages.iter().map(StageFiber::circle_count).sum();
    let reduced_stages = stages
        .iter()
        .map(|s| {
            let kept = s
                .factors
                .iter()
                .copied()
                .filter(|f| *f != Factor::Sphere(1))
                .collect();
            StageFiber::new(s.k, kept)
        })
        .collect();
    FiberDescriptor {
        face_id: face.id(),
        bundle: bundle_string(&stages),
        stages,
        total_dim,
        circle_count,
        reduced_stages,
        is_lagrangian: total_dim == complex_dimension(spec),
        pi1_rank: circle_count,
        pi2_trivial: true,
    }
}

/// The L-shaped block `L_k(p, q)`: a column of `k` boxes above `(p, q)` and a row of `k`
/// boxes to its right, sharing the corner box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LBlock {
    pub k: usize,
    pub p: usize,
    pub q: usize,
}

impl LBlock {
    pub fn new(k: usize, p: usize, q: usize) -> Self {
        LBlock { k, p, q }
    }

    pub fn boxes(&self) -> Vec<Point> {
        let mut out: Vec<Point> = (0..self.k).map(|i| (self.p, self.q + i)).collect();
        out.extend((1..self.k).map(|i| (self.p + i, self.q)));
        out.sort();
        out
    }

    /// Edges between consecutive boxes of the block.
    pub fn interior_edges(&self) -> Vec<Edge> {
        let (p, q) = (self.p, self.q);
        let mut out: Vec<Edge> = (0..self.k - 1)
            .map(|i| Edge::top_of_box(p, q + i))
            .collect();
        out.extend((0..self.k - 1).map(|i| Edge::right_of_box(p + i, q)));
        out
    }

    pub fn top_edge(&self) -> Edge {
        Edge::top_of_box(self.p, self.q + self.k - 1)
    }

    pub fn right_edge(&self) -> Edge {
        Edge::right_of_box(self.p + self.k - 1, self.q)
    }

    /// Dimension `2k − 1` of the matching sphere.
    pub fn sphere_dim(&self) -> usize {
        2 * self.k - 1
    }
}

/// L-blocks inside the diagram with no face edge in their interior and with their top and
/// rightmost edges in the face, sorted by `(p, q, k)`.
pub fn rigid_l_blocks(face: &Face) -> Vec<LBlock> {
    let d = face.diagram();
    let n = d.n();
    let mut out = Vec::new();
    for &(p, q) in d.region_boxes() {
        for k in 1..=n {
            let block = LBlock::new(k, p, q);
            if !block.boxes().iter().all(|&b| d.has_box(b)) {
                break;
            }
            if face.has_edge(block.top_edge())
                && face.has_edge(block.right_edge())
                && !block.interior_edges().iter().any(|&e| face.has_edge(e))
            {
                out.push(block);
            }
        }
    }
    out.sort_by_key(|b| (b.p, b.q, b.k));
    out
}

/// Outcome of comparing the fiber dimension with the rigid L-block count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LagrangianReport {
    pub is_lagrangian: bool,
    pub fiber_dim: usize,
    /// `Σ (2k − 1)` over rigid blocks.
    pub l_sum: usize,
    pub blocks: Vec<LBlock>,
}

/// Classifies a face; fails if the block count and the stage fibers disagree.
pub fn lagrangian_classification(face: &Face) -> Result<LagrangianReport> {
    let desc = fiber_descriptor(face);
    let blocks = rigid_l_blocks(face);
    let l_sum: usize = blocks.iter().map(LBlock::sphere_dim).sum();
    if l_sum != desc.total_dim {
        return Err(Error::Inconsistent(format!(
            "face {}: rigid L-blocks give dimension {l_sum} but the stage fibers give {}",
            desc.face_id, desc.total_dim
        )));
    }
    let covered: BTreeSet<Point> = blocks.iter().flat_map(LBlock::boxes).collect();
    let all: BTreeSet<Point> = face.diagram().region_boxes().iter().copied().collect();
    let is_lagrangian = covered == all;
    if is_lagrangian != desc.is_lagrangian {
        return Err(Error::Inconsistent(format!(
            "face {}: rigid blocks cover the diagram = {is_lagrangian}, fiber is half-dimensional = {}",
            desc.face_id, desc.is_lagrangian
        )));
    }
    Ok(LagrangianReport {
        is_lagrangian,
        fiber_dim: desc.total_dim,
        l_sum,
        blocks,
    })
}

/// The splitting of a fiber as `T^r × Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusFactorization {
    pub r: usize,
    pub y_stages: Vec<StageFiber>,
    /// Bundle string of `Y`, `"pt"` when every factor is a circle.
    pub y_bundle: String,
}

pub fn torus_factorization(desc: &FiberDescriptor) -> TorusFactorization {
    TorusFactorization {
        r: desc.circle_count,
        y_stages: desc.reduced_stages.clone(),
        y_bundle: bundle_string(&desc.reduced_stages),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyInvariants {
    pub pi1_rank: usize,
    pub pi2_trivial: bool,
}

/// `π_1 ≅ Z^r` and `π_2 = 0`.
pub fn homotopy_invariants(desc: &FiberDescriptor) -> HomotopyInvariants {
    HomotopyInvariants {
        pi1_rank: desc.pi1_rank,
        pi2_trivial: desc.pi2_trivial,
    }
}
