//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use gc_fibers::{build_ladder, enumerate_faces, Face, LadderDiagram, LambdaSpec};

/// Spectra of increasing size used across the benchmark groups.
pub const SPECTRA: &[(&str, &str)] = &[
    ("F3", "1,0,-1"),
    ("Gr24", "1,1,0,0"),
    ("F4", "3,2,1,0"),
    ("Gr36", "1,1,1,0,0,0"),
    ("F5", "4,3,2,1,0"),
];

pub fn diagram(lambda: &str) -> Arc<LadderDiagram> {
    let spec: LambdaSpec = lambda.parse().expect("valid spectrum");
    build_ladder(&spec).expect("diagram fits")
}

/// All faces of the diagram in canonical order.
pub fn faces(lambda: &str) -> Vec<Face> {
    enumerate_faces(&diagram(lambda)).expect("enumeration fits")
}

/// A face of middling dimension, so fibers have both fixed and free parts.
pub fn middle_face(lambda: &str) -> Face {
    let mut all = faces(lambda);
    let top = all.iter().map(Face::dim).max().unwrap_or(0);
    let idx = all.iter().position(|f| f.dim() == top / 2).unwrap_or(0);
    all.swap_remove(idx)
}
