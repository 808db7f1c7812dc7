//! Faces used across the integration tests, each given by a point in its relative interior.
#![allow(dead_code)]

use std::sync::Arc;

use gc_fibers::{
    build_ladder, face_from_equalities, nonconstant_indices, Face, LadderDiagram, LambdaSpec,
};

pub fn diagram(lambda: &str) -> Arc<LadderDiagram> {
    build_ladder(&lambda.parse::<LambdaSpec>().unwrap()).unwrap()
}

pub fn face(lambda: &str, equalities: &str) -> Face {
    face_from_equalities(&diagram(lambda), equalities).unwrap()
}

/// Pins every nonconstant cell to zero.
pub fn origin(lambda: &str) -> Face {
    let d = diagram(lambda);
    let pins: Vec<String> = nonconstant_indices(d.spec())
        .nonconstant
        .iter()
        .map(|&(i, j)| format!("u{i}_{j}=0"))
        .collect();
    face_from_equalities(&d, &pins.join(",")).unwrap()
}

pub const F3: &str = "1,0,-1";

/// The vertex of F(3) with fiber S^3.
pub fn f3_v3() -> Face {
    face(F3, "u11=0,u12=0,u21=0")
}

pub const GR24: &str = "1,1,0,0";

/// The face of Gr(2,4) with every coordinate equal to 1/2.
pub fn gr24_gamma() -> Face {
    face(GR24, "u11=u12=u21=u22=1/2")
}

pub const SU3: &str = "3,3,0,-3,-3";

pub const GR36: &str = "3,3,3,-3,-3,-3";

pub fn gr36_gamma2() -> Face {
    face(
        GR36,
        "u11=0,u12=0,u21=0,u22=0,u23=0,u32=0,u33=0,u13=1,u31=-1",
    )
}

pub const F6: &str = "5,3,1,-1,-3,-5";

pub fn f6_gamma1() -> Face {
    face(
        F6,
        "u11=u12=u21=u13=u22=u31=u23=u32=u33=0,\
         u14=3,u41=-3,u15=4,u24=2,u42=-2,u51=-4",
    )
}

pub const GAMMA_2_5_7: &str = "2,2,1,1,1,0,0";

/// The worked face with rigid blocks L3(1,1), L1(4,1), L1(5,1) and L1(5,2).
pub fn gamma_2_5_7() -> Face {
    face(
        GAMMA_2_5_7,
        "u11=1,u12=1,u13=1,u14=2,u15=2,\
         u21=1,u22=1,u23=1,u24=2,u25=2,\
         u31=1,u32=1,\
         u41=1/2,u42=1,\
         u51=1/4,u52=1/2",
    )
}
