//! Gelfand-Cetlin systems on co-adjoint orbits of `U(n)`.
//!
//! The crate builds the ladder diagram of a spectrum λ, enumerates the faces of the
//! Gelfand-Cetlin polytope as subgraphs of that diagram, classifies the fiber over each face
//! as an iterated bundle of odd spheres and checks the classification against explicit
//! Hermitian matrices sampled in the fiber.
//!
//! ```
//! use gc_fibers::{build_ladder, enumerate_faces, fiber_descriptor, LambdaSpec};
//!
//! let spec: LambdaSpec = "1,0,-1".parse().unwrap();
//! let diagram = build_ladder(&spec).unwrap();
//! let faces = enumerate_faces(&diagram).unwrap();
//! let spheres = faces
//!     .iter()
//!     .filter(|f| f.dim() == 0)
//!     .filter(|f| fiber_descriptor(f).bundle == "S^3")
//!     .count();
//! assert_eq!(spheres, 1);
//! ```

pub mod blocks;
pub mod error;
pub mod flag_core;
pub mod ladder;
pub mod polytope;
pub mod scalar;
pub mod spectral;
pub mod unionfind;

pub use blocks::{
    bundle_string, fiber_descriptor, homotopy_invariants, lagrangian_classification, m_block_shape,
    m_block_size, rigid_l_blocks, stage_fiber, torus_factorization, w_block_boxes, w_decomposition,
    Factor, FiberDescriptor, HomotopyInvariants, LBlock, LagrangianReport, StageFiber,
    TorusFactorization, WBlockDecomposition,
};
pub use error::{Error, Result};
pub use flag_core::{
    complex_dimension, compositions, monotone_lambda, nonconstant_indices, parse_lambda, Cell,
    IndexSet, LambdaSpec,
};
pub use ladder::{
    build_ladder, enumerate_faces, enumerate_faces_with_limit, face_dimension, face_lattice,
    is_face, max_boxes_from_env, minimal_cycles, positive_paths, Edge, EdgeSet, Face, FaceLattice,
    LadderDiagram, MinimalCycle, Point, PositivePath, DEFAULT_MAX_BOXES, MAX_BOXES_ENV,
};
pub use polytope::{
    cell_name, contains, face_affine_dimension, face_from_equalities, gc_inequalities,
    interior_point, locate_face, min_slack, parse_cell, parse_equalities, point_from_equalities,
    psi, Equality, EqualityClasses, EqualitySet, GCPoint, HRepresentation, Inequality, DEFAULT_TOL,
};
pub use scalar::Scalar;
pub use spectral::{
    assemble_matrix, eigenvalues, eigh, gc_map, random_conjugate, random_unitary, sample_fiber,
    solve_fiber_system, verify_face, CMatrix, FiberSolution, HermitianMatrix, InterlacingPair,
    VerifyReport,
};
