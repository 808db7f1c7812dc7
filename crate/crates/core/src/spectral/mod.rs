//! Hermitian matrices, the Gelfand-Cetlin map and explicit fibers.

pub mod arrow;
pub mod jacobi;
pub mod matrix;
pub mod sample;
pub mod verify;

pub use arrow::{
    assemble_matrix, max_residual, sample_choice, solve_fiber_system, trivial_choice,
    FiberSolution, InterlacingPair, SolutionStructure, SphereGroup, DEFAULT_TIE_EPS,
};
pub use jacobi::{eigenvalues, eigh, Eigen, JACOBI_TOL};
pub use matrix::{CMatrix, HermitianMatrix};
pub use sample::{
    gc_map, minor_spectra, random_conjugate, random_unitary, sample_fiber, spectrum_error,
    stage_pair, stage_solutions, FiberSampler, ROUNDTRIP_TOL,
};
pub use verify::{face_seed, verify_face, StageCheck, VerifyReport};
