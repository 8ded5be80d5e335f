//! The monomial map `φ_Λ`, its kernel, and what the kernel says about toric
//! degenerations.

mod grading;
mod hexagon;
mod markov;
mod monomial;
mod verdict;

pub use grading::{block_grading, block_grading_by_columns, ssyt_count, BlockGrading};
pub use hexagon::{
    degree2_class_count, has_hexagonal_submatching, is_hexagonal_3x6, is_non_hexagonal, Coherence, HexagonScan,
    HexagonalWitness, HEXAGONAL_CLASS_COUNT,
};
pub use markov::{
    is_quadratically_generated_up_to, markov_generators, quadratic_generation, Binomial, DegreeGenerators,
    FiberCertificate, GeneratorReport, MarkovOptions, QuadraticGeneration,
};
pub use monomial::{fiber, phi, PlueckerMonomial, XMonomial};
pub(crate) use verdict::{decide, hexagon_witness};
pub use verdict::{toric_degeneration_verdict, toric_degeneration_verdict_with, Verdict};
