//! Simplicial complexes, exact homology, Stanley–Reisner rings and depth via
//! Hochster's formula, with executable checks relating the depth of a
//! squarefree monomial quotient to the homology of the nerve of its minimal
//! primes.

pub mod complex;
pub mod depth;
mod error;
pub mod fixtures;
pub mod format;
pub mod homology;
pub mod stanley_reisner;
pub mod theorems;

pub use complex::{nerve, AlexanderDual, ComplexKind, FVector, Simplex, SimplicialComplex};
pub use depth::{depth, hochster_betti_table, is_cohen_macaulay_reisner, BettiTable, DepthReport};
pub use error::{Error, Result};
pub use homology::{
    reduced_homology, relative_homology, FieldSpec, HomologyGroup, HomologyProfile,
};
pub use stanley_reisner::{
    delta_of_complex, delta_of_primes, minimal_primes, sr_generators, PrimeFamily, SRGenerators,
};
