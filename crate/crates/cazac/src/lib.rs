//! Permutation-interleaved Zadoff-Chu sequences.
//!
//! The crate builds ZC sequences in an exact exponent representation,
//! decides permutation-polynomial properties over residue rings `Z_N`,
//! verifies the CAZAC/ZCZ autocorrelation properties with exact cyclotomic
//! arithmetic, and decides equivalence of sequences under the five
//! CAZAC-preserving operations (rotation, translation, decimation,
//! linear-frequency modulation, conjugation).

pub mod corr;
pub mod equiv;
mod error;
pub mod perm;
pub mod ring;
pub mod seq;

pub use error::{Error, Result};
