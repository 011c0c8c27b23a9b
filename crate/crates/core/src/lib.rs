//! Fermion-to-qubit encodings built from prefix-sum data structures.
//!
//! An encoding of `n` fermionic modes is an invertible binary matrix `G`
//! (occupations `f` are stored as qubit basis states `|G f>`), or for the
//! ternary scheme a ternary tree whose root-to-leaf paths give the
//! Majorana strings. Forest-shaped `G`s cover Jordan-Wigner, parity,
//! Fenwick (Bravyi-Kitaev) and Sierpinski encodings.

pub mod cli;
pub mod encoding;
pub mod error;
pub mod forest;
pub mod gf2;
pub mod oracle;
pub mod pauli;
pub mod polynomial;
pub mod sets;
pub mod stats;
pub mod ternary;

pub use encoding::{make_encoding, Encoding, Scheme};
pub use error::{Error, Result};
pub use forest::{build_fenwick, build_sierpinski, prune, Forest};
pub use gf2::{BitMatrix, BitVector};
pub use pauli::{CliffordTableau, Pauli, PauliString, Phase};
pub use polynomial::{Coeff, PauliPolynomial};
pub use sets::{all_sets, compute_sets, IndexSet, IndexSetQuad};
pub use stats::{average_weight, ternary_average, AverageConvention, WeightReport};
