//! Swap-and-mismatch ("tilde") edit distance on binary words, hypercubes and
//! tilde-hypercubes with their word-avoiding subgraphs, and exhaustive
//! checks of tilde- and Ham-isometric words.
//!
//! Counting routines are generic over the integer type ([`counting::CountInt`])
//! and the real type ([`counting::Real`]); the aliases below fix the default
//! exact and high-precision choices.

pub mod cli;
pub mod counting;
pub mod cube;
pub mod distance;
pub mod error;
pub mod isometry;
pub mod word;

/// Exact unbounded count.
pub type Count = num_bigint::BigUint;

/// Fixed-point real with 256 fractional bits (about 77 decimal digits).
pub type Precise = counting::Fixed<256>;

/// Machine-precision real used for printed ratios.
pub type Real64 = f64;

pub use cube::{build_tilde_fibonacci_recursive, build_tilde_hypercube_recursive, CubeGraph, Metric};
pub use distance::{
    apply, hamming, minimal_transformations, tilde_distance, EditOp, Transformation,
};
pub use error::{Error, Result};
pub use isometry::{
    check_ham_isometric, check_tilde_isometric, check_tilde_isometric_by_transformations,
    classify_all_words, ham_isometric_by_overlap, is_isometric_subgraph, IsometryVerdict, Status,
    Witness,
};
pub use word::{count_f_free, enumerate_f_free, BinaryWord};
