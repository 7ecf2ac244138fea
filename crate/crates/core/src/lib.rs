//! Exact weight distributions of `q`-ary Hamming codes `H(m, q)` with
//! `gcd(m, q - 1) = 1`, computed by a power-moment recursion and checked
//! against brute-force enumeration and character-sum identities.

pub mod cli;
pub mod codes;
pub mod cyclo;
pub mod error;
pub mod expsums;
pub mod gf;
pub mod report;
pub mod verify;
pub mod weightdist;

pub use codes::{Codeword, HammingCode, PrimalMethod, DEFAULT_ENUMERATION_GUARD};
pub use cyclo::CyclotomicInt;
pub use error::{Error, Result};
pub use expsums::{CharacterContext, DEFAULT_WORK_BOUND};
pub use gf::{FieldElement, FieldTower, TraceDomain, DEFAULT_MAX_FIELD_SIZE};
pub use report::IdentityReport;
pub use weightdist::{
    corollary_poly, macwilliams_transform, pless_moment_check, weights_binary_recurrence, weights_recursive,
    weights_recursive_with, RecursionOptions, WeightDistribution,
};
