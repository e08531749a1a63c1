//! Minimal recursive sequences similar to the positive integers.
//!
//! An integer sequence `x_n` is *similar* to ℕ with respect to an equivalence
//! property when `x_n` and `n` always share the same class. The *minimal
//! recursive* sequence starts at a seed and greedily takes the least integer
//! above the previous term that lands in the right class. This crate generates
//! such sequences for four properties (2-adic valuation, Thue-Morse bit
//! parity, primality, distinct prime divisor count), evaluates their closed
//! forms and recursions, and runs exhaustive desk-scale verification sweeps
//! over the associated merging, valuation, and segment-jump claims.

pub mod cli;
pub mod closed;
pub mod dfact;
pub mod genseq;
pub mod merge;
pub mod ocp;
pub mod props;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("value {0} is outside the property's domain: {1}")]
    Domain(u64, &'static str),
    #[error("invalid sequence spec: seed {seed} has label {seed_label} but start index {n0} has label {n0_label}")]
    DissimilarSeed {
        seed: u64,
        n0: u64,
        seed_label: u32,
        n0_label: u32,
    },
    #[error("invalid sequence spec: seed {seed} is below start index {n0}")]
    SeedBelowStart { seed: u64, n0: u64 },
    #[error("64-bit capacity exceeded while computing {0}")]
    Capacity(&'static str),
    #[error("properties or start indices of the two specs do not match")]
    SpecMismatch,
    #[error("exponent must be odd, got {0}")]
    EvenExponent(u64),
    #[error("psi seed {n} has bit parity {n_parity} but segment start {start} has bit parity {start_parity}")]
    PsiParity {
        n: u64,
        start: u64,
        n_parity: u32,
        start_parity: u32,
    },
    #[error("scan cap {0} exceeded")]
    ScanCap(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
