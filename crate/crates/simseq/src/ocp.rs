//! Parity-change structure of 9-integer segments [4k+1, 4k+9]: OCP
//! profiles, regular/singular step classification, the ψ continuation with
//! its N+16 bound, and the shifted Thue-Morse counterexample finder.

use crate::genseq::step;
use crate::props::{tm_bit, tm_parity, PropertyKind};
use crate::{Error, Result};
use rayon::prelude::*;

/// The 8 change/not-change bits of a segment: entry i is
/// t(4k+1+i) XOR t(4k+2+i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OcpProfile {
    pub k: u64,
    pub entries: [u8; 8],
}

pub fn ocp_profile(k: u64) -> OcpProfile {
    assert!(k >= 1, "ocp_profile requires k >= 1");
    let mut entries = [0u8; 8];
    for (i, e) in entries.iter_mut().enumerate() {
        let n = 4 * k + 1 + i as u64;
        *e = (tm_bit(n) ^ tm_bit(n + 1)) as u8;
    }
    OcpProfile { k, entries }
}

impl OcpProfile {
    /// Every profile has the forced shape {0,1,c1,1,0,1,c2,1} with
    /// c1 = t(k) ^ t(k+1) and c2 = t(k+1) ^ t(k+2), and (c1,c2) != (0,0).
    pub fn matches_forced_shape(&self) -> bool {
        let k = self.k;
        let c1 = (tm_bit(k) ^ tm_bit(k + 1)) as u8;
        let c2 = (tm_bit(k + 1) ^ tm_bit(k + 2)) as u8;
        (c1, c2) != (0, 0) && self.entries == [0, 1, c1, 1, 0, 1, c2, 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    Change,
    NotChange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Regular,
    Singular,
}

/// A classified step: the least increment in {1,2,3} achieving the goal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepClass {
    pub n: u64,
    pub goal: Goal,
    pub class: Class,
    pub witness: u8,
}

/// Brute-force classification straight from the definition. Among any four
/// consecutive integers two are evil and two odious, so a witness <= 3
/// always exists.
pub fn classify_step(n: u64, goal: Goal) -> StepClass {
    assert!(n >= 1, "classify_step requires n >= 1");
    let base = tm_bit(n);
    let witness = (1u8..=3)
        .find(|&d| {
            let changed = tm_bit(n + d as u64) != base;
            changed == (goal == Goal::Change)
        })
        .expect("a parity witness always exists within 3");
    StepClass {
        n,
        goal,
        class: if witness <= 2 { Class::Regular } else { Class::Singular },
        witness,
    }
}

/// Length of the last series of 1's of an even number: the maximal run of
/// 1-bits immediately above the trailing 0-bits.
pub fn last_ones_run(n: u64) -> u32 {
    (n >> n.trailing_zeros()).trailing_ones()
}

/// Closed-form classification: change is always regular; not-change is
/// regular for odd n, singular for multiples of 4, and for n ≡ 2 (mod 4)
/// singular exactly when the last 1-series has even length.
pub fn lemma_class(n: u64, goal: Goal) -> Class {
    match goal {
        Goal::Change => Class::Regular,
        Goal::NotChange => {
            if n % 2 == 1 {
                Class::Regular
            } else if n % 4 == 0 || last_ones_run(n) % 2 == 0 {
                Class::Singular
            } else {
                Class::Regular
            }
        }
    }
}

/// The ψ continuation over one segment: ψ(4k+1) = N and eight greedy
/// bit-parity steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsiTrace {
    pub k: u64,
    pub seed: u64,
    pub values: [u64; 9],
    pub jumps: [u8; 8],
}

/// Runs ψ_{k,N}. The seed must carry the bit parity of 4k+1, otherwise the
/// first jump is not governed by the segment's profile.
pub fn psi_run(k: u64, seed: u64) -> Result<PsiTrace> {
    let start = 4 * k + 1;
    let np = tm_parity(seed)?;
    let sp = tm_parity(start)?;
    if np != sp {
        return Err(Error::PsiParity {
            n: seed,
            start,
            n_parity: np.0,
            start_parity: sp.0,
        });
    }
    let mut values = [0u64; 9];
    let mut jumps = [0u8; 8];
    values[0] = seed;
    for i in 1..9 {
        values[i] = step(PropertyKind::A2BitParity, start + i as u64, values[i - 1])?;
        jumps[i - 1] = (values[i] - values[i - 1]) as u8;
    }
    Ok(PsiTrace {
        k,
        seed,
        values,
        jumps,
    })
}

/// Result of the exhaustive segment-jump sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem5Summary {
    pub k_max: u64,
    pub n_max: u64,
    /// Largest observed ψ(4k+9) - N, with the (k, N) pair attaining it.
    pub max_diff: u64,
    pub witness: (u64, u64),
    /// Count of (k, N) pairs exceeding 16; must be zero.
    pub violations: u64,
}

/// Sweeps all k <= k_max and parity-valid N <= n_max; the bound says the
/// total of the eight jumps never exceeds 16.
pub fn theorem5_sweep(k_max: u64, n_max: u64) -> Result<Theorem5Summary> {
    let per_k: Vec<(u64, (u64, u64), u64)> = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let start_parity = tm_bit(4 * k + 1);
            let mut best = (0u64, (k, 0u64));
            let mut violations = 0u64;
            for seed in 1..=n_max {
                if tm_bit(seed) != start_parity {
                    continue;
                }
                let trace = psi_run(k, seed)?;
                let diff = trace.values[8] - seed;
                if diff > best.0 {
                    best = (diff, (k, seed));
                }
                if diff > 16 {
                    violations += 1;
                }
            }
            Ok((best.0, best.1, violations))
        })
        .collect::<Result<_>>()?;
    let mut max_diff = 0u64;
    let mut witness = (0u64, 0u64);
    let mut violations = 0u64;
    for (diff, w, v) in per_k {
        // Ties resolve to the smallest (k, N): order-independent reduction.
        if diff > max_diff || (diff == max_diff && w < witness) {
            max_diff = diff;
            witness = w;
        }
        violations += v;
    }
    Ok(Theorem5Summary {
        k_max,
        n_max,
        max_diff,
        witness,
        violations,
    })
}

/// Least n with t(2n + c) != t(2n); exists for every c >= 1.
pub fn lemma9_counterexample(c: u64) -> Result<u64> {
    const CAP: u64 = 1 << 40;
    lemma9_counterexample_after(c, 0, CAP)
}

/// Least n > n0 with t(2n + c) != t(2n), scanning up to `cap`.
pub fn lemma9_counterexample_after(c: u64, n0: u64, cap: u64) -> Result<u64> {
    if c == 0 {
        return Err(Error::Domain(0, "lemma9 requires c >= 1"));
    }
    let mut n = n0 + 1;
    while n <= cap {
        if tm_bit(2 * n + c) != tm_bit(2 * n) {
            return Ok(n);
        }
        n += 1;
    }
    Err(Error::ScanCap(cap))
}
