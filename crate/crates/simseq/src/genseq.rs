//! The minimal recursive generator: greedy least-next-term runs for any
//! (property, start index, seed), plus the Moser-de Bruijn example sequence.

use crate::props::{label, similar, PropertyKind};
use crate::{Error, Result};

/// A (property, start index, seed) triple defining a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    pub kind: PropertyKind,
    pub n0: u64,
    pub seed: u64,
}

impl SequenceSpec {
    /// Validates that the seed is at least the start index and similar to it.
    pub fn new(kind: PropertyKind, n0: u64, seed: u64) -> Result<Self> {
        if seed < n0 {
            return Err(Error::SeedBelowStart { seed, n0 });
        }
        let seed_label = label(kind, seed)?;
        let n0_label = label(kind, n0)?;
        if seed_label != n0_label {
            return Err(Error::DissimilarSeed {
                seed,
                n0,
                seed_label: seed_label.0,
                n0_label: n0_label.0,
            });
        }
        Ok(SequenceSpec { kind, n0, seed })
    }

    /// Spec with the property's natural start index (1, or 2 for A4).
    pub fn from_seed(kind: PropertyKind, seed: u64) -> Result<Self> {
        SequenceSpec::new(kind, kind.min_index(), seed)
    }
}

/// Generated terms x_{n0}, x_{n0+1}, ... of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRun {
    pub spec: SequenceSpec,
    pub terms: Vec<u64>,
}

/// Smallest y > prev with y similar to n.
pub fn step(kind: PropertyKind, n: u64, prev: u64) -> Result<u64> {
    step_to(kind, label(kind, n)?, prev)
}

/// Smallest y > prev carrying `target`; lets sweeps that advance several
/// runs over the same index compute the label once.
pub(crate) fn step_to(kind: PropertyKind, target: crate::props::Label, prev: u64) -> Result<u64> {
    if kind == PropertyKind::A1Val2 {
        // Next multiple m * 2^e with m odd: O(1) instead of a scan. Agreement
        // with the scan is covered by a property test below.
        let e = target.0;
        if e >= 63 {
            return Err(Error::Capacity("step"));
        }
        let mut m = (prev >> e) + 1;
        if m % 2 == 0 {
            m += 1;
        }
        return m
            .checked_shl(e)
            .filter(|y| *y >> e == m)
            .ok_or(Error::Capacity("step"));
    }
    let mut y = prev;
    loop {
        y = y.checked_add(1).ok_or(Error::Capacity("step"))?;
        if label(kind, y)? == target {
            return Ok(y);
        }
    }
}

/// Reference scan used to cross-check the A1 fast path.
#[cfg(test)]
fn step_by_scan(kind: PropertyKind, n: u64, prev: u64) -> Result<u64> {
    let target = label(kind, n)?;
    let mut y = prev;
    loop {
        y = y.checked_add(1).ok_or(Error::Capacity("step"))?;
        if label(kind, y)? == target {
            return Ok(y);
        }
    }
}

/// Runs the greedy construction for `count` terms starting from the seed.
pub fn generate(spec: SequenceSpec, count: usize) -> Result<SequenceRun> {
    // Revalidate; specs can be constructed literally.
    let spec = SequenceSpec::new(spec.kind, spec.n0, spec.seed)?;
    let mut terms = Vec::with_capacity(count);
    if count > 0 {
        terms.push(spec.seed);
        for i in 1..count as u64 {
            let prev = *terms.last().unwrap();
            terms.push(step(spec.kind, spec.n0 + i, prev)?);
        }
    }
    Ok(SequenceRun { spec, terms })
}

/// n-th smallest sum of distinct powers of 4 (1-indexed): the binary digits
/// of n reinterpreted in base 4.
pub fn moser_de_bruijn(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain(0, "moser_de_bruijn is 1-indexed"));
    }
    if n >= 1 << 32 {
        return Err(Error::Capacity("moser_de_bruijn"));
    }
    let mut v = 0u64;
    let mut bit = 0;
    let mut m = n;
    while m > 0 {
        if m & 1 == 1 {
            v |= 1 << (2 * bit);
        }
        m >>= 1;
        bit += 1;
    }
    Ok(v)
}

/// Which run invariant a term violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunViolation {
    NotIncreasing,
    NotSimilar,
    NotMinimal,
}

/// Outcome of brute-force revalidation of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunCheck {
    pub ok: bool,
    /// Position in `terms` of the first violation, if any.
    pub first_violation: Option<(usize, RunViolation)>,
}

/// Re-checks all three run invariants (strict increase, similarity,
/// minimality) by scanning every gap.
pub fn verify_similar_run(run: &SequenceRun) -> Result<RunCheck> {
    let kind = run.spec.kind;
    for (i, &term) in run.terms.iter().enumerate() {
        let n = run.spec.n0 + i as u64;
        let fail = |what| {
            Ok(RunCheck {
                ok: false,
                first_violation: Some((i, what)),
            })
        };
        if !similar(kind, term, n)? {
            return fail(RunViolation::NotSimilar);
        }
        if i > 0 {
            let prev = run.terms[i - 1];
            if term <= prev {
                return fail(RunViolation::NotIncreasing);
            }
            if step(kind, n, prev)? != term {
                return fail(RunViolation::NotMinimal);
            }
        }
    }
    Ok(RunCheck {
        ok: true,
        first_violation: None,
    })
}
