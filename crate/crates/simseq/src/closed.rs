//! Closed forms, recursions, and cross-identities for the canonical runs
//! x^(3) (2-adic valuation, seed 3) and x^(4) (bit parity, seed 4), with the
//! Josephus-survivor and no-"10"-prefix connections.

use crate::genseq::{generate, SequenceSpec};
use crate::props::PropertyKind;
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::VecDeque;

/// Result of a batch identity check over an index interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub name: &'static str,
    pub lo: u64,
    pub hi: u64,
    pub first_mismatch: Option<u64>,
}

impl ClosedFormReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn report(name: &'static str, lo: u64, hi: u64, first_mismatch: Option<u64>) -> ClosedFormReport {
    ClosedFormReport {
        name,
        lo,
        hi,
        first_mismatch,
    }
}

/// Scans [lo, hi] in parallel and returns the smallest failing index.
fn first_failure<F>(lo: u64, hi: u64, check: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    (lo..=hi).into_par_iter().filter(|&n| !check(n)).min()
}

/// x_1 = 3, x_2 = 6, x_{2n-1} = 2 x_{n-1} + 1, x_{2n} = 2 x_n, by descent.
pub fn x3_recursive(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain(0, "x3_recursive requires n >= 1"));
    }
    let inner = match n {
        1 => return Ok(3),
        2 => return Ok(6),
        n if n % 2 == 1 => x3_recursive((n - 1) / 2)?,
        n => x3_recursive(n / 2)?,
    };
    inner
        .checked_mul(2)
        .map(|d| d + (n % 2))
        .ok_or(Error::Capacity("x3_recursive"))
}

/// Survivor for n people eliminating every second: with n = 2^m + L, the
/// answer is 2L + 1 (one-bit left rotation of n).
pub fn josephus(n: u64) -> u64 {
    assert!(n >= 1, "josephus requires n >= 1");
    let m = 63 - n.leading_zeros() as u64;
    let l = n - (1 << m);
    2 * l + 1
}

/// Direct circle-elimination simulation; the oracle for [`josephus`].
pub fn josephus_simulate(n: u64) -> u64 {
    let mut circle: VecDeque<u64> = (1..=n).collect();
    while circle.len() > 1 {
        let survivor = circle.pop_front().unwrap();
        circle.push_back(survivor);
        circle.pop_front();
    }
    circle[0]
}

/// x_n^(3) = 3n + 1 - b(n) where b is the Josephus survivor.
pub fn x3_via_josephus(n: u64) -> u64 {
    3 * n + 1 - josephus(n)
}

/// A004760: a(0)=0, a(1)=1, a(2n)=2a(n)+1, a(2n+1)=2a(n+1). The members are
/// exactly the integers whose binary expansion does not begin with 10.
pub fn a004760(n: u64) -> u64 {
    match n {
        0 => 0,
        1 => 1,
        n if n % 2 == 0 => 2 * a004760(n / 2) + 1,
        n => 2 * a004760((n + 1) / 2),
    }
}

/// Closed form for x^(4): 2n+3 when n * val2(n+1) is even, else 2n+2.
pub fn x4_closed(n: u64) -> u64 {
    assert!(n >= 1, "x4_closed requires n >= 1");
    let product_odd = n % 2 == 1 && (n + 1).trailing_zeros() % 2 == 1;
    if product_odd {
        2 * n + 2
    } else {
        2 * n + 3
    }
}

/// True iff the two most significant binary digits of v are "11".
pub fn starts_with_11(v: u64) -> bool {
    v >= 2 && v >> (62 - v.leading_zeros()) == 3
}

/// The no-"10"-prefix property of x^(3) over n in [1, limit].
pub fn check_corollary2(limit: u64) -> ClosedFormReport {
    let fail = first_failure(1, limit, |n| {
        x3_recursive(n).map(starts_with_11).unwrap_or(false)
    });
    report("corollary2", 1, limit, fail)
}

/// x^(4) at n ≡ 1 (mod 4): term ≡ 4 (mod 8) and the +8 index shift adds 16.
pub fn check_corollary4(limit: u64) -> ClosedFormReport {
    let fail = (1..=limit)
        .into_par_iter()
        .filter(|n| n % 4 == 1)
        .filter(|&n| !(x4_closed(n) % 8 == 4 && x4_closed(n + 8) - x4_closed(n) == 16))
        .min();
    report("corollary4", 1, limit, fail)
}

/// The dyadic recursion agrees with the greedy generator over [1, limit].
pub fn check_x3_vs_generator(limit: u64) -> Result<ClosedFormReport> {
    let spec = SequenceSpec::new(PropertyKind::A1Val2, 1, 3)?;
    let run = generate(spec, limit as usize)?;
    let fail = first_failure(1, limit, |n| {
        x3_recursive(n).map(|v| v == run.terms[n as usize - 1]).unwrap_or(false)
    });
    Ok(report("theorem4", 1, limit, fail))
}

/// x_{2^t} = 3 * 2^t for t in [0, t_max].
pub fn check_lemma1(t_max: u32) -> ClosedFormReport {
    let fail = (0..=t_max)
        .find(|&t| x3_recursive(1 << t) != Ok(3 << t))
        .map(u64::from);
    report("lemma1", 0, t_max as u64, fail)
}

/// The Josephus and A004760 routes both reproduce the recursion on [1, limit].
pub fn check_eq25(limit: u64) -> ClosedFormReport {
    let fail = first_failure(1, limit, |n| {
        x3_recursive(n).map(|v| v == x3_via_josephus(n) && v == a004760(n + 1)).unwrap_or(false)
    });
    report("eq25", 1, limit, fail)
}

/// The x^(4) closed form agrees with the greedy generator over [1, limit].
pub fn check_x4_vs_generator(limit: u64) -> Result<ClosedFormReport> {
    let spec = SequenceSpec::new(PropertyKind::A2BitParity, 1, 4)?;
    let run = generate(spec, limit as usize)?;
    let fail = first_failure(1, limit, |n| x4_closed(n) == run.terms[n as usize - 1]);
    Ok(report("lemma4", 1, limit, fail))
}

/// Closed form vs elimination simulation for n in [1, limit].
pub fn check_josephus(limit: u64) -> ClosedFormReport {
    let fail = first_failure(1, limit, |n| josephus(n) == josephus_simulate(n));
    report("josephus", 1, limit, fail)
}
