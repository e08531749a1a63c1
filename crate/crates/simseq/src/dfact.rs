//! 2-adic valuation of (2n-1)!!^x + ε_n via windowed modular arithmetic:
//! the valuation in question never exceeds val2(2n), so a running product
//! mod 2^64 decides it without big integers.

use crate::{Error, Result};

/// Sign ε_n = (-1)^{(n-1)(n-2)/2}: period 4 with pattern (+,+,-,-) from n=1.
pub fn eps(n: u64) -> i8 {
    assert!(n >= 1, "eps requires n >= 1");
    match n % 4 {
        1 | 2 => 1,
        _ => -1,
    }
}

/// (1 * 3 * 5 * ... * (2n-1))^x reduced mod 2^64 throughout.
pub fn odd_dfact_mod(n: u64, x: u64) -> u64 {
    let mut p = 1u64;
    let mut k = 1u64;
    while k <= 2 * n - 1 {
        p = p.wrapping_mul(k);
        k += 2;
    }
    wrapping_pow_u64(p, x)
}

fn wrapping_pow_u64(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.wrapping_mul(b);
        }
        b = b.wrapping_mul(b);
        e >>= 1;
    }
    acc
}

/// Adds the sign to a 2^64 residue of an odd number.
fn add_eps(residue: u64, eps: i8) -> u64 {
    if eps >= 0 {
        residue.wrapping_add(1)
    } else {
        residue.wrapping_sub(1)
    }
}

/// 2-adic valuation read off a 2^64 window; None when the residue vanished
/// and the window cannot determine it.
pub fn val2_window(residue: u64) -> Option<u32> {
    if residue == 0 {
        None
    } else {
        Some(residue.trailing_zeros())
    }
}

/// n, sign, windowed residue, and the resulting valuation of
/// (2n-1)!!^x + ε_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleFactorialProbe {
    pub n: u64,
    pub x: u64,
    pub eps: i8,
    pub residue: u64,
    /// None means the 2^64 window was exceeded (valuation >= 64).
    pub v: Option<u32>,
}

pub fn probe(n: u64, x: u64) -> Result<DoubleFactorialProbe> {
    if n == 0 {
        return Err(Error::Domain(0, "probe requires n >= 1"));
    }
    if x % 2 == 0 {
        return Err(Error::EvenExponent(x));
    }
    let residue = odd_dfact_mod(n, x);
    let e = eps(n);
    Ok(DoubleFactorialProbe {
        n,
        x,
        eps: e,
        residue,
        v: val2_window(add_eps(residue, e)),
    })
}

/// Exact value of ((2n-1)!! + ε_n) / 2; capacity error once the double
/// factorial no longer fits 64 bits (n > 17).
pub fn seq3_term(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain(0, "seq3_term requires n >= 1"));
    }
    let mut p = 1u64;
    let mut k = 1u64;
    while k <= 2 * n - 1 {
        p = p.checked_mul(k).ok_or(Error::Capacity("seq3_term"))?;
        k += 2;
    }
    let sum = if eps(n) >= 0 { p + 1 } else { p - 1 };
    Ok(sum / 2)
}

/// val2((2n-1)!! + ε_n) == val2(2n).
pub fn theorem1_check(n: u64) -> bool {
    probe(n, 1).map(|p| p.v == Some(n.trailing_zeros() + 1)).unwrap_or(false)
}

/// val2((2n-1)!!^x + ε_n) == val2(2n) for odd x.
pub fn corollary1_check(n: u64, x: u64) -> Result<bool> {
    if x % 2 == 0 {
        return Err(Error::EvenExponent(x));
    }
    Ok(probe(n, x)?.v == Some(n.trailing_zeros() + 1))
}

/// Incremental sweep sharing one running product: returns the first n in
/// [1, n_max] where the valuation claim fails for some exponent in `xs`.
pub fn sweep(n_max: u64, xs: &[u64]) -> Result<Option<u64>> {
    for &x in xs {
        if x % 2 == 0 {
            return Err(Error::EvenExponent(x));
        }
    }
    let mut p = 1u64;
    for n in 1..=n_max {
        p = p.wrapping_mul(2 * n - 1);
        let want = Some(n.trailing_zeros() + 1);
        for &x in xs {
            if val2_window(add_eps(wrapping_pow_u64(p, x), eps(n))) != want {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}
