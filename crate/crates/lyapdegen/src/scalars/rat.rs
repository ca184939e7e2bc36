//! Arbitrary-precision rationals and the heights / absolute values attached to them.
//!
//! All places of Q carry weight 1, so the product formula reads
//! `log|a| + sum_p log|a|_p = 0` without any normalization factors.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "3", "-5/2", "0" style strings.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
    let den: BigInt = d
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::invalid(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Natural log of a positive big integer, exponent-safe for huge values.
pub fn ln_big(n: &BigInt) -> f64 {
    let mag = n.magnitude();
    if mag.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = mag.bits();
    if bits <= 52 {
        return (mag.to_f64().unwrap()).ln();
    }
    // top 64 bits as mantissa, remainder as a power of two
    let shift = bits - 52;
    let top = (mag >> shift).to_f64().unwrap();
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}

/// Natural log of |x|; -inf for x = 0.
pub fn ln_abs(x: &Rat) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_big(x.numer()) - ln_big(x.denom())
}

/// h(x) = log max(|num|, den), the Weil height of [x : 1].
pub fn height(x: &Rat) -> f64 {
    let n = x.numer().abs();
    let d = x.denom().clone();
    ln_big(&n.max(d))
}

/// e^{-h(a)} as an exact rational: a guaranteed floor for |a|_v at every place.
pub fn liouville_floor(a: &Rat) -> Result<Rat> {
    if a.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let n = a.numer().abs();
    let d = a.denom().clone();
    Ok(Rat::new(BigInt::one(), n.max(d)))
}

/// Trial-division factorization. Inputs are human-scale by contract.
pub fn factor_trial(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut m = n.clone();
    let two = BigUint::from(2u32);
    let mut e = 0u32;
    while (&m % &two).is_zero() {
        m /= &two;
        e += 1;
    }
    if e > 0 {
        out.insert(two, e);
    }
    let mut p = BigUint::from(3u32);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            out.insert(p.clone(), e);
        }
        p += 2u32;
    }
    if !m.is_one() {
        out.insert(m, 1);
    }
    out
}

pub fn is_prime(p: &BigUint) -> bool {
    if *p < BigUint::from(2u32) {
        return false;
    }
    let f = factor_trial(p);
    f.len() == 1 && f.values().next() == Some(&1)
}

/// p-adic valuation of a nonzero rational.
pub fn ord_p(x: &Rat, p: &BigUint) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let pi = BigInt::from_biguint(Sign::Plus, p.clone());
    let count = |mut n: BigInt| -> i64 {
        let mut c = 0;
        while (&n % &pi).is_zero() {
            n /= &pi;
            c += 1;
        }
        c
    };
    Ok(count(x.numer().abs()) - count(x.denom().clone()))
}

/// |x|_p = p^{-ord_p(x)}, exact.
pub fn abs_p(x: &Rat, p: &BigUint) -> Result<Rat> {
    let e = ord_p(x, p)?;
    let pi = BigInt::from_biguint(Sign::Plus, p.clone());
    let pow = pi.pow(e.unsigned_abs() as u32);
    Ok(if e >= 0 {
        Rat::new(BigInt::one(), pow)
    } else {
        Rat::from_integer(pow)
    })
}

/// log|x|_p = -ord_p(x) log p.
pub fn log_abs_p(x: &Rat, p: &BigUint) -> Result<f64> {
    let e = ord_p(x, p)?;
    Ok(-(e as f64) * ln_big(&BigInt::from_biguint(Sign::Plus, p.clone())))
}

/// Primes appearing in numerators or denominators of the given rationals.
pub fn prime_support(coeffs: &[Rat]) -> Vec<BigUint> {
    let mut set = std::collections::BTreeSet::new();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        for p in factor_trial(c.numer().magnitude()).into_keys() {
            set.insert(p);
        }
        for p in factor_trial(c.denom().magnitude()).into_keys() {
            set.insert(p);
        }
    }
    set.into_iter().collect()
}

/// h^+ of a coefficient tuple: sum over the archimedean place and all primes of
/// log^+ of the maximal coefficient norm. Only denominator primes contribute.
pub fn hplus_of_coeffs(coeffs: &[Rat]) -> f64 {
    assert!(!coeffs.is_empty(), "hplus of empty coefficient list");
    let arch = coeffs
        .iter()
        .map(ln_abs)
        .fold(f64::NEG_INFINITY, f64::max)
        .max(0.0);
    let mut finite = 0.0;
    for p in prime_support(coeffs) {
        let mut worst = 0i64;
        for c in coeffs {
            if c.is_zero() {
                continue;
            }
            worst = worst.max(-ord_p(c, &p).unwrap());
        }
        finite += worst as f64 * ln_big(&BigInt::from_biguint(Sign::Plus, p));
    }
    arch + finite
}
