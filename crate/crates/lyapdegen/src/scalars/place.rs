//! Places of the coefficient field and of Q(s), with the log-scale norms used everywhere.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use super::rat::{is_prime, ln_abs, ln_big, log_abs_p, Rat};
use super::spoly::SPoly;
use super::srat::SRat;
use crate::error::{Error, Result};

/// An absolute value class: archimedean, p-adic, s-adic at a monic modulus, or the
/// degree valuation at s = infinity.
#[derive(Clone, PartialEq, Debug)]
pub enum Place {
    Arch,
    Prime(BigUint),
    SAdic(SPoly),
    SInf,
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        let p = BigUint::from(p);
        if !is_prime(&p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Place::Prime(p))
    }

    /// s-adic place at a monic nonconstant modulus. Irreducibility is the caller's
    /// contract; the valuation arithmetic only needs monic and nonconstant.
    pub fn s_adic(m: SPoly) -> Result<Place> {
        if !m.is_monic() || m.degree().map_or(true, |d| d == 0) {
            return Err(Error::invalid("s-adic modulus must be monic of degree >= 1"));
        }
        Ok(Place::SAdic(m))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Arch => write!(f, "arch"),
            Place::Prime(p) => write!(f, "p={p}"),
            Place::SAdic(m) => write!(f, "beta:{m}"),
            Place::SInf => write!(f, "s-inf"),
        }
    }
}

/// Value of a log-scale norm: archimedean and p-adic norms are floating reals,
/// the s-side valuations are exact integers.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum LogNorm {
    Real(f64),
    Exact(i64),
}

impl LogNorm {
    pub fn to_f64(self) -> f64 {
        match self {
            LogNorm::Real(x) => x,
            LogNorm::Exact(n) => n as f64,
        }
    }
}

/// log ||x||_v for a polynomial in s.
///
/// - archimedean: log of the maximal coefficient modulus;
/// - prime p: log of the maximal p-adic coefficient norm;
/// - s-adic at m: -ord_m(x), exact;
/// - s-infinity: deg(x), exact.
pub fn log_norm(x: &SPoly, v: &Place) -> Result<LogNorm> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    match v {
        Place::Arch => Ok(LogNorm::Real(
            x.coeffs().iter().map(ln_abs).fold(f64::NEG_INFINITY, f64::max),
        )),
        Place::Prime(p) => {
            let mut best = f64::NEG_INFINITY;
            for c in x.coeffs() {
                if c.is_zero() {
                    continue;
                }
                best = best.max(log_abs_p(c, p)?);
            }
            Ok(LogNorm::Real(best))
        }
        Place::SAdic(m) => Ok(LogNorm::Exact(-(x.ord_at(m)? as i64))),
        Place::SInf => Ok(LogNorm::Exact(x.degree_checked()? as i64)),
    }
}

/// log ||x||_v extended to rational functions by num minus den.
pub fn log_norm_srat(x: &SRat, v: &Place) -> Result<LogNorm> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let n = log_norm(x.num(), v)?;
    let d = log_norm(x.den(), v)?;
    Ok(match (n, d) {
        (LogNorm::Exact(a), LogNorm::Exact(b)) => LogNorm::Exact(a - b),
        (a, b) => LogNorm::Real(a.to_f64() - b.to_f64()),
    })
}

/// log|a|_v of a nonzero rational scalar at a place of Q.
pub fn log_abs_rat(a: &Rat, v: &Place) -> Result<f64> {
    if a.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    match v {
        Place::Arch => Ok(ln_abs(a)),
        Place::Prime(p) => log_abs_p(a, p),
        Place::SAdic(_) | Place::SInf => Ok(0.0),
    }
}

pub fn ln_prime(p: &BigUint) -> f64 {
    ln_big(&BigInt::from_biguint(Sign::Plus, p.clone()))
}

#[cfg(test)]
mod tests {
    use super::super::rat::{prime_support, rat, rat_i};
    use super::*;
    use num_traits::Zero;

    #[test]
    fn log_norm_examples() {
        // || 3s^2 - 5s + 1/2 || = 5
        let p = SPoly::new(vec![rat(1, 2), rat_i(-5), rat_i(3)]);
        let LogNorm::Real(v) = log_norm(&p, &Place::Arch).unwrap() else {
            panic!()
        };
        assert!((v - 5f64.ln()).abs() < 1e-12);

        // || (1/6)s + 4 ||_2 = 2
        let p = SPoly::new(vec![rat_i(4), rat(1, 6)]);
        let LogNorm::Real(v) = log_norm(&p, &Place::prime(2).unwrap()).unwrap() else {
            panic!()
        };
        assert!((v - 2f64.ln()).abs() < 1e-12);

        // (s-1)^2 (s+2) at the place (s-1): -ord = -2
        let m = SPoly::from_i64(&[-1, 1]);
        let q = &(&m * &m) * &SPoly::from_i64(&[2, 1]);
        assert_eq!(
            log_norm(&q, &Place::s_adic(m).unwrap()).unwrap(),
            LogNorm::Exact(-2)
        );

        // s-infinity on (s^2+1)/s
        let x = SRat::new(SPoly::from_i64(&[1, 0, 1]), SPoly::s()).unwrap();
        assert_eq!(log_norm_srat(&x, &Place::SInf).unwrap(), LogNorm::Exact(1));

        assert!(log_norm(&SPoly::zero(), &Place::SInf).is_err());
    }

    #[test]
    fn product_formula_on_rationals() {
        let samples = [rat(2, 3), rat(-360, 77), rat_i(17), rat(1, 1024)];
        for a in samples {
            if a.is_zero() {
                continue;
            }
            let mut total = log_abs_rat(&a, &Place::Arch).unwrap();
            for p in prime_support(&[a.clone()]) {
                total += log_abs_rat(&a, &Place::Prime(p)).unwrap();
            }
            assert!(total.abs() < 1e-9, "product formula violated for {a}");
        }
    }

    #[test]
    fn place_validation() {
        assert!(Place::prime(6).is_err());
        assert!(Place::s_adic(SPoly::from_i64(&[2, 2])).is_err());
        assert!(Place::s_adic(SPoly::from_i64(&[7])).is_err());
        assert!(Place::s_adic(SPoly::from_i64(&[-1, 1])).is_ok());
    }
}
