//! Complex scalars with a separated power-of-two exponent, so specializations at
//! astronomically large |t| and products of hundreds of factors never overflow.

use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::scalars::{ln_big, Rat};

const LN2: f64 = std::f64::consts::LN_2;

/// mantissa * 2^exp with |mantissa| in [1/2, 2) (or exactly zero).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledC {
    mant: Complex64,
    exp: i64,
}

impl ScaledC {
    pub fn zero() -> Self {
        ScaledC {
            mant: Complex64::new(0.0, 0.0),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        ScaledC::from_f64(1.0)
    }

    pub fn new(mant: Complex64, exp: i64) -> Self {
        ScaledC { mant, exp }.normalized()
    }

    pub fn from_f64(x: f64) -> Self {
        ScaledC::new(Complex64::new(x, 0.0), 0)
    }

    pub fn from_complex(z: Complex64) -> Self {
        ScaledC::new(z, 0)
    }

    pub fn from_rat(x: &Rat) -> Self {
        if num_traits::Zero::is_zero(x) {
            return ScaledC::zero();
        }
        // split num/den into (top bits, shift) to survive huge integers
        let split = |n: &num_bigint::BigInt| -> (f64, i64) {
            let bits = n.magnitude().bits();
            if bits <= 52 {
                (n.to_f64().unwrap(), 0)
            } else {
                let shift = (bits - 52) as i64;
                let top = (n >> shift).to_f64().unwrap();
                (top, shift)
            }
        };
        let (nm, ne) = split(x.numer());
        let (dm, de) = split(x.denom());
        ScaledC::new(Complex64::new(nm / dm, 0.0), ne - de)
    }

    fn normalized(mut self) -> Self {
        let n2 = self.mant.norm_sqr();
        if n2 == 0.0 || !n2.is_finite() {
            if !n2.is_finite() {
                // renormalize an overflowing mantissa through its components
                let scale = self.mant.re.abs().max(self.mant.im.abs());
                let k = scale.log2().floor() as i64;
                self.mant = Complex64::new(
                    self.mant.re * 2f64.powi(-k as i32),
                    self.mant.im * 2f64.powi(-k as i32),
                );
                self.exp += k;
                return self.normalized();
            }
            return ScaledC::zero();
        }
        // put |mant| into [1/2, 2)
        let k = (n2.log2() / 2.0).floor() as i64;
        if k != 0 {
            self.mant *= 2f64.powi(-(k.clamp(-1060, 1060)) as i32);
            self.exp += k;
        }
        let n = self.mant.norm();
        if n >= 2.0 {
            self.mant *= 0.5;
            self.exp += 1;
        } else if n < 0.5 {
            self.mant *= 2.0;
            self.exp -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mant.norm_sqr() == 0.0
    }

    pub fn mul(&self, o: &ScaledC) -> ScaledC {
        if self.is_zero() || o.is_zero() {
            return ScaledC::zero();
        }
        ScaledC::new(self.mant * o.mant, self.exp + o.exp)
    }

    pub fn add(&self, o: &ScaledC) -> ScaledC {
        if self.is_zero() {
            return *o;
        }
        if o.is_zero() {
            return *self;
        }
        let (big, small) = if self.exp >= o.exp { (self, o) } else { (o, self) };
        let diff = big.exp - small.exp;
        if diff > 1060 {
            return *big;
        }
        let scaled = small.mant * 2f64.powi(-(diff as i32));
        ScaledC::new(big.mant + scaled, big.exp)
    }

    pub fn sub(&self, o: &ScaledC) -> ScaledC {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> ScaledC {
        ScaledC {
            mant: -self.mant,
            exp: self.exp,
        }
    }

    pub fn recip(&self) -> ScaledC {
        assert!(!self.is_zero(), "reciprocal of zero");
        ScaledC::new(self.mant.inv(), -self.exp)
    }

    pub fn div(&self, o: &ScaledC) -> ScaledC {
        self.mul(&o.recip())
    }

    pub fn powi(&self, mut e: u64) -> ScaledC {
        let mut base = *self;
        let mut acc = ScaledC::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// One of the d-th roots (principal); callers enumerate the others by unit rotations.
    pub fn nth_root(&self, d: u32) -> ScaledC {
        if self.is_zero() {
            return ScaledC::zero();
        }
        let q = self.exp.div_euclid(d as i64);
        let r = self.exp.rem_euclid(d as i64);
        let m = self.mant * 2f64.powi(r as i32);
        ScaledC::new(m.powf(1.0 / d as f64), q)
    }

    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.mant.norm().ln() + self.exp as f64 * LN2
    }

    pub fn arg(&self) -> f64 {
        self.mant.arg()
    }

    /// Lossy; may overflow to infinity for extreme exponents.
    pub fn to_complex(&self) -> Complex64 {
        self.mant * 2f64.powi(self.exp.clamp(-1060, 1060) as i32)
    }

    /// Ratio as a plain complex number (safe whenever the magnitudes are comparable).
    pub fn ratio_to(&self, o: &ScaledC) -> Complex64 {
        self.div(o).to_complex()
    }
}

impl fmt::Display for ScaledC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

/// Horner evaluation of an s-polynomial at a scaled complex point.
pub fn eval_spoly_scaled(p: &crate::scalars::SPoly, t: &ScaledC) -> ScaledC {
    let mut acc = ScaledC::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(t).add(&ScaledC::from_rat(c));
    }
    acc
}

/// ln of a big-integer-free magnitude helper for tests.
pub fn ln_abs_rat(x: &Rat) -> f64 {
    if num_traits::Zero::is_zero(x) {
        f64::NEG_INFINITY
    } else {
        ln_big(x.numer()) - ln_big(x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_i, SPoly};

    #[test]
    fn normalization_invariant() {
        let x = ScaledC::new(Complex64::new(3.0e200, -4.0e200), 0);
        let n = x.mant.norm();
        assert!((0.5..2.0).contains(&n));
        assert!((x.ln_abs() - (5.0e200f64).ln()).abs() < 1e-9);
    }

    #[test]
    fn arithmetic_no_overflow() {
        let big = ScaledC::from_f64(1e300);
        let sq = big.mul(&big).mul(&big); // 1e900, unrepresentable in f64
        assert!((sq.ln_abs() - 900.0 * 10f64.ln()).abs() < 1e-6);
        let tiny = sq.recip();
        assert!((sq.mul(&tiny).ln_abs()).abs() < 1e-12);
        let sum = big.add(&ScaledC::from_f64(1.0));
        assert!((sum.ln_abs() - 1e300f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn powers_and_roots() {
        let x = ScaledC::from_f64(2.0);
        assert!((x.powi(100).ln_abs() - 100.0 * 2f64.ln()).abs() < 1e-9);
        let r = x.powi(9).nth_root(3);
        assert!((r.ln_abs() - 3.0 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn from_rat_huge() {
        let x = Rat::new(
            num_bigint::BigInt::from(10).pow(120),
            num_bigint::BigInt::from(3),
        );
        let s = ScaledC::from_rat(&x);
        assert!((s.ln_abs() - (120.0 * 10f64.ln() - 3f64.ln())).abs() < 1e-9);
    }

    #[test]
    fn horner() {
        // (s^2 + 1/2) at t = 10
        let p = SPoly::new(vec![rat(1, 2), rat_i(0), rat_i(1)]);
        let v = eval_spoly_scaled(&p, &ScaledC::from_f64(10.0));
        assert!((v.ln_abs() - 100.5f64.ln()).abs() < 1e-12);
    }
}
