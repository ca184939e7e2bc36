//! Rational functions in s: the closure of Q[s] under the divisions arising in pushforwards.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::Rat;
use super::spoly::SPoly;
use crate::error::{Error, Result};

/// num / den with den monic and gcd(num, den) = 1. All valuations extend by num minus den.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SRat {
    num: SPoly,
    den: SPoly,
}

impl SRat {
    pub fn new(num: SPoly, den: SPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("zero denominator in SRat"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: SPoly, den: SPoly) -> Self {
        if num.is_zero() {
            return SRat {
                num: SPoly::zero(),
                den: SPoly::one(),
            };
        }
        let g = SPoly::gcd(&num, &den).expect("nonzero inputs");
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        SRat { num, den }
    }

    pub fn zero() -> Self {
        SRat {
            num: SPoly::zero(),
            den: SPoly::one(),
        }
    }

    pub fn one() -> Self {
        SRat {
            num: SPoly::one(),
            den: SPoly::one(),
        }
    }

    pub fn from_poly(p: SPoly) -> Self {
        SRat {
            num: p,
            den: SPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        SRat::from_poly(SPoly::constant(c))
    }

    pub fn num(&self) -> &SPoly {
        &self.num
    }

    pub fn den(&self) -> &SPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// deg num - deg den: the s-infinity valuation value log||.||_inf.
    pub fn deg_value(&self) -> Result<i64> {
        let n = self.num.degree_checked()? as i64;
        Ok(n - self.den.degree().unwrap() as i64)
    }

    /// ord at monic m, extended multiplicatively: ord(num) - ord(den).
    pub fn ord_at(&self, m: &SPoly) -> Result<i64> {
        let n = self.num.ord_at(m)? as i64;
        let d = self.den.ord_at(m).expect("den nonzero") as i64;
        Ok(n - d)
    }

    pub fn recip(&self) -> Result<SRat> {
        if self.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        SRat::new(self.den.clone(), self.num.clone())
    }

    /// Evaluation at a rational point; errors when the denominator vanishes there.
    pub fn eval(&self, t: &Rat) -> Result<Rat> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleAt(super::rat::format_rat(t)));
        }
        Ok(self.num.eval(t) / d)
    }

    pub fn pow(&self, e: u32) -> SRat {
        SRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl From<SPoly> for SRat {
    fn from(p: SPoly) -> Self {
        SRat::from_poly(p)
    }
}

impl Add for &SRat {
    type Output = SRat;
    fn add(self, rhs: &SRat) -> SRat {
        SRat::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &SRat {
    type Output = SRat;
    fn sub(self, rhs: &SRat) -> SRat {
        SRat::reduce(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &SRat {
    type Output = SRat;
    fn mul(self, rhs: &SRat) -> SRat {
        SRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &SRat {
    type Output = SRat;
    fn neg(self) -> SRat {
        SRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Zero for SRat {
    fn zero() -> Self {
        SRat::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for SRat {
    type Output = SRat;
    fn add(self, rhs: SRat) -> SRat {
        &self + &rhs
    }
}

impl fmt::Display for SRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for SRat {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.num, &self.den).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SRat {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let (num, den) = <(SPoly, SPoly)>::deserialize(de)?;
        SRat::new(num, den).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat_i;
    use super::*;

    #[test]
    fn reduction_and_valuations() {
        // (s^2 - s) / (s^2) reduces to (s - 1)/s
        let x = SRat::new(SPoly::from_i64(&[0, -1, 1]), SPoly::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(x.num(), &SPoly::from_i64(&[-1, 1]));
        assert_eq!(x.den(), &SPoly::from_i64(&[0, 1]));
        assert_eq!(x.deg_value().unwrap(), 0);
        assert_eq!(x.ord_at(&SPoly::from_i64(&[0, 1])).unwrap(), -1);
        assert_eq!(x.ord_at(&SPoly::from_i64(&[-1, 1])).unwrap(), 1);
    }

    #[test]
    fn arithmetic() {
        let s = SRat::from_poly(SPoly::s());
        let inv = s.recip().unwrap();
        assert_eq!(&s * &inv, SRat::one());
        let sum = &s + &inv; // (s^2 + 1)/s
        assert_eq!(sum.num(), &SPoly::from_i64(&[1, 0, 1]));
        assert_eq!(sum.eval(&rat_i(2)).unwrap(), super::super::rat::rat(5, 2));
        assert!(sum.eval(&rat_i(0)).is_err());
    }
}
