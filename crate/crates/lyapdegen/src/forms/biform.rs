//! Homogeneous binary forms over exchangeable coefficient rings.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scaled::ScaledC;
use crate::error::{Error, Result};
use crate::scalars::{Rat, SPoly, SRat};

/// Minimal ring interface the form algebra needs.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for SPoly {
    fn zero() -> Self {
        SPoly::zero()
    }
    fn one() -> Self {
        SPoly::one()
    }
    fn is_zero(&self) -> bool {
        SPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for SRat {
    fn zero() -> Self {
        SRat::zero()
    }
    fn one() -> Self {
        SRat::one()
    }
    fn is_zero(&self) -> bool {
        SRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for ScaledC {
    fn zero() -> Self {
        ScaledC::zero()
    }
    fn one() -> Self {
        ScaledC::one()
    }
    fn is_zero(&self) -> bool {
        ScaledC::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        ScaledC::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ScaledC::mul(self, o)
    }
    fn neg(&self) -> Self {
        ScaledC::neg(self)
    }
}

/// Homogeneous binary form of degree e: coefficient of X^{e-i} Y^i at index i.
/// The zero form is representable internally; constructors that promise
/// nonzero forms reject it.
#[derive(Clone, PartialEq, Debug)]
pub struct BiForm<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> BiForm<C> {
    /// Form of degree coeffs.len() - 1. Errors when every coefficient vanishes.
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroForm);
        }
        Ok(BiForm { coeffs })
    }

    pub fn new_unchecked(coeffs: Vec<C>) -> Self {
        BiForm { coeffs }
    }

    pub fn constant(c: C) -> Self {
        BiForm { coeffs: vec![c] }
    }

    /// The coordinate form X.
    pub fn x() -> Self {
        BiForm {
            coeffs: vec![C::one(), C::zero()],
        }
    }

    /// The coordinate form Y.
    pub fn y() -> Self {
        BiForm {
            coeffs: vec![C::zero(), C::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BiForm<D> {
        BiForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<BiForm<D>> {
        Ok(BiForm {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    pub fn mul(&self, o: &BiForm<C>) -> BiForm<C> {
        let n = self.coeffs.len() + o.coeffs.len() - 1;
        let mut v = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        BiForm { coeffs: v }
    }

    pub fn pow(&self, mut e: u64) -> BiForm<C> {
        let mut base = self.clone();
        let mut acc = BiForm::constant(C::one());
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

    /// Phi(u, v) = sum_i c_i u^{e-i} v^i.
    pub fn eval(&self, u: &C, v: &C) -> C {
        let e = self.degree();
        let mut upow = vec![C::one()];
        let mut vpow = vec![C::one()];
        for i in 0..e {
            upow.push(upow[i].mul(u));
            vpow.push(vpow[i].mul(v));
        }
        let mut acc = C::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&upow[e - i].mul(&vpow[i])));
        }
        acc
    }

    /// Splits off monomial factors: self = X^a Y^b rest, with rest divisible by
    /// neither coordinate. (Y divides exactly when the leading X-coefficients
    /// vanish, X when the trailing ones do.)
    pub fn split_monomial(&self) -> (usize, usize, BiForm<C>) {
        assert!(!self.is_zero());
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let trail_zeros = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        let rest: Vec<C> = self.coeffs[lead_zeros..self.coeffs.len() - trail_zeros].to_vec();
        (trail_zeros, lead_zeros, BiForm { coeffs: rest })
    }
}

impl BiForm<SRat> {
    /// Clears denominators: self = poly_form / delta with delta the monic lcm
    /// of the coefficient denominators.
    pub fn clear_denominators(&self) -> (BiForm<SPoly>, SPoly) {
        let mut delta = SPoly::one();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let g = SPoly::gcd(&delta, c.den()).expect("nonzero");
            delta = &delta * &c.den().exact_div(&g).expect("gcd divides");
        }
        let cleared = self.map(|c| {
            if SRat::is_zero(c) {
                SPoly::zero()
            } else {
                &delta.exact_div(c.den()).expect("lcm divisible") * c.num()
            }
        });
        (cleared, delta)
    }

    pub fn to_poly_form(&self) -> Result<BiForm<SPoly>> {
        self.try_map(|c| {
            if c.is_polynomial() {
                Ok(c.num().clone())
            } else {
                Err(Error::ThetaNonPolynomial)
            }
        })
    }
}

impl BiForm<SPoly> {
    pub fn to_srat_form(&self) -> BiForm<SRat> {
        self.map(|c| SRat::from_poly(c.clone()))
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for BiForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            let (xp, yp) = (e - i, i);
            if xp > 0 {
                write!(f, "X{}", if xp > 1 { format!("^{xp}") } else { String::new() })?;
            }
            if yp > 0 {
                write!(f, "Y{}", if yp > 1 { format!("^{yp}") } else { String::new() })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BiFormWire {
    degree: usize,
    coeffs: Vec<SRat>,
}

impl Serialize for BiForm<SRat> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        BiFormWire {
            degree: self.degree(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BiForm<SRat> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = BiFormWire::deserialize(de)?;
        if wire.coeffs.len() != wire.degree + 1 {
            return Err(D::Error::custom(format!(
                "degree {} needs {} coefficients, got {}",
                wire.degree,
                wire.degree + 1,
                wire.coeffs.len()
            )));
        }
        BiForm::new(wire.coeffs).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_i;

    fn f(cs: &[&[i64]]) -> BiForm<SPoly> {
        BiForm::new(cs.iter().map(|c| SPoly::from_i64(c)).collect()).unwrap()
    }

    #[test]
    fn degree_and_product() {
        // (X + Y)(X - Y) = X^2 - Y^2
        let a = f(&[&[1], &[1]]);
        let b = f(&[&[1], &[-1]]);
        assert_eq!(a.mul(&b), f(&[&[1], &[0], &[-1]]));
        assert_eq!(a.mul(&b).degree(), 2);
    }

    #[test]
    fn eval_rat() {
        // sX^2 + Y^2 at (u, v) as polynomials
        let phi = f(&[&[0, 1], &[0], &[1]]);
        let v = phi.eval(&SPoly::from_i64(&[2]), &SPoly::from_i64(&[3]));
        // s*4 + 9
        assert_eq!(v, SPoly::new(vec![rat_i(9), rat_i(4)]));
    }

    #[test]
    fn monomial_split() {
        // 4 X Y^2 * (X + Y): coeffs of X^4..Y^4 = [0, 4, 4, 0] on degree... build directly
        let phi = f(&[&[0], &[0], &[4], &[4], &[0]]); // 4X^2Y^2+4XY^3 = X Y^2 (4X + 4Y) -- degree 4
        let (a, b, rest) = phi.split_monomial();
        assert_eq!((a, b), (1, 2));
        assert_eq!(rest, f(&[&[4], &[4]]));
    }

    #[test]
    fn zero_rejected() {
        assert!(BiForm::<SPoly>::new(vec![SPoly::zero(), SPoly::zero()]).is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let phi = f(&[&[0, 1], &[0], &[1]]).to_srat_form();
        let s = serde_json::to_string(&phi).unwrap();
        let back: BiForm<SRat> = serde_json::from_str(&s).unwrap();
        assert_eq!(phi, back);
    }
}
