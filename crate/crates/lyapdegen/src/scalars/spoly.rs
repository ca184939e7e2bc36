//! Exact univariate polynomials over Q in the family parameter `s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::{format_rat, parse_rat, Rat};
use crate::error::{Error, Result};

/// Polynomial in s with rational coefficients, ascending powers, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient vector (degree "-inf").
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SPoly {
    coeffs: Vec<Rat>,
}

impl SPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        SPoly { coeffs }
    }

    pub fn zero() -> Self {
        SPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        SPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        SPoly::new(vec![c])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        SPoly::new(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    /// The monomial c s^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        SPoly::new(v)
    }

    /// The variable s itself.
    pub fn s() -> Self {
        SPoly::monomial(Rat::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg(0) treated as an error (used by valuations).
    pub fn degree_checked(&self) -> Result<usize> {
        self.degree().ok_or(Error::ValuationOfZero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn scale(&self, c: &Rat) -> SPoly {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> SPoly {
        if self.is_zero() {
            return SPoly::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> SPoly {
        if self.coeffs.len() <= 1 {
            return SPoly::zero();
        }
        SPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> SPoly {
        let mut base = self.clone();
        let mut acc = SPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over Q: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &SPoly) -> (SPoly, SPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let lc = div.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (SPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in div.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = &rem[idx] - &(dc * &c);
            }
            q[k - dd] = c;
        }
        (SPoly::new(q), SPoly::new(rem))
    }

    /// Exact division; None when the remainder is nonzero.
    pub fn exact_div(&self, div: &SPoly) -> Option<SPoly> {
        let (q, r) = self.divrem(div);
        r.is_zero().then_some(q)
    }

    /// Order of vanishing along the monic polynomial m (multiplicity of m as a factor).
    pub fn ord_at(&self, m: &SPoly) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        assert!(
            m.degree().map_or(false, |d| d >= 1),
            "ord_at requires a nonconstant modulus"
        );
        let mut ord = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(m) {
            ord += 1;
            cur = q;
        }
        Ok(ord)
    }

    /// Positive rational c such that self / c has coprime integer coefficients.
    pub fn content_rat(&self) -> Rat {
        assert!(!self.is_zero(), "content of zero polynomial");
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Integer-coefficient primitive part together with the rational content.
    pub fn primitive_parts(&self) -> (Rat, SPoly) {
        let c = self.content_rat();
        (c.clone(), self.scale(&c.recip()))
    }

    /// Monic gcd over Q[s] via a primitive PRS on integer parts.
    pub fn gcd(a: &SPoly, b: &SPoly) -> Result<SPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if a.is_zero() {
            return Ok(b.monic());
        }
        if b.is_zero() {
            return Ok(a.monic());
        }
        let (_, mut p) = a.primitive_parts();
        let (_, mut q) = b.primitive_parts();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let (_, r) = p.divrem(&q);
            p = q;
            q = if r.is_zero() {
                SPoly::zero()
            } else {
                r.primitive_parts().1
            };
        }
        Ok(p.monic())
    }

    /// Monic gcd of a nonempty list (entries may individually be zero).
    pub fn gcd_many<'a>(ps: impl IntoIterator<Item = &'a SPoly>) -> Result<SPoly> {
        let mut acc = SPoly::zero();
        let mut any = false;
        for p in ps {
            any = true;
            if acc.is_one() {
                return Ok(acc);
            }
            if p.is_zero() {
                continue;
            }
            acc = if acc.is_zero() {
                p.monic()
            } else {
                SPoly::gcd(&acc, p)?
            };
        }
        if !any || acc.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        Ok(acc)
    }

    /// Square-free part (radical) of a nonzero polynomial: self / gcd(self, self').
    pub fn radical(&self) -> Result<SPoly> {
        if self.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        if self.is_constant() {
            return Ok(SPoly::one());
        }
        let g = SPoly::gcd(self, &self.derivative())?;
        Ok(self.exact_div(&g).expect("gcd divides").monic())
    }

    /// True when every irreducible factor of self divides `modulus`.
    pub fn factors_within(&self, modulus: &SPoly) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        let mut rest = self.monic();
        while !rest.is_constant() {
            let g = SPoly::gcd(&rest, modulus)?;
            if g.is_constant() {
                return Ok(false);
            }
            rest = rest.exact_div(&g).expect("gcd divides").monic();
        }
        Ok(true)
    }

    /// Cauchy bound 1 + max |c_i / c_lead|: every complex root has modulus <= this.
    pub fn root_bound(&self) -> Result<Rat> {
        let d = self.degree().ok_or(Error::NoRoots)?;
        if d == 0 {
            return Err(Error::NoRoots);
        }
        let lead = self.leading();
        let mut m = Rat::zero();
        for c in &self.coeffs[..d] {
            let q = (c / &lead).abs();
            if q > m {
                m = q;
            }
        }
        Ok(m + Rat::one())
    }

    pub fn parse(strs: &[&str]) -> Result<SPoly> {
        Ok(SPoly::new(
            strs.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?,
        ))
    }
}

impl Add for &SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        SPoly::new(v)
    }
}

impl Sub for &SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        SPoly::new(v)
    }
}

impl Mul for &SPoly {
    type Output = SPoly;
    fn mul(self, rhs: &SPoly) -> SPoly {
        if self.is_zero() || rhs.is_zero() {
            return SPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        SPoly::new(v)
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        SPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sgn = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sgn} ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{}", format_rat(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for SPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(de)?;
        let coeffs = v
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(SPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::{rat, rat_i};
    use super::*;

    fn p(cs: &[i64]) -> SPoly {
        SPoly::from_i64(cs)
    }

    #[test]
    fn gcd_examples() {
        // gcd(s^2 - s, s - 1) = s - 1
        assert_eq!(
            SPoly::gcd(&p(&[0, -1, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        // gcd(s^2 + 1, s) = 1
        assert_eq!(SPoly::gcd(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap(), p(&[1]));
        assert!(matches!(
            SPoly::gcd(&SPoly::zero(), &SPoly::zero()),
            Err(Error::GcdOfZeros)
        ));
    }

    #[test]
    fn content_example() {
        // content(4s^2 + 2s) = 2, primitive part 2s^2 + s
        let (c, prim) = p(&[0, 2, 4]).primitive_parts();
        assert_eq!(c, rat_i(2));
        assert_eq!(prim, p(&[0, 1, 2]));
    }

    #[test]
    fn ord_examples() {
        // (s-1)^2 (s+2) has ord 2 at s-1
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(q.ord_at(&p(&[-1, 1])).unwrap(), 2);
        assert_eq!(q.ord_at(&p(&[0, 1])).unwrap(), 0);
    }

    #[test]
    fn root_bound_examples() {
        assert_eq!(p(&[-4, 0, 1]).root_bound().unwrap(), rat_i(5));
        assert_eq!(p(&[-10, 1]).root_bound().unwrap(), rat_i(11));
        assert_eq!(p(&[8, 0, 2]).root_bound().unwrap(), rat_i(5));
        assert!(p(&[3]).root_bound().is_err());
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[1, 2, 0, 5, -3]);
        let b = p(&[2, 0, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn radical_and_factors_within() {
        let m = p(&[-1, 1]); // s - 1
        let sq = &m * &m;
        assert_eq!(sq.radical().unwrap(), m);
        assert!(sq.factors_within(&m).unwrap());
        let other = &sq * &p(&[2, 1]);
        assert!(!other.factors_within(&m).unwrap());
    }

    #[test]
    fn serde_roundtrip() {
        let a = SPoly::new(vec![rat(1, 2), rat_i(0), rat_i(3)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["1/2","0","3"]"#);
        let b: SPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 1]).to_string(), "s - 1");
        assert_eq!(
            SPoly::new(vec![rat(1, 2), rat_i(0), rat_i(3)]).to_string(),
            "3s^2 + 1/2"
        );
    }
}
