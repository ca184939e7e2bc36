//! Homogeneous binary forms with exact or scaled-complex coefficients, together
//! with specialization, content extraction, and the size functionals deg_s,
//! deg_X, log||.|| and Theta.

mod biform;
mod scaled;

pub use biform::{BiForm, Coeff};
pub use scaled::{eval_spoly_scaled, ScaledC};

use crate::error::{Error, Result};
use crate::scalars::{
    format_rat, hplus_of_coeffs, ln_abs, log_norm_srat, LogNorm, Place, Rat, SPoly, SRat,
};

/// Coefficientwise evaluation at a rational parameter value; exact.
pub fn specialize(phi: &BiForm<SRat>, t: &Rat) -> Result<BiForm<Rat>> {
    let out = phi.try_map(|c| {
        if SRat::is_zero(c) {
            return Ok(Rat::from_integer(0.into()));
        }
        let den = c.den().eval(t);
        if num_traits::Zero::is_zero(&den) {
            return Err(Error::PoleAt(format_rat(t)));
        }
        Ok(c.num().eval(t) / den)
    })?;
    if out.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(out)
}

/// Coefficientwise evaluation at a complex parameter value in scaled arithmetic.
pub fn specialize_complex(phi: &BiForm<SRat>, t: &ScaledC) -> Result<BiForm<ScaledC>> {
    let out = phi.try_map(|c| {
        if SRat::is_zero(c) {
            return Ok(ScaledC::zero());
        }
        let den = eval_spoly_scaled(c.den(), t);
        if den.is_zero() {
            return Err(Error::PoleAt(format!("{:.6e}", t.to_complex())));
        }
        Ok(eval_spoly_scaled(c.num(), t).div(&den))
    })?;
    if out.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(out)
}

/// The size record: degrees, archimedean log norm, and Theta when defined.
#[derive(Clone, Debug)]
pub struct SizeFunctionals {
    pub deg_x: usize,
    pub deg_s: i64,
    pub log_norm_arch: f64,
    /// max{1, h^+ + deg_s + deg_X}; only defined for polynomial coefficients.
    pub theta: Option<f64>,
}

/// deg_s of a form with rational-function coefficients: max over nonzero
/// coefficients of (num degree - den degree).
pub fn deg_s(phi: &BiForm<SRat>) -> Result<i64> {
    let mut best: Option<i64> = None;
    for c in phi.coeffs() {
        if SRat::is_zero(c) {
            continue;
        }
        let v = c.deg_value()?;
        best = Some(best.map_or(v, |b| b.max(v)));
    }
    best.ok_or(Error::ZeroForm)
}

/// log||Phi|| at a place, maximized over nonzero coefficients.
pub fn log_norm_form(phi: &BiForm<SRat>, v: &Place) -> Result<f64> {
    let mut best = f64::NEG_INFINITY;
    let mut seen = false;
    for c in phi.coeffs() {
        if SRat::is_zero(c) {
            continue;
        }
        seen = true;
        best = best.max(log_norm_srat(c, v)?.to_f64());
    }
    if !seen {
        return Err(Error::ZeroForm);
    }
    Ok(best)
}

/// Exact integer log norm at a valuation place (s-adic or s-infinity).
pub fn log_norm_form_exact(phi: &BiForm<SRat>, v: &Place) -> Result<i64> {
    let mut best: Option<i64> = None;
    for c in phi.coeffs() {
        if SRat::is_zero(c) {
            continue;
        }
        match log_norm_srat(c, v)? {
            LogNorm::Exact(n) => best = Some(best.map_or(n, |b| b.max(n))),
            LogNorm::Real(_) => return Err(Error::invalid("place is not a valuation")),
        }
    }
    best.ok_or(Error::ZeroForm)
}

/// h^+ of a polynomial-coefficient form: the height of the full rational
/// coefficient list of the form as a polynomial in X, Y and s.
pub fn hplus_form(phi: &BiForm<SPoly>) -> f64 {
    let mut flat: Vec<Rat> = Vec::new();
    for c in phi.coeffs() {
        flat.extend(c.coeffs().iter().cloned());
    }
    if flat.is_empty() {
        return 0.0;
    }
    hplus_of_coeffs(&flat)
}

pub fn size_functionals(phi: &BiForm<SRat>) -> Result<SizeFunctionals> {
    if phi.is_zero() {
        return Err(Error::ZeroForm);
    }
    let deg_x = phi.degree();
    let ds = deg_s(phi)?;
    let arch = log_norm_form(phi, &Place::Arch)?;
    let theta = phi.to_poly_form().ok().map(|p| {
        let h = hplus_form(&p);
        (h + ds as f64 + deg_x as f64).max(1.0)
    });
    Ok(SizeFunctionals {
        deg_x,
        deg_s: ds,
        log_norm_arch: arch,
        theta,
    })
}

/// Theta(Phi) = max{1, h^+ + deg_s + deg_X}; errors on non-polynomial coefficients.
pub fn theta(phi: &BiForm<SRat>) -> Result<f64> {
    size_functionals(phi)?
        .theta
        .ok_or(Error::ThetaNonPolynomial)
}

/// Splits Phi = c * alpha * primitive with alpha the monic gcd of the
/// coefficients and primitive of content 1 (coprime integer coefficients).
pub fn content_split(phi: &BiForm<SPoly>) -> Result<(SPoly, BiForm<SPoly>, Rat)> {
    if phi.is_zero() {
        return Err(Error::ZeroForm);
    }
    let alpha = SPoly::gcd_many(phi.coeffs().iter())?;
    let reduced = phi.map(|c| {
        if c.is_zero() {
            SPoly::zero()
        } else {
            c.exact_div(&alpha).expect("gcd divides")
        }
    });
    let mut content = Rat::from_integer(0.into());
    for c in reduced.coeffs() {
        if c.is_zero() {
            continue;
        }
        let cc = c.content_rat();
        content = if num_traits::Zero::is_zero(&content) {
            cc
        } else {
            gcd_rat(&content, &cc)
        };
    }
    let primitive = reduced.map(|c| c.scale(&content.recip()));
    Ok((alpha, primitive, content))
}

/// gcd on positive rationals: gcd of numerators over lcm of denominators.
fn gcd_rat(a: &Rat, b: &Rat) -> Rat {
    use num_integer::Integer;
    Rat::new(
        a.numer().gcd(b.numer()),
        a.denom().lcm(b.denom()),
    )
}

/// log||Phi_t|| for an exact rational specialization.
pub fn log_norm_specialized(phi: &BiForm<Rat>) -> f64 {
    phi.coeffs()
        .iter()
        .map(ln_abs)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// ||Phi_t|| itself as an exact rational (max |coefficient|).
pub fn norm_specialized_exact(phi: &BiForm<Rat>) -> Rat {
    use num_traits::Signed;
    let mut best = Rat::from_integer(0.into());
    for c in phi.coeffs() {
        let a = c.abs();
        if a > best {
            best = a;
        }
    }
    best
}

/// log||Phi_t|| for a scaled-complex specialization.
pub fn log_norm_scaled(phi: &BiForm<ScaledC>) -> f64 {
    phi.coeffs()
        .iter()
        .map(ScaledC::ln_abs)
        .fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_i};

    fn poly_form(cs: &[&[i64]]) -> BiForm<SPoly> {
        BiForm::new(cs.iter().map(|c| SPoly::from_i64(c)).collect()).unwrap()
    }

    fn srat_form(cs: &[&[i64]]) -> BiForm<SRat> {
        poly_form(cs).to_srat_form()
    }

    #[test]
    fn specialize_examples() {
        // sX^2 + Y^2 at 3 -> 3X^2 + Y^2
        let phi = srat_form(&[&[0, 1], &[0], &[1]]);
        let out = specialize(&phi, &rat_i(3)).unwrap();
        assert_eq!(out.coeffs(), &[rat_i(3), rat_i(0), rat_i(1)]);

        // (s-1)X^2 + sXY at 1 -> XY
        let phi = srat_form(&[&[-1, 1], &[0, 1], &[0]]);
        let out = specialize(&phi, &rat_i(1)).unwrap();
        assert_eq!(out.coeffs(), &[rat_i(0), rat_i(1), rat_i(0)]);

        // X^2/s + Y^2 at 0 -> pole
        let inv_s = SRat::new(SPoly::one(), SPoly::s()).unwrap();
        let phi = BiForm::new(vec![inv_s, SRat::zero(), SRat::one()]).unwrap();
        assert!(matches!(
            specialize(&phi, &rat_i(0)),
            Err(Error::PoleAt(_))
        ));
    }

    #[test]
    fn size_functional_examples() {
        // sX^2 - Y^2: deg_X 2, deg_s 1, theta = max{1, 0 + 1 + 2} = 3
        let s = size_functionals(&srat_form(&[&[0, 1], &[0], &[-1]])).unwrap();
        assert_eq!(s.deg_x, 2);
        assert_eq!(s.deg_s, 1);
        assert_eq!(s.theta, Some(3.0));

        // 2X^2 + (s/3)Y^2: h+ = log 6, theta = log 6 + 3
        let phi = BiForm::new(vec![
            SRat::from_rat(rat_i(2)),
            SRat::zero(),
            SRat::from_poly(SPoly::new(vec![rat_i(0), rat(1, 3)])),
        ])
        .unwrap();
        let s = size_functionals(&phi).unwrap();
        assert!((s.theta.unwrap() - (6f64.ln() + 3.0)).abs() < 1e-12);

        // constant form X^2: deg_s = 0, theta = max{1, 0 + 0 + 2} = 2
        let s = size_functionals(&srat_form(&[&[1], &[0], &[0]])).unwrap();
        assert_eq!(s.deg_s, 0);
        assert_eq!(s.theta, Some(2.0));

        // theta undefined on genuinely rational coefficients
        let inv_s = SRat::new(SPoly::one(), SPoly::s()).unwrap();
        let phi = BiForm::new(vec![inv_s, SRat::one()]).unwrap();
        assert!(matches!(theta(&phi), Err(Error::ThetaNonPolynomial)));
    }

    #[test]
    fn content_split_examples() {
        // (s^2-s)X^2 + (s-1)Y^2 -> alpha = s-1, primitive = sX^2 + Y^2
        let phi = poly_form(&[&[0, -1, 1], &[0], &[-1, 1]]);
        let (alpha, prim, c) = content_split(&phi).unwrap();
        assert_eq!(alpha, SPoly::from_i64(&[-1, 1]));
        assert_eq!(prim, poly_form(&[&[0, 1], &[0], &[1]]));
        assert_eq!(c, rat_i(1));

        // sX^2 + Y^2 -> alpha = 1
        let (alpha, _, _) = content_split(&poly_form(&[&[0, 1], &[0], &[1]])).unwrap();
        assert!(alpha.is_one());

        // 4sX^2 + 6sXY -> alpha = s, c = 2, primitive = 2X^2 + 3XY
        let phi = poly_form(&[&[0, 4], &[0, 6], &[0]]);
        let (alpha, prim, c) = content_split(&phi).unwrap();
        assert_eq!(alpha, SPoly::s());
        assert_eq!(c, rat_i(2));
        assert_eq!(prim, poly_form(&[&[2], &[3], &[0]]));
    }

    #[test]
    fn content_split_roundtrip() {
        let phi = poly_form(&[&[0, 2, 2], &[0], &[0, 4]]);
        let (alpha, prim, c) = content_split(&phi).unwrap();
        let back = prim
            .map(|p| &(&alpha * p) * &SPoly::constant(c.clone()));
        assert_eq!(back, phi);
    }

    #[test]
    fn specialize_commutes_with_products() {
        let a = srat_form(&[&[0, 1], &[2]]);
        let b = srat_form(&[&[1, 1], &[0], &[-3, 0, 1]]);
        let t = rat(7, 3);
        let lhs = specialize(&a.mul(&b), &t).unwrap();
        let rhs = specialize(&a, &t).unwrap().mul(&specialize(&b, &t).unwrap());
        assert_eq!(lhs, rhs);
    }
}
