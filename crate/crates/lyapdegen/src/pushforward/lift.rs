//! Lifts of degree-d endomorphisms of P^1: a coprime pair of binary forms over Q[s].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::resultant::res_binary;
use crate::error::{Error, Result};
use crate::forms::{eval_spoly_scaled, BiForm, Coeff, ScaledC};
use crate::scalars::{Rat, SPoly, SRat};

/// A pair (P, Q) of equal-degree binary forms with Res(P, Q) not identically
/// zero. Constructors normalize away the joint content so the lift scaling is
/// pinned; `new_raw` keeps the pair exactly as given (used for specialized
/// fibres, where rescaling would shift escape values).
#[derive(Clone, Debug, PartialEq)]
pub struct Lift {
    p: BiForm<SPoly>,
    q: BiForm<SPoly>,
    d: usize,
    res: SPoly,
}

impl Lift {
    pub fn new(p: BiForm<SPoly>, q: BiForm<SPoly>) -> Result<Lift> {
        let (p, q) = normalize_pair(p, q)?;
        Lift::new_raw(p, q)
    }

    pub fn new_raw(p: BiForm<SPoly>, q: BiForm<SPoly>) -> Result<Lift> {
        let d = p.degree();
        if d != q.degree() || d < 2 {
            return Err(Error::BadLiftDegrees(p.degree(), q.degree()));
        }
        let res = res_binary(&p.to_srat_form(), &q.to_srat_form())?;
        if res.is_zero() {
            return Err(Error::DegenerateLift);
        }
        debug_assert!(res.is_polynomial());
        Ok(Lift {
            p,
            q,
            d,
            res: res.num().clone(),
        })
    }

    pub fn p(&self) -> &BiForm<SPoly> {
        &self.p
    }

    pub fn q(&self) -> &BiForm<SPoly> {
        &self.q
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Cached Res(P, Q) as a polynomial in s.
    pub fn resultant(&self) -> &SPoly {
        &self.res
    }

    /// deg_s of the lift: max over all coefficients of P and Q.
    pub fn deg_s(&self) -> usize {
        self.p
            .coeffs()
            .iter()
            .chain(self.q.coeffs())
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// J = (dP/dX)(dQ/dY) - (dP/dY)(dQ/dX), a form of degree 2d - 2.
    pub fn jacobian(&self) -> BiForm<SPoly> {
        let px = diff_x(&self.p);
        let py = diff_y(&self.p);
        let qx = diff_x(&self.q);
        let qy = diff_y(&self.q);
        let j = sub_forms(&px.mul(&qy), &py.mul(&qx));
        debug_assert!(!j.is_zero(), "vanishing Jacobian for a morphism lift");
        j
    }

    /// Specialized fibre at a rational parameter, exact. Errors where the
    /// resultant vanishes (the family degenerates).
    pub fn specialize_rat(&self, t: &Rat) -> Result<(BiForm<Rat>, BiForm<Rat>)> {
        if num_traits::Zero::is_zero(&self.res.eval(t)) {
            return Err(Error::DegenerateAt(crate::scalars::format_rat(t)));
        }
        let pt = self.p.map(|c| c.eval(t));
        let qt = self.q.map(|c| c.eval(t));
        Ok((pt, qt))
    }

    /// Specialized fibre at a complex parameter in scaled arithmetic.
    pub fn specialize_scaled(&self, t: &ScaledC) -> Result<(BiForm<ScaledC>, BiForm<ScaledC>)> {
        if eval_spoly_scaled(&self.res, t).is_zero() {
            return Err(Error::DegenerateAt(format!("{:.6e}", t.to_complex())));
        }
        let pt = self.p.map(|c| eval_spoly_scaled(c, t));
        let qt = self.q.map(|c| eval_spoly_scaled(c, t));
        Ok((pt, qt))
    }

    /// The homogeneous height term -log|Res(F_t)| + (N+1) d^N log||F_t|| at the
    /// archimedean place, N = 1.
    pub fn hom_height(&self, t: Complex64) -> Result<f64> {
        let ts = ScaledC::from_complex(t);
        let res_t = eval_spoly_scaled(&self.res, &ts);
        if res_t.is_zero() {
            return Err(Error::DegenerateAt(format!("{t}")));
        }
        let (pt, qt) = self.specialize_scaled(&ts)?;
        let norm = pt
            .coeffs()
            .iter()
            .chain(qt.coeffs())
            .map(ScaledC::ln_abs)
            .fold(f64::NEG_INFINITY, f64::max);
        Ok(-res_t.ln_abs() + 2.0 * self.d as f64 * norm)
    }
}

fn normalize_pair(p: BiForm<SPoly>, q: BiForm<SPoly>) -> Result<(BiForm<SPoly>, BiForm<SPoly>)> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroForm);
    }
    let alpha = SPoly::gcd_many(p.coeffs().iter().chain(q.coeffs()))?;
    let mut content: Option<Rat> = None;
    let reduce = |f: &BiForm<SPoly>| {
        f.map(|c| {
            if c.is_zero() {
                SPoly::zero()
            } else {
                c.exact_div(&alpha).expect("gcd divides")
            }
        })
    };
    let p = reduce(&p);
    let q = reduce(&q);
    for c in p.coeffs().iter().chain(q.coeffs()) {
        if c.is_zero() {
            continue;
        }
        let cc = c.content_rat();
        content = Some(match content {
            None => cc,
            Some(acc) => {
                use num_integer::Integer;
                Rat::new(acc.numer().gcd(cc.numer()), acc.denom().lcm(cc.denom()))
            }
        });
    }
    let c = content.expect("nonzero pair");
    let inv = c.recip();
    Ok((
        p.map(|x| x.scale(&inv)),
        q.map(|x| x.scale(&inv)),
    ))
}

fn diff_x(f: &BiForm<SPoly>) -> BiForm<SPoly> {
    let e = f.degree();
    let coeffs: Vec<SPoly> = (0..e)
        .map(|i| f.coeff(i).scale(&Rat::from_integer(((e - i) as i64).into())))
        .collect();
    BiForm::new_unchecked(coeffs)
}

fn diff_y(f: &BiForm<SPoly>) -> BiForm<SPoly> {
    let e = f.degree();
    let coeffs: Vec<SPoly> = (1..=e)
        .map(|i| f.coeff(i).scale(&Rat::from_integer((i as i64).into())))
        .collect();
    BiForm::new_unchecked(coeffs)
}

fn sub_forms(a: &BiForm<SPoly>, b: &BiForm<SPoly>) -> BiForm<SPoly> {
    debug_assert_eq!(a.degree(), b.degree());
    let coeffs: Vec<SPoly> = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| x - y)
        .collect();
    BiForm::new_unchecked(coeffs)
}

#[derive(Serialize, Deserialize)]
struct LiftWire {
    #[serde(rename = "P")]
    p: BiForm<SRat>,
    #[serde(rename = "Q")]
    q: BiForm<SRat>,
}

impl Serialize for Lift {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        LiftWire {
            p: self.p.to_srat_form(),
            q: self.q.to_srat_form(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Lift {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = LiftWire::deserialize(de)?;
        let to_poly = |f: &BiForm<SRat>| {
            f.to_poly_form()
                .map_err(|_| D::Error::custom("lift coefficients must be polynomials in s"))
        };
        Lift::new(to_poly(&wire.p)?, to_poly(&wire.q)?).map_err(|e| D::Error::custom(e.to_string()))
    }
}
