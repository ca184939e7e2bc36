//! Escape-rate estimates: per-depth normalized sizes, geometric-tail
//! extrapolation, and the exact-rational shortcut when the partials lock on.

use serde::Serialize;

use crate::scalars::{format_rat, Rat, SPoly};

#[derive(Clone, Debug, Serialize)]
pub enum EscapePlace {
    #[serde(rename = "inf")]
    SInf,
    #[serde(rename = "beta")]
    Beta(SPoly),
    #[serde(rename = "t")]
    Complex { re: f64, im: f64 },
}

/// Limit estimate for G_F(Phi): extrapolated value, the partial sequence
/// g_0..g_k, and a geometric-tail error indicator.
#[derive(Clone, Debug, Serialize)]
pub struct EscapeEstimate {
    pub value: f64,
    #[serde(serialize_with = "ser_opt_rat")]
    pub value_exact: Option<Rat>,
    pub partials: Vec<f64>,
    #[serde(serialize_with = "ser_opt_rats")]
    pub partials_exact: Option<Vec<Rat>>,
    pub depth: usize,
    pub err_indicator: f64,
    pub place: EscapePlace,
}

fn ser_opt_rat<S: serde::Serializer>(
    v: &Option<Rat>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    v.as_ref().map(format_rat).serialize(ser)
}

fn ser_opt_rats<S: serde::Serializer>(
    v: &Option<Vec<Rat>>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    v.as_ref()
        .map(|xs| xs.iter().map(format_rat).collect::<Vec<_>>())
        .serialize(ser)
}

/// Richardson extrapolation assuming increments g_{k+1} - g_k = O(d^{-k}):
/// value = g_k + (g_k - g_{k-1}) / (d - 1), with a 3x safety margin on the
/// same geometric tail as the error indicator.
pub(crate) fn extrapolate_f64(partials: &[f64], d: usize) -> (f64, f64) {
    let k = partials.len() - 1;
    if k == 0 {
        return (partials[0], f64::INFINITY);
    }
    let diff = partials[k] - partials[k - 1];
    let tail = diff / (d as f64 - 1.0);
    (partials[k] + tail, 3.0 * tail.abs())
}

/// Exact-partial variant. When the last three partials agree on a rational with
/// denominator at most d^4, that rational is the limit (the acceptance families
/// have exactly rational limits); otherwise Richardson as above, exactly in Q.
pub(crate) fn extrapolate_exact(partials: &[Rat], d: usize) -> (Rat, Option<Rat>, f64) {
    use num_bigint::BigInt;
    let k = partials.len() - 1;
    if k == 0 {
        return (partials[0].clone(), Some(partials[0].clone()), f64::INFINITY);
    }
    if k >= 2
        && partials[k] == partials[k - 1]
        && partials[k] == partials[k - 2]
        && *partials[k].denom() <= BigInt::from((d as i64).pow(4))
    {
        return (partials[k].clone(), Some(partials[k].clone()), 0.0);
    }
    let diff = &partials[k] - &partials[k - 1];
    let tail = &diff / Rat::from_integer(BigInt::from(d as i64 - 1));
    let value = &partials[k] + &tail;
    let err = 3.0 * crate::scalars::ln_abs(&tail).exp();
    let err = if num_traits::Zero::is_zero(&tail) { 0.0 } else { err };
    (value.clone(), Some(value), err)
}

pub(crate) fn rat_to_f64(x: &Rat) -> f64 {
    use num_traits::{Signed, Zero};
    if x.is_zero() {
        return 0.0;
    }
    let s = if x.is_negative() { -1.0 } else { 1.0 };
    s * crate::scalars::ln_abs(x).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn rational_lock_on() {
        let ps = vec![rat(0, 1), rat(1, 2), rat(1, 2), rat(1, 2)];
        let (v, exact, err) = extrapolate_exact(&ps, 2);
        assert_eq!(v, rat(1, 2));
        assert_eq!(exact, Some(rat(1, 2)));
        assert_eq!(err, 0.0);
    }

    #[test]
    fn richardson_kills_geometric_tail() {
        // g_k = 2^{1-k}: value extrapolates to exactly 0 for d = 2
        let ps = vec![rat(2, 1), rat(1, 1), rat(1, 2), rat(1, 4)];
        let (v, _, _) = extrapolate_exact(&ps, 2);
        assert_eq!(v, rat(0, 1));
        let psf: Vec<f64> = ps.iter().map(rat_to_f64).collect();
        let (vf, _) = extrapolate_f64(&psf, 2);
        assert!(vf.abs() < 1e-12);
    }
}
