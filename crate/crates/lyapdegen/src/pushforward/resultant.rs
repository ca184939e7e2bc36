//! Sylvester resultants of binary forms: a scalar version over rational-function
//! coefficients, and the bivariate elimination engine behind the pushforward,
//! computed exactly by evaluation at integer nodes and Lagrange reassembly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forms::BiForm;
use crate::linalg::det_bareiss;
use crate::scalars::{Rat, SPoly, SRat};

/// Sylvester matrix rows: the first form's coefficients (highest X-power first)
/// repeated deg(b) times shifted, then the second form's repeated deg(a) times.
fn sylvester_rows<T: Clone>(a: &[T], b: &[T], zero: T) -> Vec<Vec<T>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        row[i..i + m + 1].clone_from_slice(a);
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        row[i..i + n + 1].clone_from_slice(b);
        rows.push(row);
    }
    rows
}

/// Resultant of two nonzero binary forms with rational-function coefficients.
/// Multiplicative in each argument; vanishes iff the forms share a projective root.
pub fn res_binary(a: &BiForm<SRat>, b: &BiForm<SRat>) -> Result<SRat> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroForm);
    }
    let m = a.degree();
    let n = b.degree();
    if m + n == 0 {
        return Ok(SRat::one());
    }
    let (ac, ad) = a.clear_denominators();
    let (bc, bd) = b.clear_denominators();
    let rows = sylvester_rows(ac.coeffs(), bc.coeffs(), SPoly::zero());
    let det = det_bareiss(rows);
    SRat::new(det, &ad.pow(n as u32) * &bd.pow(m as u32))
}

/// Res_{(U,V)}(Y*P - X*Q, Phi) for a lift (P, Q) of degree d and a nonzero form
/// Phi of degree e, all with coefficients in Q[s]. The result is the homogeneous
/// degree-e form in (X, Y) over Q[s] whose d-th power, divided by Res(P,Q)^e,
/// is the pushforward of Phi.
pub fn res_push(p: &BiForm<SPoly>, q: &BiForm<SPoly>, phi: &BiForm<SPoly>) -> Result<BiForm<SPoly>> {
    if phi.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = p.degree();
    debug_assert_eq!(d, q.degree());
    let e = phi.degree();

    if e == 0 {
        // no elimination rows: the Sylvester matrix is diag(phi_0) of size d
        return Ok(BiForm::constant(phi.coeff(0).pow(d as u32)));
    }

    let ds_f = p
        .coeffs()
        .iter()
        .chain(q.coeffs())
        .filter_map(|c| c.degree())
        .max()
        .unwrap_or(0);
    let ds_phi = phi
        .coeffs()
        .iter()
        .filter_map(|c| c.degree())
        .max()
        .unwrap_or(0);
    // deg_s of the resultant is at most e*deg_s(F) + d*deg_s(Phi)
    let cap_s = e * ds_f + d * ds_phi;

    let x_nodes: Vec<Rat> = centered_nodes(e + 1);
    let s_nodes: Vec<Rat> = centered_nodes(cap_s + 1);

    // per s-node: evaluate the determinant at every X node (plus the (1:0) check),
    // interpolate in X to coefficient values r_i(s_node)
    let per_node: Vec<Vec<Rat>> = s_nodes
        .par_iter()
        .map(|s0| {
            let pv: Vec<Rat> = p.coeffs().iter().map(|c| c.eval(s0)).collect();
            let qv: Vec<Rat> = q.coeffs().iter().map(|c| c.eval(s0)).collect();
            let fv: Vec<Rat> = phi.coeffs().iter().map(|c| c.eval(s0)).collect();

            let det_at = |x: &Rat, y: &Rat| -> Rat {
                let a: Vec<Rat> = pv
                    .iter()
                    .zip(&qv)
                    .map(|(pj, qj)| y * pj - x * qj)
                    .collect();
                rat_det(&a, &fv)
            };

            let one = Rat::one();
            let vals: Vec<Rat> = x_nodes.iter().map(|x| det_at(x, &one)).collect();
            // interpolation in X at Y = 1 recovers all e+1 coefficients
            let xcoeffs = interp_newton(&x_nodes, &vals);
            // leading check at (X, Y) = (1, 0): must match the x^e coefficient
            let lead = det_at(&Rat::one(), &Rat::zero());
            let interp_lead = xcoeffs.get(e).cloned().unwrap_or_else(Rat::zero);
            assert_eq!(
                lead, interp_lead,
                "leading-coefficient check failed in resultant interpolation"
            );
            // coefficient of x^m is the coefficient of X^m Y^{e-m}, i.e. index e - m
            let mut r = vec![Rat::zero(); e + 1];
            for (mpow, c) in xcoeffs.into_iter().enumerate() {
                r[e - mpow] = c;
            }
            r
        })
        .collect();

    // interpolate each form coefficient in s
    let coeffs: Vec<SPoly> = (0..=e)
        .into_par_iter()
        .map(|i| {
            let vals: Vec<Rat> = per_node.iter().map(|r| r[i].clone()).collect();
            SPoly::new(interp_newton(&s_nodes, &vals))
        })
        .collect();

    BiForm::new(coeffs).map_err(|_| Error::DegenerateLift)
}

/// 0, 1, -1, 2, -2, ... (n nodes).
fn centered_nodes(n: usize) -> Vec<Rat> {
    (0..n)
        .map(|k| {
            let v = if k % 2 == 1 { (k as i64 + 1) / 2 } else { -(k as i64) / 2 };
            Rat::from_integer(BigInt::from(v))
        })
        .collect()
}

/// Exact rational Sylvester determinant via integer Bareiss after clearing the
/// two shared row denominators.
fn rat_det(a: &[Rat], b: &[Rat]) -> Rat {
    let clear = |v: &[Rat]| -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in v {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let ints = v
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    };
    let (ai, aden) = clear(a);
    let (bi, bden) = clear(b);
    let m = a.len() - 1;
    let n = b.len() - 1;
    let rows = sylvester_rows(&ai, &bi, BigInt::zero());
    let det = det_bareiss(rows);
    Rat::new(det, aden.pow(n as u32) * bden.pow(m as u32))
}

/// Exact polynomial interpolation through (nodes[i], values[i]) in Newton form,
/// returned as ascending monomial coefficients with trailing zeros trimmed.
pub fn interp_newton(nodes: &[Rat], values: &[Rat]) -> Vec<Rat> {
    let n = nodes.len();
    assert_eq!(n, values.len());
    // divided differences
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - level];
            dd[i] = num / den;
        }
    }
    // expand the Newton basis
    let mut coeffs = vec![Rat::zero(); n];
    let mut basis = vec![Rat::one()];
    for (i, c) in dd.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] = &coeffs[j] + &(c * b);
        }
        if i + 1 < n {
            // basis *= (x - nodes[i])
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] = &next[j + 1] + b;
                next[j] = &next[j] - &(b * &nodes[i]);
            }
            basis = next;
        }
    }
    while coeffs.last().map_or(false, |c| Zero::is_zero(c)) {
        coeffs.pop();
    }
    coeffs
}
