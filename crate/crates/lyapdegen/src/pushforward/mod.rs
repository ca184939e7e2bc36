//! The pushforward operator F_* Phi(X) = prod_{F(Y)=X} Phi(Y), realized by
//! binary resultants, with the Jacobian form and a numeric preimage-tree oracle.

mod lift;
mod resultant;
mod tree;

pub use lift::Lift;
pub use resultant::{interp_newton, res_binary, res_push};
pub use tree::{preimage_tree, verify_level, PreimageTree};

use crate::error::{Error, Result};
use crate::forms::BiForm;
use crate::scalars::{SPoly, SRat};

/// Exact pushforward of a nonzero form along the lift:
/// Res_{(U,V)}(Y P - X Q, Phi)^d / Res(P, Q)^{deg Phi}, which equals the product
/// of Phi over the d^2 affine preimages. Multiplicative, with scaling law
/// c |-> c^{d^2}; the result has degree d * deg Phi.
pub fn pushforward(f: &Lift, phi: &BiForm<SRat>) -> Result<BiForm<SRat>> {
    if phi.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f.degree();
    let e = phi.degree();
    let (cleared, delta) = phi.clear_denominators();
    let r = res_push(f.p(), f.q(), &cleared)?;
    let powered = r.pow(d as u64);
    let denominator = &f.resultant().pow(e as u32) * &delta.pow((d * d) as u32);
    let out = powered.try_map(|c| SRat::new(c.clone(), denominator.clone()))?;
    debug_assert_eq!(out.degree(), d * e);
    Ok(out)
}

/// k-fold pushforward, expanded at every step. Degrees grow like d^k; intended
/// for the CLI and small exact experiments.
pub fn pushforward_iterate(f: &Lift, phi: &BiForm<SRat>, k: usize) -> Result<Vec<BiForm<SRat>>> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(phi.clone());
    for i in 0..k {
        let next = pushforward(f, &out[i])?;
        out.push(next);
    }
    Ok(out)
}

/// Convenience: the Jacobian determinant form of the lift.
pub fn jacobian(f: &Lift) -> BiForm<SPoly> {
    f.jacobian()
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::forms::{specialize, Coeff, ScaledC};
    use crate::scalars::{rat, rat_i, Rat};

    fn pf(cs: &[&[i64]]) -> BiForm<SPoly> {
        BiForm::new(cs.iter().map(|c| SPoly::from_i64(c)).collect()).unwrap()
    }

    fn sf(cs: &[&[i64]]) -> BiForm<SRat> {
        pf(cs).to_srat_form()
    }

    fn squaring_lift() -> Lift {
        Lift::new(pf(&[&[1], &[0], &[0]]), pf(&[&[0], &[0], &[1]])).unwrap()
    }

    fn family_zsq_plus_s() -> Lift {
        Lift::new(pf(&[&[1], &[0], &[0, 1]]), pf(&[&[0], &[0], &[1]])).unwrap()
    }

    #[test]
    fn pushforward_examples() {
        // F = (X^2, Y^2), Phi = X -> X^2
        let f = squaring_lift();
        assert_eq!(
            pushforward(&f, &sf(&[&[1], &[0]])).unwrap(),
            sf(&[&[1], &[0], &[0]])
        );

        // Phi = X - Y -> (X - Y)^2
        assert_eq!(
            pushforward(&f, &sf(&[&[1], &[-1]])).unwrap(),
            sf(&[&[1], &[-2], &[1]])
        );

        // F = (X^2 + sY^2, Y^2), Phi = 4XY -> 256 Y^2 (X - sY)^2
        let f = family_zsq_plus_s();
        let got = pushforward(&f, &sf(&[&[0], &[4], &[0]])).unwrap();
        let expected = BiForm::new(vec![
            SRat::zero(),
            SRat::zero(),
            SRat::from_rat(rat_i(256)),
            SRat::from_poly(SPoly::from_i64(&[0, -512])),
            SRat::from_poly(SPoly::from_i64(&[0, 0, 256])),
        ])
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn degree_law() {
        let f = family_zsq_plus_s();
        let phi = sf(&[&[1, 1], &[2], &[0, 3], &[5]]);
        let out = pushforward(&f, &phi).unwrap();
        assert_eq!(out.degree(), f.degree() * phi.degree());
    }

    #[test]
    fn multiplicative_and_scaling() {
        let f = family_zsq_plus_s();
        let a = sf(&[&[1], &[0, 1]]);
        let b = sf(&[&[0, 2], &[1], &[1]]);
        let lhs = pushforward(&f, &a.mul(&b)).unwrap();
        let rhs = pushforward(&f, &a).unwrap().mul(&pushforward(&f, &b).unwrap());
        assert_eq!(lhs, rhs);

        // scaling law c^{d^2} with a rational-function scalar
        let c = SRat::new(SPoly::from_i64(&[3]), SPoly::from_i64(&[1, 1])).unwrap();
        let lhs = pushforward(&f, &a.scale(&c)).unwrap();
        let rhs = pushforward(&f, &a).unwrap().scale(&c.pow(4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn good_reduction_family_pushforward_of_x() {
        // F = (sX^2 + Y^2, sY^2): F_* X = (sX - Y)^2 / s^4
        let f = Lift::new(pf(&[&[0, 1], &[0], &[1]]), pf(&[&[0], &[0], &[0, 1]])).unwrap();
        let got = pushforward(&f, &sf(&[&[1], &[0]])).unwrap();
        let s4 = SPoly::from_i64(&[0, 0, 0, 0, 1]);
        let expected = BiForm::new(vec![
            SRat::new(SPoly::from_i64(&[0, 0, 1]), s4.clone()).unwrap(),
            SRat::new(SPoly::from_i64(&[0, -2]), s4.clone()).unwrap(),
            SRat::new(SPoly::from_i64(&[1]), s4).unwrap(),
        ])
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn specialization_commutes() {
        let f = family_zsq_plus_s();
        let phi = sf(&[&[1, 2], &[0, 0, 1], &[3]]);
        let t = rat(7, 2);
        let pushed_then_spec = specialize(&pushforward(&f, &phi).unwrap(), &t).unwrap();

        // pushforward over the exactly-specialized fibre
        let (pt, qt) = f.specialize_rat(&t).unwrap();
        let lift_t = Lift::new_raw(
            pt.map(|c| SPoly::constant(c.clone())),
            qt.map(|c| SPoly::constant(c.clone())),
        )
        .unwrap();
        let phi_t = specialize(&phi, &t)
            .unwrap()
            .map(|c| SRat::from_rat(c.clone()));
        let spec_then_pushed = pushforward(&lift_t, &phi_t).unwrap();
        let as_rat = spec_then_pushed.map(|c: &SRat| -> Rat {
            assert!(c.is_polynomial());
            assert!(c.num().is_constant());
            c.num().coeff(0)
        });
        assert_eq!(pushed_then_spec, as_rat);
    }

    #[test]
    fn oracle_agreement_squaring() {
        // log of the exact pushforward evaluation equals the preimage product
        let f = family_zsq_plus_s();
        let phi = sf(&[&[1, 1], &[2]]);
        let t = rat_i(3);
        let pushed = pushforward(&f, &phi).unwrap();
        let pushed_t = specialize(&pushed, &t).unwrap();

        let (x, y) = (Complex64::new(1.25, 0.5), Complex64::new(0.75, -0.25));
        let tree = preimage_tree(&f, Complex64::new(3.0, 0.0), (x, y), 1).unwrap();
        let phi_t = crate::forms::specialize_complex(&phi, &ScaledC::from_f64(3.0)).unwrap();
        let oracle: f64 = tree.log_abs_sum(&phi_t, 1);

        let exact = pushed_t
            .map(ScaledC::from_rat)
            .eval(&ScaledC::from_complex(x), &ScaledC::from_complex(y));
        assert!(
            (exact.ln_abs() - oracle).abs() < 1e-8 * (1.0 + oracle.abs()),
            "exact {} vs oracle {}",
            exact.ln_abs(),
            oracle
        );
    }
}
