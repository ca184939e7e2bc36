//! Exact scalar arithmetic: rationals, polynomials and rational functions in the
//! family parameter s, and every absolute value / height the rest of the crate uses.

mod place;
mod rat;
mod spoly;
mod srat;

pub use place::{log_abs_rat, log_norm, log_norm_srat, ln_prime, LogNorm, Place};
pub use rat::{
    abs_p, factor_trial, format_rat, height, hplus_of_coeffs, is_prime, liouville_floor, ln_abs,
    ln_big, ord_p, parse_rat, prime_support, rat, rat_i, Rat,
};
pub use spoly::SPoly;
pub use srat::SRat;

/// Monic gcd in Q[s] together with the rational content of the first argument,
/// packaged the way the certificate and content machinery consumes them.
pub fn gcd_content(p: &SPoly, q: &SPoly) -> crate::error::Result<(SPoly, Rat)> {
    let g = SPoly::gcd(p, q)?;
    let c = if p.is_zero() {
        q.content_rat()
    } else {
        p.content_rat()
    };
    Ok((g, c))
}
