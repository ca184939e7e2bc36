//! Aberth-Ehrlich simultaneous root finding for complex polynomials.
//!
//! Degrees here are small (preimage solving, initial form factorizations,
//! sampling-lemma root avoidance), so a plain double-precision implementation
//! with residual-based stopping is enough.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 400;

/// All complex roots of sum c_k z^k (coefficients ascending), with multiplicity
/// as found; roots at zero are stripped exactly. The polynomial must be nonzero.
/// `tol` is a relative tolerance, e.g. 1e-12.
pub fn roots(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>> {
    let mut cs: Vec<Complex64> = coeffs.to_vec();
    while cs.last().map_or(false, |c| c.norm() == 0.0) {
        cs.pop();
    }
    if cs.is_empty() {
        return Err(Error::invalid("root finding on the zero polynomial"));
    }
    let mut out = Vec::new();
    // exact zero roots: strip leading (constant-side) zero coefficients
    let mut low = 0;
    while cs[low].norm() == 0.0 {
        out.push(Complex64::new(0.0, 0.0));
        low += 1;
    }
    let cs = &cs[low..];
    let n = cs.len() - 1;
    if n == 0 {
        return Ok(out);
    }
    if n == 1 {
        out.push(-cs[0] / cs[1]);
        return Ok(out);
    }
    if n == 2 {
        out.extend(quadratic(cs[0], cs[1], cs[2]));
        return Ok(out);
    }
    out.extend(aberth(cs, tol)?);
    Ok(out)
}

/// Numerically stable quadratic formula (citardauq branch for the small root).
fn quadratic(c: Complex64, b: Complex64, a: Complex64) -> [Complex64; 2] {
    let disc = (b * b - 4.0 * a * c).sqrt();
    // pick the sign that avoids cancellation
    let q = if (b + disc).norm() >= (b - disc).norm() {
        -0.5 * (b + disc)
    } else {
        -0.5 * (b - disc)
    };
    if q.norm() == 0.0 {
        return [Complex64::new(0.0, 0.0); 2];
    }
    [q / a, c / q]
}

fn aberth(cs: &[Complex64], tol: f64) -> Result<Vec<Complex64>> {
    let n = cs.len() - 1;
    let lead = cs[n];
    // Cauchy-style initial radius
    let radius = 1.0
        + cs[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.35) / n as f64 + 0.4;
            radius * 0.8 * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();

    let scale = cs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    for _ in 0..MAX_SWEEPS {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(cs, z[i]);
            if p.norm() <= tol * scale * (1.0 + z[i].norm()).powi(n as i32).min(1e12) {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(tol.sqrt(), tol.sqrt())
            } else {
                p / dp
            };
            let mut rep = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 1e-300 {
                        rep += 1.0 / d;
                    }
                }
            }
            let denom = 1.0 - newton * rep;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            moved = moved.max(step.norm() / (1.0 + z[i].norm()));
        }
        if moved < tol {
            // polish with plain Newton
            for zi in z.iter_mut() {
                for _ in 0..2 {
                    let (p, dp) = eval_with_derivative(cs, *zi);
                    if dp.norm() > 0.0 {
                        *zi -= p / dp;
                    }
                }
            }
            let mut sorted = z;
            sorted.sort_by(|a, b| {
                (a.re, a.im)
                    .partial_cmp(&(b.re, b.im))
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
            return Ok(sorted);
        }
    }
    Err(Error::RootFinderDiverged(format!(
        "degree {n} polynomial, leading {lead}"
    )))
}

fn eval_with_derivative(cs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in cs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn residual(cs: &[Complex64], z: Complex64) -> f64 {
        let (p, _) = eval_with_derivative(cs, z);
        p.norm()
    }

    #[test]
    fn small_degrees() {
        // z - 3
        let r = roots(&[c(-3.0, 0.0), c(1.0, 0.0)], 1e-12).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - c(3.0, 0.0)).norm() < 1e-12);

        // z^2 + 1
        let r = roots(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 1e-12).unwrap();
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z * z + 1.0).norm() < 1e-10);
        }
    }

    #[test]
    fn zero_roots_stripped() {
        // z^3 (z - 2)
        let cs = [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)];
        let r = roots(&cs, 1e-12).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.iter().filter(|z| z.norm() == 0.0).count(), 3);
        assert!(r.iter().any(|z| (z - c(2.0, 0.0)).norm() < 1e-10));
    }

    #[test]
    fn wilkinson_mini() {
        // (z-1)(z-2)...(z-8)
        let mut cs = vec![c(1.0, 0.0)];
        for k in 1..=8 {
            let mut next = vec![c(0.0, 0.0); cs.len() + 1];
            for (i, a) in cs.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * (k as f64);
            }
            cs = next;
        }
        let r = roots(&cs, 1e-13).unwrap();
        assert_eq!(r.len(), 8);
        for z in &r {
            assert!(residual(&cs, *z) < 1e-4, "bad root {z}");
        }
        let mut res: Vec<f64> = r.iter().map(|z| z.re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (k, x) in res.iter().enumerate() {
            assert!((x - (k as f64 + 1.0)).abs() < 1e-6);
        }
    }

    #[test]
    fn random_cubics_have_small_residuals() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let cs: Vec<Complex64> = (0..4)
                .map(|_| c(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect();
            if cs[3].norm() < 1e-3 {
                continue;
            }
            let scale = cs.iter().map(|x| x.norm()).fold(0.0f64, f64::max);
            let r = roots(&cs, 1e-13).unwrap();
            assert_eq!(r.len(), 3);
            for z in r {
                assert!(residual(&cs, z) < 1e-8 * scale * (1.0 + z.norm()).powi(3));
            }
        }
    }
}
