//! Numeric preimage trees: all affine solutions of F_t^k(Y) = X, level by level.
//! This is the oracle the exact pushforward and the complex escape rate are
//! checked against.

use num_complex::Complex64;

use super::lift::Lift;
use crate::error::{Error, Result};
use crate::forms::{BiForm, Coeff, ScaledC};
use crate::roots;

const POINT_BUDGET: f64 = 4.5e6;
const ROOT_TOL: f64 = 1e-12;

/// Per-depth affine preimage points; level k holds exactly d^{2(k+1)} points
/// counted with multiplicity.
pub struct PreimageTree {
    pub root: (ScaledC, ScaledC),
    pub levels: Vec<Vec<(ScaledC, ScaledC)>>,
    pub degree: usize,
}

impl PreimageTree {
    pub fn level(&self, depth: usize) -> &[(ScaledC, ScaledC)] {
        &self.levels[depth - 1]
    }

    /// sum of log|Phi(u, v)| over a level.
    pub fn log_abs_sum(&self, phi: &BiForm<ScaledC>, depth: usize) -> f64 {
        self.level(depth)
            .iter()
            .map(|(u, v)| phi.eval(u, v).ln_abs())
            .sum()
    }
}

/// Expands the full preimage tree of `root` under the fibre of `f` at `t`.
pub fn preimage_tree(
    f: &Lift,
    t: Complex64,
    root: (Complex64, Complex64),
    depth: usize,
) -> Result<PreimageTree> {
    let d = f.degree();
    if (d as f64).powi(2 * depth as i32) > POINT_BUDGET {
        return Err(Error::TreeTooDeep((d as f64).powi(2 * depth as i32)));
    }
    let ts = ScaledC::from_complex(t);
    let (pt, qt) = f.specialize_scaled(&ts)?;
    let root = (ScaledC::from_complex(root.0), ScaledC::from_complex(root.1));
    if root.0.is_zero() && root.1.is_zero() {
        return Err(Error::invalid("tree root must be a nonzero affine point"));
    }

    let mut levels: Vec<Vec<(ScaledC, ScaledC)>> = Vec::with_capacity(depth);
    let mut current = vec![root];
    for level in 0..depth {
        let mut next = Vec::with_capacity(current.len() * d * d);
        for (idx, parent) in current.iter().enumerate() {
            let children = node_preimages(&pt, &qt, parent, d)
                .map_err(|e| match e {
                    Error::RootFinderDiverged(_) => {
                        Error::RootFinderDiverged(format!("level {} node {}", level + 1, idx))
                    }
                    other => other,
                })?;
            next.extend(children);
        }
        debug_assert_eq!(next.len(), current.len() * d * d);
        levels.push(next.clone());
        current = next;
    }
    Ok(PreimageTree {
        root,
        levels,
        degree: d,
    })
}

/// The d^2 affine preimages of one point: projective roots of
/// y_p P(w, 1) - x_p Q(w, 1) (with degree drop recorded at (1 : 0)), then the
/// d scalings lambda with lambda^d matching the parent.
fn node_preimages(
    pt: &BiForm<ScaledC>,
    qt: &BiForm<ScaledC>,
    parent: &(ScaledC, ScaledC),
    d: usize,
) -> Result<Vec<(ScaledC, ScaledC)>> {
    let (xp, yp) = parent;
    // ascending coefficients of g(w) = yp * P(w,1) - xp * Q(w,1):
    // coefficient of w^m comes from form index d - m
    let g: Vec<ScaledC> = (0..=d)
        .map(|m| {
            yp.mul(pt.coeff(d - m))
                .sub(&xp.mul(qt.coeff(d - m)))
        })
        .collect();

    let max_ln = g
        .iter()
        .map(ScaledC::ln_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    if max_ln == f64::NEG_INFINITY {
        return Err(Error::invalid("degenerate preimage equation"));
    }
    // scaled double-precision copy; magnitudes more than ~e^600 below the top
    // behave as exact zeros
    let gf: Vec<Complex64> = g
        .iter()
        .map(|c| {
            let ln = c.ln_abs();
            if ln < max_ln - 600.0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::from_polar((ln - max_ln).exp(), c.arg())
            }
        })
        .collect();

    // degree drop = multiplicity of the preimage at (1 : 0)
    let drop = gf.iter().rev().take_while(|c| c.norm() == 0.0).count();
    let finite = roots::roots(&gf[..=d - drop], ROOT_TOL)?;

    let mut reps: Vec<(ScaledC, ScaledC)> = finite
        .into_iter()
        .map(|w| {
            // normalize the representative to unit sup norm for conditioning
            let n = w.norm();
            if n > 1.0 {
                (
                    ScaledC::from_complex(w / n),
                    ScaledC::from_f64(1.0 / n),
                )
            } else {
                (ScaledC::from_complex(w), ScaledC::one())
            }
        })
        .collect();
    for _ in 0..drop {
        reps.push((ScaledC::one(), ScaledC::zero()));
    }

    let mut out = Vec::with_capacity(d * d);
    for (u, v) in reps {
        let pv = pt.eval(&u, &v);
        let qv = qt.eval(&u, &v);
        // lambda^d = parent / F(rep); use the better-conditioned coordinate
        let wd = if pv.ln_abs() >= qv.ln_abs() {
            xp.div(&pv)
        } else {
            yp.div(&qv)
        };
        let lambda0 = wd.nth_root(d as u32);
        for j in 0..d {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / d as f64;
            let rot = ScaledC::from_complex(Complex64::from_polar(1.0, theta));
            let lam = lambda0.mul(&rot);
            out.push((lam.mul(&u), lam.mul(&v)));
        }
    }
    Ok(out)
}

/// Max relative error of F(child) against the parent across one level; used by
/// the tree-consistency tests.
pub fn verify_level(f: &Lift, t: Complex64, tree: &PreimageTree, depth: usize) -> Result<f64> {
    let ts = ScaledC::from_complex(t);
    let (pt, qt) = f.specialize_scaled(&ts)?;
    let parents: Vec<(ScaledC, ScaledC)> = if depth == 1 {
        vec![tree.root]
    } else {
        tree.level(depth - 1).to_vec()
    };
    let d2 = f.degree() * f.degree();
    let mut worst = 0.0f64;
    for (i, child) in tree.level(depth).iter().enumerate() {
        let parent = &parents[i / d2];
        let fx = pt.eval(&child.0, &child.1);
        let fy = qt.eval(&child.0, &child.1);
        // compare projectively-scaled coordinates to absorb root magnitude
        let scale = parent.0.ln_abs().max(parent.1.ln_abs());
        let ex = fx.sub(&parent.0).ln_abs() - scale;
        let ey = fy.sub(&parent.1).ln_abs() - scale;
        worst = worst.max(ex.exp()).max(ey.exp());
    }
    Ok(worst)
}
