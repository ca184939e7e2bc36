//! Fraction-free exact linear algebra: Bareiss determinants over an integral domain
//! and kernel extraction with minor-sized entries for the certificate solver.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalars::SPoly;

/// Integral domain with exact division, as required by one-step Bareiss elimination.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact; panics otherwise.
    fn exact_div(&self, o: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        let (q, r) = num_integer::Integer::div_rem(self, o);
        debug_assert!(Zero::is_zero(&r), "inexact integer division in Bareiss");
        q
    }
}

impl ExactDomain for SPoly {
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
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        SPoly::exact_div(self, o).expect("inexact polynomial division in Bareiss")
    }
}

/// Determinant of a square matrix by one-step Bareiss elimination with row pivoting.
pub fn det_bareiss<T: ExactDomain>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Basis of the kernel of an integer matrix, one vector per free column.
///
/// Entries of each basis vector are (up to sign) rank-sized minors of the input,
/// so their magnitudes obey Hadamard-type bounds. Vectors are reduced by their
/// integer content before being returned. Also reports the rank.
pub struct IntKernel {
    pub rank: usize,
    pub basis: Vec<Vec<BigInt>>,
}

pub fn kernel_int(mat: &[Vec<BigInt>], ncols: usize) -> IntKernel {
    // Fraction-free Gauss-Jordan (Montante): after processing, every pivot column
    // is cleared and all pivot entries equal the pivot-block determinant.
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let nrows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut prev: BigInt = One::one();
    let mut row = 0usize;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let Some(prow) = (row..nrows).find(|&i| !Zero::is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(row, prow);
        let pivot = m[row][col].clone();
        for i in 0..nrows {
            if i == row {
                continue;
            }
            if Zero::is_zero(&m[i][col]) {
                // still rescale so all previously processed pivot entries stay equal
                for j in 0..ncols {
                    if j == col {
                        continue;
                    }
                    let t = &pivot * &m[i][j];
                    m[i][j] = ExactDomain::exact_div(&t, &prev);
                }
            } else {
                let lead = m[i][col].clone();
                for j in 0..ncols {
                    if j == col {
                        continue;
                    }
                    let t = &pivot * &m[i][j] - &lead * &m[row][j];
                    m[i][j] = ExactDomain::exact_div(&t, &prev);
                }
                m[i][col] = Zero::zero();
            }
        }
        prev = pivot;
        pivots.push((row, col));
        row += 1;
    }

    let rank = pivots.len();
    let delta = prev; // determinant of the pivot block (last pivot value)
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![<BigInt as Zero>::zero(); ncols];
        v[free] = delta.clone();
        for &(r, c) in &pivots {
            v[c] = -m[r][free].clone();
        }
        // reduce by integer content
        let mut g: BigInt = Zero::zero();
        for x in &v {
            g = num_integer::Integer::gcd(&g, x);
        }
        if !Zero::is_zero(&g) && g.abs() > One::one() {
            for x in v.iter_mut() {
                *x = ExactDomain::exact_div(&*x, &g);
            }
        }
        basis.push(v);
    }
    IntKernel { rank, basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn det_int() {
        let m = vec![vec![bi(1), bi(2)], vec![bi(3), bi(4)]];
        assert_eq!(det_bareiss(m), bi(-2));
        let m = vec![
            vec![bi(2), bi(0), bi(1)],
            vec![bi(1), bi(3), bi(2)],
            vec![bi(0), bi(1), bi(4)],
        ];
        // 2*(12-2) - 0 + 1*(1-0) = 21
        assert_eq!(det_bareiss(m), bi(21));
        let m = vec![vec![bi(0), bi(1)], vec![bi(0), bi(2)]];
        assert_eq!(det_bareiss(m), bi(0));
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = vec![
            vec![bi(0), bi(1), bi(2)],
            vec![bi(1), bi(0), bi(3)],
            vec![bi(4), bi(5), bi(6)],
        ];
        // expand: -1*(6-12) + 2*(5-0) = 6+10 = 16
        assert_eq!(det_bareiss(m), bi(16));
    }

    #[test]
    fn det_spoly() {
        // det [[s, 1], [1, s]] = s^2 - 1
        let s = SPoly::s();
        let one = SPoly::one();
        let m = vec![vec![s.clone(), one.clone()], vec![one, s]];
        assert_eq!(det_bareiss(m), SPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn kernel_simple() {
        // x + y + z = 0, y - z = 0 -> kernel spanned by (-2, 1, 1)
        let m = vec![vec![bi(1), bi(1), bi(1)], vec![bi(0), bi(1), bi(-1)]];
        let k = kernel_int(&m, 3);
        assert_eq!(k.rank, 2);
        assert_eq!(k.basis.len(), 1);
        let v = &k.basis[0];
        // check it is in the kernel
        for row in &m {
            let dot: BigInt = row.iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(Zero::is_zero(&dot));
        }
    }

    #[test]
    fn kernel_wide() {
        // one equation, four unknowns: three basis vectors
        let m = vec![vec![bi(2), bi(-1), bi(0), bi(7)]];
        let k = kernel_int(&m, 4);
        assert_eq!(k.rank, 1);
        assert_eq!(k.basis.len(), 3);
        for v in &k.basis {
            let dot: BigInt = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(Zero::is_zero(&dot));
        }
    }
}
