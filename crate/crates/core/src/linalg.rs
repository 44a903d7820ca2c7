//! Dense complex LU factorization with partial pivoting for small fixed-size
//! systems.

use num_complex::Complex64;
use num_traits::Zero;

/// Packed LU factors (unit-diagonal L below the diagonal, U on and above)
/// with the row permutation applied during elimination.
#[derive(Debug, Clone, Copy)]
pub struct Lu<const N: usize> {
    factors: [[Complex64; N]; N],
    perm: [usize; N],
}

/// One-norm of a square matrix (max absolute column sum).
pub fn norm_one<const N: usize>(a: &[[Complex64; N]; N]) -> f64 {
    (0..N)
        .map(|c| (0..N).map(|r| a[r][c].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

impl<const N: usize> Lu<N> {
    /// Factor `a`. Returns `None` if a pivot is exactly zero.
    pub fn factor(a: &[[Complex64; N]; N]) -> Option<Self> {
        let mut f = *a;
        let mut perm = [0usize; N];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i;
        }
        for k in 0..N {
            let (pivot_row, pivot_mag) =
                (k..N)
                    .map(|r| (r, f[r][k].norm()))
                    .fold(
                        (k, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot_mag == 0.0 {
                return None;
            }
            if pivot_row != k {
                f.swap(pivot_row, k);
                perm.swap(pivot_row, k);
            }
            let pivot = f[k][k];
            for r in (k + 1)..N {
                let factor = f[r][k] / pivot;
                f[r][k] = factor;
                if factor.is_zero() {
                    continue;
                }
                for c in (k + 1)..N {
                    let t = f[k][c];
                    f[r][c] -= factor * t;
                }
            }
        }
        Some(Self { factors: f, perm })
    }

    pub fn solve(&self, b: &[Complex64; N]) -> [Complex64; N] {
        let mut x = [Complex64::zero(); N];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = b[self.perm[i]];
        }
        for i in 0..N {
            for j in 0..i {
                let t = self.factors[i][j] * x[j];
                x[i] -= t;
            }
        }
        for i in (0..N).rev() {
            for j in (i + 1)..N {
                let t = self.factors[i][j] * x[j];
                x[i] -= t;
            }
            x[i] /= self.factors[i][i];
        }
        x
    }

    /// One-norm of the inverse, computed column by column. For the tiny
    /// systems handled here this is cheaper to reason about than an
    /// iterative estimator and is exact up to rounding.
    pub fn inverse_norm_one(&self) -> f64 {
        let mut worst = 0.0_f64;
        for c in 0..N {
            let mut e = [Complex64::zero(); N];
            e[c] = Complex64::new(1.0, 0.0);
            let col = self.solve(&e);
            worst = worst.max(col.iter().map(|z| z.norm()).sum());
        }
        worst
    }

    /// One-norm condition number κ₁ = ‖A‖₁‖A⁻¹‖₁ of the factored matrix.
    pub fn condition_one(&self, a: &[[Complex64; N]; N]) -> f64 {
        norm_one(a) * self.inverse_norm_one()
    }
}
