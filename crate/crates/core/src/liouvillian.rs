//! Equations of motion for the pumped Λ atom in the rotating frame.
//!
//! The generator acts on the flattened density matrix in the order given by
//! [`VEC_ORDER`](crate::density::VEC_ORDER), so that `d(vec ρ)/dt = L · vec ρ`.

use num_complex::Complex64;
use num_traits::Zero;

use crate::density::{vec_index, DensityMatrix};
use crate::{Result, SystemParams};

const I: Complex64 = Complex64::new(0.0, 1.0);

const R11: usize = vec_index(0, 0);
const R22: usize = vec_index(1, 1);
const R33: usize = vec_index(2, 2);
const R21: usize = vec_index(1, 0);
const R12: usize = vec_index(0, 1);
const R31: usize = vec_index(2, 0);
const R13: usize = vec_index(0, 2);
const R32: usize = vec_index(2, 1);
const R23: usize = vec_index(1, 2);

/// 9×9 generator of the density-matrix dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Liouvillian {
    matrix: [[Complex64; 9]; 9],
}

impl Liouvillian {
    pub fn matrix(&self) -> &[[Complex64; 9]; 9] {
        &self.matrix
    }

    pub fn apply(&self, v: &[Complex64; 9]) -> [Complex64; 9] {
        let mut out = [Complex64::zero(); 9];
        for (o, row) in out.iter_mut().zip(self.matrix.iter()) {
            *o = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn apply_to(&self, rho: &DensityMatrix) -> DensityMatrix {
        DensityMatrix::from_vec(&self.apply(&rho.to_vec()))
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        self.matrix
            .iter()
            .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Build the generator for the given parameters.
///
/// ρ̇₁₁, ρ̇₂₂, ρ̇₂₁, ρ̇₃₁ and ρ̇₃₂ are the primary equations; the conjugate
/// coherences follow by complex conjugation and ρ̇₃₃ is fixed by
/// d(tr ρ)/dt = 0. The pump removes population from |1⟩ at rate R, deposits
/// it in |3⟩ and dephases ρ₂₁ and ρ₃₁ at R/2.
pub fn assemble_liouvillian(params: &SystemParams) -> Result<Liouvillian> {
    params.validate()?;
    let SystemParams {
        gamma1: g1,
        gamma2: g2,
        pump_r: r,
        omega_p: op,
        omega_c: oc,
        delta_p: dp,
        delta_c: dc,
        ..
    } = *params;
    let re = |x: f64| Complex64::new(x, 0.0);
    let mut m = [[Complex64::zero(); 9]; 9];

    // ρ̇₁₁ = γ₁ρ₃₃ + iΩp(ρ₃₁ − ρ₁₃) − Rρ₁₁
    m[R11][R33] += re(g1);
    m[R11][R31] += I * op;
    m[R11][R13] -= I * op;
    m[R11][R11] -= re(r);

    // ρ̇₂₂ = γ₂ρ₃₃ + iΩc(ρ₃₂ − ρ₂₃)
    m[R22][R33] += re(g2);
    m[R22][R32] += I * oc;
    m[R22][R23] -= I * oc;

    // ρ̇₃₃ = −(γ₁+γ₂)ρ₃₃ + Rρ₁₁ − iΩp(ρ₃₁ − ρ₁₃) − iΩc(ρ₃₂ − ρ₂₃)
    m[R33][R33] -= re(g1 + g2);
    m[R33][R11] += re(r);
    m[R33][R31] -= I * op;
    m[R33][R13] += I * op;
    m[R33][R32] -= I * oc;
    m[R33][R23] += I * oc;

    // ρ̇₂₁ = −[R/2 + i(Δc − Δp)]ρ₂₁ + iΩcρ₃₁ − iΩpρ₂₃
    m[R21][R21] -= Complex64::new(r / 2.0, dc - dp);
    m[R21][R31] += I * oc;
    m[R21][R23] -= I * op;

    // ρ̇₃₁ = [iΔp − (γ₁+γ₂+R)/2]ρ₃₁ + iΩcρ₂₁ − iΩp(ρ₃₃ − ρ₁₁)
    m[R31][R31] += Complex64::new(-(g1 + g2 + r) / 2.0, dp);
    m[R31][R21] += I * oc;
    m[R31][R33] -= I * op;
    m[R31][R11] += I * op;

    // ρ̇₃₂ = [iΔc − (γ₁+γ₂)/2]ρ₃₂ + iΩpρ₁₂ − iΩc(ρ₃₃ − ρ₂₂)
    m[R32][R32] += Complex64::new(-(g1 + g2) / 2.0, dc);
    m[R32][R12] += I * op;
    m[R32][R33] -= I * oc;
    m[R32][R22] += I * oc;

    // Conjugate rows: d(ρ_ji)/dt = conj(d(ρ_ij)/dt), with every column
    // mapped to its conjugate partner.
    for (src, dst) in [(R21, R12), (R31, R13), (R32, R23)] {
        for col in 0..9 {
            let partner = crate::density::conjugate_index(col);
            m[dst][partner] = m[src][col].conj();
        }
    }

    Ok(Liouvillian { matrix: m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::conjugate_index;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn pure_decay_structure() {
        let p = SystemParams::default();
        let l = assemble_liouvillian(&p).unwrap();
        let m = l.matrix();
        assert_eq!(m[R33][R33], Complex64::new(-2.0, 0.0));
        assert_eq!(m[R11][R33], Complex64::new(1.0, 0.0));
        assert_eq!(m[R22][R33], Complex64::new(1.0, 0.0));
        assert_eq!(m[R31][R31], Complex64::new(-1.0, 0.0));
        assert_eq!(m[R21][R21], Complex64::zero());
    }

    #[test]
    fn pump_dephases_ground_coherence() {
        let p = SystemParams::default().with_pump(1.0);
        let l = assemble_liouvillian(&p).unwrap();
        assert_eq!(l.matrix()[R21][R21], Complex64::new(-0.5, 0.0));
        // no pump dephasing on the coupling transition
        assert_eq!(l.matrix()[R32][R32], Complex64::new(-1.0, 0.0));
        assert_eq!(l.matrix()[R31][R31], Complex64::new(-1.5, 0.0));
    }

    #[test]
    fn detunings_enter_with_printed_signs() {
        let p = SystemParams::default().with_delta_p(0.3).with_delta_c(-0.7);
        let l = assemble_liouvillian(&p).unwrap();
        let m = l.matrix();
        assert_abs_diff_eq!(m[R21][R21].im, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m[R31][R31].im, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(m[R32][R32].im, -0.7, epsilon = 1e-15);
        assert_abs_diff_eq!(m[R13][R13].im, -0.3, epsilon = 1e-15);
    }

    fn arb_params() -> impl Strategy<Value = SystemParams> {
        (
            0.1..3.0f64,
            0.1..3.0f64,
            0.0..5.0f64,
            0.0..2.0f64,
            0.0..5.0f64,
            -10.0..10.0f64,
            -10.0..10.0f64,
        )
            .prop_map(|(g1, g2, r, op, oc, dp, dc)| SystemParams {
                gamma1: g1,
                gamma2: g2,
                pump_r: r,
                omega_p: op,
                omega_c: oc,
                delta_p: dp,
                delta_c: dc,
                ..Default::default()
            })
    }

    proptest! {
        #[test]
        fn population_rows_sum_to_zero(p in arb_params()) {
            let l = assemble_liouvillian(&p).unwrap();
            let m = l.matrix();
            for col in 0..9 {
                let s = m[R11][col] + m[R22][col] + m[R33][col];
                prop_assert!(s.norm() <= 1e-12);
            }
        }

        #[test]
        fn conjugate_rows_mirror(p in arb_params()) {
            let l = assemble_liouvillian(&p).unwrap();
            let m = l.matrix();
            for row in 0..9 {
                let crow = conjugate_index(row);
                for col in 0..9 {
                    let ccol = conjugate_index(col);
                    prop_assert!((m[crow][ccol] - m[row][col].conj()).norm() <= 1e-15);
                }
            }
        }
    }
}
