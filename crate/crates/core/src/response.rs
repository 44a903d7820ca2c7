//! Probe susceptibility, dispersion slope and group index.
//!
//! χ = K ρ₃₁ with K = `chi_prefactor`. Im χ > 0 is absorption, Im χ < 0 gain.
//! The group index is reported as n_g − 1 = 2πχ′ + 2πν_p ∂χ′/∂ν_p, with the
//! derivative taken along Δ_p at fixed atomic frequency.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::{steady_state, DensityMatrix, Error, Result, SystemParams};

/// Half-width of the band around n_g − 1 = 0 classified as [`Propagation::Boundary`].
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Default finite-difference step in Δ_p (units of γ).
pub const DEFAULT_STEP: f64 = 1e-4;

/// Allowed relative disagreement between the 3- and 5-point derivatives.
pub const RICHARDSON_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Propagation {
    Subluminal,
    Superluminal,
    Boundary,
}

impl Propagation {
    /// Classify by the sign of n_g − 1.
    pub fn from_group_index(ng_minus_one: f64) -> Self {
        if ng_minus_one < -BOUNDARY_BAND {
            Propagation::Superluminal
        } else if ng_minus_one > BOUNDARY_BAND {
            Propagation::Subluminal
        } else {
            Propagation::Boundary
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Propagation::Subluminal => "subluminal",
            Propagation::Superluminal => "superluminal",
            Propagation::Boundary => "boundary",
        }
    }
}

impl core::fmt::Display for Propagation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeResponse {
    pub chi_re: f64,
    pub chi_im: f64,
    /// ∂χ′/∂Δ_p at the evaluation point.
    pub slope: f64,
    pub group_index_minus_one: f64,
    pub classification: Propagation,
}

/// A probe response together with the steady state it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointSolution {
    pub response: ProbeResponse,
    pub state: DensityMatrix,
}

pub fn susceptibility(params: &SystemParams) -> Result<Complex64> {
    Ok(steady_state(params)?.rho31() * params.chi_prefactor)
}

fn check_step(h: f64) -> Result<()> {
    if h.is_finite() && h > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            field: "h",
            reason: "finite-difference step must be finite and > 0",
        })
    }
}

// Derivative of χ′ in Δ_p from the four samples at ±h, ±2h. `scale` is a
// magnitude of χ near the point; it floors the Richardson comparison so a
// slope that happens to cross zero is not mistaken for an unstable one.
fn slope_from_samples(h: f64, samples: [f64; 4], scale: f64) -> Result<f64> {
    let [m2, m1, p1, p2] = samples;
    let three_point = (p1 - m1) / (2.0 * h);
    let five_point = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let reference = five_point.abs().max(scale);
    if (three_point - five_point).abs() <= RICHARDSON_TOL * reference {
        Ok(five_point)
    } else {
        Err(Error::DerivativeUnstable {
            three_point,
            five_point,
        })
    }
}

fn slope_with_center(params: &SystemParams, h: f64, center: Complex64) -> Result<f64> {
    check_step(h)?;
    let d = params.delta_p;
    let mut samples = [0.0; 4];
    let mut scale = center.norm();
    for (s, off) in samples.iter_mut().zip([-2.0, -1.0, 1.0, 2.0]) {
        let chi = susceptibility(&params.with_delta_p(d + off * h))?;
        scale = scale.max(chi.norm());
        *s = chi.re;
    }
    slope_from_samples(h, samples, scale)
}

/// ∂χ′/∂Δ_p by a 5-point central difference, cross-checked against the
/// 3-point estimate.
pub fn dispersion_slope(params: &SystemParams, h: f64) -> Result<f64> {
    let center = susceptibility(params)?;
    slope_with_center(params, h, center)
}

/// n_g − 1 = 2πχ′ + 2πν_p ∂χ′/∂Δ_p.
pub fn group_index(params: &SystemParams, h: f64) -> Result<f64> {
    let chi = susceptibility(params)?;
    let slope = slope_with_center(params, h, chi)?;
    Ok(group_index_from(params, chi.re, slope))
}

fn group_index_from(params: &SystemParams, chi_re: f64, slope: f64) -> f64 {
    2.0 * PI * chi_re + 2.0 * PI * params.nu_p_scale * slope
}

/// Sign of n_g − 1 at the default step.
pub fn classify_propagation(params: &SystemParams) -> Result<Propagation> {
    Ok(Propagation::from_group_index(group_index(
        params,
        DEFAULT_STEP,
    )?))
}

/// Full response at one parameter point, sharing the central solve.
pub fn evaluate_point(params: &SystemParams, h: f64) -> Result<PointSolution> {
    let state = steady_state(params)?;
    let chi = state.rho31() * params.chi_prefactor;
    let slope = slope_with_center(params, h, chi)?;
    let ng = group_index_from(params, chi.re, slope);
    Ok(PointSolution {
        response: ProbeResponse {
            chi_re: chi.re,
            chi_im: chi.im,
            slope,
            group_index_minus_one: ng,
            classification: Propagation::from_group_index(ng),
        },
        state,
    })
}
