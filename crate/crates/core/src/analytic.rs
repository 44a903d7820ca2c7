//! Closed-form weak-probe results for Δ_c = 0 and γ₁ = γ₂ = γ, and the
//! critical coupling and pump rates that bound the superluminal region.
//!
//! The sign of the line-center slope is governed by
//! `R³ + R² + 2R + 4Ω_c²(1 − R)`, so the boundary Ω_c(R) and the pump-rate
//! roots at fixed Ω_c come from the same cubic.

use core::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use crate::{Error, Result, SystemParams};

fn require_regime(params: &SystemParams) -> Result<()> {
    params.validate()?;
    if params.delta_c != 0.0 {
        return Err(Error::DomainError("closed form requires delta_c = 0"));
    }
    if params.gamma1 != params.gamma2 || params.gamma1 != 1.0 {
        return Err(Error::DomainError(
            "closed form requires gamma1 = gamma2 = 1",
        ));
    }
    Ok(())
}

/// Weak-probe ρ₃₁ to first order in Ω_p.
pub fn rho31_weak_probe(params: &SystemParams) -> Result<Complex64> {
    require_regime(params)?;
    let SystemParams {
        pump_r: r,
        omega_p: op,
        omega_c: oc,
        delta_p: dp,
        ..
    } = *params;
    let i = Complex64::i();
    let oc2 = oc * oc;
    let population_factor = r + 2.0 * oc2 * (1.0 + 2.0 * r);
    if population_factor == 0.0 {
        return Err(Error::DivisionByZero("R = 0 and omega_c = 0"));
    }
    let numerator = (Complex64::new(2.0 * dp * (1.0 - r), 0.0) - i * r * r) * (4.0 * oc2 * op);
    let spectral = Complex64::new(4.0 * oc2 + r * r, 0.0)
        + (Complex64::new(1.0, 0.0) - i * 2.0 * dp) * (2.0 * r)
        - (i + dp) * (4.0 * dp);
    if spectral == Complex64::new(0.0, 0.0) {
        return Err(Error::DivisionByZero("spectral denominator vanishes"));
    }
    Ok(numerator / (spectral * population_factor))
}

/// Coefficient S with Re ρ₃₁ ≈ S Δ_p near line center.
pub fn slope_coefficient(params: &SystemParams) -> Result<f64> {
    require_regime(params)?;
    let r = params.pump_r;
    let oc2 = params.omega_c * params.omega_c;
    let population_factor = r + 2.0 * oc2 * (1.0 + 2.0 * r);
    if !(population_factor > 0.0) {
        return Err(Error::DivisionByZero("R = 0 and omega_c = 0"));
    }
    let width = 4.0 * oc2 + r * r + 2.0 * r;
    let bracket = r * r * r + r * r + 2.0 * r + 4.0 * oc2 * (1.0 - r);
    Ok(8.0 * oc2 * params.omega_p * bracket / (population_factor * width * width))
}

/// Pure-EIT (R = 0) susceptibility, K · Ω_pΔ_p / (Ω_c² − Δ_p² − iΔ_p).
pub fn eit_susceptibility(params: &SystemParams) -> Result<Complex64> {
    require_regime(params)?;
    if params.pump_r != 0.0 {
        return Err(Error::DomainError("EIT limit requires pump_R = 0"));
    }
    let (oc, op, dp) = (params.omega_c, params.omega_p, params.delta_p);
    if oc == 0.0 && dp == 0.0 {
        return Err(Error::DivisionByZero("omega_c = 0 and delta_p = 0"));
    }
    let denom = Complex64::new(oc * oc - dp * dp, -dp);
    Ok(Complex64::new(op * dp * params.chi_prefactor, 0.0) / denom)
}

fn boundary_squared(r: f64) -> f64 {
    (r * r * r + r * r + 2.0 * r) / (r - 1.0)
}

/// Coupling Rabi frequency at which the line-center slope changes sign.
/// `None` for R ≤ 1, where the slope stays positive for every Ω_c.
pub fn omega_c_necessary(pump_r: f64) -> Result<Option<f64>> {
    if !(pump_r > 0.0) || !pump_r.is_finite() {
        return Err(Error::DomainError("pump rate must be > 0"));
    }
    if pump_r <= 1.0 {
        return Ok(None);
    }
    Ok(Some(0.5 * boundary_squared(pump_r).sqrt()))
}

// Safeguarded Newton iteration on a sign-changing bracket. Falls back to
// bisection whenever the Newton step leaves the bracket.
fn bracketed_root<F>(f: F, mut lo: f64, mut hi: f64) -> f64
where
    F: Fn(f64) -> (f64, f64),
{
    let (mut f_lo, _) = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (fx, dfx) = f(x);
        if fx == 0.0 {
            return x;
        }
        if (fx < 0.0) == (f_lo < 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        if hi - lo <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            break;
        }
        let newton = x - fx / dfx;
        x = if dfx != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    x
}

/// Pump rate r* minimizing the boundary and the minimum coupling there.
///
/// Stationarity of (R³+R²+2R)/(R−1) reduces to R³ − R² − R − 1 = 0, which has
/// a single root, inside [1, 2].
pub fn omega_c_min() -> (f64, f64) {
    let r_star = bracketed_root(
        |r| (r * r * r - r * r - r - 1.0, 3.0 * r * r - 2.0 * r - 1.0),
        1.0,
        2.0,
    );
    (r_star, 0.5 * boundary_squared(r_star).sqrt())
}

/// Pump rates at which the slope vanishes for a given coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PumpRoots {
    None,
    Double(f64),
    Pair(f64, f64),
}

impl PumpRoots {
    /// Roots in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = f64> {
        let (buf, n) = match *self {
            PumpRoots::None => ([0.0; 2], 0),
            PumpRoots::Double(r) => ([r, r], 1),
            PumpRoots::Pair(a, b) => ([a, b], 2),
        };
        buf.into_iter().take(n)
    }

    pub fn len(&self) -> usize {
        self.iter().count()
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PumpRoots::None)
    }
}

/// Real roots R > 1 of R³ + R² + (2 − 4Ω_c²)R + 4Ω_c² = 0.
///
/// On R > 1 the cubic equals (R − 1)(g(R) − 4Ω_c²) with g the squared
/// boundary, so it is negative at r* exactly when Ω_c exceeds the minimum
/// coupling. That gives the brackets [1, r*] and [r*, ∞) directly.
pub fn pump_roots(omega_c: f64) -> Result<PumpRoots> {
    if !(omega_c > 0.0) || !omega_c.is_finite() {
        return Err(Error::DomainError("omega_c must be > 0"));
    }
    let (r_star, oc_min) = omega_c_min();
    let four_oc2 = 4.0 * omega_c * omega_c;
    let cubic = |r: f64| {
        (
            r * r * r + r * r + (2.0 - four_oc2) * r + four_oc2,
            3.0 * r * r + 2.0 * r + 2.0 - four_oc2,
        )
    };
    if (omega_c - oc_min).abs() <= 8.0 * f64::EPSILON * oc_min {
        return Ok(PumpRoots::Double(r_star));
    }
    if omega_c < oc_min {
        return Ok(PumpRoots::None);
    }
    let mut upper = 2.0 * r_star;
    while cubic(upper).0 <= 0.0 {
        upper *= 2.0;
    }
    let low = bracketed_root(cubic, 1.0, r_star);
    let high = bracketed_root(cubic, r_star, upper);
    Ok(PumpRoots::Pair(low, high))
}

/// Summary of the thresholds at one (R, Ω_c) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalParams {
    pub omega_c_necessary: Option<f64>,
    pub r_star: f64,
    pub omega_c_min: f64,
    pub r_roots: PumpRoots,
}

pub fn critical_params(pump_r: f64, omega_c: f64) -> Result<CriticalParams> {
    let (r_star, omega_c_min) = omega_c_min();
    Ok(CriticalParams {
        omega_c_necessary: omega_c_necessary(pump_r)?,
        r_star,
        omega_c_min,
        r_roots: pump_roots(omega_c)?,
    })
}

/// Eigenstate of the atom–coupling-field system in the {|3⟩, |2⟩} subspace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedState {
    pub excited: Complex64,
    pub ground: Complex64,
    /// Energy in units of ħγ.
    pub eigenvalue: f64,
}

impl DressedState {
    pub fn inner(&self, other: &DressedState) -> Complex64 {
        self.excited.conj() * other.excited + self.ground.conj() * other.ground
    }
}

/// |±⟩ = (|3⟩ ± |2⟩)/√2 with energies ∓Ω_c, returned as [|+⟩, |−⟩].
pub fn dressed_states(omega_c: f64) -> Result<[DressedState; 2]> {
    if !(omega_c > 0.0) || !omega_c.is_finite() {
        return Err(Error::DomainError("omega_c must be > 0"));
    }
    let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Ok([
        DressedState {
            excited: a,
            ground: a,
            eigenvalue: -omega_c,
        },
        DressedState {
            excited: a,
            ground: -a,
            eigenvalue: omega_c,
        },
    ])
}
