//! Physical parameters of the pumped Λ system.

use crate::{Error, Result};

/// All inputs of the model, in units of γ.
///
/// Rabi frequencies are real and non-negative. The fields are public so that
/// sweeps can mutate a single knob; every operation re-validates before use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Decay rate |3⟩ → |1⟩.
    pub gamma1: f64,
    /// Decay rate |3⟩ → |2⟩.
    pub gamma2: f64,
    /// Incoherent pump rate on |1⟩ → |3⟩.
    pub pump_r: f64,
    /// Probe Rabi frequency on |1⟩ ↔ |3⟩.
    pub omega_p: f64,
    /// Coupling Rabi frequency on |2⟩ ↔ |3⟩.
    pub omega_c: f64,
    /// Probe detuning ν_p − ω₃₁.
    pub delta_p: f64,
    /// Coupling detuning ν_c − ω₃₂.
    pub delta_c: f64,
    /// Dimensionless factor K in χ = K ρ₃₁.
    pub chi_prefactor: f64,
    /// Probe carrier frequency ν_p in units of γ; enters only the group index.
    pub nu_p_scale: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self {
            gamma1: 1.0,
            gamma2: 1.0,
            pump_r: 0.0,
            omega_p: 0.0,
            omega_c: 0.0,
            delta_p: 0.0,
            delta_c: 0.0,
            chi_prefactor: 1.0,
            nu_p_scale: 1.0e7,
        }
    }
}

fn positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            field,
            reason: "must be finite and > 0",
        })
    }
}

fn non_negative(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            field,
            reason: "must be finite and >= 0",
        })
    }
}

fn finite(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            field,
            reason: "must be finite",
        })
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        positive("gamma1", self.gamma1)?;
        positive("gamma2", self.gamma2)?;
        non_negative("pump_R", self.pump_r)?;
        non_negative("omega_p", self.omega_p)?;
        non_negative("omega_c", self.omega_c)?;
        finite("delta_p", self.delta_p)?;
        finite("delta_c", self.delta_c)?;
        positive("chi_prefactor", self.chi_prefactor)?;
        positive("nu_p_scale", self.nu_p_scale)?;
        Ok(())
    }

    /// Largest rate or frequency in the problem, floored at 1.
    pub fn fastest_rate(&self) -> f64 {
        [
            self.gamma1 + self.gamma2 + self.pump_r,
            self.omega_c,
            self.omega_p,
            self.delta_p.abs(),
            self.delta_c.abs(),
            1.0,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn with_pump(mut self, pump_r: f64) -> Self {
        self.pump_r = pump_r;
        self
    }

    pub fn with_omega_p(mut self, omega_p: f64) -> Self {
        self.omega_p = omega_p;
        self
    }

    pub fn with_omega_c(mut self, omega_c: f64) -> Self {
        self.omega_c = omega_c;
        self
    }

    pub fn with_delta_p(mut self, delta_p: f64) -> Self {
        self.delta_p = delta_p;
        self
    }

    pub fn with_delta_c(mut self, delta_c: f64) -> Self {
        self.delta_c = delta_c;
        self
    }

    /// True when γ₁ = γ₂ = 1 and Δ_c = 0, the regime of the closed-form
    /// weak-probe expressions.
    pub fn in_weak_probe_regime(&self) -> bool {
        self.delta_c == 0.0 && self.gamma1 == self.gamma2 && self.gamma1 == 1.0
    }
}
