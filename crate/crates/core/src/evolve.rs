//! Fixed-step RK4 propagation of the density matrix. Used as an oracle for
//! the linear-algebra steady state, so it shares nothing with that path but
//! the generator itself.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
#[cfg(test)]
use num_traits::Zero;

use crate::{assemble_liouvillian, DensityMatrix, Error, Liouvillian, Result, SystemParams};

/// Default RK4 step in units of 1/γ.
pub const DEFAULT_DT: f64 = 1e-3;

/// Trace drift beyond which a trajectory is rejected.
pub const MAX_TRACE_DRIFT: f64 = 1e-6;

/// Upper bound on the step for the given parameters.
pub fn max_step(params: &SystemParams) -> f64 {
    1e-2 / params.fastest_rate()
}

/// Steps `d(vec ρ)/dt = L · vec ρ` with classical fourth-order Runge–Kutta.
#[derive(Debug, Clone)]
pub struct Propagator {
    generator: Liouvillian,
    dt: f64,
}

impl Propagator {
    pub fn new(params: &SystemParams, dt: f64) -> Result<Self> {
        let generator = assemble_liouvillian(params)?;
        let max_dt = max_step(params);
        // small slack so that dt = max_step computed elsewhere is accepted
        if !(dt > 0.0 && dt <= max_dt * (1.0 + 1e-12)) {
            return Err(Error::InvalidTimeStep { dt, max_dt });
        }
        Ok(Self { generator, dt })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    fn step_by(&self, v: &[Complex64; 9], h: f64) -> [Complex64; 9] {
        let l = &self.generator;
        let axpy = |x: &[Complex64; 9], k: &[Complex64; 9], s: f64| {
            let mut out = *x;
            for (o, kk) in out.iter_mut().zip(k) {
                *o += kk * s;
            }
            out
        };
        let k1 = l.apply(v);
        let k2 = l.apply(&axpy(v, &k1, h / 2.0));
        let k3 = l.apply(&axpy(v, &k2, h / 2.0));
        let k4 = l.apply(&axpy(v, &k3, h));
        let mut out = *v;
        for i in 0..9 {
            out[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
        }
        out
    }

    /// Advance by `t_final`, calling `observe(t, ρ)` after every step.
    /// The step is shrunk uniformly so the last step lands on `t_final`.
    pub fn run<F>(
        &self,
        rho0: &DensityMatrix,
        t_final: f64,
        mut observe: F,
    ) -> Result<DensityMatrix>
    where
        F: FnMut(f64, &DensityMatrix),
    {
        if !(t_final >= 0.0 && t_final.is_finite()) {
            return Err(Error::InvalidParams {
                field: "t_final",
                reason: "must be finite and >= 0",
            });
        }
        let steps = (t_final / self.dt).ceil() as u64;
        if steps == 0 {
            return Ok(*rho0);
        }
        let h = t_final / steps as f64;
        let trace0 = rho0.trace();
        let mut v = rho0.to_vec();
        for n in 1..=steps {
            v = self.step_by(&v, h);
            let rho = DensityMatrix::from_vec(&v);
            let trace_drift = (rho.trace() - trace0).norm();
            if !(trace_drift <= MAX_TRACE_DRIFT) {
                return Err(Error::NonPhysicalState { trace_drift });
            }
            observe(n as f64 * h, &rho);
        }
        Ok(DensityMatrix::from_vec(&v))
    }
}

/// State at `t_final` starting from `rho0`.
pub fn evolve(
    params: &SystemParams,
    rho0: &DensityMatrix,
    t_final: f64,
    dt: f64,
) -> Result<DensityMatrix> {
    Propagator::new(params, dt)?.run(rho0, t_final, |_, _| {})
}

/// Samples the trajectory every `stride` steps (and at `t_final`).
pub fn sample_trajectory(
    params: &SystemParams,
    rho0: &DensityMatrix,
    t_final: f64,
    dt: f64,
    stride: usize,
) -> Result<Vec<(f64, DensityMatrix)>> {
    let stride = stride.max(1);
    let mut samples = Vec::new();
    let mut count = 0usize;
    let last = Propagator::new(params, dt)?.run(rho0, t_final, |t, rho| {
        count += 1;
        if count.is_multiple_of(stride) {
            samples.push((t, *rho));
        }
    })?;
    if samples.last().map(|s| s.0) != Some(t_final) {
        samples.push((t_final, last));
    }
    Ok(samples)
}

/// Evolve with step halving until two successive step sizes agree to `tol`
/// elementwise. Starts from the smaller of [`DEFAULT_DT`] and the stability
/// bound and gives up after `max_halvings`.
pub fn evolve_converged(
    params: &SystemParams,
    rho0: &DensityMatrix,
    t_final: f64,
    tol: f64,
    max_halvings: u32,
) -> Result<DensityMatrix> {
    let mut dt = DEFAULT_DT.min(max_step(params));
    let mut coarse = evolve(params, rho0, t_final, dt)?;
    let mut difference = f64::INFINITY;
    for _ in 0..max_halvings {
        dt /= 2.0;
        let fine = evolve(params, rho0, t_final, dt)?;
        difference = fine.max_abs_diff(&coarse);
        if difference <= tol {
            return Ok(fine);
        }
        coarse = fine;
    }
    Err(Error::NotConverged { difference })
}
