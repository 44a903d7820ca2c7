//! Subluminal/superluminal classification over the (R, Ω_c) plane.
//!
//! Cells are stored row-major with one row per Ω_c sample:
//! `cells[i_omega * n_r + i_r]`.

use alloc::vec::Vec;

use crate::analytic::{omega_c_necessary, pump_roots, slope_coefficient};
use crate::response::{classify_propagation, Propagation};
use crate::{Error, Result, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Sign of the closed-form line-center slope coefficient.
    Analytic,
    /// Sign of n_g − 1 from the full steady-state solver.
    Numeric,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Numeric => "numeric",
        }
    }
}

/// Grid description. `base` supplies every parameter other than R and Ω_c;
/// its detuning is forced to line center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_range: (f64, f64),
    pub omega_c_range: (f64, f64),
    pub n_r: usize,
    pub n_omega: usize,
    pub method: Method,
    pub base: SystemParams,
}

/// Probe Rabi frequency used for numeric maps.
pub const GRID_OMEGA_P: f64 = 0.01;

impl GridSpec {
    pub fn new(
        r_range: (f64, f64),
        omega_c_range: (f64, f64),
        n_r: usize,
        n_omega: usize,
        method: Method,
    ) -> Self {
        Self {
            r_range,
            omega_c_range,
            n_r,
            n_omega,
            method,
            base: SystemParams::default().with_omega_p(GRID_OMEGA_P),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let range_ok = |(lo, hi): (f64, f64)| lo > 0.0 && hi > lo && hi.is_finite();
        if !range_ok(self.r_range) {
            return Err(Error::InvalidParams {
                field: "r_range",
                reason: "need 0 < start < stop",
            });
        }
        if !range_ok(self.omega_c_range) {
            return Err(Error::InvalidParams {
                field: "omega_c_range",
                reason: "need 0 < start < stop",
            });
        }
        if self.n_r < 2 || self.n_omega < 2 {
            return Err(Error::InvalidParams {
                field: "resolution",
                reason: "need at least 2 samples per axis",
            });
        }
        self.base.validate()?;
        if self.method == Method::Analytic && !self.base.in_weak_probe_regime() {
            return Err(Error::DomainError(
                "analytic map requires delta_c = 0 and gamma1 = gamma2 = 1",
            ));
        }
        Ok(())
    }

    pub fn r_axis(&self) -> Vec<f64> {
        linspace(self.r_range, self.n_r)
    }

    pub fn omega_c_axis(&self) -> Vec<f64> {
        linspace(self.omega_c_range, self.n_omega)
    }

    /// (R, Ω_c) for every cell in storage order.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let rs = self.r_axis();
        self.omega_c_axis()
            .into_iter()
            .flat_map(|oc| rs.iter().map(move |&r| (r, oc)))
            .collect()
    }

    pub fn classify_cell(&self, r: f64, omega_c: f64) -> Result<Propagation> {
        let p = self
            .base
            .with_pump(r)
            .with_omega_c(omega_c)
            .with_delta_p(0.0);
        match self.method {
            Method::Analytic => {
                let s = slope_coefficient(&p)?;
                Ok(if s < 0.0 {
                    Propagation::Superluminal
                } else if s > 0.0 {
                    Propagation::Subluminal
                } else {
                    Propagation::Boundary
                })
            }
            Method::Numeric => classify_propagation(&p),
        }
    }
}

pub fn linspace((lo, hi): (f64, f64), n: usize) -> Vec<f64> {
    if n == 1 {
        return alloc::vec![lo];
    }
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    pub r_axis: Vec<f64>,
    pub omega_c_axis: Vec<f64>,
    pub cells: Vec<Result<Propagation>>,
    pub method: Method,
}

impl RegionGrid {
    /// Assemble a grid from cells already evaluated in storage order.
    pub fn from_cells(spec: &GridSpec, cells: Vec<Result<Propagation>>) -> Self {
        assert_eq!(cells.len(), spec.n_r * spec.n_omega, "cell count mismatch");
        Self {
            r_axis: spec.r_axis(),
            omega_c_axis: spec.omega_c_axis(),
            cells,
            method: spec.method,
        }
    }

    pub fn n_r(&self) -> usize {
        self.r_axis.len()
    }

    pub fn cell(&self, i_r: usize, i_omega: usize) -> &Result<Propagation> {
        &self.cells[i_omega * self.n_r() + i_r]
    }

    pub fn row(&self, i_omega: usize) -> &[Result<Propagation>] {
        let n = self.n_r();
        &self.cells[i_omega * n..(i_omega + 1) * n]
    }

    /// (R, Ω_c, class) in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, &Result<Propagation>)> + '_ {
        let n = self.n_r();
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, c)| (self.r_axis[k % n], self.omega_c_axis[k / n], c))
    }

    pub fn superluminal_fraction(&self) -> f64 {
        let count = self
            .cells
            .iter()
            .filter(|c| matches!(c, Ok(Propagation::Superluminal)))
            .count();
        count as f64 / self.cells.len() as f64
    }

    /// Index runs of superluminal cells in one Ω_c row.
    pub fn superluminal_runs(&self, i_omega: usize) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut start = None;
        for (i, c) in self.row(i_omega).iter().enumerate() {
            let sup = matches!(c, Ok(Propagation::Superluminal));
            match (sup, start) {
                (true, None) => start = Some(i),
                (false, Some(s)) => {
                    runs.push((s, i - 1));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            runs.push((s, self.n_r() - 1));
        }
        runs
    }

    /// Grid spacings (ΔR, ΔΩ_c).
    pub fn spacing(&self) -> (f64, f64) {
        let d = |a: &[f64]| (a[a.len() - 1] - a[0]) / (a.len() - 1) as f64;
        (d(&self.r_axis), d(&self.omega_c_axis))
    }

    /// True when the closed-form boundary passes within one grid spacing of
    /// the cell, along either axis.
    pub fn near_boundary(&self, i_r: usize, i_omega: usize) -> bool {
        let (dr, doc) = self.spacing();
        let r = self.r_axis[i_r];
        let oc = self.omega_c_axis[i_omega];
        let vertical = matches!(omega_c_necessary(r), Ok(Some(b)) if (b - oc).abs() <= doc);
        let horizontal = pump_roots(oc)
            .map(|roots| roots.iter().any(|root| (root - r).abs() <= dr))
            .unwrap_or(false);
        vertical || horizontal
    }
}

/// Sequential evaluation of every cell. Failed cells carry their error.
pub fn classify_grid(spec: &GridSpec) -> Result<RegionGrid> {
    spec.validate()?;
    let cells = spec
        .points()
        .into_iter()
        .map(|(r, oc)| spec.classify_cell(r, oc))
        .collect();
    Ok(RegionGrid::from_cells(spec, cells))
}

/// Samples (R, Ω_c necessary(R)) of the closed-form boundary.
pub fn boundary_curve(r_range: (f64, f64), n: usize) -> Result<Vec<(f64, f64)>> {
    let (lo, hi) = r_range;
    if !(lo > 1.0) || !(hi >= lo) || !hi.is_finite() {
        return Err(Error::DomainError(
            "boundary requires 1 < R_start <= R_stop",
        ));
    }
    if n < 2 {
        return Err(Error::InvalidParams {
            field: "n",
            reason: "need at least 2 samples",
        });
    }
    linspace(r_range, n)
        .into_iter()
        .map(|r| Ok((r, omega_c_necessary(r)?.expect("R > 1"))))
        .collect()
}
