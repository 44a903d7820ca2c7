//! One-dimensional parameter sweeps and the figure presets.

use clap::ValueEnum;
use lambda_optics_core::regionmap::linspace;
use lambda_optics_core::{evaluate_point, PointSolution, Result, SystemParams};
use rayon::prelude::*;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVariable {
    #[value(name = "delta_p")]
    DeltaP,
    #[value(name = "omega_c")]
    OmegaC,
    #[value(name = "pump_R")]
    PumpR,
}

impl SweepVariable {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepVariable::DeltaP => "delta_p",
            SweepVariable::OmegaC => "omega_c",
            SweepVariable::PumpR => "pump_R",
        }
    }

    pub fn apply(&self, p: SystemParams, value: f64) -> SystemParams {
        match self {
            SweepVariable::DeltaP => p.with_delta_p(value),
            SweepVariable::OmegaC => p.with_omega_c(value),
            SweepVariable::PumpR => p.with_pump(value),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub base: SystemParams,
    pub step: f64,
}

impl SweepSpec {
    pub fn validate(&self) -> std::result::Result<(), CliError> {
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(CliError::Usage(
                "sweep needs finite --start < --stop".into(),
            ));
        }
        if self.count < 2 {
            return Err(CliError::Usage("sweep needs --count >= 2".into()));
        }
        self.base.validate().map_err(CliError::from)
    }

    pub fn values(&self) -> Vec<f64> {
        linspace((self.start, self.stop), self.count)
    }

    /// Evaluate every point in parallel. The result is in sweep order.
    pub fn run(&self) -> Vec<(SystemParams, Result<PointSolution>)> {
        self.values()
            .par_iter()
            .map(|&v| {
                let p = self.variable.apply(self.base, v);
                (p, evaluate_point(&p, self.step))
            })
            .collect()
    }

    pub fn comment_line(&self) -> String {
        format!(
            "# sweep: variable = {} start = {} stop = {} count = {}",
            self.variable.as_str(),
            crate::output::num(self.start),
            crate::output::num(self.stop),
            self.count
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Fig3,
    Fig4,
    Fig5a,
    Fig5b,
}

/// One curve of a preset: its file name, line style and sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetCurve {
    pub file_name: String,
    pub style: &'static str,
    pub label: String,
    pub spec: SweepSpec,
}

const STYLES: [&str; 3] = ["solid", "dashed", "dash-dotted"];

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig5a => "fig5a",
            Preset::Fig5b => "fig5b",
        }
    }

    /// (swept variable, range, count, curve variable, curve values).
    fn layout(&self) -> (SweepVariable, (f64, f64), usize, SweepVariable, [f64; 3]) {
        use SweepVariable::*;
        match self {
            Preset::Fig3 => (DeltaP, (-5.0, 5.0), 1001, OmegaC, [1.25, 2.08, 3.0]),
            Preset::Fig4 => (DeltaP, (-5.0, 5.0), 1001, PumpR, [0.8, 1.14, 1.5]),
            Preset::Fig5a => (OmegaC, (0.5, 6.0), 551, PumpR, [1.0, 1.14, 1.5]),
            Preset::Fig5b => (PumpR, (0.2, 8.0), 781, OmegaC, [1.99, 2.08, 3.0]),
        }
    }

    /// Caption parameters laid over `base`. `base` keeps only what the
    /// captions leave open (prefactor, carrier frequency).
    pub fn pinned(&self, base: SystemParams) -> SystemParams {
        let mut p = base;
        p.gamma1 = 1.0;
        p.gamma2 = 1.0;
        p.omega_p = 0.01;
        p.delta_c = 0.0;
        p.delta_p = 0.0;
        match self {
            Preset::Fig3 => p.pump_r = 1.5,
            Preset::Fig4 => p.omega_c = 3.0,
            Preset::Fig5a | Preset::Fig5b => {}
        }
        p
    }

    pub fn curves(&self, base: SystemParams, step: f64) -> Vec<PresetCurve> {
        let (variable, (start, stop), count, curve_var, values) = self.layout();
        let pinned = self.pinned(base);
        values
            .iter()
            .zip(STYLES)
            .map(|(&v, style)| PresetCurve {
                file_name: format!("{}_{}_{}.csv", self.name(), curve_var.as_str(), v),
                style,
                label: format!("{} = {}", curve_var.as_str(), v),
                spec: SweepSpec {
                    variable,
                    start,
                    stop,
                    count,
                    base: curve_var.apply(pinned, v),
                    step,
                },
            })
            .collect()
    }
}
