//! Effective parameter resolution: flags > config file > built-in defaults.

use std::path::Path;

use clap::Args;
use lambda_optics_core::{SystemParams, DEFAULT_STEP};
use serde::Deserialize;

use crate::CliError;

/// Probe Rabi frequency used when neither a flag nor the config file sets one.
pub const DEFAULT_OMEGA_P: f64 = 0.01;

/// Physical-parameter flags shared by every subcommand. All values are in
/// units of γ.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Key = value file with any of the parameter names below.
    #[arg(long, value_name = "PATH")]
    pub config: Option<std::path::PathBuf>,
    /// Decay rate |3> -> |1>.
    #[arg(long, allow_negative_numbers = true)]
    pub gamma1: Option<f64>,
    /// Decay rate |3> -> |2>.
    #[arg(long, allow_negative_numbers = true)]
    pub gamma2: Option<f64>,
    /// Incoherent pump rate R.
    #[arg(long, allow_negative_numbers = true)]
    pub pump: Option<f64>,
    /// Probe Rabi frequency.
    #[arg(long = "omega-p", allow_negative_numbers = true)]
    pub omega_p: Option<f64>,
    /// Coupling Rabi frequency.
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    pub omega_c: Option<f64>,
    /// Probe detuning.
    #[arg(long = "delta-p", allow_negative_numbers = true)]
    pub delta_p: Option<f64>,
    /// Coupling detuning.
    #[arg(long = "delta-c", allow_negative_numbers = true)]
    pub delta_c: Option<f64>,
    /// Susceptibility prefactor K in chi = K rho31.
    #[arg(long = "chi-prefactor", allow_negative_numbers = true)]
    pub chi_prefactor: Option<f64>,
    /// Probe carrier frequency in units of gamma (group index only).
    #[arg(long = "nu-p", allow_negative_numbers = true)]
    pub nu_p_scale: Option<f64>,
    /// Finite-difference step in delta_p for the dispersion slope.
    #[arg(long, allow_negative_numbers = true)]
    pub step: Option<f64>,
}

/// Contents of a config file. Every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub gamma1: Option<f64>,
    pub gamma2: Option<f64>,
    #[serde(rename = "pump_R")]
    pub pump_r: Option<f64>,
    pub omega_p: Option<f64>,
    pub omega_c: Option<f64>,
    pub delta_p: Option<f64>,
    pub delta_c: Option<f64>,
    pub chi_prefactor: Option<f64>,
    pub nu_p_scale: Option<f64>,
    pub step: Option<f64>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("config file: {}", e.message())))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

/// Fully resolved inputs for a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Effective {
    pub params: SystemParams,
    pub step: f64,
}

impl Effective {
    /// `# config: key = value` lines in a fixed order.
    pub fn comment_lines(&self) -> Vec<String> {
        let p = &self.params;
        [
            ("gamma1", p.gamma1),
            ("gamma2", p.gamma2),
            ("pump_R", p.pump_r),
            ("omega_p", p.omega_p),
            ("omega_c", p.omega_c),
            ("delta_p", p.delta_p),
            ("delta_c", p.delta_c),
            ("chi_prefactor", p.chi_prefactor),
            ("nu_p_scale", p.nu_p_scale),
            ("step", self.step),
        ]
        .iter()
        .map(|(k, v)| format!("# config: {k} = {}", crate::output::num(*v)))
        .collect()
    }
}

impl ParamArgs {
    pub fn resolve(&self) -> Result<Effective, CliError> {
        let file = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        self.resolve_with(&file)
    }

    pub fn resolve_with(&self, file: &ConfigFile) -> Result<Effective, CliError> {
        let d = SystemParams::default();
        let pick = |flag: Option<f64>, from_file: Option<f64>, default: f64| {
            flag.or(from_file).unwrap_or(default)
        };
        let params = SystemParams {
            gamma1: pick(self.gamma1, file.gamma1, d.gamma1),
            gamma2: pick(self.gamma2, file.gamma2, d.gamma2),
            pump_r: pick(self.pump, file.pump_r, d.pump_r),
            omega_p: pick(self.omega_p, file.omega_p, DEFAULT_OMEGA_P),
            omega_c: pick(self.omega_c, file.omega_c, d.omega_c),
            delta_p: pick(self.delta_p, file.delta_p, d.delta_p),
            delta_c: pick(self.delta_c, file.delta_c, d.delta_c),
            chi_prefactor: pick(self.chi_prefactor, file.chi_prefactor, d.chi_prefactor),
            nu_p_scale: pick(self.nu_p_scale, file.nu_p_scale, d.nu_p_scale),
        };
        let step = pick(self.step, file.step, DEFAULT_STEP);
        params.validate().map_err(CliError::from)?;
        if !(step > 0.0 && step.is_finite()) {
            return Err(CliError::Usage("--step must be > 0".into()));
        }
        Ok(Effective { params, step })
    }
}
