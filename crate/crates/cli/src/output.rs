//! CSV formatting. Numbers always carry 12 significant digits in scientific
//! notation so output is byte-identical across runs and platforms.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use lambda_optics_core::{PointSolution, Result, SystemParams};

use crate::CliError;

pub const POINT_HEADER: &str =
    "delta_p,delta_c,omega_p,omega_c,pump_R,chi_re,chi_im,slope,ng_minus_1,class,rho11,rho22,rho33,error";
pub const REGION_HEADER: &str = "pump_R,omega_c,class";
pub const BOUNDARY_HEADER: &str = "pump_R,omega_c_necessary";

pub fn num(x: f64) -> String {
    format!("{x:.11e}")
}

// Error text goes into a single CSV field.
fn field(msg: &str) -> String {
    msg.replace([',', '\n', '\r'], ";")
}

/// One point/sweep row. Failed points keep their inputs and leave the
/// computed columns empty.
pub fn point_row(p: &SystemParams, result: &Result<PointSolution>) -> String {
    let mut row = [p.delta_p, p.delta_c, p.omega_p, p.omega_c, p.pump_r]
        .iter()
        .map(|&v| num(v))
        .collect::<Vec<_>>()
        .join(",");
    match result {
        Ok(sol) => {
            let r = &sol.response;
            let [p11, p22, p33] = sol.state.populations();
            let _ = write!(
                row,
                ",{},{},{},{},{},{},{},{},",
                num(r.chi_re),
                num(r.chi_im),
                num(r.slope),
                num(r.group_index_minus_one),
                r.classification,
                num(p11),
                num(p22),
                num(p33)
            );
        }
        Err(e) => {
            let _ = write!(row, ",,,,,,,,,{}", field(&e.to_string()));
        }
    }
    row
}

/// Comment block, header and rows joined with `\n`.
pub fn render(comments: &[String], header: &str, rows: &[String]) -> String {
    let mut out = String::new();
    for line in comments {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    out
}

/// Write to `path`, or standard output when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> std::result::Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
