//! Exact steady state from the null space of the generator.

use num_complex::Complex64;
use num_traits::Zero;

use crate::density::{vec_index, DensityMatrix};
use crate::linalg::Lu;
use crate::{assemble_liouvillian, Error, Result, SystemParams};

/// Condition numbers above this mark the steady state as non-unique.
pub const MAX_CONDITION: f64 = 1e12;

const TRACE_ROW: usize = vec_index(2, 2);

/// Solve `L · vec ρ = 0` with `tr ρ = 1`.
///
/// The ρ₃₃ row of the generator is redundant (population rows sum to zero)
/// and is replaced by the trace constraint before an LU solve.
pub fn steady_state(params: &SystemParams) -> Result<DensityMatrix> {
    let l = assemble_liouvillian(params)?;
    let mut a = *l.matrix();
    let one = Complex64::new(1.0, 0.0);
    a[TRACE_ROW] = [Complex64::zero(); 9];
    for k in 0..3 {
        a[TRACE_ROW][vec_index(k, k)] = one;
    }
    let lu = Lu::factor(&a).ok_or(Error::SingularSystem {
        condition: f64::INFINITY,
    })?;
    let condition = lu.condition_one(&a);
    if !(condition <= MAX_CONDITION) {
        return Err(Error::SingularSystem { condition });
    }
    let mut rhs = [Complex64::zero(); 9];
    rhs[TRACE_ROW] = one;
    let x = lu.solve(&rhs);
    Ok(DensityMatrix::from_vec(&x))
}
