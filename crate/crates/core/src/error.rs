use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParams {
        field: &'static str,
        reason: &'static str,
    },

    /// The steady state is not unique (or numerically indistinguishable from
    /// a non-unique one).
    #[error("singular steady-state system (condition estimate {condition:.3e})")]
    SingularSystem { condition: f64 },

    #[error("time step {dt} exceeds the stability bound {max_dt}")]
    InvalidTimeStep { dt: f64, max_dt: f64 },

    #[error("step halving did not converge (last difference {difference:.3e})")]
    NotConverged { difference: f64 },

    #[error("non-physical state: trace drift {trace_drift:.3e}")]
    NonPhysicalState { trace_drift: f64 },

    #[error("unstable derivative: 3-point {three_point:.6e} vs 5-point {five_point:.6e}")]
    DerivativeUnstable { three_point: f64, five_point: f64 },

    /// A closed-form expression was called outside the regime it was derived for.
    #[error("outside formula domain: {0}")]
    DomainError(&'static str),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
}
