use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain { what: &'static str, value: f64 },
    /// The requested point is outside the region where the device works.
    Infeasible { condition: &'static str, z: f64 },
    /// The device cannot operate at all for these bath temperatures.
    InfeasibleDevice { reason: &'static str },
    /// Leading coefficient of a cubic is zero.
    NotCubic,
    /// The cubic does not have three real roots expressible by the cosine form.
    NotTrigRegime { arccos_arg: f64 },
    /// No finite objective value on the search grid.
    NoFeasiblePoint,
    /// A finite-difference sample was not finite.
    NonFinite { x: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::Infeasible { condition, z } => {
                write!(f, "z = {z} is infeasible: {condition}")
            }
            Error::InfeasibleDevice { reason } => write!(f, "infeasible device: {reason}"),
            Error::NotCubic => f.write_str("leading coefficient is zero, not a cubic"),
            Error::NotTrigRegime { arccos_arg } => write!(
                f,
                "cubic is not in the trigonometric regime (arccos argument {arccos_arg})"
            ),
            Error::NoFeasiblePoint => f.write_str("objective is not finite anywhere on the grid"),
            Error::NonFinite { x } => write!(f, "non-finite sample at x = {x}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::Infeasible { .. } => "infeasible_point",
            Error::InfeasibleDevice { .. } => "infeasible_device",
            Error::NotCubic => "not_cubic",
            Error::NotTrigRegime { .. } => "not_trig_regime",
            Error::NoFeasiblePoint => "no_feasible_point",
            Error::NonFinite { .. } => "non_finite",
        }
    }
}
