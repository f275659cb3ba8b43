//! Refrigerator closed forms in the high-temperature limit, parametrized by
//! the Carnot COP `ζ_c = τ/(1 − τ)`.
//!
//! The Omega objective for cooling is `Ω = 2Q_c − ζ_max·W_in`. The maximum-COP
//! compression ratios sit on the `k = 2` branch (phase offset `4π/3`) of the
//! same cubics whose `k = 0` roots give the engine's maximum efficiency.

use core::f64::consts::PI;

use libm::{cbrt, cos, sqrt};

use crate::cubic;
use crate::cycle::{
    feasible_interval, high_t_fridge_quantities, Device, ReducedParams, Regime, SuddenStroke,
};
use crate::trace::{FridgeTrace, Traced};
use crate::{Error, Result, ZETA_C_MAX, ZETA_C_MIN};

fn check_zeta_c(zeta_c: f64) -> Result<()> {
    if (ZETA_C_MIN..=ZETA_C_MAX).contains(&zeta_c) {
        Ok(())
    } else {
        Err(Error::Domain { what: "zeta_c", value: zeta_c })
    }
}

const NEEDS_WARM_COLD_BATH: &str =
    "cooling with a sudden expansion stroke needs zeta_c > 1 (tau > 1/2)";

/// Sudden expansion leaves `Q_c = τ − (1 + z²)/2`, positive only for `τ > 1/2`.
fn check_two_stroke_feasible(zeta_c: f64) -> Result<()> {
    if zeta_c > 1.0 {
        Ok(())
    } else {
        Err(Error::InfeasibleDevice { reason: NEEDS_WARM_COLD_BATH })
    }
}

fn tau_of(zeta_c: f64) -> f64 {
    zeta_c / (1.0 + zeta_c)
}

/// Rejects `z` outside `(0, z_hi]`; `z_hi` is the zero-cooling edge.
fn check_fridge_z(stroke: SuddenStroke, z: f64, tau: f64) -> Result<()> {
    let interval = feasible_interval(Device::Fridge, stroke.regime(), tau)?;
    if interval.is_empty() {
        return Err(Error::InfeasibleDevice { reason: NEEDS_WARM_COLD_BATH });
    }
    if !(z > 0.0 && z <= interval.hi) {
        let condition = match stroke {
            SuddenStroke::Compression => "positive cooling needs 0 < z < τ",
            SuddenStroke::Expansion => "positive cooling needs 0 < z² < 2τ − 1",
        };
        return Err(Error::Infeasible { condition, z });
    }
    Ok(())
}

/// High-temperature COP at compression ratio `z`.
pub fn cop_ht(stroke: SuddenStroke, z: f64, tau: f64) -> Result<f64> {
    check_fridge_z(stroke, z, tau)?;
    Ok(match stroke {
        SuddenStroke::Compression => {
            2.0 * z * z * (z - tau) / ((1.0 - z) * (2.0 * z * z - tau * (1.0 + z)))
        }
        SuddenStroke::Expansion => {
            z * (2.0 * tau - (z * z + 1.0)) / ((z - 1.0) * (z * (1.0 + z) - 2.0 * tau))
        }
    })
}

/// `cos(θ + 4π/3)` for the third-angle `θ` of an `arccos(−√(1 − e²))`
/// argument.
fn k2_cos_neg_sqrt(e: f64) -> f64 {
    cos(cubic::third_angle_of_neg_sqrt(e) + 4.0 * PI / 3.0)
}

/// `cos(θ + 4π/3)` for `θ = (1/3)·arccos(2r² − 1)`, `r ≤ 1`.
fn k2_cos_double(r: f64) -> f64 {
    let theta = (PI - 2.0 * libm::asin(r.clamp(0.0, 1.0))) / 3.0;
    cos(theta + 4.0 * PI / 3.0)
}

/// Compression ratio of maximum COP (the `k = 2` branch).
///
/// Trace: `G` and `z_star` (sudden compression), `J` (sudden expansion, equal
/// to the optimum itself). `G = sin(π/6 − θ)` is computed as `−cos(θ + 4π/3)`.
pub fn z_star_max_cop(stroke: SuddenStroke, zeta_c: f64) -> Result<Traced<f64>> {
    check_zeta_c(zeta_c)?;
    let mut trace = FridgeTrace::new();
    let z = match stroke {
        SuddenStroke::Compression => {
            let k2 = k2_cos_neg_sqrt(1.0 / (1.0 + zeta_c));
            trace.record("G", -k2);
            2.0 * sqrt(zeta_c / (2.0 + zeta_c)) * k2
        }
        SuddenStroke::Expansion => {
            check_two_stroke_feasible(zeta_c)?;
            let j = zeta_c / (2.0 * (1.0 + zeta_c))
                + zeta_c / (1.0 + zeta_c) * k2_cos_double(1.0 / zeta_c);
            trace.record("J", j);
            j
        }
    };
    trace.record("z_star", z);
    Ok(Traced::new(z, trace))
}

fn l_of(g: f64, zeta_c: f64) -> f64 {
    let s = sqrt(zeta_c / (2.0 + zeta_c));
    8.0 * g * g * zeta_c * (zeta_c + 2.0 * g * (1.0 + zeta_c) * s)
        / ((2.0 + zeta_c)
            * (1.0 + 2.0 * g * s)
            * (zeta_c * (1.0 - 2.0 * g * s) - 8.0 * g * g * zeta_c * (1.0 + zeta_c) / (2.0 + zeta_c)))
}

fn x_of(j: f64, zeta_c: f64) -> f64 {
    j * (2.0 * zeta_c - (1.0 + zeta_c) * (1.0 + j * j))
        / ((j - 1.0) * (j * (j + 1.0) * (1.0 + zeta_c) - 2.0 * zeta_c))
}

/// Maximum COP (`L` for sudden compression, `X` for sudden expansion).
pub fn cop_max(stroke: SuddenStroke, zeta_c: f64) -> Result<Traced<f64>> {
    let Traced { trace: mut tr, .. } = z_star_max_cop(stroke, zeta_c)?;
    let value = match stroke {
        SuddenStroke::Compression => {
            let l = l_of(tr.get("G").unwrap_or(f64::NAN), zeta_c);
            tr.record("L", l);
            l
        }
        SuddenStroke::Expansion => {
            let x = x_of(tr.get("J").unwrap_or(f64::NAN), zeta_c);
            tr.record("X", x);
            x
        }
    };
    Ok(Traced::new(value, tr))
}

/// `Ω = 2Q_c − ζ_max·W_in` at compression ratio `z`, in units of `1/β_h`.
pub fn omega_objective_fridge(stroke: SuddenStroke, z: f64, tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::Domain { what: "tau", value: tau });
    }
    check_fridge_z(stroke, z, tau)?;
    let zeta_max = cop_max(stroke, tau / (1.0 - tau))?.value;
    let q = high_t_fridge_quantities(stroke, &ReducedParams::new(z, tau)?);
    Ok(2.0 * q.q_c - zeta_max * q.w_in)
}

/// COP at the maximum of the Omega function.
///
/// Trace: `G`, `L`, `M` (sudden compression); `J`, `X`, `Y` (sudden
/// expansion); `P` (sudden switch). `M`, `Y` and `P` are the optimal
/// compression ratios.
pub fn cop_at_max_omega(regime: Regime, zeta_c: f64) -> Result<Traced<f64>> {
    check_zeta_c(zeta_c)?;
    let z = zeta_c;
    let value_and_trace = match regime {
        Regime::SuddenCompression => {
            let Traced { value: l, trace: mut tr } = cop_max(SuddenStroke::Compression, z)?;
            let m = cbrt(l * z / ((1.0 + z) * (2.0 + l)));
            tr.record("M", m);
            let value = 2.0 * m * m * (z - m * (1.0 + z))
                / ((1.0 - m) * (z * (m + 1.0) - 2.0 * m * m * (1.0 + z)));
            (value, tr)
        }
        Regime::SuddenExpansion => {
            let Traced { value: x, trace: mut tr } = cop_max(SuddenStroke::Expansion, z)?;
            let y = cbrt(x * z / ((1.0 + z) * (2.0 + x)));
            tr.record("Y", y);
            let value = y * (2.0 * z - (y * y + 1.0) * (1.0 + z))
                / ((y - 1.0) * (y * (1.0 + y) * (1.0 + z) - 2.0 * z));
            (value, tr)
        }
        Regime::Adiabatic => (z / (sqrt((2.0 + z) * (1.0 + z)) - z), FridgeTrace::new()),
        Regime::SuddenSwitch => {
            check_two_stroke_feasible(z)?;
            let root = 2.0 * sqrt(2.0 * z * (1.0 + z));
            let p = sqrt(
                z * (root - 3.0 * z - 1.0) / ((1.0 + z) * (root - 3.0 * (1.0 + z))),
            );
            let mut tr = FridgeTrace::new();
            tr.record("P", p);
            let value = p * (1.0 + p * (1.0 + z) - z) / ((1.0 - p) * (p * (1.0 + z) - z));
            (value, tr)
        }
    };
    Ok(Traced::new(value_and_trace.0, value_and_trace.1))
}

/// Operating point of an asymmetric refrigerator at a given compression ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FridgePoint {
    pub z: f64,
    pub zeta: f64,
    pub q_c: f64,
    pub w_in: f64,
    pub omega_value: f64,
}

pub fn fridge_point(stroke: SuddenStroke, z: f64, tau: f64) -> Result<FridgePoint> {
    let zeta = cop_ht(stroke, z, tau)?;
    let q = high_t_fridge_quantities(stroke, &ReducedParams::new(z, tau)?);
    let zeta_max = cop_max(stroke, tau / (1.0 - tau))?.value;
    Ok(FridgePoint {
        z,
        zeta,
        q_c: q.q_c,
        w_in: q.w_in,
        omega_value: 2.0 * q.q_c - zeta_max * q.w_in,
    })
}

/// `τ` for a Carnot COP.
pub fn tau_from_zeta_c(zeta_c: f64) -> Result<f64> {
    check_zeta_c(zeta_c)?;
    Ok(tau_of(zeta_c))
}
