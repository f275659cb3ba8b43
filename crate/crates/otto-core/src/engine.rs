//! Engine closed forms in the high-temperature limit.
//!
//! Every optimum here is a function of the bath temperatures only: `τ`
//! (`β_h/β_c`) for the forms that are naturally written in it, and the Carnot
//! efficiency `η_c = 1 − τ` for the efficiencies at the Omega optimum and at
//! maximum work.
//!
//! The Omega objective is `Ω = 2W − η_max·Q_h`, with `η_max` the maximum
//! efficiency of the same protocol pair (for the adiabatic cycle that is
//! `η_c`).

use libm::{cbrt, cos, sqrt};

use crate::cubic::{self, TrigBranch};
use crate::cycle::{
    feasible_interval, high_t_engine_quantities, Device, ReducedParams, Regime, SuddenStroke,
};
use crate::trace::{ClosedFormTrace, Traced};
use crate::{Error, Result, ETA_C_MAX, ETA_C_MIN};

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain { what: "tau", value: tau })
    }
}

pub(crate) fn check_eta_c(eta_c: f64) -> Result<()> {
    if (ETA_C_MIN..=ETA_C_MAX).contains(&eta_c) {
        Ok(())
    } else {
        Err(Error::Domain { what: "eta_c", value: eta_c })
    }
}

/// Rejects `z` outside `(lo, 1]`; `z = 1` is the zero-work edge.
fn check_engine_z(stroke: SuddenStroke, z: f64, tau: f64) -> Result<()> {
    let interval = feasible_interval(Device::Engine, stroke.regime(), tau)?;
    if z > 1.0 || !z.is_finite() {
        return Err(Error::Infeasible { condition: "compression ratio must be at most 1", z });
    }
    if z <= interval.lo {
        let condition = match stroke {
            SuddenStroke::Compression => "positive work needs 2z² > τ(1 + z)",
            SuddenStroke::Expansion => "positive work and heat need z² + z > 2τ and z > τ",
        };
        return Err(Error::Infeasible { condition, z });
    }
    Ok(())
}

/// High-temperature efficiency at compression ratio `z`.
pub fn eta_ht(stroke: SuddenStroke, z: f64, tau: f64) -> Result<f64> {
    check_engine_z(stroke, z, tau)?;
    Ok(match stroke {
        SuddenStroke::Compression => {
            (2.0 * z * z - tau * z - tau) * (1.0 - z) / (z * z * (2.0 - tau) - tau)
        }
        SuddenStroke::Expansion => (z * z - 2.0 * tau + z) * (z - 1.0) / (2.0 * (tau - z)),
    })
}

/// Compression ratio of maximum efficiency: the `k = 0` root of
/// `(2−τ)z³ − 3τz + 2τ² = 0` (compression) or `2z³ − 3τz² + τ(2τ−1) = 0`
/// (expansion). Accepts `0 < τ ≤ 1`.
pub fn z_star_max_eta(stroke: SuddenStroke, tau: f64) -> Result<Traced<f64>> {
    if !(tau > 0.0 && tau <= 1.0) {
        return Err(Error::Domain { what: "tau", value: tau });
    }
    let mut trace = ClosedFormTrace::new();
    let z = match stroke {
        SuddenStroke::Compression => {
            let n = cubic::third_angle_of_neg_sqrt(1.0 - tau);
            trace.record("N", n);
            2.0 * sqrt(tau / (2.0 - tau)) * cos(n)
        }
        SuddenStroke::Expansion => {
            // For τ < 1/2 the arccos argument exceeds one and the cubic has a
            // single real root, reached by the hyperbolic continuation.
            let (cos_third, _) = cubic::third_angle_of_double((1.0 - tau) / tau);
            let f = tau * cos_third;
            trace.record("F", f);
            tau / 2.0 + f
        }
    };
    trace.record("z_star", z);
    Ok(Traced::new(z, trace))
}

/// Maximum attainable efficiency of the asymmetric cycle.
pub fn eta_max(stroke: SuddenStroke, tau: f64) -> Result<Traced<f64>> {
    check_tau(tau)?;
    let mut trace = ClosedFormTrace::new();
    let value = match stroke {
        SuddenStroke::Compression => {
            let n = cubic::third_angle_of_neg_sqrt(1.0 - tau);
            let c = cos(n);
            trace.record("N", n);
            (16.0 * sqrt(tau / (2.0 - tau)) * c * c * c - tau - 4.0 * (tau + 2.0) * c * c + 2.0)
                / ((1.0 + 2.0 * cos(2.0 * n)) * (tau - 2.0))
        }
        SuddenStroke::Expansion => {
            let (cos_third, _) = cubic::third_angle_of_double((1.0 - tau) / tau);
            let f = tau * cos_third;
            trace.record("F", f);
            (2.0 - tau - 2.0 * f) * (4.0 * f * (tau + 1.0) - tau * (6.0 - tau) + 4.0 * f * f)
                / (16.0 * f - 8.0 * tau)
        }
    };
    Ok(Traced::new(value, trace))
}

/// `Ω = 2W − η_max·Q_h` at compression ratio `z`, in units of `1/β_h`.
pub fn omega_objective(stroke: SuddenStroke, z: f64, tau: f64) -> Result<f64> {
    check_engine_z(stroke, z, tau)?;
    let eta_max = eta_max(stroke, tau)?.value;
    let q = high_t_engine_quantities(stroke, &ReducedParams::new(z, tau)?);
    Ok(2.0 * q.w - eta_max * q.q_h)
}

/// Efficiency at the maximum of the Omega function.
///
/// Trace symbols: `A`, `z_star`, `K` (sudden compression); `cos_B`, `z_star`,
/// `cos_D`, `C` (sudden expansion; the angles are imaginary for `η_c > 1/2`
/// so their cosines are recorded); `H`, `z_star` (sudden switch).
/// `z_star` is the optimum written in `τ`, `K`/`C` the same optimum written in
/// `η_c`.
pub fn eta_at_max_omega(regime: Regime, eta_c: f64) -> Result<Traced<f64>> {
    check_eta_c(eta_c)?;
    let tau = 1.0 - eta_c;
    let mut trace = ClosedFormTrace::new();
    let value = match regime {
        Regime::SuddenCompression => {
            let a = cubic::third_angle_of_neg_sqrt(eta_c);
            let (ca, c2a) = (cos(a), cos(2.0 * a));
            trace.record("A", a);

            let z_star = cbrt(
                tau + tau
                    * (tau - 2.0 + 4.0 * (2.0 + tau) * ca * ca
                        - 16.0 * sqrt(tau / (2.0 - tau)) * ca * ca * ca)
                    / (2.0 * (tau - 2.0) * (1.0 + 2.0 * c2a)),
            );
            trace.record("z_star", z_star);

            let k = cbrt(
                1.0 - eta_c
                    - (1.0 - eta_c)
                        * (-1.0 - 4.0 * (eta_c - 3.0) * ca * ca
                            - eta_c
                            - 16.0 * sqrt((1.0 - eta_c) / (1.0 + eta_c)) * ca * ca * ca)
                        / (2.0 * (1.0 + 2.0 * c2a) * (1.0 + eta_c)),
            );
            trace.record("K", k);
            (k - 1.0) * (2.0 * k * k - (1.0 - eta_c) * (k + 1.0))
                / ((1.0 - eta_c) - (1.0 + eta_c) * k * k)
        }
        Regime::SuddenExpansion => {
            // B (in τ) and D (in η_c) are the same angle.
            let (cb, c2b) = cubic::third_angle_of_double((1.0 - tau) / tau);
            trace.record("cos_B", cb);
            let z_star = cbrt(
                tau + tau
                    * (tau - 2.0 + 2.0 * tau * cb)
                    * (3.0 * tau - 6.0 + 4.0 * (1.0 + tau) * cb + 2.0 * tau * c2b)
                    / (32.0 * cb - 16.0),
            );
            trace.record("z_star", z_star);

            let (cd, c2d) = cubic::third_angle_of_double(eta_c / (1.0 - eta_c));
            trace.record("cos_D", cd);
            let c = cbrt(
                1.0 - eta_c
                    + (-3.0 - 4.0 * cd * (eta_c - 2.0) - 2.0 * c2d * (eta_c - 1.0) - 3.0 * eta_c)
                        * (1.0 - eta_c)
                        * (-1.0 - eta_c - 2.0 * cd * (eta_c - 1.0))
                        / (32.0 * cd - 16.0),
            );
            trace.record("C", c);
            (1.0 - c) * (2.0 * (eta_c - 1.0) + c * (c + 1.0)) / (2.0 * (c + eta_c - 1.0))
        }
        Regime::Adiabatic => 1.0 - sqrt((2.0 - eta_c) * (1.0 - eta_c) / 2.0),
        Regime::SuddenSwitch => {
            // Square root: (z*)² = H / (2(1 + η_c)) at the Omega optimum.
            let h = sqrt(
                2.0 * (1.0 - eta_c)
                    * (2.0 + 3.0 * eta_c * eta_c + 2.0 * eta_c * sqrt(2.0 * (1.0 - eta_c)) + eta_c),
            );
            trace.record("H", h);
            trace.record("z_star", sqrt(h / (2.0 * (1.0 + eta_c))));
            (2.0 - h - 2.0 * eta_c * eta_c) * (2.0 - h + 2.0 * eta_c)
                / (2.0 * (2.0 - h - 2.0 * eta_c) * (1.0 + eta_c) * (1.0 + eta_c))
        }
    };
    Ok(Traced::new(value, trace))
}

/// Compression ratio of maximum work, `τ^{1/3}` for both asymmetric cycles.
pub fn z_star_max_work(_stroke: SuddenStroke, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    Ok(cbrt(tau))
}

/// Efficiency at maximum work output.
pub fn eta_max_work(stroke: SuddenStroke, eta_c: f64) -> Result<f64> {
    check_eta_c(eta_c)?;
    Ok(match stroke {
        SuddenStroke::Compression => {
            let r = cbrt(1.0 - eta_c);
            (3.0 * r - 3.0 + eta_c) / (r - 1.0 - eta_c)
        }
        SuddenStroke::Expansion => {
            let s = 1.0 - libm::pow(1.0 - eta_c, 2.0 / 3.0);
            (3.0 * s - 2.0 * eta_c) / (2.0 * s)
        }
    })
}

/// Coefficients of `η^Ω = c1·η_c + c2·η_c² + c3·η_c³ + …`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorCoeffs {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

pub fn taylor_coeffs(stroke: SuddenStroke) -> TaylorCoeffs {
    let s3 = sqrt(3.0);
    let c1 = 11.0 * s3 / 4.0 - 4.5;
    match stroke {
        SuddenStroke::Compression => TaylorCoeffs {
            c1,
            c2: (8339.0 - 4804.0 * s3) / 144.0,
            c3: 5.0 * (-179246.0 + 103503.0 * s3) / 1728.0,
        },
        SuddenStroke::Expansion => TaylorCoeffs {
            c1,
            c2: (1414.0 - 815.0 * s3) / 36.0,
            c3: (-93262.0 + 53853.0 * s3) / 432.0,
        },
    }
}

/// Lost over extracted work, `η_c/η − 1`.
pub fn fractional_loss(eta: f64, eta_c: f64) -> Result<f64> {
    if !(eta_c > 0.0 && eta_c < 1.0) {
        return Err(Error::Domain { what: "eta_c", value: eta_c });
    }
    if !(eta > 0.0 && eta <= eta_c) {
        return Err(Error::Domain { what: "eta", value: eta });
    }
    Ok(eta_c / eta - 1.0)
}

/// Fractional loss of work at maximum work output.
pub fn fractional_loss_max_work(stroke: SuddenStroke, eta_c: f64) -> Result<f64> {
    check_eta_c(eta_c)?;
    Ok(match stroke {
        SuddenStroke::Compression => {
            let r = cbrt(1.0 - eta_c);
            (r * (3.0 - eta_c) + eta_c * (2.0 + eta_c) - 3.0) / (3.0 - eta_c - 3.0 * r)
        }
        SuddenStroke::Expansion => {
            let r = libm::pow(1.0 - eta_c, 2.0 / 3.0);
            (r * (2.0 * eta_c - 3.0) - 4.0 * eta_c + 3.0) / (3.0 * r + 2.0 * eta_c - 3.0)
        }
    })
}

/// Operating point of an asymmetric engine at a given compression ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnginePoint {
    pub z: f64,
    pub eta: f64,
    pub w: f64,
    pub q_h: f64,
    pub omega_value: f64,
}

pub fn engine_point(stroke: SuddenStroke, z: f64, tau: f64) -> Result<EnginePoint> {
    let eta = eta_ht(stroke, z, tau)?;
    let q = high_t_engine_quantities(stroke, &ReducedParams::new(z, tau)?);
    let eta_max = eta_max(stroke, tau)?.value;
    Ok(EnginePoint { z, eta, w: q.w, q_h: q.q_h, omega_value: 2.0 * q.w - eta_max * q.q_h })
}

/// The `k = 0` branch of the generic trigonometric solver applied to the
/// monic efficiency cubic. Only defined where that cubic has three real roots.
pub fn z_star_max_eta_generic(stroke: SuddenStroke, tau: f64) -> Result<f64> {
    let m = stationarity_cubic(stroke, tau)?;
    cubic::trig_root(&m, TrigBranch::K0)
}

/// Monic form of the stationarity cubic of the high-temperature efficiency.
pub fn stationarity_cubic(stroke: SuddenStroke, tau: f64) -> Result<cubic::MonicCubic> {
    match stroke {
        SuddenStroke::Compression => {
            cubic::MonicCubic::from_coefficients(2.0 - tau, 0.0, -3.0 * tau, 2.0 * tau * tau)
        }
        SuddenStroke::Expansion => cubic::MonicCubic::from_coefficients(
            2.0,
            -3.0 * tau,
            0.0,
            tau * (2.0 * tau - 1.0),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SuddenStroke::{Compression as Sc, Expansion as Se};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    // Reference values below were computed at 40 significant digits from the
    // raw cycle quantities (grid + Newton on dΩ/dz), independently of these
    // closed forms.
    const ETA_MAX_SC_HALF: f64 = 0.182_212_268_729_548_36;
    const ETA_OMEGA_SC_HALF: f64 = 0.178_040_589_481_101_66;
    const ETA_OMEGA_SE_HALF: f64 = 0.154_144_800_575_206_97;
    const ETA_MW_SC_HALF: f64 = 0.168_339_955_531_418_30;
    const ETA_MW_SE_HALF: f64 = 0.148_792_808_040_342_37;
    const ETA_OMEGA_SS_HALF: f64 = 0.110_317_986_021_365_55;

    #[test]
    fn eta_ht_examples() {
        assert!(eta_ht(Sc, 1.0 - 1e-12, 0.5).unwrap().abs() < 1e-11);
        assert_eq!(eta_ht(Sc, 1.0, 0.5).unwrap(), 0.0);
        assert!(close(eta_ht(Sc, 0.742227, 0.5).unwrap(), 0.182214, 1e-5));
        assert!(close(eta_ht(Se, 0.75, 0.5).unwrap(), 0.15625, 1e-15));
    }

    #[test]
    fn eta_ht_rejects_infeasible() {
        let err = eta_ht(Sc, 0.6, 0.5).unwrap_err();
        assert!(matches!(err, Error::Infeasible { .. }));
        assert!(eta_ht(Se, 0.55, 0.5).is_err());
        assert!(eta_ht(Sc, 1.2, 0.5).is_err());
    }

    #[test]
    fn z_star_examples() {
        assert!(close(z_star_max_eta(Sc, 1.0).unwrap().value, 1.0, 1e-12));
        let z = z_star_max_eta(Sc, 0.5).unwrap();
        assert!(close(z.value, 0.742_227_198_968_559_2, 1e-14));
        assert!(z.trace.get("N").is_some());
        assert_eq!(z_star_max_eta(Se, 0.5).unwrap().value, 0.75);
        assert!(close(z_star_max_eta(Se, 0.3).unwrap().value, 0.610_816_287_549_945_9, 1e-14));
    }

    #[test]
    fn z_star_is_a_root_and_feasible() {
        for i in 1..20 {
            let tau = i as f64 / 20.0;
            for stroke in SuddenStroke::ALL {
                let z = z_star_max_eta(stroke, tau).unwrap().value;
                let m = stationarity_cubic(stroke, tau).unwrap();
                assert!(m.residual(z) < 1e-12, "{stroke:?} τ={tau}");
                let interval = feasible_interval(Device::Engine, stroke.regime(), tau).unwrap();
                assert!(interval.contains(z), "{stroke:?} τ={tau} z={z}");
            }
        }
    }

    #[test]
    fn eta_max_examples() {
        assert!(close(eta_max(Sc, 0.5).unwrap().value, ETA_MAX_SC_HALF, 1e-14));
        assert!(close(eta_max(Se, 0.5).unwrap().value, 0.15625, 1e-15));
        assert!(eta_max(Sc, 1.0 - 1e-6).unwrap().value.abs() < 1e-5);
        assert!(eta_max(Sc, 1.0).is_err());
    }

    #[test]
    fn eta_max_equals_eta_at_z_star() {
        for i in 1..20 {
            let tau = i as f64 / 20.0;
            for stroke in SuddenStroke::ALL {
                let z = z_star_max_eta(stroke, tau).unwrap().value;
                let direct = eta_ht(stroke, z, tau).unwrap();
                let closed = eta_max(stroke, tau).unwrap().value;
                assert!(close(direct, closed, 1e-10), "{stroke:?} τ={tau}");
            }
        }
    }

    #[test]
    fn omega_objective_examples() {
        assert!(close(omega_objective(Sc, 0.769, 0.5).unwrap(), 0.056_864_465, 1e-9));
        let at_075 = omega_objective(Sc, 0.75, 0.5).unwrap();
        assert!(close(at_075, 0.055_435_140, 1e-9));
        assert!(at_075 < omega_objective(Sc, 0.769, 0.5).unwrap());
        assert!(close(omega_objective(Se, 0.7725, 0.5).unwrap(), 0.053630, 2e-6));
        assert!(omega_objective(Sc, 0.5, 0.5).is_err());
    }

    #[test]
    fn eta_at_max_omega_examples() {
        let sc = eta_at_max_omega(Regime::SuddenCompression, 0.5).unwrap();
        assert!(close(sc.value, ETA_OMEGA_SC_HALF, 1e-13));
        for key in ["A", "K", "z_star"] {
            assert!(sc.trace.get(key).is_some(), "{key}");
        }
        let se = eta_at_max_omega(Regime::SuddenExpansion, 0.5).unwrap();
        assert!(close(se.value, ETA_OMEGA_SE_HALF, 1e-13));
        for key in ["cos_B", "cos_D", "C", "z_star"] {
            assert!(se.trace.get(key).is_some(), "{key}");
        }
        let adi = eta_at_max_omega(Regime::Adiabatic, 0.5).unwrap().value;
        assert!(close(adi, 1.0 - 0.375f64.sqrt(), 1e-15));
        let ss = eta_at_max_omega(Regime::SuddenSwitch, 0.5).unwrap();
        assert!(close(ss.value, ETA_OMEGA_SS_HALF, 1e-13));
        assert!(close(ss.trace.get("H").unwrap(), 4.25f64.sqrt(), 1e-15));
    }

    #[test]
    fn eta_at_max_omega_domain() {
        assert!(eta_at_max_omega(Regime::SuddenCompression, 0.0).is_err());
        assert!(eta_at_max_omega(Regime::SuddenCompression, 1.0).is_err());
        assert!(eta_at_max_omega(Regime::Adiabatic, 1e-7).is_err());
        assert!(eta_at_max_omega(Regime::SuddenSwitch, ETA_C_MAX).is_ok());
    }

    #[test]
    fn omega_optimum_written_two_ways() {
        for i in 1..20 {
            let eta_c = i as f64 / 20.0;
            let tau = 1.0 - eta_c;
            let sc = eta_at_max_omega(Regime::SuddenCompression, eta_c).unwrap().trace;
            let k = sc.get("K").unwrap();
            assert!(close(k, sc.get("z_star").unwrap(), 1e-12));
            // stationarity of Ω: z³ = τ(2 − η_max)/2
            let m = eta_max(Sc, tau).unwrap().value;
            assert!(close(k, cbrt(tau * (2.0 - m) / 2.0), 1e-12), "η_c={eta_c}");

            let se = eta_at_max_omega(Regime::SuddenExpansion, eta_c).unwrap().trace;
            let c = se.get("C").unwrap();
            assert!(close(c, se.get("z_star").unwrap(), 1e-12));
            let m = eta_max(Se, tau).unwrap().value;
            assert!(close(c, cbrt(tau * (2.0 - m) / 2.0), 1e-12), "η_c={eta_c}");
        }
    }

    #[test]
    fn eta_max_work_examples() {
        assert!(close(eta_max_work(Sc, 0.5).unwrap(), ETA_MW_SC_HALF, 1e-14));
        assert!(close(eta_max_work(Se, 0.5).unwrap(), ETA_MW_SE_HALF, 1e-14));
        assert!(close(eta_max_work(Sc, ETA_C_MAX).unwrap(), 1.0, 2e-2));
        assert!(close(eta_max_work(Se, ETA_C_MAX).unwrap(), 0.5, 1e-3));
    }

    #[test]
    fn eta_max_work_is_eta_at_cube_root() {
        for i in 1..20 {
            let eta_c = i as f64 / 20.0;
            let tau = 1.0 - eta_c;
            for stroke in SuddenStroke::ALL {
                let z = z_star_max_work(stroke, tau).unwrap();
                let direct = eta_ht(stroke, z, tau).unwrap();
                assert!(close(direct, eta_max_work(stroke, eta_c).unwrap(), 1e-12));
            }
        }
    }

    #[test]
    fn taylor_coefficients() {
        let sc = taylor_coeffs(Sc);
        let se = taylor_coeffs(Se);
        assert_eq!(sc.c1, se.c1);
        assert!(close(sc.c1, 0.263_139_720_814_412_6, 1e-15));
        assert!(close(sc.c2, 0.126_582_780_827_177, 1e-12));
        assert!(close(se.c2, 0.066_071_995_315_694_6, 1e-12));
        assert!(close(sc.c3, 0.076_547_267_944_174, 1e-9));
        assert!(close(se.c3, 0.032_713_287_052_659_5, 1e-10));
    }

    #[test]
    fn fractional_loss_examples() {
        assert_eq!(fractional_loss(0.5, 0.5).unwrap(), 0.0);
        assert_eq!(fractional_loss(0.25, 0.5).unwrap(), 1.0);
        let mw = eta_max_work(Sc, 0.5).unwrap();
        let r = fractional_loss(mw, 0.5).unwrap();
        assert!(close(r, 1.9702, 1e-4));
        assert!(close(r, fractional_loss_max_work(Sc, 0.5).unwrap(), 1e-12));
        assert!(close(fractional_loss_max_work(Se, 0.5).unwrap(), 2.3604, 1e-4));
        assert!(fractional_loss(0.0, 0.5).is_err());
        assert!(fractional_loss(-0.1, 0.5).is_err());
        assert!(fractional_loss(0.6, 0.5).is_err());
    }

    #[test]
    fn fractional_loss_composition() {
        for i in 1..20 {
            let eta_c = i as f64 / 20.0;
            for stroke in SuddenStroke::ALL {
                let via = fractional_loss(eta_max_work(stroke, eta_c).unwrap(), eta_c).unwrap();
                let closed = fractional_loss_max_work(stroke, eta_c).unwrap();
                assert!(close(via, closed, 1e-10 * via.max(1.0)), "{stroke:?} η_c={eta_c}");
            }
            assert!(
                fractional_loss_max_work(Se, eta_c).unwrap()
                    > fractional_loss_max_work(Sc, eta_c).unwrap()
            );
        }
    }

    #[test]
    fn generic_solver_matches_specialized_root() {
        for i in 1..20 {
            let tau = i as f64 / 20.0;
            let special = z_star_max_eta(Sc, tau).unwrap().value;
            assert!(close(z_star_max_eta_generic(Sc, tau).unwrap(), special, 1e-10));
            if tau >= 0.5 {
                let special = z_star_max_eta(Se, tau).unwrap().value;
                assert!(close(z_star_max_eta_generic(Se, tau).unwrap(), special, 1e-10));
            } else {
                // single real root: outside the trigonometric regime
                assert!(z_star_max_eta_generic(Se, tau).is_err());
            }
        }
    }

    #[test]
    fn engine_point_is_consistent() {
        let p = engine_point(Sc, 0.769, 0.5).unwrap();
        assert!(close(p.eta, p.w / p.q_h, 1e-15));
        assert!(close(p.omega_value, omega_objective(Sc, 0.769, 0.5).unwrap(), 1e-15));
        let edge = engine_point(Sc, 1.0, 0.5).unwrap();
        assert_eq!(edge.eta, 0.0);
    }
}
