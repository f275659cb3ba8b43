//! Closed forms against the numerical oracle, ordering claims, Taylor
//! coefficients, cubic-solver residuals and the high-temperature limit.

use std::fmt;

use otto_core::cubic::{discriminant, trig_root, MonicCubic, TrigBranch};
use otto_core::cycle::{
    energy_ledger, feasible_interval, high_t_engine_quantities, high_t_fridge_quantities,
    CycleConfig, ReducedParams,
};
use otto_core::engine::{
    eta_at_max_omega, eta_max, eta_max_work, stationarity_cubic, taylor_coeffs, z_star_max_eta,
    z_star_max_eta_generic,
};
use otto_core::fridge::{cop_at_max_omega, cop_max, z_star_max_cop};
use otto_core::oracle::{central_derivative, central_second_derivative, reference};
use otto_core::{Device, Regime, SuddenStroke};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::figure::{figure_table, row_checks, FigureId, DEFAULT_STEPS};
use crate::sweep::grid;

/// Seed for the random cubic suite and the figure-row spot checks.
pub const SEED: u64 = 0x07_70_1a_b5;
pub const CUBIC_SUITE_SIZE: usize = 10_000;
pub const FIGURE_SPOT_ROWS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Omega-optimum agreement with the oracle.
    pub omega: f64,
    /// Max-work agreement with the oracle.
    pub mw: f64,
    /// Max-efficiency and max-COP agreement with the oracle.
    pub max: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { omega: 1e-6, mw: 1e-8, max: 1e-8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Largest absolute deviation; passes when at most the tolerance.
    MaxDeviation,
    /// Smallest `lhs − rhs` over an ordering; passes when positive.
    MinMargin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub metric: Metric,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn deviation(name: impl Into<String>, value: f64, tolerance: f64) -> Check {
        Check { name: name.into(), metric: Metric::MaxDeviation, value, tolerance, passed: value <= tolerance }
    }

    fn margin(name: impl Into<String>, value: f64) -> Check {
        Check { name: name.into(), metric: Metric::MinMargin, value, tolerance: 0.0, passed: value > 0.0 }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.metric {
            Metric::MaxDeviation => write!(
                f,
                "{status}  {:<52} max_dev={:.3e} tol={:.1e}",
                self.name, self.value, self.tolerance
            ),
            Metric::MinMargin => {
                write!(f, "{status}  {:<52} min_margin={:.3e}", self.name, self.value)
            }
        }
    }
}

/// Largest `|a − b|`; any error counts as an infinite deviation.
fn worst<I>(pairs: I) -> f64
where
    I: IntoIterator<Item = otto_core::Result<(f64, f64)>>,
{
    pairs.into_iter().fold(0.0, |acc, p| match p {
        Ok((a, b)) if (a - b).is_finite() => acc.max((a - b).abs()),
        _ => f64::INFINITY,
    })
}

pub fn engine_grid() -> Vec<f64> {
    (1..=19).map(|i| i as f64 / 20.0).collect()
}

pub const FRIDGE_GRID: [f64; 7] = [0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 9.0];

/// The fridge grid restricted to the regime's domain (`ζ_c > 1` for the
/// cycles with a sudden expansion).
pub fn fridge_grid(regime: Regime) -> Vec<f64> {
    let needs_warm = matches!(regime, Regime::SuddenExpansion | Regime::SuddenSwitch);
    FRIDGE_GRID.into_iter().filter(|&z| !needs_warm || z > 1.0).collect()
}

pub fn engine_omega_deviation(regime: Regime) -> f64 {
    worst(engine_grid().into_iter().map(|x| {
        Ok((eta_at_max_omega(regime, x)?.value, reference::engine_eta_at_max_omega(regime, x)?.value))
    }))
}

pub fn engine_mw_deviation(stroke: SuddenStroke) -> f64 {
    worst(engine_grid().into_iter().map(|x| {
        Ok((eta_max_work(stroke, x)?, reference::engine_eta_at_max_work(stroke.regime(), x)?.value))
    }))
}

pub fn engine_max_deviation(stroke: SuddenStroke) -> f64 {
    worst(engine_grid().into_iter().map(|x| {
        Ok((eta_max(stroke, 1.0 - x)?.value, reference::engine_eta_max(stroke.regime(), x)?.value))
    }))
}

pub fn fridge_omega_deviation(regime: Regime) -> f64 {
    worst(fridge_grid(regime).into_iter().map(|x| {
        Ok((cop_at_max_omega(regime, x)?.value, reference::fridge_cop_at_max_omega(regime, x)?.value))
    }))
}

pub fn fridge_max_deviation(stroke: SuddenStroke) -> f64 {
    worst(fridge_grid(stroke.regime()).into_iter().map(|x| {
        Ok((cop_max(stroke, x)?.value, reference::fridge_cop_max(stroke.regime(), x)?.value))
    }))
}

fn omega_sc(x: f64) -> f64 {
    eta_at_max_omega(Regime::SuddenCompression, x).map_or(f64::NAN, |t| t.value)
}

fn omega_se(x: f64) -> f64 {
    eta_at_max_omega(Regime::SuddenExpansion, x).map_or(f64::NAN, |t| t.value)
}

/// First coefficient of `η^Ω(η_c)` from slopes at `10⁻³` and `10⁻⁴`,
/// extrapolated in `η_c` to remove the `2·c2·η_c` term.
pub fn taylor_c1_estimate(stroke: SuddenStroke) -> otto_core::Result<f64> {
    let f = match stroke {
        SuddenStroke::Compression => omega_sc,
        SuddenStroke::Expansion => omega_se,
    };
    let coarse = central_derivative(f, 1e-3, 5e-4)?;
    let fine = central_derivative(f, 1e-4, 5e-5)?;
    Ok((10.0 * fine - coarse) / 9.0)
}

/// Second coefficient from curvatures at `0.02` and `0.01`, extrapolated to
/// remove the `3·c3·η_c` term of `f''/2`.
pub fn taylor_c2_estimate(stroke: SuddenStroke) -> otto_core::Result<f64> {
    let f = match stroke {
        SuddenStroke::Compression => omega_sc,
        SuddenStroke::Expansion => omega_se,
    };
    let coarse = central_second_derivative(f, 0.02, 0.01)? / 2.0;
    let fine = central_second_derivative(f, 0.01, 0.005)? / 2.0;
    Ok(2.0 * fine - coarse)
}

/// Worst `residual / (1 + |C|)` over random cubics with three distinct real
/// roots in `[−10, 20]`, on every branch.
pub fn cubic_suite(seed: u64, n: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let r1: f64 = rng.gen_range(-10.0..10.0);
        let r2 = r1 + rng.gen_range(1e-3..5.0);
        let r3 = r2 + rng.gen_range(1e-3..5.0);
        let m = MonicCubic::new(-(r1 + r2 + r3), r1 * r2 + r2 * r3 + r1 * r3, -r1 * r2 * r3);
        for branch in TrigBranch::ALL {
            let ratio = match trig_root(&m, branch) {
                Ok(y) => m.residual(y) / (1.0 + m.constant.abs()),
                Err(_) => f64::INFINITY,
            };
            worst = worst.max(ratio);
        }
    }
    worst
}

/// Worst relative gap between the `coth` ledger (scaled by `β_h`) and the
/// high-temperature heats and works at `β_h·ω_h = scale`.
pub fn high_t_deviation(scale: f64) -> f64 {
    let mut worst = 0.0f64;
    for i in 1..=9 {
        let tau = i as f64 / 10.0;
        for stroke in SuddenStroke::ALL {
            for device in [Device::Engine, Device::Fridge] {
                let Ok(interval) = feasible_interval(device, stroke.regime(), tau) else {
                    return f64::INFINITY;
                };
                if interval.is_empty() {
                    continue;
                }
                for frac in [0.2, 0.4, 0.6, 0.8] {
                    let z = interval.lo + frac * interval.width();
                    let Ok(cfg) = CycleConfig::with_regime(scale / tau, scale, z, 1.0, stroke.regime())
                    else {
                        return f64::INFINITY;
                    };
                    let l = energy_ledger(&cfg);
                    let p = ReducedParams::new(z, tau).expect("interior point");
                    let pairs = match device {
                        Device::Engine => {
                            let h = high_t_engine_quantities(stroke, &p);
                            [(l.q_h * scale, h.q_h), (l.w_net * scale, h.w)]
                        }
                        Device::Fridge => {
                            let h = high_t_fridge_quantities(stroke, &p);
                            [(l.q_c * scale, h.q_c), (-l.w_net * scale, h.w_in)]
                        }
                    };
                    for (exact, approx) in pairs {
                        worst = worst.max(((exact - approx) / approx).abs());
                    }
                }
            }
        }
    }
    worst
}

fn ordering_margin<I: IntoIterator<Item = otto_core::Result<Vec<f64>>>>(chains: I) -> f64 {
    chains.into_iter().fold(f64::INFINITY, |acc, c| match c {
        Ok(values) => values.windows(2).map(|w| w[0] - w[1]).fold(acc, f64::min),
        Err(_) => f64::NEG_INFINITY,
    })
}

fn figure_margin(id: FigureId, rows: Option<&[usize]>) -> f64 {
    let Ok(table) = figure_table(id, DEFAULT_STEPS) else {
        return f64::NEG_INFINITY;
    };
    let all: Vec<usize> = (0..table.rows.len()).collect();
    let rows = rows.unwrap_or(&all);
    rows.iter()
        .flat_map(|&r| row_checks(id, &table, r))
        .map(|c| c.margin)
        .fold(f64::INFINITY, f64::min)
}

/// Runs every check in a fixed order.
pub fn run(tol: &Tolerances) -> Vec<Check> {
    use SuddenStroke::{Compression as Sc, Expansion as Se};
    let mut checks = Vec::new();

    for regime in Regime::ALL {
        checks.push(Check::deviation(
            format!("engine eta_omega_{} vs oracle", regime.tag()),
            engine_omega_deviation(regime),
            tol.omega,
        ));
    }
    for stroke in SuddenStroke::ALL {
        let tag = stroke.regime().tag();
        checks.push(Check::deviation(format!("engine eta_mw_{tag} vs oracle"), engine_mw_deviation(stroke), tol.mw));
        checks.push(Check::deviation(format!("engine eta_max_{tag} vs oracle"), engine_max_deviation(stroke), tol.max));
    }
    for regime in Regime::ALL {
        checks.push(Check::deviation(
            format!("fridge cop_omega_{} vs oracle", regime.tag()),
            fridge_omega_deviation(regime),
            tol.omega,
        ));
    }
    for stroke in SuddenStroke::ALL {
        let tag = stroke.regime().tag();
        checks.push(Check::deviation(format!("fridge cop_max_{tag} vs oracle"), fridge_max_deviation(stroke), tol.max));
    }

    let taus = grid(0.01, 0.99, 99);
    checks.push(Check::deviation(
        "engine z_star_max_eta_sc vs generic k=0 root",
        worst(taus.iter().map(|&t| Ok((z_star_max_eta(Sc, t)?.value, z_star_max_eta_generic(Sc, t)?)))),
        1e-10,
    ));
    checks.push(Check::deviation(
        "engine z_star_max_eta_se vs generic k=0 root",
        worst(taus.iter().filter(|&&t| t >= 0.5).map(|&t| {
            Ok((z_star_max_eta(Se, t)?.value, z_star_max_eta_generic(Se, t)?))
        })),
        1e-10,
    ));
    checks.push(Check::deviation(
        "fridge z_star_max_cop vs generic k=2 root",
        worst(taus.iter().flat_map(|&t| {
            let zeta_c = t / (1.0 - t);
            SuddenStroke::ALL.into_iter().filter(move |&s| s == Sc || t > 0.5).map(move |s| {
                let generic = trig_root(&stationarity_cubic(s, t)?, TrigBranch::K2)?;
                Ok((z_star_max_cop(s, zeta_c)?.value, generic))
            })
        })),
        1e-10,
    ));

    let eta_grid = grid(0.01, 0.99, DEFAULT_STEPS);
    checks.push(Check::margin(
        "eta_c > eta_max > eta_omega > eta_mw (sc, se)",
        ordering_margin(eta_grid.iter().flat_map(|&x| {
            SuddenStroke::ALL.into_iter().map(move |s| {
                Ok(vec![
                    x,
                    eta_max(s, 1.0 - x)?.value,
                    eta_at_max_omega(s.regime(), x)?.value,
                    eta_max_work(s, x)?,
                ])
            })
        })),
    ));
    let zeta_grid = grid(0.05, 9.05, DEFAULT_STEPS);
    checks.push(Check::margin(
        "zeta_c > cop_max > cop_omega (sc, se)",
        ordering_margin(zeta_grid.iter().flat_map(|&x| {
            SuddenStroke::ALL.into_iter().filter(move |&s| s == Sc || x > 1.0).map(move |s| {
                Ok(vec![x, cop_max(s, x)?.value, cop_at_max_omega(s.regime(), x)?.value])
            })
        })),
    ));
    checks.push(Check::margin("fig2 orderings, all rows", figure_margin(FigureId::Fig2, None)));
    checks.push(Check::margin("fig4 orderings, all rows", figure_margin(FigureId::Fig4, None)));
    checks.push(Check::margin("fig6 orderings, all rows", figure_margin(FigureId::Fig6, None)));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let spot = FigureId::ALL.into_iter().fold(f64::INFINITY, |acc, id| {
        let rows: Vec<usize> = (0..FIGURE_SPOT_ROWS).map(|_| rng.gen_range(0..DEFAULT_STEPS)).collect();
        acc.min(figure_margin(id, Some(&rows)))
    });
    checks.push(Check::margin(format!("figure orderings, {FIGURE_SPOT_ROWS} random rows each"), spot));

    for stroke in SuddenStroke::ALL {
        let tag = stroke.regime().tag();
        let exact = taylor_coeffs(stroke);
        checks.push(Check::deviation(
            format!("taylor c1 ({tag}) by finite differences"),
            worst([taylor_c1_estimate(stroke).map(|c| (c, exact.c1))]),
            1e-4,
        ));
        checks.push(Check::deviation(
            format!("taylor c2 ({tag}) by second differences"),
            worst([taylor_c2_estimate(stroke).map(|c| (c, exact.c2))]),
            1e-2,
        ));
    }

    checks.push(Check::deviation(
        format!("cubic residual / (1 + |C|), {CUBIC_SUITE_SIZE} random cubics"),
        cubic_suite(SEED, CUBIC_SUITE_SIZE),
        1e-10,
    ));
    checks.push(Check::deviation(
        "sc efficiency cubic at tau = 1 has root 1",
        worst([stationarity_cubic(Sc, 1.0).and_then(|m| trig_root(&m, TrigBranch::K0)).map(|y| (y, 1.0))]),
        1e-12,
    ));
    checks.push(Check::deviation(
        "cubic discriminants vs closed forms (relative)",
        worst(grid(0.51, 0.99, 49).into_iter().flat_map(|t| {
            let sc = 108.0 * t * t * t * (2.0 - t) * (1.0 - t) * (1.0 - t);
            let se = 108.0 * t * t * (2.0 * t - 1.0) * (1.0 - t) * (1.0 - t);
            [
                discriminant(2.0 - t, 0.0, -3.0 * t, 2.0 * t * t).map(|d| (d / sc, 1.0)),
                discriminant(2.0, -3.0 * t, 0.0, t * (2.0 * t - 1.0)).map(|d| (d / se, 1.0)),
            ]
        })),
        1e-9,
    ));
    checks.push(Check::deviation("coth ledger vs high-T at beta_h*omega_h = 0.01 (relative)", high_t_deviation(0.01), 1e-2));
    checks.push(Check::deviation("coth ledger vs high-T at beta_h*omega_h = 0.001 (relative)", high_t_deviation(0.001), 1e-4));
    checks
}
