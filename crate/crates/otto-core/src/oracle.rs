//! Derivative-free scalar maximization and finite differences.
//!
//! Nothing here calls into the closed forms of [`crate::engine`] or
//! [`crate::fridge`]; the [`reference`] objectives are assembled from the raw
//! cycle ledger so the two routes can be compared.

use crate::{Error, Result};

/// Golden ratio conjugate, `(√5 − 1)/2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;
const MAX_GOLDEN_ITERATIONS: usize = 200;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_GRID: usize = 512;
/// Relative margin by which the open domain is shrunk before sampling.
pub const DOMAIN_MARGIN: f64 = 1e-9;

/// A one-dimensional maximization problem on the open interval `(lo, hi)`.
#[derive(Debug, Clone, Copy)]
pub struct ScalarProblem<F> {
    pub objective: F,
    pub lo: f64,
    pub hi: f64,
    pub tolerance: f64,
    pub grid: usize,
}

impl<F: Fn(f64) -> f64> ScalarProblem<F> {
    pub fn new(objective: F, lo: f64, hi: f64) -> Self {
        ScalarProblem { objective, lo, hi, tolerance: DEFAULT_TOLERANCE, grid: DEFAULT_GRID }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_grid(mut self, grid: usize) -> Self {
        self.grid = grid;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimumReport {
    pub x_star: f64,
    pub f_star: f64,
    pub evaluations: usize,
    pub bracket: (f64, f64),
}

struct Counted<'a, F> {
    f: &'a F,
    count: usize,
}

impl<F: Fn(f64) -> f64> Counted<'_, F> {
    /// Non-finite values rank below everything.
    fn eval(&mut self, x: f64) -> f64 {
        self.count += 1;
        let y = (self.f)(x);
        if y.is_finite() {
            y
        } else {
            f64::NEG_INFINITY
        }
    }
}

/// Grid scan to bracket the global maximum, golden-section refinement inside
/// the bracket, then one parabolic step through symmetric samples to remove
/// the `√ε` flatness error of the golden search.
pub fn maximize<F: Fn(f64) -> f64>(problem: &ScalarProblem<F>) -> Result<OptimumReport> {
    let ScalarProblem { lo, hi, tolerance, grid, .. } = *problem;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain { what: "interval", value: hi - lo });
    }
    if !(tolerance > 0.0) {
        return Err(Error::Domain { what: "tolerance", value: tolerance });
    }
    if grid < 3 {
        return Err(Error::Domain { what: "grid", value: grid as f64 });
    }
    let margin = DOMAIN_MARGIN * (hi - lo);
    let (a, b) = (lo + margin, hi - margin);
    let mut f = Counted { f: &problem.objective, count: 0 };

    let step = (b - a) / (grid - 1) as f64;
    let node = |i: usize| if i == grid - 1 { b } else { a + step * i as f64 };
    let mut best = (0, f64::NEG_INFINITY);
    for i in 0..grid {
        let y = f.eval(node(i));
        if y > best.1 {
            best = (i, y);
        }
    }
    if best.1 == f64::NEG_INFINITY {
        return Err(Error::NoFeasiblePoint);
    }
    let (i_best, f_grid) = best;
    let x_grid = node(i_best);

    let mut left = node(i_best.saturating_sub(1));
    let mut right = node((i_best + 1).min(grid - 1));
    let mut x1 = right - INV_PHI * (right - left);
    let mut x2 = left + INV_PHI * (right - left);
    let mut f1 = f.eval(x1);
    let mut f2 = f.eval(x2);
    let mut iterations = 0;
    while right - left > tolerance && iterations < MAX_GOLDEN_ITERATIONS {
        if f1 >= f2 {
            right = x2;
            x2 = x1;
            f2 = f1;
            x1 = right - INV_PHI * (right - left);
            f1 = f.eval(x1);
        } else {
            left = x1;
            x1 = x2;
            f1 = f2;
            x2 = left + INV_PHI * (right - left);
            f2 = f.eval(x2);
        }
        iterations += 1;
    }
    let (mut x_star, mut f_star) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };

    // Parabola through x₀ − h, x₀, x₀ + h; h is wide enough that rounding in
    // f does not swamp the curvature, narrow enough for an O(h²) vertex.
    let h = 1e-5 * (b - a);
    for _ in 0..2 {
        if x_star - h < a || x_star + h > b {
            break;
        }
        let (fm, f0, fp) = (f.eval(x_star - h), f_star, f.eval(x_star + h));
        let curvature = fp - 2.0 * f0 + fm;
        if !(curvature < 0.0) {
            break;
        }
        let shift = -0.5 * h * (fp - fm) / curvature;
        if shift.abs() > h {
            break;
        }
        let x_new = x_star + shift;
        let f_new = f.eval(x_new);
        if f_new < f_star - 64.0 * f64::EPSILON * f_star.abs().max(1.0) {
            break;
        }
        x_star = x_new;
        f_star = f_new;
    }

    if f_star < f_grid {
        x_star = x_grid;
        f_star = f_grid;
    }
    Ok(OptimumReport { x_star, f_star, evaluations: f.count, bracket: (left, right) })
}

fn sample<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { x })
    }
}

/// One-sided limit of `f` at `edge` by cubic extrapolation from
/// `edge − step`, `edge − 2·step`, `edge − 3·step` (`step` carries the
/// direction). Used where `f` is a ratio that turns 0/0 at the edge.
pub fn one_sided_limit<F: Fn(f64) -> f64>(f: F, edge: f64, step: f64) -> Result<f64> {
    let at = |k: f64| sample(&f, edge - k * step);
    Ok(3.0 * at(1.0)? - 3.0 * at(2.0)? + at(3.0)?)
}

/// Richardson-extrapolated central difference, `(4·D(h/2) − D(h))/3`.
pub fn central_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64> {
    let d = |h: f64| -> Result<f64> { Ok((sample(&f, x + h)? - sample(&f, x - h)?) / (2.0 * h)) };
    Ok((4.0 * d(h / 2.0)? - d(h)?) / 3.0)
}

/// Richardson-extrapolated second central difference.
pub fn central_second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64> {
    let f0 = sample(&f, x)?;
    let d2 =
        |h: f64| -> Result<f64> { Ok((sample(&f, x + h)? - 2.0 * f0 + sample(&f, x - h)?) / (h * h)) };
    Ok((4.0 * d2(h / 2.0)? - d2(h)?) / 3.0)
}

/// Numerical optima of the cycle built directly from the vertex energies.
///
/// The maximum efficiency or COP that enters the Omega objective is itself
/// found numerically here, for every regime.
pub mod reference {
    use super::{maximize, one_sided_limit, ScalarProblem};
    use crate::cycle::{feasible_interval, high_t_ledger, Device, EnergyLedger, Regime};
    use crate::{Error, Result};

    const EDGE_FRACTION: f64 = 1e-6;
    const LIMIT_STEP: f64 = 3e-5;

    #[derive(Debug, Clone, Copy, PartialEq)]
    pub struct ReferenceOptimum {
        /// Optimal compression ratio; the interval edge for a supremum.
        pub z_star: f64,
        /// Efficiency or COP at `z_star`.
        pub value: f64,
        pub evaluations: usize,
    }

    fn ledger(regime: Regime, z: f64, tau: f64) -> EnergyLedger {
        let (compression, expansion) = regime.protocols();
        let p = crate::cycle::ReducedParams { z, tau, eta_c: 1.0 - tau, zeta_c: tau / (1.0 - tau) };
        high_t_ledger(compression, expansion, &p)
    }

    fn engine_eta(regime: Regime, z: f64, tau: f64) -> f64 {
        let l = ledger(regime, z, tau);
        l.w_net / l.q_h
    }

    fn fridge_cop(regime: Regime, z: f64, tau: f64) -> f64 {
        let l = ledger(regime, z, tau);
        l.q_c / -l.w_net
    }

    fn engine_tau(eta_c: f64) -> Result<f64> {
        if eta_c > 0.0 && eta_c < 1.0 {
            Ok(1.0 - eta_c)
        } else {
            Err(Error::Domain { what: "eta_c", value: eta_c })
        }
    }

    fn fridge_tau(zeta_c: f64) -> Result<f64> {
        if zeta_c > 0.0 && zeta_c.is_finite() {
            Ok(zeta_c / (1.0 + zeta_c))
        } else {
            Err(Error::Domain { what: "zeta_c", value: zeta_c })
        }
    }

    fn run<F: Fn(f64) -> f64>(
        device: Device,
        regime: Regime,
        tau: f64,
        objective: F,
        value: impl Fn(f64) -> f64,
    ) -> Result<ReferenceOptimum> {
        let interval = feasible_interval(device, regime, tau)?;
        if interval.is_empty() {
            return Err(Error::InfeasibleDevice { reason: "empty operating interval" });
        }
        let report = maximize(&ScalarProblem::new(objective, interval.lo, interval.hi))?;
        // A maximum pinned to an edge is a supremum; the ratios are 0/0 there
        // and lose digits to cancellation close to it.
        let near_edge = EDGE_FRACTION * interval.width();
        let step = LIMIT_STEP * interval.width();
        let (z_star, value) = if report.x_star > interval.hi - near_edge {
            (interval.hi, one_sided_limit(&value, interval.hi, step)?)
        } else if report.x_star < interval.lo + near_edge {
            (interval.lo, one_sided_limit(&value, interval.lo, -step)?)
        } else {
            (report.x_star, value(report.x_star))
        };
        Ok(ReferenceOptimum { z_star, value, evaluations: report.evaluations + 3 })
    }

    /// Largest efficiency reachable by the regime.
    pub fn engine_eta_max(regime: Regime, eta_c: f64) -> Result<ReferenceOptimum> {
        let tau = engine_tau(eta_c)?;
        let eta = |z| engine_eta(regime, z, tau);
        run(Device::Engine, regime, tau, eta, eta)
    }

    /// Efficiency at the maximum of the net work.
    pub fn engine_eta_at_max_work(regime: Regime, eta_c: f64) -> Result<ReferenceOptimum> {
        let tau = engine_tau(eta_c)?;
        let work = |z| ledger(regime, z, tau).w_net;
        run(Device::Engine, regime, tau, work, |z| engine_eta(regime, z, tau))
    }

    /// Efficiency at the maximum of `2W − η_max·Q_h`.
    pub fn engine_eta_at_max_omega(regime: Regime, eta_c: f64) -> Result<ReferenceOptimum> {
        let tau = engine_tau(eta_c)?;
        let eta_max = engine_eta_max(regime, eta_c)?.value;
        let omega = |z| {
            let l = ledger(regime, z, tau);
            2.0 * l.w_net - eta_max * l.q_h
        };
        run(Device::Engine, regime, tau, omega, |z| engine_eta(regime, z, tau))
    }

    /// Largest COP reachable by the regime.
    pub fn fridge_cop_max(regime: Regime, zeta_c: f64) -> Result<ReferenceOptimum> {
        let tau = fridge_tau(zeta_c)?;
        let cop = |z| fridge_cop(regime, z, tau);
        run(Device::Fridge, regime, tau, cop, cop)
    }

    /// COP at the maximum of `2Q_c − ζ_max·W_in`.
    pub fn fridge_cop_at_max_omega(regime: Regime, zeta_c: f64) -> Result<ReferenceOptimum> {
        let tau = fridge_tau(zeta_c)?;
        let zeta_max = fridge_cop_max(regime, zeta_c)?.value;
        let omega = |z| {
            let l = ledger(regime, z, tau);
            2.0 * l.q_c + zeta_max * l.w_net
        };
        run(Device::Fridge, regime, tau, omega, |z| fridge_cop(regime, z, tau))
    }
}
