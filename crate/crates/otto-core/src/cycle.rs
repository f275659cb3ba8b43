//! The four-stroke cycle: vertex energies, heats and work, both with the exact
//! `coth` occupation and in the high-temperature limit.
//!
//! Sign convention: heat and work flowing into the working medium are
//! positive. The engine's extracted work is `w_net = q_h + q_c`.

use crate::{Error, Result};

/// How a work stroke changes the oscillator frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrokeProtocol {
    /// Quasistatic frequency change, no level transitions.
    Adiabatic,
    /// Instantaneous frequency quench.
    SuddenSwitch,
}

/// Which of the two work strokes is sudden in an asymmetric cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuddenStroke {
    /// A → B sudden, C → D adiabatic.
    Compression,
    /// A → B adiabatic, C → D sudden.
    Expansion,
}

impl SuddenStroke {
    pub const ALL: [SuddenStroke; 2] = [SuddenStroke::Compression, SuddenStroke::Expansion];

    pub fn regime(self) -> Regime {
        match self {
            SuddenStroke::Compression => Regime::SuddenCompression,
            SuddenStroke::Expansion => Regime::SuddenExpansion,
        }
    }
}

/// Protocol pair of a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    SuddenCompression,
    SuddenExpansion,
    Adiabatic,
    SuddenSwitch,
}

impl Regime {
    pub const ALL: [Regime; 4] = [
        Regime::Adiabatic,
        Regime::SuddenCompression,
        Regime::SuddenExpansion,
        Regime::SuddenSwitch,
    ];

    /// `(compression, expansion)` protocols.
    pub fn protocols(self) -> (StrokeProtocol, StrokeProtocol) {
        use StrokeProtocol::*;
        match self {
            Regime::SuddenCompression => (SuddenSwitch, Adiabatic),
            Regime::SuddenExpansion => (Adiabatic, SuddenSwitch),
            Regime::Adiabatic => (Adiabatic, Adiabatic),
            Regime::SuddenSwitch => (SuddenSwitch, SuddenSwitch),
        }
    }

    pub fn sudden_stroke(self) -> Option<SuddenStroke> {
        match self {
            Regime::SuddenCompression => Some(SuddenStroke::Compression),
            Regime::SuddenExpansion => Some(SuddenStroke::Expansion),
            _ => None,
        }
    }

    /// Short lowercase tag: `sc`, `se`, `adi`, `ss`.
    pub fn tag(self) -> &'static str {
        match self {
            Regime::SuddenCompression => "sc",
            Regime::SuddenExpansion => "se",
            Regime::Adiabatic => "adi",
            Regime::SuddenSwitch => "ss",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Regime> {
        Regime::ALL.into_iter().find(|r| r.tag() == tag)
    }
}

impl From<SuddenStroke> for Regime {
    fn from(s: SuddenStroke) -> Self {
        s.regime()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Device {
    Engine,
    Fridge,
}

/// Adiabaticity parameter λ of a work stroke between `omega_c` and `omega_h`.
pub fn adiabaticity(protocol: StrokeProtocol, omega_c: f64, omega_h: f64) -> Result<f64> {
    if !(omega_c > 0.0 && omega_c.is_finite()) {
        return Err(Error::Domain { what: "omega_c", value: omega_c });
    }
    if !(omega_h >= omega_c && omega_h.is_finite()) {
        return Err(Error::Domain { what: "omega_h", value: omega_h });
    }
    Ok(match protocol {
        StrokeProtocol::Adiabatic => 1.0,
        StrokeProtocol::SuddenSwitch => {
            (omega_c * omega_c + omega_h * omega_h) / (2.0 * omega_c * omega_h)
        }
    })
}

/// Sudden-switch λ written in the compression ratio `z = ω_c/ω_h`.
fn sudden_lambda(z: f64) -> f64 {
    (1.0 + z * z) / (2.0 * z)
}

fn protocol_lambda(protocol: StrokeProtocol, z: f64) -> f64 {
    match protocol {
        StrokeProtocol::Adiabatic => 1.0,
        StrokeProtocol::SuddenSwitch => sudden_lambda(z),
    }
}

/// Physical specification of one cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleConfig {
    pub beta_c: f64,
    pub beta_h: f64,
    pub omega_c: f64,
    pub omega_h: f64,
    pub protocol_compression: StrokeProtocol,
    pub protocol_expansion: StrokeProtocol,
}

impl CycleConfig {
    /// Validates `beta_c ≥ beta_h > 0` and `0 < omega_c ≤ omega_h`. The
    /// degenerate equalities are accepted; they describe a cycle that does no
    /// work.
    pub fn new(
        beta_c: f64,
        beta_h: f64,
        omega_c: f64,
        omega_h: f64,
        protocol_compression: StrokeProtocol,
        protocol_expansion: StrokeProtocol,
    ) -> Result<Self> {
        if !(beta_h > 0.0 && beta_h.is_finite()) {
            return Err(Error::Domain { what: "beta_h", value: beta_h });
        }
        if !(beta_c >= beta_h && beta_c.is_finite()) {
            return Err(Error::Domain { what: "beta_c", value: beta_c });
        }
        if !(omega_c > 0.0 && omega_c.is_finite()) {
            return Err(Error::Domain { what: "omega_c", value: omega_c });
        }
        if !(omega_h >= omega_c && omega_h.is_finite()) {
            return Err(Error::Domain { what: "omega_h", value: omega_h });
        }
        Ok(Self {
            beta_c,
            beta_h,
            omega_c,
            omega_h,
            protocol_compression,
            protocol_expansion,
        })
    }

    pub fn with_regime(
        beta_c: f64,
        beta_h: f64,
        omega_c: f64,
        omega_h: f64,
        regime: Regime,
    ) -> Result<Self> {
        let (c, e) = regime.protocols();
        Self::new(beta_c, beta_h, omega_c, omega_h, c, e)
    }

    pub fn reduced(&self) -> Result<ReducedParams> {
        ReducedParams::new(self.omega_c / self.omega_h, self.beta_h / self.beta_c)
    }
}

/// `coth(x)` for `x > 0`, stable for small arguments.
pub fn coth(x: f64) -> f64 {
    1.0 + 2.0 / libm::expm1(2.0 * x)
}

/// Mean energies at the cycle vertices and the resulting heats and work.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLedger {
    pub h_a: f64,
    pub h_b: f64,
    pub h_c: f64,
    pub h_d: f64,
    pub q_h: f64,
    pub q_c: f64,
    pub w_net: f64,
}

pub fn energy_ledger(config: &CycleConfig) -> EnergyLedger {
    let CycleConfig { beta_c, beta_h, omega_c, omega_h, .. } = *config;
    // Both protocols are valid for any ω_c ≤ ω_h, which `CycleConfig::new` enforces.
    let lambda_ab = adiabaticity(config.protocol_compression, omega_c, omega_h).unwrap_or(1.0);
    let lambda_cd = adiabaticity(config.protocol_expansion, omega_c, omega_h).unwrap_or(1.0);
    let coth_c = coth(beta_c * omega_c / 2.0);
    let coth_h = coth(beta_h * omega_h / 2.0);

    let h_a = omega_c / 2.0 * coth_c;
    let h_b = omega_h / 2.0 * lambda_ab * coth_c;
    let h_c = omega_h / 2.0 * coth_h;
    let h_d = omega_c / 2.0 * lambda_cd * coth_h;
    let q_h = h_c - h_b;
    let q_c = h_a - h_d;
    EnergyLedger { h_a, h_b, h_c, h_d, q_h, q_c, w_net: q_h + q_c }
}

/// Dimensionless coordinates of the high-temperature analytics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedParams {
    /// Compression ratio `ω_c/ω_h`.
    pub z: f64,
    /// Temperature ratio `β_h/β_c`.
    pub tau: f64,
    /// Carnot efficiency `1 − τ`.
    pub eta_c: f64,
    /// Carnot COP `τ/(1 − τ)`.
    pub zeta_c: f64,
}

impl ReducedParams {
    /// Accepts `0 < z ≤ 1` and `0 < τ < 1`.
    pub fn new(z: f64, tau: f64) -> Result<Self> {
        if !(z > 0.0 && z <= 1.0) {
            return Err(Error::Domain { what: "z (singular at 0, at most 1)", value: z });
        }
        if !(tau > 0.0 && tau < 1.0) {
            return Err(Error::Domain { what: "tau", value: tau });
        }
        Ok(Self { z, tau, eta_c: 1.0 - tau, zeta_c: tau / (1.0 - tau) })
    }
}

/// Engine heat input and extracted work, in units of `1/β_h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighTEngine {
    pub q_h: f64,
    pub w: f64,
}

/// Refrigerator cooling load and (positive) input work, in units of `1/β_h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighTFridge {
    pub q_c: f64,
    pub w_in: f64,
}

pub fn high_t_engine_quantities(stroke: SuddenStroke, p: &ReducedParams) -> HighTEngine {
    let ReducedParams { z, tau, .. } = *p;
    match stroke {
        SuddenStroke::Compression => HighTEngine {
            q_h: 1.0 - tau / 2.0 * (1.0 + 1.0 / (z * z)),
            w: (1.0 - z) * (1.0 - (1.0 + z) * tau / (2.0 * z * z)),
        },
        SuddenStroke::Expansion => HighTEngine {
            q_h: 1.0 - tau / z,
            w: (z - 1.0) * (tau / z - (1.0 + z) / 2.0),
        },
    }
}

pub fn high_t_fridge_quantities(stroke: SuddenStroke, p: &ReducedParams) -> HighTFridge {
    let ReducedParams { z, tau, .. } = *p;
    match stroke {
        SuddenStroke::Compression => HighTFridge {
            q_c: tau - z,
            w_in: (1.0 - z) * (tau * (1.0 + z) / (2.0 * z * z) - 1.0),
        },
        SuddenStroke::Expansion => HighTFridge {
            q_c: tau - (1.0 + z * z) / 2.0,
            w_in: (1.0 - z) * (tau / z - (z + 1.0) / 2.0),
        },
    }
}

/// High-temperature vertex energies for an arbitrary protocol pair, in units
/// of `1/β_h`. This is the `coth(x) ≈ 1/x` limit of [`energy_ledger`] and is
/// what the oracle builds its objectives from.
pub fn high_t_ledger(
    compression: StrokeProtocol,
    expansion: StrokeProtocol,
    p: &ReducedParams,
) -> EnergyLedger {
    let ReducedParams { z, tau, .. } = *p;
    let h_a = tau;
    let h_b = protocol_lambda(compression, z) * tau / z;
    let h_c = 1.0;
    let h_d = protocol_lambda(expansion, z) * z;
    let q_h = h_c - h_b;
    let q_c = h_a - h_d;
    EnergyLedger { h_a, h_b, h_c, h_d, q_h, q_c, w_net: q_h + q_c }
}

/// Open interval of compression ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const EMPTY: Interval = Interval { lo: 0.0, hi: 0.0 };

    pub fn is_empty(&self) -> bool {
        !(self.lo < self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn width(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            self.hi - self.lo
        }
    }

    /// Pulls both ends inward by `rel · width`.
    pub fn shrink(&self, rel: f64) -> Interval {
        let m = rel * self.width();
        Interval { lo: self.lo + m, hi: self.hi - m }
    }
}

/// Range of `z` in which the device runs: positive work and heat input for an
/// engine, positive cooling load and work input for a refrigerator.
pub fn feasible_interval(device: Device, regime: Regime, tau: f64) -> Result<Interval> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::Domain { what: "tau", value: tau });
    }
    let sqrt = libm::sqrt;
    Ok(match (device, regime) {
        // 2z² − τ(1+z) > 0; the heat condition z²(2−τ) > τ is weaker for z < 1.
        (Device::Engine, Regime::SuddenCompression) => Interval {
            lo: (tau + sqrt(tau * tau + 8.0 * tau)) / 4.0,
            hi: 1.0,
        },
        // z² + z − 2τ > 0 and z > τ.
        (Device::Engine, Regime::SuddenExpansion) => Interval {
            lo: f64::max(tau, 4.0 * tau / (1.0 + sqrt(1.0 + 8.0 * tau))),
            hi: 1.0,
        },
        (Device::Engine, Regime::Adiabatic) => Interval { lo: tau, hi: 1.0 },
        // z² ∈ (τ, 1) for positive work.
        (Device::Engine, Regime::SuddenSwitch) => Interval { lo: sqrt(tau), hi: 1.0 },
        (Device::Fridge, Regime::SuddenCompression) | (Device::Fridge, Regime::Adiabatic) => {
            Interval { lo: 0.0, hi: tau }
        }
        (Device::Fridge, Regime::SuddenExpansion) | (Device::Fridge, Regime::SuddenSwitch) => {
            if 2.0 * tau - 1.0 > 0.0 {
                Interval { lo: 0.0, hi: sqrt(2.0 * tau - 1.0) }
            } else {
                Interval::EMPTY
            }
        }
    })
}
