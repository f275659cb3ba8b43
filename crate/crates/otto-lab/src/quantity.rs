//! The tabulated quantities and which (device, regime) pairs define them.

use otto_core::engine::{eta_at_max_omega, eta_max, eta_max_work, fractional_loss, fractional_loss_max_work};
use otto_core::fridge::{cop_at_max_omega, cop_max};
use otto_core::{Device, Error, Regime, ETA_C_MAX, ETA_C_MIN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    EtaOmega,
    EtaMw,
    EtaMax,
    CopOmega,
    CopMax,
    ROmega,
    RMw,
    Delta,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::EtaOmega,
        Quantity::EtaMw,
        Quantity::EtaMax,
        Quantity::CopOmega,
        Quantity::CopMax,
        Quantity::ROmega,
        Quantity::RMw,
        Quantity::Delta,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Quantity::EtaOmega => "eta_omega",
            Quantity::EtaMw => "eta_mw",
            Quantity::EtaMax => "eta_max",
            Quantity::CopOmega => "cop_omega",
            Quantity::CopMax => "cop_max",
            Quantity::ROmega => "r_omega",
            Quantity::RMw => "r_mw",
            Quantity::Delta => "delta",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Quantity> {
        Quantity::ALL.into_iter().find(|q| q.tag() == tag)
    }

    pub fn device(self) -> Device {
        match self {
            Quantity::CopOmega | Quantity::CopMax => Device::Fridge,
            _ => Device::Engine,
        }
    }

    /// Omega optima exist for all four regimes; everything else only for
    /// the asymmetric ones.
    pub fn supports(self, regime: Regime) -> bool {
        match self {
            Quantity::EtaOmega | Quantity::CopOmega | Quantity::ROmega => true,
            _ => regime.sudden_stroke().is_some(),
        }
    }

    /// Value at Carnot efficiency (engine) or Carnot COP (fridge) `x`.
    pub fn evaluate(self, regime: Regime, x: f64) -> otto_core::Result<f64> {
        let stroke = || regime.sudden_stroke().ok_or(Error::InfeasibleDevice {
            reason: "quantity only defined for the asymmetric cycles",
        });
        Ok(match self {
            Quantity::EtaOmega => eta_at_max_omega(regime, x)?.value,
            Quantity::EtaMw => eta_max_work(stroke()?, x)?,
            Quantity::EtaMax => {
                if !(ETA_C_MIN..=ETA_C_MAX).contains(&x) {
                    return Err(Error::Domain { what: "eta_c", value: x });
                }
                eta_max(stroke()?, 1.0 - x)?.value
            }
            Quantity::CopOmega => cop_at_max_omega(regime, x)?.value,
            Quantity::CopMax => cop_max(stroke()?, x)?.value,
            Quantity::ROmega => fractional_loss(eta_at_max_omega(regime, x)?.value, x)?,
            Quantity::RMw => fractional_loss_max_work(stroke()?, x)?,
            Quantity::Delta => {
                eta_at_max_omega(regime, x)?.value - eta_max_work(stroke()?, x)?
            }
        })
    }
}

/// One CSV column: a quantity for a regime, named `<quantity>_<regime>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Column {
    pub quantity: Quantity,
    pub regime: Regime,
}

impl Column {
    pub fn new(quantity: Quantity, regime: Regime) -> Self {
        Column { quantity, regime }
    }

    pub fn name(&self) -> String {
        format!("{}_{}", self.quantity.tag(), self.regime.tag())
    }

    /// `None` where the point is outside the regime's domain.
    pub fn cell(&self, x: f64) -> Option<f64> {
        self.quantity.evaluate(self.regime, x).ok().filter(|v| v.is_finite())
    }
}
