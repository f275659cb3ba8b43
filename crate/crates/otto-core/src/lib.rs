//! Finite-time performance of a quantum harmonic Otto cycle with asymmetric
//! work strokes.
//!
//! The crate is `no_std` (it needs `alloc` only for [`Trace`]) and is split
//! along the lines of the model:
//!
//! - [`cycle`]: vertex energies, heats and work of the four-stroke cycle, the
//!   high-temperature reduced quantities and the operating (feasibility)
//!   intervals.
//! - [`cubic`]: trigonometric roots of cubics with three real roots.
//! - [`engine`] and [`fridge`]: closed forms for the optimal efficiency and
//!   coefficient of performance under the Omega criterion, at maximum work and
//!   at maximum efficiency.
//! - [`oracle`]: grid plus golden-section maximization and finite differences,
//!   used to check every closed form from the raw cycle quantities.
//!
//! Units are `ħ = k_B = 1`; reduced energies are in units of `1/β_h`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cubic;
pub mod cycle;
pub mod engine;
mod error;
pub mod fridge;
pub mod oracle;
mod trace;

pub use cycle::{Device, Interval, Regime, StrokeProtocol, SuddenStroke};
pub use error::{Error, Result};
pub use trace::{ClosedFormTrace, FridgeTrace, Trace, Traced};

/// Smallest accepted Carnot efficiency; the closed forms degenerate at 0.
pub const ETA_C_MIN: f64 = 1e-6;
/// Largest accepted Carnot efficiency.
pub const ETA_C_MAX: f64 = 1.0 - 1e-6;
/// Carnot COP bounds accepted by the refrigerator closed forms.
pub const ZETA_C_MIN: f64 = 1e-6;
pub const ZETA_C_MAX: f64 = 1e6;
