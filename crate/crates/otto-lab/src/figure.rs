//! Tables behind the three published figures, and the orderings every row
//! of them must satisfy.

use otto_core::Regime::{Adiabatic as Adi, SuddenCompression as Sc, SuddenExpansion as Se, SuddenSwitch as Ss};

use crate::quantity::{Column, Quantity};
use crate::sweep::{grid, Axis, Table};
use crate::{LabError, Result};

pub const DEFAULT_STEPS: usize = 181;
pub const MIN_STEPS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// Engine efficiencies against `η_c` plus the two inset differences.
    Fig2,
    /// Fractional loss of work against `η_c`.
    Fig4,
    /// Refrigerator COP at maximum Omega against `ζ_c`.
    Fig6,
}

impl FigureId {
    pub const ALL: [FigureId; 3] = [FigureId::Fig2, FigureId::Fig4, FigureId::Fig6];

    pub fn tag(self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig4 => "fig4",
            FigureId::Fig6 => "fig6",
        }
    }

    pub fn from_tag(tag: &str) -> Option<FigureId> {
        FigureId::ALL.into_iter().find(|f| f.tag() == tag)
    }

    pub fn axis(self) -> Axis {
        match self {
            FigureId::Fig6 => Axis::ZetaC,
            _ => Axis::EtaC,
        }
    }

    /// Axis range; 0.5, 1 and 3 fall on the default 181-point grid.
    pub fn range(self) -> (f64, f64) {
        match self {
            FigureId::Fig6 => (0.05, 9.05),
            _ => (0.01, 0.99),
        }
    }

    pub fn columns(self) -> Vec<Column> {
        use Quantity::*;
        let c = Column::new;
        match self {
            FigureId::Fig2 => vec![
                c(EtaOmega, Adi),
                c(EtaOmega, Sc),
                c(EtaMw, Sc),
                c(EtaOmega, Se),
                c(EtaMw, Se),
                c(EtaOmega, Ss),
                c(Delta, Sc),
                c(Delta, Se),
            ],
            FigureId::Fig4 => vec![c(ROmega, Sc), c(ROmega, Se), c(RMw, Sc), c(RMw, Se)],
            FigureId::Fig6 => vec![c(CopOmega, Adi), c(CopOmega, Sc), c(CopOmega, Se), c(CopOmega, Ss)],
        }
    }
}

pub fn figure_table(id: FigureId, steps: usize) -> Result<Table> {
    if steps < MIN_STEPS {
        return Err(LabError::Usage(format!("figures need at least {MIN_STEPS} steps, got {steps}")));
    }
    let (start, stop) = id.range();
    Ok(Table::compute(id.axis(), &grid(start, stop, steps), id.columns()))
}

/// One ordering claim on a row: `name` holds when `margin > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RowCheck {
    pub name: &'static str,
    pub margin: f64,
}

fn chain(out: &mut Vec<RowCheck>, name: &'static str, values: &[Option<f64>]) {
    let present: Vec<f64> = values.iter().flatten().copied().collect();
    if present.len() != values.len() {
        out.push(RowCheck { name, margin: f64::NEG_INFINITY });
        return;
    }
    let margin = present.windows(2).map(|w| w[0] - w[1]).fold(f64::INFINITY, f64::min);
    out.push(RowCheck { name, margin });
}

/// Ordering claims for row `row` of a figure table built by [`figure_table`].
pub fn row_checks(id: FigureId, table: &Table, row: usize) -> Vec<RowCheck> {
    let x = table.rows[row].0;
    let g = |name: &str| table.get(row, name);
    let mut out = Vec::new();
    match id {
        FigureId::Fig2 => {
            chain(
                &mut out,
                "eta_omega adi > sc > se > ss",
                &[g("eta_omega_adi"), g("eta_omega_sc"), g("eta_omega_se"), g("eta_omega_ss")],
            );
            chain(&mut out, "eta_c > eta_omega_adi", &[Some(x), g("eta_omega_adi")]);
            chain(&mut out, "eta_omega_sc > eta_mw_sc", &[g("eta_omega_sc"), g("eta_mw_sc")]);
            chain(&mut out, "eta_omega_se > eta_mw_se", &[g("eta_omega_se"), g("eta_mw_se")]);
            chain(&mut out, "delta_sc > 0", &[g("delta_sc"), Some(0.0)]);
            chain(&mut out, "delta_se > 0", &[g("delta_se"), Some(0.0)]);
        }
        FigureId::Fig4 => {
            chain(&mut out, "r_mw_se > r_mw_sc", &[g("r_mw_se"), g("r_mw_sc")]);
            chain(&mut out, "r_omega_se > r_omega_sc", &[g("r_omega_se"), g("r_omega_sc")]);
            chain(&mut out, "r_mw_sc > r_omega_sc > 0", &[g("r_mw_sc"), g("r_omega_sc"), Some(0.0)]);
            chain(&mut out, "r_mw_se > r_omega_se > 0", &[g("r_mw_se"), g("r_omega_se"), Some(0.0)]);
        }
        FigureId::Fig6 => {
            if x > 1.0 {
                chain(
                    &mut out,
                    "cop_omega adi > sc > se > ss",
                    &[g("cop_omega_adi"), g("cop_omega_sc"), g("cop_omega_se"), g("cop_omega_ss")],
                );
            } else {
                chain(&mut out, "cop_omega adi > sc", &[g("cop_omega_adi"), g("cop_omega_sc")]);
                let empty = g("cop_omega_se").is_none() && g("cop_omega_ss").is_none();
                out.push(RowCheck {
                    name: "se/ss empty for zeta_c <= 1",
                    margin: if empty { 1.0 } else { f64::NEG_INFINITY },
                });
            }
            chain(&mut out, "zeta_c > cop_omega_adi", &[Some(x), g("cop_omega_adi")]);
        }
    }
    out
}
