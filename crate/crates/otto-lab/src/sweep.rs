//! Grid sweeps over the Carnot efficiency or Carnot COP, emitted as CSV.

use std::io::Write;

use otto_core::{Device, Regime, ETA_C_MAX, ETA_C_MIN, ZETA_C_MAX, ZETA_C_MIN};

use crate::format::fmt_cell;
use crate::quantity::{Column, Quantity};
use crate::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    EtaC,
    ZetaC,
}

impl Axis {
    pub fn tag(self) -> &'static str {
        match self {
            Axis::EtaC => "eta_c",
            Axis::ZetaC => "zeta_c",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Axis> {
        match tag {
            "eta_c" => Some(Axis::EtaC),
            "zeta_c" => Some(Axis::ZetaC),
            _ => None,
        }
    }

    pub fn for_device(device: Device) -> Axis {
        match device {
            Device::Engine => Axis::EtaC,
            Device::Fridge => Axis::ZetaC,
        }
    }

    fn bounds(self) -> (f64, f64) {
        match self {
            Axis::EtaC => (ETA_C_MIN, ETA_C_MAX),
            Axis::ZetaC => (ZETA_C_MIN, ZETA_C_MAX),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub device: Device,
    /// Empty means all four.
    pub regimes: Vec<Regime>,
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    /// Empty means every quantity of the device.
    pub quantities: Vec<Quantity>,
}

impl SweepSpec {
    /// Checks the grid and resolves the column list. Unsupported
    /// (regime, quantity) pairs are dropped and described in the notes.
    pub fn columns(&self) -> Result<(Vec<Column>, Vec<String>)> {
        if self.axis != Axis::for_device(self.device) {
            return Err(LabError::Usage(format!(
                "axis {} does not belong to the {} device",
                self.axis.tag(),
                device_tag(self.device)
            )));
        }
        validate_grid(self.axis, self.start, self.stop, self.steps)?;
        if let Some(q) = self.quantities.iter().find(|q| q.device() != self.device) {
            return Err(LabError::Usage(format!(
                "quantity {} does not belong to the {} device",
                q.tag(),
                device_tag(self.device)
            )));
        }
        let regimes = if self.regimes.is_empty() { Regime::ALL.to_vec() } else { self.regimes.clone() };
        let quantities: Vec<Quantity> = if self.quantities.is_empty() {
            Quantity::ALL.into_iter().filter(|q| q.device() == self.device).collect()
        } else {
            self.quantities.clone()
        };
        let mut columns = Vec::new();
        let mut notes = Vec::new();
        for &regime in &regimes {
            for &quantity in &quantities {
                let column = Column::new(quantity, regime);
                if quantity.supports(regime) {
                    if !columns.contains(&column) {
                        columns.push(column);
                    }
                } else {
                    notes.push(format!("skipping {}: not defined for this regime", column.name()));
                }
            }
        }
        if columns.is_empty() {
            return Err(LabError::Usage("no supported (regime, quantity) pair requested".into()));
        }
        Ok((columns, notes))
    }

    pub fn run(&self) -> Result<(Table, Vec<String>)> {
        let (columns, notes) = self.columns()?;
        Ok((Table::compute(self.axis, &grid(self.start, self.stop, self.steps), columns), notes))
    }
}

pub fn device_tag(device: Device) -> &'static str {
    match device {
        Device::Engine => "engine",
        Device::Fridge => "fridge",
    }
}

pub fn device_from_tag(tag: &str) -> Option<Device> {
    match tag {
        "engine" => Some(Device::Engine),
        "fridge" => Some(Device::Fridge),
        _ => None,
    }
}

pub fn validate_grid(axis: Axis, start: f64, stop: f64, steps: usize) -> Result<()> {
    if steps < 2 {
        return Err(LabError::Usage(format!("steps must be at least 2, got {steps}")));
    }
    if !(start < stop) {
        return Err(LabError::Usage(format!("start ({start}) must be below stop ({stop})")));
    }
    let (lo, hi) = axis.bounds();
    for v in [start, stop] {
        if !(lo..=hi).contains(&v) {
            return Err(LabError::Model(otto_core::Error::Domain { what: axis.tag(), value: v }));
        }
    }
    Ok(())
}

/// `steps` equally spaced points from `start` to `stop` inclusive. Values are
/// rounded to 12 decimals so round grid points (0.5, 1, 3) come out exact.
pub fn grid(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    let n = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let v = if i + 1 == steps { stop } else { start + (stop - start) * i as f64 / n };
            if v.abs() < 1e3 {
                (v * 1e12).round() / 1e12
            } else {
                v
            }
        })
        .collect()
}

/// Computed sweep: one row per grid point, `None` for out-of-domain cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub axis: Axis,
    pub columns: Vec<Column>,
    pub rows: Vec<(f64, Vec<Option<f64>>)>,
}

impl Table {
    pub fn compute(axis: Axis, xs: &[f64], columns: Vec<Column>) -> Table {
        let rows = xs.iter().map(|&x| (x, columns.iter().map(|c| c.cell(x)).collect())).collect();
        Table { axis, columns, rows }
    }

    pub fn header(&self) -> Vec<String> {
        std::iter::once(self.axis.tag().to_string())
            .chain(self.columns.iter().map(Column::name))
            .collect()
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name() == name)
    }

    pub fn get(&self, row: usize, name: &str) -> Option<f64> {
        self.rows.get(row)?.1[self.column_index(name)?]
    }

    /// Row whose axis value equals `x` to 1e-12.
    pub fn row_at(&self, x: f64) -> Option<usize> {
        self.rows.iter().position(|(v, _)| (v - x).abs() < 1e-12)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(self.header())?;
        for (x, cells) in &self.rows {
            let record = std::iter::once(crate::format::fmt_num(*x)).chain(cells.iter().map(|c| fmt_cell(*c)));
            w.write_record(record)?;
        }
        w.flush()?;
        Ok(())
    }
}
