use alloc::vec::Vec;

/// Named intermediates produced while evaluating a closed form.
///
/// Symbols are recorded in evaluation order. Names follow the usual notation
/// for these expressions (`N`, `A`, `K`, `G`, `L`, ...) plus a few descriptive
/// ones such as `z_star`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Trace {
    entries: Vec<(&'static str, f64)>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &'static str, value: f64) {
        match self.entries.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((name, value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries.iter().find(|(n, _)| *n == name).map(|e| e.1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A value together with the intermediates used to compute it.
#[derive(Debug, Clone, PartialEq)]
pub struct Traced<T> {
    pub value: T,
    pub trace: Trace,
}

impl<T> Traced<T> {
    pub fn new(value: T, trace: Trace) -> Self {
        Self { value, trace }
    }
}

/// Engine-side intermediates (`N`, `A`, `K`, `B`, `C`, `D`, `F`, `H`).
pub type ClosedFormTrace = Trace;
/// Refrigerator-side intermediates (`G`, `L`, `M`, `J`, `X`, `Y`, `P`).
pub type FridgeTrace = Trace;
