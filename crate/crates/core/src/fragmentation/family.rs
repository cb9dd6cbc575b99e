use std::collections::BTreeMap;

use super::address::Address;

/// Split coordinates `(U_v, V_v)` of the fragments of a run, keyed by node
/// address. Each pair lies in the open triangle `0 < u < v < 1`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CoupledFamily {
    entries: BTreeMap<Address, (f64, f64)>,
}

impl CoupledFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, address: Address, u: f64, v: f64) {
        debug_assert!(0.0 < u && u < v && v < 1.0);
        self.entries.insert(address, (u, v));
    }

    pub fn get(&self, address: &Address) -> Option<(f64, f64)> {
        self.entries.get(address).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Address, &(f64, f64))> {
        self.entries.iter()
    }
}
