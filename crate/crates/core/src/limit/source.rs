use crate::fragmentation::{Address, CoupledFamily};
use crate::rng::{Purpose, Stream};

/// Randomness attached to one node: `(U, V)` with density `2` on
/// `0 < u < v < 1` and an independent uniform `W`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeDraw {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

/// Supplies the draw of every node of the binary tree.
pub trait NodeSource: Sync {
    fn draw(&self, address: Address) -> NodeDraw;
}

impl<F: Fn(Address) -> NodeDraw + Sync> NodeSource for F {
    fn draw(&self, address: Address) -> NodeDraw {
        self(address)
    }
}

/// One keyed stream per node address, so going deeper refines earlier
/// draws instead of reshuffling them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyedSource {
    pub seed: u64,
    pub replicate: u64,
}

impl KeyedSource {
    pub fn new(seed: u64, replicate: u64) -> Self {
        assert!(replicate < 1 << 56, "replicate index too large");
        KeyedSource { seed, replicate }
    }
}

impl NodeSource for KeyedSource {
    fn draw(&self, address: Address) -> NodeDraw {
        let sub = (self.replicate << 8) | address.len() as u64;
        let mut s = Stream::new(self.seed, Purpose::LimitNodes, address.bits(), sub);
        let (u, v) = s.ordered_pair();
        NodeDraw { u, v, w: s.uniform() }
    }
}

/// Split coordinates of a discrete run where the run has them, keyed
/// draws elsewhere.
#[derive(Debug, Clone, Copy)]
pub struct CoupledSource<'a> {
    family: &'a CoupledFamily,
    fallback: KeyedSource,
}

impl<'a> CoupledSource<'a> {
    pub fn new(family: &'a CoupledFamily, fallback: KeyedSource) -> Self {
        CoupledSource { family, fallback }
    }
}

impl NodeSource for CoupledSource<'_> {
    fn draw(&self, address: Address) -> NodeDraw {
        let d = self.fallback.draw(address);
        match self.family.get(&address) {
            Some((u, v)) => NodeDraw { u, v, w: d.w },
            None => d,
        }
    }
}
