//! Depth-`n` approximations `Z_n` and `H_n` of the limit height processes,
//! built by iterating the recursive operators over the binary tree of
//! node randomness.

mod source;

use std::collections::HashMap;

pub use source::{CoupledSource, KeyedSource, NodeDraw, NodeSource};

use crate::analytics::Constants;
use crate::error::{Error, Result};
use crate::fragmentation::{Address, CoupledFamily, Mode};

/// Left-child coordinate map of the recursion.
pub fn k0(s: f64, u: f64, v: f64) -> f64 {
    let l = 1.0 - (v - u);
    if s < u {
        s / l
    } else if s >= v {
        (s - (v - u)) / l
    } else {
        u / l
    }
}

/// Right-child coordinate map; zero outside `[u, v)`.
pub fn k1(s: f64, u: f64, v: f64) -> f64 {
    if u <= s && s < v {
        (s - u) / (v - u)
    } else {
        0.0
    }
}

/// Which recursion to run and how deep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitSpec {
    pub mode: Mode,
    pub depth: u32,
    /// Scale of the base profile: `κ` or `κ^h`.
    pub scale: f64,
    /// `β`; also the base-profile exponent in self-similar mode.
    pub beta: f64,
}

impl LimitSpec {
    pub fn self_similar(depth: u32) -> Self {
        let k = Constants::compute();
        LimitSpec {
            mode: Mode::SelfSimilar,
            depth,
            scale: k.kappa,
            beta: k.beta,
        }
    }

    pub fn homogeneous(depth: u32) -> Self {
        let k = Constants::compute();
        LimitSpec {
            mode: Mode::Homogeneous,
            depth,
            scale: k.kappa_h,
            beta: k.beta,
        }
    }

    pub fn for_mode(mode: Mode, depth: u32) -> Self {
        match mode {
            Mode::SelfSimilar => Self::self_similar(depth),
            Mode::Homogeneous => Self::homogeneous(depth),
        }
    }

    /// Depth-0 profile: `κ (s(1-s))^β` or `κ^h (s(1-s))^{1/2}`.
    pub fn base(&self, s: f64) -> f64 {
        let x = s * (1.0 - s);
        match self.mode {
            Mode::SelfSimilar => self.scale * x.powf(self.beta),
            Mode::Homogeneous => self.scale * x.sqrt(),
        }
    }

    /// Coefficients in front of the two children at a node.
    fn coefficients(&self, d: &NodeDraw) -> (f64, f64) {
        let m = d.v - d.u;
        match self.mode {
            Mode::SelfSimilar => ((1.0 - m).powf(self.beta), m.powf(self.beta)),
            Mode::Homogeneous => (d.w.cbrt(), (1.0 - d.w).cbrt()),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    u: f64,
    v: f64,
    m: f64,
    l: f64,
    c0: f64,
    c1: f64,
}

enum Branch {
    Left(f64),
    Middle(f64),
    Right(f64),
}

impl Node {
    fn branch(&self, s: f64) -> Branch {
        if s < self.u {
            Branch::Left(s / self.l)
        } else if s >= self.v {
            Branch::Right((s - self.m) / self.l)
        } else {
            Branch::Middle((s - self.u) / self.m)
        }
    }

    fn psi(&self) -> f64 {
        self.u / self.l
    }
}

/// Evaluator for the process rooted at one node, with per-node caches
/// of the draws and of the left-child value at `Ψ = U/(1-(V-U))`.
pub struct LimitEvaluator<'a, S: NodeSource + ?Sized> {
    spec: LimitSpec,
    source: &'a S,
    root: Address,
    nodes: HashMap<Address, Node>,
    psi: HashMap<Address, f64>,
}

impl<'a, S: NodeSource + ?Sized> LimitEvaluator<'a, S> {
    pub fn new(spec: LimitSpec, source: &'a S) -> Self {
        Self::at(spec, source, Address::ROOT)
    }

    /// Evaluator for the copy `Z^{(root)}` driven by the subtree below
    /// `root`.
    pub fn at(spec: LimitSpec, source: &'a S, root: Address) -> Self {
        LimitEvaluator {
            spec,
            source,
            root,
            nodes: HashMap::new(),
            psi: HashMap::new(),
        }
    }

    pub fn spec(&self) -> &LimitSpec {
        &self.spec
    }

    fn node(&mut self, addr: Address) -> Node {
        if let Some(n) = self.nodes.get(&addr) {
            return *n;
        }
        let n = self.fresh_node(addr);
        self.nodes.insert(addr, n);
        n
    }

    fn fresh_node(&self, addr: Address) -> Node {
        let d = self.source.draw(addr);
        let (c0, c1) = self.spec.coefficients(&d);
        let m = d.v - d.u;
        Node {
            u: d.u,
            v: d.v,
            m,
            l: 1.0 - m,
            c0,
            c1,
        }
    }

    fn child(addr: Address, letter: u8) -> Address {
        addr.child(letter).expect("recursion depth is bounded by the address length")
    }

    fn point(&mut self, addr: Address, level: u32, s: f64) -> f64 {
        if level == 0 {
            return self.spec.base(s);
        }
        let node = self.node(addr);
        let a0 = Self::child(addr, 0);
        match node.branch(s) {
            Branch::Left(t) | Branch::Right(t) => node.c0 * self.point(a0, level - 1, t),
            Branch::Middle(t) => {
                let left = match self.psi.get(&addr) {
                    Some(&x) => x,
                    None => {
                        let x = self.point(a0, level - 1, node.psi());
                        self.psi.insert(addr, x);
                        x
                    }
                };
                let right = self.point(Self::child(addr, 1), level - 1, t);
                node.c0 * left + node.c1 * right
            }
        }
    }

    /// Value at one point.
    pub fn eval(&mut self, s: f64) -> Result<f64> {
        check_point(s)?;
        check_depth(self.root, self.spec.depth)?;
        Ok(self.point(self.root, self.spec.depth, s))
    }

    // each node is reached once per call, so nothing is cached here
    fn many(&self, addr: Address, level: u32, pts: &[f64]) -> Vec<f64> {
        if pts.is_empty() {
            return Vec::new();
        }
        if level == 0 {
            return pts.iter().map(|&s| self.spec.base(s)).collect();
        }
        let node = match self.nodes.get(&addr) {
            Some(n) => *n,
            None => self.fresh_node(addr),
        };
        let mut left_pts = Vec::new();
        let mut right_pts = Vec::new();
        let mut slots = Vec::with_capacity(pts.len());
        for &s in pts {
            match node.branch(s) {
                Branch::Left(t) | Branch::Right(t) => {
                    slots.push((left_pts.len(), None));
                    left_pts.push(t);
                }
                Branch::Middle(t) => {
                    slots.push((usize::MAX, Some(right_pts.len())));
                    right_pts.push(t);
                }
            }
        }
        let psi_slot = (!right_pts.is_empty()).then(|| {
            left_pts.push(node.psi());
            left_pts.len() - 1
        });
        let left = self.many(Self::child(addr, 0), level - 1, &left_pts);
        let right = self.many(Self::child(addr, 1), level - 1, &right_pts);
        slots
            .into_iter()
            .map(|slot| match slot {
                (i, None) => node.c0 * left[i],
                (_, Some(j)) => node.c0 * left[psi_slot.expect("middle points exist")] + node.c1 * right[j],
            })
            .collect()
    }

    /// Values on a grid of points in `[0, 1]`, visiting each node once.
    pub fn eval_grid(&mut self, grid: &[f64]) -> Result<Vec<f64>> {
        for &s in grid {
            check_point(s)?;
        }
        check_depth(self.root, self.spec.depth)?;
        Ok(self.many(self.root, self.spec.depth, grid))
    }

    /// Number of nodes cached by pointwise evaluation.
    pub fn cached_nodes(&self) -> usize {
        self.nodes.len()
    }
}

fn check_point(s: f64) -> Result<()> {
    if (0.0..=1.0).contains(&s) {
        Ok(())
    } else {
        Err(Error::OutOfRange(s))
    }
}

fn check_depth(root: Address, depth: u32) -> Result<()> {
    let total = root.len() + depth as usize;
    if total > Address::MAX_LEN {
        Err(Error::AddressOverflow(total))
    } else {
        Ok(())
    }
}

fn expect_mode(spec: &LimitSpec, mode: Mode) -> Result<()> {
    if spec.mode == mode {
        Ok(())
    } else {
        Err(Error::ModeMismatch {
            expected: mode.name(),
        })
    }
}

/// `Z_depth(s)`.
pub fn eval_z<S: NodeSource + ?Sized>(spec: &LimitSpec, source: &S, s: f64) -> Result<f64> {
    expect_mode(spec, Mode::SelfSimilar)?;
    LimitEvaluator::new(*spec, source).eval(s)
}

/// `H_depth(s)`.
pub fn eval_h<S: NodeSource + ?Sized>(spec: &LimitSpec, source: &S, s: f64) -> Result<f64> {
    expect_mode(spec, Mode::Homogeneous)?;
    LimitEvaluator::new(*spec, source).eval(s)
}

/// `Z_depth` or `H_depth` on a grid.
pub fn eval_grid<S: NodeSource + ?Sized>(spec: &LimitSpec, source: &S, grid: &[f64]) -> Result<Vec<f64>> {
    LimitEvaluator::new(*spec, source).eval_grid(grid)
}

/// `Z_depth` on a grid driven by the split coordinates of a discrete run;
/// nodes the run never split draw from the keyed stream of
/// `(seed, replicate)`.
pub fn coupled_z(family: &CoupledFamily, seed: u64, replicate: u64, depth: u32, grid: &[f64]) -> Result<Vec<f64>> {
    let source = CoupledSource::new(family, KeyedSource::new(seed, replicate));
    eval_grid(&LimitSpec::self_similar(depth), &source, grid)
}

#[cfg(test)]
mod tests;
