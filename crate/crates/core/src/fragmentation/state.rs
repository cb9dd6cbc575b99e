use std::collections::{BTreeMap, VecDeque};
use std::sync::OnceLock;

use super::address::Address;
use super::family::CoupledFamily;
use crate::error::{Error, Result};
use crate::model::{ArcSet, Chord, FiniteLamination, Point, StepFunction};

/// Which chord-insertion process drives the fragmentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Two uniform points on the circle; the chord is kept only when both
    /// fall in the same fragment (index of self-similarity 2).
    SelfSimilar,
    /// A uniformly chosen fragment is split at every step (index 0).
    Homogeneous,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::SelfSimilar => "self-similar",
            Mode::Homogeneous => "homogeneous",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "self-similar" | "selfsimilar" | "ss" => Ok(Mode::SelfSimilar),
            "homogeneous" | "homog" | "h" => Ok(Mode::Homogeneous),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub type NodeId = usize;

/// How a fragment was split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Split {
    pub chord: Chord,
    /// Local coordinates of the chord endpoints inside the split fragment,
    /// `u_local < v_local`.
    pub u_local: f64,
    pub v_local: f64,
}

/// A fragment, past or present, attached to a node of the binary tree.
///
/// Child `0` keeps the side that holds the fragment's local origin (closer
/// to the root of the dual tree), child `1` is the part cut off by the
/// chord.
#[derive(Debug, Clone)]
pub struct FragNode {
    address: Address,
    parent: Option<NodeId>,
    mass: f64,
    arcs: Option<ArcSet>,
    split: Option<Split>,
    children: Option<[NodeId; 2]>,
    slot: usize,
}

impl FragNode {
    pub fn address(&self) -> Address {
        self.address
    }

    pub fn parent(&self) -> Option<NodeId> {
        self.parent
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Arc set of a current fragment; `None` once the node has been split.
    pub fn arcs(&self) -> Option<&ArcSet> {
        self.arcs.as_ref()
    }

    pub fn split(&self) -> Option<&Split> {
        self.split.as_ref()
    }

    pub fn children(&self) -> Option<[NodeId; 2]> {
        self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }
}

/// Result of a self-similar trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialOutcome {
    Inserted(Address),
    Rejected,
}

/// State of a discrete lamination process: the binary tree of fragments,
/// a point-location index over the current fragments and trial counters.
#[derive(Debug, Clone)]
pub struct FragState {
    mode: Mode,
    nodes: Vec<FragNode>,
    /// Start point of every current arc mapped to the leaf owning it.
    leaf_at: BTreeMap<Point, NodeId>,
    leaves: Vec<NodeId>,
    splits: Vec<NodeId>,
    n_trials: u64,
    /// Dual-tree depth of every leaf (indexed by node id), computed on
    /// demand and dropped by every split.
    depths: OnceLock<Vec<u32>>,
}

impl FragState {
    pub fn new(mode: Mode) -> Self {
        let root = FragNode {
            address: Address::ROOT,
            parent: None,
            mass: 1.0,
            arcs: Some(ArcSet::full()),
            split: None,
            children: None,
            slot: 0,
        };
        let mut leaf_at = BTreeMap::new();
        leaf_at.insert(Point::ZERO, 0);
        FragState {
            mode,
            nodes: vec![root],
            leaf_at,
            leaves: vec![0],
            splits: Vec::new(),
            n_trials: 0,
            depths: OnceLock::new(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n_trials(&self) -> u64 {
        self.n_trials
    }

    /// Number of inserted chords.
    pub fn n_chords(&self) -> usize {
        self.splits.len()
    }

    pub fn n_leaves(&self) -> usize {
        self.leaves.len()
    }

    pub fn node(&self, id: NodeId) -> &FragNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[FragNode] {
        &self.nodes
    }

    /// Current fragments in labeling order (the order used by
    /// [`FragState::trial_homogeneous`]).
    pub fn leaves(&self) -> &[NodeId] {
        &self.leaves
    }

    /// Split nodes in insertion order.
    pub fn split_nodes(&self) -> impl Iterator<Item = &FragNode> + '_ {
        self.splits.iter().map(move |&id| &self.nodes[id])
    }

    pub fn total_leaf_mass(&self) -> f64 {
        self.leaves.iter().map(|&id| self.nodes[id].mass).sum()
    }

    /// The current fragment whose trace contains `s` (right-continuous at
    /// chord endpoints; `s = 1` is identified with 0).
    pub fn leaf_containing(&self, s: f64) -> Result<NodeId> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::OutOfRange(s));
        }
        let s = if s == 1.0 { 0.0 } else { s };
        Ok(self.leaf_containing_point(Point::clamped(s)))
    }

    fn leaf_containing_point(&self, p: Point) -> NodeId {
        let (_, &id) = self
            .leaf_at
            .range(..=p)
            .next_back()
            .expect("circle point 0 is always indexed");
        id
    }

    fn check_point(&self, p: Point) -> Result<()> {
        if p >= Point::ONE {
            return Err(Error::OutOfRange(p.to_f64()));
        }
        // circle point 0 is always indexed, so it collides too
        if self.leaf_at.contains_key(&p) {
            return Err(Error::EndpointCollision(p.to_f64()));
        }
        Ok(())
    }

    /// One step of the self-similar process: insert the chord joining
    /// `u` and `v` if both points lie in the same fragment.
    pub fn trial_selfsimilar(&mut self, u: f64, v: f64) -> Result<TrialOutcome> {
        if self.mode != Mode::SelfSimilar {
            return Err(Error::ModeMismatch {
                expected: "self-similar",
            });
        }
        for x in [u, v] {
            if !(0.0..1.0).contains(&x) {
                return Err(Error::OutOfRange(x));
            }
        }
        let (pu, pv) = (Point::clamped(u), Point::clamped(v));
        self.check_point(pu)?;
        self.check_point(pv)?;
        if pu == pv {
            return Err(Error::DegenerateChord(u));
        }
        self.n_trials += 1;
        let leaf = self.leaf_containing_point(pu);
        if self.leaf_containing_point(pv) != leaf {
            return Ok(TrialOutcome::Rejected);
        }
        let chord = Chord::from_points(pu, pv)?;
        let (a, b) = chord.points();
        let arcs = self.nodes[leaf].arcs.as_ref().expect("leaf has arcs");
        let lu = arcs.locate_point(a).expect("point located in its leaf");
        let lv = arcs.locate_point(b).expect("point located in its leaf");
        let address = self.split_leaf(leaf, chord, lu, lv)?;
        Ok(TrialOutcome::Inserted(address))
    }

    /// One step of the homogeneous process: split the `j`-th current
    /// fragment at local coordinates `u < v`.
    pub fn trial_homogeneous(&mut self, j: usize, u: f64, v: f64) -> Result<Address> {
        if self.mode != Mode::Homogeneous {
            return Err(Error::ModeMismatch {
                expected: "homogeneous",
            });
        }
        let leaf = *self.leaves.get(j).ok_or(Error::LeafIndex {
            index: j,
            leaves: self.leaves.len(),
        })?;
        if !(0.0 < u && u < v && v < 1.0) {
            return Err(Error::InvalidSplit(u, v));
        }
        let arcs = self.nodes[leaf].arcs.as_ref().expect("leaf has arcs");
        let (a, b) = (arcs.point_at_exact(u)?, arcs.point_at_exact(v)?);
        self.check_point(a)?;
        self.check_point(b)?;
        if a == b {
            return Err(Error::DegenerateChord(a.to_f64()));
        }
        let chord = Chord::from_points(a, b)?;
        let address = self.split_leaf(leaf, chord, u, v)?;
        self.n_trials += 1;
        Ok(address)
    }

    fn split_leaf(&mut self, leaf: NodeId, chord: Chord, u_local: f64, v_local: f64) -> Result<Address> {
        let parent = &self.nodes[leaf];
        let address = parent.address;
        let (addr0, addr1) = (address.child(0)?, address.child(1)?);
        let (outer, inner) = parent
            .arcs
            .as_ref()
            .expect("leaf has arcs")
            .split_at_chord(&chord)?;
        let slot = parent.slot;

        let id0 = self.nodes.len();
        let id1 = id0 + 1;
        for arc in outer.arcs() {
            self.leaf_at.insert(arc.start, id0);
        }
        for arc in inner.arcs() {
            self.leaf_at.insert(arc.start, id1);
        }
        self.nodes.push(FragNode {
            address: addr0,
            parent: Some(leaf),
            mass: outer.mass(),
            arcs: Some(outer),
            split: None,
            children: None,
            slot,
        });
        self.nodes.push(FragNode {
            address: addr1,
            parent: Some(leaf),
            mass: inner.mass(),
            arcs: Some(inner),
            split: None,
            children: None,
            slot: self.leaves.len(),
        });
        self.leaves[slot] = id0;
        self.leaves.push(id1);

        let node = &mut self.nodes[leaf];
        node.arcs = None;
        node.children = Some([id0, id1]);
        node.split = Some(Split {
            chord,
            u_local,
            v_local,
        });
        self.splits.push(leaf);
        self.depths = OnceLock::new();
        Ok(address)
    }

    /// Height of the fragment containing `s`: its distance in the dual
    /// tree from the fragment containing circle point 0.
    pub fn height(&self, s: f64) -> Result<u32> {
        Ok(self.leaf_depths()[self.leaf_containing(s)?])
    }

    /// Dual-tree depth of a current fragment; `None` for split nodes.
    pub fn depth(&self, id: NodeId) -> Option<u32> {
        self.nodes[id].is_leaf().then(|| self.leaf_depths()[id])
    }

    /// Largest height over the current fragments.
    pub fn max_height(&self) -> u32 {
        self.leaves.iter().map(|&id| self.leaf_depths()[id]).max().unwrap_or(0)
    }

    fn leaf_depths(&self) -> &[u32] {
        self.depths.get_or_init(|| {
            let adjacency = self.adjacency();
            let mut depth = vec![u32::MAX; self.nodes.len()];
            let root = self.leaf_at[&Point::ZERO];
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in &adjacency[x] {
                    if depth[y] == u32::MAX {
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            depth
        })
    }

    /// Neighbours of every leaf in the dual tree: two fragments are
    /// adjacent when a chord bounds both.
    fn adjacency(&self) -> Vec<Vec<NodeId>> {
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for node in self.split_nodes() {
            let chord = node.split.expect("split node").chord;
            // [a, a+) lies inside the chord, [b, b+) just outside it
            let (a, b) = chord.points();
            let inside = self.leaf_containing_point(a);
            let outside = self.leaf_containing_point(b);
            adjacency[inside].push(outside);
            adjacency[outside].push(inside);
        }
        adjacency
    }

    /// Number of chords met by the segment from circle point 0 to `s`,
    /// counted chord by chord.
    pub fn height_by_crossing(&self, s: f64) -> Result<u32> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::OutOfRange(s));
        }
        Ok(self
            .split_nodes()
            .filter(|n| n.split.expect("split node").chord.separates_from_origin(s))
            .count() as u32)
    }

    /// The height process `C_n` as a right-continuous step function with a
    /// breakpoint at every chord endpoint: a sweep adding one at each left
    /// endpoint and removing one at each right endpoint.
    pub fn height_function(&self) -> StepFunction {
        let mut events: Vec<(Point, f64)> = self
            .split_nodes()
            .flat_map(|n| {
                let (a, b) = n.split.expect("split node").chord.points();
                [(a, 1.0), (b, -1.0)]
            })
            .collect();
        events.sort_by_key(|e| e.0);
        let mut values = Vec::with_capacity(events.len() + 1);
        values.push(0.0);
        let mut level = 0.0;
        for &(_, step) in &events {
            level += step;
            values.push(level);
        }
        let breakpoints = events.into_iter().map(|e| e.0).collect();
        StepFunction::from_points(breakpoints, values).expect("chord endpoints are distinct points of (0, 1)")
    }

    /// Graph distance in the dual tree between the fragments containing `s`
    /// and `t`, by breadth-first search over fragment adjacencies.
    pub fn dual_tree_distance(&self, s: f64, t: f64) -> Result<u32> {
        let from = self.leaf_containing(s)?;
        let to = self.leaf_containing(t)?;
        if from == to {
            return Ok(0);
        }
        let adjacency = self.adjacency();
        let mut dist: BTreeMap<NodeId, u32> = BTreeMap::new();
        dist.insert(from, 0);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for &y in &adjacency[x] {
                if !dist.contains_key(&y) {
                    if y == to {
                        return Ok(d + 1);
                    }
                    dist.insert(y, d + 1);
                    queue.push_back(y);
                }
            }
        }
        unreachable!("the dual graph of a lamination is connected")
    }

    /// `C(s) + C(t) - 2 min C` over the interval between `s` and `t`,
    /// evaluated on the height function.
    pub fn encoded_distance(&self, s: f64, t: f64) -> Result<u32> {
        Ok(self.height_function().tree_distance(s, t)? as u32)
    }

    /// Local split coordinates of every split node.
    pub fn coupled_family(&self) -> Result<CoupledFamily> {
        if self.mode != Mode::SelfSimilar {
            return Err(Error::ModeMismatch {
                expected: "self-similar",
            });
        }
        Ok(self.split_family())
    }

    /// Local split coordinates of every split node, in either mode.
    pub fn split_family(&self) -> CoupledFamily {
        let mut family = CoupledFamily::new();
        for node in self.split_nodes() {
            let split = node.split.expect("split node");
            family.insert(node.address, split.u_local, split.v_local);
        }
        family
    }

    /// The inserted chords.
    pub fn lamination(&self) -> FiniteLamination {
        FiniteLamination::from_trusted(self.split_nodes().map(|n| n.split.expect("split node").chord).collect())
    }

    /// First letter of the address of the fragment containing `s`, i.e.
    /// which side of the first chord `s` lies on; `None` before any chord.
    pub fn first_branch(&self, s: f64) -> Result<Option<u8>> {
        let addr = self.nodes[self.leaf_containing(s)?].address;
        Ok((!addr.is_root()).then(|| addr.letter(0)))
    }

    /// Number of chords inserted in the subtree below the first chord's
    /// child `letter`.
    pub fn chords_below(&self, letter: u8) -> usize {
        self.split_nodes()
            .filter(|n| !n.address.is_root() && n.address.letter(0) == letter)
            .count()
    }
}
