//! Arrow ribbon graphs.
//!
//! A ribbon graph is a surface with boundary assembled from vertex discs and
//! edge ribbons. We encode it as a rotation system: every vertex carries a
//! cyclic sequence of edge ends read along a reference orientation of its
//! boundary, and every edge carries a twist bit. The decoration is a finite
//! set of arrows tangent to boundary arcs; each arc stores its arrows as an
//! ordered list of direction bits relative to the arc's reference
//! parametrization.
//!
//! Arc conventions (fixed once, used by every traversal in the crate):
//!
//! * The boundary of a vertex is parametrized along rotation order. Between
//!   the attaching segment of entry `i` and the segment of entry `i+1` lies
//!   the free vertex arc `i`, carried by entry `i` as `free_arrows`.
//! * An edge ribbon is a rectangle glued at `end0` and `end1`. Both free
//!   sides are parametrized from `end0` towards `end1`. Walking the vertex
//!   boundary forward through the segment of `end0` enters at corner `P` and
//!   leaves at corner `Q`; side `R` leaves `end0` at `P`, side `L` at `Q`.
//!   For an untwisted edge side `R` arrives at `end1`'s corner `Q` (and `L`
//!   at `P`); a twist swaps the arrivals.

mod json;
mod trace;

pub use json::{graph_from_json, graph_to_json};
pub use trace::{
    trace_boundary, BoundaryComponent, BoundaryReport, CornerRole, Dir, Piece, SideTag, Walk,
};
pub(crate) use trace::{piece_arrows, side_corners};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} references missing vertex {vertex}")]
    DanglingEnd { edge: String, vertex: String },
    #[error("edge end {edge}.{end} is used {count} times")]
    EndMultiplicity { edge: String, end: u8, count: usize },
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("edge {edge}: vertex {vertex} rotation slot {pos} is inconsistent")]
    InconsistentEnd { edge: String, vertex: String, pos: usize },
    #[error("arrow presentation label {0} occurs {1} times, expected 2")]
    LabelMultiplicity(String, usize),
    #[error("graph is not fully signed (edge {0} has no sign)")]
    MissingSigns(String),
    #[error("graph has {edges} edges, above the canonicalization bound {bound}")]
    SizeBound { edges: usize, bound: usize },
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("malformed graph input: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub String);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub String);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<T: Into<String>> From<T> for VertexId {
    fn from(s: T) -> Self {
        VertexId(s.into())
    }
}

impl From<&EdgeId> for EdgeId {
    fn from(e: &EdgeId) -> Self {
        e.clone()
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        EdgeId(s.to_string())
    }
}

impl From<String> for EdgeId {
    fn from(s: String) -> Self {
        EdgeId(s)
    }
}

/// Direction of an arrow relative to its arc's reference parametrization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowDir {
    With,
    Against,
}

impl ArrowDir {
    pub fn flip(self) -> ArrowDir {
        match self {
            ArrowDir::With => ArrowDir::Against,
            ArrowDir::Against => ArrowDir::With,
        }
    }
}

/// Reverses the arc parametrization: order flips and every bit flips.
pub fn reverse_arrows(arrows: &[ArrowDir]) -> Vec<ArrowDir> {
    arrows.iter().rev().map(|a| a.flip()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One rotation slot: an edge end plus the arrows on its attaching segment
/// and on the free vertex arc that follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotEntry {
    pub edge: EdgeId,
    /// Which end of the edge is glued here (0 or 1).
    pub end: u8,
    /// Arrows on the attaching segment, relative to the vertex orientation.
    pub seg_arrows: Vec<ArrowDir>,
    /// Arrows on the free vertex arc after this segment in rotation order.
    pub free_arrows: Vec<ArrowDir>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vertex {
    pub rotation: Vec<RotEntry>,
    /// Cyclic arrow word on the whole boundary circle; only meaningful when
    /// `rotation` is empty.
    pub lone_arrows: Vec<ArrowDir>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndSlot {
    pub vertex: VertexId,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub ends: [EndSlot; 2],
    pub twist: bool,
    /// Arrows on free side L, parametrized from end0 to end1.
    pub side_l: Vec<ArrowDir>,
    /// Arrows on free side R, parametrized from end0 to end1.
    pub side_r: Vec<ArrowDir>,
    pub sign: Option<Sign>,
}

/// A validated arrow ribbon graph. Construction goes through
/// [`ArrowRibbonGraph::new`] (or the JSON loader), which checks that the
/// vertex rotations and edge end slots cross-reference consistently.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArrowRibbonGraph {
    pub vertices: BTreeMap<VertexId, Vertex>,
    pub edges: BTreeMap<EdgeId, Edge>,
}

/// Input for [`ArrowRibbonGraph::from_rotation_system`]: vertices with their
/// cyclic end sequences, edge twist bits, and arrow lists per arc.
#[derive(Debug, Clone, Default)]
pub struct RotationSpec {
    pub vertices: Vec<(VertexId, Vec<RotEntry>, Vec<ArrowDir>)>,
    /// edge id -> (twist, side_l, side_r, sign)
    pub edges: BTreeMap<EdgeId, (bool, Vec<ArrowDir>, Vec<ArrowDir>, Option<Sign>)>,
}

impl ArrowRibbonGraph {
    pub fn empty() -> Self {
        ArrowRibbonGraph::default()
    }

    /// Builds and validates a graph from vertex data plus per-edge data.
    /// Edge end slots are derived from the rotations.
    pub fn from_rotation_system(spec: RotationSpec) -> Result<Self, GraphError> {
        let mut vertices = BTreeMap::new();
        for (id, rotation, lone_arrows) in spec.vertices {
            let v = Vertex {
                rotation,
                lone_arrows,
            };
            if vertices.insert(id.clone(), v).is_some() {
                return Err(GraphError::DuplicateId(id.0));
            }
        }
        // Derive end slots by scanning rotations.
        let mut slots: BTreeMap<(EdgeId, u8), Vec<EndSlot>> = BTreeMap::new();
        for (vid, v) in &vertices {
            for (pos, entry) in v.rotation.iter().enumerate() {
                slots
                    .entry((entry.edge.clone(), entry.end))
                    .or_default()
                    .push(EndSlot {
                        vertex: vid.clone(),
                        pos,
                    });
            }
        }
        let mut edges = BTreeMap::new();
        for (eid, (twist, side_l, side_r, sign)) in spec.edges {
            let mut ends = Vec::new();
            for end in 0..2u8 {
                let found = slots.remove(&(eid.clone(), end)).unwrap_or_default();
                if found.len() != 1 {
                    return Err(GraphError::EndMultiplicity {
                        edge: eid.0.clone(),
                        end,
                        count: found.len(),
                    });
                }
                ends.extend(found);
            }
            let ends: [EndSlot; 2] = [ends[0].clone(), ends[1].clone()];
            edges.insert(
                eid,
                Edge {
                    ends,
                    twist,
                    side_l,
                    side_r,
                    sign,
                },
            );
        }
        if let Some(((eid, _), _)) = slots.into_iter().next() {
            return Err(GraphError::UnknownEdge(eid.0));
        }
        let g = ArrowRibbonGraph { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    /// Builds the graph described by a set of circles carrying labeled,
    /// directed arrows: each circle becomes a vertex, each label pair an
    /// edge glued along the two arrows. The arrows themselves stay on the
    /// attaching arcs as decoration. Two like-labeled arrows pointing the
    /// same way (both with or both against their circles) give an untwisted
    /// edge; opposite ways give a twisted edge.
    pub fn from_arrow_presentation(
        circles: &[Vec<(String, ArrowDir)>],
    ) -> Result<Self, GraphError> {
        let mut counts: BTreeMap<&String, usize> = BTreeMap::new();
        for circle in circles {
            for (label, _) in circle {
                *counts.entry(label).or_default() += 1;
            }
        }
        for (label, n) in counts {
            if n != 2 {
                return Err(GraphError::LabelMultiplicity(label.clone(), n));
            }
        }
        let mut spec = RotationSpec::default();
        let mut first_dir: BTreeMap<String, ArrowDir> = BTreeMap::new();
        for (ci, circle) in circles.iter().enumerate() {
            let mut rotation = Vec::new();
            for (label, dir) in circle {
                let end = if first_dir.contains_key(label) { 1 } else { 0 };
                if end == 0 {
                    first_dir.insert(label.clone(), *dir);
                } else {
                    let twist = first_dir[label] != *dir;
                    spec.edges
                        .insert(EdgeId(label.clone()), (twist, Vec::new(), Vec::new(), None));
                }
                rotation.push(RotEntry {
                    edge: EdgeId(label.clone()),
                    end,
                    seg_arrows: vec![*dir],
                    free_arrows: Vec::new(),
                });
            }
            spec.vertices
                .push((VertexId(format!("v{ci}")), rotation, Vec::new()));
        }
        ArrowRibbonGraph::from_rotation_system(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let mut seen: BTreeSet<(EdgeId, u8)> = BTreeSet::new();
        for (vid, v) in &self.vertices {
            for (pos, entry) in v.rotation.iter().enumerate() {
                let edge = self
                    .edges
                    .get(&entry.edge)
                    .ok_or_else(|| GraphError::UnknownEdge(entry.edge.0.clone()))?;
                if entry.end > 1 {
                    return Err(GraphError::InconsistentEnd {
                        edge: entry.edge.0.clone(),
                        vertex: vid.0.clone(),
                        pos,
                    });
                }
                let slot = &edge.ends[entry.end as usize];
                if slot.vertex != *vid || slot.pos != pos {
                    return Err(GraphError::InconsistentEnd {
                        edge: entry.edge.0.clone(),
                        vertex: vid.0.clone(),
                        pos,
                    });
                }
                if !seen.insert((entry.edge.clone(), entry.end)) {
                    return Err(GraphError::EndMultiplicity {
                        edge: entry.edge.0.clone(),
                        end: entry.end,
                        count: 2,
                    });
                }
            }
        }
        for (eid, edge) in &self.edges {
            for end in 0..2u8 {
                if !seen.contains(&(eid.clone(), end)) {
                    return Err(GraphError::EndMultiplicity {
                        edge: eid.0.clone(),
                        end,
                        count: 0,
                    });
                }
                let slot = &edge.ends[end as usize];
                if !self.vertices.contains_key(&slot.vertex) {
                    return Err(GraphError::DanglingEnd {
                        edge: eid.0.clone(),
                        vertex: slot.vertex.0.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.keys().cloned().collect()
    }

    pub fn all_edges(&self) -> BTreeSet<EdgeId> {
        self.edges.keys().cloned().collect()
    }

    pub fn edge(&self, e: &EdgeId) -> Result<&Edge, GraphError> {
        self.edges.get(e).ok_or_else(|| GraphError::UnknownEdge(e.0.clone()))
    }

    /// The rotation entry at a slot.
    pub fn entry(&self, v: &VertexId, pos: usize) -> &RotEntry {
        &self.vertices[v].rotation[pos]
    }

    /// True when the graph carries a sign on every edge.
    pub fn is_signed(&self) -> bool {
        self.edges.values().all(|e| e.sign.is_some())
    }

    pub fn require_signs(&self) -> Result<(), GraphError> {
        for (eid, e) in &self.edges {
            if e.sign.is_none() {
                return Err(GraphError::MissingSigns(eid.0.clone()));
            }
        }
        Ok(())
    }

    /// Drops all edge signs.
    pub fn unsigned(&self) -> ArrowRibbonGraph {
        let mut g = self.clone();
        for e in g.edges.values_mut() {
            e.sign = None;
        }
        g
    }

    /// True when `e` is a loop: both ends on the same vertex.
    pub fn is_loop(&self, e: &EdgeId) -> bool {
        let edge = &self.edges[e];
        edge.ends[0].vertex == edge.ends[1].vertex
    }

    /// Number of connected components of the spanning subgraph (V, F).
    pub fn subgraph_components(&self, subset: &BTreeSet<EdgeId>) -> usize {
        let idx: BTreeMap<&VertexId, usize> =
            self.vertices.keys().enumerate().map(|(i, v)| (v, i)).collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for e in subset {
            let edge = &self.edges[e];
            uf.union(idx[&edge.ends[0].vertex], idx[&edge.ends[1].vertex]);
        }
        uf.count()
    }

    /// Orientability of the spanning subgraph (V, F): true when no cycle of
    /// F has odd total twist, i.e. the twists can be removed by re-charting
    /// vertex orientations.
    pub fn subgraph_orientable(&self, subset: &BTreeSet<EdgeId>) -> bool {
        let idx: BTreeMap<&VertexId, usize> =
            self.vertices.keys().enumerate().map(|(i, v)| (v, i)).collect();
        let mut uf = ParityUnionFind::new(self.vertices.len());
        for e in subset {
            let edge = &self.edges[e];
            if !uf.union(
                idx[&edge.ends[0].vertex],
                idx[&edge.ends[1].vertex],
                edge.twist,
            ) {
                return false;
            }
        }
        true
    }

    /// Disjoint union; vertex and edge id sets must not collide.
    pub fn disjoint_union(&self, other: &ArrowRibbonGraph) -> Result<ArrowRibbonGraph, GraphError> {
        let mut g = self.clone();
        for (vid, v) in &other.vertices {
            if g.vertices.insert(vid.clone(), v.clone()).is_some() {
                return Err(GraphError::DuplicateId(vid.0.clone()));
            }
        }
        for (eid, e) in &other.edges {
            if g.edges.insert(eid.clone(), e.clone()).is_some() {
                return Err(GraphError::DuplicateId(eid.0.clone()));
            }
        }
        Ok(g)
    }

    /// Rebuilds every edge's end slots by scanning the rotations. Used by
    /// operations that splice rotation vectors.
    pub(crate) fn reindex_ends(&mut self) {
        let mut slots: BTreeMap<(EdgeId, u8), EndSlot> = BTreeMap::new();
        for (vid, v) in &self.vertices {
            for (pos, entry) in v.rotation.iter().enumerate() {
                slots.insert(
                    (entry.edge.clone(), entry.end),
                    EndSlot {
                        vertex: vid.clone(),
                        pos,
                    },
                );
            }
        }
        for (eid, edge) in self.edges.iter_mut() {
            for end in 0..2u8 {
                if let Some(slot) = slots.get(&(eid.clone(), end)) {
                    edge.ends[end as usize] = slot.clone();
                }
            }
        }
    }
}

/// Reduces a cyclic word of arrow directions by repeatedly cancelling
/// neighboring same-direction pairs (including across the wrap-around) and
/// returns the number of surviving arrows: even words reduce to an
/// alternating word of even length, odd words to a single arrow.
pub fn reduce_arrow_word(word: &[ArrowDir]) -> usize {
    let mut stack: Vec<ArrowDir> = Vec::with_capacity(word.len());
    for &a in word {
        if stack.last() == Some(&a) {
            stack.pop();
        } else {
            stack.push(a);
        }
    }
    // Cancel across the cyclic seam.
    while stack.len() >= 2 && stack.first() == stack.last() {
        stack.pop();
        stack.remove(0);
    }
    stack.len()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
    fn count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}

/// Union-find carrying a Z/2 offset to the root; `union` returns false when
/// an odd cycle is closed.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }
    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }
    fn union(&mut self, a: usize, b: usize, flip: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == flip;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ flip;
        true
    }
}

#[cfg(test)]
pub(crate) mod tests;
