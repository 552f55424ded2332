//! Boundary tracing of spanning subgraphs.
//!
//! The boundary of the subgraph (V, F) decomposes into arcs: every free
//! vertex arc, the attaching segment of every edge end whose edge is absent
//! from F (deletion merges it into the neighboring free arcs, keeping its
//! arrows), and both free sides of every edge in F. The tracer walks these
//! arcs corner to corner; each closed walk is one boundary circle.

use super::{reverse_arrows, ArrowDir, ArrowRibbonGraph, EdgeId, VertexId};
use std::collections::BTreeSet;

/// A directed arc of the subgraph boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Piece {
    /// Free vertex arc following rotation entry `pos`.
    VFree { vertex: VertexId, pos: usize },
    /// Whole boundary circle of an isolated vertex.
    VLone { vertex: VertexId },
    /// Attaching segment at rotation entry `pos` (edge absent from F).
    Seg { vertex: VertexId, pos: usize },
    /// Free edge side of an edge in F.
    Side { edge: EdgeId, side: SideTag },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SideTag {
    L,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dir {
    Fwd,
    Bwd,
}

impl Dir {
    pub fn is_fwd(self) -> bool {
        matches!(self, Dir::Fwd)
    }
}

/// Corner role at an edge end: `P` is where the forward vertex boundary
/// enters the attaching segment, `Q` where it leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CornerRole {
    P,
    Q,
}

pub type Walk = Vec<(Piece, Dir)>;

/// Endpoint corners of a free side, as (end index, corner role), in the
/// side's own parametrization order (end0 first).
pub(crate) fn side_corners(twist: bool, side: SideTag) -> [(u8, CornerRole); 2] {
    match (side, twist) {
        (SideTag::R, false) => [(0, CornerRole::P), (1, CornerRole::Q)],
        (SideTag::R, true) => [(0, CornerRole::P), (1, CornerRole::P)],
        (SideTag::L, false) => [(0, CornerRole::Q), (1, CornerRole::P)],
        (SideTag::L, true) => [(0, CornerRole::Q), (1, CornerRole::Q)],
    }
}

/// The free side incident to a given corner, and the travel direction along
/// it when leaving that corner.
fn enter_ribbon(twist: bool, end: u8, corner: CornerRole) -> (SideTag, Dir) {
    for side in [SideTag::L, SideTag::R] {
        let [c0, c1] = side_corners(twist, side);
        if c0 == (end, corner) {
            return (side, Dir::Fwd);
        }
        if c1 == (end, corner) {
            return (side, Dir::Bwd);
        }
    }
    unreachable!("every corner touches exactly one free side")
}

fn rot_len(g: &ArrowRibbonGraph, v: &VertexId) -> usize {
    g.vertices[v].rotation.len()
}

/// Successor of a directed boundary arc.
fn step(
    g: &ArrowRibbonGraph,
    subset: &BTreeSet<EdgeId>,
    cur: &(Piece, Dir),
) -> (Piece, Dir) {
    match cur {
        (Piece::VLone { vertex }, d) => (Piece::VLone { vertex: vertex.clone() }, *d),
        (Piece::VFree { vertex, pos }, Dir::Fwd) => {
            let m = rot_len(g, vertex);
            let next = (pos + 1) % m;
            let entry = g.entry(vertex, next);
            if subset.contains(&entry.edge) {
                let twist = g.edges[&entry.edge].twist;
                let (side, dir) = enter_ribbon(twist, entry.end, CornerRole::P);
                (Piece::Side { edge: entry.edge.clone(), side }, dir)
            } else {
                (Piece::Seg { vertex: vertex.clone(), pos: next }, Dir::Fwd)
            }
        }
        (Piece::VFree { vertex, pos }, Dir::Bwd) => {
            let entry = g.entry(vertex, *pos);
            if subset.contains(&entry.edge) {
                let twist = g.edges[&entry.edge].twist;
                let (side, dir) = enter_ribbon(twist, entry.end, CornerRole::Q);
                (Piece::Side { edge: entry.edge.clone(), side }, dir)
            } else {
                (Piece::Seg { vertex: vertex.clone(), pos: *pos }, Dir::Bwd)
            }
        }
        (Piece::Seg { vertex, pos }, Dir::Fwd) => {
            (Piece::VFree { vertex: vertex.clone(), pos: *pos }, Dir::Fwd)
        }
        (Piece::Seg { vertex, pos }, Dir::Bwd) => {
            let m = rot_len(g, vertex);
            (Piece::VFree { vertex: vertex.clone(), pos: (pos + m - 1) % m }, Dir::Bwd)
        }
        (Piece::Side { edge, side }, dir) => {
            let e = &g.edges[edge];
            let [c0, c1] = side_corners(e.twist, *side);
            let (end, corner) = if dir.is_fwd() { c1 } else { c0 };
            let slot = &e.ends[end as usize];
            match corner {
                CornerRole::Q => {
                    (Piece::VFree { vertex: slot.vertex.clone(), pos: slot.pos }, Dir::Fwd)
                }
                CornerRole::P => {
                    let m = rot_len(g, &slot.vertex);
                    (
                        Piece::VFree {
                            vertex: slot.vertex.clone(),
                            pos: (slot.pos + m - 1) % m,
                        },
                        Dir::Bwd,
                    )
                }
            }
        }
    }
}

/// All boundary walks of the spanning subgraph (V, F), each a closed cyclic
/// sequence of directed arcs. Walk discovery order and starting arcs are
/// deterministic.
pub fn trace_boundary(g: &ArrowRibbonGraph, subset: &BTreeSet<EdgeId>) -> Vec<Walk> {
    let mut starts: Vec<Piece> = Vec::new();
    for (vid, v) in &g.vertices {
        if v.rotation.is_empty() {
            starts.push(Piece::VLone { vertex: vid.clone() });
        } else {
            for pos in 0..v.rotation.len() {
                starts.push(Piece::VFree { vertex: vid.clone(), pos });
            }
        }
    }
    let mut visited: BTreeSet<Piece> = BTreeSet::new();
    let mut walks = Vec::new();
    for start in starts {
        if visited.contains(&start) {
            continue;
        }
        if let Piece::VLone { .. } = start {
            visited.insert(start.clone());
            walks.push(vec![(start, Dir::Fwd)]);
            continue;
        }
        let mut walk: Walk = Vec::new();
        let mut cur = (start.clone(), Dir::Fwd);
        loop {
            visited.insert(cur.0.clone());
            walk.push(cur.clone());
            cur = step(g, subset, &cur);
            if cur.0 == start {
                debug_assert!(cur.1 == Dir::Fwd, "boundary walk direction flipped");
                break;
            }
        }
        walks.push(walk);
    }
    walks
}

/// One boundary circle: its walk, its cyclic arrow word read along the walk
/// direction, and the surviving arrow count after cyclic cancellation.
#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    pub walk: Walk,
    pub arrow_word: Vec<ArrowDir>,
    /// Twice the half-integer reduction index, i.e. the number of arrows
    /// left after cancelling neighboring same-direction pairs.
    pub reduced_arrows: usize,
}

/// Boundary circles of a spanning subgraph together with its combinatorial
/// statistics.
#[derive(Debug, Clone)]
pub struct BoundaryReport {
    pub components: Vec<BoundaryComponent>,
    /// Connected components k(F) of the abstract subgraph.
    pub subgraph_components: usize,
    /// Rank r(F) = |V| - k(F).
    pub rank: usize,
    /// Nullity n(F) = |F| - r(F).
    pub nullity: usize,
    pub orientable: bool,
    /// Euler genus k(F) - bc(F) + n(F): twice the genus for orientable F,
    /// the crosscap count otherwise.
    pub euler_genus: i64,
}

impl BoundaryReport {
    pub fn boundary_circles(&self) -> usize {
        self.components.len()
    }
}

/// Arrows carried by a directed arc, read along the travel direction.
pub(crate) fn piece_arrows(g: &ArrowRibbonGraph, piece: &Piece, dir: Dir) -> Vec<ArrowDir> {
    let stored: &[ArrowDir] = match piece {
        Piece::VFree { vertex, pos } => &g.entry(vertex, *pos).free_arrows,
        Piece::VLone { vertex } => &g.vertices[vertex].lone_arrows,
        Piece::Seg { vertex, pos } => &g.entry(vertex, *pos).seg_arrows,
        Piece::Side { edge, side } => match side {
            SideTag::L => &g.edges[edge].side_l,
            SideTag::R => &g.edges[edge].side_r,
        },
    };
    match dir {
        Dir::Fwd => stored.to_vec(),
        Dir::Bwd => reverse_arrows(stored),
    }
}

impl ArrowRibbonGraph {
    /// Traces the boundary of the spanning subgraph (V, F) and collects the
    /// full report: boundary circles with their cyclic arrow words and the
    /// component/rank/nullity/genus statistics.
    pub fn boundary_report(&self, subset: &BTreeSet<EdgeId>) -> BoundaryReport {
        let walks = trace_boundary(self, subset);
        let components: Vec<BoundaryComponent> = walks
            .into_iter()
            .map(|walk| {
                let mut arrow_word = Vec::new();
                for (piece, dir) in &walk {
                    arrow_word.extend(piece_arrows(self, piece, *dir));
                }
                let reduced_arrows = super::reduce_arrow_word(&arrow_word);
                BoundaryComponent {
                    walk,
                    arrow_word,
                    reduced_arrows,
                }
            })
            .collect();
        let k = self.subgraph_components(subset);
        let rank = self.num_vertices() - k;
        let nullity = subset.len() - rank;
        let bc = components.len() as i64;
        BoundaryReport {
            euler_genus: k as i64 - bc + nullity as i64,
            components,
            subgraph_components: k,
            rank,
            nullity,
            orientable: self.subgraph_orientable(subset),
        }
    }

    /// (k, bc, r, n, euler_genus, orientable) of the spanning subgraph.
    pub fn state_stats(
        &self,
        subset: &BTreeSet<EdgeId>,
    ) -> (usize, usize, usize, usize, i64, bool) {
        let r = self.boundary_report(subset);
        (
            r.subgraph_components,
            r.boundary_circles(),
            r.rank,
            r.nullity,
            r.euler_genus,
            r.orientable,
        )
    }
}
