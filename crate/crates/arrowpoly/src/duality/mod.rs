//! Deletion, partial duality, contraction, and the natural dual.
//!
//! Partial duality is implemented once, for an arbitrary edge subset, by
//! re-gluing vertex discs along the traced boundary of the spanning
//! subgraph (V, D): each boundary walk becomes a vertex of the dual, edges
//! in D exchange attaching arcs with free sides (arrows riding along), and
//! edges outside D reattach to the walks through their old segments. The
//! single-edge local pictures are recovered as unit tests, not used as the
//! algorithm, since local rules do not compose when ends collide on one
//! vertex.

mod canon;

pub use canon::{canonical_form, graphs_equivalent, CanonOptions, CanonicalForm};

use crate::ribbon::{
    piece_arrows, reverse_arrows, side_corners, trace_boundary, ArrowDir, ArrowRibbonGraph,
    CornerRole, Dir, Edge, EdgeId, EndSlot, GraphError, Piece, RotEntry, SideTag, Vertex,
    VertexId,
};
use std::collections::{BTreeMap, BTreeSet};

/// Removes `e`. Arrows on its attaching segments stay behind on the merged
/// free vertex arcs; arrows on its free sides vanish with the ribbon.
pub fn delete(g: &ArrowRibbonGraph, e: &EdgeId) -> Result<ArrowRibbonGraph, GraphError> {
    g.edge(e)?;
    let mut out = g.clone();
    out.edges.remove(e);
    for v in out.vertices.values_mut() {
        if v.rotation.iter().all(|entry| entry.edge != *e) {
            continue;
        }
        // Flatten the boundary into (segment?, arrows) pieces, demote the
        // deleted edge's segments to free pieces, and regroup.
        let mut pieces: Vec<(Option<RotEntry>, Vec<ArrowDir>)> = Vec::new();
        for entry in &v.rotation {
            if entry.edge == *e {
                pieces.push((None, entry.seg_arrows.clone()));
            } else {
                pieces.push((Some(entry.clone()), Vec::new()));
            }
            pieces.push((None, entry.free_arrows.clone()));
        }
        let seg_positions: Vec<usize> = pieces
            .iter()
            .enumerate()
            .filter(|(_, (s, _))| s.is_some())
            .map(|(i, _)| i)
            .collect();
        if seg_positions.is_empty() {
            let lone: Vec<ArrowDir> = pieces.into_iter().flat_map(|(_, a)| a).collect();
            v.rotation = Vec::new();
            v.lone_arrows = lone;
            continue;
        }
        let n = pieces.len();
        let mut rotation = Vec::new();
        for (si, &p) in seg_positions.iter().enumerate() {
            let mut entry = pieces[p].0.clone().unwrap();
            let stop = seg_positions[(si + 1) % seg_positions.len()];
            let mut free = Vec::new();
            let mut q = (p + 1) % n;
            while q != stop {
                free.extend(pieces[q].1.iter().copied());
                q = (q + 1) % n;
            }
            entry.free_arrows = free;
            rotation.push(entry);
        }
        v.rotation = rotation;
        v.lone_arrows = Vec::new();
    }
    out.reindex_ends();
    out.validate()?;
    Ok(out)
}

/// Corner of an edge rectangle in the coordinates of the original graph.
type Corner = (u8, CornerRole);

fn side_corner(twist: bool, side: SideTag, which: usize) -> Corner {
    side_corners(twist, side)[which]
}

/// Corner of attaching segment `end` lying on a given free side.
fn seg_corner_on_side(twist: bool, end: u8, side: SideTag) -> Corner {
    for which in 0..2 {
        let c = side_corner(twist, side, which);
        if c.0 == end {
            return c;
        }
    }
    unreachable!("each free side touches both ends")
}

/// The partial dual with respect to `dual_set`. Edge ids and signs are
/// preserved; vertex ids are freshly assigned in walk discovery order.
pub fn partial_dual(
    g: &ArrowRibbonGraph,
    dual_set: &BTreeSet<EdgeId>,
) -> Result<ArrowRibbonGraph, GraphError> {
    for e in dual_set {
        g.edge(e)?;
    }
    let walks = trace_boundary(g, dual_set);

    // New vertices from walks; remember where each segment piece lands.
    struct SegLanding {
        vertex: VertexId,
        pos: usize,
        dir: Dir,
    }
    let mut seg_landing: BTreeMap<(EdgeId, u8), SegLanding> = BTreeMap::new();
    let mut side_landing: BTreeMap<(EdgeId, SideTag), SegLanding> = BTreeMap::new();
    let mut vertices: BTreeMap<VertexId, Vertex> = BTreeMap::new();

    for (wi, walk) in walks.iter().enumerate() {
        let vid = VertexId(format!("v{wi}"));
        let seg_steps: Vec<usize> = walk
            .iter()
            .enumerate()
            .filter(|(_, (piece, _))| {
                matches!(piece, Piece::Seg { .. } | Piece::Side { .. })
            })
            .map(|(i, _)| i)
            .collect();
        if seg_steps.is_empty() {
            let mut lone = Vec::new();
            for (piece, dir) in walk {
                lone.extend(piece_arrows(g, piece, *dir));
            }
            vertices.insert(vid, Vertex { rotation: Vec::new(), lone_arrows: lone });
            continue;
        }
        let n = walk.len();
        let mut rotation = Vec::new();
        for (new_pos, &wpos) in seg_steps.iter().enumerate() {
            let (piece, dir) = &walk[wpos];
            let seg_arrows = piece_arrows(g, piece, *dir);
            // Free arrows: everything until the next segment step.
            let stop = seg_steps[(new_pos + 1) % seg_steps.len()];
            let mut free = Vec::new();
            let mut q = (wpos + 1) % n;
            while q != stop {
                let (p, d) = &walk[q];
                free.extend(piece_arrows(g, p, *d));
                q = (q + 1) % n;
            }
            let landing = SegLanding { vertex: vid.clone(), pos: new_pos, dir: *dir };
            let (edge, end) = match piece {
                Piece::Seg { vertex, pos } => {
                    let entry = g.entry(vertex, *pos);
                    seg_landing.insert((entry.edge.clone(), entry.end), landing);
                    (entry.edge.clone(), entry.end)
                }
                Piece::Side { edge, side } => {
                    side_landing.insert((edge.clone(), *side), landing);
                    // end index assigned below: L-side becomes end 0.
                    (edge.clone(), if *side == SideTag::L { 0 } else { 1 })
                }
                _ => unreachable!(),
            };
            rotation.push(RotEntry {
                edge,
                end,
                seg_arrows,
                free_arrows: free,
            });
        }
        vertices.insert(vid, Vertex { rotation, lone_arrows: Vec::new() });
    }

    // Rebuild edges.
    let mut edges: BTreeMap<EdgeId, Edge> = BTreeMap::new();
    for (eid, old) in &g.edges {
        if dual_set.contains(eid) {
            let land0 = &side_landing[&(eid.clone(), SideTag::L)];
            let land1 = &side_landing[&(eid.clone(), SideTag::R)];
            // Walk-start/end corners of the two side pieces.
            let corner_of = |side: SideTag, land: &SegLanding, start: bool| -> Corner {
                let which = if (land.dir == Dir::Fwd) == start { 0 } else { 1 };
                side_corner(old.twist, side, which)
            };
            let new_p0 = corner_of(SideTag::L, land0, true);
            let new_q0 = corner_of(SideTag::L, land0, false);
            let new_q1 = corner_of(SideTag::R, land1, false);
            // New free sides are the old attaching segments. The one touching
            // the walk-start corner of old side L becomes the new side R.
            let seg_side_arrows = |seg_end: u8| -> Vec<ArrowDir> {
                let slot = &old.ends[seg_end as usize];
                let stored = &g.entry(&slot.vertex, slot.pos).seg_arrows;
                // New parametrization runs from the old-L corner to the
                // old-R corner of this segment.
                let l_corner = seg_corner_on_side(old.twist, seg_end, SideTag::L);
                if l_corner.1 == CornerRole::P {
                    stored.clone()
                } else {
                    reverse_arrows(stored)
                }
            };
            let r_end = new_p0.0;
            let l_end = new_q0.0;
            debug_assert_ne!(r_end, l_end);
            let side_r = seg_side_arrows(r_end);
            let side_l = seg_side_arrows(l_end);
            // Twist: untwisted iff the new side R reaches the walk-end
            // corner of the old R piece at end1'.
            let r_far_corner = seg_corner_on_side(old.twist, r_end, SideTag::R);
            let twist = r_far_corner != new_q1;
            edges.insert(
                eid.clone(),
                Edge {
                    ends: [
                        EndSlot { vertex: land0.vertex.clone(), pos: land0.pos },
                        EndSlot { vertex: land1.vertex.clone(), pos: land1.pos },
                    ],
                    twist,
                    side_l,
                    side_r,
                    sign: old.sign,
                },
            );
        } else {
            let land0 = &seg_landing[&(eid.clone(), 0)];
            let land1 = &seg_landing[&(eid.clone(), 1)];
            let new_p0 = if land0.dir == Dir::Fwd {
                CornerRole::P
            } else {
                CornerRole::Q
            };
            let new_q1 = if land1.dir == Dir::Fwd {
                CornerRole::Q
            } else {
                CornerRole::P
            };
            // New side R is the old side leaving end0 at the new P corner.
            let (r_tag, side_r) = if new_p0 == CornerRole::P {
                (SideTag::R, old.side_r.clone())
            } else {
                (SideTag::L, old.side_l.clone())
            };
            let side_l = if r_tag == SideTag::R {
                old.side_l.clone()
            } else {
                old.side_r.clone()
            };
            let r_far_corner = side_corner(old.twist, r_tag, 1);
            let twist = r_far_corner.1 != new_q1;
            edges.insert(
                eid.clone(),
                Edge {
                    ends: [
                        EndSlot { vertex: land0.vertex.clone(), pos: land0.pos },
                        EndSlot { vertex: land1.vertex.clone(), pos: land1.pos },
                    ],
                    twist,
                    side_l,
                    side_r,
                    sign: old.sign,
                },
            );
        }
    }

    let out = ArrowRibbonGraph { vertices, edges };
    out.validate()?;
    Ok(out)
}

/// Contraction `G/e`, defined as deletion of `e` in the partial dual with
/// respect to `e`.
pub fn contract(g: &ArrowRibbonGraph, e: &EdgeId) -> Result<ArrowRibbonGraph, GraphError> {
    let mut d = BTreeSet::new();
    d.insert(e.clone());
    delete(&partial_dual(g, &d)?, e)
}

/// The natural (Euler-Poincaré) dual: partial duality over all edges.
pub fn natural_dual(g: &ArrowRibbonGraph) -> Result<ArrowRibbonGraph, GraphError> {
    partial_dual(g, &g.all_edges())
}

/// True when `e` is an untwisted loop whose two ends are cyclically adjacent
/// at their vertex, with no other end between them on one side.
pub fn is_trivial_orientable_loop(g: &ArrowRibbonGraph, e: &EdgeId) -> bool {
    let edge = &g.edges[e];
    if edge.twist || edge.ends[0].vertex != edge.ends[1].vertex {
        return false;
    }
    let m = g.vertices[&edge.ends[0].vertex].rotation.len();
    let (a, b) = (edge.ends[0].pos, edge.ends[1].pos);
    (a + 1) % m == b || (b + 1) % m == a
}

/// True when `e` is a loop that preserves orientation (untwisted in any
/// chart, i.e. its own cycle has even twist).
pub fn is_orientable_loop(g: &ArrowRibbonGraph, e: &EdgeId) -> bool {
    g.is_loop(e) && !g.edges[e].twist
}
