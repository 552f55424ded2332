//! From virtual link diagrams to signed arrow ribbon graphs.
//!
//! For a diagram L and a state s, `state_graph` glues a vertex disc onto
//! every state circle of s and an edge ribbon across every crossing. The
//! circle traversal direction orients each disc, so the rotation is the
//! order of smoothing-site visits along the circle. The twist bit compares
//! the two visits of a crossing through the band-transverse port pairing
//! (the opposite smoothing's matching). Edges are signed + at A-splittings
//! and - at B-splittings.
//!
//! Arrows: a disoriented smoothing leaves its two emitted arrows on the
//! attaching arcs (the smoothing arcs themselves); an oriented smoothing
//! carries the arrows of the opposite smoothing on the free edge sides, so
//! that flipping the crossing inside a spanning subgraph reads exactly the
//! arrows the flipped smoothing would emit.

use crate::duality::{canonical_form, partial_dual, CanonOptions};
use crate::graphpoly::{arrow_dichromatic, signed_bollobas_riordan};
use crate::polyring::{LaurentPoly, Monomial, Var};
use crate::ribbon::{
    ArrowDir, ArrowRibbonGraph, Edge, EdgeId, EndSlot, GraphError, RotEntry, Sign, Vertex,
    VertexId,
};
use crate::vlink::{
    disoriented_arrow_tail, splitting_is_oriented, Port, SplitChoice, SplitState,
    VirtualLinkDiagram,
};
use std::collections::{BTreeMap, BTreeSet};

/// Port pairing across the edge ribbon: the matching of the opposite
/// smoothing.
fn transverse(port: Port, oriented: bool) -> Port {
    if oriented {
        // Opposite matching is disoriented: like ports pair up.
        Port {
            role: port.role.other(),
            incoming: port.incoming,
        }
    } else {
        Port {
            role: port.role.other(),
            incoming: !port.incoming,
        }
    }
}

/// Arrow on the disoriented smoothing arc through `from`, read along the
/// parametrization `from -> transverse(from)`.
fn opposite_arc_arrow(sign: Sign, from: Port) -> ArrowDir {
    if from.role == disoriented_arrow_tail(sign) {
        ArrowDir::With
    } else {
        ArrowDir::Against
    }
}

/// Builds the signed arrow ribbon graph of a state: one vertex per state
/// circle, one edge per classical crossing.
pub fn state_graph(l: &VirtualLinkDiagram, s: &SplitState) -> ArrowRibbonGraph {
    let circles = l.smooth(s);
    struct EndInfo {
        slot: EndSlot,
        entered: Port,
        exited: Port,
    }
    let mut ends: BTreeMap<u32, Vec<EndInfo>> = BTreeMap::new();
    let mut vertices: BTreeMap<VertexId, Vertex> = BTreeMap::new();
    for (ci, circle) in circles.circles.iter().enumerate() {
        let vid = VertexId(format!("v{ci}"));
        let mut rotation = Vec::new();
        for (pos, visit) in circle.visits.iter().enumerate() {
            let infos = ends.entry(visit.crossing).or_default();
            let end = infos.len() as u8;
            infos.push(EndInfo {
                slot: EndSlot {
                    vertex: vid.clone(),
                    pos,
                },
                entered: visit.entered,
                exited: visit.exited,
            });
            rotation.push(RotEntry {
                edge: EdgeId(format!("c{}", visit.crossing)),
                end,
                seg_arrows: visit.arrow.into_iter().collect(),
                free_arrows: Vec::new(),
            });
        }
        vertices.insert(
            vid,
            Vertex {
                rotation,
                lone_arrows: Vec::new(),
            },
        );
    }
    let mut edges: BTreeMap<EdgeId, Edge> = BTreeMap::new();
    let crossings = l.crossings();
    for (crossing, sign) in crossings {
        let choice = s.choice[&crossing];
        let oriented = splitting_is_oriented(sign, choice);
        let infos = &ends[&crossing];
        debug_assert_eq!(infos.len(), 2);
        // Twist: the second arc enters at the port matched across the band
        // with the first arc's entry.
        let twist = infos[1].entered == transverse(infos[0].entered, oriented);
        let (side_l, side_r) = if oriented {
            // The opposite smoothing's arcs run along the free sides. Side R
            // starts at the first arc's entry corner, side L at its exit.
            (
                vec![opposite_arc_arrow(sign, infos[0].exited)],
                vec![opposite_arc_arrow(sign, infos[0].entered)],
            )
        } else {
            (Vec::new(), Vec::new())
        };
        edges.insert(
            EdgeId(format!("c{crossing}")),
            Edge {
                ends: [infos[0].slot.clone(), infos[1].slot.clone()],
                twist,
                side_l,
                side_r,
                sign: Some(match choice {
                    SplitChoice::A => Sign::Plus,
                    SplitChoice::B => Sign::Minus,
                }),
            },
        );
    }
    let g = ArrowRibbonGraph { vertices, edges };
    debug_assert!(g.validate().is_ok());
    g
}

/// The edge set where two states disagree.
pub fn state_difference(s: &SplitState, s2: &SplitState) -> BTreeSet<EdgeId> {
    s.choice
        .iter()
        .filter(|(c, ch)| s2.choice[c] != **ch)
        .map(|(c, _)| EdgeId(format!("c{c}")))
        .collect()
}

/// Checks that the state graphs of two states are partial duals with
/// respect to their disagreement set. Signs are state bookkeeping and are
/// stripped before comparing; everything else (including arrows) must agree
/// up to re-charting.
pub fn verify_state_duality(
    l: &VirtualLinkDiagram,
    s: &SplitState,
    s2: &SplitState,
) -> Result<bool, GraphError> {
    let opts = CanonOptions {
        max_edges: l.num_crossings().max(8),
        ..CanonOptions::default()
    };
    let g = state_graph(l, s);
    let dual = partial_dual(&g, &state_difference(s, s2))?;
    let direct = state_graph(l, s2);
    Ok(canonical_form(&dual.unsigned(), &opts)? == canonical_form(&direct.unsigned(), &opts)?)
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
}

/// Verifies the bracket transfer identity for one base state: the arrow
/// bracket of L equals `A^(e+) B^(e-) / d` times the arrow dichromatic
/// polynomial of the state graph at `a = 1, c = d` with edge weights `B/A`
/// on positive and `A/B` on negative edges.
pub fn thistlethwaite_verify(l: &VirtualLinkDiagram, s: &SplitState) -> IdentityReport {
    let lhs = l.arrow_bracket();
    let g = state_graph(l, s);
    let poly = arrow_dichromatic(&g);
    let mut sigma: BTreeMap<Var, LaurentPoly> = BTreeMap::new();
    sigma.insert(Var::SmallA, LaurentPoly::one());
    sigma.insert(Var::SmallC, LaurentPoly::var(Var::SmallD));
    let b_over_a = Monomial::var(Var::CapB).mul(&Monomial::var_pow(Var::CapA, -4));
    let mut e_plus = 0i64;
    let mut e_minus = 0i64;
    for (eid, edge) in &g.edges {
        let image = match edge.sign.expect("state graphs are signed") {
            Sign::Plus => {
                e_plus += 1;
                b_over_a.clone()
            }
            Sign::Minus => {
                e_minus += 1;
                b_over_a.inverse()
            }
        };
        sigma.insert(
            Var::b(eid.0.clone()),
            LaurentPoly::from_monomial(image, 1),
        );
    }
    let prefactor = Monomial::var_pow(Var::CapA, 4 * e_plus)
        .mul(&Monomial::var_pow(Var::CapB, 4 * e_minus))
        .mul(&Monomial::var_pow(Var::SmallD, -4));
    let rhs = poly
        .substitute(&sigma)
        .expect("unit monomial weights")
        .mul_monomial(&prefactor, &num_bigint::BigInt::from(1));
    IdentityReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    }
}

/// The all-A specialization: the arrow bracket as a sum over spanning
/// subgraphs of the all-A state graph, `A^e(E\F) B^e(F) d^(bc(F)-1) prod K`.
pub fn specialization_all_a(l: &VirtualLinkDiagram) -> IdentityReport {
    let lhs = l.arrow_bracket();
    let g = state_graph(l, &l.uniform_state(SplitChoice::A));
    let edges = g.edge_ids();
    let mut rhs = LaurentPoly::zero();
    for mask in 0..(1usize << edges.len()) {
        let subset: BTreeSet<EdgeId> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect();
        let report = g.boundary_report(&subset);
        let mut m = Monomial::var_pow(Var::CapA, 4 * (edges.len() - subset.len()) as i64)
            .mul(&Monomial::var_pow(Var::CapB, 4 * subset.len() as i64))
            .mul(&Monomial::var_pow(
                Var::SmallD,
                4 * (report.boundary_circles() as i64 - 1),
            ));
        for comp in &report.components {
            if comp.reduced_arrows > 0 {
                m = m.mul(&Monomial::var(Var::k_doubled(comp.reduced_arrows as u64)));
            }
        }
        rhs.add_term(m, 1);
    }
    IdentityReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    }
}

/// The Seifert-state specialization through the signed Bollobás-Riordan
/// polynomial: `<L>_A = A^n(G) B^r(G) d^(k(G)-1) sBR_G(Ad/B, Bd/A, 1/d)`.
pub fn specialization_seifert(l: &VirtualLinkDiagram) -> Result<IdentityReport, GraphError> {
    let lhs = l.arrow_bracket();
    let g = state_graph(l, &l.seifert_state());
    let sbr = signed_bollobas_riordan(&g)?;
    let all = g.all_edges();
    let k = g.subgraph_components(&all);
    let r = g.num_vertices() - k;
    let n = all.len() - r;
    let mut sigma: BTreeMap<Var, LaurentPoly> = BTreeMap::new();
    let ad_over_b = Monomial::var(Var::CapA)
        .mul(&Monomial::var(Var::SmallD))
        .mul(&Monomial::var_pow(Var::CapB, -4));
    let bd_over_a = Monomial::var(Var::CapB)
        .mul(&Monomial::var(Var::SmallD))
        .mul(&Monomial::var_pow(Var::CapA, -4));
    sigma.insert(Var::CapX, LaurentPoly::from_monomial(ad_over_b, 1));
    sigma.insert(Var::CapY, LaurentPoly::from_monomial(bd_over_a, 1));
    sigma.insert(Var::CapZ, LaurentPoly::var_pow(Var::SmallD, -4));
    let prefactor = Monomial::var_pow(Var::CapA, 4 * n as i64)
        .mul(&Monomial::var_pow(Var::CapB, 4 * r as i64))
        .mul(&Monomial::var_pow(Var::SmallD, 4 * (k as i64 - 1)));
    let rhs = sbr
        .substitute(&sigma)
        .expect("unit monomial images")
        .mul_monomial(&prefactor, &num_bigint::BigInt::from(1));
    Ok(IdentityReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}
