//! Seeded random generators for graphs and diagrams, used by the property
//! suites and the `verify-properties` command. Everything is driven by a
//! caller-supplied ChaCha RNG so runs are reproducible byte for byte.

use crate::ribbon::{ArrowDir, ArrowRibbonGraph, EdgeId, RotEntry, RotationSpec, Sign, VertexId};
use crate::vlink::moves::{find_r1_removals, find_r2_removals, find_r3_sites, Move};
use crate::vlink::{Passage, Role, VirtualLinkDiagram};
use rand::Rng;

#[derive(Debug, Clone, Copy)]
pub struct GraphConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Expected number of arrows per arc is roughly `arrow_density`.
    pub arrow_density: f64,
    pub signed: bool,
}

impl Default for GraphConfig {
    fn default() -> Self {
        GraphConfig {
            max_vertices: 3,
            max_edges: 6,
            arrow_density: 0.4,
            signed: false,
        }
    }
}

fn random_arrows(rng: &mut impl Rng, density: f64) -> Vec<ArrowDir> {
    let mut out = Vec::new();
    while rng.gen_bool(density.min(0.9)) {
        out.push(if rng.gen() {
            ArrowDir::With
        } else {
            ArrowDir::Against
        });
        if out.len() >= 3 {
            break;
        }
    }
    out
}

/// A random valid arrow ribbon graph.
pub fn random_graph(rng: &mut impl Rng, cfg: &GraphConfig) -> ArrowRibbonGraph {
    let nv = rng.gen_range(1..=cfg.max_vertices.max(1));
    let ne = rng.gen_range(0..=cfg.max_edges);
    // Rotation skeleton: insert each end at a random slot of a random vertex.
    let mut rotations: Vec<Vec<(EdgeId, u8)>> = vec![Vec::new(); nv];
    for e in 0..ne {
        for end in 0..2u8 {
            let v = rng.gen_range(0..nv);
            let pos = rng.gen_range(0..=rotations[v].len());
            rotations[v].insert(pos, (EdgeId(format!("e{e}")), end));
        }
    }
    let mut spec = RotationSpec::default();
    for (vi, rot) in rotations.into_iter().enumerate() {
        let entries: Vec<RotEntry> = rot
            .into_iter()
            .map(|(edge, end)| RotEntry {
                edge,
                end,
                seg_arrows: random_arrows(rng, cfg.arrow_density),
                free_arrows: random_arrows(rng, cfg.arrow_density),
            })
            .collect();
        let lone = if entries.is_empty() {
            random_arrows(rng, cfg.arrow_density)
        } else {
            Vec::new()
        };
        spec.vertices.push((VertexId(format!("v{vi}")), entries, lone));
    }
    for e in 0..ne {
        let sign = cfg.signed.then(|| {
            if rng.gen() {
                Sign::Plus
            } else {
                Sign::Minus
            }
        });
        spec.edges.insert(
            EdgeId(format!("e{e}")),
            (
                rng.gen(),
                random_arrows(rng, cfg.arrow_density),
                random_arrows(rng, cfg.arrow_density),
                sign,
            ),
        );
    }
    ArrowRibbonGraph::from_rotation_system(spec).expect("generator output is always valid")
}

/// A random valid signed Gauss code with `crossings` classical crossings
/// spread over one or two components.
pub fn random_diagram(rng: &mut impl Rng, crossings: usize) -> VirtualLinkDiagram {
    let mut passages: Vec<Passage> = Vec::new();
    for c in 0..crossings {
        let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
        passages.push(Passage {
            crossing: c as u32,
            role: Role::Over,
            sign,
        });
        passages.push(Passage {
            crossing: c as u32,
            role: Role::Under,
            sign,
        });
    }
    // Shuffle by random swaps (Fisher-Yates).
    for i in (1..passages.len()).rev() {
        let j = rng.gen_range(0..=i);
        passages.swap(i, j);
    }
    let comps = if passages.len() >= 2 && rng.gen_bool(0.3) {
        let cut = rng.gen_range(1..passages.len());
        vec![passages[..cut].to_vec(), passages[cut..].to_vec()]
    } else {
        vec![passages]
    };
    VirtualLinkDiagram::new(comps).expect("generator output is always valid")
}

/// Picks an applicable Reidemeister rewrite at random. Insertions are
/// suppressed once the diagram reaches `max_crossings` so brackets stay
/// cheap to evaluate along a rewrite walk.
pub fn random_move(
    rng: &mut impl Rng,
    d: &VirtualLinkDiagram,
    max_crossings: usize,
) -> Move {
    let sign = |rng: &mut dyn rand::RngCore| {
        if rng.gen() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    loop {
        match rng.gen_range(0..12) {
            0 | 1 if d.num_crossings() < max_crossings => {
                let component = rng.gen_range(0..d.components.len());
                let pos = rng.gen_range(0..=d.components[component].len());
                return Move::R1Insert {
                    component,
                    pos,
                    sign: sign(rng),
                    over_first: rng.gen(),
                };
            }
            2 | 3 | 4 => {
                let sites = find_r1_removals(d);
                if !sites.is_empty() {
                    let (component, pos) = sites[rng.gen_range(0..sites.len())];
                    return Move::R1Remove { component, pos };
                }
            }
            5 | 6 if d.num_crossings() + 1 < max_crossings => {
                let comp_over = rng.gen_range(0..d.components.len());
                let comp_under = rng.gen_range(0..d.components.len());
                let pos_over = rng.gen_range(0..=d.components[comp_over].len());
                let pos_under = rng.gen_range(0..=d.components[comp_under].len());
                if comp_over == comp_under && pos_over == pos_under {
                    continue;
                }
                return Move::R2Insert {
                    comp_over,
                    pos_over,
                    comp_under,
                    pos_under,
                    sign: sign(rng),
                    parallel: rng.gen(),
                };
            }
            7 | 8 | 9 => {
                let sites = find_r2_removals(d);
                if !sites.is_empty() {
                    let (a, b) = sites[rng.gen_range(0..sites.len())];
                    return Move::R2Remove { a, b };
                }
            }
            10 => {
                let sites = find_r3_sites(d);
                if !sites.is_empty() {
                    return Move::R3(sites[rng.gen_range(0..sites.len())]);
                }
            }
            _ => return Move::Virtual,
        }
    }
}
