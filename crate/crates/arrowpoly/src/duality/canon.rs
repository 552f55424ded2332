//! Canonical forms for small arrow ribbon graphs.
//!
//! Two encodings describe the same arrow ribbon graph when they differ by
//! relabeling vertices and edges, rotating a vertex's cyclic sequence,
//! swapping an edge's two ends, or reversing a vertex's reference
//! orientation (a pure re-charting: the rotation reverses, arrows on its
//! arcs flip, and incident non-loop twists toggle). The canonical form is
//! the minimum, over all rooted traversals, of a deterministic token stream
//! that fully reconstructs the graph, so equality of forms is equivalence
//! under those moves. Reflection moves can be excluded through
//! [`CanonOptions`], which restricts the quotient to orientation-preserving
//! re-chartings.

use crate::ribbon::{
    reverse_arrows, ArrowDir, ArrowRibbonGraph, Dir, EdgeId, GraphError, Sign, VertexId,
};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, Copy)]
pub struct CanonOptions {
    /// Quotient by per-vertex orientation reversal (include reflection
    /// symmetry). Default true.
    pub include_reflection: bool,
    /// Guard against accidental use on large graphs.
    pub max_edges: usize,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions {
            include_reflection: true,
            max_edges: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<i64>);

impl CanonicalForm {
    pub fn tokens(&self) -> &[i64] {
        &self.0
    }
}

fn arrow_tokens(out: &mut Vec<i64>, arrows: &[ArrowDir]) {
    out.push(arrows.len() as i64);
    for a in arrows {
        out.push(match a {
            ArrowDir::With => 0,
            ArrowDir::Against => 1,
        });
    }
}

fn lone_word_min(word: &[ArrowDir], include_reflection: bool) -> Vec<ArrowDir> {
    let mut best: Option<Vec<ArrowDir>> = None;
    let mut consider = |w: Vec<ArrowDir>| {
        if best.as_ref().map(|b| w < *b).unwrap_or(true) {
            best = Some(w);
        }
    };
    let n = word.len().max(1);
    for r in 0..n {
        let mut w = word.to_vec();
        w.rotate_left(r % n.max(1));
        if include_reflection {
            consider(reverse_arrows(&w));
        }
        consider(w);
    }
    best.unwrap_or_default()
}

struct Chart {
    new_id: usize,
    base: usize,
    dir: Dir,
}

/// Token stream of one connected component from a fixed root.
fn label_from_root(
    g: &ArrowRibbonGraph,
    comp_vertices: &[VertexId],
    root: (&VertexId, usize, Dir),
    include_reflection: bool,
) -> Vec<i64> {
    let mut charts: BTreeMap<VertexId, Chart> = BTreeMap::new();
    let mut vertex_order: Vec<VertexId> = Vec::new();
    let mut edge_ids: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut edge_order: Vec<EdgeId> = Vec::new();
    // Which physical end became canonical end 0.
    let mut canon_end0: BTreeMap<EdgeId, u8> = BTreeMap::new();

    charts.insert(
        root.0.clone(),
        Chart {
            new_id: 0,
            base: root.1,
            dir: root.2,
        },
    );
    vertex_order.push(root.0.clone());

    let mut tokens: Vec<i64> = vec![comp_vertices.len() as i64];

    let mut queue: VecDeque<VertexId> = VecDeque::new();
    queue.push_back(root.0.clone());
    let mut processed: BTreeSet<VertexId> = BTreeSet::new();

    while let Some(vid) = queue.pop_front() {
        if !processed.insert(vid.clone()) {
            continue;
        }
        let v = &g.vertices[&vid];
        let m = v.rotation.len();
        let (base, dir) = {
            let c = &charts[&vid];
            (c.base, c.dir)
        };
        tokens.push(m as i64);
        for step in 0..m {
            let p = match dir {
                Dir::Fwd => (base + step) % m,
                Dir::Bwd => (base + m - step % m) % m,
            };
            let entry = &v.rotation[p];
            // Chart view of the attaching segment and following free arc.
            let seg = match dir {
                Dir::Fwd => entry.seg_arrows.clone(),
                Dir::Bwd => reverse_arrows(&entry.seg_arrows),
            };
            let free = match dir {
                Dir::Fwd => entry.free_arrows.clone(),
                Dir::Bwd => reverse_arrows(&v.rotation[(p + m - 1) % m].free_arrows),
            };
            let next_edge_id = edge_ids.len();
            let eid = *edge_ids.entry(entry.edge.clone()).or_insert_with(|| {
                edge_order.push(entry.edge.clone());
                canon_end0.insert(entry.edge.clone(), entry.end);
                next_edge_id
            });
            tokens.push(eid as i64);
            arrow_tokens(&mut tokens, &seg);
            arrow_tokens(&mut tokens, &free);
            // Discover the partner vertex.
            let edge = &g.edges[&entry.edge];
            let other = &edge.ends[(1 - entry.end) as usize];
            if !charts.contains_key(&other.vertex) {
                let this_bwd = dir == Dir::Bwd;
                let partner_dir = if include_reflection {
                    // Normalize the discovery edge to be untwisted.
                    if edge.twist ^ this_bwd {
                        Dir::Bwd
                    } else {
                        Dir::Fwd
                    }
                } else {
                    Dir::Fwd
                };
                charts.insert(
                    other.vertex.clone(),
                    Chart {
                        new_id: vertex_order.len(),
                        base: other.pos,
                        dir: partner_dir,
                    },
                );
                vertex_order.push(other.vertex.clone());
                queue.push_back(other.vertex.clone());
            }
        }
    }
    debug_assert_eq!(vertex_order.len(), comp_vertices.len());
    let _ = charts.values().map(|c| c.new_id).max();

    tokens.push(-1);
    tokens.push(edge_order.len() as i64);
    for eid in &edge_order {
        let edge = &g.edges[eid];
        let refl0 = charts[&edge.ends[0].vertex].dir == Dir::Bwd;
        let refl1 = charts[&edge.ends[1].vertex].dir == Dir::Bwd;
        let mut twist = edge.twist;
        let mut side_r = edge.side_r.clone();
        let mut side_l = edge.side_l.clone();
        // Reflections at the two endpoints.
        if refl0 {
            std::mem::swap(&mut side_r, &mut side_l);
            twist = !twist;
        }
        if refl1 {
            twist = !twist;
        }
        // End swap if the second-seen end became canonical end 0.
        if canon_end0[eid] == 1 {
            if !twist {
                std::mem::swap(&mut side_r, &mut side_l);
            }
            side_r = reverse_arrows(&side_r);
            side_l = reverse_arrows(&side_l);
        }
        tokens.push(i64::from(twist));
        tokens.push(match edge.sign {
            None => 0,
            Some(Sign::Plus) => 1,
            Some(Sign::Minus) => 2,
        });
        arrow_tokens(&mut tokens, &side_r);
        arrow_tokens(&mut tokens, &side_l);
    }
    tokens
}

fn component_form(
    g: &ArrowRibbonGraph,
    comp_vertices: &[VertexId],
    opts: &CanonOptions,
) -> Vec<i64> {
    // An isolated vertex: canonicalize its cyclic lone word directly.
    if comp_vertices.len() == 1 && g.vertices[&comp_vertices[0]].rotation.is_empty() {
        let word = lone_word_min(
            &g.vertices[&comp_vertices[0]].lone_arrows,
            opts.include_reflection,
        );
        let mut tokens = vec![1i64, 0];
        arrow_tokens(&mut tokens, &word);
        return tokens;
    }
    let dirs: &[Dir] = if opts.include_reflection {
        &[Dir::Fwd, Dir::Bwd]
    } else {
        &[Dir::Fwd]
    };
    let mut best: Option<Vec<i64>> = None;
    for vid in comp_vertices {
        for pos in 0..g.vertices[vid].rotation.len() {
            for &dir in dirs {
                let t = label_from_root(g, comp_vertices, (vid, pos, dir), opts.include_reflection);
                if best.as_ref().map(|b| t < *b).unwrap_or(true) {
                    best = Some(t);
                }
            }
        }
    }
    best.expect("component with edges has at least one rotation slot")
}

/// Deterministic encoding, minimal over relabelings, rotation base points,
/// end swaps, and (optionally) vertex reflections.
pub fn canonical_form(
    g: &ArrowRibbonGraph,
    opts: &CanonOptions,
) -> Result<CanonicalForm, GraphError> {
    if g.num_edges() > opts.max_edges {
        return Err(GraphError::SizeBound {
            edges: g.num_edges(),
            bound: opts.max_edges,
        });
    }
    // Connected components.
    let vids: Vec<VertexId> = g.vertices.keys().cloned().collect();
    let idx: BTreeMap<&VertexId, usize> = vids.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vids.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for e in g.edges.values() {
        let a = find(&mut parent, idx[&e.ends[0].vertex]);
        let b = find(&mut parent, idx[&e.ends[1].vertex]);
        parent[a] = b;
    }
    let mut comps: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for (i, v) in vids.iter().enumerate() {
        comps.entry(find(&mut parent, i)).or_default().push(v.clone());
    }
    let mut forms: Vec<Vec<i64>> = comps
        .values()
        .map(|comp| component_form(g, comp, opts))
        .collect();
    forms.sort();
    let mut tokens = vec![forms.len() as i64];
    for f in forms {
        tokens.push(-2);
        tokens.extend(f);
    }
    Ok(CanonicalForm(tokens))
}

/// Equality of canonical forms under the default options.
pub fn graphs_equivalent(
    g1: &ArrowRibbonGraph,
    g2: &ArrowRibbonGraph,
    opts: &CanonOptions,
) -> Result<bool, GraphError> {
    Ok(canonical_form(g1, opts)? == canonical_form(g2, opts)?)
}
