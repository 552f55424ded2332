use super::*;
use crate::random::{random_graph, GraphConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ArrowDir::{Against, With};

fn entry(edge: &str, end: u8) -> RotEntry {
    RotEntry {
        edge: EdgeId(edge.into()),
        end,
        seg_arrows: Vec::new(),
        free_arrows: Vec::new(),
    }
}

/// Single vertex carrying an untwisted or twisted loop with adjacent ends.
fn loop_graph(twist: bool) -> ArrowRibbonGraph {
    let mut spec = RotationSpec::default();
    spec.vertices.push((
        VertexId("v".into()),
        vec![entry("e", 0), entry("e", 1)],
        Vec::new(),
    ));
    spec.edges
        .insert(EdgeId("e".into()), (twist, Vec::new(), Vec::new(), None));
    ArrowRibbonGraph::from_rotation_system(spec).unwrap()
}

fn two_vertex_tree() -> ArrowRibbonGraph {
    let mut spec = RotationSpec::default();
    spec.vertices
        .push((VertexId("u".into()), vec![entry("e", 0)], Vec::new()));
    spec.vertices
        .push((VertexId("w".into()), vec![entry("e", 1)], Vec::new()));
    spec.edges
        .insert(EdgeId("e".into()), (false, Vec::new(), Vec::new(), None));
    ArrowRibbonGraph::from_rotation_system(spec).unwrap()
}

/// Planar theta: two vertices joined by three untwisted parallel edges with
/// mirrored rotations.
pub(crate) fn theta_graph() -> ArrowRibbonGraph {
    let mut spec = RotationSpec::default();
    spec.vertices.push((
        VertexId("u".into()),
        vec![entry("e1", 0), entry("e2", 0), entry("e3", 0)],
        Vec::new(),
    ));
    spec.vertices.push((
        VertexId("w".into()),
        vec![entry("e3", 1), entry("e2", 1), entry("e1", 1)],
        Vec::new(),
    ));
    for e in ["e1", "e2", "e3"] {
        spec.edges
            .insert(EdgeId(e.into()), (false, Vec::new(), Vec::new(), None));
    }
    ArrowRibbonGraph::from_rotation_system(spec).unwrap()
}

#[test]
fn single_vertex_no_edges() {
    let mut spec = RotationSpec::default();
    spec.vertices
        .push((VertexId("v".into()), Vec::new(), Vec::new()));
    let g = ArrowRibbonGraph::from_rotation_system(spec).unwrap();
    assert_eq!(g.num_vertices(), 1);
    assert_eq!(g.num_edges(), 0);
    let r = g.boundary_report(&BTreeSet::new());
    assert_eq!(r.boundary_circles(), 1);
    assert_eq!(r.subgraph_components, 1);
    assert!(r.components[0].arrow_word.is_empty());
}

#[test]
fn loop_with_adjacent_ends_is_valid() {
    let g = loop_graph(false);
    assert_eq!((g.num_vertices(), g.num_edges()), (1, 1));
}

#[test]
fn dangling_end_is_rejected() {
    let mut spec = RotationSpec::default();
    spec.vertices
        .push((VertexId("v".into()), vec![entry("e", 0)], Vec::new()));
    spec.edges
        .insert(EdgeId("e".into()), (false, Vec::new(), Vec::new(), None));
    // end 1 of e is never attached
    assert!(matches!(
        ArrowRibbonGraph::from_rotation_system(spec),
        Err(GraphError::EndMultiplicity { end: 1, count: 0, .. })
    ));
}

#[test]
fn untwisted_loop_bounds_annulus() {
    let g = loop_graph(false);
    let all = g.all_edges();
    let r = g.boundary_report(&all);
    assert_eq!(r.boundary_circles(), 2);
    assert_eq!(r.subgraph_components, 1);
    assert_eq!(r.nullity, 1);
    assert_eq!(r.euler_genus, 0);
    assert!(r.orientable);
}

#[test]
fn twisted_loop_bounds_moebius_band() {
    let g = loop_graph(true);
    let all = g.all_edges();
    let r = g.boundary_report(&all);
    assert_eq!(r.boundary_circles(), 1);
    assert_eq!(r.euler_genus, 1);
    assert!(!r.orientable);
}

#[test]
fn planar_theta_boundary() {
    let g = theta_graph();
    let r = g.boundary_report(&g.all_edges());
    // Euler check: v - e + bc = 2 - 3 + 3 = 2 for the sphere.
    assert_eq!(r.boundary_circles(), 3);
    assert_eq!(r.subgraph_components, 1);
    assert_eq!(r.nullity, 2);
    assert_eq!(r.euler_genus, 0);
}

#[test]
fn empty_subset_stats() {
    let g = theta_graph();
    let r = g.boundary_report(&BTreeSet::new());
    assert_eq!(r.subgraph_components, g.num_vertices());
    assert_eq!(r.rank, 0);
    assert_eq!(r.nullity, 0);
}

#[test]
fn tree_edge_stats() {
    let g = two_vertex_tree();
    let (k, bc, r, n, genus, _) = g.state_stats(&g.all_edges());
    assert_eq!((k, bc, r, n, genus), (1, 1, 1, 0, 0));
}

#[test]
fn presentation_interleaved_pair_is_torus() {
    let g = ArrowRibbonGraph::from_arrow_presentation(&[vec![
        ("1".into(), With),
        ("2".into(), With),
        ("1".into(), With),
        ("2".into(), With),
    ]])
    .unwrap();
    assert_eq!((g.num_vertices(), g.num_edges()), (1, 2));
    assert!(!g.edges[&EdgeId("1".into())].twist);
    let r = g.boundary_report(&g.all_edges());
    assert_eq!(r.euler_genus, 2);
    assert_eq!(r.boundary_circles(), 1);
    assert!(r.orientable);
    // The presentation arrows sit on attaching arcs.
    for v in g.vertices.values() {
        for e in &v.rotation {
            assert_eq!(e.seg_arrows.len(), 1);
            assert!(e.free_arrows.is_empty());
        }
    }
}

#[test]
fn presentation_plain_pair_is_untwisted_loop() {
    let g = ArrowRibbonGraph::from_arrow_presentation(&[vec![
        ("1".into(), With),
        ("1".into(), With),
    ]])
    .unwrap();
    assert_eq!((g.num_vertices(), g.num_edges()), (1, 1));
    assert!(!g.edges[&EdgeId("1".into())].twist);
    assert_eq!(g.boundary_report(&g.all_edges()).boundary_circles(), 2);
    // Opposite directions glue with a twist.
    let g = ArrowRibbonGraph::from_arrow_presentation(&[vec![
        ("1".into(), With),
        ("1".into(), Against),
    ]])
    .unwrap();
    assert!(g.edges[&EdgeId("1".into())].twist);
}

#[test]
fn presentation_single_label_is_rejected() {
    let err = ArrowRibbonGraph::from_arrow_presentation(&[vec![("1".into(), With)]]);
    assert!(matches!(err, Err(GraphError::LabelMultiplicity(_, 1))));
}

#[test]
fn reduce_examples() {
    assert_eq!(reduce_arrow_word(&[]), 0);
    assert_eq!(reduce_arrow_word(&[With, Against]), 2);
    assert_eq!(reduce_arrow_word(&[With, With]), 0);
    assert_eq!(reduce_arrow_word(&[With, Against, With, Against]), 4);
    assert_eq!(reduce_arrow_word(&[With, With, Against]), 1);
}

/// Every cancellation order of cyclically adjacent same-direction pairs,
/// fully expanded; returns the set of reachable terminal lengths.
fn reduce_all_orders(word: &[ArrowDir]) -> BTreeSet<usize> {
    fn go(
        word: Vec<ArrowDir>,
        memo: &mut std::collections::HashMap<Vec<ArrowDir>, BTreeSet<usize>>,
    ) -> BTreeSet<usize> {
        if let Some(hit) = memo.get(&word) {
            return hit.clone();
        }
        let n = word.len();
        let mut out = BTreeSet::new();
        if n >= 2 {
            for i in 0..n {
                let j = (i + 1) % n;
                if i != j && word[i] == word[j] {
                    let mut next = Vec::with_capacity(n - 2);
                    for (k, &a) in word.iter().enumerate() {
                        if k != i && k != j {
                            next.push(a);
                        }
                    }
                    out.extend(go(next, memo));
                }
            }
        }
        if out.is_empty() {
            out.insert(n);
        }
        memo.insert(word, out.clone());
        out
    }
    go(word.to_vec(), &mut std::collections::HashMap::new())
}

#[test]
fn reduce_is_order_and_rotation_independent() {
    for len in 0..=10usize {
        for bits in 0..(1u32 << len) {
            let word: Vec<ArrowDir> = (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        With
                    } else {
                        Against
                    }
                })
                .collect();
            let got = reduce_arrow_word(&word);
            let brute = reduce_all_orders(&word);
            assert_eq!(brute.len(), 1, "ambiguous reduction for {word:?}");
            assert_eq!(got, *brute.iter().next().unwrap(), "word {word:?}");
            assert_eq!(2 * got % 2, 0);
            assert_eq!(got % 2, len % 2, "parity for {word:?}");
            // rotation invariance
            for r in 0..len {
                let mut rot = word.clone();
                rot.rotate_left(r);
                assert_eq!(reduce_arrow_word(&rot), got);
            }
        }
    }
}

#[test]
fn every_boundary_arc_is_traversed_exactly_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = GraphConfig::default();
    for _ in 0..120 {
        let g = random_graph(&mut rng, &cfg);
        let edges = g.edge_ids();
        let mask_count = 1usize << edges.len().min(6);
        for mask in 0..mask_count {
            let subset: BTreeSet<EdgeId> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect();
            let mut expected: BTreeSet<Piece> = BTreeSet::new();
            for (vid, v) in &g.vertices {
                if v.rotation.is_empty() {
                    expected.insert(Piece::VLone { vertex: vid.clone() });
                }
                for (pos, entry) in v.rotation.iter().enumerate() {
                    expected.insert(Piece::VFree { vertex: vid.clone(), pos });
                    if !subset.contains(&entry.edge) {
                        expected.insert(Piece::Seg { vertex: vid.clone(), pos });
                    }
                }
            }
            for e in &subset {
                expected.insert(Piece::Side { edge: e.clone(), side: SideTag::L });
                expected.insert(Piece::Side { edge: e.clone(), side: SideTag::R });
            }
            let mut seen: Vec<Piece> = Vec::new();
            for walk in trace_boundary(&g, &subset) {
                for (piece, _) in walk {
                    seen.push(piece);
                }
            }
            let seen_set: BTreeSet<Piece> = seen.iter().cloned().collect();
            assert_eq!(seen.len(), seen_set.len(), "an arc was traversed twice");
            assert_eq!(seen_set, expected, "arc coverage mismatch");
        }
    }
}

#[test]
fn euler_genus_nonnegative_and_even_when_orientable() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cfg = GraphConfig::default();
    for _ in 0..200 {
        let g = random_graph(&mut rng, &cfg);
        let edges = g.edge_ids();
        for mask in 0..(1usize << edges.len().min(6)) {
            let subset: BTreeSet<EdgeId> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect();
            let r = g.boundary_report(&subset);
            assert!(r.euler_genus >= 0, "negative euler genus");
            if r.orientable {
                assert_eq!(r.euler_genus % 2, 0, "odd euler genus on orientable subgraph");
            }
        }
    }
}

#[test]
fn json_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cfg = GraphConfig {
        signed: true,
        ..GraphConfig::default()
    };
    for _ in 0..50 {
        let g = random_graph(&mut rng, &cfg);
        let s = graph_to_json(&g);
        let back = graph_from_json(&s).unwrap();
        assert_eq!(g, back);
    }
}

#[test]
fn json_matches_documented_shape() {
    let s = r#"{"vertices":[{"id":"v","rotation":[
        {"end":"e1.0","seg_arrows":["W","A"],"free_arrows":[]},
        {"end":"e1.1","free_arrows":["W"]}]}],
       "edges":[{"id":"e1","twist":false,"sideL":["W"],"sideR":[],"sign":"+"}]}"#;
    let g = graph_from_json(s).unwrap();
    assert_eq!(g.num_edges(), 1);
    let e = &g.edges[&EdgeId("e1".into())];
    assert_eq!(e.sign, Some(Sign::Plus));
    assert_eq!(e.side_l, vec![With]);
    assert_eq!(
        g.entry(&VertexId("v".into()), 0).seg_arrows,
        vec![With, Against]
    );
}
