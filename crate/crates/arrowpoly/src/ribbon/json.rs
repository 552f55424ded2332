//! JSON representation of arrow ribbon graphs.
//!
//! ```json
//! {"vertices":[{"id":"u","rotation":[{"end":"e1.0","seg_arrows":["W","A"],
//!   "free_arrows":[]}],"lone_arrows":[]}],
//!  "edges":[{"id":"e1","twist":false,"sideL":["W"],"sideR":[],"sign":"+"}]}
//! ```
//!
//! Arrow letters are `W`/`A` relative to the arc parametrization convention;
//! `"end"` is `<edge id>.<0|1>`; `sign` is optional. Edge end slots are
//! derived from the rotations on load.

use super::{
    ArrowDir, ArrowRibbonGraph, EdgeId, GraphError, RotEntry, RotationSpec, Sign, VertexId,
};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: serde_json::Value,
    #[serde(default)]
    rotation: Vec<JsonEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    lone_arrows: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    end: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    seg_arrows: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    free_arrows: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    id: String,
    #[serde(default)]
    twist: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty", rename = "sideL")]
    side_l: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty", rename = "sideR")]
    side_r: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sign: Option<String>,
}

fn arrows_from(v: &[String]) -> Result<Vec<ArrowDir>, GraphError> {
    v.iter()
        .map(|s| match s.as_str() {
            "W" => Ok(ArrowDir::With),
            "A" => Ok(ArrowDir::Against),
            other => Err(GraphError::Format(format!("bad arrow letter {other:?}"))),
        })
        .collect()
}

fn arrows_to(v: &[ArrowDir]) -> Vec<String> {
    v.iter()
        .map(|a| match a {
            ArrowDir::With => "W".to_string(),
            ArrowDir::Against => "A".to_string(),
        })
        .collect()
}

fn id_string(v: &serde_json::Value) -> Result<String, GraphError> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(GraphError::Format(format!("bad id {other}"))),
    }
}

pub fn graph_from_json(input: &str) -> Result<ArrowRibbonGraph, GraphError> {
    let raw: JsonGraph =
        serde_json::from_str(input).map_err(|e| GraphError::Format(e.to_string()))?;
    let mut spec = RotationSpec::default();
    for v in &raw.vertices {
        let mut rotation = Vec::new();
        for entry in &v.rotation {
            let (edge, end) = entry
                .end
                .rsplit_once('.')
                .ok_or_else(|| GraphError::Format(format!("bad end ref {:?}", entry.end)))?;
            let end: u8 = end
                .parse()
                .map_err(|_| GraphError::Format(format!("bad end index in {:?}", entry.end)))?;
            rotation.push(RotEntry {
                edge: EdgeId(edge.to_string()),
                end,
                seg_arrows: arrows_from(&entry.seg_arrows)?,
                free_arrows: arrows_from(&entry.free_arrows)?,
            });
        }
        spec.vertices.push((
            VertexId(id_string(&v.id)?),
            rotation,
            arrows_from(&v.lone_arrows)?,
        ));
    }
    for e in &raw.edges {
        let sign = match e.sign.as_deref() {
            None => None,
            Some("+") => Some(Sign::Plus),
            Some("-") => Some(Sign::Minus),
            Some(other) => {
                return Err(GraphError::Format(format!("bad sign {other:?}")));
            }
        };
        if spec
            .edges
            .insert(
                EdgeId(e.id.clone()),
                (e.twist, arrows_from(&e.side_l)?, arrows_from(&e.side_r)?, sign),
            )
            .is_some()
        {
            return Err(GraphError::DuplicateId(e.id.clone()));
        }
    }
    ArrowRibbonGraph::from_rotation_system(spec)
}

pub fn graph_to_json(g: &ArrowRibbonGraph) -> String {
    let raw = JsonGraph {
        vertices: g
            .vertices
            .iter()
            .map(|(vid, v)| JsonVertex {
                id: serde_json::Value::String(vid.0.clone()),
                rotation: v
                    .rotation
                    .iter()
                    .map(|entry| JsonEntry {
                        end: format!("{}.{}", entry.edge, entry.end),
                        seg_arrows: arrows_to(&entry.seg_arrows),
                        free_arrows: arrows_to(&entry.free_arrows),
                    })
                    .collect(),
                lone_arrows: arrows_to(&v.lone_arrows),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|(eid, e)| JsonEdge {
                id: eid.0.clone(),
                twist: e.twist,
                side_l: arrows_to(&e.side_l),
                side_r: arrows_to(&e.side_r),
                sign: e.sign.map(|s| match s {
                    Sign::Plus => "+".to_string(),
                    Sign::Minus => "-".to_string(),
                }),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("serialization cannot fail")
}
