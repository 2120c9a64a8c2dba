use serde::{Deserialize, Serialize};

use super::{PlanarGraph, Point};
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexSpec {
    pub id: i64,
    pub x: Rational,
    pub y: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: i64,
    pub u: i64,
    pub v: i64,
    #[serde(default = "unit_weight")]
    pub weight: String,
}

fn unit_weight() -> String {
    "1".to_string()
}

/// JSON graph description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
}

impl GraphSpec {
    pub fn build(&self) -> Result<PlanarGraph> {
        PlanarGraph::new(
            self.vertices
                .iter()
                .map(|v| (v.id, Point::new(v.x.clone(), v.y.clone())))
                .collect(),
            self.edges
                .iter()
                .map(|e| (e.id, e.u, e.v, e.weight.clone()))
                .collect(),
        )
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl PlanarGraph {
    pub fn from_json(s: &str) -> Result<Self> {
        GraphSpec::from_json(s)?.build()
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self
                .vertices()
                .iter()
                .map(|v| VertexSpec {
                    id: v.id,
                    x: v.pos.x.clone(),
                    y: v.pos.y.clone(),
                })
                .collect(),
            edges: self
                .edges()
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id,
                    u: self.vertex(e.u).id,
                    v: self.vertex(e.v).id,
                    weight: e.weight.clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("graph serializes")
    }

    /// Shorthand for integer positions with unit weights; vertex ids are indices.
    pub fn from_integer_points(points: &[(i64, i64)], edges: &[(usize, usize)]) -> Result<Self> {
        PlanarGraph::new(
            points
                .iter()
                .enumerate()
                .map(|(i, &(x, y))| (i as i64, Point::from_ints(x, y)))
                .collect(),
            edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (i as i64, u as i64, v as i64, "1".to_string()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":[{"id":1,"x":"0","y":"0"},{"id":2,"x":"1/2","y":"3"}],
                      "edges":[{"id":7,"u":2,"v":1,"weight":"a"}]}"#;
        let g = PlanarGraph::from_json(text).unwrap();
        assert_eq!(g.edge(0).u, 0);
        assert_eq!(g.edge(0).weight, "a");
        let back = PlanarGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back.to_spec(), g.to_spec());
        assert_eq!(Rational::new(1, 2), back.position(1).x);
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"vertices":[],"edges":[],"faces":[]}"#;
        assert!(matches!(PlanarGraph::from_json(text), Err(Error::Parse(_))));
    }
}
