use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::Connection;
use crate::algebra::{Matrix, Rational};
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionEdgeSpec {
    pub id: i64,
    pub matrix: Matrix<Rational>,
}

/// JSON connection: one matrix per edge id, for the direction from the
/// lower vertex id to the higher. Edges not listed carry the identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionSpec {
    pub n: usize,
    pub edges: Vec<ConnectionEdgeSpec>,
}

impl ConnectionSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self, g: &PlanarGraph) -> Result<Connection<Rational>> {
        let mut mats = vec![Matrix::identity(2 * self.n); g.num_edges()];
        let mut seen = HashSet::new();
        for spec in &self.edges {
            if !seen.insert(spec.id) {
                return Err(Error::DuplicateId(spec.id));
            }
            mats[g.edge_index(spec.id)?] = spec.matrix.clone();
        }
        Connection::new(g, self.n, mats)
    }
}

impl Connection<Rational> {
    pub fn to_spec(&self, g: &PlanarGraph) -> ConnectionSpec {
        ConnectionSpec {
            n: self.rank(),
            edges: (0..g.num_edges())
                .map(|e| ConnectionEdgeSpec {
                    id: g.edge(e).id,
                    matrix: self.edge_matrix(e).clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self, g: &PlanarGraph) -> String {
        serde_json::to_string_pretty(&self.to_spec(g)).expect("connection serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symplectic_j;

    #[test]
    fn round_trip_and_defaults() {
        let g = PlanarGraph::from_integer_points(&[(0, 0), (1, 2), (2, 1)], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let text = r#"{"n":1,"edges":[{"id":1,"matrix":[["0","1"],["-1","0"]]}]}"#;
        let c = ConnectionSpec::from_json(text).unwrap().build(&g).unwrap();
        assert!(c.edge_matrix(0).is_identity());
        assert_eq!(c.edge_matrix(1), &symplectic_j(1));
        let back = ConnectionSpec::from_json(&c.to_json(&g)).unwrap().build(&g).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"n":1,"edges":[{"id":1,"matrix":[["2","0"],["0","2"]]}]}"#;
        assert_eq!(ConnectionSpec::from_json(bad).unwrap().build(&g), Err(Error::NotSymplectic));
    }
}
