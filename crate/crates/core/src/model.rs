//! K₂,₃ induced-minor models and their invariant checker.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::Serialize;

/// Branch sets of a K₂,₃ induced-minor model: contracting each set to a
/// point in the induced subgraph on their union yields exactly K₂,₃ with
/// hubs u, v and middle vertices a, b, c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMinorModel {
    pub x_u: VertexSet,
    pub x_v: VertexSet,
    pub x_a: VertexSet,
    pub x_b: VertexSet,
    pub x_c: VertexSet,
}

/// JSON-friendly view with branch sets as sorted vertex lists.
#[derive(Clone, Debug, Serialize)]
pub struct ModelReport {
    pub x_u: Vec<usize>,
    pub x_v: Vec<usize>,
    pub x_a: Vec<usize>,
    pub x_b: Vec<usize>,
    pub x_c: Vec<usize>,
}

impl InducedMinorModel {
    pub fn classes(&self) -> [&VertexSet; 5] {
        [&self.x_u, &self.x_v, &self.x_a, &self.x_b, &self.x_c]
    }

    pub fn report(&self) -> ModelReport {
        ModelReport {
            x_u: self.x_u.to_vec(),
            x_v: self.x_v.to_vec(),
            x_a: self.x_a.to_vec(),
            x_b: self.x_b.to_vec(),
            x_c: self.x_c.to_vec(),
        }
    }
}

/// Pairs of K₂,₃ vertices in class order (u, v, a, b, c) that are adjacent.
/// Hubs u, v see every middle vertex; no other pairs touch.
const K23_ADJACENT: [(usize, usize); 6] = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];

pub fn check_model(g: &Graph, m: &InducedMinorModel) -> Result<(), String> {
    let names = ["X_u", "X_v", "X_a", "X_b", "X_c"];
    let mut classes = Vec::with_capacity(5);
    for (i, c) in m.classes().iter().enumerate() {
        if c.iter().any(|v| v >= g.n()) {
            return Err(format!("{} has out-of-range vertices", names[i]));
        }
        // Renormalize capacity so callers may pass sets sized differently.
        classes.push(VertexSet::from_iter(g.n(), c.iter()));
    }
    for (i, c) in classes.iter().enumerate() {
        if c.is_empty() {
            return Err(format!("{} is empty", names[i]));
        }
        if g.components_within(c).len() != 1 {
            return Err(format!("{} is not connected", names[i]));
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if classes[i].intersects(&classes[j]) {
                return Err(format!("{} and {} overlap", names[i], names[j]));
            }
            let touching = g.neighborhood(&classes[i]).intersects(&classes[j]);
            let should = K23_ADJACENT.contains(&(i, j));
            if touching != should {
                return Err(format!(
                    "{} and {} are {}adjacent but should {}be",
                    names[i],
                    names[j],
                    if touching { "" } else { "non-" },
                    if should { "" } else { "not " },
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    }

    fn singleton_model() -> InducedMinorModel {
        InducedMinorModel {
            x_u: VertexSet::from_iter(5, [0]),
            x_v: VertexSet::from_iter(5, [1]),
            x_a: VertexSet::from_iter(5, [2]),
            x_b: VertexSet::from_iter(5, [3]),
            x_c: VertexSet::from_iter(5, [4]),
        }
    }

    #[test]
    fn identity_model_on_k23_passes() {
        assert_eq!(check_model(&k23(), &singleton_model()), Ok(()));
    }

    #[test]
    fn hubs_must_be_nonadjacent() {
        let mut edges = k23().edges();
        edges.push((0, 1));
        let g = Graph::from_edges(5, &edges);
        assert!(check_model(&g, &singleton_model()).is_err());
    }

    #[test]
    fn middles_must_be_pairwise_nonadjacent() {
        let mut edges = k23().edges();
        edges.push((2, 3));
        let g = Graph::from_edges(5, &edges);
        assert!(check_model(&g, &singleton_model()).is_err());
    }

    #[test]
    fn classes_must_be_connected_and_disjoint() {
        // Subdivide one hub-middle connection: 0-2 becomes 0-5, 5-2.
        let g = Graph::from_edges(
            6,
            &[(0, 5), (5, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        );
        let m = InducedMinorModel {
            x_u: VertexSet::from_iter(6, [0, 5]),
            x_v: VertexSet::from_iter(6, [1]),
            x_a: VertexSet::from_iter(6, [2]),
            x_b: VertexSet::from_iter(6, [3]),
            x_c: VertexSet::from_iter(6, [4]),
        };
        assert_eq!(check_model(&g, &m), Ok(()));
        let disconnected = InducedMinorModel {
            x_u: VertexSet::from_iter(6, [0, 2]),
            ..m.clone()
        };
        // {0, 2} is disconnected here (0-2 no longer an edge).
        assert!(check_model(&g, &disconnected).is_err());
        let overlapping = InducedMinorModel {
            x_a: VertexSet::from_iter(6, [2, 5]),
            ..m
        };
        assert!(check_model(&g, &overlapping).is_err());
    }

    #[test]
    fn missing_hub_middle_contact_fails() {
        // Remove edge 1-4: X_v no longer touches X_c.
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]);
        assert!(check_model(&g, &singleton_model()).is_err());
    }

    #[test]
    fn empty_class_fails() {
        let mut m = singleton_model();
        m.x_c = VertexSet::empty(5);
        assert!(check_model(&k23(), &m).is_err());
    }
}
