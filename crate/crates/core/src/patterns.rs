//! Construction of named gadgets, parametric configurations, the G_k
//! family, and randomized test instances.

use crate::graph::Graph;
use crate::witness::Witness;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

/// Parameters of a Truemper configuration. Lengths count edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigSpec {
    Theta { lengths: [usize; 3] },
    Pyramid { lengths: [usize; 3] },
    Prism { lengths: [usize; 3] },
    BrokenWheel { sectors: Vec<usize> },
}

impl ConfigSpec {
    pub fn validate(&self) -> Result<(), ConfigError> {
        match self {
            ConfigSpec::Theta { lengths } => {
                if lengths.iter().any(|&l| l < 2) {
                    return Err(ConfigError(format!(
                        "theta paths must all have length at least 2, got {lengths:?}"
                    )));
                }
            }
            ConfigSpec::Pyramid { lengths } => {
                if lengths.iter().any(|&l| l < 1)
                    || lengths.iter().filter(|&&l| l >= 2).count() < 2
                {
                    return Err(ConfigError(format!(
                        "pyramid needs all paths of length at least 1, \
                         at least two of length at least 2, got {lengths:?}"
                    )));
                }
            }
            ConfigSpec::Prism { lengths } => {
                if lengths.iter().any(|&l| l < 1) {
                    return Err(ConfigError(format!(
                        "prism paths must all have length at least 1, got {lengths:?}"
                    )));
                }
            }
            ConfigSpec::BrokenWheel { sectors } => {
                if sectors.len() < 3
                    || sectors.iter().any(|&s| s < 1)
                    || sectors.iter().filter(|&&s| s >= 2).count() < 2
                {
                    return Err(ConfigError(format!(
                        "broken wheel needs at least 3 sectors of length at least 1, \
                         at least two of length at least 2, got {sectors:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Builds the configuration with its canonical labeling (hubs/apex/triangles
/// first, then path interiors in declaration order) and the witness
/// describing it. For `Prism` with all lengths 1 the returned witness
/// deliberately fails `validate_witness`: the graph is a prism but not a
/// long one.
pub fn make_config(spec: &ConfigSpec) -> Result<(Graph, Witness), ConfigError> {
    spec.validate()?;
    Ok(match spec {
        ConfigSpec::Theta { lengths } => {
            let mut edges = Vec::new();
            let mut next = 2;
            let paths: [Vec<usize>; 3] =
                std::array::from_fn(|i| build_path(0, 1, lengths[i], &mut next, &mut edges));
            let n = next;
            (
                Graph::from_edges(n, &edges),
                Witness::Theta {
                    hubs: [0, 1],
                    paths,
                },
            )
        }
        ConfigSpec::Pyramid { lengths } => {
            let mut edges = vec![(1, 2), (2, 3), (1, 3)];
            let mut next = 4;
            let paths: [Vec<usize>; 3] =
                std::array::from_fn(|i| build_path(0, i + 1, lengths[i], &mut next, &mut edges));
            let n = next;
            (
                Graph::from_edges(n, &edges),
                Witness::Pyramid {
                    apex: 0,
                    triangle: [1, 2, 3],
                    paths,
                },
            )
        }
        ConfigSpec::Prism { lengths } => {
            let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
            let mut next = 6;
            let paths: [Vec<usize>; 3] =
                std::array::from_fn(|i| build_path(i, i + 3, lengths[i], &mut next, &mut edges));
            let n = next;
            (
                Graph::from_edges(n, &edges),
                Witness::LongPrism {
                    triangle_a: [0, 1, 2],
                    triangle_b: [3, 4, 5],
                    paths,
                },
            )
        }
        ConfigSpec::BrokenWheel { sectors } => {
            let k: usize = sectors.iter().sum();
            let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i, i + 1)).collect();
            edges.push((k, 1));
            let mut spoke = 1;
            for &s in sectors {
                edges.push((0, spoke));
                spoke += s;
            }
            (
                Graph::from_edges(k + 1, &edges),
                Witness::BrokenWheel {
                    rim: (1..=k).collect(),
                    center: 0,
                },
            )
        }
    })
}

/// Appends a path of `len` edges from `from` to `to`, drawing interior
/// vertices from `next` upward, and returns the full vertex sequence.
fn build_path(
    from: usize,
    to: usize,
    len: usize,
    next: &mut usize,
    edges: &mut Vec<(usize, usize)>,
) -> Vec<usize> {
    let mut p = vec![from];
    for _ in 0..len - 1 {
        p.push(*next);
        *next += 1;
    }
    p.push(to);
    for w in p.windows(2) {
        edges.push((w[0], w[1]));
    }
    p
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// The 6-vertex co-domino: 4-cycle v₁v₂v₃v₄ (labels 2..5) with a₁ (0)
/// adjacent to v₁, v₂ and a₂ (1) adjacent to v₃, v₄.
pub fn co_domino() -> Graph {
    Graph::from_edges(
        6,
        &[
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 2),
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
        ],
    )
}

/// The net: triangle v₁v₂v₃ (labels 3..5) with pendant aᵢ (labels 0..2)
/// attached to vᵢ.
pub fn net() -> Graph {
    Graph::from_edges(6, &[(3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

/// The cube: hole v₁..v₆ (labels 0..5) plus x (6) adjacent to v₁, v₃, v₅
/// and y (7) adjacent to v₂, v₄, v₆.
pub fn cube() -> Graph {
    Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (6, 0),
            (6, 2),
            (6, 4),
            (7, 1),
            (7, 3),
            (7, 5),
        ],
    )
}

/// K₂,₃ with hubs 0, 1 and middle vertices 2, 3, 4.
pub fn k23() -> Graph {
    Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
}

pub fn make_named(name: &str) -> Option<Graph> {
    match name {
        "co-domino" => Some(co_domino()),
        "net" => Some(net()),
        "cube" => Some(cube()),
        "k23" => Some(k23()),
        "k4" => Some(complete(4)),
        _ => None,
    }
}

/// The graph G_k: blocks A (independent), B, C, D (cliques) of k vertices
/// each, labeled consecutively; A–C and B–D complete; aᵢbⱼ and cᵢdⱼ edges
/// iff i=j; bᵢcⱼ edges iff i≠j.
pub fn make_gk(k: usize) -> Graph {
    assert!(k >= 1, "make_gk needs k >= 1");
    let (a, b, c, d) = (0, k, 2 * k, 3 * k);
    let mut edges = Vec::new();
    for block in [b, c, d] {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((block + i, block + j));
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            edges.push((a + i, c + j));
            edges.push((b + i, d + j));
            if i == j {
                edges.push((a + i, b + j));
                edges.push((c + i, d + j));
            } else {
                edges.push((b + i, c + j));
            }
        }
    }
    Graph::from_edges(4 * k, &edges)
}

/// Embeds the configuration as an induced subgraph into a random background.
/// Background vertices connect among themselves with probability `edge_prob`
/// per pair; toward the configuration each background vertex picks one
/// uniform configuration vertex t and joins each member of t's closed
/// neighborhood (within the configuration) with probability `edge_prob`,
/// which keeps the planted configuration induced. Deterministic given seed.
pub fn plant(
    spec: &ConfigSpec,
    background_n: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<(Graph, Witness), ConfigError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(ConfigError(format!(
            "edge probability must lie in [0, 1], got {edge_prob}"
        )));
    }
    let (cfg, witness) = make_config(spec)?;
    let c = cfg.n();
    let n = c + background_n;
    let mut edges = cfg.edges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in c..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    for w in c..n {
        let t = rng.gen_range(0..c);
        let mut targets: Vec<usize> = cfg.neighbors(t).iter().collect();
        targets.push(t);
        targets.sort_unstable();
        for v in targets {
            if rng.gen_bool(edge_prob) {
                edges.push((w, v));
            }
        }
    }
    Ok((Graph::from_edges(n, &edges), witness))
}

/// Erdős–Rényi sample: each pair independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random chordal graph: each new vertex attaches to a clique grown inside
/// the neighborhood of a random earlier vertex, which makes the reverse
/// insertion order a perfect elimination ordering.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut g = Graph::empty(n.max(1));
    for i in 1..n {
        let v = rng.gen_range(0..i);
        let mut clique = vec![v];
        for w in g.neighbors(v).iter() {
            if rng.gen_bool(0.5) && clique.iter().all(|&q| g.has_edge(q, w)) {
                clique.push(w);
            }
        }
        for q in clique {
            edges.push((i, q));
        }
        g = Graph::from_edges(n.max(1), &edges);
    }
    Graph::from_edges(n, &edges)
}

/// Greedy simplicial elimination; succeeds exactly on chordal graphs.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = g.vertex_set();
    loop {
        let simplicial = alive
            .iter()
            .find(|&v| g.is_clique(&g.neighbors(v).intersection(&alive)));
        match simplicial {
            Some(v) => alive.remove(v),
            None => return alive.is_empty(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::validate_witness;

    #[test]
    fn theta_222_is_k23() {
        let (g, w) = make_config(&ConfigSpec::Theta { lengths: [2, 2, 2] }).unwrap();
        assert_eq!(g.edges(), k23().edges());
        assert!(validate_witness(&g, &w));
    }

    #[test]
    fn theta_rejects_short_paths() {
        assert!(make_config(&ConfigSpec::Theta { lengths: [2, 1, 2] }).is_err());
    }

    #[test]
    fn pyramid_canonical_labels() {
        let (g, w) = make_config(&ConfigSpec::Pyramid { lengths: [1, 2, 2] }).unwrap();
        assert_eq!(g.n(), 6);
        assert!(validate_witness(&g, &w));
        assert!(make_config(&ConfigSpec::Pyramid { lengths: [1, 1, 2] }).is_err());
        assert!(make_config(&ConfigSpec::Pyramid { lengths: [0, 2, 2] }).is_err());
    }

    #[test]
    fn prism_111_is_the_plain_prism() {
        let (g, w) = make_config(&ConfigSpec::Prism { lengths: [1, 1, 1] }).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        // Not long, so the witness shape intentionally fails validation.
        assert!(!validate_witness(&g, &w));
        let (g2, w2) = make_config(&ConfigSpec::Prism { lengths: [2, 1, 1] }).unwrap();
        assert!(validate_witness(&g2, &w2));
    }

    #[test]
    fn broken_wheel_122_matches_expected_labels() {
        let (g, w) = make_config(&ConfigSpec::BrokenWheel {
            sectors: vec![1, 2, 2],
        })
        .unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.neighbors(0).to_vec(), vec![1, 2, 4]);
        assert!(validate_witness(&g, &w));
        assert!(make_config(&ConfigSpec::BrokenWheel {
            sectors: vec![1, 1, 2],
        })
        .is_err());
        assert!(make_config(&ConfigSpec::BrokenWheel {
            sectors: vec![2, 2],
        })
        .is_err());
    }

    #[test]
    fn named_gadget_edge_lists() {
        let cd = co_domino();
        assert_eq!(cd.n(), 6);
        assert_eq!(
            cd.edges(),
            vec![
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 5),
                (3, 4),
                (4, 5),
            ]
        );
        let nt = net();
        assert_eq!(
            nt.edges(),
            vec![(0, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
        );
        let q = cube();
        assert_eq!(q.n(), 8);
        assert_eq!(q.edge_count(), 12);
        assert!((0..8).all(|v| q.degree(v) == 3));
        assert!(make_named("cube").is_some());
        assert!(make_named("dodecahedron").is_none());
    }

    #[test]
    fn cube_is_bipartite() {
        let q = cube();
        let mut color = [None::<bool>; 8];
        color[0] = Some(false);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in q.neighbors(v).iter() {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        stack.push(w);
                    }
                    Some(cw) => assert_ne!(cw, color[v].unwrap(), "odd cycle"),
                }
            }
        }
        assert!(color.iter().all(|c| c.is_some()));
    }

    #[test]
    fn gk_family_shapes() {
        let g1 = make_gk(1);
        assert_eq!(g1.n(), 4);
        assert_eq!(g1.edge_count(), 4);
        assert!(g1.is_hole(&[0, 1, 3, 2]));
        let g2 = make_gk(2);
        assert_eq!(g2.n(), 8);
        assert_eq!(g2.edge_count(), 17);
        let g3 = make_gk(3);
        assert_eq!(g3.n(), 12);
        // A ∪ {d₁} is independent: A = {0,1,2}, d₁ = 9.
        for &(u, v) in &[(0, 1), (0, 2), (1, 2), (0, 9), (1, 9), (2, 9)] {
            assert!(!g3.has_edge(u, v));
        }
    }

    #[test]
    fn plant_with_empty_background_is_identity() {
        let spec = ConfigSpec::Theta { lengths: [2, 2, 2] };
        let (g, _) = plant(&spec, 0, 0.0, 7).unwrap();
        assert_eq!(g.edges(), k23().edges());
    }

    #[test]
    fn plant_with_zero_prob_adds_isolated_vertices() {
        let spec = ConfigSpec::Prism { lengths: [2, 1, 1] };
        let (g, w) = plant(&spec, 5, 0.0, 7).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.edge_count(), 10);
        assert!(validate_witness(&g, &w));
    }

    #[test]
    fn plant_keeps_configuration_induced() {
        for seed in 0..20 {
            let spec = ConfigSpec::BrokenWheel {
                sectors: vec![1, 2, 2],
            };
            let (g, w) = plant(&spec, 8, 0.5, seed).unwrap();
            assert!(validate_witness(&g, &w), "seed {seed}");
        }
    }

    #[test]
    fn plant_is_deterministic() {
        let spec = ConfigSpec::Pyramid { lengths: [2, 2, 2] };
        let (g1, _) = plant(&spec, 6, 0.4, 99).unwrap();
        let (g2, _) = plant(&spec, 6, 0.4, 99).unwrap();
        assert_eq!(g1.edges(), g2.edges());
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(0, 0.5, 1).n(), 0);
        let k10 = random_graph(10, 1.0, 1);
        assert_eq!(k10.edge_count(), 45);
        assert_eq!(random_graph(10, 0.0, 1).edge_count(), 0);
        assert_eq!(
            random_graph(12, 0.3, 5).edges(),
            random_graph(12, 0.3, 5).edges()
        );
    }

    #[test]
    fn random_chordal_is_chordal_and_connected() {
        for seed in 0..10 {
            for n in [1, 2, 5, 12, 25] {
                let g = random_chordal(n, seed);
                assert!(is_chordal(&g), "n={n} seed={seed}");
                assert!(g.is_connected(), "n={n} seed={seed}");
            }
        }
        assert!(is_chordal(&complete(5)));
        assert!(is_chordal(&path_graph(6)));
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&k23()));
    }

    fn assert_simple_symmetric(g: &Graph) {
        for v in 0..g.n() {
            assert!(!g.has_edge(v, v), "self-loop at {v}");
            for u in g.neighbors(v).iter() {
                assert!(g.has_edge(u, v), "asymmetric edge {v}-{u}");
            }
        }
    }

    fn arbitrary_spec() -> impl proptest::strategy::Strategy<Value = ConfigSpec> {
        use proptest::prelude::*;
        let long = |lengths: &[usize; 3]| lengths.iter().filter(|&&l| l >= 2).count();
        prop_oneof![
            proptest::array::uniform3(2usize..=4)
                .prop_map(|lengths| ConfigSpec::Theta { lengths }),
            proptest::array::uniform3(1usize..=4)
                .prop_filter("two long paths", move |l| long(l) >= 2)
                .prop_map(|lengths| ConfigSpec::Pyramid { lengths }),
            proptest::array::uniform3(1usize..=4)
                .prop_filter("one long path", move |l| long(l) >= 1)
                .prop_map(|lengths| ConfigSpec::Prism { lengths }),
            proptest::collection::vec(1usize..=4, 3..=6)
                .prop_filter("two long sectors", |s| {
                    s.iter().filter(|&&l| l >= 2).count() >= 2
                })
                .prop_map(|sectors| ConfigSpec::BrokenWheel { sectors }),
        ]
    }

    proptest::proptest! {
        #[test]
        fn configs_validate_and_contain_the_minor(
            spec in arbitrary_spec(),
            background in 0usize..=4,
            seed in 0u64..1000,
        ) {
            use proptest::prelude::*;
            let (g, w) = make_config(&spec).unwrap();
            assert_simple_symmetric(&g);
            prop_assert!(validate_witness(&g, &w), "{spec:?}");
            if g.n() <= 12 {
                prop_assert!(
                    crate::oracle::find_k23_model(&g).is_some(),
                    "oracle misses the minor in {spec:?}"
                );
            }
            let (planted, pw) = plant(&spec, background, 0.3, seed).unwrap();
            assert_simple_symmetric(&planted);
            prop_assert!(validate_witness(&planted, &pw), "plant broke {spec:?}");
            assert_simple_symmetric(&random_graph(background + 4, 0.4, seed));
            assert_simple_symmetric(&random_chordal(background + 4, seed));
        }
    }
}
