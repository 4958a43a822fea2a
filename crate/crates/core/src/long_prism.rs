//! Long-prism detection for pyramid-free graphs. Step 1 completes an
//! induced co-domino with a connecting path; step 2 completes an induced net
//! through the S/T/M classification of a component all three pendants reach.

use crate::bitset::VertexSet;
use crate::exec::{scan_first, ExecMode};
use crate::graph::Graph;
use crate::stm::{extract_stm, StmShape};
use crate::witness::{validate_witness, Witness};

/// The pyramid-freeness precondition failed; the payload is a validated
/// pyramid witness found along the way.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("precondition violated: pyramid present")]
pub struct PyramidPresent(pub Witness);

/// Finds an induced long prism in a pyramid-free graph, or proves there is
/// none. On input that does contain a pyramid the search may either still
/// return a long prism or surface the pyramid as an error.
pub fn detect_long_prism(g: &Graph, mode: ExecMode) -> Result<Option<Witness>, PyramidPresent> {
    if let Some(w) = scan_first(mode, g.n(), |a1| codomino_scan(g, a1)) {
        return Ok(Some(w));
    }
    match scan_first(mode, g.n(), |v1| net_scan(g, v1).transpose()) {
        None => Ok(None),
        Some(Ok(w)) => Ok(Some(w)),
        Some(Err(e)) => Err(e),
    }
}

/// Step 1, sharded by the co-domino pendant a1: find an induced co-domino
/// (triangles a1-v1-v2 and a2-v4-v3 joined by the rungs v1v4, v2v3) plus a
/// component X off the v-neighborhoods that links a1 to a2.
fn codomino_scan(g: &Graph, a1: usize) -> Option<Witness> {
    for a2 in a1 + 1..g.n() {
        if g.has_edge(a1, a2) {
            continue;
        }
        for v1 in g.neighbors(a1).iter() {
            if g.has_edge(a2, v1) || v1 == a2 {
                continue;
            }
            for v2 in g.neighbors(a1).intersection(g.neighbors(v1)).iter() {
                if v2 <= v1 || g.has_edge(a2, v2) || v2 == a2 {
                    continue;
                }
                for v4 in g.neighbors(v1).intersection(g.neighbors(a2)).iter() {
                    if v4 == a1 || v4 == v2 || g.has_edge(a1, v4) || g.has_edge(v2, v4) {
                        continue;
                    }
                    let v3_pool = g
                        .neighbors(v2)
                        .intersection(g.neighbors(a2))
                        .intersection(g.neighbors(v4));
                    for v3 in v3_pool.iter() {
                        if v3 == a1 || v3 == v1 || g.has_edge(a1, v3) || g.has_edge(v1, v3) {
                            continue;
                        }
                        let mut removed = g.neighbors(v1).union(g.neighbors(v2));
                        removed.union_with(g.neighbors(v3));
                        removed.union_with(g.neighbors(v4));
                        for x in g.components_within(&removed.complement()) {
                            if !g.neighbors(a1).intersects(&x) || !g.neighbors(a2).intersects(&x)
                            {
                                continue;
                            }
                            let mut scope = x.clone();
                            scope.insert(a1);
                            scope.insert(a2);
                            let p = g
                                .shortest_path_avoiding(a1, a2, &scope.complement())
                                .expect("both pendants attach to the component");
                            let w = Witness::LongPrism {
                                triangle_a: [a1, v1, v2],
                                triangle_b: [a2, v4, v3],
                                paths: [p, vec![v1, v4], vec![v2, v3]],
                            };
                            debug_assert!(validate_witness(g, &w), "bad step-1 prism: {w:?}");
                            if validate_witness(g, &w) {
                                return Some(w);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Step 2, sharded by the smallest triangle vertex: find an induced net
/// (triangle v1v2v3 with pendants a1,a2,a3) and a component X seeing all
/// three pendants, then classify the attachment.
fn net_scan(g: &Graph, v1: usize) -> Result<Option<Witness>, PyramidPresent> {
    for v2 in g.neighbors(v1).iter() {
        if v2 <= v1 {
            continue;
        }
        for v3 in g.neighbors(v1).intersection(g.neighbors(v2)).iter() {
            if v3 <= v2 {
                continue;
            }
            let tri = [v1, v2, v3];
            for p1 in g.neighbors(v1).iter() {
                if tri.contains(&p1) || g.has_edge(p1, v2) || g.has_edge(p1, v3) {
                    continue;
                }
                for p2 in g.neighbors(v2).iter() {
                    if p2 == p1
                        || tri.contains(&p2)
                        || g.has_edge(p2, v1)
                        || g.has_edge(p2, v3)
                        || g.has_edge(p2, p1)
                    {
                        continue;
                    }
                    for p3 in g.neighbors(v3).iter() {
                        if p3 == p1
                            || p3 == p2
                            || tri.contains(&p3)
                            || g.has_edge(p3, v1)
                            || g.has_edge(p3, v2)
                            || g.has_edge(p3, p1)
                            || g.has_edge(p3, p2)
                        {
                            continue;
                        }
                        let pendants = [p1, p2, p3];
                        let mut removed = g.neighbors(v1).union(g.neighbors(v2));
                        removed.union_with(g.neighbors(v3));
                        for x in g.components_within(&removed.complement()) {
                            if pendants.iter().any(|&a| !g.neighbors(a).intersects(&x)) {
                                continue;
                            }
                            return classify_attachment(g, tri, pendants, &x).map(Some);
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Runs the S/T/M classification of how the pendants meet X and turns the
/// outcome into a long prism, or into the pyramid that refutes the
/// precondition.
fn classify_attachment(
    g: &Graph,
    tri: [usize; 3],
    pendants: [usize; 3],
    x: &VertexSet,
) -> Result<Witness, PyramidPresent> {
    let mut scope = x.clone();
    for &a in &pendants {
        scope.insert(a);
    }
    let (h, back) = g.induced(&scope);
    let pos = |v: usize| back.iter().position(|&p| p == v).unwrap();
    let i_h = VertexSet::from_iter(h.n(), pendants.iter().map(|&a| pos(a)));
    let c_h = i_h.complement();
    let stm = extract_stm(&h, &i_h, &c_h).expect("net attachment instance is valid");

    // Index of the pendant (hence triangle corner) a g-vertex stands for.
    let pendant_slot = |v: usize| pendants.iter().position(|&a| a == v).unwrap();

    match stm.shape {
        StmShape::T { triangle: t, legs } => {
            let t_g = t.map(|v| back[v]);
            let mut triangle_b = [0usize; 3];
            let mut paths: [Vec<usize>; 3] = Default::default();
            for (leg, &corner) in legs.iter().zip(t_g.iter()) {
                let leg_g: Vec<usize> = leg.iter().map(|&v| back[v]).collect();
                let slot = pendant_slot(*leg_g.last().unwrap());
                triangle_b[slot] = corner;
                let mut path = vec![tri[slot]];
                path.extend(leg_g.iter().rev());
                paths[slot] = path;
            }
            let w = Witness::LongPrism {
                triangle_a: tri,
                triangle_b,
                paths,
            };
            debug_assert!(validate_witness(g, &w), "bad step-2 prism: {w:?}");
            Ok(w)
        }
        StmShape::M { path, center } => {
            let path_g: Vec<usize> = path.iter().map(|&v| back[v]).collect();
            let center_g = back[center];
            let si = pendant_slot(path_g[0]);
            let sj = pendant_slot(*path_g.last().unwrap());
            let sk = pendant_slot(center_g);
            let k1 = path_g
                .iter()
                .position(|&v| g.has_edge(center_g, v))
                .unwrap();
            let k2 = path_g
                .iter()
                .rposition(|&v| g.has_edge(center_g, v))
                .unwrap();
            let (c1, c2) = (path_g[k1], path_g[k2]);
            if g.has_edge(c1, c2) {
                // The center and its two extreme contacts close the second
                // triangle of a long prism.
                let mut to_c1 = vec![tri[si]];
                to_c1.extend_from_slice(&path_g[..=k1]);
                let mut to_c2 = vec![tri[sj]];
                to_c2.extend(path_g[k2..].iter().rev());
                let w = Witness::LongPrism {
                    triangle_a: [tri[si], tri[sj], tri[sk]],
                    triangle_b: [c1, c2, center_g],
                    paths: [to_c1, to_c2, vec![tri[sk], center_g]],
                };
                debug_assert!(validate_witness(g, &w), "bad step-2 prism: {w:?}");
                Ok(w)
            } else {
                // Nonadjacent extreme contacts wrap the path into a pyramid
                // with the center as its apex.
                let mut q1 = vec![center_g];
                q1.extend(path_g[..=k1].iter().rev());
                q1.push(tri[si]);
                let mut q2 = vec![center_g];
                q2.extend_from_slice(&path_g[k2..]);
                q2.push(tri[sj]);
                let w = Witness::Pyramid {
                    apex: center_g,
                    triangle: [tri[si], tri[sj], tri[sk]],
                    paths: [q1, q2, vec![center_g, tri[sk]]],
                };
                debug_assert!(validate_witness(g, &w), "bad pyramid evidence: {w:?}");
                Err(PyramidPresent(w))
            }
        }
        StmShape::S { apex, legs } => {
            // A subdivided claw behind the net is a pyramid with its apex.
            let apex_g = back[apex];
            let mut triangle = [0usize; 3];
            let mut paths: [Vec<usize>; 3] = Default::default();
            for (idx, leg) in legs.iter().enumerate() {
                let mut leg_g: Vec<usize> = leg.iter().map(|&v| back[v]).collect();
                let slot = pendant_slot(*leg_g.last().unwrap());
                leg_g.push(tri[slot]);
                triangle[idx] = tri[slot];
                paths[idx] = leg_g;
            }
            let w = Witness::Pyramid {
                apex: apex_g,
                triangle,
                paths,
            };
            debug_assert!(validate_witness(g, &w), "bad pyramid evidence: {w:?}");
            Err(PyramidPresent(w))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{co_domino, make_config, random_chordal, ConfigSpec};

    fn prism(lengths: [usize; 3]) -> Graph {
        make_config(&ConfigSpec::Prism { lengths }).unwrap().0
    }

    #[test]
    fn step1_finds_codomino_plus_path() {
        let g = prism([2, 1, 1]);
        let w = detect_long_prism(&g, ExecMode::Sequential).unwrap().unwrap();
        assert_eq!(
            w,
            Witness::LongPrism {
                triangle_a: [0, 1, 2],
                triangle_b: [3, 4, 5],
                paths: [vec![0, 6, 3], vec![1, 4], vec![2, 5]],
            }
        );
    }

    #[test]
    fn step2_finds_net_completion() {
        let g = prism([2, 2, 2]);
        let w = detect_long_prism(&g, ExecMode::Sequential).unwrap().unwrap();
        assert_eq!(
            w,
            Witness::LongPrism {
                triangle_a: [0, 1, 2],
                triangle_b: [3, 4, 5],
                paths: [vec![0, 6, 3], vec![1, 7, 4], vec![2, 8, 5]],
            }
        );
    }

    #[test]
    fn short_prism_and_bare_codomino_yield_nothing() {
        assert_eq!(detect_long_prism(&prism([1, 1, 1]), ExecMode::Sequential), Ok(None));
        assert_eq!(detect_long_prism(&co_domino(), ExecMode::Sequential), Ok(None));
    }

    #[test]
    fn chordal_graphs_are_prism_free() {
        for seed in 0..15 {
            let g = random_chordal(14, seed);
            assert_eq!(detect_long_prism(&g, ExecMode::Sequential), Ok(None));
        }
    }

    #[test]
    fn claw_behind_net_reports_pyramid() {
        // This is pyramid(2,2,2): triangle 0,1,2; apex 6 reached through the
        // net pendants.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (6, 3),
                (6, 4),
                (6, 5),
            ],
        );
        let err = detect_long_prism(&g, ExecMode::Sequential).unwrap_err();
        let PyramidPresent(w) = err;
        assert!(validate_witness(&g, &w));
        assert_eq!(
            w,
            Witness::Pyramid {
                apex: 6,
                triangle: [0, 1, 2],
                paths: [vec![6, 3, 0], vec![6, 4, 1], vec![6, 5, 2]],
            }
        );
    }

    #[test]
    fn split_attachment_reports_pyramid() {
        let g = Graph::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (6, 7),
                (7, 8),
                (8, 4),
                (5, 6),
                (5, 8),
            ],
        );
        let err = detect_long_prism(&g, ExecMode::Sequential).unwrap_err();
        let PyramidPresent(w) = err;
        assert!(validate_witness(&g, &w));
        assert_eq!(
            w,
            Witness::Pyramid {
                apex: 5,
                triangle: [0, 1, 2],
                paths: [vec![5, 6, 3, 0], vec![5, 8, 4, 1], vec![5, 2]],
            }
        );
    }

    #[test]
    fn both_modes_agree() {
        for lengths in [[2, 1, 1], [3, 2, 1], [2, 2, 2], [1, 1, 1]] {
            let g = prism(lengths);
            assert_eq!(
                detect_long_prism(&g, ExecMode::Sequential),
                detect_long_prism(&g, ExecMode::Parallel)
            );
        }
    }
}
