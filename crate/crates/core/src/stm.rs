//! Classification of how three independent attachment vertices meet a
//! connected component: the result is a subdivided claw (S), a triangle with
//! three tails (T), or a path with a center (M), with the attachments as the
//! three extremities.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::witness::induces_exactly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmShape {
    /// Subdivision of K₁,₃: three paths from the apex to the extremities.
    S { apex: usize, legs: [Vec<usize>; 3] },
    /// Triangle with a path from each corner to an extremity.
    T {
        triangle: [usize; 3],
        legs: [Vec<usize>; 3],
    },
    /// Chordless path between two extremities plus a center adjacent to at
    /// least two interior vertices and to neither endpoint.
    M { path: Vec<usize>, center: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StmGraph {
    pub shape: StmShape,
    /// The three attachment vertices; for S and T these end the legs in
    /// order, for M they are the path endpoints plus the center.
    pub extremities: [usize; 3],
}

impl StmGraph {
    pub fn kind_name(&self) -> &'static str {
        match self.shape {
            StmShape::S { .. } => "S",
            StmShape::T { .. } => "T",
            StmShape::M { .. } => "M",
        }
    }

    /// All vertices of the classified subgraph, sorted.
    pub fn vertex_list(&self) -> Vec<usize> {
        let mut out: Vec<usize> = match &self.shape {
            StmShape::S { legs, .. } | StmShape::T { legs, .. } => {
                legs.iter().flatten().copied().collect()
            }
            StmShape::M { path, center } => {
                let mut v = path.clone();
                v.push(*center);
                v
            }
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Structural check: the claimed shape is induced in g, has exactly the
/// claimed extremities, and meets its class definition.
pub fn validate_stm(g: &Graph, s: &StmGraph) -> bool {
    let ex = s.extremities;
    if ex[0] == ex[1] || ex[0] == ex[2] || ex[1] == ex[2] {
        return false;
    }
    if ex.iter().any(|&v| v >= g.n()) {
        return false;
    }
    match &s.shape {
        StmShape::S { apex, legs } => {
            let mut expected = Vec::new();
            for (leg, &e) in legs.iter().zip(ex.iter()) {
                if leg.len() < 2 || leg[0] != *apex || *leg.last().unwrap() != e {
                    return false;
                }
                for w in leg.windows(2) {
                    expected.push((w[0], w[1]));
                }
            }
            // Legs may share only the apex.
            let mut all = vec![*apex];
            all.extend(legs.iter().flatten().copied().filter(|&v| v != *apex));
            let mut tails = all[1..].to_vec();
            tails.sort_unstable();
            let distinct = tails.windows(2).all(|w| w[0] != w[1]);
            distinct && induces_exactly(g, &all, &expected)
        }
        StmShape::T { triangle, legs } => {
            let [t1, t2, t3] = *triangle;
            if t1 == t2 || t1 == t3 || t2 == t3 {
                return false;
            }
            let mut expected = vec![(t1, t2), (t1, t3), (t2, t3)];
            for ((leg, &t), &e) in legs.iter().zip(triangle.iter()).zip(ex.iter()) {
                if leg.len() < 2 || leg[0] != t || *leg.last().unwrap() != e {
                    return false;
                }
                for w in leg.windows(2) {
                    expected.push((w[0], w[1]));
                }
            }
            let all: Vec<usize> = legs.iter().flatten().copied().collect();
            let mut sorted = all.clone();
            sorted.sort_unstable();
            let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
            distinct && induces_exactly(g, &all, &expected)
        }
        StmShape::M { path, center } => {
            if path.len() < 2 || path.contains(center) {
                return false;
            }
            let (first, last) = (path[0], *path.last().unwrap());
            if [first, last, *center] != ex {
                return false;
            }
            let mut expected: Vec<(usize, usize)> =
                path.windows(2).map(|w| (w[0], w[1])).collect();
            let mut hits = 0;
            for &v in path.iter() {
                if g.has_edge(*center, v) {
                    expected.push((*center, v));
                    hits += 1;
                }
            }
            if hits < 2 || g.has_edge(*center, first) || g.has_edge(*center, last) {
                return false;
            }
            let mut all = path.clone();
            all.push(*center);
            let mut sorted = all.clone();
            sorted.sort_unstable();
            let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
            distinct && induces_exactly(g, &all, &expected)
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StmError {
    #[error("the attachment set must be three pairwise nonadjacent vertices")]
    BadAttachments,
    #[error("C must be a connected component of the graph minus the attachments")]
    NotComponent,
    #[error("every attachment vertex needs a neighbor in C")]
    NotAttached,
}

/// Classifies how the three independent vertices of `i_set` attach to the
/// component `c_set`, returning an induced S, T, or M subgraph of
/// g[C ∪ I] whose extremities are exactly I.
pub fn extract_stm(g: &Graph, i_set: &VertexSet, c_set: &VertexSet) -> Result<StmGraph, StmError> {
    extract_stm_traced(g, i_set, c_set).map(|(s, _)| s)
}

/// Like [`extract_stm`], also reporting how many rewrite steps the path pair
/// went through (always at most n, since every rewrite strictly shrinks the
/// working vertex set).
pub fn extract_stm_traced(
    g: &Graph,
    i_set: &VertexSet,
    c_set: &VertexSet,
) -> Result<(StmGraph, usize), StmError> {
    let ext = check_preconditions(g, i_set, c_set)?;
    let [mut a1, mut a2, a3] = ext;

    // P: shortest (hence chordless) a1–a2 path with interior in C.
    let mut blocked = c_set.complement();
    blocked.remove(a1);
    blocked.remove(a2);
    let mut p = g
        .shortest_path_avoiding(a1, a2, &blocked)
        .expect("attachments reach a connected component");

    // P': shortest path from a3, through C minus P, to the first vertex
    // with a neighbor in P's interior. Vertices before its last entry have
    // no such neighbor, which every rewrite below preserves.
    let mut pp = initial_probe(g, a3, c_set, &p);

    let mut steps = 0usize;
    loop {
        assert!(steps <= g.n(), "rewrite loop exceeded its vertex budget");
        let u = *pp.last().unwrap();
        let interior = &p[1..p.len() - 1];

        if u == a3 {
            // a3 attaches to P directly: one neighbor makes an S with that
            // neighbor as apex, several make an M centered at a3.
            let nbrs: Vec<usize> = interior
                .iter()
                .copied()
                .filter(|&w| g.has_edge(a3, w))
                .collect();
            let shape = if nbrs.len() == 1 {
                let k = p.iter().position(|&w| w == nbrs[0]).unwrap();
                let mut to_a1: Vec<usize> = p[..=k].to_vec();
                to_a1.reverse();
                StmShape::S {
                    apex: nbrs[0],
                    legs: [to_a1, p[k..].to_vec(), vec![nbrs[0], a3]],
                }
            } else {
                StmShape::M {
                    path: p.clone(),
                    center: a3,
                }
            };
            return Ok((finish(g, shape), steps));
        }

        let sees1 = pp.iter().any(|&w| g.has_edge(a1, w));
        let sees2 = pp.iter().any(|&w| g.has_edge(a2, w));

        if sees1 && sees2 {
            // Both ends of P attach to P': reroute P through the earliest
            // stretch of P' and cut P' down to what precedes it.
            let alpha_min = pp.iter().position(|&w| g.has_edge(a1, w)).unwrap();
            let beta_min = pp.iter().position(|&w| g.has_edge(a2, w)).unwrap();
            if alpha_min > beta_min {
                std::mem::swap(&mut a1, &mut a2);
                p.reverse();
            }
            let j = pp.iter().position(|&w| g.has_edge(a2, w)).unwrap();
            let i = (0..=j)
                .rev()
                .find(|&l| g.has_edge(a1, pp[l]))
                .expect("a1 attaches at or before a2's first attachment");
            debug_assert!(i >= 1, "a3 is independent of a1");
            let mut new_p = vec![a1];
            new_p.extend_from_slice(&pp[i..=j]);
            new_p.push(a2);
            pp.truncate(i);
            p = new_p;
        } else if sees1 || sees2 {
            // Exactly one end attaches; relabel so it is a2.
            if sees1 {
                std::mem::swap(&mut a1, &mut a2);
                p.reverse();
            }
            let v1 = p[1..p.len() - 1]
                .iter()
                .copied()
                .find(|&w| g.has_edge(u, w))
                .expect("u has a neighbor in P's interior");
            let k = p.iter().position(|&w| w == v1).unwrap();
            if g.has_edge(v1, a2) {
                // v1 is P's last interior vertex: a1..v1 + reversed P' is a
                // chordless a1–a3 path and a2 sees it at least twice.
                debug_assert_eq!(k, p.len() - 2);
                let mut path = p[..=k].to_vec();
                path.extend(pp.iter().rev());
                let shape = StmShape::M { path, center: a2 };
                return Ok((finish(g, shape), steps));
            }
            let jstar = (0..pp.len())
                .rev()
                .find(|&l| g.has_edge(a2, pp[l]))
                .expect("a2 sees P'");
            debug_assert!(jstar >= 1, "a3 is independent of a2");
            let mut new_p = p[..=k].to_vec();
            new_p.extend(pp[jstar..].iter().rev());
            new_p.push(a2);
            pp.truncate(jstar);
            p = new_p;
        } else {
            // Neither end attaches to P'. Look at u's extreme neighbors in
            // P's interior.
            let v1 = interior
                .iter()
                .copied()
                .find(|&w| g.has_edge(u, w))
                .expect("u has a neighbor in P's interior");
            let v2 = interior
                .iter()
                .copied()
                .rev()
                .find(|&w| g.has_edge(u, w))
                .unwrap();
            let k1 = p.iter().position(|&w| w == v1).unwrap();
            if v1 == v2 {
                let mut to_a1: Vec<usize> = p[..=k1].to_vec();
                to_a1.reverse();
                let mut to_a3 = vec![v1];
                to_a3.extend(pp.iter().rev());
                let shape = StmShape::S {
                    apex: v1,
                    legs: [to_a1, p[k1..].to_vec(), to_a3],
                };
                return Ok((finish(g, shape), steps));
            }
            let k2 = p.iter().position(|&w| w == v2).unwrap();
            if g.has_edge(v1, v2) {
                let mut to_a1: Vec<usize> = p[..=k1].to_vec();
                to_a1.reverse();
                let to_a3: Vec<usize> = pp.iter().rev().copied().collect();
                let shape = StmShape::T {
                    triangle: [v1, v2, u],
                    legs: [to_a1, p[k2..].to_vec(), to_a3],
                };
                return Ok((finish(g, shape), steps));
            }
            // Shortcut P through u, dropping everything strictly between
            // v1 and v2; u's predecessor keeps the probe invariant alive.
            let mut new_p = p[..=k1].to_vec();
            new_p.push(u);
            new_p.extend_from_slice(&p[k2..]);
            pp.pop();
            p = new_p;
        }
        steps += 1;
    }
}

fn check_preconditions(
    g: &Graph,
    i_set: &VertexSet,
    c_set: &VertexSet,
) -> Result<[usize; 3], StmError> {
    let ext = i_set.to_vec();
    if ext.len() != 3 || ext.iter().any(|&v| v >= g.n()) {
        return Err(StmError::BadAttachments);
    }
    if g.has_edge(ext[0], ext[1]) || g.has_edge(ext[0], ext[2]) || g.has_edge(ext[1], ext[2]) {
        return Err(StmError::BadAttachments);
    }
    if c_set.is_empty() || c_set.intersects(i_set) || c_set.iter().any(|v| v >= g.n()) {
        return Err(StmError::NotComponent);
    }
    if g.components_within(c_set).len() != 1 {
        return Err(StmError::NotComponent);
    }
    // Maximality: C may only border the attachments.
    if !g.neighborhood(c_set).is_subset(i_set) {
        return Err(StmError::NotComponent);
    }
    for &a in &ext {
        if !g.neighbors(a).intersects(c_set) {
            return Err(StmError::NotAttached);
        }
    }
    Ok([ext[0], ext[1], ext[2]])
}

/// Layered search from a3 through C∖interior(P), stopped at the first layer
/// holding a vertex with a neighbor in P's interior; ties take the smallest
/// vertex, parents the smallest earlier-layer neighbor.
fn initial_probe(g: &Graph, a3: usize, c_set: &VertexSet, p: &[usize]) -> Vec<usize> {
    let interior = VertexSet::from_iter(g.n(), p[1..p.len() - 1].iter().copied());
    let target_zone = g.neighborhood(&interior);
    if target_zone.contains(a3) {
        return vec![a3];
    }
    let mut allowed = c_set.difference(&interior);
    allowed.insert(a3);
    let mut parent = vec![usize::MAX; g.n()];
    let mut visited = VertexSet::empty(g.n());
    visited.insert(a3);
    let mut frontier = visited.clone();
    loop {
        let mut next = VertexSet::empty(g.n());
        for v in frontier.iter() {
            let mut fresh = g.neighbors(v).intersection(&allowed);
            fresh.difference_with(&visited);
            for w in fresh.iter() {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                }
                next.insert(w);
            }
        }
        assert!(!next.is_empty(), "C is connected, so the probe must land");
        visited.union_with(&next);
        if let Some(u) = next.intersection(&target_zone).first() {
            let mut path = vec![u];
            let mut cur = u;
            while parent[cur] != usize::MAX {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        frontier = next;
    }
}

fn finish(g: &Graph, shape: StmShape) -> StmGraph {
    let extremities = match &shape {
        StmShape::S { legs, .. } | StmShape::T { legs, .. } => {
            [legs[0][legs[0].len() - 1], *legs[1].last().unwrap(), *legs[2].last().unwrap()]
        }
        StmShape::M { path, center } => [path[0], *path.last().unwrap(), *center],
    };
    let out = StmGraph { shape, extremities };
    debug_assert!(validate_stm(g, &out), "classifier produced a bad shape: {out:?}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{net, random_graph};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn claw_classifies_as_s() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let (s, steps) = extract_stm_traced(&g, &set(4, &[1, 2, 3]), &set(4, &[0])).unwrap();
        assert_eq!(steps, 0);
        assert_eq!(
            s.shape,
            StmShape::S {
                apex: 0,
                legs: [vec![0, 1], vec![0, 2], vec![0, 3]],
            }
        );
        assert!(validate_stm(&g, &s));
    }

    #[test]
    fn net_classifies_as_t() {
        let g = net();
        let (s, steps) = extract_stm_traced(&g, &set(6, &[0, 1, 2]), &set(6, &[3, 4, 5])).unwrap();
        assert_eq!(steps, 0);
        match &s.shape {
            StmShape::T { triangle, .. } => {
                let mut t = *triangle;
                t.sort_unstable();
                assert_eq!(t, [3, 4, 5]);
            }
            other => panic!("expected T, got {other:?}"),
        }
        let mut ex = s.extremities;
        ex.sort_unstable();
        assert_eq!(ex, [0, 1, 2]);
    }

    #[test]
    fn two_fan_classifies_as_m() {
        // Path 0-1-2-3 with 4 adjacent to the two interior vertices.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]);
        let (s, steps) = extract_stm_traced(&g, &set(5, &[0, 3, 4]), &set(5, &[1, 2])).unwrap();
        assert_eq!(steps, 0);
        assert_eq!(
            s.shape,
            StmShape::M {
                path: vec![0, 1, 2, 3],
                center: 4,
            }
        );
    }

    #[test]
    fn far_attachment_rewrites_once_to_s() {
        // P = 0-3-4-5-1, probe lands on 6 adjacent to p1 and p3; the two
        // nonadjacent contacts shortcut P through 6.
        let g = Graph::from_edges(
            7,
            &[(0, 3), (3, 4), (4, 5), (5, 1), (2, 6), (6, 3), (6, 5)],
        );
        let (s, steps) =
            extract_stm_traced(&g, &set(7, &[0, 1, 2]), &set(7, &[3, 4, 5, 6])).unwrap();
        assert_eq!(steps, 1);
        assert_eq!(
            s.shape,
            StmShape::S {
                apex: 6,
                legs: [vec![6, 3, 0], vec![6, 5, 1], vec![6, 2]],
            }
        );
    }

    #[test]
    fn both_ends_attach_rewrites_to_s() {
        let g = Graph::from_edges(
            7,
            &[
                (0, 3),
                (3, 1),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 3),
                (0, 4),
                (1, 5),
            ],
        );
        let (s, steps) =
            extract_stm_traced(&g, &set(7, &[0, 1, 2]), &set(7, &[3, 4, 5, 6])).unwrap();
        assert_eq!(steps, 1);
        assert_eq!(
            s.shape,
            StmShape::S {
                apex: 4,
                legs: [vec![4, 0], vec![4, 5, 1], vec![4, 2]],
            }
        );
    }

    #[test]
    fn one_end_attaches_at_last_interior_gives_m() {
        let g = Graph::from_edges(
            7,
            &[(0, 3), (3, 1), (2, 4), (4, 5), (5, 6), (6, 3), (1, 5)],
        );
        let (s, steps) =
            extract_stm_traced(&g, &set(7, &[0, 1, 2]), &set(7, &[3, 4, 5, 6])).unwrap();
        assert_eq!(steps, 0);
        assert_eq!(
            s.shape,
            StmShape::M {
                path: vec![0, 3, 6, 5, 4, 2],
                center: 1,
            }
        );
    }

    #[test]
    fn one_end_attaches_deeper_rewrites_then_s() {
        let g = Graph::from_edges(
            8,
            &[
                (0, 3),
                (3, 7),
                (7, 1),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 3),
                (1, 5),
            ],
        );
        let (s, steps) =
            extract_stm_traced(&g, &set(8, &[0, 1, 2]), &set(8, &[3, 4, 5, 6, 7])).unwrap();
        assert_eq!(steps, 1);
        assert_eq!(
            s.shape,
            StmShape::S {
                apex: 5,
                legs: [vec![5, 6, 3, 0], vec![5, 1], vec![5, 4, 2]],
            }
        );
    }

    #[test]
    fn precondition_violations_are_reported() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert_eq!(
            extract_stm(&g, &set(4, &[1, 2, 3]), &set(4, &[0])),
            Err(StmError::BadAttachments)
        );
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            extract_stm(&g, &set(5, &[1, 2, 3]), &set(5, &[0, 4])),
            Err(StmError::NotComponent)
        );
        let h = Graph::from_edges(5, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(
            extract_stm(&h, &set(5, &[0, 1, 2]), &set(5, &[4])),
            Err(StmError::NotAttached)
        );
        // C connected but not maximal: a non-attachment vertex borders it.
        let k = Graph::from_edges(6, &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(
            extract_stm(&k, &set(6, &[0, 1, 2]), &set(6, &[3])),
            Err(StmError::NotComponent)
        );
    }

    /// Random valid instances: build a graph, pick an independent triple,
    /// and use any component of the rest that all three attach to.
    #[test]
    fn random_instances_classify_and_terminate() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut done = 0;
        let mut seed = 0u64;
        while done < 250 {
            seed += 1;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(5..=11);
            let g = random_graph(n, rng.gen_range(0.15..0.6), seed ^ 0xabcd);
            let Some((i_set, c_set)) = pick_instance(&g, &mut rng) else {
                continue;
            };
            let (s, steps) = extract_stm_traced(&g, &i_set, &c_set)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert!(validate_stm(&g, &s), "seed {seed}: invalid {s:?}");
            assert!(steps <= n, "seed {seed}: {steps} rewrites on {n} vertices");
            let mut ex = s.extremities.to_vec();
            ex.sort_unstable();
            assert_eq!(ex, i_set.to_vec(), "seed {seed}: extremities drifted");
            done += 1;
        }
    }

    fn pick_instance(g: &Graph, rng: &mut impl rand::Rng) -> Option<(VertexSet, VertexSet)> {
        let n = g.n();
        let mut verts: Vec<usize> = (0..n).collect();
        for _ in 0..20 {
            use rand::seq::SliceRandom;
            verts.shuffle(rng);
            let mut triple = Vec::new();
            for &v in &verts {
                if triple.iter().all(|&w| !g.has_edge(v, w)) {
                    triple.push(v);
                    if triple.len() == 3 {
                        break;
                    }
                }
            }
            if triple.len() < 3 {
                return None;
            }
            let i_set = VertexSet::from_iter(n, triple.iter().copied());
            let rest = i_set.complement();
            for c in g.components_within(&rest) {
                if triple.iter().all(|&a| g.neighbors(a).intersects(&c)) {
                    return Some((i_set, c));
                }
            }
        }
        None
    }
}
