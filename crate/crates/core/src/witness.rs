//! Configuration witnesses and their validation.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::Serialize;

/// Certificate that a graph contains one of the four configurations.
///
/// Path conventions: theta paths run hub1..hub2 inclusive; pyramid paths run
/// apex..bᵢ inclusive; prism paths run aᵢ..bᵢ inclusive. The broken-wheel
/// rim lists the hole in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Theta {
        hubs: [usize; 2],
        paths: [Vec<usize>; 3],
    },
    Pyramid {
        apex: usize,
        triangle: [usize; 3],
        paths: [Vec<usize>; 3],
    },
    LongPrism {
        triangle_a: [usize; 3],
        triangle_b: [usize; 3],
        paths: [Vec<usize>; 3],
    },
    BrokenWheel {
        rim: Vec<usize>,
        center: usize,
    },
}

impl Witness {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Witness::Theta { .. } => "theta",
            Witness::Pyramid { .. } => "pyramid",
            Witness::LongPrism { .. } => "long-prism",
            Witness::BrokenWheel { .. } => "broken-wheel",
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = match self {
            Witness::Theta { paths, .. } => paths.iter().flatten().copied().collect(),
            Witness::Pyramid {
                apex,
                triangle,
                paths,
            } => {
                let mut v: Vec<usize> = paths.iter().flatten().copied().collect();
                v.push(*apex);
                v.extend_from_slice(triangle);
                v
            }
            Witness::LongPrism {
                triangle_a,
                triangle_b,
                paths,
            } => {
                let mut v: Vec<usize> = paths.iter().flatten().copied().collect();
                v.extend_from_slice(triangle_a);
                v.extend_from_slice(triangle_b);
                v
            }
            Witness::BrokenWheel { rim, center } => {
                let mut v = rim.clone();
                v.push(*center);
                v
            }
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Edge lengths of the rim arcs between consecutive center neighbors, paired
/// with the rim index of each arc's starting spoke, in cyclic rim order.
pub fn wheel_sectors(g: &Graph, rim: &[usize], center: usize) -> Vec<(usize, usize)> {
    let spokes: Vec<usize> = (0..rim.len()).filter(|&i| g.has_edge(center, rim[i])).collect();
    let k = rim.len();
    spokes
        .iter()
        .enumerate()
        .map(|(j, &i)| {
            let next = spokes[(j + 1) % spokes.len()];
            ((next + k - i - 1) % k + 1, i)
        })
        .map(|(len, i)| (i, len))
        .collect()
}

fn all_distinct(vs: &[usize]) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Checks that among `vertices`, g has exactly the edges in `expected`.
pub(crate) fn induces_exactly(g: &Graph, vertices: &[usize], expected: &[(usize, usize)]) -> bool {
    let norm = |(u, v): (usize, usize)| if u < v { (u, v) } else { (v, u) };
    let mut want: Vec<(usize, usize)> = expected.iter().copied().map(norm).collect();
    want.sort_unstable();
    want.dedup();
    let mut have = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.has_edge(u, v) {
                have.push(norm((u, v)));
            }
        }
    }
    have.sort_unstable();
    have == want
}

fn path_edges(p: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.windows(2).map(|w| (w[0], w[1]))
}

/// True iff the witness's vertex set induces in `g` exactly the claimed
/// configuration: every required edge present, every other pair a non-edge,
/// and all length constraints satisfied.
pub fn validate_witness(g: &Graph, w: &Witness) -> bool {
    let in_range = w.vertices().iter().all(|&v| v < g.n());
    if !in_range {
        return false;
    }
    match w {
        Witness::Theta { hubs, paths } => {
            let [h1, h2] = *hubs;
            if h1 == h2 {
                return false;
            }
            let mut all = vec![h1, h2];
            for p in paths {
                if p.len() < 3 || p[0] != h1 || *p.last().unwrap() != h2 {
                    return false;
                }
                all.extend_from_slice(&p[1..p.len() - 1]);
            }
            if !all_distinct(&all) {
                return false;
            }
            let expected: Vec<(usize, usize)> = paths.iter().flat_map(|p| path_edges(p)).collect();
            induces_exactly(g, &all, &expected)
        }
        Witness::Pyramid {
            apex,
            triangle,
            paths,
        } => {
            let mut all = vec![*apex];
            for (p, &b) in paths.iter().zip(triangle) {
                if p.len() < 2 || p[0] != *apex || *p.last().unwrap() != b {
                    return false;
                }
                all.extend_from_slice(&p[1..]);
            }
            if !all_distinct(&all) {
                return false;
            }
            if paths.iter().filter(|p| p.len() >= 3).count() < 2 {
                return false;
            }
            let mut expected: Vec<(usize, usize)> =
                paths.iter().flat_map(|p| path_edges(p)).collect();
            expected.push((triangle[0], triangle[1]));
            expected.push((triangle[1], triangle[2]));
            expected.push((triangle[0], triangle[2]));
            induces_exactly(g, &all, &expected)
        }
        Witness::LongPrism {
            triangle_a,
            triangle_b,
            paths,
        } => {
            let mut all = Vec::new();
            for (i, p) in paths.iter().enumerate() {
                if p.len() < 2 || p[0] != triangle_a[i] || *p.last().unwrap() != triangle_b[i] {
                    return false;
                }
                all.extend_from_slice(p);
            }
            if !all_distinct(&all) {
                return false;
            }
            if !paths.iter().any(|p| p.len() >= 3) {
                return false;
            }
            let mut expected: Vec<(usize, usize)> =
                paths.iter().flat_map(|p| path_edges(p)).collect();
            for t in [triangle_a, triangle_b] {
                expected.push((t[0], t[1]));
                expected.push((t[1], t[2]));
                expected.push((t[0], t[2]));
            }
            induces_exactly(g, &all, &expected)
        }
        Witness::BrokenWheel { rim, center } => {
            if rim.contains(center) || !g.is_hole(rim) {
                return false;
            }
            let sectors = wheel_sectors(g, rim, *center);
            sectors.len() >= 3 && sectors.iter().filter(|&&(_, len)| len >= 2).count() >= 2
        }
    }
}

/// Canonical hole sequence of `s` in `g` if `g[s]` is a single chordless
/// cycle spanning `s`: starts at the smallest vertex, second entry is its
/// smaller neighbor.
fn spanning_hole(g: &Graph, s: &VertexSet) -> Option<Vec<usize>> {
    let k = s.len();
    if k < 4 {
        return None;
    }
    for v in s.iter() {
        if g.neighbors(v).intersection(s).len() != 2 {
            return None;
        }
    }
    let start = s.first().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).intersection(s).first().unwrap();
    while cur != start {
        cycle.push(cur);
        let mut nbrs = g.neighbors(cur).intersection(s);
        nbrs.remove(prev);
        prev = cur;
        cur = nbrs.first().unwrap();
    }
    // 2-regular but possibly several disjoint cycles; spanning means one.
    if cycle.len() == k {
        Some(cycle)
    } else {
        None
    }
}

/// Does `s` induce a broken wheel centered at `x`? The rest of `s` must form
/// a spanning hole, `x` needs at least three neighbors on it, and at least
/// two sectors must have length two or more.
pub fn is_broken_wheel_centered(g: &Graph, s: &VertexSet, x: usize) -> Option<Witness> {
    if !s.contains(x) {
        return None;
    }
    let mut rest = s.clone();
    rest.remove(x);
    let rim = spanning_hole(g, &rest)?;
    let w = Witness::BrokenWheel { rim, center: x };
    if validate_witness(g, &w) {
        Some(w)
    } else {
        None
    }
}

/// Does `s` induce a broken wheel for some choice of center?
pub fn is_broken_wheel(g: &Graph, s: &VertexSet) -> Option<Witness> {
    s.iter().find_map(|x| is_broken_wheel_centered(g, s, x))
}
