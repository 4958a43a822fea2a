//! Broken-wheel detection for (theta, pyramid, long prism)-free graphs.
//! Step 1 catches every wheel on six or seven vertices by enumerating short
//! holes and candidate centers. Step 2 enumerates frames (a center, four
//! spokes, and their rim neighbors) and completes each frame with four
//! shortest paths; a frame of an optimal wheel always completes to a wheel.

use crate::bitset::VertexSet;
use crate::exec::{scan_first, ExecMode};
use crate::graph::Graph;
use crate::witness::{is_broken_wheel_centered, Witness};

/// The 13 labeled vertices steering step 2. The rim is oriented
/// a ... b ... c ... d ... back to a, with the two long sectors running
/// a to b and c to d. For each spoke y, `y_plus` is its successor and
/// `y_minus` its predecessor around the rim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub a_plus: usize,
    pub b_plus: usize,
    pub c_plus: usize,
    pub d_plus: usize,
    pub a_minus: usize,
    pub b_minus: usize,
    pub c_minus: usize,
    pub d_minus: usize,
}

/// Structural conditions every frame of a real wheel satisfies.
pub fn frame_invariants_hold(g: &Graph, f: &Frame) -> bool {
    let rim = [
        f.a, f.b, f.c, f.d, f.a_plus, f.b_plus, f.c_plus, f.d_plus, f.a_minus, f.b_minus,
        f.c_minus, f.d_minus,
    ];
    if rim.contains(&f.x) {
        return false;
    }
    if [f.a, f.b, f.c, f.d].iter().any(|&y| !g.has_edge(f.x, y)) {
        return false;
    }
    if f.a == f.b || f.c == f.d || g.has_edge(f.a, f.b) || g.has_edge(f.c, f.d) {
        return false;
    }
    if f.b == f.c && f.d == f.a {
        return false;
    }
    let nx = g.closed_neighborhood_of(f.x);
    let sector_ends = [
        (f.a, f.a_plus),
        (f.b, f.b_minus),
        (f.c, f.c_plus),
        (f.d, f.d_minus),
    ];
    if sector_ends
        .iter()
        .any(|&(y, e)| !g.has_edge(y, e) || nx.contains(e))
    {
        return false;
    }
    let arc_ends = [
        (f.a, f.a_minus),
        (f.b, f.b_plus),
        (f.c, f.c_minus),
        (f.d, f.d_plus),
    ];
    if arc_ends.iter().any(|&(y, e)| !g.has_edge(y, e)) {
        return false;
    }
    if f.b == f.c && (f.b_plus != f.c_plus || f.b_minus != f.c_minus) {
        return false;
    }
    if f.d == f.a && (f.d_plus != f.a_plus || f.d_minus != f.a_minus) {
        return false;
    }
    true
}

/// Finds an induced broken wheel in a (theta, pyramid, long prism)-free
/// graph, or proves there is none. On input violating the precondition any
/// wheel returned is still genuine, but the search may miss.
pub fn detect_broken_wheel(g: &Graph, mode: ExecMode) -> Option<Witness> {
    scan_first(mode, g.n(), |s| small_wheel_scan(g, s))
        .or_else(|| scan_first(mode, g.n(), |x| frame_scan(g, x)))
}

/// Step 1, sharded by the smallest rim vertex: every broken wheel on six or
/// seven vertices is a hole of length five or six plus a center with at
/// least three neighbors on it.
fn small_wheel_scan(g: &Graph, s: usize) -> Option<Witness> {
    let mut path = vec![s, 0];
    for p1 in g.neighbors(s).iter() {
        if p1 <= s {
            continue;
        }
        path[1] = p1;
        if let Some(w) = short_hole_rec(g, &mut path, &VertexSet::from_iter(g.n(), [])) {
            return Some(w);
        }
        path.truncate(2);
    }
    None
}

/// Grows an induced path from the smallest rim vertex, closing it into holes
/// of length five or six and testing each hole against every candidate
/// center. `blocked` collects neighborhoods of interior path vertices.
fn short_hole_rec(g: &Graph, path: &mut Vec<usize>, blocked: &VertexSet) -> Option<Witness> {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() >= 4 {
        for w in g.neighbors(last).intersection(g.neighbors(s)).iter() {
            if w <= path[1] || blocked.contains(w) {
                continue;
            }
            let mut rim = VertexSet::from_iter(g.n(), path.iter().copied());
            rim.insert(w);
            for x in 0..g.n() {
                if rim.contains(x) || g.neighbors(x).intersection(&rim).len() < 3 {
                    continue;
                }
                let mut hull = rim.clone();
                hull.insert(x);
                if let Some(witness) = is_broken_wheel_centered(g, &hull, x) {
                    return Some(witness);
                }
            }
        }
    }
    if path.len() < 5 {
        let mut next_blocked = blocked.clone();
        next_blocked.union_with(g.neighbors(last));
        for v in g.neighbors(last).iter() {
            if v <= s || blocked.contains(v) || g.has_edge(v, s) {
                continue;
            }
            path.push(v);
            if let Some(w) = short_hole_rec(g, path, &next_blocked) {
                return Some(w);
            }
            path.pop();
        }
    }
    None
}

/// Step 2, sharded by the center x. Long-sector interiors avoid N[x], so
/// each lives inside one component of G minus N[x]; spokes and their sector
/// neighbors are enumerated per component, arc neighbors globally.
fn frame_scan(g: &Graph, x: usize) -> Option<Witness> {
    let nx = g.closed_neighborhood_of(x);
    let comps = g.components_within(&nx.complement());
    if comps.is_empty() {
        return None;
    }
    let attach: Vec<Vec<usize>> = comps
        .iter()
        .map(|k| {
            g.neighbors(x)
                .iter()
                .filter(|&y| g.neighbors(y).intersects(k))
                .collect()
        })
        .collect();
    for (k1, att1) in comps.iter().zip(&attach) {
        for &a in att1 {
            for &b in att1 {
                if a == b || g.has_edge(a, b) {
                    continue;
                }
                let na = g.closed_neighborhood_of(a);
                let nb = g.closed_neighborhood_of(b);
                for a_plus in g.neighbors(a).intersection(k1).iter() {
                    for b_minus in g.neighbors(b).intersection(k1).iter() {
                        // Sector interior endpoints may only meet the far
                        // spoke by coinciding (a sector of length two).
                        if a_plus != b_minus && (nb.contains(a_plus) || na.contains(b_minus)) {
                            continue;
                        }
                        for (k2, att2) in comps.iter().zip(&attach) {
                            if let Some(w) = complete_sector_pair(
                                g,
                                x,
                                &nx,
                                (a, b, a_plus, b_minus, &na, &nb),
                                (k2, att2),
                            ) {
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

type SectorSide<'a> = (usize, usize, usize, usize, &'a VertexSet, &'a VertexSet);

/// An arc's rim-neighbor pair together with its computed connecting path.
type ArcChoice = ((usize, usize), Option<Vec<usize>>);

/// Chooses the second long sector c..d inside component k2, then completes
/// the frame's connecting arcs and runs the final wheel test.
fn complete_sector_pair(
    g: &Graph,
    x: usize,
    nx: &VertexSet,
    p_side: SectorSide,
    (k2, att2): (&VertexSet, &Vec<usize>),
) -> Option<Witness> {
    let (a, b, a_plus, b_minus, na, nb) = p_side;
    for &c in att2 {
        if c == a {
            continue;
        }
        for &d in att2 {
            if c == d || d == b || g.has_edge(c, d) || (b == c && d == a) {
                continue;
            }
            let nc = g.closed_neighborhood_of(c);
            let nd = g.closed_neighborhood_of(d);
            // Sector interiors only touch their own endpoints among the
            // four spokes.
            if c != b && (nc.contains(a_plus) || nc.contains(b_minus)) {
                continue;
            }
            if d != a && (nd.contains(a_plus) || nd.contains(b_minus)) {
                continue;
            }
            let mut arc_forbidden = na.union(nb);
            arc_forbidden.union_with(&nc);
            arc_forbidden.union_with(&nd);
            let sector_forbidden = arc_forbidden.union(nx);
            for c_plus in g.neighbors(c).intersection(k2).iter() {
                if d != a && na.contains(c_plus) {
                    continue;
                }
                if b != c && nb.contains(c_plus) {
                    continue;
                }
                if cross_sector_clash(g, c_plus, a_plus, b_minus) {
                    continue;
                }
                for d_minus in g.neighbors(d).intersection(k2).iter() {
                    if c_plus != d_minus && (nd.contains(c_plus) || nc.contains(d_minus)) {
                        continue;
                    }
                    if d != a && na.contains(d_minus) {
                        continue;
                    }
                    if b != c && nb.contains(d_minus) {
                        continue;
                    }
                    if cross_sector_clash(g, d_minus, a_plus, b_minus) {
                        continue;
                    }
                    let taken = [a_plus, b_minus, c_plus, d_minus];
                    let sector_p = path_between(g, a_plus, b_minus, &sector_forbidden);
                    let sector_r = path_between(g, c_plus, d_minus, &sector_forbidden);
                    let q_pairs: Vec<(usize, usize)> = if b == c {
                        vec![(c_plus, b_minus)]
                    } else if g.has_edge(b, c) {
                        vec![(c, b)]
                    } else {
                        arc_entries(g, b, c, na, &nd, x, &taken)
                    };
                    let s_pairs: Vec<(usize, usize)> = if d == a {
                        vec![(a_plus, d_minus)]
                    } else if g.has_edge(d, a) {
                        vec![(a, d)]
                    } else {
                        arc_entries(g, d, a, nb, &nc, x, &taken)
                    };
                    let s_entries: Vec<ArcChoice> = s_pairs
                        .iter()
                        .map(|&(d_plus, a_minus)| {
                            let arc = if d == a {
                                None
                            } else {
                                path_between(g, d_plus, a_minus, &arc_forbidden)
                            };
                            ((d_plus, a_minus), arc)
                        })
                        .collect();
                    for &(b_plus, c_minus) in &q_pairs {
                        let arc_q = if b == c {
                            None
                        } else {
                            path_between(g, b_plus, c_minus, &arc_forbidden)
                        };
                        for ((d_plus, a_minus), arc_s) in &s_entries {
                            let (d_plus, a_minus) = (*d_plus, *a_minus);
                            let frame = Frame {
                                x,
                                a,
                                b,
                                c,
                                d,
                                a_plus,
                                b_plus,
                                c_plus,
                                d_plus,
                                a_minus,
                                b_minus,
                                c_minus,
                                d_minus,
                            };
                            debug_assert!(
                                frame_invariants_hold(g, &frame),
                                "enumerated degenerate frame {frame:?}"
                            );
                            let mut hull = VertexSet::from_iter(
                                g.n(),
                                [
                                    x, a, b, c, d, a_plus, b_plus, c_plus, d_plus, a_minus,
                                    b_minus, c_minus, d_minus,
                                ],
                            );
                            for part in [&sector_p, &sector_r, &arc_q, arc_s]
                                .into_iter()
                                .flatten()
                            {
                                for &v in part {
                                    hull.insert(v);
                                }
                            }
                            if let Some(w) = is_broken_wheel_centered(g, &hull, x) {
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

/// True when a candidate sector-interior endpoint touches the other long
/// sector's fixed endpoints; distinct sectors never meet on the rim.
fn cross_sector_clash(g: &Graph, u: usize, a_plus: usize, b_minus: usize) -> bool {
    u == a_plus || u == b_minus || g.has_edge(u, a_plus) || g.has_edge(u, b_minus)
}

/// Candidate (y_plus, z_minus) rim-neighbor pairs for a connecting arc of
/// length at least two running from spoke y to spoke z. Entries adjacent to
/// either off-arc spoke (closed neighborhoods `no1`, `no2`) would chord the
/// rim, as would a second contact with y or z.
fn arc_entries(
    g: &Graph,
    y: usize,
    z: usize,
    no1: &VertexSet,
    no2: &VertexSet,
    x: usize,
    taken: &[usize; 4],
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for y_plus in g.neighbors(y).iter() {
        if y_plus == x || taken.contains(&y_plus) || no1.contains(y_plus) || no2.contains(y_plus)
        {
            continue;
        }
        for z_minus in g.neighbors(z).iter() {
            if z_minus == x
                || taken.contains(&z_minus)
                || no1.contains(z_minus)
                || no2.contains(z_minus)
            {
                continue;
            }
            if y_plus != z_minus && (g.has_edge(y_plus, z) || g.has_edge(z_minus, y)) {
                continue;
            }
            out.push((y_plus, z_minus));
        }
    }
    out
}

/// Shortest path joining two sector or arc endpoints whose interior avoids
/// the forbidden hull; endpoints themselves are exempt.
fn path_between(g: &Graph, from: usize, to: usize, forbidden: &VertexSet) -> Option<Vec<usize>> {
    let mut forb = forbidden.clone();
    forb.remove(from);
    forb.remove(to);
    g.shortest_path_avoiding(from, to, &forb)
}
