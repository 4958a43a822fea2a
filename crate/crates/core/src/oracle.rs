//! Slow, independently coded ground truths: generic induced-minor-model
//! search, exhaustive Truemper-configuration search, and the
//! minimal-separator criterion.
//!
//! Everything here is complete search with pruning that only discards
//! assignments no solution can extend; the fast detectors are tested against
//! these procedures, so none of them share code with the detector path.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::model::{check_model, InducedMinorModel};
use crate::witness::{validate_witness, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigKind {
    Pyramid,
    Theta,
    LongPrism,
    BrokenWheel,
    Any,
}

/// Complete backtracking search for a K₂,₃ induced-minor model. Vertices are
/// processed in degree-descending order and assigned to X_u, X_v, X_a, X_b,
/// X_c or left unused; hub classes fill first. Exponential worst case,
/// intended for n up to roughly 12.
pub fn find_k23_model(g: &Graph) -> Option<InducedMinorModel> {
    if g.n() < 5 {
        return None;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = ModelSearch {
        g,
        order,
        classes: std::array::from_fn(|_| VertexSet::empty(g.n())),
        remaining: g.vertex_set(),
    };
    search.run(0)
}

struct ModelSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    classes: [VertexSet; 5],
    remaining: VertexSet,
}

/// Class pairs that must not touch: the two hubs, and the middles pairwise.
const NONADJ: [(usize, usize); 4] = [(0, 1), (2, 3), (2, 4), (3, 4)];

impl ModelSearch<'_> {
    fn run(&mut self, i: usize) -> Option<InducedMinorModel> {
        if i == self.order.len() {
            let m = InducedMinorModel {
                x_u: self.classes[0].clone(),
                x_v: self.classes[1].clone(),
                x_a: self.classes[2].clone(),
                x_b: self.classes[3].clone(),
                x_c: self.classes[4].clone(),
            };
            return check_model(self.g, &m).ok().map(|_| m);
        }
        let v = self.order[i];
        self.remaining.remove(v);
        for t in 0..5 {
            // Symmetry breaking: the first hub vertex seen goes to X_u, the
            // first middle vertex to X_a, the second middle class is X_b.
            let gated = (t == 1 && self.classes[0].is_empty())
                || (t == 3 && self.classes[2].is_empty())
                || (t == 4 && self.classes[3].is_empty());
            if gated {
                continue;
            }
            let conflict = NONADJ.iter().any(|&(p, q)| {
                (p == t && self.g.neighbors(v).intersects(&self.classes[q]))
                    || (q == t && self.g.neighbors(v).intersects(&self.classes[p]))
            });
            if conflict {
                continue;
            }
            self.classes[t].insert(v);
            if self.feasible() {
                if let Some(m) = self.run(i + 1) {
                    return Some(m);
                }
            }
            self.classes[t].remove(v);
        }
        if self.feasible() {
            if let Some(m) = self.run(i + 1) {
                return Some(m);
            }
        }
        self.remaining.insert(v);
        None
    }

    /// A partial assignment is kept only if every class can still become
    /// nonempty and connected: class vertices must lie in one component of
    /// the class plus the unprocessed vertices (unused vertices are deleted
    /// in an induced minor, so they cannot glue a class together).
    fn feasible(&self) -> bool {
        let empties = self.classes.iter().filter(|c| c.is_empty()).count();
        if empties > self.remaining.len() {
            return false;
        }
        for c in &self.classes {
            if c.len() < 2 {
                continue;
            }
            let scope = c.union(&self.remaining);
            let anchor = c.first().unwrap();
            let reachable = self
                .g
                .components_within(&scope)
                .into_iter()
                .find(|comp| comp.contains(anchor))
                .unwrap();
            if !c.is_subset(&reachable) {
                return false;
            }
        }
        true
    }
}

/// Enumerates every induced `from`→`to` path whose interior avoids
/// `forbidden`, in ascending lexicographic order, stopping at the visitor's
/// first `Some`. Endpoints are exempt from `forbidden`.
fn each_induced_path<T, F>(
    g: &Graph,
    from: usize,
    to: usize,
    forbidden: &VertexSet,
    visit: &mut F,
) -> Option<T>
where
    F: FnMut(&[usize]) -> Option<T>,
{
    debug_assert_ne!(from, to);
    let mut path = vec![from];
    let prefix_nbhd = VertexSet::empty(g.n());
    let mut excluded = forbidden.clone();
    excluded.insert(from);
    path_rec(g, to, &mut path, &prefix_nbhd, &excluded, visit)
}

fn path_rec<T, F>(
    g: &Graph,
    to: usize,
    path: &mut Vec<usize>,
    prefix_nbhd: &VertexSet, // N[path minus its last vertex]
    excluded: &VertexSet,    // forbidden ∪ prefix_nbhd ∪ {last}
    visit: &mut F,
) -> Option<T>
where
    F: FnMut(&[usize]) -> Option<T>,
{
    let last = *path.last().unwrap();
    if prefix_nbhd.contains(to) {
        // The target already touches the path's interior; nothing below this
        // prefix can close into an induced path.
        return None;
    }
    if g.has_edge(last, to) {
        path.push(to);
        let r = visit(path);
        path.pop();
        // Any longer extension would keep `to` adjacent to an interior
        // vertex, so this prefix is exhausted.
        return r;
    }
    let cands = g.neighbors(last).difference(excluded);
    for w in cands.iter() {
        let mut pn = prefix_nbhd.clone();
        pn.union_with(g.neighbors(last));
        pn.insert(last);
        let mut ex = excluded.clone();
        ex.union_with(&pn);
        ex.insert(w);
        path.push(w);
        let r = path_rec(g, to, path, &pn, &ex, visit);
        path.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in g.neighbors(i).iter() {
            if j <= i {
                continue;
            }
            for k in g.neighbors(i).intersection(g.neighbors(j)).iter() {
                if k > j {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

fn closed_nbhd_of_all(g: &Graph, vs: &[usize]) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for &v in vs {
        out.union_with(&g.closed_neighborhood_of(v));
    }
    out
}

fn search_pyramid(g: &Graph) -> Option<Witness> {
    let tris = triangles(g);
    for a in 0..g.n() {
        for t in &tris {
            if t.contains(&a) {
                continue;
            }
            // s1, s2 end the two paths of length ≥ 2; every rotation makes
            // each triangle vertex the possibly-adjacent endpoint s3 once.
            for rot in 0..3 {
                let (s1, s2, s3) = match rot {
                    0 => (t[1], t[2], t[0]),
                    1 => (t[0], t[2], t[1]),
                    _ => (t[0], t[1], t[2]),
                };
                if g.has_edge(a, s1) || g.has_edge(a, s2) {
                    continue;
                }
                let f1 = closed_nbhd_of_all(g, &[s2, s3]);
                let found = each_induced_path(g, a, s1, &f1, &mut |p1| {
                    let mut f2 = closed_nbhd_of_all(g, &[s1, s3]);
                    f2.union_with(&closed_nbhd_of_all(g, &p1[1..p1.len() - 1]));
                    each_induced_path(g, a, s2, &f2, &mut |p2| {
                        let mut f3 = closed_nbhd_of_all(g, &[s1, s2]);
                        f3.union_with(&closed_nbhd_of_all(g, &p1[1..p1.len() - 1]));
                        f3.union_with(&closed_nbhd_of_all(g, &p2[1..p2.len() - 1]));
                        f3.remove(a);
                        f3.remove(s3);
                        let p3 = g.shortest_path_avoiding(a, s3, &f3)?;
                        let w = Witness::Pyramid {
                            apex: a,
                            triangle: [s1, s2, s3],
                            paths: [p1.to_vec(), p2.to_vec(), p3],
                        };
                        validate_witness(g, &w).then_some(w)
                    })
                });
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn search_theta(g: &Graph) -> Option<Witness> {
    for h1 in 0..g.n() {
        for h2 in h1 + 1..g.n() {
            if g.has_edge(h1, h2) {
                continue;
            }
            let none = VertexSet::empty(g.n());
            let found = each_induced_path(g, h1, h2, &none, &mut |p1| {
                let f2 = closed_nbhd_of_all(g, &p1[1..p1.len() - 1]);
                each_induced_path(g, h1, h2, &f2, &mut |p2| {
                    let mut f3 = f2.clone();
                    f3.union_with(&closed_nbhd_of_all(g, &p2[1..p2.len() - 1]));
                    f3.remove(h1);
                    f3.remove(h2);
                    let p3 = g.shortest_path_avoiding(h1, h2, &f3)?;
                    let w = Witness::Theta {
                        hubs: [h1, h2],
                        paths: [p1.to_vec(), p2.to_vec(), p3],
                    };
                    validate_witness(g, &w).then_some(w)
                })
            });
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn search_long_prism(g: &Graph) -> Option<Witness> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let tris = triangles(g);
    for (i, ta) in tris.iter().enumerate() {
        for tb in &tris[i + 1..] {
            if ta.iter().any(|v| tb.contains(v)) {
                continue;
            }
            'perm: for perm in &PERMS {
                let a = *ta;
                let b = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
                for (x, &av) in a.iter().enumerate() {
                    for (y, &bv) in b.iter().enumerate() {
                        if x != y && g.has_edge(av, bv) {
                            continue 'perm;
                        }
                    }
                }
                let f1 = closed_nbhd_of_all(g, &[a[1], a[2], b[1], b[2]]);
                let found = each_induced_path(g, a[0], b[0], &f1, &mut |p1| {
                    let mut f2 = closed_nbhd_of_all(g, &[a[2], b[2]]);
                    f2.union_with(&closed_nbhd_of_all(g, p1));
                    each_induced_path(g, a[1], b[1], &f2, &mut |p2| {
                        let mut f3 = closed_nbhd_of_all(g, p1);
                        f3.union_with(&closed_nbhd_of_all(g, p2));
                        each_induced_path(g, a[2], b[2], &f3, &mut |p3| {
                            if [p1, p2, p3].iter().all(|p| p.len() < 3) {
                                return None;
                            }
                            let w = Witness::LongPrism {
                                triangle_a: a,
                                triangle_b: b,
                                paths: [p1.to_vec(), p2.to_vec(), p3.to_vec()],
                            };
                            validate_witness(g, &w).then_some(w)
                        })
                    })
                });
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

/// Enumerates holes avoiding `x` in canonical form (minimum vertex first,
/// second entry smaller than the last), stopping at the visitor's first
/// `Some`.
fn each_hole_avoiding<T, F>(g: &Graph, x: usize, visit: &mut F) -> Option<T>
where
    F: FnMut(&[usize]) -> Option<T>,
{
    for s in 0..g.n() {
        if s == x {
            continue;
        }
        let mut low = VertexSet::empty(g.n());
        for v in 0..=s {
            low.insert(v);
        }
        low.insert(x);
        for w1 in g.neighbors(s).iter() {
            if w1 <= s || w1 == x {
                continue;
            }
            let mut path = vec![s, w1];
            let interior_nbhd = VertexSet::empty(g.n());
            if let Some(r) = hole_rec(g, s, &low, &mut path, &interior_nbhd, visit) {
                return Some(r);
            }
        }
    }
    None
}

fn hole_rec<T, F>(
    g: &Graph,
    s: usize,
    low: &VertexSet, // vertices ≤ s, plus the excluded center
    path: &mut Vec<usize>,
    interior_nbhd: &VertexSet, // N[path interior], i.e. all but first and last
    visit: &mut F,
) -> Option<T>
where
    F: FnMut(&[usize]) -> Option<T>,
{
    let last = *path.last().unwrap();
    if path.len() >= 3 {
        let mut closers = g.neighbors(last).intersection(g.neighbors(s));
        closers.difference_with(interior_nbhd);
        closers.difference_with(low);
        for w in closers.iter() {
            if w <= path[1] {
                continue; // canonical direction
            }
            path.push(w);
            let r = visit(path);
            path.pop();
            if r.is_some() {
                return r;
            }
        }
    }
    let mut ext = g.neighbors(last).difference(low);
    ext.difference_with(g.neighbors(s));
    ext.difference_with(interior_nbhd);
    ext.remove(last);
    for w in ext.iter() {
        let mut inbhd = interior_nbhd.clone();
        inbhd.union_with(&g.closed_neighborhood_of(last));
        path.push(w);
        let r = hole_rec(g, s, low, path, &inbhd, visit);
        path.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

fn search_broken_wheel(g: &Graph) -> Option<Witness> {
    for x in 0..g.n() {
        if g.degree(x) < 3 {
            continue;
        }
        let found = each_hole_avoiding(g, x, &mut |rim| {
            let w = Witness::BrokenWheel {
                rim: rim.to_vec(),
                center: x,
            };
            validate_witness(g, &w).then_some(w)
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Complete search for an induced configuration of the given kind.
/// Exponential worst case, intended for n up to roughly 14.
pub fn find_config_exhaustive(g: &Graph, kind: ConfigKind) -> Option<Witness> {
    match kind {
        ConfigKind::Pyramid => search_pyramid(g),
        ConfigKind::Theta => search_theta(g),
        ConfigKind::LongPrism => search_long_prism(g),
        ConfigKind::BrokenWheel => search_broken_wheel(g),
        ConfigKind::Any => search_pyramid(g)
            .or_else(|| search_theta(g))
            .or_else(|| search_long_prism(g))
            .or_else(|| search_broken_wheel(g)),
    }
}

/// A minimal separator with the full components certifying its minimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSeparator {
    pub separator: VertexSet,
    pub full_components: Vec<VertexSet>,
}

/// Components of g∖s whose neighborhood is exactly s.
pub fn full_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    g.components_within(&s.complement())
        .into_iter()
        .filter(|c| g.neighborhood(c) == *s)
        .collect()
}

/// Definitional test: s is a minimal separator iff at least two components
/// of g∖s see all of s.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    full_components(g, s).len() >= 2
}

/// All nonempty minimal separators: seeded with the component neighborhoods
/// around each closed vertex neighborhood, then closed under the standard
/// expansion step; every candidate is verified against the definition. The
/// empty separator of a disconnected graph is deliberately omitted (it never
/// matters for the independence criterion). Output sorted by ascending
/// vertex sequence.
pub fn enumerate_minimal_separators(g: &Graph) -> Vec<MinimalSeparator> {
    use std::collections::{HashSet, VecDeque};
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue: VecDeque<VertexSet> = VecDeque::new();
    let offer = |s: VertexSet, seen: &mut HashSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
        if !s.is_empty() && !seen.contains(&s) && is_minimal_separator(g, &s) {
            seen.insert(s.clone());
            queue.push_back(s);
        }
    };
    for v in 0..g.n() {
        let closed = g.closed_neighborhood_of(v);
        for c in g.components_within(&closed.complement()) {
            offer(g.neighborhood(&c), &mut seen, &mut queue);
        }
    }
    while let Some(s) = queue.pop_front() {
        for x in s.iter() {
            let mut removed = s.clone();
            removed.union_with(&g.closed_neighborhood_of(x));
            for c in g.components_within(&removed.complement()) {
                offer(g.neighborhood(&c), &mut seen, &mut queue);
            }
        }
    }
    let mut separators: Vec<VertexSet> = seen.into_iter().collect();
    separators.sort();
    separators
        .into_iter()
        .map(|s| MinimalSeparator {
            full_components: full_components(g, &s),
            separator: s,
        })
        .collect()
}

/// First minimal separator containing an independent triple, if any.
pub fn violating_separator(g: &Graph) -> Option<VertexSet> {
    enumerate_minimal_separators(g)
        .into_iter()
        .map(|m| m.separator)
        .find(|s| g.independence_exceeds(s, 2))
}

/// The separator criterion: a graph is K₂,₃-induced-minor-free iff no
/// minimal separator contains an independent triple.
pub fn k23_free_by_separators(g: &Graph) -> bool {
    violating_separator(g).is_none()
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("graph is disconnected; split it into components first")]
pub struct DisconnectedError;

/// Does a connected graph have a clique cutset? Equivalent to some minimal
/// separator being a clique.
pub fn has_clique_cutset(g: &Graph) -> Result<bool, DisconnectedError> {
    if !g.is_connected() {
        return Err(DisconnectedError);
    }
    Ok(enumerate_minimal_separators(g)
        .iter()
        .any(|m| g.is_clique(&m.separator)))
}
