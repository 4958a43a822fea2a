//! Simple undirected graphs with bitset adjacency.

use crate::bitset::VertexSet;

/// Undirected simple graph on vertices `0..n`, immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are tolerated;
    /// self-loops and out-of-range endpoints are programming errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            assert_ne!(u, v, "self-loop at {u}");
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood of a set: vertices outside `s` adjacent to it.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Closed neighborhood of a set: the set together with its neighbors.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        let mut out = self.adj[v].clone();
        out.insert(v);
        out
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs: Vec<usize> = s.iter().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components of the subgraph induced by `s`, each returned as
    /// a vertex set, ordered by smallest contained vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut queue = vec![start];
            comp.insert(start);
            remaining.remove(start);
            while let Some(v) = queue.pop() {
                let next = self.adj[v].intersection(&remaining);
                remaining.difference_with(&next);
                comp.union_with(&next);
                queue.extend(next.iter());
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// BFS-shortest path from `from` to `to` using only vertices outside
    /// `forbidden` (endpoints must be outside too). Each vertex's parent is
    /// the smallest-index vertex of the previous layer adjacent to it, so the
    /// result is deterministic. A shortest path has no chords among its own
    /// vertices, hence is induced in the graph minus `forbidden`.
    pub fn shortest_path_avoiding(
        &self,
        from: usize,
        to: usize,
        forbidden: &VertexSet,
    ) -> Option<Vec<usize>> {
        debug_assert!(!forbidden.contains(from) && !forbidden.contains(to));
        if from == to {
            return Some(vec![from]);
        }
        let mut parent: Vec<usize> = vec![usize::MAX; self.n];
        let mut seen = forbidden.clone();
        seen.insert(from);
        let mut frontier = VertexSet::from_iter(self.n, [from]);
        while !frontier.is_empty() {
            let mut next_frontier = VertexSet::empty(self.n);
            for v in frontier.iter() {
                let fresh = self.adj[v].difference(&seen);
                for w in fresh.iter() {
                    parent[w] = v;
                }
                seen.union_with(&fresh);
                next_frontier.union_with(&fresh);
            }
            if next_frontier.contains(to) {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            frontier = next_frontier;
        }
        None
    }

    /// True when `path` lists distinct vertices forming an induced path.
    pub fn is_chordless_path(&self, path: &[usize]) -> bool {
        if path.is_empty() {
            return false;
        }
        let mut seen = VertexSet::empty(self.n);
        for &v in path {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        for i in 0..path.len() {
            for j in i + 1..path.len() {
                let adjacent = self.has_edge(path[i], path[j]);
                if adjacent != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// True when `cycle` lists distinct vertices forming a chordless cycle of
    /// length at least four.
    pub fn is_hole(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 4 {
            return false;
        }
        let mut seen = VertexSet::empty(self.n);
        for &v in cycle {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(cycle[i], cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Does the subgraph induced by `s` contain an independent set larger
    /// than `k`?
    pub fn independence_exceeds(&self, s: &VertexSet, k: usize) -> bool {
        fn grow(g: &Graph, candidates: &VertexSet, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if candidates.len() < need {
                return false;
            }
            let mut rest = candidates.clone();
            for v in candidates.iter() {
                rest.remove(v);
                if grow(g, &rest.difference(g.neighbors(v)), need - 1) {
                    return true;
                }
            }
            false
        }
        grow(self, s, k + 1)
    }

    /// Induced subgraph on `s` with vertices relabeled `0..s.len()` in
    /// ascending order of original index. Returns the subgraph and the map
    /// from new index back to the original vertex.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let to_parent: Vec<usize> = s.iter().collect();
        let mut to_child = vec![usize::MAX; self.n];
        for (i, &v) in to_parent.iter().enumerate() {
            to_child[v] = i;
        }
        let m = to_parent.len();
        let mut g = Graph::empty(m);
        for (i, &v) in to_parent.iter().enumerate() {
            for w in self.adj[v].intersection(s).iter() {
                if w > v {
                    g.adj[i].insert(to_child[w]);
                    g.adj[to_child[w]].insert(i);
                }
            }
        }
        (g, to_parent)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
