//! Simple undirected graphs on at most 32 vertices, adjacency as bitmasks.

use crate::bitset::{VertexSet, MAX_VERTICES};
use std::fmt;

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "loops are not allowed");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

/// A simple undirected graph. Immutable once built: construct via
/// [`Graph::from_edges`] or one of the named constructors, derive new graphs
/// with [`Graph::induced_subgraph`], [`Graph::add_whiskers`], etc.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::edgeless(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "edge ({a},{b}) out of range for n={}", self.n);
        assert!(a != b, "loops are not allowed");
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// The cycle 0-1-...-(n-1)-0. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::edgeless(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// The path 0-1-...-(n-1). Requires `n >= 1`.
    pub fn path(n: usize) -> Graph {
        assert!(n >= 1);
        let mut g = Graph::edgeless(n);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Triangle 0-1-2 with a pendant vertex 3 attached at 2.
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v]).with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & (1 << b) != 0
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_any_edge(&self) -> bool {
        self.adj.iter().any(|&m| m != 0)
    }

    /// Number of edges of `self` with both endpoints in `w`.
    pub fn induced_edge_count(&self, w: VertexSet) -> usize {
        w.iter().map(|v| (self.adj[v] & w.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// The subgraph induced on `w`, relabeled to `0..w.len()`, together with
    /// the map from new labels back to the original vertices (ascending).
    pub fn induced_subgraph(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(w.is_subset_of(self.vertices()));
        let map: Vec<usize> = w.to_vec();
        let mut g = Graph::edgeless(map.len());
        for (i, &vi) in map.iter().enumerate() {
            for (j, &vj) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(vi, vj) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Induced subgraph on the complement of `u`.
    pub fn delete_vertices(&self, u: VertexSet) -> Graph {
        self.induced_subgraph(u.complement(self.n)).0
    }

    /// Connected components as vertex sets, ordered by smallest member.
    /// Isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v));
                }
                frontier = next.minus(comp);
                comp = comp.union(next);
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Does `c` touch every edge?
    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.is_independent(c.complement(self.n))
    }

    /// All maximal independent sets, sorted by bitmask value.
    ///
    /// Runs Bron-Kerbosch with pivoting on the complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let full = self.vertices();
        // Non-adjacency (minus self) plays the role of adjacency for cliques.
        let co: Vec<u32> = (0..self.n)
            .map(|v| full.0 & !self.adj[v] & !(1u32 << v))
            .collect();
        fn bk(co: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<VertexSet>) {
            if p == 0 && x == 0 {
                out.push(VertexSet(r));
                return;
            }
            // Pivot with the most co-neighbors in p cuts the branching set.
            let pivot = VertexSet(p | x)
                .iter()
                .max_by_key(|&u| (co[u] & p).count_ones())
                .unwrap();
            let mut cand = p & !co[pivot];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                let bit = 1u32 << v;
                cand &= cand - 1;
                bk(co, r | bit, p & co[v], x & co[v], out);
                p &= !bit;
                x |= bit;
            }
        }
        let mut out = Vec::new();
        bk(&co, 0, full.0, 0, &mut out);
        out.sort();
        out
    }

    /// Independence number, by branch and bound.
    pub fn independence_number(&self) -> usize {
        self.alpha_within(self.vertices())
    }

    fn alpha_within(&self, avail: VertexSet) -> usize {
        // Branch on a vertex of maximum degree inside `avail`; vertices
        // isolated in `avail` are always taken, which keeps sparse graphs fast.
        let mut best_v = None;
        let mut best_deg = 0;
        for v in avail.iter() {
            let d = (self.adj[v] & avail.0).count_ones() as usize;
            if d > best_deg || (d > 0 && best_v.is_none()) {
                best_v = Some(v);
                best_deg = d;
            }
        }
        match best_v {
            // Everything left is isolated; take it all.
            None => avail.len(),
            Some(v) => {
                let with_v = 1 + self.alpha_within(avail.minus(self.closed_neighborhood(v)));
                let without_v = self.alpha_within(avail.without(v));
                with_v.max(without_v)
            }
        }
    }

    /// All maximal independent sets share one cardinality.
    pub fn is_unmixed(&self) -> bool {
        let sets = self.maximal_independent_sets();
        let mut sizes = sets.iter().map(|s| s.len());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|k| k == first),
        }
    }

    /// Attach a new pendant vertex `n + v` to every vertex `v`.
    pub fn add_whiskers(&self) -> Graph {
        assert!(2 * self.n <= MAX_VERTICES, "whiskered graph would exceed {MAX_VERTICES} vertices");
        let mut g = Graph::edgeless(2 * self.n);
        for e in self.edges() {
            g.add_edge(e.u, e.v);
        }
        for v in 0..self.n {
            g.add_edge(v, self.n + v);
        }
        g
    }

    /// `other`'s vertices are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        assert!(self.n + other.n <= MAX_VERTICES);
        let mut g = Graph::edgeless(self.n + other.n);
        for e in self.edges() {
            g.add_edge(e.u, e.v);
        }
        for e in other.edges() {
            g.add_edge(self.n + e.u, self.n + e.v);
        }
        g
    }

    /// All simple cycles, each listed once: the walk starts at its smallest
    /// vertex and its second entry is smaller than its last.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_bounded(self.n)
    }

    /// Cycles of length exactly `k`.
    pub fn cycles_of_length(&self, k: usize) -> Vec<Vec<usize>> {
        assert!(k >= 3);
        let mut cycles = self.cycles_bounded(k);
        cycles.retain(|c| c.len() == k);
        cycles
    }

    fn cycles_bounded(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for s in 0..self.n {
            path.push(s);
            self.cycle_dfs(s, VertexSet::singleton(s), &mut path, max_len, &mut out);
            path.pop();
        }
        out
    }

    fn cycle_dfs(
        &self,
        s: usize,
        used: VertexSet,
        path: &mut Vec<usize>,
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && self.has_edge(last, s) && path[1] < last {
            out.push(path.clone());
        }
        if path.len() == max_len {
            return;
        }
        // Only vertices above the start may appear, so each cycle is rooted
        // at its minimum.
        for v in self.neighbors(last).iter() {
            if v > s && !used.contains(v) {
                path.push(v);
                self.cycle_dfs(s, used.with(v), path, max_len, out);
                path.pop();
            }
        }
    }

    /// Is `cyc` a cycle of this graph with no chords?
    pub fn is_chordless_cycle(&self, cyc: &[usize]) -> bool {
        let k = cyc.len();
        if k < 3 {
            return false;
        }
        let w: VertexSet = cyc.iter().copied().collect();
        if w.len() != k {
            return false;
        }
        for i in 0..k {
            if !self.has_edge(cyc[i], cyc[(i + 1) % k]) {
                return false;
            }
        }
        self.induced_edge_count(w) == k
    }

    /// Vertex sets carrying an induced (chordless) `k`-cycle, ascending.
    pub fn chordless_cycle_sets(&self, k: usize) -> Vec<VertexSet> {
        let mut sets: Vec<VertexSet> = self
            .cycles_of_length(k)
            .iter()
            .filter(|c| self.is_chordless_cycle(c))
            .map(|c| c.iter().copied().collect())
            .collect();
        sets.sort();
        sets.dedup();
        sets
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::path(5).edge_count(), 4);
        assert_eq!(Graph::path(1).edge_count(), 0);
        assert_eq!(Graph::paw().edge_count(), 4);
        assert!(!Graph::edgeless(3).has_any_edge());
    }

    #[test]
    fn neighborhoods() {
        let g = Graph::cycle(5);
        assert_eq!(g.neighbors(0).to_vec(), vec![1, 4]);
        assert_eq!(g.closed_neighborhood(0).to_vec(), vec![0, 1, 4]);
        assert_eq!(g.degree(2), 2);
        assert!(g.has_edge(4, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::cycle(5);
        let w: VertexSet = [0, 1, 3].into_iter().collect();
        let (h, map) = g.induced_subgraph(w);
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![Edge { u: 0, v: 1 }]);
    }

    #[test]
    fn delete_matches_induced_complement() {
        let g = Graph::complete(5);
        let u: VertexSet = [1, 4].into_iter().collect();
        let h = g.delete_vertices(u);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn components_ordered_by_minimum() {
        let g = Graph::from_edges(6, &[(2, 4), (1, 5)]);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 4);
        assert_eq!(comps[0].to_vec(), vec![0]);
        assert_eq!(comps[1].to_vec(), vec![1, 5]);
        assert_eq!(comps[2].to_vec(), vec![2, 4]);
        assert_eq!(comps[3].to_vec(), vec![3]);
        assert!(Graph::cycle(4).is_connected());
        assert!(Graph::edgeless(1).is_connected());
    }

    #[test]
    fn independence_basics() {
        let g = Graph::cycle(5);
        assert!(g.is_independent([0, 2].into_iter().collect()));
        assert!(!g.is_independent([0, 4].into_iter().collect()));
        assert!(g.is_vertex_cover([0, 1, 3].into_iter().collect()));
        assert!(!g.is_vertex_cover([0, 1].into_iter().collect()));
        assert_eq!(g.independence_number(), 2);
        assert_eq!(Graph::complete(6).independence_number(), 1);
        assert_eq!(Graph::edgeless(7).independence_number(), 7);
        assert_eq!(Graph::path(4).independence_number(), 2);
    }

    #[test]
    fn maximal_independent_sets_of_a_path() {
        // P4: {0,2}, {0,3}, {1,3} are the maximal independent sets.
        let g = Graph::path(4);
        let sets = g.maximal_independent_sets();
        let expect: Vec<VertexSet> = vec![
            [0, 2].into_iter().collect(),
            [1, 3].into_iter().collect(),
            [0, 3].into_iter().collect(),
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(sets, expect);
    }

    #[test]
    fn unmixed_examples() {
        assert!(Graph::complete(5).is_unmixed());
        assert!(Graph::cycle(5).is_unmixed());
        // P4 has maximal independent sets of size 2 only; it is unmixed.
        assert!(Graph::path(4).is_unmixed());
        // The paw has maximal independent sets {0,3}, {1,3} and {2}: mixed.
        assert!(!Graph::paw().is_unmixed());
        // Whiskering always produces an unmixed graph.
        assert!(Graph::cycle(5).add_whiskers().is_unmixed());
        assert!(Graph::paw().add_whiskers().is_unmixed());
    }

    #[test]
    fn whiskers_and_union() {
        let w = Graph::cycle(5).add_whiskers();
        assert_eq!(w.n(), 10);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(w.degree(0), 3);
        assert_eq!(w.degree(5), 1);
        assert_eq!(w.independence_number(), 5);

        let u = Graph::complete(3).disjoint_union(&Graph::path(2));
        assert_eq!(u.n(), 5);
        assert_eq!(u.edge_count(), 4);
        assert!(u.has_edge(3, 4));
        assert!(!u.has_edge(2, 3));
    }

    #[test]
    fn cycle_enumeration_counts() {
        // K4: four triangles and three 4-cycles.
        let g = Graph::complete(4);
        assert_eq!(g.cycles_of_length(3).len(), 4);
        assert_eq!(g.cycles_of_length(4).len(), 3);
        assert_eq!(g.cycles().len(), 7);
        // C5: exactly one cycle, listed canonically.
        assert_eq!(Graph::cycle(5).cycles(), vec![vec![0, 1, 2, 3, 4]]);
        // K5 has (5 choose 3) + (5 choose 4)*3 + (5-1)!/2 = 10+15+12 cycles.
        assert_eq!(Graph::complete(5).cycles().len(), 37);
        assert!(Graph::path(6).cycles().is_empty());
    }

    #[test]
    fn chordless_cycles() {
        let g = Graph::complete(4);
        assert!(g.is_chordless_cycle(&[0, 1, 2]));
        assert!(!g.is_chordless_cycle(&[0, 1, 2, 3]));
        assert_eq!(g.chordless_cycle_sets(3).len(), 4);
        assert!(g.chordless_cycle_sets(4).is_empty());
        let c6 = Graph::cycle(6);
        assert_eq!(c6.chordless_cycle_sets(6), vec![VertexSet::full(6)]);
        assert!(c6.chordless_cycle_sets(5).is_empty());
    }
}
