//! Structural graph predicates: girth, pendant edges, basic 5-cycles, the
//! pendant/cycle vertex partition with its certificates, and paw-freeness.

use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph};
use crate::matching::{ind_match_h, HFamily};
use std::collections::VecDeque;
use thiserror::Error;

/// Length of a shortest cycle, None for forests. The shortest cycle through
/// an edge uv is 1 + the uv-distance avoiding that edge; minimize over edges.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for e in g.edges() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[e.u] = 0;
        let mut queue = VecDeque::from([e.u]);
        while let Some(w) = queue.pop_front() {
            for x in g.neighbors(w).iter() {
                if (w, x) == (e.u, e.v) || (w, x) == (e.v, e.u) {
                    continue;
                }
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                }
            }
        }
        if dist[e.v] != usize::MAX {
            let len = dist[e.v] + 1;
            if best.is_none_or(|b| len < b) {
                best = Some(len);
            }
            if best == Some(3) {
                break;
            }
        }
    }
    best
}

/// Vertices incident to a pendant edge (degree-1 vertices and their
/// neighbors).
pub fn pendant_vertices(g: &Graph) -> VertexSet {
    pendant_edges(g)
        .iter()
        .fold(VertexSet::EMPTY, |a, e| a.with(e.u).with(e.v))
}

/// Edges incident to a degree-1 vertex, each listed once.
pub fn pendant_edges(g: &Graph) -> Vec<Edge> {
    let mut out: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| g.degree(e.u) == 1 || g.degree(e.v) == 1)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// All 5-cycles in canonical orientation (least rotation/reflection).
pub fn five_cycles(g: &Graph) -> Vec<Vec<usize>> {
    g.cycles_of_length(5)
}

/// Basic: no two adjacent vertices of degree three or more. A chord would
/// make its endpoints adjacent of degree >= 3, so basic cycles are chordless.
pub fn is_basic_five_cycle(g: &Graph, cycle: &[usize]) -> bool {
    debug_assert_eq!(cycle.len(), 5);
    for (i, &u) in cycle.iter().enumerate() {
        for &v in &cycle[i + 1..] {
            if g.has_edge(u, v) && g.degree(u) >= 3 && g.degree(v) >= 3 {
                return false;
            }
        }
    }
    true
}

pub fn basic_five_cycles(g: &Graph) -> Vec<Vec<usize>> {
    five_cycles(g)
        .into_iter()
        .filter(|c| is_basic_five_cycle(g, c))
        .collect()
}

/// C(G): vertices lying on some basic 5-cycle.
pub fn basic_cycle_vertices(g: &Graph) -> VertexSet {
    basic_five_cycles(g)
        .iter()
        .flat_map(|c| c.iter().copied())
        .collect()
}

/// How to read "the vertices of basic 5-cycles form a partition of C(G)".
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PcMode {
    /// Some family of pairwise disjoint basic 5-cycles covers C(G).
    #[default]
    Existential,
    /// All basic 5-cycles are pairwise vertex-disjoint.
    Strict,
}

/// Witness that the vertex set splits into matched pendant pairs and
/// disjoint basic 5-cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PcCertificate {
    pub pendant_pairs: Vec<Edge>,
    pub basic_cycles: Vec<Vec<usize>>,
}

impl PcCertificate {
    /// Re-derive every condition from the graph alone.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut listed = self.pendant_pairs.clone();
        listed.sort();
        if listed != pendant_edges(g) {
            return false;
        }
        let mut p = VertexSet::EMPTY;
        for e in &self.pendant_pairs {
            if p.contains(e.u) || p.contains(e.v) {
                return false; // two pendant edges collide
            }
            p = p.with(e.u).with(e.v);
        }
        let mut c = VertexSet::EMPTY;
        for cyc in &self.basic_cycles {
            if cyc.len() != 5 || !is_basic_five_cycle(g, cyc) {
                return false;
            }
            let set: VertexSet = cyc.iter().copied().collect();
            if set.len() != 5 || c.intersects(set) {
                return false;
            }
            c = c.union(set);
        }
        c == basic_cycle_vertices(g) && !p.intersects(c) && p.union(c) == g.vertices()
    }
}

fn exact_cover(target: VertexSet, sets: &[VertexSet]) -> Option<Vec<usize>> {
    fn rec(target: VertexSet, sets: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
        let Some(v) = target.min_vertex() else {
            return true;
        };
        for (i, s) in sets.iter().enumerate() {
            if s.contains(v) && s.is_subset_of(target) {
                chosen.push(i);
                if rec(target.minus(*s), sets, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    rec(target, sets, &mut chosen).then_some(chosen)
}

/// Class membership with witness. The three conditions: pendant and cycle
/// vertices partition V(G); the pendant edges are pairwise disjoint (hence a
/// perfect matching of P(G)); the basic 5-cycles partition C(G) in the sense
/// of `mode`.
pub fn pc_certificate(g: &Graph, mode: PcMode) -> Option<PcCertificate> {
    let pend = pendant_edges(g);
    let p = pendant_vertices(g);
    let basics = basic_five_cycles(g);
    let c = basic_cycle_vertices(g);
    if p.intersects(c) || p.union(c) != g.vertices() {
        return None;
    }
    let mut matched = VertexSet::EMPTY;
    for e in &pend {
        if matched.contains(e.u) || matched.contains(e.v) {
            return None;
        }
        matched = matched.with(e.u).with(e.v);
    }
    let cycle_sets: Vec<VertexSet> = basics.iter().map(|cyc| cyc.iter().copied().collect()).collect();
    let chosen: Vec<usize> = match mode {
        PcMode::Strict => {
            let mut seen = VertexSet::EMPTY;
            for s in &cycle_sets {
                if seen.intersects(*s) {
                    return None;
                }
                seen = seen.union(*s);
            }
            (0..basics.len()).collect()
        }
        PcMode::Existential => exact_cover(c, &cycle_sets)?,
    };
    let cert = PcCertificate {
        pendant_pairs: pend,
        basic_cycles: chosen.into_iter().map(|i| basics[i].clone()).collect(),
    };
    debug_assert!(cert.validate(g));
    Some(cert)
}

/// No induced paw: no triangle with an outside vertex attached to exactly
/// one of its corners.
pub fn is_paw_free(g: &Graph) -> bool {
    for tri in g.cycles_of_length(3) {
        let s: VertexSet = tri.iter().copied().collect();
        for v in g.vertices().minus(s).iter() {
            if (g.neighbors(v).0 & s.0).count_ones() == 1 {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PawfreeLemmaError {
    #[error("graph contains an induced paw")]
    NotPawFree,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("independence number {alpha} differs from the {{K2,C5}} induced matching number {ind_match}")]
    HypothesisGap { alpha: usize, ind_match: usize },
}

/// Under the hypotheses (paw-free, no isolated vertex, independence number
/// equal to ind-match over {K2, C5}), every component should be complete or
/// a 5-cycle. Returns that structural verdict; errors when a hypothesis
/// fails.
pub fn check_pawfree_structure(g: &Graph) -> Result<bool, PawfreeLemmaError> {
    if !is_paw_free(g) {
        return Err(PawfreeLemmaError::NotPawFree);
    }
    if let Some(v) = g.vertices().iter().find(|&v| g.degree(v) == 0) {
        return Err(PawfreeLemmaError::IsolatedVertex(v));
    }
    let alpha = g.independence_number();
    let ind_match = ind_match_h(g, &HFamily::k2_c5()).0;
    if alpha != ind_match {
        return Err(PawfreeLemmaError::HypothesisGap { alpha, ind_match });
    }
    Ok(g.connected_components().iter().all(|&comp| {
        let k = comp.len();
        let edges = g.induced_edge_count(comp);
        edges == k * (k - 1) / 2
            || (k == 5
                && edges == 5
                && comp.iter().all(|v| (g.neighbors(v).0 & comp.0).count_ones() == 2))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_values() {
        assert_eq!(girth(&Graph::cycle(5)), Some(5));
        assert_eq!(girth(&Graph::paw()), Some(3));
        assert_eq!(girth(&Graph::path(6)), None);
        assert_eq!(girth(&Graph::edgeless(4)), None);
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::cycle(6)), Some(6));
        assert_eq!(girth(&Graph::cycle(5).add_whiskers()), Some(5));
    }

    #[test]
    fn girth_agrees_with_cycle_enumeration() {
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(7),
            Graph::complete(5),
            Graph::paw(),
            Graph::path(5),
            Graph::cycle(6).add_whiskers(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 4)]),
        ];
        for g in graphs {
            let by_enumeration = g.cycles().iter().map(|c| c.len()).min();
            assert_eq!(girth(&g), by_enumeration, "{g:?}");
        }
    }

    #[test]
    fn pendants() {
        let c5 = Graph::cycle(5);
        assert!(pendant_vertices(&c5).is_empty());
        let k2 = Graph::path(2);
        assert_eq!(pendant_vertices(&k2), VertexSet::full(2));
        assert_eq!(pendant_edges(&k2), vec![Edge::new(0, 1)]);
        let w = Graph::cycle(5).add_whiskers();
        assert_eq!(pendant_vertices(&w), VertexSet::full(10));
        assert_eq!(pendant_edges(&w).len(), 5);
        // Star: three pendant edges sharing the center.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(pendant_edges(&star).len(), 3);
        assert_eq!(pendant_vertices(&star), VertexSet::full(4));
    }

    #[test]
    fn basic_cycles() {
        let c5 = Graph::cycle(5);
        assert_eq!(basic_five_cycles(&c5), vec![vec![0, 1, 2, 3, 4]]);
        // Whiskering raises every central degree to 3, killing basicness.
        let w = Graph::cycle(5).add_whiskers();
        assert!(basic_five_cycles(&w).is_empty());
        // One attachment of degree 3 is fine as long as no two are adjacent.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        edges.push((0, 5));
        let tadpole = Graph::from_edges(6, &edges);
        assert_eq!(basic_five_cycles(&tadpole).len(), 1);
        assert_eq!(basic_cycle_vertices(&tadpole), VertexSet::full(5));
    }

    #[test]
    fn pc_membership() {
        for mode in [PcMode::Existential, PcMode::Strict] {
            let c5 = pc_certificate(&Graph::cycle(5), mode).unwrap();
            assert!(c5.pendant_pairs.is_empty());
            assert_eq!(c5.basic_cycles.len(), 1);
            assert!(c5.validate(&Graph::cycle(5)));

            for base in [Graph::cycle(5), Graph::complete(3), Graph::path(4)] {
                let w = base.add_whiskers();
                let cert = pc_certificate(&w, mode).unwrap();
                assert!(cert.basic_cycles.is_empty(), "whiskered graphs have no basic cycles");
                assert_eq!(cert.pendant_pairs.len(), base.n());
                assert!(cert.validate(&w));
            }

            assert!(pc_certificate(&Graph::complete(3), mode).is_none());
            assert!(pc_certificate(&Graph::path(2), mode).is_some());
            // A single isolated vertex lies in neither P nor C.
            assert!(pc_certificate(&Graph::edgeless(1), mode).is_none());
            // Pendant attached to a 5-cycle: its cycle vertex lands in both
            // P and C, breaking the partition.
            let tadpole =
                Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]);
            assert!(pc_certificate(&tadpole, mode).is_none());
            // Star: pendant edges all meet at the center.
            let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
            assert!(pc_certificate(&star, mode).is_none());
        }
    }

    #[test]
    fn pc_two_disjoint_cycles() {
        let g = Graph::cycle(5).disjoint_union(&Graph::cycle(5));
        for mode in [PcMode::Existential, PcMode::Strict] {
            let cert = pc_certificate(&g, mode).unwrap();
            assert_eq!(cert.basic_cycles.len(), 2);
            assert!(cert.validate(&g));
        }
    }

    #[test]
    fn paw_freeness() {
        assert!(is_paw_free(&Graph::cycle(5)));
        assert!(is_paw_free(&Graph::cycle(4)));
        for n in 1..=6 {
            assert!(is_paw_free(&Graph::complete(n)), "K{n}");
        }
        assert!(!is_paw_free(&Graph::paw()));
        assert!(!is_paw_free(&Graph::complete(3).add_whiskers()));
        // Paw plus extra attachment is still not paw-free.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]);
        assert!(!is_paw_free(&g));
    }

    #[test]
    fn girth_five_implies_paw_free() {
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::cycle(7),
            Graph::cycle(5).add_whiskers(),
            Graph::path(6),
        ];
        for g in graphs {
            if girth(&g).is_none_or(|gi| gi >= 5) {
                assert!(is_paw_free(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn pawfree_structure_lemma() {
        let k3_c5 = Graph::complete(3).disjoint_union(&Graph::cycle(5));
        assert_eq!(check_pawfree_structure(&k3_c5), Ok(true));
        assert_eq!(check_pawfree_structure(&Graph::cycle(5)), Ok(true));
        assert_eq!(check_pawfree_structure(&Graph::complete(4)), Ok(true));
        assert_eq!(
            check_pawfree_structure(&Graph::path(4)),
            Err(PawfreeLemmaError::HypothesisGap { alpha: 2, ind_match: 1 })
        );
        assert_eq!(check_pawfree_structure(&Graph::paw()), Err(PawfreeLemmaError::NotPawFree));
        let with_isolated = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            check_pawfree_structure(&with_isolated),
            Err(PawfreeLemmaError::IsolatedVertex(3))
        );
    }
}
