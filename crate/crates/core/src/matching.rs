//! Matching invariants: the classical three (matching number, minimum
//! maximal matching, induced matching) and the H-matching numbers for
//! families H = {K2} together with selected cycle lengths.
//!
//! All searches are exact. The three classical invariants are implemented
//! independently of the H-family machinery so the identities
//! ind-match_{K2} = ind-match and min-match_{K2} = min-match are a real
//! cross-check, not a tautology.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cycle length {0} is below 3")]
pub struct BadCycleLength(pub usize);

/// A family of connected graphs containing K2, the rest cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HFamily {
    cycle_lengths: BTreeSet<usize>,
}

impl HFamily {
    pub fn new<I: IntoIterator<Item = usize>>(cycles: I) -> Result<Self, BadCycleLength> {
        let mut set = BTreeSet::new();
        for k in cycles {
            if k < 3 {
                return Err(BadCycleLength(k));
            }
            set.insert(k);
        }
        Ok(HFamily { cycle_lengths: set })
    }

    /// Just {K2}: the H-matching numbers collapse to the classical ones.
    pub fn k2_only() -> Self {
        HFamily { cycle_lengths: BTreeSet::new() }
    }

    /// {K2, C5}, the family behind the main bounds.
    pub fn k2_c5() -> Self {
        HFamily { cycle_lengths: BTreeSet::from([5]) }
    }

    pub fn cycle_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycle_lengths.iter().copied()
    }

    pub fn has_cycle(&self, k: usize) -> bool {
        self.cycle_lengths.contains(&k)
    }
}

/// One connected piece of an H-subgraph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HComponent {
    K2 { u: usize, v: usize },
    /// Closed walk: consecutive entries adjacent, last wraps to first.
    Cycle { vertices: Vec<usize> },
}

impl HComponent {
    pub fn vertex_set(&self) -> VertexSet {
        match self {
            HComponent::K2 { u, v } => VertexSet::singleton(*u).with(*v),
            HComponent::Cycle { vertices } => vertices.iter().copied().collect(),
        }
    }

    /// Matching number of this component: 1 for K2, floor(k/2) for a k-cycle.
    pub fn match_number(&self) -> usize {
        match self {
            HComponent::K2 { .. } => 1,
            HComponent::Cycle { vertices } => vertices.len() / 2,
        }
    }

    fn edge_count(&self) -> usize {
        match self {
            HComponent::K2 { .. } => 1,
            HComponent::Cycle { vertices } => vertices.len(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HSubgraphError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} appears in more than one place")]
    Overlap(usize),
    #[error("required edge ({0},{1}) is missing from the graph")]
    MissingEdge(usize, usize),
    #[error("cycle of length {0} is too short")]
    ShortCycle(usize),
}

/// A subgraph of some ambient graph, given as its components. Valid when the
/// components are pairwise disjoint and each traces its structure along
/// actual edges; edges of the ambient graph between components are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HSubgraph {
    pub components: Vec<HComponent>,
}

impl HSubgraph {
    pub fn vertex_set(&self) -> VertexSet {
        self.components.iter().fold(VertexSet::EMPTY, |a, c| a.union(c.vertex_set()))
    }

    /// match(H): the sum over components.
    pub fn match_number(&self) -> usize {
        self.components.iter().map(|c| c.match_number()).sum()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), HSubgraphError> {
        let mut used = VertexSet::EMPTY;
        let mut claim = |v: usize| -> Result<(), HSubgraphError> {
            if v >= g.n() {
                return Err(HSubgraphError::OutOfRange(v));
            }
            if used.contains(v) {
                return Err(HSubgraphError::Overlap(v));
            }
            used = used.with(v);
            Ok(())
        };
        for comp in &self.components {
            match comp {
                HComponent::K2 { u, v } => {
                    claim(*u)?;
                    claim(*v)?;
                    if !g.has_edge(*u, *v) {
                        return Err(HSubgraphError::MissingEdge(*u, *v));
                    }
                }
                HComponent::Cycle { vertices } => {
                    if vertices.len() < 3 {
                        return Err(HSubgraphError::ShortCycle(vertices.len()));
                    }
                    for &v in vertices {
                        claim(v)?;
                    }
                    for i in 0..vertices.len() {
                        let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
                        if !g.has_edge(a, b) {
                            return Err(HSubgraphError::MissingEdge(a, b));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Valid, and the subgraph induced on its vertices is exactly the
    /// disjoint union of the components: no chords, no edges between
    /// components.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        if self.validate(g).is_err() {
            return false;
        }
        let own_edges: usize = self.components.iter().map(|c| c.edge_count()).sum();
        g.induced_edge_count(self.vertex_set()) == own_edges
    }
}

/// Classical matching number, memoized branch over the first covered vertex.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, avail: u32, memo: &mut HashMap<u32, usize>) -> usize {
        let Some(u) = VertexSet(avail)
            .iter()
            .find(|&u| g.neighbors(u).0 & avail != 0)
        else {
            return 0;
        };
        if let Some(&cached) = memo.get(&avail) {
            return cached;
        }
        let ubit = 1u32 << u;
        // u stays unmatched, or matches each available neighbor.
        let mut best = rec(g, avail & !ubit, memo);
        for v in VertexSet(g.neighbors(u).0 & avail).iter() {
            best = best.max(1 + rec(g, avail & !ubit & !(1u32 << v), memo));
        }
        memo.insert(avail, best);
        best
    }
    rec(g, g.vertices().0, &mut HashMap::new())
}

/// Minimum size of a maximal matching. A matching is maximal exactly when
/// its matched vertices touch every edge, so the search always extends by an
/// edge meeting the first untouched edge.
pub fn min_maximal_matching(g: &Graph) -> usize {
    let edges = g.edges();
    fn rec(edges: &[crate::graph::Edge], matched: u32, acc: usize, best: &mut usize) {
        if acc >= *best {
            return;
        }
        let uncovered = edges
            .iter()
            .find(|e| matched & (1 << e.u | 1 << e.v) == 0);
        let Some(e) = uncovered else {
            *best = acc;
            return;
        };
        for f in edges {
            let fbits = 1u32 << f.u | 1 << f.v;
            let touches = f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
            if touches && matched & fbits == 0 {
                rec(edges, matched | fbits, acc + 1, best);
            }
        }
    }
    let mut best = usize::MAX;
    rec(&edges, 0, 0, &mut best);
    if best == usize::MAX {
        0 // no edges at all
    } else {
        best
    }
}

/// Largest matching inducing no extra edge: a maximum independent set in the
/// conflict graph whose vertices are edges, adjacent when they share an
/// endpoint or are joined by an edge.
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 128, "induced matching search supports at most 128 edges, got {m}");
    let mut conflict = vec![0u128; m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (edges[i], edges[j]);
            let clash = a.u == b.u
                || a.u == b.v
                || a.v == b.u
                || a.v == b.v
                || g.has_edge(a.u, b.u)
                || g.has_edge(a.u, b.v)
                || g.has_edge(a.v, b.u)
                || g.has_edge(a.v, b.v);
            if clash {
                conflict[i] |= 1 << j;
                conflict[j] |= 1 << i;
            }
        }
    }
    fn mis(conflict: &[u128], avail: u128) -> usize {
        let mut best_v = None;
        let mut best_deg = 0;
        let mut rest = avail;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (conflict[v] & avail).count_ones() as usize;
            if d > best_deg || (d > 0 && best_v.is_none()) {
                best_v = Some(v);
                best_deg = d;
            }
        }
        match best_v {
            None => avail.count_ones() as usize,
            Some(v) => {
                let with_v = 1 + mis(conflict, avail & !conflict[v] & !(1u128 << v));
                let without_v = mis(conflict, avail & !(1u128 << v));
                with_v.max(without_v)
            }
        }
    }
    mis(&conflict, if m == 128 { u128::MAX } else { (1u128 << m) - 1 })
}

/// Search candidate: one potential component.
struct Candidate {
    set: u32,
    /// Union of closed neighborhoods; used by the induced search only.
    closed_nb: u32,
    weight: usize,
    comp: HComponent,
}

fn edge_candidates(g: &Graph) -> Vec<Candidate> {
    g.edges()
        .into_iter()
        .map(|e| {
            let set = 1u32 << e.u | 1 << e.v;
            Candidate {
                set,
                closed_nb: g.closed_neighborhood(e.u).0 | g.closed_neighborhood(e.v).0,
                weight: 1,
                comp: HComponent::K2 { u: e.u, v: e.v },
            }
        })
        .collect()
}

fn cycle_candidates(g: &Graph, fam: &HFamily, chordless_only: bool) -> Vec<Candidate> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    for k in fam.cycle_lengths() {
        if k > g.n() {
            continue;
        }
        for cyc in g.cycles_of_length(k) {
            if chordless_only && !g.is_chordless_cycle(&cyc) {
                continue;
            }
            let set: VertexSet = cyc.iter().copied().collect();
            if !seen.insert(set.0) {
                continue; // one representative orientation per vertex set
            }
            let closed_nb = cyc.iter().fold(0u32, |a, &v| a | g.closed_neighborhood(v).0);
            out.push(Candidate {
                set: set.0,
                closed_nb,
                weight: k / 2,
                comp: HComponent::Cycle { vertices: cyc },
            });
        }
    }
    out
}

/// max{match(H) : H an induced H-subgraph}, with a witness.
///
/// Candidates are edges and chordless family cycles; a combination is an
/// induced H-subgraph exactly when each new candidate avoids the closed
/// neighborhoods of the already chosen ones.
pub fn ind_match_h(g: &Graph, fam: &HFamily) -> (usize, Option<HSubgraph>) {
    let mut cands = edge_candidates(g);
    cands.extend(cycle_candidates(g, fam, true));
    if cands.is_empty() {
        return (0, None);
    }
    cands.sort_by_key(|c| (c.set, c.weight));
    let suffix: Vec<usize> = {
        let mut s = vec![0; cands.len() + 1];
        for i in (0..cands.len()).rev() {
            s[i] = s[i + 1] + cands[i].weight;
        }
        s
    };
    struct Best {
        value: usize,
        chosen: Vec<usize>,
    }
    fn search(
        cands: &[Candidate],
        suffix: &[usize],
        from: usize,
        blocked: u32,
        acc: usize,
        cur: &mut Vec<usize>,
        best: &mut Best,
    ) {
        if acc > best.value {
            best.value = acc;
            best.chosen = cur.clone();
        }
        for i in from..cands.len() {
            if acc + suffix[i] <= best.value {
                return; // suffix sums shrink; nothing further can help
            }
            if cands[i].set & blocked == 0 {
                cur.push(i);
                search(cands, suffix, i + 1, blocked | cands[i].closed_nb, acc + cands[i].weight, cur, best);
                cur.pop();
            }
        }
    }
    let mut best = Best { value: 0, chosen: Vec::new() };
    search(&cands, &suffix, 0, 0, 0, &mut Vec::new(), &mut best);
    let witness = HSubgraph {
        components: best.chosen.iter().map(|&i| cands[i].comp.clone()).collect(),
    };
    if best.value == 0 {
        (0, None)
    } else {
        debug_assert!(witness.is_induced_in(g));
        debug_assert_eq!(witness.match_number(), best.value);
        (best.value, Some(witness))
    }
}

/// min{match(H) : H a maximal H-subgraph}, with a witness.
///
/// Maximality means V(H) is a vertex cover. The search repeatedly covers the
/// first untouched edge; cycle candidates here are all family cycles,
/// chords allowed, per the subgraph (not induced subgraph) reading.
pub fn min_match_h(g: &Graph, fam: &HFamily) -> (usize, Option<HSubgraph>) {
    if !g.has_any_edge() {
        return (0, None);
    }
    let mut cands = edge_candidates(g);
    cands.extend(cycle_candidates(g, fam, false));
    cands.sort_by_key(|c| (c.set, c.weight));
    let by_vertex: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            (0..cands.len()).filter(|&i| cands[i].set & (1 << v) != 0).collect()
        })
        .collect();
    let edges = g.edges();
    struct Best {
        value: usize,
        chosen: Vec<usize>,
    }
    #[allow(clippy::too_many_arguments)]
    fn search(
        cands: &[Candidate],
        by_vertex: &[Vec<usize>],
        edges: &[crate::graph::Edge],
        used: u32,
        acc: usize,
        cur: &mut Vec<usize>,
        best: &mut Best,
    ) {
        if acc >= best.value {
            return;
        }
        let uncovered = edges.iter().find(|e| used & (1 << e.u | 1 << e.v) == 0);
        let Some(e) = uncovered else {
            best.value = acc;
            best.chosen = cur.clone();
            return;
        };
        // Any completion must include a disjoint component through u or v.
        let mut touching: Vec<usize> =
            by_vertex[e.u].iter().chain(&by_vertex[e.v]).copied().collect();
        touching.sort_unstable();
        touching.dedup();
        for i in touching {
            if cands[i].set & used == 0 {
                cur.push(i);
                search(cands, by_vertex, edges, used | cands[i].set, acc + cands[i].weight, cur, best);
                cur.pop();
            }
        }
    }
    let mut best = Best { value: usize::MAX, chosen: Vec::new() };
    search(&cands, &by_vertex, &edges, 0, 0, &mut Vec::new(), &mut best);
    let witness = HSubgraph {
        components: best.chosen.iter().map(|&i| cands[i].comp.clone()).collect(),
    };
    debug_assert!(is_maximal_h_subgraph(g, &witness));
    debug_assert_eq!(witness.match_number(), best.value);
    (best.value, Some(witness))
}

/// Is `s` a maximal H-subgraph of `g`? With K2 in the family this is
/// exactly: nothing outside V(s) spans an edge. Panics if `s` is not a valid
/// subgraph of `g`.
pub fn is_maximal_h_subgraph(g: &Graph, s: &HSubgraph) -> bool {
    s.validate(g).expect("subgraph must be valid in the ambient graph");
    g.is_vertex_cover(s.vertex_set())
}

/// Lemma premise: does this cycle's vertex set touch every edge? Errors when
/// the list does not trace a cycle of `g`.
pub fn cycle_cover_bound_premise(g: &Graph, cycle: &[usize]) -> Result<bool, HSubgraphError> {
    let comp = HComponent::Cycle { vertices: cycle.to_vec() };
    HSubgraph { components: vec![comp] }.validate(g)?;
    Ok(g.is_vertex_cover(cycle.iter().copied().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_construction() {
        assert_eq!(HFamily::new([5, 5, 3]).unwrap().cycle_lengths().collect::<Vec<_>>(), vec![3, 5]);
        assert_eq!(HFamily::new([2]), Err(BadCycleLength(2)));
        assert!(HFamily::k2_only().cycle_lengths().next().is_none());
        assert!(HFamily::k2_c5().has_cycle(5));
    }

    #[test]
    fn classical_matching_numbers() {
        assert_eq!(matching_number(&Graph::cycle(5)), 2);
        assert_eq!(matching_number(&Graph::edgeless(6)), 0);
        assert_eq!(matching_number(&Graph::cycle(5).add_whiskers()), 5);
        assert_eq!(matching_number(&Graph::complete(7)), 3);
        assert_eq!(matching_number(&Graph::path(6)), 3);
    }

    #[test]
    fn min_maximal_matching_values() {
        assert_eq!(min_maximal_matching(&Graph::cycle(5)), 2);
        assert_eq!(min_maximal_matching(&Graph::path(2)), 1);
        assert_eq!(min_maximal_matching(&Graph::cycle(5).add_whiskers()), 3);
        assert_eq!(min_maximal_matching(&Graph::edgeless(3)), 0);
        // Star: one edge dominates everything.
        assert_eq!(min_maximal_matching(&Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])), 1);
    }

    #[test]
    fn induced_matching_values() {
        assert_eq!(induced_matching_number(&Graph::cycle(5)), 1);
        let two_k2 = Graph::path(2).disjoint_union(&Graph::path(2));
        assert_eq!(induced_matching_number(&two_k2), 2);
        for n in 2..=7 {
            assert_eq!(induced_matching_number(&Graph::complete(n)), 1, "K{n}");
        }
        assert_eq!(induced_matching_number(&Graph::path(6)), 2);
        assert_eq!(induced_matching_number(&Graph::edgeless(4)), 0);
    }

    #[test]
    fn subgraph_validation() {
        let g = Graph::cycle(5);
        let full_cycle = HSubgraph {
            components: vec![HComponent::Cycle { vertices: vec![0, 1, 2, 3, 4] }],
        };
        assert!(full_cycle.validate(&g).is_ok());
        assert!(full_cycle.is_induced_in(&g));
        assert_eq!(full_cycle.match_number(), 2);

        let bad_edge = HSubgraph { components: vec![HComponent::K2 { u: 0, v: 2 }] };
        assert_eq!(bad_edge.validate(&g), Err(HSubgraphError::MissingEdge(0, 2)));

        let overlapping = HSubgraph {
            components: vec![HComponent::K2 { u: 0, v: 1 }, HComponent::K2 { u: 1, v: 2 }],
        };
        assert_eq!(overlapping.validate(&g), Err(HSubgraphError::Overlap(1)));

        // A chorded 4-cycle in K4 is a valid subgraph but not induced.
        let k4 = Graph::complete(4);
        let square = HSubgraph {
            components: vec![HComponent::Cycle { vertices: vec![0, 1, 2, 3] }],
        };
        assert!(square.validate(&k4).is_ok());
        assert!(!square.is_induced_in(&k4));
    }

    #[test]
    fn maximality_is_the_cover_condition() {
        let g = Graph::cycle(5);
        let one_edge = HSubgraph { components: vec![HComponent::K2 { u: 0, v: 1 }] };
        assert!(!is_maximal_h_subgraph(&g, &one_edge));
        let k2 = Graph::path(2);
        let its_edge = HSubgraph { components: vec![HComponent::K2 { u: 0, v: 1 }] };
        assert!(is_maximal_h_subgraph(&k2, &its_edge));
        // The central cycle of a whiskered C5: pendants left over, all
        // independent.
        let w = Graph::cycle(5).add_whiskers();
        let central = HSubgraph {
            components: vec![HComponent::Cycle { vertices: vec![0, 1, 2, 3, 4] }],
        };
        assert!(is_maximal_h_subgraph(&w, &central));
    }

    #[test]
    fn ind_match_h_values() {
        let fam = HFamily::k2_c5();
        let (v, w) = ind_match_h(&Graph::cycle(5), &fam);
        assert_eq!(v, 2);
        assert!(w.unwrap().is_induced_in(&Graph::cycle(5)));
        assert_eq!(ind_match_h(&Graph::edgeless(5), &fam), (0, None));
        // The whiskered 5-cycle contains its central cycle induced.
        let wg = Graph::cycle(5).add_whiskers();
        assert_eq!(ind_match_h(&wg, &fam).0, 2);
        // In K4 no chordless 5-cycle exists; a single edge is the best.
        assert_eq!(ind_match_h(&Graph::complete(4), &fam).0, 1);
    }

    #[test]
    fn min_match_h_values() {
        let fam = HFamily::k2_c5();
        assert_eq!(min_match_h(&Graph::path(2), &fam).0, 1);
        assert_eq!(min_match_h(&Graph::edgeless(2), &fam), (0, None));
        // Whiskered C5: the central cycle covers everything with weight 2,
        // beating the classical min-match of 3.
        let wg = Graph::cycle(5).add_whiskers();
        let (v, witness) = min_match_h(&wg, &fam);
        assert_eq!(v, 2);
        let witness = witness.unwrap();
        assert!(is_maximal_h_subgraph(&wg, &witness));
        assert_eq!(witness.match_number(), 2);
        assert_eq!(min_maximal_matching(&wg), 3);
    }

    #[test]
    fn k2_family_collapses_to_classical() {
        let fam = HFamily::k2_only();
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::path(7),
            Graph::paw(),
            Graph::cycle(5).add_whiskers(),
            Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]),
        ];
        for g in graphs {
            assert_eq!(ind_match_h(&g, &fam).0, induced_matching_number(&g), "{g:?}");
            assert_eq!(min_match_h(&g, &fam).0, min_maximal_matching(&g), "{g:?}");
        }
    }

    #[test]
    fn h_numbers_additive_over_disjoint_union() {
        let fam = HFamily::k2_c5();
        let pairs = [
            (Graph::cycle(5), Graph::path(3)),
            (Graph::complete(4), Graph::cycle(5)),
            (Graph::paw(), Graph::path(2)),
        ];
        for (a, b) in pairs {
            let u = a.disjoint_union(&b);
            assert_eq!(
                ind_match_h(&u, &fam).0,
                ind_match_h(&a, &fam).0 + ind_match_h(&b, &fam).0
            );
            assert_eq!(
                min_match_h(&u, &fam).0,
                min_match_h(&a, &fam).0 + min_match_h(&b, &fam).0
            );
        }
    }

    #[test]
    fn cover_premise() {
        let c5 = Graph::cycle(5);
        assert_eq!(cycle_cover_bound_premise(&c5, &[0, 1, 2, 3, 4]), Ok(true));
        let w = Graph::cycle(5).add_whiskers();
        assert_eq!(cycle_cover_bound_premise(&w, &[0, 1, 2, 3, 4]), Ok(true));
        let apart = Graph::cycle(5).disjoint_union(&Graph::path(2));
        assert_eq!(cycle_cover_bound_premise(&apart, &[0, 1, 2, 3, 4]), Ok(false));
        assert_eq!(
            cycle_cover_bound_premise(&c5, &[0, 1, 3]),
            Err(HSubgraphError::MissingEdge(1, 3))
        );
        assert_eq!(
            cycle_cover_bound_premise(&c5, &[0, 1]),
            Err(HSubgraphError::ShortCycle(2))
        );
    }

    /// Definition-level oracle: scan all vertex subsets; a subset realizes an
    /// induced H-subgraph when every component of the induced graph is K2 or
    /// a family cycle.
    fn ind_match_h_oracle(g: &Graph, fam: &HFamily) -> usize {
        let mut best = 0;
        for u in g.vertices().subsets() {
            if u.is_empty() {
                continue;
            }
            let (h, _) = g.induced_subgraph(u);
            let mut value = 0;
            let mut ok = true;
            for comp in h.connected_components() {
                let k = comp.len();
                let inner = h.induced_edge_count(comp);
                let degrees_two =
                    comp.iter().all(|v| (h.neighbors(v).0 & comp.0).count_ones() == 2);
                if k == 2 && inner == 1 {
                    value += 1;
                } else if k >= 3 && inner == k && degrees_two && fam.has_cycle(k) {
                    value += k / 2;
                } else {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = best.max(value);
            }
        }
        best
    }

    #[test]
    fn ind_match_h_matches_subset_oracle() {
        let fam35 = HFamily::new([3, 5]).unwrap();
        let fam5 = HFamily::k2_c5();
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::cycle(7),
            Graph::complete(5),
            Graph::paw(),
            Graph::path(7),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]),
        ];
        for g in graphs {
            assert_eq!(ind_match_h(&g, &fam5).0, ind_match_h_oracle(&g, &fam5), "{g:?} fam5");
            assert_eq!(ind_match_h(&g, &fam35).0, ind_match_h_oracle(&g, &fam35), "{g:?} fam35");
        }
    }

    /// Definition-level oracle for the minimum: for every vertex cover U, the
    /// cheapest way to partition U into adjacent pairs and family cycles
    /// (chords allowed), by exhaustive recursion.
    fn min_match_h_oracle(g: &Graph, fam: &HFamily) -> usize {
        fn has_hamilton_cycle(g: &Graph, set: VertexSet) -> bool {
            let verts = set.to_vec();
            fn perm(g: &Graph, verts: &[usize], order: &mut Vec<usize>, used: u64) -> bool {
                if order.len() == verts.len() {
                    return g.has_edge(*order.last().unwrap(), order[0]);
                }
                for (i, &v) in verts.iter().enumerate() {
                    if used & (1 << i) != 0 {
                        continue;
                    }
                    if !order.is_empty() && !g.has_edge(*order.last().unwrap(), v) {
                        continue;
                    }
                    order.push(v);
                    if perm(g, verts, order, used | (1 << i)) {
                        order.pop();
                        return true;
                    }
                    order.pop();
                }
                false
            }
            perm(g, &verts, &mut vec![], 0)
        }
        fn cheapest_partition(g: &Graph, fam: &HFamily, rest: VertexSet) -> Option<usize> {
            let Some(v) = rest.min_vertex() else { return Some(0) };
            let mut best: Option<usize> = None;
            // v pairs with an adjacent partner.
            for w in g.neighbors(v).intersect(rest).iter() {
                if let Some(sub) = cheapest_partition(g, fam, rest.without(v).without(w)) {
                    best = Some(best.map_or(1 + sub, |b: usize| b.min(1 + sub)));
                }
            }
            // Or v lies on a family cycle inside rest.
            for k in fam.cycle_lengths() {
                for cand in rest.without(v).subsets() {
                    if cand.len() != k - 1 {
                        continue;
                    }
                    let cyc = cand.with(v);
                    if has_hamilton_cycle(g, cyc) {
                        if let Some(sub) = cheapest_partition(g, fam, rest.minus(cyc)) {
                            let total = k / 2 + sub;
                            best = Some(best.map_or(total, |b: usize| b.min(total)));
                        }
                    }
                }
            }
            best
        }
        if !g.has_any_edge() {
            return 0;
        }
        let mut best = usize::MAX;
        for u in g.vertices().subsets() {
            if !g.is_vertex_cover(u) {
                continue;
            }
            if let Some(v) = cheapest_partition(g, fam, u) {
                best = best.min(v);
            }
        }
        best
    }

    #[test]
    fn min_match_h_matches_partition_oracle() {
        let fam5 = HFamily::k2_c5();
        let fam3 = HFamily::new([3]).unwrap();
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::paw(),
            Graph::path(6),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]),
        ];
        for g in graphs {
            assert_eq!(min_match_h(&g, &fam5).0, min_match_h_oracle(&g, &fam5), "{g:?} fam5");
            assert_eq!(min_match_h(&g, &fam3).0, min_match_h_oracle(&g, &fam3), "{g:?} fam3");
        }
    }

    #[test]
    fn sandwich_on_named_graphs() {
        let fam = HFamily::k2_c5();
        for g in [
            Graph::cycle(5),
            Graph::cycle(7),
            Graph::complete(6),
            Graph::paw(),
            Graph::cycle(5).add_whiskers(),
        ] {
            let im = induced_matching_number(&g);
            let imh = ind_match_h(&g, &fam).0;
            let mmh = min_match_h(&g, &fam).0;
            let mm = min_maximal_matching(&g);
            let m = matching_number(&g);
            assert!(im <= imh, "{g:?}");
            assert!(imh <= mmh, "{g:?}");
            assert!(mmh <= mm, "{g:?}");
            assert!(im <= m && mm <= m && m <= 2 * mm, "{g:?}");
        }
    }
}
