//! Runtime battery of known values: every spot value the test suite relies
//! on, recomputed on demand so a built binary can vouch for itself.

use crate::cm::{is_cohen_macaulay, is_doubly_cohen_macaulay, is_gorenstein};
use crate::field::PrimeField;
use crate::graph::{Edge, Graph};
use crate::graph6;
use crate::hochster::{betti_table, regularity};
use crate::homology::reduced_homology_ranks;
use crate::matching::{
    cycle_cover_bound_premise, ind_match_h, induced_matching_number, is_maximal_h_subgraph,
    matching_number, min_maximal_matching, min_match_h, HComponent, HFamily, HSubgraph,
};
use crate::simplicial::SimplicialComplex;
use crate::structure::{
    basic_five_cycles, check_pawfree_structure, girth, is_basic_five_cycle, is_paw_free,
    pc_certificate, pendant_edges, pendant_vertices, PcMode,
};
use crate::theorems::{verify_graph, CheckContext};
use crate::VertexSet;

#[derive(Clone, Copy, Debug)]
pub struct SelfTestResult {
    pub name: &'static str,
    pub ok: bool,
}

pub fn all_pass(results: &[SelfTestResult]) -> bool {
    results.iter().all(|r| r.ok)
}

struct Battery {
    results: Vec<SelfTestResult>,
}

impl Battery {
    fn check(&mut self, name: &'static str, ok: bool) {
        self.results.push(SelfTestResult { name, ok });
    }
}

fn vs(vals: &[usize]) -> VertexSet {
    vals.iter().copied().collect()
}

pub fn run() -> Vec<SelfTestResult> {
    let mut b = Battery { results: Vec::new() };
    graph_section(&mut b);
    matching_section(&mut b);
    complex_section(&mut b);
    homology_section(&mut b);
    structure_section(&mut b);
    pipeline_section(&mut b);
    b.results
}

fn graph_section(b: &mut Battery) {
    let c5 = Graph::cycle(5);
    let wc5 = c5.add_whiskers();

    b.check("induced_c5_on_all_vertices_is_c5", {
        let (h, _) = c5.induced_subgraph(c5.vertices());
        h.edge_count() == 5 && h.n() == 5 && girth(&h) == Some(5)
    });
    b.check("induced_c5_on_consecutive_triple_is_two_edge_path", {
        let (h, _) = c5.induced_subgraph(vs(&[0, 1, 2]));
        h.n() == 3 && h.edge_count() == 2
    });
    b.check("induced_paw_on_triangle_is_k3", {
        let (h, _) = Graph::paw().induced_subgraph(vs(&[0, 1, 2]));
        h.edge_count() == 3 && h.n() == 3
    });
    b.check("c5_minus_vertex_is_p4", {
        let h = c5.delete_vertices(VertexSet::singleton(0));
        h.n() == 4 && h.edge_count() == 3 && girth(&h).is_none()
    });
    b.check("delete_nothing_is_identity", {
        let h = c5.delete_vertices(VertexSet::EMPTY);
        h.edges() == c5.edges()
    });
    b.check("k4_minus_vertex_is_k3", {
        let h = Graph::complete(4).delete_vertices(VertexSet::singleton(3));
        h.n() == 3 && h.edge_count() == 3
    });
    b.check(
        "closed_neighborhood_of_isolated_vertex",
        Graph::edgeless(3).closed_neighborhood(1) == VertexSet::singleton(1),
    );
    b.check("closed_neighborhood_of_star_center_is_everything", {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        star.closed_neighborhood(0) == star.vertices()
    });
    b.check("closed_neighborhood_on_c5_is_arc", c5.closed_neighborhood(0) == vs(&[4, 0, 1]));
    b.check("components_of_2k2", {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let comps = g.connected_components();
        comps.len() == 2 && comps.iter().all(|c| c.len() == 2)
    });
    b.check("connected_graph_is_one_component", c5.connected_components().len() == 1);
    b.check("edgeless_components_are_singletons", {
        let comps = Graph::edgeless(3).connected_components();
        comps == vec![VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::singleton(2)]
    });
    b.check("alternate_c5_vertices_independent", c5.is_independent(vs(&[0, 2])));
    b.check("adjacent_c5_vertices_not_independent", !c5.is_independent(vs(&[0, 1])));
    b.check(
        "complement_of_independent_set_is_cover",
        c5.is_vertex_cover(c5.vertices().minus(vs(&[0, 2]))),
    );
    b.check("alpha_c5", c5.independence_number() == 2);
    b.check("alpha_complete", (1..=6).all(|n| Graph::complete(n).independence_number() == 1));
    b.check("alpha_edgeless", (0..=6).all(|n| Graph::edgeless(n).independence_number() == n));
    b.check("c5_unmixed", c5.is_unmixed());
    b.check("p4_unmixed", Graph::path(4).is_unmixed());
    b.check("star_not_unmixed", !Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).is_unmixed());
    b.check("whiskered_k1_is_k2", {
        let w = Graph::edgeless(1).add_whiskers();
        w.n() == 2 && w.edge_count() == 1
    });
    b.check("whiskered_c5_size", wc5.n() == 10 && wc5.edge_count() == 10);
    b.check("whiskered_k2_is_p4", {
        let w = Graph::complete(2).add_whiskers();
        w.n() == 4 && w.edge_count() == 3 && w.is_connected() && (0..4).all(|v| w.degree(v) <= 2)
    });
    b.check("union_k1_k2", {
        let g = Graph::edgeless(1).disjoint_union(&Graph::complete(2));
        g.n() == 3 && g.edge_count() == 1
    });
    b.check("union_c5_c5", {
        let g = c5.disjoint_union(&c5);
        g.n() == 10 && g.edge_count() == 10 && g.connected_components().len() == 2
    });
    b.check("union_with_nothing_is_identity", {
        let g = c5.disjoint_union(&Graph::edgeless(0));
        g.edges() == c5.edges() && g.n() == 5
    });
}

fn matching_section(b: &mut Battery) {
    let c5 = Graph::cycle(5);
    let wc5 = c5.add_whiskers();
    let fam5 = HFamily::k2_c5();

    b.check("match_c5", matching_number(&c5) == 2);
    b.check("match_edgeless", matching_number(&Graph::edgeless(4)) == 0);
    b.check("match_whiskered_c5", matching_number(&wc5) == 5);
    b.check("min_match_c5", min_maximal_matching(&c5) == 2);
    b.check("min_match_k2", min_maximal_matching(&Graph::complete(2)) == 1);
    b.check("min_match_whiskered_c5", min_maximal_matching(&wc5) == 3);
    b.check("ind_match_c5", induced_matching_number(&c5) == 1);
    b.check(
        "ind_match_2k2",
        induced_matching_number(&Graph::from_edges(4, &[(0, 1), (2, 3)])) == 2,
    );
    b.check(
        "ind_match_complete",
        (2..=6).all(|n| induced_matching_number(&Graph::complete(n)) == 1),
    );
    b.check("ind_match_k2c5_of_c5", ind_match_h(&c5, &fam5).0 == 2);
    b.check("ind_match_k2_family_collapses", {
        let fam = HFamily::k2_only();
        [&c5, &wc5, &Graph::paw(), &Graph::path(6)]
            .iter()
            .all(|g| ind_match_h(g, &fam).0 == induced_matching_number(g))
    });
    b.check("ind_match_k2c5_edgeless", ind_match_h(&Graph::edgeless(3), &fam5).0 == 0);
    b.check("min_match_k2c5_of_whiskered_c5", min_match_h(&wc5, &fam5).0 == 2);
    b.check("min_match_k2_family_collapses", {
        let fam = HFamily::k2_only();
        [&c5, &wc5, &Graph::paw(), &Graph::path(6)]
            .iter()
            .all(|g| min_match_h(g, &fam).0 == min_maximal_matching(g))
    });
    b.check("min_match_k2c5_of_k2", min_match_h(&Graph::complete(2), &fam5).0 == 1);
    b.check("single_edge_maximal_in_k2", {
        let s = HSubgraph { components: vec![HComponent::K2 { u: 0, v: 1 }] };
        is_maximal_h_subgraph(&Graph::complete(2), &s)
    });
    b.check("single_edge_not_maximal_in_c5", {
        let s = HSubgraph { components: vec![HComponent::K2 { u: 0, v: 1 }] };
        !is_maximal_h_subgraph(&c5, &s)
    });
    b.check("central_cycle_maximal_in_whiskered_c5", {
        let s = HSubgraph { components: vec![HComponent::Cycle { vertices: vec![0, 1, 2, 3, 4] }] };
        is_maximal_h_subgraph(&wc5, &s)
    });
    b.check("c5_covers_itself", cycle_cover_bound_premise(&c5, &[0, 1, 2, 3, 4]) == Ok(true));
    b.check(
        "central_cycle_covers_whiskered_c5",
        cycle_cover_bound_premise(&wc5, &[0, 1, 2, 3, 4]) == Ok(true),
    );
    b.check("cycle_does_not_cover_across_components", {
        let g = c5.disjoint_union(&Graph::complete(2));
        cycle_cover_bound_premise(&g, &[0, 1, 2, 3, 4]) == Ok(false)
    });
}

fn complex_section(b: &mut Battery) {
    let c5 = Graph::cycle(5);
    let dc5 = SimplicialComplex::independence_complex(&c5);

    b.check("complex_of_c5_is_five_nonadjacent_pairs", {
        dc5.facets().len() == 5
            && dc5.facets().iter().all(|f| f.len() == 2 && c5.is_independent(*f))
    });
    b.check("complex_of_complete_is_points", {
        let d = SimplicialComplex::independence_complex(&Graph::complete(4));
        d.facets().len() == 4 && d.facets().iter().all(|f| f.len() == 1)
    });
    b.check(
        "complex_of_edgeless_is_simplex",
        SimplicialComplex::independence_complex(&Graph::edgeless(4))
            == SimplicialComplex::simplex(4),
    );
    b.check("link_in_triangle_boundary_is_two_points", {
        let bd = SimplicialComplex::from_facets(3, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
        let lk = bd.link(0);
        lk.facets() == [VertexSet::singleton(1), VertexSet::singleton(2)]
    });
    b.check("deletion_from_simplex_is_smaller_simplex", {
        let d = SimplicialComplex::simplex(4).deletion(3);
        d.facets() == [vs(&[0, 1, 2])]
    });
    b.check("link_in_complex_of_c5", {
        let lk = dc5.link(0);
        lk.facets() == [VertexSet::singleton(2), VertexSet::singleton(3)]
    });
    b.check("join_of_points_is_edge", {
        let pt = SimplicialComplex::simplex(1);
        pt.join(&pt).facets() == [vs(&[0, 1])]
    });
    b.check("complex_of_union_is_join", {
        let g1 = Graph::path(3);
        let g2 = Graph::complete(3);
        let lhs = SimplicialComplex::independence_complex(&g1.disjoint_union(&g2));
        let rhs = SimplicialComplex::independence_complex(&g1)
            .join(&SimplicialComplex::independence_complex(&g2));
        lhs == rhs
    });
    b.check(
        "join_with_empty_complex_is_identity",
        dc5.join(&SimplicialComplex::empty(0)) == dc5,
    );
    b.check("f_vector_of_simplex3", SimplicialComplex::simplex(3).f_vector().0 == [3, 3, 1]);
    b.check("f_vector_of_c5_complex", dc5.f_vector().0 == [5, 5]);
    b.check("f_vector_of_point", SimplicialComplex::simplex(1).f_vector().0 == [1]);
    b.check("h_vector_of_c5_complex", dc5.h_vector().0 == [1, 3, 1]);
    b.check("h_vector_of_simplex", SimplicialComplex::simplex(4).h_vector().0 == [1, 0, 0, 0, 0]);
    b.check(
        "h_vector_of_three_points",
        SimplicialComplex::independence_complex(&Graph::complete(3)).h_vector().0 == [1, 2],
    );
    b.check("hilbert_numerator_of_c5_complex", {
        let h = dc5.hilbert_numerator();
        h.coeffs == [1, 3, 1] && h.denom_power == 2
    });
    b.check("hilbert_numerator_of_simplex", {
        let h = SimplicialComplex::simplex(4).hilbert_numerator();
        h.coeffs == [1, 0, 0, 0, 0] && h.denom_power == 4
    });
    b.check("hilbert_numerator_of_two_points", {
        let h = SimplicialComplex::independence_complex(&Graph::complete(2)).hilbert_numerator();
        h.coeffs == [1, 1] && h.denom_power == 1
    });
}

fn homology_section(b: &mut Battery) {
    let f2 = PrimeField::f2();
    let dc5 = SimplicialComplex::independence_complex(&Graph::cycle(5));

    b.check(
        "simplex_has_no_homology",
        reduced_homology_ranks(&SimplicialComplex::simplex(4), f2).all_zero(),
    );
    b.check("c5_complex_is_a_circle", {
        let h = reduced_homology_ranks(&dc5, f2);
        h.rank(1) == 1 && h.nonzero().count() == 1
    });
    b.check("two_points_have_h0", {
        let h = reduced_homology_ranks(
            &SimplicialComplex::independence_complex(&Graph::complete(2)),
            f2,
        );
        h.rank(0) == 1 && h.nonzero().count() == 1
    });
    b.check(
        "reg_of_complete_graphs",
        (2..=7).all(|n| {
            regularity(&SimplicialComplex::independence_complex(&Graph::complete(n)), f2) == 1
        }),
    );
    b.check("reg_of_c5", regularity(&dc5, f2) == 2);
    b.check("reg_of_simplex", regularity(&SimplicialComplex::simplex(4), f2) == 0);
    b.check("betti_table_of_k2_complex", {
        let t = betti_table(&SimplicialComplex::independence_complex(&Graph::complete(2)), f2);
        let higher = t.entries().filter(|&((i, _), _)| i >= 1).count();
        t.get(1, 2) == 1 && higher == 1
    });
    b.check("betti_table_of_c5_gives_reg_2", betti_table(&dc5, f2).regularity() == 2);
    b.check("simplex_betti_table_has_no_syzygies", {
        let t = betti_table(&SimplicialComplex::simplex(4), f2);
        let free = t.entries().all(|((i, _), _)| i == 0);
        free
    });
    b.check("c5_complex_cohen_macaulay", is_cohen_macaulay(&dc5, f2));
    b.check(
        "complete_graph_complexes_cohen_macaulay",
        (1..=5).all(|n| {
            is_cohen_macaulay(&SimplicialComplex::independence_complex(&Graph::complete(n)), f2)
        }),
    );
    b.check(
        "c4_complex_not_cohen_macaulay",
        !is_cohen_macaulay(&SimplicialComplex::independence_complex(&Graph::cycle(4)), f2),
    );
    b.check("c5_complex_doubly_cm", is_doubly_cohen_macaulay(&dc5, f2));
    b.check(
        "complete_graph_complexes_doubly_cm",
        (2..=5).all(|n| {
            is_doubly_cohen_macaulay(
                &SimplicialComplex::independence_complex(&Graph::complete(n)),
                f2,
            )
        }),
    );
    b.check(
        "p3_complex_not_doubly_cm",
        !is_doubly_cohen_macaulay(&SimplicialComplex::independence_complex(&Graph::path(3)), f2),
    );
    b.check(
        "k2_complex_gorenstein",
        is_gorenstein(&SimplicialComplex::independence_complex(&Graph::complete(2)), f2),
    );
    b.check("c5_complex_gorenstein", is_gorenstein(&dc5, f2));
    b.check(
        "larger_complete_graphs_not_gorenstein",
        (3..=5).all(|n| {
            !is_gorenstein(&SimplicialComplex::independence_complex(&Graph::complete(n)), f2)
        }),
    );
}

fn structure_section(b: &mut Battery) {
    let c5 = Graph::cycle(5);
    let wc5 = c5.add_whiskers();

    b.check("girth_c5", girth(&c5) == Some(5));
    b.check("girth_paw", girth(&Graph::paw()) == Some(3));
    b.check("girth_tree_is_none", girth(&Graph::path(5)).is_none());
    b.check("whiskered_c5_is_all_pendant", pendant_vertices(&wc5) == wc5.vertices());
    b.check("c5_has_no_pendants", pendant_edges(&c5).is_empty());
    b.check(
        "k2_is_its_own_pendant_edge",
        pendant_edges(&Graph::complete(2)) == [Edge::new(0, 1)],
    );
    b.check("c5_own_cycle_is_basic", basic_five_cycles(&c5).len() == 1);
    b.check("whiskered_c5_central_cycle_not_basic", basic_five_cycles(&wc5).is_empty());
    b.check("one_attachment_keeps_cycle_basic", {
        // C5 with a pendant at one vertex: a single degree-3 vertex, so no
        // adjacent pair of high-degree vertices.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]);
        is_basic_five_cycle(&g, &[0, 1, 2, 3, 4])
    });
    b.check("c5_in_class_pc", pc_certificate(&c5, PcMode::Existential).is_some());
    b.check("whiskered_graphs_in_class_pc", {
        [Graph::complete(3), Graph::path(4), c5.clone()]
            .iter()
            .all(|g| pc_certificate(&g.add_whiskers(), PcMode::Existential).is_some())
    });
    b.check(
        "k3_not_in_class_pc",
        pc_certificate(&Graph::complete(3), PcMode::Existential).is_none(),
    );
    b.check("c5_paw_free", is_paw_free(&c5));
    b.check("complete_graphs_paw_free", (1..=6).all(|n| is_paw_free(&Graph::complete(n))));
    b.check("paw_is_not_paw_free", !is_paw_free(&Graph::paw()));
    b.check(
        "k3_with_c5_has_lemma_shape",
        check_pawfree_structure(&Graph::complete(3).disjoint_union(&c5)) == Ok(true),
    );
    b.check("c5_has_lemma_shape", check_pawfree_structure(&c5) == Ok(true));
    b.check("p4_fails_lemma_hypotheses", check_pawfree_structure(&Graph::path(4)).is_err());
}

fn pipeline_section(b: &mut Battery) {
    let f2 = PrimeField::f2();
    let c5 = Graph::cycle(5);
    let wc5 = c5.add_whiskers();

    b.check("graph6_k1", graph6::decode("@").map(|g| g.n() == 1 && g.edge_count() == 0) == Ok(true));
    b.check(
        "graph6_k2",
        graph6::decode("A_").map(|g| g.n() == 2 && g.has_edge(0, 1)) == Ok(true),
    );
    b.check(
        "graph6_round_trip_example",
        graph6::decode("D?{").map(|g| graph6::encode(&g) == "D?{" && g.n() == 5) == Ok(true),
    );
    b.check("enumeration_counts", {
        [(3usize, 4usize), (4, 11), (5, 34)]
            .iter()
            .all(|&(n, want)| crate::enumerate::enumerate_graphs(n).map(|v| v.len()) == Ok(want))
    });

    let ctx = CheckContext::with_defaults(f2);
    b.check("c5_report", {
        let r = verify_graph(&c5, &ctx);
        let i = &r.invariants;
        i.reg == 2
            && i.ind_match_k2c5 == 2
            && i.min_match_k2c5 == 2
            && i.cohen_macaulay
            && i.doubly_cohen_macaulay
            && i.gorenstein
            && i.in_class_pc
            && r.failed_ids().is_empty()
    });
    b.check("k1_report", {
        let r = verify_graph(&Graph::edgeless(1), &ctx);
        let i = &r.invariants;
        i.matching == 0
            && i.min_match == 0
            && i.ind_match == 0
            && i.ind_match_k2c5 == 0
            && i.min_match_k2c5 == 0
            && i.reg == 0
            && i.gorenstein
            && r.failed_ids().is_empty()
    });
    b.check("whiskered_c5_report", {
        let r = verify_graph(&wc5, &ctx);
        let i = &r.invariants;
        i.min_match_k2c5 == 2
            && i.min_match == 3
            && i.ind_match_k2c5 <= i.reg
            && i.reg <= i.min_match_k2c5
            && r.failed_ids().is_empty()
    });
    b.check("wider_cycle_family_reports_stay_clean", {
        let wide = CheckContext::new(
            f2,
            HFamily::new([3, 5]).expect("lengths are valid"),
            PcMode::default(),
        );
        [&c5, &wc5, &Graph::complete(4), &Graph::paw(), &Graph::cycle(6)]
            .iter()
            .all(|g| verify_graph(g, &wide).failed_ids().is_empty())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_is_clean() {
        let results = run();
        let failed: Vec<&str> = results.iter().filter(|r| !r.ok).map(|r| r.name).collect();
        assert!(failed.is_empty(), "failing selftests: {failed:?}");
        assert!(results.len() > 80);
        assert!(all_pass(&results));
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = run().iter().map(|r| r.name).collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total);
    }
}
