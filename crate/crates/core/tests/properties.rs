//! Randomized cross-checks between independently implemented routes.

use edgereg::enumerate::canonical_form;
use edgereg::field::PrimeField;
use edgereg::graph::Graph;
use edgereg::graph6;
use edgereg::hochster::regularity;
use edgereg::homology::ChainComplex;
use edgereg::matching::{ind_match_h, induced_matching_number, min_maximal_matching, min_match_h, HFamily};
use edgereg::simplicial::SimplicialComplex;
use edgereg::structure::{girth, is_paw_free};
use edgereg::VertexSet;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        let full = VertexSet::full(n).0;
        proptest::collection::vec(0..=full, 1..=6).prop_map(move |gens| {
            SimplicialComplex::from_facets(n, gens.into_iter().map(VertexSet))
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(7)) {
        let back = graph6::decode(&graph6::encode(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn sandwich_chain(g in arb_graph(6)) {
        let fam = HFamily::k2_c5();
        let im = induced_matching_number(&g);
        let imh = ind_match_h(&g, &fam).0;
        let reg = regularity(&SimplicialComplex::independence_complex(&g), PrimeField::f2());
        let mmh = min_match_h(&g, &fam).0;
        let mm = min_maximal_matching(&g);
        prop_assert!(im <= imh, "im {} > imh {}", im, imh);
        prop_assert!(imh <= reg, "imh {} > reg {}", imh, reg);
        prop_assert!(reg <= mmh, "reg {} > mmh {}", reg, mmh);
        prop_assert!(mmh <= mm, "mmh {} > mm {}", mmh, mm);
    }

    #[test]
    fn regularity_and_h_matchings_add_over_unions(g1 in arb_graph(4), g2 in arb_graph(4)) {
        let fam = HFamily::k2_c5();
        let f2 = PrimeField::f2();
        let g = g1.disjoint_union(&g2);
        let reg = |g: &Graph| regularity(&SimplicialComplex::independence_complex(g), f2);
        prop_assert_eq!(reg(&g), reg(&g1) + reg(&g2));
        prop_assert_eq!(
            ind_match_h(&g, &fam).0,
            ind_match_h(&g1, &fam).0 + ind_match_h(&g2, &fam).0
        );
        prop_assert_eq!(
            min_match_h(&g, &fam).0,
            min_match_h(&g1, &fam).0 + min_match_h(&g2, &fam).0
        );
    }

    #[test]
    fn boundary_composition_vanishes(c in arb_complex(6)) {
        prop_assert!(ChainComplex::new(&c).boundary_squares_to_zero());
    }

    #[test]
    fn h_vector_identities(c in arb_complex(7)) {
        // Sum of the h-vector counts facets of top dimension; h_1 counts
        // vertices minus dim + 1.
        let f = c.f_vector();
        let h = c.h_vector();
        let d = c.dim() + 1;
        let total: i64 = h.0.iter().sum();
        prop_assert_eq!(total, f.f(c.dim()) as i64);
        if d >= 1 {
            prop_assert_eq!(h.0[1], f.f(0) as i64 - d as i64);
        }
    }

    #[test]
    fn hilbert_series_matches_direct_count(c in arb_complex(7)) {
        let num = c.hilbert_numerator();
        let through = 2 * num.coeffs.len();
        let series = num.series_prefix(through);
        for (k, expect) in series.iter().enumerate() {
            prop_assert_eq!(*expect, c.hilbert_function_direct(k) as i128);
        }
    }

    #[test]
    fn high_girth_graphs_are_paw_free(g in arb_graph(7)) {
        if girth(&g).is_none_or(|c| c >= 5) {
            prop_assert!(is_paw_free(&g));
        }
    }

    #[test]
    fn cohen_macaulay_implies_unmixed(g in arb_graph(6)) {
        let c = SimplicialComplex::independence_complex(&g);
        if edgereg::cm::is_cohen_macaulay(&c, PrimeField::f2()) {
            prop_assert!(g.is_unmixed());
        }
    }

    #[test]
    fn independence_cover_duality(g in arb_graph(7), mask in any::<u32>()) {
        let s = VertexSet(mask).intersect(g.vertices());
        prop_assert_eq!(g.is_independent(s), g.is_vertex_cover(g.vertices().minus(s)));
    }

    #[test]
    fn canonical_form_ignores_labeling(g in arb_graph(6), perm in proptest::sample::subsequence((0..6usize).collect::<Vec<_>>(), 6).prop_shuffle()) {
        let n = g.n();
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let relabeled = Graph::from_edges(
            n,
            &g.edges().iter().map(|e| (p[e.u], p[e.v])).collect::<Vec<_>>(),
        );
        prop_assert_eq!(canonical_form(&relabeled), canonical_form(&g));
    }
}
