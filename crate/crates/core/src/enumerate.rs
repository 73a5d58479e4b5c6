//! Exhaustive small-graph enumeration, one representative per isomorphism
//! class.
//!
//! The canonical form of a graph is its lexicographically least adjacency
//! bit string over all vertex permutations. Bits are taken in column order,
//! pairs (0,1), (0,2), (1,2), (0,3), ..., so placing vertices one position
//! at a time extends the string contiguously and prefixes prune the
//! permutation search.

use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

/// Canonical forms pack C(n,2) bits into a u64.
pub const MAX_CANONICAL_VERTICES: usize = 11;

/// Enumeration extends one vertex at a time; above this the permutation
/// scans stop being cheap.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("built-in enumeration is capped at n <= {max}; supply a graph6 file for n = {n}")]
pub struct EnumerationCapExceeded {
    pub n: usize,
    pub max: usize,
}

fn pair_bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographically least adjacency bit string over all relabelings,
/// earlier pairs in higher bits.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical form holds at most C(11,2) bits");
    let total_bits = pair_bit_count(n);
    fn place(
        g: &Graph,
        total_bits: usize,
        perm: &mut Vec<usize>,
        used: u32,
        acc: u64,
        bits: usize,
        best: &mut u64,
    ) {
        let pos = perm.len();
        if pos == g.n() {
            if acc < *best {
                *best = acc;
            }
            return;
        }
        for v in 0..g.n() {
            if used & (1 << v) != 0 {
                continue;
            }
            let mut block = 0u64;
            for &earlier in perm.iter() {
                block = (block << 1) | g.has_edge(earlier, v) as u64;
            }
            let acc2 = (acc << pos) | block;
            let bits2 = bits + pos;
            if acc2 > *best >> (total_bits - bits2) {
                continue; // prefix already beaten
            }
            perm.push(v);
            place(g, total_bits, perm, used | 1 << v, acc2, bits2, best);
            perm.pop();
        }
    }
    if total_bits == 0 {
        return 0;
    }
    let mut best = u64::MAX >> (64 - total_bits);
    place(g, total_bits, &mut Vec::new(), 0, 0, 0, &mut best);
    best
}

/// Rebuild the graph a canonical form describes, in canonical labeling.
pub fn graph_from_canonical_form(n: usize, form: u64) -> Graph {
    let total_bits = pair_bit_count(n);
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if form >> (total_bits - 1 - t) & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// All graphs on n vertices up to isomorphism, canonically labeled, in
/// ascending canonical-form order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerationCapExceeded> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(EnumerationCapExceeded { n, max: MAX_ENUMERATION_VERTICES });
    }
    // Every class on k+1 vertices is an extension of a class on k vertices,
    // so growing representatives by one vertex with every possible
    // neighborhood reaches everything.
    let mut forms: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 0..n {
        forms = forms
            .par_iter()
            .flat_map_iter(|&form| {
                let g = graph_from_canonical_form(k, form);
                (0u32..1 << k).map(move |nb| {
                    let mut edges: Vec<(usize, usize)> =
                        g.edges().iter().map(|e| (e.u, e.v)).collect();
                    for i in 0..k {
                        if nb & (1 << i) != 0 {
                            edges.push((i, k));
                        }
                    }
                    canonical_form(&Graph::from_edges(k + 1, &edges))
                })
            })
            .collect();
    }
    Ok(forms.into_iter().map(|f| graph_from_canonical_form(n, f)).collect())
}
