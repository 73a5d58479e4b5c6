//! Castelnuovo-Mumford regularity and graded Betti numbers of the
//! Stanley-Reisner ring, through Hochster's formula:
//!
//!   beta_{i,j}(K[Delta]) = sum over |W| = j of rank ~H_{j-i-1}(Delta|_W; K)
//!
//! so reg(K[Delta]) = max{d+1 : some induced subcomplex has ~H_d != 0}.
//! Subset evaluations are independent; the sweeps combine them by max/sum,
//! so results do not depend on evaluation order.

use crate::bitset::VertexSet;
use crate::field::PrimeField;
use crate::homology::ChainComplex;
use crate::simplicial::SimplicialComplex;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Faces of the restriction to `w`, grouped by cardinality. The input levels
/// come from the ambient complex; empty top groups are trimmed.
fn restricted_levels(levels: &[Vec<u32>], w: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = levels
        .iter()
        .map(|level| level.iter().copied().filter(|f| f & !w == 0).collect())
        .collect();
    while out.len() > 1 && out.last().unwrap().is_empty() {
        out.pop();
    }
    out
}

fn max_degree_in(levels: &[Vec<u32>], w: VertexSet, field: PrimeField) -> Option<i32> {
    let chain = ChainComplex::from_levels(restricted_levels(levels, w.0));
    chain.homology_ranks(field).max_nonzero_degree()
}

/// reg(K[Delta]) by sweeping every induced subcomplex.
///
/// Only subsets of the vertices actually used by faces are visited: adding a
/// never-used ground-set element to W does not change the restriction's face
/// set, hence not its homology.
pub fn regularity(c: &SimplicialComplex, field: PrimeField) -> usize {
    assert!(!c.is_void(), "regularity needs a nonvoid complex");
    let levels = c.faces_by_card();
    let subsets: Vec<VertexSet> = c.vertices().subsets().collect();
    subsets
        .par_iter()
        .map(|&w| match max_degree_in(&levels, w, field) {
            Some(d) => (d + 1) as usize,
            None => 0,
        })
        .max()
        .unwrap_or(0)
}

/// Like [`regularity`], but stops as soon as `cap` is attained. `cap` must be
/// a proven upper bound for the answer; when it is, the result equals the
/// uncapped sweep. Sequential by design (early exit).
pub fn regularity_with_cap(c: &SimplicialComplex, field: PrimeField, cap: usize) -> usize {
    assert!(!c.is_void(), "regularity needs a nonvoid complex");
    let levels = c.faces_by_card();
    let mut best = 0;
    for w in c.vertices().subsets() {
        // dim of the restriction is below |W|, so small W cannot improve.
        if w.len() <= best {
            continue;
        }
        if let Some(d) = max_degree_in(&levels, w, field) {
            best = best.max((d + 1) as usize);
            if best >= cap {
                return best;
            }
        }
    }
    best
}

/// Graded Betti numbers of K[Delta] over the given field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    p: u64,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as ((i, j), beta), ordered.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// max{j - i : beta_{i,j} != 0}; at least 0 because beta_{0,0} = 1.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn field_p(&self) -> u64 {
        self.p
    }
}

/// The full Betti table via Hochster's formula. The sweep runs over all
/// subsets of the ambient ground set: never-used ground-set elements
/// contribute genuine linear strands (their variables lie in the ideal).
pub fn betti_table(c: &SimplicialComplex, field: PrimeField) -> BettiTable {
    assert!(!c.is_void(), "Betti numbers need a nonvoid complex");
    let levels = c.faces_by_card();
    let subsets: Vec<VertexSet> = VertexSet::full(c.n()).subsets().collect();
    let entries = subsets
        .par_iter()
        .map(|&w| {
            let chain = ChainComplex::from_levels(restricted_levels(&levels, w.0));
            let ranks = chain.homology_ranks(field);
            let j = w.len();
            let mut local: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            for (d, r) in ranks.nonzero() {
                // d = j - i - 1, and d <= |W| - 1 keeps i nonnegative.
                let i = (j as i32 - 1 - d) as usize;
                *local.entry((i, j)).or_insert(0) += r as u64;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    BettiTable { p: field.p(), entries }
}
