//! Simplicial complexes as facet lists, with the face-count invariants:
//! f-vector, h-vector, and the Hilbert series numerator of the
//! Stanley-Reisner ring.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;
use std::collections::HashSet;
use std::fmt;

/// A simplicial complex on the ground set `0..n`, stored as its facets.
///
/// The void complex (no faces at all) has an empty facet list; the empty
/// complex (whose single face is the empty set) has one empty facet. The
/// distinction matters: links of facets are empty complexes with nontrivial
/// reduced homology in degree -1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex { n, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex { n, facets: vec![VertexSet::full(n)] }
    }

    /// Builds the complex generated by `faces`: dominated entries are
    /// dropped, the rest sorted and deduplicated.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Self {
        assert!(n <= MAX_VERTICES);
        let full = VertexSet::full(n);
        let mut list: Vec<VertexSet> = faces.into_iter().collect();
        for f in &list {
            assert!(f.is_subset_of(full), "facet {f:?} outside ground set 0..{n}");
        }
        list.sort();
        list.dedup();
        let keep: Vec<VertexSet> = list
            .iter()
            .copied()
            .filter(|f| !list.iter().any(|g| *f != *g && f.is_subset_of(*g)))
            .collect();
        SimplicialComplex { n, facets: keep }
    }

    /// Independent sets of `g` form the faces; facets are the maximal ones.
    pub fn independence_complex(g: &Graph) -> Self {
        SimplicialComplex { n: g.n(), facets: g.maximal_independent_sets() }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    #[inline]
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices appearing in some face. A ground-set element can be unused.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    /// Max face dimension; the empty complex has dimension -1.
    /// The void complex has no faces and no dimension.
    pub fn dim(&self) -> i32 {
        assert!(!self.is_void(), "the void complex has no dimension");
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap()
    }

    pub fn is_pure(&self) -> bool {
        let mut lens = self.facets.iter().map(|f| f.len());
        match lens.next() {
            None => true,
            Some(first) => lens.all(|l| l == first),
        }
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|m| f.is_subset_of(*m))
    }

    /// Every face, grouped by cardinality (index 0 holds the empty face),
    /// each group ascending. Void complex: no groups at all.
    pub fn faces_by_card(&self) -> Vec<Vec<u32>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.facets.iter().map(|f| f.len()).max().unwrap();
        let mut seen: Vec<HashSet<u32>> = vec![HashSet::new(); top + 1];
        for facet in &self.facets {
            for sub in facet.subsets() {
                seen[sub.len()].insert(sub.0);
            }
        }
        seen.into_iter()
            .map(|s| {
                let mut v: Vec<u32> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// All faces ordered by (cardinality, bitmask).
    pub fn faces(&self) -> Vec<VertexSet> {
        self.faces_by_card()
            .into_iter()
            .flat_map(|level| level.into_iter().map(VertexSet))
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_card().iter().map(|l| l.len()).sum()
    }

    /// Faces disjoint from `f` whose union with `f` is a face.
    /// Void when `f` is not a face; the empty complex when `f` is a facet.
    pub fn link_of_face(&self, f: VertexSet) -> SimplicialComplex {
        // Facets containing f stay an antichain after f is removed.
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|m| f.is_subset_of(**m))
            .map(|m| m.minus(f))
            .collect();
        SimplicialComplex { n: self.n, facets }
    }

    pub fn link(&self, v: usize) -> SimplicialComplex {
        assert!(v < self.n, "vertex {v} outside ground set 0..{}", self.n);
        self.link_of_face(VertexSet::singleton(v))
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        assert!(v < self.n, "vertex {v} outside ground set 0..{}", self.n);
        Self::from_facets(self.n, self.facets.iter().map(|m| m.without(v)))
    }

    /// The restriction to `w`: faces contained in `w`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        Self::from_facets(self.n, self.facets.iter().map(|m| m.intersect(w)))
    }

    /// Join, with `other`'s vertices shifted above `self`'s ground set.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(VertexSet(a.0 | (b.0 << self.n)));
            }
        }
        // Unions of antichain pairs stay an antichain because the halves
        // live on disjoint vertex ranges.
        facets.sort();
        SimplicialComplex { n, facets }
    }

    /// Face counts by dimension: entry i is the number of i-faces.
    /// The empty face is not listed (f of dimension -1 is always 1).
    pub fn f_vector(&self) -> FVector {
        assert!(!self.is_void(), "the void complex has no f-vector");
        let by_card = self.faces_by_card();
        FVector(by_card.iter().skip(1).map(|l| l.len() as u64).collect())
    }

    /// h-vector from the f-vector by exact integer expansion of
    /// sum_i f_{i-1} (t-1)^(d-i) = sum_i h_i t^(d-i), where d = dim + 1.
    pub fn h_vector(&self) -> HVector {
        let f = self.f_vector();
        let d = f.0.len();
        // poly[j] = coefficient of t^j.
        let mut poly = vec![0i128; d + 1];
        for i in 0..=d {
            let fi = if i == 0 { 1 } else { f.0[i - 1] as i128 };
            // (t-1)^(d-i)
            let e = d - i;
            for (j, slot) in poly[..=e].iter_mut().enumerate() {
                let sign = if (e - j).is_multiple_of(2) { 1 } else { -1 };
                *slot += fi * sign * binomial(e as u64, j as u64) as i128;
            }
        }
        let h: Vec<i64> = (0..=d).map(|i| i64::try_from(poly[d - i]).unwrap()).collect();
        debug_assert_eq!(h[0], 1);
        debug_assert_eq!(
            h.iter().sum::<i64>(),
            *f.0.last().unwrap_or(&1) as i64,
            "h-vector sum must equal the top face count"
        );
        HVector(h)
    }

    /// Hilbert series of the Stanley-Reisner ring in rational form:
    /// numerator coefficients are the h-vector, denominator (1-z)^d.
    pub fn hilbert_numerator(&self) -> HilbertNumerator {
        let h = self.h_vector();
        let d = h.0.len() - 1;
        HilbertNumerator { coeffs: h.0, denom_power: d }
    }

    /// Dimension of the degree-k graded piece of the Stanley-Reisner ring,
    /// counted directly: monomials of degree k whose support is a face.
    pub fn hilbert_function_direct(&self, k: usize) -> u128 {
        assert!(!self.is_void());
        if k == 0 {
            return 1;
        }
        // A monomial with support F (|F| = c >= 1) and degree k corresponds
        // to a composition of k into c positive parts: C(k-1, c-1) choices.
        self.faces_by_card()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(c, level)| level.len() as u128 * binomial(k as u64 - 1, c as u64 - 1))
            .sum()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (i, m) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m:?}")?;
        }
        write!(f, "])")
    }
}

/// Face counts by dimension, `0 ≤ i ≤ dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// f_i with the usual conventions: f_{-1} = 1, zero out of range.
    pub fn f(&self, i: i32) -> u64 {
        if i == -1 {
            1
        } else if i >= 0 && (i as usize) < self.0.len() {
            self.0[i as usize]
        } else {
            0
        }
    }
}

/// Entries h_0 ... h_d where d = dim + 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVector(pub Vec<i64>);

/// Hilbert series numerator over (1-z)^denom_power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertNumerator {
    pub coeffs: Vec<i64>,
    pub denom_power: usize,
}

impl HilbertNumerator {
    /// Power-series coefficients through degree `through`, expanding
    /// 1/(1-z)^d as sum of C(m+d-1, d-1) z^m.
    pub fn series_prefix(&self, through: usize) -> Vec<i128> {
        let d = self.denom_power as u64;
        (0..=through)
            .map(|m| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j <= m)
                    .map(|(j, &c)| {
                        let k = (m - j) as u64;
                        let ways = if d == 0 {
                            u128::from(k == 0)
                        } else {
                            binomial(k + d - 1, d - 1)
                        };
                        c as i128 * ways as i128
                    })
                    .sum()
            })
            .collect()
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
