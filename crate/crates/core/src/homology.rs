//! Reduced simplicial homology via boundary-matrix ranks.
//!
//! Chain groups include the empty face at cardinality 0, so reduced homology
//! in degree -1 (nonzero exactly for the empty complex) falls out of the same
//! rank computation as every other degree.

use crate::bitset::VertexSet;
use crate::field::PrimeField;
use crate::simplicial::SimplicialComplex;

/// Rows are faces of cardinality c, columns faces of cardinality c-1,
/// entries the alternating-sign incidences.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<i8>,
}

impl BoundaryMatrix {
    fn zero(rows: usize, cols: usize) -> Self {
        BoundaryMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, val: i8) {
        self.entries[r * self.cols + c] = val;
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.cols + c]
    }

    fn row_vecs(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(|c| c.to_vec()).collect()
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        field.rank(self.row_vecs(), self.cols)
    }
}

/// The augmented chain complex of a simplicial complex: faces grouped by
/// cardinality plus every boundary matrix.
pub struct ChainComplex {
    levels: Vec<Vec<u32>>,
    boundaries: Vec<BoundaryMatrix>,
}

impl ChainComplex {
    pub fn new(c: &SimplicialComplex) -> Self {
        Self::from_levels(c.faces_by_card())
    }

    /// Build from faces grouped by cardinality (ascending within a group).
    /// The groups must be subset-closed as a whole; levels[0], when present,
    /// is the empty face.
    pub fn from_levels(levels: Vec<Vec<u32>>) -> Self {
        debug_assert!(levels.is_empty() || levels[0] == vec![0]);
        let mut boundaries = Vec::new();
        for upper in 1..levels.len() {
            boundaries.push(boundary_matrix(&levels[upper], &levels[upper - 1]));
        }
        ChainComplex { levels, boundaries }
    }

    /// Matrix of the boundary map from cardinality `c` faces, if both levels
    /// exist.
    pub fn boundary(&self, c: usize) -> Option<&BoundaryMatrix> {
        c.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// Composing consecutive boundary maps must give zero; checked over the
    /// integers, which covers every field at once.
    pub fn boundary_squares_to_zero(&self) -> bool {
        for i in 1..self.boundaries.len() {
            let hi = &self.boundaries[i]; // card i+1 -> card i
            let lo = &self.boundaries[i - 1]; // card i -> card i-1
            for r in 0..hi.rows {
                for c in 0..lo.cols {
                    let mut acc: i32 = 0;
                    for m in 0..hi.cols {
                        acc += hi.get(r, m) as i32 * lo.get(m, c) as i32;
                    }
                    if acc != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn homology_ranks(&self, field: PrimeField) -> HomologyRanks {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| b.rank(field)).collect();
        let dims = (0..self.levels.len())
            .map(|c| {
                let out = if c == 0 { 0 } else { ranks[c - 1] };
                let into = ranks.get(c).copied().unwrap_or(0);
                self.levels[c].len() - out - into
            })
            .collect();
        HomologyRanks { dims }
    }
}

fn boundary_matrix(upper: &[u32], lower: &[u32]) -> BoundaryMatrix {
    let mut m = BoundaryMatrix::zero(upper.len(), lower.len());
    for (r, &face) in upper.iter().enumerate() {
        let mut sign: i8 = 1;
        for v in VertexSet(face).iter() {
            let sub = face & !(1u32 << v);
            let c = lower.binary_search(&sub).expect("subface missing from level below");
            m.set(r, c, sign);
            sign = -sign;
        }
    }
    m
}

/// Ranks of reduced homology by degree, from -1 up to the complex dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyRanks {
    dims: Vec<usize>,
}

impl HomologyRanks {
    /// dim over the field of reduced homology in the given degree; zero
    /// outside the stored range.
    pub fn rank(&self, degree: i32) -> usize {
        usize::try_from(degree + 1).ok().and_then(|i| self.dims.get(i).copied()).unwrap_or(0)
    }

    /// Largest degree with nonzero reduced homology.
    pub fn max_nonzero_degree(&self) -> Option<i32> {
        (0..self.dims.len()).rev().find(|&i| self.dims[i] > 0).map(|i| i as i32 - 1)
    }

    pub fn all_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// (degree, rank) for every degree with nonzero homology, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r > 0)
            .map(|(i, &r)| (i as i32 - 1, r))
    }

    /// True when homology vanishes strictly below `top` and has rank one at
    /// `top`: the homology signature of a sphere of that dimension.
    pub fn is_sphere_like(&self, top: i32) -> bool {
        self.rank(top) == 1 && (-1..top).all(|d| self.rank(d) == 0)
    }
}

pub fn reduced_homology_ranks(c: &SimplicialComplex, field: PrimeField) -> HomologyRanks {
    ChainComplex::new(c).homology_ranks(field)
}
