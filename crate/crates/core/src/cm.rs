//! Cohen-Macaulay, doubly Cohen-Macaulay, and Gorenstein tests over a prime
//! field.
//!
//! CM is decided by Reisner's criterion: every face link (the empty face
//! included) has vanishing reduced homology strictly below its dimension.
//! Gorenstein is decided on the core (cone points stripped): every link there
//! must look like a sphere in homology.

use crate::bitset::VertexSet;
use crate::field::PrimeField;
use crate::homology::reduced_homology_ranks;
use crate::simplicial::SimplicialComplex;

pub fn is_cohen_macaulay(c: &SimplicialComplex, field: PrimeField) -> bool {
    assert!(!c.is_void(), "CM is a question about nonvoid complexes");
    // CM complexes are pure; skip the homology work when purity already fails.
    if !c.is_pure() {
        return false;
    }
    c.faces().into_iter().all(|face| {
        let lk = c.link_of_face(face);
        let ranks = reduced_homology_ranks(&lk, field);
        (-1..lk.dim()).all(|d| ranks.rank(d) == 0)
    })
}

/// CM, and deleting any single vertex stays CM of the same dimension.
pub fn is_doubly_cohen_macaulay(c: &SimplicialComplex, field: PrimeField) -> bool {
    if !is_cohen_macaulay(c, field) {
        return false;
    }
    let d = c.dim();
    c.vertices().iter().all(|v| {
        let del = c.deletion(v);
        // The deletion keeps the empty face, so it is never void.
        del.dim() == d && is_cohen_macaulay(&del, field)
    })
}

/// The core: restriction to vertices missing from at least one facet.
/// Vertices lying in every facet are cone points and carry no homological
/// information.
pub fn core_complex(c: &SimplicialComplex) -> SimplicialComplex {
    assert!(!c.is_void());
    let mut cur = c.clone();
    loop {
        let verts = cur.vertices();
        let apexes: VertexSet = verts
            .iter()
            .filter(|&v| cur.facets().iter().all(|m| m.contains(v)))
            .collect();
        if apexes.is_empty() {
            return cur;
        }
        cur = cur.induced(verts.minus(apexes));
    }
}

/// Stanley's criterion: the core must be a homology sphere in the strong
/// sense that every face link (the empty face included, giving the core
/// itself) has top homology of rank one and nothing below.
pub fn is_gorenstein(c: &SimplicialComplex, field: PrimeField) -> bool {
    assert!(!c.is_void(), "Gorenstein is a question about nonvoid complexes");
    let core = core_complex(c);
    core.faces().into_iter().all(|face| {
        let lk = core.link_of_face(face);
        reduced_homology_ranks(&lk, field).is_sphere_like(lk.dim())
    })
}
