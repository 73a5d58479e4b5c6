//! Text input formats.
//!
//! Edge lists: first line `n m`, then m lines `u v` with 0-based endpoints.
//! Facet lists: first line `n f`, then f lines of space-separated vertices,
//! a lone `-` standing for the empty facet. Blank lines are skipped in both.

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;
use crate::simplicial::SimplicialComplex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {0}: expected header `n m`")]
    BadHeader(usize),
    #[error("line {0}: expected an edge `u v`")]
    BadEdge(usize),
    #[error("line {line}: vertex {v} out of range for n={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {0}: edge endpoints coincide")]
    LoopEdge(usize),
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("{0} vertices exceed the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// Numbered nonblank lines, 1-based as an editor shows them.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = meaningful_lines(text);
    let (header_no, header) = lines.next().ok_or(EdgeListError::BadHeader(1))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader(header_no))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader(header_no))?;
    if parts.next().is_some() {
        return Err(EdgeListError::BadHeader(header_no));
    }
    if n > MAX_VERTICES {
        return Err(EdgeListError::TooManyVertices(n));
    }
    let mut edges = Vec::with_capacity(m);
    let mut found = 0;
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let parse_endpoint = |t: Option<&str>| {
            t.and_then(|t| t.parse::<usize>().ok()).ok_or(EdgeListError::BadEdge(line_no))
        };
        let u = parse_endpoint(parts.next())?;
        let v = parse_endpoint(parts.next())?;
        if parts.next().is_some() {
            return Err(EdgeListError::BadEdge(line_no));
        }
        for w in [u, v] {
            if w >= n {
                return Err(EdgeListError::VertexOutOfRange { line: line_no, v: w, n });
            }
        }
        if u == v {
            return Err(EdgeListError::LoopEdge(line_no));
        }
        edges.push((u, v));
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::WrongEdgeCount { expected: m, found });
    }
    Ok(Graph::from_edges(n, &edges))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FacetListError {
    #[error("line {0}: expected header `n f`")]
    BadHeader(usize),
    #[error("line {0}: expected vertices or `-`")]
    BadFacet(usize),
    #[error("line {line}: vertex {v} out of range for n={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("expected {expected} facets, found {found}")]
    WrongFacetCount { expected: usize, found: usize },
    #[error("{0} vertices exceed the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// Non-maximal entries are absorbed; zero facets give the void complex.
pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex, FacetListError> {
    let mut lines = meaningful_lines(text);
    let (header_no, header) = lines.next().ok_or(FacetListError::BadHeader(1))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(FacetListError::BadHeader(header_no))?;
    let f: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(FacetListError::BadHeader(header_no))?;
    if parts.next().is_some() {
        return Err(FacetListError::BadHeader(header_no));
    }
    if n > MAX_VERTICES {
        return Err(FacetListError::TooManyVertices(n));
    }
    let mut facets: Vec<Vec<usize>> = Vec::with_capacity(f);
    let mut found = 0;
    for (line_no, line) in lines {
        let facet = if line == "-" {
            Vec::new()
        } else {
            let mut verts = Vec::new();
            for tok in line.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| FacetListError::BadFacet(line_no))?;
                if v >= n {
                    return Err(FacetListError::VertexOutOfRange { line: line_no, v, n });
                }
                verts.push(v);
            }
            verts
        };
        facets.push(facet);
        found += 1;
    }
    if found != f {
        return Err(FacetListError::WrongFacetCount { expected: f, found });
    }
    let facet_sets: Vec<_> = facets.iter().map(|f| f.iter().copied().collect()).collect();
    Ok(SimplicialComplex::from_facets(n, facet_sets))
}
