//! Surface topology of ribbon graphs: boundary tracing, partial duality,
//! deletion and contraction, and brute-force spanning quasi-tree search.
//!
//! Everything here works directly on the rotation system and never looks at
//! a matrix, so it serves as the independent check for the determinant side.

mod flags;

use rayon::prelude::*;
use thiserror::Error;

use crate::ribbon::RibbonGraph;
use crate::rotation::{Bouquet, End};
use crate::subset::EdgeSubset;

pub use flags::Side;
use flags::{flag_edge, flag_end, flag_side, FlagGraph};

/// Default largest edge count for the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("edge {edge} is not present (graph has {n} edges)")]
    EdgeNotPresent { edge: usize, n: usize },
    #[error("{n} edges exceeds the enumeration cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("edge subset {0} is not contained in the edge set")]
    SubsetOutOfRange(EdgeSubset),
    #[error("no spanning quasi-tree exists (the ribbon graph is disconnected)")]
    NotFound,
}

/// One visit of a boundary walk to a side of an edge end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SideVisit {
    pub edge: usize,
    pub end: End,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTrace {
    /// Closed walks; a vertex without edges contributes an empty walk.
    pub walks: Vec<Vec<SideVisit>>,
}

impl BoundaryTrace {
    pub fn component_count(&self) -> usize {
        self.walks.len()
    }
}

/// Traces every boundary component of `g`.
pub fn boundary_components(g: &RibbonGraph) -> BoundaryTrace {
    let (walks, isolated) = FlagGraph::from_ribbon(g).boundary_walks();
    let mut walks: Vec<Vec<SideVisit>> = walks
        .into_iter()
        .map(|w| {
            w.into_iter()
                .map(|f| SideVisit { edge: flag_edge(f), end: flag_end(f), side: flag_side(f) })
                .collect()
        })
        .collect();
    walks.extend((0..isolated).map(|_| Vec::new()));
    BoundaryTrace { walks }
}

/// Number of boundary components of the spanning subgraph `(V, x)`.
pub fn spanning_boundary_count(g: &RibbonGraph, x: EdgeSubset) -> usize {
    FlagGraph::spanning(g, x).count_boundary()
}

pub fn is_spanning_quasi_tree(g: &RibbonGraph, x: EdgeSubset) -> bool {
    x.fits(g.n_edges()) && spanning_boundary_count(g, x) == 1
}

pub fn is_quasi_tree(b: &Bouquet, x: EdgeSubset) -> bool {
    is_spanning_quasi_tree(&RibbonGraph::from_bouquet(b), x)
}

/// Every `x` whose spanning subgraph has one boundary component, in
/// canonical order. Brute force over all `2^n` subsets.
pub fn quasi_trees_oracle(g: &RibbonGraph, cap: usize) -> Result<Vec<EdgeSubset>, TopologyError> {
    let n = g.n_edges();
    if n > cap {
        return Err(TopologyError::SizeCapExceeded { n, cap });
    }
    let total = 1u64 << n;
    let chunk = 1u64 << n.saturating_sub(6).min(12);
    let mut out: Vec<EdgeSubset> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(total);
            (lo..hi)
                .map(EdgeSubset::from_bits)
                .filter(|&x| spanning_boundary_count(g, x) == 1)
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

pub fn enumerate_quasi_trees_oracle(b: &Bouquet, cap: usize) -> Result<Vec<EdgeSubset>, TopologyError> {
    quasi_trees_oracle(&RibbonGraph::from_bouquet(b), cap)
}

fn check_edge(g: &RibbonGraph, e: usize) -> Result<(), TopologyError> {
    if (1..=g.n_edges()).contains(&e) {
        Ok(())
    } else {
        Err(TopologyError::EdgeNotPresent { edge: e, n: g.n_edges() })
    }
}

/// `g^{δ(e)}`: the vertices of the result are the boundary components of
/// `(V, {e})`. Edge numbering is preserved.
pub fn partial_dual_edge(g: &RibbonGraph, e: usize) -> Result<RibbonGraph, TopologyError> {
    check_edge(g, e)?;
    let mut fg = FlagGraph::from_ribbon(g);
    fg.dualize_edge(e);
    Ok(fg.to_ribbon())
}

/// `g^{δ(A)}`, composed edge by edge in increasing order.
pub fn partial_dual(g: &RibbonGraph, a: EdgeSubset) -> Result<RibbonGraph, TopologyError> {
    if !a.fits(g.n_edges()) {
        return Err(TopologyError::SubsetOutOfRange(a));
    }
    a.indices().try_fold(g.clone(), |acc, e| partial_dual_edge(&acc, e))
}

/// Same as [`partial_dual`] but applying the edges in decreasing order.
pub fn partial_dual_descending(g: &RibbonGraph, a: EdgeSubset) -> Result<RibbonGraph, TopologyError> {
    if !a.fits(g.n_edges()) {
        return Err(TopologyError::SubsetOutOfRange(a));
    }
    let mut edges: Vec<usize> = a.indices().collect();
    edges.reverse();
    edges.into_iter().try_fold(g.clone(), |acc, e| partial_dual_edge(&acc, e))
}

/// Removes edge `e`; edges above it are renumbered down by one.
pub fn delete(g: &RibbonGraph, e: usize) -> Result<RibbonGraph, TopologyError> {
    check_edge(g, e)?;
    Ok(g.without_edge(e))
}

/// `g / e = g^{δ(e)} \ e`.
pub fn contract(g: &RibbonGraph, e: usize) -> Result<RibbonGraph, TopologyError> {
    delete(&partial_dual_edge(g, e)?, e)
}

/// A smallest subset whose spanning subgraph is a quasi-tree; ties go to
/// the lexicographically first.
pub fn find_spanning_quasi_tree(g: &RibbonGraph, cap: usize) -> Result<EdgeSubset, TopologyError> {
    let n = g.n_edges();
    if n > cap {
        return Err(TopologyError::SizeCapExceeded { n, cap });
    }
    for k in 0..=n {
        let mut found = None;
        for_each_subset_of_size(n, k, |x| {
            if spanning_boundary_count(g, x) == 1 {
                found = Some(x);
                true
            } else {
                false
            }
        });
        if let Some(x) = found {
            return Ok(x);
        }
    }
    Err(TopologyError::NotFound)
}

// Visits k-subsets of [n] in lexicographic order until `visit` returns true.
fn for_each_subset_of_size(n: usize, k: usize, mut visit: impl FnMut(EdgeSubset) -> bool) {
    if k == 0 {
        visit(EdgeSubset::EMPTY);
        return;
    }
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        if visit(EdgeSubset::from_indices(idx.iter().copied())) {
            return;
        }
        let Some(p) = (0..k).rev().find(|&p| idx[p] < n - (k - 1 - p)) else {
            return;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// The bouquet `g^{δ(t)}` when it has one vertex.
pub fn bouquet_of(g: &RibbonGraph) -> Option<Bouquet> {
    g.to_bouquet()
}
