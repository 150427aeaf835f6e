//! Set systems over `[n]`, twists, and Bouchet's symmetric exchange axiom.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::quasitree::{self, Method, PolyOptions, QuasiTreeError};
use crate::ribbon::RibbonGraph;
use crate::rotation::Bouquet;
use crate::subset::EdgeSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaMatroidError {
    #[error("{subset} is not contained in the ground set [{n}]")]
    SubsetOutOfGround { subset: EdgeSubset, n: usize },
    #[error("set system has no feasible sets")]
    ImproperSystem,
    #[error("ribbon graph is not connected")]
    NotConnected,
    #[error(transparent)]
    QuasiTree(QuasiTreeError),
}

impl From<QuasiTreeError> for DeltaMatroidError {
    fn from(e: QuasiTreeError) -> Self {
        match e {
            QuasiTreeError::NotConnected => DeltaMatroidError::NotConnected,
            other => DeltaMatroidError::QuasiTree(other),
        }
    }
}

/// A triple for which no `v ∈ X Δ Y` makes `X Δ {u, v}` feasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub x: EdgeSubset,
    pub y: EdgeSubset,
    pub u: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    family: BTreeSet<EdgeSubset>,
}

impl SetSystem {
    pub fn new(n: usize, family: impl IntoIterator<Item = EdgeSubset>) -> Result<Self, DeltaMatroidError> {
        let family: BTreeSet<EdgeSubset> = family.into_iter().collect();
        if let Some(&subset) = family.iter().find(|x| !x.fits(n)) {
            return Err(DeltaMatroidError::SubsetOutOfGround { subset, n });
        }
        Ok(SetSystem { n, family })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> EdgeSubset {
        EdgeSubset::full(self.n)
    }

    pub fn family(&self) -> &BTreeSet<EdgeSubset> {
        &self.family
    }

    pub fn contains(&self, x: EdgeSubset) -> bool {
        self.family.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.family.is_empty()
    }

    /// `D * A = (E, {A Δ X : X ∈ F})`.
    pub fn twist(&self, a: EdgeSubset) -> Result<SetSystem, DeltaMatroidError> {
        if !a.fits(self.n) {
            return Err(DeltaMatroidError::SubsetOutOfGround { subset: a, n: self.n });
        }
        Ok(SetSystem { n: self.n, family: self.family.iter().map(|x| x.symmetric_difference(a)).collect() })
    }

    /// First violation of the symmetric exchange axiom in canonical order of
    /// `(X, Y, u)`, or `None` when `self` is a delta-matroid.
    pub fn exchange_violation(&self) -> Result<Option<ExchangeViolation>, DeltaMatroidError> {
        if self.family.is_empty() {
            return Err(DeltaMatroidError::ImproperSystem);
        }
        let members: Vec<EdgeSubset> = self.family.iter().copied().collect();
        let lookup = Membership::new(self.n, &members);
        let first = members.par_iter().find_map_first(|&x| {
            for &y in &members {
                let d = x.symmetric_difference(y);
                for u in d.indices() {
                    let xu = x.bits() ^ (1u64 << (u - 1));
                    let ok = d.indices().any(|v| {
                        let cand = if v == u { xu } else { xu ^ (1u64 << (v - 1)) };
                        lookup.contains(cand)
                    });
                    if !ok {
                        return Some(ExchangeViolation { x, y, u });
                    }
                }
            }
            None
        });
        Ok(first)
    }

    pub fn is_delta_matroid(&self) -> Result<bool, DeltaMatroidError> {
        Ok(self.exchange_violation()?.is_none())
    }

    /// `{"ground": n, "family": [[...], ...]}` with members in canonical order.
    pub fn to_json(&self) -> Value {
        let family: Vec<Vec<usize>> = self.family.iter().map(|x| x.indices().collect()).collect();
        json!({ "ground": self.n, "family": family })
    }
}

// Dense bitmap for small grounds, hashing otherwise.
enum Membership {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Membership {
    const DENSE_LIMIT: usize = 24;

    fn new(n: usize, members: &[EdgeSubset]) -> Self {
        if n <= Self::DENSE_LIMIT {
            let mut words = vec![0u64; ((1usize << n) + 63) / 64];
            for x in members {
                let b = x.bits() as usize;
                words[b / 64] |= 1 << (b % 64);
            }
            Membership::Dense(words)
        } else {
            Membership::Sparse(members.iter().map(|x| x.bits()).collect())
        }
    }

    fn contains(&self, bits: u64) -> bool {
        match self {
            Membership::Dense(words) => {
                let b = bits as usize;
                words.get(b / 64).is_some_and(|w| w >> (b % 64) & 1 == 1)
            }
            Membership::Sparse(set) => set.contains(&bits),
        }
    }
}

/// Input accepted by [`delta_matroid_of`].
pub enum RibbonInput<'a> {
    Bouquet(&'a Bouquet),
    Graph(&'a RibbonGraph),
}

impl<'a> From<&'a Bouquet> for RibbonInput<'a> {
    fn from(b: &'a Bouquet) -> Self {
        RibbonInput::Bouquet(b)
    }
}

impl<'a> From<&'a RibbonGraph> for RibbonInput<'a> {
    fn from(g: &'a RibbonGraph) -> Self {
        RibbonInput::Graph(g)
    }
}

/// `D(G) = (E(G), F(G))` with `F(G)` the spanning quasi-trees.
pub fn delta_matroid_of<'a>(input: impl Into<RibbonInput<'a>>) -> Result<SetSystem, DeltaMatroidError> {
    let opts = PolyOptions::default();
    let (n, feasible) = match input.into() {
        RibbonInput::Bouquet(b) => (b.n(), quasitree::quasi_tree_polynomial(b, Method::Gf2, opts)?.feasible),
        RibbonInput::Graph(g) => (g.n_edges(), quasitree::quasi_trees_of(g, Method::Gf2, opts)?.report.feasible),
    };
    SetSystem::new(n, feasible)
}
