//! General ribbon graphs as signed rotation systems.
//!
//! Every vertex holds the cyclic list of edge ends attached to it. Signs sit
//! on the ends; an edge is twisted iff the product of its two end signs is
//! negative. Flipping a vertex (reversing its list and negating the signs of
//! its ends) gives the same ribbon graph.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rotation::{Bouquet, End, HalfEdgeLabel, Sign, SignedRotation};
use crate::subset::MAX_EDGES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RibbonError {
    #[error("malformed ribbon graph: {0}")]
    MalformedRibbonGraph(String),
    #[error("invalid ribbon graph document: {0}")]
    Json(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// An edge end attached to a vertex. `edge` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub edge: usize,
    pub end: End,
    pub sign: Sign,
}

impl From<HalfEdgeLabel> for Occurrence {
    fn from(h: HalfEdgeLabel) -> Self {
        Occurrence { edge: h.edge, end: h.end, sign: h.sign }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    vertices: Vec<Vec<Occurrence>>,
    n_edges: usize,
    // locate[e - 1][end] = (vertex, position in its cyclic list)
    locate: Vec<[(usize, usize); 2]>,
}

impl RibbonGraph {
    /// Validates the rotation system and relabels edges to `1..=n` by
    /// increasing input label.
    pub fn new(vertices: Vec<Vec<(u64, End, Sign)>>) -> Result<Self, RibbonError> {
        let mut seen: BTreeMap<u64, [bool; 2]> = BTreeMap::new();
        for &(edge, end, _) in vertices.iter().flatten() {
            if edge == 0 {
                return Err(RibbonError::MalformedRibbonGraph(
                    "edge indices must be positive".into(),
                ));
            }
            let slot = &mut seen.entry(edge).or_default()[end.index()];
            if *slot {
                return Err(RibbonError::MalformedRibbonGraph(format!(
                    "edge end {edge}{end} appears more than once"
                )));
            }
            *slot = true;
        }
        for (&edge, ends) in &seen {
            if let Some(k) = ends.iter().position(|&present| !present) {
                let end = if k == 0 { End::A } else { End::B };
                return Err(RibbonError::MalformedRibbonGraph(format!(
                    "edge {edge} is missing its {end} end"
                )));
            }
        }
        let canon: BTreeMap<u64, usize> =
            seen.keys().enumerate().map(|(k, &l)| (l, k + 1)).collect();
        let vertices = vertices
            .into_iter()
            .map(|occ| {
                occ.into_iter()
                    .map(|(edge, end, sign)| Occurrence { edge: canon[&edge], end, sign })
                    .collect()
            })
            .collect();
        Self::from_canonical(vertices, seen.len())
    }

    /// Builds from lists whose edges are already numbered `1..=n_edges`.
    pub(crate) fn from_canonical(
        vertices: Vec<Vec<Occurrence>>,
        n_edges: usize,
    ) -> Result<Self, RibbonError> {
        if vertices.is_empty() {
            return Err(RibbonError::MalformedRibbonGraph("no vertices".into()));
        }
        if n_edges > MAX_EDGES {
            return Err(RibbonError::MalformedRibbonGraph(format!(
                "{n_edges} edges exceeds the limit of {MAX_EDGES}"
            )));
        }
        let mut locate = vec![[(usize::MAX, 0); 2]; n_edges];
        for (v, occ) in vertices.iter().enumerate() {
            for (p, o) in occ.iter().enumerate() {
                if o.edge == 0 || o.edge > n_edges {
                    return Err(RibbonError::MalformedRibbonGraph(format!(
                        "edge {} out of range 1..={n_edges}",
                        o.edge
                    )));
                }
                let slot = &mut locate[o.edge - 1][o.end.index()];
                if slot.0 != usize::MAX {
                    return Err(RibbonError::MalformedRibbonGraph(format!(
                        "edge end {}{} appears more than once",
                        o.edge, o.end
                    )));
                }
                *slot = (v, p);
            }
        }
        if let Some(e) = locate.iter().position(|l| l.iter().any(|s| s.0 == usize::MAX)) {
            return Err(RibbonError::MalformedRibbonGraph(format!(
                "edge {} is missing an end",
                e + 1
            )));
        }
        Ok(RibbonGraph { vertices, n_edges, locate })
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<Occurrence>] {
        &self.vertices
    }

    /// `(vertex, position)` of an edge end.
    pub fn locate(&self, edge: usize, end: End) -> (usize, usize) {
        self.locate[edge - 1][end.index()]
    }

    pub fn occurrence(&self, edge: usize, end: End) -> Occurrence {
        let (v, p) = self.locate(edge, end);
        self.vertices[v][p]
    }

    /// Product of the two end signs.
    pub fn edge_sign(&self, edge: usize) -> Sign {
        self.occurrence(edge, End::A).sign * self.occurrence(edge, End::B).sign
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        self.locate(edge, End::A).0 == self.locate(edge, End::B).0
    }

    /// Connected-component label of every vertex, numbered in order of first
    /// appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let nv = self.n_vertices();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in 1..=self.n_edges {
            let a = find(&mut parent, self.locate(e, End::A).0);
            let b = find(&mut parent, self.locate(e, End::B).0);
            parent[a] = b;
        }
        let mut label = vec![usize::MAX; nv];
        let mut out = Vec::with_capacity(nv);
        let mut next = 0;
        for v in 0..nv {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out.push(label[r]);
        }
        out
    }

    pub fn n_components(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n_components() == 1
    }

    /// Whether some choice of vertex flips makes every end sign positive.
    pub fn is_orientable(&self) -> bool {
        // Propagate a flip state per vertex; a conflict means a Möbius band.
        let nv = self.n_vertices();
        let mut flip: Vec<Option<Sign>> = vec![None; nv];
        for start in 0..nv {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(Sign::Plus);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let fv = flip[v].unwrap();
                for o in &self.vertices[v] {
                    let other = o.end.other();
                    let (w, _) = self.locate(o.edge, other);
                    // After flipping, both end signs must be positive.
                    let want = fv * o.sign * self.occurrence(o.edge, other).sign;
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            stack.push(w);
                        }
                        Some(fw) if fw != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn from_bouquet(b: &Bouquet) -> Self {
        let occ = b.rotation().sequence().iter().map(|&h| h.into()).collect();
        RibbonGraph {
            locate: (1..=b.n())
                .map(|e| {
                    let r = b.rotation();
                    [(0, r.position(e, End::A)), (0, r.position(e, End::B))]
                })
                .collect(),
            vertices: vec![occ],
            n_edges: b.n(),
        }
    }

    /// The bouquet of a single-vertex ribbon graph.
    pub fn to_bouquet(&self) -> Option<Bouquet> {
        if self.n_vertices() != 1 {
            return None;
        }
        let seq = self.vertices[0]
            .iter()
            .map(|o| (o.edge as u64, o.end, o.sign))
            .collect();
        SignedRotation::new(seq).ok().map(Bouquet::new)
    }

    /// Removes `edge` and renumbers the edges above it down by one. Vertices
    /// are kept.
    pub(crate) fn without_edge(&self, edge: usize) -> RibbonGraph {
        let vertices = self
            .vertices
            .iter()
            .map(|occ| {
                occ.iter()
                    .filter(|o| o.edge != edge)
                    .map(|&o| Occurrence {
                        edge: if o.edge > edge { o.edge - 1 } else { o.edge },
                        ..o
                    })
                    .collect()
            })
            .collect();
        RibbonGraph::from_canonical(vertices, self.n_edges - 1)
            .expect("deleting an edge keeps the rotation system valid")
    }

    pub fn from_json(text: &str) -> Result<Self, RibbonError> {
        let doc: RibbonDocument =
            serde_json::from_str(text).map_err(|e| RibbonError::Json(e.to_string()))?;
        doc.into_graph()
    }

    pub fn from_path(path: &Path) -> Result<Self, RibbonError> {
        let text = std::fs::read_to_string(path).map_err(|e| RibbonError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_document(&self) -> RibbonDocument {
        RibbonDocument {
            vertices: self
                .vertices
                .iter()
                .map(|occ| {
                    occ.iter()
                        .map(|o| OccurrenceDoc {
                            edge: o.edge as u64,
                            end: o.end.to_string(),
                            sign: o.sign.value() as i64,
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("ribbon documents serialize")
    }
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, occ) in self.vertices.iter().enumerate() {
            if v > 0 {
                f.write_str(" ")?;
            }
            write!(f, "v{}:[", v + 1)?;
            for (k, o) in occ.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", HalfEdgeLabel::new(o.edge, o.end, o.sign))?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// On-disk form: `{"vertices": [[{"edge": 1, "end": "a", "sign": 1}, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RibbonDocument {
    pub vertices: Vec<Vec<OccurrenceDoc>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OccurrenceDoc {
    pub edge: u64,
    pub end: String,
    pub sign: i64,
}

impl RibbonDocument {
    pub fn into_graph(self) -> Result<RibbonGraph, RibbonError> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for occ in self.vertices {
            let mut list = Vec::with_capacity(occ.len());
            for o in occ {
                let end = match o.end.as_str() {
                    "a" => End::A,
                    "b" => End::B,
                    other => {
                        return Err(RibbonError::MalformedRibbonGraph(format!(
                            "end must be \"a\" or \"b\", got {other:?}"
                        )))
                    }
                };
                let sign = Sign::from_value(o.sign).ok_or_else(|| {
                    RibbonError::MalformedRibbonGraph(format!(
                        "sign must be 1 or -1, got {}",
                        o.sign
                    ))
                })?;
                list.push((o.edge, end, sign));
            }
            vertices.push(list);
        }
        RibbonGraph::new(vertices)
    }
}
