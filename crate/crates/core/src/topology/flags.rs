//! Flag model of a ribbon graph.
//!
//! Each edge ribbon is a rectangle whose four corners are flags. Flag
//! `4(e-1) + 2k + s` sits at end `k` (0 = `a`, 1 = `b`) of edge `e`, on side
//! `s` of the attaching segment (0 = before, 1 = after, in the cyclic order
//! of the vertex). Three fixed-point-free involutions act on flags:
//!
//! * `end` pairs the two corners of one attaching segment,
//! * `side` pairs the two ends of one long side of the ribbon,
//! * `corner` pairs consecutive segments along a vertex boundary arc.
//!
//! Vertices are the orbits of `<end, corner>`, boundary components the
//! orbits of `<side, corner>`. The partial dual with respect to `A` swaps
//! `end` and `side` on the flags of `A`.

use crate::ribbon::{Occurrence, RibbonGraph};
use crate::rotation::{End, Sign};
use crate::subset::EdgeSubset;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Before,
    After,
}

pub(crate) fn flag(edge: usize, end: End, side: Side) -> u32 {
    (4 * (edge - 1) + 2 * end.index() + side as usize) as u32
}

pub(crate) fn flag_edge(f: u32) -> usize {
    f as usize / 4 + 1
}

pub(crate) fn flag_end(f: u32) -> End {
    if f & 2 == 0 {
        End::A
    } else {
        End::B
    }
}

pub(crate) fn flag_side(f: u32) -> Side {
    if f & 1 == 0 {
        Side::Before
    } else {
        Side::After
    }
}

#[derive(Clone, Debug)]
pub(crate) struct FlagGraph {
    n_edges: usize,
    end: Vec<u32>,
    side: Vec<u32>,
    corner: Vec<u32>,
    // vertices without any edge end
    isolated: usize,
}

impl FlagGraph {
    pub fn from_ribbon(g: &RibbonGraph) -> Self {
        Self::spanning(g, EdgeSubset::full(g.n_edges()))
    }

    /// Flags of the spanning subgraph `(V, x)`; flags of edges outside `x`
    /// stay unlinked.
    pub fn spanning(g: &RibbonGraph, x: EdgeSubset) -> Self {
        let n = g.n_edges();
        let mut end = vec![ABSENT; 4 * n];
        let mut side = vec![ABSENT; 4 * n];
        let mut corner = vec![ABSENT; 4 * n];
        let mut isolated = 0;
        let mut kept: Vec<Occurrence> = Vec::new();
        for occ in g.vertices() {
            kept.clear();
            kept.extend(occ.iter().filter(|o| x.contains(o.edge)));
            if kept.is_empty() {
                isolated += 1;
                continue;
            }
            for (i, o) in kept.iter().enumerate() {
                let next = kept[(i + 1) % kept.len()];
                let a = flag(o.edge, o.end, Side::After);
                let b = flag(next.edge, next.end, Side::Before);
                corner[a as usize] = b;
                corner[b as usize] = a;
            }
        }
        for e in x.indices() {
            let twisted = g.edge_sign(e) == Sign::Minus;
            let a0 = flag(e, End::A, Side::Before);
            let a1 = flag(e, End::A, Side::After);
            let b0 = flag(e, End::B, Side::Before);
            let b1 = flag(e, End::B, Side::After);
            for f in [a0, a1, b0, b1] {
                end[f as usize] = f ^ 1;
            }
            let pairs = if twisted { [(a0, b0), (a1, b1)] } else { [(a0, b1), (a1, b0)] };
            for (p, q) in pairs {
                side[p as usize] = q;
                side[q as usize] = p;
            }
        }
        FlagGraph { n_edges: n, end, side, corner, isolated }
    }

    /// Exchanges the roles of ends and long sides on one edge's ribbon.
    pub fn dualize_edge(&mut self, e: usize) {
        for k in 0..4 {
            let f = 4 * (e - 1) + k;
            std::mem::swap(&mut self.end[f], &mut self.side[f]);
        }
    }

    fn present(&self, f: u32) -> bool {
        self.corner[f as usize] != ABSENT
    }

    /// Cycles of the alternating walk `first, second, first, ...` starting
    /// from the smallest unvisited flag, returned as flag sequences.
    fn alternating_orbits(&self, first: &[u32], second: &[u32]) -> Vec<Vec<u32>> {
        let mut seen = vec![false; first.len()];
        let mut orbits = Vec::new();
        for start in 0..first.len() as u32 {
            if seen[start as usize] || !self.present(start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut f = start;
            loop {
                seen[f as usize] = true;
                walk.push(f);
                let g = first[f as usize];
                seen[g as usize] = true;
                walk.push(g);
                f = second[g as usize];
                if f == start {
                    break;
                }
            }
            orbits.push(walk);
        }
        orbits
    }

    /// Boundary walks, each starting by crossing a vertex corner.
    pub fn boundary_walks(&self) -> (Vec<Vec<u32>>, usize) {
        (self.alternating_orbits(&self.corner, &self.side), self.isolated)
    }

    /// Number of boundary components, without materializing the walks.
    pub fn count_boundary(&self) -> usize {
        let mut seen = vec![false; self.corner.len()];
        let mut count = self.isolated;
        for start in 0..self.corner.len() as u32 {
            if seen[start as usize] || !self.present(start) {
                continue;
            }
            count += 1;
            let mut f = start;
            loop {
                seen[f as usize] = true;
                let g = self.corner[f as usize];
                seen[g as usize] = true;
                f = self.side[g as usize];
                if f == start {
                    break;
                }
            }
        }
        count
    }

    /// Reads the rotation system back off the flags. Each vertex is walked
    /// `end, corner, end, ...` from its smallest flag, which fixes its local
    /// orientation; the end of an edge holding its smallest flag is named `a`.
    pub fn to_ribbon(&self) -> RibbonGraph {
        let n = self.n_edges;
        // before/after flag of each (edge, end) under the walk orientation
        let mut before = vec![[ABSENT; 2]; n];
        let mut after = vec![[ABSENT; 2]; n];
        let end_name = |f: u32| -> End {
            let lowest = 4 * (flag_edge(f) as u32 - 1);
            if f == lowest || self.end[f as usize] == lowest {
                End::A
            } else {
                End::B
            }
        };
        let mut rotations: Vec<Vec<(usize, End)>> = Vec::new();
        for walk in self.alternating_orbits(&self.end, &self.corner) {
            let mut rot = Vec::with_capacity(walk.len() / 2);
            for pair in walk.chunks(2) {
                let (b, a) = (pair[0], pair[1]);
                let e = flag_edge(b);
                let name = end_name(b);
                before[e - 1][name.index()] = b;
                after[e - 1][name.index()] = a;
                rot.push((e, name));
            }
            rotations.push(rot);
        }
        let sign_b: Vec<Sign> = (0..n)
            .map(|k| {
                if self.side[before[k][0] as usize] == after[k][1] {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        let mut vertices: Vec<Vec<Occurrence>> = rotations
            .into_iter()
            .map(|rot| {
                rot.into_iter()
                    .map(|(edge, end)| Occurrence {
                        edge,
                        end,
                        sign: if end == End::A { Sign::Plus } else { sign_b[edge - 1] },
                    })
                    .collect()
            })
            .collect();
        vertices.extend((0..self.isolated).map(|_| Vec::new()));
        RibbonGraph::from_canonical(vertices, n).expect("flag graphs describe valid rotation systems")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::Bouquet;

    fn bouquet_flags(s: &str) -> FlagGraph {
        FlagGraph::from_ribbon(&RibbonGraph::from_bouquet(&s.parse::<Bouquet>().unwrap()))
    }

    #[test]
    fn closed_form_surfaces() {
        assert_eq!(bouquet_flags("[]").count_boundary(), 1);
        assert_eq!(bouquet_flags("[1a,1b]").count_boundary(), 2);
        assert_eq!(bouquet_flags("[-1a,1b]").count_boundary(), 1);
        assert_eq!(bouquet_flags("[-1a,-1b]").count_boundary(), 2);
        // punctured torus
        assert_eq!(bouquet_flags("[1a,2a,1b,2b]").count_boundary(), 1);
        // two nested loops: a sphere with three holes
        assert_eq!(bouquet_flags("[1a,2a,2b,1b]").count_boundary(), 3);
    }

    #[test]
    fn involutions_are_fixed_point_free() {
        let fg = bouquet_flags("[-1a, 2a, 3a, 1b, 2b, -4a, 3b, -5a, 4b, 5b]");
        for inv in [&fg.end, &fg.side, &fg.corner] {
            for (f, &g) in inv.iter().enumerate() {
                assert_ne!(f as u32, g);
                assert_eq!(inv[g as usize], f as u32);
            }
        }
    }

    #[test]
    fn round_trip_keeps_topology() {
        let b: Bouquet = "[-1a, 2a, 3a, 1b, 2b, -4a, 3b, -5a, 4b, 5b]".parse().unwrap();
        let g = RibbonGraph::from_bouquet(&b);
        let back = FlagGraph::from_ribbon(&g).to_ribbon().to_bouquet().unwrap();
        for e in 1..=5 {
            assert_eq!(back.loop_kind(e), b.loop_kind(e));
        }
        let ends = |b: &Bouquet| -> Vec<(usize, End)> {
            b.rotation().sequence().iter().map(|h| (h.edge, h.end)).collect()
        };
        assert_eq!(ends(&back), ends(&b));
    }
}
