//! Seeded generators for random bouquets and ribbon graphs.
//!
//! All generators draw from a [`ChaCha8Rng`], so a seed fixes the instance
//! stream on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ribbon::RibbonGraph;
use crate::rotation::{Bouquet, End, Sign, SignedRotation};

pub type HarnessRng = ChaCha8Rng;

pub fn rng(seed: u64) -> HarnessRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen::<bool>() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A uniformly random cyclic order of the `2n` loop ends; each loop is
/// twisted with probability `p_twisted`.
pub fn random_bouquet<R: Rng>(rng: &mut R, n: usize, p_twisted: f64) -> Bouquet {
    let mut ends: Vec<(u64, End)> = (1..=n as u64)
        .flat_map(|e| [(e, End::A), (e, End::B)])
        .collect();
    ends.shuffle(rng);
    let signs: Vec<(Sign, Sign)> = (0..n)
        .map(|_| {
            let first = random_sign(rng);
            let twisted = rng.gen_bool(p_twisted.clamp(0.0, 1.0));
            (first, if twisted { first.flip() } else { first })
        })
        .collect();
    let seq = ends
        .into_iter()
        .map(|(e, end)| {
            let (sa, sb) = signs[e as usize - 1];
            (e, end, if end == End::A { sa } else { sb })
        })
        .collect();
    Bouquet::new(SignedRotation::new(seq).expect("generated rotations are valid"))
}

/// A random bouquet with no twisted loop, or exactly one when
/// `one_twisted` is set (and `n > 0`).
pub fn random_bouquet_at_most_one_twist<R: Rng>(rng: &mut R, n: usize, one_twisted: bool) -> Bouquet {
    let b = random_bouquet(rng, n, 0.0);
    if !one_twisted || n == 0 {
        return b;
    }
    let e = rng.gen_range(1..=n);
    let seq = b
        .rotation()
        .sequence()
        .iter()
        .map(|h| {
            let sign = if h.edge == e && h.end == End::B { h.sign.flip() } else { h.sign };
            (h.edge as u64, h.end, sign)
        })
        .collect();
    Bouquet::new(SignedRotation::new(seq).expect("generated rotations are valid"))
}

/// A random connected ribbon graph with `1..=max_vertices` vertices and at
/// most `max_edges` edges (at least enough for a spanning tree). End signs
/// and cyclic positions are uniform.
pub fn random_ribbon_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> RibbonGraph {
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let min_edges = nv - 1;
    let m = rng.gen_range(min_edges..=max_edges.max(min_edges));
    let mut order: Vec<usize> = (0..nv).collect();
    order.shuffle(rng);
    let mut vertices: Vec<Vec<(u64, End, Sign)>> = vec![Vec::new(); nv];
    for e in 1..=m {
        let (u, w) = if e < nv {
            (order[e], order[rng.gen_range(0..e)])
        } else {
            (rng.gen_range(0..nv), rng.gen_range(0..nv))
        };
        for (v, end) in [(u, End::A), (w, End::B)] {
            let at = rng.gen_range(0..=vertices[v].len());
            let sign = random_sign(rng);
            vertices[v].insert(at, (e as u64, end, sign));
        }
    }
    RibbonGraph::new(vertices).expect("generated rotation systems are valid")
}
