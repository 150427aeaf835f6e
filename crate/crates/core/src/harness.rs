//! Randomized cross-validation of the determinant side against boundary
//! tracing and the other identities that tie bouquets, pivots and twists
//! together.

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::deltamatroid::SetSystem;
use crate::matrices::{adjacency, det_gf2, det_identity_plus, pivot_gf2, unsymbolic_skew_adjacency, BinaryMatrix, DetBackend, IntegerSkewMatrix};
use crate::quasitree::{quasi_tree_polynomial, Method, PolyOptions, SubsetPolynomial};
use crate::random::{random_bouquet, HarnessRng};
use crate::ribbon::RibbonGraph;
use crate::rotation::{Bouquet, SignedRotation};
use crate::subset::EdgeSubset;
use crate::topology;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HarnessConfig {
    pub seed: u64,
    pub count: usize,
    /// Loops per bouquet.
    pub n: usize,
    /// Probability that a loop is twisted.
    pub p: f64,
    /// Flip one off-diagonal pair of the adjacency matrix (and negate the
    /// matching entry of the signed matrix) before checking. Every check
    /// that reads a matrix should then start failing.
    pub corrupt: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig { seed: 1, count: 100, n: 8, p: 0.5, corrupt: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub index: usize,
    pub rotation: String,
    pub failures: Vec<String>,
    /// Integer coefficients that changed under a re-encoding while the mod-2
    /// polynomial did not. Recorded, never a failure.
    pub findings: Vec<String>,
}

impl InstanceOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HarnessSummary {
    pub config: HarnessConfig,
    /// Ordered by instance index.
    pub outcomes: Vec<InstanceOutcome>,
}

impl HarnessSummary {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn first_failure(&self) -> Option<&InstanceOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }

    pub fn findings(&self) -> impl Iterator<Item = (&InstanceOutcome, &String)> {
        self.outcomes.iter().flat_map(|o| o.findings.iter().map(move |f| (o, f)))
    }

    pub fn render_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "check: seed={} count={} n={} p={}{}\n",
            c.seed,
            c.count,
            c.n,
            c.p,
            if c.corrupt { " (corrupted)" } else { "" }
        );
        out += &format!("passed: {}\nfailed: {}\n", self.passed(), self.failed());
        if let Some(f) = self.first_failure() {
            out += &format!("first failure: instance {} {}\n", f.index, f.rotation);
            for msg in &f.failures {
                out += &format!("  {msg}\n");
            }
        }
        let findings: Vec<_> = self.findings().collect();
        out += &format!("integer-coefficient findings: {}\n", findings.len());
        for (o, msg) in findings.iter().take(5) {
            out += &format!("  instance {} {}: {msg}\n", o.index, o.rotation);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let c = &self.config;
        let first = self.first_failure().map(|f| {
            json!({ "index": f.index, "rotation": f.rotation, "failures": f.failures })
        });
        let findings: Vec<Value> = self
            .findings()
            .map(|(o, msg)| json!({ "index": o.index, "rotation": o.rotation, "finding": msg }))
            .collect();
        json!({
            "config": { "seed": c.seed, "count": c.count, "n": c.n, "p": c.p, "corrupt": c.corrupt },
            "passed": self.passed(),
            "failed": self.failed(),
            "first_failure": first,
            "findings": findings,
        })
    }
}

// Everything random about one instance, drawn up front so the checks
// themselves are deterministic and can run in any order.
struct Instance {
    index: usize,
    bouquet: Bouquet,
    shift: usize,
    swap_edge: usize,
    twist_set: EdgeSubset,
}

fn draw_instances(config: &HarnessConfig) -> Vec<Instance> {
    let mut master = HarnessRng::seed_from_u64(config.seed);
    (0..config.count)
        .map(|index| {
            let mut r = HarnessRng::seed_from_u64(master.gen());
            let bouquet = random_bouquet(&mut r, config.n, config.p);
            let shift = r.gen_range(0..(2 * config.n).max(1));
            let swap_edge = r.gen_range(1..=config.n.max(1));
            let twist_set = EdgeSubset::from_bits(r.gen::<u64>()).intersection(EdgeSubset::full(config.n));
            Instance { index, bouquet, shift, swap_edge, twist_set }
        })
        .collect()
}

struct Matrices {
    adjacency: BinaryMatrix,
    signed: IntegerSkewMatrix,
}

fn matrices(b: &Bouquet, corrupt: bool) -> Matrices {
    let mut adjacency = adjacency(b);
    let mut signed = unsymbolic_skew_adjacency(b);
    if corrupt && b.n() >= 2 {
        let v = !adjacency.get(0, 1);
        adjacency.set(0, 1, v);
        adjacency.set(1, 0, v);
        let s = signed.get(0, 1);
        signed.set_unchecked(0, 1, if s == 0 { 1 } else { -s });
    }
    Matrices { adjacency, signed }
}

fn feasible_from(m: &BinaryMatrix, n: usize) -> Vec<EdgeSubset> {
    let mut v: Vec<EdgeSubset> = EdgeSubset::all(n).filter(|&x| det_gf2(m, x) == 1).collect();
    v.sort_unstable();
    v
}

// Sets on only one side, at most five of each.
fn disagreement(left: &[EdgeSubset], right: &[EdgeSubset]) -> String {
    let only = |a: &[EdgeSubset], b: &[EdgeSubset]| {
        let v: Vec<EdgeSubset> = a.iter().filter(|x| b.binary_search(x).is_err()).copied().collect();
        let mut parts: Vec<String> = v.iter().take(5).map(ToString::to_string).collect();
        if v.len() > 5 {
            parts.push(format!("... {} more", v.len() - 5));
        }
        format!("[{}]", parts.join(", "))
    };
    format!("{} vs {} sets; only left {}, only right {}", left.len(), right.len(), only(left, right), only(right, left))
}

fn check_instance(inst: &Instance, corrupt: bool) -> InstanceOutcome {
    let b = &inst.bouquet;
    let n = b.n();
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mats = matrices(b, corrupt);
    let theorem = feasible_from(&mats.adjacency, n);
    let oracle = topology::enumerate_quasi_trees_oracle(b, usize::MAX).expect("no cap");
    let g = RibbonGraph::from_bouquet(b);

    if theorem != oracle {
        failures.push(format!("determinants vs boundary tracing: {}", disagreement(&theorem, &oracle)));
    }

    // Re-encodings of the same bouquet.
    let opts = PolyOptions { integer: true, ..PolyOptions::default() };
    let base = quasi_tree_polynomial(b, Method::Gf2, opts).expect("within cap");
    let r = b.rotation();
    let mut encodings: Vec<(String, SignedRotation)> =
        vec![(format!("rotation by {}", inst.shift), r.rotated(inst.shift)), ("reversal".into(), r.reversed())];
    if n > 0 {
        encodings.push((format!("a/b swap of {}", inst.swap_edge), r.swap_ends(inst.swap_edge)));
    }
    for (what, enc) in encodings {
        let other = Bouquet::new(enc);
        let re_m = matrices(&other, corrupt).adjacency;
        let re_feasible = feasible_from(&re_m, n);
        if re_feasible != theorem {
            failures.push(format!("{what}: mod-2 polynomial changed: {}", disagreement(&theorem, &re_feasible)));
        }
        let rep = quasi_tree_polynomial(&other, Method::Gf2, opts).expect("within cap");
        if rep.integer_poly != base.integer_poly {
            let fmt = |p: &Option<SubsetPolynomial>| p.as_ref().map(ToString::to_string).unwrap_or_default();
            findings.push(format!(
                "{what}: integer polynomial {} became {}",
                fmt(&base.integer_poly),
                fmt(&rep.integer_poly)
            ));
        }
    }

    if b.is_orientable() {
        let d = det_identity_plus(&mats.signed, DetBackend::Exact).expect("exact backend");
        if d != oracle.len() as i128 {
            failures.push(format!("det(I + A) = {d} but the bouquet has {} spanning quasi-trees", oracle.len()));
        }
    }

    if let Some(e) = b.non_orientable_loops().next() {
        let single = EdgeSubset::singleton(e);
        match pivot_gf2(&mats.adjacency, single) {
            Ok(p) => {
                let dual = topology::partial_dual(&g, single).expect("edge exists");
                match dual.to_bouquet() {
                    Some(db) if adjacency(&db) == p => {}
                    Some(db) => failures.push(format!(
                        "pivot on {{{e}}} gives {p:?} but the partial dual {} has adjacency {:?}",
                        db.rotation(),
                        adjacency(&db)
                    )),
                    None => failures.push(format!("partial dual at twisted loop {e} has {} vertices", dual.n_vertices())),
                }
            }
            Err(err) => failures.push(format!("pivot on twisted loop {e}: {err}")),
        }
    }

    let a = inst.twist_set;
    let family = SetSystem::new(n, theorem.iter().copied()).expect("subsets of [n]");
    let twisted = family.twist(a).expect("subset of [n]");
    let dual = topology::partial_dual(&g, a).expect("subset of [n]");
    let dual_oracle = topology::quasi_trees_oracle(&dual, usize::MAX).expect("no cap");
    let dual_family = SetSystem::new(n, dual_oracle).expect("subsets of [n]");
    if twisted != dual_family {
        failures.push(format!(
            "twist by {a}: twisted family has {} sets, partial dual has {}",
            twisted.len(),
            dual_family.len()
        ));
    }

    InstanceOutcome { index: inst.index, rotation: b.rotation().to_string(), failures, findings }
}

/// Runs every check on `config.count` seeded random bouquets. Instances are
/// checked in parallel; the result is ordered by index and depends only on
/// the configuration.
pub fn run_check(config: HarnessConfig) -> HarnessSummary {
    let instances = draw_instances(&config);
    let outcomes = instances.par_iter().map(|inst| check_instance(inst, config.corrupt)).collect();
    HarnessSummary { config, outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_repeats() {
        let cfg = HarnessConfig { seed: 5, count: 30, n: 6, p: 0.5, corrupt: false };
        let a = run_check(cfg);
        assert!(a.all_passed(), "{}", a.render_text());
        assert_eq!(a, run_check(cfg));
        assert_eq!(a.outcomes.iter().map(|o| o.index).collect::<Vec<_>>(), (0..30).collect::<Vec<_>>());
    }

    #[test]
    fn empty_run_passes() {
        let s = run_check(HarnessConfig { count: 0, ..HarnessConfig::default() });
        assert!(s.all_passed());
        assert!(s.render_text().contains("passed: 0\nfailed: 0\n"));
    }

    #[test]
    fn corruption_is_detected() {
        let s = run_check(HarnessConfig { seed: 2, count: 20, n: 6, p: 0.5, corrupt: true });
        assert!(s.failed() > 0);
        assert!(s.render_text().contains("first failure"));
    }

    #[test]
    fn zero_loops() {
        let s = run_check(HarnessConfig { seed: 1, count: 3, n: 0, p: 0.5, corrupt: false });
        assert!(s.all_passed(), "{}", s.render_text());
    }
}
