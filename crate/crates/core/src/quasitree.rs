//! Spanning quasi-trees from principal minors.
//!
//! The coefficient of `x_X` in `f(det(I + A^s))` is `det(A^u[X])`, and it is
//! odd exactly when `X` spans a quasi-tree. Every routine here therefore
//! sweeps the `2^n` subsets and evaluates one scalar determinant per subset.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::matrices::{
    adjacency, det_gf2, det_int, det_symbolic, symbolic_skew_adjacency, unsymbolic_skew_adjacency, DetBackend,
    MatrixError, SymbolicPolynomial, DEFAULT_SYMBOLIC_CAP,
};
use crate::ribbon::RibbonGraph;
use crate::rotation::Bouquet;
use crate::subset::EdgeSubset;
use crate::topology::{self, TopologyError, DEFAULT_ORACLE_CAP};

/// Largest `n` swept without `force`.
pub const DEFAULT_ENUMERATION_CAP: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasiTreeError {
    #[error("{n} edges exceeds the enumeration cap of {cap} (use --force to override)")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("variable index {index} lies outside [{n}]")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ribbon graph is not connected")]
    NotConnected,
    #[error("{t} is not a spanning quasi-tree: its spanning subgraph has {boundaries} boundary components")]
    NotAQuasiTree { t: EdgeSubset, boundaries: usize },
    #[error("internal error: {0}")]
    InternalError(String),
}

/// Integer combination of the generators `x_A`, `A ⊆ [n]`, with
/// `x_A · x_B = x_{A ∪ B}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetPolynomial {
    n: usize,
    terms: BTreeMap<EdgeSubset, i128>,
}

impl SubsetPolynomial {
    pub fn zero(n: usize) -> Self {
        SubsetPolynomial { n, terms: BTreeMap::new() }
    }

    /// The unit `x_∅`.
    pub fn one(n: usize) -> Self {
        Self::generator(n, EdgeSubset::EMPTY, 1)
    }

    pub fn generator(n: usize, a: EdgeSubset, c: i128) -> Self {
        let mut p = Self::zero(n);
        p.add_term(a, c);
        p
    }

    fn from_sorted(n: usize, terms: Vec<(EdgeSubset, i128)>) -> Self {
        SubsetPolynomial { n, terms: terms.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, a: EdgeSubset, c: i128) {
        assert!(a.fits(self.n), "generator {a} outside [{}]", self.n);
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(a).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&a);
        }
    }

    pub fn coefficient(&self, a: EdgeSubset) -> i128 {
        self.terms.get(&a).copied().unwrap_or(0)
    }

    /// Nonzero terms in canonical subset order.
    pub fn terms(&self) -> impl Iterator<Item = (EdgeSubset, i128)> + '_ {
        self.terms.iter().map(|(&a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &SubsetPolynomial) -> SubsetPolynomial {
        let mut out = self.clone();
        out.n = out.n.max(other.n);
        for (a, c) in other.terms() {
            out.add_term(a, c);
        }
        out
    }

    pub fn mul(&self, other: &SubsetPolynomial) -> SubsetPolynomial {
        let mut out = SubsetPolynomial::zero(self.n.max(other.n));
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// Coefficients reduced to `{0, 1}`.
    pub fn mod2(&self) -> SubsetPolynomial {
        let terms = self.terms().filter(|&(_, c)| c.rem_euclid(2) == 1).map(|(a, _)| (a, 1)).collect();
        SubsetPolynomial::from_sorted(self.n, terms)
    }

    /// Sum of coefficients, i.e. every `x_A` set to 1.
    pub fn evaluate_at_ones(&self) -> i128 {
        self.terms.values().sum()
    }

    /// Substitutes `x_A -> x_{A Δ t}`.
    pub fn shifted(&self, t: EdgeSubset) -> SubsetPolynomial {
        let mut out = SubsetPolynomial::zero(self.n);
        for (a, c) in self.terms() {
            out.add_term(a.symmetric_difference(t), c);
        }
        out
    }

    /// `[[subset, coefficient], ...]` in canonical order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(a, c)| {
                    let idx: Vec<usize> = a.indices().collect();
                    let coeff = i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::from(c.to_string()));
                    json!([idx, coeff])
                })
                .collect(),
        )
    }
}

impl fmt::Display for SubsetPolynomial {
    /// `c*x_{i j k}` terms joined by ` + `; unit coefficients print bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (a, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            f.write_str("x_{")?;
            for (i, e) in a.indices().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Applies the reduction map `f`: every monomial becomes `x_A` with `A` the
/// union of its indices.
pub fn reduce(p: &SymbolicPolynomial, n: usize) -> Result<SubsetPolynomial, QuasiTreeError> {
    let mut out = SubsetPolynomial::zero(n);
    for (m, c) in p.terms() {
        for &(v, _) in m.factors() {
            let j = v.j as usize;
            if j > n {
                return Err(QuasiTreeError::IndexOutOfRange { index: j, n });
            }
        }
        out.add_term(m.support(), c as i128);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    #[default]
    Gf2,
    Integer,
    Symbolic,
    /// Boundary tracing; no matrices involved.
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Gf2 => "gf2",
            Method::Integer => "integer",
            Method::Symbolic => "symbolic",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gf2" => Ok(Method::Gf2),
            "integer" => Ok(Method::Integer),
            "symbolic" => Ok(Method::Symbolic),
            "oracle" => Ok(Method::Oracle),
            _ => Err(format!("unknown method {s:?} (expected gf2, integer, symbolic or oracle)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyOptions {
    /// Largest `n` for the `2^n` sweep.
    pub cap: usize,
    /// Ignore `cap`.
    pub force: bool,
    /// Largest `n` for [`Method::Symbolic`].
    pub symbolic_cap: usize,
    /// Also compute the integer coefficients when the method does not.
    pub integer: bool,
    pub backend: DetBackend,
}

impl Default for PolyOptions {
    fn default() -> Self {
        PolyOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            force: false,
            symbolic_cap: DEFAULT_SYMBOLIC_CAP,
            integer: false,
            backend: DetBackend::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTreeReport {
    pub n: usize,
    pub tau: u64,
    /// Canonical order.
    pub feasible: Vec<EdgeSubset>,
    pub mod2_poly: SubsetPolynomial,
    pub integer_poly: Option<SubsetPolynomial>,
    pub method: Method,
}

impl QuasiTreeReport {
    fn from_feasible(n: usize, feasible: Vec<EdgeSubset>, integer_poly: Option<SubsetPolynomial>, method: Method) -> Self {
        let mod2_poly = SubsetPolynomial::from_sorted(n, feasible.iter().map(|&x| (x, 1)).collect());
        QuasiTreeReport { n, tau: feasible.len() as u64, feasible, mod2_poly, integer_poly, method }
    }

    pub fn to_json(&self) -> Value {
        let feasible: Vec<Vec<usize>> = self.feasible.iter().map(|x| x.indices().collect()).collect();
        json!({
            "n": self.n,
            "tau": self.tau,
            "method": self.method.as_str(),
            "feasible": feasible,
            "mod2_poly": self.mod2_poly.to_json(),
            "integer_poly": self.integer_poly.as_ref().map(SubsetPolynomial::to_json),
        })
    }
}

// Splits [0, 2^n) into a few hundred chunks per worker-sized batch.
fn chunks(n: usize) -> (u64, u64) {
    let total = 1u64 << n;
    let chunk = 1u64 << n.saturating_sub(8).min(16);
    (total, chunk)
}

fn sweep<T, F>(n: usize, eval: F) -> Result<Vec<(EdgeSubset, T)>, QuasiTreeError>
where
    T: Send,
    F: Fn(EdgeSubset) -> Result<Option<T>, QuasiTreeError> + Sync,
{
    let (total, chunk) = chunks(n);
    let parts: Vec<Vec<(EdgeSubset, T)>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(total);
            let mut part = Vec::new();
            for bits in lo..hi {
                let x = EdgeSubset::from_bits(bits);
                if let Some(v) = eval(x)? {
                    part.push((x, v));
                }
            }
            Ok(part)
        })
        .collect::<Result<_, QuasiTreeError>>()?;
    let mut out: Vec<(EdgeSubset, T)> = parts.into_iter().flatten().collect();
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn gf2_feasible(b: &Bouquet) -> Vec<EdgeSubset> {
    let m = adjacency(b);
    sweep(b.n(), |x| Ok((det_gf2(&m, x) == 1).then_some(())))
        .expect("GF(2) sweep is infallible")
        .into_iter()
        .map(|(x, ())| x)
        .collect()
}

fn integer_poly(b: &Bouquet, backend: DetBackend) -> Result<SubsetPolynomial, QuasiTreeError> {
    let a = unsymbolic_skew_adjacency(b);
    let terms = sweep(b.n(), |x| {
        let d = det_int(&a, x, backend)?;
        Ok((d != 0).then_some(d))
    })?;
    Ok(SubsetPolynomial::from_sorted(b.n(), terms))
}

/// Spanning quasi-trees of `b`, together with `f(det(I + A^s)) mod 2` and,
/// when requested, the integer coefficients before reduction.
pub fn quasi_tree_polynomial(b: &Bouquet, method: Method, options: PolyOptions) -> Result<QuasiTreeReport, QuasiTreeError> {
    let n = b.n();
    if method == Method::Symbolic {
        if n > options.symbolic_cap {
            return Err(MatrixError::SizeCapExceeded { size: n, cap: options.symbolic_cap }.into());
        }
        let s = symbolic_skew_adjacency(b);
        let det = det_symbolic(&s, EdgeSubset::full(n), true, options.symbolic_cap)?;
        let ints = reduce(&det, n)?;
        let feasible = ints.mod2().terms().map(|(x, _)| x).collect();
        return Ok(QuasiTreeReport::from_feasible(n, feasible, Some(ints), method));
    }
    if n > options.cap && !options.force {
        return Err(QuasiTreeError::SizeCapExceeded { n, cap: options.cap });
    }
    let want_ints = options.integer || method == Method::Integer;
    let ints = if want_ints { Some(integer_poly(b, options.backend)?) } else { None };
    let feasible = match method {
        Method::Gf2 => gf2_feasible(b),
        Method::Integer => ints.as_ref().expect("computed above").mod2().terms().map(|(x, _)| x).collect(),
        Method::Oracle => topology::enumerate_quasi_trees_oracle(b, usize::MAX)?,
        Method::Symbolic => unreachable!(),
    };
    Ok(QuasiTreeReport::from_feasible(n, feasible, ints, method))
}

/// Number of spanning quasi-trees of `b`.
pub fn tau(b: &Bouquet) -> u64 {
    let m = adjacency(b);
    let (total, chunk) = chunks(b.n());
    (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(total);
            (lo..hi).filter(|&bits| det_gf2(&m, EdgeSubset::from_bits(bits)) == 1).count() as u64
        })
        .sum()
}

/// Result of running a general ribbon graph through its partial dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonReport {
    /// Polynomials and feasible sets indexed by the edges of `g`.
    pub report: QuasiTreeReport,
    pub quasi_tree: EdgeSubset,
    /// `g^{δ(T)}`.
    pub bouquet: Bouquet,
}

/// Spanning quasi-trees of a connected ribbon graph: `X` is feasible for
/// `g^{δ(T)}` exactly when `X Δ T` is feasible for `g`.
pub fn quasi_trees_via_partial_dual(
    g: &RibbonGraph,
    t: EdgeSubset,
    method: Method,
    options: PolyOptions,
) -> Result<RibbonReport, QuasiTreeError> {
    if !g.is_connected() {
        return Err(QuasiTreeError::NotConnected);
    }
    if !t.fits(g.n_edges()) {
        return Err(TopologyError::SubsetOutOfRange(t).into());
    }
    let boundaries = topology::spanning_boundary_count(g, t);
    if boundaries != 1 {
        return Err(QuasiTreeError::NotAQuasiTree { t, boundaries });
    }
    let dual = topology::partial_dual(g, t)?;
    let bouquet = dual.to_bouquet().ok_or_else(|| {
        QuasiTreeError::InternalError(format!("partial dual over {t} has {} vertices", dual.n_vertices()))
    })?;
    let inner = quasi_tree_polynomial(&bouquet, method, options)?;
    let mut feasible: Vec<EdgeSubset> = inner.feasible.iter().map(|x| x.symmetric_difference(t)).collect();
    feasible.sort_unstable();
    let report = QuasiTreeReport {
        n: inner.n,
        tau: inner.tau,
        feasible,
        mod2_poly: inner.mod2_poly.shifted(t),
        integer_poly: inner.integer_poly.map(|p| p.shifted(t)),
        method,
    };
    Ok(RibbonReport { report, quasi_tree: t, bouquet })
}

/// Picks the first spanning quasi-tree of `g` and runs
/// [`quasi_trees_via_partial_dual`].
pub fn quasi_trees_of(g: &RibbonGraph, method: Method, options: PolyOptions) -> Result<RibbonReport, QuasiTreeError> {
    if !g.is_connected() {
        return Err(QuasiTreeError::NotConnected);
    }
    let cap = if options.force { usize::MAX } else { options.cap.max(DEFAULT_ORACLE_CAP) };
    let t = topology::find_spanning_quasi_tree(g, cap)?;
    quasi_trees_via_partial_dual(g, t, method, options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::det_identity_plus;
    use crate::random::{random_bouquet, random_ribbon_graph, rng};
    use crate::testutil::{arb_rotation, example, example_feasible};
    use proptest::prelude::*;

    fn bq(s: &str) -> Bouquet {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> EdgeSubset {
        EdgeSubset::from_indices(v.iter().copied())
    }

    #[test]
    fn reduce_examples() {
        let p: SymbolicPolynomial = "x_{12}^{2} x_{34}^{2} x_{55}".parse().unwrap();
        assert_eq!(reduce(&p, 5).unwrap(), SubsetPolynomial::generator(5, EdgeSubset::full(5), 1));
        assert_eq!(reduce(&SymbolicPolynomial::constant(1), 0).unwrap(), SubsetPolynomial::one(0));
        let p: SymbolicPolynomial = "3 x_{11} x_{23}".parse().unwrap();
        assert_eq!(reduce(&p, 3).unwrap(), SubsetPolynomial::generator(3, set(&[1, 2, 3]), 3));
        assert_eq!(reduce(&p, 2), Err(QuasiTreeError::IndexOutOfRange { index: 3, n: 2 }));
    }

    #[test]
    fn generators_multiply_by_union() {
        let a = SubsetPolynomial::generator(4, set(&[1, 2]), 2);
        let b = SubsetPolynomial::generator(4, set(&[2, 3]), 3).add(&SubsetPolynomial::one(4));
        let p = a.mul(&b);
        assert_eq!(p.coefficient(set(&[1, 2, 3])), 6);
        assert_eq!(p.coefficient(set(&[1, 2])), 2);
        assert_eq!(p.len(), 2);
        assert_eq!(a.mul(&SubsetPolynomial::one(4)), a);
    }

    #[test]
    fn text_and_json_forms() {
        let mut p = SubsetPolynomial::one(3);
        p.add_term(set(&[1, 2, 3]), 3);
        p.add_term(set(&[2]), 1);
        assert_eq!(p.to_string(), "x_{} + 3*x_{1 2 3} + x_{2}");
        assert_eq!(p.to_json(), json!([[[], 1], [[1, 2, 3], 3], [[2], 1]]));
        p.add_term(set(&[2]), -1);
        assert_eq!(p.len(), 2);
        assert_eq!(SubsetPolynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn example_all_methods() {
        for method in [Method::Gf2, Method::Integer, Method::Symbolic, Method::Oracle] {
            let r = quasi_tree_polynomial(&example(), method, PolyOptions::default()).unwrap();
            assert_eq!(r.tau, 20, "{method}");
            assert_eq!(r.feasible, example_feasible(), "{method}");
            assert_eq!(r.mod2_poly.len(), 20);
        }
        let r = quasi_tree_polynomial(&example(), Method::Integer, PolyOptions::default()).unwrap();
        let ints = r.integer_poly.unwrap();
        assert_eq!(ints.coefficient(EdgeSubset::full(5)), 3);
        assert_eq!(ints.coefficient(set(&[1, 2, 3, 4])), 2);
        assert_eq!(ints.coefficient(set(&[4, 5])), 2);
        assert!(ints.to_string().contains("2*x_{1 2 3 4} + 3*x_{1 2 3 4 5}"));
    }

    #[test]
    fn small_bouquets() {
        assert_eq!(tau(&example()), 20);
        assert_eq!(tau(&bq("[-1a,1b]")), 2);
        assert_eq!(tau(&bq("[1a,1b]")), 1);
        let b = bq("[1a,2a,1b,2b]");
        assert_eq!(tau(&b), 2);
        assert_eq!(det_identity_plus(&unsymbolic_skew_adjacency(&b), DetBackend::Exact).unwrap(), 2);
        let r = quasi_tree_polynomial(&b, Method::Gf2, PolyOptions::default()).unwrap();
        assert_eq!(r.feasible, vec![EdgeSubset::EMPTY, set(&[1, 2])]);
        let r = quasi_tree_polynomial(&Bouquet::empty(), Method::Gf2, PolyOptions::default()).unwrap();
        assert_eq!((r.tau, r.feasible), (1, vec![EdgeSubset::EMPTY]));
        assert_eq!(tau(&Bouquet::empty()), 1);
    }

    #[test]
    fn caps() {
        let opts = PolyOptions { cap: 4, ..PolyOptions::default() };
        assert_eq!(
            quasi_tree_polynomial(&example(), Method::Gf2, opts),
            Err(QuasiTreeError::SizeCapExceeded { n: 5, cap: 4 })
        );
        assert!(quasi_tree_polynomial(&example(), Method::Gf2, PolyOptions { force: true, ..opts }).is_ok());
        let opts = PolyOptions { symbolic_cap: 4, ..PolyOptions::default() };
        assert_eq!(
            quasi_tree_polynomial(&example(), Method::Symbolic, opts),
            Err(QuasiTreeError::Matrix(MatrixError::SizeCapExceeded { size: 5, cap: 4 }))
        );
    }

    #[test]
    fn partial_dual_pipeline_on_bouquets() {
        let g = RibbonGraph::from_bouquet(&example());
        let direct = quasi_tree_polynomial(&example(), Method::Gf2, PolyOptions::default()).unwrap();
        let via = quasi_trees_via_partial_dual(&g, EdgeSubset::EMPTY, Method::Gf2, PolyOptions::default()).unwrap();
        assert_eq!(via.report, direct);
        let via = quasi_trees_via_partial_dual(&g, set(&[1]), Method::Gf2, PolyOptions::default()).unwrap();
        assert_eq!(via.report.feasible, example_feasible());
        assert_eq!(
            quasi_trees_via_partial_dual(&g, set(&[2]), Method::Gf2, PolyOptions::default()),
            Err(QuasiTreeError::NotAQuasiTree { t: set(&[2]), boundaries: 2 })
        );
    }

    #[test]
    fn annulus_two_vertices() {
        use crate::rotation::{End, Sign};
        let p = Sign::Plus;
        let g = RibbonGraph::new(vec![
            vec![(1, End::A, p), (2, End::A, p)],
            vec![(2, End::B, p), (1, End::B, p)],
        ])
        .unwrap();
        let oracle = topology::quasi_trees_oracle(&g, 20).unwrap();
        let via = quasi_trees_via_partial_dual(&g, set(&[1]), Method::Gf2, PolyOptions::default()).unwrap();
        assert_eq!(via.report.tau, 2);
        assert_eq!(via.report.feasible, oracle);
        let disconnected = RibbonGraph::new(vec![vec![(1, End::A, p), (1, End::B, p)], vec![]]).unwrap();
        assert_eq!(
            quasi_trees_via_partial_dual(&disconnected, EdgeSubset::EMPTY, Method::Gf2, PolyOptions::default()),
            Err(QuasiTreeError::NotConnected)
        );
    }

    #[test]
    fn random_ribbon_graphs_match_oracle_for_every_quasi_tree() {
        let mut r = rng(7);
        for _ in 0..60 {
            let g = random_ribbon_graph(&mut r, 4, 7);
            let oracle = topology::quasi_trees_oracle(&g, 20).unwrap();
            for &t in &oracle {
                let via = quasi_trees_via_partial_dual(&g, t, Method::Gf2, PolyOptions::default()).unwrap();
                assert_eq!(via.report.feasible, oracle, "{g} T={t}");
            }
        }
    }

    #[test]
    fn orientable_counts_match_identity_determinant() {
        let mut r = rng(3);
        for n in 0..10 {
            let b = random_bouquet(&mut r, n, 0.0);
            let d = det_identity_plus(&unsymbolic_skew_adjacency(&b), DetBackend::Exact).unwrap();
            assert_eq!(d, tau(&b) as i128);
        }
    }

    proptest! {
        #[test]
        fn methods_agree(r in arb_rotation(7)) {
            let b = Bouquet::new(r);
            let base = quasi_tree_polynomial(&b, Method::Gf2, PolyOptions::default()).unwrap();
            prop_assert_eq!(base.tau, tau(&b));
            prop_assert_eq!(base.tau as usize, base.mod2_poly.len());
            for m in [Method::Integer, Method::Symbolic, Method::Oracle] {
                let other = quasi_tree_polynomial(&b, m, PolyOptions::default()).unwrap();
                prop_assert_eq!(&other.feasible, &base.feasible);
                prop_assert_eq!(&other.mod2_poly, &base.mod2_poly);
            }
            let sym = quasi_tree_polynomial(&b, Method::Symbolic, PolyOptions::default()).unwrap();
            let int = quasi_tree_polynomial(&b, Method::Integer, PolyOptions::default()).unwrap();
            prop_assert_eq!(sym.integer_poly, int.integer_poly);
        }
    }
}
