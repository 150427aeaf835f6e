//! Polynomials in the pair variables `x_{ij}` and the expanded symbolic
//! determinant. Only meant for small matrices: the expansion can have up to
//! `n!` terms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{MatrixError, SymEntry, SymbolicSkewMatrix};
use crate::subset::EdgeSubset;

pub const DEFAULT_SYMBOLIC_CAP: usize = 8;

/// The indeterminate `x_{ij}` with `1 <= i <= j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub i: u8,
    pub j: u8,
}

impl Var {
    pub fn new(i: usize, j: usize) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        assert!(i >= 1 && j <= 64, "variable index out of range");
        Var { i: i as u8, j: j as u8 }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j < 10 {
            write!(f, "x_{{{}{}}}", self.i, self.j)
        } else {
            write!(f, "x_{{{},{}}}", self.i, self.j)
        }
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut merged: BTreeMap<Var, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *merged.entry(v).or_default() += e;
        }
        Monomial(merged.into_iter().collect())
    }

    /// Union of every index appearing in the monomial.
    pub fn support(&self) -> EdgeSubset {
        self.0.iter().fold(EdgeSubset::EMPTY, |acc, &(v, _)| {
            acc.union(EdgeSubset::from_indices([v.i as usize, v.j as usize]))
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{{{e}}}")?;
            }
        }
        Ok(())
    }
}

/// Element of `Z[x_{ij}]`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl SymbolicPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &SymbolicPolynomial) -> SymbolicPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> SymbolicPolynomial {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &SymbolicPolynomial) -> SymbolicPolynomial {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Substitutes 1 for every variable.
    pub fn evaluate_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for SymbolicPolynomial {
    /// Terms by decreasing degree, then by variables; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, i64)> = self.terms().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SymbolicPolynomial {
    type Err = MatrixError;

    /// Reads sums like `x_{11} x_{23}^{2} + 3 x_{12}^2 - 1`. Factors may be
    /// separated by spaces or `*`; `x_{i,j}` is accepted for wide indices.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| MatrixError::MalformedPolynomial(msg.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = SymbolicPolynomial::zero();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        if compact == "0" {
            return Ok(out);
        }
        while pos < bytes.len() {
            let mut sign = 1i64;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let term = &compact[start..pos];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coef, mono) = parse_term(term).ok_or_else(|| bad(term))?;
            out.add_term(mono, sign * coef);
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(i64, Monomial)> {
    let digits = term.bytes().take_while(u8::is_ascii_digit).count();
    let mut coef = 1i64;
    let mut rest = &term[digits..];
    if digits > 0 {
        coef = term[..digits].parse().ok()?;
    }
    rest = rest.strip_prefix('*').unwrap_or(rest);
    let mut mono = Monomial::one();
    while !rest.is_empty() {
        rest = rest.strip_prefix('*').unwrap_or(rest);
        let inner_start = rest.strip_prefix("x_{")?;
        let close = inner_start.find('}')?;
        let inner = &inner_start[..close];
        let (i, j) = if let Some((a, b)) = inner.split_once(',') {
            (a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)
        } else if inner.len() == 2 && inner.bytes().all(|c| c.is_ascii_digit()) {
            ((inner.as_bytes()[0] - b'0') as usize, (inner.as_bytes()[1] - b'0') as usize)
        } else {
            return None;
        };
        if i == 0 || j == 0 || i > 64 || j > 64 {
            return None;
        }
        rest = &inner_start[close + 1..];
        let mut exp = 1u32;
        if let Some(r) = rest.strip_prefix('^') {
            let (e, r) = if let Some(r) = r.strip_prefix('{') {
                let c = r.find('}')?;
                (r[..c].parse().ok()?, &r[c + 1..])
            } else {
                let d = r.bytes().take_while(u8::is_ascii_digit).count();
                (r[..d].parse().ok()?, &r[d..])
            };
            exp = e;
            rest = r;
        }
        if exp == 0 {
            return None;
        }
        mono = mono.mul(&Monomial(vec![(Var::new(i, j), exp)]));
    }
    Some((coef, mono))
}

fn entry_poly(s: &SymbolicSkewMatrix, i: usize, j: usize, with_identity: bool) -> SymbolicPolynomial {
    let mut p = match s.entry(i, j) {
        SymEntry::Zero => SymbolicPolynomial::zero(),
        SymEntry::Var { negated, var } => {
            SymbolicPolynomial::term(Monomial::var(var), if negated { -1 } else { 1 })
        }
    };
    if with_identity && i == j {
        p.add_term(Monomial::one(), 1);
    }
    p
}

/// Expanded `det(s[x])`, or `det(I + s[x])` when `with_identity` is set.
///
/// Laplace expansion along successive rows, memoized on the set of columns
/// already used, so the work is `O(2^k k)` polynomial products.
pub fn det_symbolic(
    s: &SymbolicSkewMatrix,
    x: EdgeSubset,
    with_identity: bool,
    cap: usize,
) -> Result<SymbolicPolynomial, MatrixError> {
    super::check_subset(x, s.n())?;
    let idx: Vec<usize> = x.indices().map(|i| i - 1).collect();
    let k = idx.len();
    if k > cap {
        return Err(MatrixError::SizeCapExceeded { size: k, cap });
    }
    let entries: Vec<Vec<SymbolicPolynomial>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| entry_poly(s, i, j, with_identity)).collect())
        .collect();
    // minors[cols] = det of the first |cols| rows against columns `cols`
    let mut minors: Vec<SymbolicPolynomial> = vec![SymbolicPolynomial::zero(); 1 << k];
    minors[0] = SymbolicPolynomial::constant(1);
    let mut by_size: Vec<usize> = (1..1usize << k).collect();
    by_size.sort_by_key(|c| c.count_ones());
    for cols in by_size {
        let row = cols.count_ones() as usize - 1;
        let mut acc = SymbolicPolynomial::zero();
        for c in 0..k {
            if cols >> c & 1 == 0 || entries[row][c].is_zero() {
                continue;
            }
            let rest = cols & !(1 << c);
            if minors[rest].is_zero() {
                continue;
            }
            let above = (rest >> c).count_ones();
            let sign = if above % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&entries[row][c].mul(&minors[rest]).scale(sign));
        }
        minors[cols] = acc;
    }
    Ok(std::mem::take(&mut minors[(1 << k) - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{det_int, symbolic_skew_adjacency, DetBackend};
    use crate::rotation::Bouquet;
    use crate::testutil::arb_rotation;
    use proptest::prelude::*;

    #[test]
    fn empty_determinant_is_one() {
        let s = symbolic_skew_adjacency(&Bouquet::empty());
        assert_eq!(det_symbolic(&s, EdgeSubset::EMPTY, true, 8).unwrap(), SymbolicPolynomial::constant(1));
    }

    #[test]
    fn two_by_two_with_identity() {
        let s = symbolic_skew_adjacency(&"[1a,2a,1b,2b]".parse().unwrap());
        let d = det_symbolic(&s, EdgeSubset::full(2), true, 8).unwrap();
        assert_eq!(d, "1 + x_{12}^{2}".parse().unwrap());
        assert_eq!(d.to_string(), "x_{12}^{2} + 1");
    }

    #[test]
    fn cap_is_enforced() {
        let s = symbolic_skew_adjacency(&"[1a,2a,3a,1b,2b,3b]".parse().unwrap());
        assert_eq!(
            det_symbolic(&s, EdgeSubset::full(3), false, 2),
            Err(MatrixError::SizeCapExceeded { size: 3, cap: 2 })
        );
    }

    #[test]
    fn polynomial_text_round_trip() {
        let p: SymbolicPolynomial = "3 x_{11} x_{23}^{2} - x_{12}*x_{12} + 2 - 2 + x_{3,12}".parse().unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coefficient(&Monomial(vec![(Var::new(1, 2), 2)])), -1);
        assert_eq!(p.to_string().parse::<SymbolicPolynomial>().unwrap(), p);
        assert!("x_{1}".parse::<SymbolicPolynomial>().is_err());
        assert!("y".parse::<SymbolicPolynomial>().is_err());
        assert!("0".parse::<SymbolicPolynomial>().unwrap().is_zero());
    }

    proptest! {
        #[test]
        fn ones_substitution_gives_integer_determinant(r in arb_rotation(6), mask in any::<u64>()) {
            let b = Bouquet::new(r);
            let s = symbolic_skew_adjacency(&b);
            let x = EdgeSubset::from_bits(mask).intersection(EdgeSubset::full(b.n()));
            let d = det_symbolic(&s, x, false, 8).unwrap();
            let want = det_int(&s.unsymbolic(), x, DetBackend::Exact).unwrap();
            prop_assert_eq!(d.evaluate_at_ones() as i128, want);
            // every monomial of det(s[x]) covers exactly x
            for (m, _) in d.terms() {
                prop_assert_eq!(m.support(), x);
            }
        }
    }
}
