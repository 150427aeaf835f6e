//! Signed rotations and bouquets.
//!
//! A bouquet is a ribbon graph with one vertex; it is described by the cyclic
//! order of its `2n` loop ends around that vertex. Each loop `i` contributes
//! the labels `i^a` and `i^b`, each carrying a sign; a loop whose two ends
//! carry different signs is a twisted (non-orientable) loop.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::subset::{EdgeSubset, MAX_EDGES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    A,
    B,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::A => End::B,
            End::B => End::A,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            End::A => 0,
            End::B => 1,
        }
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            End::A => "a",
            End::B => "b",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One occurrence `±i^a` or `±i^b` in a signed rotation. `edge` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdgeLabel {
    pub edge: usize,
    pub end: End,
    pub sign: Sign,
}

impl HalfEdgeLabel {
    pub fn new(edge: usize, end: End, sign: Sign) -> Self {
        HalfEdgeLabel { edge, end, sign }
    }
}

impl fmt::Display for HalfEdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        write!(f, "{}{}", self.edge, self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopKind {
    Orientable,
    NonOrientable,
}

/// Relative cyclic position of two loops, signs ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interlacement {
    /// Cyclic order `i^a, j^a, i^b, j^b`.
    Aligned,
    /// Cyclic order `i^a, j^b, i^b, j^a`.
    Reversed,
    NonInterlaced,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("malformed token '{token}' at offset {offset}")]
    MalformedToken { token: String, offset: usize },
    #[error("half-edge {edge}{end} appears more than once")]
    DuplicateEnd { edge: u64, end: End },
    #[error("edge {edge} is missing its {end} end")]
    MissingEnd { edge: u64, end: End },
    #[error("too many edges: {0} (at most {MAX_EDGES})")]
    TooManyEdges(usize),
    #[error("edge index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("interlacement query requires i < j, got ({i}, {j})")]
    RequiresIStrictlyLessThanJ { i: usize, j: usize },
}

/// A validated cyclic sequence of `2n` signed half-edge labels with edges
/// numbered `1..=n`.
///
/// `labels[k]` keeps the label edge `k + 1` had in the input, so relabeling
/// by parsing or restriction can be reported back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedRotation {
    seq: Vec<HalfEdgeLabel>,
    labels: Vec<u64>,
    // pos[i - 1] = [position of i^a, position of i^b]
    pos: Vec<[usize; 2]>,
}

impl SignedRotation {
    /// Validates `seq` and relabels its edge indices to `1..=n` by increasing
    /// value.
    pub fn new(seq: Vec<(u64, End, Sign)>) -> Result<Self, RotationError> {
        let mut seen: BTreeMap<u64, [bool; 2]> = BTreeMap::new();
        for &(edge, end, _) in &seq {
            let slot = &mut seen.entry(edge).or_default()[end.index()];
            if *slot {
                return Err(RotationError::DuplicateEnd { edge, end });
            }
            *slot = true;
        }
        for (&edge, ends) in &seen {
            if !ends[0] {
                return Err(RotationError::MissingEnd { edge, end: End::A });
            }
            if !ends[1] {
                return Err(RotationError::MissingEnd { edge, end: End::B });
            }
        }
        if seen.len() > MAX_EDGES {
            return Err(RotationError::TooManyEdges(seen.len()));
        }
        let labels: Vec<u64> = seen.keys().copied().collect();
        let canon: BTreeMap<u64, usize> =
            labels.iter().enumerate().map(|(k, &l)| (l, k + 1)).collect();
        let seq = seq
            .into_iter()
            .map(|(edge, end, sign)| HalfEdgeLabel::new(canon[&edge], end, sign))
            .collect();
        Ok(Self::from_canonical(seq, labels))
    }

    fn from_canonical(seq: Vec<HalfEdgeLabel>, labels: Vec<u64>) -> Self {
        let mut pos = vec![[0usize; 2]; labels.len()];
        for (p, h) in seq.iter().enumerate() {
            pos[h.edge - 1][h.end.index()] = p;
        }
        SignedRotation { seq, labels, pos }
    }

    pub fn empty() -> Self {
        Self::from_canonical(Vec::new(), Vec::new())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn sequence(&self) -> &[HalfEdgeLabel] {
        &self.seq
    }

    /// Input label of each canonical edge, indexed by `edge - 1`.
    pub fn original_labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, edge: usize, end: End) -> HalfEdgeLabel {
        self.seq[self.position(edge, end)]
    }

    pub fn position(&self, edge: usize, end: End) -> usize {
        self.pos[edge - 1][end.index()]
    }

    /// Same cyclic sequence read from position `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut seq = self.seq.clone();
        if !seq.is_empty() {
            let len = seq.len();
            seq.rotate_left(k % len);
        }
        Self::from_canonical(seq, self.labels.clone())
    }

    /// Sequence read in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        Self::from_canonical(seq, self.labels.clone())
    }

    /// Swaps the `a`/`b` names of loop `edge`.
    pub fn swap_ends(&self, edge: usize) -> Self {
        let seq = self
            .seq
            .iter()
            .map(|&h| {
                if h.edge == edge {
                    HalfEdgeLabel { end: h.end.other(), ..h }
                } else {
                    h
                }
            })
            .collect();
        Self::from_canonical(seq, self.labels.clone())
    }
}

impl fmt::Display for SignedRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, h) in self.seq.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedRotation {
    type Err = RotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_signed_rotation(s)
    }
}

/// Parses `"[-1a, 2a, 3a, 1b, ...]"`. Separators are commas and whitespace,
/// brackets are optional, and the caption style `-1^a` (also with a Unicode
/// minus) is accepted.
pub fn parse_signed_rotation(text: &str) -> Result<SignedRotation, RotationError> {
    let trimmed = text.trim_end();
    let mut body_start = 0;
    let mut body_end = trimmed.len();
    let lead = trimmed.len() - trimmed.trim_start().len();
    if trimmed[lead..].starts_with('[') {
        body_start = lead + 1;
        if !trimmed.ends_with(']') {
            return Err(RotationError::MalformedToken {
                token: "[".into(),
                offset: lead,
            });
        }
        body_end -= 1;
    }
    let body = &text[body_start..body_end];

    let mut seq = Vec::new();
    let mut start = None;
    let mut tokens = Vec::new();
    for (i, c) in body.char_indices() {
        if c == ',' || c.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s, &body[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, &body[s..]));
    }
    for (off, tok) in tokens {
        let offset = body_start + off;
        seq.push(parse_token(tok).ok_or_else(|| RotationError::MalformedToken {
            token: tok.to_string(),
            offset,
        })?);
    }
    SignedRotation::new(seq)
}

fn parse_token(tok: &str) -> Option<(u64, End, Sign)> {
    let (sign, rest) = if let Some(r) = tok.strip_prefix('-') {
        (Sign::Minus, r)
    } else if let Some(r) = tok.strip_prefix('\u{2212}') {
        (Sign::Minus, r)
    } else {
        (Sign::Plus, tok)
    };
    let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return None;
    }
    let edge: u64 = rest[..digits].parse().ok()?;
    if edge == 0 {
        return None;
    }
    let tail = &rest[digits..];
    let tail = tail.strip_prefix('^').unwrap_or(tail);
    let end = match tail {
        "a" => End::A,
        "b" => End::B,
        _ => return None,
    };
    Some((edge, end, sign))
}

/// A ribbon graph with a single vertex, held as one of its signed rotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bouquet {
    rotation: SignedRotation,
}

impl Bouquet {
    pub fn new(rotation: SignedRotation) -> Self {
        Bouquet { rotation }
    }

    pub fn empty() -> Self {
        Bouquet::new(SignedRotation::empty())
    }

    pub fn rotation(&self) -> &SignedRotation {
        &self.rotation
    }

    pub fn n(&self) -> usize {
        self.rotation.n()
    }

    fn check_index(&self, i: usize) -> Result<(), RotationError> {
        if (1..=self.n()).contains(&i) {
            Ok(())
        } else {
            Err(RotationError::IndexOutOfRange { index: i, n: self.n() })
        }
    }

    pub fn loop_orientability(&self, i: usize) -> Result<LoopKind, RotationError> {
        self.check_index(i)?;
        Ok(self.loop_kind(i))
    }

    pub(crate) fn loop_kind(&self, i: usize) -> LoopKind {
        let r = &self.rotation;
        if r.label(i, End::A).sign == r.label(i, End::B).sign {
            LoopKind::Orientable
        } else {
            LoopKind::NonOrientable
        }
    }

    pub fn interlacement(&self, i: usize, j: usize) -> Result<Interlacement, RotationError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i >= j {
            return Err(RotationError::RequiresIStrictlyLessThanJ { i, j });
        }
        Ok(self.interlace(i, j))
    }

    pub(crate) fn interlace(&self, i: usize, j: usize) -> Interlacement {
        let r = &self.rotation;
        let len = 2 * self.n();
        let base = r.position(i, End::A);
        let rel = |p: usize| (p + len - base) % len;
        let ib = rel(r.position(i, End::B));
        let ja = rel(r.position(j, End::A));
        let jb = rel(r.position(j, End::B));
        if ja < ib && ib < jb {
            Interlacement::Aligned
        } else if jb < ib && ib < ja {
            Interlacement::Reversed
        } else {
            Interlacement::NonInterlaced
        }
    }

    /// The bouquet induced by the loops in `x`, relabeled `1..=|x|` in
    /// increasing order. Original labels are carried through.
    pub fn restrict(&self, x: EdgeSubset) -> Bouquet {
        let r = &self.rotation;
        let mut map = vec![0usize; r.n()];
        let mut labels = Vec::with_capacity(x.len());
        for (k, i) in x.indices().filter(|&i| i <= r.n()).enumerate() {
            map[i - 1] = k + 1;
            labels.push(r.labels[i - 1]);
        }
        let seq = r
            .seq
            .iter()
            .filter(|h| x.contains(h.edge))
            .map(|h| HalfEdgeLabel { edge: map[h.edge - 1], ..*h })
            .collect();
        Bouquet::new(SignedRotation::from_canonical(seq, labels))
    }

    pub fn is_orientable(&self) -> bool {
        (1..=self.n()).all(|i| self.loop_kind(i) == LoopKind::Orientable)
    }

    pub fn non_orientable_loops(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(|&i| self.loop_kind(i) == LoopKind::NonOrientable)
    }
}

impl FromStr for Bouquet {
    type Err = RotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Bouquet::new(s.parse()?))
    }
}

impl fmt::Display for Bouquet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rotation.fmt(f)
    }
}
