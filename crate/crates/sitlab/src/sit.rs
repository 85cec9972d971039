//! Strong interval trees: the substitution decomposition of a permutation,
//! and its inverse.
//!
//! An interval of a permutation is a factor whose values form an integer
//! range. A strong interval overlaps no other interval; the strong intervals
//! are laminar and their containment order is the strong interval tree. Each
//! internal node carries the quotient of its children, which is increasing,
//! decreasing, or simple.
//!
//! ```
//! use sitlab::sit::{decompose, compose, tree_params};
//! let p = "4 5 1 2 3".parse().unwrap();
//! let t = decompose(&p);
//! assert_eq!(compose(&t).unwrap(), p);
//! assert_eq!(tree_params(&t).leaves, 5);
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::perm::Permutation;
use crate::simples::is_simple;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SitError {
    #[error("internal node with fewer than two children")]
    UnaryNode,
    #[error("adjacent linear nodes with the same sign")]
    LinearAdjacency,
    #[error("prime label size {0} does not match arity {1}")]
    PrimeArityMismatch(usize, usize),
    #[error("prime label is not a simple permutation: {0}")]
    PrimeNotSimple(String),
    #[error("prime node carries no explicit permutation")]
    UnlabeledPrime,
    #[error("malformed tree encoding: {0}")]
    Encoding(String),
}

/// The quotient of a prime node: either the explicit simple permutation, or
/// just its arity (skeleton trees produced by the random sampler above its
/// labeling cutoff).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeLabel {
    Perm(Permutation),
    Opaque(usize),
}

impl PrimeLabel {
    pub fn arity(&self) -> usize {
        match self {
            PrimeLabel::Perm(p) => p.size(),
            PrimeLabel::Opaque(m) => *m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Plus,
    Minus,
    Prime(PrimeLabel),
}

/// A strong interval tree. Leaves are unlabeled; sizes are leaf counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SITree {
    Leaf,
    Internal { label: Label, children: Vec<SITree> },
}

impl SITree {
    pub fn internal(label: Label, children: Vec<SITree>) -> Self {
        SITree::Internal { label, children }
    }

    /// Number of leaves (the size of the permutation it encodes).
    pub fn size(&self) -> usize {
        match self {
            SITree::Leaf => 1,
            SITree::Internal { children, .. } => children.iter().map(|c| c.size()).sum(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, SITree::Leaf)
    }

    /// Checks the structural invariants without composing.
    pub fn validate(&self) -> Result<(), SitError> {
        self.validate_inner(None)
    }

    fn validate_inner(&self, parent: Option<&Label>) -> Result<(), SitError> {
        let SITree::Internal { label, children } = self else {
            return Ok(());
        };
        if children.len() < 2 {
            return Err(SitError::UnaryNode);
        }
        match (parent, label) {
            (Some(Label::Plus), Label::Plus) | (Some(Label::Minus), Label::Minus) => {
                return Err(SitError::LinearAdjacency)
            }
            _ => {}
        }
        if let Label::Prime(pl) = label {
            if pl.arity() != children.len() {
                return Err(SitError::PrimeArityMismatch(pl.arity(), children.len()));
            }
            if let PrimeLabel::Perm(p) = pl {
                if !is_simple(p) {
                    return Err(SitError::PrimeNotSimple(p.to_string()));
                }
            }
        }
        for c in children {
            c.validate_inner(Some(label))?;
        }
        Ok(())
    }
}

/// All strong intervals of `p` as half-open-free inclusive position pairs
/// `(start, end)`, zero-based, sorted by start ascending and length
/// descending (preorder of the tree). Singletons and the full interval are
/// included.
pub fn strong_intervals(p: &Permutation) -> Vec<(usize, usize)> {
    let n = p.size();
    let w = p.word();
    if n == 0 {
        return Vec::new();
    }
    // All intervals, by running min/max over each start.
    let mut intervals: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        let mut lo = w[i];
        let mut hi = w[i];
        intervals.push((i, i));
        for j in i + 1..n {
            lo = lo.min(w[j]);
            hi = hi.max(w[j]);
            if (hi - lo) as usize == j - i {
                intervals.push((i, j));
            }
        }
    }
    // minstart[b]: least start of an interval ending at b.
    // maxend[a]: greatest end of an interval starting at a.
    let mut minstart: Vec<usize> = (0..n).collect();
    let mut maxend: Vec<usize> = (0..n).collect();
    for &(a, b) in &intervals {
        minstart[b] = minstart[b].min(a);
        maxend[a] = maxend[a].max(b);
    }
    let mut strong: Vec<(usize, usize)> = intervals
        .into_iter()
        .filter(|&(i, j)| {
            let left_cut = (i..j).any(|b| minstart[b] < i);
            let right_cut = (i + 1..=j).any(|a| maxend[a] > j);
            !(left_cut || right_cut)
        })
        .collect();
    strong.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    strong
}

/// The strong interval tree of `p`, with quotients attached to every
/// internal node.
pub fn decompose(p: &Permutation) -> SITree {
    let n = p.size();
    if n == 1 {
        return SITree::Leaf;
    }
    let strong = strong_intervals(p);
    // Preorder stack build over the laminar family.
    struct Frame {
        span: (usize, usize),
        children: Vec<(SITree, usize)>, // subtree with its minimum value
    }
    let w = p.word();
    let mut stack: Vec<Frame> = Vec::new();
    let mut finished: Option<(SITree, usize)> = None;
    for &(a, b) in &strong {
        while let Some(top) = stack.last() {
            if a >= top.span.0 && b <= top.span.1 && (a, b) != top.span {
                break;
            }
            let done = close_frame(stack.pop().unwrap());
            match stack.last_mut() {
                Some(parent) => parent.children.push(done),
                None => finished = Some(done),
            }
        }
        if a == b {
            let leaf = (SITree::Leaf, w[a] as usize);
            match stack.last_mut() {
                Some(parent) => parent.children.push(leaf),
                None => finished = Some(leaf),
            }
        } else {
            stack.push(Frame {
                span: (a, b),
                children: Vec::new(),
            });
        }
    }
    while let Some(f) = stack.pop() {
        let done = close_frame(f);
        match stack.last_mut() {
            Some(parent) => parent.children.push(done),
            None => finished = Some(done),
        }
    }
    return finished.expect("nonempty permutation has a root interval").0;

    fn close_frame(f: Frame) -> (SITree, usize) {
        let m = f.children.len();
        debug_assert!(m >= 2, "strong interval with a single proper part");
        let minval = f.children.iter().map(|c| c.1).min().unwrap();
        // Quotient: rank children by their value blocks.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| f.children[i].1);
        let mut q = vec![0u32; m];
        for (rank, &i) in order.iter().enumerate() {
            q[i] = rank as u32 + 1;
        }
        let quot = Permutation::new(q).expect("ranks form a permutation");
        let label = if quot.is_increasing() {
            Label::Plus
        } else if quot.is_decreasing() {
            Label::Minus
        } else {
            Label::Prime(PrimeLabel::Perm(quot))
        };
        let children = f.children.into_iter().map(|c| c.0).collect();
        (SITree::internal(label, children), minval)
    }
}

/// Inverse of [`decompose`]: inflates the tree back into a permutation.
/// Validates the structural invariants first; opaque prime labels cannot be
/// composed.
pub fn compose(t: &SITree) -> Result<Permutation, SitError> {
    t.validate()?;
    let word = compose_rel(t)?;
    Ok(Permutation::new(word).expect("inflation yields a permutation"))
}

fn compose_rel(t: &SITree) -> Result<Vec<u32>, SitError> {
    let SITree::Internal { label, children } = t else {
        return Ok(vec![1]);
    };
    let m = children.len();
    let quot: Vec<u32> = match label {
        Label::Plus => (1..=m as u32).collect(),
        Label::Minus => (1..=m as u32).rev().collect(),
        Label::Prime(PrimeLabel::Perm(p)) => p.word().to_vec(),
        Label::Prime(PrimeLabel::Opaque(_)) => return Err(SitError::UnlabeledPrime),
    };
    let parts: Vec<Vec<u32>> = children
        .iter()
        .map(compose_rel)
        .collect::<Result<_, _>>()?;
    // Child at position i receives the value block ranked quot[i].
    let mut offsets = vec![0u32; m];
    for i in 0..m {
        let rank = quot[i];
        let off: usize = (0..m)
            .filter(|&j| quot[j] < rank)
            .map(|j| parts[j].len())
            .sum();
        offsets[i] = off as u32;
    }
    let mut word = Vec::with_capacity(parts.iter().map(Vec::len).sum());
    for (part, off) in parts.iter().zip(&offsets) {
        word.extend(part.iter().map(|v| v + off));
    }
    Ok(word)
}

/// Shape statistics of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeParams {
    pub leaves: usize,
    /// All internal nodes (linear and prime).
    pub internal: usize,
    pub prime: usize,
    pub plus: usize,
    pub minus: usize,
    /// `arity[m]` = number of internal nodes with `m` children.
    pub arity: BTreeMap<usize, usize>,
    pub max_prime_arity: usize,
    /// Sum over all nodes (leaves included) of the leaf count of their
    /// subtree.
    pub subtree_size_sum: usize,
}

pub fn tree_params(t: &SITree) -> TreeParams {
    let mut p = TreeParams {
        leaves: 0,
        internal: 0,
        prime: 0,
        plus: 0,
        minus: 0,
        arity: BTreeMap::new(),
        max_prime_arity: 0,
        subtree_size_sum: 0,
    };
    walk(t, &mut p);
    return p;

    fn walk(t: &SITree, p: &mut TreeParams) -> usize {
        match t {
            SITree::Leaf => {
                p.leaves += 1;
                p.subtree_size_sum += 1;
                1
            }
            SITree::Internal { label, children } => {
                p.internal += 1;
                *p.arity.entry(children.len()).or_insert(0) += 1;
                match label {
                    Label::Plus => p.plus += 1,
                    Label::Minus => p.minus += 1,
                    Label::Prime(pl) => {
                        p.prime += 1;
                        p.max_prime_arity = p.max_prime_arity.max(pl.arity());
                    }
                }
                let size: usize = children.iter().map(|c| walk(c, p)).sum();
                p.subtree_size_sum += size;
                size
            }
        }
    }
}

/// Largest prime arity in the tree (0 when there are no prime nodes).
pub fn max_prime_arity(t: &SITree) -> usize {
    match t {
        SITree::Leaf => 0,
        SITree::Internal { label, children } => {
            let own = match label {
                Label::Prime(pl) => pl.arity(),
                _ => 0,
            };
            children
                .iter()
                .map(max_prime_arity)
                .fold(own, usize::max)
        }
    }
}

/// JSON encoding: `{"label": "leaf"}` for leaves, otherwise
/// `{"label": "plus" | "minus" | {"prime": [..]} , "children": [..]}`.
/// Opaque prime labels encode their arity as a bare number.
pub fn to_json(t: &SITree) -> Value {
    match t {
        SITree::Leaf => json!({"label": "leaf"}),
        SITree::Internal { label, children } => {
            let label = match label {
                Label::Plus => json!("plus"),
                Label::Minus => json!("minus"),
                Label::Prime(PrimeLabel::Perm(p)) => {
                    json!({ "prime": p.word().to_vec() })
                }
                Label::Prime(PrimeLabel::Opaque(m)) => json!({ "prime": m }),
            };
            let children: Vec<Value> = children.iter().map(to_json).collect();
            json!({"label": label, "children": children})
        }
    }
}

pub fn from_json(v: &Value) -> Result<SITree, SitError> {
    let obj = v
        .as_object()
        .ok_or_else(|| SitError::Encoding("expected object".into()))?;
    let label = obj
        .get("label")
        .ok_or_else(|| SitError::Encoding("missing label".into()))?;
    if label == "leaf" {
        return Ok(SITree::Leaf);
    }
    let parsed = if label == "plus" {
        Label::Plus
    } else if label == "minus" {
        Label::Minus
    } else if let Some(prime) = label.get("prime") {
        if let Some(m) = prime.as_u64() {
            Label::Prime(PrimeLabel::Opaque(m as usize))
        } else if let Some(arr) = prime.as_array() {
            let word: Vec<u32> = arr
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| SitError::Encoding("bad prime entry".into()))
                })
                .collect::<Result<_, _>>()?;
            let p = Permutation::new(word)
                .map_err(|e| SitError::Encoding(e.to_string()))?;
            Label::Prime(PrimeLabel::Perm(p))
        } else {
            return Err(SitError::Encoding("bad prime label".into()));
        }
    } else {
        return Err(SitError::Encoding(format!("unknown label {}", label)));
    };
    let children = obj
        .get("children")
        .and_then(Value::as_array)
        .ok_or_else(|| SitError::Encoding("missing children".into()))?
        .iter()
        .map(from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SITree::internal(parsed, children))
}

/// Graphviz rendering: prime nodes are filled boxes, linear nodes circles,
/// leaves points.
pub fn to_dot(t: &SITree) -> String {
    let mut out = String::from("digraph sit {\n  node [fontname=\"monospace\"];\n");
    let mut next = 0usize;
    emit(t, &mut out, &mut next);
    out.push_str("}\n");
    return out;

    fn emit(t: &SITree, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        match t {
            SITree::Leaf => {
                let _ = writeln!(out, "  n{} [shape=point];", id);
            }
            SITree::Internal { label, children } => {
                match label {
                    Label::Plus => {
                        let _ = writeln!(out, "  n{} [shape=circle, label=\"+\"];", id);
                    }
                    Label::Minus => {
                        let _ = writeln!(out, "  n{} [shape=circle, label=\"-\"];", id);
                    }
                    Label::Prime(pl) => {
                        let text = match pl {
                            PrimeLabel::Perm(p) => p.to_string(),
                            PrimeLabel::Opaque(m) => format!("prime({})", m),
                        };
                        let _ = writeln!(
                            out,
                            "  n{} [shape=box, style=filled, fillcolor=lightgray, label=\"{}\"];",
                            id, text
                        );
                    }
                }
                for c in children {
                    let cid = emit(c, out, next);
                    let _ = writeln!(out, "  n{} -> n{};", id, cid);
                }
            }
        }
        id
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn strong_intervals_examples() {
        // 4 5 1 2 3: strong intervals are the singletons, 45, 123, and all.
        let s = strong_intervals(&perm("4 5 1 2 3"));
        assert_eq!(
            s,
            vec![(0, 4), (0, 1), (0, 0), (1, 1), (2, 4), (2, 2), (3, 3), (4, 4)]
        );
        // a simple permutation has only trivial strong intervals
        let s = strong_intervals(&perm("2 4 1 3"));
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn decompose_known_shapes() {
        // increasing word: single plus node over leaves
        let t = decompose(&perm("1 2 3"));
        assert_eq!(
            t,
            SITree::internal(Label::Plus, vec![SITree::Leaf; 3])
        );
        // simple permutation: single prime node
        let t = decompose(&perm("2 4 1 3"));
        match &t {
            SITree::Internal { label: Label::Prime(PrimeLabel::Perm(q)), children } => {
                assert_eq!(q, &perm("2 4 1 3"));
                assert_eq!(children.len(), 4);
            }
            other => panic!("expected prime root, got {:?}", other),
        }
        // 4 5 1 2 3: minus root with a plus pair and a plus triple
        let t = decompose(&perm("4 5 1 2 3"));
        assert_eq!(
            t,
            SITree::internal(
                Label::Minus,
                vec![
                    SITree::internal(Label::Plus, vec![SITree::Leaf; 2]),
                    SITree::internal(Label::Plus, vec![SITree::Leaf; 3]),
                ]
            )
        );
    }

    #[test]
    fn compose_inverts_decompose_exhaustively() {
        for n in 1..=7 {
            let mut p = Permutation::identity(n);
            loop {
                let t = decompose(&p);
                assert!(t.validate().is_ok(), "{}", p);
                assert_eq!(compose(&t).unwrap(), p, "round trip failed for {}", p);
                if !p.next_lex() {
                    break;
                }
            }
        }
    }

    #[test]
    fn invariant_violations_rejected() {
        let unary = SITree::internal(Label::Plus, vec![SITree::Leaf]);
        assert_eq!(compose(&unary), Err(SitError::UnaryNode));

        let adj = SITree::internal(
            Label::Plus,
            vec![
                SITree::internal(Label::Plus, vec![SITree::Leaf; 2]),
                SITree::Leaf,
            ],
        );
        assert_eq!(compose(&adj), Err(SitError::LinearAdjacency));

        let mismatch = SITree::internal(
            Label::Prime(PrimeLabel::Perm(perm("2 4 1 3"))),
            vec![SITree::Leaf; 3],
        );
        assert_eq!(compose(&mismatch), Err(SitError::PrimeArityMismatch(4, 3)));

        let not_simple = SITree::internal(
            Label::Prime(PrimeLabel::Perm(perm("1 2 3 4"))),
            vec![SITree::Leaf; 4],
        );
        assert!(matches!(compose(&not_simple), Err(SitError::PrimeNotSimple(_))));

        let opaque = SITree::internal(
            Label::Prime(PrimeLabel::Opaque(4)),
            vec![SITree::Leaf; 4],
        );
        assert_eq!(compose(&opaque), Err(SitError::UnlabeledPrime));

        let mixed = SITree::internal(
            Label::Plus,
            vec![
                SITree::internal(Label::Minus, vec![SITree::Leaf; 2]),
                SITree::Leaf,
            ],
        );
        assert_eq!(compose(&mixed).unwrap(), perm("2 1 3"));
    }

    #[test]
    fn params_and_json_round_trip() {
        let p = perm("4 5 1 2 3");
        let t = decompose(&p);
        let params = tree_params(&t);
        assert_eq!(params.leaves, 5);
        assert_eq!(params.internal, 3);
        assert_eq!(params.prime, 0);
        assert_eq!(params.plus, 2);
        assert_eq!(params.minus, 1);
        assert_eq!(params.arity, BTreeMap::from([(2, 2), (3, 1)]));
        // subtrees: 5 leaves (1 each) + pair (2) + triple (3) + root (5)
        assert_eq!(params.subtree_size_sum, 15);
        assert_eq!(max_prime_arity(&t), 0);
        assert_eq!(max_prime_arity(&decompose(&perm("3 1 4 2"))), 4);

        let v = to_json(&t);
        assert_eq!(from_json(&v).unwrap(), t);
        let opaque = SITree::internal(Label::Prime(PrimeLabel::Opaque(5)), vec![SITree::Leaf; 5]);
        assert_eq!(from_json(&to_json(&opaque)).unwrap(), opaque);
    }

    #[test]
    fn dot_output_mentions_all_nodes() {
        let t = decompose(&perm("3 1 4 2"));
        let dot = to_dot(&t);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("3 1 4 2"));
        assert_eq!(dot.matches("shape=point").count(), 4);
    }
}
