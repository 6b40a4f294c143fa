//! Catalan words of PT morphisms.
//!
//! For `φ: T → U`, every edge on the image path of a domain edge is marked
//! with the depth (in `T`) of that edge's lower endpoint. A depth-first walk of
//! `U` then records each edge twice, once going up and once coming down,
//! together with its mark. Over the single-vertex domain this is the usual
//! bracket encoding of `U`.
//!
//! Text syntax: `(` / `)` for up / down, marked tokens carry the decimal mark
//! with no space (`(0`, `)12`), tokens separated by single spaces.
//!
//! Words are ordered by their bracket row first (length, then lexicographic
//! with `)` before `(`), then by their mark row lexicographically with the
//! blank mark below every number. Because marks are bounded by the domain
//! size, the order has a finite alphabet at each length and is a well-order on
//! the words of a fixed domain.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::embedding::{is_morphism, Category, OrderEmbedding};
use crate::tree::{PlanarRootedTree, VertexId};

/// Travel direction along an edge. `Down` sorts before `Up`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CatalanToken {
    pub direction: Direction,
    pub label: Option<usize>,
}

impl CatalanToken {
    pub fn up(label: Option<usize>) -> Self {
        CatalanToken {
            direction: Direction::Up,
            label,
        }
    }

    pub fn down(label: Option<usize>) -> Self {
        CatalanToken {
            direction: Direction::Down,
            label,
        }
    }
}

impl fmt::Display for CatalanToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.direction {
            Direction::Up => "(",
            Direction::Down => ")",
        })?;
        if let Some(label) = self.label {
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("morphism is not a PT morphism")]
    NotPt,
    #[error("codomain edge above vertex {vertex} would carry marks {first} and {second}")]
    ConflictingLabel {
        vertex: usize,
        first: usize,
        second: usize,
    },
    #[error("malformed Catalan word at token {index}: {reason}")]
    Malformed { index: usize, reason: String },
}

fn malformed(index: usize, reason: impl Into<String>) -> CodecError {
    CodecError::Malformed {
        index,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CatalanWord {
    tokens: Vec<CatalanToken>,
}

impl CatalanWord {
    pub fn new(tokens: Vec<CatalanToken>) -> Self {
        CatalanWord { tokens }
    }

    pub fn tokens(&self) -> &[CatalanToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Bracket row.
    pub fn brackets(&self) -> impl Iterator<Item = Direction> + '_ {
        self.tokens.iter().map(|t| t.direction)
    }

    /// Mark row; `None` is the blank mark.
    pub fn labels(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.tokens.iter().map(|t| t.label)
    }

    pub fn bracket_string(&self) -> String {
        self.brackets()
            .map(|d| if d == Direction::Up { '(' } else { ')' })
            .collect()
    }
}

impl fmt::Display for CatalanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, token) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{token}")?;
        }
        Ok(())
    }
}

impl FromStr for CatalanWord {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = s
            .split_whitespace()
            .enumerate()
            .map(|(index, raw)| {
                let direction = match raw.as_bytes()[0] {
                    b'(' => Direction::Up,
                    b')' => Direction::Down,
                    _ => return Err(malformed(index, format!("token {raw:?} must start with a bracket"))),
                };
                let rest = &raw[1..];
                let label = if rest.is_empty() {
                    None
                } else {
                    Some(
                        rest.parse::<usize>()
                            .map_err(|_| malformed(index, format!("bad mark in {raw:?}")))?,
                    )
                };
                Ok(CatalanToken { direction, label })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CatalanWord { tokens })
    }
}

impl Ord for CatalanWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.brackets().cmp(other.brackets()))
            .then_with(|| self.labels().cmp(other.labels()))
    }
}

impl PartialOrd for CatalanWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn compare(w1: &CatalanWord, w2: &CatalanWord) -> Ordering {
    w1.cmp(w2)
}

/// Mark carried by the edge from each codomain vertex down to its parent.
fn edge_labels(f: &OrderEmbedding) -> Result<Vec<Option<usize>>, CodecError> {
    let domain = f.domain();
    let codomain = f.codomain();
    let mut labels = vec![None; codomain.n_vertices()];
    for x in domain.vertices().skip(1) {
        let p = domain.parent(x).expect("non-root vertex has a parent");
        let mark = domain.depth(p);
        let stop = f.image(p);
        let mut c = f.image(x);
        while c != stop {
            match labels[c.0] {
                Some(existing) if existing != mark => {
                    return Err(CodecError::ConflictingLabel {
                        vertex: c.0,
                        first: existing,
                        second: mark,
                    })
                }
                _ => labels[c.0] = Some(mark),
            }
            c = codomain.parent(c).expect("image path reaches the parent image");
        }
    }
    Ok(labels)
}

fn walk(codomain: &PlanarRootedTree, labels: &[Option<usize>]) -> CatalanWord {
    let n = codomain.n_vertices();
    let mut tokens = Vec::with_capacity(2 * (n - 1));
    let mut open = vec![VertexId::ROOT];
    for v in codomain.vertices().skip(1) {
        let p = codomain.parent(v).unwrap();
        while *open.last().unwrap() != p {
            let done = open.pop().unwrap();
            tokens.push(CatalanToken::down(labels[done.0]));
        }
        open.push(v);
        tokens.push(CatalanToken::up(labels[v.0]));
    }
    while open.len() > 1 {
        let done = open.pop().unwrap();
        tokens.push(CatalanToken::down(labels[done.0]));
    }
    CatalanWord { tokens }
}

/// Catalan word of a PT morphism.
///
/// Two sibling domain edges may share the bottom of their image paths; they
/// give those edges the same mark. A conflicting mark can only come from an
/// invalid map and is reported as an error.
pub fn encode(f: &OrderEmbedding) -> Result<CatalanWord, CodecError> {
    if f.category() != Category::PT || !is_morphism(f.domain(), f.codomain(), f.map(), Category::PT) {
        return Err(CodecError::NotPt);
    }
    let labels = edge_labels(f)?;
    Ok(walk(f.codomain(), &labels))
}

/// Rebuilds the PT morphism a word came from.
///
/// The bracket row gives the codomain. A codomain vertex is the image of a
/// domain vertex exactly when it is the root, or its edge is marked and no
/// marked edge above it continues with the same mark (a mark run ends there).
/// The domain is the tree induced on those images. The result is re-encoded
/// and must reproduce the input word.
pub fn decode(w: &CatalanWord) -> Result<OrderEmbedding, CodecError> {
    let tokens = w.tokens();
    let mut parent = vec![None];
    let mut labels: Vec<Option<usize>> = vec![None];
    let mut stack = vec![VertexId::ROOT];
    for (index, token) in tokens.iter().enumerate() {
        match token.direction {
            Direction::Up => {
                let v = VertexId(parent.len());
                parent.push(Some(*stack.last().unwrap()));
                labels.push(token.label);
                stack.push(v);
            }
            Direction::Down => {
                if stack.len() == 1 {
                    return Err(malformed(index, "closing bracket without an open edge"));
                }
                let v = stack.pop().unwrap();
                if labels[v.0] != token.label {
                    return Err(malformed(index, "down mark differs from the matching up mark"));
                }
            }
        }
    }
    if stack.len() != 1 {
        return Err(malformed(tokens.len(), "unclosed brackets"));
    }
    let codomain_lists = {
        let mut lists = vec![Vec::new(); parent.len()];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                lists[p.0].push(v);
            }
        }
        lists
    };
    let (codomain, relabel) =
        PlanarRootedTree::from_child_lists(&codomain_lists, 0).expect("parsed brackets form a tree");
    debug_assert!(relabel.iter().enumerate().all(|(i, v)| v.0 == i));

    let is_image = |c: VertexId| -> bool {
        if c == VertexId::ROOT {
            return true;
        }
        match labels[c.0] {
            None => false,
            Some(mark) => !codomain
                .children(c)
                .iter()
                .any(|k| labels[k.0] == Some(mark)),
        }
    };
    let images: Vec<VertexId> = codomain.vertices().filter(|&c| is_image(c)).collect();
    let mut position = vec![usize::MAX; codomain.n_vertices()];
    for (i, c) in images.iter().enumerate() {
        position[c.0] = i;
    }
    let mut domain_lists = vec![Vec::new(); images.len()];
    for (i, &c) in images.iter().enumerate().skip(1) {
        let mut below = codomain.parent(c).unwrap();
        while position[below.0] == usize::MAX {
            below = codomain.parent(below).unwrap();
        }
        domain_lists[position[below.0]].push(i);
    }
    let (domain, domain_relabel) =
        PlanarRootedTree::from_child_lists(&domain_lists, 0).expect("induced subtree is a tree");
    debug_assert!(domain_relabel.iter().enumerate().all(|(i, v)| v.0 == i));

    if !is_morphism(&domain, &codomain, &images, Category::PT) {
        return Err(malformed(0, "marks do not describe a PT morphism"));
    }
    let f = OrderEmbedding::new_unchecked(domain, codomain, images, Category::PT);
    let again = encode(&f).map_err(|e| malformed(0, e.to_string()))?;
    if let Some(index) = again.tokens().iter().zip(tokens).position(|(a, b)| a != b) {
        return Err(malformed(index, format!("expected {}", again.tokens()[index])));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarRootedTree {
        PlanarRootedTree::parse_brackets(s).unwrap()
    }

    fn w(s: &str) -> CatalanWord {
        s.parse().unwrap()
    }

    fn pt(dom: &str, cod: &str, map: &[usize]) -> OrderEmbedding {
        OrderEmbedding::new(t(dom), t(cod), map.iter().copied().map(VertexId).collect(), Category::PT).unwrap()
    }

    const PAPER_WORD: &str = "(0 (0 (1 (1 ( ) ( ) )1 )1 ( ) )0 (0 ( ( ) ( ) ( ) ) )0 )0";

    #[test]
    fn encode_small_cases() {
        let dot = OrderEmbedding::identity(&PlanarRootedTree::single_vertex(), Category::PT);
        assert!(encode(&dot).unwrap().is_empty());
        assert_eq!(encode(&pt("()", "()", &[0, 1])).unwrap().to_string(), "(0 )0");
        assert_eq!(encode(&pt("()", "()()", &[0, 1])).unwrap().to_string(), "(0 )0 ( )");
        assert_eq!(encode(&pt("()", "()()", &[0, 2])).unwrap().to_string(), "( ) (0 )0");
    }

    #[test]
    fn encode_worked_example() {
        let f = pt("(())()", "((((()()))())((()()())))", &[0, 2, 4, 8]);
        assert_eq!(encode(&f).unwrap().to_string(), PAPER_WORD);
        assert_eq!(decode(&w(PAPER_WORD)).unwrap(), f);
    }

    #[test]
    fn encode_rejects_non_pt() {
        let f = pt("()", "()()", &[0, 1]).with_category(Category::FPT).unwrap();
        assert_eq!(encode(&f), Err(CodecError::NotPt));
    }

    #[test]
    fn decode_examples() {
        assert!(decode(&w("")).unwrap().is_identity());
        assert_eq!(decode(&w("(0 )0 ( )")).unwrap(), pt("()", "()()", &[0, 1]));
        assert_eq!(decode(&w("( ) (0 )0")).unwrap(), pt("()", "()()", &[0, 2]));
    }

    #[test]
    fn decode_errors_point_at_tokens() {
        let err = |s: &str| match decode(&w(s)) {
            Err(CodecError::Malformed { index, .. }) => index,
            other => panic!("expected malformed, got {other:?}"),
        };
        assert_eq!(err(")"), 0);
        assert_eq!(err("( ( )"), 3);
        assert_eq!(err("(0 )1"), 1);
        // marks must equal the depth of the image of the parent
        assert_eq!(err("(3 )3"), 0);
        // a marked edge must hang off the marked part
        assert_eq!(err("( (0 )0 )"), 0);
        assert!("(x".parse::<CatalanWord>().is_err());
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(compare(&w("( ) (0 )0"), &w("( ) (0 )0")), Ordering::Equal);
        assert_eq!(compare(&w("( ) (0 )0"), &w("(0 )0 ( )")), Ordering::Less);
        assert_eq!(compare(&w("(5 )5"), &w("( ( ) )")), Ordering::Less);
        assert_eq!(compare(&w("( ( ) )"), &w("( ) ( )")), Ordering::Greater);
    }

    #[test]
    fn text_roundtrip() {
        let word = w(PAPER_WORD);
        assert_eq!(word.to_string(), PAPER_WORD);
        assert_eq!(word.len(), 24);
        assert_eq!(word.bracket_string(), "((((()()))())((()()())))");
    }
}
