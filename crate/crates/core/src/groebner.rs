//! Monomial-level Gröbner bookkeeping over PT morphisms out of a fixed tree.
//!
//! A monomial is a PT morphism with domain `T`. Monomials are totally ordered
//! by their Catalan words, which is compatible with post-composition, and
//! preordered by divisibility. Upward-closed sets of monomials are described
//! by finite generating sets.
//!
//! There is no reduction algorithm here, only the combinatorics of leading
//! terms and monomial ideals. The stabilization demo works inside a finite
//! truncation (codomains up to a vertex cap), so it illustrates ascending
//! chains settling down but proves nothing about infinite ones.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::catalan::{encode, CatalanWord};
use crate::embedding::{Category, OrderEmbedding};
use crate::order::{divides, OrderError};
use crate::tree::PlanarRootedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("monomials must be PT morphisms, got a {0} morphism")]
    NotPt(Category),
    #[error("monomial has domain {found}, expected {expected}")]
    BaseMismatch {
        expected: PlanarRootedTree,
        found: PlanarRootedTree,
    },
    #[error("zero coefficient on {0}")]
    ZeroCoefficient(String),
    #[error("element has no terms")]
    Empty,
    #[error("monomial codomain has {size} vertices, above the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// A PT morphism viewed as a monomial; ordered by its Catalan word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    morphism: OrderEmbedding,
    word: CatalanWord,
}

impl Monomial {
    pub fn new(morphism: OrderEmbedding) -> Result<Self, GroebnerError> {
        if morphism.category() != Category::PT {
            return Err(GroebnerError::NotPt(morphism.category()));
        }
        let word = encode(&morphism).map_err(|_| GroebnerError::NotPt(morphism.category()))?;
        Ok(Monomial { morphism, word })
    }

    pub fn morphism(&self) -> &OrderEmbedding {
        &self.morphism
    }

    pub fn word(&self) -> &CatalanWord {
        &self.word
    }

    pub fn base(&self) -> &PlanarRootedTree {
        self.morphism.domain()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .cmp(&other.word)
            .then_with(|| self.base().to_brackets().cmp(&other.base().to_brackets()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({})", self.morphism)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.morphism.fmt(f)
    }
}

fn check_base(base: &PlanarRootedTree, m: &Monomial) -> Result<(), GroebnerError> {
    if m.base() != base {
        return Err(GroebnerError::BaseMismatch {
            expected: base.clone(),
            found: m.base().clone(),
        });
    }
    Ok(())
}

/// Finite linear combination of monomials with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalElement {
    base: PlanarRootedTree,
    terms: BTreeMap<Monomial, Rational64>,
}

impl FormalElement {
    /// Repeated monomials have their coefficients added; terms that cancel
    /// are dropped. Explicit zero inputs are rejected.
    pub fn new(
        base: PlanarRootedTree,
        terms: impl IntoIterator<Item = (Monomial, Rational64)>,
    ) -> Result<Self, GroebnerError> {
        let mut map: BTreeMap<Monomial, Rational64> = BTreeMap::new();
        for (m, c) in terms {
            check_base(&base, &m)?;
            if c == Rational64::from_integer(0) {
                return Err(GroebnerError::ZeroCoefficient(m.to_string()));
            }
            *map.entry(m).or_insert_with(|| Rational64::from_integer(0)) += c;
        }
        map.retain(|_, c| *c != Rational64::from_integer(0));
        Ok(FormalElement { base, terms: map })
    }

    pub fn base(&self) -> &PlanarRootedTree {
        &self.base
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: Rational64) -> Result<Self, GroebnerError> {
        if factor == Rational64::from_integer(0) {
            return Err(GroebnerError::ZeroCoefficient("scale factor".into()));
        }
        Ok(FormalElement {
            base: self.base.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        })
    }
}

/// Largest monomial of `e` in the Catalan-word order.
pub fn leading_term(e: &FormalElement) -> Result<&Monomial, GroebnerError> {
    e.terms.keys().next_back().ok_or(GroebnerError::Empty)
}

/// Generators of an upward-closed set of monomials under divisibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    base: PlanarRootedTree,
    generators: Vec<Monomial>,
}

impl MonomialSet {
    pub fn new(base: PlanarRootedTree, generators: impl IntoIterator<Item = Monomial>) -> Result<Self, GroebnerError> {
        let mut gens = Vec::new();
        for m in generators {
            check_base(&base, &m)?;
            gens.push(m);
        }
        gens.sort();
        gens.dedup();
        Ok(MonomialSet { base, generators: gens })
    }

    pub fn empty(base: PlanarRootedTree) -> Self {
        MonomialSet {
            base,
            generators: Vec::new(),
        }
    }

    pub fn base(&self) -> &PlanarRootedTree {
        &self.base
    }

    /// Generators in increasing word order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn insert(&mut self, m: Monomial) -> Result<(), GroebnerError> {
        check_base(&self.base, &m)?;
        if let Err(pos) = self.generators.binary_search(&m) {
            self.generators.insert(pos, m);
        }
        Ok(())
    }
}

/// A generator of `s` dividing `m`, with the witness `h` (`m = h ∘ g`).
/// Generators are tried in word order.
pub fn member(s: &MonomialSet, m: &Monomial) -> Result<Option<(Monomial, OrderEmbedding)>, GroebnerError> {
    check_base(&s.base, m)?;
    for g in &s.generators {
        if let Some(h) = divides(g.morphism(), m.morphism())? {
            return Ok(Some((g.clone(), h)));
        }
    }
    Ok(None)
}

/// Drops every generator divisible by a different generator.
///
/// Divisibility between distinct PT morphisms only goes from smaller to larger
/// codomains, so no two generators divide each other and the result is
/// well defined.
pub fn minimize(s: &MonomialSet) -> MonomialSet {
    let gens = &s.generators;
    let kept = gens
        .iter()
        .enumerate()
        .filter(|(i, m)| {
            !gens.iter().enumerate().any(|(j, g)| {
                j != *i && divides(g.morphism(), m.morphism()).expect("generators share the base").is_some()
            })
        })
        .map(|(_, m)| m.clone())
        .collect();
    MonomialSet {
        base: s.base.clone(),
        generators: kept,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    /// Number of monomials consumed when the minimized generators reached
    /// their final value; 0 for an empty stream.
    pub index: usize,
    pub generators: MonomialSet,
}

/// Feeds monomials one at a time into a generating set, minimizing after
/// each step, and reports when the generators stop changing.
pub fn chain_stabilization_demo(
    base: &PlanarRootedTree,
    stream: &[Monomial],
    size_cap: usize,
) -> Result<Stabilization, GroebnerError> {
    let mut current = MonomialSet::empty(base.clone());
    let mut index = 0;
    for (k, m) in stream.iter().enumerate() {
        check_base(base, m)?;
        let size = m.morphism().codomain().n_vertices();
        if size > size_cap {
            return Err(GroebnerError::CapExceeded { size, cap: size_cap });
        }
        if member(&current, m)?.is_some() {
            continue;
        }
        let mut next = current.clone();
        next.insert(m.clone())?;
        let next = minimize(&next);
        if next != current {
            current = next;
            index = k + 1;
        }
    }
    Ok(Stabilization {
        index,
        generators: current,
    })
}

/// Every PT monomial out of `base` with codomain of at most `cap` vertices, by
/// codomain size, then bracket order, then word order.
pub fn monomials_up_to(base: &PlanarRootedTree, cap: usize) -> Vec<Monomial> {
    crate::order::PointedMorphismSet::all_up_to(base, cap)
        .members()
        .iter()
        .map(|f| Monomial::new(f.clone()).expect("enumerated PT morphism"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::compose;
    use crate::tree::VertexId;

    fn t(s: &str) -> PlanarRootedTree {
        PlanarRootedTree::parse_brackets(s).unwrap()
    }

    fn mono(dom: &str, cod: &str, map: &[usize]) -> Monomial {
        Monomial::new(
            OrderEmbedding::new(t(dom), t(cod), map.iter().copied().map(VertexId).collect(), Category::PT).unwrap(),
        )
        .unwrap()
    }

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn leading_term_examples() {
        let f = mono("()", "()()", &[0, 2]);
        let g = mono("()", "()()", &[0, 1]);
        let single = FormalElement::new(t("()"), [(f.clone(), r(5))]).unwrap();
        assert_eq!(leading_term(&single).unwrap(), &f);
        let e = FormalElement::new(t("()"), [(f.clone(), r(3)), (g.clone(), r(2))]).unwrap();
        assert_eq!(leading_term(&e).unwrap().word().to_string(), "(0 )0 ( )");
        assert_eq!(leading_term(&e.scale(Rational64::new(1, 7)).unwrap()).unwrap(), &g);
    }

    #[test]
    fn formal_element_errors() {
        let f = mono("()", "()()", &[0, 2]);
        assert!(matches!(
            FormalElement::new(t("()"), [(f.clone(), r(0))]),
            Err(GroebnerError::ZeroCoefficient(_))
        ));
        assert!(matches!(
            FormalElement::new(t(""), [(f.clone(), r(1))]),
            Err(GroebnerError::BaseMismatch { .. })
        ));
        let cancelled = FormalElement::new(t("()"), [(f.clone(), r(1)), (f, r(-1))]).unwrap();
        assert_eq!(leading_term(&cancelled), Err(GroebnerError::Empty));
    }

    #[test]
    fn member_examples() {
        let f = mono("()", "(())", &[0, 1]);
        let s = MonomialSet::new(t("()"), [f.clone()]).unwrap();
        let (g, h) = member(&s, &f).unwrap().unwrap();
        assert_eq!(g, f);
        assert!(h.is_identity());
        assert!(member(&s, &mono("()", "(())", &[0, 2])).unwrap().is_none());

        let s = MonomialSet::new(t(""), [mono("", "()", &[0])]).unwrap();
        for m in monomials_up_to(&t(""), 6).iter().filter(|m| m.morphism().codomain().n_vertices() >= 2) {
            assert!(member(&s, m).unwrap().is_some(), "{m}");
        }
        assert!(member(&s, &mono("", "", &[0])).unwrap().is_none());
    }

    #[test]
    fn minimize_examples() {
        let f = mono("()", "(())", &[0, 1]);
        let g = mono("()", "(())", &[0, 2]);
        let h = OrderEmbedding::new(t("(())"), t("(()())"), vec![VertexId(0), VertexId(1), VertexId(2)], Category::PT)
            .unwrap();
        let hf = Monomial::new(compose(f.morphism(), &h).unwrap()).unwrap();
        let single = MonomialSet::new(t("()"), [f.clone()]).unwrap();
        assert_eq!(minimize(&single), single);
        let pair = MonomialSet::new(t("()"), [f.clone(), hf]).unwrap();
        assert_eq!(minimize(&pair).generators(), &[f.clone()]);
        let anti = MonomialSet::new(t("()"), [f, g]).unwrap();
        assert_eq!(minimize(&anti), anti);
    }

    #[test]
    fn stabilization_examples() {
        let dot = t("");
        let m = mono("", "()", &[0]);
        let constant = vec![m.clone(); 4];
        assert_eq!(chain_stabilization_demo(&dot, &constant, 5).unwrap().index, 1);
        assert_eq!(chain_stabilization_demo(&dot, &[], 5).unwrap().index, 0);
        assert!(matches!(
            chain_stabilization_demo(&dot, &[m], 1),
            Err(GroebnerError::CapExceeded { size: 2, cap: 1 })
        ));
        // a bigger generator first, then one dividing it
        let big = mono("", "(())", &[0]);
        let small = mono("", "()", &[0]);
        let run = chain_stabilization_demo(&dot, &[big, small.clone()], 5).unwrap();
        assert_eq!(run.index, 2);
        assert_eq!(run.generators.generators(), &[small]);
    }
}
