//! The divisibility quasi-order on PT morphisms out of a fixed tree, plus the
//! finite tools used to probe it: Higman's word order, good-pair search and
//! antichain checks.
//!
//! Well-quasi-ordering is an infinitary property. Nothing here claims to
//! verify it; the engine only produces finite certificates.

use std::fmt;

use thiserror::Error;

use crate::embedding::{compose, first_pinned, Category, MorphismError, OrderEmbedding};
use crate::tree::{PlanarRootedTree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("morphisms have different domains: {0} and {1}")]
    DomainMismatch(PlanarRootedTree, PlanarRootedTree),
    #[error("divisibility is defined on PT morphisms, got a {0} morphism")]
    NotPt(Category),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

fn check_pt(f: &OrderEmbedding) -> Result<(), OrderError> {
    if f.category() != Category::PT {
        return Err(OrderError::NotPt(f.category()));
    }
    Ok(())
}

/// Looks for `h` in PT with `g = h ∘ f`.
///
/// The search runs over maps out of `codomain(f)` with the image of `f`
/// pinned to the values `g` demands, so only genuine witnesses are explored.
pub fn divides(f: &OrderEmbedding, g: &OrderEmbedding) -> Result<Option<OrderEmbedding>, OrderError> {
    check_pt(f)?;
    check_pt(g)?;
    if f.domain() != g.domain() {
        return Err(OrderError::DomainMismatch(f.domain().clone(), g.domain().clone()));
    }
    let source = f.codomain();
    let target = g.codomain();
    if source.n_vertices() > target.n_vertices() {
        return Ok(None);
    }
    let mut pins: Vec<Option<VertexId>> = vec![None; source.n_vertices()];
    for v in f.domain().vertices() {
        pins[f.image(v).0] = Some(g.image(v));
    }
    Ok(first_pinned(source, target, Category::PT, &pins))
}

/// Higman's order on words: `a ≤ b` iff `a` embeds into `b` along a strictly
/// increasing position map with letterwise `leq`.
///
/// Greedy earliest matching is exact here: matching a letter as early as
/// possible never removes options for the letters after it.
pub fn higman_leq<T, F>(a: &[T], b: &[T], mut leq: F) -> bool
where
    F: FnMut(&T, &T) -> bool,
{
    let mut rest = b.iter();
    a.iter().all(|x| rest.any(|y| leq(x, y)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodPair {
    pub i: usize,
    pub j: usize,
    pub witness: OrderEmbedding,
}

fn common_domain<'a>(
    seq: impl IntoIterator<Item = &'a OrderEmbedding>,
) -> Result<Option<PlanarRootedTree>, OrderError> {
    let mut base: Option<PlanarRootedTree> = None;
    for f in seq {
        check_pt(f)?;
        match &base {
            None => base = Some(f.domain().clone()),
            Some(b) if b != f.domain() => {
                return Err(OrderError::DomainMismatch(b.clone(), f.domain().clone()))
            }
            Some(_) => {}
        }
    }
    Ok(base)
}

/// Lexicographically least `(i, j)`, `i < j`, with `seq[i]` dividing `seq[j]`.
/// `None` means the finite sequence is bad.
pub fn good_pair_search(seq: &[OrderEmbedding]) -> Result<Option<GoodPair>, OrderError> {
    common_domain(seq)?;
    for (i, f) in seq.iter().enumerate() {
        for (j, g) in seq.iter().enumerate().skip(i + 1) {
            if let Some(witness) = divides(f, g)? {
                return Ok(Some(GoodPair { i, j, witness }));
            }
        }
    }
    Ok(None)
}

/// PT morphisms sharing the domain `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedMorphismSet {
    base: PlanarRootedTree,
    members: Vec<OrderEmbedding>,
}

impl PointedMorphismSet {
    pub fn new(base: PlanarRootedTree, members: Vec<OrderEmbedding>) -> Result<Self, OrderError> {
        for f in &members {
            check_pt(f)?;
            if f.domain() != &base {
                return Err(OrderError::DomainMismatch(base, f.domain().clone()));
            }
        }
        Ok(PointedMorphismSet { base, members })
    }

    /// All PT morphisms out of `base` whose codomain has at most `max_size`
    /// vertices, by codomain size, then codomain bracket order, then word order.
    pub fn all_up_to(base: &PlanarRootedTree, max_size: usize) -> Self {
        let members = crate::tree::enumerate_planar_trees_up_to(base.n_vertices(), max_size)
            .iter()
            .flat_map(|u| crate::embedding::enumerate_morphisms(base, u, Category::PT))
            .collect();
        PointedMorphismSet {
            base: base.clone(),
            members,
        }
    }

    pub fn base(&self) -> &PlanarRootedTree {
        &self.base
    }

    pub fn members(&self) -> &[OrderEmbedding] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// True when no two distinct members are comparable under divisibility.
pub fn antichain_check(set: &PointedMorphismSet) -> bool {
    let m = set.members();
    for (i, f) in m.iter().enumerate() {
        for g in &m[i + 1..] {
            if f == g {
                continue;
            }
            let forward = divides(f, g).expect("members share a PT domain");
            let backward = divides(g, f).expect("members share a PT domain");
            if forward.is_some() || backward.is_some() {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditViolation {
    NotReflexive { index: usize },
    NotTransitive { f: usize, g: usize, k: usize },
    /// `h₂ ∘ h₁` exists but does not witness `f ≤ k`.
    BadComposedWitness { f: usize, g: usize, k: usize },
}

impl fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditViolation::NotReflexive { index } => write!(f, "REFLEXIVITY {index}"),
            AuditViolation::NotTransitive { f: a, g, k } => write!(f, "TRANSITIVITY {a} {g} {k}"),
            AuditViolation::BadComposedWitness { f: a, g, k } => write!(f, "WITNESS {a} {g} {k}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub members: usize,
    pub comparable_pairs: usize,
    pub triples_checked: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks reflexivity and transitivity of divisibility on the set.
///
/// For every chain `f ≤ g ≤ k` with witnesses `h₁`, `h₂`, the engine must also
/// report `f ≤ k`, and `h₂ ∘ h₁` must itself be a witness.
pub fn quasi_order_audit(set: &PointedMorphismSet) -> AuditReport {
    let m = set.members();
    let n = m.len();
    let mut report = AuditReport {
        members: n,
        ..AuditReport::default()
    };
    let witness: Vec<Vec<Option<OrderEmbedding>>> = m
        .iter()
        .map(|f| m.iter().map(|g| divides(f, g).expect("members share a PT domain")).collect())
        .collect();
    for (i, row) in witness.iter().enumerate() {
        if row[i].is_none() {
            report.violations.push(AuditViolation::NotReflexive { index: i });
        }
        report.comparable_pairs += row.iter().filter(|w| w.is_some()).count();
    }
    for a in 0..n {
        for b in 0..n {
            let Some(h1) = &witness[a][b] else { continue };
            for c in 0..n {
                let Some(h2) = &witness[b][c] else { continue };
                report.triples_checked += 1;
                if witness[a][c].is_none() {
                    report.violations.push(AuditViolation::NotTransitive { f: a, g: b, k: c });
                }
                let composed_ok = compose(h1, h2)
                    .and_then(|h| compose(&m[a], &h))
                    .map(|hf| hf == m[c])
                    .unwrap_or(false);
                if !composed_ok {
                    report.violations.push(AuditViolation::BadComposedWitness { f: a, g: b, k: c });
                }
            }
        }
    }
    report
}

/// Result line of a bad-sequence probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeLine {
    Good { i: usize, j: usize },
    Bad,
    Antichain(usize),
}

impl fmt::Display for ProbeLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeLine::Good { i, j } => write!(f, "GOOD {i} {j}"),
            ProbeLine::Bad => f.write_str("BAD"),
            ProbeLine::Antichain(k) => write!(f, "ANTICHAIN {k}"),
        }
    }
}

/// Indices of the members not divisible by any other distinct member.
/// These always form an antichain.
pub fn minimal_members(set: &PointedMorphismSet) -> Vec<usize> {
    let m = set.members();
    (0..m.len())
        .filter(|&i| {
            !m.iter().enumerate().any(|(j, g)| {
                j != i && g != &m[i] && divides(g, &m[i]).expect("members share a PT domain").is_some()
            })
        })
        .collect()
}
