//! Order embeddings between trees, for the four categories FT, FPT, T and PT.
//!
//! An order embedding is an injective vertex map that both preserves and
//! reflects the tree order. FPT and PT additionally require the map to be
//! strictly increasing on preorder indices (the depth-first order); T and PT
//! require the root to go to the root.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use thiserror::Error;

use crate::catalan;
use crate::tree::{PlanarRootedTree, TreeError, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    /// Rooted trees, order embeddings.
    FT,
    /// Planar rooted trees, order embeddings preserving the depth-first order.
    FPT,
    /// Rooted trees, root-preserving order embeddings.
    T,
    /// Planar rooted trees, root- and depth-first-preserving order embeddings.
    PT,
}

impl Category {
    pub const ALL: [Category; 4] = [Category::FT, Category::FPT, Category::T, Category::PT];

    pub fn preserves_root(self) -> bool {
        matches!(self, Category::T | Category::PT)
    }

    pub fn preserves_dfs(self) -> bool {
        matches!(self, Category::FPT | Category::PT)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::FT => "FT",
            Category::FPT => "FPT",
            Category::T => "T",
            Category::PT => "PT",
        })
    }
}

impl FromStr for Category {
    type Err = MorphismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ft" => Ok(Category::FT),
            "fpt" => Ok(Category::FPT),
            "t" => Ok(Category::T),
            "pt" => Ok(Category::PT),
            _ => Err(MorphismError::Parse(format!("unknown category {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map has {found} entries but the domain has {expected} vertices")]
    WrongArity { expected: usize, found: usize },
    #[error("map is not a morphism of {0}")]
    Invalid(Category),
    #[error("codomain of the first morphism is not the domain of the second")]
    TreeMismatch,
    #[error("cannot compose a {0} morphism with a {1} morphism")]
    CategoryMismatch(Category, Category),
    #[error("malformed morphism: {0}")]
    Parse(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// A morphism in one of the four tree categories.
///
/// `map[k]` is the codomain vertex that domain vertex `k` (preorder index) is
/// sent to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderEmbedding {
    domain: PlanarRootedTree,
    codomain: PlanarRootedTree,
    map: Vec<VertexId>,
    category: Category,
}

impl OrderEmbedding {
    pub fn new(
        domain: PlanarRootedTree,
        codomain: PlanarRootedTree,
        map: Vec<VertexId>,
        category: Category,
    ) -> Result<Self, MorphismError> {
        if map.len() != domain.n_vertices() {
            return Err(MorphismError::WrongArity {
                expected: domain.n_vertices(),
                found: map.len(),
            });
        }
        if !is_morphism(&domain, &codomain, &map, category) {
            return Err(MorphismError::Invalid(category));
        }
        Ok(Self::new_unchecked(domain, codomain, map, category))
    }

    pub(crate) fn new_unchecked(
        domain: PlanarRootedTree,
        codomain: PlanarRootedTree,
        map: Vec<VertexId>,
        category: Category,
    ) -> Self {
        debug_assert!(is_morphism(&domain, &codomain, &map, category));
        OrderEmbedding {
            domain,
            codomain,
            map,
            category,
        }
    }

    pub fn identity(t: &PlanarRootedTree, category: Category) -> Self {
        Self::new_unchecked(t.clone(), t.clone(), t.vertices().collect(), category)
    }

    pub fn domain(&self) -> &PlanarRootedTree {
        &self.domain
    }

    pub fn codomain(&self) -> &PlanarRootedTree {
        &self.codomain
    }

    pub fn map(&self) -> &[VertexId] {
        &self.map
    }

    pub fn category(&self) -> Category {
        self.category
    }

    #[inline]
    pub fn image(&self, v: VertexId) -> VertexId {
        self.map[v.0]
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.map.iter().enumerate().all(|(i, v)| v.0 == i)
    }

    /// Re-tags the morphism, checking that it is valid in the new category.
    pub fn with_category(self, category: Category) -> Result<Self, MorphismError> {
        if !is_morphism(&self.domain, &self.codomain, &self.map, category) {
            return Err(MorphismError::Invalid(category));
        }
        Ok(OrderEmbedding { category, ..self })
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &OrderEmbedding) -> Result<OrderEmbedding, MorphismError> {
        compose(self, then)
    }

    /// Sends the root to the codomain root, keeping every other vertex fixed.
    ///
    /// Everything else in the image already lies above the old root image,
    /// and the codomain root lies below every vertex, so the result is a PT
    /// morphism whenever the input is an FPT morphism.
    pub fn promote_root(&self) -> Result<OrderEmbedding, MorphismError> {
        if !self.category.preserves_dfs() {
            return Err(MorphismError::Invalid(Category::FPT));
        }
        let mut map = self.map.clone();
        map[0] = VertexId::ROOT;
        debug_assert!(is_morphism(&self.domain, &self.codomain, &map, Category::PT));
        Ok(Self::new_unchecked(
            self.domain.clone(),
            self.codomain.clone(),
            map,
            Category::PT,
        ))
    }

    /// Parses `<domain> -> <codomain> : [i0,i1,...]`.
    pub fn parse(s: &str, category: Category) -> Result<Self, MorphismError> {
        let (trees, map) = s
            .split_once(':')
            .ok_or_else(|| MorphismError::Parse(format!("missing ':' in {s:?}")))?;
        let (dom, cod) = trees
            .split_once("->")
            .ok_or_else(|| MorphismError::Parse(format!("missing '->' in {s:?}")))?;
        let domain = PlanarRootedTree::parse_brackets(dom.trim())?;
        let codomain = PlanarRootedTree::parse_brackets(cod.trim())?;
        let map = map.trim();
        let inner = map
            .strip_prefix('[')
            .and_then(|m| m.strip_suffix(']'))
            .ok_or_else(|| MorphismError::Parse(format!("map must be bracketed: {map:?}")))?;
        let mut entries = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() && inner.trim().is_empty() {
                break;
            }
            let idx: usize = part
                .parse()
                .map_err(|_| MorphismError::Parse(format!("bad vertex index {part:?}")))?;
            codomain.check_vertex(VertexId(idx))?;
            entries.push(VertexId(idx));
        }
        Self::new(domain, codomain, entries, category)
    }
}

impl fmt::Display for OrderEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : [", self.domain, self.codomain)?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v.0)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for OrderEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<{}>", self.category, self)
    }
}

/// Checks every defining condition of a morphism in `category`.
pub fn is_morphism(
    domain: &PlanarRootedTree,
    codomain: &PlanarRootedTree,
    map: &[VertexId],
    category: Category,
) -> bool {
    if map.len() != domain.n_vertices() || map.iter().any(|&v| !codomain.contains(v)) {
        return false;
    }
    if category.preserves_root() && map[0] != VertexId::ROOT {
        return false;
    }
    if category.preserves_dfs() && map.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    for v in domain.vertices() {
        for w in domain.vertices() {
            if v != w && map[v.0] == map[w.0] {
                return false;
            }
            if domain.leq(v, w) != codomain.leq(map[v.0], map[w.0]) {
                return false;
            }
        }
    }
    true
}

/// Backtracking search over domain vertices in preorder.
///
/// `pins[k] = Some(c)` forces domain vertex `k` onto `c`. The sink sees each
/// complete map once, in lexicographic order.
fn search<F>(
    domain: &PlanarRootedTree,
    codomain: &PlanarRootedTree,
    category: Category,
    pins: &[Option<VertexId>],
    mut sink: F,
) where
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    fn extend<F>(
        k: usize,
        domain: &PlanarRootedTree,
        codomain: &PlanarRootedTree,
        category: Category,
        pins: &[Option<VertexId>],
        map: &mut Vec<VertexId>,
        sink: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        if k == domain.n_vertices() {
            return sink(map);
        }
        let dk = VertexId(k);
        let range = match domain.parent(dk) {
            None if category.preserves_root() => 0..1,
            None => 0..codomain.n_vertices(),
            Some(p) => {
                let image = map[p.0];
                image.0 + 1..image.0 + codomain.subtree_size(image)
            }
        };
        for c in range.map(VertexId) {
            if let Some(Some(pin)) = pins.get(k) {
                if c != *pin {
                    continue;
                }
            }
            if category.preserves_dfs() && k > 0 && c <= map[k - 1] {
                continue;
            }
            // ancestors of k already sit below c; everything else must be incomparable
            let clash = (0..k).any(|j| {
                let dj = VertexId(j);
                !domain.leq(dk, dj) && codomain.comparable(map[j], c)
            });
            if clash {
                continue;
            }
            map.push(c);
            let flow = extend(k + 1, domain, codomain, category, pins, map, sink);
            map.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    let mut map = Vec::with_capacity(domain.n_vertices());
    let _ = extend(0, domain, codomain, category, pins, &mut map, &mut sink);
}

/// Every morphism `domain → codomain` in `category`.
///
/// PT morphisms come sorted by the Catalan-word order; the other categories in
/// lexicographic order of their vertex maps.
pub fn enumerate_morphisms(
    domain: &PlanarRootedTree,
    codomain: &PlanarRootedTree,
    category: Category,
) -> Vec<OrderEmbedding> {
    let mut out = enumerate_pinned(domain, codomain, category, &[]);
    if category == Category::PT {
        let mut keyed: Vec<_> = out
            .into_iter()
            .map(|f| (catalan::encode(&f).expect("enumerated PT morphism encodes"), f))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        out = keyed.into_iter().map(|(_, f)| f).collect();
    }
    out
}

/// Morphisms agreeing with the given pins, in lexicographic map order.
pub fn enumerate_pinned(
    domain: &PlanarRootedTree,
    codomain: &PlanarRootedTree,
    category: Category,
    pins: &[Option<VertexId>],
) -> Vec<OrderEmbedding> {
    let mut out = Vec::new();
    search(domain, codomain, category, pins, |map| {
        out.push(OrderEmbedding::new_unchecked(
            domain.clone(),
            codomain.clone(),
            map.to_vec(),
            category,
        ));
        ControlFlow::Continue(())
    });
    out
}

/// The lexicographically first morphism agreeing with the pins, if any.
pub fn first_pinned(
    domain: &PlanarRootedTree,
    codomain: &PlanarRootedTree,
    category: Category,
    pins: &[Option<VertexId>],
) -> Option<OrderEmbedding> {
    let mut found = None;
    search(domain, codomain, category, pins, |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    found.map(|map| OrderEmbedding::new_unchecked(domain.clone(), codomain.clone(), map, category))
}

pub fn count_morphisms(domain: &PlanarRootedTree, codomain: &PlanarRootedTree, category: Category) -> usize {
    let mut n = 0;
    search(domain, codomain, category, &[], |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &OrderEmbedding, g: &OrderEmbedding) -> Result<OrderEmbedding, MorphismError> {
    if f.category != g.category {
        return Err(MorphismError::CategoryMismatch(f.category, g.category));
    }
    if f.codomain != g.domain {
        return Err(MorphismError::TreeMismatch);
    }
    let map = f.map.iter().map(|v| g.map[v.0]).collect();
    Ok(OrderEmbedding::new_unchecked(
        f.domain.clone(),
        g.codomain.clone(),
        map,
        f.category,
    ))
}

/// A vertex `apex` with `leaves` strictly above it, pairwise incomparable and
/// increasing in the depth-first order: the data of an FPT map out of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarTuple {
    pub apex: VertexId,
    pub leaves: Vec<VertexId>,
}

impl StarTuple {
    pub fn to_morphism(&self, t: &PlanarRootedTree) -> Result<OrderEmbedding, MorphismError> {
        let star = PlanarRootedTree::star(self.leaves.len())?;
        let mut map = vec![self.apex];
        map.extend_from_slice(&self.leaves);
        OrderEmbedding::new(star, t.clone(), map, Category::FPT)
    }
}

/// All vertex tuples describing FPT maps `B_n → t`.
pub fn star_tuples(n: usize, t: &PlanarRootedTree) -> Vec<StarTuple> {
    fn pick(
        t: &PlanarRootedTree,
        apex: VertexId,
        n: usize,
        chosen: &mut Vec<VertexId>,
        out: &mut Vec<StarTuple>,
    ) {
        if chosen.len() == n {
            out.push(StarTuple {
                apex,
                leaves: chosen.clone(),
            });
            return;
        }
        let after = chosen.last().map_or(apex.0, |v| v.0);
        for c in t.strictly_above(apex).filter(|c| c.0 > after) {
            if chosen.iter().any(|&u| t.comparable(u, c)) {
                continue;
            }
            chosen.push(c);
            pick(t, apex, n, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for apex in t.vertices() {
        pick(t, apex, n, &mut Vec::new(), &mut out);
    }
    out
}
