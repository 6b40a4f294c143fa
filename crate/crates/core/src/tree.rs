//! Planar rooted trees and their isomorphism classes.
//!
//! A [`PlanarRootedTree`] stores its vertices in preorder: the root is vertex
//! 0, and children are listed left to right in the order of the depth-first
//! walk. Every subtree therefore occupies a contiguous block of indices, so the
//! tree order (`v ≤ w` iff `w` lies on the path from `v` down to the root) is a
//! range check.
//!
//! Trees serialize as balanced bracket strings with no enclosing pair for the
//! root: `""` is the single vertex, `"()()"` is the root with two leaves.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

/// Preorder position of a vertex inside a particular tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub const ROOT: VertexId = VertexId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("unbalanced bracket string at offset {offset}")]
    Unbalanced { offset: usize },
    #[error("unexpected character {found:?} at offset {offset}")]
    InvalidChar { offset: usize, found: char },
    #[error("a star tree needs at least one leaf")]
    EmptyStar,
    #[error("vertex {vertex} out of range for a tree with {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    #[error("child lists do not describe a tree: {0}")]
    NotATree(String),
}

#[derive(Debug)]
struct TreeData {
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
    depth: Vec<usize>,
    // number of vertices in the subtree rooted at each vertex
    size: Vec<usize>,
}

/// A finite rooted tree with a total order on the children of every vertex.
///
/// Cloning is cheap; the vertex data is shared.
#[derive(Clone)]
pub struct PlanarRootedTree {
    data: Arc<TreeData>,
}

impl PartialEq for PlanarRootedTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.children == other.data.children
    }
}

impl Eq for PlanarRootedTree {}

impl Hash for PlanarRootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.data.children.hash(state);
    }
}

impl fmt::Debug for PlanarRootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarRootedTree({:?})", self.to_brackets())
    }
}

impl fmt::Display for PlanarRootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_brackets())
    }
}

impl FromStr for PlanarRootedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_brackets(s)
    }
}

/// Result of cutting a tree at a vertex `v`.
///
/// `above` is the subtree of everything at or above `v`, re-rooted at `v`;
/// `below` is the tree with everything strictly above `v` removed, and `at`
/// is the position of `v` inside `below`. The two maps send vertices of the
/// pieces back to their preorder positions in the original tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub above: PlanarRootedTree,
    pub below: PlanarRootedTree,
    pub at: VertexId,
    pub above_map: Vec<VertexId>,
    pub below_map: Vec<VertexId>,
}

impl PlanarRootedTree {
    /// Builds a tree from a parent vector already in preorder.
    fn from_preorder_parents(parent: Vec<Option<VertexId>>) -> Self {
        let n = parent.len();
        debug_assert!(n >= 1 && parent[0].is_none());
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        for v in 1..n {
            let p = parent[v].expect("non-root vertex without parent").0;
            debug_assert!(p < v);
            children[p].push(VertexId(v));
            depth[v] = depth[p] + 1;
        }
        let mut size = vec![1; n];
        for v in (1..n).rev() {
            let p = parent[v].unwrap().0;
            size[p] += size[v];
        }
        PlanarRootedTree {
            data: Arc::new(TreeData {
                parent,
                children,
                depth,
                size,
            }),
        }
    }

    /// The tree with one vertex and no edges.
    pub fn single_vertex() -> Self {
        Self::from_preorder_parents(vec![None])
    }

    pub fn parse_brackets(s: &str) -> Result<Self, TreeError> {
        let mut parent = vec![None];
        let mut stack = vec![VertexId::ROOT];
        for (offset, ch) in s.char_indices() {
            match ch {
                '(' => {
                    let v = VertexId(parent.len());
                    parent.push(Some(*stack.last().unwrap()));
                    stack.push(v);
                }
                ')' => {
                    if stack.len() == 1 {
                        return Err(TreeError::Unbalanced { offset });
                    }
                    stack.pop();
                }
                found => return Err(TreeError::InvalidChar { offset, found }),
            }
        }
        if stack.len() != 1 {
            return Err(TreeError::Unbalanced { offset: s.len() });
        }
        Ok(Self::from_preorder_parents(parent))
    }

    pub fn to_brackets(&self) -> String {
        let n = self.n_vertices();
        let mut out = String::with_capacity(2 * (n - 1));
        let mut open = vec![VertexId::ROOT];
        for v in 1..n {
            let p = self.data.parent[v].unwrap();
            while *open.last().unwrap() != p {
                open.pop();
                out.push(')');
            }
            open.push(VertexId(v));
            out.push('(');
        }
        for _ in 1..open.len() {
            out.push(')');
        }
        out
    }

    /// The star `B_n`: a root with `n` leaf children.
    pub fn star(n: usize) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::EmptyStar);
        }
        let mut parent = vec![None];
        parent.extend(std::iter::repeat(Some(VertexId::ROOT)).take(n));
        Ok(Self::from_preorder_parents(parent))
    }

    /// Builds a tree from arbitrary child lists, relabelling into preorder.
    ///
    /// Returns the tree together with the map old label → new preorder id.
    pub fn from_child_lists(
        children: &[Vec<usize>],
        root: usize,
    ) -> Result<(Self, Vec<VertexId>), TreeError> {
        let n = children.len();
        if root >= n {
            return Err(TreeError::VertexOutOfRange {
                vertex: root,
                n_vertices: n,
            });
        }
        let mut relabel: Vec<Option<VertexId>> = vec![None; n];
        let mut parent = Vec::with_capacity(n);
        let mut stack: Vec<(usize, Option<VertexId>)> = vec![(root, None)];
        while let Some((old, new_parent)) = stack.pop() {
            if relabel[old].is_some() {
                return Err(TreeError::NotATree(format!("vertex {old} reached twice")));
            }
            let id = VertexId(parent.len());
            relabel[old] = Some(id);
            parent.push(new_parent);
            for &c in children[old].iter().rev() {
                if c >= n {
                    return Err(TreeError::VertexOutOfRange {
                        vertex: c,
                        n_vertices: n,
                    });
                }
                stack.push((c, Some(id)));
            }
        }
        let relabel = relabel
            .into_iter()
            .enumerate()
            .map(|(old, id)| id.ok_or_else(|| TreeError::NotATree(format!("vertex {old} unreachable"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((Self::from_preorder_parents(parent), relabel))
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.data.parent.len()
    }

    #[inline]
    pub fn n_edges(&self) -> usize {
        self.n_vertices() - 1
    }

    #[inline]
    pub fn root(&self) -> VertexId {
        VertexId::ROOT
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator {
        (0..self.n_vertices()).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.n_vertices()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), TreeError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(TreeError::VertexOutOfRange {
                vertex: v.0,
                n_vertices: self.n_vertices(),
            })
        }
    }

    #[inline]
    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.data.parent[v.0]
    }

    /// Children of `v` in left-to-right order (the order on `In(v)`).
    #[inline]
    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.data.children[v.0]
    }

    #[inline]
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.data.children[v.0].len()
    }

    #[inline]
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.data.children[v.0].is_empty()
    }

    /// Number of edges between `v` and the root.
    #[inline]
    pub fn depth(&self, v: VertexId) -> usize {
        self.data.depth[v.0]
    }

    #[inline]
    pub fn subtree_size(&self, v: VertexId) -> usize {
        self.data.size[v.0]
    }

    /// Tree order: `v ≤ w` iff `w` lies on the path from `v` to the root.
    #[inline]
    pub fn leq(&self, v: VertexId, w: VertexId) -> bool {
        w.0 <= v.0 && v.0 < w.0 + self.data.size[w.0]
    }

    #[inline]
    pub fn comparable(&self, v: VertexId, w: VertexId) -> bool {
        self.leq(v, w) || self.leq(w, v)
    }

    /// Vertices strictly above `v`, in preorder.
    pub fn strictly_above(&self, v: VertexId) -> impl Iterator<Item = VertexId> {
        (v.0 + 1..v.0 + self.data.size[v.0]).map(VertexId)
    }

    pub fn split(&self, v: VertexId) -> Split {
        let n = self.n_vertices();
        let start = v.0;
        let end = start + self.data.size[start];

        let above_map: Vec<VertexId> = (start..end).map(VertexId).collect();
        let above_parent = (start..end)
            .map(|u| {
                if u == start {
                    None
                } else {
                    self.data.parent[u].map(|p| VertexId(p.0 - start))
                }
            })
            .collect();

        let below_map: Vec<VertexId> = (0..=start).chain(end..n).map(VertexId).collect();
        let mut position = vec![usize::MAX; n];
        for (i, old) in below_map.iter().enumerate() {
            position[old.0] = i;
        }
        let below_parent = below_map
            .iter()
            .map(|old| self.data.parent[old.0].map(|p| VertexId(position[p.0])))
            .collect();

        Split {
            above: Self::from_preorder_parents(above_parent),
            below: Self::from_preorder_parents(below_parent),
            at: VertexId(start),
            above_map,
            below_map,
        }
    }

    /// Identifies the root of `above` with `at`, appending the children of
    /// `above`'s root after the existing children of `at`.
    pub fn glue(below: &Self, at: VertexId, above: &Self) -> Result<Self, TreeError> {
        below.check_vertex(at)?;
        let nb = below.n_vertices();
        // above's non-root vertex u gets label nb + u - 1; its root becomes `at`
        let lift = |u: VertexId| if u.0 == 0 { at.0 } else { nb + u.0 - 1 };
        let mut children: Vec<Vec<usize>> = below
            .vertices()
            .map(|v| below.children(v).iter().map(|c| c.0).collect())
            .collect();
        children.extend((1..above.n_vertices()).map(|_| Vec::new()));
        for u in above.vertices() {
            let target = lift(u);
            children[target].extend(above.children(u).iter().map(|&c| lift(c)));
        }
        Ok(Self::from_child_lists(&children, 0)?.0)
    }

    /// Subtrees hanging off the root, left to right.
    pub fn root_branches(&self) -> Vec<PlanarRootedTree> {
        self.children(VertexId::ROOT)
            .iter()
            .map(|&c| self.split(c).above)
            .collect()
    }

    pub fn canonical_rooted(&self) -> RootedTree {
        RootedTree::from_planar(self)
    }

    fn canonical_brackets(&self) -> String {
        let n = self.n_vertices();
        let mut canon: Vec<String> = vec![String::new(); n];
        for v in (0..n).rev() {
            let mut parts: Vec<String> = self.data.children[v]
                .iter()
                .map(|c| format!("({})", std::mem::take(&mut canon[c.0])))
                .collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            canon[v] = parts.concat();
        }
        std::mem::take(&mut canon[0])
    }
}

/// All planar rooted trees with `n` vertices, in lexicographic bracket order
/// (`(` before `)`).
pub fn enumerate_planar_trees(n: usize) -> Vec<PlanarRootedTree> {
    fn go(buf: &mut String, opens_left: usize, depth: usize, out: &mut Vec<PlanarRootedTree>) {
        if opens_left == 0 && depth == 0 {
            out.push(PlanarRootedTree::parse_brackets(buf).expect("generated string is balanced"));
            return;
        }
        if opens_left > 0 {
            buf.push('(');
            go(buf, opens_left - 1, depth + 1, out);
            buf.pop();
        }
        if depth > 0 {
            buf.push(')');
            go(buf, opens_left, depth - 1, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(&mut String::new(), n - 1, 0, &mut out);
    out
}

/// All planar rooted trees with between `min` and `max` vertices, by size then
/// bracket order.
pub fn enumerate_planar_trees_up_to(min: usize, max: usize) -> Vec<PlanarRootedTree> {
    (min.max(1)..=max).flat_map(enumerate_planar_trees).collect()
}

/// An isomorphism class of rooted trees, held as a canonical planar
/// representative: children sorted by descending bracket encoding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    canonical: PlanarRootedTree,
    brackets: String,
}

impl RootedTree {
    pub fn from_planar(t: &PlanarRootedTree) -> Self {
        let brackets = t.canonical_brackets();
        let canonical = PlanarRootedTree::parse_brackets(&brackets).expect("canonical form is balanced");
        RootedTree { canonical, brackets }
    }

    pub fn representative(&self) -> &PlanarRootedTree {
        &self.canonical
    }

    pub fn n_vertices(&self) -> usize {
        self.canonical.n_vertices()
    }

    /// Number of plane structures on the representative: `∏_v |In(v)|!`.
    pub fn representation_count(&self) -> usize {
        self.canonical
            .vertices()
            .map(|v| (1..=self.canonical.in_degree(v)).product::<usize>())
            .product()
    }

    /// Every assignment of a total order to each `In(v)` of the representative.
    ///
    /// Distinct assignments are kept even when the resulting planar trees are
    /// equal, so `B_2` has two entries.
    pub fn plane_structures(&self) -> Vec<PlaneStructure> {
        let rep = &self.canonical;
        rep.vertices()
            .map(|v| {
                let kids = rep.children(v).to_vec();
                let k = kids.len();
                kids.into_iter().permutations(k).collect::<Vec<_>>()
            })
            .multi_cartesian_product()
            .map(|child_orders| {
                let lists: Vec<Vec<usize>> = child_orders
                    .iter()
                    .map(|order| order.iter().map(|c| c.0).collect())
                    .collect();
                let (tree, relabel) =
                    PlanarRootedTree::from_child_lists(&lists, 0).expect("permuted children still form a tree");
                PlaneStructure {
                    child_orders,
                    tree,
                    relabel,
                }
            })
            .collect()
    }

    pub fn planar_representations(&self) -> Vec<PlanarRootedTree> {
        self.plane_structures().into_iter().map(|p| p.tree).collect()
    }

    /// A planar tree whose underlying rooted tree is `self`.
    pub fn essential_surjectivity_witness(&self) -> PlanarRootedTree {
        self.canonical.clone()
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n_vertices()
            .cmp(&other.n_vertices())
            .then_with(|| self.brackets.cmp(&other.brackets))
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedTree({:?})", self.brackets)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.brackets)
    }
}

/// One plane structure on the representative of a [`RootedTree`].
///
/// `child_orders[v]` lists the children of representative vertex `v` in the
/// chosen order; `relabel[v]` is the position of `v` in `tree`.
#[derive(Debug, Clone)]
pub struct PlaneStructure {
    pub child_orders: Vec<Vec<VertexId>>,
    pub tree: PlanarRootedTree,
    pub relabel: Vec<VertexId>,
}
