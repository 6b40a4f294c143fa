//! Hom-set checks of colimit statements and of the plane-forgetting functor.
//!
//! Universal properties are tested against a probe object `w`: a cocone is a
//! colimit exactly when, for every `w`, restricting maps out of the apex gives
//! a bijection onto compatible families of maps out of the pieces. Both sides
//! are enumerated and compared element by element.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::embedding::{enumerate_morphisms, enumerate_pinned, Category, OrderEmbedding};
use crate::tree::{PlanarRootedTree, PlaneStructure, RootedTree, Split, VertexId};

/// The span `T_v ← v → T^v` obtained by cutting a tree at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cospan {
    pub apex_vertex: VertexId,
    pub above: PlanarRootedTree,
    pub below: PlanarRootedTree,
}

impl Cospan {
    pub fn glue(&self) -> PlanarRootedTree {
        PlanarRootedTree::glue(&self.below, self.apex_vertex, &self.above).expect("apex vertex lies in `below`")
    }
}

impl From<&Split> for Cospan {
    fn from(s: &Split) -> Self {
        Cospan {
            apex_vertex: s.at,
            above: s.above.clone(),
            below: s.below.clone(),
        }
    }
}

/// Sizes and verdicts from comparing restriction with enumerated families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BijectionReport {
    pub lhs: usize,
    pub rhs: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective && self.lhs == self.rhs
    }

    fn compare(lhs: Vec<Vec<Vec<VertexId>>>, rhs: Vec<Vec<Vec<VertexId>>>) -> Self {
        let n_lhs = lhs.len();
        let n_rhs = rhs.len();
        let restricted: HashSet<_> = lhs.into_iter().collect();
        let families: HashSet<_> = rhs.into_iter().collect();
        BijectionReport {
            lhs: n_lhs,
            rhs: n_rhs,
            injective: restricted.len() == n_lhs,
            surjective: families.is_subset(&restricted) && restricted.is_subset(&families),
        }
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lhs={} rhs={} injective={} surjective={}",
            self.lhs, self.rhs, self.injective, self.surjective
        )
    }
}

fn restrict(f: &OrderEmbedding, along: &[VertexId]) -> Vec<VertexId> {
    along.iter().map(|&v| f.image(v)).collect()
}

/// Compares `Mor_FPT(t, w)` with pairs `(α: T_v → w, β: T^v → w)` agreeing on `v`.
pub fn pushout_report(t: &PlanarRootedTree, v: VertexId, w: &PlanarRootedTree) -> BijectionReport {
    let split = t.split(v);
    let lhs = enumerate_morphisms(t, w, Category::FPT)
        .iter()
        .map(|f| vec![restrict(f, &split.above_map), restrict(f, &split.below_map)])
        .collect();
    let mut rhs = Vec::new();
    for alpha in enumerate_morphisms(&split.above, w, Category::FPT) {
        let mut pins = vec![None; split.below.n_vertices()];
        pins[split.at.0] = Some(alpha.image(VertexId::ROOT));
        for beta in enumerate_pinned(&split.below, w, Category::FPT, &pins) {
            rhs.push(vec![alpha.map().to_vec(), beta.map().to_vec()]);
        }
    }
    BijectionReport::compare(lhs, rhs)
}

pub fn pushout_universal_check(t: &PlanarRootedTree, v: VertexId, w: &PlanarRootedTree) -> bool {
    pushout_report(t, v, w).holds()
}

/// Branches above the root in left-to-right order, and their number.
pub fn root_decomposition(t: &PlanarRootedTree) -> (Vec<PlanarRootedTree>, usize) {
    let branches = t.root_branches();
    let n = branches.len();
    (branches, n)
}

/// Compares `Mor_FPT(t, w)` with families `(ψ_1, …, ψ_n, β)` where
/// `ψ_i: T_{v_i} → w`, `β: B_n → w` and `ψ_i` sends its root to `β(leaf i)`.
pub fn root_colimit_report(t: &PlanarRootedTree, w: &PlanarRootedTree) -> BijectionReport {
    let tops = t.children(VertexId::ROOT).to_vec();
    let n = tops.len();
    let splits: Vec<Split> = tops.iter().map(|&c| t.split(c)).collect();
    let mut star_part = vec![VertexId::ROOT];
    star_part.extend_from_slice(&tops);

    let lhs = enumerate_morphisms(t, w, Category::FPT)
        .iter()
        .map(|f| {
            let mut family: Vec<Vec<VertexId>> = splits.iter().map(|s| restrict(f, &s.above_map)).collect();
            family.push(restrict(f, &star_part));
            family
        })
        .collect();

    let mut rhs = Vec::new();
    if n > 0 {
        let star = PlanarRootedTree::star(n).expect("n ≥ 1");
        for beta in enumerate_morphisms(&star, w, Category::FPT) {
            let choices: Vec<Vec<Vec<VertexId>>> = splits
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let mut pins = vec![None; s.above.n_vertices()];
                    pins[0] = Some(beta.image(VertexId(i + 1)));
                    enumerate_pinned(&s.above, w, Category::FPT, &pins)
                        .into_iter()
                        .map(|psi| psi.map().to_vec())
                        .collect()
                })
                .collect();
            for mut family in choices.into_iter().multi_cartesian_product() {
                family.push(beta.map().to_vec());
                rhs.push(family);
            }
        }
    }
    BijectionReport::compare(lhs, rhs)
}

/// `false` for the single-vertex tree, which has no root diagram.
pub fn root_colimit_check(t: &PlanarRootedTree, w: &PlanarRootedTree) -> bool {
    t.n_vertices() > 1 && root_colimit_report(t, w).holds()
}

/// Both sides of `T(U, J(V)) = ⊔_i PT(U_i, V)` together with the plane
/// structures `U_i` they are indexed by.
#[derive(Debug, Clone)]
pub struct PropertyFDecomposition {
    pub u: RootedTree,
    pub v: PlanarRootedTree,
    pub structures: Vec<PlaneStructure>,
    /// T morphisms from the representative of `u` into `v`.
    pub lhs: Vec<OrderEmbedding>,
    /// `rhs[i]` = PT morphisms from `structures[i].tree` into `v`.
    pub rhs: Vec<Vec<OrderEmbedding>>,
}

pub fn property_f_decomposition(u: &RootedTree, v: &PlanarRootedTree) -> PropertyFDecomposition {
    let structures = u.plane_structures();
    let lhs = enumerate_morphisms(u.representative(), v, Category::T);
    let rhs = structures
        .iter()
        .map(|s| enumerate_morphisms(&s.tree, v, Category::PT))
        .collect();
    PropertyFDecomposition {
        u: u.clone(),
        v: v.clone(),
        structures,
        lhs,
        rhs,
    }
}

impl PropertyFDecomposition {
    /// Splits a T morphism into a plane structure on `u` and a PT morphism.
    ///
    /// Children of each vertex are ordered by the depth-first order of their
    /// images in `v`; this is the unique plane structure making the map
    /// depth-first preserving.
    pub fn factorize(&self, phi: &OrderEmbedding) -> Option<(usize, OrderEmbedding)> {
        let rep = self.u.representative();
        let induced: Vec<Vec<VertexId>> = rep
            .vertices()
            .map(|x| {
                let mut kids = rep.children(x).to_vec();
                kids.sort_by_key(|&c| phi.image(c));
                kids
            })
            .collect();
        let i = self.structures.iter().position(|s| s.child_orders == induced)?;
        let s = &self.structures[i];
        let mut map = vec![VertexId::ROOT; rep.n_vertices()];
        for x in rep.vertices() {
            map[s.relabel[x.0].0] = phi.image(x);
        }
        let psi = OrderEmbedding::new(s.tree.clone(), self.v.clone(), map, Category::PT).ok()?;
        Some((i, psi))
    }

    pub fn rhs_total(&self) -> usize {
        self.rhs.iter().map(Vec::len).sum()
    }

    /// Whether factorization is a bijection from `lhs` onto `⊔ rhs`.
    pub fn is_bijective(&self) -> bool {
        let mut seen = HashSet::new();
        for phi in &self.lhs {
            let Some((i, psi)) = self.factorize(phi) else {
                return false;
            };
            if !self.rhs[i].contains(&psi) || !seen.insert((i, psi)) {
                return false;
            }
        }
        seen.len() == self.rhs_total()
    }

    /// Table row `U | V | lhs | rhs_1 … rhs_e | ok`.
    pub fn table_row(&self) -> String {
        let counts = self.rhs.iter().map(|r| r.len().to_string()).join(" ");
        let ok = self.lhs.len() == self.rhs_total() && self.is_bijective();
        format!("{} | {} | {} | {} | {}", self.u, self.v, self.lhs.len(), counts, ok)
    }
}

pub fn essential_surjectivity_witness(u: &RootedTree) -> PlanarRootedTree {
    u.essential_surjectivity_witness()
}
