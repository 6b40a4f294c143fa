//! Exhaustive reference implementations.
//!
//! Everything here is deliberately naive and shares no search code with the
//! rest of the crate; it exists so tests can check the real algorithms
//! against an independent answer. Only use it on small inputs.

use std::collections::HashMap;

use itertools::Itertools;

use crate::embedding::{is_morphism, Category, OrderEmbedding};
use crate::tree::{PlanarRootedTree, VertexId};

/// All maps `domain → codomain` valid in `category`, found by filtering every
/// injective vertex map. Lexicographic order.
pub fn brute_force_morphisms(
    domain: &PlanarRootedTree,
    codomain: &PlanarRootedTree,
    category: Category,
) -> Vec<Vec<VertexId>> {
    codomain
        .vertices()
        .permutations(domain.n_vertices())
        .filter(|map| is_morphism(domain, codomain, map, category))
        .collect()
}

/// Balanced strings of `pairs` bracket pairs, by scanning all `2^(2·pairs)`
/// binary strings.
pub fn balanced_bracket_strings(pairs: usize) -> Vec<String> {
    let len = 2 * pairs;
    (0u64..1 << len)
        .filter_map(|bits| {
            let s: String = (0..len)
                .map(|i| if bits >> (len - 1 - i) & 1 == 0 { '(' } else { ')' })
                .collect();
            let mut depth = 0i64;
            for c in s.chars() {
                depth += if c == '(' { 1 } else { -1 };
                if depth < 0 {
                    return None;
                }
            }
            (depth == 0).then_some(s)
        })
        .collect()
}

/// Isomorphism-class ids in the style of Aho–Hopcroft–Ullman: each vertex is
/// named by the sorted multiset of its children's names. Ids are shared across
/// every tree fed to the same interner.
#[derive(Debug, Default)]
pub struct AhuInterner {
    names: HashMap<Vec<usize>, usize>,
}

impl AhuInterner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn class_of(&mut self, t: &PlanarRootedTree) -> usize {
        let n = t.n_vertices();
        let mut name = vec![0usize; n];
        // children have larger preorder indices, so a reverse sweep sees them first
        for v in (0..n).rev() {
            let mut key: Vec<usize> = t.children(VertexId(v)).iter().map(|c| name[c.0]).collect();
            key.sort_unstable();
            let next = self.names.len();
            name[v] = *self.names.entry(key).or_insert(next);
        }
        name[0]
    }
}

/// Higman comparison by trying every strictly increasing position map.
pub fn exhaustive_higman<T>(a: &[T], b: &[T], leq: &mut dyn FnMut(&T, &T) -> bool) -> bool {
    fn go<T>(a: &[T], b: &[T], from: usize, leq: &mut dyn FnMut(&T, &T) -> bool) -> bool {
        match a.split_first() {
            None => true,
            Some((x, rest)) => (from..b.len()).any(|j| leq(x, &b[j]) && go(rest, b, j + 1, leq)),
        }
    }
    go(a, b, 0, leq)
}

/// Whether some brute-force PT map `h` satisfies `h ∘ f = g`.
pub fn brute_divides(f: &OrderEmbedding, g: &OrderEmbedding) -> bool {
    if f.domain() != g.domain() {
        return false;
    }
    brute_force_morphisms(f.codomain(), g.codomain(), Category::PT)
        .iter()
        .any(|h| f.domain().vertices().all(|v| h[f.image(v).0] == g.image(v)))
}

/// Indices of elements of `items` not brute-divided by any other distinct element.
pub fn brute_minimal(items: &[OrderEmbedding]) -> Vec<usize> {
    (0..items.len())
        .filter(|&i| {
            !items
                .iter()
                .enumerate()
                .any(|(j, g)| j != i && g != &items[i] && brute_divides(g, &items[i]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_counts_are_catalan() {
        let counts: Vec<_> = (0..6).map(|p| balanced_bracket_strings(p).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn ahu_separates_shapes() {
        let mut ahu = AhuInterner::new();
        let a = ahu.class_of(&"(())()".parse().unwrap());
        let b = ahu.class_of(&"()(())".parse().unwrap());
        let c = ahu.class_of(&"()()()".parse().unwrap());
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn exhaustive_higman_small() {
        let mut le = |a: &u8, b: &u8| a <= b;
        assert!(exhaustive_higman(&[1, 3], &[0, 2, 1, 5], &mut le));
        assert!(!exhaustive_higman(&[2], &[1, 1], &mut le));
    }
}
