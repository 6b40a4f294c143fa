use std::cmp::Ordering;
use std::collections::HashSet;

use proptest::prelude::*;
use treecat::tree::enumerate_planar_trees_up_to;
use treecat::{compose, decode, encode, enumerate_morphisms, CatalanToken, CatalanWord, Category, PlanarRootedTree};

fn trees(min: usize, max: usize) -> Vec<PlanarRootedTree> {
    enumerate_planar_trees_up_to(min, max)
}

#[test]
fn roundtrip_and_injectivity_up_to_6() {
    for t in trees(1, 6) {
        for u in trees(t.n_vertices(), 6) {
            let homs = enumerate_morphisms(&t, &u, Category::PT);
            let mut words = HashSet::new();
            for f in &homs {
                let w = encode(f).unwrap();
                assert_eq!(w.len(), 2 * u.n_edges());
                assert_eq!(w.bracket_string(), u.to_brackets());
                assert!(
                    w.labels().flatten().all(|l| l < t.n_vertices()),
                    "label bound violated by {f}"
                );
                assert_eq!(decode(&w).unwrap(), *f);
                words.insert(w);
            }
            assert_eq!(words.len(), homs.len());
        }
    }
}

#[test]
fn single_vertex_words_are_bracket_strings() {
    let dot = PlanarRootedTree::single_vertex();
    for u in trees(1, 7) {
        let f = &enumerate_morphisms(&dot, &u, Category::PT)[0];
        let w = encode(f).unwrap();
        assert!(w.labels().all(|l| l.is_none()));
        assert_eq!(w.bracket_string(), u.to_brackets());
    }
}

#[test]
fn word_order_is_total_on_pointed_sets() {
    for t in trees(1, 3) {
        let mut words: Vec<CatalanWord> = trees(t.n_vertices(), 7)
            .iter()
            .flat_map(|u| enumerate_morphisms(&t, u, Category::PT))
            .map(|f| encode(&f).unwrap())
            .collect();
        let n = words.len();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), n, "two morphisms out of {t} share a word");
        for pair in words.windows(2) {
            assert_eq!(pair[0].cmp(&pair[1]), Ordering::Less);
            assert_eq!(pair[1].cmp(&pair[0]), Ordering::Greater);
        }
    }
}

#[test]
fn admissibility_up_to_5() {
    let all = trees(1, 5);
    for t in &all {
        for u in all.iter().filter(|u| u.n_vertices() >= t.n_vertices()) {
            let fs = enumerate_morphisms(t, u, Category::PT);
            if fs.len() < 2 {
                continue;
            }
            let hs: Vec<_> = all
                .iter()
                .filter(|v| v.n_vertices() >= u.n_vertices())
                .flat_map(|v| enumerate_morphisms(u, v, Category::PT))
                .collect();
            for (i, f) in fs.iter().enumerate() {
                for g in &fs[i + 1..] {
                    // enumerate_morphisms sorts PT hom-sets by word
                    assert!(encode(f).unwrap() < encode(g).unwrap());
                    for h in &hs {
                        let hf = encode(&compose(f, h).unwrap()).unwrap();
                        let hg = encode(&compose(g, h).unwrap()).unwrap();
                        assert!(hf < hg, "{f} < {g} but not after {h}");
                    }
                }
            }
        }
    }
}

fn arb_token() -> impl Strategy<Value = CatalanToken> {
    (any::<bool>(), prop::option::of(0usize..4)).prop_map(|(up, label)| {
        if up {
            CatalanToken::up(label)
        } else {
            CatalanToken::down(label)
        }
    })
}

fn arb_word() -> impl Strategy<Value = CatalanWord> {
    prop::collection::vec(arb_token(), 0..8).prop_map(CatalanWord::new)
}

proptest! {
    #[test]
    fn word_text_roundtrip(w in arb_word()) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<CatalanWord>().unwrap(), w);
    }

    #[test]
    fn word_order_laws(a in arb_word(), b in arb_word(), c in arb_word()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        if a.len() < b.len() {
            prop_assert!(a < b);
        }
    }

    #[test]
    fn decode_never_returns_an_invalid_morphism(w in arb_word()) {
        if let Ok(f) = decode(&w) {
            prop_assert_eq!(encode(&f).unwrap(), w);
        }
    }
}
