use std::collections::BTreeMap;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treecat::groebner::{
    chain_stabilization_demo, leading_term, member, minimize, monomials_up_to, FormalElement, Monomial, MonomialSet,
};
use treecat::oracle::brute_divides;
use treecat::tree::enumerate_planar_trees_up_to;
use treecat::PlanarRootedTree;

fn bases() -> Vec<PlanarRootedTree> {
    enumerate_planar_trees_up_to(1, 3)
}

fn generator_sets(pool: &[Monomial], seed: u64, count: usize) -> Vec<Vec<Monomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| pool.choose_multiple(&mut rng, 1 + k % 3).cloned().collect())
        .collect()
}

#[test]
fn member_agrees_with_brute_force() {
    for (b, base) in bases().iter().enumerate() {
        let all = monomials_up_to(base, 5);
        let pool = monomials_up_to(base, 4);
        for gens in generator_sets(&pool, b as u64, 12) {
            let s = MonomialSet::new(base.clone(), gens.clone()).unwrap();
            for m in &all {
                let expected = gens.iter().any(|g| brute_divides(g.morphism(), m.morphism()));
                let found = member(&s, m).unwrap();
                assert_eq!(found.is_some(), expected, "{m}");
                if let Some((g, h)) = found {
                    assert_eq!(treecat::compose(g.morphism(), &h).unwrap(), *m.morphism());
                }
            }
        }
    }
}

#[test]
fn minimize_is_idempotent_and_keeps_the_closure() {
    for (b, base) in bases().iter().enumerate() {
        let all = monomials_up_to(base, 5);
        let pool = monomials_up_to(base, 4);
        for gens in generator_sets(&pool, 100 + b as u64, 12) {
            let s = MonomialSet::new(base.clone(), gens).unwrap();
            let small = minimize(&s);
            assert_eq!(minimize(&small), small);
            for m in &all {
                assert_eq!(member(&s, m).unwrap().is_some(), member(&small, m).unwrap().is_some());
            }
        }
    }
}

#[test]
fn leading_term_ignores_positive_rescaling() {
    let base = PlanarRootedTree::parse_brackets("()").unwrap();
    let pool = monomials_up_to(&base, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 1..20 {
        let picked: Vec<_> = pool.choose_multiple(&mut rng, 1 + k % 5).cloned().collect();
        let e = FormalElement::new(
            base.clone(),
            picked.iter().enumerate().map(|(i, m)| (m.clone(), Rational64::new(i as i64 + 1, 3))),
        )
        .unwrap();
        let lead = leading_term(&e).unwrap().clone();
        assert_eq!(Some(&lead), picked.iter().max());
        for factor in [Rational64::new(1, 2), Rational64::from_integer(7)] {
            assert_eq!(leading_term(&e.scale(factor).unwrap()).unwrap(), &lead);
        }
    }
}

#[test]
fn stabilization_is_order_independent_within_size_blocks() {
    for base in bases() {
        let stream = monomials_up_to(&base, 5);
        let reference = chain_stabilization_demo(&base, &stream, 5).unwrap();
        let mut blocks: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
        for m in &stream {
            blocks.entry(m.morphism().codomain().n_vertices()).or_default().push(m.clone());
        }
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let shuffled: Vec<Monomial> = blocks
                .values()
                .flat_map(|block| {
                    let mut block = block.clone();
                    block.shuffle(&mut rng);
                    block
                })
                .collect();
            let run = chain_stabilization_demo(&base, &shuffled, 5).unwrap();
            assert_eq!(run.generators, reference.generators, "base {base}, seed {seed}");
            assert_eq!(run.index, reference.index);
        }
    }
}
