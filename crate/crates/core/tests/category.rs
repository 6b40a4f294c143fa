use std::collections::BTreeSet;

use treecat::category::{
    property_f_decomposition, pushout_report, root_colimit_report, root_decomposition, Cospan,
};
use treecat::oracle::brute_force_morphisms;
use treecat::tree::enumerate_planar_trees_up_to;
use treecat::{enumerate_morphisms, Category, PlanarRootedTree};

fn trees(min: usize, max: usize) -> Vec<PlanarRootedTree> {
    enumerate_planar_trees_up_to(min, max)
}

#[test]
fn pushout_counts_on_small_probes() {
    for t in trees(1, 4) {
        for v in t.vertices() {
            let cospan = Cospan::from(&t.split(v));
            assert_eq!(cospan.glue(), t);
            for w in trees(1, 5) {
                let report = pushout_report(&t, v, &w);
                assert!(report.holds(), "{t} at {v} into {w}: {report}");
                assert_eq!(report.lhs, brute_force_morphisms(&t, &w, Category::FPT).len());
            }
        }
    }
}

#[test]
fn root_decomposition_reassembles() {
    for t in trees(1, 7) {
        let (branches, n) = root_decomposition(&t);
        assert_eq!(n, t.in_degree(t.root()));
        let rebuilt: String = branches.iter().map(|b| format!("({b})")).collect();
        assert_eq!(rebuilt, t.to_brackets());
    }
}

#[test]
fn root_colimit_on_small_probes() {
    for t in trees(2, 4) {
        for w in trees(1, 5) {
            let report = root_colimit_report(&t, &w);
            assert!(report.holds(), "{t} into {w}: {report}");
        }
    }
}

#[test]
fn property_f_small_range() {
    let classes: BTreeSet<_> = trees(1, 4).iter().map(|t| t.canonical_rooted()).collect();
    for u in &classes {
        for v in trees(1, 5) {
            let d = property_f_decomposition(u, &v);
            assert_eq!(d.rhs.len(), u.representation_count());
            assert_eq!(d.lhs.len(), d.rhs_total(), "{u} into {v}");
            assert!(d.is_bijective(), "{u} into {v}");
            assert_eq!(
                d.lhs.len(),
                brute_force_morphisms(u.representative(), &v, Category::T).len()
            );
        }
    }
}

#[test]
fn property_f_on_a_chain_has_no_plane_freedom() {
    let chain = PlanarRootedTree::parse_brackets("((()))").unwrap().canonical_rooted();
    for v in trees(1, 6) {
        let d = property_f_decomposition(&chain, &v);
        assert_eq!(d.rhs.len(), 1);
        assert_eq!(d.lhs.len(), enumerate_morphisms(&d.structures[0].tree, &v, Category::PT).len());
    }
}
