mod common;

use common::{elem, groups, pick, products, sub2};
use nilact::structure::{
    all_complements, all_sylow_subgroups, is_nilpotent, is_nilpotent_subgroup, locally_conjugate, p_part,
    prime_divisors, sylow_subgroup,
};
use nilact::theorems::intersection_lemma_check;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sylow_orders(gi in 0usize..1000) {
        let g = pick(groups(), gi);
        for p in prime_divisors(g.order() as u64) {
            let s = sylow_subgroup(g, p).unwrap();
            prop_assert_eq!(s.order() as u64, p_part(g.order() as u64, p));
            if is_nilpotent(g) {
                prop_assert!(s.is_normal());
                prop_assert_eq!(all_sylow_subgroups(g, p).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn intersection_lemma(gi in 0usize..1000, ni in 0usize..1000, a in 0usize..1000, b in 0usize..1000) {
        let g = pick(groups(), gi);
        let normals: Vec<_> = common::normal_subgroups(g)
            .into_iter()
            .filter(|n| is_nilpotent_subgroup(n) && prime_divisors(n.order() as u64).len() >= 2)
            .collect();
        prop_assume!(!normals.is_empty());
        let n = pick(&normals, ni);
        let h = sub2(g, a, b);
        for p in prime_divisors(n.order() as u64) {
            prop_assert!(intersection_lemma_check(&h, n, p).unwrap());
        }
    }

    #[test]
    fn complements_closed_under_n(pi in 0usize..1000, x in 0usize..1000) {
        let prod = pick(products(), pi);
        prop_assume!(prod.p.group.order() <= 200);
        let n = prod.p.n_subgroup();
        let comps = all_complements(&n, 10_000_000).unwrap();
        let m = n.elements()[x % n.order()];
        for k in &comps {
            prop_assert!(comps.contains(&k.conjugate(m)));
        }
    }

    #[test]
    fn conjugate_implies_locally_conjugate(gi in 0usize..1000, a in 0usize..1000, b in 0usize..1000, x in 0usize..1000) {
        let g = pick(groups(), gi);
        let h = sub2(g, a, b);
        prop_assert!(locally_conjugate(&h, &h.conjugate(elem(g, x))).unwrap());
    }
}
