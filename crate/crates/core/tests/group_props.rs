mod common;

use common::{elem, groups, pick, sub2};
use nilact::group::{are_conjugate_subgroups, quotient};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_axioms(gi in 0usize..1000, a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let g = pick(groups(), gi);
        let (a, b, c) = (elem(g, a), elem(g, b), elem(g, c));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(0, a), a);
        prop_assert_eq!(g.mul(a, 0), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        prop_assert_eq!(g.mul(g.inv(a), a), 0);
    }

    #[test]
    fn quotient_fibers_are_cosets(gi in 0usize..1000, a in 0usize..1000, x in 0usize..1000) {
        let g = pick(groups(), gi);
        let normals = common::normal_subgroups(g);
        let n = pick(&normals, a);
        let (q, proj) = quotient(n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let x = elem(g, x);
        let fiber: Vec<_> = g.elements().filter(|&y| proj.apply(y) == proj.apply(x)).collect();
        let mut coset: Vec<_> = n.elements().iter().map(|&m| g.mul(x, m)).collect();
        coset.sort_unstable();
        prop_assert_eq!(fiber, coset);
    }

    #[test]
    fn conjugacy_of_subgroups(gi in 0usize..1000, a in 0usize..1000, b in 0usize..1000, x in 0usize..1000, c in 0usize..1000, d in 0usize..1000) {
        let g = pick(groups(), gi);
        let h = sub2(g, a, b);
        prop_assert_eq!(are_conjugate_subgroups(&h, &h).unwrap().map(|x| h.conjugate(x)), Some(h.clone()));
        let k = h.conjugate(elem(g, x));
        let w = are_conjugate_subgroups(&h, &k).unwrap().expect("conjugate by construction");
        prop_assert_eq!(h.conjugate(w), k.clone());
        let back = are_conjugate_subgroups(&k, &h).unwrap().expect("symmetric");
        prop_assert_eq!(k.conjugate(back), h.clone());
        let other = sub2(g, c, d);
        prop_assert_eq!(
            are_conjugate_subgroups(&h, &other).unwrap().is_some(),
            are_conjugate_subgroups(&other, &h).unwrap().is_some()
        );
    }
}
