mod common;

use common::{elem, groups, pick, products, sub2};
use nilact::actions::coset_gset;
use nilact::group::Subgroup;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Conjugating an embedded `n` by an embedded `j` applies `j⁻¹`.
    #[test]
    fn semidirect_realizes_action(pi in 0usize..1000, n in 0usize..1000, j in 0usize..1000) {
        let prod = pick(products(), pi);
        let (a, p) = (&prod.action, &prod.p);
        let n = elem(a.target(), n);
        let j = elem(a.actor(), j);
        let (ej, en) = (p.pair(0, j), p.pair(n, 0));
        let g = &p.group;
        let lhs = g.mul(g.mul(g.inv(ej), en), ej);
        prop_assert_eq!(lhs, p.pair(a.apply(a.actor().inv(j), n), 0));
    }

    #[test]
    fn transitivity_criterion(gi in 0usize..1000, ni in 0usize..1000, a in 0usize..1000, b in 0usize..1000) {
        let g = pick(groups(), gi);
        let normals = common::normal_subgroups(g);
        let n = pick(&normals, ni);
        let h = sub2(g, a, b);
        let omega = coset_gset(&h);
        let nh = n.product_set(&h).unwrap();
        prop_assert_eq!(omega.is_transitive(n), nh.iter().all(|&x| x));
    }

    #[test]
    fn orbit_stabilizer(gi in 0usize..1000, a in 0usize..1000, b in 0usize..1000, c in 0usize..1000, d in 0usize..1000) {
        let g = pick(groups(), gi);
        let omega = coset_gset(&sub2(g, a, b));
        let whole = Subgroup::whole(g);
        let point = c % omega.size();
        prop_assert_eq!(omega.orbit(&whole, point).len() * omega.stabilizer(point).unwrap().order(), g.order());
        // the same on a subgroup acting by restriction
        let s = sub2(g, c, d);
        let orbit = omega.orbit(&s, point).len();
        let stab = s.elements().iter().filter(|&&x| omega.act(x, point) == point).count();
        prop_assert_eq!(orbit * stab, s.order());
    }

    /// `Fix(g⁻¹Sg) = g⁻¹·Fix(S)`.
    #[test]
    fn fixed_points_move_with_conjugation(gi in 0usize..1000, a in 0usize..1000, b in 0usize..1000, c in 0usize..1000, x in 0usize..1000) {
        let g = pick(groups(), gi);
        let omega = coset_gset(&sub2(g, a, b));
        let s = sub2(g, c, c + 1);
        let x = elem(g, x);
        let mut moved: Vec<_> = omega.fixed_points(&s).into_iter().map(|w| omega.act(g.inv(x), w)).collect();
        moved.sort_unstable();
        prop_assert_eq!(omega.fixed_points(&s.conjugate(x)), moved);
    }
}
