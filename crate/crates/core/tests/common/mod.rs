#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use nilact::actions::{ActionOnGroup, SemidirectProduct};
use nilact::catalog;
use nilact::group::{Elem, Group, Subgroup};
use nilact::harness::{all_actions, ActionInstance};

pub struct Product {
    pub id: String,
    pub action: Arc<ActionOnGroup>,
    pub p: SemidirectProduct,
}

pub fn instances() -> &'static [ActionInstance] {
    static CELL: OnceLock<Vec<ActionInstance>> = OnceLock::new();
    CELL.get_or_init(|| all_actions().unwrap())
}

pub fn products() -> &'static [Product] {
    static CELL: OnceLock<Vec<Product>> = OnceLock::new();
    CELL.get_or_init(|| {
        instances()
            .iter()
            .map(|i| Product {
                id: i.id.clone(),
                action: i.action.clone(),
                p: SemidirectProduct::new(i.action.clone()).unwrap(),
            })
            .collect()
    })
}

/// Catalog groups plus every semidirect product of the action catalog.
pub fn groups() -> &'static [Arc<Group>] {
    static CELL: OnceLock<Vec<Arc<Group>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut gs = vec![
            catalog::cyclic(12),
            catalog::abelian(&[2, 2, 3]),
            catalog::dihedral(5),
            catalog::dihedral(6),
            catalog::quaternion8(),
            catalog::heisenberg(3),
            catalog::symmetric(3).unwrap(),
            catalog::symmetric(4).unwrap(),
            catalog::alternating(4).unwrap(),
        ]
        .into_iter()
        .map(Arc::new)
        .collect::<Vec<_>>();
        gs.extend(products().iter().map(|p| p.p.group.clone()));
        gs
    })
}

pub fn pick<T>(items: &[T], i: usize) -> &T {
    &items[i % items.len()]
}

pub fn elem(g: &Group, i: usize) -> Elem {
    i % g.order()
}

/// Subgroup generated by two sampled elements.
pub fn sub2(g: &Arc<Group>, a: usize, b: usize) -> Subgroup {
    Subgroup::generated(g, &[elem(g, a), elem(g, b)]).unwrap()
}

pub fn normal_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    nilact::harness::instances::small_subgroups(g).into_iter().filter(|s| s.is_normal()).collect()
}
