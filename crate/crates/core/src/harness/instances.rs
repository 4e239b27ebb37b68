//! The shipped instance catalog.

use std::sync::Arc;

use crate::actions::{coset_gset, ActionOnGroup, SemidirectProduct};
use crate::catalog::{self, action_from_autos, refl, rot, Auto};
use crate::error::Result;
use crate::group::{Elem, Group, Subgroup};
use crate::structure::{gcd, is_nilpotent, prime_divisors, shared_primes};

use super::suite::{Check, CheckKind, Expect};

/// A named action of `J` on `N`.
#[derive(Clone)]
pub struct ActionInstance {
    pub id: String,
    pub action: Arc<ActionOnGroup>,
}

impl ActionInstance {
    pub fn nilpotent(&self) -> bool {
        is_nilpotent(self.action.actor()) && is_nilpotent(self.action.target())
    }

    pub fn coprime(&self) -> bool {
        gcd(self.action.actor().order() as u64, self.action.target().order() as u64) == 1
    }

    pub fn shared_primes(&self) -> Vec<u64> {
        shared_primes(self.action.actor().order(), self.action.target().order())
    }

    pub fn product_order(&self) -> usize {
        self.action.actor().order() * self.action.target().order()
    }
}

fn inst(id: &str, j: Group, n: Group, gens: &[Elem], autos: &[Auto]) -> Result<ActionInstance> {
    Ok(ActionInstance { id: id.into(), action: Arc::new(action_from_autos(j, n, gens, autos)?) })
}

fn trivial(id: &str, j: Group, n: Group) -> ActionInstance {
    ActionInstance { id: id.into(), action: Arc::new(ActionOnGroup::trivial(Arc::new(j), Arc::new(n))) }
}

/// `i → j → k → i` on `Q8`.
fn q8_cycle() -> Auto {
    Auto::Explicit(vec![0, 1, 4, 5, 6, 7, 2, 3])
}

/// `(a, b, c) ↦ (−a, −b, c)` on `Heis(3)`.
fn heis3_negate() -> Auto {
    let neg = |x: usize| (3 - x % 3) % 3;
    Auto::Explicit((0..27).map(|x| neg(x) + 3 * neg(x / 3) + 9 * (x / 9)).collect())
}

/// `e1 → e2 → e1 + e2` on `C2 × C2`.
fn v4_cycle() -> Auto {
    Auto::Explicit(vec![0, 2, 3, 1])
}

/// Actions with `J` and `N` both nilpotent.
pub fn nilpotent_actions() -> Result<Vec<ActionInstance>> {
    use catalog::{abelian, cyclic, dihedral, heisenberg, quaternion8};
    let d4 = || dihedral(4);
    Ok(vec![
        inst("c2_inv_c4", cyclic(2), cyclic(4), &[1], &[Auto::Inversion])?,
        inst("c2_swap_v4", cyclic(2), abelian(&[2, 2]), &[1], &[Auto::Swap])?,
        trivial("c2_triv_c2", cyclic(2), cyclic(2)),
        inst("c6_inv_c3", cyclic(6), cyclic(3), &[1], &[Auto::Inversion])?,
        inst("c6_inv_c6", cyclic(6), cyclic(6), &[1], &[Auto::Inversion])?,
        inst("c12_inv_c6", cyclic(12), cyclic(6), &[1], &[Auto::Inversion])?,
        inst("c3_cycle_q8", cyclic(3), quaternion8(), &[1], &[q8_cycle()])?,
        inst("c3_inner_heis3", cyclic(3), heisenberg(3), &[1], &[Auto::Inner(1)])?,
        inst("c2_inv_c3", cyclic(2), cyclic(3), &[1], &[Auto::Inversion])?,
        inst("c4_inv_c4", cyclic(4), cyclic(4), &[1], &[Auto::Inversion])?,
        inst("c2_inv_c8", cyclic(2), cyclic(8), &[1], &[Auto::Inversion])?,
        inst("c2_pow3_c8", cyclic(2), cyclic(8), &[1], &[Auto::Power(3)])?,
        inst("c2_pow5_c8", cyclic(2), cyclic(8), &[1], &[Auto::Power(5)])?,
        inst("c4_inner_q8", cyclic(4), quaternion8(), &[1], &[Auto::Inner(2)])?,
        inst("v4_inner_q8", abelian(&[2, 2]), quaternion8(), &[1, 2], &[Auto::Inner(2), Auto::Inner(4)])?,
        trivial("c3_triv_c3", cyclic(3), cyclic(3)),
        inst("c3_pow4_c9", cyclic(3), cyclic(9), &[1], &[Auto::Power(4)])?,
        inst("c3_pow2_c7", cyclic(3), cyclic(7), &[1], &[Auto::Power(2)])?,
        inst("c4_pow2_c5", cyclic(4), cyclic(5), &[1], &[Auto::Power(2)])?,
        inst("c2_swap_c3xc3", cyclic(2), abelian(&[3, 3]), &[1], &[Auto::Swap])?,
        inst("c2_inv_c2xc4", cyclic(2), abelian(&[2, 4]), &[1], &[Auto::Inversion])?,
        trivial("v4_triv_c2", abelian(&[2, 2]), cyclic(2)),
        inst("c6_cycle_q8", cyclic(6), quaternion8(), &[1], &[q8_cycle()])?,
        inst("c2_neg_heis3", cyclic(2), heisenberg(3), &[1], &[heis3_negate()])?,
        inst("c2_inv_c12", cyclic(2), cyclic(12), &[1], &[Auto::Inversion])?,
        trivial("d4_triv_c2", d4(), cyclic(2)),
        inst("d4_sign_c4", d4(), cyclic(4), &[rot(1), refl(4, 0)], &[Auto::Identity, Auto::Inversion])?,
        inst("q8_sign_c3", quaternion8(), cyclic(3), &[2, 4], &[Auto::Inversion, Auto::Inversion])?,
        inst("c3_cycle_v4", cyclic(3), abelian(&[2, 2]), &[1], &[v4_cycle()])?,
        trivial("c2_triv_c3", cyclic(2), cyclic(3)),
    ])
}

/// Actions on abelian `N` by non-nilpotent `J`.
pub fn abelian_actions() -> Result<Vec<ActionInstance>> {
    use catalog::{abelian, cyclic, dihedral};
    let s3 = || dihedral(3);
    let a4 = Arc::new(catalog::alternating(4)?);
    let v4 = Subgroup::from_elements(&a4, &a4.elements().filter(|&x| a4.element_order(x) <= 2).collect::<Vec<_>>())?;
    Ok(vec![
        inst("s3_sign_c3", s3(), cyclic(3), &[rot(1), refl(3, 0)], &[Auto::Identity, Auto::Inversion])?,
        inst("s3_sign_c4", s3(), cyclic(4), &[rot(1), refl(3, 0)], &[Auto::Identity, Auto::Inversion])?,
        inst("s3_gl2_v4", s3(), abelian(&[2, 2]), &[rot(1), refl(3, 0)], &[v4_cycle(), Auto::Swap])?,
        trivial("s3_triv_c2", s3(), cyclic(2)),
        ActionInstance {
            id: "a4_conj_v4".into(),
            action: Arc::new(ActionOnGroup::conjugation(&v4, &Subgroup::whole(&a4))?),
        },
    ])
}

pub fn all_actions() -> Result<Vec<ActionInstance>> {
    let mut out = nilpotent_actions()?;
    out.extend(abelian_actions()?);
    Ok(out)
}

/// Distinct subgroups generated by one or two elements, sorted by element
/// list.
pub fn small_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let cyclic: Vec<Subgroup> = g.elements().map(|x| Subgroup::generated(g, &[x]).expect("valid")).collect();
    for x in g.elements() {
        for y in x..g.order() {
            if x != y && (cyclic[x].contains(y) || cyclic[y].contains(x)) {
                continue;
            }
            let s = if x == y { cyclic[x].clone() } else { Subgroup::generated(g, &[x, y]).expect("valid") };
            if seen.insert(s.elements().to_vec()) {
                out.push(s);
            }
        }
    }
    out.sort_by(|a, b| a.elements().cmp(b.elements()));
    out
}

/// Proper supplements `H` of `N` (`HN = G`), at most `limit`, evenly spaced
/// through the sorted list.
pub fn supplements(n: &Subgroup, limit: usize) -> Vec<Subgroup> {
    let g = n.parent();
    let all: Vec<Subgroup> = small_subgroups(g)
        .into_iter()
        .filter(|h| !h.is_whole() && h.product_set(n).expect("same parent").iter().all(|&b| b))
        .collect();
    spread(all, limit)
}

fn spread<T: Clone>(items: Vec<T>, limit: usize) -> Vec<T> {
    if items.len() <= limit {
        return items;
    }
    (0..limit).map(|i| items[i * items.len() / limit].clone()).collect()
}

const ORACLE_MAX: usize = 8;
const COMPLEMENT_MAX: usize = 200;
const SUPPLEMENT_MAX: usize = 96;
const SUPPLEMENTS_PER_INSTANCE: usize = 6;

/// The default suite: every check on every catalog instance it applies to.
pub fn default_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let push = |checks: &mut Vec<Check>, id: String, kind: CheckKind, expect: Expect| {
        checks.push(Check { id, kind, expect });
    };
    for a in nilpotent_actions()? {
        let act = a.action.clone();
        let (jo, no) = (act.actor().order(), act.target().order());
        if jo <= ORACLE_MAX && no <= ORACLE_MAX {
            push(&mut checks, a.id.clone(), CheckKind::CocycleOracle { action: act.clone() }, Expect::Pass);
        }
        if a.product_order() <= COMPLEMENT_MAX {
            push(&mut checks, a.id.clone(), CheckKind::Complements { action: act.clone() }, Expect::Pass);
        }
        push(&mut checks, a.id.clone(), CheckKind::Lemma1 { action: act.clone() }, Expect::Pass);
        if a.coprime() {
            push(
                &mut checks,
                a.id.clone(),
                CheckKind::H1 { action: act.clone(), classes: Some(1), cocycles: None },
                Expect::Pass,
            );
        }
        if act.target().is_abelian() {
            push(&mut checks, a.id.clone(), CheckKind::Eq3 { action: act.clone() }, Expect::Pass);
        }
        let p = SemidirectProduct::new(act.clone())?;
        let n = p.n_subgroup();
        push(&mut checks, a.id.clone(), CheckKind::Prop2 { normal: n.clone() }, Expect::Pass);
        push(&mut checks, a.id.clone(), CheckKind::Prop3 { normal: n.clone() }, Expect::Any);
        push(
            &mut checks,
            format!("{}/cosets_of_j", a.id),
            CheckKind::Thm4 { action: act.clone(), gset: Arc::new(coset_gset(&p.j_subgroup())) },
            Expect::Pass,
        );
        if a.product_order() <= SUPPLEMENT_MAX {
            let j = p.j_subgroup();
            for (i, h) in supplements(&n, SUPPLEMENTS_PER_INSTANCE).into_iter().enumerate() {
                push(
                    &mut checks,
                    format!("{}/h{i}", a.id),
                    CheckKind::Prop5 { normal: n.clone(), complement: j.clone(), subgroup: h.clone() },
                    Expect::Any,
                );
                push(
                    &mut checks,
                    format!("{}/h{i}", a.id),
                    CheckKind::Thm4 { action: act.clone(), gset: Arc::new(coset_gset(&h)) },
                    Expect::Any,
                );
            }
        }
        if prime_divisors(no as u64).len() >= 2 && a.product_order() <= SUPPLEMENT_MAX {
            let hs = spread(small_subgroups(&p.group), 24);
            push(&mut checks, a.id.clone(), CheckKind::Intersection { normal: n.clone(), subgroups: hs }, Expect::Pass);
        }
    }
    for a in abelian_actions()? {
        let act = a.action.clone();
        push(&mut checks, a.id.clone(), CheckKind::Eq3 { action: act.clone() }, Expect::Pass);
        if a.product_order() <= COMPLEMENT_MAX {
            push(&mut checks, a.id.clone(), CheckKind::Complements { action: act.clone() }, Expect::Pass);
        }
        let p = SemidirectProduct::new(act.clone())?;
        let n = p.n_subgroup();
        push(&mut checks, a.id.clone(), CheckKind::Prop2 { normal: n.clone() }, Expect::Pass);
        push(
            &mut checks,
            format!("{}/cosets_of_j", a.id),
            CheckKind::Thm4 { action: act.clone(), gset: Arc::new(coset_gset(&p.j_subgroup())) },
            Expect::HypothesisFail,
        );
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let acts = nilpotent_actions().unwrap();
        assert!(acts.len() >= 20);
        assert!(acts.iter().all(|a| a.nilpotent()));
        assert!(acts.iter().filter(|a| !a.coprime()).count() >= 5);
        assert!(acts.iter().any(|a| a.shared_primes().len() == 2));
        let mut ids: Vec<String> = all_actions().unwrap().into_iter().map(|a| a.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn supplements_supplement() {
        let a = nilpotent_actions().unwrap().remove(0);
        let p = SemidirectProduct::new(a.action).unwrap();
        let n = p.n_subgroup();
        let hs = supplements(&n, 100);
        assert!(!hs.is_empty());
        for h in &hs {
            assert!(!h.is_whole());
            assert_eq!(h.order() * n.order() / h.intersection(&n).unwrap().order(), p.group.order());
        }
    }
}
