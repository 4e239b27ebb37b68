//! Nilpotency, Sylow and Hall subgroups, subgroup and complement enumeration,
//! and local conjugacy.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{are_conjugate_subgroups, normalizer, Elem, Group, Subgroup};

/// Default number of closures the Sylow search may compute.
pub const DEFAULT_SYLOW_BUDGET: u64 = 1_000_000;

/// Default number of subgroup closures the subgroup enumerator may compute.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 5_000_000;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Sorted distinct prime divisors, by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut q = 1;
    while n.is_multiple_of(p) {
        n /= p;
        q *= p;
    }
    q
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// Number of prime factors counted with multiplicity. Every group of order
/// `n` is generated by at most this many elements.
pub fn prime_factor_count(mut n: u64) -> usize {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    count + usize::from(n > 1)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Primes dividing both orders.
pub fn shared_primes(a: usize, b: usize) -> Vec<u64> {
    prime_divisors(gcd(a as u64, b as u64))
}

/// `[A, B]` for subgroups of a common parent.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    let g = a.parent();
    let mut seeds: Vec<Elem> = Vec::new();
    let mut seen = vec![false; g.order()];
    for &x in a.elements() {
        for &y in b.elements() {
            let c = g.commutator(x, y);
            if !seen[c] {
                seen[c] = true;
                seeds.push(c);
            }
        }
    }
    Subgroup::generated(g, &seeds)
}

/// `γ₁ = G`, `γᵢ₊₁ = [γᵢ, G]`, stopping once the series stabilizes.
pub fn lower_central_series(g: &Arc<Group>) -> Vec<Subgroup> {
    let whole = Subgroup::whole(g);
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_subgroup(last, &whole).expect("same parent");
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &Arc<Group>) -> bool {
    lower_central_series(g).last().is_some_and(Subgroup::is_trivial)
}

/// Elements whose order is a power of `p` (for `coprime = false`) or prime
/// to `p` (for `coprime = true`).
fn order_filter(g: &Arc<Group>, p: u64, coprime: bool) -> Subgroup {
    let mask: Vec<bool> = g
        .elements()
        .map(|x| {
            let o = g.element_order(x) as u64;
            if coprime {
                !o.is_multiple_of(p)
            } else {
                is_p_power(o, p)
            }
        })
        .collect();
    Subgroup::from_mask_unchecked(g, &mask)
}

/// A Sylow `p`-subgroup. For nilpotent groups this is the unique one (all
/// `p`-elements); otherwise a `p`-subgroup is grown inside successive
/// normalizers until it reaches the full `p`-part of the order.
pub fn sylow_subgroup(g: &Arc<Group>, p: u64) -> Result<Subgroup> {
    sylow_subgroup_with_budget(g, p, DEFAULT_SYLOW_BUDGET)
}

pub fn sylow_subgroup_with_budget(g: &Arc<Group>, p: u64, budget: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order() as u64, p) as usize;
    let candidate = order_filter(g, p, false);
    if candidate.order() == target {
        // the p-elements already form a group of the right order
        if let Ok(sub) = Subgroup::from_elements(g, candidate.elements()) {
            return Ok(sub);
        }
    }
    let mut current = Subgroup::trivial(g);
    let mut spent = 0u64;
    while current.order() < target {
        let norm = normalizer(&current);
        let mut grown = None;
        for &x in norm.elements() {
            if current.contains(x) || !is_p_power(g.element_order(x) as u64, p) {
                continue;
            }
            spent += 1;
            if spent > budget {
                return Err(Error::BudgetExceeded { what: format!("Sylow {p}-subgroup search"), budget });
            }
            let mut seeds = current.elements().to_vec();
            seeds.push(x);
            let next = Subgroup::generated(g, &seeds)?;
            if is_p_power(next.order() as u64, p) {
                grown = Some(next);
                break;
            }
        }
        match grown {
            Some(next) => current = next,
            None => return sylow_by_enumeration(g, p, target, budget),
        }
    }
    Ok(current)
}

fn sylow_by_enumeration(g: &Arc<Group>, p: u64, target: usize, budget: u64) -> Result<Subgroup> {
    let gens = (target as f64).log(p as f64).round() as usize;
    enumerate_subgroups_of_order_with_budget(g, target, gens.max(1), budget)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::BudgetExceeded { what: format!("Sylow {p}-subgroup search"), budget })
}

/// All Sylow `p`-subgroups, as the distinct conjugates of one of them, sorted
/// by element list.
pub fn all_sylow_subgroups(g: &Arc<Group>, p: u64) -> Result<Vec<Subgroup>> {
    let s = sylow_subgroup(g, p)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for by in g.elements() {
        let c = s.conjugate(by);
        if seen.insert(c.elements().to_vec()) {
            out.push(c);
        }
    }
    out.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(out)
}

/// Hall `p′`-subgroup of a nilpotent group: elements of order prime to `p`.
pub fn hall_pprime(j: &Arc<Group>, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_nilpotent(j) {
        return Err(Error::NotNilpotent);
    }
    Ok(order_filter(j, p, true))
}

/// A nilpotent group as the internal direct product of its Sylow subgroups.
#[derive(Clone, Debug)]
pub struct NilpotentDecomposition {
    pub parent: Arc<Group>,
    pub primes: Vec<u64>,
    pub sylow_parts: Vec<Subgroup>,
}

impl NilpotentDecomposition {
    pub fn part(&self, p: u64) -> Option<&Subgroup> {
        self.primes.iter().position(|&q| q == p).map(|i| &self.sylow_parts[i])
    }

    /// The `p`-component of `x`: the unique element of the Sylow `p`-part
    /// with `x = ∏ components`.
    pub fn component(&self, x: Elem, p: u64) -> Elem {
        primary_component(&self.parent, x, p)
    }
}

/// `x^e` with `e ≡ 1 (mod p-part of |x|)` and `e ≡ 0 (mod p′-part)`: the
/// `p`-part of `x` in the cyclic group it generates.
pub fn primary_component(g: &Group, x: Elem, p: u64) -> Elem {
    let o = g.element_order(x) as u64;
    let q = p_part(o, p);
    let r = o / q;
    if q == 1 {
        return 0;
    }
    // r·(r⁻¹ mod q)
    let r_inv = (1..q).find(|&t| (r * t) % q == 1).unwrap_or(1);
    g.pow(x, r * r_inv)
}

pub fn nilpotent_decomposition(g: &Arc<Group>) -> Result<NilpotentDecomposition> {
    if !is_nilpotent(g) {
        return Err(Error::NotNilpotent);
    }
    let primes = prime_divisors(g.order() as u64);
    let sylow_parts = primes.iter().map(|&p| order_filter(g, p, false)).collect();
    Ok(NilpotentDecomposition { parent: g.clone(), primes, sylow_parts })
}

/// Every subgroup of order `m` generated by at most `max_gens` elements.
///
/// Subgroups are grown one generator at a time from the trivial subgroup,
/// discarding any whose order does not divide `m`. The result is complete
/// whenever every group of order `m` needs at most `max_gens` generators
/// (true for `max_gens = 3` and `m ≤ 8`, and for `p`-groups of order `p^k`
/// with `max_gens = k`). Sorted by element list.
pub fn enumerate_subgroups_of_order(g: &Arc<Group>, m: usize, max_gens: usize) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_of_order_with_budget(g, m, max_gens, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_subgroups_of_order_with_budget(
    g: &Arc<Group>,
    m: usize,
    max_gens: usize,
    budget: u64,
) -> Result<Vec<Subgroup>> {
    if m == 0 || !g.order().is_multiple_of(m) {
        return Ok(Vec::new());
    }
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.elements().to_vec());
    let mut layer = vec![trivial];
    let mut found: Vec<Subgroup> = layer.iter().filter(|s| s.order() == m).cloned().collect();
    let mut spent = 0u64;
    for _ in 0..max_gens {
        let mut next = Vec::new();
        for s in &layer {
            if s.order() == m {
                continue;
            }
            for x in g.elements() {
                if s.contains(x) {
                    continue;
                }
                spent += 1;
                if spent > budget {
                    return Err(Error::BudgetExceeded { what: format!("subgroups of order {m}"), budget });
                }
                let mut seeds = s.elements().to_vec();
                seeds.push(x);
                let t = Subgroup::generated(g, &seeds)?;
                if !m.is_multiple_of(t.order()) || !seen.insert(t.elements().to_vec()) {
                    continue;
                }
                if t.order() == m {
                    found.push(t.clone());
                }
                next.push(t);
            }
        }
        layer = next;
    }
    found.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(found)
}

/// Every complement `K` of the normal subgroup `n` (`K ∩ N = 1`, `KN = G`)
/// generated by at most `max_gens` elements.
pub fn complements(n: &Subgroup, max_gens: usize) -> Result<Vec<Subgroup>> {
    complements_with_budget(n, max_gens, DEFAULT_ENUMERATION_BUDGET)
}

/// All complements of `n`, with the generator bound taken from `|G/N|`.
pub fn all_complements(n: &Subgroup, budget: u64) -> Result<Vec<Subgroup>> {
    complements_with_budget(n, prime_factor_count(n.index() as u64).max(1), budget)
}

pub fn complements_with_budget(n: &Subgroup, max_gens: usize, budget: u64) -> Result<Vec<Subgroup>> {
    n.require_normal()?;
    let g = n.parent();
    let m = n.index();
    Ok(enumerate_subgroups_of_order_with_budget(g, m, max_gens, budget)?
        .into_iter()
        .filter(|k| k.elements().iter().all(|&x| x == 0 || !n.contains(x)))
        .collect())
}

/// Partitions `subgroups` into classes under conjugation by elements of
/// `by`. Returns class indices aligned with the input.
pub fn conjugacy_classes_under(subgroups: &[Subgroup], by: &Subgroup) -> Vec<usize> {
    let mut class = vec![usize::MAX; subgroups.len()];
    let mut next = 0;
    for i in 0..subgroups.len() {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = next;
        for &x in by.elements() {
            let c = subgroups[i].conjugate(x);
            if let Some(j) = subgroups.iter().position(|s| *s == c) {
                class[j] = next;
            }
        }
        next += 1;
    }
    class
}

/// Whether, for every prime `p` dividing `|H|`, a Sylow `p`-subgroup of `H`
/// is conjugate in the parent to a Sylow `p`-subgroup of `K`.
pub fn locally_conjugate(h: &Subgroup, k: &Subgroup) -> Result<bool> {
    if h.order() != k.order() {
        return Ok(false);
    }
    let (he, ke) = (h.to_group(), k.to_group());
    for p in prime_divisors(h.order() as u64) {
        // any two Sylow p-subgroups of H are conjugate in H, so one each suffices
        let sh = he.lift_subgroup(&sylow_subgroup(&he.group, p)?);
        let sk = ke.lift_subgroup(&sylow_subgroup(&ke.group, p)?);
        if are_conjugate_subgroups(&sh, &sk)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Sylow `p`-subgroup of a subgroup, as a subgroup of the same parent.
pub fn sylow_of(h: &Subgroup, p: u64) -> Result<Subgroup> {
    let e = h.to_group();
    Ok(e.lift_subgroup(&sylow_subgroup(&e.group, p)?))
}

/// Hall `p′`-subgroup of a nilpotent subgroup, as a subgroup of the same parent.
pub fn hall_of(h: &Subgroup, p: u64) -> Result<Subgroup> {
    let e = h.to_group();
    Ok(e.lift_subgroup(&hall_pprime(&e.group, p)?))
}

pub fn is_nilpotent_subgroup(h: &Subgroup) -> bool {
    is_nilpotent(&h.to_group().group)
}

/// Minimal-ish generating sequence: elements taken in decreasing order of
/// element order, keeping those that enlarge the span.
pub fn generating_sequence(h: &Subgroup) -> Vec<Elem> {
    let g = h.parent();
    let mut elems = h.elements().to_vec();
    elems.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(g);
    for x in elems {
        if span.order() == h.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = Subgroup::generated(g, &gens).expect("valid");
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, cyclic, dihedral, quaternion8};

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(shared_primes(6, 10), vec![2]);
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }

    #[test]
    fn nilpotency() {
        let c6 = arc(cyclic(6));
        assert!(is_nilpotent(&c6));
        assert_eq!(lower_central_series(&c6).len(), 2);
        let s3 = arc(dihedral(3));
        assert!(!is_nilpotent(&s3));
        assert_eq!(lower_central_series(&s3).last().unwrap().order(), 3);
        assert!(is_nilpotent(&arc(quaternion8())));
        assert!(is_nilpotent(&arc(catalog::heisenberg(3))));
        assert!(!is_nilpotent(&arc(catalog::alternating(4).unwrap())));
    }

    #[test]
    fn sylows() {
        assert_eq!(sylow_subgroup(&arc(cyclic(6)), 2).unwrap().order(), 2);
        let d4 = arc(dihedral(4));
        assert!(sylow_subgroup(&d4, 2).unwrap().is_whole());
        let s3 = arc(dihedral(3));
        assert_eq!(sylow_subgroup(&s3, 2).unwrap().order(), 2);
        assert_eq!(all_sylow_subgroups(&s3, 2).unwrap().len(), 3);
        let a5 = arc(catalog::alternating(5).unwrap());
        assert_eq!(sylow_subgroup(&a5, 2).unwrap().order(), 4);
        assert_eq!(all_sylow_subgroups(&a5, 5).unwrap().len(), 6);
        let s4 = arc(catalog::symmetric(4).unwrap());
        assert_eq!(sylow_subgroup(&s4, 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&s4, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn halls() {
        let c6 = arc(cyclic(6));
        assert_eq!(hall_pprime(&c6, 2).unwrap().order(), 3);
        assert!(hall_pprime(&c6, 5).unwrap().is_whole());
        assert_eq!(hall_pprime(&arc(dihedral(3)), 2), Err(Error::NotNilpotent));
    }

    #[test]
    fn decompositions() {
        let orders = |g: Group| {
            let d = nilpotent_decomposition(&arc(g)).unwrap();
            d.sylow_parts.iter().map(Subgroup::order).collect::<Vec<_>>()
        };
        assert_eq!(orders(cyclic(6)), vec![2, 3]);
        assert_eq!(orders(quaternion8()), vec![8]);
        assert_eq!(orders(cyclic(12)), vec![4, 3]);
        let c12 = arc(cyclic(12));
        let d = nilpotent_decomposition(&c12).unwrap();
        for x in c12.elements() {
            let (a, b) = (d.component(x, 2), d.component(x, 3));
            assert_eq!(c12.mul(a, b), x);
            assert!(d.part(2).unwrap().contains(a) && d.part(3).unwrap().contains(b));
        }
    }

    #[test]
    fn subgroup_enumeration() {
        let d4 = arc(dihedral(4));
        assert_eq!(enumerate_subgroups_of_order(&d4, 2, 1).unwrap().len(), 5);
        assert_eq!(enumerate_subgroups_of_order(&d4, 4, 2).unwrap().len(), 3);
        assert_eq!(enumerate_subgroups_of_order(&d4, 8, 1).unwrap().len(), 0);
        assert_eq!(enumerate_subgroups_of_order(&d4, 8, 2).unwrap().len(), 1);
        assert_eq!(enumerate_subgroups_of_order(&d4, 3, 2).unwrap().len(), 0);
        assert!(matches!(enumerate_subgroups_of_order_with_budget(&d4, 4, 2, 3), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn complement_enumeration() {
        let d4 = arc(dihedral(4));
        let rot = Subgroup::generated(&d4, &[catalog::rot(1)]).unwrap();
        assert_eq!(complements(&rot, 3).unwrap().len(), 4);
        let c4 = arc(cyclic(4));
        assert!(complements(&Subgroup::generated(&c4, &[2]).unwrap(), 3).unwrap().is_empty());
        let whole = complements(&Subgroup::trivial(&d4), 3).unwrap();
        assert_eq!(whole.len(), 1);
        assert!(whole[0].is_whole());
    }

    #[test]
    fn local_conjugacy() {
        let d4 = arc(dihedral(4));
        let r = Subgroup::generated(&d4, &[catalog::refl(4, 0)]).unwrap();
        let ra = Subgroup::generated(&d4, &[catalog::refl(4, 1)]).unwrap();
        let ra2 = Subgroup::generated(&d4, &[catalog::refl(4, 2)]).unwrap();
        assert!(locally_conjugate(&r, &ra2).unwrap());
        assert!(!locally_conjugate(&r, &ra).unwrap());
        assert!(locally_conjugate(&Subgroup::trivial(&d4), &Subgroup::trivial(&d4)).unwrap());
    }

    #[test]
    fn generating_sequences_span() {
        for g in [cyclic(12), catalog::abelian(&[2, 2, 2]), quaternion8(), catalog::heisenberg(3)] {
            let g = arc(g);
            let whole = Subgroup::whole(&g);
            let gens = generating_sequence(&whole);
            assert!(Subgroup::generated(&g, &gens).unwrap().is_whole());
        }
        let c12 = arc(cyclic(12));
        assert_eq!(generating_sequence(&Subgroup::whole(&c12)).len(), 1);
    }
}
