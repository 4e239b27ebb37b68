//! Crossed homomorphisms and the pointed set `H¹(K, N)`.
//!
//! Conventions (machine-checked by the tests rather than taken on faith):
//!
//! * cocycle identity: `φ(jj′) = φ(j) · ʲφ(j′)`
//! * cohomologous: `φ′(j) = n⁻¹ φ(j) ʲn` for one `n ∈ N`
//! * conjugate cocycle: `φʲ(x) = ʲ⁻¹φ(j x j⁻¹)` on `K^j = j⁻¹ K j`
//!
//! With these, `F(φ) = {(φ(j), j)}` is a complement of `N` in `N ⋊ J`,
//! conjugating `F(φ)` by `n` gives `F` of the shifted cocycle, and for a
//! cocycle on all of `J`, `φʲ ∼ φ` with witness `φ(j⁻¹)`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::actions::{ActionOnGroup, SemidirectProduct};
use crate::error::{Error, Result};
use crate::group::{Elem, GroupHom, Subgroup};
use crate::par;
use crate::structure::{
    generating_sequence, hall_pprime, is_nilpotent, is_p_power, primary_component, shared_primes, sylow_subgroup,
};

/// Cap on `|N|^#generators` candidate assignments in [`cocycles`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Cap on search-tree nodes in [`cocycles_bruteforce`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

/// A crossed homomorphism `K → N` for a subgroup `K` of the acting group.
/// `values[i]` is the value at the `i`-th smallest element of `K`.
#[derive(Clone)]
pub struct Cocycle {
    action: Arc<ActionOnGroup>,
    domain: Subgroup,
    values: Vec<Elem>,
}

impl std::fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cocycle{:?}", self.values)
    }
}

impl PartialEq for Cocycle {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.values == other.values
    }
}

impl Eq for Cocycle {}

impl Cocycle {
    /// Validates the cocycle identity.
    pub fn new(action: Arc<ActionOnGroup>, domain: Subgroup, values: Vec<Elem>) -> Result<Cocycle> {
        if values.len() != domain.order() {
            return Err(Error::DomainMismatch);
        }
        for &v in &values {
            action.target().check(v)?;
        }
        let c = Cocycle { action, domain, values };
        if let Some((a, b)) = c.identity_violation() {
            return Err(Error::NotAHomomorphism { a, b });
        }
        Ok(c)
    }

    fn unchecked(action: Arc<ActionOnGroup>, domain: Subgroup, values: Vec<Elem>) -> Cocycle {
        Cocycle { action, domain, values }
    }

    /// The all-identity cocycle.
    pub fn trivial(action: Arc<ActionOnGroup>, domain: Subgroup) -> Cocycle {
        let values = vec![0; domain.order()];
        Cocycle { action, domain, values }
    }

    fn identity_violation(&self) -> Option<(Elem, Elem)> {
        let (j, n) = (self.action.actor(), self.action.target());
        for &a in self.domain.elements() {
            for &b in self.domain.elements() {
                let lhs = self.value(j.mul(a, b));
                let rhs = n.mul(self.value(a), self.action.apply(a, self.value(b)));
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.identity_violation().is_none()
    }

    pub fn action(&self) -> &Arc<ActionOnGroup> {
        &self.action
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    /// `φ(j)` for `j` in the domain.
    #[inline]
    pub fn value(&self, j: Elem) -> Elem {
        self.values[self.domain.position(j).expect("element outside the cocycle's domain")]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `j ↦ n⁻¹ φ(j) ʲn`.
    pub fn shift(&self, n: Elem) -> Cocycle {
        let values = shifted(&self.action, &self.domain, &self.values, n);
        Cocycle::unchecked(self.action.clone(), self.domain.clone(), values)
    }

    pub fn to_json(&self) -> Value {
        json!({"domain": self.domain.elements(), "values": self.values})
    }
}

fn shifted(action: &ActionOnGroup, domain: &Subgroup, values: &[Elem], n: Elem) -> Vec<Elem> {
    let ng = action.target();
    let ninv = ng.inv(n);
    domain.elements().iter().zip(values).map(|(&j, &v)| ng.mul(ng.mul(ninv, v), action.apply(j, n))).collect()
}

fn check_domain(action: &ActionOnGroup, k: &Subgroup) -> Result<()> {
    if Arc::ptr_eq(k.parent(), action.actor()) || **k.parent() == **action.actor() {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// Spanning tree of the Cayley graph of `K` plus the non-tree edges, all in
/// domain positions.
struct CayleyPlan {
    gens: Vec<Elem>,
    tree: Vec<(usize, usize, usize)>,
    checks: Vec<(usize, usize, usize)>,
}

impl CayleyPlan {
    fn new(k: &Subgroup) -> CayleyPlan {
        let g = k.parent();
        let gens = generating_sequence(k);
        let mut reached = vec![false; k.order()];
        reached[0] = true;
        let mut order = vec![0usize];
        let (mut tree, mut checks) = (Vec::new(), Vec::new());
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for (gi, &gen) in gens.iter().enumerate() {
                let y = k.position(g.mul(k.elements()[x], gen)).expect("closed");
                if reached[y] {
                    checks.push((x, gi, y));
                } else {
                    reached[y] = true;
                    tree.push((x, gi, y));
                    order.push(y);
                }
            }
            i += 1;
        }
        CayleyPlan { gens, tree, checks }
    }

    /// Propagates generator values; `None` if they violate a relation.
    fn propagate(&self, action: &ActionOnGroup, k: &Subgroup, gen_values: &[Elem]) -> Option<Vec<Elem>> {
        let ng = action.target();
        let elems = k.elements();
        let mut values = vec![0; k.order()];
        let step = |values: &[Elem], x: usize, gi: usize| ng.mul(values[x], action.apply(elems[x], gen_values[gi]));
        for &(x, gi, y) in &self.tree {
            values[y] = step(&values, x, gi);
        }
        for &(x, gi, y) in &self.checks {
            if step(&values, x, gi) != values[y] {
                return None;
            }
        }
        Some(values)
    }
}

/// `Z¹(K, N)`, sorted by value table.
pub fn cocycles(action: &Arc<ActionOnGroup>, k: &Subgroup) -> Result<Vec<Cocycle>> {
    cocycles_with_budget(action, k, DEFAULT_ENUMERATION_BUDGET)
}

/// Enumerates `Z¹(K, N)` by choosing values on a generating sequence of `K`
/// and propagating them along the Cayley graph, discarding assignments that
/// break a relation.
pub fn cocycles_with_budget(action: &Arc<ActionOnGroup>, k: &Subgroup, budget: u64) -> Result<Vec<Cocycle>> {
    check_domain(action, k)?;
    let plan = CayleyPlan::new(k);
    let m = action.target().order() as u64;
    let candidates = (0..plan.gens.len()).try_fold(1u64, |acc, _| acc.checked_mul(m));
    let candidates = match candidates {
        Some(c) if c <= budget => c as usize,
        _ => return Err(Error::BudgetExceeded { what: "cocycle candidates".into(), budget }),
    };
    let m = m as usize;
    let mut tables = par::filter_map_range(candidates, |mut idx| {
        let gen_values: Vec<Elem> = (0..plan.gens.len())
            .map(|_| {
                let v = idx % m;
                idx /= m;
                v
            })
            .collect();
        plan.propagate(action, k, &gen_values)
    });
    tables.sort_unstable();
    Ok(tables.into_iter().map(|v| Cocycle::unchecked(action.clone(), k.clone(), v)).collect())
}

/// Independent oracle for [`cocycles`]: every map `K → N` is tested against
/// the cocycle identity directly. Maps are built one value at a time and a
/// partial map is abandoned as soon as a fully-assigned triple
/// `(a, b, ab)` violates the identity, so every pruned map fails the test.
/// The budget caps the number of search-tree nodes.
pub fn cocycles_bruteforce(action: &Arc<ActionOnGroup>, k: &Subgroup, budget: u64) -> Result<Vec<Cocycle>> {
    check_domain(action, k)?;
    let jg = action.actor();
    let elems = k.elements();
    let size = elems.len();
    // triples (a, b, ab) in positions, grouped by the last position assigned
    let mut due: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); size];
    for a in 0..size {
        for b in 0..size {
            let c = k.position(jg.mul(elems[a], elems[b])).expect("closed");
            due[a.max(b).max(c)].push((a, b, c));
        }
    }
    let mut found = Vec::new();
    let mut values = vec![0; size];
    let mut nodes = 0u64;

    fn search(
        t: usize,
        values: &mut Vec<Elem>,
        due: &[Vec<(usize, usize, usize)>],
        ctx: (&ActionOnGroup, &[Elem]),
        nodes: &mut u64,
        budget: u64,
        found: &mut Vec<Vec<Elem>>,
    ) -> Result<()> {
        if t == values.len() {
            found.push(values.clone());
            return Ok(());
        }
        let (action, elems) = ctx;
        let ng = action.target();
        for v in ng.elements() {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded { what: "brute-force cocycle search".into(), budget });
            }
            values[t] = v;
            let ok = due[t].iter().all(|&(a, b, c)| values[c] == ng.mul(values[a], action.apply(elems[a], values[b])));
            if ok {
                search(t + 1, values, due, ctx, nodes, budget, found)?;
            }
        }
        Ok(())
    }

    search(0, &mut values, &due, (action, elems), &mut nodes, budget, &mut found)?;
    Ok(found.into_iter().map(|v| Cocycle::unchecked(action.clone(), k.clone(), v)).collect())
}

/// Least `n` with `φ′(j) = n⁻¹ φ(j) ʲn` for every `j`.
pub fn cohomologous(phi: &Cocycle, psi: &Cocycle) -> Result<Option<Elem>> {
    if phi.domain != psi.domain || !Arc::ptr_eq(&phi.action, &psi.action) && phi.action.target() != psi.action.target()
    {
        return Err(Error::DomainMismatch);
    }
    let ng = phi.action.target();
    Ok(ng.elements().find(|&n| shifted(&phi.action, &phi.domain, &phi.values, n) == psi.values))
}

/// `H¹(K, N)`: the cocycles partitioned into cohomology classes.
///
/// Cocycles are sorted by value table and classes by their least member,
/// which serves as the representative. The all-identity cocycle is the least
/// cocycle, so the distinguished class is always class 0.
#[derive(Clone)]
pub struct CohomologySet {
    action: Arc<ActionOnGroup>,
    domain: Subgroup,
    cocycles: Vec<Cocycle>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    index: HashMap<Vec<Elem>, usize>,
}

impl std::fmt::Debug for CohomologySet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H1({} classes, {} cocycles)", self.classes.len(), self.cocycles.len())
    }
}

impl CohomologySet {
    /// Partitions a complete list of cocycles by the coboundary action.
    pub fn from_cocycles(action: Arc<ActionOnGroup>, domain: Subgroup, mut cocycles: Vec<Cocycle>) -> CohomologySet {
        cocycles.sort_by(|a, b| a.values.cmp(&b.values));
        let index: HashMap<Vec<Elem>, usize> =
            cocycles.iter().enumerate().map(|(i, c)| (c.values.clone(), i)).collect();
        let ng = action.target().clone();
        // canonical form: least value table in the orbit
        let canon = par::map_slice(&cocycles, |c| {
            ng.elements().map(|n| shifted(&action, &domain, &c.values, n)).min().expect("nonempty")
        });
        let mut class_of = vec![usize::MAX; cocycles.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_by_canon: HashMap<&[Elem], usize> = HashMap::new();
        for (i, key) in canon.iter().enumerate() {
            let next = classes.len();
            let c = *class_by_canon.entry(key.as_slice()).or_insert(next);
            if c == next {
                classes.push(Vec::new());
            }
            classes[c].push(i);
            class_of[i] = c;
        }
        CohomologySet { action, domain, cocycles, class_of, classes, index }
    }

    pub fn action(&self) -> &Arc<ActionOnGroup> {
        &self.action
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.len() == 1
    }

    pub fn num_cocycles(&self) -> usize {
        self.cocycles.len()
    }

    pub fn cocycles(&self) -> &[Cocycle] {
        &self.cocycles
    }

    pub fn distinguished(&self) -> usize {
        0
    }

    pub fn representative(&self, class: usize) -> &Cocycle {
        &self.cocycles[self.classes[class][0]]
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &Cocycle> {
        self.classes[class].iter().map(|&i| &self.cocycles[i])
    }

    pub fn class_of_index(&self, cocycle: usize) -> usize {
        self.class_of[cocycle]
    }

    /// Class of a value table on this domain, if it is a cocycle.
    pub fn class_of_values(&self, values: &[Elem]) -> Option<usize> {
        self.index.get(values).map(|&i| self.class_of[i])
    }

    pub fn class_of(&self, phi: &Cocycle) -> Option<usize> {
        if phi.domain != self.domain {
            return None;
        }
        self.class_of_values(&phi.values)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "domain": self.domain.elements(),
            "classes": (0..self.len()).map(|c| self.representative(c).to_json()).collect::<Vec<_>>(),
            "distinguished": self.distinguished(),
        })
    }
}

pub fn h1(action: &Arc<ActionOnGroup>, k: &Subgroup) -> Result<CohomologySet> {
    h1_with_budget(action, k, DEFAULT_ENUMERATION_BUDGET)
}

pub fn h1_with_budget(action: &Arc<ActionOnGroup>, k: &Subgroup, budget: u64) -> Result<CohomologySet> {
    let z = cocycles_with_budget(action, k, budget)?;
    Ok(CohomologySet::from_cocycles(action.clone(), k.clone(), z))
}

/// `H¹(J, N)` on the whole acting group.
pub fn h1_full(action: &Arc<ActionOnGroup>) -> Result<CohomologySet> {
    h1(action, &Subgroup::whole(action.actor()))
}

/// `φ_K`: writes each `k ∈ K` as `(n, j)` and sets `φ_K(j) = n`.
pub fn complement_to_cocycle(p: &SemidirectProduct, k: &Subgroup) -> Result<Cocycle> {
    let n = p.n_subgroup();
    if k.order() != p.action.actor().order() {
        return Err(Error::NotAComplement(format!("order {} differs from |J|", k.order())));
    }
    if let Some(&x) = k.elements().iter().find(|&&x| x != 0 && n.contains(x)) {
        return Err(Error::NotAComplement(format!("meets N in {x}")));
    }
    let mut values = vec![0; k.order()];
    for &x in k.elements() {
        let (nv, j) = p.unpair(x);
        values[j] = nv;
    }
    Cocycle::new(p.action.clone(), Subgroup::whole(p.action.actor()), values)
}

/// `F(φ) = {(φ(j), j)}`.
pub fn cocycle_to_complement(p: &SemidirectProduct, phi: &Cocycle) -> Result<Subgroup> {
    if !phi.domain.is_whole() {
        return Err(Error::DomainMismatch);
    }
    let elems: Vec<Elem> = phi.domain.elements().iter().zip(&phi.values).map(|(&j, &v)| p.pair(v, j)).collect();
    Subgroup::from_elements(&p.group, &elems)
}

/// `φ|_{K′}`.
pub fn restrict(phi: &Cocycle, sub: &Subgroup) -> Result<Cocycle> {
    if !sub.is_subgroup_of(&phi.domain) {
        return Err(Error::NotASubgroup("restriction target is not inside the domain".into()));
    }
    let values = sub.elements().iter().map(|&j| phi.value(j)).collect();
    Ok(Cocycle::unchecked(phi.action.clone(), sub.clone(), values))
}

/// The class map `H¹(K, N) → H¹(K′, N)` induced by restriction, checked to
/// be well defined on every member of every class.
pub fn res_class_map(src: &CohomologySet, dst: &CohomologySet) -> Result<Vec<usize>> {
    (0..src.len())
        .map(|c| {
            let mut image = None;
            for phi in src.members(c) {
                let r = restrict(phi, &dst.domain)?;
                let t = dst.class_of(&r).ok_or_else(|| Error::Internal("restriction is not a cocycle".into()))?;
                match image {
                    Some(prev) if prev != t => {
                        return Err(Error::Internal(format!("restriction is not well defined on class {c}")))
                    }
                    _ => image = Some(t),
                }
            }
            Ok(image.expect("classes are nonempty"))
        })
        .collect()
}

/// `φʲ(x) = ʲ⁻¹φ(j x j⁻¹)` on `K^j`.
pub fn conjugate_cocycle(phi: &Cocycle, j: Elem) -> Cocycle {
    let jg = phi.action.actor();
    let jinv = jg.inv(j);
    let domain = phi.domain.conjugate(j);
    let values =
        domain.elements().iter().map(|&x| phi.action.apply(jinv, phi.value(jg.mul(jg.mul(j, x), jinv)))).collect();
    Cocycle::unchecked(phi.action.clone(), domain, values)
}

/// Classes of `H¹(K, N)` that are `J`-invariant: for every `j ∈ J`,
/// `φ` and `φʲ` are cohomologous on `K ∩ K^j`.
pub fn invariant_classes(h: &CohomologySet) -> Result<Vec<usize>> {
    let jg = h.action.actor();
    let flags = par::map_range(h.len(), |c| -> Result<bool> {
        let phi = h.representative(c);
        for j in jg.elements() {
            let conj = conjugate_cocycle(phi, j);
            let common = h.domain.intersection(&conj.domain)?;
            if cohomologous(&restrict(phi, &common)?, &restrict(&conj, &common)?)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let mut out = Vec::new();
    for (c, f) in flags.into_iter().enumerate() {
        if f? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Classes fixed by `φ ↦ φʲ` for every `j` in `by`, which must normalize the
/// domain.
pub fn fixed_classes(h: &CohomologySet, by: &Subgroup) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for c in 0..h.len() {
        let mut fixed = true;
        for &j in by.elements() {
            let conj = conjugate_cocycle(h.representative(c), j);
            if conj.domain != h.domain {
                return Err(Error::NotNormalized { j, n: 0 });
            }
            let t = h.class_of(&conj).ok_or_else(|| Error::Internal("conjugate is not a cocycle".into()))?;
            if t != c {
                fixed = false;
                break;
            }
        }
        if fixed {
            out.push(c);
        }
    }
    Ok(out)
}

/// Class map induced by a homomorphism of coefficient groups, for two
/// cohomology sets over the same domain. Checked on every class member.
pub fn coefficient_class_map(src: &CohomologySet, hom: &GroupHom, dst: &CohomologySet) -> Result<Vec<usize>> {
    if src.domain != dst.domain {
        return Err(Error::DomainMismatch);
    }
    (0..src.len())
        .map(|c| {
            let mut image = None;
            for phi in src.members(c) {
                let mapped: Vec<Elem> = phi.values.iter().map(|&v| hom.apply(v)).collect();
                let t = dst.class_of_values(&mapped).ok_or_else(|| Error::Internal("image is not a cocycle".into()))?;
                match image {
                    Some(prev) if prev != t => {
                        return Err(Error::Internal(format!("coefficient map not well defined on class {c}")))
                    }
                    _ => image = Some(t),
                }
            }
            Ok(image.expect("classes are nonempty"))
        })
        .collect()
}

/// The action of `J` on the Sylow `q`-subgroup `N_q` of a nilpotent `N`,
/// with the projection `N → N_q` (`n ↦` its `q`-component).
pub fn project_to_primary(action: &ActionOnGroup, q: u64) -> Result<(Arc<ActionOnGroup>, GroupHom)> {
    let ng = action.target();
    if !is_nilpotent(ng) {
        return Err(Error::NotNilpotent);
    }
    let nq = sylow_subgroup(ng, q)?;
    let emb = nq.to_group();
    let images: Vec<Elem> =
        ng.elements().map(|x| emb.local(primary_component(ng, x, q)).expect("q-component lies in N_q")).collect();
    let proj = GroupHom::new(ng.clone(), emb.group.clone(), images)?;
    Ok((Arc::new(action.push_forward(&proj)?), proj))
}

/// The action restricted to `N_q ≤ N` and the inclusion `N_q → N`.
pub fn primary_inclusion(action: &ActionOnGroup, q: u64) -> Result<(Arc<ActionOnGroup>, GroupHom)> {
    let ng = action.target();
    if !is_nilpotent(ng) {
        return Err(Error::NotNilpotent);
    }
    let nq = sylow_subgroup(ng, q)?;
    let restricted = action.restrict_target(&nq)?;
    let incl = GroupHom::new(restricted.target().clone(), ng.clone(), nq.elements().to_vec())?;
    Ok((Arc::new(restricted), incl))
}

/// Sizes and bijectivity of `H¹(J, N) → ∏_q H¹(J, N_q)` over the primes of `|N|`.
#[derive(Clone, Debug, Serialize)]
pub struct PrimaryProductReport {
    pub shared_primes: Vec<u64>,
    pub h1_classes: usize,
    /// `(q, |H¹(J, N_q)|)` for every prime `q` dividing `|N|`.
    pub factors: Vec<(u64, usize)>,
    pub bijective: bool,
    pub non_shared_trivial: bool,
}

/// Checks that projecting to primary components identifies `H¹(J, N)` with
/// the product over shared primes, and that the other primes contribute a
/// single class.
pub fn primary_product_check(action: &Arc<ActionOnGroup>) -> Result<PrimaryProductReport> {
    primary_product_check_with_budget(action, DEFAULT_ENUMERATION_BUDGET)
}

pub fn primary_product_check_with_budget(action: &Arc<ActionOnGroup>, budget: u64) -> Result<PrimaryProductReport> {
    let ng = action.target();
    let shared = shared_primes(action.actor().order(), ng.order());
    let whole = Subgroup::whole(action.actor());
    let h = h1_with_budget(action, &whole, budget)?;
    let mut factors = Vec::new();
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new(); h.len()];
    let mut product = 1usize;
    let mut non_shared_trivial = true;
    for q in crate::structure::prime_divisors(ng.order() as u64) {
        let (aq, proj) = project_to_primary(action, q)?;
        let hq = h1_with_budget(&aq, &whole, budget)?;
        let map = coefficient_class_map(&h, &proj, &hq)?;
        factors.push((q, hq.len()));
        if shared.contains(&q) {
            product *= hq.len();
            for (c, t) in map.into_iter().enumerate() {
                tuples[c].push(t);
            }
        } else if hq.len() != 1 {
            non_shared_trivial = false;
        }
    }
    let mut distinct = tuples.clone();
    distinct.sort();
    distinct.dedup();
    let bijective = distinct.len() == h.len() && product == h.len();
    Ok(PrimaryProductReport { shared_primes: shared, h1_classes: h.len(), factors, bijective, non_shared_trivial })
}

/// One prime's contribution to the Sylow-wise decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct SylowFactor {
    pub prime: u64,
    pub sylow_order: usize,
    pub hall_order: usize,
    /// `|H¹(J_p, N)|`.
    pub classes: usize,
    /// Classes of `H¹(J_p, N)` fixed by the Hall `p′`-subgroup.
    pub fixed: Vec<usize>,
}

/// Outcome of checking `H¹(J, N) → ∏_{p ∈ 𝒟} H¹(J_p, N)^{J′_p}`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub shared_primes: Vec<u64>,
    pub h1_classes: usize,
    pub factors: Vec<SylowFactor>,
    /// For every class of `H¹(J, N)`, the tuple of restricted classes.
    pub forward: Vec<Vec<usize>>,
    pub well_defined: bool,
    pub point_preserving: bool,
    pub lands_in_fixed: bool,
    pub injective: bool,
    pub surjective: bool,
    pub witness: Option<String>,
}

impl DecompositionReport {
    pub fn bijective(&self) -> bool {
        self.well_defined && self.point_preserving && self.lands_in_fixed && self.injective && self.surjective
    }

    pub fn target_size(&self) -> usize {
        self.factors.iter().map(|f| f.fixed.len()).product()
    }
}

/// Restriction to the Sylow subgroups of `J` at the shared primes.
pub fn decomposition_map(action: &Arc<ActionOnGroup>) -> Result<DecompositionReport> {
    decomposition_map_with_budget(action, DEFAULT_ENUMERATION_BUDGET)
}

pub fn decomposition_map_with_budget(action: &Arc<ActionOnGroup>, budget: u64) -> Result<DecompositionReport> {
    let (jg, ng) = (action.actor(), action.target());
    if !is_nilpotent(jg) || !is_nilpotent(ng) {
        return Err(Error::NotNilpotent);
    }
    let shared = shared_primes(jg.order(), ng.order());
    let h = h1_with_budget(action, &Subgroup::whole(jg), budget)?;
    let mut factors = Vec::new();
    let mut forward: Vec<Vec<usize>> = vec![Vec::new(); h.len()];
    let mut witness = None;
    let mut well_defined = true;
    let mut lands_in_fixed = true;
    for &p in &shared {
        let jp = sylow_subgroup(jg, p)?;
        let hall = hall_pprime(jg, p)?;
        let hp = h1_with_budget(action, &jp, budget)?;
        let fixed = fixed_classes(&hp, &hall)?;
        match res_class_map(&h, &hp) {
            Ok(map) => {
                for (c, t) in map.into_iter().enumerate() {
                    if !fixed.contains(&t) {
                        lands_in_fixed = false;
                        witness.get_or_insert_with(|| format!("class {c} restricts to non-fixed class {t} at p = {p}"));
                    }
                    forward[c].push(t);
                }
            }
            Err(e) => {
                well_defined = false;
                witness.get_or_insert_with(|| format!("p = {p}: {e}"));
                for f in forward.iter_mut() {
                    f.push(usize::MAX);
                }
            }
        }
        factors.push(SylowFactor {
            prime: p,
            sylow_order: jp.order(),
            hall_order: hall.order(),
            classes: hp.len(),
            fixed,
        });
    }
    let point_preserving = forward[h.distinguished()].iter().all(|&t| t == 0);
    if !point_preserving {
        witness.get_or_insert_with(|| "distinguished class is not sent to the distinguished tuple".into());
    }
    let mut sorted = forward.clone();
    sorted.sort();
    let injective = sorted.windows(2).all(|w| w[0] != w[1]);
    if !injective {
        let dup = sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0].clone());
        witness.get_or_insert_with(|| format!("two classes share the image {dup:?}"));
    }
    let target: usize = factors.iter().map(|f| f.fixed.len()).product();
    let surjective = injective && lands_in_fixed && h.len() == target;
    if !surjective {
        witness.get_or_insert_with(|| format!("{} classes against a target of size {target}", h.len()));
    }
    Ok(DecompositionReport {
        shared_primes: shared,
        h1_classes: h.len(),
        factors,
        forward,
        well_defined,
        point_preserving,
        lands_in_fixed,
        injective,
        surjective,
        witness,
    })
}

/// A class of `H¹(J, N_q)` extending a Hall-fixed class of `H¹(J_q, N_q)`.
#[derive(Clone, Debug)]
pub struct SylowExtension {
    pub cocycle: Cocycle,
    /// Whether `φ̃(j′j) = φ(j)` worked for some representative, as opposed to
    /// the exhaustive preimage search.
    pub via_formula: bool,
}

/// Extends a class of `H¹(J_q, N)` that is fixed by the Hall `q′`-subgroup
/// to a cocycle on all of `J` whose restriction lies in that class.
///
/// Each class member `φ` is tried with `φ̃(x) = φ(x_q)`, `x_q` the
/// `q`-component of `x`; if none gives a cocycle, `H¹(J, N)` is searched
/// for a class restricting to the input.
pub fn extend_from_sylow(h: &CohomologySet, class: usize, q: u64) -> Result<SylowExtension> {
    let action = h.action.clone();
    let jg = action.actor().clone();
    if !is_nilpotent(&jg) {
        return Err(Error::NotNilpotent);
    }
    let jq = sylow_subgroup(&jg, q)?;
    if h.domain != jq {
        return Err(Error::DomainMismatch);
    }
    let hall = hall_pprime(&jg, q)?;
    if !fixed_classes(h, &hall)?.contains(&class) {
        return Err(Error::HypothesisNotMet(format!("class {class} is not fixed by the Hall {q}'-subgroup")));
    }
    let whole = Subgroup::whole(&jg);
    for phi in h.members(class) {
        let values: Vec<Elem> = jg.elements().map(|x| phi.value(primary_component(&jg, x, q))).collect();
        let ext = Cocycle::unchecked(action.clone(), whole.clone(), values);
        if ext.is_cocycle() {
            return Ok(SylowExtension { cocycle: ext, via_formula: true });
        }
    }
    log::warn!("extension formula failed on every representative of class {class}; searching H1(J, N)");
    let full = h1_full(&action)?;
    for c in 0..full.len() {
        let rep = full.representative(c);
        if h.class_of(&restrict(rep, &jq)?) == Some(class) {
            return Ok(SylowExtension { cocycle: rep.clone(), via_formula: false });
        }
    }
    Err(Error::NoPreimageFound(format!("class {class} of H1(J_{q}, N)")))
}

/// `H¹(K, N)` for abelian `N` with its group structure (pointwise product).
#[derive(Clone, Debug)]
pub struct AbelianH1 {
    pub h1: CohomologySet,
    product: Vec<Vec<usize>>,
}

impl AbelianH1 {
    pub fn order(&self) -> usize {
        self.h1.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a][b]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Classes of `p`-power order.
    pub fn primary_part(&self, p: u64) -> Vec<usize> {
        (0..self.order()).filter(|&c| is_p_power(self.element_order(c) as u64, p)).collect()
    }
}

pub fn abelian_h1_group(action: &Arc<ActionOnGroup>, k: &Subgroup) -> Result<AbelianH1> {
    abelian_h1_group_with_budget(action, k, DEFAULT_ENUMERATION_BUDGET)
}

pub fn abelian_h1_group_with_budget(action: &Arc<ActionOnGroup>, k: &Subgroup, budget: u64) -> Result<AbelianH1> {
    let ng = action.target();
    if !ng.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let h = h1_with_budget(action, k, budget)?;
    let pointwise = |a: &Cocycle, b: &Cocycle| -> Vec<Elem> {
        a.values.iter().zip(&b.values).map(|(&x, &y)| ng.mul(x, y)).collect()
    };
    let mut product = vec![vec![0; h.len()]; h.len()];
    for (a, row) in product.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let ra = h.representative(a);
            let rb = h.representative(b);
            let c = h
                .class_of_values(&pointwise(ra, rb))
                .ok_or_else(|| Error::Internal("product of cocycles is not a cocycle".into()))?;
            for m in h.members(b) {
                if h.class_of_values(&pointwise(ra, m)) != Some(c) {
                    return Err(Error::Internal("class product is not well defined".into()));
                }
            }
            *cell = c;
        }
    }
    Ok(AbelianH1 { h1: h, product })
}

/// One prime of the abelian primary decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct PrimaryFactor {
    pub prime: u64,
    pub sylow_order: usize,
    pub sylow_classes: usize,
    pub invariant: Vec<usize>,
    pub primary_part: Vec<usize>,
    pub restriction_bijective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimaryDecompositionReport {
    pub shared_primes: Vec<u64>,
    pub h1_order: usize,
    pub factors: Vec<PrimaryFactor>,
    pub order_matches: bool,
}

impl PrimaryDecompositionReport {
    pub fn holds(&self) -> bool {
        self.order_matches && self.factors.iter().all(|f| f.restriction_bijective)
    }
}

/// For abelian `N` and any `J`: `|H¹(J, N)| = ∏_{p ∈ 𝒟} |inv_J H¹(J_p, N)|`,
/// and restriction maps each `p`-primary part bijectively onto the invariant
/// classes.
pub fn eq3_check(action: &Arc<ActionOnGroup>) -> Result<PrimaryDecompositionReport> {
    eq3_check_with_budget(action, DEFAULT_ENUMERATION_BUDGET)
}

pub fn eq3_check_with_budget(action: &Arc<ActionOnGroup>, budget: u64) -> Result<PrimaryDecompositionReport> {
    let jg = action.actor();
    let ab = abelian_h1_group_with_budget(action, &Subgroup::whole(jg), budget)?;
    let shared = shared_primes(jg.order(), action.target().order());
    let mut factors = Vec::new();
    let mut product = 1;
    for &p in &shared {
        let jp = sylow_subgroup(jg, p)?;
        let hp = h1_with_budget(action, &jp, budget)?;
        let invariant = invariant_classes(&hp)?;
        let res = res_class_map(&ab.h1, &hp)?;
        let primary = ab.primary_part(p);
        let mut image: Vec<usize> = primary.iter().map(|&c| res[c]).collect();
        image.sort_unstable();
        let injective = image.windows(2).all(|w| w[0] != w[1]);
        let restriction_bijective = injective && image == invariant;
        product *= invariant.len();
        factors.push(PrimaryFactor {
            prime: p,
            sylow_order: jp.order(),
            sylow_classes: hp.len(),
            invariant,
            primary_part: primary,
            restriction_bijective,
        });
    }
    Ok(PrimaryDecompositionReport {
        shared_primes: shared,
        h1_order: ab.order(),
        factors,
        order_matches: product == ab.order(),
    })
}
