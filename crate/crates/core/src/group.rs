//! Finite groups stored as dense multiplication tables, together with
//! subgroups, homomorphisms, quotients and conjugacy scans.
//!
//! Conjugation follows `g^γ = γ⁻¹ g γ` throughout.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::par;

/// Index of an element inside its group.
pub type Elem = usize;

/// Default upper bound on the order of any constructed group.
pub const DEFAULT_ORDER_CAP: usize = 2048;

const NONE: u32 = u32::MAX;

/// A finite group given by its full multiplication table. Index 0 is the
/// identity.
#[derive(Clone)]
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    names: Option<Vec<String>>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {})", self.order)
    }
}

impl Group {
    /// Validates a square table and builds a group from it, relabelling the
    /// identity to index 0 if necessary.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Group> {
        Self::from_table_with_cap(table, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(table: &[Vec<usize>], cap: usize) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare { row, len: entries.len(), n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, n });
                }
                mul.push(value as u32);
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b] as usize;

        let identity = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)).ok_or(Error::NoIdentity)?;
        for a in 0..n {
            if !(0..n).any(|b| at(a, b) == identity && at(b, a) == identity) {
                return Err(Error::NoInverse(a));
            }
        }
        check_associative(n, &mul)?;

        if identity != 0 {
            // swap the labels 0 and `identity`
            let relabel = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut swapped = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    swapped[relabel(a) * n + relabel(b)] = relabel(at(a, b)) as u32;
                }
            }
            mul = swapped;
        }
        Ok(Self::from_flat(n, mul))
    }

    /// Builds a group from a trusted flat table whose identity is index 0.
    pub(crate) fn from_flat(n: usize, mul: Vec<u32>) -> Group {
        debug_assert_eq!(mul.len(), n * n);
        let mut inv = vec![NONE; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        debug_assert!(inv.iter().all(|&x| x != NONE));
        Group { order: n, mul, inv, names: None }
    }

    /// The permutation group generated by `generators`, each an image list on
    /// `0..degree`. Products compose right to left: `(a*b)(x) = a(b(x))`.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Group> {
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::BadPermutation { index, degree });
            }
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::BadPermutation { index, degree });
                }
                seen[x] = true;
            }
        }
        let gens: Vec<Vec<u32>> = generators.iter().map(|g| g.iter().map(|&x| x as u32).collect()).collect();
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p: Vec<u32> = (0..degree).map(|x| perms[i][g[x] as usize]).collect();
                if !index.contains_key(&p) {
                    if perms.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(p.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(p);
                }
            }
        }
        let n = perms.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<u32> = (0..degree).map(|x| perms[a][perms[b][x] as usize]).collect();
                mul[a * n + b] = index[&p] as u32;
            }
        }
        let names = perms.iter().map(|p| format!("{:?}", p)).collect::<Vec<_>>();
        Ok(Self::from_flat(n, mul).with_names(names))
    }

    /// The group of order 1.
    pub fn trivial() -> Group {
        Self::from_flat(1, vec![0])
    }

    pub fn with_names(mut self, names: Vec<String>) -> Group {
        assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    /// `g^by = by⁻¹ g by`.
    #[inline]
    pub fn conj(&self, g: Elem, by: Elem) -> Elem {
        self.mul(self.mul(self.inv(by), g), by)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let mut result = 0;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check(&self, elem: Elem) -> Result<()> {
        if elem < self.order {
            Ok(())
        } else {
            Err(Error::BadElement { elem, order: self.order })
        }
    }

    pub fn name(&self, a: Elem) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.elements().map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Scenario-file form: `{"kind": "table", "n": .., "mul": [[..]]}`.
    pub fn to_json(&self) -> Value {
        json!({"kind": "table", "n": self.order, "mul": self.table()})
    }
}

/// Light's associativity test: if `(x g) y = x (g y)` holds for every `x, y`
/// and every `g` in a generating set of the magma, the table is associative.
fn check_associative(n: usize, mul: &[u32]) -> Result<()> {
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut in_closure = vec![false; n];
    let mut closure: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for start in 0..n {
        if in_closure[start] {
            continue;
        }
        gens.push(start);
        let mut pending = vec![start];
        in_closure[start] = true;
        while let Some(x) = pending.pop() {
            closure.push(x);
            for &c in &closure {
                for y in [at(x, c), at(c, x)] {
                    if !in_closure[y] {
                        in_closure[y] = true;
                        pending.push(y);
                    }
                }
            }
        }
    }
    for &g in &gens {
        for x in 0..n {
            let xg = at(x, g);
            for y in 0..n {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(Error::NotAssociative { a: x, b: g, c: y });
                }
            }
        }
    }
    Ok(())
}

/// A subgroup of a parent group, stored as its sorted element list.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    elements: Vec<Elem>,
    pos: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && (Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent)
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl Subgroup {
    fn from_sorted(parent: &Arc<Group>, elements: Vec<Elem>) -> Subgroup {
        let mut pos = vec![NONE; parent.order()];
        for (i, &e) in elements.iter().enumerate() {
            pos[e] = i as u32;
        }
        Subgroup { parent: parent.clone(), elements, pos }
    }

    pub fn trivial(parent: &Arc<Group>) -> Subgroup {
        Self::from_sorted(parent, vec![0])
    }

    pub fn whole(parent: &Arc<Group>) -> Subgroup {
        Self::from_sorted(parent, parent.elements().collect())
    }

    /// Smallest subgroup containing `seeds`.
    pub fn generated(parent: &Arc<Group>, seeds: &[Elem]) -> Result<Subgroup> {
        for &s in seeds {
            parent.check(s)?;
        }
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in seeds {
                let y = parent.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Ok(Self::from_sorted(parent, members))
    }

    /// Validates that `elements` form a subgroup.
    pub fn from_elements(parent: &Arc<Group>, elements: &[Elem]) -> Result<Subgroup> {
        for &e in elements {
            parent.check(e)?;
        }
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        if !parent.order().is_multiple_of(sorted.len()) {
            return Err(Error::NotASubgroup(format!("order {} does not divide {}", sorted.len(), parent.order())));
        }
        let sub = Self::from_sorted(parent, sorted);
        for &a in &sub.elements {
            if !sub.contains(parent.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &sub.elements {
                if !sub.contains(parent.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(sub)
    }

    /// Builds the subgroup from a membership mask already known to be closed.
    pub(crate) fn from_mask_unchecked(parent: &Arc<Group>, mask: &[bool]) -> Subgroup {
        let elements = (0..parent.order()).filter(|&g| mask[g]).collect();
        Self::from_sorted(parent, elements)
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        self.pos[g] != NONE
    }

    /// Position of `g` in the sorted element list.
    #[inline]
    pub fn position(&self, g: Elem) -> Option<usize> {
        let p = self.pos[g];
        (p != NONE).then_some(p as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.elements.iter().all(|&g| other.contains(g))
    }

    /// Normal in the parent group.
    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    fn normality_witness(&self) -> Option<(Elem, Elem)> {
        let g = &self.parent;
        for by in g.elements() {
            for &x in &self.elements {
                if !self.contains(g.conj(x, by)) {
                    return Some((x, by));
                }
            }
        }
        None
    }

    pub fn require_normal(&self) -> Result<()> {
        match self.normality_witness() {
            None => Ok(()),
            Some((elem, by)) => Err(Error::NotNormal { elem, by }),
        }
    }

    /// `self^by = by⁻¹ self by`.
    pub fn conjugate(&self, by: Elem) -> Subgroup {
        let g = &self.parent;
        let mut elements: Vec<Elem> = self.elements.iter().map(|&x| g.conj(x, by)).collect();
        elements.sort_unstable();
        Self::from_sorted(&self.parent, elements)
    }

    /// Whether `self^by ⊆ other`.
    pub fn conjugate_within(&self, by: Elem, other: &Subgroup) -> bool {
        let g = &self.parent;
        self.elements.iter().all(|&x| other.contains(g.conj(x, by)))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let elements = self.elements.iter().copied().filter(|&g| other.contains(g)).collect();
        Ok(Self::from_sorted(&self.parent, elements))
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let seeds: Vec<Elem> = self.elements.iter().chain(other.elements.iter()).copied().collect();
        Subgroup::generated(&self.parent, &seeds)
    }

    /// The product set `self · other` as a membership mask.
    pub fn product_set(&self, other: &Subgroup) -> Result<Vec<bool>> {
        self.same_parent(other)?;
        let mut mask = vec![false; self.parent.order()];
        for &a in &self.elements {
            for &b in &other.elements {
                mask[self.parent.mul(a, b)] = true;
            }
        }
        Ok(mask)
    }

    /// Views the subgroup as a standalone group. Element `i` of the new group
    /// is the `i`-th smallest element of the subgroup.
    pub fn to_group(&self) -> Embedding {
        let n = self.order();
        let g = &self.parent;
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                mul[i * n + j] = self.pos[g.mul(a, b)];
            }
        }
        let mut group = Group::from_flat(n, mul);
        if let Some(names) = g.names() {
            group = group.with_names(self.elements.iter().map(|&e| names[e].clone()).collect());
        }
        Embedding { group: Arc::new(group), sub: self.clone() }
    }

    pub fn to_json(&self) -> Value {
        json!(self.elements)
    }
}

/// A subgroup re-indexed as a group of its own.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub group: Arc<Group>,
    pub sub: Subgroup,
}

impl Embedding {
    /// Parent element for a local index.
    pub fn lift(&self, local: Elem) -> Elem {
        self.sub.elements[local]
    }

    /// Local index of a parent element.
    pub fn local(&self, parent_elem: Elem) -> Option<Elem> {
        self.sub.position(parent_elem)
    }

    /// Local copy of a parent subgroup lying inside the embedded one.
    pub fn local_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        let elems = h
            .elements()
            .iter()
            .map(|&e| self.local(e).ok_or_else(|| Error::NotASubgroup(format!("{e} outside embedding"))))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::from_elements(&self.group, &elems)
    }

    /// Parent copy of a local subgroup.
    pub fn lift_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut elems: Vec<Elem> = h.elements().iter().map(|&e| self.lift(e)).collect();
        elems.sort_unstable();
        Subgroup::from_sorted(self.sub.parent(), elems)
    }

    pub fn hom(&self) -> GroupHom {
        GroupHom { source: self.group.clone(), target: self.sub.parent().clone(), images: self.sub.elements.clone() }
    }
}

/// A homomorphism between two table groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<Group>,
    target: Arc<Group>,
    images: Vec<Elem>,
}

impl GroupHom {
    pub fn new(source: Arc<Group>, target: Arc<Group>, images: Vec<Elem>) -> Result<GroupHom> {
        if images.len() != source.order() {
            return Err(Error::NotAHomomorphism { a: 0, b: 0 });
        }
        for &y in &images {
            target.check(y)?;
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub(crate) fn new_unchecked(source: Arc<Group>, target: Arc<Group>, images: Vec<Elem>) -> GroupHom {
        GroupHom { source, target, images }
    }

    pub fn source(&self) -> &Arc<Group> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn kernel(&self) -> Subgroup {
        let mask: Vec<bool> = self.images.iter().map(|&y| y == 0).collect();
        Subgroup::from_mask_unchecked(&self.source, &mask)
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let mut mask = vec![false; self.target.order()];
        for &x in h.elements() {
            mask[self.images[x]] = true;
        }
        Subgroup::from_mask_unchecked(&self.target, &mask)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage_of(&self, h: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = self.images.iter().map(|&y| h.contains(y)).collect();
        Subgroup::from_mask_unchecked(&self.source, &mask)
    }

    /// Least source element mapping to `y`.
    pub fn lift(&self, y: Elem) -> Option<Elem> {
        self.images.iter().position(|&x| x == y)
    }
}

/// Smallest subgroup of `g` containing `seeds`.
pub fn subgroup_generated(g: &Arc<Group>, seeds: &[Elem]) -> Result<Subgroup> {
    Subgroup::generated(g, seeds)
}

pub fn center(g: &Arc<Group>) -> Subgroup {
    centralizer(&Subgroup::whole(g))
}

/// Elements commuting with every element of `h`.
pub fn centralizer(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let mask: Vec<bool> = g.elements().map(|z| h.elements().iter().all(|&x| g.mul(z, x) == g.mul(x, z))).collect();
    Subgroup::from_mask_unchecked(g, &mask)
}

pub fn normalizer(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let mask: Vec<bool> = g.elements().map(|by| h.conjugate_within(by, h)).collect();
    Subgroup::from_mask_unchecked(g, &mask)
}

/// The quotient `G/N` together with its projection. Cosets are numbered by
/// their least element, so the identity coset is 0.
pub fn quotient(n: &Subgroup) -> Result<(Arc<Group>, GroupHom)> {
    n.require_normal()?;
    let g = n.parent();
    let mut coset_of = vec![NONE; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != NONE {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &m in n.elements() {
            coset_of[g.mul(x, m)] = c;
        }
    }
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = coset_of[g.mul(a, b)];
        }
    }
    let quotient = Arc::new(Group::from_flat(q, mul));
    let images = coset_of.iter().map(|&c| c as usize).collect();
    let proj = GroupHom::new_unchecked(g.clone(), quotient.clone(), images);
    Ok((quotient, proj))
}

/// Least `g` with `h^g = k`, if any.
pub fn are_conjugate_subgroups(h: &Subgroup, k: &Subgroup) -> Result<Option<Elem>> {
    h.same_parent(k)?;
    if h.order() != k.order() {
        return Ok(None);
    }
    let g = h.parent();
    Ok(par::find_first(g.order(), |by| h.conjugate_within(by, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn c_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    fn exhaustive_axioms(g: &Group) -> bool {
        let n = g.order();
        (0..n).all(|a| {
            g.mul(0, a) == a
                && g.mul(a, 0) == a
                && g.mul(a, g.inv(a)) == 0
                && g.mul(g.inv(a), a) == 0
                && (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))))
        })
    }

    #[test]
    fn tables_validate() {
        let c2 = Group::from_table(&c_table(2)).unwrap();
        assert_eq!(c2.order(), 2);
        let c6 = Group::from_table(&c_table(6)).unwrap();
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
        assert!(exhaustive_axioms(&c6));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Latin square with identity 0 but (1*1)*2 != 1*(1*2)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(Group::from_table(&t), Err(Error::NotAssociative { .. })));
        let t3 = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 0]];
        assert!(Group::from_table(&t3).is_err());
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C2 with identity at index 1
        let t = vec![vec![1, 0], vec![0, 1]];
        let g = Group::from_table(&t).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
        let bad = vec![vec![0, 0], vec![1, 1]];
        assert_eq!(Group::from_table(&bad).unwrap_err(), Error::NoIdentity);
    }

    #[test]
    fn permutation_closure() {
        // (1 2 3 4) and (2 4) in 0-based image form
        let r = vec![1, 2, 3, 0];
        let s = vec![0, 3, 2, 1];
        let d4 = Group::from_permutations(4, &[r, s], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(exhaustive_axioms(&d4));
        assert_eq!(Group::from_permutations(4, &[], 10).unwrap().order(), 1);
        assert_eq!(Group::from_permutations(2, &[vec![1, 0]], 10).unwrap().order(), 2);
        let s5 = [vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]];
        assert_eq!(Group::from_permutations(5, &s5, 100).unwrap_err(), Error::OrderCapExceeded { cap: 100 });
    }

    #[test]
    fn generated_subgroups() {
        let c4 = Arc::new(catalog::cyclic(4));
        assert_eq!(Subgroup::generated(&c4, &[1]).unwrap().order(), 4);
        assert_eq!(Subgroup::generated(&c4, &[2]).unwrap().elements(), &[0, 2]);
        let d4 = Arc::new(catalog::dihedral(4));
        let klein = Subgroup::generated(&d4, &[catalog::refl(4, 0), catalog::rot(2)]).unwrap();
        assert_eq!(klein.order(), 4);
        assert!(klein.is_normal());
    }

    #[test]
    fn centers() {
        let c6 = Arc::new(catalog::cyclic(6));
        assert!(center(&c6).is_whole());
        let d4 = Arc::new(catalog::dihedral(4));
        assert_eq!(center(&d4).elements(), &[0, catalog::rot(2)]);
        let q8 = Arc::new(catalog::quaternion8());
        assert_eq!(center(&q8).elements(), &[0, 1]);
    }

    #[test]
    fn normalizers() {
        let d4 = Arc::new(catalog::dihedral(4));
        assert!(normalizer(&center(&d4)).is_whole());
        let s3 = Arc::new(catalog::dihedral(3));
        let p = Subgroup::generated(&s3, &[catalog::refl(3, 0)]).unwrap();
        assert_eq!(normalizer(&p), p);
        assert!(normalizer(&Subgroup::whole(&s3)).is_whole());
        assert_eq!(centralizer(&Subgroup::whole(&d4)), center(&d4));
    }

    #[test]
    fn quotients() {
        let c4 = Arc::new(catalog::cyclic(4));
        let (q, proj) = quotient(&Subgroup::generated(&c4, &[2]).unwrap()).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.kernel().elements(), &[0, 2]);
        let d4 = Arc::new(catalog::dihedral(4));
        let rot = Subgroup::generated(&d4, &[catalog::rot(1)]).unwrap();
        assert_eq!(quotient(&rot).unwrap().0.order(), 2);
        let r = Subgroup::generated(&d4, &[catalog::refl(4, 0)]).unwrap();
        assert!(matches!(quotient(&r), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn conjugacy_scans() {
        let d4 = Arc::new(catalog::dihedral(4));
        let r = Subgroup::generated(&d4, &[catalog::refl(4, 0)]).unwrap();
        let ra2 = Subgroup::generated(&d4, &[catalog::refl(4, 2)]).unwrap();
        let ra = Subgroup::generated(&d4, &[catalog::refl(4, 1)]).unwrap();
        let g = are_conjugate_subgroups(&r, &ra2).unwrap().unwrap();
        assert_eq!(r.conjugate(g), ra2);
        assert_eq!(g, catalog::rot(1));
        assert_eq!(are_conjugate_subgroups(&r, &ra).unwrap(), None);
        assert_eq!(are_conjugate_subgroups(&r, &r).unwrap(), Some(0));
    }

    #[test]
    fn hom_validation() {
        let c4 = Arc::new(catalog::cyclic(4));
        let c2 = Arc::new(catalog::cyclic(2));
        assert!(GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).is_ok());
        assert!(GroupHom::new(c4, c2, vec![0, 1, 1, 0]).is_err());
    }
}
