//! Actions of one group on another by automorphisms, the semidirect product
//! they induce, and finite G-sets.
//!
//! Actions are left actions: `ʲn` is `auto(j)` applied to `n`, and
//! `auto(jj′) = auto(j) ∘ auto(j′)`. The semidirect product multiplies pairs
//! as `(n₁, j₁)(n₂, j₂) = (n₁ · ʲ¹n₂, j₁ j₂)`, so conjugating an embedded `n`
//! by an embedded `j` gives `j⁻¹ n j = ʲ⁻¹n`.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, Group, GroupHom, Subgroup, DEFAULT_ORDER_CAP};

/// A homomorphism from `actor` into the automorphism group of `target`,
/// stored as one permutation of the target per actor element.
#[derive(Clone, Debug)]
pub struct ActionOnGroup {
    actor: Arc<Group>,
    target: Arc<Group>,
    auto: Vec<u32>,
}

/// Returns a reason string if `perm` is not an automorphism of `n`.
fn automorphism_defect(n: &Group, perm: &[Elem]) -> Option<String> {
    if perm.len() != n.order() {
        return Some(format!("has {} entries, expected {}", perm.len(), n.order()));
    }
    let mut seen = vec![false; n.order()];
    for &x in perm {
        if x >= n.order() || seen[x] {
            return Some("not a permutation".into());
        }
        seen[x] = true;
    }
    for a in n.elements() {
        for b in n.elements() {
            if perm[n.mul(a, b)] != n.mul(perm[a], perm[b]) {
                return Some(format!("does not preserve {a}*{b}"));
            }
        }
    }
    None
}

impl ActionOnGroup {
    /// Validates a full per-element table of automorphisms.
    pub fn new(actor: Arc<Group>, target: Arc<Group>, auto: Vec<Vec<Elem>>) -> Result<Self> {
        if auto.len() != actor.order() {
            return Err(Error::NotAHomomorphism { a: 0, b: 0 });
        }
        for (j, perm) in auto.iter().enumerate() {
            if let Some(reason) = automorphism_defect(&target, perm) {
                return Err(Error::NotAutomorphism { gen: j, reason });
            }
        }
        let action = Self::from_rows(actor, target, &auto);
        action.check_homomorphism()?;
        Ok(action)
    }

    fn from_rows(actor: Arc<Group>, target: Arc<Group>, auto: &[Vec<Elem>]) -> Self {
        let flat = auto.iter().flat_map(|row| row.iter().map(|&x| x as u32)).collect();
        ActionOnGroup { actor, target, auto: flat }
    }

    fn check_homomorphism(&self) -> Result<()> {
        let (j, n) = (&self.actor, &self.target);
        for a in j.elements() {
            for b in j.elements() {
                let ab = j.mul(a, b);
                if n.elements().any(|x| self.apply(ab, x) != self.apply(a, self.apply(b, x))) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }

    /// The unique action sending each generator to the given automorphism.
    /// The images are propagated along the Cayley graph of the actor, and
    /// any conflict means they violate a relation of the actor.
    pub fn from_generator_images(
        actor: Arc<Group>,
        target: Arc<Group>,
        gens: &[Elem],
        images: &[Vec<Elem>],
    ) -> Result<Self> {
        if gens.len() != images.len() {
            return Err(Error::NotAutomorphism {
                gen: gens.len().min(images.len()),
                reason: format!("{} generators but {} images", gens.len(), images.len()),
            });
        }
        for (&g, perm) in gens.iter().zip(images) {
            actor.check(g)?;
            if let Some(reason) = automorphism_defect(&target, perm) {
                return Err(Error::NotAutomorphism { gen: g, reason });
            }
        }
        let m = target.order();
        let mut rows: Vec<Option<Vec<Elem>>> = vec![None; actor.order()];
        rows[0] = Some((0..m).collect());
        let mut queue = VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for (&g, img) in gens.iter().zip(images) {
                let y = actor.mul(x, g);
                let row_x = rows[x].as_ref().expect("visited");
                let composed: Vec<Elem> = (0..m).map(|t| row_x[img[t]]).collect();
                match &rows[y] {
                    Some(existing) if *existing != composed => {
                        return Err(Error::NotAHomomorphism { a: x, b: g });
                    }
                    Some(_) => {}
                    None => {
                        rows[y] = Some(composed);
                        reached += 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        if reached < actor.order() {
            return Err(Error::DoesNotGenerate { reached, order: actor.order() });
        }
        let rows: Vec<Vec<Elem>> = rows.into_iter().map(|r| r.expect("reached")).collect();
        Ok(Self::from_rows(actor, target, &rows))
    }

    pub fn trivial(actor: Arc<Group>, target: Arc<Group>) -> Self {
        let m = target.order();
        let rows: Vec<Vec<Elem>> = actor.elements().map(|_| (0..m).collect()).collect();
        Self::from_rows(actor, target, &rows)
    }

    /// Action of `j` on `n` by `ʲx = j x j⁻¹` inside their common parent.
    /// Both are re-indexed as standalone groups (see [`Subgroup::to_group`]).
    pub fn conjugation(n: &Subgroup, j: &Subgroup) -> Result<Self> {
        let g = n.parent();
        if !Arc::ptr_eq(g, j.parent()) && **g != **j.parent() {
            return Err(Error::ParentMismatch);
        }
        let mut rows = Vec::with_capacity(j.order());
        for &jj in j.elements() {
            let inv = g.inv(jj);
            let mut row = Vec::with_capacity(n.order());
            for &x in n.elements() {
                let y = g.mul(g.mul(jj, x), inv);
                row.push(n.position(y).ok_or(Error::NotNormalized { j: jj, n: x })?);
            }
            rows.push(row);
        }
        Ok(Self::from_rows(j.to_group().group, n.to_group().group, &rows))
    }

    pub fn actor(&self) -> &Arc<Group> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    /// `ʲn`.
    #[inline]
    pub fn apply(&self, j: Elem, n: Elem) -> Elem {
        self.auto[j * self.target.order() + n] as usize
    }

    pub fn automorphism(&self, j: Elem) -> Vec<Elem> {
        self.target.elements().map(|n| self.apply(j, n)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.actor.elements().all(|j| self.target.elements().all(|n| self.apply(j, n) == n))
    }

    /// The same action with the target cut down to an invariant subgroup,
    /// re-indexed as a standalone group.
    pub fn restrict_target(&self, sub: &Subgroup) -> Result<ActionOnGroup> {
        let mut rows = Vec::with_capacity(self.actor.order());
        for j in self.actor.elements() {
            let mut row = Vec::with_capacity(sub.order());
            for &x in sub.elements() {
                let y = self.apply(j, x);
                row.push(sub.position(y).ok_or(Error::NotNormalized { j, n: x })?);
            }
            rows.push(row);
        }
        Ok(Self::from_rows(self.actor.clone(), sub.to_group().group, &rows))
    }

    /// The same action with values pushed through a `J`-equivariant
    /// homomorphism `target → other`.
    pub fn push_forward(&self, hom: &GroupHom) -> Result<ActionOnGroup> {
        let other = hom.target().clone();
        let mut rows: Vec<Vec<Option<Elem>>> = vec![vec![None; other.order()]; self.actor.order()];
        for j in self.actor.elements() {
            for x in self.target.elements() {
                let (src, dst) = (hom.apply(x), hom.apply(self.apply(j, x)));
                match rows[j][src] {
                    Some(d) if d != dst => {
                        return Err(Error::Internal(format!("projection is not equivariant at ({j}, {x})")));
                    }
                    _ => rows[j][src] = Some(dst),
                }
            }
        }
        let rows: Vec<Vec<Elem>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.ok_or_else(|| Error::Internal("projection is not onto".into()))).collect())
            .collect::<Result<_>>()?;
        Ok(Self::from_rows(self.actor.clone(), other, &rows))
    }
}

/// `N ⋊ J` as a table group with its structure maps. The pair `(n, j)` has
/// index `n + |N|·j`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub action: Arc<ActionOnGroup>,
    pub group: Arc<Group>,
    pub embed_n: GroupHom,
    pub embed_j: GroupHom,
    pub project_j: GroupHom,
}

impl SemidirectProduct {
    pub fn new(action: Arc<ActionOnGroup>) -> Result<Self> {
        Self::with_cap(action, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(action: Arc<ActionOnGroup>, cap: usize) -> Result<Self> {
        let (jg, ng) = (action.actor().clone(), action.target().clone());
        let (a, b) = (ng.order(), jg.order());
        let order = a * b;
        if order > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        let table: Vec<Vec<usize>> = (0..order)
            .map(|x| {
                let (n1, j1) = (x % a, x / a);
                (0..order)
                    .map(|y| {
                        let (n2, j2) = (y % a, y / a);
                        ng.mul(n1, action.apply(j1, n2)) + a * jg.mul(j1, j2)
                    })
                    .collect()
            })
            .collect();
        let mut group = Group::from_table_with_cap(&table, cap)?;
        if let (Some(nn), Some(jn)) = (ng.names(), jg.names()) {
            let names = (0..order)
                .map(|x| match (x % a, x / a) {
                    (0, 0) => "1".to_string(),
                    (n, 0) => nn[n].clone(),
                    (0, j) => jn[j].clone(),
                    (n, j) => format!("({},{})", nn[n], jn[j]),
                })
                .collect();
            group = group.with_names(names);
        }
        let group = Arc::new(group);
        let embed_n = GroupHom::new(ng.clone(), group.clone(), (0..a).collect())?;
        let embed_j = GroupHom::new(jg.clone(), group.clone(), (0..b).map(|j| a * j).collect())?;
        let project_j = GroupHom::new(group.clone(), jg, (0..order).map(|x| x / a).collect())?;
        Ok(SemidirectProduct { action, group, embed_n, embed_j, project_j })
    }

    pub fn n_order(&self) -> usize {
        self.action.target().order()
    }

    #[inline]
    pub fn pair(&self, n: Elem, j: Elem) -> Elem {
        n + self.n_order() * j
    }

    #[inline]
    pub fn unpair(&self, g: Elem) -> (Elem, Elem) {
        (g % self.n_order(), g / self.n_order())
    }

    /// The embedded copy of `N`.
    pub fn n_subgroup(&self) -> Subgroup {
        self.embed_n.image_of(&Subgroup::whole(self.action.target()))
    }

    /// The embedded copy of `J`.
    pub fn j_subgroup(&self) -> Subgroup {
        self.embed_j.image_of(&Subgroup::whole(self.action.actor()))
    }

    /// Embedded copy of a subgroup of `J`.
    pub fn embed_j_subgroup(&self, k: &Subgroup) -> Subgroup {
        self.embed_j.image_of(k)
    }

    /// Embedded copy of a subgroup of `N`.
    pub fn embed_n_subgroup(&self, m: &Subgroup) -> Subgroup {
        self.embed_n.image_of(m)
    }
}

/// A finite set with a left action of a group, `act[g][ω] = g·ω`.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<Group>,
    size: usize,
    act: Vec<u32>,
}

impl GSet {
    pub fn new(group: Arc<Group>, table: &[Vec<usize>]) -> Result<GSet> {
        if table.len() != group.order() {
            return Err(Error::InvalidGSet(format!("{} rows for a group of order {}", table.len(), group.order())));
        }
        let size = table.first().map_or(0, Vec::len);
        if size == 0 {
            return Err(Error::InvalidGSet("empty point set".into()));
        }
        for (g, row) in table.iter().enumerate() {
            let mut seen = vec![false; size];
            if row.len() != size {
                return Err(Error::InvalidGSet(format!("row {g} has the wrong length")));
            }
            for &p in row {
                if p >= size || seen[p] {
                    return Err(Error::InvalidGSet(format!("row {g} is not a permutation")));
                }
                seen[p] = true;
            }
        }
        let act = table.iter().flat_map(|r| r.iter().map(|&x| x as u32)).collect();
        let set = GSet { group, size, act };
        let g = &set.group;
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                if (0..size).any(|w| set.act(ab, w) != set.act(a, set.act(b, w))) {
                    return Err(Error::InvalidGSet(format!("not an action at ({a}, {b})")));
                }
            }
        }
        Ok(set)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: Elem, point: usize) -> usize {
        self.act[g * self.size + point] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.group.elements().map(|g| (0..self.size).map(|w| self.act(g, w)).collect()).collect()
    }

    /// Sorted orbit of `point` under `s`.
    pub fn orbit(&self, s: &Subgroup, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        for &g in s.elements() {
            seen[self.act(g, point)] = true;
        }
        (0..self.size).filter(|&w| seen[w]).collect()
    }

    pub fn is_transitive(&self, s: &Subgroup) -> bool {
        self.orbit(s, 0).len() == self.size
    }

    pub fn fixed_points(&self, s: &Subgroup) -> Vec<usize> {
        (0..self.size).filter(|&w| s.elements().iter().all(|&g| self.act(g, w) == w)).collect()
    }

    pub fn stabilizer(&self, point: usize) -> Result<Subgroup> {
        if point >= self.size {
            return Err(Error::InvalidGSet(format!("point {point} out of range")));
        }
        let mask: Vec<bool> = self.group.elements().map(|g| self.act(g, point) == point).collect();
        Ok(Subgroup::from_mask_unchecked(&self.group, &mask))
    }
}

/// Left multiplication on the left cosets of `h`. Cosets are numbered by their
/// least element, so point 0 is `h` itself.
pub fn coset_gset(h: &Subgroup) -> GSet {
    let g = h.parent();
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == u32::MAX {
            for &y in h.elements() {
                coset_of[g.mul(x, y)] = reps.len() as u32;
            }
            reps.push(x);
        }
    }
    let size = reps.len();
    let act =
        g.elements().flat_map(|a| reps.iter().map(move |&r| (a, r))).map(|(a, r)| coset_of[g.mul(a, r)]).collect();
    GSet { group: g.clone(), size, act }
}
