//! The lattice of all subgroups of a finite group.
//!
//! Subgroups are element bitsets over the parent's element ids. Enumeration
//! starts from the cyclic subgroups and saturates under joins with cyclic
//! subgroups; every subgroup is a join of cyclic ones, so the fixpoint is the
//! full lattice. Containment, meet, join, normality and conjugation are then
//! tabulated so the modularity quantifiers run on table lookups.

mod dot;
mod series;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::classes::ClassCache;
use crate::error::{Error, Result};
use crate::group::{ElementId, Epimorphism, Group, DEFAULT_ELEMENT_CAP};
use crate::modularity::ModularRelation;
use crate::util;

pub use dot::to_dot;
pub use series::{ChiefFactor, ChiefSeries, StepChoice};

/// Index into [`SubgroupLattice::subgroups`]. 0 is the trivial subgroup, the
/// last id is the whole group.
pub type SubgroupId = usize;

pub const DEFAULT_SUBGROUP_CAP: usize = 5_000;
pub const DEFAULT_MAX_ORDER: usize = 4_096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub element_cap: usize,
    pub subgroup_cap: usize,
    /// Largest group order for which a lattice is built.
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            element_cap: DEFAULT_ELEMENT_CAP,
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Subgroup {
    pub elements: FixedBitSet,
    pub order: usize,
    /// A generating set found during enumeration (empty for the trivial
    /// subgroup).
    pub generators: Vec<ElementId>,
}

/// `G/N` together with the lattice of the quotient group.
#[derive(Debug)]
pub struct Quotient {
    pub normal: SubgroupId,
    pub epi: Epimorphism,
    pub lattice: Arc<SubgroupLattice>,
}

impl Quotient {
    /// The subgroup `TN/N` of the quotient.
    pub fn image(&self, source: &SubgroupLattice, t: SubgroupId) -> SubgroupId {
        let set = self.epi.image_of(source.elements(t));
        self.lattice
            .id_of(&set)
            .expect("image of a subgroup is a subgroup")
    }

    /// The full preimage of a quotient subgroup.
    pub fn preimage(&self, source: &SubgroupLattice, q: SubgroupId) -> SubgroupId {
        let set = self.epi.preimage_of(self.lattice.elements(q));
        source
            .id_of(&set)
            .expect("preimage of a subgroup is a subgroup")
    }
}

pub(crate) struct Caches {
    pub(crate) modular: OnceLock<ModularRelation>,
    pub(crate) classes: ClassCache,
    sub_lattices: Vec<OnceLock<Arc<SubgroupLattice>>>,
    quotients: Vec<OnceLock<Arc<Quotient>>>,
}

pub struct SubgroupLattice {
    group: Arc<Group>,
    limits: Limits,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<FixedBitSet, SubgroupId>,
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    normal: FixedBitSet,
    conj: Vec<u32>,
    pub(crate) caches: Caches,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("order", &self.group.order())
            .field("subgroups", &self.subgroups.len())
            .finish()
    }
}

fn lex_key(set: &FixedBitSet) -> (usize, Vec<usize>) {
    (set.count_ones(..), set.ones().collect())
}

impl SubgroupLattice {
    pub fn new(group: Arc<Group>) -> Result<Self> {
        Self::with_limits(group, Limits::default())
    }

    pub fn with_limits(group: Arc<Group>, limits: Limits) -> Result<Self> {
        let n = group.order();
        if n > limits.max_order {
            return Err(Error::GroupTooLarge {
                order: n,
                bound: limits.max_order,
            });
        }

        let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut list: Vec<(FixedBitSet, Vec<ElementId>)> = Vec::new();
        let mut cyclics: Vec<ElementId> = Vec::new();
        for x in 0..n {
            let set = group.closure_of(&[x]);
            if !found.contains_key(&set) {
                found.insert(set.clone(), list.len());
                let gens = if x == 0 { vec![] } else { vec![x] };
                list.push((set, gens));
                cyclics.push(x);
            }
        }
        if list.len() > limits.subgroup_cap {
            return Err(Error::SubgroupCap {
                cap: limits.subgroup_cap,
            });
        }
        let mut next = 0;
        while next < list.len() {
            let (set, gens) = list[next].clone();
            next += 1;
            for &c in &cyclics {
                if set.contains(c) {
                    continue;
                }
                let mut new_gens = gens.clone();
                new_gens.push(c);
                let joined = group.closure_of(&new_gens);
                if !found.contains_key(&joined) {
                    found.insert(joined.clone(), list.len());
                    list.push((joined, new_gens));
                    if list.len() > limits.subgroup_cap {
                        return Err(Error::SubgroupCap {
                            cap: limits.subgroup_cap,
                        });
                    }
                }
            }
        }

        let mut keyed: Vec<_> = list
            .into_iter()
            .map(|(set, gens)| (lex_key(&set), set, gens))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let subgroups: Vec<Subgroup> = keyed
            .into_iter()
            .map(|((order, _), elements, generators)| Subgroup {
                elements,
                order,
                generators,
            })
            .collect();
        Ok(Self::from_subgroups(group, limits, subgroups))
    }

    fn from_subgroups(group: Arc<Group>, limits: Limits, subgroups: Vec<Subgroup>) -> Self {
        let n = group.order();
        let l = subgroups.len();
        let lookup: HashMap<FixedBitSet, SubgroupId> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements.clone(), i))
            .collect();

        let mut below = vec![FixedBitSet::with_capacity(l); l];
        let mut above = vec![FixedBitSet::with_capacity(l); l];
        for a in 0..l {
            for b in a..l {
                let (sa, sb) = (&subgroups[a], &subgroups[b]);
                if sb.order % sa.order == 0 && sa.elements.is_subset(&sb.elements) {
                    below[b].insert(a);
                    above[a].insert(b);
                }
            }
        }

        let mut meet = vec![0u32; l * l];
        let mut join = vec![0u32; l * l];
        for a in 0..l {
            for b in a..l {
                let mut inter = subgroups[a].elements.clone();
                inter.intersect_with(&subgroups[b].elements);
                let m = lookup[&inter] as u32;
                let mut ups = above[a].clone();
                ups.intersect_with(&above[b]);
                let j = ups.minimum().expect("the whole group is an upper bound") as u32;
                meet[a * l + b] = m;
                meet[b * l + a] = m;
                join[a * l + b] = j;
                join[b * l + a] = j;
            }
        }

        let mut conj = vec![0u32; l * n];
        for (a, s) in subgroups.iter().enumerate() {
            for x in 0..n {
                let mut set = FixedBitSet::with_capacity(n);
                for h in s.elements.ones() {
                    set.insert(group.conjugate(h, x));
                }
                conj[a * n + x] = lookup[&set] as u32;
            }
        }
        let mut normal = FixedBitSet::with_capacity(l);
        for a in 0..l {
            if group.generators().iter().all(|&g| conj[a * n + g] as usize == a) {
                normal.insert(a);
            }
        }

        let caches = Caches {
            modular: OnceLock::new(),
            classes: ClassCache::default(),
            sub_lattices: (0..l).map(|_| OnceLock::new()).collect(),
            quotients: (0..l).map(|_| OnceLock::new()).collect(),
        };
        SubgroupLattice {
            group,
            limits,
            subgroups,
            lookup,
            below,
            above,
            meet,
            join,
            normal,
            conj,
            caches,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn ids(&self) -> std::ops::Range<SubgroupId> {
        0..self.subgroups.len()
    }

    pub fn bottom(&self) -> SubgroupId {
        0
    }

    pub fn top(&self) -> SubgroupId {
        self.subgroups.len() - 1
    }

    pub fn order(&self, h: SubgroupId) -> usize {
        self.subgroups[h].order
    }

    pub fn elements(&self, h: SubgroupId) -> &FixedBitSet {
        &self.subgroups[h].elements
    }

    pub fn generators(&self, h: SubgroupId) -> &[ElementId] {
        &self.subgroups[h].generators
    }

    pub fn id_of(&self, set: &FixedBitSet) -> Option<SubgroupId> {
        self.lookup.get(set).copied()
    }

    /// `a ≤ b`.
    #[inline]
    pub fn leq(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.above[a].contains(b)
    }

    #[inline]
    pub fn meet(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.meet[a * self.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.join[a * self.len() + b] as usize
    }

    /// The join computed by generator closure instead of the table.
    pub fn join_by_closure(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let mut gens = self.generators(a).to_vec();
        gens.extend_from_slice(self.generators(b));
        self.id_of(&self.group.closure_of(&gens))
            .expect("closure of subgroup generators is a subgroup")
    }

    /// Subgroups contained in `b` (including `b`).
    pub fn below(&self, b: SubgroupId) -> &FixedBitSet {
        &self.below[b]
    }

    /// Subgroups containing `a` (including `a`).
    pub fn above(&self, a: SubgroupId) -> &FixedBitSet {
        &self.above[a]
    }

    /// Subgroups `c` with `a ≤ c ≤ b`.
    pub fn interval(&self, a: SubgroupId, b: SubgroupId) -> FixedBitSet {
        let mut s = self.above[a].clone();
        s.intersect_with(&self.below[b]);
        s
    }

    pub fn is_normal(&self, a: SubgroupId) -> bool {
        self.normal.contains(a)
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conj(&self, a: SubgroupId, x: ElementId) -> SubgroupId {
        self.conj[a * self.group.order() + x] as usize
    }

    pub fn is_normal_in(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.leq(a, b) && self.generators(b).iter().all(|&x| self.conj(a, x) == a)
    }

    /// `|b : a|` for `a ≤ b`.
    pub fn index(&self, a: SubgroupId, b: SubgroupId) -> usize {
        self.order(b) / self.order(a)
    }

    pub fn normal_subgroups(&self) -> Vec<SubgroupId> {
        self.normal.ones().collect()
    }

    pub fn conjugates(&self, a: SubgroupId) -> Vec<SubgroupId> {
        let mut out: Vec<SubgroupId> = (0..self.group.order()).map(|x| self.conj(a, x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Intersection of the conjugates of `m` by elements of `b`.
    pub fn core_in(&self, m: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.elements(b)
            .ones()
            .fold(m, |acc, x| self.meet(acc, self.conj(m, x)))
    }

    pub fn core(&self, m: SubgroupId) -> SubgroupId {
        self.core_in(m, self.top())
    }

    pub fn normalizer(&self, h: SubgroupId) -> SubgroupId {
        let mut set = FixedBitSet::with_capacity(self.group.order());
        for x in 0..self.group.order() {
            if self.conj(h, x) == h {
                set.insert(x);
            }
        }
        self.id_of(&set).expect("normalizer is a subgroup")
    }

    /// Subgroups `a < b` with nothing strictly between.
    pub fn maximal_subgroups_of(&self, b: SubgroupId) -> Vec<SubgroupId> {
        self.below[b]
            .ones()
            .filter(|&a| a != b && self.interval(a, b).count_ones(..) == 2)
            .collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<SubgroupId> {
        self.maximal_subgroups_of(self.top())
    }

    /// Subgroups covering `a` in the Hasse diagram.
    pub fn covers(&self, a: SubgroupId) -> Vec<SubgroupId> {
        self.above[a]
            .ones()
            .filter(|&b| b != a && self.interval(a, b).count_ones(..) == 2)
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<SubgroupId> {
        let normals = self.normal_subgroups();
        normals
            .iter()
            .copied()
            .filter(|&n| n != self.bottom())
            .filter(|&n| {
                !normals
                    .iter()
                    .any(|&k| k != self.bottom() && k != n && self.leq(k, n))
            })
            .collect()
    }

    /// Intersection of the maximal subgroups; the whole group when there are
    /// none.
    pub fn frattini(&self) -> SubgroupId {
        self.maximal_subgroups()
            .into_iter()
            .fold(self.top(), |acc, m| self.meet(acc, m))
    }

    /// The Sylow `p`-subgroup with the lowest id (trivial if `p ∤ |G|`).
    pub fn sylow(&self, p: usize) -> SubgroupId {
        let target = util::p_part(self.group.order(), p);
        self.ids()
            .find(|&h| self.order(h) == target)
            .expect("Sylow subgroups exist")
    }

    pub fn sylow_all(&self, p: usize) -> Vec<SubgroupId> {
        self.conjugates(self.sylow(p))
    }

    /// Sylow `p`-subgroup of the subgroup `h`, lowest id.
    pub fn sylow_of(&self, h: SubgroupId, p: usize) -> SubgroupId {
        let target = util::p_part(self.order(h), p);
        self.below[h]
            .ones()
            .find(|&k| self.order(k) == target)
            .expect("Sylow subgroups exist")
    }

    pub fn primes_of(&self, h: SubgroupId) -> Vec<usize> {
        util::prime_factors(self.order(h))
    }

    /// Subgroup generated by all commutators of elements of `h`.
    pub fn derived(&self, h: SubgroupId) -> SubgroupId {
        let elems: Vec<ElementId> = self.elements(h).ones().collect();
        let mut set = FixedBitSet::with_capacity(self.group.order());
        let mut gens = Vec::new();
        for &a in &elems {
            for &b in &elems {
                let c = self.group.commutator(a, b);
                if !set.put(c) {
                    gens.push(c);
                }
            }
        }
        self.id_of(&self.group.closure_of(&gens))
            .expect("derived subgroup is a subgroup")
    }

    /// `C_G(H/K) = {g : [g, x] ∈ K for all x ∈ H}` for `K ≤ H`, both normal.
    pub fn centralizer_of_factor(&self, h: SubgroupId, k: SubgroupId) -> Result<SubgroupId> {
        if !self.leq(k, h) {
            return Err(Error::NotContained { sub: k, sup: h });
        }
        let hk = self.elements(k);
        let mut set = FixedBitSet::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            if self
                .elements(h)
                .ones()
                .all(|x| hk.contains(self.group.commutator(g, x)))
            {
                set.insert(g);
            }
        }
        self.id_of(&set).ok_or_else(|| {
            Error::Consistency("centralizer of a chief factor is missing from the lattice".into())
        })
    }

    pub fn is_abelian_subgroup(&self, h: SubgroupId) -> bool {
        let gens = self.generators(h);
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.group.mul(a, b) == self.group.mul(b, a)))
    }

    pub fn exponent_of(&self, h: SubgroupId) -> usize {
        self.elements(h)
            .ones()
            .fold(1, |acc, x| util::lcm(acc, self.group.element_order(x)))
    }

    /// Nilpotent iff every Sylow subgroup of `h` is unique.
    pub fn is_nilpotent_subgroup(&self, h: SubgroupId) -> bool {
        let n = self.order(h);
        util::prime_factors(n).into_iter().all(|p| {
            let target = util::p_part(n, p);
            self.below[h]
                .ones()
                .filter(|&k| self.order(k) == target)
                .count()
                == 1
        })
    }

    /// `h` has a normal subgroup of order `|h|_{p'}`.
    pub fn is_p_nilpotent_subgroup(&self, h: SubgroupId, p: usize) -> bool {
        let target = self.order(h) / util::p_part(self.order(h), p);
        self.below[h]
            .ones()
            .any(|k| self.order(k) == target && self.is_normal_in(k, h))
    }

    /// The subgroup `h` as a group of its own, with its own lattice.
    pub fn subgroup_lattice(&self, h: SubgroupId) -> Result<Arc<SubgroupLattice>> {
        let cell = &self.caches.sub_lattices[h];
        if let Some(l) = cell.get() {
            return Ok(Arc::clone(l));
        }
        let group = self
            .group
            .subgroup_group(self.generators(h), self.limits.element_cap)?;
        debug_assert_eq!(group.order(), self.order(h));
        let lat = Arc::new(SubgroupLattice::with_limits(Arc::new(group), self.limits)?);
        Ok(Arc::clone(cell.get_or_init(|| lat)))
    }

    /// `G/N` with its lattice. `n` must be normal.
    pub fn quotient(&self, n: SubgroupId) -> Result<Arc<Quotient>> {
        let cell = &self.caches.quotients[n];
        if let Some(q) = cell.get() {
            return Ok(Arc::clone(q));
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let epi = self.group.quotient(self.elements(n), self.limits.element_cap)?;
        let lattice = Arc::new(SubgroupLattice::with_limits(
            Arc::clone(&epi.target),
            self.limits,
        )?);
        let q = Arc::new(Quotient {
            normal: n,
            epi,
            lattice,
        });
        Ok(Arc::clone(cell.get_or_init(|| q)))
    }

    /// Subgroups whose order has exactly two prime divisors.
    pub fn biprimary_subgroups(&self) -> Vec<SubgroupId> {
        self.ids()
            .filter(|&h| util::prime_factors(self.order(h)).len() == 2)
            .collect()
    }

    /// Human-readable generator list in cycle notation.
    pub fn describe(&self, h: SubgroupId) -> String {
        if self.generators(h).is_empty() {
            return "<>".to_string();
        }
        let gens: Vec<String> = self
            .generators(h)
            .iter()
            .map(|&g| self.group.element(g).to_string())
            .collect();
        format!("<{}>", gens.join(", "))
    }
}
