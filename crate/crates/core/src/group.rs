//! Finite permutation groups stored as a closed, canonically ordered element
//! list with a multiplication table.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::util;

/// Index of an element in [`Group::elements`]. The identity is always 0.
pub type ElementId = usize;

/// Groups up to this order carry a full multiplication table.
const TABLE_LIMIT: usize = 4096;

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

pub struct Group {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElementId>,
    generators: Vec<ElementId>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generator_perms().collect::<Vec<_>>())
            .finish()
    }
}

impl Group {
    /// Closes `generators` under composition. Elements are ordered identity
    /// first, then lexicographically by image array.
    pub fn generate(degree: usize, generators: &[Permutation], element_cap: usize) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut found = vec![identity];
        let mut next = 0;
        while next < found.len() {
            let x = found[next].clone();
            next += 1;
            for g in generators {
                let y = x.compose_unchecked(g);
                if seen.insert(y.clone()) {
                    if found.len() >= element_cap {
                        return Err(Error::ElementCap { cap: element_cap });
                    }
                    found.push(y);
                }
            }
        }
        found.sort();
        Ok(Self::from_sorted(degree, found, generators))
    }

    fn from_sorted(degree: usize, elements: Vec<Permutation>, generators: &[Permutation]) -> Group {
        let index: HashMap<Permutation, ElementId> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut generator_ids = Vec::new();
        for g in generators {
            let id = index[g];
            if id != 0 && !generator_ids.contains(&id) {
                generator_ids.push(id);
            }
        }
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; n * n];
            for (a, pa) in elements.iter().enumerate() {
                for (b, pb) in elements.iter().enumerate() {
                    table[a * n + b] = index[&pa.compose_unchecked(pb)] as u32;
                }
            }
            table
        });
        let inverses = elements
            .iter()
            .map(|p| index[&p.inverse()] as u32)
            .collect();
        Group {
            degree,
            elements,
            index,
            generators: generator_ids,
            table,
            inverses,
        }
    }

    pub fn trivial(degree: usize) -> Group {
        Self::from_sorted(degree.max(1), vec![Permutation::identity(degree.max(1))], &[])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &Permutation {
        &self.elements[id]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElementId> {
        self.index.get(p).copied()
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn generator_perms(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.generators.iter().map(|&g| &self.elements[g])
    }

    /// Product `a ∘ b` (apply `b` first).
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose_unchecked(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverses[a] as usize
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conjugate(&self, a: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, x| util::lcm(acc, self.element_order(x)))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Prime divisors of the order, ascending.
    pub fn primes(&self) -> Vec<usize> {
        util::prime_factors(self.order())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.order());
        s.insert_range(..);
        s
    }

    /// Elements of the subgroup generated by `gens` (ids of this group).
    pub fn closure_of(&self, gens: &[ElementId]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        let mut found = vec![0];
        let mut next = 0;
        while next < found.len() {
            let x = found[next];
            next += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    found.push(y);
                }
            }
        }
        set
    }

    /// Whether `set` is closed under multiplication and contains the identity.
    pub fn is_subgroup_set(&self, set: &FixedBitSet) -> bool {
        if set.len() != self.order() || !set.contains(0) {
            return false;
        }
        set.ones()
            .all(|a| set.ones().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn is_normal_set(&self, set: &FixedBitSet) -> bool {
        self.generators
            .iter()
            .all(|&g| set.ones().all(|a| set.contains(self.conjugate(a, g))))
    }

    /// The group generated by the given elements, as a group in its own right
    /// on the same points.
    pub fn subgroup_group(&self, gens: &[ElementId], element_cap: usize) -> Result<Group> {
        let perms: Vec<Permutation> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        Group::generate(self.degree, &perms, element_cap)
    }

    /// `a × b` acting on disjoint point sets.
    pub fn direct_product(a: &Group, b: &Group, element_cap: usize) -> Result<Group> {
        let degree = a.degree + b.degree;
        let gens: Vec<Permutation> = a
            .generator_perms()
            .map(|p| p.embed(0, degree))
            .chain(b.generator_perms().map(|p| p.embed(a.degree, degree)))
            .collect();
        let g = Group::generate(degree, &gens, element_cap)?;
        debug_assert_eq!(g.order(), a.order() * b.order());
        Ok(g)
    }

    /// `G/N` realised as the permutation action of `G` on the cosets of `N`.
    pub fn quotient(self: &Arc<Self>, normal: &FixedBitSet, element_cap: usize) -> Result<Epimorphism> {
        if !self.is_subgroup_set(normal) {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal_set(normal) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for a in normal.ones() {
                coset_of[self.mul(g, a)] = c;
            }
        }
        let action = |g: ElementId| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.mul(g, r)] as u32)
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = self.generators.iter().map(|&g| action(g)).collect();
        let target = Group::generate(reps.len(), &gens, element_cap)?;
        let element_map: Vec<ElementId> = (0..n)
            .map(|g| {
                target
                    .id_of(&action(g))
                    .expect("image of every element lies in the generated group")
            })
            .collect();
        let mut kernel = FixedBitSet::with_capacity(n);
        for (g, &img) in element_map.iter().enumerate() {
            if img == 0 {
                kernel.insert(g);
            }
        }
        if &kernel != normal || target.order() * normal.count_ones(..) != n {
            return Err(Error::Consistency(
                "coset action kernel differs from the normal subgroup".into(),
            ));
        }
        Ok(Epimorphism {
            source: Arc::clone(self),
            target: Arc::new(target),
            element_map,
            kernel,
        })
    }
}

/// A surjective homomorphism between two permutation groups, stored as an
/// element map.
#[derive(Debug, Clone)]
pub struct Epimorphism {
    pub source: Arc<Group>,
    pub target: Arc<Group>,
    pub element_map: Vec<ElementId>,
    pub kernel: FixedBitSet,
}

impl Epimorphism {
    pub fn image_of(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.target.order());
        for g in set.ones() {
            out.insert(self.element_map[g]);
        }
        out
    }

    pub fn preimage_of(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.source.order());
        for (g, &img) in self.element_map.iter().enumerate() {
            if set.contains(img) {
                out.insert(g);
            }
        }
        out
    }

    /// Checks the homomorphism equation on every pair of source elements.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.element_map[self.source.mul(a, b)]
                    == self
                        .target
                        .mul(self.element_map[a], self.element_map[b])
            })
        })
    }
}
