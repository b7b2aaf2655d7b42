//! Full subgroup lattices of small permutation groups.

mod enumerate;
mod table;

use std::fmt;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::{GroupError, Result};
use crate::exec::Exec;
use crate::permcore::{Caps, PermGroup, Permutation};

pub use table::{ElementTable, Rank};

/// Position of a subgroup in its lattice. Ids follow the canonical order:
/// ascending order, ties broken by the sorted member ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupId(pub usize);

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subgroup of the lattice's parent, as a sorted set of element ranks.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<Rank>,
    bits: FixedBitSet,
    generators: Vec<Rank>,
}

impl Subgroup {
    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn members(&self) -> &[Rank] {
        &self.members
    }

    pub fn generators(&self) -> &[Rank] {
        &self.generators
    }

    #[inline]
    pub fn contains_rank(&self, r: Rank) -> bool {
        self.bits.contains(r as usize)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// Every subgroup of a group, with covering relation and conjugacy classes.
pub struct Lattice {
    group: PermGroup,
    caps: Caps,
    exec: Exec,
    table: ElementTable,
    group_generators: Vec<Rank>,
    subgroups: Vec<Subgroup>,
    by_key: FxHashMap<Vec<Rank>, SubgroupId>,
    maximals: Vec<Vec<SubgroupId>>,
    covers: Vec<Vec<SubgroupId>>,
    below: Vec<FixedBitSet>,
    class_of: Vec<usize>,
    classes: Vec<Vec<SubgroupId>>,
}

/// Enumerates every subgroup of `group`. Groups above `caps.max_order` are rejected.
pub fn enumerate_subgroups(group: &PermGroup, caps: Caps, exec: Exec) -> Result<Lattice> {
    let table = ElementTable::build(group, caps.max_order)?;
    let mut group_generators: Vec<Rank> = group
        .generators()
        .iter()
        .map(|g| table.rank_of(g).expect("generator is an element"))
        .filter(|&r| r != 0)
        .collect();
    group_generators.dedup();

    let store = enumerate::run(&table, &group_generators, exec);

    let mut order: Vec<usize> = (0..store.subgroups.len()).collect();
    order.sort_by(|&a, &b| {
        let (sa, sb) = (&store.subgroups[a], &store.subgroups[b]);
        sa.members
            .len()
            .cmp(&sb.members.len())
            .then_with(|| sa.members.cmp(&sb.members))
    });
    let mut class_remap: FxHashMap<usize, usize> = FxHashMap::default();
    let mut class_of = Vec::with_capacity(order.len());
    let mut classes: Vec<Vec<SubgroupId>> = Vec::new();
    let mut subgroups = Vec::with_capacity(order.len());
    let mut raw: Vec<Option<enumerate::RawSubgroup>> =
        store.subgroups.into_iter().map(Some).collect();
    for (new_idx, &old) in order.iter().enumerate() {
        let r = raw[old].take().unwrap();
        let next = class_remap.len();
        let c = *class_remap.entry(r.class).or_insert(next);
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(SubgroupId(new_idx));
        class_of.push(c);
        subgroups.push(Subgroup {
            members: r.members,
            bits: r.bits,
            generators: r.generators,
        });
    }
    let by_key = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.clone(), SubgroupId(i)))
        .collect();

    // Lower covers: scan strictly smaller candidates from the largest down;
    // a candidate is maximal unless it lies inside an already accepted one.
    let maximals: Vec<Vec<SubgroupId>> = exec.map_range(subgroups.len(), |j| {
        let top = &subgroups[j];
        let mut accepted: Vec<usize> = Vec::new();
        for i in (0..j).rev() {
            let s = &subgroups[i];
            if s.order() == top.order() || top.order() % s.order() != 0 || !s.is_subset(top) {
                continue;
            }
            let inside = accepted
                .iter()
                .any(|&a| subgroups[a].order() % s.order() == 0 && s.is_subset(&subgroups[a]));
            if !inside {
                accepted.push(i);
            }
        }
        accepted.reverse();
        accepted.into_iter().map(SubgroupId).collect()
    });
    let count = subgroups.len();
    let mut covers = vec![Vec::new(); count];
    let mut below: Vec<FixedBitSet> = Vec::with_capacity(count);
    for (j, lower) in maximals.iter().enumerate() {
        let mut b = FixedBitSet::with_capacity(count);
        for &SubgroupId(m) in lower {
            covers[m].push(SubgroupId(j));
            b.union_with(&below[m]);
            b.insert(m);
        }
        below.push(b);
    }

    Ok(Lattice {
        group: group.clone(),
        caps,
        exec,
        table,
        group_generators,
        subgroups,
        by_key,
        maximals,
        covers,
        below,
        class_of,
        classes,
    })
}

impl Lattice {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn group_order(&self) -> u64 {
        self.table.len() as u64
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = SubgroupId> + ExactSizeIterator {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id.0]
    }

    pub fn order(&self, id: SubgroupId) -> u64 {
        self.subgroups[id.0].order()
    }

    pub fn trivial(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn top(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    pub fn find(&self, sorted_members: &[Rank]) -> Option<SubgroupId> {
        self.by_key.get(sorted_members).copied()
    }

    /// `a ⊆ b`.
    pub fn is_contained(&self, a: SubgroupId, b: SubgroupId) -> bool {
        a == b || self.below[b.0].contains(a.0)
    }

    /// Maximal subgroups of `h` (its lower covers), in canonical order.
    pub fn maximal_subgroups_of(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.maximals[h.0]
    }

    /// Subgroups in which `h` is maximal.
    pub fn covers_of(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.covers[h.0]
    }

    /// All subgroups of `h`, including `h`, in canonical order.
    pub fn subgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        let mut v: Vec<SubgroupId> = self.below[h.0].ones().map(SubgroupId).collect();
        v.push(h);
        v
    }

    /// All subgroups containing `h`, including `h`, in canonical order.
    pub fn overgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        let oh = self.order(h);
        (h.0..self.subgroups.len())
            .map(SubgroupId)
            .filter(|&j| self.order(j).is_multiple_of(oh) && self.is_contained(h, j))
            .collect()
    }

    /// Pairs `(H, M)` with `M` maximal in the parent and `H` maximal in `M`,
    /// sorted by `H` then `M`.
    pub fn two_maximals(&self) -> Vec<(SubgroupId, SubgroupId)> {
        let mut pairs: Vec<(SubgroupId, SubgroupId)> = self
            .maximal_subgroups_of(self.top())
            .iter()
            .flat_map(|&m| self.maximal_subgroups_of(m).iter().map(move |&h| (h, m)))
            .collect();
        pairs.sort();
        pairs
    }

    /// Whether `h` is normalized by every generator of `within`.
    pub fn is_normal(&self, h: SubgroupId, within: SubgroupId) -> Result<bool> {
        if !self.is_contained(h, within) {
            return Err(GroupError::NotContained);
        }
        Ok(self.normalized_by(h, self.subgroups[within.0].generators()))
    }

    fn normalized_by(&self, h: SubgroupId, gens: &[Rank]) -> bool {
        let sub = &self.subgroups[h.0];
        gens.iter().all(|&g| {
            sub.generators
                .iter()
                .all(|&x| sub.contains_rank(self.table.conj(x, g)))
        })
    }

    /// Normal subgroups of `h`, in canonical order.
    pub fn normal_subgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        let gens = self.subgroups[h.0].generators();
        self.subgroups_of(h)
            .into_iter()
            .filter(|&k| self.normalized_by(k, gens))
            .collect()
    }

    pub fn conjugacy_classes_of_subgroups(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    pub fn class_of(&self, h: SubgroupId) -> usize {
        self.class_of[h.0]
    }

    /// Subgroup generated by `gens`, as sorted ranks.
    pub fn closure(&self, gens: &[Rank]) -> Vec<Rank> {
        let mut seen = FixedBitSet::with_capacity(self.table.len());
        seen.insert(0);
        let mut elems: Vec<Rank> = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.table.mul(x, g);
                if !seen.put(y as usize) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    fn lookup(&self, members: &[Rank]) -> SubgroupId {
        self.find(members)
            .expect("every subgroup of the parent is in its lattice")
    }

    /// Commutator subgroup of `h`: the normal closure in `h` of the
    /// commutators of its generator pairs.
    pub fn derived_subgroup(&self, h: SubgroupId) -> SubgroupId {
        let t = &self.table;
        let hgens = self.subgroups[h.0].generators();
        let mut gens: Vec<Rank> = Vec::new();
        for (i, &a) in hgens.iter().enumerate() {
            for &b in &hgens[i + 1..] {
                let c = t.commutator(a, b);
                if c != 0 && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut members = self.closure(&gens);
        let mut bits = FixedBitSet::with_capacity(t.len());
        members.iter().for_each(|&m| bits.insert(m as usize));
        let mut i = 0;
        while i < gens.len() {
            for &y in hgens {
                let c = t.conj(gens[i], y);
                if !bits.contains(c as usize) {
                    gens.push(c);
                    members = self.closure(&gens);
                    members.iter().for_each(|&m| bits.insert(m as usize));
                }
            }
            i += 1;
        }
        self.lookup(&members)
    }

    pub fn intersection(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let mut bits = self.subgroups[a.0].bits.clone();
        bits.intersect_with(&self.subgroups[b.0].bits);
        let members: Vec<Rank> = bits.ones().map(|x| x as Rank).collect();
        self.lookup(&members)
    }

    pub fn generator_permutations(&self, h: SubgroupId) -> Vec<Permutation> {
        self.subgroups[h.0]
            .generators()
            .iter()
            .map(|&r| self.table.element(r).clone())
            .collect()
    }

    /// The subgroup `h` as a standalone permutation group on the parent's points.
    pub fn as_group(&self, h: SubgroupId) -> PermGroup {
        PermGroup::new(self.group.degree(), self.generator_permutations(h)).expect("same degree")
    }

    /// Right-coset action of the parent on the cosets of a normal subgroup.
    /// Cosets are numbered by their smallest element rank.
    pub fn quotient(&self, n: SubgroupId) -> Result<PermGroup> {
        if !self.is_normal(n, self.top())? {
            return Err(GroupError::NotNormal);
        }
        let sub = &self.subgroups[n.0];
        let degree = self.table.len() / sub.members.len();
        self.caps.check_degree(degree)?;
        let t = &self.table;
        let mut coset = vec![usize::MAX; t.len()];
        let mut reps = Vec::with_capacity(degree);
        for x in 0..t.len() as Rank {
            if coset[x as usize] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in &sub.members {
                coset[t.mul(m, x) as usize] = id;
            }
        }
        let gens = self
            .group_generators
            .iter()
            .map(|&g| {
                Permutation::from_images(
                    reps.iter().map(|&r| coset[t.mul(r, g) as usize]).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }
}
