//! Cyclic-extension enumeration of all subgroups.
//!
//! Seeds are the trivial subgroup and every cyclic subgroup of prime-power
//! order. A worklist of conjugacy-class representatives is extended by every
//! seed cyclic subgroup not already inside it; each new join is added together
//! with its full conjugacy class. Any subgroup is generated by its
//! prime-power-order elements, and joins commute with conjugation, so the
//! fixpoint is the whole lattice.

use fixedbitset::FixedBitSet;
use rustc_hash::{FxHashMap, FxHashSet};

use super::table::{ElementTable, Rank};
use crate::arith::PrimePowerFactorization;
use crate::exec::Exec;

pub(super) struct RawSubgroup {
    pub members: Vec<Rank>,
    pub bits: FixedBitSet,
    pub generators: Vec<Rank>,
    pub class: usize,
}

pub(super) struct Store {
    pub subgroups: Vec<RawSubgroup>,
    pub by_key: FxHashMap<Vec<Rank>, usize>,
    pub class_count: usize,
}

enum Join {
    Whole,
    Sub(Vec<Rank>, Vec<Rank>),
}

fn bits_of(n: usize, members: &[Rank]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(n);
    for &m in members {
        bits.insert(m as usize);
    }
    bits
}

/// `⟨H, c⟩` by adding right cosets of `H` one at a time. Gives up with
/// `Whole` as soon as more than half the group is reached.
fn join(table: &ElementTable, h: &RawSubgroup, c: Rank) -> Join {
    let n = table.len();
    let mut gens = h.generators.clone();
    gens.push(c);
    let mut bits = h.bits.clone();
    let mut elems = h.members.clone();
    let mut reps: Vec<Rank> = vec![0];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i];
        for &s in &gens {
            let x = table.mul(r, s);
            if bits.contains(x as usize) {
                continue;
            }
            for &m in &h.members {
                let y = table.mul(m, x);
                bits.insert(y as usize);
                elems.push(y);
            }
            if 2 * elems.len() > n {
                return Join::Whole;
            }
            reps.push(x);
        }
        i += 1;
    }
    elems.sort_unstable();
    Join::Sub(elems, gens)
}

impl Store {
    fn new() -> Self {
        Store {
            subgroups: Vec::new(),
            by_key: FxHashMap::default(),
            class_count: 0,
        }
    }

    /// Inserts `members` and all its conjugates under `conjugators`. Returns the
    /// index of the inserted representative, or `None` if it was already known.
    fn insert_class(
        &mut self,
        table: &ElementTable,
        conjugators: &[Rank],
        members: Vec<Rank>,
        generators: Vec<Rank>,
    ) -> Option<usize> {
        if self.by_key.contains_key(&members) {
            return None;
        }
        let class = self.class_count;
        self.class_count += 1;
        let n = table.len();
        let first = self.subgroups.len();
        self.by_key.insert(members.clone(), first);
        self.subgroups.push(RawSubgroup {
            bits: bits_of(n, &members),
            members,
            generators,
            class,
        });
        let mut i = first;
        while i < self.subgroups.len() {
            for &g in conjugators {
                let sub = &self.subgroups[i];
                let mut conj: Vec<Rank> = sub.members.iter().map(|&x| table.conj(x, g)).collect();
                conj.sort_unstable();
                if self.by_key.contains_key(&conj) {
                    continue;
                }
                let gens = sub.generators.iter().map(|&x| table.conj(x, g)).collect();
                self.by_key.insert(conj.clone(), self.subgroups.len());
                self.subgroups.push(RawSubgroup {
                    bits: bits_of(n, &conj),
                    members: conj,
                    generators: gens,
                    class,
                });
            }
            i += 1;
        }
        Some(first)
    }
}

pub(super) fn run(table: &ElementTable, group_gens: &[Rank], exec: Exec) -> Store {
    let n = table.len();
    let mut store = Store::new();
    store.insert_class(table, group_gens, vec![0], Vec::new());
    let whole: Vec<Rank> = (0..n as Rank).collect();
    store.insert_class(table, group_gens, whole, group_gens.to_vec());

    // Seed cyclic subgroups of prime-power order.
    let mut covered = vec![false; n];
    covered[0] = true;
    let mut worklist: Vec<usize> = Vec::new();
    for x in 1..n as Rank {
        if covered[x as usize] {
            continue;
        }
        let ord = table.order_of(x);
        let f = PrimePowerFactorization::of(ord);
        if !f.is_prime_power() {
            continue;
        }
        let p = f.primes()[0];
        let mut powers = Vec::with_capacity(ord as usize);
        let mut y: Rank = 0;
        for k in 0..ord {
            // generators of ⟨x⟩ are the powers coprime to p
            if k % p != 0 {
                covered[y as usize] = true;
            }
            powers.push(y);
            y = table.mul(y, x);
        }
        powers.sort_unstable();
        if let Some(rep) = store.insert_class(table, group_gens, powers, vec![x]) {
            worklist.push(rep);
        }
    }
    let cyclic: Vec<Rank> = store
        .subgroups
        .iter()
        .filter(|s| s.generators.len() == 1 && s.members.len() < n)
        .map(|s| s.generators[0])
        .collect();

    while !worklist.is_empty() {
        let batch = std::mem::take(&mut worklist);
        let found: Vec<Vec<(Vec<Rank>, Vec<Rank>)>> = exec.map(&batch, |&h_idx| {
            let h = &store.subgroups[h_idx];
            let mut seen: FxHashSet<Vec<Rank>> = FxHashSet::default();
            let mut out = Vec::new();
            for &c in &cyclic {
                if h.bits.contains(c as usize) {
                    continue;
                }
                if let Join::Sub(members, gens) = join(table, h, c) {
                    if !store.by_key.contains_key(&members) && seen.insert(members.clone()) {
                        out.push((members, gens));
                    }
                }
            }
            out
        });
        for (members, gens) in found.into_iter().flatten() {
            if let Some(rep) = store.insert_class(table, group_gens, members, gens) {
                worklist.push(rep);
            }
        }
    }
    store
}
