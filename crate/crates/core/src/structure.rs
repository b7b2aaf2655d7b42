//! Structural predicates and characteristic subgroups computed from a lattice.
//!
//! Everything here works on subgroups of the lattice's parent: a predicate on
//! `h` looks only at the part of the lattice below `h`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{gcd, is_prime, PrimePowerFactorization};
use crate::error::{GroupError, Result};
use crate::lattice::{enumerate_subgroups, Lattice, SubgroupId};

/// The primes of a group order split by whether their Sylow subgroup has
/// prime order (`sigma`) or order at least `p²` (`tau`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaTau {
    pub sigma: BTreeSet<u64>,
    pub tau: BTreeSet<u64>,
}

impl SigmaTau {
    pub fn of_order(order: u64) -> Self {
        let f = PrimePowerFactorization::of(order);
        let (sigma, tau) = f.iter().partition::<Vec<_>, _>(|&(_, e)| e == 1);
        SigmaTau {
            sigma: sigma.into_iter().map(|(p, _)| p).collect(),
            tau: tau.into_iter().map(|(p, _)| p).collect(),
        }
    }

    pub fn pi(&self) -> BTreeSet<u64> {
        self.sigma.union(&self.tau).copied().collect()
    }
}

pub fn sigma_tau(lattice: &Lattice) -> SigmaTau {
    SigmaTau::of_order(lattice.group_order())
}

/// Product of the full `p`-parts of `n` over `primes`.
pub fn pi_part(n: u64, primes: &BTreeSet<u64>) -> u64 {
    let f = PrimePowerFactorization::of(n);
    primes.iter().map(|&p| f.part(p)).product()
}

pub fn is_hall_order(sub_order: u64, group_order: u64) -> bool {
    gcd(sub_order, group_order / sub_order) == 1
}

/// `|H|` and `|G : H|` coprime, with `G` the lattice's parent.
pub fn is_hall(lattice: &Lattice, h: SubgroupId) -> bool {
    is_hall_order(lattice.order(h), lattice.group_order())
}

/// First subgroup of `h` (canonical order) whose order is the full `p`-part of `|h|`.
pub fn sylow_subgroup_of(lattice: &Lattice, h: SubgroupId, p: u64) -> Result<SubgroupId> {
    let order = lattice.order(h);
    if !is_prime(p) || !order.is_multiple_of(p) {
        return Err(GroupError::NotADivisor(p));
    }
    let target = PrimePowerFactorization::of(order).part(p);
    lattice
        .subgroups_of(h)
        .into_iter()
        .find(|&s| lattice.order(s) == target)
        .ok_or_else(|| GroupError::Inconsistent(format!("no Sylow {p}-subgroup in the lattice")))
}

pub fn sylow_subgroup(lattice: &Lattice, p: u64) -> Result<SubgroupId> {
    sylow_subgroup_of(lattice, lattice.top(), p)
}

/// All subgroups of order equal to the full `primes`-part of the group order.
pub fn hall_subgroups(lattice: &Lattice, primes: &BTreeSet<u64>) -> Vec<SubgroupId> {
    let target = pi_part(lattice.group_order(), primes);
    lattice
        .ids()
        .filter(|&s| lattice.order(s) == target)
        .collect()
}

/// First Hall subgroup for `primes` in canonical order, if any exists.
pub fn hall_subgroup(lattice: &Lattice, primes: &BTreeSet<u64>) -> Option<SubgroupId> {
    hall_subgroups(lattice, primes).into_iter().next()
}

pub fn is_abelian(lattice: &Lattice, h: SubgroupId) -> bool {
    let t = lattice.table();
    let gens = lattice.subgroup(h).generators();
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
}

/// Abelian of prime-power order and exponent dividing that prime.
pub fn is_elementary_abelian(lattice: &Lattice, h: SubgroupId) -> bool {
    let f = PrimePowerFactorization::of(lattice.order(h));
    if !f.is_prime_power() {
        return false;
    }
    let Some(&p) = f.primes().first() else {
        return true;
    };
    let t = lattice.table();
    is_abelian(lattice, h)
        && lattice
            .subgroup(h)
            .members()
            .iter()
            .all(|&x| t.pow(x, p) == 0)
}

/// Derived series of `h`, starting with `h` and ending at its perfect core.
pub fn derived_series(lattice: &Lattice, h: SubgroupId) -> Vec<SubgroupId> {
    let mut series = vec![h];
    loop {
        let last = *series.last().unwrap();
        let next = lattice.derived_subgroup(last);
        if next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable_subgroup(lattice: &Lattice, h: SubgroupId) -> bool {
    *derived_series(lattice, h).last().unwrap() == lattice.trivial()
}

pub fn is_solvable(lattice: &Lattice) -> bool {
    is_solvable_subgroup(lattice, lattice.top())
}

/// Every Sylow subgroup of `h` is normal in `h`.
pub fn is_nilpotent_subgroup(lattice: &Lattice, h: SubgroupId) -> bool {
    PrimePowerFactorization::of(lattice.order(h))
        .primes()
        .into_iter()
        .all(|p| {
            let s = sylow_subgroup_of(lattice, h, p).expect("Sylow subgroups exist");
            lattice.is_normal(s, h).expect("contained")
        })
}

pub fn is_nilpotent(lattice: &Lattice) -> bool {
    is_nilpotent_subgroup(lattice, lattice.top())
}

/// Largest normal subgroup of the parent with property `pred`, checked to
/// contain every other normal subgroup with the property.
fn largest_normal_with(
    lattice: &Lattice,
    what: &str,
    pred: impl Fn(SubgroupId) -> bool,
) -> Result<SubgroupId> {
    let qualifying: Vec<SubgroupId> = lattice
        .normal_subgroups_of(lattice.top())
        .into_iter()
        .filter(|&n| pred(n))
        .collect();
    let best = *qualifying
        .iter()
        .max_by_key(|&&n| (lattice.order(n), std::cmp::Reverse(n)))
        .expect("the trivial subgroup always qualifies");
    if qualifying.iter().any(|&n| !lattice.is_contained(n, best)) {
        return Err(GroupError::Inconsistent(format!(
            "largest normal {what} subgroup does not contain all others"
        )));
    }
    Ok(best)
}

pub fn fitting_subgroup(lattice: &Lattice) -> Result<SubgroupId> {
    largest_normal_with(lattice, "nilpotent", |n| is_nilpotent_subgroup(lattice, n))
}

pub fn solvable_radical(lattice: &Lattice) -> Result<SubgroupId> {
    largest_normal_with(lattice, "solvable", |n| is_solvable_subgroup(lattice, n))
}

/// Walks a chief series of `h` upward from the normal subgroup `bottom`,
/// always stepping to a smallest normal subgroup of `h` strictly above the
/// current one. Returns whether every factor has prime order.
fn chief_factors_prime(lattice: &Lattice, h: SubgroupId, bottom: SubgroupId) -> bool {
    let normals: Vec<SubgroupId> = lattice
        .normal_subgroups_of(h)
        .into_iter()
        .filter(|&k| lattice.is_contained(bottom, k))
        .collect();
    let mut current = bottom;
    while current != h {
        let next = normals
            .iter()
            .copied()
            .filter(|&k| k != current && lattice.is_contained(current, k))
            .min_by_key(|&k| (lattice.order(k), k))
            .expect("h itself lies above");
        if !is_prime(lattice.order(next) / lattice.order(current)) {
            return false;
        }
        current = next;
    }
    true
}

/// Supersolvable: some chief series has only prime-order factors.
pub fn is_supersolvable_subgroup(lattice: &Lattice, h: SubgroupId) -> bool {
    chief_factors_prime(lattice, h, lattice.trivial())
}

pub fn is_supersolvable(lattice: &Lattice) -> bool {
    is_supersolvable_subgroup(lattice, lattice.top())
}

/// Whether `G/N` is supersolvable, for `N` normal in the parent `G`.
pub fn quotient_is_supersolvable(lattice: &Lattice, n: SubgroupId) -> bool {
    chief_factors_prime(lattice, lattice.top(), n)
}

/// Independent check: every maximal subgroup of `h` has prime index.
pub fn all_maximals_prime_index(lattice: &Lattice, h: SubgroupId) -> bool {
    let oh = lattice.order(h);
    lattice
        .maximal_subgroups_of(h)
        .iter()
        .all(|&m| is_prime(oh / lattice.order(m)))
}

/// Smallest normal subgroup with supersolvable quotient. Minimality is
/// confirmed twice: containment in every qualifying subgroup, and equality with
/// their intersection.
pub fn supersolvable_residual(lattice: &Lattice) -> Result<SubgroupId> {
    let qualifying: Vec<SubgroupId> = lattice
        .normal_subgroups_of(lattice.top())
        .into_iter()
        .filter(|&n| quotient_is_supersolvable(lattice, n))
        .collect();
    let residual = qualifying[0];
    if qualifying
        .iter()
        .any(|&n| !lattice.is_contained(residual, n))
    {
        return Err(GroupError::Inconsistent(
            "supersolvable residual not contained in every qualifying normal subgroup".into(),
        ));
    }
    let meet = qualifying
        .iter()
        .fold(lattice.top(), |acc, &n| lattice.intersection(acc, n));
    if meet != residual {
        return Err(GroupError::Inconsistent(
            "supersolvable residual differs from the intersection of qualifying subgroups".into(),
        ));
    }
    Ok(residual)
}

/// Sylow-tower search: peel a normal Sylow subgroup, pass to the quotient, recurse.
/// Primes are tried in ascending order with backtracking. Returns the peeling
/// order that worked, or `None` when no order works. Quotients above the degree
/// cap surface as errors rather than a negative answer.
pub fn has_sylow_tower(lattice: &Lattice) -> Result<Option<Vec<u64>>> {
    let primes = PrimePowerFactorization::of(lattice.group_order()).primes();
    if primes.len() <= 1 {
        return Ok(Some(primes));
    }
    for p in primes {
        let sylow = sylow_subgroup(lattice, p)?;
        if !lattice.is_normal(sylow, lattice.top())? {
            continue;
        }
        let quotient = lattice.quotient(sylow)?;
        let q_lattice = enumerate_subgroups(&quotient, lattice.caps(), lattice.exec())?;
        if let Some(rest) = has_sylow_tower(&q_lattice)? {
            let mut ordering = vec![p];
            ordering.extend(rest);
            return Ok(Some(ordering));
        }
    }
    Ok(None)
}

/// Condition (2) of a Gaschütz subgroup, checked over covering pairs only.
fn no_prime_index_cover_above(lattice: &Lattice, above: &[SubgroupId]) -> bool {
    above.iter().all(|&a| {
        lattice
            .covers_of(a)
            .iter()
            .all(|&b| !is_prime(lattice.order(b) / lattice.order(a)))
    })
}

/// Condition (2) checked literally over every pair `W ≤ A < B`.
fn no_prime_index_pair_above(lattice: &Lattice, above: &[SubgroupId]) -> bool {
    for (i, &a) in above.iter().enumerate() {
        for &b in &above[i + 1..] {
            let (oa, ob) = (lattice.order(a), lattice.order(b));
            if ob > oa && ob % oa == 0 && is_prime(ob / oa) && lattice.is_contained(a, b) {
                return false;
            }
        }
    }
    true
}

/// All supersolvable subgroups `W` such that no `W ≤ A < B` has prime `|B : A|`.
///
/// The literal all-pairs test is the contract; the covering-pair test is run
/// alongside and any disagreement is an error. For a solvable parent an empty
/// result is also an error.
pub fn gaschutz_subgroups(lattice: &Lattice) -> Result<Vec<SubgroupId>> {
    let ids: Vec<SubgroupId> = lattice.ids().collect();
    let verdicts: Vec<Result<bool>> = lattice.exec().map(&ids, |&w| {
        let above = lattice.overgroups_of(w);
        let literal = no_prime_index_pair_above(lattice, &above);
        let covering = no_prime_index_cover_above(lattice, &above);
        if literal != covering {
            return Err(GroupError::Inconsistent(format!(
                "Gaschütz index test disagrees between pairs and covers at {w}"
            )));
        }
        Ok(literal && is_supersolvable_subgroup(lattice, w))
    });
    let mut out = Vec::new();
    for (w, v) in ids.into_iter().zip(verdicts) {
        if v? {
            out.push(w);
        }
    }
    if out.is_empty() && is_solvable(lattice) {
        return Err(GroupError::Inconsistent(
            "solvable group without Gaschütz subgroups".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
