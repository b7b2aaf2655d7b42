use super::*;
use crate::constructors::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian, psl2, symmetric,
};
use crate::exec::Exec;
use crate::permcore::{Caps, PermGroup};
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

fn lat(g: &PermGroup) -> Lattice {
    enumerate_subgroups(g, caps(), Exec::Sequential).unwrap()
}

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

fn orders(l: &Lattice, ids: &[SubgroupId]) -> Vec<u64> {
    ids.iter().map(|&h| l.order(h)).collect()
}

#[test]
fn sigma_tau_split() {
    let s3 = lat(&symmetric(3, caps()).unwrap());
    assert_eq!(
        sigma_tau(&s3),
        SigmaTau {
            sigma: set(&[2, 3]),
            tau: set(&[])
        }
    );
    let a4 = lat(&alternating(4, caps()).unwrap());
    assert_eq!(
        sigma_tau(&a4),
        SigmaTau {
            sigma: set(&[3]),
            tau: set(&[2])
        }
    );
    let st = SigmaTau::of_order(12615);
    assert_eq!(st.sigma, set(&[3, 5]));
    assert_eq!(st.tau, set(&[29]));
    assert_eq!(st.pi(), set(&[3, 5, 29]));
    assert_eq!(pi_part(12615, &set(&[29])), 841);
    assert_eq!(pi_part(12615, &set(&[3, 5])), 15);
}

#[test]
fn hall_subgroups_of_psl27() {
    let l = lat(&psl2(7).unwrap());
    for h in l.ids() {
        let expected = matches!(l.order(h), 1 | 3 | 7 | 8 | 21 | 24 | 168);
        assert_eq!(is_hall(&l, h), expected, "order {}", l.order(h));
    }
    assert_eq!(l.order(hall_subgroup(&l, &set(&[3, 7])).unwrap()), 21);
    assert_eq!(hall_subgroups(&l, &set(&[2, 3])).len(), 14);
}

#[test]
fn missing_hall_subgroup_in_a5() {
    let l = lat(&alternating(5, caps()).unwrap());
    assert!(hall_subgroup(&l, &set(&[2, 5])).is_none());
    assert!(hall_subgroup(&l, &set(&[3, 5])).is_none());
    assert_eq!(l.order(hall_subgroup(&l, &set(&[2, 3])).unwrap()), 12);
}

#[test]
fn sylow_subgroups() {
    let l = lat(&symmetric(4, caps()).unwrap());
    assert_eq!(l.order(sylow_subgroup(&l, 2).unwrap()), 8);
    assert_eq!(l.order(sylow_subgroup(&l, 3).unwrap()), 3);
    assert!(matches!(
        sylow_subgroup(&l, 5),
        Err(GroupError::NotADivisor(5))
    ));
    assert!(matches!(
        sylow_subgroup(&l, 4),
        Err(GroupError::NotADivisor(4))
    ));
}

#[test]
fn abelian_and_elementary_abelian() {
    let l = lat(&symmetric(4, caps()).unwrap());
    let v4: Vec<SubgroupId> = l
        .ids()
        .filter(|&h| l.order(h) == 4 && is_elementary_abelian(&l, h))
        .collect();
    assert_eq!(v4.len(), 4);
    let c4 = l
        .ids()
        .filter(|&h| l.order(h) == 4 && !is_elementary_abelian(&l, h))
        .count();
    assert_eq!(c4, 3);
    assert!(is_elementary_abelian(&l, l.trivial()));
    assert!(!is_abelian(&l, l.top()));
    let e = lat(&elementary_abelian(3, 2, caps()).unwrap());
    assert!(is_elementary_abelian(&e, e.top()));
    let c6 = lat(&cyclic(6, caps()).unwrap());
    assert!(is_abelian(&c6, c6.top()) && !is_elementary_abelian(&c6, c6.top()));
}

#[test]
fn solvable_and_nilpotent() {
    let a5 = lat(&alternating(5, caps()).unwrap());
    assert!(!is_solvable(&a5));
    assert_eq!(derived_series(&a5, a5.top()), vec![a5.top()]);
    assert_eq!(solvable_radical(&a5).unwrap(), a5.trivial());
    assert_eq!(fitting_subgroup(&a5).unwrap(), a5.trivial());

    let s4 = lat(&symmetric(4, caps()).unwrap());
    assert!(is_solvable(&s4));
    assert_eq!(
        orders(&s4, &derived_series(&s4, s4.top())),
        vec![24, 12, 4, 1]
    );
    assert_eq!(s4.order(fitting_subgroup(&s4).unwrap()), 4);
    assert_eq!(solvable_radical(&s4).unwrap(), s4.top());
    assert!(!is_nilpotent(&s4));

    assert!(is_nilpotent(&lat(&dihedral(4, caps()).unwrap())));
    assert!(is_nilpotent(&lat(&cyclic(12, caps()).unwrap())));
    assert!(!is_nilpotent(&lat(&symmetric(3, caps()).unwrap())));
}

#[test]
fn supersolvability() {
    for (g, expected) in [
        (symmetric(3, caps()).unwrap(), true),
        (alternating(4, caps()).unwrap(), false),
        (symmetric(4, caps()).unwrap(), false),
        (dihedral(15, caps()).unwrap(), true),
        (cyclic(12, caps()).unwrap(), true),
        (alternating(5, caps()).unwrap(), false),
        (elementary_abelian(5, 2, caps()).unwrap(), true),
    ] {
        let l = lat(&g);
        assert_eq!(is_supersolvable(&l), expected, "order {}", l.group_order());
        assert_eq!(all_maximals_prime_index(&l, l.top()), expected);
    }
}

#[test]
fn residuals() {
    let a4 = lat(&alternating(4, caps()).unwrap());
    assert_eq!(a4.order(supersolvable_residual(&a4).unwrap()), 4);
    let s4 = lat(&symmetric(4, caps()).unwrap());
    assert_eq!(s4.order(supersolvable_residual(&s4).unwrap()), 4);
    let a5 = lat(&alternating(5, caps()).unwrap());
    assert_eq!(supersolvable_residual(&a5).unwrap(), a5.top());
    let s3 = lat(&symmetric(3, caps()).unwrap());
    assert_eq!(supersolvable_residual(&s3).unwrap(), s3.trivial());
    assert!(quotient_is_supersolvable(&s3, s3.trivial()));
}

#[test]
fn sylow_towers() {
    let tower = |g: PermGroup| has_sylow_tower(&lat(&g)).unwrap();
    assert_eq!(tower(symmetric(3, caps()).unwrap()), Some(vec![3, 2]));
    assert_eq!(tower(alternating(4, caps()).unwrap()), Some(vec![2, 3]));
    assert_eq!(tower(cyclic(30, caps()).unwrap()), Some(vec![2, 3, 5]));
    assert_eq!(tower(cyclic(1, caps()).unwrap()), Some(vec![]));
    assert_eq!(tower(symmetric(4, caps()).unwrap()), None);
    assert_eq!(tower(alternating(5, caps()).unwrap()), None);
    let s3c5 = direct_product(
        &symmetric(3, caps()).unwrap(),
        &cyclic(5, caps()).unwrap(),
        caps(),
    );
    assert_eq!(tower(s3c5.unwrap()), Some(vec![3, 2, 5]));
}

#[test]
fn gaschutz() {
    let s3 = lat(&symmetric(3, caps()).unwrap());
    assert_eq!(gaschutz_subgroups(&s3).unwrap(), vec![s3.top()]);
    let a4 = lat(&alternating(4, caps()).unwrap());
    assert_eq!(
        orders(&a4, &gaschutz_subgroups(&a4).unwrap()),
        vec![3, 3, 3, 3]
    );
    let s4 = lat(&symmetric(4, caps()).unwrap());
    assert_eq!(
        orders(&s4, &gaschutz_subgroups(&s4).unwrap()),
        vec![6, 6, 6, 6]
    );
    let a5 = lat(&alternating(5, caps()).unwrap());
    assert!(gaschutz_subgroups(&a5).is_ok());
}

fn small_group() -> impl Strategy<Value = PermGroup> {
    prop_oneof![
        (1usize..=30).prop_map(|n| cyclic(n, Caps::default()).unwrap()),
        (3usize..=12).prop_map(|n| dihedral(n, Caps::default()).unwrap()),
        (1usize..=4).prop_map(|n| symmetric(n, Caps::default()).unwrap()),
        (3usize..=5).prop_map(|n| alternating(n, Caps::default()).unwrap()),
        (1usize..=4).prop_map(|n| direct_product(
            &alternating(4, Caps::default()).unwrap(),
            &cyclic(n, Caps::default()).unwrap(),
            Caps::default()
        )
        .unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn huppert_agrees_with_chief_series(g in small_group()) {
        let l = lat(&g);
        for h in l.ids() {
            prop_assert_eq!(is_supersolvable_subgroup(&l, h), all_maximals_prime_index(&l, h));
        }
    }

    #[test]
    fn nilpotent_implies_supersolvable_implies_solvable(g in small_group()) {
        let l = lat(&g);
        if is_nilpotent(&l) { prop_assert!(is_supersolvable(&l)); }
        if is_supersolvable(&l) { prop_assert!(is_solvable(&l)); }
    }

    #[test]
    fn residual_is_normal_with_supersolvable_quotient(g in small_group()) {
        let l = lat(&g);
        let r = supersolvable_residual(&l).unwrap();
        prop_assert!(l.is_normal(r, l.top()).unwrap());
        prop_assert!(quotient_is_supersolvable(&l, r));
        prop_assert_eq!(r == l.trivial(), is_supersolvable(&l));
    }

    #[test]
    fn gaschutz_subgroups_are_supersolvable_and_conjugate(g in small_group()) {
        let l = lat(&g);
        let ws = gaschutz_subgroups(&l).unwrap();
        if is_solvable(&l) {
            let class = l.class_of(ws[0]);
            prop_assert!(ws.iter().all(|&w| l.class_of(w) == class));
            prop_assert_eq!(ws.len(), l.conjugacy_classes_of_subgroups()[class].len());
        }
        for &w in &ws {
            prop_assert!(is_supersolvable_subgroup(&l, w));
        }
    }

    #[test]
    fn sylow_tower_ordering_is_a_permutation_of_primes(g in small_group()) {
        let l = lat(&g);
        if let Some(ord) = has_sylow_tower(&l).unwrap() {
            let mut sorted = ord.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, PrimePowerFactorization::of(l.group_order()).primes());
            if let Some(&p) = ord.first() {
                let s = sylow_subgroup(&l, p).unwrap();
                prop_assert!(l.is_normal(s, l.top()).unwrap());
            }
        }
    }
}
