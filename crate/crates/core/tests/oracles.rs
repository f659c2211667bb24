//! Independent brute-force oracles checked against the library.

use std::collections::BTreeSet;

use semitrace::verifier::{enumerate_monomial_ideals, IdealQuery};
use semitrace::{enumerate_semigroups, NumericalSemigroup, ValueIdeal, ValueSet};

/// Membership by plain reachability over `[0, n]`.
fn reachable(gens: &[i64], n: i64) -> Vec<bool> {
    let mut ok = vec![false; n as usize + 1];
    ok[0] = true;
    for k in 1..=n {
        ok[k as usize] = gens.iter().any(|&g| g <= k && ok[(k - g) as usize]);
    }
    ok
}

#[test]
fn membership_matches_reachability() {
    let cases: &[&[i64]] = &[
        &[2, 3],
        &[3, 5],
        &[3, 7],
        &[4, 6, 9],
        &[5, 6, 7],
        &[7, 8, 9, 11],
        &[6, 10, 15],
        &[11, 13, 17],
        &[3, 8, 13],
        &[1],
    ];
    for gens in cases {
        let s = NumericalSemigroup::new(gens).unwrap();
        let top = 200;
        let ok = reachable(gens, top);
        for n in 0..=top {
            assert_eq!(s.contains(n), ok[n as usize], "{s} at {n}");
        }
        let gaps: Vec<i64> = (0..=top).filter(|&n| !ok[n as usize]).collect();
        assert_eq!(s.gaps(), gaps);
        assert_eq!(s.genus(), gaps.len());
        assert_eq!(s.frobenius(), gaps.last().copied().unwrap_or(-1));
    }
}

#[test]
fn frobenius_of_two_generators() {
    for a in 2..12i64 {
        for b in a + 1..20 {
            if gcd(a, b) != 1 {
                continue;
            }
            let s = NumericalSemigroup::new(&[a, b]).unwrap();
            assert_eq!(s.frobenius(), a * b - a - b);
            assert_eq!(s.genus() as i64, (a - 1) * (b - 1) / 2);
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every numerical semigroup of genus `g`, as its gap set, by testing all
/// subsets of `[1, 2g - 1]` (the Frobenius number is at most `2g - 1`).
fn brute_force_semigroups(g: usize) -> BTreeSet<Vec<i64>> {
    let top = (2 * g).max(1) as i64;
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (top - 1)) {
        let inside = |n: i64| n == 0 || n >= top || (mask >> (n - 1)) & 1 == 1;
        let closed = (1..top)
            .filter(|&a| inside(a))
            .all(|a| (1..top).filter(|&b| inside(b)).all(|b| inside(a + b)));
        let gaps: Vec<i64> = (1..top).filter(|&n| !inside(n)).collect();
        if closed && gaps.len() == g {
            out.insert(gaps);
        }
    }
    out
}

#[test]
fn tree_enumeration_matches_brute_force() {
    let expected_counts = [1, 1, 2, 4, 7, 12];
    let mut by_genus = vec![BTreeSet::new(); 6];
    for s in enumerate_semigroups(5).unwrap() {
        by_genus[s.genus()].insert(s.gaps());
    }
    for g in 0..=5 {
        let brute = brute_force_semigroups(g);
        assert_eq!(brute.len(), expected_counts[g], "genus {g}");
        assert_eq!(by_genus[g], brute, "genus {g}");
    }
}

/// All integral monomial ideals with least value at most `c`, found by
/// testing every subset of `v(R) ∩ [0, 2c)` for closure.
fn brute_force_ideals(s: &NumericalSemigroup) -> BTreeSet<Vec<i64>> {
    let c = s.conductor();
    let window: Vec<i64> = (0..2 * c).filter(|&n| s.contains(n)).collect();
    assert!(window.len() <= 16, "oracle too large for {s}");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << window.len()) {
        let chosen: Vec<i64> = (0..window.len())
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| window[i])
            .collect();
        if chosen[0] > c {
            continue;
        }
        let inside = |n: i64| n >= 2 * c || chosen.contains(&n);
        let closed = chosen.iter().all(|&a| {
            (1..=2 * c)
                .filter(|&r| s.contains(r))
                .all(|r| inside(a + r))
        });
        if closed {
            out.insert(chosen);
        }
    }
    out
}

fn listing(ideal: &ValueIdeal, c: i64) -> Vec<i64> {
    (0..2 * c).filter(|&n| ideal.contains(n)).collect()
}

#[test]
fn ideal_enumeration_is_complete() {
    for gens in [
        &[2, 3][..],
        &[2, 5],
        &[3, 4, 5],
        &[3, 4],
        &[3, 5, 7],
        &[4, 5, 6, 7],
        &[4, 5, 7],
        &[4, 6, 7],
        &[5, 6, 7, 8, 9],
        &[5, 6, 7],
        &[3, 7, 8],
    ] {
        let s = NumericalSemigroup::new(gens).unwrap();
        let c = s.conductor();
        let brute = brute_force_ideals(&s);
        let listed: BTreeSet<Vec<i64>> = enumerate_monomial_ideals(&s, &IdealQuery::all())
            .unwrap()
            .iter()
            .map(|i| listing(i, c))
            .collect();
        assert_eq!(listed, brute, "{s}");

        let with_c: BTreeSet<Vec<i64>> = brute
            .iter()
            .filter(|v| (c..2 * c).all(|n| v.contains(&n)))
            .cloned()
            .collect();
        let listed_c: BTreeSet<Vec<i64>> =
            enumerate_monomial_ideals(&s, &IdealQuery::containing_conductor())
                .unwrap()
                .iter()
                .map(|i| listing(i, c))
                .collect();
        assert_eq!(listed_c, with_c, "{s}");
    }
}

/// `a ∈ I : J` iff `a + b ∈ I` for every `b ∈ J`, tested on a window wide
/// enough that everything past it is forced.
fn brute_colon(i: &ValueSet, j: &ValueSet) -> BTreeSet<i64> {
    let lo = i.min() - j.min() - 2;
    let hi = i.stable() - j.min() + 2;
    (lo..=hi)
        .filter(|&a| {
            let top = j.stable().max(i.stable() - a) + 1;
            (j.min()..=top)
                .filter(|&b| j.contains(b))
                .all(|b| i.contains(a + b))
        })
        .collect()
}

#[test]
fn colon_matches_membership_oracle() {
    let s = NumericalSemigroup::new(&[7, 8, 9, 11]).unwrap();
    let ideals = enumerate_monomial_ideals(&s, &IdealQuery::proper().normalized()).unwrap();
    for i in ideals.iter().take(40) {
        for j in ideals.iter().take(40) {
            let colon = i.colon(j).unwrap();
            let brute = brute_colon(i.values(), j.values());
            let lo = i.min_value() - j.min_value() - 2;
            let hi = i.stable_bound() - j.min_value() + 2;
            let got: BTreeSet<i64> = (lo..=hi).filter(|&a| colon.contains(a)).collect();
            assert_eq!(got, brute, "{i} : {j}");
            assert!(colon.contains(hi + 1));
        }
    }
}

#[test]
fn product_matches_sumset() {
    let s = NumericalSemigroup::new(&[5, 6, 7]).unwrap();
    let ideals = enumerate_monomial_ideals(&s, &IdealQuery::all()).unwrap();
    for i in &ideals {
        for j in &ideals {
            let p = i.product(j).unwrap();
            let hi = i.stable_bound() + j.stable_bound() + 2;
            let sums: BTreeSet<i64> = (0..=hi)
                .flat_map(|a| (0..=hi).map(move |b| (a, b)))
                .filter(|&(a, b)| i.contains(a) && j.contains(b))
                .map(|(a, b)| a + b)
                .filter(|&n| n <= hi)
                .collect();
            let got: BTreeSet<i64> = (0..=hi).filter(|&n| p.contains(n)).collect();
            assert_eq!(got, sums, "{i} * {j}");
        }
    }
}
