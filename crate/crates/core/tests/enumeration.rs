use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use nutkit::enumerate::{canonical_form, enumerate_connected, enumerate_nut};
use nutkit::graph::Graph;
use nutkit::symmetry::{automorphism_group, OrbitSignature};

fn brute_force_aut(g: &Graph) -> usize {
    (0..g.order()).permutations(g.order()).filter(|p| g.is_automorphism(p)).count()
}

/// Counts automorphisms by assigning images vertex by vertex, keeping
/// adjacency to already-placed vertices consistent.
fn backtrack_aut(g: &Graph) -> usize {
    fn go(g: &Graph, images: &mut Vec<usize>, used: &mut Vec<bool>) -> usize {
        let v = images.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(images[u], w)) {
                images.push(w);
                used[w] = true;
                total += go(g, images, used);
                used[w] = false;
                images.pop();
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Labelled connected graphs on `n` vertices, from the exponential
/// formula recurrence.
fn labelled_connected(n: usize) -> u128 {
    let binom = |a: usize, b: usize| -> u128 { (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128) };
    let all = |k: usize| 1u128 << (k * k.saturating_sub(1) / 2);
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let mut rest = 0;
        for k in 1..m {
            rest += binom(m - 1, k - 1) * c[k] * all(m - k);
        }
        c[m] = all(m) - rest;
    }
    c[n]
}

#[test]
fn connected_counts_through_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_connected(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn orbit_stabilizer_sum_matches_labelled_count() {
    assert_eq!((1..=7).map(labelled_connected).collect::<Vec<_>>(), vec![1, 1, 4, 38, 728, 26704, 1866256]);
    for n in 1..=7 {
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        let total: BigUint =
            enumerate_connected(n).unwrap().iter().map(|g| &factorial / automorphism_group(g).order()).sum();
        assert_eq!(total, BigUint::from(labelled_connected(n)), "n = {n}");
    }
}

#[test]
fn group_orders_match_brute_force_through_seven() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let a = automorphism_group(&g);
            assert_eq!(a.order(), BigUint::from(brute_force_aut(&g)), "n = {n}");
            assert_eq!(a.search_order(), a.order());
        }
    }
}

#[test]
fn group_orders_match_backtracking_at_eight() {
    for g in enumerate_connected(8).unwrap() {
        assert_eq!(automorphism_group(&g).order(), BigUint::from(backtrack_aut(&g)));
    }
}

#[test]
fn emitted_forms_are_distinct_and_sorted() {
    for n in 1..=8 {
        let forms: Vec<_> = enumerate_connected(n).unwrap().iter().map(canonical_form).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]), "n = {n}");
    }
}

#[test]
fn random_labelled_graphs_land_on_an_emitted_class() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in [6, 7, 8] {
        let classes: BTreeSet<_> = enumerate_connected(n).unwrap().iter().map(canonical_form).collect();
        let mut hits = 0;
        while hits < 200 {
            let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(0.4)).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert!(classes.contains(&canonical_form(&g.relabel(&perm))));
            hits += 1;
        }
    }
}

#[test]
fn seven_vertex_nut_census() {
    let sigs: Vec<OrbitSignature> = enumerate_nut(7).unwrap().into_iter().map(|r| r.signature).sorted().collect();
    let want: Vec<OrbitSignature> =
        [(3, 4, 6u32), (4, 5, 4), (4, 6, 4)].iter().map(|&(v, e, a)| OrbitSignature::new(v, e, a)).collect();
    assert_eq!(sigs, want);
}

#[test]
fn eight_vertex_nut_graphs() {
    let records = enumerate_nut(8).unwrap();
    let mut by_signature: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in &records {
        assert!(r.signature.o_e > r.signature.o_v);
        assert_eq!(r.nullity.eta, 1);
        assert!(r.kernel.is_full());
        *by_signature.entry((r.signature.o_v, r.signature.o_e)).or_default() += 1;
    }
    assert_eq!(records.len(), 13);
    // exactly one vertex-transitive nut graph on eight vertices
    assert_eq!(by_signature.keys().filter(|k| k.0 == 1).count(), 1);
    // none is asymmetric: the smallest group has order two
    assert_eq!(records.iter().map(|r| r.signature.aut_order.clone()).min(), Some(BigUint::from(2u32)));
}
