use num_bigint::BigUint;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use nutkit::enumerate::{canonical_form, enumerate_nut};
use nutkit::families::{circulant, rose_window, sporadic, Sporadic};
use nutkit::graph::Graph;
use nutkit::nut::is_nut;
use nutkit::symmetry::{automorphism_group, has_sign_reversing_automorphism, orbit_signature, OrbitSignature};
use nutkit::verify::{check_circulant_dihedral, check_orbit_sums, Outcome};

/// The seven-vertex nut graph with signature `(4, 6, 4)`.
fn s2() -> Graph {
    let want = OrbitSignature::new(4, 6, 4u32);
    enumerate_nut(7).unwrap().into_iter().find(|r| r.signature == want).unwrap().graph
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[test]
fn circulant_groups_are_dihedral() {
    for k in 1..=3 {
        for n in 2 * k + 1..=20 {
            if n < 3 {
                continue;
            }
            let s: Vec<usize> = (1..=k).collect();
            let a = automorphism_group(&circulant(n, &s).unwrap());
            let want = if n == 2 * k + 1 {
                factorial(n)
            } else if n == 2 * k + 2 {
                (BigUint::from(1u32) << (k + 1)) * factorial(k + 1)
            } else {
                BigUint::from(2 * n)
            };
            assert_eq!(a.order(), want, "k = {k}, n = {n}");
            assert!(a.is_transitive());
        }
        assert_eq!(check_circulant_dihedral(k, 2 * k + 1..=20).unwrap().outcome, Outcome::Pass);
    }
}

#[test]
fn sign_reversal_and_orbit_sums() {
    // a sign-reversing automorphism forces zero sums on even-sized orbits
    for rec in enumerate_nut(8).unwrap() {
        let g = &rec.graph;
        let a = automorphism_group(g);
        let reversing = has_sign_reversing_automorphism(g, &rec.kernel, &a).unwrap();
        let r = check_orbit_sums(g).unwrap();
        assert_ne!(r.outcome, Outcome::Fail);
        if reversing {
            for (sum, size) in r.witness["orbit_sums"].as_array().unwrap().iter().zip(r.witness["orbit_sizes"].as_array().unwrap()) {
                assert_eq!(sum, "0");
                assert_eq!(size.as_u64().unwrap() % 2, 0);
            }
        }
    }
    let g = rose_window(5, 1, 2).unwrap();
    let x = is_nut(&g).unwrap();
    assert!(!has_sign_reversing_automorphism(&g, &x, &automorphism_group(&g)).unwrap());
    let grr = sporadic(Sporadic::Grr12);
    let r = check_orbit_sums(&grr).unwrap();
    assert_eq!((r.outcome, r.witness["premise"].as_str()), (Outcome::Pass, Some("vertex-transitive")));
}

#[test]
fn s2_relabellings_share_one_form() {
    let g = s2();
    let mut rng = StdRng::seed_from_u64(7);
    let form = canonical_form(&g);
    let sig = orbit_signature(&g);
    for _ in 0..100 {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        assert_eq!(canonical_form(&h), form);
        assert_eq!(orbit_signature(&h), sig);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn signature_is_relabelling_invariant(seed in any::<u64>(), which in 0usize..4) {
        let g = sporadic(Sporadic::ALL[which]);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(orbit_signature(&g.relabel(&perm)), orbit_signature(&g));
    }
}
