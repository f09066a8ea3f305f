use num_bigint::BigUint;

use nutkit::constructions::{
    coalesce_triangle_pentagon, fowler_delta, multiplier, multiplier_signature, two_orbit_nut, ConstructionError,
};
use nutkit::enumerate::enumerate_nut;
use nutkit::families::{circulant, complete, cycle, hypercube, sporadic, Sporadic, PHI5_D3_VERTEX};
use nutkit::graph::{parse_graph6, Graph};
use nutkit::nut::{is_nut, nullity};
use nutkit::symmetry::{automorphism_group, orbit_signature, orbits};
use nutkit::verify::{
    check_construction_delta, check_multiplier_symmetry, check_two_orbit_existence, Construction, Outcome, Target,
};

// found by a seeded random search; both are asymmetric nut graphs
const ASYMMETRIC_NUT: [&str; 2] = ["H_?OZei", "IH?\\aBCNw"];
// nut graph of order 9 with bridges
const BRIDGED_NUT: &str = "HC@e_Wg";

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

#[test]
fn multiplier_orbit_formulas() {
    let bases = [cycle(4).unwrap(), cycle(5).unwrap(), circulant(12, &[1, 5]).unwrap(), complete(7).unwrap()];
    for g in &bases {
        let m = multiplier(g, 3).unwrap();
        let (before, after) = (orbit_signature(g), orbit_signature(&m.graph));
        assert_eq!(after.o_v, 2 * before.o_v);
        assert_eq!(after.o_e, before.o_e + 2 * before.o_v);
        let r = g.regular_degree().unwrap() / 2;
        assert_eq!(multiplier_signature(&before, g.order(), r, 3), after);
    }
}

#[test]
fn multiplier_group_orders() {
    let c12 = check_multiplier_symmetry(&circulant(12, &[1, 5]).unwrap(), 3).unwrap();
    assert_eq!(c12.outcome, Outcome::Pass);
    assert_eq!(c12.witness["direct"]["aut_order"], "52776558133248");
    let k7 = check_multiplier_symmetry(&complete(7).unwrap(), 3).unwrap();
    assert_eq!(k7.outcome, Outcome::Pass);
    assert_eq!(k7.witness["direct"]["aut_order"], "2958824445050880");
    // (2^2 2!)^16 * 2^4 4!
    let q4 = check_multiplier_symmetry(&hypercube(4).unwrap(), 3).unwrap();
    let want = BigUint::from(8u32).pow(16) * BigUint::from(384u32);
    assert_eq!((q4.outcome, q4.witness["direct"]["aut_order"].as_str()), (Outcome::Pass, Some(&*want.to_string())));
    let q6 = check_multiplier_symmetry(&hypercube(6).unwrap(), 3).unwrap();
    assert_eq!((q6.outcome, q6.witness["mode"].as_str()), (Outcome::NotApplicable, Some("formula-only")));
}

#[test]
fn multiplier_outputs_are_nut() {
    for g in [cycle(5).unwrap(), circulant(12, &[1, 5]).unwrap(), complete(7).unwrap()] {
        let mut m = multiplier(&g, 3).unwrap();
        assert!(m.record.nut_guaranteed && m.check_nut());
    }
    // k = 5 needs a bipartite base
    let mut c4 = multiplier(&cycle(4).unwrap(), 5).unwrap();
    assert!(c4.record.nut_guaranteed && c4.check_nut());
    assert!(!multiplier(&cycle(5).unwrap(), 5).unwrap().record.nut_guaranteed);
    assert!(matches!(multiplier(&cycle(5).unwrap(), 4), Err(ConstructionError::EvenCycleLength(4))));
}

#[test]
fn fowler_growth_examples() {
    let phi5 = sporadic(Sporadic::Phi5D3);
    let (_, delta) = fowler_delta(&phi5, PHI5_D3_VERTEX).unwrap();
    assert_eq!((delta.phi, delta.t, delta.tau), (5, Some(2), Some(3)));

    let grr = sporadic(Sporadic::Grr12);
    let (_, delta) = fowler_delta(&grr, 0).unwrap();
    assert!(delta.group_preserved);
    assert_eq!(delta.phi, 36);
}

#[test]
fn fowler_on_asymmetric_nut_attains_upper_bound() {
    for text in ASYMMETRIC_NUT {
        let g = parse_graph6(text.as_bytes()).unwrap();
        assert!(is_nut(&g).is_some());
        assert_eq!(automorphism_group(&g).order(), BigUint::from(1u32));
        let mut attained = false;
        for v in 0..g.order() {
            let (_, delta) = fowler_delta(&g, v).unwrap();
            let d = g.degree(v) as i64;
            if delta.group_preserved {
                assert_eq!(delta.phi, d * d, "{text} at {v}");
                attained = true;
            }
        }
        assert!(attained, "{text}");
    }
}

#[test]
fn construction_deltas_on_eight_vertex_nut_graphs() {
    for rec in enumerate_nut(8).unwrap() {
        let g = &rec.graph;
        let (p, _) = orbits(g, &automorphism_group(g)).unwrap();
        for orbit in p.edge_orbits() {
            let (_, r) = check_construction_delta(g, Construction::Subdivision, &Target::Edges(orbit.clone())).unwrap();
            assert_ne!(r.outcome, Outcome::Fail, "{}", serde_json::to_string(&r).unwrap());
        }
        for orbit in p.vertex_orbits() {
            let (_, r) = check_construction_delta(g, Construction::Fowler, &Target::Vertices(orbit.clone())).unwrap();
            assert_ne!(r.outcome, Outcome::Fail, "{}", serde_json::to_string(&r).unwrap());
        }
    }
}

#[test]
fn bridge_construction_delta() {
    let g = parse_graph6(BRIDGED_NUT.as_bytes()).unwrap();
    let (p, _) = orbits(&g, &automorphism_group(&g)).unwrap();
    let mut bridges = 0;
    for orbit in p.edge_orbits() {
        let target = Target::Edges(orbit.clone());
        if g.is_bridge(&orbit[0]) {
            let (_, r) = check_construction_delta(&g, Construction::Bridge, &target).unwrap();
            assert_ne!(r.outcome, Outcome::Fail);
            assert_eq!(r.witness["output_nut"], true);
            bridges += 1;
        } else {
            assert!(matches!(
                check_construction_delta(&g, Construction::Bridge, &target),
                Err(nutkit::verify::VerifyError::Construction(ConstructionError::NotBridge(_)))
            ));
        }
    }
    assert!(bridges > 0);
}

#[test]
fn two_orbit_nut_for_composite_orders() {
    for n in 9..=60 {
        if is_prime(n) {
            assert_eq!(two_orbit_nut(n).unwrap_err(), ConstructionError::PrimeOrder(n));
            continue;
        }
        let r = check_two_orbit_existence(n).unwrap();
        assert_eq!(r.outcome, Outcome::Pass, "n = {n}");
    }
    assert_eq!(two_orbit_nut(8).unwrap_err(), ConstructionError::OrderTooSmall(8));
}

#[test]
fn coalescence_preserves_nut() {
    let k1 = Graph::empty(1);
    let mut s1 = coalesce_triangle_pentagon(&k1, 0).unwrap();
    assert!(s1.record.nut_guaranteed && s1.check_nut());
    assert_eq!(orbit_signature(&s1.graph).o_v, 4);
    let mut twice = coalesce_triangle_pentagon(&s1.graph, 3).unwrap();
    assert!(twice.check_nut());
    let c6 = coalesce_triangle_pentagon(&cycle(6).unwrap(), 0).unwrap();
    assert!(!c6.record.nut_guaranteed);
}

#[test]
fn multiplied_circulants_have_predicted_orbits() {
    for q in 1..=2usize {
        for k in 1..=3usize {
            let conn: Vec<usize> = (1..=k).collect();
            for n in 2 * k + 3..=2 * k + 8 {
                let base = circulant(n, &conn).unwrap();
                let mut m = multiplier(&base, 4 * q - 1).unwrap();
                let sig = orbit_signature(&m.graph);
                assert_eq!((sig.o_v, sig.o_e), (2 * q, k + 2 * q), "q = {q}, k = {k}, n = {n}");
                assert!(m.check_nut(), "q = {q}, k = {k}, n = {n}");
            }
        }
    }
}

#[test]
fn coalescence_preserves_nullity() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let n = rng.gen_range(1..=9);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.4)).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let v = rng.gen_range(0..n);
        let p = coalesce_triangle_pentagon(&g, v).unwrap();
        assert_eq!(p.graph.order(), n + 6);
        assert_eq!(nullity(&p.graph).eta, nullity(&g).eta);
    }
}
