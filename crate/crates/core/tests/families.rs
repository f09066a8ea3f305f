use num_bigint::BigUint;

use nutkit::families::{
    antiprism, c3_cart_cycle, c3_twist_cycle, rose_window, sporadic, triangle_cycle, FamilySpec, Sporadic,
};
use nutkit::graph::{parse_graph6, write_graph6, Graph};
use nutkit::nut::{is_nut, nullity};
use nutkit::symmetry::{orbit_signature, OrbitSignature};

/// Nut test plus the orbit inequality on every nut graph seen.
fn nut_with_inequality(g: &Graph) -> bool {
    let nut = is_nut(g).is_some();
    if nut {
        let sig = orbit_signature(g);
        assert!(sig.o_e > sig.o_v, "orbit inequality fails: {sig}");
    }
    nut
}

#[test]
fn antiprism_sweep() {
    for l in 3..=30 {
        assert_eq!(nut_with_inequality(&antiprism(l).unwrap()), (2 * l) % 6 != 0, "l = {l}");
    }
}

#[test]
fn c3_cart_cycle_sweep() {
    for l in (4..=30).step_by(2).filter(|l| l % 6 != 0) {
        assert!(nut_with_inequality(&c3_cart_cycle(l).unwrap()), "l = {l}");
    }
}

#[test]
fn c3_twist_cycle_instances() {
    for l in [6, 12, 18, 24] {
        let g = c3_twist_cycle(l).unwrap();
        assert!(nut_with_inequality(&g), "l = {l}");
        assert_eq!(orbit_signature(&g).o_v, 1);
    }
}

#[test]
fn rose_window_sweep() {
    for n in 5..=30 {
        let g = rose_window(n, 1, 2).unwrap();
        if n % 3 == 0 {
            assert_eq!(nullity(&g).eta, 3, "n = {n}");
        } else {
            assert!(nut_with_inequality(&g), "n = {n}");
            let sig = orbit_signature(&g);
            assert_eq!((sig.o_v, sig.o_e), (2, 3), "n = {n}");
        }
    }
}

#[test]
fn triangle_cycle_sweep() {
    for n in 3..=12 {
        let g = triangle_cycle(n).unwrap();
        assert!(nut_with_inequality(&g), "n = {n}");
        assert_eq!(orbit_signature(&g).o_v, 2, "n = {n}");
    }
}

const GOLDEN: [(Sporadic, &str); 4] = [
    (Sporadic::Tetracirculant16, "Ol`HGsG@?C?G_FOJCE_`o"),
    (Sporadic::Ncvt30, "]??CA?_cAOC_C_AO?cC?OO@?_A?_A_O@QC?CO_?`A?AAC?CAC?C@A?A?O_?_AC_C?GQ?O?Oc?_"),
    (Sporadic::Grr12, "K~G\\Y|I`Ypsf"),
    (Sporadic::Phi5D3, "GCZLrs"),
];

#[test]
fn sporadic_fixtures_are_frozen() {
    for (which, text) in GOLDEN {
        let g = sporadic(which);
        assert_eq!(write_graph6(&g).unwrap(), text.as_bytes(), "{which}");
        assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }
}

#[test]
fn sporadic_signatures() {
    let t16 = sporadic(Sporadic::Tetracirculant16);
    assert!(nut_with_inequality(&t16));
    assert_eq!(orbit_signature(&t16), OrbitSignature::new(1, 3, 32u32));

    let ncvt = sporadic(Sporadic::Ncvt30);
    assert!(nut_with_inequality(&ncvt));
    assert_eq!(orbit_signature(&ncvt), OrbitSignature::new(1, 2, 120u32));

    let grr = sporadic(Sporadic::Grr12);
    assert!(nut_with_inequality(&grr));
    let sig = orbit_signature(&grr);
    assert_eq!((sig.o_v, sig.aut_order), (1, BigUint::from(12u32)));

    assert!(nut_with_inequality(&sporadic(Sporadic::Phi5D3)));
}

#[test]
fn named_specs_build() {
    let g = FamilySpec::parse("rose-window", &[5, 1, 2]).unwrap().build().unwrap();
    assert_eq!(g, rose_window(5, 1, 2).unwrap());
    assert!(FamilySpec::parse("rose-window", &[5, 1]).is_err());
    assert!(FamilySpec::parse("no-such-family", &[]).is_err());
}
