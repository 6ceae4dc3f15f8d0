use monohecke::coxeter::CoxeterSystem;
use monohecke::realization::*;
use monohecke::ring::{QuadExt, Ring};
use monohecke::wset::{builtin_wsets, WSet};

fn system(r: &Realization) -> CoxeterSystem {
    CoxeterSystem::new(r.coxeter.clone()).unwrap()
}

#[test]
fn crystallographic_are_reflection_stable_and_balanced() {
    for name in CRYSTALLOGRAPHIC {
        let r = Realization::builtin(name).unwrap();
        assert_eq!(r.check_abe(), Ok(()), "{name}");
        assert_eq!(r.check_reflection_stable(), Ok(()), "{name}");
        assert_eq!(r.check_reflection_balanced(), Ok(()), "{name}");
    }
}

#[test]
fn geometric_h3_is_abe() {
    for name in ["H3", "I2(5)"] {
        let r = Realization::builtin(name).unwrap();
        assert_eq!(r.check_abe(), Ok(()), "{name}");
        // 5 is prime, so reflection stability reduces to the Abe condition
        assert_eq!(r.check_reflection_stable(), Ok(()), "{name}");
    }
}

#[test]
fn literal_balance_depends_on_parity() {
    // even m: [m−1] = 1 at the Kac–Moody Cartan values
    for name in ["B2", "G2"] {
        assert_eq!(Realization::builtin(name).unwrap().check_balanced(), Ok(()), "{name}");
    }
    // odd m: [2]_x = a_{s,t} = −1 with the negative Cartan convention
    assert!(Realization::builtin("A2").unwrap().check_balanced().is_err());
}

#[test]
fn positive_roots_are_well_defined() {
    for name in ["A2", "B2", "B3", "G2", "H3"] {
        let r = Realization::builtin(name).unwrap();
        assert_eq!(r.check_root_transport(&system(&r)), Ok(()), "{name}");
    }
}

#[test]
fn stable_implies_endoscopic_and_monodromic() {
    for name in ["A1", "A2", "B2", "G2", "A3", "B3"] {
        let r = Realization::builtin(name).unwrap();
        let w = system(&r);
        assert!(r.check_reflection_stable().is_ok());
        for (label, o) in builtin_wsets(&w) {
            assert_eq!(r.check_monodromic(&w, &o), Ok(()), "{name} {label}");
            assert_eq!(r.check_endoscopic(&w, &o), Ok(()), "{name} {label}");
        }
    }
}

#[test]
fn regular_monodromy_is_always_monodromic() {
    // a deliberately bad (non-Abe) realization of B2
    let bad = Realization::from_cartan(
        "bad",
        RingTag::Q,
        monohecke::coxeter::CoxeterMatrix::preset("B2").unwrap(),
        vec![vec![QuadExt::from_i64(2), QuadExt::from_i64(-1)], vec![QuadExt::from_i64(-1), QuadExt::from_i64(2)]],
    )
    .unwrap();
    let w = system(&bad);
    assert!(bad.check_abe().is_err());
    assert!(bad.check_monodromic(&w, &WSet::trivial(&w)).is_err());
    assert!(bad.check_monodromic(&w, &WSet::regular(&w)).is_ok());
}

#[test]
fn non_abe_is_detected() {
    // Cartan product 3 is the G2 value; in a B2 group the braid relation
    // fails so this is not even a pre-realization.
    let r = Realization::from_cartan(
        "bad",
        RingTag::Q,
        monohecke::coxeter::CoxeterMatrix::preset("B2").unwrap(),
        vec![vec![QuadExt::from_i64(2), QuadExt::from_i64(-1)], vec![QuadExt::from_i64(-3), QuadExt::from_i64(2)]],
    )
    .unwrap();
    assert!(r.validate_prerealization().iter().any(|e| e.starts_with("axiom 2")));
    let w = system(&r);
    let err = r.check_abe().unwrap_err();
    assert_eq!((err.s, err.t), (0, 1));
    assert!(r.check_endoscopic(&w, &WSet::trivial(&w)).is_err());
}
