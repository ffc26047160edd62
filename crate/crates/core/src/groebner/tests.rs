use super::*;
use crate::fieldpoly::parse_poly;
use proptest::prelude::*;

fn ideal(vars: &[&str], field: FieldSpec, gens: &[&str]) -> Ideal {
    let ring = Ring::new(vars.iter().copied(), field);
    let gens = gens.iter().map(|g| parse_poly(g, &ring).unwrap()).collect();
    Ideal::new(&ring, gens).unwrap()
}

fn basis_strings(gb: &GroebnerBasis) -> Vec<String> {
    gb.basis().iter().map(ToString::to_string).collect()
}

fn cfg() -> GroebnerConfig {
    GroebnerConfig::with_timeout(120)
}

#[test]
fn two_by_two_nilpotent_scheme() {
    // entries of A^2 and the trace / determinant of A = [[a,b],[c,d]]
    let i = ideal(
        &["a", "b", "c", "d"],
        FieldSpec::Rationals,
        &["a^2 + b*c", "a*b + b*d", "a*c + c*d", "b*c + d^2", "a + d", "a*d - b*c"],
    );
    let gb = groebner_basis(&i, &MonomialOrder::Grevlex, &cfg()).unwrap();
    assert_eq!(basis_strings(&gb), vec!["a + d", "b*c + d^2"]);
    assert!(gb.verify_certificate().unwrap());
}

#[test]
fn trivial_bases() {
    let i = ideal(&["x"], FieldSpec::Rationals, &["x", "x^2"]);
    let gb = groebner_basis(&i, &MonomialOrder::Grevlex, &cfg()).unwrap();
    assert_eq!(basis_strings(&gb), vec!["x"]);

    let i = ideal(&["x", "y"], FieldSpec::Prime(5), &["1"]);
    let gb = groebner_basis(&i, &MonomialOrder::Grevlex, &cfg()).unwrap();
    assert!(gb.is_unit());
    assert_eq!(basis_strings(&gb), vec!["1"]);

    let i = ideal(&["x", "y"], FieldSpec::Rationals, &["x*y - 1", "x"]);
    assert!(groebner_basis(&i, &MonomialOrder::Lex, &cfg()).unwrap().is_unit());
}

#[test]
fn characteristic_matters() {
    // 2x = 0 over F2 is no condition at all
    let i = ideal(&["x", "y"], FieldSpec::Prime(2), &["2*x", "y^2"]);
    let gb = groebner_basis(&i, &MonomialOrder::Grevlex, &cfg()).unwrap();
    assert_eq!(basis_strings(&gb), vec!["y^2"]);
}

#[test]
fn equality_and_containment() {
    let f = FieldSpec::Rationals;
    let a = ideal(&["x", "y"], f, &["x^2 - y", "x*y - 1"]);
    let b = ideal(&["x", "y"], f, &["x^2 - y", "x*y - 1", "y^2 - x"]);
    assert!(ideal_equal(&a, &b, &cfg()).unwrap());
    let c = ideal(&["x", "y"], f, &["x^2 - y"]);
    assert!(!ideal_equal(&a, &c, &cfg()).unwrap());
    assert!(ideal_contains(&a, &c, &cfg()).unwrap());
    assert!(!ideal_contains(&c, &a, &cfg()).unwrap());
    let other = ideal(&["x", "z"], f, &["x"]);
    assert!(matches!(ideal_equal(&a, &other, &cfg()), Err(GroebnerError::RingMismatch(_))));
}

#[test]
fn elimination_twisted_cubic() {
    let i = ideal(&["x", "y", "z"], FieldSpec::Rationals, &["y - x^2", "z - x^3"]);
    let e = eliminate(&i, &["x"], &cfg()).unwrap();
    assert_eq!(e.ring().vars(), &["y".to_string(), "z".to_string()]);
    let expected = ideal(&["y", "z"], FieldSpec::Rationals, &["y^3 - z^2"]);
    assert!(ideal_equal(&e, &expected, &cfg()).unwrap());

    let none = eliminate(&i, &[], &cfg()).unwrap();
    assert!(ideal_equal(&none, &i, &cfg()).unwrap());

    let unit = ideal(&["x", "y"], FieldSpec::Rationals, &["x*y - 1", "y"]);
    let e = eliminate(&unit, &["y"], &cfg()).unwrap();
    assert_eq!(e.generators().len(), 1);
    assert!(e.generators()[0].is_constant());

    assert!(eliminate(&i, &["w"], &cfg()).is_err());
}

#[test]
fn saturation_removes_component() {
    // (x*y, x^2) : x^inf = (1); (x*(y-1)) : x^inf = (y-1)
    let f = FieldSpec::Rationals;
    let i = ideal(&["x", "y"], f, &["x*y - x"]);
    let x = parse_poly("x", i.ring()).unwrap();
    let s = saturate(&i, &x, &cfg()).unwrap();
    assert!(ideal_equal(&s, &ideal(&["x", "y"], f, &["y - 1"]), &cfg()).unwrap());
}

#[test]
fn orbit_closures_small() {
    let f = FieldSpec::Rationals;
    let zero = orbit_closure_ideal(&Partition::new(vec![1, 1]).unwrap(), f, &cfg()).unwrap();
    let expected = ideal(&["x_1_1", "x_1_2", "x_2_1", "x_2_2"], f, &["x_1_1", "x_1_2", "x_2_1", "x_2_2"]);
    assert!(ideal_equal(&zero, &expected, &cfg()).unwrap());

    for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
        let regular = orbit_closure_ideal(&Partition::new(vec![2]).unwrap(), field, &cfg()).unwrap();
        let expected =
            ideal(&["x_1_1", "x_1_2", "x_2_1", "x_2_2"], field, &["x_1_1 + x_2_2", "x_1_1*x_2_2 - x_1_2*x_2_1"]);
        assert!(ideal_equal(&regular, &expected, &cfg()).unwrap());
    }

    let sub = orbit_closure_ideal(&Partition::new(vec![2, 1]).unwrap(), f, &cfg()).unwrap();
    assert_eq!(dimension(&sub, &cfg()).unwrap(), Some(4));
}

#[test]
fn dimension_examples() {
    let f = FieldSpec::Rationals;
    assert_eq!(dimension(&ideal(&["x", "y", "z"], f, &["x*y", "x*z"]), &cfg()).unwrap(), Some(2));
    assert_eq!(dimension(&ideal(&["x", "y"], f, &["x^2", "y^3"]), &cfg()).unwrap(), Some(0));
    assert_eq!(dimension(&ideal(&["x", "y"], f, &["x - 1", "x"]), &cfg()).unwrap(), None);
    assert_eq!(dimension(&Ideal::zero(&Ring::new(["u", "v"], f)), &cfg()).unwrap(), Some(2));
}

#[test]
fn radical_test_examples() {
    let f = FieldSpec::Rationals;
    let r = ideal(&["x", "y"], f, &["x^2 - 1", "y - x"]);
    assert_eq!(zero_dim_radical_test(&r, &cfg()).unwrap(), RadicalVerdict::Radical);
    let nr = ideal(&["x", "y"], f, &["x^2", "y"]);
    assert_eq!(zero_dim_radical_test(&nr, &cfg()).unwrap(), RadicalVerdict::NotRadical);
    let p = ideal(&["x"], FieldSpec::Prime(3), &["x^3 - 1"]);
    // x^3 - 1 = (x - 1)^3 in characteristic 3
    assert_ne!(zero_dim_radical_test(&p, &cfg()).unwrap(), RadicalVerdict::Radical);
    assert!(zero_dim_radical_test(&ideal(&["x", "y"], f, &["x"]), &cfg()).is_err());
}

#[test]
fn timeout_is_reported() {
    let i = ideal(&["a", "b", "c", "d"], FieldSpec::Rationals, &["a^3 - b*c*d", "b^3 - a*c*d", "c^3 - a*b*d"]);
    let config = GroebnerConfig { timeout: Some(std::time::Duration::ZERO) };
    let err = groebner_basis(&i, &MonomialOrder::Grevlex, &config).unwrap_err();
    assert!(err.is_timeout());
}

#[test]
fn ideal_file_round_trip() {
    let i = ideal(&["a", "b"], FieldSpec::Prime(7), &["a^2 + 3*b", "a*b - 1"]);
    let back = Ideal::parse(&i.to_file_string()).unwrap();
    assert_eq!(back.generators(), i.generators());
    assert_eq!(back.ring().vars(), i.ring().vars());
}

fn small_poly(ring: &Arc<Ring>, coeffs: &[i64]) -> Polynomial {
    // coefficients against 1, x, y, z, x*y, y*z, x^2
    let monos = ["1", "x", "y", "z", "x*y", "y*z", "x^2"];
    coeffs.iter().zip(monos).fold(Polynomial::zero(ring), |acc, (&c, m)| {
        &acc + &(&Polynomial::from_i64(ring, c) * &parse_poly(m, ring).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn combinations_are_members(
        g1 in proptest::collection::vec(-3i64..=3, 7),
        g2 in proptest::collection::vec(-3i64..=3, 7),
        h1 in proptest::collection::vec(-3i64..=3, 7),
        h2 in proptest::collection::vec(-3i64..=3, 7),
        p in prop_oneof![Just(0u64), Just(2u64), Just(5u64)],
    ) {
        let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(p) };
        let ring = Ring::new(["x", "y", "z"], field);
        let a = small_poly(&ring, &g1);
        let b = small_poly(&ring, &g2);
        let i = Ideal::new(&ring, vec![a.clone(), b.clone()]).unwrap();
        let gb = groebner_basis(&i, &MonomialOrder::Grevlex, &cfg()).unwrap();
        prop_assert!(gb.verify_certificate().unwrap());
        let combo = &(&small_poly(&ring, &h1) * &a) + &(&small_poly(&ring, &h2) * &b);
        prop_assert!(gb.contains(&combo).unwrap());
        for g in gb.basis() {
            prop_assert!(ideal_contains(&i, &Ideal::new(&ring, vec![g.clone()]).unwrap(), &cfg()).unwrap());
        }
        let lex = groebner_basis(&i, &MonomialOrder::Lex, &cfg()).unwrap();
        prop_assert!(lex.verify_certificate().unwrap());
        prop_assert_eq!(lex.is_unit(), gb.is_unit());
    }
}
