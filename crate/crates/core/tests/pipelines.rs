use nilcent::construct::{codegree_element, generalized_exponents};
use nilcent::envelope::{codegree, extract_fk, MatrixCoeffFunctional};
use nilcent::rootsys::{Family, RootSystem};
use nilcent::{Config, Error};
use proptest::prelude::*;

#[test]
fn g2_needs_the_expensive_option() {
    let rs = RootSystem::new(Family::G, 2).unwrap();
    let nu = rs.weight(&[1, 0]);
    assert!(matches!(
        codegree_element(&rs, &nu, &Config::default()),
        Err(Error::ExpensiveInvariants(_))
    ));
    let cfg = Config {
        expensive_invariants: true,
        ..Config::default()
    };
    let r = codegree_element(&rs, &nu, &cfg).unwrap();
    assert!(r.ok(), "{:?}", r.failures);
}

#[test]
fn c3_fundamental() {
    let rs = RootSystem::new(Family::C, 3).unwrap();
    let cfg = Config {
        expensive_invariants: true,
        ..Config::default()
    };
    let r = codegree_element(&rs, &rs.weight(&[1, 0, 0]), &cfg).unwrap();
    assert!(r.ok(), "{:?}", r.failures);
}

#[test]
fn codegree_is_the_first_nonvanishing_level() {
    let rs = RootSystem::new(Family::B, 2).unwrap();
    for nu in [[1, 0], [0, 1], [1, 1]] {
        let f = MatrixCoeffFunctional::new(&rs, &rs.weight(&nu), &Config::default()).unwrap();
        let k = codegree(&f).unwrap();
        assert!(k <= f.module().dim());
        assert!(matches!(extract_fk(&rs, &f, k - 1), Err(Error::NotCodegree { .. })));
        assert!(!extract_fk(&rs, &f, k).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn codegree_equals_min_exponent_a2(a in 0i64..3, b in 0i64..3) {
        prop_assume!(a + b > 0);
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let cfg = Config::default();
        let f = MatrixCoeffFunctional::new(&rs, &rs.weight(&[a, b]), &cfg).unwrap();
        let k = codegree(&f).unwrap();
        let e = generalized_exponents(&rs, &rs.weight_from_root(f.lambda()), &cfg).unwrap();
        prop_assert_eq!(e.min_degree(), Some(k));
    }

    #[test]
    fn codegree_equals_min_exponent_b2(a in 0i64..2, b in 0i64..3) {
        prop_assume!(a + b > 0);
        let rs = RootSystem::new(Family::B, 2).unwrap();
        let cfg = Config::default();
        let f = MatrixCoeffFunctional::new(&rs, &rs.weight(&[a, b]), &cfg).unwrap();
        let k = codegree(&f).unwrap();
        let e = generalized_exponents(&rs, &rs.weight_from_root(f.lambda()), &cfg).unwrap();
        prop_assert_eq!(e.min_degree(), Some(k));
    }
}
