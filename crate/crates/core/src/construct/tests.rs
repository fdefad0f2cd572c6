use std::collections::BTreeMap;

use super::*;
use crate::rootsys::Family;

fn rs(f: Family, r: usize) -> RootSystem {
    RootSystem::new(f, r).unwrap()
}

/// Multiplicity of `V_lambda` in `S^k(g)` by peeling highest weights off the
/// character of `S^k(g)`, computed monomial by monomial.
fn brute_graded_mult(rs: &RootSystem, lambda: &[i64], k: usize) -> u64 {
    let nv = rs.dim();
    let mut chr: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    // nondecreasing letter sequences of length k
    let mut stack: Vec<(usize, usize, Vec<i64>)> = vec![(0, 0, vec![0; rs.rank()])];
    while let Some((start, len, w)) = stack.pop() {
        if len == k {
            let fund = rs.weight_from_root(&w).fund_ints().unwrap();
            *chr.entry(fund).or_insert(0) += 1;
            continue;
        }
        for a in start..nv {
            let lw = &rs.letter(a).weight;
            let next: Vec<i64> = w.iter().zip(lw).map(|(x, y)| x + y).collect();
            stack.push((a, len + 1, next));
        }
    }
    let mut count = 0;
    loop {
        // highest remaining dominant weight by height
        let top = chr
            .iter()
            .filter(|(m, &c)| c != 0 && m.iter().all(|&x| x >= 0))
            .max_by_key(|(m, _)| rs.weight(m).height())
            .map(|(m, &c)| (m.clone(), c));
        let Some((m, c)) = top else { break };
        assert!(c > 0);
        if m == lambda {
            count += c as u64;
        }
        let table = rs.weight_table(&m);
        for (mu, mult) in table.all_weights(rs) {
            *chr.entry(mu).or_insert(0) -= c * mult as i64;
        }
        chr.retain(|_, c| *c != 0);
    }
    count
}

#[test]
fn principal_triples() {
    for (f, r) in [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::G, 2), (Family::C, 3)] {
        let rs = rs(f, r);
        let s = principal_sl2(&rs).unwrap();
        for i in 0..r {
            let mut unit = vec![0; r];
            unit[i] = 1;
            // alpha_i(h) = 2
            let alpha = rs.weight_from_root(&unit).fund_ints().unwrap();
            assert_eq!(s.eval_h(&alpha), q(2));
        }
    }
    assert_eq!(principal_sl2(&rs(Family::A, 1)).unwrap().c, vec![q(1)]);
    assert_eq!(principal_sl2(&rs(Family::A, 2)).unwrap().c, vec![q(2), q(2)]);
    // B2: c = (4, 3) for alpha_1 long
    assert_eq!(principal_sl2(&rs(Family::B, 2)).unwrap().c, vec![q(4), q(3)]);
}

#[test]
fn max_pairing_examples() {
    let cfg = Config::default();
    let a1 = rs(Family::A, 1);
    let p = max_exponent_pairing(&a1, &a1.weight(&[2]), &cfg).unwrap();
    assert_eq!(p.m, 2);
    // e_- = f and f^2 v is the lowest basis vector
    assert_eq!(p.value, q(1));
    let a2 = rs(Family::A, 2);
    let p = max_exponent_pairing(&a2, &a2.weight(&[2, 2]), &cfg).unwrap();
    assert_eq!(p.m, 8);
    assert!(!p.value.is_zero());
    assert!(matches!(
        max_exponent_pairing(&a2, &a2.weight(&[1, 0]), &cfg),
        Err(Error::NotInRootLattice { .. })
    ));
}

#[test]
fn exponent_examples() {
    let cfg = Config::default();
    let a1 = rs(Family::A, 1);
    let e = generalized_exponents(&a1, &a1.weight(&[2]), &cfg).unwrap();
    assert_eq!(e.coeffs, BTreeMap::from([(1, 1)]));
    let a2 = rs(Family::A, 2);
    let e = generalized_exponents(&a2, &a2.weight(&[1, 1]), &cfg).unwrap();
    assert_eq!(e.coeffs, BTreeMap::from([(1, 1), (2, 1)]));
    let e = generalized_exponents(&a2, &a2.weight(&[4, 4]), &cfg).unwrap();
    assert_eq!(e.min_degree(), Some(4));
    assert_eq!(e.max_degree(), Some(8));
    assert_eq!(e.coeffs[&8], 1);
    assert_eq!(e.total(), 5);
    let e = generalized_exponents(&a2, &a2.weight(&[0, 0]), &cfg).unwrap();
    assert_eq!(e.coeffs, BTreeMap::from([(0, 1)]));
}

#[test]
fn exponent_errors() {
    let cfg = Config::default();
    let a2 = rs(Family::A, 2);
    assert!(matches!(
        generalized_exponents(&a2, &a2.weight(&[1, 0]), &cfg),
        Err(Error::NotInRootLattice { .. })
    ));
    assert_eq!(
        generalized_exponents(&a2, &a2.weight(&[7, 7]), &cfg),
        Err(Error::HeightBound { height: 14, bound: 12 })
    );
}

#[test]
fn exponents_match_brute_force_decomposition() {
    let cfg = Config::default();
    for (f, r, lams) in [
        (Family::A, 1, vec![vec![2], vec![4]]),
        (Family::A, 2, vec![vec![1, 1], vec![3, 0], vec![2, 2]]),
        (Family::B, 2, vec![vec![0, 2], vec![1, 0], vec![2, 0]]),
    ] {
        let rs = rs(f, r);
        for l in lams {
            let e = generalized_exponents(&rs, &rs.weight(&l), &cfg).unwrap();
            let top = e.max_degree().unwrap();
            // S = J (x) H: graded multiplicity is E(q) / prod (1 - q^{d_i})
            let mut series = vec![0i64; top + 1];
            for (&d, &m) in &e.coeffs {
                series[d] = m as i64;
            }
            for &d in rs.invariant_degrees() {
                for k in d..=top {
                    series[k] += series[k - d];
                }
            }
            for (k, &s) in series.iter().enumerate() {
                assert_eq!(brute_graded_mult(&rs, &l, k) as i64, s, "{} {:?} degree {}", rs.name(), l, k);
            }
        }
    }
}

#[test]
fn codegree_element_examples() {
    let cfg = Config::default();
    let a1 = rs(Family::A, 1);
    let r = codegree_element(&a1, &a1.weight(&[1]), &cfg).unwrap();
    assert!(r.ok());
    assert_eq!(r.k, 1);
    assert_eq!(r.element.len(), 1);
    let a2 = rs(Family::A, 2);
    for (nu, k) in [([1, 1], 2usize), ([2, 2], 4)] {
        let r = codegree_element(&a2, &a2.weight(&nu), &cfg).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        assert_eq!(r.k, k);
        // proportional to e_theta^k
        let (m, _) = r.element.terms().iter().next().unwrap();
        assert_eq!(r.element.len(), 1);
        assert_eq!(m.exponent(a2.pos_letter(2)) as usize, k);
    }
}

#[test]
fn counterexample_a2() {
    let a2 = rs(Family::A, 2);
    let r = counterexample_check(&a2, &a2.weight(&[1, 1]), &Config::default()).unwrap();
    assert_eq!(r.d, 2);
    assert_eq!(r.top_degree, 8);
    assert!(r.degrees_present.contains(&4));
    assert!(r.degrees_present.contains(&8));
    assert!(r.ok());
    let a1 = rs(Family::A, 1);
    assert!(matches!(
        counterexample_check(&a1, &a1.weight(&[3]), &Config::default()),
        Err(Error::NoCounterexample { .. })
    ));
}

#[test]
fn inequality_examples() {
    let a2 = rs(Family::A, 2);
    let t = a2.weight(&[1, 1]);
    let r = multiplicity_inequality_battery(&a2, &[(t.clone(), t.clone())]).unwrap();
    assert!(r.all_hold());
    assert_eq!(r.cases[0].zero_dim, 3);
    assert!(r.cases[0].zero_dim >= 2);
    let a1 = rs(Family::A, 1);
    let r = multiplicity_inequality_battery(&a1, &[(a1.weight(&[1]), a1.weight(&[2]))]).unwrap();
    assert!(r.all_hold());
    assert!(matches!(
        multiplicity_inequality_battery(&a1, &[(a1.weight(&[1]), a1.weight(&[1]))]),
        Err(Error::NotInRootLattice { .. })
    ));
}

#[test]
fn cartan_grid_sl2() {
    let a1 = rs(Family::A, 1);
    let r = cartan_product_grid(&a1, &a1.weight(&[1]), &a1.weight(&[1]), &Config::default()).unwrap();
    assert!(r.ok());
    assert_eq!(r.zero_weight_injective, None);
}

#[test]
fn reports_serialize_in_field_order() {
    let a2 = rs(Family::A, 2);
    let r = codegree_element(&a2, &a2.weight(&[1, 1]), &Config::default()).unwrap();
    let j = serde_json::to_string(&r).unwrap();
    let keys = ["root_system", "nu", "lambda", "lambda_root", "k", "filtration_dims", "exponents", "fk", "checks"];
    let pos: Vec<usize> = keys.iter().map(|k| j.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}
