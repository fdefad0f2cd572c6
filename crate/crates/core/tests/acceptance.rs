//! Acceptance gate. One PASS/FAIL line per criterion; every comparison is
//! exact (rational arithmetic, tolerance 0).

use std::collections::BTreeSet;
use std::process::ExitCode;

use nilcent::construct::{
    bracket_vec, cartan_product_grid, codegree_element, counterexample_check, default_battery,
    generalized_exponents, max_exponent_pairing, multiplicity_inequality_battery, principal_sl2,
};
use nilcent::envelope::{codegree, extract_fk, words_at_level, MatrixCoeffFunctional};
use nilcent::linalg::q;
use nilcent::polyalg::{
    directional_derivative, is_harmonic, killing_pair_s, standard_invariants, GPoly, Monomial,
};
use nilcent::repbuild::build_irrep;
use nilcent::rootsys::{Family, RootSystem, Weight};
use nilcent::{Config, Q};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Config) -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn battery() -> Vec<(RootSystem, Weight)> {
    default_battery().expect("battery root systems")
}

fn label(rs: &RootSystem, w: &Weight) -> String {
    format!("{} [{}]", rs.name(), w)
}

fn criterion_1(cfg: &Config) -> Outcome {
    let mut n = 0;
    for (rs, nu) in battery() {
        let r = codegree_element(&rs, &nu, cfg).map_err(|e| format!("{}: {e}", label(&rs, &nu)))?;
        ensure(r.ok(), || format!("{}: failed {:?}", label(&rs, &nu), r.failures))?;
        // recheck the two headline properties directly
        ensure(r.element.in_positive_part(&rs), || format!("{}: letter outside n", label(&rs, &nu)))?;
        for i in 0..rs.rank() {
            let ad = nilcent::polyalg::ad_action(&rs, rs.simple_letter(i), &r.element);
            ensure(ad.is_zero(), || format!("{}: ad e_{} f_(k) != 0", label(&rs, &nu), i + 1))?;
        }
        n += 1;
    }
    Ok(format!("{n} cases, six flags true"))
}

fn criterion_2(cfg: &Config) -> Outcome {
    let rs = RootSystem::new(Family::A, 2).unwrap();
    let r = counterexample_check(&rs, &rs.highest_root(), cfg).map_err(|e| e.to_string())?;
    ensure(r.d == 2, || format!("d = {}", r.d))?;
    ensure(r.top_degree == 8, || format!("ht(2 nu) = {}", r.top_degree))?;
    ensure(r.degrees_present.len() >= 2 && r.degrees_present.contains(&8), || {
        format!("degrees {:?}", r.degrees_present)
    })?;
    let Some(i) = r.invariance_witness else {
        return Err("no simple root moves f_nu".into());
    };
    Ok(format!("d=2, degrees {:?}, ad e_{} f_nu != 0", r.degrees_present, i + 1))
}

fn criterion_3(cfg: &Config) -> Outcome {
    let mut pairs = Vec::new();
    for (rs, nu) in battery() {
        let f = MatrixCoeffFunctional::new(&rs, &nu, cfg).map_err(|e| e.to_string())?;
        let k = codegree(&f).map_err(|e| e.to_string())?;
        let lambda = rs.weight_from_root(f.lambda());
        let e = generalized_exponents(&rs, &lambda, cfg).map_err(|e| e.to_string())?;
        ensure(e.min_degree() == Some(k), || {
            format!("{}: codegree {k}, min exponent {:?}", label(&rs, &nu), e.min_degree())
        })?;
        pairs.push(k);
    }
    Ok(format!("codegrees {pairs:?} equal min exponents"))
}

fn criterion_4(cfg: &Config) -> Outcome {
    let mut n = 0;
    let mut seen = BTreeSet::new();
    for (rs, nu) in battery() {
        let j = standard_invariants(&rs, cfg).map_err(|e| e.to_string())?;
        let f = MatrixCoeffFunctional::new(&rs, &nu, cfg).map_err(|e| e.to_string())?;
        let k = codegree(&f).map_err(|e| e.to_string())?;
        let fk = extract_fk(&rs, &f, k).map_err(|e| e.to_string())?;
        for p in j.generators() {
            ensure(directional_derivative(&rs, &fk, p).is_zero(), || {
                format!("{}: d_p f_(k) != 0", label(&rs, &nu))
            })?;
        }
        if seen.insert(rs.name()) {
            let p2 = j.of_degree(2).unwrap();
            ensure(!is_harmonic(&rs, p2, &j), || format!("{}: p_2 reported harmonic", rs.name()))?;
        }
        n += 1;
    }
    Ok(format!("{n} cases harmonic, p_2 control not harmonic"))
}

fn criterion_5(cfg: &Config) -> Outcome {
    for (f, r) in [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::G, 2)] {
        let rs = RootSystem::new(f, r).unwrap();
        let s = principal_sl2(&rs).map_err(|e| e.to_string())?;
        ensure(bracket_vec(&rs, &s.h, &s.e) == s.e.scale(&q(2)), || format!("{}: [h,e]", rs.name()))?;
        ensure(bracket_vec(&rs, &s.h, &s.e_minus) == s.e_minus.scale(&q(-2)), || {
            format!("{}: [h,e_-]", rs.name())
        })?;
        ensure(bracket_vec(&rs, &s.e, &s.e_minus) == s.h, || format!("{}: [e,e_-]", rs.name()))?;
    }
    let mut ms = Vec::new();
    for (rs, xi) in battery() {
        let x = xi.fund_ints().unwrap();
        let dual = rs.dual_weight(&xi).unwrap().fund_ints().unwrap();
        let nu: Vec<i64> = x.iter().zip(&dual).map(|(a, b)| a + b).collect();
        let nu_w = rs.weight(&nu);
        let p = max_exponent_pairing(&rs, &nu_w, cfg).map_err(|e| format!("{}: {e}", label(&rs, &nu_w)))?;
        let ht: i64 = nu_w.scale(2).root_ints().unwrap().iter().sum();
        ensure(p.m as i64 == ht, || format!("{}: m = {}, ht = {ht}", label(&rs, &nu_w), p.m))?;
        ensure(!p.value.is_zero(), || format!("{}: zero pairing", label(&rs, &nu_w)))?;
        ms.push(p.m);
    }
    Ok(format!("triples A1 A2 B2 G2; m = ht(2 nu) = {ms:?}, pairings nonzero"))
}

fn criterion_6(cfg: &Config) -> Outcome {
    let a1 = RootSystem::new(Family::A, 1).unwrap();
    let a2 = RootSystem::new(Family::A, 2).unwrap();
    let b2 = RootSystem::new(Family::B, 2).unwrap();
    let mut grids = 0;
    for (rs, w) in [(&a1, a1.weight(&[1])), (&a2, a2.highest_root())] {
        let g = cartan_product_grid(rs, &w, &w, cfg).map_err(|e| e.to_string())?;
        ensure(g.ok(), || format!("{}: {} vanishing pairs", rs.name(), g.vanishing_pairs))?;
        grids += g.pairs_checked;
    }
    let mut cases = 0;
    for (rs, pairs) in [
        (&a1, vec![([1], [2]), ([2], [2]), ([3], [4])].into_iter().map(|(b, c)| (b.to_vec(), c.to_vec())).collect::<Vec<_>>()),
        (
            &a2,
            vec![
                (vec![1, 1], vec![1, 1]),
                (vec![1, 0], vec![1, 1]),
                (vec![0, 1], vec![3, 0]),
                (vec![2, 1], vec![0, 3]),
                (vec![1, 1], vec![2, 2]),
            ],
        ),
        (&b2, vec![(vec![0, 2], vec![0, 2]), (vec![1, 0], vec![0, 2]), (vec![0, 1], vec![1, 0]), (vec![1, 1], vec![0, 2])]),
    ] {
        let ws: Vec<(Weight, Weight)> = pairs.iter().map(|(b, c)| (rs.weight(b), rs.weight(c))).collect();
        let r = multiplicity_inequality_battery(rs, &ws).map_err(|e| e.to_string())?;
        for c in &r.cases {
            ensure(c.holds(), || format!("{}: beta {:?} gamma {:?}", rs.name(), c.beta, c.gamma))?;
        }
        cases += r.cases.len();
    }
    // d > 1 forces l(2(xi + xi*)) > 1 and min m < max m = ht
    let mut strict = 0;
    for (rs, xi) in [(&a2, vec![1, 1]), (&a2, vec![2, 1]), (&b2, vec![0, 2]), (&a2, vec![1, 0]), (&b2, vec![1, 0])] {
        let xw = rs.weight(&xi);
        let d = rs.max_weight_multiplicity(&xw).unwrap();
        let dual = rs.dual_weight(&xw).unwrap().fund_ints().unwrap();
        let lam: Vec<i64> = xi.iter().zip(&dual).map(|(a, b)| 2 * (a + b)).collect();
        let lw = rs.weight(&lam);
        let ell = rs.freudenthal_mult(&lw, &Weight::zero(rs.rank())).unwrap();
        if d > 1 {
            ensure(ell > 1, || format!("{} xi {:?}: l = {ell}", rs.name(), xi))?;
            let e = generalized_exponents(rs, &lw, cfg).map_err(|e| e.to_string())?;
            let ht = lw.root_ints().unwrap().iter().sum::<i64>() as usize;
            ensure(e.min_degree() < e.max_degree() && e.max_degree() == Some(ht), || {
                format!("{} xi {:?}: exponents {:?}", rs.name(), xi, e.coeffs)
            })?;
            strict += 1;
        }
    }
    Ok(format!("{grids} grid pairs nonvanishing, {cases} inequality cases, {strict} d>1 cases strict"))
}

fn criterion_7(cfg: &Config) -> Outcome {
    // dimensions and weight multiplicities
    let mut modules = 0;
    for (f, r, ws) in [
        (Family::A, 2, vec![vec![1, 0], vec![1, 1], vec![2, 1], vec![2, 2]]),
        (Family::B, 2, vec![vec![1, 0], vec![0, 1], vec![0, 2], vec![1, 1]]),
        (Family::G, 2, vec![vec![1, 0], vec![0, 1]]),
        (Family::A, 3, vec![vec![1, 0, 1]]),
    ] {
        let rs = RootSystem::new(f, r).unwrap();
        for w in ws {
            let lw = rs.weight(&w);
            let v = build_irrep(&rs, &lw, cfg.size_cap).map_err(|e| e.to_string())?;
            ensure(v.dim() as u64 == rs.weyl_dimension(&lw).unwrap(), || format!("{} {w:?} dim", rs.name()))?;
            for (mu, &(_, n)) in v.weight_spaces() {
                let m = rs.freudenthal_mult(&lw, &rs.weight(mu)).unwrap();
                ensure(m == n as u64, || format!("{} {w:?} at {mu:?}", rs.name()))?;
            }
            ensure(v.is_representation(&rs), || format!("{} {w:?} relations", rs.name()))?;
            modules += 1;
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    // adjointness (u, vw) = (d_v u, w)
    let a2 = RootSystem::new(Family::A, 2).unwrap();
    let n = a2.dim();
    let random_poly = |rng: &mut StdRng, deg: usize| {
        let mut p = GPoly::zero(n);
        for _ in 0..rng.gen_range(1..4) {
            let letters: Vec<usize> = (0..deg).map(|_| rng.gen_range(0..n)).collect();
            p.add_term(Monomial::from_letters(n, &letters), q(rng.gen_range(-3..=3)));
        }
        p
    };
    let mut triples = 0;
    for _ in 0..60 {
        let du = rng.gen_range(1..=4);
        let dv = rng.gen_range(0..=du);
        let (u, v, w) = (random_poly(&mut rng, du), random_poly(&mut rng, dv), random_poly(&mut rng, du - dv));
        let lhs = killing_pair_s(&a2, &u, &v.mul(&w));
        let rhs = killing_pair_s(&a2, &directional_derivative(&a2, &u, &v), &w);
        ensure(lhs == rhs, || format!("adjointness fails on degrees {du},{dv}"))?;
        triples += 1;
    }

    // S^k(n) is orthogonal to every monomial with an h or n letter and pairs
    // nondegenerately with S^k(n_-)
    let mut grid = 0;
    for (f, r) in [(Family::A, 2), (Family::B, 2)] {
        let rs = RootSystem::new(f, r).unwrap();
        let nv = rs.dim();
        for k in 1..=2 {
            let all = monomials(nv, k);
            let pos: Vec<&Monomial> = all.iter().filter(|m| m.letters().all(|a| rs.letter(a).is_positive())).collect();
            for p in &pos {
                for m in &all {
                    let val = killing_pair_s(&rs, &GPoly::monomial((*p).clone(), Q::one()), &GPoly::monomial(m.clone(), Q::one()));
                    let in_neg = m.letters().all(|a| rs.letter(a).is_negative());
                    let matched = in_neg && m.letters().all(|a| rs.opposite(a).map(|b| p.exponent(b)) == Some(m.exponent(a)));
                    ensure(val.is_zero() != matched, || format!("{} degree {k} orthogonality", rs.name()))?;
                    grid += 1;
                }
            }
        }
    }

    // permutation invariance at the codegree and f(tau(v) tau(w)) = (f_(k), vw)
    let mut sampled = 0;
    for (rs, nu) in battery() {
        let f = MatrixCoeffFunctional::new(&rs, &nu, cfg).map_err(|e| e.to_string())?;
        let k = codegree(&f).map_err(|e| e.to_string())?;
        let fk = extract_fk(&rs, &f, k).map_err(|e| e.to_string())?;
        let words = words_at_level(&rs, &f, k);
        let mut keys: Vec<&Vec<usize>> = words.keys().collect();
        keys.shuffle(&mut rng);
        for m in keys.into_iter().take(6) {
            let value = f.eval_word(m);
            for _ in 0..4 {
                let mut w = m.clone();
                w.shuffle(&mut rng);
                ensure(f.eval_word(&w) == value, || format!("{}: order dependence", label(&rs, &nu)))?;
            }
            let split = rng.gen_range(0..=k);
            let mut w = m.clone();
            w.shuffle(&mut rng);
            let (a, b) = w.split_at(split);
            let va = Monomial::from_letters(rs.dim(), a);
            let vb = Monomial::from_letters(rs.dim(), b);
            let lhs = f.eval_product(&va, &vb).map_err(|e| e.to_string())?;
            let rhs = killing_pair_s(&rs, &fk, &GPoly::monomial(va.mul(&vb), Q::one()));
            ensure(lhs == rhs, || format!("{}: product pairing", label(&rs, &nu)))?;
            sampled += 1;
        }
    }
    Ok(format!(
        "{modules} modules, {triples} adjointness triples, {grid} orthogonality pairs, {sampled} sampled words"
    ))
}

fn monomials(nv: usize, k: usize) -> Vec<Monomial> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for w in &out {
            for a in w.last().copied().unwrap_or(0)..nv {
                let mut w = w.clone();
                w.push(a);
                next.push(w);
            }
        }
        out = next;
    }
    out.iter().map(|w| Monomial::from_letters(nv, w)).collect()
}

fn main() -> ExitCode {
    let cfg = Config::default();
    let criteria: [Criterion; 7] = [
        ("codegree element battery", criterion_1),
        ("naive element counterexample A2", criterion_2),
        ("codegree equals min exponent", criterion_3),
        ("harmonicity", criterion_4),
        ("principal triple and top pairing", criterion_5),
        ("Cartan product and multiplicity inequalities", criterion_6),
        ("structural self-checks", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = run(&cfg);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS [tolerance exact] {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL [tolerance exact] {name}: {detail} ({secs:.1}s)", i + 1)
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
