use super::*;

fn all_types() -> Vec<RootSystem> {
    [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::G, 2),
        (Family::D, 4),
    ]
    .into_iter()
    .map(|(f, r)| RootSystem::new(f, r).unwrap())
    .collect()
}

fn bracket_vec(rs: &RootSystem, a: usize, v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; rs.dim()];
    for (b, &x) in v.iter().enumerate() {
        if x != 0 {
            for &(c, y) in rs.bracket(a, b) {
                out[c] += x * y;
            }
        }
    }
    out
}

fn unit(rs: &RootSystem, a: usize) -> Vec<i64> {
    let mut v = vec![0; rs.dim()];
    v[a] = 1;
    v
}

#[test]
fn basic_counts() {
    let a1 = RootSystem::new(Family::A, 1).unwrap();
    assert_eq!(a1.positive_roots().len(), 1);
    assert_eq!(a1.heights(), vec![1]);
    assert_eq!(a1.invariant_degrees(), &[2]);
    let a2 = RootSystem::new(Family::A, 2).unwrap();
    let mut h = a2.heights();
    h.sort();
    assert_eq!(h, vec![1, 1, 2]);
    assert_eq!(a2.weyl_group().len(), 6);
    let g2 = RootSystem::new(Family::G, 2).unwrap();
    assert_eq!(g2.positive_roots().len(), 6);
    assert_eq!(*g2.heights().iter().max().unwrap(), 5);
    assert_eq!(g2.weyl_group().len(), 12);
    assert_eq!(RootSystem::new(Family::B, 2).unwrap().weyl_group().len(), 8);
}

/// Independent check of the root count: closure of the simple roots under
/// the simple reflections.
#[test]
fn roots_match_reflection_closure() {
    for rs in all_types() {
        let n = rs.rank();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        loop {
            let mut grew = false;
            for r in seen.clone() {
                for i in 0..n {
                    // s_i(r) = r - <r, alpha_i^vee> alpha_i
                    let pairing: i64 = (0..n).map(|j| r[j] * rs.datum().entry(i, j)).sum();
                    let mut s = r.clone();
                    s[i] -= pairing;
                    grew |= seen.insert(s);
                }
            }
            if !grew {
                break;
            }
        }
        let pos = seen.iter().filter(|r| r.iter().all(|&x| x >= 0)).count();
        assert_eq!(pos, rs.positive_roots().len(), "{}", rs.name());
        assert_eq!(seen.len(), 2 * pos);
    }
}

#[test]
fn chevalley_relations() {
    for rs in all_types() {
        let npos = rs.positive_roots().len();
        for j in 0..npos {
            let (p, m) = (rs.pos_letter(j), rs.neg_letter(j));
            // [e_phi, e_-phi] = h_phi is a nonzero element of h
            let hb = rs.bracket(p, m);
            assert!(!hb.is_empty());
            assert!(hb.iter().all(|&(c, _)| matches!(rs.letter(c).kind, LetterKind::Cartan(_))));
            // h_phi acts on e_phi by 2
            let mut act = 0;
            for &(c, x) in hb {
                for &(d, y) in rs.bracket(c, p) {
                    assert_eq!(d, p);
                    act += x * y;
                }
            }
            assert_eq!(act, 2, "{} root {j}", rs.name());
        }
        let roots: Vec<usize> = (0..rs.dim())
            .filter(|&a| !matches!(rs.letter(a).kind, LetterKind::Cartan(_)))
            .collect();
        for &a in &roots {
            for &b in &roots {
                let (wa, wb) = (&rs.letter(a).weight, &rs.letter(b).weight);
                let s: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                let n = rs.structure_constant(a, b);
                if s.iter().all(|&x| x == 0) {
                    continue;
                }
                if !rs.is_root(&s) {
                    assert!(rs.bracket(a, b).is_empty());
                    assert_eq!(n, 0);
                    continue;
                }
                // |N| = p + 1, p maximal with psi - p phi a root
                let mut p = 0;
                loop {
                    let t: Vec<i64> = wb.iter().zip(wa).map(|(y, x)| y - (p + 1) * x).collect();
                    if rs.is_root(&t) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                assert_eq!(n.abs(), p + 1, "{} {} {}", rs.name(), rs.letter(a).label, rs.letter(b).label);
                assert_eq!(n, -rs.structure_constant(b, a));
                // N_{-a,-b} = -N_{a,b}
                let (oa, ob) = (rs.opposite(a).unwrap(), rs.opposite(b).unwrap());
                assert_eq!(rs.structure_constant(oa, ob), -n);
            }
        }
    }
}

#[test]
fn extraspecial_signs_are_positive() {
    for rs in all_types() {
        for j in 0..rs.positive_roots().len() {
            if let Some((a, b, n)) = rs.extraspecial(j) {
                assert!(n > 0);
                assert_eq!(rs.structure_constant(rs.pos_letter(a), rs.pos_letter(b)), n);
            }
        }
    }
}

#[test]
fn jacobi_identity() {
    for rs in all_types() {
        let d = rs.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
                    let mut tot = vec![0; d];
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        let inner = bracket_vec(&rs, y, &unit(&rs, z));
                        let outer = bracket_vec(&rs, x, &inner);
                        for (t, o) in tot.iter_mut().zip(outer) {
                            *t += o;
                        }
                    }
                    assert!(tot.iter().all(|&t| t == 0), "{} ({a},{b},{c})", rs.name());
                }
            }
        }
    }
}

#[test]
fn killing_form_is_invariant() {
    for rs in all_types() {
        let d = rs.dim();
        for x in 0..d {
            for y in 0..d {
                let adxy = bracket_vec(&rs, x, &unit(&rs, y));
                for z in 0..d {
                    let adxz = bracket_vec(&rs, x, &unit(&rs, z));
                    let lhs: i64 = (0..d).map(|c| adxy[c] * rs.killing(c, z)).sum();
                    let rhs: i64 = (0..d).map(|c| adxz[c] * rs.killing(y, c)).sum();
                    assert_eq!(lhs + rhs, 0, "{}", rs.name());
                }
            }
        }
        assert!(rs.killing_h_positive_definite());
    }
}

#[test]
fn killing_values_sl2() {
    // ad matrices of sl2 in basis (f, h, e): (e,f) = 4, (h,h) = 8
    let rs = RootSystem::new(Family::A, 1).unwrap();
    assert_eq!(rs.killing_root_pair(0), 4);
    assert_eq!(rs.killing(1, 1), 8);
    assert_eq!(rs.killing(2, 2), 0);
}

#[test]
fn dual_basis_is_dual() {
    for rs in all_types() {
        for a in 0..rs.dim() {
            for b in 0..rs.dim() {
                let v: Q = rs
                    .dual_basis(a)
                    .into_iter()
                    .map(|(c, x)| x * q(rs.killing(c, b)))
                    .sum();
                assert_eq!(v, q(i64::from(a == b)));
            }
        }
    }
}

#[test]
fn text_form_is_deterministic() {
    let a = RootSystem::new(Family::G, 2).unwrap().to_text();
    let b = RootSystem::new(Family::G, 2).unwrap().to_text();
    assert_eq!(a, b);
    assert!(a.starts_with("root-system G2\nsign-convention extraspecial-v1\npositive-roots 6\n1 0\n0 1\n"));
    let a2 = RootSystem::new(Family::A, 2).unwrap().to_text();
    assert!(a2.contains("1 0 | 0 1 | 1\n"));
}

#[test]
fn weight_zero_criterion() {
    // V_lambda(0) != 0 iff lambda is in the root lattice
    for rs in all_types().into_iter().filter(|r| r.rank() <= 3) {
        let n = rs.rank();
        let mut coords = vec![vec![]];
        for _ in 0..n {
            coords = coords
                .into_iter()
                .flat_map(|c: Vec<i64>| {
                    (0..3).map(move |k| {
                        let mut c = c.clone();
                        c.push(k);
                        c
                    })
                })
                .collect();
        }
        for c in coords {
            let l = rs.weight(&c);
            let z = rs.freudenthal_mult(&l, &Weight::zero(n)).unwrap();
            assert_eq!(z > 0, l.in_root_lattice(), "{} {l}", rs.name());
        }
    }
}

#[test]
fn multiplicities_sum_to_weyl_dimension_and_are_w_invariant() {
    for rs in all_types().into_iter().filter(|r| r.rank() <= 3) {
        let n = rs.rank();
        for c in [vec![1; n], vec![2; n], {
            let mut v = vec![0; n];
            v[0] = 3;
            v
        }] {
            let t = rs.weight_table(&c);
            let all = t.all_weights(&rs);
            assert_eq!(all.values().sum::<u64>(), rs.weyl_dimension_ints(&c), "{} {c:?}", rs.name());
            for (mu, &m) in &all {
                for w in rs.weyl_group() {
                    assert_eq!(all.get(&w.apply(mu)).copied(), Some(m));
                }
            }
        }
    }
}

#[test]
fn weyl_dimension_examples() {
    let a2 = RootSystem::new(Family::A, 2).unwrap();
    assert_eq!(a2.weyl_dimension(&a2.weight(&[2, 2])).unwrap(), 27);
    let b2 = RootSystem::new(Family::B, 2).unwrap();
    assert_eq!(b2.weyl_dimension(&b2.highest_root()).unwrap(), 10);
    assert_eq!(b2.max_weight_multiplicity(&b2.highest_root()).unwrap(), 2);
    let g2 = RootSystem::new(Family::G, 2).unwrap();
    assert_eq!(g2.weyl_dimension(&g2.highest_root()).unwrap(), 14);
    assert_eq!(g2.weyl_dimension(&g2.weight(&[1, 0])).unwrap(), 7);
}
