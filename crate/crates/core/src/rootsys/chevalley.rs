//! Positive roots and Chevalley structure constants from a Cartan matrix.
//!
//! Signs are fixed by the extraspecial pairs: for every non-simple positive
//! root `gamma` the pair `(alpha, beta)` with `alpha` minimal in the root
//! order and `gamma - alpha` a positive root gets `N = +(p + 1)`. Every other
//! constant then follows from the identities satisfied by a Chevalley basis
//! normalized so that `N_{-a,-b} = -N_{a,b}`:
//!
//! * `N_{a,b} / (c,c) = N_{b,c} / (a,a) = N_{c,a} / (b,b)` when `a + b + c = 0`;
//! * the four-root identity when `a + b + c + d = 0` with no opposite pair.

use std::collections::HashMap;

use num_traits::Zero;

use super::CartanDatum;
use crate::linalg::{q, Q};

pub(crate) fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// Positive roots in simple-root coordinates, ordered by height and then
/// descending lexicographic coordinates (so `alpha_1` precedes `alpha_2`).
pub(crate) fn positive_roots(datum: &CartanDatum) -> Vec<Vec<i64>> {
    let n = datum.rank();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut all: std::collections::HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier = simple.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                // alpha_i-string through beta: beta - p alpha_i .. beta + q alpha_i
                let mut p = 0;
                loop {
                    let mut cand = beta.clone();
                    cand[i] -= p + 1;
                    if all.contains(&cand) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * datum.entry(i, j)).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    roots
}

pub(crate) struct StructureConstants<'a> {
    positive: &'a [Vec<i64>],
    pos_index: HashMap<Vec<i64>, usize>,
    form: Vec<Vec<i64>>,
    /// Per positive root: extraspecial pair `(alpha, beta, p + 1)`.
    pub extraspecial: Vec<Option<(usize, usize, i64)>>,
    memo: HashMap<(usize, usize), Q>,
}

impl<'a> StructureConstants<'a> {
    pub fn new(positive: &'a [Vec<i64>], form: Vec<Vec<i64>>) -> Self {
        let pos_index: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let mut sc = StructureConstants {
            positive,
            pos_index,
            form,
            extraspecial: Vec::new(),
            memo: HashMap::new(),
        };
        let extra = (0..positive.len())
            .map(|g| {
                let gamma = &positive[g];
                if height(gamma) == 1 {
                    return None;
                }
                // positive roots are already in the chosen order
                let (a, b) = positive.iter().enumerate().find_map(|(a, alpha)| {
                    let rest = sub(gamma, alpha);
                    sc.pos_index.get(&rest).map(|&b| (a, b))
                })?;
                let alpha = &positive[a];
                let beta = &positive[b];
                let mut p = 0;
                while sc.is_root(&sub(beta, &scale(alpha, p + 1))) {
                    p += 1;
                }
                Some((a, b, p + 1))
            })
            .collect();
        sc.extraspecial = extra;
        sc
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return false;
        }
        self.pos_index.contains_key(v) || self.pos_index.contains_key(&neg(v))
    }

    fn is_positive(v: &[i64]) -> bool {
        v.iter().any(|&x| x > 0)
    }

    pub fn norm(&self, v: &[i64]) -> i64 {
        let n = v.len();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += v[i] * self.form[i][j] * v[j];
            }
        }
        s
    }

    fn normq(&self, v: &[i64]) -> Q {
        q(self.norm(v))
    }

    /// `N_{phi,psi}` for arbitrary roots; zero when `phi + psi` is not a root.
    pub fn general(&mut self, phi: &[i64], psi: &[i64]) -> Q {
        let s = add(phi, psi);
        if !self.is_root(&s) {
            return Q::zero();
        }
        let (pp, sp) = (Self::is_positive(phi), Self::is_positive(psi));
        match (pp, sp) {
            (true, true) => {
                let (x, z) = (self.pos_index[phi], self.pos_index[psi]);
                self.positive_pair(x, z)
            }
            (false, false) => -self.general(&neg(phi), &neg(psi)),
            (true, false) => {
                if Self::is_positive(&s) {
                    // triple (phi, psi, -s): N_{phi,psi}/(s,s) = N_{psi,-s}/(phi,phi)
                    let inner = -self.general(&neg(psi), &s);
                    self.normq(&s) / self.normq(phi) * inner
                } else {
                    // N_{phi,psi}/(s,s) = N_{-s,phi}/(psi,psi)
                    let inner = self.general(&neg(&s), phi);
                    self.normq(&s) / self.normq(psi) * inner
                }
            }
            (false, true) => -self.general(psi, phi),
        }
    }

    fn positive_pair(&mut self, x: usize, z: usize) -> Q {
        if let Some(v) = self.memo.get(&(x, z)) {
            return v.clone();
        }
        let xi = self.positive[x].clone();
        let zeta = self.positive[z].clone();
        let gamma = add(&xi, &zeta);
        let g = self.pos_index[&gamma];
        let (a, b, n_ab) = self.extraspecial[g].expect("non-simple root has an extraspecial pair");
        let value = if (x, z) == (a, b) {
            q(n_ab)
        } else if (z, x) == (a, b) {
            q(-n_ab)
        } else {
            let alpha = self.positive[a].clone();
            let beta = self.positive[b].clone();
            let nalpha = neg(&alpha);
            let nbeta = neg(&beta);
            // four roots xi + zeta - alpha - beta = 0
            let mut rest = Q::zero();
            let za = sub(&zeta, &alpha);
            if self.is_root(&za) {
                let t = self.general(&zeta, &nalpha) * self.general(&xi, &nbeta);
                rest += t / self.normq(&za);
            }
            let xa = sub(&xi, &alpha);
            if self.is_root(&xa) {
                let t = self.general(&nalpha, &xi) * self.general(&zeta, &nbeta);
                rest += t / self.normq(&xa);
            }
            self.normq(&gamma) * rest / q(n_ab)
        };
        self.memo.insert((x, z), value.clone());
        value
    }
}

fn scale(v: &[i64], k: i64) -> Vec<i64> {
    v.iter().map(|x| x * k).collect()
}
