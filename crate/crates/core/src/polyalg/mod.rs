//! Sparse polynomials in `S(g)` over the Chevalley basis, the Killing form
//! extended to `S(g)`, directional derivatives and the adjoint action.

mod invariants;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::{factorial, format_q, q, Q};
use crate::rootsys::{LetterKind, RootSystem, Weight};

pub use invariants::{defining_weight, invariant_generators, standard_invariants, InvariantSet};

/// Exponent vector over the letters of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, a: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[a] = 1;
        m
    }

    /// Product of the given letters (repetitions allowed).
    pub fn from_letters(nvars: usize, letters: &[usize]) -> Self {
        let mut m = Monomial::one(nvars);
        for &a in letters {
            m.0[a] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, a: usize) -> u16 {
        self.0[a]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Letters in ascending order, repeated by exponent.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(a, &e)| std::iter::repeat_n(a, e as usize))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Weight in simple-root coordinates.
    pub fn weight(&self, rs: &RootSystem) -> Vec<i64> {
        let mut w = vec![0; rs.rank()];
        for (a, &e) in self.0.iter().enumerate() {
            if e > 0 {
                for (x, y) in w.iter_mut().zip(&rs.letter(a).weight) {
                    *x += e as i64 * y;
                }
            }
        }
        w
    }

    fn without(&self, a: usize) -> Monomial {
        let mut m = self.clone();
        m.0[a] -= 1;
        m
    }

    fn with(&self, a: usize) -> Monomial {
        let mut m = self.clone();
        m.0[a] += 1;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the letters of `g`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

/// Output record: monomial keyed by letter label, coefficient as `p/q`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TermRecord {
    pub monomial: BTreeMap<String, u16>,
    pub coeff: String,
}

impl GPoly {
    pub fn zero(nvars: usize) -> Self {
        GPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        GPoly::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, a: usize) -> Self {
        GPoly::monomial(Monomial::var(nvars, a), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut p = GPoly::zero(m.0.len());
        p.add_term(m, c);
        p
    }

    /// Linear combination of letters.
    pub fn linear(nvars: usize, combo: &[(usize, Q)]) -> Self {
        let mut p = GPoly::zero(nvars);
        for (a, c) in combo {
            p.add_term(Monomial::var(nvars, *a), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.0.len(), self.nvars);
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &GPoly, c: &Q) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &GPoly) -> GPoly {
        let mut r = self.clone();
        r.add_scaled(other, &Q::one());
        r
    }

    pub fn sub(&self, other: &GPoly) -> GPoly {
        let mut r = self.clone();
        r.add_scaled(other, &-Q::one());
        r
    }

    pub fn scale(&self, c: &Q) -> GPoly {
        let mut r = GPoly::zero(self.nvars);
        for (m, x) in &self.terms {
            r.add_term(m.clone(), x * c);
        }
        r
    }

    pub fn mul(&self, other: &GPoly) -> GPoly {
        let mut r = GPoly::zero(self.nvars);
        for (m1, x1) in &self.terms {
            for (m2, x2) in &other.terms {
                r.add_term(m1.mul(m2), x1 * x2);
            }
        }
        r
    }

    pub fn pow(&self, k: usize) -> GPoly {
        let mut r = GPoly::constant(self.nvars, Q::one());
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Degrees of the terms present.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Monomial::degree).collect()
    }

    pub fn is_degree_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Degree-`k` component.
    pub fn homogeneous_part(&self, k: usize) -> GPoly {
        GPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, x)| (m.clone(), x.clone()))
                .collect(),
        }
    }

    /// Common weight of all terms (simple-root coordinates); `None` when
    /// the polynomial is zero or not weight-homogeneous.
    pub fn weight(&self, rs: &RootSystem) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|m| m.weight(rs));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    /// Every monomial uses positive root letters only (element of `S(n)`).
    pub fn in_positive_part(&self, rs: &RootSystem) -> bool {
        self.terms
            .keys()
            .all(|m| m.letters().all(|a| rs.letter(a).is_positive()))
    }

    /// Monomials sorted by the monomial order.
    pub fn to_records(&self, rs: &RootSystem) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                monomial: m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(a, &e)| (rs.letter(a).label.clone(), e))
                    .collect(),
                coeff: format_q(c),
            })
            .collect()
    }

    /// One term per line: `coeff  x[label]^e ...`.
    pub fn to_text(&self, rs: &RootSystem) -> String {
        let mut s = String::new();
        for (m, c) in &self.terms {
            let _ = write!(s, "{}", format_q(c));
            for (a, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    let _ = write!(s, " x[{}]", rs.letter(a).label);
                } else if e > 1 {
                    let _ = write!(s, " x[{}]^{e}", rs.letter(a).label);
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Killing form extended to `S(g)`: monomials of equal degree pair to the
/// sum over all matchings of their letters of the product of Killing values.
pub fn killing_pair_s(rs: &RootSystem, p: &GPoly, r: &GPoly) -> Q {
    let mut s = Q::zero();
    let mut memo = HashMap::new();
    for (m1, x1) in &p.terms {
        for (m2, x2) in &r.terms {
            if m1.degree() != m2.degree() {
                continue;
            }
            let v = pair_monomials(rs, m1, m2, &mut memo);
            if !v.is_zero() {
                s += x1 * x2 * v;
            }
        }
    }
    s
}

fn pair_monomials(rs: &RootSystem, m1: &Monomial, m2: &Monomial, memo: &mut HashMap<(Vec<u16>, Vec<u16>), Q>) -> Q {
    let mut v = Q::one();
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for (a, l) in rs.letters().iter().enumerate() {
        match l.kind {
            LetterKind::Cartan(_) => {
                h1.push(m1.0[a]);
                h2.push(m2.0[a]);
            }
            _ => {
                let b = rs.opposite(a).unwrap();
                let e = m1.0[a];
                if e != m2.0[b] {
                    return Q::zero();
                }
                if e > 0 {
                    let k = q(rs.killing(a, b));
                    v *= factorial(e as usize) * pow_q(&k, e as usize);
                }
            }
        }
    }
    if h1.iter().any(|&e| e > 0) {
        let key = (h1, h2);
        let c = match memo.get(&key) {
            Some(c) => c.clone(),
            None => {
                let c = cartan_permanent(rs.killing_h(), &key.0, &key.1);
                memo.insert(key, c.clone());
                c
            }
        };
        v *= c;
    }
    v
}

fn pow_q(x: &Q, k: usize) -> Q {
    let mut r = Q::one();
    for _ in 0..k {
        r *= x;
    }
    r
}

/// Sum over bijections between the letter multisets `a` and `b` of the
/// product of `k` entries.
fn cartan_permanent(k: &[Vec<Q>], a: &[u16], b: &[u16]) -> Q {
    if a.iter().map(|&x| x as u32).sum::<u32>() != b.iter().map(|&x| x as u32).sum::<u32>() {
        return Q::zero();
    }
    // sum over transport matrices N with margins a, b of prod k^N / N!
    fn rec(k: &[Vec<Q>], a: &[u16], i: usize, cols: &mut Vec<u16>) -> Q {
        if i == a.len() {
            return if cols.iter().all(|&c| c == 0) { Q::one() } else { Q::zero() };
        }
        let mut total = Q::zero();
        let mut row = vec![0u16; cols.len()];
        distribute(k, a, i, cols, &mut row, 0, a[i], &mut total);
        total
    }
    #[allow(clippy::too_many_arguments)]
    fn distribute(k: &[Vec<Q>], a: &[u16], i: usize, cols: &mut Vec<u16>, row: &mut Vec<u16>, j: usize, left: u16, total: &mut Q) {
        if j == cols.len() {
            if left != 0 {
                return;
            }
            let mut w = Q::one();
            for (jj, &n) in row.iter().enumerate() {
                if n > 0 {
                    w *= pow_q(&k[i][jj], n as usize) / factorial(n as usize);
                }
            }
            if w.is_zero() {
                return;
            }
            let sub = rec(k, a, i + 1, cols);
            *total += w * sub;
            return;
        }
        for n in 0..=left.min(cols[j]) {
            row[j] = n;
            cols[j] -= n;
            distribute(k, a, i, cols, row, j + 1, left - n, total);
            cols[j] += n;
        }
        row[j] = 0;
    }
    let mut cols = b.to_vec();
    let mut s = rec(k, a, 0, &mut cols);
    for &x in a.iter().chain(b) {
        s *= factorial(x as usize);
    }
    s
}

/// `d/dx_a`.
fn partial(p: &GPoly, a: usize) -> GPoly {
    let mut r = GPoly::zero(p.nvars);
    for (m, x) in &p.terms {
        let e = m.0[a];
        if e > 0 {
            r.add_term(m.without(a), x * q(e as i64));
        }
    }
    r
}

/// `d_{x_a}`: the derivation with `d_{x_a}(y) = (x_a, y)`.
fn letter_derivative(rs: &RootSystem, u: &GPoly, a: usize) -> GPoly {
    let mut r = GPoly::zero(u.nvars);
    match rs.letter(a).kind {
        LetterKind::Cartan(i) => {
            for j in 0..rs.rank() {
                let k = &rs.killing_h()[i][j];
                if !k.is_zero() {
                    r.add_scaled(&partial(u, rs.cartan_letter(j)), k);
                }
            }
        }
        _ => {
            let b = rs.opposite(a).unwrap();
            r.add_scaled(&partial(u, b), &q(rs.killing(a, b)));
        }
    }
    r
}

/// `d_p u`, adjoint to multiplication by `p` under [`killing_pair_s`].
pub fn directional_derivative(rs: &RootSystem, u: &GPoly, p: &GPoly) -> GPoly {
    let mut out = GPoly::zero(u.nvars);
    for (m, c) in &p.terms {
        let mut cur = u.clone();
        for a in m.letters() {
            cur = letter_derivative(rs, &cur, a);
            if cur.is_zero() {
                break;
            }
        }
        out.add_scaled(&cur, c);
    }
    out
}

/// `ad x_a` extended to `S(g)` as a derivation.
pub fn ad_action(rs: &RootSystem, a: usize, p: &GPoly) -> GPoly {
    let mut r = GPoly::zero(p.nvars);
    for (m, x) in &p.terms {
        for (b, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = m.without(b);
            for &(c, y) in rs.bracket(a, b) {
                r.add_term(base.with(c), x * q(e as i64 * y));
            }
        }
    }
    r
}

/// `p` is weight-homogeneous of weight `lambda` and killed by every simple
/// `ad e_{alpha_i}`. The zero polynomial lies in every such space.
pub fn is_n_invariant_weight(rs: &RootSystem, p: &GPoly, lambda: &Weight) -> bool {
    if p.is_zero() {
        return true;
    }
    let Some(w) = p.weight(rs) else { return false };
    if Some(w) != lambda.root_ints() {
        return false;
    }
    (0..rs.rank()).all(|i| ad_action(rs, rs.simple_letter(i), p).is_zero())
}

/// First simple index `i` with `ad e_{alpha_i} p != 0`.
pub fn invariance_witness(rs: &RootSystem, p: &GPoly) -> Option<usize> {
    (0..rs.rank()).find(|&i| !ad_action(rs, rs.simple_letter(i), p).is_zero())
}

/// `d_{p_i} p = 0` for every generator `p_i`.
pub fn is_harmonic(rs: &RootSystem, p: &GPoly, j: &InvariantSet) -> bool {
    j.generators()
        .iter()
        .all(|g| directional_derivative(rs, p, g).is_zero())
}
