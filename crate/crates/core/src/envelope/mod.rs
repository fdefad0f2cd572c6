//! The enveloping algebra seen through its action on `v_nu`: filtration
//! levels, the codegree of the matrix coefficient `u -> v_{nu*}(pi(u) v_nu)`,
//! its leading symbol `f_(k)`, and symmetrization of monomials.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::linalg::{factorial, q, Insertion, RowReducer, SparseVec, Q};
use crate::polyalg::{killing_pair_s, GPoly, Monomial};
use crate::repbuild::{build_irrep, Irrep};
use crate::rootsys::{RootSystem, Weight};
use crate::{Config, Error, Result};

/// `W_m`, the span of all words of length at most `m` applied to `v_nu`.
#[derive(Clone, Debug)]
pub struct FiltrationSpace {
    level: usize,
    basis: Vec<SparseVec>,
    reducer: RowReducer,
}

impl FiltrationSpace {
    /// `W_0 = C v_nu`.
    pub fn initial(v: &Irrep) -> Self {
        let mut s = FiltrationSpace {
            level: 0,
            basis: Vec::new(),
            reducer: RowReducer::new(v.dim()),
        };
        s.push(v, v.hw_vector());
        s
    }

    fn push(&mut self, v: &Irrep, x: SparseVec) -> bool {
        if let Insertion::New(_) = self.reducer.insert(&x.to_dense(v.dim())) {
            self.basis.push(x);
            true
        } else {
            false
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// `W_{m+1} = W_m + sum_a pi(x_a) W_m`.
    pub fn grow(&self, v: &Irrep) -> FiltrationSpace {
        let mut next = self.clone();
        next.level += 1;
        for b in &self.basis {
            for m in v.matrices() {
                let y = m.mul_vec(b);
                if !y.is_zero() {
                    next.push(v, y);
                }
            }
        }
        next
    }

    pub fn contains(&self, v: &Irrep, x: &SparseVec) -> bool {
        self.reducer.contains(&x.to_dense(v.dim()))
    }

    /// Some vector of `W_m` has a nonzero lowest weight coordinate.
    pub fn meets_lowest(&self, v: &Irrep) -> bool {
        self.basis.iter().any(|b| !v.lowest_coefficient(b).is_zero())
    }
}

/// `f(u) = v_{nu*}(pi(u) v_nu)`, with `v_{nu*}` the lowest weight coordinate.
#[derive(Clone, Debug)]
pub struct MatrixCoeffFunctional {
    module: Irrep,
    /// `nu + nu*` in simple-root coordinates.
    lambda: Vec<i64>,
}

impl MatrixCoeffFunctional {
    pub fn new(rs: &RootSystem, nu: &Weight, cfg: &Config) -> Result<Self> {
        let v = build_irrep(rs, nu, cfg.size_cap)?;
        Ok(Self::from_irrep(rs, v))
    }

    pub fn from_irrep(rs: &RootSystem, module: Irrep) -> Self {
        let top = module.weight_of(module.hw_index()).to_vec();
        let bottom = module.weight_of(module.lw_index()).to_vec();
        let diff: Vec<i64> = top.iter().zip(&bottom).map(|(a, b)| a - b).collect();
        let lambda = rs.weight(&diff).root_ints().expect("nu + nu* lies in the root lattice");
        MatrixCoeffFunctional { module, lambda }
    }

    pub fn module(&self) -> &Irrep {
        &self.module
    }

    pub fn nu(&self) -> &[i64] {
        self.module.highest()
    }

    /// `lambda = nu + nu*` in simple-root coordinates.
    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// `f(x_{w[0]} ... x_{w[k-1]})`.
    pub fn eval_word(&self, word: &[usize]) -> Q {
        let x = self
            .module
            .act_word(word, &self.module.hw_vector())
            .expect("letters of the root system");
        self.module.lowest_coefficient(&x)
    }

    /// `f(tau(xi))`.
    pub fn eval_symmetrized(&self, xi: &Monomial) -> Result<Q> {
        let x = tau_apply(&self.module, xi, &self.module.hw_vector(), xi.degree())?;
        Ok(self.module.lowest_coefficient(&x))
    }

    /// `f(tau(v) tau(w))`.
    pub fn eval_product(&self, v: &Monomial, w: &Monomial) -> Result<Q> {
        let bound = v.degree().max(w.degree());
        let x = tau_apply(&self.module, w, &self.module.hw_vector(), bound)?;
        let y = tau_apply(&self.module, v, &x, bound)?;
        Ok(self.module.lowest_coefficient(&y))
    }
}

/// Smallest `k` with `f` nonzero on `U_k(g)`.
pub fn codegree(f: &MatrixCoeffFunctional) -> Result<usize> {
    codegree_with_levels(f).map(|(k, _)| k)
}

/// Codegree and the dimensions of `W_0, ..., W_k`.
pub fn codegree_with_levels(f: &MatrixCoeffFunctional) -> Result<(usize, Vec<usize>)> {
    let v = f.module();
    if f.nu().iter().all(|&x| x == 0) {
        return Err(Error::ZeroWeight);
    }
    let mut w = FiltrationSpace::initial(v);
    let mut dims = vec![w.dim()];
    while !w.meets_lowest(v) {
        let next = w.grow(v);
        if next.dim() == w.dim() {
            return Err(Error::Inconsistent("filtration stabilized below the lowest weight".into()));
        }
        w = next;
        dims.push(w.dim());
    }
    Ok((w.level(), dims))
}

/// Words with their values, keyed by sorted letter multiset.
pub type WordTable = BTreeMap<Vec<usize>, Vec<(Vec<usize>, Q)>>;

struct WordSearch<'a> {
    rs: &'a RootSystem,
    v: &'a Irrep,
    k: usize,
    /// `-ht(nu + nu*)`.
    target: i64,
    max_h: i64,
    out: WordTable,
}

impl WordSearch<'_> {
    // the word is built from the right: rev[0] acts first
    fn dfs(&mut self, cur: &SparseVec, height: i64, rev: &mut Vec<usize>) {
        let left = (self.k - rev.len()) as i64;
        if (self.target - height).abs() > left * self.max_h {
            return;
        }
        if left == 0 {
            let c = self.v.lowest_coefficient(cur);
            if !c.is_zero() {
                let word: Vec<usize> = rev.iter().rev().copied().collect();
                let mut key = word.clone();
                key.sort_unstable();
                self.out.entry(key).or_default().push((word, c));
            }
            return;
        }
        for a in 0..self.rs.dim() {
            let y = self.v.matrix(a).mul_vec(cur);
            if y.is_zero() {
                continue;
            }
            rev.push(a);
            self.dfs(&y, height + self.rs.letter(a).height(), rev);
            rev.pop();
        }
    }
}

/// Words of length `k` with a nonzero value of `f`, by letter multiset.
fn nonzero_words(rs: &RootSystem, f: &MatrixCoeffFunctional, k: usize) -> WordTable {
    let v = f.module();
    let mut search = WordSearch {
        rs,
        v,
        k,
        target: -f.lambda().iter().sum::<i64>(),
        max_h: rs.positive_roots().last().map(|r| r.iter().sum::<i64>()).unwrap_or(0),
        out: BTreeMap::new(),
    };
    search.dfs(&v.hw_vector(), 0, &mut Vec::new());
    search.out
}

/// `f_(k) = (1/k!) sum f(x_{a_1} ... x_{a_k}) x^{a_1} ... x^{a_k}` over the
/// Killing-dual basis, at the codegree `k`. Checked afterwards against
/// `f(x_1 ... x_k) = (f_(k), x_1 ... x_k)` on every contributing word.
pub fn extract_fk(rs: &RootSystem, f: &MatrixCoeffFunctional, k: usize) -> Result<GPoly> {
    let codeg = codegree(f)?;
    if k != codeg {
        return Err(Error::NotCodegree {
            requested: k,
            codegree: codeg,
        });
    }
    let nv = rs.dim();
    let words = nonzero_words(rs, f, k);
    let duals: Vec<GPoly> = (0..nv).map(|a| GPoly::linear(nv, &rs.dual_basis(a))).collect();
    let mut fk = GPoly::zero(nv);
    for (multiset, ws) in &words {
        let total: Q = ws.iter().map(|(_, c)| c.clone()).sum();
        if total.is_zero() {
            continue;
        }
        let mut prod = GPoly::constant(nv, Q::one());
        for &a in multiset {
            prod = prod.mul(&duals[a]);
        }
        fk.add_scaled(&prod, &(total / factorial(k)));
    }
    for (multiset, ws) in &words {
        let m = GPoly::monomial(Monomial::from_letters(nv, multiset), Q::one());
        let paired = killing_pair_s(rs, &fk, &m);
        for (word, c) in ws {
            if paired != *c {
                return Err(Error::Inconsistent(format!(
                    "leading symbol does not reproduce f on the word {word:?}"
                )));
            }
        }
    }
    Ok(fk)
}

/// Every ordering of every nonzero word of length `k`, as
/// `(word, value)` pairs grouped by multiset; the raw data behind
/// [`extract_fk`].
pub fn words_at_level(rs: &RootSystem, f: &MatrixCoeffFunctional, k: usize) -> WordTable {
    nonzero_words(rs, f, k)
}

/// `pi(tau(xi)) v`: the average over the distinct orderings of the letters
/// of `xi`. Any monomial of `S(g)` is accepted.
pub fn tau_apply(v: &Irrep, xi: &Monomial, x: &SparseVec, bound: usize) -> Result<SparseVec> {
    let deg = xi.degree();
    if deg > bound {
        return Err(Error::DegreeBound { degree: deg, bound });
    }
    // T(M) = sum over distinct first letters a of pi(a) T(M - a)
    let mut memo: HashMap<Vec<u16>, SparseVec> = HashMap::new();
    fn rec(v: &Irrep, m: &[u16], x: &SparseVec, memo: &mut HashMap<Vec<u16>, SparseVec>) -> SparseVec {
        if m.iter().all(|&e| e == 0) {
            return x.clone();
        }
        if let Some(r) = memo.get(m) {
            return r.clone();
        }
        let mut out = SparseVec::new();
        let mut sub = m.to_vec();
        for a in 0..m.len() {
            if m[a] == 0 {
                continue;
            }
            sub[a] -= 1;
            let t = rec(v, &sub, x, memo);
            sub[a] += 1;
            if !t.is_zero() {
                out.add_scaled(&v.matrix(a).mul_vec(&t), &Q::one());
            }
        }
        memo.insert(m.to_vec(), out.clone());
        out
    }
    let total = rec(v, xi.exponents(), x, &mut memo);
    let mut orderings = factorial(deg);
    for &e in xi.exponents() {
        orderings /= factorial(e as usize);
    }
    Ok(total.scale(&(Q::one() / orderings)))
}

/// `pi(tau(p)) v` for a polynomial, by linearity.
pub fn tau_apply_poly(v: &Irrep, p: &GPoly, x: &SparseVec, bound: usize) -> Result<SparseVec> {
    let mut out = SparseVec::new();
    for (m, c) in p.terms() {
        out.add_scaled(&tau_apply(v, m, x, bound)?, c);
    }
    Ok(out)
}

/// The naive element paired against all of `S(n_-)`.
#[derive(Clone, Debug)]
pub struct NaivePairing {
    /// `xi + xi*` in fundamental coordinates.
    pub nu: Vec<i64>,
    /// Pairing value `(pi(tau(Xi)) v_nu, v_nu)` per monomial `Xi` of
    /// weight `-2 nu` in `S(n_-)`.
    pub values: BTreeMap<Monomial, Q>,
    /// The element of `S(n)` reproducing those values.
    pub element: GPoly,
}

/// Monomials of `S(n_-)` of weight `-target` (simple-root coordinates).
pub fn negative_monomials(rs: &RootSystem, target: &[i64]) -> Vec<Monomial> {
    let nv = rs.dim();
    let npos = rs.positive_roots().len();
    let mut out = Vec::new();
    fn rec(rs: &RootSystem, j: usize, left: &mut Vec<i64>, cur: &mut Vec<usize>, out: &mut Vec<Monomial>, nv: usize, npos: usize) {
        if left.iter().all(|&x| x == 0) {
            out.push(Monomial::from_letters(nv, cur));
            return;
        }
        if j == npos {
            return;
        }
        let root = &rs.positive_roots()[j];
        // use root j some number of times, then move on
        let mut times = 0;
        loop {
            rec(rs, j + 1, left, cur, out, nv, npos);
            if left.iter().zip(root).any(|(l, r)| l < r) {
                break;
            }
            for (l, r) in left.iter_mut().zip(root) {
                *l -= r;
            }
            cur.push(rs.neg_letter(j));
            times += 1;
        }
        for _ in 0..times {
            cur.pop();
            for (l, r) in left.iter_mut().zip(root) {
                *l += r;
            }
        }
    }
    rec(rs, 0, &mut target.to_vec(), &mut Vec::new(), &mut out, nv, npos);
    out.sort();
    out
}

/// `f_nu in S(n)` with `(f_nu, Xi) = (pi(tau(Xi)) v_nu, v_nu)` for every
/// `Xi` in `S(n_-)`, where `nu = xi + xi*`. Monomials of `S(n_-)` pair
/// diagonally with `S(n)`, with norm `prod a! (e_phi, e_-phi)^a`.
pub fn naive_pairing_element(rs: &RootSystem, xi: &Weight, cfg: &Config) -> Result<NaivePairing> {
    let x = rs.dominant_integral(xi)?;
    let nu: Vec<i64> = x.iter().zip(rs.dual_ints(&x)).map(|(a, b)| a + b).collect();
    let v = build_irrep(rs, &rs.weight(&nu), cfg.size_cap)?;
    let two_nu: Vec<i64> = rs
        .weight(&nu)
        .root_ints()
        .expect("nu is in the root lattice")
        .iter()
        .map(|c| 2 * c)
        .collect();
    // degrees of weight -2 nu monomials are at most ht(2 nu)
    let bound = two_nu.iter().sum::<i64>() as usize;
    let nv = rs.dim();
    let mut values = BTreeMap::new();
    let mut element = GPoly::zero(nv);
    for m in negative_monomials(rs, &two_nu) {
        let y = tau_apply(&v, &m, &v.hw_vector(), bound)?;
        let val = v.lowest_coefficient(&y);
        if !val.is_zero() {
            let mut norm = Q::one();
            let mut dual = Monomial::one(nv);
            for j in 0..rs.positive_roots().len() {
                let e = m.exponent(rs.neg_letter(j));
                if e > 0 {
                    norm *= factorial(e as usize);
                    for _ in 0..e {
                        norm *= q(rs.killing_root_pair(j));
                    }
                    dual = dual.mul(&Monomial::from_letters(nv, &vec![rs.pos_letter(j); e as usize]));
                }
            }
            element.add_term(dual, &val / norm);
        }
        values.insert(m, val);
    }
    Ok(NaivePairing { nu, values, element })
}
