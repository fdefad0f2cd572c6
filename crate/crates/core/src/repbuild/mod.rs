//! Explicit irreducible modules, tensor products and the Cartan projection.
//!
//! A module `V_lambda` is built weight space by weight space, going down
//! from the highest weight. At weight `mu` the candidates are `f_i b` for
//! `b` in the basis of `V(mu + alpha_i)`. A vector of weight below the top
//! vanishes in the irreducible quotient exactly when every `e_j` kills it,
//! so each candidate is represented by its image `(e_j c)_j`, computed from
//! `e_j f_i b = f_i e_j b + delta_ij (mu + alpha_i)(h_i) b`, and the basis
//! is the first-come independent subset of those images.

mod cache;
mod tensor;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{determinant, q, Insertion, RowReducer, SparseMatrix, SparseVec, Q};
use crate::rootsys::{Family, LetterKind, RootSystem};
use crate::{Error, Result};

pub use cache::{cache_key, load_irrep, read_irrep, store_irrep, write_irrep, CACHE_VERSION};
pub use tensor::{tensor_decompose, TensorModule};

/// Irreducible highest weight module with exact matrices for every
/// Chevalley basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    family: Family,
    rank: usize,
    highest: Vec<i64>,
    /// Fundamental coordinates of the weight of each basis vector.
    weights: Vec<Vec<i64>>,
    /// Basis vector `i` is `f_{w[0]} f_{w[1]} ... v_lambda` up to lower terms
    /// of the echelon reduction; recorded as a label.
    words: Vec<Vec<usize>>,
    /// Weight -> (first index, dimension).
    spaces: BTreeMap<Vec<i64>, (usize, usize)>,
    /// One matrix per letter of the root system.
    mats: Vec<SparseMatrix>,
    /// Contravariant form on each weight space, in basis order.
    grams: BTreeMap<Vec<i64>, Vec<Vec<Q>>>,
}

/// Candidate `f_i b` together with its `e`-image.
struct Candidate {
    i: usize,
    parent: usize,
    image: Vec<Q>,
}

impl Irrep {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Highest weight in fundamental coordinates.
    pub fn highest(&self) -> &[i64] {
        &self.highest
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weight_of(&self, idx: usize) -> &[i64] {
        &self.weights[idx]
    }

    pub fn word_of(&self, idx: usize) -> &[usize] {
        &self.words[idx]
    }

    pub fn weight_spaces(&self) -> &BTreeMap<Vec<i64>, (usize, usize)> {
        &self.spaces
    }

    /// Basis indices of `V(mu)`; empty when `mu` is not a weight.
    pub fn weight_space(&self, mu: &[i64]) -> std::ops::Range<usize> {
        match self.spaces.get(mu) {
            Some(&(s, n)) => s..s + n,
            None => 0..0,
        }
    }

    pub fn gram(&self, mu: &[i64]) -> Option<&Vec<Vec<Q>>> {
        self.grams.get(mu)
    }

    pub fn grams(&self) -> &BTreeMap<Vec<i64>, Vec<Vec<Q>>> {
        &self.grams
    }

    /// Index of `v_lambda`.
    pub fn hw_index(&self) -> usize {
        0
    }

    /// Index of the lowest weight vector (always last).
    pub fn lw_index(&self) -> usize {
        self.dim() - 1
    }

    /// `pi(x_a)` for the letter `a`.
    pub fn matrix(&self, a: usize) -> &SparseMatrix {
        &self.mats[a]
    }

    pub fn matrices(&self) -> &[SparseMatrix] {
        &self.mats
    }

    pub fn hw_vector(&self) -> SparseVec {
        SparseVec::unit(self.hw_index())
    }

    pub fn lw_vector(&self) -> SparseVec {
        SparseVec::unit(self.lw_index())
    }

    /// `pi(x_{word[0]}) ... pi(x_{word[k-1]}) v`, applied right to left.
    pub fn act_word(&self, word: &[usize], v: &SparseVec) -> Result<SparseVec> {
        if let Some((&i, _)) = v.0.last_key_value() {
            if i >= self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    got: i + 1,
                });
            }
        }
        let mut out = v.clone();
        for &a in word.iter().rev() {
            let m = self.mats.get(a).ok_or(Error::UnknownLetter(a))?;
            out = m.mul_vec(&out);
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    /// Coefficient of the lowest weight vector in `u`.
    pub fn lowest_coefficient(&self, u: &SparseVec) -> Q {
        u.get(self.lw_index())
    }

    /// `[pi(x), pi(y)] = pi([x, y])` on every pair of letters.
    pub fn is_representation(&self, rs: &RootSystem) -> bool {
        let d = rs.dim();
        for a in 0..d {
            for b in (a + 1)..d {
                let lhs = self.mats[a].commutator(&self.mats[b]);
                let mut rhs = SparseMatrix::zeros(self.dim(), self.dim());
                for &(c, x) in rs.bracket(a, b) {
                    rhs = rhs.add_scaled(&self.mats[c], &q(x));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Invariant pairing `B(u, v_lambda)` on a self-dual module, normalized so
/// that the lowest weight basis vector pairs to 1. Only the lowest weight
/// component of `u` contributes.
pub fn invariant_pairing_value(rs: &RootSystem, v: &Irrep, u: &SparseVec) -> Result<Q> {
    if rs.dual_ints(v.highest()) != v.highest() {
        return Err(Error::NotSelfDual {
            weight: format!("{:?}", v.highest()),
        });
    }
    Ok(v.lowest_coefficient(u))
}

/// Builds `V_lambda`, rejecting modules larger than `size_cap`.
pub fn build_irrep(rs: &RootSystem, lambda: &crate::rootsys::Weight, size_cap: usize) -> Result<Irrep> {
    let l = rs.dominant_integral(lambda)?;
    let dim = rs.weyl_dimension_ints(&l);
    if dim > size_cap as u64 {
        return Err(Error::SizeCap { dim, cap: size_cap });
    }
    let v = build_from_ints(rs, &l)?;
    if v.dim() as u64 != dim {
        return Err(Error::Inconsistent(format!(
            "built {} vectors, Weyl dimension is {dim}",
            v.dim()
        )));
    }
    let table = rs.weight_table(&l);
    for (mu, &(_, n)) in &v.spaces {
        if table.mult(rs, mu) != n as u64 {
            return Err(Error::Inconsistent(format!("multiplicity mismatch at {mu:?}")));
        }
    }
    log::debug!("built V{:?} of {} (dim {})", l, rs.name(), v.dim());
    Ok(v)
}

fn build_from_ints(rs: &RootSystem, lambda: &[i64]) -> Result<Irrep> {
    let n = rs.rank();
    let simple: Vec<Vec<i64>> = (0..n).map(|i| rs.positive_roots_fund()[i].clone()).collect();
    let shift = |mu: &[i64], i: usize, s: i64| -> Vec<i64> {
        mu.iter().zip(&simple[i]).map(|(x, y)| x + s * y).collect()
    };

    let mut weights: Vec<Vec<i64>> = vec![lambda.to_vec()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut spaces: BTreeMap<Vec<i64>, (usize, usize)> = BTreeMap::new();
    spaces.insert(lambda.to_vec(), (0, 1));
    // e_cols[j][b] = e_j b, f_cols[i][b] = f_i b, in global coordinates
    let mut e_cols: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new()]; n];
    let mut f_cols: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new()]; n];
    let mut grams: BTreeMap<Vec<i64>, Vec<Vec<Q>>> = BTreeMap::new();
    grams.insert(lambda.to_vec(), vec![vec![Q::one()]]);
    // origin (i, parent) of every basis vector below the top
    let mut origin: Vec<Option<(usize, usize)>> = vec![None];

    let mut level: Vec<Vec<i64>> = vec![lambda.to_vec()];
    while !level.is_empty() {
        // weights one step down, in order of discovery
        let mut next: Vec<Vec<i64>> = Vec::new();
        for mu in &level {
            for i in 0..n {
                let nu = shift(mu, i, -1);
                if !next.contains(&nu) {
                    next.push(nu);
                }
            }
        }
        let mut found = Vec::new();
        for mu in next {
            // layout of the image space: V(mu + alpha_j) for each j
            let mut offsets = Vec::with_capacity(n);
            let mut total = 0;
            for j in 0..n {
                let up = shift(&mu, j, 1);
                let r = spaces.get(&up).copied();
                offsets.push(r.map(|(s, len)| (s, len, total)));
                total += r.map_or(0, |(_, len)| len);
            }
            let local = |g: usize| -> usize {
                for (s, len, off) in offsets.iter().flatten() {
                    if g >= *s && g < s + len {
                        return off + g - s;
                    }
                }
                unreachable!("vector outside the image layout")
            };

            let mut cands = Vec::new();
            for i in 0..n {
                let Some((s, len, _)) = offsets[i] else { continue };
                let coef_i = shift(&mu, i, 1)[i];
                for b in s..s + len {
                    let mut image = vec![Q::zero(); total];
                    for j in 0..n {
                        if offsets[j].is_none() {
                            continue;
                        }
                        // f_i (e_j b)
                        for (k, x) in e_cols[j][b].iter() {
                            for (t, y) in f_cols[i][k].iter() {
                                image[local(t)] += x * y;
                            }
                        }
                        if i == j {
                            image[local(b)] += q(coef_i);
                        }
                    }
                    cands.push(Candidate { i, parent: b, image });
                }
            }
            if cands.is_empty() {
                continue;
            }

            let start = weights.len();
            let mut reducer = RowReducer::new(total);
            let mut accepted: Vec<usize> = Vec::new();
            let mut coords: Vec<Vec<Q>> = Vec::with_capacity(cands.len());
            for (ci, c) in cands.iter().enumerate() {
                match reducer.insert(&c.image) {
                    Insertion::New(k) => {
                        accepted.push(ci);
                        let mut v = vec![Q::zero(); k + 1];
                        v[k] = Q::one();
                        coords.push(v);
                    }
                    Insertion::Dependent(v) => coords.push(v),
                }
            }
            let dim = accepted.len();
            if dim == 0 {
                for c in &cands {
                    f_cols[c.i][c.parent] = SparseVec::new();
                }
                continue;
            }
            spaces.insert(mu.clone(), (start, dim));
            for &ci in &accepted {
                let c = &cands[ci];
                let mut w = vec![c.i];
                w.extend_from_slice(&words[c.parent]);
                weights.push(mu.clone());
                words.push(w);
                origin.push(Some((c.i, c.parent)));
                for j in 0..n {
                    let mut col = SparseVec::new();
                    if let Some((s, len, off)) = offsets[j] {
                        for g in s..s + len {
                            let x = &c.image[off + g - s];
                            if !x.is_zero() {
                                col.add_entry(g, x.clone());
                            }
                        }
                    }
                    e_cols[j].push(col);
                }
                for fc in f_cols.iter_mut() {
                    fc.push(SparseVec::new());
                }
            }
            for (c, v) in cands.iter().zip(&coords) {
                let mut col = SparseVec::new();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        col.add_entry(start + k, x.clone());
                    }
                }
                f_cols[c.i][c.parent] = col;
            }

            // contravariant form: <f_i p, x> = <p, e_i x>
            let mut g = vec![vec![Q::zero(); dim]; dim];
            for r in 0..dim {
                let (i, p) = origin[start + r].expect("below the top");
                let up = shift(&mu, i, 1);
                let (us, _) = spaces[&up];
                let gu = &grams[&up];
                for (c, slot) in g[r].iter_mut().enumerate() {
                    let mut s = Q::zero();
                    for (k, x) in e_cols[i][start + c].iter() {
                        s += x * &gu[p - us][k - us];
                    }
                    *slot = s;
                }
            }
            for r in 0..dim {
                for c in 0..r {
                    if g[r][c] != g[c][r] {
                        return Err(Error::Inconsistent(format!("contravariant form not symmetric at {mu:?}")));
                    }
                }
            }
            if determinant(&g).is_zero() {
                return Err(Error::Inconsistent(format!("contravariant form singular at {mu:?}")));
            }
            grams.insert(mu.clone(), g);
            found.push(mu);
        }
        level = found;
    }

    let total = weights.len();
    let to_matrix = |cols: &[SparseVec]| {
        let mut m = SparseMatrix::zeros(total, total);
        for (j, c) in cols.iter().enumerate() {
            m.set_col(j, c.clone());
        }
        m
    };
    let e: Vec<SparseMatrix> = e_cols.iter().map(|c| to_matrix(c)).collect();
    let f: Vec<SparseMatrix> = f_cols.iter().map(|c| to_matrix(c)).collect();

    // root matrices along the extraspecial decomposition
    let npos = rs.positive_roots().len();
    let mut pos_m: Vec<SparseMatrix> = Vec::with_capacity(npos);
    let mut neg_m: Vec<SparseMatrix> = Vec::with_capacity(npos);
    for j in 0..npos {
        match rs.extraspecial(j) {
            None => {
                pos_m.push(e[j].clone());
                neg_m.push(f[j].clone());
            }
            Some((a, b, nab)) => {
                // [e_a, e_b] = N e_g and [e_-a, e_-b] = -N e_-g
                let inv = Q::new(1.into(), nab.into());
                pos_m.push(pos_m[a].commutator(&pos_m[b]).scale(&inv));
                neg_m.push(neg_m[a].commutator(&neg_m[b]).scale(&-inv));
            }
        }
    }
    let mats = rs
        .letters()
        .iter()
        .map(|l| match l.kind {
            LetterKind::Positive(j) => pos_m[j].clone(),
            LetterKind::Negative(j) => neg_m[j].clone(),
            LetterKind::Cartan(i) => {
                let d: Vec<Q> = weights.iter().map(|w| q(w[i])).collect();
                SparseMatrix::diagonal(&d)
            }
        })
        .collect();

    Ok(Irrep {
        family: rs.datum().family(),
        rank: n,
        highest: lambda.to_vec(),
        weights,
        words,
        spaces,
        mats,
        grams,
    })
}
