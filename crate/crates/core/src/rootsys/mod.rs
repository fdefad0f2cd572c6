//! Root systems of the simple Lie algebras with a Chevalley basis, the
//! Killing form, the Weyl group and weight multiplicities.

mod cartan;
mod chevalley;
mod mult;
mod weight;
mod weyl;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::Zero;

pub use cartan::{invariant_degrees, CartanDatum, Family};
pub use mult::WeightTable;
pub use weight::Weight;
pub use weyl::{reflect, WeylElement};

use crate::linalg::{inverse, is_positive_definite, q, Q};
use crate::{Error, Result};

/// Identifier of the structure-constant sign convention; part of every
/// cache key.
pub const SIGN_CONVENTION: &str = "extraspecial-v1";

/// Largest Weyl group enumerated eagerly.
const MAX_WEYL_ORDER: u64 = 100_000;

/// Kind of a Chevalley basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    /// `e_{-phi}` for the positive root with this index.
    Negative(usize),
    /// `h_i`, the coroot of the simple root `alpha_i`.
    Cartan(usize),
    /// `e_phi` for the positive root with this index.
    Positive(usize),
}

/// Chevalley basis element of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub kind: LetterKind,
    /// `ad h`-weight in simple-root coordinates.
    pub weight: Vec<i64>,
    /// Simple-root coordinates for root vectors, `h1`, `h2`, ... otherwise.
    pub label: String,
}

impl Letter {
    pub fn height(&self) -> i64 {
        self.weight.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.kind, LetterKind::Positive(_))
    }

    pub fn is_negative(&self) -> bool {
        matches!(self.kind, LetterKind::Negative(_))
    }
}

/// Root system with its Chevalley basis. Immutable after construction.
///
/// The basis of `g` is indexed by *letters*, ordered by height and then by
/// the positive-root order: negative root vectors first, then `h_1..h_l`,
/// then positive root vectors. This order is also the variable order of
/// [`crate::polyalg::GPoly`].
#[derive(Clone, Debug)]
pub struct RootSystem {
    datum: CartanDatum,
    sym: Vec<i64>,
    form: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    pos_fund: Vec<Vec<i64>>,
    extraspecial: Vec<Option<(usize, usize, i64)>>,
    letters: Vec<Letter>,
    pos_letter: Vec<usize>,
    neg_letter: Vec<usize>,
    cartan_letter: Vec<usize>,
    root_letter: HashMap<Vec<i64>, usize>,
    structure: BTreeMap<(usize, usize), i64>,
    brackets: Vec<Vec<Vec<(usize, i64)>>>,
    killing: Vec<Vec<i64>>,
    killing_h: Vec<Vec<Q>>,
    killing_h_inv: Vec<Vec<Q>>,
    invariant_degrees: Vec<usize>,
    fund_form: Vec<Vec<Q>>,
    weyl: Vec<WeylElement>,
}

/// Builds the root system, Chevalley basis, Killing form and Weyl group.
pub fn build_root_system(datum: CartanDatum) -> Result<RootSystem> {
    RootSystem::build(datum)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        RootSystem::build(CartanDatum::new(family, rank)?)
    }

    fn build(datum: CartanDatum) -> Result<RootSystem> {
        let n = datum.rank();
        let degrees = invariant_degrees(datum.family(), n);
        let order: u64 = degrees.iter().map(|&d| d as u64).product();
        if order > MAX_WEYL_ORDER {
            return Err(Error::WeylGroupTooLarge { order });
        }
        let sym = datum.symmetrizer();
        let form: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| datum.entry(i, j) * sym[i] / 2).collect())
            .collect();
        let positive = chevalley::positive_roots(&datum);
        let pos_fund: Vec<Vec<i64>> = positive
            .iter()
            .map(|c| (0..n).map(|i| (0..n).map(|j| c[j] * datum.entry(i, j)).sum()).collect())
            .collect();

        // letters: negatives (deepest first), Cartan, positives
        let npos = positive.len();
        let mut letters = Vec::with_capacity(2 * npos + n);
        let mut neg_letter = vec![0; npos];
        let mut pos_letter = vec![0; npos];
        let mut cartan_letter = vec![0; n];
        let mut neg_order: Vec<usize> = (0..npos).collect();
        // stable by descending height keeps the positive order within a height
        neg_order.sort_by_key(|&j| std::cmp::Reverse(chevalley::height(&positive[j])));
        for j in neg_order {
            neg_letter[j] = letters.len();
            let w: Vec<i64> = positive[j].iter().map(|x| -x).collect();
            letters.push(Letter {
                kind: LetterKind::Negative(j),
                label: root_label(&w),
                weight: w,
            });
        }
        for (i, slot) in cartan_letter.iter_mut().enumerate() {
            *slot = letters.len();
            letters.push(Letter {
                kind: LetterKind::Cartan(i),
                weight: vec![0; n],
                label: format!("h{}", i + 1),
            });
        }
        for (j, r) in positive.iter().enumerate() {
            pos_letter[j] = letters.len();
            letters.push(Letter {
                kind: LetterKind::Positive(j),
                weight: r.clone(),
                label: root_label(r),
            });
        }
        let root_letter: HashMap<Vec<i64>, usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, l)| !matches!(l.kind, LetterKind::Cartan(_)))
            .map(|(i, l)| (l.weight.clone(), i))
            .collect();

        let mut sc = chevalley::StructureConstants::new(&positive, form.clone());
        let dim = letters.len();
        let mut structure = BTreeMap::new();
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let (la, lb) = (&letters[a], &letters[b]);
                let entry = match (la.kind, lb.kind) {
                    (LetterKind::Cartan(_), LetterKind::Cartan(_)) => Vec::new(),
                    (LetterKind::Cartan(i), _) => {
                        let v = root_on_coroot(&datum, &lb.weight, i);
                        if v == 0 {
                            Vec::new()
                        } else {
                            vec![(b, v)]
                        }
                    }
                    (_, LetterKind::Cartan(i)) => {
                        let v = root_on_coroot(&datum, &la.weight, i);
                        if v == 0 {
                            Vec::new()
                        } else {
                            vec![(a, -v)]
                        }
                    }
                    _ => {
                        let s: Vec<i64> = la.weight.iter().zip(&lb.weight).map(|(x, y)| x + y).collect();
                        if s.iter().all(|&x| x == 0) {
                            // [e_phi, e_{-phi}] = h_phi
                            coroot(&sym, &form, &la.weight)
                                .into_iter()
                                .enumerate()
                                .filter(|(_, c)| *c != 0)
                                .map(|(i, c)| (cartan_letter[i], c))
                                .collect()
                        } else if let Some(&c) = root_letter.get(&s) {
                            let nq = sc.general(&la.weight, &lb.weight);
                            if !nq.is_integer() || nq.is_zero() {
                                return Err(Error::Inconsistent(format!(
                                    "structure constant N[{},{}] = {nq}",
                                    la.label, lb.label
                                )));
                            }
                            let nv = i64::try_from(nq.numer()).expect("small structure constant");
                            structure.insert((a, b), nv);
                            vec![(c, nv)]
                        } else {
                            Vec::new()
                        }
                    }
                };
                brackets[a][b] = entry;
            }
        }
        let extraspecial = sc.extraspecial.clone();

        // Killing form: (x_a, x_b) = tr(ad x_a ad x_b) = sum_d coeff of x_d in [x_a, [x_b, x_d]]
        let mut killing = vec![vec![0i64; dim]; dim];
        for a in 0..dim {
            for b in a..dim {
                let mut tr = 0;
                for d in 0..dim {
                    for &(c, x) in &brackets[b][d] {
                        for &(e, y) in &brackets[a][c] {
                            if e == d {
                                tr += x * y;
                            }
                        }
                    }
                }
                killing[a][b] = tr;
                killing[b][a] = tr;
            }
        }
        let killing_h: Vec<Vec<Q>> = cartan_letter
            .iter()
            .map(|&a| cartan_letter.iter().map(|&b| q(killing[a][b])).collect())
            .collect();
        let killing_h_inv = inverse(&killing_h).ok_or_else(|| Error::Inconsistent("singular Killing form on h".into()))?;

        let a_q: Vec<Vec<Q>> = datum.matrix().iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let a_inv = inverse(&a_q).expect("Cartan matrix is nonsingular");
        let fund_form: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = Q::zero();
                        for k in 0..n {
                            for l in 0..n {
                                s += &a_inv[k][i] * q(form[k][l]) * &a_inv[l][j];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();

        let weyl = weyl::enumerate(&datum);
        Ok(RootSystem {
            datum,
            sym,
            form,
            pos_fund,
            extraspecial,
            letters,
            pos_letter,
            neg_letter,
            cartan_letter,
            root_letter,
            structure,
            brackets,
            killing,
            killing_h,
            killing_h_inv,
            invariant_degrees: degrees,
            fund_form,
            weyl,
            positive,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn name(&self) -> String {
        self.datum.name()
    }

    /// Positive roots in simple-root coordinates, in the fixed root order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_roots_fund(&self) -> &[Vec<i64>] {
        &self.pos_fund
    }

    pub fn heights(&self) -> Vec<usize> {
        self.positive.iter().map(|r| chevalley::height(r) as usize).collect()
    }

    /// Extraspecial pair `(alpha, beta, N_{alpha,beta})` of a positive root,
    /// as positive-root indices; `None` for simple roots.
    pub fn extraspecial(&self, j: usize) -> Option<(usize, usize, i64)> {
        self.extraspecial[j]
    }

    /// `|alpha_i|^2` with short roots of length 2.
    pub fn root_lengths(&self) -> &[i64] {
        &self.sym
    }

    /// `(alpha_i, alpha_j)` in the normalization of [`Self::root_lengths`].
    pub fn simple_form(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// Dimension of `g`.
    pub fn dim(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, a: usize) -> &Letter {
        &self.letters[a]
    }

    pub fn pos_letter(&self, j: usize) -> usize {
        self.pos_letter[j]
    }

    pub fn neg_letter(&self, j: usize) -> usize {
        self.neg_letter[j]
    }

    pub fn cartan_letter(&self, i: usize) -> usize {
        self.cartan_letter[i]
    }

    /// Letter of `e_{alpha_i}`.
    pub fn simple_letter(&self, i: usize) -> usize {
        self.pos_letter[i]
    }

    /// Letter of `e_{-alpha_i}`.
    pub fn simple_neg_letter(&self, i: usize) -> usize {
        self.neg_letter[i]
    }

    /// Letter of the root vector with these simple-root coordinates.
    pub fn root_letter(&self, root: &[i64]) -> Option<usize> {
        self.root_letter.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_letter.contains_key(v)
    }

    /// Letter of `e_{-phi}` given the letter of `e_phi` (and conversely).
    pub fn opposite(&self, a: usize) -> Option<usize> {
        match self.letters[a].kind {
            LetterKind::Positive(j) => Some(self.neg_letter[j]),
            LetterKind::Negative(j) => Some(self.pos_letter[j]),
            LetterKind::Cartan(_) => None,
        }
    }

    /// `[x_a, x_b]` in the letter basis.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.brackets[a][b]
    }

    /// `N_{phi,psi}` for root letters with `phi + psi` a root, else 0.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.structure.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Every nonzero structure constant, keyed by letter pairs.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.structure
    }

    /// Killing form `tr(ad x_a ad x_b)`.
    pub fn killing(&self, a: usize, b: usize) -> i64 {
        self.killing[a][b]
    }

    /// Gram matrix of the Killing form on `h_1..h_l`.
    pub fn killing_h(&self) -> &[Vec<Q>] {
        &self.killing_h
    }

    /// `(e_phi, e_{-phi})` for the positive root with index `j`.
    pub fn killing_root_pair(&self, j: usize) -> i64 {
        self.killing[self.pos_letter[j]][self.neg_letter[j]]
    }

    /// Killing-dual basis element `x^a` with `(x^a, x_b) = delta_ab`.
    pub fn dual_basis(&self, a: usize) -> Vec<(usize, Q)> {
        match self.letters[a].kind {
            LetterKind::Cartan(i) => (0..self.rank())
                .filter(|&j| !self.killing_h_inv[i][j].is_zero())
                .map(|j| (self.cartan_letter[j], self.killing_h_inv[i][j].clone()))
                .collect(),
            _ => {
                let b = self.opposite(a).unwrap();
                vec![(b, Q::new(1.into(), self.killing[a][b].into()))]
            }
        }
    }

    /// Degrees of the basic invariants `p_1..p_l`.
    pub fn invariant_degrees(&self) -> &[usize] {
        &self.invariant_degrees
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// `rho`, half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        self.weight(&vec![1; self.rank()])
    }

    /// Weight from integer fundamental coordinates.
    pub fn weight(&self, fund: &[i64]) -> Weight {
        Weight::from_fund_ints(&self.datum, fund)
    }

    pub fn weight_from_root(&self, root: &[i64]) -> Weight {
        Weight::from_root_ints(&self.datum, root)
    }

    /// Highest root.
    pub fn highest_root(&self) -> Weight {
        self.weight_from_root(self.positive.last().unwrap())
    }

    /// Fundamental coordinates of a root-lattice vector.
    pub fn root_to_fund(&self, root: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| root[j] * self.datum.entry(i, j)).sum()).collect()
    }

    /// Invariant form on fundamental coordinates, short roots of length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 {
                    s += &self.fund_form[i][j] * q(a[i] * b[j]);
                }
            }
        }
        s
    }

    /// Form on `h*` dual to the Killing form, on fundamental coordinates.
    pub fn killing_dual(&self, a: &[i64], b: &[i64]) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            for j in 0..n {
                s += &self.killing_h_inv[i][j] * q(a[i] * b[j]);
            }
        }
        s
    }

    /// True when the Killing Gram matrix on `h` is positive definite.
    pub fn killing_h_positive_definite(&self) -> bool {
        is_positive_definite(&self.killing_h)
    }

    /// Text form: positive roots one per line, then the structure-constant
    /// table. Identical bytes for identical input.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "root-system {}", self.name());
        let _ = writeln!(s, "sign-convention {SIGN_CONVENTION}");
        let _ = writeln!(s, "positive-roots {}", self.positive.len());
        for r in &self.positive {
            let _ = writeln!(s, "{}", join_ints(r, " "));
        }
        let _ = writeln!(s, "structure-constants {}", self.structure.len());
        for (&(a, b), n) in &self.structure {
            let _ = writeln!(
                s,
                "{} | {} | {}",
                join_ints(&self.letters[a].weight, " "),
                join_ints(&self.letters[b].weight, " "),
                n
            );
        }
        s
    }
}

fn root_on_coroot(datum: &CartanDatum, root: &[i64], i: usize) -> i64 {
    (0..datum.rank()).map(|j| root[j] * datum.entry(i, j)).sum()
}

/// Coroot `h_phi` in the basis `h_i`: `sum_i c_i |alpha_i|^2 / |phi|^2`.
fn coroot(sym: &[i64], form: &[Vec<i64>], root: &[i64]) -> Vec<i64> {
    let n = root.len();
    let mut norm = 0;
    for i in 0..n {
        for j in 0..n {
            norm += root[i] * form[i][j] * root[j];
        }
    }
    (0..n)
        .map(|i| {
            let num = root[i] * sym[i];
            debug_assert_eq!(num % norm, 0);
            num / norm
        })
        .collect()
}

fn root_label(v: &[i64]) -> String {
    join_ints(v, ",")
}

pub(crate) fn join_ints(v: &[i64], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests;
