use std::fmt;

use num_traits::{One, Signed, Zero};

use super::CartanDatum;
use crate::linalg::{inverse, q, Q};

/// Element of `h*` with exact coordinates in the fundamental weights and in
/// the simple roots, kept consistent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    fund: Vec<Q>,
    root: Vec<Q>,
}

impl Weight {
    /// From fundamental-weight coordinates `m_i = lambda(h_i)`.
    pub fn from_fund(datum: &CartanDatum, fund: Vec<Q>) -> Weight {
        let n = datum.rank();
        assert_eq!(fund.len(), n);
        // m = A c, so c = A^{-1} m
        let a: Vec<Vec<Q>> = datum.matrix().iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let inv = inverse(&a).expect("Cartan matrix is nonsingular");
        let root = (0..n)
            .map(|i| (0..n).map(|j| &inv[i][j] * &fund[j]).sum())
            .collect();
        Weight { fund, root }
    }

    pub fn from_fund_ints(datum: &CartanDatum, fund: &[i64]) -> Weight {
        Weight::from_fund(datum, fund.iter().map(|&x| q(x)).collect())
    }

    /// From simple-root coordinates.
    pub fn from_root(datum: &CartanDatum, root: Vec<Q>) -> Weight {
        let n = datum.rank();
        assert_eq!(root.len(), n);
        let fund = (0..n)
            .map(|i| (0..n).map(|j| q(datum.entry(i, j)) * &root[j]).sum())
            .collect();
        Weight { fund, root }
    }

    pub fn from_root_ints(datum: &CartanDatum, root: &[i64]) -> Weight {
        Weight::from_root(datum, root.iter().map(|&x| q(x)).collect())
    }

    pub fn zero(rank: usize) -> Weight {
        Weight {
            fund: vec![Q::zero(); rank],
            root: vec![Q::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.fund.len()
    }

    pub fn fund_coords(&self) -> &[Q] {
        &self.fund
    }

    pub fn root_coords(&self) -> &[Q] {
        &self.root
    }

    /// In the weight lattice `L`.
    pub fn is_integral(&self) -> bool {
        self.fund.iter().all(|x| x.is_integer())
    }

    /// In the root lattice `L_o`.
    pub fn in_root_lattice(&self) -> bool {
        self.root.iter().all(|x| x.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.fund.iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.fund.iter().all(|x| x.is_zero())
    }

    pub fn fund_ints(&self) -> Option<Vec<i64>> {
        to_ints(&self.fund)
    }

    pub fn root_ints(&self) -> Option<Vec<i64>> {
        to_ints(&self.root)
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> Q {
        self.root.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            fund: self.fund.iter().zip(&other.fund).map(|(a, b)| a + b).collect(),
            root: self.root.iter().zip(&other.root).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            fund: self.fund.iter().map(|a| -a).collect(),
            root: self.root.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        let k = q(k);
        Weight {
            fund: self.fund.iter().map(|a| a * &k).collect(),
            root: self.root.iter().map(|a| a * &k).collect(),
        }
    }
}

fn to_ints(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| {
            if x.is_integer() {
                i64::try_from(x.numer()).ok()
            } else {
                None
            }
        })
        .collect()
}

/// Comma-separated fundamental coordinates.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .fund
            .iter()
            .map(|x| {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}
