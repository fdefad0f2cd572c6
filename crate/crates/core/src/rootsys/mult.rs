//! Weight multiplicities (Freudenthal), Weyl dimension, duals.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{ToPrimitive, Zero};

use super::{reflect, RootSystem, Weight};
use crate::linalg::{q, Q};
use crate::{Error, Result};

/// Multiplicities of the dominant weights of one irreducible module, keyed
/// by fundamental coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    highest: Vec<i64>,
    dominant: BTreeMap<Vec<i64>, u64>,
}

impl WeightTable {
    pub fn highest(&self) -> &[i64] {
        &self.highest
    }

    pub fn dominant(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.dominant
    }

    /// Multiplicity of an arbitrary weight.
    pub fn mult(&self, rs: &RootSystem, mu: &[i64]) -> u64 {
        let (d, _) = rs.to_dominant(mu);
        self.dominant.get(&d).copied().unwrap_or(0)
    }

    /// Every weight with its multiplicity.
    pub fn all_weights(&self, rs: &RootSystem) -> BTreeMap<Vec<i64>, u64> {
        let mut out = BTreeMap::new();
        for (mu, &m) in &self.dominant {
            for w in rs.weyl_group() {
                out.insert(w.apply(mu), m);
            }
        }
        out
    }

    pub fn dimension(&self, rs: &RootSystem) -> u64 {
        self.all_weights(rs).values().sum()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.dominant.values().copied().max().unwrap_or(0)
    }
}

impl RootSystem {
    /// Dominant conjugate and the number of simple reflections used.
    pub fn to_dominant(&self, m: &[i64]) -> (Vec<i64>, usize) {
        let mut v = m.to_vec();
        let mut steps = 0;
        while let Some(i) = v.iter().position(|&x| x < 0) {
            reflect(self.datum(), i, &mut v);
            steps += 1;
        }
        (v, steps)
    }

    /// Height of a root-lattice element given in fundamental coordinates.
    pub(crate) fn fund_height(&self, m: &[i64]) -> Option<i64> {
        let w = self.weight(m);
        w.root_ints().map(|r| r.iter().sum())
    }

    /// Validates a dominant integral weight and returns its coordinates.
    pub fn dominant_integral(&self, w: &Weight) -> Result<Vec<i64>> {
        if w.rank() != self.rank() {
            return Err(Error::WrongRank { got: w.rank(), rank: self.rank() });
        }
        match w.fund_ints() {
            Some(m) if w.is_dominant() => Ok(m),
            _ => Err(Error::NotDominantIntegral { weight: w.to_string() }),
        }
    }

    /// Freudenthal's recursion over the dominant weights below `lambda`.
    pub fn weight_table(&self, lambda: &[i64]) -> WeightTable {
        let rho = vec![1i64; self.rank()];
        let lr: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let top = self.inner(&lr, &lr);

        // dominant weights below lambda, connected through positive roots
        let mut dom: BTreeSet<Vec<i64>> = BTreeSet::new();
        dom.insert(lambda.to_vec());
        let mut stack = vec![lambda.to_vec()];
        while let Some(mu) = stack.pop() {
            for a in self.positive_roots_fund() {
                let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x - y).collect();
                if nu.iter().all(|&x| x >= 0) && dom.insert(nu.clone()) {
                    stack.push(nu);
                }
            }
        }
        let mut order: Vec<(i64, Vec<i64>)> = dom
            .into_iter()
            .map(|mu| {
                let diff: Vec<i64> = lambda.iter().zip(&mu).map(|(a, b)| a - b).collect();
                (self.fund_height(&diff).expect("root lattice"), mu)
            })
            .collect();
        order.sort();

        let mut table: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (depth, mu) in order {
            if depth == 0 {
                table.insert(mu, 1);
                continue;
            }
            let mut num = Q::zero();
            for a in self.positive_roots_fund() {
                let mut k = 1;
                loop {
                    let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                    let (d, _) = self.to_dominant(&nu);
                    let Some(&m) = table.get(&d) else { break };
                    if m == 0 {
                        break;
                    }
                    num += self.inner(&nu, a) * q(m as i64);
                    k += 1;
                }
            }
            let mr: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
            let den = &top - self.inner(&mr, &mr);
            let m = q(2) * num / den;
            debug_assert!(m.is_integer());
            table.insert(mu, m.to_integer().to_u64().expect("nonnegative multiplicity"));
        }
        table.retain(|_, m| *m > 0);
        WeightTable {
            highest: lambda.to_vec(),
            dominant: table,
        }
    }

    /// `dim V_lambda(mu)`.
    pub fn freudenthal_mult(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        let l = self.dominant_integral(lambda)?;
        if !lambda.add(&mu.neg()).in_root_lattice() {
            return Ok(0);
        }
        let m = mu.fund_ints().expect("integral when lambda - mu is in the root lattice");
        Ok(self.weight_table(&l).mult(self, &m))
    }

    /// Weyl's dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u64> {
        let l = self.dominant_integral(lambda)?;
        Ok(self.weyl_dimension_ints(&l))
    }

    pub(crate) fn weyl_dimension_ints(&self, l: &[i64]) -> u64 {
        let rho = vec![1i64; self.rank()];
        let lr: Vec<i64> = l.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let mut d = Q::from_integer(1.into());
        for a in self.positive_roots_fund() {
            d *= self.inner(&lr, a) / self.inner(&rho, a);
        }
        debug_assert!(d.is_integer());
        d.to_integer().to_u64().expect("dimension fits in u64")
    }

    /// Largest weight multiplicity of `V_xi`.
    pub fn max_weight_multiplicity(&self, xi: &Weight) -> Result<u64> {
        let l = self.dominant_integral(xi)?;
        Ok(self.weight_table(&l).max_multiplicity())
    }

    /// Highest weight of the dual module, `-w_0 lambda`.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        let l = self.dominant_integral(lambda)?;
        Ok(self.weight(&self.dual_ints(&l)))
    }

    pub(crate) fn dual_ints(&self, l: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = l.iter().map(|x| -x).collect();
        self.to_dominant(&neg).0
    }
}
