use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::rootsys::{RootSystem, Weight};
use crate::{Config, Error, Result};

/// Graded multiplicity of `V_lambda` in the harmonic polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentPolynomial {
    /// `lambda` in fundamental coordinates.
    pub lambda: Vec<i64>,
    /// degree -> multiplicity, zero entries omitted.
    pub coeffs: BTreeMap<usize, u64>,
}

impl ExponentPolynomial {
    /// `l(lambda)`, the number of exponents with multiplicity.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Exponents listed with multiplicity, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .flat_map(|(&d, &m)| std::iter::repeat_n(d, m as usize))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, m)| match (d, m) {
                (0, _) => m.to_string(),
                (_, 1) => format!("q^{d}"),
                _ => format!("{m} q^{d}"),
            })
            .collect();
        terms.join(" + ")
    }
}

/// `dim S^k(g)(mu)` for `k <= max_deg`, all root-lattice `mu`.
struct SymmetricCharacter {
    table: Vec<HashMap<Vec<i64>, i128>>,
}

impl SymmetricCharacter {
    fn new(rs: &RootSystem, max_deg: usize) -> Self {
        let n = rs.rank();
        let mut table: Vec<HashMap<Vec<i64>, i128>> = vec![HashMap::new(); max_deg + 1];
        table[0].insert(vec![0; n], 1);
        // one factor 1/(1 - q t^w) per letter of g
        for letter in rs.letters() {
            let w = &letter.weight;
            for k in 1..=max_deg {
                let prev: Vec<(Vec<i64>, i128)> = table[k - 1].iter().map(|(m, &c)| (m.clone(), c)).collect();
                for (m, c) in prev {
                    let shifted: Vec<i64> = m.iter().zip(w).map(|(a, b)| a + b).collect();
                    *table[k].entry(shifted).or_insert(0) += c;
                }
            }
        }
        SymmetricCharacter { table }
    }

    fn get(&self, k: usize, mu: &[i64]) -> i128 {
        self.table[k].get(mu).copied().unwrap_or(0)
    }
}

/// `E_lambda(q) = (sum_k mult(V_lambda, S^k g) q^k) prod_i (1 - q^{d_i})`,
/// truncated at `ht(lambda)`, with the multiplicities taken from the Weyl
/// alternation over characters of `S^k(g)`.
pub fn generalized_exponents(rs: &RootSystem, lambda: &Weight, cfg: &Config) -> Result<ExponentPolynomial> {
    let l = rs.dominant_integral(lambda)?;
    let Some(root) = lambda.root_ints() else {
        return Err(Error::NotInRootLattice {
            weight: lambda.to_string(),
        });
    };
    let height = root.iter().sum::<i64>() as usize;
    if height > cfg.exponent_height_bound {
        return Err(Error::HeightBound {
            height,
            bound: cfg.exponent_height_bound,
        });
    }
    let chars = SymmetricCharacter::new(rs, height);
    let rho = vec![1i64; rs.rank()];
    // lambda + rho - w rho in root coordinates, with sign
    let shifts: Vec<(Vec<i64>, i128)> = rs
        .weyl_group()
        .iter()
        .map(|w| {
            let wr = w.apply(&rho);
            let diff: Vec<i64> = rho.iter().zip(&wr).map(|(a, b)| a - b).collect();
            let d = rs.weight(&diff).root_ints().expect("rho - w rho is a sum of roots");
            let mu: Vec<i64> = root.iter().zip(&d).map(|(a, b)| a + b).collect();
            (mu, w.sign() as i128)
        })
        .collect();
    let mut series: Vec<i128> = (0..=height)
        .map(|k| shifts.iter().map(|(mu, s)| s * chars.get(k, mu)).sum())
        .collect();
    for &d in rs.invariant_degrees() {
        for k in (d..=height).rev() {
            series[k] -= series[k - d];
        }
    }
    let mut coeffs = BTreeMap::new();
    for (k, &c) in series.iter().enumerate() {
        if c < 0 {
            return Err(Error::Inconsistent(format!("negative exponent multiplicity in degree {k}")));
        }
        if c > 0 {
            coeffs.insert(k, c as u64);
        }
    }
    let e = ExponentPolynomial { lambda: l, coeffs };
    let ell = rs.freudenthal_mult(lambda, &Weight::zero(rs.rank()))?;
    if e.total() != ell {
        return Err(Error::Inconsistent(format!(
            "exponent count {} differs from the zero weight multiplicity {ell}",
            e.total()
        )));
    }
    if height > 0 && e.coeffs.get(&height) != Some(&1) {
        return Err(Error::Inconsistent("top exponent is not ht(lambda) with multiplicity 1".into()));
    }
    Ok(e)
}
