use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::One;

use super::Irrep;
use crate::linalg::{format_q, SparseMatrix, SparseVec, Q};
use crate::rootsys::{reflect, RootSystem, Weight};
use crate::{Error, Result};

/// Constituents of `V_beta (x) V_gamma` with multiplicities, by reflecting
/// `gamma + mu + rho` into the dominant chamber for every weight `mu` of
/// `V_beta`.
pub fn tensor_decompose(rs: &RootSystem, beta: &Weight, gamma: &Weight) -> Result<BTreeMap<Vec<i64>, u64>> {
    let b = rs.dominant_integral(beta)?;
    let g = rs.dominant_integral(gamma)?;
    Ok(decompose_ints(rs, &b, &g))
}

pub(crate) fn decompose_ints(rs: &RootSystem, b: &[i64], g: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (mu, m) in rs.weight_table(b).all_weights(rs) {
        let mut v: Vec<i64> = mu.iter().zip(g).map(|(x, y)| x + y + 1).collect();
        if v.contains(&0) {
            continue;
        }
        let mut sign = 1;
        'walk: loop {
            match v.iter().position(|&x| x < 0) {
                None => break,
                Some(i) => {
                    reflect(rs.datum(), i, &mut v);
                    sign = -sign;
                    if v.contains(&0) {
                        sign = 0;
                        break 'walk;
                    }
                }
            }
        }
        if sign != 0 {
            let key: Vec<i64> = v.iter().map(|x| x - 1).collect();
            *acc.entry(key).or_insert(0) += sign * m as i64;
        }
    }
    acc.into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(k, m)| {
            debug_assert!(m > 0);
            (k, m as u64)
        })
        .collect()
}

/// `V_beta (x) V_gamma` with the Leibniz action and the quadratic Casimir.
#[derive(Debug)]
pub struct TensorModule {
    pub left: Irrep,
    pub right: Irrep,
    mats: Vec<SparseMatrix>,
    casimir: SparseMatrix,
    constituents: BTreeMap<Vec<i64>, u64>,
    projector: OnceLock<Result<SparseMatrix>>,
    top_value: Q,
    others: Vec<(Vec<i64>, Q)>,
}

impl TensorModule {
    pub fn new(rs: &RootSystem, left: Irrep, right: Irrep) -> TensorModule {
        let (i1, i2) = (SparseMatrix::identity(left.dim()), SparseMatrix::identity(right.dim()));
        let mats: Vec<SparseMatrix> = (0..rs.dim())
            .map(|a| {
                left.matrix(a)
                    .kron(&i2)
                    .add_scaled(&i1.kron(right.matrix(a)), &Q::one())
            })
            .collect();
        // C = sum_a pi(x_a) pi(x^a)
        let n = left.dim() * right.dim();
        let mut casimir = SparseMatrix::zeros(n, n);
        for (a, ma) in mats.iter().enumerate() {
            for (b, c) in rs.dual_basis(a) {
                casimir = casimir.add_scaled(&ma.mul(&mats[b]), &c);
            }
        }
        let constituents = decompose_ints(rs, left.highest(), right.highest());
        let top: Vec<i64> = left.highest().iter().zip(right.highest()).map(|(x, y)| x + y).collect();
        let top_value = casimir_value(rs, &top);
        let others = constituents
            .keys()
            .filter(|mu| **mu != top)
            .map(|mu| (mu.clone(), casimir_value(rs, mu)))
            .collect();
        TensorModule {
            left,
            right,
            mats,
            casimir,
            constituents,
            projector: OnceLock::new(),
            top_value,
            others,
        }
    }

    pub fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    pub fn matrix(&self, a: usize) -> &SparseMatrix {
        &self.mats[a]
    }

    pub fn casimir(&self) -> &SparseMatrix {
        &self.casimir
    }

    pub fn constituents(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.constituents
    }

    /// Casimir eigenvalue on the Cartan component.
    pub fn top_value(&self) -> &Q {
        &self.top_value
    }

    /// Distinct Casimir eigenvalues predicted by the constituents.
    pub fn predicted_values(&self) -> Vec<Q> {
        let mut v: Vec<Q> = self.others.iter().map(|(_, c)| c.clone()).collect();
        v.push(self.top_value.clone());
        v.sort();
        v.dedup();
        v
    }

    /// `u (x) w`.
    pub fn tensor(&self, u: &SparseVec, w: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in u.iter() {
            for (j, y) in w.iter() {
                out.add_entry(i * self.right.dim() + j, x * y);
            }
        }
        out
    }

    /// Spectral projector onto the Cartan component.
    pub fn cartan_projector(&self) -> Result<&SparseMatrix> {
        self.projector
            .get_or_init(|| {
                let n = self.dim();
                let mut p = SparseMatrix::identity(n);
                let mut seen: Vec<&Q> = Vec::new();
                for (mu, c) in &self.others {
                    if *c == self.top_value {
                        return Err(Error::CasimirCollision {
                            value: format_q(c),
                            other: format!("{mu:?}"),
                        });
                    }
                    if seen.contains(&c) {
                        continue;
                    }
                    seen.push(c);
                    // (C - c) / (c_top - c)
                    let factor = self
                        .casimir
                        .add_scaled(&SparseMatrix::identity(n), &-c.clone())
                        .scale(&(Q::one() / (&self.top_value - c)));
                    p = factor.mul(&p);
                }
                Ok(p)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `Gamma(v)`.
    pub fn cartan_project(&self, v: &SparseVec) -> Result<SparseVec> {
        if let Some((&i, _)) = v.0.last_key_value() {
            if i >= self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    got: i + 1,
                });
            }
        }
        Ok(self.cartan_projector()?.mul_vec(v))
    }
}

/// `(mu, mu + 2 rho)` in the form on `h*` dual to the Killing form.
pub fn casimir_value(rs: &RootSystem, mu: &[i64]) -> Q {
    let m2: Vec<i64> = mu.iter().map(|x| x + 2).collect();
    rs.killing_dual(mu, &m2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repbuild::build_irrep;
    use crate::rootsys::Family;

    #[test]
    fn clebsch_gordan() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let d = tensor_decompose(&rs, &rs.weight(&[1]), &rs.weight(&[1])).unwrap();
        assert_eq!(d, BTreeMap::from([(vec![0], 1), (vec![2], 1)]));
        let d = tensor_decompose(&rs, &rs.weight(&[3]), &rs.weight(&[2])).unwrap();
        assert_eq!(d, BTreeMap::from([(vec![1], 1), (vec![3], 1), (vec![5], 1)]));
    }

    #[test]
    fn a2_products() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let d = tensor_decompose(&rs, &rs.weight(&[1, 0]), &rs.weight(&[0, 1])).unwrap();
        assert_eq!(d, BTreeMap::from([(vec![0, 0], 1), (vec![1, 1], 1)]));
        let d = tensor_decompose(&rs, &rs.weight(&[1, 1]), &rs.weight(&[1, 1])).unwrap();
        assert_eq!(d[&vec![2, 2]], 1);
        assert_eq!(d[&vec![1, 1]], 2);
        let total: u64 = d.iter().map(|(mu, m)| m * rs.weyl_dimension_ints(mu)).sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn casimir_spectrum_and_projector() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let v = build_irrep(&rs, &rs.weight(&[1]), 64).unwrap();
        let t = TensorModule::new(&rs, v.clone(), v);
        for a in 0..rs.dim() {
            assert_eq!(t.casimir().commutator(t.matrix(a)), SparseMatrix::zeros(4, 4));
        }
        let p = t.cartan_projector().unwrap().clone();
        assert_eq!(p.mul(&p), p);
        assert_eq!(p.trace(), crate::linalg::q(3));
        let hw = t.tensor(&SparseVec::unit(0), &SparseVec::unit(0));
        assert_eq!(t.cartan_project(&hw).unwrap(), hw);
        // C v = c v on the top vector
        assert_eq!(t.casimir().mul_vec(&hw), hw.scale(t.top_value()));
    }
}
