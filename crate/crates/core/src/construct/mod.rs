//! End-to-end pipelines with verification reports: the codegree element,
//! the failure of the naive pairing element, the principal three-dimensional
//! subalgebra, generalized exponents and multiplicity inequalities.

mod exponents;

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::envelope::{
    codegree_with_levels, extract_fk, naive_pairing_element, tau_apply_poly, MatrixCoeffFunctional,
};
use crate::linalg::{format_q, solve, q, RowReducer, SparseVec, Q};
use crate::polyalg::{
    invariance_witness, is_harmonic, is_n_invariant_weight, standard_invariants, GPoly, TermRecord,
};
use crate::repbuild::{build_irrep, invariant_pairing_value, Irrep, TensorModule};
use crate::rootsys::{RootSystem, Weight};
use crate::{Config, Error, Result};

pub use exponents::{generalized_exponents, ExponentPolynomial};

/// `{h, e, e_-}` with `e = sum e_i`, `alpha_i(h) = 2` and
/// `e_- = sum c_i f_i`, as coordinates on the letter basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalSl2 {
    pub c: Vec<Q>,
    pub e: SparseVec,
    pub h: SparseVec,
    pub e_minus: SparseVec,
}

impl PrincipalSl2 {
    /// `e_-` as a linear polynomial.
    pub fn e_minus_poly(&self, nvars: usize) -> GPoly {
        let combo: Vec<(usize, Q)> = self.e_minus.iter().map(|(a, c)| (a, c.clone())).collect();
        GPoly::linear(nvars, &combo)
    }

    /// `nu(h)` for `nu` in fundamental coordinates.
    pub fn eval_h(&self, nu: &[i64]) -> Q {
        self.c.iter().zip(nu).map(|(c, &m)| c * q(m)).sum()
    }
}

/// Bracket of two elements of `g` in letter coordinates.
pub fn bracket_vec(rs: &RootSystem, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            for &(c, n) in rs.bracket(a, b) {
                out.add_entry(c, ca * cb * q(n));
            }
        }
    }
    out
}

pub fn principal_sl2(rs: &RootSystem) -> Result<PrincipalSl2> {
    let n = rs.rank();
    // alpha_j(h) = sum_i c_i a_ij = 2
    let at: Vec<Vec<Q>> = (0..n)
        .map(|j| (0..n).map(|i| q(rs.datum().entry(i, j))).collect())
        .collect();
    let c = solve(&at, &vec![q(2); n]).ok_or_else(|| Error::InvalidCartan("singular Cartan matrix".into()))?;
    let mut e = SparseVec::new();
    let mut h = SparseVec::new();
    let mut e_minus = SparseVec::new();
    for i in 0..n {
        e.add_entry(rs.simple_letter(i), Q::one());
        h.add_entry(rs.cartan_letter(i), c[i].clone());
        e_minus.add_entry(rs.simple_neg_letter(i), c[i].clone());
    }
    let s = PrincipalSl2 { c, e, h, e_minus };
    let he = bracket_vec(rs, &s.h, &s.e);
    let hf = bracket_vec(rs, &s.h, &s.e_minus);
    let ef = bracket_vec(rs, &s.e, &s.e_minus);
    if he != s.e.scale(&q(2)) || hf != s.e_minus.scale(&q(-2)) || ef != s.h {
        return Err(Error::Inconsistent("principal triple relations fail".into()));
    }
    Ok(s)
}

/// `(pi(tau(e_-^m)) v_nu, v_nu)` with `m = nu(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxPairing {
    pub m: usize,
    pub value: Q,
}

/// Requires `nu` self-dual; `m` is checked against `ht(2 nu)`.
pub fn max_exponent_pairing(rs: &RootSystem, nu: &Weight, cfg: &Config) -> Result<MaxPairing> {
    let v = build_irrep(rs, nu, cfg.size_cap)?;
    max_exponent_pairing_on(rs, &v)
}

pub fn max_exponent_pairing_on(rs: &RootSystem, v: &Irrep) -> Result<MaxPairing> {
    let s = principal_sl2(rs)?;
    let nu = rs.weight(v.highest());
    let mh = s.eval_h(v.highest());
    let two_nu = nu.scale(2);
    let Some(root) = two_nu.root_ints() else {
        return Err(Error::NotInRootLattice { weight: two_nu.to_string() });
    };
    let ht: i64 = root.iter().sum();
    if mh != q(ht) {
        return Err(Error::Inconsistent(format!("nu(h) = {mh} differs from ht(2 nu) = {ht}")));
    }
    let m = ht as usize;
    let p = s.e_minus_poly(rs.dim()).pow(m);
    let x = tau_apply_poly(v, &p, &v.hw_vector(), m)?;
    // tau(x^m) = x^m
    let mut direct = v.hw_vector();
    for _ in 0..m {
        let mut next = SparseVec::new();
        for (a, c) in s.e_minus.iter() {
            next.add_scaled(&v.matrix(a).mul_vec(&direct), c);
        }
        direct = next;
    }
    if x != direct {
        return Err(Error::Inconsistent("symmetrized power differs from the power".into()));
    }
    let value = invariant_pairing_value(rs, v, &x)?;
    if value.is_zero() {
        return Err(Error::VanishingPairing { weight: nu.to_string() });
    }
    Ok(MaxPairing { m, value })
}

/// The six flags certifying the codegree element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionChecks {
    pub weight_ok: bool,
    pub in_sn: bool,
    pub n_invariant: bool,
    pub harmonic: bool,
    pub k_equals_min_exponent: bool,
    pub fk_nonzero: bool,
}

impl ConstructionChecks {
    pub fn all(&self) -> bool {
        self.weight_ok && self.in_sn && self.n_invariant && self.harmonic && self.k_equals_min_exponent && self.fk_nonzero
    }

    fn failures(&self) -> Vec<String> {
        [
            ("weight_ok", self.weight_ok),
            ("in_sn", self.in_sn),
            ("n_invariant", self.n_invariant),
            ("harmonic", self.harmonic),
            ("k_equals_min_exponent", self.k_equals_min_exponent),
            ("fk_nonzero", self.fk_nonzero),
        ]
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n.to_string())
        .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub root_system: String,
    pub nu: Vec<i64>,
    /// `nu + nu*`, fundamental coordinates.
    pub lambda: Vec<i64>,
    /// `nu + nu*`, simple-root coordinates.
    pub lambda_root: Vec<i64>,
    pub k: usize,
    pub filtration_dims: Vec<usize>,
    pub exponents: ExponentPolynomial,
    pub fk: Vec<TermRecord>,
    pub checks: ConstructionChecks,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub element: GPoly,
}

impl ConstructionReport {
    pub fn ok(&self) -> bool {
        self.checks.all()
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        let c = &self.checks;
        let mut s = String::new();
        s += &format!("type {}\n", self.root_system);
        s += &format!("nu {}\n", join(&self.nu));
        s += &format!("lambda {} (roots {})\n", join(&self.lambda), join(&self.lambda_root));
        s += &format!("codegree {}\n", self.k);
        s += &format!("filtration {}\n", join(&self.filtration_dims));
        s += &format!("exponents {}\n", self.exponents.to_text());
        s += &format!("f_(k) {}\n", self.element.to_text(rs).trim_end().replace('\n', " + "));
        for (name, ok) in [
            ("weight_ok", c.weight_ok),
            ("in_sn", c.in_sn),
            ("n_invariant", c.n_invariant),
            ("harmonic", c.harmonic),
            ("k_equals_min_exponent", c.k_equals_min_exponent),
            ("fk_nonzero", c.fk_nonzero),
        ] {
            s += &format!("check {name} {ok}\n");
        }
        s
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Codegree `k` of `u -> v*(pi(u) v_nu)`, its leading symbol `f_(k)` and the
/// checks that it is a harmonic `n`-invariant in `S(n)` of weight
/// `nu + nu*` and degree `min m(nu + nu*)`.
pub fn codegree_element(rs: &RootSystem, nu: &Weight, cfg: &Config) -> Result<ConstructionReport> {
    let v = build_irrep(rs, nu, cfg.size_cap)?;
    codegree_element_on(rs, v, cfg)
}

pub fn codegree_element_on(rs: &RootSystem, v: Irrep, cfg: &Config) -> Result<ConstructionReport> {
    let nu = v.highest().to_vec();
    let f = MatrixCoeffFunctional::from_irrep(rs, v);
    let (k, filtration_dims) = codegree_with_levels(&f)?;
    let fk = extract_fk(rs, &f, k)?;
    let lambda_root = f.lambda().to_vec();
    let lambda_w = rs.weight_from_root(&lambda_root);
    let lambda = lambda_w.fund_ints().expect("integral");
    let exponents = generalized_exponents(rs, &lambda_w, cfg)?;
    let invariants = standard_invariants(rs, cfg)?;
    let checks = ConstructionChecks {
        weight_ok: fk.weight(rs).as_ref() == Some(&lambda_root),
        in_sn: fk.in_positive_part(rs),
        n_invariant: is_n_invariant_weight(rs, &fk, &lambda_w),
        harmonic: is_harmonic(rs, &fk, &invariants),
        k_equals_min_exponent: exponents.min_degree() == Some(k) && fk.degrees() == BTreeSet::from([k]),
        fk_nonzero: !fk.is_zero(),
    };
    let failures = checks.failures();
    if !failures.is_empty() {
        log::warn!("{} nu={:?}: failed {:?}", rs.name(), nu, failures);
    }
    Ok(ConstructionReport {
        root_system: rs.name(),
        nu,
        lambda,
        lambda_root,
        k,
        filtration_dims,
        exponents,
        fk: fk.to_records(rs),
        checks,
        failures,
        element: fk,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleChecks {
    /// `l(2 nu) > 1`.
    pub ell_gt_one: bool,
    /// At least two degrees, the top one `ht(2 nu)`.
    pub inhomogeneous: bool,
    pub witness_found: bool,
}

impl CounterexampleChecks {
    pub fn all(&self) -> bool {
        self.ell_gt_one && self.inhomogeneous && self.witness_found
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub root_system: String,
    pub xi: Vec<i64>,
    /// Largest weight multiplicity of `V_xi`.
    pub d: u64,
    /// `xi + xi*`.
    pub nu: Vec<i64>,
    /// `2 nu`, fundamental coordinates.
    pub lambda: Vec<i64>,
    /// `l(lambda) = dim V_lambda(0)`.
    pub ell: u64,
    pub exponents: Option<ExponentPolynomial>,
    pub degrees_present: Vec<usize>,
    pub top_degree: usize,
    pub max_pairing: String,
    pub invariance_witness: Option<usize>,
    pub checks: CounterexampleChecks,
    pub f_nu: Vec<TermRecord>,
    #[serde(skip)]
    pub element: GPoly,
}

impl CounterexampleReport {
    pub fn ok(&self) -> bool {
        self.checks.all()
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        let mut s = String::new();
        s += &format!("type {}\n", self.root_system);
        s += &format!("xi {}\n", join(&self.xi));
        s += &format!("d {}\n", self.d);
        s += &format!("nu {}\n", join(&self.nu));
        s += &format!("lambda {}\n", join(&self.lambda));
        s += &format!("ell {}\n", self.ell);
        if let Some(e) = &self.exponents {
            s += &format!("exponents {}\n", e.to_text());
        }
        s += &format!("degrees {}\n", join(&self.degrees_present));
        s += &format!("top_degree {}\n", self.top_degree);
        s += &format!("max_pairing {}\n", self.max_pairing);
        match self.invariance_witness {
            Some(i) => s += &format!("witness ad e_{} f_nu != 0\n", i + 1),
            None => s += "witness none\n",
        }
        s += &format!("f_nu {}\n", self.element.to_text(rs).trim_end().replace('\n', " + "));
        s += &format!("check ell_gt_one {}\n", self.checks.ell_gt_one);
        s += &format!("check inhomogeneous {}\n", self.checks.inhomogeneous);
        s += &format!("check witness_found {}\n", self.checks.witness_found);
        s
    }
}

/// Shows that the element of `S(n)` pairing like `v_nu*(pi(tau(.)) v_nu)`
/// against all of `S(n_-)` is neither homogeneous nor `n`-invariant when
/// `V_xi` has a weight of multiplicity `d > 1`.
pub fn counterexample_check(rs: &RootSystem, xi: &Weight, cfg: &Config) -> Result<CounterexampleReport> {
    let x = rs.dominant_integral(xi)?;
    let d = rs.max_weight_multiplicity(xi)?;
    if d == 1 {
        return Err(Error::NoCounterexample { weight: xi.to_string() });
    }
    let np = naive_pairing_element(rs, xi, cfg)?;
    let nu_w = rs.weight(&np.nu);
    let lambda_w = nu_w.scale(2);
    let lambda = lambda_w.fund_ints().expect("integral");
    let top_degree = lambda_w.root_ints().expect("root lattice").iter().sum::<i64>() as usize;
    let ell = rs.freudenthal_mult(&lambda_w, &Weight::zero(rs.rank()))?;
    let exponents = match generalized_exponents(rs, &lambda_w, cfg) {
        Ok(e) => Some(e),
        Err(Error::HeightBound { .. }) => None,
        Err(e) => return Err(e),
    };
    let pairing = max_exponent_pairing(rs, &nu_w, cfg)?;
    let degrees: Vec<usize> = np.element.degrees().into_iter().collect();
    let witness = invariance_witness(rs, &np.element);
    let checks = CounterexampleChecks {
        ell_gt_one: ell > 1,
        inhomogeneous: degrees.len() >= 2 && degrees.last() == Some(&top_degree),
        witness_found: witness.is_some(),
    };
    Ok(CounterexampleReport {
        root_system: rs.name(),
        xi: x,
        d,
        nu: np.nu.clone(),
        lambda,
        ell,
        exponents,
        degrees_present: degrees,
        top_degree,
        max_pairing: format_q(&pairing.value),
        invariance_witness: witness,
        checks,
        f_nu: np.element.to_records(rs),
        element: np.element,
    })
}

/// One `(beta, gamma)` case of the multiplicity inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCase {
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
    pub weights_checked: usize,
    /// Weights `mu` with `dim V_{beta+gamma}(mu) < dim V_beta(mu)`.
    pub violations: Vec<Vec<i64>>,
    /// Largest weight multiplicity of `V_beta`.
    pub d: u64,
    /// `dim V_{beta+beta*}(0)`.
    pub zero_dim: u64,
}

impl InequalityCase {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.zero_dim >= self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub root_system: String,
    pub cases: Vec<InequalityCase>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.cases.iter().all(|c| c.holds())
    }
}

/// `dim V_{beta+gamma}(mu) >= dim V_beta(mu)` for every weight of `V_beta`,
/// and `dim V_{beta+beta*}(0) >= d(beta)`, from multiplicity tables alone.
pub fn multiplicity_inequality_battery(rs: &RootSystem, pairs: &[(Weight, Weight)]) -> Result<InequalityReport> {
    let mut cases = Vec::new();
    for (beta, gamma) in pairs {
        let b = rs.dominant_integral(beta)?;
        let g = rs.dominant_integral(gamma)?;
        if !gamma.in_root_lattice() {
            return Err(Error::NotInRootLattice { weight: gamma.to_string() });
        }
        let sum: Vec<i64> = b.iter().zip(&g).map(|(x, y)| x + y).collect();
        let tb = rs.weight_table(&b);
        let ts = rs.weight_table(&sum);
        let weights = tb.all_weights(rs);
        let violations = weights
            .iter()
            .filter(|(mu, &m)| ts.mult(rs, mu) < m)
            .map(|(mu, _)| mu.clone())
            .collect();
        let self_dual: Vec<i64> = b.iter().zip(rs.dual_ints(&b)).map(|(x, y)| x + y).collect();
        let zero_dim = rs.weight_table(&self_dual).mult(rs, &vec![0; rs.rank()]);
        cases.push(InequalityCase {
            beta: b,
            gamma: g,
            weights_checked: weights.len(),
            violations,
            d: tb.max_multiplicity(),
            zero_dim,
        });
    }
    Ok(InequalityReport {
        root_system: rs.name(),
        cases,
    })
}

/// Nonvanishing of the Cartan product projection on a grid of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanGridReport {
    pub root_system: String,
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
    pub pairs_checked: usize,
    pub vanishing_pairs: usize,
    /// `x -> Gamma(x (x) w)` injective on `V_beta(0)` for each grid `w`.
    pub zero_weight_injective: Option<bool>,
}

impl CartanGridReport {
    pub fn ok(&self) -> bool {
        self.vanishing_pairs == 0 && self.zero_weight_injective != Some(false)
    }
}

/// Basis vectors plus a few dense integer combinations.
fn grid(dim: usize) -> Vec<SparseVec> {
    let mut out: Vec<SparseVec> = (0..dim).map(SparseVec::unit).collect();
    for s in 1..=3i64 {
        let mut v = SparseVec::new();
        for i in 0..dim {
            let c = (i as i64 * s + 3 * s) % 5 - 2;
            if c != 0 {
                v.add_entry(i, q(c));
            }
        }
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

pub fn cartan_product_grid(rs: &RootSystem, beta: &Weight, gamma: &Weight, cfg: &Config) -> Result<CartanGridReport> {
    let left = build_irrep(rs, beta, cfg.size_cap)?;
    let right = build_irrep(rs, gamma, cfg.size_cap)?;
    let t = TensorModule::new(rs, left, right);
    let gu = grid(t.left.dim());
    let gw = grid(t.right.dim());
    let mut vanishing = 0;
    for u in &gu {
        for w in &gw {
            if t.cartan_project(&t.tensor(u, w))?.is_zero() {
                vanishing += 1;
            }
        }
    }
    let zero = vec![0; rs.rank()];
    let zr = t.left.weight_space(&zero);
    let injective = if zr.is_empty() {
        None
    } else {
        let mut ok = true;
        for w in &gw {
            let mut red = RowReducer::new(t.dim());
            for i in zr.clone() {
                let y = t.cartan_project(&t.tensor(&SparseVec::unit(i), w))?;
                red.insert(&y.to_dense(t.dim()));
            }
            ok &= red.rank() == zr.len();
        }
        Some(ok)
    };
    Ok(CartanGridReport {
        root_system: rs.name(),
        beta: t.left.highest().to_vec(),
        gamma: t.right.highest().to_vec(),
        pairs_checked: gu.len() * gw.len(),
        vanishing_pairs: vanishing,
        zero_weight_injective: injective,
    })
}

/// The default battery of highest weights `nu` for the codegree element:
/// `omega, alpha, 3 omega` in A1, `theta, omega_1, omega_2, 2 theta` in A2
/// and the highest root of B2.
pub fn default_battery() -> Result<Vec<(RootSystem, Weight)>> {
    use crate::rootsys::Family::*;
    let a1 = RootSystem::new(A, 1)?;
    let a2 = RootSystem::new(A, 2)?;
    let b2 = RootSystem::new(B, 2)?;
    let mut out = Vec::new();
    for m in [1, 2, 3] {
        out.push((a1.clone(), a1.weight(&[m])));
    }
    for w in [[1, 1], [1, 0], [0, 1], [2, 2]] {
        out.push((a2.clone(), a2.weight(&w)));
    }
    let theta = b2.highest_root();
    out.push((b2, theta));
    Ok(out)
}

#[cfg(test)]
mod tests;
