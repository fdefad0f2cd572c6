use super::{ad_action, GPoly, Monomial};
use crate::linalg::{Insertion, RowReducer, Q};
use crate::repbuild::{build_irrep, Irrep};
use crate::rootsys::{Family, RootSystem};
use crate::{Config, Error, Result};

/// Basic invariants `p_1..p_l` of `S(g)^G`.
#[derive(Clone, Debug)]
pub struct InvariantSet {
    generators: Vec<GPoly>,
    degrees: Vec<usize>,
}

impl InvariantSet {
    pub fn generators(&self) -> &[GPoly] {
        &self.generators
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Generator of degree `d`, if any.
    pub fn of_degree(&self, d: usize) -> Option<&GPoly> {
        self.degrees.iter().position(|&x| x == d).map(|i| &self.generators[i])
    }
}

/// Highest weight of the module whose trace powers give the invariants.
pub fn defining_weight(rs: &RootSystem) -> Result<Vec<i64>> {
    let n = rs.rank();
    let mut w = vec![0; n];
    match rs.datum().family() {
        Family::A | Family::C | Family::G => w[0] = 1,
        // the 4-dimensional spin module of B2 (= C2); the vector module above
        Family::B if n == 2 => w[1] = 1,
        Family::B => w[0] = 1,
        Family::D => {
            return Err(Error::Unsupported(format!(
                "trace-power invariants for {} (a Pfaffian generator is needed)",
                rs.name()
            )))
        }
        Family::E => w[0] = 1,
        Family::F => w[3] = 1,
    }
    Ok(w)
}

/// Invariants from the smallest faithful module of `rs`.
pub fn standard_invariants(rs: &RootSystem, cfg: &Config) -> Result<InvariantSet> {
    let w = defining_weight(rs)?;
    let v = build_irrep(rs, &rs.weight(&w), cfg.size_cap)?;
    invariant_generators(rs, &v, cfg)
}

/// Trace powers `tr(pi(y)^m)` with the coordinates of `y` replaced by the
/// Killing-dual basis, one per invariant degree. Each must be independent of
/// the products of the lower ones.
pub fn invariant_generators(rs: &RootSystem, v_def: &Irrep, cfg: &Config) -> Result<InvariantSet> {
    let degrees = rs.invariant_degrees().to_vec();
    let heavy = rs.rank() > 3 || matches!(rs.datum().family(), Family::E | Family::F);
    let top = *degrees.iter().max().unwrap();
    if !cfg.expensive_invariants && (heavy || top > 4) {
        return Err(Error::ExpensiveInvariants(rs.name()));
    }
    let nv = rs.dim();
    let d = v_def.dim();
    // generic matrix M = sum_a x^a pi(x_a)
    let mut generic = vec![vec![GPoly::zero(nv); d]; d];
    for a in 0..nv {
        let dual = GPoly::linear(nv, &rs.dual_basis(a));
        for (r, c, x) in v_def.matrix(a).triplets() {
            generic[r][c].add_scaled(&dual, &x);
        }
    }

    let mut generators: Vec<GPoly> = Vec::new();
    let mut power = generic.clone();
    let mut m = 1;
    for &deg in &degrees {
        while m + 1 < deg {
            power = mat_mul(&power, &generic);
            m += 1;
        }
        // tr(M^{deg-1} M)
        let mut p = GPoly::zero(nv);
        for r in 0..d {
            for k in 0..d {
                if power[r][k].is_zero() || generic[k][r].is_zero() {
                    continue;
                }
                p = p.add(&power[r][k].mul(&generic[k][r]));
            }
        }
        if p.is_zero() || !independent(&p, &generators, deg) {
            return Err(Error::DegenerateInvariant { degree: deg });
        }
        for a in 0..nv {
            if !ad_action(rs, a, &p).is_zero() {
                return Err(Error::Inconsistent(format!("trace power of degree {deg} is not invariant")));
            }
        }
        generators.push(p);
    }
    Ok(InvariantSet { generators, degrees })
}

fn mat_mul(a: &[Vec<GPoly>], b: &[Vec<GPoly>]) -> Vec<Vec<GPoly>> {
    let d = a.len();
    let nv = a[0][0].nvars();
    let mut out = vec![vec![GPoly::zero(nv); d]; d];
    for r in 0..d {
        for k in 0..d {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..d {
                if !b[k][c].is_zero() {
                    out[r][c] = out[r][c].add(&a[r][k].mul(&b[k][c]));
                }
            }
        }
    }
    out
}

/// `p` is not a linear combination of products of `lower` of degree `deg`.
fn independent(p: &GPoly, lower: &[GPoly], deg: usize) -> bool {
    let mut products = Vec::new();
    let degs: Vec<usize> = lower.iter().map(|g| *g.degrees().iter().next().unwrap()).collect();
    collect_products(lower, &degs, 0, deg, GPoly::constant(p.nvars(), Q::from_integer(1.into())), &mut products);
    if products.is_empty() {
        return true;
    }
    let mut monos: Vec<&Monomial> = p.terms().keys().collect();
    for g in &products {
        monos.extend(g.terms().keys());
    }
    monos.sort();
    monos.dedup();
    let row = |g: &GPoly| -> Vec<Q> { monos.iter().map(|m| g.coeff(m)).collect() };
    let mut red = RowReducer::new(monos.len());
    for g in &products {
        red.insert(&row(g));
    }
    matches!(red.insert(&row(p)), Insertion::New(_))
}

fn collect_products(lower: &[GPoly], degs: &[usize], start: usize, left: usize, acc: GPoly, out: &mut Vec<GPoly>) {
    if left == 0 {
        out.push(acc);
        return;
    }
    for i in start..lower.len() {
        if degs[i] <= left {
            collect_products(lower, degs, i, left - degs[i], acc.mul(&lower[i]), out);
        }
    }
}
