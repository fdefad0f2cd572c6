//! Exact computer algebra for the invariants of the nilradical of a Borel
//! subalgebra.
//!
//! Given a complex simple Lie algebra `g = n_- + h + n` (built from its Cartan
//! matrix), the crate constructs elements of `S(n)^n` from the matrix
//! coefficient `u -> v*(pi(u) v)` pairing the highest weight vector of an
//! irreducible module with its lowest weight dual vector. The leading
//! symbol at the *codegree* of that functional is the invariant; the naive
//! variant that pairs against every monomial of `S(n_-)` is also available,
//! together with the machinery needed to show that it fails to be invariant
//! outside type `A1`.
//!
//! Layout:
//!
//! * [`rootsys`] root systems, Chevalley structure constants, Killing form,
//!   Weyl group and weight multiplicities.
//! * [`repbuild`] explicit irreducible modules, tensor products and the
//!   projection onto the Cartan component.
//! * [`polyalg`] sparse polynomials in `S(g)`, the extended Killing pairing,
//!   directional derivatives, invariants and harmonicity.
//! * [`envelope`] the filtration probe, codegree, leading symbols and the
//!   symmetrization map applied through module actions.
//! * [`construct`] full pipelines with verification reports.
//!
//! All arithmetic is exact.

pub mod construct;
pub mod envelope;
mod error;
pub mod linalg;
pub mod polyalg;
pub mod repbuild;
pub mod rootsys;

pub use error::{Error, Result};
pub use linalg::Q;

/// Tunables shared by the pipelines.
#[derive(Clone, Debug)]
pub struct Config {
    /// Largest module dimension `build_irrep` will construct.
    pub size_cap: usize,
    /// Largest monomial degree accepted by `tau_apply`.
    pub tau_degree_bound: usize,
    /// Largest height accepted by `generalized_exponents`.
    pub exponent_height_bound: usize,
    /// Allow trace-power invariants whose symbolic expansion is expensive
    /// (the degree 6 generator of G2, anything above rank 3).
    pub expensive_invariants: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            size_cap: 512,
            tau_degree_bound: 10,
            exponent_height_bound: 12,
            expensive_invariants: false,
        }
    }
}
