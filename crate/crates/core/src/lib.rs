//! Exact-arithmetic laboratory for 3-cosymplectic manifolds.
//!
//! The crate instantiates the flat local model of a 3-cosymplectic structure
//! on an orthonormal coframe of dimension `4n + 3` and checks, by exact
//! rational matrix computation, the operator identities that give the
//! horizontal cohomology its `so(4,1)` and quaternionic module structures.
//! It also carries the Betti-number arithmetic those structures imply, and
//! a cellular homology computation of the seven-dimensional twisted torus
//! quotient `M^7_f`, cross-checked against an invariant-cohomology oracle.
//!
//! Modules, bottom-up:
//!
//! - [`exterior`]: blades, multivectors, wedge, interior product, Hodge star, pairing.
//! - [`contact`]: the `φ*_α` action on the coframe, `Φ_α` and `Ξ_α`.
//! - [`operators`]: graded operators `l, λ, e, L, Λ, K, K_{α,s}, I, H` and the identity suite.
//! - [`so41`]: the matrix Lie algebra `so(4,1)` and the homomorphism check.
//! - [`betti`]: Betti sequence transforms, constraints, `S_k` ranks, Poincaré series.
//! - [`cw`]: the cube complex of `M^7_f`, Smith normal form, homology.
//! - [`cli`]: batch front end and report serialization.

pub mod betti;
pub mod cli;
pub mod contact;
pub mod cw;
pub mod exterior;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod so41;

mod error;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integral rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(12, 6), 924);
    }
}
