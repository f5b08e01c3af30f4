//! Exact spectral arithmetic for mixed circulant graphs on Z_n.
//!
//! A connection set S ⊆ Z_n \ {0} splits into a symmetric part (k and n-k both
//! present) and a skew part. The Hermitian adjacency matrix of the second kind
//! weights the skew arcs with primitive sixth roots of unity, so its
//! eigenvalues live in Z[w3] adjoined to the n-th roots of unity. Everything
//! here is computed exactly: eigenvalues are sums of roots of unity with
//! integer coefficients ([`cyclotomic::CycloSum`]), and "is this an integer /
//! an Eisenstein integer" is decided by polynomial reduction modulo the
//! cyclotomic polynomial, never by floating-point rounding.
//!
//! Modules:
//! - [`eisenstein`]: arbitrary-precision Eisenstein integers a + b·w3.
//! - [`cyclotomic`]: integer/Eisenstein polynomials, cyclotomic polynomials
//!   and their degree-φ(n)/2 split factors over Z[w3], and [`cyclotomic::CycloSum`].
//! - [`divisor_sets`]: the residue families M/G and their mod-3 / mod-6
//!   refinements that index integral spectra.
//! - [`circulant`]: connection sets, exact adjacency and HS eigenvalues,
//!   spectrum reports, and the alpha/beta eigenvalue decomposition.
//! - [`integrality`]: divisor-decomposition certificates deciding
//!   HS-integrality and Eisenstein-integrality, plus brute-force verdicts.
//! - [`arithmetic_sums`]: Ramanujan sums, the skew analogue T_n, and the
//!   Möbius-style closed forms for it.

#![no_std]

extern crate alloc;

pub mod arithmetic_sums;
pub mod circulant;
pub mod cyclotomic;
pub mod divisor_sets;
pub mod eisenstein;
mod error;
pub mod integrality;

pub use error::Error;

/// Greatest common divisor on u64 (gcd(0, n) = n).
pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Least common multiple, panicking on overflow (moduli here stay tiny).
pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Euler's totient by trial-division factoring; used for structural
/// assertions (degree checks). Cached variants live in `arithmetic_sums`.
pub(crate) fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}
