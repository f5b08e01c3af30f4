//! Mixed circulant graphs Circ(Z_n, S) and their exact spectra.
//!
//! For j = 0..n-1 the adjacency eigenvalue is sum_{k in S} w_n^{jk}. The
//! HS-eigenvalue replaces each one-way arc contribution by
//! w6 * w_n^{jk} + w6^5 * w_n^{-jk}, where w6 = -w3^2; both come out as
//! [`CycloSum`]s over modulus lcm(n, 3) so integrality questions reduce to
//! exact polynomial arithmetic.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::cyclotomic::{CycloCache, CycloSum};
use crate::eisenstein::EisensteinInt;
use crate::{lcm, Error};

/// A connection set: residues of Z_n \ {0}, sorted, duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    n: u64,
    members: Vec<u64>,
}

impl ConnectionSet {
    pub fn new(n: u64, mut members: Vec<u64>) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::ModulusTooSmall { n });
        }
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateMember { k: pair[0] });
            }
        }
        for &k in &members {
            if k == 0 || k >= n {
                return Err(Error::MemberOutOfRange { k, n });
            }
        }
        Ok(ConnectionSet { n, members })
    }

    /// Bit i-1 of `mask` selects residue i. The fast path for exhaustive
    /// sweeps; masks address 1..n-1 so n must stay below 65.
    pub fn from_bitmask(n: u64, mask: u64) -> Self {
        debug_assert!(n >= 2 && n <= 64);
        debug_assert!(n == 64 || mask < (1u64 << (n - 1)));
        let members = (1..n).filter(|&k| mask >> (k - 1) & 1 == 1).collect();
        ConnectionSet { n, members }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    /// Members whose inverse is also present (the two-way edges).
    pub fn symmetric_part(&self) -> Vec<u64> {
        self.members
            .iter()
            .copied()
            .filter(|&k| self.contains(self.n - k))
            .collect()
    }

    /// Members whose inverse is absent (one-way arcs); disjoint from its own
    /// inverse set by construction.
    pub fn skew_part(&self) -> Vec<u64> {
        self.members
            .iter()
            .copied()
            .filter(|&k| !self.contains(self.n - k))
            .collect()
    }
}

/// Adjacency eigenvalue sum_{k in S} w_n^{jk}, exact, modulus n.
pub fn adjacency_eigenvalue(s: &ConnectionSet, j: u64) -> CycloSum {
    debug_assert!(j < s.n);
    let mut sum = CycloSum::zero(s.n);
    for &k in &s.members {
        sum.add_term((j * k) as i64, 1);
    }
    sum
}

/// HS-eigenvalue gamma_j = lambda_j + mu_j over modulus N = lcm(n, 3):
/// the symmetric part contributes w_n^{jk}; each skew arc contributes
/// w6 w_n^{jk} + w6^5 w_n^{-jk} with w6 = -w_N^{2N/3}, w6^5 = -w_N^{N/3}.
pub fn hs_eigenvalue(s: &ConnectionSet, j: u64) -> CycloSum {
    debug_assert!(j < s.n);
    let big_n = lcm(s.n, 3);
    let scale = (big_n / s.n) as i64;
    let third = (big_n / 3) as i64;
    let mut sum = CycloSum::zero(big_n);
    for &k in &s.members {
        let e = (j * k) as i64 * scale;
        if s.contains(s.n - k) {
            sum.add_term(e, 1);
        } else {
            sum.add_term(2 * third + e, -1);
            sum.add_term(third - e, -1);
        }
    }
    sum
}

/// Which matrix a spectrum report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    HermitianSecondKind,
}

/// Exact classification of one eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenvalueKind {
    Integer(BigInt),
    Eisenstein(EisensteinInt),
    NonIntegral,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueRecord {
    pub j: u64,
    pub exact: CycloSum,
    pub numeric: Complex64,
    pub kind: EigenvalueKind,
}

/// All n eigenvalues of one matrix, ordered by index j (not sorted) so the
/// report is reproducible bit-for-bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub n: u64,
    pub set: Vec<u64>,
    pub matrix: MatrixKind,
    pub entries: Vec<EigenvalueRecord>,
}

/// Integer first, then Eisenstein (testing inside Q(w_lcm(N,3))), else
/// non-integral. Every verdict is a polynomial-divisibility fact.
fn classify(sum: &CycloSum, cache: &mut CycloCache) -> EigenvalueKind {
    if let Some(m) = sum.as_integer_with(cache) {
        return EigenvalueKind::Integer(m);
    }
    let verdict = if sum.modulus() % 3 == 0 {
        sum.as_eisenstein_with(cache)
    } else {
        let lifted = sum.lift(lcm(sum.modulus(), 3)).expect("lcm is a multiple");
        lifted.as_eisenstein_with(cache)
    };
    match verdict.expect("modulus made divisible by 3 above") {
        Some(e) => EigenvalueKind::Eisenstein(e),
        None => EigenvalueKind::NonIntegral,
    }
}

fn spectrum(s: &ConnectionSet, matrix: MatrixKind, cache: &mut CycloCache) -> SpectrumReport {
    let entries = (0..s.n)
        .map(|j| {
            let exact = match matrix {
                MatrixKind::Adjacency => adjacency_eigenvalue(s, j),
                MatrixKind::HermitianSecondKind => hs_eigenvalue(s, j),
            };
            let numeric = exact.numeric();
            let kind = classify(&exact, cache);
            EigenvalueRecord { j, exact, numeric, kind }
        })
        .collect();
    SpectrumReport { n: s.n, set: s.members.clone(), matrix, entries }
}

pub fn hs_spectrum_with(s: &ConnectionSet, cache: &mut CycloCache) -> SpectrumReport {
    spectrum(s, MatrixKind::HermitianSecondKind, cache)
}

pub fn hs_spectrum(s: &ConnectionSet) -> SpectrumReport {
    hs_spectrum_with(s, &mut CycloCache::new())
}

pub fn adjacency_spectrum_with(s: &ConnectionSet, cache: &mut CycloCache) -> SpectrumReport {
    spectrum(s, MatrixKind::Adjacency, cache)
}

pub fn adjacency_spectrum(s: &ConnectionSet) -> SpectrumReport {
    adjacency_spectrum_with(s, &mut CycloCache::new())
}

/// A value known to be real: an exact CycloSum (structurally conjugate-
/// symmetric, which is checked at construction) over a small denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealCycloSum {
    sum: CycloSum,
    denom: u64,
}

impl RealCycloSum {
    fn new(sum: CycloSum, denom: u64) -> Self {
        // A failure here would falsify "alpha_j and beta_j are real".
        assert!(sum.is_conj_symmetric(), "sum is not structurally real");
        RealCycloSum { sum, denom }
    }

    pub fn exact_numerator(&self) -> &CycloSum {
        &self.sum
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn numeric(&self) -> f64 {
        let z = self.sum.numeric();
        debug_assert!(z.im.abs() < 1e-9);
        z.re / self.denom as f64
    }

    /// Exact rational value as (numerator, denominator) in lowest terms,
    /// None when the value is irrational. Sums of roots of unity are
    /// algebraic integers, so "rational" means the numerator sum is a plain
    /// integer — decided by cyclotomic reduction, not rounding.
    pub fn as_rational(&self, cache: &mut CycloCache) -> Option<(BigInt, u64)> {
        use num_integer::Integer;
        let num = self.sum.as_integer_with(cache)?;
        if self.denom == 1 {
            return Some((num, 1));
        }
        let g = num.gcd(&BigInt::from(self.denom));
        // g divides denom, so it fits in u64.
        let g_small: u64 = (&g).try_into().expect("gcd bounded by denominator");
        Some((num / g, self.denom / g_small.max(1)))
    }
}

/// The real decomposition of the adjacency eigenvalue:
/// alpha_j = sum over the symmetric part of w_n^{jk};
/// beta_j  = sum over the skew part of (w w_n^{jk} + conj(w) w_n^{-jk}) with
/// w = 1/2 - i sqrt(3)/6. Returned exactly; 6*beta has integer CycloSum form
/// via 6w = 3 - w3 + w3^2.
pub fn alpha_beta(s: &ConnectionSet, j: u64) -> (RealCycloSum, RealCycloSum) {
    debug_assert!(j < s.n);
    let big_n = lcm(s.n, 3);
    let scale = (big_n / s.n) as i64;
    let third = (big_n / 3) as i64;

    let mut alpha = CycloSum::zero(s.n);
    for k in s.symmetric_part() {
        alpha.add_term((j * k) as i64, 1);
    }

    let mut six_beta = CycloSum::zero(big_n);
    for k in s.skew_part() {
        let e = (j * k) as i64 * scale;
        // 6w * w_n^{jk}
        six_beta.add_term(e, 3);
        six_beta.add_term(third + e, -1);
        six_beta.add_term(2 * third + e, 1);
        // 6 conj(w) * w_n^{-jk}
        six_beta.add_term(-e, 3);
        six_beta.add_term(third - e, 1);
        six_beta.add_term(2 * third - e, -1);
    }

    (RealCycloSum::new(alpha, 1), RealCycloSum::new(six_beta, 6))
}
