//! Divisor-decomposition certificates for spectral integrality.
//!
//! A connection set has an all-integer HS spectrum exactly when its
//! symmetric part is a union of whole gcd-orbits G_n(d) and its skew part
//! is a union of atoms G^r_{n,3}(d) (one class r per divisor, d dividing
//! n/3). The same certificate characterizes the adjacency spectrum lying
//! in the Eisenstein integers. `decompose_*` build the certificate or
//! return a witness-carrying refutation; `oracle_verdicts` answers the
//! same questions by brute-force eigenvalue classification.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::circulant::{adjacency_eigenvalue, hs_eigenvalue, ConnectionSet};
use crate::cyclotomic::CycloCache;
use crate::divisor_sets::{g3_set, g_set};
use crate::{gcd, lcm};

/// Why a set fails to decompose. Every variant carries the element or
/// divisor that breaks the required structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// Skew arcs exist but n is not a multiple of 3.
    SkewNeedsThirdRoots { witness: u64 },
    /// A skew element's gcd with n does not divide n/3.
    SkewDivisorNotThird { witness: u64, divisor: u64 },
    /// The orbit G_n(divisor) is only partially inside the symmetric part.
    MissingSymmetricMember { divisor: u64, missing: u64 },
    /// The atom G^class_{n,3}(divisor) is only partially inside the skew part.
    MissingSkewMember { divisor: u64, class: u8, missing: u64 },
    /// Both classes over one divisor appear, which no skew part may do.
    BothSkewClasses { divisor: u64 },
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::SkewNeedsThirdRoots { witness } => {
                write!(f, "skew element {witness} present but 3 does not divide n")
            }
            Refutation::SkewDivisorNotThird { witness, divisor } => {
                write!(f, "skew element {witness} has gcd {divisor} with n, which does not divide n/3")
            }
            Refutation::MissingSymmetricMember { divisor, missing } => {
                write!(f, "orbit of divisor {divisor} needs {missing} in the symmetric part")
            }
            Refutation::MissingSkewMember { divisor, class, missing } => {
                write!(f, "atom ({divisor}, class {class}) needs {missing} in the skew part")
            }
            Refutation::BothSkewClasses { divisor } => {
                write!(f, "both classes over divisor {divisor} appear in the skew part")
            }
        }
    }
}

/// A successful decomposition: the symmetric part as a union of G_n(d)
/// and the skew part as a union of G^r_{n,3}(d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityCertificate {
    n: u64,
    symmetric_divisors: Vec<u64>,
    skew_atoms: Vec<(u64, u8)>,
}

impl IntegralityCertificate {
    fn new(n: u64, symmetric_divisors: Vec<u64>, skew_atoms: Vec<(u64, u8)>) -> Self {
        // A divisor whose whole orbit is symmetric cannot also carry a
        // skew atom: the atom is a subset of the orbit and the two parts
        // are disjoint.
        for &(d, _) in &skew_atoms {
            assert!(
                !symmetric_divisors.contains(&d),
                "divisor {d} appears in both halves of a certificate"
            );
        }
        IntegralityCertificate { n, symmetric_divisors, skew_atoms }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn symmetric_divisors(&self) -> &[u64] {
        &self.symmetric_divisors
    }

    pub fn skew_atoms(&self) -> &[(u64, u8)] {
        &self.skew_atoms
    }

    /// Rebuild the symmetric part this certificate describes.
    pub fn expand_symmetric(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .symmetric_divisors
            .iter()
            .flat_map(|&d| g_set(self.n, d).expect("stored divisor divides n").into_members())
            .collect();
        out.sort_unstable();
        out
    }

    /// Rebuild the skew part this certificate describes.
    pub fn expand_skew(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .skew_atoms
            .iter()
            .flat_map(|&(d, r)| {
                g3_set(self.n, d, r as u64)
                    .expect("stored atom is valid")
                    .into_members()
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Rebuild the full connection set (symmetric and skew members).
    pub fn expand(&self) -> Vec<u64> {
        let mut out = self.expand_symmetric();
        out.extend(self.expand_skew());
        out.sort_unstable();
        out
    }
}

fn checked_part(n: u64, part: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = part.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &k in &sorted {
        assert!(k >= 1 && k < n, "part element {k} outside 1..{n}");
    }
    sorted
}

/// Express an inverse-closed part as a union of gcd-orbits G_n(d), or
/// point at the first orbit member it is missing.
pub fn decompose_symmetric(n: u64, part: &[u64]) -> Result<Vec<u64>, Refutation> {
    let part = checked_part(n, part);
    let divisors_used: BTreeSet<u64> = part.iter().map(|&k| gcd(k, n)).collect();
    for &d in &divisors_used {
        for member in g_set(n, d).expect("gcd divides n").iter() {
            if part.binary_search(&member).is_err() {
                return Err(Refutation::MissingSymmetricMember { divisor: d, missing: member });
            }
        }
    }
    Ok(divisors_used.into_iter().collect())
}

/// Express a skew part as a union of atoms G^r_{n,3}(d), or say why it
/// cannot be one.
pub fn decompose_skew(n: u64, part: &[u64]) -> Result<Vec<(u64, u8)>, Refutation> {
    let part = checked_part(n, part);
    if part.is_empty() {
        return Ok(Vec::new());
    }
    if n % 3 != 0 {
        return Err(Refutation::SkewNeedsThirdRoots { witness: part[0] });
    }
    let mut atoms: BTreeSet<(u64, u8)> = BTreeSet::new();
    for &k in &part {
        let d = gcd(k, n);
        if (n / d) % 3 != 0 {
            return Err(Refutation::SkewDivisorNotThird { witness: k, divisor: d });
        }
        // k/d is a unit mod n/d and 3 | n/d, so the class is 1 or 2.
        atoms.insert((d, ((k / d) % 3) as u8));
    }
    for &(d, r) in &atoms {
        if atoms.contains(&(d, 3 - r)) {
            return Err(Refutation::BothSkewClasses { divisor: d });
        }
        for member in g3_set(n, d, r as u64).expect("atom divisor checked").iter() {
            if part.binary_search(&member).is_err() {
                return Err(Refutation::MissingSkewMember { divisor: d, class: r, missing: member });
            }
        }
    }
    Ok(atoms.into_iter().collect())
}

/// Certificate that every HS eigenvalue is a rational integer, decided
/// purely from the set's divisor structure.
pub fn is_hs_integral(s: &ConnectionSet) -> Result<IntegralityCertificate, Refutation> {
    let symmetric = decompose_symmetric(s.n(), &s.symmetric_part())?;
    let skew = decompose_skew(s.n(), &s.skew_part())?;
    Ok(IntegralityCertificate::new(s.n(), symmetric, skew))
}

/// Certificate that every adjacency eigenvalue is an Eisenstein integer.
/// This holds for exactly the same sets as HS-integrality, so the
/// certificate is shared; `oracle_verdicts` checks the two properties
/// against their own spectra separately.
pub fn is_eisenstein_integral(s: &ConnectionSet) -> Result<IntegralityCertificate, Refutation> {
    is_hs_integral(s)
}

/// Brute-force verdicts straight from the spectra, with the first failing
/// eigenvalue index as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdicts {
    pub hs_integral: bool,
    pub hs_witness: Option<u64>,
    pub eisenstein_integral: bool,
    pub eisenstein_witness: Option<u64>,
}

pub fn oracle_verdicts(s: &ConnectionSet, cache: &mut CycloCache) -> OracleVerdicts {
    let mut verdicts = OracleVerdicts {
        hs_integral: true,
        hs_witness: None,
        eisenstein_integral: true,
        eisenstein_witness: None,
    };
    for j in 0..s.n() {
        if hs_eigenvalue(s, j).as_integer_with(cache).is_none() {
            verdicts.hs_integral = false;
            verdicts.hs_witness = Some(j);
            break;
        }
    }
    let big_n = lcm(s.n(), 3);
    for j in 0..s.n() {
        let lifted = adjacency_eigenvalue(s, j).lift(big_n).expect("lcm is a multiple");
        if lifted.as_eisenstein_with(cache).expect("modulus divisible by 3").is_none() {
            verdicts.eisenstein_integral = false;
            verdicts.eisenstein_witness = Some(j);
            break;
        }
    }
    verdicts
}
