//! The residue families that index integral circulant spectra.
//!
//! For d | n:
//! - `m_set`:  M_n(d)  = { dk : 1 <= dk <= n-1 }, the nonzero multiples of d.
//! - `g_set`:  G_n(d)  = { dk : gcd(dk, n) = d }, multiples of d "exactly".
//!
//! When 3 | n these refine by the residue of k mod 3 (`m3_set`, `g3_set`),
//! and when 6 | n by k mod 6 (`m6_set`, `g6_set`). `d3_list`/`d3r_list`/
//! `d6r_list` are the divisor lists D_{g,3}, D^r_{g,3}, D^r_{g,6} (divisors
//! of g in a residue class) driving the recursions elsewhere.

use alloc::vec::Vec;

use crate::{gcd, Error};

/// A set of residues modulo `n`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSet {
    n: u64,
    members: Vec<u64>,
}

impl ResidueSet {
    fn new(n: u64, mut members: Vec<u64>) -> Self {
        members.sort_unstable();
        members.dedup();
        debug_assert!(members.iter().all(|&k| k < n));
        ResidueSet { n, members }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn into_members(self) -> Vec<u64> {
        self.members
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

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }
}

/// Divisors of `g` restricted to a residue class, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    g: u64,
    members: Vec<u64>,
}

impl DivisorList {
    pub fn of(&self) -> u64 {
        self.g
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All divisors of n >= 1, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 undefined here");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn require_divisor(d: u64, n: u64) -> Result<(), Error> {
    if d == 0 || n % d != 0 {
        return Err(Error::NotDivisor { d, n });
    }
    Ok(())
}

fn require_multiple(n: u64, of: u64) -> Result<(), Error> {
    if n == 0 || n % of != 0 {
        return Err(Error::NotMultipleOf { n, of });
    }
    Ok(())
}

/// M_n(d): nonzero multiples of d below n. Empty when d = n.
pub fn m_set(n: u64, d: u64) -> Result<ResidueSet, Error> {
    require_divisor(d, n)?;
    let members = (1..n / d).map(|k| d * k).collect();
    Ok(ResidueSet::new(n, members))
}

/// G_n(d): k with gcd(k, n) = d (equivalently d * (units of Z_{n/d})).
pub fn g_set(n: u64, d: u64) -> Result<ResidueSet, Error> {
    require_divisor(d, n)?;
    let members = (1..n / d)
        .filter(|&k| gcd(k, n / d) == 1)
        .map(|k| d * k)
        .collect();
    Ok(ResidueSet::new(n, members))
}

/// M^r_{n,3}(d): { dk : 0 <= dk <= n-1, k = r (mod 3) }. Contains 0 exactly
/// when r = 0.
pub fn m3_set(n: u64, d: u64, r: u64) -> Result<ResidueSet, Error> {
    require_multiple(n, 3)?;
    require_divisor(d, n)?;
    if (n / d) % 3 != 0 {
        // d must divide n/3 for the class of k mod 3 to be meaningful
        return Err(Error::NotDivisor { d, n: n / 3 });
    }
    if r > 2 {
        return Err(Error::BadResidueClass { r, allowed: &[0, 1, 2] });
    }
    let members = (0..n / d).filter(|&k| k % 3 == r).map(|k| d * k).collect();
    Ok(ResidueSet::new(n, members))
}

/// G^r_{n,3}(d): the members of G_n(d) whose cofactor k/d lies in class r
/// mod 3. Empty for r = 0 (the cofactor is a unit mod n/d and 3 | n/d).
pub fn g3_set(n: u64, d: u64, r: u64) -> Result<ResidueSet, Error> {
    require_multiple(n, 3)?;
    require_divisor(d, n)?;
    if (n / d) % 3 != 0 {
        return Err(Error::NotDivisor { d, n: n / 3 });
    }
    if r > 2 {
        return Err(Error::BadResidueClass { r, allowed: &[0, 1, 2] });
    }
    let members = (1..n / d)
        .filter(|&k| gcd(k, n / d) == 1 && k % 3 == r)
        .map(|k| d * k)
        .collect();
    Ok(ResidueSet::new(n, members))
}

/// D_{g,3}: divisors of g not divisible by 3.
pub fn d3_list(g: u64) -> DivisorList {
    let members = divisors(g).into_iter().filter(|h| h % 3 != 0).collect();
    DivisorList { g, members }
}

/// D^r_{g,3}: divisors of g congruent to r mod 3, r in {1, 2}.
pub fn d3r_list(g: u64, r: u64) -> Result<DivisorList, Error> {
    if r != 1 && r != 2 {
        return Err(Error::BadResidueClass { r, allowed: &[1, 2] });
    }
    let members = divisors(g).into_iter().filter(|h| h % 3 == r).collect();
    Ok(DivisorList { g, members })
}

/// M^r_{n,6}(d): { dk : 0 <= dk <= n-1, k = r (mod 6) }, r in {1, 5}.
pub fn m6_set(n: u64, d: u64, r: u64) -> Result<ResidueSet, Error> {
    require_multiple(n, 6)?;
    require_divisor(d, n)?;
    if (n / d) % 6 != 0 {
        return Err(Error::NotDivisor { d, n: n / 6 });
    }
    if r != 1 && r != 5 {
        return Err(Error::BadResidueClass { r, allowed: &[1, 5] });
    }
    let members = (0..n / d).filter(|&k| k % 6 == r).map(|k| d * k).collect();
    Ok(ResidueSet::new(n, members))
}

/// G^r_{n,6}(d): members of G_n(d) with cofactor k/d = r (mod 6), r in {1, 5}.
pub fn g6_set(n: u64, d: u64, r: u64) -> Result<ResidueSet, Error> {
    require_multiple(n, 6)?;
    require_divisor(d, n)?;
    if (n / d) % 6 != 0 {
        return Err(Error::NotDivisor { d, n: n / 6 });
    }
    if r != 1 && r != 5 {
        return Err(Error::BadResidueClass { r, allowed: &[1, 5] });
    }
    let members = (1..n / d)
        .filter(|&k| gcd(k, n / d) == 1 && k % 6 == r)
        .map(|k| d * k)
        .collect();
    Ok(ResidueSet::new(n, members))
}

/// D^r_{g,6}: divisors of g congruent to r mod 6, r in {1, 5}.
pub fn d6r_list(g: u64, r: u64) -> Result<DivisorList, Error> {
    if r != 1 && r != 5 {
        return Err(Error::BadResidueClass { r, allowed: &[1, 5] });
    }
    let members = divisors(g).into_iter().filter(|h| h % 6 == r).collect();
    Ok(DivisorList { g, members })
}
