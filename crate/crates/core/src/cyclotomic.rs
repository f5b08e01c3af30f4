//! Cyclotomic polynomials, their split factors over Z[w3], and exact sums of
//! roots of unity.
//!
//! The n-th cyclotomic polynomial comes from the classic exact-division
//! recursion Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d. When 3 | n it
//! factors over Z[w3] into two monic halves of degree phi(n)/2 whose roots
//! are the primitive n-th roots w_n^a with a = 1 resp. 2 (mod 3); these are
//! obtained by dividing x^{n/3} - w3 (resp. x^{n/3} - w3^2) by the already
//! known halves for proper divisors.
//!
//! [`CycloSum`] is the workhorse: a finite sum sum_t c_t * w_N^t with integer
//! coefficients. Whether such a sum *is* an integer (or an Eisenstein
//! integer) is decided exactly by reducing the corresponding polynomial mod
//! Phi_N and inspecting the remainder — floating point never participates in
//! these verdicts, it only produces the numeric shadow values for reports.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::divisor_sets::divisors;
use crate::eisenstein::EisensteinInt;
use crate::{totient, Error};

/// Dense integer polynomial, coefficients ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_coeffs([1])
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = IntPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    /// x^k
    pub fn monomial(k: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); k as usize + 1];
        coeffs[k as usize] = BigInt::from(1);
        IntPoly { coeffs }
    }

    /// x^n - 1
    pub fn x_pow_minus_one(n: u64) -> Self {
        assert!(n >= 1);
        let mut p = IntPoly::monomial(n);
        p.coeffs[0] = BigInt::from(-1);
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == BigInt::from(1))
    }

    /// The value of a constant (degree <= 0) polynomial, None otherwise.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut p = IntPoly { coeffs: out };
        p.trim();
        p
    }

    /// Remainder after division by a monic divisor.
    pub fn rem_monic(&self, divisor: &IntPoly) -> IntPoly {
        self.div_rem_monic(divisor).1
    }

    /// Division by a monic divisor: returns (quotient, remainder).
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "division requires a monic divisor");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (IntPoly::zero(), self.clone());
        }
        let mut work = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); work.len() - d];
        for i in (d..work.len()).rev() {
            let c = core::mem::take(&mut work[i]);
            if c.is_zero() {
                continue;
            }
            for (k, dc) in divisor.coeffs[..d].iter().enumerate() {
                if !dc.is_zero() {
                    work[i - d + k] -= &c * dc;
                }
            }
            quot[i - d] = c;
        }
        work.truncate(d);
        let mut q = IntPoly { coeffs: quot };
        q.trim();
        let mut r = IntPoly { coeffs: work };
        r.trim();
        (q, r)
    }

    /// Exact division; a nonzero remainder means a broken recursion upstream,
    /// so it panics rather than returning an error.
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem_monic(divisor);
        assert!(r.is_zero(), "inexact polynomial division (remainder {r})");
        q
    }
}

fn fmt_poly_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    negative: bool,
    mag: &str,
    power: usize,
    unit_mag: bool,
) -> fmt::Result {
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    match (power, unit_mag) {
        (0, _) => write!(f, "{mag}"),
        (1, true) => write!(f, "x"),
        (1, false) => write!(f, "{mag}*x"),
        (_, true) => write!(f, "x^{power}"),
        (_, false) => write!(f, "{mag}*x^{power}"),
    }
}

/// Renders like "x^4 - x^2 + 1", descending powers.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let unit = mag == BigInt::from(1);
            fmt_poly_term(f, first, c.is_negative(), &alloc::format!("{mag}"), power, unit)?;
            first = false;
        }
        Ok(())
    }
}

/// Polynomial over the Eisenstein integers, same conventions as [`IntPoly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisPoly {
    coeffs: Vec<EisensteinInt>,
}

impl EisPoly {
    pub fn zero() -> Self {
        EisPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        EisPoly { coeffs: vec![EisensteinInt::one()] }
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = EisensteinInt>) -> Self {
        let mut p = EisPoly { coeffs: coeffs.into_iter().collect() };
        p.trim();
        p
    }

    /// x^k - c
    pub fn x_pow_minus(k: u64, c: &EisensteinInt) -> Self {
        let mut coeffs = vec![EisensteinInt::zero(); k as usize + 1];
        coeffs[0] = -c;
        coeffs[k as usize] = EisensteinInt::one();
        EisPoly { coeffs }
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        EisPoly::from_coeffs(p.coeffs().iter().map(|c| EisensteinInt::new(c.clone(), 0)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(EisensteinInt::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[EisensteinInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == EisensteinInt::one())
    }

    pub fn mul(&self, rhs: &EisPoly) -> EisPoly {
        if self.is_zero() || rhs.is_zero() {
            return EisPoly::zero();
        }
        let mut out = vec![EisensteinInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        let mut p = EisPoly { coeffs: out };
        p.trim();
        p
    }

    pub fn div_rem_monic(&self, divisor: &EisPoly) -> (EisPoly, EisPoly) {
        assert!(divisor.is_monic(), "division requires a monic divisor");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (EisPoly::zero(), self.clone());
        }
        let mut work = self.coeffs.clone();
        let mut quot = vec![EisensteinInt::zero(); work.len() - d];
        for i in (d..work.len()).rev() {
            let c = core::mem::replace(&mut work[i], EisensteinInt::zero());
            if c.is_zero() {
                continue;
            }
            for (k, dc) in divisor.coeffs[..d].iter().enumerate() {
                if !dc.is_zero() {
                    work[i - d + k] = &work[i - d + k] - &(&c * dc);
                }
            }
            quot[i - d] = c;
        }
        work.truncate(d);
        let mut q = EisPoly { coeffs: quot };
        q.trim();
        let mut r = EisPoly { coeffs: work };
        r.trim();
        (q, r)
    }

    pub fn exact_div(&self, divisor: &EisPoly) -> EisPoly {
        let (q, r) = self.div_rem_monic(divisor);
        assert!(r.is_zero(), "inexact Eisenstein polynomial division");
        q
    }
}

impl fmt::Display for EisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_rational_integer() {
                let mag = c.a().abs();
                let unit = mag == BigInt::from(1);
                fmt_poly_term(
                    f,
                    first,
                    c.a().is_negative(),
                    &alloc::format!("{mag}"),
                    power,
                    unit,
                )?;
            } else {
                // Eisenstein coefficients are parenthesized, sign kept inside.
                fmt_poly_term(f, first, false, &alloc::format!("({c})"), power, false)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Memo for cyclotomic polynomials, their Z[w3] split halves, and the
/// remainders x^{N/3} mod Phi_N used by the Eisenstein extraction. Owned by
/// whoever drives a run; each worker thread keeps its own.
#[derive(Debug, Default)]
pub struct CycloCache {
    phi: BTreeMap<u64, IntPoly>,
    split: BTreeMap<u64, (EisPoly, EisPoly)>,
    x3rem: BTreeMap<u64, IntPoly>,
}

impl CycloCache {
    pub fn new() -> Self {
        CycloCache::default()
    }

    /// Phi_n, memoized.
    pub fn phi(&mut self, n: u64) -> &IntPoly {
        assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
        self.ensure_phi(n);
        &self.phi[&n]
    }

    fn ensure_phi(&mut self, n: u64) {
        if self.phi.contains_key(&n) {
            return;
        }
        let divs = divisors(n);
        let proper = &divs[..divs.len() - 1];
        for &d in proper {
            self.ensure_phi(d);
        }
        let mut denom = IntPoly::one();
        for &d in proper {
            denom = denom.mul(&self.phi[&d]);
        }
        let phi_n = IntPoly::x_pow_minus_one(n).exact_div(&denom);
        debug_assert!(phi_n.is_monic());
        debug_assert_eq!(Some(totient(n) as usize), phi_n.degree());
        self.phi.insert(n, phi_n);
    }

    /// The two monic split halves of Phi_n over Z[w3] (n = 0 mod 3): the
    /// first has roots w_n^a for a in G^1_{n,3}(1), the second for G^2.
    pub fn split(&mut self, n: u64) -> Result<&(EisPoly, EisPoly), Error> {
        if n == 0 || n % 3 != 0 {
            return Err(Error::NotMultipleOf { n, of: 3 });
        }
        self.ensure_split(n);
        Ok(&self.split[&n])
    }

    fn ensure_split(&mut self, n: u64) {
        if self.split.contains_key(&n) {
            return;
        }
        let w3 = EisensteinInt::omega3();
        let w3sq = EisensteinInt::new(-1, -1);
        if n == 3 {
            let f1 = EisPoly::x_pow_minus(1, &w3);
            let f2 = EisPoly::x_pow_minus(1, &w3sq);
            self.split.insert(3, (f1, f2));
            return;
        }
        // x^{n/3} - w3 = prod_{h in D^1_{n/3,3}} f1(n/h) * prod_{h in D^2} f2(n/h)
        // (and with the halves swapped for the w3^2 side); peel off every
        // factor except the h = 1 one to land on the halves for n itself.
        let g = n / 3;
        let class1: Vec<u64> = divisors(g).into_iter().filter(|&h| h > 1 && h % 3 == 1).collect();
        let class2: Vec<u64> = divisors(g).into_iter().filter(|&h| h % 3 == 2).collect();
        for &h in class1.iter().chain(&class2) {
            self.ensure_split(n / h);
        }
        let mut den1 = EisPoly::one();
        let mut den2 = EisPoly::one();
        for &h in &class1 {
            let (f1, f2) = &self.split[&(n / h)];
            den1 = den1.mul(f1);
            den2 = den2.mul(f2);
        }
        for &h in &class2 {
            let (f1, f2) = &self.split[&(n / h)];
            den1 = den1.mul(f2);
            den2 = den2.mul(f1);
        }
        let half1 = EisPoly::x_pow_minus(g, &w3).exact_div(&den1);
        let half2 = EisPoly::x_pow_minus(g, &w3sq).exact_div(&den2);
        let want = totient(n) as usize / 2;
        assert!(half1.is_monic() && half2.is_monic());
        assert_eq!(Some(want), half1.degree(), "split degree for n = {n}");
        assert_eq!(Some(want), half2.degree(), "split degree for n = {n}");
        self.split.insert(n, (half1, half2));
    }

    /// x^{N/3} mod Phi_N — the canonical residue representing w3 inside the
    /// N-th cyclotomic field (3 | N).
    fn x3_rem(&mut self, big_n: u64) -> IntPoly {
        assert!(big_n % 3 == 0);
        if let Some(r) = self.x3rem.get(&big_n) {
            return r.clone();
        }
        self.ensure_phi(big_n);
        let r = IntPoly::monomial(big_n / 3).rem_monic(&self.phi[&big_n]);
        self.x3rem.insert(big_n, r.clone());
        r
    }
}

/// An exact element sum_t c_t * w_N^t of the N-th cyclotomic field, with
/// integer coefficients keyed by exponent mod N (zero coefficients dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloSum {
    modulus: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

impl CycloSum {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "CycloSum modulus must be >= 1");
        CycloSum { modulus, coeffs: BTreeMap::new() }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Adds c * w_N^exp; exponents reduce mod N, negatives welcome.
    pub fn add_term(&mut self, exp: i64, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let e = exp.rem_euclid(self.modulus as i64) as u64;
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn add_sum(&mut self, other: &CycloSum) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        for (&e, c) in &other.coeffs {
            self.add_term(e as i64, c.clone());
        }
    }

    /// True when the sum has no terms (so its value is 0 on the nose).
    pub fn is_empty_sum(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Same value as an element of the larger field Q(w_m), modulus | m.
    pub fn lift(&self, m: u64) -> Result<CycloSum, Error> {
        if m == 0 || m % self.modulus != 0 {
            return Err(Error::NotDivisor { d: self.modulus, n: m });
        }
        let scale = m / self.modulus;
        let mut out = CycloSum::zero(m);
        for (&e, c) in &self.coeffs {
            out.add_term((e * scale) as i64, c.clone());
        }
        Ok(out)
    }

    /// Floating-point shadow of the exact value.
    pub fn numeric(&self) -> Complex64 {
        let n = self.modulus as f64;
        let tau = 2.0 * core::f64::consts::PI;
        let mut z = Complex64::new(0.0, 0.0);
        for (&e, c) in &self.coeffs {
            let c = c.to_f64().expect("coefficient exceeds f64 range");
            let angle = tau * (e as f64) / n;
            z += Complex64::new(c * libm::cos(angle), c * libm::sin(angle));
        }
        z
    }

    /// Structural reality test: c_t = c_{N-t} for every term, which forces
    /// the value to equal its own conjugate.
    pub fn is_conj_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, c)| {
            let mirror = (self.modulus - e) % self.modulus;
            self.coeffs.get(&mirror) == Some(c)
        })
    }

    /// The canonical representative: the sum's polynomial reduced mod Phi_N.
    /// Degree < phi(N); the value is determined by (and determines) it.
    pub fn reduced(&self, cache: &mut CycloCache) -> IntPoly {
        let dense = match self.coeffs.last_key_value() {
            None => return IntPoly::zero(),
            Some((&hi, _)) => {
                let mut v = vec![BigInt::zero(); hi as usize + 1];
                for (&e, c) in &self.coeffs {
                    v[e as usize] = c.clone();
                }
                IntPoly::from_coeffs(v)
            }
        };
        dense.rem_monic(cache.phi(self.modulus))
    }

    /// Some(m) exactly when the sum's value is the rational integer m.
    pub fn as_integer_with(&self, cache: &mut CycloCache) -> Option<BigInt> {
        self.reduced(cache).constant_value()
    }

    /// Exact test "value == m".
    pub fn is_integer_with(&self, cache: &mut CycloCache, m: &BigInt) -> bool {
        self.as_integer_with(cache).as_ref() == Some(m)
    }

    /// Some(p + q*w3) exactly when the value lies in Z[w3]; requires 3 | N so
    /// that w3 = w_N^{N/3} lives in the field at all.
    pub fn as_eisenstein_with(
        &self,
        cache: &mut CycloCache,
    ) -> Result<Option<EisensteinInt>, Error> {
        if self.modulus % 3 != 0 {
            return Err(Error::NotMultipleOf { n: self.modulus, of: 3 });
        }
        let r = self.reduced(cache);
        let s = cache.x3_rem(self.modulus);
        // Solve r = p + q*s over Z. s is never constant (w3 is irrational),
        // so q is pinned by the first index >= 1 where s has a coefficient.
        let pivot = s
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .expect("x^{N/3} mod Phi_N cannot be constant");
        let r_at = |i: usize| r.coeffs().get(i).cloned().unwrap_or_default();
        let (q, rem) = num_integer::Integer::div_rem(&r_at(pivot), &s.coeffs()[pivot]);
        if !rem.is_zero() {
            return Ok(None);
        }
        for i in 1..s.coeffs().len().max(r.coeffs().len()) {
            let s_i = s.coeffs().get(i).cloned().unwrap_or_default();
            if r_at(i) != &q * &s_i {
                return Ok(None);
            }
        }
        let p = r_at(0) - &q * &s.coeffs()[0];
        Ok(Some(EisensteinInt::new(p, q)))
    }

    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Compact form like "1+w12^4-2*w12^7" (ascending exponents, "0" if empty).
impl fmt::Display for CycloSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let n = self.modulus;
        let one = BigInt::from(1);
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag == one {
                write!(f, "w{n}^{e}")?;
            } else {
                write!(f, "{mag}*w{n}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Phi_n with a throwaway memo; long runs should hold a [`CycloCache`].
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    CycloCache::new().phi(n).clone()
}

/// Split halves of Phi_n over Z[w3]; errors unless 3 | n.
pub fn cyclotomic_split(n: u64) -> Result<(EisPoly, EisPoly), Error> {
    let mut cache = CycloCache::new();
    cache.split(n).cloned()
}

/// Exact test: does the sum equal the integer m?
pub fn cyclosum_is_integer(s: &CycloSum, m: &BigInt) -> bool {
    s.is_integer_with(&mut CycloCache::new(), m)
}

/// Exact Eisenstein extraction (None when the value is not in Z[w3]).
pub fn cyclosum_as_eisenstein(s: &CycloSum) -> Result<Option<EisensteinInt>, Error> {
    s.as_eisenstein_with(&mut CycloCache::new())
}
