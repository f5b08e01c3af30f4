//! Ramanujan sums and their twisted third-root relatives.
//!
//! `ramanujan_c` is the classical C_n(q). For 3 | n the twisted sum
//! T_n(j) = sum over q coprime to n of i*sqrt(3) * chi(q) * w_n^{jq}
//! (chi the nontrivial character mod 3) is computed four ways that must
//! agree: from its definition (`t_sum_direct`), from the half-sum identity
//! T = 2 Z^1 + C (`t_sum`), from a Ramanujan-sum bridge at n/3 (`t_via_c`),
//! and — on restricted domains — from Mobius-weighted divisor sums
//! (`t_via_mobius_odd` / `t_via_mobius_even`).

use alloc::vec::Vec;

use crate::cyclotomic::{CycloCache, CycloSum};
use crate::divisor_sets::{d3r_list, d6r_list, divisors, g3_set};
use crate::{gcd, totient, Error};

/// Classical Mobius function.
pub fn mobius(n: u64) -> i8 {
    debug_assert!(n >= 1);
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Mobius relative to the divisor lattice with powers of two factored out:
/// zero on even arguments, the ordinary Mobius function on odd ones.
pub fn mobius_p(n: u64) -> i8 {
    debug_assert!(n >= 1);
    if n % 2 == 0 {
        0
    } else {
        mobius(n)
    }
}

/// Defining sum for [`mobius_p`]: sum of mu(n/d) over divisors d of n that
/// are powers of two. Slow; kept as the oracle the closed form is checked
/// against.
pub fn mobius_p_via_sum(n: u64) -> i64 {
    debug_assert!(n >= 1);
    let mut total = 0i64;
    let mut d = 1u64;
    while n % d == 0 {
        total += mobius(n / d) as i64;
        match d.checked_mul(2) {
            Some(next) => d = next,
            None => break,
        }
    }
    total
}

fn factorize(n: u64) -> Vec<(u64, u32)> {
    debug_assert!(n >= 1);
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut a = 0u32;
            while m % p == 0 {
                a += 1;
                m /= p;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Hoelder's closed form mu(core) * phi(n) / phi(core) with core = n/gcd(n,q),
/// evaluated prime by prime so no fractional intermediate appears. The factor
/// list is taken as an argument so bulk evaluations factorize n only once.
fn c_from_factors(factors: &[(u64, u32)], n: u64, q: u64) -> i64 {
    let delta = gcd(n, q);
    let core = n / delta;
    let mut value = 1i64;
    for &(p, a) in factors {
        // exponent of p in core; mu(core) = 0 as soon as it reaches 2
        let mut b = 0u32;
        let mut c = core;
        while c % p == 0 {
            b += 1;
            c /= p;
        }
        if b >= 2 {
            return 0;
        }
        for _ in 1..a {
            value *= p as i64;
        }
        if b == 1 {
            value = -value;
        } else {
            value *= (p - 1) as i64;
        }
    }
    value
}

/// Ramanujan sum C_n(q) = sum of w_n^{aq} over a coprime to n.
pub fn ramanujan_c(n: u64, q: u64) -> i64 {
    debug_assert!(n >= 1);
    c_from_factors(&factorize(n), n, q)
}

fn require_multiple(n: u64, of: u64) -> Result<(), Error> {
    if n == 0 || n % of != 0 {
        Err(Error::NotMultipleOf { n, of })
    } else {
        Ok(())
    }
}

/// Exact value of a root-of-unity sum known (structurally) to be rational:
/// the trace of w_n^e is C_n(e), so a rational sum equals
/// sum(c_e * C_n(e)) / phi(n). Divisibility is asserted — a failure means
/// the caller's rationality argument is wrong, not bad input.
fn rational_sum_via_trace<I: Iterator<Item = (u64, i64)>>(n: u64, terms: I) -> i64 {
    let factors = factorize(n);
    let mut tr = 0i128;
    for (e, c) in terms {
        tr += c as i128 * c_from_factors(&factors, n, e) as i128;
    }
    let phi = totient(n) as i128;
    assert_eq!(0, tr % phi, "trace not divisible by phi({n}): sum is irrational");
    i64::try_from(tr / phi).expect("value fits i64")
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Half Ramanujan sum Z^r_n(j) = sum over q in G^r_{n,3}(1) of
/// w_3 w_n^{jq} + w_3^2 w_n^{-jq}, i.e. exponents n/3 + jq and 2n/3 - jq.
/// Rational because conjugation-symmetric and invariant under every Galois
/// map x -> x^b with b = 1 mod 3 (those send n/3 + jq to n/3 + j(bq) and
/// permute G^r), so it lies in the real subfield of Q(sqrt(-3)); being an
/// algebraic integer it is a plain integer.
pub fn z_sum(n: u64, j: u64, r: u64) -> Result<i64, Error> {
    require_multiple(n, 3)?;
    if r != 1 && r != 2 {
        return Err(Error::BadResidueClass { r, allowed: &[1, 2] });
    }
    let third = n / 3;
    let class = g3_set(n, 1, r).expect("1 divides n/3");
    Ok(rational_sum_via_trace(
        n,
        class.iter().flat_map(|q| {
            let e = mul_mod(q, j % n, n);
            [((third + e) % n, 1i64), ((2 * third + (n - e) % n) % n, 1i64)]
        }),
    ))
}

/// T_n(j) through the half-sum identity T = 2 Z^1 + C.
pub fn t_sum(n: u64, j: u64) -> Result<i64, Error> {
    let z = z_sum(n, j, 1)?;
    Ok(2 * z + ramanujan_c(n, j))
}

/// T_n(j) straight from the definition, with the value extracted by full
/// cyclotomic reduction. Slow and independent of the trace shortcut; this
/// is the oracle the fast paths are checked against.
pub fn t_sum_direct_with(n: u64, j: u64, cache: &mut CycloCache) -> Result<i64, Error> {
    require_multiple(n, 3)?;
    let third = (n / 3) as i64;
    let mut sum = CycloSum::zero(n);
    for a in g3_set(n, 1, 1).expect("1 divides n/3").iter() {
        let e = mul_mod(a, j % n, n) as i64;
        sum.add_term(third + e, 1);
        sum.add_term(2 * third + e, -1);
        sum.add_term(third - e, -1);
        sum.add_term(2 * third - e, 1);
    }
    let value = sum
        .as_integer_with(cache)
        .expect("twisted Ramanujan sum reduced to a non-integer");
    Ok(i64::try_from(&value).expect("value fits i64"))
}

pub fn t_sum_direct(n: u64, j: u64) -> Result<i64, Error> {
    t_sum_direct_with(n, j, &mut CycloCache::new())
}

/// T_n(j) from Ramanujan sums one level down, n = 3^t m with 3 not
/// dividing m. For t = 1 the bridge factor depends only on j mod 3; for
/// t >= 2 it is i*sqrt(3) * (z - conj z) for a three-term z, extracted by
/// exact reduction (the factor can be irrational when C_{n/3}(j) = 0, so
/// that case returns 0 before touching it).
pub fn t_via_c_with(n: u64, j: u64, cache: &mut CycloCache) -> Result<i64, Error> {
    require_multiple(n, 3)?;
    let mut t = 0u32;
    let mut m = n;
    while m % 3 == 0 {
        t += 1;
        m /= 3;
    }
    let c = ramanujan_c(n / 3, j);
    if t == 1 {
        let table = if m % 3 == 1 { [0i64, -3, 3] } else { [0i64, 3, -3] };
        return Ok(table[(j % 3) as usize] * c);
    }
    if c == 0 {
        return Ok(0);
    }
    let cs: [u64; 3] = if m % 3 == 1 { [1, 4, 7] } else { [2, 5, 8] };
    let third = (n / 3) as i64;
    let mut sum = CycloSum::zero(n);
    for cc in cs {
        let e = mul_mod(mul_mod(cc, m, n), j % n, n) as i64;
        sum.add_term(third + e, 1);
        sum.add_term(2 * third + e, -1);
        sum.add_term(third - e, -1);
        sum.add_term(2 * third - e, 1);
    }
    let factor = sum
        .as_integer_with(cache)
        .expect("bridge factor must be an integer when C_{n/3}(j) is nonzero");
    let factor = i64::try_from(&factor).expect("factor fits i64");
    let twice = factor * c;
    assert_eq!(0, twice % 2, "2T came out odd");
    let value = twice / 2;
    assert_eq!(0, value % 3, "T is always a multiple of 3");
    Ok(value)
}

pub fn t_via_c(n: u64, j: u64) -> Result<i64, Error> {
    t_via_c_with(n, j, &mut CycloCache::new())
}

fn mobius_odd_formula(n: u64, j: u64) -> i64 {
    let mut total = 0i64;
    for d in divisors(n / 3) {
        if j % d != 0 {
            continue;
        }
        let weight = 3 * d as i64 * mobius(n / (3 * d)) as i64;
        match (j / d) % 3 {
            1 => total -= weight,
            2 => total += weight,
            _ => {}
        }
    }
    total
}

/// The odd-case Mobius divisor sum with no domain guard beyond 3 | n.
/// Off the guarded domain it genuinely disagrees with T_n(j) — e.g. it
/// yields 3 at (n, j) = (9, 1) where T is 0 — which is why
/// [`t_via_mobius_odd`] rejects those inputs instead of returning them.
pub fn t_via_mobius_odd_raw(n: u64, j: u64) -> Result<i64, Error> {
    require_multiple(n, 3)?;
    Ok(mobius_odd_formula(n, j))
}

/// T_n(j) as a Mobius-weighted divisor sum, valid for n = 3m with m odd,
/// m coprime to 3, and no divisor of m congruent to 2 mod 3.
pub fn t_via_mobius_odd(n: u64, j: u64) -> Result<i64, Error> {
    require_multiple(n, 3)?;
    let m = n / 3;
    if m % 2 == 0 {
        return Err(Error::OutsideDomain { what: "n/3 must be odd" });
    }
    if m % 3 == 0 {
        return Err(Error::OutsideDomain { what: "9 must not divide n" });
    }
    if !d3r_list(n, 2).expect("class 2 is valid").is_empty() {
        return Err(Error::OutsideDomain {
            what: "n must have no divisor congruent to 2 mod 3",
        });
    }
    Ok(mobius_odd_formula(n, j))
}

fn mobius_even_formula(n: u64, j: u64) -> i64 {
    let mut total = 0i64;
    for d in divisors(n / 6) {
        if j % d != 0 {
            continue;
        }
        let weight = 3 * d as i64 * mobius_p(n / (6 * d)) as i64;
        match (j / d) % 6 {
            1 | 2 => total -= weight,
            4 | 5 => total += weight,
            _ => {}
        }
    }
    total
}

/// The even-case Mobius divisor sum with no domain guard beyond 6 | n.
/// At (n, j) = (36, 2) it yields 6 while T is 0, so the guarded wrapper
/// also rejects multiples of 9.
pub fn t_via_mobius_even_raw(n: u64, j: u64) -> Result<i64, Error> {
    require_multiple(n, 6)?;
    Ok(mobius_even_formula(n, j))
}

/// T_n(j) as a Mobius-weighted divisor sum over d | n/6, valid for
/// 6 | n with 9 not dividing n and no divisor of n congruent to 5 mod 6
/// at depth 6 (D^5_{n,6} empty).
pub fn t_via_mobius_even(n: u64, j: u64) -> Result<i64, Error> {
    require_multiple(n, 6)?;
    if n % 9 == 0 {
        return Err(Error::OutsideDomain { what: "9 must not divide n" });
    }
    if !d6r_list(n, 5).expect("class 5 is valid").is_empty() {
        return Err(Error::OutsideDomain {
            what: "n must have no divisor congruent to 5 mod 6",
        });
    }
    Ok(mobius_even_formula(n, j))
}

/// Full-range twisted sum over all of Z_n (not just units): equals -n at
/// j = n/3, n at j = 2n/3, and 0 elsewhere (indices mod n).
pub fn f_sum3(n: u64, j: u64) -> Result<i64, Error> {
    require_multiple(n, 3)?;
    let n_i = i64::try_from(n).expect("n fits i64");
    let j = j % n;
    Ok(if j == n / 3 {
        -n_i
    } else if j == 2 * n / 3 {
        n_i
    } else {
        0
    })
}

/// Sixth-root analogue over all of Z_n: -n/2 at j in {n/6, 2n/6}, n/2 at
/// j in {4n/6, 5n/6}, 0 elsewhere (indices mod n).
pub fn f_sum6(n: u64, j: u64) -> Result<i64, Error> {
    require_multiple(n, 6)?;
    let half = i64::try_from(n / 2).expect("n fits i64");
    let j = j % n;
    let sixth = n / 6;
    Ok(match j / sixth {
        1 if j == sixth => -half,
        2 if j == 2 * sixth => -half,
        4 if j == 4 * sixth => half,
        5 if j == 5 * sixth => half,
        _ => 0,
    })
}
