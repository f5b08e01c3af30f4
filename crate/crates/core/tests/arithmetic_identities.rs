//! Cross-checks between the four ways of computing the twisted sine-sum T,
//! the Ramanujan/Mobius layer, and the full-range sums f that tie them
//! together through generalized Mobius inversion.

use circ_spectra_core::arithmetic_sums::{
    f_sum3, f_sum6, mobius_p, mobius_p_via_sum, ramanujan_c, t_sum, t_sum_direct_with,
    t_via_c_with, t_via_mobius_even, t_via_mobius_odd, z_sum,
};
use circ_spectra_core::cyclotomic::{CycloCache, CycloSum};
use circ_spectra_core::divisor_sets::{divisors, m3_set, m6_set};
use num_bigint::BigInt;

fn in_odd_domain(n: u64) -> bool {
    let m = n / 3;
    n % 3 == 0 && m % 2 == 1 && m % 3 != 0 && divisors(n).iter().all(|d| d % 3 != 2)
}

fn in_even_domain(n: u64) -> bool {
    n % 6 == 0 && n % 9 != 0 && divisors(n).iter().all(|d| d % 6 != 5)
}

#[test]
fn t_direct_summation_matches_half_sum_identity() {
    let mut cache = CycloCache::new();
    for n in (3..=150u64).step_by(3) {
        for q in 0..n {
            assert_eq!(
                t_sum_direct_with(n, q, &mut cache).unwrap(),
                t_sum(n, q).unwrap(),
                "n={n} q={q}"
            );
        }
    }
}

#[test]
fn t_divisibility_parity_and_bridge() {
    let mut cache = CycloCache::new();
    for n in (3..=300u64).step_by(3) {
        for q in 0..n {
            let t = t_sum(n, q).unwrap();
            let c = ramanujan_c(n, q);
            assert_eq!(0, t % 3, "n={n} q={q}: T={t}");
            assert_eq!(t.rem_euclid(2), c.rem_euclid(2), "n={n} q={q}: T={t} C={c}");
            assert_eq!(t, 2 * z_sum(n, q, 1).unwrap() + c, "n={n} q={q}");
            assert_eq!(t, t_via_c_with(n, q, &mut cache).unwrap(), "n={n} q={q}");
        }
    }
}

#[test]
fn mobius_odd_formula_matches_t_on_its_domain() {
    let mut domain = Vec::new();
    for n in (3..=999u64).step_by(3) {
        if !in_odd_domain(n) {
            assert!(t_via_mobius_odd(n, 1).is_err(), "n={n} should be rejected");
            continue;
        }
        domain.push(n);
        for j in 0..n {
            assert_eq!(
                t_sum(n, j).unwrap(),
                t_via_mobius_odd(n, j).unwrap(),
                "n={n} j={j}"
            );
        }
    }
    for expected in [3, 21, 39, 57, 111, 147, 939] {
        assert!(domain.contains(&expected), "{expected} missing from domain");
    }
}

#[test]
fn mobius_even_formula_matches_t_on_its_domain() {
    let mut domain = Vec::new();
    for n in (6..=996u64).step_by(6) {
        if !in_even_domain(n) {
            assert!(t_via_mobius_even(n, 1).is_err(), "n={n} should be rejected");
            continue;
        }
        domain.push(n);
        for j in 0..n {
            assert_eq!(
                t_sum(n, j).unwrap(),
                t_via_mobius_even(n, j).unwrap(),
                "n={n} j={j}"
            );
        }
    }
    for expected in [6, 12, 24, 42, 48, 84, 978] {
        assert!(domain.contains(&expected), "{expected} missing from domain");
    }
}

#[test]
fn ramanujan_closed_form_matches_cosine_sum() {
    for n in 1..=200u64 {
        let coprime: Vec<u64> = (1..=n).filter(|&a| gcd(a, n) == 1).collect();
        for q in 0..n {
            let direct: f64 = coprime
                .iter()
                .map(|&a| (core::f64::consts::TAU * (a * q % n) as f64 / n as f64).cos())
                .sum();
            let closed = ramanujan_c(n, q) as f64;
            assert!(
                (direct - closed).abs() <= 1e-6,
                "n={n} q={q}: {direct} vs {closed}"
            );
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x
}

#[test]
fn mobius_p_closed_form_matches_defining_sum() {
    for n in 1..=10_000u64 {
        assert_eq!(mobius_p_via_sum(n), mobius_p(n) as i64, "n={n}");
    }
}

#[test]
fn cohen_inversion_recovers_t_from_f() {
    // T_n(j) = sum over d | n of f_d(j) * mu_P(n/d); f vanishes unless the
    // relevant modulus (3 resp. 6) divides d. Valid exactly on the same
    // domains as the Mobius formulas.
    for n in (3..=999u64).step_by(3) {
        if !in_odd_domain(n) {
            continue;
        }
        for j in 0..n {
            let inverted: i64 = divisors(n)
                .into_iter()
                .filter(|d| d % 3 == 0)
                .map(|d| f_sum3(d, j % d).unwrap() * mobius_p(n / d) as i64)
                .sum();
            assert_eq!(t_sum(n, j).unwrap(), inverted, "n={n} j={j}");
        }
    }
    for n in (6..=996u64).step_by(6) {
        if !in_even_domain(n) {
            continue;
        }
        for j in 0..n {
            let inverted: i64 = divisors(n)
                .into_iter()
                .filter(|d| d % 6 == 0)
                .map(|d| f_sum6(d, j % d).unwrap() * mobius_p(n / d) as i64)
                .sum();
            assert_eq!(t_sum(n, j).unwrap(), inverted, "n={n} j={j}");
        }
    }
}

#[test]
fn f_closed_forms_match_direct_sums() {
    // f is the same i*sqrt(3)-difference sum taken over the full residue
    // class (not just units); its closed form concentrates on j = n/3, 2n/3
    // (resp. the four sixths).
    let mut cache = CycloCache::new();
    for n in (3..=120u64).step_by(3) {
        let class = m3_set(n, 1, 1).unwrap();
        for j in 0..n {
            let mut sum = CycloSum::zero(n);
            let third = (n / 3) as i64;
            for a in class.iter() {
                let e = (a * j % n) as i64;
                sum.add_term(third + e, 1);
                sum.add_term(2 * third + e, -1);
                sum.add_term(third - e, -1);
                sum.add_term(2 * third - e, 1);
            }
            let direct = sum.as_integer_with(&mut cache).expect("f3 is an integer");
            assert_eq!(direct, BigInt::from(f_sum3(n, j).unwrap()), "n={n} j={j}");
        }
    }
    for n in (6..=120u64).step_by(6) {
        let class = m6_set(n, 1, 1).unwrap();
        for j in 0..n {
            let mut sum = CycloSum::zero(n);
            let third = (n / 3) as i64;
            for a in class.iter() {
                let e = (a * j % n) as i64;
                sum.add_term(third + e, 1);
                sum.add_term(2 * third + e, -1);
                sum.add_term(third - e, -1);
                sum.add_term(2 * third - e, 1);
            }
            let direct = sum.as_integer_with(&mut cache).expect("f6 is an integer");
            assert_eq!(direct, BigInt::from(f_sum6(n, j).unwrap()), "n={n} j={j}");
        }
    }
}

#[test]
fn f_is_a_signed_divisor_sum_of_t() {
    // Forward direction of the inversion, with the class-2 cofactors
    // contributing negatively (inverting a unit class swaps the classes).
    for n in (3..=150u64).step_by(3) {
        for j in 0..n {
            let total: i64 = divisors(n)
                .into_iter()
                .filter(|h| h % 3 != 0)
                .map(|h| {
                    let sign = if h % 3 == 1 { 1 } else { -1 };
                    sign * t_sum(n / h, j).unwrap()
                })
                .sum();
            assert_eq!(f_sum3(n, j).unwrap(), total, "n={n} j={j}");
        }
    }
    for n in (6..=150u64).step_by(6) {
        for j in 0..n {
            let total: i64 = divisors(n)
                .into_iter()
                .filter(|h| gcd(*h, 6) == 1)
                .map(|h| {
                    let sign = if h % 6 == 1 { 1 } else { -1 };
                    sign * t_sum(n / h, j).unwrap()
                })
                .sum();
            assert_eq!(f_sum6(n, j).unwrap(), total, "n={n} j={j}");
        }
    }
}
