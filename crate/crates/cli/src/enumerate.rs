//! Constructive enumeration of every HS-integral connection set of Z_n.
//!
//! The decision procedure says a set is HS-integral exactly when it is a
//! disjoint union, over divisors d < n, of either the whole gcd class
//! G_n(d) (two-way edges) or one of its two unit-class thirds (arcs; only
//! available when d divides n/3). Enumeration therefore walks the choice
//! vector; no filtering or oracle is involved.

use circ_spectra_core::divisor_sets::{divisors, g3_set, g_set};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedSet {
    pub members: Vec<u64>,
    pub symmetric_divisors: Vec<u64>,
    pub skew_atoms: Vec<(u64, u8)>,
}

/// Number of sets enumerate would emit, without materializing them.
pub fn enumeration_count(n: u64) -> u128 {
    divisors(n)
        .into_iter()
        .filter(|&d| d < n)
        .map(|d| if n % 3 == 0 && (n / 3) % d == 0 { 4u128 } else { 2 })
        .product()
}

/// Emit every HS-integral connection set exactly once, each with the choice
/// vector that built it. Refuses n above `bound` because output is
/// exponential in the number of divisors.
pub fn enumerate_hs_integral(n: u64, bound: u64) -> Result<Vec<EnumeratedSet>, String> {
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    if n > bound {
        return Err(format!(
            "n={n} exceeds the enumeration bound {bound} ({} sets); raise --bound to force",
            enumeration_count(n)
        ));
    }
    let ds: Vec<u64> = divisors(n).into_iter().filter(|&d| d < n).collect();
    let choice_counts: Vec<usize> = ds
        .iter()
        .map(|&d| if n % 3 == 0 && (n / 3) % d == 0 { 4 } else { 2 })
        .collect();

    let mut sets = Vec::new();
    let mut choice = vec![0usize; ds.len()];
    loop {
        let mut members = Vec::new();
        let mut symmetric_divisors = Vec::new();
        let mut skew_atoms = Vec::new();
        for (i, &d) in ds.iter().enumerate() {
            match choice[i] {
                0 => {}
                1 => {
                    symmetric_divisors.push(d);
                    members.extend(g_set(n, d).expect("d divides n").iter());
                }
                c => {
                    let class = (c - 1) as u8;
                    skew_atoms.push((d, class));
                    members.extend(
                        g3_set(n, d, class as u64).expect("d divides n/3").iter(),
                    );
                }
            }
        }
        members.sort_unstable();
        sets.push(EnumeratedSet { members, symmetric_divisors, skew_atoms });

        let mut i = 0;
        loop {
            if i == ds.len() {
                debug_assert_eq!(sets.len() as u128, enumeration_count(n));
                return Ok(sets);
            }
            choice[i] += 1;
            if choice[i] < choice_counts[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
