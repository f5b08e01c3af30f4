//! Agreement sweeps: compare the structural integrality decision against the
//! eigenvalue-level oracle over many connection sets, exhaustively for small
//! n and by sampling for larger n.

use circ_spectra_core::circulant::ConnectionSet;
use circ_spectra_core::cyclotomic::CycloCache;
use circ_spectra_core::integrality::{is_eisenstein_integral, is_hs_integral, oracle_verdicts};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub n: u64,
    pub members: Vec<u64>,
    /// Which verdict disagreed: "hs" or "eisenstein".
    pub which: &'static str,
    pub structural: bool,
    pub oracle: bool,
}

#[derive(Debug, Default)]
pub struct SweepOutcome {
    pub sets_checked: u64,
    pub disagreements: Vec<Disagreement>,
}

impl SweepOutcome {
    fn absorb(&mut self, other: SweepOutcome) {
        self.sets_checked += other.sets_checked;
        self.disagreements.extend(other.disagreements);
    }
}

/// Worker count: CIRC_SPECTRA_THREADS, where 0 or unset means one worker per
/// available core.
pub fn thread_count() -> usize {
    let configured = std::env::var("CIRC_SPECTRA_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    match configured {
        Some(k) if k > 0 => k,
        _ => std::thread::available_parallelism().map_or(1, |p| p.get()),
    }
}

fn check_one(s: &ConnectionSet, cache: &mut CycloCache, out: &mut SweepOutcome) {
    let structural_hs = is_hs_integral(s).is_ok();
    let structural_eis = is_eisenstein_integral(s).is_ok();
    let oracle = oracle_verdicts(s, cache);
    out.sets_checked += 1;
    if structural_hs != oracle.hs_integral {
        out.disagreements.push(Disagreement {
            n: s.n(),
            members: s.members().to_vec(),
            which: "hs",
            structural: structural_hs,
            oracle: oracle.hs_integral,
        });
    }
    if structural_eis != oracle.eisenstein_integral {
        out.disagreements.push(Disagreement {
            n: s.n(),
            members: s.members().to_vec(),
            which: "eisenstein",
            structural: structural_eis,
            oracle: oracle.eisenstein_integral,
        });
    }
}

/// Run one n's worth of bitmasks sharded across workers. Aggregation is a
/// count plus a disagreement list, so shard order cannot matter; the final
/// sort makes the report deterministic anyway.
fn sharded(n: u64, masks: Vec<u64>) -> SweepOutcome {
    let workers = thread_count().max(1);
    let mut total = SweepOutcome::default();
    if workers == 1 || masks.len() < 2 {
        let mut cache = CycloCache::new();
        for &mask in &masks {
            check_one(&ConnectionSet::from_bitmask(n, mask), &mut cache, &mut total);
        }
    } else {
        let chunk = masks.len().div_ceil(workers);
        let pieces = std::thread::scope(|scope| {
            let handles: Vec<_> = masks
                .chunks(chunk)
                .map(|shard| {
                    scope.spawn(move || {
                        let mut cache = CycloCache::new();
                        let mut out = SweepOutcome::default();
                        for &mask in shard {
                            check_one(&ConnectionSet::from_bitmask(n, mask), &mut cache, &mut out);
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect::<Vec<_>>()
        });
        for piece in pieces {
            total.absorb(piece);
        }
    }
    total.disagreements.sort_by(|a, b| (a.n, &a.members).cmp(&(b.n, &b.members)));
    total
}

/// Every subset of 1..n-1 for every n in the range.
pub fn exhaustive_agreement(n_low: u64, n_high: u64) -> SweepOutcome {
    assert!(2 <= n_low && n_high <= 24, "exhaustive range out of bounds");
    let mut total = SweepOutcome::default();
    for n in n_low..=n_high {
        let masks: Vec<u64> = (0..1u64 << (n - 1)).collect();
        total.absorb(sharded(n, masks));
    }
    total.disagreements.sort_by(|a, b| (a.n, &a.members).cmp(&(b.n, &b.members)));
    total
}

/// Fixed number of uniformly random subsets per n. Masks are drawn up front
/// from a seeded generator, so results do not depend on the worker count.
pub fn sampled_agreement(n_low: u64, n_high: u64, samples_per_n: u64, seed: u64) -> SweepOutcome {
    assert!(2 <= n_low && n_high <= 64, "sampled range out of bounds");
    let mut total = SweepOutcome::default();
    for n in n_low..=n_high {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n);
        let keep = (1u64 << (n - 1)) - 1;
        let masks: Vec<u64> = (0..samples_per_n).map(|_| rng.gen::<u64>() & keep).collect();
        total.absorb(sharded(n, masks));
    }
    total.disagreements.sort_by(|a, b| (a.n, &a.members).cmp(&(b.n, &b.members)));
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_exhaustive_sweep_is_clean() {
        let outcome = exhaustive_agreement(2, 8);
        assert_eq!(outcome.sets_checked, (2..=8u64).map(|n| 1 << (n - 1)).sum::<u64>());
        assert!(outcome.disagreements.is_empty(), "{:?}", outcome.disagreements);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sampled_agreement(16, 18, 50, 7);
        let b = sampled_agreement(16, 18, 50, 7);
        assert_eq!(a.sets_checked, b.sets_checked);
        assert_eq!(a.disagreements, b.disagreements);
        assert_eq!(a.sets_checked, 150);
    }
}
