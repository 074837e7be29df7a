//! Cohort generators for sweeps: uniform random tallies and exhaustive
//! enumeration of small cohorts.

use rand::Rng;

use crate::types::GradeCounts;

/// A random cohort with `1 ≤ n ≤ max_n`. The size is uniform, and given the
/// size every split into five grades is equally likely.
pub fn random_counts<R: Rng + ?Sized>(rng: &mut R, max_n: u64) -> GradeCounts {
    assert!(max_n >= 1, "max_n must be positive");
    let n = rng.gen_range(1..=max_n);
    // Stars and bars: four cuts among n + 4 slots.
    let mut cuts = rand::seq::index::sample(rng, (n + 4) as usize, 4).into_vec();
    cuts.sort_unstable();
    let mut counts = [0u64; 5];
    let mut prev = 0usize;
    for (slot, &cut) in counts.iter_mut().zip(&cuts) {
        *slot = (cut - prev) as u64;
        prev = cut + 1;
    }
    counts[4] = (n as usize + 4 - prev) as u64;
    GradeCounts::new(counts).expect("n ≥ 1")
}

/// Every cohort with `1 ≤ n ≤ max_n`, in lexicographic order of the counts.
pub fn enumerate_counts(max_n: u64) -> Vec<GradeCounts> {
    let mut out = Vec::new();
    for f in 0..=max_n {
        for d in 0..=max_n - f {
            for c in 0..=max_n - f - d {
                for b in 0..=max_n - f - d - c {
                    for a in 0..=max_n - f - d - c - b {
                        if let Ok(counts) = GradeCounts::new([f, d, c, b, a]) {
                            out.push(counts);
                        }
                    }
                }
            }
        }
    }
    out
}
