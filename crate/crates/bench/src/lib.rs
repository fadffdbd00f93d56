//! Seeded inputs shared by the benchmarks.

use biorder_core::freegroup::random_reduced_word;
use biorder_core::{corpus, IntMatrix, KnotRecord, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn corpus_records() -> Vec<KnotRecord> {
    corpus::all()
        .expect("bundled corpus parses")
        .into_iter()
        .map(|e| e.record)
        .collect()
}

pub fn words(seed: u64, count: usize, rank: usize, len: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_reduced_word(&mut rng, rank, len))
        .collect()
}

/// Left-normed commutators `[w₁, [w₂, …]]`, which sit deep in the lower
/// central series and force large truncation degrees.
pub fn deep_commutators(seed: u64, count: usize, depth: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut w = random_reduced_word(&mut rng, 2, 2);
            for _ in 1..depth {
                let len = rng.gen_range(1..=2);
                let u = random_reduced_word(&mut rng, 2, len);
                let c = u.commutator(&w).expect("equal ranks");
                if !c.is_identity() {
                    w = c;
                }
            }
            w
        })
        .collect()
}

pub fn matrices(seed: u64, count: usize, dim: usize) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..dim)
                .map(|_| (0..dim).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            IntMatrix::from_i64_rows(&refs).expect("square")
        })
        .collect()
}
