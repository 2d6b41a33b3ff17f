//! Inputs shared by the benchmarks.

use diplace_core::{Color, DigraphGame};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random two-coloured digraphs on `n` vertices with arc density `p`.
pub fn random_graphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<DigraphGame> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut g = DigraphGame::new();
            for v in 0..n {
                let c = if rng.gen_bool(0.5) { Color::Blue } else { Color::Red };
                g.add_vertex(format!("v{v}"), c).unwrap();
            }
            for u in 0..n {
                for w in (0..n).filter(|&w| w != u) {
                    if rng.gen_bool(p) {
                        g.add_arc(u, w).unwrap();
                    }
                }
            }
            g
        })
        .collect()
}
