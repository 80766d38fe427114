use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::triangulation::{slot, Side};
use super::DecoratedTriangulation;

/// A uniformly random gluing of `n` triangles (`n` even), conditioned on the
/// result being connected.
pub fn random_triangulation<R: Rng>(n: usize, rng: &mut R) -> DecoratedTriangulation {
    assert!(n >= 2 && n % 2 == 0, "need an even positive number of triangles");
    let sides: Vec<Side> = (1..=n as u32).flat_map(|t| (0..3u8).map(move |k| (t, k))).collect();
    loop {
        let mut order = sides.clone();
        order.shuffle(rng);
        let mut partner = vec![(0u32, 0u8); 3 * n];
        for pair in order.chunks(2) {
            partner[slot(pair[0])] = pair[1];
            partner[slot(pair[1])] = pair[0];
        }
        if let Ok(tri) = DecoratedTriangulation::from_partner(partner) {
            return tri;
        }
    }
}

/// `count` scenes from a seeded generator, with sizes cycling through
/// 2, 4, 6, 8 triangles.
pub fn random_scenes(count: usize, seed: u64) -> Vec<DecoratedTriangulation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_triangulation(2 * (i % 4 + 1), &mut rng)).collect()
}
