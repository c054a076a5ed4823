//! Seeded random momenta. Each sample index gets its own ChaCha stream, so a sample does not
//! depend on how many others were drawn or in which order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::FourMomentum;

pub fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn unit_vector<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// m ∈ [0.1, 10], |𝐩| ∈ [0, 10m], isotropic direction.
pub fn random_momentum(seed: u64, index: usize) -> FourMomentum {
    let mut rng = rng_for(seed, index);
    let m: f64 = rng.gen_range(0.1..=10.0);
    let mag: f64 = rng.gen_range(0.0..=10.0 * m);
    let n = unit_vector(&mut rng);
    FourMomentum::new(m, n.map(|x| x * mag))
}

/// As [`random_momentum`] but with |𝐩| ≥ 0.05 m so that directions are well defined.
pub fn random_moving_momentum(seed: u64, index: usize) -> FourMomentum {
    let mut rng = rng_for(seed, index);
    let m: f64 = rng.gen_range(0.1..=10.0);
    let mag: f64 = rng.gen_range(0.05 * m..=10.0 * m);
    let n = unit_vector(&mut rng);
    FourMomentum::new(m, n.map(|x| x * mag))
}
