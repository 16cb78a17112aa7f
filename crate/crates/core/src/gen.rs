//! Seeded random path instances for differential testing.

use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::path::PathInstance;
use crate::rotor::{ParticleConfig, RotorConfig};

/// Ranges for [`random_instance`]. All bounds are inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub n_min: usize,
    pub n_max: usize,
    /// Largest `y`; `x` is drawn from `[1, y-1]` coprime to `y`.
    pub y_max: u64,
    /// Particle counts are drawn from `[-sigma_bound, sigma_bound]`.
    pub sigma_bound: i64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n_min: 1,
            n_max: 5,
            y_max: 6,
            sigma_bound: 20,
        }
    }
}

/// A coprime path instance with a rotor and a particle configuration.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub instance: PathInstance,
    pub rotor: RotorConfig,
    pub particles: ParticleConfig,
}

/// The generator used across the workspace.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws one instance. Panics if `y_max < 2` or `n_min > n_max`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> RandomInstance {
    assert!(params.y_max >= 2, "y_max must allow some 0 < x < y");
    let n = rng.gen_range(params.n_min..=params.n_max);
    let y = rng.gen_range(2..=params.y_max);
    let x = loop {
        let x = rng.gen_range(1..y);
        if x.gcd(&y) == 1 {
            break x;
        }
    };
    let instance = PathInstance::new(n, x, y).expect("coprime 0 < x < y");
    let degree = (x + y) as usize;
    let positions: Vec<usize> = (0..n).map(|_| rng.gen_range(0..degree)).collect();
    let rotor = instance.rotor(&positions).expect("positions below degree");
    let b = params.sigma_bound;
    let counts: Vec<i64> = (0..n + 2).map(|_| rng.gen_range(-b..=b)).collect();
    let particles = ParticleConfig::from_i64s(&counts);
    RandomInstance {
        instance,
        rotor,
        particles,
    }
}

/// `count` instances from a fixed seed.
pub fn random_instances(seed: u64, count: usize, params: &GenParams) -> Vec<RandomInstance> {
    let mut rng = rng_from_seed(seed);
    (0..count).map(|_| random_instance(&mut rng, params)).collect()
}
