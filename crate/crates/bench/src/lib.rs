//! Fixtures shared by the benchmarks.

use rand::Rng;
use rotorpath_core::gen::rng_from_seed;
use rotorpath_core::{BigInt, ParticleConfig, PathInstance, RotorConfig};

/// A coprime path with a random rotor and particle counts of `bits` bits
/// (random sign).
pub fn random_case(n: usize, x: u64, y: u64, bits: u32, seed: u64) -> (PathInstance, RotorConfig, ParticleConfig) {
    let inst = PathInstance::new(n, x, y).expect("coprime parameters");
    let mut rng = rng_from_seed(seed);
    let degree = (x + y) as usize;
    let positions: Vec<usize> = (0..n).map(|_| rng.gen_range(0..degree)).collect();
    let rotor = inst.rotor(&positions).expect("positions below degree");
    let counts = (0..n + 2).map(|_| random_big(&mut rng, bits)).collect();
    (inst, rotor, ParticleConfig::new(counts))
}

/// Uniform magnitude below `2^bits`, random sign.
pub fn random_big<R: Rng>(rng: &mut R, bits: u32) -> BigInt {
    let bytes: Vec<u8> = (0..bits.div_ceil(8)).map(|_| rng.gen()).collect();
    let magnitude = BigInt::from_signed_bytes_le(&[bytes.as_slice(), &[0]].concat()) >> (bytes.len() as u32 * 8 - bits);
    if rng.gen() {
        -magnitude
    } else {
        magnitude
    }
}
