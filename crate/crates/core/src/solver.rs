//! Generalized ARRIVAL on path instances, solved from the invariants alone.
//!
//! After routing every particle of `σ` to the sinks, the final rotor
//! configuration `ρ'` satisfies `g(ρ') = g(ρ) - h(σ) + mF`, where `m` is the
//! number of particles on `u_{n+1}`. The right-hand side must lie in `g(R)`,
//! and exactly one `m` in a window of length `x` makes it so.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::engel::{membership_gr, scan_gr, unique_k_mod_f, EngelMachine, OpCounter, SearchMode};
use crate::error::{Error, Result};
use crate::path::PathInstance;
use crate::rotor::{ParticleConfig, RotorConfig};

/// Outcome of routing all particles of a path instance to the sinks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrivalSolution {
    /// Particles ending on `u_{n+1}`.
    pub m_right: BigInt,
    /// Particles ending on `u_0`.
    pub m_left: BigInt,
    /// `g` of every possible final rotor configuration.
    pub final_g: BigInt,
    /// `final_g mod F`.
    pub final_class: BigInt,
}

/// Solves a coprime instance (`0 < x < y`) by bisection.
pub fn solve(inst: &PathInstance, rotor: &RotorConfig, particles: &ParticleConfig) -> Result<ArrivalSolution> {
    solve_with(inst, rotor, particles, SearchMode::Bisection, &mut OpCounter::default())
}

/// [`solve`] with an explicit search mode and work counter.
pub fn solve_with(
    inst: &PathInstance,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    mode: SearchMode,
    counter: &mut OpCounter,
) -> Result<ArrivalSolution> {
    if inst.is_unit() {
        return Err(Error::InvalidInstance(
            "x = y = 1 has no Engel machine; use solve_11".into(),
        ));
    }
    let g = inst.arcmonic_g(rotor)?;
    let h = inst.harmonic_h(particles)?;
    if inst.n() == 0 {
        return Ok(ArrivalSolution {
            m_right: particles[1].clone(),
            m_left: particles[0].clone(),
            final_g: BigInt::zero(),
            final_class: BigInt::zero(),
        });
    }
    let machine = EngelMachine::for_instance(inst)?;
    let f = inst.f();
    let m0 = Integer::div_ceil(&(&h - &g), f);
    let w0 = &g - &h + &m0 * f;
    let (k, final_g) = unique_k_mod_f(&machine, &w0, mode, counter)?;
    let m_right = m0 + k;
    Ok(finish(particles, m_right, final_g, f))
}

/// Closed form on `P^{1,1}_n`: `m = ⌈(h(σ) - g(ρ)) / (n+1)⌉`, where `g`
/// counts left-pointing rotors.
pub fn solve_11(inst: &PathInstance, rotor: &RotorConfig, particles: &ParticleConfig) -> Result<ArrivalSolution> {
    if !inst.is_unit() {
        return Err(Error::InvalidInstance(format!(
            "closed form needs x = y = 1, got x={}, y={}",
            inst.x(),
            inst.y()
        )));
    }
    let g = inst.arcmonic_g(rotor)?;
    let h = inst.harmonic_h(particles)?;
    let f = inst.f();
    let m_right = Integer::div_ceil(&(&h - &g), f);
    let final_g = &g - &h + &m_right * f;
    Ok(finish(particles, m_right, final_g, f))
}

/// [`solve_11`] on the simple path, [`solve`] otherwise.
pub fn solve_any(inst: &PathInstance, rotor: &RotorConfig, particles: &ParticleConfig) -> Result<ArrivalSolution> {
    if inst.is_unit() {
        solve_11(inst, rotor, particles)
    } else {
        solve(inst, rotor, particles)
    }
}

fn finish(particles: &ParticleConfig, m_right: BigInt, final_g: BigInt, f: &BigInt) -> ArrivalSolution {
    ArrivalSolution {
        m_left: particles.degree() - &m_right,
        m_right,
        final_class: final_g.mod_floor(f),
        final_g,
    }
}

/// `(g(ρ) - h(σ)) mod F`, the class of every final rotor configuration.
pub fn final_rotor_class(inst: &PathInstance, rotor: &RotorConfig, particles: &ParticleConfig) -> Result<BigInt> {
    Ok(inst.class_value(rotor, particles)?.mod_floor(inst.f()))
}

/// Whether two rotor-particle configurations are equivalent under routing.
pub fn equivalent_pairs(
    inst: &PathInstance,
    a: (&RotorConfig, &ParticleConfig),
    b: (&RotorConfig, &ParticleConfig),
) -> Result<bool> {
    Ok(inst.class_value(a.0, a.1)? == inst.class_value(b.0, b.1)? && a.1.degree() == b.1.degree())
}

/// Order of the sandpile group, `F`. Also the number of acyclic rotor
/// configurations and of rotor classes.
pub fn sandpile_order(inst: &PathInstance) -> BigInt {
    inst.f().clone()
}

/// Whether `v` is the `g`-value of some rotor configuration.
pub fn is_arcmonic_value(inst: &PathInstance, v: &BigInt) -> Result<bool> {
    if inst.is_unit() {
        return Ok(!v.is_negative() && *v <= BigInt::from(inst.n()));
    }
    Ok(membership_gr(&EngelMachine::for_instance(inst)?, v))
}

/// Default cap on `F` for [`enumerate_gr`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// `g(R)` in increasing order. Fails when `F` exceeds `cap`.
pub fn enumerate_gr(inst: &PathInstance, cap: u64) -> Result<Vec<BigInt>> {
    let f = inst.f();
    if f.to_u64().map_or(true, |f| f > cap) {
        return Err(Error::SizeLimitExceeded {
            size: f.to_string(),
            limit: cap.to_string(),
        });
    }
    if inst.is_unit() {
        return Ok((0..=inst.n()).map(BigInt::from).collect());
    }
    Ok(scan_gr(&EngelMachine::for_instance(inst)?))
}
