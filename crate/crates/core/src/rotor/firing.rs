//! Chip-firing on the same multigraphs. Firing `u` adds `Δ(u)`, sending one
//! particle along every arc leaving `u`; rotors are not involved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::config::{ParticleConfig, RoutingVector};
use super::graph::Multigraph;
use crate::error::Result;

fn add_laplacian(graph: &Multigraph, sigma: &mut ParticleConfig, u: usize, times: &BigInt) {
    for &a in graph.rotor_order(u) {
        sigma[graph.arc(a).head] += times;
    }
    sigma[u] -= times * graph.out_degree(u);
}

/// `Δ(u)` as a particle configuration.
pub fn laplacian_column(graph: &Multigraph, u: usize) -> Result<ParticleConfig> {
    graph.check_non_sink(u)?;
    let mut delta = ParticleConfig::zeros(graph.vertex_count());
    add_laplacian(graph, &mut delta, u, &BigInt::one());
    Ok(delta)
}

/// `σ + Δ(u)`.
pub fn fire(graph: &Multigraph, particles: &ParticleConfig, u: usize) -> Result<ParticleConfig> {
    particles.check_for(graph)?;
    graph.check_non_sink(u)?;
    let mut sigma = particles.clone();
    add_laplacian(graph, &mut sigma, u, &BigInt::one());
    Ok(sigma)
}

/// `σ − Δ(u)`.
pub fn unfire(graph: &Multigraph, particles: &ParticleConfig, u: usize) -> Result<ParticleConfig> {
    particles.check_for(graph)?;
    graph.check_non_sink(u)?;
    let mut sigma = particles.clone();
    add_laplacian(graph, &mut sigma, u, &-BigInt::one());
    Ok(sigma)
}

/// `σ + Δ(r)` for a firing vector `r`.
pub fn fire_vector(
    graph: &Multigraph,
    particles: &ParticleConfig,
    firing: &RoutingVector,
) -> Result<ParticleConfig> {
    particles.check_for(graph)?;
    firing.check_for(graph)?;
    let mut sigma = particles.clone();
    for u in graph.non_sinks() {
        if !firing[u].is_zero() {
            add_laplacian(graph, &mut sigma, u, &firing[u]);
        }
    }
    Ok(sigma)
}

/// True when no legal firing is possible: `σ(u) < deg⁺(u)` on every non-sink.
pub fn is_stable(graph: &Multigraph, particles: &ParticleConfig) -> bool {
    graph
        .non_sinks()
        .all(|u| particles[u] < BigInt::from(graph.out_degree(u)))
}

/// Stabilization by legal firings. Picks the lowest-indexed unstable vertex
/// and fires it `⌊σ(u)/deg⁺(u)⌋` times in one go (each of those firings is
/// legal). Returns the stable configuration and the firing vector.
///
/// Terminates on every stopping graph, which [`Multigraph`] guarantees.
pub fn stabilize(graph: &Multigraph, particles: &ParticleConfig) -> Result<(ParticleConfig, RoutingVector)> {
    particles.check_for(graph)?;
    let mut sigma = particles.clone();
    let mut firing = RoutingVector::zeros(graph.vertex_count());
    let non_sinks: Vec<usize> = graph.non_sinks().collect();
    loop {
        let next = non_sinks
            .iter()
            .copied()
            .find(|&u| sigma[u] >= BigInt::from(graph.out_degree(u)));
        let Some(u) = next else { break };
        let times = sigma[u].div_floor(&BigInt::from(graph.out_degree(u)));
        add_laplacian(graph, &mut sigma, u, &times);
        firing[u] += times;
    }
    Ok((sigma, firing))
}

/// Stabilization one firing at a time; `pick` chooses among the currently
/// unstable vertices (given in increasing order).
pub fn stabilize_scheduled<P>(
    graph: &Multigraph,
    particles: &ParticleConfig,
    mut pick: P,
) -> Result<(ParticleConfig, RoutingVector)>
where
    P: FnMut(&[usize]) -> usize,
{
    particles.check_for(graph)?;
    let mut sigma = particles.clone();
    let mut firing = RoutingVector::zeros(graph.vertex_count());
    loop {
        let unstable: Vec<usize> = graph
            .non_sinks()
            .filter(|&u| sigma[u] >= BigInt::from(graph.out_degree(u)))
            .collect();
        if unstable.is_empty() {
            break;
        }
        let u = pick(&unstable);
        assert!(unstable.contains(&u), "scheduler picked a stable vertex");
        add_laplacian(graph, &mut sigma, u, &BigInt::one());
        firing[u] += 1;
    }
    debug_assert!(firing.entries().iter().all(|f| !f.is_negative()));
    Ok((sigma, firing))
}
