//! Move-and-turn rotor routing.
//!
//! `routing⁺_u` moves one particle from `u` along `ρ(u)` and then advances
//! the rotor at `u`; `routing⁻_u` is its inverse (retract the rotor, then
//! pull one particle back from the head of the retracted arc). All these
//! operators commute, so a [`RoutingVector`] describes a routing
//! unambiguously.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::config::{ParticleConfig, RotorConfig, RoutingVector};
use super::graph::Multigraph;
use crate::error::{Error, Result};

/// Default safety net for [`full_route`] and [`legal_route_to_sinks`].
pub const DEFAULT_STEP_BUDGET: u64 = 50_000_000;

/// Result of routing a configuration to the sinks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteOutcome {
    pub rotor: RotorConfig,
    pub particles: ParticleConfig,
    /// Routing vector actually applied.
    pub routing: RoutingVector,
    /// Number of scheduling steps taken. A step processes every particle
    /// (or antiparticle) currently sitting on the chosen vertex.
    pub steps: u64,
}

fn check_inputs(graph: &Multigraph, rotor: &RotorConfig, particles: &ParticleConfig) -> Result<()> {
    rotor.check_for(graph)?;
    particles.check_for(graph)
}

fn step_plus(graph: &Multigraph, rotor: &mut RotorConfig, sigma: &mut ParticleConfig, u: usize) {
    let head = rotor.successor(graph, u);
    sigma[head] += 1;
    sigma[u] -= 1;
    rotor.turn(graph, u, 1);
}

fn step_minus(graph: &Multigraph, rotor: &mut RotorConfig, sigma: &mut ParticleConfig, u: usize) {
    rotor.turn(graph, u, -1);
    let head = rotor.successor(graph, u);
    sigma[head] -= 1;
    sigma[u] += 1;
}

/// Applies `(routing⁺_u)^count` in place using `O(deg(u))` big-integer
/// operations: whole rotor revolutions are applied as `q·Δ(u)`.
pub(crate) fn route_in_place(
    graph: &Multigraph,
    rotor: &mut RotorConfig,
    sigma: &mut ParticleConfig,
    u: usize,
    count: &BigInt,
) {
    let degree = graph.out_degree(u);
    let (revolutions, rest) = count.div_mod_floor(&BigInt::from(degree));
    if !revolutions.is_zero() {
        for &a in graph.rotor_order(u) {
            sigma[graph.arc(a).head] += &revolutions;
        }
        sigma[u] -= &revolutions * degree;
    }
    let rest = usize::try_from(&rest).expect("remainder is below the outdegree");
    for _ in 0..rest {
        step_plus(graph, rotor, sigma, u);
    }
}

/// `routing⁺_u`. No legality condition: `σ(u)` may go negative.
pub fn routing_plus(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    u: usize,
) -> Result<(RotorConfig, ParticleConfig)> {
    check_inputs(graph, rotor, particles)?;
    graph.check_non_sink(u)?;
    let (mut rotor, mut particles) = (rotor.clone(), particles.clone());
    step_plus(graph, &mut rotor, &mut particles, u);
    Ok((rotor, particles))
}

/// `routing⁻_u`, the inverse of [`routing_plus`].
pub fn routing_minus(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    u: usize,
) -> Result<(RotorConfig, ParticleConfig)> {
    check_inputs(graph, rotor, particles)?;
    graph.check_non_sink(u)?;
    let (mut rotor, mut particles) = (rotor.clone(), particles.clone());
    step_minus(graph, &mut rotor, &mut particles, u);
    Ok((rotor, particles))
}

/// `routing^r`: composes `(routing⁺_u)^{r(u)}` over all non-sink `u`.
pub fn apply_routing_vector(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    routing: &RoutingVector,
) -> Result<(RotorConfig, ParticleConfig)> {
    check_inputs(graph, rotor, particles)?;
    routing.check_for(graph)?;
    let (mut rotor, mut particles) = (rotor.clone(), particles.clone());
    for u in graph.non_sinks() {
        if !routing[u].is_zero() {
            route_in_place(graph, &mut rotor, &mut particles, u, &routing[u]);
        }
    }
    Ok((rotor, particles))
}

/// Applies elementary operators one at a time, in sequence order:
/// `(u, true)` is `routing⁺_u` and `(u, false)` is `routing⁻_u`.
pub fn apply_routing_sequence(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    sequence: &[(usize, bool)],
) -> Result<(RotorConfig, ParticleConfig)> {
    check_inputs(graph, rotor, particles)?;
    let (mut rotor, mut particles) = (rotor.clone(), particles.clone());
    for &(u, forward) in sequence {
        graph.check_non_sink(u)?;
        if forward {
            step_plus(graph, &mut rotor, &mut particles, u);
        } else {
            step_minus(graph, &mut rotor, &mut particles, u);
        }
    }
    Ok((rotor, particles))
}

/// Routes with the given sign predicate until no vertex qualifies, always
/// picking the lowest-indexed qualifying vertex and processing all of its
/// (anti)particles at once.
fn drain(
    graph: &Multigraph,
    rotor: &mut RotorConfig,
    sigma: &mut ParticleConfig,
    routing: &mut RoutingVector,
    steps: &mut u64,
    budget: u64,
    positive: bool,
) -> Result<()> {
    let non_sinks: Vec<usize> = graph.non_sinks().collect();
    loop {
        let next = non_sinks.iter().copied().find(|&u| {
            if positive {
                sigma[u].is_positive()
            } else {
                sigma[u].is_negative()
            }
        });
        let Some(u) = next else { return Ok(()) };
        if *steps >= budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        *steps += 1;
        let count = sigma[u].clone();
        route_in_place(graph, rotor, sigma, u, &count);
        routing[u] += count;
    }
}

/// Maximal legal routing of a nonnegative configuration (on `V₀`).
pub fn legal_route_to_sinks(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
) -> Result<RouteOutcome> {
    legal_route_to_sinks_with_budget(graph, rotor, particles, DEFAULT_STEP_BUDGET)
}

pub fn legal_route_to_sinks_with_budget(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    budget: u64,
) -> Result<RouteOutcome> {
    check_inputs(graph, rotor, particles)?;
    if let Some(vertex) = graph.non_sinks().find(|&u| particles[u].is_negative()) {
        return Err(Error::NegativeInput { vertex });
    }
    let mut out = RouteOutcome {
        rotor: rotor.clone(),
        particles: particles.clone(),
        routing: RoutingVector::zeros(graph.vertex_count()),
        steps: 0,
    };
    drain(
        graph,
        &mut out.rotor,
        &mut out.particles,
        &mut out.routing,
        &mut out.steps,
        budget,
        true,
    )?;
    Ok(out)
}

/// Maximal legal routing, one particle at a time, where `pick` chooses the
/// next vertex among the currently eligible ones (given in increasing
/// order). Used to exercise schedule independence.
pub fn legal_route_scheduled<P>(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    budget: u64,
    mut pick: P,
) -> Result<RouteOutcome>
where
    P: FnMut(&[usize]) -> usize,
{
    check_inputs(graph, rotor, particles)?;
    if let Some(vertex) = graph.non_sinks().find(|&u| particles[u].is_negative()) {
        return Err(Error::NegativeInput { vertex });
    }
    let mut rotor = rotor.clone();
    let mut sigma = particles.clone();
    let mut routing = RoutingVector::zeros(graph.vertex_count());
    let mut steps = 0;
    loop {
        let eligible: Vec<usize> = graph.non_sinks().filter(|&u| sigma[u].is_positive()).collect();
        if eligible.is_empty() {
            break;
        }
        if steps >= budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        steps += 1;
        let u = pick(&eligible);
        assert!(eligible.contains(&u), "scheduler picked an ineligible vertex");
        step_plus(graph, &mut rotor, &mut sigma, u);
        routing[u] += BigInt::one();
    }
    Ok(RouteOutcome {
        rotor,
        particles: sigma,
        routing,
        steps,
    })
}

/// Routes an arbitrary configuration (antiparticles allowed anywhere) until
/// every non-sink vertex is empty, returning one element of `routing^∞`.
///
/// Phase one legally routes the particles; phase two routes antiparticles
/// with `routing⁻`, which is a legal rotor walk for the reversed rotor
/// order and never creates positive counts on `V₀`.
pub fn full_route(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
) -> Result<RouteOutcome> {
    full_route_with_budget(graph, rotor, particles, DEFAULT_STEP_BUDGET)
}

pub fn full_route_with_budget(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    budget: u64,
) -> Result<RouteOutcome> {
    check_inputs(graph, rotor, particles)?;
    let mut out = RouteOutcome {
        rotor: rotor.clone(),
        particles: particles.clone(),
        routing: RoutingVector::zeros(graph.vertex_count()),
        steps: 0,
    };
    for positive in [true, false] {
        drain(
            graph,
            &mut out.rotor,
            &mut out.particles,
            &mut out.routing,
            &mut out.steps,
            budget,
            positive,
        )?;
    }
    debug_assert!(out.particles.is_routed(graph));
    Ok(out)
}
