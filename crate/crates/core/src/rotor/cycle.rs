//! Circuits of the rotor graph `G(ρ)` and cycle pushes.
//!
//! Every non-sink vertex has exactly one out-arc in `G(ρ)`, so `G(ρ)` is a
//! functional graph and its circuits are vertex-disjoint.

use super::config::{ParticleConfig, RotorConfig, RoutingVector};
use super::graph::Multigraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PushDirection {
    /// `ρ ↦ θ_C ∘ ρ` for a circuit `C` of `G(ρ)`.
    Positive,
    /// `ρ ↦ θ_C⁻¹ ∘ ρ` for a circuit `C` of `G(θ⁻¹ ∘ ρ)`.
    Negative,
}

fn retracted(graph: &Multigraph, rotor: &RotorConfig) -> RotorConfig {
    let mut r = rotor.clone();
    for v in graph.non_sinks() {
        r.turn(graph, v, -1);
    }
    r
}

/// All circuits of `G(ρ)`, each listed along its arcs, starting from the
/// first circuit vertex met when scanning start vertices in increasing
/// order.
pub fn circuits(graph: &Multigraph, rotor: &RotorConfig) -> Vec<Vec<usize>> {
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![NEW; graph.vertex_count()];
    let mut found = Vec::new();
    for start in graph.non_sinks() {
        if state[start] != NEW {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        while !graph.is_sink(v) && state[v] == NEW {
            state[v] = ACTIVE;
            path.push(v);
            v = rotor.successor(graph, v);
        }
        if !graph.is_sink(v) && state[v] == ACTIVE {
            let at = path.iter().position(|&p| p == v).expect("active vertex is on the path");
            found.push(path[at..].to_vec());
        }
        for p in path {
            state[p] = DONE;
        }
    }
    found
}

/// Some circuit of `G(ρ)`, or `None` when `ρ` is acyclic.
pub fn find_circuit(graph: &Multigraph, rotor: &RotorConfig) -> Option<Vec<usize>> {
    circuits(graph, rotor).into_iter().next()
}

pub fn is_acyclic(graph: &Multigraph, rotor: &RotorConfig) -> bool {
    find_circuit(graph, rotor).is_none()
}

/// Circuits available for a negative push, i.e. circuits of `G(θ⁻¹ ∘ ρ)`.
pub fn negative_circuits(graph: &Multigraph, rotor: &RotorConfig) -> Vec<Vec<usize>> {
    circuits(graph, &retracted(graph, rotor))
}

/// Applies a positive or negative cycle push along `circuit`.
pub fn cycle_push(
    graph: &Multigraph,
    rotor: &RotorConfig,
    circuit: &[usize],
    direction: PushDirection,
) -> Result<RotorConfig> {
    rotor.check_for(graph)?;
    let not_a_circuit = || Error::NotACircuit(circuit.to_vec());
    if circuit.is_empty() {
        return Err(not_a_circuit());
    }
    let mut seen = vec![false; graph.vertex_count()];
    for &v in circuit {
        if v >= graph.vertex_count() || graph.is_sink(v) || seen[v] {
            return Err(not_a_circuit());
        }
        seen[v] = true;
    }
    let reference = match direction {
        PushDirection::Positive => rotor.clone(),
        PushDirection::Negative => retracted(graph, rotor),
    };
    for (i, &v) in circuit.iter().enumerate() {
        let next = circuit[(i + 1) % circuit.len()];
        if reference.successor(graph, v) != next {
            return Err(not_a_circuit());
        }
    }
    let step = match direction {
        PushDirection::Positive => 1,
        PushDirection::Negative => -1,
    };
    let mut out = rotor.clone();
    for &v in circuit {
        out.turn(graph, v, step);
    }
    Ok(out)
}

/// `r_C`: one routing on every vertex of the circuit.
pub fn circuit_routing_vector(graph: &Multigraph, circuit: &[usize]) -> RoutingVector {
    let mut r = RoutingVector::zeros(graph.vertex_count());
    for &v in circuit {
        r[v] += 1;
    }
    r
}

/// Checks a routing-vector certificate: `routing^r(ρ, σ)` must leave no
/// particle on non-sink vertices and exactly `claimed[s]` on every sink
/// (`claimed` is indexed like [`Multigraph::sinks`]).
pub fn verify_certificate(
    graph: &Multigraph,
    rotor: &RotorConfig,
    particles: &ParticleConfig,
    routing: &RoutingVector,
    claimed: &[num_bigint::BigInt],
) -> bool {
    if claimed.len() != graph.sinks().len() {
        return false;
    }
    match super::routing::apply_routing_vector(graph, rotor, particles, routing) {
        Ok((_, sigma)) => {
            sigma.is_routed(graph)
                && graph
                    .sinks()
                    .iter()
                    .zip(claimed)
                    .all(|(&s, c)| &sigma[s] == c)
        }
        Err(_) => false,
    }
}
