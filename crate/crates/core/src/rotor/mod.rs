//! General rotor-routing and chip-firing engine on stopping multigraphs.
//!
//! This is deliberately naive: it simulates the operators directly and is
//! the reference the path solver is checked against.

mod config;
mod cycle;
mod firing;
mod graph;
mod routing;

pub use config::{ParticleConfig, RotorConfig, RoutingVector};
pub use cycle::{
    circuit_routing_vector, circuits, cycle_push, find_circuit, is_acyclic, negative_circuits,
    verify_certificate, PushDirection,
};
pub use firing::{
    fire, fire_vector, is_stable, laplacian_column, stabilize, stabilize_scheduled, unfire,
};
pub use graph::{Arc, GraphSpec, Multigraph};
pub use routing::{
    apply_routing_sequence, apply_routing_vector, full_route, full_route_with_budget,
    legal_route_scheduled, legal_route_to_sinks, legal_route_to_sinks_with_budget, routing_minus,
    routing_plus, RouteOutcome, DEFAULT_STEP_BUDGET,
};
