//! Machine-readable outputs. Field order is fixed and every integer is a
//! decimal string.

use rotorpath_core::rotor::RouteOutcome;
use rotorpath_core::{ArrivalSolution, BigInt, Multigraph, PathInstance, RotorConfig, RoutingVector};
use rotorpath_core::{Error, ParticleConfig};
use serde::{Deserialize, Serialize};

use crate::instance::Decimal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub m_right: Decimal,
    pub m_left: Decimal,
    pub final_g: Decimal,
    pub final_class: Decimal,
    #[serde(rename = "F")]
    pub f: Decimal,
    pub h_sigma: Decimal,
    pub g_rho: Decimal,
}

impl SolveReport {
    pub fn new(
        inst: &PathInstance,
        rotor: &RotorConfig,
        particles: &ParticleConfig,
        solution: ArrivalSolution,
    ) -> Result<Self, Error> {
        Ok(SolveReport {
            m_right: Decimal(solution.m_right),
            m_left: Decimal(solution.m_left),
            final_g: Decimal(solution.final_g),
            final_class: Decimal(solution.final_class),
            f: Decimal(inst.f().clone()),
            h_sigma: Decimal(inst.harmonic_h(particles)?),
            g_rho: Decimal(inst.arcmonic_g(rotor)?),
        })
    }

    /// The report implied by a simulated run on a path instance.
    pub fn from_outcome(
        inst: &PathInstance,
        rotor: &RotorConfig,
        particles: &ParticleConfig,
        outcome: &RouteOutcome,
    ) -> Result<Self, Error> {
        let final_g = inst.arcmonic_g(&outcome.rotor)?;
        let n = inst.n();
        let solution = ArrivalSolution {
            m_right: outcome.particles[n + 1].clone(),
            m_left: outcome.particles[0].clone(),
            final_class: ((&final_g % inst.f()) + inst.f()) % inst.f(),
            final_g,
        };
        Self::new(inst, rotor, particles, solution)
    }
}

/// A routing vector over the non-sink vertices together with the sink
/// counts it is claimed to produce (aligned with the sorted sink list).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub routing: Vec<Decimal>,
    pub sinks: Vec<Decimal>,
}

impl Certificate {
    pub fn from_outcome(graph: &Multigraph, outcome: &RouteOutcome) -> Self {
        Certificate {
            routing: decimals(outcome.routing.non_sink_entries(graph)),
            sinks: sink_counts(graph, &outcome.particles),
        }
    }

    pub fn routing_vector(&self, graph: &Multigraph) -> Result<RoutingVector, Error> {
        RoutingVector::from_non_sink_entries(graph, self.routing.iter().map(|d| d.0.clone()).collect())
    }

    pub fn claimed(&self) -> Vec<BigInt> {
        self.sinks.iter().map(|d| d.0.clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<SolveReport>,
    pub sinks: Vec<usize>,
    pub sink_counts: Vec<Decimal>,
    pub final_rotor: Vec<usize>,
    pub steps: Decimal,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    #[serde(rename = "F")]
    pub f: Decimal,
    pub h_class: Decimal,
    pub g_class: Decimal,
    pub final_class: Decimal,
}

fn decimals(values: Vec<BigInt>) -> Vec<Decimal> {
    values.into_iter().map(Decimal).collect()
}

fn sink_counts(graph: &Multigraph, particles: &ParticleConfig) -> Vec<Decimal> {
    graph.sinks().iter().map(|&s| Decimal(particles[s].clone())).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}
