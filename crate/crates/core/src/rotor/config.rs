use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::graph::Multigraph;
use crate::error::{Error, Result};

/// Current out-arc choice at every non-sink vertex, stored as a position in
/// the vertex's rotor order. Indexed by vertex; sink entries are always 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotorConfig {
    positions: Vec<usize>,
}

impl RotorConfig {
    /// Every rotor at the first arc of its rotor order.
    pub fn initial(graph: &Multigraph) -> Self {
        RotorConfig {
            positions: vec![0; graph.vertex_count()],
        }
    }

    /// Builds a configuration from one position per non-sink vertex, listed
    /// in increasing vertex order.
    pub fn from_non_sink_positions(graph: &Multigraph, positions: &[usize]) -> Result<Self> {
        let non_sinks: Vec<usize> = graph.non_sinks().collect();
        if positions.len() != non_sinks.len() {
            return Err(Error::DimensionMismatch {
                expected: non_sinks.len(),
                found: positions.len(),
            });
        }
        let mut config = Self::initial(graph);
        for (&v, &p) in non_sinks.iter().zip(positions) {
            config.set_position(graph, v, p)?;
        }
        Ok(config)
    }

    /// Positions of the non-sink vertices in increasing vertex order.
    pub fn non_sink_positions(&self, graph: &Multigraph) -> Vec<usize> {
        graph.non_sinks().map(|v| self.positions[v]).collect()
    }

    pub fn position(&self, v: usize) -> usize {
        self.positions[v]
    }

    pub fn set_position(&mut self, graph: &Multigraph, v: usize, position: usize) -> Result<()> {
        graph.check_non_sink(v)?;
        let degree = graph.out_degree(v);
        if position >= degree {
            return Err(Error::RotorOutOfRange {
                vertex: v,
                position,
                degree,
            });
        }
        self.positions[v] = position;
        Ok(())
    }

    /// Arc id `ρ(v)`.
    pub fn arc(&self, graph: &Multigraph, v: usize) -> usize {
        graph.rotor_order(v)[self.positions[v]]
    }

    /// Head of `ρ(v)`, i.e. the successor of `v` in `G(ρ)`.
    pub fn successor(&self, graph: &Multigraph, v: usize) -> usize {
        graph.head_at(v, self.positions[v])
    }

    /// Advances (or retracts, for negative `steps`) the rotor at `v`.
    pub(crate) fn turn(&mut self, graph: &Multigraph, v: usize, steps: i64) {
        let degree = graph.out_degree(v) as i64;
        let p = self.positions[v] as i64;
        self.positions[v] = (p + steps).rem_euclid(degree) as usize;
    }

    pub(crate) fn check_for(&self, graph: &Multigraph) -> Result<()> {
        if self.positions.len() != graph.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: graph.vertex_count(),
                found: self.positions.len(),
            });
        }
        for v in graph.non_sinks() {
            let degree = graph.out_degree(v);
            if self.positions[v] >= degree {
                return Err(Error::RotorOutOfRange {
                    vertex: v,
                    position: self.positions[v],
                    degree,
                });
            }
        }
        Ok(())
    }
}

/// Integer particle count per vertex; negative values are antiparticles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParticleConfig(Vec<BigInt>);

impl ParticleConfig {
    pub fn new(counts: Vec<BigInt>) -> Self {
        ParticleConfig(counts)
    }

    pub fn zeros(len: usize) -> Self {
        ParticleConfig(vec![BigInt::zero(); len])
    }

    pub fn from_i64s(counts: &[i64]) -> Self {
        ParticleConfig(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The configuration with a single particle on `v`.
    pub fn unit(len: usize, v: usize) -> Self {
        let mut c = Self::zeros(len);
        c.0[v] = BigInt::from(1);
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<BigInt> {
        self.0
    }

    /// `deg(σ)`, the total number of particles.
    pub fn degree(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// True when every non-sink vertex carries zero particles.
    pub fn is_routed(&self, graph: &Multigraph) -> bool {
        graph.non_sinks().all(|v| self.0[v].is_zero())
    }

    /// Fails unless there is one count per vertex of `graph`.
    pub fn check_for(&self, graph: &Multigraph) -> Result<()> {
        if self.0.len() != graph.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: graph.vertex_count(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for ParticleConfig {
    type Output = BigInt;

    fn index(&self, v: usize) -> &BigInt {
        &self.0[v]
    }
}

impl IndexMut<usize> for ParticleConfig {
    fn index_mut(&mut self, v: usize) -> &mut BigInt {
        &mut self.0[v]
    }
}

impl Add<&ParticleConfig> for &ParticleConfig {
    type Output = ParticleConfig;

    fn add(self, rhs: &ParticleConfig) -> ParticleConfig {
        assert_eq!(self.len(), rhs.len(), "particle configurations differ in size");
        ParticleConfig(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&ParticleConfig> for &ParticleConfig {
    type Output = ParticleConfig;

    fn sub(self, rhs: &ParticleConfig) -> ParticleConfig {
        assert_eq!(self.len(), rhs.len(), "particle configurations differ in size");
        ParticleConfig(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Number of routings per vertex (negative for inverse routings). Also used
/// as a firing vector. Indexed by vertex; sink entries stay 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RoutingVector(Vec<BigInt>);

impl RoutingVector {
    pub fn zeros(len: usize) -> Self {
        RoutingVector(vec![BigInt::zero(); len])
    }

    pub fn new(entries: Vec<BigInt>) -> Self {
        RoutingVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        RoutingVector(entries.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a vector from one entry per non-sink vertex in increasing order.
    pub fn from_non_sink_entries(graph: &Multigraph, entries: Vec<BigInt>) -> Result<Self> {
        let non_sinks: Vec<usize> = graph.non_sinks().collect();
        if entries.len() != non_sinks.len() {
            return Err(Error::DimensionMismatch {
                expected: non_sinks.len(),
                found: entries.len(),
            });
        }
        let mut r = Self::zeros(graph.vertex_count());
        for (v, e) in non_sinks.into_iter().zip(entries) {
            r.0[v] = e;
        }
        Ok(r)
    }

    pub fn non_sink_entries(&self, graph: &Multigraph) -> Vec<BigInt> {
        graph.non_sinks().map(|v| self.0[v].clone()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `|r|_1`.
    pub fn l1_norm(&self) -> BigInt {
        self.0.iter().map(|e| e.abs()).sum()
    }

    pub(crate) fn check_for(&self, graph: &Multigraph) -> Result<()> {
        if self.0.len() != graph.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: graph.vertex_count(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for RoutingVector {
    type Output = BigInt;

    fn index(&self, v: usize) -> &BigInt {
        &self.0[v]
    }
}

impl IndexMut<usize> for RoutingVector {
    fn index_mut(&mut self, v: usize) -> &mut BigInt {
        &mut self.0[v]
    }
}

impl Neg for &RoutingVector {
    type Output = RoutingVector;

    fn neg(self) -> RoutingVector {
        RoutingVector(self.0.iter().map(|e| -e).collect())
    }
}
