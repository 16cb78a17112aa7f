//! The path multigraph `P^{x,y}_n` and its harmonic / arcmonic invariants.
//!
//! Vertices are `u_0, …, u_{n+1}` (vertex ids `0..=n+1`), with sinks `u_0`
//! and `u_{n+1}`. Each interior `u_k` has `x` arcs to `u_{k+1}` followed by
//! `y` arcs to `u_{k-1}` in its rotor order; the arc `a^k_j` sits at rotor
//! position `j`, so a rotor configuration on a path is just the list of
//! `j`'s.
//!
//! With `d_k = x^{n-k} y^k`:
//! * `h(u_0) = 0`, `h(u_{k+1}) = h(u_k) + d_k`, and `F = h(u_{n+1}) = Σ d_k`;
//!   `h` is harmonic, i.e. `h(Δ(u)) = 0`.
//! * `g(a^k_j) = j·d_k` for `j ≤ x` and `(x+y-j)·d_{k-1}` otherwise; `g` is
//!   invariant under cycle pushes, and `g(ρ) - h(σ)` is invariant under
//!   routing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::rotor::{GraphSpec, Multigraph, ParticleConfig, RotorConfig};

/// Builds `P^{x,y}_n` for any multiplicities with `x + y ≥ 1`. No
/// coprimality requirement: the general engine simulates every such graph.
pub fn path_multigraph(n: usize, x: u64, y: u64) -> Result<Multigraph> {
    let degree = x
        .checked_add(y)
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidInstance(format!("x + y must be positive (x={x}, y={y})")))?;
    let degree = usize::try_from(degree)
        .map_err(|_| Error::InvalidInstance("outdegree does not fit in memory".into()))?;
    let x = x as usize;
    let mut arcs = Vec::with_capacity(n * degree);
    let mut rotor_order = vec![Vec::new()];
    for k in 1..=n {
        rotor_order.push((arcs.len()..arcs.len() + degree).collect());
        for j in 0..degree {
            arcs.push((k, if j < x { k + 1 } else { k - 1 }));
        }
    }
    rotor_order.push(Vec::new());
    Multigraph::new(GraphSpec {
        vertex_count: n + 2,
        sinks: vec![0, n + 1],
        arcs,
        rotor_order,
    })
}

/// A path instance `P^{x,y}_n` with its invariant tables.
///
/// Either `0 < x < y` with `gcd(x, y) = 1` ([`PathInstance::new`]) or the
/// simple path `x = y = 1` ([`PathInstance::unit`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInstance {
    n: usize,
    x: u64,
    y: u64,
    d: Vec<BigInt>,
    h: Vec<BigInt>,
    graph: Multigraph,
}

impl PathInstance {
    /// Coprime instance, `0 < x < y`.
    pub fn new(n: usize, x: u64, y: u64) -> Result<Self> {
        if x == 0 || x >= y {
            return Err(Error::InvalidInstance(format!(
                "need 0 < x < y, got x={x}, y={y}"
            )));
        }
        if x.gcd(&y) != 1 {
            return Err(Error::InvalidInstance(format!(
                "x={x} and y={y} are not coprime"
            )));
        }
        Self::build(n, x, y)
    }

    /// The simple path `P^{1,1}_n`.
    pub fn unit(n: usize) -> Result<Self> {
        Self::build(n, 1, 1)
    }

    /// Dispatches to [`PathInstance::unit`] when `x = y = 1`.
    pub fn from_params(n: usize, x: u64, y: u64) -> Result<Self> {
        if x == 1 && y == 1 {
            Self::unit(n)
        } else {
            Self::new(n, x, y)
        }
    }

    fn build(n: usize, x: u64, y: u64) -> Result<Self> {
        let graph = path_multigraph(n, x, y)?;
        let (bx, by) = (BigInt::from(x), BigInt::from(y));
        // d_k = x^{n-k} y^k, built from both ends to avoid repeated powering.
        let mut x_pows = vec![BigInt::one(); n + 1];
        let mut y_pows = vec![BigInt::one(); n + 1];
        for i in 1..=n {
            x_pows[i] = &x_pows[i - 1] * &bx;
            y_pows[i] = &y_pows[i - 1] * &by;
        }
        let d: Vec<BigInt> = (0..=n).map(|k| &x_pows[n - k] * &y_pows[k]).collect();
        let mut h = Vec::with_capacity(n + 2);
        h.push(BigInt::zero());
        for k in 0..=n {
            let next = &h[k] + &d[k];
            h.push(next);
        }
        Ok(PathInstance { n, x, y, d, h, graph })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn is_unit(&self) -> bool {
        self.x == 1 && self.y == 1
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// `x + y`, the outdegree of every interior vertex.
    pub fn degree(&self) -> usize {
        (self.x + self.y) as usize
    }

    /// `d_k = x^{n-k} y^k` for `k ∈ [0, n]`.
    pub fn d(&self, k: usize) -> &BigInt {
        &self.d[k]
    }

    pub fn d_table(&self) -> &[BigInt] {
        &self.d
    }

    /// `F = h(u_{n+1}) = Σ_k d_k`.
    pub fn f(&self) -> &BigInt {
        &self.h[self.n + 1]
    }

    /// `h(u_k)` for `k ∈ [0, n+1]`.
    pub fn h_vertex(&self, k: usize) -> &BigInt {
        &self.h[k]
    }

    pub fn h_table(&self) -> &[BigInt] {
        &self.h
    }

    /// Largest arcmonic value, `Σ_{k=1}^{n} x·d_k`; always below `x·F`.
    pub fn max_arcmonic(&self) -> BigInt {
        self.d[1..].iter().sum::<BigInt>() * self.x
    }

    /// Rotor configuration from the arc index `j_k` of every `u_k`.
    pub fn rotor(&self, arcs: &[usize]) -> Result<RotorConfig> {
        RotorConfig::from_non_sink_positions(&self.graph, arcs)
    }

    /// Arc indices `j_1, …, j_n` of a rotor configuration.
    pub fn rotor_indices(&self, rotor: &RotorConfig) -> Vec<usize> {
        rotor.non_sink_positions(&self.graph)
    }

    /// Every rotor at `a^k_0` (all pointing right).
    pub fn all_right(&self) -> RotorConfig {
        RotorConfig::initial(&self.graph)
    }

    pub fn particles(&self, counts: &[i64]) -> Result<ParticleConfig> {
        self.check_len(counts.len())?;
        Ok(ParticleConfig::from_i64s(counts))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n + 2 {
            return Err(Error::DimensionMismatch {
                expected: self.n + 2,
                found: len,
            });
        }
        Ok(())
    }

    /// `h(σ) = Σ_k σ(u_k)·h(u_k)`.
    pub fn harmonic_h(&self, particles: &ParticleConfig) -> Result<BigInt> {
        self.check_len(particles.len())?;
        Ok(particles
            .counts()
            .iter()
            .zip(&self.h)
            .map(|(s, h)| s * h)
            .sum())
    }

    /// `g(a^k_j)`.
    pub fn arcmonic_g_arc(&self, k: usize, j: usize) -> Result<BigInt> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "vertex index {k} not in [1, {}]",
                self.n
            )));
        }
        let degree = self.degree();
        if j >= degree {
            return Err(Error::IndexOutOfRange(format!(
                "arc index {j} not in [0, {}]",
                degree - 1
            )));
        }
        let x = self.x as usize;
        Ok(if j <= x {
            &self.d[k] * j
        } else {
            &self.d[k - 1] * (degree - j)
        })
    }

    /// `g(ρ) = Σ_k g(ρ(u_k))`.
    pub fn arcmonic_g(&self, rotor: &RotorConfig) -> Result<BigInt> {
        let indices = self.checked_indices(rotor)?;
        let mut total = BigInt::zero();
        for (k, j) in (1..=self.n).zip(indices) {
            total += self.arcmonic_g_arc(k, j)?;
        }
        Ok(total)
    }

    fn checked_indices(&self, rotor: &RotorConfig) -> Result<Vec<usize>> {
        // Re-validating through the constructor rejects configurations built
        // for another graph.
        let indices = self.rotor_indices(rotor);
        RotorConfig::from_non_sink_positions(&self.graph, &indices)?;
        Ok(indices)
    }

    /// `g(ρ) - h(σ)`, invariant under every routing operation.
    pub fn class_value(&self, rotor: &RotorConfig, particles: &ParticleConfig) -> Result<BigInt> {
        Ok(self.arcmonic_g(rotor)? - self.harmonic_h(particles)?)
    }

    /// Rotor equivalence (reachability by cycle pushes) iff `g(ρ) = g(ρ')`.
    pub fn rotor_equivalent(&self, a: &RotorConfig, b: &RotorConfig) -> Result<bool> {
        Ok(self.arcmonic_g(a)? == self.arcmonic_g(b)?)
    }

    /// Particle equivalence (related by a firing vector) iff `h` and the
    /// degree agree.
    pub fn particle_equivalent(&self, a: &ParticleConfig, b: &ParticleConfig) -> Result<bool> {
        Ok(self.harmonic_h(a)? == self.harmonic_h(b)? && a.degree() == b.degree())
    }

    /// Class of `σ` in the sandpile group `Z/FZ`, as a residue in `[0, F)`.
    pub fn sandpile_class(&self, particles: &ParticleConfig) -> Result<BigInt> {
        Ok(self.harmonic_h(particles)?.mod_floor(self.f()))
    }

    /// `x^n`, the class of a single particle on `u_1`.
    pub fn generator(&self) -> BigInt {
        BigInt::from(self.x).pow(self.n as u32)
    }
}
