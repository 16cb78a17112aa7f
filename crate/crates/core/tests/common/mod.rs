//! Brute-force oracles shared by the integration tests. They work on small
//! machine integers and walk state spaces directly, without the library's
//! invariant machinery.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use rotorpath_core::rotor::{circuits, cycle_push, negative_circuits, PushDirection};
use rotorpath_core::{BigInt, Multigraph, ParticleConfig, PathInstance, RotorConfig};

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&d| BigInt::from(d)).collect()
}

/// Every rotor configuration of a path instance, as arc-index lists.
pub fn all_positions(inst: &PathInstance) -> Vec<Vec<usize>> {
    let deg = inst.degree();
    let mut out = vec![vec![]];
    for _ in 0..inst.n() {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..deg).map(move |j| {
                    let mut q = p.clone();
                    q.push(j);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn all_rotors(inst: &PathInstance) -> Vec<RotorConfig> {
    all_positions(inst)
        .iter()
        .map(|j| inst.rotor(j).unwrap())
        .collect()
}

/// Connected components of the cycle-push graph on all rotor
/// configurations. Returns a component id per configuration, aligned with
/// [`all_rotors`].
pub fn push_classes(inst: &PathInstance) -> Vec<usize> {
    let graph = inst.graph();
    let rotors = all_rotors(inst);
    let index: HashMap<Vec<usize>, usize> = rotors
        .iter()
        .enumerate()
        .map(|(i, r)| (inst.rotor_indices(r), i))
        .collect();
    let mut class = vec![usize::MAX; rotors.len()];
    let mut next = 0;
    for start in 0..rotors.len() {
        if class[start] != usize::MAX {
            continue;
        }
        class[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let rho = &rotors[i];
            let moves = circuits(graph, rho)
                .into_iter()
                .map(|c| (c, PushDirection::Positive))
                .chain(negative_circuits(graph, rho).into_iter().map(|c| (c, PushDirection::Negative)));
            for (c, dir) in moves {
                let pushed = cycle_push(graph, rho, &c, dir).unwrap();
                let j = index[&inst.rotor_indices(&pushed)];
                if class[j] == usize::MAX {
                    class[j] = next;
                    queue.push_back(j);
                }
            }
        }
        next += 1;
    }
    class
}

/// `g(R)` as the image of `g` over every rotor configuration.
pub fn brute_gr(inst: &PathInstance) -> BTreeSet<BigInt> {
    all_rotors(inst)
        .iter()
        .map(|r| inst.arcmonic_g(r).unwrap())
        .collect()
}

/// Small-integer state of a rotor walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub positions: Vec<usize>,
    pub counts: Vec<i64>,
}

impl Walk {
    pub fn new(graph: &Multigraph, rotor: &RotorConfig, counts: &[i64]) -> Self {
        Walk {
            positions: (0..graph.vertex_count()).map(|v| rotor.position(v)).collect(),
            counts: counts.to_vec(),
        }
    }

    fn head(&self, graph: &Multigraph, u: usize) -> usize {
        graph.arc(graph.rotor_order(u)[self.positions[u]]).head
    }

    /// One particle leaves `u` along its rotor arc, then the rotor advances.
    pub fn plus(&mut self, graph: &Multigraph, u: usize) {
        let v = self.head(graph, u);
        self.counts[v] += 1;
        self.counts[u] -= 1;
        self.positions[u] = (self.positions[u] + 1) % graph.out_degree(u);
    }

    /// Inverse of [`Walk::plus`].
    pub fn minus(&mut self, graph: &Multigraph, u: usize) {
        let deg = graph.out_degree(u);
        self.positions[u] = (self.positions[u] + deg - 1) % deg;
        let v = self.head(graph, u);
        self.counts[v] -= 1;
        self.counts[u] += 1;
    }

    pub fn rotor(&self, graph: &Multigraph) -> RotorConfig {
        let non_sink: Vec<usize> = graph.non_sinks().map(|v| self.positions[v]).collect();
        RotorConfig::from_non_sink_positions(graph, &non_sink).unwrap()
    }
}

/// Routes every particle and antiparticle to the sinks one unit at a time:
/// particles first with the forward walk, then antiparticles with the
/// reverse walk. Returns the final walk and the per-vertex routing count.
pub fn naive_full_route(graph: &Multigraph, rotor: &RotorConfig, counts: &[i64]) -> (Walk, Vec<i64>) {
    let mut walk = Walk::new(graph, rotor, counts);
    let mut routing = vec![0i64; graph.vertex_count()];
    while let Some(u) = graph.non_sinks().find(|&u| walk.counts[u] > 0) {
        walk.plus(graph, u);
        routing[u] += 1;
    }
    while let Some(u) = graph.non_sinks().find(|&u| walk.counts[u] < 0) {
        walk.minus(graph, u);
        routing[u] -= 1;
    }
    (walk, routing)
}

/// Whether some firing vector `q ∈ [-bound, bound]^{V₀}` maps `a` to `b`.
pub fn firing_related(graph: &Multigraph, a: &[i64], b: &[i64], bound: i64) -> bool {
    let non_sinks: Vec<usize> = graph.non_sinks().collect();
    let mut q = vec![-bound; non_sinks.len()];
    loop {
        let mut sigma = a.to_vec();
        for (&u, &times) in non_sinks.iter().zip(&q) {
            sigma[u] -= times * graph.out_degree(u) as i64;
            for &arc in graph.rotor_order(u) {
                sigma[graph.arc(arc).head] += times;
            }
        }
        if sigma == b {
            return true;
        }
        let mut i = 0;
        loop {
            if i == q.len() {
                return false;
            }
            if q[i] < bound {
                q[i] += 1;
                break;
            }
            q[i] = -bound;
            i += 1;
        }
    }
}

/// Whether `(ρ', σ')` is reachable from `(ρ, σ)` by routing operators,
/// searching routing vectors `t + deg·q` with `t ∈ [0, deg)` fixed by the
/// rotors and `q` bounded.
pub fn routing_related(
    graph: &Multigraph,
    (rho, sigma): (&RotorConfig, &[i64]),
    (rho2, sigma2): (&RotorConfig, &[i64]),
    bound: i64,
) -> bool {
    let mut walk = Walk::new(graph, rho, sigma);
    for u in graph.non_sinks() {
        let deg = graph.out_degree(u);
        let t = (rho2.position(u) + deg - rho.position(u)) % deg;
        for _ in 0..t {
            walk.plus(graph, u);
        }
    }
    firing_related(graph, &walk.counts, sigma2, bound)
}

pub fn to_i64s(p: &ParticleConfig) -> Vec<i64> {
    p.counts()
        .iter()
        .map(|c| i64::try_from(c).expect("small count"))
        .collect()
}
