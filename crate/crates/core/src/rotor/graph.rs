use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An arc of a multigraph. Arcs are identified by their index in
/// [`Multigraph::arcs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

/// Raw description of a rotor graph, validated by [`Multigraph::new`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertex_count: usize,
    pub sinks: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
    /// For every vertex, its outgoing arc ids in cyclic rotor order. Sinks
    /// carry an empty list.
    pub rotor_order: Vec<Vec<usize>>,
}

/// A stopping directed multigraph together with a rotor order.
///
/// Immutable once built. The rotor order at a vertex `u` is a cyclic
/// sequence of the arcs leaving `u`; rotor configurations store a position
/// in that sequence, so advancing a rotor is `pos + 1 mod deg(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    is_sink: Vec<bool>,
    sinks: Vec<usize>,
    arcs: Vec<Arc>,
    rotor_order: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(spec: GraphSpec) -> Result<Self> {
        let GraphSpec {
            vertex_count,
            sinks,
            arcs,
            rotor_order,
        } = spec;

        let check_vertex = |v: usize| {
            if v < vertex_count {
                Ok(())
            } else {
                Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                })
            }
        };

        let mut is_sink = vec![false; vertex_count];
        for &s in &sinks {
            check_vertex(s)?;
            is_sink[s] = true;
        }
        let arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|(tail, head)| {
                check_vertex(tail)?;
                check_vertex(head)?;
                Ok(Arc { tail, head })
            })
            .collect::<Result<_>>()?;
        for (id, arc) in arcs.iter().enumerate() {
            if is_sink[arc.tail] {
                return Err(Error::SinkWithOutArc {
                    vertex: arc.tail,
                    arc: id,
                });
            }
        }
        if rotor_order.len() != vertex_count {
            return Err(Error::DimensionMismatch {
                expected: vertex_count,
                found: rotor_order.len(),
            });
        }

        let mut out_degree = vec![0usize; vertex_count];
        for arc in &arcs {
            out_degree[arc.tail] += 1;
        }
        let mut seen = vec![false; arcs.len()];
        for (u, order) in rotor_order.iter().enumerate() {
            if is_sink[u] {
                if !order.is_empty() {
                    return Err(Error::SinkWithOutArc {
                        vertex: u,
                        arc: order[0],
                    });
                }
                continue;
            }
            if order.is_empty() {
                return Err(Error::EmptyRotorOrder { vertex: u });
            }
            if order.len() != out_degree[u] {
                return Err(Error::BadRotorOrder { vertex: u });
            }
            for &a in order {
                if a >= arcs.len() {
                    return Err(Error::ArcOutOfRange {
                        arc: a,
                        count: arcs.len(),
                    });
                }
                if arcs[a].tail != u || seen[a] {
                    return Err(Error::BadRotorOrder { vertex: u });
                }
                seen[a] = true;
            }
        }

        let mut sinks: Vec<usize> = (0..vertex_count).filter(|&v| is_sink[v]).collect();
        sinks.dedup();
        let graph = Multigraph {
            is_sink,
            sinks,
            arcs,
            rotor_order,
        };
        graph.check_stopping()?;
        Ok(graph)
    }

    /// Reverse breadth-first search from the sinks.
    fn check_stopping(&self) -> Result<()> {
        let n = self.vertex_count();
        let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
        for arc in &self.arcs {
            incoming[arc.head].push(arc.tail);
        }
        let mut reached = self.is_sink.clone();
        let mut queue: VecDeque<usize> = self.sinks.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for &t in &incoming[v] {
                if !reached[t] {
                    reached[t] = true;
                    queue.push_back(t);
                }
            }
        }
        match reached.iter().position(|r| !r) {
            Some(vertex) => Err(Error::NonStopping { vertex }),
            None => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.is_sink.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> Arc {
        self.arcs[id]
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.is_sink[v]
    }

    /// Non-sink vertices in increasing order.
    pub fn non_sinks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&v| !self.is_sink[v])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.rotor_order[v].len()
    }

    /// Outgoing arcs of `v` in rotor order.
    pub fn rotor_order(&self, v: usize) -> &[usize] {
        &self.rotor_order[v]
    }

    pub(crate) fn check_non_sink(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            });
        }
        if self.is_sink[v] {
            return Err(Error::SinkVertex { vertex: v });
        }
        Ok(())
    }

    /// Head of the arc at `position` in the rotor order of `v`.
    pub(crate) fn head_at(&self, v: usize, position: usize) -> usize {
        self.arcs[self.rotor_order[v][position]].head
    }

    /// Returns the spec this graph was built from.
    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertex_count: self.vertex_count(),
            sinks: self.sinks.clone(),
            arcs: self.arcs.iter().map(|a| (a.tail, a.head)).collect(),
            rotor_order: self.rotor_order.clone(),
        }
    }
}
