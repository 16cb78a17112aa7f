//! Instance files.
//!
//! Path form: `{"n", "x", "y", "rotor", "sigma"}` where `rotor` lists the
//! arc index `j_k` of `u_1..u_n` and `sigma` has `n + 2` entries.
//!
//! General form: `{"vertices", "sinks", "arcs", "rotor_order", "rotor",
//! "sigma"}`. `arcs` is a list of `[tail, head]` pairs, `rotor_order` and
//! `rotor` are given for the non-sink vertices in increasing order, and
//! `sigma` has one entry per vertex.
//!
//! Particle counts and other big values are decimal strings; plain JSON
//! integers are accepted on input.

use std::fmt;
use std::path::Path;

use rotorpath_core::{path_multigraph, BigInt, GraphSpec, Multigraph, ParticleConfig, PathInstance, RotorConfig};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::CliError;

/// Arbitrary-precision integer carried as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal(pub BigInt);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct DecimalVisitor;

        impl Visitor<'_> for DecimalVisitor {
            type Value = Decimal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Decimal, E> {
                Err(E::custom(format!("{v} is not exact; write big integers as decimal strings")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Decimal, E> {
                let valid = !v.is_empty()
                    && v.strip_prefix('-').unwrap_or(v).bytes().all(|b| b.is_ascii_digit())
                    && v != "-";
                if !valid {
                    return Err(E::custom(format!("{v:?} is not a decimal integer")));
                }
                v.parse().map(Decimal).map_err(E::custom)
            }
        }

        d.deserialize_any(DecimalVisitor)
    }
}

fn decimals(values: &[BigInt]) -> Vec<Decimal> {
    values.iter().cloned().map(Decimal).collect()
}

fn big_ints(values: &[Decimal]) -> Vec<BigInt> {
    values.iter().map(|d| d.0.clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathForm {
    pub n: usize,
    pub x: u64,
    pub y: u64,
    pub rotor: Vec<usize>,
    pub sigma: Vec<Decimal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralForm {
    pub vertices: usize,
    pub sinks: Vec<usize>,
    pub arcs: Vec<[usize; 2]>,
    pub rotor_order: Vec<Vec<usize>>,
    pub rotor: Vec<usize>,
    pub sigma: Vec<Decimal>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Path(PathForm),
    General(GeneralForm),
}

/// An instance ready for the engine.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Multigraph,
    pub rotor: RotorConfig,
    pub particles: ParticleConfig,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
        let object = value
            .as_object()
            .ok_or_else(|| CliError::Schema("instance must be a JSON object".into()))?;
        let schema = |e: serde_json::Error| CliError::Schema(e.to_string());
        if object.contains_key("n") {
            serde_json::from_value(value).map(InstanceFile::Path).map_err(schema)
        } else if object.contains_key("vertices") {
            serde_json::from_value(value).map(InstanceFile::General).map_err(schema)
        } else {
            Err(CliError::Schema(
                "instance needs either \"n\" (path form) or \"vertices\" (general form)".into(),
            ))
        }
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Schema(msg) => CliError::Schema(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Canonical text: pretty JSON with fixed field order and a final
    /// newline.
    pub fn to_canonical(&self) -> String {
        let mut text = match self {
            InstanceFile::Path(p) => serde_json::to_string_pretty(p),
            InstanceFile::General(g) => serde_json::to_string_pretty(g),
        }
        .expect("instance serializes");
        text.push('\n');
        text
    }

    pub fn path_form(&self) -> Result<&PathForm, CliError> {
        match self {
            InstanceFile::Path(p) => Ok(p),
            InstanceFile::General(_) => Err(CliError::Schema(
                "this command needs a path-form instance".into(),
            )),
        }
    }

    /// Builds the engine view. Works for any stopping graph, including path
    /// parameters the invariant solver rejects.
    pub fn load(&self) -> Result<Loaded, CliError> {
        match self {
            InstanceFile::Path(p) => {
                let graph = path_multigraph(p.n, p.x, p.y)?;
                finish(graph, &p.rotor, &p.sigma)
            }
            InstanceFile::General(g) => {
                let mut sinks = g.sinks.clone();
                sinks.sort_unstable();
                sinks.dedup();
                if let Some(&s) = sinks.iter().find(|&&s| s >= g.vertices) {
                    return Err(CliError::Schema(format!("sink {s} is not a vertex")));
                }
                let non_sinks: Vec<usize> = (0..g.vertices).filter(|v| sinks.binary_search(v).is_err()).collect();
                if g.rotor_order.len() != non_sinks.len() {
                    return Err(CliError::Schema(format!(
                        "rotor_order has {} lists for {} non-sink vertices",
                        g.rotor_order.len(),
                        non_sinks.len()
                    )));
                }
                let mut rotor_order = vec![Vec::new(); g.vertices];
                for (&v, order) in non_sinks.iter().zip(&g.rotor_order) {
                    rotor_order[v] = order.clone();
                }
                let graph = Multigraph::new(GraphSpec {
                    vertex_count: g.vertices,
                    sinks,
                    arcs: g.arcs.iter().map(|&[t, h]| (t, h)).collect(),
                    rotor_order,
                })?;
                finish(graph, &g.rotor, &g.sigma)
            }
        }
    }

    /// The solver's view of a path-form instance.
    pub fn path_instance(&self) -> Result<(PathInstance, RotorConfig, ParticleConfig), CliError> {
        let p = self.path_form()?;
        let inst = PathInstance::from_params(p.n, p.x, p.y)?;
        let rotor = inst.rotor(&p.rotor)?;
        let particles = ParticleConfig::new(big_ints(&p.sigma));
        particles.check_for(inst.graph())?;
        Ok((inst, rotor, particles))
    }

    pub fn from_path(inst: &PathInstance, rotor: &RotorConfig, particles: &ParticleConfig) -> Self {
        InstanceFile::Path(PathForm {
            n: inst.n(),
            x: inst.x(),
            y: inst.y(),
            rotor: inst.rotor_indices(rotor),
            sigma: decimals(particles.counts()),
        })
    }
}

fn finish(graph: Multigraph, rotor: &[usize], sigma: &[Decimal]) -> Result<Loaded, CliError> {
    let rotor = RotorConfig::from_non_sink_positions(&graph, rotor)?;
    let particles = ParticleConfig::new(big_ints(sigma));
    particles.check_for(&graph)?;
    Ok(Loaded {
        graph,
        rotor,
        particles,
    })
}
