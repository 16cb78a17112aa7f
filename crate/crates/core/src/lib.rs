//! Rotor routing on multigraphs with sinks, and the invariant-based solver
//! for rotor walks on path multigraphs `P^{x,y}_n`.
//!
//! * [`rotor`]: general engine (routing, chip-firing, cycle pushes), used as
//!   the brute-force reference.
//! * [`path`]: path instances with their harmonic `h` and arcmonic `g`.
//! * [`engel`]: digit decompositions on the Engel machine and the automata
//!   deciding membership in `g(R)`.
//! * [`solver`]: number of particles reaching each sink, without routing.

pub mod engel;
pub mod error;
pub mod gen;
pub mod path;
pub mod rotor;
pub mod solver;

pub use engel::{DigitWord, EngelMachine, OpCounter, SearchMode};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use path::{path_multigraph, PathInstance};
pub use rotor::{GraphSpec, Multigraph, ParticleConfig, RotorConfig, RoutingVector};
pub use solver::{solve, solve_11, solve_any, ArrivalSolution};
