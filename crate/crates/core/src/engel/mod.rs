//! Rational-base digit machinery on the Engel machine `E^{x,y}_n`.

mod acyclic;
mod automata;
mod machine;
mod search;
mod transducer;

pub use acyclic::{acyclic_representative, psi, psi_inv};
pub use automata::{match_la, match_ld};
pub use machine::{DigitWord, EngelMachine, OpCounter};
pub use search::{membership_gr, membership_gr_counted, scan_gr, unique_k_mod_f, SearchMode};
pub use transducer::transducer_run;
