//! Hard-coded automata over the integer alphabets of digit words.
//!
//! * `L_a = ⟦1,y⟧* · 0 · ⟦0,x-1⟧* · 0`, the images of acyclic rotor
//!   configurations;
//! * `L_d = ⟦0,y-1⟧* · 0 · ⟦1,x⟧* · 0`, the stable decompositions of
//!   arcmonic values.
//!
//! Both are recognized by three-state DFAs; a missing transition rejects.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Symbol as an in-range integer, or `None` for anything negative or huge.
fn symbol(d: &BigInt) -> Option<u64> {
    d.to_u64()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AcyclicState {
    /// Reading the `⟦1,y⟧*` prefix.
    Prefix,
    /// After the separating 0; last symbol was nonzero.
    Tail,
    /// After the separating 0; last symbol was 0. Accepting.
    TailZero,
}

/// Membership in `L_a`.
pub fn match_la(x: u64, y: u64, word: &[BigInt]) -> bool {
    let mut state = AcyclicState::Prefix;
    for d in word {
        let Some(s) = symbol(d) else { return false };
        state = match (state, s) {
            (AcyclicState::Prefix, 0) => AcyclicState::Tail,
            (AcyclicState::Prefix, s) if s <= y => AcyclicState::Prefix,
            (AcyclicState::Tail | AcyclicState::TailZero, 0) => AcyclicState::TailZero,
            (AcyclicState::Tail | AcyclicState::TailZero, s) if s < x => AcyclicState::Tail,
            _ => return false,
        };
    }
    state == AcyclicState::TailZero
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DecompState {
    /// `{Aa}`: initial.
    Start,
    /// `{Ab, Ba}`: just read a 0 or a run of `⟦1,x⟧` after one.
    AfterZero,
    /// `{Ab, Ba, Ca}`: accepting.
    Accept,
}

/// Membership in `L_d` (the minimal DFA of `φ(L_a)`).
pub fn match_ld(x: u64, y: u64, word: &[BigInt]) -> bool {
    let mut state = DecompState::Start;
    for d in word {
        let Some(s) = symbol(d) else { return false };
        if s >= y {
            return false;
        }
        state = match (state, s) {
            (DecompState::Start, 0) => DecompState::AfterZero,
            (DecompState::Start, _) => DecompState::Start,
            (DecompState::AfterZero | DecompState::Accept, 0) => DecompState::Accept,
            (DecompState::AfterZero | DecompState::Accept, s) if s <= x => DecompState::AfterZero,
            (DecompState::AfterZero | DecompState::Accept, _) => DecompState::Start,
        };
    }
    state == DecompState::Accept
}
