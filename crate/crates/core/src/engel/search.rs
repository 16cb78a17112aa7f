//! Membership in `g(R)` and the search for the unique lift of a residue.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::automata::match_ld;
use super::machine::{EngelMachine, OpCounter};
use crate::error::{Error, Result};

/// How [`unique_k_mod_f`] scans the window `k ∈ [0, x-1]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Bisection on the sign of the last digit of `c[v + kF]`, which is
    /// nondecreasing in `k`.
    #[default]
    Bisection,
    /// Membership test for every `k` in order.
    Linear,
}

/// `v ∈ g(R)`: the stable decomposition of `v` is matched by `e_d`.
pub fn membership_gr(machine: &EngelMachine, v: &BigInt) -> bool {
    membership_gr_counted(machine, v, &mut OpCounter::default())
}

pub fn membership_gr_counted(machine: &EngelMachine, v: &BigInt, counter: &mut OpCounter) -> bool {
    counter.membership_tests += 1;
    let c = machine.stable_decompose_counted(v, counter);
    match_ld(machine.x(), machine.y(), c.digits())
}

/// The unique `k` with `v + kF ∈ g(R)`, together with that value, for
/// `0 ≤ v < F`. Every value of `g(R)` is below `xF`, so `k ≤ x - 1`.
pub fn unique_k_mod_f(
    machine: &EngelMachine,
    v: &BigInt,
    mode: SearchMode,
    counter: &mut OpCounter,
) -> Result<(u64, BigInt)> {
    let f = machine.f();
    if v.is_negative() || v >= f {
        return Err(Error::IndexOutOfRange(format!("{v} not in [0, {f})")));
    }
    let lift = |k: u64| v + f * k;
    let x = machine.x();
    let k = match mode {
        SearchMode::Bisection => {
            let (mut lo, mut hi) = (0, x - 1);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                let c = machine.stable_decompose_counted(&lift(mid), counter);
                if c.last().is_negative() {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            let value = lift(lo);
            if !membership_gr_counted(machine, &value, counter) {
                return Err(Error::NotAnArcmonicValue(value.to_string()));
            }
            lo
        }
        SearchMode::Linear => (0..x)
            .find(|&k| membership_gr_counted(machine, &lift(k), counter))
            .ok_or_else(|| Error::NotAnArcmonicValue(v.to_string()))?,
    };
    Ok((k, lift(k)))
}

/// All of `g(R)` in increasing order, by testing every `v ∈ [0, max g]`.
pub fn scan_gr(machine: &EngelMachine) -> Vec<BigInt> {
    let max: BigInt = (1..=machine.n()).map(|k| machine.d(k)).sum::<BigInt>() * machine.x();
    let mut out = Vec::new();
    let mut v = BigInt::zero();
    while v <= max {
        if membership_gr(machine, &v) {
            out.push(v.clone());
        }
        v += 1;
    }
    out
}
