//! Two-state sequential transducer computing the Engel-machine
//! stabilization of words in `⟦0,y⟧* · 0`.
//!
//! State `a` means no incoming carry, state `b` means `x` chips arrive from
//! the previous vertex (which fired once):
//!
//! | state | input         | output        | next |
//! |-------|---------------|---------------|------|
//! | a     | `⟦0,y-1⟧`     | same          | a    |
//! | a     | `y`           | `0`           | b    |
//! | b     | `⟦y-x,y⟧`     | `i - y + x`   | b    |
//! | b     | `⟦0,y-x-1⟧`   | `i + x`       | a    |

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::machine::DigitWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Carry {
    None,
    Pending,
}

/// Runs the transducer on `word`, which must have symbols in `⟦0,y⟧` and a
/// final 0. The output has the same length, with symbols in `⟦0,y-1⟧`
/// except possibly the final one (which is `0` or `x`).
pub fn transducer_run(x: u64, y: u64, word: &DigitWord) -> Result<DigitWord> {
    let digits = word.digits();
    let out_of_range = |position: usize| Error::SymbolOutOfRange {
        position,
        symbol: digits[position].to_string(),
    };
    match digits.last() {
        Some(last) if last.is_zero() => {}
        Some(_) => return Err(out_of_range(digits.len() - 1)),
        None => return Ok(word.clone()),
    }
    let mut state = Carry::None;
    let mut out = Vec::with_capacity(digits.len());
    for (position, d) in digits.iter().enumerate() {
        let i = d
            .to_u64()
            .filter(|&i| i <= y)
            .ok_or_else(|| out_of_range(position))?;
        let (symbol, next) = match state {
            Carry::None if i < y => (i, Carry::None),
            Carry::None => (0, Carry::Pending),
            Carry::Pending if i >= y - x => (i + x - y, Carry::Pending),
            Carry::Pending => (i + x, Carry::None),
        };
        out.push(BigInt::from(symbol));
        state = next;
    }
    Ok(DigitWord::new(out))
}
