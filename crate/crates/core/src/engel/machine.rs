use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{ExtendedGcd, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::path::PathInstance;
use crate::rotor::{GraphSpec, Multigraph};

/// A configuration `c = (c_0, …, c_{n+1})` of the Engel machine, read as a
/// digit word. The sink `s` has value 0 under `h_E` and is not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitWord(Vec<BigInt>);

impl DigitWord {
    pub fn new(digits: Vec<BigInt>) -> Self {
        DigitWord(digits)
    }

    pub fn from_i64s(digits: &[i64]) -> Self {
        DigitWord(digits.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        DigitWord(vec![BigInt::zero(); len])
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The coordinate on `u_{n+1}`.
    pub fn last(&self) -> &BigInt {
        self.0.last().expect("digit words are never empty")
    }

    pub fn into_digits(self) -> Vec<BigInt> {
        self.0
    }
}

/// Formats as `(c_0,c_1,…,c_{n+1})`.
impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Work counters for the digit machinery.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    /// Calls to the stable decomposition.
    pub decompositions: u64,
    /// Digit extraction steps; each is a constant number of big-integer
    /// operations.
    pub digit_steps: u64,
    /// Membership tests in `g(R)`.
    pub membership_tests: u64,
}

/// The Engel machine `E^{x,y}_n`: vertices `u_0..u_{n+1}` and a sink `s`;
/// each `u_i` (`i ≤ n`) has `x` arcs to `u_{i+1}` and `y - x` arcs to `s`.
/// Firing `u_k` removes `y` chips from `u_k` and adds `x` to `u_{k+1}`.
///
/// `h_E(u_k) = d_k = x^{n-k} y^k`, with `d_{n+1} = y^{n+1}/x` kept as the
/// exact pair `(y^{n+1}, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngelMachine {
    n: usize,
    x: u64,
    y: u64,
    /// `x^i` for `i ∈ [0, n+1]`.
    x_pows: Vec<BigInt>,
    d: Vec<BigInt>,
    y_top: BigInt,
    f: BigInt,
    /// `(x^{n-k})⁻¹ mod y` for `k ∈ [0, n]`.
    inv_x_pow: Vec<u64>,
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let ExtendedGcd { gcd, x, .. } = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(gcd, 1);
    x.rem_euclid(m as i128) as u64
}

impl EngelMachine {
    /// Requires `0 < x < y` coprime.
    pub fn new(n: usize, x: u64, y: u64) -> Result<Self> {
        if x == 0 || x >= y || x.gcd(&y) != 1 {
            return Err(Error::InvalidInstance(format!(
                "Engel machine needs coprime 0 < x < y, got x={x}, y={y}"
            )));
        }
        let (bx, by) = (BigInt::from(x), BigInt::from(y));
        let mut x_pows = vec![BigInt::one(); n + 2];
        let mut y_pows = vec![BigInt::one(); n + 2];
        for i in 1..=n + 1 {
            x_pows[i] = &x_pows[i - 1] * &bx;
            y_pows[i] = &y_pows[i - 1] * &by;
        }
        let d: Vec<BigInt> = (0..=n).map(|k| &x_pows[n - k] * &y_pows[k]).collect();
        let f = d.iter().sum();
        let inv_x = mod_inverse(x % y, y);
        let mut inv_x_pow = vec![1 % y; n + 1];
        for k in (0..n).rev() {
            inv_x_pow[k] = ((inv_x_pow[k + 1] as u128 * inv_x as u128) % y as u128) as u64;
        }
        Ok(EngelMachine {
            n,
            x,
            y,
            x_pows,
            d,
            y_top: y_pows.pop().expect("n + 2 powers"),
            f,
            inv_x_pow,
        })
    }

    pub fn for_instance(instance: &PathInstance) -> Result<Self> {
        Self::new(instance.n(), instance.x(), instance.y())
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

    /// Word length `n + 2`.
    pub fn word_len(&self) -> usize {
        self.n + 2
    }

    pub fn d(&self, k: usize) -> &BigInt {
        &self.d[k]
    }

    /// `F = Σ_{k=0}^{n} d_k`.
    pub fn f(&self) -> &BigInt {
        &self.f
    }

    fn check_len(&self, word: &DigitWord) -> Result<()> {
        if word.len() != self.word_len() {
            return Err(Error::DimensionMismatch {
                expected: self.word_len(),
                found: word.len(),
            });
        }
        Ok(())
    }

    /// `h_E(c) = Σ_{k≤n} c_k d_k + (c_{n+1}/x)·y^{n+1}`. Fails when the last
    /// digit is not a multiple of `x`, since the value would not be an
    /// integer.
    pub fn h_e(&self, word: &DigitWord) -> Result<BigInt> {
        self.check_len(word)?;
        let (quotient, rest) = word.last().div_rem(&BigInt::from(self.x));
        if !rest.is_zero() {
            return Err(Error::NonIntegralValue(word.last().to_string()));
        }
        let head: BigInt = word.0[..=self.n].iter().zip(&self.d).map(|(c, d)| c * d).sum();
        Ok(head + quotient * &self.y_top)
    }

    /// True when `c_k ∈ [0, y-1]` for `k ≤ n` and `c_{n+1} ∈ xZ`.
    pub fn is_stable_word(&self, word: &DigitWord) -> bool {
        word.len() == self.word_len()
            && word.0[..=self.n]
                .iter()
                .all(|c| !c.is_negative() && *c < BigInt::from(self.y))
            && word.last().is_multiple_of(&BigInt::from(self.x))
    }

    /// The stable decomposition `c[v]`: the unique word with digits
    /// `c_k ∈ [0, y-1]` (`k ≤ n`), `c_{n+1} ∈ xZ` and `h_E(c) = v`.
    ///
    /// Digits are peeled off from the low end: with
    /// `w_k = Σ_{i≥k} c_i x^{n-i} y^{i-k} + (c_{n+1}/x) y^{n+1-k}`, every
    /// term but the first is divisible by `y`, so
    /// `c_k ≡ w_k · (x^{n-k})⁻¹ (mod y)` and `w_{k+1} = (w_k - c_k x^{n-k})/y`.
    /// The remainder `w_{n+1}` is `c_{n+1}/x`. Works for negative `v` too, in
    /// which case the last digit is negative.
    pub fn stable_decompose(&self, v: &BigInt) -> DigitWord {
        self.stable_decompose_counted(v, &mut OpCounter::default())
    }

    pub fn stable_decompose_counted(&self, v: &BigInt, counter: &mut OpCounter) -> DigitWord {
        counter.decompositions += 1;
        let mut digits = Vec::with_capacity(self.word_len());
        let mut w = v.clone();
        for k in 0..=self.n {
            counter.digit_steps += 1;
            let digit = BigInt::from(self.residue_digit(k, &w));
            self.peel(k, &mut w, &digit);
            digits.push(digit);
        }
        digits.push(w * self.x);
        DigitWord(digits)
    }

    /// The digit in `[0, y-1]` at position `k` forced by `w ≡ c_k x^{n-k} (mod y)`.
    pub(crate) fn residue_digit(&self, k: usize, w: &BigInt) -> u64 {
        let residue = w.mod_floor(&BigInt::from(self.y)).to_u64().expect("residue below y");
        ((residue as u128 * self.inv_x_pow[k] as u128) % self.y as u128) as u64
    }

    /// `w ← (w - c_k x^{n-k}) / y`; the caller guarantees exact division.
    pub(crate) fn peel(&self, k: usize, w: &mut BigInt, digit: &BigInt) {
        *w -= digit * &self.x_pows[self.n - k];
        debug_assert!(w.is_multiple_of(&BigInt::from(self.y)));
        *w /= self.y;
    }

    /// Chip-firing stabilization in `E^{x,y}_n` of a word that is
    /// nonnegative on `u_0..u_n`. Firing only pushes chips rightwards, so a
    /// single left-to-right sweep that fires each vertex `⌊c_k / y⌋` times is
    /// a maximal legal firing sequence. Preserves `h_E`.
    pub fn stabilize(&self, word: &DigitWord) -> Result<DigitWord> {
        self.check_len(word)?;
        if let Some(vertex) = word.0[..=self.n].iter().position(Signed::is_negative) {
            return Err(Error::NegativeInput { vertex });
        }
        let by = BigInt::from(self.y);
        let mut c = word.0.clone();
        for k in 0..=self.n {
            let (times, rest) = c[k].div_rem(&by);
            if !times.is_zero() {
                c[k] = rest;
                c[k + 1] += times * self.x;
            }
        }
        Ok(DigitWord(c))
    }

    /// Stable decomposition by the existence construction: pick `α ≥ 0`, `β`
    /// with `α x^{n+1} + β y^{n+1} = 1`, start from `αxv` chips on `u_0` and
    /// `βxv` on `u_{n+1}` (worth exactly `v`), then stabilize.
    ///
    /// Independent of the modular extraction in [`Self::stable_decompose`];
    /// kept as a cross-check.
    pub fn decompose_by_stabilization(&self, v: &BigUint) -> DigitWord {
        let x_top = &self.x_pows[self.n + 1];
        let ExtendedGcd { gcd, x: alpha, .. } = x_top.extended_gcd(&self.y_top);
        debug_assert!(gcd.is_one());
        let alpha = alpha.mod_floor(&self.y_top);
        let beta = (BigInt::one() - &alpha * x_top) / &self.y_top;
        let xv = BigInt::from_biguint(Sign::Plus, v.clone()) * self.x;
        let mut start = DigitWord::zeros(self.word_len());
        start.0[0] = alpha * &xv;
        start.0[self.n + 1] = beta * xv;
        self.stabilize(&start)
            .expect("start word is nonnegative on u_0..u_n")
    }

    /// The machine as a general multigraph: `u_k` is vertex `k` and `s` is
    /// vertex `n + 2`. Rotor order lists the `x` forward arcs first.
    pub fn multigraph(&self) -> Result<Multigraph> {
        let s = self.n + 2;
        let mut arcs = Vec::new();
        let mut rotor_order = Vec::with_capacity(self.n + 3);
        for k in 0..=self.n {
            let start = arcs.len();
            arcs.extend(std::iter::repeat((k, k + 1)).take(self.x as usize));
            arcs.extend(std::iter::repeat((k, s)).take((self.y - self.x) as usize));
            rotor_order.push((start..arcs.len()).collect());
        }
        rotor_order.extend([Vec::new(), Vec::new()]);
        Multigraph::new(GraphSpec {
            vertex_count: self.n + 3,
            sinks: vec![self.n + 1, s],
            arcs,
            rotor_order,
        })
    }
}
