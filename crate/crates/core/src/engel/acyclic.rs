//! The correspondence `ψ` between acyclic rotor configurations of
//! `P^{x,y}_n` and the words of `L_a^n`.
//!
//! A rotor configuration on the path is acyclic exactly when it reads
//! `left* right*` from `u_1` to `u_n`: a right-pointing `u_i` followed by a
//! left-pointing `u_{i+1}` is a circuit.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::automata::match_la;
use super::machine::{DigitWord, EngelMachine};
use crate::error::{Error, Result};
use crate::path::PathInstance;
use crate::rotor::{find_circuit, RotorConfig};

/// `ψ(ρ)`, with `h_E(ψ(ρ)) = g(ρ)`.
pub fn psi(inst: &PathInstance, rotor: &RotorConfig) -> Result<DigitWord> {
    rotor.check_for(inst.graph())?;
    if find_circuit(inst.graph(), rotor).is_some() {
        return Err(Error::NotAcyclic);
    }
    let (n, x, y) = (inst.n(), inst.x() as usize, inst.y() as usize);
    let j = inst.rotor_indices(rotor);
    // k is 1-based: the first right-pointing vertex, or n + 1.
    let k = j.iter().position(|&jk| jk < x).map_or(n + 1, |p| p + 1);
    let mut c = vec![0usize; n + 2];
    for i in 1..k {
        c[i - 1] = x + y - j[i - 1];
    }
    c[k..=n].copy_from_slice(&j[k - 1..]);
    let word = DigitWord::new(c.into_iter().map(BigInt::from).collect());
    debug_assert!(match_la(inst.x(), inst.y(), word.digits()));
    Ok(word)
}

/// `ψ⁻¹(c)` for a word `c ∈ L_a^n`.
pub fn psi_inv(inst: &PathInstance, word: &DigitWord) -> Result<RotorConfig> {
    let n = inst.n();
    if word.len() != n + 2 || !match_la(inst.x(), inst.y(), word.digits()) {
        return Err(Error::NotInLa);
    }
    let c: Vec<usize> = word
        .digits()
        .iter()
        .map(|d| d.to_usize().expect("L_a symbols are small"))
        .collect();
    let k = c.iter().position(|&d| d == 0).expect("L_a words contain 0") + 1;
    let (x, y) = (inst.x() as usize, inst.y() as usize);
    let j: Vec<usize> = (1..=n)
        .map(|i| if i < k { x + y - c[i - 1] } else { c[i] })
        .collect();
    inst.rotor(&j)
}

/// The unique acyclic configuration with `g(ρ) = v`.
///
/// Tries each position `p` of the separating zero of an `L_a` word. Digits
/// before `p` lie in `[1, y]` and digits after it in `[0, x-1]`, so every
/// digit is forced by `v` modulo `y` once `p` is fixed, and the remainder
/// must vanish at the end.
pub fn acyclic_representative(inst: &PathInstance, v: &BigInt) -> Result<RotorConfig> {
    let not_arcmonic = || Error::NotAnArcmonicValue(v.to_string());
    if v.is_negative() {
        return Err(not_arcmonic());
    }
    if inst.is_unit() {
        return unit_representative(inst, v).ok_or_else(not_arcmonic);
    }
    let machine = EngelMachine::for_instance(inst)?;
    let (n, x, y) = (inst.n(), inst.x(), inst.y());
    // Remainders along the all-prefix reading: prefix[k] is what is left
    // before reading position k when positions < k are in [1, y].
    let mut prefix = Vec::with_capacity(n + 1);
    let mut left_digits = Vec::with_capacity(n + 1);
    let mut w = v.clone();
    for k in 0..=n {
        prefix.push(w.clone());
        let r = machine.residue_digit(k, &w);
        let digit = BigInt::from(if r == 0 { y } else { r });
        machine.peel(k, &mut w, &digit);
        left_digits.push(digit);
    }
    for p in 0..=n {
        let mut w = prefix[p].clone();
        if machine.residue_digit(p, &w) != 0 {
            continue;
        }
        machine.peel(p, &mut w, &BigInt::zero());
        let mut digits: Vec<BigInt> = left_digits[..p].to_vec();
        digits.push(BigInt::zero());
        let mut fits = true;
        for k in p + 1..=n {
            let d = machine.residue_digit(k, &w);
            if d >= x {
                fits = false;
                break;
            }
            let d = BigInt::from(d);
            machine.peel(k, &mut w, &d);
            digits.push(d);
        }
        if !fits || !w.is_zero() {
            continue;
        }
        digits.push(BigInt::zero());
        let word = DigitWord::new(digits);
        if machine.h_e(&word)? != *v {
            continue;
        }
        return psi_inv(inst, &word);
    }
    Err(not_arcmonic())
}

/// On `P^{1,1}_n`, `g` counts left-pointing rotors and the acyclic
/// configurations are `left^v right^{n-v}`.
fn unit_representative(inst: &PathInstance, v: &BigInt) -> Option<RotorConfig> {
    let v = v.to_usize().filter(|&v| v <= inst.n())?;
    let j: Vec<usize> = (0..inst.n()).map(|i| usize::from(i < v)).collect();
    inst.rotor(&j).ok()
}
