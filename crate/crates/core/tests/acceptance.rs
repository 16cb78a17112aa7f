//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::collections::{HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_rotors, big, bigs, push_classes};
use num_integer::Integer;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rotorpath_core::engel::{match_ld, membership_gr, transducer_run};
use rotorpath_core::gen::{random_instance, random_instances, rng_from_seed, GenParams};
use rotorpath_core::rotor::{
    circuits, cycle_push, fire, full_route, is_acyclic, laplacian_column, legal_route_scheduled,
    negative_circuits, routing_minus, routing_plus, unfire, PushDirection, DEFAULT_STEP_BUDGET,
};
use rotorpath_core::solver::{enumerate_gr, solve_with};
use rotorpath_core::{
    solve, solve_11, BigInt, DigitWord, EngelMachine, Multigraph, OpCounter, ParticleConfig,
    PathInstance, RotorConfig, SearchMode,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Coprime `(n, x, y)` with `n ≤ 3` and `x + y ≤ 5`.
fn enumerable() -> Vec<(usize, u64, u64)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for y in 2..=4u64 {
            for x in 1..y {
                if x + y <= 5 && x.gcd(&y) == 1 {
                    out.push((n, x, y));
                }
            }
        }
    }
    out
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed < limit {
        Ok(format!("{:.3} s", elapsed.as_secs_f64()))
    } else {
        Err(format!("took {:.3} s, limit {:.0} s", elapsed.as_secs_f64(), limit.as_secs_f64()))
    }
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let inst = PathInstance::new(3, 2, 3).map_err(|e| e.to_string())?;
    let rho = inst.rotor(&[1, 1, 1]).unwrap();
    let sigma = inst.particles(&[-8, 5, 13, -5, 12]).unwrap();
    let s = solve(&inst, &rho, &sigma).map_err(|e| e.to_string())?;
    let got = (
        inst.harmonic_h(&sigma).unwrap(),
        inst.arcmonic_g(&rho).unwrap(),
        inst.f().clone(),
        s.m_right,
        s.m_left,
        s.final_g,
        s.final_class,
    );
    let want = (big(890), big(57), big(65), big(13), big(4), big(12), big(12));
    ensure!(got == want, "got {got:?}");
    within(start.elapsed(), Duration::from_secs(1))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let inst = PathInstance::unit(3).map_err(|e| e.to_string())?;
    let rho = inst.rotor(&[0, 1, 1]).unwrap();
    let sigma = inst.particles(&[-8, 5, 10, -5, 12]).unwrap();
    ensure!(inst.arcmonic_g(&rho).unwrap() == big(2), "g(ρ) != 2");
    ensure!(inst.harmonic_h(&sigma).unwrap() == big(58), "h(σ) != 58");
    let s = solve_11(&inst, &rho, &sigma).map_err(|e| e.to_string())?;
    ensure!(s.m_right == big(14), "m = {}", s.m_right);
    ensure!(s.final_class == big(0), "class = {}", s.final_class);
    within(start.elapsed(), Duration::from_secs(1))
}

fn ac3() -> Outcome {
    let listing = bigs(&[
        0, 8, 12, 16, 18, 20, 24, 26, 27, 28, 30, 32, 34, 35, 36, 38, 39, 40, 42, 43, 44, 45, 46,
        47, 48, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 66, 67, 68, 69, 70, 71,
        72, 74, 75, 76, 78, 79, 80, 82, 84, 86, 87, 88, 90, 94, 96, 98, 102, 106, 114,
    ]);
    let inst = PathInstance::new(3, 2, 3).unwrap();
    let got = enumerate_gr(&inst, 1000).map_err(|e| e.to_string())?;
    let got: HashSet<BigInt> = got.into_iter().collect();
    let want: HashSet<BigInt> = listing.into_iter().collect();
    ensure!(got == want, "sets differ by {:?}", got.symmetric_difference(&want).collect::<Vec<_>>());
    Ok(format!("{} values", got.len()))
}

fn ac4() -> Outcome {
    let m = EngelMachine::new(3, 2, 3).unwrap();
    let table = [
        [2, 1, 0, 2, -2],
        [0, 1, 0, 2, 0],
        [1, 2, 1, 0, 2],
        [2, 0, 1, 0, 4],
    ];
    for (k, row) in table.iter().enumerate() {
        let v = big(1 + 65 * k as i64);
        let c = m.stable_decompose(&v);
        ensure!(c == DigitWord::from_i64s(row), "c[{v}] = {c}");
        ensure!(membership_gr(&m, &v) == (k == 1), "membership of {v}");
    }
    Ok("4 rows".into())
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let cases = random_instances(0xA5, 500, &GenParams::default());
    for (i, case) in cases.iter().enumerate() {
        let inst = &case.instance;
        let n = inst.n();
        let s = solve(inst, &case.rotor, &case.particles).map_err(|e| e.to_string())?;
        let out = full_route(inst.graph(), &case.rotor, &case.particles).map_err(|e| e.to_string())?;
        ensure!(
            out.particles[n + 1] == s.m_right && out.particles[0] == s.m_left,
            "instance {i}: sinks differ"
        );
        ensure!(inst.arcmonic_g(&out.rotor).unwrap() == s.final_g, "instance {i}: final_g differs");
    }
    within(start.elapsed(), Duration::from_secs(60)).map(|t| format!("500 instances, {t}"))
}

fn ac6() -> Outcome {
    let params = GenParams {
        sigma_bound: 30,
        ..GenParams::default()
    };
    let mut rng = rng_from_seed(0xA6);
    for i in 0..150 {
        let case = random_instance(&mut rng, &params);
        let counts: Vec<BigInt> = case.particles.counts().iter().map(|c| c.abs()).collect();
        let sigma = ParticleConfig::new(counts);
        let g = case.instance.graph();
        let run = |seed: u64| {
            let mut pick_rng = rng_from_seed(seed);
            legal_route_scheduled(g, &case.rotor, &sigma, DEFAULT_STEP_BUDGET, |eligible| {
                *eligible.choose(&mut pick_rng).unwrap()
            })
        };
        let a = run(2 * i).map_err(|e| e.to_string())?;
        let b = run(2 * i + 1).map_err(|e| e.to_string())?;
        ensure!(
            a.rotor == b.rotor && a.particles == b.particles && a.routing == b.routing,
            "instance {i}: schedules disagree"
        );
    }
    Ok("150 instances".into())
}

fn random_push(g: &Multigraph, rho: &RotorConfig, rng: &mut ChaCha8Rng) -> Option<RotorConfig> {
    let (available, dir) = if rng.gen_bool(0.5) {
        (circuits(g, rho), PushDirection::Positive)
    } else {
        (negative_circuits(g, rho), PushDirection::Negative)
    };
    let c = available.choose(rng)?;
    Some(cycle_push(g, rho, c, dir).unwrap())
}

fn ac7() -> Outcome {
    let mut rng = rng_from_seed(0xA7);
    let params = GenParams {
        n_max: 8,
        y_max: 9,
        ..GenParams::default()
    };
    let mut columns = 0;
    for _ in 0..200 {
        let case = random_instance(&mut rng, &params);
        let inst = &case.instance;
        for u in 1..=inst.n() {
            let delta = laplacian_column(inst.graph(), u).unwrap();
            ensure!(inst.harmonic_h(&delta).unwrap() == big(0), "h(Δ(u_{u})) != 0");
            ensure!(delta.degree() == big(0), "Δ(u_{u}) changes the degree");
            columns += 1;
        }
    }
    let mut pushes = 0;
    while pushes < 1000 {
        let case = random_instance(&mut rng, &params);
        let inst = &case.instance;
        let g0 = inst.arcmonic_g(&case.rotor).unwrap();
        let mut rho = case.rotor.clone();
        for _ in 0..50 {
            if let Some(next) = random_push(inst.graph(), &rho, &mut rng) {
                rho = next;
                pushes += 1;
                ensure!(inst.arcmonic_g(&rho).unwrap() == g0, "g changed under a cycle push");
            }
        }
    }
    let mut steps = 0;
    while steps < 10_000 {
        let case = random_instance(&mut rng, &params);
        let inst = &case.instance;
        let g = inst.graph();
        let (mut rho, mut sigma) = (case.rotor.clone(), case.particles.clone());
        let value = inst.class_value(&rho, &sigma).unwrap();
        let degree = sigma.degree();
        for _ in 0..500 {
            let u = rng.gen_range(1..=inst.n());
            (rho, sigma) = match rng.gen_range(0..4) {
                0 => routing_plus(g, &rho, &sigma, u).unwrap(),
                1 => routing_minus(g, &rho, &sigma, u).unwrap(),
                2 => (rho, fire(g, &sigma, u).unwrap()),
                _ => (rho, unfire(g, &sigma, u).unwrap()),
            };
            steps += 1;
            ensure!(inst.class_value(&rho, &sigma).unwrap() == value, "g - h changed");
            ensure!(sigma.degree() == degree, "degree changed");
        }
    }
    Ok(format!("{columns} columns, {pushes} pushes, {steps} steps"))
}

fn ac8() -> Outcome {
    let mut rng = rng_from_seed(0xA8);
    let mut machines = HashMap::new();
    for i in 0..10_000 {
        let y = rng.gen_range(2..=12u64);
        let x = loop {
            let x = rng.gen_range(1..y);
            if x.gcd(&y) == 1 {
                break x;
            }
        };
        let n = rng.gen_range(1..=24usize);
        let m = machines
            .entry((n, x, y))
            .or_insert_with(|| EngelMachine::new(n, x, y).unwrap());
        let bits = rng.gen_range(1..=256u64);
        let mut v = BigInt::from(rng.gen::<u64>());
        while v.bits() < bits {
            v = (v << 64u32) + rng.gen::<u64>();
        }
        v >>= (v.bits() - bits) as usize;
        if rng.gen_bool(0.5) {
            v = -v;
        }
        let c = m.stable_decompose(&v);
        ensure!(m.h_e(&c).unwrap() == v, "case {i}: round trip failed for {v}");
        ensure!(m.is_stable_word(&c), "case {i}: digits out of range in {c}");
        let digits = c.into_digits();
        for k in 0..=n + 1 {
            let mut other = digits.clone();
            if k <= n {
                other[k] = (&other[k] + rng.gen_range(1..y)).mod_floor(&BigInt::from(y));
            } else {
                other[k] += BigInt::from(x) * rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            }
            ensure!(m.h_e(&DigitWord::new(other)).unwrap() != v, "case {i}: perturbing digit {k} kept the value");
        }
    }
    Ok("10000 values".into())
}

fn ac9() -> Outcome {
    let triples = enumerable();
    for &(n, x, y) in &triples {
        let inst = PathInstance::new(n, x, y).unwrap();
        let f = inst.f().clone();
        let rotors = all_rotors(&inst);
        let classes = push_classes(&inst);
        let acyclic: Vec<usize> = (0..rotors.len()).filter(|&i| is_acyclic(inst.graph(), &rotors[i])).collect();
        ensure!(big(acyclic.len() as i64) == f, "({n},{x},{y}): {} acyclic, F = {f}", acyclic.len());
        let distinct: HashSet<BigInt> = rotors.iter().map(|r| inst.arcmonic_g(r).unwrap()).collect();
        ensure!(big(distinct.len() as i64) == f, "({n},{x},{y}): {} distinct g", distinct.len());
        let class_count = classes.iter().collect::<HashSet<_>>().len();
        let mut acyclic_per_class = vec![0; class_count];
        for &i in &acyclic {
            acyclic_per_class[classes[i]] += 1;
        }
        ensure!(acyclic_per_class.iter().all(|&c| c == 1), "({n},{x},{y}): a class without exactly one acyclic config");
        let mut residue_of_class = vec![None; class_count];
        for (r, &c) in rotors.iter().zip(&classes) {
            let residue = inst.arcmonic_g(r).unwrap().mod_floor(&f);
            ensure!(
                *residue_of_class[c].get_or_insert(residue.clone()) == residue,
                "({n},{x},{y}): class {c} has two residues"
            );
        }
        let residues: HashSet<BigInt> = residue_of_class.into_iter().flatten().collect();
        ensure!(big(residues.len() as i64) == f && big(class_count as i64) == f, "({n},{x},{y}): ḡ not a bijection");
    }
    Ok(format!("{} parameter triples", triples.len()))
}

fn ac10() -> Outcome {
    const C: u64 = 3;
    let start = Instant::now();
    let n = 1000;
    let inst = PathInstance::new(n, 2, 3).map_err(|e| e.to_string())?;
    let mut rng = rng_from_seed(0xA10);
    let counts: Vec<BigInt> = (0..n + 2)
        .map(|_| {
            let mut v = BigInt::from(0);
            for _ in 0..8 {
                v = (v << 64u32) + rng.gen::<u64>();
            }
            if rng.gen_bool(0.5) { -v } else { v }
        })
        .collect();
    let sigma = ParticleConfig::new(counts);
    let positions: Vec<usize> = (0..n).map(|_| rng.gen_range(0..5)).collect();
    let rho = inst.rotor(&positions).unwrap();
    let mut counter = OpCounter::default();
    let s = solve_with(&inst, &rho, &sigma, SearchMode::Bisection, &mut counter).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    // log2(2) = 1, so the bound is C·n.
    let bound = C * n as u64;
    ensure!(counter.digit_steps <= bound, "{} digit steps > {bound}", counter.digit_steps);
    let machine = EngelMachine::for_instance(&inst).unwrap();
    let value = inst.class_value(&rho, &sigma).unwrap() + &s.m_right * inst.f();
    ensure!(value == s.final_g, "final_g inconsistent");
    ensure!(membership_gr(&machine, &value), "self-check failed");
    ensure!(&s.m_right + &s.m_left == sigma.degree(), "degree not conserved");
    within(elapsed, Duration::from_secs(5)).map(|t| {
        format!(
            "{} digit steps <= {bound}, {} membership tests, {t}",
            counter.digit_steps, counter.membership_tests
        )
    })
}

fn ac11() -> Outcome {
    let mut rng = rng_from_seed(0xA11);
    for i in 0..10_000 {
        let y = rng.gen_range(2..=9u64);
        let x = loop {
            let x = rng.gen_range(1..y);
            if x.gcd(&y) == 1 {
                break x;
            }
        };
        let n = rng.gen_range(0..=12usize);
        let m = EngelMachine::new(n, x, y).unwrap();
        let mut w: Vec<BigInt> = (0..=n).map(|_| BigInt::from(rng.gen_range(0..=y))).collect();
        w.push(big(0));
        let word = DigitWord::new(w);
        let t = transducer_run(x, y, &word).map_err(|e| e.to_string())?;
        ensure!(t == m.stabilize(&word).unwrap(), "word {i}: {word} gives {t}");
    }
    let mut checked = 0;
    for (n, x, y) in enumerable() {
        let m = EngelMachine::new(n, x, y).unwrap();
        let mut heads: Vec<Vec<u64>> = vec![vec![]];
        for _ in 0..=n {
            heads = heads
                .into_iter()
                .flat_map(|h| (1..=y).map(move |s| [h.clone(), vec![s]].concat()))
                .collect();
        }
        for head in heads {
            let mut w: Vec<BigInt> = head.iter().map(|&s| BigInt::from(s)).collect();
            w.push(big(0));
            let stable = m.stabilize(&DigitWord::new(w)).unwrap();
            ensure!(!match_ld(x, y, stable.digits()), "({n},{x},{y}): {stable} accepted");
            checked += 1;
        }
    }
    Ok(format!("10000 words, {checked} stabilized words rejected"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("golden example on P^{2,3}_3", ac1),
        ("golden example on P^{1,1}_3", ac2),
        ("g(R) listing for (3,2,3)", ac3),
        ("stable decomposition table", ac4),
        ("solver vs oracle on random instances", ac5),
        ("abelian property of legal routing", ac6),
        ("invariant suite", ac7),
        ("decomposition round trip", ac8),
        ("structure counts", ac9),
        ("scale check n=1000", ac10),
        ("transducer and automata", ac11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("AC{:<2} PASS  {name} ({detail})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("AC{:<2} FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
