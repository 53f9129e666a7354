//! Seeded verification sweeps behind `lozenge verify`.

use lozenge::matrix::SkewMatrix;
use lozenge::msf::{chain_5_3_sides, conjecture5_sides, lemma10_sides, lemma9_sides, minor_summation, theorem3_sides};
use lozenge::sampling::{point_set, random_matrix, random_skew, seeded_rng};
use lozenge::symfun::{generate_rab, lemma8_check, EvalPoint};
use lozenge::{ExactRational, Result};
use rand::Rng;
use serde_json::{json, Value};

/// Which parameters to sweep; `None` means the default range.
#[derive(Debug, Clone, Copy)]
pub struct Sweep {
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub n: Option<usize>,
    pub seed: u64,
    pub trials: usize,
}

pub struct Outcome {
    pub holds: bool,
    pub cases: usize,
    pub counterexample: Option<Value>,
}

impl Outcome {
    fn pass(cases: usize) -> Self {
        Outcome { holds: true, cases, counterexample: None }
    }

    fn fail(cases: usize, counterexample: Value) -> Self {
        Outcome { holds: false, cases, counterexample: Some(counterexample) }
    }
}

fn points_json(x: &EvalPoint<ExactRational>) -> Value {
    Value::Array(x.values().iter().map(|v| Value::String(v.to_string())).collect())
}

/// Same-parity `(a, b)` pairs up to `max`, restricted to the given values.
fn ab_pairs(sweep: &Sweep, max: usize) -> Vec<(usize, usize)> {
    let range = |fixed: Option<usize>| match fixed {
        Some(v) => v..=v,
        None => 1..=max,
    };
    range(sweep.a)
        .flat_map(|a| range(sweep.b).map(move |b| (a, b)))
        .filter(|&(a, b)| a % 2 == b % 2)
        .collect()
}

fn n_values(sweep: &Sweep, b: usize) -> Vec<usize> {
    match sweep.n {
        Some(n) => vec![n],
        None => (b..=b + 2).collect(),
    }
}

fn require_parity(sweep: &Sweep) -> Result<()> {
    if let (Some(a), Some(b)) = (sweep.a, sweep.b) {
        if a % 2 != b % 2 {
            return Err(lozenge::Error::Parity(format!("a and b must share parity, got ({a},{b})")));
        }
    }
    Ok(())
}

pub fn theorem3(sweep: &Sweep) -> Result<Outcome> {
    require_parity(sweep)?;
    let mut cases = 0;
    for (a, b) in ab_pairs(sweep, 5) {
        for n in n_values(sweep, b) {
            for t in 0..sweep.trials as u64 {
                let x = point_set(sweep.seed, t, n + 1);
                let (l, r) = theorem3_sides(a, b, n, &x)?;
                cases += 1;
                if l != r {
                    return Ok(Outcome::fail(
                        cases,
                        json!({"a": a, "b": b, "n": n, "points": points_json(&x), "lhs": l.to_string(), "rhs": r.to_string()}),
                    ));
                }
            }
        }
    }
    Ok(Outcome::pass(cases))
}

pub fn conjecture5(sweep: &Sweep) -> Result<Outcome> {
    require_parity(sweep)?;
    let mut cases = 0;
    for (a, b) in ab_pairs(sweep, 5) {
        for n in n_values(sweep, b) {
            for t in 0..sweep.trials as u64 {
                let x = point_set(sweep.seed, t, n + 2);
                let (l, r) = conjecture5_sides(a, b, n, &x)?;
                cases += 1;
                if l != r {
                    return Ok(Outcome::fail(
                        cases,
                        json!({"a": a, "b": b, "n": n, "points": points_json(&x), "lhs": l.to_string(), "rhs": r.to_string()}),
                    ));
                }
            }
        }
    }
    Ok(Outcome::pass(cases))
}

pub fn chain53(sweep: &Sweep) -> Result<Outcome> {
    require_parity(sweep)?;
    let mut cases = 0;
    for (a, b) in ab_pairs(sweep, 3) {
        for n in n_values(sweep, b) {
            for t in 0..sweep.trials as u64 {
                let x = point_set(sweep.seed, t, n + 1);
                let (l, r) = chain_5_3_sides(a, b, n, &x, &x.prefix(n))?;
                cases += 1;
                if l != r {
                    return Ok(Outcome::fail(
                        cases,
                        json!({"a": a, "b": b, "n": n, "points": points_json(&x), "lhs": l.to_string(), "rhs": r.to_string()}),
                    ));
                }
            }
        }
    }
    Ok(Outcome::pass(cases))
}

pub fn lemma10(sweep: &Sweep) -> Result<Outcome> {
    require_parity(sweep)?;
    let mut cases = 0;
    for (a, b) in ab_pairs(sweep, 3) {
        for n in n_values(sweep, b) {
            for t in 0..sweep.trials as u64 {
                let x = point_set(sweep.seed, t, n + 1);
                for (which, (l, r)) in lemma10_sides(a, b, n, &x)?.into_iter().enumerate() {
                    cases += 1;
                    if l != r {
                        return Ok(Outcome::fail(
                            cases,
                            json!({"a": a, "b": b, "n": n, "formula": which, "points": points_json(&x),
                                   "lhs": l.to_string(), "rhs": r.to_string()}),
                        ));
                    }
                }
            }
        }
    }
    Ok(Outcome::pass(cases))
}

pub fn lemma8(sweep: &Sweep) -> Result<Outcome> {
    require_parity(sweep)?;
    let mut cases = 0;
    for (a, b) in ab_pairs(sweep, 6) {
        for pair in generate_rab(a, b)? {
            cases += 1;
            if !lemma8_check(&pair) {
                return Ok(Outcome::fail(
                    cases,
                    json!({"a": a, "b": b, "k": pair.source.k, "i": pair.source.i,
                           "lambda": pair.lambda.to_string(), "mu": pair.mu.to_string()}),
                ));
            }
        }
    }
    Ok(Outcome::pass(cases))
}

pub fn minor_summation_sweep(sweep: &Sweep) -> Result<Outcome> {
    let mut rng = seeded_rng(sweep.seed);
    let mut cases = 0;
    while cases < sweep.trials {
        let n = sweep.n.unwrap_or_else(|| rng.random_range(0..=4usize));
        let qs: Vec<usize> = (0..=2).filter(|&q| q <= n && (n + q) % 2 == 0).collect();
        let q = qs[rng.random_range(0..qs.len())];
        let p = rng.random_range((n - q)..=(n - q).max(6));
        let g = random_matrix(&mut rng, n, p, 3);
        let h = random_matrix(&mut rng, n, q, 3);
        let a = random_skew(&mut rng, p, 3);
        let (l, r) = minor_summation(&g, &h, &a)?;
        cases += 1;
        if l != r {
            return Ok(Outcome::fail(
                cases,
                json!({"trial": cases - 1, "n": n, "p": p, "q": q, "lhs": l.to_string(), "rhs": r.to_string()}),
            ));
        }
    }
    Ok(Outcome::pass(cases))
}

pub fn lemma9(sweep: &Sweep) -> Result<Outcome> {
    let mut rng = seeded_rng(sweep.seed);
    let sizes: Vec<usize> = match sweep.n {
        Some(n) => vec![n],
        None => (1..=5).collect(),
    };
    let mut cases = 0;
    for n in sizes {
        for trial in 0..sweep.trials {
            let a: SkewMatrix<ExactRational> = random_skew(&mut rng, n, 3);
            let bv = random_matrix(&mut rng, 1, n, 3).row(0).to_vec();
            let cv = random_matrix(&mut rng, 1, n, 3).row(0).to_vec();
            let d = random_matrix(&mut rng, 1, 1, 3).row(0)[0].clone();
            let (l, r) = lemma9_sides(&a, &bv, &cv, d)?;
            cases += 1;
            if l != r {
                return Ok(Outcome::fail(
                    cases,
                    json!({"n": n, "trial": trial, "lhs": l.to_string(), "rhs": r.to_string()}),
                ));
            }
        }
    }
    Ok(Outcome::pass(cases))
}
