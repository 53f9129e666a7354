//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.

use std::time::Instant;

use lozenge::boxcount::{enumerate_plane_partitions, macmahon_box, theorem1_count, theorem4_count, BoxDims};
use lozenge::combinat::binomial;
use lozenge::matrix::SkewMatrix;
use lozenge::msf::{
    chain_5_3_sides, conjecture5_sides, lemma10_sides, lemma9_sides, minor_summation, theorem1_specialization,
    theorem3_sides, theorem4_specialization,
};
use lozenge::partition::Partition;
use lozenge::sampling::{point_set, random_matrix, random_skew, seeded_rng};
use lozenge::symfun::{generate_rab, lemma8_check, schur_bidet, schur_nk, EvalPoint};
use lozenge::tiling::{count_via_path_determinants, enumerate_tilings, PuncturedHexagon};
use lozenge::{ExactInt, ExactRational};
use rand::Rng;

fn report(n: u32, title: &str, failures: &[String], started: Instant) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict}: {title} ({} ms)", started.elapsed().as_millis());
    for f in failures.iter().take(10) {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {} case(s)", failures.len());
}

fn same_parity(a: usize, b: usize) -> bool {
    a % 2 == b % 2
}

fn q(v: &ExactInt) -> ExactRational {
    ExactRational::from_integer(v.clone())
}

#[test]
fn criterion_01_three_routes_agree_on_central_puncture() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for a in 1..=3usize {
        for b in 1..=5usize {
            for c in 1..=5usize {
                if !same_parity(a, b) || !same_parity(b, c) {
                    continue;
                }
                let h = PuncturedHexagon::new(a, b, c).unwrap();
                let brute = enumerate_tilings(&h).unwrap();
                let lgv = count_via_path_determinants(&h).unwrap();
                let closed = theorem1_count(a, b, c).unwrap();
                if brute != lgv || lgv != closed {
                    failures.push(format!("({a},{b},{c}): brute {brute}, lgv {lgv}, closed {closed}"));
                }
            }
        }
    }
    for (abc, expect) in [((1, 1, 1), 2u32), ((2, 2, 2), 54), ((3, 3, 3), 4320)] {
        let got = enumerate_tilings(&PuncturedHexagon::new(abc.0, abc.1, abc.2).unwrap()).unwrap();
        if got != ExactInt::from(expect) {
            failures.push(format!("{abc:?}: expected {expect}, got {got}"));
        }
    }
    report(1, "enumeration, path determinants and product formula agree", &failures, t);
}

#[test]
fn criterion_02_box_formula_matches_plane_partitions() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for x in 0..=3 {
        for y in 0..=3 {
            for z in 0..=3 {
                let d = BoxDims::new(x, y, z);
                let (f, e) = (macmahon_box(d), enumerate_plane_partitions(d).unwrap());
                if f != e {
                    failures.push(format!("{x}x{y}x{z}: formula {f}, enumeration {e}"));
                }
            }
        }
    }
    report(2, "box formula equals plane partition enumeration", &failures, t);
}

#[test]
fn criterion_03_theorem3_identity() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for a in 1..=5usize {
        for b in 1..=5usize {
            if !same_parity(a, b) {
                continue;
            }
            for n in b..=b + 2 {
                for set in 0..3 {
                    let x = point_set(3, set, n + 1);
                    let (l, r) = theorem3_sides::<ExactRational>(a, b, n, &x).unwrap();
                    if l != r {
                        failures.push(format!("(a,b,n)=({a},{b},{n}) set {set}: {l} != {r}"));
                    }
                }
            }
        }
    }
    report(3, "sum over R(a,b) equals the rectangular Schur product", &failures, t);
}

#[test]
fn criterion_04_specializations() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for a in 1..=4usize {
        for b in 1..=4usize {
            for c in 1..=4usize {
                if !same_parity(a, b) || !same_parity(b, c) {
                    continue;
                }
                let (l, r) = theorem1_specialization::<ExactRational>(a, b, c).unwrap();
                let expect = q(&theorem1_count(a, b, c).unwrap());
                if l != expect || r != expect {
                    failures.push(format!("all ones ({a},{b},{c}): {l}, {r}, expected {expect}"));
                }
            }
        }
    }
    for a in 1..=4usize {
        for b in 1..=4usize {
            for c in 1..=5usize {
                if !same_parity(a, b) || same_parity(a, c) {
                    continue;
                }
                let (l, r) = theorem4_specialization::<ExactRational>(a, b, c).unwrap();
                let expect = q(&theorem4_count(a, b, c).unwrap());
                if l != expect || r != expect {
                    failures.push(format!("x_(n+1)=0 ({a},{b},{c}): {l}, {r}, expected {expect}"));
                }
            }
        }
    }
    report(4, "principal specializations reproduce both product formulas", &failures, t);
}

#[test]
fn criterion_05_offset_puncture_matches_enumeration() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for (a, b, c) in [(1, 1, 2), (2, 2, 1), (2, 2, 3), (1, 3, 2), (3, 3, 2)] {
        let h = PuncturedHexagon::new(a, b, c).unwrap();
        let brute = enumerate_tilings(&h).unwrap();
        let closed = theorem4_count(a, b, c).unwrap();
        if brute != closed {
            failures.push(format!("({a},{b},{c}) at {}: brute {brute}, closed {closed}", h.puncture()));
        }
    }
    report(5, "off-centre puncture enumeration equals its product formula", &failures, t);
}

#[test]
fn criterion_06_minor_summation() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut rng = seeded_rng(6);
    let mut trials = 0;
    while trials < 50 {
        let n = rng.random_range(0..=4usize);
        let q = rng.random_range(0..=2usize);
        if (n + q) % 2 == 1 || q > n {
            continue;
        }
        let p = rng.random_range((n - q)..=6usize);
        let g = random_matrix(&mut rng, n, p, 3);
        let h = random_matrix(&mut rng, n, q, 3);
        let a = random_skew(&mut rng, p, 3);
        let (l, r) = minor_summation(&g, &h, &a).unwrap();
        if l != r {
            failures.push(format!("trial {trials} (n,p,q)=({n},{p},{q}): {l} != {r}"));
        }
        trials += 1;
    }
    report(6, "minor summation formula on random instances", &failures, t);
}

#[test]
fn criterion_07_bordered_determinant_factorisation() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut rng = seeded_rng(7);
    for n in 1..=5usize {
        for trial in 0..50 {
            let a: SkewMatrix<ExactRational> = random_skew(&mut rng, n, 3);
            let bv = random_matrix(&mut rng, 1, n, 3).row(0).to_vec();
            let cv = random_matrix(&mut rng, 1, n, 3).row(0).to_vec();
            let d = random_matrix(&mut rng, 1, 1, 3).row(0)[0].clone();
            let (l, r) = lemma9_sides(&a, &bv, &cv, d).unwrap();
            if l != r {
                failures.push(format!("n={n} trial {trial}: {l} != {r}"));
            }
        }
    }
    report(7, "bordered skew determinant factors into Pfaffians (even and odd)", &failures, t);
}

#[test]
fn criterion_08_pfaffian_evaluations() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for a in 1..=3usize {
        for b in 1..=3usize {
            if !same_parity(a, b) {
                continue;
            }
            for n in b..=b + 2 {
                for set in 0..2 {
                    let x = point_set(8, set, n + 1);
                    for (i, (l, r)) in lemma10_sides(a, b, n, &x).unwrap().iter().enumerate() {
                        if l != r {
                            failures.push(format!("bordered Pfaffian {i} (a,b,n)=({a},{b},{n}) set {set}: {l} != {r}"));
                        }
                    }
                    let (l, r) = chain_5_3_sides(a, b, n, &x, &x.prefix(n)).unwrap();
                    if l != r {
                        failures.push(format!("Pfaffian form (a,b,n)=({a},{b},{n}) set {set}: {l} != {r}"));
                    }
                }
            }
        }
    }
    report(8, "bordered Pfaffian evaluations and the Pfaffian form of the sum", &failures, t);
}

#[test]
fn criterion_09_rab_structure() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for a in 1..=6usize {
        for b in 1..=6usize {
            if !same_parity(a, b) {
                continue;
            }
            let pairs = generate_rab(a, b).unwrap();
            if ExactInt::from(pairs.len()) != binomial((a + b) as i64, a as i64) {
                failures.push(format!("|R({a},{b})| = {}", pairs.len()));
            }
            for p in pairs.iter().filter(|p| !lemma8_check(p)) {
                failures.push(format!("R({a},{b}): {:?} fails the J/J' description", p.source));
            }
        }
    }
    report(9, "R(a,b) has C(a+b,a) pairs, each with the J/J' structure", &failures, t);
}

#[test]
fn criterion_10_conjectured_identity() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let (l, r) = conjecture5_sides(1, 1, 1, &EvalPoint::<ExactRational>::from_ints(&[2, 3, 5])).unwrap();
    if l != r || l != ExactRational::from_integer(35.into()) {
        failures.push(format!("hand instance (1,1,1) at (2,3,5): {l} vs {r}"));
    }
    for a in 1..=5usize {
        for b in 1..=5usize {
            if !same_parity(a, b) {
                continue;
            }
            for n in b..=b + 2 {
                for set in 0..3 {
                    let x = point_set(10, set, n + 2);
                    let (l, r) = conjecture5_sides(a, b, n, &x).unwrap();
                    if l != r {
                        failures.push(format!("finding: (a,b,n)=({a},{b},{n}) set {set}: {l} != {r}"));
                    }
                }
            }
        }
    }
    report(10, "conjectured identity holds on the sweep", &failures, t);
}

#[test]
fn criterion_11_schur_routes_agree() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut rng = seeded_rng(11);
    for set in 0..20u64 {
        let n = rng.random_range(1..=5usize);
        let x = point_set(11, set, n);
        for _ in 0..10 {
            let len = rng.random_range(0..=4usize);
            let parts: Vec<usize> = (0..len).map(|_| rng.random_range(0..=4usize)).collect();
            let p = Partition::new(parts);
            let (nk, bi) = (schur_nk(&p, &x), schur_bidet(&p, &x).unwrap());
            if nk != bi {
                failures.push(format!("{p} at set {set}: {nk} != {bi}"));
            }
        }
    }
    for w in 0..=3usize {
        for h in 0..=3usize {
            for n in h.max(1)..=6 {
                let v = schur_nk(&Partition::rectangle(w, h), &EvalPoint::<ExactRational>::all_ones(n));
                let expect = q(&macmahon_box(BoxDims::new(w, h, n - h)));
                if v != expect {
                    failures.push(format!("rectangle {w}^{h} at {n} ones: {v} != {expect}"));
                }
            }
        }
    }
    report(11, "Schur determinant routes agree; rectangles count boxed plane partitions", &failures, t);
}
