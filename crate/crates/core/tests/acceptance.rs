//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! fails. Runs as a plain binary (`harness = false`) so the lines always show.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use lapcoef::energy::{
    adjacency_energy, adjacency_spectrum, coulson_energy_of_subdivision, incidence_energy, laplacian_spectrum, lel,
};
use lapcoef::extremal::{
    check_conjecture46, check_cross_degree, check_exchange_random, check_hosoya_min, check_star_path,
    check_tau_chain, verify_broom_max, verify_greedy_min_matching, verify_greedy_min_phi, verify_ie_min,
};
use lapcoef::laplacian::{coefficients_via_charpoly, coefficients_via_subdivision};
use lapcoef::matchgen::{matching_poly, matching_triple, subdivision_triple};
use lapcoef::poly::{default_grid, IntPoly, Rational};
use lapcoef::trees::{enumerate_trees, make_complete_d_ary, subdivide_rooted, RootedTree, Tree};
use lapcoef::VerificationReport;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn all_trees(n: usize) -> Vec<Tree> {
    enumerate_trees(n, n.max(2) - 1, false)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(r: &VerificationReport) -> Result<(), String> {
    ensure(r.verified && r.violations.is_empty(), || {
        format!(
            "{} n={:?}..{:?} dplus1={:?}: {} violation(s), first: {}",
            r.statement,
            r.params.n_min,
            r.params.n_max,
            r.params.dplus1,
            r.violations.len(),
            serde_json::to_string(&r.violations[0]).unwrap_or_default()
        )
    })
}

/// Coefficient routes agree exactly on every free tree up to order 10.
fn criterion_1() -> Outcome {
    let mut total = 0;
    for n in 1..=10 {
        let trees = all_trees(n);
        if n == 10 {
            ensure(trees.len() == 106, || format!("{} classes at n=10, expected 106", trees.len()))?;
        }
        for t in &trees {
            let (a, b) = (coefficients_via_subdivision(t), coefficients_via_charpoly(t));
            ensure(a == b, || format!("routes differ on {}", t.to_json()))?;
        }
        total += trees.len();
    }
    Ok(format!("{total} trees, n <= 10"))
}

/// Greedy tree minimizes M(S(.), x) and phi(., x) on each class, exactly.
fn criterion_2() -> Outcome {
    let xs = default_grid();
    let mut trees = 0;
    for dplus1 in [3, 4, 5] {
        for n in dplus1 + 1..=12 {
            let a = verify_greedy_min_matching(n, dplus1, &xs).map_err(|e| e.to_string())?;
            let b = verify_greedy_min_phi(n, dplus1, &xs).map_err(|e| e.to_string())?;
            clean(&a)?;
            clean(&b)?;
            trees += a.trees_examined;
        }
    }
    Ok(format!("{trees} class members, dplus1 in {{3,4,5}}, 5 points"))
}

/// Strict incidence-energy gap above the greedy tree.
fn criterion_3() -> Outcome {
    let mut trees = 0;
    for dplus1 in [3, 4] {
        for n in dplus1 + 1..=11 {
            let r = verify_ie_min(n, dplus1).map_err(|e| e.to_string())?;
            clean(&r)?;
            trees += r.trees_examined;
        }
    }
    Ok(format!("{trees} class members, gap > 1e-9"))
}

/// IE = LEL = E(S(T))/2 and the subdivision spectrum is {±sqrt(mu_k)} ∪ {0}.
fn criterion_4() -> Outcome {
    let mut worst = 0f64;
    let mut count = 0;
    for n in 1..=10 {
        for t in all_trees(n) {
            let s = lapcoef::trees::subdivide(&t);
            let (ie, l, es) = (incidence_energy(&t), lel(&t), adjacency_energy(&s));
            ensure((ie - l).abs() <= 1e-9, || format!("IE {ie} vs LEL {l} on {}", t.to_json()))?;
            ensure((2.0 * ie - es).abs() <= 1e-9, || format!("2 IE {} vs E(S) {es} on {}", 2.0 * ie, t.to_json()))?;
            // Nonzero Laplacian eigenvalues (all but the smallest).
            let mu = laplacian_spectrum(&t);
            let mut expected: Vec<f64> = mu[..n - 1].iter().flat_map(|&m| [m.sqrt(), -m.sqrt()]).collect();
            expected.push(0.0);
            expected.sort_by(|a, b| b.total_cmp(a));
            let got = adjacency_spectrum(&s);
            ensure(got.len() == expected.len(), || "spectrum sizes differ".into())?;
            for (g, e) in got.iter().zip(&expected) {
                worst = worst.max((g - e).abs());
            }
            ensure(worst <= 1e-8, || format!("spectrum mismatch {worst:e} on {}", t.to_json()))?;
            count += 1;
        }
    }
    Ok(format!("{count} trees, worst spectral gap {worst:.1e}"))
}

/// Coulson integral matches the eigenvalue energy of the subdivision.
fn criterion_5() -> Outcome {
    let mut worst = 0f64;
    let mut count = 0;
    for n in 1..=9 {
        for t in all_trees(n) {
            let c = coulson_energy_of_subdivision(&t).map_err(|e| e.to_string())?;
            let e = adjacency_energy(&lapcoef::trees::subdivide(&t));
            worst = worst.max((c - e).abs());
            ensure(worst <= 1e-6, || format!("Coulson {c} vs eigen {e} on {}", t.to_json()))?;
            count += 1;
        }
    }
    Ok(format!("{count} trees, worst difference {worst:.1e}"))
}

/// Strict decrease of tau along complete d-ary trees, and the closed form at
/// height 2 both as a polynomial identity and at five points.
fn criterion_6() -> Outcome {
    let xs = default_grid();
    for (d, hmax) in [(2, 8), (3, 5), (4, 4)] {
        clean(&check_tau_chain(d, hmax, &xs, 100_000).map_err(|e| e.to_string())?)?;
        let c2 = make_complete_d_ary(d, 2).map_err(|e| e.to_string())?;
        let tr = subdivision_triple(&c2);
        // M0 ((d+1)x + 1) = M (1 + x)
        let lhs = &tr.m_unsat * &IntPoly::from_i64s(&[1, d as i64 + 1]);
        let rhs = &tr.m_all * &IntPoly::from_i64s(&[1, 1]);
        ensure(lhs == rhs, || format!("closed form fails symbolically for d={d}"))?;
        let dq = Rational::from_integer(BigInt::from(d));
        let one = Rational::from_integer(BigInt::from(1));
        for x in &xs {
            let tau = lapcoef::matchgen::tau_at(&c2, x, true).map_err(|e| e.to_string())?;
            ensure(tau == (&one + x) / ((&dq + &one) * x + &one), || format!("closed form fails at d={d}"))?;
        }
    }
    Ok("(2,8) (3,5) (4,4), closed form at 5 points".into())
}

/// Randomized exchanges never increase M(S(.), x); equalities are explained.
fn criterion_7() -> Outcome {
    let r = check_exchange_random(250, 14, &default_grid(), 2024).map_err(|e| e.to_string())?;
    ensure(r.trees_examined >= 200, || "fewer than 200 instances".into())?;
    clean(&r)?;
    let d = &r.details[0];
    Ok(format!(
        "{} instances, {} strict, {} equalities",
        r.trees_examined, d["strict_decreases"], d["equalities"]
    ))
}

/// Broom is the coefficientwise maximum.
fn criterion_8() -> Outcome {
    let mut trees = 0;
    for dplus1 in [3, 4] {
        for n in dplus1 + 1..=12 {
            let r = verify_broom_max(n, dplus1).map_err(|e| e.to_string())?;
            clean(&r)?;
            trees += r.trees_examined;
        }
    }
    Ok(format!("{trees} class members"))
}

/// Star and path are the coefficientwise extremes over all free trees.
fn criterion_9() -> Outcome {
    let r = check_star_path(2, 10, &default_grid()).map_err(|e| e.to_string())?;
    clean(&r)?;
    Ok(format!("{} trees, n in 2..=10", r.trees_examined))
}

/// Raising the maximum degree strictly lowers M(S(greedy), x).
fn criterion_10() -> Outcome {
    let r = check_cross_degree(40, &[2, 3, 4], &default_grid()).map_err(|e| e.to_string())?;
    clean(&r)?;
    Ok(format!("{} greedy trees, n <= 40", r.trees_examined))
}

/// Hosoya index of the subdivision is minimized only by the greedy tree.
fn criterion_11() -> Outcome {
    let mut trees = 0;
    for dplus1 in [3, 4, 5] {
        for n in dplus1 + 1..=12 {
            let r = check_hosoya_min(n, dplus1).map_err(|e| e.to_string())?;
            clean(&r)?;
            trees += r.trees_examined;
        }
    }
    Ok(format!("{trees} class members"))
}

/// The conjecture scan completes and its report has the expected shape.
/// The conjecture's truth is not asserted; counterexamples are counted.
fn criterion_12() -> Outcome {
    let mut counterexamples = 0;
    for dplus1 in [3, 4] {
        for n in dplus1 + 1..=12 {
            let r = check_conjecture46(n, dplus1).map_err(|e| e.to_string())?;
            let v: Value = serde_json::from_str(&r.to_json_pretty()).map_err(|e| e.to_string())?;
            for key in ["statement", "params", "trees_examined", "verified", "violations", "details"] {
                ensure(v.get(key).is_some(), || format!("report lacks {key}"))?;
            }
            ensure(v["statement"] == "conj46", || "wrong statement id".into())?;
            let violations = v["violations"].as_array().ok_or("violations not a list")?;
            ensure(v["verified"].as_bool() == Some(violations.is_empty()), || "verified flag inconsistent".into())?;
            for w in violations {
                ensure(w["tree"]["n"] == n && w["witness"]["k"].is_array(), || "malformed witness".into())?;
            }
            let minima = v["details"][0]["per_k_minima"].as_array().ok_or("per_k_minima missing")?;
            ensure(minima.len() == n + 1, || format!("{} minima for n={n}", minima.len()))?;
            ensure(minima.iter().all(|m| m.as_str().is_some_and(|s| s.parse::<BigInt>().is_ok())), || {
                "minima are not integers".into()
            })?;
            counterexamples += violations.len();
        }
    }
    Ok(format!("report well-formed, {counterexamples} counterexample(s) found"))
}

/// Brute-force number of k-matchings by enumerating edge subsets.
fn brute_force_matching_counts(t: &Tree) -> Vec<BigInt> {
    let edges = t.edges();
    let mut counts = vec![BigInt::zero(); t.order() / 2 + 1];
    for mask in 0u32..(1 << edges.len()) {
        let mut used = vec![false; t.order()];
        let mut ok = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
        counts.pop();
    }
    counts
}

/// Matching polynomial against subset enumeration; the subdivision triple
/// against the triple of the explicit subdivision, at every root.
fn criterion_13() -> Outcome {
    let mut trees = 0;
    for n in 1..=8 {
        for t in all_trees(n) {
            let want = brute_force_matching_counts(&t);
            ensure(matching_poly(&t).coeffs() == want.as_slice(), || format!("matching poly wrong on {}", t.to_json()))?;
            trees += 1;
        }
    }
    let mut rooted = 0;
    for n in 1..=9 {
        for t in all_trees(n) {
            for root in 0..n {
                let r = RootedTree::new(t.clone(), root).map_err(|e| e.to_string())?;
                let direct = subdivision_triple(&r);
                let via = matching_triple(&subdivide_rooted(&r));
                ensure(direct == via, || format!("subdivision triple wrong on {} at root {root}", t.to_json()))?;
                rooted += 1;
            }
        }
    }
    Ok(format!("{trees} trees vs brute force, {rooted} rooted trees vs explicit subdivision"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "coefficient routes agree", criterion_1),
        (2, "greedy minimizes M(S(.),x) and phi", criterion_2),
        (3, "greedy minimizes incidence energy", criterion_3),
        (4, "energy identities and spectrum", criterion_4),
        (5, "Coulson integral", criterion_5),
        (6, "tau chain on complete d-ary trees", criterion_6),
        (7, "random exchanges", criterion_7),
        (8, "broom maximizes coefficients", criterion_8),
        (9, "star and path extremes", criterion_9),
        (10, "cross-degree strict drop", criterion_10),
        (11, "subdivision Hosoya minimum", criterion_11),
        (12, "conjecture scan report", criterion_12),
        (13, "matching calculus oracles", criterion_13),
    ];
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, f) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {id:>2} ({name}): {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id:>2} ({name}): {msg} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion/criteria failed");
        ExitCode::FAILURE
    }
}
