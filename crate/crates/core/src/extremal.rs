//! The branch exchange on two-vertex decompositions, and exhaustive checks of
//! the extremal statements about greedy trees, brooms, stars and paths.
//!
//! Every comparison of matching polynomials is made in exact rationals at
//! the requested points; coefficient comparisons are exact integers. Energy
//! comparisons use the fixed tolerance [`IE_GAP`].

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::energy::incidence_energy;
use crate::error::{Error, Result};
use crate::laplacian::{coefficients_via_subdivision, phi_eval, CoeffVector};
use crate::matchgen::{four_way_split, subdivision_triple, tau_at};
use crate::poly::{format_rational, rational_vec_serde, require_positive, IntPoly, Rational};
use crate::report::{Fixed12, ReportParams, VerificationReport};
use crate::trees::{
    canonical_code, compose, decompose, enumerate_trees, from_prufer, make_broom, make_complete_d_ary_limited,
    make_greedy, make_path, make_star, subdivide, CanonicalCode, Decomposition, RootedTree, Tree,
    DEFAULT_MAX_VERTICES,
};

/// Minimum incidence-energy gap demanded between the greedy tree and any
/// other member of its class.
pub const IE_GAP: f64 = 1e-9;

/// `M(S(T), x)` as a polynomial.
pub fn subdivision_matching_poly(t: &Tree) -> IntPoly {
    let rooted = RootedTree::new(t.clone(), 0).expect("vertex 0 exists");
    subdivision_triple(&rooted).m_all
}

fn tau_of_branch(planted: &RootedTree, x: &Rational) -> Result<Rational> {
    tau_at(&planted.unplant()?, x, true)
}

fn fmt_q(x: &Rational) -> String {
    format_rational(x)
}

/// Outcome of one branch exchange.
#[derive(Clone, Debug, Serialize)]
pub struct ExchangeReport {
    #[serde(with = "crate::poly::rational_serde")]
    pub x: Rational,
    pub d: usize,
    /// Number of branches at `u` and `v` after any swap.
    pub d1: usize,
    pub d2: usize,
    /// `u` and `v` were exchanged because `M10 > M01` at `x`.
    pub swapped: bool,
    #[serde(with = "crate::poly::rational_serde")]
    pub m10: Rational,
    #[serde(with = "crate::poly::rational_serde")]
    pub m01: Rational,
    #[serde(with = "rational_vec_serde")]
    pub tau_left: Vec<Rational>,
    #[serde(with = "rational_vec_serde")]
    pub tau_right: Vec<Rational>,
    /// `M(S(T), x)` before and after.
    #[serde(with = "crate::poly::rational_serde")]
    pub before: Rational,
    #[serde(with = "crate::poly::rational_serde")]
    pub after: Rational,
    pub equality: bool,
    /// `d2 = d` and every right branch has tau at most every left branch.
    pub condition_a: bool,
    /// `M10 = M01`, `d1 = d` and every left branch has tau at most every
    /// right branch.
    pub condition_b: bool,
}

impl ExchangeReport {
    pub fn never_increases(&self) -> bool {
        self.before >= self.after
    }

    /// Equality happened and one of the two equality conditions explains it.
    pub fn equality_explained(&self) -> bool {
        !self.equality || self.condition_a || self.condition_b
    }
}

fn max_of(v: &[Rational]) -> Option<&Rational> {
    v.iter().max()
}

fn min_of(v: &[Rational]) -> Option<&Rational> {
    v.iter().min()
}

/// `max(lo) <= min(hi)`, vacuous when either side is empty.
fn all_below(lo: &[Rational], hi: &[Rational]) -> bool {
    match (max_of(lo), min_of(hi)) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    }
}

/// Redistribute the branches of `dec` so that `v` keeps the `d` branches
/// with the smallest `tau(S(.), x)` and `u` gets the rest (all of them go to
/// `v` when there are at most `d`). If `M10(S(T0), x) > M01(S(T0), x)` the
/// roles of `u` and `v` are exchanged first. Ties in `tau` are broken by the
/// rooted canonical code of the branch.
pub fn exchange(dec: &Decomposition, d: usize, x: &Rational) -> Result<(Tree, ExchangeReport)> {
    require_positive(x)?;
    let (d1, d2) = (dec.left.len(), dec.right.len());
    if d == 0 || d < d1.max(d2) {
        return Err(Error::InvalidParameter(format!(
            "branching bound d={d} must be positive and at least max(d1, d2) = {}",
            d1.max(d2)
        )));
    }
    let s0 = subdivide(&dec.t0);
    let split = four_way_split(&s0, dec.u, dec.v)?;
    let (m10, m01) = (split.m10.eval(x), split.m01.eval(x));
    let swapped = m10 > m01;
    let (dec, m10, m01) = if swapped {
        (dec.swapped(), m01, m10)
    } else {
        (dec.clone(), m10, m01)
    };
    let (d1, d2) = (dec.left.len(), dec.right.len());

    let tau_left = dec.left.iter().map(|b| tau_of_branch(b, x)).collect::<Result<Vec<_>>>()?;
    let tau_right = dec.right.iter().map(|b| tau_of_branch(b, x)).collect::<Result<Vec<_>>>()?;

    let mut pool: Vec<(Rational, CanonicalCode, RootedTree)> = dec
        .left
        .iter()
        .zip(&tau_left)
        .chain(dec.right.iter().zip(&tau_right))
        .map(|(b, t)| Ok((t.clone(), b.unplant()?.canonical_code(), b.clone())))
        .collect::<Result<_>>()?;
    pool.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let to_u = (d1 + d2).saturating_sub(d);
    let right: Vec<RootedTree> = pool.split_off(to_u).into_iter().map(|p| p.2).collect();
    let left: Vec<RootedTree> = pool.into_iter().map(|p| p.2).collect();

    let before_tree = compose(&dec);
    let rearranged = Decomposition::new(dec.t0.clone(), dec.u, dec.v, left, right)?;
    let after_tree = compose(&rearranged);
    let before = subdivision_matching_poly(&before_tree).eval(x);
    let after = subdivision_matching_poly(&after_tree).eval(x);

    let condition_a = d2 == d && all_below(&tau_right, &tau_left);
    let condition_b = m10 == m01 && d1 == d && all_below(&tau_left, &tau_right);
    let report = ExchangeReport {
        x: x.clone(),
        d,
        d1,
        d2,
        swapped,
        m10,
        m01,
        tau_left,
        tau_right,
        equality: before == after,
        before,
        after,
        condition_a,
        condition_b,
    };
    Ok((after_tree, report))
}

/// Result of repeatedly applying strictly improving exchanges.
#[derive(Clone, Debug, Serialize)]
pub struct DescentOutcome {
    pub tree: Tree,
    #[serde(with = "crate::poly::rational_serde")]
    pub value: Rational,
    pub rounds: usize,
}

/// Apply exchanges over all ordered pairs of non-pendant vertices, taking
/// the first strict decrease of `M(S(.), x)` each round, until none is left
/// or `max_rounds` is reached.
pub fn exchange_descent(t: &Tree, d: usize, x: &Rational, max_rounds: usize) -> Result<DescentOutcome> {
    require_positive(x)?;
    let mut cur = t.clone();
    let mut value = subdivision_matching_poly(&cur).eval(x);
    let mut rounds = 0;
    'outer: while rounds < max_rounds {
        let inner: Vec<usize> = (0..cur.order()).filter(|&v| cur.degree(v) >= 2).collect();
        for &u in &inner {
            for &v in &inner {
                if u == v {
                    continue;
                }
                let dec = decompose(&cur, u, v)?;
                if dec.left.len().max(dec.right.len()) > d {
                    continue;
                }
                let (next, rep) = exchange(&dec, d, x)?;
                if rep.after < value {
                    cur = next;
                    value = rep.after;
                    rounds += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(DescentOutcome {
        tree: cur,
        value,
        rounds,
    })
}

/// Vertices with degree in `2..=d`.
pub fn intermediate_degree_vertices(t: &Tree, d: usize) -> Vec<usize> {
    (0..t.order())
        .filter(|&v| (2..=d).contains(&t.degree(v)))
        .collect()
}

fn check_class_params(n: usize, dplus1: usize) -> Result<()> {
    if dplus1 < 2 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "class of order {n} and maximum degree {dplus1} needs order >= 1 and max degree >= 2"
        )));
    }
    Ok(())
}

/// Classes with `n < dplus1 + 1` are empty; they get a report, not an error.
fn empty_class_report(statement: &str, n: usize, dplus1: usize, xs: &[Rational]) -> Option<VerificationReport> {
    (n < dplus1 + 1).then(|| {
        let mut r = VerificationReport::new(statement, class_params(n, dplus1, xs));
        r.details.push(json!({"n": n, "empty_class": true}));
        r.elapsed_seconds = Some(0.0);
        r
    })
}

fn check_grid(xs: &[Rational]) -> Result<()> {
    xs.iter().try_for_each(require_positive)
}

fn class_params(n: usize, dplus1: usize, xs: &[Rational]) -> ReportParams {
    ReportParams {
        dplus1: Some(dplus1),
        xs: xs.to_vec(),
        ..ReportParams::for_n(n)
    }
}

/// Which polynomial the greedy-minimality check compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GreedyFunctional {
    SubdivisionMatching,
    LaplacianGenerating,
}

fn greedy_min_check(
    statement: &str,
    n: usize,
    dplus1: usize,
    xs: &[Rational],
    functional: GreedyFunctional,
) -> Result<VerificationReport> {
    check_class_params(n, dplus1)?;
    check_grid(xs)?;
    if let Some(r) = empty_class_report(statement, n, dplus1, xs) {
        return Ok(r);
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(statement, class_params(n, dplus1, xs));
    let values = |t: &Tree| -> Vec<Rational> {
        match functional {
            GreedyFunctional::SubdivisionMatching => {
                let m = subdivision_matching_poly(t);
                xs.iter().map(|x| m.eval(x)).collect()
            }
            GreedyFunctional::LaplacianGenerating => {
                let c = coefficients_via_subdivision(t);
                xs.iter().map(|x| phi_eval(&c, x)).collect()
            }
        }
    };
    let greedy = make_greedy(n, dplus1)?;
    let greedy_code = canonical_code(&greedy);
    let greedy_vals = values(&greedy);
    let class = enumerate_trees(n, dplus1, true);
    let rows: Vec<(Tree, CanonicalCode, Vec<Rational>)> = class
        .into_par_iter()
        .map(|t| {
            let code = canonical_code(&t);
            let v = values(&t);
            (t, code, v)
        })
        .collect();
    report.trees_examined = rows.len() as u64;
    if !rows.iter().any(|r| r.1 == greedy_code) {
        report.push_violation(greedy.clone(), json!({"kind": "greedy_not_in_class"}));
    }
    for (t, code, vals) in &rows {
        let is_greedy = *code == greedy_code;
        for ((x, v), g) in xs.iter().zip(vals).zip(&greedy_vals) {
            let kind = match v.cmp(g) {
                Ordering::Less => Some("below_greedy"),
                Ordering::Equal if !is_greedy => Some("ties_greedy"),
                _ => None,
            };
            if let Some(kind) = kind {
                report.push_violation(
                    t.clone(),
                    json!({"kind": kind, "x": fmt_q(x), "value": fmt_q(v), "greedy_value": fmt_q(g)}),
                );
            }
        }
    }
    // Minimizers at each x, to expose any dependence on x.
    let mut per_x = Vec::new();
    let mut argmins: Vec<Vec<String>> = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        let Some(min) = rows.iter().map(|r| &r.2[i]).min() else {
            continue;
        };
        let arg: Vec<String> = rows
            .iter()
            .filter(|r| &r.2[i] == min)
            .map(|r| r.1.to_hex())
            .collect();
        per_x.push(json!({"x": fmt_q(x), "min": fmt_q(min), "argmin": arg}));
        argmins.push(arg);
    }
    let x_dependent = argmins.windows(2).any(|w| w[0] != w[1]);
    report.details.push(json!({
        "n": n,
        "greedy_code": greedy_code.to_hex(),
        "minimizers": per_x,
        "minimizer_depends_on_x": x_dependent,
    }));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Over the whole class of order `n` and maximum degree `dplus1`, check
/// `M(S(greedy), x) <= M(S(T), x)` at each `x`, with equality only for the
/// greedy tree itself.
pub fn verify_greedy_min_matching(n: usize, dplus1: usize, xs: &[Rational]) -> Result<VerificationReport> {
    greedy_min_check("thm37", n, dplus1, xs, GreedyFunctional::SubdivisionMatching)
}

/// The same minimality check for the Laplacian coefficient generating
/// function, evaluated from the coefficient vector.
pub fn verify_greedy_min_phi(n: usize, dplus1: usize, xs: &[Rational]) -> Result<VerificationReport> {
    greedy_min_check("thm13", n, dplus1, xs, GreedyFunctional::LaplacianGenerating)
}

fn coeff_strings(c: &CoeffVector) -> Vec<String> {
    c.as_slice().iter().map(BigInt::to_string).collect()
}

/// `c_k(T) <= c_k(broom)` for every `k` and every tree in the class, with
/// identical vectors only for the broom.
pub fn verify_broom_max(n: usize, dplus1: usize) -> Result<VerificationReport> {
    check_class_params(n, dplus1)?;
    if let Some(r) = empty_class_report("thm43-lem42", n, dplus1, &[]) {
        return Ok(r);
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("thm43-lem42", class_params(n, dplus1, &[]));
    let broom = make_broom(n, dplus1)?;
    let broom_code = canonical_code(&broom);
    let cb = coefficients_via_subdivision(&broom);
    let rows: Vec<(Tree, CanonicalCode, CoeffVector)> = enumerate_trees(n, dplus1, true)
        .into_par_iter()
        .map(|t| {
            let code = canonical_code(&t);
            let c = coefficients_via_subdivision(&t);
            (t, code, c)
        })
        .collect();
    report.trees_examined = rows.len() as u64;
    let mut class_max: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for (t, code, c) in &rows {
        for (m, v) in class_max.iter_mut().zip(c.as_slice()) {
            if v > m {
                *m = v.clone();
            }
        }
        let above: Vec<usize> = (0..=n).filter(|&k| c.get(k) > cb.get(k)).collect();
        if !above.is_empty() {
            report.push_violation(
                t.clone(),
                json!({"kind": "exceeds_broom", "k": above, "coefficients": coeff_strings(c), "broom": coeff_strings(&cb)}),
            );
        } else if c == &cb && *code != broom_code {
            report.push_violation(t.clone(), json!({"kind": "ties_broom", "coefficients": coeff_strings(c)}));
        }
    }
    report.details.push(json!({
        "n": n,
        "broom_coefficients": coeff_strings(&cb),
        "class_max_equals_broom": class_max.as_slice() == cb.as_slice(),
    }));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Incidence energy of the greedy tree is below that of every other class
/// member by more than [`IE_GAP`].
pub fn verify_ie_min(n: usize, dplus1: usize) -> Result<VerificationReport> {
    check_class_params(n, dplus1)?;
    if let Some(r) = empty_class_report("thm14", n, dplus1, &[]) {
        return Ok(r);
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("thm14", class_params(n, dplus1, &[]));
    let greedy = make_greedy(n, dplus1)?;
    let greedy_code = canonical_code(&greedy);
    let ie_star = incidence_energy(&greedy);
    let rows: Vec<(Tree, CanonicalCode, f64)> = enumerate_trees(n, dplus1, true)
        .into_par_iter()
        .map(|t| {
            let code = canonical_code(&t);
            let ie = incidence_energy(&t);
            (t, code, ie)
        })
        .collect();
    report.trees_examined = rows.len() as u64;
    let mut min_other = f64::INFINITY;
    for (t, code, ie) in &rows {
        if *code == greedy_code {
            continue;
        }
        min_other = min_other.min(*ie);
        if ie - ie_star <= IE_GAP {
            report.push_violation(
                t.clone(),
                json!({"kind": "gap_too_small", "ie": Fixed12(*ie), "greedy_ie": Fixed12(ie_star)}),
            );
        }
    }
    report.details.push(json!({
        "n": n,
        "greedy_ie": Fixed12(ie_star),
        "smallest_other_ie": Fixed12(min_other),
    }));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Scan for trees whose coefficient vector is not componentwise above the
/// greedy tree's. Counterexamples are listed as violations; per-`k` minima
/// over the class are recorded for audit.
pub fn check_conjecture46(n: usize, dplus1: usize) -> Result<VerificationReport> {
    check_class_params(n, dplus1)?;
    if let Some(r) = empty_class_report("conj46", n, dplus1, &[]) {
        return Ok(r);
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("conj46", class_params(n, dplus1, &[]));
    let greedy = make_greedy(n, dplus1)?;
    let greedy_code = canonical_code(&greedy);
    let cg = coefficients_via_subdivision(&greedy);
    let rows: Vec<(Tree, CanonicalCode, CoeffVector)> = enumerate_trees(n, dplus1, true)
        .into_par_iter()
        .map(|t| {
            let code = canonical_code(&t);
            let c = coefficients_via_subdivision(&t);
            (t, code, c)
        })
        .collect();
    report.trees_examined = rows.len() as u64;
    let mut minima: Vec<Option<BigInt>> = vec![None; n + 1];
    for (t, code, c) in &rows {
        for (m, v) in minima.iter_mut().zip(c.as_slice()) {
            if m.as_ref().is_none_or(|cur| v < cur) {
                *m = Some(v.clone());
            }
        }
        let below: Vec<usize> = (0..=n).filter(|&k| c.get(k) < cg.get(k)).collect();
        if !below.is_empty() {
            report.push_violation(
                t.clone(),
                json!({"kind": "below_greedy", "k": below, "coefficients": coeff_strings(c), "greedy": coeff_strings(&cg)}),
            );
        } else if c == &cg && *code != greedy_code {
            report.push_violation(t.clone(), json!({"kind": "ties_greedy", "coefficients": coeff_strings(c)}));
        }
    }
    let minima: Vec<String> = minima
        .into_iter()
        .map(|m| m.map(|v| v.to_string()).unwrap_or_default())
        .collect();
    let greedy_attains_all = minima.iter().zip(cg.as_slice()).all(|(m, g)| *m == g.to_string());
    report.details.push(json!({
        "n": n,
        "per_k_minima": minima,
        "greedy_coefficients": coeff_strings(&cg),
        "greedy_attains_every_minimum": greedy_attains_all,
    }));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// `tau(S(C_h), x)` for `h = 1..=hmax`: checks the closed forms at `h = 1, 2`,
/// the one-step recursion, and strict decrease in `h`.
pub fn check_tau_chain(d: usize, hmax: usize, xs: &[Rational], max_vertices: usize) -> Result<VerificationReport> {
    if d == 0 || hmax < 2 {
        return Err(Error::InvalidParameter(format!(
            "tau chain needs d >= 1 and hmax >= 2 (got d={d}, hmax={hmax})"
        )));
    }
    check_grid(xs)?;
    let start = Instant::now();
    let params = ReportParams {
        d: vec![d],
        hmax: Some(hmax),
        xs: xs.to_vec(),
        ..Default::default()
    };
    let mut report = VerificationReport::new("lem31", params);
    let trees = (1..=hmax)
        .map(|h| make_complete_d_ary_limited(d, h, max_vertices))
        .collect::<Result<Vec<_>>>()?;
    report.trees_examined = trees.len() as u64;
    let one = Rational::one();
    let dq = Rational::from_integer(BigInt::from(d));
    let mut chains = Vec::new();
    for x in xs {
        let taus = trees
            .par_iter()
            .map(|c| tau_at(c, x, true))
            .collect::<Result<Vec<_>>>()?;
        if taus[0] != one {
            report.push_violation(trees[0].tree().clone(), json!({"kind": "closed_form_h1", "x": fmt_q(x), "tau": fmt_q(&taus[0])}));
        }
        let closed2 = (&one + x) / ((&dq + &one) * x + &one);
        if taus[1] != closed2 {
            report.push_violation(
                trees[1].tree().clone(),
                json!({"kind": "closed_form_h2", "x": fmt_q(x), "tau": fmt_q(&taus[1]), "expected": fmt_q(&closed2)}),
            );
        }
        for h in 1..hmax {
            let (prev, cur) = (&taus[h - 1], &taus[h]);
            let recursion = (&one + &dq * x / (&one + x * prev)).recip();
            if *cur != recursion {
                report.push_violation(
                    trees[h].tree().clone(),
                    json!({"kind": "recursion", "h": h + 1, "x": fmt_q(x), "tau": fmt_q(cur), "expected": fmt_q(&recursion)}),
                );
            }
            if cur >= prev {
                report.push_violation(
                    trees[h].tree().clone(),
                    json!({"kind": "not_decreasing", "h": h + 1, "x": fmt_q(x), "tau": fmt_q(cur), "previous": fmt_q(prev)}),
                );
            }
        }
        chains.push(json!({"x": fmt_q(x), "tau": taus.iter().map(fmt_q).collect::<Vec<_>>()}));
    }
    report.details.push(json!({"d": d, "chains": chains}));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// `M(S(greedy(n, d)), x) > M(S(greedy(n, d+1)), x)` for every `d` in `ds`
/// and `d + 2 <= n <= nmax`.
pub fn check_cross_degree(nmax: usize, ds: &[usize], xs: &[Rational]) -> Result<VerificationReport> {
    check_grid(xs)?;
    if let Some(&bad) = ds.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidParameter(format!("maximum degree d must be >= 2, got {bad}")));
    }
    let start = Instant::now();
    let params = ReportParams {
        n_max: Some(nmax),
        d: ds.to_vec(),
        xs: xs.to_vec(),
        ..Default::default()
    };
    let mut report = VerificationReport::new("lem44", params);
    let pairs: Vec<(usize, usize)> = ds
        .iter()
        .flat_map(|&d| (d + 2..=nmax).map(move |n| (d, n)))
        .collect();
    let rows = pairs
        .par_iter()
        .map(|&(d, n)| {
            let low = make_greedy(n, d)?;
            let high = make_greedy(n, d + 1)?;
            let (ml, mh) = (subdivision_matching_poly(&low), subdivision_matching_poly(&high));
            let vals: Vec<(Rational, Rational)> = xs.iter().map(|x| (ml.eval(x), mh.eval(x))).collect();
            Ok((d, n, low, vals))
        })
        .collect::<Result<Vec<_>>>()?;
    report.trees_examined = 2 * rows.len() as u64;
    report.params.n_min = pairs.iter().map(|p| p.1).min();
    for (d, n, low, vals) in rows {
        for (x, (a, b)) in xs.iter().zip(vals) {
            if a <= b {
                report.push_violation(
                    low.clone(),
                    json!({"kind": "not_strict", "n": n, "d": d, "x": fmt_q(x), "lower_degree": fmt_q(&a), "higher_degree": fmt_q(&b)}),
                );
            }
        }
    }
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Over all trees of each order in `nmin..=nmax`: coefficientwise
/// `c(star) <= c(T) <= c(path)` and the same for `phi` at each `x`, with
/// equality only at the star and the path respectively.
pub fn check_star_path(nmin: usize, nmax: usize, xs: &[Rational]) -> Result<VerificationReport> {
    check_grid(xs)?;
    if nmin < 2 || nmin > nmax {
        return Err(Error::InvalidParameter(format!("order range {nmin}..{nmax} must start at 2 or above and be nonempty")));
    }
    let start = Instant::now();
    let params = ReportParams {
        n_min: Some(nmin),
        n_max: Some(nmax),
        xs: xs.to_vec(),
        ..Default::default()
    };
    let mut report = VerificationReport::new("cor45", params);
    for n in nmin..=nmax {
        let star = make_star(n)?;
        let path = make_path(n)?;
        let (star_code, path_code) = (canonical_code(&star), canonical_code(&path));
        let (cs, cp) = (coefficients_via_subdivision(&star), coefficients_via_subdivision(&path));
        let rows: Vec<(Tree, CanonicalCode, CoeffVector)> = enumerate_trees(n, n - 1, false)
            .into_par_iter()
            .map(|t| {
                let code = canonical_code(&t);
                let c = coefficients_via_subdivision(&t);
                (t, code, c)
            })
            .collect();
        report.trees_examined += rows.len() as u64;
        for (t, code, c) in &rows {
            let below_star: Vec<usize> = (0..n).filter(|&k| c.get(k) < cs.get(k)).collect();
            let above_path: Vec<usize> = (0..n).filter(|&k| c.get(k) > cp.get(k)).collect();
            if !below_star.is_empty() || !above_path.is_empty() {
                report.push_violation(
                    t.clone(),
                    json!({"kind": "coefficients", "below_star": below_star, "above_path": above_path}),
                );
            }
            for x in xs {
                let (v, vs, vp) = (phi_eval(c, x), phi_eval(&cs, x), phi_eval(&cp, x));
                let star_bad = v < vs || (v == vs && *code != star_code);
                let path_bad = v > vp || (v == vp && *code != path_code);
                if star_bad || path_bad {
                    report.push_violation(
                        t.clone(),
                        json!({"kind": "phi", "x": fmt_q(x), "value": fmt_q(&v), "star": fmt_q(&vs), "path": fmt_q(&vp)}),
                    );
                }
            }
        }
    }
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Hosoya index of the subdivision is minimized by the greedy tree only.
pub fn check_hosoya_min(n: usize, dplus1: usize) -> Result<VerificationReport> {
    check_class_params(n, dplus1)?;
    if let Some(r) = empty_class_report("cor39", n, dplus1, &[]) {
        return Ok(r);
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("cor39", class_params(n, dplus1, &[]));
    let greedy = make_greedy(n, dplus1)?;
    let greedy_code = canonical_code(&greedy);
    let zg = subdivision_matching_poly(&greedy).coeff_sum();
    let rows: Vec<(Tree, CanonicalCode, BigInt)> = enumerate_trees(n, dplus1, true)
        .into_par_iter()
        .map(|t| {
            let code = canonical_code(&t);
            let z = subdivision_matching_poly(&t).coeff_sum();
            (t, code, z)
        })
        .collect();
    report.trees_examined = rows.len() as u64;
    for (t, code, z) in &rows {
        if z < &zg || (z == &zg && *code != greedy_code) {
            report.push_violation(
                t.clone(),
                json!({"kind": "hosoya", "z": z.to_string(), "greedy_z": zg.to_string()}),
            );
        }
    }
    report.details.push(json!({"n": n, "greedy_hosoya": zg.to_string()}));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
    if n <= 2 {
        return make_path(n).expect("n >= 1");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    from_prufer(&seq).expect("random Prüfer sequence is valid")
}

/// Removing vertices from a rooted tree (keeping the root) strictly raises
/// `tau(S(.), x)`. Each sample prunes one or more random non-root leaves.
pub fn check_subtree_monotonicity(samples: usize, nmax: usize, xs: &[Rational], seed: u64) -> Result<VerificationReport> {
    check_grid(xs)?;
    if nmax < 2 {
        return Err(Error::InvalidParameter("subtree sampling needs nmax >= 2".into()));
    }
    let start = Instant::now();
    let params = ReportParams {
        n_min: Some(2),
        n_max: Some(nmax),
        samples: Some(samples),
        seed: Some(seed),
        xs: xs.to_vec(),
        ..Default::default()
    };
    let mut report = VerificationReport::new("lem24", params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(2..=nmax);
        let t = random_tree(&mut rng, n);
        let root = rng.gen_range(0..n);
        let mut keep = vec![true; n];
        let mut alive = n;
        let prune = rng.gen_range(1..n);
        for _ in 0..prune {
            let leaves: Vec<usize> = (0..n)
                .filter(|&v| {
                    keep[v] && v != root && t.neighbors(v).iter().filter(|&&w| keep[w]).count() == 1
                })
                .collect();
            if leaves.is_empty() {
                break;
            }
            keep[leaves[rng.gen_range(0..leaves.len())]] = false;
            alive -= 1;
        }
        let mut verts = vec![root];
        verts.extend((0..n).filter(|&v| keep[v] && v != root));
        let (sub, _) = t.induced(&verts)?;
        debug_assert_eq!(sub.order(), alive);
        let big = RootedTree::new(t.clone(), root)?;
        let small = RootedTree::new(sub, 0)?;
        report.trees_examined += 1;
        for x in xs {
            let (tb, ts) = (tau_at(&big, x, true)?, tau_at(&small, x, true)?);
            if ts <= tb {
                report.push_violation(
                    t.clone(),
                    json!({"kind": "not_increasing", "root": root, "subtree": small.tree(), "x": fmt_q(x), "tau_tree": fmt_q(&tb), "tau_subtree": fmt_q(&ts)}),
                );
            }
        }
    }
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Exchange on random decompositions `(T, u, v)` with `u`, `v` non-pendant,
/// `d` drawn from `max(d1, d2)..=max(d1, d2) + 2`, and `x` from the grid.
/// Checks that `M(S(.), x)` never increases and that every equality is
/// explained by one of the two equality conditions.
pub fn check_exchange_random(samples: usize, nmax: usize, xs: &[Rational], seed: u64) -> Result<VerificationReport> {
    check_grid(xs)?;
    if nmax < 4 || xs.is_empty() {
        return Err(Error::InvalidParameter("exchange sampling needs nmax >= 4 and a nonempty grid".into()));
    }
    let start = Instant::now();
    let params = ReportParams {
        n_min: Some(4),
        n_max: Some(nmax),
        samples: Some(samples),
        seed: Some(seed),
        xs: xs.to_vec(),
        ..Default::default()
    };
    let mut report = VerificationReport::new("thm25-random", params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut equalities = 0u64;
    let mut strict = 0u64;
    let mut swaps = 0u64;
    while (report.trees_examined as usize) < samples {
        let n = rng.gen_range(4..=nmax);
        let t = random_tree(&mut rng, n);
        let inner: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 2).collect();
        if inner.len() < 2 {
            continue;
        }
        let u = inner[rng.gen_range(0..inner.len())];
        let v = loop {
            let w = inner[rng.gen_range(0..inner.len())];
            if w != u {
                break w;
            }
        };
        let dec = decompose(&t, u, v)?;
        let d = dec.left.len().max(dec.right.len()) + rng.gen_range(0..=2);
        let x = &xs[rng.gen_range(0..xs.len())];
        let (_, rep) = exchange(&dec, d, x)?;
        report.trees_examined += 1;
        if rep.swapped {
            swaps += 1;
        }
        if rep.equality {
            equalities += 1;
        } else {
            strict += 1;
        }
        if !rep.never_increases() || !rep.equality_explained() {
            let kind = if rep.never_increases() { "unexplained_equality" } else { "increase" };
            report.push_violation(
                t.clone(),
                json!({"kind": kind, "u": u, "v": v, "exchange": rep}),
            );
        }
    }
    report.details.push(json!({"equalities": equalities, "strict_decreases": strict, "swaps": swaps}));
    report.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Default cap for complete d-ary trees in the tau chain check.
pub const TAU_CHAIN_MAX_VERTICES: usize = DEFAULT_MAX_VERTICES;
