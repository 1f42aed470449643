//! Matching generating functions of trees and of their subdivisions.
//!
//! For a rooted tree the triple `(M, M0, M1)` counts all matchings, those
//! leaving the root free, and those covering it. Both the plain and the
//! subdivided triples are computed bottom-up over the rooted layout; the
//! subdivided one never builds the subdivision explicitly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{require_positive, IntPoly, Rational};
use crate::trees::{RootedTree, Tree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingTriple {
    /// `M`: all matchings.
    pub m_all: IntPoly,
    /// `M0`: matchings not covering the root.
    pub m_unsat: IntPoly,
    /// `M1`: matchings covering the root.
    pub m_sat: IntPoly,
}

impl MatchingTriple {
    pub fn single_vertex() -> Self {
        MatchingTriple {
            m_all: IntPoly::one(),
            m_unsat: IntPoly::one(),
            m_sat: IntPoly::zero(),
        }
    }

    /// `M0 / M` at `x`. The denominator has constant term 1 and nonnegative
    /// coefficients, so it is positive for `x > 0`.
    pub fn tau(&self, x: &Rational) -> Result<Rational> {
        require_positive(x)?;
        Ok(self.m_unsat.eval(x) / self.m_all.eval(x))
    }

    pub fn is_consistent(&self) -> bool {
        self.m_all == &self.m_unsat + &self.m_sat && self.m_sat.coeff(0).is_zero()
    }
}

/// Combine children triples under a new root, given how a child contributes:
/// `free(c)` is the factor when the root does not use the edge to `c`, and
/// `covered(c)` the factor (without the `x`) when it does.
fn combine<F, G>(children: &[&MatchingTriple], free: F, covered: G) -> MatchingTriple
where
    F: Fn(&MatchingTriple) -> IntPoly,
    G: Fn(&MatchingTriple) -> IntPoly,
{
    let factors: Vec<IntPoly> = children.iter().map(|c| free(c)).collect();
    let k = factors.len();
    // prefix[i] = product of factors[..i], suffix[i] = product of factors[i..].
    let mut prefix = Vec::with_capacity(k + 1);
    prefix.push(IntPoly::one());
    for f in &factors {
        let next = prefix.last().expect("nonempty") * f;
        prefix.push(next);
    }
    let mut suffix = vec![IntPoly::one(); k + 1];
    for i in (0..k).rev() {
        suffix[i] = &factors[i] * &suffix[i + 1];
    }
    let m_unsat = prefix[k].clone();
    let mut sat_sum = IntPoly::zero();
    for (i, c) in children.iter().enumerate() {
        let others = &prefix[i] * &suffix[i + 1];
        sat_sum = &sat_sum + &(&covered(c) * &others);
    }
    let m_sat = sat_sum.shift();
    MatchingTriple {
        m_all: &m_unsat + &m_sat,
        m_unsat,
        m_sat,
    }
}

fn bottom_up<C>(t: &RootedTree, mut node: C) -> MatchingTriple
where
    C: FnMut(&[&MatchingTriple]) -> MatchingTriple,
{
    let layout = t.layout();
    let mut triples: Vec<Option<MatchingTriple>> = vec![None; t.order()];
    for &v in layout.order.iter().rev() {
        let kids: Vec<&MatchingTriple> = layout.children[v]
            .iter()
            .map(|&c| triples[c].as_ref().expect("children are finished first"))
            .collect();
        let triple = node(&kids);
        triples[v] = Some(triple);
        for &c in &layout.children[v] {
            triples[c] = None;
        }
    }
    triples[t.root()].take().expect("root triple")
}

/// `M0 = prod M(T_j)`, `M1 = x sum_j M0(T_j) prod_{i != j} M(T_i)`.
pub fn matching_triple(t: &RootedTree) -> MatchingTriple {
    bottom_up(t, |kids| {
        combine(kids, |c| c.m_all.clone(), |c| c.m_unsat.clone())
    })
}

/// Matching generating function of a free tree.
pub fn matching_poly(t: &Tree) -> IntPoly {
    let rooted = RootedTree::new(t.clone(), 0).expect("vertex 0 exists");
    matching_triple(&rooted).m_all
}

/// Matching generating function of the tree obtained by identifying the
/// roots of `a` and `b`: `M(a) M0(b) + M0(a) M1(b)`.
pub fn merge_at_root(a: &MatchingTriple, b: &MatchingTriple) -> IntPoly {
    &(&a.m_all * &b.m_unsat) + &(&a.m_unsat * &b.m_sat)
}

/// Triple of the subdivision `S(t)` rooted at the original root. Each child
/// `c` sits behind a subdivision vertex, so the root sees the planted triple
/// `M' = M(S(c)) + x M0(S(c))`, `M0' = M(S(c))`.
pub fn subdivision_triple(t: &RootedTree) -> MatchingTriple {
    bottom_up(t, |kids| {
        combine(
            kids,
            |c| &c.m_all + &c.m_unsat.shift(),
            |c| c.m_all.clone(),
        )
    })
}

/// Exact `tau(T, x) = M0(T, x) / M(T, x)`, or the same for `S(T)` when
/// `subdivided` is set.
pub fn tau_at(t: &RootedTree, x: &Rational, subdivided: bool) -> Result<Rational> {
    require_positive(x)?;
    let triple = if subdivided {
        subdivision_triple(t)
    } else {
        matching_triple(t)
    };
    triple.tau(x)
}

/// `tau(S(T), x)` through the continued-fraction recursion over branches,
/// without forming any polynomial.
pub fn tau_subdivided_recursive(t: &RootedTree, x: &Rational) -> Result<Rational> {
    require_positive(x)?;
    let layout = t.layout();
    let one = Rational::one();
    let mut tau: Vec<Rational> = vec![Rational::zero(); t.order()];
    for &v in layout.order.iter().rev() {
        let sum: Rational = layout.children[v]
            .iter()
            .map(|&c| x / (&one + x * &tau[c]))
            .sum();
        tau[v] = (&one + sum).recip();
    }
    Ok(tau[t.root()].clone())
}

/// Matching polynomials split by whether `u` and `v` are covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourWaySplit {
    /// neither covered
    pub m00: IntPoly,
    /// `v` covered, `u` free
    pub m01: IntPoly,
    /// `u` covered, `v` free
    pub m10: IntPoly,
    /// both covered
    pub m11: IntPoly,
}

impl FourWaySplit {
    pub fn total(&self) -> IntPoly {
        &(&self.m00 + &self.m01) + &(&self.m10 + &self.m11)
    }
}

/// Four-way split of the matchings of `t` with respect to `u` and `v`.
#[allow(clippy::needless_range_loop)]
pub fn four_way_split(t: &Tree, u: usize, v: usize) -> Result<FourWaySplit> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let rooted = RootedTree::new(t.clone(), u)?;
    let layout = rooted.layout();
    // state[w][a][b]: matchings of the subtree at w; a = w covered,
    // b = v covered (v inside the subtree).
    type State = [[IntPoly; 2]; 2];
    let empty = || -> State { [[IntPoly::zero(), IntPoly::zero()], [IntPoly::zero(), IntPoly::zero()]] };
    let mut states: Vec<Option<State>> = vec![None; t.order()];
    for &w in layout.order.iter().rev() {
        let mut cur = empty();
        cur[0][0] = IntPoly::one();
        for &c in &layout.children[w] {
            let child = states[c].take().expect("children are finished first");
            let mut next = empty();
            for a in 0..2 {
                for b in 0..2 {
                    if cur[a][b].is_zero() {
                        continue;
                    }
                    for ca in 0..2 {
                        for cb in 0..2 {
                            if child[ca][cb].is_zero() || (b == 1 && cb == 1) {
                                continue;
                            }
                            let prod = &cur[a][b] * &child[ca][cb];
                            // Edge w-c left out.
                            next[a][b | cb] = &next[a][b | cb] + &prod;
                            // Edge w-c used: both endpoints must be free.
                            if a == 0 && ca == 0 {
                                let cov = if c == v { 1 } else { cb };
                                next[1][b | cov] = &next[1][b | cov] + &prod.shift();
                            }
                        }
                    }
                }
            }
            cur = next;
        }
        if w == v {
            // v's own coverage is the root flag; nothing below v can set b.
            let [[free, _], [covered, _]] = cur;
            cur = [[free, IntPoly::zero()], [IntPoly::zero(), covered]];
        }
        states[w] = Some(cur);
    }
    let [[m00, m01], [m10, m11]] = states[u].take().expect("root state");
    Ok(FourWaySplit { m00, m01, m10, m11 })
}

/// Total number of matchings.
pub fn hosoya(t: &Tree) -> BigInt {
    matching_poly(t).coeff_sum()
}
