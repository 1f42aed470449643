//! Laplacian coefficients of trees.
//!
//! `det(lambda I - L) = sum_k (-1)^k c_k lambda^(n-k)`. The coefficients are
//! read off the matching polynomial of the subdivision; an exact
//! characteristic-polynomial computation is kept as an independent check.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matchgen::subdivision_triple;
use crate::poly::{deserialize_bigints, serialize_bigints, IntPoly, Rational};
use crate::trees::{RootedTree, Tree};

/// `(c_0, ..., c_n)` for a tree on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffVector(Vec<BigInt>);

impl CoeffVector {
    pub fn new(c: Vec<BigInt>) -> Self {
        CoeffVector(c)
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    /// Order of the underlying tree.
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigInt {
        &self.0[k]
    }

    /// `phi(x) = c_0 + c_1 x + ... + c_(n-1) x^(n-1)` as a polynomial.
    pub fn phi_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.0[..self.order()].to_vec())
    }

    /// Checks `c_0 = 1`, `c_1 = 2(n-1)`, `c_(n-1) = n`, `c_n = 0` and
    /// nonnegativity.
    pub fn satisfies_tree_identities(&self) -> bool {
        let n = self.order();
        let c = &self.0;
        let mut ok = c[0].is_one() && c[n].is_zero() && c.iter().all(|v| !v.is_negative());
        if n >= 2 {
            ok &= c[1] == BigInt::from(2 * (n - 1)) && c[n - 1] == BigInt::from(n);
        }
        ok
    }
}

impl Serialize for CoeffVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigints(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for CoeffVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = deserialize_bigints(d)?;
        if c.is_empty() {
            return Err(serde::de::Error::custom("coefficient vector is empty"));
        }
        Ok(CoeffVector(c))
    }
}

/// `c_k` is the number of `k`-matchings of the subdivision, `c_n = 0`.
pub fn coefficients_via_subdivision(t: &Tree) -> CoeffVector {
    let n = t.order();
    let rooted = RootedTree::new(t.clone(), 0).expect("vertex 0 exists");
    let m = subdivision_triple(&rooted).m_all;
    CoeffVector((0..=n).map(|k| if k < n { m.coeff(k) } else { BigInt::zero() }).collect())
}

pub fn laplacian_matrix(t: &Tree) -> Vec<Vec<BigInt>> {
    let n = t.order();
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for (v, row) in l.iter_mut().enumerate() {
        row[v] = BigInt::from(t.degree(v));
    }
    for &(a, b) in t.edges() {
        l[a][b] = BigInt::from(-1);
        l[b][a] = BigInt::from(-1);
    }
    l
}

/// Coefficients of `det(lambda I - A)`, highest power first (`p[0] = 1`),
/// by the Faddeev-LeVerrier recurrence. Every division is exact for an
/// integer matrix.
pub fn characteristic_polynomial(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut p = vec![BigInt::one()];
    // m holds M_k; start with M_1 = I.
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for k in 1..=n {
        let am = mat_mul(a, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let c = -trace / BigInt::from(k);
        p.push(c.clone());
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    p
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Unsigned coefficients from the exact characteristic polynomial of `L`.
pub fn coefficients_via_charpoly(t: &Tree) -> CoeffVector {
    let p = characteristic_polynomial(&laplacian_matrix(t));
    CoeffVector(
        p.into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c } else { -c })
            .collect(),
    )
}

pub fn phi_eval(c: &CoeffVector, x: &Rational) -> Rational {
    c.phi_poly().eval(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Componentwise comparison of `(c_0, ..., c_(n-1))`.
pub fn poset_compare(a: &CoeffVector, b: &CoeffVector) -> Result<PosetOrdering> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let n = a.order();
    let (mut less, mut greater) = (false, false);
    for k in 0..n {
        match a.0[k].cmp(&b.0[k]) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (less, greater) {
        (false, false) => PosetOrdering::Equal,
        (true, false) => PosetOrdering::Less,
        (false, true) => PosetOrdering::Greater,
        (true, true) => PosetOrdering::Incomparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{enumerate_trees, make_path, make_star, subdivide};

    fn cv(c: &[i64]) -> CoeffVector {
        CoeffVector(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Determinant by cofactor expansion: an oracle independent of the
    /// recurrence, usable for tiny matrices.
    fn det(m: &[Vec<IntPoly>]) -> IntPoly {
        let n = m.len();
        if n == 0 {
            return IntPoly::one();
        }
        let mut acc = IntPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<IntPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * &det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// `det(lambda I - L)` as a polynomial in lambda, low degree first.
    fn charpoly_by_cofactors(t: &Tree) -> IntPoly {
        let l = laplacian_matrix(t);
        let n = l.len();
        let m: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = IntPoly::constant(-l[i][j].clone());
                        if i == j { &c + &IntPoly::x() } else { c }
                    })
                    .collect()
            })
            .collect();
        det(&m)
    }

    #[test]
    fn subdivision_route_examples() {
        assert_eq!(coefficients_via_subdivision(&make_path(3).unwrap()), cv(&[1, 4, 3, 0]));
        assert_eq!(coefficients_via_subdivision(&make_star(4).unwrap()), cv(&[1, 6, 9, 4, 0]));
        assert_eq!(coefficients_via_subdivision(&Tree::single_vertex()), cv(&[1, 0]));
    }

    #[test]
    fn charpoly_route_examples() {
        assert_eq!(coefficients_via_charpoly(&make_path(3).unwrap()), cv(&[1, 4, 3, 0]));
        assert_eq!(coefficients_via_charpoly(&make_star(4).unwrap()), cv(&[1, 6, 9, 4, 0]));
        assert_eq!(coefficients_via_charpoly(&make_path(2).unwrap()), cv(&[1, 2, 0]));
        assert_eq!(coefficients_via_charpoly(&Tree::single_vertex()), cv(&[1, 0]));
        // lambda^3 - 4 lambda^2 + 3 lambda, low degree first.
        assert_eq!(charpoly_by_cofactors(&make_path(3).unwrap()), IntPoly::from_i64s(&[0, 3, -4, 1]));
    }

    #[test]
    fn charpoly_matches_cofactor_oracle() {
        for n in 1..=6 {
            for t in enumerate_trees(n, n.max(2) - 1, false) {
                let oracle = charpoly_by_cofactors(&t);
                let fl = characteristic_polynomial(&laplacian_matrix(&t));
                let low_first: Vec<BigInt> = fl.into_iter().rev().collect();
                assert_eq!(IntPoly::from_coeffs(low_first), oracle);
            }
        }
    }

    #[test]
    fn routes_agree_and_identities_hold() {
        for n in 1..=9 {
            for t in enumerate_trees(n, n.max(2) - 1, false) {
                let a = coefficients_via_subdivision(&t);
                assert_eq!(a, coefficients_via_charpoly(&t));
                assert!(a.satisfies_tree_identities(), "{}", t.to_json());
                assert_eq!(a.phi_poly(), crate::matchgen::matching_poly(&subdivide(&t)));
            }
        }
    }

    #[test]
    fn phi_examples() {
        let zero = Rational::zero();
        let one = Rational::one();
        for t in enumerate_trees(6, 5, false) {
            assert_eq!(phi_eval(&coefficients_via_subdivision(&t), &zero), one);
        }
        let p3 = coefficients_via_subdivision(&make_path(3).unwrap());
        assert_eq!(phi_eval(&p3, &one), Rational::from_integer(8.into()));
        let k13 = coefficients_via_subdivision(&make_star(4).unwrap());
        assert_eq!(phi_eval(&k13, &one), Rational::from_integer(20.into()));
    }

    #[test]
    fn poset_examples() {
        let star = coefficients_via_charpoly(&make_star(5).unwrap());
        let path = coefficients_via_charpoly(&make_path(5).unwrap());
        assert_eq!(poset_compare(&star, &path).unwrap(), PosetOrdering::Less);
        assert_eq!(poset_compare(&path, &star).unwrap(), PosetOrdering::Greater);
        assert_eq!(poset_compare(&path, &path).unwrap(), PosetOrdering::Equal);
        let p4 = coefficients_via_charpoly(&make_path(4).unwrap());
        assert_eq!(p4, cv(&[1, 6, 10, 4, 0]));
        let k13 = cv(&[1, 6, 9, 4, 0]);
        assert_eq!(poset_compare(&p4, &k13).unwrap(), PosetOrdering::Greater);
        assert_eq!(poset_compare(&p4, &star), Err(Error::OrderMismatch(4, 5)));
        assert_eq!(
            poset_compare(&cv(&[1, 2, 5, 0]), &cv(&[1, 3, 4, 0])).unwrap(),
            PosetOrdering::Incomparable
        );
    }

    #[test]
    fn poset_is_a_partial_order() {
        let vecs: Vec<CoeffVector> = enumerate_trees(8, 7, false)
            .iter()
            .map(coefficients_via_subdivision)
            .collect();
        let le = |a: &CoeffVector, b: &CoeffVector| {
            matches!(poset_compare(a, b).unwrap(), PosetOrdering::Less | PosetOrdering::Equal)
        };
        for a in &vecs {
            assert!(le(a, a));
            for b in &vecs {
                if le(a, b) && le(b, a) {
                    assert_eq!(a, b);
                }
                for c in &vecs {
                    if le(a, b) && le(b, c) {
                        assert!(le(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn json_is_decimal_strings() {
        let c = cv(&[1, 4, 3, 0]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"["1","4","3","0"]"#);
        assert!(serde_json::from_str::<CoeffVector>("[]").is_err());
    }
}
