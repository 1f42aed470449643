//! Spectral quantities of trees: Laplacian spectrum, Laplacian-like energy,
//! incidence energy, adjacency energy, and the Coulson-integral evaluation of
//! the energy of a subdivision from its matching numbers.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matchgen::subdivision_triple;
use crate::poly::ln_bigint;
use crate::trees::{subdivide, RootedTree, Tree};

/// Absolute tolerance of the symmetric eigensolver.
pub const EIGEN_TOL: f64 = 1e-12;

/// Tolerance for identities between derived spectral quantities.
pub const IDENTITY_TOL: f64 = 1e-9;

fn symmetric_spectrum(m: DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, 0).expect("symmetric eigensolver converges");
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    vals
}

fn matrix(t: &Tree, diag_sign: f64, off: f64) -> DMatrix<f64> {
    let n = t.order();
    let mut m = DMatrix::zeros(n, n);
    for v in 0..n {
        m[(v, v)] = diag_sign * t.degree(v) as f64;
    }
    for &(a, b) in t.edges() {
        m[(a, b)] = off;
        m[(b, a)] = off;
    }
    m
}

/// Eigenvalues of `L = D - A`, descending; values within tolerance of zero
/// (or slightly negative) are clamped to 0.
pub fn laplacian_spectrum(t: &Tree) -> Vec<f64> {
    clamp_small(symmetric_spectrum(matrix(t, 1.0, -1.0)))
}

/// Eigenvalues of the signless Laplacian `Q = D + A`, descending.
pub fn signless_laplacian_spectrum(t: &Tree) -> Vec<f64> {
    clamp_small(symmetric_spectrum(matrix(t, 1.0, 1.0)))
}

pub fn adjacency_spectrum(t: &Tree) -> Vec<f64> {
    symmetric_spectrum(matrix(t, 0.0, 1.0))
}

fn clamp_small(mut vals: Vec<f64>) -> Vec<f64> {
    for v in &mut vals {
        if *v < 1e3 * EIGEN_TOL {
            *v = v.max(0.0);
            if *v < 1e3 * EIGEN_TOL {
                *v = 0.0;
            }
        }
    }
    vals
}

/// Sum of the square roots of the Laplacian eigenvalues.
pub fn lel(t: &Tree) -> f64 {
    let mu = laplacian_spectrum(t);
    // The smallest eigenvalue of a connected graph's Laplacian is 0.
    mu[..mu.len() - 1].iter().map(|m| m.sqrt()).sum()
}

/// Sum of the singular values of the vertex-edge incidence matrix, i.e. of
/// the square roots of the eigenvalues of `I I^T = Q`.
pub fn incidence_energy(t: &Tree) -> f64 {
    signless_laplacian_spectrum(t).iter().map(|q| q.sqrt()).sum()
}

/// Incidence energy straight from the singular values of the `n x (n-1)`
/// incidence matrix.
pub fn incidence_energy_svd(t: &Tree) -> f64 {
    let n = t.order();
    if n == 1 {
        return 0.0;
    }
    let mut inc = DMatrix::zeros(n, n - 1);
    for (j, &(a, b)) in t.edges().iter().enumerate() {
        inc[(a, j)] = 1.0;
        inc[(b, j)] = 1.0;
    }
    inc.singular_values().iter().sum()
}

pub fn adjacency_energy(t: &Tree) -> f64 {
    adjacency_spectrum(t).iter().map(|l| l.abs()).sum()
}

/// `log(c_0 + c_1 y + ... )` for nonnegative coefficients with `c_0 > 0`,
/// accurate both when the tail is tiny and when the terms overflow `f64`.
fn log_poly(ln_coeffs: &[Option<f64>], y: f64) -> f64 {
    let ln0 = ln_coeffs[0].expect("constant term is positive");
    let ln_y = y.ln();
    let rel: Vec<f64> = ln_coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter_map(|(k, c)| c.map(|lc| lc - ln0 + k as f64 * ln_y))
        .collect();
    let top = rel.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if top < 0.0 {
        ln0 + rel.iter().map(|r| r.exp()).sum::<f64>().ln_1p()
    } else {
        // 1 + sum exp(r) = exp(top) * (exp(-top) + sum exp(r - top))
        ln0 + top + ((-top).exp() + rel.iter().map(|r| (r - top).exp()).sum::<f64>()).ln()
    }
}

fn ln_coeffs(coeffs: &[BigInt]) -> Vec<Option<f64>> {
    coeffs
        .iter()
        .map(|c| if c.is_zero() { None } else { Some(ln_bigint(c)) })
        .collect()
}

/// Result of an adaptive quadrature.
#[derive(Clone, Copy, Debug)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const GK_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Quadrature {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = GK_WEIGHTS[7] * fc;
    let mut gauss = GAUSS_WEIGHTS[3] * fc;
    for i in 0..7 {
        let dx = h * GK_NODES[i];
        let pair = f(c - dx) + f(c + dx);
        kronrod += GK_WEIGHTS[i] * pair;
        if i % 2 == 1 {
            gauss += GAUSS_WEIGHTS[i / 2] * pair;
        }
    }
    Quadrature {
        value: kronrod * h,
        error: ((kronrod - gauss) * h).abs(),
    }
}

/// Adaptive 15-point Gauss-Kronrod on `[a, b]`, bisecting the interval with
/// the largest error estimate until the total estimate drops below `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_intervals: usize) -> Result<Quadrature> {
    let mut parts = vec![(a, b, gauss_kronrod(&f, a, b))];
    loop {
        let value: f64 = parts.iter().map(|p| p.2.value).sum();
        let error: f64 = parts.iter().map(|p| p.2.error).sum();
        if error <= tol {
            return Ok(Quadrature { value, error });
        }
        if parts.len() >= max_intervals {
            return Err(Error::Quadrature { value, estimate: error });
        }
        let worst = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2.error.total_cmp(&y.1 .2.error))
            .map(|(i, _)| i)
            .expect("at least one interval");
        let (lo, hi, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        parts.push((lo, mid, gauss_kronrod(&f, lo, mid)));
        parts.push((mid, hi, gauss_kronrod(&f, mid, hi)));
    }
}

/// Energy of a tree from its matching numbers `m_k` by the Coulson integral
/// `E = (2/pi) int_0^inf x^-2 log(sum_k m_k x^(2k)) dx`.
///
/// `[0, 1]` is integrated directly (the integrand tends to `m_1` at 0). On
/// `[1, inf)` the substitution `x = 1/t` gives
/// `int_0^1 log(sum_k m_k t^(-2k)) dt = 2K + int_0^1 log(sum_k m_k t^(2(K-k))) dt`
/// with `K` the largest matching size; the remaining integrand is smooth.
pub fn coulson_energy(matching_numbers: &[BigInt]) -> Result<f64> {
    let k_max = matching_numbers.len().saturating_sub(1);
    if k_max == 0 {
        return Ok(0.0);
    }
    let forward = ln_coeffs(matching_numbers);
    let mut reversed_coeffs = matching_numbers.to_vec();
    reversed_coeffs.reverse();
    let reversed = ln_coeffs(&reversed_coeffs);

    let m1 = num_traits::ToPrimitive::to_f64(&matching_numbers[1]).unwrap_or(f64::INFINITY);
    let head = |x: f64| {
        if x <= 0.0 {
            m1
        } else {
            log_poly(&forward, x * x) / (x * x)
        }
    };
    let tail = |t: f64| {
        if t <= 0.0 {
            reversed[0].expect("largest matching count is positive")
        } else {
            log_poly(&reversed, t * t)
        }
    };
    let tol = 1e-11;
    let a = integrate(head, 0.0, 1.0, tol, 2000)?;
    let b = integrate(tail, 0.0, 1.0, tol, 2000)?;
    Ok(2.0 / std::f64::consts::PI * (a.value + b.value + 2.0 * k_max as f64))
}

/// `E(S(T))` by the Coulson integral over the exact matching numbers of
/// `S(T)`.
pub fn coulson_energy_of_subdivision(t: &Tree) -> Result<f64> {
    let rooted = RootedTree::new(t.clone(), 0).expect("vertex 0 exists");
    let m = subdivision_triple(&rooted).m_all;
    coulson_energy(m.coeffs())
}

fn fixed12<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::report::fixed_decimal(*x, s)
}

fn fixed12_vec<S: Serializer>(xs: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| crate::report::Fixed12(x)))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralSummary {
    #[serde(serialize_with = "fixed12_vec")]
    pub laplacian_eigenvalues: Vec<f64>,
    #[serde(serialize_with = "fixed12")]
    pub lel: f64,
    #[serde(serialize_with = "fixed12")]
    pub ie: f64,
    #[serde(serialize_with = "fixed12")]
    pub subdivision_energy: f64,
}

impl SpectralSummary {
    pub fn compute(t: &Tree) -> SpectralSummary {
        SpectralSummary {
            laplacian_eigenvalues: laplacian_spectrum(t),
            lel: lel(t),
            ie: incidence_energy(t),
            subdivision_energy: adjacency_energy(&subdivide(t)),
        }
    }

    /// The incidence energy equals the Laplacian-like energy and half the
    /// subdivision energy (trees are bipartite).
    pub fn identities_hold(&self) -> bool {
        (self.ie - self.lel).abs() <= IDENTITY_TOL
            && (2.0 * self.ie - self.subdivision_energy).abs() <= IDENTITY_TOL
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{enumerate_trees, make_path, make_star};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn spectrum_examples() {
        let p2 = laplacian_spectrum(&make_path(2).unwrap());
        assert!(close(p2[0], 2.0, 1e-12) && p2[1] == 0.0);
        let k13 = laplacian_spectrum(&make_star(4).unwrap());
        for (got, want) in k13.iter().zip([4.0, 1.0, 1.0, 0.0]) {
            assert!(close(*got, want, 1e-12), "{k13:?}");
        }
        assert_eq!(laplacian_spectrum(&Tree::single_vertex()), vec![0.0]);
    }

    #[test]
    fn lel_and_ie_examples() {
        let sqrt2 = 2f64.sqrt();
        assert!(close(lel(&make_path(2).unwrap()), sqrt2, 1e-12));
        assert!(close(lel(&make_star(4).unwrap()), 4.0, 1e-12));
        assert_eq!(lel(&Tree::single_vertex()), 0.0);
        assert!(close(incidence_energy(&make_path(2).unwrap()), sqrt2, 1e-12));
        assert!(close(incidence_energy(&make_star(4).unwrap()), 4.0, 1e-12));
        assert_eq!(incidence_energy(&Tree::single_vertex()), 0.0);
        assert!(close(incidence_energy(&make_path(3).unwrap()), 1.0 + 3f64.sqrt(), 1e-12));
    }

    #[test]
    fn adjacency_energy_examples() {
        assert!(close(adjacency_energy(&make_path(2).unwrap()), 2.0, 1e-12));
        assert!(close(adjacency_energy(&make_path(3).unwrap()), 2.0 * 2f64.sqrt(), 1e-12));
        assert_eq!(adjacency_energy(&Tree::single_vertex()), 0.0);
    }

    #[test]
    fn coulson_examples() {
        let e = coulson_energy_of_subdivision(&make_path(2).unwrap()).unwrap();
        assert!(close(e, 2.0 * 2f64.sqrt(), 1e-6), "{e}");
        assert_eq!(coulson_energy_of_subdivision(&Tree::single_vertex()).unwrap(), 0.0);
        let k13 = make_star(4).unwrap();
        let e = coulson_energy_of_subdivision(&k13).unwrap();
        assert!(close(e, adjacency_energy(&subdivide(&k13)), 1e-6), "{e}");
    }

    #[test]
    fn coulson_on_a_large_tree_does_not_overflow() {
        let t = make_path(400).unwrap();
        let e = coulson_energy_of_subdivision(&t).unwrap();
        assert!(close(e, adjacency_energy(&subdivide(&t)), 1e-6), "{e}");
    }

    #[test]
    fn quadrature_reports_non_convergence() {
        let r = integrate(|x: f64| (1.0 / x).sin(), 1e-9, 1.0, 1e-15, 4);
        assert!(matches!(r, Err(Error::Quadrature { .. })));
        let q = integrate(|x: f64| x * x, 0.0, 1.0, 1e-14, 10).unwrap();
        assert!(close(q.value, 1.0 / 3.0, 1e-15));
    }

    #[test]
    fn incidence_routes_agree() {
        for t in enumerate_trees(8, 7, false) {
            assert!(close(incidence_energy(&t), incidence_energy_svd(&t), 1e-9));
        }
    }

    #[test]
    fn summary_identities_and_trace() {
        for n in 1..=8 {
            for t in enumerate_trees(n, n.max(2) - 1, false) {
                let s = SpectralSummary::compute(&t);
                assert!(s.identities_hold());
                let trace: f64 = s.laplacian_eigenvalues.iter().sum();
                assert!(close(trace, 2.0 * (n as f64 - 1.0), 1e-9));
                assert_eq!(*s.laplacian_eigenvalues.last().unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn summary_json_uses_fixed_decimals() {
        let s = SpectralSummary::compute(&make_path(2).unwrap());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"laplacian_eigenvalues":[2.000000000000,0.000000000000],"lel":1.414213562373,"ie":1.414213562373,"subdivision_energy":2.828427124746}"#
        );
    }
}
