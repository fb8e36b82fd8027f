//! Tensor-product quadrature over the interior and exterior of the unit
//! sphere, the scalar inner product `⟨f,g⟩ = ∫ (f0 g0 + f1 g1 + f2 g2) dV`,
//! and Gram matrices of basis functions.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use nalgebra::{DMatrix, SymmetricEigen};

use crate::algebra::ReducedQuaternion;
use crate::error::{Error, Result};
use crate::harmonics::{check_singularity, BasisIndex, Domain, HarmonicTable, Point3};
use crate::parallel;

/// Node and weight count for one chunk of parallel work.
const CHUNK: usize = 512;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    match NonZeroUsize::new(n) {
        Some(deg) => GaussLegendre::new(deg)
            .iter()
            .map(|(x, w)| (*x, *w))
            .unzip(),
        None => (Vec::new(), Vec::new()),
    }
}

/// Quadrature nodes and combined volume weights for one domain.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    domain: Domain,
    sizes: (usize, usize, usize),
    nodes: Vec<Point3>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// `radial` Gauss points in `ρ` (interior) or `u = 1/ρ` (exterior),
    /// `polar` Gauss points in `cos θ`, `azimuthal` equispaced angles.
    pub fn build(domain: Domain, radial: usize, polar: usize, azimuthal: usize) -> Result<Self> {
        if radial < 1 || polar < 1 {
            return Err(Error::InvalidRule(format!(
                "radial and polar counts must be at least 1, got {radial} and {polar}"
            )));
        }
        if azimuthal < 4 {
            return Err(Error::InvalidRule(format!(
                "azimuthal count must be at least 4, got {azimuthal}"
            )));
        }
        let (xr, wr) = gauss_legendre(radial);
        let radii: Vec<(f64, f64)> = xr
            .iter()
            .zip(&wr)
            .map(|(&x, &w)| {
                let s = 0.5 * (x + 1.0);
                match domain {
                    Domain::Interior => (s, 0.5 * w * s * s),
                    Domain::Exterior => (1.0 / s, 0.5 * w / s.powi(4)),
                }
            })
            .collect();
        let (ts, wt) = gauss_legendre(polar);
        let dphi = 2.0 * PI / azimuthal as f64;
        let trig: Vec<(f64, f64)> = (0..azimuthal)
            .map(|k| (k as f64 * dphi).sin_cos())
            .collect();
        let total = radial * polar * azimuthal;
        let mut nodes = Vec::with_capacity(total);
        let mut weights = Vec::with_capacity(total);
        for &(rho, w_r) in &radii {
            for (&t, &w_t) in ts.iter().zip(&wt) {
                let s = (1.0 - t * t).max(0.0).sqrt();
                for &(sp, cp) in &trig {
                    nodes.push(Point3::new(rho * t, rho * s * cp, rho * s * sp));
                    weights.push(w_r * w_t * dphi);
                }
            }
        }
        Ok(Self {
            domain,
            sizes: (radial, polar, azimuthal),
            nodes,
            weights,
        })
    }

    /// Default sizes `R = T = 16`, `A = 64`.
    pub fn default_for(domain: Domain) -> Self {
        Self::build(domain, 16, 16, 64).expect("default sizes are valid")
    }

    /// Sizes exact for products of basis functions with `|n| ≤ max_degree`.
    pub fn exact_for(domain: Domain, max_degree: usize) -> Self {
        let n = max_degree + 2;
        Self::build(domain, n, n, 4 * max_degree + 4).expect("sizes are valid")
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn sizes(&self) -> (usize, usize, usize) {
        self.sizes
    }

    pub fn nodes(&self) -> &[Point3] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫ f dV`.
    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(&Point3) -> f64 + Sync,
    {
        parallel::map_chunks(self.len(), CHUNK, |r| {
            r.map(|i| self.weights[i] * f(&self.nodes[i])).sum::<f64>()
        })
        .into_iter()
        .sum()
    }

    /// `∫ f dV` for a fallible integrand.
    pub fn try_integrate<F>(&self, f: F) -> Result<f64>
    where
        F: Fn(&Point3) -> Result<f64> + Sync,
    {
        let parts = parallel::map_chunks(self.len(), CHUNK, |r| -> Result<f64> {
            let mut acc = 0.0;
            for i in r {
                acc += self.weights[i] * f(&self.nodes[i])?;
            }
            Ok(acc)
        });
        parts.into_iter().sum()
    }
}

/// `⟨f, g⟩` over the rule's domain.
pub fn inner<F, G>(f: F, g: G, rule: &QuadratureRule) -> Result<f64>
where
    F: Fn(&Point3) -> Result<ReducedQuaternion> + Sync,
    G: Fn(&Point3) -> Result<ReducedQuaternion> + Sync,
{
    rule.try_integrate(|p| Ok(f(p)?.dot(&g(p)?)))
}

/// A basis function, its conjugate, or its vector part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Element {
    Basis(BasisIndex),
    Conj(BasisIndex),
    VecPart(BasisIndex),
}

impl Element {
    pub fn index(&self) -> &BasisIndex {
        match self {
            Element::Basis(i) | Element::Conj(i) | Element::VecPart(i) => i,
        }
    }

    pub fn eval_with_table(&self, table: &HarmonicTable) -> ReducedQuaternion {
        match self {
            Element::Basis(i) => i.eval_with_table(table),
            Element::Conj(i) => i.eval_with_table(table).conj(),
            Element::VecPart(i) => i.eval_with_table(table).vec().into(),
        }
    }

    pub fn eval(&self, p: &Point3) -> Result<ReducedQuaternion> {
        check_singularity(self.index().n, p)?;
        Ok(self.eval_with_table(&HarmonicTable::new(p, self.index().table_degree())))
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Basis(i) => write!(f, "{i}"),
            Element::Conj(i) => write!(f, "conj {i}"),
            Element::VecPart(i) => write!(f, "Vec {i}"),
        }
    }
}

/// Symmetric matrix of pairwise inner products.
#[derive(Debug, Clone)]
pub struct Gram {
    pub elements: Vec<Element>,
    pub matrix: DMatrix<f64>,
}

impl Gram {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `|G_ij| / sqrt(G_ii G_jj)`.
    pub fn ratio(&self, i: usize, j: usize) -> f64 {
        let g = &self.matrix;
        g[(i, j)].abs() / (g[(i, i)] * g[(j, j)]).sqrt()
    }

    /// Largest [`Gram::ratio`] over `i ≠ j`; zero for fewer than two entries.
    pub fn max_offdiag_ratio(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.len() {
            for j in 0..i {
                worst = worst.max(self.ratio(i, j));
            }
        }
        worst
    }

    /// Largest [`Gram::ratio`] with `i` in `rows` and `j` in `cols`.
    pub fn max_block_ratio(&self, rows: &[usize], cols: &[usize]) -> f64 {
        let mut worst = 0.0f64;
        for &i in rows {
            for &j in cols {
                if i != j {
                    worst = worst.max(self.ratio(i, j));
                }
            }
        }
        worst
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.matrix[(i, i)]).collect()
    }
}

/// Values of `elements` at every node of `rule`, as a `3k × len` matrix
/// with rows `3i, 3i+1, 3i+2` holding the components of element `i`.
pub fn sample(elements: &[Element], rule: &QuadratureRule) -> Result<DMatrix<f64>> {
    for e in elements {
        if e.index().domain != rule.domain() {
            return Err(Error::Domain(format!(
                "{e} does not belong to the {} rule",
                rule.domain()
            )));
        }
    }
    let degree = elements
        .iter()
        .map(|e| e.index().table_degree())
        .max()
        .unwrap_or(0);
    let k = elements.len();
    let mut out = DMatrix::zeros(3 * k, rule.len());
    let cols = parallel::map_chunks(rule.len(), CHUNK, |r| {
        r.map(|j| {
            let table = HarmonicTable::new(&rule.nodes()[j], degree);
            elements
                .iter()
                .map(|e| e.eval_with_table(&table))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
    });
    for (j, values) in cols.into_iter().flatten().enumerate() {
        for (i, v) in values.into_iter().enumerate() {
            out[(3 * i, j)] = v.a0;
            out[(3 * i + 1, j)] = v.a1;
            out[(3 * i + 2, j)] = v.a2;
        }
    }
    Ok(out)
}

/// Gram matrix of `elements` under `rule`.
pub fn gram(elements: &[Element], rule: &QuadratureRule) -> Result<Gram> {
    let k = elements.len();
    let samples = sample(elements, rule)?;
    let w = rule.weights();
    let partials = parallel::map_chunks(rule.len(), CHUNK, |r| {
        let mut g = DMatrix::<f64>::zeros(k, k);
        for j in r {
            for a in 0..k {
                let va = [
                    samples[(3 * a, j)],
                    samples[(3 * a + 1, j)],
                    samples[(3 * a + 2, j)],
                ];
                for b in 0..=a {
                    let vb = [
                        samples[(3 * b, j)],
                        samples[(3 * b + 1, j)],
                        samples[(3 * b + 2, j)],
                    ];
                    g[(a, b)] += w[j] * (va[0] * vb[0] + va[1] * vb[1] + va[2] * vb[2]);
                }
            }
        }
        g
    });
    let mut matrix = DMatrix::zeros(k, k);
    for part in partials {
        matrix += part;
    }
    for a in 0..k {
        for b in 0..a {
            matrix[(b, a)] = matrix[(a, b)];
        }
    }
    Ok(Gram {
        elements: elements.to_vec(),
        matrix,
    })
}

/// Number of eigenvalues of a symmetric positive semidefinite matrix above
/// `rel_tol` times the largest one.
pub fn numerical_rank(matrix: &DMatrix<f64>, rel_tol: f64) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let eig = SymmetricEigen::new(matrix.clone());
    let top = eig.eigenvalues.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    eig.eigenvalues
        .iter()
        .filter(|&&v| v > rel_tol * top)
        .count()
}

/// `dim(span A ∩ span B) = dim A + dim B - rank(Gram(A ∪ B))` for two
/// linearly independent families.
pub fn intersection_dimension(
    a: &[Element],
    b: &[Element],
    rule: &QuadratureRule,
    rel_tol: f64,
) -> Result<usize> {
    let all: Vec<Element> = a.iter().chain(b).copied().collect();
    let g = gram(&all, rule)?;
    let scaled = normalize_gram(&g.matrix);
    Ok(a.len() + b.len() - numerical_rank(&scaled, rel_tol))
}

/// `D^{-1/2} G D^{-1/2}` with `D` the diagonal of `G`.
pub fn normalize_gram(g: &DMatrix<f64>) -> DMatrix<f64> {
    let d: Vec<f64> = (0..g.nrows()).map(|i| g[(i, i)].sqrt()).collect();
    DMatrix::from_fn(g.nrows(), g.ncols(), |i, j| g[(i, j)] / (d[i] * d[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::{Family, Parity};

    #[test]
    fn gauss_legendre_small_rules() {
        let (x, w) = gauss_legendre(1);
        assert!(x[0].abs() < 1e-15);
        assert!((w[0] - 2.0).abs() < 1e-15);
        let (x, w) = gauss_legendre(2);
        assert!((x[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15);
        let (x, w) = gauss_legendre(3);
        assert!((x[2] - 0.6f64.sqrt()).abs() < 1e-15);
        assert!((w[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn gauss_legendre_integrates_monomials() {
        for n in [5usize, 16, 40, 80] {
            let (x, w) = gauss_legendre(n);
            assert!(x.windows(2).all(|p| p[0] < p[1]));
            for k in 0..(2 * n) {
                let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(k as i32)).sum();
                let want = if k % 2 == 0 {
                    2.0 / (k as f64 + 1.0)
                } else {
                    0.0
                };
                assert!((got - want).abs() < 1e-13, "n={n} k={k}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn volume_and_moments() {
        let rule = QuadratureRule::build(Domain::Interior, 8, 8, 16).unwrap();
        assert!((rule.integrate(|_| 1.0) - 4.0 * PI / 3.0).abs() < 1e-12 * 4.0);
        let m = rule.integrate(|p| p.x1 * p.x1);
        assert!((m - 4.0 * PI / 15.0).abs() < 1e-10);
        let ext = QuadratureRule::build(Domain::Exterior, 8, 8, 16).unwrap();
        let v = ext.integrate(|p| p.rho().powi(-4));
        assert!((v - 4.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn azimuthal_rule_is_exact_below_count() {
        let a = 12;
        let rule = QuadratureRule::build(Domain::Interior, 1, 1, a).unwrap();
        for k in 0..a as i32 {
            for l in 0..(a as i32 - k) {
                let got = rule.integrate(|p| {
                    let phi = p.x2.atan2(p.x1);
                    (k as f64 * phi).cos() * (l as f64 * phi).sin()
                });
                assert!(got.abs() < 1e-14, "k={k} l={l}: {got}");
            }
        }
    }

    #[test]
    fn invalid_sizes() {
        assert!(matches!(
            QuadratureRule::build(Domain::Interior, 0, 4, 8),
            Err(Error::InvalidRule(_))
        ));
        assert!(QuadratureRule::build(Domain::Exterior, 4, 4, 3).is_err());
    }

    #[test]
    fn inner_products_examples() {
        let rule = QuadratureRule::default_for(Domain::Interior);
        let u10 = BasisIndex::harmonic(1, 0, Parity::Plus).unwrap();
        let v = inner(|p| u10.eval(p), |p| u10.eval(p), &rule).unwrap();
        assert!((v - 4.0 * PI / 15.0).abs() < 1e-10);
        let x10 = BasisIndex::monogenic(1, 0, Parity::Plus).unwrap();
        let x11 = BasisIndex::monogenic(1, 1, Parity::Plus).unwrap();
        let c = inner(|p| x10.eval(p), |p| Ok(x11.eval(p)?.conj()), &rule).unwrap();
        assert!(c.abs() < 1e-10);
        let ext = QuadratureRule::default_for(Domain::Exterior);
        let z = BasisIndex::contragenic(-2, 0, Parity::Plus).unwrap();
        let x = BasisIndex::monogenic(-3, 1, Parity::Minus).unwrap();
        assert!(inner(|p| z.eval(p), |p| x.eval(p), &ext).unwrap().abs() < 1e-10);
    }

    #[test]
    fn gram_rejects_mixed_domains() {
        let rule = QuadratureRule::build(Domain::Interior, 4, 4, 8).unwrap();
        let e = Element::Basis(BasisIndex::harmonic(-2, 0, Parity::Plus).unwrap());
        assert!(matches!(gram(&[e], &rule), Err(Error::Domain(_))));
    }

    #[test]
    fn gram_agrees_with_inner() {
        let rule = QuadratureRule::build(Domain::Exterior, 10, 10, 24).unwrap();
        let a = BasisIndex::new(Family::Monogenic, Domain::Exterior, -3, 1, Parity::Plus).unwrap();
        let b = BasisIndex::new(Family::Monogenic, Domain::Exterior, -3, 1, Parity::Plus).unwrap();
        let g = gram(&[Element::Basis(a), Element::Conj(b)], &rule).unwrap();
        let direct = inner(|p| a.eval(p), |p| Ok(b.eval(p)?.conj()), &rule).unwrap();
        assert!((g.matrix[(0, 1)] - direct).abs() < 1e-13 * direct.abs().max(1.0));
    }
}
