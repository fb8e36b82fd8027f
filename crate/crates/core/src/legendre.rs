//! Associated Legendre functions `P_n^m(t)` in the phase-free (Hobson)
//! convention
//!
//! ```text
//! P_ν^m(t) = (1 - t²)^{m/2} dᵐ/dtᵐ P_ν(t)
//! ```
//!
//! Negative degrees reduce through `P_{-n}^m = P_{n-1}^m`, so every integer
//! degree maps to an effective degree `ν ≥ 0`.

use crate::error::{Error, Result};

/// Largest effective degree accepted anywhere in the crate. Factorial
/// ratios in the closed-form norms stay finite in `f64` well past this.
pub const MAX_DEGREE: i32 = 64;

const T_TOLERANCE: f64 = 1e-12;

/// Degree `n` (any integer) and order `m ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LegendreIndex {
    pub n: i32,
    pub m: i32,
}

impl LegendreIndex {
    pub const fn new(n: i32, m: i32) -> Self {
        Self { n, m }
    }

    pub const fn effective_degree(&self) -> i32 {
        effective_degree(self.n)
    }
}

/// `n` for `n ≥ 0`, `-n - 1` otherwise.
pub const fn effective_degree(n: i32) -> i32 {
    if n >= 0 {
        n
    } else {
        -n - 1
    }
}

fn check_t(t: f64) -> Result<f64> {
    if !t.is_finite() || t.abs() > 1.0 + T_TOLERANCE {
        return Err(Error::Domain(format!(
            "Legendre argument {t} outside [-1, 1]"
        )));
    }
    Ok(t.clamp(-1.0, 1.0))
}

/// Evaluates `P_n^m(t)`; zero when `m` exceeds the effective degree.
pub fn legendre_p(idx: LegendreIndex, t: f64) -> Result<f64> {
    let LegendreIndex { n, m } = idx;
    if m < 0 {
        return Err(Error::InvalidIndex(format!(
            "Legendre order must be non-negative, got m = {m}"
        )));
    }
    let nu = effective_degree(n);
    if nu > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    let t = check_t(t)?;
    if m > nu {
        return Ok(0.0);
    }
    let s = (1.0 - t * t).max(0.0).sqrt();
    Ok(p_fixed_order(nu as usize, m as usize, t, s))
}

/// `P_n^{-m}(t) = (n-m)!/(n+m)! P_n^m(t)` for `0 ≤ m ≤ n`.
pub fn legendre_p_neg_order(n: i32, m: i32, t: f64) -> Result<f64> {
    if n < 0 || m < 0 || m > n {
        return Err(Error::InvalidIndex(format!(
            "negative-order relation needs 0 <= m <= n, got n = {n}, m = {m}"
        )));
    }
    let p = legendre_p(LegendreIndex::new(n, m), t)?;
    Ok(p / rising_product(n - m + 1, n + m))
}

/// `a (a+1) ... b` as a float; `1` for an empty range.
pub(crate) fn rising_product(a: i32, b: i32) -> f64 {
    (a..=b).fold(1.0, |acc, k| acc * k as f64)
}

/// Upward recurrence in degree from `P_m^m` for a single order.
fn p_fixed_order(nu: usize, m: usize, t: f64, s: f64) -> f64 {
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= (2 * k - 1) as f64 * s;
    }
    if nu == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = (2 * m + 1) as f64 * t * pmm;
    for l in (m + 1)..nu {
        let next = ((2 * l + 1) as f64 * t * cur - (l + m) as f64 * prev) / (l - m + 1) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// All `P_ν^m(t)` with `0 ≤ m ≤ ν ≤ max_degree` at one argument, stored
/// triangularly. Built from `t = cos θ` and `s = sin θ` so that callers with
/// Cartesian data never form `sqrt(1 - t²)`.
#[derive(Debug, Clone)]
pub struct LegendreTable {
    max_degree: usize,
    values: Vec<f64>,
}

impl LegendreTable {
    pub fn new(max_degree: usize, t: f64, s: f64) -> Self {
        let l = max_degree;
        let mut values = vec![0.0; (l + 1) * (l + 2) / 2];
        let mut pmm = 1.0;
        for m in 0..=l {
            if m > 0 {
                pmm *= (2 * m - 1) as f64 * s;
            }
            values[Self::slot(m, m)] = pmm;
            if m == l {
                break;
            }
            let mut prev = pmm;
            let mut cur = (2 * m + 1) as f64 * t * pmm;
            values[Self::slot(m + 1, m)] = cur;
            for nu in (m + 1)..l {
                let next =
                    ((2 * nu + 1) as f64 * t * cur - (nu + m) as f64 * prev) / (nu - m + 1) as f64;
                values[Self::slot(nu + 1, m)] = next;
                prev = cur;
                cur = next;
            }
        }
        Self { max_degree, values }
    }

    #[inline]
    fn slot(nu: usize, m: usize) -> usize {
        nu * (nu + 1) / 2 + m
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `P_ν^m`; zero for `m > ν`.
    #[inline]
    pub fn get(&self, nu: usize, m: usize) -> f64 {
        debug_assert!(nu <= self.max_degree);
        if m > nu {
            0.0
        } else {
            self.values[Self::slot(nu, m)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_legendre;

    /// Explicit power series of `P_ν`, differentiated `m` times.
    fn rodrigues(nu: usize, m: usize, t: f64) -> f64 {
        fn binom(n: usize, k: usize) -> f64 {
            (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
        }
        let mut value = 0.0;
        for k in 0..=nu / 2 {
            let power = nu - 2 * k;
            if power < m {
                continue;
            }
            let coeff = (-1f64).powi(k as i32) * binom(nu, k) * binom(2 * nu - 2 * k, nu)
                / 2f64.powi(nu as i32);
            let falling = ((power - m + 1)..=power).fold(1.0, |acc, j| acc * j as f64);
            value += coeff * falling * t.powi((power - m) as i32);
        }
        value * (1.0 - t * t).powf(m as f64 / 2.0)
    }

    #[test]
    fn low_degree_examples() {
        let p = |n, m, t| legendre_p(LegendreIndex::new(n, m), t).unwrap();
        assert_eq!(p(1, 0, 0.37), 0.37);
        assert!((p(1, 1, 0.6) - 0.8).abs() < 1e-15);
        assert!((p(-2, 0, 0.3) - 0.3).abs() < 1e-15);
        assert_eq!(p(2, 3, 0.1), 0.0);
        assert_eq!(p(2, 3, -1.0), 0.0);
    }

    #[test]
    fn negative_order_examples() {
        assert!((legendre_p_neg_order(1, 1, 0.6).unwrap() - 0.4).abs() < 1e-15);
        let t = 0.42;
        assert_eq!(
            legendre_p_neg_order(2, 0, t).unwrap(),
            legendre_p(LegendreIndex::new(2, 0), t).unwrap()
        );
        assert!((legendre_p_neg_order(2, 2, 0.0).unwrap() - 0.125).abs() < 1e-15);
        assert!(legendre_p_neg_order(2, 3, 0.0).is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            legendre_p(LegendreIndex::new(2, -1), 0.0),
            Err(Error::InvalidIndex(_))
        ));
        assert!(matches!(
            legendre_p(LegendreIndex::new(2, 1), 1.5),
            Err(Error::Domain(_))
        ));
        assert!(legendre_p(LegendreIndex::new(2, 1), 1.0 + 1e-14).is_ok());
        assert!(matches!(
            legendre_p(LegendreIndex::new(65, 0), 0.1),
            Err(Error::DegreeTooLarge(65))
        ));
    }

    #[test]
    fn recurrence_matches_rodrigues() {
        for nu in 0..=10usize {
            for m in 0..=nu {
                let grid: Vec<f64> = (0..21).map(|i| -1.0 + i as f64 * 0.1).collect();
                let scale = grid
                    .iter()
                    .map(|&t| rodrigues(nu, m, t).abs())
                    .fold(0.0, f64::max);
                for &t in &grid {
                    let got = legendre_p(LegendreIndex::new(nu as i32, m as i32), t).unwrap();
                    let want = rodrigues(nu, m, t);
                    assert!(
                        (got - want).abs() <= 1e-12 * scale.max(want.abs()),
                        "nu={nu} m={m} t={t}: {got} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn table_matches_single_evaluation() {
        let t: f64 = -0.31;
        let s = (1.0 - t * t).sqrt();
        let table = LegendreTable::new(12, t, s);
        for nu in 0..=12 {
            for m in 0..=13 {
                let single = legendre_p(LegendreIndex::new(nu, m), t).unwrap();
                assert_eq!(table.get(nu as usize, m as usize), single);
            }
        }
    }

    #[test]
    fn negative_degree_reduction() {
        for n in -12..=-1 {
            for m in 0..=12 {
                for &t in &[-0.9, -0.2, 0.0, 0.55, 1.0] {
                    let a = legendre_p(LegendreIndex::new(n, m), t).unwrap();
                    let b = legendre_p(LegendreIndex::new(-n - 1, m), t).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn orthogonality_on_interval() {
        let (nodes, weights) = gauss_legendre(20);
        for m in 0..=8i32 {
            for a in m..=8 {
                for b in m..=8 {
                    let integral: f64 = nodes
                        .iter()
                        .zip(&weights)
                        .map(|(&t, &w)| {
                            w * legendre_p(LegendreIndex::new(a, m), t).unwrap()
                                * legendre_p(LegendreIndex::new(b, m), t).unwrap()
                        })
                        .sum();
                    let norm = |d: i32| 2.0 * rising_product(d - m + 1, d + m) / (2 * d + 1) as f64;
                    let expected = if a == b { norm(a) } else { 0.0 };
                    let scale = (norm(a) * norm(b)).sqrt();
                    assert!(
                        (integral - expected).abs() <= 1e-10 * scale,
                        "m={m} a={a} b={b}: {integral} vs {expected}"
                    );
                }
            }
        }
    }
}
