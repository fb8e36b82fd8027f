//! Error tables for Bergman projections of the monogenic exponential,
//! sampled on spheres `|x| = ρ`.

use crate::algebra::VecField2;
use crate::bergman::{project, KernelTruncation, Operator};
use crate::error::{Error, Result};
use crate::exponential::Variant;
use crate::harmonics::{Domain, Point3};
use crate::quadrature::QuadratureRule;

/// Denominator guard for relative quantities.
pub const EPS: f64 = 1e-300;

/// Offset `θ × φ` grid: `θ_i = (i + 1/2)π/n_θ`, `φ_j = (j + 1/2)2π/n_φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereGrid {
    pub n_theta: usize,
    pub n_phi: usize,
}

impl Default for SphereGrid {
    fn default() -> Self {
        Self {
            n_theta: 30,
            n_phi: 60,
        }
    }
}

impl SphereGrid {
    pub fn angles(&self) -> Vec<(f64, f64)> {
        let (nt, np) = (self.n_theta as f64, self.n_phi as f64);
        let mut out = Vec::with_capacity(self.n_theta * self.n_phi);
        for i in 0..self.n_theta {
            for j in 0..self.n_phi {
                let th = (i as f64 + 0.5) * std::f64::consts::PI / nt;
                let ph = (j as f64 + 0.5) * 2.0 * std::f64::consts::PI / np;
                out.push((th, ph));
            }
        }
        out
    }

    pub fn points(&self, rho: f64) -> Vec<Point3> {
        self.angles()
            .into_iter()
            .map(|(th, ph)| Point3::from_spherical(rho, th, ph))
            .collect()
    }
}

/// `max |a - e| / max(|e|, EPS)` over paired samples.
pub fn max_relative_deviation(approx: &[VecField2], exact: &[VecField2]) -> f64 {
    approx
        .iter()
        .zip(exact)
        .map(|(a, e)| (*a - *e).norm() / e.norm().max(EPS))
        .fold(0.0, nan_max)
}

/// `max |[a]_j| / max(|[e]_j|, EPS)` over paired samples.
pub fn max_component_quotient(approx: &[VecField2], exact: &[VecField2], j: usize) -> f64 {
    approx
        .iter()
        .zip(exact)
        .map(|(a, e)| a.component(j).abs() / e.component(j).abs().max(EPS))
        .fold(0.0, nan_max)
}

/// Maximum that keeps NaN, so a diverged projection is not hidden.
fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Which table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `B_M Vec f` against `Vec f`, relative deviation.
    Reproduction,
    /// `|[B_N Vec f]_1| / |[f]_1|`.
    Annihilation,
}

/// Parameters of one error table.
#[derive(Debug, Clone)]
pub struct TableSpec {
    pub domain: Domain,
    pub kind: TableKind,
    pub target: Variant,
    pub rhos: Vec<f64>,
    pub ns: Vec<usize>,
    pub grid: SphereGrid,
    pub rule: (usize, usize, usize),
}

impl TableSpec {
    /// Reproduction of `Vec ℰ` inside the ball.
    pub fn interior_vec_m() -> Self {
        Self {
            domain: Domain::Interior,
            kind: TableKind::Reproduction,
            target: Variant::E,
            rhos: vec![0.2, 0.4, 0.6, 0.8],
            ns: vec![5, 10, 15, 20],
            grid: SphereGrid::default(),
            rule: (32, 32, 96),
        }
    }

    /// Annihilation quotient of `Vec ℰ` by the contragenic operator.
    pub fn interior_contragenic() -> Self {
        Self {
            domain: Domain::Interior,
            kind: TableKind::Annihilation,
            target: Variant::E,
            rhos: vec![0.2, 0.4, 0.6, 0.8],
            ns: vec![15, 20, 25, 30],
            grid: SphereGrid::default(),
            rule: (40, 48, 128),
        }
    }

    /// Reproduction of `Vec ℰ*` outside the ball.
    ///
    /// `ℰ*` grows like `e^{|x0|}` for `x0 → -∞`, so its inner products over
    /// the exterior diverge and the entries depend on the rule: a larger
    /// radial count places nodes further out. The values serve only as a
    /// regression baseline for this rule.
    pub fn exterior_vec_m() -> Self {
        Self {
            domain: Domain::Exterior,
            kind: TableKind::Reproduction,
            target: Variant::EStar,
            rhos: vec![1.25, 1.5, 2.0],
            ns: vec![5, 10],
            grid: SphereGrid::default(),
            rule: (16, 16, 64),
        }
    }

    pub fn operator(&self) -> Operator {
        match self.kind {
            TableKind::Reproduction => Operator::VecM,
            TableKind::Annihilation => Operator::Contragenic,
        }
    }
}

/// One value per `(ρ, N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    pub rhos: Vec<f64>,
    pub ns: Vec<usize>,
    /// `values[i][k]` belongs to `rhos[i]`, `ns[k]`.
    pub values: Vec<Vec<f64>>,
}

impl ErrorTable {
    pub fn get(&self, rho: f64, n: usize) -> Option<f64> {
        let i = self.rhos.iter().position(|&r| r == rho)?;
        let k = self.ns.iter().position(|&m| m == n)?;
        Some(self.values[i][k])
    }

    /// CSV with header `rho,N=..`; `digits` significant digits, or the
    /// shortest round-trip form when `None`.
    pub fn to_csv(&self, digits: Option<usize>) -> String {
        let mut s = String::from("rho");
        for n in &self.ns {
            s.push_str(&format!(",N={n}"));
        }
        s.push('\n');
        for (rho, row) in self.rhos.iter().zip(&self.values) {
            s.push_str(&rho.to_string());
            for v in row {
                s.push(',');
                s.push_str(&format_value(*v, digits));
            }
            s.push('\n');
        }
        s
    }
}

/// Scientific notation with `digits` significant digits, or round-trip.
pub fn format_value(v: f64, digits: Option<usize>) -> String {
    match digits {
        Some(d) => format!("{:.*e}", d.saturating_sub(1), v),
        None => format!("{v:e}"),
    }
}

/// Computes a table with one projection at the largest `N`.
pub fn compute(spec: &TableSpec) -> Result<ErrorTable> {
    for &rho in &spec.rhos {
        let probe = Point3::new(rho, 0.0, 0.0);
        if !rho.is_finite() || !spec.domain.contains(&probe) {
            return Err(Error::Domain(format!(
                "ρ = {rho} is not inside the {} domain",
                spec.domain
            )));
        }
    }
    let max_n = spec.ns.iter().copied().max().unwrap_or(0);
    let (r, t, a) = spec.rule;
    let rule = QuadratureRule::build(spec.domain, r, t, a)?;
    let trunc = KernelTruncation::new(spec.domain, max_n);
    let target = spec.target;
    let proj = project(spec.operator(), &trunc, |p| target.eval_vec(p), &rule)?;
    let mut values = Vec::with_capacity(spec.rhos.len());
    for &rho in &spec.rhos {
        let pts = spec.grid.points(rho);
        let exact: Vec<VecField2> = pts.iter().map(|p| target.eval_vec(p)).collect();
        let mut row = Vec::with_capacity(spec.ns.len());
        for &n in &spec.ns {
            let approx = proj.eval_many(&pts, n)?;
            row.push(match spec.kind {
                TableKind::Reproduction => max_relative_deviation(&approx, &exact),
                TableKind::Annihilation => max_component_quotient(&approx, &exact, 0),
            });
        }
        values.push(row);
    }
    Ok(ErrorTable {
        rhos: spec.rhos.clone(),
        ns: spec.ns.clone(),
        values,
    })
}
