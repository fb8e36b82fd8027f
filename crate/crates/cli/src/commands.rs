use contrakernel::contragenic::duality_residual;
use contrakernel::exponential::Variant;
use contrakernel::harmonics::{basis_up_to, BasisIndex, Domain, Family, Point3};
use contrakernel::monogenic::{mixed_inner_xxbar, norm_vec_x_sqr};
use contrakernel::quadrature::{gram, Element, QuadratureRule};
use contrakernel::tables::{compute, ErrorTable, SphereGrid, TableKind, TableSpec};
use contrakernel::{algebra::ReducedQuaternion, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::output::{Cell, Report};
use crate::CliError;

pub const EVAL_COLUMNS: [&str; 9] = ["x0", "x1", "x2", "rho", "theta", "phi", "a0", "a1", "a2"];

/// Where a field is sampled.
pub enum Sampling {
    Point(Point3),
    Sphere { rho: f64, grid: SphereGrid },
}

impl Sampling {
    fn points(&self) -> Vec<Point3> {
        match self {
            Sampling::Point(p) => vec![*p],
            Sampling::Sphere { rho, grid } => grid.points(*rho),
        }
    }
}

fn eval_row(p: &Point3, v: ReducedQuaternion) -> Vec<Cell> {
    let (rho, theta, phi) = p.spherical();
    [p.x0, p.x1, p.x2, rho, theta, phi, v.a0, v.a1, v.a2]
        .into_iter()
        .map(Cell::from)
        .collect()
}

pub fn eval(idx: &BasisIndex, at: &Sampling) -> Result<Report, CliError> {
    let mut report = Report::new(EVAL_COLUMNS);
    for p in at.points() {
        idx.domain.check_point(&p)?;
        report.push(eval_row(&p, idx.eval(&p)?));
    }
    Ok(report)
}

pub fn exp(variant: Variant, at: &Sampling) -> Report {
    let mut report = Report::new(EVAL_COLUMNS);
    for p in at.points() {
        report.push(eval_row(&p, variant.eval(&p)));
    }
    report
}

/// Families accepted by `gram`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramFamily {
    Harmonic,
    Monogenic,
    Ambigenic,
    Contragenic,
    Mixed,
}

fn closed_norm(e: &Element) -> f64 {
    match e {
        Element::VecPart(i) => norm_vec_x_sqr(i.n, i.m),
        Element::Basis(i) | Element::Conj(i) => i.norm_sqr(),
    }
}

fn finish(mut report: Report, max: f64, tol: f64) -> Result<Report, CliError> {
    report.summarize("max_deviation", max);
    report.summarize("tol", tol);
    if max <= tol {
        Ok(report)
    } else {
        Err(CliError::Tolerance { report, max, tol })
    }
}

pub fn gram_report(
    family: GramFamily,
    domain: Domain,
    max_degree: i32,
    rule: &QuadratureRule,
    tol: f64,
) -> Result<Report, CliError> {
    let up_to = |f| basis_up_to(f, domain, max_degree);
    let mut report = Report::new(["a", "b", "closed", "quadrature", "deviation"]);
    let mut max = 0.0f64;
    if family == GramFamily::Mixed {
        let xs = up_to(Family::Monogenic);
        let mut elems: Vec<Element> = xs.iter().map(|&x| Element::Conj(x)).collect();
        elems.extend(xs.iter().map(|&x| Element::Basis(x)));
        let g = gram(&elems, rule)?;
        let k = xs.len();
        for (i, a) in xs.iter().enumerate() {
            for (j, b) in xs.iter().enumerate().skip(i) {
                let closed = mixed_inner_xxbar(a, b)?;
                let q = g.matrix[(i, k + j)];
                let dev = (q - closed).abs() / (a.norm_sqr() * b.norm_sqr()).sqrt();
                max = max.max(dev);
                report.push(vec![
                    elems[i].to_string().into(),
                    elems[k + j].to_string().into(),
                    closed.into(),
                    q.into(),
                    dev.into(),
                ]);
            }
        }
        return finish(report, max, tol);
    }
    let elems: Vec<Element> = match family {
        GramFamily::Harmonic => up_to(Family::Harmonic),
        GramFamily::Monogenic => up_to(Family::Monogenic),
        GramFamily::Ambigenic => {
            let mut v = up_to(Family::Ambigenic);
            v.extend(up_to(Family::AmbigenicTilde));
            v
        }
        GramFamily::Contragenic => up_to(Family::Contragenic),
        GramFamily::Mixed => unreachable!(),
    }
    .into_iter()
    .map(Element::Basis)
    .collect();
    let g = gram(&elems, rule)?;
    let norms: Vec<f64> = elems.iter().map(closed_norm).collect();
    for i in 0..elems.len() {
        for j in i..elems.len() {
            let closed = if i == j { norms[i] } else { 0.0 };
            let q = g.matrix[(i, j)];
            let dev = (q - closed).abs() / (norms[i] * norms[j]).sqrt();
            max = max.max(dev);
            report.push(vec![
                elems[i].to_string().into(),
                elems[j].to_string().into(),
                closed.into(),
                q.into(),
                dev.into(),
            ]);
        }
    }
    finish(report, max, tol)
}

pub fn norms(
    domains: &[Domain],
    max_degree: i32,
    rule_for: impl Fn(Domain) -> Result<QuadratureRule, Error>,
    tol: f64,
) -> Result<Report, CliError> {
    let mut report = Report::new(["element", "closed", "quadrature", "relative_deviation"]);
    let mut max = 0.0f64;
    for &domain in domains {
        let rule = rule_for(domain)?;
        let mut elems = Vec::new();
        for family in [
            Family::Harmonic,
            Family::Monogenic,
            Family::Ambigenic,
            Family::AmbigenicTilde,
            Family::Contragenic,
        ] {
            for idx in basis_up_to(family, domain, max_degree) {
                elems.push(Element::Basis(idx));
                if family == Family::Monogenic && norm_vec_x_sqr(idx.n, idx.m) > 0.0 {
                    elems.push(Element::VecPart(idx));
                }
            }
        }
        for e in &elems {
            let q = rule.try_integrate(|p| Ok(e.eval(p)?.norm_sqr()))?;
            let closed = closed_norm(e);
            let dev = (q - closed).abs() / closed;
            max = max.max(dev);
            report.push(vec![
                e.to_string().into(),
                closed.into(),
                q.into(),
                dev.into(),
            ]);
        }
    }
    finish(report, max, tol)
}

/// The sample points of the duality check: uniform directions with radii
/// in `[0.05, 0.95]` inside and `[1.1, 3.0]` outside.
pub fn sample_points(domain: Domain, count: usize, seed: u64) -> Vec<Point3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = match domain {
        Domain::Interior => (0.05, 0.95),
        Domain::Exterior => (1.1, 3.0),
    };
    (0..count)
        .map(|_| {
            let t: f64 = rng.gen_range(-1.0..1.0);
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let rho: f64 = rng.gen_range(lo..hi);
            Point3::from_spherical(rho, t.acos(), phi)
        })
        .collect()
}

pub fn duality(max_degree: i32, count: usize, seed: u64, tol: f64) -> Result<Report, CliError> {
    let mut report = Report::new(["domain", "n", "m", "parity", "max_relative_residual"]);
    let mut max = 0.0f64;
    for domain in [Domain::Interior, Domain::Exterior] {
        let pts = sample_points(domain, count, seed);
        for z in basis_up_to(Family::Contragenic, domain, max_degree) {
            if z.is_scalar_contragenic() {
                continue;
            }
            let mut worst = 0.0f64;
            for p in &pts {
                let r = duality_residual(z.n, z.m, z.parity, p)?;
                worst = worst.max(r.norm() / z.eval(p)?.norm());
            }
            max = max.max(worst);
            report.push(vec![
                domain.name().into(),
                z.n.into(),
                z.m.into(),
                z.parity.symbol().to_string().into(),
                worst.into(),
            ]);
        }
    }
    finish(report, max, tol)
}

/// The preset a table starts from.
pub fn table_preset(domain: Domain, kind: TableKind) -> TableSpec {
    match (domain, kind) {
        (Domain::Interior, TableKind::Reproduction) => TableSpec::interior_vec_m(),
        (Domain::Interior, TableKind::Annihilation) => TableSpec::interior_contragenic(),
        (Domain::Exterior, kind) => TableSpec {
            kind,
            ..TableSpec::exterior_vec_m()
        },
    }
}

pub fn table_report(table: &ErrorTable) -> Report {
    let mut report = Report::new(
        std::iter::once("rho".to_string()).chain(table.ns.iter().map(|n| format!("N={n}"))),
    );
    for (rho, row) in table.rhos.iter().zip(&table.values) {
        let mut cells = vec![Cell::Text(rho.to_string())];
        cells.extend(row.iter().map(|&v| Cell::from(v)));
        report.push(cells);
    }
    report
}

pub fn bergman_table(spec: &TableSpec) -> Result<Report, CliError> {
    Ok(table_report(&compute(spec)?))
}
