//! Basic monogenic functions `X_{n,m}^± = ∂U_{n+1,m}^±`, the ambigenic
//! bases `Y`, `Ỹ`, their closed-form norms, and finite-difference
//! Cauchy–Riemann operators used for verification.
//!
//! In coordinates,
//!
//! ```text
//! Sc X^± = (n+m+1) U^±_{n,m}
//! [X^±]_1 = (U^±_{n,m+1} - α_{n,m} U^±_{n,m-1}) / 2
//! [X^±]_2 = ±(U^∓_{n,m+1} + α_{n,m} U^∓_{n,m-1}) / 2
//! ```
//!
//! with `α_{n,m} = (n+m)(n+m+1)` and the `m = 0` term read through
//! `α_{n,0} U^±_{n,-1} = ∓U^±_{n,1}`.

use std::f64::consts::PI;

use crate::algebra::{quat_mul, Quaternion, ReducedQuaternion, VecField2};
use crate::error::{Error, Result};
use crate::harmonics::{
    check_singularity, monogenic_max_order, BasisIndex, Domain, Family, HarmonicTable, Parity,
    Point3,
};
use crate::legendre::{effective_degree, rising_product};

/// Default central-difference step.
pub const FD_STEP: f64 = 1e-5;

/// `α_{n,m} = (n+m)(n+m+1)`.
pub fn alpha(n: i32, m: i32) -> f64 {
    let k = (n + m) as f64;
    k * (k + 1.0)
}

/// `β_{n,m} = (n - 2m² + 1)/((n+1)(2n+1))`, the ratio `⟨X̄,X⟩/‖X‖²`.
pub fn beta(n: i32, m: i32) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    (nf - 2.0 * mf * mf + 1.0) / ((nf + 1.0) * (2.0 * nf + 1.0))
}

/// `|β_{n,m}| = 1`, where `Ỹ_{n,m}` vanishes identically.
///
/// Happens at the interior indices `(0,0)` and `m = n+1`.
pub fn tilde_vanishes(n: i32, m: i32) -> bool {
    let num = (n - 2 * m * m + 1) as i64;
    let den = ((n + 1) * (2 * n + 1)) as i64;
    num.abs() == den.abs()
}

/// `α_{n,m} U^{par}_{n,m-1}`, with the `m = 0` substitution.
#[inline]
fn lower_term(table: &HarmonicTable, n: i32, m: i32, par: Parity) -> f64 {
    if m == 0 {
        -par.sign() * table.u(n, 1, par)
    } else {
        alpha(n, m) * table.u(n, m - 1, par)
    }
}

pub(crate) fn x_from_table(
    table: &HarmonicTable,
    n: i32,
    m: i32,
    par: Parity,
) -> ReducedQuaternion {
    let other = par.flip();
    let a0 = (n + m + 1) as f64 * table.u(n, m, par);
    let a1 = 0.5 * (table.u(n, m + 1, par) - lower_term(table, n, m, par));
    let a2 = par.sign() * 0.5 * (table.u(n, m + 1, other) + lower_term(table, n, m, other));
    ReducedQuaternion::new(a0, a1, a2)
}

pub(crate) fn y_tilde_from_table(
    table: &HarmonicTable,
    n: i32,
    m: i32,
    par: Parity,
) -> ReducedQuaternion {
    let x = x_from_table(table, n, m, par);
    x.conj() - x * beta(n, m)
}

fn require(idx: &BasisIndex, families: &[Family]) -> Result<()> {
    if !families.contains(&idx.family) {
        return Err(Error::InvalidIndex(format!(
            "{idx} is not in the expected families {families:?}"
        )));
    }
    idx.validate()
}

/// `X_{n,m}^±(p)`.
pub fn eval_x(idx: &BasisIndex, p: &Point3) -> Result<ReducedQuaternion> {
    require(idx, &[Family::Monogenic])?;
    idx.eval(p)
}

/// `Vec X_{n,m}^±(p)`.
pub fn eval_vec_x(idx: &BasisIndex, p: &Point3) -> Result<VecField2> {
    Ok(eval_x(idx, p)?.vec())
}

/// `Y = X` or `Ỹ = X̄ - βX`.
pub fn eval_y(idx: &BasisIndex, p: &Point3) -> Result<ReducedQuaternion> {
    require(idx, &[Family::Ambigenic, Family::AmbigenicTilde])?;
    idx.eval(p)
}

/// `X_{n,m}^±` at an arbitrary integer degree, bypassing the domain rules.
/// Used for the `n = -1` terms reached by the duality relation.
pub fn x_raw(n: i32, m: i32, par: Parity, p: &Point3) -> Result<ReducedQuaternion> {
    if m < 0 {
        return Err(Error::InvalidIndex(format!(
            "order must be non-negative, got {m}"
        )));
    }
    check_singularity(n, p)?;
    let table = HarmonicTable::new(p, effective_degree(n) as usize);
    Ok(x_from_table(&table, n, m, par))
}

fn central_differences<F>(f: &F, p: &Point3, h: f64) -> [ReducedQuaternion; 3]
where
    F: Fn(&Point3) -> ReducedQuaternion,
{
    let mut out = [ReducedQuaternion::ZERO; 3];
    for (axis, slot) in out.iter_mut().enumerate() {
        let fwd = f(&p.offset(axis, h));
        let bwd = f(&p.offset(axis, -h));
        *slot = (fwd - bwd) * (0.5 / h);
    }
    out
}

fn cauchy_riemann<F>(f: &F, p: &Point3, h: f64, sign: f64) -> Quaternion
where
    F: Fn(&Point3) -> ReducedQuaternion,
{
    let [d0, d1, d2] = central_differences(f, p, h);
    d0.to_quaternion()
        + quat_mul(ReducedQuaternion::E1, d1) * sign
        + quat_mul(ReducedQuaternion::E2, d2) * sign
}

/// Central-difference `∂̄f = ∂_0 f + e1 ∂_1 f + e2 ∂_2 f`.
pub fn dbar_fd<F>(f: F, p: &Point3, h: f64) -> Quaternion
where
    F: Fn(&Point3) -> ReducedQuaternion,
{
    cauchy_riemann(&f, p, h, 1.0)
}

/// Central-difference `∂f = ∂_0 f - e1 ∂_1 f - e2 ∂_2 f`.
pub fn d_fd<F>(f: F, p: &Point3, h: f64) -> Quaternion
where
    F: Fn(&Point3) -> ReducedQuaternion,
{
    cauchy_riemann(&f, p, h, -1.0)
}

/// `∂X_{n,m}^± - 2(n+m+1) X_{n-1,m}^±` by central differences.
///
/// Defined for `n ≥ 1, 0 ≤ m ≤ n` and for `n ≤ -3` with `m` admissible at
/// both `n` and `n - 1`.
pub fn appell_check(n: i32, m: i32, parity: Parity, p: &Point3, h: f64) -> Result<Quaternion> {
    let idx = BasisIndex::monogenic(n, m, parity)?;
    let in_range = (n >= 1 && m <= n) || n <= -3;
    if !in_range {
        return Err(Error::InvalidIndex(format!(
            "Appell relation needs n >= 1 with m <= n, or n <= -3; got n = {n}, m = {m}"
        )));
    }
    let lower = BasisIndex::monogenic(n - 1, m, parity)?;
    let d = d_fd(|q| idx.eval(q).unwrap_or(ReducedQuaternion::ZERO), p, h);
    Ok(d - lower.eval(p)?.to_quaternion() * (2.0 * (n + m + 1) as f64))
}

fn kronecker0(m: i32) -> f64 {
    if m == 0 {
        1.0
    } else {
        0.0
    }
}

/// `(ν+m)!/(ν-m)!` with `ν` the effective degree of `n + 1`.
fn shifted_ratio(n: i32, m: i32) -> f64 {
    let nu = effective_degree(n + 1);
    rising_product(nu - m + 1, nu + m)
}

/// Closed-form `‖X_{n,m}^±‖²`.
pub fn norm_x_sqr(n: i32, m: i32) -> f64 {
    2.0 * PI * (n + 1) as f64 * (1.0 + kronecker0(m)) * shifted_ratio(n, m) / (2 * n + 3) as f64
}

/// Closed-form `‖Vec X_{n,m}^±‖²`; zero exactly when `n² + m² + n = 0`.
pub fn norm_vec_x_sqr(n: i32, m: i32) -> f64 {
    let k = (n * n + m * m + n) as f64;
    2.0 * PI * k * (1.0 + kronecker0(m)) * shifted_ratio(n, m)
        / ((2 * n + 3) as f64 * (2 * n + 1) as f64)
}

/// Closed-form `‖Ỹ_{n,m}^±‖² = ‖X‖²(1 - β²)`.
pub fn norm_y_tilde_sqr(n: i32, m: i32) -> f64 {
    let b = beta(n, m);
    norm_x_sqr(n, m) * (1.0 - b * b)
}

/// `‖X‖²` for a validated monogenic index.
pub fn norm_x(idx: &BasisIndex) -> Result<f64> {
    require(idx, &[Family::Monogenic, Family::Ambigenic])?;
    Ok(norm_x_sqr(idx.n, idx.m))
}

/// `‖Vec X‖²` for a validated monogenic index.
pub fn norm_vec_x(idx: &BasisIndex) -> Result<f64> {
    require(idx, &[Family::Monogenic])?;
    Ok(norm_vec_x_sqr(idx.n, idx.m))
}

/// `⟨X̄_{n,m}^±, X_{n,m}^±⟩ = ‖Sc X‖² - ‖Vec X‖²`.
pub fn mixed_inner_diagonal(n: i32, m: i32) -> f64 {
    norm_x_sqr(n, m) - 2.0 * norm_vec_x_sqr(n, m)
}

/// The exterior closed form
/// `2π(n-2m²+1)(1+δ_{0,m})(-(n-m+2))!/((2n+3)(2n+1)(-(n+m+2))!)`.
pub fn mixed_inner_exterior_closed(n: i32, m: i32) -> f64 {
    let upper = -(n - m + 2);
    let lower = -(n + m + 2);
    2.0 * PI * (n - 2 * m * m + 1) as f64 * (1.0 + kronecker0(m)) * rising_product(lower + 1, upper)
        / ((2 * n + 3) as f64 * (2 * n + 1) as f64)
}

/// `⟨X̄_a, X_b⟩` for two monogenic indices of one domain; zero off the
/// diagonal.
pub fn mixed_inner_xxbar(a: &BasisIndex, b: &BasisIndex) -> Result<f64> {
    require(a, &[Family::Monogenic])?;
    require(b, &[Family::Monogenic])?;
    if a.domain != b.domain {
        return Err(Error::Domain("indices from different domains".into()));
    }
    if (a.n, a.m, a.parity) != (b.n, b.m, b.parity) {
        return Ok(0.0);
    }
    Ok(match a.domain {
        Domain::Interior => mixed_inner_diagonal(a.n, a.m),
        Domain::Exterior => mixed_inner_exterior_closed(a.n, a.m),
    })
}

/// Orders of `X` at degree `n` whose vector part has positive norm.
pub fn vec_x_orders(n: i32) -> impl Iterator<Item = i32> {
    (0..=monogenic_max_order(n)).filter(move |&m| norm_vec_x_sqr(n, m) > 0.0)
}
