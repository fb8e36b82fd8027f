//! Basic contragenic functions `Z_{n,m}^±`, their norms, and the duality
//! with basic monogenics of the Kelvin-dual degree `-n-1`.
//!
//! Vectorial kinds, with `a = α_{n,-m} = (n-m)(n-m+1)`:
//!
//! ```text
//! Z^+_{n,0} = U^-_{n,1} e1 - U^+_{n,1} e2
//! Z^±_{n,m} = (U^∓_{n,m+1} + a U^∓_{n,m-1}) e1 ∓ (U^±_{n,m+1} - a U^±_{n,m-1}) e2
//! ```
//!
//! On the exterior the scalar harmonics `Z^±_{n,-n+1} = U^±_{n,-n-1}` are
//! contragenic as well.

use std::f64::consts::PI;

use crate::algebra::{ReducedQuaternion, VecField2};
use crate::error::{Error, Result};
use crate::harmonics::{check_singularity, BasisIndex, Family, HarmonicTable, Parity, Point3};
use crate::legendre::{effective_degree, rising_product};
use crate::monogenic;

/// Vector-valued or (exterior only) scalar-valued contragenic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContragenicKind {
    Vectorial,
    Scalar,
}

/// Kind of a contragenic index.
pub fn kind(idx: &BasisIndex) -> ContragenicKind {
    if idx.is_scalar_contragenic() {
        ContragenicKind::Scalar
    } else {
        ContragenicKind::Vectorial
    }
}

pub(crate) fn z_vec_from_table(table: &HarmonicTable, n: i32, m: i32, par: Parity) -> VecField2 {
    if m == 0 {
        return VecField2::new(table.u(n, 1, Parity::Minus), -table.u(n, 1, Parity::Plus));
    }
    let a = monogenic::alpha(n, -m);
    let other = par.flip();
    let v1 = table.u(n, m + 1, other) + a * table.u(n, m - 1, other);
    let v2 = -par.sign() * (table.u(n, m + 1, par) - a * table.u(n, m - 1, par));
    VecField2::new(v1, v2)
}

pub(crate) fn z_from_table(
    table: &HarmonicTable,
    n: i32,
    m: i32,
    par: Parity,
) -> ReducedQuaternion {
    if n <= -2 && m == -n + 1 {
        ReducedQuaternion::scalar(table.u(n, -n - 1, par))
    } else {
        z_vec_from_table(table, n, m, par).into()
    }
}

/// `Z_{n,m}^±(p)`.
pub fn eval_z(idx: &BasisIndex, p: &Point3) -> Result<ReducedQuaternion> {
    if idx.family != Family::Contragenic {
        return Err(Error::InvalidIndex(format!(
            "{idx} is not a contragenic index"
        )));
    }
    idx.validate()?;
    idx.eval(p)
}

/// The vectorial formula at any degree, without index validation.
///
/// The interior degree-0 kernel term reaches `Z_{-1,1}`, which lies
/// outside both degree sets.
pub fn z_raw(n: i32, m: i32, par: Parity, p: &Point3) -> Result<VecField2> {
    if m < 0 {
        return Err(Error::InvalidIndex(format!(
            "order must be non-negative, got {m}"
        )));
    }
    check_singularity(n, p)?;
    let table = HarmonicTable::new(p, effective_degree(n) as usize);
    Ok(z_vec_from_table(&table, n, m, par))
}

fn kronecker0(m: i32) -> f64 {
    if m == 0 {
        1.0
    } else {
        0.0
    }
}

/// Closed-form `‖Z_{n,m}^±‖²`.
///
/// Vectorial kinds:
/// `8π(n²+m²+n)(|n-1/2|+m-1/2)!/((1+δ_{0,m})(2n+3)(2n+1)(|n-1/2|-m-1/2)!)`.
/// Scalar kinds: `2π(-2n-2)!/((2n+3)(2n+1))`.
pub fn norm_z_sqr(n: i32, m: i32) -> f64 {
    let den = (2 * n + 3) as f64 * (2 * n + 1) as f64;
    if n <= -2 && m == -n + 1 {
        return 2.0 * PI * rising_product(1, -2 * n - 2) / den;
    }
    let nu = effective_degree(n - 1);
    let k = (n * n + m * m + n) as f64;
    8.0 * PI * k * rising_product(nu - m + 1, nu + m) / ((1.0 + kronecker0(m)) * den)
}

/// `‖Z‖²` for a validated contragenic index.
pub fn norm_z(idx: &BasisIndex) -> Result<f64> {
    if idx.family != Family::Contragenic {
        return Err(Error::InvalidIndex(format!(
            "{idx} is not a contragenic index"
        )));
    }
    idx.validate()?;
    Ok(norm_z_sqr(idx.n, idx.m))
}

/// `1` for `m = 0`, `2` otherwise.
pub fn duality_factor(m: i32) -> f64 {
    if m == 0 {
        1.0
    } else {
        2.0
    }
}

/// `∓ c ρ^{2n+1} J(Vec X^±_{-n-1,m})(p)`, with `J` the quarter turn.
pub fn dual_of_monogenic(n: i32, m: i32, parity: Parity, p: &Point3) -> Result<VecField2> {
    let x = monogenic::x_raw(-n - 1, m, parity, p)?;
    let scale = -parity.sign() * duality_factor(m) * p.rho().powi(2 * n + 1);
    Ok(x.vec().quarter_turn() * scale)
}

/// `Z_{n,m}^±(p) - (∓ c ρ^{2n+1} J(Vec X^±_{-n-1,m})(p))`.
pub fn duality_residual(n: i32, m: i32, parity: Parity, p: &Point3) -> Result<VecField2> {
    let idx = BasisIndex::contragenic(n, m, parity)?;
    if idx.is_scalar_contragenic() {
        return Err(Error::InvalidIndex(format!(
            "{idx}: the duality relation does not cover scalar contragenics"
        )));
    }
    if p.rho() == 0.0 {
        return Err(Error::Domain(
            "the duality relation is singular at the origin".into(),
        ));
    }
    Ok(idx.eval(p)?.vec() - dual_of_monogenic(n, m, parity, p)?)
}

/// `Vec X / ‖Vec X‖`.
pub fn normalized_vec_x(idx: &BasisIndex, p: &Point3) -> Result<VecField2> {
    let nrm = monogenic::norm_vec_x(idx)?;
    if nrm <= 0.0 {
        return Err(Error::ZeroNorm(format!("Vec {idx}")));
    }
    Ok(idx.eval(p)?.vec() * nrm.sqrt().recip())
}

/// `Z / ‖Z‖`.
pub fn normalized_z(idx: &BasisIndex, p: &Point3) -> Result<ReducedQuaternion> {
    let nrm = norm_z(idx)?;
    if nrm <= 0.0 {
        return Err(Error::ZeroNorm(idx.to_string()));
    }
    Ok(idx.eval(p)? * nrm.sqrt().recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::{contragenic_max_vector_order, Domain};

    fn z(n: i32, m: i32, par: Parity, p: &Point3) -> ReducedQuaternion {
        eval_z(&BasisIndex::contragenic(n, m, par).unwrap(), p).unwrap()
    }

    #[test]
    fn low_degree_examples() {
        let p = Point3::new(0.5, 1.2, -0.4);
        let r3 = p.rho().powi(3);
        let got = z(-2, 0, Parity::Plus, &p);
        let want = ReducedQuaternion::new(0.0, p.x2 / r3, -p.x1 / r3);
        assert!((got - want).max_abs() < 1e-15);
        let s = z(-2, 3, Parity::Plus, &p);
        assert!((s - ReducedQuaternion::scalar(p.x1 / r3)).max_abs() < 1e-15);
        let q = Point3::new(0.1, 0.3, -0.2);
        let want = ReducedQuaternion::new(0.0, q.x2, -q.x1);
        assert!((z(1, 0, Parity::Plus, &q) - want).max_abs() < 1e-15);
    }

    #[test]
    fn rejects_degree_zero_and_bad_orders() {
        assert!(BasisIndex::contragenic(0, 0, Parity::Plus).is_err());
        assert!(BasisIndex::contragenic(2, 2, Parity::Plus).is_err());
        assert!(BasisIndex::contragenic(-3, 5, Parity::Plus).is_err());
        assert!(BasisIndex::contragenic(-3, 3, Parity::Minus).is_ok());
    }

    #[test]
    fn norm_examples() {
        assert!((norm_z_sqr(2, 1) - 16.0 * PI / 5.0).abs() < 1e-14);
        assert!((norm_z_sqr(-2, 3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((norm_z_sqr(1, 0) - 8.0 * PI / 15.0).abs() < 1e-14);
    }

    #[test]
    fn duality_examples() {
        let cases = [
            (-2, 0, Parity::Plus, Point3::new(0.5, 1.2, -0.4)),
            (1, 0, Parity::Plus, Point3::new(0.2, -0.3, 0.1)),
            (2, 1, Parity::Minus, Point3::new(-0.4, 0.3, 0.5)),
        ];
        for (n, m, par, p) in cases {
            let r = duality_residual(n, m, par, &p).unwrap();
            let scale = z(n, m, par, &p).max_abs().max(1e-300);
            assert!(r.norm() <= 1e-12 * scale.max(1.0), "n={n} m={m}: {r:?}");
        }
    }

    #[test]
    fn duality_over_all_vectorial_orders() {
        let pts = [Point3::new(0.3, -0.5, 0.2), Point3::new(-1.5, 0.7, 2.2)];
        for n in (-6..=6).filter(|&n| n != 0 && n != -1) {
            let dom = Domain::for_degree(n).unwrap();
            for m in 0..=contragenic_max_vector_order(n) {
                for par in Parity::BOTH {
                    if m == 0 && par == Parity::Minus {
                        continue;
                    }
                    for p in pts.iter().filter(|p| dom.contains(p)) {
                        let r = duality_residual(n, m, par, p).unwrap();
                        let scale = z(n, m, par, p).max_abs();
                        assert!(r.norm() <= 1e-12 * scale, "n={n} m={m} {par:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_rejects_scalar_kind() {
        let p = Point3::new(2.0, 0.0, 1.0);
        assert!(duality_residual(-2, 3, Parity::Plus, &p).is_err());
    }

    #[test]
    fn zero_norm_error() {
        let idx = BasisIndex::monogenic(0, 0, Parity::Plus).unwrap();
        assert!(matches!(
            normalized_vec_x(&idx, &Point3::new(0.1, 0.1, 0.1)),
            Err(Error::ZeroNorm(_))
        ));
    }

    #[test]
    fn interior_scalar_parts_vanish() {
        let p = Point3::new(0.3, 0.2, -0.6);
        for n in 1..=5 {
            for m in 0..n {
                for par in Parity::BOTH {
                    if m == 0 && par == Parity::Minus {
                        continue;
                    }
                    assert_eq!(z(n, m, par, &p).a0, 0.0);
                }
            }
        }
    }
}
