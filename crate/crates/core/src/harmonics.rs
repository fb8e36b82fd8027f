//! Solid spherical harmonics `U_{n,m}^±(x) = ρⁿ P_n^m(cos θ) Φ_m^±(φ)` and
//! the index bookkeeping shared by every basis family.
//!
//! Coordinates follow `x = (ρ cos θ, ρ sin θ cos φ, ρ sin θ sin φ)`, with
//! `Φ_m^+ = cos mφ` and `Φ_m^- = sin mφ`. Degrees `n ≥ 0` live on the unit
//! ball, degrees `n ≤ -2` on its exterior.

use std::f64::consts::PI;
use std::fmt;

use crate::algebra::ReducedQuaternion;
use crate::error::{Error, Result};
use crate::legendre::{effective_degree, rising_product, LegendreTable, MAX_DEGREE};
use crate::{contragenic, monogenic};

/// Interior `|x| < 1` or exterior `|x| > 1` of the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Interior,
    Exterior,
}

impl Domain {
    /// Domain on which harmonics of degree `n` are square integrable.
    pub fn for_degree(n: i32) -> Option<Domain> {
        match n {
            n if n >= 0 => Some(Domain::Interior),
            n if n <= -2 => Some(Domain::Exterior),
            _ => None,
        }
    }

    pub fn admits_degree(self, n: i32) -> bool {
        Domain::for_degree(n) == Some(self)
    }

    /// `k`-th admissible degree counted from the sphere: `0, 1, 2, ...` or
    /// `-2, -3, -4, ...`.
    pub fn degree(self, k: i32) -> i32 {
        match self {
            Domain::Interior => k,
            Domain::Exterior => -2 - k,
        }
    }

    /// Admissible degrees with `|n| ≤ max_abs`, ordered away from the sphere.
    pub fn degrees_up_to(self, max_abs: i32) -> Vec<i32> {
        match self {
            Domain::Interior => (0..=max_abs).collect(),
            Domain::Exterior => (2..=max_abs).map(|k| -k).collect(),
        }
    }

    /// Whether `p` lies in the open domain.
    pub fn contains(self, p: &Point3) -> bool {
        let r = p.rho();
        match self {
            Domain::Interior => r < 1.0,
            Domain::Exterior => r > 1.0,
        }
    }

    pub fn check_point(self, p: &Point3) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "point ({}, {}, {}) with |x| = {} is not in the {self} domain",
                p.x0,
                p.x1,
                p.x2,
                p.rho()
            )))
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Domain::Interior => "interior",
            Domain::Exterior => "exterior",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `+` selects `cos mφ`, `-` selects `sin mφ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        }
    }

    /// `+1` for `+`, `-1` for `-`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Parity::Plus => '+',
            Parity::Minus => '-',
        }
    }

    pub const BOTH: [Parity; 2] = [Parity::Plus, Parity::Minus];
}

/// The basis families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Solid harmonics `U`.
    Harmonic,
    /// Basic monogenics `X = ∂U_{n+1}`.
    Monogenic,
    /// Ambigenics `Y = X`.
    Ambigenic,
    /// Ambigenics `Ỹ = X̄ - β X`.
    AmbigenicTilde,
    /// Basic contragenics `Z`.
    Contragenic,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Harmonic => "U",
            Family::Monogenic => "X",
            Family::Ambigenic => "Y",
            Family::AmbigenicTilde => "Yt",
            Family::Contragenic => "Z",
        }
    }
}

/// Cartesian point with a spherical view.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

impl Point3 {
    pub const fn new(x0: f64, x1: f64, x2: f64) -> Self {
        Self { x0, x1, x2 }
    }

    pub fn from_spherical(rho: f64, theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self::new(rho * ct, rho * st * cp, rho * st * sp)
    }

    pub fn rho(&self) -> f64 {
        (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2).sqrt()
    }

    /// Distance to the `x0` axis, `ρ sin θ`.
    pub fn axial_distance(&self) -> f64 {
        self.x1.hypot(self.x2)
    }

    /// `(ρ, θ, φ)` with `θ ∈ [0, π]` and `φ ∈ (-π, π]`.
    pub fn spherical(&self) -> (f64, f64, f64) {
        let rho = self.rho();
        let theta = self.axial_distance().atan2(self.x0);
        let phi = self.x2.atan2(self.x1);
        (rho, theta, phi)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.x0 * s, self.x1 * s, self.x2 * s)
    }

    pub fn offset(&self, axis: usize, h: f64) -> Self {
        let mut q = *self;
        match axis {
            0 => q.x0 += h,
            1 => q.x1 += h,
            2 => q.x2 += h,
            _ => panic!("axis {axis} out of range"),
        }
        q
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x0, self.x1, self.x2]
    }
}

/// Every `U_{n,m}^±` at one point for effective degrees up to `max_degree`.
///
/// The basis evaluators in this crate read their harmonics from one table
/// per point, so evaluating many basis functions costs one set of
/// recurrences.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    rho: f64,
    legendre: LegendreTable,
    cos_m: Vec<f64>,
    sin_m: Vec<f64>,
}

impl HarmonicTable {
    pub fn new(p: &Point3, max_degree: usize) -> Self {
        let rho = p.rho();
        let axial = p.axial_distance();
        let (t, s) = if rho > 0.0 {
            (p.x0 / rho, axial / rho)
        } else {
            (1.0, 0.0)
        };
        let (c1, s1) = if axial > 0.0 {
            (p.x1 / axial, p.x2 / axial)
        } else {
            (1.0, 0.0)
        };
        let orders = max_degree + 2;
        let mut cos_m = Vec::with_capacity(orders);
        let mut sin_m = Vec::with_capacity(orders);
        let (mut c, mut s_) = (1.0, 0.0);
        for _ in 0..orders {
            cos_m.push(c);
            sin_m.push(s_);
            let next_c = c * c1 - s_ * s1;
            s_ = s_ * c1 + c * s1;
            c = next_c;
        }
        Self {
            rho,
            legendre: LegendreTable::new(max_degree, t, s),
            cos_m,
            sin_m,
        }
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn max_degree(&self) -> usize {
        self.legendre.max_degree()
    }

    /// `U_{n,m}^±`; zero when `m` exceeds the effective degree or for the
    /// excluded `U_{n,0}^-`.
    #[inline]
    pub fn u(&self, n: i32, m: i32, parity: Parity) -> f64 {
        debug_assert!(m >= 0);
        let nu = effective_degree(n);
        if m > nu || (m == 0 && parity == Parity::Minus) {
            return 0.0;
        }
        let trig = match parity {
            Parity::Plus => self.cos_m[m as usize],
            Parity::Minus => self.sin_m[m as usize],
        };
        self.rho.powi(n) * self.legendre.get(nu as usize, m as usize) * trig
    }
}

/// Index of one basis function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub family: Family,
    pub domain: Domain,
    pub n: i32,
    pub m: i32,
    pub parity: Parity,
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}]({},{},{})",
            self.family.symbol(),
            self.domain,
            self.n,
            self.m,
            self.parity.symbol()
        )
    }
}

impl BasisIndex {
    /// Validated constructor.
    pub fn new(family: Family, domain: Domain, n: i32, m: i32, parity: Parity) -> Result<Self> {
        let idx = Self {
            family,
            domain,
            n,
            m,
            parity,
        };
        idx.validate()?;
        Ok(idx)
    }

    /// Like [`BasisIndex::new`] with the domain implied by the sign of `n`.
    pub fn infer(family: Family, n: i32, m: i32, parity: Parity) -> Result<Self> {
        let domain = Domain::for_degree(n)
            .ok_or_else(|| Error::InvalidIndex(format!("degree {n} belongs to neither domain")))?;
        Self::new(family, domain, n, m, parity)
    }

    pub fn harmonic(n: i32, m: i32, parity: Parity) -> Result<Self> {
        Self::infer(Family::Harmonic, n, m, parity)
    }

    pub fn monogenic(n: i32, m: i32, parity: Parity) -> Result<Self> {
        Self::infer(Family::Monogenic, n, m, parity)
    }

    pub fn contragenic(n: i32, m: i32, parity: Parity) -> Result<Self> {
        Self::infer(Family::Contragenic, n, m, parity)
    }

    fn invalid(&self, why: &str) -> Error {
        Error::InvalidIndex(format!("{self}: {why}"))
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.n, self.m);
        if m < 0 {
            return Err(self.invalid("order must be non-negative"));
        }
        if m == 0 && self.parity == Parity::Minus {
            return Err(self.invalid("m = 0 with parity - vanishes identically"));
        }
        if !self.domain.admits_degree(n) {
            return Err(self.invalid("degree not admissible in this domain"));
        }
        if effective_degree(n) > MAX_DEGREE - 2 {
            return Err(Error::DegreeTooLarge(n));
        }
        let ok = match self.family {
            Family::Harmonic => m <= harmonic_max_order(n),
            Family::Monogenic | Family::Ambigenic => m <= monogenic_max_order(n),
            Family::AmbigenicTilde => {
                m <= monogenic_max_order(n) && !monogenic::tilde_vanishes(n, m)
            }
            Family::Contragenic => {
                if n == 0 {
                    return Err(self.invalid("there are no contragenics of degree 0"));
                }
                m <= contragenic_max_vector_order(n) || self.is_scalar_contragenic()
            }
        };
        if ok {
            Ok(())
        } else {
            Err(self.invalid("order outside the admissible range"))
        }
    }

    /// Exterior scalar contragenics `Z_{n,-n+1}^± = U_{n,-n-1}^±`.
    pub fn is_scalar_contragenic(&self) -> bool {
        self.family == Family::Contragenic && self.n <= -2 && self.m == -self.n + 1
    }

    /// Evaluates the basis function at `p`.
    pub fn eval(&self, p: &Point3) -> Result<ReducedQuaternion> {
        check_singularity(self.n, p)?;
        let table = HarmonicTable::new(p, self.table_degree());
        Ok(self.eval_with_table(&table))
    }

    /// Effective degree a [`HarmonicTable`] needs for this index.
    pub fn table_degree(&self) -> usize {
        effective_degree(self.n) as usize
    }

    /// Evaluation against a precomputed table; no validation.
    pub fn eval_with_table(&self, table: &HarmonicTable) -> ReducedQuaternion {
        let (n, m, par) = (self.n, self.m, self.parity);
        match self.family {
            Family::Harmonic => ReducedQuaternion::scalar(table.u(n, m, par)),
            Family::Monogenic | Family::Ambigenic => monogenic::x_from_table(table, n, m, par),
            Family::AmbigenicTilde => monogenic::y_tilde_from_table(table, n, m, par),
            Family::Contragenic => contragenic::z_from_table(table, n, m, par),
        }
    }

    /// Closed-form squared L² norm over the index's domain.
    pub fn norm_sqr(&self) -> f64 {
        let (n, m) = (self.n, self.m);
        match self.family {
            Family::Harmonic => harmonic_norm_sqr(n, m),
            Family::Monogenic | Family::Ambigenic => monogenic::norm_x_sqr(n, m),
            Family::AmbigenicTilde => monogenic::norm_y_tilde_sqr(n, m),
            Family::Contragenic => contragenic::norm_z_sqr(n, m),
        }
    }
}

pub(crate) fn check_singularity(n: i32, p: &Point3) -> Result<()> {
    if n < 0 && p.rho() == 0.0 {
        return Err(Error::Domain(format!(
            "degree {n} is singular at the origin"
        )));
    }
    Ok(())
}

/// Largest `m` in `I_H(n)`.
pub fn harmonic_max_order(n: i32) -> i32 {
    effective_degree(n)
}

/// Largest `m` in `I_M(n) = I_H(n+1)`.
pub fn monogenic_max_order(n: i32) -> i32 {
    if n >= 0 {
        n + 1
    } else {
        -n - 2
    }
}

/// Largest vectorial `m` in `I_N(n)`: `n - 1` inside, `-n` outside.
pub fn contragenic_max_vector_order(n: i32) -> i32 {
    if n > 0 {
        n - 1
    } else {
        -n
    }
}

/// Evaluates `U_{n,m}^±` for any integer degree, including the
/// non-square-integrable `U_{-1,0}^+ = 1/ρ`.
pub fn solid_harmonic(n: i32, m: i32, parity: Parity, p: &Point3) -> Result<f64> {
    if m < 0 {
        return Err(Error::InvalidIndex(format!(
            "order must be non-negative, got {m}"
        )));
    }
    if effective_degree(n) > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    check_singularity(n, p)?;
    let table = HarmonicTable::new(p, effective_degree(n) as usize);
    Ok(table.u(n, m, parity))
}

/// `U_{n,m}^±(p)` for a validated harmonic index.
pub fn eval_u(idx: &BasisIndex, p: &Point3) -> Result<f64> {
    if idx.family != Family::Harmonic {
        return Err(Error::InvalidIndex(format!(
            "{idx} is not a harmonic index"
        )));
    }
    idx.validate()?;
    Ok(idx.eval(p)?.a0)
}

/// `U_{n,m}^±(p) - ρ^{2n+1} U_{-n-1,m}^±(p)` for `n ≥ 1`.
pub fn kelvin_pair_check(n: i32, m: i32, parity: Parity, p: &Point3) -> Result<f64> {
    let inner = BasisIndex::new(Family::Harmonic, Domain::Interior, n, m, parity)?;
    let outer = BasisIndex::new(Family::Harmonic, Domain::Exterior, -n - 1, m, parity)?;
    if n < 1 {
        return Err(Error::InvalidIndex(format!(
            "Kelvin pair needs n >= 1, got {n}"
        )));
    }
    if p.rho() == 0.0 {
        return Err(Error::Domain(
            "Kelvin pair is singular at the origin".into(),
        ));
    }
    Ok(eval_u(&inner, p)? - p.rho().powi(2 * n + 1) * eval_u(&outer, p)?)
}

fn kronecker0(m: i32) -> f64 {
    if m == 0 {
        1.0
    } else {
        0.0
    }
}

/// `(ν+m)!/(ν-m)!` with `ν` the effective degree of `n`.
fn order_ratio(nu: i32, m: i32) -> f64 {
    rising_product(nu - m + 1, nu + m)
}

/// `‖U_{n,m}^±‖²`.
///
/// The half-integer factorial arguments `|n+1/2| ± (m + ... )` reduce to
/// `(ν+m)!` and `(ν-m)!` for the effective degree ν, so only integer
/// factorial ratios appear.
pub fn harmonic_norm_sqr(n: i32, m: i32) -> f64 {
    let nu = effective_degree(n);
    2.0 * PI * (1.0 + kronecker0(m)) * order_ratio(nu, m)
        / ((2 * n + 3) as f64 * (2 * n + 1) as f64)
}

/// `‖U‖²` for a validated harmonic index.
pub fn norm_u(idx: &BasisIndex) -> Result<f64> {
    if idx.family != Family::Harmonic {
        return Err(Error::InvalidIndex(format!(
            "{idx} is not a harmonic index"
        )));
    }
    idx.validate()?;
    Ok(harmonic_norm_sqr(idx.n, idx.m))
}

/// Admissible `(m, parity)` pairs of a family at degree `n`, ordered by `m`
/// with `+` first.
pub fn index_range(family: Family, domain: Domain, n: i32) -> Result<Vec<(i32, Parity)>> {
    if !domain.admits_degree(n) {
        return Err(Error::InvalidIndex(format!(
            "degree {n} is not admissible in the {domain} domain"
        )));
    }
    if family == Family::Contragenic && n == 0 {
        return Err(Error::InvalidIndex(
            "there are no contragenics of degree 0".into(),
        ));
    }
    let max_m = match family {
        Family::Harmonic => harmonic_max_order(n),
        Family::Monogenic | Family::Ambigenic | Family::AmbigenicTilde => monogenic_max_order(n),
        Family::Contragenic if n < 0 => -n + 1,
        Family::Contragenic => contragenic_max_vector_order(n),
    };
    let mut out = Vec::new();
    for m in 0..=max_m {
        for parity in Parity::BOTH {
            let idx = BasisIndex {
                family,
                domain,
                n,
                m,
                parity,
            };
            if idx.validate().is_ok() {
                out.push((m, parity));
            }
        }
    }
    Ok(out)
}

/// [`index_range`] as full indices.
pub fn basis_of_degree(family: Family, domain: Domain, n: i32) -> Result<Vec<BasisIndex>> {
    Ok(index_range(family, domain, n)?
        .into_iter()
        .map(|(m, parity)| BasisIndex {
            family,
            domain,
            n,
            m,
            parity,
        })
        .collect())
}

/// All indices of a family with `|n| ≤ max_abs` (degree 0 skipped for `Z`).
pub fn basis_up_to(family: Family, domain: Domain, max_abs: i32) -> Vec<BasisIndex> {
    domain
        .degrees_up_to(max_abs)
        .into_iter()
        .filter(|&n| !(family == Family::Contragenic && n == 0))
        .flat_map(|n| basis_of_degree(family, domain, n).expect("admissible degree"))
        .collect()
}
