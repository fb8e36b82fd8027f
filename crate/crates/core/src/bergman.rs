//! Truncated Bergman kernels and projections onto `Vec M` (vector parts of
//! square-integrable monogenics) and `N` (contragenics), both domains.
//!
//! With an orthonormal family `φ_i` the truncated kernel is the matrix
//! `K_{jk}(x,y) = Σ_i [φ_i(x)]_j [φ_i(y)]_k` and the operator is
//! `B[f](x)_j = ∫ Σ_k K_{jk}(x,y) f_k(y) dV(y)`. For `Vec M` the family is
//! `Vec X / ‖Vec X‖`, for `N` it is the vectorial `Z / ‖Z‖`.

use crate::algebra::VecField2;
use crate::contragenic::{self, duality_factor};
use crate::error::{Error, Result};
use crate::harmonics::{
    check_singularity, BasisIndex, Domain, Family, HarmonicTable, Parity, Point3,
};
use crate::legendre::effective_degree;
use crate::monogenic;
use crate::parallel;
use crate::quadrature::QuadratureRule;

const CHUNK: usize = 256;

/// Target space of a Bergman operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    /// Vector parts of monogenic functions.
    VecM,
    /// Contragenic functions.
    Contragenic,
}

impl Operator {
    pub fn symbol(self) -> &'static str {
        match self {
            Operator::VecM => "M",
            Operator::Contragenic => "N",
        }
    }
}

/// Domain plus the number `N` of degrees beyond the innermost one: degrees
/// `0..=N` inside and `-2..=-2-N` outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelTruncation {
    pub domain: Domain,
    pub n: usize,
}

impl KernelTruncation {
    pub fn new(domain: Domain, n: usize) -> Self {
        Self { domain, n }
    }

    /// Included degrees, ordered away from the sphere.
    pub fn degrees(&self) -> Vec<i32> {
        (0..=self.n as i32).map(|k| self.domain.degree(k)).collect()
    }

    /// `Vec X` indices with positive norm.
    pub fn vec_m_indices(&self) -> Vec<BasisIndex> {
        let mut out = Vec::new();
        for n in self.degrees() {
            for m in monogenic::vec_x_orders(n) {
                for parity in Parity::BOTH {
                    if let Ok(idx) = BasisIndex::new(Family::Monogenic, self.domain, n, m, parity) {
                        out.push(idx);
                    }
                }
            }
        }
        out
    }

    /// Vectorial `Z` indices.
    pub fn contragenic_indices(&self) -> Vec<BasisIndex> {
        let mut out = Vec::new();
        for n in self.degrees().into_iter().filter(|&n| n != 0) {
            let range = crate::harmonics::index_range(Family::Contragenic, self.domain, n)
                .expect("admissible degree");
            for (m, parity) in range {
                let idx = BasisIndex {
                    family: Family::Contragenic,
                    domain: self.domain,
                    n,
                    m,
                    parity,
                };
                if !idx.is_scalar_contragenic() {
                    out.push(idx);
                }
            }
        }
        out
    }

    pub fn indices(&self, op: Operator) -> Vec<BasisIndex> {
        match op {
            Operator::VecM => self.vec_m_indices(),
            Operator::Contragenic => self.contragenic_indices(),
        }
    }

    /// Largest effective degree any term needs, including dual-form terms.
    fn table_degree(&self) -> usize {
        self.degrees()
            .into_iter()
            .map(|n| effective_degree(n).max(effective_degree(-n - 1)) as usize)
            .max()
            .unwrap_or(0)
    }
}

/// One orthonormal kernel term.
#[derive(Debug, Clone, Copy)]
pub struct Term {
    pub index: BasisIndex,
    /// `1/‖φ‖` for the unnormalized field.
    pub scale: f64,
}

impl Term {
    fn eval(&self, table: &HarmonicTable) -> VecField2 {
        self.index.eval_with_table(table).vec() * self.scale
    }
}

/// Orthonormal terms of a truncated kernel.
pub fn terms(op: Operator, trunc: &KernelTruncation) -> Vec<Term> {
    trunc
        .indices(op)
        .into_iter()
        .map(|index| {
            let nrm = match op {
                Operator::VecM => monogenic::norm_vec_x_sqr(index.n, index.m),
                Operator::Contragenic => index.norm_sqr(),
            };
            Term {
                index,
                scale: nrm.sqrt().recip(),
            }
        })
        .collect()
}

/// A 2×2 kernel value `K_{jk}(x,y)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KernelMatrix {
    pub k: [[f64; 2]; 2],
}

impl KernelMatrix {
    fn add_outer(&mut self, a: VecField2, b: VecField2, w: f64) {
        let (a, b) = ([a.v1, a.v2], [b.v1, b.v2]);
        for (row, aj) in self.k.iter_mut().zip(a) {
            for (k, bl) in row.iter_mut().zip(b) {
                *k += w * aj * bl;
            }
        }
    }

    /// The field `b_j(x, ·)`, row `j` of the matrix.
    pub fn b(&self, j: usize) -> VecField2 {
        VecField2::new(self.k[j][0], self.k[j][1])
    }

    pub fn transpose(&self) -> Self {
        let k = self.k;
        Self {
            k: [[k[0][0], k[1][0]], [k[0][1], k[1][1]]],
        }
    }

    /// `K f`.
    pub fn apply(&self, f: VecField2) -> VecField2 {
        VecField2::new(self.b(0).dot(&f), self.b(1).dot(&f))
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        let mut d = 0.0f64;
        for j in 0..2 {
            for l in 0..2 {
                d = d.max((self.k[j][l] - o.k[j][l]).abs());
            }
        }
        d
    }

    pub fn max_abs(&self) -> f64 {
        self.k.iter().flatten().fold(0.0f64, |a, &b| a.max(b.abs()))
    }
}

fn check(domain: Domain, p: &Point3) -> Result<()> {
    domain.check_point(p)
}

/// Truncated kernel from the orthonormal family.
pub fn kernel(
    op: Operator,
    trunc: &KernelTruncation,
    x: &Point3,
    y: &Point3,
) -> Result<KernelMatrix> {
    check(trunc.domain, x)?;
    check(trunc.domain, y)?;
    let deg = trunc.table_degree();
    let (tx, ty) = (HarmonicTable::new(x, deg), HarmonicTable::new(y, deg));
    let mut out = KernelMatrix::default();
    for t in terms(op, trunc) {
        out.add_outer(t.eval(&tx), t.eval(&ty), 1.0);
    }
    Ok(out)
}

/// `J⁻¹(v) = v2 e1 - v1 e2`.
fn unturn(v: VecField2) -> VecField2 {
    VecField2::new(v.v2, -v.v1)
}

/// Truncated kernel written through the dual family.
///
/// For `Vec M` each term `Vec X_{n,m}` is replaced by
/// `ρ^{2n+1} J⁻¹ Z_{-n-1,m}` with weight `1/(c² ‖Vec X‖²)`; for `N` each
/// `Z_{n,m}` by `ρ^{2n+1} J Vec X_{-n-1,m}` with weight `c²/‖Z‖²`. Here
/// `J` is the quarter turn and `c = 1` for `m = 0`, `2` otherwise.
pub fn kernel_dual(
    op: Operator,
    trunc: &KernelTruncation,
    x: &Point3,
    y: &Point3,
) -> Result<KernelMatrix> {
    check(trunc.domain, x)?;
    check(trunc.domain, y)?;
    let deg = trunc.table_degree();
    let (tx, ty) = (HarmonicTable::new(x, deg), HarmonicTable::new(y, deg));
    let (rx, ry) = (tx.rho(), ty.rho());
    let mut out = KernelMatrix::default();
    for idx in trunc.indices(op) {
        let (n, m, par) = (idx.n, idx.m, idx.parity);
        let c = duality_factor(m);
        let radial = rx.powi(2 * n + 1) * ry.powi(2 * n + 1);
        match op {
            Operator::VecM => {
                let w = radial / (c * c * monogenic::norm_vec_x_sqr(n, m));
                let zx = unturn(contragenic::z_vec_from_table(&tx, -n - 1, m, par));
                let zy = unturn(contragenic::z_vec_from_table(&ty, -n - 1, m, par));
                out.add_outer(zx, zy, w);
            }
            Operator::Contragenic => {
                let w = radial * c * c / contragenic::norm_z_sqr(n, m);
                let vx = monogenic::x_from_table(&tx, -n - 1, m, par)
                    .vec()
                    .quarter_turn();
                let vy = monogenic::x_from_table(&ty, -n - 1, m, par)
                    .vec()
                    .quarter_turn();
                out.add_outer(vx, vy, w);
            }
        }
    }
    Ok(out)
}

/// Coefficients `⟨f, φ_i⟩` of a field against an orthonormal family, ready
/// for evaluation of the projection.
#[derive(Debug, Clone)]
pub struct Projection {
    pub op: Operator,
    pub trunc: KernelTruncation,
    pub terms: Vec<Term>,
    pub coefficients: Vec<f64>,
}

fn term_coefficients<F>(terms: &[Term], deg: usize, f: &F, rule: &QuadratureRule) -> Vec<f64>
where
    F: Fn(&Point3) -> VecField2 + Sync,
{
    let k = terms.len();
    let (nodes, weights) = (rule.nodes(), rule.weights());
    let partials = parallel::map_chunks(rule.len(), CHUNK, |r| {
        let mut acc = vec![0.0; k];
        for j in r {
            let y = &nodes[j];
            let fy = f(y) * weights[j];
            let table = HarmonicTable::new(y, deg);
            for (a, t) in acc.iter_mut().zip(terms) {
                *a += fy.dot(&t.eval(&table));
            }
        }
        acc
    });
    let mut out = vec![0.0; k];
    for part in partials {
        for (o, p) in out.iter_mut().zip(part) {
            *o += p;
        }
    }
    out
}

/// Coefficient path: `B[f] = Σ ⟨f, φ_i⟩ φ_i`.
pub fn project<F>(
    op: Operator,
    trunc: &KernelTruncation,
    f: F,
    rule: &QuadratureRule,
) -> Result<Projection>
where
    F: Fn(&Point3) -> VecField2 + Sync,
{
    if rule.domain() != trunc.domain {
        return Err(Error::Domain(format!(
            "{} rule used for a {} kernel",
            rule.domain(),
            trunc.domain
        )));
    }
    let terms = terms(op, trunc);
    let coefficients = term_coefficients(&terms, trunc.table_degree(), &f, rule);
    Ok(Projection {
        op,
        trunc: *trunc,
        terms,
        coefficients,
    })
}

impl Projection {
    /// `B[f](x)`.
    pub fn eval(&self, x: &Point3) -> Result<VecField2> {
        self.eval_truncated(x, self.trunc.n)
    }

    /// `B[f](x)` keeping only the first `n + 1` degrees.
    pub fn eval_truncated(&self, x: &Point3, n: usize) -> Result<VecField2> {
        check(self.trunc.domain, x)?;
        let outer = self.trunc.domain.degree(n.min(self.trunc.n) as i32);
        let table = HarmonicTable::new(x, self.trunc.table_degree());
        let mut out = VecField2::ZERO;
        for (t, c) in self.terms.iter().zip(&self.coefficients) {
            if t.index.n.abs() <= outer.abs() {
                out += t.eval(&table) * *c;
            }
        }
        Ok(out)
    }

    pub fn eval_many(&self, xs: &[Point3], n: usize) -> Result<Vec<VecField2>> {
        parallel::map_items(xs, |x| self.eval_truncated(x, n))
            .into_iter()
            .collect()
    }
}

/// Kernel path: `B[f](x)_j = ∫ Σ_k K_{jk}(x,y) f_k(y) dV(y)`, with the
/// kernel assembled at every quadrature node.
pub fn project_kernel_path<F>(
    op: Operator,
    trunc: &KernelTruncation,
    f: F,
    rule: &QuadratureRule,
    x: &Point3,
) -> Result<VecField2>
where
    F: Fn(&Point3) -> VecField2 + Sync,
{
    check(trunc.domain, x)?;
    if rule.domain() != trunc.domain {
        return Err(Error::Domain("rule and kernel domains differ".into()));
    }
    let terms = terms(op, trunc);
    let deg = trunc.table_degree();
    let tx = HarmonicTable::new(x, deg);
    let at_x: Vec<VecField2> = terms.iter().map(|t| t.eval(&tx)).collect();
    let (nodes, weights) = (rule.nodes(), rule.weights());
    let parts = parallel::map_chunks(rule.len(), CHUNK, |r| {
        let mut acc = VecField2::ZERO;
        for j in r {
            let y = &nodes[j];
            let ty = HarmonicTable::new(y, deg);
            let mut k = KernelMatrix::default();
            for (t, ax) in terms.iter().zip(&at_x) {
                k.add_outer(*ax, t.eval(&ty), 1.0);
            }
            acc += k.apply(f(y)) * weights[j];
        }
        acc
    });
    Ok(parts.into_iter().fold(VecField2::ZERO, |a, b| a + b))
}

/// `P = B_M + B_N` applied to one field.
#[derive(Debug, Clone)]
pub struct HarmonicProjection {
    pub vec_m: Projection,
    pub contragenic: Projection,
}

/// Builds `P[f]` from truncations of matching domain.
pub fn projector_p<F>(
    trunc_m: &KernelTruncation,
    trunc_n: &KernelTruncation,
    f: F,
    rule: &QuadratureRule,
) -> Result<HarmonicProjection>
where
    F: Fn(&Point3) -> VecField2 + Sync,
{
    if trunc_m.domain != trunc_n.domain {
        return Err(Error::Domain(format!(
            "mismatched domains {} and {}",
            trunc_m.domain, trunc_n.domain
        )));
    }
    Ok(HarmonicProjection {
        vec_m: project(Operator::VecM, trunc_m, &f, rule)?,
        contragenic: project(Operator::Contragenic, trunc_n, &f, rule)?,
    })
}

impl HarmonicProjection {
    /// `P[f](x)`.
    pub fn eval(&self, x: &Point3) -> Result<VecField2> {
        Ok(self.vec_m.eval(x)? + self.contragenic.eval(x)?)
    }

    /// `Q[f](x) = f(x) - P[f](x)` given `f(x)`.
    pub fn complement(&self, fx: VecField2, x: &Point3) -> Result<VecField2> {
        Ok(fx - self.eval(x)?)
    }
}

/// `Vec` of a basis element as a plain field; zero at the origin for
/// negative degrees.
pub fn vec_field(idx: BasisIndex) -> impl Fn(&Point3) -> VecField2 + Sync + Copy {
    move |p: &Point3| {
        if check_singularity(idx.n, p).is_err() {
            return VecField2::ZERO;
        }
        idx.eval_with_table(&HarmonicTable::new(p, idx.table_degree()))
            .vec()
    }
}
