mod common;

use common::*;
use contrakernel::harmonics::*;
use contrakernel::legendre::{legendre_p, LegendreIndex};
use contrakernel::quadrature::{gram, Element, QuadratureRule};
use proptest::prelude::*;

fn laplacian(idx: &BasisIndex, p: &Point3, h: f64) -> f64 {
    let f = |q: &Point3| eval_u(idx, q).unwrap();
    let c = f(p);
    (0..3)
        .map(|axis| (f(&p.offset(axis, h)) - 2.0 * c + f(&p.offset(axis, -h))) / (h * h))
        .sum()
}

#[test]
fn solid_harmonics_are_harmonic() {
    for dom in DOMAINS {
        let pts = random_points(dom, 20, 11);
        for idx in family_up_to(Family::Harmonic, dom, 6)
            .into_iter()
            .filter(|i| i.n.abs() <= 5)
        {
            for p in &pts {
                let l = laplacian(&idx, p, 1e-4);
                let scale = eval_u(&idx, p).unwrap().abs().max(1.0);
                assert!(l.abs() <= 1e-4 * scale, "{idx} at {p:?}: {l}");
            }
        }
    }
}

#[test]
fn gram_of_harmonics_is_diagonal() {
    for dom in DOMAINS {
        let rule = QuadratureRule::default_for(dom);
        let elems: Vec<Element> = family_up_to(Family::Harmonic, dom, 4)
            .into_iter()
            .map(Element::Basis)
            .collect();
        let g = gram(&elems, &rule).unwrap();
        assert!(
            g.max_offdiag_ratio() <= 1e-8,
            "{dom}: {}",
            g.max_offdiag_ratio()
        );
        for (i, e) in elems.iter().enumerate() {
            let want = e.index().norm_sqr();
            let got = g.matrix[(i, i)];
            assert!((got - want).abs() <= 1e-8 * want, "{e}: {got} vs {want}");
        }
    }
}

#[test]
fn norm_of_u21_by_quadrature() {
    let idx = BasisIndex::harmonic(2, 1, Parity::Plus).unwrap();
    let rule = QuadratureRule::default_for(Domain::Interior);
    let q = rule.integrate(|p| eval_u(&idx, p).unwrap().powi(2));
    let c = norm_u(&idx).unwrap();
    assert!((q - c).abs() <= 1e-10 * c);
}

#[test]
fn u_matches_spherical_definition() {
    let pts = random_points(Domain::Exterior, 10, 5);
    for n in [-5, -3, 2, 4] {
        for m in 0..=contrakernel::legendre::effective_degree(n) {
            for p in &pts {
                let (r, th, ph) = p.spherical();
                let leg = legendre_p(LegendreIndex::new(n, m), th.cos()).unwrap();
                let want = r.powi(n) * leg * (m as f64 * ph).sin();
                let got = solid_harmonic(n, m, Parity::Minus, p).unwrap();
                assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0));
            }
        }
    }
}

#[test]
fn non_square_integrable_degree_is_evaluable() {
    let p = Point3::new(0.0, 2.0, 0.0);
    assert!((solid_harmonic(-1, 0, Parity::Plus, &p).unwrap() - 0.5).abs() < 1e-15);
    assert!(BasisIndex::harmonic(-1, 0, Parity::Plus).is_err());
}

proptest! {
    #[test]
    fn kelvin_identity(n in 1i32..=8, m_frac in 0.0f64..1.0, minus in any::<bool>(),
                       rho in 0.05f64..5.0, t in -1.0f64..1.0, phi in 0.0f64..std::f64::consts::TAU) {
        let m = ((n + 1) as f64 * m_frac).floor() as i32;
        let parity = if minus && m > 0 { Parity::Minus } else { Parity::Plus };
        let p = Point3::from_spherical(rho, t.acos(), phi);
        let r = kelvin_pair_check(n, m, parity, &p).unwrap();
        let scale = solid_harmonic(n, m, parity, &p).unwrap().abs().max(1.0);
        prop_assert!(r.abs() <= 1e-12 * scale);
    }

    #[test]
    fn spherical_round_trip(log_rho in -6.0f64..6.0, t in -1.0f64..1.0, phi in -3.1f64..3.1) {
        let rho = 10f64.powf(log_rho);
        let p = Point3::from_spherical(rho, t.acos(), phi);
        let (r, th, ph) = p.spherical();
        let q = Point3::from_spherical(r, th, ph);
        prop_assert!(r >= 0.0);
        for (a, b) in p.coords().iter().zip(q.coords()) {
            prop_assert!((a - b).abs() <= 1e-12 * rho);
        }
    }

    #[test]
    fn minus_parity_at_order_zero_is_rejected(n in -10i32..10) {
        for family in [Family::Harmonic, Family::Monogenic, Family::Ambigenic,
                       Family::AmbigenicTilde, Family::Contragenic] {
            prop_assert!(BasisIndex::infer(family, n, 0, Parity::Minus).is_err());
        }
    }
}
