#![allow(dead_code)]

use contrakernel::harmonics::{basis_of_degree, BasisIndex, Domain, Family, Point3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform direction, radius in `[lo, hi]`.
pub fn point_in_shell(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Point3 {
    let t: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let rho: f64 = rng.gen_range(lo..hi);
    Point3::from_spherical(rho, t.acos(), phi)
}

pub fn random_points(domain: Domain, count: usize, seed: u64) -> Vec<Point3> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| match domain {
            Domain::Interior => point_in_shell(&mut r, 0.05, 0.95),
            Domain::Exterior => point_in_shell(&mut r, 1.1, 3.0),
        })
        .collect()
}

pub fn degrees(domain: Domain, max_abs: i32) -> Vec<i32> {
    domain.degrees_up_to(max_abs)
}

pub fn family_up_to(family: Family, domain: Domain, max_abs: i32) -> Vec<BasisIndex> {
    degrees(domain, max_abs)
        .into_iter()
        .filter(|&n| !(family == Family::Contragenic && n == 0))
        .flat_map(|n| basis_of_degree(family, domain, n).unwrap())
        .collect()
}

pub const DOMAINS: [Domain; 2] = [Domain::Interior, Domain::Exterior];
