//! The monogenic exponential
//!
//! ```text
//! ℰ(x) = e^{x0} ( cos(x1/√2) cos(x2/√2)
//!        + (sin(x1/√2) cos(x2/√2) e1 + cos(x1/√2) sin(x2/√2) e2) / √2 )
//! ```
//!
//! and its reflection `ℰ*(x0, x1, x2) = ℰ(-x0, x1, x2)`, which is
//! annihilated by `∂` rather than `∂̄`; its conjugate is monogenic, so
//! `Vec ℰ*` is still the vector part of a monogenic function.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::algebra::{ReducedQuaternion, VecField2};
use crate::harmonics::Point3;

/// Which exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    E,
    EStar,
}

/// `ℰ(p)`.
pub fn exp_monogenic(p: &Point3) -> ReducedQuaternion {
    let scale = p.x0.exp();
    let (s1, c1) = (p.x1 * FRAC_1_SQRT_2).sin_cos();
    let (s2, c2) = (p.x2 * FRAC_1_SQRT_2).sin_cos();
    ReducedQuaternion::new(
        scale * c1 * c2,
        scale * FRAC_1_SQRT_2 * s1 * c2,
        scale * FRAC_1_SQRT_2 * c1 * s2,
    )
}

/// `ℰ*(p) = ℰ(-x0, x1, x2)`.
pub fn exp_star(p: &Point3) -> ReducedQuaternion {
    exp_monogenic(&Point3::new(-p.x0, p.x1, p.x2))
}

impl Variant {
    pub fn eval(self, p: &Point3) -> ReducedQuaternion {
        match self {
            Variant::E => exp_monogenic(p),
            Variant::EStar => exp_star(p),
        }
    }

    pub fn eval_vec(self, p: &Point3) -> VecField2 {
        self.eval(p).vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::{d_fd, dbar_fd, FD_STEP};

    #[test]
    fn special_values() {
        assert_eq!(exp_monogenic(&Point3::default()), ReducedQuaternion::ONE);
        let e = exp_monogenic(&Point3::new(1.0, 0.0, 0.0));
        assert!((e.a0 - std::f64::consts::E).abs() < 1e-15);
        assert_eq!((e.a1, e.a2), (0.0, 0.0));
        let q = Point3::new(0.4, -0.2, 0.9);
        assert_eq!(exp_star(&q), exp_monogenic(&Point3::new(-0.4, -0.2, 0.9)));
    }

    #[test]
    fn exponential_is_monogenic() {
        let p = Point3::new(0.2, 0.3, -0.1);
        assert!(dbar_fd(exp_monogenic, &p, FD_STEP).norm() <= 1e-7);
    }

    #[test]
    fn reflection_is_antimonogenic() {
        let q = Point3::new(1.3, -0.3, 0.8);
        assert!(d_fd(exp_star, &q, FD_STEP).norm() <= 1e-7);
        assert!(dbar_fd(|p| exp_star(p).conj(), &q, FD_STEP).norm() <= 1e-7);
        assert!(dbar_fd(exp_star, &q, FD_STEP).norm() > 0.1);
    }
}
