//! Reduced quaternions `a0 + a1 e1 + a2 e2` and the two-component vector
//! space spanned by `e1`, `e2`.
//!
//! The reduced quaternions are not closed under multiplication, so products
//! are formed in the full quaternion algebra ([`Quaternion`]) where the `e3`
//! component is visible.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A full quaternion `w + x e1 + y e2 + z e3` with `e1 e2 = e3`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Drops the `e3` component.
    pub fn reduced(&self) -> ReducedQuaternion {
        ReducedQuaternion::new(self.w, self.x, self.y)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, q: Quaternion) -> Quaternion {
        let p = self;
        Quaternion {
            w: p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            x: p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            y: p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            z: p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, q: Quaternion) -> Quaternion {
        Quaternion::new(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

/// Product of two embedded reduced quaternions, keeping the `e3` part.
pub fn quat_mul(p: ReducedQuaternion, q: ReducedQuaternion) -> Quaternion {
    p.to_quaternion() * q.to_quaternion()
}

/// Element of `R + R e1 + R e2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ReducedQuaternion {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
}

impl ReducedQuaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0);
    pub const E1: Self = Self::new(0.0, 1.0, 0.0);
    pub const E2: Self = Self::new(0.0, 0.0, 1.0);

    pub const fn new(a0: f64, a1: f64, a2: f64) -> Self {
        Self { a0, a1, a2 }
    }

    pub const fn scalar(a0: f64) -> Self {
        Self::new(a0, 0.0, 0.0)
    }

    pub fn sc(&self) -> f64 {
        self.a0
    }

    pub fn vec(&self) -> VecField2 {
        VecField2::new(self.a1, self.a2)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a0, -self.a1, -self.a2)
    }

    /// Euclidean inner product of the three components; the pointwise
    /// integrand of the L² inner product.
    pub fn dot(&self, other: &Self) -> f64 {
        self.a0 * other.a0 + self.a1 * other.a1 + self.a2 * other.a2
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.a0.abs().max(self.a1.abs()).max(self.a2.abs())
    }

    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(self.a0, self.a1, self.a2, 0.0)
    }

    pub fn components(&self) -> [f64; 3] {
        [self.a0, self.a1, self.a2]
    }
}

impl From<VecField2> for ReducedQuaternion {
    fn from(v: VecField2) -> Self {
        Self::new(0.0, v.v1, v.v2)
    }
}

impl Add for ReducedQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2)
    }
}

impl AddAssign for ReducedQuaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for ReducedQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a0 - o.a0, self.a1 - o.a1, self.a2 - o.a2)
    }
}

impl Neg for ReducedQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a0, -self.a1, -self.a2)
    }
}

impl Mul<f64> for ReducedQuaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.a0 * s, self.a1 * s, self.a2 * s)
    }
}

/// Element of `R e1 + R e2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VecField2 {
    pub v1: f64,
    pub v2: f64,
}

impl VecField2 {
    pub const ZERO: Self = Self::new(0.0, 0.0);

    pub const fn new(v1: f64, v2: f64) -> Self {
        Self { v1, v2 }
    }

    /// The involution `f* = f2 e1 + f1 e2 = -e1 f e2`.
    pub fn star(&self) -> Self {
        Self::new(self.v2, self.v1)
    }

    /// Left multiplication by `e3 = e1 e2`, i.e. the quarter turn
    /// `f1 e1 + f2 e2 -> -f2 e1 + f1 e2`.
    ///
    /// This is the map that carries vector parts of basic monogenics onto
    /// basic contragenics of the dual degree (see [`crate::contragenic`]).
    pub fn quarter_turn(&self) -> Self {
        Self::new(-self.v2, self.v1)
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.v1 * o.v1 + self.v2 * o.v2
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn component(&self, j: usize) -> f64 {
        match j {
            0 => self.v1,
            1 => self.v2,
            _ => panic!("VecField2 has components 0 and 1, got {j}"),
        }
    }
}

impl Add for VecField2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.v1 + o.v1, self.v2 + o.v2)
    }
}

impl AddAssign for VecField2 {
    fn add_assign(&mut self, o: Self) {
        self.v1 += o.v1;
        self.v2 += o.v2;
    }
}

impl Sub for VecField2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.v1 - o.v1, self.v2 - o.v2)
    }
}

impl Neg for VecField2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.v1, -self.v2)
    }
}

impl Mul<f64> for VecField2 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.v1 * s, self.v2 * s)
    }
}
