//! Orthogonal function systems on the interior and exterior of the unit
//! sphere in R³ with values in the reduced quaternions `R + R e1 + R e2`:
//! solid spherical harmonics, basic monogenics, ambigenics and
//! contragenics, with closed-form norms, a tensor-product quadrature oracle,
//! and truncated Bergman projections.
//!
//! ```
//! use contrakernel::harmonics::{BasisIndex, Parity, Point3};
//!
//! let x10 = BasisIndex::monogenic(1, 0, Parity::Plus).unwrap();
//! let v = x10.eval(&Point3::new(0.1, 0.2, 0.3)).unwrap();
//! assert!((v.a0 - 0.2).abs() < 1e-15);
//! ```

pub mod algebra;
pub mod bergman;
pub mod contragenic;
pub mod error;
pub mod exponential;
pub mod harmonics;
pub mod legendre;
pub mod monogenic;
pub mod parallel;
pub mod quadrature;
pub mod tables;

pub use algebra::{Quaternion, ReducedQuaternion, VecField2};
pub use error::{Error, Result};
pub use harmonics::{BasisIndex, Domain, Family, Parity, Point3};
