//! Guide chapters compiled as doc-tests, so every listing in the book runs
//! against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/conventions.md")]
pub mod conventions {}
#[doc = include_str!("../../../book/src/harmonics.md")]
pub mod harmonics {}
#[doc = include_str!("../../../book/src/monogenic.md")]
pub mod monogenic {}
#[doc = include_str!("../../../book/src/contragenic.md")]
pub mod contragenic {}
#[doc = include_str!("../../../book/src/quadrature.md")]
pub mod quadrature {}
#[doc = include_str!("../../../book/src/bergman.md")]
pub mod bergman {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
