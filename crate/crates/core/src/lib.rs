//! Numerical kernels for Stieltjes-type continued fractions, orthogonal
//! polynomials, moment problems and Gaussian quadrature.
//!
//! The crate is `no_std` and only needs `alloc`. Elementary functions come
//! from [`libm`] through [`num_traits::Float`].
//!
//! Modules:
//!
//! * [`contfrac`]: S- and J-fractions, contraction, convergents.
//! * [`orthopoly`]: three-term recurrences, classical families, zeros,
//!   moments to recurrence coefficients.
//! * [`moments`]: Hankel solvability, Hausdorff and Carleman diagnostics,
//!   Stieltjes transforms, Padé matching.
//! * [`quadrature`]: Gauss and Gauss–Kronrod rules, Christoffel-number
//!   inequalities.
//! * [`electro`]: electrostatic equilibria of charges on the line.
//! * [`legendre`]: Legendre-specific bounds and asymptotics.
//! * [`elliptic`]: Jacobian elliptic functions and their Laplace transforms.
//!
//! Hermite polynomials always use the physicists' weight `exp(-x^2)`.
#![no_std]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod contfrac;
pub mod electro;
pub mod elliptic;
mod error;
pub mod integrate;
pub mod legendre;
pub mod linalg;
pub mod math;
pub mod moments;
pub mod orthopoly;
pub mod quadrature;

pub use self::error::{Error, Result};
pub use num_complex::Complex64;
