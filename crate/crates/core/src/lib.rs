//! Fractional Clifford-Fourier analysis over Cl(0,m).
//!
//! The crate evaluates the two-parameter fractional kernel K_{alpha,beta}(x,y)
//! on R^m by three independent routes (a Gegenbauer-Bessel series, closed
//! forms in even dimension, and an operator route on a Gaussian-weighted
//! basis), applies the integral transform it induces by tensor Gauss-Legendre
//! quadrature, and cross-checks the structural identities the kernel
//! satisfies: first-order differential relations, eigenfunctions with explicit
//! eigenvalues, inversion by parameter negation, and growth bounds.
//!
//! Layout:
//! - [`algebra`]: dense Clifford algebra Cl(0,m), vectors, wedge products.
//! - [`special`]: gamma, Bessel J (integer and half-integer order, plus the
//!   rescaled even extension), Gegenbauer and Laguerre polynomials.
//! - [`kernel`]: the kernel routes and their differential/recursion checks.
//! - [`poly`]: Clifford-valued polynomials, Gaussian calculus, monogenics,
//!   and the eigenfunction basis.
//! - [`quadrature`]: Gauss-Legendre rules and tensor-product integration.
//! - [`interp`]: Chebyshev tensor interpolation used by the inversion test.
//! - [`transform`]: the forward transform, radial reduction, eigenvalue
//!   formulas, and inversion round-trips.
//! - [`verify`]: a named suite of structural checks with machine-readable
//!   reports.

pub mod algebra;
pub mod error;
pub mod interp;
pub mod kernel;
pub mod poly;
pub mod quadrature;
pub mod special;
pub mod transform;
pub mod verify;

pub use algebra::{AlgebraSignature, Multivector, Vector, MAX_DIMENSION};
pub use error::{Error, Result};
pub use kernel::{
    invariants, kernel_auto, kernel_cft_reference, kernel_closed_even, kernel_closed_m2,
    kernel_fractional_fourier, kernel_series, lemma_gamma_action, recursion_check,
    GeometricInvariants, KernelParams, KernelValue, RecursionReport,
};
pub use poly::{
    monogenic_m2, monogenic_project, psi_basis, CliffordPolynomial, GaussianPolynomial, Parity,
};
