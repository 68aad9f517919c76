//! Random-matrix simulation and spectral-statistics toolkit.
//!
//! The crate generates Gaussian orthogonal, trace-restricted Wishart,
//! ultrametric, and Quantum Sun Model realizations, extracts Schmidt spectra
//! of mid-spectrum eigenstates, and compares their statistics against
//! closed-form laws (Marchenko-Pastur, Porter-Thomas, generalized hyperbolic,
//! generalized extreme value, Tracy-Widom F1, and the exact minimum-eigenvalue
//! density of trace-restricted Wishart matrices).
//!
//! Modules:
//! - [`ensembles`]: matrix/Hamiltonian constructors and seeded sampling;
//! - [`spectra`]: eigendecomposition, Schmidt extraction, extreme-eigenvalue
//!   Lanczos, spacing ratios;
//! - [`specfun`]: log-gamma, Bessel K, Gauss 2F1, adaptive quadrature;
//! - [`laws`]: the closed-form reference densities and moments;
//! - [`stats`]: histograms, moments, maximum-likelihood GEV/GHD fits,
//!   Kolmogorov-Smirnov distances.

pub mod ensembles;
pub mod error;
mod linalg;
pub mod laws;
pub mod specfun;
pub mod spectra;
pub mod stats;

pub use error::{Error, Result};
