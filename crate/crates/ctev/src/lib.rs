//! Transmission eigenvalues for penetrable scatterers with a conductive
//! boundary, on the unit disk and unit sphere.
//!
//! The library computes, end to end:
//!
//! * real and complex interior transmission eigenvalues of the conductive
//!   eigenvalue problem, as roots of explicit modal determinants
//!   ([`dispersion`]), located exhaustively by the argument principle
//!   ([`rootfind`]);
//! * the radially symmetric eigenfunction pairs and their convergence rates
//!   as the conductivity tends to zero ([`eigenfunctions`]);
//! * the modal (Mie-series) forward scattering solution: far-field operator
//!   eigenvalues, far-field patterns, synthetic near-field data sets, and
//!   the sampling-indicator norm that blows up at eigenvalues ([`forward`]);
//! * recovery of the boundary conductivity from near-field data through
//!   layer potentials and the interior Dirichlet-to-Neumann map ([`recon`]);
//! * eigenvalue detection from far-field data by the inside-outside duality
//!   of far-field operator phases ([`iod`]).
//!
//! The `ctev` binary drives the checked-in experiment configurations under
//! `configs/` and writes CSV/JSON artifacts; see the book under `book/` for
//! a guided tour.

mod dd;

pub mod bessel;
pub mod error;

pub use error::{Error, Result};
