//! Exact computer algebra for singly generated planar algebras.
//!
//! The crate provides four layers:
//!
//! * [`scalar`] — exact coefficient arithmetic: Gaussian rationals, sparse
//!   multivariate polynomials over them, reduced multivariate rational
//!   functions, and quadratic root adjunctions (a formal symbol `r` with
//!   `r^2` rewritten to a fixed polynomial).
//! * [`diagram`] — the diagrammatic realisations of the Temperley–Lieb and
//!   (two-colour) Fuss–Catalan algebras: planar pair partitions, stacking
//!   products with loop weights, rotations, traces, Gram matrices and
//!   Jones–Wenzl idempotents.
//! * [`presented`] — a generator/relation engine for the whole family
//!   (Temperley–Lieb, Fuss–Catalan, BMW, Liu and the ambient two-generator
//!   algebra): noncommutative rewriting with critical-pair completion,
//!   basis enumeration certified against closed-form dimensions, structure
//!   constants, partial traces, involutions and quotient-map verification.
//! * [`tangle`], [`baxter`], [`integrability`] — planar networks and their
//!   evaluation, the Baxterised R- and Y-operator families with their local
//!   identities (inversion, Yang–Baxter, boundary Yang–Baxter, crossing
//!   symmetry), and the double-row transfer operators together with
//!   commutation, self-adjointness and polynomial-generator checks.
//!
//! All identity checks are exact: residuals are rational functions that are
//! required to cancel identically, not numerically.

pub mod scalar;
pub mod diagram;
pub mod presented;
pub mod tangle;
pub mod baxter;
pub mod integrability;
pub mod report;
