//! # anosov-core
//!
//! Certified computations for verifying the Anosov property of finitely
//! generated matrix subgroups of SL(d,ℝ).
//!
//! The toolkit is organized around three tasks:
//!
//! 1. **Geometry** ([`symspace`]): the symmetric space 𝒳 of SL(d,ℝ), realized
//!    as determinant-1 symmetric positive-definite matrices, with its
//!    vector-valued distance, regularity margins, ζ-angles and midpoints.
//! 2. **Inequality systems** ([`estimates`], [`l2g`]): an explicit bank of
//!    geometric comparison bounds, condition checkers for the
//!    straight-and-spaced and midpoint-sequence criteria, and a deterministic
//!    solver that produces a finite local-to-global verification scale L
//!    together with explicit global Morse/quasigeodesic constants.
//! 3. **Perturbation neighborhoods** ([`groups`], [`perturb`]): concrete free
//!    and genus-2 surface group models inside SL(3,ℝ), their quasi-isometry
//!    constants, and log-domain propagation of generator perturbations through
//!    long words, yielding certified radii such as 10^(−15,307) within which
//!    every perturbed representation remains Anosov.
//!
//! All quantities that can underflow double precision (radii like 10^(−15,307),
//! factors like A^(2k−1) with k ≈ 10⁶) are carried as [`logscalar::LogScalar`]
//! values: a sign plus a base-10 exponent stored in an `f64`.
//!
//! Every operation is pure and deterministic: identical inputs produce
//! bit-identical outputs, so reports are reproducible byte for byte.

pub mod estimates;
pub mod groups;
pub mod jsonfmt;
pub mod l2g;
pub mod logscalar;
pub mod matio;
pub mod perturb;
pub mod policy;
pub mod symspace;

pub use logscalar::LogScalar;
pub use policy::NumericPolicy;
