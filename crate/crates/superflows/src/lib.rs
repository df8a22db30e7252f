//! Superflows: vector fields pinned down by their symmetries.
//!
//! A *superflow* is a projective or polynomial flow whose (2-homogeneous,
//! respectively ℓ-homogeneous) vector field spans the **one**-dimensional space
//! of fields invariant under a finite group Γ of linear maps — the symmetry
//! alone determines the dynamics up to scale.  This crate discovers such
//! fields from a group, verifies the defining PDEs, and integrates the flows
//! both as exact Taylor series and in closed form through elliptic, Dixonian
//! and hyperelliptic-reduction special functions.
//!
//! The layers build on each other:
//!
//! * [`exactalg`] — exact rationals, sparse multivariate polynomials, rational
//!   functions and homogeneous vector fields;
//! * [`groups`] — finite matrix groups (exact or floating-point), closure from
//!   generators, invariant-dimension counting;
//! * [`reynolds`] — Reynolds averaging, invariant vector-field spaces,
//!   superflow discovery and the closed-form dimension tables;
//! * [`firstint`] — polynomial/rational first integrals of polynomial fields;
//! * [`flows`] — Taylor flows with exact coefficients, adaptive orbit
//!   integration, planar projections and curl-eigenfield probes;
//! * [`elliptic`] — Jacobi `sn cn dn`, Weierstrass ℘ on the 16/27 square
//!   lattice, Dixonian `sm cm`, and the degree-5 abelian integral pair (α, 𝐤);
//! * [`closedform`] — the explicit solution formulas for the tetrahedral,
//!   octahedral and pentagonal flows, checked against the exact series;
//! * [`spherical`] — averages over spheres, the vector-field magnitude
//!   constants and the (2,4) extremal ratios;
//! * [`hyperoct`] — hyperoctahedral fields in n variables and the reduction of
//!   their orbits to a single hyperelliptic equation Υ′² = 𝒟ₙ(Υ);
//! * [`cli`] — the `superflow` command-line front end emitting deterministic
//!   JSON/CSV reports.

pub mod cli;
pub mod closedform;
pub mod elliptic;
pub mod exactalg;
pub mod firstint;
pub mod flows;
pub mod groups;
pub mod hyperoct;
pub mod report;
pub mod reynolds;
pub mod spherical;

/// Crate-wide error type: every fallible operation says what went wrong and,
/// for parse errors, where.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Text could not be parsed; `pos` is a byte offset into the input.
    Parse { pos: usize, msg: String },
    /// Inputs violate a documented precondition.
    Domain(String),
    /// An iteration failed to converge or a closure exceeded its bound.
    Budget(String),
    /// A numerical degeneracy was detected (e.g. root collision).
    Degenerate(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Budget(m) => write!(f, "budget exceeded: {m}"),
            Error::Degenerate(m) => write!(f, "degeneracy: {m}"),
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
