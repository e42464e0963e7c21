//! Exact computations in the (equivariant) cohomology of type A Springer fibers.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over ℚ, rational functions,
//!   divided differences.
//! * [`permutation`]: permutations in one-line notation.
//! * [`tableaux`]: compositions and shifted row-strict composition tableaux,
//!   Springer inversions, the total order, `η`, coset representatives.
//! * [`springer`]: Springer monomials, equivariant Springer monomials `P_Υ`,
//!   localization and the per-shape [`SpringerFiber`] context.
//! * [`expand`]: expansions in the `P_Υ` basis (back-substitution and the
//!   determinant formula), `P_δ`, projection to ordinary cohomology.
//! * [`schubert`]: Lehmer codes, (double) Schubert polynomials, `W(α)`,
//!   transition matrices, positivity scans, Monk's rule, linear relations.
//! * [`verify`]: the property suites run by `springer verify`.

pub mod error;
pub mod expand;
pub mod permutation;
pub mod poly;
pub mod schubert;
pub mod springer;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use expand::{EquivariantExpansion, OrdinaryExpansion};
pub use permutation::Permutation;
pub use poly::{Ambient, Monomial, Polynomial, RationalFunction, Var};
pub use springer::{springer_monomials, SpringerFiber};
pub use tableaux::{Composition, RowStrictTableau};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
