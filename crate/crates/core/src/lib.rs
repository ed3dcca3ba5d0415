//! Exact computer algebra for the graded Grothendieck-Witt coefficient ring
//! `Z[eps, tau, gamma^{±1}] / (eps^2 = 1, eps*tau = -tau, tau^2 = 2*gamma*(1 - eps))`.
//!
//! Layers, bottom up:
//!
//! * [`poly`]: sparse Laurent polynomials generic over the coefficient type,
//!   truncated power series.
//! * [`symfunc`]: elementary symmetric reduction and the universal
//!   polynomials `P_n`, `Q_{i,j}`, `R_n` of lambda-ring theory.
//! * [`gw`], [`symring`]: the coefficient ring and its extension by rank-2
//!   symplectic generators `u_1, ..., u_k`.
//! * [`lambda`]: lambda series, Adams operations and axiom checks.
//! * [`borel`]: `omega(n)`, Borel classes and ternary laws.
//! * [`forms`]: Gram-matrix calculus over the rationals and Hasse-Minkowski
//!   invariants.
//! * [`report`], [`verify`]: structured verification reports and the suites.

pub mod borel;
pub mod error;
pub mod forms;
pub mod gw;
pub mod lambda;
pub mod poly;
pub mod report;
pub mod rewrite;
pub mod symfunc;
pub mod symring;
pub mod verify;

pub use error::{Error, Result};
pub use forms::{GramForm, Matrix, Symmetry};
pub use gw::GWElem;
pub use poly::{Coeff, Ctx, Monomial, Poly, RingElem, TruncSeries, VarId};
pub use report::{Entry, Param, Status, VerificationReport};
pub use symring::{SymClass, SymRing};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar.
pub type Rational = BigRational;
/// Integer-coefficient polynomial, the default substrate.
pub type ZPoly = Poly<BigInt>;
/// Rational-coefficient polynomial.
pub type QPoly = Poly<BigRational>;
/// Rational Gram form.
pub type QGram = GramForm<BigRational>;
/// Rational matrix.
pub type QMatrix = Matrix<BigRational>;

/// Version string embedded in reports and caches.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
