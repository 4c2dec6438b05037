//! Exact symbolic computation in the dense *-subalgebras of the Cuntz
//! algebras `O_N` and `O_∞`, the inverse system `f_{n,m}: O_{m+1} → O_{n+1}`
//! over the divisibility order, its truncated inverse limits, and the
//! K₀ bookkeeping showing that K₀ does not commute with that limit.
//!
//! The algebraic core is generic over the coefficient [`Scalar`]; the
//! aliases at the crate root fix the exact Gaussian-rational field used by
//! the verification suites and the CLI.

pub mod code;
pub mod decompose;
pub mod element;
pub mod error;
pub mod families;
pub mod gauge;
pub mod graph;
pub mod hom;
pub mod inverse;
pub mod k0;
pub mod oracle;
pub mod padic;
pub mod parse;
pub mod partition;
pub mod poset;
pub mod profinite;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod semigroup;
pub mod state;
pub mod uhf;
pub mod verify;
pub mod word;

pub use element::Element;
pub use error::{Error, Result};
pub use hom::GenHom;
pub use oracle::equals;
pub use scalar::{Coefficient, Scalar};
pub use word::{AlgebraTag, Monomial, Word};

use num_complex::Complex;
use num_rational::Ratio;

/// Elements with exact Gaussian-rational coefficients.
pub type ExactElement = Element<Coefficient>;
/// Homomorphisms acting on [`ExactElement`]s.
pub type ExactHom = GenHom<Coefficient>;
/// Coherent families of exact elements.
pub type ExactFamily = inverse::CoherentFamily<Coefficient>;
/// Small-integer rationals; faster, but may overflow on long computations.
pub type SmallElement = Element<Complex<Ratio<i64>>>;
/// Double-precision complex coefficients, compared exactly.
pub type Element64 = Element<Complex<f64>>;
/// Real double-precision coefficients.
pub type RealElement64 = Element<f64>;
