//! Multivariate polynomials over ℚ with term orders, binomial and generic
//! Gröbner bases, and Hilbert series of monomial ideals.

pub mod binomial;
pub mod buchberger;
pub mod engine;
pub mod hilbert;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;

pub use binomial::Binomial;
pub use engine::{minimal_generator_degrees, BinomialGb, Caps};
pub use hilbert::{hilbert_series, series_invariants, HilbertSeries, MonomialIdeal};
pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use polynomial::Polynomial;
