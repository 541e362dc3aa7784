//! Exact combinatorics for key polynomials and fundamental slide polynomials.
//!
//! A key polynomial `κ_a` is a sum of monomials over Kohnert tableaux of
//! content `a`, and it splits into fundamental slide polynomials indexed by the
//! weights of the quasi-Yamanouchi Kohnert tableaux of content `a`:
//!
//! ```
//! use keyslide::{classify, slide_expansion, Limits, WeakComposition};
//!
//! let a: WeakComposition = "0,0,3,2".parse().unwrap();
//! let e = slide_expansion(&a, &Limits::default()).unwrap();
//! assert_eq!(
//!     e.to_text(),
//!     "κ_(0,0,3,2) = 𝔉_(0,0,3,2) + 𝔉_(0,1,3,1) + 𝔉_(0,2,2,1) + 𝔉_(0,2,3,0) + 𝔉_(1,2,2,0)"
//! );
//! assert_eq!(classify(&a).verdict.as_str(), "MULTIPLICITY_FREE");
//! ```
//!
//! The crate is organised bottom-up:
//!
//! - [`composition`]: weak/strong compositions, partitions, dominance and refinement.
//! - [`tableau`]: Kohnert tableaux, validation and exhaustive enumeration.
//! - [`polynomial`]: exact sparse polynomials, `κ_a` and `𝔉_a` as monomial sums.
//! - [`expansion`]: the slide expansion of `κ_a`, a recursive generator for
//!   strong indices and brute-force multiplicity measurement.
//! - [`classify`]: closed-form predicates deciding when the expansion has one
//!   term, two terms, or is multiplicity free.
//! - [`oracle`]: independent checks through Schur polynomials, standard
//!   tableau descents and stable limits.
//!
//! Every enumerating entry point takes a [`Limits`] value so that callers decide
//! how much work a single call may do.

pub mod classify;
pub mod composition;
mod error;
pub mod expansion;
mod limits;
pub mod oracle;
pub mod polynomial;
pub mod tableau;

pub use classify::{classify, classify_with, ClassificationReport, Theorem, Verdict, Witness};
pub use composition::{Partition, StrongComposition, WeakComposition};
pub use error::{Error, Result};
pub use expansion::{slide_expansion, SlideExpansion};
pub use limits::Limits;
pub use polynomial::{key_polynomial, slide_polynomial, MonomialPolynomial};
pub use tableau::{enumerate_kohnert, enumerate_qkt, KohnertTableau};
