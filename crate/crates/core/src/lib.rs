//! Exact primitive idempotents of `C[D_2n]` and `C[Q_4m]`.
//!
//! Every scalar lives in a cyclotomic field `Q(ζ_N)` with rational
//! coefficients, so all identities are checked with zero tolerance.

pub mod chartab;
pub mod error;
pub mod exactnum;
pub mod group_algebra;
pub mod groups;
pub mod linalg;
pub mod reps;
pub mod trig;
pub mod idempotents;
pub mod iso_q8_d8;

pub use error::{Error, Result};
pub use exactnum::{CycNum, Rational};
pub use group_algebra::AlgElem;
pub use groups::{GroupElem, GroupKind};
