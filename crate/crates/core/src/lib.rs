//! Exact generalized inverses in rings.
//!
//! Finite rings are built from a small expression language (`Z5`,
//! `M2(Z2)`, `T2(Z3) x Z4`) and exact rational matrices serve as the
//! non-enumerable backend. For every element the crate computes the Drazin,
//! p-Drazin, Zhou and generalized Zhou inverses both by definitional search
//! and by construction, and the [`identities`] module checks the surrounding
//! theorems (existence, uniqueness, Cline's formula, Jacobson's lemma,
//! reduction modulo the radical) by exhaustive sweep.
//!
//! ```
//! use ringlab::identities::{Mode, SweepContext, Theorem};
//! use ringlab::inverses::{gzhou_constructive, verify_certificate};
//! use ringlab::{Execution, FiniteRing};
//!
//! # fn main() -> ringlab::Result<()> {
//! let r = FiniteRing::parse("M2(Z2)")?;
//! let a = r.parse_element("[[1,1],[0,0]]")?;
//! let cert = gzhou_constructive(&r, a)?;
//! assert!(verify_certificate(&r, &cert).ok);
//!
//! let ctx = SweepContext::new(&r, Execution::Parallel)?;
//! let report = Theorem::Cline.run(&ctx, Mode::Exhaustive)?;
//! assert!(report.ok());
//! # Ok(())
//! # }
//! ```

pub mod cli;
pub mod error;
pub mod exec;
pub mod identities;
pub mod inverses;
pub mod matrix;
pub mod ring;
pub mod structure;
pub mod suite;
pub mod syntax;

pub use error::{Error, Result};
pub use exec::Execution;
pub use ring::{Element, FiniteRing, RingExpr, RingOptions};
