//! Symbolic calculus of Dyer–Lashof operations over F_p.
//!
//! The crate covers operation sequences and their allowability, Cartan
//! expansion of operations on polynomials, bases and bigraded Poincaré series
//! of free E_k-algebras, and quotient-ring models of E∞-cofibers with
//! nilpotence checks. The `dl` binary exposes all of it on the command line.

pub mod algebra;
pub mod cartan;
pub mod cli;
pub mod cofiber;
pub mod error;
pub mod expr;
pub mod field;
pub mod free;
pub mod sequences;

pub use algebra::{Generator, Monomial, MonomialIdeal, Polynomial};
pub use error::{Error, Result};
pub use field::{FpScalar, Prime};
pub use sequences::{Arity, DlOp, DlSequence, Quark};
