//! Finite commutative chain rings and additive cyclic codes over them.
//!
//! The crate works in `R = Z_{p^n}[ω][x]/<g(x), p^{n-1}x^t>` with `g` Eisenstein
//! and `ω` a Teichmüller element of order `p^r - 1`, and over `S = Z_{p^n}[x]/<g, p^{n-1}x^t>`.
//! It builds the two families of cyclic codes over `R`:
//!
//! * [`galois`]: `S`-linear codes, dualised with the trace form `Tr: R → S`;
//! * [`eisenstein`]: `Z_{p^n}`-linear codes over rank-one rings, dualised with characters.
//!
//! Every closed-form construction can be checked against [`oracle`], which works
//! from definitions by exhaustive enumeration.
//!
//! ```
//! use chain_codes::ring::{make_ring, RingParams};
//!
//! let ring = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap();
//! let x = ring.x();
//! assert_eq!(ring.mul(&x, &x), ring.from_int(2));
//! assert_eq!(ring.size(), Some(8));
//! ```

pub mod arith;
pub mod code;
pub mod commands;
pub mod eisenstein;
pub mod error;
pub mod galois;
pub mod idempotent;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
