//! Exact distributions of inversions and descents over integer compositions.
//!
//! The generating functions for compositions counted by size and by
//! inversions, descents, major and comajor index are reduced to
//! distributions over permutations through MacMahon's bijection
//! `σ ↦ (π, λ)`. This crate evaluates those closed forms with exact
//! big-integer polynomial arithmetic and checks each one against brute-force
//! enumeration.
//!
//! Modules, bottom up:
//!
//! * [`poly`]: sparse polynomials in `p, q, t, u, v` and truncated series
//! * [`qfun`]: q-integers, q-factorials, Gaussian binomials
//! * [`partition`]: partitions, hook lengths, `f^λ`, `f^λ(q)`, `g^λ(q)`
//! * [`perm`]: permutation statistics and the Foata bijection
//! * [`comp`]: compositions and the MacMahon bijection
//! * [`dist`]: the closed forms and their identity checks
//! * [`verify`]: verification suites used by the CLI
//! * [`oeis`]: b-file parsing and sequence cross-checks
//!
//! With the default `parallel` feature the partition-indexed sums and the
//! brute-force enumerations run on rayon; [`Exec::Sequential`] forces a
//! single thread. Results are identical either way.

pub mod comp;
pub mod dist;
pub mod error;
pub mod exec;
pub mod oeis;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod qfun;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use poly::{Monomial, Poly, Series, Var};
