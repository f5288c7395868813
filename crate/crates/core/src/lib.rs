//! Exact mixed Hodge polynomials of symmetric products `Sym^n X`, for
//! varieties whose cohomology is an exterior algebra on odd-degree
//! generators.
//!
//! * [`polyring`]: integer polynomials in `(t, u, v)` and truncated series in `z`.
//! * [`symgroup`]: partitions, cycle types, determinants and characters of `S_n`.
//! * [`hodgecore`]: presentations, Hodge tables, duality and presets.
//! * [`symprod`]: the three `Sym^n` evaluators, class functions, quotients.
//! * [`identities`]: generating-function identity checkers.

pub mod error;
pub mod hodgecore;
pub mod identities;
pub mod polyring;
pub mod symgroup;
pub mod symprod;

pub use error::{Error, Result};
pub use hodgecore::{ExteriorPresentation, GeneratorFamily, HodgeTable, Preset, Support};
pub use polyring::{Monomial, RatScalar, Specialization, TriPoly, ZSeries};
pub use symgroup::{CycleType, Partition, PermutationWord, Sign};
pub use symprod::{ClassFunction, Method, SymResult};
