//! Exact arithmetic toolkit for valuated flag matroids in the min-plus
//! convention.
//!
//! The crate is organised bottom-up:
//!
//! * [`trop`]: the tropical semiring over exact rationals and projective
//!   vectors of tropical numbers.
//! * [`matroid`]: valuated matroids as finite maps on `d`-subsets, the
//!   Plücker relation checker and the standard constructions (dual, minors,
//!   translation, initial matroid).
//! * [`flag`]: chains of valuated matroids related by incidence relations,
//!   Plücker pair enumeration, lambda vectors and the necessary positivity
//!   conditions.
//! * [`hollow`]: the rank `(1, n-1)` case, where positivity is completely
//!   understood: classification, symbol sequences, induced subdivisions and
//!   realization matrices over Puiseux series.
//! * [`bruhat`]: permutations, Bruhat order and (twisted) Bruhat interval
//!   polytopes with exact vertex extraction.
//! * [`gammoid`]: weighted digraphs, minimum-weight linkings via min-cost
//!   flow, and the graph realization of totally nonnegative hollow flags.
//! * [`puiseux`]: sparse Puiseux polynomials and exact maximal minors, used
//!   as the certificate oracle for realization matrices.
//!
//! All computations are exact; floating point is never used. Heavy scans
//! (Plücker pair enumeration, subset evaluation, symmetric group sweeps) run
//! data-parallel via rayon when the default `parallel` feature is on, with a
//! deterministic sequential fallback otherwise; results are byte-identical
//! in both modes.

pub mod bruhat;
pub mod flag;
pub mod gammoid;
pub mod hollow;
pub mod lp;
pub mod matroid;
pub mod puiseux;
pub mod trop;
pub(crate) mod util;

pub use flag::FlagValuatedMatroid;
pub use matroid::ValuatedMatroid;
pub use trop::{Rat, TropValue};

/// Globally disable the rayon execution paths at runtime (used by the
/// benchmark suite to compare both modes in one build). No effect when the
/// `parallel` feature is off.
pub fn set_parallel_enabled(enabled: bool) {
    util::set_parallel_enabled(enabled)
}
