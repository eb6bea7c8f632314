//! Exact bookkeeping for the spectral combinatorics of the Rankin-Selberg
//! period on GL(n) x GL(n+1).
//!
//! Everything here is finite and exact: compositions and block Weyl
//! elements, formal Speh blocks over a registry of cuspidal tokens,
//! Rankin-Selberg parabolic subgroups, relevant and increasing inducing
//! data, singularity divisors, scalar-factor products of completed
//! L-function tokens, and the two-stage residue-graph pipeline that
//! transports weighted index sets. The only floating point lives in
//! [`zetanum`], a small completed-zeta evaluator used to check the
//! GL(1) x GL(2) example numerically.

pub mod exactlin;
pub mod spectra;
pub mod rsparab;
pub mod relevant;
pub mod divisors;
pub mod scalarfactor;
pub mod resgraph;
pub mod zetanum;

pub use exactlin::rat::Rat;
