//! Brute-force oracles: orbit counting on monomials and Reynolds projector
//! rank.

mod matrix;
mod monomial;
mod orbit;
mod reynolds;

pub use matrix::{rank_of_integer_rows, IntMatrix, RationalMatrix};
pub use monomial::{SymMonomial, WedgeMonomial};
pub use orbit::{count_orbits, dim_invariants_orbit, symmetry_generators, OrbitCount, SignedUnionFind};
pub use reynolds::{
    build_module_actions, dim_invariants_reynolds, dim_invariants_reynolds_with, reynolds_projector,
    IdempotenceCheck, ModuleActions, ReynoldsOptions, ReynoldsReport, SparseAction, DEFAULT_MAX_ORDER,
    DIRECT_IDEMPOTENCE_LIMIT,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the given elements do not generate the group")]
    GeneratorsDontGenerate,
    #[error("group order {order} exceeds the Reynolds size guard {max}")]
    TooLarge { order: usize, max: usize },
    #[error("internal error: Reynolds projector is not idempotent")]
    ProjectorNotIdempotent,
    #[error("internal error: projector rank {rank} differs from its trace {trace}")]
    RankTraceMismatch { rank: usize, trace: String },
}
