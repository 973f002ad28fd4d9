//! Finite groups as Cayley tables, conjugacy classes, power maps and the
//! SL_2(F_5) fixture.

mod battery;
mod classes;
mod sl2;
mod table;

pub use battery::{battery, dihedral, permutation_group, quaternion8, symmetric3, BatteryGroup};
pub use classes::{conjugacy_classes, ConjugacyData, InversionAction};
pub use sl2::{
    format_mat, make_sl2, sl2_elements, sl2f5_named_classes, verify_sl2f5_fixture, FixtureElement,
    FixtureMismatch, FixtureReport, Mat2, Sl2Fixture, MAX_SL2_PRIME, SL2F5_CLASS_REPS,
};
pub use table::{GroupTable, EXHAUSTIVE_ASSOC_LIMIT, MAX_ORDER};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group must have at least one element")]
    EmptyGroup,
    #[error("group order {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("not a group: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("not a group: entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a group: no identity element")]
    NoIdentity,
    #[error("not a group: element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("not a group: associativity fails at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {p} exceeds the supported maximum {max}")]
    PrimeTooLarge { p: u32, max: u32 },
    #[error("fixture parse error: {0}")]
    FixtureParse(String),
    #[error("fixture has {found} elements, expected {expected}")]
    FixtureCardinality { expected: usize, found: usize },
    #[error("fixture element {0} is not a determinant-one matrix over F_p")]
    FixtureBadMatrix(String),
    #[error("fixture element {0} repeats an earlier matrix")]
    FixtureDuplicate(String),
}
