//! Exact dimensions of the invariant spaces
//! `(Λ³W)^Γ` and `(Sym³W)^Γ` for `Γ = (π×π)⋊Z₂`, where `π` is a finite group
//! and `W` is either the group algebra `C[π]` or its augmentation kernel.
//!
//! Three independent routes are provided:
//!
//! * [`perm`]: averaging permutation characters of `Γ` acting on the basis
//!   of `C[π]`, with `τ` acting by basis inversion;
//! * [`chartab`]: character-table arithmetic in `Q(√d)`, supporting both the
//!   flip and inversion conventions for `τ`;
//! * [`oracle`]: orbit counting on monomials and exact Reynolds projector
//!   rank.
//!
//! [`lens`] has the closed forms for cyclic groups.
//!
//! ```
//! use theta_dims::{perm, GroupTable, ModuleChoice, Parity, SymmetryChoice};
//!
//! let z6 = GroupTable::cyclic(6).unwrap();
//! let d = perm::dim_invariants_perm(&z6, ModuleChoice::GroupAlgebra, Parity::Odd, SymmetryChoice::Full)
//!     .unwrap();
//! assert_eq!(d, 7);
//! ```

pub mod chartab;
pub mod group;
pub mod lens;
pub mod oracle;
pub mod perm;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use group::{conjugacy_classes, make_sl2, ConjugacyData, GroupError, GroupTable};

/// `Even` selects the exterior cube, `Odd` the symmetric cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    /// Sign of the `χ(σ²)χ(σ)` term in the cube character.
    pub(crate) fn middle_sign(self) -> i64 {
        match self {
            Parity::Even => -1,
            Parity::Odd => 1,
        }
    }
}

/// The coefficient module `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleChoice {
    /// `W = C[π]`.
    GroupAlgebra,
    /// `W = Ker ε`, the complement of the trivial summand.
    AugKernel,
}

impl ModuleChoice {
    pub const BOTH: [ModuleChoice; 2] = [ModuleChoice::GroupAlgebra, ModuleChoice::AugKernel];
}

/// Which symmetry group the average runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryChoice {
    /// `π×π` only.
    PiPi,
    /// `(π×π)⋊Z₂`.
    Full,
}

/// How `τ` acts on `C[π]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// Swap of tensor factors on each summand `A ⊠ A`.
    Flip,
    /// Basis inversion `x ↦ x⁻¹`.
    Inversion,
}

macro_rules! kebab_enum {
    ($t:ty { $($v:ident => $s:literal),* $(,)? }) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(<$t>::$v => $s),* })
            }
        }
        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($s => Ok(<$t>::$v),)*
                    _ => Err(format!("unknown value `{s}`, expected one of: {}", [$($s),*].join(", "))),
                }
            }
        }
    };
}

kebab_enum!(Parity { Even => "even", Odd => "odd" });
kebab_enum!(ModuleChoice { GroupAlgebra => "group-algebra", AugKernel => "aug-kernel" });
kebab_enum!(SymmetryChoice { PiPi => "pi-pi", Full => "full" });
kebab_enum!(Convention { Flip => "flip", Inversion => "inversion" });

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/permutation-characters.md")]
    mod permutation_characters {}
    #[doc = include_str!("../../../book/src/character-tables.md")]
    mod character_tables {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/lens-spaces.md")]
    mod lens_spaces {}
}
