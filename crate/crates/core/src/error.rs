use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::endo::Side;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// The groupoid law a table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `(x⁻¹)⁻¹ = x`
    InverseInvolution,
    /// `(x⁻¹, x)` and `(x, x⁻¹)` are composable.
    InverseComposable,
    /// `xy`, `yz` defined implies `(xy)z`, `x(yz)` defined and equal.
    Associativity,
    /// `x⁻¹(xy) = y`
    LeftCancellation,
    /// `(zx)x⁻¹ = z`
    RightCancellation,
    /// `xy` defined exactly when `r(y) = d(x)`.
    Composability,
    /// `r(x)x = x` and `x d(x) = x`.
    UnitLaw,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::InverseInvolution => "inverse-involution",
            Axiom::InverseComposable => "inverse-composable",
            Axiom::Associativity => "associativity",
            Axiom::LeftCancellation => "left-cancellation",
            Axiom::RightCancellation => "right-cancellation",
            Axiom::Composability => "composability-criterion",
            Axiom::UnitLaw => "unit-law",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("axiom {axiom} violated at elements {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },
    #[error("action law `{law}` violated at {witness:?}")]
    ActionViolation {
        law: &'static str,
        witness: Vec<usize>,
    },
    #[error("{what}: predicted size {predicted} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        predicted: u128,
        cap: u128,
    },
    #[error("maps are defined over different groupoids")]
    BaseMismatch,
    #[error("map is not a member of {side} (fails at element {x})")]
    Membership { side: Side, x: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not a subgroupoid (witness {witness:?})")]
    NotASubgroupoid { witness: Vec<usize> },
    #[error("precondition d∘φ = φ∘r fails at element {x}")]
    PreconditionFailed { x: usize },
    #[error("map is not a groupoid isomorphism")]
    NotAnIsomorphism,
    #[error("monoid law `{law}` violated at {witness:?}")]
    LawViolation {
        law: &'static str,
        witness: Vec<usize>,
    },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
