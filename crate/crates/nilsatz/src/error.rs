//! Error type shared by all modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

/// Everything that can go wrong when constructing or combining algebraic
/// values. Operations that cannot fail simply do not return a `Result`.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Inversion of the zero scalar.
    DivisionByZero,
    /// A vector or matrix has the wrong length for the requested operation.
    DimensionMismatch { expected: usize, found: usize },
    /// Structure constants violate `c[j][k][m] = -c[k][j][m]`; indices are 0-based.
    AntisymmetryViolation { j: usize, k: usize, m: usize },
    /// The declared central basis does not span the whole center. The witness
    /// is a nonzero rational combination of the non-central basis elements
    /// that is in fact central.
    CenterTooSmall { witness: Vec<BigRational> },
    /// A generator index is out of range for the ambient algebra.
    UnknownGenerator { name: String },
    /// Two elements live over different algebras (or Weyl dimensions).
    AlgebraMismatch,
    /// Pfaffians need an even-dimensional matrix.
    OddDimension { dim: usize },
    /// The matrix handed to a Pfaffian is not antisymmetric.
    NotAntisymmetric { row: usize, col: usize },
    /// A subset had the wrong parity for the requested construction.
    ParityMismatch { len: usize },
    /// The index was required to lie inside the subset.
    IndexNotInSet { index: usize },
    /// The index was required to lie outside the subset.
    IndexInSet { index: usize },
    /// An extracted expansion coefficient failed the caller's membership
    /// predicate; this signals an unsound predicate, not a math failure.
    MembershipViolated { alpha: Vec<u32> },
    /// A candidate morphism image is not antihermitian (0-based basis index).
    NotAntihermitian { index: usize },
    /// A candidate morphism image has filtration degree above one.
    NotFiltered { index: usize },
    /// Images fail bracket compatibility on the given basis pair (0-based).
    BracketMismatch { j: usize, k: usize },
    /// The antisymmetric form is degenerate (Pfaffian zero).
    Degenerate,
    /// A character violates the Pfaffian preconditions for morphism
    /// synthesis: either the Pfaffian of its own subset vanishes, or the
    /// Pfaffian of a proper even superset does not.
    PfaffianConditionFailed { subset: Vec<usize>, vanished: bool },
    /// Post-verification of a synthesized object failed. The construction is
    /// backed by a theorem, so this is unreachable unless there is a bug.
    ConstructionBug(String),
    /// A central generator maps to a non-scalar Weyl element in a workflow
    /// that needs scalar central images.
    NonScalarCentralImage { index: usize },
    /// A bounded oracle ran out of budget without reaching a verdict.
    Inconclusive { context: String },
    /// An infinite-variety membership test was requested without the
    /// declaration that the given generators present a real ideal.
    NotRealDeclared,
    /// The character specification is malformed (missing or extra values).
    InvalidCharacter { reason: String },
    /// Expression parsing failed at the given byte offset.
    Parse { pos: usize, msg: String },
    /// The same bracket pair is defined twice with conflicting values.
    DuplicateBracket { j: usize, k: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::AntisymmetryViolation { j, k, m } => write!(
                f,
                "structure constants not antisymmetric at (j={}, k={}, m={})",
                j + 1,
                k + 1,
                m + 1
            ),
            Error::CenterTooSmall { witness } => {
                write!(f, "central basis incomplete; central combination of B's: [")?;
                for (i, w) in witness.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, "]")
            }
            Error::UnknownGenerator { name } => write!(f, "unknown generator {name}"),
            Error::AlgebraMismatch => write!(f, "elements belong to different algebras"),
            Error::OddDimension { dim } => write!(f, "odd matrix dimension {dim}"),
            Error::NotAntisymmetric { row, col } => {
                write!(f, "matrix not antisymmetric at ({row}, {col})")
            }
            Error::ParityMismatch { len } => write!(f, "subset has wrong parity (size {len})"),
            Error::IndexNotInSet { index } => {
                write!(f, "index {} not in the subset", index + 1)
            }
            Error::IndexInSet { index } => write!(f, "index {} lies in the subset", index + 1),
            Error::MembershipViolated { alpha } => {
                write!(f, "extracted coefficient at {alpha:?} failed the membership predicate")
            }
            Error::NotAntihermitian { index } => {
                write!(f, "image of basis element {} is not antihermitian", index + 1)
            }
            Error::NotFiltered { index } => {
                write!(f, "image of basis element {} exceeds filtration degree 1", index + 1)
            }
            Error::BracketMismatch { j, k } => write!(
                f,
                "bracket compatibility fails on basis pair ({}, {})",
                j + 1,
                k + 1
            ),
            Error::Degenerate => write!(f, "antisymmetric form is degenerate"),
            Error::PfaffianConditionFailed { subset, vanished } => {
                let subset1: Vec<usize> = subset.iter().map(|i| i + 1).collect();
                if *vanished {
                    write!(f, "character vanishes on the Pfaffian of its own subset {subset1:?}")
                } else {
                    write!(
                        f,
                        "character does not vanish on the Pfaffian of the proper superset {subset1:?}"
                    )
                }
            }
            Error::ConstructionBug(msg) => write!(f, "internal construction bug: {msg}"),
            Error::NonScalarCentralImage { index } => {
                write!(f, "image of central generator {} is not scalar", index + 1)
            }
            Error::Inconclusive { context } => write!(f, "inconclusive: {context}"),
            Error::NotRealDeclared => {
                write!(f, "variety generators not declared to present a real ideal")
            }
            Error::InvalidCharacter { reason } => write!(f, "invalid character: {reason}"),
            Error::Parse { pos, msg } => write!(f, "parse error at offset {pos}: {msg}"),
            Error::DuplicateBracket { j, k } => write!(
                f,
                "conflicting bracket entries for pair ({}, {})",
                j + 1,
                k + 1
            ),
        }
    }
}

impl core::error::Error for Error {}
