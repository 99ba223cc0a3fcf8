use core::fmt;

use crate::golden::ParseGoldenError;
use crate::projections::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A pentagon vertex index outside `1..=5`.
    VertexIndex(usize),
    /// Coset index whose window has empty interior (only `1..=4` carry windows).
    EmptyCoset(i64),
    /// Vector is not an element of the internal space `E'`.
    NotInternal,
    /// Window with zero scale.
    DegenerateWindow,
    /// A candidate projects onto a window boundary; the offset is not generic.
    BoundaryHit(LatticePoint),
    /// `(k, m)` fails the congruence or the conjugate bound.
    Inadmissible {
        k: i64,
        m: i64,
    },
    /// Candidate center is not in the sum-zero sublattice.
    CenterNotInSublattice(LatticePoint),
    /// The contraction certificate fails for the requested center.
    NotCertified(LatticePoint),
    /// The strict contraction certificate fails, so no positive slack exists.
    NonPositiveSlack,
    Parse(ParseGoldenError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexIndex(j) => write!(f, "pentagon vertex index {j} outside 1..=5"),
            Error::EmptyCoset(n) => {
                write!(f, "coset {n} has no window with interior (expected 1..=4)")
            }
            Error::NotInternal => f.write_str("vector does not lie in the internal space"),
            Error::DegenerateWindow => f.write_str("window has zero scale"),
            Error::BoundaryHit(x) => write!(
                f,
                "lattice point {x} projects onto a window boundary; perturb the offset"
            ),
            Error::Inadmissible { k, m } => {
                write!(f, "{k}{m:+}t is not an admissible scaling factor")
            }
            Error::CenterNotInSublattice(y) => {
                write!(f, "center {y} does not have coordinate sum 0")
            }
            Error::NotCertified(y) => write!(f, "center {y} fails the contraction certificate"),
            Error::NonPositiveSlack => {
                f.write_str("contraction is not strict; slack is not positive")
            }
            Error::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseGoldenError> for Error {
    fn from(e: ParseGoldenError) -> Self {
        Error::Parse(e)
    }
}
