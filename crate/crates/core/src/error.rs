use crate::classify::MccVotes;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The generators have a common divisor, so the complement is infinite.
    #[error("not a numerical semigroup: generators have gcd {gcd}")]
    NotNumerical { gcd: u64 },

    /// The operation is only defined for singular semigroups (H != N).
    #[error("semigroup is all of N; operation requires a singular semigroup")]
    RegularSemigroup,

    /// The given value is not a usable nonzero element of the semigroup.
    #[error("{value} is not a nonzero element of the semigroup")]
    NotAMember { value: u64 },

    /// Two ideals in a binary operation live over different semigroups.
    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,

    /// Constructing the semigroup would need a Frobenius number above the cap.
    #[error("frobenius number exceeds the configured cap {cap}")]
    FrobeniusCapExceeded { cap: u64 },

    /// Relative-ideal enumeration is exponential in the Frobenius number.
    #[error("ideal enumeration requires frobenius <= {cap}, got {frobenius}")]
    EnumerationCapExceeded { frobenius: i64, cap: i64 },

    /// The power chain did not stabilize within the cap. Stabilization is
    /// guaranteed for the ideals this crate produces, so hitting this is a bug.
    #[error("power chain failed to stabilize within {cap} steps")]
    ReductionCapExceeded { cap: u64 },

    /// A claimed gap set whose complement is not closed under addition.
    #[error("not a gap set: {a} and {b} are members but {a} + {b} is a gap")]
    GapSetNotClosed { a: u64, b: u64 },

    /// The four minimal-canonical-conductor deciders disagreed. They are
    /// provably equivalent; a split vote is surfaced, never reconciled.
    #[error("mcc deciders split on <{}>: {votes}", fmt_generators(.generators))]
    TheoremViolation { generators: Vec<u64>, votes: MccVotes },
}

pub type Result<T> = std::result::Result<T, Error>;

fn fmt_generators(gens: &[u64]) -> String {
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
