use thiserror::Error;

use crate::groups::{GroupId, Irreducible};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StemsError {
    #[error("{irr} is not an irreducible of {group}")]
    NotInCatalog { group: GroupId, irr: Irreducible },

    #[error("the trivial representation cannot appear in U (integer suspensions are a degree shift)")]
    TrivialRequested,

    #[error("no restriction rule from {from} to {to}")]
    NoRestrictionRule { from: GroupId, to: GroupId },

    #[error("{group} has no {what}")]
    Unsupported { group: GroupId, what: &'static str },

    #[error("representations over different groups ({0} and {1})")]
    GroupMismatch(GroupId, GroupId),

    #[error("U has a nonzero {group}-fixed part")]
    FixedPartNonzero { group: GroupId },

    #[error("truncation unsound: cutoff {cutoff} must exceed every torus weight (max {max_weight})")]
    TruncationUnsound { cutoff: u64, max_weight: u64 },

    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T, E = StemsError> = std::result::Result<T, E>;
