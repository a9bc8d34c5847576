//! Exact calculator for the rational stable stems `[S^0, S^U]^G_*` of the
//! rank one compact Lie groups `SO(2)`, `Spin(2)`, `O(2)`, `Pin(2)`, `SO(3)`
//! and `SU(2)`, where `U` is a virtual representation with `U^G = 0`.
//!
//! Answers are graded dimensions which may be countably infinite; they are
//! described as [`LineSet`]s (arithmetic progressions of classes plus finitely
//! many corrections) and grouped by block of the space of subgroups, with the
//! subgroup responsible for each line attached as a label.
//!
//! ```
//! use rank1_stems::{stems, GroupId, Irreducible, VirtualRep, ExtendedNat};
//!
//! let u = VirtualRep::irreducible(GroupId::SO3, Irreducible::W(3)).unwrap();
//! let answer = stems(&u).unwrap();
//! assert_eq!(answer.query(2), ExtendedNat::CountablyInfinite);
//! assert_eq!(answer.query(4), ExtendedNat::Finite(0));
//! ```

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod groups;
pub mod lines;
pub mod oracle;
pub mod rep;
pub mod stems;

pub use error::{Result, StemsError};
pub use groups::{GroupId, Irreducible, IsolatedTag, SubgroupDescriptor};
pub use lines::{Correction, ExtendedNat, Line, LineLabel, LineSet, INF};
pub use rep::{DimFunction, Parity, VirtualRep, WeightMultiset};
pub use stems::{stems, Block, BlockAnswer, BlockId};
