//! Catalogs of the six rank one groups, their subgroups and their real
//! irreducible representations.
//!
//! Irreducibles of `SU(2)` and `SO(3)` are named by dimension:
//! `W(2i+1)` is the odd-dimensional real irreducible with highest weight
//! `i` (on `SU(2)`, weight `2i` on the torus), and `V(2i)` is the complex
//! `2i`-dimensional irreducible of `SU(2)` regarded as a real
//! representation of dimension `4i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, StemsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    SO2,
    Spin2,
    O2,
    Pin2,
    SO3,
    SU2,
}

impl GroupId {
    pub const ALL: [GroupId; 6] =
        [GroupId::SO2, GroupId::Spin2, GroupId::O2, GroupId::Pin2, GroupId::SO3, GroupId::SU2];

    /// Lower-case command-line name.
    pub fn name(self) -> &'static str {
        match self {
            GroupId::SO2 => "so2",
            GroupId::Spin2 => "spin2",
            GroupId::O2 => "o2",
            GroupId::Pin2 => "pin2",
            GroupId::SO3 => "so3",
            GroupId::SU2 => "su2",
        }
    }

    pub fn from_name(name: &str) -> Option<GroupId> {
        GroupId::ALL.into_iter().find(|g| g.name().eq_ignore_ascii_case(name))
    }

    /// Circle groups: `SO(2)` and `Spin(2)`.
    pub fn is_torus(self) -> bool {
        matches!(self, GroupId::SO2 | GroupId::Spin2)
    }

    /// Groups which are (or sit over) a double cover of the `SO(3)` family.
    pub fn is_double_cover(self) -> bool {
        matches!(self, GroupId::Spin2 | GroupId::Pin2 | GroupId::SU2)
    }

    /// Whether the group has a dihedral or quaternion block.
    pub fn has_dihedral_block(self) -> bool {
        !self.is_torus()
    }

    /// Whether the group has the five isolated blocks.
    pub fn has_isolated_blocks(self) -> bool {
        matches!(self, GroupId::SO3 | GroupId::SU2)
    }

    pub fn accepts(self, irr: Irreducible) -> bool {
        use Irreducible::*;
        let index_ok = match irr {
            Z(n) | Sigma(n) => n >= 1,
            Delta => true,
            W(dim) => dim >= 3 && dim % 2 == 1,
            V(dim) => dim >= 2 && dim % 2 == 0,
            H(m) => m % 2 == 1,
        };
        let tag_ok = matches!(
            (self, irr),
            (GroupId::SO2 | GroupId::Spin2, Z(_))
                | (GroupId::O2, Delta | Sigma(_))
                | (GroupId::Pin2, Delta | Sigma(_) | H(_))
                | (GroupId::SO3, W(_))
                | (GroupId::SU2, W(_) | V(_))
        );
        index_ok && tag_ok
    }

    pub fn check(self, irr: Irreducible) -> Result<()> {
        if self.accepts(irr) {
            Ok(())
        } else {
            Err(StemsError::NotInCatalog { group: self, irr })
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupId::SO2 => "SO(2)",
            GroupId::Spin2 => "Spin(2)",
            GroupId::O2 => "O(2)",
            GroupId::Pin2 => "Pin(2)",
            GroupId::SO3 => "SO(3)",
            GroupId::SU2 => "SU(2)",
        };
        f.write_str(s)
    }
}

/// A nontrivial real irreducible. Which tags are valid depends on the group,
/// see [`GroupId::accepts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Irreducible {
    /// Real form of `z^n` on a circle, `n >= 1`.
    Z(u64),
    /// Sign representation of `O(2)/SO(2)` (or its inflation to `Pin(2)`).
    Delta,
    /// `sigma_n`, pulled back from the natural representation along `O(2) -> O(2)/C_n`.
    Sigma(u64),
    /// Real irreducible of odd dimension `>= 3`.
    W(u64),
    /// Complex irreducible of even complex dimension, as a real representation.
    V(u64),
    /// `h_m`, `m` odd: the quaternions pulled back along `Pin(2) -> Pin(2)/C_m`.
    H(u64),
}

impl Irreducible {
    /// Highest weight index `i` of `W(2i+1)` or `V(2i)`.
    pub fn half_index(self) -> Option<u64> {
        match self {
            Irreducible::W(dim) => Some((dim - 1) / 2),
            Irreducible::V(dim) => Some(dim / 2),
            _ => None,
        }
    }

    pub fn real_dim(self) -> u64 {
        match self {
            Irreducible::Z(_) | Irreducible::Sigma(_) => 2,
            Irreducible::Delta => 1,
            Irreducible::W(dim) => dim,
            Irreducible::V(dim) => 2 * dim,
            Irreducible::H(_) => 4,
        }
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducible::Z(n) => write!(f, "z({n})"),
            Irreducible::Delta => f.write_str("delta"),
            Irreducible::Sigma(n) => write!(f, "sigma({n})"),
            Irreducible::W(d) => write!(f, "W({d})"),
            Irreducible::V(d) => write!(f, "V({d})"),
            Irreducible::H(m) => write!(f, "h({m})"),
        }
    }
}

/// Exceptional subgroups of `SO(3)` which form isolated blocks, named here by
/// their `SO(3)` form. In `SU(2)` the same tag denotes the binary double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsolatedTag {
    SO3,
    A5,
    S4,
    A4,
    KleinD4,
}

impl IsolatedTag {
    pub const ALL: [IsolatedTag; 5] =
        [IsolatedTag::SO3, IsolatedTag::A5, IsolatedTag::S4, IsolatedTag::A4, IsolatedTag::KleinD4];

    /// Order of the Weyl group: `C_2` for `A_4`, `Sigma_3` for the Klein group.
    pub fn weyl_order(self) -> u64 {
        match self {
            IsolatedTag::A4 => 2,
            IsolatedTag::KleinD4 => 6,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IsolatedTag::SO3 => "SO3",
            IsolatedTag::A5 => "A5",
            IsolatedTag::S4 => "S4",
            IsolatedTag::A4 => "A4",
            IsolatedTag::KleinD4 => "D4",
        }
    }

    pub fn tilde_name(self) -> &'static str {
        match self {
            IsolatedTag::SO3 => "SU2",
            IsolatedTag::A5 => "BinI",
            IsolatedTag::S4 => "BinO",
            IsolatedTag::A4 => "BinT",
            IsolatedTag::KleinD4 => "Q8",
        }
    }
}

/// Conjugacy class of a subgroup, used as provenance on answer lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubgroupDescriptor {
    Cyclic(u64),
    FullTorus,
    /// Dihedral group, by order `2t`.
    Dihedral(u64),
    FullO2,
    /// Quaternion group, by order `4t`.
    Quaternion(u64),
    FullPin2,
    Exc(IsolatedTag),
    ExcTilde(IsolatedTag),
}

impl SubgroupDescriptor {
    pub fn weyl_order(self) -> u64 {
        match self {
            SubgroupDescriptor::Exc(tag) | SubgroupDescriptor::ExcTilde(tag) => tag.weyl_order(),
            SubgroupDescriptor::Cyclic(_)
            | SubgroupDescriptor::Dihedral(_)
            | SubgroupDescriptor::Quaternion(_) => 2,
            SubgroupDescriptor::FullTorus | SubgroupDescriptor::FullO2 | SubgroupDescriptor::FullPin2 => 1,
        }
    }

    /// Label for the dihedral-type subgroup indexed by `t` in `group`.
    pub fn dihedral_for(group: GroupId, t: u64) -> SubgroupDescriptor {
        if group.is_double_cover() {
            SubgroupDescriptor::Quaternion(4 * t)
        } else {
            SubgroupDescriptor::Dihedral(2 * t)
        }
    }

    pub fn isolated_for(group: GroupId, tag: IsolatedTag) -> SubgroupDescriptor {
        if group.is_double_cover() {
            SubgroupDescriptor::ExcTilde(tag)
        } else {
            SubgroupDescriptor::Exc(tag)
        }
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupDescriptor::Cyclic(s) => write!(f, "C{s}"),
            SubgroupDescriptor::FullTorus => f.write_str("T"),
            SubgroupDescriptor::Dihedral(n) => write!(f, "D{n}"),
            SubgroupDescriptor::FullO2 => f.write_str("O2"),
            SubgroupDescriptor::Quaternion(n) => write!(f, "Q{n}"),
            SubgroupDescriptor::FullPin2 => f.write_str("Pin2"),
            SubgroupDescriptor::Exc(tag) => f.write_str(tag.name()),
            SubgroupDescriptor::ExcTilde(tag) => f.write_str(tag.tilde_name()),
        }
    }
}
