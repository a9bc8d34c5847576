//! Closed-form calculators for `[S^0, S^U]^G_*`, one block at a time.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::{fixed_dim_virtual, weyl_det_trivial};
use crate::error::{Result, StemsError};
use crate::groups::{GroupId, Irreducible, IsolatedTag, SubgroupDescriptor};
use crate::lines::{Correction, ExtendedNat, Line, LineLabel, LineSet, INF};
use crate::rep::{
    b_of, dihedral_sign, dim_dihedral, dim_function_cyclic, to_normalizer_form, Parity, VirtualRep,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockId {
    Cyclic,
    Dihedral,
    Quaternion,
    Isolated(SubgroupDescriptor),
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockId::Cyclic => f.write_str("cyclic"),
            BlockId::Dihedral => f.write_str("dihedral"),
            BlockId::Quaternion => f.write_str("quaternion"),
            BlockId::Isolated(h) => write!(f, "isolated:{h}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub id: BlockId,
    pub lines: LineSet,
}

/// The full answer for one representation, split by blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockAnswer {
    pub group: GroupId,
    pub rep: VirtualRep,
    pub blocks: Vec<Block>,
    /// `(m_U, M_U)`, extremes of the cyclic dimension function.
    pub range: (i64, i64),
}

impl BlockAnswer {
    pub fn query(&self, k: i64) -> ExtendedNat {
        self.blocks.iter().map(|b| b.lines.query(k)).sum()
    }

    pub fn window(&self, lo: i64, hi: i64) -> BTreeMap<i64, ExtendedNat> {
        (lo..=hi).map(|k| (k, self.query(k))).collect()
    }

    pub fn block(&self, id: BlockId) -> Option<&LineSet> {
        self.blocks.iter().find(|b| b.id == id).map(|b| &b.lines)
    }

    pub fn cyclic(&self) -> &LineSet {
        self.block(BlockId::Cyclic).expect("every answer has a cyclic block")
    }

    /// The answer for `U + k`: every degree moves up by `k`.
    pub fn shift(&self, k: i64) -> BlockAnswer {
        BlockAnswer {
            group: self.group,
            rep: self.rep.clone(),
            blocks: self.blocks.iter().map(|b| Block { id: b.id, lines: b.lines.shift(k) }).collect(),
            range: (self.range.0 + k, self.range.1 + k),
        }
    }

    pub fn total(&self) -> LineSet {
        self.blocks.iter().fold(LineSet::empty(), |acc, b| acc.sum(&b.lines))
    }
}

const TORUS: LineLabel = LineLabel::Subgroup(SubgroupDescriptor::FullTorus);

/// Circle groups. Even degrees: `Q` in degree 0 unless `d_U` goes negative.
/// Odd degrees: `Sigma^{d_U(s) - 1} I_s` summed over `s`, modulo the diagonal
/// class in degree `-1` when `d_U` goes negative.
pub fn stems_torus(rep: &VirtualRep) -> Result<LineSet> {
    let group = rep.group();
    if !group.is_torus() {
        return Err(StemsError::Unsupported { group, what: "torus calculator" });
    }
    let d = dim_function_cyclic(rep);
    if d.tail() != 0 {
        return Err(StemsError::FixedPartNonzero { group });
    }
    let negative = d.min() < 0;
    let mut lines = Vec::new();
    if !negative {
        lines.push(Line::spot(0, 1.into(), TORUS));
    }
    for (s, value) in d.exceptions() {
        lines.push(Line::new(value + 1, 2, 1.into(), LineLabel::Subgroup(SubgroupDescriptor::Cyclic(s))));
    }
    lines.push(Line::new(1, 2, INF, LineLabel::GenericTail));
    let corrections = if negative { vec![Correction { degree: -1, amount: 1 }] } else { vec![] };
    LineSet::new(lines, corrections)
}

/// Cyclic block of `O(2)` or `Pin(2)`: the `W`-invariants of the circle
/// answer, governed by the parity of `b(U)` and by `d_{U'}` mod 4 where
/// `U' = U - b(U) delta`.
pub fn stems_cyclic_block(rep: &VirtualRep) -> Result<LineSet> {
    let group = rep.group();
    if !matches!(group, GroupId::O2 | GroupId::Pin2) {
        return Err(StemsError::Unsupported { group, what: "O(2)-type cyclic block" });
    }
    let b = b_of(rep)?;
    let d = dim_function_cyclic(rep);
    if d.tail() != b {
        return Err(StemsError::FixedPartNonzero { group });
    }
    let d_prime = d.offset(b);
    let negative = d_prime.min() < 0;
    let b_even = Parity::of(b) == Parity::Even;

    let mut lines = Vec::new();
    if b_even && !negative {
        lines.push(Line::spot(b, 1.into(), TORUS));
    }
    for (s, value) in d.exceptions() {
        let reduced = d_prime.value(s).rem_euclid(4);
        debug_assert!(reduced % 2 == 0, "d_U' is even");
        // bottom invariant class sits 3 above d_U(s) when the bottom of the
        // (twisted) piece is anti-invariant, 1 above it otherwise
        let offset = match (b_even, reduced) {
            (true, 0) | (false, 2) => 3,
            _ => 1,
        };
        lines.push(Line::new(
            value + offset,
            4,
            1.into(),
            LineLabel::Subgroup(SubgroupDescriptor::Cyclic(s)),
        ));
    }
    let tail_start = if b_even { b + 3 } else { b + 1 };
    lines.push(Line::new(tail_start, 4, INF, LineLabel::GenericTail));
    let corrections = if b_even && negative { vec![Correction { degree: b - 1, amount: 1 }] } else { vec![] };
    LineSet::new(lines, corrections)
}

fn max_sigma_index(rep: &VirtualRep) -> u64 {
    rep.terms()
        .filter_map(|(irr, _)| match irr {
            Irreducible::Sigma(n) => Some(n),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

/// Dihedral (or quaternion) block of `O(2)`/`Pin(2)`: equivariant sections
/// of the suspended constant sheaf. `omit` lists the indices `t` dropped from
/// the block (`{1, 2}` inside `SO(3)` and `SU(2)`).
pub fn stems_dihedral_block(rep: &VirtualRep, omit: &[u64]) -> Result<LineSet> {
    let group = rep.group();
    if !matches!(group, GroupId::O2 | GroupId::Pin2) {
        return Err(StemsError::Unsupported { group, what: "O(2)-type dihedral block" });
    }
    let mut ls = LineSet::empty();
    ls.push_line(Line::spot(0, INF, LineLabel::DegreeZeroSections));
    for t in (1..=max_sigma_index(rep)).filter(|t| !omit.contains(t)) {
        let dim = dim_dihedral(rep, t)?;
        let sign = dihedral_sign(rep, t)?;
        if dim == 0 && sign == Parity::Even {
            continue;
        }
        // the degree-zero factor at t is replaced by Sigma^{dim} Q^{+-}; its
        // W_t-invariants survive only for the untwisted stalk
        if sign == Parity::Even {
            let label = LineLabel::Subgroup(SubgroupDescriptor::dihedral_for(group, t));
            ls.push_line(Line::spot(dim, 1.into(), label));
        }
    }
    Ok(ls)
}

/// Dihedral indices `t` where `U^{D_2t}` is zero-dimensional but carries the
/// sign action. Only virtual representations produce these.
pub fn twisted_null_stalks(rep: &VirtualRep, omit: &[u64]) -> Result<Vec<u64>> {
    let (rep, _) = to_normalizer_form(rep)?;
    let mut out = Vec::new();
    for t in (1..=max_sigma_index(&rep)).filter(|t| !omit.contains(t)) {
        if dim_dihedral(&rep, t)? == 0 && dihedral_sign(&rep, t)? == Parity::Odd {
            out.push(t);
        }
    }
    Ok(out)
}

/// The five isolated blocks of `SO(3)` or `SU(2)`: `H_*(S^{U^H})` invariants
/// under the Weyl group.
pub fn stems_isolated(rep: &VirtualRep) -> Result<Vec<(SubgroupDescriptor, LineSet)>> {
    let group = rep.group();
    if !group.has_isolated_blocks() {
        return Err(StemsError::Unsupported { group, what: "isolated blocks" });
    }
    IsolatedTag::ALL
        .into_iter()
        .map(|tag| {
            let h = SubgroupDescriptor::isolated_for(group, tag);
            let dim = fixed_dim_virtual(rep, tag)?;
            let trivial = tag.weyl_order() == 1 || weyl_det_trivial(rep, tag)?;
            let mut ls = LineSet::empty();
            if trivial {
                ls.push_line(Line::spot(dim, 1.into(), LineLabel::Subgroup(h)));
            }
            Ok((h, ls))
        })
        .collect()
}

/// Dihedral indices omitted from the block inside `SO(3)` and `SU(2)`:
/// `D_2` is conjugate to `C_2`, and `D_4` is isolated.
pub const SEMISIMPLE_OMIT: [u64; 2] = [1, 2];

pub fn stems(rep: &VirtualRep) -> Result<BlockAnswer> {
    let group = rep.group();
    let range = dim_function_cyclic(rep).range();
    let dihedral_id = if group.is_double_cover() { BlockId::Quaternion } else { BlockId::Dihedral };
    let mut blocks = Vec::new();
    match group {
        GroupId::SO2 | GroupId::Spin2 => {
            blocks.push(Block { id: BlockId::Cyclic, lines: stems_torus(rep)? });
        }
        GroupId::O2 | GroupId::Pin2 => {
            blocks.push(Block { id: BlockId::Cyclic, lines: stems_cyclic_block(rep)? });
            blocks.push(Block { id: dihedral_id, lines: stems_dihedral_block(rep, &[])? });
        }
        GroupId::SO3 | GroupId::SU2 => {
            // restriction to the normalizer of the torus is an isomorphism on
            // these blocks; trivial summands of the restriction suspend
            let (res, k) = to_normalizer_form(rep)?;
            blocks.push(Block { id: BlockId::Cyclic, lines: stems_cyclic_block(&res)?.shift(k) });
            blocks.push(Block {
                id: dihedral_id,
                lines: stems_dihedral_block(&res, &SEMISIMPLE_OMIT)?.shift(k),
            });
            for (h, lines) in stems_isolated(rep)? {
                blocks.push(Block { id: BlockId::Isolated(h), lines });
            }
        }
    }
    Ok(BlockAnswer { group, rep: rep.clone(), blocks, range })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Irreducible::*;

    fn rep(group: GroupId, terms: &[(i64, Irreducible)]) -> VirtualRep {
        VirtualRep::from_terms(group, terms.iter().copied()).unwrap()
    }

    fn fin(n: u64) -> ExtendedNat {
        ExtendedNat::Finite(n)
    }

    #[test]
    fn torus_examples() {
        let zero = stems_torus(&VirtualRep::zero(GroupId::SO2)).unwrap();
        let expect: BTreeMap<i64, ExtendedNat> =
            [(-2, fin(0)), (-1, fin(0)), (0, fin(1)), (1, INF), (2, fin(0))].into();
        assert_eq!(zero.window(-2, 2), expect);

        let u = stems_torus(&rep(GroupId::SO2, &[(-1, Z(1))])).unwrap();
        assert_eq!(u.query(-1), fin(0));
        assert_eq!(u.query(0), fin(0));
        assert_eq!(u.query(3), INF);

        let u = stems_torus(&rep(GroupId::SO2, &[(-1, Z(1)), (-1, Z(2))])).unwrap();
        assert_eq!(u.query(-3), fin(1));
        assert_eq!(u.query(-1), fin(1));
        assert_eq!(u.query(1), INF);
        assert_eq!(u.query(-2), fin(0));

        assert!(stems_torus(&VirtualRep::zero(GroupId::O2)).is_err());
    }

    #[test]
    fn cyclic_block_examples() {
        let u = stems_cyclic_block(&rep(GroupId::O2, &[(2, Delta), (-1, Sigma(1))])).unwrap();
        assert_eq!(u.query(1), fin(0));
        assert_eq!(u.query(3), fin(0));
        assert_eq!(u.query(5), INF);
        assert_eq!(u.query(9), INF);
        assert!((-10..10).step_by(2).all(|k| u.query(k).is_zero()));

        let u = stems_cyclic_block(&rep(GroupId::O2, &[(1, Delta), (-1, Sigma(1))])).unwrap();
        assert_eq!(u.query(2), INF);
        assert_eq!(u.query(6), INF);
        assert_eq!(u.query(0), fin(0));
        assert_eq!(u.query(4), fin(0));
        assert!((-11..11).step_by(2).all(|k| u.query(k).is_zero()));

        let u = stems_cyclic_block(&VirtualRep::zero(GroupId::O2)).unwrap();
        assert_eq!(u.query(0), fin(1));
        assert_eq!(u.query(3), INF);
        assert_eq!(u.query(7), INF);
        assert_eq!(u.query(1), fin(0));
        assert_eq!(u.query(5), fin(0));
    }

    #[test]
    fn dihedral_block_examples() {
        let u = stems_dihedral_block(&rep(GroupId::O2, &[(1, Sigma(1)), (-1, Sigma(2))]), &[]).unwrap();
        assert_eq!(u.lines().len(), 1);
        assert_eq!(u.query(0), INF);

        let u = stems_dihedral_block(&rep(GroupId::O2, &[(1, Sigma(2)), (-2, Sigma(1))]), &[]).unwrap();
        assert_eq!(u.query(-1), fin(1));
        assert_eq!(u.query(0), INF);
        assert_eq!(u.query(1), fin(0));

        let u = stems_dihedral_block(&VirtualRep::zero(GroupId::O2), &[]).unwrap();
        assert_eq!(u.lines(), &[Line::spot(0, INF, LineLabel::DegreeZeroSections)]);
    }

    #[test]
    fn isolated_examples() {
        let spots = |u: &VirtualRep| -> Vec<Option<i64>> {
            stems_isolated(u)
                .unwrap()
                .into_iter()
                .map(|(_, ls)| ls.lines().first().map(|l| l.start()))
                .collect()
        };
        assert_eq!(spots(&rep(GroupId::SO3, &[(1, W(5))])), vec![Some(0), Some(0), Some(0), Some(0), None]);
        assert_eq!(spots(&rep(GroupId::SO3, &[(1, W(3))])), vec![Some(0); 5]);
        assert_eq!(spots(&VirtualRep::zero(GroupId::SO3)), vec![Some(0); 5]);
    }

    #[test]
    fn composite_examples() {
        let a = stems(&rep(GroupId::SO3, &[(1, W(3))])).unwrap();
        assert_eq!(a.blocks.len(), 7);
        assert_eq!(a.query(0), INF);
        assert_eq!(a.query(2), INF);
        assert_eq!(a.query(4), fin(0));
        assert!((-9..10).step_by(2).all(|k| a.query(k).is_zero()));

        let a = stems(&rep(GroupId::SU2, &[(1, V(2))])).unwrap();
        assert_eq!(a.query(0), INF);
        assert_eq!(a.query(1), fin(0));
        assert_eq!(a.query(2), fin(0));
        assert_eq!(a.query(3), INF);
        assert_eq!(a.query(7), INF);

        let a = stems(&VirtualRep::zero(GroupId::SO2)).unwrap();
        assert_eq!(a.query(0), fin(1));
        assert_eq!(a.blocks.len(), 1);
    }

    #[test]
    fn block_census() {
        for g in GroupId::ALL {
            let a = stems(&VirtualRep::zero(g)).unwrap();
            let expected = match g {
                GroupId::SO2 | GroupId::Spin2 => 1,
                GroupId::O2 | GroupId::Pin2 => 2,
                GroupId::SO3 | GroupId::SU2 => 7,
            };
            assert_eq!(a.blocks.len(), expected, "{g}");
        }
    }

    #[test]
    fn twisted_null_stalk_detection() {
        // t = 1: dim 1 - 1 = 0, sign from sigma_1 alone is odd
        let u = rep(GroupId::O2, &[(1, Sigma(1)), (-1, Sigma(2))]);
        assert_eq!(twisted_null_stalks(&u, &[]).unwrap(), vec![1]);
        assert!(twisted_null_stalks(&VirtualRep::zero(GroupId::O2), &[]).unwrap().is_empty());
    }
}
