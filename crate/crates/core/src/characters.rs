//! Fixed-point dimensions of `W(2i+1)` on the finite rotation groups, and the
//! determinant characters of the nontrivial Weyl groups of isolated blocks.
//!
//! A rotation by `2 pi k / n` acts on `W(2i+1)` with eigenvalues
//! `zeta_n^{jk}` for `-i <= j <= i`, so its character is an exact cyclotomic
//! integer. Averaging over a class census gives `dim W(2i+1)^H`.

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Result, StemsError};
use crate::groups::{Irreducible, IsolatedTag};
use crate::rep::VirtualRep;

/// Finite subgroups of `SO(3)` with a compiled-in rotation census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotationGroup {
    A4,
    S4,
    A5,
    KleinD4,
    D8,
}

/// A class of rotations: `size` elements rotating by `2 pi exponent / order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationClass {
    pub size: u64,
    pub order: u32,
    pub exponent: u32,
}

const fn class(size: u64, order: u32, exponent: u32) -> RotationClass {
    RotationClass { size, order, exponent }
}

// Axis census of the rotation groups. Rotations by +theta and -theta are
// listed separately so that every entry is a single angle.

// tetrahedral: 3 two-fold axes through edge midpoints, 4 three-fold vertex axes
const A4_CLASSES: &[RotationClass] = &[class(1, 1, 0), class(3, 2, 1), class(4, 3, 1), class(4, 3, 2)];

// octahedral: 3 four-fold face axes, 4 three-fold vertex axes, 6 two-fold edge axes
const S4_CLASSES: &[RotationClass] = &[
    class(1, 1, 0),
    class(3, 4, 1),
    class(3, 4, 3),
    class(3, 2, 1),
    class(4, 3, 1),
    class(4, 3, 2),
    class(6, 2, 1),
];

// icosahedral: 6 five-fold axes, 10 three-fold axes, 15 two-fold axes
const A5_CLASSES: &[RotationClass] = &[
    class(1, 1, 0),
    class(15, 2, 1),
    class(10, 3, 1),
    class(10, 3, 2),
    class(6, 5, 1),
    class(6, 5, 4),
    class(6, 5, 2),
    class(6, 5, 3),
];

// three perpendicular half-turns
const KLEIN_CLASSES: &[RotationClass] = &[class(1, 1, 0), class(3, 2, 1)];

// square rotation group: one four-fold axis and four perpendicular half-turn axes
const D8_CLASSES: &[RotationClass] =
    &[class(1, 1, 0), class(1, 4, 1), class(1, 4, 3), class(1, 2, 1), class(4, 2, 1)];

impl RotationGroup {
    pub const ALL: [RotationGroup; 5] =
        [RotationGroup::A4, RotationGroup::S4, RotationGroup::A5, RotationGroup::KleinD4, RotationGroup::D8];

    pub fn classes(self) -> &'static [RotationClass] {
        match self {
            RotationGroup::A4 => A4_CLASSES,
            RotationGroup::S4 => S4_CLASSES,
            RotationGroup::A5 => A5_CLASSES,
            RotationGroup::KleinD4 => KLEIN_CLASSES,
            RotationGroup::D8 => D8_CLASSES,
        }
    }

    pub fn order(self) -> u64 {
        match self {
            RotationGroup::A4 => 12,
            RotationGroup::S4 => 24,
            RotationGroup::A5 => 60,
            RotationGroup::KleinD4 => 4,
            RotationGroup::D8 => 8,
        }
    }

    /// Least common multiple of the element orders.
    pub fn exponent(self) -> u32 {
        self.classes().iter().fold(1, |acc, c| lcm(acc, c.order))
    }

    pub fn of_isolated(tag: IsolatedTag) -> Option<RotationGroup> {
        match tag {
            IsolatedTag::SO3 => None,
            IsolatedTag::A5 => Some(RotationGroup::A5),
            IsolatedTag::S4 => Some(RotationGroup::S4),
            IsolatedTag::A4 => Some(RotationGroup::A4),
            IsolatedTag::KleinD4 => Some(RotationGroup::KleinD4),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// Character of `W(2i+1)` at a rotation by `2 pi k / n`.
pub fn char_value(i: u64, order: u32, exponent: u32) -> CyclotomicInt {
    assert!(order >= 1);
    let mut acc = CyclotomicInt::zero(order);
    let i = i as i64;
    for j in -i..=i {
        acc += &CyclotomicInt::root_power(order, j * i64::from(exponent));
    }
    acc
}

/// `dim W(2i+1)^H` by averaging the character over the class census.
pub fn fixed_dim(i: u64, group: RotationGroup) -> Result<u64> {
    let modulus = group.exponent();
    let mut total = CyclotomicInt::zero(modulus);
    for c in group.classes() {
        let value = char_value(i, c.order, c.exponent)
            .lift(modulus)
            .map_err(|e| StemsError::Invariant(e.to_string()))?;
        total += &(c.size as i64 * &value);
    }
    let sum = total
        .to_integer()
        .map_err(|e| StemsError::Invariant(format!("class sum for {group:?}, i = {i}: {e}")))?;
    let order = group.order() as i64;
    if sum < 0 || sum % order != 0 {
        return Err(StemsError::Invariant(format!(
            "class sum {sum} for {group:?}, i = {i} is not a nonnegative multiple of {order}"
        )));
    }
    Ok((sum / order) as u64)
}

/// `dim U^H` for `U` over `SO(3)`, or `dim U^{H~}` for `U` over `SU(2)` where
/// `H~` is the binary double cover. The central element of `SU(2)` acts by
/// `-1` on every `V(2i)`, so those summands never have fixed vectors.
pub fn fixed_dim_virtual(rep: &VirtualRep, tag: IsolatedTag) -> Result<i64> {
    let group = rep.group();
    if !group.has_isolated_blocks() {
        return Err(StemsError::Unsupported { group, what: "isolated blocks" });
    }
    let table = RotationGroup::of_isolated(tag);
    let mut total = 0i64;
    for (irr, m) in rep.terms() {
        let dim = match (irr, table) {
            (Irreducible::W(_), Some(table)) => fixed_dim(irr.half_index().unwrap(), table)? as i64,
            // W(2i+1), i >= 1, has no SO(3)-fixed vectors
            (Irreducible::W(_), None) => 0,
            (Irreducible::V(_), _) => 0,
            _ => unreachable!("{irr} over {group}"),
        };
        total += m * dim;
    }
    Ok(total)
}

fn fixed_dim_rotation(rep: &VirtualRep, table: RotationGroup) -> Result<i64> {
    let mut total = 0i64;
    for (irr, m) in rep.terms() {
        if let Irreducible::W(_) = irr {
            total += m * fixed_dim(irr.half_index().unwrap(), table)? as i64;
        }
    }
    Ok(total)
}

/// Whether the Weyl group of `H` acts trivially on the top homology of
/// `S^{U^H}`, i.e. with determinant `+1` on the virtual space `U^H`.
///
/// For `A_4` the Weyl group is `S_4/A_4`; its generator fixes exactly
/// `U^{S_4}`, so the determinant is `(-1)^{dim U^{A_4} - dim U^{S_4}}`.
/// For the Klein group the Weyl group is `S_4/D_4 = Sigma_3`. Elements of
/// order three always have determinant `+1`; a transposition lifts into a
/// dihedral group of order 8 containing `D_4`, so its determinant is
/// `(-1)^{dim U^{D_4} - dim U^{D_8}}`.
pub fn weyl_det_trivial(rep: &VirtualRep, tag: IsolatedTag) -> Result<bool> {
    let group = rep.group();
    if !group.has_isolated_blocks() {
        return Err(StemsError::Unsupported { group, what: "isolated blocks" });
    }
    let (sub, sup) = match tag {
        IsolatedTag::A4 => (RotationGroup::A4, RotationGroup::S4),
        IsolatedTag::KleinD4 => (RotationGroup::KleinD4, RotationGroup::D8),
        _ => return Err(StemsError::Unsupported { group, what: "Weyl action for this subgroup" }),
    };
    let anti_invariant = fixed_dim_rotation(rep, sub)? - fixed_dim_rotation(rep, sup)?;
    Ok(anti_invariant.rem_euclid(2) == 0)
}
