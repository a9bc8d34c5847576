//! Virtual representations, torus weights and fixed-point dimension
//! functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Result, StemsError};
use crate::groups::{GroupId, Irreducible};

/// A finitely supported integer combination of nontrivial irreducibles of one
/// group. The trivial representation has no tag, so `U^G = 0` always holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VirtualRep {
    group: GroupId,
    mults: BTreeMap<Irreducible, i64>,
}

impl VirtualRep {
    pub fn zero(group: GroupId) -> Self {
        VirtualRep { group, mults: BTreeMap::new() }
    }

    pub fn from_terms<I>(group: GroupId, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Irreducible)>,
    {
        let mut rep = VirtualRep::zero(group);
        for (coeff, irr) in terms {
            rep.add_term(coeff, irr)?;
        }
        Ok(rep)
    }

    /// Single irreducible with multiplicity one.
    pub fn irreducible(group: GroupId, irr: Irreducible) -> Result<Self> {
        VirtualRep::from_terms(group, [(1, irr)])
    }

    pub fn add_term(&mut self, coeff: i64, irr: Irreducible) -> Result<()> {
        self.group.check(irr)?;
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.mults.entry(irr).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.mults.remove(&irr);
        }
        Ok(())
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn mult(&self, irr: Irreducible) -> i64 {
        self.mults.get(&irr).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Irreducible, i64)> + '_ {
        self.mults.iter().map(|(&irr, &m)| (irr, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Virtual real dimension.
    pub fn real_dim(&self) -> i64 {
        self.terms().map(|(irr, m)| m * irr.real_dim() as i64).sum()
    }

    pub fn try_add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        if self.group != other.group {
            return Err(StemsError::GroupMismatch(self.group, other.group));
        }
        let mut out = self.clone();
        for (irr, m) in other.terms() {
            out.add_term(m, irr)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> VirtualRep {
        let mut out = VirtualRep::zero(self.group);
        if k != 0 {
            out.mults = self.mults.iter().map(|(&irr, &m)| (irr, m * k)).collect();
        }
        out
    }

    /// Largest weight of the maximal torus occurring in `U`.
    pub fn max_torus_weight(&self) -> u64 {
        restrict_to_torus(self).max_weight()
    }
}

impl Add for &VirtualRep {
    type Output = VirtualRep;

    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        self.try_add(rhs).expect("adding representations of different groups")
    }
}

impl Sub for &VirtualRep {
    type Output = VirtualRep;

    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self + &rhs.scaled(-1)
    }
}

impl Neg for &VirtualRep {
    type Output = VirtualRep;

    fn neg(self) -> VirtualRep {
        self.scaled(-1)
    }
}

/// Canonical expression, e.g. `2*sigma(1) - sigma(3) + delta`; `0` for the zero rep.
impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (irr, m)) in self.terms().enumerate() {
            let sign = if m < 0 { "-" } else { "+" };
            match (idx, m < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = m.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            write!(f, "{irr}")?;
        }
        Ok(())
    }
}

/// Restriction to the maximal torus: a real multiplicity of the zero weight
/// and multiplicities of the 2-dimensional real weight spaces `z^w`, `w > 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    zero: i64,
    pairs: BTreeMap<u64, i64>,
}

impl WeightMultiset {
    pub fn zero_mult(&self) -> i64 {
        self.zero
    }

    pub fn pair(&self, weight: u64) -> i64 {
        self.pairs.get(&weight).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.pairs.iter().map(|(&w, &m)| (w, m))
    }

    pub fn real_dim(&self) -> i64 {
        self.zero + 2 * self.pairs.values().sum::<i64>()
    }

    pub fn max_weight(&self) -> u64 {
        self.pairs.keys().next_back().copied().unwrap_or(0)
    }

    /// Add `m` trivial summands.
    pub fn add_zero(&mut self, m: i64) {
        self.zero += m;
    }

    fn add_pair(&mut self, weight: u64, m: i64) {
        debug_assert!(weight > 0);
        let entry = self.pairs.entry(weight).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.pairs.remove(&weight);
        }
    }

    /// Real dimension of the `C_s`-fixed subspace.
    pub fn fixed_dim_cyclic(&self, s: u64) -> i64 {
        assert!(s >= 1, "cyclic subgroup order must be positive");
        self.zero + 2 * self.pairs.iter().filter(|(&w, _)| w % s == 0).map(|(_, &m)| m).sum::<i64>()
    }
}

pub fn restrict_to_torus(rep: &VirtualRep) -> WeightMultiset {
    let mut out = WeightMultiset::default();
    for (irr, m) in rep.terms() {
        match irr {
            Irreducible::Z(n) => out.add_pair(n, m),
            Irreducible::Delta => out.add_zero(m),
            // Pin(2) has Spin(2) as torus; the covering map doubles weights.
            Irreducible::Sigma(n) if rep.group() == GroupId::Pin2 => out.add_pair(2 * n, m),
            Irreducible::Sigma(n) => out.add_pair(n, m),
            Irreducible::H(k) => out.add_pair(k, 2 * m),
            Irreducible::W(_) => {
                let i = irr.half_index().unwrap();
                out.add_zero(m);
                let scale = if rep.group() == GroupId::SU2 { 2 } else { 1 };
                for j in 1..=i {
                    out.add_pair(scale * j, m);
                }
            }
            Irreducible::V(_) => {
                // complex weights +-1, +-3, ..., +-(2i-1)
                let i = irr.half_index().unwrap();
                for j in 1..=i {
                    out.add_pair(2 * j - 1, 2 * m);
                }
            }
        }
    }
    out
}

/// Restriction along `O(2) < SO(3)` or `Pin(2) < SU(2)`, with trivial
/// summands removed. Their number is [`restriction_suspension`].
pub fn restrict(rep: &VirtualRep, target: GroupId) -> Result<VirtualRep> {
    let from = rep.group();
    match (from, target) {
        (GroupId::SO3, GroupId::O2) | (GroupId::SU2, GroupId::Pin2) => {}
        _ => return Err(StemsError::NoRestrictionRule { from, to: target }),
    }
    let mut out = VirtualRep::zero(target);
    for (irr, m) in rep.terms() {
        match irr {
            Irreducible::W(_) => {
                let i = irr.half_index().unwrap();
                // delta^i: delta for odd i, the trivial representation (dropped) for even i
                if i % 2 == 1 {
                    out.add_term(m, Irreducible::Delta)?;
                }
                for j in 1..=i {
                    out.add_term(m, Irreducible::Sigma(j))?;
                }
            }
            Irreducible::V(_) => {
                let i = irr.half_index().unwrap();
                for j in 1..=i {
                    out.add_term(m, Irreducible::H(2 * j - 1))?;
                }
            }
            other => unreachable!("{other} is not an irreducible of {from}"),
        }
    }
    Ok(out)
}

/// Multiplicity of the trivial representation in the restriction of `rep` to
/// the normalizer of the torus: `W(2i+1)` contains `delta^i`, which is trivial
/// for even `i`. Zero for groups without a restriction rule.
pub fn restriction_suspension(rep: &VirtualRep) -> i64 {
    if !matches!(rep.group(), GroupId::SO3 | GroupId::SU2) {
        return 0;
    }
    rep.terms()
        .filter(|(irr, _)| matches!(irr, Irreducible::W(_)) && irr.half_index().unwrap() % 2 == 0)
        .map(|(_, m)| m)
        .sum()
}

/// `dim_R U^{C_s}`, computed from torus weights.
pub fn dim_cyclic(rep: &VirtualRep, s: u64) -> i64 {
    restrict_to_torus(rep).fixed_dim_cyclic(s)
}

/// An eventually constant integer function on the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimFunction {
    exceptions: BTreeMap<u64, i64>,
    tail: i64,
}

impl DimFunction {
    pub fn new(exceptions: impl IntoIterator<Item = (u64, i64)>, tail: i64) -> Self {
        let exceptions = exceptions.into_iter().filter(|&(_, v)| v != tail).collect();
        DimFunction { exceptions, tail }
    }

    pub fn value(&self, s: u64) -> i64 {
        self.exceptions.get(&s).copied().unwrap_or(self.tail)
    }

    pub fn tail(&self) -> i64 {
        self.tail
    }

    /// Arguments whose value differs from the tail, with their values.
    pub fn exceptions(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exceptions.iter().map(|(&s, &v)| (s, v))
    }

    /// Largest argument at which the value may differ from the tail.
    pub fn last_exception(&self) -> u64 {
        self.exceptions.keys().next_back().copied().unwrap_or(0)
    }

    /// `(m_U, M_U)`: minimum and maximum over all arguments.
    pub fn range(&self) -> (i64, i64) {
        self.exceptions.values().fold((self.tail, self.tail), |(lo, hi), &v| (lo.min(v), hi.max(v)))
    }

    pub fn min(&self) -> i64 {
        self.range().0
    }

    /// Pointwise `self - k`.
    pub fn offset(&self, k: i64) -> DimFunction {
        DimFunction {
            exceptions: self.exceptions.iter().map(|(&s, &v)| (s, v - k)).collect(),
            tail: self.tail - k,
        }
    }
}

/// `s -> dim_R U^{C_s}`.
pub fn dim_function_cyclic(rep: &VirtualRep) -> DimFunction {
    let weights = restrict_to_torus(rep);
    let tail = weights.zero_mult();
    DimFunction::new((1..=weights.max_weight()).map(|s| (s, weights.fixed_dim_cyclic(s))), tail)
}

fn count_multiples(i: u64, t: u64) -> i64 {
    (i / t) as i64
}

/// `dim_R U^{D_{2t}}` (or `U^{Q_{4t}}` for the double covers). For `SO(3)`
/// and `SU(2)` this is the dimension for the trivial-free part of the
/// restriction; the full value adds [`restriction_suspension`].
pub fn dim_dihedral(rep: &VirtualRep, t: u64) -> Result<i64> {
    let group = rep.group();
    if !group.has_dihedral_block() {
        return Err(StemsError::Unsupported { group, what: "dihedral or quaternion subgroups" });
    }
    assert!(t >= 1, "dihedral index must be positive");
    let dim = rep
        .terms()
        .map(|(irr, m)| {
            let d = match irr {
                Irreducible::Sigma(n) => i64::from(n % t == 0),
                Irreducible::W(_) => count_multiples(irr.half_index().unwrap(), t),
                Irreducible::Delta | Irreducible::H(_) | Irreducible::V(_) => 0,
                Irreducible::Z(_) => unreachable!(),
            };
            m * d
        })
        .sum();
    Ok(dim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Parity {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Restriction of an `SO(3)`/`SU(2)` representation to `O(2)`/`Pin(2)`,
/// as a trivial-free representation and a number of trivial summands;
/// other representations are returned unchanged.
pub fn to_normalizer_form(rep: &VirtualRep) -> Result<(VirtualRep, i64)> {
    match rep.group() {
        GroupId::SO3 => Ok((restrict(rep, GroupId::O2)?, restriction_suspension(rep))),
        GroupId::SU2 => Ok((restrict(rep, GroupId::Pin2)?, restriction_suspension(rep))),
        GroupId::O2 | GroupId::Pin2 => Ok((rep.clone(), 0)),
        group => Err(StemsError::Unsupported { group, what: "dihedral or quaternion subgroups" }),
    }
}

/// Whether the Weyl group of `D_{2t}` acts on the top class of `U^{D_{2t}}`
/// by the sign (odd) or trivially (even): each `sigma_n` with `t | n` but
/// `2t` not dividing `n` contributes a sign.
pub fn dihedral_sign(rep: &VirtualRep, t: u64) -> Result<Parity> {
    assert!(t >= 1, "dihedral index must be positive");
    let (rep, _) = to_normalizer_form(rep)?;
    let total: i64 = rep
        .terms()
        .filter_map(|(irr, m)| match irr {
            Irreducible::Sigma(n) if n % t == 0 && n % (2 * t) != 0 => Some(m),
            _ => None,
        })
        .sum();
    Ok(Parity::of(total))
}

/// `b(U)`: the multiplicity of `delta`.
pub fn b_of(rep: &VirtualRep) -> Result<i64> {
    match rep.group() {
        GroupId::O2 | GroupId::Pin2 => Ok(rep.mult(Irreducible::Delta)),
        group => Err(StemsError::Unsupported { group, what: "delta summand" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Irreducible::*;

    fn rep(group: GroupId, terms: &[(i64, Irreducible)]) -> VirtualRep {
        VirtualRep::from_terms(group, terms.iter().copied()).unwrap()
    }

    #[test]
    fn torus_weights() {
        let w = restrict_to_torus(&rep(GroupId::SO3, &[(1, W(5))]));
        assert_eq!(w.zero_mult(), 1);
        assert_eq!(w.pairs().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);

        let v = restrict_to_torus(&rep(GroupId::SU2, &[(1, V(2))]));
        assert_eq!(v.zero_mult(), 0);
        assert_eq!(v.pairs().collect::<Vec<_>>(), vec![(1, 2)]);

        assert_eq!(restrict_to_torus(&VirtualRep::zero(GroupId::O2)), WeightMultiset::default());
    }

    #[test]
    fn restriction_rules() {
        let w5 = rep(GroupId::SO3, &[(1, W(5))]);
        assert_eq!(restrict(&w5, GroupId::O2).unwrap(), rep(GroupId::O2, &[(1, Sigma(1)), (1, Sigma(2))]));
        let w3 = rep(GroupId::SO3, &[(1, W(3))]);
        assert_eq!(restrict(&w3, GroupId::O2).unwrap(), rep(GroupId::O2, &[(1, Delta), (1, Sigma(1))]));
        let v4 = rep(GroupId::SU2, &[(1, V(4))]);
        assert_eq!(restrict(&v4, GroupId::Pin2).unwrap(), rep(GroupId::Pin2, &[(1, H(1)), (1, H(3))]));
        assert_eq!(restriction_suspension(&w5), 1);
        assert_eq!(restriction_suspension(&w3), 0);
        assert_eq!(restriction_suspension(&rep(GroupId::SU2, &[(2, W(9)), (-1, W(5)), (1, V(4))])), 1);
        // the dropped summand is what keeps the torus weights intact
        let res = restrict(&w5, GroupId::O2).unwrap();
        for s in 1..10 {
            assert_eq!(dim_cyclic(&res, s) + restriction_suspension(&w5), dim_cyclic(&w5, s));
        }
        assert_eq!(
            restrict(&v4, GroupId::O2),
            Err(StemsError::NoRestrictionRule { from: GroupId::SU2, to: GroupId::O2 })
        );
    }

    #[test]
    fn cyclic_dimensions() {
        assert_eq!(dim_cyclic(&rep(GroupId::SO3, &[(1, W(5))]), 2), 3);
        assert_eq!(dim_cyclic(&rep(GroupId::Pin2, &[(1, H(3))]), 3), 4);
        assert_eq!(dim_cyclic(&rep(GroupId::Pin2, &[(1, Sigma(1))]), 2), 2);
        for g in GroupId::ALL {
            assert_eq!(dim_cyclic(&VirtualRep::zero(g), 7), 0);
        }
    }

    #[test]
    fn dim_functions() {
        let f = dim_function_cyclic(&rep(GroupId::SO2, &[(-1, Z(1))]));
        assert_eq!(f.exceptions().collect::<Vec<_>>(), vec![(1, -2)]);
        assert_eq!(f.tail(), 0);
        assert_eq!(f.range(), (-2, 0));

        let f = dim_function_cyclic(&rep(GroupId::O2, &[(2, Delta), (-1, Sigma(1))]));
        // d(1) = 0 and the tail is 2
        assert_eq!(f.exceptions().collect::<Vec<_>>(), vec![(1, 0)]);
        assert_eq!(f.tail(), 2);

        let f = dim_function_cyclic(&rep(GroupId::SO3, &[(1, W(5))]));
        assert_eq!(f.exceptions().collect::<Vec<_>>(), vec![(1, 5), (2, 3)]);
        assert_eq!(f.tail(), 1);
        assert_eq!(f.range(), (1, 5));
    }

    #[test]
    fn dihedral_dimensions() {
        assert_eq!(dim_dihedral(&rep(GroupId::O2, &[(1, Sigma(1)), (-1, Sigma(2))]), 2), Ok(-1));
        assert_eq!(dim_dihedral(&rep(GroupId::SO3, &[(1, W(5))]), 2), Ok(1));
        assert_eq!(dim_dihedral(&rep(GroupId::SU2, &[(1, V(4))]), 1), Ok(0));
        assert!(dim_dihedral(&rep(GroupId::SO2, &[(1, Z(1))]), 1).is_err());
    }

    #[test]
    fn dihedral_signs() {
        assert_eq!(dihedral_sign(&rep(GroupId::O2, &[(1, Sigma(1))]), 1), Ok(Parity::Odd));
        assert_eq!(dihedral_sign(&rep(GroupId::O2, &[(1, Sigma(2))]), 1), Ok(Parity::Even));
        // W(5) restricts to sigma_1 + sigma_2; only sigma_1 is twisted at t = 1
        assert_eq!(dihedral_sign(&rep(GroupId::SO3, &[(1, W(5))]), 1), Ok(Parity::Odd));
    }

    #[test]
    fn delta_multiplicity() {
        assert_eq!(b_of(&rep(GroupId::O2, &[(2, Delta), (-1, Sigma(1))])), Ok(2));
        assert_eq!(b_of(&rep(GroupId::O2, &[(1, Sigma(3))])), Ok(0));
        assert_eq!(b_of(&rep(GroupId::Pin2, &[(1, Delta), (-1, H(1))])), Ok(1));
        assert!(b_of(&rep(GroupId::SO3, &[(1, W(3))])).is_err());
    }

    #[test]
    fn canonical_form() {
        let u = rep(GroupId::O2, &[(2, Sigma(1)), (-1, Sigma(3)), (1, Delta)]);
        let v = rep(GroupId::O2, &[(2, Sigma(1)), (-1, Sigma(3)), (1, Delta), (1, Sigma(4)), (-1, Sigma(4))]);
        assert_eq!(u, v);
        assert_eq!(u.to_string(), "delta + 2*sigma(1) - sigma(3)");
        assert_eq!(rep(GroupId::SO2, &[(-1, Z(1)), (-1, Z(2))]).to_string(), "-z(1) - z(2)");
        assert_eq!(VirtualRep::zero(GroupId::SU2).to_string(), "0");
    }

    #[test]
    fn rejects_foreign_irreducibles() {
        assert_eq!(
            VirtualRep::irreducible(GroupId::SO3, Z(2)),
            Err(StemsError::NotInCatalog { group: GroupId::SO3, irr: Z(2) })
        );
    }
}
