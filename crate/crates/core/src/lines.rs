//! Graded dimensions built from arithmetic progressions.
//!
//! A [`LineSet`] is a finite list of [`Line`]s, each adding a fixed
//! (finite or countably infinite) dimension at every degree of an arithmetic
//! progression, together with finitely many corrections that subtract a
//! finite amount at single degrees.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, StemsError};
use crate::groups::SubgroupDescriptor;

/// A dimension: a natural number or countably infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u64),
    CountablyInfinite,
}

pub use ExtendedNat::CountablyInfinite as INF;

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);

    pub fn is_zero(self) -> bool {
        self == ExtendedNat::ZERO
    }

    pub fn is_infinite(self) -> bool {
        self == ExtendedNat::CountablyInfinite
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(n) => Some(n),
            ExtendedNat::CountablyInfinite => None,
        }
    }

    /// Subtract a finite amount; `None` if a finite result would be negative.
    pub fn checked_sub(self, amount: u64) -> Option<ExtendedNat> {
        match self {
            ExtendedNat::Finite(n) => n.checked_sub(amount).map(ExtendedNat::Finite),
            ExtendedNat::CountablyInfinite => Some(ExtendedNat::CountablyInfinite),
        }
    }
}

impl Default for ExtendedNat {
    fn default() -> Self {
        ExtendedNat::ZERO
    }
}

impl From<u64> for ExtendedNat {
    fn from(n: u64) -> Self {
        ExtendedNat::Finite(n)
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: ExtendedNat) -> ExtendedNat {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a + b),
            _ => ExtendedNat::CountablyInfinite,
        }
    }
}

impl std::iter::Sum for ExtendedNat {
    fn sum<I: Iterator<Item = ExtendedNat>>(iter: I) -> ExtendedNat {
        iter.fold(ExtendedNat::ZERO, Add::add)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(n) => write!(f, "{n}"),
            ExtendedNat::CountablyInfinite => f.write_str("inf"),
        }
    }
}

/// Serialized as a JSON integer, or the string `"inf"`.
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(n) => serializer.serialize_u64(*n),
            ExtendedNat::CountablyInfinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtendedNatVisitor;

        impl Visitor<'_> for ExtendedNatVisitor {
            type Value = ExtendedNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtendedNat, E> {
                Ok(ExtendedNat::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtendedNat, E> {
                u64::try_from(v)
                    .map(ExtendedNat::Finite)
                    .map_err(|_| E::invalid_value(de::Unexpected::Signed(v), &self))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtendedNat, E> {
                if v == "inf" {
                    Ok(ExtendedNat::CountablyInfinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(ExtendedNatVisitor)
    }
}

/// Where a line comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LineLabel {
    Subgroup(SubgroupDescriptor),
    /// The cofinitely many subgroups on which the dimension function takes its tail value.
    GenericTail,
    /// Degree-zero sections of the constant sheaf on a dihedral-type block.
    DegreeZeroSections,
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::Subgroup(h) => write!(f, "{h}"),
            LineLabel::GenericTail => f.write_str("tail"),
            LineLabel::DegreeZeroSections => f.write_str("sections"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line {
    start: i64,
    step: u32,
    mult: ExtendedNat,
    label: LineLabel,
}

impl Line {
    /// `mult` at `start, start + step, start + 2 step, ...`; a step of 0 is a single spot.
    pub fn new(start: i64, step: u32, mult: ExtendedNat, label: LineLabel) -> Line {
        assert!(matches!(step, 0 | 2 | 4), "line step must be 0, 2 or 4, got {step}");
        assert!(!mult.is_zero(), "lines never carry zero multiplicity");
        Line { start, step, mult, label }
    }

    pub fn spot(degree: i64, mult: ExtendedNat, label: LineLabel) -> Line {
        Line::new(degree, 0, mult, label)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn mult(&self) -> ExtendedNat {
        self.mult
    }

    pub fn label(&self) -> LineLabel {
        self.label
    }

    pub fn contains(&self, k: i64) -> bool {
        match self.step {
            0 => k == self.start,
            step => k >= self.start && (k - self.start) % i64::from(step) == 0,
        }
    }

    /// Smallest degree of the line strictly above `k`.
    fn first_above(&self, k: i64) -> Option<i64> {
        if self.start > k {
            return Some(self.start);
        }
        match self.step {
            0 => None,
            step => {
                let step = i64::from(step);
                Some(self.start + ((k - self.start) / step + 1) * step)
            }
        }
    }

    fn shifted(mut self, d: i64) -> Line {
        self.start += d;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Correction {
    pub degree: i64,
    pub amount: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSet {
    lines: Vec<Line>,
    corrections: Vec<Correction>,
}

impl LineSet {
    pub fn empty() -> LineSet {
        LineSet::default()
    }

    /// Fails unless every correction lands on a degree covered by finitely
    /// many lines whose total is at least the amount subtracted there.
    pub fn new(lines: Vec<Line>, corrections: Vec<Correction>) -> Result<LineSet> {
        let set = LineSet { lines, corrections };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<()> {
        let mut by_degree: BTreeMap<i64, u64> = BTreeMap::new();
        for c in &self.corrections {
            if c.amount == 0 {
                return Err(StemsError::Invariant(format!("zero correction at degree {}", c.degree)));
            }
            *by_degree.entry(c.degree).or_insert(0) += c.amount;
        }
        for (&k, &amount) in &by_degree {
            match self.covering(k) {
                ExtendedNat::CountablyInfinite => {
                    return Err(StemsError::Invariant(format!(
                        "correction at degree {k} is covered by an infinite line"
                    )))
                }
                ExtendedNat::Finite(n) if n < amount => {
                    return Err(StemsError::Invariant(format!(
                        "correction of {amount} at degree {k} exceeds the {n} dimensions there"
                    )))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn corrections(&self) -> &[Correction] {
        &self.corrections
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub(crate) fn push_line(&mut self, line: Line) {
        self.lines.push(line);
    }

    fn covering(&self, k: i64) -> ExtendedNat {
        self.lines.iter().filter(|l| l.contains(k)).map(|l| l.mult).sum()
    }

    fn correction_at(&self, k: i64) -> u64 {
        self.corrections.iter().filter(|c| c.degree == k).map(|c| c.amount).sum()
    }

    /// Dimension in degree `k`.
    pub fn query(&self, k: i64) -> ExtendedNat {
        self.covering(k).checked_sub(self.correction_at(k)).expect("line set corrections exceed coverage")
    }

    pub fn sum(&self, other: &LineSet) -> LineSet {
        let mut out = self.clone();
        out.lines.extend_from_slice(&other.lines);
        out.corrections.extend_from_slice(&other.corrections);
        out
    }

    pub fn shift(&self, d: i64) -> LineSet {
        LineSet {
            lines: self.lines.iter().map(|l| l.shifted(d)).collect(),
            corrections: self
                .corrections
                .iter()
                .map(|c| Correction { degree: c.degree + d, amount: c.amount })
                .collect(),
        }
    }

    /// Dimensions in degrees `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> BTreeMap<i64, ExtendedNat> {
        (lo..=hi).map(|k| (k, self.query(k))).collect()
    }

    /// Lowest degree with nonzero dimension.
    pub fn min_nonzero_degree(&self) -> Option<i64> {
        let lowest = self.lines.iter().map(|l| l.start).min()?;
        let top_correction = self.corrections.iter().map(|c| c.degree).max().unwrap_or(lowest);
        if let Some(k) = (lowest..=top_correction).find(|&k| !self.query(k).is_zero()) {
            return Some(k);
        }
        // above every correction, any covered degree is nonzero
        self.lines.iter().filter_map(|l| l.first_above(top_correction)).min()
    }
}
