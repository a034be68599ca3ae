//! Sign patterns and paired orthants.
//!
//! An orthant of N-dimensional space is identified by a vector of N strict
//! signs. Orthants come in mirror pairs (a pattern and its negation), and a
//! *trend* attaches to the pair, not to either member. For N variables there
//! are `2^(N-1)` paired orthants.
//!
//! The canonical representative of a pair is the member whose first sign is
//! plus. Pairs are indexed by reading the canonical pattern's remaining signs
//! left to right as a binary number with minus = 1, which orders canonical
//! patterns lexicographically (`+` before `-`):
//!
//! ```text
//! N = 3:   0: +++/---   1: ++-/--+   2: +-+/-+-   3: +--/-++
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Smallest supported number of jointly observed variables.
pub const MIN_DIMENSION: usize = 2;
/// Largest supported number of variables. `2^(N-1)` trends must stay
/// enumerable and printable; 16 variables already mean 32768 report rows.
pub const MAX_DIMENSION: usize = 16;

/// A strict sign, one coordinate of a [`SignPattern`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A length-N vector of strict signs identifying one orthant.
///
/// Zeros are never part of a pattern; a zero difference is a classification
/// outcome (a tied pair), not a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignPattern {
    /// Bit k set iff the sign of variable k is plus.
    mask: u16,
    len: u8,
}

impl SignPattern {
    pub fn new(signs: &[Sign]) -> Result<Self> {
        check_dimension(signs.len())?;
        let mut mask = 0u16;
        for (k, sign) in signs.iter().enumerate() {
            if *sign == Sign::Plus {
                mask |= 1 << k;
            }
        }
        Ok(SignPattern {
            mask,
            len: signs.len() as u8,
        })
    }

    /// Decodes a pattern from its bitmask (bit k set iff variable k is plus).
    pub fn from_bitmask(mask: u16, len: usize) -> Result<Self> {
        check_dimension(len)?;
        debug_assert_eq!(mask >> len, 0, "bitmask has bits beyond the dimension");
        Ok(SignPattern {
            mask: mask & low_bits(len),
            len: len as u8,
        })
    }

    /// Encodes the pattern as an integer, bit k set iff variable k is plus.
    /// Inverse of [`SignPattern::from_bitmask`].
    pub fn bitmask(self) -> u16 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        false // length is always >= MIN_DIMENSION
    }

    pub fn sign(self, k: usize) -> Sign {
        assert!(k < self.len(), "variable index out of range");
        if (self.mask >> k) & 1 == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn signs(self) -> impl Iterator<Item = Sign> {
        (0..self.len()).map(move |k| self.sign(k))
    }

    /// The mirror pattern with every sign flipped.
    pub fn negated(self) -> SignPattern {
        SignPattern {
            mask: !self.mask & low_bits(self.len()),
            len: self.len,
        }
    }

    /// True when this pattern is its pair's canonical representative
    /// (first sign plus).
    pub fn is_canonical(self) -> bool {
        self.mask & 1 == 1
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for sign in self.signs() {
            write!(f, "{}", sign.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::DimensionOutOfRange(0)),
            })
            .collect::<Result<_>>()?;
        SignPattern::new(&signs)
    }
}

/// Whether a raw pattern was the canonical member of its pair or the
/// negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Canonical,
    Negated,
}

/// A canonical sign pattern together with its negation: the unit a data
/// trend attaches to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairedOrthant {
    canonical: SignPattern,
}

impl PairedOrthant {
    /// The paired orthant at `index` among the `2^(dimension-1)` pairs.
    pub fn from_index(index: usize, dimension: usize) -> Result<Self> {
        check_dimension(dimension)?;
        let count = trend_count(dimension);
        if index >= count {
            return Err(Error::TrendIndexOutOfRange {
                got: index,
                dimension,
                count,
            });
        }
        Ok(PairedOrthant {
            canonical: SignPattern {
                mask: canonical_mask_from_index(index, dimension),
                len: dimension as u8,
            },
        })
    }

    /// The paired orthant containing `pattern` (either member).
    pub fn containing(pattern: SignPattern) -> Self {
        let canonical = if pattern.is_canonical() {
            pattern
        } else {
            pattern.negated()
        };
        PairedOrthant { canonical }
    }

    pub fn index(self) -> usize {
        index_from_canonical_mask(self.canonical.mask, self.canonical.len())
    }

    pub fn dimension(self) -> usize {
        self.canonical.len()
    }

    pub fn canonical(self) -> SignPattern {
        self.canonical
    }

    pub fn negation(self) -> SignPattern {
        self.canonical.negated()
    }

    pub fn contains(self, pattern: SignPattern) -> bool {
        pattern == self.canonical || pattern == self.canonical.negated()
    }

    /// Serialized trend label, canonical pattern then negation: `"+-+/-+-"`.
    pub fn label(self) -> String {
        format!("{}/{}", self.canonical(), self.negation())
    }
}

impl fmt::Display for PairedOrthant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.canonical(), self.negation())
    }
}

/// Number of paired orthants (trends) for `dimension` variables: `2^(N-1)`.
pub fn trend_count(dimension: usize) -> usize {
    1 << (dimension - 1)
}

/// All `2^(N-1)` paired orthants for `dimension` variables, in ascending
/// index order. The order is deterministic and stable across runs.
pub fn enumerate_paired_orthants(dimension: usize) -> Result<Vec<PairedOrthant>> {
    check_dimension(dimension)?;
    (0..trend_count(dimension))
        .map(|index| PairedOrthant::from_index(index, dimension))
        .collect()
}

/// Maps a raw strict sign sequence to its paired-orthant index and records
/// whether it was the canonical member or the negation.
///
/// `canonicalize(p)` and `canonicalize(p.negated())` return the same index
/// with opposite orientations.
pub fn canonicalize(raw: SignPattern) -> (usize, Orientation) {
    let orientation = if raw.is_canonical() {
        Orientation::Canonical
    } else {
        Orientation::Negated
    };
    (PairedOrthant::containing(raw).index(), orientation)
}

pub(crate) fn check_dimension(dimension: usize) -> Result<()> {
    if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&dimension) {
        return Err(Error::DimensionOutOfRange(dimension));
    }
    Ok(())
}

fn low_bits(len: usize) -> u16 {
    if len >= 16 {
        u16::MAX
    } else {
        (1u16 << len) - 1
    }
}

/// Index = trailing signs of the canonical mask read left to right as binary
/// with minus = 1 (variable 1 most significant).
pub(crate) fn index_from_canonical_mask(mask: u16, dimension: usize) -> usize {
    debug_assert_eq!(mask & 1, 1, "mask is not canonical");
    let mut index = 0;
    for k in 1..dimension {
        index = (index << 1) | (((mask >> k) & 1) ^ 1) as usize;
    }
    index
}

pub(crate) fn canonical_mask_from_index(index: usize, dimension: usize) -> u16 {
    let mut mask: u16 = 1;
    for k in 1..dimension {
        if (index >> (dimension - 1 - k)) & 1 == 0 {
            mask |= 1 << k;
        }
    }
    mask
}
