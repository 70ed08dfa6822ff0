//! Permutations of `[n]` and the structural operations used by the
//! decompositions: left-to-right / right-to-left maxima, splitting at the
//! maximum, single-element insertion and the `psi` bijection.
//!
//! Many operations also make sense for words of distinct values that are not
//! permutations of `[n]` (the two halves of a permutation split at its
//! maximum, for instance). Those are exposed as free functions over `&[u32]`;
//! the [`Permutation`] methods delegate to them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation. The empty permutation
/// is a valid value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[idx] = true;
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees `values` is a permutation of `[n]`.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn lmax(&self) -> BTreeSet<u32> {
        lmax(&self.0)
    }

    pub fn rmax(&self) -> BTreeSet<u32> {
        rmax(&self.0)
    }

    /// Splits `π = π_ℓ n π_r` into `(π_ℓ, π_r)`.
    pub fn split_at_max(&self) -> Result<(Vec<u32>, Vec<u32>)> {
        split_at_max(&self.0)
    }

    /// Inserts the value `value` before the `position`-th entry (both 1-based),
    /// shifting every entry `>= value` up by one. `position = n + 1` appends.
    pub fn ins(&self, value: usize, position: usize) -> Result<Permutation> {
        ins(&self.0, value, position).map(Permutation)
    }

    pub fn psi(&self) -> Permutation {
        Permutation(psi(&self.0))
    }

    pub fn psi_inverse(&self) -> Permutation {
        Permutation(psi_inverse(&self.0))
    }

    pub fn lmax_decomposition(&self) -> MaxDecomposition {
        MaxDecomposition::left_to_right(&self.0)
    }

    pub fn rmax_decomposition(&self) -> MaxDecomposition {
        MaxDecomposition::right_to_left(&self.0)
    }

    /// Value flip `v -> n + 1 - v`.
    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n as u32).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_lexicographic(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation(cur))
        })
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_lexicographic(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(text: String) -> Result<Self> {
        text.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> Self {
        p.to_string()
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

/// Compact digit form when every value is a single digit (n <= 9), otherwise
/// space separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

/// Renders a word of values the same way [`Permutation`] is displayed.
pub fn format_word(values: &[u32]) -> String {
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let separated = text.contains(|c: char| c.is_whitespace() || c == ',');
        let values = if separated {
            let mut values = Vec::new();
            let mut offset = 0;
            for token in text.split(|c: char| c.is_whitespace() || c == ',') {
                if !token.is_empty() {
                    let value = token.parse::<u32>().map_err(|_| {
                        Error::parse(offset + 1, format!("invalid number '{token}'"))
                    })?;
                    values.push(value);
                }
                offset += token.chars().count() + 1;
            }
            values
        } else {
            text.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::parse(i + 1, format!("unexpected character '{c}'")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// Word-level insertion: inserts `value` before the `position`-th entry
/// (both 1-based, `position = len + 1` appends) after raising every entry
/// `>= value` by one.
pub fn ins(word: &[u32], value: usize, position: usize) -> Result<Vec<u32>> {
    let n = word.len();
    if value == 0 || value > n + 1 {
        return Err(Error::OutOfRange {
            what: "inserted value",
            value,
            max: n + 1,
        });
    }
    if position == 0 || position > n + 1 {
        return Err(Error::OutOfRange {
            what: "insert position",
            value: position,
            max: n + 1,
        });
    }
    let i = value as u32;
    let mut out: Vec<u32> = word
        .iter()
        .map(|&p| if p >= i { p + 1 } else { p })
        .collect();
    out.insert(position - 1, i);
    Ok(out)
}

pub fn lmax(word: &[u32]) -> BTreeSet<u32> {
    let mut best = 0;
    let mut out = BTreeSet::new();
    for &v in word {
        if v > best {
            best = v;
            out.insert(v);
        }
    }
    out
}

pub fn rmax(word: &[u32]) -> BTreeSet<u32> {
    let mut best = 0;
    let mut out = BTreeSet::new();
    for &v in word.iter().rev() {
        if v > best {
            best = v;
            out.insert(v);
        }
    }
    out
}

fn max_position(word: &[u32]) -> Option<usize> {
    word.iter()
        .enumerate()
        .max_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
}

pub fn split_at_max(word: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
    let m = max_position(word).ok_or(Error::EmptySplit)?;
    Ok((word[..m].to_vec(), word[m + 1..].to_vec()))
}

/// `psi(π_ℓ n π_r) = π_r n psi(π_ℓ)`, unrolled into a loop over the
/// successive left parts.
pub fn psi(word: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(word.len());
    let mut rest = word;
    while let Some(m) = max_position(rest) {
        out.extend_from_slice(&rest[m + 1..]);
        out.push(rest[m]);
        rest = &rest[..m];
    }
    out
}

pub fn psi_inverse(word: &[u32]) -> Vec<u32> {
    // Peel `τ = π_r n ψ(π_ℓ)` from the front; the left parts are emitted in
    // reverse order of discovery.
    let mut pieces: Vec<&[u32]> = Vec::new();
    let mut rest = word;
    while let Some(m) = max_position(rest) {
        pieces.push(&rest[..=m]);
        rest = &rest[m + 1..];
    }
    let mut out = Vec::with_capacity(word.len());
    for piece in pieces.iter().rev() {
        let (block, max) = piece.split_at(piece.len() - 1);
        out.push(max[0]);
        out.extend_from_slice(block);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    LeftToRight,
    RightToLeft,
}

/// A word cut at its left-to-right (or right-to-left) maxima.
///
/// For [`Side::LeftToRight`] the word reads `M₁ block₁ M₂ block₂ …`; for
/// [`Side::RightToLeft`] it reads `block₁ M₁ block₂ M₂ …`. Items are always in
/// reading order and every value of a block is smaller than its maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxDecomposition {
    pub side: Side,
    pub items: Vec<(u32, Vec<u32>)>,
}

impl MaxDecomposition {
    pub fn left_to_right(word: &[u32]) -> Self {
        let mut items: Vec<(u32, Vec<u32>)> = Vec::new();
        for &v in word {
            match items.last_mut() {
                Some((max, block)) if v < *max => block.push(v),
                _ => items.push((v, Vec::new())),
            }
        }
        MaxDecomposition {
            side: Side::LeftToRight,
            items,
        }
    }

    pub fn right_to_left(word: &[u32]) -> Self {
        let mut items: Vec<(u32, Vec<u32>)> = Vec::new();
        for &v in word.iter().rev() {
            match items.last_mut() {
                Some((max, block)) if v < *max => block.push(v),
                _ => items.push((v, Vec::new())),
            }
        }
        items.reverse();
        for (_, block) in &mut items {
            block.reverse();
        }
        MaxDecomposition {
            side: Side::RightToLeft,
            items,
        }
    }

    pub fn maxima(&self) -> Vec<u32> {
        self.items.iter().map(|(m, _)| *m).collect()
    }

    /// Reassembles the source word.
    pub fn concat(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (max, block) in &self.items {
            match self.side {
                Side::LeftToRight => {
                    out.push(*max);
                    out.extend_from_slice(block);
                }
                Side::RightToLeft => {
                    out.extend_from_slice(block);
                    out.push(*max);
                }
            }
        }
        out
    }
}
