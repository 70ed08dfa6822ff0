//! Partially ordered generalized patterns (POGPs).
//!
//! A pattern is a word of positive letters, possibly with repeats, with a
//! dash allowed between any two adjacent letters. The text form is
//! `segment ('-' segment)*` with `segment := [1-9]+`, e.g. `3-121-3`.
//!
//! Letters are compared literally; repeated letters impose no order on the
//! entries that realize them. [`Pogp::canonicalize`] compresses letters to
//! dense ranks but is never applied implicitly, so non-dense patterns such as
//! `4-132-5` survive a round trip unchanged.

mod matcher;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use matcher::Matcher;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Pogp {
    letters: Vec<u32>,
    /// `dashes[t]` is true when a dash separates letters `t` and `t + 1`.
    dashes: Vec<bool>,
}

impl Pogp {
    pub fn new(letters: Vec<u32>, dashes: Vec<bool>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Contract(
                "a pattern needs at least one letter".into(),
            ));
        }
        if dashes.len() + 1 != letters.len() {
            return Err(Error::Contract(format!(
                "{} letters need {} gap flags, got {}",
                letters.len(),
                letters.len() - 1,
                dashes.len()
            )));
        }
        if letters.contains(&0) {
            return Err(Error::Contract("pattern letters must be positive".into()));
        }
        Ok(Pogp { letters, dashes })
    }

    /// A pattern without dashes.
    pub fn contiguous(letters: Vec<u32>) -> Result<Self> {
        let gaps = letters.len().saturating_sub(1);
        Pogp::new(letters, vec![false; gaps])
    }

    /// A pattern with a dash between every pair of letters (a classical pattern).
    pub fn classical(letters: Vec<u32>) -> Result<Self> {
        let gaps = letters.len().saturating_sub(1);
        Pogp::new(letters, vec![true; gaps])
    }

    /// Joins segments with dashes.
    pub fn from_segments<S: AsRef<[u32]>>(segments: &[S]) -> Result<Self> {
        let mut letters = Vec::new();
        let mut dashes = Vec::new();
        for (i, seg) in segments.iter().enumerate() {
            let seg = seg.as_ref();
            if seg.is_empty() {
                return Err(Error::Contract("empty pattern segment".into()));
            }
            if i > 0 {
                dashes.push(true);
            }
            dashes.extend(std::iter::repeat(false).take(seg.len() - 1));
            letters.extend_from_slice(seg);
        }
        Pogp::new(letters, dashes)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn dashes(&self) -> &[bool] {
        &self.dashes
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_letter(&self) -> u32 {
        *self.letters.iter().max().expect("patterns are nonempty")
    }

    /// Maximal dash-free runs of letter indices (0-based).
    pub fn segments(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (t, &dash) in self.dashes.iter().enumerate() {
            if dash {
                out.push(start..t + 1);
                start = t + 1;
            }
        }
        out.push(start..self.letters.len());
        out
    }

    pub fn is_contiguous(&self) -> bool {
        !self.dashes.contains(&true)
    }

    /// The underlying word with all dashes removed.
    pub fn strip_dashes(&self) -> Vec<u32> {
        self.letters.clone()
    }

    /// Whether `gap` (1-based: between letters `gap` and `gap + 1`) carries a dash.
    pub fn has_dash(&self, gap: usize) -> Result<bool> {
        self.check_gap(gap)?;
        Ok(self.dashes[gap - 1])
    }

    /// Copy of the pattern with the dash at `gap` set to `dash`.
    pub fn with_dash(&self, gap: usize, dash: bool) -> Result<Pogp> {
        self.check_gap(gap)?;
        let mut out = self.clone();
        out.dashes[gap - 1] = dash;
        Ok(out)
    }

    pub(crate) fn check_gap(&self, gap: usize) -> Result<()> {
        if gap == 0 || gap >= self.letters.len() {
            return Err(Error::OutOfRange {
                what: "gap",
                value: gap,
                max: self.letters.len().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// Replaces letters by their dense ranks; equal letters stay equal and
    /// dashes are untouched.
    pub fn canonicalize(&self) -> Pogp {
        let ranks: BTreeMap<u32, u32> = self
            .letters
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .zip(1..)
            .collect();
        Pogp {
            letters: self.letters.iter().map(|l| ranks[l]).collect(),
            dashes: self.dashes.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        let distinct: BTreeSet<u32> = self.letters.iter().copied().collect();
        distinct.iter().copied().eq(1..=distinct.len() as u32)
    }

    /// Value flip `l -> max + 1 - l` on canonical letters.
    pub fn complement(&self) -> Pogp {
        let c = self.canonicalize();
        let top = c.max_letter() + 1;
        Pogp {
            letters: c.letters.iter().map(|&l| top - l).collect(),
            dashes: c.dashes,
        }
    }

    pub fn reverse(&self) -> Pogp {
        Pogp {
            letters: self.letters.iter().rev().copied().collect(),
            dashes: self.dashes.iter().rev().copied().collect(),
        }
    }

    /// Text form; fails for letters above 9, which have no text syntax.
    pub fn render(&self) -> Result<String> {
        if let Some(&big) = self.letters.iter().find(|&&l| l > 9) {
            return Err(Error::Render(big));
        }
        Ok(self.to_string())
    }

    /// Every generalized pattern (distinct letters `1..=len`, same dashes)
    /// whose strict letter relations extend this pattern's. Together they
    /// partition the occurrences of `self`.
    pub fn linearize(&self) -> BTreeSet<Pogp> {
        let canon = self.canonicalize();
        // Tie groups in increasing letter order; each group gets the next
        // consecutive block of ranks in every possible arrangement.
        let groups: Vec<Vec<usize>> = (1..=canon.max_letter())
            .map(|l| {
                (0..canon.len())
                    .filter(|&t| canon.letters[t] == l)
                    .collect()
            })
            .collect();
        let arrangements = groups
            .iter()
            .map(|g| g.iter().copied().permutations(g.len()).collect::<Vec<_>>());
        let mut out = BTreeSet::new();
        for choice in arrangements.multi_cartesian_product() {
            let mut letters = vec![0; canon.len()];
            let mut rank = 1;
            for group in &choice {
                for &t in group {
                    letters[t] = rank;
                    rank += 1;
                }
            }
            out.insert(Pogp {
                letters,
                dashes: canon.dashes.clone(),
            });
        }
        out
    }

    pub fn matcher(&self) -> Matcher {
        Matcher::new(self)
    }
}

/// Letters above 9 are written in parentheses, a form [`FromStr`] rejects.
impl fmt::Display for Pogp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, &l) in self.letters.iter().enumerate() {
            if t > 0 && self.dashes[t - 1] {
                f.write_str("-")?;
            }
            if l > 9 {
                write!(f, "({l})")?;
            } else {
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Pogp {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::parse(1, "empty pattern"));
        }
        let mut letters = Vec::new();
        let mut dashes = Vec::new();
        let mut segment_open = false;
        for (i, c) in text.chars().enumerate() {
            let position = i + 1;
            match c {
                '1'..='9' => {
                    if segment_open {
                        dashes.push(false);
                    } else if !letters.is_empty() {
                        dashes.push(true);
                    }
                    letters.push(c.to_digit(10).unwrap());
                    segment_open = true;
                }
                '-' => {
                    if !segment_open {
                        return Err(Error::parse(position, "empty segment before '-'"));
                    }
                    segment_open = false;
                }
                '0' => return Err(Error::parse(position, "letter 0 is not allowed")),
                other => {
                    return Err(Error::parse(
                        position,
                        format!("unexpected character '{other}'"),
                    ))
                }
            }
        }
        if !segment_open {
            return Err(Error::parse(text.chars().count(), "trailing '-'"));
        }
        Pogp::new(letters, dashes)
    }
}

impl TryFrom<String> for Pogp {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Pogp> for String {
    fn from(p: Pogp) -> Self {
        p.to_string()
    }
}

/// Checks one index selection (1-based, strictly increasing) against the
/// pattern's order and adjacency constraints.
pub fn is_occurrence(p: &Permutation, indices: &[usize], pat: &Pogp) -> Result<bool> {
    if indices.len() != pat.len() {
        return Err(Error::Contract(format!(
            "pattern has {} letters but {} indices were given",
            pat.len(),
            indices.len()
        )));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Contract(
            "indices must be strictly increasing".into(),
        ));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > p.len()) {
        return Err(Error::OutOfRange {
            what: "index",
            value: bad,
            max: p.len(),
        });
    }
    let values: Vec<u32> = indices.iter().map(|&i| p.as_slice()[i - 1]).collect();
    let adjacent = pat
        .dashes()
        .iter()
        .zip(indices.windows(2))
        .all(|(&dash, w)| dash || w[1] == w[0] + 1);
    let ordered = (0..pat.len()).all(|a| {
        (0..pat.len()).all(|b| pat.letters()[a] <= pat.letters()[b] || values[a] > values[b])
    });
    Ok(adjacent && ordered)
}

pub fn count_occurrences(p: &Permutation, pat: &Pogp) -> BigUint {
    BigUint::from(pat.matcher().count(p.as_slice()))
}

/// The first occurrence in lexicographic order of index tuples (1-based).
pub fn find_occurrence(word: &[u32], pat: &Pogp) -> Option<Vec<usize>> {
    pat.matcher()
        .first(word)
        .map(|ix| ix.into_iter().map(|i| i + 1).collect())
}

pub fn avoids(p: &Permutation, pat: &Pogp) -> bool {
    !pat.matcher().contains(p.as_slice())
}

pub fn avoids_all<'a>(p: &Permutation, pats: impl IntoIterator<Item = &'a Pogp>) -> bool {
    pats.into_iter().all(|pat| avoids(p, pat))
}

/// `p` forms `pat`: same length and `p` contains `pat`.
pub fn forms(p: &Permutation, pat: &Pogp) -> bool {
    p.len() == pat.len() && !avoids(p, pat)
}
