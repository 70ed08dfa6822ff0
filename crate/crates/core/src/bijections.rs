//! Bijections between avoider classes and set-partition-like objects:
//!
//! * set partitions ↔ `3-12` avoiders (blocks written decreasing, in
//!   increasing order of their maxima),
//! * set partitions ↔ `12-3` avoiders (the image of the former under `psi`),
//! * bicolored set partitions of `[n]` ↔ `3-12-3` avoiders of `[n+1]`,
//! * standard-labeled `Z₂` sets ↔ `121` avoiders,
//! * partial `Z₂`-partitions of `[n]` ↔ `3-121-3` avoiders of `[n+1]`.
//!
//! Ground sets are literal value sets: the two halves of a permutation split
//! at its maximum are mapped without renumbering.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{find_occurrence, Pogp};
use crate::perm::{format_word, split_at_max, MaxDecomposition, Permutation};

fn pattern(segments: &[&[u32]]) -> Pogp {
    Pogp::from_segments(segments).expect("segments are nonempty")
}

/// Domain error unless `word` avoids `pat`.
fn require_avoids(word: &[u32], pat: &Pogp) -> Result<()> {
    match find_occurrence(word, pat) {
        None => Ok(()),
        Some(ix) => Err(Error::Domain(format!(
            "{} contains {} at positions ({})",
            format_word(word),
            pat,
            ix.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ))),
    }
}

fn check_blocks(n: usize, blocks: &[Vec<u32>], must_cover: bool) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for block in blocks {
        if block.is_empty() {
            return Err(Error::Contract("empty block".into()));
        }
        for &v in block {
            if v == 0 || v as usize > n {
                return Err(Error::OutOfRange {
                    what: "block element",
                    value: v as usize,
                    max: n,
                });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::Contract(format!("element {v} appears twice")));
            }
        }
    }
    if must_cover {
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::Contract(format!("element {missing} is in no block")));
        }
    }
    Ok(())
}

fn block_max(block: &[u32]) -> u32 {
    *block.iter().max().expect("blocks are nonempty")
}

fn sorted_desc(mut block: Vec<u32>) -> Vec<u32> {
    block.sort_unstable_by(|a, b| b.cmp(a));
    block
}

fn format_block(block: &[u32]) -> String {
    block
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A partition of `[n]` into nonempty blocks.
///
/// Stored canonically: elements of each block descending, blocks in
/// increasing order of their maxima (the reading order of the `3-12` word).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        check_blocks(n, &blocks, true)?;
        let mut blocks: Vec<Vec<u32>> = blocks.into_iter().map(sorted_desc).collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn ground_n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every set partition of `[n]`, via restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        fn grow(v: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
            if v > n {
                out.push(blocks.clone());
                return;
            }
            for b in 0..blocks.len() {
                blocks[b].push(v);
                grow(v + 1, n, blocks, out);
                blocks[b].pop();
            }
            blocks.push(vec![v]);
            grow(v + 1, n, blocks, out);
            blocks.pop();
        }
        let mut raw = Vec::new();
        grow(1, n as u32, &mut Vec::new(), &mut raw);
        raw.into_iter()
            .map(|blocks| SetPartition::new(n, blocks).expect("generated partitions are valid"))
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{{}}}", format_block(block))?;
        }
        Ok(())
    }
}

/// `{6,3,1}{8,7}{9,5,4,2}`; the ground set is the union of the blocks.
impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let groups = parse_groups(s, '{', '}')?;
        let blocks: Vec<Vec<u32>> = groups
            .into_iter()
            .map(|(_, body, at)| parse_values(&body, at))
            .collect::<Result<_>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks)
    }
}

/// Splits `prefix? open body close` groups, returning `(prefix, body, position)`.
fn parse_groups(s: &str, open: char, close: char) -> Result<Vec<(String, String, usize)>> {
    let mut out = Vec::new();
    let mut prefix = String::new();
    let mut body = String::new();
    let mut inside = false;
    let mut start = 0;
    for (i, c) in s.chars().enumerate() {
        let position = i + 1;
        if inside {
            if c == close {
                out.push((
                    std::mem::take(&mut prefix),
                    std::mem::take(&mut body),
                    start,
                ));
                inside = false;
            } else if c == open {
                return Err(Error::parse(position, format!("nested '{open}'")));
            } else {
                body.push(c);
            }
        } else if c == open {
            inside = true;
            start = position;
        } else if c == close {
            return Err(Error::parse(position, format!("unmatched '{close}'")));
        } else if !c.is_whitespace() {
            prefix.push(c);
        }
    }
    if inside {
        return Err(Error::parse(start, format!("unclosed '{open}'")));
    }
    if !prefix.is_empty() {
        return Err(Error::parse(
            s.chars().count(),
            format!("trailing '{prefix}'"),
        ));
    }
    Ok(out)
}

fn parse_values(body: &str, at: usize) -> Result<Vec<u32>> {
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::parse(at, format!("invalid element '{t}'")))
        })
        .collect()
}

/// Blocks decreasing, in increasing order of their maxima.
fn write_312_word(blocks: &[Vec<u32>]) -> Vec<u32> {
    let mut blocks: Vec<Vec<u32>> = blocks.iter().cloned().map(sorted_desc).collect();
    blocks.sort_by_key(|b| b[0]);
    blocks.concat()
}

/// Each block as its other elements decreasing followed by its maximum, blocks
/// in decreasing order of their maxima.
fn write_123r_word(blocks: &[Vec<u32>]) -> Vec<u32> {
    let mut blocks: Vec<Vec<u32>> = blocks.iter().cloned().map(sorted_desc).collect();
    blocks.sort_by_key(|b| std::cmp::Reverse(b[0]));
    let mut out = Vec::new();
    for block in blocks {
        out.extend_from_slice(&block[1..]);
        out.push(block[0]);
    }
    out
}

fn lmax_blocks(word: &[u32]) -> Vec<Vec<u32>> {
    MaxDecomposition::left_to_right(word)
        .items
        .into_iter()
        .map(|(m, mut block)| {
            block.insert(0, m);
            block
        })
        .collect()
}

fn rmax_blocks(word: &[u32]) -> Vec<Vec<u32>> {
    MaxDecomposition::right_to_left(word)
        .items
        .into_iter()
        .map(|(m, mut block)| {
            block.push(m);
            block
        })
        .collect()
}

pub fn partition_to_av312(sp: &SetPartition) -> Permutation {
    Permutation::from_vec_unchecked(write_312_word(&sp.blocks))
}

pub fn av312_to_partition(p: &Permutation) -> Result<SetPartition> {
    require_avoids(p.as_slice(), &pattern(&[&[3], &[1, 2]]))?;
    SetPartition::new(p.len(), lmax_blocks(p.as_slice()))
}

pub fn partition_to_av123r(sp: &SetPartition) -> Permutation {
    Permutation::from_vec_unchecked(write_123r_word(&sp.blocks))
}

pub fn av123r_to_partition(p: &Permutation) -> Result<SetPartition> {
    require_avoids(p.as_slice(), &pattern(&[&[1, 2], &[3]]))?;
    SetPartition::new(p.len(), rmax_blocks(p.as_slice()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    /// Blocks coming from the part left of the maximum.
    L,
    /// Blocks coming from the part right of the maximum.
    R,
}

/// A set partition of `[n]` with a color on every block.
///
/// Canonical order is the reading order of the `3-12-3` word: `L` blocks by
/// increasing maximum, then `R` blocks by decreasing maximum; elements of a
/// block descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BicoloredSetPartition {
    n: usize,
    blocks: Vec<(Color, Vec<u32>)>,
}

impl BicoloredSetPartition {
    pub fn new(n: usize, blocks: Vec<(Color, Vec<u32>)>) -> Result<Self> {
        let plain: Vec<Vec<u32>> = blocks.iter().map(|(_, b)| b.clone()).collect();
        check_blocks(n, &plain, true)?;
        let mut blocks: Vec<(Color, Vec<u32>)> = blocks
            .into_iter()
            .map(|(c, b)| (c, sorted_desc(b)))
            .collect();
        blocks.sort_by_key(|(c, b)| match c {
            Color::L => (0, b[0] as i64),
            Color::R => (1, -(b[0] as i64)),
        });
        Ok(BicoloredSetPartition { n, blocks })
    }

    pub fn ground_n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(Color, Vec<u32>)] {
        &self.blocks
    }

    pub fn blocks_of(&self, color: Color) -> Vec<Vec<u32>> {
        self.blocks
            .iter()
            .filter(|(c, _)| *c == color)
            .map(|(_, b)| b.clone())
            .collect()
    }

    pub fn count(&self, color: Color) -> usize {
        self.blocks.iter().filter(|(c, _)| *c == color).count()
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(|(_, b)| b.len()).max().unwrap_or(0)
    }

    /// Every bicolored set partition of `[n]`.
    pub fn all(n: usize) -> Vec<BicoloredSetPartition> {
        let mut out = Vec::new();
        for sp in SetPartition::all(n) {
            let k = sp.num_blocks();
            for mask in 0u64..(1 << k) {
                let blocks = sp
                    .blocks
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        let color = if mask >> i & 1 == 0 {
                            Color::L
                        } else {
                            Color::R
                        };
                        (color, b.clone())
                    })
                    .collect();
                out.push(BicoloredSetPartition::new(n, blocks).expect("valid by construction"));
            }
        }
        out
    }
}

impl fmt::Display for BicoloredSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (color, block) in &self.blocks {
            write!(f, "{color:?}{{{}}}", format_block(block))?;
        }
        Ok(())
    }
}

/// `L{6,1}L{9,4,2}R{11,3}R{10,8,5}R{7}`; the ground set is the union.
impl FromStr for BicoloredSetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_groups(s, '{', '}')?
            .into_iter()
            .map(|(prefix, body, at)| {
                let color = match prefix.as_str() {
                    "L" => Color::L,
                    "R" => Color::R,
                    other => {
                        return Err(Error::parse(
                            at,
                            format!("expected color L or R, got '{other}'"),
                        ))
                    }
                };
                Ok((color, parse_values(&body, at)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(|(_, b)| b.len()).sum();
        BicoloredSetPartition::new(n, blocks)
    }
}

/// Maps a `3-12-3` avoider of `[n+1]` to a bicolored partition of `[n]`:
/// `L` blocks from the left-to-right maxima blocks of `π_ℓ`, `R` blocks from
/// the right-to-left maxima blocks of `π_r`.
pub fn av3123_to_bicolored(p: &Permutation) -> Result<BicoloredSetPartition> {
    require_avoids(p.as_slice(), &pattern(&[&[3], &[1, 2], &[3]]))?;
    let (left, right) = p.split_at_max()?;
    let blocks = lmax_blocks(&left)
        .into_iter()
        .map(|b| (Color::L, b))
        .chain(rmax_blocks(&right).into_iter().map(|b| (Color::R, b)))
        .collect();
    BicoloredSetPartition::new(p.len() - 1, blocks)
}

pub fn bicolored_to_av3123(b: &BicoloredSetPartition) -> Permutation {
    let mut word = write_312_word(&b.blocks_of(Color::L));
    word.push(b.n as u32 + 1);
    word.extend(write_123r_word(&b.blocks_of(Color::R)));
    Permutation::from_vec_unchecked(word)
}

/// A set with a `Z₂` label on every element, up to flipping all labels.
///
/// Stored with elements ascending. Standard form has label 0 on the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledBlock {
    elements: Vec<(u32, u8)>,
}

impl LabeledBlock {
    pub fn new(mut elements: Vec<(u32, u8)>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Contract("empty labeled block".into()));
        }
        if let Some(&(v, l)) = elements.iter().find(|&&(_, l)| l > 1) {
            return Err(Error::Contract(format!("label {l} on {v} is not in Z2")));
        }
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Contract("element repeated in labeled block".into()));
        }
        Ok(LabeledBlock { elements })
    }

    pub fn elements(&self) -> &[(u32, u8)] {
        &self.elements
    }

    pub fn values(&self) -> Vec<u32> {
        self.elements.iter().map(|&(v, _)| v).collect()
    }

    pub fn max(&self) -> (u32, u8) {
        *self.elements.last().expect("blocks are nonempty")
    }

    pub fn label_of(&self, v: u32) -> Option<u8> {
        self.elements
            .iter()
            .find(|&&(x, _)| x == v)
            .map(|&(_, l)| l)
    }

    pub fn is_standard(&self) -> bool {
        self.elements[0].1 == 0
    }

    /// The standard representative of the class, and whether labels were flipped.
    pub fn standardized(&self) -> (LabeledBlock, bool) {
        if self.is_standard() {
            return (self.clone(), false);
        }
        let elements = self.elements.iter().map(|&(v, l)| (v, 1 - l)).collect();
        (LabeledBlock { elements }, true)
    }

    /// Maximum first, then the remaining elements in `121`-word order.
    fn display_order(&self) -> Vec<(u32, u8)> {
        let (max, max_label) = self.max();
        let mut out = vec![(max, max_label)];
        out.extend(
            self.elements
                .iter()
                .rev()
                .filter(|&&(v, l)| l == 0 && v != max)
                .copied(),
        );
        out.extend(
            self.elements
                .iter()
                .filter(|&&(v, l)| l == 1 && v != max)
                .copied(),
        );
        out
    }
}

impl fmt::Display for LabeledBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .display_order()
            .iter()
            .map(|(v, l)| format!("{v}:{l}"))
            .collect();
        write!(f, "[{}]", items.join(","))
    }
}

/// Label-0 elements decreasing, then label-1 elements increasing.
pub fn labeled_set_to_av121(block: &LabeledBlock) -> Result<Vec<u32>> {
    if !block.is_standard() {
        return Err(Error::Domain(format!(
            "{block} is not in standard form: its minimum must carry label 0"
        )));
    }
    let mut word: Vec<u32> = block
        .elements
        .iter()
        .rev()
        .filter(|&&(_, l)| l == 0)
        .map(|&(v, _)| v)
        .collect();
    word.extend(
        block
            .elements
            .iter()
            .filter(|&&(_, l)| l == 1)
            .map(|&(v, _)| v),
    );
    Ok(word)
}

/// Entries up to and including the minimum get label 0, the rest label 1.
pub fn av121_to_labeled_set(word: &[u32]) -> Result<LabeledBlock> {
    require_avoids(word, &pattern(&[&[1, 2, 1]]))?;
    let min_at = word
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
        .ok_or_else(|| Error::Contract("empty word".into()))?;
    LabeledBlock::new(
        word.iter()
            .enumerate()
            .map(|(i, &v)| (v, u8::from(i > min_at)))
            .collect(),
    )
}

/// Disjoint standard-labeled blocks inside `[n]`; the uncovered set `Φ` is
/// derived.
///
/// Canonical order is the reading order of the `3-121-3` word: blocks whose
/// maximum is labeled 0 by increasing maximum, then blocks whose maximum is
/// labeled 1 by decreasing maximum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialGPartition {
    n: usize,
    blocks: Vec<LabeledBlock>,
}

impl PartialGPartition {
    /// Blocks not in standard form are replaced by their flipped (standard)
    /// representative, with a warning.
    pub fn new(n: usize, blocks: Vec<LabeledBlock>) -> Result<Self> {
        let plain: Vec<Vec<u32>> = blocks.iter().map(LabeledBlock::values).collect();
        check_blocks(n, &plain, false)?;
        let mut blocks: Vec<LabeledBlock> = blocks
            .into_iter()
            .map(|b| {
                let (std, flipped) = b.standardized();
                if flipped {
                    log::warn!("labeled block {b} flipped to standard form {std}");
                }
                std
            })
            .collect();
        blocks.sort_by_key(|b| match b.max() {
            (m, 0) => (0, m as i64),
            (m, _) => (1, -(m as i64)),
        });
        Ok(PartialGPartition { n, blocks })
    }

    pub fn ground_n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[LabeledBlock] {
        &self.blocks
    }

    /// Elements of `[n]` in no block.
    pub fn phi(&self) -> BTreeSet<u32> {
        let covered: BTreeSet<u32> = self.blocks.iter().flat_map(LabeledBlock::values).collect();
        (1..=self.n as u32)
            .filter(|v| !covered.contains(v))
            .collect()
    }

    /// Every partial `Z₂`-partition of `[n]`: a set partition of `[n+1]`
    /// whose block of `n+1` is `Φ ∪ {n+1}`, with each other block of size `s`
    /// carrying one of its `2^(s-1)` standard labelings.
    pub fn all(n: usize) -> Vec<PartialGPartition> {
        let top = n as u32 + 1;
        let mut out = Vec::new();
        for sp in SetPartition::all(n + 1) {
            let blocks: Vec<&Vec<u32>> = sp.blocks.iter().filter(|b| !b.contains(&top)).collect();
            let mut labelings: Vec<Vec<LabeledBlock>> = vec![Vec::new()];
            for block in blocks {
                let mut asc = block.clone();
                asc.sort_unstable();
                let free = asc.len() - 1;
                let mut next = Vec::new();
                for partial in &labelings {
                    for mask in 0u64..(1 << free) {
                        let mut elements = vec![(asc[0], 0u8)];
                        elements.extend(
                            asc[1..]
                                .iter()
                                .enumerate()
                                .map(|(i, &v)| (v, (mask >> i & 1) as u8)),
                        );
                        let mut extended = partial.clone();
                        extended.push(LabeledBlock::new(elements).expect("valid by construction"));
                        next.push(extended);
                    }
                }
                labelings = next;
            }
            for blocks in labelings {
                out.push(PartialGPartition::new(n, blocks).expect("valid by construction"));
            }
        }
        out
    }
}

impl fmt::Display for PartialGPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{block}")?;
        }
        let phi: Vec<String> = self.phi().iter().map(|v| v.to_string()).collect();
        if !self.blocks.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "phi={{{}}} n={}", phi.join(","), self.n)
    }
}

/// `[7:0][9:0,4:0,2:0,5:1][6:1,1:0] n=9`. `n=` is required; `phi=` is
/// accepted and ignored since it is recomputed.
impl FromStr for PartialGPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (blocks_text, trailer) = match s.rfind(']') {
            Some(i) => s.split_at(i + 1),
            None => ("", s),
        };
        let mut n = None;
        let mut rest = trailer.trim();
        let offset = blocks_text.chars().count();
        while !rest.is_empty() {
            if let Some(after) = rest.strip_prefix("n=") {
                let end = after.find(char::is_whitespace).unwrap_or(after.len());
                let value = &after[..end];
                n = Some(value.parse::<usize>().map_err(|_| {
                    Error::parse(offset + 1, format!("invalid ground size '{value}'"))
                })?);
                rest = after[end..].trim_start();
            } else if let Some(after) = rest.strip_prefix("phi=") {
                let end = after
                    .find('}')
                    .map(|i| i + 1)
                    .ok_or_else(|| Error::parse(offset + 1, "unclosed phi set"))?;
                rest = after[end..].trim_start();
            } else {
                return Err(Error::parse(offset + 1, format!("unexpected '{rest}'")));
            }
        }
        let n = n.ok_or_else(|| Error::parse(s.chars().count().max(1), "missing n="))?;
        let blocks = parse_groups(blocks_text, '[', ']')?
            .into_iter()
            .map(|(_, body, at)| {
                let elements = body
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|item| {
                        let (v, l) = item.split_once(':').ok_or_else(|| {
                            Error::parse(at, format!("expected value:label, got '{item}'"))
                        })?;
                        let v = v.trim().parse::<u32>();
                        let l = l.trim().parse::<u8>();
                        match (v, l) {
                            (Ok(v), Ok(l)) => Ok((v, l)),
                            _ => Err(Error::parse(
                                at,
                                format!("invalid labeled element '{item}'"),
                            )),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                LabeledBlock::new(elements)
            })
            .collect::<Result<Vec<_>>>()?;
        PartialGPartition::new(n, blocks)
    }
}

/// Maps a `3-121-3` avoider of `[n+1]` to a partial `Z₂`-partition of `[n]`.
///
/// Left of the maximum, each left-to-right maxima block `M_j π_j` becomes a
/// labeled block (its maximum gets label 0). Right of it, each right-to-left
/// maxima block `π_j M_j` with `π_j` nonempty becomes a labeled block (its
/// maximum gets label 1); maxima with empty `π_j` stay uncovered.
pub fn av31213_to_gpartition(p: &Permutation) -> Result<PartialGPartition> {
    require_avoids(p.as_slice(), &pattern(&[&[3], &[1, 2, 1], &[3]]))?;
    let (left, right) = split_at_max(p.as_slice())?;
    let mut blocks = Vec::new();
    for word in lmax_blocks(&left) {
        blocks.push(av121_to_labeled_set(&word)?);
    }
    for word in rmax_blocks(&right) {
        if word.len() > 1 {
            blocks.push(av121_to_labeled_set(&word)?);
        }
    }
    PartialGPartition::new(p.len() - 1, blocks)
}

pub fn gpartition_to_av31213(g: &PartialGPartition) -> Permutation {
    let mut left: Vec<Vec<u32>> = Vec::new();
    let mut right: Vec<Vec<u32>> = g.phi().into_iter().map(|v| vec![v]).collect();
    for block in &g.blocks {
        let word = labeled_set_to_av121(block).expect("blocks are kept in standard form");
        match block.max() {
            (_, 0) => left.push(word),
            _ => right.push(word),
        }
    }
    left.sort_by_key(|w| block_max(w));
    right.sort_by_key(|w| std::cmp::Reverse(block_max(w)));
    let mut word = left.concat();
    word.push(g.n as u32 + 1);
    word.extend(right.concat());
    Permutation::from_vec_unchecked(word)
}
