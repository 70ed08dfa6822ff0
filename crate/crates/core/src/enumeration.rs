//! Exhaustive ground truth: avoiders of a set of patterns, their counts per
//! length, and distinguishing witnesses between two patterns.
//!
//! Permutations are generated by prefix extension in lexicographic order. A
//! prefix that already contains an occurrence of some pattern is cut, because
//! that occurrence survives in every completion. Only occurrences ending at
//! the newest entry need checking, since shorter prefixes were already clean.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::{Matcher, Pogp};
use crate::perm::Permutation;

/// Largest permutation length exhaustive operations accept.
pub const DEFAULT_MAX_N: usize = 10;

/// Environment variable that may lower (never raise) [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "POGP_MAX_N";

/// The effective exhaustive-enumeration ceiling.
pub fn max_length() -> usize {
    static CEILING: OnceLock<usize> = OnceLock::new();
    *CEILING.get_or_init(|| {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map_or(DEFAULT_MAX_N, |v| v.min(DEFAULT_MAX_N))
    })
}

pub(crate) fn check_length(n: usize) -> Result<()> {
    let ceiling = max_length();
    if n > ceiling {
        return Err(Error::LimitExceeded {
            requested: n,
            ceiling,
        });
    }
    Ok(())
}

/// Exact sequence `a₀, a₁, …, a_N` of nonnegative integers, read as the
/// coefficients `a_n = n! [xⁿ] F(x)` of an exponential generating function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CountSeq(Vec<BigUint>);

impl CountSeq {
    pub fn new(terms: Vec<BigUint>) -> Self {
        CountSeq(terms)
    }

    pub fn from_u64s(terms: &[u64]) -> Self {
        CountSeq(terms.iter().map(|&t| BigUint::from(t)).collect())
    }

    /// `len` copies of `value`.
    pub fn constant(value: u64, len: usize) -> Self {
        CountSeq(vec![BigUint::from(value); len])
    }

    /// `(1, 0, 0, …)`, the identity of binomial convolution.
    pub fn unit(len: usize) -> Self {
        let mut terms = vec![BigUint::zero(); len];
        if let Some(t) = terms.first_mut() {
            *t = BigUint::one();
        }
        CountSeq(terms)
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<BigUint> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.0.get(n)
    }

    /// The first `len` terms (all of them if there are fewer).
    pub fn truncated(&self, len: usize) -> CountSeq {
        CountSeq(self.0.iter().take(len).cloned().collect())
    }

    /// Drops the first term: `(a₁, a₂, …)`.
    pub fn shifted(&self) -> CountSeq {
        CountSeq(self.0.iter().skip(1).cloned().collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|t| t.to_string()).collect()
    }
}

impl fmt::Display for CountSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(" "))
    }
}

/// Accepts terms separated by commas and/or whitespace.
impl FromStr for CountSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<BigUint>()
                    .map_err(|_| Error::parse(1, format!("invalid term '{t}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(CountSeq)
    }
}

/// Serialized as a list of decimal strings so big terms survive JSON.
impl Serialize for CountSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CountSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<String>::deserialize(deserializer)?;
        terms
            .iter()
            .map(|t| t.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(CountSeq)
    }
}

/// A deduplicated set of canonical patterns with their matchers.
#[derive(Debug, Clone)]
pub struct PatternSet {
    patterns: Vec<Pogp>,
    matchers: Vec<Matcher>,
}

impl PatternSet {
    pub fn new<'a>(pats: impl IntoIterator<Item = &'a Pogp>) -> Self {
        let mut patterns: Vec<Pogp> = pats.into_iter().map(Pogp::canonicalize).collect();
        patterns.sort();
        patterns.dedup();
        let matchers = patterns.iter().map(Pogp::matcher).collect();
        PatternSet { patterns, matchers }
    }

    pub fn patterns(&self) -> &[Pogp] {
        &self.patterns
    }

    pub fn is_avoided_by(&self, word: &[u32]) -> bool {
        !self.matchers.iter().any(|m| m.contains(word))
    }

    /// Some pattern has an occurrence whose last entry is the last entry of `word`.
    fn closes_occurrence(&self, word: &[u32]) -> bool {
        match word.len() {
            0 => false,
            len => self
                .matchers
                .iter()
                .any(|m| m.contains_ending_at(word, len - 1)),
        }
    }
}

/// Lexicographic stream of the avoiders of a pattern set in `S_n`.
#[derive(Debug, Clone)]
pub struct Avoiders {
    set: PatternSet,
    n: usize,
    prune: bool,
    prefix: Vec<u32>,
    used: Vec<bool>,
    /// `cursor[d]`: the next value to try at depth `d`.
    cursor: Vec<u32>,
    done: bool,
}

impl Avoiders {
    fn new(set: PatternSet, n: usize, prune: bool) -> Self {
        Avoiders {
            set,
            n,
            prune,
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor: vec![1; n + 1],
            done: false,
        }
    }

    fn pop(&mut self) {
        match self.prefix.pop() {
            Some(v) => self.used[v as usize] = false,
            None => self.done = true,
        }
    }

    fn rejects(&self) -> bool {
        if self.prune {
            self.set.closes_occurrence(&self.prefix)
        } else {
            self.prefix.len() == self.n && !self.set.is_avoided_by(&self.prefix)
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        while !self.done {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Permutation::from_vec_unchecked(self.prefix.clone());
                self.pop();
                return Some(out);
            }
            let n = self.n as u32;
            let next = (self.cursor[depth]..=n).find(|&v| !self.used[v as usize]);
            match next {
                Some(v) => {
                    self.cursor[depth] = v + 1;
                    self.prefix.push(v);
                    self.used[v as usize] = true;
                    if self.rejects() {
                        self.pop();
                    } else {
                        self.cursor[depth + 1] = 1;
                    }
                }
                None => self.pop(),
            }
        }
        None
    }
}

/// Members of `Av(pats) ∩ S_n`, each once, in lexicographic order.
pub fn avoiders(pats: &[Pogp], n: usize) -> Result<Avoiders> {
    check_length(n)?;
    Ok(Avoiders::new(PatternSet::new(pats), n, true))
}

/// Same stream as [`avoiders`] but filtering complete permutations only.
pub fn avoiders_unpruned(pats: &[Pogp], n: usize) -> Result<Avoiders> {
    check_length(n)?;
    Ok(Avoiders::new(PatternSet::new(pats), n, false))
}

fn count_extensions(set: &PatternSet, n: usize, prefix: &mut Vec<u32>, used: &mut [bool]) -> u64 {
    if prefix.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 1..=n as u32 {
        if used[v as usize] {
            continue;
        }
        prefix.push(v);
        if !set.closes_occurrence(prefix) {
            used[v as usize] = true;
            total += count_extensions(set, n, prefix, used);
            used[v as usize] = false;
        }
        prefix.pop();
    }
    total
}

fn count_from_first(set: &PatternSet, n: usize, first: u32) -> u64 {
    let mut prefix = vec![first];
    if set.closes_occurrence(&prefix) {
        return 0;
    }
    let mut used = vec![false; n + 1];
    used[first as usize] = true;
    count_extensions(set, n, &mut prefix, &mut used)
}

/// `|Av(pats) ∩ S_n|`. The search is split by first entry and the parts run
/// in parallel.
pub fn count_avoiders(pats: &[Pogp], n: usize) -> Result<BigUint> {
    check_length(n)?;
    let set = PatternSet::new(pats);
    if n == 0 {
        return Ok(BigUint::one());
    }
    let total: u64 = (1..=n as u32)
        .into_par_iter()
        .map(|first| count_from_first(&set, n, first))
        .sum();
    Ok(BigUint::from(total))
}

/// Single-threaded [`count_avoiders`].
pub fn count_avoiders_sequential(pats: &[Pogp], n: usize) -> Result<BigUint> {
    check_length(n)?;
    let set = PatternSet::new(pats);
    if n == 0 {
        return Ok(BigUint::one());
    }
    let total: u64 = (1..=n as u32)
        .map(|first| count_from_first(&set, n, first))
        .sum();
    Ok(BigUint::from(total))
}

/// `count_avoiders(pats, n)` for `0 <= n <= max_n`.
pub fn count_sequence(pats: &[Pogp], max_n: usize) -> Result<CountSeq> {
    check_length(max_n)?;
    (0..=max_n)
        .map(|n| count_avoiders(pats, n))
        .collect::<Result<Vec<_>>>()
        .map(CountSeq)
}

/// The lexicographically first permutation of smallest length `<= max_n`
/// lying in exactly one of `Av(p1)`, `Av(p2)`.
pub fn witness_difference(p1: &Pogp, p2: &Pogp, max_n: usize) -> Result<Option<Permutation>> {
    check_length(max_n)?;
    for n in 0..=max_n {
        let mut a = avoiders(std::slice::from_ref(p1), n)?.peekable();
        let mut b = avoiders(std::slice::from_ref(p2), n)?.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(x), None) | (None, Some(x)) => return Ok(Some(x.clone())),
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Equal => {
                        a.next();
                        b.next();
                    }
                    Ordering::Less => return Ok(Some(x.clone())),
                    Ordering::Greater => return Ok(Some(y.clone())),
                },
            }
        }
    }
    Ok(None)
}
