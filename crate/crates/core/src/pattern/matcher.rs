use std::cmp::Ordering;

use super::Pogp;

/// Precompiled occurrence search for one pattern.
///
/// The search places whole contiguous segments as windows, left to right, and
/// checks every strict letter relation as soon as both entries are placed.
/// Works on any word of distinct values; positions are 0-based.
#[derive(Debug, Clone)]
pub struct Matcher {
    len: usize,
    /// `(first letter index, segment length)`.
    segments: Vec<(usize, usize)>,
    /// Letters in segments `s..` (room the remaining segments need).
    suffix_len: Vec<usize>,
    /// For letter `t`: earlier letters `u` with `letters[u] != letters[t]`
    /// and the required ordering of value(u) against value(t).
    checks: Vec<Vec<(usize, Ordering)>>,
}

impl Matcher {
    pub fn new(pat: &Pogp) -> Self {
        let segments: Vec<(usize, usize)> = pat
            .segments()
            .into_iter()
            .map(|r| (r.start, r.len()))
            .collect();
        let mut suffix_len = vec![0; segments.len() + 1];
        for s in (0..segments.len()).rev() {
            suffix_len[s] = suffix_len[s + 1] + segments[s].1;
        }
        let letters = pat.letters();
        let checks = (0..letters.len())
            .map(|t| {
                (0..t)
                    .filter(|&u| letters[u] != letters[t])
                    .map(|u| (u, letters[u].cmp(&letters[t])))
                    .collect()
            })
            .collect();
        Matcher {
            len: letters.len(),
            segments,
            suffix_len,
            checks,
        }
    }

    pub fn pattern_len(&self) -> usize {
        self.len
    }

    pub fn count(&self, word: &[u32]) -> u64 {
        let mut n = 0u64;
        self.search(word, None, &mut |_| {
            n += 1;
            false
        });
        n
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        self.search(word, None, &mut |_| true)
    }

    /// Whether some occurrence uses position `end` for the last letter.
    pub fn contains_ending_at(&self, word: &[u32], end: usize) -> bool {
        self.search(word, Some(end), &mut |_| true)
    }

    /// First occurrence, as 0-based positions, in lexicographic order.
    pub fn first(&self, word: &[u32]) -> Option<Vec<usize>> {
        let mut found = None;
        self.search(word, None, &mut |pos| {
            found = Some(pos.to_vec());
            true
        });
        found
    }

    /// Calls `visit` for every occurrence until it returns true; returns
    /// whether the search was stopped.
    pub fn search<F>(&self, word: &[u32], anchor_end: Option<usize>, visit: &mut F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if let Some(end) = anchor_end {
            if end >= word.len() {
                return false;
            }
        }
        let mut pos = vec![0usize; self.len];
        self.place(word, 0, 0, anchor_end, &mut pos, visit)
    }

    fn place<F>(
        &self,
        word: &[u32],
        s: usize,
        min_start: usize,
        anchor_end: Option<usize>,
        pos: &mut [usize],
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if s == self.segments.len() {
            return visit(pos);
        }
        let (first, len) = self.segments[s];
        let limit = anchor_end.map_or(word.len(), |e| e + 1);
        if min_start + self.suffix_len[s] > limit {
            return false;
        }
        let last_segment = s + 1 == self.segments.len();
        let (lo, hi) = match anchor_end {
            Some(e) if last_segment => (e + 1 - len, e + 1 - len),
            _ => (min_start, limit - self.suffix_len[s]),
        };
        if lo < min_start {
            return false;
        }
        'window: for w in lo..=hi {
            for t in 0..len {
                let letter = first + t;
                pos[letter] = w + t;
                let v = word[w + t];
                for &(u, ord) in &self.checks[letter] {
                    if word[pos[u]].cmp(&v) != ord {
                        continue 'window;
                    }
                }
            }
            if self.place(word, s + 1, w + len, anchor_end, pos, visit) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    /// Every increasing index tuple, checked letter pair by letter pair.
    fn brute_count(word: &[u32], pat: &Pogp) -> u64 {
        let n = word.len();
        let m = pat.len();
        let mut count = 0;
        let mut idx: Vec<usize> = (0..m).collect();
        if m > n {
            return 0;
        }
        loop {
            let adjacent = pat
                .dashes()
                .iter()
                .enumerate()
                .all(|(g, &d)| d || idx[g + 1] == idx[g] + 1);
            let ordered = (0..m).all(|a| {
                (0..m).all(|b| pat.letters()[a] <= pat.letters()[b] || word[idx[a]] > word[idx[b]])
            });
            if adjacent && ordered {
                count += 1;
            }
            // next combination
            let mut i = m;
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                if idx[i] < n - m + i {
                    idx[i] += 1;
                    for j in i + 1..m {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let pats = [
            "1", "12", "1-2", "21-3", "3-12-3", "3-121-3", "11-22", "1-1", "212", "2-1-2",
            "13-2-2", "4-132-5",
        ];
        for text in pats {
            let pat: Pogp = text.parse().unwrap();
            let m = pat.matcher();
            for n in 0..=6 {
                for p in Permutation::all(n) {
                    assert_eq!(
                        m.count(p.as_slice()),
                        brute_count(p.as_slice(), &pat),
                        "{text} in {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn anchored_search_matches_last_position() {
        let pat: Pogp = "2-13".parse().unwrap();
        let m = pat.matcher();
        for p in Permutation::all(6) {
            let w = p.as_slice();
            for end in 0..w.len() {
                let mut expected = false;
                m.search(w, None, &mut |pos| {
                    expected |= *pos.last().unwrap() == end;
                    false
                });
                assert_eq!(m.contains_ending_at(w, end), expected, "{p} end {end}");
            }
        }
    }

    #[test]
    fn first_is_lexicographically_smallest() {
        let pat: Pogp = "2-1".parse().unwrap();
        assert_eq!(pat.matcher().first(&[1, 3, 2, 4]), Some(vec![1, 2]));
        assert_eq!(pat.matcher().first(&[1, 2, 3]), None);
    }
}
