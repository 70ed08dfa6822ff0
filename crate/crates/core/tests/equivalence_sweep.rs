//! Single-dash classification against the oracle and the insertion test.

use pogp::equivalence::{
    brute_equivalent, classify_single_dash, equivalent, insertion_counterexample,
    insertion_criterion,
};
use pogp::pattern::Pogp;

/// Canonical words of length 2..=4 over {1,2,3}.
fn words() -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for len in 2..=4u32 {
        for code in 0..3u32.pow(len) {
            let w: Vec<u32> = (0..len).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
            if Pogp::contiguous(w.clone()).unwrap().is_canonical() {
                out.push(w);
            }
        }
    }
    out
}

fn dashed(word: &[u32], mask: u32) -> Pogp {
    let dashes = (0..word.len() - 1).map(|i| mask >> i & 1 == 1).collect();
    Pogp::new(word.to_vec(), dashes).unwrap()
}

#[test]
fn single_dash_toggles_agree_with_oracle_and_insertion() {
    let mut toggles = 0;
    for w in words() {
        let n = w.len() + 2;
        for mask in 0..1u32 << (w.len() - 1) {
            let p = dashed(&w, mask);
            for gap in 1..w.len() {
                if !p.has_dash(gap).unwrap() {
                    continue;
                }
                let q = p.with_dash(gap, false).unwrap();
                let case = classify_single_dash(&p, gap).unwrap();
                assert_eq!(case, classify_single_dash(&q, gap).unwrap(), "{p} / {q}");
                let oracle = brute_equivalent(&p, &q, n).unwrap();
                assert_eq!(case.is_some(), oracle.equivalent, "{p} vs {q}: {case:?}");
                assert_eq!(
                    insertion_criterion(&p, gap).unwrap(),
                    oracle.equivalent,
                    "{p} gap {gap}"
                );
                toggles += 1;
            }
        }
    }
    assert!(toggles > 300);
}

#[test]
fn dashings_with_equal_segment_lengths_transport_equivalence() {
    // If some split of the word into |σ₁|,|σ₂| is equivalent to the
    // undashed word, so is the single-dash split with the same lengths.
    for w in words() {
        let solid = Pogp::contiguous(w.clone()).unwrap();
        for gap in 1..w.len() {
            let r = solid.with_dash(gap, true).unwrap();
            let any_equivalent = (0..1u32 << (w.len() - 1))
                .map(|m| dashed(&w, m))
                .filter(|q| q.segments().first().map(|s| s.len()) == Some(gap))
                .any(|q| {
                    brute_equivalent(&q, &solid, w.len() + 2)
                        .unwrap()
                        .equivalent
                });
            if any_equivalent {
                assert!(
                    brute_equivalent(&r, &solid, w.len() + 2)
                        .unwrap()
                        .equivalent,
                    "{r} vs {solid}"
                );
            }
        }
    }
}

#[test]
fn classification_traces_are_valid_chains() {
    for w in words() {
        for a in 0..1u32 << (w.len() - 1) {
            for b in 0..1u32 << (w.len() - 1) {
                let (p, q) = (dashed(&w, a), dashed(&w, b));
                let v = equivalent(&p, &q).unwrap();
                if !v.equivalent {
                    assert!(v.case_trace.is_empty());
                    continue;
                }
                let mut cur = p.clone();
                for step in &v.case_trace {
                    assert_eq!(step.from, cur);
                    assert_eq!(
                        step.from
                            .with_dash(step.gap, !step.from.has_dash(step.gap).unwrap())
                            .unwrap(),
                        step.to
                    );
                    cur = step.to.clone();
                }
                assert_eq!(cur, q);
            }
        }
    }
}

#[test]
fn single_insertions_miss_the_two_entry_family() {
    let p: Pogp = "11-22".parse().unwrap();
    assert_eq!(insertion_counterexample(&p, 2, 1).unwrap(), None);
    let w = insertion_counterexample(&p, 2, 2).unwrap().unwrap();
    assert_eq!(w.len(), 6);
}
