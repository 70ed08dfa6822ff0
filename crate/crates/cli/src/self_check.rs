//! Reference values reproduced end to end. `run` returns the table and the
//! number of failed rows.

use pogp::enumeration::{count_sequence, CountSeq};
use pogp::equivalence::{brute_equivalent, equivalent};
use pogp::pattern::{avoids, count_occurrences, Pogp};
use pogp::perm::{lmax, Permutation};

fn pat(s: &str) -> Pogp {
    s.parse().expect("reference pattern")
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("reference permutation")
}

fn sequence(p: &str, max_n: usize, expected: &[u64]) -> bool {
    count_sequence(&[pat(p)], max_n).ok() == Some(CountSeq::from_u64s(expected))
}

fn shifted(p: &str, expected: &[u64]) -> bool {
    count_sequence(&[pat(p)], expected.len())
        .map(|s| s.shifted() == CountSeq::from_u64s(expected))
        .unwrap_or(false)
}

fn same_avoiders(a: &str, b: &str) -> bool {
    let (a, b) = (pat(a), pat(b));
    matches!(equivalent(&a, &b), Ok(v) if v.equivalent)
        && matches!(brute_equivalent(&a, &b, 8), Ok(v) if v.equivalent)
}

fn separates(a: &str, b: &str, w: &str) -> bool {
    let w = perm(w);
    !avoids(&w, &pat(a)) && avoids(&w, &pat(b))
}

pub fn run() -> (String, usize) {
    let rows: Vec<(&str, bool)> = vec![
        (
            "LMAX(637529184) = {6,7,9}",
            lmax(perm("637529184").as_slice()).into_iter().eq([6, 7, 9]),
        ),
        (
            "psi(637529184) = 184952736",
            perm("637529184").psi() == perm("184952736"),
        ),
        (
            "psi(631879542) = 542978316",
            perm("631879542").psi() == perm("542978316"),
        ),
        (
            "21-3 occurs once in 3124",
            count_occurrences(&perm("3124"), &pat("21-3")) == 1u32.into(),
        ),
        (
            "Av(3-12): Bell numbers",
            sequence("3-12", 8, &[1, 1, 2, 5, 15, 52, 203, 877, 4140]),
        ),
        (
            "Av(2-3-1): Catalan numbers",
            sequence("2-3-1", 8, &[1, 1, 2, 5, 14, 42, 132, 429, 1430]),
        ),
        (
            "Av(121): 2^(n-1)",
            sequence("121", 9, &[1, 1, 2, 4, 8, 16, 32, 64, 128, 256]),
        ),
        (
            "Av(3-12-3): bicolored partitions",
            shifted("3-12-3", &[1, 2, 6, 22, 94, 454]),
        ),
        (
            "Av(3-121-3): Dowling numbers",
            shifted("3-121-3", &[1, 2, 6, 24, 116]),
        ),
        (
            "3-121-3 linearizes to four patterns",
            pat("3-121-3")
                .linearize()
                .into_iter()
                .eq(["4-132-5", "4-231-5", "5-132-4", "5-231-4"].map(pat)),
        ),
        ("Av(1-2) = Av(12)", same_avoiders("1-2", "12")),
        ("Av(2-1-3) = Av(2-13)", same_avoiders("2-1-3", "2-13")),
        ("Av(2-1-2) = Av(21-2)", same_avoiders("2-1-2", "21-2")),
        ("Av(21-2) = Av(212)", same_avoiders("21-2", "212")),
        ("Av(12-12) = Av(1-2-12)", same_avoiders("12-12", "1-2-12")),
        (
            "Av(1-2-12) = Av(1-2-1-2)",
            same_avoiders("1-2-12", "1-2-1-2"),
        ),
        (
            "Av(1-2-1-2) = Av(1-21-2)",
            same_avoiders("1-2-1-2", "1-21-2"),
        ),
        (
            "4132 separates 3-2-1 / 32-1",
            separates("3-2-1", "32-1", "4132"),
        ),
        (
            "3241 separates 3-2-1 / 3-21",
            separates("3-2-1", "3-21", "3241"),
        ),
        (
            "13542 separates 1-3-2-2 / 13-2-2",
            separates("1-3-2-2", "13-2-2", "13542"),
        ),
        (
            "3124 separates 21-3 / 213",
            separates("21-3", "213", "3124"),
        ),
        (
            "51243 separates 31-3-2 / 313-2",
            separates("31-3-2", "313-2", "51243"),
        ),
        (
            "1342 separates 1-32 / 132",
            separates("1-32", "132", "1342"),
        ),
        (
            "14523 separates 1-31-2 / 131-2",
            separates("1-31-2", "131-2", "14523"),
        ),
        (
            "236145 separates 11-22 / 1122",
            separates("11-22", "1122", "236145"),
        ),
    ];
    let failures = rows.iter().filter(|(_, ok)| !ok).count();
    let table = rows
        .iter()
        .map(|(name, ok)| format!("{}  {name}", if *ok { "PASS" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    (table, failures)
}
