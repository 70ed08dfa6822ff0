use pogp::bijections::{
    av31213_to_gpartition, gpartition_to_av31213, partition_to_av312, BicoloredSetPartition,
    PartialGPartition, SetPartition,
};
use pogp::enumeration::{count_sequence, CountSeq};
use pogp::pattern::{avoids, Pogp};
use pogp::series::{bell, bicolored_bell, k_sigma_k_counts};

#[test]
fn object_counts_follow_the_recurrences() {
    let parts: Vec<u64> = (0..=8).map(|n| SetPartition::all(n).len() as u64).collect();
    assert_eq!(CountSeq::from_u64s(&parts), bell(8));
    let bic: Vec<u64> = (0..=7).map(|n| BicoloredSetPartition::all(n).len() as u64).collect();
    assert_eq!(CountSeq::from_u64s(&bic), bicolored_bell(7));
    let f121 = count_sequence(&["121".parse().unwrap()], 6).unwrap();
    let gps: Vec<u64> = (0..=7).map(|n| PartialGPartition::all(n).len() as u64).collect();
    assert_eq!(CountSeq::from_u64s(&gps), k_sigma_k_counts(&f121).shifted().truncated(8));
}

#[test]
fn flipped_labels_name_the_same_object() {
    let standard: PartialGPartition = "[6:1,1:0] n=7".parse().unwrap();
    let flipped: PartialGPartition = "[6:0,1:1] n=7".parse().unwrap();
    assert_eq!(standard, flipped);
    let p = gpartition_to_av31213(&flipped);
    assert_eq!(av31213_to_gpartition(&p).unwrap(), standard);
}

#[test]
fn small_blocks_mean_short_descents() {
    for k in 2..=4usize {
        let run: Vec<u32> = (1..k as u32).rev().collect();
        let pat = Pogp::from_segments(&[&[k as u32][..], &run]).unwrap();
        for n in 0..=7 {
            for sp in SetPartition::all(n) {
                let p = partition_to_av312(&sp);
                assert_eq!(sp.max_block_size() < k, avoids(&p, &pat), "{sp} k={k}");
            }
        }
    }
}
