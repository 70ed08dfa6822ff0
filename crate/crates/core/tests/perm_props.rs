use proptest::prelude::*;

use pogp::perm::{ins, lmax, rmax, split_at_max, Permutation};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

proptest! {
    #[test]
    fn lmax_decomposition_recomposes(p in permutation(12)) {
        let d = p.lmax_decomposition();
        prop_assert_eq!(d.concat(), p.as_slice().to_vec());
        for (m, block) in &d.items {
            prop_assert!(block.iter().all(|v| v < m));
        }
        prop_assert_eq!(d.maxima().into_iter().collect::<std::collections::BTreeSet<_>>(), lmax(p.as_slice()));
    }

    #[test]
    fn rmax_decomposition_recomposes(p in permutation(12)) {
        let d = p.rmax_decomposition();
        prop_assert_eq!(d.concat(), p.as_slice().to_vec());
        prop_assert_eq!(d.maxima().into_iter().collect::<std::collections::BTreeSet<_>>(), rmax(p.as_slice()));
    }

    #[test]
    fn appending_a_new_maximum(p in permutation(10)) {
        let n = p.len() + 1;
        let q = p.ins(n, n).unwrap();
        let (left, right) = split_at_max(q.as_slice()).unwrap();
        prop_assert_eq!(left, p.as_slice().to_vec());
        prop_assert!(right.is_empty());
    }

    #[test]
    fn split_respects_maxima(p in permutation(12).prop_filter("nonempty", |p| !p.is_empty())) {
        let n = p.len() as u32;
        let (left, right) = split_at_max(p.as_slice()).unwrap();
        let mut l = lmax(&left);
        l.insert(n);
        let mut r = rmax(&right);
        r.insert(n);
        prop_assert_eq!(lmax(p.as_slice()), l);
        prop_assert_eq!(rmax(p.as_slice()), r);
    }

    #[test]
    fn psi_inverts_and_transports_maxima(p in permutation(14)) {
        let q = p.psi();
        prop_assert_eq!(q.psi_inverse(), p.clone());
        prop_assert_eq!(lmax(p.as_slice()), rmax(q.as_slice()));
    }

    #[test]
    fn text_form_round_trips(p in permutation(14)) {
        let back: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn psi_is_a_bijection_up_to_eight() {
    for n in 0..=8 {
        let mut images: Vec<Permutation> = Permutation::all(n).map(|p| p.psi()).collect();
        let total = images.len();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), total, "n={n}");
    }
}

#[test]
fn word_level_insertion() {
    assert_eq!(ins(&[2, 1], 3, 2).unwrap(), vec![2, 3, 1]);
    assert_eq!(ins(&[2, 1], 1, 1).unwrap(), vec![1, 3, 2]);
    assert!(ins(&[2, 1], 4, 1).is_err());
}
