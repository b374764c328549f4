use parkgram::algebra::{int, rat};
use parkgram::counting::spec_compositions;
use parkgram::parking::{
    ab_threshold_vector, ab_to_u_pf, basic_block_weights, decompose_blocks, dyck_path_of,
    enumerate_u_parking, is_ab_parking, is_u_parking, is_x_parking, normalize_block, ones_count,
    u_pf_to_ab, LatticePath, PFSeq, ThresholdVector, WeightVector,
};
use parkgram::Limits;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tv(u: &[i64]) -> ThresholdVector {
    ThresholdVector::from_integers(u).unwrap()
}

fn all(u: &ThresholdVector) -> Vec<PFSeq> {
    enumerate_u_parking(u, &Limits::DEFAULT).unwrap()
}

fn permutations(xs: &[u32]) -> Vec<Vec<u32>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

#[test]
fn enumeration_agrees_with_predicate() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for u in [
        tv(&[1, 2, 3, 4]),
        tv(&[1, 1, 3, 3, 4]),
        tv(&[2, 2, 5]),
        ab_threshold_vector(4, 7, 7),
    ] {
        let found = all(&u);
        for c in &found {
            assert!(is_u_parking(c, &u).unwrap());
        }
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(sorted, found, "lexicographic order");
        let max = u
            .values()
            .last()
            .unwrap()
            .to_integer()
            .try_into()
            .unwrap_or(1u32)
            + 1;
        let mut rejected = 0;
        while rejected < 200 {
            let c = PFSeq::new((0..u.len()).map(|_| rng.gen_range(1..=max)).collect()).unwrap();
            if found.binary_search(&c).is_err() {
                assert!(!is_u_parking(&c, &u).unwrap(), "{c}");
                rejected += 1;
            }
        }
    }
}

#[test]
fn parking_is_closed_under_permutation() {
    for u in [
        tv(&[1, 2, 3, 4, 5]),
        tv(&[1, 1, 2, 4, 4]),
        ab_threshold_vector(3, 5, 5),
    ] {
        let found = all(&u);
        for c in &found {
            for p in permutations(c.entries()) {
                assert!(is_u_parking(&PFSeq::new(p).unwrap(), &u).unwrap());
            }
        }
    }
}

#[test]
fn coprime_counts() {
    for (a, b) in [(2u64, 3u64), (3, 2), (3, 4), (4, 7), (5, 3)] {
        let n = all(&ab_threshold_vector(a, b, b as usize)).len() as u64;
        assert_eq!(n, a.pow(b as u32 - 1), "({a},{b})");
    }
}

#[test]
fn thresholds_degenerate_to_prefix_sums() {
    for (a, b) in [(3u64, 2u64), (4, 3), (5, 2), (7, 3)] {
        let x = WeightVector::basic(int(1), rat(a as i64 - 1, b as i64), b as usize).unwrap();
        assert_eq!(
            x.thresholds().unwrap(),
            ab_threshold_vector(a, b, b as usize),
            "({a},{b})"
        );
    }
}

#[test]
fn block_decomposition_over_full_enumeration() {
    let (a, b) = (3u64, 2u64);
    for k in 1..=2u64 {
        let u = ab_threshold_vector(k * a, k * b, (k * b) as usize);
        let found = all(&u);
        if k == 2 {
            assert_eq!(found.len(), 243);
        }
        let specs: Vec<Vec<u64>> = spec_compositions(k, b)
            .iter()
            .map(|j| j.parts().to_vec())
            .collect();
        for c in &found {
            let d = decompose_blocks(c, a, b, k).unwrap();
            let mut idx = d.positions.concat();
            idx.sort_unstable();
            assert_eq!(idx, (0..c.len()).collect::<Vec<_>>());
            assert!(specs.contains(&d.lengths.parts().to_vec()));
            assert_eq!(ones_count(c), ones_count(&d.blocks[0]));
            let mut prefix = 0;
            for (t, block) in d.blocks.iter().enumerate() {
                let norm = normalize_block(block, t as u64 + 1, prefix, a, b).unwrap();
                assert!(is_x_parking(&norm, &basic_block_weights(a, b, norm.len())).unwrap());
                prefix += block.len() as u64;
            }
        }
    }
}

#[test]
fn lattice_paths_round_trip() {
    for (a, b) in [(2u64, 3u64), (3, 2), (4, 7)] {
        for c in all(&ab_threshold_vector(a, b, b as usize)) {
            let ab = u_pf_to_ab(&c);
            assert!(is_ab_parking(&ab, a, b).unwrap());
            assert_eq!(ab_to_u_pf(&ab), c);
            let path = dyck_path_of(&ab, a, b).unwrap();
            let reparsed: LatticePath = path.to_string().parse().unwrap();
            assert_eq!(reparsed.to_parking().unwrap(), ab);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sequence_text_round_trip(xs in prop::collection::vec(1u32..50, 0..10)) {
        let c = PFSeq::new(xs).unwrap();
        let back: PFSeq = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn shift_round_trip(xs in prop::collection::vec(1u32..50, 0..10)) {
        let c = PFSeq::new(xs).unwrap();
        prop_assert_eq!(ab_to_u_pf(&u_pf_to_ab(&c)), c);
    }

    #[test]
    fn sorting_preserves_parking(xs in prop::collection::vec(1u32..6, 1..7)) {
        let c = PFSeq::new(xs).unwrap();
        let u = ab_threshold_vector(5, 4, c.len());
        let s = PFSeq::new(c.sorted()).unwrap();
        prop_assert_eq!(is_u_parking(&c, &u).unwrap(), is_u_parking(&s, &u).unwrap());
    }
}
