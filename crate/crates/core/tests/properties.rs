use num_bigint::BigUint;
use proptest::prelude::*;

use parkpat::arith::fuss_catalan;
use parkpat::catalan::{enumerate_paths, m_narayana, path_to_increasing_pf, LatticePath};
use parkpat::oracle::{brute_pf, parking_permutation_census};
use parkpat::parking::{
    enumerate_block_avoiding, enumerate_parking_functions, format_blocks, parse_blocks, ParkingFunction,
};
use parkpat::permutation::{all_permutations, avoidance_class, contains, s3, PatternSet, Permutation};

fn pf_total(n: usize) -> BigUint {
    if n == 0 {
        BigUint::from(1u32)
    } else {
        BigUint::from(n + 1).pow(n as u32 - 1)
    }
}

#[test]
fn ell_weights_sum_to_all_parking_functions() {
    for n in 0..=7 {
        let s: BigUint = all_permutations(n).iter().map(|p| p.ell_weight()).sum();
        assert_eq!(s, pf_total(n), "n={n}");
    }
}

#[test]
fn ell_weight_counts_parking_functions_per_permutation() {
    for n in 1..=6 {
        let census = parking_permutation_census(n).unwrap();
        assert_eq!(census.len(), (1..=n).product::<usize>());
        for (word, count) in census {
            let p = Permutation::new(word.iter().map(|&x| x as usize).collect()).unwrap();
            assert_eq!(p.ell_weight(), BigUint::from(count), "{p}");
        }
    }
}

#[test]
fn avoidance_of_a_union_is_an_intersection() {
    let singles: Vec<PatternSet> = s3().into_iter().map(|p| PatternSet::new([p])).collect();
    for n in 0..=7 {
        let classes: Vec<Vec<Permutation>> = singles.iter().map(|p| avoidance_class(n, p)).collect();
        for (i, p) in singles.iter().enumerate() {
            for (j, q) in singles.iter().enumerate() {
                let both = avoidance_class(n, &p.union(q));
                let inter: Vec<_> = classes[i].iter().filter(|x| classes[j].contains(x)).cloned().collect();
                assert_eq!(both, inter);
            }
        }
    }
}

#[test]
fn parking_function_round_trips() {
    for n in 0..=6 {
        let all = enumerate_parking_functions(n);
        assert_eq!(BigUint::from(all.len()), pf_total(n));
        for f in &all {
            let blocks = f.to_blocks();
            assert_eq!(&ParkingFunction::from_blocks(&blocks).unwrap(), f);
            assert_eq!(&parse_blocks(&format_blocks(&blocks), 1).unwrap(), &blocks);
            assert_eq!(&f.to_string().parse::<ParkingFunction>().unwrap(), f);
            assert_eq!(f.block_permutation().as_slice(), blocks.concat().as_slice());
        }
        if n <= 5 {
            assert_eq!(enumerate_block_avoiding(n, &PatternSet::empty()), all);
        }
    }
}

#[test]
fn block_search_agrees_with_brute_force() {
    for set in PatternSet::s3_subsets() {
        for n in 1..=5 {
            let got = enumerate_block_avoiding(n, &set).len();
            assert_eq!(BigUint::from(got), brute_pf(n, &set).unwrap(), "{set} n={n}");
        }
    }
}

#[test]
fn path_counts_and_bijections() {
    for m in 1..=3 {
        for n in 0..=7 {
            let paths = enumerate_paths(n, m);
            assert_eq!(BigUint::from(paths.len()), fuss_catalan(n, m));
            for k in 0..=n {
                let with_k = paths.iter().filter(|p| p.peak_count() == k).count();
                assert_eq!(BigUint::from(with_k), m_narayana(n, k, m), "n={n} k={k} m={m}");
            }
            for p in &paths {
                let prefs = p.to_increasing_parking();
                assert_eq!(&LatticePath::from_increasing_parking(&prefs, m).unwrap(), p);
                assert_eq!(p.ascent_word().iter().sum::<usize>(), n);
            }
        }
    }
}

#[test]
fn dyck_path_decompositions_invert() {
    for n in 1..=8 {
        for p in enumerate_paths(n, 1) {
            let (k, parts) = p.canonical_decomposition().unwrap();
            assert_eq!(LatticePath::from_decomposition(k, &parts).unwrap(), p);
            assert!(path_to_increasing_pf(&p).is_ok());
            let w = p.ascent_word();
            if w.len() >= 2 {
                let (i, q) = p.delete_first_peak().unwrap();
                assert_eq!(q.size(), n - i);
                assert_eq!(q.insert_first_peak(i, w[0]).unwrap(), p);
            } else {
                assert!(p.delete_first_peak().is_err());
            }
        }
    }
}

fn permutation_strategy(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

fn standardize(word: &[usize]) -> Vec<usize> {
    word.iter().map(|&x| 1 + word.iter().filter(|&&y| y < x).count()).collect()
}

fn pick(word: &[usize], mask: u32) -> Vec<usize> {
    let chosen: Vec<usize> = word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
    standardize(&chosen)
}

proptest! {
    #[test]
    fn containment_is_transitive(a in permutation_strategy(8), m1 in any::<u32>(), m2 in any::<u32>()) {
        let b = pick(&a, m1);
        let c = pick(&b, m2);
        prop_assert!(contains(&a, &b));
        prop_assert!(contains(&b, &c));
        prop_assert!(contains(&a, &c));
    }

    #[test]
    fn avoiding_a_union_means_avoiding_both(a in permutation_strategy(7), x in 0usize..63, y in 0usize..63) {
        let sets = PatternSet::s3_subsets();
        let p = Permutation::new(a).unwrap();
        let (s, t) = (&sets[x], &sets[y]);
        prop_assert_eq!(p.avoids(&s.union(t)), p.avoids(s) && p.avoids(t));
    }

    #[test]
    fn direct_and_skew_sums_contain_their_parts(a in permutation_strategy(5), b in permutation_strategy(4)) {
        let (p, q) = (Permutation::new(a).unwrap(), Permutation::new(b).unwrap());
        for s in [p.direct_sum(&q), p.skew_sum(&q)] {
            prop_assert!(s.contains(&p));
            prop_assert!(s.contains(&q));
        }
    }
}
