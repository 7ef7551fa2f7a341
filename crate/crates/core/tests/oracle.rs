use num_bigint::BigUint;

use parkpat::oracle::{brute_pf, brute_pk, brute_pk_with, verify_all, Family, BRUTE_LIMIT};
use parkpat::permutation::PatternSet;
use parkpat::Error;

fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}

#[test]
fn small_values() {
    assert_eq!(brute_pk(3, &set("123")).unwrap(), 10u32.into());
    assert_eq!(brute_pk(4, &set("321")).unwrap(), 102u32.into());
    assert_eq!(brute_pk(2, &set("123,132,213,231,312,321")).unwrap(), 3u32.into());
    assert_eq!(brute_pf(4, &set("312,321")).unwrap(), 63u32.into());
    assert_eq!(brute_pf(5, &set("123,213")).unwrap(), 90u32.into());
    assert_eq!(brute_pf(3, &set("12")).unwrap(), 1u32.into());
}

#[test]
fn empty_set_counts_everything() {
    for n in 1..=7usize {
        assert_eq!(brute_pk(n, &PatternSet::empty()).unwrap(), BigUint::from(n + 1).pow(n as u32 - 1));
    }
}

#[test]
fn shard_order_is_irrelevant() {
    for s in PatternSet::s3_subsets().iter().step_by(7) {
        assert_eq!(brute_pk_with(6, s, false).unwrap(), brute_pk_with(6, s, true).unwrap());
    }
}

#[test]
fn refuses_above_the_limit() {
    assert_eq!(brute_pk(BRUTE_LIMIT + 1, &set("123")), Err(Error::TooLarge { n: BRUTE_LIMIT + 1, limit: BRUTE_LIMIT }));
}

#[test]
fn every_pairing_agrees() {
    for (n, families) in [(7, vec![Family::Pk]), (6, vec![Family::Pf]), (5, vec![Family::Classes])] {
        let reports = verify_all(n, &families).unwrap();
        assert!(!reports.is_empty());
        for r in reports {
            assert!(r.agree, "{r:?}");
        }
    }
}
