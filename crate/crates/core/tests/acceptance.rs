//! One line per acceptance criterion. All comparisons are exact; the only
//! tolerances are the wall-clock budgets printed next to each line.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use parkpat::arith::{catalan, fuss_catalan};
use parkpat::bijections::{
    clusters_123_132, clusters_123_213, enumerate_trees, phi_123_132, phi_123_213, Family, Kind132, Kind213,
    OrderedTree,
};
use parkpat::catalan::{enumerate_paths, m_narayana, LatticePath};
use parkpat::counting::{generic_weighted_pk, pf312321_closed_form, pk_count, pk_sum_over_paths, PathWeight};
use parkpat::generalized::{metasylvester_mpark, metasylvester_multipark, ClassFamily, DEFAULT_PATH_CAP};
use parkpat::identities::{chini_residual, first_nonzero, lagrange_mismatch, metasylvester_identity};
use parkpat::oracle::{brute_pf, brute_pk_many, class_count_by_evaluations, parking_permutation_census};
use parkpat::parking::{enumerate_block_avoiding, enumerate_parking_functions, parse_blocks, ParkingFunction};
use parkpat::permutation::{all_permutations, avoidance_class, PatternSet, Permutation};
use parkpat::series::{check_identity, PowerSeries};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut values = 0;
    for (set, row) in common::PK_ROWS {
        let p: PatternSet = set.parse().map_err(|e| format!("{e}"))?;
        for n in 1..=8 {
            let got = pk_count(n, &p).value;
            ensure(got == row[n - 1].into(), || format!("pk_{n}({set}) = {got}, table {}", row[n - 1]))?;
            values += 1;
        }
    }
    Ok(format!("{} rows, {values} values", common::PK_ROWS.len()))
}

fn criterion_2() -> Outcome {
    let sets = PatternSet::s3_subsets();
    for n in 1..=8 {
        let brute = brute_pk_many(n, &sets).map_err(|e| e.to_string())?;
        for (set, b) in sets.iter().zip(&brute) {
            let d = pk_count(n, set).value;
            let g = generic_weighted_pk(n, set);
            ensure(*b == d && d == g, || format!("pk_{n}({set}): brute {b}, dispatch {d}, weighted {g}"))?;
        }
    }
    Ok(format!("{} sets, n = 1..=8", sets.len()))
}

fn criterion_3() -> Outcome {
    let set: PatternSet = "312,321".parse().unwrap();
    for n in 1..=8 {
        let want = BigUint::from(common::PF_312_321[n - 1]);
        let closed = pf312321_closed_form(n);
        let paths = pk_sum_over_paths(n, PathWeight::Pf312321);
        ensure(closed == want && paths == want, || format!("n={n}: closed {closed}, paths {paths}, table {want}"))?;
        if n <= 7 {
            let brute = brute_pf(n, &set).map_err(|e| e.to_string())?;
            ensure(brute == want, || format!("n={n}: brute force {brute}, table {want}"))?;
        }
    }
    Ok("closed form and path sum n <= 8, brute force n <= 7".into())
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for family in Family::ALL {
        for n in 0..=9 {
            let fs = enumerate_block_avoiding(n, &family.patterns());
            let trees = enumerate_trees(n + 1, family.tree_filter());
            let expected = match family {
                Family::P123_132 => parkpat::counting::odd_root_tree_count(n + 1),
                Family::P123_213 if n == 0 => BigUint::from(1u32),
                Family::P123_213 => catalan(n + 1) - catalan(n),
            };
            ensure(BigUint::from(trees.len()) == expected, || format!("{family}: {} trees for n={n}", trees.len()))?;
            ensure(fs.len() == trees.len(), || format!("{family} n={n}: {} functions, {} trees", fs.len(), trees.len()))?;
            let mut images = std::collections::HashSet::new();
            for f in &fs {
                let t = family.forward(f).map_err(|e| format!("{family} {f}: {e}"))?;
                let back = family.backward(&t).map_err(|e| format!("{family} {t}: {e}"))?;
                ensure(&back == f, || format!("{family}: {f} -> {t} -> {back}"))?;
                images.insert(t);
                checked += 1;
            }
            ensure(images.len() == trees.len(), || format!("{family} n={n}: image has {} trees", images.len()))?;
        }
    }
    let f25 = pf_from("({24},{23,25},{21},{},{20},{19,22},{17},{16,18},{15},{14},{},{13},{12},{10},{9},{8,11},{6},{5,7},{3},{},{2},{1},{},{4},{})");
    let t25: OrderedTree = ["(", "()", "((()(())()))", "(", "((()(())((()))))", "((()))", "()", "((()(())()))", ")", ")"]
        .concat()
        .parse()
        .unwrap();
    let kinds: Vec<_> = clusters_123_132(&f25.to_blocks()).unwrap().into_iter().map(|c| c.kind).collect();
    use Kind132::*;
    ensure(kinds == [Jump, Jump, Jump, Extend, Jump, Jump, Branch], || format!("size 25 clusters {kinds:?}"))?;
    let got = phi_123_132(&f25).map_err(|e| e.to_string())?.shape();
    ensure(got == t25, || format!("size 25 tree {got}"))?;

    let f20 = pf_from("({18,20},{19},{15,17},{16},{},{12,14},{13},{9},{},{11},{10},{6,8},{7},{1},{5},{4},{},{3},{},{2})");
    let t20: OrderedTree = ["(", "(", "((((())((()))((())())))((((())()))))", ")", "(())", ")"].concat().parse().unwrap();
    let kinds: Vec<_> = clusters_123_213(&f20.to_blocks()).unwrap().into_iter().map(|c| c.kind).collect();
    let closed = |parameter| Kind213::Closed { parameter };
    let want = [Kind213::Open, closed(0), Kind213::Open, closed(2), Kind213::Open, closed(4)];
    ensure(kinds == want, || format!("size 20 clusters {kinds:?}"))?;
    let got = phi_123_213(&f20).map_err(|e| e.to_string())?;
    ensure(got == t20, || format!("size 20 tree {got}"))?;
    Ok(format!("{checked} round trips, both figure trees exact"))
}

fn pf_from(blocks: &str) -> ParkingFunction {
    ParkingFunction::from_blocks(&parse_blocks(blocks, 1).unwrap()).unwrap()
}

fn criterion_5() -> Outcome {
    let tables = [
        (ClassFamily::HyposylvesterMulti, &common::HYPOSYLVESTER_MULTI),
        (ClassFamily::MetasylvesterMulti, &common::METASYLVESTER_MULTI),
        (ClassFamily::HypoplacticM, &common::HYPOPLACTIC_M),
        (ClassFamily::MetasylvesterM, &common::METASYLVESTER_M),
    ];
    let mut count = 0;
    for (family, table) in tables {
        for m in 1..=5 {
            for n in 1..=8 {
                let got = family.count(n, m, Some(DEFAULT_PATH_CAP)).map_err(|e| format!("{family} m={m} n={n}: {e}"))?;
                let want = BigUint::from(table[m - 1][n - 1]);
                ensure(got == want, || format!("{family} m={m} n={n}: {got}, table {want}"))?;
                count += 1;
            }
        }
    }
    for m in 1..=5 {
        for n in 1..=7 {
            let f = ClassFamily::HyposylvesterM;
            let (a, b) = (f.count(n, m, None).unwrap(), f.path_sum(n, m));
            ensure(a == b, || format!("hyposylvester-m m={m} n={n}: formula {a}, path sum {b}"))?;
        }
    }
    Ok(format!("{count} table entries; hyposylvester-m formula equals path sum for m <= 5, n <= 7"))
}

fn random_series(rng: &mut StdRng, order: usize, nonzero_constant: bool) -> PowerSeries {
    let mut c: Vec<i64> = (0..=order).map(|_| rng.gen_range(-5..=5)).collect();
    if nonzero_constant && c[0] == 0 {
        c[0] = 1;
    }
    PowerSeries::from_integers(&c, order)
}

fn criterion_6() -> Outcome {
    ensure(first_nonzero(&chini_residual(15)).is_none(), || "Chini equation fails for pk(132)".into())?;
    for m in 1..=3 {
        let (lhs, rhs) = metasylvester_identity(m, 8).map_err(|e| e.to_string())?;
        ensure(check_identity(&lhs, &rhs), || format!("metasylvester identity fails for m={m}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let trials = 64;
    for _ in 0..trials {
        let phi = random_series(&mut rng, 12, true);
        let psi = random_series(&mut rng, 12, false);
        let bad = lagrange_mismatch(&phi, &psi, 12).map_err(|e| e.to_string())?;
        ensure(bad.is_none(), || format!("Lagrange differs at x^{} for phi = {phi}, psi = {psi}", bad.unwrap()))?;
    }
    Ok(format!("Chini to order 15, identity m <= 3 to order 8, {trials} random Lagrange checks to order 12"))
}

fn criterion_7() -> Outcome {
    let set: PatternSet = "312".parse().unwrap();
    for n in 1..=8 {
        let a = metasylvester_multipark(n, 1);
        let b = metasylvester_mpark(n, 1, DEFAULT_PATH_CAP).map_err(|e| e.to_string())?;
        let c = pk_count(n, &set).value;
        ensure(a == b && b == c, || format!("n={n}: {a}, {b}, {c}"))?;
    }
    Ok("n = 1..=8".into())
}

fn narayana_refines(paths: &[LatticePath], n: usize, m: usize) -> bool {
    (0..=n).all(|k| BigUint::from(paths.iter().filter(|p| p.peak_count() == k).count()) == m_narayana(n, k, m))
}

fn criterion_8() -> Outcome {
    let mut names = Vec::new();
    let mut check = |name: &str, ok: bool| -> std::result::Result<(), String> {
        names.push(name.to_string());
        ensure(ok, || format!("{name} failed"))
    };

    let total = |n: usize| if n == 0 { BigUint::from(1u32) } else { BigUint::from(n + 1).pow(n as u32 - 1) };
    check(
        "sum of ell-weights, n <= 7",
        (0..=7).all(|n| all_permutations(n).iter().map(|p| p.ell_weight()).sum::<BigUint>() == total(n)),
    )?;
    check(
        "ell-weight equals simulated preimages, n <= 6",
        (1..=6).all(|n| {
            parking_permutation_census(n).unwrap().into_iter().all(|(w, c)| {
                Permutation::new(w.iter().map(|&x| x as usize).collect()).unwrap().ell_weight() == BigUint::from(c)
            })
        }),
    )?;
    let sets = PatternSet::s3_subsets();
    check(
        "avoidance of a union is an intersection, n <= 6",
        (0..=6).all(|n| {
            let classes: Vec<_> = sets.iter().map(|s| avoidance_class(n, s)).collect();
            sets.iter().enumerate().all(|(i, s)| {
                sets.iter().enumerate().all(|(j, t)| {
                    let both = avoidance_class(n, &s.union(t));
                    both.len() == classes[i].iter().filter(|x| classes[j].contains(x)).count()
                        && both.iter().all(|x| classes[i].contains(x) && classes[j].contains(x))
                })
            })
        }),
    )?;
    check(
        "block notation round trip, n <= 6",
        (0..=6).all(|n| {
            enumerate_parking_functions(n)
                .iter()
                .all(|f| ParkingFunction::from_blocks(&f.to_blocks()).as_ref() == Ok(f))
        }),
    )?;
    check(
        "path counts, Narayana refinement and parking round trip, n <= 7, m <= 3",
        (1..=3).all(|m| {
            (0..=7).all(|n| {
                let paths = enumerate_paths(n, m);
                BigUint::from(paths.len()) == fuss_catalan(n, m)
                    && narayana_refines(&paths, n, m)
                    && paths.iter().all(|p| {
                        LatticePath::from_increasing_parking(&p.to_increasing_parking(), m).as_ref() == Ok(p)
                    })
            })
        }),
    )?;
    check(
        "canonical decomposition and first-peak round trips, n <= 8",
        (1..=8).all(|n| {
            enumerate_paths(n, 1).iter().all(|p| {
                let (k, parts) = p.canonical_decomposition().unwrap();
                let dec = LatticePath::from_decomposition(k, &parts).as_ref() == Ok(p);
                let w = p.ascent_word();
                let peak = w.len() < 2 || {
                    let (i, q) = p.delete_first_peak().unwrap();
                    q.insert_first_peak(i, w[0]).as_ref() == Ok(p)
                };
                dec && peak
            })
        }),
    )?;
    check(
        "pattern dispatch equals weighted sum, n <= 8",
        (0..=8).all(|n| sets.iter().all(|s| pk_count(n, s).value == generic_weighted_pk(n, s))),
    )?;
    check(
        "class counts equal evaluation oracle, n <= 5, m <= 2",
        ClassFamily::ALL.iter().all(|f| {
            (1..=2).all(|m| (1..=5).all(|n| class_count_by_evaluations(*f, n, m) == f.count(n, m, None).unwrap()))
        }),
    )?;
    check(
        "class counts equal path sums, n <= 6, m <= 3",
        ClassFamily::ALL
            .iter()
            .all(|f| (1..=3).all(|m| (1..=6).all(|n| f.count(n, m, None).unwrap() == f.path_sum(n, m)))),
    )?;
    check(
        "block search equals brute-force pf, n <= 5",
        sets.iter().all(|s| {
            (1..=5).all(|n| BigUint::from(enumerate_block_avoiding(n, s).len()) == brute_pf(n, s).unwrap())
        }),
    )?;
    Ok(format!("{} exhaustive suites", names.len()))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("pk tables", criterion_1, Duration::from_secs(10)),
        ("oracle equivalence", criterion_2, Duration::from_secs(300)),
        ("pf(312,321)", criterion_3, Duration::from_secs(300)),
        ("bijections", criterion_4, Duration::from_secs(60)),
        ("class tables", criterion_5, Duration::from_secs(300)),
        ("series identities", criterion_6, Duration::from_secs(300)),
        ("consistency triangle", criterion_7, Duration::from_secs(300)),
        ("property suites", criterion_8, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {}s budget", budget.as_secs())),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {} ({name}): {status} [{:.2}s / {}s] {detail}", i + 1, elapsed.as_secs_f64(), budget.as_secs());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
