//! End-to-end acceptance suite. Each test checks one headline criterion and
//! prints a single PASS/FAIL line (run with `--nocapture` to see the lines
//! for passing criteria as well; failures always show their report).

use frobwc::root_system::{RootSystemData, TypeTag, Weight};
use frobwc::{blocks, ktheory, steinberg, subdivisor, summand, weight_order};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::time::Instant;

fn rs(tag: &str) -> RootSystemData {
    RootSystemData::build(TypeTag::parse(tag).unwrap()).unwrap()
}

fn report(name: &str, ok: bool, detail: &str) {
    let line = if detail.is_empty() {
        format!("{} — {}", if ok { "PASS" } else { "FAIL" }, name)
    } else {
        format!("{} — {} ({})", if ok { "PASS" } else { "FAIL" }, name, detail)
    };
    println!("{line}");
    assert!(ok, "{line}");
}

#[test]
fn criterion_01_subdivisor_counts() {
    let start = Instant::now();
    let a2 = rs("A2");
    let a3 = rs("A3");
    let cases: [(&RootSystemData, Vec<i64>, i64, u64, u64); 3] = [
        (&a2, vec![6, 6], 7, 396, 460),
        (&a2, vec![20, 22], 23, 34342, 37290),
        (&a3, vec![20, 21, 22], 23, 10930738, 14828077),
    ];
    let mut ok = true;
    let mut detail = String::new();
    for (sys, class, p, capped, stabilized) in cases {
        let r = subdivisor::count_subdivisors_report(sys, &Weight(class.clone()), p).unwrap();
        let here = r.count == BigUint::from(capped) && r.stabilized_count == BigUint::from(stabilized);
        if !here {
            detail = format!(
                "class {:?} p={p}: got count {} / stabilized {}",
                class, r.count, r.stabilized_count
            );
        }
        ok &= here;
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs() < 60;
    report(
        "criterion 1: subdivisor counts 396/460, 34342/37290, 10930738/14828077 under 60s",
        ok,
        &format!("{detail}{:.1}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_02_candidate_enumeration_psl3() {
    let a2 = rs("A2");
    let mut ok = true;
    for p in [11i64, 13] {
        let mut max_seen = 0usize;
        for lam in blocks::restricted_weights(&a2, p).collect::<Vec<_>>() {
            let n = summand::enumerate_candidate_mu(&a2, &lam, p).unwrap().len();
            ok &= (21..=27).contains(&n);
            max_seen = max_seen.max(n);
        }
        ok &= max_seen == 27;
        ok &= summand::psl3_lattice_point_count(p) == summand::psl3_lattice_point_formula(p);
    }
    report(
        "criterion 2: candidate counts in [21,27] with 27 attained; lattice scan = 27(p-1)^2+6(p-1)+1",
        ok,
        "",
    );
}

#[test]
fn criterion_03_guaranteed_mu_counts() {
    let a2 = rs("A2");
    let mut ok = true;
    let mut seen = (usize::MAX, 0usize);
    for p in [11i64, 13] {
        for lam in blocks::restricted_weights(&a2, p).collect::<Vec<_>>() {
            let n = summand::enumerate_guaranteed_mu(&a2, &lam, p).unwrap().len();
            seen = (seen.0.min(n), seen.1.max(n));
            ok &= (14..=19).contains(&n);
        }
    }
    report(
        "criterion 3: guaranteed-mu counts in [14,19] for all restricted weights, p in {11,13}",
        ok,
        &format!("observed range [{},{}]", seen.0, seen.1),
    );
}

const B2_RANKS: [i64; 18] = [
    1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 32, 36, 48, 64, 72, 96, 128,
];
const A3_RANKS: [i64; 40] = [
    1, 2, 3, 4, 6, 8, 9, 11, 12, 16, 18, 22, 24, 33, 36, 44, 48, 54, 66, 72, 88, 96, 108, 121,
    132, 144, 198, 216, 264, 288, 396, 432, 484, 528, 726, 792, 864, 1452, 1584, 2904,
];
const G2_RANKS: [i64; 149] = [
    1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 17, 18, 20, 24, 25, 27, 29, 30, 32, 34, 36, 40, 45,
    48, 50, 51, 54, 58, 60, 64, 68, 72, 75, 80, 85, 87, 90, 96, 100, 102, 108, 116, 120, 128,
    136, 144, 145, 150, 153, 160, 162, 170, 174, 180, 192, 204, 216, 232, 240, 255, 256, 261,
    270, 272, 288, 289, 290, 300, 306, 320, 324, 340, 348, 360, 384, 408, 432, 435, 464, 480,
    493, 510, 512, 522, 540, 544, 576, 578, 580, 612, 648, 696, 720, 768, 816, 841, 864, 867,
    870, 918, 928, 960, 972, 986, 1020, 1024, 1044, 1080, 1088, 1152, 1156, 1224, 1296, 1392,
    1479, 1536, 1566, 1632, 1682, 1728, 1734, 1740, 1836, 1856, 1944, 1972, 2088, 2304, 2448,
    2523, 2592, 2784, 2958, 3072, 3132, 3264, 3364, 3456, 3468, 3672, 3888, 4176, 5046, 5568,
    5916, 6264, 10092,
];

/// Rank sets versus the reference tables. A2 is exact. For B2, A3 and G2 the
/// reference tables list every product a·d·d' that the per-class factors
/// admit in isolation, but not every combination is realized by an actual
/// pair of linkage classes; the computed sets come out as strict subsets,
/// with the same deficit at the next prime. The test reports the missing
/// values and then fails on the required set equality.
#[test]
fn criterion_04_rank_sets() {
    let a2 = rs("A2");
    let got_a2: Vec<i64> = blocks::rank_set(&a2, 7).unwrap().into_iter().collect();
    let a2_ok = got_a2 == vec![1, 3, 6, 12, 24];
    println!(
        "criterion 4a: A2 p=7 rank set {:?} — {}",
        got_a2,
        if a2_ok { "exact match" } else { "MISMATCH" }
    );

    let mut all_equal = a2_ok;
    for (tag, expected, p, next_p) in [
        ("B2", &B2_RANKS[..], 11i64, 13i64),
        ("A3", &A3_RANKS[..], 11, 13),
        ("G2", &G2_RANKS[..], 13, 17),
    ] {
        let sys = rs(tag);
        let got = blocks::rank_set(&sys, p).unwrap();
        let reference: BTreeSet<i64> = expected.iter().copied().collect();
        let subset = got.is_subset(&reference);
        let missing: Vec<i64> = reference.difference(&got).copied().collect();
        let got_next = blocks::rank_set(&sys, next_p).unwrap();
        let missing_next: Vec<i64> = reference.difference(&got_next).copied().collect();
        println!(
            "criterion 4b: {tag} p={p}: {}/{} reference ranks realized; strict subset: {subset}; \
             missing values {:?}; deficit at p={next_p} identical: {}",
            got.len(),
            reference.len(),
            missing,
            missing == missing_next
        );
        assert!(subset, "{tag}: computed ranks must at least be a subset");
        all_equal &= missing.is_empty();
    }
    report(
        "criterion 4: rank sets equal the reference tables for A2/B2/A3/G2",
        all_equal,
        "B2/A3/G2 realize strict subsets only; the deficit is prime-independent, see report above",
    );
}

#[test]
fn criterion_05_steinberg_block_weight() {
    let mut ok = true;
    for tag in ["A1", "A2", "A3", "B2", "G2"] {
        let sys = rs(tag);
        for p in [5i64, 7] {
            let st = sys.rho.scale(p - 1);
            ok &= steinberg::steinberg_block_weight(&sys, &st, p).unwrap()
                == Weight::zero(sys.rank);
        }
    }
    let a2 = rs("A2");
    let a3 = rs("A3");
    for p in [5i64, 7] {
        ok &= steinberg::steinberg_block_weight(&a2, &Weight::zero(2), p).unwrap()
            == Weight(vec![-1, -1]);
        ok &= steinberg::steinberg_block_weight(&a3, &Weight::zero(3), p).unwrap()
            == Weight(vec![-2, 0, -2]);
    }
    report(
        "criterion 5: Steinberg twist is 0 at (p-1)ρ, -ρ for A2 at 0, -2ω1-2ω3 for A3 at 0",
        ok,
        "",
    );
}

#[test]
fn criterion_06_block_dimension_partition() {
    let mut ok = true;
    for (tag, p) in [("A2", 5i64), ("B2", 5), ("G2", 7)] {
        let sys = rs(tag);
        let mut total = BigUint::zero();
        for class in blocks::linkage_classes(&sys, p).unwrap() {
            total += blocks::block_dimension(&sys, &class.representative, p).unwrap();
        }
        ok &= total == BigUint::from(p as u64).pow(sys.group_dimension() as u32);
    }
    report(
        "criterion 6: block dimensions partition p^(dim G) for A2/p5, B2/p5, G2/p7",
        ok,
        "",
    );
}

#[test]
fn criterion_07_psln_type_formula() {
    let mut ok = true;
    for n in [3usize, 4] {
        let sys = rs(&format!("A{}", n - 1));
        for lam in blocks::restricted_weights(&sys, 5).collect::<Vec<_>>() {
            let profile = blocks::psln_type(n, &lam, 5).unwrap();
            ok &= blocks::a_lambda_from_type(n, &profile)
                == blocks::a_lambda(&sys, &lam, 5).unwrap();
        }
    }
    report(
        "criterion 7: orbit sizes match n!/(n1!…nk!) for n=3,4 at p=5 over all restricted weights",
        ok,
        "",
    );
}

#[test]
fn criterion_08_ktheory_localization() {
    let sys = rs("A1");
    let mut ok = true;
    for p in [2i64, 3] {
        for lam in [Weight(vec![0]), Weight(vec![1]), Weight(vec![3])] {
            for (y, w) in ktheory::fixed_points(&sys).unwrap() {
                let fpc = ktheory::localized_class(&sys, &lam, p, y, w).unwrap();
                let expanded = ktheory::expand_class(&fpc, 1 << 20).unwrap();
                ok &= expanded.len() as u128 == (p as u128).pow(3);
                // Independent multiset: direct loop over exponent tuples.
                let mut brute = Vec::new();
                for a in 0..p {
                    for b in 0..p {
                        for c in 0..p {
                            brute.push(
                                fpc.base
                                    .add(&fpc.tangent[0].scale(a))
                                    .add(&fpc.tangent[1].scale(b))
                                    .add(&fpc.tangent[2].scale(c)),
                            );
                        }
                    }
                }
                brute.sort();
                ok &= expanded == brute;
            }
        }
    }
    // Factored vs expanded evaluation at 20 pseudo-random rational points.
    let mut state = 0x9E3779B97F4A7C15u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let n = (state % 13) as i64 - 6;
        let d = (state % 7) as i64 + 1;
        BigRational::new(BigInt::from(if n == 0 { 3 } else { n }), BigInt::from(d))
    };
    let fps = ktheory::fixed_points(&sys).unwrap();
    for p in [2i64, 3] {
        for trial in 0..20usize {
            let at = ktheory::Assignment::new(vec![next()], vec![next()]).unwrap();
            let (y, w) = fps[trial % fps.len()];
            let lam = Weight(vec![(trial as i64) % 4]);
            let fpc = ktheory::localized_class(&sys, &lam, p, y, w).unwrap();
            let factored = ktheory::evaluate_class(&fpc, &at);
            let expanded: BigRational = ktheory::expand_class(&fpc, 1 << 20)
                .unwrap()
                .iter()
                .map(|t| at.value(t))
                .sum();
            ok &= factored == expanded;
        }
    }
    report(
        "criterion 8: A1 expansions have p^3 terms, match tuple enumeration, agree with factored evaluation",
        ok,
        "",
    );
}

#[test]
fn criterion_09_chern_vs_toric_multiplicities() {
    let start = Instant::now();
    let mut ok = true;
    for m in 1..=3usize {
        let ring = ktheory::GradedRingDescriptor::projective_space(m);
        let td = ktheory::todd_pm(&ring).unwrap();
        for p in [2i64, 3, 5] {
            for d in 0..=(2 * p) {
                let got = ring
                    .chern_pushforward(&ktheory::ch_line_pm(&ring, d), &td, p, m)
                    .unwrap();
                let mut expect = ring.zero();
                for e in -(m as i64 + 1)..=(d / p + 1) {
                    let mult = subdivisor::thomsen_multiplicity(m as i64, d, e, p).unwrap();
                    if mult.is_zero() {
                        continue;
                    }
                    let k = BigRational::from(BigInt::from(mult));
                    expect = ring.add(&expect, &ring.scale(&k, &ktheory::ch_line_pm(&ring, e)));
                }
                ok &= got == expect;
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs() < 10;
    report(
        "criterion 9: Chern pushforward equals the toric multiplicity expansion on P^1..P^3 under 10s",
        ok,
        &format!("{:.2}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_10_order_and_property_suites() {
    let mut ok = true;

    // ⪰ antisymmetry and root-order ⟹ ⪰ on an A2 box.
    let a2 = rs("A2");
    let box_weights: Vec<Weight> = (-4..=4)
        .flat_map(|a| (-4..=4).map(move |b| Weight(vec![a, b])))
        .collect();
    for lam in &box_weights {
        for mu in &box_weights {
            let fwd = weight_order::succeq(&a2, lam, mu).unwrap();
            let bwd = weight_order::succeq(&a2, mu, lam).unwrap();
            if fwd && bwd {
                ok &= lam == mu;
            }
            if weight_order::root_order_geq(&a2, lam, mu).unwrap() {
                ok &= fwd;
            }
        }
    }

    // Brute-force oracle for ⪰ 0: subtract a bounded heap of simple roots
    // and test dominance of the remainder.
    for tag in ["A2", "B2"] {
        let sys = rs(tag);
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let v = Weight(vec![a, b]);
                let mut oracle = false;
                'scan: for x in 0..=12i64 {
                    for y in 0..=12i64 {
                        let rem = v
                            .sub(&sys.simple_root(0).scale(x))
                            .sub(&sys.simple_root(1).scale(y));
                        if rem.is_dominant() {
                            oracle = true;
                            break 'scan;
                        }
                    }
                }
                ok &= weight_order::is_succeq_zero(&sys, &v).unwrap() == oracle;
            }
        }
    }

    // Weyl-group axioms and dot-action compatibility.
    for tag in ["A2", "B2", "G2"] {
        let sys = rs(tag);
        let elements = sys.weyl().unwrap();
        let probe = Weight(vec![1; sys.rank]);
        for u in elements {
            let mut has_inverse = false;
            for v in elements {
                let prod = u.compose(v);
                ok &= elements.contains(&prod);
                has_inverse |= prod == frobwc::root_system::WeylElement::identity(sys.rank);
                // (uv)·λ = u·(v·λ) for the dot action.
                ok &= sys.dot_action(&prod, &probe)
                    == sys.dot_action(u, &sys.dot_action(v, &probe));
            }
            ok &= has_inverse;
        }
    }

    // Subdivisor complement symmetry and translation equivariance.
    let p = 5i64;
    let top = summand::twisted_anticanonical(&a2, p);
    for lam in &box_weights {
        let s1 = subdivisor::count_subdivisors(&a2, lam, p).unwrap();
        let s2 = subdivisor::count_subdivisors(&a2, &top.sub(lam), p).unwrap();
        ok &= s1 == s2;
    }
    let shift = Weight(vec![1, -2]);
    for lam in blocks::restricted_weights(&a2, p).collect::<Vec<_>>() {
        let c1: Vec<Weight> = summand::enumerate_candidate_mu(&a2, &lam, p)
            .unwrap()
            .iter()
            .map(|m| m.add(&shift))
            .collect();
        let mut c2 =
            summand::enumerate_candidate_mu(&a2, &lam.add(&shift.scale(p)), p).unwrap();
        c2.sort_by(|x, y| x.0.cmp(&y.0));
        let mut c1 = c1;
        c1.sort_by(|x, y| x.0.cmp(&y.0));
        ok &= c1 == c2;
        ok &= steinberg::steinberg_block_weight(&a2, &lam.add(&shift.scale(p)), p)
            .unwrap()
            == steinberg::steinberg_block_weight(&a2, &lam, p).unwrap().add(&shift);
    }

    // Sufficient verdict implies the necessary one.
    for lam in blocks::restricted_weights(&a2, p).collect::<Vec<_>>() {
        for mu in summand::enumerate_candidate_mu(&a2, &lam, p).unwrap() {
            let v = summand::check_summand(&a2, &lam, &mu, p).unwrap();
            if v.sufficient {
                ok &= v.necessary;
            }
        }
    }

    report(
        "criterion 10: order axioms, brute-force oracle, Weyl/dot-action laws, symmetry and equivariance",
        ok,
        "",
    );
}

#[test]
fn criterion_11_lower_bound_below_upper_bound() {
    let a2 = rs("A2");
    let p = 7i64;
    let mut checked = 0usize;
    let mut ok = true;
    for lam in blocks::restricted_weights(&a2, p).step_by(3).collect::<Vec<_>>() {
        for mu in summand::enumerate_guaranteed_mu(&a2, &lam, p).unwrap() {
            let verdict = summand::check_summand(&a2, &lam, &mu, p).unwrap();
            if !verdict.sufficient {
                continue;
            }
            let lower = subdivisor::multiplicity_lower_bound(&a2, &lam, &mu, p).unwrap();
            let upper = summand::multiplicity_upper_bound(&a2, &lam, &mu, p).unwrap();
            ok &= lower <= upper;
            checked += 1;
        }
    }
    ok &= checked > 100;
    report(
        "criterion 11: multiplicity lower bound ≤ upper bound on sampled sufficient pairs (A2, p=7)",
        ok,
        &format!("{checked} pairs"),
    );
}
