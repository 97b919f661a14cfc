//! Acceptance suite: every criterion the library must meet, one test per
//! criterion, each printing a PASS line when it holds. All comparisons are
//! exact; there are no tolerances anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use lrsw::{
    brute_distribution, build_field, build_field_with_primitive_rank, count_c_r_u,
    enumerate_subfield_subspaces, enumerate_subspaces, full_distribution, higher_weight_count,
    linearized_eval, null_space_dim, qbinom, subspace_weight, subspace_weight_direct,
    vandermonde_full_rank, weight_value_set, CodeParams, FFMatrix, FieldCtx, FieldElement,
    MessageVector, Scope, WeightDistribution, DEFAULT_ENUMERATION_CAP, DEFAULT_VERIFY_GRID,
};

const CAP: u64 = DEFAULT_ENUMERATION_CAP;

fn grid_params() -> Vec<CodeParams> {
    DEFAULT_VERIFY_GRID
        .iter()
        .map(|&(p, m, d, k)| CodeParams::new(p, m, d, k).unwrap())
        .collect()
}

fn message_from_index(ctx: &FieldCtx, mut index: u64) -> MessageVector {
    let q = ctx.order();
    let k = ctx.params().k();
    let mut digits = Vec::with_capacity(k as usize);
    for _ in 0..k {
        digits.push(ctx.element(index % q).unwrap());
        index /= q;
    }
    MessageVector(digits)
}

/// Random F_{p^e}-independent tuple, drawn by rejection on the rank of a
/// random subfield coordinate matrix.
fn random_independent_tuple(ctx: &FieldCtx, rng: &mut StdRng, i: usize) -> Vec<FieldElement> {
    let me = ctx.params().m_over_e() as usize;
    assert!(i <= me);
    let sub = ctx.subfield_elements();
    loop {
        let entries: Vec<FieldElement> = (0..i * me)
            .map(|_| sub[rng.gen_range(0..sub.len())])
            .collect();
        let m = FFMatrix::new(i, me, Scope::Subfield, entries);
        if m.rank(ctx) == i {
            return (0..i).map(|r| ctx.from_subfield_coords(m.row(r))).collect();
        }
    }
}

/// Divisors e of m with m/e at most `max_ext`; setting d = e realizes every
/// attainable gcd class.
fn extension_divisors(m: u32, max_ext: u32) -> Vec<u32> {
    (1..=m).filter(|e| m % e == 0 && m / e <= max_ext).collect()
}

const SMALL_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

#[test]
fn criterion_01_oracle_equivalence_brute_vs_closed_form() {
    grid_params().par_iter().for_each(|params| {
        let ctx = build_field(*params).unwrap();
        let report = full_distribution(params);
        for r in 1..=params.k() {
            let brute = brute_distribution(&ctx, r, CAP).unwrap();
            let closed: BTreeMap<u64, BigInt> = report
                .rows_for(r)
                .filter(|row| row.count != BigInt::from(0))
                .map(|row| (row.weight.to_u64().unwrap(), row.count.clone()))
                .collect();
            assert_eq!(brute, closed, "distribution mismatch at {params:?} r={r}");
        }
    });
    println!("acceptance 01 oracle equivalence (brute == closed form on the full grid): PASS");
}

#[test]
fn criterion_02_every_enumerated_weight_is_in_the_value_set() {
    grid_params().par_iter().for_each(|params| {
        let ctx = build_field(*params).unwrap();
        for r in 1..=params.k() {
            let allowed = weight_value_set(params, r).unwrap();
            for sub in enumerate_subspaces(&ctx, params.k(), r, CAP).unwrap() {
                let w = BigInt::from(subspace_weight(&ctx, &sub));
                assert!(
                    allowed.contains(&w),
                    "weight {w} outside value set at {params:?} r={r}"
                );
            }
        }
    });
    println!("acceptance 02 value-set law (enumerated weights lie in the closed value set): PASS");
}

#[test]
fn criterion_03_kernel_weight_equals_direct_support_weight() {
    grid_params().par_iter().for_each(|params| {
        let ctx = build_field(*params).unwrap();
        for r in 1..=params.k() {
            for sub in enumerate_subspaces(&ctx, params.k(), r, CAP).unwrap() {
                assert_eq!(
                    subspace_weight(&ctx, &sub),
                    subspace_weight_direct(&ctx, &sub),
                    "weight identity fails at {params:?} r={r}"
                );
            }
        }
    });
    println!("acceptance 03 weight identity (zero-locus route == direct support scan): PASS");
}

#[test]
fn criterion_04_hierarchy_minimum_is_attained() {
    // Enumerated side: the smallest observed weight at dimension r is
    // p^m - p^(e(k-r)) at every grid point.
    grid_params().par_iter().for_each(|params| {
        let ctx = build_field(*params).unwrap();
        let pe = params.subfield_order_u64().unwrap();
        for r in 1..=params.k() {
            let brute = brute_distribution(&ctx, r, CAP).unwrap();
            let min_observed = *brute.keys().next().unwrap();
            assert_eq!(
                min_observed,
                ctx.order() - pe.pow(params.k() - r),
                "hierarchy mismatch at {params:?} r={r}"
            );
        }
    });
    // Closed-form side: the minimum-weight count is positive for every
    // valid parameter set with p^m up to 2^30.
    let sweep: Vec<CodeParams> = SMALL_PRIMES
        .iter()
        .flat_map(|&p| {
            let max_m = (1u32..=50)
                .take_while(|&m| BigInt::from(p).pow(m) <= BigInt::from(1u64 << 30))
                .count() as u32;
            (1..=max_m).flat_map(move |m| {
                extension_divisors(m, 12).into_iter().flat_map(move |e| {
                    (1..=m / e).map(move |k| CodeParams::new(p, m, e, k).unwrap())
                })
            })
        })
        .collect();
    sweep.par_iter().for_each(|params| {
        for r in 1..=params.k() {
            let count = higher_weight_count(params, r, params.k() - r).unwrap();
            assert!(
                count > BigInt::from(0),
                "minimum weight not attained at {params:?} r={r}"
            );
        }
    });
    println!(
        "acceptance 04 weight hierarchy (min enumerated weight matches, closed-form minimum \
         attained over {} parameter sets with p^m <= 2^30): PASS",
        sweep.len()
    );
}

#[test]
fn criterion_05_null_space_bound() {
    // Every field with p^m <= 256, every d pattern mod m, every k: nonzero
    // messages have null spaces of dimension at most k - 1. Exhaustive over
    // all q^k messages whenever that count is at most 2^20, and 10^4 seeded
    // random messages beyond.
    let mut field_shapes: Vec<(u64, u32)> = Vec::new();
    for p in (2..=256u64).filter(|&p| lrsw_is_prime(p)) {
        let mut m = 1u32;
        while BigInt::from(p).pow(m) <= BigInt::from(256) {
            field_shapes.push((p, m));
            m += 1;
        }
    }
    let mut combos: Vec<CodeParams> = Vec::new();
    for &(p, m) in &field_shapes {
        for d in 1..=m {
            let e = gcd(m as u64, d as u64) as u32;
            for k in 1..=m / e {
                combos.push(CodeParams::new(p, m, d, k).unwrap());
            }
        }
    }
    combos.par_iter().for_each(|params| {
        let ctx = build_field(*params).unwrap();
        let q = ctx.order();
        let k = params.k();
        let total = BigInt::from(q).pow(k);
        if total <= BigInt::from(1u64 << 20) {
            let total = total.to_u64().unwrap();
            for index in 1..total {
                let a = message_from_index(&ctx, index);
                assert!(
                    null_space_dim(&ctx, &a) <= k - 1,
                    "null-space bound fails at {params:?} message {index}"
                );
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x0517_1123);
            for _ in 0..10_000 {
                let a = MessageVector(
                    (0..k)
                        .map(|_| ctx.element(rng.gen_range(0..q)).unwrap())
                        .collect(),
                );
                if a.0.iter().all(|x| x.is_zero()) {
                    continue;
                }
                assert!(
                    null_space_dim(&ctx, &a) <= k - 1,
                    "null-space bound fails at {params:?}"
                );
            }
        }
    });
    println!(
        "acceptance 05 null-space bound (dim <= k-1 for nonzero messages over {} parameter \
         sets with p^m <= 256): PASS",
        combos.len()
    );
}

#[test]
fn criterion_06_vandermonde_full_rank_on_independent_tuples() {
    grid_params().par_iter().for_each(|params| {
        let ctx = build_field(*params).unwrap();
        let mut rng = StdRng::seed_from_u64(0x7a11 ^ params.p() ^ params.m() as u64);
        for trial in 0..1000 {
            let i = rng.gen_range(1..=params.k() as usize);
            let xs = random_independent_tuple(&ctx, &mut rng, i);
            assert!(
                vandermonde_full_rank(&ctx, &xs).unwrap(),
                "rank deficiency at {params:?} trial {trial}"
            );
        }
    });
    println!("acceptance 06 linearized Vandermonde full rank (1000 independent tuples per grid field): PASS");
}

#[test]
fn criterion_07_containment_counts_match_the_closed_count() {
    // Tiny parameters: p = 2, m <= 3, every d, every k, every U of every
    // dimension. Brute filtering of the enumeration against the Gaussian
    // binomial count (zero when dim U exceeds k - r).
    let mut combos: Vec<CodeParams> = Vec::new();
    for m in 1..=3u32 {
        for d in 1..=m {
            let e = gcd(m as u64, d as u64) as u32;
            for k in 1..=m / e {
                combos.push(CodeParams::new(2, m, d, k).unwrap());
            }
        }
    }
    let mut checked = 0usize;
    for params in &combos {
        let ctx = build_field(*params).unwrap();
        let k = params.k();
        for r in 1..=k {
            for dim in 0..=params.m_over_e() {
                for u_basis in enumerate_subfield_subspaces(&ctx, dim, CAP).unwrap() {
                    let brute = enumerate_subspaces(&ctx, k, r, CAP)
                        .unwrap()
                        .filter(|sub| {
                            u_basis.iter().all(|&u| {
                                (0..sub.dim()).all(|s| {
                                    linearized_eval(&ctx, &sub.row_message(s), u).is_zero()
                                })
                            })
                        })
                        .count();
                    let closed = count_c_r_u(&ctx, &u_basis, r).unwrap();
                    assert_eq!(
                        BigInt::from(brute),
                        closed,
                        "containment count mismatch at {params:?} r={r} dim={dim}"
                    );
                    checked += 1;
                }
            }
        }
    }
    println!(
        "acceptance 07 containment-count law (|C_r,U| exact over {checked} (params, r, U) cases): PASS"
    );
}

#[test]
fn criterion_08_mobius_inversion_roundtrips() {
    let qs = [2u64, 3, 4, 8];
    qs.par_iter().for_each(|&q| {
        let q = BigInt::from(q);
        let mut rng = StdRng::seed_from_u64(0x40b1 ^ q.to_u64().unwrap());
        for ambient in 0..=8usize {
            for _ in 0..1000 {
                let s: Vec<BigInt> = (0..=ambient)
                    .map(|_| BigInt::from(rng.gen_range(0..1_000_000u64)))
                    .collect();
                let g = qbinom::subspace_sum(&s, ambient, &q).unwrap();
                assert_eq!(qbinom::mobius_invert(&g, ambient, &q).unwrap(), s);
            }
        }
    });
    println!("acceptance 08 Moebius round-trip (forward sum then inversion is the identity): PASS");
}

#[test]
fn criterion_09_mass_identity_closed_form_sweep() {
    // For every prime p <= 50, m <= 50, divisor e of m with k <= m/e <= 12:
    // the counts at dimension r sum to the number of r-dimensional
    // subspaces. d = e realizes every gcd class; the closed form depends on
    // d only through e.
    let sweep: Vec<CodeParams> = SMALL_PRIMES
        .iter()
        .flat_map(|&p| {
            (1..=50u32).flat_map(move |m| {
                extension_divisors(m, 12).into_iter().flat_map(move |e| {
                    (1..=m / e).map(move |k| CodeParams::new(p, m, e, k).unwrap())
                })
            })
        })
        .collect();
    sweep.par_iter().for_each(|params| {
        let q = params.field_order();
        for r in 1..=params.k() {
            let mass: BigInt = (0..=params.k() - r)
                .map(|i| higher_weight_count(params, r, i).unwrap())
                .sum();
            assert_eq!(
                mass,
                qbinom::gauss_binomial(params.k() as usize, r as usize, &q),
                "mass identity fails at {params:?} r={r}"
            );
        }
    });
    println!(
        "acceptance 09 mass identity (row sums equal Gaussian binomials over {} parameter sets): PASS",
        sweep.len()
    );
}

#[test]
fn criterion_10_distribution_is_independent_of_the_primitive_element() {
    let params = CodeParams::new(2, 4, 1, 3).unwrap();
    let builds: Vec<FieldCtx> = (0..3)
        .map(|rank| build_field_with_primitive_rank(params, rank).unwrap())
        .collect();
    assert!(builds[0].primitive() < builds[1].primitive());
    assert!(builds[1].primitive() < builds[2].primitive());
    let distributions: Vec<WeightDistribution> = builds
        .iter()
        .map(|ctx| WeightDistribution::brute(ctx, CAP).unwrap())
        .collect();
    assert_eq!(distributions[0], distributions[1]);
    assert_eq!(distributions[1], distributions[2]);
    println!("acceptance 10 primitive-element independence (three rebuilds agree exactly): PASS");
}

// Small local helpers; the library intentionally does not export these.

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lrsw_is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|f| f * f <= n).all(|f| n % f != 0)
}
