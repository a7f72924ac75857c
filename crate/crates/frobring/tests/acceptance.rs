//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Golden matrices are pinned under their published class orders; the
//! brute-force oracles recompute every count from first principles so the
//! transform machinery is checked against an independent route.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use frobring::code::{dual, span, LinearCode, DEFAULT_CAP};
use frobring::enumerator::{
    canonical_families, count_b, sse, swe, tuple_sse, MultisetX, SseEnum, ORACLE_CAP,
};
use frobring::fuzz::{run_identity_suite, run_lee_suite, SuiteConfig};
use frobring::matrix::IntMatrix;
use frobring::poly::{Coeff, MPoly};
use frobring::poset::ClassData;
use frobring::presets;
use frobring::ring::{build_ring, FiniteRing, RingSpec};
use frobring::transform::{chain_ring_closed_form, kronecker_check, lexicographic_product_order};
use frobring::verify::{transform_sse, transform_swe, verify_identity, Kind};
use frobring::RingData;

fn criterion(name: &str, body: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(body);
    match &result {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(_) => println!("acceptance {name}: FAIL"),
    }
    if let Err(e) = result {
        resume_unwind(e);
    }
}

fn data_for(spec: &RingSpec, order: Option<&[&str]>) -> RingData {
    let ring = build_ring(spec).unwrap();
    let elems: Option<Vec<usize>> = order.map(|labels| {
        labels
            .iter()
            .map(|l| ring.parse_element(l).unwrap())
            .collect()
    });
    RingData::with_order(ring, elems.as_deref()).unwrap()
}

fn rows(m: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(m)
}

#[test]
fn criterion_1_golden_matrices() {
    criterion("1 (golden matrices)", || {
        let budget = Duration::from_secs(1);

        let t = Instant::now();
        let z12 = data_for(&presets::modular(12), Some(&presets::z12_order()));
        let a6 = rows(&[
            vec![1, 1, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 1, 1],
            vec![0, 0, 1, 0, 1, 1],
            vec![0, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 0, 1],
        ]);
        let q6 = rows(&[
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 0, 1, 0],
            vec![1, 1, 0, 1, 0, 0],
            vec![1, 0, 1, 0, 0, 0],
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0],
        ]);
        assert_eq!(z12.matrices.a, a6);
        assert_eq!(
            z12.matrices.d,
            rows(&[
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 2, 0, 0, 0, 0],
                vec![0, 0, 3, 0, 0, 0],
                vec![0, 0, 0, 4, 0, 0],
                vec![0, 0, 0, 0, 6, 0],
                vec![0, 0, 0, 0, 0, 12],
            ])
        );
        assert_eq!(z12.matrices.q, q6);
        assert_eq!(
            z12.matrices.s,
            rows(&[
                vec![1, 1, 2, 2, 2, 4],
                vec![1, 1, 2, -2, 2, -4],
                vec![1, 1, -1, 2, -1, -2],
                vec![1, -1, 2, 0, -2, 0],
                vec![1, 1, -1, -2, -1, 2],
                vec![1, -1, -1, 0, 1, 0],
            ])
        );
        assert!(t.elapsed() < budget);

        let t = Instant::now();
        let r8 = data_for(&presets::f2_u_v(), Some(&presets::f2_u_v_order()));
        assert_eq!(r8.matrices.a, a6);
        assert_eq!(r8.matrices.q, q6);
        assert_eq!(
            r8.matrices.d,
            rows(&[
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 2, 0, 0, 0, 0],
                vec![0, 0, 2, 0, 0, 0],
                vec![0, 0, 0, 4, 0, 0],
                vec![0, 0, 0, 0, 4, 0],
                vec![0, 0, 0, 0, 0, 8],
            ])
        );
        assert_eq!(
            r8.matrices.s,
            rows(&[
                vec![1, 1, 1, 2, 1, 2],
                vec![1, 1, 1, -2, 1, -2],
                vec![1, 1, -1, 2, -1, -2],
                vec![1, -1, 1, 0, -1, 0],
                vec![1, 1, -1, -2, -1, 2],
                vec![1, -1, -1, 0, 1, 0],
            ])
        );
        assert!(t.elapsed() < budget);

        let t = Instant::now();
        let r16 = data_for(&presets::f2_uv_16(), Some(&presets::f2_uv_16_order()));
        assert_eq!(
            r16.matrices.a,
            rows(&[
                vec![1, 1, 1, 1, 1, 1],
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 1, 1, 0, 0, 0],
                vec![0, 1, 0, 1, 0, 0],
                vec![0, 1, 0, 0, 1, 0],
                vec![0, 1, 1, 1, 1, 1],
            ])
        );
        assert_eq!(
            r16.matrices.d,
            rows(&[
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 16, 0, 0, 0, 0],
                vec![0, 0, 4, 0, 0, 0],
                vec![0, 0, 0, 4, 0, 0],
                vec![0, 0, 0, 0, 4, 0],
                vec![0, 0, 0, 0, 0, 2],
            ])
        );
        assert_eq!(
            r16.matrices.q,
            rows(&[
                vec![1, 1, 1, 1, 1, 1],
                vec![1, 0, 0, 0, 0, 0],
                vec![1, 0, 1, 0, 0, 1],
                vec![1, 0, 0, 1, 0, 1],
                vec![1, 0, 0, 0, 1, 1],
                vec![1, 0, 1, 1, 1, 1],
            ])
        );
        assert_eq!(
            r16.matrices.s,
            rows(&[
                vec![1, 8, 2, 2, 2, 1],
                vec![1, 0, 0, 0, 0, -1],
                vec![1, 0, 2, -2, -2, 1],
                vec![1, 0, -2, 2, -2, 1],
                vec![1, 0, -2, -2, 2, 1],
                vec![1, -8, 2, 2, 2, 1],
            ])
        );
        assert!(t.elapsed() < budget);

        // Chain ring of 16 elements; the default size-ascending order is the
        // published one and S has the 5x5 closed form.
        let t = Instant::now();
        let chain = data_for(&presets::z4_chain16(), None);
        assert_eq!(
            chain.matrices.s,
            rows(&[
                vec![1, 1, 2, 4, 8],
                vec![1, 1, 2, 4, -8],
                vec![1, 1, 2, -4, 0],
                vec![1, 1, -2, 0, 0],
                vec![1, -1, 0, 0, 0],
            ])
        );
        // A is the full upper-triangular chain, D the powers of 2, Q = AJ.
        assert_eq!(
            chain.matrices.a,
            IntMatrix::from_fn(5, 5, |i, j| {
                if i <= j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
        );
        assert_eq!(
            chain.matrices.d,
            rows(&[
                vec![1, 0, 0, 0, 0],
                vec![0, 2, 0, 0, 0],
                vec![0, 0, 4, 0, 0],
                vec![0, 0, 0, 8, 0],
                vec![0, 0, 0, 0, 16],
            ])
        );
        assert_eq!(
            chain.matrices.q,
            IntMatrix::from_fn(5, 5, |i, j| {
                if i + j <= 4 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
        );
        assert!(t.elapsed() < budget);
    });
}

#[test]
fn criterion_2_z6_end_to_end() {
    criterion("2 (Z6 end to end)", || {
        let t = Instant::now();
        let data = data_for(&presets::modular(6), Some(&presets::z6_order()));
        let code = span(Arc::clone(&data.ring), vec![vec![1, 4]], DEFAULT_CAP).unwrap();
        assert_eq!(
            code.words(),
            &[
                vec![0, 0],
                vec![1, 4],
                vec![2, 2],
                vec![3, 0],
                vec![4, 4],
                vec![5, 2]
            ]
        );
        let d = dual(&code, DEFAULT_CAP).unwrap();
        assert_eq!(
            d.words(),
            &[
                vec![0, 0],
                vec![0, 3],
                vec![2, 1],
                vec![2, 4],
                vec![4, 2],
                vec![4, 5]
            ]
        );

        assert_eq!(
            sse(&code, &data.classes).to_text(),
            "x0_1*x0_2 + x0_2*x1_1 + 2*x2_1*x2_2 + 2*x2_2*x3_1"
        );
        assert_eq!(
            sse(&d, &data.classes).to_text(),
            "x0_1*x0_2 + x0_1*x1_2 + 2*x2_1*x2_2 + 2*x2_1*x3_2"
        );
        assert_eq!(
            tuple_sse(&code, &data.classes, &data.poset, 2, DEFAULT_CAP)
                .unwrap()
                .to_text(),
            "x0_1*x0_2 + 3*x0_2*x1_1 + 8*x2_1*x2_2 + 24*x2_2*x3_1"
        );
        assert_eq!(
            tuple_sse(&d, &data.classes, &data.poset, 2, DEFAULT_CAP)
                .unwrap()
                .to_text(),
            "x0_1*x0_2 + 3*x0_1*x1_2 + 8*x2_1*x2_2 + 24*x2_1*x3_2"
        );

        for (kind, lambda) in [
            (Kind::Swe, 1),
            (Kind::Sse, 1),
            (Kind::TupleSse, 2),
            (Kind::TupleSwe, 2),
        ] {
            let rep = verify_identity(&data, &code, kind, lambda, DEFAULT_CAP).unwrap();
            assert!(rep.equal, "{}: {} vs {}", rep.identity, rep.left, rep.right);
        }
        assert!(t.elapsed() < Duration::from_secs(1));
    });
}

#[test]
fn criterion_3_involution_law() {
    criterion("3 (involution law)", || {
        let t = Instant::now();
        for (name, spec) in presets::builtin_frobenius() {
            let data = data_for(&spec, None);
            let n = data.classes.count();
            let scaled_identity = |power: u32| {
                let factor = BigInt::from(data.ring.size()).pow(power);
                IntMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        factor.clone()
                    } else {
                        BigInt::zero()
                    }
                })
            };
            let s = &data.matrices.s;
            assert_eq!(s.mul(s), scaled_identity(1), "S^2 = |R| I fails for {name}");
            if data.poset.is_pir {
                for lambda in 1..=3u32 {
                    let sl = data.matrices.s_lambda(lambda);
                    assert_eq!(
                        sl.mul(&sl),
                        scaled_identity(lambda),
                        "tuple involution fails for {name} at lambda {lambda}"
                    );
                }
            }
        }
        // Mandatory negative case: the non-PIR ring obeys the law only at
        // lambda = 1.
        let r16 = data_for(&presets::f2_uv_16(), None);
        let n = r16.classes.count();
        let s2 = r16.matrices.s_lambda(2);
        let want = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::from(256)
            } else {
                BigInt::zero()
            }
        });
        assert_ne!(s2.mul(&s2), want);
        assert!(t.elapsed() < Duration::from_secs(1));
    });
}

#[test]
fn criterion_4_chain_ring_closed_form() {
    criterion("4 (chain ring closed form)", || {
        let cases: [(RingSpec, u64, u32); 4] = [
            (presets::modular(4), 2, 2),
            (presets::modular(8), 2, 3),
            (presets::modular(9), 3, 2),
            (presets::z4_chain16(), 2, 4),
        ];
        for (spec, q, nu) in cases {
            let data = data_for(&spec, None);
            for lambda in [1u32, 2] {
                assert_eq!(
                    chain_ring_closed_form(q, nu, lambda),
                    data.matrices.s_lambda(lambda),
                    "closed form mismatch for q={q}, nu={nu}, lambda={lambda}"
                );
            }
        }
    });
}

#[test]
fn criterion_5_randomized_identity_suite() {
    criterion("5 (randomized identity suite)", || {
        let t = Instant::now();
        let cfg = SuiteConfig {
            seed: 20260811,
            codes_per_ring: 20,
            tuple_codes_per_ring: 5,
            cap: DEFAULT_CAP,
        };
        let report = run_identity_suite(&cfg).unwrap();
        assert!(!report.failed(), "\n{}", report.render_text());
        // Every built-in ring ran the full battery.
        for (name, _) in presets::builtin_frobenius() {
            for check in [
                "cardinality",
                "double-dual",
                "column-span",
                "hamming",
                "swe",
                "sse",
            ] {
                let entry = report
                    .checks
                    .iter()
                    .find(|c| c.ring == name && c.check == check)
                    .unwrap_or_else(|| panic!("missing {check} for {name}"));
                assert_eq!(entry.runs, 20);
            }
        }
        assert!(
            t.elapsed() < Duration::from_secs(60),
            "took {:?}",
            t.elapsed()
        );
    });
}

// ---------------------------------------------------------------------------
// Criterion 6 oracles, computed from the defining set conditions without the
// library's counting shortcuts.

fn symmetrized_supports(classes: &ClassData, word: &[usize]) -> Vec<BTreeSet<usize>> {
    let mut sets = vec![BTreeSet::new(); classes.count()];
    for (l, &e) in word.iter().enumerate() {
        sets[classes.class_of[e]].insert(l);
    }
    sets
}

fn level_sets(x: &MultisetX, classes: usize) -> Vec<BTreeSet<usize>> {
    let mut sets = vec![BTreeSet::new(); classes];
    for (l, &v) in x.m.iter().enumerate() {
        sets[v].insert(l);
    }
    sets
}

fn oracle_count_b(
    code: &LinearCode,
    classes: &ClassData,
    family: &[BTreeSet<usize>],
    x: &MultisetX,
) -> u64 {
    let levels = level_sets(x, classes.count());
    code.words()
        .iter()
        .filter(|w| {
            let supports = symmetrized_supports(classes, w);
            supports.iter().enumerate().all(|(i, s)| {
                let union: BTreeSet<usize> = family[i]
                    .iter()
                    .flat_map(|&j| levels[j].iter().copied())
                    .collect();
                s.is_subset(&union)
            })
        })
        .count() as u64
}

fn oracle_count_a_tuple(
    ring: &FiniteRing,
    classes: &ClassData,
    words: &[Vec<usize>],
    x: &MultisetX,
    lambda: u32,
) -> u64 {
    let n = x.m.len();
    let mut count = 0u64;
    let mut tuple = vec![0usize; lambda as usize];
    'outer: loop {
        let matches = (0..n).all(|l| {
            let mut ideal = frobring::ring::ElemSet::singleton(ring.zero());
            for &w in &tuple {
                ideal = ring.ideal_sum(ideal, ring.principal_ideal(words[w][l]));
            }
            ideal == classes.ideal[x.m[l]]
        });
        if matches {
            count += 1;
        }
        let mut pos = tuple.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < words.len() {
                break;
            }
            tuple[pos] = 0;
        }
    }
    count
}

fn random_family(rng: &mut StdRng, classes: usize) -> Vec<BTreeSet<usize>> {
    (0..classes)
        .map(|_| loop {
            let s: BTreeSet<usize> = (0..classes).filter(|_| rng.random_bool(0.5)).collect();
            if !s.is_empty() {
                return s;
            }
        })
        .collect()
}

fn random_code(rng: &mut StdRng, data: &RingData, n: usize) -> LinearCode {
    let m = rng.random_range(1..=2);
    let gens: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| rng.random_range(0..data.ring.size()))
                .collect()
        })
        .collect();
    span(Arc::clone(&data.ring), gens, DEFAULT_CAP).unwrap()
}

#[test]
fn criterion_6_oracle_suite() {
    criterion("6 (oracle suite)", || {
        let t = Instant::now();
        let mut rng = StdRng::seed_from_u64(6);
        for spec in [presets::modular(6), presets::modular(3)] {
            let data = data_for(&spec, None);
            let k = data.classes.count();
            for n in 1..=2usize {
                let multisets = MultisetX::enumerate_all(k, n, ORACLE_CAP).unwrap();
                for _ in 0..5 {
                    let family = random_family(&mut rng, k);
                    let code = random_code(&mut rng, &data, n);
                    let fam_matrix = frobring::enumerator::family_matrix(&family, k);

                    // Weight-alphabet identity: the substituted enumerator
                    // equals the multiset sum of oracle counts.
                    let lhs = transform_swe(&swe(&code, &data.classes), &fam_matrix, &Coeff::one())
                        .unwrap();
                    let mut rhs = MPoly::new(k);
                    for x in &multisets {
                        let b = oracle_count_b(&code, &data.classes, &family, x);
                        let mut key = vec![0u16; k];
                        for &v in &x.m {
                            key[v] += 1;
                        }
                        rhs.add_term(key, Coeff::from(BigInt::from(b)));
                    }
                    assert_eq!(lhs.poly, rhs);
                    // The library count agrees with the oracle count.
                    for x in &multisets {
                        assert_eq!(
                            count_b(&code, &data.classes, &family, x).unwrap(),
                            oracle_count_b(&code, &data.classes, &family, x)
                        );
                    }

                    // Support-alphabet identity, same family.
                    let lhs = transform_sse(&sse(&code, &data.classes), &fam_matrix, &Coeff::one())
                        .unwrap();
                    let mut rhs = SseEnum::zero(k, n);
                    for x in &multisets {
                        let b = oracle_count_b(&code, &data.classes, &family, x);
                        rhs.add_term(
                            x.m.iter().map(|&v| v as u16).collect(),
                            Coeff::from(BigInt::from(b)),
                        );
                    }
                    assert_eq!(lhs, rhs);
                }

                // Dual-count relation for the canonical families: |C| times
                // the I-count of the dual equals the ideal-size product times
                // the J-count of the code, for every multiset.
                for _ in 0..2 {
                    let code = random_code(&mut rng, &data, n);
                    let d = dual(&code, DEFAULT_CAP).unwrap();
                    let fam = canonical_families(&data.ring, &data.classes, &data.poset).unwrap();
                    for x in &multisets {
                        let left = BigInt::from(code.size())
                            * oracle_count_b(&d, &data.classes, &fam.i_family, x);
                        let mut weight = BigInt::one();
                        for (i, &count) in x.level_sizes(k).iter().enumerate() {
                            weight *= BigInt::from(data.classes.ideal_size[i]).pow(count as u32);
                        }
                        let right = weight * oracle_count_b(&code, &data.classes, &fam.j_family, x);
                        assert_eq!(left, right);
                    }
                }
            }
        }

        // Tuple-count oracle on Z6: (B^I(Y))^lambda equals the sum of tuple
        // counts over the multisets below Y in the family relation.
        let data = data_for(&presets::modular(6), None);
        let k = data.classes.count();
        let fam = canonical_families(&data.ring, &data.classes, &data.poset).unwrap();
        for n in 1..=2usize {
            let multisets = MultisetX::enumerate_all(k, n, ORACLE_CAP).unwrap();
            for _ in 0..2 {
                let code = random_code(&mut rng, &data, n);
                for lambda in [1u32, 2] {
                    for y in &multisets {
                        let b = oracle_count_b(&code, &data.classes, &fam.i_family, y);
                        let lhs = BigInt::from(b).pow(lambda);
                        let mut rhs = BigInt::zero();
                        for x in &multisets {
                            let below =
                                x.m.iter()
                                    .zip(&y.m)
                                    .all(|(&mx, &my)| fam.i_family[mx].contains(&my));
                            if below {
                                rhs += oracle_count_a_tuple(
                                    &data.ring,
                                    &data.classes,
                                    code.words(),
                                    x,
                                    lambda,
                                );
                            }
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
        assert!(
            t.elapsed() < Duration::from_secs(120),
            "took {:?}",
            t.elapsed()
        );
    });
}

#[test]
fn criterion_7_hamming_derivation_invariants() {
    criterion("7 (Hamming derivation invariants)", || {
        for (name, spec) in presets::builtin_frobenius() {
            let data = data_for(&spec, None);
            let n = data.classes.count();
            let s = &data.matrices.s;
            let size = BigInt::from(data.ring.size());
            for i in 0..n {
                assert!(s.get(i, 0).is_one(), "S[{i}][0] != 1 for {name}");
                let tail: BigInt = (1..n).map(|j| s.get(i, j).clone()).sum();
                let want = if i == 0 {
                    size.clone() - 1
                } else {
                    BigInt::from(-1)
                };
                assert_eq!(tail, want, "row {i} tail sum for {name}");
            }
            let inv = &data.matrices.a_inv;
            for kk in 0..n {
                let want = if kk == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*inv.get(kk, 0), want, "Möbius column 0 for {name}");
                let row: BigInt = (0..n).map(|j| inv.get(kk, j).clone()).sum();
                let want = if kk == n - 1 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(row, want, "Möbius row sum for {name}");
            }
        }
    });
}

#[test]
fn criterion_8_lee_reproduction() {
    criterion("8 (Lee reproduction)", || {
        let report = run_lee_suite(20260811, 10, DEFAULT_CAP).unwrap();
        assert!(!report.failed(), "\n{}", report.render_text());
        let lee = report
            .checks
            .iter()
            .find(|c| c.check == "lee")
            .expect("lee check ran");
        assert_eq!(lee.runs, 10);
        let slwe = report
            .checks
            .iter()
            .find(|c| c.check == "symmetrized-lee")
            .expect("symmetrized lee check ran");
        assert_eq!(slwe.runs, 10);
    });
}

#[test]
fn criterion_9_kronecker_law() {
    criterion("9 (Kronecker law)", || {
        for factors in [[2u64, 3], [2, 2]] {
            let factor_rings: Vec<FiniteRing> = factors
                .iter()
                .map(|&m| build_ring(&presets::modular(m)).unwrap())
                .collect();
            let factor_data: Vec<RingData> = factor_rings
                .iter()
                .map(|r| RingData::new(r.clone()).unwrap())
                .collect();
            let product_spec = RingSpec::Product {
                factors: factors.iter().map(|&m| presets::modular(m)).collect(),
            };
            let product_ring = build_ring(&product_spec).unwrap();
            let order = lexicographic_product_order(
                &product_ring,
                &factor_data
                    .iter()
                    .map(|d| d.ring.as_ref())
                    .collect::<Vec<_>>(),
                &factor_data.iter().map(|d| &d.classes).collect::<Vec<_>>(),
            )
            .unwrap();
            let product = RingData::with_order(product_ring, Some(&order)).unwrap();
            let factor_matrices: Vec<_> = factor_data.iter().map(|d| &d.matrices).collect();
            assert!(
                kronecker_check(&factor_matrices, &product.matrices).unwrap(),
                "Kronecker law fails for {factors:?}"
            );
        }

        // Z2 x Z3 is Z6 in disguise: S agrees with Z6's S under the
        // simultaneous permutation induced by r -> (r mod 2, r mod 3).
        let z6 = data_for(&presets::modular(6), None);
        let z2 = RingData::new(build_ring(&presets::modular(2)).unwrap()).unwrap();
        let z3 = RingData::new(build_ring(&presets::modular(3)).unwrap()).unwrap();
        let product_spec = RingSpec::Product {
            factors: vec![presets::modular(2), presets::modular(3)],
        };
        let product_ring = build_ring(&product_spec).unwrap();
        let order = lexicographic_product_order(
            &product_ring,
            &[z2.ring.as_ref(), z3.ring.as_ref()],
            &[&z2.classes, &z3.classes],
        )
        .unwrap();
        let product = RingData::with_order(product_ring, Some(&order)).unwrap();
        // Class permutation via the ring isomorphism.
        let image_class: Vec<usize> = z6
            .classes
            .reps
            .iter()
            .map(|&r| {
                let e = (r % 2) * 3 + (r % 3);
                product.classes.class_of[e]
            })
            .collect();
        let n = z6.classes.count();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    z6.matrices.s.get(i, j),
                    product.matrices.s.get(image_class[i], image_class[j])
                );
            }
        }
    });
}
