//! Seeded randomized suites exercising the duality identities on the
//! built-in rings: cardinality and double-dual laws, column-span counts, and
//! the Hamming, weight, support, tuple and Lee identities.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::code::{column_span_size, dual, span, LinearCode};
use crate::enumerator::swe;
use crate::error::Result;
use crate::poly::MPoly;
use crate::presets;
use crate::ring::build_ring;
use crate::verify::{verify_identity, Kind};
use crate::RingData;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub codes_per_ring: usize,
    pub tuple_codes_per_ring: usize,
    pub cap: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            codes_per_ring: 20,
            tuple_codes_per_ring: 5,
            cap: crate::code::DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckSummary {
    pub ring: String,
    pub check: String,
    pub runs: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckSummary>,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| !c.failures.is_empty())
    }

    pub fn total_failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.failures.is_empty() { "ok" } else { "FAIL" };
            writeln!(
                out,
                "{:24} {:14} {:3} runs  {}",
                c.ring, c.check, c.runs, status
            )
            .unwrap();
            for f in &c.failures {
                writeln!(out, "    failure: {f}").unwrap();
            }
        }
        out
    }

    fn entry(&mut self, ring: &str, check: &str) -> &mut CheckSummary {
        if let Some(i) = self
            .checks
            .iter()
            .position(|c| c.ring == ring && c.check == check)
        {
            return &mut self.checks[i];
        }
        self.checks.push(CheckSummary {
            ring: ring.to_string(),
            check: check.to_string(),
            runs: 0,
            failures: Vec::new(),
        });
        self.checks.last_mut().unwrap()
    }

    fn record(&mut self, ring: &str, check: &str, ok: bool, context: impl Fn() -> String) {
        let e = self.entry(ring, check);
        e.runs += 1;
        if !ok {
            e.failures.push(context());
        }
    }
}

fn random_code(
    rng: &mut StdRng,
    data: &RingData,
    max_n: usize,
    max_m: usize,
    cap: u64,
) -> LinearCode {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(1..=max_m);
    let gens: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| rng.random_range(0..data.ring.size()))
                .collect()
        })
        .collect();
    span(Arc::clone(&data.ring), gens, cap).expect("within cap")
}

fn gens_label(data: &RingData, code: &LinearCode) -> String {
    let rows: Vec<String> = code
        .generators()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| data.ring.label(e).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

/// The main randomized battery over every built-in Frobenius ring: the
/// cardinality law |C|·|C⊥| = |R|^n, the double dual, the column-span count,
/// and the Hamming, weight and support identities; tuple identities at
/// λ = 2 run on the principal-ideal-ring subset with smaller codes.
pub fn run_identity_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for (name, spec) in presets::builtin_frobenius() {
        let data = RingData::new(build_ring(&spec)?)?;
        for _ in 0..cfg.codes_per_ring {
            let code = random_code(&mut rng, &data, 3, 2, cfg.cap);
            let ctx = || gens_label(&data, &code);
            let d = dual(&code, cfg.cap)?;

            let rn = (data.ring.size() as u128).pow(code.length() as u32);
            report.record(
                name,
                "cardinality",
                code.size() as u128 * d.size() as u128 == rn,
                ctx,
            );

            let dd = dual(&d, cfg.cap)?;
            report.record(name, "double-dual", dd.words() == code.words(), ctx);

            let cols = column_span_size(&code, cfg.cap)?;
            report.record(name, "column-span", cols == code.size() as u64, ctx);

            for kind in [Kind::Hamming, Kind::Swe, Kind::Sse] {
                let rep = verify_identity(&data, &code, kind, 1, cfg.cap)?;
                report.record(name, kind.name(), rep.equal, ctx);
            }
        }
    }
    for (name, spec) in presets::builtin_pirs() {
        let data = RingData::new(build_ring(&spec)?)?;
        for _ in 0..cfg.tuple_codes_per_ring {
            let code = random_code(&mut rng, &data, 2, 1, cfg.cap);
            let ctx = || gens_label(&data, &code);
            for kind in [Kind::TupleSwe, Kind::TupleSse] {
                let rep = verify_identity(&data, &code, kind, 2, cfg.cap)?;
                report.record(name, kind.name(), rep.equal, ctx);
            }
        }
    }
    Ok(report)
}

fn combine_images(m: &crate::matrix::IntMatrix, images: &[MPoly]) -> Vec<MPoly> {
    let vars = images[0].vars();
    (0..m.rows())
        .map(|i| {
            let mut acc = MPoly::new(vars);
            for (j, img) in images.iter().enumerate() {
                let c = BigRational::from(m.get(i, j).clone());
                acc = acc.add(&img.scale(&c));
            }
            acc
        })
        .collect()
}

/// Lee-weight battery over F2+uF2+vF2 in the published class order: the
/// bivariate Lee identity Lee_{C⊥}(x,y) = (1/|C|)·Lee_C(x+y, x−y) and the
/// four-variable symmetrized Lee identity, both exactly.
pub fn run_lee_suite(seed: u64, codes: usize, cap: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let ring = build_ring(&presets::f2_u_v())?;
    let order: Vec<usize> = presets::f2_u_v_order()
        .iter()
        .map(|l| ring.parse_element(l))
        .collect::<Result<_>>()?;
    let data = RingData::with_order(ring, Some(&order))?;
    let name = "F2+uF2+vF2";

    let lee = presets::lee_substitution();
    let slwe = presets::symmetrized_lee_substitution();

    // Structural fact behind both identities: pushing the substitution
    // vectors through S lands on their images under the bivariate and
    // four-variable Gray forms.
    let xy_sub = vec![
        MPoly::linear_form(2, &[BigInt::one(), BigInt::one()]),
        MPoly::linear_form(2, &[BigInt::one(), BigInt::from(-1)]),
    ];
    let lee_through_s = combine_images(&data.matrices.s, &lee);
    let lee_at_gray: Vec<MPoly> = lee.iter().map(|p| p.substitute(&xy_sub).unwrap()).collect();
    report.record(
        name,
        "lee-vector",
        lee_through_s == lee_at_gray,
        String::new,
    );

    let slwe_through_s = combine_images(&data.matrices.s, &slwe);
    let four = |coeffs: [i64; 4]| MPoly::linear_form(4, &coeffs.map(BigInt::from));
    let slwe_expected = vec![
        four([1, 3, 3, 1]),
        four([1, -1, -1, 1]),
        four([1, -3, 3, -1]),
        four([1, -1, -1, 1]),
        four([1, 1, -1, -1]),
        four([1, 1, -1, -1]),
    ];
    report.record(
        name,
        "slwe-vector",
        slwe_through_s == slwe_expected,
        String::new,
    );

    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..codes {
        let code = random_code(&mut rng, &data, 3, 2, cap);
        let ctx = || gens_label(&data, &code);
        let d = dual(&code, cap)?;
        let scale = BigRational::new(BigInt::one(), BigInt::from(code.size()));

        let lee_dual = swe(&d, &data.classes).specialize(&lee)?;
        let lee_code = swe(&code, &data.classes).specialize(&lee)?;
        let rhs = lee_code.substitute(&xy_sub)?.scale(&scale);
        report.record(name, "lee", lee_dual == rhs, ctx);

        let slwe_dual = swe(&d, &data.classes).specialize(&slwe)?;
        let slwe_code = swe(&code, &data.classes).specialize(&slwe)?;
        let gray4 = vec![
            four([1, 3, 3, 1]),
            four([1, 1, -1, -1]),
            four([1, -1, -1, 1]),
            four([1, -3, 3, -1]),
        ];
        let rhs = slwe_code.substitute(&gray4)?.scale(&scale);
        report.record(name, "symmetrized-lee", slwe_dual == rhs, ctx);
    }
    Ok(report)
}
