//! The full verification grid: every structural identity the crate
//! computes, swept over ranges of genus, degrees and divisor shapes, with
//! seeded randomized cases where enumeration is impractical. Used by the
//! acceptance test suite and by the `sweep` CLI subcommand.

use crate::divisor::{Divisor, Point};
use crate::higgschart::{
    build_pair, eigen_divisor, extract_q, extract_q_via_chart2, scalar_action, solve_gluing,
    LaurentJet, LaurentWire,
};
use crate::localring::{
    is_free_rank_one, minimal_generator_count, multiply, pullback_even, pullback_odd, LocalAlgebra,
    Poly2,
};
use crate::parmod::{
    restriction_kernel, u_lambda, verify_mixed_overlap, verify_nonfibration, Lambda,
};
use crate::redfibre::{StrataContext, Stratum};
use crate::scalar::{rat, Gauss, Rat};
use crate::spectral::{
    classify, fibre_report, jacobian_kernel_shape, normalization_genus, prym_data, spectral_genus,
    BaseData, SectionData,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of one criterion of the grid.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub pass: bool,
    pub cases: usize,
    pub detail: String,
}

impl CriterionResult {
    fn new(index: usize, name: &'static str) -> Self {
        CriterionResult {
            index,
            name,
            pass: true,
            cases: 0,
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.pass {
            self.pass = false;
            self.detail = describe();
        }
    }

    fn finish(mut self) -> Self {
        if self.pass {
            self.detail = format!("{} checks", self.cases);
        }
        self
    }
}

/// Run the whole grid in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}

/// All partitions of `n` into parts >= 1, each partition descending.
fn partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(n: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `max_parts` parts.
fn partitions_bounded(n: i64, max_parts: usize) -> Vec<Vec<i64>> {
    partitions(n)
        .into_iter()
        .filter(|p| p.len() <= max_parts)
        .collect()
}

fn divisor_from_parts(parts: &[i64]) -> Divisor {
    Divisor::from_pairs(
        parts
            .iter()
            .enumerate()
            .map(|(k, &m)| (Point::new(format!("q{}", k + 1)), m)),
    )
}

/// Irreducible-branch dimension identity over all multiplicity partitions.
pub fn criterion_1() -> CriterionResult {
    let mut r = CriterionResult::new(1, "irreducible-branch dimension identity");
    for g in 2..=5 {
        for d_l in 1..=6 {
            let base = BaseData::new(g, d_l, 0).expect("valid base");
            for parts in partitions(2 * d_l) {
                let d_s = divisor_from_parts(&parts);
                let sec = SectionData::new(d_s, false).expect("effective");
                let profile = match classify(&base, &sec) {
                    Ok(p) => p,
                    Err(e) => {
                        r.check(false, || format!("classify failed at {parts:?}: {e}"));
                        continue;
                    }
                };
                let (torus, affine) = jacobian_kernel_shape(&profile);
                let (prym, _) = prym_data(&base, &profile);
                r.check(prym + torus + affine == d_l + g - 1, || {
                    format!(
                        "g={g} d_l={d_l} parts={parts:?}: {prym}+{torus}+{affine} != {}",
                        d_l + g - 1
                    )
                });
            }
        }
    }
    r.finish()
}

/// Genus bookkeeping: arithmetic genus minus normalization genus equals the
/// delta-divisor degree.
pub fn criterion_2() -> CriterionResult {
    let mut r = CriterionResult::new(2, "genus bookkeeping");
    for g in 2..=5 {
        for d_l in 1..=6 {
            let base = BaseData::new(g, d_l, 0).expect("valid base");
            for parts in partitions(2 * d_l) {
                let d_s = divisor_from_parts(&parts);
                let sec = SectionData::new(d_s.clone(), false).expect("effective");
                let profile = classify(&base, &sec).expect("consistent");
                let drop = spectral_genus(&base) - normalization_genus(&base, &profile);
                let delta = d_s.delta_divisor().expect("effective").degree();
                r.check(drop == delta, || {
                    format!("g={g} d_l={d_l} parts={parts:?}: drop {drop} != delta {delta}")
                });
            }
        }
    }
    r.finish()
}

fn sqrt_divisor_shapes(max_deg: i64, max_points: usize) -> Vec<Divisor> {
    let mut shapes = Vec::new();
    for d_l in 1..=max_deg {
        for parts in partitions_bounded(d_l, max_points) {
            shapes.push(divisor_from_parts(&parts));
        }
    }
    shapes
}

/// Reducible-branch strata: dimensions, the Jacobian stratum, the partner
/// involution and graph connectivity.
pub fn criterion_3() -> CriterionResult {
    let mut r = CriterionResult::new(3, "reducible-branch strata");
    for g in 2..=4 {
        for d in -3..=6 {
            for sqrt in sqrt_divisor_shapes(4, 3) {
                let ctx = StrataContext::new(g, d, sqrt.clone()).expect("valid context");
                let d_l = ctx.d_l();
                let strata = ctx.enumerate_strata();
                let tag = || format!("g={g} d={d} D'={sqrt}");

                let max = strata.iter().map(|(_, i)| i.dim).max().unwrap_or(i64::MIN);
                r.check(max == d_l + g - 1, || {
                    format!("{}: max dim {max} != {}", tag(), d_l + g - 1)
                });

                let zeros: Vec<_> = strata.iter().filter(|(s, _)| s.d.is_zero()).collect();
                if d % 2 == 0 {
                    r.check(
                        zeros.len() == 1 && zeros[0].1.dim == g && zeros[0].0.m == d / 2,
                        || format!("{}: bad Jacobian stratum", tag()),
                    );
                } else {
                    r.check(zeros.is_empty(), || {
                        format!("{}: Jacobian stratum for odd d", tag())
                    });
                }

                // the reduced enumeration keeps the larger of the two
                // partner degrees
                for (s, info) in &strata {
                    r.check(s.m >= info.partner_m, || {
                        format!("{}: kept m={} below partner {}", tag(), s.m, info.partner_m)
                    });
                }

                // partner map is an involution on the full window
                for s in ctx.enumerate_strata_full() {
                    let partner = Stratum {
                        d: s.d.clone(),
                        m: ctx.partner_m(&s),
                    };
                    let ok = ctx.validate(&partner).is_ok() && ctx.partner_m(&partner) == s.m;
                    r.check(ok, || {
                        format!("{}: partner of (D={}, m={}) broken", tag(), s.d, s.m)
                    });
                }

                let graph = ctx.connectivity_graph();
                r.check(graph.connected, || format!("{}: graph disconnected", tag()));
            }
        }
    }
    r.finish()
}

fn random_divisor_below(rng: &mut ChaCha8Rng, bound: &Divisor) -> Divisor {
    Divisor::from_pairs(bound.iter().map(|(p, m)| (p.clone(), rng.gen_range(0..=m))))
}

/// Exponent-window lattice laws on randomized divisor pairs.
pub fn criterion_4() -> CriterionResult {
    let mut r = CriterionResult::new(4, "exponent-window lattice laws");
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c41_5454);
    for sqrt in sqrt_divisor_shapes(4, 3) {
        let ctx = StrataContext::new(2, 0, sqrt.clone()).expect("valid context");
        for _ in 0..200 {
            let d1 = random_divisor_below(&mut rng, &sqrt);
            let d2 = random_divisor_below(&mut rng, &sqrt);
            r.check(ctx.lattice_check(&d1, &d2), || {
                format!("D'={sqrt}: lattice law failed at D1={d1}, D2={d2}")
            });
        }
    }
    r.finish()
}

/// The shared-sheaf computations: the two-bundle overlap for every even
/// multiplicity, and the mixed-vanishing variant when 4 divides m.
pub fn criterion_5() -> CriterionResult {
    let mut r = CriterionResult::new(5, "parabolic overlap verifications");
    for m in [2i64, 4, 6, 8, 10] {
        r.check(verify_nonfibration(m), || {
            format!("overlap failed at m={m}")
        });
    }
    for m in [4i64, 8] {
        r.check(verify_mixed_overlap(m), || {
            format!("mixed overlap failed at m={m}")
        });
    }
    r.finish()
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly2<Rat> {
    let mut p = Poly2::zero();
    let terms = rng.gen_range(1..=4);
    for _ in 0..terms {
        let i = rng.gen_range(0..=2u32);
        let j = rng.gen_range(0..=4u32.saturating_sub(i));
        let c = rng.gen_range(-3i64..=3);
        p.add_term(i, j, rat(c));
    }
    p
}

/// The coordinate-ring maps are ring homomorphisms into the jet algebras.
pub fn criterion_6() -> CriterionResult {
    let mut r = CriterionResult::new(6, "coordinate-ring homomorphism");
    let mut rng = ChaCha8Rng::seed_from_u64(0x484f_4d4f);
    for m in 2..=9i64 {
        let alg = LocalAlgebra::new(m);
        let order = m as usize;
        for _ in 0..100 {
            let g = random_poly(&mut rng);
            let h = random_poly(&mut rng);
            let gh = &g * &h;
            let (lhs, rhs) = if m % 2 == 0 {
                (
                    pullback_even(&gh, m, order),
                    multiply(&pullback_even(&g, m, order), &pullback_even(&h, m, order)),
                )
            } else {
                (
                    pullback_odd(&gh, m, order),
                    multiply(&pullback_odd(&g, m, order), &pullback_odd(&h, m, order)),
                )
            };
            r.check(lhs == rhs, || format!("m={m}: image of product differs"));
            r.check(alg.contains(&lhs).unwrap_or(false), || {
                format!("m={m}: image not in the algebra")
            });
        }
    }
    r.finish()
}

/// Invertibility dichotomy for gluing-line data at an ordinary node.
pub fn criterion_7() -> CriterionResult {
    let mut r = CriterionResult::new(7, "gluing-line invertibility dichotomy");
    let n = 4usize;
    let alg = LocalAlgebra::with_truncation(2, n);
    for l in [rat(1), rat(2), rat(-3)] {
        let lc = l.clone();
        let ker = restriction_kernel(0, &u_lambda(&Lambda::Finite(l)), n).expect("kernel");
        r.check(is_free_rank_one(&ker.space, &alg), || {
            format!("lambda={lc} should be free of rank 1")
        });
    }
    for (name, l) in [("0", Lambda::Finite(rat(0))), ("inf", Lambda::Infinity)] {
        let ker = restriction_kernel(0, &u_lambda(&l), n).expect("kernel");
        r.check(minimal_generator_count(&ker.space, &alg) == 2, || {
            format!("lambda={name} should need two generators")
        });
    }
    r.finish()
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(
        rng.gen_range(-9i64..=9).into(),
        rng.gen_range(1i64..=9).into(),
    )
}

fn random_gauss(rng: &mut ChaCha8Rng) -> Gauss {
    let re = random_rat(rng);
    let im = if rng.gen_bool(0.5) {
        Rat::zero()
    } else {
        random_rat(rng)
    };
    Gauss::new(re, im)
}

fn random_nonzero_gauss(rng: &mut ChaCha8Rng) -> Gauss {
    loop {
        let g = random_gauss(rng);
        if !g.is_zero() {
            return g;
        }
    }
}

/// One offending input from the chart fuzzer.
#[derive(Clone, Debug, Serialize)]
pub struct ChartFailure {
    pub trial: usize,
    pub n: i64,
    pub check: String,
    pub s_prime: LaurentWire,
    pub q: LaurentWire,
}

/// Summary of a chart fuzz run.
#[derive(Debug, Serialize)]
pub struct ChartFuzzReport {
    pub seed: u64,
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<ChartFailure>,
}

/// Fuzz the chart construction: gluing, compatibility, trace, determinant,
/// the eigen-divisor case table, extraction round trips and the scalar
/// conjugation, all exact.
pub fn chart_fuzz(seed: u64, trials: usize) -> ChartFuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ChartFuzzReport {
        seed,
        trials,
        checks: 0,
        failures: Vec::new(),
    };
    for trial in 0..trials {
        let n = rng.gen_range(1i64..=5);
        // section of order exactly n, known well past 2n
        let window = (2 * n + 2) as usize;
        let mut coeffs = vec![random_nonzero_gauss(&mut rng)];
        for _ in 1..window {
            coeffs.push(if rng.gen_bool(0.5) {
                Gauss::zero()
            } else {
                random_gauss(&mut rng)
            });
        }
        let s_prime = LaurentJet::series(n, coeffs);
        let q = if rng.gen_bool(0.125) {
            LaurentJet::zero()
        } else {
            LaurentJet::exact(0, (0..n).map(|_| random_gauss(&mut rng)).collect())
        };

        let fail = |report: &mut ChartFuzzReport, check: &str| {
            report.failures.push(ChartFailure {
                trial,
                n,
                check: check.to_string(),
                s_prime: (&s_prime).into(),
                q: (&q).into(),
            });
        };

        report.checks += 1;
        let data = match solve_gluing(&q, &s_prime, n) {
            Ok(d) => d,
            Err(e) => {
                fail(&mut report, &format!("gluing: {e}"));
                continue;
            }
        };

        report.checks += 1;
        let pair = match build_pair(&data, 0, 1) {
            Ok(p) => p,
            Err(e) => {
                fail(&mut report, &format!("build: {e}"));
                continue;
            }
        };

        // eigen-divisor case table
        report.checks += 1;
        let e = eigen_divisor(&s_prime, &q);
        let table_ok = match e.k2 {
            Some(k2) => {
                // the datum lives below degree n, so its order is too
                k2 < n && e.d_at_p == n - k2 && (0..=n).contains(&e.d_at_p) && e.d_at_p > 0
            }
            None => e.d_at_p == 0,
        } && e.k1 == n;
        if !table_ok {
            fail(&mut report, "eigen-divisor case table");
        }

        // datum vanishes exactly when the meeting divisor does
        report.checks += 1;
        if (q.ord().is_none()) != (e.d_at_p == 0) {
            fail(&mut report, "q = 0 iff D = 0");
        }

        // extraction round trips, from both charts
        report.checks += 1;
        if !extract_q(&pair).eq_mod(&q, n) {
            fail(&mut report, "extraction round trip");
        }
        report.checks += 1;
        if !extract_q_via_chart2(&pair).eq_mod(&q, n) {
            fail(&mut report, "chart-2 extraction");
        }

        // scalar conjugation
        report.checks += 1;
        let sqrt_beta = random_nonzero_gauss(&mut rng);
        let beta = sqrt_beta.clone() * sqrt_beta.clone();
        match scalar_action(&pair, &sqrt_beta) {
            Ok(scaled) => {
                if !extract_q(&scaled).eq_mod(&q.scale(&beta), n) {
                    fail(&mut report, "scalar action on the datum");
                }
            }
            Err(e) => fail(&mut report, &format!("scalar action: {e}")),
        }
    }
    report
}

/// Chart-level identities under fuzzing.
pub fn criterion_8() -> CriterionResult {
    let mut r = CriterionResult::new(8, "chart construction round trip");
    let report = chart_fuzz(0x4348_4152, 500);
    r.cases = report.checks;
    if let Some(f) = report.failures.first() {
        r.pass = false;
        r.detail = format!("trial {} failed: {}", f.trial, f.check);
    }
    r.finish()
}

/// Embedding strata into the analysis for a larger square-root divisor.
pub fn criterion_9() -> CriterionResult {
    let mut r = CriterionResult::new(9, "embedding into a larger divisor");
    let mut rng = ChaCha8Rng::seed_from_u64(0x454d_4245);
    let mut done = 0;
    while done < 50 {
        let g = rng.gen_range(2i64..=4);
        let d = rng.gen_range(-3i64..=6);
        let n_points = rng.gen_range(1usize..=3);
        let sqrt = Divisor::from_pairs(
            (0..n_points).map(|k| (Point::new(format!("q{}", k + 1)), rng.gen_range(1i64..=2))),
        );
        // grow at existing points and possibly a new one
        let mut extra = Divisor::from_pairs(
            sqrt.iter()
                .map(|(p, _)| (p.clone(), rng.gen_range(0i64..=2))),
        );
        if rng.gen_bool(0.3) {
            extra = extra + Divisor::point("w", rng.gen_range(1i64..=2));
        }
        if extra.is_zero() {
            continue;
        }
        let d_tilde = &sqrt + &extra;

        let ctx = StrataContext::new(g, d, sqrt.clone()).expect("valid context");
        let strata = ctx.enumerate_strata();
        if strata.is_empty() {
            continue;
        }
        let (s, info) = &strata[rng.gen_range(0..strata.len())];
        done += 1;

        let tag = || format!("g={g} d={d} D'={sqrt} D~={d_tilde} D={} m={}", s.d, s.m);
        match ctx.embed_into_larger(s, &d_tilde) {
            Ok((big, image)) => {
                r.check(image.m == s.m, || format!("{}: m changed", tag()));
                r.check(image.d == &(&d_tilde - &sqrt) + &s.d, || {
                    format!("{}: wrong image divisor", tag())
                });
                r.check(big.validate(&image).is_ok(), || {
                    format!("{}: image invalid", tag())
                });

                // the coefficient bundle grows by exactly deg(extra);
                // the stratum dimension does too, except that the
                // Jacobian stratum first picks up the scalar quotient
                let shift = extra.degree();
                let e_ok =
                    big.coefficient_bundle_dim(&image) == ctx.coefficient_bundle_dim(s) + shift;
                r.check(e_ok, || format!("{}: coefficient bundle shift", tag()));
                let expected = if s.d.is_zero() {
                    info.dim + shift - 1
                } else {
                    info.dim + shift
                };
                r.check(big.stratum_dim(&image) == expected, || {
                    format!("{}: dim {} != {expected}", tag(), big.stratum_dim(&image))
                });

                // slot windows extend on the right without moving
                let old_slots = ctx.index_set(&s.d);
                let new_slots = big.index_set(&image.d);
                let windows_ok = old_slots.iter().all(|(p, old)| {
                    let new = &new_slots[p];
                    old.is_subset(new) && (old.is_empty() || old.iter().min() == new.iter().min())
                });
                r.check(windows_ok, || format!("{}: slot windows moved", tag()));
            }
            Err(e) => r.check(false, || format!("{}: embed failed: {e}", tag())),
        }
    }
    r.finish()
}

/// The reducible-regime report agrees with the irreducible-route numbers on
/// every context of the strata sweep; exercised via `fibre_report`.
pub fn cross_check_reducible_reports() -> CriterionResult {
    let mut r = CriterionResult::new(0, "cross-check of the two branches");
    for g in 2..=4 {
        for d in -2..=4 {
            for sqrt in sqrt_divisor_shapes(3, 2) {
                let d_s = &sqrt + &sqrt;
                let base = BaseData::new(g, sqrt.degree(), d).expect("valid base");
                let sec = SectionData::new(d_s, true).expect("valid section");
                let ok = matches!(fibre_report(&base, &sec), Ok(rep) if rep.connected);
                r.check(ok, || format!("g={g} d={d} D'={sqrt}: report failed"));
            }
        }
    }
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        let p = partitions(4);
        assert_eq!(p.len(), 5);
        assert!(p.contains(&vec![2, 1, 1]));
        assert_eq!(partitions_bounded(4, 3).len(), 4);
    }

    #[test]
    fn fuzz_is_deterministic() {
        let a = chart_fuzz(7, 25);
        let b = chart_fuzz(7, 25);
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.failures.len(), b.failures.len());
        assert!(a.failures.is_empty());
    }

    #[test]
    fn branch_cross_check() {
        assert!(cross_check_reducible_reports().pass);
    }
}
