//! The acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL ...` line. The lines go straight to stdout so
//! they show up without `--nocapture`.

use std::collections::HashSet;
use std::io::Write;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ppart::closedform::{
    andrews_burge_det, andrews_burge_product, hts_count, hts_poly, matrix_r_o, mrr_det, mrr_product, verify_thm_result,
    vs_count, vs_poly,
};
use ppart::cspp::{enumerate_cspp, invariants_of};
use ppart::domino::{
    delta, delta_inverse, enumerate_domino, enumerate_paired, phi, phi_inverse, theta, theta_inverse,
};
use ppart::exact::{cauchy_binet_lhs_i, cauchy_binet_lhs_ii, cauchy_binet_rhs_i, cauchy_binet_rhs_ii, TPoly};
use ppart::tspp::{enumerate_tspp, enumerate_tspp_invariant};
use ppart::verify::{run_conjecture, run_suite, Conjecture, Status, Suite, VerificationReport, VerifyOptions};
use ppart::{Cspp, CsppInvolution, DominoClass, EnumOptions, PairKind, TsppInvolution};

fn line(k: usize, ok: bool, what: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {k}: {} {what}", if ok { "PASS" } else { "FAIL" }).unwrap();
}

fn opts() -> EnumOptions {
    EnumOptions::with_limit(9)
}

fn failures(rep: &VerificationReport, prefixes: &[&str]) -> Vec<String> {
    rep.checks
        .iter()
        .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{}: {}", c.id, c.witness))
        .collect()
}

fn determinants_report() -> &'static VerificationReport {
    static REP: OnceLock<VerificationReport> = OnceLock::new();
    REP.get_or_init(|| run_suite(Suite::Determinants, &VerifyOptions::new(7)).unwrap())
}

#[test]
fn criterion_01_catalog_counts() {
    let o = opts();
    let rho: Vec<usize> = (1..=6).map(|n| invariants_of(n, 0, CsppInvolution::RhoTilde, &o).unwrap().len()).collect();
    let gcspp: Vec<usize> = (1..=6).map(|n| enumerate_domino(DominoClass::Gcspp, n, 0, &o).unwrap().len()).collect();
    let rdpp: Vec<usize> = (1..=7).map(|n| enumerate_domino(DominoClass::Rdpp, n, 0, &o).unwrap().len()).collect();
    let cdpp: Vec<usize> = (1..=7).map(|n| enumerate_domino(DominoClass::Cdpp, n, 0, &o).unwrap().len()).collect();
    let ok = rho == [1, 2, 3, 10, 25, 140]
        && gcspp == rho
        && rdpp == [1, 1, 3, 4, 26, 50, 646]
        && cdpp == [1, 2, 3, 10, 25, 140, 588];
    line(1, ok, &format!("catalog counts: CSPP^ρ̃ {rho:?}, GCSPP {gcspp:?}, RDPP {rdpp:?}, CDPP {cdpp:?}"));
    assert!(ok);
}

#[test]
fn criterion_02_reference_values() {
    let hts: Vec<BigInt> = (1..=7).map(|n| hts_count(n).unwrap()).collect();
    let vs: Vec<BigInt> = (1..=5).map(|k| vs_count(2 * k + 1).unwrap()).collect();
    let polys_hts = [
        (2, vec![1, 1]),
        (3, vec![1, 1, 1]),
        (4, vec![2, 3, 3, 2]),
        (5, vec![3, 6, 7, 6, 3]),
    ];
    let polys_vs = [
        (3, vec![1]),
        (5, vec![1, 1, 1]),
        (7, vec![3, 6, 8, 6, 3]),
        (9, vec![26, 78, 138, 162, 138, 78, 26]),
    ];
    let hts_ok = polys_hts.iter().all(|(n, c)| hts_poly(*n).unwrap() == TPoly::from_i64s(c));
    let vs_ok = polys_vs.iter().all(|(n, c)| vs_poly(*n).unwrap() == TPoly::from_i64s(c));
    let ok = hts == [1, 2, 3, 10, 25, 140, 588].map(BigInt::from)
        && vs == [1, 3, 26, 646, 45885].map(BigInt::from)
        && hts_ok
        && vs_ok;
    line(2, ok, &format!("reference values: A^HTS {hts:?}, A^VS {vs:?}, polynomials hts {hts_ok} vs {vs_ok}"));
    assert!(ok);
}

#[test]
fn criterion_03_bijections() {
    let rep = run_suite(Suite::Bijections, &VerifyOptions::new(7)).unwrap();
    let bad = failures(&rep, &[""]);

    // Direct pass over the same ground: round trips and statistic transfers.
    let o = opts();
    let mut direct = Vec::new();
    for total in 1..=7 {
        for n in 1..=total {
            let m = total - n;
            for c in enumerate_cspp(n, m, &o).unwrap() {
                if total <= 6 {
                    let b = c.to_tspp().unwrap();
                    if Cspp::from_tspp(&b).unwrap() != c {
                        direct.push(format!("Γ round trip {n},{m}"));
                    }
                    for r in 1..n + m {
                        if c.stat_ubar(r).unwrap() != b.stat_ubar(r).unwrap() {
                            direct.push(format!("Γ Ū_{r} {n},{m}"));
                        }
                        if (r >= 2 || m <= 1) && c.tbk(r).unwrap().to_tspp().unwrap() != b.pi(r).unwrap() {
                            direct.push(format!("flip {r} {n},{m}"));
                        }
                    }
                }
            }
            for c in invariants_of(n, m, CsppInvolution::RhoTilde, &o).unwrap() {
                let d = theta(&c).unwrap();
                if theta_inverse(&d).unwrap() != c || d.stat_ubar(1) != c.stat_ubar(1).unwrap() {
                    direct.push(format!("Θ {n},{m}"));
                }
            }
            if m == 0 && n % 2 == 1 && n >= 3 {
                for c in invariants_of(n, 0, CsppInvolution::GammaTilde, &o).unwrap() {
                    let e = delta(&c).unwrap();
                    if delta_inverse(&e).unwrap() != c || e.stat_ubar(1) != c.stat_ubar(2).unwrap() {
                        direct.push(format!("Δ {n}"));
                    }
                }
            }
            for class in [DominoClass::Dpp, DominoClass::Rdpp, DominoClass::Cdpp] {
                for d in enumerate_domino(class, n, m, &o).unwrap() {
                    let p = phi(&d).unwrap();
                    let stats_ok = (1..=n + m).all(|r| p.stat_ubar(r) == d.stat_ubar(r));
                    if phi_inverse(&p).unwrap() != d || !stats_ok {
                        direct.push(format!("Φ {} {n},{m}", class.name()));
                    }
                }
            }
        }
    }
    direct.dedup();
    let ok = bad.is_empty() && direct.is_empty();
    line(
        3,
        ok,
        &format!("bijections: {} suite checks, {} failing; direct sweep failures {:?}", rep.checks.len(), bad.len(), direct),
    );
    assert!(ok, "{bad:?} {direct:?}");
}

#[test]
fn criterion_04_mrr6_desk_scale() {
    let o = opts();
    let mut literal = true;
    let mut corrected = true;
    let mut detail = Vec::new();
    for n in 2..=4 {
        let fixed = enumerate_tspp_invariant(2 * n + 1, 0, TsppInvolution::Gamma, &o).unwrap();
        let u2 = TPoly::distribution(fixed.iter().map(|b| b.stat_u(2).unwrap()));
        let ubar2 = TPoly::distribution(fixed.iter().map(|b| b.stat_ubar(2).unwrap()));
        let det = matrix_r_o(n).determinant().unwrap();
        literal &= u2 == det;
        corrected &= ubar2 == det && u2 == &det * &TPoly::monomial(1, 2);
        detail.push(format!("n={n}: |set|={} det={det} ΣU₂={u2}", fixed.len()));
    }
    let det3 = matrix_r_o(3).determinant().unwrap();
    let value_ok = det3 == TPoly::from_i64s(&[3, 6, 8, 6, 3]);
    line(4, literal && value_ok, &format!("Σ t^U₂ over TSPP_(2n+1)^γ = det R°_n(t), n=2..4: {}", detail.join("; ")));
    if !literal {
        writeln!(
            std::io::stdout(),
            "  analysis: the literal identity is off by a factor t². At every size checked \
             Σ t^U₂ = t²·det R°_n(t), and the transferred statistic Ū₂ gives det R°_n(t) \
             exactly (checked: {corrected}). det R°_3(t) = {det3}"
        )
        .unwrap();
    }
    assert!(corrected && value_ok);
}

#[test]
fn criterion_05_determinants_vs_enumeration() {
    let bad = failures(determinants_report(), &["det.", "cspp_shape."]);
    let checked = determinants_report().checks.iter().filter(|c| c.id.starts_with("det.")).count();
    line(5, bad.is_empty(), &format!("det R'/C' = Σ t^Ū_k for RDPP/CDPP, n+m ≤ 7: {checked} sizes, failures {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_06_theorem_result() {
    let mut bad = Vec::new();
    let mut r3 = Vec::new();
    for r in 1..=6 {
        for c in verify_thm_result(r).unwrap() {
            if !c.holds {
                bad.push(format!("{} {}", c.id, c.statement));
            }
            if r == 3 && c.id.starts_with("thm_result.i") {
                r3.push(c.lhs);
            }
        }
    }
    let ok = bad.is_empty() && r3 == ["26", "50", "25", "140"];
    line(6, ok, &format!("t=1 evaluations for r ≤ 6 (r=3: {r3:?}), failures {bad:?}"));
    assert!(ok);
}

#[test]
fn criterion_07_andrews_burge() {
    let mut bad = Vec::new();
    for n in 1..=6 {
        for x in 0..=4 {
            for y in 0..=4 {
                if andrews_burge_det(n, x, y) != andrews_burge_product(n, x, y) {
                    bad.push((n, x, y));
                }
            }
            if mrr_det(n, x) != mrr_product(n, x) {
                bad.push((n, x, x));
            }
        }
    }
    line(7, bad.is_empty(), &format!("determinant = product for n ≤ 6, x,y ∈ 0..4, failures {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_08_cauchy_binet() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let trials = 250;
    let mut bad = 0;
    for _ in 0..trials {
        let n = rng.gen_range(1..=3);
        let big = rng.gen_range(n..=6);
        let mut random = || -> Vec<Vec<i64>> {
            (0..n).map(|_| (0..big).map(|_| rng.gen_range(-3..=3)).collect()).collect()
        };
        let (a, b) = (random(), random());
        let i = cauchy_binet_lhs_i(&a, &b).unwrap() == cauchy_binet_rhs_i(&a, &b).unwrap();
        let ii = cauchy_binet_lhs_ii(&a, &b).unwrap() == cauchy_binet_rhs_ii(&a, &b).unwrap();
        bad += usize::from(!(i && ii));
    }
    let suite_bad = failures(determinants_report(), &["cauchy_binet."]);
    let ok = bad == 0 && suite_bad.is_empty();
    line(8, ok, &format!("both variants on {trials} random matrices plus the suite's 200: {bad} mismatches"));
    assert!(ok);
}

#[test]
fn criterion_09_conjecture_reports() {
    let o = VerifyOptions::new(7);
    let mut summary = Vec::new();
    let mut all_reported = true;
    for (which, max) in [
        (Conjecture::DetForms, 6),
        (Conjecture::GcsppCdpp, 7),
        (Conjecture::Mrr4, 6),
        (Conjecture::Mrr6, 7),
    ] {
        let rep = run_conjecture(which, &o).unwrap();
        all_reported &= rep.checks.iter().all(|c| c.status == Status::Reported);
        let in_range = |id: &str| -> bool {
            let nums: Vec<usize> = id.split('.').filter_map(|s| s.parse().ok()).collect();
            nums.iter().sum::<usize>() <= max || which == Conjecture::DetForms && nums.iter().all(|&r| r <= max)
        };
        let relevant: Vec<_> = rep.checks.iter().filter(|c| in_range(&c.id)).collect();
        let agree = relevant.iter().filter(|c| c.witness["agree"] == true).count();
        let mut entry = format!("{} {agree}/{} agree", which.name(), relevant.len());
        if which == Conjecture::Mrr6 {
            let ubar = relevant.iter().filter(|c| c.witness["agree_ubar2"] == true).count();
            entry.push_str(&format!(" (with Ū₂ in place of U₂: {ubar}/{})", relevant.len()));
        }
        summary.push(entry);
    }
    line(9, all_reported, &format!("status reported: {}", summary.join(", ")));
    assert!(all_reported);
}

#[test]
fn criterion_10_properties() {
    let seq = EnumOptions::with_limit(9);
    let par = seq.with_jobs(4);
    let mut bad = Vec::new();
    for total in 1..=6 {
        for n in 1..=total {
            let m = total - n;
            let t1 = enumerate_tspp(n, m, &seq).unwrap();
            if t1 != enumerate_tspp(n, m, &par).unwrap() || t1.iter().collect::<HashSet<_>>().len() != t1.len() {
                bad.push(format!("tspp {n},{m} order/duplicates"));
            }
            for b in &t1 {
                let back = b.rho().unwrap().rho().unwrap() == *b
                    && (m > 1 || b.gamma().unwrap().gamma().unwrap() == *b);
                if b.validate().is_err() || !back {
                    bad.push(format!("tspp {n},{m}"));
                }
            }
            let c1 = enumerate_cspp(n, m, &seq).unwrap();
            if c1 != enumerate_cspp(n, m, &par).unwrap() || c1.iter().collect::<HashSet<_>>().len() != c1.len() {
                bad.push(format!("cspp {n},{m} order/duplicates"));
            }
            for c in &c1 {
                let first = if m <= 1 { 1 } else { 2 };
                let tbk = (first..=n + m).all(|r| c.tbk(r).unwrap().tbk(r).unwrap() == *c);
                let back = c.rho_tilde().unwrap().rho_tilde().unwrap() == *c
                    && (m > 1 || c.gamma_tilde().unwrap().gamma_tilde().unwrap() == *c);
                if c.validate().is_err() || !tbk || !back {
                    bad.push(format!("cspp {n},{m}"));
                }
            }
            for class in [DominoClass::Gcspp, DominoClass::Dpp, DominoClass::Rdpp, DominoClass::Cdpp] {
                let d1 = enumerate_domino(class, n, m, &seq).unwrap();
                let unique = d1.iter().collect::<HashSet<_>>().len() == d1.len();
                if d1 != enumerate_domino(class, n, m, &par).unwrap() || !unique || d1.iter().any(|d| d.validate().is_err()) {
                    bad.push(format!("{} {n},{m}", class.name()));
                }
            }
            for kind in [PairKind::Hpcspp, PairKind::Vpcspp] {
                let p1 = enumerate_paired(kind, n, m, &seq).unwrap();
                let unique = p1.iter().collect::<HashSet<_>>().len() == p1.len();
                if p1 != enumerate_paired(kind, n, m, &par).unwrap() || !unique {
                    bad.push(format!("{} {n},{m}", kind.name()));
                }
            }
        }
    }
    bad.dedup();
    line(10, bad.is_empty(), &format!("validators, involutions, duplicate-free and job-stable for n+m ≤ 6: failures {bad:?}"));
    assert!(bad.is_empty());
}
