//! Acceptance gate: every criterion at its stated tolerance, one
//! PASS/FAIL line each. Indented lines are supporting detail.

use std::process::ExitCode;
use std::time::Instant;

use noma_outage::analytic::{
    gamma_t_pdf_parts, laplace_ib_exact, laplace_ib_gc, order_statistic_cdf, outage_floor_proportional,
    unordered_cdf_exact, OutageModel, PathLoss, QuadratureSpec, RateAllocation, Snr, SystemParams,
    UnorderedExpansion,
};
use noma_outage::harness::{fit_diversity, parse_config, run_analytic_sweep};
use noma_outage::numerics::{chebyshev_rule, integrate};
use noma_outage::sim::stats::{binomial_stderr, ks_distance, mean_and_stderr};
use noma_outage::sim::{
    estimate_outage_with, InterferenceField, NetworkSampler, Purpose, SimOptions, TrialStreams,
    DEFAULT_TRUNCATION_TOL,
};

const SEED: u64 = 20_170_901;

struct Outcome {
    passed: bool,
    summary: String,
    detail: Vec<String>,
}

fn fig1a(rd: f64, rho_s_db: f64) -> SystemParams {
    SystemParams::builder()
        .users(3)
        .alpha(4.0)
        .user_zone_radius(rd)
        .pt_density(1e-3)
        .pr_density(1e-3)
        .kappa(1.0)
        .rho_b_db(20.0)
        .rho_s_db(rho_s_db)
        .build()
        .unwrap()
}

fn fig1a_alloc() -> RateAllocation {
    RateAllocation::new(vec![0.5, 0.4, 0.1], vec![0.1; 3]).unwrap()
}

fn scenario_two(lambda: f64, kappa: f64, nu: f64, rho_s_db: f64) -> SystemParams {
    SystemParams::builder()
        .users(2)
        .alpha(4.0)
        .user_zone_radius(10.0)
        .pt_density(lambda)
        .pr_density(lambda)
        .kappa(kappa)
        .nu(nu)
        .rho_s_db(rho_s_db)
        .build()
        .unwrap()
}

fn scenario_two_alloc() -> RateAllocation {
    RateAllocation::new(vec![0.8, 0.2], vec![0.1, 0.1]).unwrap()
}

fn converged() -> QuadratureSpec {
    QuadratureSpec::new(40, 20, 20).unwrap()
}

fn criterion_1() -> Outcome {
    let alloc = fig1a_alloc();
    let mut detail = Vec::new();
    let mut passed = true;
    let mut compared = 0;
    let mut coarse_misses = 0;
    for rd in [5.0, 10.0] {
        let model = OutageModel::new(&fig1a(rd, 0.0), &converged()).unwrap();
        let coarse = OutageModel::new(&fig1a(rd, 0.0), &QuadratureSpec::default()).unwrap();
        for db in [10.0, 20.0, 30.0, 40.0] {
            let at = model.at_rho_s(Snr::from_db(db)).unwrap();
            let sim = estimate_outage_with(at.params(), &alloc, &SimOptions::new(1_000_000, SEED)).unwrap();
            for m in 1..=3 {
                let a = at.outage(m, &alloc).unwrap().probability;
                let a5 = coarse
                    .at_rho_s(Snr::from_db(db))
                    .unwrap()
                    .outage(m, &alloc)
                    .unwrap()
                    .probability;
                let (s, se) = (sim.per_user_outage[m - 1], sim.std_err[m - 1]);
                let band = (0.1 * s).max(3.0 * se);
                let ok = a < 1e-3 || (a - s).abs() <= band;
                let ok5 = a5 < 1e-3 || (a5 - s).abs() <= band;
                if a >= 1e-3 {
                    compared += 1;
                    coarse_misses += usize::from(!ok5);
                }
                passed &= ok;
                detail.push(format!(
                    "R_D={rd} {db} dB m={m}: analytic {a:.4e} (N=5: {a5:.4e}{}) sim {s:.4e} ± {se:.1e} {}",
                    if ok5 { "" } else { ", outside band" },
                    if a < 1e-3 { "below 1e-3" } else if ok { "ok" } else { "MISS" }
                ));
            }
        }
    }
    detail.push(format!(
        "N=40,K=20,L=20 used; the N=5,K=10,L=10 rule misses the band at {coarse_misses} of {compared} points"
    ));
    Outcome {
        passed,
        summary: format!("{compared} points compared, analytic within max(10%, 3σ) of 1e6-trial simulation"),
        detail,
    }
}

fn criterion_2() -> Outcome {
    let text = r#"
[system]
users = 3
alpha = 4
user_zone_radius = 5
pt_density = 1e-3
pr_density = 1e-3
kappa = 1
rho_b_db = 20
[allocation]
power = [0.5, 0.4, 0.1]
rates = [0.1, 0.1, 0.1]
[quadrature]
n = 40
k = 20
l = 20
[sweep]
rho_s_db = [30, 35, 40, 45]
asymptote_trials = 1000
"#;
    let curve = run_analytic_sweep(&parse_config(text).unwrap()).unwrap();
    let slopes = fit_diversity(&curve, (30.0, 45.0)).unwrap();
    let passed = slopes.iter().enumerate().all(|(i, s)| (s - (i + 1) as f64).abs() <= 0.3);
    let mut detail = Vec::new();
    for rd in [5.0, 10.0] {
        let model = OutageModel::new(&fig1a(rd, 30.0), &converged()).unwrap();
        let p = |db: f64, m| {
            model
                .at_rho_s(Snr::from_db(db))
                .unwrap()
                .outage(m, &fig1a_alloc())
                .unwrap()
                .probability
        };
        let s: Vec<String> = (1..=3)
            .map(|m| format!("{:.3}", (p(30.0, m) / p(45.0, m)).log10() / 1.5))
            .collect();
        detail.push(format!("R_D={rd}: two-point slopes 30-45 dB {}", s.join(", ")));
    }
    Outcome {
        passed,
        summary: format!(
            "fitted slopes over 30-45 dB (R_D=5) {:.3}, {:.3}, {:.3}; target 1, 2, 3 ± 0.3",
            slopes[0], slopes[1], slopes[2]
        ),
        detail,
    }
}

fn criterion_3() -> Outcome {
    let alloc = scenario_two_alloc();
    let mut passed = true;
    let mut detail = Vec::new();
    let mut parts = Vec::new();
    for (label, quad) in [("N=5,K=10,L=10", QuadratureSpec::default()), ("N=40,K=20,L=20", converged())] {
        for m in 1..=2 {
            let p = |db| {
                OutageModel::new(&scenario_two(1e-4, 0.5, 1.0, db), &quad)
                    .unwrap()
                    .outage(m, &alloc)
                    .unwrap()
                    .probability
            };
            let (p40, p50, p60, p80) = (p(40.0), p(50.0), p(60.0), p(80.0));
            let floor = outage_floor_proportional(m, &scenario_two(1e-4, 0.5, 1.0, 40.0), &alloc, &quad).unwrap();
            let rel = |a: f64, b: f64| (a - b).abs() / b;
            let ok = rel(p40, p50) <= 0.05 && rel(p40, floor) <= 0.1 && rel(p50, floor) <= 0.1;
            passed &= ok;
            detail.push(format!(
                "{label} m={m}: 40 dB {p40:.4e}, 50 dB {p50:.4e}, floor {floor:.4e}; 40 vs 50 {:.1}%, 40 vs floor {:.1}%, 50 vs floor {:.1}%",
                100.0 * rel(p40, p50),
                100.0 * rel(p40, floor),
                100.0 * rel(p50, floor)
            ));
            detail.push(format!(
                "{label} m={m}: 60 dB {p60:.4e} ({:.1}% from floor), 80 dB {p80:.4e} ({:.2}%)",
                100.0 * rel(p60, floor),
                100.0 * rel(p80, floor)
            ));
            if label.starts_with("N=40") {
                parts.push(format!("m={m} 40/50 dB differ {:.0}%", 100.0 * rel(p40, p50)));
            }
        }
    }
    detail.push("noise (1/ρ_s) still dominates the PT interference term at 40-50 dB; the floor is reached near 60-70 dB".into());
    Outcome {
        passed,
        summary: format!("error floor at 40 vs 50 dB within 5%: {}", parts.join(", ")),
        detail,
    }
}

fn criterion_4() -> Outcome {
    let p = SystemParams::builder()
        .alpha(4.0)
        .pr_density(1e-3)
        .rho_s_db(20.0)
        .kappa(1.0)
        .build()
        .unwrap();
    let law = gamma_t_pdf_parts(&p);
    let sampler = NetworkSampler::new(&p, DEFAULT_TRUNCATION_TOL, InterferenceField::PerUser).unwrap();
    let n = 100_000u64;
    let draws: Vec<f64> = (0..n)
        .map(|i| sampler.gamma_t(&mut TrialStreams::new(SEED, i).rng(Purpose::PrimaryReceivers)))
        .collect();
    let ks = ks_distance(&draws, |x| law.cdf(x), |x| law.cdf_left(x));
    let frac = draws.iter().filter(|&&x| x == law.rho_s()).count() as f64 / n as f64;
    let se = binomial_stderr(law.atom_weight(), n);
    let mass = integrate(|x| law.density(x), 0.0, law.rho_s(), 1e-15, 1e-13).value + law.atom_weight();
    let empirical_at_50 = draws.iter().filter(|&&x| x <= 50.0).count() as f64 / n as f64;
    let passed = ks <= 0.01 && (frac - law.atom_weight()).abs() <= 3.0 * se && (mass - 1.0).abs() <= 1e-6;
    Outcome {
        passed,
        summary: format!(
            "KS {ks:.2e} <= 0.01; atom {frac:.6} vs {:.6} (3σ = {:.1e}); total mass - 1 = {:.1e}",
            law.atom_weight(),
            3.0 * se,
            mass - 1.0
        ),
        detail: vec![format!(
            "CDF at x=50: closed form {:.6e}, empirical {empirical_at_50:.6e}",
            law.cdf(50.0)
        )],
    }
}

fn criterion_5() -> Outcome {
    let p = SystemParams::builder()
        .alpha(4.0)
        .pt_density(1e-3)
        .guard_zone_radius(2.0)
        .build()
        .unwrap();
    let n = 1_000_000u64;
    let draw = |params: &SystemParams| -> Vec<f64> {
        let sampler = NetworkSampler::new(params, DEFAULT_TRUNCATION_TOL, InterferenceField::PerUser).unwrap();
        (0..n)
            .map(|i| sampler.interference(&mut TrialStreams::new(SEED, i).rng(Purpose::Interference(0))))
            .collect()
    };
    let unbounded = draw(&p);
    let bounded = draw(&p.with_pt_path_loss(PathLoss::Bounded));
    let rule = chebyshev_rule(10).unwrap();
    let mut passed = true;
    let mut parts = Vec::new();
    let mut detail = Vec::new();
    for s in [0.5, 2.0, 8.0] {
        let exact = laplace_ib_exact(s, &p);
        let z = |xs: &[f64]| {
            let v: Vec<f64> = xs.iter().map(|i| (-s * i).exp()).collect();
            let (mean, se) = mean_and_stderr(&v);
            (mean, se, (mean - exact) / se)
        };
        let (mean, se, zu) = z(&unbounded);
        let (_, _, zb) = z(&bounded);
        let gc_err = (laplace_ib_gc(s, &p, &rule) - exact).abs();
        let ok = zu.abs() <= 3.0 && gc_err <= 1e-3;
        passed &= ok;
        parts.push(format!("s={s}: {zu:+.2}σ, GC err {gc_err:.1e}"));
        detail.push(format!(
            "s={s}: closed form {exact:.6}, empirical {mean:.6} ± {se:.1e}; bounded-law field {zb:+.2}σ"
        ));
    }
    Outcome {
        passed,
        summary: format!("1e6 samples, L=10: {}", parts.join("; ")),
        detail,
    }
}

fn criterion_6() -> Outcome {
    let mut detail = Vec::new();
    let grid: Vec<f64> = (0..100).map(|i| 10f64.powf(-3.0 + 5.0 * i as f64 / 99.0)).collect();
    let mut worst5: f64 = 0.0;
    for rd in [5.0, 10.0] {
        let p = fig1a(rd, 0.0);
        let exact: Vec<f64> = grid.iter().map(|&y| unordered_cdf_exact(y, &p)).collect();
        for n in [5, 10, 20, 40] {
            let e = UnorderedExpansion::new(&p, &chebyshev_rule(n).unwrap());
            let err = grid
                .iter()
                .zip(&exact)
                .map(|(&y, x)| (e.cdf(y) - x).abs())
                .fold(0.0, f64::max);
            if n == 5 {
                worst5 = worst5.max(err);
            }
            detail.push(format!("R_D={rd} N={n}: max |GC - integral| {err:.2e}"));
        }
    }
    let mut worst_identity: f64 = 0.0;
    for (users, rd) in [(3, 5.0), (3, 10.0), (5, 10.0)] {
        let p = SystemParams::builder().users(users).user_zone_radius(rd).build().unwrap();
        let e = UnorderedExpansion::new(&p, &chebyshev_rule(5).unwrap());
        for &y in &grid {
            let f = e.cdf(y);
            let mean = (1..=users)
                .map(|m| order_statistic_cdf(f, m, users).unwrap())
                .sum::<f64>()
                / users as f64;
            worst_identity = worst_identity.max((mean - f).abs());
        }
    }
    detail.push(format!("order-statistics identity: max deviation {worst_identity:.1e}"));
    detail.push(
        "the N-point rule carries an O(N^-2) endpoint error from the √(1-φ²) weight; 1e-3 needs N≈20".into(),
    );
    Outcome {
        passed: worst5 <= 1e-3 && worst_identity <= 1e-9,
        summary: format!(
            "N=5 max |GC - integral| {worst5:.2e} (tol 1e-3); identity {worst_identity:.1e} (tol 1e-9)"
        ),
        detail,
    }
}

fn criterion_7() -> Outcome {
    let quad = converged();
    let mut checks: Vec<(String, bool)> = Vec::new();

    let fig1 = |rd, db, m| {
        OutageModel::new(&fig1a(rd, db), &quad)
            .unwrap()
            .outage(m, &fig1a_alloc())
            .unwrap()
            .probability
    };
    let coverage = [10.0, 20.0, 30.0, 40.0]
        .iter()
        .all(|&db| (1..=3).all(|m| fig1(5.0, db, m) < fig1(10.0, db, m)));
    checks.push(("R_D=5 below R_D=10 at 10-40 dB, all users".into(), coverage));

    let alloc = scenario_two_alloc();
    let mut user_two = true;
    for (lambda, kappa) in [(1e-3, 1.0), (1e-4, 1.0), (1e-4, 0.5)] {
        for db in [20.0, 30.0, 40.0, 50.0, 60.0] {
            let model = OutageModel::new(&scenario_two(lambda, kappa, 1.0, db), &quad).unwrap();
            user_two &= model.outage(2, &alloc).unwrap().probability < model.outage(1, &alloc).unwrap().probability;
        }
    }
    checks.push(("user 2 below user 1 in scenario two, 20-60 dB".into(), user_two));

    let floor = |lambda, kappa, nu, m| {
        outage_floor_proportional(m, &scenario_two(lambda, kappa, nu, 40.0), &alloc, &quad).unwrap()
    };
    let density = (1..=2).all(|m| floor(1e-4, 1.0, 1.0, m) < floor(1e-3, 1.0, 1.0, m));
    checks.push(("floor lower for λ=1e-4 than 1e-3".into(), density));
    let nu = (1..=2).all(|m| floor(1e-4, 0.5, 0.1, m) < floor(1e-4, 0.5, 0.5, m) && floor(1e-4, 0.5, 0.5, m) < floor(1e-4, 0.5, 1.0, m));
    checks.push(("floor decreases with ν over 1, 0.5, 0.1".into(), nu));

    let model = OutageModel::new(&scenario_two(1e-3, 1.0, 1.0, 30.0), &quad).unwrap();
    let (n1, o1) = (
        model.outage(1, &alloc).unwrap().probability,
        model.oma_outage(1, &alloc).unwrap().probability,
    );
    let (n2, o2) = (
        model.outage(2, &alloc).unwrap().probability,
        model.oma_outage(2, &alloc).unwrap().probability,
    );
    checks.push((
        format!("30 dB: NOMA/OMA user 1 {n1:.3e}/{o1:.3e}, user 2 {n2:.3e}/{o2:.3e}"),
        n1 < o1 && n2 > o2,
    ));

    let passed = checks.iter().all(|(_, ok)| *ok);
    let held = checks.iter().filter(|(_, ok)| *ok).count();
    Outcome {
        passed,
        summary: format!("{held} of {} orderings hold", checks.len()),
        detail: checks
            .into_iter()
            .map(|(name, ok)| format!("{} {name}", if ok { "ok  " } else { "MISS" }))
            .collect(),
    }
}

fn criterion_8() -> Outcome {
    let p = fig1a(5.0, 30.0);
    let alloc = fig1a_alloc();
    let runs: Vec<_> = [1usize, 4, 8]
        .iter()
        .map(|&w| estimate_outage_with(&p, &alloc, &SimOptions::new(200_000, SEED).workers(w)).unwrap())
        .collect();
    let same = runs.windows(2).all(|w| w[0] == w[1]);
    let bits: Vec<String> = runs[0].per_user_outage.iter().map(|v| format!("{:#018x}", v.to_bits())).collect();
    Outcome {
        passed: same,
        summary: "estimate_outage bit-identical across 1, 4 and 8 workers".into(),
        detail: vec![format!("per-user outage bits {}", bits.join(" "))],
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 analytic outage vs simulation", criterion_1),
        ("2 diversity order", criterion_2),
        ("3 error floor", criterion_3),
        ("4 effective transmit SNR law", criterion_4),
        ("5 interference Laplace transform", criterion_5),
        ("6 quadrature fidelity", criterion_6),
        ("7 qualitative orderings", criterion_7),
        ("8 determinism", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.passed);
        println!("[{tag}] criterion {name}: {} ({:.1?})", outcome.summary, start.elapsed());
        for line in outcome.detail {
            println!("       {line}");
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
