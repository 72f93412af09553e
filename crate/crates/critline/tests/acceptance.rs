//! Acceptance suite: one test per criterion, each printing a single
//! `[criterion NN] PASS/FAIL` line (run with `--nocapture` to see the
//! lines for passing tests).
//!
//! Reference data under `tests/data/` was computed independently at
//! 30-digit precision before this library existed; these tests compare
//! against it, never against the library's own output. The exception
//! is `arg_window_120_140.csv`, a regression lock captured from the
//! first verified run (see `regen_arg_window_fixture`).

use critline::{
    classify_gram, count_n0, count_riemann_von_mangoldt, find_zero, frac_signed, gram_approx,
    gram_exact, hardy_z, lambert_w0, log_gamma, s_arg, s_n_formula, theta, theta_approx,
    theta_approx_inv, verify_arg_conjecture, verify_arg_conjecture_with, verify_membership,
    zeta_half_line, Complex64, ConjectureReport, ScanConfig, Variant, ZeroRecord, ZeroScanner,
};
use critline_cli::export_curves;
use std::f64::consts::PI;
use std::path::PathBuf;

fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Reference zeros: vec[(n, t_n)] with n = 1..=285.
fn load_zeros() -> Vec<(u32, f64)> {
    let text = std::fs::read_to_string(data_path("zeros.csv")).expect("zeros.csv present");
    text.lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(',');
            (it.next().unwrap().parse().unwrap(), it.next().unwrap().parse().unwrap())
        })
        .collect()
}

struct GramRef {
    n: u32,
    exact: f64,
    delta: f64,
    is_bad: bool,
}

fn load_gram() -> Vec<GramRef> {
    let text = std::fs::read_to_string(data_path("gram.csv")).expect("gram.csv present");
    text.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            GramRef {
                n: f[0].parse().unwrap(),
                exact: f[1].parse().unwrap(),
                delta: f[3].parse().unwrap(),
                is_bad: f[4].parse().unwrap(),
            }
        })
        .collect()
}

fn scan_records(n_hi: u32) -> Vec<ZeroRecord> {
    let mut scanner = ZeroScanner::new(ScanConfig::default()).unwrap();
    scanner.zero(n_hi).unwrap();
    scanner.records().to_vec()
}

#[test]
fn c01_gram_gap_constants() {
    let d1 = (gram_exact(1).unwrap() - gram_approx(1)).abs();
    let d2 = (gram_exact(2).unwrap() - gram_approx(2)).abs();
    let (e1, e2) = ((d1 - 0.00223698).abs(), (d2 - 0.00137812).abs());
    assert!(e1 <= 1e-7, "delta_1 = {d1}, off by {e1}");
    assert!(e2 <= 1e-7, "delta_2 = {d2}, off by {e2}");
    println!("[criterion 01] PASS - gap constants 0.00223698 / 0.00137812 matched (err {e1:.1e}, {e2:.1e})");
}

#[test]
fn c02_gap_monotonicity() {
    let mut prev = f64::INFINITY;
    for n in 1..=201u32 {
        let delta = (gram_exact(n).unwrap() - gram_approx(n)).abs();
        assert!(delta < prev, "delta_{n} = {delta} did not decrease (prev {prev})");
        prev = delta;
    }
    println!("[criterion 02] PASS - delta_n strictly decreasing for n in [1, 200]");
}

#[test]
fn c03_gram_defining_property() {
    let mut worst = 0.0f64;
    for n in 1..=500u32 {
        let g = gram_exact(n).unwrap();
        let r = (theta(g) - (n as f64 - 1.0) * PI).abs();
        worst = worst.max(r);
        assert!(r <= 1e-10, "theta(g({n})) residual {r}");
    }
    println!("[criterion 03] PASS - |theta(g(n)) - (n-1)pi| <= 1e-10 for n in [1, 500] (worst {worst:.1e})");
}

#[test]
fn c04_zeta_real_at_gram_points() {
    let mut bad_in_window = Vec::new();
    let mut worst_im = 0.0f64;
    let mut worst_arg = 0.0f64;
    for n in 1..=200u32 {
        let rec = classify_gram(n).unwrap();
        let zeta = zeta_half_line(rec.exact).unwrap().zeta;
        let arg = zeta.arg();
        let arg_dist = arg.abs().min(PI - arg.abs());
        worst_im = worst_im.max(zeta.im.abs());
        worst_arg = worst_arg.max(arg_dist);
        assert!(zeta.im.abs() <= 1e-8, "Im zeta at g({n}) = {}", zeta.im);
        assert!(arg_dist <= 1e-6, "arg zeta at g({n}) = {arg} not near 0 or pi");
        if (120..=140).contains(&n) && rec.is_bad {
            bad_in_window.push(n);
        }
    }
    assert_eq!(bad_in_window.len(), 2, "bad Gram points in [120, 140]: {bad_in_window:?}");
    println!(
        "[criterion 04] PASS - zeta real at g(n), n in [1, 200] (worst Im {worst_im:.1e}, arg dist {worst_arg:.1e}); bad in [120, 140]: {bad_in_window:?}"
    );
}

#[test]
fn c05_zero_oracle_agreement() {
    let oracle = load_zeros();
    let records = scan_records(200);
    let mut worst = 0.0f64;
    for rec in &records {
        let (_, t_ref) = oracle[rec.n as usize - 1];
        let err = (rec.t_n - t_ref).abs();
        worst = worst.max(err);
        assert!(err <= 1e-8, "zero {}: got {}, reference {}", rec.n, rec.t_n, t_ref);
    }
    assert_eq!(records.len(), 200);
    let spot = find_zero(7).unwrap();
    assert!((spot.t_n - oracle[6].1).abs() <= 1e-8);
    println!("[criterion 05] PASS - zeros 1..=200 match the reference table to 1e-8 (worst {worst:.1e})");
}

#[test]
fn c06_exact_equation() {
    let records = scan_records(200);
    let mut worst = 0.0f64;
    for rec in &records {
        let r = rec.exact_residual.abs();
        worst = worst.max(r);
        assert!(r <= 1e-3, "zero {}: |theta + S - (n - 3/2)pi| = {r}", rec.n);
    }
    println!("[criterion 06] PASS - exact-equation residual <= 1e-3 for n in [1, 200] (worst {worst:.1e})");
}

/// Regression lock captured from the first verified run of the window
/// study. Regenerate with:
/// `cargo test -p critline --test acceptance -- --ignored regen_arg_window_fixture`
#[test]
#[ignore]
fn regen_arg_window_fixture() {
    let records = scan_records(140);
    let mut out = String::from("n,t_n,S,prediction,residual,pass\n");
    for rec in records.iter().filter(|r| (120..=140).contains(&r.n)) {
        out.push_str(&format!(
            "{},{:.17e},{:.17e},{:.17e},{:.17e},{}\n",
            rec.n,
            rec.t_n,
            rec.s_at,
            rec.s_n_formula,
            rec.s_at - rec.s_n_formula,
            rec.conjecture2_pass
        ));
    }
    std::fs::write(data_path("arg_window_120_140.csv"), out).unwrap();
}

#[test]
fn c07_argument_formula() {
    // Part 1: the [120, 140] window report is locked against the
    // recorded fixture.
    let fixture = std::fs::read_to_string(data_path("arg_window_120_140.csv"))
        .expect("fixture present; regenerate with regen_arg_window_fixture");
    let records = scan_records(140);
    let mut locked_failures = Vec::new();
    for line in fixture.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let n: u32 = f[0].parse().unwrap();
        let (t_ref, s_ref, pred_ref): (f64, f64, f64) =
            (f[1].parse().unwrap(), f[2].parse().unwrap(), f[3].parse().unwrap());
        let pass_ref: bool = f[5].parse().unwrap();
        let rec = &records[n as usize - 1];
        assert!((rec.t_n - t_ref).abs() <= 1e-8, "window zero {n} moved");
        assert!((rec.s_at - s_ref).abs() <= 1e-6, "S at zero {n} moved");
        assert!((rec.s_n_formula - pred_ref).abs() <= 1e-6, "prediction at zero {n} moved");
        assert_eq!(rec.conjecture2_pass, pass_ref, "pass flag flipped at zero {n}");
        if !pass_ref {
            locked_failures.push((n, rec.s_at - rec.s_n_formula));
        }
    }
    let report = verify_arg_conjecture_with(ScanConfig::default(), 120, 140).unwrap();
    assert_eq!(report.checked - report.passed, locked_failures.len() as u64);
    for (n, residual) in &locked_failures {
        // each failure in the window is a whole-turn (2 pi) miss at a
        // zero adjacent to a bad Gram point, where the floor-corrected
        // index flips by one
        assert!(
            (residual.abs() - 2.0 * PI).abs() <= 1e-6,
            "window failure at {n} is not a whole-turn miss: {residual}"
        );
    }

    // Part 2: n in [1, 100]. Every zero there is outside any bad-Gram
    // neighborhood, so the stated bound applies to all of them; n = 1
    // violates it. At t_1 the formula's value S_1(t_1) equals
    // -S(t_1) - pi for every variant and sign choice, so the best any
    // prediction can do is |2 S(t_1) + pi| = 3.4573..., far above the
    // 1e-3 tolerance. This is a property of the formula itself, not of
    // the implementation; it is reported honestly rather than patched.
    let report = verify_arg_conjecture(1, 100, Variant::AbstractPlus).unwrap();
    let fail_ns: Vec<f64> = report.failures.iter().map(|f| f.at).collect();
    assert_eq!(fail_ns, vec![1.0], "expected only the first zero to violate the bound");
    let first = &report.failures[0];
    assert!((first.residual.abs() - 3.457_340_493_351_675).abs() <= 1e-6);
    println!(
        "[criterion 07] FAIL - argument formula holds for n in [2, 100] (window [120, 140] locked: whole-turn misses at {:?}), but n = 1 misses by |2 S(t_1) + pi| = {:.12} for every variant/sign choice; the criterion's bound of 1e-3 over all of [1, 100] is unattainable",
        locked_failures.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
        first.residual.abs()
    );
    panic!(
        "criterion 7 cannot pass as stated: the closed form misses the first zero by {:.12} (see printed analysis)",
        first.residual.abs()
    );
}

#[test]
fn c08_counting_saturation() {
    let expected = [(50.0, 10usize), (100.0, 29), (200.0, 79), (500.0, 269)];
    let mut scanner = ZeroScanner::new(ScanConfig::default()).unwrap();
    for (t_cap, want) in expected {
        let found = scanner.zeros_up_to(t_cap).unwrap().len();
        let s = s_arg(t_cap).unwrap().value;
        let n0 = count_n0(t_cap, s);
        let nrvm = count_riemann_von_mangoldt(t_cap, s);
        assert_eq!(found, want, "zeros below {t_cap}");
        assert_eq!(n0.round() as usize, want, "count_n0({t_cap}) = {n0}");
        assert_eq!(nrvm.round() as usize, want, "count_rvm({t_cap}) = {nrvm}");
    }
    println!("[criterion 08] PASS - scan count equals round(count_n0(T, S(T))) at T in {{50, 100, 200, 500}} = {{10, 29, 79, 269}}");
}

#[test]
fn c09_membership_distribution() {
    // 901-point grid over [10, 100]; no grid point lands on a zero
    let samples: Vec<f64> = (0..=900).map(|k| 10.0 + 0.1 * k as f64).collect();
    let report = verify_membership(&samples).unwrap();
    assert_eq!(report.checked, 901);
    assert_eq!(report.passed, 901, "every sample within tolerance of {{-1, 0, 1}}");
    let hist = report.histogram.as_ref().expect("membership report carries the histogram");
    assert_eq!(hist.counts.iter().sum::<u64>(), 901);

    // schema validity: a JSON round-trip reproduces the report
    let json = serde_json::to_string(&report).unwrap();
    let back: ConjectureReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);

    // good Gram points in [10, 100] sit exactly on an integer value
    let gram = load_gram();
    let gram_pts: Vec<f64> =
        gram.iter().filter(|g| !g.is_bad && g.exact <= 100.0).map(|g| g.exact).collect();
    assert_eq!(gram_pts.len(), 29);
    let gram_report = verify_membership(&gram_pts).unwrap();
    assert!(
        gram_report.max_abs_residual <= 1e-8,
        "distance at a good Gram point: {}",
        gram_report.max_abs_residual
    );
    println!(
        "[criterion 09] PASS - membership report over [10, 100] complete and schema-valid (max distance {:.1e}); good Gram points exact to {:.1e}",
        report.max_abs_residual, gram_report.max_abs_residual
    );
}

#[test]
fn c10_invariant_grids() {
    // Lambert-W round-trip on a log grid
    for k in 0..=36 {
        let x = 10f64.powf(-6.0 + 0.5 * k as f64);
        let w = lambert_w0(x).unwrap();
        assert!((w * w.exp() - x).abs() <= 1e-12 * x.max(1.0));
    }
    // log-Gamma recurrence and conjugation
    for k in 0..40 {
        let z = Complex64::new(0.25 + 0.04 * k as f64, 2.5 * k as f64 + 0.3);
        let lhs = log_gamma(z + 1.0).unwrap();
        let rhs = log_gamma(z).unwrap() + z.ln();
        assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0));
        let conj = log_gamma(z.conj()).unwrap();
        assert!((conj - log_gamma(z).unwrap().conj()).norm() <= 1e-12 * conj.norm().max(1.0));
    }
    // theta-tilde inverse round-trip
    for k in 0..=50 {
        let t = 20.0 * 1.25f64.powi(k);
        let back = theta_approx_inv(theta_approx(t)).unwrap();
        assert!((back - t).abs() <= 1e-9 * t);
    }
    // rotation identity: |Z| recovers |zeta|
    for k in 0..=100 {
        let t = 1.0 + 4.99 * k as f64;
        let p = zeta_half_line(t).unwrap();
        assert!((p.z.abs() - p.zeta.norm()).abs() <= 1e-8 * p.zeta.norm().max(1.0));
        assert_eq!(p.z, hardy_z(t).unwrap());
    }
    // variant whole-turn identity and frac oddness
    for k in 0..60 {
        let t = 12.0 + 16.0 * k as f64;
        let n = (k % 13) as i64 - 2;
        let line2 = s_n_formula(n, t, Variant::DefLine2);
        let line3 = s_n_formula(n, t, Variant::DefLine3);
        assert!((line2 - (line3 - 2.0 * PI)).abs() <= 1e-9 * line3.abs().max(1.0));
        assert_eq!(frac_signed(-t / PI), -frac_signed(t / PI));
    }
    println!("[criterion 10] PASS - invariant grids: W round-trip, log-Gamma recurrence/conjugacy, inverse round-trip, rotation, variant offset");
}

#[test]
fn c11_figure_reproduction() {
    let oracle = load_zeros();

    // first-figure ranges: curves n = 0..=14 over [10, 65]
    let fig1 = export_curves(0, 14, 10.0, 65.0, 0.05, Variant::AbstractPlus, 1e4).unwrap();
    let want1: Vec<&(u32, f64)> =
        oracle.iter().filter(|(_, t)| (10.0..=65.0).contains(t)).collect();
    assert_eq!(fig1.zeros.len(), want1.len());
    for (got, (n_ref, t_ref)) in fig1.zeros.iter().zip(&want1) {
        assert_eq!(got.n, *n_ref as i64);
        assert!((got.t - t_ref).abs() <= 1e-8, "figure-1 abscissa {}", n_ref);
    }
    assert_eq!(fig1.samples.len(), 15 * 1100);

    // second-figure ranges: curves n = 120..=140 around those zeros
    let t_lo = oracle[119].1 - 1.0;
    let t_hi = oracle[139].1 + 1.0;
    let fig2 = export_curves(120, 140, t_lo, t_hi, 0.1, Variant::AbstractPlus, 1e4).unwrap();
    let idx: Vec<i64> = fig2.zeros.iter().map(|z| z.n).collect();
    assert_eq!(idx, (120..=140).collect::<Vec<i64>>());
    for z in &fig2.zeros {
        let t_ref = oracle[z.n as usize - 1].1;
        assert!((z.t - t_ref).abs() <= 1e-8, "figure-2 abscissa {}", z.n);
    }
    // the exported abscissae are find_zero outputs
    let spot = find_zero(125).unwrap();
    let from_export = fig2.zeros.iter().find(|z| z.n == 125).unwrap();
    assert!((spot.t_n - from_export.t).abs() <= 1e-12);
    println!(
        "[criterion 11] PASS - figure exports reproduce zero abscissae to 1e-8 ({} + {} vertical lines)",
        fig1.zeros.len(),
        fig2.zeros.len()
    );
}
