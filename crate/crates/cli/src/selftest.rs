//! Invariant suites run by `relspin selftest`. Each suite scans a grid of
//! speeds and reports its worst observation and where it occurred.

use std::fmt;

use relspin::boosted::{
    boost, closed_form_velocity_matrix, cnot_limit_fidelity, initial_state, mode_embedding,
    spin_density_matrix, velocity_density_matrix,
};
use relspin::measures::{
    bell_closed_form, entanglement_of_formation, relative_entropy_closed_form,
};
use relspin::quantum::von_neumann_entropy;
use relspin::{analyze, wigner_angle, Velocity};

use crate::sweep::{axis, render, run_sweep, Execution, Format, SweepConfig, CSV_HEADER};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Check {
    /// Worst deviation must not exceed the tolerance.
    MaxError(f64),
    /// Smallest margin must be strictly positive.
    MinMargin,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub resolution: String,
    pub check: Check,
    pub value: f64,
    pub worst_input: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        match self.check {
            Check::MaxError(tol) => self.value <= tol,
            Check::MinMargin => self.value > 0.0,
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        match self.check {
            Check::MaxError(tol) => write!(
                f,
                "{status} {:<34} max error {:.3e} (tol {:.0e}) over {}",
                self.name, self.value, tol, self.resolution
            )?,
            Check::MinMargin => write!(
                f,
                "{status} {:<34} min margin {:.3e} (must be > 0) over {}",
                self.name, self.value, self.resolution
            )?,
        }
        write!(f, "; worst at {}", self.worst_input)
    }
}

type Point = (f64, f64);

fn grid(n: usize, max: f64) -> Vec<Point> {
    let ax = axis(0.0, max, n);
    ax.iter()
        .flat_map(|&a| ax.iter().map(move |&b| (a, b)))
        .collect()
}

fn vel(b: f64) -> Velocity {
    Velocity::new(b).expect("grid speeds lie in [0, 1]")
}

/// Worst (largest) error over `points`; evaluation failures count as infinite.
fn scan_max<F>(
    name: &'static str,
    resolution: String,
    tol: f64,
    points: &[Point],
    f: F,
) -> SuiteReport
where
    F: Fn(Velocity, Velocity) -> relspin::Result<f64>,
{
    let mut value = 0.0f64;
    let mut worst = "-".to_string();
    for &(a, b) in points {
        let err = f(vel(a), vel(b)).unwrap_or(f64::INFINITY);
        if err > value || err.is_nan() {
            value = if err.is_nan() { f64::INFINITY } else { err };
            worst = format!("v1={a}, v2={b}");
        }
    }
    SuiteReport {
        name,
        resolution,
        check: Check::MaxError(tol),
        value,
        worst_input: worst,
    }
}

/// Smallest margin over `points`; failures count as negative infinity.
fn scan_min<F>(name: &'static str, resolution: String, points: &[Point], f: F) -> SuiteReport
where
    F: Fn(Velocity, Velocity) -> relspin::Result<f64>,
{
    let mut value = f64::INFINITY;
    let mut worst = "-".to_string();
    for &(a, b) in points {
        let m = f(vel(a), vel(b)).unwrap_or(f64::NEG_INFINITY);
        if m < value || m.is_nan() {
            value = if m.is_nan() { f64::NEG_INFINITY } else { m };
            worst = format!("v1={a}, v2={b}");
        }
    }
    SuiteReport {
        name,
        resolution,
        check: Check::MinMargin,
        value,
        worst_input: worst,
    }
}

/// Largest increase between neighbours along either axis of an `n x n`
/// row-major surface.
fn max_increase(values: &[f64], n: usize, points: &[Point]) -> (f64, String) {
    let mut worst = (0.0f64, "-".to_string());
    for i in 0..n {
        for j in 1..n {
            for (prev, next) in [(i * n + j - 1, i * n + j), ((j - 1) * n + i, j * n + i)] {
                let rise = values[next] - values[prev];
                if rise > worst.0 {
                    worst = (
                        rise,
                        format!("v1={}, v2={}", points[next].0, points[next].1),
                    );
                }
            }
        }
    }
    worst
}

pub fn kinematics_suites() -> Vec<SuiteReport> {
    let g100 = grid(100, 0.999);
    let g101 = grid(101, 1.0);
    let res100 = "100x100 grid on [0, 0.999]^2".to_string();
    let res101 = "101x101 grid on [0, 1]^2".to_string();

    let identity = scan_max(
        "kinematics/trig-identity",
        res100.clone(),
        1e-12,
        &g100,
        |a, b| {
            let w = wigner_angle(a, b);
            Ok((1.0 - 2.0 * w.sin_sq_omega - w.cos_two_omega).abs())
        },
    );
    let symmetry = scan_max("kinematics/symmetry", res101.clone(), 0.0, &g101, |a, b| {
        let (x, y) = (wigner_angle(a, b), wigner_angle(b, a));
        Ok((x.cos_two_omega - y.cos_two_omega)
            .abs()
            .max((x.sin_omega - y.sin_omega).abs()))
    });
    let bounds = scan_max("kinematics/bounds", res101.clone(), 0.0, &g101, |a, b| {
        let w = wigner_angle(a, b);
        let c = w.cos_two_omega;
        let s = w.sin_omega;
        Ok([-c, c - 1.0, -s, s - std::f64::consts::FRAC_1_SQRT_2]
            .into_iter()
            .fold(0.0, f64::max))
    });
    let cos: Vec<f64> = g101
        .iter()
        .map(|&(a, b)| wigner_angle(vel(a), vel(b)).cos_two_omega)
        .collect();
    let (rise, at) = max_increase(&cos, 101, &g101);
    let monotone = SuiteReport {
        name: "kinematics/monotonicity",
        resolution: res101,
        check: Check::MaxError(0.0),
        value: rise,
        worst_input: at,
    };
    vec![identity, symmetry, bounds, monotone]
}

pub fn state_suites() -> Vec<SuiteReport> {
    let g50 = grid(50, 1.0);
    let res = "50x50 grid on [0, 1]^2".to_string();
    let boosted = |a, b| boost(&initial_state(a), b);

    vec![
        scan_max("state/boost-norm", res.clone(), 1e-12, &g50, |a, b| {
            Ok((boosted(a, b)?.state().norm() - 1.0).abs())
        }),
        scan_max(
            "state/partial-trace-closed-form",
            res.clone(),
            1e-12,
            &g50,
            |a, b| {
                let rho = velocity_density_matrix(&boosted(a, b)?);
                let c = wigner_angle(a, b).cos_two_omega;
                Ok(rho.matrix().max_abs_diff(&closed_form_velocity_matrix(c)))
            },
        ),
        scan_max(
            "state/eigenvalue-identity",
            res.clone(),
            1e-12,
            &g50,
            |a, b| {
                let ev = velocity_density_matrix(&boosted(a, b)?).eigenvalues()?;
                let c = wigner_angle(a, b).cos_two_omega;
                Ok((ev[0] - 0.5 * (1.0 - c))
                    .abs()
                    .max((ev[1] - 0.5 * (1.0 + c)).abs()))
            },
        ),
        scan_max(
            "state/schmidt-symmetry",
            res.clone(),
            1e-10,
            &g50,
            |a, b| {
                let s = boosted(a, b)?;
                let sv = von_neumann_entropy(&velocity_density_matrix(&s))?;
                let ss = von_neumann_entropy(&spin_density_matrix(&s))?;
                Ok((sv - ss).abs())
            },
        ),
        scan_max("state/mode-entropy-conserved", res, 1e-10, &g50, |a, b| {
            let m = mode_embedding(&boosted(a, b)?);
            let e0 = (m.mode_entropy(0)? - 1.0).abs();
            let e1 = (m.mode_entropy(1)? - 1.0).abs();
            Ok(e0.max(e1).max(m.leakage()))
        }),
    ]
}

pub fn measure_suites() -> Vec<SuiteReport> {
    let g50 = grid(50, 1.0);
    let res50 = "50x50 grid on [0, 1]^2".to_string();
    let g101 = grid(101, 1.0);
    let below_light = grid(101, 0.999);

    let mut reports = vec![
        scan_max(
            "measures/bell-closed-form",
            res50.clone(),
            1e-10,
            &g50,
            |a, b| {
                let r = analyze(a, b)?;
                Ok((r.bell_b - bell_closed_form(r.cos_two_omega)).abs())
            },
        ),
        scan_max(
            "measures/relative-entropy-form",
            res50.clone(),
            1e-12,
            &g50,
            |a, b| {
                let r = analyze(a, b)?;
                Ok(
                    (r.entanglement_e - relative_entropy_closed_form(r.cos_two_omega))
                        .abs()
                        .max((r.entanglement_e + r.entropy_s - 1.0).abs()),
                )
            },
        ),
        scan_max(
            "measures/entropy-bookkeeping",
            res50,
            1e-10,
            &g50,
            |a, b| {
                let r = analyze(a, b)?;
                Ok((r.entanglement_e + entanglement_of_formation(r.concurrence_c) - 1.0).abs())
            },
        ),
        scan_min(
            "measures/entanglement-positive",
            "101x101 grid on [0, 0.999]^2".into(),
            &below_light,
            |a, b| Ok(analyze(a, b)?.entanglement_e),
        ),
        scan_min(
            "measures/bell-violation",
            "101x101 grid on [0, 0.999]^2".into(),
            &below_light,
            |a, b| Ok(analyze(a, b)?.bell_b - 2.0),
        ),
    ];

    let records: Vec<_> = g101
        .iter()
        .map(|&(a, b)| analyze(vel(a), vel(b)))
        .collect::<relspin::Result<_>>()
        .unwrap_or_default();
    let (value, worst_input) = if records.len() == g101.len() {
        let e: Vec<f64> = records.iter().map(|r| r.entanglement_e).collect();
        let b: Vec<f64> = records.iter().map(|r| r.bell_b).collect();
        let (re, ae) = max_increase(&e, 101, &g101);
        let (rb, ab) = max_increase(&b, 101, &g101);
        if re >= rb {
            (re, ae)
        } else {
            (rb, ab)
        }
    } else {
        (f64::INFINITY, "analysis failed".into())
    };
    reports.push(SuiteReport {
        name: "measures/monotonicity",
        resolution: "101x101 grid on [0, 1]^2".into(),
        check: Check::MaxError(0.0),
        value,
        worst_input,
    });

    let limit = analyze(Velocity::LIGHT, Velocity::LIGHT);
    let (value, worst_input) = match limit {
        Ok(r) => {
            let err = [
                r.cos_two_omega,
                r.entanglement_e,
                r.bell_b - 2.0,
                r.concurrence_c - 1.0,
            ]
            .into_iter()
            .map(f64::abs)
            .fold(0.0, f64::max);
            (err, "v1=1, v2=1".to_string())
        }
        Err(e) => (f64::INFINITY, e.to_string()),
    };
    reports.push(SuiteReport {
        name: "measures/light-speed-limit",
        resolution: "analytic limit".into(),
        check: Check::MaxError(0.0),
        value,
        worst_input,
    });
    reports
}

pub fn cnot_suite() -> SuiteReport {
    let ts = axis(0.0, 1.0, 101);
    let mut value = 0.0f64;
    let mut worst = "-".to_string();
    let mut prev = f64::NEG_INFINITY;
    for &t in &ts {
        let f = cnot_limit_fidelity(vel(t), vel(t)).unwrap_or(f64::NAN);
        let mut err = (prev - f).max(0.0);
        if t == 0.0 {
            err = err.max((f - 0.5).abs());
        }
        if t == 1.0 {
            err = err.max((f - 1.0).abs());
        }
        if err > value || f.is_nan() {
            value = if f.is_nan() { f64::INFINITY } else { err };
            worst = format!("t={t}");
        }
        prev = f;
    }
    SuiteReport {
        name: "cnot/limit-fidelity",
        resolution: "101 points on v1 = v2 = t".into(),
        check: Check::MaxError(1e-12),
        value,
        worst_input: worst,
    }
}

pub fn sweep_suites() -> Vec<SuiteReport> {
    let small = SweepConfig {
        grid_n: 21,
        ..SweepConfig::default()
    };
    let outputs: Vec<Option<String>> =
        [Execution::Serial, Execution::Parallel, Execution::Parallel]
            .into_iter()
            .map(|ex| {
                run_sweep(&small, ex)
                    .ok()
                    .and_then(|rows| render(&rows, Format::Csv, small.precision).ok())
            })
            .collect();
    let identical = outputs[0].is_some() && outputs.iter().all(|o| *o == outputs[0]);
    let determinism = SuiteReport {
        name: "sweep/determinism",
        resolution: "21x21 grid, serial vs parallel x2".into(),
        check: Check::MaxError(0.0),
        value: if identical { 0.0 } else { 1.0 },
        worst_input: if identical {
            "-".into()
        } else {
            "outputs differ".into()
        },
    };

    let config = SweepConfig::default();
    let tol = 10f64.powi(1 - config.precision as i32);
    let (value, worst_input) = match run_sweep(&config, Execution::Parallel)
        .and_then(|rows| render(&rows, Format::Csv, config.precision))
    {
        Ok(text) => csv_recompute_error(&text),
        Err(e) => (f64::INFINITY, e.to_string()),
    };
    let roundtrip = SuiteReport {
        name: "sweep/csv-roundtrip",
        resolution: "101x101 grid, precision 12".into(),
        check: Check::MaxError(tol),
        value,
        worst_input,
    };
    vec![determinism, roundtrip]
}

/// Recomputes E from the printed cos2w column and compares with the printed E.
pub fn csv_recompute_error(text: &str) -> (f64, String) {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header_ok = reader
        .headers()
        .map(|h| h.iter().eq(CSV_HEADER.iter().copied()))
        .unwrap_or(false);
    if !header_ok {
        return (f64::INFINITY, "bad header".into());
    }
    let mut worst = (0.0f64, "-".to_string());
    for record in reader.records() {
        let Ok(record) = record else {
            return (f64::INFINITY, "unreadable row".into());
        };
        let field = |i: usize| record[i].parse::<f64>().unwrap_or(f64::NAN);
        let err = (relative_entropy_closed_form(field(3)) - field(5)).abs();
        if err > worst.0 || err.is_nan() {
            worst = (
                if err.is_nan() { f64::INFINITY } else { err },
                format!("v1={}, v2={}", &record[0], &record[1]),
            );
        }
    }
    worst
}

pub fn run_all() -> Vec<SuiteReport> {
    let mut reports = kinematics_suites();
    reports.extend(state_suites());
    reports.extend(measure_suites());
    reports.push(cnot_suite());
    reports.extend(sweep_suites());
    reports
}
