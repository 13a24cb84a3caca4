//! Memory-recurrence oracles for pulse distortion, pre-distortion and the
//! buffer-time spectroscopy diagnostic.

use approx::assert_relative_eq;
use device_model::{
    buffer_time_spectroscopy, distort_pulse_train, predistort_pulse_train, ExchangeCalibration,
    FilterParams, PulseTiming,
};
use spin_core::{T_B, T_P};

const TIMING: PulseTiming = PulseTiming { t_p: 10.92e-9, t_b: 10.92e-9 };

fn two_component_filter() -> FilterParams {
    FilterParams::new(vec![8e-9, 50e-9], vec![0.05, 0.02]).unwrap()
}

#[test]
fn single_pulse_tail_matches_frozen_recurrence() {
    let f = two_component_filter();
    let mut train = vec![60.0];
    train.extend(std::iter::repeat(0.0).take(5));
    let eff = distort_pulse_train(&train, TIMING, &f);
    let expect = [
        60.0,
        0.970978635345,
        0.513695909500,
        0.324486821587,
        0.209167708996,
        0.135111861161,
    ];
    for (e, x) in eff.iter().zip(expect) {
        assert_relative_eq!(e, &x, max_relative = 1e-10);
    }
}

#[test]
fn tail_decays_geometrically_per_component() {
    // With one component the tail after a lone pulse is c*a*d^m exactly.
    let f = FilterParams::new(vec![30e-9], vec![0.04]).unwrap();
    let d = (-TIMING.slot_spacing() / 30e-9).exp();
    let mut train = vec![25.0];
    train.extend(std::iter::repeat(0.0).take(4));
    let eff = distort_pulse_train(&train, TIMING, &f);
    for m in 1..5 {
        assert_relative_eq!(eff[m], 0.04 * 25.0 * d.powi(m as i32), max_relative = 1e-12);
    }
}

#[test]
fn predistortion_round_trips_within_budget() {
    let f = FilterParams::standard();
    let targets: Vec<f64> = (0..200)
        .map(|i| 40.0 + 30.0 * ((i as f64) * 0.7).sin())
        .collect();
    let corrected = predistort_pulse_train(&targets, TIMING, &f).unwrap();
    let eff = distort_pulse_train(&corrected, TIMING, &f);
    for (e, t) in eff.iter().zip(&targets) {
        assert!((e - t).abs() <= 1e-3 * t.abs().max(1.0), "{e} vs {t}");
    }
}

#[test]
fn predistortion_round_trips_on_ten_thousand_pulses() {
    let f = FilterParams::standard();
    let targets: Vec<f64> = (0..10_000)
        .map(|i| 55.0 + 35.0 * ((i as f64) * 1.3).cos())
        .collect();
    let corrected = predistort_pulse_train(&targets, TIMING, &f).unwrap();
    let eff = distort_pulse_train(&corrected, TIMING, &f);
    let worst = eff
        .iter()
        .zip(&targets)
        .map(|(e, t)| (e - t).abs() / t.abs().max(1.0))
        .fold(0.0_f64, f64::max);
    assert!(worst < 1e-3, "worst relative error {worst}");
}

#[test]
fn spectroscopy_approaches_ideal_as_buffers_grow() {
    // Excess rotation from pulse overlap must shrink monotonically with t_b;
    // small per-pulse angles keep the 12-pulse total inside one sin^2 branch.
    let cal = ExchangeCalibration::standard(8).unwrap();
    let f = FilterParams::standard();
    let angles: Vec<f64> = (1..=7).map(|i| i as f64 * 0.05).collect();
    let buffers = [2e-9, 7.28e-9, T_B, 40e-9, 200e-9, 2000e-9];
    let maps = buffer_time_spectroscopy(&cal, &f, 12, &angles, &buffers, T_P, false).unwrap();
    let ideal: Vec<f64> = angles.iter().map(|a| (6.0 * a).sin().powi(2)).collect();
    let dev: Vec<f64> = maps
        .iter()
        .map(|row| {
            row.iter()
                .zip(&ideal)
                .map(|(p, q)| (p - q).abs())
                .fold(0.0_f64, f64::max)
        })
        .collect();
    for w in dev.windows(2) {
        assert!(w[1] <= w[0] + 1e-12, "deviations {dev:?} not monotone");
    }
    assert!(dev[0] > 1e-3, "short buffers should distort the train");
    let last = *dev.last().unwrap();
    assert!(last < 1e-3 && last < dev[0] / 50.0, "long buffers near-ideal: {dev:?}");
}

#[test]
fn spectroscopy_is_flat_after_predistortion() {
    let cal = ExchangeCalibration::standard(8).unwrap();
    let f = FilterParams::standard();
    let angles: Vec<f64> = (1..=24).map(|i| i as f64 * 0.25).collect();
    let buffers = [7.28e-9, T_B, 40e-9];
    let maps = buffer_time_spectroscopy(&cal, &f, 12, &angles, &buffers, T_P, true).unwrap();
    let ideal: Vec<f64> = angles.iter().map(|a| (6.0 * a).sin().powi(2)).collect();
    for row in &maps {
        for (p, q) in row.iter().zip(&ideal) {
            assert!((p - q).abs() < 1e-6, "predistorted train not flat: {p} vs {q}");
        }
    }
}
