mod common;

use common::dyadic;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropiloc::generate::{random_strip, random_tilted};
use tropiloc::oracle::{grid_feasible, grid_minimize};
use tropiloc::rectilinear::{
    check_strip, rectilinear, rotate, solve_strip, solve_tilted, Direction, StripInstance,
    TiltedStripInstance,
};
use tropiloc::solution::{is_member, sample, verify};
use tropiloc::{Instance, Transform};

const STEP: f64 = 0.05;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn wide(points: Vec<[f64; 2]>, a: f64, b: f64) -> StripInstance {
    let m = points.len();
    StripInstance {
        points,
        weights: vec![1.0; m],
        addends: vec![0.0; m],
        caps: vec![None; m],
        lower: [-100.0, -100.0],
        upper: [100.0, 100.0],
        a,
        b,
    }
}

fn oracle(inst: &Instance, lo: &[f64], hi: &[f64]) -> f64 {
    grid_minimize(inst, lo, hi, STEP).unwrap().best_value.unwrap()
}

#[test]
fn rotation_is_an_isometry() {
    let mut r = rng(1);
    for _ in 0..10_000 {
        let x = [dyadic(&mut r, 50.0), dyadic(&mut r, 50.0)];
        let p = [dyadic(&mut r, 50.0), dyadic(&mut r, 50.0)];
        let (y, o) = (rotate(x, Direction::Forward), rotate(p, Direction::Forward));
        let cheb = (y[0] - o[0]).abs().max((y[1] - o[1]).abs());
        assert_eq!(rectilinear(x, p), cheb);
        assert_eq!(rotate(y, Direction::Inverse), x);
    }
}

#[test]
fn worked_examples_against_oracle() {
    let box2 = ([-6.0, -6.0], [6.0, 6.0]);

    let inst = wide(vec![[0.0, 0.0], [2.0, 2.0]], -100.0, 100.0);
    let best = oracle(&Instance::Strip(inst.clone()), &box2.0, &box2.1);
    assert!((2.0..=2.0 + 2.0 * STEP).contains(&best));
    assert_eq!(solve_strip(&inst).unwrap().theta, 2.0);

    let inst = wide(vec![[0.0, 0.0], [4.0, 0.0]], 0.0, 0.0);
    let res = grid_minimize(&Instance::Strip(inst.clone()), &box2.0, &box2.1, STEP).unwrap();
    assert_eq!(res.best_value, Some(4.0));
    assert_eq!(res.best_points, vec![vec![0.0, 0.0]]);
    let sol = solve_strip(&inst).unwrap();
    assert_eq!(sol.theta, 4.0);
    assert_eq!(sol.transform, Transform::Rotate45);
    for x in sample(&sol, 5, 0).unwrap() {
        assert_eq!(x, vec![0.0, 0.0]);
    }

    let tilted = TiltedStripInstance {
        base: wide(vec![[0.0, 0.0], [0.0, 4.0]], 0.0, 0.0),
        c: 2.0,
    };
    let res = grid_minimize(&Instance::Tilted(tilted.clone()), &box2.0, &box2.1, STEP).unwrap();
    assert!((res.best_value.unwrap() - 3.0).abs() < 1e-9);
    assert!(res.best_points.iter().any(|p| (p[0] - 1.0).abs() < 1e-9 && (p[1] - 2.0).abs() < 1e-9));
    let sol = solve_tilted(&tilted).unwrap();
    assert_eq!(sol.theta, 3.0);
    assert_eq!(sol.member(&sol.u_lo.to_f64()), vec![1.0, 2.0]);
}

#[test]
fn strip_solver_agrees_with_oracle() {
    let mut r = rng(2);
    for case in 0..200 {
        let m = r.random_range(1..=4);
        let strip = random_strip(&mut r, m);
        let sol = solve_strip(&strip).unwrap();
        let inst = Instance::Strip(strip);
        let (lo, hi) = inst.bounding_box();
        let best = oracle(&inst, &lo, &hi);
        let tol = inst.max_weight() * STEP;
        assert!(
            best >= sol.theta - 1e-9 && best <= sol.theta + tol + 1e-9,
            "case {case}: oracle {best}, θ = {}",
            sol.theta
        );
    }
}

#[test]
fn tilted_solver_agrees_with_oracle() {
    let mut r = rng(3);
    for case in 0..200 {
        let m = r.random_range(1..=4);
        let tilted = random_tilted(&mut r, m);
        let sol = solve_tilted(&tilted).unwrap();
        let inst = Instance::Tilted(tilted);
        let (lo, hi) = inst.bounding_box();
        let best = oracle(&inst, &lo, &hi);
        let tol = inst.max_weight() * STEP * 2.0;
        assert!(
            best >= sol.theta - 1e-9 && best <= sol.theta + tol + 1e-9,
            "case {case}: oracle {best}, θ = {}",
            sol.theta
        );
    }
}

#[test]
fn sampled_members_replay_exactly() {
    let mut r = rng(4);
    for _ in 0..300 {
        let m = r.random_range(1..=5);
        let strip = random_strip(&mut r, m);
        let sol = solve_strip(&strip).unwrap();
        let inst = Instance::Strip(strip);
        assert!(verify(&sol, &inst, 10).pass);
        for x in sample(&sol, 5, 1).unwrap() {
            assert!(is_member(&sol, &inst, &x));
        }

        let tilted = random_tilted(&mut r, m);
        let sol = solve_tilted(&tilted).unwrap();
        let c = tilted.c;
        let (a, b) = (tilted.base.a, tilted.base.b);
        let inst = Instance::Tilted(tilted);
        let rep = verify(&sol, &inst, 10);
        assert!(rep.pass, "{rep:?}");
        for x in sample(&sol, 10, 2).unwrap() {
            assert!(a + x[1] - c * x[0] <= 1e-12);
            assert!(c * x[0] - b - x[1] <= 1e-12);
            assert!(is_member(&sol, &inst, &x));
        }
    }
}

#[test]
fn non_binding_band_matches_relaxed_strip() {
    let mut r = rng(5);
    for _ in 0..100 {
        let m = r.random_range(1..=4);
        let mut strip = random_strip(&mut r, m);
        strip.a = -1e4;
        strip.b = 1e4;
        let tilted = TiltedStripInstance {
            base: strip.clone(),
            c: 3.0,
        };
        let a = solve_strip(&strip).unwrap().theta;
        let b = solve_tilted(&tilted).unwrap().theta;
        assert!((a - b).abs() <= 1e-9, "strip {a}, tilted {b}");
    }
}

#[test]
fn rotate_scaled_round_trip() {
    let mut r = rng(6);
    for _ in 0..2_000 {
        let x = vec![dyadic(&mut r, 20.0), dyadic(&mut r, 20.0)];
        for c in [-3.0, -2.0, 0.0, 2.0, 3.0, 0.5] {
            let t = Transform::RotateScaled {
                c1: c - 1.0,
                c2: c + 1.0,
            };
            let back = t.to_original(&t.to_internal(&x));
            assert!((back[0] - x[0]).abs() <= 1e-12 && (back[1] - x[1]).abs() <= 1e-12);
        }
    }
}

#[test]
fn certificates_match_grid_search() {
    let mut r = rng(7);
    for case in 0..100 {
        let m = r.random_range(1..=4);
        let mut strip = random_strip(&mut r, m);
        if case % 2 == 1 {
            // a cap around the first point that misses the strip
            strip.a = strip.points[0][0] + 2.0;
            strip.b = strip.a + 1.0;
            strip.caps[0] = Some(1.0);
        }
        let report = check_strip(&strip).unwrap();
        let inst = Instance::Strip(strip);
        let found = grid_feasible(&inst, &[-10.0, -10.0], &[10.0, 10.0], 0.25).unwrap();
        assert_eq!(report.feasible, found, "case {case}");
        if case % 2 == 1 {
            assert!(!found);
        }
    }
}
